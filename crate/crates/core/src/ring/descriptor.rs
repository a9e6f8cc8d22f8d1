use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BackendTag {
    #[serde(rename = "finite-field-quadratic", alias = "ff")]
    FiniteFieldQuadratic,
    #[serde(rename = "truncated-series-quadratic", alias = "series")]
    TruncatedSeriesQuadratic,
    #[serde(rename = "rational-quadratic", alias = "rational")]
    RationalQuadratic,
}

impl BackendTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            BackendTag::FiniteFieldQuadratic => "finite-field-quadratic",
            BackendTag::TruncatedSeriesQuadratic => "truncated-series-quadratic",
            BackendTag::RationalQuadratic => "rational-quadratic",
        }
    }
}

impl fmt::Display for BackendTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BackendTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ff" | "finite-field-quadratic" => Ok(BackendTag::FiniteFieldQuadratic),
            "series" | "truncated-series-quadratic" => Ok(BackendTag::TruncatedSeriesQuadratic),
            "rational" | "rational-quadratic" => Ok(BackendTag::RationalQuadratic),
            other => Err(Error::InvalidDescriptor(format!("unknown backend '{other}'"))),
        }
    }
}

/// Serializable description of a backend: `{"backend", "p", "d", "N"}`.
///
/// `p` and `d` are absent for the rational backend; `N` is present only for
/// the series backend.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Descriptor {
    pub backend: BackendTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<u64>,
    #[serde(rename = "N", default, skip_serializing_if = "Option::is_none")]
    pub precision: Option<usize>,
}

impl Descriptor {
    pub fn finite_field(p: u64, d: u64) -> Self {
        Descriptor {
            backend: BackendTag::FiniteFieldQuadratic,
            p: Some(p),
            d: Some(d),
            precision: None,
        }
    }

    pub fn series(p: u64, d: u64, precision: usize) -> Self {
        Descriptor {
            backend: BackendTag::TruncatedSeriesQuadratic,
            p: Some(p),
            d: Some(d),
            precision: Some(precision),
        }
    }

    pub fn rational() -> Self {
        Descriptor {
            backend: BackendTag::RationalQuadratic,
            p: None,
            d: None,
            precision: None,
        }
    }
}
