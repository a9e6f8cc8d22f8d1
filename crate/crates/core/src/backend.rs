//! Runtime selection of a concrete ring from a [`Descriptor`].

use crate::error::{Error, Result};
use crate::ring::{BackendTag, Descriptor, GaussianRationals, QuadraticFiniteField, TruncatedSeries};

#[derive(Debug, Clone)]
pub enum AnyRing {
    FiniteField(QuadraticFiniteField),
    Series(TruncatedSeries),
    Rational(GaussianRationals),
}

impl AnyRing {
    pub fn from_descriptor(desc: &Descriptor) -> Result<Self> {
        let need = |field: Option<u64>, name: &str| {
            field.ok_or_else(|| Error::InvalidDescriptor(format!("backend {} requires '{name}'", desc.backend)))
        };
        match desc.backend {
            BackendTag::FiniteFieldQuadratic => {
                if desc.precision.is_some() {
                    return Err(Error::InvalidDescriptor(
                        "'N' only applies to the series backend".into(),
                    ));
                }
                Ok(AnyRing::FiniteField(QuadraticFiniteField::new(
                    need(desc.p, "p")?,
                    need(desc.d, "d")?,
                )?))
            }
            BackendTag::TruncatedSeriesQuadratic => Ok(AnyRing::Series(TruncatedSeries::new(
                need(desc.p, "p")?,
                need(desc.d, "d")?,
                need(desc.precision.map(|n| n as u64), "N")? as usize,
            )?)),
            BackendTag::RationalQuadratic => {
                if desc.p.is_some() || desc.d.is_some() || desc.precision.is_some() {
                    return Err(Error::InvalidDescriptor(
                        "the rational backend takes no p, d or N".into(),
                    ));
                }
                Ok(AnyRing::Rational(GaussianRationals))
            }
        }
    }
}

/// Runs `$body` with `$ring` bound to the concrete ring inside an [`AnyRing`].
#[macro_export]
macro_rules! with_ring {
    ($any:expr, |$ring:ident| $body:expr) => {
        match $any {
            $crate::backend::AnyRing::FiniteField($ring) => $body,
            $crate::backend::AnyRing::Series($ring) => $body,
            $crate::backend::AnyRing::Rational($ring) => $body,
        }
    };
}
