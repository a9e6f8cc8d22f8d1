use std::path::Path;

use kostant_core::backend::AnyRing;
use kostant_core::harness::{self, CampaignKind, SampleConfig};
use kostant_core::ring::{BackendTag, Descriptor};
use kostant_core::{matrix, section, with_ring, Error, InvolutiveRing};
use serde_json::{json, Value};

use crate::args::{Cli, Command, RingArgs, DESCRIPTOR_ENV};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

pub struct Outcome {
    pub output: Value,
    pub passed: bool,
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Build { ring, n, a, alpha } => {
            let any = AnyRing::from_descriptor(&descriptor(&ring)?)?;
            with_ring!(&any, |r| cmd_build(r, n, &a, alpha.as_deref()))
        }
        Command::Verify { ring, matrix } => {
            let any = AnyRing::from_descriptor(&descriptor(&ring)?)?;
            with_ring!(&any, |r| cmd_verify(r, &matrix))
        }
        Command::Sample { ring, n, count, seed } => {
            let any = AnyRing::from_descriptor(&descriptor(&ring)?)?;
            with_ring!(&any, |r| cmd_sample(r, n, count, seed))
        }
        Command::Campaign {
            ring,
            campaign,
            n,
            count,
            seed,
        } => {
            let kind: CampaignKind = campaign.parse().map_err(|e: Error| CliError::Usage(e.to_string()))?;
            let any = AnyRing::from_descriptor(&descriptor(&ring)?)?;
            with_ring!(&any, |r| cmd_campaign(r, kind, n, count, seed))
        }
        Command::Oracle { n } => cmd_oracle(n),
        Command::Exists { n, residue_char } => cmd_exists(n, residue_char),
    }
}

fn descriptor(args: &RingArgs) -> Result<Descriptor, CliError> {
    let Some(tag) = &args.backend else {
        let raw = std::env::var(DESCRIPTOR_ENV)
            .map_err(|_| CliError::Usage(format!("--backend is required (or set {DESCRIPTOR_ENV})")))?;
        return serde_json::from_str(&raw).map_err(|e| CliError::Usage(format!("{DESCRIPTOR_ENV}: {e}")));
    };
    let backend: BackendTag = tag.parse().map_err(|e: Error| CliError::Usage(e.to_string()))?;
    let require = |v: Option<u64>, flag: &str| {
        v.ok_or_else(|| CliError::Usage(format!("--{flag} is required for backend {backend}")))
    };
    let desc = match backend {
        BackendTag::FiniteFieldQuadratic => Descriptor::finite_field(require(args.p, "p")?, require(args.d, "d")?),
        BackendTag::TruncatedSeriesQuadratic => Descriptor::series(
            require(args.p, "p")?,
            require(args.d, "d")?,
            require(args.precision.map(|v| v as u64), "N")? as usize,
        ),
        BackendTag::RationalQuadratic => Descriptor::rational(),
    };
    let extra = match backend {
        BackendTag::FiniteFieldQuadratic => args.precision.is_some(),
        BackendTag::TruncatedSeriesQuadratic => false,
        BackendTag::RationalQuadratic => args.p.is_some() || args.d.is_some() || args.precision.is_some(),
    };
    if extra {
        return Err(CliError::Usage(format!(
            "flags given that backend {backend} does not take"
        )));
    }
    Ok(desc)
}

/// Parses `arg` as inline JSON, falling back to reading it as a file path.
fn json_arg(arg: &str) -> Result<Value, CliError> {
    if let Ok(v) = serde_json::from_str(arg) {
        return Ok(v);
    }
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{arg}: {e}")))?;
        return serde_json::from_str(&text).map_err(|e| CliError::Domain(Error::Parse(format!("{arg}: {e}"))));
    }
    Err(CliError::Domain(Error::Parse(format!(
        "'{arg}' is neither JSON nor a readable file"
    ))))
}

fn cmd_build<R: InvolutiveRing>(ring: &R, n: Option<usize>, a: &str, alpha: Option<&str>) -> Result<Outcome, CliError> {
    let tuple = section::tuple_from_json(ring, &json_arg(a)?)?;
    if let Some(n) = n {
        if n != tuple.n() {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: tuple.n(),
            }
            .into());
        }
    }
    let result = match alpha {
        Some(lit) => {
            let alpha = ring.decode(&json_arg(lit)?)?;
            section::build_x(ring, &tuple, &alpha)?
        }
        None => section::build_section(ring, &tuple)?,
    };
    Ok(Outcome {
        passed: result.report.all_passed(),
        output: section::section_to_json(ring, &result),
    })
}

fn cmd_verify<R: InvolutiveRing>(ring: &R, m: &str) -> Result<Outcome, CliError> {
    let m = matrix::from_json(ring, &json_arg(m)?)?;
    let report = matrix::in_unitary_lie_algebra(ring, &m);
    let mut output = json!({ "n": m.n() });
    if let (Value::Object(out), Value::Object(rep)) = (&mut output, matrix::membership_to_json(ring, &report)) {
        out.extend(rep);
    }
    Ok(Outcome {
        passed: report.passed,
        output,
    })
}

fn cmd_sample<R: InvolutiveRing>(ring: &R, n: usize, count: usize, seed: u64) -> Result<Outcome, CliError> {
    if n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    let samples: Vec<Value> = harness::sample_u_n(ring, n, count, seed)
        .map(|m| matrix::to_json(ring, &m))
        .collect();
    Ok(Outcome {
        passed: true,
        output: json!({
            "descriptor": ring.descriptor(),
            "n": n,
            "seed": seed,
            "samples": samples,
        }),
    })
}

fn cmd_campaign<R: InvolutiveRing>(
    ring: &R,
    campaign: CampaignKind,
    n: usize,
    count: usize,
    seed: u64,
) -> Result<Outcome, CliError> {
    let config = SampleConfig {
        descriptor: ring.descriptor(),
        n,
        count,
        seed,
        campaign,
    };
    let report = harness::run_campaign(ring, &config)?;
    Ok(Outcome {
        passed: report.all_passed(),
        output: serde_json::to_value(&report).expect("serializable"),
    })
}

fn cmd_oracle(n: usize) -> Result<Outcome, CliError> {
    let coeffs = harness::symbolic_charpoly_oracle(n)?;
    let analysis = harness::oracle_analysis(&coeffs);
    let listed: Vec<Value> = coeffs
        .iter()
        .map(|(k, p)| json!({ "k": k, "a_k": p.to_string() }))
        .collect();
    Ok(Outcome {
        passed: analysis.triangular && analysis.linear_coefficient_two,
        output: json!({
            "n": n,
            "coefficients": listed,
            "triangular": analysis.triangular,
            "linear_coefficient_two": analysis.linear_coefficient_two,
        }),
    })
}

fn cmd_exists(n: usize, residue_char: u64) -> Result<Outcome, CliError> {
    if n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    if residue_char != 0 && !kostant_core::ring::is_prime(residue_char) {
        return Err(Error::NotPrime(residue_char).into());
    }
    let verdict = section::kostant_exists(n, residue_char);
    Ok(Outcome {
        passed: true,
        output: json!({
            "n": n,
            "residue_char": residue_char,
            "verdict": verdict.label(),
            "exists_over_o": verdict.exists_over_integers(),
            "constructive_here": verdict.constructive_here(),
        }),
    })
}
