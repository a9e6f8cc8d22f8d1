use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::sample::{random_invariant_tuple, random_lie_element, random_matrix, substream_rng};
use super::symbolic::{cofactor_char_poly, symbolic_charpoly_oracle, SymbolicPolynomial, ORACLE_MAX_N};
use crate::charpoly;
use crate::error::{Error, Result};
use crate::matrix::{self, Matrix};
use crate::ring::{Descriptor, InvolutiveRing};
use crate::section;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CampaignKind {
    /// Random invariants -> section; all three identities, sigma-parity of `b`,
    /// case-table layout, alpha-independence, Krylov regularity.
    Identity,
    /// Sampled `gamma` in `u_n` -> `phi_n` -> section -> same characteristic polynomial.
    RoundTrip,
    /// Sampler output passes the membership test.
    Membership,
    /// Untwisted model matrices must fail membership; a trial passes when they do.
    NegativeControl,
    /// Symbolic oracle coefficients agree with `char_poly` and `solve_b` (`n <= 5`).
    Oracle,
    /// Sums, sigma-fixed multiples and brackets of members stay members.
    LieClosure,
    /// Cayley-Hamilton, cofactor cross-check, and invariance under `D_alpha` conjugation.
    CharPoly,
}

impl CampaignKind {
    pub const ALL: [CampaignKind; 7] = [
        CampaignKind::Identity,
        CampaignKind::RoundTrip,
        CampaignKind::Membership,
        CampaignKind::NegativeControl,
        CampaignKind::Oracle,
        CampaignKind::LieClosure,
        CampaignKind::CharPoly,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CampaignKind::Identity => "identity",
            CampaignKind::RoundTrip => "round-trip",
            CampaignKind::Membership => "membership",
            CampaignKind::NegativeControl => "negative-control",
            CampaignKind::Oracle => "oracle",
            CampaignKind::LieClosure => "lie-closure",
            CampaignKind::CharPoly => "char-poly",
        }
    }
}

impl fmt::Display for CampaignKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CampaignKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CampaignKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown campaign '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleConfig {
    pub descriptor: Descriptor,
    pub n: usize,
    pub count: usize,
    pub seed: u64,
    pub campaign: CampaignKind,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CampaignReport {
    pub campaign: CampaignKind,
    pub config: SampleConfig,
    pub passes: usize,
    pub failures: usize,
    pub first_counterexample: Option<Value>,
    pub elapsed_ms: u128,
}

impl CampaignReport {
    pub fn all_passed(&self) -> bool {
        self.failures == 0
    }
}

type Trial = std::result::Result<(), Value>;

struct Context<'a, R: InvolutiveRing> {
    ring: &'a R,
    n: usize,
    oracle: Option<Vec<SymbolicPolynomial>>,
}

/// Runs `config.count` independent trials, trial `i` drawing from
/// `substream_rng(seed, i)`. Trials run in parallel; results are merged in
/// index order so the report (apart from `elapsed_ms`) is seed-deterministic.
pub fn run_campaign<R: InvolutiveRing>(ring: &R, config: &SampleConfig) -> Result<CampaignReport> {
    if config.count == 0 {
        return Err(Error::Parse("campaign count must be at least 1".into()));
    }
    if config.n == 0 {
        return Err(Error::DimensionMismatch { expected: 1, got: 0 });
    }
    if ring.descriptor() != config.descriptor {
        return Err(Error::DescriptorMismatch(
            "campaign descriptor differs from ring".into(),
        ));
    }
    let start = Instant::now();
    let oracle = if config.campaign == CampaignKind::Oracle {
        Some(symbolic_charpoly_oracle(config.n)?.into_values().collect())
    } else {
        None
    };
    if config.campaign == CampaignKind::CharPoly && config.n > ORACLE_MAX_N {
        return Err(Error::CostBoundExceeded {
            n: config.n,
            max: ORACLE_MAX_N,
        });
    }
    let ctx = Context {
        ring,
        n: config.n,
        oracle,
    };
    let outcomes: Vec<Trial> = (0..config.count as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = substream_rng(config.seed, i);
            run_trial(&ctx, config.campaign, &mut rng)
                .unwrap_or_else(|e| Err(json!({ "error": e.code(), "message": e.to_string() })))
        })
        .collect();
    let failures = outcomes.iter().filter(|o| o.is_err()).count();
    let first_counterexample = outcomes.into_iter().find_map(|o| o.err());
    Ok(CampaignReport {
        campaign: config.campaign,
        config: config.clone(),
        passes: config.count - failures,
        failures,
        first_counterexample,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

fn run_trial<R: InvolutiveRing>(ctx: &Context<'_, R>, kind: CampaignKind, rng: &mut ChaCha8Rng) -> Result<Trial> {
    match kind {
        CampaignKind::Identity => identity_trial(ctx, rng),
        CampaignKind::RoundTrip => round_trip_trial(ctx, rng),
        CampaignKind::Membership => {
            let m = random_lie_element(ctx.ring, ctx.n, rng);
            Ok(check(
                matrix::in_unitary_lie_algebra(ctx.ring, &m).passed,
                || json!({ "gamma": matrix::to_json(ctx.ring, &m) }),
            ))
        }
        CampaignKind::NegativeControl => {
            let a = random_invariant_tuple(ctx.ring, ctx.n, rng);
            let model = section::model_matrix(ctx.ring, &section::solve_b(ctx.ring, &a)?);
            Ok(check(
                !matrix::in_unitary_lie_algebra(ctx.ring, &model).passed,
                || json!({ "a": section::tuple_to_json(ctx.ring, a.as_slice()), "model": matrix::to_json(ctx.ring, &model) }),
            ))
        }
        CampaignKind::Oracle => oracle_trial(ctx, rng),
        CampaignKind::LieClosure => lie_closure_trial(ctx, rng),
        CampaignKind::CharPoly => char_poly_trial(ctx, rng),
    }
}

fn check(ok: bool, counterexample: impl FnOnce() -> Value) -> Trial {
    if ok {
        Ok(())
    } else {
        Err(counterexample())
    }
}

fn random_fixed_unit<R: InvolutiveRing>(ring: &R, rng: &mut ChaCha8Rng) -> R::El {
    loop {
        let u = ring.random_fixed(rng);
        if ring.is_unit(&u) {
            return u;
        }
    }
}

fn identity_trial<R: InvolutiveRing>(ctx: &Context<'_, R>, rng: &mut ChaCha8Rng) -> Result<Trial> {
    let ring = ctx.ring;
    let a = random_invariant_tuple(ring, ctx.n, rng);
    let s = section::build_section(ring, &a)?;
    let b_parity = s.b.iter().enumerate().all(|(k, bk)| ring.has_parity(bk, k + 1));
    let layout = section::matches_case_table(ring, &s.x, &s.b, &s.alpha)?;
    // a second valid alpha: a sigma-fixed unit multiple of the canonical one
    let other_alpha = ring.mul(&s.alpha, &random_fixed_unit(ring, rng));
    let other = section::build_x(ring, &a, &other_alpha)?;
    let alpha_independent =
        other.report.all_passed() && charpoly::char_poly(ring, &other.x) == charpoly::char_poly(ring, &s.x);
    let regular = charpoly::krylov_unit(ring, &s.x, &charpoly::unit_vector(ring, ctx.n, 0))?;
    Ok(check(
        s.report.all_passed() && b_parity && layout && alpha_independent && regular,
        || {
            json!({
                "section": section::section_to_json(ring, &s),
                "b_parity": b_parity,
                "case_table": layout,
                "alpha_independent": alpha_independent,
                "krylov_unit": regular,
            })
        },
    ))
}

fn round_trip_trial<R: InvolutiveRing>(ctx: &Context<'_, R>, rng: &mut ChaCha8Rng) -> Result<Trial> {
    let ring = ctx.ring;
    let gamma = random_lie_element(ring, ctx.n, rng);
    let counterexample = |extra: Value| json!({ "gamma": matrix::to_json(ring, &gamma), "detail": extra });
    let a = match section::phi_n(ring, &gamma) {
        Ok(a) => a,
        Err(e) => return Ok(Err(counterexample(json!(e.to_string())))),
    };
    let s = section::build_section(ring, &a)?;
    let same_chi = charpoly::char_poly(ring, &s.x) == charpoly::char_poly(ring, &gamma);
    let back = section::phi_n(ring, &s.x).ok();
    Ok(check(
        s.report.all_passed() && same_chi && back.as_ref() == Some(&a),
        || counterexample(section::section_to_json(ring, &s)),
    ))
}

fn oracle_trial<R: InvolutiveRing>(ctx: &Context<'_, R>, rng: &mut ChaCha8Rng) -> Result<Trial> {
    let ring = ctx.ring;
    let oracle = ctx.oracle.as_ref().expect("oracle prepared");
    let eval = |b: &[R::El]| oracle.iter().map(|p| p.evaluate(ring, b)).collect::<Vec<_>>();

    // arbitrary b: oracle coefficients are the characteristic polynomial of the model
    let b: Vec<R::El> = (0..ctx.n).map(|_| ring.random_element(rng)).collect();
    let direct = charpoly::char_poly(ring, &section::model_matrix(ring, &b)).invariants();
    let agrees = eval(&b) == direct;

    // solved b: substituting into the oracle reproduces a
    let a = random_invariant_tuple(ring, ctx.n, rng);
    let solved = section::solve_b(ring, &a)?;
    let reproduces = eval(&solved) == a.as_slice();

    Ok(check(agrees && reproduces, || {
        json!({
            "b": section::tuple_to_json(ring, &b),
            "oracle_matches_char_poly": agrees,
            "a": section::tuple_to_json(ring, a.as_slice()),
            "solved_b": section::tuple_to_json(ring, &solved),
            "solve_b_reproduces_a": reproduces,
        })
    }))
}

fn lie_closure_trial<R: InvolutiveRing>(ctx: &Context<'_, R>, rng: &mut ChaCha8Rng) -> Result<Trial> {
    let ring = ctx.ring;
    let x = random_lie_element(ring, ctx.n, rng);
    let y = random_lie_element(ring, ctx.n, rng);
    let c = ring.random_fixed(rng);
    let member = |m: &Matrix<R::El>| matrix::in_unitary_lie_algebra(ring, m).passed;
    let sum = matrix::mat_add(ring, &x, &y)?;
    let scaled = matrix::scale(ring, &c, &x);
    let br = matrix::bracket(ring, &x, &y)?;
    Ok(check(
        member(&sum) && member(&scaled) && member(&br),
        || json!({ "x": matrix::to_json(ring, &x), "y": matrix::to_json(ring, &y), "c": ring.encode(&c) }),
    ))
}

fn char_poly_trial<R: InvolutiveRing>(ctx: &Context<'_, R>, rng: &mut ChaCha8Rng) -> Result<Trial> {
    let ring = ctx.ring;
    let a = random_matrix(ring, ctx.n, rng);
    let chi = charpoly::char_poly(ring, &a);
    let cayley_hamilton = matrix::zero(ring, ctx.n) == charpoly::evaluate_at_matrix(ring, &chi, &a);
    let cofactor = cofactor_char_poly(ring, &a)? == chi;
    let (d, d_inv) = section::diag_alpha(ring, &ring.choose_alpha()?, ctx.n)?;
    let conj = matrix::mat_mul(ring, &matrix::mat_mul(ring, &d_inv, &a)?, &d)?;
    let invariant = charpoly::char_poly(ring, &conj) == chi;
    Ok(check(cayley_hamilton && cofactor && invariant, || {
        json!({
            "matrix": matrix::to_json(ring, &a),
            "cayley_hamilton": cayley_hamilton,
            "cofactor_match": cofactor,
            "conjugation_invariant": invariant,
        })
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{GaussianRationals, QuadraticFiniteField};

    fn config(ring: &impl InvolutiveRing, n: usize, count: usize, campaign: CampaignKind) -> SampleConfig {
        SampleConfig {
            descriptor: ring.descriptor(),
            n,
            count,
            seed: 2024,
            campaign,
        }
    }

    #[test]
    fn every_campaign_passes_small() {
        let r = QuadraticFiniteField::new(5, 2).unwrap();
        for kind in CampaignKind::ALL {
            let report = run_campaign(&r, &config(&r, 3, 25, kind)).unwrap();
            assert_eq!(report.passes, 25, "{kind}: {:?}", report.first_counterexample);
        }
    }

    #[test]
    fn round_trip_f5_n4() {
        let r = QuadraticFiniteField::new(5, 2).unwrap();
        let report = run_campaign(&r, &config(&r, 4, 100, CampaignKind::RoundTrip)).unwrap();
        assert_eq!((report.passes, report.failures), (100, 0));
        assert!(report.first_counterexample.is_none());
    }

    #[test]
    fn deterministic_modulo_time() {
        let r = GaussianRationals;
        let cfg = config(&r, 3, 20, CampaignKind::Identity);
        let mut a = run_campaign(&r, &cfg).unwrap();
        let mut b = run_campaign(&r, &cfg).unwrap();
        a.elapsed_ms = 0;
        b.elapsed_ms = 0;
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_mismatched_descriptor() {
        let r = QuadraticFiniteField::new(5, 2).unwrap();
        let mut cfg = config(&r, 2, 1, CampaignKind::Membership);
        cfg.descriptor = Descriptor::rational();
        assert!(matches!(run_campaign(&r, &cfg), Err(Error::DescriptorMismatch(_))));
    }

    #[test]
    fn report_json_shape() {
        let r = QuadraticFiniteField::new(3, 2).unwrap();
        let report = run_campaign(&r, &config(&r, 2, 3, CampaignKind::Membership)).unwrap();
        let v = serde_json::to_value(&report).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(
            keys,
            [
                "campaign",
                "config",
                "passes",
                "failures",
                "first_counterexample",
                "elapsed_ms"
            ]
        );
        assert_eq!(v["campaign"], "membership");
        assert!(v["first_counterexample"].is_null());
    }
}
