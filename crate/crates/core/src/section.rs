//! The corrected Kostant section for the unitary Lie algebra.
//!
//! Given invariants `(a_1, ..., a_n)` with `sigma(a_i) = (-1)^i a_i`, the
//! section matrix `X` has
//!
//! ```text
//! X[1, k]       = -alpha^-(k-1) b_k        1 <= k <= n-1
//! X[n+1-k, n]   = -alpha^-(k-1) b_k        1 <= k <= n-1
//! X[1, n]       = -2 alpha^-(n-1) b_n
//! X[k+1, k]     = alpha                    1 <= k <= n-1
//! ```
//!
//! and zeros elsewhere, where `alpha` is a unit with `alpha + sigma(alpha) = 0`.
//! Conjugating by `D = diag(1, alpha, ..., alpha^(n-1))` untwists `X` into the
//! companion-type [`model_matrix`], whose characteristic polynomial is
//! `x^n + a_1 x^(n-1) + ... + a_n` for the `b` returned by [`solve_b`].
//!
//! At `n = 1` the only entry is `X[1, 1] = -2 b_1`, so `b_1 = a_1 / 2` and the
//! coefficient of `b_k` in `a_k` is 2 for every `k`, including `k = n = 1`.

use serde_json::{json, Value};

use crate::charpoly::{self, Polynomial};
use crate::error::{Error, Result};
use crate::matrix::{self, Matrix};
use crate::ring::InvolutiveRing;

/// `(a_1, ..., a_n)` with `sigma(a_i) = (-1)^i a_i`: the invariants of an
/// element of the unitary Lie algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantTuple<E> {
    a: Vec<E>,
}

impl<E: Clone> InvariantTuple<E> {
    pub fn new<R: InvolutiveRing<El = E>>(ring: &R, a: Vec<E>) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::DimensionMismatch { expected: 1, got: 0 });
        }
        for (i, ai) in a.iter().enumerate() {
            ring.validate(ai)?;
            if !ring.has_parity(ai, i + 1) {
                return Err(Error::CodomainViolation { index: i + 1 });
            }
        }
        Ok(InvariantTuple { a })
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn as_slice(&self) -> &[E] {
        &self.a
    }

    pub fn into_vec(self) -> Vec<E> {
        self.a
    }
}

/// Which identity of the section failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    Membership,
    CharPoly,
    Conjugacy,
}

impl Check {
    pub fn as_str(&self) -> &'static str {
        match self {
            Check::Membership => "membership",
            Check::CharPoly => "charpoly_match",
            Check::Conjugacy => "conjugacy_match",
        }
    }
}

/// First failure location. For [`Check::CharPoly`], `row` is the 1-based
/// index `k` of the mismatched `a_k` and `col` is 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure<E> {
    pub check: Check,
    pub row: usize,
    pub col: usize,
    pub value: E,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport<E> {
    pub membership: bool,
    pub charpoly_match: bool,
    pub conjugacy_match: bool,
    pub first_failure: Option<Failure<E>>,
}

impl<E> VerificationReport<E> {
    pub fn all_passed(&self) -> bool {
        self.membership && self.charpoly_match && self.conjugacy_match
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionResult<E> {
    pub a: InvariantTuple<E>,
    pub b: Vec<E>,
    pub alpha: E,
    pub x: Matrix<E>,
    pub report: VerificationReport<E>,
}

fn inverse_of_two<R: InvolutiveRing>(ring: &R) -> Result<R::El> {
    ring.invert(&ring.from_i64(2)).map_err(|_| Error::NonInvertibleTwo)
}

/// The untwisted companion-type matrix: first row `(-b_1, ..., -b_(n-1), -2 b_n)`,
/// unit subdiagonal, last column `(-b_(n-1), ..., -b_1)` below the first row.
pub fn model_matrix<R: InvolutiveRing>(ring: &R, b: &[R::El]) -> Matrix<R::El> {
    let ones = vec![ring.one(); b.len()];
    twisted(ring, b, &ones, &ring.one())
}

/// Shared layout of `X` and the model matrix. `inv_powers[k]` multiplies
/// `b_(k+1)`; `sub` fills the subdiagonal.
fn twisted<R: InvolutiveRing>(ring: &R, b: &[R::El], inv_powers: &[R::El], sub: &R::El) -> Matrix<R::El> {
    let n = b.len();
    let two = ring.from_i64(2);
    let entry = |k: usize| ring.neg(&ring.mul(&inv_powers[k], &b[k]));
    Matrix::from_fn(n, |i, j| {
        if i == 0 && j == n - 1 {
            ring.mul(&two, &entry(n - 1))
        } else if i == 0 {
            entry(j)
        } else if j == n - 1 {
            // row i (0-based) of the last column holds b_(n-i)
            entry(n - 1 - i)
        } else if i == j + 1 {
            sub.clone()
        } else {
            ring.zero()
        }
    })
}

/// Recovers `b` with `char_poly(model_matrix(b)) = x^n + a_1 x^(n-1) + ... + a_n`
/// by forward substitution: `a_k` depends on `b_1..b_k` only, and on `b_k`
/// through the term `2 b_k`.
pub fn solve_b<R: InvolutiveRing>(ring: &R, a: &InvariantTuple<R::El>) -> Result<Vec<R::El>> {
    let half = inverse_of_two(ring)?;
    let n = a.n();
    let mut b = vec![ring.zero(); n];
    for k in 0..n {
        let current = charpoly::char_poly(ring, &model_matrix(ring, &b)).invariants();
        let residual = ring.sub(&a.as_slice()[k], &current[k]);
        b[k] = ring.mul(&residual, &half);
    }
    Ok(b)
}

type MatrixPair<E> = (Matrix<E>, Matrix<E>);

/// `diag(1, alpha, ..., alpha^(n-1))` and its inverse.
pub fn diag_alpha<R: InvolutiveRing>(ring: &R, alpha: &R::El, n: usize) -> Result<MatrixPair<R::El>> {
    let inv = ring.invert(alpha)?;
    let powers: Vec<R::El> = (0..n).map(|k| ring.pow(alpha, k as u64)).collect();
    let inv_powers: Vec<R::El> = (0..n).map(|k| ring.pow(&inv, k as u64)).collect();
    Ok((matrix::diagonal(ring, &powers), matrix::diagonal(ring, &inv_powers)))
}

fn check_alpha<R: InvolutiveRing>(ring: &R, alpha: &R::El) -> Result<()> {
    ring.validate(alpha)?;
    if ring.is_trace_zero_unit(alpha) {
        Ok(())
    } else {
        Err(Error::InvalidAlpha(ring.encode(alpha).to_string()))
    }
}

/// Builds the section matrix for `a` and verifies it. The report is always
/// attached; check [`VerificationReport::all_passed`] before trusting `x`.
pub fn build_x<R: InvolutiveRing>(ring: &R, a: &InvariantTuple<R::El>, alpha: &R::El) -> Result<SectionResult<R::El>> {
    inverse_of_two(ring)?;
    check_alpha(ring, alpha)?;
    let n = a.n();
    let b = solve_b(ring, a)?;
    let alpha_inv = ring.invert(alpha)?;
    let inv_powers: Vec<R::El> = (0..n).map(|k| ring.pow(&alpha_inv, k as u64)).collect();
    let x = twisted(ring, &b, &inv_powers, alpha);
    let report = verify_section(ring, &x, a, &b, alpha)?;
    Ok(SectionResult {
        a: a.clone(),
        b,
        alpha: alpha.clone(),
        x,
        report,
    })
}

/// Builds with the backend's canonical `alpha`.
pub fn build_section<R: InvolutiveRing>(ring: &R, a: &InvariantTuple<R::El>) -> Result<SectionResult<R::El>> {
    inverse_of_two(ring)?;
    let alpha = ring.choose_alpha()?;
    build_x(ring, a, &alpha)
}

/// Cross-checks the entry layout of `x` against the explicit case table.
pub fn matches_case_table<R: InvolutiveRing>(ring: &R, x: &Matrix<R::El>, b: &[R::El], alpha: &R::El) -> Result<bool> {
    let n = x.n();
    let inv = ring.invert(alpha)?;
    let coeff = |k: usize| ring.neg(&ring.mul(&ring.pow(&inv, (k - 1) as u64), &b[k - 1]));
    let mut grid = vec![vec![ring.zero(); n]; n];
    // 1-based positions
    for k in 1..n {
        grid[0][k - 1] = coeff(k);
        grid[n - k][n - 1] = coeff(k);
        grid[k][k - 1] = alpha.clone();
    }
    grid[0][n - 1] = ring.mul(&ring.from_i64(2), &coeff(n));
    Ok(Matrix::from_rows(grid)? == *x)
}

fn verify_section<R: InvolutiveRing>(
    ring: &R,
    x: &Matrix<R::El>,
    a: &InvariantTuple<R::El>,
    b: &[R::El],
    alpha: &R::El,
) -> Result<VerificationReport<R::El>> {
    let mut first_failure = None;

    let membership = matrix::in_unitary_lie_algebra(ring, x);
    if let Some(off) = &membership.first_offending {
        first_failure.get_or_insert(Failure {
            check: Check::Membership,
            row: off.row,
            col: off.col,
            value: off.value.clone(),
        });
    }

    let chi = charpoly::char_poly(ring, x).invariants();
    let charpoly_mismatch = chi.iter().zip(a.as_slice()).position(|(c, ak)| c != ak);
    if let Some(k) = charpoly_mismatch {
        first_failure.get_or_insert(Failure {
            check: Check::CharPoly,
            row: k + 1,
            col: 0,
            value: chi[k].clone(),
        });
    }

    let (d, d_inv) = diag_alpha(ring, alpha, x.n())?;
    let untwisted = matrix::mat_mul(ring, &matrix::mat_mul(ring, &d_inv, x)?, &d)?;
    let model = model_matrix(ring, b);
    let conjugacy_mismatch = Matrix::from_fn(x.n(), |i, j| untwisted.get(i, j) != model.get(i, j)).find(|&bad| bad);
    if let Some((i, j)) = conjugacy_mismatch {
        first_failure.get_or_insert(Failure {
            check: Check::Conjugacy,
            row: i + 1,
            col: j + 1,
            value: untwisted.get(i, j).clone(),
        });
    }

    Ok(VerificationReport {
        membership: membership.passed,
        charpoly_match: charpoly_mismatch.is_none(),
        conjugacy_match: conjugacy_mismatch.is_none(),
        first_failure,
    })
}

/// The adjoint quotient map: `gamma -> (a_1, ..., a_n)` where
/// `char_poly(gamma) = x^n + a_1 x^(n-1) + ... + a_n`.
pub fn phi_n<R: InvolutiveRing>(ring: &R, gamma: &Matrix<R::El>) -> Result<InvariantTuple<R::El>> {
    let report = matrix::in_unitary_lie_algebra(ring, gamma);
    if !report.passed {
        let (row, col) = report.first_offending.map(|o| (o.row, o.col)).unwrap_or((0, 0));
        return Err(Error::NotInLieAlgebra { row, col });
    }
    InvariantTuple::new(ring, charpoly::char_poly(ring, gamma).invariants())
}

pub fn char_poly_of_tuple<R: InvolutiveRing>(ring: &R, a: &InvariantTuple<R::El>) -> Polynomial<R::El> {
    Polynomial::from_invariants(ring, a.as_slice())
}

/// What the existence theorem guarantees for a given rank and residue characteristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Existence {
    /// Residue characteristic is not 2: a section exists over the integers
    /// and [`build_x`] constructs it.
    ConstructiveHere,
    /// `n` odd, residue characteristic 2: a section exists over the
    /// integers, but no explicit construction is available here.
    ExistsOverIntegers,
    /// `n` even, residue characteristic 2: existence requires odd residue
    /// characteristic, so nothing is guaranteed.
    RequiresOddCharacteristic,
}

impl Existence {
    pub fn exists_over_integers(&self) -> bool {
        !matches!(self, Existence::RequiresOddCharacteristic)
    }

    pub fn constructive_here(&self) -> bool {
        matches!(self, Existence::ConstructiveHere)
    }

    pub fn label(&self) -> &'static str {
        match self {
            Existence::ConstructiveHere => "constructive-here",
            Existence::ExistsOverIntegers => "yes-over-o",
            Existence::RequiresOddCharacteristic => "yes-requires-odd-char",
        }
    }
}

/// `residue_char = 0` stands for characteristic zero (the rational backend).
pub fn kostant_exists(n: usize, residue_char: u64) -> Existence {
    match (residue_char == 2, n % 2 == 1) {
        (false, _) => Existence::ConstructiveHere,
        (true, true) => Existence::ExistsOverIntegers,
        (true, false) => Existence::RequiresOddCharacteristic,
    }
}

pub fn report_to_json<R: InvolutiveRing>(ring: &R, report: &VerificationReport<R::El>) -> Value {
    let mut v = json!({
        "membership": report.membership,
        "charpoly_match": report.charpoly_match,
        "conjugacy_match": report.conjugacy_match,
    });
    if let Some(f) = &report.first_failure {
        v["first_failure"] = json!({
            "check": f.check.as_str(),
            "row": f.row,
            "col": f.col,
            "value": ring.encode(&f.value),
        });
    }
    v
}

pub fn tuple_to_json<R: InvolutiveRing>(ring: &R, a: &[R::El]) -> Value {
    Value::Array(a.iter().map(|e| ring.encode(e)).collect())
}

pub fn tuple_from_json<R: InvolutiveRing>(ring: &R, v: &Value) -> Result<InvariantTuple<R::El>> {
    let items = v
        .as_array()
        .ok_or_else(|| Error::Parse("invariant tuple must be a JSON array".into()))?;
    let a = items.iter().map(|e| ring.decode(e)).collect::<Result<Vec<_>>>()?;
    InvariantTuple::new(ring, a)
}

/// `{"n", "a", "b", "alpha", "X", "report"}`.
pub fn section_to_json<R: InvolutiveRing>(ring: &R, s: &SectionResult<R::El>) -> Value {
    json!({
        "n": s.x.n(),
        "a": tuple_to_json(ring, s.a.as_slice()),
        "b": tuple_to_json(ring, &s.b),
        "alpha": ring.encode(&s.alpha),
        "X": matrix::to_json(ring, &s.x),
        "report": report_to_json(ring, &s.report),
    })
}
