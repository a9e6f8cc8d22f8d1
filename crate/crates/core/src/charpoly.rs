//! Division-free characteristic polynomials (Berkowitz) and derived
//! quantities. Works over any commutative backend, fields or not.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::matrix::{self, Matrix};
use crate::ring::InvolutiveRing;

/// A monic polynomial, coefficients stored low-to-high (`coeffs[n] = 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial<E> {
    coeffs: Vec<E>,
}

impl<E: Clone + PartialEq> Polynomial<E> {
    pub fn from_low_to_high<R: InvolutiveRing<El = E>>(ring: &R, coeffs: Vec<E>) -> Result<Self> {
        match coeffs.last() {
            Some(lead) if *lead == ring.one() => Ok(Polynomial { coeffs }),
            _ => Err(Error::Parse("polynomial is not monic".into())),
        }
    }

    /// `x^n + a_1 x^(n-1) + ... + a_n` from `(a_1, ..., a_n)`.
    pub fn from_invariants<R: InvolutiveRing<El = E>>(ring: &R, a: &[E]) -> Self {
        let mut coeffs: Vec<E> = a.iter().rev().cloned().collect();
        coeffs.push(ring.one());
        Polynomial { coeffs }
    }

    /// `(a_1, ..., a_n)`, the inverse of [`Polynomial::from_invariants`].
    pub fn invariants(&self) -> Vec<E> {
        self.coeffs[..self.degree()].iter().rev().cloned().collect()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs_low_to_high(&self) -> &[E] {
        &self.coeffs
    }

    /// Coefficient of `x^k`.
    pub fn coeff(&self, k: usize) -> &E {
        &self.coeffs[k]
    }
}

/// `det(xI - A)` by Berkowitz's algorithm: `O(n^4)` ring operations, no division.
pub fn char_poly<R: InvolutiveRing>(ring: &R, a: &Matrix<R::El>) -> Polynomial<R::El> {
    let n = a.n();
    // high-to-low coefficients of the leading principal r x r block
    let mut v = vec![ring.one(), ring.neg(a.get(0, 0))];
    for r in 1..n {
        // Block structure of the leading (r+1) x (r+1) minor:
        // [[M, C], [R, a_rr]] with M r x r, C column, R row.
        let mut toeplitz = Vec::with_capacity(r + 2);
        toeplitz.push(ring.one());
        toeplitz.push(ring.neg(a.get(r, r)));
        // powers M^k C for k = 0..r-1
        let mut col: Vec<R::El> = (0..r).map(|i| a.get(i, r).clone()).collect();
        for _ in 0..r {
            let dot = (0..r).fold(ring.zero(), |acc, j| ring.add(&acc, &ring.mul(a.get(r, j), &col[j])));
            toeplitz.push(ring.neg(&dot));
            col = (0..r)
                .map(|i| (0..r).fold(ring.zero(), |acc, j| ring.add(&acc, &ring.mul(a.get(i, j), &col[j]))))
                .collect();
        }
        v = (0..r + 2)
            .map(|i| (0..=i.min(r)).fold(ring.zero(), |acc, j| ring.add(&acc, &ring.mul(&toeplitz[i - j], &v[j]))))
            .collect();
    }
    v.reverse();
    Polynomial { coeffs: v }
}

/// Division-free determinant, read off the constant term of `det(xI - A)`.
pub fn determinant<R: InvolutiveRing>(ring: &R, a: &Matrix<R::El>) -> R::El {
    let chi = char_poly(ring, a);
    ring.signed(chi.coeff(0), a.n())
}

/// Evaluates `p(A)` by Horner's rule.
pub fn evaluate_at_matrix<R: InvolutiveRing>(ring: &R, p: &Polynomial<R::El>, a: &Matrix<R::El>) -> Matrix<R::El> {
    let n = a.n();
    let mut acc = matrix::zero(ring, n);
    for c in p.coeffs.iter().rev() {
        acc = matrix::mat_mul(ring, &acc, a).expect("square");
        acc = matrix::mat_add(ring, &acc, &matrix::scale(ring, c, &matrix::identity(ring, n))).expect("square");
    }
    acc
}

/// The Krylov matrix `[v | Av | ... | A^(n-1) v]`.
pub fn krylov_matrix<R: InvolutiveRing>(ring: &R, a: &Matrix<R::El>, v: &[R::El]) -> Result<Matrix<R::El>> {
    let n = a.n();
    let mut cols = Vec::with_capacity(n);
    let mut cur = v.to_vec();
    for _ in 0..n {
        let next = matrix::mat_vec(ring, a, &cur)?;
        cols.push(std::mem::replace(&mut cur, next));
    }
    Ok(Matrix::from_fn(n, |i, j| cols[j][i].clone()))
}

/// Whether the Krylov matrix of `(A, v)` has unit determinant.
pub fn krylov_unit<R: InvolutiveRing>(ring: &R, a: &Matrix<R::El>, v: &[R::El]) -> Result<bool> {
    let k = krylov_matrix(ring, a, v)?;
    Ok(ring.is_unit(&determinant(ring, &k)))
}

pub fn unit_vector<R: InvolutiveRing>(ring: &R, n: usize, index: usize) -> Vec<R::El> {
    (0..n)
        .map(|i| if i == index { ring.one() } else { ring.zero() })
        .collect()
}

pub fn to_json<R: InvolutiveRing>(ring: &R, p: &Polynomial<R::El>) -> Value {
    let coeffs: Vec<Value> = p.coeffs.iter().map(|c| ring.encode(c)).collect();
    json!({ "monic_coeffs_low_to_high": coeffs })
}

pub fn from_json<R: InvolutiveRing>(ring: &R, v: &Value) -> Result<Polynomial<R::El>> {
    let items = v
        .get("monic_coeffs_low_to_high")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("expected {\"monic_coeffs_low_to_high\": [...]}".into()))?;
    let coeffs = items.iter().map(|c| ring.decode(c)).collect::<Result<Vec<_>>>()?;
    Polynomial::from_low_to_high(ring, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Fp2, GaussianRational, GaussianRationals, QuadraticFiniteField};

    #[test]
    fn zero_matrix() {
        let r = QuadraticFiniteField::new(3, 2).unwrap();
        let chi = char_poly(&r, &matrix::zero(&r, 3));
        assert_eq!(chi.coeffs_low_to_high(), &[r.zero(), r.zero(), r.zero(), r.one()]);
    }

    #[test]
    fn diagonal_closed_form() {
        let r = GaussianRationals;
        let l1 = GaussianRational::from_ints(2, 1);
        let l2 = GaussianRational::from_ints(-3, 5);
        let chi = char_poly(&r, &matrix::diagonal(&r, &[l1.clone(), l2.clone()]));
        let expect = vec![r.mul(&l1, &l2), r.neg(&r.add(&l1, &l2)), r.one()];
        assert_eq!(chi.coeffs_low_to_high(), expect.as_slice());
    }

    #[test]
    fn two_by_two() {
        let r = GaussianRationals;
        let m = Matrix::from_fn(2, |i, j| r.from_i64([[1, 2], [3, 4]][i][j]));
        let chi = char_poly(&r, &m);
        assert_eq!(chi.invariants(), vec![r.from_i64(-5), r.from_i64(-2)]);
        assert_eq!(determinant(&r, &m), r.from_i64(-2));
    }

    #[test]
    fn invariant_conversion_both_ways() {
        let r = QuadraticFiniteField::new(5, 2).unwrap();
        let a = vec![Fp2::new(1, 2), Fp2::new(3, 0), Fp2::new(0, 4)];
        let p = Polynomial::from_invariants(&r, &a);
        assert_eq!(p.coeffs_low_to_high(), &[a[2], a[1], a[0], r.one()]);
        assert_eq!(p.invariants(), a);
        let back = from_json(&r, &to_json(&r, &p)).unwrap();
        assert_eq!(back, p);
        assert!(Polynomial::from_low_to_high(&r, vec![r.one(), r.zero()]).is_err());
    }

    #[test]
    fn krylov_edge_cases() {
        let r = GaussianRationals;
        let e1 = unit_vector(&r, 2, 0);
        assert!(!krylov_unit(&r, &matrix::zero(&r, 2), &e1).unwrap());
        assert!(!krylov_unit(&r, &matrix::identity(&r, 2), &e1).unwrap());
        let shift = Matrix::from_fn(3, |i, j| if i == j + 1 { r.one() } else { r.zero() });
        assert!(krylov_unit(&r, &shift, &unit_vector(&r, 3, 0)).unwrap());
        assert!(krylov_unit(&r, &shift, &[r.one()]).is_err());
    }
}
