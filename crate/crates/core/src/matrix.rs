//! Dense square matrices over an [`InvolutiveRing`].
//!
//! Matrices are immutable values: every operation returns a fresh matrix.
//! Indices are 0-based in the API; reports use 1-based `(row, col)`.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ring::InvolutiveRing;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    n: usize,
    entries: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Matrix { n, entries }
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::DimensionMismatch { expected: 1, got: 0 });
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Matrix { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[E]> {
        self.entries.chunks(self.n)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &E)> {
        let n = self.n;
        self.entries.iter().enumerate().map(move |(k, e)| (k / n, k % n, e))
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn map(&self, f: impl Fn(&E) -> E) -> Self {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// First `(i, j)` (0-based, row-major) where `pred` holds.
    pub fn find(&self, pred: impl FnMut(&E) -> bool) -> Option<(usize, usize)> {
        self.entries.iter().position(pred).map(|k| (k / self.n, k % self.n))
    }
}

fn check_dims<E>(a: &Matrix<E>, b: &Matrix<E>) -> Result<()> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch {
            expected: a.n,
            got: b.n,
        });
    }
    Ok(())
}

pub fn zero<R: InvolutiveRing>(ring: &R, n: usize) -> Matrix<R::El> {
    Matrix::from_fn(n, |_, _| ring.zero())
}

pub fn identity<R: InvolutiveRing>(ring: &R, n: usize) -> Matrix<R::El> {
    Matrix::from_fn(n, |i, j| if i == j { ring.one() } else { ring.zero() })
}

pub fn diagonal<R: InvolutiveRing>(ring: &R, diag: &[R::El]) -> Matrix<R::El> {
    Matrix::from_fn(diag.len(), |i, j| if i == j { diag[i].clone() } else { ring.zero() })
}

/// The anti-diagonal Gram matrix of the hermitian form: ones where `i + j = n + 1`.
pub fn gram_matrix<R: InvolutiveRing>(ring: &R, n: usize) -> Matrix<R::El> {
    Matrix::from_fn(n, |i, j| if i + j + 1 == n { ring.one() } else { ring.zero() })
}

pub fn mat_add<R: InvolutiveRing>(ring: &R, a: &Matrix<R::El>, b: &Matrix<R::El>) -> Result<Matrix<R::El>> {
    check_dims(a, b)?;
    Ok(Matrix::from_fn(a.n, |i, j| ring.add(a.get(i, j), b.get(i, j))))
}

pub fn mat_sub<R: InvolutiveRing>(ring: &R, a: &Matrix<R::El>, b: &Matrix<R::El>) -> Result<Matrix<R::El>> {
    check_dims(a, b)?;
    Ok(Matrix::from_fn(a.n, |i, j| ring.sub(a.get(i, j), b.get(i, j))))
}

pub fn mat_neg<R: InvolutiveRing>(ring: &R, a: &Matrix<R::El>) -> Matrix<R::El> {
    a.map(|e| ring.neg(e))
}

pub fn mat_mul<R: InvolutiveRing>(ring: &R, a: &Matrix<R::El>, b: &Matrix<R::El>) -> Result<Matrix<R::El>> {
    check_dims(a, b)?;
    let n = a.n;
    Ok(Matrix::from_fn(n, |i, j| {
        (0..n).fold(ring.zero(), |acc, k| {
            ring.add(&acc, &ring.mul(a.get(i, k), b.get(k, j)))
        })
    }))
}

pub fn scale<R: InvolutiveRing>(ring: &R, c: &R::El, a: &Matrix<R::El>) -> Matrix<R::El> {
    a.map(|e| ring.mul(c, e))
}

pub fn sigma_entrywise<R: InvolutiveRing>(ring: &R, a: &Matrix<R::El>) -> Matrix<R::El> {
    a.map(|e| ring.sigma(e))
}

/// `AB - BA`.
pub fn bracket<R: InvolutiveRing>(ring: &R, a: &Matrix<R::El>, b: &Matrix<R::El>) -> Result<Matrix<R::El>> {
    mat_sub(ring, &mat_mul(ring, a, b)?, &mat_mul(ring, b, a)?)
}

pub fn mat_vec<R: InvolutiveRing>(ring: &R, a: &Matrix<R::El>, v: &[R::El]) -> Result<Vec<R::El>> {
    if v.len() != a.n {
        return Err(Error::DimensionMismatch {
            expected: a.n,
            got: v.len(),
        });
    }
    Ok((0..a.n)
        .map(|i| (0..a.n).fold(ring.zero(), |acc, k| ring.add(&acc, &ring.mul(a.get(i, k), &v[k]))))
        .collect())
}

/// Checks every entry against the ring's canonical form.
pub fn validate<R: InvolutiveRing>(ring: &R, a: &Matrix<R::El>) -> Result<()> {
    a.entries.iter().try_for_each(|e| ring.validate(e))
}

/// A nonzero entry of `Phi A + sigma(A^t) Phi`, 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Offending<E> {
    pub row: usize,
    pub col: usize,
    pub value: E,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipReport<E> {
    pub passed: bool,
    /// The matrix-product and index-identity computations coincide entrywise.
    pub paths_agree: bool,
    pub first_offending: Option<Offending<E>>,
}

/// `Phi A + sigma(A^t) Phi` computed with matrix products.
pub fn skew_defect_by_product<R: InvolutiveRing>(ring: &R, a: &Matrix<R::El>) -> Matrix<R::El> {
    let phi = gram_matrix(ring, a.n);
    let left = mat_mul(ring, &phi, a).expect("square");
    let right = mat_mul(ring, &sigma_entrywise(ring, &a.transpose()), &phi).expect("square");
    mat_add(ring, &left, &right).expect("square")
}

/// The same defect via `(i, j) -> A[n+1-i, j] + sigma(A[n+1-j, i])` (1-based).
pub fn skew_defect_by_index<R: InvolutiveRing>(ring: &R, a: &Matrix<R::El>) -> Matrix<R::El> {
    let n = a.n;
    Matrix::from_fn(n, |i, j| {
        ring.add(a.get(n - 1 - i, j), &ring.sigma(a.get(n - 1 - j, i)))
    })
}

/// Tests `Phi A + sigma(A^t) Phi = 0`, i.e. membership in the unitary Lie algebra.
pub fn in_unitary_lie_algebra<R: InvolutiveRing>(ring: &R, a: &Matrix<R::El>) -> MembershipReport<R::El> {
    let by_product = skew_defect_by_product(ring, a);
    let by_index = skew_defect_by_index(ring, a);
    let paths_agree = by_product == by_index;
    let first_offending = by_product
        .find(|e| !ring.is_zero(e))
        .or_else(|| by_index.find(|e| !ring.is_zero(e)))
        .map(|(i, j)| Offending {
            row: i + 1,
            col: j + 1,
            value: by_product.get(i, j).clone(),
        });
    MembershipReport {
        passed: paths_agree && first_offending.is_none(),
        paths_agree,
        first_offending,
    }
}

pub fn to_json<R: InvolutiveRing>(ring: &R, a: &Matrix<R::El>) -> Value {
    let rows: Vec<Value> = a
        .rows()
        .map(|row| Value::Array(row.iter().map(|e| ring.encode(e)).collect()))
        .collect();
    json!({ "n": a.n, "entries": rows })
}

/// Accepts `{"n", "entries"}` or a bare array of rows.
pub fn from_json<R: InvolutiveRing>(ring: &R, v: &Value) -> Result<Matrix<R::El>> {
    let (declared, rows) = match v {
        Value::Object(map) => (
            map.get("n").and_then(Value::as_u64),
            map.get("entries").and_then(Value::as_array),
        ),
        Value::Array(rows) => (None, Some(rows)),
        _ => (None, None),
    };
    let rows = rows.ok_or_else(|| Error::Parse("expected {\"n\", \"entries\"} matrix".into()))?;
    let parsed = rows
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| Error::Parse("matrix row is not an array".into()))?
                .iter()
                .map(|e| ring.decode(e))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let m = Matrix::from_rows(parsed)?;
    if let Some(n) = declared {
        if n as usize != m.n {
            return Err(Error::DimensionMismatch {
                expected: n as usize,
                got: m.n,
            });
        }
    }
    Ok(m)
}

pub fn membership_to_json<R: InvolutiveRing>(ring: &R, report: &MembershipReport<R::El>) -> Value {
    json!({
        "membership": report.passed,
        "paths_agree": report.paths_agree,
        "first_offending": report.first_offending.as_ref().map(|o| json!({
            "row": o.row,
            "col": o.col,
            "value": ring.encode(&o.value),
        })),
    })
}
