//! Brute-force oracles: cofactor (Laplace) expansion over a symbolic integer
//! polynomial ring and over `R[x]`. Deliberately naive; they anchor the
//! division-free characteristic polynomial and the forward-substitution solver.

use std::collections::BTreeMap;
use std::fmt;

use crate::charpoly::Polynomial;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::InvolutiveRing;

pub const ORACLE_MAX_N: usize = 5;

/// Exponent vector; index `i` is the exponent of variable `i`.
pub type Monomial = Vec<u32>;

/// Sparse multivariate polynomial with integer coefficients. Terms are kept
/// in a sorted map and zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicPolynomial {
    names: Vec<String>,
    terms: BTreeMap<Monomial, i64>,
}

impl SymbolicPolynomial {
    pub fn zero(names: &[String]) -> Self {
        SymbolicPolynomial {
            names: names.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(names: &[String], c: i64) -> Self {
        let mut p = Self::zero(names);
        if c != 0 {
            p.terms.insert(vec![0; names.len()], c);
        }
        p
    }

    pub fn variable(names: &[String], index: usize) -> Self {
        let mut mono = vec![0; names.len()];
        mono[index] = 1;
        let mut p = Self::zero(names);
        p.terms.insert(mono, 1);
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coefficient(&self, mono: &[u32]) -> i64 {
        self.terms.get(mono).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m[var]).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.accumulate(m.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        SymbolicPolynomial {
            names: self.names.clone(),
            terms: self.terms.iter().map(|(m, &c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(&self.names);
        for (m1, &c1) in &self.terms {
            for (m2, &c2) in &other.terms {
                let mono = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                out.accumulate(mono, c1.checked_mul(c2).expect("oracle coefficient overflow"));
            }
        }
        out
    }

    fn accumulate(&mut self, mono: Monomial, c: i64) {
        let entry = self.terms.entry(mono).or_insert(0);
        *entry = entry.checked_add(c).expect("oracle coefficient overflow");
        if *entry == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
    }

    /// Splits on powers of variable `var`: `result[e]` is the coefficient of `var^e`,
    /// with `var` removed from the remaining variables' exponent vectors kept at 0.
    pub fn collect_in(&self, var: usize) -> Vec<SymbolicPolynomial> {
        let deg = self.degree_in(var) as usize;
        let mut out = vec![Self::zero(&self.names); deg + 1];
        for (m, &c) in &self.terms {
            let mut rest = m.clone();
            rest[var] = 0;
            out[m[var] as usize].accumulate(rest, c);
        }
        out
    }

    /// Re-indexes onto a subset of the variables. Panics if a dropped
    /// variable occurs.
    pub fn restrict(&self, keep: &[usize]) -> SymbolicPolynomial {
        let names: Vec<String> = keep.iter().map(|&i| self.names[i].clone()).collect();
        let mut out = Self::zero(&names);
        for (m, &c) in &self.terms {
            let dropped: u32 = (0..m.len()).filter(|i| !keep.contains(i)).map(|i| m[i]).sum();
            assert_eq!(dropped, 0, "restricted away an occurring variable");
            out.accumulate(keep.iter().map(|&i| m[i]).collect(), c);
        }
        out
    }

    /// Evaluates in `R` with `values[i]` substituted for variable `i`.
    pub fn evaluate<R: InvolutiveRing>(&self, ring: &R, values: &[R::El]) -> R::El {
        assert_eq!(values.len(), self.names.len());
        self.terms.iter().fold(ring.zero(), |acc, (m, &c)| {
            let term = m
                .iter()
                .zip(values)
                .fold(ring.from_i64(c), |t, (&e, v)| ring.mul(&t, &ring.pow(v, e as u64)));
            ring.add(&acc, &term)
        })
    }
}

impl fmt::Display for SymbolicPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // highest total degree first, then reverse lexicographic for readability
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        for (idx, (mono, &c)) in terms.into_iter().enumerate() {
            let factors: Vec<String> = mono
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        self.names[i].clone()
                    } else {
                        format!("{}^{}", self.names[i], e)
                    }
                })
                .collect();
            let sign = if c < 0 { "-" } else { "+" };
            if idx == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let abs = c.unsigned_abs();
            match (abs, factors.is_empty()) {
                (_, true) => write!(f, "{abs}")?,
                (1, false) => write!(f, "{}", factors.join("*"))?,
                _ => write!(f, "{abs}*{}", factors.join("*"))?,
            }
        }
        Ok(())
    }
}

/// Laplace expansion along the first row. `O(n!)`; only for small `n`.
pub fn laplace_determinant<T: Clone>(
    m: &[Vec<T>],
    zero: &T,
    add: &impl Fn(&T, &T) -> T,
    mul: &impl Fn(&T, &T) -> T,
    neg: &impl Fn(&T) -> T,
) -> T {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = zero.clone();
    for col in 0..n {
        let minor: Vec<Vec<T>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != col)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let term = mul(&m[0][col], &laplace_determinant(&minor, zero, add, mul, neg));
        acc = if col % 2 == 0 {
            add(&acc, &term)
        } else {
            add(&acc, &neg(&term))
        };
    }
    acc
}

fn b_names(n: usize) -> Vec<String> {
    std::iter::once("x".to_string())
        .chain((1..=n).map(|k| format!("b{k}")))
        .collect()
}

/// Expands `det(xI - M(b))` for the symbolic model matrix and returns
/// `k -> a_k` as polynomials in `b_1, ..., b_n`.
pub fn symbolic_charpoly_oracle(n: usize) -> Result<BTreeMap<usize, SymbolicPolynomial>> {
    if n > ORACLE_MAX_N {
        return Err(Error::CostBoundExceeded { n, max: ORACLE_MAX_N });
    }
    if n == 0 {
        return Err(Error::DimensionMismatch { expected: 1, got: 0 });
    }
    let names = b_names(n);
    let x = SymbolicPolynomial::variable(&names, 0);
    let b = |k: usize| SymbolicPolynomial::variable(&names, k);
    let c = |v: i64| SymbolicPolynomial::constant(&names, v);

    // model matrix entries written out directly from its displayed shape
    let model = |i: usize, j: usize| -> SymbolicPolynomial {
        if i == 0 && j == n - 1 {
            c(-2).mul(&b(n))
        } else if i == 0 {
            b(j + 1).neg()
        } else if j == n - 1 {
            b(n - i).neg()
        } else if i == j + 1 {
            c(1)
        } else {
            c(0)
        }
    };
    let xi_minus_m: Vec<Vec<SymbolicPolynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let diag = if i == j { x.clone() } else { c(0) };
                    diag.add(&model(i, j).neg())
                })
                .collect()
        })
        .collect();
    let det = laplace_determinant(
        &xi_minus_m,
        &c(0),
        &|p: &SymbolicPolynomial, q: &SymbolicPolynomial| p.add(q),
        &|p: &SymbolicPolynomial, q: &SymbolicPolynomial| p.mul(q),
        &|p: &SymbolicPolynomial| p.neg(),
    );
    let by_power = det.collect_in(0);
    let keep: Vec<usize> = (1..=n).collect();
    Ok((1..=n)
        .map(|k| {
            let coeff = by_power.get(n - k).cloned().unwrap_or_else(|| c(0));
            (k, coeff.restrict(&keep))
        })
        .collect())
}

/// Structural facts the forward-substitution solver relies on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleAnalysis {
    /// `a_k` involves only `b_1, ..., b_k`.
    pub triangular: bool,
    /// `a_k` contains `b_k` only through the single term `2 b_k`.
    pub linear_coefficient_two: bool,
}

pub fn oracle_analysis(coeffs: &BTreeMap<usize, SymbolicPolynomial>) -> OracleAnalysis {
    let mut triangular = true;
    let mut linear_two = true;
    for (&k, p) in coeffs {
        let nvars = p.names.len();
        // variable index v corresponds to b_(v+1)
        if (k..nvars).any(|v| p.degree_in(v) > 0) {
            triangular = false;
        }
        let mut lone = vec![0; nvars];
        lone[k - 1] = 1;
        let occurrences = p.terms.keys().filter(|m| m[k - 1] > 0).count();
        if p.coefficient(&lone) != 2 || occurrences != 1 {
            linear_two = false;
        }
    }
    OracleAnalysis {
        triangular,
        linear_coefficient_two: linear_two,
    }
}

/// `det(xI - A)` by Laplace expansion over `R[x]`.
pub fn cofactor_char_poly<R: InvolutiveRing>(ring: &R, a: &Matrix<R::El>) -> Result<Polynomial<R::El>> {
    let n = a.n();
    if n > ORACLE_MAX_N {
        return Err(Error::CostBoundExceeded { n, max: ORACLE_MAX_N });
    }
    // dense univariate polynomials, low-to-high, fixed length n + 1
    let len = n + 1;
    let zero = vec![ring.zero(); len];
    let add = |p: &Vec<R::El>, q: &Vec<R::El>| p.iter().zip(q).map(|(u, v)| ring.add(u, v)).collect::<Vec<_>>();
    let neg = |p: &Vec<R::El>| p.iter().map(|u| ring.neg(u)).collect::<Vec<_>>();
    let mul = |p: &Vec<R::El>, q: &Vec<R::El>| {
        let mut out = vec![ring.zero(); len];
        for (i, u) in p.iter().enumerate() {
            for (j, v) in q.iter().enumerate().take(len - i) {
                out[i + j] = ring.add(&out[i + j], &ring.mul(u, v));
            }
        }
        out
    };
    let grid: Vec<Vec<Vec<R::El>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut p = vec![ring.zero(); len];
                    p[0] = ring.neg(a.get(i, j));
                    if i == j {
                        p[1] = ring.one();
                    }
                    p
                })
                .collect()
        })
        .collect();
    let det = laplace_determinant(&grid, &zero, &add, &mul, &neg);
    Polynomial::from_low_to_high(ring, det)
}
