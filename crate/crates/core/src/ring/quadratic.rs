use rand::Rng;
use serde_json::{json, Value};

use super::arith::{is_prime, is_quadratic_residue};
use super::descriptor::Descriptor;
use super::InvolutiveRing;
use crate::error::{Error, Result};

/// `x + y*w` in `F_p[w]`, both coordinates reduced into `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp2 {
    pub x: u64,
    pub y: u64,
}

impl Fp2 {
    pub const fn new(x: u64, y: u64) -> Self {
        Fp2 { x, y }
    }
}

/// `F_{p^2} = F_p[w] / (w^2 - d)` with `sigma(x + yw) = x - yw`.
///
/// Since `d` is a non-residue, `w^p = d^((p-1)/2) w = -w`, so `sigma` is the
/// Frobenius.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticFiniteField {
    p: u64,
    d: u64,
}

const MAX_MODULUS: u64 = 1 << 31;

impl QuadraticFiniteField {
    pub fn new(p: u64, d: u64) -> Result<Self> {
        if p == 2 {
            return Err(Error::NonInvertibleTwo);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= MAX_MODULUS {
            return Err(Error::InvalidDescriptor(format!("p = {p} exceeds 2^31")));
        }
        let d = d % p;
        if is_quadratic_residue(d, p) {
            return Err(Error::SquareResidue { p, d });
        }
        Ok(QuadraticFiniteField { p, d })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn omega(&self) -> Fp2 {
        Fp2::new(0, 1)
    }

    /// All `p^2` elements, `x` major.
    pub fn elements(&self) -> impl Iterator<Item = Fp2> + '_ {
        (0..self.p).flat_map(move |x| (0..self.p).map(move |y| Fp2::new(x, y)))
    }

    fn reduce_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    fn addm(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn subm(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn mulm(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    fn invm(&self, a: u64) -> u64 {
        super::arith::pow_mod(a, self.p - 2, self.p)
    }

    pub(crate) fn decode_pair(&self, v: &Value) -> Result<Fp2> {
        let (x, y) = match v {
            Value::Object(map) => (map.get("x"), map.get("y")),
            Value::Array(items) if items.len() == 2 => (items.first(), items.get(1)),
            _ => return Err(Error::Parse(format!("expected {{\"x\",\"y\"}} or [x, y], got {v}"))),
        };
        let coord = |c: Option<&Value>| -> Result<i64> {
            c.and_then(Value::as_i64)
                .ok_or_else(|| Error::Parse(format!("expected integer coordinates in {v}")))
        };
        let (x, y) = (coord(x)?, coord(y)?);
        let el = Fp2::new(self.reduce_i64(x), self.reduce_i64(y));
        if x < 0 || y < 0 || x as u64 >= self.p || y as u64 >= self.p {
            return Err(Error::DescriptorMismatch(format!(
                "coordinates of {v} are not residues in [0, {})",
                self.p
            )));
        }
        Ok(el)
    }
}

impl InvolutiveRing for QuadraticFiniteField {
    type El = Fp2;

    fn descriptor(&self) -> Descriptor {
        Descriptor::finite_field(self.p, self.d)
    }

    fn residue_characteristic(&self) -> u64 {
        self.p
    }

    fn zero(&self) -> Fp2 {
        Fp2::new(0, 0)
    }

    fn one(&self) -> Fp2 {
        Fp2::new(1, 0)
    }

    fn from_i64(&self, value: i64) -> Fp2 {
        Fp2::new(self.reduce_i64(value), 0)
    }

    fn add(&self, a: &Fp2, b: &Fp2) -> Fp2 {
        Fp2::new(self.addm(a.x, b.x), self.addm(a.y, b.y))
    }

    fn sub(&self, a: &Fp2, b: &Fp2) -> Fp2 {
        Fp2::new(self.subm(a.x, b.x), self.subm(a.y, b.y))
    }

    fn mul(&self, a: &Fp2, b: &Fp2) -> Fp2 {
        let yy = self.mulm(a.y, b.y);
        let x = self.addm(self.mulm(a.x, b.x), self.mulm(self.d, yy));
        let y = self.addm(self.mulm(a.x, b.y), self.mulm(a.y, b.x));
        Fp2::new(x, y)
    }

    fn neg(&self, a: &Fp2) -> Fp2 {
        Fp2::new(self.subm(0, a.x), self.subm(0, a.y))
    }

    fn sigma(&self, a: &Fp2) -> Fp2 {
        Fp2::new(a.x, self.subm(0, a.y))
    }

    fn is_unit(&self, a: &Fp2) -> bool {
        a.x != 0 || a.y != 0
    }

    fn invert(&self, a: &Fp2) -> Result<Fp2> {
        if !self.is_unit(a) {
            return Err(Error::NonInvertible(format!("{}+{}w", a.x, a.y)));
        }
        // (x + yw)^-1 = (x - yw) / (x^2 - d y^2); the norm is nonzero as d is a non-residue.
        let norm = self.norm(a).x;
        let inv = self.invm(norm);
        let conj = self.sigma(a);
        Ok(Fp2::new(self.mulm(conj.x, inv), self.mulm(conj.y, inv)))
    }

    fn choose_alpha(&self) -> Result<Fp2> {
        Ok(self.omega())
    }

    fn validate(&self, a: &Fp2) -> Result<()> {
        if a.x < self.p && a.y < self.p {
            Ok(())
        } else {
            Err(Error::DescriptorMismatch(format!(
                "({}, {}) is not reduced modulo {}",
                a.x, a.y, self.p
            )))
        }
    }

    fn encode(&self, a: &Fp2) -> Value {
        json!({ "x": a.x, "y": a.y })
    }

    fn decode(&self, v: &Value) -> Result<Fp2> {
        self.decode_pair(v)
    }

    fn random_element<G: Rng + ?Sized>(&self, rng: &mut G) -> Fp2 {
        Fp2::new(rng.gen_range(0..self.p), rng.gen_range(0..self.p))
    }

    fn random_fixed<G: Rng + ?Sized>(&self, rng: &mut G) -> Fp2 {
        Fp2::new(rng.gen_range(0..self.p), 0)
    }

    fn random_trace_zero<G: Rng + ?Sized>(&self, rng: &mut G) -> Fp2 {
        Fp2::new(0, rng.gen_range(0..self.p))
    }
}
