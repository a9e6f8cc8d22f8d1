use rand::Rng;
use serde_json::{json, Value};

use super::descriptor::Descriptor;
use super::quadratic::{Fp2, QuadraticFiniteField};
use super::InvolutiveRing;
use crate::error::{Error, Result};

/// `sum_k c_k pi^k` for `k < N`, coefficients in `F_p[w]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    coeffs: Vec<Fp2>,
}

impl PowerSeries {
    pub fn coeffs(&self) -> &[Fp2] {
        &self.coeffs
    }
}

/// `F_{p^2}[[pi]] / (pi^N)`: the unramified quadratic extension of
/// `F_p[[pi]]` modulo `pi^N`, with `sigma` acting coefficientwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    residue: QuadraticFiniteField,
    precision: usize,
}

impl TruncatedSeries {
    pub fn new(p: u64, d: u64, precision: usize) -> Result<Self> {
        let residue = QuadraticFiniteField::new(p, d)?;
        if precision == 0 {
            return Err(Error::InvalidDescriptor("precision N must be at least 1".into()));
        }
        Ok(TruncatedSeries { residue, precision })
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn residue_field(&self) -> &QuadraticFiniteField {
        &self.residue
    }

    /// Builds a series from its leading coefficients, padding with zeros.
    pub fn from_coeffs(&self, mut coeffs: Vec<Fp2>) -> Result<PowerSeries> {
        if coeffs.len() > self.precision {
            return Err(Error::DescriptorMismatch(format!(
                "{} coefficients exceed precision {}",
                coeffs.len(),
                self.precision
            )));
        }
        for c in &coeffs {
            self.residue.validate(c)?;
        }
        coeffs.resize(self.precision, self.residue.zero());
        Ok(PowerSeries { coeffs })
    }

    pub fn constant(&self, c: Fp2) -> PowerSeries {
        let mut coeffs = vec![self.residue.zero(); self.precision];
        coeffs[0] = c;
        PowerSeries { coeffs }
    }

    /// The uniformizer; zero when `N = 1`.
    pub fn pi(&self) -> PowerSeries {
        let mut coeffs = vec![self.residue.zero(); self.precision];
        if self.precision > 1 {
            coeffs[1] = self.residue.one();
        }
        PowerSeries { coeffs }
    }

    fn map(&self, a: &PowerSeries, f: impl Fn(&Fp2) -> Fp2) -> PowerSeries {
        PowerSeries {
            coeffs: a.coeffs.iter().map(f).collect(),
        }
    }

    fn zip(&self, a: &PowerSeries, b: &PowerSeries, f: impl Fn(&Fp2, &Fp2) -> Fp2) -> PowerSeries {
        debug_assert_eq!(a.coeffs.len(), self.precision);
        debug_assert_eq!(b.coeffs.len(), self.precision);
        PowerSeries {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| f(x, y)).collect(),
        }
    }
}

impl InvolutiveRing for TruncatedSeries {
    type El = PowerSeries;

    fn descriptor(&self) -> Descriptor {
        Descriptor::series(self.residue.p(), self.residue.d(), self.precision)
    }

    fn residue_characteristic(&self) -> u64 {
        self.residue.p()
    }

    fn zero(&self) -> PowerSeries {
        self.constant(self.residue.zero())
    }

    fn one(&self) -> PowerSeries {
        self.constant(self.residue.one())
    }

    fn from_i64(&self, value: i64) -> PowerSeries {
        self.constant(self.residue.from_i64(value))
    }

    fn add(&self, a: &PowerSeries, b: &PowerSeries) -> PowerSeries {
        self.zip(a, b, |x, y| self.residue.add(x, y))
    }

    fn sub(&self, a: &PowerSeries, b: &PowerSeries) -> PowerSeries {
        self.zip(a, b, |x, y| self.residue.sub(x, y))
    }

    fn mul(&self, a: &PowerSeries, b: &PowerSeries) -> PowerSeries {
        let r = &self.residue;
        let n = self.precision;
        let mut coeffs = vec![r.zero(); n];
        for (i, ai) in a.coeffs.iter().enumerate() {
            if r.is_zero(ai) {
                continue;
            }
            for (j, bj) in b.coeffs.iter().take(n - i).enumerate() {
                coeffs[i + j] = r.add(&coeffs[i + j], &r.mul(ai, bj));
            }
        }
        PowerSeries { coeffs }
    }

    fn neg(&self, a: &PowerSeries) -> PowerSeries {
        self.map(a, |x| self.residue.neg(x))
    }

    fn sigma(&self, a: &PowerSeries) -> PowerSeries {
        self.map(a, |x| self.residue.sigma(x))
    }

    fn is_unit(&self, a: &PowerSeries) -> bool {
        self.residue.is_unit(&a.coeffs[0])
    }

    fn invert(&self, a: &PowerSeries) -> Result<PowerSeries> {
        let r = &self.residue;
        let c0_inv = r
            .invert(&a.coeffs[0])
            .map_err(|_| Error::NonInvertible(self.encode(a).to_string()))?;
        // u_0 = c_0^-1, u_k = -c_0^-1 * sum_{j=1..k} c_j u_{k-j}
        let mut inv = Vec::with_capacity(self.precision);
        inv.push(c0_inv);
        for k in 1..self.precision {
            let mut acc = r.zero();
            for j in 1..=k {
                acc = r.add(&acc, &r.mul(&a.coeffs[j], &inv[k - j]));
            }
            inv.push(r.neg(&r.mul(&c0_inv, &acc)));
        }
        Ok(PowerSeries { coeffs: inv })
    }

    fn choose_alpha(&self) -> Result<PowerSeries> {
        Ok(self.constant(self.residue.omega()))
    }

    fn validate(&self, a: &PowerSeries) -> Result<()> {
        if a.coeffs.len() != self.precision {
            return Err(Error::DescriptorMismatch(format!(
                "series has {} coefficients, precision is {}",
                a.coeffs.len(),
                self.precision
            )));
        }
        a.coeffs.iter().try_for_each(|c| self.residue.validate(c))
    }

    fn encode(&self, a: &PowerSeries) -> Value {
        let pairs: Vec<Value> = a.coeffs.iter().map(|c| json!([c.x, c.y])).collect();
        json!({ "coeffs": pairs })
    }

    fn decode(&self, v: &Value) -> Result<PowerSeries> {
        let items = match v {
            Value::Object(map) => map.get("coeffs").and_then(Value::as_array),
            Value::Array(items) => Some(items),
            _ => None,
        }
        .ok_or_else(|| Error::Parse(format!("expected {{\"coeffs\": [[x, y], ...]}}, got {v}")))?;
        if items.len() != self.precision {
            return Err(Error::DescriptorMismatch(format!(
                "series has {} coefficients, precision is {}",
                items.len(),
                self.precision
            )));
        }
        let coeffs = items
            .iter()
            .map(|c| self.residue.decode_pair(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(PowerSeries { coeffs })
    }

    fn random_element<G: Rng + ?Sized>(&self, rng: &mut G) -> PowerSeries {
        PowerSeries {
            coeffs: (0..self.precision).map(|_| self.residue.random_element(rng)).collect(),
        }
    }

    fn random_fixed<G: Rng + ?Sized>(&self, rng: &mut G) -> PowerSeries {
        PowerSeries {
            coeffs: (0..self.precision).map(|_| self.residue.random_fixed(rng)).collect(),
        }
    }

    fn random_trace_zero<G: Rng + ?Sized>(&self, rng: &mut G) -> PowerSeries {
        PowerSeries {
            coeffs: (0..self.precision)
                .map(|_| self.residue.random_trace_zero(rng))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn pi_is_not_a_unit() {
        let r = TruncatedSeries::new(3, 2, 2).unwrap();
        assert!(!r.is_unit(&r.pi()));
        assert!(matches!(r.invert(&r.pi()), Err(Error::NonInvertible(_))));
    }

    #[test]
    fn truncation() {
        let r = TruncatedSeries::new(5, 2, 3).unwrap();
        let pi = r.pi();
        let pi2 = r.mul(&pi, &pi);
        assert_eq!(pi2.coeffs()[2], Fp2::new(1, 0));
        assert!(r.is_zero(&r.mul(&pi2, &pi)));
    }

    #[test]
    fn inverse_of_one_plus_pi() {
        // (1 + pi)^-1 = 1 - pi + pi^2 - pi^3 mod pi^4
        let r = TruncatedSeries::new(5, 2, 4).unwrap();
        let u = r.add(&r.one(), &r.pi());
        let inv = r.invert(&u).unwrap();
        let m1 = Fp2::new(4, 0);
        let one = Fp2::new(1, 0);
        assert_eq!(inv.coeffs(), &[one, m1, one, m1]);
    }

    #[test]
    fn random_units_invert() {
        let r = TruncatedSeries::new(7, 3, 5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let a = r.random_element(&mut rng);
            if r.is_unit(&a) {
                assert_eq!(r.mul(&a, &r.invert(&a).unwrap()), r.one());
            }
        }
    }

    #[test]
    fn alpha_constant_omega() {
        let r = TruncatedSeries::new(5, 2, 3).unwrap();
        let a = r.choose_alpha().unwrap();
        assert!(r.is_unit(&a));
        assert!(r.is_trace_zero_unit(&a));
    }

    #[test]
    fn rejects_bad_descriptors() {
        assert_eq!(TruncatedSeries::new(2, 1, 3), Err(Error::NonInvertibleTwo));
        assert!(matches!(
            TruncatedSeries::new(5, 2, 0),
            Err(Error::InvalidDescriptor(_))
        ));
    }

    #[test]
    fn json_forms() {
        let r = TruncatedSeries::new(3, 2, 2).unwrap();
        let el = r.from_coeffs(vec![Fp2::new(1, 0), Fp2::new(0, 2)]).unwrap();
        assert_eq!(r.encode(&el).to_string(), r#"{"coeffs":[[1,0],[0,2]]}"#);
        assert_eq!(r.decode(&r.encode(&el)).unwrap(), el);
        assert!(r.decode(&serde_json::json!({"coeffs": [[1, 0]]})).is_err());
    }
}
