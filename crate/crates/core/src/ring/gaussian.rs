use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde_json::{json, Value};

use super::descriptor::Descriptor;
use super::InvolutiveRing;
use crate::error::{Error, Result};

/// `x + y*i` with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub x: BigRational,
    pub y: BigRational,
}

impl GaussianRational {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        GaussianRational { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        GaussianRational::new(BigRational::from_integer(x.into()), BigRational::from_integer(y.into()))
    }
}

/// `Q(i)` with complex conjugation. Every nonzero element is a unit and 2
/// is invertible, so all constructions apply.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GaussianRationals;

const RANDOM_NUMERATOR: i64 = 9;
const RANDOM_DENOMINATOR: i64 = 5;

fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn parse_rational(v: &Value) -> Result<BigRational> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|i| BigRational::from_integer(i.into()))
            .ok_or_else(|| Error::Parse(format!("non-integer number {n}; use \"num/den\""))),
        Value::String(s) => {
            let s = s.trim();
            let (num, den) = s.split_once('/').unwrap_or((s, "1"));
            let num: BigInt = num
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad rational '{s}'")))?;
            let den: BigInt = den
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad rational '{s}'")))?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in '{s}'")));
            }
            Ok(BigRational::new(num, den))
        }
        _ => Err(Error::Parse(format!("expected rational literal, got {v}"))),
    }
}

fn random_rational<G: Rng + ?Sized>(rng: &mut G) -> BigRational {
    let num = rng.gen_range(-RANDOM_NUMERATOR..=RANDOM_NUMERATOR);
    let den = rng.gen_range(1..=RANDOM_DENOMINATOR);
    BigRational::new(num.into(), den.into())
}

impl InvolutiveRing for GaussianRationals {
    type El = GaussianRational;

    fn descriptor(&self) -> Descriptor {
        Descriptor::rational()
    }

    fn residue_characteristic(&self) -> u64 {
        0
    }

    fn zero(&self) -> GaussianRational {
        GaussianRational::from_ints(0, 0)
    }

    fn one(&self) -> GaussianRational {
        GaussianRational::from_ints(1, 0)
    }

    fn from_i64(&self, value: i64) -> GaussianRational {
        GaussianRational::from_ints(value, 0)
    }

    fn add(&self, a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&a.x + &b.x, &a.y + &b.y)
    }

    fn sub(&self, a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&a.x - &b.x, &a.y - &b.y)
    }

    fn mul(&self, a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&a.x * &b.x - &a.y * &b.y, &a.x * &b.y + &a.y * &b.x)
    }

    fn neg(&self, a: &GaussianRational) -> GaussianRational {
        GaussianRational::new(-&a.x, -&a.y)
    }

    fn sigma(&self, a: &GaussianRational) -> GaussianRational {
        GaussianRational::new(a.x.clone(), -&a.y)
    }

    fn is_unit(&self, a: &GaussianRational) -> bool {
        !(a.x.is_zero() && a.y.is_zero())
    }

    fn invert(&self, a: &GaussianRational) -> Result<GaussianRational> {
        if !self.is_unit(a) {
            return Err(Error::NonInvertible("0".into()));
        }
        let norm = &a.x * &a.x + &a.y * &a.y;
        Ok(GaussianRational::new(&a.x / &norm, -&a.y / &norm))
    }

    fn choose_alpha(&self) -> Result<GaussianRational> {
        Ok(GaussianRational::from_ints(0, 1))
    }

    fn validate(&self, a: &GaussianRational) -> Result<()> {
        // BigRational keeps itself reduced with a positive denominator.
        for q in [&a.x, &a.y] {
            if !q.denom().is_positive() {
                return Err(Error::DescriptorMismatch(format!("non-canonical rational {q}")));
            }
        }
        Ok(())
    }

    fn encode(&self, a: &GaussianRational) -> Value {
        json!({ "x": format_rational(&a.x), "y": format_rational(&a.y) })
    }

    fn decode(&self, v: &Value) -> Result<GaussianRational> {
        let (x, y) = match v {
            Value::Object(map) => (map.get("x"), map.get("y")),
            Value::Array(items) if items.len() == 2 => (items.first(), items.get(1)),
            _ => (None, None),
        };
        match (x, y) {
            (Some(x), Some(y)) => Ok(GaussianRational::new(parse_rational(x)?, parse_rational(y)?)),
            _ => Err(Error::Parse(format!(
                "expected {{\"x\": \"n/d\", \"y\": \"n/d\"}}, got {v}"
            ))),
        }
    }

    fn random_element<G: Rng + ?Sized>(&self, rng: &mut G) -> GaussianRational {
        GaussianRational::new(random_rational(rng), random_rational(rng))
    }

    fn random_fixed<G: Rng + ?Sized>(&self, rng: &mut G) -> GaussianRational {
        GaussianRational::new(random_rational(rng), BigRational::zero())
    }

    fn random_trace_zero<G: Rng + ?Sized>(&self, rng: &mut G) -> GaussianRational {
        GaussianRational::new(BigRational::zero(), random_rational(rng))
    }
}
