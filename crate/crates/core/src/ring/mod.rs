//! Commutative rings with an involution `sigma`.
//!
//! Three backends model the ring of integers of an unramified quadratic
//! extension together with its Galois involution:
//!
//! - [`QuadraticFiniteField`]: the residue field `F_p[w]`, `w^2 = d`, `d` a non-residue.
//! - [`TruncatedSeries`]: power series over `F_p[w]` truncated at `pi^N`
//!   (the equal-characteristic ring of integers modulo `pi^N`).
//! - [`GaussianRationals`]: `Q[i]`, `i^2 = -1`, an infinite-characteristic harness.
//!
//! Elements are plain values. Arithmetic goes through the ring object, which
//! knows the modulus and precision; [`InvolutiveRing::validate`] rejects
//! payloads that belong to a different descriptor.

mod arith;
mod descriptor;
mod gaussian;
mod quadratic;
mod series;

pub use arith::{is_prime, is_quadratic_residue, pow_mod};
pub use descriptor::{BackendTag, Descriptor};
pub use gaussian::{GaussianRational, GaussianRationals};
pub use quadratic::{Fp2, QuadraticFiniteField};
pub use series::{PowerSeries, TruncatedSeries};

use std::fmt::Debug;

use rand::Rng;
use serde_json::Value;

use crate::error::Result;

pub trait InvolutiveRing: Send + Sync {
    type El: Clone + PartialEq + Eq + Debug + Send + Sync;

    fn descriptor(&self) -> Descriptor;

    /// Characteristic of the residue field; 0 for the rational backend.
    fn residue_characteristic(&self) -> u64;

    fn zero(&self) -> Self::El;
    fn one(&self) -> Self::El;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, value: i64) -> Self::El;

    fn add(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn sub(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn mul(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn neg(&self, a: &Self::El) -> Self::El;
    fn sigma(&self, a: &Self::El) -> Self::El;

    fn is_unit(&self, a: &Self::El) -> bool;
    /// Exact inverse, or [`Error::NonInvertible`](crate::Error::NonInvertible).
    fn invert(&self, a: &Self::El) -> Result<Self::El>;

    /// A canonical unit `alpha` with `alpha + sigma(alpha) = 0`.
    fn choose_alpha(&self) -> Result<Self::El>;

    /// Checks that `a` is in canonical form for this descriptor.
    fn validate(&self, a: &Self::El) -> Result<()>;

    fn encode(&self, a: &Self::El) -> Value;
    fn decode(&self, v: &Value) -> Result<Self::El>;

    fn random_element<G: Rng + ?Sized>(&self, rng: &mut G) -> Self::El;
    /// Uniform-ish draw from the sigma-fixed subring.
    fn random_fixed<G: Rng + ?Sized>(&self, rng: &mut G) -> Self::El;
    /// Draw from `{x : x + sigma(x) = 0}`.
    fn random_trace_zero<G: Rng + ?Sized>(&self, rng: &mut G) -> Self::El;

    fn is_zero(&self, a: &Self::El) -> bool {
        *a == self.zero()
    }

    fn trace(&self, a: &Self::El) -> Self::El {
        self.add(a, &self.sigma(a))
    }

    fn norm(&self, a: &Self::El) -> Self::El {
        self.mul(a, &self.sigma(a))
    }

    fn pow(&self, a: &Self::El, mut exp: u64) -> Self::El {
        let mut base = a.clone();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    /// `a` if `k` is even, `-a` otherwise.
    fn signed(&self, a: &Self::El, k: usize) -> Self::El {
        if k.is_multiple_of(2) {
            a.clone()
        } else {
            self.neg(a)
        }
    }

    /// Whether `sigma(a) = (-1)^k a`.
    fn has_parity(&self, a: &Self::El, k: usize) -> bool {
        self.sigma(a) == self.signed(a, k)
    }

    fn is_trace_zero_unit(&self, a: &Self::El) -> bool {
        self.is_unit(a) && self.is_zero(&self.trace(a))
    }
}
