//! Exact construction and verification of the Kostant section for the
//! unitary Lie algebra `u_n` attached to an unramified quadratic extension.
//!
//! The crate is organised bottom-up:
//!
//! - [`ring`]: rings with involution (finite field, truncated series, `Q(i)`)
//! - [`matrix`], [`charpoly`]: dense linear algebra, the Gram matrix, the
//!   membership test, and division-free characteristic polynomials
//! - [`section`]: invariant tuples, the section matrix and its verification
//! - [`harness`]: seeded sampling, the symbolic oracle, and property campaigns
//! - [`backend`]: runtime dispatch over the concrete rings

pub mod backend;
pub mod charpoly;
pub mod error;
pub mod harness;
pub mod matrix;
pub mod ring;
pub mod section;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use ring::InvolutiveRing;
