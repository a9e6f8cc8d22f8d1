//! Seeded sampling, brute-force oracles, and property campaigns.

mod campaign;
mod sample;
mod symbolic;

pub use campaign::{run_campaign, CampaignKind, CampaignReport, SampleConfig};
pub use sample::{random_invariant_tuple, random_lie_element, random_matrix, sample_u_n, substream_rng};
pub use symbolic::{
    cofactor_char_poly, laplace_determinant, oracle_analysis, symbolic_charpoly_oracle, Monomial, OracleAnalysis,
    SymbolicPolynomial, ORACLE_MAX_N,
};
