//! Executable property suites for the degree: local constancy, value
//! independence and its failure on the reflection quotient, multiplicativity,
//! dependence on the underlying map only, covering relations, and agreement
//! between the exact and floating-point engines.

mod checks;
pub mod corpus;
mod suites;

pub use checks::{
    check_covering, check_enumeration_oracle, check_local_constancy, check_local_constancy_path,
    check_multiplicativity, check_numeric_agreement, check_same_underlying,
    check_value_independence, phase_neighbours, probe_values, regular_supports, support_value,
    underlying_distance, Failure, MapUnderTest, PropertyReport, VerifyConfig,
};
pub use suites::{run_suite, AGREEMENT_PAIRS, CORPUS_SIZE, COVERING_GRID, SUITES};
