use thiserror::Error;

/// Everything that can go wrong while building orbifolds and maps or
/// computing their degrees.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("weights {0:?} are not effective: gcd is {1}")]
    NotEffective(Vec<u64>, u64),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("map is not equivariant: {0}")]
    NotEquivariant(String),

    #[error("weight mismatch: target {target:?} does not match source {source_weights:?}")]
    WeightMismatch {
        target: Vec<u64>,
        source_weights: Vec<u64>,
    },

    #[error("value {0} is not a regular value")]
    NotRegular(String),

    #[error("enumeration needs {needed} tuples, cap is {cap}")]
    EnumerationCapExceeded { needed: u128, cap: u64 },

    #[error("non-integral weight {num}/{den}")]
    NonIntegralWeight { num: u64, den: u64 },

    #[error("closed-form degree {num}/{den} is not an integer")]
    NonIntegral { num: u128, den: u128 },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("internal invariant broken: {0}")]
    Internal(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("slice correction did not converge (residual {residual:e}, phase {phase})")]
    NewtonDiverged { residual: f64, phase: f64 },

    #[error("irregular point: smallest singular value {0:e}")]
    IrregularPoint(f64),

    #[error("critical value: preimage at angle {angle} has derivative {derivative:e}")]
    CriticalValue { angle: f64, derivative: f64 },

    #[error("root refinement did not converge near angle {0}")]
    NoConvergence(f64),

    #[error("no homomorphism Z_{domain} -> Z_{codomain} for multiplier {multiplier}")]
    NoHomomorphism {
        domain: u64,
        multiplier: u64,
        codomain: u64,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
