//! The exact degree engine for monomial maps between weighted projective
//! spaces: regularity, preimage enumeration, weighted cardinality and degrees.

mod degree;
mod orbits;

pub use degree::{
    degree, degree_closed_form, is_regular_value, preimage_count, preimages,
    regularity_certificate, smooth_preimage_check, weighted_cardinality, DegreeResult, ExactConfig,
    PreimageRecord, RegularityCertificate, DEFAULT_ENUMERATION_CAP,
};
pub use orbits::OrbitPlan;
