//! Floating-point engine: slice lifts and Jacobian certificates for monomial
//! maps, and preimage counting for the circle maps.

mod arc;
mod circle;
mod jacobian;
mod slice;

pub use arc::{
    arc_parameters, numeric_preimages, sample_path, singular_arc, write_arc_csv, ArcSample,
    NumericPreimage,
};
pub use circle::{
    circle_degree2, circle_eval, covering_degree, covering_projection_degree, CircleDegree,
    CirclePreimage, CirclePreimageSet,
};
pub use jacobian::{lift_jacobian, numeric_jacobian, JacobianReport};
pub use slice::{
    act, hat_map, orbit_tangent, slice_lift, LiftCharts, LiftEvaluation, NumericConfig, SliceChart,
};
