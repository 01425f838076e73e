//! Exact models of the supported orbifolds: weighted projective spaces and
//! finite quotients of the circle.

mod circle;
mod root;
mod strata;
mod wps;

pub use circle::{CircleGroup, CircleQuotient};
pub use root::{ExactCoordinate, RootOfUnity};
pub use strata::{StrataReport, Stratified, StratumComponent, StratumRecord};
pub use wps::{IsotropyGroup, WpsOrbifold, WpsPoint};

pub(crate) use wps::gcd_all;
