//! Complete orbifold maps as data.

mod circle;
mod monomial;

pub use circle::{CircleMap, CircleMapKind, CircleTheta};
pub use monomial::{compose, MapRepr, MonomialMap, ThetaHom};
