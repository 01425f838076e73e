//! Mapping degrees of complete orbifold maps.
//!
//! The crate computes weighted preimage counts, mod-2 degrees and oriented
//! degrees for two concrete families:
//!
//! * monomial maps between weighted projective spaces `CP^n(q) → CP^n(r)`,
//!   handled exactly over roots of unity ([`exact`]);
//! * maps between finite quotients of the circle, handled numerically
//!   ([`numeric`]), together with a slice-lift engine that cross-checks the
//!   exact results in floating point.
//!
//! [`verify`] turns the invariance properties of the degree into executable
//! suites, and [`cli`] backs the `orbideg` binary.
//!
//! ```
//! use orbifold_degree::exact::{degree, ExactConfig};
//! use orbifold_degree::maps::MonomialMap;
//! use orbifold_degree::orbifold::WpsOrbifold;
//!
//! let q = WpsOrbifold::new(vec![1, 2, 3]).unwrap();
//! let g = MonomialMap::g_q(&q);
//! let result = degree(&g, None, &ExactConfig::default()).unwrap();
//! assert_eq!(result.degree, 6);
//! ```

pub mod cli;
pub mod error;
pub mod exact;
pub mod maps;
pub mod numeric;
pub mod orbifold;
pub mod verify;

pub use error::{Error, Result};
