use std::f64::consts::{PI, TAU};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Finite group acting on the unit circle `S^1 ⊂ R^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CircleGroup {
    /// `Z_k` acting by rotation through `2π/k`; `k = 1` is the trivial group.
    Rotation(u64),
    /// `Z_2` acting by `(x, y) ↦ (x, -y)`.
    Reflection,
}

/// The quotient orbifold `S^1 // G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CircleQuotient {
    pub group: CircleGroup,
    pub oriented: bool,
}

impl CircleQuotient {
    /// `S^1 // Z_k` by rotations. A free action, so the quotient is again a circle.
    pub fn rotation(k: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidInput("rotation group of order 0".into()));
        }
        Ok(CircleQuotient {
            group: CircleGroup::Rotation(k),
            oriented: true,
        })
    }

    /// The plain circle.
    pub fn circle() -> Self {
        CircleQuotient {
            group: CircleGroup::Rotation(1),
            oriented: true,
        }
    }

    /// `S^1 // Z_2` by reflection: a closed interval with two `Z_2` endpoints.
    pub fn reflection() -> Self {
        CircleQuotient {
            group: CircleGroup::Reflection,
            oriented: false,
        }
    }

    pub fn group_order(&self) -> u64 {
        match self.group {
            CircleGroup::Rotation(k) => k,
            CircleGroup::Reflection => 2,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.group == CircleGroup::Rotation(1)
    }

    /// Isotropy order at the class of the angle `theta`.
    pub fn isotropy_at(&self, theta: f64, tol: f64) -> u64 {
        match self.group {
            CircleGroup::Rotation(_) => 1,
            CircleGroup::Reflection => {
                let t = theta.rem_euclid(TAU);
                if t < tol || (t - PI).abs() < tol || TAU - t < tol {
                    2
                } else {
                    1
                }
            }
        }
    }

    /// The representative of `theta` in the fundamental domain: `[0, π]` for
    /// the reflection, `[0, 2π/k)` for rotations.
    pub fn fold(&self, theta: f64) -> f64 {
        let t = theta.rem_euclid(TAU);
        match self.group {
            CircleGroup::Rotation(k) => t.rem_euclid(TAU / k as f64),
            CircleGroup::Reflection => {
                if t > PI {
                    TAU - t
                } else {
                    t
                }
            }
        }
    }

    /// Distance between two folded angles, respecting the wrap-around of
    /// rotation quotients.
    pub fn folded_distance(&self, a: f64, b: f64) -> f64 {
        let d = (self.fold(a) - self.fold(b)).abs();
        match self.group {
            CircleGroup::Rotation(k) => d.min(TAU / k as f64 - d),
            CircleGroup::Reflection => d,
        }
    }

    /// All angles upstairs lying over the class of `theta`.
    pub fn orbit(&self, theta: f64) -> Vec<f64> {
        match self.group {
            CircleGroup::Rotation(k) => (0..k)
                .map(|j| (theta + TAU * j as f64 / k as f64).rem_euclid(TAU))
                .collect(),
            CircleGroup::Reflection => vec![theta.rem_euclid(TAU), (-theta).rem_euclid(TAU)],
        }
    }
}

impl fmt::Display for CircleQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.group {
            CircleGroup::Rotation(1) => write!(f, "S^1"),
            CircleGroup::Rotation(k) => write!(f, "S^1//Z_{k}"),
            CircleGroup::Reflection => write!(f, "S^1//Z_2(reflection)"),
        }
    }
}
