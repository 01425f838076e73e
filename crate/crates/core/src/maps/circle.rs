use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbifold::{CircleGroup, CircleQuotient};

/// The explicit circle maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CircleMapKind {
    /// `(x, y) ↦ (x, y²) / √(x² + y⁴)`, folding the circle onto its upper half.
    HalfFold,
    /// `(x, y) ↦ (x, e^{-1/y²}) / (x² + e^{-2/y²})`.
    EssentialF,
    /// `(x, y) ↦ (x, sign(y) e^{-1/y²}) / (x² + e^{-2/y²})`.
    EssentialG,
    /// `θ ↦ mθ`.
    Power(u64),
    /// The identity `S^1 → S^1 // Z_k`.
    CoveringProjection(u64),
}

/// What `Θ` does on the isotropy groups of the circle maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CircleTheta {
    Trivial,
    Identity,
    /// Rotation by `2π/k` goes to rotation by `2πm/k`.
    Multiply(u64),
}

/// A complete orbifold map between circle quotients, induced by an
/// equivariant map of the circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CircleMap {
    pub kind: CircleMapKind,
    pub domain: CircleQuotient,
    pub codomain: CircleQuotient,
    pub theta: CircleTheta,
}

impl CircleMap {
    /// `S^1 // Z_2 → S^1` induced by the half fold.
    pub fn half_fold() -> Self {
        CircleMap {
            kind: CircleMapKind::HalfFold,
            domain: CircleQuotient::reflection(),
            codomain: CircleQuotient::circle(),
            theta: CircleTheta::Trivial,
        }
    }

    /// The contractible map `S^1 // Z_2 → S^1 // Z_2` with trivial `Θ`.
    pub fn essential_f() -> Self {
        CircleMap {
            kind: CircleMapKind::EssentialF,
            domain: CircleQuotient::reflection(),
            codomain: CircleQuotient::reflection(),
            theta: CircleTheta::Trivial,
        }
    }

    /// Same underlying map as [`CircleMap::essential_f`], but `Θ` is the identity.
    pub fn essential_g() -> Self {
        CircleMap {
            kind: CircleMapKind::EssentialG,
            domain: CircleQuotient::reflection(),
            codomain: CircleQuotient::reflection(),
            theta: CircleTheta::Identity,
        }
    }

    /// `θ ↦ mθ` from `S^1 // Z_k` to `S^1 // Z_b`. The induced `Θ` sends the
    /// generator `e(1/k)` to `e(m/k)`, which must lie in `Z_b`: `k | m·b`.
    pub fn power(m: u64, k: u64, b: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidInput("power map with m = 0".into()));
        }
        let domain = CircleQuotient::rotation(k)?;
        let codomain = CircleQuotient::rotation(b)?;
        if !(m as u128 * b as u128).is_multiple_of(k as u128) {
            return Err(Error::NoHomomorphism {
                domain: k,
                multiplier: m,
                codomain: b,
            });
        }
        Ok(CircleMap {
            kind: CircleMapKind::Power(m),
            domain,
            codomain,
            theta: CircleTheta::Multiply(m),
        })
    }

    /// The orbifold covering `S^1 → S^1 // Z_k`.
    pub fn covering(k: u64) -> Result<Self> {
        Ok(CircleMap {
            kind: CircleMapKind::CoveringProjection(k),
            domain: CircleQuotient::circle(),
            codomain: CircleQuotient::rotation(k)?,
            theta: CircleTheta::Trivial,
        })
    }

    /// Whether both ends are orientable, so an oriented degree exists.
    pub fn oriented(&self) -> bool {
        self.domain.oriented
            && self.codomain.oriented
            && !matches!(self.domain.group, CircleGroup::Reflection)
            && !matches!(self.codomain.group, CircleGroup::Reflection)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stored_theta_matches_kind() {
        assert_eq!(CircleMap::half_fold().theta, CircleTheta::Trivial);
        assert_eq!(CircleMap::essential_f().theta, CircleTheta::Trivial);
        assert_eq!(CircleMap::essential_g().theta, CircleTheta::Identity);
        assert!(!CircleMap::essential_g().oriented());
        assert!(CircleMap::covering(3).unwrap().oriented());
    }

    #[test]
    fn power_needs_homomorphism() {
        assert!(CircleMap::power(6, 3, 1).is_ok());
        assert!(CircleMap::power(2, 4, 2).is_ok());
        assert_eq!(
            CircleMap::power(2, 3, 1),
            Err(Error::NoHomomorphism {
                domain: 3,
                multiplier: 2,
                codomain: 1
            })
        );
    }
}
