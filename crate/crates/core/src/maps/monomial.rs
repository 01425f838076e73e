//! Monomial maps `[z_0 : … : z_n]_q ↦ [z_0^{e_0} : … : z_n^{e_n}]_r`.
//!
//! The coordinate-power lift `ẑ ↦ (z_i^{e_i})` is equivariant for
//! `Θ(γ) = γ^d` exactly when `q_i · e_i = d · r_i` for every `i`, which is
//! the condition enforced here. It is closed under composition.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbifold::{ExactCoordinate, WpsOrbifold, WpsPoint};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MapRepr", into = "MapRepr")]
pub struct MonomialMap {
    source: WpsOrbifold,
    target: WpsOrbifold,
    exponents: Vec<u64>,
    degree_d: u64,
}

/// Wire form of a map. `d` is always derived, never read.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MapRepr {
    pub q: Vec<u64>,
    pub r: Vec<u64>,
    pub e: Vec<u64>,
}

impl TryFrom<MapRepr> for MonomialMap {
    type Error = Error;
    fn try_from(m: MapRepr) -> Result<Self> {
        MonomialMap::new(m.q, m.r, m.e)
    }
}

impl From<MonomialMap> for MapRepr {
    fn from(m: MonomialMap) -> Self {
        MapRepr {
            q: m.source.weights().to_vec(),
            r: m.target.weights().to_vec(),
            e: m.exponents,
        }
    }
}

impl MonomialMap {
    /// Builds the map and derives its equivariance degree `d`.
    pub fn new(q: Vec<u64>, r: Vec<u64>, e: Vec<u64>) -> Result<Self> {
        if q.len() != r.len() || q.len() != e.len() {
            return Err(Error::InvalidInput(format!(
                "lengths differ: q={}, r={}, e={}",
                q.len(),
                r.len(),
                e.len()
            )));
        }
        if e.contains(&0) {
            return Err(Error::InvalidInput(format!("exponents {e:?} contain 0")));
        }
        let source = WpsOrbifold::new(q)?;
        let target = WpsOrbifold::new(r)?;
        Self::from_parts(source, target, e)
    }

    pub fn from_parts(source: WpsOrbifold, target: WpsOrbifold, e: Vec<u64>) -> Result<Self> {
        let q = source.weights();
        let r = target.weights();
        let mut d = None;
        for i in 0..q.len() {
            let num = q[i].checked_mul(e[i]).ok_or(Error::Overflow("q_i * e_i"))?;
            let (di, rem) = num.div_rem(&r[i]);
            if rem != 0 {
                return Err(Error::NotEquivariant(format!(
                    "q_{i}·e_{i}/r_{i} = {num}/{} is not an integer",
                    r[i]
                )));
            }
            match d {
                None => d = Some(di),
                Some(d0) if d0 != di => {
                    return Err(Error::NotEquivariant(format!(
                        "q_i·e_i/r_i is not constant: {d0} vs {di} at i={i}"
                    )))
                }
                _ => {}
            }
        }
        Ok(MonomialMap {
            source,
            target,
            exponents: e,
            degree_d: d.expect("nonempty weights"),
        })
    }

    pub fn identity(space: &WpsOrbifold) -> Self {
        MonomialMap {
            source: space.clone(),
            target: space.clone(),
            exponents: vec![1; space.weights().len()],
            degree_d: 1,
        }
    }

    /// `f_q : CP^n → CP^n(q)`, `z_i ↦ z_i^{q_i}`.
    pub fn f_q(q: &WpsOrbifold) -> Self {
        MonomialMap {
            source: WpsOrbifold::projective(q.complex_dim()),
            target: q.clone(),
            exponents: q.weights().to_vec(),
            degree_d: 1,
        }
    }

    /// `g_q : CP^n(q) → CP^n`, `z_i ↦ z_i^{lcm(q)/q_i}`.
    pub fn g_q(q: &WpsOrbifold) -> Self {
        let l = q.lcm();
        MonomialMap {
            source: q.clone(),
            target: WpsOrbifold::projective(q.complex_dim()),
            exponents: q.weights().iter().map(|w| l / w).collect(),
            degree_d: l,
        }
    }

    /// `h_rq = f_r ∘ g_q : CP^n(q) → CP^n(r)`.
    pub fn h_rq(r: &WpsOrbifold, q: &WpsOrbifold) -> Result<Self> {
        Self::g_q(q).then(&Self::f_q(r))
    }

    pub fn source(&self) -> &WpsOrbifold {
        &self.source
    }

    pub fn target(&self) -> &WpsOrbifold {
        &self.target
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// The `d` of `Θ(γ) = γ^d`.
    pub fn equivariance_degree(&self) -> u64 {
        self.degree_d
    }

    /// `other ∘ self`: first `self`, then `other`.
    pub fn then(&self, other: &MonomialMap) -> Result<MonomialMap> {
        compose(self, other)
    }

    /// Coordinate-wise exact powers, canonicalized in the target.
    pub fn underlying_image(&self, x: &WpsPoint) -> Result<WpsPoint> {
        if x.space() != &self.source {
            return Err(Error::WeightMismatch {
                target: self.source.weights().to_vec(),
                source_weights: x.weights().to_vec(),
            });
        }
        let coords: Vec<ExactCoordinate> = x
            .coords()
            .iter()
            .zip(&self.exponents)
            .map(|(c, &e)| c.pow(e))
            .collect();
        self.target.point(coords)
    }

    /// `Θ_x : Γ_x → Γ_{f(x)}`, `γ ↦ γ^d`.
    pub fn theta_at(&self, x: &WpsPoint) -> Result<ThetaHom> {
        let y = self.underlying_image(x)?;
        Ok(ThetaHom::new(
            x.isotropy().order,
            y.isotropy().order,
            self.degree_d,
        ))
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.exponents.iter().all(|&e| e == 1)
    }
}

/// Composition `g ∘ f`: requires the target of `f` to be the source of `g`.
/// Exponents multiply coordinate-wise and so do equivariance degrees.
pub fn compose(f: &MonomialMap, g: &MonomialMap) -> Result<MonomialMap> {
    if f.target != g.source {
        return Err(Error::WeightMismatch {
            target: f.target.weights().to_vec(),
            source_weights: g.source.weights().to_vec(),
        });
    }
    let exponents = f
        .exponents
        .iter()
        .zip(&g.exponents)
        .map(|(a, b)| {
            a.checked_mul(*b)
                .ok_or(Error::Overflow("composed exponent"))
        })
        .collect::<Result<Vec<_>>>()?;
    let degree_d = f
        .degree_d
        .checked_mul(g.degree_d)
        .ok_or(Error::Overflow("composed equivariance degree"))?;
    Ok(MonomialMap {
        source: f.source.clone(),
        target: g.target.clone(),
        exponents,
        degree_d,
    })
}

impl fmt::Debug for MonomialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "MonomialMap(q={:?}, r={:?}, e={:?}, d={})",
            self.source.weights(),
            self.target.weights(),
            self.exponents,
            self.degree_d
        )
    }
}

impl fmt::Display for MonomialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} -> {} by e={:?}",
            self.source, self.target, self.exponents
        )
    }
}

/// The homomorphism `μ_{m_x} → μ_{m_y}`, `γ ↦ γ^d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ThetaHom {
    pub source_order: u64,
    pub target_order: u64,
    /// `d` reduced mod `target_order`.
    pub exponent: u64,
    pub kernel_order: u64,
    d: u64,
}

impl ThetaHom {
    pub fn new(source_order: u64, target_order: u64, d: u64) -> Self {
        debug_assert_eq!(
            (d * target_order) % source_order,
            0,
            "γ^d must land in μ_m_y"
        );
        ThetaHom {
            source_order,
            target_order,
            exponent: d % target_order,
            kernel_order: source_order.gcd(&d),
            d,
        }
    }

    pub fn is_injective(&self) -> bool {
        self.kernel_order == 1
    }

    /// Image of `exp(2πi k / m_x)` as an exponent mod `m_y`.
    pub fn apply(&self, k: u64) -> u64 {
        // γ = e(k/m_x) ↦ e(k·d/m_x) = e((k·d·m_y/m_x)/m_y), and m_x | d·m_y.
        let scaled =
            (k as u128 * self.d as u128 * self.target_order as u128) / self.source_order as u128;
        (scaled % self.target_order as u128) as u64
    }
}
