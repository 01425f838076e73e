//! Weighted projective spaces `CP^n(q)` and their exact points.
//!
//! A point is an orbit of the weighted circle action
//! `γ · (z_0, …, z_n) = (γ^{q_0} z_0, …, γ^{q_n} z_n)` on a tuple whose
//! coordinates are all zero or roots of unity. Each point is stored in a
//! canonical representative so that equality of points is equality of
//! structs.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::root::{ExactCoordinate, RootOfUnity};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "WeightsRepr", into = "WeightsRepr")]
pub struct WpsOrbifold {
    weights: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct WeightsRepr {
    weights: Vec<u64>,
}

impl TryFrom<WeightsRepr> for WpsOrbifold {
    type Error = Error;
    fn try_from(r: WeightsRepr) -> Result<Self> {
        WpsOrbifold::new(r.weights)
    }
}

impl From<WpsOrbifold> for WeightsRepr {
    fn from(o: WpsOrbifold) -> Self {
        WeightsRepr { weights: o.weights }
    }
}

/// gcd of a list of weights; `0` for an empty list.
pub(crate) fn gcd_all<I: IntoIterator<Item = u64>>(it: I) -> u64 {
    it.into_iter().fold(0, |g, w| g.gcd(&w))
}

impl WpsOrbifold {
    /// `CP^n(q)` for `q = (q_0, …, q_n)`. The weights must be positive with
    /// overall gcd 1, otherwise the action is not effective.
    pub fn new(weights: impl Into<Vec<u64>>) -> Result<Self> {
        let weights = weights.into();
        if weights.is_empty() {
            return Err(Error::InvalidInput("weight list is empty".into()));
        }
        if weights.contains(&0) {
            return Err(Error::InvalidInput(format!(
                "weights {weights:?} contain 0"
            )));
        }
        let g = gcd_all(weights.iter().copied());
        if g != 1 {
            return Err(Error::NotEffective(weights, g));
        }
        Ok(WpsOrbifold { weights })
    }

    /// Ordinary projective space `CP^n`.
    pub fn projective(n: usize) -> Self {
        WpsOrbifold {
            weights: vec![1; n + 1],
        }
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// Complex dimension `n`.
    pub fn complex_dim(&self) -> usize {
        self.weights.len() - 1
    }

    /// Real dimension `2n`.
    pub fn real_dim(&self) -> usize {
        2 * self.complex_dim()
    }

    pub fn lcm(&self) -> u64 {
        self.weights.iter().fold(1, |l, w| l.lcm(w))
    }

    pub fn point(&self, coords: impl Into<Vec<ExactCoordinate>>) -> Result<WpsPoint> {
        WpsPoint::new(self.clone(), coords.into())
    }

    /// `[1:1:…:1]`.
    pub fn ones(&self) -> WpsPoint {
        self.point(vec![ExactCoordinate::ONE; self.weights.len()])
            .expect("all-ones point is valid")
    }

    /// The coordinate vertex `[0:…:1:…:0]` with the `1` in slot `i`.
    pub fn vertex(&self, i: usize) -> Result<WpsPoint> {
        if i >= self.weights.len() {
            return Err(Error::InvalidInput(format!(
                "vertex index {i} out of range"
            )));
        }
        let mut c = vec![ExactCoordinate::Zero; self.weights.len()];
        c[i] = ExactCoordinate::ONE;
        self.point(c)
    }

    /// Applies `γ` to a raw representative without canonicalizing.
    pub fn act(&self, coords: &[ExactCoordinate], gamma: RootOfUnity) -> Vec<ExactCoordinate> {
        coords
            .iter()
            .zip(&self.weights)
            .map(|(c, &w)| c.scale(gamma.pow(w as i64)))
            .collect()
    }
}

impl fmt::Debug for WpsOrbifold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CP^{}{:?}", self.complex_dim(), self.weights)
    }
}

impl fmt::Display for WpsOrbifold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CP^{}({})", self.complex_dim(), join(&self.weights))
    }
}

fn join<T: fmt::Display>(xs: &[T]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// A point of a weighted projective space, stored canonically.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PointRepr", into = "PointRepr")]
pub struct WpsPoint {
    space: WpsOrbifold,
    coords: Vec<ExactCoordinate>,
}

#[derive(Serialize, Deserialize)]
struct PointRepr {
    weights: Vec<u64>,
    coords: Vec<ExactCoordinate>,
}

impl TryFrom<PointRepr> for WpsPoint {
    type Error = Error;
    fn try_from(r: PointRepr) -> Result<Self> {
        WpsPoint::new(WpsOrbifold::new(r.weights)?, r.coords)
    }
}

impl From<WpsPoint> for PointRepr {
    fn from(p: WpsPoint) -> Self {
        PointRepr {
            weights: p.space.weights,
            coords: p.coords,
        }
    }
}

impl WpsPoint {
    pub fn new(space: WpsOrbifold, coords: Vec<ExactCoordinate>) -> Result<Self> {
        if coords.len() != space.weights.len() {
            return Err(Error::InvalidInput(format!(
                "{} coordinates for {} weights",
                coords.len(),
                space.weights.len()
            )));
        }
        if coords.iter().all(|c| c.is_zero()) {
            return Err(Error::InvalidInput("all coordinates are zero".into()));
        }
        let coords = canonicalize(&space.weights, &coords);
        Ok(WpsPoint { space, coords })
    }

    pub fn space(&self) -> &WpsOrbifold {
        &self.space
    }

    pub fn weights(&self) -> &[u64] {
        &self.space.weights
    }

    /// The canonical representative.
    pub fn coords(&self) -> &[ExactCoordinate] {
        &self.coords
    }

    /// Indices of the nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        support_of(&self.coords)
    }

    pub fn has_full_support(&self) -> bool {
        self.coords.iter().all(|c| !c.is_zero())
    }

    /// The cyclic isotropy group `Z_m` with `m = gcd{q_i : z_i ≠ 0}`, together
    /// with the weights by which it acts on the standard chart that slices
    /// at the first nonzero coordinate.
    pub fn isotropy(&self) -> IsotropyGroup {
        let support = self.support();
        let order = gcd_all(support.iter().map(|&i| self.space.weights[i]));
        let slicing = support[0];
        let chart_weights = self
            .space
            .weights
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != slicing)
            .map(|(_, &w)| w % order)
            .collect();
        IsotropyGroup {
            order,
            slicing_coordinate: slicing,
            chart_weights,
        }
    }

    pub fn is_smooth(&self) -> bool {
        self.isotropy().order == 1
    }

    /// Real dimension of the subspace of the chart fixed by the isotropy
    /// group: two for every complex chart direction on which it acts trivially.
    pub fn singular_dimension(&self) -> usize {
        self.isotropy().fixed_real_dim()
    }

    pub fn to_complex(&self) -> Vec<num_complex::Complex64> {
        self.coords.iter().map(|c| c.to_complex()).collect()
    }
}

impl PartialOrd for WpsPoint {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WpsPoint {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.space
            .weights
            .cmp(&other.space.weights)
            .then_with(|| self.coords.cmp(&other.coords))
    }
}

impl fmt::Debug for WpsPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for WpsPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]_({})", cs.join(":"), join(&self.space.weights))
    }
}

pub(crate) fn support_of(coords: &[ExactCoordinate]) -> Vec<usize> {
    coords
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, _)| i)
        .collect()
}

/// Canonical representative of the orbit of `coords`.
///
/// The first nonzero coordinate `z_{i0}` can be rotated to exactly `1` by
/// `q_{i0}` different group elements; among those the lexicographically
/// smallest resulting tuple wins.
fn canonicalize(weights: &[u64], coords: &[ExactCoordinate]) -> Vec<ExactCoordinate> {
    let i0 = coords
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero coordinate");
    let lead = coords[i0].unit().expect("nonzero");
    let w = weights[i0];
    // γ with γ^w · lead = 1: γ = lead^{-1/w} · ζ_w^k.
    let base = lead.inverse().principal_root(w);
    (0..w)
        .map(|k| {
            let gamma = base.shifted(k, w);
            coords
                .iter()
                .zip(weights)
                .map(|(c, &q)| c.scale(gamma.pow(q as i64)))
                .collect::<Vec<_>>()
        })
        .min()
        .expect("at least one candidate")
}

/// The isotropy group `Z_order` of a point together with its linear action
/// on the standard chart `C^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IsotropyGroup {
    pub order: u64,
    /// Index of the homogeneous coordinate normalized to `1` by the chart.
    pub slicing_coordinate: usize,
    /// Weight of each remaining chart coordinate, reduced mod `order`.
    pub chart_weights: Vec<u64>,
}

impl IsotropyGroup {
    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn fixed_real_dim(&self) -> usize {
        2 * self.chart_weights.iter().filter(|&&w| w == 0).count()
    }
}
