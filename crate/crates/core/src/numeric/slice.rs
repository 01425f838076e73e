//! Slice charts for the weighted circle action on `S^{2n+1} ⊂ C^{n+1}` and
//! the corrected lift `y ↦ k(y) · f̂(y)` of an equivariant map.
//!
//! The slice through a point `p` of the sphere is the set of sphere points
//! orthogonal (in the real inner product) to the orbit tangent
//! `i·(w_0 p_0, …, w_n p_n)`. It is invariant under the stabilizer of `p`,
//! and it is parametrized by projecting onto an orthonormal frame of its
//! tangent space. Frames are oriented so that `(p, tangent, frame)` is a
//! positive basis for the complex orientation of `C^{n+1}`.

use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::maps::MonomialMap;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NumericConfig {
    /// Newton residual bound for the slice correction.
    pub residual_tol: f64,
    pub max_newton_iterations: usize,
    /// Largest `|y - x|` accepted by [`slice_lift`].
    pub chart_radius: f64,
    /// Central-difference step for Jacobians.
    pub fd_step: f64,
    /// Smallest singular value certifying a regular point.
    pub singular_threshold: f64,
    /// Smallest derivative magnitude certifying a regular circle preimage.
    pub derivative_threshold: f64,
    /// Number of seeds used to bracket circle preimages.
    pub seeds: usize,
    /// Target accuracy of refined circle preimages.
    pub root_tol: f64,
}

impl Default for NumericConfig {
    fn default() -> Self {
        NumericConfig {
            residual_tol: 1e-9,
            max_newton_iterations: 50,
            chart_radius: 0.1,
            fd_step: 1e-5,
            singular_threshold: 1e-6,
            derivative_threshold: 1e-8,
            seeds: 4096,
            root_tol: 1e-12,
        }
    }
}

pub(crate) fn to_real(z: &[Complex64]) -> DVector<f64> {
    DVector::from_iterator(2 * z.len(), z.iter().flat_map(|c| [c.re, c.im]))
}

pub(crate) fn to_complex(v: &DVector<f64>) -> Vec<Complex64> {
    v.as_slice()
        .chunks(2)
        .map(|c| Complex64::new(c[0], c[1]))
        .collect()
}

pub(crate) fn norm(z: &[Complex64]) -> f64 {
    z.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

pub(crate) fn normalize(z: &[Complex64]) -> Vec<Complex64> {
    let n = norm(z);
    z.iter().map(|c| c / n).collect()
}

/// The representative of `z` on the unit sphere under the weighted real
/// scaling `λ · z = (λ^{w_j} z_j)`, `λ > 0`. For equal weights this is
/// `z / |z|`.
pub fn weighted_normalize(weights: &[u64], z: &[Complex64]) -> Vec<Complex64> {
    // Solve h(s) = log Σ e^{2 w_j s} |z_j|² = 0 for s = log λ; h is convex and
    // increasing, so Newton converges from any start.
    let terms: Vec<(f64, f64)> = z
        .iter()
        .zip(weights)
        .filter(|(c, _)| c.norm_sqr() > 0.0)
        .map(|(c, &w)| (2.0 * w as f64, c.norm_sqr().ln()))
        .collect();
    let mut s = 0.0f64;
    for _ in 0..200 {
        let top = terms
            .iter()
            .map(|&(a, b)| a * s + b)
            .fold(f64::NEG_INFINITY, f64::max);
        let (sum, slope) = terms.iter().fold((0.0, 0.0), |(acc, der), &(a, b)| {
            let t = (a * s + b - top).exp();
            (acc + t, der + a * t)
        });
        let h = top + sum.ln();
        let step = h / (slope / sum);
        s -= step;
        if step.abs() < 1e-15 {
            break;
        }
    }
    let out: Vec<Complex64> = z
        .iter()
        .zip(weights)
        .map(|(c, &w)| c * (w as f64 * s).exp())
        .collect();
    // Remove the last rounding error radially.
    normalize(&out)
}

/// Real inner product `Re Σ conj(a_j) b_j`.
pub(crate) fn real_dot(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x.conj() * y).re).sum()
}

/// `i · (w_j z_j)_j`.
pub fn orbit_tangent(weights: &[u64], z: &[Complex64]) -> Vec<Complex64> {
    z.iter()
        .zip(weights)
        .map(|(c, &w)| Complex64::i() * c * w as f64)
        .collect()
}

/// `e^{iφ} · z` under the weighted action.
pub fn act(weights: &[u64], phase: f64, z: &[Complex64]) -> Vec<Complex64> {
    z.iter()
        .zip(weights)
        .map(|(c, &w)| c * Complex64::from_polar(1.0, w as f64 * phase))
        .collect()
}

/// The coordinate-power lift `f̂(z)`, moved onto the unit sphere by the
/// weighted scaling of the target.
pub fn hat_map(f: &MonomialMap, z: &[Complex64]) -> Result<Vec<Complex64>> {
    let image: Vec<Complex64> = z
        .iter()
        .zip(f.exponents())
        .map(|(c, &e)| c.powu(e as u32))
        .collect();
    if norm(&image) < 1e-300 {
        return Err(Error::PreconditionViolated(
            "f̂ vanishes at the point".into(),
        ));
    }
    Ok(weighted_normalize(f.target().weights(), &image))
}

#[derive(Debug, Clone)]
pub struct SliceChart {
    pub weights: Vec<u64>,
    /// Base point on the unit sphere.
    pub base: Vec<Complex64>,
    /// Orbit tangent `i·W·base` (not normalized).
    pub tangent: Vec<Complex64>,
    /// Orthonormal, oriented frame of the slice tangent space, one column per
    /// real direction.
    pub frame: DMatrix<f64>,
}

impl SliceChart {
    pub fn new(weights: &[u64], base: &[Complex64]) -> Result<Self> {
        if weights.len() != base.len() {
            return Err(Error::InvalidInput(
                "weights and point differ in length".into(),
            ));
        }
        if norm(base) < 1e-300 {
            return Err(Error::InvalidInput("slice base point is zero".into()));
        }
        let base = weighted_normalize(weights, base);
        let tangent = orbit_tangent(weights, &base);
        let dim = 2 * base.len();

        // Gram–Schmidt over (base, tangent, e_0, i·e_0, e_1, i·e_1, …).
        let mut basis: Vec<DVector<f64>> = Vec::with_capacity(dim);
        let mut candidates = vec![to_real(&base), to_real(&tangent)];
        for k in 0..dim {
            let mut v = DVector::zeros(dim);
            v[k] = 1.0;
            candidates.push(v);
        }
        for (idx, mut v) in candidates.into_iter().enumerate() {
            for _ in 0..2 {
                for b in &basis {
                    let proj = b.dot(&v);
                    v -= b * proj;
                }
            }
            let n = v.norm();
            if idx < 2 || n > 1e-6 {
                basis.push(v / n);
            }
            if basis.len() == dim {
                break;
            }
        }
        let mut full = DMatrix::from_columns(&basis);
        if full.determinant() < 0.0 {
            let last = dim - 1;
            full.column_mut(last).neg_mut();
        }
        let frame = full.columns(2, dim - 2).into_owned();
        Ok(SliceChart {
            weights: weights.to_vec(),
            base,
            tangent,
            frame,
        })
    }

    /// Real dimension of the slice.
    pub fn dim(&self) -> usize {
        self.frame.ncols()
    }

    /// Slice coordinates `frame^T (p - base)`.
    pub fn coords_of(&self, p: &[Complex64]) -> DVector<f64> {
        let diff: Vec<Complex64> = p.iter().zip(&self.base).map(|(a, b)| a - b).collect();
        self.frame.transpose() * to_real(&diff)
    }

    /// The sphere point `normalize(base + frame · c)`, which lies on the slice.
    pub fn point_at(&self, c: &DVector<f64>) -> Vec<Complex64> {
        let v = to_real(&self.base) + &self.frame * c;
        normalize(&to_complex(&v))
    }

    /// `⟨p - base, i·W·base⟩`; zero exactly on the slice.
    pub fn residual(&self, p: &[Complex64]) -> f64 {
        let diff: Vec<Complex64> = p.iter().zip(&self.base).map(|(a, b)| a - b).collect();
        real_dot(&diff, &self.tangent)
    }
}

/// Diagnostics of one corrected lift evaluation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LiftEvaluation {
    /// Slice coordinates of the input in the domain chart.
    pub input: Vec<f64>,
    /// Slice coordinates of `k(y) f̂(y)` in the target chart.
    pub output: Vec<f64>,
    /// `k(y) f̂(y)` as `[re, im]` pairs.
    pub corrected: Vec<[f64; 2]>,
    /// `k(y) = e^{iφ}`.
    pub phase: f64,
    pub residual: f64,
    pub iterations: usize,
}

/// Both slice charts of a lift, built once per base point.
#[derive(Debug, Clone)]
pub struct LiftCharts {
    pub domain: SliceChart,
    pub target: SliceChart,
}

impl LiftCharts {
    pub fn new(f: &MonomialMap, x: &[Complex64]) -> Result<Self> {
        let domain = SliceChart::new(f.source().weights(), x)?;
        let fx = hat_map(f, &domain.base)?;
        let target = SliceChart::new(f.target().weights(), &fx)?;
        Ok(LiftCharts { domain, target })
    }
}

/// Finds `φ` with `e^{iφ} · f̂(y)` on the target slice by Newton's method in
/// the single unknown `φ`, starting at the identity.
pub(crate) fn correct(
    f: &MonomialMap,
    charts: &LiftCharts,
    y: &[Complex64],
    config: &NumericConfig,
) -> Result<LiftEvaluation> {
    let fy = hat_map(f, y)?;
    let r = f.target().weights();
    let tangent = &charts.target.tangent;
    let max_w = *r.iter().max().expect("nonempty weights") as f64;
    let bound = PI / max_w;

    let mut phase = 0.0f64;
    let mut iterations = 0;
    let mut p = fy.clone();
    let mut g = real_dot(&p, tangent);
    while g.abs() >= config.residual_tol {
        if iterations == config.max_newton_iterations {
            return Err(Error::NewtonDiverged { residual: g, phase });
        }
        let dp = orbit_tangent(r, &p);
        let slope = real_dot(&dp, tangent);
        if slope.abs() < 1e-300 {
            return Err(Error::NewtonDiverged { residual: g, phase });
        }
        phase -= g / slope;
        if !phase.is_finite() || phase.abs() >= bound {
            return Err(Error::NewtonDiverged { residual: g, phase });
        }
        p = act(r, phase, &fy);
        g = real_dot(&p, tangent);
        iterations += 1;
    }
    Ok(LiftEvaluation {
        input: charts.domain.coords_of(y).iter().copied().collect(),
        output: charts.target.coords_of(&p).iter().copied().collect(),
        corrected: p.iter().map(|c| [c.re, c.im]).collect(),
        phase,
        residual: g,
        iterations,
    })
}

/// Evaluates the chart lift `f̃_{[x]}(y) = k(y) · f̂(y)` at a point `y` of the
/// slice through `x`.
pub fn slice_lift(
    f: &MonomialMap,
    x: &[Complex64],
    y: &[Complex64],
    config: &NumericConfig,
) -> Result<LiftEvaluation> {
    let charts = LiftCharts::new(f, x)?;
    if y.len() != x.len() {
        return Err(Error::InvalidInput("point lengths differ".into()));
    }
    let dist = norm(
        &y.iter()
            .zip(&charts.domain.base)
            .map(|(a, b)| a - b)
            .collect::<Vec<_>>(),
    );
    if dist >= config.chart_radius {
        return Err(Error::PreconditionViolated(format!(
            "|y - x| = {dist} exceeds the chart radius {}",
            config.chart_radius
        )));
    }
    if (norm(y) - 1.0).abs() > 1e-9 || charts.domain.residual(y).abs() > 1e-9 {
        return Err(Error::PreconditionViolated(
            "y is not on the slice through x".into(),
        ));
    }
    correct(f, &charts, y, config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbifold::WpsOrbifold;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn weighted_normalization_stays_in_the_class() {
        let w = [1u64, 3];
        let z = [c(2.0, 1.0), c(-3.0, 0.5)];
        let p = weighted_normalize(&w, &z);
        assert!((norm(&p) - 1.0).abs() < 1e-14);
        // p = (λ z_0, λ^3 z_1) for one λ > 0.
        let lambda = p[0].norm() / z[0].norm();
        assert!((p[1] - z[1] * lambda.powi(3)).norm() < 1e-12);
        assert!((p[0] - z[0] * lambda).norm() < 1e-12);
    }

    #[test]
    fn frame_is_orthonormal_and_transverse() {
        let base = normalize(&[c(0.3, 0.4), c(-0.5, 0.2), c(0.1, -0.7)]);
        let chart = SliceChart::new(&[1, 2, 3], &base).unwrap();
        assert_eq!(chart.dim(), 4);
        let gram = chart.frame.transpose() * &chart.frame;
        assert!((gram - DMatrix::identity(4, 4)).amax() < 1e-12);
        let t = to_real(&chart.tangent);
        let b = to_real(&chart.base);
        assert!((chart.frame.transpose() * t).amax() < 1e-12);
        assert!((chart.frame.transpose() * b).amax() < 1e-12);
    }

    #[test]
    fn slice_points_satisfy_the_slice_equation() {
        let base = normalize(&[c(1.0, 0.0), c(0.0, 1.0)]);
        let chart = SliceChart::new(&[1, 3], &base).unwrap();
        let p = chart.point_at(&DVector::from_vec(vec![0.03, -0.02]));
        assert!(chart.residual(&p).abs() < 1e-15);
        assert!((norm(&p) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn lift_at_base_is_identity_correction() {
        let f = MonomialMap::f_q(&WpsOrbifold::new(vec![1, 3]).unwrap());
        let x = normalize(&[c(0.6, 0.2), c(0.3, -0.5)]);
        let ev = slice_lift(&f, &x, &x, &NumericConfig::default()).unwrap();
        assert_eq!(ev.phase, 0.0);
        assert!(ev.output.iter().all(|v| v.abs() < 1e-15));
        let fx = hat_map(&f, &x).unwrap();
        for (a, b) in ev.corrected.iter().zip(&fx) {
            assert!((a[0] - b.re).abs() < 1e-15 && (a[1] - b.im).abs() < 1e-15);
        }
    }

    #[test]
    fn lift_rejects_far_points() {
        let f = MonomialMap::identity(&WpsOrbifold::projective(1));
        let x = normalize(&[c(1.0, 0.0), c(1.0, 0.0)]);
        let chart = SliceChart::new(&[1, 1], &x).unwrap();
        let y = chart.point_at(&DVector::from_vec(vec![0.5, 0.0]));
        assert!(matches!(
            slice_lift(&f, &x, &y, &NumericConfig::default()),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn lift_evaluation_serializes() {
        let f = MonomialMap::identity(&WpsOrbifold::projective(1));
        let x = normalize(&[c(1.0, 0.0), c(0.0, 1.0)]);
        let ev = slice_lift(&f, &x, &x, &NumericConfig::default()).unwrap();
        let json = serde_json::to_value(&ev).unwrap();
        assert_eq!(json["phase"], 0.0);
        assert_eq!(json["corrected"].as_array().unwrap().len(), 2);
    }
}
