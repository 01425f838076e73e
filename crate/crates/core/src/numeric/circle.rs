//! Root finding for the circle maps and their quotient preimage counts.

use std::f64::consts::{PI, TAU};

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::slice::NumericConfig;
use crate::error::{Error, Result};
use crate::maps::{CircleMap, CircleMapKind};

/// Angle in `[0, 2π)` of `f̂(cos θ, sin θ)`.
pub fn circle_eval(map: &CircleMap, theta: f64) -> f64 {
    let (y, x) = theta.sin_cos();
    let out = match map.kind {
        CircleMapKind::HalfFold => (y * y).atan2(x),
        CircleMapKind::EssentialF => essential(y).atan2(x),
        CircleMapKind::EssentialG => (y.signum() * essential(y)).atan2(x),
        CircleMapKind::Power(m) => m as f64 * theta,
        CircleMapKind::CoveringProjection(_) => theta,
    };
    out.rem_euclid(TAU)
}

/// `e^{-1/y²}`, continued by 0 at `y = 0`.
fn essential(y: f64) -> f64 {
    if y == 0.0 {
        0.0
    } else {
        (-1.0 / (y * y)).exp()
    }
}

/// Representative of `a` in `(-π, π]`.
fn wrap(a: f64) -> f64 {
    let t = a.rem_euclid(TAU);
    if t > PI {
        t - TAU
    } else {
        t
    }
}

/// Derivative step for circle maps; the maps are smooth away from the
/// critical sets, so a fixed step is accurate to ~1e-10.
const DERIVATIVE_STEP: f64 = 1e-6;

fn derivative(map: &CircleMap, theta: f64) -> f64 {
    let h = DERIVATIVE_STEP;
    wrap(circle_eval(map, theta + h) - circle_eval(map, theta - h)) / (2.0 * h)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CirclePreimage {
    /// Angle in the fundamental domain of the domain quotient.
    pub angle: f64,
    pub derivative: f64,
    pub sign: i8,
    pub isotropy: u64,
    pub weight: u64,
}

/// Preimages of a value, sorted by angle.
pub type CirclePreimageSet = Vec<CirclePreimage>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CircleDegree {
    /// The value, folded into the fundamental domain of the codomain.
    pub value: f64,
    pub mod2: u8,
    pub weighted_count: u64,
    /// Signed weighted count, present when both quotients are oriented.
    pub oriented_degree: Option<i64>,
    pub preimages: CirclePreimageSet,
}

/// All `θ ∈ [0, 2π)` with `f̂(θ) = beta`, refined to the configured accuracy.
fn solve_upstairs(map: &CircleMap, beta: f64, config: &NumericConfig) -> Result<Vec<f64>> {
    let n = config.seeds.max(16);
    let h = TAU / n as f64;
    let delta = |t: f64| wrap(circle_eval(map, t) - beta);
    let seeds: Vec<f64> = (0..n).map(|s| s as f64 * h).collect();
    let values: Vec<f64> = seeds.iter().map(|&t| delta(t)).collect();

    let mut roots = Vec::new();
    for s in 0..n {
        let (a, da) = (seeds[s], values[s]);
        let b = a + h;
        let db = values[(s + 1) % n];
        let prev = values[(s + n - 1) % n];
        if da == 0.0 {
            roots.push(a);
        } else if da.signum() != db.signum() && db != 0.0 {
            if da.abs() < PI / 2.0 && db.abs() < PI / 2.0 {
                roots.push(refine(&delta, a, b, da, config)?);
            }
        } else if da.abs() <= prev.abs() && da.abs() <= db.abs() && da.abs() < 10.0 * h {
            // A local minimum of |δ| without a sign change: look for a
            // tangential touch.
            if let Some(t) = touch(&delta, a - h, a + h) {
                roots.push(t);
            }
        }
    }

    let mut roots: Vec<f64> = roots.into_iter().map(|t| t.rem_euclid(TAU)).collect();
    roots.sort_by(|a, b| a.total_cmp(b));
    let mut merged: Vec<f64> = Vec::with_capacity(roots.len());
    for t in roots {
        if merged.last().is_none_or(|&l| t - l > 1e-9) {
            merged.push(t);
        }
    }
    if merged.len() > 1 && merged[0] + TAU - merged[merged.len() - 1] <= 1e-9 {
        merged.pop();
    }
    Ok(merged)
}

/// Bisection to a small bracket, then safeguarded Newton.
fn refine(
    delta: &impl Fn(f64) -> f64,
    mut a: f64,
    mut b: f64,
    mut da: f64,
    config: &NumericConfig,
) -> Result<f64> {
    while b - a > 1e-7 {
        let m = 0.5 * (a + b);
        let dm = delta(m);
        if dm == 0.0 {
            return Ok(m);
        }
        if dm.signum() == da.signum() {
            a = m;
            da = dm;
        } else {
            b = m;
        }
    }
    let mut t = 0.5 * (a + b);
    for _ in 0..config.max_newton_iterations {
        let v = delta(t);
        let slope =
            (delta(t + DERIVATIVE_STEP) - delta(t - DERIVATIVE_STEP)) / (2.0 * DERIVATIVE_STEP);
        let step = v / slope;
        let next = t - step;
        if !next.is_finite() || next < a || next > b {
            // Newton left the bracket; fall back to bisection.
            return bisect_to(delta, a, b, da, config.root_tol);
        }
        t = next;
        if step.abs() < config.root_tol {
            return Ok(t);
        }
    }
    Err(Error::NoConvergence(t))
}

fn bisect_to(
    delta: &impl Fn(f64) -> f64,
    mut a: f64,
    mut b: f64,
    mut da: f64,
    tol: f64,
) -> Result<f64> {
    while b - a > tol {
        let m = 0.5 * (a + b);
        let dm = delta(m);
        if dm == 0.0 {
            return Ok(m);
        }
        if dm.signum() == da.signum() {
            a = m;
            da = dm;
        } else {
            b = m;
        }
    }
    Ok(0.5 * (a + b))
}

/// Golden-section minimization of `|δ|`; a minimum below `1e-10` is a root
/// of even multiplicity.
fn touch(delta: &impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> Option<f64> {
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - ratio * (b - a);
    let mut d = a + ratio * (b - a);
    while b - a > 1e-12 {
        if delta(c).abs() < delta(d).abs() {
            b = d;
        } else {
            a = c;
        }
        c = b - ratio * (b - a);
        d = a + ratio * (b - a);
    }
    let t = 0.5 * (a + b);
    (delta(t).abs() < 1e-10).then_some(t)
}

/// Mod-2 degree, weighted count and (when defined) oriented degree of a circle
/// map at the value with angle `value`.
///
/// Fails with [`Error::CriticalValue`] when some preimage has derivative
/// magnitude at or below the configured threshold.
pub fn circle_degree2(map: &CircleMap, value: f64, config: &NumericConfig) -> Result<CircleDegree> {
    let codomain = map.codomain;
    let domain = map.domain;
    let value = codomain.fold(value);
    let target_isotropy = codomain.isotropy_at(value, 1e-9);

    let mut upstairs = Vec::new();
    let mut betas = codomain.orbit(value);
    betas.sort_by(|a, b| a.total_cmp(b));
    betas.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
    for beta in betas {
        upstairs.extend(solve_upstairs(map, beta, config)?);
    }

    let mut preimages: CirclePreimageSet = Vec::new();
    for theta in upstairs {
        let slope = derivative(map, theta);
        if slope.abs() <= config.derivative_threshold {
            return Err(Error::CriticalValue {
                angle: theta,
                derivative: slope,
            });
        }
        let angle = domain.fold(theta);
        if preimages
            .iter()
            .any(|p| domain.folded_distance(p.angle, angle) <= 1e-8)
        {
            continue;
        }
        preimages.push(CirclePreimage {
            angle,
            derivative: slope,
            sign: if slope > 0.0 { 1 } else { -1 },
            isotropy: domain.isotropy_at(angle, 1e-9),
            weight: 0,
        });
    }
    preimages.sort_by(|a, b| a.angle.total_cmp(&b.angle));

    let mut total = Ratio::from_integer(0u64);
    let mut signed = 0i64;
    for p in &mut preimages {
        let w = Ratio::new(target_isotropy, p.isotropy);
        if !w.is_integer() {
            return Err(Error::NonIntegralWeight {
                num: *w.numer(),
                den: *w.denom(),
            });
        }
        p.weight = w.to_integer();
        total += w;
        signed += p.sign as i64 * p.weight as i64;
    }
    let weighted_count = total.to_integer();
    Ok(CircleDegree {
        value,
        mod2: (weighted_count % 2) as u8,
        weighted_count,
        oriented_degree: map.oriented().then_some(signed),
        preimages,
    })
}

/// A generic value for numeric degree probes: irrational multiple of the
/// fundamental domain, away from every isotropy point.
const PROBE_FRACTION: f64 = std::f64::consts::FRAC_1_PI;

/// Degree of the quotient map `S^1 // Z_k → S^1 // Z_b` induced by `θ ↦ mθ`,
/// counted numerically at a generic value.
pub fn covering_degree(k: u64, m: u64, b: u64, config: &NumericConfig) -> Result<i64> {
    let map = CircleMap::power(m, k, b)?;
    let value = PROBE_FRACTION * TAU / b as f64;
    let result = circle_degree2(&map, value, config)?;
    Ok(result
        .oriented_degree
        .expect("rotation quotients are oriented"))
}

/// Weighted preimage count of the covering `S^1 → S^1 // Z_k` at a generic
/// value.
pub fn covering_projection_degree(k: u64, config: &NumericConfig) -> Result<i64> {
    let map = CircleMap::covering(k)?;
    let value = PROBE_FRACTION * TAU / k as f64;
    let result = circle_degree2(&map, value, config)?;
    Ok(result
        .oriented_degree
        .expect("rotation quotients are oriented"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> NumericConfig {
        NumericConfig::default()
    }

    #[test]
    fn half_fold_values() {
        let f = CircleMap::half_fold();
        assert!((circle_eval(&f, PI / 2.0) - PI / 2.0).abs() < 1e-15);
        assert!((circle_eval(&f, 3.0 * PI / 2.0) - PI / 2.0).abs() < 1e-15);
        for m in [
            CircleMap::half_fold(),
            CircleMap::essential_f(),
            CircleMap::essential_g(),
        ] {
            assert_eq!(circle_eval(&m, 0.0), 0.0);
        }
    }

    #[test]
    fn half_fold_mod2_degrees() {
        let f = CircleMap::half_fold();
        let up = circle_degree2(&f, PI / 2.0, &cfg()).unwrap();
        assert_eq!(up.weighted_count, 1);
        assert_eq!(up.mod2, 1);
        assert_eq!(up.preimages.len(), 1);
        assert!((up.preimages[0].angle - PI / 2.0).abs() < 1e-10);
        let down = circle_degree2(&f, 3.0 * PI / 2.0, &cfg()).unwrap();
        assert_eq!(down.weighted_count, 0);
        assert_eq!(down.mod2, 0);
        assert!(down.preimages.is_empty());
    }

    #[test]
    fn half_fold_fixed_value_is_critical() {
        let f = CircleMap::half_fold();
        assert!(matches!(
            circle_degree2(&f, 0.0, &cfg()),
            Err(Error::CriticalValue { .. })
        ));
        // (-1, 0) is hit tangentially off the exact seed values.
        assert!(matches!(
            circle_degree2(&f, PI, &cfg()),
            Err(Error::CriticalValue { .. })
        ));
    }

    #[test]
    fn essential_pair_counts() {
        for alpha in [0.2, 1.0, 2.5] {
            let f = circle_degree2(&CircleMap::essential_f(), alpha, &cfg()).unwrap();
            let g = circle_degree2(&CircleMap::essential_g(), alpha, &cfg()).unwrap();
            assert_eq!(f.mod2, g.mod2);
            assert_eq!(f.weighted_count, 1);
            assert_eq!(g.weighted_count, 1);
        }
    }

    #[test]
    fn covering_degrees() {
        assert_eq!(covering_degree(3, 6, 1, &cfg()).unwrap(), 2);
        assert_eq!(covering_degree(4, 4, 1, &cfg()).unwrap(), 1);
        assert_eq!(covering_degree(1, 5, 1, &cfg()).unwrap(), 5);
        assert_eq!(covering_degree(4, 2, 2, &cfg()).unwrap(), 1);
        assert!(matches!(
            covering_degree(3, 2, 1, &cfg()),
            Err(Error::NoHomomorphism { .. })
        ));
        for k in 2..=6 {
            assert_eq!(covering_projection_degree(k, &cfg()).unwrap(), k as i64);
        }
    }
}
