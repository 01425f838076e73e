//! Floating-point preimages of monomial maps at arbitrary complex values, and
//! weighted counts sampled along a path of values.

use std::io::{self, Write};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::jacobian::numeric_jacobian;
use super::slice::{weighted_normalize, NumericConfig};
use crate::error::{Error, Result};
use crate::maps::MonomialMap;
use crate::orbifold::gcd_all;

/// Coordinates below this magnitude (relative to the value's norm) count as
/// zero.
const ZERO_TOL: f64 = 1e-12;

/// Largest number of solution tuples [`numeric_preimages`] will build.
const TUPLE_CAP: u128 = 200_000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NumericPreimage {
    /// Unit-sphere representative.
    pub point: Vec<[f64; 2]>,
    pub isotropy: u64,
    pub weight: u64,
}

impl NumericPreimage {
    pub fn coords(&self) -> Vec<Complex64> {
        self.point
            .iter()
            .map(|c| Complex64::new(c[0], c[1]))
            .collect()
    }
}

fn support(z: &[Complex64]) -> Vec<usize> {
    let scale = z.iter().map(|c| c.norm()).fold(0.0, f64::max);
    (0..z.len())
        .filter(|&i| z[i].norm() > ZERO_TOL * scale)
        .collect()
}

/// Whether `a` and `b` lie in the same orbit of the weighted circle action.
fn same_orbit(weights: &[u64], support: &[usize], a: &[Complex64], b: &[Complex64]) -> bool {
    let i0 = support[0];
    let q0 = weights[i0];
    // The phases γ with γ^{q0} a_{i0} = b_{i0} (up to positive scaling).
    let base = (b[i0] / a[i0]).arg() / q0 as f64;
    (0..q0).any(|j| {
        let phase = base + std::f64::consts::TAU * j as f64 / q0 as f64;
        support.iter().all(|&i| {
            let g = Complex64::from_polar(1.0, weights[i] as f64 * phase);
            (g * a[i] - b[i]).norm() < 1e-9
        })
    })
}

/// All preimages of the value `y ∈ C^{n+1} \ {0}` (taken as a point of the
/// target weighted projective space), deduplicated under the source action.
pub fn numeric_preimages(f: &MonomialMap, y: &[Complex64]) -> Result<Vec<NumericPreimage>> {
    let q = f.source().weights();
    let r = f.target().weights();
    let e = f.exponents();
    if y.len() != r.len() {
        return Err(Error::InvalidInput("value has the wrong length".into()));
    }
    let s = support(y);
    if s.is_empty() {
        return Err(Error::InvalidInput("value is zero".into()));
    }
    let tuples: u128 = s.iter().map(|&i| e[i] as u128).product();
    if tuples > TUPLE_CAP {
        return Err(Error::EnumerationCapExceeded {
            needed: tuples,
            cap: TUPLE_CAP as u64,
        });
    }
    // Every solution of x_i^{e_i} = y_i on the support.
    let mut solutions: Vec<Vec<Complex64>> = vec![vec![Complex64::new(0.0, 0.0); y.len()]];
    for &i in &s {
        let modulus = y[i].norm().powf(1.0 / e[i] as f64);
        let arg = y[i].arg();
        let roots: Vec<Complex64> = (0..e[i])
            .map(|k| {
                Complex64::from_polar(
                    modulus,
                    (arg + std::f64::consts::TAU * k as f64) / e[i] as f64,
                )
            })
            .collect();
        solutions = solutions
            .into_iter()
            .flat_map(|sol| {
                roots.iter().map(move |&z| {
                    let mut next = sol.clone();
                    next[i] = z;
                    next
                })
            })
            .collect();
    }

    let mut reps: Vec<Vec<Complex64>> = Vec::new();
    for sol in solutions {
        let sol = weighted_normalize(q, &sol);
        if !reps.iter().any(|rep| same_orbit(q, &s, rep, &sol)) {
            reps.push(sol);
        }
    }
    let isotropy = gcd_all(s.iter().map(|&i| q[i]));
    let target_isotropy = gcd_all(s.iter().map(|&i| r[i]));
    if target_isotropy % isotropy != 0 {
        return Err(Error::NonIntegralWeight {
            num: target_isotropy,
            den: isotropy,
        });
    }
    Ok(reps
        .into_iter()
        .map(|x| NumericPreimage {
            point: x.iter().map(|c| [c.re, c.im]).collect(),
            isotropy,
            weight: target_isotropy / isotropy,
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArcSample {
    /// Path parameter.
    pub t: f64,
    pub value: Vec<[f64; 2]>,
    pub raw_count: usize,
    pub weighted_count: u64,
    /// Jacobian signs at every preimage.
    pub signs: Vec<i8>,
    pub min_singular_value: f64,
}

/// Preimage counts and Jacobian certificates along a sampled path of values.
pub fn sample_path(
    f: &MonomialMap,
    path: impl Fn(f64) -> Vec<Complex64>,
    params: &[f64],
    config: &NumericConfig,
) -> Result<Vec<ArcSample>> {
    params
        .iter()
        .map(|&t| {
            let value = path(t);
            let pre = numeric_preimages(f, &value)?;
            let mut signs = Vec::with_capacity(pre.len());
            let mut min_sv = f64::INFINITY;
            for p in &pre {
                let jac = numeric_jacobian(f, &p.coords(), config)?;
                signs.push(jac.sign);
                min_sv = min_sv.min(jac.smallest_singular_value);
            }
            Ok(ArcSample {
                t,
                value: value.iter().map(|c| [c.re, c.im]).collect(),
                raw_count: pre.len(),
                weighted_count: pre.iter().map(|p| p.weight).sum(),
                signs,
                min_singular_value: min_sv,
            })
        })
        .collect()
}

/// The values `[t·e^{iα} : 1]` for `t` spread evenly over `[-1, 1]`, always
/// including `t = 0`.
pub fn arc_parameters(samples: usize) -> Vec<f64> {
    let half = samples.max(3) / 2;
    (-(half as i64)..=half as i64)
        .map(|j| j as f64 / half as f64)
        .collect()
}

/// Samples the weighted count of `f_{(1,3)} : CP^1 → CP^1(1,3)` along an arc
/// of values through the singular point `[0:1]`.
pub fn singular_arc(samples: usize, config: &NumericConfig) -> Result<Vec<ArcSample>> {
    let q = crate::orbifold::WpsOrbifold::new(vec![1, 3])?;
    let f = MonomialMap::f_q(&q);
    let dir = Complex64::from_polar(1.0, 0.7);
    sample_path(
        &f,
        |t| vec![dir * t, Complex64::new(1.0, 0.0)],
        &arc_parameters(samples),
        config,
    )
}

/// Writes `value_re,value_im,raw_count,weighted_count` rows, one per sample,
/// using the first coordinate of each value.
pub fn write_arc_csv<W: Write>(samples: &[ArcSample], mut out: W) -> io::Result<()> {
    writeln!(out, "t,value_re,value_im,raw_count,weighted_count")?;
    for s in samples {
        writeln!(
            out,
            "{},{},{},{},{}",
            s.t, s.value[0][0], s.value[0][1], s.raw_count, s.weighted_count
        )?;
    }
    Ok(())
}
