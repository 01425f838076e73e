//! Orbit enumeration for the preimage problem of a monomial map.
//!
//! Fix a target value `y` with support `S` and a representative whose
//! nonzero coordinates are roots of unity. After normalizing the scaling
//! factor, the preimages of `y` are the solution tuples
//! `x_i = z*_i · ζ_{e_i}^{k_i}` (`i ∈ S`, `z*_i` the principal `e_i`-th root
//! of `y_i`) modulo the residual group `μ_D`, `D = d · gcd{r_i : i ∈ S}`.
//! A generator of `μ_D` shifts `k_i` by `s_i = r_i / gcd{r_j : j ∈ S}`, so the
//! problem is a cyclic group acting by translation on `Π Z_{e_i}`.
//!
//! Lexicographically minimal orbit representatives of a translation action
//! form a box: processing coordinates in order, the subgroup that fixes all
//! earlier coordinates moves coordinate `i` through the multiples of some
//! `g_i | e_i`, so a tuple is minimal exactly when `k_i < g_i` for all `i`.
//! Enumeration therefore never materializes an orbit.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::maps::MonomialMap;
use crate::orbifold::{gcd_all, ExactCoordinate, RootOfUnity, WpsPoint};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPlan {
    /// Support of the value, in increasing order.
    pub support: Vec<usize>,
    /// `e_i` for `i` in the support.
    pub exponents: Vec<u64>,
    /// Translation `s_i mod e_i` induced by the generator of `μ_D`.
    pub shifts: Vec<u64>,
    /// `D = d · g_S`.
    pub group_order: u64,
    /// Bounds of the box of canonical representatives.
    pub box_dims: Vec<u64>,
    base: Vec<RootOfUnity>,
    len: usize,
}

impl OrbitPlan {
    pub fn new(f: &MonomialMap, y: &WpsPoint) -> Result<Self> {
        let r = f.target().weights();
        let e = f.exponents();
        let support = y.support();
        let g_s = gcd_all(support.iter().map(|&i| r[i]));
        let group_order = f
            .equivariance_degree()
            .checked_mul(g_s)
            .ok_or(Error::Overflow("residual group order"))?;
        let exponents: Vec<u64> = support.iter().map(|&i| e[i]).collect();
        let shifts: Vec<u64> = support
            .iter()
            .zip(&exponents)
            .map(|(&i, &ei)| (r[i] / g_s) % ei)
            .collect();
        let base = support
            .iter()
            .zip(&exponents)
            .map(|(&i, &ei)| {
                let yi = y.coords()[i].unit().expect("support coordinate is nonzero");
                yi.principal_root(ei)
            })
            .collect();

        let mut box_dims = Vec::with_capacity(exponents.len());
        let mut step = 1u64;
        for (&ei, &si) in exponents.iter().zip(&shifts) {
            let (gi, next) = restrict(step, si, ei, group_order);
            box_dims.push(gi);
            step = next;
        }
        Ok(OrbitPlan {
            support,
            exponents,
            shifts,
            group_order,
            box_dims,
            base,
            len: r.len(),
        })
    }

    /// `Π e_i`: the number of solution tuples.
    pub fn tuple_count(&self) -> u128 {
        self.exponents.iter().map(|&e| e as u128).product()
    }

    /// Number of orbits, i.e. preimage points.
    pub fn orbit_count(&self) -> u128 {
        self.box_dims.iter().map(|&g| g as u128).product()
    }

    /// Applies the `t`-th power of the generator of `μ_D` to a tuple.
    pub fn act(&self, k: &[u64], t: u64) -> Vec<u64> {
        k.iter()
            .zip(self.shifts.iter().zip(&self.exponents))
            .map(|(&ki, (&si, &ei))| ((ki as u128 + t as u128 * si as u128) % ei as u128) as u64)
            .collect()
    }

    /// The lexicographically minimal tuple in the orbit of `k`.
    pub fn canonicalize(&self, k: &[u64]) -> Vec<u64> {
        let d = self.group_order as u128;
        let mut t0: u128 = 0;
        let mut step = 1u64;
        let mut out = Vec::with_capacity(k.len());
        for ((&ki, &si), &ei) in k.iter().zip(&self.shifts).zip(&self.exponents) {
            let e = ei as u128;
            let c = (ki as u128 + t0 * si as u128) % e;
            let (gi, next) = restrict(step, si, ei, self.group_order);
            let g = gi as u128;
            let min = c % g;
            // Solve u · (step · s_i) ≡ min - c (mod e_i).
            let e_red = e / g;
            if e_red > 1 {
                let a = (step as u128 * si as u128 % e) / g;
                let rhs = ((e - (c - min)) % e) / g;
                let inv = mod_inverse(a % e_red, e_red);
                let u = rhs * inv % e_red;
                t0 = (t0 + u * step as u128) % d;
            }
            out.push(min as u64);
            step = next;
        }
        out
    }

    /// The `index`-th canonical tuple in lexicographic order.
    pub fn representative(&self, mut index: u128) -> Vec<u64> {
        let mut k = vec![0u64; self.box_dims.len()];
        for (slot, &g) in k.iter_mut().zip(&self.box_dims).rev() {
            *slot = (index % g as u128) as u64;
            index /= g as u128;
        }
        k
    }

    /// Homogeneous coordinates of the solution tuple `k`.
    pub fn coords(&self, k: &[u64]) -> Vec<ExactCoordinate> {
        let mut c = vec![ExactCoordinate::Zero; self.len];
        for ((&i, z), (&ki, &ei)) in self
            .support
            .iter()
            .zip(&self.base)
            .zip(k.iter().zip(&self.exponents))
        {
            c[i] = ExactCoordinate::Unit(z.shifted(ki, ei));
        }
        c
    }
}

/// For the subgroup `<step>` of `Z_D` acting on `Z_e` by `t ↦ t·s`, returns
/// the orbit spacing `g = gcd(step·s, e)` and a generator of the stabilizer.
fn restrict(step: u64, s: u64, e: u64, d: u64) -> (u64, u64) {
    let a = (step as u128 * s as u128 % e as u128) as u64;
    let g = a.gcd(&e);
    let next = ((step as u128 * (e / g) as u128).gcd(&(d as u128))) as u64;
    (g, next)
}

fn mod_inverse(a: u128, m: u128) -> u128 {
    let ext = (a as i128).extended_gcd(&(m as i128));
    debug_assert_eq!(ext.gcd, 1, "{a} not invertible mod {m}");
    ext.x.rem_euclid(m as i128) as u128
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::orbifold::WpsOrbifold;

    fn brute_orbits(plan: &OrbitPlan) -> BTreeSet<Vec<u64>> {
        // Minimum over the explicitly materialized orbit of every tuple.
        let total = plan.tuple_count();
        let mut reps = BTreeSet::new();
        for idx in 0..total {
            let mut k = vec![0u64; plan.exponents.len()];
            let mut rest = idx;
            for (slot, &e) in k.iter_mut().zip(&plan.exponents).rev() {
                *slot = (rest % e as u128) as u64;
                rest /= e as u128;
            }
            let min = (0..plan.group_order)
                .map(|t| plan.act(&k, t))
                .min()
                .unwrap();
            assert_eq!(plan.canonicalize(&k), min, "tuple {k:?}");
            reps.insert(min);
        }
        reps
    }

    #[test]
    fn box_matches_materialized_orbits() {
        let cases: Vec<(MonomialMap, Vec<ExactCoordinate>)> = vec![
            (
                MonomialMap::f_q(&WpsOrbifold::new(vec![2, 3, 5]).unwrap()),
                vec![ExactCoordinate::ONE; 3],
            ),
            (
                MonomialMap::g_q(&WpsOrbifold::new(vec![1, 2, 3]).unwrap()),
                vec![ExactCoordinate::ONE; 3],
            ),
            (
                MonomialMap::new(vec![1, 3], vec![1, 3], vec![4, 4]).unwrap(),
                vec![ExactCoordinate::ONE, ExactCoordinate::parse("1/5").unwrap()],
            ),
            (
                MonomialMap::h_rq(
                    &WpsOrbifold::new(vec![1, 1, 2]).unwrap(),
                    &WpsOrbifold::new(vec![1, 2, 3]).unwrap(),
                )
                .unwrap(),
                vec![
                    ExactCoordinate::parse("1/3").unwrap(),
                    ExactCoordinate::ONE,
                    ExactCoordinate::parse("3/7").unwrap(),
                ],
            ),
        ];
        for (f, c) in cases {
            let y = f.target().point(c).unwrap();
            let plan = OrbitPlan::new(&f, &y).unwrap();
            let reps = brute_orbits(&plan);
            let boxed: BTreeSet<Vec<u64>> = (0..plan.orbit_count())
                .map(|i| plan.representative(i))
                .collect();
            assert_eq!(reps, boxed, "{f:?}");
        }
    }

    #[test]
    fn representatives_are_sorted() {
        let f = MonomialMap::g_q(&WpsOrbifold::new(vec![3, 4, 5]).unwrap());
        let plan = OrbitPlan::new(&f, &f.target().ones()).unwrap();
        let reps: Vec<_> = (0..plan.orbit_count())
            .map(|i| plan.representative(i))
            .collect();
        assert!(reps.windows(2).all(|w| w[0] < w[1]));
    }
}
