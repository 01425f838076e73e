//! Singular stratification `Σ_i = { x : sdim(x) = i }`.
//!
//! For weighted projective spaces the isotropy and singular dimension are
//! constant on the set of points with a given support, so strata are
//! reported as unions of support classes rather than connected components.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::circle::{CircleGroup, CircleQuotient};
use super::root::ExactCoordinate;
use super::wps::WpsOrbifold;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumComponent {
    /// `*` marks a nonzero coordinate; a pattern without `*` but one `1` is a single point.
    pub description: String,
    pub isotropy: u64,
    pub supports: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumRecord {
    pub dimension: usize,
    pub components: Vec<StratumComponent>,
    /// Set on the top stratum, which is open, dense and a manifold.
    pub open_dense: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrataReport {
    pub orbifold: String,
    pub dimension: usize,
    pub strata: Vec<StratumRecord>,
    pub codim1_empty: bool,
    pub orientable: bool,
}

impl StrataReport {
    pub fn stratum(&self, dimension: usize) -> Option<&StratumRecord> {
        self.strata.iter().find(|s| s.dimension == dimension)
    }

    /// Components of every stratum below the top one.
    pub fn singular_components(&self) -> impl Iterator<Item = &StratumComponent> {
        self.strata
            .iter()
            .filter(move |s| s.dimension < self.dimension)
            .flat_map(|s| s.components.iter())
    }
}

/// Anything with a computable stratification.
pub trait Stratified {
    fn strata(&self) -> Result<StrataReport>;
}

const MAX_SUPPORT_BITS: usize = 20;

impl Stratified for WpsOrbifold {
    fn strata(&self) -> Result<StrataReport> {
        let len = self.weights().len();
        if len > MAX_SUPPORT_BITS {
            return Err(Error::InvalidInput(format!(
                "{len} homogeneous coordinates is too many to enumerate supports"
            )));
        }
        // (sdim, isotropy) -> supports
        let mut classes: BTreeMap<(usize, u64), Vec<Vec<usize>>> = BTreeMap::new();
        for mask in 1u32..(1u32 << len) {
            let coords: Vec<ExactCoordinate> = (0..len)
                .map(|i| {
                    if mask & (1 << i) != 0 {
                        ExactCoordinate::ONE
                    } else {
                        ExactCoordinate::Zero
                    }
                })
                .collect();
            let p = self.point(coords)?;
            let iso = p.isotropy();
            classes
                .entry((iso.fixed_real_dim(), iso.order))
                .or_default()
                .push(p.support());
        }

        let top = self.real_dim();
        let mut by_dim: BTreeMap<usize, Vec<StratumComponent>> = BTreeMap::new();
        for ((dim, order), mut supports) in classes {
            supports.sort();
            let description = supports
                .iter()
                .map(|s| support_pattern(len, s))
                .collect::<Vec<_>>()
                .join(" ");
            by_dim.entry(dim).or_default().push(StratumComponent {
                description,
                isotropy: order,
                supports,
            });
        }
        let strata = by_dim
            .into_iter()
            .map(|(dimension, components)| StratumRecord {
                dimension,
                components,
                open_dense: dimension == top,
            })
            .collect::<Vec<_>>();
        let codim1_empty = top == 0 || !strata.iter().any(|s| s.dimension + 1 == top);
        Ok(StrataReport {
            orbifold: self.to_string(),
            dimension: top,
            strata,
            codim1_empty,
            orientable: true,
        })
    }
}

fn support_pattern(len: usize, support: &[usize]) -> String {
    let single = support.len() == 1;
    let cells: Vec<&str> = (0..len)
        .map(|i| match (support.contains(&i), single) {
            (true, true) => "1",
            (true, false) => "*",
            (false, _) => "0",
        })
        .collect();
    format!("[{}]", cells.join(":"))
}

impl Stratified for CircleQuotient {
    fn strata(&self) -> Result<StrataReport> {
        let report = match self.group {
            CircleGroup::Rotation(_) => StrataReport {
                orbifold: self.to_string(),
                dimension: 1,
                strata: vec![StratumRecord {
                    dimension: 1,
                    components: vec![StratumComponent {
                        description: "circle".into(),
                        isotropy: 1,
                        supports: vec![],
                    }],
                    open_dense: true,
                }],
                codim1_empty: true,
                orientable: true,
            },
            CircleGroup::Reflection => StrataReport {
                orbifold: self.to_string(),
                dimension: 1,
                strata: vec![
                    StratumRecord {
                        dimension: 0,
                        components: vec![
                            StratumComponent {
                                description: "(1,0)".into(),
                                isotropy: 2,
                                supports: vec![],
                            },
                            StratumComponent {
                                description: "(-1,0)".into(),
                                isotropy: 2,
                                supports: vec![],
                            },
                        ],
                        open_dense: false,
                    },
                    StratumRecord {
                        dimension: 1,
                        components: vec![StratumComponent {
                            description: "open interval (0,π)".into(),
                            isotropy: 1,
                            supports: vec![],
                        }],
                        open_dense: true,
                    },
                ],
                codim1_empty: false,
                orientable: false,
            },
        };
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cp1_1_3() {
        let r = WpsOrbifold::new(vec![1, 3]).unwrap().strata().unwrap();
        assert!(r.codim1_empty);
        assert!(r.orientable);
        let sing: Vec<_> = r.singular_components().collect();
        assert_eq!(sing.len(), 1);
        assert_eq!(sing[0].isotropy, 3);
        assert_eq!(sing[0].description, "[0:1]");
        assert_eq!(r.stratum(0).unwrap().components.len(), 1);
        let top = r.stratum(2).unwrap();
        assert!(top.open_dense);
        assert_eq!(top.components[0].supports, vec![vec![0], vec![0, 1]]);
    }

    #[test]
    fn cp1_is_a_manifold() {
        let r = WpsOrbifold::new(vec![1, 1]).unwrap().strata().unwrap();
        assert_eq!(r.singular_components().count(), 0);
        assert_eq!(r.strata.len(), 1);
        assert_eq!(r.strata[0].dimension, 2);
    }

    #[test]
    fn reflection_quotient() {
        let r = CircleQuotient::reflection().strata().unwrap();
        assert!(!r.codim1_empty);
        assert!(!r.orientable);
        let pts = &r.stratum(0).unwrap().components;
        assert_eq!(pts.len(), 2);
        assert!(pts.iter().all(|c| c.isotropy == 2));
        assert!(r.stratum(1).unwrap().open_dense);
    }

    #[test]
    fn wps_never_has_codim_one() {
        for q in [
            vec![2, 3],
            vec![1, 2, 3],
            vec![2, 4, 3],
            vec![6, 10, 15],
            vec![1, 1, 1, 4],
        ] {
            let r = WpsOrbifold::new(q).unwrap().strata().unwrap();
            assert!(r.codim1_empty);
            assert!(r.strata.iter().all(|s| s.dimension % 2 == 0));
        }
    }

    #[test]
    fn curve_stratum_in_cp2() {
        // q = (2,4,3): the line z_2 = 0 minus [0:1:0] has isotropy Z_2.
        let r = WpsOrbifold::new(vec![2, 4, 3]).unwrap().strata().unwrap();
        let s2 = r.stratum(2).unwrap();
        assert!(s2
            .components
            .iter()
            .any(|c| c.isotropy == 2 && c.supports == vec![vec![0], vec![0, 1]]));
        let s0 = r.stratum(0).unwrap();
        let orders: Vec<u64> = s0.components.iter().map(|c| c.isotropy).collect();
        assert!(orders.contains(&3));
    }
}
