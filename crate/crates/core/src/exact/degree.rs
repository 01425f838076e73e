use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::orbits::OrbitPlan;
use crate::error::{Error, Result};
use crate::maps::MonomialMap;
use crate::orbifold::WpsPoint;

pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

/// Below this many orbits enumeration stays on the calling thread.
const PARALLEL_THRESHOLD: u128 = 1 << 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactConfig {
    /// Largest number of solution tuples `Π e_i` the enumerator accepts.
    pub enumeration_cap: u64,
}

impl Default for ExactConfig {
    fn default() -> Self {
        ExactConfig {
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

/// One preimage point with its weight `|Γ_y| / |Γ_x|` and orientation sign.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreimageRecord {
    pub point: WpsPoint,
    pub isotropy: u64,
    pub weight: u64,
    pub sign: i8,
}

/// Why a value counts as regular: every zero coordinate of `y` carries
/// exponent 1, so the chart lift is a local diffeomorphism at each preimage.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityCertificate {
    pub support: Vec<usize>,
    /// `(j, e_j)` for each coordinate with `y_j = 0`.
    pub off_support_exponents: Vec<(usize, u64)>,
    pub regular: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeResult {
    pub degree: i64,
    pub mod2: u8,
    pub weighted_count: u64,
    pub value: WpsPoint,
    pub preimages: Vec<PreimageRecord>,
    pub regular: RegularityCertificate,
}

fn check_target(f: &MonomialMap, y: &WpsPoint) -> Result<()> {
    if y.space() != f.target() {
        return Err(Error::WeightMismatch {
            target: f.target().weights().to_vec(),
            source_weights: y.weights().to_vec(),
        });
    }
    Ok(())
}

pub fn regularity_certificate(f: &MonomialMap, y: &WpsPoint) -> Result<RegularityCertificate> {
    check_target(f, y)?;
    let support = y.support();
    let off_support_exponents: Vec<(usize, u64)> = (0..y.coords().len())
        .filter(|j| !support.contains(j))
        .map(|j| (j, f.exponents()[j]))
        .collect();
    let regular = off_support_exponents.iter().all(|&(_, e)| e == 1);
    Ok(RegularityCertificate {
        support,
        off_support_exponents,
        regular,
    })
}

/// The lift of a monomial map in standard charts is a coordinate-power map,
/// singular exactly where a zero coordinate is raised to a power above one.
pub fn is_regular_value(f: &MonomialMap, y: &WpsPoint) -> Result<bool> {
    Ok(regularity_certificate(f, y)?.regular)
}

fn require_regular(f: &MonomialMap, y: &WpsPoint) -> Result<RegularityCertificate> {
    let cert = regularity_certificate(f, y)?;
    if !cert.regular {
        return Err(Error::NotRegular(y.to_string()));
    }
    Ok(cert)
}

fn exact_weight(y_order: u64, x_order: u64) -> Result<u64> {
    let w = Ratio::new(y_order, x_order);
    if !w.is_integer() {
        return Err(Error::NonIntegralWeight {
            num: *w.numer(),
            den: *w.denom(),
        });
    }
    Ok(w.to_integer())
}

/// All preimages of a regular value, sorted by point.
pub fn preimages(
    f: &MonomialMap,
    y: &WpsPoint,
    config: &ExactConfig,
) -> Result<Vec<PreimageRecord>> {
    require_regular(f, y)?;
    let plan = OrbitPlan::new(f, y)?;
    let needed = plan.tuple_count();
    if needed > config.enumeration_cap as u128 {
        return Err(Error::EnumerationCapExceeded {
            needed,
            cap: config.enumeration_cap,
        });
    }
    let y_order = y.isotropy().order;
    let source = f.source();
    let build = |i: u128| -> Result<PreimageRecord> {
        let k = plan.representative(i);
        let point = source.point(plan.coords(&k))?;
        let isotropy = point.isotropy().order;
        Ok(PreimageRecord {
            weight: exact_weight(y_order, isotropy)?,
            point,
            isotropy,
            sign: 1,
        })
    };
    let count = plan.orbit_count();
    let mut records: Vec<PreimageRecord> = if count > PARALLEL_THRESHOLD {
        (0..count as u64)
            .into_par_iter()
            .map(|i| build(i as u128))
            .collect::<Result<_>>()?
    } else {
        (0..count).map(build).collect::<Result<_>>()?
    };
    records.sort_by(|a, b| a.point.cmp(&b.point));

    if let Some(first) = records.first() {
        if records.iter().any(|r| r.isotropy != first.isotropy) {
            return Err(Error::Internal(format!(
                "preimages of {y} have differing isotropy orders"
            )));
        }
    }
    if records.windows(2).any(|w| w[0].point == w[1].point) {
        return Err(Error::Internal(format!("duplicate preimage of {y}")));
    }
    Ok(records)
}

/// Number of preimages and their common weight, from the orbit structure
/// alone. No points are built.
pub fn preimage_count(f: &MonomialMap, y: &WpsPoint) -> Result<(u128, u64)> {
    require_regular(f, y)?;
    let plan = OrbitPlan::new(f, y)?;
    let q = f.source().weights();
    let x_order = crate::orbifold::gcd_all(plan.support.iter().map(|&i| q[i]));
    Ok((
        plan.orbit_count(),
        exact_weight(y.isotropy().order, x_order)?,
    ))
}

/// `Σ_{x ∈ f⁻¹(y)} |Γ_y| / |Γ_x|` over enumerated preimages.
pub fn weighted_cardinality(f: &MonomialMap, y: &WpsPoint, config: &ExactConfig) -> Result<u64> {
    let records = preimages(f, y, config)?;
    sum_weights(y, &records)
}

fn sum_weights(y: &WpsPoint, records: &[PreimageRecord]) -> Result<u64> {
    let y_order = y.isotropy().order;
    let total = records.iter().fold(Ratio::from_integer(0u64), |acc, r| {
        acc + Ratio::new(y_order, r.isotropy)
    });
    if !total.is_integer() {
        return Err(Error::NonIntegralWeight {
            num: *total.numer(),
            den: *total.denom(),
        });
    }
    Ok(total.to_integer())
}

/// Degree at `y`, or at `[1:…:1]` when no value is given.
pub fn degree(f: &MonomialMap, y: Option<&WpsPoint>, config: &ExactConfig) -> Result<DegreeResult> {
    let value = match y {
        Some(y) => y.clone(),
        None => f.target().ones(),
    };
    let regular = require_regular(f, &value)?;
    let preimages = preimages(f, &value, config)?;
    let weighted_count = sum_weights(&value, &preimages)?;
    let degree = preimages
        .iter()
        .map(|r| r.sign as i64 * r.weight as i64)
        .sum::<i64>();
    Ok(DegreeResult {
        degree,
        mod2: (weighted_count % 2) as u8,
        weighted_count,
        value,
        preimages,
        regular,
    })
}

/// `Π e_i / d`.
pub fn degree_closed_form(f: &MonomialMap) -> Result<u64> {
    let num = f
        .exponents()
        .iter()
        .try_fold(1u128, |acc, &e| acc.checked_mul(e as u128))
        .ok_or(Error::Overflow("product of exponents"))?;
    let den = f.equivariance_degree() as u128;
    if num % den != 0 {
        return Err(Error::NonIntegral { num, den });
    }
    u64::try_from(num / den).map_err(|_| Error::Overflow("closed-form degree"))
}

/// At a smooth regular value every preimage is smooth.
pub fn smooth_preimage_check(f: &MonomialMap, y: &WpsPoint, config: &ExactConfig) -> Result<bool> {
    if !y.is_smooth() {
        return Err(Error::PreconditionViolated(format!(
            "{y} is not a smooth point"
        )));
    }
    if !is_regular_value(f, y)? {
        return Err(Error::PreconditionViolated(format!(
            "{y} is not a regular value"
        )));
    }
    Ok(preimages(f, y, config)?.iter().all(|r| r.isotropy == 1))
}
