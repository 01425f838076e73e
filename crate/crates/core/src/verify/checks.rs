use std::f64::consts::{FRAC_PI_2, PI, TAU};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{
    degree, degree_closed_form, is_regular_value, preimages, weighted_cardinality, ExactConfig,
};
use crate::maps::{compose, CircleMap, MonomialMap};
use crate::numeric::{
    circle_degree2, circle_eval, covering_degree, covering_projection_degree, numeric_jacobian,
    ArcSample, NumericConfig,
};
use crate::orbifold::{
    CircleGroup, CircleQuotient, ExactCoordinate, RootOfUnity, Stratified, WpsOrbifold, WpsPoint,
};

/// A failed case together with the inputs needed to replay it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub witness: Value,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub name: String,
    /// The property being checked, in one sentence.
    pub statement: String,
    pub cases: usize,
    pub failures: Vec<Failure>,
}

impl PropertyReport {
    pub fn new(name: &str, statement: &str) -> Self {
        PropertyReport {
            name: name.to_string(),
            statement: statement.to_string(),
            cases: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Counts one case and records a failure unless `ok`.
    pub fn record(
        &mut self,
        ok: bool,
        witness: impl FnOnce() -> Value,
        detail: impl FnOnce() -> String,
    ) {
        self.cases += 1;
        if !ok {
            self.failures.push(Failure {
                witness: witness(),
                detail: detail(),
            });
        }
    }

    /// Counts one case that could not be evaluated.
    pub fn record_error(&mut self, witness: Value, err: &Error) {
        self.cases += 1;
        self.failures.push(Failure {
            witness,
            detail: err.to_string(),
        });
    }

    /// Folds the cases and failures of `other` into `self`.
    pub fn absorb(&mut self, other: PropertyReport) {
        self.cases += other.cases;
        self.failures.extend(other.failures);
    }
}

/// Tolerances and seed shared by all checks.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub exact: ExactConfig,
    pub numeric: NumericConfig,
    pub seed: u64,
}

/// The two families a property can be checked on.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "family", content = "map", rename_all = "snake_case")]
pub enum MapUnderTest {
    Monomial(MonomialMap),
    Circle(CircleMap),
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).unwrap_or(Value::Null)
}

/// Points with the same support as `y`, obtained by rotating one nonzero
/// coordinate (other than the first) by `e(j/order)`, `j = 1, …, order - 1`.
/// When `y` has a single nonzero coordinate there are none.
pub fn phase_neighbours(y: &WpsPoint, order: u64) -> Vec<WpsPoint> {
    let support = y.support();
    let mut out: Vec<WpsPoint> = Vec::new();
    for &i in support.iter().skip(1) {
        for j in 1..order {
            let shift = RootOfUnity::new(j as i64, order).expect("order > 0");
            let mut coords = y.coords().to_vec();
            coords[i] = coords[i].scale(shift);
            if let Ok(p) = y.space().point(coords) {
                if &p != y {
                    out.push(p);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// The value with coordinate 1 on `support` and 0 elsewhere.
pub fn support_value(space: &WpsOrbifold, support: &[usize]) -> Result<WpsPoint> {
    let coords: Vec<ExactCoordinate> = (0..space.weights().len())
        .map(|i| {
            if support.contains(&i) {
                ExactCoordinate::ONE
            } else {
                ExactCoordinate::Zero
            }
        })
        .collect();
    space.point(coords)
}

/// Supports `S` for which the value supported on `S` is regular.
pub fn regular_supports(f: &MonomialMap) -> Vec<Vec<usize>> {
    let len = f.exponents().len();
    (1u32..(1u32 << len))
        .map(|mask| {
            (0..len)
                .filter(|&i| mask & (1 << i) != 0)
                .collect::<Vec<usize>>()
        })
        .filter(|s| (0..len).all(|j| s.contains(&j) || f.exponents()[j] == 1))
        .collect()
}

/// Compares the weighted count at `y` against each perturbation.
pub fn check_local_constancy(
    f: &MonomialMap,
    y: &WpsPoint,
    perturbations: &[WpsPoint],
    config: &VerifyConfig,
) -> Result<PropertyReport> {
    let mut report = PropertyReport::new(
        "local_constancy",
        "the weighted preimage count takes the same value at neighbouring regular values",
    );
    let base = weighted_cardinality(f, y, &config.exact)?;
    for p in perturbations {
        match weighted_cardinality(f, p, &config.exact) {
            Ok(c) => report.record(
                c == base,
                || json!({"map": f, "value": y, "perturbation": p}),
                || format!("count {c} at {p} differs from {base} at {y}"),
            ),
            Err(e) => report.record_error(json!({"map": f, "perturbation": p}), &e),
        }
    }
    Ok(report)
}

/// Numeric counterpart of [`check_local_constancy`] along a sampled path:
/// one weighted count throughout, all Jacobian signs positive, all
/// preimages certified regular.
pub fn check_local_constancy_path(
    samples: &[ArcSample],
    expected: u64,
    config: &VerifyConfig,
) -> PropertyReport {
    let mut report = PropertyReport::new(
        "local_constancy",
        "the weighted preimage count takes the same value at neighbouring regular values",
    );
    for s in samples {
        let ok = s.weighted_count == expected
            && s.signs.iter().all(|&g| g == 1)
            && s.min_singular_value > config.numeric.singular_threshold;
        report.record(
            ok,
            || to_json(s),
            || {
                format!(
                    "sample t={} gives weighted count {} (expected {expected})",
                    s.t, s.weighted_count
                )
            },
        );
    }
    report
}

/// Evenly spaced probe values in the fundamental domain of `q`, plus the
/// points `(0, ±1)`.
pub fn probe_values(q: &CircleQuotient, count: usize) -> Vec<f64> {
    let length = match q.group {
        CircleGroup::Rotation(k) => TAU / k as f64,
        CircleGroup::Reflection => PI,
    };
    let mut out: Vec<f64> = (0..count)
        .map(|j| length * (j as f64 + 0.5) / count as f64)
        .collect();
    out.push(q.fold(FRAC_PI_2));
    out.push(q.fold(3.0 * FRAC_PI_2));
    out.sort_by(|a, b| a.total_cmp(b));
    out.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
    out
}

/// Over a domain without codimension-one singular stratum, the weighted
/// count must agree at every probed regular value. Over a domain with one,
/// the check instead requires two regular values with different mod-2
/// degrees.
pub fn check_value_independence(
    map: &MapUnderTest,
    config: &VerifyConfig,
) -> Result<PropertyReport> {
    match map {
        MapUnderTest::Monomial(f) => monomial_value_independence(f, config),
        MapUnderTest::Circle(m) => circle_value_independence(m, config),
    }
}

fn monomial_value_independence(f: &MonomialMap, config: &VerifyConfig) -> Result<PropertyReport> {
    let mut report = PropertyReport::new(
        "value_independence",
        "without a codimension-one singular stratum the weighted count is the same at every regular value",
    );
    if !f.source().strata()?.codim1_empty {
        return Err(Error::Internal(
            "weighted projective space with a codimension-one stratum".into(),
        ));
    }
    let reference = degree_closed_form(f)?;
    for support in regular_supports(f) {
        let y = support_value(f.target(), &support)?;
        let mut values = vec![y.clone()];
        values.extend(phase_neighbours(&y, 5));
        for v in values {
            match weighted_cardinality(f, &v, &config.exact) {
                Ok(c) => report.record(
                    c == reference,
                    || json!({"map": f, "value": v}),
                    || format!("count {c} at {v}, expected {reference}"),
                ),
                Err(e) => report.record_error(json!({"map": f, "value": v}), &e),
            }
        }
    }
    Ok(report)
}

fn circle_value_independence(m: &CircleMap, config: &VerifyConfig) -> Result<PropertyReport> {
    let codim1_empty = m.domain.strata()?.codim1_empty;
    let mut samples = Vec::new();
    for v in probe_values(&m.codomain, 32) {
        match circle_degree2(m, v, &config.numeric) {
            Ok(d) => samples.push(d),
            Err(Error::CriticalValue { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    if codim1_empty {
        let mut report = PropertyReport::new(
            "value_independence",
            "without a codimension-one singular stratum the weighted count is the same at every regular value",
        );
        let first = samples
            .first()
            .map(|d| (d.weighted_count, d.oriented_degree));
        for d in &samples {
            report.record(
                Some((d.weighted_count, d.oriented_degree)) == first,
                || json!({"map": m, "value": d.value}),
                || {
                    format!(
                        "count {} at angle {}, expected {:?}",
                        d.weighted_count, d.value, first
                    )
                },
            );
        }
        Ok(report)
    } else {
        let mut report = PropertyReport::new(
            "counterexample",
            "with a codimension-one singular stratum the mod-2 degree can depend on the regular value",
        );
        let odd = samples.iter().find(|d| d.mod2 == 1);
        let even = samples.iter().find(|d| d.mod2 == 0);
        report.record(
            odd.is_some() && even.is_some(),
            || json!({"map": m, "values": samples.iter().map(|d| d.value).collect::<Vec<_>>()}),
            || "every probed regular value gives the same mod-2 degree".to_string(),
        );
        Ok(report)
    }
}

/// `deg(g ∘ f) = deg(g) · deg(f)`, all three by orbit enumeration.
pub fn check_multiplicativity(
    f: &MonomialMap,
    g: &MonomialMap,
    config: &VerifyConfig,
) -> Result<PropertyReport> {
    let mut report = PropertyReport::new(
        "multiplicativity",
        "the degree of a composition is the product of the degrees",
    );
    let h = compose(f, g)?;
    let df = degree(f, None, &config.exact)?.degree;
    let dg = degree(g, None, &config.exact)?.degree;
    let dh = degree(&h, None, &config.exact)?.degree;
    report.record(
        dh == df * dg,
        || json!({"f": f, "g": g}),
        || format!("deg(g∘f) = {dh} but deg(g)·deg(f) = {dg}·{df}"),
    );
    Ok(report)
}

/// Maps with the same underlying map agree in mod-2 degree (and in oriented
/// degree where defined) at common regular values.
pub fn check_same_underlying(
    a: &MapUnderTest,
    b: &MapUnderTest,
    config: &VerifyConfig,
) -> Result<PropertyReport> {
    let mut report = PropertyReport::new(
        "same_underlying",
        "maps with the same underlying map have the same mod-2 degree at smooth regular values",
    );
    match (a, b) {
        (MapUnderTest::Monomial(fa), MapUnderTest::Monomial(fb)) => {
            if fa.source() != fb.source() || fa.target() != fb.target() {
                return Err(Error::PreconditionViolated(
                    "maps have different ends".into(),
                ));
            }
            let mut probes = vec![fa.source().ones()];
            probes.extend(phase_neighbours(&fa.source().ones(), 7));
            for i in 0..fa.source().weights().len() {
                probes.push(fa.source().vertex(i)?);
            }
            for x in &probes {
                if fa.underlying_image(x)? != fb.underlying_image(x)? {
                    return Err(Error::PreconditionViolated(format!(
                        "underlying maps differ at {x}"
                    )));
                }
            }
            for support in regular_supports(fa) {
                let y = support_value(fa.target(), &support)?;
                if !y.is_smooth() || !is_regular_value(fb, &y)? {
                    continue;
                }
                let da = degree(fa, Some(&y), &config.exact)?;
                let db = degree(fb, Some(&y), &config.exact)?;
                report.record(
                    da.mod2 == db.mod2 && da.degree == db.degree,
                    || json!({"a": fa, "b": fb, "value": y}),
                    || format!("degrees {} and {} differ at {y}", da.degree, db.degree),
                );
            }
        }
        (MapUnderTest::Circle(ma), MapUnderTest::Circle(mb)) => {
            if ma.domain != mb.domain || ma.codomain != mb.codomain {
                return Err(Error::PreconditionViolated(
                    "maps have different ends".into(),
                ));
            }
            let worst = underlying_distance(ma, mb, 10_000);
            if worst >= 1e-12 {
                return Err(Error::PreconditionViolated(format!(
                    "underlying maps differ by {worst:e}"
                )));
            }
            for v in probe_values(&ma.codomain, 64) {
                if ma.codomain.isotropy_at(v, 1e-9) != 1 {
                    continue;
                }
                let (da, db) = match (
                    circle_degree2(ma, v, &config.numeric),
                    circle_degree2(mb, v, &config.numeric),
                ) {
                    (Ok(da), Ok(db)) => (da, db),
                    (Err(Error::CriticalValue { .. }), _)
                    | (_, Err(Error::CriticalValue { .. })) => continue,
                    (Err(e), _) | (_, Err(e)) => return Err(e),
                };
                report.record(
                    da.mod2 == db.mod2 && da.oriented_degree == db.oriented_degree,
                    || json!({"a": ma, "b": mb, "value": v}),
                    || {
                        format!(
                            "mod-2 degrees {} and {} differ at angle {v}",
                            da.mod2, db.mod2
                        )
                    },
                );
            }
        }
        _ => {
            return Err(Error::InvalidInput(
                "maps belong to different families".into(),
            ))
        }
    }
    Ok(report)
}

/// Largest distance, in the codomain quotient, between the two maps over
/// `samples` evenly spaced angles.
pub fn underlying_distance(a: &CircleMap, b: &CircleMap, samples: usize) -> f64 {
    (0..samples)
        .map(|j| {
            let theta = TAU * j as f64 / samples as f64;
            a.codomain
                .folded_distance(circle_eval(a, theta), circle_eval(b, theta))
        })
        .fold(0.0, f64::max)
}

/// Quotient projections `S^1 → S^1 // Z_k` have degree `k`, and the power map
/// `θ ↦ mθ` descends to `S^1 // Z_k → S^1 // Z_b` with degree `m·b/k`.
pub fn check_covering(
    projections: &[u64],
    grid: &[(u64, u64, u64)],
    config: &VerifyConfig,
) -> Result<PropertyReport> {
    let mut report = PropertyReport::new(
        "covering",
        "the quotient projection has degree |G| and the power map descends with degree m·|G2|/|G1|",
    );
    for &k in projections {
        let d = covering_projection_degree(k, &config.numeric)?;
        report.record(
            d == k as i64,
            || json!({"projection": k}),
            || format!("projection onto S^1//Z_{k} has degree {d}"),
        );
    }
    for &(k, m, b) in grid {
        let d = covering_degree(k, m, b, &config.numeric)?;
        let expected = (m * b / k) as i64;
        report.record(
            d == expected,
            || json!({"k": k, "m": m, "b": b}),
            || format!("power {m} from Z_{k} to Z_{b} has degree {d}, expected {expected}"),
        );
    }
    Ok(report)
}

/// Orbit enumeration and the closed form `Π e_i / d` agree.
pub fn check_enumeration_oracle(f: &MonomialMap, config: &VerifyConfig) -> Result<PropertyReport> {
    let mut report = PropertyReport::new(
        "oracle_equivalence",
        "orbit enumeration of preimages matches the closed form Π e_i / d",
    );
    let closed = degree_closed_form(f)?;
    let counted = degree(f, None, &config.exact)?;
    report.record(
        counted.degree == closed as i64 && counted.weighted_count == closed,
        || json!({"map": f}),
        || format!("enumeration gives {}, closed form {closed}", counted.degree),
    );
    Ok(report)
}

/// The floating-point Jacobian at each of the first `limit` exact preimages
/// of `y` is certified regular with the exact engine's sign.
pub fn check_numeric_agreement(
    f: &MonomialMap,
    y: &WpsPoint,
    limit: usize,
    config: &VerifyConfig,
) -> Result<PropertyReport> {
    let mut report = PropertyReport::new(
        "numeric_agreement",
        "floating-point Jacobian signs and regularity certificates match the exact engine",
    );
    for rec in preimages(f, y, &config.exact)?.into_iter().take(limit) {
        match numeric_jacobian(f, &rec.point.to_complex(), &config.numeric) {
            Ok(jac) => report.record(
                jac.sign == rec.sign,
                || json!({"map": f, "value": y, "preimage": rec.point}),
                || format!("numeric sign {} but exact sign {}", jac.sign, rec.sign),
            ),
            Err(e) => report.record_error(json!({"map": f, "value": y, "preimage": rec.point}), &e),
        }
    }
    Ok(report)
}
