use rand::Rng;
use rayon::prelude::*;
use serde_json::json;

use super::checks::*;
use super::corpus::{random_composable_pairs, random_corpus, reference_maps, rng};
use crate::error::{Error, Result};
use crate::maps::{CircleMap, MonomialMap};
use crate::numeric::singular_arc;
use crate::orbifold::{ExactCoordinate, RootOfUnity, WpsOrbifold};

/// Every suite name accepted by [`run_suite`], besides `all`.
pub const SUITES: &[&str] = &[
    "counterexample",
    "covering",
    "local_constancy",
    "multiplicativity",
    "numeric_agreement",
    "oracle_equivalence",
    "same_underlying",
    "value_independence",
];

/// Size of the random map corpus used by the corpus-driven suites.
pub const CORPUS_SIZE: usize = 50;

/// Random (map, regular value) pairs checked by `numeric_agreement`.
pub const AGREEMENT_PAIRS: usize = 100;

fn wps(q: &[u64]) -> WpsOrbifold {
    WpsOrbifold::new(q.to_vec()).expect("effective weights")
}

/// Merges a fallible check into `report`, turning errors into failures.
fn absorb(
    report: &mut PropertyReport,
    witness: serde_json::Value,
    outcome: Result<PropertyReport>,
) {
    match outcome {
        Ok(r) => report.absorb(r),
        Err(e) => report.record_error(witness, &e),
    }
}

/// Runs one suite, or every suite in parallel for `all`. Reports are sorted
/// by name.
pub fn run_suite(name: &str, config: &VerifyConfig) -> Result<Vec<PropertyReport>> {
    let names: Vec<&str> = if name == "all" {
        SUITES.to_vec()
    } else if SUITES.contains(&name) {
        vec![name]
    } else {
        return Err(Error::InvalidInput(format!(
            "unknown suite `{name}`; expected all or one of {}",
            SUITES.join(", ")
        )));
    };
    let mut reports: Vec<PropertyReport> = names.par_iter().map(|n| run_one(n, config)).collect();
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(reports)
}

fn run_one(name: &str, config: &VerifyConfig) -> PropertyReport {
    match name {
        "counterexample" => counterexample(config),
        "covering" => covering(config),
        "local_constancy" => local_constancy(config),
        "multiplicativity" => multiplicativity(config),
        "numeric_agreement" => numeric_agreement(config),
        "oracle_equivalence" => oracle_equivalence(config),
        "same_underlying" => same_underlying(config),
        "value_independence" => value_independence(config),
        _ => unreachable!("suite names are validated by run_suite"),
    }
}

fn counterexample(config: &VerifyConfig) -> PropertyReport {
    let map = MapUnderTest::Circle(CircleMap::half_fold());
    match check_value_independence(&map, config) {
        Ok(r) => r,
        Err(e) => {
            let mut r = PropertyReport::new("counterexample", "");
            r.record_error(json!({"map": map}), &e);
            r
        }
    }
}

/// `(k, m, b)`: power `m` from `S^1//Z_k` to `S^1//Z_b`.
pub const COVERING_GRID: [(u64, u64, u64); 10] = [
    (3, 6, 1),
    (4, 4, 1),
    (1, 5, 1),
    (2, 2, 1),
    (2, 1, 2),
    (4, 2, 2),
    (6, 3, 2),
    (3, 1, 3),
    (5, 10, 1),
    (6, 4, 3),
];

fn covering(config: &VerifyConfig) -> PropertyReport {
    let mut grid = COVERING_GRID.to_vec();
    grid.extend((1..=4).map(|m| (1, m, 1)));
    match check_covering(&[2, 3, 4, 5, 6], &grid, config) {
        Ok(r) => r,
        Err(e) => {
            let mut r = PropertyReport::new("covering", "");
            r.record_error(json!({"grid": grid}), &e);
            r
        }
    }
}

fn local_constancy(config: &VerifyConfig) -> PropertyReport {
    let mut report = PropertyReport::new(
        "local_constancy",
        "the weighted preimage count takes the same value at neighbouring regular values",
    );
    let one = ExactCoordinate::ONE;
    let f13 = MonomialMap::f_q(&wps(&[1, 3]));
    let singular = f13
        .target()
        .point(vec![ExactCoordinate::Zero, one])
        .expect("valid point");
    let around: Vec<_> = (2..=12)
        .map(|m| {
            let c = ExactCoordinate::Unit(RootOfUnity::new(1, m).expect("m > 0"));
            f13.target().point(vec![c, one]).expect("valid point")
        })
        .collect();
    let cases: Vec<(
        MonomialMap,
        crate::orbifold::WpsPoint,
        Vec<crate::orbifold::WpsPoint>,
        u64,
    )> = {
        let id = MonomialMap::identity(&WpsOrbifold::projective(1));
        let h = MonomialMap::h_rq(&wps(&[1, 2]), &wps(&[1, 3])).expect("same dimension");
        let id_y = id.target().ones();
        let h_y = h.target().ones();
        vec![
            (f13.clone(), singular, around, 3),
            (id.clone(), id_y.clone(), phase_neighbours(&id_y, 7), 1),
            (h.clone(), h_y.clone(), phase_neighbours(&h_y, 7), 2),
        ]
    };
    for (f, y, near, expected) in cases {
        let witness = json!({"map": f, "value": y});
        match crate::exact::weighted_cardinality(&f, &y, &config.exact) {
            Ok(c) => report.record(
                c == expected,
                || witness.clone(),
                || format!("count {c} at {y}, expected {expected}"),
            ),
            Err(e) => report.record_error(witness.clone(), &e),
        }
        absorb(
            &mut report,
            witness,
            check_local_constancy(&f, &y, &near, config),
        );
    }
    for f in random_corpus(config.seed, 10) {
        let y = f.target().ones();
        let near = phase_neighbours(&y, 5);
        absorb(
            &mut report,
            json!({"map": f}),
            check_local_constancy(&f, &y, &near, config),
        );
    }
    match singular_arc(21, &config.numeric) {
        Ok(samples) => report.absorb(check_local_constancy_path(&samples, 3, config)),
        Err(e) => report.record_error(json!({"arc": "f_(1,3) through [0:1]"}), &e),
    }
    report
}

fn multiplicativity(config: &VerifyConfig) -> PropertyReport {
    let mut report = PropertyReport::new(
        "multiplicativity",
        "the degree of a composition is the product of the degrees",
    );
    let q = wps(&[1, 3]);
    let mut pairs = vec![
        (MonomialMap::f_q(&q), MonomialMap::g_q(&q)),
        (MonomialMap::g_q(&q), MonomialMap::f_q(&wps(&[1, 2]))),
        (MonomialMap::f_q(&q), MonomialMap::identity(&q)),
    ];
    pairs.extend(random_composable_pairs(config.seed, 20));
    for (f, g) in pairs {
        absorb(
            &mut report,
            json!({"f": f, "g": g}),
            check_multiplicativity(&f, &g, config),
        );
    }
    report
}

/// Random regular value of `f` with exact root-of-unity phases.
fn random_regular_value(
    f: &MonomialMap,
    rng: &mut rand_chacha::ChaCha8Rng,
) -> crate::orbifold::WpsPoint {
    let supports = regular_supports(f);
    let support = &supports[rng.gen_range(0..supports.len())];
    let coords: Vec<ExactCoordinate> = (0..f.exponents().len())
        .map(|i| {
            if support.contains(&i) {
                let m = rng.gen_range(1..=12u64);
                let a = rng.gen_range(0..m) as i64;
                ExactCoordinate::Unit(RootOfUnity::new(a, m).expect("m > 0"))
            } else {
                ExactCoordinate::Zero
            }
        })
        .collect();
    f.target().point(coords).expect("valid point")
}

fn numeric_agreement(config: &VerifyConfig) -> PropertyReport {
    let mut report = PropertyReport::new(
        "numeric_agreement",
        "floating-point Jacobian signs and regularity certificates match the exact engine",
    );
    let mut rng = rng(config.seed.wrapping_add(1));
    let maps = random_corpus(config.seed, AGREEMENT_PAIRS);
    let results: Vec<(serde_json::Value, Result<PropertyReport>)> = maps
        .iter()
        .map(|f| (f, random_regular_value(f, &mut rng)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(f, y)| {
            (
                json!({"map": f, "value": y}),
                check_numeric_agreement(f, &y, 4, config),
            )
        })
        .collect();
    for (witness, outcome) in results {
        absorb(&mut report, witness, outcome);
    }
    report
}

fn oracle_equivalence(config: &VerifyConfig) -> PropertyReport {
    let mut report = PropertyReport::new(
        "oracle_equivalence",
        "orbit enumeration of preimages matches the closed form Π e_i / d",
    );
    let mut maps = reference_maps();
    maps.extend(random_corpus(config.seed, CORPUS_SIZE));
    for f in maps {
        absorb(
            &mut report,
            json!({"map": f}),
            check_enumeration_oracle(&f, config),
        );
    }
    report
}

fn same_underlying(config: &VerifyConfig) -> PropertyReport {
    let mut report = PropertyReport::new(
        "same_underlying",
        "maps with the same underlying map have the same mod-2 degree at smooth regular values",
    );
    let f13 = MonomialMap::f_q(&wps(&[1, 3]));
    let rebuilt = MonomialMap::new(vec![1, 1], vec![1, 3], vec![1, 3]).expect("valid map");
    let pairs = vec![
        (
            MapUnderTest::Circle(CircleMap::essential_f()),
            MapUnderTest::Circle(CircleMap::essential_g()),
        ),
        (
            MapUnderTest::Monomial(f13.clone()),
            MapUnderTest::Monomial(f13.clone()),
        ),
        (MapUnderTest::Monomial(f13), MapUnderTest::Monomial(rebuilt)),
    ];
    for (a, b) in pairs {
        absorb(
            &mut report,
            json!({"a": a, "b": b}),
            check_same_underlying(&a, &b, config),
        );
    }
    report
}

fn value_independence(config: &VerifyConfig) -> PropertyReport {
    let mut report = PropertyReport::new(
        "value_independence",
        "without a codimension-one singular stratum the weighted count is the same at every regular value",
    );
    let mut maps: Vec<MapUnderTest> = vec![
        MapUnderTest::Monomial(MonomialMap::f_q(&wps(&[2, 3, 5]))),
        MapUnderTest::Monomial(MonomialMap::identity(&WpsOrbifold::projective(1))),
        MapUnderTest::Circle(CircleMap::power(6, 3, 1).expect("3 | 6")),
        MapUnderTest::Circle(CircleMap::covering(4).expect("k > 0")),
    ];
    maps.extend(reference_maps().into_iter().map(MapUnderTest::Monomial));
    maps.extend(
        random_corpus(config.seed, CORPUS_SIZE)
            .into_iter()
            .map(MapUnderTest::Monomial),
    );
    for m in maps {
        absorb(
            &mut report,
            json!({"map": m}),
            check_value_independence(&m, config),
        );
    }
    report
}
