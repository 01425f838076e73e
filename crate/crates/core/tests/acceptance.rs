//! Acceptance criteria. Each criterion prints one `[PASS]` or `[FAIL]` line;
//! the process exits nonzero if any criterion fails.

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::process::ExitCode;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use orbifold_degree::exact::{
    degree, is_regular_value, preimages, weighted_cardinality, ExactConfig,
};
use orbifold_degree::maps::{compose, CircleMap, MonomialMap};
use orbifold_degree::numeric::{
    act, circle_degree2, covering_degree, covering_projection_degree, numeric_jacobian,
    singular_arc, slice_lift, NumericConfig, SliceChart,
};
use orbifold_degree::orbifold::{ExactCoordinate, RootOfUnity, WpsOrbifold};
use orbifold_degree::verify::corpus::{random_composable_pairs, random_corpus, CORPUS_TUPLE_BOUND};
use orbifold_degree::verify::{check_same_underlying, MapUnderTest, VerifyConfig, COVERING_GRID};
use orbifold_degree::Error;

/// Accuracy required of numeric preimage angles.
const ANGLE_TOL: f64 = 1e-10;
/// Newton residual bound for slice lifts.
const RESIDUAL_TOL: f64 = 1e-9;
/// Agreement of correction phases for isotropy-related inputs.
const PHASE_TOL: f64 = 1e-9;
/// Smallest singular value certifying a regular point.
const SINGULAR_TOL: f64 = 1e-6;
const SEED: u64 = 0;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn wps(q: &[u64]) -> WpsOrbifold {
    WpsOrbifold::new(q.to_vec()).unwrap()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(q: &[u64]) -> u64 {
    q.iter().fold(1, |acc, &x| acc / gcd(acc, x) * x)
}

fn product(q: &[u64]) -> u64 {
    q.iter().product()
}

fn weight_sets() -> Vec<Vec<u64>> {
    let mut sets = vec![vec![1, 3], vec![2, 3], vec![1, 2, 3], vec![3, 4, 5]];
    for n in [1, 2, 3] {
        for k in [2, 3, 5] {
            let mut q = vec![1; n];
            q.push(k);
            sets.push(q);
        }
    }
    sets
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ac1() -> Outcome {
    let cfg = ExactConfig::default();
    let sets = weight_sets();
    for q in &sets {
        let d = degree(&MonomialMap::f_q(&wps(q)), None, &cfg).map_err(|e| e.to_string())?;
        ensure(d.degree == product(q) as i64, || {
            format!("f_{q:?}: {} != {}", d.degree, product(q))
        })?;
    }
    Ok(format!("deg f_q = Π q_i on {} weight vectors", sets.len()))
}

fn ac2() -> Outcome {
    let cfg = ExactConfig::default();
    let sets = weight_sets();
    for q in &sets {
        let n = q.len() as u32 - 1;
        let expected = lcm(q).pow(n) / product(q);
        let d = degree(&MonomialMap::g_q(&wps(q)), None, &cfg).map_err(|e| e.to_string())?;
        ensure(d.degree == expected as i64, || {
            format!("g_{q:?}: {} != {expected}", d.degree)
        })?;
    }
    Ok(format!(
        "deg g_q = lcm(q)^n / Π q_i on {} weight vectors",
        sets.len()
    ))
}

fn ac3() -> Outcome {
    let cfg = ExactConfig::default();
    let cases: [(&[u64], &[u64], i64); 3] = [
        (&[1, 3], &[1, 2], 2),
        (&[2, 3], &[1, 5], 5),
        (&[1, 2, 3], &[1, 1, 2], 12),
    ];
    for (q, r, literal) in cases {
        let n = q.len() as u32 - 1;
        let expected = (lcm(q).pow(n) / product(q) * product(r)) as i64;
        ensure(expected == literal, || {
            format!("oracle {expected} disagrees with {literal}")
        })?;
        let h = MonomialMap::h_rq(&wps(r), &wps(q)).map_err(|e| e.to_string())?;
        let d = degree(&h, None, &cfg).map_err(|e| e.to_string())?;
        ensure(d.degree == expected, || {
            format!("h for q={q:?}, r={r:?}: {} != {expected}", d.degree)
        })?;
    }
    Ok("deg h_rq = 2, 5, 12".into())
}

fn ac4() -> Outcome {
    let cfg = ExactConfig::default();
    let mut cases = 0;
    for n in [1usize, 2] {
        for k in [2u64, 3, 5] {
            let mut q = vec![1; n];
            q.push(k);
            let f = MonomialMap::f_q(&wps(&q));
            let y = f.target().vertex(n).map_err(|e| e.to_string())?;
            ensure(is_regular_value(&f, &y) == Ok(true), || {
                format!("{y} not certified regular")
            })?;
            let pre = preimages(&f, &y, &cfg).map_err(|e| e.to_string())?;
            ensure(pre.len() == 1 && pre[0].weight == k, || {
                format!("{y}: {pre:?}")
            })?;
            let w = weighted_cardinality(&f, &y, &cfg).map_err(|e| e.to_string())?;
            ensure(w == k, || format!("{y}: weighted count {w} != {k}"))?;
            cases += 1;
        }
    }
    Ok(format!(
        "singular vertex is regular with one preimage of weight k ({cases} maps)"
    ))
}

fn ac5() -> Outcome {
    let numeric = NumericConfig::default();
    let mut cases = 0;
    for n in [1usize, 2] {
        for k in [2u64, 3, 5] {
            let mut q = vec![1; n];
            q.push(k);
            let f = MonomialMap::f_q(&wps(&q));
            let y = f.target().vertex(0).map_err(|e| e.to_string())?;
            ensure(is_regular_value(&f, &y) == Ok(false), || {
                format!("{y} certified regular")
            })?;
            let x = f.source().vertex(0).map_err(|e| e.to_string())?;
            let numeric_verdict = numeric_jacobian(&f, &x.to_complex(), &numeric);
            ensure(
                matches!(numeric_verdict, Err(Error::IrregularPoint(_))),
                || format!("numeric Jacobian at {x}: {numeric_verdict:?}"),
            )?;
            cases += 1;
        }
    }
    Ok(format!(
        "smooth vertex [1:0:…:0] is not regular ({cases} maps, exact and numeric)"
    ))
}

fn ac6() -> Outcome {
    let cfg = NumericConfig::default();
    let f = CircleMap::half_fold();
    let up = circle_degree2(&f, FRAC_PI_2, &cfg).map_err(|e| e.to_string())?;
    ensure(up.mod2 == 1 && up.weighted_count == 1, || {
        format!("at (0,1): {up:?}")
    })?;
    ensure(up.preimages.len() == 1, || {
        format!("at (0,1): {:?}", up.preimages)
    })?;
    let err = (up.preimages[0].angle - FRAC_PI_2).abs();
    ensure(err < ANGLE_TOL, || format!("preimage angle off by {err:e}"))?;
    let down = circle_degree2(&f, 3.0 * FRAC_PI_2, &cfg).map_err(|e| e.to_string())?;
    ensure(down.mod2 == 0 && down.weighted_count == 0, || {
        format!("at (0,-1): {down:?}")
    })?;
    Ok(format!(
        "half fold: mod-2 degree 1 at (0,1), 0 at (0,-1); angle error {err:.1e}"
    ))
}

fn ac7() -> Outcome {
    let cfg = NumericConfig::default();
    for k in 2..=6u64 {
        let d = covering_projection_degree(k, &cfg).map_err(|e| e.to_string())?;
        ensure(d == k as i64, || format!("projection onto Z_{k}: {d}"))?;
    }
    for (k, m, b) in COVERING_GRID {
        // deg(f̂) = m for θ ↦ mθ.
        let expected = m as i64 * b as i64 / k as i64;
        let d = covering_degree(k, m, b, &cfg).map_err(|e| e.to_string())?;
        ensure(d == expected, || {
            format!("power {m}, Z_{k} -> Z_{b}: {d} != {expected}")
        })?;
    }
    Ok(format!(
        "projections k = 2..6 have degree k; {}-case relation grid holds",
        COVERING_GRID.len()
    ))
}

fn ac8() -> Outcome {
    let cfg = ExactConfig::default();
    let maps = random_corpus(SEED, 50);
    for f in &maps {
        let tuples: u128 = f.exponents().iter().map(|&e| e as u128).product();
        ensure(tuples <= CORPUS_TUPLE_BOUND, || {
            format!("{f:?} exceeds the tuple bound")
        })?;
        let expected = tuples / f.equivariance_degree() as u128;
        let d = degree(f, None, &cfg).map_err(|e| e.to_string())?;
        ensure(d.degree as u128 == expected, || {
            format!("{f:?}: {} != {expected}", d.degree)
        })?;
    }
    Ok(format!(
        "enumeration equals Π e_i / d on {} random maps",
        maps.len()
    ))
}

fn ac9() -> Outcome {
    let cfg = ExactConfig::default();
    let q13 = wps(&[1, 3]);
    let mut pairs = vec![
        (MonomialMap::f_q(&q13), MonomialMap::g_q(&q13)),
        (MonomialMap::g_q(&q13), MonomialMap::f_q(&wps(&[1, 2]))),
        (
            MonomialMap::g_q(&wps(&[1, 2, 3])),
            MonomialMap::f_q(&wps(&[1, 1, 2])),
        ),
    ];
    pairs.extend(random_composable_pairs(SEED, 20));
    for (f, g) in &pairs {
        let h = compose(f, g).map_err(|e| e.to_string())?;
        let df = degree(f, None, &cfg).map_err(|e| e.to_string())?.degree;
        let dg = degree(g, None, &cfg).map_err(|e| e.to_string())?.degree;
        let dh = degree(&h, None, &cfg).map_err(|e| e.to_string())?.degree;
        ensure(dh == df * dg, || {
            format!("{f:?} then {g:?}: {dh} != {df}·{dg}")
        })?;
    }
    Ok(format!("deg(g∘f) = deg(g)·deg(f) on {} pairs", pairs.len()))
}

fn ac10() -> Outcome {
    let exact = ExactConfig::default();
    let f = MonomialMap::f_q(&wps(&[1, 3]));
    let one = ExactCoordinate::ONE;
    let mut raw = std::collections::BTreeSet::new();
    let mut values = vec![f.target().point(vec![ExactCoordinate::Zero, one]).unwrap()];
    for m in 1..=12 {
        let c = ExactCoordinate::Unit(RootOfUnity::new(1, m).unwrap());
        values.push(f.target().point(vec![c, one]).unwrap());
    }
    for y in &values {
        let pre = preimages(&f, y, &exact).map_err(|e| e.to_string())?;
        let w = weighted_cardinality(&f, y, &exact).map_err(|e| e.to_string())?;
        ensure(w == 3, || format!("exact weighted count {w} at {y}"))?;
        raw.insert(pre.len());
    }
    ensure(raw == [1, 3].into(), || format!("exact raw counts {raw:?}"))?;

    let samples = singular_arc(21, &NumericConfig::default()).map_err(|e| e.to_string())?;
    let numeric_raw: std::collections::BTreeSet<usize> =
        samples.iter().map(|s| s.raw_count).collect();
    ensure(numeric_raw == [1, 3].into(), || {
        format!("numeric raw counts {numeric_raw:?}")
    })?;
    for s in &samples {
        ensure(s.weighted_count == 3, || {
            format!("numeric weighted count {} at t={}", s.weighted_count, s.t)
        })?;
        ensure(s.signs.iter().all(|&g| g == 1), || {
            format!("signs {:?} at t={}", s.signs, s.t)
        })?;
        ensure(s.min_singular_value > SINGULAR_TOL, || {
            format!("singular value {:e} at t={}", s.min_singular_value, s.t)
        })?;
    }
    Ok(format!(
        "weighted count 3 at {} exact and {} numeric values; raw counts {{1, 3}}",
        values.len(),
        samples.len()
    ))
}

fn random_sphere_point(rng: &mut ChaCha8Rng, len: usize) -> Vec<Complex64> {
    (0..len)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect()
}

fn ac11() -> Outcome {
    let cfg = NumericConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let maps = random_corpus(SEED, 100);
    let mut worst = 0.0f64;
    for f in &maps {
        let x = random_sphere_point(&mut rng, f.exponents().len());
        let chart = SliceChart::new(f.source().weights(), &x).map_err(|e| e.to_string())?;
        let scale = 10f64.powf(rng.gen_range(-4.0..-2.0));
        let c = nalgebra::DVector::from_fn(chart.dim(), |_, _| rng.gen_range(-1.0..1.0) * scale);
        let y = chart.point_at(&c);
        let ev = slice_lift(f, &chart.base, &y, &cfg).map_err(|e| format!("{f:?}: {e}"))?;
        ensure(ev.residual.abs() < RESIDUAL_TOL, || {
            format!("{f:?}: residual {:e}", ev.residual)
        })?;
        worst = worst.max(ev.residual.abs());
    }

    // Isotropy elements fix the base point, preserve its slice, and leave the
    // correction phase unchanged. With weights (k, k, 1) and e = (k, k, k),
    // Z_k fixes [1:1:0].
    let mut phase_cases = 0;
    let mut largest_phase = 0.0f64;
    for k in [2u64, 3, 4] {
        let w = [k, k, 1];
        let f = MonomialMap::new(w.to_vec(), w.to_vec(), vec![k; 3]).map_err(|e| e.to_string())?;
        let x = [
            Complex64::new(1.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 0.0),
        ];
        let chart = SliceChart::new(&w, &x).map_err(|e| e.to_string())?;
        for _ in 0..10 {
            let c = nalgebra::DVector::from_fn(chart.dim(), |_, _| rng.gen_range(-0.03..0.03));
            let y = chart.point_at(&c);
            let a = slice_lift(&f, &chart.base, &y, &cfg).map_err(|e| e.to_string())?;
            largest_phase = largest_phase.max(a.phase.abs());
            for j in 1..k {
                let gy = act(&w, TAU * j as f64 / k as f64, &y);
                let b = slice_lift(&f, &chart.base, &gy, &cfg).map_err(|e| e.to_string())?;
                ensure((a.phase - b.phase).abs() < PHASE_TOL, || {
                    format!("phase {} vs {} for weights {w:?}", a.phase, b.phase)
                })?;
                phase_cases += 1;
            }
        }
    }
    ensure(largest_phase > 1e-6, || {
        "every correction phase vanished".into()
    })?;
    Ok(format!(
        "{} slice lifts converge (worst residual {worst:.1e}); {phase_cases} isotropy phase checks",
        maps.len()
    ))
}

fn ac12() -> Outcome {
    let rep = check_same_underlying(
        &MapUnderTest::Circle(CircleMap::essential_f()),
        &MapUnderTest::Circle(CircleMap::essential_g()),
        &VerifyConfig::default(),
    )
    .map_err(|e| e.to_string())?;
    ensure(rep.passed(), || format!("{:?}", rep.failures))?;
    ensure(rep.cases >= 50, || {
        format!("only {} comparable values", rep.cases)
    })?;
    let cfg = NumericConfig::default();
    for v in [0.3, 1.0, 2.0, PI - 0.3] {
        let a = circle_degree2(&CircleMap::essential_f(), v, &cfg).map_err(|e| e.to_string())?;
        let b = circle_degree2(&CircleMap::essential_g(), v, &cfg).map_err(|e| e.to_string())?;
        ensure(a.weighted_count == b.weighted_count, || {
            format!(
                "counts {} and {} at {v}",
                a.weighted_count, b.weighted_count
            )
        })?;
    }
    Ok(format!(
        "essential pair agrees in mod-2 degree at {} smooth regular values",
        rep.cases
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("AC1", ac1),
        ("AC2", ac2),
        ("AC3", ac3),
        ("AC4", ac4),
        ("AC5", ac5),
        ("AC6", ac6),
        ("AC7", ac7),
        ("AC8", ac8),
        ("AC9", ac9),
        ("AC10", ac10),
        ("AC11", ac11),
        ("AC12", ac12),
    ];
    let mut failed = 0;
    for (id, check) in criteria {
        match check() {
            Ok(msg) => println!("[PASS] {id:<4} {msg}"),
            Err(msg) => {
                failed += 1;
                println!("[FAIL] {id:<4} {msg}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
