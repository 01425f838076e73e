//! Seeded random monomial maps, built by chaining the two generator families:
//! `f_q : CP^n → CP^n(q)` and `g_q : CP^n(q) → CP^n`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::maps::{compose, MonomialMap};
use crate::orbifold::{gcd_all, WpsOrbifold};

/// Upper bound on `Π e_i` for corpus maps.
pub const CORPUS_TUPLE_BOUND: u128 = 100_000;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn tuple_count(f: &MonomialMap) -> u128 {
    f.exponents().iter().map(|&e| e as u128).product()
}

/// Effective weights of length `n + 1` with entries in `1..=max`, not all one.
pub fn random_weights(rng: &mut ChaCha8Rng, n: usize, max: u64) -> WpsOrbifold {
    loop {
        let q: Vec<u64> = (0..=n).map(|_| rng.gen_range(1..=max)).collect();
        if gcd_all(q.iter().copied()) == 1 && q.iter().any(|&w| w > 1) {
            return WpsOrbifold::new(q).expect("effective weights");
        }
    }
}

/// The next generator applied after a map landing in `space`.
fn step(rng: &mut ChaCha8Rng, space: &WpsOrbifold) -> MonomialMap {
    if space.weights().iter().all(|&w| w == 1) {
        MonomialMap::f_q(&random_weights(rng, space.complex_dim(), 6))
    } else {
        MonomialMap::g_q(space)
    }
}

/// A chain of one to three generators starting at a random space.
pub fn random_map(rng: &mut ChaCha8Rng) -> MonomialMap {
    loop {
        let n = rng.gen_range(1..=3);
        let start = if rng.gen_bool(0.5) {
            WpsOrbifold::projective(n)
        } else {
            random_weights(rng, n, 6)
        };
        let mut f = step(rng, &start);
        for _ in 1..rng.gen_range(1..=3) {
            let g = step(rng, f.target());
            f = compose(&f, &g).expect("generators chain by construction");
        }
        if tuple_count(&f) <= CORPUS_TUPLE_BOUND {
            return f;
        }
    }
}

pub fn random_corpus(seed: u64, count: usize) -> Vec<MonomialMap> {
    let mut rng = rng(seed);
    (0..count).map(|_| random_map(&mut rng)).collect()
}

/// Pairs `(f, g)` with `g ∘ f` defined and within the tuple bound.
pub fn random_composable_pairs(seed: u64, count: usize) -> Vec<(MonomialMap, MonomialMap)> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let f = random_map(&mut rng);
        let mut g = step(&mut rng, f.target());
        for _ in 1..rng.gen_range(1..=2) {
            let next = step(&mut rng, g.target());
            g = compose(&g, &next).expect("generators chain by construction");
        }
        let h = compose(&f, &g).expect("composable by construction");
        if tuple_count(&h) <= CORPUS_TUPLE_BOUND {
            out.push((f, g));
        }
    }
    out
}

/// The generator maps on a fixed list of spaces, their identities, and three
/// mixed compositions `f_r ∘ g_q`.
pub fn reference_maps() -> Vec<MonomialMap> {
    let spaces: Vec<WpsOrbifold> = [
        vec![1, 3],
        vec![2, 3],
        vec![1, 2, 3],
        vec![3, 4, 5],
        vec![1, 2],
        vec![1, 1, 2],
        vec![1, 3, 5],
        vec![2, 3, 5],
    ]
    .into_iter()
    .map(|q| WpsOrbifold::new(q).expect("effective weights"))
    .collect();
    let mut maps = Vec::new();
    for q in &spaces {
        maps.push(MonomialMap::f_q(q));
        maps.push(MonomialMap::g_q(q));
        maps.push(MonomialMap::identity(q));
    }
    for (q, r) in [
        (vec![1, 3], vec![1, 2]),
        (vec![2, 3], vec![1, 5]),
        (vec![1, 2, 3], vec![1, 1, 2]),
    ] {
        let q = WpsOrbifold::new(q).expect("effective weights");
        let r = WpsOrbifold::new(r).expect("effective weights");
        maps.push(MonomialMap::h_rq(&r, &q).expect("same dimension"));
    }
    maps
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_deterministic_and_bounded() {
        let a = random_corpus(7, 30);
        let b = random_corpus(7, 30);
        assert_eq!(a, b);
        assert!(a.iter().all(|f| tuple_count(f) <= CORPUS_TUPLE_BOUND));
        assert_ne!(a, random_corpus(8, 30));
    }

    #[test]
    fn pairs_compose() {
        for (f, g) in random_composable_pairs(3, 20) {
            assert_eq!(f.target(), g.source());
        }
    }
}
