//! A map out of the reflection quotient whose mod-2 count depends on the
//! value, and two maps with the same underlying map but different isotropy
//! homomorphisms.

use std::f64::consts::FRAC_PI_2;

use orbifold_degree::maps::CircleMap;
use orbifold_degree::numeric::{circle_degree2, NumericConfig};
use orbifold_degree::verify::underlying_distance;

fn main() -> orbifold_degree::Result<()> {
    let cfg = NumericConfig::default();
    let fold = CircleMap::half_fold();
    for value in [FRAC_PI_2, 3.0 * FRAC_PI_2] {
        let d = circle_degree2(&fold, value, &cfg)?;
        println!(
            "half fold at {value:.4}: {} preimages, mod 2 = {}",
            d.preimages.len(),
            d.mod2
        );
    }
    let f = CircleMap::essential_f();
    let g = CircleMap::essential_g();
    println!(
        "underlying distance of the pair: {:e}",
        underlying_distance(&f, &g, 10_000)
    );
    for (name, m) in [("f", &f), ("g", &g)] {
        let d = circle_degree2(m, 2.0, &cfg)?;
        println!(
            "{name} ({:?} on isotropy) at 2.0: weighted count {}, mod 2 = {}",
            m.theta, d.weighted_count, d.mod2
        );
    }
    Ok(())
}
