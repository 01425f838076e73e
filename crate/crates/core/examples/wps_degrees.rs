//! Degrees of the standard maps between weighted projective spaces.

use orbifold_degree::exact::{degree, ExactConfig};
use orbifold_degree::maps::MonomialMap;
use orbifold_degree::orbifold::WpsOrbifold;

fn main() -> orbifold_degree::Result<()> {
    let cfg = ExactConfig::default();
    for q in [vec![1, 3], vec![2, 3], vec![1, 2, 3], vec![3, 4, 5]] {
        let q = WpsOrbifold::new(q)?;
        let f = degree(&MonomialMap::f_q(&q), None, &cfg)?.degree;
        let g = degree(&MonomialMap::g_q(&q), None, &cfg)?.degree;
        println!("{q}: deg f_q = {f}, deg g_q = {g}");
    }
    let q = WpsOrbifold::new(vec![1, 2, 3])?;
    let r = WpsOrbifold::new(vec![1, 1, 2])?;
    let h = MonomialMap::h_rq(&r, &q)?;
    println!("{h}: degree {}", degree(&h, None, &cfg)?.degree);
    Ok(())
}
