//! Preimages with isotropy and weight at a smooth and at a singular value.

use orbifold_degree::exact::{preimages, ExactConfig};
use orbifold_degree::maps::MonomialMap;
use orbifold_degree::orbifold::WpsOrbifold;

fn main() -> orbifold_degree::Result<()> {
    let f = MonomialMap::f_q(&WpsOrbifold::new(vec![1, 3])?);
    for y in [f.target().ones(), f.target().vertex(1)?] {
        println!("{f} over {y} (isotropy {}):", y.isotropy().order);
        for p in preimages(&f, &y, &ExactConfig::default())? {
            println!(
                "  {}  isotropy {}  weight {}  sign {:+}",
                p.point, p.isotropy, p.weight, p.sign
            );
        }
    }
    Ok(())
}
