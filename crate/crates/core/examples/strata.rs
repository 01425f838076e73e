//! Singular strata of a few weighted projective spaces and circle quotients.

use orbifold_degree::orbifold::{CircleQuotient, Stratified, WpsOrbifold};

fn main() -> orbifold_degree::Result<()> {
    for q in [vec![1, 1], vec![1, 3], vec![1, 2, 3], vec![2, 2, 1]] {
        let space = WpsOrbifold::new(q)?;
        let report = space.strata()?;
        println!("{space}: codim1_empty = {}", report.codim1_empty);
        for c in report.singular_components() {
            println!("  isotropy {:>2}  {}", c.isotropy, c.description);
        }
    }
    for q in [CircleQuotient::reflection(), CircleQuotient::rotation(3)?] {
        let report = q.strata()?;
        println!(
            "{q}: codim1_empty = {}, orientable = {}",
            report.codim1_empty, report.orientable
        );
    }
    Ok(())
}
