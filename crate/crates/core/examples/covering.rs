//! Degrees of covering projections and power maps between rotation quotients.

use orbifold_degree::numeric::{covering_degree, covering_projection_degree, NumericConfig};
use orbifold_degree::verify::COVERING_GRID;

fn main() -> orbifold_degree::Result<()> {
    let cfg = NumericConfig::default();
    for k in 2..=6 {
        println!(
            "S^1 -> S^1/Z_{k}: degree {}",
            covering_projection_degree(k, &cfg)?
        );
    }
    for (k, m, b) in COVERING_GRID {
        println!(
            "θ ↦ {m}θ, Z_{k} -> Z_{b}: degree {}",
            covering_degree(k, m, b, &cfg)?
        );
    }
    Ok(())
}
