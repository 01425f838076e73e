//! Newton correction of a slice lift and the numeric Jacobian at a preimage.

use nalgebra::DVector;
use num_complex::Complex64;

use orbifold_degree::maps::MonomialMap;
use orbifold_degree::numeric::{numeric_jacobian, slice_lift, NumericConfig, SliceChart};
use orbifold_degree::orbifold::WpsOrbifold;

fn main() -> orbifold_degree::Result<()> {
    let cfg = NumericConfig::default();
    let f = MonomialMap::f_q(&WpsOrbifold::new(vec![1, 3])?);
    let x = [Complex64::new(0.6, 0.3), Complex64::new(-0.2, 0.7)];
    let chart = SliceChart::new(f.source().weights(), &x)?;
    for h in [1e-2, 1e-3, 1e-4] {
        let y = chart.point_at(&DVector::from_vec(vec![0.6 * h, -0.8 * h]));
        let lift = slice_lift(&f, &chart.base, &y, &cfg)?;
        println!(
            "step {h:.0e}: phase {:+.3e}, residual {:.1e}, {} iterations",
            lift.phase, lift.residual, lift.iterations
        );
    }
    let jac = numeric_jacobian(&f, &chart.base, &cfg)?;
    println!(
        "Jacobian sign {:+}, smallest singular value {:.3}",
        jac.sign, jac.smallest_singular_value
    );
    Ok(())
}
