use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::slice::{correct, LiftCharts, NumericConfig};
use crate::error::{Error, Result};
use crate::maps::MonomialMap;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JacobianReport {
    pub sign: i8,
    pub determinant: f64,
    pub singular_values: Vec<f64>,
    pub smallest_singular_value: f64,
}

/// Central-difference Jacobian of the slice lift at `x`, in the oriented
/// slice frames of `x` and `f̂(x)`.
pub fn lift_jacobian(
    f: &MonomialMap,
    x: &[Complex64],
    config: &NumericConfig,
) -> Result<DMatrix<f64>> {
    let charts = LiftCharts::new(f, x)?;
    let dim = charts.domain.dim();
    if dim != charts.target.dim() {
        return Err(Error::InvalidInput(
            "source and target dimensions differ".into(),
        ));
    }
    let h = config.fd_step;
    let eval = |c: DVector<f64>| -> Result<DVector<f64>> {
        let y = charts.domain.point_at(&c);
        let ev = correct(f, &charts, &y, config)?;
        Ok(DVector::from_vec(ev.output))
    };
    let mut jac = DMatrix::zeros(dim, dim);
    for k in 0..dim {
        let mut plus = DVector::zeros(dim);
        plus[k] = h;
        let minus = -plus.clone();
        let col = (eval(plus)? - eval(minus)?) / (2.0 * h);
        jac.set_column(k, &col);
    }
    Ok(jac)
}

/// Orientation sign and regularity certificate of the chart lift at `x`.
///
/// Fails with [`Error::IrregularPoint`] when the smallest singular value is at
/// or below the configured threshold.
pub fn numeric_jacobian(
    f: &MonomialMap,
    x: &[Complex64],
    config: &NumericConfig,
) -> Result<JacobianReport> {
    let jac = lift_jacobian(f, x, config)?;
    if jac.nrows() == 0 {
        return Ok(JacobianReport {
            sign: 1,
            determinant: 1.0,
            singular_values: vec![],
            smallest_singular_value: f64::INFINITY,
        });
    }
    let determinant = jac.determinant();
    let mut singular_values: Vec<f64> = jac.singular_values().iter().copied().collect();
    singular_values.sort_by(|a, b| a.total_cmp(b));
    let smallest = singular_values[0];
    if smallest <= config.singular_threshold {
        return Err(Error::IrregularPoint(smallest));
    }
    Ok(JacobianReport {
        sign: if determinant > 0.0 { 1 } else { -1 },
        determinant,
        singular_values,
        smallest_singular_value: smallest,
    })
}
