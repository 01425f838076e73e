//! Preimage counts of f_(1,3) along an arc through the singular point [0:1],
//! written as CSV to standard output.

use orbifold_degree::numeric::{singular_arc, write_arc_csv, NumericConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let samples = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(21);
    let arc = singular_arc(samples, &NumericConfig::default())?;
    write_arc_csv(&arc, std::io::stdout().lock())?;
    Ok(())
}
