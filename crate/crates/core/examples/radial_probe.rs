//! Ψ along rays toward the outer circle |z| = e^v. Near the boundary the
//! Dirichlet form needs only a handful of terms while the Laurent series
//! would need millions.

use gammabnd::{boundary_distance_map, radial_probe, AnnulusPoint, Parameters};
use num_complex::Complex64;

fn main() -> gammabnd::Result<()> {
    let params = Parameters::new(Complex64::new(1.0, 0.0), 1.0)?;
    for theta in [0.0, 1.0, 3.0] {
        let report = radial_probe(&params, theta, 30, 1e-9)?;
        println!("θ = {theta}");
        for j in (0..report.radii.len()).step_by(4) {
            let z = AnnulusPoint::from_polar(report.radii[j], theta)?;
            let (d, cos_t) = boundary_distance_map(&params, &z)?;
            let value = match &report.errors[j] {
                None => format!("{:.6e}", report.values[j].norm()),
                Some(code) => code.clone(),
            };
            println!(
                "  v - ln r = {d:.2e}  Re t/|t| = {cos_t:.2e}  |Ψ| = {value}  S+ terms = {}",
                report.term_counts[j]
            );
        }
    }
    Ok(())
}
