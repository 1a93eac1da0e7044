//! The relations Ψ satisfies, checked numerically at a few points:
//! contiguity in u, inversion z ↦ 1/z, and reflection on the coefficients.

use gammabnd::{contiguity_residual, inversion_residual, reflection_transfer, AnnulusPoint, Parameters};
use num_complex::Complex64;

fn main() -> gammabnd::Result<()> {
    let tol = 1e-14;
    let params = Parameters::new(Complex64::new(0.8, -0.4), 1.3)?;
    for (r, theta) in [(0.6, 0.3), (1.0, 2.0), (2.1, -1.2)] {
        let z = AnnulusPoint::from_polar(r, theta)?;
        println!(
            "z = {:.3}: contiguity {:.1e}, inversion {:.1e}",
            z.z(),
            contiguity_residual(&params, &z, tol)?,
            inversion_residual(&params, &z, tol)?
        );
    }
    let worst = [-10000i64, -17, 0, 5, 9999]
        .iter()
        .map(|&n| reflection_transfer(&params, n))
        .collect::<gammabnd::Result<Vec<_>>>()?
        .into_iter()
        .fold(0.0f64, f64::max);
    println!("reflection, worst over sampled n: {worst:.1e}");
    Ok(())
}
