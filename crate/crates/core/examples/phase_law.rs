//! Phase increments of the coefficients against
//! φ(n+1) - φ(n) ≈ (2v/π) ln(2vn/π) mod 2π, with an O(1/n) error.

use gammabnd::{phase_increments, Parameters};
use num_complex::Complex64;

fn main() -> gammabnd::Result<()> {
    let params = Parameters::new(Complex64::new(0.5, 0.3), 3.0)?;
    for (lo, hi) in [(10, 20), (100, 200), (1000, 2000), (10000, 20000)] {
        let r = phase_increments(&params, lo, hi)?;
        let worst = r.records.iter().map(|x| x.residual).fold(0.0, f64::max);
        println!("n ∈ [{lo}, {hi}]: max residual {worst:.3e}, max n·residual {:.4}", r.fitted_constant);
    }
    let r = phase_increments(&params, 1, 1)?;
    println!(
        "phases switch to the Stirling form at n = {}, overlap mismatch {:.1e}",
        r.switch_index, r.overlap_residual
    );
    Ok(())
}
