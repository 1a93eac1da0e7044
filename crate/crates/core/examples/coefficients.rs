//! The coefficients Γ(u + 2ivn/π) in log form, next to their Stirling
//! approximation, and how fast they decay along the vertical line.

use gammabnd::{asymptotic_log_gamma, gamma_vertical, validate_params, Parameters};
use num_complex::Complex64;

fn main() -> gammabnd::Result<()> {
    let params = Parameters::new(Complex64::new(1.0, 0.0), 1.0)?;
    let report = validate_params(&params);
    println!("valid: {}, distance to the pole lattice: {:.3}", report.valid, report.lattice_distance);

    println!("{:>6} {:>22} {:>22} {:>12}", "n", "ln|Γ|", "arg Γ", "Stirling err");
    for (n, c) in gamma_vertical(&params, -4, 12)? {
        let err = if n >= 1 {
            let a = asymptotic_log_gamma(&params, n)?;
            format!("{:.2e}", (a.log_modulus - c.log_modulus).abs())
        } else {
            String::from("-")
        };
        println!("{n:>6} {:>22.15} {:>22.15} {err:>12}", c.log_modulus, c.argument);
    }

    // ln|Γ(u + iy)| ≈ -π|y|/2 + (Re u - 1/2) ln|y|: the annulus width comes from this decay
    for n in [100i64, 1000, 10000] {
        let c = gamma_vertical(&params, n, n)?[0].1;
        println!("n = {n:>5}: ln|a_n| / n = {:.6} (limit -v = {})", c.log_modulus / n as f64, -params.v);
    }
    Ok(())
}
