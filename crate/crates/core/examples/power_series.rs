//! The one-sided series Σ Γ(u + 2ivn/π) zⁿ on |z| < e^|v| and
//! Σ zⁿ / Γ(u + 2ivn/π) on |z| < e^-|v|.

use gammabnd::{eval_power_series, eval_reciprocal_series, Parameters};
use num_complex::Complex64;

fn main() -> gammabnd::Result<()> {
    let params = Parameters::new(Complex64::new(2.0, 0.0), 1.0)?;
    for r in [0.0, 0.5, 1.5, 2.5] {
        let z = Complex64::from_polar(r, 1.0);
        let g = eval_power_series(&params, z, 1e-13)?;
        println!("|z| = {r:.2}: Σ Γ zⁿ = {:.12} ({} terms)", g.value, g.terms());
    }
    for r in [0.0, 0.1, 0.3, 0.36] {
        let z = Complex64::from_polar(r, 1.0);
        let h = eval_reciprocal_series(&params, z, 1e-13)?;
        println!("|z| = {r:.2}: Σ zⁿ/Γ = {:.12} ({} terms)", h.value, h.terms());
    }
    Ok(())
}
