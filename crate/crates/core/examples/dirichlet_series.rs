//! The lacunary Dirichlet form: S-, S+, the image point in the right
//! half-plane, the q-difference equations and the pole spiral.

use gammabnd::{functional_residuals, map_to_halfplane, pole_spiral, s_minus, s_plus, AnnulusPoint, DirichletParams, Parameters};
use num_complex::Complex64;

fn main() -> gammabnd::Result<()> {
    let params = Parameters::new(Complex64::new(1.0, 0.5), 2.0)?;
    let z = AnnulusPoint::from_polar(1.5, 0.7)?;
    let img = map_to_halfplane(&params, &z)?;
    println!("t_z = {:.6}, ṽ = {:.6}, prefactor = {:.6}", img.t_z, img.v_tilde, img.prefactor);

    let dp = DirichletParams::new(params.u, img.v_tilde, img.t_z)?;
    let m = s_minus(&dp, 1e-14)?;
    let p = s_plus(&dp, 1e-14)?;
    println!("S-(ζ) = {:.15}  ({} terms)", m.value, m.terms());
    println!("S+(ζ) = {:.15}  ({} terms)", p.value, p.terms());

    let (a, b, c) = functional_residuals(params.u, img.v_tilde, img.t_z, 1e-12)?;
    println!("q-difference residuals: S- {a:.1e}, S+ {b:.1e}, S {c:.1e}");

    println!("poles of the integrand in t:");
    for t in pole_spiral(&params, &z, -2, 2)? {
        println!("  {t:.6e}  |t| = {:.4e}", t.norm());
    }
    Ok(())
}
