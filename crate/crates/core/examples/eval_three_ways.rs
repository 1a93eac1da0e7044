//! Ψ(u, v, z) at one point by the Laurent series, the Dirichlet form and the
//! contour integral.

use gammabnd::{eval_dirichlet, eval_integral, eval_laurent, AnnulusPoint, Parameters};
use num_complex::Complex64;

fn main() -> gammabnd::Result<()> {
    let params = Parameters::new(Complex64::new(0.5, 0.3), std::f64::consts::FRAC_PI_2)?;
    let z = AnnulusPoint::new(Complex64::new(-0.4, 0.9))?;
    let tol = 1e-12;

    let l = eval_laurent(&params, &z, tol)?;
    let d = eval_dirichlet(&params, &z, tol)?;
    let i = eval_integral(&params, &z, tol)?;

    println!("u = {}, v = {}, z = {}", params.u, params.v, z.z());
    println!("{:<10} {:>44} {:>10} {:>8}", "method", "value", "tail", "work");
    for (name, s, work) in [("laurent", &l, l.terms()), ("dirichlet", &d, d.terms()), ("integral", &i, i.n_pos)] {
        println!("{name:<10} {:>44} {:>10.1e} {work:>8}", format!("{:.15}", s.value), s.tail_bound);
    }
    println!("|L - D| / |L| = {:.2e}", (l.value - d.value).norm() / l.value.norm());
    println!("|L - I| / |L| = {:.2e}", (l.value - i.value).norm() / l.value.norm());
    Ok(())
}
