//! The two-ray contour integral: the admissible ray angles, the integration
//! window, and independence of the result from the angle chosen.

use gammabnd::{admissible_epsilon, eval_integral_on, eval_laurent, AnnulusPoint, Parameters, RayContour};
use num_complex::Complex64;

fn main() -> gammabnd::Result<()> {
    let params = Parameters::new(Complex64::new(1.5, 0.0), 1.0)?;
    let z = AnnulusPoint::from_polar(0.7, 2.5)?;
    let tol = 1e-12;
    let reference = eval_laurent(&params, &z, 1e-14)?.value;
    let (lo, hi) = admissible_epsilon(&params, &z)?;
    println!("admissible ε ∈ ({lo:.4}, {hi:.4}), series value {reference:.15}");
    for f in [0.1, 0.3, 0.5, 0.7, 0.9] {
        let eps = lo + f * (hi - lo);
        let contour = RayContour::new(&params, &z, eps, tol)?;
        let s = eval_integral_on(&params, &z, tol, &contour)?;
        println!(
            "ε = {eps:.4}: window [{:.1e}, {:.1}], {:>6} nodes, rel. diff {:.1e}",
            contour.s_min,
            contour.s_max,
            s.n_pos,
            (s.value - reference).norm() / reference.norm()
        );
    }
    Ok(())
}
