//! The frequencies λ_k = ṽ^k of the Dirichlet form and their gaps.

use gammabnd::gap_check;
use std::f64::consts::PI;

fn main() -> gammabnd::Result<()> {
    for v in [1.0, PI / 2.0, 3.0, PI * PI] {
        let q = (PI * PI / v).exp();
        let r = gap_check(q, 40)?;
        println!(
            "v = {v:.4}: ṽ = {q:.4}, gaps increasing: {}, first gap ≥ 1e6 at k = {}, ln gap at k = 40: {:.2}",
            r.gaps_increasing,
            r.first_index_exceeding(1e6),
            r.log_gaps[39]
        );
    }
    Ok(())
}
