mod common;

use common::{c, oracle, rel};
use gammabnd::{
    admissible_epsilon, eval_dirichlet, eval_integral, eval_integral_on, eval_laurent, AnnulusPoint, Error, Parameters,
    RayContour,
};
use std::f64::consts::PI;

fn params(ur: f64, ui: f64, v: f64) -> Parameters {
    Parameters::new(c(ur, ui), v).unwrap()
}

#[test]
fn matches_laurent_at_one() {
    let p = params(1.0, 0.0, 2.0);
    let z = AnnulusPoint::new(c(1.0, 0.0)).unwrap();
    let i = eval_integral(&p, &z, 1e-8).unwrap();
    let l = eval_laurent(&p, &z, 1e-12).unwrap();
    assert!(rel(i.value, l.value) < 1e-7);
    assert!(i.tail_bound <= 1e-8);
}

#[test]
fn matches_oracle_table() {
    for &(ur, ui, v, zr, zi, re, im) in oracle::LAURENT {
        let p = params(ur, ui, v);
        let z = AnnulusPoint::new(c(zr, zi)).unwrap();
        if ur <= 0.0 {
            continue;
        }
        let i = eval_integral(&p, &z, 1e-11).unwrap();
        let err = rel(i.value, c(re, im));
        assert!(err < 1e-8, "u={ur}+{ui}i v={v} z={zr}+{zi}i err={err:e}");
    }
}

#[test]
fn outside_domain() {
    let z = AnnulusPoint::new(c(1f64.exp(), 0.0)).unwrap();
    assert!(matches!(eval_integral(&params(1.0, 0.0, 1.0), &z, 1e-8), Err(Error::OutsideDomain(_))));
    let z = AnnulusPoint::new(c(1.0, 0.0)).unwrap();
    assert!(matches!(eval_integral(&params(-0.5, 0.0, 1.0), &z, 1e-8), Err(Error::InvalidParameters { .. })));
}

#[test]
fn epsilon_independence() {
    let p = params(0.5, 0.3, PI / 2.0);
    let z = AnnulusPoint::from_polar(0.3f64.exp(), 1.2).unwrap();
    let (lo, hi) = admissible_epsilon(&p, &z).unwrap();
    let tol = 1e-10;
    let e1 = lo + 0.1 * (hi - lo);
    let e2 = lo + 0.9 * (hi - lo);
    assert!(e2 - e1 >= 0.1);
    let a = eval_integral_on(&p, &z, tol, &RayContour::new(&p, &z, e1, tol).unwrap()).unwrap();
    let b = eval_integral_on(&p, &z, tol, &RayContour::new(&p, &z, e2, tol).unwrap()).unwrap();
    assert!((a.value - b.value).norm() <= 2.0 * tol, "{:e}", (a.value - b.value).norm());
}

#[test]
fn real_on_the_unit_circle() {
    // u real: conj Ψ(u, v, z) = Ψ(u, v, 1/z̄), so Ψ is real where |z| = 1
    let p = params(1.5, 0.0, 1.0);
    for &theta in &[0.0, 0.7, 2.2, PI] {
        let z = AnnulusPoint::from_polar(1.0, theta).unwrap();
        let i = eval_integral(&p, &z, 1e-10).unwrap();
        assert!(i.value.im.abs() <= 1e-10, "θ={theta}: {}", i.value);
    }
    // and not real off it
    let z = AnnulusPoint::new(c(1.4, 0.0)).unwrap();
    let i = eval_integral(&p, &z, 1e-10).unwrap();
    assert!(i.value.im.abs() > 1e-3);
}

#[test]
fn small_re_u_endpoint() {
    let p = params(0.2, 0.0, 1.0);
    let z = AnnulusPoint::new(c(0.9, 0.3)).unwrap();
    let i = eval_integral(&p, &z, 1e-10).unwrap();
    let l = eval_laurent(&p, &z, 1e-14).unwrap();
    assert!(rel(i.value, l.value) < 1e-8);
}

#[test]
fn denominator_stays_away_from_zero() {
    let p = params(1.0, 0.0, 2.0);
    let z = AnnulusPoint::from_polar(1.5, 2.0).unwrap();
    let (lo, hi) = admissible_epsilon(&p, &z).unwrap();
    let eps = 0.5 * (lo + hi);
    let w = c(0.0, 2.0 * p.v / PI);
    let mut worst = f64::INFINITY;
    for j in 0..4000 {
        let x = -20.0 + j as f64 * 0.01;
        for sign in [1.0, -1.0] {
            let d = (1.0 - z.z() * (w * c(x, sign * eps)).exp()).norm();
            worst = worst.min(d);
        }
    }
    assert!(worst > 0.05, "{worst}");
}

#[test]
fn three_way_grid() {
    for &(ur, ui) in &[(1.0, 0.0), (0.5, 0.3), (2.0, 0.0)] {
        for &v in &[1.0f64, PI / 2.0, 3.0] {
            let p = params(ur, ui, v);
            for &lr in &[-v / 2.0, 0.0, v / 2.0] {
                for j in 0..8 {
                    let theta = -PI + (j + 1) as f64 * PI / 4.0;
                    let z = AnnulusPoint::from_polar(lr.exp(), theta).unwrap();
                    let i = eval_integral(&p, &z, 1e-12).unwrap();
                    let l = eval_laurent(&p, &z, 1e-14).unwrap();
                    let d = eval_dirichlet(&p, &z, 1e-14).unwrap();
                    let (a, b) = (rel(i.value, l.value), rel(i.value, d.value));
                    assert!(a < 1e-6 && b < 1e-6, "u={ur}+{ui}i v={v} ln r={lr} θ={theta}: {a:e} {b:e}");
                }
            }
        }
    }
}
