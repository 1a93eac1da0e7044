mod common;

use common::{c, oracle, rel};
use gammabnd::{
    eval_dirichlet, eval_laurent, functional_residuals, map_to_halfplane, pole_spiral, s_minus, s_plus,
    AnnulusPoint, DirichletParams, Error, Parameters,
};
use proptest::prelude::*;
use std::f64::consts::{E, PI};

fn params(ur: f64, ui: f64, v: f64) -> Parameters {
    Parameters::new(c(ur, ui), v).unwrap()
}

fn dp(ur: f64, ui: f64, q: f64, zr: f64, zi: f64) -> DirichletParams {
    DirichletParams::new(c(ur, ui), q, c(zr, zi)).unwrap()
}

#[test]
fn halfplane_examples() {
    let img = map_to_halfplane(&params(1.0, 0.0, 2.0), &AnnulusPoint::new(c(1.0, 0.0)).unwrap()).unwrap();
    assert_eq!(img.t_z, c(1.0, 0.0));
    assert!((img.prefactor - PI * PI / 2.0).norm() < 1e-15);

    let img = map_to_halfplane(&params(1.0, 0.0, PI * PI), &AnnulusPoint::new(c(1.0, 0.0)).unwrap()).unwrap();
    assert!((img.v_tilde - E).abs() < 1e-15);

    // |t_z| = e^{-π arg z / 2v}
    let img = map_to_halfplane(&params(1.0, 0.0, PI / 2.0), &AnnulusPoint::new(c(0.0, 1.0)).unwrap()).unwrap();
    assert!((img.t_z - (-PI / 2.0).exp()).norm() < 1e-15, "{}", img.t_z);
}

#[test]
fn s_minus_values() {
    let s = s_minus(&dp(1.0, 0.0, 2.0, 0.0, 0.0), 1e-15).unwrap();
    assert!((s.value - 1.0).norm() <= 1e-14);

    let s = s_minus(&dp(1.0, 0.0, E, 1.0, 0.0), 1e-14).unwrap();
    assert!(rel(s.value, c(oracle::S_MINUS_U1_QE_Z1.0, 0.0)) < 1e-13);
    assert!(s.tail_bound <= 1e-14);

    let (re, im) = oracle::S_MINUS_COMPLEX;
    let s = s_minus(&dp(0.5, 0.5, E, 2.0, 1.0), 1e-14).unwrap();
    assert!(rel(s.value, c(re, im)) < 1e-13);
}

#[test]
fn s_minus_is_entire() {
    let s = s_minus(&dp(1.0, 0.0, E, -50.0, 0.0), 1e-6).unwrap();
    assert!(s.value.re.is_finite());
    assert!(rel(s.value, c(oracle::S_MINUS_U1_QE_ZM50.0, 0.0)) < 1e-12);
}

#[test]
fn s_plus_values() {
    let s = s_plus(&dp(1.0, 0.0, 2.0, 1.0, 0.0), 1e-14).unwrap();
    assert!(rel(s.value, c(oracle::S_PLUS_U1_Q2_Z1.0, 0.0)) < 1e-13);
    assert!(s.tail_bound <= 1e-14);

    let (re, im) = oracle::S_PLUS_COMPLEX;
    let s = s_plus(&dp(0.5, 0.5, E, 2.0, 1.0), 1e-14).unwrap();
    assert!(rel(s.value, c(re, im)) < 1e-13);
}

#[test]
fn s_plus_domain() {
    assert!(matches!(s_plus(&dp(1.0, 0.0, 2.0, 0.0, 1.0), 1e-10), Err(Error::OutsideDomain(_))));
    assert!(matches!(s_plus(&dp(1.0, 0.0, 2.0, -1.0, 0.0), 1e-10), Err(Error::OutsideDomain(_))));
}

#[test]
fn s_plus_late_decay_onset() {
    let s = s_plus(&dp(1.0, 0.0, 2.0, 1e-6, 0.0), 1e-10).unwrap();
    assert!(s.tail_bound <= 1e-10);
    // 2^k · 1e-6 must pass k ln 2 before terms shrink
    assert!(s.n_pos >= 20, "{}", s.n_pos);
}

#[test]
fn dirichlet_matches_laurent_at_one() {
    let p = params(1.0, 0.0, 2.0);
    let z = AnnulusPoint::new(c(1.0, 0.0)).unwrap();
    let d = eval_dirichlet(&p, &z, 1e-10).unwrap();
    let l = eval_laurent(&p, &z, 1e-10).unwrap();
    assert!((d.value - l.value).norm() <= d.tail_bound + l.tail_bound + 1e-10 * l.value.norm());
}

#[test]
fn cross_representation_grid() {
    for &(ur, ui) in &[(1.0, 0.0), (0.5, 0.3), (2.0, 0.0)] {
        for &v in &[1.0f64, PI / 2.0, 3.0] {
            let p = params(ur, ui, v);
            for &lr in &[-v / 2.0, 0.0, v / 2.0] {
                for j in 0..8 {
                    let theta = -PI + (j + 1) as f64 * PI / 4.0;
                    let z = AnnulusPoint::from_polar(lr.exp(), theta).unwrap();
                    let d = eval_dirichlet(&p, &z, 1e-12).unwrap();
                    let l = eval_laurent(&p, &z, 1e-12).unwrap();
                    let gap = (d.value - l.value).norm();
                    assert!(gap <= d.tail_bound + l.tail_bound + 1e-10 * l.value.norm());
                    // tol is absolute below |Ψ| = 1, so relative agreement needs the tight end
                    let d = eval_dirichlet(&p, &z, 1e-14).unwrap();
                    let l = eval_laurent(&p, &z, 1e-14).unwrap();
                    let err = rel(d.value, l.value);
                    assert!(err < 1e-9, "u={ur}+{ui}i v={v} ln r={lr} θ={theta}: {err:e}");
                }
            }
        }
    }
}

#[test]
fn negative_v_goes_through_inversion() {
    let p = params(1.0, 0.2, -1.5);
    let z = AnnulusPoint::new(c(0.7, 0.4)).unwrap();
    let d = eval_dirichlet(&p, &z, 1e-12).unwrap();
    let l = eval_laurent(&p, &z, 1e-12).unwrap();
    assert!(rel(d.value, l.value) < 1e-10);
}

#[test]
fn domain_errors() {
    let z = AnnulusPoint::new(c(3.0, 0.0)).unwrap();
    assert!(matches!(eval_dirichlet(&params(1.0, 0.0, 1.0), &z, 1e-10), Err(Error::OutsideDomain(_))));
    let z = AnnulusPoint::new(c(1.0, 0.0)).unwrap();
    assert!(matches!(
        eval_dirichlet(&params(-0.5, 0.0, 1.0), &z, 1e-10),
        Err(Error::InvalidParameters { .. })
    ));
}

#[test]
fn near_boundary_point() {
    let v = 1.0f64;
    let z = AnnulusPoint::from_polar((v * (1.0 - 1e-3)).exp(), 0.0).unwrap();
    let p = params(1.0, 0.0, v);
    let img = map_to_halfplane(&p, &z).unwrap();
    let ratio = img.t_z.re / img.t_z.norm();
    assert!((ratio - (PI * 1e-3 / 2.0).sin()).abs() < 1e-14);
    let d = eval_dirichlet(&p, &z, 1e-10).unwrap();
    assert!(d.value.re.is_finite() && d.tail_bound <= 1e-10);
}

#[test]
fn branch_cut_seam() {
    let delta = 1e-6;
    for &(ur, ui) in &[(1.0, 0.0), (0.5, 0.3), (2.0, 0.0)] {
        for &v in &[1.0f64, PI / 2.0, 3.0] {
            let p = params(ur, ui, v);
            let r = (v / 4.0f64).exp();
            let up = AnnulusPoint::from_polar(r, PI - delta).unwrap();
            let dn = AnnulusPoint::from_polar(r, -(PI - delta)).unwrap();
            let on = AnnulusPoint::from_polar(r, PI).unwrap();
            let du = eval_dirichlet(&p, &up, 1e-12).unwrap().value;
            let dd = eval_dirichlet(&p, &dn, 1e-12).unwrap().value;
            let l = eval_laurent(&p, &on, 1e-12).unwrap().value;
            let lu = eval_laurent(&p, &up, 1e-12).unwrap().value;
            let ld = eval_laurent(&p, &dn, 1e-12).unwrap().value;
            let res = ((du - lu).norm().max((dd - ld).norm()).max(((du + dd) / 2.0 - l).norm())) / l.norm();
            assert!(res < 1e-7, "u={ur}+{ui}i v={v}: {res:e}");
        }
    }
}

#[test]
fn pole_spiral_properties() {
    let p = params(1.0, 0.0, 2.0);
    let one = AnnulusPoint::new(c(1.0, 0.0)).unwrap();
    for pt in pole_spiral(&p, &one, -3, 3).unwrap() {
        assert!(pt.im.abs() < 1e-12 * pt.norm() && pt.re > 0.0);
    }
    let z = AnnulusPoint::new(c(0.8, 1.1)).unwrap();
    let pts = pole_spiral(&p, &z, -4, 4).unwrap();
    let a0 = pts[0].arg();
    for pt in &pts {
        assert!((pt.arg() - a0).abs() < 1e-14);
        let res = (1.0 - z.z() * (c(0.0, 4.0 / PI) * pt.ln()).exp()).norm();
        assert!(res < 1e-10);
    }
}

#[test]
fn q_difference_examples() {
    let (a, b, t) = functional_residuals(c(1.0, 0.0), 2.0, c(1.0, 0.0), 1e-11).unwrap();
    assert!(a < 1e-10 && b < 1e-10 && t < 1e-10, "{a:e} {b:e} {t:e}");
    let (a, b, t) = functional_residuals(c(0.5, 0.5), E, c(2.0, 1.0), 1e-11).unwrap();
    assert!(a < 1e-10 && b < 1e-10 && t < 1e-10, "{a:e} {b:e} {t:e}");
}

#[test]
fn lacunary_frequencies() {
    for &v in &[1.0, PI / 2.0, 3.0, PI * PI] {
        let q: f64 = (PI * PI / v).exp();
        let mut last = 0.0;
        for k in 0..20 {
            let gap = q.powi(k + 1) - q.powi(k);
            assert!((gap - q.powi(k) * (q - 1.0)).abs() <= 1e-12 * gap);
            assert!(gap > last);
            last = gap;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn annulus_is_the_right_half_plane(x in -2.9f64..2.9, theta in -3.14159f64..3.14159, v in 0.2f64..3.0) {
        // arg t_z = π ln|z| / 2v is not reduced, so Re t_z turns positive again past |ln|z|| = 3v
        let lr = x * v;
        let z = AnnulusPoint::from_polar(lr.exp(), theta).unwrap();
        let img = map_to_halfplane(&params(1.0, 0.0, v), &z).unwrap();
        let band = (lr.abs() - v).abs() < 1e-14;
        if !band {
            prop_assert_eq!(z.in_annulus(v), img.t_z.re > 0.0);
        }
    }

    #[test]
    fn q_difference_random(ur in 0.2f64..2.0, ui in -1.0f64..1.0, q in 1.5f64..8.0, zr in 0.05f64..3.0, zi in -3.0f64..3.0) {
        let (a, b, t) = functional_residuals(c(ur, ui), q, c(zr, zi), 1e-11).unwrap();
        prop_assert!(a < 1e-10 && b < 1e-10 && t < 1e-10, "{a:e} {b:e} {t:e}");
    }
}
