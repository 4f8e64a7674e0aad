//! Reference values computed independently at 30 digits.
//!
//! | quantity | reference |
//! |----------|-----------|
//! | `E_{1/2}(x)` | `e^(x^2) erfc(-x)` |
//! | `Gamma(0.5 + 2i)` | direct evaluation |
//! | `2F1(0.5, 1.2; 2.3; z)` | inside and outside the unit disc |
//! | `E^1.5_{0.7,1.2}(+-2.5)` | series summed in high precision |
//!
//! Alternating sums are judged against their condition number.

use ml_fraccalc::contour::{hankel_reciprocal_gamma, ml2_hankel, HankelContour};
use ml_fraccalc::gamma::{gamma, reciprocal_gamma};
use ml_fraccalc::hyper::gauss_2f1;
use ml_fraccalc::mlfamily::{ml_eval, MLParams};
use ml_fraccalc::sum::SumControl;
use ml_fraccalc::Complex64;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn ctl() -> SumControl {
    SumControl::new(1e-16, 100_000)
}

fn rel(got: Complex64, want: Complex64) -> f64 {
    (got - want).norm() / want.norm()
}

/// Rounding allowance for an alternating sum: `E(|x|) / |E(x)|` units of 1e-14.
fn allowance(p: &MLParams, x: f64, want: f64) -> f64 {
    let mass = ml_eval(p, c(x.abs()), &ctl()).unwrap().value.norm();
    1e-14 * (mass / want.abs()).max(1.0)
}

#[test]
fn half_order_mittag_leffler() {
    let p = MLParams::One { alpha: c(0.5) };
    for (x, want) in [(1.3, 10.481_318_741_176_322), (-2.0, 0.255_395_676_310_505_74)] {
        let got = ml_eval(&p, c(x), &ctl()).unwrap().value;
        assert!(rel(got, c(want)) < allowance(&p, x, want), "x = {x}: {got}");
        assert_eq!(got.im, 0.0);
        let h = ml2_hankel(0.5, c(1.0), c(x), &HankelContour::for_ml2(0.5, c(x))).unwrap().value;
        assert!(rel(h, c(want)) < 1e-9, "hankel x = {x}: {h}");
    }
}

#[test]
fn complex_gamma() {
    let want = Complex64::new(0.089_855_176_706_431_64, -0.060_493_760_292_887_57);
    let z = Complex64::new(0.5, 2.0);
    assert!(rel(gamma(z).unwrap(), want) < 1e-13);
    assert!(rel(reciprocal_gamma(z), 1.0 / want) < 1e-13);
    let h = hankel_reciprocal_gamma(z, &HankelContour::default()).unwrap().value;
    assert!(rel(h, 1.0 / want) < 1e-10);
}

#[test]
fn gauss_hypergeometric() {
    let (a, b, cc) = (c(0.5), c(1.2), c(2.3));
    for (z, want) in [(0.7, 1.303_840_229_404_136_8), (-3.0, 0.653_617_695_787_195_8)] {
        let got = gauss_2f1(a, b, cc, c(z)).unwrap().value;
        assert!(rel(got, c(want)) < 1e-13, "z = {z}: {got}");
    }
}

#[test]
fn prabhakar_values() {
    let p = MLParams::Three { alpha: c(0.7), beta: c(1.2), gamma: c(1.5) };
    for (x, want) in [(2.5, 116.856_053_681_763_03), (-2.5, 0.082_423_791_433_971_27)] {
        let got = ml_eval(&p, c(x), &ctl()).unwrap().value;
        assert!(rel(got, c(want)) < allowance(&p, x, want), "x = {x}: {got}");
        assert_eq!(got.im, 0.0);
    }
}

#[test]
fn elementary_closed_forms() {
    for x in [-6.0, -0.5, 0.25, 3.0] {
        let z = c(x);
        let e = |a: f64, b: f64| ml_eval(&MLParams::Two { alpha: c(a), beta: c(b) }, z, &ctl()).unwrap().value;
        assert!(rel(e(1.0, 1.0), z.exp()) < 1e-14);
        assert!(rel(e(2.0, 1.0), z.sqrt().cosh()) < 1e-13);
        assert!(rel(e(1.0, 2.0), (z.exp() - 1.0) / z) < 1e-13);
        assert!(rel(e(2.0, 2.0), z.sqrt().sinh() / z.sqrt()) < 1e-13);
    }
}
