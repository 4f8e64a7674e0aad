//! Complex gamma function, its logarithm and reciprocal, and Pochhammer symbols.
//!
//! | function | region | method |
//! |----------|--------|--------|
//! | [`log_gamma`] | `Re z >= 1/2` | upward recurrence to `|z| >= 15`, then Stirling |
//! | [`log_gamma`] | `Re z < 1/2` | reflection with a branch-continuous `log sin(pi z)` |
//! | [`reciprocal_gamma`] | everywhere | exact zero at the poles, reflection on the left |
//!
//! [`log_gamma`] returns the principal branch: it is analytic off the negative
//! real axis and real on the positive real axis. On the negative real axis the
//! value is the limit taken from the upper half-plane.

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Distance below which an argument is treated as a non-positive integer.
pub const POLE_THRESHOLD: f64 = 1e-12;

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;
const STIRLING_MIN_ABS: f64 = 15.0;

// B_{2k} / (2k (2k - 1)) for k = 1..10.
const STIRLING: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
    43867.0 / 244_188.0,
    -174_611.0 / 125_400.0,
];

/// Returns the integer `k <= 0` when `z` lies within [`POLE_THRESHOLD`] of it.
pub fn nonpositive_integer(z: Complex64) -> Option<i64> {
    let r = z.re.round();
    if r <= 0.0 && (z.re - r).abs() < POLE_THRESHOLD && z.im.abs() < POLE_THRESHOLD {
        Some(r as i64)
    } else {
        None
    }
}

/// True when `z` is within [`POLE_THRESHOLD`] of a non-negative integer.
pub fn nonnegative_integer(z: Complex64) -> Option<u64> {
    let r = z.re.round();
    if r >= 0.0 && (z.re - r).abs() < POLE_THRESHOLD && z.im.abs() < POLE_THRESHOLD {
        Some(r as u64)
    } else {
        None
    }
}

/// Real `sin(pi x)` and `cos(pi x)` with exact zeros at the integers and half integers.
fn sincos_pi(x: f64) -> (f64, f64) {
    let r = x - 2.0 * (x / 2.0).round();
    if r == r.round() {
        let c = if r == 0.0 { 1.0 } else { -1.0 };
        return (0.0, c);
    }
    if (2.0 * r).fract() == 0.0 {
        let s = if r > 0.0 { 1.0 } else { -1.0 };
        return (s, 0.0);
    }
    ((PI * r).sin(), (PI * r).cos())
}

/// `sin(pi z)` with the real part reduced before multiplication by `pi`.
pub fn sin_pi(z: Complex64) -> Complex64 {
    let (s, c) = sincos_pi(z.re);
    let y = PI * z.im;
    Complex64::new(s * y.cosh(), c * y.sinh())
}

/// `exp(z) - 1` without cancellation for small `z`.
fn expm1(z: Complex64) -> Complex64 {
    let e = z.re.exp_m1();
    let half = (0.5 * z.im).sin();
    let cos_m1 = -2.0 * half * half;
    Complex64::new(e * z.im.cos() + cos_m1, (e + 1.0) * z.im.sin())
}

/// Branch of `log sin(pi z)` continuous on the closed upper half-plane.
fn log_sin_pi_upper(z: Complex64) -> Complex64 {
    let frac = Complex64::new(z.re - z.re.round(), z.im);
    let one_minus = -expm1(Complex64::new(0.0, 2.0 * PI) * frac);
    Complex64::new(-std::f64::consts::LN_2, 0.5 * PI) - Complex64::new(0.0, PI) * z + one_minus.ln()
}

fn log_gamma_right(z: Complex64) -> Complex64 {
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.norm() < STIRLING_MIN_ABS {
        shift += w.ln();
        w += 1.0;
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut p = inv;
    for c in STIRLING {
        series += p * c;
        p *= inv2;
    }
    (w - 0.5) * w.ln() - w + HALF_LN_2PI + series - shift
}

/// Principal branch of `ln Gamma(z)`.
///
/// Fails with [`Error::Pole`] at the non-positive integers.
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if let Some(k) = nonpositive_integer(z) {
        return Err(Error::Pole(format!("log_gamma at {k}")));
    }
    Ok(log_gamma_unchecked(z))
}

pub(crate) fn log_gamma_unchecked(z: Complex64) -> Complex64 {
    if z.re >= 0.5 {
        return log_gamma_right(z);
    }
    if z.im < 0.0 {
        return log_gamma_unchecked(z.conj()).conj();
    }
    Complex64::new(PI.ln(), 0.0) - log_sin_pi_upper(z) - log_gamma_right(1.0 - z)
}

/// `Gamma(x)` for real `0 < x <= 171` to a few ulps, via `powf` rather than
/// the exponential of a log-gamma value.
fn gamma_real_positive(x: f64) -> f64 {
    if x == x.round() && x <= 23.0 {
        return (1..x as u64).map(|k| k as f64).product();
    }
    let mut w = x;
    let mut p = 1.0;
    while w < STIRLING_MIN_ABS {
        p *= w;
        w += 1.0;
    }
    let inv = 1.0 / w;
    let inv2 = inv * inv;
    let mut series = 0.0;
    let mut q = inv;
    for c in STIRLING {
        series += q * c;
        q *= inv2;
    }
    let h = w.powf(0.5 * (w - 0.5));
    (2.0 * PI).sqrt() * (h * (-w + series).exp()) * h / p
}

const REAL_FAST_MAX: f64 = 171.0;

/// `Gamma(z)`, failing with [`Error::Pole`] at the non-positive integers.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    if let Some(k) = nonpositive_integer(z) {
        return Err(Error::Pole(format!("gamma at {k}")));
    }
    if z.im == 0.0 && z.re > 0.0 && z.re <= REAL_FAST_MAX {
        return Ok(Complex64::new(gamma_real_positive(z.re), 0.0));
    }
    if z.im == 0.0 && z.re < 0.5 && 1.0 - z.re <= REAL_FAST_MAX {
        let s = sin_pi(z).re;
        return Ok(Complex64::new(PI / (s * gamma_real_positive(1.0 - z.re)), 0.0));
    }
    if z.re >= 0.5 {
        Ok(log_gamma_right(z).exp())
    } else {
        Ok(PI / (sin_pi(z) * log_gamma_right(1.0 - z).exp()))
    }
}

/// `1 / Gamma(z)`, entire, exactly zero at the non-positive integers.
pub fn reciprocal_gamma(z: Complex64) -> Complex64 {
    if nonpositive_integer(z).is_some() {
        return Complex64::new(0.0, 0.0);
    }
    if z.im == 0.0 && z.re > 0.0 && z.re <= REAL_FAST_MAX {
        return Complex64::new(1.0 / gamma_real_positive(z.re), 0.0);
    }
    if z.im == 0.0 && z.re < 0.5 && 1.0 - z.re <= REAL_FAST_MAX {
        return Complex64::new(sin_pi(z).re * gamma_real_positive(1.0 - z.re) / PI, 0.0);
    }
    if z.re >= 0.5 {
        (-log_gamma_right(z)).exp()
    } else {
        sin_pi(z) * log_gamma_right(1.0 - z).exp() / PI
    }
}

/// Real-argument convenience wrapper around [`gamma`].
pub fn gamma_re(x: f64) -> Result<f64> {
    gamma(Complex64::new(x, 0.0)).map(|g| g.re)
}

/// Which Pochhammer symbol [`pochhammer`] computes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PochhammerForm {
    /// `(x)_n = x (x+1) ... (x+n-1)` for integer `n >= 0`.
    Standard,
    /// `Gamma(x + n) / Gamma(x)` for real `n`.
    Extended,
    /// `(x)_{n,k} = x (x+k) ... (x+(n-1)k)` for integer `n >= 0`.
    KSymbol(f64),
}

fn integer_count(n: f64) -> Result<u64> {
    let r = n.round();
    if r < 0.0 || (n - r).abs() > POLE_THRESHOLD {
        return Err(Error::Parameter(format!(
            "Pochhammer length must be a non-negative integer, got {n}"
        )));
    }
    Ok(r as u64)
}

/// Pochhammer symbol of the requested form.
///
/// The standard and k-symbol forms are finite products and vanish exactly when
/// a factor is zero. The extended form is a gamma ratio; it is zero when
/// `Gamma(x)` has a pole and fails with [`Error::Pole`] when only `x + n` does.
pub fn pochhammer(x: Complex64, n: f64, form: PochhammerForm) -> Result<Complex64> {
    match form {
        PochhammerForm::Standard => Ok(rising_product(x, integer_count(n)?, 1.0)),
        PochhammerForm::KSymbol(k) => Ok(rising_product(x, integer_count(n)?, k)),
        PochhammerForm::Extended => {
            let r = n.round();
            if r >= 0.0 && (n - r).abs() < POLE_THRESHOLD && r <= 4096.0 {
                return Ok(rising_product(x, r as u64, 1.0));
            }
            let top = x + n;
            match (nonpositive_integer(x), nonpositive_integer(top)) {
                (Some(_), Some(_)) => {
                    // Both poles: the ratio is the limit (x)_n, an integer-length product
                    // in the downward direction.
                    let m = (-n).round() as u64;
                    let down = rising_product(top, m, 1.0);
                    Ok(down.inv())
                }
                (Some(_), None) => Ok(Complex64::new(0.0, 0.0)),
                (None, Some(k)) => Err(Error::Pole(format!("Gamma(x + n) at {k}"))),
                (None, None) => Ok((log_gamma_unchecked(top) - log_gamma_unchecked(x)).exp()),
            }
        }
    }
}

fn rising_product(x: Complex64, n: u64, step: f64) -> Complex64 {
    let mut p = Complex64::new(1.0, 0.0);
    for j in 0..n {
        let f = x + step * j as f64;
        if f.re == 0.0 && f.im == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        p *= f;
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn factorials() {
        let mut f = 1.0f64;
        for n in 1..30 {
            let g = gamma(c(n as f64, 0.0)).unwrap();
            assert!((g.re / f - 1.0).abs() < 1e-14, "n={n}");
            f *= n as f64;
        }
    }

    #[test]
    fn half_integer_and_log() {
        let g = gamma(c(0.5, 0.0)).unwrap();
        assert!((g.re - PI.sqrt()).abs() < 1e-15);
        let l = log_gamma(c(1.0, 0.0)).unwrap();
        assert!(l.norm() < 1e-14);
        let l = log_gamma(c(-0.5, 0.0)).unwrap();
        assert!((l.re - (2.0 * PI.sqrt()).ln()).abs() < 1e-14);
        assert!((l.im + PI).abs() < 1e-14);
    }

    #[test]
    fn poles_and_reciprocal() {
        assert!(matches!(gamma(c(-3.0, 0.0)), Err(Error::Pole(_))));
        assert_eq!(reciprocal_gamma(c(-3.0, 0.0)), c(0.0, 0.0));
        assert_eq!(reciprocal_gamma(c(0.0, 0.0)), c(0.0, 0.0));
        // Near a pole the reciprocal is small but accurate: 1/Gamma(-3 + e) ~ -6 e.
        let e = 1e-9;
        let r = reciprocal_gamma(c(-3.0 + e, 0.0));
        assert!((r.re / (-6.0 * e) - 1.0).abs() < 1e-7);
    }

    #[test]
    fn branch_continuity_across_left_half_plane() {
        // The imaginary part of the principal branch is continuous along a
        // horizontal line in the upper half-plane.
        let mut prev = log_gamma(c(3.0, 0.7)).unwrap();
        let mut x = 3.0;
        while x > -20.0 {
            x -= 0.01;
            let cur = log_gamma(c(x, 0.7)).unwrap();
            assert!((cur - prev).norm() < 0.2, "jump at x={x}");
            prev = cur;
        }
    }

    #[test]
    fn reflection_identity() {
        for &(re, im) in &[(0.3, 0.4), (-2.7, 1.5), (7.2, -3.1), (-40.5, 0.25)] {
            let z = c(re, im);
            let lhs = gamma(z).unwrap() * gamma(1.0 - z).unwrap();
            let rhs = PI / sin_pi(z);
            assert!((lhs / rhs - 1.0).norm() < 1e-12, "z={z}");
        }
    }

    #[test]
    fn pochhammer_forms() {
        let x = c(0.5, 0.25);
        let s = pochhammer(x, 4.0, PochhammerForm::Standard).unwrap();
        let e = pochhammer(x, 4.0, PochhammerForm::Extended).unwrap();
        assert!((s - e).norm() < 1e-13);
        let p = pochhammer(c(-2.0, 0.0), 5.0, PochhammerForm::Standard).unwrap();
        assert_eq!(p, c(0.0, 0.0));
        let k = pochhammer(c(1.0, 0.0), 3.0, PochhammerForm::KSymbol(2.0)).unwrap();
        assert_eq!(k, c(15.0, 0.0));
        assert!(pochhammer(x, 1.5, PochhammerForm::Standard).is_err());
        let h = pochhammer(c(1.0, 0.0), 0.5, PochhammerForm::Extended).unwrap();
        assert!((h.re - PI.sqrt() / 2.0).abs() < 1e-14);
    }
}
