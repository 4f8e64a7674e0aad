//! Gauss hypergeometric function with analytic continuation, and Appell's
//! `F3` double series.
//!
//! Route selection for `2F1(a, b; c; z)`:
//!
//! | region | route |
//! |--------|-------|
//! | `a` or `b` in `Z<=0` | terminating sum, any `z` |
//! | `|z| < 0.9` | direct series |
//! | `|z| >= 1.1`, `a - b` not an integer | connection formula in `1/z` |
//! | `0.9 <= |z| < 1.1` | `1 - z` connection, else Pfaff, else direct series or `1/z` |
//!
//! Values on the cut `z > 1` are the limit from the upper half plane.

use crate::error::{Error, Result};
use crate::gamma::{gamma, nonpositive_integer, reciprocal_gamma};
use crate::sum::{sum_series, SumControl, Status, Term};
use num_complex::Complex64;

const INNER: f64 = 0.9;
const OUTER: f64 = 1.1;
const INTEGER_EPS: f64 = 1e-9;

/// Which representation produced a `2F1` value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Polynomial,
    Series,
    InverseZ,
    OneMinusZ,
    Pfaff,
}

/// A `2F1` value with the route and summation status behind it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Gauss2F1 {
    pub value: Complex64,
    pub route: Route,
    pub status: Status,
}

fn near_integer(x: Complex64) -> bool {
    x.im.abs() < INTEGER_EPS && (x.re - x.re.round()).abs() < INTEGER_EPS
}

fn ctl(conditional: bool) -> SumControl {
    let mut c = SumControl::new(1e-16, 200_000);
    c.conditional = conditional;
    c
}

/// Direct series. Terminates when `a` or `b` is in `Z<=0`; otherwise needs
/// `|z| <= 1`, with `|z| = 1` summed in conditional mode.
pub fn gauss_2f1_series(a: Complex64, b: Complex64, c: Complex64, z: Complex64) -> Result<Gauss2F1> {
    let end = [a, b].iter().filter_map(|x| nonpositive_integer(*x)).map(|k| (-k) as usize).min();
    if let Some(k) = nonpositive_integer(c) {
        if end.map_or(true, |e| e >= (-k) as usize) {
            return Err(Error::Pole(format!("2F1 lower parameter c = {c}")));
        }
    }
    let r = z.norm();
    let mut boundary = false;
    if end.is_none() {
        if r > 1.0 + 1e-12 {
            return Err(Error::Divergence(format!("2F1 series at |z| = {r}")));
        }
        if r >= 1.0 - 1e-12 {
            if (c - a - b).re <= 0.0 {
                return Err(Error::Divergence(format!("2F1 series on |z| = 1 with Re(c - a - b) <= 0")));
            }
            boundary = true;
        }
    }
    let mut t = Complex64::new(1.0, 0.0);
    let res = sum_series(
        |n| {
            if end.map_or(false, |e| n > e) {
                return Ok(Term::End);
            }
            let out = t;
            let nf = n as f64;
            t *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
            Ok(Term::Value(out))
        },
        &ctl(boundary),
    )?;
    let route = if end.is_some() { Route::Polynomial } else { Route::Series };
    Ok(Gauss2F1 { value: res.value, route, status: res.status })
}

/// `2F1(a, b; c; z)` with continuation outside the unit disk.
pub fn gauss_2f1(a: Complex64, b: Complex64, c: Complex64, z: Complex64) -> Result<Gauss2F1> {
    if nonpositive_integer(a).is_some() || nonpositive_integer(b).is_some() {
        return gauss_2f1_series(a, b, c, z);
    }
    if nonpositive_integer(c).is_some() {
        return Err(Error::Pole(format!("2F1 lower parameter c = {c}")));
    }
    let r = z.norm();
    if r < INNER {
        return gauss_2f1_series(a, b, c, z);
    }
    if r >= OUTER {
        return inverse_z(a, b, c, z);
    }
    let w = Complex64::new(1.0, 0.0) - z;
    if w.norm() < INNER && !near_integer(c - a - b) {
        return one_minus_z(a, b, c, w);
    }
    let zp = z / (z - 1.0);
    if zp.norm() < INNER {
        let f = gauss_2f1_series(a, c - b, c, zp)?;
        return Ok(Gauss2F1 { value: w.powc(-a) * f.value, route: Route::Pfaff, status: f.status });
    }
    if r <= 1.0 {
        gauss_2f1_series(a, b, c, z)
    } else {
        inverse_z(a, b, c, z)
    }
}

/// `2F1(a, b; c; 1 - w)`, accurate when `w` is small.
pub fn gauss_2f1_one_minus(a: Complex64, b: Complex64, c: Complex64, w: Complex64) -> Result<Gauss2F1> {
    let z = Complex64::new(1.0, 0.0) - w;
    if nonpositive_integer(a).is_some() || nonpositive_integer(b).is_some() || z.norm() < 0.5 {
        return gauss_2f1_series(a, b, c, z);
    }
    if nonpositive_integer(c).is_some() {
        return Err(Error::Pole(format!("2F1 lower parameter c = {c}")));
    }
    if w.norm() < INNER && !near_integer(c - a - b) {
        return one_minus_z(a, b, c, w);
    }
    gauss_2f1(a, b, c, z)
}

fn inverse_z(a: Complex64, b: Complex64, c: Complex64, z: Complex64) -> Result<Gauss2F1> {
    if near_integer(a - b) {
        return Err(Error::LogCase(format!("a - b = {} is an integer at |z| = {}", a - b, z.norm())));
    }
    let one = Complex64::new(1.0, 0.0);
    let mz = -z;
    let iz = one / z;
    let gc = gamma(c)?;
    let f1 = gauss_2f1_series(a, a - c + one, a - b + one, iz)?;
    let f2 = gauss_2f1_series(b, b - c + one, b - a + one, iz)?;
    let t1 = gc * gamma(b - a)? * reciprocal_gamma(b) * reciprocal_gamma(c - a) * mz.powc(-a) * f1.value;
    let t2 = gc * gamma(a - b)? * reciprocal_gamma(a) * reciprocal_gamma(c - b) * mz.powc(-b) * f2.value;
    Ok(Gauss2F1 { value: t1 + t2, route: Route::InverseZ, status: worst(f1.status, f2.status) })
}

fn one_minus_z(a: Complex64, b: Complex64, c: Complex64, w: Complex64) -> Result<Gauss2F1> {
    let one = Complex64::new(1.0, 0.0);
    let s = c - a - b;
    let gc = gamma(c)?;
    let f1 = gauss_2f1_series(a, b, one - s, w)?;
    let f2 = gauss_2f1_series(c - a, c - b, s + one, w)?;
    let t1 = gc * gamma(s)? * reciprocal_gamma(c - a) * reciprocal_gamma(c - b) * f1.value;
    let ws = if w.norm() == 0.0 { Complex64::new(0.0, 0.0) } else { w.powc(s) };
    let t2 = gc * gamma(-s)? * reciprocal_gamma(a) * reciprocal_gamma(b) * ws * f2.value;
    Ok(Gauss2F1 { value: t1 + t2, route: Route::OneMinusZ, status: worst(f1.status, f2.status) })
}

fn worst(a: Status, b: Status) -> Status {
    let rank = |s: Status| match s {
        Status::Polynomial => 0,
        Status::Converged => 1,
        Status::Conditional => 2,
        Status::TruncatedAtCap => 3,
        Status::Diverged => 4,
    };
    if rank(a) >= rank(b) {
        a
    } else {
        b
    }
}

/// Arguments of `F3(alpha, alpha', beta, beta'; gamma; x, y)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AppellArgs {
    pub alpha: Complex64,
    pub alpha_p: Complex64,
    pub beta: Complex64,
    pub beta_p: Complex64,
    pub gamma: Complex64,
    pub x: Complex64,
    pub y: Complex64,
}

/// Summation order for [`appell_f3_ordered`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum F3Order {
    AntiDiagonal,
    RowMajor,
}

const F3_MAX: usize = 4000;

/// `F3` summed by anti-diagonals `m + n = N`.
pub fn appell_f3(args: &AppellArgs, tol: f64) -> Result<Complex64> {
    appell_f3_ordered(args, tol, F3Order::AntiDiagonal)
}

/// `F3` summed in the requested order.
///
/// The term is `A_m B_n / (gamma)_(m+n)` with
/// `A_m = (alpha)_m (beta)_m x^m / m!` and `B_n = (alpha')_n (beta')_n y^n / n!`.
pub fn appell_f3_ordered(args: &AppellArgs, tol: f64, order: F3Order) -> Result<Complex64> {
    if args.x.norm() >= 1.0 || args.y.norm() >= 1.0 {
        return Err(Error::Domain(format!(
            "F3 double series needs max(|x|, |y|) < 1, got ({}, {})",
            args.x.norm(),
            args.y.norm()
        )));
    }
    if nonpositive_integer(args.gamma).is_some() {
        return Err(Error::Pole(format!("F3 lower parameter {}", args.gamma)));
    }
    let seq = |p: Complex64, q: Complex64, v: Complex64| {
        let mut out = Vec::with_capacity(F3_MAX + 1);
        let mut t = Complex64::new(1.0, 0.0);
        for k in 0..=F3_MAX {
            out.push(t);
            let kf = k as f64;
            t *= (p + kf) * (q + kf) / (kf + 1.0) * v;
        }
        out
    };
    let am = seq(args.alpha, args.beta, args.x);
    let bn = seq(args.alpha_p, args.beta_p, args.y);
    let mut inv_g = Vec::with_capacity(2 * F3_MAX + 1);
    let mut g = Complex64::new(1.0, 0.0);
    for k in 0..=2 * F3_MAX {
        inv_g.push(g);
        g /= args.gamma + k as f64;
    }
    let mut total = Complex64::new(0.0, 0.0);
    let mut quiet = 0;
    match order {
        F3Order::AntiDiagonal => {
            for nn in 0..=F3_MAX {
                let mut d = Complex64::new(0.0, 0.0);
                let mut mag = 0.0;
                for m in 0..=nn {
                    let t = am[m] * bn[nn - m] * inv_g[nn];
                    d += t;
                    mag += t.norm();
                }
                total += d;
                if mag <= tol * total.norm().max(1e-300) {
                    quiet += 1;
                    if quiet >= 3 {
                        return Ok(total);
                    }
                } else {
                    quiet = 0;
                }
            }
        }
        F3Order::RowMajor => {
            for m in 0..=F3_MAX {
                let mut row = Complex64::new(0.0, 0.0);
                let mut mag = 0.0;
                let mut inner_quiet = 0;
                for n in 0..=F3_MAX {
                    let t = am[m] * bn[n] * inv_g[m + n];
                    row += t;
                    mag += t.norm();
                    if t.norm() <= tol * 1e-3 * row.norm().max(1e-300) {
                        inner_quiet += 1;
                        if inner_quiet >= 3 {
                            break;
                        }
                    } else {
                        inner_quiet = 0;
                    }
                }
                total += row;
                if mag <= tol * total.norm().max(1e-300) {
                    quiet += 1;
                    if quiet >= 3 {
                        return Ok(total);
                    }
                } else {
                    quiet = 0;
                }
            }
        }
    }
    Err(Error::Convergence(format!("F3 did not settle within {F3_MAX} diagonals")))
}
