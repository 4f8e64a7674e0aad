//! Real-variable quadrature for complex-valued integrands.
//!
//! | routine | interval | refinement |
//! |---------|----------|------------|
//! | [`gauss_legendre`] | `[a, b]` | 32-node panels, panel count doubled |
//! | [`tanh_sinh`] | `[a, b]` with endpoint singularities | step halved |
//! | [`exp_sinh`] | `[a, inf)` | step halved |
//!
//! Contour integrals are reduced to these by parametrizing the path and
//! folding `dz/dt` into the integrand. The double exponential rules hand the
//! integrand the distances to both endpoints, computed without cancellation,
//! so that factors such as `(b - x)^(alpha - 1)` stay accurate next to `b`.

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::FRAC_PI_2;
use std::cell::RefCell;
use std::sync::OnceLock;

/// Nodes per Gauss-Legendre panel.
pub const PANEL_NODES: usize = 32;

/// Error targets: a result passes when `err <= max(abs, rel * |value|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub rel: f64,
    pub abs: f64,
}

impl Tolerance {
    pub fn new(rel: f64, abs: f64) -> Self {
        Tolerance { rel, abs }
    }

    fn met(&self, err: f64, value: Complex64) -> bool {
        err <= self.abs.max(self.rel * value.norm())
    }
}

/// A quadrature estimate and its error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: Complex64,
    pub error: f64,
    pub evaluations: usize,
}

/// Gauss-Legendre nodes and weights on `[-1, 1]` by Newton iteration on
/// `P_n`.
pub fn gauss_legendre_rule(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let nf = n as f64;
    for i in 0..(n + 1) / 2 {
        let mut t = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, t);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * t * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = nf * (t * p1 - p0) / (t * t - 1.0);
            let dt = p1 / dp;
            t -= dt;
            if dt.abs() < 1e-16 {
                break;
            }
        }
        x[i] = -t;
        x[n - 1 - i] = t;
        let wi = 2.0 / ((1.0 - t * t) * dp * dp);
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    (x, w)
}

fn panel_rule() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre_rule(PANEL_NODES))
}

/// Fixed composite rule with `panels` equal panels.
pub fn gauss_legendre_fixed<F>(f: &F, a: f64, b: f64, panels: usize) -> Complex64
where
    F: Fn(f64) -> Complex64,
{
    let (x, w) = panel_rule();
    let h = (b - a) / panels as f64;
    let mut s = Complex64::new(0.0, 0.0);
    for p in 0..panels {
        let lo = a + h * p as f64;
        let mid = lo + 0.5 * h;
        let mut ps = Complex64::new(0.0, 0.0);
        for (xi, wi) in x.iter().zip(w.iter()) {
            ps += f(mid + 0.5 * h * xi) * *wi;
        }
        s += ps * (0.5 * h);
    }
    s
}

/// Composite Gauss-Legendre with the panel count doubled from `start_panels`
/// until two successive estimates agree to `tol`.
pub fn gauss_legendre<F>(f: F, a: f64, b: f64, start_panels: usize, tol: Tolerance) -> Result<QuadResult>
where
    F: Fn(f64) -> Complex64,
{
    const MAX_PANELS: usize = 1 << 13;
    let mut panels = start_panels.max(1);
    let mut prev = gauss_legendre_fixed(&f, a, b, panels);
    let mut evaluations = panels * PANEL_NODES;
    loop {
        panels *= 2;
        let cur = gauss_legendre_fixed(&f, a, b, panels);
        evaluations += panels * PANEL_NODES;
        let err = (cur - prev).norm();
        if !cur.re.is_finite() || !cur.im.is_finite() {
            return Err(Error::Quadrature(format!("non-finite integrand on [{a}, {b}]")));
        }
        if tol.met(err, cur) {
            return Ok(QuadResult { value: cur, error: err, evaluations });
        }
        if panels >= MAX_PANELS {
            return Err(Error::Quadrature(format!(
                "Gauss-Legendre on [{a}, {b}] did not settle: error {err:.3e} with {panels} panels"
            )));
        }
        prev = cur;
    }
}

/// Holds the first error raised inside an integrand closure.
pub(crate) struct Trap(RefCell<Option<Error>>);

impl Trap {
    pub(crate) fn new() -> Self {
        Trap(RefCell::new(None))
    }
    pub(crate) fn catch(&self, r: Result<Complex64>) -> Complex64 {
        match r {
            Ok(v) => v,
            Err(e) => {
                self.0.borrow_mut().get_or_insert(e);
                Complex64::new(0.0, 0.0)
            }
        }
    }
    pub(crate) fn check(self) -> Result<()> {
        match self.0.into_inner() {
            Some(e) => Err(e),
            None => Ok(()),
        }
    }
}

const DE_LEVELS: usize = 9;
const DE_T_MAX: f64 = 6.6;

/// Tanh-sinh rule on `[a, b]`.
///
/// The integrand is called as `f(x, x - a, b - x)`; the two distances are
/// exact even when they underflow relative to `x`.
pub fn tanh_sinh<F>(f: F, a: f64, b: f64, tol: Tolerance) -> Result<QuadResult>
where
    F: Fn(f64, f64, f64) -> Complex64,
{
    let len = b - a;
    let half = 0.5 * len;
    let mut evaluations = 0usize;
    // Contribution of node t (t = 0 counted once by the caller).
    let mut node = |t: f64| -> Complex64 {
        let u = FRAC_PI_2 * t.sinh();
        let ch = u.cosh();
        let wt = half * FRAC_PI_2 * t.cosh() / (ch * ch);
        if wt == 0.0 || !wt.is_finite() {
            return Complex64::new(0.0, 0.0);
        }
        // For t > 0 the node sits near b.
        let near = len / (1.0 + (2.0 * u.abs()).exp());
        if near == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        let far = len - near;
        evaluations += 1;
        if t > 0.0 {
            f(b - near, far, near) * wt
        } else {
            f(a + near, near, far) * wt
        }
    };

    let mut h = 1.0;
    let mut sum = node(0.0);
    let mut k = 1;
    while (k as f64) * h <= DE_T_MAX {
        let t = k as f64 * h;
        sum += node(t) + node(-t);
        k += 1;
    }
    let mut prev = sum * h;
    for _ in 1..DE_LEVELS {
        h *= 0.5;
        let mut k = 1;
        while (k as f64) * h <= DE_T_MAX {
            let t = k as f64 * h;
            sum += node(t) + node(-t);
            k += 2;
        }
        let cur = sum * h;
        if !cur.re.is_finite() || !cur.im.is_finite() {
            return Err(Error::Quadrature(format!("non-finite integrand on [{a}, {b}]")));
        }
        let err = (cur - prev).norm();
        if tol.met(err, cur) && h < 0.5 {
            return Ok(QuadResult { value: cur, error: err, evaluations });
        }
        prev = cur;
    }
    Err(Error::Quadrature(format!("tanh-sinh on [{a}, {b}] did not settle")))
}

/// Exp-sinh rule on `[a, inf)` with nodes `x = a + exp(pi/2 sinh t)`.
///
/// The integrand is called as `f(x, x - a)`. Nodes beyond `cutoff` are
/// treated as contributing zero; the caller picks a cutoff past which the
/// integrand is negligible.
pub fn exp_sinh<F>(f: F, a: f64, cutoff: f64, tol: Tolerance) -> Result<QuadResult>
where
    F: Fn(f64, f64) -> Complex64,
{
    let mut evaluations = 0usize;
    let mut node = |t: f64| -> Complex64 {
        let e = (FRAC_PI_2 * t.sinh()).exp();
        let x = a + e;
        if e == 0.0 || x > cutoff || !e.is_finite() {
            return Complex64::new(0.0, 0.0);
        }
        evaluations += 1;
        f(x, e) * (FRAC_PI_2 * t.cosh() * e)
    };
    let mut h = 1.0;
    let mut sum = node(0.0);
    let mut k = 1;
    while (k as f64) * h <= DE_T_MAX {
        let t = k as f64 * h;
        sum += node(t) + node(-t);
        k += 1;
    }
    let mut prev = sum * h;
    for _ in 1..DE_LEVELS {
        h *= 0.5;
        let mut k = 1;
        while (k as f64) * h <= DE_T_MAX {
            let t = k as f64 * h;
            sum += node(t) + node(-t);
            k += 2;
        }
        let cur = sum * h;
        if !cur.re.is_finite() || !cur.im.is_finite() {
            return Err(Error::Quadrature(format!("non-finite integrand on [{a}, inf)")));
        }
        let err = (cur - prev).norm();
        if tol.met(err, cur) && h < 0.5 {
            return Ok(QuadResult { value: cur, error: err, evaluations });
        }
        prev = cur;
    }
    Err(Error::Quadrature(format!("exp-sinh on [{a}, inf) did not settle")))
}
