//! Contour integral representations used as independent oracles, and the
//! Laplace and Mellin transform checks.
//!
//! | routine | integral |
//! |---------|----------|
//! | [`hankel_reciprocal_gamma`] | `(1/2 pi i) int_H e^s s^(-z) ds` |
//! | [`ml2_hankel`] | `(1/2 pi i) int_H t^(alpha-beta) e^t / (t^alpha - z) dt` |
//! | [`mellin_barnes_prabhakar`] | `(1/Gamma(g)) (1/2 pi i) int Gamma(s) Gamma(g-s) / Gamma(b-a s) (-z)^(-s) ds` |
//! | [`wright_phi_mellin_barnes`] | `(1/2 pi i) int Gamma(s) / Gamma(b-a s) (-z)^(-s) ds` |
//!
//! The Hankel loop runs in along the ray `arg s = -delta`, counterclockwise
//! round the circle `|s| = eps` and out along `arg s = +delta`. Powers on the
//! loop use the path argument, so the cut along the negative axis is never
//! crossed.
//!
//! The Mellin-Barnes line `Re s = c` converges for the Prabhakar kernel only
//! when `|arg(-z)| < pi (1 - alpha/2)`. Outside that sector both halves of the
//! line are bent left, `s = c + i t - k |t|`; no pole is crossed and the
//! integrand then decays like the series terms.

use crate::error::{Error, Result};
use crate::gamma::{gamma, log_gamma_unchecked, nonpositive_integer, reciprocal_gamma};
use crate::mlfamily::{ml_eval, MLParams};
use crate::quad::{exp_sinh, gauss_legendre, gauss_legendre_fixed, tanh_sinh, QuadResult, Tolerance, Trap, PANEL_NODES};
use crate::sum::SumControl;
use num_complex::Complex64;
use std::cell::Cell;
use std::f64::consts::PI;

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// Hankel loop geometry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HankelContour {
    /// Radius of the circular part.
    pub eps: f64,
    /// Ray angle in `(pi/2, pi]`.
    pub delta: f64,
    /// Rays are truncated at `|s| = length`.
    pub length: f64,
    /// Starting node count per segment; panels are doubled from there.
    pub nodes: usize,
}

impl Default for HankelContour {
    fn default() -> Self {
        HankelContour { eps: 1.0, delta: PI, length: 80.0, nodes: 512 }
    }
}

impl HankelContour {
    /// Loop for [`ml2_hankel`]: the unit circle when the kernel poles are
    /// small, otherwise a circle of radius `min(1, |t*| / 2)` with the ray
    /// angle kept away from every pole. Poles left outside enter as residues,
    /// so the loop never meets the `e^t` growth at `|t*|`.
    pub fn for_ml2(alpha: f64, z: Complex64) -> Self {
        let r = z.norm().powf(1.0 / alpha);
        if r <= 0.5 {
            return HankelContour::default();
        }
        // Slack catches poles sitting on the cut itself.
        let poles = sheet_poles(alpha, z, 0.2);
        let delta = [PI, PI - 0.4, PI - 0.8]
            .into_iter()
            .find(|d| poles.iter().all(|p| (p.arg().abs() - d).abs() >= 0.15))
            .unwrap_or(PI);
        let eps = (0.5 * r).min(1.0);
        HankelContour { eps, delta, length: eps + 60.0 / -delta.cos(), nodes: 512 }
    }

    fn validate(&self) -> Result<()> {
        if !(self.eps > 0.0) || !(self.length > self.eps) {
            return Err(Error::Contour(format!("need 0 < eps < length, got {} and {}", self.eps, self.length)));
        }
        if !(self.delta > PI / 2.0 && self.delta <= PI) {
            return Err(Error::Contour(format!("ray angle {} outside (pi/2, pi]", self.delta)));
        }
        Ok(())
    }

    /// `(1/2 pi i) int g(s, log s) ds` over the loop.
    fn integrate<G>(&self, g: G) -> Result<QuadResult>
    where
        G: Fn(Complex64, Complex64) -> Complex64,
    {
        self.validate()?;
        let panels = (self.nodes / PANEL_NODES).max(1);
        let d = self.delta;
        let eps = self.eps;
        let g = &g;
        let ray = |sign: f64| {
            let dir = Complex64::from_polar(1.0, sign * d);
            move |r: f64| g(dir * r, Complex64::new(r.ln(), sign * d)) * dir
        };
        let arc = |th: f64| {
            let s = Complex64::from_polar(eps, th);
            g(s, Complex64::new(eps.ln(), th)) * I * s
        };
        let lower = settle(ray(-1.0), eps, self.length, panels)?;
        let upper = settle(ray(1.0), eps, self.length, panels)?;
        let arc = settle(arc, -d, d, panels)?;
        let value = (upper.value - lower.value + arc.value) / (2.0 * PI * I);
        Ok(QuadResult {
            value,
            error: (upper.error + lower.error + arc.error) / (2.0 * PI),
            evaluations: upper.evaluations + lower.evaluations + arc.evaluations,
        })
    }
}

/// Adaptive Gauss-Legendre whose absolute target is tied to the size of
/// `|f|`, so that integrals cancelling to zero still settle.
fn settle<F: Fn(f64) -> Complex64>(f: F, a: f64, b: f64, panels: usize) -> Result<QuadResult> {
    let l1 = gauss_legendre_fixed(&|x| Complex64::new(f(x).norm(), 0.0), a, b, panels).re;
    gauss_legendre(f, a, b, panels, Tolerance::new(1e-13, 1e-15 * l1))
}

/// `1/Gamma(z)` from the Hankel loop integral.
pub fn hankel_reciprocal_gamma(z: Complex64, contour: &HankelContour) -> Result<QuadResult> {
    contour.integrate(|s, ls| (s - z * ls).exp())
}

/// Poles `t = |z|^(1/alpha) exp(i (arg z + 2 pi k) / alpha)` of
/// `1/(t^alpha - z)` with `|arg t| < pi + slack`.
fn sheet_poles(alpha: f64, z: Complex64, slack: f64) -> Vec<Complex64> {
    if z.norm() == 0.0 {
        return vec![Complex64::new(0.0, 0.0)];
    }
    let r = z.norm().powf(1.0 / alpha);
    let th = z.arg();
    let kmax = (alpha / 2.0).ceil() as i64 + 1;
    (-kmax..=kmax)
        .map(|k| (th + 2.0 * PI * k as f64) / alpha)
        .filter(|a| a.abs() < PI + slack)
        .map(|a| Complex64::from_polar(r, a))
        .collect()
}

/// Two-parameter Mittag-Leffler function from its Hankel loop integral,
/// `0 < alpha < 2`.
///
/// Kernel poles `t*` on the principal sheet that the loop leaves outside
/// (`|t*| > eps` and `|arg t*| < delta`) contribute their residues
/// `t*^(1-beta) e^(t*) / alpha`; a loop enclosing every pole gives the
/// integral alone. A pole within 5% of the loop is a contour error.
pub fn ml2_hankel(alpha: f64, beta: Complex64, z: Complex64, contour: &HankelContour) -> Result<QuadResult> {
    if !(alpha > 0.0 && alpha < 2.0) {
        return Err(Error::Parameter(format!("ml2_hankel needs 0 < alpha < 2, got {alpha}")));
    }
    let mut residues = Complex64::new(0.0, 0.0);
    for p in sheet_poles(alpha, z, 0.0) {
        let (r, a) = (p.norm(), p.arg().abs());
        if r < contour.eps / 1.05 || a > contour.delta + 0.05 {
            continue;
        }
        if r > contour.eps * 1.05 && a < contour.delta - 0.05 {
            residues += ((Complex64::new(1.0, 0.0) - beta) * p.ln() + p).exp() / alpha;
            continue;
        }
        return Err(Error::Contour(format!("kernel pole {p} lies on the loop")));
    }
    let closest = Cell::new(f64::INFINITY);
    let mut r = contour.integrate(|t, lt| {
        let den = (lt * alpha).exp() - z;
        closest.set(closest.get().min(den.norm()));
        ((alpha - beta) * lt + t).exp() / den
    })?;
    if closest.get() < 1e-10 {
        return Err(Error::Pole(format!("|t^alpha - z| = {:.3e} on the contour", closest.get())));
    }
    r.value += residues;
    Ok(r)
}

/// A Mellin-Barnes integration path.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MellinBarnesLine {
    /// Abscissa `c` where the path crosses the real axis.
    pub abscissa: f64,
    /// Initial half-height `T`; extended until the integrand is negligible.
    pub half_height: f64,
    /// Starting node count per half; panels are doubled from there.
    pub nodes: usize,
    /// Leftward slope `k` of the bent path; `None` chooses automatically.
    pub tilt: Option<f64>,
}

impl MellinBarnesLine {
    pub fn new(abscissa: f64) -> Self {
        MellinBarnesLine { abscissa, half_height: 60.0, nodes: 256, tilt: None }
    }
}

/// Value of a Mellin-Barnes integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourValue {
    pub value: Complex64,
    pub error: f64,
    /// Half-height actually used.
    pub half_height: f64,
    /// Slope of the bent path (0 for a straight line).
    pub tilt: f64,
    /// The integrand at the path ends exceeded `1e-12` of the value.
    pub truncated: bool,
}

const MB_MAX_HEIGHT: f64 = 2000.0;

/// `(1/2 pi i) int f(s) ds` along `s = c + i t - k |t|`.
fn mb_integrate<F>(f: F, c: f64, tilt: f64, line: &MellinBarnesLine) -> Result<ContourValue>
where
    F: Fn(Complex64) -> Complex64,
{
    let path = |t: f64| Complex64::new(c - tilt * t.abs(), t);
    let mag = |t: f64| f(path(t)).norm();
    let scale = mag(0.0).max(mag(1.0)).max(mag(-1.0)).max(1e-300);
    let mut height = line.half_height.max(1.0);
    while (mag(height).max(mag(-height))) * height > 1e-18 * scale && height < MB_MAX_HEIGHT {
        height = (height * 1.5).min(MB_MAX_HEIGHT);
    }
    let panels = ((line.nodes / PANEL_NODES) as f64 * height / line.half_height.max(1.0)).ceil() as usize;
    let half = |sign: f64| {
        let ds = Complex64::new(-tilt * sign, 1.0);
        settle(|u| f(path(sign * u)) * ds, 0.0, height, panels.max(1))
    };
    let up = half(1.0)?;
    let down = half(-1.0)?;
    let value = (up.value + down.value) / (2.0 * PI * I);
    let tail = (mag(height).max(mag(-height))) * height / (2.0 * PI);
    Ok(ContourValue {
        value,
        error: (up.error + down.error) / (2.0 * PI),
        half_height: height,
        tilt,
        truncated: tail > 1e-12 * value.norm(),
    })
}

fn log_minus(z: Complex64) -> Result<Complex64> {
    if z.norm() == 0.0 {
        return Err(Error::Domain("Mellin-Barnes representation needs z != 0".into()));
    }
    Ok((-z).ln())
}

/// Prabhakar function from its Mellin-Barnes integral, `alpha > 0`,
/// `Re gamma > 0`, `0 < c < Re gamma`.
pub fn mellin_barnes_prabhakar(
    alpha: f64,
    beta: Complex64,
    gamma_: Complex64,
    z: Complex64,
    line: &MellinBarnesLine,
) -> Result<ContourValue> {
    if !(alpha > 0.0) || !(gamma_.re > 0.0) {
        return Err(Error::Parameter(format!("need alpha > 0 and Re gamma > 0, got {alpha}, {gamma_}")));
    }
    let c = line.abscissa;
    if !(c > 0.0 && c < gamma_.re) {
        return Err(Error::Contour(format!("abscissa {c} outside (0, Re gamma = {})", gamma_.re)));
    }
    let lmz = log_minus(z)?;
    let decay = PI * (1.0 - alpha / 2.0) - lmz.im.abs();
    let tilt = line.tilt.unwrap_or(if decay > 0.5 { 0.0 } else { 1.0 });
    let lg_g = log_gamma_unchecked(gamma_);
    let r = mb_integrate(
        |s| {
            let b = beta - alpha * s;
            if nonpositive_integer(b).is_some() {
                return Complex64::new(0.0, 0.0);
            }
            (log_gamma_unchecked(s) + log_gamma_unchecked(gamma_ - s) - log_gamma_unchecked(b) - lg_g - s * lmz).exp()
        },
        c,
        tilt,
        line,
    )?;
    Ok(r)
}

/// Wright function `phi(alpha, beta; z)` from its Mellin-Barnes integral on a
/// straight line.
///
/// Accepted when `0 < alpha < 1` and `|arg(-z)| < (1 - alpha) pi / 2`, or when
/// `alpha = 1`, `z < 0` and `Re beta > 1 + 2c`.
pub fn wright_phi_mellin_barnes(alpha: f64, beta: Complex64, z: Complex64, line: &MellinBarnesLine) -> Result<ContourValue> {
    let lmz = log_minus(z)?;
    let c = line.abscissa;
    if !(c > 0.0) {
        return Err(Error::Contour(format!("abscissa {c} must be positive")));
    }
    let first = alpha > 0.0 && alpha < 1.0 && lmz.im.abs() < (1.0 - alpha) * PI / 2.0;
    let second = alpha == 1.0 && lmz.im == 0.0 && beta.re > 1.0 + 2.0 * c;
    if !(first || second) {
        return Err(Error::Sector(format!(
            "Wright function line integral invalid for alpha = {alpha}, arg(-z) = {}, c = {c}",
            lmz.im
        )));
    }
    let mut line = *line;
    line.tilt = Some(0.0);
    mb_integrate(
        |s| {
            let b = beta - alpha * s;
            if nonpositive_integer(b).is_some() {
                return Complex64::new(0.0, 0.0);
            }
            (log_gamma_unchecked(s) - log_gamma_unchecked(b) - s * lmz).exp()
        },
        c,
        0.0,
        &line,
    )
}

/// Default abscissa for [`wright_phi_mellin_barnes`].
pub fn wright_phi_default_abscissa(alpha: f64, beta: Complex64) -> f64 {
    if alpha == 1.0 {
        ((beta.re - 1.0) / 4.0).min(0.5)
    } else {
        0.5
    }
}

/// Both sides of a transform identity and the quadrature error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformCheck {
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub quad_error: f64,
}

impl TransformCheck {
    pub fn relative_error(&self) -> f64 {
        (self.lhs - self.rhs).norm() / self.rhs.norm()
    }
}

fn tight() -> SumControl {
    SumControl::new(1e-16, 100_000)
}

/// Laplace pair `int_0^inf e^(-st) t^(beta-1) E^g_{a,b}(w t^a) dt` against
/// `s^(-beta) (1 - w s^(-alpha))^(-gamma)`, for real `alpha, beta, gamma > 0`
/// and real `s > |w|^(1/alpha)`.
pub fn laplace_prabhakar_check(alpha: f64, beta: f64, gamma_: f64, w: f64, s: f64) -> Result<TransformCheck> {
    if !(alpha > 0.0 && beta > 0.0 && gamma_ > 0.0) {
        return Err(Error::Parameter("Laplace pair needs alpha, beta, gamma > 0".into()));
    }
    let edge = w.abs().powf(1.0 / alpha);
    if !(s > edge) {
        return Err(Error::Convergence(format!("Re s = {s} <= |w|^(1/alpha) = {edge}")));
    }
    let p = MLParams::Three {
        alpha: Complex64::new(alpha, 0.0),
        beta: Complex64::new(beta, 0.0),
        gamma: Complex64::new(gamma_, 0.0),
    };
    let trap = Trap::new();
    let f = |t: f64| -> Complex64 {
        trap.catch((|| {
            let e = ml_eval(&p, Complex64::new(w * t.powf(alpha), 0.0), &tight())?;
            if e.scaled.mantissa.norm() == 0.0 {
                return Ok(Complex64::new(0.0, 0.0));
            }
            Ok((e.scaled.ln() - s * t + (beta - 1.0) * t.ln()).exp())
        })())
    };
    let tol = Tolerance::new(1e-11, 1e-300);
    let head = tanh_sinh(|t, _, _| f(t), 0.0, 1.0, tol)?;
    let cutoff = 1.0 + 60.0 / (s - edge) + 10.0;
    let tail = exp_sinh(|t, _| f(t), 1.0, cutoff, tol)?;
    trap.check()?;
    let rhs = Complex64::new(s.powf(-beta), 0.0) * Complex64::new(1.0 - w * s.powf(-alpha), 0.0).powf(-gamma_);
    Ok(TransformCheck { lhs: head.value + tail.value, rhs, quad_error: head.error + tail.error })
}

/// Threshold on `(w t)^(1/alpha)` above which the Mellin integrand uses the
/// Hankel loop instead of the series.
const MELLIN_SWITCH: f64 = 15.0;
/// Start of the analytic tail, in the same variable.
const MELLIN_TAIL: f64 = 40.0;

/// `c_k = (-1)^k Gamma(g+k) / (Gamma(g) k! Gamma(b - a(g+k)))`, the
/// coefficients of `E^g_{a,b}(-x) ~ sum_k c_k x^(-g-k)`.
fn algebraic_coefficients(alpha: f64, beta: f64, gamma_: f64, count: usize) -> Vec<f64> {
    let lgg = log_gamma_unchecked(Complex64::new(gamma_, 0.0)).re;
    (0..count)
        .map(|k| {
            let kf = k as f64;
            let lr = log_gamma_unchecked(Complex64::new(gamma_ + kf, 0.0)).re
                - lgg
                - log_gamma_unchecked(Complex64::new(kf + 1.0, 0.0)).re;
            let rg = reciprocal_gamma(Complex64::new(beta - alpha * (gamma_ + kf), 0.0)).re;
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            sign * lr.exp() * rg
        })
        .collect()
}

/// Number of leading terms of `sum_k c_k x^(-k)` kept by optimal
/// truncation at `x`: everything before the smallest non-zero term.
fn optimal_order(c: &[f64], x: f64) -> usize {
    let mut best = (f64::INFINITY, c.len());
    for (k, ck) in c.iter().enumerate() {
        let t = (ck * x.powf(-(k as f64))).abs();
        if t != 0.0 && t < best.0 {
            best = (t, k);
        }
    }
    best.1
}

/// `sum_{k < order} c_k x^(-g-k) h_k`.
fn truncated_sum(c: &[f64], order: usize, x: f64, gamma_: f64, h: impl Fn(usize) -> f64) -> f64 {
    c[..order].iter().enumerate().map(|(k, ck)| ck * x.powf(-gamma_ - k as f64) * h(k)).sum()
}

/// `E^g_{a,b}(-x)` for `0 < alpha < 1` and `x > 0` from
/// `(1/2 pi i) int_H e^t t^(a g - b) (t^a + x)^(-g) dt`. The factor
/// `t^a + x` keeps `|arg| < alpha pi` on the cut plane, so the integrand has
/// no singularity off the cut and the unit loop serves every `x`.
fn prabhakar_negative_hankel(alpha: f64, beta: f64, gamma_: f64, x: f64) -> Result<Complex64> {
    HankelContour::default()
        .integrate(|t, lt| (t + (alpha * gamma_ - beta) * lt - gamma_ * ((lt * alpha).exp() + x).ln()).exp())
        .map(|r| r.value)
}

/// Mellin pair `int_0^inf t^(s-1) E^g_{a,b}(-w t) dt` against
/// `Gamma(s) Gamma(g-s) w^(-s) / (Gamma(g) Gamma(b - a s))`, for
/// `0 < alpha <= 1`, `beta, gamma, w > 0` and `0 < s < gamma`.
///
/// The range `[0, X]` is integrated numerically, switching from the series to
/// a Hankel loop integral where `(w t)^(1/alpha)` exceeds 15; beyond `X` the
/// algebraic expansion, truncated at its optimal order there, is integrated
/// term by term.
pub fn mellin_prabhakar_check(alpha: f64, beta: f64, gamma_: f64, w: f64, s: f64) -> Result<TransformCheck> {
    if !(alpha > 0.0 && alpha <= 1.0 && beta > 0.0 && gamma_ > 0.0 && w > 0.0) {
        return Err(Error::Parameter("Mellin pair needs 0 < alpha <= 1 and beta, gamma, w > 0".into()));
    }
    if !(s > 0.0 && s < gamma_) {
        return Err(Error::Domain(format!("s = {s} outside the strip (0, {gamma_})")));
    }
    let p = MLParams::Three {
        alpha: Complex64::new(alpha, 0.0),
        beta: Complex64::new(beta, 0.0),
        gamma: Complex64::new(gamma_, 0.0),
    };
    let coef = algebraic_coefficients(alpha, beta, gamma_, 160);
    let switch = if alpha == 1.0 { f64::INFINITY } else { MELLIN_SWITCH.powf(alpha) / w };
    let x_end = if alpha == 1.0 { 60.0 / w + 40.0 } else { MELLIN_TAIL.powf(alpha) / w };
    let order = optimal_order(&coef, (w * x_end).max(1.0));
    let trap = Trap::new();
    let f = |t: f64| -> Complex64 {
        let x = w * t;
        let e = if t < switch {
            trap.catch(ml_eval(&p, Complex64::new(-x, 0.0), &tight()).map(|r| r.value))
        } else {
            trap.catch(prabhakar_negative_hankel(alpha, beta, gamma_, x))
        };
        e * t.powf(s - 1.0)
    };
    let tol = Tolerance::new(1e-7, 1e-300);
    let mid = switch.min(x_end);
    let head = tanh_sinh(|t, _, _| f(t), 0.0, mid, tol)?;
    let body = if mid < x_end {
        tanh_sinh(|t, _, _| f(t), mid, x_end, tol)?
    } else {
        QuadResult { value: Complex64::new(0.0, 0.0), error: 0.0, evaluations: 0 }
    };
    trap.check()?;
    // int_X^inf c_k (w t)^(-g-k) t^(s-1) dt = c_k w^(-g-k) X^(s-g-k) / (g+k-s)
    let tail = truncated_sum(&coef, order, w * x_end, gamma_, |k| x_end.powf(s) / (gamma_ + k as f64 - s));
    let lhs = head.value + body.value + tail;
    let g = |x: f64| gamma(Complex64::new(x, 0.0));
    let rhs = g(s)? * g(gamma_ - s)? * w.powf(-s) * reciprocal_gamma(Complex64::new(beta - alpha * s, 0.0))
        / g(gamma_)?;
    Ok(TransformCheck { lhs, rhs, quad_error: head.error + body.error })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn hankel_gamma_values() {
        let h = HankelContour::default();
        assert!((hankel_reciprocal_gamma(c(1.0), &h).unwrap().value - 1.0).norm() < 1e-12);
        assert!(hankel_reciprocal_gamma(c(-2.0), &h).unwrap().value.norm() < 1e-12);
        let z = Complex64::new(0.5, 3.0);
        let v = hankel_reciprocal_gamma(z, &h).unwrap().value;
        assert!((v - reciprocal_gamma(z)).norm() < 1e-10);
    }

    #[test]
    fn ml2_loop_values() {
        let z = c(1.0);
        let v = ml2_hankel(1.0, c(1.0), z, &HankelContour::for_ml2(1.0, z)).unwrap().value;
        assert!((v - std::f64::consts::E).norm() < 1e-12);
        let v0 = ml2_hankel(0.5, c(1.0), c(0.0), &HankelContour::default()).unwrap().value;
        assert!((v0 - 1.0).norm() < 1e-12);
        // Pole at t = 1 sits on the unit circle.
        assert!(matches!(ml2_hankel(1.0, c(1.0), c(1.0), &HankelContour::default()), Err(Error::Contour(_))));
        // Residue of the pole at t = 3 outside the unit circle.
        let v = ml2_hankel(1.0, c(1.0), c(3.0), &HankelContour::default()).unwrap().value;
        assert!((v - 3f64.exp()).norm() < 1e-12 * 3f64.exp());
    }

    #[test]
    fn mellin_barnes_exponential() {
        let v = mellin_barnes_prabhakar(1.0, c(1.0), c(1.0), c(-1.0), &MellinBarnesLine::new(0.5)).unwrap();
        assert_eq!(v.tilt, 0.0);
        assert!((v.value - (-1f64).exp()).norm() < 1e-10, "{:?}", v);
        // Positive argument needs the bent path.
        let v = mellin_barnes_prabhakar(1.0, c(1.0), c(1.0), c(1.0), &MellinBarnesLine::new(0.5)).unwrap();
        assert!(v.tilt > 0.0);
        assert!((v.value - std::f64::consts::E).norm() < 1e-10);
    }

    #[test]
    fn laplace_of_exponential() {
        let r = laplace_prabhakar_check(1.0, 1.0, 1.0, 1.0, 3.0).unwrap();
        assert!((r.lhs - 0.5).norm() < 1e-10);
        assert!((r.rhs - 0.5).norm() < 1e-15);
    }

    #[test]
    fn mellin_of_exponential() {
        let r = mellin_prabhakar_check(1.0, 1.0, 1.0, 1.0, 0.4).unwrap();
        let g = gamma(c(0.4)).unwrap();
        assert!((r.lhs - g).norm() < 1e-9 * g.norm());
        assert!((r.rhs - g).norm() < 1e-14 * g.norm());
    }
}
