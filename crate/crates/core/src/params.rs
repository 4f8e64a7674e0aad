//! Convergence classification, order and type of entire series, and an
//! empirical order estimate from coefficient magnitudes.
//!
//! For a Fox-Wright spec with weights `alpha_i` (upper) and `beta_j` (lower):
//!
//! | quantity | definition |
//! |----------|------------|
//! | `Delta` | `sum beta_j - sum alpha_i` |
//! | `delta` | `prod |alpha_i|^(-alpha_i) * prod |beta_j|^(beta_j)` |
//! | `mu` | `sum b_j - sum a_i + (p - q) / 2` |
//!
//! `Delta > -1` gives an entire function, `Delta = -1` a disk of radius
//! `delta` (absolutely convergent on the boundary iff `Re mu > 1/2`) and
//! `Delta < -1` divergence for every non-zero argument.

use crate::error::{Error, Result};
use crate::foxwright::FoxWrightSpec;
use crate::mlfamily::MLParams;
use num_complex::Complex64;

const DELTA_EPS: f64 = 1e-12;

/// Region of convergence of a Fox-Wright series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ConvergenceClass {
    Entire,
    Disk { radius: f64, boundary_convergent: bool },
    Divergent,
}

impl ConvergenceClass {
    /// Stable lowercase identifier.
    pub fn as_str(&self) -> &'static str {
        match self {
            ConvergenceClass::Entire => "entire",
            ConvergenceClass::Disk { .. } => "disk",
            ConvergenceClass::Divergent => "divergent",
        }
    }
}

/// `Delta`, `delta`, `mu` and the resulting class.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceReport {
    pub delta_cap: f64,
    pub delta: f64,
    pub mu: Complex64,
    pub class: ConvergenceClass,
}

/// Classifies the convergence of `spec` in its series argument.
pub fn classify_convergence(spec: &FoxWrightSpec) -> Result<ConvergenceReport> {
    for &(_, w) in spec.upper.iter().chain(spec.lower.iter()) {
        if !(w > 0.0) || !w.is_finite() {
            return Err(Error::Parameter(format!("weights must be positive, got {w}")));
        }
    }
    let sum_up: f64 = spec.upper.iter().map(|p| p.1).sum();
    let sum_lo: f64 = spec.lower.iter().map(|p| p.1).sum();
    let delta_cap = sum_lo - sum_up;
    let ln_delta: f64 = spec.upper.iter().map(|p| -p.1 * p.1.ln()).sum::<f64>()
        + spec.lower.iter().map(|p| p.1 * p.1.ln()).sum::<f64>();
    let delta = ln_delta.exp();
    let sa: Complex64 = spec.upper.iter().map(|p| p.0).sum();
    let sb: Complex64 = spec.lower.iter().map(|p| p.0).sum();
    let mu = sb - sa + (spec.upper.len() as f64 - spec.lower.len() as f64) / 2.0;
    let class = if delta_cap > -1.0 + DELTA_EPS {
        ConvergenceClass::Entire
    } else if delta_cap >= -1.0 - DELTA_EPS {
        ConvergenceClass::Disk { radius: delta, boundary_convergent: mu.re > 0.5 }
    } else {
        ConvergenceClass::Divergent
    };
    Ok(ConvergenceReport { delta_cap, delta, mu, class })
}

/// Order `rho` and type `sigma` of an entire function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrderType {
    pub order: f64,
    pub kind: f64,
}

/// Order and type of an entire Fox-Wright function of its series argument:
/// `rho = 1 / (1 + Delta)` and `sigma = delta^(-rho) / rho`.
pub fn fox_wright_order_and_type(spec: &FoxWrightSpec) -> Result<OrderType> {
    let r = classify_convergence(spec)?;
    if r.class != ConvergenceClass::Entire {
        return Err(Error::UnsupportedRegime("Fox-Wright function is not entire".into()));
    }
    let rho = 1.0 / (1.0 + r.delta_cap);
    Ok(OrderType { order: rho, kind: r.delta.powf(-rho) / rho })
}

/// Closed-form order and type of a Mittag-Leffler family member.
///
/// The Salim and six-parameter members use `rho = 1/(Re alpha + r - s)` and
/// `sigma = (s^s / (r^r Re alpha^Re alpha))^rho / rho`, with `r = s = 1` for
/// the four-parameter case.
pub fn order_and_type(p: &MLParams) -> Result<OrderType> {
    let simple = |alpha: Complex64| -> Result<OrderType> {
        if alpha.re <= 0.0 {
            return Err(Error::UnsupportedRegime(format!("Re alpha = {} <= 0", alpha.re)));
        }
        Ok(OrderType { order: 1.0 / alpha.re, kind: 1.0 })
    };
    match p {
        MLParams::One { alpha } | MLParams::Two { alpha, .. } | MLParams::Three { alpha, .. } => simple(*alpha),
        MLParams::Four { alpha, .. } => simple(*alpha),
        MLParams::Six { alpha, r, s, .. } => {
            let a = alpha.re;
            let e = a + r - s;
            if a <= 0.0 || e <= 0.0 {
                return Err(Error::UnsupportedRegime(format!("Re alpha + r - s = {e} <= 0")));
            }
            let rho = 1.0 / e;
            let xlogx = |x: f64| if x == 0.0 { 0.0 } else { x * x.ln() };
            let kind = ((xlogx(*s) - xlogx(*r) - xlogx(a)) * rho).exp() / rho;
            Ok(OrderType { order: rho, kind })
        }
        MLParams::KilbasSaigo { alpha, m, .. } => {
            if *alpha <= 0.0 || *m <= 0.0 {
                return Err(Error::UnsupportedRegime("Kilbas-Saigo needs alpha, m > 0".into()));
            }
            Ok(OrderType { order: 1.0 / alpha, kind: 1.0 / m })
        }
        MLParams::MultiIndex { alphas, .. } => {
            let total: f64 = alphas.iter().sum();
            if total <= 0.0 || alphas.iter().any(|a| *a <= 0.0) {
                return Err(Error::UnsupportedRegime("multi-index weights must be positive".into()));
            }
            let kind = alphas.iter().map(|a| (total / a).powf(a / total)).product();
            Ok(OrderType { order: 1.0 / total, kind })
        }
    }
}

/// Finite-`n` order estimate `n ln n / ln(1/|c_n|)`, maximized over the last
/// quarter of the supplied coefficients.
///
/// `log_abs` holds `ln |c_n|` (use `f64::NEG_INFINITY` for vanishing
/// coefficients). Entries with `|c_n| >= 1` carry no information and are skipped.
pub fn empirical_order(log_abs: &[f64]) -> Result<f64> {
    if log_abs.len() < 8 {
        return Err(Error::DegenerateInput("need at least 8 coefficients".into()));
    }
    if log_abs[1..].iter().all(|l| *l == f64::NEG_INFINITY) {
        return Err(Error::DegenerateInput("all coefficients beyond index 0 vanish".into()));
    }
    let start = log_abs.len() - log_abs.len() / 4;
    let mut best = f64::NEG_INFINITY;
    for (n, &l) in log_abs.iter().enumerate().skip(start.max(2)) {
        if l.is_finite() && l < 0.0 {
            let nf = n as f64;
            best = best.max(nf * nf.ln() / (-l));
        }
    }
    if best.is_finite() {
        Ok(best)
    } else {
        Err(Error::DegenerateInput("no usable coefficient in the tail".into()))
    }
}

/// [`empirical_order`] for coefficients given as values.
pub fn empirical_order_from_values(c: &[Complex64]) -> Result<f64> {
    let logs: Vec<f64> = c.iter().map(|x| x.norm().ln()).collect();
    empirical_order(&logs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn classic_classes() {
        let ml = FoxWrightSpec::new(vec![(c(1.0), 1.0)], vec![(c(1.0), 0.5)]);
        assert_eq!(classify_convergence(&ml).unwrap().class, ConvergenceClass::Entire);
        let f21 = FoxWrightSpec::new(vec![(c(1.0), 1.0), (c(2.0), 1.0)], vec![(c(3.0), 1.0)]);
        let r = classify_convergence(&f21).unwrap();
        assert_eq!(r.class, ConvergenceClass::Disk { radius: 1.0, boundary_convergent: false });
        let f30 = FoxWrightSpec::new(vec![(c(1.0), 1.0); 3], vec![]);
        assert_eq!(classify_convergence(&f30).unwrap().class, ConvergenceClass::Divergent);
    }

    #[test]
    fn orders() {
        let o = order_and_type(&MLParams::Two { alpha: c(0.5), beta: c(1.0) }).unwrap();
        assert_eq!((o.order, o.kind), (2.0, 1.0));
        let o = order_and_type(&MLParams::KilbasSaigo { alpha: 1.0, m: 2.0, l: 0.0 }).unwrap();
        assert_eq!((o.order, o.kind), (1.0, 0.5));
        let o = order_and_type(&MLParams::MultiIndex { alphas: vec![1.0, 1.0], betas: vec![c(1.0), c(1.0)] }).unwrap();
        assert_eq!(o.order, 0.5);
        assert!((o.kind - 2.0).abs() < 1e-15);
        assert!(order_and_type(&MLParams::Two { alpha: c(-0.5), beta: c(1.0) }).is_err());
    }
}
