//! Mittag-Leffler type functions summed from their defining series.
//!
//! | variant | coefficient of `z^n` |
//! |---------|----------------------|
//! | `One` | `1 / Gamma(alpha n + 1)` |
//! | `Two` | `1 / Gamma(alpha n + beta)` |
//! | `Three` (Prabhakar) | `(gamma)_n / (n! Gamma(alpha n + beta))` |
//! | `Four` (Salim) | `(gamma)_n / ((delta)_n Gamma(alpha n + beta))` |
//! | `Six` | `(gamma)_{sn} / ((delta)_{rn} Gamma(alpha n + beta))` |
//! | `KilbasSaigo` | `prod_{j<n} Gamma(alpha(jm+l)+1) / Gamma(alpha(jm+l+1)+1)` |
//! | `MultiIndex` | `1 / prod_j Gamma(alpha_j n + beta_j)` |
//!
//! The `(x)_{qn}` symbols of the six-parameter case are `Gamma(x+qn)/Gamma(x)`.
//!
//! Two accuracy devices sit in front of the plain log-space summation. For a
//! small positive integer `alpha` the terms are generated by their exact
//! rational recurrence. For `alpha = 1` and `Re z < 0` the Kummer relation
//! `E^g_{1,b}(z) = e^z E^{b-g}_{1,b}(-z)` removes the cancellation of the
//! alternating series.

use crate::error::{Error, Result};
use crate::gamma::{log_gamma_unchecked, nonpositive_integer, reciprocal_gamma};
use crate::sum::{polar_split, power_term, sum_series, EvalResult, Status, SumControl, Term};
use num_complex::Complex64;
use std::f64::consts::PI;

/// A member of the Mittag-Leffler family.
#[derive(Debug, Clone, PartialEq)]
pub enum MLParams {
    One { alpha: Complex64 },
    Two { alpha: Complex64, beta: Complex64 },
    Three { alpha: Complex64, beta: Complex64, gamma: Complex64 },
    Four { alpha: Complex64, beta: Complex64, gamma: Complex64, delta: Complex64 },
    Six { alpha: Complex64, beta: Complex64, gamma: Complex64, delta: Complex64, r: f64, s: f64 },
    KilbasSaigo { alpha: f64, m: f64, l: f64 },
    MultiIndex { alphas: Vec<f64>, betas: Vec<Complex64> },
}

impl MLParams {
    /// Short identifier of the variant.
    pub fn name(&self) -> &'static str {
        match self {
            MLParams::One { .. } => "ml1",
            MLParams::Two { .. } => "ml2",
            MLParams::Three { .. } => "ml3",
            MLParams::Four { .. } => "ml4",
            MLParams::Six { .. } => "ml6",
            MLParams::KilbasSaigo { .. } => "kilbas-saigo",
            MLParams::MultiIndex { .. } => "multi-index",
        }
    }

    /// Checks the structural constraints of the variant.
    pub fn validate(&self) -> Result<()> {
        let pos = |a: Complex64, what: &str| {
            if a.re > 0.0 {
                Ok(())
            } else {
                Err(Error::Parameter(format!("{what} requires Re alpha > 0, got {a}")))
            }
        };
        match self {
            MLParams::One { .. } | MLParams::Two { .. } => Ok(()),
            MLParams::Three { alpha, .. } => pos(*alpha, "Prabhakar function"),
            MLParams::Four { alpha, delta, .. } => {
                pos(*alpha, "four-parameter function")?;
                if nonpositive_integer(*delta).is_some() {
                    return Err(Error::Parameter(format!("(delta)_n vanishes for delta = {delta}")));
                }
                Ok(())
            }
            MLParams::Six { alpha, delta, r, s, .. } => {
                pos(*alpha, "six-parameter function")?;
                if !(*r > 0.0 && *s > 0.0) {
                    return Err(Error::Parameter("r and s must be positive".into()));
                }
                if *s > alpha.re + r + 1e-12 {
                    return Err(Error::Parameter(format!("s = {s} exceeds Re alpha + r = {}", alpha.re + r)));
                }
                if nonpositive_integer(*delta).is_some() {
                    return Err(Error::Parameter(format!("Gamma(delta) has a pole at delta = {delta}")));
                }
                Ok(())
            }
            MLParams::KilbasSaigo { alpha, m, l } => {
                if !(*alpha > 0.0 && *m > 0.0) {
                    return Err(Error::Parameter("Kilbas-Saigo needs alpha > 0 and m > 0".into()));
                }
                let first = alpha * l + 1.0;
                if nonpositive_integer(Complex64::new(first, 0.0)).is_some() {
                    return Err(Error::Parameter(format!("alpha l + 1 = {first} is a pole")));
                }
                Ok(())
            }
            MLParams::MultiIndex { alphas, betas } => {
                if alphas.is_empty() || alphas.len() != betas.len() {
                    return Err(Error::Parameter("multi-index needs matching non-empty lists".into()));
                }
                if alphas.iter().any(|a| !(*a > 0.0)) {
                    return Err(Error::Parameter("multi-index weights must be positive".into()));
                }
                Ok(())
            }
        }
    }

    /// Natural log of the coefficient of `z^n` (`None` when it vanishes).
    pub fn log_coefficient(&self, n: usize) -> Result<Option<Complex64>> {
        let nf = n as f64;
        let lg = log_gamma_unchecked;
        let lower = |x: Complex64| -> Option<Complex64> {
            if nonpositive_integer(x).is_some() {
                None
            } else {
                Some(-lg(x))
            }
        };
        match self {
            MLParams::One { alpha } => Ok(lower(alpha * nf + 1.0)),
            MLParams::Two { alpha, beta } => Ok(lower(alpha * nf + beta)),
            MLParams::Three { alpha, beta, gamma } => {
                let p = match ln_poch(*gamma, nf)? {
                    Some(p) => p,
                    None => return Ok(None),
                };
                Ok(lower(alpha * nf + beta).map(|l| l + p - lg(Complex64::new(nf + 1.0, 0.0))))
            }
            MLParams::Four { alpha, beta, gamma, delta } => {
                let p = match ln_poch(*gamma, nf)? {
                    Some(p) => p,
                    None => return Ok(None),
                };
                let d = ln_poch(*delta, nf)?.ok_or_else(|| Error::Parameter("(delta)_n vanishes".into()))?;
                Ok(lower(alpha * nf + beta).map(|l| l + p - d))
            }
            MLParams::Six { alpha, beta, gamma, delta, r, s } => {
                let p = match ln_poch(*gamma, s * nf)? {
                    Some(p) => p,
                    None => return Ok(None),
                };
                let d = match ln_poch(*delta, r * nf) {
                    Ok(Some(d)) => d,
                    // (delta)_{rn} infinite: the coefficient vanishes.
                    Err(Error::Pole(_)) => return Ok(None),
                    Ok(None) => return Err(Error::Pole(format!("(delta)_(rn) vanishes at n = {n}"))),
                    Err(e) => return Err(e),
                };
                Ok(lower(alpha * nf + beta).map(|l| l + p - d))
            }
            MLParams::KilbasSaigo { alpha, m, l } => {
                let mut acc = Complex64::new(0.0, 0.0);
                for j in 0..n {
                    let jf = j as f64;
                    let num = Complex64::new(alpha * (jf * m + l) + 1.0, 0.0);
                    let den = Complex64::new(alpha * (jf * m + l + 1.0) + 1.0, 0.0);
                    if nonpositive_integer(den).is_some() {
                        return Ok(None);
                    }
                    if let Some(k) = nonpositive_integer(num) {
                        return Err(Error::Pole(format!("Kilbas-Saigo numerator Gamma at {k}")));
                    }
                    acc += lg(num) - lg(den);
                }
                Ok(Some(acc))
            }
            MLParams::MultiIndex { alphas, betas } => {
                let mut acc = Complex64::new(0.0, 0.0);
                for (a, b) in alphas.iter().zip(betas) {
                    match lower(b + a * nf) {
                        Some(l) => acc += l,
                        None => return Ok(None),
                    }
                }
                Ok(Some(acc))
            }
        }
    }
}

/// `ln((x)_q)` with `(x)_q = Gamma(x+q)/Gamma(x)`; `None` when it vanishes.
fn ln_poch(x: Complex64, q: f64) -> Result<Option<Complex64>> {
    if q == 0.0 {
        return Ok(Some(Complex64::new(0.0, 0.0)));
    }
    let top = x + q;
    match (nonpositive_integer(x), nonpositive_integer(top)) {
        (Some(k), _) => {
            let qi = q.round();
            if (q - qi).abs() < 1e-12 {
                if qi as i64 > -k {
                    return Ok(None);
                }
                let mut acc = Complex64::new(0.0, 0.0);
                for j in 0..qi as i64 {
                    acc += (x + j as f64).ln();
                }
                Ok(Some(acc))
            } else {
                Ok(None)
            }
        }
        (None, Some(k)) => Err(Error::Pole(format!("Gamma(x + q) at {k}"))),
        (None, None) => Ok(Some(log_gamma_unchecked(top) - log_gamma_unchecked(x))),
    }
}

/// Integer value of a real `alpha` in `1..=4`, if any.
fn small_integer(alpha: Complex64) -> Option<u32> {
    if alpha.im != 0.0 {
        return None;
    }
    let r = alpha.re.round();
    if (alpha.re - r).abs() == 0.0 && (1.0..=4.0).contains(&r) {
        Some(r as u32)
    } else {
        None
    }
}

fn zero_arg(r: Option<Complex64>) -> EvalResult {
    let v = r.map(|l| l.exp()).unwrap_or_default();
    EvalResult {
        value: v,
        terms_used: 1,
        tail_bound: 0.0,
        status: Status::Converged,
        scaled: crate::sum::Scaled { mantissa: v, log_scale: 0.0 },
    }
}

/// Prabhakar series `sum (gamma)_n z^n / (n! Gamma(alpha n + beta))`; `gamma = None` means 1.
fn prabhakar(alpha: Complex64, beta: Complex64, gamma: Option<Complex64>, z: Complex64, ctl: &SumControl) -> Result<EvalResult> {
    if z.norm() == 0.0 {
        return Ok(zero_arg(Some(-log_gamma_unchecked(beta)).filter(|_| nonpositive_integer(beta).is_none())));
    }
    if alpha == Complex64::new(1.0, 0.0) && z.re < 0.0 {
        let g = gamma.unwrap_or(Complex64::new(1.0, 0.0));
        let mut r = prabhakar(alpha, beta, Some(beta - g), -z, ctl)?;
        r.scaled = r.scaled.times_exp(z);
        r.value = r.scaled.value();
        r.tail_bound *= z.re.exp();
        if r.status == Status::Polynomial {
            r.status = Status::Converged;
        }
        return Ok(r);
    }
    let gamma_end = gamma.and_then(nonpositive_integer).map(|k| (-k) as usize);
    if let Some(m) = small_integer(alpha) {
        if nonpositive_integer(beta).is_none() && z.norm() <= 500.0 {
            let mut t = reciprocal_gamma(beta);
            let mf = m as f64;
            return sum_series(
                |n| {
                    if let Some(e) = gamma_end {
                        if n > e {
                            return Ok(Term::End);
                        }
                    }
                    let out = t;
                    let nf = n as f64;
                    let mut den = Complex64::new(nf + 1.0, 0.0);
                    for k in 0..m {
                        den *= beta + mf * nf + k as f64;
                    }
                    let g = gamma.map(|g| g + nf).unwrap_or(Complex64::new(nf + 1.0, 0.0));
                    t = t * z * g / den;
                    Ok(Term::Value(out))
                },
                ctl,
            );
        }
    }
    let (ln_abs, unit) = polar_split(z);
    sum_series(
        |n| {
            let nf = n as f64;
            if let Some(e) = gamma_end {
                if n > e {
                    return Ok(Term::End);
                }
            }
            let x = alpha * nf + beta;
            if nonpositive_integer(x).is_some() {
                return Ok(Term::Zero);
            }
            let mut l = -log_gamma_unchecked(x);
            if let Some(g) = gamma {
                match ln_poch(g, nf)? {
                    Some(p) => l += p - log_gamma_unchecked(Complex64::new(nf + 1.0, 0.0)),
                    None => return Ok(Term::Zero),
                }
            }
            Ok(power_term(l, ln_abs, unit, n))
        },
        ctl,
    )
}

/// Evaluates a Mittag-Leffler family member at `z` by direct summation.
///
/// `One`/`Two` with `Re alpha < 0` are rejected as divergent; with
/// `Re alpha = 0` the series converges for `|z| < exp(-pi |Im alpha| / 2)`.
pub fn ml_eval(p: &MLParams, z: Complex64, ctl: &SumControl) -> Result<EvalResult> {
    p.validate()?;
    match p {
        MLParams::One { alpha } | MLParams::Two { alpha, .. } => {
            let beta = match p {
                MLParams::Two { beta, .. } => *beta,
                _ => Complex64::new(1.0, 0.0),
            };
            if alpha.re < 0.0 && z.norm() > 0.0 {
                return Err(Error::Divergence(format!("Re alpha = {} < 0", alpha.re)));
            }
            if alpha.re == 0.0 {
                let radius = (-0.5 * PI * alpha.im.abs()).exp();
                if z.norm() >= radius {
                    return Err(Error::Divergence(format!("|z| = {} outside radius {radius}", z.norm())));
                }
            }
            prabhakar(*alpha, beta, None, z, ctl)
        }
        MLParams::Three { alpha, beta, gamma } => prabhakar(*alpha, *beta, Some(*gamma), z, ctl),
        MLParams::Six { alpha, r, s, .. } if (alpha.re + r - s).abs() < 1e-12 => {
            let radius = (r * r.ln() + alpha.re * alpha.re.ln() - s * s.ln()).exp();
            if z.norm() > radius {
                return Err(Error::Divergence(format!("|z| = {} outside radius {radius}", z.norm())));
            }
            generic(p, z, ctl)
        }
        _ => generic(p, z, ctl),
    }
}

fn generic(p: &MLParams, z: Complex64, ctl: &SumControl) -> Result<EvalResult> {
    if z.norm() == 0.0 {
        return Ok(zero_arg(p.log_coefficient(0)?));
    }
    let (ln_abs, unit) = polar_split(z);
    let terminating = matches!(p, MLParams::Three { gamma, .. } | MLParams::Four { gamma, .. } if nonpositive_integer(*gamma).is_some());
    sum_series(
        |n| match p.log_coefficient(n)? {
            Some(l) => Ok(power_term(l, ln_abs, unit, n)),
            None if terminating && n > 0 => Ok(Term::End),
            None => Ok(Term::Zero),
        },
        ctl,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn ctl() -> SumControl {
        SumControl::new(1e-16, 10_000)
    }

    #[test]
    fn exponential_cosh_and_alternating() {
        for z in [c(-10.0), c(3.0), Complex64::new(2.0, -7.0), Complex64::new(0.0, 10.0)] {
            let e = ml_eval(&MLParams::One { alpha: c(1.0) }, z, &ctl()).unwrap().value;
            assert!((e / z.exp() - 1.0).norm() < 1e-12, "z={z}");
            let ch = ml_eval(&MLParams::Two { alpha: c(2.0), beta: c(1.0) }, z, &ctl()).unwrap().value;
            assert!((ch / z.sqrt().cosh() - 1.0).norm() < 1e-13, "z={z}");
        }
    }

    #[test]
    fn prabhakar_polynomial() {
        // E^{-2}_{1,1}(z) = 1 - 2z + z^2/2
        let p = MLParams::Three { alpha: c(1.0), beta: c(1.0), gamma: c(-2.0) };
        let r = ml_eval(&p, c(3.0), &ctl()).unwrap();
        assert_eq!(r.status, Status::Polynomial);
        assert!((r.value.re - (1.0 - 6.0 + 4.5)).abs() < 1e-14);
    }

    #[test]
    fn kilbas_saigo_m1_is_two_parameter() {
        let (a, l) = (0.7, 0.4);
        let ks = ml_eval(&MLParams::KilbasSaigo { alpha: a, m: 1.0, l }, c(1.3), &ctl()).unwrap().value;
        let two = ml_eval(&MLParams::Two { alpha: c(a), beta: c(a * l + 1.0) }, c(1.3), &ctl()).unwrap().value;
        let g = crate::gamma::gamma(c(a * l + 1.0)).unwrap();
        assert!((ks / (g * two) - 1.0).norm() < 1e-13);
    }

    #[test]
    fn pure_imaginary_alpha_radius() {
        let p = MLParams::Two { alpha: Complex64::new(0.0, 1.0), beta: c(1.0) };
        assert!(ml_eval(&p, c(0.1), &ctl()).is_ok());
        assert!(matches!(ml_eval(&p, c(0.3), &ctl()), Err(Error::Divergence(_))));
    }
}
