//! Large-argument and large-parameter expansions.
//!
//! | routine | function | regime |
//! |---------|----------|--------|
//! | [`ml2_asymptotic`] | `E_{alpha,beta}(z)` | `0 < alpha < 2`, large `z` |
//! | [`ml2_asymptotic_large_alpha`] | `E_{alpha,beta}(z)` | `alpha >= 2`, large `z` |
//! | [`ml_negative_alpha`] | `E_{-alpha,beta}(z)` | any `z != 0` |
//! | [`prabhakar_large_beta`] | `Gamma(alpha) E^gamma_{alpha,beta}` | large `beta` |
//! | [`prabhakar_integer_second`] | `E^gamma_{alpha,n}(z)` | integer `n` |
//! | [`multiple_ml_asymptotic`] | `sum z^k / Gamma(alpha k + beta)^mu` | large `z` in a sector |
//!
//! Powers use the principal branch `z^(1/alpha) = exp(log(z) / alpha)` with
//! `arg z` in `(-pi, pi]`. Exponential parts can leave the `f64` range, so
//! each expansion has a `_scaled` form returning [`Scaled`].

use crate::error::{Error, Result};
use crate::gamma::{log_gamma_unchecked, reciprocal_gamma};
use crate::mlfamily::{ml_eval, MLParams};
use crate::sum::{sum_series, Scaled, SumControl, Term};
use num_complex::Complex64;
use std::f64::consts::PI;

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Truncation order and exponential sector for [`ml2_asymptotic`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticConfig {
    /// Number of algebraic terms `m`.
    pub term_count: usize,
    /// The exponential term is kept for `|arg z| <= sector_angle`.
    pub sector_angle: f64,
}

impl AsymptoticConfig {
    /// Midpoint of the admissible sector `(pi alpha / 2, min(pi, pi alpha))`.
    pub fn new(alpha: f64, term_count: usize) -> Result<Self> {
        check_alpha(alpha)?;
        let (lo, hi) = sector_bounds(alpha);
        Ok(AsymptoticConfig { term_count, sector_angle: 0.5 * (lo + hi) })
    }

    /// An explicit sector angle, checked against the admissible range.
    pub fn with_sector(alpha: f64, term_count: usize, sector_angle: f64) -> Result<Self> {
        let cfg = AsymptoticConfig { term_count, sector_angle };
        cfg.validate(alpha)?;
        Ok(cfg)
    }

    /// Checks `pi alpha / 2 < sector_angle < min(pi, pi alpha)`.
    pub fn validate(&self, alpha: f64) -> Result<()> {
        check_alpha(alpha)?;
        let (lo, hi) = sector_bounds(alpha);
        if self.sector_angle > lo && self.sector_angle < hi {
            Ok(())
        } else {
            Err(Error::Sector(format!(
                "sector angle {} outside ({lo}, {hi}) for alpha = {alpha}",
                self.sector_angle
            )))
        }
    }
}

fn sector_bounds(alpha: f64) -> (f64, f64) {
    (0.5 * PI * alpha, PI.min(PI * alpha))
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha < 2.0 {
        Ok(())
    } else {
        Err(Error::Sector(format!("expansion needs 0 < alpha < 2, got {alpha}")))
    }
}

fn nonzero(z: Complex64) -> Result<()> {
    if z.norm() == 0.0 || !z.re.is_finite() || !z.im.is_finite() {
        Err(Error::Domain(format!("expansion needs finite z != 0, got {z}")))
    } else {
        Ok(())
    }
}

/// `-sum_{n=1}^m z^(-n) / Gamma(beta - alpha n)`; pole terms vanish.
fn algebraic_tail(alpha: f64, beta: Complex64, z: Complex64, m: usize) -> Complex64 {
    let inv = z.inv();
    let mut p = c(1.0);
    let mut s = c(0.0);
    for n in 1..=m {
        p *= inv;
        s -= p * reciprocal_gamma(beta - alpha * n as f64);
    }
    s
}

/// Sum of `exp(l_k)` over logarithms, rescaled by the largest real part.
fn sum_logs(logs: &[Complex64]) -> Scaled {
    let Some(top) = logs.iter().map(|l| l.re).reduce(f64::max) else {
        return Scaled::plain(c(0.0));
    };
    let mantissa = logs.iter().map(|l| (l - top).exp()).sum();
    Scaled { mantissa, log_scale: top }
}

/// `log` of `(1/alpha) t^(1 - beta) e^t` with `log t = lt`.
fn exponential_log(alpha: f64, beta: Complex64, lt: Complex64) -> Complex64 {
    -alpha.ln() + (1.0 - beta) * lt + lt.exp()
}

/// Expansion of `E_{alpha,beta}(z)` for `0 < alpha < 2` in scaled form.
pub fn ml2_asymptotic_scaled(alpha: f64, beta: Complex64, z: Complex64, cfg: &AsymptoticConfig) -> Result<Scaled> {
    cfg.validate(alpha)?;
    nonzero(z)?;
    let tail = algebraic_tail(alpha, beta, z, cfg.term_count);
    if z.arg().abs() <= cfg.sector_angle {
        let lt = z.ln() / alpha;
        Ok(Scaled::from_log(exponential_log(alpha, beta, lt)).plus(tail))
    } else {
        Ok(Scaled::plain(tail))
    }
}

/// Expansion of `E_{alpha,beta}(z)` for `0 < alpha < 2`.
///
/// Inside `|arg z| <= sector_angle` the value is
/// `(1/alpha) z^((1-beta)/alpha) exp(z^(1/alpha))` plus the algebraic tail
/// `-sum_{n=1}^m z^(-n) / Gamma(beta - alpha n)`; outside it the tail alone.
pub fn ml2_asymptotic(alpha: f64, beta: Complex64, z: Complex64, cfg: &AsymptoticConfig) -> Result<Complex64> {
    ml2_asymptotic_scaled(alpha, beta, z, cfg).map(|s| s.value())
}

/// Expansion for `alpha >= 2` in scaled form.
pub fn ml2_asymptotic_large_alpha_scaled(alpha: f64, beta: Complex64, z: Complex64, m: usize) -> Result<Scaled> {
    if !(alpha >= 2.0 && alpha.is_finite()) {
        return Err(Error::Parameter(format!("large-alpha expansion needs alpha >= 2, got {alpha}")));
    }
    nonzero(z)?;
    let arg = z.arg();
    let lz = z.ln();
    let reach = (0.75 * alpha / 2.0 + 1.0).ceil() as i64;
    let logs: Vec<Complex64> = (-reach..=reach)
        .filter(|&n| (arg + 2.0 * PI * n as f64).abs() < 0.75 * PI * alpha)
        .map(|n| exponential_log(alpha, beta, (lz + Complex64::new(0.0, 2.0 * PI * n as f64)) / alpha))
        .collect();
    Ok(sum_logs(&logs).plus(algebraic_tail(alpha, beta, z, m)))
}

/// Expansion of `E_{alpha,beta}(z)` for `alpha >= 2`: the exponential terms
/// `(1/alpha) t_n^(1-beta) e^(t_n)` with `t_n = z^(1/alpha) e^(2 pi i n / alpha)`
/// over every integer `n` with `|arg z + 2 pi n| < 3 pi alpha / 4`, plus the
/// algebraic tail of order `m`.
pub fn ml2_asymptotic_large_alpha(alpha: f64, beta: Complex64, z: Complex64, m: usize) -> Result<Complex64> {
    ml2_asymptotic_large_alpha_scaled(alpha, beta, z, m).map(|s| s.value())
}

/// Equivalent forms of `E_{-alpha,beta}(z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NegativeAlphaForm {
    /// `1/Gamma(beta) - E_{alpha,beta}(1/z)`.
    Difference,
    /// `-(1/z) E_{alpha,alpha+beta}(1/z)`.
    Shifted,
    /// `-sum_{n>=1} z^(-n) / Gamma(alpha n + beta)`.
    Series,
}

/// `E_{-alpha,beta}(z)` for `alpha > 0` through the chosen form.
pub fn ml_negative_alpha(alpha: f64, beta: f64, z: Complex64, form: NegativeAlphaForm, ctl: &SumControl) -> Result<Complex64> {
    if !(alpha > 0.0 && alpha.is_finite()) || !beta.is_finite() {
        return Err(Error::Parameter(format!("needs alpha > 0 and finite beta, got ({alpha}, {beta})")));
    }
    if z.norm() == 0.0 {
        return Err(Error::Domain("E_{-alpha,beta} is undefined at z = 0".into()));
    }
    let w = z.inv();
    let ml = |b: f64| ml_eval(&MLParams::Two { alpha: c(alpha), beta: c(b) }, w, ctl).map(|r| r.value);
    match form {
        NegativeAlphaForm::Difference => Ok(reciprocal_gamma(c(beta)) - ml(beta)?),
        NegativeAlphaForm::Shifted => Ok(-w * ml(alpha + beta)?),
        NegativeAlphaForm::Series => {
            let mut p = c(1.0);
            let r = sum_series(
                |k| {
                    p *= w;
                    let g = reciprocal_gamma(c(alpha * (k + 1) as f64 + beta));
                    Ok(if g == c(0.0) { Term::Zero } else { Term::Value(-p * g) })
                },
                ctl,
            )?;
            Ok(r.value)
        }
    }
}

/// Right-hand side `(1 + a (x/alpha)^gamma)^(-beta)` of the large-`beta`
/// formula for `Gamma(alpha) E^gamma_{alpha,beta}(a (alpha x)^gamma)`.
pub fn prabhakar_large_beta(alpha: f64, beta: f64, gamma_: f64, a: f64, x: f64) -> Result<f64> {
    positive(&[("alpha", alpha), ("beta", beta), ("gamma", gamma_)])?;
    if !(a >= 0.0) || !(x >= 0.0) {
        return Err(Error::Parameter(format!("needs a, x >= 0, got ({a}, {x})")));
    }
    Ok((1.0 + a * (x / alpha).powf(gamma_)).powf(-beta))
}

/// Left-hand side `Gamma(alpha) E^gamma_{alpha,beta}(a (alpha x)^gamma)` by
/// direct summation.
pub fn prabhakar_large_beta_lhs(alpha: f64, beta: f64, gamma_: f64, a: f64, x: f64, ctl: &SumControl) -> Result<f64> {
    positive(&[("alpha", alpha), ("beta", beta), ("gamma", gamma_)])?;
    let p = MLParams::Three { alpha: c(alpha), beta: c(beta), gamma: c(gamma_) };
    let z = c(a * (alpha * x).powf(gamma_));
    let e = ml_eval(&p, z, ctl)?;
    Ok(crate::gamma::gamma_re(alpha)? * e.value.re)
}

/// `sum_n (beta)_n / n! u^n`, summed term by term for `|u| < 1`.
pub fn binomial_series(beta: f64, u: f64, ctl: &SumControl) -> Result<f64> {
    if !(u.abs() < 1.0) {
        return Err(Error::Domain(format!("binomial series needs |u| < 1, got {u}")));
    }
    let mut t = 1.0;
    let r = sum_series(
        |n| {
            if n > 0 {
                t *= (beta + n as f64 - 1.0) / n as f64 * u;
            }
            Ok(if t == 0.0 { Term::End } else { Term::Value(c(t)) })
        },
        ctl,
    )?;
    Ok(r.value.re)
}

fn positive(vals: &[(&str, f64)]) -> Result<()> {
    for (name, v) in vals {
        if !(*v > 0.0 && v.is_finite()) {
            return Err(Error::Parameter(format!("{name} must be positive, got {v}")));
        }
    }
    Ok(())
}

/// `E^gamma_{alpha,n}(z) = leading z^p (1 + theta)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrabhakarAsymptotics {
    /// `0` for `n > 0`, `1` for `n = 0`.
    pub offset: u32,
    /// `(gamma)_p / Gamma(alpha p + n)`.
    pub leading: Complex64,
    /// Relative remainder after the leading term.
    pub theta: Complex64,
    /// The function value.
    pub value: Complex64,
}

/// Leading-term split of the Prabhakar function with integer second
/// parameter `n`.
///
/// `gamma = 0` gives the constant `1/Gamma(n)`. `gamma = -m` gives the
/// polynomial `sum_{k<=m} (-1)^k C(m,k) z^k / Gamma(alpha k + n)`. Otherwise
/// `theta = sum_{k>p} (gamma)_k p! / ((gamma)_p k!) Gamma(alpha p + n) /
/// Gamma(alpha k + n) z^(k-p)`.
pub fn prabhakar_integer_second(alpha: f64, n: u32, gamma_: Complex64, z: Complex64, ctl: &SumControl) -> Result<PrabhakarAsymptotics> {
    positive(&[("alpha", alpha)])?;
    let p = u32::from(n == 0);
    let nf = n as f64;
    if gamma_ == c(0.0) {
        let v = reciprocal_gamma(c(nf));
        return Ok(PrabhakarAsymptotics { offset: p, leading: v, theta: c(0.0), value: v });
    }
    let leading = if p == 0 { c(1.0) } else { gamma_ } * reciprocal_gamma(c(alpha * p as f64 + nf));
    if let Some(m) = crate::gamma::nonpositive_integer(gamma_) {
        let m = (-m) as u64;
        let mut value = c(0.0);
        let mut binom = 1.0;
        let mut zk = c(1.0);
        for k in 0..=m {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            value += zk * (sign * binom) * reciprocal_gamma(c(alpha * k as f64 + nf));
            binom *= (m - k) as f64 / (k + 1) as f64;
            zk *= z;
        }
        let lead = leading * z.powu(p);
        let theta = if lead == c(0.0) { c(0.0) } else { value / lead - 1.0 };
        return Ok(PrabhakarAsymptotics { offset: p, leading, theta, value });
    }
    let lg_p = log_gamma_unchecked(c(alpha * p as f64 + nf));
    let mut ratio = c(1.0);
    let r = sum_series(
        |j| {
            let k = p as usize + 1 + j;
            ratio *= (gamma_ + (k - 1) as f64) / k as f64;
            let lg = log_gamma_unchecked(c(alpha * k as f64 + nf));
            Ok(Term::Value(ratio * (lg_p - lg).exp() * z.powu((k - p as usize) as u32)))
        },
        ctl,
    )?;
    let theta = r.value;
    let value = leading * z.powu(p) * (1.0 + theta);
    Ok(PrabhakarAsymptotics { offset: p, leading, theta, value })
}

/// Checks `z` against the sector of the multiple Mittag-Leffler expansion.
///
/// | `alpha mu` | admissible `|arg z|` |
/// |------------|----------------------|
/// | `(0, 2)` | `< alpha mu pi / 2` |
/// | `[2, 4)` | `<= (2 - alpha mu / 2) pi` |
/// | `>= 4` | `0` |
pub fn multiple_ml_sector(mu: f64, alpha: f64, z: Complex64) -> Result<()> {
    let am = alpha * mu;
    let arg = z.arg().abs();
    let ok = if am < 2.0 {
        arg < 0.5 * am * PI
    } else if am < 4.0 {
        arg <= (2.0 - 0.5 * am) * PI
    } else {
        arg == 0.0
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Sector(format!("|arg z| = {arg} outside the sector for alpha mu = {am}")))
    }
}

/// Leading behaviour of `sum_k z^k / Gamma(alpha k + beta)^mu` in scaled form.
pub fn multiple_ml_asymptotic_scaled(mu: f64, alpha: f64, beta: f64, z: Complex64) -> Result<Scaled> {
    positive(&[("mu", mu), ("alpha", alpha), ("beta", beta)])?;
    nonzero(z)?;
    multiple_ml_sector(mu, alpha, z)?;
    let am = alpha * mu;
    let lz = z.ln();
    let l = -alpha.ln() - 0.5 * mu.ln() + 0.5 * (1.0 - mu) * (2.0 * PI).ln()
        + lz * ((mu - 2.0 * beta * mu + 1.0) / (2.0 * am))
        + (lz / am).exp() * mu;
    Ok(Scaled::from_log(l))
}

/// Leading behaviour
/// `(1/(alpha sqrt mu)) (2 pi)^((1-mu)/2) z^((mu - 2 beta mu + 1)/(2 alpha mu)) exp(mu z^(1/(alpha mu)))`.
pub fn multiple_ml_asymptotic(mu: f64, alpha: f64, beta: f64, z: Complex64) -> Result<Complex64> {
    multiple_ml_asymptotic_scaled(mu, alpha, beta, z).map(|s| s.value())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contour::{ml2_hankel, HankelContour};
    use crate::instances::{series_eval, SeriesInstance};
    use crate::quad::{exp_sinh, Tolerance};

    fn tight() -> SumControl {
        SumControl::new(1e-17, 100_000)
    }

    fn ml2(alpha: f64, beta: f64, z: Complex64) -> Complex64 {
        ml_eval(&MLParams::Two { alpha: c(alpha), beta: c(beta) }, z, &tight()).unwrap().value
    }

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn exponential_limit() {
        let cfg = AsymptoticConfig::new(1.0, 8).unwrap();
        let v = ml2_asymptotic(1.0, c(1.0), c(30.0), &cfg).unwrap();
        assert!(rel(v, c(30f64.exp())) < 1e-10);
    }

    #[test]
    fn half_order_both_branches() {
        let cfg = AsymptoticConfig::new(0.5, 6).unwrap();
        let v = ml2_asymptotic(0.5, c(1.0), c(20.0), &cfg).unwrap();
        assert!(rel(v, ml2(0.5, 1.0, c(20.0))) < 1e-6);
        let z = c(-20.0);
        let v = ml2_asymptotic(0.5, c(1.0), z, &cfg).unwrap();
        assert_eq!(v, algebraic_tail(0.5, c(1.0), z, 6));
        // The alternating series cancels from e^400 here, so the loop integral is the oracle.
        let oracle = ml2_hankel(0.5, c(1.0), z, &HankelContour::for_ml2(0.5, z)).unwrap().value;
        assert!(rel(v, oracle) < 1e-4, "{v} {oracle}");
    }

    #[test]
    fn sector_checks() {
        assert!(matches!(AsymptoticConfig::new(2.0, 3), Err(Error::Sector(_))));
        assert!(AsymptoticConfig::with_sector(0.5, 3, 0.5).is_err());
        assert!(AsymptoticConfig::with_sector(0.5, 3, 1.0).is_ok());
        let cfg = AsymptoticConfig::new(0.5, 3).unwrap();
        assert!(matches!(ml2_asymptotic(0.5, c(1.0), c(0.0), &cfg), Err(Error::Domain(_))));
    }

    #[test]
    fn hyperbolic_limits() {
        let x = 10.0;
        let v = ml2_asymptotic_large_alpha(2.0, c(1.0), c(x * x), 6).unwrap();
        assert!(rel(v, c(x.cosh())) < 1e-8);
        let v = ml2_asymptotic_large_alpha(2.0, c(2.0), c(x * x), 6).unwrap();
        assert!(rel(v, c(x.sinh() / x)) < 1e-8);
        let e = ml2_asymptotic_large_alpha(2.0, c(1.5), c(x * x), 0).unwrap();
        assert!(rel(e, c(0.5 * x.powf(-0.5) * x.exp())) < 1e-14);
    }

    #[test]
    fn overflowing_exponential_stays_scaled() {
        let cfg = AsymptoticConfig::new(1.0, 4).unwrap();
        let s = ml2_asymptotic_scaled(1.0, c(1.0), c(1000.0), &cfg).unwrap();
        assert!((s.log_scale - 1000.0).abs() < 1e-12);
        assert!((s.mantissa - 1.0).norm() < 1e-12);
    }

    #[test]
    fn negative_alpha_forms_agree() {
        let ctl = tight();
        for (alpha, beta, z) in [(0.5, 2.0, Complex64::new(3.0, 1.0)), (1.5, 1.0, Complex64::new(-4.0, 0.5))] {
            let a = ml_negative_alpha(alpha, beta, z, NegativeAlphaForm::Difference, &ctl).unwrap();
            let b = ml_negative_alpha(alpha, beta, z, NegativeAlphaForm::Shifted, &ctl).unwrap();
            let s = ml_negative_alpha(alpha, beta, z, NegativeAlphaForm::Series, &ctl).unwrap();
            assert!((a - b).norm() < 1e-11 * b.norm().max(1.0));
            assert!((a - s).norm() < 1e-11 * s.norm().max(1.0));
        }
        // beta = 1: E_{-alpha}(z) = 1 - E_alpha(1/z)
        let z = c(4.0);
        let v = ml_negative_alpha(0.7, 1.0, z, NegativeAlphaForm::Difference, &ctl).unwrap();
        assert!((v - (1.0 - ml2(0.7, 1.0, z.inv()))).norm() < 1e-14);
        assert!(matches!(ml_negative_alpha(0.5, 1.0, c(0.0), NegativeAlphaForm::Series, &ctl), Err(Error::Domain(_))));
    }

    #[test]
    fn large_beta_formula() {
        let ctl = tight();
        assert_eq!(prabhakar_large_beta(1.0, 5.0, 1.0, 0.0, 2.0).unwrap(), 1.0);
        assert!((prabhakar_large_beta_lhs(1.0, 1.0, 1.0, 0.0, 2.0, &ctl).unwrap() - 1.0).abs() < 1e-15);
        // At alpha = beta = gamma = 1 the ratio is e^(ax) (1 + ax), which tends to 1 with ax.
        let gap = |a: f64| {
            let l = prabhakar_large_beta_lhs(1.0, 1.0, 1.0, a, 1.0, &ctl).unwrap();
            (l / prabhakar_large_beta(1.0, 1.0, 1.0, a, 1.0).unwrap() - 1.0).abs()
        };
        assert!(gap(1e-4) < gap(1e-2) && gap(1e-2) < gap(1.0));
        assert!((gap(1e-4) - ((1e-4f64).exp() * (1.0 + 1e-4) - 1.0)).abs() < 1e-14);
        // The (beta)_n sum is the binomial series (1 - u)^(-beta).
        for (beta, u) in [(2.5, 0.3), (7.0, -0.6), (0.4, 0.9)] {
            let s = binomial_series(beta, u, &ctl).unwrap();
            assert!((s / (1.0 - u).powf(-beta) - 1.0).abs() < 1e-13);
        }
        for (beta, u) in [(2.5, 0.3), (0.4, 0.9)] {
            assert!((binomial_series(beta, -u, &ctl).unwrap() / prabhakar_large_beta(1.0, beta, 1.0, u, 1.0).unwrap() - 1.0).abs() < 1e-13);
        }
        assert!(binomial_series(1.0, 1.0, &ctl).is_err());
    }

    #[test]
    fn integer_second_parameter_cases() {
        let ctl = tight();
        let r = prabhakar_integer_second(0.7, 3, c(0.0), c(2.0), &ctl).unwrap();
        assert_eq!(r.value, c(0.5));
        assert_eq!(prabhakar_integer_second(0.7, 0, c(0.0), c(2.0), &ctl).unwrap().value, c(0.0));

        // gamma = -2, alpha = 1, n = 1: 1 - 2 z / 1! + z^2 / 2!
        let z = Complex64::new(1.3, -0.4);
        let r = prabhakar_integer_second(1.0, 1, c(-2.0), z, &ctl).unwrap();
        let direct = ml_eval(&MLParams::Three { alpha: c(1.0), beta: c(1.0), gamma: c(-2.0) }, z, &ctl).unwrap().value;
        assert!((r.value - direct).norm() < 1e-14);
        assert!((r.value - (1.0 - 2.0 * z + z * z / 2.0)).norm() < 1e-14);

        for (alpha, n, g) in [(0.8, 2u32, 1.5), (1.3, 0, 2.2)] {
            let z = Complex64::new(1.1, 0.6);
            let r = prabhakar_integer_second(alpha, n, c(g), z, &ctl).unwrap();
            let direct = ml_eval(&MLParams::Three { alpha: c(alpha), beta: c(n as f64), gamma: c(g) }, z, &ctl).unwrap().value;
            assert!(rel(r.value, direct) < 1e-13);
            assert_eq!(r.offset, u32::from(n == 0));
        }
    }

    #[test]
    fn theta_decreases_with_n() {
        let ctl = tight();
        let thetas: Vec<f64> = [4u32, 8, 16, 32]
            .iter()
            .map(|&n| prabhakar_integer_second(1.0, n, c(1.5), c(2.0), &ctl).unwrap().theta.norm())
            .collect();
        assert!(thetas.windows(2).all(|w| w[1] < w[0]), "{thetas:?}");
    }

    #[test]
    fn multiple_ml_leading_terms() {
        let v = multiple_ml_asymptotic(1.0, 1.0, 1.0, c(12.0)).unwrap();
        assert!(rel(v, c(12f64.exp())) < 1e-14);
        let inst = SeriesInstance::MultipleML { alpha: 1.0, beta: c(1.0), mu: 2.0 };
        let s = series_eval(&inst, c(40.0), &tight()).unwrap().value;
        let ratio = (s / multiple_ml_asymptotic(2.0, 1.0, 1.0, c(40.0)).unwrap()).re;
        // Here F is I_0(2 sqrt z), whose first correction 1/(16 sqrt z) puts the ratio at 1.0104.
        assert!((0.99..=1.0105).contains(&ratio), "{ratio}");
        let x = 2.0 * 40f64.sqrt();
        let corrected = ratio / (1.0 + 1.0 / (8.0 * x) + 9.0 / (128.0 * x * x));
        assert!((corrected - 1.0).abs() < 1e-4, "{corrected}");
        assert!(matches!(multiple_ml_asymptotic(1.0, 1.0, 1.0, c(-40.0)), Err(Error::Sector(_))));
        assert!(multiple_ml_asymptotic(1.0, 1.0, 1.0, Complex64::new(-1.0, 1.0)).is_err());
        assert!(multiple_ml_asymptotic(2.2, 1.0, 1.0, Complex64::new(-1.0, 1.0)).is_ok());
        assert!(multiple_ml_asymptotic(5.0, 1.0, 1.0, Complex64::new(1.0, 1e-3)).is_err());
    }

    #[test]
    fn laplace_relation_between_orders() {
        // int_0^inf e^(-t/z) F^(2)(t) dt = z F^(1)(z) at z = 2
        let z = 2.0;
        let f2 = SeriesInstance::MultipleML { alpha: 1.0, beta: c(1.0), mu: 2.0 };
        let f1 = SeriesInstance::MultipleML { alpha: 1.0, beta: c(1.0), mu: 1.0 };
        let ctl = SumControl::new(1e-16, 100_000);
        let lhs = exp_sinh(
            |t, _| series_eval(&f2, c(t), &ctl).map(|r| r.value).unwrap_or(c(f64::NAN)) * (-t / z).exp(),
            0.0,
            400.0,
            Tolerance::new(1e-12, 0.0),
        )
        .unwrap();
        let rhs = z * series_eval(&f1, c(z), &ctl).unwrap().value;
        assert!(rel(lhs.value, rhs) < 1e-10, "{}", rel(lhs.value, rhs));
    }
}
