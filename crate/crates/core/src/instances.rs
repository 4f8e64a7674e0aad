//! Generalized Mittag-Leffler type series and their Fox-Wright reductions.
//!
//! | instance | series |
//! |----------|--------|
//! | `MSeries` | `sum prod (a_i)_n / prod (b_j)_n * z^n / Gamma(alpha n + beta)` |
//! | `KFunction` | `sum prod (a_i)_n (gamma)_n / (prod (b_j)_n n!) * z^n / Gamma(alpha n + beta)` |
//! | `WrightPhi` | `sum z^n / (n! Gamma(alpha n + beta))` |
//! | `BesselWright` | `sum (-z)^n / (n! Gamma(rho + mu n + 1))` |
//! | `LommelWright` | `sum (-1)^n (z/2)^(rho+2 lambda+2n) / (Gamma(lambda+n+1)^nu Gamma(rho+lambda+mu n+1))` |
//! | `MultipleML` | `sum z^n / Gamma(alpha n + beta)^mu` |
//!
//! [`reduce_to_fox_wright`] rewrites each instance as a [`FoxWrightSpec`];
//! [`hypergeometric_reduction_check`] rewrites a unit-weight spec as a
//! generalized hypergeometric function, summed by [`pfq_eval`] through its
//! own ratio recurrence.

use crate::error::{Error, Result};
use crate::foxwright::{ArgumentMap, FoxWrightSpec};
use crate::gamma::{gamma, log_gamma_unchecked, nonpositive_integer, reciprocal_gamma};
use crate::mlfamily::MLParams;
use crate::params::{classify_convergence, ConvergenceClass};
use crate::sum::{polar_split, power_term, sum_series, EvalResult, Status, SumControl, Term};
use num_complex::Complex64;

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

/// A generalized Mittag-Leffler type series.
#[derive(Debug, Clone, PartialEq)]
pub enum SeriesInstance {
    MSeries { a: Vec<Complex64>, b: Vec<Complex64>, alpha: f64, beta: Complex64 },
    KFunction { a: Vec<Complex64>, b: Vec<Complex64>, alpha: f64, beta: Complex64, gamma: Complex64 },
    WrightPhi { alpha: f64, beta: Complex64 },
    BesselWright { rho: Complex64, mu: f64 },
    LommelWright { rho: Complex64, lambda: Complex64, mu: f64, nu: f64 },
    MultipleML { alpha: f64, beta: Complex64, mu: f64 },
}

impl SeriesInstance {
    /// Short identifier of the instance.
    pub fn name(&self) -> &'static str {
        match self {
            SeriesInstance::MSeries { .. } => "mseries",
            SeriesInstance::KFunction { .. } => "kfunction",
            SeriesInstance::WrightPhi { .. } => "wright",
            SeriesInstance::BesselWright { .. } => "bessel-wright",
            SeriesInstance::LommelWright { .. } => "lommel-wright",
            SeriesInstance::MultipleML { .. } => "multiple-ml",
        }
    }

    /// Checks the structural constraints of the instance.
    pub fn validate(&self) -> Result<()> {
        match self {
            SeriesInstance::MSeries { b, alpha, .. } | SeriesInstance::KFunction { b, alpha, .. } => {
                if !(*alpha > 0.0) {
                    return Err(Error::Parameter(format!("alpha must be positive, got {alpha}")));
                }
                if let Some(bad) = b.iter().find(|x| nonpositive_integer(**x).is_some()) {
                    return Err(Error::Parameter(format!("(b)_n vanishes for b = {bad}")));
                }
                Ok(())
            }
            SeriesInstance::WrightPhi { alpha, .. } => {
                if *alpha <= -1.0 {
                    return Err(Error::Parameter(format!("Wright function needs alpha > -1, got {alpha}")));
                }
                Ok(())
            }
            SeriesInstance::BesselWright { mu, .. } => {
                if *mu <= -1.0 {
                    return Err(Error::Parameter(format!("Bessel-Wright function needs mu > -1, got {mu}")));
                }
                Ok(())
            }
            SeriesInstance::LommelWright { mu, nu, .. } => {
                if !(*mu > 0.0 && *nu > 0.0) {
                    return Err(Error::Parameter("Lommel-Wright needs mu > 0 and nu > 0".into()));
                }
                Ok(())
            }
            SeriesInstance::MultipleML { alpha, mu, .. } => {
                if !(*alpha > 0.0 && *mu > 0.0) {
                    return Err(Error::Parameter("multiple Mittag-Leffler needs alpha > 0 and mu > 0".into()));
                }
                Ok(())
            }
        }
    }

    /// Natural log of the coefficient of the `n`-th term in the series variable
    /// (`z` for most instances, `-z^2/4` after the outer power for Lommel-Wright,
    /// `-z` for Bessel-Wright). `None` when the coefficient vanishes.
    pub fn log_coefficient(&self, n: usize) -> Result<Option<Complex64>> {
        let nf = n as f64;
        let lg = log_gamma_unchecked;
        let inv = |x: Complex64| if nonpositive_integer(x).is_some() { None } else { Some(-lg(x)) };
        let fact = lg(Complex64::new(nf + 1.0, 0.0));
        match self {
            SeriesInstance::MSeries { a, b, alpha, beta } => {
                let p = match pochhammer_log_ratio(a, b, n)? {
                    Some(p) => p,
                    None => return Ok(None),
                };
                Ok(inv(beta + alpha * nf).map(|l| l + p))
            }
            SeriesInstance::KFunction { a, b, alpha, beta, gamma } => {
                let mut up = a.clone();
                up.push(*gamma);
                let p = match pochhammer_log_ratio(&up, b, n)? {
                    Some(p) => p,
                    None => return Ok(None),
                };
                Ok(inv(beta + alpha * nf).map(|l| l + p - fact))
            }
            SeriesInstance::WrightPhi { alpha, beta } => Ok(inv(beta + alpha * nf).map(|l| l - fact)),
            SeriesInstance::BesselWright { rho, mu } => Ok(inv(rho + mu * nf + 1.0).map(|l| l - fact)),
            SeriesInstance::LommelWright { rho, lambda, mu, nu } => {
                let g1 = lambda + nf + 1.0;
                let g2 = rho + lambda + mu * nf + 1.0;
                match (inv(g1), inv(g2)) {
                    (Some(l1), Some(l2)) => Ok(Some(l1 * *nu + l2)),
                    _ => Ok(None),
                }
            }
            SeriesInstance::MultipleML { alpha, beta, mu } => Ok(inv(beta + alpha * nf).map(|l| l * *mu)),
        }
    }

    /// Fox-Wright lists used for convergence classification (no outer factors).
    fn convergence_spec(&self) -> FoxWrightSpec {
        match self {
            SeriesInstance::MSeries { a, b, alpha, beta } => {
                let mut up: Vec<_> = a.iter().map(|x| (*x, 1.0)).collect();
                up.push((one(), 1.0));
                let mut lo: Vec<_> = b.iter().map(|x| (*x, 1.0)).collect();
                lo.push((*beta, *alpha));
                FoxWrightSpec::new(up, lo)
            }
            SeriesInstance::KFunction { a, b, alpha, beta, gamma } => {
                let mut up: Vec<_> = a.iter().map(|x| (*x, 1.0)).collect();
                up.push((*gamma, 1.0));
                up.push((one(), 1.0));
                let mut lo: Vec<_> = b.iter().map(|x| (*x, 1.0)).collect();
                lo.push((one(), 1.0));
                lo.push((*beta, *alpha));
                FoxWrightSpec::new(up, lo)
            }
            _ => FoxWrightSpec::new(vec![(one(), 1.0)], vec![(one(), 1.0)]),
        }
    }

    /// True when an upper Pochhammer parameter truncates the series.
    fn terminates(&self) -> bool {
        match self {
            SeriesInstance::MSeries { a, .. } => a.iter().any(|x| nonpositive_integer(*x).is_some()),
            SeriesInstance::KFunction { a, gamma, .. } => {
                a.iter().chain(std::iter::once(gamma)).any(|x| nonpositive_integer(*x).is_some())
            }
            _ => false,
        }
    }
}

/// `ln(prod (a_i)_n / prod (b_j)_n)`; `None` when an upper symbol vanishes.
fn pochhammer_log_ratio(a: &[Complex64], b: &[Complex64], n: usize) -> Result<Option<Complex64>> {
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..n {
        let kf = k as f64;
        for x in a {
            let f = x + kf;
            if f.norm() == 0.0 {
                return Ok(None);
            }
            acc += f.ln();
        }
        for x in b {
            let f = x + kf;
            if f.norm() == 0.0 {
                return Err(Error::Parameter(format!("(b)_n vanishes for b = {x}")));
            }
            acc -= f.ln();
        }
    }
    Ok(Some(acc))
}

/// Evaluates an instance at `z` by direct summation.
pub fn series_eval(inst: &SeriesInstance, z: Complex64, ctl: &SumControl) -> Result<EvalResult> {
    inst.validate()?;
    let mut ctl = *ctl;
    let (w, outer) = match inst {
        SeriesInstance::BesselWright { .. } => (-z, None),
        SeriesInstance::LommelWright { rho, lambda, .. } => {
            let e = rho + 2.0 * lambda;
            let lo = if z.norm() == 0.0 { None } else { Some(e * (z / 2.0).ln()) };
            (-z * z / 4.0, lo.or(Some(Complex64::new(f64::NEG_INFINITY, 0.0))))
        }
        _ => (z, None),
    };
    if matches!(inst, SeriesInstance::MSeries { .. } | SeriesInstance::KFunction { .. }) && !inst.terminates() {
        let report = classify_convergence(&inst.convergence_spec())?;
        match report.class {
            ConvergenceClass::Entire => {}
            ConvergenceClass::Divergent => {
                if w.norm() > 0.0 {
                    return Err(Error::Divergence("series diverges for every z != 0".into()));
                }
            }
            ConvergenceClass::Disk { radius, boundary_convergent } => {
                let r = w.norm();
                if r > radius * (1.0 + 1e-12) {
                    return Err(Error::Divergence(format!("|z| = {r} exceeds radius {radius}")));
                }
                if r >= radius * (1.0 - 1e-12) {
                    if !boundary_convergent && report.mu.re <= -0.5 {
                        return Err(Error::Divergence(format!("divergent on the boundary, Re mu = {}", report.mu.re)));
                    }
                    ctl.conditional = true;
                }
            }
        }
    }
    let terminates = inst.terminates();
    let lw = if w.norm() == 0.0 { None } else { Some(polar_split(w)) };
    let mut res = sum_series(
        |n| {
            let lc = match inst.log_coefficient(n)? {
                Some(l) => l,
                None if terminates && n > 0 => return Ok(Term::End),
                None => return Ok(Term::Zero),
            };
            match lw {
                Some((ln_abs, unit)) => Ok(power_term(lc, ln_abs, unit, n)),
                None => Ok(if n == 0 { Term::Log(lc) } else { Term::End }),
            }
        },
        &ctl,
    )?;
    if lw.is_none() && res.status == Status::Polynomial {
        res.status = Status::Converged;
    }
    if let Some(lo) = outer {
        res.scaled = res.scaled.times_exp(lo);
        res.value = res.scaled.value();
        res.tail_bound *= lo.re.exp();
    }
    Ok(res)
}

/// Rewrites a Mittag-Leffler family member as a Fox-Wright spec.
///
/// The Salim, six-parameter and Kilbas-Saigo members have no such rewrite
/// here and fail with [`Error::UnsupportedReduction`].
pub fn reduce_ml_to_fox_wright(p: &MLParams) -> Result<FoxWrightSpec> {
    p.validate()?;
    let real = |a: Complex64| -> Result<f64> {
        if a.im != 0.0 || a.re <= 0.0 {
            return Err(Error::UnsupportedReduction(format!("weight {a} is not a positive real")));
        }
        Ok(a.re)
    };
    match p {
        MLParams::One { alpha } => Ok(FoxWrightSpec::new(vec![(one(), 1.0)], vec![(one(), real(*alpha)?)])),
        MLParams::Two { alpha, beta } => Ok(FoxWrightSpec::new(vec![(one(), 1.0)], vec![(*beta, real(*alpha)?)])),
        MLParams::Three { alpha, beta, gamma } => {
            if nonpositive_integer(*gamma).is_some() {
                return Err(Error::UnsupportedReduction("Gamma(gamma) has a pole".into()));
            }
            Ok(FoxWrightSpec::new(vec![(*gamma, 1.0)], vec![(*beta, real(*alpha)?)])
                .with_prefactor(reciprocal_gamma(*gamma)))
        }
        MLParams::MultiIndex { alphas, betas } => Ok(FoxWrightSpec::new(
            vec![(one(), 1.0)],
            alphas.iter().zip(betas).map(|(a, b)| (*b, *a)).collect(),
        )),
        other => Err(Error::UnsupportedReduction(format!("{} has no Fox-Wright rewrite", other.name()))),
    }
}

/// `prod Gamma(b_j) / prod Gamma(a_i)`, rejecting poles of `Gamma(a_i)`.
fn gamma_ratio(a: &[Complex64], b: &[Complex64]) -> Result<Complex64> {
    let mut f = one();
    for x in a {
        if nonpositive_integer(*x).is_some() {
            return Err(Error::Parameter(format!("Gamma({x}) has a pole")));
        }
        f *= reciprocal_gamma(*x);
    }
    for x in b {
        f *= gamma(*x)?;
    }
    Ok(f)
}

/// Rewrites an instance as a Fox-Wright spec whose value equals the series.
pub fn reduce_to_fox_wright(inst: &SeriesInstance) -> Result<FoxWrightSpec> {
    inst.validate()?;
    match inst {
        SeriesInstance::MSeries { a, b, .. } => {
            let f = gamma_ratio(a, b)?;
            Ok(inst.convergence_spec().with_prefactor(f))
        }
        SeriesInstance::KFunction { a, b, gamma: g, .. } => {
            if nonpositive_integer(*g).is_some() {
                return Err(Error::Parameter("Gamma(gamma) has a pole".into()));
            }
            let f = gamma_ratio(a, b)? * reciprocal_gamma(*g);
            Ok(inst.convergence_spec().with_prefactor(f))
        }
        SeriesInstance::WrightPhi { alpha, beta } => {
            if *alpha <= 0.0 {
                return Err(Error::UnsupportedReduction("Wright function with alpha <= 0".into()));
            }
            Ok(FoxWrightSpec::new(vec![], vec![(*beta, *alpha)]))
        }
        SeriesInstance::BesselWright { rho, mu } => {
            if *mu <= 0.0 {
                return Err(Error::UnsupportedReduction("Bessel-Wright with mu <= 0".into()));
            }
            Ok(FoxWrightSpec::new(vec![], vec![(rho + 1.0, *mu)])
                .with_argument(ArgumentMap::power(Complex64::new(-1.0, 0.0), 1.0)))
        }
        SeriesInstance::LommelWright { rho, lambda, mu, nu } => {
            let k = nu.round();
            if (nu - k).abs() > 1e-12 || k < 1.0 {
                return Err(Error::UnsupportedReduction(format!("Lommel-Wright needs integer nu, got {nu}")));
            }
            let mut lo = vec![(lambda + 1.0, 1.0); k as usize];
            lo.push((rho + lambda + 1.0, *mu));
            let e = rho + 2.0 * lambda;
            let mut spec = FoxWrightSpec::new(vec![(one(), 1.0)], lo)
                .with_prefactor(Complex64::new(2.0, 0.0).powc(-e))
                .with_argument(ArgumentMap::power(Complex64::new(-0.25, 0.0), 2.0));
            spec.z_exponent = e;
            Ok(spec)
        }
        SeriesInstance::MultipleML { alpha, beta, mu } => {
            let k = mu.round();
            if (mu - k).abs() > 1e-12 || k < 1.0 {
                return Err(Error::UnsupportedReduction(format!("multiple Mittag-Leffler needs integer mu, got {mu}")));
            }
            Ok(FoxWrightSpec::new(vec![(one(), 1.0)], vec![(*beta, *alpha); k as usize]))
        }
    }
}

/// A generalized hypergeometric function `prefactor * pFq(upper; lower; c w)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PfqForm {
    pub upper: Vec<Complex64>,
    pub lower: Vec<Complex64>,
    pub prefactor: Complex64,
}

/// Rewrites a unit-weight Fox-Wright spec as `Gamma(a)/Gamma(b) * pFq`.
///
/// The outer factors of `spec` (prefactor, normalization) are folded into the
/// returned prefactor; the argument map is left to the caller.
pub fn hypergeometric_reduction_check(spec: &FoxWrightSpec) -> Result<PfqForm> {
    if spec.upper.iter().chain(spec.lower.iter()).any(|p| p.1 != 1.0) {
        return Err(Error::UnsupportedReduction("not every weight equals 1".into()));
    }
    let upper: Vec<Complex64> = spec.upper.iter().map(|p| p.0).collect();
    let lower: Vec<Complex64> = spec.lower.iter().map(|p| p.0).collect();
    let mut f = spec.prefactor;
    if !spec.normalized {
        for a in &upper {
            f *= gamma(*a)?;
        }
        for b in &lower {
            f *= reciprocal_gamma(*b);
        }
    }
    Ok(PfqForm { upper, lower, prefactor: f })
}

/// `pFq(a; b; z)` summed with its term ratio recurrence.
///
/// A lower parameter on a non-positive integer is accepted when an upper one
/// truncates the series first; the normalized limit `pFq / Gamma(b)` is not
/// computed here.
pub fn pfq_eval(a: &[Complex64], b: &[Complex64], z: Complex64, ctl: &SumControl) -> Result<EvalResult> {
    let term_end = a.iter().filter_map(|x| nonpositive_integer(*x)).map(|k| (-k) as usize).min();
    for x in b {
        if let Some(k) = nonpositive_integer(*x) {
            if term_end.map_or(true, |e| e >= (-k) as usize) {
                return Err(Error::Parameter(format!("lower parameter {x} is a pole")));
            }
        }
    }
    if term_end.is_none() {
        let (p, q) = (a.len(), b.len());
        if p > q + 1 && z.norm() > 0.0 {
            return Err(Error::Divergence(format!("{p}F{q} diverges for z != 0")));
        }
        if p == q + 1 && z.norm() >= 1.0 {
            return Err(Error::Divergence(format!("|z| = {} outside the unit disk", z.norm())));
        }
    }
    let mut t = one();
    sum_series(
        |n| {
            if let Some(e) = term_end {
                if n > e {
                    return Ok(Term::End);
                }
            }
            let out = t;
            let nf = n as f64;
            let mut r = z / (nf + 1.0);
            for x in a {
                r *= x + nf;
            }
            for x in b {
                r /= x + nf;
            }
            t *= r;
            Ok(Term::Value(out))
        },
        ctl,
    )
}

impl PfqForm {
    /// `prefactor * pFq(upper; lower; w)`.
    pub fn eval(&self, w: Complex64, ctl: &SumControl) -> Result<Complex64> {
        Ok(self.prefactor * pfq_eval(&self.upper, &self.lower, w, ctl)?.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foxwright::fox_wright_eval;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn ctl() -> SumControl {
        SumControl::new(1e-16, 10_000)
    }

    #[test]
    fn mseries_matches_its_fox_wright_form() {
        let inst = SeriesInstance::MSeries { a: vec![c(0.7), c(1.3)], b: vec![c(2.1)], alpha: 1.4, beta: c(0.9) };
        let spec = reduce_to_fox_wright(&inst).unwrap();
        for z in [c(0.3), Complex64::new(-0.5, 0.4)] {
            let d = series_eval(&inst, z, &ctl()).unwrap().value;
            let f = fox_wright_eval(&spec, z, &ctl()).unwrap().value;
            assert!((d / f - 1.0).norm() < 1e-12);
        }
    }

    #[test]
    fn bessel_relation() {
        // phi(1, nu+1; -z^2/4) = (2/z)^nu J_nu(z); with nu = 1/2, J = sqrt(2/(pi z)) sin z.
        let z = 1.7f64;
        let phi = series_eval(&SeriesInstance::WrightPhi { alpha: 1.0, beta: c(1.5) }, c(-z * z / 4.0), &ctl()).unwrap();
        let j = (2.0 / (std::f64::consts::PI * z)).sqrt() * z.sin();
        assert!((phi.value.re - (2.0 / z).sqrt() * j).abs() < 1e-14);
    }

    #[test]
    fn kummer_form() {
        let inst = SeriesInstance::MSeries { a: vec![c(0.6)], b: vec![c(1.7)], alpha: 1.0, beta: c(1.2) };
        let spec = reduce_to_fox_wright(&inst).unwrap();
        let pf = hypergeometric_reduction_check(&spec).unwrap();
        let z = c(0.45);
        let via_pfq = pf.eval(z, &ctl()).unwrap();
        let direct = series_eval(&inst, z, &ctl()).unwrap().value;
        assert!((via_pfq / direct - 1.0).norm() < 1e-13);
        // Independent check: prefactor is 1 / Gamma(beta).
        assert!((pf.prefactor - reciprocal_gamma(c(1.2))).norm() < 1e-14);
    }

    #[test]
    fn lommel_wright_outer_power() {
        let inst = SeriesInstance::LommelWright { rho: c(0.5), lambda: c(0.25), mu: 1.5, nu: 2.0 };
        let spec = reduce_to_fox_wright(&inst).unwrap();
        let z = c(1.3);
        let d = series_eval(&inst, z, &ctl()).unwrap().value;
        let f = fox_wright_eval(&spec, z, &ctl()).unwrap().value;
        assert!((d / f - 1.0).norm() < 1e-13);
    }

    #[test]
    fn unsupported_members() {
        let p = MLParams::KilbasSaigo { alpha: 1.0, m: 1.0, l: 0.0 };
        assert!(matches!(reduce_ml_to_fox_wright(&p), Err(Error::UnsupportedReduction(_))));
    }
}
