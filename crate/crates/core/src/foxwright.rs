//! Fox-Wright function `pPsi_q` and its normalized variant.
//!
//! ```text
//! psi(z) = sum_n prod_i Gamma(a_i + alpha_i n) / prod_j Gamma(b_j + beta_j n) * z^n / n!
//! ```
//!
//! A [`FoxWrightSpec`] also carries the outer data produced by reductions: a
//! scalar prefactor, a power `z^e` and the map from the caller's variable to
//! the series argument, `w = c * z^mu` or `w = c * z^(-mu)`.

use crate::error::{Error, Result};
use crate::gamma::{log_gamma_unchecked, nonpositive_integer, reciprocal_gamma};
use crate::params::{classify_convergence, ConvergenceClass};
use crate::sum::{polar_split, power_term, sum_series, EvalResult, SumControl, Term};
use num_complex::Complex64;

/// A gamma parameter pair `(a, alpha)` standing for `Gamma(a + alpha n)`.
pub type GammaPair = (Complex64, f64);

/// Map from the caller's variable `z` to the series argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArgumentMap {
    /// Coefficient `c`.
    pub scale: Complex64,
    /// Power `mu > 0`.
    pub power: f64,
    /// Use `z^(-mu)` instead of `z^mu`.
    pub inverse: bool,
}

impl ArgumentMap {
    /// The identity map `w = z`.
    pub fn identity() -> Self {
        ArgumentMap { scale: Complex64::new(1.0, 0.0), power: 1.0, inverse: false }
    }

    /// `w = c z^mu`.
    pub fn power(scale: Complex64, power: f64) -> Self {
        ArgumentMap { scale, power, inverse: false }
    }

    /// Applies the map.
    pub fn apply(&self, z: Complex64) -> Complex64 {
        let p = if self.inverse { -self.power } else { self.power };
        if p == 1.0 {
            self.scale * z
        } else {
            self.scale * z.powf(p)
        }
    }
}

/// Parameters of a Fox-Wright function together with its outer factors.
#[derive(Debug, Clone, PartialEq)]
pub struct FoxWrightSpec {
    pub upper: Vec<GammaPair>,
    pub lower: Vec<GammaPair>,
    /// Evaluate `psi*`, i.e. multiply by `prod Gamma(b_j) / prod Gamma(a_i)`.
    pub normalized: bool,
    pub prefactor: Complex64,
    pub z_exponent: Complex64,
    pub argument: ArgumentMap,
}

impl FoxWrightSpec {
    /// Plain `pPsi_q` with unit prefactor and identity argument.
    pub fn new(upper: Vec<GammaPair>, lower: Vec<GammaPair>) -> Self {
        FoxWrightSpec {
            upper,
            lower,
            normalized: false,
            prefactor: Complex64::new(1.0, 0.0),
            z_exponent: Complex64::new(0.0, 0.0),
            argument: ArgumentMap::identity(),
        }
    }

    /// Sets the scalar prefactor.
    pub fn with_prefactor(mut self, p: Complex64) -> Self {
        self.prefactor = p;
        self
    }

    /// Sets the argument map.
    pub fn with_argument(mut self, a: ArgumentMap) -> Self {
        self.argument = a;
        self
    }

    /// Checks the weight and normalization invariants.
    pub fn validate(&self) -> Result<()> {
        for &(_, w) in self.upper.iter().chain(self.lower.iter()) {
            if !(w > 0.0) || !w.is_finite() {
                return Err(Error::Parameter(format!("Fox-Wright weights must be positive, got {w}")));
            }
        }
        if self.normalized {
            for &(a, _) in &self.upper {
                if nonpositive_integer(a).is_some() {
                    return Err(Error::Parameter(format!("normalized form needs finite Gamma({a})")));
                }
            }
        }
        if !(self.argument.power > 0.0) {
            return Err(Error::Parameter("argument power must be positive".into()));
        }
        Ok(())
    }

    /// `prod Gamma(b_j) / prod Gamma(a_i)`, the normalization factor of `psi*`.
    pub fn normalization(&self) -> Result<Complex64> {
        let mut f = Complex64::new(1.0, 0.0);
        for &(a, _) in &self.upper {
            f *= reciprocal_gamma(a);
        }
        for &(b, _) in &self.lower {
            f *= crate::gamma::gamma(b)?;
        }
        Ok(f)
    }

    /// Natural log of the `n`-th series coefficient, `None` when it vanishes.
    ///
    /// Fails with [`Error::Pole`] when an upper gamma factor sits on a pole.
    pub fn log_coefficient(&self, n: usize) -> Result<Option<Complex64>> {
        let nf = n as f64;
        let mut l = -log_gamma_unchecked(Complex64::new(nf + 1.0, 0.0));
        for &(a, w) in &self.upper {
            let x = a + w * nf;
            if let Some(k) = nonpositive_integer(x) {
                return Err(Error::Pole(format!("upper Gamma at {k} (n = {n})")));
            }
            l += log_gamma_unchecked(x);
        }
        for &(b, w) in &self.lower {
            let x = b + w * nf;
            if nonpositive_integer(x).is_some() {
                return Ok(None);
            }
            l -= log_gamma_unchecked(x);
        }
        Ok(Some(l))
    }

    /// The `n`-th series coefficient, without prefactor or normalization.
    pub fn coefficient(&self, n: usize) -> Result<Complex64> {
        Ok(self.log_coefficient(n)?.map(|l| l.exp()).unwrap_or_default())
    }

    /// Multiset of upper pairs, canonically sorted.
    pub fn canonical_upper(&self) -> Vec<GammaPair> {
        canonical(&self.upper)
    }

    /// Multiset of lower pairs, canonically sorted.
    pub fn canonical_lower(&self) -> Vec<GammaPair> {
        canonical(&self.lower)
    }
}

fn canonical(v: &[GammaPair]) -> Vec<GammaPair> {
    let mut out = v.to_vec();
    out.sort_by(|x, y| {
        x.1.total_cmp(&y.1)
            .then(x.0.re.total_cmp(&y.0.re))
            .then(x.0.im.total_cmp(&y.0.im))
    });
    out
}

/// True when two pair multisets agree within `tol` after canonical sorting.
pub fn multiset_eq(a: &[GammaPair], b: &[GammaPair], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut rest: Vec<GammaPair> = b.to_vec();
    for x in a {
        match rest
            .iter()
            .position(|y| (x.0 - y.0).norm() <= tol && (x.1 - y.1).abs() <= tol)
        {
            Some(i) => {
                rest.swap_remove(i);
            }
            None => return false,
        }
    }
    true
}

/// Evaluates `spec` at the caller's variable `z`.
///
/// The result is `prefactor * z^e * psi(w)` (times the normalization when
/// requested), where `w` is the image of `z` under the argument map. The
/// [`EvalResult`] scaled value carries the same quantity.
pub fn fox_wright_eval(spec: &FoxWrightSpec, z: Complex64, ctl: &SumControl) -> Result<EvalResult> {
    spec.validate()?;
    let w = spec.argument.apply(z);
    let report = classify_convergence(spec)?;
    let mut ctl = *ctl;
    match report.class {
        ConvergenceClass::Entire => {}
        ConvergenceClass::Divergent => {
            if w.norm() > 0.0 {
                return Err(Error::Divergence(format!(
                    "Fox-Wright series with Delta = {} diverges for every w != 0",
                    report.delta_cap
                )));
            }
        }
        ConvergenceClass::Disk { radius, boundary_convergent } => {
            let r = w.norm();
            if r > radius * (1.0 + 1e-12) {
                return Err(Error::Divergence(format!("|w| = {r} exceeds radius {radius}")));
            }
            if r >= radius * (1.0 - 1e-12) {
                if !boundary_convergent && report.mu.re <= -0.5 {
                    return Err(Error::Divergence(format!("boundary point |w| = {r} with Re mu = {}", report.mu.re)));
                }
                ctl.conditional = true;
            }
        }
    }
    let lw = if w.norm() == 0.0 { None } else { Some(polar_split(w)) };
    let mut res = sum_series(
        |n| {
            let lc = match spec.log_coefficient(n)? {
                Some(l) => l,
                None => return Ok(Term::Zero),
            };
            match lw {
                Some((ln_abs, unit)) => Ok(power_term(lc, ln_abs, unit, n)),
                None => Ok(if n == 0 { Term::Log(lc) } else { Term::End }),
            }
        },
        &ctl,
    )?;
    if lw.is_none() && res.status == crate::sum::Status::Polynomial {
        res.status = crate::sum::Status::Converged;
    }
    let mut outer = spec.prefactor;
    if spec.normalized {
        outer *= spec.normalization()?;
    }
    let mut log_outer = outer.ln();
    if spec.z_exponent.norm() != 0.0 {
        log_outer += spec.z_exponent * z.ln();
    }
    if outer.norm() == 0.0 {
        res.scaled = crate::sum::Scaled { mantissa: Complex64::new(0.0, 0.0), log_scale: 0.0 };
    } else {
        res.scaled = res.scaled.times_exp(log_outer);
    }
    res.value = res.scaled.value();
    res.tail_bound *= log_outer.re.exp();
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn exponential_as_fox_wright() {
        // 1Psi1[(1,1);(1,1); z] = e^z
        let spec = FoxWrightSpec::new(vec![(c(1.0), 1.0)], vec![(c(1.0), 1.0)]);
        let z = Complex64::new(1.5, -0.5);
        let r = fox_wright_eval(&spec, z, &SumControl::new(1e-16, 1000)).unwrap();
        assert!((r.value / z.exp() - 1.0).norm() < 1e-14);
    }

    #[test]
    fn geometric_disk_and_divergence() {
        // 1Psi0[(1,1); ; z] = 1/(1-z) on |z| < 1
        let spec = FoxWrightSpec::new(vec![(c(1.0), 1.0)], vec![]);
        let r = fox_wright_eval(&spec, c(0.5), &SumControl::new(1e-16, 1000)).unwrap();
        assert!((r.value.re - 2.0).abs() < 1e-14);
        assert!(matches!(fox_wright_eval(&spec, c(1.5), &SumControl::default()), Err(Error::Divergence(_))));
    }

    #[test]
    fn upper_pole_is_an_error() {
        let spec = FoxWrightSpec::new(vec![(c(-2.0), 1.0)], vec![(c(1.0), 1.0)]);
        assert!(matches!(fox_wright_eval(&spec, c(0.5), &SumControl::default()), Err(Error::Pole(_))));
    }

    #[test]
    fn multiset_equality_ignores_order() {
        let a = vec![(c(1.0), 1.0), (c(2.0), 0.5)];
        let b = vec![(c(2.0), 0.5), (c(1.0), 1.0)];
        assert!(multiset_eq(&a, &b, 0.0));
        assert!(!multiset_eq(&a, &b[..1], 0.0));
    }
}
