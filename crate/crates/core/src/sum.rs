//! Series summation with the crate-wide truncation rule.
//!
//! Terms arrive either as values or as logarithms. Logarithmic terms are
//! accumulated against a running scale so that sums whose magnitude exceeds
//! the `f64` range remain available through [`Scaled`]. Accumulation is
//! compensated (Neumaier) in both components.
//!
//! Truncation: the sum stops once two consecutive non-zero terms are each
//! below `tol * max(1, |partial|)` and no larger than their predecessor.

use crate::error::{Error, Result};
use num_complex::Complex64;

/// Default cap on the number of series terms.
pub const DEFAULT_MAX_TERMS: usize = 10_000;

/// Environment variable overriding [`DEFAULT_MAX_TERMS`].
pub const MAX_TERMS_ENV: &str = "ML_FRACCALC_MAX_TERMS";

/// Term cap from the environment, falling back to [`DEFAULT_MAX_TERMS`].
pub fn default_max_terms() -> usize {
    std::env::var(MAX_TERMS_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or(DEFAULT_MAX_TERMS)
}

/// How a summation ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    /// The truncation rule was met.
    Converged,
    /// Boundary evaluation of a conditionally convergent series, stopped at the cap.
    Conditional,
    /// The cap was reached before the truncation rule was met.
    TruncatedAtCap,
    /// The series terminates; the value is exact up to rounding.
    Polynomial,
    /// The terms grew without bound.
    Diverged,
}

impl Status {
    /// Stable lowercase identifier used in reports.
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Converged => "converged",
            Status::Conditional => "conditional",
            Status::TruncatedAtCap => "truncated-at-cap",
            Status::Polynomial => "polynomial",
            Status::Diverged => "diverged",
        }
    }
}

/// Value represented as `mantissa * exp(log_scale)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scaled {
    pub mantissa: Complex64,
    pub log_scale: f64,
}

impl Scaled {
    /// Plain value, possibly infinite.
    pub fn value(&self) -> Complex64 {
        if self.log_scale == 0.0 {
            self.mantissa
        } else {
            self.mantissa * self.log_scale.exp()
        }
    }

    /// Logarithm of the represented value (principal branch of the mantissa).
    pub fn ln(&self) -> Complex64 {
        self.mantissa.ln() + self.log_scale
    }

    /// `|self - other| / |self|` computed without leaving the scaled domain.
    pub fn relative_difference(&self, other: &Scaled) -> f64 {
        let s = self.log_scale.max(other.log_scale);
        let a = self.mantissa * (self.log_scale - s).exp();
        let b = other.mantissa * (other.log_scale - s).exp();
        (a - b).norm() / a.norm()
    }

    /// The value `exp(l)`.
    pub fn from_log(l: Complex64) -> Scaled {
        Scaled { mantissa: Complex64::new(0.0, l.im).exp(), log_scale: l.re }
    }

    /// A plain value.
    pub fn plain(v: Complex64) -> Scaled {
        Scaled { mantissa: v, log_scale: 0.0 }
    }

    /// Adds a plain value.
    pub fn plus(&self, v: Complex64) -> Scaled {
        if self.log_scale <= 0.0 {
            Scaled::plain(self.value() + v)
        } else {
            Scaled { mantissa: self.mantissa + v * (-self.log_scale).exp(), log_scale: self.log_scale }
        }
    }

    /// Multiplies by `exp(l)`.
    pub fn times_exp(&self, l: Complex64) -> Scaled {
        Scaled {
            mantissa: self.mantissa * Complex64::new(0.0, l.im).exp(),
            log_scale: self.log_scale + l.re,
        }
    }
}

/// Outcome of a series evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: Complex64,
    pub terms_used: usize,
    pub tail_bound: f64,
    pub status: Status,
    pub scaled: Scaled,
}

/// Tolerance, cap and boundary mode for a summation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SumControl {
    pub tol: f64,
    pub max_terms: usize,
    /// Run to the cap and report [`Status::Conditional`].
    pub conditional: bool,
}

impl SumControl {
    pub fn new(tol: f64, max_terms: usize) -> Self {
        SumControl { tol, max_terms, conditional: false }
    }
}

impl Default for SumControl {
    fn default() -> Self {
        SumControl::new(1e-15, default_max_terms())
    }
}

/// `ln |w|` and `w / |w|` for `w != 0`, the split used by [`Term::Phased`].
pub fn polar_split(w: Complex64) -> (f64, Complex64) {
    let r = w.norm();
    (r.ln(), w / r)
}

/// The term `c w^n` from `log c`, `ln |w|` and `w / |w|`.
pub fn power_term(log_coefficient: Complex64, ln_abs: f64, unit: Complex64, n: usize) -> Term {
    let k = n as f64;
    let phase = if n <= i32::MAX as usize { unit.powi(n as i32) } else { Complex64::from_polar(1.0, unit.arg() * k) };
    Term::Phased { log: log_coefficient + ln_abs * k, unit: phase }
}

/// A single series term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Term {
    /// The term itself.
    Value(Complex64),
    /// The natural logarithm of the term.
    Log(Complex64),
    /// `exp(log) * unit` with `|unit| = 1`; keeps the phase of `w^n` exact
    /// for real `w`.
    Phased { log: Complex64, unit: Complex64 },
    /// An exactly vanishing term; later terms may be non-zero.
    Zero,
    /// This and every later term vanish.
    End,
}

#[derive(Default)]
struct Neumaier {
    sum: Complex64,
    comp: Complex64,
}

impl Neumaier {
    fn add(&mut self, x: Complex64) {
        self.sum.re = two_sum(self.sum.re, x.re, &mut self.comp.re);
        self.sum.im = two_sum(self.sum.im, x.im, &mut self.comp.im);
    }
    fn total(&self) -> Complex64 {
        self.sum + self.comp
    }
    fn rescale(&mut self, f: f64) {
        self.sum *= f;
        self.comp *= f;
    }
}

fn two_sum(s: f64, x: f64, comp: &mut f64) -> f64 {
    let t = s + x;
    if s.abs() >= x.abs() {
        *comp += (s - t) + x;
    } else {
        *comp += (x - t) + s;
    }
    t
}

const RESCALE_MARGIN: f64 = 600.0;

/// Sums `term(0) + term(1) + ...` under the truncation rule.
pub fn sum_series<F>(mut term: F, ctl: &SumControl) -> Result<EvalResult>
where
    F: FnMut(usize) -> Result<Term>,
{
    let ln_tol = ctl.tol.max(f64::MIN_POSITIVE).ln();
    let mut acc = Neumaier::default();
    let mut scale = 0.0f64;
    let mut small_run = 0usize;
    let mut prev_mag = f64::INFINITY;
    let mut last_mag = 0.0f64;
    let mut last_ratio = 1.0f64;
    let mut terms_used = 0usize;
    let mut status = None;

    for n in 0..ctl.max_terms {
        let t = term(n)?;
        terms_used = n + 1;
        // Logarithmic magnitude of the term relative to nothing.
        let (ln_mag, contrib) = match t {
            Term::End => {
                status = Some(Status::Polynomial);
                last_mag = 0.0;
                break;
            }
            Term::Zero => continue,
            Term::Value(v) => {
                if v.re == 0.0 && v.im == 0.0 {
                    continue;
                }
                if !v.re.is_finite() || !v.im.is_finite() {
                    return Err(Error::Divergence(format!("non-finite term at n={n}")));
                }
                let m = v.norm().ln();
                (m, Term::Value(v))
            }
            Term::Log(l) => {
                if l.re == f64::NEG_INFINITY {
                    continue;
                }
                if !l.re.is_finite() || !l.im.is_finite() {
                    return Err(Error::Divergence(format!("non-finite term at n={n}")));
                }
                (l.re, Term::Log(l))
            }
            Term::Phased { log, unit } => {
                if log.re == f64::NEG_INFINITY {
                    continue;
                }
                if !log.re.is_finite() || !log.im.is_finite() || !unit.re.is_finite() || !unit.im.is_finite() {
                    return Err(Error::Divergence(format!("non-finite term at n={n}")));
                }
                (log.re, Term::Phased { log, unit })
            }
        };
        if ln_mag - scale > RESCALE_MARGIN {
            let new_scale = ln_mag;
            acc.rescale((scale - new_scale).exp());
            scale = new_scale;
        }
        let v = match contrib {
            Term::Value(v) => {
                if scale == 0.0 {
                    v
                } else {
                    v * (-scale).exp()
                }
            }
            Term::Log(l) => (l - scale).exp(),
            Term::Phased { log, unit } => (log - scale).exp() * unit,
            _ => unreachable!(),
        };
        acc.add(v);

        let mag = ln_mag;
        let partial = acc.total().norm();
        let ln_partial = if partial > 0.0 { partial.ln() + scale } else { f64::NEG_INFINITY };
        let threshold = ln_tol + ln_partial.max(0.0);
        if prev_mag.is_finite() {
            last_ratio = (mag - prev_mag).exp();
        }
        if mag < threshold && mag <= prev_mag {
            small_run += 1;
        } else {
            small_run = 0;
        }
        prev_mag = mag;
        last_mag = mag;
        if small_run >= 2 && !ctl.conditional {
            status = Some(Status::Converged);
            break;
        }
    }

    let status = status.unwrap_or(if ctl.conditional {
        Status::Conditional
    } else if last_ratio > 1.0 + 1e-12 && last_mag > ln_tol {
        Status::Diverged
    } else {
        Status::TruncatedAtCap
    });
    let tail_bound = if status == Status::Polynomial {
        0.0
    } else {
        let t = last_mag.exp();
        if last_ratio < 0.9 {
            t * last_ratio / (1.0 - last_ratio)
        } else {
            t * 10.0
        }
    };
    let scaled = Scaled { mantissa: acc.total(), log_scale: scale };
    Ok(EvalResult { value: scaled.value(), terms_used, tail_bound, status, scaled })
}
