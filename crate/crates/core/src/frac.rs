//! Riemann-Liouville, Saigo and Saigo-Maeda operators applied to power
//! weighted M-series and K-functions.
//!
//! | operator | kernel | parameters |
//! |----------|--------|------------|
//! | Riemann-Liouville | `(x-t)^(nu-1) / Gamma(nu)` | `nu` |
//! | Saigo | `(x-t)^(alpha-1) 2F1(alpha+beta, -gamma; alpha; 1-t/x)` | `alpha, beta, gamma` |
//! | Saigo-Maeda | `(x-t)^(gamma-1) t^(-alpha') F3(..; 1-t/x, 1-x/t)` | `alpha, alpha', beta, beta', gamma` |
//!
//! Each operator maps `t^(rho-1)` to a gamma ratio times a power of `x`.
//! Applied term by term to `t^(sigma-1) S(c t^(+-mu))` this turns the series
//! `S` into a Fox-Wright function with three or four extra gamma pairs,
//! returned as a [`FracResult`].
//!
//! | image of `t^(rho-1)` | coefficient | power of `x` |
//! |----------------------|-------------|--------------|
//! | RL left integral | `Gamma(rho) / Gamma(rho+nu)` | `rho+nu-1` |
//! | Saigo left integral | `Gamma(rho) Gamma(rho+gamma-beta) / (Gamma(rho-beta) Gamma(rho+alpha+gamma))` | `rho-beta-1` |
//! | Saigo right integral | `Gamma(1+beta-rho) Gamma(1+gamma-rho) / (Gamma(1-rho) Gamma(1+alpha+beta+gamma-rho))` | `rho-alpha-2beta-1` |
//! | Saigo-Maeda left integral | `Gamma(rho) Gamma(rho+gamma-alpha-alpha'-beta) Gamma(rho-alpha'+beta') / (Gamma(rho+beta') Gamma(rho+gamma-alpha-alpha') Gamma(rho+gamma-alpha'-beta))` | `rho-alpha-alpha'+gamma-1` |
//! | Saigo-Maeda right integral | `Gamma(1+alpha+alpha'-gamma-rho) Gamma(1+alpha+beta'-gamma-rho) Gamma(1-beta-rho) / (Gamma(1-rho) Gamma(1+alpha+alpha'+beta'-gamma-rho) Gamma(1+alpha-beta-rho))` | `rho-alpha-alpha'+gamma-1` |
//!
//! The right-sided Saigo operator carries the outer factor `x^(-alpha-beta)`,
//! hence the `-2 beta` in its power. Derivatives are the integrals with
//! continued parameters: `nu -> -nu`, Saigo `(alpha, beta, gamma) ->
//! (-alpha, -beta, alpha+gamma)`, Saigo-Maeda `(alpha, alpha', beta, beta',
//! gamma) -> (-alpha', -alpha, -beta', -beta, -gamma)`. The `*_power`
//! functions compute derivatives independently through the `n`-fold
//! differentiated integral forms.

use crate::error::{Error, Result};
use crate::foxwright::{fox_wright_eval, ArgumentMap, FoxWrightSpec, GammaPair};
use crate::gamma::{gamma, nonpositive_integer, reciprocal_gamma};
use crate::hyper::gauss_2f1_one_minus;
use crate::instances::{reduce_to_fox_wright, series_eval, SeriesInstance};
use crate::quad::{tanh_sinh, QuadResult, Tolerance, Trap};
use crate::sum::SumControl;
use num_complex::Complex64;

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Operator family and its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OperatorKind {
    RiemannLiouville { nu: Complex64 },
    Saigo { alpha: Complex64, beta: Complex64, gamma: Complex64 },
    SaigoMaeda { alpha: Complex64, alpha_p: Complex64, beta: Complex64, beta_p: Complex64, gamma: Complex64 },
}

/// Integration from `0` (left) or towards infinity (right).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Integral or derivative of the given order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Integral,
    Derivative,
}

/// A fully specified operator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperatorParams {
    pub kind: OperatorKind,
    pub side: Side,
    pub mode: Mode,
}

/// `Gamma(offset + sign * rho)` factors of a power image.
#[derive(Debug, Clone)]
struct Transfer {
    up: Vec<Complex64>,
    lo: Vec<Complex64>,
    /// `+1` for `Gamma(offset + rho)`, `-1` for `Gamma(offset - rho)`.
    sign: f64,
    /// The image is `x^(rho - 1 + shift)`.
    shift: Complex64,
}

impl OperatorParams {
    pub fn riemann_liouville(nu: Complex64, side: Side, mode: Mode) -> Self {
        OperatorParams { kind: OperatorKind::RiemannLiouville { nu }, side, mode }
    }

    pub fn saigo(alpha: Complex64, beta: Complex64, gamma: Complex64, side: Side, mode: Mode) -> Self {
        OperatorParams { kind: OperatorKind::Saigo { alpha, beta, gamma }, side, mode }
    }

    pub fn saigo_maeda(
        alpha: Complex64,
        alpha_p: Complex64,
        beta: Complex64,
        beta_p: Complex64,
        gamma: Complex64,
        side: Side,
        mode: Mode,
    ) -> Self {
        OperatorParams { kind: OperatorKind::SaigoMaeda { alpha, alpha_p, beta, beta_p, gamma }, side, mode }
    }

    /// The order parameter whose real part must be positive: `nu`, `alpha`
    /// or `gamma`.
    pub fn order(&self) -> Complex64 {
        match self.kind {
            OperatorKind::RiemannLiouville { nu } => nu,
            OperatorKind::Saigo { alpha, .. } => alpha,
            OperatorKind::SaigoMaeda { gamma, .. } => gamma,
        }
    }

    /// `floor(Re order) + 1`, the number of ordinary derivatives.
    pub fn derivative_index(&self) -> u32 {
        (self.order().re.floor() + 1.0).max(1.0) as u32
    }

    /// Checks that the order has positive real part.
    pub fn validate(&self) -> Result<()> {
        let o = self.order();
        if !(o.re > 0.0) || !o.re.is_finite() || !o.im.is_finite() {
            let what = match self.kind {
                OperatorKind::RiemannLiouville { .. } => "Riemann-Liouville order nu",
                OperatorKind::Saigo { .. } => "Saigo alpha",
                OperatorKind::SaigoMaeda { .. } => "Saigo-Maeda gamma",
            };
            return Err(Error::Parameter(format!("{what} needs a positive real part, got {o}")));
        }
        Ok(())
    }

    /// Integral parameters that give this operator.
    fn continued(&self) -> OperatorKind {
        if self.mode == Mode::Integral {
            return self.kind;
        }
        match self.kind {
            OperatorKind::RiemannLiouville { nu } => OperatorKind::RiemannLiouville { nu: -nu },
            OperatorKind::Saigo { alpha, beta, gamma } => OperatorKind::Saigo { alpha: -alpha, beta: -beta, gamma: alpha + gamma },
            OperatorKind::SaigoMaeda { alpha, alpha_p, beta, beta_p, gamma } => OperatorKind::SaigoMaeda {
                alpha: -alpha_p,
                alpha_p: -alpha,
                beta: -beta_p,
                beta_p: -beta,
                gamma: -gamma,
            },
        }
    }

    fn transfer(&self) -> Transfer {
        let one = c(1.0);
        let zero = c(0.0);
        match (self.continued(), self.side) {
            (OperatorKind::RiemannLiouville { nu }, Side::Left) => {
                Transfer { up: vec![zero], lo: vec![nu], sign: 1.0, shift: nu }
            }
            (OperatorKind::RiemannLiouville { nu }, Side::Right) => {
                Transfer { up: vec![one - nu], lo: vec![one], sign: -1.0, shift: nu }
            }
            (OperatorKind::Saigo { alpha, beta, gamma }, Side::Left) => Transfer {
                up: vec![zero, gamma - beta],
                lo: vec![-beta, alpha + gamma],
                sign: 1.0,
                shift: -beta,
            },
            (OperatorKind::Saigo { alpha, beta, gamma }, Side::Right) => Transfer {
                up: vec![one + beta, one + gamma],
                lo: vec![one, one + alpha + beta + gamma],
                sign: -1.0,
                shift: -alpha - 2.0 * beta,
            },
            (OperatorKind::SaigoMaeda { alpha, alpha_p, beta, beta_p, gamma }, Side::Left) => Transfer {
                up: vec![zero, gamma - alpha - alpha_p - beta, beta_p - alpha_p],
                lo: vec![beta_p, gamma - alpha - alpha_p, gamma - alpha_p - beta],
                sign: 1.0,
                shift: gamma - alpha - alpha_p,
            },
            (OperatorKind::SaigoMaeda { alpha, alpha_p, beta, beta_p, gamma }, Side::Right) => Transfer {
                up: vec![one + alpha + alpha_p - gamma, one + alpha + beta_p - gamma, one - beta],
                lo: vec![one, one + alpha + alpha_p + beta_p - gamma, one + alpha - beta],
                sign: -1.0,
                shift: gamma - alpha - alpha_p,
            },
        }
    }

    fn label(&self) -> String {
        let kind = match self.kind {
            OperatorKind::RiemannLiouville { .. } => "riemann-liouville",
            OperatorKind::Saigo { .. } => "saigo",
            OperatorKind::SaigoMaeda { .. } => "saigo-maeda",
        };
        let side = if self.side == Side::Left { "left" } else { "right" };
        let mode = if self.mode == Mode::Integral { "integral" } else { "derivative" };
        format!("{kind}-{side}-{mode}")
    }
}

/// The function `t^(sigma-1) S(c t^mu)` (or `S(c t^(-mu))`) with `S` an
/// M-series or K-function.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerWeightedOperand {
    pub sigma: Complex64,
    pub scale: f64,
    pub power: f64,
    /// Use the argument `c t^(-mu)`.
    pub inverse: bool,
    pub inner: SeriesInstance,
}

impl PowerWeightedOperand {
    /// `t^(sigma-1) S(c t^mu)`, the operand of left-sided operators.
    pub fn left(sigma: Complex64, scale: f64, power: f64, inner: SeriesInstance) -> Self {
        PowerWeightedOperand { sigma, scale, power, inverse: false, inner }
    }

    /// `t^(sigma-1) S(c t^(-mu))`, the operand of right-sided operators.
    pub fn right(sigma: Complex64, scale: f64, power: f64, inner: SeriesInstance) -> Self {
        PowerWeightedOperand { sigma, scale, power, inverse: true, inner }
    }

    /// Checks the series type, `mu > 0` and the lower parameters.
    pub fn validate(&self) -> Result<()> {
        if !(self.power > 0.0 && self.power.is_finite()) {
            return Err(Error::Parameter(format!("argument power mu must be positive, got {}", self.power)));
        }
        if !self.scale.is_finite() {
            return Err(Error::Parameter("scale c must be finite".into()));
        }
        let (a, b) = match &self.inner {
            SeriesInstance::MSeries { a, b, .. } | SeriesInstance::KFunction { a, b, .. } => (a, b),
            other => {
                return Err(Error::Parameter(format!(
                    "operators act on M-series and K-functions, got {}",
                    other.name()
                )))
            }
        };
        for x in a {
            if nonpositive_integer(*x).is_some() {
                return Err(Error::Parameter(format!("upper parameter {x} makes Gamma(a) infinite")));
            }
        }
        for x in b {
            if nonpositive_integer(*x).is_some() {
                return Err(Error::Parameter(format!("lower parameter {x} is a nonpositive integer")));
            }
        }
        self.inner.validate()
    }

    /// `S(c t^(+-mu))`.
    pub fn series_at(&self, t: f64, ctl: &SumControl) -> Result<Complex64> {
        let mu = if self.inverse { -self.power } else { self.power };
        Ok(series_eval(&self.inner, c(self.scale * t.powf(mu)), ctl)?.value)
    }

    /// `t^(sigma-1) S(c t^(+-mu))`.
    pub fn eval(&self, t: f64, ctl: &SumControl) -> Result<Complex64> {
        Ok(c(t).powc(self.sigma - 1.0) * self.series_at(t, ctl)?)
    }

    /// Coefficient of `(c t^(+-mu))^n` in `S`.
    pub fn series_coefficient(&self, n: usize) -> Result<Complex64> {
        Ok(self.inner.log_coefficient(n)?.map(|l| l.exp()).unwrap_or_default())
    }

    /// `rho` of the `n`-th monomial `t^(rho-1)` of the operand.
    pub fn monomial_rho(&self, n: usize) -> Complex64 {
        let step = self.power * n as f64;
        if self.inverse {
            self.sigma - step
        } else {
            self.sigma + step
        }
    }
}

/// An operator image `coefficient * z^exponent * psi(c z^(+-mu))`.
#[derive(Debug, Clone, PartialEq)]
pub struct FracResult {
    pub coefficient: Complex64,
    pub exponent: Complex64,
    /// Fox-Wright lists with the coefficient, exponent and argument map.
    pub spec: FoxWrightSpec,
    /// Operator, side and mode, e.g. `saigo-left-integral`.
    pub rule: String,
    /// The equivalent M-series or K-function for Riemann-Liouville images of
    /// a plain series.
    pub series: Option<SeriesInstance>,
}

impl FracResult {
    /// Value at `z > 0`.
    pub fn eval(&self, z: f64, ctl: &SumControl) -> Result<Complex64> {
        Ok(fox_wright_eval(&self.spec, c(z), ctl)?.value)
    }

    /// Coefficient of `(c z^(+-mu))^n`, including the outer coefficient.
    pub fn term(&self, n: usize) -> Result<Complex64> {
        Ok(self.coefficient * self.spec.coefficient(n)?)
    }
}

/// Applies `op` to `operand` term by term.
pub fn apply(op: &OperatorParams, operand: &PowerWeightedOperand) -> Result<FracResult> {
    op.validate()?;
    operand.validate()?;
    if (op.side == Side::Right) != operand.inverse {
        return Err(Error::Parameter(format!(
            "{:?}-sided operators need the argument c t^{}mu",
            op.side,
            if op.side == Side::Right { "-" } else { "+" }
        )));
    }
    let tr = op.transfer();
    let mu = operand.power;
    // Gamma(off + sign rho_n) = Gamma(off + sign sigma + mu n) since sign matches the side.
    let pair = |off: Complex64| -> GammaPair { (off + tr.sign * operand.sigma, mu) };
    let (a, b, xi, eta, nu) = match &operand.inner {
        SeriesInstance::MSeries { a, b, alpha, beta } => (a, b, *alpha, *beta, None),
        SeriesInstance::KFunction { a, b, alpha, beta, gamma } => (a, b, *alpha, *beta, Some(*gamma)),
        _ => unreachable!("validated above"),
    };
    let mut upper: Vec<GammaPair> = a.iter().map(|x| (*x, 1.0)).collect();
    upper.extend(tr.up.iter().map(|o| pair(*o)));
    upper.push((nu.unwrap_or(c(1.0)), 1.0));
    let mut lower: Vec<GammaPair> = b.iter().map(|x| (*x, 1.0)).collect();
    lower.extend(tr.lo.iter().map(|o| pair(*o)));
    lower.push((eta, xi));

    let mut coefficient = c(1.0);
    for x in b {
        coefficient *= gamma(*x)?;
    }
    for x in a {
        coefficient *= reciprocal_gamma(*x);
    }
    if let Some(nu) = nu {
        coefficient *= reciprocal_gamma(nu);
    }
    let exponent = operand.sigma - 1.0 + tr.shift;
    let mut spec = FoxWrightSpec::new(upper, lower)
        .with_prefactor(coefficient)
        .with_argument(ArgumentMap { scale: c(operand.scale), power: mu, inverse: operand.inverse });
    spec.z_exponent = exponent;
    Ok(FracResult { coefficient, exponent, spec, rule: op.label(), series: None })
}

/// Riemann-Liouville image of a plain series `S(z)`: the integral gives
/// `z^nu / Gamma(nu+1)` times `S` with top `1` and bottom `nu+1` appended,
/// the derivative `z^(-nu) / Gamma(1-nu)` with bottom `1-nu`.
pub fn rl_series(op: &OperatorParams, inst: &SeriesInstance) -> Result<FracResult> {
    let OperatorKind::RiemannLiouville { nu } = op.kind else {
        return Err(Error::Parameter("rl_series needs a Riemann-Liouville operator".into()));
    };
    if op.side != Side::Left {
        return Err(Error::UnsupportedRegime("series images are left-sided".into()));
    }
    op.validate()?;
    let bottom = match op.mode {
        Mode::Integral => nu + 1.0,
        Mode::Derivative => 1.0 - nu,
    };
    if nonpositive_integer(bottom).is_some() {
        return Err(Error::Parameter(format!("appended bottom parameter {bottom} is a nonpositive integer")));
    }
    let series = match inst {
        SeriesInstance::MSeries { a, b, alpha, beta } => {
            let (mut a, mut b) = (a.clone(), b.clone());
            a.push(c(1.0));
            b.push(bottom);
            SeriesInstance::MSeries { a, b, alpha: *alpha, beta: *beta }
        }
        SeriesInstance::KFunction { a, b, alpha, beta, gamma } => {
            let (mut a, mut b) = (a.clone(), b.clone());
            a.push(c(1.0));
            b.push(bottom);
            SeriesInstance::KFunction { a, b, alpha: *alpha, beta: *beta, gamma: *gamma }
        }
        other => return Err(Error::Parameter(format!("rl_series acts on M-series and K-functions, got {}", other.name()))),
    };
    let outer = reciprocal_gamma(bottom);
    let exponent = if op.mode == Mode::Integral { nu } else { -nu };
    let mut spec = reduce_to_fox_wright(&series)?;
    spec.prefactor *= outer;
    spec.z_exponent = exponent;
    Ok(FracResult { coefficient: spec.prefactor, exponent, spec, rule: op.label(), series: Some(series) })
}

/// Saigo image of a power weighted series.
pub fn saigo_apply(op: &OperatorParams, operand: &PowerWeightedOperand) -> Result<FracResult> {
    match op.kind {
        OperatorKind::Saigo { .. } => apply(op, operand),
        _ => Err(Error::Parameter("saigo_apply needs a Saigo operator".into())),
    }
}

/// Saigo-Maeda image of a power weighted series.
pub fn saigo_maeda_apply(op: &OperatorParams, operand: &PowerWeightedOperand) -> Result<FracResult> {
    match op.kind {
        OperatorKind::SaigoMaeda { .. } => apply(op, operand),
        _ => Err(Error::Parameter("saigo_maeda_apply needs a Saigo-Maeda operator".into())),
    }
}

/// `coefficient * z^exponent`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerImage {
    pub coefficient: Complex64,
    pub exponent: Complex64,
}

impl PowerImage {
    pub fn at(&self, z: f64) -> Complex64 {
        self.coefficient * c(z).powc(self.exponent)
    }
}

fn ratio(up: &[Complex64], lo: &[Complex64]) -> Result<Complex64> {
    let mut r = c(1.0);
    for x in up {
        r *= gamma(*x)?;
    }
    for x in lo {
        r *= reciprocal_gamma(*x);
    }
    Ok(r)
}

/// `m (m-1) ... (m-n+1)`, the factor of `(d/dx)^n x^m`.
fn falling(m: Complex64, n: u32) -> Complex64 {
    (0..n).fold(c(1.0), |p, k| p * (m - k as f64))
}

/// Riemann-Liouville image of `z^mu` for any complex order.
///
/// Left: `Gamma(mu+1) / Gamma(mu+1+nu) z^(mu+nu)` for the integral and
/// `Gamma(mu+1) / Gamma(mu+1-nu) z^(mu-nu)` for the derivative. A pole of the
/// lower gamma gives a zero coefficient.
pub fn rl_power(op: &OperatorParams, mu: Complex64) -> Result<PowerImage> {
    let OperatorKind::RiemannLiouville { nu } = op.kind else {
        return Err(Error::Parameter("rl_power needs a Riemann-Liouville operator".into()));
    };
    let s = if op.mode == Mode::Integral { nu } else { -nu };
    match op.side {
        Side::Left => {
            if !(mu.re > -1.0) {
                return Err(Error::Constraint(format!("left image of z^mu needs Re mu > -1, got {mu}")));
            }
            Ok(PowerImage { coefficient: ratio(&[mu + 1.0], &[mu + 1.0 + s])?, exponent: mu + s })
        }
        Side::Right => {
            if !((mu + s).re < 0.0) {
                return Err(Error::Constraint(format!("right image of z^mu needs Re(mu + order) < 0, got {}", mu + s)));
            }
            Ok(PowerImage { coefficient: ratio(&[-s - mu], &[-mu])?, exponent: mu + s })
        }
    }
}

fn saigo_left(alpha: Complex64, beta: Complex64, gamma_: Complex64, rho: Complex64) -> Result<PowerImage> {
    Ok(PowerImage {
        coefficient: ratio(&[rho, rho + gamma_ - beta], &[rho - beta, rho + alpha + gamma_])?,
        exponent: rho - beta - 1.0,
    })
}

fn saigo_right(alpha: Complex64, beta: Complex64, gamma_: Complex64, rho: Complex64) -> Result<PowerImage> {
    let one = c(1.0);
    Ok(PowerImage {
        coefficient: ratio(&[one + beta - rho, one + gamma_ - rho], &[one - rho, one + alpha + beta + gamma_ - rho])?,
        exponent: rho - alpha - 2.0 * beta - 1.0,
    })
}

/// Saigo image of `t^(rho-1)`.
///
/// Integrals check `Re rho > max(0, Re(beta - gamma))` (left) or
/// `Re rho < 1 + min(Re beta, Re gamma)` (right). The left derivative is
/// `(d/dx)^n` of the integral with parameters
/// `(-alpha+n, -beta-n, alpha+gamma-n)`.
pub fn saigo_power(op: &OperatorParams, rho: Complex64) -> Result<PowerImage> {
    let OperatorKind::Saigo { alpha, beta, gamma: g } = op.kind else {
        return Err(Error::Parameter("saigo_power needs a Saigo operator".into()));
    };
    op.validate()?;
    match (op.side, op.mode) {
        (Side::Left, Mode::Integral) => {
            if !(rho.re > 0.0_f64.max((beta - g).re)) {
                return Err(Error::Constraint(format!("left Saigo image needs Re rho > max(0, Re(beta - gamma)), got {rho}")));
            }
            saigo_left(alpha, beta, g, rho)
        }
        (Side::Right, Mode::Integral) => {
            if !(rho.re < 1.0 + beta.re.min(g.re)) {
                return Err(Error::Constraint(format!("right Saigo image needs Re rho < 1 + min(Re beta, Re gamma), got {rho}")));
            }
            saigo_right(alpha, beta, g, rho)
        }
        (Side::Left, Mode::Derivative) => {
            let n = op.derivative_index();
            let nf = n as f64;
            let inner = saigo_left(nf - alpha, -beta - nf, alpha + g - nf, rho)?;
            Ok(PowerImage {
                coefficient: inner.coefficient * falling(inner.exponent, n),
                exponent: inner.exponent - nf,
            })
        }
        (Side::Right, Mode::Derivative) => saigo_right(-alpha, -beta, alpha + g, rho),
    }
}

struct Sm {
    a: Complex64,
    ap: Complex64,
    b: Complex64,
    bp: Complex64,
    g: Complex64,
}

fn sm_left(p: &Sm, rho: Complex64) -> Result<PowerImage> {
    Ok(PowerImage {
        coefficient: ratio(
            &[rho, rho + p.g - p.a - p.ap - p.b, rho - p.ap + p.bp],
            &[rho + p.bp, rho + p.g - p.a - p.ap, rho + p.g - p.ap - p.b],
        )?,
        exponent: rho - p.a - p.ap + p.g - 1.0,
    })
}

fn sm_right(p: &Sm, rho: Complex64) -> Result<PowerImage> {
    let one = c(1.0);
    Ok(PowerImage {
        coefficient: ratio(
            &[one + p.a + p.ap - p.g - rho, one + p.a + p.bp - p.g - rho, one - p.b - rho],
            &[one - rho, one + p.a + p.ap + p.bp - p.g - rho, one + p.a - p.b - rho],
        )?,
        exponent: rho - p.a - p.ap + p.g - 1.0,
    })
}

/// Saigo-Maeda image of `t^(rho-1)`.
///
/// Integrals check their existence conditions:
/// `Re rho > max(0, Re(alpha+alpha'+beta-gamma), Re(alpha'-beta'))` on the
/// left and `Re rho < 1 + min(0, Re(-beta), Re(alpha+alpha'-gamma),
/// Re(alpha+beta'-gamma))` on the right. Derivatives are `(d/dx)^n` of the
/// left integral with `(-alpha', -alpha, -beta'+n, -beta, -gamma+n)` and
/// `(-1)^n (d/dx)^n` of the right integral with
/// `(-alpha', -alpha, -beta', -beta+n, -gamma+n)`.
pub fn saigo_maeda_power(op: &OperatorParams, rho: Complex64) -> Result<PowerImage> {
    let OperatorKind::SaigoMaeda { alpha, alpha_p, beta, beta_p, gamma: g } = op.kind else {
        return Err(Error::Parameter("saigo_maeda_power needs a Saigo-Maeda operator".into()));
    };
    op.validate()?;
    let p = Sm { a: alpha, ap: alpha_p, b: beta, bp: beta_p, g };
    match (op.side, op.mode) {
        (Side::Left, Mode::Integral) => {
            let bound = 0.0_f64.max((alpha + alpha_p + beta - g).re).max((alpha_p - beta_p).re);
            if !(rho.re > bound) {
                return Err(Error::Constraint(format!("left Saigo-Maeda image needs Re rho > {bound}, got {rho}")));
            }
            sm_left(&p, rho)
        }
        (Side::Right, Mode::Integral) => {
            let bound = 1.0 + 0.0_f64.min(-beta.re).min((alpha + alpha_p - g).re).min((alpha + beta_p - g).re);
            if !(rho.re < bound) {
                return Err(Error::Constraint(format!("right Saigo-Maeda image needs Re rho < {bound}, got {rho}")));
            }
            sm_right(&p, rho)
        }
        (side, Mode::Derivative) => {
            let n = op.derivative_index();
            let nf = n as f64;
            let (inner, sign) = if side == Side::Left {
                let q = Sm { a: -alpha_p, ap: -alpha, b: -beta_p + nf, bp: -beta, g: -g + nf };
                (sm_left(&q, rho)?, 1.0)
            } else {
                let q = Sm { a: -alpha_p, ap: -alpha, b: -beta_p, bp: -beta + nf, g: -g + nf };
                (sm_right(&q, rho)?, if n % 2 == 0 { 1.0 } else { -1.0 })
            };
            Ok(PowerImage {
                coefficient: inner.coefficient * falling(inner.exponent, n) * sign,
                exponent: inner.exponent - nf,
            })
        }
    }
}

/// Image of `t^(rho-1)` under any operator, from its closed form.
pub fn power_image(op: &OperatorParams, rho: Complex64) -> Result<PowerImage> {
    match op.kind {
        OperatorKind::RiemannLiouville { .. } => rl_power(op, rho - 1.0),
        OperatorKind::Saigo { .. } => saigo_power(op, rho),
        OperatorKind::SaigoMaeda { .. } => saigo_maeda_power(op, rho),
    }
}

/// Largest relative gap between the first `terms` coefficients of
/// `apply(op, operand)` and the operator applied to each monomial of the
/// operand through [`power_image`]. Exponent mismatches count as failures.
pub fn termwise_residual(op: &OperatorParams, operand: &PowerWeightedOperand, terms: usize) -> Result<f64> {
    let r = apply(op, operand)?;
    let mut worst = 0.0f64;
    for n in 0..terms {
        let rho = operand.monomial_rho(n);
        let img = power_image(op, rho)?;
        let sign = if operand.inverse { -1.0 } else { 1.0 };
        let expected_exponent = r.exponent + sign * operand.power * n as f64;
        if (img.exponent - expected_exponent).norm() > 1e-12 * (1.0 + img.exponent.norm()) {
            return Ok(f64::INFINITY);
        }
        let want = operand.series_coefficient(n)? * img.coefficient;
        let got = r.term(n)?;
        let scale = want.norm().max(got.norm());
        if scale > 0.0 {
            worst = worst.max((want - got).norm() / scale);
        }
    }
    Ok(worst)
}

/// Removes pairs common to both lists, leaving the reduced multisets.
pub fn cancel_common(spec: &FoxWrightSpec, tol: f64) -> (Vec<GammaPair>, Vec<GammaPair>) {
    let mut up = spec.upper.clone();
    let mut lo = Vec::new();
    for y in &spec.lower {
        match up.iter().position(|x| (x.0 - y.0).norm() <= tol && (x.1 - y.1).abs() <= tol) {
            Some(i) => {
                up.swap_remove(i);
            }
            None => lo.push(*y),
        }
    }
    (up, lo)
}

fn kernel_tol(tol: f64) -> Tolerance {
    Tolerance::new(tol, 0.0)
}

fn series_ctl() -> SumControl {
    SumControl::new(1e-16, 100_000)
}

/// Saigo integral of `operand` at `z > 0` by quadrature of the defining
/// integral.
///
/// The left form substitutes `t = z u`, the right form `t = z / u`, so both
/// run over `(0, 1)` with endpoint weights `u^(sigma-1) (1-u)^(alpha-1)` and
/// `u^(beta-sigma) (1-u)^(alpha-1)`. The kernel `2F1(alpha+beta, -gamma;
/// alpha; 1-u)` is evaluated from the `u = 1` side; when `gamma < beta` its
/// factor `u^(gamma-beta)` joins the weight.
pub fn saigo_quadrature(op: &OperatorParams, operand: &PowerWeightedOperand, z: f64, tol: f64) -> Result<QuadResult> {
    let OperatorKind::Saigo { alpha, beta, gamma: g } = op.kind else {
        return Err(Error::Parameter("saigo_quadrature needs a Saigo operator".into()));
    };
    if op.mode != Mode::Integral {
        return Err(Error::UnsupportedRegime("quadrature covers the integral operators".into()));
    }
    if !(alpha.re > 0.0) {
        return Err(Error::Singularity(format!("kernel (x-t)^(alpha-1) needs Re alpha > 0, got {alpha}")));
    }
    if !(z > 0.0) {
        return Err(Error::Domain(format!("Saigo quadrature needs z > 0, got {z}")));
    }
    operand.validate()?;
    if (op.side == Side::Right) != operand.inverse {
        return Err(Error::Parameter("operand argument sign does not match the operator side".into()));
    }
    let sigma = operand.sigma;
    let (u_exp, outer) = match op.side {
        Side::Left => (sigma - 1.0, c(z).powc(sigma - 1.0 - beta)),
        Side::Right => (beta - sigma, c(z).powc(sigma - 1.0 - alpha - 2.0 * beta)),
    };
    let worst = u_exp.re + (g - beta).re.min(0.0);
    if !(worst > -1.0) {
        return Err(Error::Singularity(format!("integrand exponent {worst} at u = 0 is not integrable")));
    }
    let ctl = series_ctl();
    let trap = Trap::new();
    // Euler's transformation moves a singular u^(gamma-beta) into the weight.
    let (ka, kb, kc, u_exp) = if (g - beta).re < 0.0 {
        (-beta, alpha + g, alpha, u_exp + g - beta)
    } else {
        (alpha + beta, -g, alpha, u_exp)
    };
    let r = tanh_sinh(
        |u, du, dv| {
            let kernel = trap.catch(gauss_2f1_one_minus(ka, kb, kc, c(du)).map(|f| f.value));
            let t = if op.side == Side::Left { z * u } else { z / u };
            let s = trap.catch(operand.series_at(t, &ctl));
            c(dv).powc(alpha - 1.0) * c(du).powc(u_exp) * kernel * s
        },
        0.0,
        1.0,
        kernel_tol(tol),
    );
    trap.check()?;
    let mut r = r?;
    let f = outer * reciprocal_gamma(alpha);
    r.value *= f;
    r.error *= f.norm();
    Ok(r)
}

/// Left Riemann-Liouville integral or derivative of `f` at `z > 0`.
///
/// The integral is `z^nu / Gamma(nu) int_0^1 (1-u)^(nu-1) f(z u) du`. The
/// derivative applies a centred `n`-th difference with Richardson
/// extrapolation to the integral of order `n - nu`, step
/// `h = z tol^(1/(n+2))`.
pub fn rl_quadrature<F>(op: &OperatorParams, f: F, z: f64, tol: f64) -> Result<QuadResult>
where
    F: Fn(f64) -> Complex64,
{
    let OperatorKind::RiemannLiouville { nu } = op.kind else {
        return Err(Error::Parameter("rl_quadrature needs a Riemann-Liouville operator".into()));
    };
    if op.side != Side::Left {
        return Err(Error::UnsupportedRegime("quadrature covers left-sided operators".into()));
    }
    op.validate()?;
    if !(z > 0.0) {
        return Err(Error::Domain(format!("Riemann-Liouville quadrature needs z > 0, got {z}")));
    }
    let inner_tol = (tol * 1e-4).max(1e-14);
    let integral = |order: Complex64, x: f64| -> Result<QuadResult> {
        if order == c(0.0) {
            return Ok(QuadResult { value: f(x), error: 0.0, evaluations: 1 });
        }
        let mut r = tanh_sinh(|u, _, dv| c(dv).powc(order - 1.0) * f(x * u), 0.0, 1.0, kernel_tol(inner_tol))?;
        let k = c(x).powc(order) * reciprocal_gamma(order);
        r.value *= k;
        r.error *= k.norm();
        Ok(r)
    };
    match op.mode {
        Mode::Integral => integral(nu, z),
        Mode::Derivative => {
            let n = op.derivative_index();
            let order = n as f64 - nu;
            let h0 = (z * tol.powf(1.0 / (n as f64 + 2.0))).min(z / (n as f64 + 1.0));
            let mut evaluations = 0;
            let mut diff = |h: f64| -> Result<Complex64> {
                let mut s = c(0.0);
                let mut binom = 1.0;
                for k in 0..=n {
                    let x = z + (0.5 * n as f64 - k as f64) * h;
                    let r = integral(order, x)?;
                    evaluations += r.evaluations;
                    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                    s += r.value * (sign * binom);
                    binom *= (n - k) as f64 / (k + 1) as f64;
                }
                Ok(s / h.powi(n as i32))
            };
            let d = [diff(h0)?, diff(0.5 * h0)?, diff(0.25 * h0)?];
            let r1 = (4.0 * d[1] - d[0]) / 3.0;
            let r2 = (4.0 * d[2] - d[1]) / 3.0;
            let value = (16.0 * r2 - r1) / 15.0;
            let error = (r2 - r1).norm();
            if error > tol * value.norm().max(1e-300) && error > tol {
                return Err(Error::Stencil(format!("difference estimate {error:.3e} exceeds {tol:.1e}")));
            }
            Ok(QuadResult { value, error, evaluations })
        }
    }
}

/// Residual report for `E^g_{a,b}(z) = D^a (z^(g-1) E_{a,b}(z)) / Gamma(g)`
/// taken monomial by monomial.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BridgeAudit {
    /// Power of `z` on the right minus the power on the left, per term.
    pub exponent_offset: Complex64,
    /// Largest relative coefficient gap over the audited terms.
    pub max_residual: f64,
    pub terms: usize,
}

/// Applies the derivative side of the Prabhakar bridge monomial by monomial
/// and reports how far it is from the Prabhakar coefficients
/// `(g)_k / (k! Gamma(a k + b))`.
pub fn prabhakar_bridge_audit(alpha: f64, beta: Complex64, g: Complex64, terms: usize) -> Result<BridgeAudit> {
    if !(g.re > 0.0) {
        return Err(Error::Parameter(format!("bridge needs Re gamma > 0, got {g}")));
    }
    let op = OperatorParams::riemann_liouville(c(alpha), Side::Left, Mode::Derivative);
    let mut worst = 0.0f64;
    let mut offset = c(0.0);
    let mut poch = c(1.0);
    let mut fact = 1.0;
    let inv_g = reciprocal_gamma(g);
    for k in 0..terms {
        let kf = k as f64;
        if k > 0 {
            poch *= g + kf - 1.0;
            fact *= kf;
        }
        let rb = reciprocal_gamma(beta + alpha * kf);
        let want = poch / fact * rb;
        let img = rl_power(&op, g - 1.0 + kf)?;
        let got = img.coefficient * rb * inv_g;
        offset = img.exponent - kf;
        let scale = want.norm().max(got.norm());
        if scale > 0.0 {
            worst = worst.max((want - got).norm() / scale);
        }
    }
    Ok(BridgeAudit { exponent_offset: offset, max_residual: worst, terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foxwright::multiset_eq;
    use std::f64::consts::PI;

    fn mseries(a: &[f64], b: &[f64], alpha: f64, beta: f64) -> SeriesInstance {
        SeriesInstance::MSeries { a: a.iter().map(|x| c(*x)).collect(), b: b.iter().map(|x| c(*x)).collect(), alpha, beta: c(beta) }
    }

    fn kfunction(a: &[f64], b: &[f64], alpha: f64, beta: f64, g: f64) -> SeriesInstance {
        SeriesInstance::KFunction {
            a: a.iter().map(|x| c(*x)).collect(),
            b: b.iter().map(|x| c(*x)).collect(),
            alpha,
            beta: c(beta),
            gamma: c(g),
        }
    }

    fn rl(nu: f64, mode: Mode) -> OperatorParams {
        OperatorParams::riemann_liouville(c(nu), Side::Left, mode)
    }

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol * b.norm().max(1e-300)
    }

    #[test]
    fn rl_monomials() {
        let d = rl_power(&rl(0.5, Mode::Derivative), c(1.0)).unwrap();
        assert!(close(d.coefficient, c(2.0 / PI.sqrt()), 1e-15));
        assert_eq!(d.exponent, c(0.5));
        let i = rl_power(&rl(-1.0, Mode::Derivative), c(2.5)).unwrap();
        assert!(close(i.coefficient, c(1.0 / 3.5), 1e-15));
        assert_eq!(i.exponent, c(3.5));
        let id = rl_power(&rl(0.0, Mode::Derivative), c(1.7)).unwrap();
        assert!(close(id.coefficient, c(1.0), 1e-15));
        // D^2 of z is zero: the lower gamma sits on a pole.
        assert_eq!(rl_power(&rl(2.0, Mode::Derivative), c(1.0)).unwrap().coefficient, c(0.0));
        assert!(matches!(rl_power(&rl(0.5, Mode::Integral), c(-1.5)), Err(Error::Constraint(_))));
    }

    #[test]
    fn rl_semigroup_and_composition() {
        let mu = c(0.8);
        let a = rl_power(&rl(0.3, Mode::Integral), mu).unwrap();
        let ab = rl_power(&rl(0.9, Mode::Integral), a.exponent).unwrap();
        let direct = rl_power(&rl(1.2, Mode::Integral), mu).unwrap();
        assert!(close(a.coefficient * ab.coefficient, direct.coefficient, 1e-14));
        assert!((ab.exponent - direct.exponent).norm() < 1e-15);
        let h = rl_power(&rl(0.5, Mode::Derivative), c(1.0)).unwrap();
        let hh = rl_power(&rl(0.5, Mode::Derivative), h.exponent).unwrap();
        assert!(close(h.coefficient * hh.coefficient, c(1.0), 1e-15));
        assert!(hh.exponent.norm() < 1e-15);
    }

    #[test]
    fn rl_series_appends_parameters() {
        let m = mseries(&[1.3], &[2.1], 0.8, 1.4);
        let r = rl_series(&rl(0.4, Mode::Integral), &m).unwrap();
        assert_eq!(r.series, Some(mseries(&[1.3, 1.0], &[2.1, 1.4], 0.8, 1.4)));
        assert_eq!(r.exponent, c(0.4));
        // coefficient of z^(k+nu) is Gamma(k+1)/Gamma(k+nu+1) times the series coefficient
        let op = PowerWeightedOperand::left(c(1.0), 1.0, 1.0, m.clone());
        for k in 0..20 {
            let img = rl_power(&rl(0.4, Mode::Integral), c(k as f64)).unwrap();
            let want = img.coefficient * op.series_coefficient(k).unwrap();
            assert!(close(r.term(k).unwrap(), want, 1e-13));
        }
        assert!(termwise_residual(&rl(0.4, Mode::Integral), &op, 25).unwrap() < 1e-13);
        // D^nu I^nu is the identity on the first 20 coefficients.
        for k in 0..20 {
            let i = rl_power(&rl(0.4, Mode::Integral), c(k as f64)).unwrap();
            let d = rl_power(&rl(0.4, Mode::Derivative), i.exponent).unwrap();
            assert!(close(i.coefficient * d.coefficient, c(1.0), 1e-13));
        }
        assert!(matches!(rl_series(&rl(1.0, Mode::Derivative), &m), Err(Error::Parameter(_))));
    }

    #[test]
    fn rl_series_matches_quadrature() {
        let m = mseries(&[1.3], &[2.1], 0.8, 1.4);
        let ctl = series_ctl();
        let r = rl_series(&rl(0.4, Mode::Integral), &m).unwrap();
        let z = 0.7;
        let q = rl_quadrature(&rl(0.4, Mode::Integral), |t| series_eval(&m, c(t), &ctl).unwrap().value, z, 1e-12).unwrap();
        assert!(close(r.eval(z, &ctl).unwrap(), q.value, 1e-11));
        let via_series = c(z).powf(0.4) * reciprocal_gamma(c(1.4)) * series_eval(r.series.as_ref().unwrap(), c(z), &ctl).unwrap().value;
        assert!(close(via_series, q.value, 1e-11));
    }

    #[test]
    fn rl_quadrature_values() {
        let z = 1.7;
        let half = rl_quadrature(&rl(0.5, Mode::Integral), |_| c(1.0), z, 1e-12).unwrap();
        assert!(close(half.value, c(2.0 * (z / PI).sqrt()), 1e-12));
        let d = rl_quadrature(&rl(0.5, Mode::Derivative), |t| c(2.0 / PI.sqrt() * t.sqrt()), z, 1e-6).unwrap();
        assert!(close(d.value, c(1.0), 1e-7), "{}", d.value);
        let d2 = rl_quadrature(&rl(1.5, Mode::Derivative), |t| c(t * t), z, 1e-6).unwrap();
        let want = rl_power(&rl(1.5, Mode::Derivative), c(2.0)).unwrap().at(z);
        assert!(close(d2.value, want, 1e-7), "{} {}", d2.value, want);
    }

    fn saigo_example() -> (OperatorParams, PowerWeightedOperand) {
        let op = OperatorParams::saigo(c(0.6), c(0.2), c(0.4), Side::Left, Mode::Integral);
        let operand = PowerWeightedOperand::left(c(1.3), 0.5, 1.0, mseries(&[1.1], &[2.3], 0.7, 1.2));
        (op, operand)
    }

    #[test]
    fn saigo_left_matches_quadrature() {
        let (op, operand) = saigo_example();
        let r = saigo_apply(&op, &operand).unwrap();
        let ctl = series_ctl();
        let v = r.eval(1.0, &ctl).unwrap();
        let q = saigo_quadrature(&op, &operand, 1.0, 1e-10).unwrap();
        assert!(close(v, q.value, 1e-6), "{v} {}", q.value);
        assert!(termwise_residual(&op, &operand, 25).unwrap() < 1e-13);
        for z in [0.5, 2.0] {
            let q = saigo_quadrature(&op, &operand, z, 1e-10).unwrap();
            assert!(close(r.eval(z, &ctl).unwrap(), q.value, 1e-8));
        }
    }

    #[test]
    fn saigo_right_matches_quadrature() {
        let op = OperatorParams::saigo(c(0.7), c(0.9), c(0.5), Side::Right, Mode::Integral);
        let operand = PowerWeightedOperand::right(c(-0.4), 0.8, 1.5, kfunction(&[0.9], &[1.6], 0.6, 1.1, 1.3));
        let r = saigo_apply(&op, &operand).unwrap();
        let ctl = series_ctl();
        for z in [0.7, 1.5] {
            let q = saigo_quadrature(&op, &operand, z, 1e-10).unwrap();
            assert!(close(r.eval(z, &ctl).unwrap(), q.value, 1e-8), "{} {}", r.eval(z, &ctl).unwrap(), q.value);
        }
        assert!(termwise_residual(&op, &operand, 25).unwrap() < 1e-13);
    }

    #[test]
    fn saigo_power_quadrature_and_reductions() {
        // c = 0 leaves the bare power t^(sigma-1).
        let op = OperatorParams::saigo(c(0.8), c(-0.3), c(0.6), Side::Left, Mode::Integral);
        let operand = PowerWeightedOperand::left(c(1.4), 0.0, 1.0, mseries(&[], &[], 1.0, 1.0));
        let q = saigo_quadrature(&op, &operand, 1.3, 1e-12).unwrap();
        let p = saigo_power(&op, c(1.4)).unwrap().at(1.3);
        assert!(close(q.value, p, 1e-11));
        // I^{1,-1,g} of 1 is z.
        let op = OperatorParams::saigo(c(1.0), c(-1.0), c(0.7), Side::Left, Mode::Integral);
        assert!(close(saigo_power(&op, c(1.0)).unwrap().at(2.5), c(2.5), 1e-15));
        // beta = -alpha is the Riemann-Liouville integral.
        let (_, operand) = saigo_example();
        let s = saigo_apply(&OperatorParams::saigo(c(0.6), c(-0.6), c(0.4), Side::Left, Mode::Integral), &operand).unwrap();
        let r = apply(&rl(0.6, Mode::Integral), &operand).unwrap();
        assert!((s.exponent - r.exponent).norm() < 1e-15);
        for n in 0..20 {
            assert!(close(s.term(n).unwrap(), r.term(n).unwrap(), 1e-13));
        }
        let ctl = series_ctl();
        let qr = rl_quadrature(&rl(0.6, Mode::Integral), |t| operand.eval(t, &ctl).unwrap(), 0.9, 1e-12).unwrap();
        let qs = saigo_quadrature(&OperatorParams::saigo(c(0.6), c(-0.6), c(0.4), Side::Left, Mode::Integral), &operand, 0.9, 1e-12).unwrap();
        assert!(close(qs.value, qr.value, 1e-10));
    }

    #[test]
    fn k_function_with_unit_parameters_is_m_series() {
        let op = OperatorParams::saigo(c(0.6), c(0.2), c(0.4), Side::Left, Mode::Integral);
        let k = PowerWeightedOperand::left(c(1.3), 0.5, 0.9, kfunction(&[1.1], &[2.3], 0.7, 1.0, 1.0));
        let m = PowerWeightedOperand::left(c(1.3), 0.5, 0.9, mseries(&[1.1], &[2.3], 0.7, 1.0));
        let (rk, rm) = (saigo_apply(&op, &k).unwrap(), saigo_apply(&op, &m).unwrap());
        assert!(multiset_eq(&rk.spec.upper, &rm.spec.upper, 1e-15));
        assert!(multiset_eq(&rk.spec.lower, &rm.spec.lower, 1e-15));
        assert!(close(rk.coefficient, rm.coefficient, 1e-15));
    }

    fn sm(a: f64, ap: f64, b: f64, bp: f64, g: f64, side: Side, mode: Mode) -> OperatorParams {
        OperatorParams::saigo_maeda(c(a), c(ap), c(b), c(bp), c(g), side, mode)
    }

    #[test]
    fn saigo_maeda_power_cases() {
        let op = sm(0.0, 0.0, 0.0, 0.0, 0.7, Side::Left, Mode::Integral);
        let p = saigo_maeda_power(&op, c(1.0)).unwrap();
        assert!(close(p.coefficient, reciprocal_gamma(c(1.7)), 1e-15));
        assert_eq!(p.exponent, c(0.7));
        // alpha' = 0 is Saigo with (gamma, alpha - gamma, -beta).
        for (side, rho) in [(Side::Left, 1.6), (Side::Right, -0.9)] {
            let a = saigo_maeda_power(&sm(0.5, 0.0, 0.3, 0.8, 0.9, side, Mode::Integral), c(rho)).unwrap();
            let b = saigo_power(&OperatorParams::saigo(c(0.9), c(-0.4), c(-0.3), side, Mode::Integral), c(rho));
            if side == Side::Left {
                let b = b.unwrap();
                assert!(close(a.coefficient, b.coefficient, 1e-14));
                assert!((a.exponent - b.exponent).norm() < 1e-15);
            } else {
                // The right Saigo operator carries the extra x^(-alpha-beta).
                let b = saigo_right(c(0.9), c(-0.4), c(-0.3), c(rho)).unwrap();
                assert!(close(a.coefficient, b.coefficient, 1e-14));
                assert!((a.exponent - (b.exponent + c(0.9 - 0.4))).norm() < 1e-14);
            }
        }
        assert!(matches!(saigo_maeda_power(&sm(0.5, 0.2, 0.3, 0.1, 0.9, Side::Left, Mode::Integral), c(-0.2)), Err(Error::Constraint(_))));
        assert!(matches!(saigo_maeda_power(&sm(0.5, 0.2, 0.3, 0.1, 0.9, Side::Right, Mode::Integral), c(2.0)), Err(Error::Constraint(_))));
    }

    #[test]
    fn saigo_maeda_termwise() {
        let m = mseries(&[1.1, 0.7], &[2.3], 0.7, 1.2);
        let k = kfunction(&[1.1], &[2.3, 1.9], 0.9, 1.4, 0.6);
        for inner in [m, k] {
            for mode in [Mode::Integral, Mode::Derivative] {
                let left = sm(0.4, 0.3, 0.5, 0.2, 1.3, Side::Left, mode);
                let operand = PowerWeightedOperand::left(c(1.8), 0.4, 0.8, inner.clone());
                assert!(termwise_residual(&left, &operand, 26).unwrap() < 1e-12, "{mode:?} left");
                let right = sm(0.4, 0.3, 0.5, 0.2, 1.3, Side::Right, mode);
                let operand = PowerWeightedOperand::right(c(-1.2), 0.4, 0.8, inner.clone());
                assert!(termwise_residual(&right, &operand, 26).unwrap() < 1e-12, "{mode:?} right");
            }
        }
    }

    #[test]
    fn saigo_maeda_reduces_to_saigo() {
        let operand = PowerWeightedOperand::left(c(1.3), 0.5, 0.9, mseries(&[1.1], &[2.3], 0.7, 1.2));
        let r = saigo_maeda_apply(&sm(0.5, 0.0, 0.3, 0.8, 0.9, Side::Left, Mode::Integral), &operand).unwrap();
        let s = saigo_apply(&OperatorParams::saigo(c(0.9), c(-0.4), c(-0.3), Side::Left, Mode::Integral), &operand).unwrap();
        let (ru, rl_) = cancel_common(&r.spec, 1e-14);
        let (su, sl) = cancel_common(&s.spec, 1e-14);
        assert!(multiset_eq(&ru, &su, 1e-14) && multiset_eq(&rl_, &sl, 1e-14));
        assert!((r.exponent - s.exponent).norm() < 1e-15);
        // With beta' = -alpha' the chain reaches Riemann-Liouville: gamma = nu, alpha = 0.
        let r = saigo_maeda_apply(&sm(0.0, 0.0, 0.3, 0.0, 0.9, Side::Left, Mode::Integral), &operand).unwrap();
        let q = apply(&rl(0.9, Mode::Integral), &operand).unwrap();
        let (ru, rl_) = cancel_common(&r.spec, 1e-14);
        let (qu, ql) = cancel_common(&q.spec, 1e-14);
        assert!(multiset_eq(&ru, &qu, 1e-14) && multiset_eq(&rl_, &ql, 1e-14));
    }

    #[test]
    fn derivative_is_continued_integral() {
        let operand = PowerWeightedOperand::left(c(1.8), 0.4, 0.8, mseries(&[1.1], &[2.3], 0.7, 1.2));
        let d = saigo_maeda_apply(&sm(0.4, 0.3, 0.5, 0.2, 1.3, Side::Left, Mode::Derivative), &operand).unwrap();
        for n in 0..10 {
            let rho = operand.monomial_rho(n);
            let p = Sm { a: c(-0.3), ap: c(-0.4), b: c(-0.2), bp: c(-0.5), g: c(-1.3) };
            let img = sm_left(&p, rho).unwrap();
            assert!(close(d.term(n).unwrap(), img.coefficient * operand.series_coefficient(n).unwrap(), 1e-12));
        }
    }

    #[test]
    fn operand_and_operator_checks() {
        let (op, operand) = saigo_example();
        let mut wrong = operand.clone();
        wrong.inverse = true;
        assert!(matches!(saigo_apply(&op, &wrong), Err(Error::Parameter(_))));
        let bad = PowerWeightedOperand::left(c(1.0), 1.0, 1.0, mseries(&[], &[-2.0], 1.0, 1.0));
        assert!(matches!(saigo_apply(&op, &bad), Err(Error::Parameter(_))));
        let neg = OperatorParams::saigo(c(-0.5), c(0.2), c(0.4), Side::Left, Mode::Integral);
        assert!(matches!(saigo_quadrature(&neg, &operand, 1.0, 1e-8), Err(Error::Singularity(_))));
        assert!(saigo_apply(&neg, &operand).is_err());
        assert_eq!(OperatorParams::saigo(c(1.3), c(0.0), c(0.0), Side::Left, Mode::Derivative).derivative_index(), 2);
    }

    #[test]
    fn prabhakar_bridge_is_reported() {
        let a = prabhakar_bridge_audit(0.5, c(1.0), c(1.5), 20).unwrap();
        assert_eq!(a.terms, 20);
        assert!((a.exponent_offset - c(1.5 - 1.0 - 0.5)).norm() < 1e-15);
        assert!(a.max_residual.is_finite());
    }
}
