//! Parsers for command-line literals.
//!
//! | input | syntax | example |
//! |-------|--------|---------|
//! | complex literal | `a`, `bi`, `a+bi`, `a-bi` | `1.5-2e-3i` |
//! | complex list | literals joined by `,` | `1,2+i,0.5` |
//! | grid | `start:stop:count[:angle]` | `0:5:11`, `0:10:21:1.5708` |
//! | operand | `kind:key=value;...` | `mseries:a=1.1;b=2.3;alpha=0.7;beta=1.2` |
//! | operator | `family-side` | `saigo-left`, `sm-right`, `rl-left` |
//!
//! Every parser returns [`ParseError`] on malformed input and never panics.

use ml_fraccalc::frac::{PowerWeightedOperand, Side};
use ml_fraccalc::instances::SeriesInstance;
use num_complex::Complex64;
use thiserror::Error;

/// Largest accepted grid size.
pub const MAX_GRID_COUNT: usize = 1_000_000;

/// A malformed literal.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid complex literal {0:?}")]
    Complex(String),
    #[error("invalid grid {0:?}: {1}")]
    Grid(String, String),
    #[error("invalid operand {0:?}: {1}")]
    Operand(String, String),
    #[error("invalid operator {0:?}")]
    Operator(String),
    #[error("invalid value for {0}: {1}")]
    Value(String, String),
}

fn real(s: &str) -> Option<f64> {
    let s = s.trim();
    // f64::from_str also takes "inf" and "nan"; only finite decimals are literals here.
    if s.is_empty() || s.chars().any(|ch| ch.is_ascii_alphabetic() && ch != 'e' && ch != 'E') {
        return None;
    }
    s.parse::<f64>().ok().filter(|x| x.is_finite())
}

fn imaginary(s: &str) -> Option<f64> {
    match s {
        "" | "+" => Some(1.0),
        "-" => Some(-1.0),
        _ => real(s),
    }
}

/// Parses `a`, `bi`, `a+bi` or `a-bi`, with optional exponents.
pub fn parse_complex(input: &str) -> Result<Complex64, ParseError> {
    let err = || ParseError::Complex(input.to_string());
    let s = input.trim();
    let Some(body) = s.strip_suffix('i') else {
        return real(s).map(|x| Complex64::new(x, 0.0)).ok_or_else(err);
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    match split {
        Some(k) => {
            let re = real(&body[..k]).ok_or_else(err)?;
            let im = imaginary(&body[k..]).ok_or_else(err)?;
            Ok(Complex64::new(re, im))
        }
        None => imaginary(body).map(|im| Complex64::new(0.0, im)).ok_or_else(err),
    }
}

/// Parses a comma separated list of complex literals; the empty string is
/// the empty list.
pub fn parse_complex_list(input: &str) -> Result<Vec<Complex64>, ParseError> {
    if input.trim().is_empty() {
        return Ok(Vec::new());
    }
    input.split(',').map(parse_complex).collect()
}

/// Parses a finite real number.
pub fn parse_real(input: &str) -> Result<f64, ParseError> {
    real(input).ok_or_else(|| ParseError::Complex(input.to_string()))
}

/// Evaluation points `t * direction` for `t` equally spaced on
/// `[start, stop]`. A parsed `angle` gives `direction = e^(i angle)`, no angle
/// the real line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
    pub direction: Complex64,
}

impl GridSpec {
    /// A single point, kept exact.
    pub fn point(z: Complex64) -> Self {
        GridSpec { start: 1.0, stop: 1.0, count: 1, direction: z }
    }

    /// Parses `start:stop:count[:angle]`.
    pub fn parse(input: &str) -> Result<Self, ParseError> {
        let err = |why: &str| ParseError::Grid(input.to_string(), why.to_string());
        let parts: Vec<&str> = input.trim().split(':').collect();
        if !(3..=4).contains(&parts.len()) {
            return Err(err("expected start:stop:count[:angle]"));
        }
        let start = real(parts[0]).ok_or_else(|| err("start is not a finite number"))?;
        let stop = real(parts[1]).ok_or_else(|| err("stop is not a finite number"))?;
        let count: usize = parts[2].trim().parse().map_err(|_| err("count is not a positive integer"))?;
        if count == 0 || count > MAX_GRID_COUNT {
            return Err(err("count must lie in 1..=1000000"));
        }
        let direction = match parts.get(3) {
            Some(a) => Complex64::from_polar(1.0, real(a).ok_or_else(|| err("angle is not a finite number"))?),
            None => Complex64::new(1.0, 0.0),
        };
        Ok(GridSpec { start, stop, count, direction })
    }

    /// The grid points in order.
    pub fn points(&self) -> Vec<Complex64> {
        (0..self.count)
            .map(|k| {
                let t = if self.count == 1 {
                    self.start
                } else {
                    self.start + (self.stop - self.start) * k as f64 / (self.count - 1) as f64
                };
                self.direction * t
            })
            .collect()
    }
}

/// Parses `mseries:...` or `kfunction:...` into a power weighted operand.
///
/// | key | meaning | default |
/// |-----|---------|---------|
/// | `a`, `b` | upper and lower Pochhammer lists | empty |
/// | `alpha` | real weight of `Gamma(alpha n + beta)` | required |
/// | `beta` | complex shift of `Gamma(alpha n + beta)` | required |
/// | `gamma` | K-function Pochhammer `(gamma)_n` | required for `kfunction` |
/// | `sigma` | power weight `t^(sigma-1)` | `1` |
/// | `c`, `mu` | argument `c t^mu` | `1`, `1` |
///
/// `side` selects `c t^mu` (left) or `c t^(-mu)` (right).
pub fn parse_operand(input: &str, side: Side) -> Result<PowerWeightedOperand, ParseError> {
    let err = |why: String| ParseError::Operand(input.to_string(), why);
    let (kind, rest) = input.trim().split_once(':').ok_or_else(|| err("expected kind:key=value;...".into()))?;
    let mut a = None;
    let mut b = None;
    let mut alpha = None;
    let mut beta = None;
    let mut gamma = None;
    let mut sigma = None;
    let mut scale = None;
    let mut mu = None;
    for item in rest.split(';').filter(|s| !s.trim().is_empty()) {
        let (key, value) = item.split_once('=').ok_or_else(|| err(format!("{item:?} is not key=value")))?;
        let key = key.trim();
        let dup = || err(format!("{key} given twice"));
        let bad = |e: ParseError| err(format!("{key}: {e}"));
        match key {
            "a" if a.is_none() => a = Some(parse_complex_list(value).map_err(bad)?),
            "b" if b.is_none() => b = Some(parse_complex_list(value).map_err(bad)?),
            "alpha" if alpha.is_none() => alpha = Some(parse_real(value).map_err(bad)?),
            "beta" if beta.is_none() => beta = Some(parse_complex(value).map_err(bad)?),
            "gamma" if gamma.is_none() => gamma = Some(parse_complex(value).map_err(bad)?),
            "sigma" if sigma.is_none() => sigma = Some(parse_complex(value).map_err(bad)?),
            "c" if scale.is_none() => scale = Some(parse_real(value).map_err(bad)?),
            "mu" if mu.is_none() => mu = Some(parse_real(value).map_err(bad)?),
            "a" | "b" | "alpha" | "beta" | "gamma" | "sigma" | "c" | "mu" => return Err(dup()),
            other => return Err(err(format!("unknown key {other:?}"))),
        }
    }
    let alpha = alpha.ok_or_else(|| err("alpha is required".into()))?;
    let beta = beta.ok_or_else(|| err("beta is required".into()))?;
    let (a, b) = (a.unwrap_or_default(), b.unwrap_or_default());
    let inner = match kind.trim() {
        "mseries" => {
            if gamma.is_some() {
                return Err(err("gamma belongs to kfunction".into()));
            }
            SeriesInstance::MSeries { a, b, alpha, beta }
        }
        "kfunction" => {
            let gamma = gamma.ok_or_else(|| err("gamma is required".into()))?;
            SeriesInstance::KFunction { a, b, alpha, beta, gamma }
        }
        other => return Err(err(format!("unknown kind {other:?}"))),
    };
    let sigma = sigma.unwrap_or(Complex64::new(1.0, 0.0));
    let (scale, mu) = (scale.unwrap_or(1.0), mu.unwrap_or(1.0));
    Ok(match side {
        Side::Left => PowerWeightedOperand::left(sigma, scale, mu, inner),
        Side::Right => PowerWeightedOperand::right(sigma, scale, mu, inner),
    })
}

/// Operator family named on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    RiemannLiouville,
    Saigo,
    SaigoMaeda,
}

/// Parses `rl-left`, `saigo-right`, `sm-left`, `saigo-maeda-right` and so on.
pub fn parse_operator(input: &str) -> Result<(Family, Side), ParseError> {
    let s = input.trim();
    let err = || ParseError::Operator(input.to_string());
    let (family, side) = s.rsplit_once('-').ok_or_else(err)?;
    let family = match family {
        "rl" | "riemann-liouville" => Family::RiemannLiouville,
        "saigo" => Family::Saigo,
        "sm" | "saigo-maeda" => Family::SaigoMaeda,
        _ => return Err(err()),
    };
    let side = match side {
        "left" => Side::Left,
        "right" => Side::Right,
        _ => return Err(err()),
    };
    Ok((family, side))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn complex_literals() {
        assert_eq!(parse_complex("1.5").unwrap(), z(1.5, 0.0));
        assert_eq!(parse_complex(" -2 ").unwrap(), z(-2.0, 0.0));
        assert_eq!(parse_complex("3i").unwrap(), z(0.0, 3.0));
        assert_eq!(parse_complex("-i").unwrap(), z(0.0, -1.0));
        assert_eq!(parse_complex("i").unwrap(), z(0.0, 1.0));
        assert_eq!(parse_complex("1+2i").unwrap(), z(1.0, 2.0));
        assert_eq!(parse_complex("1-i").unwrap(), z(1.0, -1.0));
        assert_eq!(parse_complex("1e-3-2.5e+2i").unwrap(), z(1e-3, -250.0));
        assert_eq!(parse_complex("1e+5i").unwrap(), z(0.0, 1e5));
        assert_eq!(parse_complex("-1e-2+1e-2i").unwrap(), z(-0.01, 0.01));
        for bad in ["", "i+1", "1+", "inf", "nan", "1++2i", "1+2", "2ii", "e", "1e", "--1", "1+infi"] {
            assert!(parse_complex(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn grids() {
        let g = GridSpec::parse("0:5:11").unwrap();
        assert_eq!(g.points().len(), 11);
        assert_eq!(g.points()[2], z(1.0, 0.0));
        let r = GridSpec::parse("0:2:3:1.5707963267948966").unwrap();
        assert!((r.points()[2] - z(0.0, 2.0)).norm() < 1e-15);
        assert_eq!(GridSpec::parse("3:9:1").unwrap().points(), vec![z(3.0, 0.0)]);
        for bad in ["0:1", "0:1:0", "0:1:-2", "a:1:2", "0:1:2:3:4", "0:1:2000000", "0:inf:2"] {
            assert!(GridSpec::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn operands() {
        let o = parse_operand("mseries:a=1.1;b=2.3;alpha=0.7;beta=1.2;sigma=1.3;c=0.5", Side::Left).unwrap();
        assert_eq!(o.sigma, z(1.3, 0.0));
        assert_eq!(o.scale, 0.5);
        assert!(!o.inverse);
        assert_eq!(
            o.inner,
            SeriesInstance::MSeries { a: vec![z(1.1, 0.0)], b: vec![z(2.3, 0.0)], alpha: 0.7, beta: z(1.2, 0.0) }
        );
        let k = parse_operand("kfunction:a=;b=2,3;alpha=1;beta=1;gamma=0.5+i", Side::Right).unwrap();
        assert!(k.inverse);
        assert!(matches!(k.inner, SeriesInstance::KFunction { .. }));
        for bad in [
            "mseries",
            "mseries:alpha=1",
            "mseries:alpha=1;beta=1;alpha=2",
            "mseries:alpha=1;beta=1;gamma=1",
            "kfunction:alpha=1;beta=1",
            "wright:alpha=1;beta=1",
            "mseries:alpha=1;beta=1;zeta=2",
            "mseries:alpha=1;beta",
        ] {
            assert!(parse_operand(bad, Side::Left).is_err(), "{bad}");
        }
    }

    #[test]
    fn operators() {
        assert_eq!(parse_operator("saigo-left").unwrap(), (Family::Saigo, Side::Left));
        assert_eq!(parse_operator("saigo-maeda-right").unwrap(), (Family::SaigoMaeda, Side::Right));
        assert_eq!(parse_operator("rl-left").unwrap(), (Family::RiemannLiouville, Side::Left));
        assert!(parse_operator("saigo").is_err());
        assert!(parse_operator("weyl-left").is_err());
    }
}
