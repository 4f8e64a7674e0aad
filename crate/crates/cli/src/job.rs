//! Command-line flags and their validated form.
//!
//! | command | required flags | output |
//! |---------|----------------|--------|
//! | `eval` | `--fn`, parameters, `--z` or `--grid` | `(z, value, terms, status)` rows |
//! | `reduce` | `--fn`, parameters | Fox-Wright parameter lists |
//! | `frac` | `--op`, operator parameters, `--operand` | image coefficient, exponent and lists |
//! | `verify` | `--suite` | one report per identity |
//! | `table` | `--fn`, parameters, `--vary`, `--z` or `--grid` | parameter by `z` matrix |
//!
//! Function identifiers and their parameters:
//!
//! | `--fn` | parameters |
//! |--------|------------|
//! | `ml1` | `alpha` |
//! | `ml2` | `alpha beta` |
//! | `ml3` | `alpha beta gamma` |
//! | `ml4` | `alpha beta gamma delta` |
//! | `ml6` | `alpha beta gamma delta r s` |
//! | `kilbas-saigo` | `alpha m l` |
//! | `multi-index` | `alphas betas` |
//! | `mseries` | `a b alpha beta` |
//! | `kfunction` | `a b alpha beta gamma` |
//! | `wright` | `alpha beta` |
//! | `bessel-wright` | `rho mu` |
//! | `lommel-wright` | `rho lambda mu nu` |
//! | `multiple-ml` | `alpha beta mu` |

use crate::parse::{
    parse_complex, parse_complex_list, parse_operand, parse_operator, parse_real, Family, GridSpec, ParseError,
};
use crate::suites::Suite;
use clap::{Args, Parser, Subcommand, ValueEnum};
use ml_fraccalc::frac::{Mode, OperatorParams, PowerWeightedOperand};
use ml_fraccalc::instances::SeriesInstance;
use ml_fraccalc::mlfamily::MLParams;
use num_complex::Complex64;
use std::collections::BTreeMap;
use std::path::PathBuf;

/// Series tolerance used when `--tol` is absent.
pub const DEFAULT_TOL: f64 = 1e-15;

/// Seed used when `--seed` is absent.
pub const DEFAULT_SEED: u64 = 7;

#[derive(Debug, Parser)]
#[command(name = "ml-fraccalc", version, about = "Mittag-Leffler type functions and fractional operators")]
pub struct Cli {
    #[command(subcommand)]
    pub command: CommandArgs,
}

#[derive(Debug, Subcommand)]
pub enum CommandArgs {
    /// Evaluate a function on a grid.
    Eval(EvalArgs),
    /// Print the Fox-Wright form of a function.
    Reduce(ReduceArgs),
    /// Apply a fractional operator to a power weighted series.
    Frac(FracArgs),
    /// Run an identity suite.
    Verify(VerifyArgs),
    /// Tabulate a function over a parameter and a grid.
    Table(TableArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Integral,
    Derivative,
}

#[derive(Debug, Clone, Default, Args)]
pub struct ParamArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub delta: Option<String>,
    #[arg(long = "alpha-p", allow_hyphen_values = true)]
    pub alpha_p: Option<String>,
    #[arg(long = "beta-p", allow_hyphen_values = true)]
    pub beta_p: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub nu: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub rho: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub r: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub l: Option<String>,
    /// Upper Pochhammer list, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    /// Lower Pochhammer list, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    /// Multi-index weights, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub alphas: Option<String>,
    /// Multi-index shifts, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub betas: Option<String>,
}

impl ParamArgs {
    fn map(&self) -> BTreeMap<String, String> {
        let pairs = [
            ("alpha", &self.alpha),
            ("beta", &self.beta),
            ("gamma", &self.gamma),
            ("delta", &self.delta),
            ("alpha-p", &self.alpha_p),
            ("beta-p", &self.beta_p),
            ("nu", &self.nu),
            ("mu", &self.mu),
            ("rho", &self.rho),
            ("lambda", &self.lambda),
            ("r", &self.r),
            ("s", &self.s),
            ("m", &self.m),
            ("l", &self.l),
            ("a", &self.a),
            ("b", &self.b),
            ("alphas", &self.alphas),
            ("betas", &self.betas),
        ];
        pairs.iter().filter_map(|(k, v)| v.as_ref().map(|v| (k.to_string(), v.trim().to_string()))).collect()
    }
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Series tolerance, or the pass threshold of every verify block.
    #[arg(long, allow_hyphen_values = true)]
    pub tol: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Write the output here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct PointArgs {
    /// A single complex point.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "grid")]
    pub z: Option<String>,
    /// `start:stop:count[:angle]`.
    #[arg(long, allow_hyphen_values = true)]
    pub grid: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct EvalArgs {
    #[arg(long = "fn")]
    pub function: String,
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub points: PointArgs,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct ReduceArgs {
    #[arg(long = "fn")]
    pub function: String,
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct FracArgs {
    /// `rl-left`, `saigo-left`, `saigo-right`, `sm-left` or `sm-right`.
    #[arg(long)]
    pub op: String,
    #[arg(long, value_enum, default_value = "integral")]
    pub mode: ModeArg,
    /// `mseries:...` or `kfunction:...`.
    #[arg(long, allow_hyphen_values = true)]
    pub operand: String,
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub points: PointArgs,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Suite identifier or `all`.
    #[arg(long)]
    pub suite: String,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    #[arg(long = "fn")]
    pub function: String,
    /// `name=start:stop:count` for the varied parameter.
    #[arg(long, allow_hyphen_values = true)]
    pub vary: String,
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub points: PointArgs,
    #[command(flatten)]
    pub common: CommonArgs,
}

/// A function selected by `--fn`.
#[derive(Debug, Clone, PartialEq)]
pub enum Function {
    Ml(MLParams),
    Series(SeriesInstance),
}

fn value_err(key: &str, e: ParseError) -> ParseError {
    ParseError::Value(key.to_string(), e.to_string())
}

struct Params<'a> {
    map: &'a BTreeMap<String, String>,
    used: Vec<&'static str>,
}

impl<'a> Params<'a> {
    fn raw(&mut self, key: &'static str) -> Result<&'a str, ParseError> {
        self.used.push(key);
        self.map
            .get(key)
            .map(|s| s.as_str())
            .ok_or_else(|| ParseError::Value(key.to_string(), "missing".into()))
    }
    fn complex(&mut self, key: &'static str) -> Result<Complex64, ParseError> {
        parse_complex(self.raw(key)?).map_err(|e| value_err(key, e))
    }
    fn real(&mut self, key: &'static str) -> Result<f64, ParseError> {
        parse_real(self.raw(key)?).map_err(|e| value_err(key, e))
    }
    fn list(&mut self, key: &'static str) -> Result<Vec<Complex64>, ParseError> {
        self.used.push(key);
        match self.map.get(key) {
            Some(s) => parse_complex_list(s).map_err(|e| value_err(key, e)),
            None => Ok(Vec::new()),
        }
    }
    fn finish(self) -> Result<(), ParseError> {
        match self.map.keys().find(|k| !self.used.contains(&k.as_str())) {
            Some(k) => Err(ParseError::Value(k.clone(), "not a parameter of this function".into())),
            None => Ok(()),
        }
    }
}

/// Builds the function `id` from its parameter map.
pub fn build_function(id: &str, map: &BTreeMap<String, String>) -> Result<Function, ParseError> {
    let mut p = Params { map, used: Vec::new() };
    let f = match id {
        "ml1" => Function::Ml(MLParams::One { alpha: p.complex("alpha")? }),
        "ml2" => Function::Ml(MLParams::Two { alpha: p.complex("alpha")?, beta: p.complex("beta")? }),
        "ml3" => Function::Ml(MLParams::Three {
            alpha: p.complex("alpha")?,
            beta: p.complex("beta")?,
            gamma: p.complex("gamma")?,
        }),
        "ml4" => Function::Ml(MLParams::Four {
            alpha: p.complex("alpha")?,
            beta: p.complex("beta")?,
            gamma: p.complex("gamma")?,
            delta: p.complex("delta")?,
        }),
        "ml6" => Function::Ml(MLParams::Six {
            alpha: p.complex("alpha")?,
            beta: p.complex("beta")?,
            gamma: p.complex("gamma")?,
            delta: p.complex("delta")?,
            r: p.real("r")?,
            s: p.real("s")?,
        }),
        "kilbas-saigo" => Function::Ml(MLParams::KilbasSaigo { alpha: p.real("alpha")?, m: p.real("m")?, l: p.real("l")? }),
        "multi-index" => {
            let alphas = p.list("alphas")?;
            if alphas.iter().any(|a| a.im != 0.0) {
                return Err(ParseError::Value("alphas".into(), "weights must be real".into()));
            }
            Function::Ml(MLParams::MultiIndex { alphas: alphas.iter().map(|a| a.re).collect(), betas: p.list("betas")? })
        }
        "mseries" => Function::Series(SeriesInstance::MSeries {
            a: p.list("a")?,
            b: p.list("b")?,
            alpha: p.real("alpha")?,
            beta: p.complex("beta")?,
        }),
        "kfunction" => Function::Series(SeriesInstance::KFunction {
            a: p.list("a")?,
            b: p.list("b")?,
            alpha: p.real("alpha")?,
            beta: p.complex("beta")?,
            gamma: p.complex("gamma")?,
        }),
        "wright" => Function::Series(SeriesInstance::WrightPhi { alpha: p.real("alpha")?, beta: p.complex("beta")? }),
        "bessel-wright" => Function::Series(SeriesInstance::BesselWright { rho: p.complex("rho")?, mu: p.real("mu")? }),
        "lommel-wright" => Function::Series(SeriesInstance::LommelWright {
            rho: p.complex("rho")?,
            lambda: p.complex("lambda")?,
            mu: p.real("mu")?,
            nu: p.real("nu")?,
        }),
        "multiple-ml" => Function::Series(SeriesInstance::MultipleML {
            alpha: p.real("alpha")?,
            beta: p.complex("beta")?,
            mu: p.real("mu")?,
        }),
        other => return Err(ParseError::Value("fn".into(), format!("unknown function {other:?}"))),
    };
    p.finish()?;
    let checked = match &f {
        Function::Ml(m) => m.validate(),
        Function::Series(s) => s.validate(),
    };
    checked.map_err(|e| ParseError::Value("fn".into(), e.to_string()))?;
    Ok(f)
}

/// Builds the operator selected by `--op` and `--mode`.
pub fn build_operator(op: &str, mode: ModeArg, map: &BTreeMap<String, String>) -> Result<OperatorParams, ParseError> {
    let (family, side) = parse_operator(op)?;
    let mode = match mode {
        ModeArg::Integral => Mode::Integral,
        ModeArg::Derivative => Mode::Derivative,
    };
    let mut p = Params { map, used: Vec::new() };
    let op = match family {
        Family::RiemannLiouville => OperatorParams::riemann_liouville(p.complex("nu")?, side, mode),
        Family::Saigo => OperatorParams::saigo(p.complex("alpha")?, p.complex("beta")?, p.complex("gamma")?, side, mode),
        Family::SaigoMaeda => OperatorParams::saigo_maeda(
            p.complex("alpha")?,
            p.complex("alpha-p")?,
            p.complex("beta")?,
            p.complex("beta-p")?,
            p.complex("gamma")?,
            side,
            mode,
        ),
    };
    p.finish()?;
    op.validate().map_err(|e| ParseError::Value("op".into(), e.to_string()))?;
    Ok(op)
}

/// The validated work of one invocation.
#[derive(Debug, Clone, PartialEq)]
pub enum Task {
    Eval { function: Function, grid: GridSpec },
    Reduce { function: Function },
    Frac { op: OperatorParams, operand: PowerWeightedOperand, grid: Option<GridSpec> },
    Verify { suites: Vec<Suite> },
    Table { id: String, params: BTreeMap<String, String>, name: String, values: Vec<Complex64>, grid: GridSpec },
}

/// A parsed and validated invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct JobSpec {
    pub command: &'static str,
    pub task: Task,
    /// `--tol` if given; series tolerance for evaluations, block threshold for `verify`.
    pub tol: Option<f64>,
    pub format: Format,
    pub seed: u64,
    pub out: Option<PathBuf>,
    /// Flags as given, echoed into the output.
    pub echo: BTreeMap<String, String>,
}

/// Why the arguments were rejected.
#[derive(Debug)]
pub enum JobError {
    /// Usage error, `--help` or `--version` from the flag parser.
    Flags(clap::Error),
    /// A flag value is malformed or inconsistent.
    Value(ParseError),
}

impl From<ParseError> for JobError {
    fn from(e: ParseError) -> Self {
        JobError::Value(e)
    }
}

fn tolerance(s: &Option<String>) -> Result<Option<f64>, ParseError> {
    let Some(s) = s else { return Ok(None) };
    let t = parse_real(s).map_err(|e| value_err("tol", e))?;
    if !(t > 0.0 && t <= 1e-2) {
        return Err(ParseError::Value("tol".into(), format!("{t} outside (0, 1e-2]")));
    }
    Ok(Some(t))
}

fn grid(points: &PointArgs) -> Result<Option<GridSpec>, ParseError> {
    match (&points.z, &points.grid) {
        (Some(z), _) => Ok(Some(GridSpec::point(parse_complex(z).map_err(|e| value_err("z", e))?))),
        (None, Some(g)) => Ok(Some(GridSpec::parse(g)?)),
        (None, None) => Ok(None),
    }
}

fn require_grid(points: &PointArgs) -> Result<GridSpec, ParseError> {
    grid(points)?.ok_or_else(|| ParseError::Value("z".into(), "give --z or --grid".into()))
}

impl JobSpec {
    /// Parses `argv` (including the program name).
    pub fn from_args<I, T>(argv: I) -> Result<JobSpec, JobError>
    where
        I: IntoIterator<Item = T>,
        T: Into<std::ffi::OsString> + Clone,
    {
        let cli = Cli::try_parse_from(argv).map_err(JobError::Flags)?;
        Ok(JobSpec::from_cli(cli)?)
    }

    fn from_cli(cli: Cli) -> Result<JobSpec, ParseError> {
        let mut echo = BTreeMap::new();
        fn put(echo: &mut BTreeMap<String, String>, k: &str, v: &Option<String>) {
            if let Some(v) = v {
                echo.insert(k.to_string(), v.clone());
            }
        }
        let (command, task, common, seed) = match cli.command {
            CommandArgs::Eval(a) => {
                let map = a.params.map();
                let function = build_function(&a.function, &map)?;
                let grid = require_grid(&a.points)?;
                put(&mut echo, "fn", &Some(a.function.clone()));
                put(&mut echo, "z", &a.points.z);
                put(&mut echo, "grid", &a.points.grid);
                echo.extend(map);
                ("eval", Task::Eval { function, grid }, a.common, DEFAULT_SEED)
            }
            CommandArgs::Reduce(a) => {
                let map = a.params.map();
                let function = build_function(&a.function, &map)?;
                put(&mut echo, "fn", &Some(a.function.clone()));
                echo.extend(map);
                ("reduce", Task::Reduce { function }, a.common, DEFAULT_SEED)
            }
            CommandArgs::Frac(a) => {
                let map = a.params.map();
                let op = build_operator(&a.op, a.mode, &map)?;
                let operand = parse_operand(&a.operand, op.side)?;
                operand.validate().map_err(|e| ParseError::Operand(a.operand.clone(), e.to_string()))?;
                let grid = grid(&a.points)?;
                put(&mut echo, "op", &Some(a.op.clone()));
                put(&mut echo, "mode", &Some(format!("{:?}", a.mode).to_lowercase()));
                put(&mut echo, "operand", &Some(a.operand.clone()));
                put(&mut echo, "z", &a.points.z);
                put(&mut echo, "grid", &a.points.grid);
                echo.extend(map);
                ("frac", Task::Frac { op, operand, grid }, a.common, DEFAULT_SEED)
            }
            CommandArgs::Verify(a) => {
                let suites = Suite::parse_list(&a.suite)?;
                put(&mut echo, "suite", &Some(a.suite.clone()));
                put(&mut echo, "seed", &Some(a.seed.to_string()));
                ("verify", Task::Verify { suites }, a.common, a.seed)
            }
            CommandArgs::Table(a) => {
                let map = a.params.map();
                let (name, range) = a
                    .vary
                    .split_once('=')
                    .ok_or_else(|| ParseError::Value("vary".into(), "expected name=start:stop:count".into()))?;
                let name = name.trim().to_string();
                if map.contains_key(&name) {
                    return Err(ParseError::Value("vary".into(), format!("{name} is also fixed")));
                }
                let values = GridSpec::parse(range)?.points();
                // Every row must build; reject bad ranges before any evaluation.
                for v in &values {
                    let mut m = map.clone();
                    m.insert(name.clone(), format_complex(*v));
                    build_function(&a.function, &m)?;
                }
                let grid = require_grid(&a.points)?;
                put(&mut echo, "fn", &Some(a.function.clone()));
                put(&mut echo, "vary", &Some(a.vary.clone()));
                put(&mut echo, "z", &a.points.z);
                put(&mut echo, "grid", &a.points.grid);
                echo.extend(map.clone());
                let task = Task::Table { id: a.function.clone(), params: map, name, values, grid };
                ("table", task, a.common, DEFAULT_SEED)
            }
        };
        let tol = tolerance(&common.tol)?;
        put(&mut echo, "tol", &common.tol);
        Ok(JobSpec { command, task, tol, format: common.format, seed, out: common.out, echo })
    }
}

/// `a+bi` literal that [`parse_complex`] reads back exactly.
pub fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im < 0.0 || z.im.is_sign_negative() {
        format!("{}{}i", z.re, z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn job(args: &str) -> Result<JobSpec, JobError> {
        JobSpec::from_args(std::iter::once("ml-fraccalc").chain(args.split_whitespace()))
    }

    #[test]
    fn eval_job() {
        let j = job("eval --fn ml2 --alpha 1 --beta 1 --z 1").unwrap();
        assert_eq!(j.command, "eval");
        let Task::Eval { function, grid } = j.task else { panic!() };
        assert!(matches!(function, Function::Ml(MLParams::Two { .. })));
        assert_eq!(grid.count, 1);
    }

    #[test]
    fn rejects_bad_flags() {
        assert!(matches!(job("eval --fn ml2 --alpha 1 --z 1"), Err(JobError::Value(_))));
        assert!(matches!(job("eval --fn ml2 --alpha 1 --beta 1 --gamma 2 --z 1"), Err(JobError::Value(_))));
        assert!(matches!(job("eval --fn ml2 --alpha 1 --beta 1"), Err(JobError::Value(_))));
        assert!(matches!(job("eval --fn ml2 --alpha 1 --beta 1 --z 1 --tol 0.5"), Err(JobError::Value(_))));
        assert!(matches!(job("eval --alpha 1"), Err(JobError::Flags(_))));
        assert!(matches!(job("verify --suite nope"), Err(JobError::Value(_))));
        assert!(matches!(job("frac --op saigo-left --alpha -1 --beta 0 --gamma 0 --operand mseries:alpha=1;beta=1"), Err(JobError::Value(_))));
    }

    #[test]
    fn frac_and_table_jobs() {
        let j = job("frac --op saigo-left --alpha 0.6 --beta 0.2 --gamma 0.4 --operand mseries:a=1.1;b=2.3;alpha=0.7;beta=1.2;sigma=1.3;c=0.5").unwrap();
        assert!(matches!(j.task, Task::Frac { grid: None, .. }));
        let t = job("table --fn ml2 --alpha 0.5 --vary beta=1:3:3 --grid 0:1:5").unwrap();
        let Task::Table { values, .. } = t.task else { panic!() };
        assert_eq!(values.len(), 3);
        assert!(job("table --fn ml2 --alpha 0.5 --beta 1 --vary beta=1:3:3 --grid 0:1:5").is_err());
    }

    #[test]
    fn complex_round_trip() {
        for z in [Complex64::new(1.5, -2.0), Complex64::new(-0.1, 3e-7), Complex64::new(2.0, 0.0)] {
            assert_eq!(parse_complex(&format_complex(z)).unwrap(), z);
        }
    }
}
