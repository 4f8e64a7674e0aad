//! Rendering of job results as JSON or CSV.
//!
//! | command | CSV columns |
//! |---------|-------------|
//! | `eval` | `z_re,z_im,re,im,terms,status` |
//! | `reduce` | `kind,index,re,im,weight` |
//! | `frac` | `kind,index,z_re,z_im,re,im,weight` |
//! | `verify` | `identity,case,inputs,lhs_re,lhs_im,rhs_re,rhs_im,error,failure` |
//! | `table` | `param_re,param_im` then `re(z),im(z)` per grid point |
//!
//! Grid rows are evaluated in parallel and emitted in grid order. Failed
//! points keep their row with empty value columns and the error as status.

use crate::job::{build_function, format_complex, Format, Function, JobSpec, Task, DEFAULT_TOL};
use crate::suites::{run_suite, VerifyReport};
use ml_fraccalc::foxwright::FoxWrightSpec;
use ml_fraccalc::frac::apply;
use ml_fraccalc::instances::{reduce_ml_to_fox_wright, reduce_to_fox_wright, series_eval};
use ml_fraccalc::mlfamily::ml_eval;
use ml_fraccalc::sum::{default_max_terms, EvalResult, SumControl};
use num_complex::Complex64;
use rayon::prelude::*;
use serde_json::{json, Value};
use std::collections::BTreeMap;

/// Rendered output and the verify verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct Rendered {
    pub text: String,
    /// Every verify block passed; always true for other commands.
    pub pass: bool,
}

fn pair(z: Complex64) -> Value {
    json!([z.re, z.im])
}

fn control(job: &JobSpec) -> SumControl {
    SumControl::new(job.tol.unwrap_or(DEFAULT_TOL), default_max_terms())
}

/// Evaluates a function at `z`.
pub fn evaluate(f: &Function, z: Complex64, ctl: &SumControl) -> ml_fraccalc::error::Result<EvalResult> {
    match f {
        Function::Ml(p) => ml_eval(p, z, ctl),
        Function::Series(s) => series_eval(s, z, ctl),
    }
}

struct Row {
    z: Complex64,
    value: Option<Complex64>,
    terms: usize,
    status: String,
}

fn rows<F>(points: &[Complex64], f: F) -> Vec<Row>
where
    F: Fn(Complex64) -> ml_fraccalc::error::Result<EvalResult> + Sync,
{
    points
        .par_iter()
        .map(|&z| match f(z) {
            Ok(r) => Row { z, value: Some(r.value), terms: r.terms_used, status: r.status.as_str().to_string() },
            Err(e) => Row { z, value: None, terms: 0, status: format!("error: {e}") },
        })
        .collect()
}

fn row_json(r: &Row) -> Value {
    json!({"z": pair(r.z), "value": r.value.map(pair), "terms": r.terms, "status": r.status})
}

fn spec_json(spec: &FoxWrightSpec) -> Value {
    let list = |l: &[(Complex64, f64)]| l.iter().map(|(a, w)| json!([a.re, a.im, w])).collect::<Vec<_>>();
    json!({
        "upper": list(&spec.upper),
        "lower": list(&spec.lower),
        "normalized": spec.normalized,
        "prefactor": pair(spec.prefactor),
        "z_exponent": pair(spec.z_exponent),
        "argument": {
            "scale": pair(spec.argument.scale),
            "power": spec.argument.power,
            "inverse": spec.argument.inverse,
        },
    })
}

fn num(x: f64) -> String {
    format!("{x}")
}

fn opt(v: Option<f64>) -> String {
    v.map(num).unwrap_or_default()
}

fn spec_csv_rows(spec: &FoxWrightSpec, with_z: bool) -> Vec<Vec<String>> {
    let blank = || if with_z { vec![String::new(), String::new()] } else { Vec::new() };
    let mut out = Vec::new();
    let mut push = |kind: &str, idx: usize, z: Complex64, w: Option<f64>| {
        let mut r = vec![kind.to_string(), idx.to_string()];
        r.extend(blank());
        r.extend([num(z.re), num(z.im), opt(w)]);
        out.push(r);
    };
    push("prefactor", 0, spec.prefactor, None);
    push("exponent", 0, spec.z_exponent, None);
    for (i, (a, w)) in spec.upper.iter().enumerate() {
        push("upper", i, *a, Some(*w));
    }
    for (i, (a, w)) in spec.lower.iter().enumerate() {
        push("lower", i, *a, Some(*w));
    }
    push("scale", 0, spec.argument.scale, Some(spec.argument.power));
    out
}

fn csv_text(header: &[String], records: Vec<Vec<String>>) -> Result<String, String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(|e| e.to_string())?;
    for r in records {
        w.write_record(&r).map_err(|e| e.to_string())?;
    }
    String::from_utf8(w.into_inner().map_err(|e| e.to_string())?).map_err(|e| e.to_string())
}

fn strings(h: &[&str]) -> Vec<String> {
    h.iter().map(|s| s.to_string()).collect()
}

fn document(job: &JobSpec, results: Value, tolerances: Value) -> String {
    let doc = json!({
        "job": {"command": job.command, "args": job.echo, "format": "json"},
        "results": results,
        "meta": {"version": env!("CARGO_PKG_VERSION"), "seed": job.seed, "tolerances": tolerances},
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn series_tolerance(job: &JobSpec) -> Value {
    json!({"series": job.tol.unwrap_or(DEFAULT_TOL), "max_terms": default_max_terms()})
}

/// Runs the job and renders its output.
pub fn render(job: &JobSpec) -> Result<Rendered, String> {
    let ctl = control(job);
    let text = match &job.task {
        Task::Eval { function, grid } => {
            let rs = rows(&grid.points(), |z| evaluate(function, z, &ctl));
            match job.format {
                Format::Json => document(job, Value::Array(rs.iter().map(row_json).collect()), series_tolerance(job)),
                Format::Csv => csv_text(
                    &strings(&["z_re", "z_im", "re", "im", "terms", "status"]),
                    rs.iter()
                        .map(|r| {
                            vec![
                                num(r.z.re),
                                num(r.z.im),
                                opt(r.value.map(|v| v.re)),
                                opt(r.value.map(|v| v.im)),
                                r.terms.to_string(),
                                r.status.clone(),
                            ]
                        })
                        .collect(),
                )?,
            }
        }
        Task::Reduce { function } => {
            let spec = match function {
                Function::Ml(p) => reduce_ml_to_fox_wright(p),
                Function::Series(s) => reduce_to_fox_wright(s),
            }
            .map_err(|e| e.to_string())?;
            match job.format {
                Format::Json => document(job, json!([spec_json(&spec)]), json!({})),
                Format::Csv => csv_text(&strings(&["kind", "index", "re", "im", "weight"]), spec_csv_rows(&spec, false))?,
            }
        }
        Task::Frac { op, operand, grid } => {
            let r = apply(op, operand).map_err(|e| e.to_string())?;
            let points = grid.map(|g| g.points()).unwrap_or_default();
            let rs = rows(&points, |z| {
                if z.im != 0.0 || !(z.re > 0.0) {
                    return Err(ml_fraccalc::error::Error::Domain(format!("operator images need real z > 0, got {z}")));
                }
                ml_fraccalc::foxwright::fox_wright_eval(&r.spec, z, &ctl)
            });
            match job.format {
                Format::Json => {
                    let mut body = spec_json(&r.spec);
                    body["rule"] = json!(r.rule);
                    body["coefficient"] = pair(r.coefficient);
                    body["exponent"] = pair(r.exponent);
                    body["values"] = Value::Array(rs.iter().map(row_json).collect());
                    document(job, json!([body]), series_tolerance(job))
                }
                Format::Csv => {
                    let mut records = spec_csv_rows(&r.spec, true);
                    for (i, row) in rs.iter().enumerate() {
                        records.push(vec![
                            "value".into(),
                            i.to_string(),
                            num(row.z.re),
                            num(row.z.im),
                            opt(row.value.map(|v| v.re)),
                            opt(row.value.map(|v| v.im)),
                            String::new(),
                        ]);
                    }
                    csv_text(&strings(&["kind", "index", "z_re", "z_im", "re", "im", "weight"]), records)?
                }
            }
        }
        Task::Verify { suites } => {
            let reports: Vec<(&'static str, VerifyReport)> = suites
                .iter()
                .flat_map(|s| run_suite(*s, job.seed, job.tol).into_iter().map(move |r| (s.id(), r)))
                .collect();
            let pass = reports.iter().all(|(_, r)| r.pass);
            let text = match job.format {
                Format::Json => {
                    let tolerances: BTreeMap<&str, f64> =
                        reports.iter().map(|(_, r)| (r.identity, r.tolerance)).collect();
                    let results: Vec<Value> = reports
                        .iter()
                        .map(|(suite, r)| {
                            let mut v = serde_json::to_value(r).expect("reports serialize");
                            v["suite"] = json!(suite);
                            v
                        })
                        .collect();
                    document(job, Value::Array(results), json!(tolerances))
                }
                Format::Csv => {
                    let header = strings(&[
                        "identity", "case", "inputs", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "error", "failure",
                    ]);
                    let mut records = Vec::new();
                    for (_, r) in &reports {
                        for (i, c) in r.records.iter().enumerate() {
                            records.push(vec![
                                r.identity.to_string(),
                                i.to_string(),
                                c.inputs.clone(),
                                opt(c.lhs.map(|v| v[0])),
                                opt(c.lhs.map(|v| v[1])),
                                opt(c.rhs.map(|v| v[0])),
                                opt(c.rhs.map(|v| v[1])),
                                opt(c.error),
                                c.failure.clone().unwrap_or_default(),
                            ]);
                        }
                    }
                    csv_text(&header, records)?
                }
            };
            return Ok(Rendered { text, pass });
        }
        Task::Table { id, params, name, values, grid } => {
            let points = grid.points();
            let table: Vec<(Complex64, Vec<Option<Complex64>>)> = values
                .iter()
                .map(|v| {
                    let mut m = params.clone();
                    m.insert(name.clone(), format_complex(*v));
                    let f = build_function(id, &m).map_err(|e| e.to_string())?;
                    Ok((*v, rows(&points, |z| evaluate(&f, z, &ctl)).into_iter().map(|r| r.value).collect()))
                })
                .collect::<Result<_, String>>()?;
            match job.format {
                Format::Json => {
                    let results: Vec<Value> = table
                        .iter()
                        .map(|(v, vals)| json!({"param": pair(*v), "values": vals.iter().map(|x| x.map(pair)).collect::<Vec<_>>()}))
                        .collect();
                    let body = json!({"name": name, "z": points.iter().map(|z| pair(*z)).collect::<Vec<_>>(), "rows": results});
                    document(job, json!([body]), series_tolerance(job))
                }
                Format::Csv => {
                    let mut header = vec![format!("{name}_re"), format!("{name}_im")];
                    for z in &points {
                        let z = format_complex(*z);
                        header.push(format!("re(z={z})"));
                        header.push(format!("im(z={z})"));
                    }
                    let records = table
                        .iter()
                        .map(|(v, vals)| {
                            let mut r = vec![num(v.re), num(v.im)];
                            for x in vals {
                                r.push(opt(x.map(|x| x.re)));
                                r.push(opt(x.map(|x| x.im)));
                            }
                            r
                        })
                        .collect();
                    csv_text(&header, records)?
                }
            }
        }
    };
    Ok(Rendered { text, pass: true })
}
