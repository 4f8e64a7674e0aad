//! End-to-end runs of the command line through `ml_fraccalc_cli::run`.

use ml_fraccalc_cli::run;
use serde_json::Value;

fn argv(line: &str) -> Vec<String> {
    std::iter::once("ml-fraccalc").chain(line.split_whitespace()).map(String::from).collect()
}

fn json(line: &str) -> Value {
    let out = run(argv(line));
    assert_eq!(out.code, 0, "{line}: {}", out.stderr);
    serde_json::from_str(&out.stdout).expect("valid JSON")
}

#[test]
fn eval_exponential_case() {
    let doc = json("eval --fn ml2 --alpha 1 --beta 1 --z 1");
    assert_eq!(doc["job"]["command"], "eval");
    assert_eq!(doc["meta"]["seed"], 7);
    let v = &doc["results"][0]["value"];
    assert!((v[0].as_f64().unwrap() - std::f64::consts::E).abs() < 1e-14);
    assert_eq!(v[1].as_f64().unwrap(), 0.0);
}

#[test]
fn eval_negative_real_point_stays_real() {
    let doc = json("eval --fn ml2 --alpha 1 --beta 1 --z -1");
    assert_eq!(doc["results"][0]["z"][1].as_f64().unwrap(), 0.0);
    let v = doc["results"][0]["value"][0].as_f64().unwrap();
    assert!((v - (-1f64).exp()).abs() < 1e-15);
}

#[test]
fn eval_grid_csv_has_header_and_rows() {
    let out = run(argv("eval --fn ml2 --alpha 2 --beta 1 --grid 0:4:5 --format csv"));
    assert_eq!(out.code, 0, "{}", out.stderr);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines[0], "z_re,z_im,re,im,terms,status");
    assert_eq!(lines.len(), 6);
    // E_{2,1}(4) = cosh 2
    let last: Vec<&str> = lines[5].split(',').collect();
    assert!((last[2].parse::<f64>().unwrap() - 2f64.cosh()).abs() < 1e-13);
}

#[test]
fn reduce_reports_fox_wright_lists() {
    let doc = json("reduce --fn ml3 --alpha 0.5 --beta 1 --gamma 2");
    let r = &doc["results"][0];
    assert_eq!(r["upper"].as_array().unwrap().len(), 1);
    assert_eq!(r["lower"].as_array().unwrap().len(), 1);
}

#[test]
fn frac_csv_lists_parameters_then_values() {
    let out = run(argv(
        "frac --op saigo-left --mode integral --alpha 0.5 --beta 0.3 --gamma 0.2 \
         --operand mseries:a=1;b=2;alpha=1;beta=1;sigma=1;c=1;mu=1 --grid 0.5:2:4 --format csv",
    ));
    assert_eq!(out.code, 0, "{}", out.stderr);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines[0], "kind,index,z_re,z_im,re,im,weight");
    assert_eq!(lines.iter().filter(|l| l.starts_with("value,")).count(), 4);
}

#[test]
fn verify_single_suite_passes() {
    let doc = json("verify --suite reductions");
    let results = doc["results"].as_array().unwrap();
    assert_eq!(results.len(), 3);
    assert!(results.iter().all(|r| r["pass"] == true));
    assert_eq!(doc["meta"]["tolerances"]["elementary"].as_f64().unwrap(), 1e-11);
}

#[test]
fn verify_with_impossible_tolerance_exits_one() {
    let out = run(argv("verify --suite reductions --tol 1e-300"));
    assert_eq!(out.code, 1);
    assert!(!out.stdout.is_empty());
}

#[test]
fn table_sweeps_a_parameter() {
    let out = run(argv("table --fn ml2 --alpha 1 --vary beta=1:3:3 --grid 1:2:2 --format csv"));
    assert_eq!(out.code, 0, "{}", out.stderr);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert!(lines[0].starts_with("beta_re,beta_im,re(z="));
    assert_eq!(lines.len(), 4);
}

#[test]
fn flag_and_value_errors_exit_two() {
    for line in [
        "eval --fn ml2 --alpha 1 --z 1",
        "eval --fn ml2 --alpha 1 --beta 1 --z 1+",
        "eval --fn ml2 --alpha 1 --beta 1 --grid 0:1:0",
        "eval --fn nosuch --z 1",
        "eval --fn ml2 --alpha 1 --beta 1 --nu 2 --z 1",
        "frac --op saigo-up --alpha 1 --beta 0 --gamma 0 --operand mseries:a=1",
        "verify --suite nosuch",
        "bogus",
    ] {
        let out = run(argv(line));
        assert_eq!(out.code, 2, "{line}");
        assert!(out.stdout.is_empty(), "{line}");
        assert!(!out.stderr.is_empty(), "{line}");
    }
}

#[test]
fn help_exits_zero() {
    let out = run(argv("--help"));
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("verify"));
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("ml-fraccalc-out-{}.json", std::process::id()));
    let line = format!("eval --fn ml1 --alpha 1 --z 0 --out {}", path.display());
    let out = run(argv(&line));
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["results"][0]["value"][0].as_f64().unwrap(), 1.0);
    std::fs::remove_file(path).unwrap();
}
