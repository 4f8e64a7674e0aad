//! Acceptance run: one PASS or FAIL line per criterion.
//!
//! | criterion | blocks | tolerance | runtime cap |
//! |-----------|--------|-----------|-------------|
//! | 1 elementary reductions | `elementary` | 1e-11 rel | 1 s |
//! | 2 Fox-Wright reductions | `fox-wright` | 1e-10 rel | 10 s |
//! | 3 Kummer case | `kummer` | 1e-10 rel | none |
//! | 4 contour agreement | `hankel-reciprocal-gamma`, `hankel-ml2`, `mellin-barnes-prabhakar` | 1e-8 abs, 1e-8 rel, 1e-7 rel | 60 s |
//! | 5 Riemann-Liouville images | `rl-series-termwise`, `rl-left-inverse` | 1e-12 | none |
//! | 6 Saigo images | `saigo-left-quadrature`, `saigo-right-quadrature` | 1e-5 rel | 300 s |
//! | 7 Saigo-Maeda images | `saigo-maeda-termwise`, `saigo-maeda-reduction` | 1e-12 | none |
//! | 8 asymptotics | `asymptotic-crossover`, `multiple-ml-ratio`, `prabhakar-polynomial` | 1e-4, band, 1e-13 | none |
//! | 9 negative parameters | `negative-alpha-forms`, `recurrence` | 1e-11 rel | none |
//! | 10 transforms | `laplace`, `mellin` | 1e-5 rel | none |
//! | 11 determinism | `verify --suite all --seed 7` twice | byte equality, exit 0 | none |
//!
//! Every block runs at its pinned tolerance with seed 7. The process exits
//! non-zero when any criterion fails.

use ml_fraccalc_cli::suites::{Block, VerifyReport, MULTIPLE_ML_RATIO};
use std::time::{Duration, Instant};

const SEED: u64 = 7;

struct Criterion {
    number: usize,
    name: &'static str,
    blocks: &'static [(Block, f64)],
    cap: Option<Duration>,
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        number: 1,
        name: "elementary reductions",
        blocks: &[(Block::Elementary, 1e-11)],
        cap: Some(Duration::from_secs(1)),
    },
    Criterion {
        number: 2,
        name: "fox-wright reductions",
        blocks: &[(Block::FoxWright, 1e-10)],
        cap: Some(Duration::from_secs(10)),
    },
    Criterion { number: 3, name: "kummer case", blocks: &[(Block::Kummer, 1e-10)], cap: None },
    Criterion {
        number: 4,
        name: "contour agreement",
        blocks: &[(Block::HankelGamma, 1e-8), (Block::HankelMl2, 1e-8), (Block::MellinBarnes, 1e-7)],
        cap: Some(Duration::from_secs(60)),
    },
    Criterion {
        number: 5,
        name: "riemann-liouville images",
        blocks: &[(Block::RlSeries, 1e-12), (Block::RlLeftInverse, 1e-12)],
        cap: None,
    },
    Criterion {
        number: 6,
        name: "saigo images against quadrature",
        blocks: &[(Block::SaigoLeft, 1e-5), (Block::SaigoRight, 1e-5)],
        cap: Some(Duration::from_secs(300)),
    },
    Criterion {
        number: 7,
        name: "saigo-maeda images",
        blocks: &[(Block::SaigoMaedaTermwise, 1e-12), (Block::SaigoMaedaReduction, 1e-12)],
        cap: None,
    },
    Criterion {
        number: 8,
        name: "asymptotic expansions",
        blocks: &[(Block::Crossover, 1e-4), (Block::MultipleMlRatio, 0.0), (Block::PrabhakarPolynomial, 1e-13)],
        cap: None,
    },
    Criterion {
        number: 9,
        name: "negative parameters and recurrence",
        blocks: &[(Block::NegativeAlphaForms, 1e-11), (Block::Recurrence, 1e-11)],
        cap: None,
    },
    Criterion {
        number: 10,
        name: "laplace and mellin transforms",
        blocks: &[(Block::Laplace, 1e-5), (Block::Mellin, 1e-5)],
        cap: None,
    },
];

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn summary(r: &VerifyReport) -> String {
    format!(
        "{} {} cases, {} failed, max {:.3e} <= {:.0e}",
        r.identity, r.cases, r.failures, r.max_error, r.tolerance
    )
}

fn check(c: &Criterion) -> bool {
    let start = Instant::now();
    let mut ok = true;
    let mut parts = Vec::new();
    for &(block, tolerance) in c.blocks {
        // The pinned tolerance in this table must match the block's own.
        ok &= block.tolerance() == tolerance;
        let r = block.run(SEED, None);
        ok &= r.pass && r.tolerance == tolerance;
        parts.push(summary(&r));
    }
    let elapsed = start.elapsed();
    if let Some(cap) = c.cap {
        ok &= elapsed < cap;
        parts.push(format!("{:.2} s < {} s", elapsed.as_secs_f64(), cap.as_secs()));
    } else {
        parts.push(format!("{:.2} s", elapsed.as_secs_f64()));
    }
    if c.number == 8 {
        parts.push(format!("ratio band [{}, {}]", MULTIPLE_ML_RATIO.0, MULTIPLE_ML_RATIO.1));
    }
    println!("{} criterion {} {}: {}", verdict(ok), c.number, c.name, parts.join("; "));
    ok
}

fn determinism() -> bool {
    let argv = ["ml-fraccalc", "verify", "--suite", "all", "--seed", "7"];
    let a = ml_fraccalc_cli::run(argv);
    let b = ml_fraccalc_cli::run(argv);
    let ok = a.code == 0 && b.code == 0 && a.stdout == b.stdout && !a.stdout.is_empty();
    println!(
        "{} criterion 11 determinism: exit codes {} and {}; {} bytes; identical {}",
        verdict(ok),
        a.code,
        b.code,
        a.stdout.len(),
        a.stdout == b.stdout
    );
    ok
}

fn main() {
    let mut ok = true;
    for c in CRITERIA {
        ok &= check(c);
    }
    ok &= determinism();
    if !ok {
        std::process::exit(1);
    }
}
