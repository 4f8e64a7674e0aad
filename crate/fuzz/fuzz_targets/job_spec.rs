#![no_main]
use libfuzzer_sys::fuzz_target;
use ml_fraccalc_cli::job::JobSpec;

// Whitespace separated words stand in for argv after the program name.
fuzz_target!(|data: &str| {
    let argv = std::iter::once("ml-fraccalc").chain(data.split_whitespace());
    let _ = JobSpec::from_args(argv);
});
