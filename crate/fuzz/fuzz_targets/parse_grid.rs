#![no_main]
use libfuzzer_sys::fuzz_target;
use ml_fraccalc_cli::parse::GridSpec;

fuzz_target!(|data: &str| {
    let _ = GridSpec::parse(data);
});
