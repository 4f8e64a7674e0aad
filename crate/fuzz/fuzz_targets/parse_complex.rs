#![no_main]
use libfuzzer_sys::fuzz_target;
use ml_fraccalc_cli::parse::parse_complex;

fuzz_target!(|data: &str| {
    let _ = parse_complex(data);
});
