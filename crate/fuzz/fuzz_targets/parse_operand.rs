#![no_main]
use libfuzzer_sys::fuzz_target;
use ml_fraccalc::frac::Side;
use ml_fraccalc_cli::parse::parse_operand;

fuzz_target!(|data: &str| {
    let _ = parse_operand(data, Side::Left);
    let _ = parse_operand(data, Side::Right);
});
