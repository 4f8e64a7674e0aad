//! Property tests for the literal parsers and argv handling.

use ml_fraccalc::frac::Side;
use ml_fraccalc_cli::job::{format_complex, JobSpec};
use ml_fraccalc_cli::parse::{parse_complex, parse_operand, GridSpec};
use num_complex::Complex64;
use proptest::prelude::*;

fn finite() -> impl Strategy<Value = f64> {
    prop_oneof![-1e6..1e6f64, -1.0..1.0f64, Just(0.0), Just(-0.0), any::<f64>().prop_filter("finite", |x| x.is_finite())]
}

proptest! {
    #[test]
    fn complex_round_trips(re in finite(), im in finite()) {
        let z = Complex64::new(re, im);
        let back = parse_complex(&format_complex(z)).unwrap();
        prop_assert_eq!(back.re, z.re);
        prop_assert_eq!(back.im, z.im);
    }

    #[test]
    fn complex_parser_never_panics(s in "\\PC{0,24}") {
        let _ = parse_complex(&s);
    }

    #[test]
    fn complex_parser_rejects_non_finite(s in "[+-]?(inf|nan|NaN|infinity)[+-]?[0-9]?i?") {
        prop_assert!(parse_complex(&s).is_err());
    }

    #[test]
    fn grid_points_span_the_range(start in -100.0..100.0f64, len in 0.0..50.0f64, count in 1usize..200) {
        let g = GridSpec::parse(&format!("{start}:{}:{count}", start + len)).unwrap();
        let p = g.points();
        prop_assert_eq!(p.len(), count);
        prop_assert_eq!(p[0].re, start);
        if count > 1 {
            prop_assert!((p[count - 1].re - (start + len)).abs() <= 1e-12 * (1.0 + start.abs() + len));
        }
        prop_assert!(p.iter().all(|z| z.im == 0.0));
    }

    #[test]
    fn grid_parser_never_panics(s in "[0-9:.eE+-]{0,20}") {
        let _ = GridSpec::parse(&s);
    }

    #[test]
    fn operand_parser_never_panics(s in "(mseries|kfunction|x)?:?([a-z]{1,5}=[0-9.,+-]{0,6};?){0,6}") {
        let _ = parse_operand(&s, Side::Left);
        let _ = parse_operand(&s, Side::Right);
    }

    #[test]
    fn argv_parser_never_panics(words in proptest::collection::vec("(--?[a-z]{1,6}|[a-z0-9.:=+-]{1,8})", 0..8)) {
        let argv = std::iter::once("ml-fraccalc".to_string()).chain(words);
        let _ = JobSpec::from_args(argv);
    }
}

#[test]
fn grid_count_is_bounded() {
    assert!(GridSpec::parse("0:1:1000000").is_ok());
    assert!(GridSpec::parse("0:1:1000001").is_err());
}
