#![no_main]

use hookpair_core::literal::parse_staircase;
use hookpair_core::staircase::verify_lemma;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    if let Ok(s) = parse_staircase(text) {
        assert_eq!(parse_staircase(&s.to_string()).unwrap(), s);
        if s.height() <= 200 && s.horizontal().iter().all(|&h| h <= 1_000) {
            for d in [0, 1, 3] {
                let report = verify_lemma(&s, d);
                assert!(report.pass, "{s} d={d}: {:?}", report.failure);
            }
        }
    }
});
