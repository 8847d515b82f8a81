#![no_main]

use hookpair_core::literal::parse_partition;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    if let Ok(mu) = parse_partition(text) {
        assert_eq!(parse_partition(&mu.to_string()).unwrap(), mu);
        if mu.size() <= 10_000 {
            assert_eq!(mu.conjugate().conjugate(), mu);
        }
    }
});
