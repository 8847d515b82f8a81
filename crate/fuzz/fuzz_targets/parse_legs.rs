#![no_main]

use hookpair_core::literal::parse_sequence;
use hookpair_core::staircase::{inverse_master_bijection, master_bijection};
use libfuzzer_sys::fuzz_target;

// Any sequence the forward map accepts must come back under the inverse.
fuzz_target!(|text: &str| {
    let Ok(legs) = parse_sequence(text) else {
        return;
    };
    if let Ok(out) = master_bijection(&legs) {
        let mut sorted_in = legs.clone();
        let mut sorted_out = out.clone();
        sorted_in.sort_unstable();
        sorted_out.sort_unstable();
        assert_eq!(sorted_in, sorted_out);
        assert_eq!(inverse_master_bijection(&out).unwrap(), legs);
    }
    let _ = inverse_master_bijection(&legs);
});
