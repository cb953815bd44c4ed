#![no_main]

use lct_core::weights::Weight;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(w) = Weight::parse(text) {
        // Accepted weights are primitive and strictly positive.
        assert!(w.entries().iter().all(|&e| e > 0));
        let gcd = w
            .entries()
            .iter()
            .fold(0u32, |acc, &e| num::integer::gcd(acc, e));
        assert_eq!(gcd, 1, "weight {w} is not primitive");
    }
});
