//! Input: an optional variable line ("vars: xyz\n") followed by polynomial
//! text. Successful parses must survive a print/parse round trip.

#![no_main]

use lct_core::polynomial::Polynomial;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let (vars, body) = match text.strip_prefix("vars: ") {
        Some(rest) => match rest.split_once('\n') {
            Some((vars, body)) => (vars, body),
            None => return,
        },
        None => ("xyz", text),
    };
    if let Ok(p) = Polynomial::parse(body, vars) {
        let printed = p.to_string();
        let reparsed = Polynomial::parse(&printed, vars)
            .unwrap_or_else(|e| panic!("canonical form {printed:?} failed to reparse: {e}"));
        assert_eq!(reparsed, p, "round trip of {printed:?}");
    }
});
