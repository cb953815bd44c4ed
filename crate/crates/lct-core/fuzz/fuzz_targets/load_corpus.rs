//! Drives the corpus schema decoder and, on small accepted files, full row
//! verification. Failing checks are expected on arbitrary rows; the
//! verifier just must not panic.

#![no_main]

use lct_core::corpus;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(rows) = corpus::load(text) else {
        return;
    };
    if rows.len() > 4 {
        return;
    }
    for (i, row) in rows.iter().enumerate() {
        if row.f.len() <= 200 && row.ell.len() <= 200 {
            corpus::verify_row(i, row);
        }
    }
});
