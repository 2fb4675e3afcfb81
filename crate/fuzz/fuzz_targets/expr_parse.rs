#![no_main]

use clw_cli::expr::parse;
use clw_core::SuperSpace;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if text.len() > 256 {
        return;
    }
    let _ = parse(text, &SuperSpace::witt(2, true, 1));
});
