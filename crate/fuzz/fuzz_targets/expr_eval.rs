#![no_main]

use clw_cli::eval::eval_str;
use clw_core::SuperSpace;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    // Long inputs can build products of unbounded order; keep cases cheap.
    if text.len() > 64 {
        return;
    }
    let sp = SuperSpace::witt(1, true, 1);
    // Printed results evaluate back to themselves.
    if let Ok(v) = eval_str(text, &sp) {
        let printed = v.to_text(&sp);
        let back = eval_str(&printed, &sp).unwrap();
        assert!(back.same_as(&v, &sp), "{text} printed as {printed}");
    }
});
