#![no_main]

use clw_core::Scalar;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    // Anything that parses prints to a form that parses to the same value.
    if let Ok(c) = Scalar::parse(text) {
        assert_eq!(Scalar::parse(&c.to_string()).unwrap(), c);
    }
});
