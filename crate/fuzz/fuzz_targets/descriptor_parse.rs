#![no_main]

use clw_core::SuperSpace;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    // Rendered descriptors parse back to the same forms and labels.
    if let Ok(sp) = SuperSpace::parse_descriptor(text) {
        let back = SuperSpace::parse_descriptor(&sp.to_descriptor()).unwrap();
        assert_eq!(back.to_descriptor(), sp.to_descriptor());
    }
});
