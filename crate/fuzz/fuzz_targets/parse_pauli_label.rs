#![no_main]

use libfuzzer_sys::fuzz_target;
use sporadic_core::pauli::PauliLabel;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(label) = s.parse::<PauliLabel>() {
            // accepted labels must round-trip through their display form
            let text = label.to_string();
            assert_eq!(text, s);
            assert_eq!(text.parse::<PauliLabel>().unwrap(), label);
            assert!(label.index() < 64);
        }
    }
});
