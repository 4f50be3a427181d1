#![no_main]

use libfuzzer_sys::fuzz_target;
use sporadic_core::report::{Family, OutputFormat};

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(family) = s.parse::<Family>() {
            // accepted names round-trip
            assert_eq!(family.name(), s);
        }
        let _ = s.parse::<OutputFormat>();
    }
});
