#![no_main]

use libfuzzer_sys::fuzz_target;
use sporadic_core::sic::SicEnsemble;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(ensemble) = SicEnsemble::from_json(s) {
            // any accepted document re-serializes and reads back bit-exactly
            let json = ensemble.to_json();
            let back = SicEnsemble::from_json(&json).expect("round trip");
            assert_eq!(back.dimension(), ensemble.dimension());
            assert_eq!(back.len(), ensemble.len());
            for (p, q) in ensemble.projectors().iter().zip(back.projectors()) {
                for (a, b) in p.entries().iter().zip(q.entries()) {
                    assert_eq!(a.re.to_bits(), b.re.to_bits());
                    assert_eq!(a.im.to_bits(), b.im.to_bits());
                }
            }
        }
    }
});
