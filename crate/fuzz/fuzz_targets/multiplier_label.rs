#![no_main]

use libfuzzer_sys::fuzz_target;
use tempered::Multiplier;

fuzz_target!(|data: &[u8]| {
    let Ok(label) = std::str::from_utf8(data) else { return };
    if let Ok(m) = Multiplier::from_label(label) {
        assert!(!m.label().is_empty());
        let _ = m.eval(1.0);
    }
});
