#![no_main]

use libfuzzer_sys::fuzz_target;
use tempered::BoundCertificate;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(c) = BoundCertificate::from_json(text) {
        assert!(!c.bounds().is_empty());
        let again = BoundCertificate::from_json(&c.to_json()).expect("emitted JSON parses");
        assert_eq!(again, c);
    }
});
