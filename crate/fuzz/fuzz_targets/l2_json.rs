#![no_main]

use libfuzzer_sys::fuzz_target;
use tempered::L2Elem;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(v) = L2Elem::from_json(text) {
        assert!(v.tail() >= 0.0);
        let again = L2Elem::from_json(&v.to_json()).expect("emitted JSON parses");
        assert_eq!(again, v);
    }
});
