#![no_main]

use libfuzzer_sys::fuzz_target;
use tempered::{SchwartzFn, TemperedDist};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(u) = TemperedDist::from_json(text) {
        let json = u.to_json().expect("parsed distributions serialize");
        let again = TemperedDist::from_json(&json).expect("emitted JSON parses");
        assert_eq!(again.max_diff(&u, 64), 0.0);
        let _ = u.apply(&SchwartzFn::gaussian());
    }
});
