#![no_main]

use libfuzzer_sys::fuzz_target;
use tempered::SchwartzFn;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(f) = SchwartzFn::from_json(text) {
        let again = SchwartzFn::from_json(&f.to_json()).expect("emitted JSON parses");
        assert_eq!(again, f);
        let _ = f.eval(0.5);
        let _ = f.fourier();
    }
});
