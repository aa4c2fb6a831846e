#![no_main]

use libfuzzer_sys::fuzz_target;
use tempered::{LinearOp, SchwartzFn, SchwartzOperator};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(op) = serde_json::from_str::<LinearOp>(text) {
        let again: LinearOp = serde_json::from_str(&serde_json::to_string(&op).unwrap()).unwrap();
        assert_eq!(again, op);
        // Keep evaluation cheap: deep compositions grow the degree linearly.
        if op.is_finite() && op.bandwidth().is_some_and(|b| b <= 64) {
            let _ = op.apply(&SchwartzFn::basis(3));
        }
    }
});
