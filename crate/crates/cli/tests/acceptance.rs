//! The `selftest` command runs every criterion end to end within five
//! minutes and exits cleanly.

use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

const BUDGET: Duration = Duration::from_secs(300);

#[test]
fn selftest_end_to_end() {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_tempered"))
        .arg("selftest")
        .output()
        .expect("binary runs");
    let elapsed = start.elapsed();
    let text = String::from_utf8_lossy(&out.stdout);
    let mut stdout = std::io::stdout().lock();
    let lines = text.lines().filter(|l| l.starts_with("criterion")).count();
    let passed = out.status.success() && lines == 10 && elapsed < BUDGET;
    writeln!(
        stdout,
        "criterion 11 {} selftest: exit {:?}, {lines} criteria reported ({:.2} s, budget {} s)",
        if passed { "PASS" } else { "FAIL" },
        out.status.code(),
        elapsed.as_secs_f64(),
        BUDGET.as_secs()
    )
    .unwrap();
    assert!(passed, "stderr: {}", String::from_utf8_lossy(&out.stderr));
}
