#![no_main]

use cubic_k3::periods::DivisorReport;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(report) = serde_json::from_str::<DivisorReport>(text) else { return };
    let encoded = serde_json::to_string(&report).expect("serialize accepted report");
    let back: DivisorReport = serde_json::from_str(&encoded).expect("round-trip parse");
    assert_eq!(back, report);
    assert_eq!(serde_json::to_string(&back).expect("second serialize"), encoded);
});
