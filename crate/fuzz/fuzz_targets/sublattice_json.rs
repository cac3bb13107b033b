#![no_main]

use cubic_k3::lattice::Sublattice;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(sub) = serde_json::from_str::<Sublattice>(text) else { return };
    let encoded = serde_json::to_string(&sub).expect("serialize accepted sublattice");
    let back: Sublattice = serde_json::from_str(&encoded).expect("round-trip parse");
    assert_eq!(back.basis(), sub.basis());

    if sub.ambient().rank() <= 8 {
        // saturation is idempotent and the index cross-check in
        // saturation_index must never trip
        let sat = sub.saturate();
        assert_eq!(sat.saturate().basis(), sat.basis());
        let _ = sub.saturation_index();
        if let Ok(perp) = sub.orthogonal_complement() {
            assert_eq!(perp.saturate().basis(), perp.basis());
            assert_eq!(perp.rank() + sub.rank(), sub.ambient().rank());
        }
    }
});
