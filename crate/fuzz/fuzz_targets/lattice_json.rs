#![no_main]

use cubic_k3::lattice::{disc_group_form, Lattice};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(lattice) = serde_json::from_str::<Lattice>(text) else { return };
    // accepted input must re-serialize and re-parse to the same lattice
    let encoded = serde_json::to_string(&lattice).expect("serialize accepted lattice");
    let back: Lattice = serde_json::from_str(&encoded).expect("round-trip parse");
    assert_eq!(back.gram(), lattice.gram());
    assert_eq!(serde_json::to_string(&back).expect("second serialize"), encoded);

    // cheap exact invariants on small inputs only
    if lattice.rank() <= 8 {
        let _ = lattice.is_even();
        if let Ok(sig) = lattice.signature() {
            assert_eq!(sig.positive + sig.negative + sig.zero, lattice.rank());
            assert_eq!(sig.zero == 0, lattice.discriminant().is_ok());
        }
        if let Ok(f) = disc_group_form(&lattice) {
            assert_eq!(Ok(f.group_order()), lattice.discriminant());
        }
    }
});
