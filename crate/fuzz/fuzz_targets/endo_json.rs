#![no_main]

use libfuzzer_sys::fuzz_target;

use hbraid_core::Endomorphism;

// Endomorphism JSON must deserialize without panicking and survive a
// serialize/deserialize round trip.
fuzz_target!(|data: &[u8]| {
    let Ok(endo) = serde_json::from_slice::<Endomorphism>(data) else {
        return;
    };
    let json = serde_json::to_vec(&endo).expect("endomorphism serializes");
    let round: Endomorphism = serde_json::from_slice(&json).expect("round trip parses");
    assert_eq!(round, endo);
});
