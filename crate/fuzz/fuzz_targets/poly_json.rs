#![no_main]

use libfuzzer_sys::fuzz_target;

use hbraid_core::{PolyTerm, ReducedPolynomial};

// First byte picks the variable count, the rest is JSON for a term array.
// Anything accepted must serialize back to an equal polynomial.
fuzz_target!(|data: &[u8]| {
    let Some((&first, rest)) = data.split_first() else {
        return;
    };
    let strands = (first % 12) as u32;
    let Ok(terms) = serde_json::from_slice::<Vec<PolyTerm>>(rest) else {
        return;
    };
    if let Ok(poly) = ReducedPolynomial::from_json_terms(strands, &terms) {
        let round = ReducedPolynomial::from_json_terms(strands, &poly.to_json_terms())
            .expect("canonical terms rebuild");
        assert_eq!(round, poly);
    }
});
