#![no_main]

use libfuzzer_sys::fuzz_target;

use hbraid_core::BraidWord;

// First byte picks the strand count, the rest is the word text. Parsing must
// never panic, and anything that parses must survive a display round-trip.
fuzz_target!(|data: &[u8]| {
    let Some((&first, rest)) = data.split_first() else {
        return;
    };
    let strands = (first % 16) as u32 + 1;
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    if let Ok(word) = BraidWord::parse(text, strands) {
        let reparsed = BraidWord::parse(&word.to_string(), strands).expect("round trip parses");
        assert_eq!(reparsed, word);
        let _ = word.permutation();
    }
});
