#![no_main]

use libfuzzer_sys::fuzz_target;

use hbraid_core::GroupWord;

// First byte picks the generator count, the rest is the word text. Parsed
// words must round-trip, and expanding a short word on few generators must
// not panic (the expansion is bounded there).
fuzz_target!(|data: &[u8]| {
    let Some((&first, rest)) = data.split_first() else {
        return;
    };
    let strands = (first % 16) as u32 + 1;
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    if let Ok(word) = GroupWord::parse(text, strands) {
        let reparsed = GroupWord::parse(&word.to_string(), strands).expect("round trip parses");
        assert_eq!(reparsed, word);
        if strands <= 4 && word.len() <= 40 {
            let reduced = word.free_reduce();
            assert_eq!(reduced.magnus(), word.magnus());
        }
    }
});
