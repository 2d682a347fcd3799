#![no_main]
use gainwalk::{GroupOracle, Word};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let oracles = [
        GroupOracle::z2(3),
        GroupOracle::cyclic(6).expect("order is positive"),
        GroupOracle::free(2),
        GroupOracle::symmetric(3, &[("r", "(123)"), ("s", "(12)")]).expect("valid generators"),
    ];
    for o in &oracles {
        let parsed: Result<Word, _> = text.split_whitespace().map(|t| o.parse_symbol(t)).collect();
        if let Ok(w) = parsed {
            if w.len() <= 64 {
                assert!(o.is_identity(&w.concat(&w.invert())).expect("known generators"));
            }
        }
    }
});
