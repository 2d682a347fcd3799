#![no_main]
use gainwalk::algebra::TableGroup;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(group) = TableGroup::parse(text) {
            for x in 0..group.order() {
                assert_eq!(group.mul(x, group.inverse(x)), group.identity());
            }
        }
    }
});
