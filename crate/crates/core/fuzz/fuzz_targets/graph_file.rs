#![no_main]
use gainwalk::format::{parse_with_loader, print};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(input) = parse_with_loader(text, |_| Err("no files while fuzzing".into())) else { return };
    let printed = print(&input.oracle, &input.graph);
    let again = parse_with_loader(&printed, |_| Err("no files while fuzzing".into()))
        .expect("printed graphs parse");
    assert_eq!(again.graph, input.graph);
});
