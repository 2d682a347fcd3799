#![no_main]
use gainwalk::format::parse;
use gainwalk::Trail;
use libfuzzer_sys::fuzz_target;

const GRAPH: &str = "group free 2
edge e1 a b [ +1 ]
edge e2 b c [ -2 ]
edge e3 c a [ +1 +2 ]
edge e4 a a [ +2 ]
";

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let g = parse(GRAPH).expect("fixed graph parses").graph;
    for start in ["a", "b", "c"] {
        if let Ok(t) = Trail::parse(&g, start, text) {
            let again = Trail::parse(&g, start, &t.to_tokens()).expect("printed trails parse");
            assert_eq!(again, t);
        }
    }
});
