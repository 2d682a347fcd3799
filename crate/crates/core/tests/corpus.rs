//! Replays the checked-in fuzz corpus through the same checks the fuzz
//! targets make, so the seeds stay meaningful on stable toolchains.

use std::fs;
use std::path::PathBuf;

use gainwalk::algebra::TableGroup;
use gainwalk::format::{parse, parse_with_loader, print};
use gainwalk::{GroupOracle, Permutation, Trail, Word};

fn seeds(target: &str) -> Vec<(String, Vec<u8>)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fuzz/corpus").join(target);
    let mut out: Vec<(String, Vec<u8>)> = fs::read_dir(&dir)
        .unwrap()
        .map(|e| {
            let path = e.unwrap().path();
            (path.display().to_string(), fs::read(&path).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

fn no_files(_: &str) -> Result<String, String> {
    Err("no files".into())
}

#[test]
fn graph_file_seeds() {
    let mut parsed = 0;
    for (name, data) in seeds("graph_file") {
        let text = String::from_utf8(data).unwrap();
        let Ok(input) = parse_with_loader(&text, no_files) else { continue };
        parsed += 1;
        let again = parse_with_loader(&print(&input.oracle, &input.graph), no_files).unwrap();
        assert_eq!(again.graph, input.graph, "{name}");
    }
    assert!(parsed >= 4);
}

#[test]
fn group_table_seeds() {
    for (name, data) in seeds("group_table") {
        let group = TableGroup::parse(std::str::from_utf8(&data).unwrap()).unwrap();
        for x in 0..group.order() {
            assert_eq!(group.mul(x, group.inverse(x)), group.identity(), "{name}");
        }
    }
}

#[test]
fn cycles_seeds() {
    for (name, data) in seeds("cycles") {
        let (&degree, rest) = data.split_first().unwrap();
        let p = Permutation::parse_cycles(std::str::from_utf8(rest).unwrap(), usize::from(degree)).unwrap();
        assert!(p.then(&p.inverse()).is_identity(), "{name}");
        assert_eq!(Permutation::parse_cycles(&p.to_string(), p.degree()).unwrap(), p);
    }
}

#[test]
fn trail_seeds() {
    let g = parse("group free 2\nedge e1 a b [ +1 ]\nedge e2 b c [ -2 ]\nedge e3 c a [ +1 +2 ]\nedge e4 a a [ +2 ]\n")
        .unwrap()
        .graph;
    for (name, data) in seeds("trail") {
        let text = std::str::from_utf8(&data).unwrap();
        let t = Trail::parse(&g, "a", text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(Trail::parse(&g, "a", &t.to_tokens()).unwrap(), t);
    }
}

#[test]
fn word_seeds() {
    let numbered = GroupOracle::free(2);
    let named = GroupOracle::symmetric(3, &[("r", "(123)"), ("s", "(12)")]).unwrap();
    for (name, data) in seeds("word") {
        let text = std::str::from_utf8(&data).unwrap();
        let parsed = [&numbered, &named].into_iter().find_map(|o| {
            let w: Result<Word, _> = text.split_whitespace().map(|t| o.parse_symbol(t)).collect();
            w.ok().map(|w| (o, w))
        });
        let (o, w) = parsed.unwrap_or_else(|| panic!("{name} parses under no oracle"));
        assert!(o.is_identity(&w.concat(&w.invert())).unwrap());
    }
}
