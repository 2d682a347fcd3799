#![no_main]
use gainwalk::Permutation;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&degree, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    if let Ok(p) = Permutation::parse_cycles(text, usize::from(degree)) {
        assert!(p.then(&p.inverse()).is_identity());
        let again = Permutation::parse_cycles(&p.to_string(), p.degree()).expect("printed cycles parse");
        assert_eq!(again, p);
    }
});
