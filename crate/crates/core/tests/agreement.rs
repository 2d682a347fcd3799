use gainwalk::brute::{all_labels_equal, random_instance, suite_params, LabelAgreement, DEFAULT_CAP};
use gainwalk::{decide, find_witness, validate_witness, Error, VerdictKind};

#[test]
fn decide_matches_enumeration_on_random_instances() {
    let mut checked = 0;
    let mut no = 0;
    for seed in 0..400u64 {
        let inst = random_instance(seed, &suite_params(seed)).unwrap();
        let (g, o, a, b) = (&inst.graph, &inst.oracle, inst.from.as_str(), inst.to.as_str());
        let expected = match all_labels_equal(g, o, a, b, DEFAULT_CAP) {
            Err(Error::Overflow { .. }) => continue,
            other => other.unwrap(),
        };
        let verdict = decide(g, o, a, b).unwrap();
        let want = match expected {
            LabelAgreement::Vacuous => VerdictKind::VacuousYes,
            LabelAgreement::Equal => VerdictKind::Yes,
            LabelAgreement::Distinct => VerdictKind::No,
        };
        assert_eq!(verdict.kind(), want, "seed {seed}\n{g:?}");
        if verdict.is_no() {
            no += 1;
            let found = find_witness(g, o, a, b).unwrap();
            assert!(validate_witness(g, o, a, b, &found.witness).unwrap(), "seed {seed}");
        }
        checked += 1;
    }
    assert!(checked > 350);
    assert!(no > 20);
}
