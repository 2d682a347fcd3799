//! Formal words and word-problem oracles.

mod oracle;
mod perm;
mod table;
mod word;

pub use oracle::{Backend, GroupOracle, OracleStats, SymmetricGroup};
pub use perm::Permutation;
pub use table::TableGroup;
pub use word::{Symbol, Word};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;
    use proptest::prelude::*;

    fn w(ids: &[i32]) -> Word {
        Word::from_signed(ids)
    }

    fn s3() -> GroupOracle {
        GroupOracle::symmetric(3, &[("r", "(123)"), ("s", "(12)")]).unwrap()
    }

    fn z6_table() -> GroupOracle {
        let mut rows = Vec::new();
        for i in 0..6 {
            for j in 0..6 {
                rows.push((i + j) % 6);
            }
        }
        let group = TableGroup::new(6, 0, vec![1], rows).unwrap();
        GroupOracle::new(Backend::Table { group, source: "z6.table".into() })
    }

    fn all_backends() -> Vec<GroupOracle> {
        vec![
            GroupOracle::z2(2),
            GroupOracle::free_abelian(2),
            GroupOracle::cyclic(6).unwrap(),
            s3(),
            z6_table(),
            GroupOracle::free(2),
        ]
    }

    #[test]
    fn identity_examples() {
        assert!(GroupOracle::z2(3).is_identity(&w(&[1, 1])).unwrap());
        assert!(s3().is_identity(&w(&[1, 1, 1])).unwrap());
        assert!(!GroupOracle::free(2).is_identity(&w(&[1, 2, -1, -2])).unwrap());
        for o in all_backends() {
            assert!(o.is_identity(&Word::identity()).unwrap());
        }
    }

    #[test]
    fn unknown_generator_is_an_input_error() {
        let o = GroupOracle::z2(2);
        assert_eq!(
            o.is_identity(&w(&[3])),
            Err(Error::UnknownGenerator { generator: 3, count: 2 })
        );
        assert_eq!(o.stats().query_count, 0);
        assert!(GroupOracle::cyclic(4).unwrap().is_identity(&w(&[2])).is_err());
    }

    #[test]
    fn equality_examples() {
        let o = s3();
        assert!(o.equals(&w(&[1, 2]), &w(&[1, 2])).unwrap());
        assert!(!o.equals(&w(&[1, 2]), &w(&[2, 1])).unwrap());
        assert!(GroupOracle::z2(2).equals(&w(&[1, 2]), &w(&[2, 1])).unwrap());
    }

    #[test]
    fn order_two_examples() {
        let o = s3();
        assert!(o.has_order_at_most_2(&Word::identity()).unwrap());
        assert!(o.has_order_at_most_2(&w(&[2])).unwrap());
        assert!(!o.has_order_at_most_2(&w(&[1])).unwrap());
    }

    #[test]
    fn commutation_examples() {
        let o = s3();
        assert!(o.commutes(&w(&[1, 2]), &Word::identity()).unwrap());
        assert!(!o.commutes(&w(&[1]), &w(&[2])).unwrap());
        assert!(GroupOracle::free_abelian(2).commutes(&w(&[1]), &w(&[2])).unwrap());
        assert!(!GroupOracle::free(2).commutes(&w(&[1]), &w(&[2])).unwrap());
    }

    #[test]
    fn cyclic_and_table_agree() {
        let c = GroupOracle::cyclic(6).unwrap();
        let t = z6_table();
        for ids in [&[1, 1, 1, 1, 1, 1][..], &[1, -1], &[1, 1, 1], &[-1, -1, -1, -1, -1, -1], &[]] {
            assert_eq!(c.is_identity(&w(ids)).unwrap(), t.is_identity(&w(ids)).unwrap());
        }
    }

    #[test]
    fn stats_track_queries() {
        let o = GroupOracle::free(2);
        let words = [w(&[1]), w(&[1, 2, -2]), w(&[]), w(&[2, 2])];
        for x in &words {
            o.is_identity(x).unwrap();
        }
        let s = o.stats();
        assert_eq!(s.query_count, 4);
        assert_eq!(s.max_query_length, 3);
        assert_eq!(s.total_query_length, 6);
        o.reset_stats();
        assert_eq!(o.stats(), OracleStats::default());
    }

    #[test]
    fn symbol_parsing_and_formatting() {
        let o = s3();
        assert_eq!(o.parse_symbol("+s").unwrap(), Symbol::pos(2));
        assert_eq!(o.parse_symbol("-r").unwrap(), Symbol::neg(1));
        assert!(o.parse_symbol("+t").is_err());
        assert!(o.parse_symbol("s").is_err());
        assert_eq!(o.format_word(&w(&[1, -2])), "+r -s");
        let f = GroupOracle::free(2);
        assert_eq!(f.parse_symbol("-2").unwrap(), Symbol::neg(2));
        assert!(f.parse_symbol("+3").is_err());
        assert!(f.parse_symbol("+0").is_err());
    }

    #[test]
    fn headers() {
        assert_eq!(s3().backend().header(), "group sym 3 gens r=(1,2,3);s=(1,2)");
        assert_eq!(GroupOracle::z2(2).backend().header(), "group z2 2");
    }

    fn word_over(gens: u32, max_len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec((1..=gens, any::<bool>()), 0..=max_len)
            .prop_map(|v| v.into_iter().map(|(g, i)| Symbol::new(g, i)).collect())
    }

    proptest! {
        #[test]
        fn word_times_inverse_is_identity(x in word_over(2, 10)) {
            for o in all_backends() {
                let x = if o.generator_count() == 1 { single_gen(&x) } else { x.clone() };
                prop_assert!(o.is_identity(&x.concat(&x.invert())).unwrap());
            }
        }

        #[test]
        fn equality_is_a_left_congruence(u in word_over(2, 6), v in word_over(2, 6), p in word_over(2, 6)) {
            for o in all_backends() {
                let (u, v, p) = if o.generator_count() == 1 {
                    (single_gen(&u), single_gen(&v), single_gen(&p))
                } else {
                    (u.clone(), v.clone(), p.clone())
                };
                prop_assert!(o.equals(&u, &u).unwrap());
                prop_assert_eq!(o.equals(&u, &v).unwrap(), o.equals(&v, &u).unwrap());
                if o.equals(&u, &v).unwrap() {
                    prop_assert!(o.equals(&p.concat(&u), &p.concat(&v)).unwrap());
                }
            }
        }

        #[test]
        fn equality_is_transitive(u in word_over(2, 5), v in word_over(2, 5), x in word_over(2, 5)) {
            for o in all_backends() {
                if o.generator_count() == 1 { continue; }
                if o.equals(&u, &v).unwrap() && o.equals(&v, &x).unwrap() {
                    prop_assert!(o.equals(&u, &x).unwrap());
                }
            }
        }

        #[test]
        fn free_reduction_never_changes_the_answer(x in word_over(2, 12)) {
            for o in all_backends() {
                let x = if o.generator_count() == 1 { single_gen(&x) } else { x.clone() };
                prop_assert_eq!(o.is_identity(&x).unwrap(), o.is_identity(&x.free_reduce()).unwrap());
            }
        }

        #[test]
        fn commutator_agrees_with_direct_equality(u in word_over(2, 5), v in word_over(2, 5)) {
            for o in all_backends() {
                let (u, v) = if o.generator_count() == 1 {
                    (single_gen(&u), single_gen(&v))
                } else {
                    (u.clone(), v.clone())
                };
                prop_assert_eq!(
                    o.commutes(&u, &v).unwrap(),
                    o.equals(&u.concat(&v), &v.concat(&u)).unwrap()
                );
            }
        }

        #[test]
        fn stats_record_longest_query(words in prop::collection::vec(word_over(2, 9), 1..20)) {
            let o = GroupOracle::free(2);
            for x in &words {
                o.is_identity(x).unwrap();
            }
            let s = o.stats();
            prop_assert_eq!(s.query_count, words.len() as u64);
            prop_assert_eq!(s.max_query_length, words.iter().map(Word::len).max().unwrap() as u64);
        }
    }

    fn single_gen(x: &Word) -> Word {
        x.symbols().iter().map(|s| Symbol::new(1, s.is_inverse())).collect()
    }
}
