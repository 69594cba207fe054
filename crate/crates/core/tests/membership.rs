use prefix_normal::membership::{
    filter_blocks, filter_run_of_ones, survivor_counts, survivor_ratio, test_doubling_detailed,
    FilterPhase, Stage,
};
use prefix_normal::{is_prefix_normal, BinaryWord, Method, RunLengthForm};
use proptest::prelude::*;

#[test]
fn filters_never_reject_prefix_normal_words() {
    for n in 0..=16 {
        for x in 0..1u64 << n {
            let w = BinaryWord::from_u64(x, n);
            let run = filter_run_of_ones(&w);
            let block = filter_blocks(&RunLengthForm::from_word(&w));
            if is_prefix_normal(&w) {
                assert!(run.passed() && block.passed(), "{w}");
            }
        }
    }
}

#[test]
fn survivor_counts_match_direct_filtering() {
    for n in 1..=14 {
        let (mut trivial, mut both) = (0u128, 0u128);
        for x in 0..1u64 << n {
            let w = BinaryWord::from_u64(x, n);
            if filter_run_of_ones(&w).passed() {
                trivial += 1;
                if filter_blocks(&RunLengthForm::from_word(&w)).passed() {
                    both += 1;
                }
            }
        }
        let (t, b) = survivor_counts(n, 26).unwrap();
        assert_eq!((t.survivors, b.survivors), (trivial, both), "n={n}");
    }
}

#[test]
fn trivial_ratio_increases() {
    let ratios: Vec<f64> = (10..=24)
        .step_by(2)
        .map(|n| {
            survivor_ratio(n, FilterPhase::TrivialOnly, 24)
                .unwrap()
                .ratio
        })
        .collect();
    assert!(ratios.windows(2).all(|p| p[0] < p[1]), "{ratios:?}");
}

#[test]
fn member_reports_its_deciding_stage() {
    let w: BinaryWord = "11100101011100110".parse().unwrap();
    assert_eq!(Method::Member.test(&w).decided_by, Stage::BlockFilter);
    let w: BinaryWord = "1011".parse().unwrap();
    assert_eq!(Method::Member.test(&w).decided_by, Stage::RunFilter);
}

/// Words with a leading run of 1s, which are prefix normal often enough to
/// exercise the exact phase.
fn led_word(max_len: usize) -> impl Strategy<Value = BinaryWord> {
    (
        1usize..12,
        proptest::collection::vec(any::<bool>(), 0..max_len),
    )
        .prop_map(|(lead, tail)| {
            let mut w = BinaryWord::ones(lead);
            w.extend(tail);
            w
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn testers_agree_on_length_100(w in led_word(100)) {
        let reference = is_prefix_normal(&w);
        for m in Method::ALL {
            let got = m.test(&w);
            prop_assert_eq!(got.accepted, reference, "{} on {}", m, w);
            if let Some(v) = got.witness {
                prop_assert!(v.holds_in(&w));
            }
        }
    }

    #[test]
    fn testers_agree_on_length_1000(w in led_word(1000)) {
        let reference = is_prefix_normal(&w);
        for m in Method::ALL {
            prop_assert_eq!(m.test(&w).accepted, reference, "{} on {}", m, w);
        }
    }

    #[test]
    fn doubling_stops_at_a_violating_prefix(w in led_word(300)) {
        let (outcome, checked) = test_doubling_detailed(&w);
        prop_assert!(checked <= w.len());
        if !outcome.accepted {
            prop_assert!(!is_prefix_normal(&w.prefix(checked)));
        }
    }
}
