//! Randomized agreement between the two miners and the brute-force oracle.

mod common;

use apriori_core::{
    compare_results, encode_database, mine_bruteforce, mine_classical, mine_prefixed, MiningResult,
    PrefixedItemsetStore, SupportThreshold, TokenCount, TransactionDatabase,
};
use proptest::prelude::*;

fn arb_database() -> impl Strategy<Value = TransactionDatabase> {
    (1usize..=12).prop_flat_map(|n_items| {
        prop::collection::vec(prop::collection::vec(0..n_items, 0..=n_items), 0..=50).prop_map(
            |rows| {
                encode_database(rows.into_iter().enumerate().map(|(i, items)| {
                    // Two-digit labels keep lexicographic and numeric order aligned.
                    (
                        format!("t{i}"),
                        items
                            .into_iter()
                            .map(|x| format!("i{x:02}"))
                            .collect::<Vec<_>>(),
                    )
                }))
            },
        )
    })
}

fn counters(result: &MiningResult) -> Vec<apriori_core::LevelMetrics> {
    result
        .metrics
        .levels
        .iter()
        .map(|m| m.counters_only())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn miners_agree_with_oracle(db in arb_database(), min_sup in 1u64..=5) {
        let threshold = SupportThreshold::absolute(min_sup).unwrap();
        let oracle = mine_bruteforce(&db, threshold, 12).unwrap();
        let classical = mine_classical(&db, threshold, None);
        let prefixed = mine_prefixed(&db, threshold, None);
        let diff = compare_results(&oracle, &classical);
        prop_assert!(diff.is_empty(), "classical vs oracle: {:?}", diff);
        let diff = compare_results(&oracle, &prefixed);
        prop_assert!(diff.is_empty(), "prefixed vs oracle: {:?}", diff);
        prop_assert_eq!(&classical.levels, &prefixed.levels);
    }

    #[test]
    fn levels_are_downward_closed_and_exact(db in arb_database(), min_sup in 1u64..=5) {
        let threshold = SupportThreshold::absolute(min_sup).unwrap();
        let result = mine_prefixed(&db, threshold, None);
        for (i, level) in result.levels.iter().enumerate() {
            prop_assert_eq!(level.k(), i + 1);
            prop_assert!(!level.is_empty());
            for (set, count) in level.entries() {
                prop_assert!(*count >= min_sup);
                let direct = db.transactions().iter().filter(|t| set.is_subset_of(&t.items)).count() as u64;
                prop_assert_eq!(*count, direct);
                if level.k() > 1 {
                    let below = &result.levels[i - 1];
                    for skip in 0..set.len() {
                        let mut sub = set.items().to_vec();
                        sub.remove(skip);
                        prop_assert!(below.contains(&sub));
                    }
                }
            }
        }
    }

    #[test]
    fn prefixed_never_does_more_candidate_work(db in arb_database(), min_sup in 1u64..=5) {
        let threshold = SupportThreshold::absolute(min_sup).unwrap();
        let classical = mine_classical(&db, threshold, None);
        let prefixed = mine_prefixed(&db, threshold, None);
        for (c, p) in classical.metrics.levels.iter().zip(&prefixed.metrics.levels) {
            prop_assert_eq!(c.k, p.k);
            prop_assert!(p.join_item_comparisons <= c.join_item_comparisons);
            prop_assert!(p.prune_subset_lookups <= c.prune_subset_lookups);
            prop_assert_eq!(c.containment_tests, p.containment_tests);
            prop_assert_eq!(c.candidates_after_prune, p.candidates_after_prune);
        }
        for level in &classical.levels {
            let store = PrefixedItemsetStore::from_level(level);
            prop_assert!(store.token_count() <= level.token_count());
        }
    }

    #[test]
    fn mining_is_deterministic(db in arb_database(), min_sup in 1u64..=5) {
        let threshold = SupportThreshold::absolute(min_sup).unwrap();
        let a = mine_classical(&db, threshold, None);
        let b = mine_classical(&db, threshold, None);
        prop_assert_eq!(&a.levels, &b.levels);
        prop_assert_eq!(counters(&a), counters(&b));
    }
}
