use dedukt::tarski::{
    check_finitary, check_iff, check_monotonic, random_relation, random_system, rel_from_system, system_from_rel,
    DeductiveRelation,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #[test]
    fn relations_of_systems_are_finitary_and_monotonic(seed in any::<u64>(), n in 1usize..=5) {
        let s = random_system(&mut ChaCha8Rng::seed_from_u64(seed), n);
        let r = rel_from_system(&s);
        prop_assert!(r.is_finitary());
        prop_assert!(r.is_monotonic());
        prop_assert_eq!(check_iff(&s, 3), Ok(()));
    }

    #[test]
    fn systems_of_relations_ignore_order_and_repetition(seed in any::<u64>(), n in 1usize..=5, list in prop::collection::vec(0usize..5, 0..6)) {
        let r = random_relation(&mut ChaCha8Rng::seed_from_u64(seed), n);
        let s = system_from_rel(&r);
        let list: Vec<usize> = list.into_iter().map(|a| a % n).collect();
        let mut shuffled = list.clone();
        shuffled.reverse();
        shuffled.extend(list.iter().take(2));
        for j in 0..n {
            prop_assert_eq!(s.derivable(&list, j), s.derivable(&shuffled, j));
        }
    }

    #[test]
    fn implications_hold_on_applicable_relations(seed in any::<u64>(), n in 1usize..=5) {
        let r = random_relation(&mut ChaCha8Rng::seed_from_u64(seed), n);
        prop_assert_eq!(check_finitary(&r), Ok(()));
        prop_assert_eq!(check_monotonic(&r.monotone_closure()), Ok(()));
        // the round trip of any relation is its monotone closure
        prop_assert_eq!(rel_from_system(&system_from_rel(&r)), r.monotone_closure());
    }
}

#[test]
fn identity_relation_roundtrips() {
    let r = DeductiveRelation::new(3, |d, j| d & (1 << j) != 0);
    assert!(r.is_monotonic());
    assert_eq!(rel_from_system(&system_from_rel(&r)), r);
}
