//! Property tests: structural invariants driven by randomized inputs,
//! each checked against a brute-force or algebraic oracle.

use num::BigUint;
use parideals::affweyl::{element_from_word, inversions, length};
use parideals::diagrams::{enumerate_nw, is_nw, nw_count, r_boxes_formula, t_boxes_formula, DiagramShape};
use parideals::ideals::{close, delta_i_pos, enumerate_ideals, is_valid_ideal, Parabolic, RootSet};
use parideals::rootsys::{Family, RootSystem, RootSystemType};
use proptest::prelude::*;

fn build(f: Family, l: usize) -> RootSystem {
    RootSystem::build(RootSystemType::new(f, l).unwrap()).unwrap()
}

fn small_system() -> impl Strategy<Value = (Family, usize)> {
    prop_oneof![
        (1usize..=4).prop_map(|l| (Family::A, l)),
        (2usize..=4).prop_map(|l| (Family::B, l)),
        (2usize..=4).prop_map(|l| (Family::C, l)),
        (3usize..=4).prop_map(|l| (Family::D, l)),
        Just((Family::G, 2)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    // the DP count agrees with explicit enumeration on arbitrary shapes
    #[test]
    fn nw_dp_matches_enumeration(p in 0i64..=6, q_off in 0i64..=6, mask in 0u32..128) {
        let q = q_off.min(p);
        let ls: Vec<i64> = (1..=q + 1).filter(|&v| mask & (1 << (v - 1)) != 0).collect();
        let shape = DiagramShape::t_with_boxes(p, q, &ls).unwrap();
        let listed = enumerate_nw(&shape).unwrap();
        prop_assert_eq!(BigUint::from(listed.len()), nw_count(&shape).unwrap());
        prop_assert_eq!(
            t_boxes_formula(p, q, &ls).unwrap(),
            BigUint::from(listed.len())
        );
        for d in &listed {
            prop_assert!(is_nw(&shape, &d.boxes(&shape)));
        }
    }

    #[test]
    fn r_shapes_formula(p in 0i64..=7, mask in 0u32..256) {
        let ls: Vec<i64> = (1..=p + 1).filter(|&v| mask & (1 << (v - 1)) != 0).collect();
        let shape = DiagramShape::r_with_boxes(p, &ls).unwrap();
        prop_assert_eq!(r_boxes_formula(p, &ls).unwrap(), nw_count(&shape).unwrap());
    }

    // closure is idempotent, monotone, and always lands in F_I
    #[test]
    fn closure_properties((f, l) in small_system(), i_mask in 0u32..16, seed_mask in 0u64..4096) {
        let rs = build(f, l);
        let i_set = Parabolic::from_indices(
            &(1..=l).filter(|&i| i_mask & (1 << (i - 1)) != 0).collect::<Vec<_>>(),
        );
        let levi = delta_i_pos(&rs, &i_set);
        let mut seed = RootSet::empty();
        for idx in 0..rs.num_positive_roots().min(12) {
            if seed_mask & (1 << idx) != 0 && !levi.contains(idx) {
                seed.insert(idx);
            }
        }
        let once = close(&rs, &i_set, &seed).unwrap();
        prop_assert!(is_valid_ideal(&rs, &i_set, &once));
        let twice = close(&rs, &i_set, once.members()).unwrap();
        prop_assert_eq!(once.members(), twice.members());
        prop_assert!(seed.is_subset_of(once.members()));
        // and it is the least such set: every enumerated ideal containing
        // the seed contains the closure
        for ideal in enumerate_ideals(&rs, &i_set) {
            if seed.is_subset_of(ideal.members()) {
                prop_assert!(once.members().is_subset_of(ideal.members()));
            }
        }
    }

    // reflections are involutive isometries on rational vectors
    #[test]
    fn reflection_involution((f, l) in small_system(), picks in prop::collection::vec(0usize..64, 2), nums in prop::collection::vec(-6i64..=6, 8)) {
        let rs = build(f, l);
        let root = rs.positive_root(picks[0] % rs.num_positive_roots()).clone();
        let x: Vec<parideals::Rat> = (0..l)
            .map(|i| parideals::Rat::new(nums[i].into(), ((nums[i + 4].abs() % 3) + 1).into()))
            .collect();
        let once = rs.reflect(&root, &x).unwrap();
        let twice = rs.reflect(&root, &once).unwrap();
        prop_assert_eq!(&twice, &x);
        prop_assert_eq!(rs.pairing(&once, &once), rs.pairing(&x, &x));
    }

    // words compose associatively and lengths track inversion sets
    #[test]
    fn word_length_parity((f, l) in small_system(), word in prop::collection::vec(0usize..5, 0..8)) {
        let rs = build(f, l);
        let word: Vec<usize> = word.into_iter().map(|i| i % (l + 1)).collect();
        let w = element_from_word(&rs, &word).unwrap();
        // a word of length n reduces to length ≤ n with the same parity
        let len = length(&rs, &w);
        prop_assert!(len <= word.len());
        prop_assert_eq!(len % 2, word.len() % 2);
        prop_assert_eq!(inversions(&rs, &w).len(), len);
        // split composition agrees with one-shot composition
        let mid = word.len() / 2;
        let left = element_from_word(&rs, &word[..mid]).unwrap();
        let right = element_from_word(&rs, &word[mid..]).unwrap();
        prop_assert_eq!(left.compose(&right), w);
    }

    // enumeration output is deduplicated, valid and deterministically
    // ordered for arbitrary parabolics
    #[test]
    fn enumeration_is_canonical((f, l) in small_system(), i_mask in 0u32..16) {
        let rs = build(f, l);
        let i_set = Parabolic::from_indices(
            &(1..=l).filter(|&i| i_mask & (1 << (i - 1)) != 0).collect::<Vec<_>>(),
        );
        let ideals = enumerate_ideals(&rs, &i_set);
        for pair in ideals.windows(2) {
            let ka = (pair[0].size(), pair[0].members().indices());
            let kb = (pair[1].size(), pair[1].members().indices());
            prop_assert!(ka < kb);
        }
        for ideal in &ideals {
            prop_assert!(is_valid_ideal(&rs, &i_set, ideal));
        }
    }
}
