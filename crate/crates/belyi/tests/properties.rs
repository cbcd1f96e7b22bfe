//! Randomized invariants for the word algebra and its class computations.

use proptest::prelude::*;

use belyi::words::{magnus_class, ordering_rule_class, DegreeTwoExpansion, Letter, Sign, Word};
use belyi::{CurveParams, Residue};

fn arb_word(n: u64, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..n as i64, any::<bool>()), 0..max_len).prop_map(move |raw| {
        let entries: Vec<(i64, i64)> = raw
            .into_iter()
            .map(|(i, s)| (i, if s { 1 } else { -1 }))
            .collect();
        Word::parse(n, &entries)
    })
}

/// Products of commutators of random words: always zero exponent sums.
fn arb_commutator_word(n: u64) -> impl Strategy<Value = Word> {
    prop::collection::vec((arb_word(n, 6), arb_word(n, 6)), 1..4).prop_map(move |parts| {
        let mut out = Word::empty(n);
        for (a, b) in parts {
            let comm = a.concat(&b).concat(&a.inverse()).concat(&b.inverse());
            out = out.concat(&comm);
        }
        out
    })
}

/// A word where each generator of a random subset occurs exactly once with
/// each sign, in random positions — the shape of the boundary word.
fn arb_once_each_word(n: u64) -> impl Strategy<Value = Word> {
    prop::collection::btree_set(0..n as i64, 1..n as usize)
        .prop_flat_map(move |subset| {
            let letters: Vec<Letter> = subset
                .iter()
                .flat_map(|&i| {
                    [
                        Letter::new(Residue::new(i, n), Sign::Pos),
                        Letter::new(Residue::new(i, n), Sign::Neg),
                    ]
                })
                .collect();
            Just(letters).prop_shuffle()
        })
        .prop_map(move |letters| Word::from_letters(n, letters))
}

proptest! {
    #[test]
    fn free_reduce_is_idempotent_and_reduced(w in arb_word(7, 24)) {
        let reduced = w.free_reduce();
        prop_assert_eq!(reduced.free_reduce(), reduced.clone());
        for pair in reduced.letters().windows(2) {
            prop_assert!(
                !(pair[0].index == pair[1].index && pair[0].sign != pair[1].sign)
            );
        }
    }

    #[test]
    fn expansion_is_invariant_under_free_reduction(w in arb_word(7, 24)) {
        prop_assert_eq!(
            DegreeTwoExpansion::of_word(&w),
            DegreeTwoExpansion::of_word(&w.free_reduce())
        );
    }

    #[test]
    fn commutator_words_have_antisymmetric_quadratic_part(w in arb_commutator_word(7)) {
        let expansion = DegreeTwoExpansion::of_word(&w);
        prop_assert!(expansion.linear().iter().all(|&c| c == 0));
        prop_assert!(expansion.is_antisymmetric());
    }

    #[test]
    fn magnus_is_additive_on_commutator_words(
        w1 in arb_commutator_word(7),
        w2 in arb_commutator_word(7),
    ) {
        let sum = magnus_class(&w1.concat(&w2)).unwrap();
        prop_assert_eq!(
            sum,
            magnus_class(&w1).unwrap().add(&magnus_class(&w2).unwrap())
        );
    }

    #[test]
    fn magnus_is_conjugation_invariant(
        w in arb_commutator_word(7),
        g in arb_word(7, 10),
    ) {
        let conjugate = g.concat(&w).concat(&g.inverse());
        prop_assert_eq!(
            magnus_class(&conjugate).unwrap(),
            magnus_class(&w).unwrap()
        );
    }

    #[test]
    fn inverting_a_word_negates_its_class(w in arb_commutator_word(7)) {
        prop_assert_eq!(
            magnus_class(&w.inverse()).unwrap(),
            magnus_class(&w).unwrap().neg()
        );
    }

    #[test]
    fn ordering_rule_agrees_with_magnus_on_once_each_words(w in arb_once_each_word(7)) {
        prop_assert_eq!(
            ordering_rule_class(&w).unwrap(),
            magnus_class(&w).unwrap()
        );
    }

    #[test]
    fn between_is_consistent_under_rotation(
        w in arb_once_each_word(7),
        offset in 0usize..14,
    ) {
        // rotating the word does not change which letters lie between an
        // inverse pair
        let len = w.len();
        prop_assume!(len > 0);
        let offset = offset % len;
        let mut rotated_letters = w.letters()[offset..].to_vec();
        rotated_letters.extend_from_slice(&w.letters()[..offset]);
        let rotated = Word::from_letters(w.n(), rotated_letters);
        let i = w.letters()[0].index;
        prop_assert_eq!(w.between(i).unwrap(), rotated.between(i).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn boundary_word_class_is_stable_under_free_insertion(
        seed_k in 1i64..10,
        position in 0usize..28,
        gen in 0i64..11,
    ) {
        // inserting g g^{-1} anywhere leaves every route unchanged
        let p = match CurveParams::new(11, seed_k) {
            Ok(p) => p,
            Err(_) => return Ok(()),
        };
        let (_, word) = belyi::covering::lift_boundary_loop(&p);
        let base = magnus_class(&word).unwrap();
        let position = position % (word.len() + 1);
        let mut letters = word.letters().to_vec();
        let g = Residue::new(gen, 11);
        letters.insert(position, Letter::new(g, Sign::Neg));
        letters.insert(position, Letter::new(g, Sign::Pos));
        let padded = Word::from_letters(11, letters);
        prop_assert_eq!(magnus_class(&padded).unwrap(), base);
    }
}
