//! Randomized structural invariants over the public API.

use proptest::prelude::*;

use pfsym::algebra::{label_coproduct, label_product, Basis};
use pfsym::bases::{
    is_atomic, is_unsplitable, slash_factorization, slash_product, split_factorization,
    split_product,
};
use pfsym::ncsym::{ncsym_coproduct, ncsym_product, standardize_word, SetPartition};
use pfsym::order::star_lex_cmp;
use pfsym::{Letter, ParkingFunction, Word};

fn arb_word(max_len: usize) -> impl Strategy<Value = Word> {
    (0..=max_len)
        .prop_flat_map(move |n| {
            prop::collection::vec(1..=(max_len as Letter + 2), n)
        })
        .prop_map(|letters| Word::new(letters).expect("letters start at 1"))
}

fn arb_pf(max_len: usize) -> impl Strategy<Value = ParkingFunction> {
    arb_word(max_len).prop_map(|w| w.parkize())
}

fn arb_set_partition(max_n: usize) -> impl Strategy<Value = SetPartition> {
    (0..=max_n)
        .prop_flat_map(|n| prop::collection::vec(0..n.max(1), n))
        .prop_map(|assignment| {
            let blocks_count = assignment.iter().copied().max().map_or(0, |m| m + 1);
            let mut blocks: Vec<Vec<u32>> = vec![Vec::new(); blocks_count];
            for (i, &b) in assignment.iter().enumerate() {
                blocks[b].push(i as u32 + 1);
            }
            blocks.retain(|b| !b.is_empty());
            SetPartition::new(blocks).expect("preimage blocks partition the ground set")
        })
}

proptest! {
    #[test]
    fn parkization_is_idempotent_and_fixes_parking_functions(w in arb_word(7)) {
        let p = w.parkize();
        prop_assert!(p.word().is_parking_function());
        prop_assert_eq!(p.word().parkize(), p.clone());
        if w.is_parking_function() {
            prop_assert_eq!(p.word(), &w);
        }
    }

    #[test]
    fn decomposition_roundtrips(a in arb_pf(7)) {
        let f = a.lr_decompose();
        prop_assert_eq!(f.compose().expect("own decomposition recomposes"), a.clone());
        // Parts are dominated and have strictly increasing minima.
        for part in f.parts() {
            prop_assert_eq!(part.letters().first(), part.letters().iter().min());
        }
        for pair in f.parts().windows(2) {
            prop_assert!(pair[0].min_letter() < pair[1].min_letter());
        }
    }

    #[test]
    fn split_and_slash_are_associative_and_graded(
        a in arb_pf(3),
        b in arb_pf(3),
        c in arb_pf(3),
    ) {
        let split_left = split_product(&split_product(&a, &b), &c);
        let split_right = split_product(&a, &split_product(&b, &c));
        prop_assert_eq!(&split_left, &split_right);
        prop_assert_eq!(split_left.len(), a.len() + b.len() + c.len());

        let slash_left = slash_product(&slash_product(&a, &b), &c);
        let slash_right = slash_product(&a, &slash_product(&b, &c));
        prop_assert_eq!(&slash_left, &slash_right);
        prop_assert_eq!(slash_left.len(), a.len() + b.len() + c.len());
    }

    #[test]
    fn factorizations_recombine_into_irreducibles(a in arb_pf(6)) {
        if a.is_empty() {
            prop_assert!(split_factorization(&a).is_err());
            prop_assert!(slash_factorization(&a).is_err());
            return Ok(());
        }
        let split = split_factorization(&a).expect("nonempty inputs factor");
        prop_assert_eq!(split.recombine(), a.clone());
        for f in split.factors() {
            prop_assert!(is_unsplitable(f).expect("factors are nonempty"));
        }
        let slash = slash_factorization(&a).expect("nonempty inputs factor");
        prop_assert_eq!(slash.recombine(), a.clone());
        for f in slash.factors() {
            prop_assert!(is_atomic(f).expect("factors are nonempty"));
        }
    }

    #[test]
    fn products_are_graded_with_unit_coefficients(a in arb_pf(3), b in arb_pf(3)) {
        let product = label_product(Basis::M, &a, &b);
        for (label, coeff) in product.iter() {
            prop_assert_eq!(label.len(), a.len() + b.len());
            prop_assert_eq!(coeff.clone(), pfsym::coeff::int(1));
        }
        // One term per matching of the decomposition parts.
        let (r, s) = (a.lr_decompose().part_count(), b.lr_decompose().part_count());
        prop_assert_eq!(
            product.len() as u128,
            pfsym::matching::matching_count(r, s)
        );
    }

    #[test]
    fn coproduct_splits_cover_all_part_subsets(a in arb_pf(5)) {
        let split = label_coproduct(&a);
        let k = if a.is_empty() { 0 } else { a.lr_decompose().part_count() };
        let total: pfsym::Coeff = split
            .iter()
            .map(|(_, c)| c.clone())
            .fold(pfsym::coeff::int(0), |x, y| x + y);
        prop_assert_eq!(total, pfsym::coeff::int(1i64 << k));
        for ((l, r), _) in split.iter() {
            prop_assert_eq!(l.len() + r.len(), a.len());
        }
    }

    #[test]
    fn basis_changes_roundtrip(a in arb_pf(4)) {
        use pfsym::algebra::{Basis, Element};
        use pfsym::bases::{element_to_basis, PosetStore};
        use std::sync::OnceLock;

        static STORE: OnceLock<PosetStore> = OnceLock::new();
        let store = STORE.get_or_init(|| PosetStore::with_cap(4, pfsym::Exec::Sequential));

        let m = Element::from_label(Basis::M, a.clone());
        let q = element_to_basis(&m, Basis::Q, store).unwrap();
        prop_assert_eq!(element_to_basis(&q, Basis::M, store).unwrap(), m.clone());

        let r = Element::from_label(Basis::R, a);
        let in_m = element_to_basis(&r, Basis::M, store).unwrap();
        prop_assert_eq!(element_to_basis(&in_m, Basis::R, store).unwrap(), r);
    }

    #[test]
    fn star_lex_is_antisymmetric_and_consistent(a in arb_pf(5), b in arb_pf(5)) {
        if a.len() == b.len() {
            let forward = star_lex_cmp(&a, &b).unwrap();
            let backward = star_lex_cmp(&b, &a).unwrap();
            prop_assert_eq!(forward, backward.reverse());
            prop_assert_eq!(forward == std::cmp::Ordering::Equal, a == b);
        }
    }

    #[test]
    fn set_partition_structure_is_graded(p in arb_set_partition(4), q in arb_set_partition(4)) {
        let product = ncsym_product(&p, &q);
        for (label, coeff) in product.iter() {
            prop_assert_eq!(label.ground_size(), p.ground_size() + q.ground_size());
            prop_assert_eq!(coeff.clone(), pfsym::coeff::int(1));
        }
        let split = ncsym_coproduct(&p);
        for ((l, r), _) in split.iter() {
            prop_assert_eq!(l.ground_size() + r.ground_size(), p.ground_size());
        }
    }

    #[test]
    fn standardization_matches_parkization_on_distinct_letters(
        base in prop::collection::btree_set(1..40u32, 0..=7),
        seed in any::<u64>(),
    ) {
        // Shuffle the distinct letters deterministically from the seed.
        let mut letters: Vec<Letter> = base.into_iter().collect();
        let mut state = seed | 1;
        for i in (1..letters.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            letters.swap(i, j);
        }
        let word = Word::new(letters).unwrap();
        let standardized = standardize_word(&word).expect("letters are distinct");
        prop_assert_eq!(standardized, word.parkize());
    }
}
