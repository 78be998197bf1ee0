//! The acceptance gate: one test per shipped criterion, each asserting
//! exact (never approximate) equalities and printing a PASS line with its
//! measured wall time. Run with `--nocapture` to see the lines.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use pfsym::algebra::{
    coproduct, label_coproduct, label_product, m_coproduct, m_product, Basis, Element,
};
use pfsym::bases::{
    check_r_triangular, element_to_basis, is_atomic, is_unsplitable, r_to_m, slash_factorization,
    slash_product, split_factorization, split_product, tensor_to_basis, PosetStore,
};
use pfsym::coeff;
use pfsym::families::{enumerate_family, enumerate_parking_functions, is_member, Family};
use pfsym::hopf::{NcsymHopf, Pfsym};
use pfsym::linear::LinComb;
use pfsym::ncsym::{
    enumerate_set_partitions, ncsym_coproduct, ncsym_product, omega, partition_covers,
    standardize_blocks, standardize_word, SetPartition,
};
use pfsym::order::{covers, Poset};
use pfsym::verify::{all_pass, check_axiom, check_closure, run_instance, Axiom, Instance};
use pfsym::{Exec, Letter, ParkingFunction, Word};

const EXEC: Exec = Exec::Parallel;

fn p(s: &str) -> ParkingFunction {
    s.parse().expect("fixture parses as a parking function")
}

fn w(s: &str) -> Word {
    s.parse().expect("fixture parses as a word")
}

fn sp(s: &str) -> SetPartition {
    s.parse().expect("fixture parses as a set partition")
}

fn unit_comb<L: Ord + Clone>(labels: &[L]) -> LinComb<L> {
    LinComb::from_terms(labels.iter().map(|l| (l.clone(), coeff::one())))
}

fn reverse(a: &ParkingFunction) -> ParkingFunction {
    let letters: Vec<Letter> = a.letters().iter().rev().copied().collect();
    // Parking is rearrangement-invariant, so the reversal always parks.
    ParkingFunction::new(Word::new(letters).expect("letters unchanged"))
        .expect("reversal of a parking function parks")
}

/// Independent connectivity oracle: `a` is connected when no proper prefix
/// parks while the rest, written in letters above the cut and lowered by
/// it, parks as well.
fn is_connected(a: &ParkingFunction) -> bool {
    let letters = a.letters();
    let n = letters.len();
    !(1..n).any(|m| {
        let prefix_parks = Word::new(letters[..m].to_vec())
            .expect("nonzero letters")
            .is_parking_function();
        if !prefix_parks || !letters[m..].iter().all(|&x| x > m as Letter) {
            return false;
        }
        let lowered: Vec<Letter> = letters[m..].iter().map(|&x| x - m as Letter).collect();
        Word::new(lowered).expect("letters above the cut stay nonzero").is_parking_function()
    })
}

fn catalan(n: usize) -> usize {
    let mut c = vec![1usize];
    for k in 0..n {
        c.push((0..=k).map(|i| c[i] * c[k - i]).sum());
    }
    c[n]
}

fn budget(name: &str, elapsed: Duration, limit: Duration) {
    assert!(
        elapsed < limit,
        "{name} took {elapsed:?}, over its {limit:?} budget"
    );
}

#[test]
fn criterion_1_worked_examples() {
    let start = Instant::now();

    // Product of two monomial labels: one term per matching, seven in all.
    let product = label_product(Basis::M, &p("211"), &p("353112"));
    let expected = unit_comb(&[
        p("244511686"),
        p("268611445"),
        p("445211686"),
        p("445268611"),
        p("686211445"),
        p("686244511"),
        p("686445211"),
    ]);
    assert_eq!(product, expected);

    // Coproduct of a two-part label: four subset splits.
    let split = label_coproduct(&p("445132"));
    let expected_split = unit_comb(&[
        (ParkingFunction::empty(), p("445132")),
        (p("112"), p("132")),
        (p("132"), p("112")),
        (p("445132"), ParkingFunction::empty()),
    ]);
    assert_eq!(split, expected_split);

    // Parkization.
    assert_eq!(w("875221").parkize(), p("654221"));

    // Decomposition at left-to-right minima, with 1-based cut positions.
    let word = w("56357622315");
    assert_eq!(
        word.lr_minima_positions().unwrap(),
        vec![1, 3, 7, 10],
        "minima positions of 56357622315"
    );
    let parts: Vec<Word> = p("56357622315").lr_decompose().parts().to_vec();
    assert_eq!(parts, vec![w("15"), w("223"), w("3576"), w("56")]);

    // Split product.
    assert_eq!(split_product(&p("2213"), &p("32214")), p("722661358"));

    // Set-partition product: seven terms.
    let nc_product = ncsym_product(&sp("1,3|2,4"), &sp("1,3,4|2"));
    let expected_nc = unit_comb(&[
        sp("1,3|2,4|5,7,8|6"),
        sp("1,3,5,7,8|2,4|6"),
        sp("1,3|2,4,5,7,8|6"),
        sp("1,3,6|2,4|5,7,8"),
        sp("1,3|2,4,6|5,7,8"),
        sp("1,3,5,7,8|2,4,6"),
        sp("1,3,6|2,4,5,7,8"),
    ]);
    assert_eq!(nc_product, expected_nc);

    // Set-partition coproduct: eight terms over block subsets.
    let nc_split = ncsym_coproduct(&sp("1,4,6|2,5|3"));
    let expected_nc_split = unit_comb(&[
        (sp("-"), sp("1,4,6|2,5|3")),
        (sp("1,2,3"), sp("1,3|2")),
        (sp("1,2"), sp("1,3,4|2")),
        (sp("1"), sp("1,3,5|2,4")),
        (sp("1,3|2"), sp("1,2,3")),
        (sp("1,3,4|2"), sp("1,2")),
        (sp("1,3,5|2,4"), sp("1")),
        (sp("1,4,6|2,5|3"), sp("-")),
    ]);
    assert_eq!(nc_split, expected_nc_split);

    // Standardization of blocks over a sparse ground set.
    assert_eq!(
        standardize_blocks(&[vec![2, 5, 7], vec![4, 8], vec![6, 9]]).unwrap(),
        sp("1,3,5|2,6|4,7")
    );

    let elapsed = start.elapsed();
    budget("criterion 1", elapsed, Duration::from_secs(1));
    println!("acceptance criterion 1: PASS — worked examples exact in {elapsed:?}");
}

#[test]
fn criterion_2_degree_three_poset() {
    let start = Instant::now();

    let poset = Poset::build_with(3, 3, EXEC).unwrap();
    assert_eq!(poset.len(), 16);

    let cover_pairs: BTreeSet<(String, String)> = poset
        .cover_pairs()
        .into_iter()
        .map(|(lo, hi)| (poset.element(lo).to_string(), poset.element(hi).to_string()))
        .collect();
    let expected: BTreeSet<(String, String)> = [
        ("2,1,1", "1,1,2"),
        ("3,1,1", "1,1,3"),
        ("2,1,2", "1,2,2"),
        ("3,1,2", "1,2,3"),
        ("2,2,1", "1,2,2"),
        ("2,3,1", "1,2,3"),
        ("3,2,1", "3,1,2"),
        ("3,2,1", "2,1,3"),
        ("3,2,1", "2,3,1"),
    ]
    .into_iter()
    .map(|(a, b)| (a.to_string(), b.to_string()))
    .collect();
    assert_eq!(cover_pairs, expected);

    assert_eq!(poset.to_dot(), include_str!("golden/poset_p3.dot"));

    let elapsed = start.elapsed();
    budget("criterion 2", elapsed, Duration::from_secs(1));
    println!("acceptance criterion 2: PASS — 16 elements, 9 covers, DOT golden byte-equal in {elapsed:?}");
}

#[test]
fn criterion_3_family_counts() {
    let start = Instant::now();

    // Exact degree-3 listings of the unsplitable and atomic families.
    let as_set = |family| -> BTreeSet<String> {
        enumerate_family(family, 3, 3)
            .unwrap()
            .iter()
            .map(|a| a.word().compact().expect("single-digit letters"))
            .collect()
    };
    let up3 = as_set(Family::UP);
    let ap3 = as_set(Family::AP);
    let expected_up3: BTreeSet<String> =
        ["111", "112", "121", "131", "132", "211", "212", "311", "221", "231", "321"]
            .into_iter()
            .map(str::to_string)
            .collect();
    let expected_ap3: BTreeSet<String> =
        ["111", "211", "121", "131", "112", "212", "122", "132", "113", "213", "123"]
            .into_iter()
            .map(str::to_string)
            .collect();
    assert_eq!(up3.len(), 11);
    assert_eq!(ap3.len(), 11);
    assert_eq!(up3, expected_up3);
    assert_eq!(ap3, expected_ap3);

    // Catalan counts for the non-increasing family and its atomic part.
    for n in 0..=8usize {
        assert_eq!(
            enumerate_family(Family::C, n, 8).unwrap().len(),
            catalan(n),
            "non-increasing count at degree {n}"
        );
        if n >= 1 {
            assert_eq!(
                enumerate_family(Family::AC, n, 8).unwrap().len(),
                catalan(n - 1),
                "atomic non-increasing count at degree {n}"
            );
        }
    }

    // Full parking-function counts (n+1)^(n-1) and set-partition Bell counts.
    for (n, expected) in [1usize, 1, 3, 16, 125, 1296].into_iter().enumerate() {
        assert_eq!(enumerate_parking_functions(n, EXEC).len(), expected);
    }
    for (n, expected) in [1usize, 1, 2, 5, 15, 52, 203].into_iter().enumerate() {
        assert_eq!(enumerate_set_partitions(n).len(), expected);
    }

    let elapsed = start.elapsed();
    budget("criterion 3", elapsed, Duration::from_secs(30));
    println!("acceptance criterion 3: PASS — family listings and counts exact in {elapsed:?}");
}

#[test]
fn criterion_4_hopf_axiom_suite() {
    let start = Instant::now();

    let schedule = [
        (Axiom::Assoc, 5),
        (Axiom::Coassoc, 4),
        (Axiom::Compat, 5),
        (Axiom::Counit, 5),
        (Axiom::Cocommut, 5),
        (Axiom::Antipode, 4),
    ];

    let m = Pfsym::m(EXEC);
    for (axiom, bound) in schedule {
        let report = check_axiom(&m, axiom, bound, EXEC).unwrap();
        assert!(report.pass, "{}", report.summary_line());
    }

    let nc = NcsymHopf;
    for (axiom, bound) in schedule {
        let report = check_axiom(&nc, axiom, bound, EXEC).unwrap();
        assert!(report.pass, "{}", report.summary_line());
    }

    // A flipped structure constant must be caught by the same suite.
    let corrupted = run_instance(Instance::PfsymM, &Axiom::ALL, 4, true, EXEC).unwrap();
    assert!(
        !all_pass(&corrupted),
        "corrupted instance slipped past the axiom suite"
    );
    assert!(corrupted.iter().any(|r| !r.pass && r.counterexample.is_some()));

    let elapsed = start.elapsed();
    budget("criterion 4", elapsed, Duration::from_secs(120));
    println!("acceptance criterion 4: PASS — axiom suite green, mutation caught in {elapsed:?}");
}

#[test]
fn criterion_5_basis_theorems() {
    let start = Instant::now();
    let store = PosetStore::with_cap(5, EXEC);

    // Warm every Möbius row in parallel; later checks then only read.
    for n in 0..=5usize {
        let poset = store.poset(n).unwrap();
        (0..poset.len()).into_par_iter().for_each(|i| {
            poset.moebius_row(poset.element(i)).unwrap();
        });
    }

    let mut elements: Vec<ParkingFunction> = Vec::new();
    for n in 0..=5usize {
        elements.extend(enumerate_parking_functions(n, EXEC));
    }

    // Möbius roundtrip in both directions on every element.
    let roundtrip_failures: Vec<String> = elements
        .par_iter()
        .filter_map(|a| {
            let m = Element::from_label(Basis::M, a.clone());
            let q = Element::from_label(Basis::Q, a.clone());
            let m_back = element_to_basis(&element_to_basis(&m, Basis::Q, &store).ok()?, Basis::M, &store).ok()?;
            let q_back = element_to_basis(&element_to_basis(&q, Basis::M, &store).ok()?, Basis::Q, &store).ok()?;
            (m_back != m || q_back != q).then(|| a.to_string())
        })
        .collect();
    assert!(roundtrip_failures.is_empty(), "roundtrip failed at {roundtrip_failures:?}");

    // Q-product is the slash product, checked through the M basis.
    let pairs: Vec<(&ParkingFunction, &ParkingFunction)> = elements
        .iter()
        .flat_map(|a| elements.iter().map(move |b| (a, b)))
        .filter(|(a, b)| a.len() + b.len() <= 5)
        .collect();
    let q_product_failures: Vec<String> = pairs
        .par_iter()
        .filter_map(|(a, b)| {
            let qa = element_to_basis(&Element::from_label(Basis::Q, (*a).clone()), Basis::M, &store).ok()?;
            let qb = element_to_basis(&Element::from_label(Basis::Q, (*b).clone()), Basis::M, &store).ok()?;
            let through_m = element_to_basis(&m_product(&qa, &qb).ok()?, Basis::Q, &store).ok()?;
            let direct = Element::from_label(Basis::Q, slash_product(a, b));
            (through_m != direct).then(|| format!("{a} ⋆ {b}"))
        })
        .collect();
    assert!(q_product_failures.is_empty(), "Q-product failed at {q_product_failures:?}");

    // Q-coproduct formula (subset splits) against conjugation through M.
    let q_coproduct_failures: Vec<String> = elements
        .par_iter()
        .filter_map(|a| {
            let direct = coproduct(&Element::from_label(Basis::Q, a.clone())).ok()?;
            let in_m = element_to_basis(&Element::from_label(Basis::Q, a.clone()), Basis::M, &store).ok()?;
            let conjugated = tensor_to_basis(&m_coproduct(&in_m).ok()?, Basis::Q, &store).ok()?;
            (direct != conjugated).then(|| a.to_string())
        })
        .collect();
    assert!(
        q_coproduct_failures.is_empty(),
        "Q-coproduct formula failed at {q_coproduct_failures:?}"
    );

    // R-basis triangularity on every element, and multiplicativity of the
    // R labels over the split product, both through the M expansion.
    let r_failures: Vec<String> = pairs
        .par_iter()
        .filter_map(|(a, b)| {
            let lhs = r_to_m(&split_product(a, b));
            let rhs = m_product(&r_to_m(a), &r_to_m(b)).ok()?;
            (lhs != rhs).then(|| format!("{a} ∘ {b}"))
        })
        .collect();
    assert!(r_failures.is_empty(), "R multiplicativity failed at {r_failures:?}");
    for a in &elements {
        check_r_triangular(a).unwrap();
    }

    let elapsed = start.elapsed();
    budget("criterion 5", elapsed, Duration::from_secs(120));
    println!("acceptance criterion 5: PASS — Möbius roundtrip, Q and R identities exact in {elapsed:?}");
}

#[test]
fn criterion_6_factorization_uniqueness() {
    let start = Instant::now();

    for n in 1..=6usize {
        let elements = enumerate_parking_functions(n, EXEC);
        let failures: Vec<String> = elements
            .par_iter()
            .filter_map(|a| {
                let split = split_factorization(a).ok()?;
                let slash = slash_factorization(a).ok()?;
                let split_ok = split.recombine() == *a
                    && split.factors().iter().all(|f| is_unsplitable(f).unwrap());
                let slash_ok = slash.recombine() == *a
                    && slash.factors().iter().all(|f| is_atomic(f).unwrap());
                (!(split_ok && slash_ok)).then(|| a.to_string())
            })
            .collect();
        assert!(failures.is_empty(), "degree {n} factorization failed at {failures:?}");
    }

    let elapsed = start.elapsed();
    budget("criterion 6", elapsed, Duration::from_secs(60));
    println!("acceptance criterion 6: PASS — factorizations recombine with irreducible factors in {elapsed:?}");
}

#[test]
fn criterion_7_subalgebra_closure() {
    let start = Instant::now();

    // Non-increasing family closes in Q; the other families in M.
    let m = Pfsym::m(EXEC);
    for family in [Family::N, Family::D, Family::S, Family::PiTilde] {
        let report = check_closure(&m, family, 5, EXEC).unwrap();
        assert!(report.pass, "{}", report.summary_line());
    }
    let q = Pfsym::q(EXEC);
    let report = check_closure(&q, Family::C, 5, EXEC).unwrap();
    assert!(report.pass, "{}", report.summary_line());

    // The block-word embedding is a morphism for both operations…
    let mut partitions: Vec<SetPartition> = Vec::new();
    for n in 0..=5usize {
        partitions.extend(enumerate_set_partitions(n));
    }
    let morphism_failures: Vec<String> = partitions
        .par_iter()
        .flat_map_iter(|pi| partitions.iter().map(move |sigma| (pi, sigma)))
        .filter(|(pi, sigma)| pi.ground_size() + sigma.ground_size() <= 5)
        .filter_map(|(pi, sigma)| {
            let mapped: LinComb<ParkingFunction> = LinComb::from_terms(
                ncsym_product(pi, sigma)
                    .iter()
                    .map(|(tau, c)| (omega(tau), c.clone())),
            );
            let direct = label_product(Basis::M, &omega(pi), &omega(sigma));
            (mapped != direct).then(|| format!("{pi} · {sigma}"))
        })
        .collect();
    assert!(morphism_failures.is_empty(), "product morphism failed at {morphism_failures:?}");

    let coproduct_failures: Vec<String> = partitions
        .par_iter()
        .filter_map(|pi| {
            let mapped: LinComb<(ParkingFunction, ParkingFunction)> = LinComb::from_terms(
                ncsym_coproduct(pi)
                    .iter()
                    .map(|((l, r), c)| ((omega(l), omega(r)), c.clone())),
            );
            let direct = label_coproduct(&omega(pi));
            (mapped != direct).then(|| pi.to_string())
        })
        .collect();
    assert!(
        coproduct_failures.is_empty(),
        "coproduct morphism failed at {coproduct_failures:?}"
    );

    // …and matches the cover relation on both sides.
    for n in 1..=5usize {
        let partitions = enumerate_set_partitions(n);
        let cover_failures: Vec<String> = partitions
            .par_iter()
            .flat_map_iter(|pi| partitions.iter().map(move |sigma| (pi, sigma)))
            .filter_map(|(pi, sigma)| {
                let lhs = partition_covers(pi, sigma).unwrap();
                let rhs = covers(&omega(pi), &omega(sigma)).unwrap();
                (lhs != rhs).then(|| format!("{pi} vs {sigma}"))
            })
            .collect();
        assert!(cover_failures.is_empty(), "cover transport failed at {cover_failures:?}");
    }

    let elapsed = start.elapsed();
    budget("criterion 7", elapsed, Duration::from_secs(120));
    println!("acceptance criterion 7: PASS — closures, embedding morphism, cover transport in {elapsed:?}");
}

#[test]
fn criterion_8_structural_cross_checks() {
    let start = Instant::now();

    // Atomic is exactly reversed-connected.
    for n in 1..=5usize {
        for a in enumerate_parking_functions(n, EXEC) {
            assert_eq!(
                is_atomic(&a).unwrap(),
                is_connected(&reverse(&a)),
                "atomicity mismatch at {a}"
            );
        }
    }

    // The union of up-sets over the non-increasing family is the
    // intersection of the nondecreasing-parts and disjoint-parts families.
    let store = PosetStore::with_cap(5, EXEC);
    for n in 0..=5usize {
        let poset = store.poset(n).unwrap();
        let mut union: BTreeSet<ParkingFunction> = BTreeSet::new();
        for c in enumerate_family(Family::C, n, 5).unwrap() {
            let idx = poset.index_of(&c).unwrap();
            union.extend(poset.up_set(idx).iter().map(|&i| poset.element(i as usize).clone()));
        }
        let intersection: BTreeSet<ParkingFunction> = poset
            .elements()
            .iter()
            .filter(|a| is_member(a, Family::N) && is_member(a, Family::D))
            .cloned()
            .collect();
        assert_eq!(union, intersection, "up-set union mismatch at degree {n}");
    }

    // Standardization agrees with parkization on every duplicate-free word.
    for n in 0..=7usize {
        let mut stack: Vec<Vec<Letter>> = vec![Vec::new()];
        let alphabet: Vec<Letter> = (1..=(n as Letter + 1)).collect();
        for _ in 0..n {
            let mut next = Vec::new();
            for prefix in stack {
                for &x in &alphabet {
                    if !prefix.contains(&x) {
                        let mut extended = prefix.clone();
                        extended.push(x);
                        next.push(extended);
                    }
                }
            }
            stack = next;
        }
        for letters in stack {
            let word = Word::new(letters).unwrap();
            assert_eq!(
                standardize_word(&word).unwrap(),
                word.parkize(),
                "standardization mismatch at {word}"
            );
        }
    }

    let elapsed = start.elapsed();
    budget("criterion 8", elapsed, Duration::from_secs(60));
    println!("acceptance criterion 8: PASS — atomic/connected, up-set union, standardization in {elapsed:?}");
}
