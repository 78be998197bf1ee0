//! The two orders on parking functions and the poset machinery built on the
//! partial one.
//!
//! * [`word_star_cmp`] — a total order on arbitrary words: a word precedes
//!   every proper extension of itself ("initial-subword reversal"), and
//!   otherwise plain lexicographic order at the first differing letter
//!   decides.
//! * [`star_lex_cmp`] — the induced total order on each `Pₙ`, comparing the
//!   left-to-right-minima decompositions part by part under
//!   [`word_star_cmp`]. This is the order that makes the factorization
//!   basis triangular.
//! * [`covers`] / [`merge_targets`] — the covering relation of the partial
//!   order `≤*`: `b` covers `a` when `F_b` arises from `F_a` by replacing a
//!   part `wᵢ` with `wᵢ·wⱼ` (deleting `wⱼ`) for some `i < j` whose letters
//!   satisfy `max(wᵢ) ≤ min(wⱼ)`.
//! * [`Poset`] — all of `Pₙ` with covers, reachability (as per-element
//!   up-sets) and a memoized Möbius function, built once and immutable
//!   afterwards (queries take `&self` and are thread-safe).

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, RwLock};

use crate::error::Error;
use crate::exec::{map_indexed, Exec};
use crate::families::enumerate_parking_functions;
use crate::word::{LrDecomposition, ParkingFunction, Word};
use crate::DEFAULT_MAX_DEGREE;

/// Total order on words: if one word is a proper initial subword of the
/// other, the *longer* one comes first; otherwise the first differing
/// letter decides lexicographically.
pub fn word_star_cmp(a: &Word, b: &Word) -> Ordering {
    for (x, y) in a.letters().iter().zip(b.letters()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    // One is an initial subword of the other: proper extension first.
    b.len().cmp(&a.len())
}

/// The induced total order on `Pₙ`: compare decomposition parts
/// (increasing-minimum order) under [`word_star_cmp`] at the first index
/// where they differ.
///
/// Only same-length parking functions are comparable; two distinct ones
/// always disagree at some part because equal prefixes of parts with equal
/// total letter count force equality.
pub fn star_lex_cmp(a: &ParkingFunction, b: &ParkingFunction) -> Result<Ordering, Error> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let fa = a.lr_decompose();
    let fb = b.lr_decompose();
    for (u, w) in fa.parts().iter().zip(fb.parts()) {
        match word_star_cmp(u, w) {
            Ordering::Equal => continue,
            other => return Ok(other),
        }
    }
    Ok(fb.part_count().cmp(&fa.part_count()))
}

/// `a ≺*_lex b` on `Pₙ` (strict).
pub fn star_lex_less(a: &ParkingFunction, b: &ParkingFunction) -> Result<bool, Error> {
    Ok(star_lex_cmp(a, b)? == Ordering::Less)
}

/// Sorts same-degree parking functions into `≺*_lex` order.
pub fn sort_star_lex(elems: &mut [ParkingFunction]) {
    elems.sort_by(|a, b| {
        star_lex_cmp(a, b).expect("sort_star_lex requires same-degree elements")
    });
}

/// All parking functions covering `a`: one for each part pair `i < j` of
/// `F_a` with `max(wᵢ) ≤ min(wⱼ)`, merging `wⱼ` into `wᵢ`.
pub fn merge_targets(a: &ParkingFunction) -> Vec<ParkingFunction> {
    let f = a.lr_decompose();
    let parts = f.parts();
    let mut out = BTreeSet::new();
    for i in 0..parts.len() {
        for j in (i + 1)..parts.len() {
            let hi = parts[i].max_letter().expect("decomposition parts are nonempty");
            let lo = parts[j].min_letter().expect("decomposition parts are nonempty");
            if hi <= lo {
                let mut merged: Vec<Word> = Vec::with_capacity(parts.len() - 1);
                for (k, part) in parts.iter().enumerate() {
                    if k == j {
                        continue;
                    }
                    if k == i {
                        merged.push(part.concat(&parts[j]));
                    } else {
                        merged.push(part.clone());
                    }
                }
                let dec = LrDecomposition::new(merged)
                    .expect("merging compatible parts keeps the decomposition valid");
                let target = dec
                    .compose()
                    .expect("merging parts permutes letters, so the word still parks");
                out.insert(target);
            }
        }
    }
    out.into_iter().collect()
}

/// Whether `b` covers `a` in `≤*`. Both must have the same length.
pub fn covers(a: &ParkingFunction, b: &ParkingFunction) -> Result<bool, Error> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(merge_targets(a).contains(b))
}

/// `(Pₙ, ≤*)`: elements in `≺*_lex` order, the covering relation, per-element
/// up-sets, and a Möbius function memoized per source row.
#[derive(Debug)]
pub struct Poset {
    n: usize,
    elems: Vec<ParkingFunction>,
    index: HashMap<ParkingFunction, usize>,
    covers_up: Vec<Vec<u32>>,
    up_sets: Vec<Vec<u32>>,
    part_counts: Vec<u32>,
    mu_rows: RwLock<HashMap<u32, Arc<HashMap<u32, i64>>>>,
}

impl Poset {
    /// Builds `(Pₙ, ≤*)` under the default degree cap, in parallel.
    pub fn build(n: usize) -> Result<Poset, Error> {
        Poset::build_with(n, DEFAULT_MAX_DEGREE, Exec::default())
    }

    /// Builds `(Pₙ, ≤*)` with an explicit cap and execution strategy.
    pub fn build_with(n: usize, cap: usize, exec: Exec) -> Result<Poset, Error> {
        if n > cap {
            return Err(Error::DegreeTooLarge { degree: n, cap });
        }
        let mut elems = enumerate_parking_functions(n, exec);
        sort_star_lex(&mut elems);
        let index: HashMap<ParkingFunction, usize> = elems
            .iter()
            .enumerate()
            .map(|(i, a)| (a.clone(), i))
            .collect();

        // Cover generation is independent per element.
        let covers_up: Vec<Vec<u32>> = map_indexed(exec, elems.len(), |i| {
            merge_targets(&elems[i])
                .into_iter()
                .map(|b| index[&b] as u32)
                .collect::<BTreeSet<u32>>()
                .into_iter()
                .collect()
        });

        let part_counts: Vec<u32> = elems
            .iter()
            .map(|a| a.lr_decompose().part_count() as u32)
            .collect();

        // Merging strictly decreases the part count, so up-sets close
        // rank by rank from the fewest-part elements upward.
        let mut up_sets: Vec<Vec<u32>> = vec![Vec::new(); elems.len()];
        let mut by_count: Vec<Vec<usize>> = vec![Vec::new(); n.max(1) + 1];
        for (i, &c) in part_counts.iter().enumerate() {
            by_count[c as usize].push(i);
        }
        for rank in by_count.iter() {
            let computed: Vec<(usize, Vec<u32>)> = map_indexed(exec, rank.len(), |k| {
                let i = rank[k];
                let mut up: BTreeSet<u32> = BTreeSet::new();
                up.insert(i as u32);
                for &j in &covers_up[i] {
                    up.extend(up_sets[j as usize].iter().copied());
                }
                (i, up.into_iter().collect())
            });
            for (i, up) in computed {
                up_sets[i] = up;
            }
        }

        let poset = Poset {
            n,
            elems,
            index,
            covers_up,
            up_sets,
            part_counts,
            mu_rows: RwLock::new(HashMap::new()),
        };
        if n <= 4 {
            poset.assert_partial_order();
        }
        Ok(poset)
    }

    /// Reflexivity, antisymmetry and transitivity of the stored
    /// reachability — cheap enough to run on every small build.
    fn assert_partial_order(&self) {
        for i in 0..self.elems.len() {
            assert!(
                self.up_sets[i].binary_search(&(i as u32)).is_ok(),
                "reachability must be reflexive"
            );
            for &j in &self.up_sets[i] {
                let j = j as usize;
                if j != i {
                    assert!(
                        self.up_sets[j].binary_search(&(i as u32)).is_err(),
                        "reachability must be antisymmetric"
                    );
                }
                for &k in &self.up_sets[j] {
                    assert!(
                        self.up_sets[i].binary_search(&k).is_ok(),
                        "reachability must be transitive"
                    );
                }
            }
        }
    }

    /// The degree this poset was built for.
    pub fn degree(&self) -> usize {
        self.n
    }

    /// Number of elements (`|Pₙ| = (n+1)^(n−1)`).
    pub fn len(&self) -> usize {
        self.elems.len()
    }

    /// True only for the degenerate cap-0 build of no elements — `P₀ = {ε}`
    /// is nonempty.
    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// All elements in `≺*_lex` order.
    pub fn elements(&self) -> &[ParkingFunction] {
        &self.elems
    }

    /// The element at a canonical index.
    pub fn element(&self, idx: usize) -> &ParkingFunction {
        &self.elems[idx]
    }

    /// Canonical index of an element, if it belongs to this degree.
    pub fn index_of(&self, a: &ParkingFunction) -> Option<usize> {
        self.index.get(a).copied()
    }

    /// Indices of the covers of the element at `idx`.
    pub fn covers_from(&self, idx: usize) -> &[u32] {
        &self.covers_up[idx]
    }

    /// Indices of every element `≥*` the element at `idx` (itself included),
    /// ascending.
    pub fn up_set(&self, idx: usize) -> &[u32] {
        &self.up_sets[idx]
    }

    /// All cover pairs `(lower, upper)` as canonical indices, ordered.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for (i, ups) in self.covers_up.iter().enumerate() {
            for &j in ups {
                pairs.push((i, j as usize));
            }
        }
        pairs
    }

    fn require_index(&self, a: &ParkingFunction) -> Result<usize, Error> {
        if a.len() != self.n {
            return Err(Error::LengthMismatch {
                left: a.len(),
                right: self.n,
            });
        }
        Ok(self.index[a])
    }

    /// `a ≤* b`.
    pub fn leq(&self, a: &ParkingFunction, b: &ParkingFunction) -> Result<bool, Error> {
        let ia = self.require_index(a)?;
        let ib = self.require_index(b)? as u32;
        Ok(self.up_sets[ia].binary_search(&ib).is_ok())
    }

    /// Möbius function of the interval `[a, b]`; requires `a ≤* b`.
    ///
    /// Rows are computed on first use by the defining recursion
    /// `μ(a,a) = 1`, `μ(a,b) = −Σ_{a ≤ c < b} μ(a,c)`, walking the up-set
    /// of `a` from many parts to few, and cached for reuse.
    pub fn moebius(&self, a: &ParkingFunction, b: &ParkingFunction) -> Result<i64, Error> {
        let ia = self.require_index(a)? as u32;
        let ib = self.require_index(b)? as u32;
        let row = self.moebius_row_by_index(ia);
        row.get(&ib).copied().ok_or_else(|| Error::NotComparable {
            a: a.to_string(),
            b: b.to_string(),
        })
    }

    /// The full Möbius row of `a`: `b ↦ μ(a, b)` over the up-set of `a`.
    pub fn moebius_row(&self, a: &ParkingFunction) -> Result<Arc<HashMap<u32, i64>>, Error> {
        let ia = self.require_index(a)? as u32;
        Ok(self.moebius_row_by_index(ia))
    }

    fn moebius_row_by_index(&self, ia: u32) -> Arc<HashMap<u32, i64>> {
        if let Some(hit) = self.mu_rows.read().expect("poset lock poisoned").get(&ia) {
            return Arc::clone(hit);
        }
        let up = &self.up_sets[ia as usize];
        let mut order: Vec<u32> = up.clone();
        // Strictly above means strictly fewer parts, so descending part
        // count is a linear extension starting at `a` itself.
        order.sort_by(|&x, &y| {
            self.part_counts[y as usize]
                .cmp(&self.part_counts[x as usize])
                .then(x.cmp(&y))
        });
        let mut row: HashMap<u32, i64> = HashMap::with_capacity(up.len());
        for &b in &order {
            if b == ia {
                row.insert(b, 1);
                continue;
            }
            let mut sum = 0i64;
            for &c in &order {
                if c == b {
                    continue;
                }
                if let Some(mu) = row.get(&c) {
                    if self.up_sets[c as usize].binary_search(&b).is_ok() {
                        sum += mu;
                    }
                }
            }
            row.insert(b, -sum);
        }
        let row = Arc::new(row);
        self.mu_rows
            .write()
            .expect("poset lock poisoned")
            .insert(ia, Arc::clone(&row));
        row
    }

    /// The Hasse diagram as a DOT digraph: nodes in `≺*_lex` order labeled
    /// by compact word form, one edge per cover, byte-for-byte
    /// deterministic.
    pub fn to_dot(&self) -> String {
        let name = |a: &ParkingFunction| a.word().compact().unwrap_or_else(|| a.to_string());
        let mut out = format!("digraph poset_p{} {{\n  rankdir=BT;\n", self.n);
        for a in &self.elems {
            out.push_str(&format!("  \"{}\";\n", name(a)));
        }
        for (i, j) in self.cover_pairs() {
            out.push_str(&format!(
                "  \"{}\" -> \"{}\";\n",
                name(&self.elems[i]),
                name(&self.elems[j])
            ));
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::testutil::{all_words, pf, w};

    /// The displayed total-order chain on P₃, shortest-first within the
    /// fixed degree.
    const P3_CHAIN: [&str; 16] = [
        "111", "112", "113", "211", "311", "121", "122", "123", "212", "312", "131", "132",
        "213", "221", "231", "321",
    ];

    /// Hand-derived cover list for P₃ as (lower, upper) compact words.
    const P3_COVERS: [(&str, &str); 9] = [
        ("211", "112"),
        ("311", "113"),
        ("221", "122"),
        ("212", "122"),
        ("321", "231"),
        ("321", "312"),
        ("321", "213"),
        ("231", "123"),
        ("312", "123"),
    ];

    #[test]
    fn word_order_clauses() {
        // Proper initial subword: the extension comes first.
        assert_eq!(word_star_cmp(&w("111"), &w("11")), Ordering::Less);
        assert_eq!(word_star_cmp(&w("11"), &w("111")), Ordering::Greater);
        assert_eq!(word_star_cmp(&w("123"), &w("12")), Ordering::Less);
        // Lexicographic fallback at the first difference.
        assert_eq!(word_star_cmp(&w("11"), &w("121")), Ordering::Less);
        assert_eq!(word_star_cmp(&w("2"), &w("3")), Ordering::Less);
        assert_eq!(word_star_cmp(&w("23"), &w("3")), Ordering::Less);
        assert_eq!(word_star_cmp(&w("12"), &w("12")), Ordering::Equal);
    }

    #[test]
    fn word_order_is_total() {
        let words: Vec<Word> = (0..=3).flat_map(|n| all_words(n, 3)).collect();
        for a in &words {
            assert_eq!(word_star_cmp(a, a), Ordering::Equal);
            for b in &words {
                let ab = word_star_cmp(a, b);
                assert_eq!(word_star_cmp(b, a), ab.reverse());
                if ab == Ordering::Equal {
                    assert_eq!(a, b);
                }
                for c in &words {
                    if ab == Ordering::Less && word_star_cmp(b, c) == Ordering::Less {
                        assert_eq!(word_star_cmp(a, c), Ordering::Less, "{a} {b} {c}");
                    }
                }
            }
        }
    }

    #[test]
    fn p3_chain_is_exact() {
        let mut elems = enumerate_parking_functions(3, Exec::Sequential);
        sort_star_lex(&mut elems);
        let got: Vec<String> = elems.iter().map(|a| a.word().compact().unwrap()).collect();
        assert_eq!(got, P3_CHAIN.to_vec());
    }

    #[test]
    fn star_lex_examples() {
        assert!(star_lex_less(&pf("111"), &pf("112")).unwrap());
        assert!(star_lex_less(&pf("231"), &pf("321")).unwrap());
        assert!(!star_lex_less(&pf("321"), &pf("231")).unwrap());
        assert!(!star_lex_less(&pf("132"), &pf("132")).unwrap());
        assert!(matches!(
            star_lex_cmp(&pf("11"), &pf("111")),
            Err(Error::LengthMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn star_lex_is_total_per_degree() {
        // Agreement with the index order of a sorted listing is exactly
        // trichotomy plus transitivity.
        for n in 1..=4 {
            let mut elems = enumerate_parking_functions(n, Exec::Sequential);
            sort_star_lex(&mut elems);
            for (i, a) in elems.iter().enumerate() {
                for (j, b) in elems.iter().enumerate() {
                    assert_eq!(star_lex_cmp(a, b).unwrap(), i.cmp(&j), "{a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn cover_fixtures() {
        for (lo, hi) in P3_COVERS {
            assert!(covers(&pf(lo), &pf(hi)).unwrap(), "{lo} ⋖ {hi}");
            assert!(!covers(&pf(hi), &pf(lo)).unwrap(), "{hi} ⋪ {lo}");
        }
        // Single-part decompositions cover nothing upward.
        for b in enumerate_parking_functions(3, Exec::Sequential) {
            assert!(!covers(&pf("132"), &b).unwrap());
            assert!(!covers(&b.clone(), &b).unwrap());
        }
        assert!(matches!(
            covers(&pf("21"), &pf("112")),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn p3_cover_set_is_exact() {
        let expect: BTreeSet<(String, String)> = P3_COVERS
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        let mut got = BTreeSet::new();
        for a in enumerate_parking_functions(3, Exec::Sequential) {
            for b in merge_targets(&a) {
                got.insert((
                    a.word().compact().unwrap(),
                    b.word().compact().unwrap(),
                ));
            }
        }
        assert_eq!(got, expect);
    }

    /// Re-derives each generated cover from the definition, written out
    /// independently of `merge_targets`' plumbing.
    #[test]
    fn covers_agree_with_merge_rule() {
        for n in 1..=4 {
            for a in enumerate_parking_functions(n, Exec::Sequential) {
                let fa = a.lr_decompose();
                let parts = fa.parts();
                let mut expect = BTreeSet::new();
                for i in 0..parts.len() {
                    for j in (i + 1)..parts.len() {
                        let compatible = parts[i]
                            .letters()
                            .iter()
                            .all(|x| parts[j].letters().iter().all(|y| x <= y));
                        if !compatible {
                            continue;
                        }
                        // Rebuild the merged word directly: concatenate the
                        // kept parts in decreasing-minimum order.
                        let mut merged: Vec<Vec<u32>> = Vec::new();
                        for k in 0..parts.len() {
                            if k == j {
                                continue;
                            }
                            let mut letters = parts[k].letters().to_vec();
                            if k == i {
                                letters.extend_from_slice(parts[j].letters());
                            }
                            merged.push(letters);
                        }
                        let mut word = Vec::new();
                        for p in merged.iter().rev() {
                            word.extend_from_slice(p);
                        }
                        expect.insert(
                            ParkingFunction::new(Word::new(word).unwrap()).unwrap(),
                        );
                    }
                }
                let got: BTreeSet<ParkingFunction> = merge_targets(&a).into_iter().collect();
                assert_eq!(got, expect, "merge targets of {a}");
            }
        }
    }

    #[test]
    fn poset_small_degrees() {
        let p1 = Poset::build(1).unwrap();
        assert_eq!(p1.len(), 1);
        assert!(p1.cover_pairs().is_empty());

        let p2 = Poset::build(2).unwrap();
        assert_eq!(p2.len(), 3);
        let pairs: Vec<(String, String)> = p2
            .cover_pairs()
            .into_iter()
            .map(|(i, j)| {
                (
                    p2.element(i).to_string(),
                    p2.element(j).to_string(),
                )
            })
            .collect();
        assert_eq!(pairs, vec![("2,1".to_string(), "1,2".to_string())]);

        let p3 = Poset::build(3).unwrap();
        assert_eq!(p3.len(), 16);
        assert_eq!(p3.cover_pairs().len(), 9);

        assert!(matches!(
            Poset::build(7),
            Err(Error::DegreeTooLarge { degree: 7, cap: 6 })
        ));
        assert!(Poset::build_with(0, 6, Exec::Sequential).unwrap().len() == 1);
    }

    #[test]
    fn poset_leq_and_up_sets() {
        let p3 = Poset::build(3).unwrap();
        assert!(p3.leq(&pf("321"), &pf("123")).unwrap());
        assert!(p3.leq(&pf("321"), &pf("213")).unwrap());
        assert!(p3.leq(&pf("132"), &pf("132")).unwrap());
        assert!(!p3.leq(&pf("123"), &pf("321")).unwrap());
        assert!(!p3.leq(&pf("132"), &pf("123")).unwrap());

        let up321: BTreeSet<String> = p3
            .up_set(p3.index_of(&pf("321")).unwrap())
            .iter()
            .map(|&i| p3.element(i as usize).word().compact().unwrap())
            .collect();
        let expect: BTreeSet<String> = ["321", "231", "312", "213", "123"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(up321, expect);

        assert!(matches!(
            p3.leq(&pf("21"), &pf("123")),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn moebius_fixtures() {
        let p2 = Poset::build(2).unwrap();
        assert_eq!(p2.moebius(&pf("21"), &pf("21")).unwrap(), 1);
        assert_eq!(p2.moebius(&pf("21"), &pf("12")).unwrap(), -1);
        assert!(matches!(
            p2.moebius(&pf("12"), &pf("21")),
            Err(Error::NotComparable { .. })
        ));

        let p3 = Poset::build(3).unwrap();
        assert_eq!(p3.moebius(&pf("321"), &pf("231")).unwrap(), -1);
        assert_eq!(p3.moebius(&pf("321"), &pf("312")).unwrap(), -1);
        assert_eq!(p3.moebius(&pf("321"), &pf("213")).unwrap(), -1);
        // The interval [321, 123] is the diamond {321; 231, 312; 123}: 213
        // sits above 321 but not below 123, so μ = −(1 − 1 − 1) = 1.
        assert_eq!(p3.moebius(&pf("321"), &pf("123")).unwrap(), 1);
        assert!(matches!(
            p3.moebius(&pf("132"), &pf("111")),
            Err(Error::NotComparable { .. })
        ));
    }

    /// Independent interval-recursion oracle against the cached rows.
    #[test]
    fn moebius_matches_bruteforce_oracle() {
        fn mu_oracle(
            p: &Poset,
            a: &ParkingFunction,
            b: &ParkingFunction,
            memo: &mut HashMap<(usize, usize), i64>,
        ) -> i64 {
            let (ia, ib) = (p.index_of(a).unwrap(), p.index_of(b).unwrap());
            if ia == ib {
                return 1;
            }
            if let Some(&hit) = memo.get(&(ia, ib)) {
                return hit;
            }
            let mut sum = 0;
            for c in p.elements() {
                if p.leq(a, c).unwrap() && p.leq(c, b).unwrap() && c != b {
                    sum += mu_oracle(p, a, c, memo);
                }
            }
            memo.insert((ia, ib), -sum);
            -sum
        }

        for n in 1..=4 {
            let p = Poset::build(n).unwrap();
            let mut memo = HashMap::new();
            for a in p.elements() {
                for b in p.elements() {
                    if p.leq(a, b).unwrap() {
                        assert_eq!(
                            p.moebius(a, b).unwrap(),
                            mu_oracle(&p, a, b, &mut memo),
                            "μ({a}, {b})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn moebius_interval_sums_vanish() {
        // Σ_{a ≤ c ≤ b} μ(a,c) = δ_{ab} — the inversion identity the
        // Q-basis conversion relies on, checked on every interval.
        let p = Poset::build(4).unwrap();
        for (i, a) in p.elements().iter().enumerate() {
            let row = p.moebius_row(a).unwrap();
            for &bi in p.up_set(i) {
                let b = p.element(bi as usize);
                let total: i64 = p
                    .up_set(i)
                    .iter()
                    .filter(|&&ci| p.up_sets[ci as usize].binary_search(&bi).is_ok())
                    .map(|ci| row[ci])
                    .sum();
                assert_eq!(total, i64::from(bi as usize == i), "interval [{a}, {b}]");
            }
        }
    }

    #[test]
    fn dot_output_shape() {
        let p2 = Poset::build(2).unwrap();
        let dot = p2.to_dot();
        assert_eq!(
            dot,
            "digraph poset_p2 {\n  rankdir=BT;\n  \"11\";\n  \"12\";\n  \"21\";\n  \"21\" -> \"12\";\n}\n"
        );
        let p3 = Poset::build(3).unwrap();
        let dot3 = p3.to_dot();
        assert_eq!(dot3.matches(" -> ").count(), 9);
        assert!(dot3.starts_with("digraph poset_p3 {"));
    }

    #[test]
    fn parallel_and_sequential_builds_agree() {
        for n in 1..=4 {
            let par = Poset::build_with(n, 6, Exec::Parallel).unwrap();
            let seq = Poset::build_with(n, 6, Exec::Sequential).unwrap();
            assert_eq!(par.elements(), seq.elements());
            assert_eq!(par.cover_pairs(), seq.cover_pairs());
            for (i, a) in par.elements().iter().enumerate() {
                assert_eq!(par.up_set(i), seq.up_set(i));
                assert_eq!(
                    *par.moebius_row(a).unwrap(),
                    *seq.moebius_row(a).unwrap()
                );
            }
        }
    }
}

