//! Matchings between two decompositions, and the product expansion they
//! index.
//!
//! Given decompositions `F_a = (u_1, …, u_r)` and `F_b = (w_1, …, w_s)`, a
//! matching is an injective partial pairing of part indices: a set of edges
//! `(i, j)` with no shared left or right endpoint. Applying a matching with
//! shift `m = len(a)` builds the decomposition whose parts are the merged
//! words `u_i · (w_j + m)` for each edge, plus all unmatched `u_i` and
//! unmatched `w_j + m`, sorted by minimum. Summing `M` over all matchings is
//! the product `M_a ⋆ M_b`.
//!
//! The number of matchings is `Σ_k k! · C(r,k) · C(s,k)`, and distinct
//! matchings always produce distinct parking functions: the merged word
//! `u_i · (w_j + m)` splits back into `(u_i, w_j)` at the first letter
//! exceeding `m`, so the matching can be read off the result.

use crate::error::Error;
use crate::word::{Letter, LrDecomposition, ParkingFunction};

/// An injective partial pairing between `r` left parts and `s` right parts.
/// Edges are 0-indexed `(left, right)` pairs, stored sorted by left index.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    /// The empty matching.
    pub fn empty() -> Self {
        Matching { edges: Vec::new() }
    }

    /// Builds from edges, validating injectivity on both sides. Edges are
    /// sorted by left index; ranges against actual decompositions are
    /// checked at application time.
    pub fn new(mut edges: Vec<(usize, usize)>) -> Result<Self, Error> {
        edges.sort_unstable();
        for pair in edges.windows(2) {
            if pair[0].0 == pair[1].0 {
                return Err(Error::InvalidMerge(format!(
                    "left index {} used twice",
                    pair[0].0
                )));
            }
        }
        let mut rights: Vec<usize> = edges.iter().map(|e| e.1).collect();
        rights.sort_unstable();
        for pair in rights.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::InvalidMerge(format!(
                    "right index {} used twice",
                    pair[0]
                )));
            }
        }
        Ok(Matching { edges })
    }

    /// The edges, sorted by left index.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    /// True for the empty matching.
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// All matchings between `r` left and `s` right parts, in canonical order:
/// ascending edge count, then lexicographic on the sorted edge lists.
pub fn enumerate_matchings(r: usize, s: usize) -> Vec<Matching> {
    let mut out = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut right_used = vec![false; s];
    // Each left index in turn stays unmatched or pairs with an unused right.
    fn rec(
        left: usize,
        r: usize,
        s: usize,
        edges: &mut Vec<(usize, usize)>,
        right_used: &mut [bool],
        out: &mut Vec<Matching>,
    ) {
        if left == r {
            out.push(Matching {
                edges: edges.clone(),
            });
            return;
        }
        rec(left + 1, r, s, edges, right_used, out);
        for j in 0..s {
            if !right_used[j] {
                right_used[j] = true;
                edges.push((left, j));
                rec(left + 1, r, s, edges, right_used, out);
                edges.pop();
                right_used[j] = false;
            }
        }
    }
    rec(0, r, s, &mut edges, &mut right_used, &mut out);
    out.sort_unstable_by(|a, b| {
        a.edges
            .len()
            .cmp(&b.edges.len())
            .then_with(|| a.edges.cmp(&b.edges))
    });
    out
}

/// Expected matching count `Σ_k k! · C(r,k) · C(s,k)`.
pub fn matching_count(r: usize, s: usize) -> u128 {
    fn binom(n: usize, k: usize) -> u128 {
        if k > n {
            return 0;
        }
        let mut acc: u128 = 1;
        for i in 0..k {
            acc = acc * (n - i) as u128 / (i + 1) as u128;
        }
        acc
    }
    let mut total = 0u128;
    let mut fact: u128 = 1;
    for k in 0..=r.min(s) {
        if k > 0 {
            fact *= k as u128;
        }
        total += fact * binom(r, k) * binom(s, k);
    }
    total
}

/// Applies a matching: merges `left_i · (right_j + shift)` along each edge,
/// keeps unmatched parts (right ones shifted), and sorts by minimum.
///
/// Errors when an edge is out of range, or when the merged parts fail the
/// decomposition conditions — which can happen only if `shift` is smaller
/// than some letter of a matched left part.
pub fn apply_matching(
    left: &LrDecomposition,
    right: &LrDecomposition,
    shift: Letter,
    matching: &Matching,
) -> Result<LrDecomposition, Error> {
    let (r, s) = (left.part_count(), right.part_count());
    for &(i, j) in matching.edges() {
        if i >= r || j >= s {
            return Err(Error::EdgeOutOfRange {
                left: i,
                right: j,
                r,
                s,
            });
        }
    }
    let mut parts = Vec::with_capacity(r + s - matching.len());
    let mut right_used = vec![false; s];
    let mut left_used = vec![false; r];
    for &(i, j) in matching.edges() {
        left_used[i] = true;
        right_used[j] = true;
        parts.push(left.parts()[i].concat(&right.parts()[j].shifted(shift)));
    }
    for (i, used) in left_used.iter().enumerate() {
        if !used {
            parts.push(left.parts()[i].clone());
        }
    }
    for (j, used) in right_used.iter().enumerate() {
        if !used {
            parts.push(right.parts()[j].shifted(shift));
        }
    }
    parts.sort_by_key(|p| p.min_letter());
    LrDecomposition::new(parts).map_err(|e| Error::InvalidMerge(e.to_string()))
}

/// The product expansion `M_a ⋆ M_b`: one parking function per matching
/// between `F_a` and `F_b`, in canonical matching order. All structure
/// constants are 1 because distinct matchings give distinct results.
pub fn product_expansion(a: &ParkingFunction, b: &ParkingFunction) -> Vec<ParkingFunction> {
    let fa = a.lr_decompose();
    let fb = b.lr_decompose();
    let shift = a.len() as Letter;
    enumerate_matchings(fa.part_count(), fb.part_count())
        .iter()
        .map(|theta| {
            apply_matching(&fa, &fb, shift, theta)
                .and_then(|d| d.compose())
                .expect("matching two parking functions always parks")
        })
        .collect()
}
