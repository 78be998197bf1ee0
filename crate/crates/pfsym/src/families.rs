//! Distinguished families of parking functions: membership predicates and
//! deterministic per-degree listings.
//!
//! The base families are cut out by the shape of the word or its
//! decomposition:
//!
//! * `N` — every decomposition part is a nondecreasing word;
//! * `D` — parts use pairwise disjoint letter sets;
//! * `S` — the word is a permutation of `[n]`;
//! * `C` — the word is non-increasing (equivalently `aⱼ ≤ n+1−j`);
//! * `Π̃ = N ∩ S` — the image of set partitions under the block-word map.
//!
//! Each spans a Hopf subalgebra (`C` in the `Q`-basis only). The `U`/`A`
//! prefixes intersect a base family with the unsplitable respectively
//! atomic elements — the free generating sets of the subalgebras. The empty
//! word belongs to every base family and to no `U`/`A` family.

use std::fmt;
use std::str::FromStr;

use crate::bases::{is_atomic, is_unsplitable};
use crate::error::Error;
use crate::exec::{map_indexed, Exec};
use crate::order::sort_star_lex;
use crate::word::{Letter, ParkingFunction, Word};

/// A named family of parking functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// All parking functions.
    P,
    /// Unsplitable parking functions.
    UP,
    /// Atomic parking functions.
    AP,
    /// Nondecreasing decomposition parts.
    N,
    /// Pairwise disjoint part letter sets.
    D,
    /// Permutations.
    S,
    /// Non-increasing words.
    C,
    /// Atomic and non-increasing.
    AC,
    /// Atomic with nondecreasing parts.
    AN,
    /// Unsplitable with nondecreasing parts.
    UN,
    /// Atomic with disjoint parts.
    AD,
    /// Unsplitable with disjoint parts.
    UD,
    /// Atomic permutations.
    AS,
    /// Unsplitable permutations.
    US,
    /// Nondecreasing-part permutations (the set-partition image).
    PiTilde,
}

impl Family {
    /// Every family, in a fixed presentation order.
    pub const ALL: [Family; 15] = [
        Family::P,
        Family::UP,
        Family::AP,
        Family::N,
        Family::D,
        Family::S,
        Family::C,
        Family::AC,
        Family::AN,
        Family::UN,
        Family::AD,
        Family::UD,
        Family::AS,
        Family::US,
        Family::PiTilde,
    ];

    /// The short ASCII tag used in text interfaces.
    pub fn tag(self) -> &'static str {
        match self {
            Family::P => "P",
            Family::UP => "UP",
            Family::AP => "AP",
            Family::N => "N",
            Family::D => "D",
            Family::S => "S",
            Family::C => "C",
            Family::AC => "AC",
            Family::AN => "AN",
            Family::UN => "UN",
            Family::AD => "AD",
            Family::UD => "UD",
            Family::AS => "AS",
            Family::US => "US",
            Family::PiTilde => "Pi",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lowered = s.trim().to_lowercase();
        let family = match lowered.as_str() {
            "p" => Family::P,
            "up" => Family::UP,
            "ap" => Family::AP,
            "n" => Family::N,
            "d" => Family::D,
            "s" => Family::S,
            "c" => Family::C,
            "ac" => Family::AC,
            "an" => Family::AN,
            "un" => Family::UN,
            "ad" => Family::AD,
            "ud" => Family::UD,
            "as" => Family::AS,
            "us" => Family::US,
            "pi" | "pitilde" | "π̃" | "π" => Family::PiTilde,
            _ => return Err(Error::parse(0, format!("unknown family {s:?}"))),
        };
        Ok(family)
    }
}

fn parts_nondecreasing(a: &ParkingFunction) -> bool {
    a.lr_decompose()
        .parts()
        .iter()
        .all(|p| p.letters().windows(2).all(|w| w[0] <= w[1]))
}

fn parts_disjoint(a: &ParkingFunction) -> bool {
    let mut seen = std::collections::BTreeSet::new();
    for part in a.lr_decompose().parts() {
        let distinct: std::collections::BTreeSet<Letter> =
            part.letters().iter().copied().collect();
        for letter in distinct {
            if !seen.insert(letter) {
                return false;
            }
        }
    }
    true
}

fn is_permutation(a: &ParkingFunction) -> bool {
    let mut letters = a.letters().to_vec();
    letters.sort_unstable();
    letters
        .iter()
        .enumerate()
        .all(|(i, &x)| x as usize == i + 1)
}

fn is_nonincreasing(a: &ParkingFunction) -> bool {
    a.letters().windows(2).all(|w| w[0] >= w[1])
}

fn unsplitable(a: &ParkingFunction) -> bool {
    !a.is_empty() && is_unsplitable(a).expect("nonempty")
}

fn atomic(a: &ParkingFunction) -> bool {
    !a.is_empty() && is_atomic(a).expect("nonempty")
}

/// Whether `a` belongs to `family`. Never fails: the empty word is in
/// every base family and in no `U`/`A` family.
pub fn is_member(a: &ParkingFunction, family: Family) -> bool {
    match family {
        Family::P => true,
        Family::N => parts_nondecreasing(a),
        Family::D => parts_disjoint(a),
        Family::S => is_permutation(a),
        Family::C => is_nonincreasing(a),
        Family::PiTilde => parts_nondecreasing(a) && is_permutation(a),
        Family::UP => unsplitable(a),
        Family::AP => atomic(a),
        Family::UN => unsplitable(a) && parts_nondecreasing(a),
        Family::AN => atomic(a) && parts_nondecreasing(a),
        Family::UD => unsplitable(a) && parts_disjoint(a),
        Family::AD => atomic(a) && parts_disjoint(a),
        Family::US => unsplitable(a) && is_permutation(a),
        Family::AS => atomic(a) && is_permutation(a),
        Family::AC => atomic(a) && is_nonincreasing(a),
    }
}

/// All of `Pₙ`, in lexicographic word order.
///
/// Generated letter by letter with a feasibility prune: a prefix survives
/// only while every threshold `i` can still reach `i` letters `≤ i` with
/// the positions that remain. Fans out over the first letter when run in
/// parallel.
pub fn enumerate_parking_functions(n: usize, exec: Exec) -> Vec<ParkingFunction> {
    if n == 0 {
        return vec![ParkingFunction::empty()];
    }
    let branches = map_indexed(exec, n, |first| {
        let mut acc = Vec::new();
        let mut prefix = vec![first as Letter + 1];
        extend_parking(n, &mut prefix, &mut acc);
        acc
    });
    branches.into_iter().flatten().collect()
}

fn extend_parking(n: usize, prefix: &mut Vec<Letter>, acc: &mut Vec<ParkingFunction>) {
    let k = prefix.len();
    let remaining = n - k;
    // Feasibility: each threshold i needs ≥ i letters ≤ i overall.
    let mut below = 0usize;
    for i in 1..=n {
        below += prefix.iter().filter(|&&x| x as usize == i).count();
        if below + remaining < i {
            return;
        }
    }
    if remaining == 0 {
        let word = Word::new(prefix.clone()).expect("letters start at 1");
        acc.push(ParkingFunction::new(word).expect("prefix passed every threshold"));
        return;
    }
    for next in 1..=n {
        prefix.push(next as Letter);
        extend_parking(n, prefix, acc);
        prefix.pop();
    }
}

/// All of `Cₙ` directly: non-increasing words with `aⱼ ≤ n+1−j`, in
/// lexicographic order. Sidesteps the full `Pₙ` sweep, so degrees beyond
/// the usual cap stay cheap (the count is the `n`th Catalan number).
fn enumerate_nonincreasing(n: usize) -> Vec<ParkingFunction> {
    fn extend(n: usize, prefix: &mut Vec<Letter>, acc: &mut Vec<ParkingFunction>) {
        let j = prefix.len();
        if j == n {
            let word = Word::new(prefix.clone()).expect("letters start at 1");
            acc.push(ParkingFunction::new(word).expect("non-increasing bound parks"));
            return;
        }
        let bound = (n - j).min(prefix.last().map_or(n, |&x| x as usize));
        for next in 1..=bound {
            prefix.push(next as Letter);
            extend(n, prefix, acc);
            prefix.pop();
        }
    }
    if n == 0 {
        return vec![ParkingFunction::empty()];
    }
    let mut acc = Vec::new();
    extend(n, &mut Vec::new(), &mut acc);
    acc
}

/// The members of a family at degree `n`, sorted by the total order.
///
/// `C` and `AC` use the direct non-increasing generator; every other
/// family filters the full degree listing.
pub fn enumerate_family(family: Family, n: usize, cap: usize) -> Result<Vec<ParkingFunction>, Error> {
    if n > cap {
        return Err(Error::DegreeTooLarge { degree: n, cap });
    }
    let mut members: Vec<ParkingFunction> = match family {
        Family::C => enumerate_nonincreasing(n),
        Family::AC => enumerate_nonincreasing(n)
            .into_iter()
            .filter(atomic)
            .collect(),
        _ => enumerate_parking_functions(n, Exec::default())
            .into_iter()
            .filter(|a| is_member(a, family))
            .collect(),
    };
    sort_star_lex(&mut members);
    Ok(members)
}
