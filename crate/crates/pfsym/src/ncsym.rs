//! Set partitions, the Hopf algebra structure on them, and the embedding
//! into parking functions.
//!
//! A [`SetPartition`] carries its blocks sorted internally and ordered by
//! increasing minima — the same canonical shape the decomposition of a
//! parking function has, which is what makes the embedding work. The
//! product matches blocks of the two operands (reusing the matching
//! enumeration of [`crate::matching`]), the coproduct splits off subsets
//! of blocks and standardizes both sides, and [`omega`] reads a partition
//! as the concatenation of its block words in reverse block order. The
//! image of `omega` is exactly the family of nondecreasing-part
//! permutations, degree by degree, and covers in the merge order of
//! partitions map to covers of parking functions.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::coeff;
use crate::error::Error;
use crate::linear::LinComb;
use crate::matching::enumerate_matchings;
use crate::word::{Letter, ParkingFunction, Word};

/// A partition of `[n]` into disjoint nonempty blocks, stored canonically:
/// each block increasing, blocks ordered by their minima.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetPartition {
    n: u32,
    blocks: Vec<Vec<u32>>,
}

impl SetPartition {
    /// The empty partition of `[0]`.
    pub fn empty() -> Self {
        SetPartition {
            n: 0,
            blocks: Vec::new(),
        }
    }

    /// Canonicalizes and validates: blocks must be nonempty, pairwise
    /// disjoint, and cover `[n]` for `n` the total element count.
    pub fn new(blocks: Vec<Vec<u32>>) -> Result<Self, Error> {
        let mut canon: Vec<Vec<u32>> = Vec::with_capacity(blocks.len());
        let mut seen = BTreeSet::new();
        let mut total = 0u32;
        for block in blocks {
            if block.is_empty() {
                return Err(Error::EmptyWord);
            }
            let mut sorted = block;
            sorted.sort_unstable();
            for &x in &sorted {
                if x == 0 {
                    return Err(Error::ZeroLetter);
                }
                if !seen.insert(x) {
                    return Err(Error::OverlappingBlocks(x));
                }
                total += 1;
            }
            canon.push(sorted);
        }
        for expected in 1..=total {
            if !seen.contains(&expected) {
                return Err(Error::IncompleteCover {
                    n: total,
                    missing: expected,
                });
            }
        }
        canon.sort_by_key(|b| b[0]);
        Ok(SetPartition {
            n: total,
            blocks: canon,
        })
    }

    /// Size of the ground set `[n]`.
    pub fn ground_size(&self) -> usize {
        self.n as usize
    }

    /// The blocks, canonically ordered.
    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    /// Number of blocks.
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// True for the empty partition.
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `[[1,3],[2,4]]` — blocks as a JSON array of arrays.
    pub fn structured(&self) -> String {
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let inner: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                format!("[{}]", inner.join(","))
            })
            .collect();
        format!("[{}]", blocks.join(","))
    }
}

impl fmt::Display for SetPartition {
    /// Blocks joined by `|`, elements by `,`; the empty partition is `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("-");
        }
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        f.write_str(&blocks.join("|"))
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        if trimmed == "-" || trimmed.is_empty() {
            return Ok(SetPartition::empty());
        }
        let mut blocks = Vec::new();
        let mut pos = 0usize;
        for chunk in trimmed.split('|') {
            let mut block = Vec::new();
            let mut offset = pos;
            for token in chunk.split(',') {
                let t = token.trim();
                if t.is_empty() {
                    return Err(Error::parse(offset, "empty element"));
                }
                let value: u32 = t
                    .parse()
                    .map_err(|_| Error::parse(offset, format!("bad element {t:?}")))?;
                block.push(value);
                offset += token.len() + 1;
            }
            if block.is_empty() {
                return Err(Error::parse(pos, "empty block"));
            }
            blocks.push(block);
            pos += chunk.len() + 1;
        }
        SetPartition::new(blocks)
    }
}

/// Relabels a family of disjoint sets order-isomorphically onto `[N]`,
/// smallest element to 1. The blocks need not cover an interval.
pub fn standardize_blocks(blocks: &[Vec<u32>]) -> Result<SetPartition, Error> {
    let mut all = BTreeSet::new();
    for block in blocks {
        for &x in block {
            if !all.insert(x) {
                return Err(Error::OverlappingBlocks(x));
            }
        }
    }
    let rank: std::collections::BTreeMap<u32, u32> = all
        .iter()
        .enumerate()
        .map(|(i, &x)| (x, i as u32 + 1))
        .collect();
    let relabeled: Vec<Vec<u32>> = blocks
        .iter()
        .map(|b| b.iter().map(|x| rank[x]).collect())
        .collect();
    SetPartition::new(relabeled)
}

/// Relabels a repeat-free word order-isomorphically onto `[n]` — on such
/// words this agrees with parkization.
pub fn standardize_word(w: &Word) -> Result<ParkingFunction, Error> {
    let mut seen = BTreeSet::new();
    for &x in w.letters() {
        if !seen.insert(x) {
            return Err(Error::RepeatedLetter(x));
        }
    }
    let rank: std::collections::BTreeMap<Letter, Letter> = seen
        .iter()
        .enumerate()
        .map(|(i, &x)| (x, i as Letter + 1))
        .collect();
    let word = Word::new(w.letters().iter().map(|x| rank[x]).collect())
        .expect("ranks start at 1");
    Ok(ParkingFunction::new(word).expect("a permutation parks"))
}

fn shifted_blocks(pi: &SetPartition, m: u32) -> Vec<Vec<u32>> {
    pi.blocks
        .iter()
        .map(|b| b.iter().map(|x| x + m).collect())
        .collect()
}

/// The product `M_π · M_σ`: one term per matching between the blocks of
/// `π` and the blocks of `σ` shifted past `π`'s ground set; matched blocks
/// merge. All coefficients are 1.
pub fn ncsym_product(pi: &SetPartition, sigma: &SetPartition) -> LinComb<SetPartition> {
    let m = pi.n;
    let shifted = shifted_blocks(sigma, m);
    let (r, s) = (pi.block_count(), sigma.block_count());
    let mut out = LinComb::zero();
    for matching in enumerate_matchings(r, s) {
        let mut used_right = vec![false; s];
        let mut blocks: Vec<Vec<u32>> = Vec::with_capacity(r + s);
        let mut edges = matching.edges().iter().peekable();
        for (i, left) in pi.blocks.iter().enumerate() {
            let mut block = left.clone();
            if let Some(&&(ei, ej)) = edges.peek() {
                if ei == i {
                    block.extend_from_slice(&shifted[ej]);
                    used_right[ej] = true;
                    edges.next();
                }
            }
            blocks.push(block);
        }
        for (j, right) in shifted.iter().enumerate() {
            if !used_right[j] {
                blocks.push(right.clone());
            }
        }
        let tau = SetPartition::new(blocks)
            .expect("merged blocks stay disjoint and cover the joint ground set");
        out.add_term(tau, coeff::one());
    }
    out
}

/// The coproduct `Δ(M_π)`: over each of the `2^k` block subsets, the
/// standardization of the subset tensor the standardization of its
/// complement.
pub fn ncsym_coproduct(pi: &SetPartition) -> LinComb<(SetPartition, SetPartition)> {
    let k = pi.block_count();
    let mut out = LinComb::zero();
    for mask in 0u32..(1u32 << k) {
        let mut left: Vec<Vec<u32>> = Vec::new();
        let mut right: Vec<Vec<u32>> = Vec::new();
        for (i, block) in pi.blocks.iter().enumerate() {
            if mask & (1 << i) != 0 {
                left.push(block.clone());
            } else {
                right.push(block.clone());
            }
        }
        let l = standardize_blocks(&left).expect("subsets of disjoint blocks are disjoint");
        let r = standardize_blocks(&right).expect("subsets of disjoint blocks are disjoint");
        out.add_term((l, r), coeff::one());
    }
    out
}

/// Reads a partition as a parking function: the block words (elements in
/// increasing order), concatenated from the last block down to the first.
/// Lands in the nondecreasing-part permutations, bijectively per degree.
pub fn omega(pi: &SetPartition) -> ParkingFunction {
    let mut letters: Vec<Letter> = Vec::with_capacity(pi.ground_size());
    for block in pi.blocks.iter().rev() {
        letters.extend(block.iter().map(|&x| x as Letter));
    }
    let word = Word::new(letters).expect("ground-set elements are positive");
    ParkingFunction::new(word).expect("reversed block concatenation parks")
}

/// All partitions obtained by merging one compatible block pair: blocks
/// `i < j` merge when `max(Bᵢ) < min(Bⱼ)` — the mirror of the parking
/// function cover rule through the block-word reading.
pub fn partition_merge_targets(pi: &SetPartition) -> Vec<SetPartition> {
    let mut out = BTreeSet::new();
    let blocks = &pi.blocks;
    for i in 0..blocks.len() {
        for j in (i + 1)..blocks.len() {
            let hi = *blocks[i].last().expect("blocks are nonempty");
            let lo = blocks[j][0];
            if hi < lo {
                let mut merged: Vec<Vec<u32>> = Vec::with_capacity(blocks.len() - 1);
                for (k, block) in blocks.iter().enumerate() {
                    if k == j {
                        continue;
                    }
                    let mut b = block.clone();
                    if k == i {
                        b.extend_from_slice(&blocks[j]);
                    }
                    merged.push(b);
                }
                out.insert(
                    SetPartition::new(merged).expect("merging keeps a valid partition"),
                );
            }
        }
    }
    out.into_iter().collect()
}

/// Whether `sigma` covers `pi` in the block-merge order. Ground sets must
/// agree.
pub fn partition_covers(pi: &SetPartition, sigma: &SetPartition) -> Result<bool, Error> {
    if pi.n != sigma.n {
        return Err(Error::LengthMismatch {
            left: pi.ground_size(),
            right: sigma.ground_size(),
        });
    }
    Ok(partition_merge_targets(pi).contains(sigma))
}

/// All partitions of `[n]` in restricted-growth-string order.
pub fn enumerate_set_partitions(n: usize) -> Vec<SetPartition> {
    fn extend(n: usize, rgs: &mut Vec<usize>, used: usize, acc: &mut Vec<SetPartition>) {
        if rgs.len() == n {
            let mut blocks: Vec<Vec<u32>> = vec![Vec::new(); used];
            for (i, &v) in rgs.iter().enumerate() {
                blocks[v].push(i as u32 + 1);
            }
            acc.push(SetPartition {
                n: n as u32,
                blocks,
            });
            return;
        }
        for v in 0..=used {
            rgs.push(v);
            extend(n, rgs, used.max(v + 1), acc);
            rgs.pop();
        }
    }
    if n == 0 {
        return vec![SetPartition::empty()];
    }
    let mut acc = Vec::new();
    extend(n, &mut Vec::new(), 0, &mut acc);
    acc
}
