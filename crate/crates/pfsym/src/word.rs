//! Words, parking functions, and left-to-right-minima decompositions.
//!
//! The conventions here feed everything else in the crate:
//!
//! * Letters are positive integers (`u32`); positions are 1-indexed in every
//!   public API.
//! * A word `a` of length `n` is a parking function when its nondecreasing
//!   rearrangement `b` satisfies `b_i <= i` for all `i`.
//! * The decomposition `F_a` cuts `a` at its strict left-to-right minima and
//!   stores the resulting segments *by increasing minimum*, which reverses
//!   their order of appearance: reading `a` left to right, each new segment
//!   starts at a smaller letter. So for `a = 56357622315`,
//!   `F_a = (15, 223, 3576, 56)` and the original word is recovered by
//!   concatenating the parts last-to-first.
//!
//! A sequence of parts is a valid decomposition of *some* parking function
//! exactly when (1) that last-to-first concatenation parks, (2) every part
//! begins with its minimum ("dominated"), and (3) the part minima strictly
//! increase. [`LrDecomposition`] enforces (2) and (3) structurally — shifted
//! decompositions such as `F_b + m`, which belong to no parking function,
//! still need a home — while [`LrDecomposition::compose`] additionally
//! checks (1) and produces the parking function.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A letter of a word: a positive integer.
pub type Letter = u32;

/// A finite word over the positive integers. May be empty.
///
/// `Ord` is the canonical label order used for element serialization:
/// shorter words first, ties broken lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl Word {
    /// Builds a word, rejecting the letter zero.
    pub fn new(letters: Vec<Letter>) -> Result<Self, Error> {
        if letters.contains(&0) {
            return Err(Error::ZeroLetter);
        }
        Ok(Word { letters })
    }

    /// The empty word.
    pub fn empty() -> Self {
        Word {
            letters: Vec::new(),
        }
    }

    /// The letters, left to right.
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// True for the empty word.
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// Every letter raised by `m`.
    pub fn shifted(&self, m: Letter) -> Word {
        Word {
            letters: self.letters.iter().map(|&a| a + m).collect(),
        }
    }

    /// Every letter lowered by `m`; `None` if some letter is `<= m`.
    pub fn shifted_down(&self, m: Letter) -> Option<Word> {
        if self.letters.iter().any(|&a| a <= m) {
            return None;
        }
        Some(Word {
            letters: self.letters.iter().map(|&a| a - m).collect(),
        })
    }

    /// Smallest letter; `None` for the empty word.
    pub fn min_letter(&self) -> Option<Letter> {
        self.letters.iter().copied().min()
    }

    /// Largest letter; `None` for the empty word.
    pub fn max_letter(&self) -> Option<Letter> {
        self.letters.iter().copied().max()
    }

    /// The parking condition: the nondecreasing rearrangement `b` satisfies
    /// `b_i <= i`. The empty word parks.
    pub fn is_parking_function(&self) -> bool {
        let mut sorted = self.letters.clone();
        sorted.sort_unstable();
        sorted
            .iter()
            .enumerate()
            .all(|(i, &b)| b as usize <= i + 1)
    }

    /// 1-indexed positions of the strict left-to-right minima: position 1,
    /// plus every `i` with `a_i` strictly smaller than all letters before
    /// it. Errors on the empty word.
    pub fn lr_minima_positions(&self) -> Result<Vec<usize>, Error> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        let mut positions = Vec::new();
        let mut min = Letter::MAX;
        for (i, &a) in self.letters.iter().enumerate() {
            if a < min {
                positions.push(i + 1);
                min = a;
            }
        }
        Ok(positions)
    }

    /// The failure threshold of the parking condition:
    /// `d(a) = min { i >= 1 : #{ j : a_j <= i } < i }`.
    ///
    /// Always at most `len + 1`; equals `len + 1` exactly when `a` parks.
    /// Errors on the empty word.
    pub fn d_value(&self) -> Result<usize, Error> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(self.d_value_raw())
    }

    fn d_value_raw(&self) -> usize {
        let n = self.len();
        // count[i] = #{ j : a_j = i }, letters above n+1 capped (they can
        // never help satisfy a threshold <= n+1).
        let mut count = vec![0usize; n + 2];
        for &a in &self.letters {
            count[(a as usize).min(n + 1)] += 1;
        }
        let mut below = 0;
        for i in 1..=n + 1 {
            below += count[i];
            if below < i {
                return i;
            }
        }
        n + 1
    }

    /// Parkization: repeatedly find the failure threshold `d` and lower
    /// every letter above `d` by one, until the word parks. Preserves the
    /// relative order of letters and fixes parking functions.
    pub fn parkize(&self) -> ParkingFunction {
        if self.is_empty() {
            return ParkingFunction(Word::empty());
        }
        let mut w = self.clone();
        loop {
            let d = w.d_value_raw() as Letter;
            if d as usize == w.len() + 1 {
                return ParkingFunction(w);
            }
            for a in &mut w.letters {
                if *a > d {
                    *a -= 1;
                }
            }
        }
    }

    /// Renders with every letter as a bare digit, when possible.
    pub fn compact(&self) -> Option<String> {
        if self.letters.iter().all(|&a| a <= 9) && !self.is_empty() {
            Some(self.letters.iter().map(|a| a.to_string()).collect())
        } else {
            None
        }
    }
}

/// Text form: comma-separated letters (`4,4,5,1,3,2`), with two shorthands —
/// `-` for the empty word, and a bare digit string (`445132`) when every
/// letter is a single nonzero digit. An all-digit token containing `0` is
/// read as one multi-digit letter (`10` is the single letter ten).
impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s == "-" {
            return Ok(Word::empty());
        }
        if s.is_empty() {
            return Err(Error::parse(0, "empty input; the empty word is written '-'"));
        }
        if s.contains(',') {
            let mut letters = Vec::new();
            let mut pos = 0;
            for tok in s.split(',') {
                let t = tok.trim();
                match t.parse::<Letter>() {
                    Ok(0) => return Err(Error::parse(pos, "letter 0 is not allowed")),
                    Ok(a) => letters.push(a),
                    Err(_) => {
                        return Err(Error::parse(pos, format!("expected a letter, found {t:?}")))
                    }
                }
                pos += tok.len() + 1;
            }
            return Ok(Word { letters });
        }
        if let Some(bad) = s.find(|c: char| !c.is_ascii_digit()) {
            return Err(Error::parse(
                bad,
                format!("unexpected character {:?}", &s[bad..].chars().next().unwrap()),
            ));
        }
        if s.contains('0') {
            // A lone multi-digit letter such as "10"; digit-per-letter
            // reading would produce the forbidden letter 0.
            let a: Letter = s
                .parse()
                .map_err(|_| Error::parse(0, "letter out of range"))?;
            if a == 0 {
                return Err(Error::parse(0, "letter 0 is not allowed"));
            }
            return Ok(Word { letters: vec![a] });
        }
        Ok(Word {
            letters: s.bytes().map(|b| (b - b'0') as Letter).collect(),
        })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "-");
        }
        let rendered: Vec<String> = self.letters.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", rendered.join(","))
    }
}

/// A word satisfying the parking condition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParkingFunction(Word);

impl ParkingFunction {
    /// Validates the parking condition.
    pub fn new(word: Word) -> Result<Self, Error> {
        if word.is_parking_function() {
            Ok(ParkingFunction(word))
        } else {
            Err(Error::NotParking(word.to_string()))
        }
    }

    /// The empty parking function — the unit of every product here.
    pub fn empty() -> Self {
        ParkingFunction(Word::empty())
    }

    /// The underlying word.
    pub fn word(&self) -> &Word {
        &self.0
    }

    /// Consumes into the underlying word.
    pub fn into_word(self) -> Word {
        self.0
    }

    /// The letters, left to right.
    pub fn letters(&self) -> &[Letter] {
        self.0.letters()
    }

    /// Length, i.e. the degree of `M_a` in the graded algebra.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True for the empty parking function.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Cuts at the strict left-to-right minima and stores the segments by
    /// increasing minimum (i.e. in reverse order of appearance).
    pub fn lr_decompose(&self) -> LrDecomposition {
        if self.is_empty() {
            return LrDecomposition { parts: Vec::new() };
        }
        let positions = self
            .0
            .lr_minima_positions()
            .expect("nonempty word has minima");
        let letters = self.0.letters();
        let mut parts: Vec<Word> = Vec::with_capacity(positions.len());
        for (k, &start) in positions.iter().enumerate() {
            let end = positions.get(k + 1).map_or(letters.len(), |&p| p - 1);
            parts.push(Word {
                letters: letters[start - 1..end].to_vec(),
            });
        }
        parts.reverse();
        LrDecomposition { parts }
    }
}

impl From<ParkingFunction> for Word {
    fn from(pf: ParkingFunction) -> Word {
        pf.0
    }
}

impl FromStr for ParkingFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        ParkingFunction::new(s.parse()?)
    }
}

impl fmt::Display for ParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A sequence of nonempty parts, each beginning with its minimum, with
/// strictly increasing minima — conditions (2) and (3) of the
/// characterization of left-to-right-minima decompositions. Condition (1),
/// that the parts concatenate (largest minimum first) to a parking
/// function, is checked by [`LrDecomposition::compose`]: shifted
/// decompositions fail it on purpose.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LrDecomposition {
    parts: Vec<Word>,
}

impl LrDecomposition {
    /// Validates conditions (2) and (3), in that order.
    pub fn new(parts: Vec<Word>) -> Result<Self, Error> {
        for p in &parts {
            let Some(&first) = p.letters().first() else {
                return Err(Error::InvalidDecomposition {
                    condition: 2,
                    detail: "empty part".into(),
                });
            };
            if first != p.min_letter().expect("nonempty") {
                return Err(Error::InvalidDecomposition {
                    condition: 2,
                    detail: format!("part [{p}] does not begin with its minimum"),
                });
            }
        }
        for pair in parts.windows(2) {
            let (lo, hi) = (&pair[0], &pair[1]);
            if lo.min_letter() >= hi.min_letter() {
                return Err(Error::InvalidDecomposition {
                    condition: 3,
                    detail: format!("minima of [{lo}] and [{hi}] do not strictly increase"),
                });
            }
        }
        Ok(LrDecomposition { parts })
    }

    /// The parts, by increasing minimum.
    pub fn parts(&self) -> &[Word] {
        &self.parts
    }

    /// Number of parts.
    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    /// Total number of letters.
    pub fn letter_count(&self) -> usize {
        self.parts.iter().map(Word::len).sum()
    }

    /// The underlying word: parts concatenated largest minimum first.
    pub fn word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.letter_count());
        for p in self.parts.iter().rev() {
            letters.extend_from_slice(p.letters());
        }
        Word { letters }
    }

    /// Checks condition (1) and returns the parking function this
    /// decomposition cuts from.
    pub fn compose(&self) -> Result<ParkingFunction, Error> {
        let word = self.word();
        if !word.is_parking_function() {
            return Err(Error::InvalidDecomposition {
                condition: 1,
                detail: format!("concatenation [{word}] is not a parking function"),
            });
        }
        Ok(ParkingFunction(word))
    }

    /// Every letter of every part raised by `m`. Minima stay strictly
    /// increasing and parts stay dominated, so no re-validation is needed.
    pub fn shifted(&self, m: Letter) -> LrDecomposition {
        LrDecomposition {
            parts: self.parts.iter().map(|p| p.shifted(m)).collect(),
        }
    }

    /// The sub-decomposition of the parts at the given indices (which must
    /// be strictly increasing). Used by the coproduct's subset splits.
    pub fn select(&self, indices: &[usize]) -> LrDecomposition {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        LrDecomposition {
            parts: indices.iter().map(|&i| self.parts[i].clone()).collect(),
        }
    }

    /// True when every part of `self` occurs among `other`'s parts.
    pub fn is_subset_of(&self, other: &LrDecomposition) -> bool {
        self.parts.iter().all(|p| other.parts.contains(p))
    }

    /// Parts of `self` not occurring in `other`, in storage order.
    pub fn difference(&self, other: &LrDecomposition) -> Vec<Word> {
        self.parts
            .iter()
            .filter(|p| !other.parts.contains(p))
            .cloned()
            .collect()
    }

    /// Merges two decompositions' parts into one sorted-by-minimum
    /// sequence, re-validating. The workhorse behind matchings and the
    /// shifted-concatenation product.
    pub fn union(&self, other: &LrDecomposition) -> Result<LrDecomposition, Error> {
        let mut parts: Vec<Word> = self.parts.iter().chain(&other.parts).cloned().collect();
        parts.sort_by_key(|p| p.min_letter());
        LrDecomposition::new(parts)
    }
}

impl fmt::Display for LrDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Parts render compactly (digit strings) when every letter fits in
        // one digit; otherwise comma-words separated by " | " to keep the
        // two levels of separator distinct.
        let all_small = self
            .parts
            .iter()
            .all(|p| p.letters().iter().all(|&a| a <= 9));
        let rendered: Vec<String> = if all_small {
            self.parts
                .iter()
                .map(|p| p.compact().unwrap_or_else(|| "-".into()))
                .collect()
        } else {
            self.parts.iter().map(|p| p.to_string()).collect()
        };
        if all_small {
            write!(f, "({})", rendered.join(", "))
        } else {
            write!(f, "({})", rendered.join(" | "))
        }
    }
}
