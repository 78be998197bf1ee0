//! The two canonical products on parking functions themselves (split `∘`
//! and slash `|`), their unique factorizations, and the three bases of the
//! algebra with conversions between them.
//!
//! * `a ∘ b` zips the decomposition parts of `a` with the parts of `b`
//!   shifted by `l(a)`, padding whichever side is shorter. Parking
//!   functions factor uniquely into `∘`-irreducible ("unsplitable") ones.
//! * `a | b` prepends the shift of `b` to the word of `a`; equivalently it
//!   appends shifted parts to `F_a`. Parking functions factor uniquely
//!   into `|`-irreducible ("atomic") ones.
//! * `Q_a = Σ_{a ≤* b} M_b`, inverted by the Möbius function of the poset;
//!   `R_a` is the product of the `M`s of the split factorization, which is
//!   unitriangular against `M` under the total order.
//!
//! [`PosetStore`] memoizes one poset per degree so repeated conversions
//! share reachability and Möbius rows.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use num_traits::One;

use crate::algebra::{product, Basis, Element, TensorElement};
use crate::coeff;
use crate::error::Error;
use crate::exec::Exec;
use crate::linear::LinComb;
use crate::order::{star_lex_cmp, Poset};
use crate::word::{Letter, LrDecomposition, ParkingFunction, Word};
use crate::DEFAULT_MAX_DEGREE;

/// `a ∘ b`: merge the decompositions partwise after shifting `b`'s letters
/// past `a`'s, padding the longer side.
///
/// With `F_a = (u₁,…,u_r)`, `F_b = (w₁,…,w_s)`, `m = l(a)`, the parts of
/// `F_{a∘b}` are `uᵢ·(wᵢ+m)` for `i ≤ min(r,s)`, followed by the leftover
/// `uᵢ` (when `r > s`) or leftover `wᵢ+m` (when `r ≤ s`).
pub fn split_product(a: &ParkingFunction, b: &ParkingFunction) -> ParkingFunction {
    let fa = a.lr_decompose();
    let fb = b.lr_decompose().shifted(a.len() as Letter);
    let (r, s) = (fa.part_count(), fb.part_count());
    let mut parts: Vec<Word> = Vec::with_capacity(r.max(s));
    for i in 0..r.min(s) {
        parts.push(fa.parts()[i].concat(&fb.parts()[i]));
    }
    if r > s {
        parts.extend_from_slice(&fa.parts()[s..]);
    } else {
        parts.extend_from_slice(&fb.parts()[r..]);
    }
    LrDecomposition::new(parts)
        .expect("partwise merge of shifted decompositions is a valid decomposition")
        .compose()
        .expect("split product of parking functions parks")
}

/// `a | b`: the word of `b` shifted by `m = l(a)`, followed by the word of
/// `a`. On decompositions this appends the shifted parts of `F_b` after
/// the parts of `F_a`.
pub fn slash_product(a: &ParkingFunction, b: &ParkingFunction) -> ParkingFunction {
    let word = b.word().shifted(a.len() as Letter).concat(a.word());
    ParkingFunction::new(word).expect("slash product of parking functions parks")
}

/// Tries to write `a = b ∘ c` with `l(b) = m`, reconstructing both factors
/// from the decomposition.
///
/// Every part of `F_a` must split as (letters `≤ m`)·(letters `> m`);
/// parts carrying both pieces must form a prefix of the part list and the
/// rest must be homogeneous (all-low when `b` has more parts, all-high
/// when `c` does). The lows must carry exactly `m` letters and both
/// reassembled sides must be valid parking functions.
pub fn try_split(a: &ParkingFunction, m: usize) -> Option<(ParkingFunction, ParkingFunction)> {
    if m > a.len() {
        return None;
    }
    let shift = m as Letter;
    let f = a.lr_decompose();
    let mut lows: Vec<Word> = Vec::new();
    let mut composite_highs: Vec<Word> = Vec::new();
    let mut pure_highs: Vec<Word> = Vec::new();
    let mut past_composites = false;
    let mut seen_pure_low = false;
    let mut seen_pure_high = false;
    for part in f.parts() {
        let letters = part.letters();
        let cut = letters.iter().take_while(|&&x| x <= shift).count();
        if letters[cut..].iter().any(|&x| x <= shift) {
            return None; // low letters must be one contiguous prefix
        }
        let low = &letters[..cut];
        let high = &letters[cut..];
        match (low.is_empty(), high.is_empty()) {
            (false, false) => {
                if past_composites {
                    return None; // composite parts must come first
                }
                lows.push(Word::new(low.to_vec()).expect("letters are positive"));
                composite_highs.push(shift_down(high, shift));
            }
            (false, true) => {
                past_composites = true;
                seen_pure_low = true;
                lows.push(Word::new(low.to_vec()).expect("letters are positive"));
            }
            (true, false) => {
                past_composites = true;
                seen_pure_high = true;
                pure_highs.push(shift_down(high, shift));
            }
            (true, true) => unreachable!("decomposition parts are nonempty"),
        }
        if seen_pure_low && seen_pure_high {
            return None; // padding can only be on one side
        }
    }
    if lows.iter().map(Word::len).sum::<usize>() != m {
        return None;
    }
    let b = LrDecomposition::new(lows).ok()?.compose().ok()?;
    composite_highs.extend(pure_highs);
    let c = LrDecomposition::new(composite_highs).ok()?.compose().ok()?;
    (split_product(&b, &c) == *a).then_some((b, c))
}

fn shift_down(letters: &[Letter], m: Letter) -> Word {
    Word::new(letters.iter().map(|&x| x - m).collect())
        .expect("letters above the cut stay positive after the shift")
}

/// Tries to write `a = b | c` with `l(b) = m`: the suffix of length `m`
/// must park and the prefix must park after shifting down by `m`.
pub fn try_slash(a: &ParkingFunction, m: usize) -> Option<(ParkingFunction, ParkingFunction)> {
    if m > a.len() {
        return None;
    }
    let letters = a.letters();
    let cut = a.len() - m;
    let b = ParkingFunction::new(Word::new(letters[cut..].to_vec()).ok()?).ok()?;
    let c_word = Word::new(letters[..cut].to_vec()).ok()?.shifted_down(m as Letter)?;
    let c = ParkingFunction::new(c_word).ok()?;
    (slash_product(&b, &c) == *a).then_some((b, c))
}

/// Whether `a` admits no factorization `a = b ∘ c` with both sides
/// nonempty.
pub fn is_unsplitable(a: &ParkingFunction) -> Result<bool, Error> {
    if a.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok((1..a.len()).all(|m| try_split(a, m).is_none()))
}

/// Whether `a` admits no factorization `a = b | c` with both sides
/// nonempty.
pub fn is_atomic(a: &ParkingFunction) -> Result<bool, Error> {
    if a.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok((1..a.len()).all(|m| try_slash(a, m).is_none()))
}

/// Which product a [`Factorization`]'s factors recombine under.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorKind {
    /// Factors recombine with `∘`; each factor is unsplitable.
    Split,
    /// Factors recombine with `|`; each factor is atomic.
    Slash,
}

impl FactorKind {
    /// The infix symbol used when rendering.
    pub fn symbol(self) -> &'static str {
        match self {
            FactorKind::Split => "∘",
            FactorKind::Slash => "|",
        }
    }
}

/// A complete factorization into irreducibles under one of the two
/// products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    kind: FactorKind,
    factors: Vec<ParkingFunction>,
}

impl Factorization {
    /// Which product the factors recombine under.
    pub fn kind(&self) -> FactorKind {
        self.kind
    }

    /// The irreducible factors, left to right.
    pub fn factors(&self) -> &[ParkingFunction] {
        &self.factors
    }

    /// Folds the factors back together; reproduces the factored element.
    pub fn recombine(&self) -> ParkingFunction {
        let op = match self.kind {
            FactorKind::Split => split_product,
            FactorKind::Slash => slash_product,
        };
        let mut acc = ParkingFunction::empty();
        for f in &self.factors {
            acc = op(&acc, f);
        }
        acc
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<String> = self.factors.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", rendered.join(&format!(" {} ", self.kind.symbol())))
    }
}

/// The unique factorization of `a` into unsplitable factors under `∘`.
///
/// Greedy: the shortest left factor that splits off is itself unsplitable
/// (a finer split of it would split `a` at a smaller cut).
pub fn split_factorization(a: &ParkingFunction) -> Result<Factorization, Error> {
    factorize(a, FactorKind::Split)
}

/// The unique factorization of `a` into atomic factors under `|`.
pub fn slash_factorization(a: &ParkingFunction) -> Result<Factorization, Error> {
    factorize(a, FactorKind::Slash)
}

fn factorize(a: &ParkingFunction, kind: FactorKind) -> Result<Factorization, Error> {
    if a.is_empty() {
        return Err(Error::EmptyWord);
    }
    let try_cut = match kind {
        FactorKind::Split => try_split,
        FactorKind::Slash => try_slash,
    };
    let mut factors = Vec::new();
    let mut rest = a.clone();
    'peel: while !rest.is_empty() {
        for m in 1..rest.len() {
            if let Some((b, c)) = try_cut(&rest, m) {
                factors.push(b);
                rest = c;
                continue 'peel;
            }
        }
        factors.push(rest);
        break;
    }
    Ok(Factorization { kind, factors })
}

/// Builds each degree's poset once and shares it between conversions.
/// Immutable queries only after construction; safe to share across
/// threads.
#[derive(Debug)]
pub struct PosetStore {
    cap: usize,
    exec: Exec,
    cache: RwLock<HashMap<usize, Arc<Poset>>>,
}

impl PosetStore {
    /// A store with the default degree cap and execution strategy.
    pub fn new() -> Self {
        PosetStore::with_cap(DEFAULT_MAX_DEGREE, Exec::default())
    }

    /// A store with an explicit cap; degrees beyond it are refused rather
    /// than built.
    pub fn with_cap(cap: usize, exec: Exec) -> Self {
        PosetStore {
            cap,
            exec,
            cache: RwLock::new(HashMap::new()),
        }
    }

    /// The degree cap.
    pub fn cap(&self) -> usize {
        self.cap
    }

    /// The poset of degree `n`, building it on first request.
    pub fn poset(&self, n: usize) -> Result<Arc<Poset>, Error> {
        if let Some(hit) = self.cache.read().expect("store lock poisoned").get(&n) {
            return Ok(Arc::clone(hit));
        }
        let built = Arc::new(Poset::build_with(n, self.cap, self.exec)?);
        let mut cache = self.cache.write().expect("store lock poisoned");
        // Keep whichever build won the race so callers share one copy.
        Ok(Arc::clone(cache.entry(n).or_insert(built)))
    }
}

impl Default for PosetStore {
    fn default() -> Self {
        PosetStore::new()
    }
}

/// `Q_a` expanded in the `M` basis: the up-set sum `Σ_{a ≤* b} M_b`.
pub fn q_to_m(a: &ParkingFunction, store: &PosetStore) -> Result<Element, Error> {
    let poset = store.poset(a.len())?;
    let idx = poset
        .index_of(a)
        .expect("every parking function of degree n is a poset element");
    let comb = LinComb::from_terms(
        poset
            .up_set(idx)
            .iter()
            .map(|&b| (poset.element(b as usize).clone(), coeff::one())),
    );
    Ok(Element::from_comb(Basis::M, comb))
}

/// `M_a` expanded in the `Q` basis by Möbius inversion:
/// `Σ_{a ≤* b} μ(a,b) Q_b`.
pub fn m_to_q(a: &ParkingFunction, store: &PosetStore) -> Result<Element, Error> {
    let poset = store.poset(a.len())?;
    let row = poset.moebius_row(a)?;
    let comb = LinComb::from_terms(
        row.iter()
            .map(|(&b, &mu)| (poset.element(b as usize).clone(), coeff::int(mu))),
    );
    Ok(Element::from_comb(Basis::Q, comb))
}

/// `R_a` expanded in the `M` basis: the `⋆`-product of the `M`s of the
/// split factorization. Unitriangular: coefficient 1 on `M_a`, support
/// otherwise strictly above `a` in the total order.
pub fn r_to_m(a: &ParkingFunction) -> Element {
    if a.is_empty() {
        return Element::one(Basis::M);
    }
    let factorization =
        split_factorization(a).expect("nonempty parking functions factorize");
    let mut acc = Element::one(Basis::M);
    for f in factorization.factors() {
        let step = Element::from_label(Basis::M, f.clone());
        acc = product(&acc, &step).expect("same basis");
    }
    acc
}

/// Least label under (degree, then total order) — the elimination order
/// that makes the `M → R` rewrite terminate.
fn least_label(comb: &LinComb<ParkingFunction>) -> Option<ParkingFunction> {
    comb.iter()
        .map(|(l, _)| l.clone())
        .min_by(|a, b| {
            a.len()
                .cmp(&b.len())
                .then_with(|| star_lex_cmp(a, b).expect("same length"))
        })
}

fn m_to_r(x: &Element) -> Element {
    let mut rest = x.comb().clone();
    let mut out = LinComb::zero();
    while let Some(label) = least_label(&rest) {
        let c = rest.coeff(&label);
        // R_label = M_label + strictly-later same-degree terms, so this
        // step eliminates the least label for good.
        rest = rest.minus(&r_to_m(&label).comb().scaled(&c));
        out.add_term(label, c);
    }
    Element::from_comb(Basis::R, out)
}

/// One basis label expanded in a target basis.
fn label_in_basis(
    from: Basis,
    label: &ParkingFunction,
    target: Basis,
    store: &PosetStore,
) -> Result<LinComb<ParkingFunction>, Error> {
    let unit = Element::from_label(from, label.clone());
    Ok(element_to_basis(&unit, target, store)?.comb().clone())
}

/// Rewrites an element in another basis. `Q` and `R` route through `M`;
/// `M → R` eliminates leading terms against the unitriangular expansion.
pub fn element_to_basis(
    x: &Element,
    target: Basis,
    store: &PosetStore,
) -> Result<Element, Error> {
    if x.basis() == target {
        return Ok(x.clone());
    }
    let in_m = match x.basis() {
        Basis::M => x.clone(),
        Basis::Q => {
            let mut acc = LinComb::zero();
            for (label, c) in x.iter() {
                for (b, d) in q_to_m(label, store)?.iter() {
                    acc.add_term(b.clone(), c * d);
                }
            }
            Element::from_comb(Basis::M, acc)
        }
        Basis::R => {
            let mut acc = LinComb::zero();
            for (label, c) in x.iter() {
                for (b, d) in r_to_m(label).iter() {
                    acc.add_term(b.clone(), c * d);
                }
            }
            Element::from_comb(Basis::M, acc)
        }
    };
    match target {
        Basis::M => Ok(in_m),
        Basis::Q => {
            let mut acc = LinComb::zero();
            for (label, c) in in_m.iter() {
                for (b, d) in m_to_q(label, store)?.iter() {
                    acc.add_term(b.clone(), c * d);
                }
            }
            Ok(Element::from_comb(Basis::Q, acc))
        }
        Basis::R => Ok(m_to_r(&in_m)),
    }
}

/// Rewrites both tensor legs in another basis.
pub fn tensor_to_basis(
    t: &TensorElement,
    target: Basis,
    store: &PosetStore,
) -> Result<TensorElement, Error> {
    if t.basis() == target {
        return Ok(t.clone());
    }
    let mut acc = LinComb::zero();
    for ((l, r), c) in t.iter() {
        let left = label_in_basis(t.basis(), l, target, store)?;
        let right = label_in_basis(t.basis(), r, target, store)?;
        for (bl, cl) in left.iter() {
            for (br, cr) in right.iter() {
                acc.add_term((bl.clone(), br.clone()), c * cl * cr);
            }
        }
    }
    Ok(TensorElement::from_comb(target, acc))
}

/// Asserts the unitriangularity of `R_a` against `M`: leading coefficient
/// one, support otherwise strictly later, all coefficients nonnegative
/// integers. Returns the expansion for further use.
pub fn check_r_triangular(a: &ParkingFunction) -> Result<Element, Error> {
    let expansion = r_to_m(a);
    if !expansion.coeff(a).is_one() {
        return Err(Error::InvalidDecomposition {
            condition: 0,
            detail: format!("leading coefficient of the expansion of {a} is not 1"),
        });
    }
    for (b, c) in expansion.iter() {
        if !coeff::is_nonneg_integer(c) {
            return Err(Error::InvalidDecomposition {
                condition: 0,
                detail: format!("coefficient of {b} in the expansion of {a} is {c}"),
            });
        }
        if b != a && star_lex_cmp(a, b)? != std::cmp::Ordering::Less {
            return Err(Error::InvalidDecomposition {
                condition: 0,
                detail: format!("support label {b} is not above {a}"),
            });
        }
    }
    Ok(expansion)
}
