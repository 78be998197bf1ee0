//! Elements of the parking-function Hopf algebra and the structure maps on
//! the monomial basis.
//!
//! An [`Element`] is a sparse rational linear combination of parking
//! functions, tagged with the basis its labels refer to (`M`, `Q` or `R`).
//! Mixed-basis arithmetic is rejected — conversions are explicit, via
//! [`crate::bases`]. Tensor squares are [`TensorElement`]s over ordered
//! pairs of labels.
//!
//! On the `M` basis:
//!
//! * `m_product` expands `M_a ⋆ M_b` over matchings (see
//!   [`crate::matching`]);
//! * `coproduct` splits the parts of `F_a` into all `2^k` ordered pairs of
//!   subsets and parkizes each side's word;
//! * `counit` reads off the coefficient of the empty word;
//! * `antipode` runs the graded-connected recursion
//!   `S(a) = −a − Σ S(a′) ⋆ a″` over the proper coproduct terms.
//!
//! The same element types serve the `Q` and `R` bases, whose label-level
//! products are single terms (shifted-concatenation products, see
//! [`crate::bases`]); `coproduct` applies the identical subset-split rule to
//! `Q` labels, which is the closed formula for the `Q` coproduct.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed};

use crate::coeff::{self, Coeff};
use crate::error::Error;
use crate::linear::LinComb;
use crate::matching::product_expansion;
use crate::word::ParkingFunction;

/// Which family of basis labels an element's terms refer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    /// Monomial basis: product by matchings, coproduct by subset splits.
    M,
    /// Up-set basis: `Q_a = Σ_{a ≤* b} M_b`; multiplicative for `|`.
    Q,
    /// Factorization basis: `R_a = M_{a(1)} ⋆ ⋯ ⋆ M_{a(k)}` over the split
    /// factorization; multiplicative for `∘`.
    R,
}

impl Basis {
    /// The tag used in rendered terms and structured output.
    pub fn letter(self) -> char {
        match self {
            Basis::M => 'M',
            Basis::Q => 'Q',
            Basis::R => 'R',
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "M" | "m" => Ok(Basis::M),
            "Q" | "q" => Ok(Basis::Q),
            "R" | "r" => Ok(Basis::R),
            other => Err(Error::parse(0, format!("unknown basis {other:?}; expected M, Q, or R"))),
        }
    }
}

fn basis_mismatch(expected: Basis, found: Basis) -> Error {
    Error::BasisMismatch {
        expected: expected.to_string(),
        found: found.to_string(),
    }
}

/// A sparse rational linear combination of same-basis labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    basis: Basis,
    terms: LinComb<ParkingFunction>,
}

impl Element {
    /// The zero element of a basis.
    pub fn zero(basis: Basis) -> Self {
        Element {
            basis,
            terms: LinComb::zero(),
        }
    }

    /// The unit: the empty parking function with coefficient 1. The same
    /// element in every basis (`M_ε = Q_ε = R_ε`).
    pub fn one(basis: Basis) -> Self {
        Element::from_label(basis, ParkingFunction::empty())
    }

    /// A single basis label with coefficient 1.
    pub fn from_label(basis: Basis, label: ParkingFunction) -> Self {
        Element {
            basis,
            terms: LinComb::unit(label),
        }
    }

    /// Wraps an existing combination.
    pub fn from_comb(basis: Basis, terms: LinComb<ParkingFunction>) -> Self {
        Element { basis, terms }
    }

    /// The basis tag.
    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// The underlying combination.
    pub fn comb(&self) -> &LinComb<ParkingFunction> {
        &self.terms
    }

    /// Terms in canonical label order (shorter words first, then
    /// lexicographic).
    pub fn iter(&self) -> impl Iterator<Item = (&ParkingFunction, &Coeff)> {
        self.terms.iter()
    }

    /// Coefficient of a label (zero when absent).
    pub fn coeff(&self, label: &ParkingFunction) -> Coeff {
        self.terms.coeff(label)
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// True for the zero element.
    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    /// `self + other`; the basis tags must agree.
    pub fn add(&self, other: &Element) -> Result<Element, Error> {
        if self.basis != other.basis {
            return Err(basis_mismatch(self.basis, other.basis));
        }
        Ok(Element {
            basis: self.basis,
            terms: self.terms.plus(&other.terms),
        })
    }

    /// `self - other`; the basis tags must agree.
    pub fn sub(&self, other: &Element) -> Result<Element, Error> {
        if self.basis != other.basis {
            return Err(basis_mismatch(self.basis, other.basis));
        }
        Ok(Element {
            basis: self.basis,
            terms: self.terms.minus(&other.terms),
        })
    }

    /// `-self`.
    pub fn neg(&self) -> Element {
        Element {
            basis: self.basis,
            terms: self.terms.negated(),
        }
    }

    /// `scalar · self`.
    pub fn scale(&self, scalar: &Coeff) -> Element {
        Element {
            basis: self.basis,
            terms: self.terms.scaled(scalar),
        }
    }

    /// Structured text: `{"basis":"M","terms":[{"coeff":"7","pf":[2,1,1]},…]}`
    /// with terms in canonical order and exact decimal coefficients.
    pub fn structured(&self) -> String {
        let terms: Vec<String> = self
            .terms
            .iter()
            .map(|(l, c)| {
                format!(
                    "{{\"coeff\":\"{}\",\"pf\":{}}}",
                    coeff::render(c),
                    render_letter_array(l)
                )
            })
            .collect();
        format!(
            "{{\"basis\":\"{}\",\"terms\":[{}]}}",
            self.basis,
            terms.join(",")
        )
    }

    /// Parses the rendered element syntax: terms `c·B[w]` joined by ` + ` /
    /// ` - `, the unit label spelled `1`, plus the shorthand of a bare word
    /// for a single coefficient-1 label in `default_basis`. Every explicit
    /// basis letter must agree with `default_basis`.
    pub fn parse(text: &str, default_basis: Basis) -> Result<Element, Error> {
        let s = text.trim();
        if s.is_empty() {
            return Err(Error::parse(0, "empty element"));
        }
        if s == "0" {
            return Ok(Element::zero(default_basis));
        }
        // Bare-word shorthand, covering "-" (the empty word) too.
        if !s.contains('[') && (s == "-" || s.chars().all(|c| c.is_ascii_digit() || c == ',')) {
            if s == "1" {
                // Reads as the unit element, identical in every basis.
                return Ok(Element::one(default_basis));
            }
            let pf: ParkingFunction = s.parse()?;
            return Ok(Element::from_label(default_basis, pf));
        }
        let mut out = Element::zero(default_basis);
        for (sign, term, pos) in split_terms(s)? {
            let (c, label) = parse_term(term, pos, default_basis)?;
            let c = if sign { -c } else { c };
            out.terms.add_term(label, c);
        }
        Ok(out)
    }
}

/// `[2,1,1]` — letters of a label as a JSON array.
fn render_letter_array(pf: &ParkingFunction) -> String {
    let inner: Vec<String> = pf.letters().iter().map(|a| a.to_string()).collect();
    format!("[{}]", inner.join(","))
}

/// Splits rendered-element text into `(negated, term, byte offset)` triples.
/// `+`/`-` separate terms only outside brackets.
fn split_terms(s: &str) -> Result<Vec<(bool, &str, usize)>, Error> {
    let mut terms = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    let mut sign = false;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::parse(i, "unbalanced ']'"))?;
            }
            '+' | '-' if depth == 0 && i > start => {
                let piece = s[start..i].trim();
                if piece.is_empty() {
                    return Err(Error::parse(i, "empty term"));
                }
                terms.push((sign, piece, start));
                sign = ch == '-';
                start = i + 1;
            }
            '-' if depth == 0 && i == start => {
                // Leading minus on the first term.
                sign = true;
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::parse(s.len(), "unbalanced '['"));
    }
    let piece = s[start..].trim();
    if piece.is_empty() {
        return Err(Error::parse(start, "empty term"));
    }
    terms.push((sign, piece, start));
    Ok(terms)
}

/// Parses one term: `coeff`, `label`, or `coeff·label` (also `*`).
fn parse_term(term: &str, pos: usize, basis: Basis) -> Result<(Coeff, ParkingFunction), Error> {
    let (coeff_text, label_text) = match term.split_once(['·', '*']) {
        Some((c, l)) => (Some(c.trim()), l.trim()),
        None => (None, term.trim()),
    };
    let coeff = match coeff_text {
        Some(c) => {
            coeff::parse(c).ok_or_else(|| Error::parse(pos, format!("bad coefficient {c:?}")))?
        }
        None => Coeff::one(),
    };
    // A term that is only a number is a multiple of the unit label.
    if label_text.is_empty() {
        return Err(Error::parse(pos, "missing label after coefficient"));
    }
    if coeff_text.is_none() {
        if let Some(c) = coeff::parse(label_text) {
            return Ok((c, ParkingFunction::empty()));
        }
    }
    if label_text == "1" {
        return Ok((coeff, ParkingFunction::empty()));
    }
    let Some(inner) = label_text
        .strip_prefix(basis.letter())
        .and_then(|r| r.strip_prefix('['))
        .and_then(|r| r.strip_suffix(']'))
    else {
        return Err(Error::parse(
            pos,
            format!("expected {basis}[…] or a scalar, found {label_text:?}"),
        ));
    };
    let pf: ParkingFunction = inner.parse()?;
    Ok((coeff, pf))
}

/// Renders one side of a term list: shared by elements and tensors.
/// Positive terms print before negative ones, each group in label order,
/// so a signed combination leads with what is present rather than with a
/// minus sign whenever it can.
fn render_terms<L>(terms: &[(L, Coeff)], label: impl Fn(&L) -> String) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let (positive, negative): (Vec<_>, Vec<_>) =
        terms.iter().partition(|(_, c)| !c.is_negative());
    let terms: Vec<&(L, Coeff)> = positive.into_iter().chain(negative).collect();
    let mut out = String::new();
    for (i, (l, c)) in terms.into_iter().enumerate() {
        let mag = c.abs();
        let negative = c.is_negative();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let name = label(l);
        if mag.is_one() && name != "__scalar__" {
            out.push_str(&name);
        } else if name == "__scalar__" {
            out.push_str(&coeff::render(&mag));
        } else {
            out.push_str(&coeff::render(&mag));
            out.push('·');
            out.push_str(&name);
        }
    }
    out
}

impl fmt::Display for Element {
    /// `c·M[w]` terms joined by ` + ` / ` - `; the unit label renders as
    /// `1`, the zero element as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(ParkingFunction, Coeff)> = self
            .terms
            .iter()
            .map(|(l, c)| (l.clone(), c.clone()))
            .collect();
        let basis = self.basis;
        let rendered = render_terms(&terms, |l| render_label(basis, l));
        write!(f, "{rendered}")
    }
}

fn render_label(basis: Basis, l: &ParkingFunction) -> String {
    if l.is_empty() {
        // The unit is the same in every basis; render it as the scalar 1.
        "__scalar__".into()
    } else {
        format!("{}[{}]", basis, l)
    }
}

/// A sparse combination of ordered pairs of same-basis labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorElement {
    basis: Basis,
    terms: LinComb<(ParkingFunction, ParkingFunction)>,
}

impl TensorElement {
    /// The zero tensor.
    pub fn zero(basis: Basis) -> Self {
        TensorElement {
            basis,
            terms: LinComb::zero(),
        }
    }

    /// `1 ⊗ 1`.
    pub fn one(basis: Basis) -> Self {
        TensorElement::from_pair(basis, ParkingFunction::empty(), ParkingFunction::empty())
    }

    /// A single `left ⊗ right` with coefficient 1.
    pub fn from_pair(basis: Basis, left: ParkingFunction, right: ParkingFunction) -> Self {
        TensorElement {
            basis,
            terms: LinComb::unit((left, right)),
        }
    }

    /// Wraps an existing combination.
    pub fn from_comb(basis: Basis, terms: LinComb<(ParkingFunction, ParkingFunction)>) -> Self {
        TensorElement { basis, terms }
    }

    /// The basis tag (shared by both tensor factors).
    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// The underlying combination.
    pub fn comb(&self) -> &LinComb<(ParkingFunction, ParkingFunction)> {
        &self.terms
    }

    /// Terms in canonical pair order.
    pub fn iter(&self) -> impl Iterator<Item = (&(ParkingFunction, ParkingFunction), &Coeff)> {
        self.terms.iter()
    }

    /// Coefficient of `left ⊗ right`.
    pub fn coeff(&self, left: &ParkingFunction, right: &ParkingFunction) -> Coeff {
        self.terms.coeff(&(left.clone(), right.clone()))
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// `self + other`; the basis tags must agree.
    pub fn add(&self, other: &TensorElement) -> Result<TensorElement, Error> {
        if self.basis != other.basis {
            return Err(basis_mismatch(self.basis, other.basis));
        }
        Ok(TensorElement {
            basis: self.basis,
            terms: self.terms.plus(&other.terms),
        })
    }

    /// `self - other`; the basis tags must agree.
    pub fn sub(&self, other: &TensorElement) -> Result<TensorElement, Error> {
        if self.basis != other.basis {
            return Err(basis_mismatch(self.basis, other.basis));
        }
        Ok(TensorElement {
            basis: self.basis,
            terms: self.terms.minus(&other.terms),
        })
    }

    /// The flip `x ⊗ y ↦ y ⊗ x`, for cocommutativity checks.
    pub fn flip(&self) -> TensorElement {
        TensorElement {
            basis: self.basis,
            terms: self.terms.map_labels(|(l, r)| (r.clone(), l.clone())),
        }
    }

    /// Structured text with `"pf_left"`/`"pf_right"` per term.
    pub fn structured(&self) -> String {
        let terms: Vec<String> = self
            .terms
            .iter()
            .map(|((l, r), c)| {
                format!(
                    "{{\"coeff\":\"{}\",\"pf_left\":{},\"pf_right\":{}}}",
                    coeff::render(c),
                    render_letter_array(l),
                    render_letter_array(r)
                )
            })
            .collect();
        format!(
            "{{\"basis\":\"{}\",\"terms\":[{}]}}",
            self.basis,
            terms.join(",")
        )
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<((ParkingFunction, ParkingFunction), Coeff)> = self
            .terms
            .iter()
            .map(|(l, c)| (l.clone(), c.clone()))
            .collect();
        let basis = self.basis;
        let rendered = render_terms(&terms, |(l, r)| {
            let left = pretty_side(basis, l);
            let right = pretty_side(basis, r);
            format!("{left}⊗{right}")
        });
        write!(f, "{rendered}")
    }
}

fn pretty_side(basis: Basis, l: &ParkingFunction) -> String {
    if l.is_empty() {
        "1".into()
    } else {
        format!("{}[{}]", basis, l)
    }
}

/// Label-level product in each basis. `M`: sum over matchings. `Q`: single
/// term `Q_{a|b}`. `R`: single term `R_{a∘b}`.
pub fn label_product(basis: Basis, a: &ParkingFunction, b: &ParkingFunction) -> LinComb<ParkingFunction> {
    match basis {
        Basis::M => {
            LinComb::from_terms(product_expansion(a, b).into_iter().map(|t| (t, coeff::one())))
        }
        Basis::Q => LinComb::unit(crate::bases::slash_product(a, b)),
        Basis::R => LinComb::unit(crate::bases::split_product(a, b)),
    }
}

/// Label-level coproduct by subset splits, shared by the `M` and `Q` bases:
/// for each of the `2^k` subsets of the parts of `F_a`, parkize the selected
/// parts' word and the complement's word.
pub fn label_coproduct(a: &ParkingFunction) -> LinComb<(ParkingFunction, ParkingFunction)> {
    let f = a.lr_decompose();
    let k = f.part_count();
    let mut out = LinComb::zero();
    for mask in 0u32..(1u32 << k) {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for i in 0..k {
            if mask & (1 << i) != 0 {
                left.push(i);
            } else {
                right.push(i);
            }
        }
        let a1 = f.select(&left).word().parkize();
        let a2 = f.select(&right).word().parkize();
        out.add_term((a1, a2), coeff::one());
    }
    out
}

/// `x ⋆ y`, bilinear over the label-level product of the common basis.
pub fn product(x: &Element, y: &Element) -> Result<Element, Error> {
    if x.basis != y.basis {
        return Err(basis_mismatch(x.basis, y.basis));
    }
    let mut terms = LinComb::zero();
    for (a, c) in x.iter() {
        for (b, d) in y.iter() {
            let scale = c * d;
            for (t, e) in label_product(x.basis, a, b).iter() {
                terms.add_term(t.clone(), e * &scale);
            }
        }
    }
    Ok(Element {
        basis: x.basis,
        terms,
    })
}

/// `M`-basis product; errors unless both operands are tagged `M`.
pub fn m_product(x: &Element, y: &Element) -> Result<Element, Error> {
    if x.basis != Basis::M {
        return Err(basis_mismatch(Basis::M, x.basis));
    }
    product(x, y)
}

/// The coproduct, by linear extension of the subset-split rule. Defined on
/// the `M` and `Q` bases (same algorithm, different bases); `R` labels must
/// be converted first.
pub fn coproduct(x: &Element) -> Result<TensorElement, Error> {
    if x.basis == Basis::R {
        return Err(basis_mismatch(Basis::M, Basis::R));
    }
    let mut terms = LinComb::zero();
    for (a, c) in x.iter() {
        for (pair, d) in label_coproduct(a).iter() {
            terms.add_term(pair.clone(), c * d);
        }
    }
    Ok(TensorElement {
        basis: x.basis,
        terms,
    })
}

/// `M`-basis coproduct; errors unless the operand is tagged `M`.
pub fn m_coproduct(x: &Element) -> Result<TensorElement, Error> {
    if x.basis != Basis::M {
        return Err(basis_mismatch(Basis::M, x.basis));
    }
    coproduct(x)
}

/// The counit: the coefficient of the empty-word label. (In every basis the
/// empty label is grouplike-trivial, so no tag check is needed.)
pub fn counit(x: &Element) -> Coeff {
    x.coeff(&ParkingFunction::empty())
}

/// Componentwise product of tensors: `(a⊗b)·(c⊗d) = (a⋆c)⊗(b⋆d)`, extended
/// bilinearly, in the tensors' common basis.
pub fn tensor_product(x: &TensorElement, y: &TensorElement) -> Result<TensorElement, Error> {
    if x.basis != y.basis {
        return Err(basis_mismatch(x.basis, y.basis));
    }
    let mut terms = LinComb::zero();
    for ((a, b), c) in x.iter() {
        for ((p, q), d) in y.iter() {
            let scale = c * d;
            let left = label_product(x.basis, a, p);
            let right = label_product(x.basis, b, q);
            for (l, cl) in left.iter() {
                for (r, cr) in right.iter() {
                    terms.add_term((l.clone(), r.clone()), &scale * cl * cr);
                }
            }
        }
    }
    Ok(TensorElement {
        basis: x.basis,
        terms,
    })
}

/// Antipode on a single `M` label, with memoization. Degree 0: identity.
/// Degree > 0: `S(a) = −M_a − Σ S(a′) ⋆ M_{a″}` over coproduct terms with
/// both sides proper.
fn antipode_label(
    a: &ParkingFunction,
    memo: &mut HashMap<ParkingFunction, LinComb<ParkingFunction>>,
) -> LinComb<ParkingFunction> {
    if a.is_empty() {
        return LinComb::unit(a.clone());
    }
    if let Some(hit) = memo.get(a) {
        return hit.clone();
    }
    let mut acc = LinComb::unit(a.clone()).negated();
    for ((a1, a2), c) in label_coproduct(a).iter() {
        if a1.is_empty() || a2.is_empty() {
            continue;
        }
        let s1 = antipode_label(a1, memo);
        for (t, ct) in s1.iter() {
            for (u, cu) in label_product(Basis::M, t, a2).iter() {
                acc.add_term(u.clone(), -(c * ct * cu));
            }
        }
    }
    memo.insert(a.clone(), acc.clone());
    acc
}

/// The antipode, extended linearly over an `M`-basis element.
pub fn antipode(x: &Element) -> Result<Element, Error> {
    if x.basis != Basis::M {
        return Err(basis_mismatch(Basis::M, x.basis));
    }
    let mut memo = HashMap::new();
    let mut terms = LinComb::zero();
    for (a, c) in x.iter() {
        for (t, d) in antipode_label(a, &mut memo).iter() {
            terms.add_term(t.clone(), c * d);
        }
    }
    Ok(Element {
        basis: Basis::M,
        terms,
    })
}

/// Convenience: `M_a` for tests and the CLI.
pub fn m(a: ParkingFunction) -> Element {
    Element::from_label(Basis::M, a)
}
