//! Exhaustive verification of the algebra structure up to a degree bound.
//!
//! Every check enumerates basis tuples in a fixed order (in parallel when
//! the executor allows, with the first counterexample chosen by
//! enumeration index, not arrival order) and reports pass/fail with a
//! reproducible [`AxiomReport`]. Bilinearity makes basis tuples
//! sufficient. Three layers:
//!
//! * [`check_axiom`] — the eight bialgebra/Hopf axioms against any
//!   [`GradedHopf`] instance;
//! * [`check_closure`] — products and coproduct factors of a family's
//!   members stay inside the family;
//! * [`check_free_generation`] — irreducibles generate freely: split
//!   factors expand unitriangularly under the total order, slash factors
//!   recombine bijectively.
//!
//! [`Instance`] names the bundled algebras so front ends can run suites
//! by tag, optionally with one structure constant deliberately corrupted
//! to demonstrate failure reporting.

use std::fmt;
use std::str::FromStr;

use crate::algebra::Basis;
use crate::bases::{
    check_r_triangular, is_atomic, is_unsplitable, slash_factorization, split_factorization,
};
use crate::coeff;
use crate::error::Error;
use crate::exec::{self, Exec};
use crate::families::{enumerate_family, enumerate_parking_functions, is_member, Family};
use crate::hopf::{Antipode, Corrupted, FamilyAlgebra, GradedHopf, NcsymHopf, Pfsym};
use crate::linear::LinComb;
use crate::order::sort_star_lex;
use crate::word::ParkingFunction;
use crate::DEFAULT_MAX_DEGREE;

/// The checkable structure axioms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    Assoc,
    Coassoc,
    Unit,
    Counit,
    Compat,
    Cocommut,
    Antipode,
    Grading,
}

impl Axiom {
    pub const ALL: [Axiom; 8] = [
        Axiom::Assoc,
        Axiom::Coassoc,
        Axiom::Unit,
        Axiom::Counit,
        Axiom::Compat,
        Axiom::Cocommut,
        Axiom::Antipode,
        Axiom::Grading,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Axiom::Assoc => "assoc",
            Axiom::Coassoc => "coassoc",
            Axiom::Unit => "unit",
            Axiom::Counit => "counit",
            Axiom::Compat => "compat",
            Axiom::Cocommut => "cocommut",
            Axiom::Antipode => "antipode",
            Axiom::Grading => "grading",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Axiom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_ascii_lowercase();
        Axiom::ALL
            .into_iter()
            .find(|a| a.tag() == t)
            .ok_or_else(|| Error::parse(0, format!("unknown axiom {s:?}")))
    }
}

/// The bundled algebra instances, by report tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Instance {
    /// Parking functions, matching-indexed basis.
    PfsymM,
    /// Parking functions, order-summed basis.
    PfsymQ,
    /// Set partitions.
    Ncsym,
    /// Nondecreasing-part members, ambient `M` structure.
    Kn,
    /// Disjoint-part members, ambient `M` structure.
    Kd,
    /// Permutation members, ambient `M` structure.
    Ks,
    /// Non-increasing members, ambient `Q` structure.
    Kc,
}

impl Instance {
    pub const ALL: [Instance; 7] = [
        Instance::PfsymM,
        Instance::PfsymQ,
        Instance::Ncsym,
        Instance::Kn,
        Instance::Kd,
        Instance::Ks,
        Instance::Kc,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Instance::PfsymM => "pfsym-m",
            Instance::PfsymQ => "pfsym-q",
            Instance::Ncsym => "ncsym",
            Instance::Kn => "kn",
            Instance::Kd => "kd",
            Instance::Ks => "ks",
            Instance::Kc => "kc",
        }
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Instance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_ascii_lowercase();
        Instance::ALL
            .into_iter()
            .find(|i| i.tag() == t)
            .ok_or_else(|| Error::parse(0, format!("unknown instance {s:?}")))
    }
}

/// Outcome of one check: what ran, how far, and the first counterexample
/// when it failed. Failing reports always carry a counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    /// Instance tag the check ran against.
    pub instance: String,
    /// Check tag, e.g. `assoc` or `closure[N]`.
    pub check: String,
    /// Total-degree bound that was enumerated.
    pub bound: usize,
    /// Number of basis tuples in scope.
    pub cases: u64,
    pub pass: bool,
    /// First counterexample in enumeration order, with both sides expanded.
    pub counterexample: Option<String>,
    /// Extra statistics for passing checks (e.g. generator counts).
    pub note: Option<String>,
}

impl AxiomReport {
    fn new(
        instance: String,
        check: String,
        bound: usize,
        cases: u64,
        counterexample: Option<String>,
    ) -> Self {
        AxiomReport {
            instance,
            check,
            bound,
            cases,
            pass: counterexample.is_none(),
            counterexample,
            note: None,
        }
    }

    /// One aligned summary line (no counterexample body).
    pub fn summary_line(&self) -> String {
        format!(
            "{:<20} {:<26} bound {:<2} {:<4} {:>8} cases",
            self.instance,
            self.check,
            self.bound,
            if self.pass { "pass" } else { "FAIL" },
            self.cases
        )
    }

    /// One JSON record.
    pub fn structured(&self) -> String {
        let counterexample = match &self.counterexample {
            Some(c) => format!("\"{}\"", json_escape(c)),
            None => "null".into(),
        };
        let note = match &self.note {
            Some(n) => format!("\"{}\"", json_escape(n)),
            None => "null".into(),
        };
        format!(
            "{{\"instance\":\"{}\",\"check\":\"{}\",\"bound\":{},\"cases\":{},\"pass\":{},\"counterexample\":{},\"note\":{}}}",
            json_escape(&self.instance),
            json_escape(&self.check),
            self.bound,
            self.cases,
            self.pass,
            counterexample,
            note
        )
    }
}

fn json_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}

/// Human-readable table with counterexample bodies and a summary line.
pub fn render_reports(reports: &[AxiomReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&r.summary_line());
        out.push('\n');
        if let Some(cx) = &r.counterexample {
            for line in cx.lines() {
                out.push_str("    ");
                out.push_str(line);
                out.push('\n');
            }
        }
        if let Some(note) = &r.note {
            out.push_str("    note: ");
            out.push_str(note);
            out.push('\n');
        }
    }
    let passed = reports.iter().filter(|r| r.pass).count();
    out.push_str(&format!(
        "summary: {}/{} checks passed\n",
        passed,
        reports.len()
    ));
    out
}

/// JSON array of report records, one per line.
pub fn structured_reports(reports: &[AxiomReport]) -> String {
    let body: Vec<String> = reports.iter().map(|r| format!("  {}", r.structured())).collect();
    format!("[\n{}\n]\n", body.join(",\n"))
}

/// True when every report passed.
pub fn all_pass(reports: &[AxiomReport]) -> bool {
    reports.iter().all(|r| r.pass)
}

fn guard_bound(bound: usize) -> Result<(), Error> {
    if bound > DEFAULT_MAX_DEGREE {
        return Err(Error::DegreeTooLarge {
            degree: bound,
            cap: DEFAULT_MAX_DEGREE,
        });
    }
    Ok(())
}

fn labels_up_to<H: GradedHopf>(h: &H, bound: usize) -> Vec<H::Label> {
    (0..=bound).flat_map(|n| h.basis(n)).collect()
}

fn show_comb<L: Ord + Clone + fmt::Display>(x: &LinComb<L>) -> String {
    if x.is_zero() {
        return "0".into();
    }
    x.iter()
        .map(|(l, c)| format!("{}·({})", coeff::render(c), l))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn show_pairs<L: Ord + Clone + fmt::Display>(x: &LinComb<(L, L)>) -> String {
    if x.is_zero() {
        return "0".into();
    }
    x.iter()
        .map(|((l, r), c)| format!("{}·({} ⊗ {})", coeff::render(c), l, r))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn show_triples<L: Ord + Clone + fmt::Display>(x: &LinComb<(L, L, L)>) -> String {
    if x.is_zero() {
        return "0".into();
    }
    x.iter()
        .map(|((a, b, c), k)| format!("{}·({} ⊗ {} ⊗ {})", coeff::render(k), a, b, c))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn mul_comb_label<H: GradedHopf>(
    h: &H,
    x: &LinComb<H::Label>,
    y: &H::Label,
) -> LinComb<H::Label> {
    let mut out = LinComb::zero();
    for (l, c) in x.iter() {
        for (t, ct) in h.product(l, y).iter() {
            out.add_term(t.clone(), c * ct);
        }
    }
    out
}

fn mul_label_comb<H: GradedHopf>(
    h: &H,
    x: &H::Label,
    y: &LinComb<H::Label>,
) -> LinComb<H::Label> {
    let mut out = LinComb::zero();
    for (l, c) in y.iter() {
        for (t, ct) in h.product(x, l).iter() {
            out.add_term(t.clone(), c * ct);
        }
    }
    out
}

fn coproduct_of_comb<H: GradedHopf>(
    h: &H,
    x: &LinComb<H::Label>,
) -> LinComb<(H::Label, H::Label)> {
    let mut out = LinComb::zero();
    for (l, c) in x.iter() {
        for (pair, cp) in h.coproduct(l).iter() {
            out.add_term(pair.clone(), c * cp);
        }
    }
    out
}

fn tensor_mul<H: GradedHopf>(
    h: &H,
    x: &LinComb<(H::Label, H::Label)>,
    y: &LinComb<(H::Label, H::Label)>,
) -> LinComb<(H::Label, H::Label)> {
    let mut out = LinComb::zero();
    for ((x1, y1), c1) in x.iter() {
        for ((x2, y2), c2) in y.iter() {
            let c12 = c1 * c2;
            for (p, cp) in h.product(x1, x2).iter() {
                let cl = &c12 * cp;
                for (q, cq) in h.product(y1, y2).iter() {
                    out.add_term((p.clone(), q.clone()), &cl * cq);
                }
            }
        }
    }
    out
}

/// Pairs `(i, j)` of label indices whose degrees sum within the bound.
fn index_pairs(degrees: &[usize], bound: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..degrees.len() {
        for j in 0..degrees.len() {
            if degrees[i] + degrees[j] <= bound {
                out.push((i, j));
            }
        }
    }
    out
}

fn index_triples(degrees: &[usize], bound: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..degrees.len() {
        for j in 0..degrees.len() {
            if degrees[i] + degrees[j] > bound {
                continue;
            }
            for k in 0..degrees.len() {
                if degrees[i] + degrees[j] + degrees[k] <= bound {
                    out.push((i, j, k));
                }
            }
        }
    }
    out
}

/// Checks one axiom exhaustively for all basis tuples with total degree
/// within the bound. The bound is capped at [`DEFAULT_MAX_DEGREE`].
pub fn check_axiom<H: GradedHopf>(
    h: &H,
    axiom: Axiom,
    bound: usize,
    exec: Exec,
) -> Result<AxiomReport, Error> {
    guard_bound(bound)?;
    let labels = labels_up_to(h, bound);
    let degrees: Vec<usize> = labels.iter().map(|l| h.degree(l)).collect();
    let (cases, counterexample) = match axiom {
        Axiom::Assoc => {
            let triples = index_triples(&degrees, bound);
            let hit = exec::find_first(exec, triples.len(), |t| {
                let (i, j, k) = triples[t];
                let (a, b, c) = (&labels[i], &labels[j], &labels[k]);
                let lhs = mul_comb_label(h, &h.product(a, b), c);
                let rhs = mul_label_comb(h, a, &h.product(b, c));
                (lhs != rhs).then(|| {
                    format!(
                        "a = {a}, b = {b}, c = {c}\n(a·b)·c = {}\na·(b·c) = {}",
                        show_comb(&lhs),
                        show_comb(&rhs)
                    )
                })
            });
            (triples.len() as u64, hit.map(|(_, s)| s))
        }
        Axiom::Coassoc => {
            let hit = exec::find_first(exec, labels.len(), |i| {
                let a = &labels[i];
                let split = h.coproduct(a);
                let mut lhs = LinComb::zero();
                let mut rhs = LinComb::zero();
                for ((x, y), c) in split.iter() {
                    for ((u, v), cu) in h.coproduct(x).iter() {
                        lhs.add_term((u.clone(), v.clone(), y.clone()), c * cu);
                    }
                    for ((u, v), cu) in h.coproduct(y).iter() {
                        rhs.add_term((x.clone(), u.clone(), v.clone()), c * cu);
                    }
                }
                (lhs != rhs).then(|| {
                    format!(
                        "a = {a}\n(Δ⊗id)Δ(a) = {}\n(id⊗Δ)Δ(a) = {}",
                        show_triples(&lhs),
                        show_triples(&rhs)
                    )
                })
            });
            (labels.len() as u64, hit.map(|(_, s)| s))
        }
        Axiom::Unit => {
            let unit = h.unit();
            let hit = exec::find_first(exec, labels.len(), |i| {
                let a = &labels[i];
                let left = h.product(&unit, a);
                let right = h.product(a, &unit);
                let expect = LinComb::unit(a.clone());
                (left != expect || right != expect).then(|| {
                    format!(
                        "a = {a}\n1·a = {}\na·1 = {}",
                        show_comb(&left),
                        show_comb(&right)
                    )
                })
            });
            (labels.len() as u64, hit.map(|(_, s)| s))
        }
        Axiom::Counit => {
            let hit = exec::find_first(exec, labels.len(), |i| {
                let a = &labels[i];
                let split = h.coproduct(a);
                let mut left = LinComb::zero();
                let mut right = LinComb::zero();
                for ((x, y), c) in split.iter() {
                    left.add_term(y.clone(), c * &h.counit(x));
                    right.add_term(x.clone(), c * &h.counit(y));
                }
                let expect = LinComb::unit(a.clone());
                (left != expect || right != expect).then(|| {
                    format!(
                        "a = {a}\n(ε⊗id)Δ(a) = {}\n(id⊗ε)Δ(a) = {}",
                        show_comb(&left),
                        show_comb(&right)
                    )
                })
            });
            (labels.len() as u64, hit.map(|(_, s)| s))
        }
        Axiom::Compat => {
            let pairs = index_pairs(&degrees, bound);
            let hit = exec::find_first(exec, pairs.len(), |t| {
                let (i, j) = pairs[t];
                let (a, b) = (&labels[i], &labels[j]);
                let lhs = coproduct_of_comb(h, &h.product(a, b));
                let rhs = tensor_mul(h, &h.coproduct(a), &h.coproduct(b));
                (lhs != rhs).then(|| {
                    format!(
                        "a = {a}, b = {b}\nΔ(a·b) = {}\nΔ(a)·Δ(b) = {}",
                        show_pairs(&lhs),
                        show_pairs(&rhs)
                    )
                })
            });
            (pairs.len() as u64, hit.map(|(_, s)| s))
        }
        Axiom::Cocommut => {
            let hit = exec::find_first(exec, labels.len(), |i| {
                let a = &labels[i];
                let split = h.coproduct(a);
                let flipped = split.map_labels(|(x, y)| (y.clone(), x.clone()));
                (split != flipped).then(|| {
                    format!(
                        "a = {a}\nΔ(a) = {}\nflip Δ(a) = {}",
                        show_pairs(&split),
                        show_pairs(&flipped)
                    )
                })
            });
            (labels.len() as u64, hit.map(|(_, s)| s))
        }
        Axiom::Antipode => {
            // The memo is shared across labels, so this check is serial.
            let mut antipode = Antipode::new(h);
            let unit = h.unit();
            let mut hit = None;
            for a in &labels {
                let split = h.coproduct(a);
                let mut left = LinComb::zero();
                let mut right = LinComb::zero();
                for ((x, y), c) in split.iter().map(|(l, c)| (l.clone(), c.clone())) {
                    for (l, cl) in antipode.of_label(&x).iter() {
                        for (t, ct) in h.product(l, &y).iter() {
                            left.add_term(t.clone(), &c * cl * ct);
                        }
                    }
                    for (l, cl) in antipode.of_label(&y).iter() {
                        for (t, ct) in h.product(&x, l).iter() {
                            right.add_term(t.clone(), &c * cl * ct);
                        }
                    }
                }
                let expect = if *a == unit {
                    LinComb::unit(unit.clone())
                } else {
                    LinComb::zero()
                };
                if left != expect || right != expect {
                    hit = Some(format!(
                        "a = {a}\nm(S⊗id)Δ(a) = {}\nm(id⊗S)Δ(a) = {}\nexpected = {}",
                        show_comb(&left),
                        show_comb(&right),
                        show_comb(&expect)
                    ));
                    break;
                }
            }
            (labels.len() as u64, hit)
        }
        Axiom::Grading => {
            let pairs = index_pairs(&degrees, bound);
            let pair_hit = exec::find_first(exec, pairs.len(), |t| {
                let (i, j) = pairs[t];
                let (a, b) = (&labels[i], &labels[j]);
                let want = degrees[i] + degrees[j];
                h.product(a, b).iter().find_map(|(l, _)| {
                    let d = h.degree(l);
                    (d != want).then(|| {
                        format!("a = {a}, b = {b}: product term {l} has degree {d}, expected {want}")
                    })
                })
            });
            let label_hit = if pair_hit.is_none() {
                exec::find_first(exec, labels.len(), |i| {
                    let a = &labels[i];
                    let want = degrees[i];
                    h.coproduct(a).iter().find_map(|((x, y), _)| {
                        let d = h.degree(x) + h.degree(y);
                        (d != want).then(|| {
                            format!(
                                "a = {a}: coproduct term {x} ⊗ {y} has total degree {d}, expected {want}"
                            )
                        })
                    })
                })
            } else {
                None
            };
            let zero_hit = if pair_hit.is_none() && label_hit.is_none() {
                let basis0 = h.basis(0);
                (basis0 != vec![h.unit()]).then(|| {
                    format!(
                        "degree-0 basis is {:?}, expected exactly the unit label",
                        basis0.iter().map(|l| l.to_string()).collect::<Vec<_>>()
                    )
                })
            } else {
                None
            };
            let hit = pair_hit
                .map(|(_, s)| s)
                .or_else(|| label_hit.map(|(_, s)| s))
                .or(zero_hit);
            ((pairs.len() + labels.len() + 1) as u64, hit)
        }
    };
    Ok(AxiomReport::new(
        h.name(),
        axiom.tag().into(),
        bound,
        cases,
        counterexample,
    ))
}

/// Checks that the family spans a subalgebra of the instance: every
/// product term and every coproduct tensor factor of family members is
/// again a family member, for total degrees within the bound.
pub fn check_closure<H>(
    h: &H,
    family: Family,
    bound: usize,
    exec: Exec,
) -> Result<AxiomReport, Error>
where
    H: GradedHopf<Label = ParkingFunction>,
{
    guard_bound(bound)?;
    let mut members: Vec<ParkingFunction> = Vec::new();
    for n in 0..=bound {
        members.extend(enumerate_family(family, n, bound)?);
    }
    let degrees: Vec<usize> = members.iter().map(|a| a.len()).collect();
    let pairs = index_pairs(&degrees, bound);
    let pair_hit = exec::find_first(exec, pairs.len(), |t| {
        let (i, j) = pairs[t];
        let (a, b) = (&members[i], &members[j]);
        h.product(a, b).iter().find_map(|(l, _)| {
            (!is_member(l, family)).then(|| {
                format!(
                    "a = {a}, b = {b}: product term {l} is outside the {} family",
                    family.tag()
                )
            })
        })
    });
    let label_hit = if pair_hit.is_none() {
        exec::find_first(exec, members.len(), |i| {
            let a = &members[i];
            h.coproduct(a).iter().find_map(|((x, y), _)| {
                if !is_member(x, family) {
                    Some(format!(
                        "Δ({a}): left factor {x} is outside the {} family",
                        family.tag()
                    ))
                } else if !is_member(y, family) {
                    Some(format!(
                        "Δ({a}): right factor {y} is outside the {} family",
                        family.tag()
                    ))
                } else {
                    None
                }
            })
        })
    } else {
        None
    };
    let counterexample = pair_hit.map(|(_, s)| s).or(label_hit.map(|(_, s)| s));
    Ok(AxiomReport::new(
        h.name(),
        format!("closure[{}]", family.tag()),
        bound,
        (pairs.len() + members.len()) as u64,
        counterexample,
    ))
}

/// Which irreducibles are claimed to generate freely.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorKind {
    /// Matching-basis labels without a proper split factorization.
    MUnsplitable,
    /// Order-summed-basis labels without a proper slash factorization.
    QAtomic,
}

impl GeneratorKind {
    pub fn tag(self) -> &'static str {
        match self {
            GeneratorKind::MUnsplitable => "M-unsplitable",
            GeneratorKind::QAtomic => "Q-atomic",
        }
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

fn catalan(n: usize) -> usize {
    let mut c = vec![0usize; n + 1];
    c[0] = 1;
    for i in 1..=n {
        for j in 0..i {
            c[i] += c[j] * c[i - 1 - j];
        }
    }
    c[n]
}

/// Verifies free generation by irreducibles, degree by degree: every
/// member factors uniquely into irreducibles that stay in the family (when
/// one is given); the products those factorizations index expand
/// unitriangularly over the `M` basis (split case) or land exactly on the
/// member (slash case — a permutation matrix). For the non-increasing
/// family the degree-`n` generator count must be the `(n−1)`-st Catalan
/// number.
pub fn check_free_generation(
    kind: GeneratorKind,
    family: Option<Family>,
    bound: usize,
    exec: Exec,
) -> Result<AxiomReport, Error> {
    guard_bound(bound)?;
    if kind == GeneratorKind::MUnsplitable && family == Some(Family::C) {
        return Err(Error::BasisMismatch {
            expected: "Q-atomic generators for the non-increasing family".into(),
            found: "M-unsplitable".into(),
        });
    }
    let instance = match family {
        Some(f) => format!("k{}", f.tag().to_ascii_lowercase()),
        None => "pfsym".into(),
    };
    let check = match family {
        Some(f) => format!("free-gen[{}, {}]", kind.tag(), f.tag()),
        None => format!("free-gen[{}]", kind.tag()),
    };
    let irreducible = |a: &ParkingFunction| -> Result<bool, Error> {
        match kind {
            GeneratorKind::MUnsplitable => is_unsplitable(a),
            GeneratorKind::QAtomic => is_atomic(a),
        }
    };
    let mut cases = 0u64;
    let mut generator_counts: Vec<usize> = Vec::new();
    let mut counterexample: Option<String> = None;
    'degrees: for n in 1..=bound {
        let members = match family {
            Some(f) => enumerate_family(f, n, bound)?,
            None => {
                let mut all = enumerate_parking_functions(n, exec);
                sort_star_lex(&mut all);
                all
            }
        };
        let mut generators = 0usize;
        for a in &members {
            if irreducible(a)? {
                generators += 1;
            }
        }
        generator_counts.push(generators);
        for a in &members {
            cases += 1;
            let factorization = match kind {
                GeneratorKind::MUnsplitable => split_factorization(a)?,
                GeneratorKind::QAtomic => slash_factorization(a)?,
            };
            for factor in factorization.factors() {
                if !irreducible(factor)? {
                    counterexample = Some(format!(
                        "{a}: factor {factor} is not a generator"
                    ));
                    break 'degrees;
                }
                if let Some(f) = family {
                    if !is_member(factor, f) {
                        counterexample = Some(format!(
                            "{a}: factor {factor} is outside the {} family",
                            f.tag()
                        ));
                        break 'degrees;
                    }
                }
            }
            match kind {
                GeneratorKind::MUnsplitable => match check_r_triangular(a) {
                    Ok(expansion) => {
                        if let Some(f) = family {
                            for (l, _) in expansion.iter() {
                                if !is_member(l, f) {
                                    counterexample = Some(format!(
                                        "{a}: generator-product term {l} is outside the {} family",
                                        f.tag()
                                    ));
                                    break 'degrees;
                                }
                            }
                        }
                    }
                    Err(e) => {
                        counterexample = Some(format!("{a}: {e}"));
                        break 'degrees;
                    }
                },
                GeneratorKind::QAtomic => {
                    let back = factorization.recombine();
                    if back != *a {
                        counterexample = Some(format!(
                            "{a}: generator product lands on {back} instead"
                        ));
                        break 'degrees;
                    }
                }
            }
        }
    }
    if counterexample.is_none() && family == Some(Family::C) {
        for (i, &got) in generator_counts.iter().enumerate() {
            let n = i + 1;
            let want = catalan(n - 1);
            if got != want {
                counterexample = Some(format!(
                    "degree {n} has {got} generators, expected the Catalan number {want}"
                ));
                break;
            }
        }
    }
    let mut report = AxiomReport::new(instance, check, bound, cases, counterexample);
    if report.pass {
        let shown: Vec<String> = generator_counts.iter().map(|g| g.to_string()).collect();
        report.note = Some(format!(
            "generators by degree 1..={bound}: {}",
            shown.join(", ")
        ));
    }
    Ok(report)
}

fn run_handle<H: GradedHopf>(
    h: H,
    axioms: &[Axiom],
    bound: usize,
    corrupt: bool,
    exec: Exec,
) -> Result<Vec<AxiomReport>, Error> {
    if corrupt {
        let c = Corrupted::canonical(h);
        axioms
            .iter()
            .map(|&axiom| check_axiom(&c, axiom, bound, exec))
            .collect()
    } else {
        axioms
            .iter()
            .map(|&axiom| check_axiom(&h, axiom, bound, exec))
            .collect()
    }
}

fn run_family(
    family: Family,
    basis: Basis,
    axioms: &[Axiom],
    bound: usize,
    corrupt: bool,
    exec: Exec,
) -> Result<Vec<AxiomReport>, Error> {
    let h = FamilyAlgebra::new(basis, family)?;
    let mut reports = run_handle(h, axioms, bound, corrupt, exec)?;
    reports.push(check_closure(&h, family, bound, exec)?);
    Ok(reports)
}

/// Runs the named checks for one instance; family instances additionally
/// get their closure check. With `corrupt` set, one structure constant is
/// deliberately flipped first, so the reports demonstrate failure output.
pub fn run_instance(
    instance: Instance,
    axioms: &[Axiom],
    bound: usize,
    corrupt: bool,
    exec: Exec,
) -> Result<Vec<AxiomReport>, Error> {
    match instance {
        Instance::PfsymM => run_handle(Pfsym::m(exec), axioms, bound, corrupt, exec),
        Instance::PfsymQ => run_handle(Pfsym::q(exec), axioms, bound, corrupt, exec),
        Instance::Ncsym => run_handle(NcsymHopf, axioms, bound, corrupt, exec),
        Instance::Kn => run_family(Family::N, Basis::M, axioms, bound, corrupt, exec),
        Instance::Kd => run_family(Family::D, Basis::M, axioms, bound, corrupt, exec),
        Instance::Ks => run_family(Family::S, Basis::M, axioms, bound, corrupt, exec),
        Instance::Kc => run_family(Family::C, Basis::Q, axioms, bound, corrupt, exec),
    }
}
