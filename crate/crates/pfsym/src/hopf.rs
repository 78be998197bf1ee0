//! A common interface over the graded connected Hopf algebras in this
//! crate, so one checker can drive them all.
//!
//! [`GradedHopf`] exposes exactly what exhaustive verification needs:
//! degree-graded basis enumeration plus the structure maps on basis
//! labels (bilinearity extends the rest). Handles exist for the parking
//! function algebra in its `M` and `Q` bases, the set-partition algebra,
//! the family-spanned subalgebras, and a [`Corrupted`] wrapper that
//! perturbs one structure constant — the self-test for the checker.
//! [`Antipode`] computes the antipode of any instance by the graded
//! recursion, memoized per label.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{label_coproduct, label_product, Basis};
use crate::coeff::{self, Coeff};
use crate::error::Error;
use crate::exec::Exec;
use crate::families::{enumerate_family, enumerate_parking_functions, Family};
use crate::linear::LinComb;
use crate::ncsym::{enumerate_set_partitions, ncsym_coproduct, ncsym_product, SetPartition};
use crate::word::ParkingFunction;

/// A graded connected bialgebra presented by a basis in each degree and
/// structure constants on basis labels. Degree 0 must contain exactly the
/// unit label; products and coproducts must respect the grading. The
/// counit defaults to the indicator of the unit label, which is correct
/// for every instance here.
pub trait GradedHopf: Sync {
    type Label: Ord + Clone + fmt::Debug + fmt::Display + Send + Sync;

    /// Short stable identifier used in reports.
    fn name(&self) -> String;

    /// The degree-0 basis label.
    fn unit(&self) -> Self::Label;

    /// The grading of a label.
    fn degree(&self, label: &Self::Label) -> usize;

    /// The basis of the given degree, in a deterministic order.
    fn basis(&self, degree: usize) -> Vec<Self::Label>;

    /// Product of two basis labels, expanded over the basis.
    fn product(&self, a: &Self::Label, b: &Self::Label) -> LinComb<Self::Label>;

    /// Coproduct of a basis label, expanded over pairs of labels.
    fn coproduct(&self, a: &Self::Label) -> LinComb<(Self::Label, Self::Label)>;

    /// Counit on a basis label.
    fn counit(&self, a: &Self::Label) -> Coeff {
        if *a == self.unit() {
            coeff::one()
        } else {
            coeff::int(0)
        }
    }
}

/// The parking-function algebra in the `M` or `Q` basis. The `R` basis
/// carries no coproduct, so it is not a Hopf handle.
#[derive(Debug, Clone, Copy)]
pub struct Pfsym {
    basis: Basis,
    exec: Exec,
}

impl Pfsym {
    /// Handle in the `M` basis.
    pub fn m(exec: Exec) -> Self {
        Pfsym {
            basis: Basis::M,
            exec,
        }
    }

    /// Handle in the `Q` basis.
    pub fn q(exec: Exec) -> Self {
        Pfsym {
            basis: Basis::Q,
            exec,
        }
    }

    /// Handle in a coproduct-bearing basis; rejects `R`.
    pub fn new(basis: Basis, exec: Exec) -> Result<Self, Error> {
        match basis {
            Basis::M | Basis::Q => Ok(Pfsym { basis, exec }),
            Basis::R => Err(Error::BasisMismatch {
                expected: "M or Q".into(),
                found: "R".into(),
            }),
        }
    }
}

impl GradedHopf for Pfsym {
    type Label = ParkingFunction;

    fn name(&self) -> String {
        match self.basis {
            Basis::M => "pfsym-m".into(),
            Basis::Q => "pfsym-q".into(),
            Basis::R => unreachable!("constructors reject the R basis"),
        }
    }

    fn unit(&self) -> ParkingFunction {
        ParkingFunction::empty()
    }

    fn degree(&self, label: &ParkingFunction) -> usize {
        label.len()
    }

    fn basis(&self, degree: usize) -> Vec<ParkingFunction> {
        enumerate_parking_functions(degree, self.exec)
    }

    fn product(&self, a: &ParkingFunction, b: &ParkingFunction) -> LinComb<ParkingFunction> {
        label_product(self.basis, a, b)
    }

    fn coproduct(&self, a: &ParkingFunction) -> LinComb<(ParkingFunction, ParkingFunction)> {
        label_coproduct(a)
    }
}

/// The Hopf algebra of set partitions.
#[derive(Debug, Clone, Copy, Default)]
pub struct NcsymHopf;

impl GradedHopf for NcsymHopf {
    type Label = SetPartition;

    fn name(&self) -> String {
        "ncsym".into()
    }

    fn unit(&self) -> SetPartition {
        SetPartition::empty()
    }

    fn degree(&self, label: &SetPartition) -> usize {
        label.ground_size()
    }

    fn basis(&self, degree: usize) -> Vec<SetPartition> {
        enumerate_set_partitions(degree)
    }

    fn product(&self, a: &SetPartition, b: &SetPartition) -> LinComb<SetPartition> {
        ncsym_product(a, b)
    }

    fn coproduct(&self, a: &SetPartition) -> LinComb<(SetPartition, SetPartition)> {
        ncsym_coproduct(a)
    }
}

/// A subalgebra spanned by a membership family, with the ambient structure
/// maps: the nondecreasing, disjoint, permutation, and nondecreasing
/// permutation families in the `M` basis, the non-increasing family in the
/// `Q` basis.
#[derive(Debug, Clone, Copy)]
pub struct FamilyAlgebra {
    basis: Basis,
    family: Family,
}

impl FamilyAlgebra {
    /// Rejects the `R` basis, which carries no coproduct.
    pub fn new(basis: Basis, family: Family) -> Result<Self, Error> {
        if basis == Basis::R {
            return Err(Error::BasisMismatch {
                expected: "M or Q".into(),
                found: "R".into(),
            });
        }
        Ok(FamilyAlgebra { basis, family })
    }

    /// The spanning family.
    pub fn family(&self) -> Family {
        self.family
    }

    /// The ambient basis.
    pub fn ambient_basis(&self) -> Basis {
        self.basis
    }
}

impl GradedHopf for FamilyAlgebra {
    type Label = ParkingFunction;

    fn name(&self) -> String {
        format!("k{}", self.family.tag().to_ascii_lowercase())
    }

    fn unit(&self) -> ParkingFunction {
        ParkingFunction::empty()
    }

    fn degree(&self, label: &ParkingFunction) -> usize {
        label.len()
    }

    fn basis(&self, degree: usize) -> Vec<ParkingFunction> {
        enumerate_family(self.family, degree, degree)
            .expect("cap equals the requested degree")
    }

    fn product(&self, a: &ParkingFunction, b: &ParkingFunction) -> LinComb<ParkingFunction> {
        label_product(self.basis, a, b)
    }

    fn coproduct(&self, a: &ParkingFunction) -> LinComb<(ParkingFunction, ParkingFunction)> {
        label_coproduct(a)
    }
}

/// A single flipped structure constant.
#[derive(Debug, Clone)]
pub enum Corruption<L> {
    /// Add 1 to the first structure constant of `product(left, right)`.
    ProductBump { left: L, right: L },
    /// Remove the `unit ⊗ label` term from `coproduct(label)`.
    CoproductDrop { label: L },
}

/// Wraps an instance with one deliberately wrong structure constant, so
/// the axiom checker can prove it would notice.
#[derive(Debug, Clone)]
pub struct Corrupted<H: GradedHopf> {
    inner: H,
    corruption: Corruption<H::Label>,
}

impl<H: GradedHopf> Corrupted<H> {
    /// Bumps one product constant.
    pub fn product_bump(inner: H, left: H::Label, right: H::Label) -> Self {
        Corrupted {
            inner,
            corruption: Corruption::ProductBump { left, right },
        }
    }

    /// Drops one coproduct term.
    pub fn coproduct_drop(inner: H, label: H::Label) -> Self {
        Corrupted {
            inner,
            corruption: Corruption::CoproductDrop { label },
        }
    }

    /// The default self-test mutation: bump the product of the first
    /// degree-1 label with itself.
    pub fn canonical(inner: H) -> Self {
        let g = inner
            .basis(1)
            .into_iter()
            .next()
            .expect("every instance has a degree-1 label");
        Corrupted::product_bump(inner, g.clone(), g)
    }
}

impl<H: GradedHopf> GradedHopf for Corrupted<H> {
    type Label = H::Label;

    fn name(&self) -> String {
        format!("{}(corrupted)", self.inner.name())
    }

    fn unit(&self) -> Self::Label {
        self.inner.unit()
    }

    fn degree(&self, label: &Self::Label) -> usize {
        self.inner.degree(label)
    }

    fn basis(&self, degree: usize) -> Vec<Self::Label> {
        self.inner.basis(degree)
    }

    fn product(&self, a: &Self::Label, b: &Self::Label) -> LinComb<Self::Label> {
        let mut out = self.inner.product(a, b);
        if let Corruption::ProductBump { left, right } = &self.corruption {
            if a == left && b == right {
                let lead = out.iter().next().map(|(l, _)| l.clone());
                if let Some(lead) = lead {
                    out.add_term(lead, coeff::one());
                }
            }
        }
        out
    }

    fn coproduct(&self, a: &Self::Label) -> LinComb<(Self::Label, Self::Label)> {
        let mut out = self.inner.coproduct(a);
        if let Corruption::CoproductDrop { label } = &self.corruption {
            if a == label {
                let key = (self.inner.unit(), a.clone());
                let present = out.coeff(&key);
                out.add_term(key, -present);
            }
        }
        out
    }
}

/// Memoized antipode of a [`GradedHopf`] instance, by the graded
/// recursion: the antipode fixes the unit and, in positive degree,
/// `S(a) = −Σ c · S(x) · y` over the coproduct terms `c · x ⊗ y` of `a`
/// with `x ≠ a`.
pub struct Antipode<'h, H: GradedHopf> {
    hopf: &'h H,
    memo: BTreeMap<H::Label, LinComb<H::Label>>,
}

impl<'h, H: GradedHopf> Antipode<'h, H> {
    pub fn new(hopf: &'h H) -> Self {
        Antipode {
            hopf,
            memo: BTreeMap::new(),
        }
    }

    /// `S` on one basis label.
    pub fn of_label(&mut self, a: &H::Label) -> LinComb<H::Label> {
        if let Some(hit) = self.memo.get(a) {
            return hit.clone();
        }
        let result = if *a == self.hopf.unit() {
            LinComb::unit(a.clone())
        } else {
            let mut acc = LinComb::zero();
            let split = self.hopf.coproduct(a);
            for ((x, y), c) in split.iter().map(|(l, c)| (l.clone(), c.clone())) {
                if x == *a {
                    continue;
                }
                let s_x = self.of_label(&x);
                for (l, cl) in s_x.iter() {
                    for (t, ct) in self.hopf.product(l, &y).iter() {
                        acc.add_term(t.clone(), &c * cl * ct);
                    }
                }
            }
            acc.negated()
        };
        self.memo.insert(a.clone(), result.clone());
        result
    }

    /// `S` extended linearly.
    pub fn of_comb(&mut self, x: &LinComb<H::Label>) -> LinComb<H::Label> {
        let mut out = LinComb::zero();
        for (l, c) in x.iter().map(|(l, c)| (l.clone(), c.clone())) {
            for (t, ct) in self.of_label(&l).iter() {
                out.add_term(t.clone(), &c * ct);
            }
        }
        out
    }
}
