//! Exact-arithmetic computer algebra for the Hopf algebra of parking functions.
//!
//! A word `a = a_1 … a_n` over the positive integers is a *parking function*
//! when its nondecreasing rearrangement `b` satisfies `b_i <= i`. The free
//! vector space over all parking functions (all lengths, rational
//! coefficients) carries a graded connected Hopf structure:
//!
//! * the **product** `M_a ⋆ M_b` sums over *matchings* — injective partial
//!   pairings between the parts of the left-to-right-minima decompositions of
//!   `a` and of `b` shifted up by `len(a)`;
//! * the **coproduct** `Δ(M_a)` sums over the `2^k` ways to split the `k`
//!   parts of the decomposition of `a` into two subsets, parkizing each side;
//! * the **counit** picks out the coefficient of the empty word, and the
//!   **antipode** is the usual graded-connected recursion.
//!
//! Besides the monomial basis `M` the crate implements the upper-set basis
//! `Q` (triangular with respect to a cover-generated partial order on equal
//! length parking functions, related to `M` by Moebius inversion) and the
//! multiplicative basis `R` indexed by factorizations into unsplitable
//! parking functions. A parallel implementation of the same machinery on set
//! partitions (the Hopf algebra usually written NCSym) and the embedding
//! `ω : NCSym → PFSym` round out the algebraic side, together with the
//! distinguished subalgebras cut out by nondecreasing parts (`N`), pairwise
//! disjoint parts (`D`), permutation words (`S`) and non-increasing words
//! (`C`).
//!
//! Everything is exact: coefficients are arbitrary-precision rationals and
//! all checks are equality checks. The [`verify`] module runs exhaustive
//! low-degree sweeps of the Hopf axioms over any of the bundled algebra
//! instances, and is the backbone of this crate's test suite.
//!
//! Bulk operations (poset construction, basis enumeration, axiom sweeps) run
//! on a rayon thread pool when the default `parallel` feature is enabled;
//! every such entry point also has a sequential twin so the two can be
//! compared (see `benches/par_bench.rs`).

pub mod coeff;
pub mod error;
pub mod linear;
pub mod word;

pub mod matching;

pub mod algebra;

pub mod order;

pub mod bases;
pub mod families;

pub mod ncsym;

pub mod hopf;
pub mod verify;

pub mod exec;

pub use coeff::Coeff;
pub use error::Error;
pub use exec::Exec;
pub use word::{Letter, LrDecomposition, ParkingFunction, Word};

/// Default degree guard: operations that enumerate all parking functions of
/// one length (poset construction, family listings, axiom sweeps) refuse
/// degrees above this unless the caller passes an explicit higher cap.
pub const DEFAULT_MAX_DEGREE: usize = 6;
