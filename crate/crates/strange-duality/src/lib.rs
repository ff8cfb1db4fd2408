//! Exact-arithmetic classification of three-variable weight systems via
//! unimodular matrix factorizations.
//!
//! A weight system (a1, a2, a3; h) with positive integer weights and degree
//! h = a1 + a2 + a3 + 1 determines the matrix B_a = I + 1·aᵀ, whose entry
//! (i, j) is a_j + δ_ij. This crate searches for factorizations
//!
//! ```text
//! B_a = C · D,   C, D non-negative integer 3×3,   |det D| = 1,
//! ```
//!
//! where the columns of D sum to (a1, a2, a3). Each such factorization turns
//! the rows of C into the monomials of a polynomial f_C and the row sums of
//! D into a *dual* weight system ǎ with the same degree; `f_C` is then
//! quasi-homogeneous of degree h with respect to ǎ. The weight system comes
//! from one of the fourteen exceptional unimodal singularities exactly when
//! some factorization additionally makes f_C an isolated singularity at the
//! origin, and in that case f_C is a defining polynomial of the *strange
//! dual* singularity, unique up to permuting rows and columns of C.
//!
//! The crate decides isolatedness twice and cross-checks: a normative
//! coordinate-stratification engine (univariate gcds on the axes, a
//! Rabinowitsch-trick Gröbner triviality test on the coordinate planes) and
//! a Milnor-number engine (zero-dimensionality of the Jacobian ideal plus a
//! standard-monomial count, validated against the Milnor–Orlik product).
//! All arithmetic is exact — arbitrary-precision integers and rationals,
//! no floating point anywhere.
//!
//! The fourteen-row ground-truth table (normal forms, weight systems,
//! Dolgachev/Gabrielov triples, strange-dual pairing) ships in
//! [`dataset`], and [`duality::classify`] reproduces it from scratch.
//!
//! Start with [`duality::classify`] for the full pipeline, or see the
//! `examples/` directory — each example exercises one capability. A thin
//! CLI binary (`strange-dual`) exposes the same operations with JSON/TSV
//! reports.

pub mod dataset;
pub mod duality;
pub mod enumerate;
pub mod error;
pub mod groebner;
pub mod matrix;
pub mod poly;
pub mod report;
pub mod singularity;
pub mod weight;

pub use dataset::{load_weight_list, record, table1, SingularityRecord, WeightListEntry};
pub use duality::{
    classify, identify_dual, kobayashi_check, match_record, reflexivity_check,
    verify_mirror_identities, ClassificationResult, MagicSquareReport,
};
pub use enumerate::{
    candidate_count, compositions3, dual_weight_system, enumerate_d, semi_dual_candidates,
    SemiDualSolution,
};
pub use error::{Error, Result};
pub use groebner::{groebner_basis, is_trivial_ideal, normal_form, TermOrder};
pub use matrix::{
    adjugate, build_b, canonicalize, det3, exponent_matrix_to_poly, CanonicalKey, IMat3,
};
pub use poly::{rat_pow, Monomial, SparsePoly};
pub use singularity::{
    atomic_decomposition, isolated_at_origin, milnor_number, milnor_orlik, orlik_product,
    partials, quasi_weights, Atom, Decomposition, JacobianSystem, MilnorResult,
};
pub use weight::Weight;
