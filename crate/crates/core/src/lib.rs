//! Exact classification of indecomposable module categories over
//! Tambara–Yamagami categories `TY(A, χ, τ)`.
//!
//! Module categories over `Vec_A` are pairs `(H, ξ)`: a subgroup `H ≤ A`
//! and an alternating form `ξ` on `H` standing for a class in `H²(H, k*)`.
//! The odd grading component of the category acts on these pairs by an
//! involution `σ`. Pairs moved by `σ` induce one module category per orbit;
//! fixed pairs carry equivariant structures described by an involution `s`
//! of `H/H^⊥` and a function `ν`, subject to a coboundary equation, a twist
//! condition and a Gauss-sum sign condition against `sign(τ)`.
//!
//! All scalars are roots of unity and are stored exactly as [`PhaseExp`].

pub mod abelian;
pub mod battery;
pub mod checks;
pub mod classify;
pub mod error;
pub mod forms;
pub mod phase;
pub mod tycat;

pub use abelian::{Element, FinAbGroup, Hom, Subgroup};
pub use classify::{classify, ClassificationReport, ClassifyOptions};
pub use error::{Error, ParseError, Result};
pub use forms::{AlternatingForm, Bicharacter, BilinearCocycle, NuFunction, Sign};
pub use phase::PhaseExp;
pub use tycat::TyData;
