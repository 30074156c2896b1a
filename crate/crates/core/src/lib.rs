//! Exact computation of the stretch factor and invariant-foliation
//! coordinates of a pseudo-Anosov mapping class, given as a word in the
//! generators of a group acting piecewise-integral-linearly on an integral
//! cone complex.
//!
//! The layers, bottom up:
//!
//! - [`rational`], [`poly`], [`linalg`] — arbitrary-precision rational
//!   scalars, polynomials, and the exact linear-algebra kernels;
//! - [`algebraic`] — real algebraic numbers via Sturm sequences;
//! - [`cone`], [`ledger`], [`validate`] — integral cones, cells and pieces;
//!   the built-in ledgers; the consistency validator;
//! - [`word`], [`algorithms`] — word evaluation, sink packages, the
//!   guess-and-check and fixed-power analyses.

pub mod algebraic;
pub mod algorithms;
pub mod cone;
pub mod error;
pub mod ledger;
pub mod linalg;
pub mod poly;
pub mod rational;
pub mod validate;
pub mod word;

pub use algebraic::{AlgVector, RealAlgebraic, Sign};
pub use algorithms::{
    basic_computation, compute_q, evaluate_point, guess_and_check, guess_and_check_from,
    main_algorithm, spectral_extract, sink_package, verify_pl_eigenvector, AnalysisResult,
    Evaluation, QConstants, SinkPackage, Strategy, TraceStep,
};
pub use cone::{Cell, Cone, Coords, PLPoint, Piece, SignedGen, Triple};
pub use error::{Error, Result};
pub use ledger::{
    builtin_b3, builtin_ydelta, ledger_from_json, ledger_to_json, load_ledger, save_ledger,
    structurally_equal, Generator, Gluing, Ledger,
};
pub use linalg::{
    apply_to_subspace, char_poly, mat_mul, projection_matrix, row_reduce, subspace_intersect,
    symbolic_kernel, RatMatrix, RatVector, Subspace,
};
pub use poly::Poly;
pub use rational::{Int, Rat};
pub use validate::{validate_ledger, CheckReport, ValidationReport};
pub use word::Word;
