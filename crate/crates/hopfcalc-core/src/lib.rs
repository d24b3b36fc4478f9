//! Exact computations with finite-dimensional semisimple Hopf algebras:
//! integrals, characters, Fourier transforms, Drinfeld doubles, normality
//! criteria, and induction/restriction between a Hopf subalgebra and its
//! parent, all over exact cyclotomic arithmetic.

pub mod charint;
pub mod cyclotomic;
pub mod double_rep;
pub mod subnormal;
pub mod error;
pub mod groups;
pub mod indres;
pub mod interchange;
pub mod hopf;
pub mod linalg;
pub mod modular;
pub mod wedderburn;

pub use cyclotomic::{ArithOp, CycNumber, Rat, cyc_arith};
pub use error::{CycError, HopfError, Result};
pub use hopf::{
    AxiomReport, DualFunctional, FiniteDimHopf, HarpoonSide, Hopf, HopfElement, drinfeld_double,
    dual_hopf, group_algebra,
};
pub use linalg::{MatrixC, SolveOutcome, SubspaceC, solve_linear};
