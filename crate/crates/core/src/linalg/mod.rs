//! Exact integer and rational linear algebra: characteristic polynomials,
//! integer kernels via Hermite normal form, eventual ranges with rational
//! canonical forms, and certified real-root isolation for Perron eigenvalue
//! comparison.

mod charpoly;
mod eventual;
mod hnf;
mod perron;
mod sturm;

pub use charpoly::charpoly;
pub use eventual::{
    charpoly_rational, charpoly_splits, eventual_range, rational_canonical_form, EventualRange,
};
pub use hnf::{hermite_normal_form, integer_kernel_basis, solve_integer};
pub use perron::{compare_perron, perron_equal, PerronComparison};
pub use sturm::{isolate_max_real_root, refine_to_width, RootInterval, SturmChain, REFINEMENT_CAP};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("polynomial has no real root")]
    NoRealRoot,
    #[error("bisection refinement exceeded {REFINEMENT_CAP} doublings")]
    RefinementBudget,
    #[error("matrix is nilpotent: spectral radius is zero")]
    ZeroSpectralRadius,
    #[error("matrix has a negative entry")]
    NotNonnegative,
}
