//! Exact-arithmetic library for shifts of finite type presented by finite
//! directed multigraphs: Krieger dimension groups, covering maps,
//! correspondences and their composition, shift-equivalence witnesses, and
//! the associated invariants (Perron data, eventual range, zeta functions).
//!
//! All algebra is exact. Matrices and polynomials are generic over the
//! scalar type; the concrete instantiations used throughout are
//! arbitrary-precision integers and rationals, aliased at the crate root.

pub mod correspondence;
pub mod covering;
pub mod dimension;
pub mod equivalence;
pub mod graph;
pub mod invariants;
pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod scalar;

pub use matrix::Matrix;
pub use poly::Poly;

/// Arbitrary-precision integer scalar.
pub type Int = num_bigint::BigInt;
/// Arbitrary-precision rational scalar.
pub type Rat = num_rational::BigRational;

/// Integer matrix with exact entries.
pub type IntMatrix = Matrix<Int>;
/// Rational matrix with exact entries.
pub type RatMatrix = Matrix<Rat>;
/// Integer-coefficient polynomial, lowest degree first.
pub type IntPoly = Poly<Int>;
/// Rational-coefficient polynomial, lowest degree first.
pub type RatPoly = Poly<Rat>;

/// Shorthand for `Int::from`.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// Shorthand for building a rational from an integer.
pub fn rat(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}

/// Shorthand for building the rational `p/q`.
pub fn ratio(p: i64, q: i64) -> Rat {
    Rat::new(Int::from(p), Int::from(q))
}
