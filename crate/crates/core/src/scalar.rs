//! Scalar bounds for the generic matrix and polynomial types.

use num_traits::{NumAssign, Signed};

/// An exact scalar: a signed commutative ring with assignment operators and
/// a total-ish order for sign tests. Satisfied by `BigInt`, `BigRational`,
/// and the primitive numeric types.
pub trait Scalar: Clone + PartialEq + PartialOrd + NumAssign + Signed {}

impl<T: Clone + PartialEq + PartialOrd + NumAssign + Signed> Scalar for T {}

/// Marker for scalars forming a field, where `/` is exact division.
/// Gates polynomial division, gcds, and row reduction.
pub trait FieldScalar: Scalar {}

impl FieldScalar for num_rational::BigRational {}
impl FieldScalar for f64 {}
impl FieldScalar for f32 {}
