//! Characteristic polynomials by the Faddeev–LeVerrier recurrence; every
//! division in the recurrence is exact over the integers.

use num_traits::Zero;

use super::LinalgError;
use crate::{Int, IntMatrix, IntPoly, Poly};

/// `det(tI - a)`, monic with exact integer coefficients.
pub fn charpoly(a: &IntMatrix) -> Result<IntPoly, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let mut coeffs = vec![Int::zero(); n + 1];
    coeffs[n] = Int::from(1);
    if n == 0 {
        return Ok(Poly::new(coeffs));
    }
    let mut m = a.clone();
    let mut c = -m.trace();
    coeffs[n - 1] = c.clone();
    for k in 2..=n {
        let shifted = m.add(&IntMatrix::identity(n).scale(&c));
        m = a.mul(&shifted);
        let t = m.trace();
        let (q, r) = num_integer::Integer::div_rem(&(-t), &Int::from(k as i64));
        debug_assert!(r.is_zero(), "Faddeev-LeVerrier division must be exact");
        c = q;
        coeffs[n - k] = c.clone();
    }
    Ok(Poly::new(coeffs))
}
