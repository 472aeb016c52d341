//! Exact equality of Perron eigenvalues of nonnegative integer matrices.
//!
//! The largest real roots of the two characteristic polynomials are located
//! as roots of one shared squarefree polynomial; the comparison then reduces
//! to comparing root ranks, which Sturm counts decide exactly.

use super::{charpoly, isolate_max_real_root, LinalgError, SturmChain};
use crate::poly::Poly;
use crate::{Int, IntMatrix, RatPoly};

#[derive(Debug, Clone)]
pub struct PerronComparison {
    pub equal: bool,
    /// Squarefree part of the product of the two characteristic polynomials.
    pub shared_poly: RatPoly,
    /// 1-based rank of each Perron root among the real roots of
    /// `shared_poly`, in ascending order.
    pub rank_a: usize,
    pub rank_b: usize,
    pub interval_a: (crate::Rat, crate::Rat),
    pub interval_b: (crate::Rat, crate::Rat),
    /// Total bisections spent across both isolations and refinements.
    pub bisections: usize,
}

/// Decides whether the spectral radii of `a` and `b` coincide, exactly.
pub fn perron_equal(a: &IntMatrix, b: &IntMatrix) -> Result<bool, LinalgError> {
    Ok(compare_perron(a, b)?.equal)
}

pub fn compare_perron(a: &IntMatrix, b: &IntMatrix) -> Result<PerronComparison, LinalgError> {
    let pa = perron_charpoly(a)?;
    let pb = perron_charpoly(b)?;
    let mut ia = isolate_max_real_root(&pa)?;
    let mut ib = isolate_max_real_root(&pb)?;
    let q = pa.mul(&pb).squarefree_part();
    let qchain = SturmChain::new(&q);
    while qchain.count_in(&ia.lo, &ia.hi) > 1 {
        ia.bisect()?;
    }
    while qchain.count_in(&ib.lo, &ib.hi) > 1 {
        ib.bisect()?;
    }
    let bound = qchain.cauchy_bound();
    let rank_a = qchain.count_in(&-bound.clone(), &ia.hi);
    let rank_b = qchain.count_in(&-bound, &ib.hi);
    Ok(PerronComparison {
        equal: rank_a == rank_b,
        shared_poly: q,
        rank_a,
        rank_b,
        interval_a: (ia.lo.clone(), ia.hi.clone()),
        interval_b: (ib.lo.clone(), ib.hi.clone()),
        bisections: ia.bisections() + ib.bisections(),
    })
}

/// Characteristic polynomial after checking the Perron preconditions:
/// square, nonnegative, and not nilpotent.
fn perron_charpoly(a: &IntMatrix) -> Result<RatPoly, LinalgError> {
    if !a.is_nonnegative() {
        return Err(LinalgError::NotNonnegative);
    }
    let p = charpoly(a)?;
    if p == Poly::monomial(Int::from(1), a.rows()) {
        return Err(LinalgError::ZeroSpectralRadius);
    }
    Ok(p.to_rational())
}
