//! Sturm sequences and certified isolation of the largest real root.
//!
//! Sign-variation counts give the exact number of distinct real roots of a
//! squarefree polynomial in any half-open rational interval `(lo, hi]`, so
//! every interval produced here is a certificate, not an estimate.

use num_traits::{One, Signed, Zero};

use super::LinalgError;
use crate::{Rat, RatPoly};

/// Hard cap on bisection doublings before giving up.
pub const REFINEMENT_CAP: usize = 256;

/// Sturm chain of a squarefree polynomial.
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<RatPoly>,
}

impl SturmChain {
    pub fn new(squarefree: &RatPoly) -> Self {
        assert!(!squarefree.is_zero());
        let mut chain = vec![normalize(squarefree.clone())];
        let d = squarefree.derivative();
        if !d.is_zero() {
            chain.push(normalize(d));
            loop {
                let n = chain.len();
                let r = chain[n - 2].rem(&chain[n - 1]).neg();
                if r.is_zero() {
                    break;
                }
                chain.push(normalize(r));
            }
        }
        SturmChain { chain }
    }

    pub fn poly(&self) -> &RatPoly {
        &self.chain[0]
    }

    fn variations_at(&self, x: &Rat) -> usize {
        let signs: Vec<bool> = self
            .chain
            .iter()
            .map(|p| p.eval(x))
            .filter(|v| !v.is_zero())
            .map(|v| v.is_positive())
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Number of distinct real roots in `(lo, hi]`.
    pub fn count_in(&self, lo: &Rat, hi: &Rat) -> usize {
        debug_assert!(lo < hi);
        self.variations_at(lo) - self.variations_at(hi)
    }

    /// A bound `M` with every real root strictly inside `(-M, M)`.
    pub fn cauchy_bound(&self) -> Rat {
        cauchy_bound(&self.chain[0])
    }
}

/// Positive-scalar normalization keeps coefficients small without touching
/// signs anywhere on the line.
fn normalize(p: RatPoly) -> RatPoly {
    match p.leading() {
        None => p,
        Some(l) => {
            let inv = Rat::one() / l.abs();
            p.scale(&inv)
        }
    }
}

pub fn cauchy_bound(p: &RatPoly) -> Rat {
    let Some(d) = p.degree() else {
        return Rat::one();
    };
    let lead = p.leading().unwrap().abs();
    let mut max = Rat::zero();
    for k in 0..d {
        let v = p.coeff(k).abs() / lead.clone();
        if v > max {
            max = v;
        }
    }
    max + Rat::one()
}

/// A half-open interval `(lo, hi]` certified by Sturm counts to contain
/// exactly one real root of `poly` (the squarefree part of the input).
#[derive(Debug, Clone)]
pub struct RootInterval {
    pub lo: Rat,
    pub hi: Rat,
    pub poly: RatPoly,
    chain: SturmChain,
    bisections: usize,
}

impl RootInterval {
    pub fn width(&self) -> Rat {
        self.hi.clone() - self.lo.clone()
    }

    /// Total bisection steps spent on this interval so far.
    pub fn bisections(&self) -> usize {
        self.bisections
    }

    pub fn chain(&self) -> &SturmChain {
        &self.chain
    }

    /// Halves the interval, keeping the unique root inside.
    pub fn bisect(&mut self) -> Result<(), LinalgError> {
        if self.bisections >= REFINEMENT_CAP {
            return Err(LinalgError::RefinementBudget);
        }
        let mid = (self.lo.clone() + self.hi.clone()) / crate::rat(2);
        if self.chain.count_in(&mid, &self.hi) == 1 {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
        self.bisections += 1;
        Ok(())
    }

    /// Whether the interval contains a rational point equal to the root.
    /// Only used by tests to pin trivial roots.
    pub fn contains(&self, x: &Rat) -> bool {
        *x > self.lo && *x <= self.hi
    }
}

/// Isolates the largest real root of the squarefree part of `p`.
pub fn isolate_max_real_root(p: &RatPoly) -> Result<RootInterval, LinalgError> {
    assert!(!p.is_zero(), "root isolation needs a nonzero polynomial");
    let q = p.squarefree_part();
    if q.degree().unwrap_or(0) == 0 {
        return Err(LinalgError::NoRealRoot);
    }
    let chain = SturmChain::new(&q);
    let bound = chain.cauchy_bound();
    let mut lo = -bound.clone();
    let mut hi = bound;
    let total = chain.count_in(&lo, &hi);
    if total == 0 {
        return Err(LinalgError::NoRealRoot);
    }
    let mut bisections = 0usize;
    while chain.count_in(&lo, &hi) > 1 {
        if bisections >= REFINEMENT_CAP {
            return Err(LinalgError::RefinementBudget);
        }
        let mid = (lo.clone() + hi.clone()) / crate::rat(2);
        if chain.count_in(&mid, &hi) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
        bisections += 1;
    }
    Ok(RootInterval {
        lo,
        hi,
        poly: q,
        chain,
        bisections,
    })
}

/// Shrinks the interval below the requested width; returns the number of
/// bisections spent.
pub fn refine_to_width(iv: &mut RootInterval, width: &Rat) -> Result<usize, LinalgError> {
    let start = iv.bisections;
    while iv.width() > *width {
        iv.bisect()?;
    }
    Ok(iv.bisections - start)
}
