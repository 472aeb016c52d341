//! Eventual range of an integer matrix, the invertible part obtained by
//! restriction, and the rational canonical (Frobenius) form used as an
//! exact similarity invariant in place of a Jordan form.

use num_traits::{One, Zero};

use super::{charpoly, LinalgError};
use crate::poly::Poly;
use crate::{IntMatrix, Rat, RatMatrix, RatPoly};

/// The intersection of the column spaces of all powers of `a`, together
/// with the restriction of `a` to it.
#[derive(Debug, Clone, PartialEq)]
pub struct EventualRange {
    /// r x d matrix whose columns are the canonical basis of the range.
    pub basis: RatMatrix,
    /// d x d matrix of the restriction; always invertible.
    pub a_times: RatMatrix,
    /// Rational canonical form of `a_times`: a complete similarity invariant.
    pub rcf: RatMatrix,
}

impl EventualRange {
    pub fn dim(&self) -> usize {
        self.a_times.rows()
    }
}

/// Computes the eventual range `∩_k a^k Q^r`; the intersection stabilizes by
/// `k = r`. The basis is the reduced column echelon form of `a^r`, so the
/// output is canonical.
pub fn eventual_range(a: &IntMatrix) -> Result<EventualRange, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let r = a.rows();
    let a_rat: RatMatrix = a.map(|x| Rat::from_integer(x.clone()));
    let power = a_rat.pow(r as u32);
    let mut echelon = power.transpose();
    let pivots = echelon.rref();
    let d = pivots.len();
    let basis = RatMatrix::from_fn(r, d, |row, col| echelon[(col, row)].clone());
    let a_times = if d == 0 {
        RatMatrix::zeros(0, 0)
    } else {
        let image = a_rat.mul(&basis);
        basis
            .solve(&image)
            .expect("a maps its eventual range into itself")
    };
    let rcf = rational_canonical_form(&a_times);
    Ok(EventualRange { basis, a_times, rcf })
}

/// Rational canonical form: companion blocks of the nonconstant invariant
/// factors of `tI - m`, in divisibility order. Two rational matrices are
/// similar over any extension field iff their forms are equal.
pub fn rational_canonical_form(m: &RatMatrix) -> RatMatrix {
    assert!(m.is_square());
    let n = m.rows();
    if n == 0 {
        return RatMatrix::zeros(0, 0);
    }
    let mut work: Vec<Vec<RatPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let diag = if i == j { Rat::one() } else { Rat::zero() };
                    Poly::new(vec![-m[(i, j)].clone(), diag])
                })
                .collect()
        })
        .collect();
    smith_normal_form_poly(&mut work);
    let factors: Vec<RatPoly> = (0..n)
        .map(|i| work[i][i].monic())
        .filter(|p| p.degree().unwrap_or(0) >= 1)
        .collect();
    let total: usize = factors.iter().map(|p| p.degree().unwrap()).sum();
    debug_assert_eq!(total, n, "invariant factor degrees must sum to n");
    let mut out = RatMatrix::zeros(n, n);
    let mut offset = 0usize;
    for p in &factors {
        let e = p.degree().unwrap();
        for i in 0..e {
            if i + 1 < e {
                out[(offset + i + 1, offset + i)] = Rat::one();
            }
            out[(offset + i, offset + e - 1)] = -p.coeff(i);
        }
        offset += e;
    }
    out
}

/// Smith normal form over Q[t] by Euclidean elimination on degrees.
/// Afterwards `work` is diagonal with each entry dividing the next.
fn smith_normal_form_poly(work: &mut [Vec<RatPoly>]) {
    let n = work.len();
    for k in 0..n {
        'pivot: loop {
            let mut best: Option<(usize, usize)> = None;
            for i in k..n {
                for j in k..n {
                    if work[i][j].is_zero() {
                        continue;
                    }
                    match best {
                        None => best = Some((i, j)),
                        Some((bi, bj)) => {
                            if work[i][j].degree() < work[bi][bj].degree() {
                                best = Some((i, j));
                            }
                        }
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            work.swap(k, bi);
            for row in work.iter_mut() {
                row.swap(k, bj);
            }
            // Reduce column k and row k modulo the pivot.
            let mut clean = true;
            for i in k + 1..n {
                if work[i][k].is_zero() {
                    continue;
                }
                let (q, _) = work[i][k].div_rem(&work[k][k]);
                for j in k..n {
                    let sub = q.mul(&work[k][j]);
                    let reduced = work[i][j].sub(&sub);
                    work[i][j] = reduced;
                }
                if !work[i][k].is_zero() {
                    clean = false;
                }
            }
            for j in k + 1..n {
                if work[k][j].is_zero() {
                    continue;
                }
                let (q, _) = work[k][j].div_rem(&work[k][k]);
                for i in k..n {
                    let sub = q.mul(&work[i][k]);
                    let reduced = work[i][j].sub(&sub);
                    work[i][j] = reduced;
                }
                if !work[k][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue 'pivot;
            }
            // Divisibility fix-up: fold in any entry the pivot misses.
            for i in k + 1..n {
                for j in k + 1..n {
                    if !work[i][j].rem(&work[k][k]).is_zero() {
                        for col in k..n {
                            let add = work[i][col].clone();
                            let folded = work[k][col].add(&add);
                            work[k][col] = folded;
                        }
                        continue 'pivot;
                    }
                }
            }
            break;
        }
    }
}

/// Identity used as a cross-check: the characteristic polynomial of the
/// invertible part times `t^(r-d)` recovers the full characteristic
/// polynomial.
pub fn charpoly_splits(a: &IntMatrix) -> Result<bool, LinalgError> {
    let er = eventual_range(a)?;
    let full = charpoly(a)?.to_rational();
    let restricted = charpoly_rational(&er.a_times);
    let t_power = Poly::monomial(Rat::one(), a.rows() - er.dim());
    Ok(restricted.mul(&t_power) == full)
}

/// Characteristic polynomial of a rational matrix via Faddeev–LeVerrier.
pub fn charpoly_rational(m: &RatMatrix) -> RatPoly {
    assert!(m.is_square());
    let n = m.rows();
    let mut coeffs = vec![Rat::zero(); n + 1];
    coeffs[n] = Rat::one();
    if n == 0 {
        return Poly::new(coeffs);
    }
    let mut work = m.clone();
    let mut c = -work.trace();
    coeffs[n - 1] = c.clone();
    for k in 2..=n {
        let shifted = work.add(&RatMatrix::identity(n).scale(&c));
        work = m.mul(&shifted);
        c = -work.trace() / Rat::from_integer(crate::int(k as i64));
        coeffs[n - k] = c.clone();
    }
    Poly::new(coeffs)
}
