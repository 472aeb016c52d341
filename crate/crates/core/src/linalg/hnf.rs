//! Hermite normal form over the integers, integer kernel bases, and exact
//! integer linear solves. Row operations are unimodular throughout, so the
//! row lattice is preserved and the reduced form is canonical.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::{Int, IntMatrix};

/// Integer row echelon on the first `limit_cols` columns using Euclidean
/// elimination. Returns the pivot columns; pivot rows are `0..pivots.len()`.
fn echelonize(rows: &mut [Vec<Int>], limit_cols: usize) -> Vec<usize> {
    let nrows = rows.len();
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..limit_cols {
        if r == nrows {
            break;
        }
        loop {
            // Smallest nonzero magnitude in column c at or below row r.
            let mut best: Option<usize> = None;
            for i in r..nrows {
                if rows[i][c].is_zero() {
                    continue;
                }
                match best {
                    None => best = Some(i),
                    Some(b) => {
                        if rows[i][c].abs() < rows[b][c].abs() {
                            best = Some(i);
                        }
                    }
                }
            }
            let Some(b) = best else { break };
            rows.swap(r, b);
            let mut reduced_all = true;
            for i in r + 1..nrows {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].div_floor(&rows[r][c]);
                if !q.is_zero() {
                    for k in 0..rows[i].len() {
                        let s = &rows[r][k] * &q;
                        rows[i][k] -= s;
                    }
                }
                if !rows[i][c].is_zero() {
                    reduced_all = false;
                }
            }
            if reduced_all {
                break;
            }
        }
        if !rows[r][c].is_zero() {
            pivots.push(c);
            r += 1;
        }
    }
    pivots
}

/// Canonicalizes an echelonized block: positive pivots, entries above each
/// pivot reduced into `[0, pivot)`.
fn reduce_above(rows: &mut [Vec<Int>], pivots: &[usize]) {
    for (i, &p) in pivots.iter().enumerate() {
        if rows[i][p].is_negative() {
            for v in rows[i].iter_mut() {
                *v = -v.clone();
            }
        }
        for up in 0..i {
            if rows[up][p].is_zero() {
                continue;
            }
            let q = rows[up][p].div_floor(&rows[i][p]);
            if q.is_zero() {
                continue;
            }
            for k in 0..rows[up].len() {
                let s = &rows[i][k] * &q;
                rows[up][k] -= s;
            }
        }
    }
}

fn to_rows(m: &IntMatrix) -> Vec<Vec<Int>> {
    m.iter_rows().map(|r| r.to_vec()).collect()
}

/// Row-style Hermite normal form: the canonical basis of the row lattice.
/// Zero rows are dropped.
pub fn hermite_normal_form(m: &IntMatrix) -> IntMatrix {
    let mut rows = to_rows(m);
    let cols = m.cols();
    let pivots = echelonize(&mut rows, cols);
    reduce_above(&mut rows, &pivots);
    rows.truncate(pivots.len());
    if rows.is_empty() {
        IntMatrix::zeros(0, cols)
    } else {
        IntMatrix::from_rows(rows)
    }
}

/// A canonical Z-basis of `{ x : a * x = 0 }`, one vector per row of the
/// result, in Hermite-reduced form.
pub fn integer_kernel_basis(a: &IntMatrix) -> Vec<Vec<Int>> {
    let m = a.rows();
    let n = a.cols();
    // Augment transpose(a) with the identity; unimodular row operations keep
    // the right block equal to the transformation applied, so rows whose left
    // block vanishes record kernel vectors.
    let mut rows: Vec<Vec<Int>> = (0..n)
        .map(|i| {
            let mut row: Vec<Int> = (0..m).map(|j| a[(j, i)].clone()).collect();
            for k in 0..n {
                row.push(if k == i { Int::from(1) } else { Int::zero() });
            }
            row
        })
        .collect();
    let pivots = echelonize(&mut rows, m);
    let kernel_rows: Vec<Vec<Int>> = rows[pivots.len()..]
        .iter()
        .map(|r| r[m..].to_vec())
        .collect();
    if kernel_rows.is_empty() {
        return Vec::new();
    }
    let canon = hermite_normal_form(&IntMatrix::from_rows(kernel_rows));
    canon.iter_rows().map(|r| r.to_vec()).collect()
}

/// Solves `a * x = b` over the integers; `None` when no integer solution
/// exists.
pub fn solve_integer(a: &IntMatrix, b: &[Int]) -> Option<Vec<Int>> {
    assert_eq!(a.rows(), b.len());
    let m = a.rows();
    let n = a.cols();
    let mut rows: Vec<Vec<Int>> = (0..n)
        .map(|i| {
            let mut row: Vec<Int> = (0..m).map(|j| a[(j, i)].clone()).collect();
            for k in 0..n {
                row.push(if k == i { Int::from(1) } else { Int::zero() });
            }
            row
        })
        .collect();
    let pivots = echelonize(&mut rows, m);
    let mut residual = b.to_vec();
    let mut x = vec![Int::zero(); n];
    for (i, &p) in pivots.iter().enumerate() {
        if residual[p].is_zero() {
            continue;
        }
        let (q, r) = residual[p].div_rem(&rows[i][p]);
        if !r.is_zero() {
            return None;
        }
        for k in 0..m {
            let s = &rows[i][k] * &q;
            residual[k] -= s;
        }
        for k in 0..n {
            let s = &rows[i][m + k] * &q;
            x[k] += s;
        }
    }
    if residual.iter().all(Zero::is_zero) {
        Some(x)
    } else {
        None
    }
}
