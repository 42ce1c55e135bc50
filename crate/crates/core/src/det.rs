//! Exact determinants over any [`Coefficient`] ring.

use crate::ring::Coefficient;

/// Matrices up to this size use cofactor expansion.
pub const COFACTOR_MAX: usize = 6;

/// Determinant of a square matrix given row-major. `one` supplies the
/// ring identity (the value of the empty determinant).
///
/// Small matrices are expanded by cofactors. Larger ones use Bareiss
/// fraction-free elimination when the ring can divide, and otherwise a
/// division-free Laplace expansion memoized over column subsets.
pub fn determinant<R: Coefficient>(m: &[Vec<R>], one: &R) -> R {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "matrix is not square");
    if n <= COFACTOR_MAX {
        return cofactor(m, one);
    }
    bareiss(m, one).unwrap_or_else(|| subset_laplace(m, one))
}

pub fn cofactor<R: Coefficient>(m: &[Vec<R>], one: &R) -> R {
    let cols: Vec<usize> = (0..m.len()).collect();
    cofactor_rec(m, 0, &cols, one)
}

fn cofactor_rec<R: Coefficient>(m: &[Vec<R>], row: usize, cols: &[usize], one: &R) -> R {
    match cols.len() {
        0 => one.clone(),
        1 => m[row][cols[0]].clone(),
        _ => {
            let mut acc = one.zero_like();
            for (k, &c) in cols.iter().enumerate() {
                let entry = &m[row][c];
                if entry.is_zero_value() {
                    continue;
                }
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let term = entry.times(&cofactor_rec(m, row + 1, &rest, one));
                acc = if k % 2 == 0 {
                    acc.plus(&term)
                } else {
                    acc.minus(&term)
                };
            }
            acc
        }
    }
}

/// Returns `None` as soon as a division is not available in the ring.
pub fn bareiss<R: Coefficient>(m: &[Vec<R>], one: &R) -> Option<R> {
    let n = m.len();
    if n == 0 {
        return Some(one.clone());
    }
    let mut a: Vec<Vec<R>> = m.to_vec();
    let mut prev = one.clone();
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero_value() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero_value()) else {
                return Some(one.zero_like());
            };
            a.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let cross = a[i][j].times(&a[k][k]).minus(&a[i][k].times(&a[k][j]));
                a[i][j] = cross.exact_div(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Some(if negate {
        det.zero_like().minus(&det)
    } else {
        det
    })
}

/// Row-by-row Laplace expansion, storing the minor for every set of used
/// columns. `O(n 2^n)` ring operations, no division.
pub fn subset_laplace<R: Coefficient>(m: &[Vec<R>], one: &R) -> R {
    let n = m.len();
    assert!(
        n < usize::BITS as usize,
        "matrix too large for subset expansion"
    );
    let mut minors: Vec<Option<R>> = vec![None; 1 << n];
    minors[0] = Some(one.clone());
    for mask in 0usize..(1 << n) {
        let Some(minor) = minors[mask].clone() else {
            continue;
        };
        let row = mask.count_ones() as usize;
        if row == n || minor.is_zero_value() {
            continue;
        }
        for (col, entry) in m[row].iter().enumerate() {
            if mask & (1 << col) != 0 || entry.is_zero_value() {
                continue;
            }
            // sign of moving column `col` past the used columns to its right
            let after = (mask >> col).count_ones();
            let term = minor.times(entry);
            let next = mask | (1 << col);
            let slot = minors[next].take().unwrap_or_else(|| one.zero_like());
            minors[next] = Some(if after % 2 == 0 {
                slot.plus(&term)
            } else {
                slot.minus(&term)
            });
        }
    }
    minors[(1 << n) - 1]
        .take()
        .unwrap_or_else(|| one.zero_like())
}
