//! Exact dense linear algebra over the rationals.
//!
//! [`solve`] row-reduces the augmented system and returns the canonical
//! solution with every free variable set to zero. Pivot choice is the first
//! nonzero entry in each column, scanning columns left to right, so the
//! returned solution depends only on the system and on the caller's column
//! ordering. Callers exploit that: listing preferred unknowns in earlier
//! columns steers the solver toward solutions supported on them.

use crate::rational::Rational;
use num_traits::Zero;

/// Solves `a * x = b` exactly. Returns `None` when inconsistent.
///
/// `a` is a list of rows of equal length. Free variables come back as zero.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(a.len(), b.len(), "row count mismatch between matrix and rhs");
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    for row in a {
        assert_eq!(row.len(), cols, "ragged matrix");
    }

    // Augmented matrix [a | b].
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    let mut pivot_col_of_row: Vec<usize> = Vec::new();
    let mut next_row = 0;
    for col in 0..cols {
        let Some(pivot) = (next_row..rows).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(next_row, pivot);
        let inv = aug[next_row][col].recip();
        for entry in aug[next_row].iter_mut() {
            if !entry.is_zero() {
                *entry = &*entry * &inv;
            }
        }
        for r in 0..rows {
            if r == next_row || aug[r][col].is_zero() {
                continue;
            }
            let factor = std::mem::replace(&mut aug[r][col], Rational::zero());
            let (head, tail) = aug.split_at_mut(r.max(next_row));
            let (pivot_row, target_row) = if r < next_row {
                (&tail[0], &mut head[r])
            } else {
                (&head[next_row], &mut tail[0])
            };
            for c in (col + 1)..=cols {
                if !pivot_row[c].is_zero() {
                    let delta = &factor * &pivot_row[c];
                    target_row[c] = &target_row[c] - &delta;
                }
            }
        }
        pivot_col_of_row.push(col);
        next_row += 1;
        if next_row == rows {
            break;
        }
    }

    // Rows beyond the pivot rows must have zero rhs.
    for row in aug.iter().skip(next_row) {
        if !row[cols].is_zero() {
            return None;
        }
    }

    let mut x = vec![Rational::zero(); cols];
    for (r, &col) in pivot_col_of_row.iter().enumerate() {
        x[col] = aug[r][cols].clone();
    }
    Some(x)
}

/// Rank of the matrix, by the same elimination as [`solve`].
pub fn rank(a: &[Vec<Rational>]) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Rational>> = a.to_vec();
    let mut next_row = 0;
    for col in 0..cols {
        let Some(pivot) = (next_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(next_row, pivot);
        for r in (next_row + 1)..rows {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &m[next_row][col];
            for c in col..cols {
                let delta = &factor * &m[next_row][c];
                m[r][c] = &m[r][c] - &delta;
            }
        }
        next_row += 1;
        if next_row == rows {
            break;
        }
    }
    next_row
}
