//! Exact Gaussian elimination over the rationals.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Reduces `rows` to row echelon form in place and returns the rank.
pub fn row_reduce(rows: &mut [Vec<BigRational>]) -> usize {
    let row_n = rows.len();
    let col_n = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..col_n {
        if rank == row_n {
            break;
        }
        let Some(pivot) = (rank..row_n).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &pivot_row[col];
            for c in col..col_n {
                let delta = &factor * &pivot_row[c];
                row[c] -= delta;
            }
        }
        rank += 1;
    }
    rank
}

/// Exact rank of a rational matrix.
pub fn rank(matrix: &[Vec<BigRational>]) -> usize {
    let mut rows = matrix.to_vec();
    row_reduce(&mut rows)
}

/// Solves the square system `a * x = b` exactly.
pub fn solve(a: &[Vec<BigRational>], b: &[BigRational]) -> Result<Vec<BigRational>> {
    let n = a.len();
    if b.len() != n || a.iter().any(|r| r.len() != n) {
        return Err(Error::BadVectorLength { expected: n, got: b.len() });
    }
    let mut aug: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero()).ok_or(Error::SingularSystem)?;
        aug.swap(col, pivot);
        let inv = BigRational::one() / &aug[col][col];
        for c in col..=n {
            aug[col][c] = &aug[col][c] * &inv;
        }
        for r in 0..n {
            if r == col || aug[r][col].is_zero() {
                continue;
            }
            let factor = aug[r][col].clone();
            for c in col..=n {
                let delta = &factor * &aug[col][c];
                aug[r][c] -= delta;
            }
        }
    }
    Ok(aug.into_iter().map(|mut r| r.pop().expect("augmented column")).collect())
}
