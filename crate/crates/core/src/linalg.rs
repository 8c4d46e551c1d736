//! Exact Gaussian elimination over the rationals.

use num_rational::BigRational;
use num_traits::Zero;

/// Finds `x` with `sum_j x[j] * columns[j] == target`, or `None` when the
/// target is outside the column span. Free variables are set to zero.
pub fn solve(columns: &[Vec<BigRational>], target: &[BigRational]) -> Option<Vec<BigRational>> {
    let n_rows = target.len();
    let n_cols = columns.len();
    debug_assert!(columns.iter().all(|c| c.len() == n_rows));
    // augmented row-major matrix
    let mut m: Vec<Vec<BigRational>> = (0..n_rows)
        .map(|r| {
            let mut row: Vec<BigRational> = columns.iter().map(|c| c[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n_cols {
        let Some(p) = (row..n_rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n_rows {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..=n_cols {
                    let delta = &f * &m[row][c];
                    m[r][c] -= delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == n_rows {
            break;
        }
    }
    if m[row..].iter().any(|r| !r[n_cols].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); n_cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][n_cols].clone();
    }
    Some(x)
}

/// Determinant of a square matrix.
pub fn determinant(matrix: &[Vec<BigRational>]) -> BigRational {
    let n = matrix.len();
    let mut m = matrix.to_vec();
    let mut det = BigRational::from_integer(1.into());
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        det *= &m[col][col];
        let inv = m[col][col].recip();
        for r in (col + 1)..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] * &inv;
            for c in col..n {
                let delta = &f * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    det
}

/// Rank of a list of row vectors.
pub fn rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m = rows.to_vec();
    let n_cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..n_cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][col].recip();
        for i in (r + 1)..m.len() {
            if m[i][col].is_zero() {
                continue;
            }
            let f = &m[i][col] * &inv;
            for c in col..n_cols {
                let delta = &f * &m[r][c];
                m[i][c] -= delta;
            }
        }
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn v(x: &[i64]) -> Vec<BigRational> {
        x.iter().map(|&a| int(a)).collect()
    }

    #[test]
    fn solves_and_rejects() {
        let cols = vec![v(&[1, 0, 1]), v(&[0, 2, 2])];
        assert_eq!(solve(&cols, &v(&[3, 4, 7])), Some(v(&[3, 2])));
        assert_eq!(solve(&cols, &v(&[1, 1, 1])), None);
        assert_eq!(solve(&cols, &v(&[1, 1, 2])), Some(vec![int(1), ratio(1, 2)]));
    }

    #[test]
    fn dependent_columns() {
        let cols = vec![v(&[1, 1]), v(&[2, 2])];
        assert_eq!(solve(&cols, &v(&[3, 3])), Some(v(&[3, 0])));
    }

    #[test]
    fn determinants_and_rank() {
        assert_eq!(determinant(&[v(&[2, 1]), v(&[7, 4])]), int(1));
        assert_eq!(determinant(&[v(&[0, 1]), v(&[1, 0])]), int(-1));
        assert_eq!(determinant(&[v(&[1, 2]), v(&[2, 4])]), int(0));
        assert_eq!(rank(&[v(&[1, 2, 3]), v(&[2, 4, 6]), v(&[0, 0, 1])]), 2);
    }
}
