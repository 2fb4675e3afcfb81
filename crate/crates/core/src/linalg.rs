//! Dense exact linear algebra over [`Scalar`].

use crate::scalar::Scalar;

/// Row-major dense matrix.
pub type Matrix = Vec<Vec<Scalar>>;

pub fn zeros(rows: usize, cols: usize) -> Matrix {
    vec![vec![Scalar::zero(); cols]; rows]
}

pub fn identity(n: usize) -> Matrix {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Scalar::one();
    }
    m
}

pub fn is_square(m: &Matrix, n: usize) -> bool {
    m.len() == n && m.iter().all(|r| r.len() == n)
}

pub fn transpose(m: &Matrix) -> Matrix {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = Scalar::zero();
                    for k in 0..inner {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            acc += &(&row[k] * &b[k][j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Determinant by Gaussian elimination.
pub fn det(m: &Matrix) -> Scalar {
    let n = m.len();
    let mut a = m.clone();
    let mut result = Scalar::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Scalar::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            result = -result;
        }
        let p = a[col][col].clone();
        result = &result * &p;
        let p_inv = p.inv().expect("nonzero pivot");
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] * &p_inv;
            for c in col..n {
                if a[col][c].is_zero() {
                    continue;
                }
                let t = &factor * &a[col][c];
                a[r][c] -= &t;
            }
        }
    }
    result
}

/// Inverse of a square matrix, or `None` if it is singular.
pub fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<Scalar> = (0..n).map(|i| if i == j { Scalar::one() } else { Scalar::zero() }).collect();
        match solve(m, &e) {
            Solution::Unique(x) => cols.push(x),
            _ => return None,
        }
    }
    Some(transpose(&cols))
}

/// Outcome of solving `A·x = b` exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Scalar>),
    Inconsistent,
    Underdetermined,
}

/// Solve a possibly over-determined system `A·x = b` by row reduction.
pub fn solve(a: &Matrix, b: &[Scalar]) -> Solution {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(r, v)| {
            let mut row = r.clone();
            row.push(v.clone());
            row
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(p, row);
        let inv = aug[row][col].inv().expect("nonzero pivot");
        for c in col..=cols {
            aug[row][c] = &aug[row][c] * &inv;
        }
        for r in 0..rows {
            if r == row || aug[r][col].is_zero() {
                continue;
            }
            let factor = aug[r][col].clone();
            for c in col..=cols {
                if aug[row][c].is_zero() {
                    continue;
                }
                let t = &factor * &aug[row][c];
                aug[r][c] -= &t;
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    if aug[row..].iter().any(|r| !r[cols].is_zero()) {
        return Solution::Inconsistent;
    }
    if pivot_cols.len() < cols {
        return Solution::Underdetermined;
    }
    Solution::Unique((0..cols).map(|i| aug[i][cols].clone()).collect())
}
