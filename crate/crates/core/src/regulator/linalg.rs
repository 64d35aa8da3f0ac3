//! Dense matrices over Q, just enough for fixed spaces and Gram
//! determinants.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::exact::Rational;

pub type Matrix = Vec<Vec<Rational>>;

pub fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect()
}

pub fn zeros(r: usize, c: usize) -> Matrix {
    vec![vec![Rational::zero(); c]; r]
}

pub fn cols(a: &Matrix) -> usize {
    a.first().map_or(0, Vec::len)
}

pub fn transpose(a: &Matrix) -> Matrix {
    (0..cols(a)).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

pub fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    let (n, m) = (a.len(), cols(b));
    let mut c = zeros(n, m);
    for i in 0..n {
        for (k, aik) in a[i].iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for j in 0..m {
                c[i][j] += aik * &b[k][j];
            }
        }
    }
    c
}

pub fn add(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter().zip(b).map(|(x, y)| x.iter().zip(y).map(|(u, v)| u + v).collect()).collect()
}

pub fn sub(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter().zip(b).map(|(x, y)| x.iter().zip(y).map(|(u, v)| u - v).collect()).collect()
}

pub fn scale(a: &Matrix, s: &Rational) -> Matrix {
    a.iter().map(|row| row.iter().map(|x| x * s).collect()).collect()
}

/// Reduced row echelon form and its pivot columns.
fn rref(mut a: Matrix) -> (Matrix, Vec<usize>) {
    let (n, m) = (a.len(), cols(&a));
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m {
        let Some(pr) = (row..n).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(row, pr);
        let inv = Rational::one() / &a[row][col];
        for x in a[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..m {
                    let t = &f * &a[row][c];
                    a[r][c] -= t;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == n {
            break;
        }
    }
    (a, pivots)
}

/// A basis of `{x : Ax = 0}` as the columns of an `m × k` matrix.
pub fn kernel(a: &Matrix, m: usize) -> Matrix {
    let (r, pivots) = rref(a.clone());
    let free: Vec<usize> = (0..m).filter(|c| !pivots.contains(c)).collect();
    let mut basis = zeros(m, free.len());
    for (k, &f) in free.iter().enumerate() {
        basis[f][k] = Rational::one();
        for (i, &p) in pivots.iter().enumerate() {
            basis[p][k] = -r[i][f].clone();
        }
    }
    basis
}

pub fn determinant(a: &Matrix) -> Rational {
    let n = a.len();
    let mut a = a.clone();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pr) = (col..n).find(|&r| !a[r][col].is_zero()) else { return Rational::zero() };
        if pr != col {
            a.swap(pr, col);
            det = -det;
        }
        det *= &a[col][col];
        let inv = Rational::one() / &a[col][col];
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] * &inv;
            for c in col..n {
                let t = &f * &a[col][c];
                a[r][c] -= t;
            }
        }
    }
    det
}

/// Block-diagonal sum.
pub fn block(a: &Matrix, b: &Matrix) -> Matrix {
    let (n, m) = (a.len(), b.len());
    let mut c = zeros(n + m, n + m);
    for i in 0..n {
        c[i][..n].clone_from_slice(&a[i]);
    }
    for i in 0..m {
        c[n + i][n..].clone_from_slice(&b[i]);
    }
    c
}
