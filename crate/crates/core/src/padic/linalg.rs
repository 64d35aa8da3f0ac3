//! Dense linear algebra over `F_p` and `Z/p^k`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::exact::int::inv_mod;

fn inv_p(a: u64, p: u64) -> u64 {
    let mut r = 1u64;
    let mut b = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    r
}

pub(crate) fn mulp(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Reduces `rows` to reduced row echelon form, dropping zero rows.
/// Returns the pivot column of each remaining row.
pub(crate) fn rref(rows: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(k) = (r..rows.len()).find(|&k| rows[k][c] != 0) else { continue };
        rows.swap(r, k);
        let iv = inv_p(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = mulp(*x, iv, p);
        }
        let pivot_row = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k != r && row[c] != 0 {
                let m = row[c];
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + p - mulp(m, *y, p)) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{x : A x = 0}` for `A` with `ncols` columns.
pub(crate) fn nullspace(a: &[Vec<u64>], ncols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut rows: Vec<Vec<u64>> = a.to_vec();
    let pivots = if rows.is_empty() { Vec::new() } else { rref(&mut rows, p) };
    let mut out = Vec::new();
    for free in 0..ncols {
        if pivots.contains(&free) {
            continue;
        }
        let mut x = vec![0u64; ncols];
        x[free] = 1;
        for (row, &pc) in rows.iter().zip(&pivots) {
            x[pc] = (p - row[free]) % p;
        }
        out.push(x);
    }
    out
}

/// Basis of `{z : z A = 0}` for an `m × n` matrix given by rows.
pub(crate) fn left_kernel(a: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let m = a.len();
    if m == 0 {
        return Vec::new();
    }
    let n = a[0].len();
    let t: Vec<Vec<u64>> = (0..n).map(|j| (0..m).map(|i| a[i][j]).collect()).collect();
    nullspace(&t, m, p)
}

/// Rank of a set of vectors over `F_p`.
pub(crate) fn rank(rows: &[Vec<u64>], p: u64) -> usize {
    let mut r = rows.to_vec();
    if r.is_empty() {
        return 0;
    }
    rref(&mut r, p).len()
}

/// Whether `v` lies in the row span of an RREF basis with the given pivots.
pub(crate) fn in_span(basis: &[Vec<u64>], pivots: &[usize], v: &[u64], p: u64) -> bool {
    let mut w = v.to_vec();
    for (row, &c) in basis.iter().zip(pivots) {
        let m = w[c];
        if m != 0 {
            for (x, y) in w.iter_mut().zip(row) {
                *x = (*x + p - mulp(m, *y, p)) % p;
            }
        }
    }
    w.iter().all(|&x| x == 0)
}

pub(crate) fn reduce_vec(v: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    v.iter().map(|x| x.mod_floor(&pb).to_u64().unwrap()).collect()
}

/// Inverse of a square matrix over `Z/m` (`m = p^k`); `None` if singular mod `p`.
pub(crate) fn inverse_mod(a: &[Vec<BigInt>], p: u64, m: &BigInt) -> Option<Vec<Vec<BigInt>>> {
    let n = a.len();
    let pb = BigInt::from(p);
    let mut aug: Vec<Vec<BigInt>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigInt> = row.iter().map(|x| x.mod_floor(m)).collect();
            r.extend((0..n).map(|j| if i == j { BigInt::from(1) } else { BigInt::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let k = (c..n).find(|&k| !aug[k][c].mod_floor(&pb).is_zero())?;
        aug.swap(c, k);
        let iv = inv_mod(&aug[c][c], m);
        for x in aug[c].iter_mut() {
            *x = (&*x * &iv).mod_floor(m);
        }
        let prow = aug[c].clone();
        for (k, row) in aug.iter_mut().enumerate() {
            if k != c && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x = (&*x - &f * y).mod_floor(m);
                }
            }
        }
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}
