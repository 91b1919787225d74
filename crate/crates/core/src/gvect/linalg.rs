//! Exact Gaussian elimination over `CycNum` on row-major flat matrices.

use crate::cyclofield::CycNum;

/// Reduced row-echelon form; returns the reduced matrix and its pivot columns.
/// Pivots are the first nonzero entry in each column (deterministic).
pub fn rref(a: &[CycNum], rows: usize, cols: usize) -> (Vec<CycNum>, Vec<usize>) {
    let mut m = a.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i * cols + c].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                m.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = m[r * cols + c].inv().expect("pivot is nonzero");
        for j in c..cols {
            m[r * cols + j] = m[r * cols + j].mul(&inv);
        }
        let pivot_row: Vec<CycNum> = m[r * cols..(r + 1) * cols].to_vec();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = m[i * cols + c].clone();
            if f.is_zero() {
                continue;
            }
            let nf = f.neg();
            for j in c..cols {
                if !pivot_row[j].is_zero() {
                    m[i * cols + j].mul_add_assign(&nf, &pivot_row[j]);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

pub fn rank(a: &[CycNum], rows: usize, cols: usize) -> usize {
    rref(a, rows, cols).1.len()
}

/// Basis of the right kernel `{x : A x = 0}`, one vector per free column, in column order.
pub fn kernel(a: &[CycNum], rows: usize, cols: usize) -> Vec<Vec<CycNum>> {
    let (m, pivots) = rref(a, rows, cols);
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![CycNum::zero(); cols];
        v[free] = CycNum::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = m[r * cols + free].neg();
        }
        out.push(v);
    }
    out
}

/// Inverse of a square matrix, `None` if singular.
pub fn inverse(a: &[CycNum], rows: usize, cols: usize) -> Option<Vec<CycNum>> {
    if rows != cols {
        return None;
    }
    let n = rows;
    let w = 2 * n;
    let mut aug = vec![CycNum::zero(); n * w];
    for i in 0..n {
        for j in 0..n {
            aug[i * w + j] = a[i * n + j].clone();
        }
        aug[i * w + n + i] = CycNum::one();
    }
    let (m, pivots) = rref(&aug, n, w);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        out.extend_from_slice(&m[i * w + n..(i + 1) * w]);
    }
    Some(out)
}

/// One solution of `A x = b`, or `None` if inconsistent.
pub fn solve(a: &[CycNum], rows: usize, cols: usize, b: &[CycNum]) -> Option<Vec<CycNum>> {
    let w = cols + 1;
    let mut aug = vec![CycNum::zero(); rows * w];
    for i in 0..rows {
        for j in 0..cols {
            aug[i * w + j] = a[i * cols + j].clone();
        }
        aug[i * w + cols] = b[i].clone();
    }
    let (m, pivots) = rref(&aug, rows, w);
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![CycNum::zero(); cols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = m[r * w + cols].clone();
    }
    Some(x)
}
