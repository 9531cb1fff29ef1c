//! Exact matrix rank over the rationals.
//!
//! Sparse elimination first consumes pivots equal to `+-1`, which keeps every
//! entry integral. Whatever is left goes through fraction-free (Bareiss)
//! elimination in `i128` with checked arithmetic, restarting over `BigInt` if
//! an intermediate entry overflows.

use num_bigint::BigInt;
use num_traits::{CheckedMul, CheckedSub, One, Zero};

type SparseRow = Vec<(usize, i64)>;

/// Rank of an integer matrix given as rows.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let sparse: Vec<SparseRow> =
        rows.iter().map(|r| r.iter().enumerate().filter(|(_, &x)| x != 0).map(|(j, &x)| (j, x)).collect()).collect();
    match unit_pivots(sparse) {
        Some((r, rest)) => r + dense_rank(&to_dense(&rest)),
        None => dense_rank(rows),
    }
}

/// Eliminates with `+-1` pivots, shortest rows first. Returns the number of
/// pivots and the remaining nonzero rows, or `None` on overflow.
fn unit_pivots(mut rows: Vec<SparseRow>) -> Option<(usize, Vec<SparseRow>)> {
    rows.retain(|r| !r.is_empty());
    let mut count = 0;
    loop {
        let pick = rows
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.iter().find(|e| e.1.abs() == 1).map(|&(c, v)| (r.len(), i, c, v)))
            .min();
        let Some((_, i, c, v)) = pick else { break };
        let pivot = rows.swap_remove(i);
        count += 1;
        for row in rows.iter_mut() {
            let Ok(at) = row.binary_search_by_key(&c, |e| e.0) else { continue };
            // row -= (row[c] / v) * pivot, with 1/v = v
            let f = row[at].1.checked_mul(v)?;
            *row = axpy(row, &pivot, f)?;
        }
        rows.retain(|r| !r.is_empty());
    }
    Some((count, rows))
}

/// `a - f * b` on sorted sparse rows.
fn axpy(a: &SparseRow, b: &SparseRow, f: i64) -> Option<SparseRow> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let (col, val) = match (a.get(i), b.get(j)) {
            (Some(&(ca, va)), Some(&(cb, _))) if ca < cb => {
                i += 1;
                (ca, va)
            }
            (Some(&(ca, va)), Some(&(cb, vb))) if ca == cb => {
                i += 1;
                j += 1;
                (ca, va.checked_sub(f.checked_mul(vb)?)?)
            }
            (_, Some(&(cb, vb))) => {
                j += 1;
                (cb, f.checked_mul(vb)?.checked_neg()?)
            }
            (Some(&(ca, va)), None) => {
                i += 1;
                (ca, va)
            }
            (None, None) => unreachable!(),
        };
        if val != 0 {
            out.push((col, val));
        }
    }
    Some(out)
}

fn to_dense(rows: &[SparseRow]) -> Vec<Vec<i64>> {
    let mut cols: Vec<usize> = rows.iter().flatten().map(|e| e.0).collect();
    cols.sort_unstable();
    cols.dedup();
    rows.iter()
        .map(|r| {
            let mut d = vec![0i64; cols.len()];
            for &(c, v) in r {
                d[cols.binary_search(&c).expect("collected")] = v;
            }
            d
        })
        .collect()
}

fn dense_rank(rows: &[Vec<i64>]) -> usize {
    let small: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    if let Some(r) = bareiss_rank(small) {
        return r;
    }
    let big: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    bareiss_rank(big).expect("BigInt arithmetic cannot overflow")
}

/// Bareiss elimination with row pivoting; `None` on overflow.
fn bareiss_rank<T>(mut m: Vec<Vec<T>>) -> Option<usize>
where
    T: Clone + Zero + One + CheckedMul + CheckedSub + std::ops::Div<Output = T>,
{
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = T::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let (head, tail) = m.split_at_mut(r + 1);
        let pivot_row = &head[r];
        for row in tail.iter_mut() {
            let factor = row[c].clone();
            for j in c..cols {
                // (pivot * row_j - factor * pivot_row_j) / prev divides exactly
                let a = pivot_row[c].checked_mul(&row[j])?;
                let b = factor.checked_mul(&pivot_row[j])?;
                row[j] = a.checked_sub(&b)? / prev.clone();
            }
        }
        prev = head[r][c].clone();
        r += 1;
    }
    Some(r)
}

#[cfg(test)]
pub(crate) fn rank_dense(rows: &[Vec<i64>]) -> usize {
    dense_rank(rows)
}

#[cfg(test)]
pub(crate) fn rank_bigint(rows: &[Vec<i64>]) -> usize {
    let big: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    bareiss_rank(big).unwrap()
}
