//! Exact linear algebra over the rationals and the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Row-reduces `m` in place to reduced echelon form; returns pivot columns.
fn rref(m: &mut [Vec<Q>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in 0..cols {
                    let t = &f * &m[r][k];
                    m[i][k] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of a matrix given as rows.
pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Rank of a set of integer column vectors.
pub fn column_rank(columns: &[Vec<i64>]) -> usize {
    if columns.is_empty() {
        return 0;
    }
    let dim = columns[0].len();
    let rows: Vec<Vec<Q>> = (0..dim).map(|i| columns.iter().map(|c| q(c[i])).collect()).collect();
    rank(&rows)
}

/// A basis of the right kernel `{z : A z = 0}`, `A` given as rows with
/// `cols` columns. Basis vectors follow free columns in increasing order.
pub fn kernel(rows: &[Vec<Q>], cols: usize) -> Vec<Vec<Q>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut z = vec![Q::zero(); cols];
            z[f] = Q::one();
            for (r, &p) in pivots.iter().enumerate() {
                z[p] = -m[r][f].clone();
            }
            z
        })
        .collect()
}

/// Smith normal form `U A V = D` of an integer matrix, with `U`, `V`
/// unimodular and `D` diagonal with each entry dividing the next.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: Vec<Vec<BigInt>>,
    pub d: Vec<Vec<BigInt>>,
    pub v: Vec<Vec<BigInt>>,
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

pub fn smith_normal_form(a: &[Vec<BigInt>]) -> SmithForm {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut d = a.to_vec();
    let mut u = identity(m);
    let mut v = identity(n);

    let row_op = |mat: &mut Vec<Vec<BigInt>>, dst: usize, src: usize, f: &BigInt| {
        let src_row = mat[src].clone();
        for (x, s) in mat[dst].iter_mut().zip(src_row) {
            *x -= f * s;
        }
    };
    let col_op = |mat: &mut Vec<Vec<BigInt>>, dst: usize, src: usize, f: &BigInt| {
        for row in mat.iter_mut() {
            let s = row[src].clone();
            row[dst] -= f * s;
        }
    };
    let swap_cols = |mat: &mut Vec<Vec<BigInt>>, a: usize, b: usize| {
        for row in mat.iter_mut() {
            row.swap(a, b);
        }
    };

    let mut t = 0;
    while t < m.min(n) {
        // smallest nonzero entry in the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if !d[i][j].is_zero() && best.is_none_or(|(bi, bj)| d[i][j].abs() < d[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        d.swap(t, pi);
        u.swap(t, pi);
        swap_cols(&mut d, t, pj);
        swap_cols(&mut v, t, pj);

        let mut clean = true;
        for i in t + 1..m {
            if !d[i][t].is_zero() {
                let f = d[i][t].div_floor(&d[t][t]);
                row_op(&mut d, i, t, &f);
                row_op(&mut u, i, t, &f);
                if !d[i][t].is_zero() {
                    clean = false;
                }
            }
        }
        for j in t + 1..n {
            if !d[t][j].is_zero() {
                let f = d[t][j].div_floor(&d[t][t]);
                col_op(&mut d, j, t, &f);
                col_op(&mut v, j, t, &f);
                if !d[t][j].is_zero() {
                    clean = false;
                }
            }
        }
        if !clean {
            continue;
        }
        // divisibility: fold in any trailing entry the pivot does not divide
        let mut fixed = true;
        'outer: for i in t + 1..m {
            for j in t + 1..n {
                if !d[i][j].is_multiple_of(&d[t][t]) {
                    let f = -BigInt::one();
                    row_op(&mut d, t, i, &f);
                    row_op(&mut u, t, i, &f);
                    fixed = false;
                    break 'outer;
                }
            }
        }
        if !fixed {
            continue;
        }
        if d[t][t].is_negative() {
            for x in d[t].iter_mut() {
                *x = -x.clone();
            }
            for x in u[t].iter_mut() {
                *x = -x.clone();
            }
        }
        t += 1;
    }
    SmithForm { u, d, v }
}

/// Solves `A x = b` over the integers, if a solution exists.
pub fn solve_integer(a: &[Vec<BigInt>], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let SmithForm { u, d, v } = smith_normal_form(a);
    // D y = U b, x = V y
    let ub: Vec<BigInt> = (0..m).map(|i| (0..m).map(|k| &u[i][k] * &b[k]).sum()).collect();
    let mut y = vec![BigInt::zero(); n];
    for i in 0..m {
        let di = if i < n { d[i][i].clone() } else { BigInt::zero() };
        if di.is_zero() {
            if !ub[i].is_zero() {
                return None;
            }
        } else {
            if !ub[i].is_multiple_of(&di) {
                return None;
            }
            y[i] = &ub[i] / &di;
        }
    }
    Some((0..n).map(|i| (0..n).map(|k| &v[i][k] * &y[k]).sum()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
        let n = b.first().map_or(0, Vec::len);
        a.iter().map(|r| (0..n).map(|j| r.iter().zip(b).map(|(x, row)| x * &row[j]).sum()).collect()).collect()
    }

    #[test]
    fn smith_form_reconstructs() {
        let a = bi(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let SmithForm { u, d, v } = smith_normal_form(&a);
        assert_eq!(mul(&mul(&u, &a), &v), d);
        let diag: Vec<BigInt> = (0..3).map(|i| d[i][i].clone()).collect();
        assert_eq!(diag, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
    }

    #[test]
    fn integer_solve() {
        // columns a+b, b+c, c+d; target a+d = (a+b) - (b+c) + (c+d)
        let a = bi(&[&[1, 0, 0], &[1, 1, 0], &[0, 1, 1], &[0, 0, 1]]);
        let b: Vec<BigInt> = [1, 0, 0, 1].iter().map(|&x| BigInt::from(x)).collect();
        let x = solve_integer(&a, &b).unwrap();
        assert_eq!(x, vec![BigInt::from(1), BigInt::from(-1), BigInt::from(1)]);
        // 2x = 1 has no integer solution
        assert!(solve_integer(&bi(&[&[2]]), &[BigInt::from(1)]).is_none());
    }

    #[test]
    fn kernel_and_rank() {
        let rows = vec![vec![q(1), q(1), q(0)], vec![q(0), q(1), q(1)]];
        assert_eq!(rank(&rows), 2);
        let k = kernel(&rows, 3);
        assert_eq!(k, vec![vec![q(1), q(-1), q(1)]]);
    }
}
