//! Integer row echelon (Hermite) form and Smith normal form.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type IntRows = Vec<Vec<BigInt>>;

pub(crate) fn identity_rows(n: usize) -> IntRows {
    (0..n)
        .map(|i| {
            let mut r = vec![BigInt::zero(); n];
            r[i] = BigInt::one();
            r
        })
        .collect()
}

fn axpy(target: &mut [BigInt], q: &BigInt, source: &[BigInt]) {
    // target -= q * source
    for (x, y) in target.iter_mut().zip(source) {
        if !y.is_zero() {
            *x -= q * y;
        }
    }
}

fn negate(row: &mut [BigInt]) {
    for x in row.iter_mut() {
        *x = -&*x;
    }
}

/// Row Hermite normal form `H = T A` with `T` unimodular.
///
/// Pivots are positive and entries above a pivot lie in `[0, pivot)`.
pub(crate) struct Hermite {
    pub h: IntRows,
    pub t: IntRows,
    /// `(row, col)` of each pivot; rows `rank..` of `h` are zero.
    pub pivots: Vec<usize>,
}

pub(crate) fn hermite(a: &[Vec<BigInt>], cols: usize, track: bool) -> Hermite {
    let n = a.len();
    let mut h: IntRows = a.to_vec();
    let mut t = if track { identity_rows(n) } else { Vec::new() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == n {
            break;
        }
        loop {
            let best = (r..n)
                .filter(|&i| !h[i][c].is_zero())
                .min_by(|&i, &j| h[i][c].abs().cmp(&h[j][c].abs()));
            let Some(p) = best else { break };
            h.swap(r, p);
            if track {
                t.swap(r, p);
            }
            let mut done = true;
            for i in r + 1..n {
                if h[i][c].is_zero() {
                    continue;
                }
                let q = h[i][c].div_floor(&h[r][c]);
                let (top, rest) = h.split_at_mut(i);
                axpy(&mut rest[0], &q, &top[r]);
                if track {
                    let (top, rest) = t.split_at_mut(i);
                    axpy(&mut rest[0], &q, &top[r]);
                }
                if !h[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if r < n && !h[r][c].is_zero() {
            if h[r][c].is_negative() {
                negate(&mut h[r]);
                if track {
                    negate(&mut t[r]);
                }
            }
            for i in 0..r {
                if h[i][c].is_zero() {
                    continue;
                }
                let q = h[i][c].div_floor(&h[r][c]);
                if q.is_zero() {
                    continue;
                }
                let (top, rest) = h.split_at_mut(r);
                axpy(&mut top[i], &q, &rest[0]);
                if track {
                    let (top, rest) = t.split_at_mut(r);
                    axpy(&mut top[i], &q, &rest[0]);
                }
            }
            pivots.push(c);
            r += 1;
        }
    }
    Hermite { h, t, pivots }
}

impl Hermite {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Integer coefficients `u` with `u A = v`, if `v` lies in the row lattice.
    pub fn solve(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let n = self.t.len();
        let mut rest = v.to_vec();
        let mut u = vec![BigInt::zero(); n];
        for (i, &c) in self.pivots.iter().enumerate() {
            if rest[c].is_zero() {
                continue;
            }
            let (q, r) = rest[c].div_rem(&self.h[i][c]);
            if !r.is_zero() {
                return None;
            }
            axpy(&mut rest, &q, &self.h[i]);
            for (x, y) in u.iter_mut().zip(&self.t[i]) {
                *x += &q * y;
            }
        }
        rest.iter().all(Zero::is_zero).then_some(u)
    }

    /// A basis of `{u : u A = 0}`, put in Hermite form to keep entries small.
    pub fn kernel(&self) -> IntRows {
        let k: IntRows = self.t[self.rank()..].to_vec();
        if k.is_empty() {
            return k;
        }
        let cols = k[0].len();
        let mut hk = hermite(&k, cols, false);
        hk.h.truncate(hk.rank());
        hk.h
    }
}

/// Smith form `U A V = D` over `Z`.
pub(crate) struct IntSmith {
    pub u: IntRows,
    pub d: IntRows,
    pub v: IntRows,
}

pub(crate) fn smith(a: &[Vec<BigInt>], cols: usize) -> IntSmith {
    let n = a.len();
    let mut d: IntRows = a.to_vec();
    let mut u = identity_rows(n);
    // V is kept as rows of V^T so column operations become row operations.
    let mut vt = identity_rows(cols);

    let col_axpy = |d: &mut IntRows, j: usize, q: &BigInt, k: usize| {
        // column j -= q * column k
        for row in d.iter_mut() {
            if !row[k].is_zero() {
                let t = q * &row[k];
                row[j] -= t;
            }
        }
    };

    for t in 0..n.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..n {
                for j in t..cols {
                    if d[i][j].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| d[i][j].abs() < d[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                // remaining block is zero
                return finish(u, d, vt);
            };
            d.swap(t, pi);
            u.swap(t, pi);
            for row in d.iter_mut() {
                row.swap(t, pj);
            }
            vt.swap(t, pj);

            let mut clean = true;
            for i in t + 1..n {
                if d[i][t].is_zero() {
                    continue;
                }
                let q = d[i][t].div_floor(&d[t][t]);
                let (top, rest) = d.split_at_mut(i);
                axpy(&mut rest[0], &q, &top[t]);
                let (top, rest) = u.split_at_mut(i);
                axpy(&mut rest[0], &q, &top[t]);
                if !d[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if d[t][j].is_zero() {
                    continue;
                }
                let q = d[t][j].div_floor(&d[t][t]);
                col_axpy(&mut d, j, &q, t);
                let (top, rest) = vt.split_at_mut(j);
                axpy(&mut rest[0], &q, &top[t]);
                if !d[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility: fold an offending row into row t and retry
            let pivot = d[t][t].clone();
            let offender = (t + 1..n).find(|&i| (t + 1..cols).any(|j| !d[i][j].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = -BigInt::one();
                    let (top, rest) = d.split_at_mut(i);
                    axpy(&mut top[t], &one, &rest[0]);
                    let (top, rest) = u.split_at_mut(i);
                    axpy(&mut top[t], &one, &rest[0]);
                }
                None => break,
            }
        }
        if d[t][t].is_negative() {
            negate(&mut d[t]);
            negate(&mut u[t]);
        }
    }
    finish(u, d, vt)
}

fn finish(u: IntRows, d: IntRows, vt: IntRows) -> IntSmith {
    let m = vt.len();
    let v: IntRows = (0..m).map(|i| (0..m).map(|j| vt[j][i].clone()).collect()).collect();
    IntSmith { u, d, v }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(r: &[&[i64]]) -> IntRows {
        r.iter().map(|x| x.iter().map(|&y| BigInt::from(y)).collect()).collect()
    }

    fn mul(a: &IntRows, b: &IntRows, inner: usize, cols: usize) -> IntRows {
        a.iter()
            .map(|r| (0..cols).map(|j| (0..inner).map(|l| &r[l] * &b[l][j]).sum()).collect())
            .collect()
    }

    #[test]
    fn smith_reconstructs() {
        let a = rows(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let s = smith(&a, 3);
        let uav = mul(&mul(&s.u, &a, 3, 3), &s.v, 3, 3);
        assert_eq!(uav, s.d);
        let diag: Vec<BigInt> = (0..3).map(|i| s.d[i][i].clone()).collect();
        assert_eq!(diag, rows(&[&[2, 6, 12]])[0]);
    }

    #[test]
    fn hermite_kernel_and_solve() {
        let a = rows(&[&[2], &[-3]]);
        let h = hermite(&a, 1, true);
        assert_eq!(h.rank(), 1);
        let k = h.kernel();
        assert_eq!(k.len(), 1);
        let s = &k[0][0] * BigInt::from(2) - &k[0][1] * BigInt::from(3);
        assert!(s.is_zero());
        assert!(h.solve(&[BigInt::from(1)]).is_some());
    }
}
