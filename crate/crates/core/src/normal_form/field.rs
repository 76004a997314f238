//! Gauss-Jordan elimination over `Q` and `F_p`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::ring::{add_mod, inv_mod, mul_mod};

pub(crate) trait Field {
    type E: Clone;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Self::E;
}

pub(crate) struct Rationals;

impl Field for Rationals {
    type E = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
}

pub(crate) struct PrimeField(pub u64);

impl Field for PrimeField {
    type E = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.0
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        add_mod(*a, self.0 - b % self.0, self.0)
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        add_mod(*a, *b, self.0)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.0)
    }
    fn inv(&self, a: &u64) -> u64 {
        inv_mod(*a, self.0).expect("nonzero element of a prime field")
    }
}

/// Reduced row echelon form `R = T A` of a matrix given by rows.
pub(crate) struct Echelon<E> {
    /// Nonzero rows of the RREF, each with pivot entry one.
    pub basis: Vec<Vec<E>>,
    pub pivots: Vec<usize>,
    /// `transform[i]` expresses `basis[i]` in terms of the original rows.
    pub transform: Vec<Vec<E>>,
    /// Original-row combinations that vanish; a basis of the left kernel.
    pub kernel: Vec<Vec<E>>,
}

pub(crate) fn echelon<F: Field>(f: &F, rows: &[Vec<F::E>], cols: usize) -> Echelon<F::E> {
    let n = rows.len();
    let mut a: Vec<Vec<F::E>> = rows.to_vec();
    let mut t: Vec<Vec<F::E>> = (0..n)
        .map(|i| {
            let mut r = vec![f.zero(); n];
            r[i] = f.one();
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == n {
            break;
        }
        let Some(p) = (r..n).find(|&i| !f.is_zero(&a[i][c])) else {
            continue;
        };
        a.swap(r, p);
        t.swap(r, p);
        let inv = f.inv(&a[r][c]);
        for x in a[r].iter_mut() {
            *x = f.mul(&inv, x);
        }
        for x in t[r].iter_mut() {
            *x = f.mul(&inv, x);
        }
        for i in 0..n {
            if i == r || f.is_zero(&a[i][c]) {
                continue;
            }
            let factor = a[i][c].clone();
            let (pivot_row, pivot_t) = (a[r].clone(), t[r].clone());
            for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                if !f.is_zero(y) {
                    *x = f.sub(x, &f.mul(&factor, y));
                }
            }
            for (x, y) in t[i].iter_mut().zip(&pivot_t) {
                if !f.is_zero(y) {
                    *x = f.sub(x, &f.mul(&factor, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let kernel = t.split_off(r);
    a.truncate(r);
    Echelon {
        basis: a,
        pivots,
        transform: t,
        kernel,
    }
}

impl<E: Clone> Echelon<E> {
    /// Coefficients `u` over the original rows with `u A = v`, if any.
    pub fn solve<F: Field<E = E>>(&self, f: &F, v: &[E], n_rows: usize) -> Option<Vec<E>> {
        let mut rest: Vec<E> = v.to_vec();
        let mut u = vec![f.zero(); n_rows];
        for (i, &c) in self.pivots.iter().enumerate() {
            let coeff = rest[c].clone();
            if f.is_zero(&coeff) {
                continue;
            }
            for (x, y) in rest.iter_mut().zip(&self.basis[i]) {
                *x = f.sub(x, &f.mul(&coeff, y));
            }
            for (x, y) in u.iter_mut().zip(&self.transform[i]) {
                *x = f.add(x, &f.mul(&coeff, y));
            }
        }
        rest.iter().all(|x| f.is_zero(x)).then_some(u)
    }
}

pub(crate) fn rank_mod_p(p: u64, rows: &[Vec<u64>], cols: usize) -> usize {
    let f = PrimeField(p);
    let mut a: Vec<Vec<u64>> = rows.to_vec();
    let n = a.len();
    let mut r = 0;
    for c in 0..cols {
        if r == n {
            break;
        }
        let Some(piv) = (r..n).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, piv);
        let inv = f.inv(&a[r][c]);
        let pivot_row: Vec<u64> = a[r].iter().map(|x| f.mul(&inv, x)).collect();
        for row in a.iter_mut().skip(r + 1) {
            let factor = row[c];
            if factor == 0 {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                *x = f.sub(x, &f.mul(&factor, y));
            }
        }
        a[r] = pivot_row;
        r += 1;
    }
    r
}

/// Incremental echelon basis of primitive integer rows; ranks over `Q`.
///
/// Rows are inserted one at a time and reduced fraction-free against the
/// stored pivots, then divided by their content.
pub(crate) struct IntegerRowSpace {
    cols: usize,
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl IntegerRowSpace {
    pub fn new(cols: usize) -> Self {
        IntegerRowSpace {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Inserts a row; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<BigInt>) -> bool {
        debug_assert_eq!(v.len(), self.cols);
        for (c, p) in &self.rows {
            if v[*c].is_zero() {
                continue;
            }
            let a = &p[*c];
            let b = v[*c].clone();
            let g = a.gcd(&b);
            let (sa, sb) = (a / &g, &b / &g);
            for (x, y) in v.iter_mut().zip(p.iter()) {
                *x = &*x * &sa - &sb * y;
            }
            make_primitive(&mut v);
        }
        let Some(c) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        make_primitive(&mut v);
        if v[c].is_negative() {
            for x in v.iter_mut() {
                *x = -&*x;
            }
        }
        self.rows.push((c, v));
        true
    }
}

fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in v.iter_mut() {
        *x = &*x / &g;
    }
}

/// Clears denominators of a rational row.
pub(crate) fn integer_row(row: &[BigRational]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

pub(crate) fn rank_rational(rows: &[Vec<BigRational>], cols: usize) -> usize {
    let mut space = IntegerRowSpace::new(cols);
    for r in rows {
        space.insert(integer_row(r));
        if space.rank() == cols {
            break;
        }
    }
    space.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::integer;

    fn q_rows(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
        rows.iter().map(|r| r.iter().map(|&x| integer(x)).collect()).collect()
    }

    #[test]
    fn rational_rank_agrees_with_rref() {
        let rows = q_rows(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1], &[0, 2, 2]]);
        assert_eq!(rank_rational(&rows, 3), 2);
        let e = echelon(&Rationals, &rows, 3);
        assert_eq!(e.pivots.len(), 2);
        assert_eq!(e.kernel.len(), 2);
        for k in &e.kernel {
            for c in 0..3 {
                let s: BigRational = k.iter().zip(&rows).map(|(x, r)| x * &r[c]).sum();
                assert!(s.is_zero());
            }
        }
        let v = alloc::vec![integer(3), integer(4), integer(7)];
        let u = e.solve(&Rationals, &v, 4).unwrap();
        for c in 0..3 {
            let s: BigRational = u.iter().zip(&rows).map(|(x, r)| x * &r[c]).sum();
            assert_eq!(s, v[c]);
        }
        assert!(e.solve(&Rationals, &[integer(0), integer(0), integer(1)], 4).is_none());
    }

    #[test]
    fn mod_p_rank() {
        assert_eq!(rank_mod_p(5, &[alloc::vec![1, 2], alloc::vec![2, 4]], 2), 1);
        assert_eq!(rank_mod_p(5, &[alloc::vec![1, 2], alloc::vec![2, 0]], 2), 2);
        assert_eq!(rank_mod_p(2, &[], 3), 0);
    }
}
