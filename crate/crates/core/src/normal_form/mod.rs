//! Exact linear algebra: field ranks, Smith form, row membership and left
//! kernels over every supported ring.
//!
//! `Z/n` is handled by lifting to `Z` and stacking `n I`. Group algebras go
//! through the right-regular representation over the base field: row
//! `(i, s)` of `regular_rep(A)` is the translate `s A_i`, so base-field
//! coefficients on those rows read back directly as group-algebra
//! coefficients.

mod field;
mod integer;

pub(crate) use field::{rank_mod_p, rank_rational};

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{ring_mismatch, shape, Error, Result};
use crate::ring::{regular_rep, Matrix, Ring, Scalar};

use field::{echelon, Echelon, PrimeField, Rationals};
use integer::{hermite, IntRows};

/// `U A V = D` over `Z` with `U`, `V` unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: Matrix,
    pub d: Matrix,
    pub v: Matrix,
    /// The `min(n, m)` diagonal entries of `D`, each dividing the next.
    pub divisors: Vec<BigInt>,
}

fn unsupported(op: &'static str, ring: &Ring) -> Error {
    Error::UnsupportedRing {
        op,
        ring: ring.to_string(),
    }
}

fn rows_of<T>(a: &Matrix, f: impl Fn(&Scalar) -> T) -> Vec<Vec<T>> {
    (0..a.rows()).map(|i| a.row(i).iter().map(&f).collect()).collect()
}

fn int_rows(a: &Matrix) -> IntRows {
    let ring = a.ring();
    rows_of(a, |s| ring.lift_to_integer(s).expect("integer-like scalar"))
}

fn rat_rows(a: &Matrix) -> Vec<Vec<BigRational>> {
    rows_of(a, |s| match s {
        Scalar::Rat(x) => x.clone(),
        _ => unreachable!("rational scalar"),
    })
}

fn res_rows(a: &Matrix) -> Vec<Vec<u64>> {
    rows_of(a, |s| match s {
        Scalar::Residue(x) => *x,
        _ => unreachable!("residue scalar"),
    })
}

fn int_matrix(rows: usize, cols: usize, data: &IntRows) -> Matrix {
    Matrix::from_fn(&Ring::Integers, rows, cols, |i, j| Scalar::Int(data[i][j].clone()))
}

/// Lifts a `Z/n` matrix and appends `n I_m`.
fn lifted_stack(a: &Matrix, n: u64) -> IntRows {
    let m = a.cols();
    let mut rows = int_rows(a);
    for j in 0..m {
        let mut r = vec![BigInt::zero(); m];
        r[j] = BigInt::from(n);
        rows.push(r);
    }
    rows
}

/// Dimension of the row space over a field; for `k[G]` the `k`-dimension of
/// the row space of `regular_rep(A)`.
pub fn field_rank(a: &Matrix) -> Result<usize> {
    match a.ring() {
        Ring::Rationals => Ok(rank_rational(&rat_rows(a), a.cols())),
        Ring::PrimeField(p) => Ok(rank_mod_p(*p, &res_rows(a), a.cols())),
        Ring::GroupAlgebra { .. } => field_rank(&regular_rep(a)?),
        other => Err(unsupported("field_rank", other)),
    }
}

/// Smith normal form of an integer matrix.
pub fn smith(a: &Matrix) -> Result<SmithDecomposition> {
    if a.ring() != &Ring::Integers {
        return Err(ring_mismatch(&Ring::Integers, a.ring()));
    }
    let (n, m) = (a.rows(), a.cols());
    let s = integer::smith(&int_rows(a), m);
    let divisors = (0..n.min(m)).map(|i| s.d[i][i].clone()).collect();
    Ok(SmithDecomposition {
        u: int_matrix(n, n, &s.u),
        d: int_matrix(n, m, &s.d),
        v: int_matrix(m, m, &s.v),
        divisors,
    })
}

/// Invariant factors `e_1, ..., e_m` with `coker(A) = (+)_i R/e_i R` for
/// `R = Z` or `Z/n`. Over `Z/n` every `e_i` divides `n` (free summands give `n`);
/// over `Z` free summands give `0`.
pub fn invariant_factors(a: &Matrix) -> Result<Vec<BigInt>> {
    let m = a.cols();
    match a.ring() {
        Ring::Integers => {
            let s = integer::smith(&int_rows(a), m);
            Ok((0..m)
                .map(|i| if i < a.rows() { s.d[i][i].clone() } else { BigInt::zero() })
                .collect())
        }
        Ring::IntegersMod(n) => {
            let s = integer::smith(&int_rows(a), m);
            let n = BigInt::from(*n);
            Ok((0..m)
                .map(|i| if i < a.rows() { s.d[i][i].gcd(&n) } else { n.clone() })
                .collect())
        }
        other => Err(unsupported("invariant_factors", other)),
    }
}

fn solve_field<F: field::Field>(f: &F, rows: &[Vec<F::E>], v: &[F::E], cols: usize) -> Option<Vec<F::E>> {
    let e: Echelon<F::E> = echelon(f, rows, cols);
    e.solve(f, v, rows.len())
}

/// Some `u` with `u A = v`, or `None` when `v` is not in the row space.
pub fn row_membership(a: &Matrix, v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    let ring = a.ring();
    if v.len() != a.cols() {
        return Err(shape("row_membership", "vector length differs from column count"));
    }
    for s in v {
        ring.check(s)?;
    }
    let n = a.rows();
    match ring {
        Ring::Integers => {
            let target: Vec<BigInt> = v.iter().map(|s| ring.lift_to_integer(s).unwrap()).collect();
            let h = hermite(&int_rows(a), a.cols(), true);
            Ok(h.solve(&target).map(|u| u.into_iter().map(Scalar::Int).collect()))
        }
        Ring::IntegersMod(modulus) => {
            let target: Vec<BigInt> = v.iter().map(|s| ring.lift_to_integer(s).unwrap()).collect();
            let h = hermite(&lifted_stack(a, *modulus), a.cols(), true);
            Ok(h.solve(&target)
                .map(|u| u.iter().take(n).map(|x| ring.from_integer(x)).collect()))
        }
        Ring::Rationals => {
            let target: Vec<BigRational> = v
                .iter()
                .map(|s| match s {
                    Scalar::Rat(x) => x.clone(),
                    _ => unreachable!(),
                })
                .collect();
            Ok(solve_field(&Rationals, &rat_rows(a), &target, a.cols())
                .map(|u| u.into_iter().map(Scalar::Rat).collect()))
        }
        Ring::PrimeField(p) => {
            let target: Vec<u64> = v
                .iter()
                .map(|s| match s {
                    Scalar::Residue(x) => *x,
                    _ => unreachable!(),
                })
                .collect();
            Ok(solve_field(&PrimeField(*p), &res_rows(a), &target, a.cols())
                .map(|u| u.into_iter().map(Scalar::Residue).collect()))
        }
        Ring::GroupAlgebra { base, group } => {
            let g = group.order();
            let flat_v = flatten_row(v);
            let vm = Matrix::from_rows(base, a.cols() * g, vec![flat_v])?;
            let sol = row_membership(&regular_rep(a)?, vm.row(0))?;
            Ok(sol.map(|c| unflatten_row(ring, &c, g)))
        }
        other => Err(unsupported("row_membership", other)),
    }
}

fn flatten_row(v: &[Scalar]) -> Vec<Scalar> {
    v.iter()
        .flat_map(|s| match s {
            Scalar::Group(c) => c.clone(),
            _ => unreachable!("group-algebra scalar"),
        })
        .collect()
}

fn unflatten_row(ring: &Ring, c: &[Scalar], g: usize) -> Vec<Scalar> {
    c.chunks(g)
        .map(|chunk| ring.group_element(chunk.to_vec()).expect("coefficients over the base field"))
        .collect()
}

/// Rows generating `{u : u A = 0}` as a module over the ring of `A`.
pub fn left_kernel(a: &Matrix) -> Result<Matrix> {
    let ring = a.ring();
    let n = a.rows();
    match ring {
        Ring::Integers => {
            let k = hermite(&int_rows(a), a.cols(), true).kernel();
            Ok(int_matrix(k.len(), n, &k))
        }
        Ring::IntegersMod(modulus) => {
            let h = hermite(&lifted_stack(a, *modulus), a.cols(), true);
            let mut rows: Vec<Vec<Scalar>> = Vec::new();
            for k in h.kernel() {
                let r: Vec<Scalar> = k.iter().take(n).map(|x| ring.from_integer(x)).collect();
                if r.iter().any(|s| !ring.is_zero(s)) {
                    rows.push(r);
                }
            }
            Matrix::from_rows(ring, n, rows)
        }
        Ring::Rationals => {
            let e = echelon(&Rationals, &rat_rows(a), a.cols());
            let rows = e.kernel.into_iter().map(|r| r.into_iter().map(Scalar::Rat).collect()).collect();
            Matrix::from_rows(ring, n, rows)
        }
        Ring::PrimeField(p) => {
            let e = echelon(&PrimeField(*p), &res_rows(a), a.cols());
            let rows = e
                .kernel
                .into_iter()
                .map(|r| r.into_iter().map(Scalar::Residue).collect())
                .collect();
            Matrix::from_rows(ring, n, rows)
        }
        Ring::GroupAlgebra { group, .. } => {
            let g = group.order();
            let k = left_kernel(&regular_rep(a)?)?;
            let rows = (0..k.rows()).map(|i| unflatten_row(ring, k.row(i), g)).collect();
            Matrix::from_rows(ring, n, rows)
        }
        other => Err(unsupported("left_kernel", other)),
    }
}

/// Whether every row of `b` lies in the row space of `a`.
pub fn rows_contained(b: &Matrix, a: &Matrix) -> Result<bool> {
    if b.ring() != a.ring() {
        return Err(ring_mismatch(a.ring(), b.ring()));
    }
    for i in 0..b.rows() {
        if row_membership(a, b.row(i))?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For a module `R^m / R^n A` over `Z`, `Z/n` or `F_p`: the upper triangular
/// Hermite basis of the relation lattice in `Z^m` (with `n Z^m` added for
/// quotient rings), or `None` when the module is infinite.
///
/// Row `i` has its positive pivot in column `i`, so the vectors with
/// `0 <= x_i < h_ii` are a complete set of representatives.
pub fn finite_lattice(a: &Matrix) -> Result<Option<Vec<Vec<BigInt>>>> {
    let m = a.cols();
    let rows = match a.ring() {
        Ring::Integers => int_rows(a),
        Ring::IntegersMod(n) | Ring::PrimeField(n) => lifted_stack(a, *n),
        other => return Err(unsupported("finite_lattice", other)),
    };
    let mut h = hermite(&rows, m, false);
    if h.rank() < m {
        return Ok(None);
    }
    h.h.truncate(m);
    Ok(Some(h.h))
}
