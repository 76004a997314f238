use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::{Ring, Scalar};
use crate::error::{ring_mismatch, shape, Error, Result};

/// Dense row-major matrix over a [`Ring`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(ring: Ring, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(shape(
                "Matrix::new",
                format!("{rows}x{cols} needs {} entries, got {}", rows * cols, entries.len()),
            ));
        }
        for e in &entries {
            ring.check(e)?;
        }
        Ok(Matrix {
            ring,
            rows,
            cols,
            entries,
        })
    }

    pub(crate) fn from_parts(ring: Ring, rows: usize, cols: usize, entries: Vec<Scalar>) -> Self {
        debug_assert_eq!(entries.len(), rows * cols);
        Matrix {
            ring,
            rows,
            cols,
            entries,
        }
    }

    pub fn zeros(ring: &Ring, rows: usize, cols: usize) -> Self {
        let z = ring.zero();
        Matrix::from_parts(ring.clone(), rows, cols, alloc::vec![z; rows * cols])
    }

    pub fn identity(ring: &Ring, n: usize) -> Self {
        let mut m = Matrix::zeros(ring, n, n);
        for i in 0..n {
            m.entries[i * n + i] = ring.one();
        }
        m
    }

    pub fn from_fn(ring: &Ring, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix::from_parts(ring.clone(), rows, cols, entries)
    }

    /// Integer constants mapped into `ring`.
    pub fn from_ints(ring: &Ring, rows: usize, cols: usize, values: &[i64]) -> Result<Self> {
        if values.len() != rows * cols {
            return Err(shape("Matrix::from_ints", format!("{rows}x{cols} from {} values", values.len())));
        }
        Ok(Matrix::from_fn(ring, rows, cols, |i, j| ring.from_i64(values[i * cols + j])))
    }

    pub fn from_rows(ring: &Ring, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(shape("Matrix::from_rows", format!("row of length {} in a {cols}-column matrix", r.len())));
            }
            entries.extend(r);
        }
        Matrix::new(ring.clone(), n, cols, entries)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_matrix(&self, i: usize) -> Matrix {
        Matrix::from_parts(self.ring.clone(), 1, self.cols, self.row(i).to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.ring.is_zero(e))
    }

    fn same_ring(&self, other: &Matrix) -> Result<()> {
        if self.ring != other.ring {
            return Err(ring_mismatch(&self.ring, &other.ring));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.same_ring(other)?;
        if self.cols != other.rows {
            return Err(shape("Matrix::mul", format!("{}x{} times {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let r = &self.ring;
        let mut out = Matrix::zeros(r, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if r.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if r.is_zero(b) {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.entries[idx] = r.add(&out.entries[idx], &r.mul(a, b));
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_ring(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(shape("Matrix::add", format!("{}x{} plus {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| self.ring.add(a, b))
            .collect();
        Ok(Matrix::from_parts(self.ring.clone(), self.rows, self.cols, entries))
    }

    pub fn neg(&self) -> Matrix {
        self.map(|r, e| r.neg(e))
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.add(&other.neg())
    }

    /// Left multiplication of every entry by a scalar.
    pub fn scale_left(&self, c: &Scalar) -> Matrix {
        self.map(|r, e| r.mul(c, e))
    }

    pub fn map(&self, f: impl Fn(&Ring, &Scalar) -> Scalar) -> Matrix {
        let entries = self.entries.iter().map(|e| f(&self.ring, e)).collect();
        Matrix::from_parts(self.ring.clone(), self.rows, self.cols, entries)
    }

    /// `[self; other]`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        self.same_ring(other)?;
        if self.cols != other.cols {
            return Err(shape("Matrix::vstack", format!("{} vs {} columns", self.cols, other.cols)));
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(Matrix::from_parts(self.ring.clone(), self.rows + other.rows, self.cols, entries))
    }

    /// `[self other]`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        self.same_ring(other)?;
        if self.rows != other.rows {
            return Err(shape("Matrix::hstack", format!("{} vs {} rows", self.rows, other.rows)));
        }
        let cols = self.cols + other.cols;
        let mut entries = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            entries.extend(self.row(i).iter().cloned());
            entries.extend(other.row(i).iter().cloned());
        }
        Ok(Matrix::from_parts(self.ring.clone(), self.rows, cols, entries))
    }

    /// `[A 0; 0 B]`.
    pub fn block_diag(a: &Matrix, b: &Matrix) -> Result<Matrix> {
        let c = Matrix::zeros(&a.ring, a.rows, b.cols);
        Matrix::block_upper(a, &c, b)
    }

    /// `[A C; 0 B]`.
    pub fn block_upper(a: &Matrix, c: &Matrix, b: &Matrix) -> Result<Matrix> {
        a.same_ring(b)?;
        a.same_ring(c)?;
        if c.rows != a.rows || c.cols != b.cols {
            return Err(shape("Matrix::block_upper", format!("corner block is {}x{}", c.rows, c.cols)));
        }
        let top = a.hstack(c)?;
        let bottom = Matrix::zeros(&a.ring, b.rows, a.cols).hstack(b)?;
        top.vstack(&bottom)
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut entries = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            entries.extend(self.row(i).iter().cloned());
        }
        Matrix::from_parts(self.ring.clone(), idx.len(), self.cols, entries)
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(&self.ring, self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    pub fn col_range(&self, start: usize, end: usize) -> Matrix {
        let idx: Vec<usize> = (start..end).collect();
        self.select_cols(&idx)
    }

    pub fn row_range(&self, start: usize, end: usize) -> Matrix {
        let idx: Vec<usize> = (start..end).collect();
        self.select_rows(&idx)
    }

    /// Same entries read in a different ring (used for lifts and reductions
    /// whose entry representation is compatible).
    pub(crate) fn with_ring(&self, ring: Ring, entries: Vec<Scalar>) -> Matrix {
        Matrix::from_parts(ring, self.rows, self.cols, entries)
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.entries
    }

    /// Matrix text: rows separated by `;`, entries by `,`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            if i > 0 {
                out.push(';');
            }
            let row: Vec<String> = self.row(i).iter().map(|e| self.ring.format_scalar(e)).collect();
            out.push_str(&row.join(","));
        }
        out
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] over {}", self.to_text(), self.ring)
    }
}

/// Right-regular representation: an `n x m` matrix over `k[G]` becomes the
/// `n|G| x m|G|` matrix over `k` that acts on coefficient vectors.
///
/// Block `(i, j)` is `rho(A_ij)` with `rho(a)[s][st] = a_t`, so that
/// `flat(x) * regular_rep(A) = flat(xA)` and `regular_rep` is multiplicative.
/// Row `(i, s)` of the result is the flattened translate `s * A_i`.
pub fn regular_rep(a: &Matrix) -> Result<Matrix> {
    let Ring::GroupAlgebra { base, group } = a.ring() else {
        return Err(Error::UnsupportedRing {
            op: "regular_rep",
            ring: alloc::string::ToString::to_string(a.ring()),
        });
    };
    let g = group.order();
    let base: &Ring = base;
    let mut out = Matrix::zeros(base, a.rows() * g, a.cols() * g);
    let cols = a.cols() * g;
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let Scalar::Group(coeffs) = a.get(i, j) else { unreachable!() };
            for (t, c) in coeffs.iter().enumerate() {
                if base.is_zero(c) {
                    continue;
                }
                for s in 0..g {
                    let st = group.mul(s, t);
                    let idx = (i * g + s) * cols + j * g + st;
                    out.entries[idx] = base.add(&out.entries[idx], c);
                }
            }
        }
    }
    Ok(out)
}

/// Flattens an `n x m` matrix over `Mat(R, k)` to an `nk x mk` matrix over `R`.
pub fn flatten_amplified(a: &Matrix) -> Result<Matrix> {
    let Ring::MatrixAmplification { base, k } = a.ring() else {
        return Err(Error::UnsupportedRing {
            op: "flatten_amplified",
            ring: alloc::string::ToString::to_string(a.ring()),
        });
    };
    let k = *k;
    let base: &Ring = base;
    Ok(Matrix::from_fn(base, a.rows() * k, a.cols() * k, |r, c| {
        let Scalar::Block(b) = a.get(r / k, c / k) else { unreachable!() };
        b[(r % k) * k + c % k].clone()
    }))
}
