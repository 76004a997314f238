//! Finitely presented modules `R^m / R^n A`, their maps and submodules.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{ring_mismatch, shape, Error, Result};
use crate::normal_form::{left_kernel, rows_contained};
use crate::ring::{Matrix, Ring};

/// The module `R^m / R^n A` presented by the relation matrix `A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FpModule {
    relations: Matrix,
}

impl FpModule {
    pub fn new(relations: Matrix) -> Self {
        FpModule { relations }
    }

    /// `R^m`.
    pub fn free(ring: &Ring, m: usize) -> Self {
        FpModule::new(Matrix::zeros(ring, 0, m))
    }

    pub fn zero(ring: &Ring) -> Self {
        FpModule::free(ring, 0)
    }

    pub fn ring(&self) -> &Ring {
        self.relations.ring()
    }

    pub fn generators(&self) -> usize {
        self.relations.cols()
    }

    pub fn relations(&self) -> &Matrix {
        &self.relations
    }

    /// The identity map of the module.
    pub fn identity(&self) -> FpMap {
        FpMap {
            domain: self.clone(),
            codomain: self.clone(),
            matrix: Matrix::identity(self.ring(), self.generators()),
        }
    }
}

/// The submodule of `ambient` generated by the rows of `generators`, read
/// modulo the relations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Submodule {
    ambient: FpModule,
    generators: Matrix,
}

impl Submodule {
    pub fn new(ambient: FpModule, generators: Matrix) -> Result<Self> {
        if generators.ring() != ambient.ring() {
            return Err(ring_mismatch(ambient.ring(), generators.ring()));
        }
        if generators.cols() != ambient.generators() {
            return Err(shape(
                "submodule",
                format!("{} columns for {} ambient generators", generators.cols(), ambient.generators()),
            ));
        }
        Ok(Submodule { ambient, generators })
    }

    pub fn zero(ambient: FpModule) -> Self {
        let g = Matrix::zeros(ambient.ring(), 0, ambient.generators());
        Submodule { ambient, generators: g }
    }

    pub fn full(ambient: FpModule) -> Self {
        let g = Matrix::identity(ambient.ring(), ambient.generators());
        Submodule { ambient, generators: g }
    }

    pub fn ambient(&self) -> &FpModule {
        &self.ambient
    }

    pub fn generators(&self) -> &Matrix {
        &self.generators
    }

    pub fn ring(&self) -> &Ring {
        self.ambient.ring()
    }

    /// Whether every generator of `self` lies in `other` (same ambient).
    pub fn is_contained_in(&self, other: &Submodule) -> Result<bool> {
        same_ambient(self, other)?;
        let span = other.generators.vstack(self.ambient.relations())?;
        rows_contained(&self.generators, &span)
    }

    /// Equality as submodules: mutual containment.
    pub fn same_as(&self, other: &Submodule) -> Result<bool> {
        Ok(self.is_contained_in(other)? && other.is_contained_in(self)?)
    }
}

fn same_ambient(a: &Submodule, b: &Submodule) -> Result<()> {
    if a.ambient != b.ambient {
        return Err(Error::InvalidArgument("submodules of different ambients".into()));
    }
    Ok(())
}

/// A map `M1 -> M2` given on generators: row `i` of `matrix` is the image of
/// generator `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FpMap {
    domain: FpModule,
    codomain: FpModule,
    matrix: Matrix,
}

impl FpMap {
    /// Checks shapes only; see [`map_welldefined`].
    pub fn new(domain: FpModule, codomain: FpModule, matrix: Matrix) -> Result<Self> {
        if domain.ring() != codomain.ring() {
            return Err(ring_mismatch(domain.ring(), codomain.ring()));
        }
        if matrix.ring() != domain.ring() {
            return Err(ring_mismatch(domain.ring(), matrix.ring()));
        }
        if matrix.rows() != domain.generators() || matrix.cols() != codomain.generators() {
            return Err(shape(
                "map",
                format!(
                    "{}x{} matrix for {} -> {} generators",
                    matrix.rows(),
                    matrix.cols(),
                    domain.generators(),
                    codomain.generators()
                ),
            ));
        }
        Ok(FpMap {
            domain,
            codomain,
            matrix,
        })
    }

    /// Like [`FpMap::new`] but also rejects ill-defined maps.
    pub fn checked(domain: FpModule, codomain: FpModule, matrix: Matrix) -> Result<Self> {
        let f = FpMap::new(domain, codomain, matrix)?;
        if !map_welldefined(&f)? {
            return Err(Error::IllDefinedMap);
        }
        Ok(f)
    }

    /// A map between free modules.
    pub fn free(matrix: Matrix) -> Self {
        let ring = matrix.ring().clone();
        FpMap {
            domain: FpModule::free(&ring, matrix.rows()),
            codomain: FpModule::free(&ring, matrix.cols()),
            matrix,
        }
    }

    pub fn domain(&self) -> &FpModule {
        &self.domain
    }

    pub fn codomain(&self) -> &FpModule {
        &self.codomain
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn ring(&self) -> &Ring {
        self.domain.ring()
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &FpMap) -> Result<FpMap> {
        if self.codomain != next.domain {
            return Err(Error::InvalidArgument("maps are not composable".into()));
        }
        FpMap::new(self.domain.clone(), next.codomain.clone(), self.matrix.mul(&next.matrix)?)
    }

    /// The image as a submodule of the codomain.
    pub fn image(&self) -> Submodule {
        Submodule {
            ambient: self.codomain.clone(),
            generators: self.matrix.clone(),
        }
    }

    /// `[[self, gamma], [0, other]] : M1 + M2 -> M3 + M4` where `gamma: M1 -> M4`.
    pub fn block_upper(&self, gamma: &Matrix, other: &FpMap) -> Result<FpMap> {
        FpMap::new(
            direct_sum(&self.domain, &other.domain)?,
            direct_sum(&self.codomain, &other.codomain)?,
            Matrix::block_upper(&self.matrix, gamma, &other.matrix)?,
        )
    }
}

/// Whether every relation of the domain is sent into the relations of the
/// codomain.
pub fn map_welldefined(f: &FpMap) -> Result<bool> {
    let images = f.domain.relations.mul(&f.matrix)?;
    rows_contained(&images, &f.codomain.relations)
}

pub fn direct_sum(m: &FpModule, n: &FpModule) -> Result<FpModule> {
    Ok(FpModule::new(Matrix::block_diag(&m.relations, &n.relations)?))
}

/// `coker(f) = M2 / im(f)`.
pub fn coker_presentation(f: &FpMap) -> Result<FpModule> {
    if !map_welldefined(f)? {
        return Err(Error::IllDefinedMap);
    }
    Ok(FpModule::new(f.codomain.relations.vstack(&f.matrix)?))
}

/// `M / S`.
pub fn quotient_by(m: &FpModule, s: &Submodule) -> Result<FpModule> {
    if &s.ambient != m {
        return Err(shape("quotient_by", "submodule of a different ambient"));
    }
    Ok(FpModule::new(m.relations.vstack(&s.generators)?))
}

/// `S` viewed inside the quotient `M / T` (same generators, more relations).
pub fn image_in_quotient(s: &Submodule, t: &Submodule) -> Result<Submodule> {
    same_ambient(s, t)?;
    Submodule::new(quotient_by(&s.ambient, t)?, s.generators.clone())
}

pub fn submodule_sum(s1: &Submodule, s2: &Submodule) -> Result<Submodule> {
    same_ambient(s1, s2)?;
    Submodule::new(s1.ambient.clone(), s1.generators.vstack(&s2.generators)?)
}

/// `S1 ∩ S2`: from `u G1 + v G2 + w A = 0` take the rows `u G1`.
pub fn submodule_intersection(s1: &Submodule, s2: &Submodule) -> Result<Submodule> {
    same_ambient(s1, s2)?;
    let stack = s1.generators.vstack(&s2.generators)?.vstack(&s1.ambient.relations)?;
    let k = left_kernel(&stack)?;
    let u = k.col_range(0, s1.generators.rows());
    let rows = u.mul(&s1.generators)?;
    Submodule::new(s1.ambient.clone(), drop_zero_rows(&rows))
}

/// A presentation of `<G>`: one generator per row of `G`, relations
/// `{u : u G in rowspace(A)}`.
pub fn submodule_presentation(s: &Submodule) -> Result<FpModule> {
    let k = s.generators.rows();
    let stack = s.generators.vstack(&s.ambient.relations)?;
    let kernel = left_kernel(&stack)?;
    Ok(FpModule::new(drop_zero_rows(&kernel.col_range(0, k))))
}

/// The tautological map from [`submodule_presentation`] into the ambient.
pub fn submodule_inclusion(s: &Submodule) -> Result<FpMap> {
    FpMap::new(submodule_presentation(s)?, s.ambient.clone(), s.generators.clone())
}

pub(crate) fn drop_zero_rows(m: &Matrix) -> Matrix {
    let ring = m.ring();
    let keep: Vec<usize> = (0..m.rows()).filter(|&i| m.row(i).iter().any(|e| !ring.is_zero(e))).collect();
    m.select_rows(&keep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> Ring {
        Ring::Integers
    }

    fn cyclic(n: i64) -> FpModule {
        FpModule::new(Matrix::from_ints(&z(), 1, 1, &[n]).unwrap())
    }

    fn ints(r: usize, c: usize, v: &[i64]) -> Matrix {
        Matrix::from_ints(&z(), r, c, v).unwrap()
    }

    #[test]
    fn welldefined_examples() {
        let z4 = cyclic(4);
        let z2 = cyclic(2);
        assert!(map_welldefined(&FpMap::new(z4.clone(), z4.clone(), ints(1, 1, &[2])).unwrap()).unwrap());
        assert!(!map_welldefined(&FpMap::new(z2, z4, ints(1, 1, &[1])).unwrap()).unwrap());
        assert!(map_welldefined(&FpMap::free(ints(2, 3, &[1, 2, 3, 4, 5, 6]))).unwrap());
    }

    #[test]
    fn sums_and_quotients() {
        let s = direct_sum(&cyclic(2), &cyclic(3)).unwrap();
        assert_eq!(s.relations(), &ints(2, 2, &[2, 0, 0, 3]));
        let m = cyclic(4);
        let q = quotient_by(&m, &Submodule::new(m.clone(), ints(1, 1, &[2])).unwrap()).unwrap();
        assert_eq!(q.relations(), &ints(2, 1, &[4, 2]));
        let zero = quotient_by(&m, &Submodule::zero(m.clone())).unwrap();
        assert_eq!(zero.generators(), 1);
        let doubling = FpMap::free(ints(1, 1, &[2]));
        assert_eq!(coker_presentation(&doubling).unwrap().relations(), &ints(1, 1, &[2]));
        let bad = FpMap::new(cyclic(2), cyclic(4), ints(1, 1, &[1])).unwrap();
        assert_eq!(coker_presentation(&bad), Err(Error::IllDefinedMap));
    }

    #[test]
    fn intersection_examples() {
        let zf = FpModule::free(&z(), 1);
        let s2 = Submodule::new(zf.clone(), ints(1, 1, &[2])).unwrap();
        let s3 = Submodule::new(zf.clone(), ints(1, 1, &[3])).unwrap();
        let i = submodule_intersection(&s2, &s3).unwrap();
        let six = Submodule::new(zf.clone(), ints(1, 1, &[6])).unwrap();
        assert!(i.same_as(&six).unwrap());

        let z2 = FpModule::free(&z(), 2);
        let a = Submodule::new(z2.clone(), ints(1, 2, &[1, 0])).unwrap();
        let b = Submodule::new(z2.clone(), ints(1, 2, &[0, 1])).unwrap();
        assert!(submodule_intersection(&a, &b).unwrap().same_as(&Submodule::zero(z2)).unwrap());
        assert!(submodule_intersection(&a, &a).unwrap().same_as(&a).unwrap());
    }

    #[test]
    fn presentation_examples() {
        let m = cyclic(4);
        let s = Submodule::new(m.clone(), ints(1, 1, &[2])).unwrap();
        let p = submodule_presentation(&s).unwrap();
        assert_eq!(p.generators(), 1);
        let two = Submodule::new(FpModule::free(&z(), 1), ints(1, 1, &[2])).unwrap();
        assert!(Submodule::new(FpModule::free(&z(), 1), p.relations().clone())
            .unwrap()
            .same_as(&two)
            .unwrap());
        assert!(map_welldefined(&submodule_inclusion(&s).unwrap()).unwrap());

        let free = FpModule::free(&z(), 2);
        assert_eq!(submodule_presentation(&Submodule::full(free.clone())).unwrap().relations().rows(), 0);
        assert_eq!(submodule_presentation(&Submodule::zero(free)).unwrap().generators(), 0);
    }
}
