//! The bivariant dimension `dim(M1|M2)` of a finitely generated submodule of
//! a finitely presented module, and the extended rank of maps.
//!
//! For `M2 = R^m / R^n A` and `M1` generated by the rows of `G`,
//! `dim(M1|M2) = dim(M2) - dim(M2/M1) = rk([A; G]) - rk(A)`.

mod enumerate;
mod suite;

pub use enumerate::{enumerate_submodules, SubmoduleLattice, DEFAULT_ELEMENT_CAP, DEFAULT_SUBMODULE_CAP};
pub use suite::{check_bivariant_axioms, check_bivariant_properties, BivariantProperty};

use crate::error::{ring_mismatch, Error, Result};
use crate::module::{map_welldefined, FpMap, Submodule};
use crate::rank::MatrixRankFn;
use crate::value::ExtendedValue;

/// A bivariant value together with the two matrix ranks it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariantValue {
    pub value: ExtendedValue,
    /// `rk([A; G])`.
    pub stacked: ExtendedValue,
    /// `rk(A)`.
    pub relations: ExtendedValue,
}

pub fn bidim(rk: &MatrixRankFn, s: &Submodule) -> Result<BivariantValue> {
    if s.ring() != rk.ring() {
        return Err(ring_mismatch(rk.ring(), s.ring()));
    }
    let a = s.ambient().relations();
    let stacked = rk.evaluate(&a.vstack(s.generators())?)?;
    let relations = rk.evaluate(a)?;
    let value = stacked.sub(&relations)?;
    Ok(BivariantValue {
        value,
        stacked,
        relations,
    })
}

/// `rk(alpha) = dim(im(alpha) | M2) = rk([A2; F]) - rk(A2)`.
pub fn ext_map_rank(rk: &MatrixRankFn, f: &FpMap) -> Result<ExtendedValue> {
    if !map_welldefined(f)? {
        return Err(Error::IllDefinedMap);
    }
    Ok(bidim(rk, &f.image())?.value)
}
