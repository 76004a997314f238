//! Sylvester rank functions on matrices, modules and maps.

pub(crate) mod harness;

pub use harness::{
    check_axioms, check_length_criterion, check_map_axioms, check_matrix_axioms, check_module_axioms,
    check_presentation_invariance, check_round_trip, length_sides, Facet, LengthSides,
};

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{ring_mismatch, Error, Result};
use crate::module::FpModule;
use crate::normal_form::{field_rank, invariant_factors};
use crate::ring::{flatten_amplified, valuation, FiniteGroup, Matrix, Ring, RingHom};
use crate::value::{fraction_string, ExtendedValue};

type MatrixEval = Arc<dyn Fn(&Matrix) -> Result<ExtendedValue> + Send + Sync>;
type ModuleEval = Arc<dyn Fn(&FpModule) -> Result<ExtendedValue> + Send + Sync>;

#[derive(Clone)]
enum Kind {
    Field,
    ZmodPk { p: u64, k: u32 },
    GroupVn { order: usize },
    Pullback { hom: RingHom, inner: Box<MatrixRankFn> },
    Convex(Vec<(BigRational, MatrixRankFn)>),
    Morita { inner: Box<MatrixRankFn>, k: usize },
    Custom(MatrixEval),
}

/// A Sylvester matrix rank function over a fixed ring.
#[derive(Clone)]
pub struct MatrixRankFn {
    ring: Ring,
    label: String,
    kind: Kind,
}

impl fmt::Debug for MatrixRankFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MatrixRankFn({} over {})", self.label, self.ring)
    }
}

impl MatrixRankFn {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Wraps an arbitrary evaluator. Nothing about it is checked here; run
    /// [`check_matrix_axioms`] to test it.
    pub fn custom(
        ring: Ring,
        label: impl Into<String>,
        f: impl Fn(&Matrix) -> Result<ExtendedValue> + Send + Sync + 'static,
    ) -> Self {
        MatrixRankFn {
            ring,
            label: label.into(),
            kind: Kind::Custom(Arc::new(f)),
        }
    }

    /// `rk'(A) = rk(alpha_A)` for a map rank function.
    pub fn from_map_rank(mrf: &MapRankFn) -> Self {
        let mrf = mrf.clone();
        MatrixRankFn::custom(mrf.ring.clone(), format!("matrix({})", mrf.label), move |a| mrf.evaluate(a))
    }

    pub fn evaluate(&self, a: &Matrix) -> Result<ExtendedValue> {
        if a.ring() != &self.ring {
            return Err(ring_mismatch(&self.ring, a.ring()));
        }
        match &self.kind {
            Kind::Field => Ok(ExtendedValue::from_int(field_rank(a)? as i64)),
            Kind::ZmodPk { p, k } => {
                let loss: u32 = invariant_factors(a)?
                    .iter()
                    .map(|e| k - valuation(e, *p).min(*k))
                    .sum();
                Ok(ExtendedValue::ratio(loss as i64, *k as i64))
            }
            Kind::GroupVn { order } => Ok(ExtendedValue::ratio(field_rank(a)? as i64, *order as i64)),
            Kind::Pullback { hom, inner } => inner.evaluate(&hom.apply(a)?),
            Kind::Convex(parts) => {
                let mut total = ExtendedValue::zero();
                for (w, f) in parts {
                    total = total.add(&f.evaluate(a)?.scale(w));
                }
                Ok(total)
            }
            Kind::Morita { inner, k } => {
                let flat = flatten_amplified(a)?;
                Ok(inner.evaluate(&flat)?.scale(&BigRational::new(BigInt::one(), BigInt::from(*k))))
            }
            Kind::Custom(f) => f(a),
        }
    }

    /// Evaluates and insists on a finite value.
    pub fn finite(&self, a: &Matrix) -> Result<BigRational> {
        Ok(self.evaluate(a)?.expect_finite()?.clone())
    }
}

/// Classical rank over `Q` or `F_p`.
pub fn rk_field(ring: &Ring) -> Result<MatrixRankFn> {
    let label = match ring {
        Ring::Rationals => "rkQ".to_string(),
        Ring::PrimeField(p) => format!("rkFp({p})"),
        other => {
            return Err(Error::UnsupportedRing {
                op: "rk_field",
                ring: other.to_string(),
            })
        }
    };
    Ok(MatrixRankFn {
        ring: ring.clone(),
        label,
        kind: Kind::Field,
    })
}

/// The rank over `Z/p^k` induced by the normalized length `L(Z/p^i) = i/k`.
pub fn rk_zmod_pk(p: u64, k: u32) -> Result<MatrixRankFn> {
    if !crate::ring::is_prime(p) {
        return Err(Error::InvalidRing(format!("{p} is not prime")));
    }
    if k == 0 {
        return Err(Error::InvalidArgument("exponent must be positive".into()));
    }
    let n = p
        .checked_pow(k)
        .ok_or_else(|| Error::InvalidArgument(format!("{p}^{k} does not fit in 64 bits")))?;
    Ok(MatrixRankFn {
        ring: Ring::integers_mod(n)?,
        label: format!("rkZmodPk({p},{k})"),
        kind: Kind::ZmodPk { p, k },
    })
}

/// `rk(A) = rank_k(regular_rep(A)) / |G|` over `k[G]`.
pub fn rk_group_vn(field: &Ring, group: &FiniteGroup) -> Result<MatrixRankFn> {
    let ring = Ring::group_algebra(field.clone(), group.clone())?;
    Ok(MatrixRankFn {
        ring,
        label: format!("vN({field},{})", group.name()),
        kind: Kind::GroupVn { order: group.order() },
    })
}

/// `A |-> rk_S(h(A))`.
pub fn rk_pullback(hom: &RingHom, rk_s: &MatrixRankFn) -> Result<MatrixRankFn> {
    if hom.target() != rk_s.ring() {
        return Err(ring_mismatch(hom.target(), rk_s.ring()));
    }
    Ok(MatrixRankFn {
        ring: hom.source().clone(),
        label: format!("pullback({},{})", hom.label(), rk_s.label),
        kind: Kind::Pullback {
            hom: hom.clone(),
            inner: Box::new(rk_s.clone()),
        },
    })
}

/// Pointwise convex combination with positive weights summing to one.
pub fn rk_convex(parts: &[(BigRational, MatrixRankFn)]) -> Result<MatrixRankFn> {
    let Some((_, first)) = parts.first() else {
        return Err(Error::InvalidArgument("empty convex combination".into()));
    };
    let mut sum = BigRational::zero();
    for (w, f) in parts {
        if !w.is_positive() {
            return Err(Error::InvalidArgument(format!("weight {} is not positive", fraction_string(w))));
        }
        if f.ring() != first.ring() {
            return Err(ring_mismatch(first.ring(), f.ring()));
        }
        sum += w;
    }
    if !sum.is_one() {
        return Err(Error::InvalidArgument(format!("weights sum to {}", fraction_string(&sum))));
    }
    let terms: Vec<String> = parts
        .iter()
        .map(|(w, f)| format!("{}*{}", fraction_string(w), f.label))
        .collect();
    Ok(MatrixRankFn {
        ring: first.ring().clone(),
        label: format!("convex({})", terms.join("+")),
        kind: Kind::Convex(parts.to_vec()),
    })
}

/// `rk(A) = rk_R(flat(A)) / k` over `Mat(R, k)`.
pub fn rk_morita(base: &MatrixRankFn, k: usize) -> Result<MatrixRankFn> {
    Ok(MatrixRankFn {
        ring: Ring::matrix_amplification(base.ring().clone(), k)?,
        label: format!("morita({},{k})", base.label),
        kind: Kind::Morita {
            inner: Box::new(base.clone()),
            k,
        },
    })
}

/// A Sylvester module rank function on finitely presented modules.
#[derive(Clone)]
pub struct ModuleRankFn {
    ring: Ring,
    label: String,
    eval: ModuleEval,
}

impl fmt::Debug for ModuleRankFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleRankFn({} over {})", self.label, self.ring)
    }
}

impl ModuleRankFn {
    /// `dim(R^m / R^n A) = m - rk(A)`.
    pub fn from_matrix_rank(rk: &MatrixRankFn) -> Self {
        let rk = rk.clone();
        ModuleRankFn {
            ring: rk.ring.clone(),
            label: format!("dim({})", rk.label),
            eval: Arc::new(move |m| module_dim(&rk, m)),
        }
    }

    pub fn custom(
        ring: Ring,
        label: impl Into<String>,
        f: impl Fn(&FpModule) -> Result<ExtendedValue> + Send + Sync + 'static,
    ) -> Self {
        ModuleRankFn {
            ring,
            label: label.into(),
            eval: Arc::new(f),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn evaluate(&self, m: &FpModule) -> Result<ExtendedValue> {
        if m.ring() != &self.ring {
            return Err(ring_mismatch(&self.ring, m.ring()));
        }
        (self.eval)(m)
    }
}

/// A Sylvester map rank function on maps `R^n -> R^m`, given by their matrices.
#[derive(Clone)]
pub struct MapRankFn {
    ring: Ring,
    label: String,
    eval: MatrixEval,
}

impl fmt::Debug for MapRankFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MapRankFn({} over {})", self.label, self.ring)
    }
}

impl MapRankFn {
    /// `rk(alpha) = dim(R^m) - dim(coker alpha)`.
    pub fn from_module_rank(dim: &ModuleRankFn) -> Self {
        let dim = dim.clone();
        MapRankFn {
            ring: dim.ring.clone(),
            label: format!("map({})", dim.label),
            eval: Arc::new(move |f| map_rank_from_module(&dim, f)),
        }
    }

    pub fn custom(
        ring: Ring,
        label: impl Into<String>,
        f: impl Fn(&Matrix) -> Result<ExtendedValue> + Send + Sync + 'static,
    ) -> Self {
        MapRankFn {
            ring,
            label: label.into(),
            eval: Arc::new(f),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn evaluate(&self, f: &Matrix) -> Result<ExtendedValue> {
        if f.ring() != &self.ring {
            return Err(ring_mismatch(&self.ring, f.ring()));
        }
        (self.eval)(f)
    }
}

/// `dim(M) = m - rk(A)` for `M = R^m / R^n A`.
pub fn module_dim(rk: &MatrixRankFn, m: &FpModule) -> Result<ExtendedValue> {
    let r = rk.evaluate(m.relations())?;
    ExtendedValue::from_int(m.generators() as i64).sub(&r)
}

/// `rk(F) = dim(R^m) - dim(R^m / R^n F)`.
pub fn map_rank_from_module(dim: &ModuleRankFn, f: &Matrix) -> Result<ExtendedValue> {
    let free = dim.evaluate(&FpModule::free(f.ring(), f.cols()))?;
    let coker = dim.evaluate(&FpModule::new(f.clone()))?;
    free.sub(&coker)
}

/// `rk'(A) = rk(alpha_A)`.
pub fn matrix_rank_from_map(mrf: &MapRankFn, a: &Matrix) -> Result<ExtendedValue> {
    mrf.evaluate(a)
}
