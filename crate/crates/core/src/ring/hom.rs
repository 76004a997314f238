use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use super::{Matrix, Ring, Scalar};
use crate::error::{ring_mismatch, Error, Result};

/// How a [`RingHom`] acts on scalars.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum HomRule {
    /// `Z -> Z/n` (target `Zmod(n)` or `Fp(n)`).
    ReduceMod,
    /// `Z -> Q`.
    IncludeIntegersInRationals,
    /// `Z/m -> Z/d` for `d | m`.
    ReduceModBetweenQuotients,
    /// `k[G] -> k`, `s |-> 1`.
    Augmentation,
    /// `k[G] -> M_|G|(k)`, `a |-> rho(a)`.
    RegularEmbedding,
    /// `R -> M_k(R)`, `r |-> r I_k`.
    DiagonalEmbedding,
    /// Apply the parts left to right.
    Composite(Vec<RingHom>),
}

/// A unital ring homomorphism from one of the built-in families.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingHom {
    source: Ring,
    target: Ring,
    rule: HomRule,
}

impl RingHom {
    pub fn reduce_mod(target: Ring) -> Result<Self> {
        if target.modulus().is_none() {
            return Err(Error::InvalidArgument(format!("reduction target {target} is not Z/n")));
        }
        Ok(RingHom {
            source: Ring::Integers,
            target,
            rule: HomRule::ReduceMod,
        })
    }

    pub fn include_integers_in_rationals() -> Self {
        RingHom {
            source: Ring::Integers,
            target: Ring::Rationals,
            rule: HomRule::IncludeIntegersInRationals,
        }
    }

    pub fn reduce_between_quotients(source: Ring, target: Ring) -> Result<Self> {
        match (source.modulus(), target.modulus()) {
            (Some(m), Some(d)) if m % d == 0 => Ok(RingHom {
                source,
                target,
                rule: HomRule::ReduceModBetweenQuotients,
            }),
            _ => Err(Error::InvalidArgument(format!("no reduction map {source} -> {target}"))),
        }
    }

    pub fn augmentation(source: Ring) -> Result<Self> {
        match &source {
            Ring::GroupAlgebra { base, .. } => {
                let target = (**base).clone();
                Ok(RingHom {
                    source,
                    target,
                    rule: HomRule::Augmentation,
                })
            }
            _ => Err(Error::UnsupportedRing {
                op: "augmentation",
                ring: source.to_string(),
            }),
        }
    }

    pub fn regular_embedding(source: Ring) -> Result<Self> {
        match &source {
            Ring::GroupAlgebra { base, group } => {
                let target = Ring::matrix_amplification((**base).clone(), group.order())?;
                Ok(RingHom {
                    source,
                    target,
                    rule: HomRule::RegularEmbedding,
                })
            }
            _ => Err(Error::UnsupportedRing {
                op: "regular_embedding",
                ring: source.to_string(),
            }),
        }
    }

    pub fn diagonal_embedding(source: Ring, k: usize) -> Result<Self> {
        let target = Ring::matrix_amplification(source.clone(), k)?;
        Ok(RingHom {
            source,
            target,
            rule: HomRule::DiagonalEmbedding,
        })
    }

    /// `first` followed by `second`.
    pub fn compose(first: &RingHom, second: &RingHom) -> Result<Self> {
        if first.target != second.source {
            return Err(ring_mismatch(&second.source, &first.target));
        }
        use HomRule::*;
        match (&first.rule, &second.rule) {
            (ReduceMod, ReduceModBetweenQuotients) => RingHom::reduce_mod(second.target.clone()),
            (ReduceModBetweenQuotients, ReduceModBetweenQuotients) => {
                RingHom::reduce_between_quotients(first.source.clone(), second.target.clone())
            }
            _ => {
                let mut parts = Vec::new();
                for h in [first, second] {
                    match &h.rule {
                        Composite(inner) => parts.extend(inner.iter().cloned()),
                        _ => parts.push(h.clone()),
                    }
                }
                Ok(RingHom {
                    source: first.source.clone(),
                    target: second.target.clone(),
                    rule: Composite(parts),
                })
            }
        }
    }

    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }

    pub fn rule(&self) -> &HomRule {
        &self.rule
    }

    /// Name in the hom grammar: `mod(n)`, `incQ`, `aug`, `regemb`, `diag(k)`.
    pub fn label(&self) -> alloc::string::String {
        match &self.rule {
            HomRule::ReduceMod | HomRule::ReduceModBetweenQuotients => {
                format!("mod({})", self.target.modulus().unwrap_or(0))
            }
            HomRule::IncludeIntegersInRationals => "incQ".into(),
            HomRule::Augmentation => "aug".into(),
            HomRule::RegularEmbedding => "regemb".into(),
            HomRule::DiagonalEmbedding => match &self.target {
                Ring::MatrixAmplification { k, .. } => format!("diag({k})"),
                _ => unreachable!(),
            },
            HomRule::Composite(parts) => {
                let names: Vec<_> = parts.iter().map(|h| h.label()).collect();
                format!("compose({})", names.join(","))
            }
        }
    }

    pub fn apply_scalar(&self, a: &Scalar) -> Scalar {
        match &self.rule {
            HomRule::ReduceMod | HomRule::ReduceModBetweenQuotients => {
                let n = self.source.lift_to_integer(a).expect("integer-like scalar");
                self.target.from_integer(&n)
            }
            HomRule::IncludeIntegersInRationals => {
                let n = self.source.lift_to_integer(a).expect("integer scalar");
                self.target.from_integer(&n)
            }
            HomRule::Augmentation => {
                let Scalar::Group(c) = a else { unreachable!() };
                c.iter().fold(self.target.zero(), |acc, x| self.target.add(&acc, x))
            }
            HomRule::RegularEmbedding => {
                let Ring::GroupAlgebra { base, group } = &self.source else { unreachable!() };
                let Scalar::Group(c) = a else { unreachable!() };
                let g = group.order();
                let mut block = vec![base.zero(); g * g];
                for (t, ct) in c.iter().enumerate() {
                    if base.is_zero(ct) {
                        continue;
                    }
                    for s in 0..g {
                        let idx = s * g + group.mul(s, t);
                        block[idx] = base.add(&block[idx], ct);
                    }
                }
                Scalar::Block(block)
            }
            HomRule::DiagonalEmbedding => {
                let Ring::MatrixAmplification { base, k } = &self.target else { unreachable!() };
                let mut block = vec![base.zero(); k * k];
                for i in 0..*k {
                    block[i * k + i] = a.clone();
                }
                Scalar::Block(block)
            }
            HomRule::Composite(parts) => parts.iter().fold(a.clone(), |x, h| h.apply_scalar(&x)),
        }
    }

    /// Entrywise image of a matrix over the source ring.
    pub fn apply(&self, a: &Matrix) -> Result<Matrix> {
        if a.ring() != &self.source {
            return Err(ring_mismatch(&self.source, a.ring()));
        }
        let entries = a.entries().iter().map(|e| self.apply_scalar(e)).collect();
        Ok(a.with_ring(self.target.clone(), entries))
    }
}

/// Entrywise image `h(A)`.
pub fn hom_apply(h: &RingHom, a: &Matrix) -> Result<Matrix> {
    h.apply(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{regular_rep, FiniteGroup};

    #[test]
    fn hom_examples() {
        let z = Ring::Integers;
        let z3 = Ring::integers_mod(3).unwrap();
        let a = Matrix::from_ints(&z, 1, 2, &[4, 6]).unwrap();
        let h = RingHom::reduce_mod(z3.clone()).unwrap();
        assert_eq!(h.apply(&a).unwrap(), Matrix::from_ints(&z3, 1, 2, &[1, 0]).unwrap());

        let two = Matrix::from_ints(&z, 1, 1, &[2]).unwrap();
        let inc = RingHom::include_integers_in_rationals();
        assert_eq!(inc.apply(&two).unwrap(), Matrix::from_ints(&Ring::Rationals, 1, 1, &[2]).unwrap());

        let qc2 = Ring::group_algebra(Ring::Rationals, FiniteGroup::cyclic(2).unwrap()).unwrap();
        let el = qc2.group_element(vec![Ring::Rationals.from_i64(1), Ring::Rationals.from_i64(2)]).unwrap();
        let m = Matrix::new(qc2.clone(), 1, 1, vec![el]).unwrap();
        let aug = RingHom::augmentation(qc2.clone()).unwrap();
        assert_eq!(aug.apply(&m).unwrap(), Matrix::from_ints(&Ring::Rationals, 1, 1, &[3]).unwrap());

        assert!(h.apply(&m).is_err());
    }

    #[test]
    fn composition_law() {
        let z = Ring::Integers;
        let z12 = Ring::integers_mod(12).unwrap();
        let z4 = Ring::integers_mod(4).unwrap();
        let h1 = RingHom::reduce_mod(z12.clone()).unwrap();
        let h2 = RingHom::reduce_between_quotients(z12, z4).unwrap();
        let c = RingHom::compose(&h1, &h2).unwrap();
        assert_eq!(c.rule(), &HomRule::ReduceMod);
        let a = Matrix::from_ints(&z, 2, 2, &[5, -7, 13, 24]).unwrap();
        assert_eq!(h2.apply(&h1.apply(&a).unwrap()).unwrap(), c.apply(&a).unwrap());
        assert!(RingHom::compose(&h2, &h1).is_err());
    }

    #[test]
    fn regular_embedding_matches_regular_rep() {
        let r = Ring::group_algebra(Ring::Rationals, FiniteGroup::symmetric3()).unwrap();
        let base = Ring::Rationals;
        let el = r.group_element((0..6).map(|i| base.from_i64(i as i64 - 2)).collect()).unwrap();
        let a = Matrix::new(r.clone(), 1, 1, vec![el]).unwrap();
        let h = RingHom::regular_embedding(r).unwrap();
        let img = h.apply(&a).unwrap();
        assert_eq!(crate::ring::flatten_amplified(&img).unwrap(), regular_rep(&a).unwrap());
    }
}
