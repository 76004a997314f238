//! Coefficient rings, scalars, matrices and ring homomorphisms.

mod group;
mod hom;
mod matrix;

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use group::FiniteGroup;
pub use hom::{hom_apply, HomRule, RingHom};
pub use matrix::{flatten_amplified, regular_rep, Matrix};

/// A supported exact coefficient ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Integers,
    Rationals,
    PrimeField(u64),
    IntegersMod(u64),
    /// `k[G]` for a field `k` and a finite group `G`.
    GroupAlgebra { base: Box<Ring>, group: Arc<FiniteGroup> },
    /// `M_k(R)`.
    MatrixAmplification { base: Box<Ring>, k: usize },
}

/// A ring element. Its meaning depends on the [`Ring`] it is used with.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Int(BigInt),
    Rat(BigRational),
    /// Canonical residue in `[0, n)`.
    Residue(u64),
    /// Dense coefficients indexed by group element.
    Group(Vec<Scalar>),
    /// Row-major `k x k` block over the base ring.
    Block(Vec<Scalar>),
}

impl Ring {
    pub fn prime_field(p: u64) -> Result<Ring> {
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        Ok(Ring::PrimeField(p))
    }

    pub fn integers_mod(n: u64) -> Result<Ring> {
        if n < 2 {
            return Err(Error::InvalidRing(format!("Zmod({n}) needs n >= 2")));
        }
        Ok(Ring::IntegersMod(n))
    }

    pub fn group_algebra(base: Ring, group: FiniteGroup) -> Result<Ring> {
        if !base.is_field() {
            return Err(Error::InvalidRing(format!(
                "group algebra base {base} is not a field"
            )));
        }
        Ok(Ring::GroupAlgebra {
            base: Box::new(base),
            group: Arc::new(group),
        })
    }

    pub fn matrix_amplification(base: Ring, k: usize) -> Result<Ring> {
        if k == 0 {
            return Err(Error::InvalidRing("Mat(R, 0) is not unital".to_string()));
        }
        Ok(Ring::MatrixAmplification {
            base: Box::new(base),
            k,
        })
    }

    pub fn is_field(&self) -> bool {
        matches!(self, Ring::Rationals | Ring::PrimeField(_))
    }

    /// Residue rings: the scalar set is finite and elements are `Residue`s.
    pub fn modulus(&self) -> Option<u64> {
        match self {
            Ring::PrimeField(p) => Some(*p),
            Ring::IntegersMod(n) => Some(*n),
            _ => None,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Ring::Integers => Scalar::Int(BigInt::zero()),
            Ring::Rationals => Scalar::Rat(BigRational::zero()),
            Ring::PrimeField(_) | Ring::IntegersMod(_) => Scalar::Residue(0),
            Ring::GroupAlgebra { base, group } => Scalar::Group(vec![base.zero(); group.order()]),
            Ring::MatrixAmplification { base, k } => Scalar::Block(vec![base.zero(); k * k]),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    /// Image of an integer under the unique unital map `Z -> R`.
    pub fn from_integer(&self, n: &BigInt) -> Scalar {
        match self {
            Ring::Integers => Scalar::Int(n.clone()),
            Ring::Rationals => Scalar::Rat(BigRational::from_integer(n.clone())),
            Ring::PrimeField(m) | Ring::IntegersMod(m) => Scalar::Residue(reduce_bigint(n, *m)),
            Ring::GroupAlgebra { base, group } => {
                let mut c = vec![base.zero(); group.order()];
                c[group.identity()] = base.from_integer(n);
                Scalar::Group(c)
            }
            Ring::MatrixAmplification { base, k } => {
                let mut c = vec![base.zero(); k * k];
                for i in 0..*k {
                    c[i * k + i] = base.from_integer(n);
                }
                Scalar::Block(c)
            }
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        self.from_integer(&BigInt::from(n))
    }

    /// Rational constant; only defined over `Q`.
    pub fn from_rational(&self, r: &BigRational) -> Result<Scalar> {
        match self {
            Ring::Rationals => Ok(Scalar::Rat(r.clone())),
            _ if r.is_integer() => Ok(self.from_integer(r.numer())),
            _ => Err(Error::InvalidArgument(format!("{r} is not an element of {self}"))),
        }
    }

    /// Group-algebra element from dense coefficients.
    pub fn group_element(&self, coefficients: Vec<Scalar>) -> Result<Scalar> {
        let s = Scalar::Group(coefficients);
        self.check(&s)?;
        Ok(s)
    }

    /// Does `s` have the shape of an element of this ring?
    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (Ring::Integers, Scalar::Int(_)) => true,
            (Ring::Rationals, Scalar::Rat(_)) => true,
            (Ring::PrimeField(m) | Ring::IntegersMod(m), Scalar::Residue(r)) => r < m,
            (Ring::GroupAlgebra { base, group }, Scalar::Group(c)) => {
                c.len() == group.order() && c.iter().all(|x| base.contains(x))
            }
            (Ring::MatrixAmplification { base, k }, Scalar::Block(c)) => {
                c.len() == k * k && c.iter().all(|x| base.contains(x))
            }
            _ => false,
        }
    }

    pub fn check(&self, s: &Scalar) -> Result<()> {
        if self.contains(s) {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!("{s:?} is not an element of {self}")))
        }
    }

    pub fn is_zero(&self, s: &Scalar) -> bool {
        match s {
            Scalar::Int(a) => a.is_zero(),
            Scalar::Rat(a) => a.is_zero(),
            Scalar::Residue(a) => *a == 0,
            Scalar::Group(c) | Scalar::Block(c) => {
                let base = self.base().expect("compound scalar over a compound ring");
                c.iter().all(|x| base.is_zero(x))
            }
        }
    }

    /// Base ring of a group algebra or matrix amplification.
    pub fn base(&self) -> Option<&Ring> {
        match self {
            Ring::GroupAlgebra { base, .. } | Ring::MatrixAmplification { base, .. } => Some(base),
            _ => None,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Ring::Integers, Scalar::Int(x), Scalar::Int(y)) => Scalar::Int(x + y),
            (Ring::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (Ring::PrimeField(m) | Ring::IntegersMod(m), Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue(add_mod(*x, *y, *m))
            }
            (Ring::GroupAlgebra { base, .. }, Scalar::Group(x), Scalar::Group(y)) => {
                Scalar::Group(x.iter().zip(y).map(|(p, q)| base.add(p, q)).collect())
            }
            (Ring::MatrixAmplification { base, .. }, Scalar::Block(x), Scalar::Block(y)) => {
                Scalar::Block(x.iter().zip(y).map(|(p, q)| base.add(p, q)).collect())
            }
            _ => panic!("scalar representation does not match ring {self}"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Ring::Integers, Scalar::Int(x)) => Scalar::Int(-x),
            (Ring::Rationals, Scalar::Rat(x)) => Scalar::Rat(-x),
            (Ring::PrimeField(m) | Ring::IntegersMod(m), Scalar::Residue(x)) => {
                Scalar::Residue(if *x == 0 { 0 } else { m - x })
            }
            (Ring::GroupAlgebra { base, .. }, Scalar::Group(x)) => {
                Scalar::Group(x.iter().map(|p| base.neg(p)).collect())
            }
            (Ring::MatrixAmplification { base, .. }, Scalar::Block(x)) => {
                Scalar::Block(x.iter().map(|p| base.neg(p)).collect())
            }
            _ => panic!("scalar representation does not match ring {self}"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Ring::Integers, Scalar::Int(x), Scalar::Int(y)) => Scalar::Int(x * y),
            (Ring::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (Ring::PrimeField(m) | Ring::IntegersMod(m), Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue(mul_mod(*x, *y, *m))
            }
            (Ring::GroupAlgebra { base, group }, Scalar::Group(x), Scalar::Group(y)) => {
                let mut out = vec![base.zero(); group.order()];
                for (s, xs) in x.iter().enumerate() {
                    if base.is_zero(xs) {
                        continue;
                    }
                    for (t, yt) in y.iter().enumerate() {
                        if base.is_zero(yt) {
                            continue;
                        }
                        let st = group.mul(s, t);
                        out[st] = base.add(&out[st], &base.mul(xs, yt));
                    }
                }
                Scalar::Group(out)
            }
            (Ring::MatrixAmplification { base, k }, Scalar::Block(x), Scalar::Block(y)) => {
                let k = *k;
                let mut out = vec![base.zero(); k * k];
                for i in 0..k {
                    for l in 0..k {
                        let xil = &x[i * k + l];
                        if base.is_zero(xil) {
                            continue;
                        }
                        for j in 0..k {
                            let t = base.mul(xil, &y[l * k + j]);
                            out[i * k + j] = base.add(&out[i * k + j], &t);
                        }
                    }
                }
                Scalar::Block(out)
            }
            _ => panic!("scalar representation does not match ring {self}"),
        }
    }

    /// Inverse in a field, `None` for zero.
    pub fn field_inverse(&self, a: &Scalar) -> Option<Scalar> {
        match (self, a) {
            (Ring::Rationals, Scalar::Rat(x)) if !x.is_zero() => Some(Scalar::Rat(x.recip())),
            (Ring::PrimeField(p), Scalar::Residue(x)) if *x != 0 => {
                Some(Scalar::Residue(inv_mod(*x, *p)?))
            }
            _ => None,
        }
    }

    /// Integer lift of a residue or integer scalar.
    pub fn lift_to_integer(&self, a: &Scalar) -> Option<BigInt> {
        match a {
            Scalar::Int(x) => Some(x.clone()),
            Scalar::Residue(x) => Some(BigInt::from(*x)),
            _ => None,
        }
    }

    /// Text form used by the matrix grammar.
    pub fn format_scalar(&self, a: &Scalar) -> String {
        match (self, a) {
            (_, Scalar::Int(x)) => x.to_string(),
            (_, Scalar::Rat(x)) => {
                if x.is_integer() {
                    x.numer().to_string()
                } else {
                    format!("{}/{}", x.numer(), x.denom())
                }
            }
            (_, Scalar::Residue(x)) => x.to_string(),
            (Ring::GroupAlgebra { base, .. }, Scalar::Group(c)) => {
                let terms: Vec<String> = c
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !base.is_zero(x))
                    .map(|(i, x)| format!("{}*g{}", base.format_scalar(x), i))
                    .collect();
                if terms.is_empty() {
                    "0".to_string()
                } else {
                    terms.join("+")
                }
            }
            (Ring::MatrixAmplification { base, k }, Scalar::Block(c)) => {
                let rows: Vec<String> = c
                    .chunks(*k)
                    .map(|r| {
                        r.iter()
                            .map(|x| base.format_scalar(x))
                            .collect::<Vec<_>>()
                            .join(" ")
                    })
                    .collect();
                format!("{{{}}}", rows.join(" | "))
            }
            _ => format!("{a:?}"),
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => f.write_str("Z"),
            Ring::Rationals => f.write_str("Q"),
            Ring::PrimeField(p) => write!(f, "Fp({p})"),
            Ring::IntegersMod(n) => write!(f, "Zmod({n})"),
            Ring::GroupAlgebra { base, group } => write!(f, "GroupRing({base},{})", group.name()),
            Ring::MatrixAmplification { base, k } => write!(f, "Mat({base},{k})"),
        }
    }
}

pub(crate) fn reduce_bigint(n: &BigInt, m: u64) -> u64 {
    let r = n.mod_floor(&BigInt::from(m));
    r.to_u64().expect("residue fits in u64")
}

#[inline]
pub(crate) fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 + b as u128) % m as u128) as u64
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    r
}

pub(crate) fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let g = BigInt::from(a).extended_gcd(&BigInt::from(m));
    if !g.gcd.is_one() {
        return None;
    }
    Some(reduce_bigint(&g.x, m))
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// `p`-adic valuation of a nonzero integer.
pub fn valuation(n: &BigInt, p: u64) -> u32 {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rings() -> Vec<Ring> {
        vec![
            Ring::Integers,
            Ring::Rationals,
            Ring::prime_field(5).unwrap(),
            Ring::integers_mod(12).unwrap(),
            Ring::group_algebra(Ring::Rationals, FiniteGroup::symmetric3()).unwrap(),
            Ring::group_algebra(Ring::prime_field(3).unwrap(), FiniteGroup::cyclic(3).unwrap())
                .unwrap(),
            Ring::matrix_amplification(Ring::Integers, 2).unwrap(),
        ]
    }

    fn scalar_from_seed(ring: &Ring, seed: &[i64]) -> Scalar {
        let mut it = seed.iter().cycle();
        let mut next = || *it.next().unwrap();
        match ring {
            Ring::GroupAlgebra { base, group } => {
                Scalar::Group((0..group.order()).map(|_| base.from_i64(next())).collect())
            }
            Ring::MatrixAmplification { base, k } => {
                Scalar::Block((0..k * k).map(|_| base.from_i64(next())).collect())
            }
            Ring::Rationals => {
                let n = next();
                let d = next().rem_euclid(3) + 1;
                Scalar::Rat(BigRational::new(n.into(), d.into()))
            }
            _ => ring.from_i64(next()),
        }
    }

    proptest! {
        #[test]
        fn unital_ring_axioms(a in prop::collection::vec(-5i64..6, 1..8),
                              b in prop::collection::vec(-5i64..6, 1..8),
                              c in prop::collection::vec(-5i64..6, 1..8)) {
            for ring in rings() {
                let (x, y, z) = (scalar_from_seed(&ring, &a), scalar_from_seed(&ring, &b), scalar_from_seed(&ring, &c));
                prop_assert!(ring.contains(&x));
                let one = ring.one();
                prop_assert_eq!(ring.mul(&ring.mul(&x, &y), &z), ring.mul(&x, &ring.mul(&y, &z)));
                prop_assert_eq!(ring.mul(&x, &ring.add(&y, &z)), ring.add(&ring.mul(&x, &y), &ring.mul(&x, &z)));
                prop_assert_eq!(ring.mul(&ring.add(&x, &y), &z), ring.add(&ring.mul(&x, &z), &ring.mul(&y, &z)));
                prop_assert_eq!(ring.mul(&one, &x), x.clone());
                prop_assert_eq!(ring.mul(&x, &one), x.clone());
                prop_assert!(ring.is_zero(&ring.sub(&x, &x)));
                prop_assert_eq!(ring.add(&x, &y), ring.add(&y, &x));
            }
        }
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(3_215_031_751));
        assert!(Ring::prime_field(4).is_err());
        assert!(Ring::integers_mod(1).is_err());
        assert!(Ring::group_algebra(Ring::Integers, FiniteGroup::cyclic(2).unwrap()).is_err());
    }

    #[test]
    fn residues_are_canonical() {
        let r = Ring::integers_mod(4).unwrap();
        assert_eq!(r.from_i64(-1), Scalar::Residue(3));
        assert_eq!(r.from_i64(9), Scalar::Residue(1));
        assert_eq!(valuation(&BigInt::from(-24), 2), 3);
    }

    #[test]
    fn display_round_trips_grammar_names() {
        let g = Ring::group_algebra(Ring::Rationals, FiniteGroup::cyclic(3).unwrap()).unwrap();
        assert_eq!(g.to_string(), "GroupRing(Q,C3)");
        assert_eq!(Ring::matrix_amplification(Ring::Rationals, 2).unwrap().to_string(), "Mat(Q,2)");
        let e = g.one();
        assert_eq!(g.format_scalar(&e), "1*g0");
    }
}
