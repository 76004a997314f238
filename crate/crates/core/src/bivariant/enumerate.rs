//! Brute-force enumeration of all submodules of a finite module.
//!
//! Elements are the canonical representatives `0 <= x_i < h_ii` of the
//! relation lattice; submodules are bitsets over them, grown breadth first
//! as `S + <x>`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::module::{FpModule, Submodule};
use crate::normal_form::finite_lattice;
use crate::ring::{Matrix, Ring, Scalar};

pub const DEFAULT_ELEMENT_CAP: usize = 4096;
pub const DEFAULT_SUBMODULE_CAP: usize = 4096;

type Bits = Vec<u64>;

fn bit(bits: &[u64], i: usize) -> bool {
    bits[i / 64] >> (i % 64) & 1 == 1
}

fn set(bits: &mut [u64], i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

/// Every submodule of a finite module, with the element sets.
#[derive(Clone, Debug)]
pub struct SubmoduleLattice {
    ambient: FpModule,
    hnf: Vec<Vec<i64>>,
    elements: Vec<Vec<i64>>,
    subs: Vec<(Bits, Vec<usize>)>,
}

impl SubmoduleLattice {
    pub fn build(m: &FpModule, element_cap: usize, submodule_cap: usize) -> Result<Self> {
        if !matches!(m.ring(), Ring::Integers | Ring::IntegersMod(_) | Ring::PrimeField(_)) {
            return Err(Error::UnsupportedRing {
                op: "enumerate_submodules",
                ring: alloc::string::ToString::to_string(m.ring()),
            });
        }
        let Some(lattice) = finite_lattice(m.relations())? else {
            return Err(Error::InvalidArgument("module is infinite".into()));
        };
        let dims = m.generators();
        let mut order: usize = 1;
        let mut hnf = Vec::with_capacity(dims);
        for row in &lattice {
            let r: Option<Vec<i64>> = row.iter().map(|x| x.to_i64()).collect();
            let r = r.ok_or(Error::CapExceeded { what: "module order", cap: element_cap })?;
            order = order
                .checked_mul(r[hnf.len()] as usize)
                .filter(|&o| o <= element_cap)
                .ok_or(Error::CapExceeded { what: "module order", cap: element_cap })?;
            hnf.push(r);
        }
        let radix: Vec<i64> = (0..dims).map(|i| hnf[i][i]).collect();
        let mut elements = Vec::with_capacity(order);
        for mut idx in 0..order {
            let mut x = vec![0i64; dims];
            for i in (0..dims).rev() {
                x[i] = (idx % radix[i] as usize) as i64;
                idx /= radix[i] as usize;
            }
            elements.push(x);
        }
        let mut lat = SubmoduleLattice {
            ambient: m.clone(),
            hnf,
            elements,
            subs: Vec::new(),
        };
        lat.enumerate(submodule_cap)?;
        Ok(lat)
    }

    fn words(&self) -> usize {
        self.elements.len().div_ceil(64)
    }

    fn index(&self, mut x: Vec<i64>) -> usize {
        for (i, row) in self.hnf.iter().enumerate() {
            let q = x[i].div_euclid(row[i]);
            if q != 0 {
                for (a, b) in x.iter_mut().zip(row) {
                    *a -= q * b;
                }
            }
        }
        x.iter().zip(&self.hnf).enumerate().fold(0usize, |acc, (i, (v, row))| acc * row[i] as usize + *v as usize)
    }

    fn add(&self, a: usize, b: usize) -> usize {
        let x = self.elements[a].iter().zip(&self.elements[b]).map(|(p, q)| p + q).collect();
        self.index(x)
    }

    /// `S + <x>`, given the element list of `S`.
    fn extend(&self, members: &[usize], bits: &[u64], x: usize) -> Bits {
        let mut out = bits.to_vec();
        let mut multiple = x;
        while !bit(bits, multiple) {
            for &s in members {
                set(&mut out, self.add(s, multiple));
            }
            multiple = self.add(multiple, x);
        }
        out
    }

    fn members(&self, bits: &[u64]) -> Vec<usize> {
        (0..self.elements.len()).filter(|&i| bit(bits, i)).collect()
    }

    fn enumerate(&mut self, cap: usize) -> Result<()> {
        let mut zero = vec![0u64; self.words()];
        set(&mut zero, 0);
        let mut seen: BTreeMap<Bits, ()> = BTreeMap::new();
        seen.insert(zero.clone(), ());
        self.subs.push((zero, Vec::new()));
        let mut next = 0;
        while next < self.subs.len() {
            let (bits, gens) = self.subs[next].clone();
            let members = self.members(&bits);
            for x in 0..self.elements.len() {
                if bit(&bits, x) {
                    continue;
                }
                let t = self.extend(&members, &bits, x);
                if seen.contains_key(&t) {
                    continue;
                }
                if self.subs.len() >= cap {
                    return Err(Error::CapExceeded { what: "submodule count", cap });
                }
                seen.insert(t.clone(), ());
                let mut g = gens.clone();
                g.push(x);
                self.subs.push((t, g));
            }
            next += 1;
        }
        Ok(())
    }

    pub fn ambient(&self) -> &FpModule {
        &self.ambient
    }

    /// `|M|`.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn len(&self) -> usize {
        self.subs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subs.is_empty()
    }

    /// Number of elements of submodule `i`.
    pub fn size(&self, i: usize) -> usize {
        self.subs[i].0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn element_row(&self, e: usize) -> Vec<Scalar> {
        let ring = self.ambient.ring();
        self.elements[e].iter().map(|&v| ring.from_i64(v)).collect()
    }

    pub fn submodule(&self, i: usize) -> Submodule {
        let ring = self.ambient.ring();
        let rows = self.subs[i].1.iter().map(|&e| self.element_row(e)).collect();
        let g = Matrix::from_rows(ring, self.ambient.generators(), rows).expect("ring elements");
        Submodule::new(self.ambient.clone(), g).expect("same ambient")
    }

    /// Index of the submodule generated by the given rows.
    pub fn locate(&self, gens: &Matrix) -> Result<usize> {
        let ring = self.ambient.ring();
        let mut bits = vec![0u64; self.words()];
        set(&mut bits, 0);
        for r in 0..gens.rows() {
            let x: Vec<i64> = gens
                .row(r)
                .iter()
                .map(|s| ring.lift_to_integer(s).and_then(|v| v.to_i64()).expect("small integer"))
                .collect();
            let x = self.index(x);
            let members = self.members(&bits);
            bits = self.extend(&members, &bits, x);
        }
        self.subs
            .iter()
            .position(|(b, _)| b == &bits)
            .ok_or_else(|| Error::InvariantViolation("generated submodule missing from the enumeration".into()))
    }

    /// Whether submodule `i` is contained in submodule `j`.
    pub fn contained(&self, i: usize, j: usize) -> bool {
        self.subs[i].0.iter().zip(&self.subs[j].0).all(|(a, b)| a & !b == 0)
    }
}

/// All submodules of a finite module over `Z`, `Z/n` or `F_p`.
pub fn enumerate_submodules(m: &FpModule) -> Result<Vec<Submodule>> {
    let lat = SubmoduleLattice::build(m, DEFAULT_ELEMENT_CAP, DEFAULT_SUBMODULE_CAP)?;
    Ok((0..lat.len()).map(|i| lat.submodule(i)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent count of subgroups of `(Z/p)^n`: Gaussian binomials.
    fn subspace_count(p: u64, n: u32) -> u64 {
        (0..=n)
            .map(|k| {
                let mut num = 1u64;
                let mut den = 1u64;
                for i in 0..k {
                    num *= p.pow(n - i) - 1;
                    den *= p.pow(i + 1) - 1;
                }
                num / den
            })
            .sum()
    }

    #[test]
    fn known_counts() {
        let z4 = Ring::integers_mod(4).unwrap();
        assert_eq!(enumerate_submodules(&FpModule::free(&z4, 1)).unwrap().len(), 3);
        let f2 = Ring::prime_field(2).unwrap();
        assert_eq!(enumerate_submodules(&FpModule::free(&f2, 2)).unwrap().len(), 5);
        for n in 1..=4 {
            assert_eq!(enumerate_submodules(&FpModule::free(&f2, n)).unwrap().len() as u64, subspace_count(2, n as u32));
        }
        let f3 = Ring::prime_field(3).unwrap();
        assert_eq!(enumerate_submodules(&FpModule::free(&f3, 3)).unwrap().len() as u64, subspace_count(3, 3));
        assert_eq!(enumerate_submodules(&FpModule::zero(&z4)).unwrap().len(), 1);
        // Z/12 over Z: one subgroup per divisor of 12.
        let z12 = FpModule::new(Matrix::from_ints(&Ring::Integers, 1, 1, &[12]).unwrap());
        assert_eq!(enumerate_submodules(&z12).unwrap().len(), 6);
        // Z/2 x Z/4 has 8 subgroups.
        let m = FpModule::new(Matrix::from_ints(&Ring::Integers, 2, 2, &[2, 0, 0, 4]).unwrap());
        assert_eq!(enumerate_submodules(&m).unwrap().len(), 8);
    }

    #[test]
    fn caps_and_infinite_modules() {
        assert!(enumerate_submodules(&FpModule::free(&Ring::Integers, 1)).is_err());
        assert!(enumerate_submodules(&FpModule::free(&Ring::Rationals, 1)).is_err());
        let f2 = Ring::prime_field(2).unwrap();
        assert!(matches!(
            enumerate_submodules(&FpModule::free(&f2, 13)),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn locate_and_containment() {
        let z4 = Ring::integers_mod(4).unwrap();
        let lat = SubmoduleLattice::build(&FpModule::free(&z4, 1), 64, 64).unwrap();
        let two = lat.locate(&Matrix::from_ints(&z4, 1, 1, &[2]).unwrap()).unwrap();
        let one = lat.locate(&Matrix::from_ints(&z4, 1, 1, &[3]).unwrap()).unwrap();
        assert_eq!(lat.size(two), 2);
        assert_eq!(lat.size(one), 4);
        assert!(lat.contained(two, one) && !lat.contained(one, two));
    }
}
