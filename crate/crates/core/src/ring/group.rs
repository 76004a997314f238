use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A finite group given by its Cayley table.
///
/// Elements are the indices `0..order`; `mul(s, t)` is the index of `st`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a Cayley table (row-major, `order * order` entries).
    pub fn from_cayley(name: impl Into<String>, order: usize, table: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidGroup("order must be positive".to_string()));
        }
        if table.len() != order * order {
            return Err(Error::InvalidGroup(format!(
                "expected {} table entries, found {}",
                order * order,
                table.len()
            )));
        }
        if let Some(bad) = table.iter().find(|&&x| x >= order) {
            return Err(Error::InvalidGroup(format!("entry {bad} out of range")));
        }
        let at = |s: usize, t: usize| table[s * order + t];

        let identity = (0..order)
            .find(|&e| (0..order).all(|s| at(e, s) == s && at(s, e) == s))
            .ok_or_else(|| Error::InvalidGroup("no identity element".to_string()))?;

        let mut inverses = vec![0; order];
        for (s, inv) in inverses.iter_mut().enumerate() {
            *inv = (0..order)
                .find(|&t| at(s, t) == identity && at(t, s) == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {s} has no inverse")))?;
        }

        for s in 0..order {
            for t in 0..order {
                let st = at(s, t);
                for u in 0..order {
                    if at(st, u) != at(s, at(t, u)) {
                        return Err(Error::InvalidGroup(format!(
                            "associativity fails at ({s}, {t}, {u})"
                        )));
                    }
                }
            }
        }

        Ok(FiniteGroup {
            name: name.into(),
            order,
            table,
            identity,
            inverses,
        })
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("C0 is not a group".to_string()));
        }
        let table = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        Self::from_cayley(format!("C{n}"), n, table)
    }

    /// The symmetric group on three letters.
    ///
    /// Element `i` is the permutation `PERMS[i]`; the product `st` applies `s` first.
    pub fn symmetric3() -> Self {
        const PERMS: [[usize; 3]; 6] = [
            [0, 1, 2],
            [1, 0, 2],
            [0, 2, 1],
            [2, 1, 0],
            [1, 2, 0],
            [2, 0, 1],
        ];
        let index = |p: [usize; 3]| PERMS.iter().position(|q| *q == p).unwrap();
        let mut table = Vec::with_capacity(36);
        for s in PERMS {
            for t in PERMS {
                table.push(index([t[s[0]], t[s[1]], t[s[2]]]));
            }
        }
        Self::from_cayley("S3", 6, table).expect("S3 table is a group law")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, s: usize, t: usize) -> usize {
        self.table[s * self.order + t]
    }

    pub fn inverse(&self, s: usize) -> usize {
        self.inverses[s]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }
}
