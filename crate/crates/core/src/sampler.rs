//! Seeded random matrices and scalars for the verification harnesses.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ring::{Matrix, Ring, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SamplerConfig {
    /// Number of instances per clause.
    pub samples: usize,
    /// Largest row or column count.
    pub max_dim: usize,
    /// Integer entries are drawn from `[-entry_bound, entry_bound]`.
    pub entry_bound: i64,
    /// Rational entries use denominators in `1..=denominator_bound`.
    pub denominator_bound: i64,
    /// Group-algebra coefficients over `Q` lie in `[-group_bound, group_bound]`.
    pub group_bound: i64,
    /// Probability (in percent) of drawing a low-rank product instead of a
    /// uniform matrix.
    pub low_rank_percent: u32,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        SamplerConfig {
            samples: 500,
            max_dim: 5,
            entry_bound: 9,
            denominator_bound: 3,
            group_bound: 2,
            low_rank_percent: 25,
        }
    }
}

/// Deterministic source of random algebraic data.
#[derive(Clone, Debug)]
pub struct RandomSampler {
    rng: ChaCha8Rng,
    seed: u64,
    config: SamplerConfig,
}

impl RandomSampler {
    pub fn new(seed: u64, config: SamplerConfig) -> Self {
        RandomSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            seed,
            config,
        }
    }

    pub fn seeded(seed: u64) -> Self {
        Self::new(seed, SamplerConfig::default())
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn config(&self) -> &SamplerConfig {
        &self.config
    }

    pub fn samples(&self) -> usize {
        self.config.samples
    }

    /// A sampler with an independent stream, for a sub-harness.
    pub fn fork(&mut self) -> RandomSampler {
        let seed = self.rng.gen();
        RandomSampler::new(seed, self.config.clone())
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// Uniform in `0..n`.
    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    /// Uniform in `lo..=hi`.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn chance(&mut self, percent: u32) -> bool {
        self.rng.gen_range(0..100) < percent
    }

    /// A dimension in `0..=max_dim`.
    pub fn dim(&mut self) -> usize {
        self.rng.gen_range(0..=self.config.max_dim)
    }

    /// A dimension in `1..=max_dim`.
    pub fn positive_dim(&mut self) -> usize {
        self.rng.gen_range(1..=self.config.max_dim.max(1))
    }

    pub fn scalar(&mut self, ring: &Ring) -> Scalar {
        let b = self.config.entry_bound;
        match ring {
            Ring::Integers => {
                if self.chance(15) {
                    ring.zero()
                } else {
                    Scalar::Int(BigInt::from(self.range(-b, b)))
                }
            }
            Ring::Rationals => {
                if self.chance(15) {
                    return ring.zero();
                }
                let n = self.range(-b, b);
                let d = self.range(1, self.config.denominator_bound.max(1));
                Scalar::Rat(BigRational::new(n.into(), d.into()))
            }
            Ring::PrimeField(n) | Ring::IntegersMod(n) => Scalar::Residue(self.rng.gen_range(0..*n)),
            Ring::GroupAlgebra { base, group } => {
                let g = group.order();
                let gb = self.config.group_bound;
                let coeffs = (0..g)
                    .map(|_| match &**base {
                        Ring::Rationals => base.from_i64(self.range(-gb, gb)),
                        other => self.scalar(other),
                    })
                    .collect();
                Scalar::Group(coeffs)
            }
            Ring::MatrixAmplification { base, k } => {
                Scalar::Block((0..k * k).map(|_| self.scalar(base)).collect())
            }
        }
    }

    /// An `n x m` matrix, sometimes a product through a smaller inner dimension.
    pub fn matrix(&mut self, ring: &Ring, n: usize, m: usize) -> Matrix {
        let inner_max = n.min(m);
        if inner_max > 0 && self.chance(self.config.low_rank_percent) {
            let r = self.index(inner_max);
            let left = self.uniform(ring, n, r);
            let right = self.uniform(ring, r, m);
            if let Ok(p) = left.mul(&right) {
                return p;
            }
        }
        self.uniform(ring, n, m)
    }

    pub fn uniform(&mut self, ring: &Ring, n: usize, m: usize) -> Matrix {
        Matrix::from_fn(ring, n, m, |_, _| self.scalar(ring))
    }

    /// A matrix of random shape.
    pub fn any_matrix(&mut self, ring: &Ring) -> Matrix {
        let (n, m) = (self.dim(), self.dim());
        self.matrix(ring, n, m)
    }

    /// A matrix with `m` columns and a random number of rows.
    pub fn any_matrix_with_cols(&mut self, ring: &Ring, m: usize) -> Matrix {
        let n = self.dim();
        self.matrix(ring, n, m)
    }

    /// Random combinations of the rows of `a`: a `k x a.rows()` coefficient
    /// matrix times `a`.
    pub fn combinations(&mut self, ring: &Ring, a: &Matrix, k: usize) -> Matrix {
        let c = self.uniform(ring, k, a.rows());
        c.mul(a).expect("same ring")
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        use rand::seq::SliceRandom;
        items.shuffle(&mut self.rng);
    }

    pub fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        self.shuffle(&mut p);
        p
    }
}
