//! The sofic bivariant dimension for a finite group acting on a finite set,
//! computed from the span of the translation relations.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::bivariant::bidim;
use crate::error::{ring_mismatch, Error, Result};
use crate::module::{FpModule, Submodule};
use crate::normal_form::field_rank;
use crate::rank::rk_group_vn;
use crate::report::{VerificationReport, Witness};
use crate::ring::{regular_rep, FiniteGroup, Matrix, Ring};
use crate::sampler::RandomSampler;
use crate::value::ExtendedValue;

/// Permutations `sigma_s` of `{0, .., size - 1}`, one per group element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SoficApproximation {
    group: FiniteGroup,
    size: usize,
    sigma: Vec<Vec<usize>>,
}

impl SoficApproximation {
    /// `X = G` with `sigma_s(x) = s x`.
    pub fn regular(group: &FiniteGroup) -> Self {
        let n = group.order();
        let sigma = (0..n).map(|s| (0..n).map(|x| group.mul(s, x)).collect()).collect();
        SoficApproximation {
            group: group.clone(),
            size: n,
            sigma,
        }
    }

    pub fn new(group: &FiniteGroup, size: usize, sigma: Vec<Vec<usize>>) -> Result<Self> {
        if size == 0 || sigma.len() != group.order() {
            return Err(Error::InvalidArgument("one permutation of a nonempty set per group element".into()));
        }
        for p in &sigma {
            let mut seen = vec![false; size];
            if p.len() != size || p.iter().any(|&x| x >= size || core::mem::replace(&mut seen[x], true)) {
                return Err(Error::InvalidArgument("sigma_s is not a permutation".into()));
            }
        }
        Ok(SoficApproximation {
            group: group.clone(),
            size,
            sigma,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn sigma(&self, s: usize) -> &[usize] {
        &self.sigma[s]
    }

    /// Fraction of points where `sigma_s sigma_t = sigma_st` for all `s, t`.
    pub fn multiplicativity(&self) -> ExtendedValue {
        let g = self.group.order();
        let good = (0..self.size)
            .filter(|&x| {
                (0..g).all(|s| (0..g).all(|t| self.sigma[s][self.sigma[t][x]] == self.sigma[self.group.mul(s, t)][x]))
            })
            .count();
        ExtendedValue::ratio(good as i64, self.size as i64)
    }

    /// Fraction of points moved apart by every pair of distinct elements.
    pub fn freeness(&self) -> ExtendedValue {
        let g = self.group.order();
        let good = (0..self.size)
            .filter(|&x| (0..g).all(|s| (s + 1..g).all(|t| self.sigma[s][x] != self.sigma[t][x])))
            .count();
        ExtendedValue::ratio(good as i64, self.size as i64)
    }
}

/// The value and whether `char k` divides `|G|`, where agreement with any
/// catalog rank function is not claimed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SoficValue {
    pub value: ExtendedValue,
    pub modular: bool,
}

fn modular(k: &Ring, group: &FiniteGroup) -> bool {
    matches!(k, Ring::PrimeField(p) if (group.order() as u64).is_multiple_of(*p))
}

/// `dim_k` of the image of `A^X` in `M^X / span(d_x b - d_{sigma_s x}(s b))`,
/// divided by `|X|`, with `A` the generator rows of `S`, `b` running over a
/// `k`-basis of `k[G]^m` and `s` over all of `G`.
pub fn sofic_bidim(k: &Ring, approx: &SoficApproximation, s: &Submodule) -> Result<SoficValue> {
    let group = &approx.group;
    let ring = Ring::group_algebra(k.clone(), group.clone())?;
    if s.ring() != &ring {
        return Err(ring_mismatch(&ring, s.ring()));
    }
    let g = group.order();
    let m = s.ambient().generators();
    let block = m * g;
    let cols = approx.size * block;
    let rel = regular_rep(s.ambient().relations())?;
    let gens = regular_rep(s.generators())?;

    let mut rows: Vec<Matrix> = Vec::new();
    for x in 0..approx.size {
        let place = |src: &Matrix| {
            Matrix::from_fn(k, src.rows(), cols, |i, c| {
                if c / block == x {
                    src.get(i, c % block).clone()
                } else {
                    k.zero()
                }
            })
        };
        rows.push(place(&rel));
        let mut sofic = Matrix::zeros(k, (g - 1) * block, cols);
        let mut r = 0;
        for t in (0..g).filter(|&t| t != group.identity()) {
            let y = approx.sigma[t][x];
            for j in 0..m {
                for h in 0..g {
                    sofic.set(r, x * block + j * g + h, k.one());
                    let c = y * block + j * g + group.mul(t, h);
                    sofic.set(r, c, k.sub(sofic.get(r, c), &k.one()));
                    r += 1;
                }
            }
        }
        rows.push(sofic);
    }
    let mut span = Matrix::zeros(k, 0, cols);
    for r in rows {
        span = span.vstack(&r)?;
    }
    let base = field_rank(&span)?;

    // The rows of S's generators themselves: coefficient rows at s = e.
    let e = group.identity();
    let a_rows: Vec<usize> = (0..s.generators().rows()).map(|i| i * g + e).collect();
    let a = gens.select_rows(&a_rows);
    let mut with_a = span;
    for x in 0..approx.size {
        with_a = with_a.vstack(&Matrix::from_fn(k, a.rows(), cols, |i, c| {
            if c / block == x {
                a.get(i, c % block).clone()
            } else {
                k.zero()
            }
        }))?;
    }
    let total = field_rank(&with_a)?;
    Ok(SoficValue {
        value: ExtendedValue::ratio((total - base) as i64, approx.size as i64),
        modular: modular(k, group),
    })
}

/// Compares [`sofic_bidim`] for the regular approximation with `bidim` under
/// the von Neumann rank on sampled pairs.
pub fn sofic_vs_vn(k: &Ring, group: &FiniteGroup, sampler: &mut RandomSampler) -> VerificationReport {
    let label = format!("vN({k},{})", group.name());
    let mut report = VerificationReport::new("sofic:vs_vn", label, sampler.seed());
    if modular(k, group) {
        report
            .notes
            .push(("modular".into(), format!("char {k} divides |{}|; agreement is not asserted", group.name())));
        return report;
    }
    let (ring, vn) = match Ring::group_algebra(k.clone(), group.clone()).and_then(|r| Ok((r, rk_group_vn(k, group)?))) {
        Ok(p) => p,
        Err(e) => {
            report
                .clause_mut("agreement")
                .record(false, || Witness::new(format!("evaluation failed: {e}")));
            return report;
        }
    };
    let approx = SoficApproximation::regular(group);
    let dim = sampler.config().max_dim.clamp(1, 3);
    for i in 0..sampler.samples() {
        let s = match i {
            0 => Submodule::full(FpModule::free(&ring, 1)),
            1 => Submodule::zero(FpModule::free(&ring, 1)),
            _ => {
                let m = 1 + sampler.index(dim);
                let n = sampler.index(dim + 1);
                let r = sampler.index(dim + 1);
                let a = sampler.matrix(&ring, n, m);
                let gens = sampler.matrix(&ring, r, m);
                Submodule::new(FpModule::new(a), gens).expect("same ring and width")
            }
        };
        let out = sofic_bidim(k, &approx, &s).and_then(|x| Ok((x.value, bidim(&vn, &s)?.value)));
        let witness = |rel: &str, vals: &[(&str, &ExtendedValue)]| {
            let mut w = Witness::new(rel)
                .matrix("relations", s.ambient().relations())
                .matrix("generators", s.generators());
            for (n, v) in vals {
                w = w.value(n, v);
            }
            w
        };
        match out {
            Ok((sofic, closed)) => {
                report.clause_mut("agreement").record(sofic == closed, || {
                    witness("sofic dim(S|M) = vN dim(S|M)", &[("sofic", &sofic), ("vN", &closed)])
                });
                let cap = ExtendedValue::from_int(s.ambient().generators() as i64);
                report
                    .clause_mut("bound")
                    .record(sofic <= cap, || witness("0 <= sofic dim(S|M) <= dim_k(M^X)/|X|", &[("sofic", &sofic)]));
            }
            Err(e) => report
                .clause_mut("agreement")
                .record(false, || witness(&format!("evaluation failed: {e}"), &[])),
        }
    }
    report
}
