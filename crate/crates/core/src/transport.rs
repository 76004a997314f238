//! Moving rank functions along ring maps: direct limits, pushforward along
//! built-in epimorphisms, the range test for pullbacks, and localizations of
//! `Z` at a single integer.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::bivariant::{bidim, ext_map_rank};
use crate::error::{ring_mismatch, Error, Result};
use crate::module::{direct_sum, FpMap, FpModule, Submodule};
use crate::normal_form::rows_contained;
use crate::rank::{module_dim, rk_pullback, MatrixRankFn};
use crate::report::{VerificationReport, Witness};
use crate::ring::{Matrix, Ring, RingHom, Scalar};
use crate::sampler::RandomSampler;
use crate::value::ExtendedValue;

/// Default number of equal trailing values that counts as stabilized.
pub const DEFAULT_STABILIZATION: usize = 3;

/// `M_0 -> M_1 -> ... -> M_T` with compatible maps `alpha_j : M -> M_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedSystem {
    ring: Ring,
    stages: Vec<FpModule>,
    transitions: Vec<FpMap>,
    source: FpModule,
    maps: Vec<FpMap>,
}

impl DirectedSystem {
    /// Checks shapes and `alpha_j beta_j = alpha_{j+1}` modulo the relations
    /// of `M_{j+1}`.
    pub fn new(source: FpModule, stages: Vec<FpModule>, transitions: Vec<FpMap>, maps: Vec<FpMap>) -> Result<Self> {
        let ring = source.ring().clone();
        if stages.is_empty() || transitions.len() + 1 != stages.len() || maps.len() != stages.len() {
            return Err(Error::Incompatible(format!(
                "{} stages need {} transitions and {} maps, got {} and {}",
                stages.len(),
                stages.len().saturating_sub(1),
                stages.len(),
                transitions.len(),
                maps.len()
            )));
        }
        for (j, stage) in stages.iter().enumerate() {
            if stage.ring() != &ring {
                return Err(ring_mismatch(&ring, stage.ring()));
            }
            if maps[j].domain() != &source || maps[j].codomain() != stage {
                return Err(Error::Incompatible(format!("alpha_{j} does not go from the source to stage {j}")));
            }
        }
        for (j, beta) in transitions.iter().enumerate() {
            if beta.domain() != &stages[j] || beta.codomain() != &stages[j + 1] {
                return Err(Error::Incompatible(format!("beta_{j} does not join stages {j} and {}", j + 1)));
            }
            let diff = maps[j].matrix().mul(beta.matrix())?.sub(maps[j + 1].matrix())?;
            if !rows_contained(&diff, stages[j + 1].relations())? {
                return Err(Error::Incompatible(format!("alpha_{j} beta_{j} differs from alpha_{}", j + 1)));
            }
        }
        Ok(DirectedSystem {
            ring,
            stages,
            transitions,
            source,
            maps,
        })
    }

    /// `R^m --F--> R^m --F--> ...` up to stage `horizon`, with `alpha_0 = id`
    /// and `alpha_j = F^j`.
    pub fn multiplication(f: &Matrix, horizon: usize) -> Result<Self> {
        let ring = f.ring().clone();
        let m = f.rows();
        if f.cols() != m {
            return Err(Error::ShapeMismatch {
                op: "directed system",
                detail: format!("transition is {}x{}, not square", m, f.cols()),
            });
        }
        let free = FpModule::free(&ring, m);
        let stages = vec![free.clone(); horizon + 1];
        let transitions = vec![FpMap::free(f.clone()); horizon];
        let mut maps = Vec::with_capacity(horizon + 1);
        let mut power = Matrix::identity(&ring, m);
        for _ in 0..=horizon {
            maps.push(FpMap::free(power.clone()));
            power = power.mul(f)?;
        }
        DirectedSystem::new(free, stages, transitions, maps)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn stages(&self) -> &[FpModule] {
        &self.stages
    }

    pub fn transitions(&self) -> &[FpMap] {
        &self.transitions
    }

    pub fn source(&self) -> &FpModule {
        &self.source
    }

    pub fn maps(&self) -> &[FpMap] {
        &self.maps
    }

    /// Index of the last stage.
    pub fn horizon(&self) -> usize {
        self.stages.len() - 1
    }
}

/// Stage values of `dim(im alpha_j | M_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitEstimate {
    pub values: Vec<ExtendedValue>,
    /// The last value, an upper bound for the limit.
    pub inf_observed: ExtendedValue,
    /// The last `c` values agree. A heuristic, not a proof.
    pub stabilized: bool,
}

pub fn limit_relative_dim(rk: &MatrixRankFn, d: &DirectedSystem) -> Result<LimitEstimate> {
    limit_relative_dim_with(rk, d, DEFAULT_STABILIZATION)
}

/// As [`limit_relative_dim`] with `c` trailing values for the stabilization flag.
pub fn limit_relative_dim_with(rk: &MatrixRankFn, d: &DirectedSystem, c: usize) -> Result<LimitEstimate> {
    if rk.ring() != d.ring() {
        return Err(ring_mismatch(rk.ring(), d.ring()));
    }
    let mut values: Vec<ExtendedValue> = Vec::with_capacity(d.stages.len());
    for (j, alpha) in d.maps.iter().enumerate() {
        let v = ext_map_rank(rk, alpha)?;
        if let Some(prev) = values.last() {
            if v > *prev {
                return Err(Error::InvariantViolation(format!(
                    "stage values increase at j = {j}: {prev} then {v}"
                )));
            }
        }
        values.push(v);
    }
    let inf_observed = values.last().cloned().expect("at least one stage");
    let c = c.max(1);
    let stabilized = values.len() >= c && values[values.len() - c..].iter().all(|v| *v == inf_observed);
    Ok(LimitEstimate {
        values,
        inf_observed,
        stabilized,
    })
}

/// A ring `S` viewed as a cyclic left `R`-module `R^d / relations` through
/// a surjection `pi : R -> S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RModuleStructureOnS {
    pi: RingHom,
    s_as_r: FpModule,
    unit_row: Matrix,
    /// Right multiplication by each `R`-module generator of `S`.
    mult_tables: Vec<Matrix>,
}

impl RModuleStructureOnS {
    /// `Z -> Z/n` or `Z -> F_p`: `S = Z / nZ`.
    pub fn quotient_of_integers(target: &Ring) -> Result<Self> {
        let pi = RingHom::reduce_mod(target.clone())?;
        let n = target.modulus().expect("checked by reduce_mod") as i64;
        let z = Ring::Integers;
        Self::new(
            pi,
            FpModule::new(Matrix::from_ints(&z, 1, 1, &[n])?),
            Matrix::identity(&z, 1),
            vec![Matrix::identity(&z, 1)],
        )
    }

    /// `k[G] -> k`: `S = k[G] / (g - e : g in G)`.
    pub fn augmentation(source: &Ring) -> Result<Self> {
        let pi = RingHom::augmentation(source.clone())?;
        let Ring::GroupAlgebra { base, group } = source else {
            unreachable!("augmentation checked the ring");
        };
        let rows = (0..group.order())
            .filter(|&g| g != group.identity())
            .map(|g| {
                let mut c = vec![base.zero(); group.order()];
                c[g] = base.one();
                c[group.identity()] = base.neg(&base.one());
                vec![Scalar::Group(c)]
            })
            .collect();
        Self::new(
            pi,
            FpModule::new(Matrix::from_rows(source, 1, rows)?),
            Matrix::identity(source, 1),
            vec![Matrix::identity(source, 1)],
        )
    }

    /// Checks that right multiplication by `1_S` fixes every generator
    /// modulo the relations.
    pub fn new(pi: RingHom, s_as_r: FpModule, unit_row: Matrix, mult_tables: Vec<Matrix>) -> Result<Self> {
        let r = pi.source();
        let d = s_as_r.generators();
        if s_as_r.ring() != r || unit_row.ring() != r {
            return Err(ring_mismatch(r, s_as_r.ring()));
        }
        if unit_row.rows() != 1 || unit_row.cols() != d || mult_tables.iter().any(|t| t.rows() != d || t.cols() != d) {
            return Err(Error::InvalidArgument("structure matrices do not match the module".into()));
        }
        let Some(unit) = mult_tables.first() else {
            return Err(Error::InvalidArgument("no multiplication tables".into()));
        };
        let diff = unit.sub(&Matrix::identity(r, d))?;
        if !rows_contained(&diff, s_as_r.relations())? {
            return Err(Error::InvalidArgument("multiplication by 1 is not the identity".into()));
        }
        Ok(RModuleStructureOnS {
            pi,
            s_as_r,
            unit_row,
            mult_tables,
        })
    }

    pub fn pi(&self) -> &RingHom {
        &self.pi
    }

    pub fn s_as_r(&self) -> &FpModule {
        &self.s_as_r
    }

    pub fn unit_row(&self) -> &Matrix {
        &self.unit_row
    }

    pub fn mult_tables(&self) -> &[Matrix] {
        &self.mult_tables
    }

    /// Name in the CLI grammar, e.g. `Z->Zmod(4)` or `aug:Q[C3]`.
    pub fn label(&self) -> String {
        match self.pi.rule() {
            crate::ring::HomRule::Augmentation => format!("aug:{}", self.pi.source()),
            _ => format!("{}->{}", self.pi.source(), self.pi.target()),
        }
    }

    /// Some `r` with `pi(r) = s`.
    fn lift(&self, s: &Scalar) -> Scalar {
        let r = self.pi.source();
        match r {
            Ring::Integers => Scalar::Int(self.pi.target().lift_to_integer(s).expect("residue")),
            Ring::GroupAlgebra { base, group } => {
                let mut c = vec![base.zero(); group.order()];
                c[group.identity()] = s.clone();
                Scalar::Group(c)
            }
            _ => unreachable!("no other built-in structures"),
        }
    }

    /// An `S`-matrix `B` as the `R`-linear map `S^p -> S^q`, `x |-> x B`.
    pub fn as_r_map(&self, b: &Matrix) -> Result<FpMap> {
        if b.ring() != self.pi.target() {
            return Err(ring_mismatch(self.pi.target(), b.ring()));
        }
        let r = self.pi.source();
        let d = self.s_as_r.generators();
        let table = &self.mult_tables[0];
        let mut f = Matrix::zeros(r, b.rows() * d, b.cols() * d);
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                let block = table.scale_left(&self.lift(b.get(i, j)));
                for u in 0..d {
                    for v in 0..d {
                        f.set(i * d + u, j * d + v, block.get(u, v).clone());
                    }
                }
            }
        }
        FpMap::new(self.power(b.rows())?, self.power(b.cols())?, f)
    }

    fn power(&self, p: usize) -> Result<FpModule> {
        let mut m = FpModule::free(self.pi.source(), 0);
        for _ in 0..p {
            m = direct_sum(&m, &self.s_as_r)?;
        }
        Ok(m)
    }
}

/// `rk_S(B) = rk_R(B as an R-map) / rk_R(id_S)`.
pub fn pushforward(rk: &MatrixRankFn, st: &RModuleStructureOnS) -> Result<MatrixRankFn> {
    if rk.ring() != st.pi.source() {
        return Err(ring_mismatch(st.pi.source(), rk.ring()));
    }
    let norm = module_dim(rk, &st.s_as_r)?;
    let norm = match norm.finite() {
        Some(n) if n.is_positive() => n.clone(),
        _ => {
            return Err(Error::InvalidArgument(format!(
                "rk(id_S) = {norm}; pushforward needs a finite positive value"
            )))
        }
    };
    let scale = BigRational::one() / norm;
    let label = format!("pushforward({},{})", st.label(), rk.label());
    let (rk, st) = (rk.clone(), st.clone());
    Ok(MatrixRankFn::custom(st.pi.target().clone(), label, move |b| {
        Ok(ext_map_rank(&rk, &st.as_r_map(b)?)?.scale(&scale))
    }))
}

/// Whether `rk` is pulled back from `S`: `rk(pi) = rk(id_S) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpiRange {
    pub in_image: bool,
    pub rk_pi: ExtendedValue,
    pub rk_id_s: ExtendedValue,
}

pub fn epi_range_test(rk: &MatrixRankFn, st: &RModuleStructureOnS) -> Result<EpiRange> {
    if rk.ring() != st.pi.source() {
        return Err(ring_mismatch(st.pi.source(), rk.ring()));
    }
    let rk_id_s = module_dim(rk, &st.s_as_r)?;
    let image = Submodule::new(st.s_as_r.clone(), st.unit_row.clone())?;
    let rk_pi = bidim(rk, &image)?.value;
    let one = ExtendedValue::one();
    Ok(EpiRange {
        in_image: rk_pi == one && rk_id_s == one,
        rk_pi,
        rk_id_s,
    })
}

/// Compares `rk_S(B)` with the extended rank of `B` as an `R`-map under
/// `pi^*(rk_S)`.
pub fn pullback_restriction_check(
    rk_s: &MatrixRankFn,
    st: &RModuleStructureOnS,
    sampler: &mut RandomSampler,
) -> VerificationReport {
    let mut report = VerificationReport::new(format!("restriction:{}", st.label()), rk_s.label(), sampler.seed());
    let rk_r = match rk_pullback(&st.pi, rk_s) {
        Ok(r) => r,
        Err(e) => {
            report
                .clause_mut("restriction")
                .record(false, || Witness::new(format!("evaluation failed: {e}")));
            return report;
        }
    };
    let s = st.pi.target().clone();
    for i in 0..sampler.samples() {
        let b = match i {
            0 => Matrix::identity(&s, 1),
            1 => Matrix::zeros(&s, 1, 1),
            _ => sampler.any_matrix(&s),
        };
        let both = rk_s
            .evaluate(&b)
            .and_then(|l| Ok((l, ext_map_rank(&rk_r, &st.as_r_map(&b)?)?)));
        match both {
            Ok((l, r)) => report.clause_mut("restriction").record(l == r, || {
                Witness::new("rk_S(B) = rk_R(B)")
                    .matrix("B", &b)
                    .value("rk_S(B)", &l)
                    .value("rk_R(B)", &r)
            }),
            Err(e) => report
                .clause_mut("restriction")
                .record(false, || Witness::new(format!("evaluation failed: {e}")).matrix("B", &b)),
        }
    }
    report
}

/// An `R`-matrix with entries in `[-bound, bound]`, at most 2x2, on which the
/// pullbacks of two `S` rank functions differ.
pub fn injectivity_witness(
    rk1: &MatrixRankFn,
    rk2: &MatrixRankFn,
    pi: &RingHom,
    bound: i64,
) -> Result<Option<(Matrix, ExtendedValue, ExtendedValue)>> {
    let p1 = rk_pullback(pi, rk1)?;
    let p2 = rk_pullback(pi, rk2)?;
    let r = pi.source();
    if r != &Ring::Integers {
        return Err(Error::UnsupportedRing {
            op: "injectivity_witness",
            ring: format!("{r}"),
        });
    }
    let width = (2 * bound + 1) as usize;
    for n in 1..=2usize {
        let cells = n * n;
        let total = width.pow(cells as u32);
        for mut idx in 0..total {
            let mut v = Vec::with_capacity(cells);
            for _ in 0..cells {
                v.push((idx % width) as i64 - bound);
                idx /= width;
            }
            let a = Matrix::from_ints(r, n, n, &v)?;
            let (x, y) = (p1.evaluate(&a)?, p2.evaluate(&a)?);
            if x != y {
                return Ok(Some((a, x, y)));
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    InImage,
    Excluded,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::InImage => "true",
            Verdict::Excluded => "false",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OreOutcome {
    pub verdict: Verdict,
    pub rk_pi: ExtendedValue,
    pub values: Vec<ExtendedValue>,
}

/// Is `rk` over `Z` pulled back from `Z[1/m]`? It is iff `rk(m) = 1`; the
/// stage values `rk(m^j)` for `j <= horizon` are reported either way.
pub fn ore_localization_test(rk: &MatrixRankFn, m: i64, horizon: usize) -> Result<OreOutcome> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!("localization needs m >= 2, got {m}")));
    }
    if horizon < 1 {
        return Err(Error::InvalidArgument("horizon must be at least 1".into()));
    }
    if rk.ring() != &Ring::Integers {
        return Err(ring_mismatch(&Ring::Integers, rk.ring()));
    }
    let f = Matrix::from_ints(&Ring::Integers, 1, 1, &[m])?;
    let est = limit_relative_dim(rk, &DirectedSystem::multiplication(&f, horizon)?)?;
    let one = ExtendedValue::one();
    let verdict = if est.values[1] == one {
        if est.inf_observed != one {
            return Err(Error::InvariantViolation(format!(
                "rk({m}) = 1 but the stage values fall to {}",
                est.inf_observed
            )));
        }
        Verdict::InImage
    } else if est.inf_observed < one {
        Verdict::Excluded
    } else {
        Verdict::Inconclusive
    };
    Ok(OreOutcome {
        verdict,
        rk_pi: est.inf_observed,
        values: est.values,
    })
}

/// Localization at every nonzero integer, i.e. `Q`: runs
/// [`ore_localization_test`] for each `m` in `2..=bound` and stops at the
/// first exclusion.
pub fn rational_localization_test(rk: &MatrixRankFn, bound: i64, horizon: usize) -> Result<(Verdict, Option<i64>)> {
    for m in 2..=bound {
        let out = ore_localization_test(rk, m, horizon)?;
        if out.verdict != Verdict::InImage {
            return Ok((out.verdict, Some(m)));
        }
    }
    Ok((Verdict::InImage, None))
}

/// `(h2 . h1)^* rk = h1^* h2^* rk` on sampled matrices.
pub fn check_pullback_functoriality(
    rk: &MatrixRankFn,
    h1: &RingHom,
    h2: &RingHom,
    sampler: &mut RandomSampler,
) -> VerificationReport {
    let mut report = VerificationReport::new("transport:functoriality", rk.label(), sampler.seed());
    let built = RingHom::compose(h1, h2).and_then(|c| {
        let nested = rk_pullback(h1, &rk_pullback(h2, rk)?)?;
        Ok((rk_pullback(&c, rk)?, nested))
    });
    let (direct, nested) = match built {
        Ok(p) => p,
        Err(e) => {
            report
                .clause_mut("functoriality")
                .record(false, || Witness::new(format!("evaluation failed: {e}")));
            return report;
        }
    };
    for _ in 0..sampler.samples() {
        let a = sampler.any_matrix(h1.source());
        let out = direct.evaluate(&a).and_then(|x| Ok((x, nested.evaluate(&a)?)));
        match out {
            Ok((x, y)) => report.clause_mut("functoriality").record(x == y, || {
                Witness::new("composite pullback = iterated pullback")
                    .matrix("A", &a)
                    .value("composite", &x)
                    .value("iterated", &y)
            }),
            Err(e) => report
                .clause_mut("functoriality")
                .record(false, || Witness::new(format!("evaluation failed: {e}")).matrix("A", &a)),
        }
    }
    report
}

/// Pulling `rk_morita(rk, k)` back along `r |-> r I_k` returns `rk`.
pub fn check_morita_round_trip(rk: &MatrixRankFn, k: usize, sampler: &mut RandomSampler) -> VerificationReport {
    let mut report = VerificationReport::new("transport:morita", rk.label(), sampler.seed());
    let back = RingHom::diagonal_embedding(rk.ring().clone(), k)
        .and_then(|d| rk_pullback(&d, &crate::rank::rk_morita(rk, k)?));
    let back = match back {
        Ok(b) => b,
        Err(e) => {
            report
                .clause_mut("morita_round_trip")
                .record(false, || Witness::new(format!("evaluation failed: {e}")));
            return report;
        }
    };
    for _ in 0..sampler.samples() {
        let a = sampler.any_matrix(rk.ring());
        let out = rk.evaluate(&a).and_then(|x| Ok((x, back.evaluate(&a)?)));
        match out {
            Ok((x, y)) => report.clause_mut("morita_round_trip").record(x == y, || {
                Witness::new("rk(A) = rk_morita(diag(A))")
                    .matrix("A", &a)
                    .value("rk(A)", &x)
                    .value("round trip", &y)
            }),
            Err(e) => report
                .clause_mut("morita_round_trip")
                .record(false, || Witness::new(format!("evaluation failed: {e}")).matrix("A", &a)),
        }
    }
    report
}

/// `n` as a one-by-one integer matrix.
pub fn integer_scalar(n: i64) -> Matrix {
    Matrix::new(Ring::Integers, 1, 1, vec![Scalar::Int(BigInt::from(n))]).expect("1x1")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rank::{rk_field, rk_zmod_pk};
    use crate::report::Status;
    use crate::ring::FiniteGroup;
    use crate::sampler::SamplerConfig;

    fn fp(p: u64) -> Ring {
        Ring::prime_field(p).unwrap()
    }

    fn via(p: u64) -> MatrixRankFn {
        rk_pullback(&RingHom::reduce_mod(fp(p)).unwrap(), &rk_field(&fp(p)).unwrap()).unwrap()
    }

    fn rk_q() -> MatrixRankFn {
        rk_pullback(&RingHom::include_integers_in_rationals(), &rk_field(&Ring::Rationals).unwrap()).unwrap()
    }

    fn sampler(seed: u64, samples: usize) -> RandomSampler {
        RandomSampler::new(
            seed,
            SamplerConfig {
                samples,
                max_dim: 3,
                ..SamplerConfig::default()
            },
        )
    }

    fn ints(v: &[i64]) -> Vec<ExtendedValue> {
        v.iter().map(|&x| ExtendedValue::from_int(x)).collect()
    }

    #[test]
    fn limits_of_multiplication_by_two() {
        let two = integer_scalar(2);
        let d = DirectedSystem::multiplication(&two, 5).unwrap();
        let e = limit_relative_dim(&via(3), &d).unwrap();
        assert_eq!(e.values, ints(&[1, 1, 1, 1, 1, 1]));
        assert!(e.stabilized);
        let e = limit_relative_dim(&via(2), &d).unwrap();
        assert_eq!(e.values, ints(&[1, 0, 0, 0, 0, 0]));
        assert_eq!(e.inf_observed, ExtendedValue::zero());

        let id = DirectedSystem::multiplication(&Matrix::identity(&Ring::Integers, 2), 3).unwrap();
        let e = limit_relative_dim(&rk_q(), &id).unwrap();
        assert_eq!(e.values, ints(&[2, 2, 2, 2]));
        assert!(e.stabilized);
        assert!(!limit_relative_dim_with(&rk_q(), &DirectedSystem::multiplication(&two, 1).unwrap(), 3)
            .unwrap()
            .stabilized);
    }

    #[test]
    fn incompatible_systems_are_rejected() {
        let z = FpModule::free(&Ring::Integers, 1);
        let two = FpMap::free(integer_scalar(2));
        let bad = DirectedSystem::new(
            z.clone(),
            vec![z.clone(), z.clone()],
            vec![two.clone()],
            vec![FpMap::free(integer_scalar(1)), FpMap::free(integer_scalar(3))],
        );
        assert!(matches!(bad, Err(Error::Incompatible(_))));
        // Compatible once the target stage is Z/2... only modulo relations.
        let z2 = FpModule::new(integer_scalar(2));
        let ok = DirectedSystem::new(
            z.clone(),
            vec![z.clone(), z2.clone()],
            vec![FpMap::new(z.clone(), z2.clone(), integer_scalar(1)).unwrap()],
            vec![FpMap::free(integer_scalar(1)), FpMap::new(z, z2, integer_scalar(3)).unwrap()],
        );
        assert!(ok.is_ok());
    }

    #[test]
    fn pushforward_examples() {
        let z2 = RModuleStructureOnS::quotient_of_integers(&fp(2)).unwrap();
        let via2 = via(2);
        let push = pushforward(&via2, &z2).unwrap();
        let s = fp(2);
        assert_eq!(push.evaluate(&Matrix::from_ints(&s, 1, 1, &[1]).unwrap()).unwrap(), ExtendedValue::one());
        assert_eq!(push.evaluate(&Matrix::from_ints(&s, 1, 1, &[0]).unwrap()).unwrap(), ExtendedValue::zero());

        let z4 = Ring::integers_mod(4).unwrap();
        let st = RModuleStructureOnS::quotient_of_integers(&z4).unwrap();
        let direct = rk_zmod_pk(2, 2).unwrap();
        let push = pushforward(&rk_pullback(st.pi(), &direct).unwrap(), &st).unwrap();
        let two = Matrix::from_ints(&z4, 1, 1, &[2]).unwrap();
        assert_eq!(push.evaluate(&two).unwrap(), ExtendedValue::ratio(1, 2));
        let mut s = sampler(3, 100);
        for _ in 0..100 {
            let b = s.any_matrix(&z4);
            assert_eq!(push.evaluate(&b).unwrap(), direct.evaluate(&b).unwrap());
        }

        assert!(pushforward(&rk_q(), &z2).is_err());
    }

    #[test]
    fn range_test_examples() {
        for p in [2, 3, 5] {
            let st = RModuleStructureOnS::quotient_of_integers(&fp(p)).unwrap();
            let r = epi_range_test(&via(p), &st).unwrap();
            assert_eq!(r, EpiRange { in_image: true, rk_pi: ExtendedValue::one(), rk_id_s: ExtendedValue::one() });
            for q in [2, 3, 5].into_iter().filter(|&q| q != p) {
                let r = epi_range_test(&via(q), &st).unwrap();
                assert!(!r.in_image);
                assert_eq!((r.rk_pi, r.rk_id_s), (ExtendedValue::zero(), ExtendedValue::zero()));
            }
            assert!(!epi_range_test(&rk_q(), &st).unwrap().in_image);
        }
        let z4 = Ring::integers_mod(4).unwrap();
        let st = RModuleStructureOnS::quotient_of_integers(&z4).unwrap();
        let rk = rk_pullback(st.pi(), &rk_zmod_pk(2, 2).unwrap()).unwrap();
        assert!(epi_range_test(&rk, &st).unwrap().in_image);

        let qc3 = Ring::group_algebra(Ring::Rationals, FiniteGroup::cyclic(3).unwrap()).unwrap();
        let aug = RModuleStructureOnS::augmentation(&qc3).unwrap();
        assert_eq!(aug.label(), "aug:GroupRing(Q,C3)");
        let rk = rk_pullback(aug.pi(), &rk_field(&Ring::Rationals).unwrap()).unwrap();
        assert!(epi_range_test(&rk, &aug).unwrap().in_image);
        let vn = crate::rank::rk_group_vn(&Ring::Rationals, &FiniteGroup::cyclic(3).unwrap()).unwrap();
        let r = epi_range_test(&vn, &aug).unwrap();
        assert!(!r.in_image);
        assert_eq!(r.rk_id_s, ExtendedValue::ratio(1, 3));
    }

    #[test]
    fn restriction_matches() {
        let z4 = Ring::integers_mod(4).unwrap();
        let st = RModuleStructureOnS::quotient_of_integers(&z4).unwrap();
        let r = pullback_restriction_check(&rk_zmod_pk(2, 2).unwrap(), &st, &mut sampler(1, 100));
        assert_eq!(r.clause("restriction").unwrap().status, Status::Pass);
        let st = RModuleStructureOnS::quotient_of_integers(&fp(3)).unwrap();
        assert!(pullback_restriction_check(&rk_field(&fp(3)).unwrap(), &st, &mut sampler(2, 100)).passed());
        let qs3 = Ring::group_algebra(Ring::Rationals, FiniteGroup::symmetric3()).unwrap();
        let aug = RModuleStructureOnS::augmentation(&qs3).unwrap();
        assert!(pullback_restriction_check(&rk_field(&Ring::Rationals).unwrap(), &aug, &mut sampler(3, 60)).passed());
    }

    #[test]
    fn pullback_is_injective_on_z4() {
        let z4 = Ring::integers_mod(4).unwrap();
        let f2 = fp(2);
        let through = rk_pullback(
            &RingHom::reduce_between_quotients(z4.clone(), f2.clone()).unwrap(),
            &rk_field(&f2).unwrap(),
        )
        .unwrap();
        let pi = RingHom::reduce_mod(z4).unwrap();
        let (a, x, y) = injectivity_witness(&rk_zmod_pk(2, 2).unwrap(), &through, &pi, 4).unwrap().unwrap();
        assert_eq!(a, integer_scalar(-2));
        assert_eq!((x, y), (ExtendedValue::ratio(1, 2), ExtendedValue::zero()));
        assert!(injectivity_witness(&through, &through, &pi, 1).unwrap().is_none());
    }

    #[test]
    fn ore_examples() {
        let out = ore_localization_test(&via(3), 2, 6).unwrap();
        assert_eq!((out.verdict, out.rk_pi.clone()), (Verdict::InImage, ExtendedValue::one()));
        assert_eq!(out.values, ints(&[1; 7]));
        let out = ore_localization_test(&via(2), 2, 6).unwrap();
        assert_eq!((out.verdict, out.rk_pi.clone()), (Verdict::Excluded, ExtendedValue::zero()));
        assert_eq!(out.values, ints(&[1, 0, 0, 0, 0, 0, 0]));
        assert_eq!(ore_localization_test(&rk_q(), 2, 6).unwrap().verdict, Verdict::InImage);
        assert!(ore_localization_test(&rk_q(), 1, 6).is_err());
        assert_eq!(rational_localization_test(&rk_q(), 12, 3).unwrap(), (Verdict::InImage, None));
        assert_eq!(rational_localization_test(&via(5), 12, 3).unwrap(), (Verdict::Excluded, Some(5)));
    }

    #[test]
    fn functoriality_and_morita() {
        let z12 = Ring::integers_mod(12).unwrap();
        let z4 = Ring::integers_mod(4).unwrap();
        let h1 = RingHom::reduce_mod(z12.clone()).unwrap();
        let h2 = RingHom::reduce_between_quotients(z12, z4).unwrap();
        let r = check_pullback_functoriality(&rk_zmod_pk(2, 2).unwrap(), &h1, &h2, &mut sampler(4, 80));
        assert_eq!(r.clause("functoriality").unwrap().status, Status::Pass);
        let z4 = Ring::integers_mod(4).unwrap();
        let h1 = RingHom::reduce_mod(z4.clone()).unwrap();
        let h2 = RingHom::diagonal_embedding(z4, 2).unwrap();
        let inner = crate::rank::rk_morita(&rk_zmod_pk(2, 2).unwrap(), 2).unwrap();
        let r = check_pullback_functoriality(&inner, &h1, &h2, &mut sampler(5, 60));
        assert_eq!(r.clause("functoriality").unwrap().status, Status::Pass);
        assert!(check_morita_round_trip(&rk_q(), 3, &mut sampler(6, 80)).passed());
        assert!(check_morita_round_trip(&rk_zmod_pk(3, 2).unwrap(), 2, &mut sampler(7, 80)).passed());
    }
}
