//! Randomized checks of the rank-function axioms, the conversions between
//! facets, and the length criterion.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::module::{submodule_presentation, FpModule, Submodule};
use crate::report::{VerificationReport, Witness};
use crate::ring::{Matrix, Ring};
use crate::sampler::RandomSampler;
use crate::value::ExtendedValue;

use super::{matrix_rank_from_map, module_dim, MapRankFn, MatrixRankFn, ModuleRankFn};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Facet {
    Matrix,
    Module,
    Map,
}

impl Facet {
    pub fn as_str(&self) -> &'static str {
        match self {
            Facet::Matrix => "matrix",
            Facet::Module => "module",
            Facet::Map => "map",
        }
    }
}

pub(crate) fn failure(e: &Error) -> Witness {
    Witness::new(format!("evaluation failed: {e}"))
}

/// Evaluates every matrix; the first error is turned into a witness.
fn eval_all(
    f: &dyn Fn(&Matrix) -> Result<ExtendedValue>,
    mats: &[&Matrix],
) -> core::result::Result<Vec<ExtendedValue>, Witness> {
    let mut out = Vec::with_capacity(mats.len());
    for m in mats {
        match f(m) {
            Ok(v) => out.push(v),
            Err(e) => return Err(failure(&e).matrix("input", m)),
        }
    }
    Ok(out)
}

/// Records one instance from already evaluated values.
pub(crate) fn check(
    report: &mut VerificationReport,
    clause: &str,
    out: core::result::Result<Vec<ExtendedValue>, Witness>,
    holds: impl FnOnce(&[ExtendedValue]) -> bool,
    witness: impl FnOnce(&[ExtendedValue]) -> Witness,
) {
    match out {
        Ok(v) => report.clause_mut(clause).record(holds(&v), || witness(&v)),
        Err(w) => report.clause_mut(clause).record(false, || w),
    }
}

/// Shared by the matrix and map facets: a map between free modules is its matrix.
fn matrix_like(
    report: &mut VerificationReport,
    ring: &Ring,
    f: &dyn Fn(&Matrix) -> Result<ExtendedValue>,
    sampler: &mut RandomSampler,
    names: [&str; 4],
) {
    let one = Matrix::identity(ring, 1);
    for _ in 0..sampler.samples() {
        let zero = Matrix::zeros(ring, sampler.dim(), sampler.dim());
        check(
            report,
            names[0],
            eval_all(f, &[&zero, &one]),
            |v| v[0] == ExtendedValue::zero() && v[1] == ExtendedValue::one(),
            |v| {
                Witness::new("rk(0) = 0 and rk(1) = 1")
                    .matrix("zero", &zero)
                    .matrix("one", &one)
                    .value("rk(zero)", &v[0])
                    .value("rk(one)", &v[1])
            },
        );

        let (n, k, m) = (sampler.dim(), sampler.dim(), sampler.dim());
        let a = sampler.matrix(ring, n, k);
        let b = sampler.matrix(ring, k, m);
        let ab = a.mul(&b).expect("same ring");
        check(
            report,
            names[1],
            eval_all(f, &[&a, &b, &ab]),
            |v| v[2] <= v[0] && v[2] <= v[1],
            |v| {
                Witness::new("rk(AB) <= min(rk(A), rk(B))")
                    .matrix("A", &a)
                    .matrix("B", &b)
                    .value("rk(A)", &v[0])
                    .value("rk(B)", &v[1])
                    .value("rk(AB)", &v[2])
            },
        );

        let a = sampler.any_matrix(ring);
        let b = sampler.any_matrix(ring);
        let c = sampler.matrix(ring, a.rows(), b.cols());
        let diag = Matrix::block_diag(&a, &b).expect("same ring");
        let upper = Matrix::block_upper(&a, &c, &b).expect("same ring");
        let out = eval_all(f, &[&a, &b, &diag, &upper]);
        check(
            report,
            names[2],
            out.clone(),
            |v| v[2] == v[0].add(&v[1]),
            |v| {
                Witness::new("rk(diag(A, B)) = rk(A) + rk(B)")
                    .matrix("A", &a)
                    .matrix("B", &b)
                    .value("rk(A)", &v[0])
                    .value("rk(B)", &v[1])
                    .value("rk(diag(A, B))", &v[2])
            },
        );
        check(
            report,
            names[3],
            out,
            |v| v[3] >= v[0].add(&v[1]),
            |v| {
                Witness::new("rk([A C; 0 B]) >= rk(A) + rk(B)")
                    .matrix("A", &a)
                    .matrix("B", &b)
                    .matrix("C", &c)
                    .value("rk(A)", &v[0])
                    .value("rk(B)", &v[1])
                    .value("rk([A C; 0 B])", &v[3])
            },
        );
    }
}

/// Normalization, the product inequality, block additivity and the
/// block-triangular inequality on sampled matrices.
pub fn check_matrix_axioms(rk: &MatrixRankFn, sampler: &mut RandomSampler) -> VerificationReport {
    let mut report = VerificationReport::new("axioms:matrix", rk.label(), sampler.seed());
    matrix_like(
        &mut report,
        rk.ring(),
        &|a| rk.evaluate(a),
        sampler,
        ["normalization", "product", "block_diagonal", "block_triangular"],
    );
    report
}

/// The same four laws read for maps between free modules.
pub fn check_map_axioms(mrf: &MapRankFn, sampler: &mut RandomSampler) -> VerificationReport {
    let mut report = VerificationReport::new("axioms:map", mrf.label(), sampler.seed());
    matrix_like(
        &mut report,
        mrf.ring(),
        &|a| mrf.evaluate(a),
        sampler,
        ["normalization", "composition", "direct_sum", "triangular"],
    );
    report
}

/// An invertible matrix: identity plus random strictly upper entries,
/// conjugated by a random permutation.
pub(crate) fn unimodular(ring: &Ring, m: usize, sampler: &mut RandomSampler) -> Matrix {
    let p = sampler.permutation(m);
    let mut u = Matrix::identity(ring, m);
    for i in 0..m {
        for j in i + 1..m {
            u.set(i, j, sampler.scalar(ring));
        }
    }
    u.select_rows(&p).select_cols(&p)
}

fn eval_modules(dim: &ModuleRankFn, ms: &[&FpModule]) -> core::result::Result<Vec<ExtendedValue>, Witness> {
    let mut out = Vec::new();
    for m in ms {
        match dim.evaluate(m) {
            Ok(v) => out.push(v),
            Err(e) => return Err(failure(&e).matrix("relations", m.relations())),
        }
    }
    Ok(out)
}

/// Normalization, direct-sum additivity and the two inequalities along
/// right exact sequences `M1 -> M2 -> M3 -> 0`.
pub fn check_module_axioms(dim: &ModuleRankFn, sampler: &mut RandomSampler) -> VerificationReport {
    let ring = dim.ring().clone();
    let mut report = VerificationReport::new("axioms:module", dim.label(), sampler.seed());
    for _ in 0..sampler.samples() {
        // 0 presented as R^m / U with U invertible, and R as R^2 / <(r, 1)>.
        let m = sampler.dim();
        let zero = FpModule::new(unimodular(&ring, m, sampler));
        let r = sampler.scalar(&ring);
        let line = FpModule::new(Matrix::from_rows(&ring, 2, alloc::vec![alloc::vec![r, ring.one()]]).expect("ring"));
        let free = FpModule::free(&ring, 1);
        check(
            &mut report,
            "normalization",
            eval_modules(dim, &[&zero, &line, &free]),
            |v| v[0] == ExtendedValue::zero() && v[1] == ExtendedValue::one() && v[2] == ExtendedValue::one(),
            |v| {
                Witness::new("dim(0) = 0 and dim(R) = 1")
                    .matrix("zero", zero.relations())
                    .matrix("R", line.relations())
                    .value("dim(zero)", &v[0])
                    .value("dim(R)", &v[1])
                    .value("dim(R^1)", &v[2])
            },
        );

        let a = FpModule::new(sampler.any_matrix(&ring));
        let b = FpModule::new(sampler.any_matrix(&ring));
        let sum = crate::module::direct_sum(&a, &b).expect("same ring");
        check(
            &mut report,
            "direct_sum",
            eval_modules(dim, &[&a, &b, &sum]),
            |v| v[2] == v[0].add(&v[1]),
            |v| {
                Witness::new("dim(M + N) = dim(M) + dim(N)")
                    .matrix("M", a.relations())
                    .matrix("N", b.relations())
                    .value("dim(M)", &v[0])
                    .value("dim(N)", &v[1])
                    .value("dim(M + N)", &v[2])
            },
        );

        // M1 = R^k / B --F--> M2 = R^m / [A0; B F] --> M3 = R^m / [A0; B F; F] --> 0
        let (k, m, n0, nb) = (sampler.dim(), sampler.dim(), sampler.dim(), sampler.dim());
        let f = sampler.matrix(&ring, k, m);
        let b = sampler.matrix(&ring, nb, k);
        let a0 = sampler.matrix(&ring, n0, m);
        let a = a0.vstack(&b.mul(&f).expect("ring")).expect("ring");
        let m1 = FpModule::new(b);
        let m2 = FpModule::new(a.clone());
        let m3 = FpModule::new(a.vstack(&f).expect("ring"));
        check(
            &mut report,
            "exact_sequence",
            eval_modules(dim, &[&m1, &m2, &m3]),
            |v| v[2] <= v[1] && v[1] <= v[0].add(&v[2]),
            |v| {
                Witness::new("dim(M3) <= dim(M2) <= dim(M1) + dim(M3)")
                    .matrix("M1", m1.relations())
                    .matrix("M2", m2.relations())
                    .matrix("F", &f)
                    .value("dim(M1)", &v[0])
                    .value("dim(M2)", &v[1])
                    .value("dim(M3)", &v[2])
            },
        );
    }
    report
}

/// Runs the axiom suite of one facet, converting `rk` as needed.
pub fn check_axioms(facet: Facet, rk: &MatrixRankFn, sampler: &mut RandomSampler) -> VerificationReport {
    match facet {
        Facet::Matrix => check_matrix_axioms(rk, sampler),
        Facet::Module => check_module_axioms(&ModuleRankFn::from_matrix_rank(rk), sampler),
        Facet::Map => {
            let dim = ModuleRankFn::from_matrix_rank(rk);
            check_map_axioms(&MapRankFn::from_module_rank(&dim), sampler)
        }
    }
}

/// `matrix -> module -> map -> matrix` returns the original value.
pub fn check_round_trip(rk: &MatrixRankFn, sampler: &mut RandomSampler) -> VerificationReport {
    let mut report = VerificationReport::new("round_trip", rk.label(), sampler.seed());
    let mrf = MapRankFn::from_module_rank(&ModuleRankFn::from_matrix_rank(rk));
    for _ in 0..sampler.samples() {
        let a = sampler.any_matrix(rk.ring());
        let out = rk.evaluate(&a).and_then(|x| Ok((x, matrix_rank_from_map(&mrf, &a)?)));
        match out {
            Ok((x, y)) => report.clause_mut("round_trip").record(x == y, || {
                Witness::new("rk(A) = rk'(A)").matrix("A", &a).value("rk(A)", &x).value("rk'(A)", &y)
            }),
            Err(e) => report.clause_mut("round_trip").record(false, || failure(&e).matrix("A", &a)),
        }
    }
    report
}

/// `module_dim` does not depend on the presentation.
pub fn check_presentation_invariance(rk: &MatrixRankFn, sampler: &mut RandomSampler) -> VerificationReport {
    let ring = rk.ring().clone();
    let mut report = VerificationReport::new("presentation_invariance", rk.label(), sampler.seed());
    for _ in 0..sampler.samples() {
        let a = sampler.any_matrix(&ring);
        let (n, m) = (a.rows(), a.cols());
        let dup_idx: Vec<usize> = (0..n).chain((0..n).filter(|_| sampler.chance(50))).collect();
        let dup = a.select_rows(&dup_idx);
        let rows = a.select_rows(&sampler.permutation(n));
        let cols = a.select_cols(&sampler.permutation(m));
        // an extra generator g = v, recorded by the relation g - v = 0
        let v = sampler.matrix(&ring, 1, m);
        let extra = Matrix::block_upper(&a, &Matrix::zeros(&ring, n, 1), &Matrix::zeros(&ring, 0, 1))
            .and_then(|top| top.vstack(&v.neg().hstack(&Matrix::identity(&ring, 1))?))
            .expect("ring");
        let base = module_dim(rk, &FpModule::new(a.clone()));
        for (clause, other) in [
            ("row_duplication", dup),
            ("row_permutation", rows),
            ("column_permutation", cols),
            ("redundant_generator", extra),
        ] {
            let out = base.clone().and_then(|x| Ok((x, module_dim(rk, &FpModule::new(other.clone()))?)));
            match out {
                Ok((x, y)) => report.clause_mut(clause).record(x == y, || {
                    Witness::new("dim(R^m / A) = dim(R^m' / A')")
                        .matrix("A", &a)
                        .matrix("A'", &other)
                        .value("dim", &x)
                        .value("dim'", &y)
                }),
                Err(e) => report.clause_mut(clause).record(false, || failure(&e).matrix("A", &a)),
            }
        }
    }
    report
}

/// The three dimensions along `0 -> <G> -> M -> M/<G> -> 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthSides {
    pub m1: ExtendedValue,
    pub m2: ExtendedValue,
    pub m3: ExtendedValue,
}

impl LengthSides {
    pub fn additive(&self) -> bool {
        self.m2 == self.m1.add(&self.m3)
    }
}

pub fn length_sides(rk: &MatrixRankFn, sub: &Submodule) -> Result<LengthSides> {
    let m1 = module_dim(rk, &submodule_presentation(sub)?)?;
    let m2 = module_dim(rk, sub.ambient())?;
    let m3 = module_dim(rk, &crate::module::quotient_by(sub.ambient(), sub)?)?;
    Ok(LengthSides { m1, m2, m3 })
}

/// Tests `dim(M2) = dim(M1) + dim(M3)` on short exact sequences. The first
/// instance is always `0 -> R --2--> R -> R/2 -> 0`.
pub fn check_length_criterion(rk: &MatrixRankFn, sampler: &mut RandomSampler) -> VerificationReport {
    let ring = rk.ring().clone();
    let mut report = VerificationReport::new("length_criterion", rk.label(), sampler.seed());
    for i in 0..sampler.samples().max(1) {
        let (ambient, g) = if i == 0 {
            (FpModule::free(&ring, 1), Matrix::from_rows(&ring, 1, alloc::vec![alloc::vec![ring.from_i64(2)]]).expect("ring"))
        } else {
            let a = sampler.any_matrix(&ring);
            let k = sampler.dim();
            let g = sampler.matrix(&ring, k, a.cols());
            (FpModule::new(a), g)
        };
        let sub = Submodule::new(ambient.clone(), g.clone()).expect("shapes agree");
        match length_sides(rk, &sub) {
            Ok(s) => report.clause_mut("length_additivity").record(s.additive(), || {
                Witness::new("dim(M2) = dim(M1) + dim(M3)")
                    .matrix("A", ambient.relations())
                    .matrix("G", &g)
                    .value("dim(M1)", &s.m1)
                    .value("dim(M2)", &s.m2)
                    .value("dim(M3)", &s.m3)
            }),
            Err(e) => report
                .clause_mut("length_additivity")
                .record(false, || failure(&e).matrix("A", ambient.relations()).matrix("G", &g)),
        }
    }
    report
}
