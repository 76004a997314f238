//! Randomized checks of the bivariant axioms and of the laws derived from
//! them.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::module::{
    coker_presentation, quotient_by, submodule_intersection, submodule_presentation, submodule_sum, FpMap,
    FpModule, Submodule,
};
use crate::normal_form::row_membership;
use crate::rank::harness::{check, failure, unimodular};
use crate::rank::MatrixRankFn;
use crate::report::{VerificationReport, Witness};
use crate::ring::{Matrix, Ring};
use crate::sampler::RandomSampler;
use crate::value::ExtendedValue;

use super::enumerate::SubmoduleLattice;
use super::{bidim, ext_map_rank};

type Eval = core::result::Result<Vec<ExtendedValue>, Witness>;

/// Finite ambients used for the continuity clauses stay this small.
const CONTINUITY_ORDER: i64 = 64;
const CONTINUITY_SUBMODULES: usize = 1024;

fn bidims(rk: &MatrixRankFn, subs: &[&Submodule]) -> Eval {
    let mut out = Vec::with_capacity(subs.len());
    for s in subs {
        match bidim(rk, s) {
            Ok(b) => out.push(b.value),
            Err(e) => {
                return Err(failure(&e)
                    .matrix("relations", s.ambient().relations())
                    .matrix("generators", s.generators()))
            }
        }
    }
    Ok(out)
}

fn map_ranks(rk: &MatrixRankFn, maps: &[&FpMap]) -> Eval {
    let mut out = Vec::with_capacity(maps.len());
    for f in maps {
        match ext_map_rank(rk, f) {
            Ok(v) => out.push(v),
            Err(e) => {
                return Err(failure(&e)
                    .matrix("domain", f.domain().relations())
                    .matrix("codomain", f.codomain().relations())
                    .matrix("map", f.matrix()))
            }
        }
    }
    Ok(out)
}

/// Runs one instance. Rings without the needed kernels are skipped; any
/// other construction error counts against the clause.
fn run(report: &mut VerificationReport, clause: &str, f: impl FnOnce(&mut VerificationReport) -> Result<()>) {
    match f(report) {
        Ok(()) | Err(Error::UnsupportedRing { .. }) => {}
        Err(e) => report.clause_mut(clause).record(false, || failure(&e)),
    }
}

fn sub(ambient: &FpModule, g: Matrix) -> Result<Submodule> {
    Submodule::new(ambient.clone(), g)
}

/// A random ambient `R^m / A` and a submodule with random generators.
fn random_pair(ring: &Ring, sampler: &mut RandomSampler) -> Result<Submodule> {
    let m = sampler.dim();
    let n = sampler.dim();
    let k = sampler.dim();
    let a = sampler.matrix(ring, n, m);
    let g = sampler.matrix(ring, k, m);
    sub(&FpModule::new(a), g)
}

/// `G1 = C G2 + D A`, so `<G1>` lies in `<G2>` by construction.
fn smaller(ring: &Ring, s: &Submodule, sampler: &mut RandomSampler) -> Result<Submodule> {
    let k = sampler.dim();
    let g = sampler.combinations(ring, s.generators(), k);
    let a = s.ambient().relations();
    let g = g.add(&sampler.combinations(ring, a, k))?;
    sub(s.ambient(), g)
}

/// A module of order at most [`CONTINUITY_ORDER`], or `None` over rings
/// with infinite quotients of `R`.
fn finite_ambient(ring: &Ring, sampler: &mut RandomSampler) -> Option<FpModule> {
    match ring {
        Ring::Integers => {
            let m = 1 + sampler.index(3);
            let mut budget = CONTINUITY_ORDER;
            let mut a = Matrix::zeros(ring, m, m);
            for i in 0..m {
                let d = sampler.range(1, budget.min(8));
                budget /= d;
                a.set(i, i, ring.from_i64(d));
                for j in i + 1..m {
                    a.set(i, j, sampler.scalar(ring));
                }
            }
            let u = unimodular(ring, m, sampler);
            let a = u.mul(&a).expect("square");
            let extra = sampler.index(2);
            let redundant = sampler.combinations(ring, &a, extra);
            Some(FpModule::new(a.vstack(&redundant).expect("same columns")))
        }
        Ring::IntegersMod(n) | Ring::PrimeField(n) => {
            let n = *n as i64;
            let mut max_m = 0;
            while n.pow(max_m + 1) <= CONTINUITY_ORDER && max_m < 4 {
                max_m += 1;
            }
            if max_m == 0 {
                return None;
            }
            let m = 1 + sampler.index(max_m as usize);
            let rows = sampler.dim();
            Some(FpModule::new(sampler.matrix(ring, rows, m)))
        }
        _ => None,
    }
}

/// `dim(S|M) = sup { dim(T|M) : T <= S }` and
/// `dim(S|M) = inf { dim(S|T) : S <= T }` over every submodule `T`.
fn continuity(report: &mut VerificationReport, rk: &MatrixRankFn, sampler: &mut RandomSampler) -> Result<()> {
    let ring = rk.ring().clone();
    let Some(ambient) = finite_ambient(&ring, sampler) else {
        return Ok(());
    };
    let lattice = match SubmoduleLattice::build(&ambient, CONTINUITY_ORDER as usize, CONTINUITY_SUBMODULES) {
        Ok(l) => l,
        Err(Error::CapExceeded { .. }) => return Ok(()),
        Err(e) => return Err(e),
    };
    let k = sampler.index(3);
    let g = sampler.matrix(&ring, k, ambient.generators());
    let s = sub(&ambient, g.clone())?;
    let here = lattice.locate(&g)?;
    let closed = bidim(rk, &s)?.value;
    let a = ambient.relations();

    let mut sup = ExtendedValue::zero();
    let mut inf: Option<ExtendedValue> = None;
    for i in 0..lattice.len() {
        let t = lattice.submodule(i);
        if lattice.contained(i, here) {
            let v = bidim(rk, &t)?.value;
            if v > sup {
                sup = v;
            }
        }
        if lattice.contained(here, i) {
            let r = t.generators().rows();
            let stack = t.generators().vstack(a)?;
            let mut rows = Vec::with_capacity(k);
            for j in 0..k {
                let c = row_membership(&stack, g.row(j))?
                    .ok_or_else(|| Error::InvariantViolation("generator outside an enclosing submodule".into()))?;
                rows.push(c[..r].to_vec());
            }
            let inside = Submodule::new(submodule_presentation(&t)?, Matrix::from_rows(&ring, r, rows)?)?;
            let v = bidim(rk, &inside)?.value;
            if inf.as_ref().is_none_or(|w| v < *w) {
                inf = Some(v);
            }
        }
    }
    let inf = inf.expect("the ambient itself encloses S");
    let witness = |rel: &str, v: &ExtendedValue| {
        Witness::new(rel)
            .matrix("relations", a)
            .matrix("generators", &g)
            .value("dim(S|M)", &closed)
            .value("extremum", v)
    };
    report
        .clause_mut("continuity_sup")
        .record(sup == closed, || witness("dim(S|M) = sup over submodules of S", &sup));
    report
        .clause_mut("continuity_inf")
        .record(inf == closed, || witness("dim(S|M) = inf over submodules containing S", &inf));
    Ok(())
}

/// The clauses of a bivariant rank function on finitely generated pairs.
/// Continuity is checked by enumeration on small finite ambients and is
/// skipped over rings where those do not exist.
pub fn check_bivariant_axioms(rk: &MatrixRankFn, sampler: &mut RandomSampler) -> VerificationReport {
    let ring = rk.ring().clone();
    let mut report = VerificationReport::new("bivariant:axioms", rk.label(), sampler.seed());
    let samples = sampler.samples();
    for i in 0..samples {
        run(&mut report, "iso_invariance", |report| {
            let s = random_pair(&ring, sampler)?;
            let (a, g) = (s.ambient().relations(), s.generators());
            let m = a.cols();
            // Change of basis x |-> x U, then a redundant generator e = v.
            let u = unimodular(&ring, m, sampler);
            let v = sampler.matrix(&ring, 1, m);
            let minus_one = Matrix::from_rows(&ring, 1, vec![vec![ring.neg(&ring.one())]])?;
            let au = a.mul(&u)?;
            let a2 = au
                .hstack(&Matrix::zeros(&ring, a.rows(), 1))?
                .vstack(&v.hstack(&minus_one)?)?;
            let c = sampler.matrix(&ring, g.rows(), 1);
            let gu = g.mul(&u)?.sub(&c.mul(&v)?)?.hstack(&c)?;
            let t = sub(&FpModule::new(a2.clone()), gu.clone())?;
            check(
                report,
                "iso_invariance",
                bidims(rk, &[&s, &t]),
                |v| v[0] == v[1],
                |v| {
                    Witness::new("dim(S|M) is invariant under isomorphism")
                        .matrix("relations", a)
                        .matrix("generators", g)
                        .matrix("relations'", &a2)
                        .matrix("generators'", &gu)
                        .value("before", &v[0])
                        .value("after", &v[1])
                },
            );
            Ok(())
        });

        run(&mut report, "normalization", |report| {
            let m = sampler.dim();
            let zero = Submodule::full(FpModule::new(unimodular(&ring, m, sampler)));
            let r = sampler.scalar(&ring);
            let line = Submodule::full(FpModule::new(Matrix::from_rows(&ring, 2, vec![vec![r, ring.one()]])?));
            let free = Submodule::full(FpModule::free(&ring, 1));
            let nothing = Submodule::zero(random_pair(&ring, sampler)?.ambient().clone());
            check(
                report,
                "normalization",
                bidims(rk, &[&zero, &line, &free, &nothing]),
                |v| v[0] == ExtendedValue::zero() && v[1] == ExtendedValue::one() && v[2] == ExtendedValue::one() && v[3] == ExtendedValue::zero(),
                |v| {
                    Witness::new("dim(0) = 0, dim(R) = 1 and dim(0|M) = 0")
                        .matrix("zero", zero.ambient().relations())
                        .matrix("R", line.ambient().relations())
                        .value("dim(0)", &v[0])
                        .value("dim(R)", &v[1])
                        .value("dim(R^1)", &v[2])
                        .value("dim(0|M)", &v[3])
                },
            );
            Ok(())
        });

        run(&mut report, "direct_sum", |report| {
            let s1 = random_pair(&ring, sampler)?;
            let s2 = random_pair(&ring, sampler)?;
            let both = sub(
                &FpModule::new(Matrix::block_diag(s1.ambient().relations(), s2.ambient().relations())?),
                Matrix::block_diag(s1.generators(), s2.generators())?,
            )?;
            check(
                report,
                "direct_sum",
                bidims(rk, &[&s1, &s2, &both]),
                |v| v[2] == v[0].add(&v[1]),
                |v| {
                    Witness::new("dim(S1 + S2|M1 + M2) = dim(S1|M1) + dim(S2|M2)")
                        .matrix("relations1", s1.ambient().relations())
                        .matrix("generators1", s1.generators())
                        .matrix("relations2", s2.ambient().relations())
                        .matrix("generators2", s2.generators())
                        .value("dim(S1|M1)", &v[0])
                        .value("dim(S2|M2)", &v[1])
                        .value("sum", &v[2])
                },
            );
            Ok(())
        });

        run(&mut report, "additivity", |report| {
            let s = random_pair(&ring, sampler)?;
            let whole = Submodule::full(s.ambient().clone());
            let rest = Submodule::full(quotient_by(s.ambient(), &s)?);
            check(
                report,
                "additivity",
                bidims(rk, &[&whole, &s, &rest]),
                |v| v[0] == v[1].add(&v[2]),
                |v| {
                    Witness::new("dim(M) = dim(S|M) + dim(M/S)")
                        .matrix("relations", s.ambient().relations())
                        .matrix("generators", s.generators())
                        .value("dim(M)", &v[0])
                        .value("dim(S|M)", &v[1])
                        .value("dim(M/S)", &v[2])
                },
            );
            Ok(())
        });

        // Enumeration is expensive; the first 50 instances and every fifth after.
        if i < 50 || i % 5 == 0 {
            run(&mut report, "continuity_sup", |report| continuity(report, rk, sampler));
        }
    }
    for clause in ["continuity_sup", "continuity_inf"] {
        report.clause_mut(clause);
    }
    report
}

/// The derived laws that [`check_bivariant_properties`] can check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BivariantProperty {
    Additivity,
    Submodularity,
    HomMonotone,
    Stability,
    Composition,
    Triangular,
    Monotone,
}

impl BivariantProperty {
    pub const ALL: [BivariantProperty; 7] = [
        BivariantProperty::Additivity,
        BivariantProperty::Submodularity,
        BivariantProperty::HomMonotone,
        BivariantProperty::Stability,
        BivariantProperty::Composition,
        BivariantProperty::Triangular,
        BivariantProperty::Monotone,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            BivariantProperty::Additivity => "additivity",
            BivariantProperty::Submodularity => "submodularity",
            BivariantProperty::HomMonotone => "hom_monotone",
            BivariantProperty::Stability => "stability",
            BivariantProperty::Composition => "composition",
            BivariantProperty::Triangular => "triangular",
            BivariantProperty::Monotone => "monotone",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown property {s:?}")))
    }
}

/// `M1 = R^m1/A1 --alpha--> M2 --beta--> M3`, relations chosen so both maps
/// are well defined.
fn composable(ring: &Ring, sampler: &mut RandomSampler) -> Result<(FpMap, FpMap)> {
    let (m1, m2, m3) = (sampler.dim(), sampler.dim(), sampler.dim());
    let a1 = sampler.any_matrix_with_cols(ring, m1);
    let fa = sampler.matrix(ring, m1, m2);
    let a2 = sampler.any_matrix_with_cols(ring, m2).vstack(&a1.mul(&fa)?)?;
    let fb = sampler.matrix(ring, m2, m3);
    let a3 = sampler.any_matrix_with_cols(ring, m3).vstack(&a2.mul(&fb)?)?;
    let (d1, d2, d3) = (FpModule::new(a1), FpModule::new(a2), FpModule::new(a3));
    Ok((FpMap::new(d1, d2.clone(), fa)?, FpMap::new(d2, d3, fb)?))
}

fn map_witness(relation: &str, maps: &[(&str, &FpMap)], values: &[(&str, &ExtendedValue)]) -> Witness {
    let mut w = Witness::new(relation);
    for (name, f) in maps {
        w = w
            .matrix(&format!("{name}.domain"), f.domain().relations())
            .matrix(&format!("{name}.codomain"), f.codomain().relations())
            .matrix(name, f.matrix());
    }
    for (name, v) in values {
        w = w.value(name, v);
    }
    w
}

fn additivity(report: &mut VerificationReport, rk: &MatrixRankFn, sampler: &mut RandomSampler) -> Result<()> {
    let ring = rk.ring().clone();
    let s2 = random_pair(&ring, sampler)?;
    let s1 = smaller(&ring, &s2, sampler)?;
    let upper = Submodule::new(quotient_by(s2.ambient(), &s1)?, s2.generators().clone())?;
    check(
        report,
        "additivity",
        bidims(rk, &[&s2, &s1, &upper]),
        |v| v[0] == v[1].add(&v[2]),
        |v| {
            Witness::new("dim(M2|M3) = dim(M1|M3) + dim(M2/M1|M3/M1)")
                .matrix("relations", s2.ambient().relations())
                .matrix("G1", s1.generators())
                .matrix("G2", s2.generators())
                .value("dim(M2|M3)", &v[0])
                .value("dim(M1|M3)", &v[1])
                .value("dim(M2/M1|M3/M1)", &v[2])
        },
    );
    Ok(())
}

fn submodularity(report: &mut VerificationReport, rk: &MatrixRankFn, sampler: &mut RandomSampler) -> Result<()> {
    let ring = rk.ring().clone();
    let s1 = random_pair(&ring, sampler)?;
    let k = sampler.dim();
    let g2 = sampler.matrix(&ring, k, s1.ambient().generators());
    let s2 = sub(s1.ambient(), g2)?;
    let sum = submodule_sum(&s1, &s2)?;
    let meet = submodule_intersection(&s1, &s2)?;
    check(
        report,
        "submodularity",
        bidims(rk, &[&sum, &meet, &s1, &s2]),
        |v| v[0].add(&v[1]) <= v[2].add(&v[3]),
        |v| {
            Witness::new("dim(S1+S2|M) + dim(S1 meet S2|M) <= dim(S1|M) + dim(S2|M)")
                .matrix("relations", s1.ambient().relations())
                .matrix("G1", s1.generators())
                .matrix("G2", s2.generators())
                .value("dim(S1+S2|M)", &v[0])
                .value("dim(S1 meet S2|M)", &v[1])
                .value("dim(S1|M)", &v[2])
                .value("dim(S2|M)", &v[3])
        },
    );
    Ok(())
}

fn hom_monotone(report: &mut VerificationReport, rk: &MatrixRankFn, sampler: &mut RandomSampler) -> Result<()> {
    let ring = rk.ring().clone();
    let s = random_pair(&ring, sampler)?;
    let a = s.ambient().relations();
    let p = sampler.dim();
    let f = sampler.matrix(&ring, a.cols(), p);
    let b = sampler.any_matrix_with_cols(&ring, p).vstack(&a.mul(&f)?)?;
    let alpha = FpMap::new(s.ambient().clone(), FpModule::new(b), f)?;
    // The image of M2 presented on the rows of F; the image of M1 is then G.
    let image = submodule_presentation(&alpha.image())?;
    let pushed = Submodule::new(image, s.generators().clone())?;
    check(
        report,
        "hom_monotone",
        bidims(rk, &[&pushed, &s]),
        |v| v[0] <= v[1],
        |v| {
            map_witness(
                "dim(M1 alpha|M2 alpha) <= dim(M1|M2)",
                &[("alpha", &alpha)],
                &[("dim(M1 alpha|M2 alpha)", &v[0]), ("dim(M1|M2)", &v[1])],
            )
            .matrix("generators", s.generators())
        },
    );
    Ok(())
}

fn stability(report: &mut VerificationReport, rk: &MatrixRankFn, sampler: &mut RandomSampler) -> Result<()> {
    let ring = rk.ring().clone();
    // M1 <= M2 <= M3 <= M4, with M4 = R^m/A and M3 = <G3>.
    let s3 = random_pair(&ring, sampler)?;
    let r3 = s3.generators().rows();
    let r2 = sampler.dim();
    let c2 = sampler.matrix(&ring, r2, r3);
    let r1 = sampler.dim();
    let c1 = sampler.matrix(&ring, r1, r2).mul(&c2)?;
    let m3 = submodule_presentation(&s3)?;
    let in3 = [Submodule::new(m3.clone(), c1.clone())?, Submodule::new(m3, c2.clone())?];
    let in4 = [
        sub(s3.ambient(), c1.mul(s3.generators())?)?,
        sub(s3.ambient(), c2.mul(s3.generators())?)?,
    ];
    check(
        report,
        "stability",
        bidims(rk, &[&in3[0], &in4[0], &in3[1], &in4[1]]),
        |v| {
            let le = v[0].add(&v[3]) <= v[2].add(&v[1]);
            let eq = v[2] != v[3] || v[0] == v[1];
            le && eq
        },
        |v| {
            Witness::new("dim(M1|M3) - dim(M1|M4) <= dim(M2|M3) - dim(M2|M4)")
                .matrix("relations", s3.ambient().relations())
                .matrix("G3", s3.generators())
                .matrix("C2", &c2)
                .matrix("C1", &c1)
                .value("dim(M1|M3)", &v[0])
                .value("dim(M1|M4)", &v[1])
                .value("dim(M2|M3)", &v[2])
                .value("dim(M2|M4)", &v[3])
        },
    );
    Ok(())
}

fn composition(report: &mut VerificationReport, rk: &MatrixRankFn, sampler: &mut RandomSampler) -> Result<()> {
    let ring = rk.ring().clone();
    let (alpha, beta) = composable(&ring, sampler)?;
    let ab = alpha.then(&beta)?;
    let quotient = FpMap::new(coker_presentation(&alpha)?, coker_presentation(&ab)?, beta.matrix().clone())?;
    let ranks = map_ranks(rk, &[&alpha, &beta, &ab, &quotient]);
    check(
        report,
        "composition",
        ranks.clone(),
        |v| v[1] == v[2].add(&v[3]),
        |v| {
            map_witness(
                "rk(beta) = rk(alpha beta) + rk(beta/alpha)",
                &[("alpha", &alpha), ("beta", &beta)],
                &[("rk(beta)", &v[1]), ("rk(alpha beta)", &v[2]), ("rk(beta/alpha)", &v[3])],
            )
        },
    );
    check(
        report,
        "map_product",
        ranks,
        |v| v[2] <= v[0] && v[2] <= v[1],
        |v| {
            map_witness(
                "rk(alpha beta) <= min(rk(alpha), rk(beta))",
                &[("alpha", &alpha), ("beta", &beta)],
                &[("rk(alpha)", &v[0]), ("rk(beta)", &v[1]), ("rk(alpha beta)", &v[2])],
            )
        },
    );
    Ok(())
}

fn triangular(report: &mut VerificationReport, rk: &MatrixRankFn, sampler: &mut RandomSampler) -> Result<()> {
    let ring = rk.ring().clone();
    // alpha: M1 -> M3, beta: M2 -> M4, gamma: M1 -> M4.
    let (m1, m2, m3, m4) = (sampler.dim(), sampler.dim(), sampler.dim(), sampler.dim());
    let a1 = sampler.any_matrix_with_cols(&ring, m1);
    let a2 = sampler.any_matrix_with_cols(&ring, m2);
    let fa = sampler.matrix(&ring, m1, m3);
    let fb = sampler.matrix(&ring, m2, m4);
    let fg = sampler.matrix(&ring, m1, m4);
    let a3 = sampler.any_matrix_with_cols(&ring, m3).vstack(&a1.mul(&fa)?)?;
    let a4 = sampler
        .any_matrix_with_cols(&ring, m4)
        .vstack(&a2.mul(&fb)?)?
        .vstack(&a1.mul(&fg)?)?;
    let alpha = FpMap::new(FpModule::new(a1), FpModule::new(a3), fa)?;
    let beta = FpMap::new(FpModule::new(a2), FpModule::new(a4), fb)?;
    let theta = alpha.block_upper(&fg, &beta)?;
    let diag = alpha.block_upper(&Matrix::zeros(&ring, m1, m4), &beta)?;
    let ranks = map_ranks(rk, &[&alpha, &beta, &theta, &diag]);
    check(
        report,
        "triangular",
        ranks.clone(),
        |v| v[2] >= v[0].add(&v[1]),
        |v| {
            map_witness(
                "rk([alpha gamma; 0 beta]) >= rk(alpha) + rk(beta)",
                &[("theta", &theta)],
                &[("rk(alpha)", &v[0]), ("rk(beta)", &v[1]), ("rk(theta)", &v[2])],
            )
        },
    );
    check(
        report,
        "triangular_diagonal",
        ranks,
        |v| v[3] == v[0].add(&v[1]),
        |v| {
            map_witness(
                "rk([alpha 0; 0 beta]) = rk(alpha) + rk(beta)",
                &[("diag", &diag)],
                &[("rk(alpha)", &v[0]), ("rk(beta)", &v[1]), ("rk(diag)", &v[3])],
            )
        },
    );
    Ok(())
}

fn monotone(report: &mut VerificationReport, rk: &MatrixRankFn, sampler: &mut RandomSampler) -> Result<()> {
    let ring = rk.ring().clone();
    let s2 = random_pair(&ring, sampler)?;
    let s1 = smaller(&ring, &s2, sampler)?;
    check(
        report,
        "increasing",
        bidims(rk, &[&s1, &s2]),
        |v| v[0] <= v[1],
        |v| {
            Witness::new("dim(M1|M) <= dim(M1'|M) for M1 <= M1'")
                .matrix("relations", s2.ambient().relations())
                .matrix("G1", s1.generators())
                .matrix("G1'", s2.generators())
                .value("dim(M1|M)", &v[0])
                .value("dim(M1'|M)", &v[1])
        },
    );

    // M1 = <C G2> inside M2 = <G2> inside M2' = R^m/A.
    let r = sampler.dim();
    let c = sampler.matrix(&ring, r, s2.generators().rows());
    let inner = Submodule::new(submodule_presentation(&s2)?, c.clone())?;
    let outer = sub(s2.ambient(), c.mul(s2.generators())?)?;
    check(
        report,
        "decreasing",
        bidims(rk, &[&inner, &outer]),
        |v| v[0] >= v[1],
        |v| {
            Witness::new("dim(M1|M2) >= dim(M1|M2') for M2 <= M2'")
                .matrix("relations", s2.ambient().relations())
                .matrix("G2", s2.generators())
                .matrix("C", &c)
                .value("dim(M1|M2)", &v[0])
                .value("dim(M1|M2')", &v[1])
        },
    );

    let whole = Submodule::full(s2.ambient().clone());
    let n = ExtendedValue::from_int(s2.generators().rows() as i64);
    check(
        report,
        "generator_bound",
        bidims(rk, &[&s2, &whole]),
        |v| v[0] <= n && v[0] <= v[1],
        |v| {
            Witness::new("dim(S|M) <= min(generators, dim(M))")
                .matrix("relations", s2.ambient().relations())
                .matrix("generators", s2.generators())
                .value("dim(S|M)", &v[0])
                .value("generators", &n)
                .value("dim(M)", &v[1])
        },
    );
    Ok(())
}

/// Checks each requested law on `sampler.samples()` random configurations.
pub fn check_bivariant_properties(
    rk: &MatrixRankFn,
    sampler: &mut RandomSampler,
    properties: &[BivariantProperty],
) -> VerificationReport {
    let mut report = VerificationReport::new("bivariant:properties", rk.label(), sampler.seed());
    for &p in properties {
        let f: fn(&mut VerificationReport, &MatrixRankFn, &mut RandomSampler) -> Result<()> = match p {
            BivariantProperty::Additivity => additivity,
            BivariantProperty::Submodularity => submodularity,
            BivariantProperty::HomMonotone => hom_monotone,
            BivariantProperty::Stability => stability,
            BivariantProperty::Composition => composition,
            BivariantProperty::Triangular => triangular,
            BivariantProperty::Monotone => monotone,
        };
        for _ in 0..sampler.samples() {
            run(&mut report, p.as_str(), |report| f(report, rk, sampler));
        }
    }
    report
}
