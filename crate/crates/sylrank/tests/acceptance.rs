//! Acceptance run: one PASS/FAIL line per criterion. All comparisons are
//! exact rational equality.

mod common;

use std::thread;

use sylrank::parse_rank_fn;
use sylrank_core::bivariant::{check_bivariant_axioms, check_bivariant_properties, BivariantProperty};
use sylrank_core::rank::{
    check_axioms, check_length_criterion, check_presentation_invariance, check_round_trip, length_sides, Facet,
};
use sylrank_core::report::Status;
use sylrank_core::sofic::{sofic_bidim, sofic_vs_vn, SoficApproximation};
use sylrank_core::transport::{
    epi_range_test, injectivity_witness, limit_relative_dim, ore_localization_test, pullback_restriction_check,
    DirectedSystem, RModuleStructureOnS, Verdict,
};
use sylrank_core::{
    ExtendedValue, FiniteGroup, FpModule, Matrix, MatrixRankFn, RandomSampler, Ring, RingHom, SamplerConfig, Submodule,
    VerificationReport,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const MIXED: &str = "convex(1/2*pullback(incQ,rkQ)+1/2*pullback(mod(2),rkFp(2)))";

const CATALOG: &[&str] = &[
    "pullback(incQ,rkQ)",
    "pullback(mod(2),rkFp(2))",
    "pullback(mod(3),rkFp(3))",
    "pullback(mod(5),rkFp(5))",
    "rkZmodPk(2,2)",
    "rkZmodPk(3,2)",
    "vN(Q,C2)",
    "vN(Q,C3)",
    "vN(Q,S3)",
    "morita(rkQ,2)",
    MIXED,
];

fn rk(text: &str) -> MatrixRankFn {
    parse_rank_fn(text, None).unwrap_or_else(|e| panic!("{text}: {e}"))
}

fn rk_over(text: &str, ring: &Ring) -> MatrixRankFn {
    parse_rank_fn(text, Some(ring)).unwrap_or_else(|e| panic!("{text}: {e}"))
}

fn zmod(n: u64) -> Ring {
    Ring::integers_mod(n).unwrap()
}

fn fp(p: u64) -> Ring {
    Ring::prime_field(p).unwrap()
}

fn sampler(seed: u64, samples: usize) -> RandomSampler {
    RandomSampler::new(
        seed,
        SamplerConfig {
            samples,
            max_dim: 5,
            entry_bound: 9,
            ..SamplerConfig::default()
        },
    )
}

fn v(n: i64, d: i64) -> ExtendedValue {
    ExtendedValue::ratio(n, d)
}

/// Every clause passed with at least `min` samples and no failure.
fn all_pass(r: &VerificationReport, min: usize) -> Result<(), String> {
    if r.clauses.is_empty() {
        return Err(format!("{} {}: no clauses", r.subject, r.label));
    }
    for c in &r.clauses {
        if c.status != Status::Pass || c.failures > 0 || c.samples < min {
            return Err(format!(
                "{} {} clause {}: status {}, {} failures, {} samples (need {min}), witness {:?}",
                r.subject,
                r.label,
                c.clause,
                c.status.as_str(),
                c.failures,
                c.samples,
                c.witness
            ));
        }
    }
    Ok(())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn axiom_suites() -> Outcome {
    let facets = [Facet::Matrix, Facet::Module, Facet::Map];
    let results: Vec<Result<(), String>> = thread::scope(|s| {
        let handles: Vec<_> = CATALOG
            .iter()
            .enumerate()
            .map(|(i, text)| {
                s.spawn(move || {
                    let f = rk(text);
                    for (j, facet) in facets.iter().enumerate() {
                        let mut smp = sampler(1000 + 10 * i as u64 + j as u64, 500);
                        all_pass(&check_axioms(*facet, &f, &mut smp), 500)?;
                    }
                    Ok(())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("no panic")).collect()
    });
    results.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(format!("{} functions x matrix/module/map facets, 500 samples per clause", CATALOG.len()))
}

fn round_trips() -> Outcome {
    let results: Vec<Result<(), String>> = thread::scope(|s| {
        let handles: Vec<_> = CATALOG
            .iter()
            .enumerate()
            .map(|(i, text)| {
                s.spawn(move || {
                    let f = rk(text);
                    all_pass(&check_round_trip(&f, &mut sampler(2000 + i as u64, 500)), 500)?;
                    all_pass(&check_presentation_invariance(&f, &mut sampler(2100 + i as u64, 200)), 200)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("no panic")).collect()
    });
    results.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(format!("{} functions: 500 round trips, 200 presentation changes each", CATALOG.len()))
}

fn bivariant_axioms() -> Outcome {
    let z4 = zmod(4);
    let cases = [
        rk_over("pullback(incQ,rkQ)", &Ring::Integers),
        rk_over("pullback(mod(2),rkFp(2))", &Ring::Integers),
        rk_over("pullback(mod(4),rkZmodPk(2,2))", &Ring::Integers),
        rk_over("rkZmodPk(2,2)", &z4),
        rk_over("pullback(mod(2),rkFp(2))", &z4),
    ];
    let mut ambients = 0;
    for (i, f) in cases.iter().enumerate() {
        let r = check_bivariant_axioms(f, &mut sampler(3000 + i as u64, 300));
        for c in &r.clauses {
            let continuity = c.clause.starts_with("continuity");
            let min = if continuity { 50 } else { 300 };
            ensure(c.status == Status::Pass && c.failures == 0 && c.samples >= min, || {
                format!("{} clause {}: {} with {} samples", f.label(), c.clause, c.status.as_str(), c.samples)
            })?;
        }
        let inf = r.clause("continuity_inf").map_or(0, |c| c.samples);
        let sup = r.clause("continuity_sup").map_or(0, |c| c.samples);
        ensure(inf >= 50 && sup >= 50, || format!("{}: continuity ran on {sup}/{inf} ambients", f.label()))?;
        ambients += inf;
    }
    Ok(format!("{} functions over Z and Z/4, 300 pairs each, {ambients} finite ambients enumerated", cases.len()))
}

fn bivariant_laws() -> Outcome {
    let z = Ring::Integers;
    let z4 = zmod(4);
    let cases = [
        rk_over("pullback(incQ,rkQ)", &z),
        rk_over("pullback(mod(2),rkFp(2))", &z),
        rk_over("pullback(mod(3),rkFp(3))", &z),
        rk_over("pullback(mod(5),rkFp(5))", &z),
        rk_over("pullback(mod(4),rkZmodPk(2,2))", &z),
        rk_over(MIXED, &z),
        rk_over("rkQ", &Ring::Rationals),
        rk_over("rkZmodPk(2,2)", &z4),
        rk_over("pullback(mod(2),rkFp(2))", &z4),
        rk_over("rkFp(2)", &fp(2)),
    ];
    let results: Vec<Result<(), String>> = thread::scope(|s| {
        let handles: Vec<_> = cases
            .iter()
            .enumerate()
            .map(|(i, f)| {
                s.spawn(move || {
                    let r = check_bivariant_properties(f, &mut sampler(4000 + i as u64, 200), &BivariantProperty::ALL);
                    for p in BivariantProperty::ALL {
                        let names: &[&str] = match p {
                            BivariantProperty::Monotone => &["increasing", "decreasing"],
                            _ => &[p.as_str()],
                        };
                        for name in names {
                            ensure(r.clause(name).is_some(), || format!("{}: no clause {name}", f.label()))?;
                        }
                    }
                    all_pass(&r, 200)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("no panic")).collect()
    });
    results.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(format!("7 laws x {} functions over Z, Q, Z/4, F2, 200 configurations each", cases.len()))
}

fn length_criterion() -> Outcome {
    for (i, text) in ["rkZmodPk(2,2)", "rkZmodPk(3,2)", "rkQ", "rkFp(2)", "rkFp(3)", "rkFp(5)"].iter().enumerate() {
        all_pass(&check_length_criterion(&rk(text), &mut sampler(5000 + i as u64, 200)), 200)?;
    }
    let mixed = rk(MIXED);
    let r = check_length_criterion(&mixed, &mut sampler(5100, 200));
    let c = r.clause("length_additivity").ok_or("no length clause")?;
    ensure(c.status == Status::Fail, || "mixed function passed the length criterion".into())?;
    let w = c.witness.as_ref().ok_or("no witness")?;
    let value = |name: &str| w.values.iter().find(|(k, _)| k == name).map(|(_, x)| x.clone());
    ensure(
        value("dim(M1)") == Some(v(1, 1)) && value("dim(M2)") == Some(v(1, 1)) && value("dim(M3)") == Some(v(1, 2)),
        || format!("unexpected witness {w:?}"),
    )?;
    // 0 -> Z --2--> Z -> Z/2 -> 0, evaluated directly.
    let z = Ring::Integers;
    let sub = Submodule::new(FpModule::free(&z, 1), Matrix::from_ints(&z, 1, 1, &[2]).unwrap()).unwrap();
    let sides = length_sides(&mixed, &sub).map_err(|e| e.to_string())?;
    ensure(sides.m2 == v(1, 1) && sides.m1.add(&sides.m3) == v(3, 2) && !sides.additive(), || {
        format!("sides {sides:?}")
    })?;
    Ok("passes for Z/p^k and field ranks; mixed function fails with dim(M2) = 1 vs 1 + 1/2".into())
}

fn epimorphisms() -> Outcome {
    let z = Ring::Integers;
    let mut in_image = 0;
    for p in [2u64, 3, 5] {
        let st = RModuleStructureOnS::quotient_of_integers(&fp(p)).unwrap();
        let r = epi_range_test(&rk_over(&format!("pullback(mod({p}),rkFp({p}))"), &z), &st).map_err(|e| e.to_string())?;
        ensure(r.in_image && r.rk_pi == v(1, 1) && r.rk_id_s == v(1, 1), || format!("Z->F{p}: {r:?}"))?;
        in_image += 1;
    }
    let st4 = RModuleStructureOnS::quotient_of_integers(&zmod(4)).unwrap();
    let r = epi_range_test(&rk_over("pullback(mod(4),rkZmodPk(2,2))", &z), &st4).map_err(|e| e.to_string())?;
    ensure(r.in_image && r.rk_pi == v(1, 1) && r.rk_id_s == v(1, 1), || format!("Z->Z/4: {r:?}"))?;
    in_image += 1;

    let mut excluded = 0;
    for p in [2u64, 3, 5] {
        let st = RModuleStructureOnS::quotient_of_integers(&fp(p)).unwrap();
        for q in [2u64, 3, 5].into_iter().filter(|&q| q != p) {
            let r = epi_range_test(&rk_over(&format!("pullback(mod({q}),rkFp({q}))"), &z), &st).map_err(|e| e.to_string())?;
            ensure(!r.in_image && r.rk_pi == v(0, 1) && r.rk_id_s == v(0, 1), || format!("Z->F{p} under F{q}: {r:?}"))?;
            excluded += 1;
        }
    }
    let st2 = RModuleStructureOnS::quotient_of_integers(&fp(2)).unwrap();
    let r = epi_range_test(&rk_over("pullback(incQ,rkQ)", &z), &st2).map_err(|e| e.to_string())?;
    ensure(!r.in_image && r.rk_pi == v(0, 1) && r.rk_id_s == v(0, 1), || format!("Z->F2 under Q: {r:?}"))?;

    let qc3 = sylrank::parse_ring("Q[C3]").unwrap();
    let restriction = [
        (RModuleStructureOnS::quotient_of_integers(&fp(2)).unwrap(), rk("rkFp(2)")),
        (RModuleStructureOnS::quotient_of_integers(&fp(3)).unwrap(), rk("rkFp(3)")),
        (RModuleStructureOnS::quotient_of_integers(&fp(5)).unwrap(), rk("rkFp(5)")),
        (st4.clone(), rk("rkZmodPk(2,2)")),
        (st4.clone(), rk_over("pullback(mod(2),rkFp(2))", &zmod(4))),
        (RModuleStructureOnS::quotient_of_integers(&zmod(9)).unwrap(), rk("rkZmodPk(3,2)")),
        (RModuleStructureOnS::augmentation(&qc3).unwrap(), rk("rkQ")),
    ];
    for (i, (st, f)) in restriction.iter().enumerate() {
        all_pass(&pullback_restriction_check(f, st, &mut sampler(6000 + i as u64, 200)), 200)?;
    }

    let pi = RingHom::reduce_mod(zmod(4)).unwrap();
    let a = rk("rkZmodPk(2,2)");
    let b = rk_over("pullback(mod(2),rkFp(2))", &zmod(4));
    let (m, x, y) = injectivity_witness(&a, &b, &pi, 4)
        .map_err(|e| e.to_string())?
        .ok_or("no distinguishing matrix in [-4, 4]")?;
    ensure(x != y, || "witness values agree".into())?;
    // Hand values for a 1x1 integer matrix [n]: length (2 - min(v2(n), 2)) / 2
    // in Z/4, and 1 or 0 by the parity of n.
    ensure(m.rows() == 1 && m.cols() == 1, || format!("expected a 1x1 witness, got {}", m.to_text()))?;
    let n: i64 = m.to_text().parse().map_err(|_| m.to_text())?;
    let v2 = if n % 4 == 0 { 2 } else if n % 2 == 0 { 1 } else { 0 };
    ensure(x == v(2 - v2, 2) && y == v((n % 2 != 0) as i64, 1), || format!("witness [{n}] values {x} and {y}"))?;
    Ok(format!(
        "{in_image} instances in the image, {excluded} mismatched excluded, {} restriction instances x 200, witness [{n}] gives {x} vs {y}",
        restriction.len()
    ))
}

fn limits() -> Outcome {
    let z = Ring::Integers;
    let expect = |text: &str, verdict: Verdict, pi: ExtendedValue, values: Vec<ExtendedValue>| -> Result<(), String> {
        let out = ore_localization_test(&rk_over(text, &z), 2, 6).map_err(|e| e.to_string())?;
        ensure(out.verdict == verdict && out.rk_pi == pi && out.values == values, || format!("{text}: {out:?}"))
    };
    let ones = vec![v(1, 1); 7];
    let mut drop = vec![v(0, 1); 7];
    drop[0] = v(1, 1);
    expect("pullback(mod(3),rkFp(3))", Verdict::InImage, v(1, 1), ones.clone())?;
    expect("pullback(incQ,rkQ)", Verdict::InImage, v(1, 1), ones)?;
    expect("pullback(mod(2),rkFp(2))", Verdict::Excluded, v(0, 1), drop)?;

    let mut runs = 0;
    let functions = ["pullback(incQ,rkQ)", "pullback(mod(2),rkFp(2))", "pullback(mod(3),rkFp(3))", "pullback(mod(4),rkZmodPk(2,2))", MIXED];
    for text in functions {
        let f = rk_over(text, &z);
        for m in [1i64, 2, 3, 4, 6, 12] {
            let d = DirectedSystem::multiplication(&Matrix::from_ints(&z, 1, 1, &[m]).unwrap(), 6).unwrap();
            let est = limit_relative_dim(&f, &d).map_err(|e| format!("{text}, m = {m}: {e}"))?;
            ensure(est.values.windows(2).all(|w| w[0] >= w[1]), || format!("{text}, m = {m}: {:?}", est.values))?;
            for (j, value) in est.values.iter().enumerate() {
                let power = Matrix::from_ints(&z, 1, 1, &[m.pow(j as u32)]).unwrap();
                let direct = f.evaluate(&power).map_err(|e| e.to_string())?;
                ensure(*value == direct, || format!("{text}, m = {m}, j = {j}: {value} vs rk(m^j) = {direct}"))?;
            }
            runs += 1;
        }
        let d = DirectedSystem::multiplication(&Matrix::from_ints(&z, 2, 2, &[2, 0, 0, 3]).unwrap(), 5).unwrap();
        let est = limit_relative_dim(&f, &d).map_err(|e| e.to_string())?;
        ensure(est.values.windows(2).all(|w| w[0] >= w[1]), || format!("{text}: {:?}", est.values))?;
        runs += 1;
    }
    let z4 = zmod(4);
    let d = DirectedSystem::multiplication(&Matrix::from_ints(&z4, 1, 1, &[2]).unwrap(), 4).unwrap();
    let est = limit_relative_dim(&rk("rkZmodPk(2,2)"), &d).map_err(|e| e.to_string())?;
    ensure(est.values == vec![v(1, 1), v(1, 2), v(0, 1), v(0, 1), v(0, 1)] && est.stabilized, || format!("Z/4: {est:?}"))?;
    runs += 1;
    Ok(format!("ore verdicts (true,1), (true,1), (false,0) with exact stages; {runs} limit sequences nonincreasing"))
}

fn sofic() -> Outcome {
    let q = Ring::Rationals;
    for (i, g) in [FiniteGroup::cyclic(2).unwrap(), FiniteGroup::cyclic(3).unwrap(), FiniteGroup::symmetric3()].iter().enumerate() {
        let r = sofic_vs_vn(&q, g, &mut sampler(7000 + i as u64, 100));
        all_pass(&r, 100)?;
    }
    let c2 = FiniteGroup::cyclic(2).unwrap();
    let ring = Ring::group_algebra(q.clone(), c2.clone()).unwrap();
    let approx = SoficApproximation::regular(&c2);
    let ambient = FpModule::free(&ring, 1);
    let gens = |text: &str| sylrank::parse_matrix(text, &ring).unwrap();
    let hand = [
        (Submodule::full(ambient.clone()), v(1, 1)),
        (Submodule::zero(ambient.clone()), v(0, 1)),
        (Submodule::new(ambient.clone(), gens("1*g0+1*g1")).unwrap(), v(1, 2)),
    ];
    for (s, want) in &hand {
        let got = sofic_bidim(&q, &approx, s).map_err(|e| e.to_string())?;
        ensure(got.value == *want && !got.modular, || format!("{}: {} vs {want}", s.generators().to_text(), got.value))?;
    }
    Ok("C2, C3, S3 agree on 100 pairs each; Q[C2] hand values 1, 0, 1/2".into())
}

fn cli_determinism() -> Outcome {
    for ex in common::EXAMPLES {
        common::check_example(ex)?;
    }
    Ok(format!("{} documented invocations reproduce their goldens", common::EXAMPLES.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("axiom suites", axiom_suites),
        ("round trips and presentation invariance", round_trips),
        ("bivariant axioms and continuity", bivariant_axioms),
        ("bivariant laws", bivariant_laws),
        ("length criterion", length_criterion),
        ("epimorphisms", epimorphisms),
        ("direct limits and localization", limits),
        ("sofic oracle", sofic),
        ("cli determinism", cli_determinism),
    ];
    let outcomes: Vec<Outcome> = thread::scope(|s| {
        let handles: Vec<_> = criteria.iter().map(|(_, f)| s.spawn(*f)).collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap_or_else(|_| Err("panicked".into())))
            .collect()
    });
    let mut failed = 0;
    for (i, ((name, _), outcome)) in criteria.iter().zip(&outcomes).enumerate() {
        match outcome {
            Ok(detail) => println!("PASS criterion {} ({name}): {detail}", i + 1),
            Err(reason) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {reason}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
