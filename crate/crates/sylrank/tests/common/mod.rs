//! Documented invocations and their golden outputs.

use std::path::PathBuf;
use std::process::Command;

pub struct Example {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub exit: i32,
}

pub const EXAMPLES: &[Example] = &[
    Example {
        name: "rank_mod2",
        args: &["rank", "--ring", "Z", "--fn", "pullback(mod(2),rkFp(2))", "--matrix", "2"],
        exit: 0,
    },
    Example {
        name: "check_axioms_zmod4",
        args: &["check-axioms", "--facet", "matrix", "--fn", "rkZmodPk(2,2)", "--samples", "100", "--seed", "7"],
        exit: 0,
    },
    Example {
        name: "dim_z6",
        args: &["dim", "--ring", "Z", "--fn", "pullback(incQ,rkQ)", "--module", "gens 1; rels 6"],
        exit: 0,
    },
    Example {
        name: "bidim_z4",
        args: &["bidim", "--ring", "Z", "--fn", "pullback(mod(4),rkZmodPk(2,2))", "--module", "gens 1; rels 4; sub 2"],
        exit: 0,
    },
    Example {
        name: "maprank_z2_z4",
        args: &[
            "maprank", "--ring", "Z", "--fn", "pullback(mod(2),rkFp(2))", "--matrix", "2", "--domain", "gens 1; rels 2",
            "--codomain", "gens 1; rels 4",
        ],
        exit: 0,
    },
    Example {
        name: "check_properties_zmod4",
        args: &["check-properties", "--fn", "rkZmodPk(2,2)", "--samples", "40", "--seed", "3"],
        exit: 0,
    },
    Example {
        name: "check_length_mixed",
        args: &[
            "check-length", "--fn", "convex(1/2*pullback(incQ,rkQ)+1/2*pullback(mod(2),rkFp(2)))", "--samples", "20",
            "--seed", "1",
        ],
        exit: 1,
    },
    Example {
        name: "pullback_mod2",
        args: &["pullback", "--hom", "mod(2)", "--fn", "rkFp(2)", "--matrix", "2,1;0,2"],
        exit: 0,
    },
    Example {
        name: "pushforward_z4",
        args: &["pushforward", "--epi", "Z->Zmod(4)", "--fn", "pullback(mod(4),rkZmodPk(2,2))", "--matrix", "2"],
        exit: 0,
    },
    Example {
        name: "epi_range_f2",
        args: &["epi-range", "--epi", "Z->Fp(2)", "--fn", "pullback(mod(2),rkFp(2))"],
        exit: 0,
    },
    Example {
        name: "epi_range_mismatch",
        args: &["epi-range", "--epi", "Z->Fp(2)", "--fn", "pullback(mod(3),rkFp(3))"],
        exit: 0,
    },
    Example {
        name: "limit_dim_mod2",
        args: &["limit-dim", "--system", "Z;mul:2;T=8", "--fn", "pullback(mod(2),rkFp(2))"],
        exit: 0,
    },
    Example {
        name: "ore_test_f3",
        args: &["ore-test", "--fn", "pullback(mod(3),rkFp(3))", "--m", "2", "--horizon", "8"],
        exit: 0,
    },
    Example {
        name: "sofic_dim_c2",
        args: &["sofic-dim", "--field", "Q", "--group", "C2", "--module", "gens 1; sub 1*g0+1*g1"],
        exit: 0,
    },
    Example {
        name: "sofic_vs_vn_c3",
        args: &["sofic-vs-vn", "--field", "Q", "--group", "C3", "--samples", "30", "--seed", "5"],
        exit: 0,
    },
    Example {
        name: "rank_tsv",
        args: &["rank", "--fn", "rkZmodPk(2,2)", "--matrix", "2,0;0,1", "--format", "tsv"],
        exit: 0,
    },
];

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden").join(format!("{name}.out"))
}

/// Runs the built binary with a clean environment for the seed.
pub fn run_binary(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_sylrank"))
        .args(args)
        .env_remove("SYLRANK_SEED")
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}

/// Checks one example: two runs agree byte for byte and match the golden
/// file. With `SYLRANK_BLESS=1` the golden file is rewritten instead.
pub fn check_example(ex: &Example) -> Result<(), String> {
    let (c1, o1, e1) = run_binary(ex.args);
    let (c2, o2, _) = run_binary(ex.args);
    if c1 != ex.exit {
        return Err(format!("{}: exit {c1}, expected {} ({e1})", ex.name, ex.exit));
    }
    if c1 != c2 || o1 != o2 {
        return Err(format!("{}: two runs differ", ex.name));
    }
    let path = golden_path(ex.name);
    if std::env::var("SYLRANK_BLESS").as_deref() == Ok("1") {
        std::fs::write(&path, &o1).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let golden = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if golden != o1 {
        return Err(format!("{}: output differs from golden\n got: {o1}\nwant: {golden}", ex.name));
    }
    Ok(())
}
