//! The `sylrank` command line.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sylrank_core::bivariant::{bidim, check_bivariant_axioms, check_bivariant_properties, ext_map_rank, BivariantProperty};
use sylrank_core::rank::{
    check_axioms, check_length_criterion, check_presentation_invariance, check_round_trip, module_dim, rk_pullback, Facet,
};
use sylrank_core::sofic::{sofic_bidim, sofic_vs_vn, SoficApproximation};
use sylrank_core::transport::{limit_relative_dim_with, ore_localization_test, pushforward, epi_range_test, DEFAULT_STABILIZATION};
use sylrank_core::{FpMap, FpModule, Matrix, MatrixRankFn, RandomSampler, Ring, SamplerConfig, Submodule, VerificationReport};

use crate::module::{parse_generators, parse_matrix_file, parse_module, ModuleSpec};
use crate::output::{self, Format};
use crate::parse::{parse_group, parse_matrix, parse_ring, ParseError};
use crate::spec::{parse_epi, parse_hom, parse_rank_fn, parse_system};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "sylrank", version, about = "Exact Sylvester rank functions over concrete rings")]
struct Cli {
    /// Seed for every randomized check.
    #[arg(long, env = "SYLRANK_SEED", default_value_t = 0, global = true)]
    seed: u64,
    /// Instances per clause for the check verbs.
    #[arg(long, default_value_t = 200, global = true)]
    samples: usize,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct FnArgs {
    /// Ring the function is over; inferred from --fn when absent.
    #[arg(long)]
    ring: Option<String>,
    /// Rank function, e.g. `pullback(mod(2),rkFp(2))`.
    #[arg(long = "fn", value_name = "FN")]
    rank_fn: String,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct MatrixInput {
    /// Inline matrix: rows separated by `;`, entries by `,`.
    #[arg(long)]
    matrix: Option<String>,
    #[arg(long, value_name = "PATH")]
    matrix_file: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct ModuleInput {
    /// Inline module, e.g. `gens 2; rels 2,0; 0,3; sub 1,1`.
    #[arg(long)]
    module: Option<String>,
    #[arg(long, value_name = "PATH")]
    module_file: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[group(required = false, multiple = false)]
struct SubInput {
    /// Submodule generators; overrides nothing, so the module must then have
    /// no `sub` block.
    #[arg(long)]
    sub: Option<String>,
    #[arg(long, value_name = "PATH")]
    sub_file: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SamplerArgs {
    #[arg(long, default_value_t = 5)]
    max_dim: usize,
    #[arg(long, default_value_t = 9)]
    entry_bound: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Matrix,
    Module,
    Map,
    RoundTrip,
    Presentation,
    Bivariant,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Value of a rank function on a matrix.
    Rank {
        #[command(flatten)]
        f: FnArgs,
        #[command(flatten)]
        m: MatrixInput,
    },
    /// dim of a finitely presented module.
    Dim {
        #[command(flatten)]
        f: FnArgs,
        #[command(flatten)]
        m: ModuleInput,
    },
    /// Bivariant dim(M1|M2) of a submodule.
    Bidim {
        #[command(flatten)]
        f: FnArgs,
        #[command(flatten)]
        m: ModuleInput,
        #[command(flatten)]
        s: SubInput,
    },
    /// Extended rank of a map between finitely presented modules.
    Maprank {
        #[command(flatten)]
        f: FnArgs,
        #[command(flatten)]
        m: MatrixInput,
        /// Domain module; free of rank = matrix rows when absent.
        #[arg(long, conflicts_with = "domain_file")]
        domain: Option<String>,
        #[arg(long, value_name = "PATH")]
        domain_file: Option<PathBuf>,
        /// Codomain module; free of rank = matrix columns when absent.
        #[arg(long, conflicts_with = "codomain_file")]
        codomain: Option<String>,
        #[arg(long, value_name = "PATH")]
        codomain_file: Option<PathBuf>,
    },
    /// Randomized axiom suites.
    CheckAxioms {
        #[command(flatten)]
        f: FnArgs,
        #[arg(long, value_enum, default_value_t = Suite::Matrix)]
        facet: Suite,
        #[command(flatten)]
        sampler: SamplerArgs,
    },
    /// Randomized checks of the bivariant laws.
    CheckProperties {
        #[command(flatten)]
        f: FnArgs,
        /// Comma-separated list, or `all`.
        #[arg(long, default_value = "all")]
        properties: String,
        #[command(flatten)]
        sampler: SamplerArgs,
    },
    /// Additivity on short exact sequences.
    CheckLength {
        #[command(flatten)]
        f: FnArgs,
        #[command(flatten)]
        sampler: SamplerArgs,
    },
    /// Pull a rank function back along a ring hom and evaluate it.
    Pullback {
        /// Source ring of the hom; inferred for `mod(n)` and `incQ`.
        #[arg(long)]
        ring: Option<String>,
        #[arg(long)]
        hom: String,
        /// Rank function over the target ring.
        #[arg(long = "fn", value_name = "FN")]
        rank_fn: String,
        #[command(flatten)]
        m: MatrixInput,
    },
    /// Push a rank function forward along an epimorphism and evaluate it.
    Pushforward {
        #[arg(long)]
        epi: String,
        /// Rank function over the source ring.
        #[arg(long = "fn", value_name = "FN")]
        rank_fn: String,
        /// Matrix over the target ring.
        #[command(flatten)]
        m: MatrixInput,
    },
    /// Is the function pulled back along the epimorphism?
    EpiRange {
        #[arg(long)]
        epi: String,
        #[arg(long = "fn", value_name = "FN")]
        rank_fn: String,
    },
    /// Stage values of a directed system of multiplications.
    LimitDim {
        /// e.g. `Z;mul:2;T=8`.
        #[arg(long)]
        system: String,
        #[arg(long = "fn", value_name = "FN")]
        rank_fn: String,
        /// Trailing equal values needed for the stabilized flag.
        #[arg(long, default_value_t = DEFAULT_STABILIZATION)]
        stabilize: usize,
    },
    /// Does a rank function on Z factor through Z[1/m]?
    OreTest {
        #[arg(long = "fn", value_name = "FN")]
        rank_fn: String,
        #[arg(long)]
        m: i64,
        #[arg(long, default_value_t = 8)]
        horizon: usize,
    },
    /// Sofic bivariant dimension over a group algebra.
    SoficDim {
        #[arg(long)]
        field: String,
        #[arg(long)]
        group: String,
        #[command(flatten)]
        m: ModuleInput,
        #[command(flatten)]
        s: SubInput,
    },
    /// Sofic values against the von Neumann rank on sampled submodules.
    SoficVsVn {
        #[arg(long)]
        field: String,
        #[arg(long)]
        group: String,
        #[command(flatten)]
        sampler: SamplerArgs,
    },
}

/// What one invocation printed and its exit status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    Parse { what: String, err: ParseError },
    Usage(String),
    Core(sylrank_core::Error),
}

impl From<sylrank_core::Error> for Failure {
    fn from(e: sylrank_core::Error) -> Self {
        Failure::Core(e)
    }
}

fn parse_err(what: impl Into<String>) -> impl FnOnce(ParseError) -> Failure {
    let what = what.into();
    move |err| Failure::Parse { what, err }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

/// Runs one command line (the first element is the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 { (text, String::new()) } else { (String::new(), text) };
            return Outcome {
                code: if code == 0 { EXIT_OK } else { EXIT_USAGE },
                stdout,
                stderr,
            };
        }
    };
    let format = cli.format;
    match execute(&cli) {
        Ok((body, passed)) => Outcome {
            code: if passed { EXIT_OK } else { EXIT_FAILED },
            stdout: output::render(&output::document(body), format),
            stderr: String::new(),
        },
        Err(f) => Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: match f {
                Failure::Parse { what, err } => format!("error: {what}: {err}\n"),
                Failure::Usage(msg) => format!("error: {msg}\n"),
                Failure::Core(e) => format!("error: {e}\n"),
            },
        },
    }
}

fn ring_arg(ring: &Option<String>) -> Result<Option<Ring>, Failure> {
    ring.as_deref().map(|r| parse_ring(r).map_err(parse_err("--ring"))).transpose()
}

fn rank_fn(f: &FnArgs) -> Result<MatrixRankFn, Failure> {
    let ring = ring_arg(&f.ring)?;
    parse_rank_fn(&f.rank_fn, ring.as_ref()).map_err(parse_err("--fn"))
}

fn matrix(m: &MatrixInput, ring: &Ring) -> Result<Matrix, Failure> {
    match (&m.matrix, &m.matrix_file) {
        (Some(text), None) => parse_matrix(text, ring).map_err(parse_err("--matrix")),
        (None, Some(path)) => parse_matrix_file(&read(path)?, ring).map_err(parse_err(path.display().to_string())),
        _ => Err(Failure::Usage("give exactly one of --matrix and --matrix-file".into())),
    }
}

fn module_text(inline: &Option<String>, file: &Option<PathBuf>, flag: &str) -> Result<Option<(String, String)>, Failure> {
    match (inline, file) {
        (Some(t), None) => Ok(Some((t.clone(), format!("--{flag}")))),
        (None, Some(p)) => Ok(Some((read(p)?, p.display().to_string()))),
        (None, None) => Ok(None),
        _ => Err(Failure::Usage(format!("give only one of --{flag} and --{flag}-file"))),
    }
}

fn module(m: &ModuleInput, ring: &Ring) -> Result<ModuleSpec, Failure> {
    let (text, what) = module_text(&m.module, &m.module_file, "module")?
        .ok_or_else(|| Failure::Usage("a module is required".into()))?;
    parse_module(&text, Some(ring)).map_err(parse_err(what))
}

fn submodule(spec: &ModuleSpec, s: &SubInput) -> Result<Submodule, Failure> {
    match module_text(&s.sub, &s.sub_file, "sub")? {
        None => spec.submodule().map_err(Failure::Usage),
        Some((text, what)) => {
            if !spec.subs.is_empty() {
                return Err(Failure::Usage("the module already has a sub block; drop it or --sub".into()));
            }
            let g = parse_generators(&text, spec.ring(), spec.module.generators()).map_err(parse_err(what))?;
            Ok(Submodule::new(spec.module.clone(), g)?)
        }
    }
}

fn sampler(seed: u64, samples: usize, s: &SamplerArgs) -> RandomSampler {
    RandomSampler::new(
        seed,
        SamplerConfig {
            samples,
            max_dim: s.max_dim,
            entry_bound: s.entry_bound,
            ..SamplerConfig::default()
        },
    )
}

fn verdict(r: VerificationReport) -> (Value, bool) {
    let passed = r.passed();
    (output::report(&r), passed)
}

fn execute(cli: &Cli) -> Result<(Value, bool), Failure> {
    let ok = |v: Value| Ok((v, true));
    match &cli.command {
        Command::Rank { f, m } => {
            let rk = rank_fn(f)?;
            let a = matrix(m, rk.ring())?;
            ok(json!({ "value": output::value(&rk.evaluate(&a)?) }))
        }
        Command::Dim { f, m } => {
            let rk = rank_fn(f)?;
            let spec = module(m, rk.ring())?;
            ok(json!({ "value": output::value(&module_dim(&rk, &spec.module)?) }))
        }
        Command::Bidim { f, m, s } => {
            let rk = rank_fn(f)?;
            let spec = module(m, rk.ring())?;
            let b = bidim(&rk, &submodule(&spec, s)?)?;
            ok(json!({
                "value": output::value(&b.value),
                "stacked": output::value(&b.stacked),
                "relations": output::value(&b.relations),
            }))
        }
        Command::Maprank {
            f,
            m,
            domain,
            domain_file,
            codomain,
            codomain_file,
        } => {
            let rk = rank_fn(f)?;
            let a = matrix(m, rk.ring())?;
            let side = |inline, file, flag: &str, n: usize| -> Result<FpModule, Failure> {
                match module_text(inline, file, flag)? {
                    None => Ok(FpModule::free(rk.ring(), n)),
                    Some((text, what)) => Ok(parse_module(&text, Some(rk.ring())).map_err(parse_err(what))?.module),
                }
            };
            let dom = side(domain, domain_file, "domain", a.rows())?;
            let cod = side(codomain, codomain_file, "codomain", a.cols())?;
            let map = FpMap::new(dom, cod, a)?;
            ok(json!({ "value": output::value(&ext_map_rank(&rk, &map)?) }))
        }
        Command::CheckAxioms { f, facet, sampler: s } => {
            let rk = rank_fn(f)?;
            let mut smp = sampler(cli.seed, cli.samples, s);
            let report = match facet {
                Suite::Matrix => check_axioms(Facet::Matrix, &rk, &mut smp),
                Suite::Module => check_axioms(Facet::Module, &rk, &mut smp),
                Suite::Map => check_axioms(Facet::Map, &rk, &mut smp),
                Suite::RoundTrip => check_round_trip(&rk, &mut smp),
                Suite::Presentation => check_presentation_invariance(&rk, &mut smp),
                Suite::Bivariant => check_bivariant_axioms(&rk, &mut smp),
            };
            Ok(verdict(report))
        }
        Command::CheckProperties { f, properties, sampler: s } => {
            let rk = rank_fn(f)?;
            let props = if properties.trim() == "all" {
                BivariantProperty::ALL.to_vec()
            } else {
                properties
                    .split(',')
                    .map(|p| BivariantProperty::parse(p.trim()).map_err(Failure::Core))
                    .collect::<Result<Vec<_>, _>>()?
            };
            let mut smp = sampler(cli.seed, cli.samples, s);
            Ok(verdict(check_bivariant_properties(&rk, &mut smp, &props)))
        }
        Command::CheckLength { f, sampler: s } => {
            let rk = rank_fn(f)?;
            let mut smp = sampler(cli.seed, cli.samples, s);
            Ok(verdict(check_length_criterion(&rk, &mut smp)))
        }
        Command::Pullback { ring, hom, rank_fn: fn_text, m } => {
            let source = ring_arg(ring)?;
            let rk_s = parse_rank_fn(fn_text, None).map_err(parse_err("--fn"))?;
            let h = parse_hom(hom, source.as_ref(), rk_s.ring()).map_err(parse_err("--hom"))?;
            let rk = rk_pullback(&h, &rk_s)?;
            let a = matrix(m, rk.ring())?;
            ok(json!({ "fn": rk.label(), "value": output::value(&rk.evaluate(&a)?) }))
        }
        Command::Pushforward { epi, rank_fn: fn_text, m } => {
            let st = parse_epi(epi).map_err(parse_err("--epi"))?;
            let rk = parse_rank_fn(fn_text, Some(st.pi().source())).map_err(parse_err("--fn"))?;
            let pushed = pushforward(&rk, &st)?;
            let b = matrix(m, pushed.ring())?;
            ok(json!({ "epi": st.label(), "value": output::value(&pushed.evaluate(&b)?) }))
        }
        Command::EpiRange { epi, rank_fn: fn_text } => {
            let st = parse_epi(epi).map_err(parse_err("--epi"))?;
            let rk = parse_rank_fn(fn_text, Some(st.pi().source())).map_err(parse_err("--fn"))?;
            let r = epi_range_test(&rk, &st)?;
            ok(json!({
                "epi": st.label(),
                "in_image": r.in_image,
                "rk_pi": output::value(&r.rk_pi),
                "rk_id_s": output::value(&r.rk_id_s),
            }))
        }
        Command::LimitDim {
            system,
            rank_fn: fn_text,
            stabilize,
        } => {
            let d = parse_system(system).map_err(parse_err("--system"))?;
            let rk = parse_rank_fn(fn_text, Some(d.ring())).map_err(parse_err("--fn"))?;
            let est = limit_relative_dim_with(&rk, &d, *stabilize)?;
            ok(json!({
                "values": output::values(&est.values),
                "inf_observed": output::value(&est.inf_observed),
                "stabilized": est.stabilized,
            }))
        }
        Command::OreTest { rank_fn: fn_text, m, horizon } => {
            let rk = parse_rank_fn(fn_text, Some(&Ring::Integers)).map_err(parse_err("--fn"))?;
            let out = ore_localization_test(&rk, *m, *horizon)?;
            ok(json!({
                "in_image": out.verdict.as_str(),
                "rk_pi": output::value(&out.rk_pi),
                "values": output::values(&out.values),
            }))
        }
        Command::SoficDim { field, group, m, s } => {
            let k = parse_ring(field).map_err(parse_err("--field"))?;
            let g = parse_group(group).map_err(parse_err("--group"))?;
            let ring = Ring::group_algebra(k.clone(), g.clone())?;
            let spec = module(m, &ring)?;
            let sub = submodule(&spec, s)?;
            let approx = SoficApproximation::regular(&g);
            let v = sofic_bidim(&k, &approx, &sub)?;
            ok(json!({
                "value": output::value(&v.value),
                "modular": v.modular,
                "approximation_size": approx.size(),
            }))
        }
        Command::SoficVsVn { field, group, sampler: s } => {
            let k = parse_ring(field).map_err(parse_err("--field"))?;
            let g = parse_group(group).map_err(parse_err("--group"))?;
            let mut smp = sampler(cli.seed, cli.samples, s);
            Ok(verdict(sofic_vs_vn(&k, &g, &mut smp)))
        }
    }
}
