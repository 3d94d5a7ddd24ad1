use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use simplicial_hga::certificate::Certificate;
use simplicial_hga::face_rings::{hh_free_loops, tor_loops, FaceRing, LoopRanks, PosetSpec, SimplicialPoset};
use simplicial_hga::{suites, CoefficientRing, Error};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "hgaf", version, about = "Exact verification of cut operations, bar constructions and formality maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Coefficient ring: z, q, or z/p.
    #[arg(long, default_value = "q")]
    ring: CoefficientRing,
    /// Write the JSON report here as well as printing the table.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check a simplicial poset document and report its shape.
    Validate {
        input: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Hilbert function of the face ring and its relation checks.
    Facering {
        input: PathBuf,
        /// Largest polynomial degree.
        #[arg(long, default_value_t = 6)]
        deg: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Ranks of Tor over the face ring, the cohomology of the based loop space.
    Tor {
        input: PathBuf,
        /// Largest internal (topological) degree.
        #[arg(long, default_value_t = 8)]
        max_q: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Ranks of Hochschild homology of the face ring, the cohomology of the free loop space.
    Hh {
        input: PathBuf,
        #[arg(long, default_value_t = 6)]
        max_q: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Run an identity suite and emit one certificate per checked instance.
    Verify {
        suite: Suite,
        #[command(flatten)]
        bounds: Bounds,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Suite {
    Operad,
    AwShuffle,
    AwS,
    BtFormality,
    DjFormality,
    HgaIdentities,
}

#[derive(Args, Clone, Serialize)]
struct Bounds {
    /// Largest surjection length k+l.
    #[arg(long, default_value_t = 4)]
    kl: usize,
    /// Largest simplex dimension.
    #[arg(long, default_value_t = 4)]
    dim: usize,
    /// Largest total a+b+c of the three simplex dimensions.
    #[arg(long, default_value_t = 4)]
    dims: usize,
    /// Largest k of a 1-biased surjection.
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// Largest l of a 1-biased surjection; defaults to k.
    #[arg(long)]
    l: Option<usize>,
    /// Largest torus rank.
    #[arg(long, default_value_t = 2)]
    rank: usize,
    /// Largest cohomological degree of the formality window.
    #[arg(long, default_value_t = 4)]
    deg: usize,
    /// Largest degree of the surjections tested for vanishing.
    #[arg(long, default_value_t = 2)]
    u_deg: usize,
    /// Largest arity of the surjections tested for vanishing.
    #[arg(long, default_value_t = 2)]
    arity: usize,
    /// Number of random samples.
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Simplicial poset document, for dj-formality.
    #[arg(long)]
    input: Option<PathBuf>,
}

struct Limits;

impl Limits {
    const KL: usize = 7;
    const DIM: usize = 7;
    const DIMS: usize = 8;
    const KL_BIASED: usize = 4;
    const RANK: usize = 3;
    const DEG: usize = 10;
    const U_DEG: usize = 4;
    const ARITY: usize = 4;
    const SAMPLES: usize = 100_000;
    const MAX_Q: usize = 16;
    const FACE_DEG: usize = 40;
}

fn check_limit(name: &str, value: usize, limit: usize) -> Result<(), Error> {
    if value > limit {
        Err(Error::LimitsExceeded(format!("--{name} {value} exceeds {limit}")))
    } else {
        Ok(())
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) => 2,
        Error::InvalidPoset(_) | Error::Invalid(_) | Error::NotACover(_) => 3,
        Error::NotField(_) => 4,
        Error::LimitsExceeded(_) => 5,
        _ => 1,
    }
}

fn read_spec(path: &Path) -> Result<PosetSpec, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    PosetSpec::from_json(&text).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        other => other,
    })
}

fn read_poset(path: &Path) -> Result<SimplicialPoset, Error> {
    read_spec(path)?.build()
}

struct Outcome {
    report: Value,
    table: String,
    ok: bool,
}

impl Outcome {
    fn code(&self, failure: u8) -> u8 {
        if self.ok {
            0
        } else {
            failure
        }
    }
}

fn emit(common: &Common, outcome: &Outcome) -> Result<(), Error> {
    let text = serde_json::to_string_pretty(&outcome.report).expect("reports serialize") + "\n";
    if let Some(path) = &common.output {
        fs::write(path, &text).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
    }
    match common.format {
        Format::Table => print!("{}", outcome.table),
        Format::Json => print!("{text}"),
    }
    Ok(())
}

fn envelope(command: &str, config: Value, result: Value) -> Value {
    json!({ "schema_version": SCHEMA_VERSION, "command": command, "config": config, "result": result })
}

fn rank_table(ranks: &LoopRanks, label: &str) -> String {
    let max_n = ranks.ranks.keys().map(|(n, _)| *n).max().unwrap_or(0);
    let mut out = format!("{label} ranks, internal degree q ≤ {}\n{:>4} |", ranks.max_q, "n\\q");
    for q in 0..=ranks.max_q {
        out += &format!("{q:>4}");
    }
    out += " | total\n";
    for (n, total) in ranks.totals(max_n).into_iter().enumerate() {
        out += &format!("{n:>4} |");
        for q in 0..=ranks.max_q {
            match ranks.rank(n, q) {
                0 => out += &format!("{:>4}", "."),
                r => out += &format!("{r:>4}"),
            }
        }
        out += &format!(" | {total}\n");
    }
    out
}

fn loops_outcome(command: &str, input: &Path, ranks: LoopRanks, common: &Common, label: &str) -> Outcome {
    let max_n = ranks.ranks.keys().map(|(n, _)| *n).max().unwrap_or(0);
    let config = json!({ "input": input.display().to_string(), "ring": common.ring, "max_q": ranks.max_q });
    let mut result = serde_json::to_value(&ranks).expect("ranks serialize");
    result["totals"] = json!(ranks.totals(max_n));
    Outcome { table: rank_table(&ranks, label), report: envelope(command, config, result), ok: true }
}

fn validate(input: &Path, common: &Common) -> Result<Outcome, Error> {
    let report = read_spec(input)?.validate()?;
    let mut table = format!("elements: {}\nf-vector: {:?}\ncomplex: {}\n", report.elements, report.f_vector, report.is_complex);
    if !report.ghost_vertices.is_empty() {
        table += &format!("ghost vertices: {}\n", report.ghost_vertices.join(", "));
    }
    for d in &report.diagnostics {
        table += &format!("error: {d}\n");
    }
    table += if report.valid { "valid\n" } else { "invalid\n" };
    let ok = report.valid;
    let config = json!({ "input": input.display().to_string(), "ring": common.ring });
    Ok(Outcome { report: envelope("validate", config, serde_json::to_value(&report).expect("report serializes")), table, ok })
}

fn facering(input: &Path, deg: usize, common: &Common) -> Result<Outcome, Error> {
    check_limit("deg", deg, Limits::FACE_DEG)?;
    let ring = FaceRing::new(read_poset(input)?);
    let dims = ring.hilbert(deg);
    let relations = ring.check_relations();
    let failed: Vec<&Certificate> = relations.iter().filter(|c| !c.passed()).collect();
    let mut table = String::from("degree  dim\n");
    for (d, n) in dims.iter().enumerate() {
        table += &format!("{d:>6}  {n}\n");
    }
    table += &format!("relations: {} checked, {} failed\n", relations.len(), failed.len());
    for c in &failed {
        table += &format!("FAIL {} [{}]: {}\n", c.identity, c.instance, c.witness.as_deref().unwrap_or(""));
    }
    let config = json!({ "input": input.display().to_string(), "ring": common.ring, "deg": deg });
    let result = json!({ "hilbert": dims, "relations": relations });
    Ok(Outcome { report: envelope("facering", config, result), table, ok: failed.is_empty() })
}

fn verify(suite: Suite, b: &Bounds) -> Result<Outcome, Error> {
    let l = b.l.unwrap_or(b.k);
    check_limit("samples", b.samples, Limits::SAMPLES)?;
    let mut certs = match suite {
        Suite::Operad => {
            check_limit("kl", b.kl, Limits::KL)?;
            check_limit("dim", b.dim, Limits::DIM)?;
            suites::operad_suite(b.kl, b.dim)
        }
        Suite::AwShuffle => {
            check_limit("dims", b.dims, Limits::DIMS)?;
            check_limit("k", b.k, Limits::KL_BIASED)?;
            check_limit("l", l, Limits::KL_BIASED)?;
            suites::aw_shuffle_suite(b.dims, b.k, l)?
        }
        Suite::AwS => {
            check_limit("kl", b.kl, Limits::KL)?;
            check_limit("dim", b.dim, Limits::DIM)?;
            suites::aw_s_suite(b.kl, b.dim)
        }
        Suite::BtFormality => {
            check_limit("rank", b.rank, Limits::RANK)?;
            check_limit("deg", b.deg, Limits::DEG)?;
            check_limit("u-deg", b.u_deg, Limits::U_DEG)?;
            check_limit("arity", b.arity, Limits::ARITY)?;
            suites::bt_formality_suite(b.rank, b.deg, b.u_deg, b.arity)?
        }
        Suite::DjFormality => {
            check_limit("deg", b.deg, Limits::DEG)?;
            check_limit("u-deg", b.u_deg, Limits::U_DEG)?;
            check_limit("arity", b.arity, Limits::ARITY)?;
            let input = b.input.as_ref().ok_or_else(|| Error::Invalid("dj-formality needs --input".into()))?;
            suites::dj_formality_suite(&read_poset(input)?, b.deg, b.u_deg, b.arity)
        }
        Suite::HgaIdentities => {
            let mut c = suites::cup_suite(b.samples, b.seed)?;
            c.extend(suites::hga_suite(b.samples, b.seed)?);
            c
        }
    };
    certs.sort_by(|x, y| (&x.identity, &x.instance, &x.window).cmp(&(&y.identity, &y.instance, &y.window)));
    let failed: Vec<&Certificate> = certs.iter().filter(|c| !c.passed()).collect();
    let mut table = format!("{} instances checked, {} failed\n", certs.len(), failed.len());
    for c in &failed {
        table += &format!("FAIL {} [{}] ({}): {}\n", c.identity, c.instance, c.window, c.witness.as_deref().unwrap_or(""));
    }
    let ok = failed.is_empty();
    let mut config = serde_json::to_value(b).expect("bounds serialize");
    config["l"] = json!(l);
    config["suite"] = serde_json::to_value(suite).expect("suite serializes");
    config["ring"] = json!(CoefficientRing::Integers);
    let result = json!({ "passed": certs.len() - failed.len(), "failed": failed.len(), "certificates": certs });
    Ok(Outcome { report: envelope("verify", config, result), table, ok })
}

fn run(cli: Cli) -> Result<u8, Error> {
    let failure = if matches!(cli.command, Command::Validate { .. }) { 3 } else { 1 };
    let (outcome, common) = match &cli.command {
        Command::Validate { input, common } => (validate(input, common)?, common),
        Command::Facering { input, deg, common } => (facering(input, *deg, common)?, common),
        Command::Tor { input, max_q, common } => {
            check_limit("max-q", *max_q, Limits::MAX_Q)?;
            let ring = FaceRing::new(read_poset(input)?);
            let ranks = tor_loops(&ring, *max_q, common.ring)?;
            (loops_outcome("tor", input, ranks, common, "Tor"), common)
        }
        Command::Hh { input, max_q, common } => {
            check_limit("max-q", *max_q, Limits::MAX_Q)?;
            let ring = FaceRing::new(read_poset(input)?);
            let ranks = hh_free_loops(&ring, *max_q, common.ring)?;
            (loops_outcome("hh", input, ranks, common, "HH"), common)
        }
        Command::Verify { suite, bounds, common } => (verify(*suite, bounds)?, common),
    };
    emit(common, &outcome)?;
    Ok(outcome.code(failure))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("hgaf: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
