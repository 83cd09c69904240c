mod json;

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use chm_core::arith::{parse_rational, QuadExt};
use chm_core::audit::{run_all, run_audit, AuditConfig, AUDIT_IDS};
use chm_core::classify::{check_against_oracle, classify_params, ClassificationReport};
use chm_core::graphs::{paley_graph, triangular_graph, verify_srg, RelationMatrix};
use chm_core::hadamard::{
    all_ek_vanish, bordered_from_graph, theorem_weights, verify_gram, verify_spectral,
    BorderedMatrix, CoreWeights, Family, GeneralSchemeData,
};
use chm_core::poly::{Endpoint, Interval, RatPoly, SturmChain};
use chm_core::srg::{enumerate_params, params_from_nklm, SrgParams};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use json::Certificate;

#[derive(Parser)]
#[command(name = "chm", version, about = "Bordered complex Hadamard matrices over strongly regular graphs, in exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a strongly regular graph and print it with its parameters.
    Construct(ConstructArgs),
    /// Print the bordered matrix of a graph and core weights.
    Border(GraphWeights),
    /// Check the complex Hadamard property.
    Verify(VerifyArgs),
    /// Classify the solutions for one parameter tuple.
    Classify(ClassifyArgs),
    /// Classify every feasible tuple up to a vertex count.
    Scan(ScanArgs),
    /// Run the identity and root-location audits.
    Audit(AuditArgs),
    /// Sturm chain, sign rows and root count of a rational polynomial.
    Sturm(SturmArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphSource {
    /// Paley graph on GF(q).
    #[arg(long)]
    paley: Option<u64>,
    /// Triangular graph T(m).
    #[arg(long)]
    triangular: Option<usize>,
    /// Graph text file.
    #[arg(long)]
    from_file: Option<PathBuf>,
}

#[derive(Copy, Clone, ValueEnum)]
enum GraphFormat {
    Json,
    Text,
}

#[derive(Args)]
struct ConstructArgs {
    #[command(flatten)]
    source: GraphSource,
    #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
    format: GraphFormat,
}

#[derive(Args)]
struct GraphWeights {
    /// `paley:Q`, `triangular:M` (also `paleyQ`, `triangularM`) or a graph text file.
    #[arg(long)]
    graph: String,
    /// A family name (ia_plus, ia_minus, ib_plus, ib_minus, ii), or a JSON
    /// array of three field elements, inline or as a file path.
    #[arg(long)]
    weights: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// JSON matrix file (array of rows of field elements); Gram test only.
    #[arg(long, conflicts_with_all = ["graph", "weights"])]
    matrix: Option<PathBuf>,
    /// Graph spec as for `border`; runs all three routes.
    #[arg(long, requires = "weights")]
    graph: Option<String>,
    /// Weights as for `border`.
    #[arg(long, requires = "graph")]
    weights: Option<String>,
}

#[derive(Args)]
struct ClassifyArgs {
    /// `n,k1,lambda,mu`.
    #[arg(long)]
    params: String,
}

#[derive(Args)]
struct ScanArgs {
    /// Largest vertex count.
    #[arg(long = "nmax", alias = "n-max")]
    n_max: i64,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Print a table instead of JSON.
    #[arg(long)]
    table: bool,
}

#[derive(Args)]
struct AuditArgs {
    /// Run a single audit.
    #[arg(long)]
    lemma: Option<String>,
    /// Largest integer r on integer grids.
    #[arg(long)]
    grid_max: Option<i64>,
    /// Largest k1 on the conference grid.
    #[arg(long)]
    conference_k_max: Option<i64>,
    /// Random samples for the factorization identities.
    #[arg(long)]
    samples: Option<usize>,
    /// Sampling seed; falls back to HADAMARD_SEED, then 0.
    #[arg(long, env = "HADAMARD_SEED")]
    seed: Option<u64>,
    /// Print a table instead of JSON.
    #[arg(long)]
    table: bool,
}

#[derive(Args)]
struct SturmArgs {
    /// Ascending rational coefficients, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    poly: String,
    /// Lower endpoint: a rational or -inf.
    #[arg(long, default_value = "-inf", allow_hyphen_values = true)]
    lo: String,
    /// Upper endpoint: a rational or inf.
    #[arg(long, default_value = "inf", allow_hyphen_values = true)]
    hi: String,
    /// Strip contents from chain members.
    #[arg(long)]
    normalized: bool,
}

/// Bad input: reported on stderr with exit code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

/// What a command prints, and whether it counts as a pass.
struct Output {
    text: String,
    ok: bool,
}

impl Output {
    fn certificate(c: &Certificate, ok: bool) -> Self {
        Self {
            text: serde_json::to_string_pretty(c).expect("values serialize"),
            ok,
        }
    }
}

fn read_file(path: &std::path::Path) -> Result<String, UsageError> {
    std::fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

fn named_graph(spec: &str) -> Result<Option<RelationMatrix>, UsageError> {
    let order = |rest: &str| rest.strip_prefix(':').unwrap_or(rest).parse::<u64>().ok();
    let spec = spec.trim();
    if let Some(q) = spec.strip_prefix("paley").and_then(order) {
        return Ok(Some(paley_graph(q)?));
    }
    if let Some(m) = spec.strip_prefix("triangular").and_then(order) {
        return Ok(Some(triangular_graph(m as usize)?));
    }
    Ok(None)
}

fn load_graph(spec: &str) -> Result<RelationMatrix, UsageError> {
    match named_graph(spec)? {
        Some(g) => Ok(g),
        None => Ok(RelationMatrix::parse_text(&read_file(spec.as_ref())?)?),
    }
}

fn graph_from_source(src: &GraphSource) -> Result<(String, RelationMatrix), UsageError> {
    if let Some(q) = src.paley {
        Ok((format!("paley:{q}"), paley_graph(q)?))
    } else if let Some(m) = src.triangular {
        Ok((format!("triangular:{m}"), triangular_graph(m)?))
    } else {
        let path = src.from_file.as_ref().expect("clap enforces one source");
        Ok((path.display().to_string(), RelationMatrix::parse_text(&read_file(path)?)?))
    }
}

/// The graph with relation labels matching its normalized parameters.
fn normalized_graph(g: RelationMatrix) -> Result<(RelationMatrix, SrgParams), UsageError> {
    let p = verify_srg(&g)?;
    Ok(if p.complemented { (g.complement(), p) } else { (g, p) })
}

fn load_weights(spec: &str, p: &SrgParams) -> Result<CoreWeights, UsageError> {
    let spec = spec.trim();
    if let Ok(f) = Family::from_str(spec) {
        return Ok(theorem_weights(p, f)?);
    }
    let text = if spec.starts_with('[') { spec.to_string() } else { read_file(spec.as_ref())? };
    let v: Value = serde_json::from_str(&text)?;
    Ok(json::weights_from_value(&v)?)
}

fn construct(args: &ConstructArgs) -> Result<Output, UsageError> {
    let (name, g) = graph_from_source(&args.source)?;
    let p = verify_srg(&g)?;
    let text = match args.format {
        GraphFormat::Text => g.to_text(),
        GraphFormat::Json => serde_json::to_string_pretty(&json!({
            "graph": name,
            "text": g.to_text(),
            "params": json::params(&p),
        }))?,
    };
    Ok(Output { text, ok: true })
}

fn border(args: &GraphWeights) -> Result<Output, UsageError> {
    let (g, p) = normalized_graph(load_graph(&args.graph)?)?;
    let w = load_weights(&args.weights, &p)?;
    let m = bordered_from_graph(&g, &w, &args.graph);
    Ok(Output {
        text: serde_json::to_string_pretty(&json::matrix(m.entries()))?,
        ok: true,
    })
}

fn verify(args: &VerifyArgs) -> Result<Output, UsageError> {
    if let Some(path) = &args.matrix {
        let v: Value = serde_json::from_str(&read_file(path)?)?;
        let m = BorderedMatrix::from_entries(json::matrix_from_value(&v)?)?;
        let g = verify_gram(&m)?;
        let cert = Certificate::new(
            "hadamard-verification",
            json!({ "matrix": path.display().to_string() }),
            json::gram(&g),
        );
        return Ok(Output::certificate(&cert, g.is_hadamard()));
    }
    let (Some(graph), Some(weights)) = (&args.graph, &args.weights) else {
        return Err(UsageError("verify needs --matrix, or --graph with --weights".into()));
    };
    let (g, p) = normalized_graph(load_graph(graph)?)?;
    let w = load_weights(weights, &p)?;
    let m = bordered_from_graph(&g, &w, graph);
    let gram = verify_gram(&m)?;
    let scheme = GeneralSchemeData::from_srg(&p);
    let spectral = verify_spectral(&scheme, w.w())?;
    let ek = all_ek_vanish(&scheme, w.w())?;
    let agree = gram.is_hadamard() == spectral.passes() && spectral.passes() == ek;
    let mut result = json::gram(&gram);
    result["routes"] = json!({
        "gram": gram.is_hadamard(),
        "spectral": json::spectral(&spectral),
        "ek_vanish": ek,
        "agree": agree,
    });
    let cert = Certificate::new(
        "hadamard-verification",
        json!({ "graph": graph, "weights": json::weights(&w), "params": json::params(&p) }),
        result,
    );
    Ok(Output::certificate(&cert, agree && gram.is_hadamard()))
}

fn parse_tuple(text: &str) -> Result<SrgParams, UsageError> {
    let parts: Vec<i64> = text
        .split(',')
        .map(|t| t.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| UsageError(format!("--params expects n,k1,lambda,mu, got {text}")))?;
    let [n, k, l, m] = parts[..] else {
        return Err(UsageError(format!("--params expects four integers, got {}", parts.len())));
    };
    Ok(params_from_nklm(n, k, l, m)?)
}

/// Classification plus the closed-form cross-check; `Err` only for inputs
/// the pipeline cannot process.
fn classify_one(p: &SrgParams) -> Result<(ClassificationReport, Option<String>), String> {
    let report = classify_params(p).map_err(|e| format!("{p}: {e}"))?;
    let mismatch = check_against_oracle(&report).err().map(|e| e.to_string());
    Ok((report, mismatch))
}

fn classify(args: &ClassifyArgs) -> Result<Output, UsageError> {
    let p = parse_tuple(&args.params)?;
    let (report, mismatch) = classify_one(&p).map_err(UsageError)?;
    let cert = Certificate::new(
        "classification",
        json!({ "params": args.params }),
        json::report(&report, mismatch.as_deref()),
    );
    Ok(Output::certificate(&cert, mismatch.is_none()))
}

type Classified = Result<(ClassificationReport, Option<String>), String>;

/// Classifies tuples on `jobs` threads; results keep the input order.
fn classify_parallel(params: &[SrgParams], jobs: usize) -> Vec<Classified> {
    let jobs = jobs.clamp(1, params.len().max(1));
    let chunk = params.len().div_ceil(jobs).max(1);
    std::thread::scope(|scope| {
        let handles: Vec<_> = params
            .chunks(chunk)
            .map(|part| scope.spawn(move || part.iter().map(classify_one).collect::<Vec<_>>()))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("classification threads do not panic"))
            .collect()
    })
}

fn scan(args: &ScanArgs) -> Result<Output, UsageError> {
    if args.jobs == 0 {
        return Err(UsageError("--jobs must be at least 1".into()));
    }
    let params = enumerate_params(args.n_max);
    let results = classify_parallel(&params, args.jobs);
    let mut ok = true;
    let mut reports = Vec::with_capacity(results.len());
    let mut table = String::from("n\tk1\tlambda\tmu\tr+s\tsolutions\tfamilies\toracle\n");
    for res in &results {
        match res {
            Ok((rep, mismatch)) => {
                ok &= mismatch.is_none();
                let p = &rep.params;
                let families: Vec<&str> = rep.solutions.iter().filter_map(|s| s.family.map(|f| f.name())).collect();
                let _ = writeln!(
                    table,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    p.n,
                    p.k1,
                    p.lambda,
                    p.mu,
                    p.r_plus_s(),
                    rep.solutions.len(),
                    if families.is_empty() { "-".into() } else { families.join(",") },
                    if mismatch.is_some() { "MISMATCH" } else { "ok" }
                );
                reports.push(json::report(rep, mismatch.as_deref()));
            }
            Err(e) => {
                ok = false;
                let _ = writeln!(table, "error: {e}");
                reports.push(json!({ "error": e }));
            }
        }
    }
    if args.table {
        return Ok(Output { text: table, ok });
    }
    let cert = Certificate::new(
        "classification",
        json!({ "nmax": args.n_max }),
        json!({ "tuples": reports.len(), "all_agree": ok, "reports": reports }),
    );
    Ok(Output::certificate(&cert, ok))
}

fn audit(args: &AuditArgs) -> Result<Output, UsageError> {
    let mut cfg = AuditConfig::default();
    if let Some(n) = args.grid_max {
        cfg.grid_max = n;
    }
    if let Some(k) = args.conference_k_max {
        cfg.conference_k_max = k;
    }
    if let Some(s) = args.samples {
        cfg.samples = s;
    }
    if let Some(seed) = args.seed {
        cfg.seed = seed;
    }
    let results = match &args.lemma {
        Some(id) => vec![run_audit(id, &cfg).map_err(|e| UsageError(format!("{e}; known ids: {}", AUDIT_IDS.join(", "))))?],
        None => run_all(&cfg),
    };
    let ok = results.iter().all(|r| r.passed());
    if args.table {
        let text = results.iter().map(|r| format!("{r}\n")).collect();
        return Ok(Output { text, ok });
    }
    let cert = Certificate::new(
        "audit",
        json!({
            "lemma": args.lemma,
            "grid_max": cfg.grid_max,
            "conference_k_max": cfg.conference_k_max,
            "samples": cfg.samples,
            "seed": cfg.seed,
        }),
        Value::Array(results.iter().map(json::audit).collect()),
    );
    Ok(Output::certificate(&cert, ok))
}

fn endpoint(text: &str) -> Result<Endpoint, UsageError> {
    Ok(match text.trim() {
        "-inf" => Endpoint::NegInf,
        "inf" | "+inf" => Endpoint::PosInf,
        t => Endpoint::At(QuadExt::from_rational(parse_rational(t)?)),
    })
}

fn sturm(args: &SturmArgs) -> Result<Output, UsageError> {
    let p = RatPoly::parse(&args.poly)?;
    let chain = if args.normalized { SturmChain::new_normalized(&p)? } else { SturmChain::new(&p)? };
    let (lo, hi) = (endpoint(&args.lo)?, endpoint(&args.hi)?);
    let interval = Interval::new(lo.clone(), hi.clone())?;
    let signs = |e: &Endpoint| -> Result<Vec<i8>, UsageError> {
        Ok(match e {
            Endpoint::NegInf => chain.signs_at_neg_inf(),
            Endpoint::PosInf => chain.signs_at_pos_inf(),
            Endpoint::At(x) => chain.signs_at(x)?,
        })
    };
    let count = chain.count(&interval)?;
    let cert = Certificate::new(
        "sturm",
        json!({ "poly": json::poly(&p), "lo": args.lo, "hi": args.hi, "normalized": args.normalized }),
        json!({
            "chain": chain.sequence().iter().map(json::poly).collect::<Vec<_>>(),
            "signs_lo": signs(&lo)?,
            "signs_hi": signs(&hi)?,
            "count": count,
        }),
    );
    Ok(Output::certificate(&cert, true))
}

fn run(cli: &Cli) -> Result<Output, UsageError> {
    match &cli.command {
        Command::Construct(a) => construct(a),
        Command::Border(a) => border(a),
        Command::Verify(a) => verify(a),
        Command::Classify(a) => classify(a),
        Command::Scan(a) => scan(a),
        Command::Audit(a) => audit(a),
        Command::Sturm(a) => sturm(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            if !out.text.ends_with('\n') {
                let _ = stdout.write_all(b"\n");
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
