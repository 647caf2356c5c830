//! Command-line front end.
//!
//! [`run`] is the whole program minus process I/O: it parses arguments,
//! dispatches to the library and renders the report, returning the exit
//! code alongside stdout and stderr text. Exit codes are 0 for success,
//! 1 for usage or input errors and 2 when a certification check fails.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::golomb::{self, Ruler};
use crate::rational::{format_rational, parse_rational_list};
use crate::schemes::{self, SchemeKind, Shape};
use crate::sim::{self, Ansatz};
use crate::spectrum::{
    contiguous_k, degeneracy_table, spectrum_of_grid_capped, EigenvalueList, GeneratorGrid,
};
use crate::transform::{self, GridBijection};
use crate::turnpike::{self, CheckpointConfig, SolveOptions};

pub const THREADS_ENV: &str = "QNN_SPECTRA_THREADS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Debug, Serialize, Parser)]
#[command(name = "qnn-spectra", version, about = "Exact frequency spectra of QNN data encodings")]
pub struct RunConfig {
    /// Report format; tables default to csv, everything else to json.
    #[arg(long, global = true, value_enum)]
    pub output: Option<OutputFormat>,

    /// Shorthand for `--output json`.
    #[arg(long, global = true, conflicts_with = "output")]
    #[serde(skip)]
    pub json: bool,

    /// Worker thread cap (falls back to QNN_SPECTRA_THREADS).
    #[arg(long, global = true)]
    #[serde(skip)]
    pub threads: Option<usize>,

    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[arg(long, global = true, default_value_t = 10_000_000)]
    pub max_spectrum_elements: usize,

    #[arg(long, global = true, default_value_t = turnpike::MAX_EXHAUSTIVE_D)]
    pub max_exhaustive_d: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Debug, Serialize, Subcommand)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Command {
    /// Exact spectrum of a generator grid.
    Spectrum(SpectrumArgs),
    /// Build and certify an encoding scheme.
    Construct(ConstructArgs),
    /// Solve the relaxed turnpike problem.
    Turnpike(TurnpikeArgs),
    /// Check or search Golomb rulers.
    Golomb(GolombArgs),
    /// Compare exact spectra with a simulated model's Fourier coefficients.
    Verify(VerifyArgs),
    /// Check spectral invariance under an area-preserving rearrangement.
    Invariance(InvarianceArgs),
    /// Certify every scheme over a range of shapes.
    Table1(Table1Args),
    /// Reproduce the optimal relaxed-turnpike table.
    Table2(Table2Args),
}

#[derive(Clone, Debug, Serialize, Args)]
pub struct SpectrumArgs {
    /// Grid JSON file.
    #[arg(long, conflicts_with = "eigenvalues")]
    pub grid: Option<PathBuf>,
    /// Eigenvalues used in every cell of an R x L grid, e.g. `0,1`.
    #[arg(long, requires_all = ["r", "l"])]
    pub eigenvalues: Option<String>,
    #[arg(long = "R")]
    pub r: Option<usize>,
    #[arg(long = "L")]
    pub l: Option<usize>,
    /// Include the degeneracy of every frequency.
    #[arg(long)]
    pub degeneracy: bool,
}

#[derive(Clone, Debug, Serialize, Args)]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    pub kind: SchemeKind,
    #[arg(long = "R")]
    pub r: usize,
    #[arg(long = "L")]
    pub l: usize,
    #[arg(long, default_value_t = 1)]
    pub q: u32,
    /// Base eigenvalues; defaults depend on kind and q.
    #[arg(long)]
    pub base: Option<String>,
}

#[derive(Clone, Debug, Serialize, Args)]
pub struct TurnpikeArgs {
    #[arg(long)]
    pub d: usize,
    /// Enumerate every optimal set instead of one.
    #[arg(long)]
    pub exhaustive: bool,
    /// Resumable state file for exhaustive runs.
    #[arg(long)]
    pub checkpoint: Option<PathBuf>,
    /// Search nodes between checkpoint writes.
    #[arg(long, default_value_t = turnpike::DEFAULT_CHECKPOINT_INTERVAL)]
    pub checkpoint_interval: u64,
}

#[derive(Clone, Debug, Serialize, Args)]
pub struct GolombArgs {
    /// Marks to check, e.g. `0,1,4,6`.
    #[arg(long, conflicts_with_all = ["order", "search"])]
    pub check: Option<String>,
    #[arg(long, requires = "search")]
    pub order: Option<usize>,
    #[arg(long, requires = "order")]
    pub search: bool,
    /// Longest ruler considered by the search.
    #[arg(long, default_value_t = 1000)]
    pub max_length: u64,
}

#[derive(Clone, Debug, Serialize, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, required_unless_present = "grid")]
    pub scheme: Option<SchemeKind>,
    #[arg(long = "R", required_unless_present = "grid")]
    pub r: Option<usize>,
    #[arg(long = "L", required_unless_present = "grid")]
    pub l: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub q: u32,
    #[arg(long)]
    pub base: Option<String>,
    /// Grid JSON files, one per input variable (at most two).
    #[arg(long, conflicts_with = "scheme")]
    pub grid: Vec<PathBuf>,
    #[arg(long, value_enum, default_value_t = Ansatz::Parallel)]
    pub ansatz: Ansatz,
    /// Number of consecutive seeds starting at `--seed`.
    #[arg(long, default_value_t = 20)]
    pub seeds: u64,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
}

#[derive(Clone, Debug, Serialize, Args)]
pub struct InvarianceArgs {
    #[arg(long)]
    pub grid: PathBuf,
    /// Target shape `R'xL'` in qubits and layers.
    #[arg(long, value_parser = parse_shape)]
    pub target: Option<(usize, usize)>,
    /// Explicit bijection JSON; overrides the row-major default.
    #[arg(long)]
    pub bijection: Option<PathBuf>,
}

#[derive(Clone, Debug, Serialize, Args)]
pub struct Table1Args {
    #[arg(long = "max-R", default_value_t = 3)]
    pub max_r: usize,
    #[arg(long = "max-L", default_value_t = 3)]
    pub max_l: usize,
    /// Keep only shapes with R * L at most this.
    #[arg(long, default_value_t = 6)]
    pub max_area: usize,
}

#[derive(Clone, Debug, Serialize, Args)]
pub struct Table2Args {
    #[arg(long, default_value_t = 6)]
    pub max_d: usize,
}

fn parse_shape(s: &str) -> std::result::Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("expected RxL, got {s:?}"))?;
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    Ok((parse(a)?, parse(b)?))
}

/// Exit code, stdout and stderr of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(cfg) => run_config(&cfg),
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            }
        }
    }
}

fn thread_count(cfg: &RunConfig) -> Result<Option<usize>> {
    if let Some(n) = cfg.threads {
        return Ok(Some(n));
    }
    match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Error::InvalidArgument(format!("{THREADS_ENV}={v:?} is not a count"))),
        Err(_) => Ok(None),
    }
}

pub fn run_config(cfg: &RunConfig) -> Outcome {
    let result = thread_count(cfg).and_then(|threads| {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(n) = threads {
            builder = builder.num_threads(n);
        }
        let pool = builder
            .build()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
        pool.install(|| execute(cfg))
    });
    match result {
        Ok(report) => Outcome {
            code: if report.pass { 0 } else { 2 },
            stdout: report.text,
            stderr: String::new(),
        },
        Err(e) => {
            let code = if e.is_certification_failure() { 2 } else { 1 };
            let stderr = match format(cfg) {
                OutputFormat::Json => {
                    let v = json!({"error": {"code": e.code(), "message": e.to_string()}});
                    format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable"))
                }
                _ => format!("error [{}]: {e}\n", e.code()),
            };
            Outcome { code, stdout: String::new(), stderr }
        }
    }
}

fn format(cfg: &RunConfig) -> OutputFormat {
    if cfg.json {
        return OutputFormat::Json;
    }
    cfg.output.unwrap_or(match cfg.command {
        Command::Table1(_) | Command::Table2(_) => OutputFormat::Csv,
        _ => OutputFormat::Json,
    })
}

struct Rendered {
    text: String,
    pass: bool,
}

/// A report in all three formats; rendering picks one.
struct Report {
    json: Value,
    csv: Option<Vec<Vec<String>>>,
    text: String,
    pass: bool,
}

fn render(cfg: &RunConfig, rep: Report) -> Result<Rendered> {
    let text = match format(cfg) {
        OutputFormat::Json => {
            let mut config = serde_json::to_value(cfg)?;
            if let Value::Object(m) = &mut config {
                m.insert("output".into(), json!("json"));
            }
            let doc = json!({"config": config, "report": rep.json});
            format!("{}\n", serde_json::to_string_pretty(&doc)?)
        }
        OutputFormat::Csv => {
            let rows = rep.csv.ok_or_else(|| {
                Error::InvalidArgument("this command has no csv output".into())
            })?;
            let mut w = csv::Writer::from_writer(Vec::new());
            for row in rows {
                w.write_record(&row).map_err(|e| Error::Parse(e.to_string()))?;
            }
            String::from_utf8(w.into_inner().map_err(|e| Error::Parse(e.to_string()))?)
                .expect("csv writer emits utf-8")
        }
        OutputFormat::Text => rep.text,
    };
    Ok(Rendered { text, pass: rep.pass })
}

fn execute(cfg: &RunConfig) -> Result<Rendered> {
    let rep = match &cfg.command {
        Command::Spectrum(a) => spectrum_cmd(cfg, a)?,
        Command::Construct(a) => construct_cmd(cfg, a)?,
        Command::Turnpike(a) => turnpike_cmd(cfg, a)?,
        Command::Golomb(a) => golomb_cmd(a)?,
        Command::Verify(a) => verify_cmd(cfg, a)?,
        Command::Invariance(a) => invariance_cmd(cfg, a)?,
        Command::Table1(a) => table1_cmd(cfg, a)?,
        Command::Table2(a) => table2_cmd(cfg, a)?,
    };
    render(cfg, rep)
}

fn read_grid(path: &PathBuf) -> Result<GeneratorGrid> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

fn parse_base(kind: SchemeKind, q: u32, base: Option<&str>) -> Result<EigenvalueList> {
    match base {
        Some(s) => EigenvalueList::new(parse_rational_list(s)?),
        None => schemes::default_base(kind, q),
    }
}

fn list_string<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn spectrum_cmd(cfg: &RunConfig, a: &SpectrumArgs) -> Result<Report> {
    let grid = match (&a.grid, &a.eigenvalues) {
        (Some(p), _) => read_grid(p)?,
        (None, Some(ev)) => {
            let cell = EigenvalueList::new(parse_rational_list(ev)?)?;
            let q = cell.len().trailing_zeros();
            if cell.len() != 1 << q {
                return Err(Error::InvalidGrid(format!(
                    "cell has {} eigenvalues, expected a power of two",
                    cell.len()
                )));
            }
            let (r, l) = (a.r.unwrap_or(1), a.l.unwrap_or(1));
            if r % q as usize != 0 {
                return Err(Error::InvalidGrid(format!("q = {q} does not divide R = {r}")));
            }
            GeneratorGrid::from_fn(q, r / q as usize, l, |_, _| cell.clone())?
        }
        (None, None) => {
            return Err(Error::InvalidArgument("pass --grid or --eigenvalues".into()))
        }
    };
    let omega = spectrum_of_grid_capped(&grid, cfg.max_spectrum_elements)?;
    let k = contiguous_k(&omega).ok();
    let deg = a.degeneracy.then(|| degeneracy_table(&grid));

    let mut json = json!({
        "spectrum": omega,
        "size": omega.len(),
        "radius": format_rational(&omega.radius()),
        "k_contig": k,
        "representation_count": grid.representation_count().to_string(),
    });
    let mut csv = vec![vec!["omega".to_string()]];
    if let Some(d) = &deg {
        csv[0].push("degeneracy".into());
        let table: serde_json::Map<String, Value> = d
            .iter()
            .map(|(w, n)| (format_rational(w), json!(n.to_string())))
            .collect();
        json["degeneracy"] = Value::Object(table);
    }
    for w in omega.elements() {
        let mut row = vec![format_rational(w)];
        if let Some(d) = &deg {
            row.push(d[w].to_string());
        }
        csv.push(row);
    }
    let mut text = format!(
        "Omega = {}\n|Omega| = {}\nradius = {}\n",
        omega.describe(),
        omega.len(),
        format_rational(&omega.radius())
    );
    if let Some(k) = k {
        writeln!(text, "K = {k}").unwrap();
    }
    Ok(Report { json, csv: Some(csv), text, pass: true })
}

fn construct_cmd(cfg: &RunConfig, a: &ConstructArgs) -> Result<Report> {
    let shape = Shape::new(a.r, a.l, a.q);
    let base = parse_base(a.kind, a.q, a.base.as_deref())?;
    let rep = schemes::certify_with_limit(a.kind, shape, &base, cfg.max_spectrum_elements)?;
    let csv = csv_rows(&schemes::table_one_csv(std::slice::from_ref(&rep))?);
    let text = format!(
        "{} R={} L={} q={}\npredicted: {}\ncomputed: {}\n|Omega| = {} (bound {})\nK = {}{}\n\
         maximal in size: {}\nmaximal in K: {}\n",
        rep.kind,
        rep.r,
        rep.l,
        rep.q,
        rep.predicted,
        rep.computed.describe(),
        rep.size,
        rep.size_bound,
        rep.k_contig,
        rep.k_bound.as_ref().map(|b| format!(" (bound {b})")).unwrap_or_default(),
        rep.maximal_in_size,
        rep.maximal_in_k,
    );
    Ok(Report { json: serde_json::to_value(&rep)?, csv: Some(csv), text, pass: true })
}

fn csv_rows(text: &str) -> Vec<Vec<String>> {
    csv::ReaderBuilder::new()
        .has_headers(false)
        .from_reader(text.as_bytes())
        .records()
        .map(|r| r.expect("round-trip of generated csv").iter().map(String::from).collect())
        .collect()
}

fn turnpike_cmd(cfg: &RunConfig, a: &TurnpikeArgs) -> Result<Report> {
    let opts = SolveOptions {
        exhaustive: a.exhaustive,
        max_exhaustive_d: cfg.max_exhaustive_d,
        checkpoint: a.checkpoint.clone().map(|path| CheckpointConfig {
            path,
            interval: a.checkpoint_interval,
        }),
    };
    let sol = turnpike::solve_with(a.d, &opts)?;
    let mut csv = vec![vec!["d".into(), "K".into(), "solution".into()]];
    for s in &sol.solutions {
        csv.push(vec![sol.d.to_string(), sol.best_k.to_string(), list_string(s)]);
    }
    let mut text = format!("d = {}\nK = {}\n", sol.d, sol.best_k);
    if sol.exhaustive {
        writeln!(text, "solutions = {}", sol.solutions.len()).unwrap();
    }
    for s in &sol.solutions {
        writeln!(text, "{{{}}}", list_string(s)).unwrap();
    }
    let json = json!({
        "d": sol.d,
        "best_k": sol.best_k,
        "solutions": sol.solutions,
        "solution_count": sol.solutions.len(),
        "candidate_space_size": sol.candidate_space_size.to_string(),
        "exhaustive": sol.exhaustive,
    });
    Ok(Report { json, csv: Some(csv), text, pass: true })
}

fn ruler_json(r: &Ruler, stats: &golomb::RulerStats) -> Value {
    json!({
        "marks": r.marks().iter().map(|m| m.to_string()).collect::<Vec<_>>(),
        "order": stats.order,
        "length": stats.length.to_string(),
        "perfect": stats.perfect,
    })
}

fn golomb_cmd(a: &GolombArgs) -> Result<Report> {
    if let Some(s) = &a.check {
        let marks = parse_rational_list(s)?;
        let ok = golomb::is_golomb(&marks);
        let (json, text) = if ok {
            let r = Ruler::canonical(&marks)?;
            let stats = golomb::ruler_stats(&r)?;
            let mut j = ruler_json(&r, &stats);
            j["golomb"] = json!(true);
            let t = format!(
                "Golomb ruler of order {}, length {}{}\n",
                stats.order,
                stats.length,
                if stats.perfect { ", perfect" } else { "" }
            );
            (j, t)
        } else {
            (
                json!({"marks": marks.iter().map(format_rational).collect::<Vec<_>>(), "golomb": false}),
                "not a Golomb ruler\n".to_string(),
            )
        };
        let csv = vec![
            vec!["marks".into(), "golomb".into()],
            vec![s.clone(), ok.to_string()],
        ];
        return Ok(Report { json, csv: Some(csv), text, pass: true });
    }
    let order = a
        .order
        .ok_or_else(|| Error::InvalidArgument("pass --check or --order with --search".into()))?;
    let found = golomb::search_optimal(order, a.max_length)?;
    let mut rulers = Vec::new();
    let mut csv = vec![vec!["order".into(), "length".into(), "marks".into(), "has_mirror".into()]];
    let mut text = String::new();
    if found.is_empty() {
        writeln!(text, "no Golomb ruler of order {order} with length <= {}", a.max_length).unwrap();
    }
    for f in &found {
        let stats = golomb::ruler_stats(&f.ruler)?;
        let mut j = ruler_json(&f.ruler, &stats);
        j["has_mirror"] = json!(f.has_mirror);
        rulers.push(j);
        let marks = list_string(f.ruler.marks());
        csv.push(vec![order.to_string(), stats.length.to_string(), marks.clone(), f.has_mirror.to_string()]);
        writeln!(
            text,
            "{{{marks}}} length {}{}",
            stats.length,
            if f.has_mirror { " (and its mirror)" } else { "" }
        )
        .unwrap();
    }
    let json = json!({"order": order, "max_length": a.max_length, "rulers": rulers});
    Ok(Report { json, csv: Some(csv), text, pass: true })
}

fn verify_cmd(cfg: &RunConfig, a: &VerifyArgs) -> Result<Report> {
    if !a.grid.is_empty() {
        let grids: Vec<GeneratorGrid> = a.grid.iter().map(read_grid).collect::<Result<_>>()?;
        let mut reports = Vec::new();
        for i in 0..a.seeds {
            reports.push(sim::verify_multivariate(&grids, a.ansatz, cfg.seed + i, a.tol)?);
        }
        let max_leak = reports.iter().map(|r| r.max_leak).fold(0.0, f64::max);
        let pass = reports.iter().all(|r| r.pass);
        let exact = &reports[0].exact;
        let json = json!({
            "ansatz": a.ansatz,
            "exact": exact,
            "seeds": (0..a.seeds).map(|i| cfg.seed + i).collect::<Vec<_>>(),
            "max_leak": max_leak,
            "pass": pass,
        });
        let text = format!(
            "{} variable(s), {:?} ansatz\nmax leak = {max_leak:e}\npass = {pass}\n",
            grids.len(),
            a.ansatz
        );
        let csv = vec![
            vec!["ansatz".into(), "variables".into(), "max_leak".into(), "pass".into()],
            vec![format!("{:?}", a.ansatz).to_lowercase(), grids.len().to_string(), max_leak.to_string(), pass.to_string()],
        ];
        return Ok(Report { json, csv: Some(csv), text, pass });
    }
    let kind = a.scheme.expect("clap requires scheme without grid");
    let shape = Shape::new(a.r.expect("required"), a.l.expect("required"), a.q);
    let base = parse_base(kind, a.q, a.base.as_deref())?;
    let seeds: Vec<u64> = (0..a.seeds).map(|i| cfg.seed + i).collect();
    let rep = sim::verify_scheme(kind, shape, &base, &seeds, a.tol)?;
    let text = format!(
        "{} R={} L={} q={}\nexact radius = {}\nmax leak = {:e}\nattained fraction = {}\npass = {}\n",
        kind, shape.r, shape.l, shape.q, rep.exact_radius, rep.max_leak, rep.attained_fraction, rep.pass
    );
    let csv = vec![
        vec!["scheme".into(), "R".into(), "L".into(), "q".into(), "exact_radius".into(), "max_leak".into(), "attained_fraction".into(), "pass".into()],
        vec![
            kind.name().into(),
            shape.r.to_string(),
            shape.l.to_string(),
            shape.q.to_string(),
            rep.exact_radius.to_string(),
            rep.max_leak.to_string(),
            rep.attained_fraction.to_string(),
            rep.pass.to_string(),
        ],
    ];
    let pass = rep.pass;
    Ok(Report { json: serde_json::to_value(&rep)?, csv: Some(csv), text, pass })
}

fn invariance_cmd(cfg: &RunConfig, a: &InvarianceArgs) -> Result<Report> {
    let grid = read_grid(&a.grid)?;
    let rep = match (&a.bijection, a.target) {
        (Some(path), _) => {
            let b: GridBijection = serde_json::from_str(&std::fs::read_to_string(path)?)?;
            let moved = transform::apply(&grid, &b)?;
            let spectrum = spectrum_of_grid_capped(&grid, cfg.max_spectrum_elements)?;
            let target_spectrum = spectrum_of_grid_capped(&moved, cfg.max_spectrum_elements)?;
            transform::InvarianceReport {
                source: (grid.qubits(), grid.layers()),
                target: (moved.qubits(), moved.layers()),
                spectra_equal: spectrum == target_spectrum,
                spectrum,
                target_spectrum,
            }
        }
        (None, Some(target)) => {
            spectrum_of_grid_capped(&grid, cfg.max_spectrum_elements)?;
            transform::invariance_report(&grid, target)?
        }
        (None, None) => {
            return Err(Error::InvalidArgument("pass --target or --bijection".into()))
        }
    };
    let text = format!(
        "{}x{} -> {}x{}\nOmega = {}\nOmega' = {}\nequal = {}\n",
        rep.source.0,
        rep.source.1,
        rep.target.0,
        rep.target.1,
        rep.spectrum.describe(),
        rep.target_spectrum.describe(),
        rep.spectra_equal
    );
    let csv = vec![
        vec!["source".into(), "target".into(), "size".into(), "spectra_equal".into()],
        vec![
            format!("{}x{}", rep.source.0, rep.source.1),
            format!("{}x{}", rep.target.0, rep.target.1),
            rep.spectrum.len().to_string(),
            rep.spectra_equal.to_string(),
        ],
    ];
    if !rep.spectra_equal {
        return Err(Error::Verification(format!(
            "spectrum changed under rearrangement: {} vs {}",
            rep.spectrum.describe(),
            rep.target_spectrum.describe()
        )));
    }
    Ok(Report { json: serde_json::to_value(&rep)?, csv: Some(csv), text, pass: true })
}

fn table1_cmd(cfg: &RunConfig, a: &Table1Args) -> Result<Report> {
    let reports: Vec<_> = schemes::table_one_with_limit(a.max_r, a.max_l, cfg.max_spectrum_elements)?
        .into_iter()
        .filter(|r| r.r * r.l <= a.max_area)
        .collect();
    let csv_text = schemes::table_one_csv(&reports)?;
    let text = csv_text.replace(',', "\t");
    let rows: Vec<Value> = reports
        .iter()
        .map(|r| {
            json!({
                "kind": r.kind, "R": r.r, "L": r.l, "q": r.q,
                "base": r.base,
                "predicted": r.predicted,
                "size": r.size,
                "k_contig": r.k_contig,
                "size_bound": r.size_bound.to_string(),
                "k_bound": r.k_bound.as_ref().map(BigUint::to_string),
                "maximal_in_size": r.maximal_in_size,
                "maximal_in_k": r.maximal_in_k,
            })
        })
        .collect();
    Ok(Report { json: json!({"rows": rows}), csv: Some(csv_rows(&csv_text)), text, pass: true })
}

fn table2_cmd(cfg: &RunConfig, a: &Table2Args) -> Result<Report> {
    if a.max_d > cfg.max_exhaustive_d {
        return Err(Error::DeskScaleLimit(format!(
            "--max-d {} exceeds --max-exhaustive-d {}",
            a.max_d, cfg.max_exhaustive_d
        )));
    }
    let rows = turnpike::verify_table_two(a.max_d)?;
    let mut csv = vec![vec!["d".into(), "K".into(), "solutions".into(), "example".into()]];
    let mut text = String::from("d\tK\tsolutions\texample\n");
    for r in &rows {
        let ex = list_string(&r.example);
        csv.push(vec![r.d.to_string(), r.best_k.to_string(), r.solution_count.to_string(), ex.clone()]);
        writeln!(text, "{}\t{}\t{}\t{{{ex}}}", r.d, r.best_k, r.solution_count).unwrap();
    }
    Ok(Report { json: json!({"rows": rows}), csv: Some(csv), text, pass: true })
}
