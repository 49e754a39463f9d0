//! Command-line front end: `construct`, `verify`, `analyze`, `export` and
//! `sweep`. [`run`] parses arguments and returns the process exit code
//! (0 ok, 1 property failure, 2 usage or I/O error).

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::constructions::{
    affine_plane, grid_line_design, projective_plane, random_packing, trim_to_n, TrimTrace,
};
use crate::design::{validate_packing, Design};
use crate::error::{Error, Result};
use crate::graph::{check_clique_free, export_graph, ExportFormat, IncidenceGraph, OrderedDesign};
use crate::independence::{
    ravsky_quadratic_check, write_csv, write_json_lines, BoundsReport, DEFAULT_EXACT_BUDGET,
};

/// Environment variable overriding the default seed.
pub const SEED_ENV: &str = "RAMSEY_FORGE_SEED";

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Seed used when none is given: `$RAMSEY_FORGE_SEED`, else 0.
pub fn default_seed() -> Result<u64> {
    match std::env::var(SEED_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Error::Usage(format!("{SEED_ENV} must be an unsigned integer, got {v:?}"))
        }),
        Err(_) => Ok(0),
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "ramsey-forge",
    version,
    about = "Clique-free incidence graphs from balanced packings"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a design and write it as JSON.
    Construct {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Where to write the trim trace (default: next to --out).
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Check the packing conditions, clique-freeness and the incidence inequality.
    Verify {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value = "id")]
        order: OrderSpec,
    },
    /// Emit a bounds report row.
    Analyze {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value = "id")]
        order: OrderSpec,
        #[arg(long, default_value_t = DEFAULT_EXACT_BUDGET)]
        exact_budget: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Csv)]
        format: ReportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the incidence graph as DIMACS or edge-json.
    Export {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value = "id")]
        order: OrderSpec,
        #[arg(long, default_value = "dimacs")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the trimmed family over a range of vertex counts.
    Sweep {
        /// Inclusive range `lo..hi`.
        #[arg(long)]
        n: NRange,
        #[arg(long, default_value = "id")]
        order: OrderSpec,
        #[arg(long, default_value_t = DEFAULT_EXACT_BUDGET)]
        exact_budget: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Csv)]
        format: ReportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Projective,
    Affine,
    Grid,
    Trim,
    Random,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: Option<Family>,
    /// Prime order for projective and affine planes.
    #[arg(long)]
    pub p: Option<u64>,
    /// Grid size for the grid-line family.
    #[arg(long = "N")]
    pub grid: Option<usize>,
    /// Incidence count for the trim family.
    #[arg(long)]
    pub n: Option<usize>,
    /// Random packing: number of points.
    #[arg(long)]
    pub points: Option<usize>,
    /// Random packing: block size.
    #[arg(long)]
    pub block_size: Option<usize>,
    /// Random packing: strength.
    #[arg(long)]
    pub strength: Option<usize>,
    /// Random packing: target block count.
    #[arg(long)]
    pub blocks: Option<usize>,
    /// Random packing seed (default: $RAMSEY_FORGE_SEED or 0).
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Args)]
pub struct SourceArgs {
    /// Design JSON file; alternatively give --family and its parameters.
    #[arg(long)]
    pub design: Option<PathBuf>,
    #[command(flatten)]
    pub family: FamilyArgs,
}

/// Point order: `id`, `random` (default seed) or `random:<seed>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderSpec {
    Id,
    Random(u64),
}

impl FromStr for OrderSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "id" => Ok(OrderSpec::Id),
            "random" => Ok(OrderSpec::Random(default_seed()?)),
            _ => match s.strip_prefix("random:") {
                Some(seed) => seed
                    .parse()
                    .map(OrderSpec::Random)
                    .map_err(|_| Error::Usage(format!("bad order seed {seed:?}"))),
                None => Err(Error::Usage(format!(
                    "order must be id or random:<seed>, got {s:?}"
                ))),
            },
        }
    }
}

impl OrderSpec {
    pub fn apply(self, design: Design) -> OrderedDesign {
        match self {
            OrderSpec::Id => OrderedDesign::by_id(design),
            OrderSpec::Random(seed) => OrderedDesign::shuffled(design, seed),
        }
    }

    pub fn seed(self) -> Option<u64> {
        match self {
            OrderSpec::Id => None,
            OrderSpec::Random(s) => Some(s),
        }
    }
}

/// Inclusive `lo..hi` range of vertex counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NRange {
    pub lo: usize,
    pub hi: usize,
}

impl FromStr for NRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Usage(format!("range must look like lo..hi, got {s:?}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?),
            None => {
                let v = s.parse().map_err(|_| bad())?;
                (v, v)
            }
        };
        Ok(NRange { lo, hi })
    }
}

/// A built design with its report labels.
pub struct Built {
    pub design: Design,
    pub family: String,
    pub param: String,
    pub trace: Option<TrimTrace>,
}

fn require<T>(v: Option<T>, flag: &str, family: &str) -> Result<T> {
    v.ok_or_else(|| Error::Usage(format!("--{flag} is required for the {family} family")))
}

impl FamilyArgs {
    pub fn build(&self) -> Result<Built> {
        let family = self
            .family
            .ok_or_else(|| Error::Usage("--family or --design is required".into()))?;
        let (design, param, trace) = match family {
            Family::Projective => {
                let p = require(self.p, "p", "projective")?;
                (projective_plane(p)?, p.to_string(), None)
            }
            Family::Affine => {
                let p = require(self.p, "p", "affine")?;
                (affine_plane(p)?, p.to_string(), None)
            }
            Family::Grid => {
                let n = require(self.grid, "N", "grid")?;
                (grid_line_design(n)?, n.to_string(), None)
            }
            Family::Trim => {
                let n = require(self.n, "n", "trim")?;
                let (d, t) = trim_to_n(n)?;
                (d, n.to_string(), Some(t))
            }
            Family::Random => {
                let points = require(self.points, "points", "random")?;
                let size = require(self.block_size, "block-size", "random")?;
                let strength = require(self.strength, "strength", "random")?;
                let blocks = require(self.blocks, "blocks", "random")?;
                let seed = match self.seed {
                    Some(s) => s,
                    None => default_seed()?,
                };
                (
                    random_packing(points, size, strength, blocks, seed)?,
                    format!("{points}:{size}:{strength}:{blocks}:{seed}"),
                    None,
                )
            }
        };
        let family = family
            .to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .to_string();
        Ok(Built {
            design,
            family,
            param,
            trace,
        })
    }
}

impl SourceArgs {
    pub fn load(&self) -> Result<Built> {
        match &self.design {
            Some(path) => {
                if self.family.family.is_some() {
                    return Err(Error::Usage(
                        "give either --design or --family, not both".into(),
                    ));
                }
                let design = Design::from_json(&std::fs::read_to_string(path)?)?;
                let param = path
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_default();
                Ok(Built {
                    design,
                    family: "file".into(),
                    param,
                    trace: None,
                })
            }
            None => self.family.build(),
        }
    }
}

/// Outcome of a command that ran to completion.
enum Status {
    Ok,
    PropertyFailure,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(cfg) => cfg,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match execute(&cfg, out, err) {
        Ok(Status::Ok) => EXIT_OK,
        Ok(Status::PropertyFailure) => EXIT_PROPERTY,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(cfg: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> Result<Status> {
    match &cfg.command {
        Command::Construct {
            family,
            out: path,
            trace,
        } => cmd_construct(family, path.as_deref(), trace.as_deref(), out, err),
        Command::Verify { source, order } => cmd_verify(source, *order, out),
        Command::Analyze {
            source,
            order,
            exact_budget,
            format,
            out: path,
        } => cmd_analyze(
            source,
            *order,
            *exact_budget,
            *format,
            path.as_deref(),
            out,
            err,
        ),
        Command::Export {
            source,
            order,
            format,
            out: path,
        } => cmd_export(source, *order, format, path.as_deref(), out),
        Command::Sweep {
            n,
            order,
            exact_budget,
            format,
            out: path,
        } => cmd_sweep(
            *n,
            *order,
            *exact_budget,
            *format,
            path.as_deref(),
            out,
            err,
        ),
    }
}

fn emit(path: Option<&Path>, bytes: &[u8], out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, bytes)?,
        None => out.write_all(bytes)?,
    }
    Ok(())
}

/// `design.json` → `design.trace.json`.
pub fn trace_path_for(out: &Path) -> PathBuf {
    let stem = out
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "design".into());
    out.with_file_name(format!("{stem}.trace.json"))
}

fn cmd_construct(
    family: &FamilyArgs,
    path: Option<&Path>,
    trace_path: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<Status> {
    let built = family.build()?;
    let mut json = built.design.to_json()?;
    json.push('\n');
    emit(path, json.as_bytes(), out)?;
    if let Some(trace) = &built.trace {
        let target = trace_path
            .map(Path::to_path_buf)
            .or_else(|| path.map(trace_path_for));
        if let Some(target) = target {
            std::fs::write(target, format!("{}\n", trace.to_json()?))?;
        }
    }
    let summary: &mut dyn Write = if path.is_some() { out } else { err };
    writeln!(
        summary,
        "points: {}\nblocks: {}\nincidences: {}",
        built.design.point_count(),
        built.design.block_count(),
        crate::design::incidence_count(&built.design)
    )?;
    Ok(Status::Ok)
}

fn clique_name(m: usize) -> String {
    if m == 3 {
        "triangle-free".to_string()
    } else {
        format!("K{m}-free")
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_verify(source: &SourceArgs, order: OrderSpec, out: &mut dyn Write) -> Result<Status> {
    let built = source.load()?;
    let design = &built.design;
    let mut ok = true;

    let report = validate_packing(design);
    writeln!(out, "packing valid: {}", yes_no(report.valid()))?;
    if let Some(v) = report.violations.first() {
        writeln!(out, "  witness: {v}")?;
        ok = false;
    }

    let od = order.apply(design.clone());
    let g = IncidenceGraph::build_unchecked(&od);
    let m = design.strength() + 1;
    let clique = check_clique_free(&g, m);
    writeln!(out, "{}: {}", clique_name(m), yes_no(clique.is_none()))?;
    if let Some(c) = clique {
        let pairs: Vec<String> = c
            .iter()
            .map(|&v| {
                let inc = g.vertices()[v];
                format!("({}, B{})", design.label(inc.point), inc.block)
            })
            .collect();
        writeln!(out, "  witness: {}", pairs.join(" "))?;
        ok = false;
    }

    if design.strength() == 2 {
        let r = ravsky_quadratic_check(design);
        writeln!(out, "incidence inequality: {}", yes_no(r))?;
        ok &= r;
    } else {
        writeln!(
            out,
            "incidence inequality: n/a (strength {})",
            design.strength()
        )?;
    }
    Ok(if ok {
        Status::Ok
    } else {
        Status::PropertyFailure
    })
}

fn write_rows(rows: &[BoundsReport], format: ReportFormat) -> Result<Vec<u8>> {
    let mut buf = Vec::new();
    match format {
        ReportFormat::Csv => write_csv(rows, &mut buf)?,
        ReportFormat::Json => write_json_lines(rows, &mut buf)?,
    }
    Ok(buf)
}

fn cmd_analyze(
    source: &SourceArgs,
    order: OrderSpec,
    exact_budget: usize,
    format: ReportFormat,
    path: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<Status> {
    let built = source.load()?;
    let od = order.apply(built.design);
    let row = BoundsReport::compute(&od, &built.family, &built.param, order.seed(), exact_budget)?;
    let violations = row.sandwich_violations();
    emit(path, &write_rows(std::slice::from_ref(&row), format)?, out)?;
    if violations.is_empty() {
        Ok(Status::Ok)
    } else {
        writeln!(err, "bounds violated: {}", violations.join("; "))?;
        Ok(Status::PropertyFailure)
    }
}

fn cmd_export(
    source: &SourceArgs,
    order: OrderSpec,
    format: &str,
    path: Option<&Path>,
    out: &mut dyn Write,
) -> Result<Status> {
    let format: ExportFormat = format.parse()?;
    let built = source.load()?;
    let g = crate::graph::build_gamma(&order.apply(built.design))?;
    emit(path, &export_graph(&g, format), out)?;
    Ok(Status::Ok)
}

/// `⌈48·∛2·n^(2/3)⌉`, the ceiling of the G_n independence bound.
pub fn trimmed_alpha_ceiling(n: usize) -> usize {
    (48.0 * 2f64.cbrt() * (n as f64).powf(2.0 / 3.0)).ceil() as usize
}

/// Builds G_n and checks every per-n property; returns the report row or a
/// description of the first failed check.
pub fn sweep_row(
    n: usize,
    order: OrderSpec,
    exact_budget: usize,
) -> Result<std::result::Result<BoundsReport, String>> {
    let (design, _) = trim_to_n(n)?;
    let od = order.apply(design);
    let g = crate::graph::build_gamma(&od)?;
    let row =
        BoundsReport::from_graph(&od, &g, "trim", &n.to_string(), order.seed(), exact_budget)?;
    if g.vertex_count() != n {
        return Ok(Err(format!("G_{n} has {} vertices", g.vertex_count())));
    }
    if let Some(c) = check_clique_free(&g, 3) {
        return Ok(Err(format!("G_{n} contains triangle {c:?}")));
    }
    if row.greedy != row.b {
        return Ok(Err(format!(
            "G_{n}: greedy {} != |B'| {}",
            row.greedy, row.b
        )));
    }
    let ceiling = trimmed_alpha_ceiling(n);
    if row.upper > ceiling {
        return Ok(Err(format!("G_{n}: |A'|+|B'| = {} > {ceiling}", row.upper)));
    }
    let v = row.sandwich_violations();
    if !v.is_empty() {
        return Ok(Err(format!("G_{n}: {}", v.join("; "))));
    }
    Ok(Ok(row))
}

fn cmd_sweep(
    range: NRange,
    order: OrderSpec,
    exact_budget: usize,
    format: ReportFormat,
    path: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<Status> {
    if range.lo == 0 || range.lo > range.hi {
        return Err(Error::Usage(format!(
            "sweep range must satisfy 1 <= lo <= hi, got {}..{}",
            range.lo, range.hi
        )));
    }
    let mut rows = Vec::with_capacity(range.hi - range.lo + 1);
    for n in range.lo..=range.hi {
        match sweep_row(n, order, exact_budget)? {
            Ok(row) => rows.push(row),
            Err(msg) => {
                writeln!(err, "sweep failed at n={n}: {msg}")?;
                return Ok(Status::PropertyFailure);
            }
        }
    }
    emit(path, &write_rows(&rows, format)?, out)?;
    Ok(Status::Ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["ramsey-forge"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn order_spec_parsing() {
        assert_eq!("id".parse::<OrderSpec>().unwrap(), OrderSpec::Id);
        assert_eq!(
            "random:7".parse::<OrderSpec>().unwrap(),
            OrderSpec::Random(7)
        );
        assert!("random:x".parse::<OrderSpec>().is_err());
        assert!("shuffle".parse::<OrderSpec>().is_err());
    }

    #[test]
    fn range_parsing() {
        assert_eq!("1..50".parse::<NRange>().unwrap(), NRange { lo: 1, hi: 50 });
        assert_eq!("12".parse::<NRange>().unwrap(), NRange { lo: 12, hi: 12 });
        assert!("a..b".parse::<NRange>().is_err());
    }

    #[test]
    fn construct_rejects_composite_order() {
        let (code, _, err) = run_capture(&["construct", "--family", "projective", "--p", "4"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("prime required"), "{err}");
    }

    #[test]
    fn construct_to_stdout() {
        let (code, out, err) = run_capture(&["construct", "--family", "projective", "--p", "2"]);
        assert_eq!(code, EXIT_OK);
        let d = Design::from_json(out.trim()).unwrap();
        assert_eq!((d.point_count(), d.block_count()), (7, 7));
        assert!(err.contains("points: 7"));
    }

    #[test]
    fn missing_parameter_is_usage_error() {
        let (code, _, err) = run_capture(&["construct", "--family", "grid"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("--N"));
        let (code, _, _) = run_capture(&["frobnicate"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn sweep_rejects_zero() {
        let (code, _, err) = run_capture(&["sweep", "--n", "0..0"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("1 <= lo"));
    }

    #[test]
    fn verify_family_directly() {
        let (code, out, _) = run_capture(&["verify", "--family", "affine", "--p", "3"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("triangle-free: yes"));
        assert!(out.contains("incidence inequality: yes"));
    }

    #[test]
    fn ceiling_matches_direct_evaluation() {
        // 48·∛2 ≈ 60.476
        assert_eq!(trimmed_alpha_ceiling(1), 61);
        assert_eq!(trimmed_alpha_ceiling(8), 242);
    }
}
