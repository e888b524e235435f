//! Command-line front end: hull files in, machine-readable tables out.
//!
//! Exit codes: 0 success, 2 validation error (bad file or parameters),
//! 3 inconclusive verification or exhausted budget, 4 failed verification.
//! Numbers are emitted with 17 significant digits so files re-parse to
//! identical values; identical config and seed give byte-identical output.

use crate::capacity::{hcap_exact, hcap_integral, hcap_wos, hcap_zipper, CapEstimate, CapacityError, IntegralParams, WosParams};
use crate::cover::{cover_sums, cover_to_csv, coverage_check, default_eps_stop, default_grid, greedy_cover, Cover, CoverSums, CoverageReport};
use crate::hsiz::{hsiz_mc, hsiz_quadtree, AreaResult, HsizError};
use crate::hull::Hull;
use crate::verify::{
    constants_report, corpus, extremal_scan, theorem1_corpus, ConstantsReport, FamilySpec,
    ScanReport, TheoremReport, Verdict, VerifyBudget,
};
use clap::{Parser, Subcommand, ValueEnum};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;
pub const EXIT_FAILED: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "hcaplab", version, about = "Half-plane capacity and tangent-disk area toolbox")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Worker threads; the HCAPLAB_WORKERS environment variable overrides.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Output file; stdout when omitted.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum HcapMethod {
    Exact,
    Wos,
    Integral,
    Zipper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum HsizMethod {
    Quadtree,
    Mc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ScanFamily {
    Rect,
    Vslit,
    Halfdisk,
    Comb,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Half-plane capacity of a hull file.
    Hcap {
        hull: PathBuf,
        #[arg(long, value_enum, default_value_t = HcapMethod::Wos)]
        method: HcapMethod,
        /// Number of Monte Carlo paths (accepts 1e6 style).
        #[arg(long, default_value_t = 1e6)]
        n: f64,
        /// Start height for the limit route (default max(4 sup_im, 4 L)).
        #[arg(long)]
        y_start: Option<f64>,
        /// Start height for the integral route (default 1.5 sup_im).
        #[arg(long)]
        y0: Option<f64>,
        /// Stopping tolerance (default 1e-4 sup_im).
        #[arg(long)]
        eps: Option<f64>,
        /// Zipper refinement tolerance.
        #[arg(long, default_value_t = 1e-3)]
        tol: f64,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Tangent-disk area of a hull file.
    Hsiz {
        hull: PathBuf,
        #[arg(long, value_enum, default_value_t = HsizMethod::Quadtree)]
        method: HsizMethod,
        #[arg(long, default_value_t = 1e-3)]
        tol: f64,
        #[arg(long, default_value_t = 1e6)]
        n: f64,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Greedy covering of a hull, optionally checked against samples.
    Cover {
        hull: PathBuf,
        #[arg(long, default_value_t = 1.0)]
        c: f64,
        #[arg(long)]
        grid: Option<f64>,
        #[arg(long)]
        eps_stop: Option<f64>,
        /// Run the sampled coverage check.
        #[arg(long)]
        check: bool,
        #[arg(long, default_value_t = 1e5)]
        n: f64,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Sandwich verification over a hull file, a directory, or a random corpus.
    Verify {
        corpus: Option<PathBuf>,
        /// Generate a seeded random corpus of this size instead of reading files.
        #[arg(long)]
        random: Option<usize>,
        /// Budget preset: quick, default or thorough.
        #[arg(long, default_value = "default")]
        budget: String,
        #[arg(long)]
        n_paths: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Ratio scan over a parameterized hull family.
    Scan {
        #[arg(long, value_enum)]
        family: ScanFamily,
        /// Family parameters (rect half-widths or comb spacings), comma separated.
        #[arg(long, value_delimiter = ',')]
        params: Vec<f64>,
        #[arg(long, default_value_t = 5)]
        teeth: usize,
        #[arg(long, default_value = "default")]
        budget: String,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Covering-bound constants over a grid of c values.
    Constants {
        /// Explicit grid, comma separated; otherwise c-min..c-max in steps.
        #[arg(long, value_delimiter = ',')]
        c: Vec<f64>,
        #[arg(long, default_value_t = 0.1)]
        c_min: f64,
        #[arg(long, default_value_t = 4.0)]
        c_max: f64,
        #[arg(long, default_value_t = 40)]
        steps: usize,
    },
}

/// 17-significant-digit float form used in all emitted files.
fn jf(x: f64) -> String {
    format!("{x:.16e}")
}

fn configure_workers(flag: Option<usize>) {
    let env = std::env::var("HCAPLAB_WORKERS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok());
    if let Some(n) = env.or(flag) {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
}

struct CliFailure {
    code: i32,
    message: String,
}

impl CliFailure {
    fn validation(msg: impl Into<String>) -> CliFailure {
        CliFailure {
            code: EXIT_VALIDATION,
            message: msg.into(),
        }
    }
}

impl From<CapacityError> for CliFailure {
    fn from(e: CapacityError) -> CliFailure {
        let code = match e {
            CapacityError::TooManyAborts { .. } => EXIT_INCONCLUSIVE,
            _ => EXIT_VALIDATION,
        };
        CliFailure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<HsizError> for CliFailure {
    fn from(e: HsizError) -> CliFailure {
        let code = match e {
            HsizError::CellBudgetExceeded { .. } => EXIT_INCONCLUSIVE,
            HsizError::InvalidTolerance(_) => EXIT_VALIDATION,
        };
        CliFailure {
            code,
            message: e.to_string(),
        }
    }
}

fn load_hull(path: &Path) -> Result<Hull, CliFailure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliFailure::validation(format!("{}: {e}", path.display())))?;
    Hull::from_json_str(&text)
        .map_err(|e| CliFailure::validation(format!("{}: {e}", path.display())))
}

fn require_seed(seed: Option<u64>) -> Result<u64, CliFailure> {
    seed.ok_or_else(|| CliFailure::validation("--seed is required for stochastic methods"))
}

fn parse_count(n: f64, what: &str) -> Result<u64, CliFailure> {
    if !(n >= 1.0 && n.is_finite()) {
        return Err(CliFailure::validation(format!("{what} must be at least 1")));
    }
    Ok(n.round() as u64)
}

fn budget_preset(name: &str, n_paths: Option<u64>) -> Result<VerifyBudget, CliFailure> {
    let mut b = match name {
        "quick" => VerifyBudget::default().scaled(0.33),
        "default" => VerifyBudget::default(),
        "thorough" => VerifyBudget::default().scaled(4.0),
        other => {
            return Err(CliFailure::validation(format!(
                "unknown budget preset '{other}' (quick|default|thorough)"
            )))
        }
    };
    if let Some(n) = n_paths {
        b.n_paths = n.max(1_000);
    }
    Ok(b)
}

// ---------------------------------------------------------------------------
// Emission
// ---------------------------------------------------------------------------

fn emit_cap(est: &CapEstimate, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => format!(
            "{{\n  \"command\": \"hcap\",\n  \"method\": \"{}\",\n  \"value\": {},\n  \"std_error\": {},\n  \"bias_bound\": {},\n  \"n_paths\": {},\n  \"seed\": {}\n}}\n",
            est.method.as_str(),
            jf(est.value),
            jf(est.std_error),
            jf(est.bias_bound),
            est.n_paths,
            est.seed
        ),
        OutputFormat::Csv => format!(
            "method,value,std_error,bias_bound,n_paths,seed\n{},{},{},{},{},{}\n",
            est.method.as_str(),
            jf(est.value),
            jf(est.std_error),
            jf(est.bias_bound),
            est.n_paths,
            est.seed
        ),
    }
}

fn emit_area(res: &AreaResult, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => format!(
            "{{\n  \"command\": \"hsiz\",\n  \"method\": \"{}\",\n  \"value\": {},\n  \"error_bound\": {},\n  \"cells_or_samples\": {}\n}}\n",
            res.method.as_str(),
            jf(res.value),
            jf(res.error_bound),
            res.cells_or_samples
        ),
        OutputFormat::Csv => format!(
            "method,value,error_bound,cells_or_samples\n{},{},{},{}\n",
            res.method.as_str(),
            jf(res.value),
            jf(res.error_bound),
            res.cells_or_samples
        ),
    }
}

fn emit_cover(
    cover: &Cover,
    sums: &CoverSums,
    check: Option<&CoverageReport>,
    format: OutputFormat,
) -> String {
    match format {
        OutputFormat::Csv => cover_to_csv(cover),
        OutputFormat::Json => {
            let mut s = String::from("{\n  \"command\": \"cover\",\n  \"elements\": [\n");
            for (j, e) in cover.elements.iter().enumerate() {
                let _ = writeln!(
                    s,
                    "    {{\"j\": {}, \"x\": {}, \"y\": {}, \"c\": {}}}{}",
                    j + 1,
                    jf(e.z.x),
                    jf(e.z.y),
                    jf(e.c),
                    if j + 1 < cover.elements.len() { "," } else { "" }
                );
            }
            let _ = write!(
                s,
                "  ],\n  \"sum_sq\": {},\n  \"hsiz_lo\": {},\n  \"hsiz_hi\": {},\n  \"hcap_lo\": {},\n  \"hcap_hi\": {},\n  \"hsiz_lo_valid\": {},\n  \"hcap_hi_valid\": {}",
                jf(sums.sum_sq),
                jf(sums.hsiz_lo),
                jf(sums.hsiz_hi),
                jf(sums.hcap_lo),
                jf(sums.hcap_hi),
                sums.hsiz_lo_valid,
                sums.hcap_hi_valid
            );
            if let Some(rep) = check {
                let _ = write!(
                    s,
                    ",\n  \"coverage\": {{\"n_samples\": {}, \"exact_misses\": {}, \"violations\": {}, \"disjoint_ok\": {}, \"monotone_ok\": {}}}",
                    rep.n_samples,
                    rep.exact_misses,
                    rep.violations.len(),
                    rep.disjoint_ok,
                    rep.monotone_ok
                );
            }
            s.push_str("\n}\n");
            s
        }
    }
}

fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Inconclusive => "inconclusive",
        Verdict::Violated => "violated",
    }
}

fn emit_reports(reports: &[TheoremReport], format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => {
            let mut s = String::from("hull_id,hcap,sigma_hcap,hsiz,err_hsiz,ratio_lo,ratio_hi,pass\n");
            for r in reports {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{},{},{}",
                    r.hull_id,
                    jf(r.hcap.value),
                    jf(r.hcap.std_error),
                    jf(r.hsiz.value),
                    jf(r.hsiz.error_bound),
                    jf(r.ratio_lo),
                    jf(r.ratio_hi),
                    r.pass
                );
            }
            s
        }
        OutputFormat::Json => {
            let mut s = String::from("[\n");
            for (i, r) in reports.iter().enumerate() {
                let _ = writeln!(
                    s,
                    "  {{\"hull_id\": \"{}\", \"hcap\": {}, \"hcap_std_error\": {}, \"hcap_bias_bound\": {}, \"hcap_method\": \"{}\", \"hsiz\": {}, \"hsiz_error_bound\": {}, \"hsiz_method\": \"{}\", \"ratio\": {}, \"ratio_lo\": {}, \"ratio_hi\": {}, \"verdict\": \"{}\", \"pass\": {}}}{}",
                    r.hull_id,
                    jf(r.hcap.value),
                    jf(r.hcap.std_error),
                    jf(r.hcap.bias_bound),
                    r.hcap.method.as_str(),
                    jf(r.hsiz.value),
                    jf(r.hsiz.error_bound),
                    r.hsiz.method.as_str(),
                    jf(r.ratio),
                    jf(r.ratio_lo),
                    jf(r.ratio_hi),
                    verdict_str(r.verdict),
                    r.pass,
                    if i + 1 < reports.len() { "," } else { "" }
                );
            }
            s.push_str("]\n");
            s
        }
    }
}

fn emit_constants(rep: &ConstantsReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => {
            let mut s = String::from("c,rho,bound\n");
            for r in &rep.rows {
                let _ = writeln!(s, "{},{},{}", jf(r.c), jf(r.rho), jf(r.bound));
            }
            s
        }
        OutputFormat::Json => {
            let mut s = String::from("{\n  \"command\": \"constants\",\n  \"rows\": [\n");
            for (i, r) in rep.rows.iter().enumerate() {
                let _ = writeln!(
                    s,
                    "    {{\"c\": {}, \"rho\": {}, \"bound\": {}}}{}",
                    jf(r.c),
                    jf(r.rho),
                    jf(r.bound),
                    if i + 1 < rep.rows.len() { "," } else { "" }
                );
            }
            let _ = write!(
                s,
                "  ],\n  \"chosen_c\": {},\n  \"chosen_bound\": {},\n  \"chosen_exceeds_1_66\": {},\n  \"argmax_c\": {},\n  \"argmax_bound\": {}\n}}\n",
                jf(rep.chosen.c),
                jf(rep.chosen.bound),
                rep.chosen_exceeds_1_66,
                jf(rep.argmax.c),
                jf(rep.argmax.bound)
            );
            s
        }
    }
}

fn emit_scan(rep: &ScanReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => {
            let mut s = String::from("param,hull_id,ratio,ratio_lo,ratio_hi,verdict\n");
            for p in &rep.points {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{}",
                    jf(p.param),
                    p.hull_id,
                    jf(p.ratio),
                    jf(p.ratio_lo),
                    jf(p.ratio_hi),
                    verdict_str(p.verdict)
                );
            }
            s
        }
        OutputFormat::Json => {
            let mut s = format!(
                "{{\n  \"command\": \"scan\",\n  \"family\": \"{}\",\n  \"points\": [\n",
                rep.family
            );
            for (i, p) in rep.points.iter().enumerate() {
                let _ = writeln!(
                    s,
                    "    {{\"param\": {}, \"hull_id\": \"{}\", \"ratio\": {}, \"ratio_lo\": {}, \"ratio_hi\": {}, \"verdict\": \"{}\"}}{}",
                    jf(p.param),
                    p.hull_id,
                    jf(p.ratio),
                    jf(p.ratio_lo),
                    jf(p.ratio_hi),
                    verdict_str(p.verdict),
                    if i + 1 < rep.points.len() { "," } else { "" }
                );
            }
            let _ = write!(
                s,
                "  ],\n  \"min_ratio\": {},\n  \"max_ratio\": {},\n  \"arg_min\": \"{}\",\n  \"arg_max\": \"{}\",\n  \"all_in_sandwich\": {}\n}}\n",
                jf(rep.min_ratio),
                jf(rep.max_ratio),
                rep.arg_min,
                rep.arg_max,
                rep.all_in_sandwich
            );
            s
        }
    }
}

fn write_output(cli_out: &Option<PathBuf>, content: &str) -> Result<(), CliFailure> {
    match cli_out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| CliFailure::validation(format!("{}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

fn run_inner(cli: &Cli) -> Result<i32, CliFailure> {
    configure_workers(cli.workers);
    match &cli.command {
        Command::Hcap {
            hull,
            method,
            n,
            y_start,
            y0,
            eps,
            tol,
            seed,
        } => {
            let h = load_hull(hull)?;
            let s = h.sup_im();
            let est = match method {
                HcapMethod::Exact => hcap_exact(&h)?,
                HcapMethod::Zipper => hcap_zipper(&h, *tol)?.estimate,
                HcapMethod::Wos => {
                    let seed = require_seed(*seed)?;
                    let mut params = WosParams::for_hull(&h, parse_count(*n, "--n")?, seed);
                    if let Some(y) = y_start {
                        params.y_start = *y;
                    }
                    if let Some(e) = eps {
                        params.eps = *e;
                    }
                    hcap_wos(&h, &params)?
                }
                HcapMethod::Integral => {
                    let seed = require_seed(*seed)?;
                    let y0 = y0.unwrap_or(1.5 * s);
                    let (x_lo, x_hi) = h.x_extent();
                    let params = IntegralParams {
                        n_paths: parse_count(*n, "--n")?,
                        y0,
                        window: (x_lo - 25.0 * y0, x_hi + 25.0 * y0),
                        eps: eps.unwrap_or(1e-4 * s),
                        seed,
                    };
                    hcap_integral(&h, &params)?
                }
            };
            write_output(&cli.out, &emit_cap(&est, cli.format))?;
            Ok(EXIT_OK)
        }
        Command::Hsiz {
            hull,
            method,
            tol,
            n,
            seed,
        } => {
            let h = load_hull(hull)?;
            let res = match method {
                HsizMethod::Quadtree => hsiz_quadtree(&h, *tol)?,
                HsizMethod::Mc => {
                    let seed = require_seed(*seed)?;
                    hsiz_mc(&h, parse_count(*n, "--n")?, seed)
                }
            };
            write_output(&cli.out, &emit_area(&res, cli.format))?;
            Ok(EXIT_OK)
        }
        Command::Cover {
            hull,
            c,
            grid,
            eps_stop,
            check,
            n,
            seed,
        } => {
            let h = load_hull(hull)?;
            if !(*c > 0.0) {
                return Err(CliFailure::validation("--c must be positive"));
            }
            let cover = greedy_cover(
                &h,
                *c,
                grid.unwrap_or_else(|| default_grid(&h)),
                eps_stop.unwrap_or_else(|| default_eps_stop(&h)),
            );
            let sums = cover_sums(&cover);
            let report = if *check {
                let seed = require_seed(*seed)?;
                Some(coverage_check(&h, &cover, parse_count(*n, "--n")?, seed))
            } else {
                None
            };
            write_output(
                &cli.out,
                &emit_cover(&cover, &sums, report.as_ref(), cli.format),
            )?;
            match report {
                Some(r) if !r.pass() => Ok(EXIT_FAILED),
                _ => Ok(EXIT_OK),
            }
        }
        Command::Verify {
            corpus: corpus_path,
            random,
            budget,
            n_paths,
            seed,
        } => {
            let seed = require_seed(*seed)?;
            let budget = budget_preset(budget, *n_paths)?;
            let hulls: Vec<(String, Hull)> = match (corpus_path, random) {
                (_, Some(n)) => corpus(seed, *n),
                (Some(path), None) if path.is_dir() => {
                    let mut files: Vec<PathBuf> = std::fs::read_dir(path)
                        .map_err(|e| CliFailure::validation(format!("{}: {e}", path.display())))?
                        .filter_map(|e| e.ok().map(|e| e.path()))
                        .filter(|p| p.extension().map(|x| x == "json").unwrap_or(false))
                        .collect();
                    files.sort();
                    if files.is_empty() {
                        return Err(CliFailure::validation(format!(
                            "{}: no .json hull files",
                            path.display()
                        )));
                    }
                    let mut out = Vec::with_capacity(files.len());
                    for f in files {
                        let id = f
                            .file_stem()
                            .map(|s| s.to_string_lossy().into_owned())
                            .unwrap_or_else(|| f.display().to_string());
                        out.push((id, load_hull(&f)?));
                    }
                    out
                }
                (Some(path), None) => vec![(
                    path.file_stem()
                        .map(|s| s.to_string_lossy().into_owned())
                        .unwrap_or_else(|| path.display().to_string()),
                    load_hull(path)?,
                )],
                (None, None) => {
                    return Err(CliFailure::validation(
                        "verify needs a hull file, a directory, or --random N",
                    ))
                }
            };
            let reports = theorem1_corpus(&hulls, &budget, seed);
            write_output(&cli.out, &emit_reports(&reports, cli.format))?;
            if reports.iter().any(|r| r.verdict == Verdict::Violated) {
                Ok(EXIT_FAILED)
            } else if reports.iter().any(|r| r.verdict == Verdict::Inconclusive) {
                Ok(EXIT_INCONCLUSIVE)
            } else {
                Ok(EXIT_OK)
            }
        }
        Command::Scan {
            family,
            params,
            teeth,
            budget,
            seed,
        } => {
            let seed = require_seed(*seed)?;
            let budget = budget_preset(budget, None)?;
            let spec = match family {
                ScanFamily::Vslit => FamilySpec::UnitVSlit,
                ScanFamily::Halfdisk => FamilySpec::UnitHalfDisk,
                ScanFamily::Rect => {
                    let values = if params.is_empty() {
                        vec![0.5, 1.0, 2.0, 4.0, 8.0]
                    } else {
                        params.clone()
                    };
                    FamilySpec::RectHalfWidth { values }
                }
                ScanFamily::Comb => {
                    let spacings = if params.is_empty() {
                        vec![0.5, 1.0, 2.0, 4.0]
                    } else {
                        params.clone()
                    };
                    FamilySpec::Comb {
                        teeth: (*teeth).max(1),
                        spacings,
                    }
                }
            };
            let rep = extremal_scan(&spec, &budget, seed);
            write_output(&cli.out, &emit_scan(&rep, cli.format))?;
            if rep.all_in_sandwich {
                Ok(EXIT_OK)
            } else {
                Ok(EXIT_FAILED)
            }
        }
        Command::Constants {
            c,
            c_min,
            c_max,
            steps,
        } => {
            let grid: Vec<f64> = if c.is_empty() {
                if !(c_min > &0.0 && c_max > c_min && *steps >= 1) {
                    return Err(CliFailure::validation(
                        "need 0 < c-min < c-max and steps >= 1",
                    ));
                }
                (0..*steps)
                    .map(|i| c_min + (c_max - c_min) * i as f64 / (*steps as f64 - 1.0).max(1.0))
                    .collect()
            } else {
                if c.iter().any(|&x| x <= 0.0) {
                    return Err(CliFailure::validation("c values must be positive"));
                }
                c.clone()
            };
            let rep = constants_report(&grid);
            write_output(&cli.out, &emit_constants(&rep, cli.format))?;
            Ok(EXIT_OK)
        }
    }
}

/// Runs a parsed command line; returns the process exit code.
pub fn run(cli: &Cli) -> i32 {
    match run_inner(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("hcaplab: {}", f.message);
            f.code
        }
    }
}

/// Parses arguments (excluding the program name is fine) and runs them.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            // clap handles --help/--version with success codes
            let code = if e.use_stderr() { EXIT_VALIDATION } else { EXIT_OK };
            let _ = e.print();
            code
        }
    }
}
