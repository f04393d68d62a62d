//! Command-line front end: coefficient tables, identity verification
//! reports, carpet rendering, and direct Gauss-sum evaluation.
//!
//! Exit codes: 0 all checks pass, 1 I/O failure or failed verification,
//! 2 usage/validation error.

mod output;
mod zeta;

use clap::{Parser, Subcommand, ValueEnum};
use gauss_talbot::errata::errata;
use gauss_talbot::gauss_sums::{
    gauss_sum_closed, gauss_sum_direct, regularized_sum, GaussSumParams,
};
use gauss_talbot::suites;
use gauss_talbot::talbot::coefficient_table;
use gauss_talbot::{
    render_carpet, CarpetSpec, ComplexAmp, Error as CoreError, EvalMethod, FractionalDistance,
    Picture, Route, VerificationReport, ZetaAxis, DEFAULT_TOLERANCE,
};
use output::{carpet_csv, encode_pgm, sig12, CoeffRow, COEFF_HEADER};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "gauss-talbot",
    about = "Fractional revival amplitudes as exact Gauss sums: tables, identity checks, carpets",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum PictureArg {
    Wave,
    Particle,
    Both,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum MethodArg {
    Direct,
    Closed,
    Both,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum RouteArg {
    Wave,
    Exact,
    Path,
}

impl From<RouteArg> for Route {
    fn from(r: RouteArg) -> Route {
        match r {
            RouteArg::Wave => Route::Wave,
            RouteArg::Exact => Route::Exact,
            RouteArg::Path => Route::Path,
        }
    }
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum SuiteArg {
    Reciprocity,
    Complementarity,
    Bezout,
    PhaseIdentities,
    CharSums,
    ClosedForms,
    All,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum GaussMethodArg {
    Direct,
    Closed,
    Truncated,
}

#[derive(Subcommand)]
enum Command {
    /// Revival-image coefficient table for one rational distance.
    Coeff {
        /// Propagation distance as a fraction p/q of the revival length.
        #[arg(long)]
        zeta: String,
        #[arg(long, value_enum, default_value = "both")]
        picture: PictureArg,
        #[arg(long, value_enum, default_value = "both")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
        /// Output file (stdout if omitted).
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Run an identity-verification suite and emit a JSON report.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        /// Domain bound (meaning depends on the suite; defaults match the
        /// acceptance sweeps).
        #[arg(long)]
        max: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tolerance: f64,
        /// Report file (stdout if omitted).
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Render an intensity carpet to PGM and/or CSV.
    Carpet {
        /// Comma-separated rational distances, e.g. `1/2,2/3`.
        #[arg(long, value_delimiter = ',', conflicts_with = "zeta_grid")]
        zeta: Vec<String>,
        /// Uniform grid `start:stop:count` (rationalized when --farey is given).
        #[arg(long)]
        zeta_grid: Option<String>,
        /// Replace the uniform grid by all rationals with denominator <= QMAX.
        #[arg(long, requires = "zeta_grid")]
        farey: Option<u64>,
        /// Transverse samples per unit cell.
        #[arg(long, default_value_t = 2048)]
        xi: usize,
        #[arg(long, value_enum, default_value = "wave")]
        route: RouteArg,
        #[arg(long, default_value_t = 256)]
        n_trunc: u32,
        #[arg(long, default_value_t = 48.0)]
        apod_width: f64,
        /// Period over wavelength; used only by the exact route.
        #[arg(long, default_value_t = 1000.0)]
        a_over_lambda: f64,
        /// PGM output path.
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// CSV output path.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Evaluate one quadratic Gauss sum.
    Gauss {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: u64,
        #[arg(long, default_value_t = 0)]
        c: i64,
        #[arg(long, value_enum, default_value = "direct")]
        method: GaussMethodArg,
        /// Window count for the truncated average.
        #[arg(long, default_value_t = 64)]
        window: u32,
    },
    /// Print the closed-form corrections applied in this build.
    Errata,
}

enum CliError {
    Usage(String),
    Io(String),
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

fn main() -> ExitCode {
    if let Ok(v) = std::env::var("GAUSS_TALBOT_THREADS") {
        if let Ok(n) = v.parse::<usize>() {
            if n >= 1 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn write_out(path: &Option<PathBuf>, contents: &[u8]) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, contents)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", p.display()))),
        None => std::io::stdout().write_all(contents).map_err(CliError::from),
    }
}

fn run(cmd: Command) -> Result<u8, CliError> {
    match cmd {
        Command::Coeff { zeta, picture, method, format, out } => {
            cmd_coeff(&zeta, picture, method, format, &out)
        }
        Command::Verify { suite, max, tolerance, out } => cmd_verify(suite, max, tolerance, &out),
        Command::Carpet {
            zeta,
            zeta_grid,
            farey,
            xi,
            route,
            n_trunc,
            apod_width,
            a_over_lambda,
            out,
            csv,
        } => cmd_carpet(
            &zeta,
            zeta_grid.as_deref(),
            farey,
            xi,
            route.into(),
            n_trunc,
            apod_width,
            a_over_lambda,
            &out,
            &csv,
        ),
        Command::Gauss { a, b, c, method, window } => cmd_gauss(a, b, c, method, window),
        Command::Errata => {
            let doc = serde_json::to_string_pretty(&errata()).expect("errata serializes");
            println!("{doc}");
            Ok(0)
        }
    }
}

fn parse_zeta(s: &str) -> Result<FractionalDistance, CliError> {
    let zeta: FractionalDistance = s.parse().map_err(CliError::from)?;
    if let Some((p, q)) = s.split_once('/') {
        if let (Ok(p), Ok(q)) = (p.trim().parse::<u64>(), q.trim().parse::<u64>()) {
            if p != zeta.p() || q != zeta.q() {
                eprintln!("warning: zeta {p}/{q} reduced to {zeta}");
            }
        }
    }
    Ok(zeta)
}

fn cmd_coeff(
    zeta: &str,
    picture: PictureArg,
    method: MethodArg,
    format: FormatArg,
    out: &Option<PathBuf>,
) -> Result<u8, CliError> {
    let zeta = parse_zeta(zeta)?;
    let pictures: &[Picture] = match picture {
        PictureArg::Both => &[Picture::Wave, Picture::Particle],
        PictureArg::Wave => &[Picture::Wave],
        PictureArg::Particle => &[Picture::Particle],
    };
    let tables: Vec<(Picture, Vec<_>, Vec<_>)> = pictures
        .iter()
        .map(|&pic| {
            Ok((
                pic,
                coefficient_table(&zeta, pic, EvalMethod::Direct)?,
                coefficient_table(&zeta, pic, EvalMethod::Closed)?,
            ))
        })
        .collect::<Result<_, CliError>>()?;
    let mut rows = Vec::new();
    for n in 0..zeta.q() as usize {
        for (pic, direct, closed) in &tables {
            let (amp, residual, method_name) = match method {
                MethodArg::Direct => (direct[n].amp, None, "direct"),
                MethodArg::Closed => (closed[n].amp, None, "closed"),
                MethodArg::Both => (
                    direct[n].amp,
                    Some(sig12((direct[n].amp - closed[n].amp).norm())),
                    "both",
                ),
            };
            rows.push(CoeffRow {
                n: n as i64,
                q: zeta.q(),
                p: zeta.p(),
                picture: match pic {
                    Picture::Wave => "wave".into(),
                    Picture::Particle => "particle".into(),
                },
                method: method_name.into(),
                re: sig12(amp.re),
                im: sig12(amp.im),
                modulus: sig12(amp.norm()),
                arg_over_pi: sig12(amp.arg() / std::f64::consts::PI),
                residual,
            });
        }
    }
    let doc = match format {
        FormatArg::Csv => {
            let mut s = String::from(COEFF_HEADER);
            s.push('\n');
            for r in &rows {
                s.push_str(&r.to_csv());
                s.push('\n');
            }
            s
        }
        FormatArg::Json => {
            let mut s = serde_json::to_string_pretty(&rows).expect("rows serialize");
            s.push('\n');
            s
        }
    };
    write_out(out, doc.as_bytes())?;
    Ok(0)
}

fn run_suite(suite: SuiteArg, max: Option<u64>, tol: f64) -> Vec<VerificationReport> {
    match suite {
        SuiteArg::Reciprocity => suites::sweep_reciprocity(max.unwrap_or(40), tol),
        SuiteArg::Complementarity => suites::sweep_complementarity(max.unwrap_or(50), tol),
        SuiteArg::Bezout => suites::sweep_bezout(max.unwrap_or(10_000), 1000, 0x5eed),
        SuiteArg::PhaseIdentities => suites::sweep_phase_identities(max.unwrap_or(50)),
        SuiteArg::CharSums => suites::sweep_char_sums(max.unwrap_or(199), tol),
        SuiteArg::ClosedForms => {
            let mut r = suites::sweep_coefficient_closed_forms(max.unwrap_or(50), tol);
            r.extend(suites::sweep_gauss_closed_forms(max.unwrap_or(40).min(40), tol));
            r
        }
        SuiteArg::All => {
            let mut r = Vec::new();
            for s in [
                SuiteArg::Reciprocity,
                SuiteArg::Complementarity,
                SuiteArg::Bezout,
                SuiteArg::PhaseIdentities,
                SuiteArg::CharSums,
                SuiteArg::ClosedForms,
            ] {
                r.extend(run_suite(s, max, tol));
            }
            r
        }
    }
}

fn cmd_verify(
    suite: SuiteArg,
    max: Option<u64>,
    tolerance: f64,
    out: &Option<PathBuf>,
) -> Result<u8, CliError> {
    let reports = run_suite(suite, max, tolerance);
    let passed = reports.iter().filter(|r| r.pass).count();
    let total = reports.len();
    let mut doc = serde_json::to_string_pretty(&reports).expect("reports serialize");
    doc.push('\n');
    write_out(out, doc.as_bytes())?;
    eprintln!("{passed}/{total} checks passed");
    Ok(if passed == total { 0 } else { 1 })
}

#[allow(clippy::too_many_arguments)]
fn cmd_carpet(
    zeta: &[String],
    zeta_grid: Option<&str>,
    farey: Option<u64>,
    xi: usize,
    route: Route,
    n_trunc: u32,
    apod_width: f64,
    a_over_lambda: f64,
    out: &Option<PathBuf>,
    csv: &Option<PathBuf>,
) -> Result<u8, CliError> {
    if out.is_none() && csv.is_none() {
        return Err(CliError::Usage("no output requested: pass --out and/or --csv".into()));
    }
    let zeta_axis = if let Some(grid) = zeta_grid {
        let (start, stop, count) = zeta::parse_grid(grid).map_err(CliError::Usage)?;
        match farey {
            Some(qmax) => zeta::farey_axis(start, stop, qmax).map_err(CliError::Usage)?,
            None => ZetaAxis::Uniform { start, stop, count },
        }
    } else if !zeta.is_empty() {
        let fracs = zeta.iter().map(|s| parse_zeta(s)).collect::<Result<Vec<_>, _>>()?;
        ZetaAxis::Fractions(fracs)
    } else {
        return Err(CliError::Usage("pass --zeta or --zeta-grid".into()));
    };
    let spec = CarpetSpec { xi_samples: xi, zeta_axis, n_trunc, apod_width, a_over_lambda };
    let grid = render_carpet(&spec, route)?;

    if let Some(p) = out {
        std::fs::write(p, encode_pgm(&grid))
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", p.display())))?;
    }
    if let Some(p) = csv {
        std::fs::write(p, carpet_csv(&grid))
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", p.display())))?;
    }
    let sidecar_base: &Path = out.as_deref().or(csv.as_deref()).unwrap();
    let sidecar = PathBuf::from(format!("{}.json", sidecar_base.display()));
    let echo = serde_json::json!({ "spec": spec, "route": route });
    std::fs::write(&sidecar, format!("{}\n", serde_json::to_string_pretty(&echo).unwrap()))
        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", sidecar.display())))?;
    Ok(0)
}

fn cmd_gauss(a: i64, b: u64, c: i64, method: GaussMethodArg, window: u32) -> Result<u8, CliError> {
    let params = GaussSumParams::new(a, b, c)?;
    let (name, value): (&str, ComplexAmp) = match method {
        GaussMethodArg::Direct => ("direct", gauss_sum_direct(&params)?),
        GaussMethodArg::Closed => ("closed", gauss_sum_closed(&params)?),
        GaussMethodArg::Truncated => {
            if window == 0 {
                return Err(CliError::Usage("window must be >= 1".into()));
            }
            ("truncated", regularized_sum(&params, window))
        }
    };
    let doc = serde_json::json!({
        "a": a,
        "b": b,
        "c": c,
        "method": name,
        "re": sig12(value.re),
        "im": sig12(value.im),
        "modulus": sig12(value.norm()),
        "arg_over_pi": sig12(value.arg() / std::f64::consts::PI),
    });
    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    Ok(0)
}
