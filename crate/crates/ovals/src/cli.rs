//! Command-line front end.
//!
//! Subcommands: `check` (parse + convexity lint), `report` (full analysis,
//! optionally as JSON), `render` (SVG figures), `sweep` (randomized
//! inequality verification), and `canon` (rotational normal form).
//!
//! Exit codes: 0 success; 2 unreadable or unparsable input; 3 convexity
//! failure; 4 a sweep found a violation; 5 invalid arguments.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::format::{parse_curve, report_json};
use crate::geometry::canonical_phase;
use crate::inequalities::{analyze, sweep, DeficitReport};
use crate::render::{render_svg, Layer, ParallelDistance, RenderSpec};
use crate::support::{FourierSupport, CONVEXITY_TOL, DEGENERATE_CONVEXITY_TOL};

#[derive(Parser)]
#[command(
    name = "ovals",
    version,
    about = "Support-function toolkit: deficit reports, derived-curve figures, inequality sweeps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a curve file and lint it (convexity margin, width, Steiner point)
    Check {
        /// Curve file (`a0`/`h` directives, `#` comments)
        file: PathBuf,
    },
    /// Compute functionals, deficit bounds, slacks, and the equality class
    Report {
        file: PathBuf,
        /// Emit the JSON report instead of the human-readable summary
        #[arg(long)]
        json: bool,
        /// Accept curves whose curvature radius touches zero
        #[arg(long)]
        allow_degenerate: bool,
    },
    /// Render the curve and derived constructions as an SVG document
    Render {
        file: PathBuf,
        /// Output SVG path
        #[arg(long)]
        out: PathBuf,
        /// Layers to draw, out of: boundary, pedal, evolute, parallel
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "boundary,parallel,evolute"
        )]
        layers: Vec<String>,
        /// Parallel offset distance: a number, or L/2pi for the canonical one
        #[arg(long, default_value = "L/2pi")]
        parallel: String,
        /// Sample points per curve (at least 16)
        #[arg(long, default_value_t = 1024)]
        samples: usize,
    },
    /// Verify the deficit inequalities over seeded random convex curves
    Sweep {
        /// Number of curves
        #[arg(long)]
        count: usize,
        /// Maximum harmonic order of the generated curves
        #[arg(long)]
        degree: u32,
        /// Base seed; curve i uses seed + i
        #[arg(long)]
        seed: u64,
        /// Generate constant-width curves (odd harmonics only)
        #[arg(long)]
        constant_width: bool,
        /// Curvature-radius floor of the generated curves
        #[arg(long, default_value_t = 0.05)]
        min_radius: f64,
        /// Relative slack below which a bound counts as violated
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Print the rotational normal form of a single-harmonic curve (n = 2 or 3)
    Canon { file: PathBuf },
}

/// Parses `argv` and runs the selected subcommand, returning the exit code.
pub fn run<I, T>(argv: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 5,
            };
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Command::Check { file } => cmd_check(&file),
        Command::Report {
            file,
            json,
            allow_degenerate,
        } => cmd_report(&file, json, allow_degenerate),
        Command::Render {
            file,
            out,
            layers,
            parallel,
            samples,
        } => cmd_render(&file, &out, &layers, &parallel, samples),
        Command::Sweep {
            count,
            degree,
            seed,
            constant_width,
            min_radius,
            tol,
        } => cmd_sweep(count, degree, seed, constant_width, min_radius, tol),
        Command::Canon { file } => cmd_canon(&file),
    }
}

fn load_curve(path: &Path) -> Result<FourierSupport, u8> {
    let text = fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", path.display());
        2
    })?;
    parse_curve(&text).map_err(|e| {
        eprintln!("error: {}: {e}", path.display());
        2
    })
}

fn cmd_check(file: &Path) -> u8 {
    let p = match load_curve(file) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let cm = p.min_curvature_radius();
    let steiner = p.steiner_point();
    println!("curve: p(φ) = {p}");
    println!("degree: {}", p.degree());
    println!("min(p + p'') = {} at phi = {}", cm.value, cm.phi);
    println!("steiner point: {steiner}");
    println!("constant width: {}", p.is_constant_width(1e-9));
    if cm.value <= DEGENERATE_CONVEXITY_TOL {
        eprintln!("error: not convex");
        return 3;
    }
    if cm.value <= CONVEXITY_TOL {
        println!("note: degenerate — the curvature radius touches zero");
    }
    0
}

fn cmd_report(file: &Path, json: bool, allow_degenerate: bool) -> u8 {
    let p = match load_curve(file) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let gate = if allow_degenerate {
        DEGENERATE_CONVEXITY_TOL
    } else {
        CONVEXITY_TOL
    };
    let cm = p.min_curvature_radius();
    if cm.value <= gate {
        let hint = if cm.value > DEGENERATE_CONVEXITY_TOL {
            " (a degenerate boundary case; retry with --allow-degenerate)"
        } else {
            ""
        };
        eprintln!(
            "error: not convex: min(p + p'') = {} at phi = {}{hint}",
            cm.value, cm.phi
        );
        return 3;
    }
    let report = match analyze(&p, 1e-9) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("error: {e}");
            return 3;
        }
    };
    if json {
        print!("{}", report_json(&report));
    } else {
        print_report(&p, &report);
    }
    0
}

fn print_report(p: &FourierSupport, report: &DeficitReport) {
    println!("curve: p(φ) = {p}");
    println!("L         = {}", report.length);
    println!("F         = {}", report.area);
    println!("A         = {}", report.pedal_area);
    println!("F_e       = {}", report.evolute_area);
    println!("delta     = {}", report.deficit);
    println!("delta2_sq = {}", report.delta2_sq);
    println!("constant width: {}", report.constant_width);
    println!(
        "classification: {} (residual {:e})",
        report.classification.case.label(),
        report.classification.residual
    );
    println!("slacks (each certifies one proved inequality; all must be ≥ 0):");
    for (name, value) in report.slacks.entries() {
        println!("  {name:<18} {value:e}");
    }
}

fn cmd_render(file: &Path, out: &Path, layers: &[String], parallel: &str, samples: usize) -> u8 {
    let p = match load_curve(file) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let mut parsed_layers = Vec::new();
    for name in layers {
        match name.parse::<Layer>() {
            Ok(layer) => parsed_layers.push(layer),
            Err(e) => {
                eprintln!("error: {e}");
                return 5;
            }
        }
    }
    let distance = match parallel.parse::<ParallelDistance>() {
        Ok(d) => d,
        Err(e) => {
            eprintln!("error: {e}");
            return 5;
        }
    };
    let spec = RenderSpec {
        layers: parsed_layers,
        parallel_distance: distance,
        samples_per_curve: samples,
        ..RenderSpec::default()
    };
    let svg = match render_svg(&p, &spec) {
        Ok(svg) => svg,
        Err(e) => {
            eprintln!("error: {e}");
            return 5;
        }
    };
    if let Err(e) = fs::write(out, &svg) {
        eprintln!("error: cannot write {}: {e}", out.display());
        return 2;
    }
    println!("wrote {}", out.display());
    0
}

fn cmd_sweep(
    count: usize,
    degree: u32,
    seed: u64,
    constant_width: bool,
    min_radius: f64,
    tol: f64,
) -> u8 {
    if !min_radius.is_finite() || min_radius < 0.0 {
        eprintln!("error: --min-radius must be a finite non-negative number");
        return 5;
    }
    if !tol.is_finite() || tol < 0.0 {
        eprintln!("error: --tol must be a finite non-negative number");
        return 5;
    }
    let summary = sweep(count, degree, seed, min_radius, constant_width, tol);
    println!(
        "swept {} {}curves, degree ≤ {degree}, seeds {seed}..{}",
        summary.count,
        if constant_width {
            "constant-width "
        } else {
            ""
        },
        seed.wrapping_add(count as u64),
    );
    for (name, min) in &summary.min_slack_per_bound {
        println!("  min slack {name:<18} {min:e}");
    }
    if let Some(witness) = &summary.tightest_witness {
        println!(
            "tightest curve: seed {}, relative slack {:e}",
            witness.seed, witness.relative_slack
        );
        println!("  p(φ) = {}", witness.curve);
    }
    if summary.violations.is_empty() {
        println!("no violations");
        0
    } else {
        for v in &summary.violations {
            eprintln!(
                "violation: seed {} bound {} slack {:e}",
                v.seed, v.bound, v.slack
            );
        }
        4
    }
}

fn cmd_canon(file: &Path) -> u8 {
    let p = match load_curve(file) {
        Ok(p) => p,
        Err(code) => return code,
    };
    match canonical_phase(&p) {
        Ok(c) => {
            println!("n = {}", c.n);
            println!("a0 = {}", c.a0);
            println!("amplitude = {}", c.amplitude);
            println!("phi0 = {}", c.phi0);
            println!(
                "normal form: p(φ) = {} + {}·cos({}(φ − {}))",
                c.a0, c.amplitude, c.n, c.phi0
            );
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            5
        }
    }
}
