//! `mixedtori` — decide from a mixed polynomial's coefficients whether
//! the link of its singularity contains essential tori and whether it is
//! non-hyperbolic.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mixedtori::AnalysisConfig;
use mixedtori_cli::{analyze, parse_nested_spec, render_polygon_svg};

#[derive(Parser)]
#[command(name = "mixedtori", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputMode {
    Text,
    Struct,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a mixed polynomial end to end.
    Analyze {
        /// Polynomial in the plain-text grammar, e.g. "u^4 + ~u u^2 v + u^2 ~v^2 + v^6".
        poly: String,
        /// Report format.
        #[arg(long, value_enum, default_value = "text")]
        out: OutputMode,
        /// Write the Newton polygon as SVG to this path.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Angle samples per vertex entry of the multiplicity table.
        #[arg(long = "t-samples")]
        t_samples: Option<usize>,
        /// Grid resolution per angle for the torus minimum search.
        #[arg(long)]
        grid: Option<usize>,
        /// Forbidden band half-width around the unit circle for ς-roots.
        #[arg(long = "tol-unit")]
        tol_unit: Option<f64>,
        /// Relative threshold below which a torus modulus counts as vanishing.
        #[arg(long = "tol-vanish")]
        tol_vanish: Option<f64>,
    },
    /// Evaluate the nested-tori characterization on a link spec document.
    NestedCheck {
        /// Path to the spec document (`n=<int>` header, then one
        /// `wrap=.. winding=.. knot=.. trivial=..` line per component).
        spec: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    let code = match cli.command {
        Command::Analyze {
            poly,
            out,
            svg,
            t_samples,
            grid,
            tol_unit,
            tol_vanish,
        } => {
            let mut cfg = AnalysisConfig::default();
            if let Some(v) = t_samples {
                cfg.t_samples = v.max(1);
            }
            if let Some(v) = grid {
                cfg.grid = v;
            }
            if let Some(v) = tol_unit {
                cfg.tol_unit = v;
            }
            if let Some(v) = tol_vanish {
                cfg.tol_vanish = v;
            }
            run_analyze(&poly, &cfg, out, svg.as_deref())
        }
        Command::NestedCheck { spec } => run_nested_check(&spec),
    };
    ExitCode::from(code)
}

fn run_analyze(
    poly: &str,
    cfg: &AnalysisConfig,
    out: OutputMode,
    svg: Option<&std::path::Path>,
) -> u8 {
    let analysis = analyze(poly, cfg);
    if matches!(out, OutputMode::Text | OutputMode::Both) {
        print!("{}", analysis.report.render_text());
    }
    if matches!(out, OutputMode::Struct | OutputMode::Both) {
        print!("{}", analysis.report.to_doc().render());
    }
    if let Some(path) = svg {
        match &analysis.report.boundary {
            Some(b) => {
                let support = analysis.report.support.iter().copied().collect();
                let drawing = render_polygon_svg(b, &support);
                if let Err(e) = std::fs::write(path, drawing) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return 1;
                }
            }
            None => eprintln!("warning: no boundary computed, skipping --svg"),
        }
    }
    u8::try_from(analysis.exit.code()).expect("exit codes fit a byte")
}

fn run_nested_check(path: &std::path::Path) -> u8 {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return 1;
        }
    };
    let spec = match parse_nested_spec(&text) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    match mixedtori::criteria::nested_characterization(&spec) {
        Ok(verdicts) => {
            for v in &verdicts {
                println!("torus {}: {} (case {})", v.torus, v.call.as_str(), v.branch);
            }
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}
