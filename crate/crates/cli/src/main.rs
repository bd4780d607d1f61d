//! `yamada`: compute spatial-graph and link invariants of diagram files and
//! check the θ-curve identities.

mod report;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use yamada_core::bracket::{jones_with, kauffman_bracket_with};
use yamada_core::diagram::{parse_unchecked, validate_diagram, Format};
use yamada_core::theta::{self, ThetaDiagram};
use yamada_core::yamada::{jaeger, normalized_jaeger_knot, normalized_yamada_knot, yamada_state_sum};
use yamada_core::{fixtures, parse_diagram, Diagram, Error, Limits};

use report::Report;

#[derive(Parser, Debug)]
#[command(name = "yamada", version, about = "Yamada, bracket and Jones polynomials of diagram files")]
struct Cli {
    /// Largest crossing count for exhaustive state sums.
    #[arg(long, global = true)]
    max_crossings: Option<usize>,
    /// Worker threads for state sums (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Evaluate brackets by tangle contraction instead of the 2^c state sum.
    #[arg(long, global = true, value_enum, default_value_t = Switch::On)]
    fast_bracket: Switch,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Switch {
    On,
    Off,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a diagram file and list any problems.
    Validate { file: PathBuf },
    /// Print one invariant as a canonical polynomial string.
    Invariant {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// Write the associated link L(n1, n2, n3) of a θ-curve.
    AssocLink {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check an identity on a θ-curve diagram.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum)]
        which: Which,
        /// Print the full report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Built-in diagrams.
    Fixtures {
        #[command(subcommand)]
        action: FixtureAction,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Yamada,
    YamadaNormalized,
    Bracket,
    Jones,
    Jaeger,
    JaegerNormalized,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Which {
    Prop1,
    Prop2,
    Prop3,
    Thm1,
    Cor1,
    Twists,
}

impl Which {
    fn name(self) -> &'static str {
        match self {
            Which::Prop1 => "prop1",
            Which::Prop2 => "prop2",
            Which::Prop3 => "prop3",
            Which::Thm1 => "thm1",
            Which::Cor1 => "cor1",
            Which::Twists => "twists",
        }
    }
}

#[derive(Subcommand, Debug)]
enum FixtureAction {
    /// List fixture names.
    List,
    /// Print a fixture file.
    Emit { name: String },
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => 2,
            Error::Resource(_) => 3,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| fail(2, format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<(String, Diagram), Failure> {
    let text = read(path)?;
    let d = parse_diagram(&text)?;
    Ok((text, d))
}

fn load_theta(path: &Path) -> Result<(String, ThetaDiagram), Failure> {
    let (text, d) = load(path)?;
    Ok((text, theta::validate_theta(&d)?))
}

fn limits(cli: &Cli) -> Limits {
    let mut l = Limits { fast_bracket: cli.fast_bracket == Switch::On, ..Limits::default() };
    if let Some(n) = cli.max_crossings {
        l.naive_bracket = n;
        l.yamada = n;
    }
    l
}

fn is_knot(d: &Diagram) -> bool {
    d.format() == Format::Link && d.component_count() == 1
}

fn invariant(d: &Diagram, kind: Kind, lim: &Limits) -> Result<String, Failure> {
    let theta_only = |what: &str| -> Result<ThetaDiagram, Failure> {
        if d.format() != Format::Theta {
            return Err(fail(1, format!("{what} needs a θ-curve or a knot")));
        }
        Ok(theta::validate_theta(d)?)
    };
    Ok(match kind {
        Kind::Yamada => yamada_state_sum(d, lim)?.to_string(),
        Kind::Bracket => kauffman_bracket_with(d, lim)?.to_string(),
        Kind::Jones => jones_with(d, lim)?.to_string(),
        Kind::Jaeger => jaeger(d, lim)?.tidy().to_string(),
        Kind::YamadaNormalized if is_knot(d) => normalized_yamada_knot(d, lim)?.to_string(),
        Kind::YamadaNormalized => theta::normalized_yamada(&theta_only("yamada-normalized")?, lim)?.to_string(),
        Kind::JaegerNormalized if is_knot(d) => normalized_jaeger_knot(d, lim)?.tidy().to_string(),
        Kind::JaegerNormalized => theta::normalized_jaeger(&theta_only("jaeger-normalized")?, lim)?.tidy().to_string(),
    })
}

fn verify(t: &ThetaDiagram, which: Which, lim: &Limits, rep: &mut Report) -> Result<(), Failure> {
    let identity = |rep: &mut Report, r: theta::IdentityReport| {
        rep.check("equal", r.equal);
        rep.value("lhs", r.lhs);
        rep.value("rhs", r.rhs);
    };
    match which {
        Which::Prop1 => {
            let r = rep.timed("compute", || theta::verify_prop1(t, lim))?;
            identity(rep, r);
        }
        Which::Prop2 => {
            let r = rep.timed("compute", || theta::verify_prop2(t, lim))?;
            identity(rep, r);
        }
        Which::Prop3 => {
            let r = rep.timed("compute", || theta::verify_prop3(t, lim))?;
            identity(rep, r);
        }
        Which::Thm1 => {
            let r = rep.timed("compute", || theta::theorem1_report(t, lim))?;
            rep.check("equal", r.equal);
            rep.value("difference", &r.difference);
            rep.value("rhs", &r.rhs);
            for (i, j) in r.subknots.iter().enumerate() {
                rep.value(&format!("subknot{}_jaeger_normalized", i + 1), j);
            }
        }
        Which::Cor1 => {
            let r = rep.timed("compute", || theta::corollary1_check(t, lim))?;
            rep.check("subknots_trivial_proxy", r.subknots_trivial_proxy);
            rep.check("matches", r.matches);
            rep.value("difference", &r.difference);
            rep.value("expected", theta::brunnian_difference().tidy());
        }
        Which::Twists => {
            let r = rep.timed("compute", || theta::twist_report(t))?;
            rep.check("writhe_law", r.writhe_law);
            rep.check("component_law", r.component_law);
            for i in 0..3 {
                rep.value(&format!("n{}", i + 1), r.twists.n[i]);
                rep.value(&format!("writhe_l{}", i + 1), r.component_writhes[i]);
            }
            for (i, j) in [(1, 1), (2, 2), (3, 3), (1, 2), (1, 3), (2, 3)] {
                rep.value(&format!("omega{i}{j}"), r.omega.get(i, j));
            }
            rep.value("writhe", r.writhe);
        }
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<(), Failure> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| fail(1, format!("thread pool: {e}")))?;
    }
    let lim = limits(cli);
    match &cli.command {
        Command::Validate { file } => {
            let text = read(file)?;
            let d = parse_unchecked(&text)?;
            let report = validate_diagram(&d);
            let mut issues: Vec<String> = report.issues.iter().map(ToString::to_string).collect();
            if issues.is_empty() && d.format() == Format::Theta {
                if let Err(e) = theta::validate_theta(&d) {
                    issues.push(e.to_string());
                }
            }
            if issues.is_empty() {
                println!(
                    "valid: {} crossings, {} vertices, {} arcs",
                    d.crossing_count(),
                    d.vertex_count(),
                    d.arcs().len()
                );
                Ok(())
            } else {
                for i in &issues {
                    println!("{i}");
                }
                Err(fail(1, format!("{} problem(s) found", issues.len())))
            }
        }
        Command::Invariant { file, kind } => {
            let (_, d) = load(file)?;
            println!("{}", invariant(&d, *kind, &lim)?);
            Ok(())
        }
        Command::AssocLink { file, out } => {
            let (_, t) = load_theta(file)?;
            let n = theta::twist_numbers(&t)?;
            let link = theta::associated_link(&t)?;
            let text = format!("# Associated link L{n} of {}.\n{link}", file.display());
            fs::write(out, text).map_err(|e| fail(1, format!("{}: {e}", out.display())))?;
            println!("{n}");
            println!("writhe: {}", link.writhe());
            Ok(())
        }
        Command::Verify { file, which, json } => {
            let text = read(file)?;
            let mut rep = Report::new(&text, format!("verify --which {}", which.name()));
            let t = rep.timed("parse", || -> Result<ThetaDiagram, Failure> {
                Ok(theta::validate_theta(&parse_diagram(&text)?)?)
            })?;
            verify(&t, *which, &lim, &mut rep)?;
            if *json {
                println!("{}", serde_json::to_string_pretty(&rep).expect("report serializes"));
            } else {
                print!("{}", rep.to_text());
            }
            if rep.all_checks_pass() {
                Ok(())
            } else {
                Err(fail(1, "identity does not hold"))
            }
        }
        Command::Fixtures { action } => match action {
            FixtureAction::List => {
                let mut out = std::io::stdout().lock();
                for name in fixtures::names() {
                    // a closed pipe just ends the listing
                    if writeln!(out, "{name}\t{}", fixtures::file_name(name).unwrap_or_default()).is_err() {
                        break;
                    }
                }
                Ok(())
            }
            FixtureAction::Emit { name } => {
                let text = fixtures::text(name).ok_or_else(|| fail(1, format!("no fixture named {name}")))?;
                print!("{text}");
                Ok(())
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
