use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use stabber::gen::{gen_cascade_chain, gen_maxgap, gen_quadratic_rect, gen_random, GenConfig};
use stabber::io::{instance_from_json, instance_to_json, solutions_from_json, solutions_to_json};
use stabber::oracle::oracle_classes;
use stabber::render::render_svg;
use stabber::solvers::{solve, solve_classes, SolveOptions};
use stabber::{Coord, Instance, Shape, StabError, StabberClass};

#[derive(Parser)]
#[command(name = "stabber", version, about = "Enumerate axis-parallel stabbers of planar segments")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print every stabber class of one shape as JSON.
    Solve {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        orientation: Option<String>,
        #[arg(long)]
        input: PathBuf,
        /// Also report stabbers equivalent to ones with fewer sides.
        #[arg(long)]
        include_trivial: bool,
    },
    /// Compare solver and brute force; all orientations unless one is given.
    Check {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        orientation: Option<String>,
        #[arg(long)]
        input: PathBuf,
    },
    /// Print a generated instance as JSON.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        /// Comma-separated positive values for maxgap.
        #[arg(long, value_delimiter = ',')]
        values: Vec<String>,
        #[arg(long)]
        delta: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        range: i64,
    },
    /// Draw an instance, and optionally solutions, as SVG.
    Render {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        solutions: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Maxgap,
    Qrect,
    Chain,
    Random,
}

/// An error with its exit code.
struct Failure(u8, String);

impl From<StabError> for Failure {
    fn from(e: StabError) -> Self {
        let code = match e {
            StabError::DegenerateInput { .. } | StabError::OracleCapExceeded { .. } => 2,
            _ => 1,
        };
        Failure(code, e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(1, format!("{}: {e}", path.display())))
}

fn read_instance(path: &Path) -> Result<Instance, Failure> {
    Ok(instance_from_json(&read(path)?)?)
}

fn class_text(c: &StabberClass) -> String {
    let ends: Vec<String> = (0..c.n()).map(|s| format!("{s}{:?}", c.red_end(s))).collect();
    ends.join(" ")
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.cmd {
        Cmd::Solve {
            shape,
            orientation,
            input,
            include_trivial,
        } => {
            let shape = Shape::parse(&shape, orientation.as_deref())?;
            let inst = read_instance(&input)?;
            let mut sols = solve(&inst, shape)?;
            if !include_trivial {
                sols.retain(|s| !s.trivial);
            }
            print!("{}", solutions_to_json(shape, &sols));
            Ok(0)
        }
        Cmd::Check {
            shape,
            orientation,
            input,
        } => {
            let shapes = match orientation {
                Some(o) => vec![Shape::parse(&shape, Some(&o))?],
                None => match Shape::orientations_of(&shape).as_slice() {
                    [] => vec![Shape::parse(&shape, None)?],
                    all => all.to_vec(),
                },
            };
            let inst = read_instance(&input)?;
            let opts = SolveOptions::default();
            let mut code = 0;
            for shape in shapes {
                let want = oracle_classes(&inst, shape)?;
                let got = solve_classes(&inst, shape, &opts)?;
                if got == want {
                    println!("{shape}: MATCH ({} classes)", got.len());
                    continue;
                }
                code = 3;
                println!("{shape}: MISMATCH");
                let only = |a: &BTreeSet<StabberClass>, b: &BTreeSet<StabberClass>| {
                    a.difference(b).map(class_text).collect::<Vec<_>>()
                };
                for c in only(&got, &want) {
                    println!("  solver only: {c}");
                }
                for c in only(&want, &got) {
                    println!("  oracle only: {c}");
                }
            }
            Ok(code)
        }
        Cmd::Gen {
            family,
            values,
            delta,
            n,
            seed,
            range,
        } => {
            let delta = delta.map(|d| d.parse::<Coord>()).transpose()?;
            let need_n = || n.ok_or_else(|| Failure(1, "--n is required".into()));
            let inst = match family {
                Family::Maxgap => {
                    let xs = values
                        .iter()
                        .map(|v| v.parse::<Coord>())
                        .collect::<Result<Vec<_>, _>>()?;
                    gen_maxgap(&xs, delta.as_ref())?
                }
                Family::Qrect => gen_quadratic_rect(need_n()?)?,
                Family::Chain => gen_cascade_chain(need_n()?)?,
                Family::Random => {
                    let mut cfg = GenConfig::new(seed, need_n()?);
                    cfg.range = range;
                    if let Some(d) = delta {
                        cfg.delta = d;
                    }
                    gen_random(&cfg)?
                }
            };
            print!("{}", instance_to_json(&inst));
            Ok(0)
        }
        Cmd::Render {
            input,
            solutions,
            out,
        } => {
            let inst = read_instance(&input)?;
            let sols = match solutions {
                Some(p) => solutions_from_json(&read(&p)?, inst.n())?.1,
                None => Vec::new(),
            };
            let svg = render_svg(&inst, &sols).map_err(|e| Failure(1, e.to_string()))?;
            fs::write(&out, svg).map_err(|e| Failure(1, format!("{}: {e}", out.display())))?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
