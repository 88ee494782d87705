use std::error::Error;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use tableaux::bijection::{decompose, recompose};
use tableaux::jdt::{rectify, rectify_traced, rectify_with_rng};
use tableaux::plinth::plinth_of;
use tableaux::qseries::{genfun_bruteforce, genfun_plinth, genfun_stanley};
use tableaux::schutzenberger::{evacuate, evacuate_traced, skew_evacuate};
use tableaux::shape::enumerate_skew_shapes;
use tableaux::tableau::enumerate_syt;
use tableaux::verify::{self, Universe, VerificationReport, VerifyConfig};
use tableaux::{ReadingPartition, SkewShape, StandardTableau, Tableau};

type CliResult<T> = Result<T, Box<dyn Error>>;

/// Skew tableaux toolkit: plinths, jeu de taquin, evacuation and
/// generating functions.
///
/// Tableaux are written row by row with rows separated by `/` (or newlines)
/// and `.` marking cells of the inner shape, e.g. ". 1 2 / 3 4". Any value
/// of the form `@path` is read from that file.
#[derive(Parser)]
#[command(name = "tableaux", version)]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List skew shapes up to a size.
    Shapes {
        #[arg(long, default_value_t = 3)]
        max_cells: usize,
        #[arg(long)]
        max_rows: Option<usize>,
        #[arg(long)]
        max_cols: Option<usize>,
    },
    /// List the standard tableaux of a shape.
    EnumerateSyt {
        #[arg(long)]
        shape: String,
    },
    /// Plinth of a standard tableau and its volume.
    Plinth {
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        syt: String,
    },
    /// Descent set and major index.
    Maj {
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        syt: String,
    },
    /// Split a semistandard tableau into plinth and partition.
    Decompose {
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        ssyt: String,
    },
    /// Inverse of decompose: plinth of SYT plus a weakly increasing sequence.
    Recompose {
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        syt: String,
        /// Comma-separated, weakly increasing, one entry per cell.
        #[arg(long)]
        partition: String,
    },
    /// Rectify by jeu de taquin.
    Rectify {
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        syt: String,
        /// Print every intermediate state (`*` marks the hole).
        #[arg(long)]
        trace: bool,
        /// Choose inner corners at random (seeded by --seed).
        #[arg(long, conflicts_with = "trace")]
        random: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Evacuation of a straight standard tableau.
    Evacuate {
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        syt: String,
        /// Print the intermediate tableaux; frozen entries are bracketed.
        #[arg(long)]
        trace: bool,
    },
    /// Evacuation extended to skew shapes.
    SkewEvacuate {
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        syt: String,
    },
    /// Volume generating function of semistandard tableaux of a shape.
    Genfun {
        #[arg(long)]
        shape: String,
        #[arg(long, value_enum, default_value_t = Method::Plinth)]
        method: Method,
        #[arg(long, default_value_t = 12)]
        truncate: usize,
    },
    /// Run exhaustive checks; exits non-zero if any fails.
    Verify {
        #[arg(value_enum, default_value_t = Check::All)]
        check: Check,
        #[arg(long, default_value_t = 8)]
        max_cells: usize,
        #[arg(long, default_value_t = 12)]
        truncate: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Plinth,
    Stanley,
    Bruteforce,
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    All,
    MainTheorem,
    Equidistribution,
    Genfun,
    Descents,
    Involutions,
    Rsk,
    Rectification,
    Bijection,
}

fn load(arg: &str) -> CliResult<String> {
    match arg.strip_prefix('@') {
        Some(path) => Ok(std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?.trim().to_string()),
        None => Ok(arg.to_string()),
    }
}

fn parse_shape(arg: &str) -> CliResult<SkewShape> {
    Ok(load(arg)?.trim().parse()?)
}

fn parse_tableau(shape: Option<&str>, arg: &str) -> CliResult<Tableau> {
    let text = load(arg)?;
    Ok(match shape {
        Some(s) => Tableau::parse_for_shape(parse_shape(s)?, &text)?,
        None => text.parse()?,
    })
}

fn parse_syt(shape: Option<&str>, arg: &str) -> CliResult<StandardTableau> {
    Ok(StandardTableau::new(parse_tableau(shape, arg)?)?)
}

fn tableau_json(t: &Tableau, meta: Value) -> Value {
    json!({ "shape": t.shape().to_string(), "rows": t.rows(), "meta": meta })
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json values serialize"));
}

fn list(set: impl IntoIterator<Item = usize>) -> String {
    set.into_iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    let json = cli.json;
    match cli.cmd {
        Cmd::Shapes { max_cells, max_rows, max_cols } => {
            let shapes = enumerate_skew_shapes(
                max_cells,
                max_rows.unwrap_or(max_cells),
                max_cols.unwrap_or(max_cells),
            );
            if json {
                print_json(&json!(shapes.iter().map(|s| s.to_string()).collect::<Vec<_>>()));
            } else {
                for s in shapes {
                    println!("{s}");
                }
            }
        }
        Cmd::EnumerateSyt { shape } => {
            let all = enumerate_syt(&parse_shape(&shape)?)?;
            if json {
                print_json(&json!(all.iter().map(|q| tableau_json(q.tableau(), json!({}))).collect::<Vec<_>>()));
            } else {
                for q in all {
                    println!("{}", q.tableau().compact());
                }
            }
        }
        Cmd::Plinth { shape, syt } => {
            let q = parse_syt(shape.as_deref(), &syt)?;
            let p = plinth_of(&q);
            if json {
                print_json(&tableau_json(&p, json!({ "volume": p.volume() })));
            } else {
                println!("{}", p.compact());
                println!("volume: {}", p.volume());
            }
        }
        Cmd::Maj { shape, syt } => {
            let q = parse_syt(shape.as_deref(), &syt)?;
            let des = q.descent_set();
            if json {
                print_json(&json!({ "descents": des, "maj": q.maj() }));
            } else {
                println!("descents: {}", list(des));
                println!("maj: {}", q.maj());
            }
        }
        Cmd::Decompose { shape, ssyt } => {
            let t = parse_tableau(shape.as_deref(), &ssyt)?;
            let d = decompose(&t)?;
            if json {
                print_json(&json!({
                    "shape": t.shape().to_string(),
                    "plinth": d.plinth.rows(),
                    "order": d.witness.tableau().rows(),
                    "partition": d.diagram.values(),
                    "meta": { "volume": t.volume(), "plinth_volume": d.plinth.volume() },
                }));
            } else {
                println!("order: {}", d.witness.tableau().compact());
                println!("plinth: {}", d.plinth.compact());
                println!("partition: {}", d.diagram);
                println!("volume: {} = {} + {}", t.volume(), d.plinth.volume(), d.diagram.sum());
            }
        }
        Cmd::Recompose { shape, syt, partition } => {
            let q = parse_syt(shape.as_deref(), &syt)?;
            let y: ReadingPartition = load(&partition)?.parse()?;
            let t = recompose(&q, &y)?;
            if json {
                print_json(&tableau_json(&t, json!({ "volume": t.volume() })));
            } else {
                println!("{}", t.compact());
                println!("volume: {}", t.volume());
            }
        }
        Cmd::Rectify { shape, syt, trace, random, seed } => {
            let q = parse_syt(shape.as_deref(), &syt)?;
            if trace {
                let (r, steps) = rectify_traced(&q);
                if json {
                    let steps: Vec<Value> = steps
                        .iter()
                        .map(|(c, frames)| {
                            json!({
                                "cell": [c.row, c.col],
                                "frames": frames.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
                            })
                        })
                        .collect();
                    print_json(&tableau_json(r.tableau(), json!({ "steps": steps })));
                } else {
                    for (c, frames) in &steps {
                        println!("slide into {c}");
                        for f in frames {
                            println!("  {}", f.to_string().replace('\n', " / "));
                        }
                    }
                    println!("{}", r.tableau().compact());
                }
            } else {
                let r = if random {
                    rectify_with_rng(&q, &mut ChaCha8Rng::seed_from_u64(seed))
                } else {
                    rectify(&q)
                };
                if json {
                    print_json(&tableau_json(r.tableau(), json!({})));
                } else {
                    println!("{}", r.tableau().compact());
                }
            }
        }
        Cmd::Evacuate { shape, syt, trace } => {
            let q = parse_syt(shape.as_deref(), &syt)?;
            let (s, frames) = if trace { evacuate_traced(&q)? } else { (evacuate(&q)?, Vec::new()) };
            if json {
                let steps: Vec<String> = frames.iter().map(|f| f.to_string()).collect();
                print_json(&tableau_json(s.tableau(), json!({ "maj": s.maj(), "steps": steps })));
            } else {
                for (i, f) in frames.iter().enumerate() {
                    println!("Q_{}: {}", i + 1, f.to_string().replace('\n', " / "));
                }
                println!("{}", s.tableau().compact());
            }
        }
        Cmd::SkewEvacuate { shape, syt } => {
            let q = parse_syt(shape.as_deref(), &syt)?;
            let s = skew_evacuate(&q)?;
            if json {
                print_json(&tableau_json(s.tableau(), json!({ "maj": s.maj() })));
            } else {
                println!("{}", s.tableau().compact());
                println!("maj: {}", s.maj());
            }
        }
        Cmd::Genfun { shape, method, truncate } => {
            let s = parse_shape(&shape)?;
            let (name, series) = match method {
                Method::Plinth => ("plinth", genfun_plinth(&s, truncate)?),
                Method::Stanley => ("stanley", genfun_stanley(&s, truncate)?),
                Method::Bruteforce => ("bruteforce", genfun_bruteforce(&s, truncate)?),
            };
            if json {
                print_json(&json!({
                    "shape": s.to_string(),
                    "method": name,
                    "truncate": truncate,
                    "coeffs": series.coeffs(),
                }));
            } else {
                println!("{series}");
            }
        }
        Cmd::Verify { check, max_cells, truncate, seed } => {
            let reports = run_checks(check, VerifyConfig { max_cells, trunc: truncate, seed });
            let passed = reports.iter().all(VerificationReport::passed);
            if json {
                print_json(&json!({ "passed": passed, "reports": reports }));
            } else {
                for r in &reports {
                    println!("{r}");
                }
            }
            return Ok(if passed { ExitCode::SUCCESS } else { ExitCode::FAILURE });
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_checks(check: Check, cfg: VerifyConfig) -> Vec<VerificationReport> {
    let m = cfg.max_cells;
    let small = m.saturating_sub(2);
    match check {
        Check::All => verify::check_all(cfg),
        Check::MainTheorem => vec![verify::check_main_theorem(Universe::boxed(m, 5, 5))],
        Check::Equidistribution => vec![verify::check_equidistribution(Universe::boxed(m, 5, 5))],
        Check::Genfun => vec![verify::check_genfun_identity(Universe::cells(small), cfg.trunc)],
        Check::Descents => vec![verify::check_descent_invariance(Universe::cells(small))],
        Check::Involutions => vec![verify::check_involutions(m, small, 3)],
        Check::Rsk => vec![verify::check_rsk_facts(small), verify::check_maj_complement(m)],
        Check::Rectification => {
            vec![verify::check_rectification_uniqueness(Universe::boxed(m.saturating_sub(1), 5, 5), 50, cfg.seed)]
        }
        Check::Bijection => vec![verify::check_bijection(Universe::cells(small.min(5)), 3)],
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
