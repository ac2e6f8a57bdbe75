use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use hypermaps::{
    closure_cover, covering_core, double_cover, find_covering, in_image_of, io,
    is_bipartite_regular, is_isomorphic, is_regular, phi_construct, sigma_dual, verify, families,
    ConstructError, Hypermap, Sigma,
};

#[derive(Parser)]
#[command(name = "hypermaps", version, about = "Workbench for finite hypermaps")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Build a named hypermap family and write it out
    Build {
        /// p2 | pp2k:K | sphere222k:K | klein | torus | random:N:SEED
        #[arg(long)]
        family: String,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Print the invariant report of a hypermap
    Info {
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Apply a construction and write the resulting hypermap
    Apply {
        #[command(subcommand)]
        op: ApplyOp,
    },
    /// Evaluate a predicate; exit 0 if it holds, 1 otherwise
    Check {
        /// regular | bipartite-regular | orientable | boundary | in-im
        predicate: String,
        input: String,
        /// epimorphism selector (phi1..phi5 or a spec file), for in-im
        #[arg(long)]
        spec: Option<String>,
    },
    /// Compare two hypermaps; exit 0 if the relation holds, 1 otherwise
    Compare {
        /// test whether A covers B
        #[arg(long, conflicts_with = "iso")]
        covering: bool,
        /// test whether A and B are isomorphic
        #[arg(long)]
        iso: bool,
        a: String,
        b: String,
    },
    /// Run the full claim-verification suite and print a pass/fail table
    VerifyPaper {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum ApplyOp {
    /// σ-dual for a permutation of {0,1,2}
    Dual {
        /// id | 01 | 02 | 12 | 012 | 021
        #[arg(long)]
        sigma: String,
        input: String,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// bipartite hypermap of an epimorphism
    Phi {
        /// phi1..phi5 or a spec file
        #[arg(long)]
        spec: String,
        input: String,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// orientable double cover
    DoubleCover {
        input: String,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// covering core (regular cover with the same monodromy group)
    Core {
        #[arg(long, default_value_t = 1_000_000)]
        cap: usize,
        input: String,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// closure cover (regular quotient under the subgroup's normal closure)
    Closure {
        input: String,
        #[command(flatten)]
        out: OutputOpts,
    },
}

#[derive(Args)]
struct OutputOpts {
    /// write to FILE instead of stdout
    #[arg(long)]
    out: Option<String>,
    /// structured output instead of text
    #[arg(long)]
    json: bool,
}

enum CliError {
    Usage(String),
    Capacity(String),
}

impl From<ConstructError> for CliError {
    fn from(e: ConstructError) -> Self {
        match e {
            ConstructError::CapacityExceeded(c) => {
                CliError::Capacity(format!("capacity of {c} exceeded"))
            }
            other => CliError::Usage(other.to_string()),
        }
    }
}

fn parse_family(selector: &str) -> Result<Hypermap, CliError> {
    let parts: Vec<&str> = selector.split(':').collect();
    let bad = || CliError::Usage(format!("unknown family: {selector}"));
    let param = |s: &str| s.parse::<usize>().map_err(|_| bad());
    match parts.as_slice() {
        ["p2"] => Ok(families::p2()),
        ["klein"] => Ok(families::k_klein()),
        ["torus"] => Ok(families::t_torus()),
        ["pp2k", k] => {
            let k = param(k)?;
            if k == 0 {
                return Err(CliError::Usage("pp2k needs k >= 1".into()));
            }
            Ok(families::pp2k(k))
        }
        ["sphere222k", k] => {
            let k = param(k)?;
            if k == 0 {
                return Err(CliError::Usage("sphere222k needs k >= 1".into()));
            }
            Ok(families::sphere222k(k))
        }
        ["random", n, seed] => {
            let n = param(n)?;
            let seed = seed.parse::<u64>().map_err(|_| bad())?;
            families::random_hypermap(n, seed, false)
                .map_err(|e| CliError::Usage(e.to_string()))
        }
        _ => Err(bad()),
    }
}

fn load_hypermap(input: &str) -> Result<Hypermap, CliError> {
    if let Ok(h) = parse_family(input) {
        return Ok(h);
    }
    let text = fs::read_to_string(input)
        .map_err(|e| CliError::Usage(format!("cannot read {input}: {e}")))?;
    io::parse_hypermap(&text).map_err(|e| CliError::Usage(format!("{input}: {e}")))
}

fn emit(h: &Hypermap, out: &OutputOpts) -> Result<(), CliError> {
    let text = if out.json {
        io::hypermap_to_json(h)
    } else {
        io::hypermap_to_text(h)
    };
    match &out.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Usage(format!("cannot write {path}: {e}"))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.verb {
        Verb::Build { family, out } => {
            let h = parse_family(&family)?;
            emit(&h, &out)?;
            Ok(true)
        }
        Verb::Info { input, json } => {
            let h = load_hypermap(&input)?;
            let report = h.invariant_report();
            if json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                println!("{report}");
            }
            Ok(true)
        }
        Verb::Apply { op } => {
            let (result, out) = match op {
                ApplyOp::Dual { sigma, input, out } => {
                    let sigma: Sigma = sigma
                        .parse()
                        .map_err(|e| CliError::Usage(format!("--sigma: {e}")))?;
                    (sigma_dual(&load_hypermap(&input)?, sigma), out)
                }
                ApplyOp::Phi { spec, input, out } => {
                    let spec = io::load_spec(&spec)
                        .map_err(|e| CliError::Usage(format!("--spec: {e}")))?;
                    (phi_construct(&load_hypermap(&input)?, &spec)?, out)
                }
                ApplyOp::DoubleCover { input, out } => {
                    (double_cover(&load_hypermap(&input)?), out)
                }
                ApplyOp::Core { cap, input, out } => {
                    (covering_core(&load_hypermap(&input)?, cap)?, out)
                }
                ApplyOp::Closure { input, out } => {
                    (closure_cover(&load_hypermap(&input)?), out)
                }
            };
            emit(&result, &out)?;
            Ok(true)
        }
        Verb::Check {
            predicate,
            input,
            spec,
        } => {
            let h = load_hypermap(&input)?;
            let value = match predicate.as_str() {
                "regular" => is_regular(&h),
                "bipartite-regular" => is_bipartite_regular(&h),
                "orientable" => h.is_orientable(),
                "boundary" => h.has_boundary(),
                "in-im" => {
                    let selector = spec
                        .ok_or_else(|| CliError::Usage("in-im requires --spec".into()))?;
                    let spec = io::load_spec(&selector)
                        .map_err(|e| CliError::Usage(format!("--spec: {e}")))?;
                    in_image_of(&h, &spec).map_err(|e| CliError::Usage(e.to_string()))?
                }
                other => return Err(CliError::Usage(format!("unknown predicate: {other}"))),
            };
            println!("{value}");
            Ok(value)
        }
        Verb::Compare {
            covering,
            iso,
            a,
            b,
        } => {
            if covering == iso {
                return Err(CliError::Usage(
                    "compare requires exactly one of --covering or --iso".into(),
                ));
            }
            let ha = load_hypermap(&a)?;
            let hb = load_hypermap(&b)?;
            let value = if covering {
                find_covering(&ha, &hb).is_some()
            } else {
                is_isomorphic(&ha, &hb)
            };
            println!("{value}");
            Ok(value)
        }
        Verb::VerifyPaper { json } => {
            let claims = verify::run_all();
            let all_pass = claims.iter().all(|c| c.pass);
            if json {
                let rows: Vec<serde_json::Value> = claims
                    .iter()
                    .map(|c| {
                        serde_json::json!({
                            "criterion": c.criterion,
                            "label": c.label,
                            "pass": c.pass,
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&serde_json::json!({
                        "claims": rows,
                        "all_pass": all_pass,
                    }))
                    .unwrap()
                );
            } else {
                for c in &claims {
                    let status = if c.pass { "PASS" } else { "FAIL" };
                    println!("{status}  [criterion {}] {}", c.criterion, c.label);
                }
                let passed = claims.iter().filter(|c| c.pass).count();
                println!("{passed}/{} claims pass", claims.len());
            }
            Ok(all_pass)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Capacity(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
