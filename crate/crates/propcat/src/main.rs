//! CLI surface: composition, tensor, ancestry, enumeration, verification
//! suites, DOT rendering, and fixed points. Exit codes: 0 ok, 1 check
//! failure, 2 parse error, 3 contract violation, 4 resource limit.

use clap::{Parser, Subcommand, ValueEnum};
use propcat::ancestry::{cocom_compose, cocom_tensor, pi};
use propcat::checks::{
    suite_logic, suite_prop_laws, suite_scfa, suite_theorem_a, suite_theorem_c, suite_triangle,
};
use propcat::corel::{corel_compose, corel_tensor, enumerate_corel, DEFAULT_ENUM_BOUND};
use propcat::cospan::{cospan_compose, cospan_tensor, enumerate_cospans, pi_bar};
use propcat::finset::fiber_nonempty_functions;
use propcat::io::{
    cocom_from_json, cocom_to_json, corel_from_json, corel_to_json, cospan_from_json,
    cospan_to_json, syn_from_json, syn_to_json, FixpointSpec,
};
use propcat::logic::{gfp, lfp, Pred, Rel};
use propcat::render::{render_corel, render_cospan, render_syn};
use propcat::syn::{enumerate_syn, tensor, then};
use propcat::{Error, Result};
use std::io::Read;

#[derive(Parser)]
#[command(name = "propcat", version, about = "Finite categorical constructions: forests, corelations, cospans, and lattice fixed points")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Category {
    Syn,
    Corel,
    Cospan,
    Cocom,
}

#[derive(Clone, Copy, ValueEnum)]
enum AncestrySource {
    Syn,
    Cospan,
}

#[derive(Clone, Copy, ValueEnum)]
enum Renderable {
    Syn,
    Corel,
    Cospan,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    TheoremA,
    TheoremC,
    Scfa,
    PropLaws,
    Triangle,
    Logic,
}

#[derive(Subcommand)]
enum Command {
    /// Compose two morphisms (diagrammatic order) and print the canonical
    /// composite as JSON.
    Compose {
        #[arg(long, value_enum)]
        category: Category,
        /// Left morphism as JSON, or `-` for standard input.
        lhs: String,
        /// Right morphism as JSON, or `-` for standard input.
        rhs: String,
    },
    /// Tensor two morphisms and print the result as JSON.
    Tensor {
        #[arg(long, value_enum)]
        category: Category,
        lhs: String,
        rhs: String,
    },
    /// Collapse a morphism to its boundary corelation.
    Ancestry {
        #[arg(long, value_enum, default_value = "syn")]
        category: AncestrySource,
        morphism: String,
    },
    /// Stream every morphism of a hom-set as newline-delimited JSON.
    Enumerate {
        #[arg(value_enum)]
        category: Category,
        m: usize,
        n: usize,
        /// Carrier-size ceiling for the enumeration.
        #[arg(long, default_value_t = DEFAULT_ENUM_BOUND)]
        bound: usize,
    },
    /// Run a verification suite and print one line per check.
    Check {
        #[arg(value_enum)]
        suite: Suite,
        /// Suite-specific size bound (defaults per suite).
        #[arg(long)]
        bound: Option<usize>,
        /// Seed for the randomized parts of a suite.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of randomized cases per randomized check.
        #[arg(long, default_value_t = 10_000)]
        cases: usize,
        /// Emit the report as JSON instead of text lines.
        #[arg(long)]
        json: bool,
    },
    /// Render a morphism as Graphviz DOT text.
    Render {
        #[arg(value_enum)]
        category: Renderable,
        morphism: String,
    },
    /// Compute least and greatest fixed points of a formula system.
    Fixpoint {
        /// JSON with fields carrier, relation (pair list), formulas.
        spec: String,
    },
}

/// Global ceiling on suite bounds and enumeration sizes, overridable via
/// the environment.
fn max_bound() -> usize {
    std::env::var("PROPCAT_MAX_BOUND")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(12)
}

fn guard(bound: usize, what: &str) -> Result<()> {
    let cap = max_bound();
    if bound > cap {
        return Err(Error::Resource(format!(
            "{what} {bound} exceeds ceiling {cap} (set PROPCAT_MAX_BOUND to raise)"
        )));
    }
    Ok(())
}

fn read_arg(arg: &str) -> Result<serde_json::Value> {
    let text = if arg == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Parse(e.to_string()))?;
        buf
    } else {
        arg.to_string()
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Compose { category, lhs, rhs } => {
            let (l, r) = (read_arg(&lhs)?, read_arg(&rhs)?);
            let out = match category {
                Category::Syn => syn_to_json(&then(&syn_from_json(&l)?, &syn_from_json(&r)?)?),
                Category::Corel => {
                    corel_to_json(&corel_compose(&corel_from_json(&l)?, &corel_from_json(&r)?)?)
                }
                Category::Cospan => cospan_to_json(&cospan_compose(
                    &cospan_from_json(&l)?,
                    &cospan_from_json(&r)?,
                )?),
                Category::Cocom => {
                    cocom_to_json(&cocom_compose(&cocom_from_json(&l)?, &cocom_from_json(&r)?)?)
                }
            };
            println!("{out}");
            Ok(0)
        }
        Command::Tensor { category, lhs, rhs } => {
            let (l, r) = (read_arg(&lhs)?, read_arg(&rhs)?);
            let out = match category {
                Category::Syn => syn_to_json(&tensor(&syn_from_json(&l)?, &syn_from_json(&r)?)),
                Category::Corel => {
                    corel_to_json(&corel_tensor(&corel_from_json(&l)?, &corel_from_json(&r)?))
                }
                Category::Cospan => cospan_to_json(&cospan_tensor(
                    &cospan_from_json(&l)?,
                    &cospan_from_json(&r)?,
                )),
                Category::Cocom => {
                    cocom_to_json(&cocom_tensor(&cocom_from_json(&l)?, &cocom_from_json(&r)?))
                }
            };
            println!("{out}");
            Ok(0)
        }
        Command::Ancestry { category, morphism } => {
            let v = read_arg(&morphism)?;
            let r = match category {
                AncestrySource::Syn => pi(&syn_from_json(&v)?),
                AncestrySource::Cospan => pi_bar(&cospan_from_json(&v)?),
            };
            println!("{}", corel_to_json(&r));
            Ok(0)
        }
        Command::Enumerate {
            category,
            m,
            n,
            bound,
        } => {
            guard(m.max(n), "boundary size")?;
            match category {
                Category::Syn => {
                    for f in enumerate_syn(m, n) {
                        println!("{}", syn_to_json(&f));
                    }
                }
                Category::Corel => {
                    for r in enumerate_corel(m, n, bound)? {
                        println!("{}", corel_to_json(&r));
                    }
                }
                Category::Cospan => {
                    if m + n > bound {
                        return Err(Error::Resource(format!(
                            "carrier {} exceeds bound {bound}",
                            m + n
                        )));
                    }
                    for c in enumerate_cospans(m, n, m + n + 1) {
                        println!("{}", cospan_to_json(&c));
                    }
                }
                Category::Cocom => {
                    for phi in fiber_nonempty_functions(n, m) {
                        let u = propcat::ancestry::CocomMap { m, n, phi };
                        println!("{}", cocom_to_json(&u));
                    }
                }
            }
            Ok(0)
        }
        Command::Check {
            suite,
            bound,
            seed,
            cases,
            json,
        } => {
            let report = match suite {
                Suite::TheoremA => {
                    let b = bound.unwrap_or(3);
                    guard(b, "theorem-a bound")?;
                    suite_theorem_a(b, b + 1)
                }
                Suite::TheoremC => {
                    let b = bound.unwrap_or(6);
                    guard(b, "theorem-c bound")?;
                    suite_theorem_c(b, b.min(4))
                }
                Suite::Scfa => suite_scfa(),
                Suite::PropLaws => {
                    let b = bound.unwrap_or(2);
                    guard(b, "prop-laws bound")?;
                    if b > 2 {
                        return Err(Error::Resource(format!(
                            "prop-laws exhaustive bound {b} exceeds 2"
                        )));
                    }
                    suite_prop_laws(seed, cases, b)
                }
                Suite::Triangle => {
                    let b = bound.unwrap_or(3);
                    guard(b, "triangle bound")?;
                    suite_triangle(b, b + 1)
                }
                Suite::Logic => {
                    let b = bound.unwrap_or(4);
                    guard(b, "logic bound")?;
                    if b > 4 {
                        return Err(Error::Resource(format!(
                            "logic exhaustive bound {b} exceeds 4"
                        )));
                    }
                    suite_logic(b, 12)
                }
            };
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("report serializes")
                );
            } else {
                print!("{}", report.to_text());
            }
            Ok(report.exit_status())
        }
        Command::Render { category, morphism } => {
            let v = read_arg(&morphism)?;
            let dot = match category {
                Renderable::Syn => render_syn(&syn_from_json(&v)?),
                Renderable::Corel => render_corel(&corel_from_json(&v)?),
                Renderable::Cospan => render_cospan(&cospan_from_json(&v)?),
            };
            print!("{dot}");
            Ok(0)
        }
        Command::Fixpoint { spec } => {
            let v = read_arg(&spec)?;
            let spec: FixpointSpec =
                serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?;
            guard(spec.carrier, "carrier size")?;
            if spec.formulas.is_empty() {
                return Err(Error::Contract("at least one formula is required".into()));
            }
            let rel = Rel::from_pairs(spec.carrier, &spec.relation)?;
            let arity = spec.formulas.len();
            let f = |env: &[Pred]| -> Result<Vec<Pred>> {
                spec.formulas.iter().map(|t| t.eval(&rel, env)).collect()
            };
            let least = lfp(spec.carrier, arity, f)?;
            let greatest = gfp(spec.carrier, arity, f)?;
            let as_json = |v: &[Pred]| -> serde_json::Value {
                if v.len() == 1 {
                    serde_json::json!(v[0].members())
                } else {
                    serde_json::json!(v.iter().map(|p| p.members()).collect::<Vec<_>>())
                }
            };
            println!(
                "{}",
                serde_json::json!({"lfp": as_json(&least), "gfp": as_json(&greatest)})
            );
            Ok(0)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Parse(_) => 2,
                Error::Contract(_) | Error::Monotonicity(_) => 3,
                Error::Resource(_) => 4,
            };
            std::process::exit(code);
        }
    }
}
