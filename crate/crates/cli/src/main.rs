//! `patsemi`: pattern admissibility, admission, m-variety trees and bounds
//! from the command line.
//!
//! Exit codes: 0 computed (booleans are part of the output), 2 bad input,
//! 3 precondition violated, 4 resource ceiling hit.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use patsemi::admission::{self, Witness, DEFAULT_SEARCH_CEILING};
use patsemi::bounds::bound_report;
use patsemi::oracle;
use patsemi::pattern::{admissible_multiplicities, classify, MultiplicityCondition};
use patsemi::semigroup::SemigroupRecord;
use patsemi::variety::{self, GenusLimit, DEFAULT_NODE_CEILING};
use patsemi::{Error, NumericalSemigroup, Pattern};

#[derive(Parser)]
#[command(
    name = "patsemi",
    version,
    about = "Linear patterns on numerical semigroups"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Search-volume ceiling for admission, node ceiling for exhaustive trees.
    #[arg(long, global = true)]
    ceiling: Option<u128>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    /// Graphviz; `tree` only.
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Empty, exactly-N0 or admissible.
    Classify {
        #[arg(allow_hyphen_values = true)]
        pattern: Pattern,
    },
    /// Multiplicities m for which {0, m, ->} admits the pattern.
    Multiplicities {
        #[arg(allow_hyphen_values = true)]
        pattern: Pattern,
    },
    /// Whether the semigroup admits the pattern, with a witness if not.
    Admits {
        #[arg(allow_hyphen_values = true)]
        pattern: Pattern,
        semigroup: NumericalSemigroup,
    },
    /// First violating sequence, or `none`.
    Witness {
        #[arg(allow_hyphen_values = true)]
        pattern: Pattern,
        semigroup: NumericalSemigroup,
    },
    /// Children of a node in the tree of its variety.
    Children {
        #[arg(allow_hyphen_values = true)]
        pattern: Pattern,
        semigroup: NumericalSemigroup,
    },
    /// Tree of all multiplicity-m semigroups admitting the pattern.
    Tree {
        #[arg(allow_hyphen_values = true)]
        pattern: Pattern,
        #[arg(short = 'm', long = "multiplicity")]
        multiplicity: u64,
        /// Stop at this genus.
        #[arg(long, conflicts_with = "exhaustive")]
        max_genus: Option<u64>,
        /// Enumerate the whole variety (the default), bounded by --ceiling nodes.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Smallest member of the variety containing the given elements.
    Closure {
        #[arg(allow_hyphen_values = true)]
        pattern: Pattern,
        #[arg(short = 'm', long = "multiplicity")]
        multiplicity: u64,
        #[arg(value_delimiter = ',')]
        elements: Vec<u64>,
    },
    /// Minimal generating system relative to the variety.
    Mingen {
        #[arg(allow_hyphen_values = true)]
        pattern: Pattern,
        semigroup: NumericalSemigroup,
    },
    /// Whether the variety is finite.
    Finite {
        #[arg(allow_hyphen_values = true)]
        pattern: Pattern,
        #[arg(short = 'm', long = "multiplicity")]
        multiplicity: u64,
    },
    /// Geil–Matsumoto, Lewittes and Beelen–Ruano bounds for field size q.
    Bound {
        semigroup: NumericalSemigroup,
        q: u64,
    },
    /// Brute-force reference computations.
    #[command(name = "oracle-check", alias = "oracle", subcommand)]
    OracleCheck(OracleCommand),
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Number of semigroups of each genus.
    Count {
        #[arg(long)]
        max_genus: u64,
    },
    /// Every semigroup up to a genus, optionally of one multiplicity.
    Enumerate {
        #[arg(long)]
        max_genus: u64,
        #[arg(short = 'm', long = "multiplicity")]
        multiplicity: Option<u64>,
    },
    /// Naive admission over sequences with s1 <= bound.
    NaiveAdmits {
        #[arg(allow_hyphen_values = true)]
        pattern: Pattern,
        semigroup: NumericalSemigroup,
        #[arg(long)]
        bound: u64,
    },
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::IsFullSet
        | Error::NotAdmissible
        | Error::NegativeLead(_)
        | Error::PreconditionViolated(_)
        | Error::GcdIsOne => 3,
        Error::ConductorTooLarge { .. }
        | Error::SearchTooLarge { .. }
        | Error::NodeCeilingExceeded { .. } => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn gens_text(gens: &[u64]) -> String {
    let parts: Vec<String> = gens.iter().map(u64::to_string).collect();
    parts.join(",")
}

fn witness_json(w: &Option<Witness>) -> Value {
    match w {
        Some(w) => json!({ "sequence": w.sequence, "value": w.value }),
        None => Value::Null,
    }
}

fn condition_text(c: &MultiplicityCondition) -> String {
    match *c {
        MultiplicityCondition::LowerBounded { min } => format!("m >= {min}"),
        MultiplicityCondition::All => "m >= 1".to_string(),
        MultiplicityCondition::Interval { lo, hi } if lo <= hi => format!("{lo} <= m <= {hi}"),
        MultiplicityCondition::Interval { .. } => "none".to_string(),
    }
}

fn json_line(v: Value) -> String {
    format!("{v}\n")
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let fmt = cli.format;
    let is_tree = matches!(cli.command, Command::Tree { .. });
    if fmt == Format::Dot && !is_tree {
        return Err(Failure::Usage(
            "--format dot is only available for `tree`".into(),
        ));
    }
    let search_ceiling = cli.ceiling.unwrap_or(DEFAULT_SEARCH_CEILING);
    let witness = |p: &Pattern, s: &NumericalSemigroup| {
        admission::violating_sequence_with_ceiling(s, p, search_ceiling)
    };
    let out = match &cli.command {
        Command::Classify { pattern } => {
            let class = classify(pattern);
            match fmt {
                Format::Json => {
                    json_line(json!({ "pattern": pattern.to_string(), "class": class.to_string() }))
                }
                _ => format!("{class}\n"),
            }
        }
        Command::Multiplicities { pattern } => {
            let c = admissible_multiplicities(pattern)?;
            match fmt {
                Format::Json => {
                    json_line(json!({ "pattern": pattern.to_string(), "condition": c }))
                }
                _ => format!("{}\n", condition_text(&c)),
            }
        }
        Command::Admits { pattern, semigroup } => {
            let w = witness(pattern, semigroup)?;
            match fmt {
                Format::Json => {
                    json_line(json!({ "admits": w.is_none(), "witness": witness_json(&w) }))
                }
                _ => match w {
                    None => "true\n".to_string(),
                    Some(w) => format!("false\n{w}\n"),
                },
            }
        }
        Command::Witness { pattern, semigroup } => {
            let w = witness(pattern, semigroup)?;
            match fmt {
                Format::Json => json_line(json!({ "witness": witness_json(&w) })),
                _ => match w {
                    None => "none\n".to_string(),
                    Some(w) => format!("{w}\n"),
                },
            }
        }
        Command::Children { pattern, semigroup } => {
            let kids = variety::children(semigroup, pattern)?;
            match fmt {
                Format::Json => {
                    let list: Vec<Value> = kids
                        .iter()
                        .map(
                            |c| json!({ "removed": c.frobenius(), "gens": c.minimal_generators() }),
                        )
                        .collect();
                    json_line(json!({ "children": list }))
                }
                _ => kids
                    .iter()
                    .map(|c| format!("-{} {c}\n", c.frobenius()))
                    .collect(),
            }
        }
        Command::Tree {
            pattern,
            multiplicity,
            max_genus,
            exhaustive: _,
        } => {
            let limit = match max_genus {
                Some(g) => GenusLimit::Cap(*g),
                None => GenusLimit::Exhaustive {
                    node_ceiling: cli
                        .ceiling
                        .map_or(DEFAULT_NODE_CEILING, |c| c.min(usize::MAX as u128) as usize),
                },
            };
            let tree = variety::tree_enumerate(pattern, *multiplicity, limit)?;
            match fmt {
                Format::Json => format!("{}\n", tree.to_json()),
                Format::Dot => tree.to_dot(),
                Format::Text => {
                    let mut out = String::new();
                    for (id, n) in tree.nodes.iter().enumerate() {
                        write!(out, "{id} g={} {}", n.semigroup.genus(), n.semigroup).unwrap();
                        if let (Some(p), Some(x)) = (n.parent, n.removed) {
                            write!(out, " parent={p} -{x}").unwrap();
                        }
                        out.push('\n');
                    }
                    out
                }
            }
        }
        Command::Closure {
            pattern,
            multiplicity,
            elements,
        } => {
            let c = variety::v_closure(pattern, *multiplicity, elements)?;
            match fmt {
                Format::Json => {
                    json_line(json!({ "scale": c.scale, "gens": c.minimal_generators() }))
                }
                _ => format!("{c}\n"),
            }
        }
        Command::Mingen { pattern, semigroup } => {
            let gens = variety::minimal_v_generating_system(semigroup, pattern)?;
            match fmt {
                Format::Json => json_line(json!({ "gens": gens })),
                _ if gens.is_empty() => "none\n".to_string(),
                _ => format!("{}\n", gens_text(&gens)),
            }
        }
        Command::Finite {
            pattern,
            multiplicity,
        } => {
            let finite = variety::is_variety_finite(pattern, *multiplicity)?;
            match fmt {
                Format::Json => json_line(json!({ "finite": finite })),
                _ => format!("{finite}\n"),
            }
        }
        Command::Bound { semigroup, q } => {
            if *q < 2 {
                return Err(Failure::Usage("q must be at least 2".into()));
            }
            let r = bound_report(semigroup, *q);
            match fmt {
                Format::Json => json_line(json!({ "q": q, "report": r })),
                _ => {
                    let mut out = format!("gm {}\nlewittes {}\nbr {}\n", r.gm, r.lewittes, r.br);
                    write!(out, "gm = lewittes: {}", r.coincide_gm_lewittes).unwrap();
                    if let Some(x) = r.failing_generator {
                        write!(out, " (fails at generator {x})").unwrap();
                    }
                    writeln!(out, "\nbr = 1+(q-1)m: {}", r.coincide_br).unwrap();
                    out
                }
            }
        }
        Command::OracleCheck(cmd) => match cmd {
            OracleCommand::Count { max_genus } => {
                let counts = oracle::genus_counts(*max_genus);
                match fmt {
                    Format::Json => json_line(json!({ "counts": counts })),
                    _ => counts
                        .iter()
                        .enumerate()
                        .map(|(g, n)| format!("{g} {n}\n"))
                        .collect(),
                }
            }
            OracleCommand::Enumerate {
                max_genus,
                multiplicity,
            } => {
                let mut all = oracle::enumerate_semigroups(*max_genus, *multiplicity);
                all.sort_by_key(|s| (s.genus(), s.minimal_generators()));
                match fmt {
                    Format::Json => {
                        let recs: Vec<SemigroupRecord> =
                            all.iter().map(SemigroupRecord::from).collect();
                        json_line(json!({ "semigroups": recs }))
                    }
                    _ => all.iter().map(|s| format!("{s}\n")).collect(),
                }
            }
            OracleCommand::NaiveAdmits {
                pattern,
                semigroup,
                bound,
            } => {
                let v = oracle::naive_violation(semigroup, pattern, *bound);
                match fmt {
                    Format::Json => json_line(json!({ "admits": v.is_none(), "sequence": v })),
                    _ => match v {
                        None => "true\n".to_string(),
                        Some(seq) => {
                            let parts: Vec<String> = seq.iter().map(i64::to_string).collect();
                            format!("false\ns=({}) -> {}\n", parts.join(","), pattern.eval(&seq))
                        }
                    },
                }
            }
        },
    };
    Ok(out)
}
