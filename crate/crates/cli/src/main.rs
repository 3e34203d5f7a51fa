use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use invbraid::action::{equal_action_with_cap, evaluate_with_cap, tau};
use invbraid::diagram::{delete_strand, is_i_makanin, is_makanin};
use invbraid::freegroup::DEFAULT_MAX_LETTERS;
use invbraid::garside::{canonical_form, equal_nf, left_greedy_nf, CanonicalForm, GarsideNF};
use invbraid::monoidal::{factorize, is_central_with_cap, mu};
use invbraid::words::{braiding_word, mirror_inverse};
use invbraid::{abelian_invariant, relation_suite, AbelianClass, Error, MonoidWord, Presentation};
use rayon::prelude::*;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "invbraid", version, about = "Exact computation in the inverse braid monoid IB_n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Ambient number of strands.
    #[arg(short = 'n', long = "strands")]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Cap on the total letters of free-group images in the action engine.
    #[arg(long, default_value_t = DEFAULT_MAX_LETTERS, global = true)]
    max_letters: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    Action,
    Garside,
}

#[derive(Subcommand)]
enum Command {
    /// Free-group images of the generators under the action of a word.
    Eval {
        #[command(flatten)]
        common: Common,
        word: String,
    },
    /// Decide equality of two words; with --batch, read TAB-separated pairs.
    Eq {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Engine::Garside)]
        engine: Engine,
        #[arg(long, conflicts_with_all = ["left", "right"])]
        batch: Option<PathBuf>,
        #[arg(required_unless_present = "batch")]
        left: Option<String>,
        #[arg(required_unless_present = "batch")]
        right: Option<String>,
    },
    /// Garside normal form of a braid word.
    Nf {
        #[command(flatten)]
        common: Common,
        word: String,
    },
    /// Canonical form (I, J, normal form of the surviving braid).
    Canon {
        #[command(flatten)]
        common: Common,
        word: String,
    },
    /// Underlying partial injection.
    Tau {
        #[command(flatten)]
        common: Common,
        word: String,
    },
    /// Inverse w* (reversed word, crossings inverted).
    Inv {
        #[command(flatten)]
        common: Common,
        word: String,
    },
    /// Whether a braid becomes trivial after deleting any one strand.
    Makanin {
        #[command(flatten)]
        common: Common,
        word: String,
    },
    /// Whether a braid becomes trivial after deleting strand i.
    Imakanin {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'i', long = "strand")]
        strand: usize,
        word: String,
    },
    /// Delete the strand starting at position i from a braid.
    Delete {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'i', long = "strand")]
        strand: usize,
        word: String,
    },
    /// Place a word on n strands beside a word on l strands.
    Mu {
        #[command(flatten)]
        common: Common,
        /// Strands of the right-hand word.
        #[arg(short = 'l', long = "right-strands")]
        l: usize,
        left: String,
        right: String,
    },
    /// The braiding c_{n,l}, carrying l strands across n.
    Braiding {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'l', long = "right-strands")]
        l: usize,
    },
    /// Factor w = e·g with e idempotent and g a full braid.
    Factor {
        #[command(flatten)]
        common: Common,
        word: String,
    },
    /// Class in the abelianization.
    Abelian {
        #[command(flatten)]
        common: Common,
        word: String,
    },
    /// Whether the word commutes with every generator.
    Central {
        #[command(flatten)]
        common: Common,
        word: String,
    },
    /// Check every relation instance of a presentation.
    VerifyPresentation {
        #[command(flatten)]
        common: Common,
        presentation: String,
    },
}

/// Result of one command: the text and JSON renderings, plus the exit
/// status it implies.
struct Report {
    text: String,
    json: Value,
    status: u8,
}

impl Report {
    fn value(text: impl Into<String>, json: Value) -> Self {
        Report {
            text: text.into(),
            json,
            status: 0,
        }
    }

    fn boolean(b: bool) -> Self {
        Report {
            text: b.to_string(),
            json: json!({ "result": b }),
            status: if b { 0 } else { 1 },
        }
    }
}

fn status_of(e: &Error) -> u8 {
    match e {
        Error::ResourceLimit { .. } => 3,
        _ => 2,
    }
}

fn parse(text: &str, n: usize) -> invbraid::Result<MonoidWord> {
    MonoidWord::parse(text, n)
}

fn set_json(set: &[usize]) -> Value {
    json!(set)
}

fn nf_json(nf: &GarsideNF) -> Value {
    let factors: Vec<Vec<usize>> = nf.factors.iter().map(|p| p.one_based()).collect();
    json!({ "inf": nf.inf, "factors": factors })
}

fn canon_json(c: &CanonicalForm) -> Value {
    let mut v = nf_json(&c.nf);
    v["I"] = set_json(&c.domain);
    v["J"] = set_json(&c.codomain);
    v
}

fn equal(a: &MonoidWord, b: &MonoidWord, engine: Engine, cap: usize) -> invbraid::Result<bool> {
    match engine {
        Engine::Action => equal_action_with_cap(a, b, cap),
        Engine::Garside => equal_nf(a, b),
    }
}

fn batch(path: &PathBuf, common: &Common, engine: Engine) -> Result<Report, (u8, String)> {
    let text = fs::read_to_string(path).map_err(|e| (2, format!("{}: {e}", path.display())))?;
    let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    let results: Vec<Result<bool, Error>> = lines
        .par_iter()
        .map(|line| {
            let (a, b) = line
                .split_once('\t')
                .ok_or_else(|| Error::Unsupported(format!("expected two TAB-separated words in `{line}`")))?;
            equal(&parse(a, common.n)?, &parse(b, common.n)?, engine, common.max_letters)
        })
        .collect();
    let mut status = 0;
    let mut out = Vec::with_capacity(results.len());
    let mut values = Vec::with_capacity(results.len());
    for r in results {
        match r {
            Ok(b) => {
                out.push(b.to_string());
                values.push(json!(b));
            }
            Err(e) => {
                status = status.max(status_of(&e));
                out.push(format!("error: {e}"));
                values.push(json!({ "error": e.to_string() }));
            }
        }
    }
    Ok(Report {
        text: out.join("\n"),
        json: json!({ "results": values }),
        status,
    })
}

fn run(command: &Command) -> invbraid::Result<Report> {
    Ok(match command {
        Command::Eval { common, word } => {
            let e = evaluate_with_cap(&parse(word, common.n)?, common.max_letters)?;
            let mut map = serde_json::Map::new();
            for (i, image) in e.images().iter().enumerate() {
                let v = image.as_ref().map(|x| json!(x.to_string())).unwrap_or(Value::Null);
                map.insert(format!("x{}", i + 1), v);
            }
            Report::value(e.to_string(), Value::Object(map))
        }
        Command::Eq {
            common,
            engine,
            left,
            right,
            ..
        } => {
            let (a, b) = (left.as_deref().unwrap_or(""), right.as_deref().unwrap_or(""));
            Report::boolean(equal(&parse(a, common.n)?, &parse(b, common.n)?, *engine, common.max_letters)?)
        }
        Command::Nf { common, word } => {
            let nf = left_greedy_nf(&parse(word, common.n)?)?;
            Report::value(nf.to_string(), nf_json(&nf))
        }
        Command::Canon { common, word } => {
            let c = canonical_form(&parse(word, common.n)?)?;
            Report::value(c.to_string(), canon_json(&c))
        }
        Command::Tau { common, word } => {
            let t = tau(&parse(word, common.n)?)?;
            let mut map = serde_json::Map::new();
            for i in t.domain() {
                map.insert(i.to_string(), json!(t.get(i)));
            }
            Report::value(t.to_string(), Value::Object(map))
        }
        Command::Inv { common, word } => {
            let m = mirror_inverse(&parse(word, common.n)?);
            Report::value(m.to_string(), json!({ "word": m.to_string() }))
        }
        Command::Makanin { common, word } => Report::boolean(is_makanin(&parse(word, common.n)?)?),
        Command::Imakanin { common, strand, word } => {
            Report::boolean(is_i_makanin(&parse(word, common.n)?, *strand)?)
        }
        Command::Delete { common, strand, word } => {
            let d = delete_strand(&parse(word, common.n)?, *strand)?;
            Report::value(d.to_string(), json!({ "word": d.to_string(), "n": d.n() }))
        }
        Command::Mu { common, l, left, right } => {
            let m = mu(&parse(left, common.n)?, &parse(right, *l)?);
            Report::value(m.to_string(), json!({ "word": m.to_string(), "n": m.n() }))
        }
        Command::Braiding { common, l } => {
            let c = braiding_word(common.n, *l);
            Report::value(c.to_string(), json!({ "word": c.to_string(), "n": c.n() }))
        }
        Command::Factor { common, word } => {
            let (e, g) = factorize(&parse(word, common.n)?)?;
            Report::value(
                format!("e={e} g={g}"),
                json!({ "e": e.to_string(), "g": g.to_string() }),
            )
        }
        Command::Abelian { common, word } => {
            let class = abelian_invariant(&parse(word, common.n)?)?;
            let v = match class {
                AbelianClass::Group(e) => json!({ "group": e }),
                AbelianClass::Epsilon => json!({ "epsilon": true }),
            };
            Report::value(class.to_string(), v)
        }
        Command::Central { common, word } => {
            Report::boolean(is_central_with_cap(&parse(word, common.n)?, common.max_letters)?)
        }
        Command::VerifyPresentation { common, presentation } => {
            let p: Presentation = presentation.parse()?;
            let mut lines = Vec::new();
            let mut rows = Vec::new();
            let mut failed = 0;
            for rel in relation_suite(p, common.n)? {
                let ok = rel.holds_with_cap(common.max_letters)?;
                failed += !ok as usize;
                lines.push(format!("{} {rel}", if ok { "PASS" } else { "FAIL" }));
                rows.push(json!({
                    "rule": rel.rule,
                    "left": rel.left.to_string(),
                    "right": rel.right.to_string(),
                    "pass": ok,
                }));
            }
            let total = rows.len();
            lines.push(format!("{p} n={}: {}/{total} relations hold", common.n, total - failed));
            Report {
                text: lines.join("\n"),
                json: json!({
                    "presentation": p.id(),
                    "n": common.n,
                    "relations": rows,
                    "passed": total - failed,
                    "failed": failed,
                }),
                status: if failed == 0 { 0 } else { 1 },
            }
        }
    })
}

fn common(command: &Command) -> &Common {
    match command {
        Command::Eval { common, .. }
        | Command::Eq { common, .. }
        | Command::Nf { common, .. }
        | Command::Canon { common, .. }
        | Command::Tau { common, .. }
        | Command::Inv { common, .. }
        | Command::Makanin { common, .. }
        | Command::Imakanin { common, .. }
        | Command::Delete { common, .. }
        | Command::Mu { common, .. }
        | Command::Braiding { common, .. }
        | Command::Factor { common, .. }
        | Command::Abelian { common, .. }
        | Command::Central { common, .. }
        | Command::VerifyPresentation { common, .. } => common,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = common(&cli.command).clone();
    let report = match &cli.command {
        Command::Eq {
            batch: Some(path),
            engine,
            ..
        } => batch(path, &opts, *engine),
        command => run(command).map_err(|e| (status_of(&e), e.to_string())),
    };
    match report {
        Ok(report) => {
            match opts.format {
                Format::Text => println!("{}", report.text),
                Format::Json => println!("{}", report.json),
            }
            ExitCode::from(report.status)
        }
        Err((status, message)) => {
            eprintln!("error: {message}");
            ExitCode::from(status)
        }
    }
}
