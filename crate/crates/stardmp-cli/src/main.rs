//! Command line front end: parse exact element documents, run single
//! computations or the full statement replay, and emit machine-readable
//! JSON reports.
//!
//! Exit codes: 0 = success / exists / all non-vacuous checks pass,
//! 2 = negative outcome (inverse absent, relation inapplicable, check
//! failure), 1 = input error.

pub mod document;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use document::{load_document, AnyCarrier, AnyElem};
use stardmp::analysis::{
    core_nilpotent_decompose, core_order, pseudo_core_decompose, pseudo_core_order, star_dmp,
    OrderVerdict,
};
use stardmp::catalog::CharVerdict;
use stardmp::ring::{ExistenceResult, InverseKind, InverseWitness, Inverses};
use stardmp::suite::{run_filtered, RunConfig, SuiteVerdict};
use stardmp::DEFAULT_BUDGET;

const EXIT_NEGATIVE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "stardmp",
    version,
    about = "Exact generalized inverses, *-DMP classification and statement replay over rings with involution"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one generalized inverse of the element in FILE.
    Inverse {
        /// mp | 13 | group | drazin | core | pseudo-core | dual-pseudo-core
        #[arg(long)]
        kind: String,
        file: PathBuf,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Full *-DMP classification: verdict, index, witnesses, catalog votes.
    Classify {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Construct the pseudo core or core-nilpotent decomposition.
    Decompose {
        /// pseudo-core | core-nilpotent
        #[arg(long)]
        which: String,
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate an order relation between two elements of one carrier.
    Order {
        /// pseudo-core | core
        #[arg(long)]
        relation: String,
        file_a: PathBuf,
        file_b: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replay the statement catalog over its default universes.
    Verify {
        /// Restrict to these statement ids (repeatable).
        #[arg(long = "id")]
        ids: Vec<String>,
        #[arg(long)]
        seed: Option<u64>,
        /// Element cap for exhaustive universes (also via STARDMP_BUDGET).
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (report, code, out) = match run(cli.command) {
        Ok(r) => r,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    let text = serde_json::to_string_pretty(&report).expect("report serializes");
    match out {
        Some(path) => {
            if let Err(e) = fs::write(&path, text + "\n") {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => println!("{text}"),
    }
    ExitCode::from(code)
}

type CmdResult = Result<(Value, u8, Option<PathBuf>), String>;

fn run(command: Command) -> CmdResult {
    match command {
        Command::Inverse { kind, file, out } => cmd_inverse(&kind, &file, out),
        Command::Classify { file, out } => cmd_classify(&file, out),
        Command::Decompose { which, file, out } => cmd_decompose(&which, &file, out),
        Command::Order {
            relation,
            file_a,
            file_b,
            out,
        } => cmd_order(&relation, &file_a, &file_b, out),
        Command::Verify {
            ids,
            seed,
            budget,
            out,
        } => cmd_verify(ids, seed, budget, out),
    }
}

fn load(path: &PathBuf) -> Result<(AnyCarrier, AnyElem), String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    load_document(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn ring_json(carrier: &AnyCarrier) -> Value {
    serde_json::to_value(carrier.ring_doc()).expect("descriptor serializes")
}

fn witness_json<E>(w: &InverseWitness<E>, to_json: impl Fn(&E) -> Value) -> Value {
    json!({
        "value": to_json(&w.value),
        "index": w.index,
        "verified": w.verified,
    })
}

fn cmd_inverse(kind_text: &str, file: &PathBuf, out: Option<PathBuf>) -> CmdResult {
    let kind = InverseKind::parse(kind_text)
        .ok_or_else(|| format!("--kind: unknown inverse kind '{kind_text}'"))?;
    let (carrier, elem) = load(file)?;
    let (report, code) = with_carrier!(&carrier, &elem, |ring, a, to_json| {
        let result = match kind {
            InverseKind::MoorePenrose => ring.moore_penrose(a),
            InverseKind::OneThree => ring.one_three(a),
            InverseKind::Group => ring.group(a),
            InverseKind::Drazin => ExistenceResult::Exists(ring.drazin(a)),
            InverseKind::Core => ring.core(a),
            InverseKind::PseudoCore => ring.pseudo_core(a),
            InverseKind::DualPseudoCore => ring.dual_pseudo_core(a),
        };
        let base = json!({
            "command": "inverse",
            "kind": kind.as_str(),
            "ring": ring_json(&carrier),
            "input": to_json(a),
        });
        match result {
            ExistenceResult::Exists(w) => {
                let mut r = base;
                r["outcome"] = json!("exists");
                r["witness"] = witness_json(&w, to_json);
                (r, 0u8)
            }
            ExistenceResult::NotExists(reason) => {
                let mut r = base;
                r["outcome"] = json!("not-exists");
                r["reason"] = json!(reason.code());
                r["detail"] = json!(reason.to_string());
                (r, EXIT_NEGATIVE)
            }
        }
    });
    Ok((report, code, out))
}

fn votes_json(votes: &[(&'static str, CharVerdict)]) -> Value {
    Value::Array(
        votes
            .iter()
            .map(|(id, v)| match v {
                CharVerdict::Holds { index } => {
                    json!({"id": id, "verdict": "holds", "index": index})
                }
                CharVerdict::Fails => json!({"id": id, "verdict": "fails"}),
                CharVerdict::Inapplicable(reason) => {
                    json!({"id": id, "verdict": "inapplicable", "reason": reason})
                }
            })
            .collect(),
    )
}

fn cmd_classify(file: &PathBuf, out: Option<PathBuf>) -> CmdResult {
    let (carrier, elem) = load(file)?;
    let report = with_carrier!(&carrier, &elem, |ring, a, to_json| {
        let r = star_dmp(ring, a);
        json!({
            "command": "classify",
            "ring": ring_json(&carrier),
            "input": to_json(a),
            "is_star_dmp": r.is_star_dmp,
            "index": r.index,
            "witnesses": {
                "drazin": witness_json(&r.drazin, to_json),
                "power_moore_penrose": r.power_mp.as_ref().map(|w| witness_json(w, to_json)),
                "pseudo_core": r.pseudo_core.as_ref().map(|w| witness_json(w, to_json)),
                "dual_pseudo_core": r.dual_pseudo_core.as_ref().map(|w| witness_json(w, to_json)),
            },
            "characterizations": votes_json(&r.votes),
        })
    });
    Ok((report, 0, out))
}

fn axioms_json(a: &stardmp::analysis::DecompositionAxioms) -> Value {
    json!({
        "sum": a.sum,
        "nilpotent": a.nilpotent,
        "star_orthogonal": a.star_orthogonal,
        "absorbed": a.absorbed,
        "group_invertible": a.group_invertible,
    })
}

fn cmd_decompose(which: &str, file: &PathBuf, out: Option<PathBuf>) -> CmdResult {
    if which != "pseudo-core" && which != "core-nilpotent" {
        return Err(format!("--which: unknown decomposition '{which}'"));
    }
    let (carrier, elem) = load(file)?;
    let (report, code) = with_carrier!(&carrier, &elem, |ring, a, to_json| {
        let base = json!({
            "command": "decompose",
            "which": which,
            "ring": ring_json(&carrier),
            "input": to_json(a),
        });
        if which == "pseudo-core" {
            match pseudo_core_decompose(ring, a) {
                Ok(d) => {
                    let mut r = base;
                    r["outcome"] = json!("exists");
                    r["group_part"] = to_json(&d.group_part);
                    r["nilpotent_part"] = to_json(&d.nilpotent_part);
                    r["index"] = json!(d.index);
                    r["axioms"] = axioms_json(&d.axioms);
                    (r, 0u8)
                }
                Err(reason) => {
                    let mut r = base;
                    r["outcome"] = json!("not-exists");
                    r["reason"] = json!(reason.code());
                    (r, EXIT_NEGATIVE)
                }
            }
        } else {
            let d = core_nilpotent_decompose(ring, a);
            let mut r = base;
            r["outcome"] = json!("exists");
            r["core_part"] = to_json(&d.core_part);
            r["nilpotent_part"] = to_json(&d.nilpotent_part);
            r["index"] = json!(d.index);
            r["axioms"] = axioms_json(&d.axioms);
            (r, 0u8)
        }
    });
    Ok((report, code, out))
}

fn order_json<E>(v: &OrderVerdict<E>, to_json: impl Fn(&E) -> Value) -> Value {
    json!({
        "relation": v.relation.as_str(),
        "holds": v.holds,
        "equalities": v.equalities.iter().map(|e| json!({
            "label": e.label,
            "lhs": to_json(&e.lhs),
            "rhs": to_json(&e.rhs),
            "equal": e.equal,
        })).collect::<Vec<_>>(),
    })
}

fn cmd_order(
    relation: &str,
    file_a: &PathBuf,
    file_b: &PathBuf,
    out: Option<PathBuf>,
) -> CmdResult {
    if relation != "pseudo-core" && relation != "core" {
        return Err(format!("--relation: unknown order relation '{relation}'"));
    }
    let (carrier, a) = load(file_a)?;
    let (carrier_b, b) = load(file_b)?;
    if carrier.ring_doc() != carrier_b.ring_doc() {
        return Err(format!(
            "carrier mismatch: {} and {} describe different carriers",
            file_a.display(),
            file_b.display()
        ));
    }
    let (report, code) = with_carrier!(&carrier, &a, &b, |ring, x, y, to_json| {
        let verdict = if relation == "pseudo-core" {
            pseudo_core_order(ring, x, y)
        } else {
            core_order(ring, x, y)
        };
        let base = json!({
            "command": "order",
            "ring": ring_json(&carrier),
            "a": to_json(x),
            "b": to_json(y),
        });
        match verdict {
            Some(v) => {
                let code = if v.holds { 0u8 } else { EXIT_NEGATIVE };
                let mut r = base;
                r["outcome"] = json!("applicable");
                r["order"] = order_json(&v, to_json);
                (r, code)
            }
            None => {
                let mut r = base;
                r["outcome"] = json!("inapplicable");
                r["reason"] = json!("the left element lacks the required inverse");
                (r, EXIT_NEGATIVE)
            }
        }
    });
    Ok((report, code, out))
}

fn effective_budget(flag: Option<u64>) -> Result<u64, String> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var("STARDMP_BUDGET") {
        Ok(text) => text
            .parse::<u64>()
            .map_err(|_| format!("STARDMP_BUDGET: invalid element cap '{text}'")),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn cmd_verify(
    ids: Vec<String>,
    seed: Option<u64>,
    budget: Option<u64>,
    out: Option<PathBuf>,
) -> CmdResult {
    let cfg = RunConfig {
        seed: seed.unwrap_or_else(|| RunConfig::default().seed),
        budget: effective_budget(budget)?,
    };
    let results = run_filtered(&cfg, &ids).map_err(|e| e.to_string())?;
    let (mut pass, mut fail, mut vacuous) = (0u64, 0u64, 0u64);
    for r in &results {
        match r.verdict {
            SuiteVerdict::Pass => pass += 1,
            SuiteVerdict::Fail => fail += 1,
            SuiteVerdict::Vacuous => vacuous += 1,
        }
    }
    let report = json!({
        "command": "verify",
        "seed": cfg.seed,
        "budget": cfg.budget,
        "ids": if ids.is_empty() { Value::Null } else { json!(ids) },
        "summary": {"pass": pass, "fail": fail, "vacuous": vacuous},
        "all_non_vacuous_pass": fail == 0,
        "results": serde_json::to_value(&results).expect("results serialize"),
    });
    let code = if fail == 0 { 0 } else { EXIT_NEGATIVE };
    Ok((report, code, out))
}
