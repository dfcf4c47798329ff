use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use sympbranch::charoracle::verify_branch_dimension;
use sympbranch::gzbasis::{basis_of, branch_decompose};
use sympbranch::rearrange::r;
use sympbranch::sl2::dim_mult_space;
use sympbranch::sweep::{run_suite, Suite, SweepConfig};
use sympbranch::{BasisRecord, DominantWeight, SkewShape};

#[derive(Parser)]
#[command(name = "sympbranch", version, about = "Symplectic branching multiplicity spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiplicity of μ in λ with its SL₂ⁿ factors and order types.
    Mult {
        /// Shape written `lambda/mu`, e.g. `2,1,0/2,0`.
        shape: String,
        #[arg(long)]
        json: bool,
    },
    /// One-dimensional decomposition of a multiplicity space.
    Basis {
        shape: String,
        #[arg(long)]
        json: bool,
    },
    /// Branching table of λ down one rank.
    Branch {
        lambda: String,
        /// Compare the total dimension against the Weyl dimension formula.
        #[arg(long)]
        check: bool,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive invariant sweeps.
    Verify {
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        max_rank: u32,
        #[arg(long, default_value_t = 3)]
        max_entry: u32,
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
enum Status {
    #[serde(rename = "OK")]
    Ok,
    #[serde(rename = "FAIL")]
    Fail,
}

#[derive(Serialize)]
struct Report {
    command: &'static str,
    inputs: Value,
    results: Value,
    status: Status,
    elapsed_ms: u128,
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn parse_shape(text: &str) -> Result<SkewShape> {
    text.parse().with_context(|| format!("cannot parse shape `{text}`"))
}

fn cmd_mult(shape: &str) -> Result<(Report, Vec<String>)> {
    let p = parse_shape(shape)?;
    let dim = dim_mult_space(&p);
    let (rs, types) = if dim > 0 {
        (Some(r(&p)?), p.order_types()?.iter().map(ToString::to_string).collect())
    } else {
        (None, Vec::new())
    };
    let mut lines = vec![format!("shape        {p}"), format!("dim          {dim}")];
    lines.push(format!(
        "r            {}",
        rs.as_ref().map_or("-".to_string(), |v| format!("({})", join(v)))
    ));
    lines.push(format!(
        "order types  {}",
        if types.is_empty() {
            "-".to_string()
        } else {
            types.join(" ")
        }
    ));
    let report = Report {
        command: "mult",
        inputs: json!({ "shape": p.to_string() }),
        results: json!({ "dim": dim, "r": rs, "order_types": types }),
        status: Status::Ok,
        elapsed_ms: 0,
    };
    Ok((report, lines))
}

fn cmd_basis(shape: &str) -> Result<(Report, Vec<String>)> {
    let p = parse_shape(shape)?;
    if !p.in_branching_semigroup() {
        bail!("{p} is not in the branching semigroup: its multiplicity space is zero");
    }
    let records: Vec<BasisRecord> = basis_of(&p)?.iter().map(BasisRecord::from).collect();
    let mut lines = vec![format!("{:<16} weight", "gamma")];
    lines.extend(
        records
            .iter()
            .map(|b| format!("{:<16} ({})", format!("({})", join(&b.gamma)), join(&b.weight))),
    );
    lines.push(format!("{} elements", records.len()));
    let report = Report {
        command: "basis",
        inputs: json!({ "shape": p.to_string() }),
        results: serde_json::to_value(&records)?,
        status: Status::Ok,
        elapsed_ms: 0,
    };
    Ok((report, lines))
}

fn cmd_branch(lambda: &str, check: bool) -> Result<(Report, Vec<String>)> {
    let l: DominantWeight = lambda
        .parse()
        .with_context(|| format!("cannot parse weight `{lambda}`"))?;
    let table = branch_decompose(&l)?;
    let mut lines = vec![format!("{:<16} multiplicity", "mu")];
    lines.extend(
        table
            .iter()
            .rev()
            .map(|(mu, k)| format!("{:<16} {k}", format!("({mu})"))),
    );
    let rows: Vec<Value> = table
        .iter()
        .rev()
        .map(|(mu, k)| json!({ "mu": mu.entries(), "multiplicity": k }))
        .collect();
    let checked = if check {
        Some(verify_branch_dimension(&l, &table)?)
    } else {
        None
    };
    if let Some(ok) = checked {
        lines.push(format!("dimension check  {}", if ok { "passed" } else { "FAILED" }));
    }
    let report = Report {
        command: "branch",
        inputs: json!({ "lambda": l.entries(), "check": check }),
        results: json!({ "table": rows, "dimension_check": checked }),
        status: if checked == Some(false) {
            Status::Fail
        } else {
            Status::Ok
        },
        elapsed_ms: 0,
    };
    Ok((report, lines))
}

fn thread_cap() -> Option<usize> {
    std::env::var("SYMPBRANCH_THREADS")
        .ok()
        .and_then(|v| v.trim().parse().ok())
}

fn cmd_verify(max_rank: u32, max_entry: u32, suite: Suite) -> Result<(Report, Vec<String>)> {
    let config = SweepConfig {
        max_rank: max_rank as usize,
        max_entry,
        threads: thread_cap(),
    };
    let report = run_suite(suite, config);
    let mut lines = vec![format!("{:<28} {:>4} {:>10}  result", "check", "rank", "cases")];
    for o in &report.outcomes {
        let verdict = match &o.counterexample {
            None => "ok".to_string(),
            Some(c) => format!("FAIL: {c}"),
        };
        lines.push(format!("{:<28} {:>4} {:>10}  {verdict}", o.check, o.rank, o.cases));
    }
    let status = if report.passed() { Status::Ok } else { Status::Fail };
    let out = Report {
        command: "verify",
        inputs: json!({ "max_rank": max_rank, "max_entry": max_entry, "suite": suite }),
        results: json!({
            "checks": report.outcomes,
            "first_failure": report.first_failure(),
        }),
        status,
        elapsed_ms: 0,
    };
    Ok((out, lines))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let (outcome, json_out) = match cli.command {
        Command::Mult { shape, json } => (cmd_mult(&shape), json),
        Command::Basis { shape, json } => (cmd_basis(&shape), json),
        Command::Branch { lambda, check, json } => (cmd_branch(&lambda, check), json),
        Command::Verify {
            max_rank,
            max_entry,
            suite,
            json,
        } => (cmd_verify(max_rank, max_entry, suite), json),
    };
    let (mut report, lines) = match outcome {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    report.elapsed_ms = start.elapsed().as_millis();
    if json_out {
        match serde_json::to_string_pretty(&report) {
            Ok(s) => println!("{s}"),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        }
    } else {
        for line in lines {
            println!("{line}");
        }
        let status = if report.status == Status::Ok { "OK" } else { "FAIL" };
        println!("status {status} ({} ms)", report.elapsed_ms);
    }
    if report.status == Status::Ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
