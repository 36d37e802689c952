use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use eds_core::generators::{generate, GenSpec, Generated};
use eds_core::graph::diameter;
use eds_core::io::{parse_graph, parse_x3c, print_graph, print_x3c};
use eds_core::recognize::{classify_with, ClassifyOptions};
use eds_core::reductions::{subdivide_for_girth, x3c_to_ed};
use eds_core::solvers::{
    dispatch_with, enumerate_s222_free, DispatchOptions, Reason, SolverKind, SolverOutcome,
    Status, Strategy,
};
use eds_core::{brute_force_eds, eds::violations, OracleMode};

const EXIT_FOUND: u8 = 0;
const EXIT_NOT_EDS: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_NO_EDS: u8 = 3;
const EXIT_NOT_APPLICABLE: u8 = 4;

#[derive(Parser)]
#[command(name = "eds", version, about = "Efficient dominating sets in bipartite graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a graph has an efficient dominating set.
    Solve(SolveArgs),
    /// Check a candidate set.
    Verify {
        file: PathBuf,
        /// Vertices separated by commas or spaces, e.g. "0,3".
        #[arg(long, allow_hyphen_values = true)]
        set: String,
    },
    /// Report membership in the supported graph classes.
    Recognize {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Largest ell tested for ell-P4-freeness.
        #[arg(long, default_value_t = ClassifyOptions::default().lp4_cap)]
        lp4_cap: usize,
    },
    /// Build the hardness reduction graph from an exact-cover instance.
    Reduce {
        #[arg(value_enum)]
        source: ReduceSource,
        file: PathBuf,
        /// Subdivide until no induced C4, ..., C_{2k} remains.
        #[arg(long)]
        girth: Option<usize>,
        /// Write the graph here instead of stdout; the role map goes to
        /// `<out>.roles.json` unless --roles is given.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        roles: Option<PathBuf>,
    },
    /// Generate an instance from a spec string.
    Gen {
        spec: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReduceSource {
    X3c,
}

#[derive(clap::Args)]
struct SolveArgs {
    file: PathBuf,
    /// auto, p5, p7, lp4=<l>, s222, s223, s224, p9deg3 or oracle.
    #[arg(long, default_value = "auto")]
    class: String,
    #[arg(long)]
    json: bool,
    /// List every e.d.s. (s222 and oracle only).
    #[arg(long)]
    all: bool,
    /// Node budget for the exact search.
    #[arg(long)]
    budget: Option<u64>,
    /// Run on a single thread.
    #[arg(long)]
    seedless_deterministic: bool,
    /// Worker threads for the per-root search.
    #[arg(long)]
    threads: Option<usize>,
    /// Print the elapsed time to stderr.
    #[arg(long)]
    timing: bool,
}

struct InputError(anyhow::Error);

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(args) => solve(args),
        Command::Verify { file, set } => verify(&file, &set),
        Command::Recognize {
            file,
            json,
            lp4_cap,
        } => recognize(&file, json, lp4_cap),
        Command::Reduce {
            source: ReduceSource::X3c,
            file,
            girth,
            out,
            roles,
        } => reduce(&file, girth, out.as_deref(), roles.as_deref()),
        Command::Gen { spec, seed, out } => gen(&spec, seed, out.as_deref()),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(InputError(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn input<T>(r: Result<T>) -> Result<T, InputError> {
    r.map_err(InputError)
}

fn read(file: &Path) -> Result<String> {
    fs::read_to_string(file).with_context(|| format!("cannot read {}", file.display()))
}

fn write_or_print(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn solve(args: SolveArgs) -> Result<u8, InputError> {
    let kind: SolverKind = input(args.class.parse().map_err(|e| anyhow!("{e}")))?;
    let g = input(read(&args.file).and_then(|t| Ok(parse_graph(&t)?)))?;
    let threads = if args.seedless_deterministic {
        Some(1)
    } else {
        args.threads
    };
    if let Some(t) = threads {
        input(
            rayon::ThreadPoolBuilder::new()
                .num_threads(t.max(1))
                .build_global()
                .map_err(|e| anyhow!("cannot size the thread pool: {e}")),
        )?;
    }
    let mut opts = DispatchOptions::default();
    if let Some(b) = args.budget {
        opts.budget = b;
    }
    let start = Instant::now();
    let code = if args.all {
        solve_all(&g, kind, opts.budget, args.json)
    } else {
        let out = dispatch_with(&g, Strategy::from(kind), opts);
        report(&out, args.json)
    };
    if args.timing {
        eprintln!("elapsed_ms {}", start.elapsed().as_millis());
    }
    Ok(code)
}

fn exit_code(status: &Status) -> u8 {
    match status {
        Status::Found(_) => EXIT_FOUND,
        Status::NoEds => EXIT_NO_EDS,
        Status::NotApplicable(_) => EXIT_NOT_APPLICABLE,
    }
}

fn report(out: &SolverOutcome, as_json: bool) -> u8 {
    let mut obj = json!({
        "status": status_name(&out.status),
        "eds": out.certificate(),
        "solver": out.solver,
        "stats": out.stats,
    });
    let (reason, witness) = match &out.status {
        Status::NotApplicable(why) => (Some(why.reason.to_string()), why.witness.clone()),
        Status::NoEds => (out.note.clone(), None),
        Status::Found(_) => (None, None),
    };
    if let Some(r) = &reason {
        obj["reason"] = json!(r);
    }
    if let Some(w) = &witness {
        obj["witness"] = json!(w);
    }
    if let Some(n) = &out.note {
        obj["note"] = json!(n);
    }
    if as_json {
        println!("{}", serde_json::to_string_pretty(&obj).expect("serialisable"));
    } else {
        match &out.status {
            Status::Found(c) => println!("{}", join(c.members())),
            Status::NoEds => println!("no e.d.s."),
            Status::NotApplicable(_) => println!("not applicable"),
        }
        if let Some(r) = reason {
            println!("reason: {r}");
        }
        if let Some(w) = witness {
            println!("witness: {}", join(&w));
        }
    }
    exit_code(&out.status)
}

fn status_name(s: &Status) -> &'static str {
    match s {
        Status::Found(_) => "found",
        Status::NoEds => "no_eds",
        Status::NotApplicable(_) => "not_applicable",
    }
}

fn solve_all(g: &eds_core::Graph, kind: SolverKind, budget: u64, as_json: bool) -> u8 {
    let listed: Result<Vec<Vec<usize>>, (Reason, Option<Vec<usize>>)> = match kind {
        SolverKind::S222 => enumerate_s222_free(g)
            .map(|sets| sets.into_iter().map(|c| c.into_vec()).collect())
            .map_err(|why| (why.reason, why.witness)),
        SolverKind::Oracle => brute_force_eds(g, OracleMode::All, budget)
            .map(|r| {
                let mut sets = r.solutions;
                sets.sort();
                sets
            })
            .map_err(|_| (Reason::BudgetExceeded, None)),
        _ => Err((Reason::EnumerationUnsupported, None)),
    };
    match listed {
        Ok(sets) => {
            let status = if sets.is_empty() { "no_eds" } else { "found" };
            if as_json {
                let obj = json!({
                    "status": status,
                    "eds": sets.first(),
                    "solver": kind,
                    "all": sets,
                    "count": sets.len(),
                });
                println!("{}", serde_json::to_string_pretty(&obj).expect("serialisable"));
            } else if sets.is_empty() {
                println!("no e.d.s.");
            } else {
                for s in &sets {
                    println!("{}", join(s));
                }
            }
            if sets.is_empty() {
                EXIT_NO_EDS
            } else {
                EXIT_FOUND
            }
        }
        Err((reason, witness)) => {
            if as_json {
                let mut obj = json!({
                    "status": "not_applicable",
                    "eds": Value::Null,
                    "solver": kind,
                    "reason": reason.to_string(),
                });
                if let Some(w) = witness {
                    obj["witness"] = json!(w);
                }
                println!("{}", serde_json::to_string_pretty(&obj).expect("serialisable"));
            } else {
                println!("not applicable");
                println!("reason: {reason}");
                if let Some(w) = witness {
                    println!("witness: {}", join(&w));
                }
            }
            EXIT_NOT_APPLICABLE
        }
    }
}

fn parse_set(text: &str, n: usize) -> Result<Vec<usize>> {
    let mut set = Vec::new();
    for tok in text.split(|c: char| c == ',' || c.is_whitespace()) {
        if tok.is_empty() {
            continue;
        }
        let v: usize = tok.parse().map_err(|_| anyhow!("bad vertex {tok:?} in --set"))?;
        if v >= n {
            bail!("vertex {v} out of range for a graph on {n} vertices");
        }
        set.push(v);
    }
    set.sort_unstable();
    if set.windows(2).any(|w| w[0] == w[1]) {
        bail!("--set repeats a vertex");
    }
    Ok(set)
}

fn verify(file: &Path, set: &str) -> Result<u8, InputError> {
    let g = input(read(file).and_then(|t| Ok(parse_graph(&t)?)))?;
    let d = input(parse_set(set, g.n()))?;
    let bad = violations(&g, &d);
    if bad.is_empty() {
        println!("efficient dominating set");
        return Ok(EXIT_FOUND);
    }
    for (v, count) in bad {
        println!("vertex {v} dominated {count} times");
    }
    Ok(EXIT_NOT_EDS)
}

fn recognize(file: &Path, as_json: bool, lp4_cap: usize) -> Result<u8, InputError> {
    let g = input(read(file).and_then(|t| Ok(parse_graph(&t)?)))?;
    let report = classify_with(&g, ClassifyOptions { lp4_cap });
    let value = serde_json::to_value(&report).expect("serialisable");
    if as_json {
        println!("{}", serde_json::to_string_pretty(&value).expect("serialisable"));
        return Ok(EXIT_FOUND);
    }
    let Value::Object(fields) = value else {
        unreachable!("report is a struct")
    };
    for (key, v) in fields {
        match v {
            Value::Object(m) => println!("{key}: {}", membership_line(&m)),
            Value::Array(items) if key == "lp4free" => {
                for item in items {
                    let Value::Object(m) = item else { continue };
                    println!("lp4free(ell={}): {}", m["ell"], membership_line(&m));
                }
            }
            Value::Array(items) => println!("{key}: {}", plain_list(&items)),
            other => println!("{key}: {other}"),
        }
    }
    Ok(EXIT_FOUND)
}

fn membership_line(m: &serde_json::Map<String, Value>) -> String {
    let mut line = m["holds"].to_string();
    if let Some(Value::Array(w)) = m.get("witness") {
        line.push_str(&format!(" witness {}", plain_list(w)));
    }
    line
}

fn plain_list(items: &[Value]) -> String {
    items.iter().map(Value::to_string).collect::<Vec<_>>().join(" ")
}

#[derive(Serialize)]
struct Sidecar<'a> {
    diameter: usize,
    map: &'a eds_core::reductions::ReductionMap,
}

fn reduce(
    file: &Path,
    girth: Option<usize>,
    out: Option<&Path>,
    roles: Option<&Path>,
) -> Result<u8, InputError> {
    let h = input(read(file).and_then(|t| Ok(parse_x3c(&t)?)))?;
    let (mut g, mut map) = x3c_to_ed(&h);
    if let Some(k) = girth {
        (g, map) = input(subdivide_for_girth(&g, &map, k).map_err(Into::into))?;
    }
    let diam = diameter(&g).expect("reduction graphs are connected");
    let sidecar = serde_json::to_string_pretty(&Sidecar {
        diameter: diam,
        map: &map,
    })
    .expect("serialisable");
    let roles = roles
        .map(Path::to_path_buf)
        .or_else(|| out.map(|p| PathBuf::from(format!("{}.roles.json", p.display()))));
    match out {
        Some(_) => {
            input(write_or_print(out, &print_graph(&g)))?;
            println!("diameter {diam}");
        }
        None => {
            println!("# diameter {diam}");
            print!("{}", print_graph(&g));
        }
    }
    if let Some(r) = roles {
        input(fs::write(&r, sidecar + "\n").with_context(|| format!("cannot write {}", r.display())))?;
    }
    Ok(EXIT_FOUND)
}

fn gen(spec: &str, seed: u64, out: Option<&Path>) -> Result<u8, InputError> {
    let spec: GenSpec = input(spec.parse().map_err(Into::into))?;
    let text = match input(generate(&spec, seed).map_err(Into::into))? {
        Generated::Graph { graph, planted } => {
            let mut text = String::new();
            if let Some(p) = planted {
                text.push_str(&format!("# planted {}\n", join(&p)));
            }
            text + &print_graph(&graph)
        }
        Generated::X3C(h) => print_x3c(&h),
    };
    input(write_or_print(out, &text))?;
    Ok(EXIT_FOUND)
}
