//! Command-line interface for increasing-tableau combinatorics: insertion,
//! word equivalence, jeu-de-taquin rectification, class enumeration,
//! censuses, unique-rectification-target queries, and conjecture checks.
//!
//! Output is deterministic: identical invocations print identical bytes.
//! Exit codes: 0 on success, 1 on invalid input, 2 when a tri-state query
//! ends undecided.

use std::collections::BTreeSet;
use std::env;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use kknuth::{
    compute_partition, equivalent_through, hecke_permutation, insert_word, is_urt_exhaustive_with,
    rectifications, rectify, structural_urt_verdict, trace_insertion, words_equivalent,
    ClassPartition, Tableau, Verdict, Word,
};
use serde_json::json;

#[derive(Parser)]
#[command(name = "kknuth", version, about = "Increasing tableaux: insertion, equivalence, classes")]
struct Cli {
    /// Worker threads for class computations; the current implementation
    /// is single-threaded, so values above 1 only print a note.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    threads: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Insert a word and print its insertion tableau.
    Insert(InsertArgs),
    /// Decide whether two words are insertion equivalent.
    Equiv(EquivArgs),
    /// Print the permutation computed from a word, in one-line notation.
    Perm(PermArgs),
    /// Rectify a skew tableau by jeu-de-taquin slides.
    Rectify(RectifyArgs),
    /// Enumerate all tableaux on an alphabet and partition them into classes.
    Classes(ClassesArgs),
    /// Print counts of initial tableaux, initial classes, and singletons.
    Census(CensusArgs),
    /// List every tableau equivalent to the given one.
    ClassOf(ClassOfArgs),
    /// Decide whether a tableau is a unique rectification target.
    Urt(UrtArgs),
    /// Check a conjecture over every class of an alphabet.
    Verify(VerifyArgs),
    /// Print census rows for alphabets 0 through a bound.
    Table(TableArgs),
}

#[derive(Args)]
struct InsertArgs {
    /// Word to insert: a digit string, or comma-separated letters.
    #[arg(long)]
    word: String,
    /// Also print the 1-indexed prefix positions that changed the tableau.
    #[arg(long)]
    trace: bool,
    /// Emit JSON instead of the human form.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct EquivArgs {
    /// First word.
    first: String,
    /// Second word.
    second: String,
    /// Search only through words of at most this length.
    #[arg(long, value_name = "K")]
    bounded: Option<usize>,
    /// Emit JSON instead of the human form.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct PermArgs {
    /// Word whose insertion permutation to print.
    word: String,
    /// Emit JSON instead of the human form.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct RectifyArgs {
    /// Path to a tableau in JSON form.
    #[arg(long, value_name = "FILE")]
    skew: PathBuf,
    /// Collect the rectifications of every slide strategy.
    #[arg(long)]
    all: bool,
    /// Emit JSON instead of the human form.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ClassesArgs {
    /// Alphabet bound: tableaux use labels 1 through n.
    #[arg(long)]
    n: u32,
    /// Write the computed partition snapshot to this path.
    #[arg(long, value_name = "FILE")]
    save: Option<PathBuf>,
    /// Emit JSON instead of the human form.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CensusArgs {
    /// Alphabet bound: tableaux use labels 1 through n.
    #[arg(long)]
    n: u32,
    /// Emit JSON instead of the human form.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ClassOfArgs {
    /// Path to a straight tableau in JSON form.
    #[arg(long, value_name = "FILE")]
    tableau: PathBuf,
    /// Emit JSON instead of the human form.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct UrtArgs {
    /// Path to a straight tableau in JSON form.
    #[arg(long, value_name = "FILE")]
    tableau: PathBuf,
    /// How to decide: structural criteria, the exhaustive class engine, or
    /// structural first with an exhaustive fallback on small alphabets.
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    method: Method,
    /// Emit JSON instead of the human form.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Structural,
    Exhaustive,
    Auto,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(subcommand)]
    conjecture: Conjecture,
}

#[derive(Subcommand)]
enum Conjecture {
    /// Member shapes of every class fill intervals of the Young lattice.
    Interval(VerifyScope),
    /// Class members connect through words no longer than the class maximum.
    Length(VerifyScope),
}

#[derive(Args)]
struct VerifyScope {
    /// Alphabet bound: tableaux use labels 1 through n.
    #[arg(long)]
    n: u32,
    /// Emit JSON instead of the human form.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TableArgs {
    /// Largest alphabet bound to include.
    #[arg(long, default_value_t = 5)]
    max_n: u32,
    /// Emit JSON instead of the human form.
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = u8::from(err.use_stderr());
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    if cli.threads > 1 {
        eprintln!("note: worker pools are not implemented; continuing single-threaded");
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Insert(args) => insert(args),
        Command::Equiv(args) => equiv(args),
        Command::Perm(args) => perm(args),
        Command::Rectify(args) => do_rectify(args),
        Command::Classes(args) => classes(args),
        Command::Census(args) => census(args),
        Command::ClassOf(args) => class_of(args),
        Command::Urt(args) => urt(args),
        Command::Verify(args) => verify(args),
        Command::Table(args) => table(args),
    }
}

fn parse_word(s: &str) -> Result<Word> {
    s.parse::<Word>().with_context(|| format!("parsing word {s:?}"))
}

fn read_tableau(path: &Path) -> Result<Tableau> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing tableau in {}", path.display()))
}

/// Straight tableaux print as a bare rows array; other shapes use the full
/// JSON encoding.
fn render_tableau(t: &Tableau) -> String {
    match t.straight_rows() {
        Some(rows) => serde_json::to_string(&rows).expect("rows serialize"),
        None => serde_json::to_string(t).expect("tableaux serialize"),
    }
}

fn emit(value: serde_json::Value) {
    println!("{value}");
}

/// Loads the partition for alphabet bound `n`, consulting the snapshot
/// cache at `KKNUTH_CACHE_DIR` when that variable is set. Cache problems
/// are reported on stderr and never fail the computation.
fn obtain_partition(n: u32) -> ClassPartition {
    let Some(dir) = env::var_os("KKNUTH_CACHE_DIR") else {
        return compute_partition(n);
    };
    let dir = PathBuf::from(dir);
    let path = dir.join(format!("partition-{n}.json"));
    if path.exists() {
        match ClassPartition::load_snapshot(&path) {
            Ok(partition) => return partition,
            Err(err) => eprintln!("note: ignoring snapshot {}: {err}", path.display()),
        }
    }
    let partition = compute_partition(n);
    let saved = fs::create_dir_all(&dir)
        .map_err(anyhow::Error::from)
        .and_then(|()| partition.save_snapshot(&path).map_err(anyhow::Error::from));
    if let Err(err) = saved {
        eprintln!("note: could not cache snapshot {}: {err}", path.display());
    }
    partition
}

fn insert(args: InsertArgs) -> Result<ExitCode> {
    let word = parse_word(&args.word)?;
    if args.trace {
        let trace = trace_insertion(&word);
        if args.json {
            emit(json!({
                "tableau": trace.result,
                "changed": trace.changed,
                "active": trace.active_indices,
            }));
        } else {
            println!("{}", render_tableau(&trace.result));
            let indices: Vec<String> =
                trace.active_indices.iter().map(usize::to_string).collect();
            println!("active {}", indices.join(" "));
        }
    } else {
        let result = insert_word(&word);
        if args.json {
            emit(json!(result));
        } else {
            println!("{}", render_tableau(&result));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn equiv(args: EquivArgs) -> Result<ExitCode> {
    let first = parse_word(&args.first)?;
    let second = parse_word(&args.second)?;
    let (equivalent, method) = match args.bounded {
        Some(bound) => (equivalent_through(&first, &second, bound)?, "bounded"),
        None => (words_equivalent(&first, &second), "class-engine"),
    };
    if args.json {
        let mut value = json!({ "equivalent": equivalent, "method": method });
        if let Some(bound) = args.bounded {
            value["bound"] = json!(bound);
        }
        emit(value);
    } else {
        println!("{equivalent}");
    }
    Ok(ExitCode::SUCCESS)
}

fn perm(args: PermArgs) -> Result<ExitCode> {
    let word = parse_word(&args.word)?;
    let perm = hecke_permutation(&word);
    if args.json {
        emit(json!({ "images": perm.images() }));
    } else {
        println!("{}", serde_json::to_string(perm.images()).expect("images serialize"));
    }
    Ok(ExitCode::SUCCESS)
}

fn do_rectify(args: RectifyArgs) -> Result<ExitCode> {
    let t = read_tableau(&args.skew)?;
    if args.all {
        let results = rectifications(&t)?;
        if args.json {
            let list: Vec<&Tableau> = results.iter().collect();
            emit(json!(list));
        } else {
            for result in &results {
                println!("{}", render_tableau(result));
            }
        }
    } else {
        let result = rectify(&t)?;
        if args.json {
            emit(json!(result));
        } else {
            println!("{}", render_tableau(&result));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn classes(args: ClassesArgs) -> Result<ExitCode> {
    let partition = obtain_partition(args.n);
    if let Some(path) = &args.save {
        partition
            .save_snapshot(path)
            .with_context(|| format!("saving snapshot to {}", path.display()))?;
    }
    let census = partition.census();
    if args.json {
        emit(json!({
            "n": partition.n(),
            "universe": partition.universe().len(),
            "classes": partition.class_count(),
            "initial_tableaux": census.initial_tableaux,
            "initial_classes": census.initial_classes,
            "urts": census.urts,
        }));
    } else {
        println!("n {}", partition.n());
        println!("universe {}", partition.universe().len());
        println!("classes {}", partition.class_count());
        println!(
            "initial {} {} {}",
            census.initial_tableaux, census.initial_classes, census.urts
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn census(args: CensusArgs) -> Result<ExitCode> {
    let census = obtain_partition(args.n).census();
    if args.json {
        emit(json!({
            "n": args.n,
            "initial_tableaux": census.initial_tableaux,
            "initial_classes": census.initial_classes,
            "urts": census.urts,
        }));
    } else {
        println!(
            "{} {} {}",
            census.initial_tableaux, census.initial_classes, census.urts
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn class_of(args: ClassOfArgs) -> Result<ExitCode> {
    let t = read_tableau(&args.tableau)?;
    let partition = obtain_partition(t.max_label());
    let members: BTreeSet<Tableau> = partition.class_of(&t)?;
    if args.json {
        let list: Vec<&Tableau> = members.iter().collect();
        emit(json!(list));
    } else {
        for member in &members {
            println!("{}", render_tableau(member));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn urt(args: UrtArgs) -> Result<ExitCode> {
    let t = read_tableau(&args.tableau)?;
    let exhaustive = |t: &Tableau| -> Result<Verdict> {
        let partition = obtain_partition(t.max_label());
        Ok(if is_urt_exhaustive_with(&partition, t)? {
            Verdict::Yes
        } else {
            Verdict::No
        })
    };
    let (verdict, method) = match args.method {
        Method::Structural => (structural_urt_verdict(&t)?, "structural"),
        Method::Exhaustive => (exhaustive(&t)?, "exhaustive"),
        Method::Auto => match structural_urt_verdict(&t)? {
            Verdict::Unknown if t.max_label() <= 7 => (exhaustive(&t)?, "exhaustive"),
            verdict => (verdict, "structural"),
        },
    };
    let answer = match verdict {
        Verdict::Yes => "yes",
        Verdict::No => "no",
        Verdict::Unknown => "unknown",
    };
    if args.json {
        emit(json!({ "verdict": answer, "method": method }));
    } else {
        println!("{answer}");
    }
    Ok(if verdict == Verdict::Unknown {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    })
}

fn verify(args: VerifyArgs) -> Result<ExitCode> {
    match args.conjecture {
        Conjecture::Interval(scope) => {
            let partition = obtain_partition(scope.n);
            let (holds, counterexample) = partition.verify_interval_conjecture();
            if scope.json {
                let witness = counterexample.as_ref().map(|c| {
                    json!({ "member": c.member, "missing_shape": c.missing_shape })
                });
                emit(json!({ "conjecture": "interval", "n": scope.n, "holds": holds, "counterexample": witness }));
            } else if holds {
                println!("holds");
            } else {
                let c = counterexample.expect("failing verification names a witness");
                println!(
                    "fails member {} missing-shape {}",
                    render_tableau(&c.member),
                    serde_json::to_string(&c.missing_shape).expect("shape serializes"),
                );
            }
        }
        Conjecture::Length(scope) => {
            let partition = obtain_partition(scope.n);
            let holds = partition.verify_length_conjecture();
            if scope.json {
                emit(json!({ "conjecture": "length", "n": scope.n, "holds": holds }));
            } else {
                println!("{}", if holds { "holds" } else { "fails" });
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn table(args: TableArgs) -> Result<ExitCode> {
    let rows: Vec<(u32, kknuth::Census)> = (0..=args.max_n)
        .map(|n| (n, obtain_partition(n).census()))
        .collect();
    if args.json {
        let list: Vec<serde_json::Value> = rows
            .iter()
            .map(|(n, census)| {
                json!({
                    "n": n,
                    "initial_tableaux": census.initial_tableaux,
                    "initial_classes": census.initial_classes,
                    "urts": census.urts,
                })
            })
            .collect();
        emit(json!(list));
    } else {
        println!("n initial-tableaux initial-classes urts");
        for (n, census) in &rows {
            println!(
                "{n} {} {} {}",
                census.initial_tableaux, census.initial_classes, census.urts
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}
