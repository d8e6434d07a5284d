use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use graphseq::sweep::{
    sweep_case_equivalence, sweep_oracle_equivalence, sweep_sharpness, SweepMode, SweepReport,
};
use graphseq::{
    classify_case, construct_witness, erdos_gallai, havel_hakimi_realize, sharp_sufficient,
    sharp_threshold, zz_rk_criterion, zz_sufficient, DegreeSequence, Error, TwoElementSpec, Triple,
    Verdict,
};

const EXIT_OK: u8 = 0;
const EXIT_NEGATIVE: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Graphic degree sequence toolkit: exact tests, realization, sharp
/// extreme-entry bounds, nongraphic witnesses, and verification sweeps.
#[derive(Parser)]
#[command(name = "graphseq", version, disable_help_subcommand = true)]
struct Cli {
    /// Emit machine-readable JSON on stdout instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide graphicality of a sequence with two independent tests
    Check {
        /// Comma-separated entries; `v^count` runs allowed (e.g. 5^3,2,1^3)
        seq: String,
    },
    /// Construct a simple graph realizing a sequence, if one exists
    Realize {
        /// Comma-separated entries; `v^count` runs allowed
        seq: String,
    },
    /// Evaluate the extreme-entry sufficient bounds for a triple
    Bound { a: u32, b: u32, n: u32 },
    /// Classify the two-valued sequence with s entries a and n-s entries b
    TwoElement { a: u32, b: u32, n: u32, s: u32 },
    /// Build a nongraphic witness for a triple where the sharp bound fails
    Witness { a: u32, b: u32, n: u32 },
    /// Run an exhaustive verification sweep
    Sweep {
        /// Which sweep: oracle, sharpness, or cases
        #[arg(long, value_parser = parse_mode)]
        mode: SweepMode,
        /// Upper bound for sequence length / triple components
        #[arg(long)]
        max_n: u32,
        /// Largest entry enumerated (oracle mode only; default max_n - 1)
        #[arg(long)]
        max_entry: Option<u32>,
        /// Worker threads (default: GRAPHSEQ_JOBS env var, then all cores)
        #[arg(long)]
        jobs: Option<usize>,
        /// Also write the report as JSON lines to this path
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_mode(s: &str) -> Result<SweepMode, String> {
    s.parse()
}

/// Canonical JSON line: serialize through a sorted-key value tree so that
/// parsing and re-serializing the output is byte-identical.
fn print_json<T: serde::Serialize>(value: &T) {
    let canonical = serde_json::to_value(value).expect("CLI values serialize");
    println!("{canonical}");
}

fn usage_error(message: &str) -> u8 {
    eprintln!("error: {message}");
    EXIT_USAGE
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Check { ref seq } => run_check(seq, cli.json),
        Command::Realize { ref seq } => run_realize(seq, cli.json),
        Command::Bound { a, b, n } => run_bound(a, b, n, cli.json),
        Command::TwoElement { a, b, n, s } => run_two_element(a, b, n, s, cli.json),
        Command::Witness { a, b, n } => run_witness(a, b, n, cli.json),
        Command::Sweep { mode, max_n, max_entry, jobs, out } => {
            run_sweep(mode, max_n, max_entry, jobs, out.as_deref(), cli.json)
        }
    };
    ExitCode::from(code)
}

fn parse_sequence(text: &str) -> Result<DegreeSequence, u8> {
    DegreeSequence::parse(text).map_err(|e| usage_error(&e.to_string()))
}

fn run_check(text: &str, json: bool) -> u8 {
    let seq = match parse_sequence(text) {
        Ok(seq) => seq,
        Err(code) => return code,
    };
    let eg = erdos_gallai(&seq);
    let rk = zz_rk_criterion(&seq);
    if json {
        print_json(&serde_json::json!({
            "prefix_sum": eg,
            "sequence": seq,
            "strong_index": rk,
        }));
    } else {
        println!("sequence: {seq}");
        println!("prefix-sum test: {eg}");
        println!("strong-index test: {rk}");
    }
    if eg.is_graphic() {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    }
}

fn run_realize(text: &str, json: bool) -> u8 {
    let seq = match parse_sequence(text) {
        Ok(seq) => seq,
        Err(code) => return code,
    };
    match havel_hakimi_realize(&seq) {
        Some(graph) => {
            if json {
                print_json(&graph);
            } else {
                print!("{}", graph.edge_list_text());
            }
            EXIT_OK
        }
        None => {
            if json {
                print_json(&serde_json::json!({ "realizable": false, "sequence": seq }));
            } else {
                println!("NOT_REALIZABLE");
            }
            EXIT_NEGATIVE
        }
    }
}

fn run_bound(a: u32, b: u32, n: u32, json: bool) -> u8 {
    let triple = match Triple::new(a, b, n) {
        Ok(t) => t,
        Err(e) => return usage_error(&e.to_string()),
    };
    let classical = zz_sufficient(&triple);
    let sharp = sharp_sufficient(&triple);
    let class = classify_case(&triple);
    let threshold = sharp_threshold(a, b);
    if json {
        print_json(&serde_json::json!({
            "case": class,
            "classical": classical,
            "nb": i64::from(n) * i64::from(b),
            "sharp": sharp,
            "threshold": threshold,
            "triple": triple,
        }));
    } else {
        let show = |holds: bool| if holds { "holds" } else { "fails" };
        println!("triple: {triple}");
        println!("classical bound (4nb >= (a+b+1)^2): {}", show(classical));
        println!("sharp bound (nb >= {threshold}): {}", show(sharp));
        println!("case: {class}");
    }
    if sharp {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    }
}

fn run_two_element(a: u32, b: u32, n: u32, s: u32, json: bool) -> u8 {
    let spec = match TwoElementSpec::new(a, b, n, s) {
        Ok(spec) => spec,
        Err(e) => {
            if json {
                print_json(&Verdict::OutOfDomain);
            }
            return usage_error(&e.to_string());
        }
    };
    let verdict = spec.verdict();
    let discriminant = spec.discriminant();
    if json {
        print_json(&serde_json::json!({
            "a": a,
            "b": b,
            "discriminant": discriminant,
            "n": n,
            "s": s,
            "verdict": verdict,
        }));
    } else {
        println!("sequence: {}^{},{}^{}", a, s, b, n - s);
        println!("discriminant: {discriminant}");
        println!("verdict: {verdict}");
    }
    if verdict.is_graphic() {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    }
}

fn run_witness(a: u32, b: u32, n: u32, json: bool) -> u8 {
    let triple = match Triple::new(a, b, n) {
        Ok(t) => t,
        Err(e) => return usage_error(&e.to_string()),
    };
    match construct_witness(&triple) {
        Ok(report) => {
            if json {
                print_json(&report);
            } else {
                println!("sequence: {}", report.sequence());
                println!("case: {}", report.case());
                println!("s: {}", report.s());
                println!("fails at k={}", report.certificate());
            }
            EXIT_OK
        }
        Err(e @ Error::BoundSatisfied { .. }) => {
            if json {
                print_json(&serde_json::json!({ "error": "bound_satisfied", "triple": triple }));
            } else {
                println!("{e}");
            }
            EXIT_NEGATIVE
        }
        Err(e) => usage_error(&e.to_string()),
    }
}

fn jobs_from_env() -> Result<Option<usize>, String> {
    match std::env::var("GRAPHSEQ_JOBS") {
        Ok(text) => text
            .parse::<usize>()
            .map(Some)
            .map_err(|_| format!("GRAPHSEQ_JOBS must be a nonnegative integer, got {text:?}")),
        Err(_) => Ok(None),
    }
}

fn run_sweep(
    mode: SweepMode,
    max_n: u32,
    max_entry: Option<u32>,
    jobs: Option<usize>,
    out: Option<&std::path::Path>,
    json: bool,
) -> u8 {
    let jobs = match jobs {
        Some(j) => j,
        None => match jobs_from_env() {
            Ok(env_jobs) => env_jobs.unwrap_or(0), // 0 = thread-pool default
            Err(message) => return usage_error(&message),
        },
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool,
        Err(e) => return usage_error(&format!("cannot build thread pool: {e}")),
    };

    let progress = |done: u64, total: u64| {
        // Throttle to roughly 5% steps; always report the final shard.
        let step = (total / 20).max(1);
        if done == total || done.is_multiple_of(step) {
            eprintln!("progress: {done}/{total} shards");
        }
    };

    let report: SweepReport = pool.install(|| match mode {
        SweepMode::OracleEquivalence => {
            let max_entry = max_entry.unwrap_or(max_n.saturating_sub(1).max(1));
            sweep_oracle_equivalence(max_n, max_entry, true, Some(&progress))
        }
        SweepMode::Sharpness => sweep_sharpness(max_n, Some(&progress)),
        SweepMode::CaseEquivalence => sweep_case_equivalence(max_n, Some(&progress)),
    });

    if let Some(path) = out {
        let file = match File::create(path) {
            Ok(file) => file,
            Err(e) => return usage_error(&format!("cannot create {}: {e}", path.display())),
        };
        let mut writer = BufWriter::new(file);
        if let Err(e) = report.write_jsonl(&mut writer).and_then(|()| writer.flush()) {
            return usage_error(&format!("cannot write {}: {e}", path.display()));
        }
    }

    if json {
        print_json(&report);
    } else {
        println!("mode: {}", report.mode());
        match report.max_entry() {
            Some(max_entry) => println!("range: n <= {}, entries <= {max_entry}", report.max_n()),
            None => println!("range: n <= {}", report.max_n()),
        }
        println!("examined: {}", report.examined());
        for (key, value) in report.counts() {
            println!("  {key}: {value}");
        }
        println!("counterexamples: {}", report.counterexamples().len());
        for ce in report.counterexamples() {
            println!("  {ce:?}");
        }
        println!("duration: {} ms", report.duration_ms());
    }
    if report.is_clean() {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    }
}
