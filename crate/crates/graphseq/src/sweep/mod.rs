//! Exhaustive verification drivers.
//!
//! Each sweep enumerates a bounded input range, cross-checks independent
//! implementations against each other (and, at tiny scale, against brute
//! force over all labeled graphs), and returns a [`SweepReport`] whose
//! counterexample list is expected to be empty. Work is partitioned into
//! independent shards that may run in parallel; merging is deterministic,
//! so the report never depends on scheduling.

mod brute;
mod enumerate;

pub use brute::{brute_force_realizable, MAX_BRUTE_N};
pub use enumerate::{enumerate_decreasing_sequences, enumerate_with_extremes, enumerate_with_first_entry};

use std::collections::{BTreeMap, BTreeSet};
use std::io;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use rayon::prelude::*;
use serde::ser::{Serialize, SerializeMap, Serializer};
use serde_json::json;

use crate::bounds::{case_inequality_holds, sharp_sufficient, try_classify_case, CaseLabel, Triple};
use crate::graphicality::{eg_failing_indices, erdos_gallai, havel_hakimi_realize, zz_rk_criterion};
use crate::two_element::TwoElementSpec;
use crate::witness::construct_witness;
use crate::Verdict;

/// Which verification sweep a report came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    /// Three graphicality tests compared on every sequence in range.
    OracleEquivalence,
    /// Witness construction where the sharp bound fails, absence of
    /// counterexamples where it holds.
    Sharpness,
    /// Residue-class inequality compared against the sharp bound on every
    /// triple, plus class disjointness and exhaustiveness.
    CaseEquivalence,
}

impl SweepMode {
    pub fn as_str(self) -> &'static str {
        match self {
            SweepMode::OracleEquivalence => "oracle",
            SweepMode::Sharpness => "sharpness",
            SweepMode::CaseEquivalence => "cases",
        }
    }
}

impl std::fmt::Display for SweepMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SweepMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "oracle" => Ok(SweepMode::OracleEquivalence),
            "sharpness" => Ok(SweepMode::Sharpness),
            "cases" => Ok(SweepMode::CaseEquivalence),
            other => Err(format!("unknown sweep mode {other:?} (expected oracle, sharpness, or cases)")),
        }
    }
}

impl Serialize for SweepMode {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// A single verified failure, carrying everything needed to reproduce it.
/// Any entry in a report means an implementation bug; none are expected.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Counterexample {
    /// The three graphicality tests did not agree on this sequence.
    OracleDisagreement { entries: Vec<u32>, eg: Verdict, rk: Verdict, realized: bool },
    /// Exhaustive graph enumeration and the inequality test disagree on
    /// whether this multiset is realizable.
    GroundTruthMismatch { entries: Vec<u32>, brute_force: bool, eg_accepts: bool },
    /// The sharp bound fails but no valid witness came back.
    WitnessFailure { a: u32, b: u32, n: u32, detail: String },
    /// The sharp bound holds yet a two-valued even-sum sequence in range
    /// has a negative discriminant.
    TwoValuedCounterexample { a: u32, b: u32, n: u32, s: u32, discriminant: i64 },
    /// The sharp bound holds yet full enumeration found a nongraphic
    /// even-sum sequence with these extremes.
    EnumeratedCounterexample { a: u32, b: u32, n: u32, entries: Vec<u32> },
    /// The residue-class inequality and the sharp bound disagree.
    CaseMismatch { a: u32, b: u32, n: u32, class_inequality: bool, sharp: bool },
    /// No residue class applied (exhaustiveness violation).
    CaseGap { a: u32, b: u32, n: u32 },
    /// A squared-form equality that should be arithmetically impossible
    /// (class I with b odd hitting 4bn+4; class III with b odd hitting
    /// 4bn+5) was reached.
    CaseEqualityReached { a: u32, b: u32, n: u32, case: CaseLabel, square: i64 },
}

/// Outcome of one sweep: the range covered, tallies by class, the (ideally
/// empty) counterexamples, and wall-clock duration. Everything except the
/// duration is a pure function of the range parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    mode: SweepMode,
    max_n: u32,
    max_entry: Option<u32>,
    examined: u64,
    counts: BTreeMap<String, u64>,
    counterexamples: Vec<Counterexample>,
    duration_ms: u64,
}

impl SweepReport {
    pub fn mode(&self) -> SweepMode {
        self.mode
    }

    pub fn max_n(&self) -> u32 {
        self.max_n
    }

    pub fn max_entry(&self) -> Option<u32> {
        self.max_entry
    }

    /// Total inputs (sequences or triples) the sweep evaluated.
    pub fn examined(&self) -> u64 {
        self.examined
    }

    pub fn counts(&self) -> &BTreeMap<String, u64> {
        &self.counts
    }

    pub fn count(&self, key: &str) -> u64 {
        self.counts.get(key).copied().unwrap_or(0)
    }

    pub fn counterexamples(&self) -> &[Counterexample] {
        &self.counterexamples
    }

    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn duration_ms(&self) -> u64 {
        self.duration_ms
    }

    /// Writes the report as JSON lines: one record per counterexample,
    /// then one summary record.
    pub fn write_jsonl<W: io::Write>(&self, writer: &mut W) -> io::Result<()> {
        for ce in &self.counterexamples {
            let value = serde_json::to_value(ce).expect("counterexamples serialize");
            writeln!(writer, "{value}")?;
        }
        let mut summary = json!({
            "counterexample_count": self.counterexamples.len(),
            "counts": self.counts,
            "duration_ms": self.duration_ms,
            "examined": self.examined,
            "max_n": self.max_n,
            "mode": self.mode,
            "record": "summary",
        });
        if let Some(max_entry) = self.max_entry {
            summary["max_entry"] = json!(max_entry);
        }
        writeln!(writer, "{summary}")
    }
}

impl Serialize for SweepReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let fields = 6 + usize::from(self.max_entry.is_some());
        let mut map = serializer.serialize_map(Some(fields))?;
        map.serialize_entry("counterexamples", &self.counterexamples)?;
        map.serialize_entry("counts", &self.counts)?;
        map.serialize_entry("duration_ms", &self.duration_ms)?;
        map.serialize_entry("examined", &self.examined)?;
        if let Some(max_entry) = self.max_entry {
            map.serialize_entry("max_entry", &max_entry)?;
        }
        map.serialize_entry("max_n", &self.max_n)?;
        map.serialize_entry("mode", &self.mode)?;
        map.end()
    }
}

/// Optional progress observer: called after each completed shard with
/// (shards done, total shards). May be invoked from worker threads.
pub type ProgressFn<'a> = Option<&'a (dyn Fn(u64, u64) + Sync)>;

/// Per-shard accumulator merged deterministically after the parallel map.
#[derive(Default)]
struct ShardOut {
    examined: u64,
    counts: BTreeMap<String, u64>,
    counterexamples: Vec<Counterexample>,
    /// Sequences the inequality test accepted, kept only when a later
    /// ground-truth comparison needs them.
    accepted: Vec<Vec<u32>>,
}

impl ShardOut {
    fn bump(&mut self, key: &str) {
        self.bump_by(key, 1);
    }

    fn bump_by(&mut self, key: &str, amount: u64) {
        *self.counts.entry(key.to_string()).or_insert(0) += amount;
    }
}

/// Runs one closure per shard key, in parallel, and merges the outputs in
/// key order. Counts are summed; counterexamples are concatenated and
/// sorted, so the merge is independent of scheduling.
fn run_shards<K, F>(keys: &[K], per_shard: F, progress: ProgressFn) -> ShardOut
where
    K: Sync,
    F: Fn(&K) -> ShardOut + Sync,
{
    let total = keys.len() as u64;
    let done = AtomicU64::new(0);
    let outputs: Vec<ShardOut> = keys
        .par_iter()
        .map(|key| {
            let out = per_shard(key);
            let finished = done.fetch_add(1, Ordering::Relaxed) + 1;
            if let Some(report) = progress {
                report(finished, total);
            }
            out
        })
        .collect();
    let mut merged = ShardOut::default();
    for out in outputs {
        merged.examined += out.examined;
        for (key, amount) in out.counts {
            *merged.counts.entry(key).or_insert(0) += amount;
        }
        merged.counterexamples.extend(out.counterexamples);
        merged.accepted.extend(out.accepted);
    }
    merged.counterexamples.sort();
    merged
}

fn finish(mode: SweepMode, max_n: u32, max_entry: Option<u32>, merged: ShardOut, started: Instant) -> SweepReport {
    SweepReport {
        mode,
        max_n,
        max_entry,
        examined: merged.examined,
        counts: merged.counts,
        counterexamples: merged.counterexamples,
        duration_ms: started.elapsed().as_millis() as u64,
    }
}

/// Compares the two inequality-based graphicality tests and the
/// constructive realizer on every nonincreasing positive sequence with
/// length up to `max_n` and entries up to `max_entry`.
///
/// With `include_ground_truth`, lengths up to 7 are additionally compared
/// against the set of degree multisets of all labeled simple graphs.
pub fn sweep_oracle_equivalence(
    max_n: u32,
    max_entry: u32,
    include_ground_truth: bool,
    progress: ProgressFn,
) -> SweepReport {
    let started = Instant::now();
    let ground_truth_limit = if include_ground_truth { (MAX_BRUTE_N as u32).min(max_n) } else { 0 };
    let keys: Vec<(u32, u32)> = (1..=max_n)
        .flat_map(|n| (1..=max_entry).map(move |first| (n, first)))
        .collect();

    let mut merged = run_shards(
        &keys,
        |&(n, first)| {
            let mut out = ShardOut::default();
            for seq in enumerate_with_first_entry(n as usize, first) {
                out.examined += 1;
                let eg = erdos_gallai(&seq);
                let rk = zz_rk_criterion(&seq);
                let realized = havel_hakimi_realize(&seq);
                out.bump(eg.reason());
                let agree = eg.is_graphic() == rk.is_graphic() && eg.is_graphic() == realized.is_some();
                if !agree {
                    out.counterexamples.push(Counterexample::OracleDisagreement {
                        entries: seq.entries().to_vec(),
                        eg,
                        rk,
                        realized: realized.is_some(),
                    });
                }
                if eg.is_graphic() && n <= ground_truth_limit {
                    out.accepted.push(seq.entries().to_vec());
                }
            }
            out
        },
        progress,
    );

    for n in 1..=ground_truth_limit {
        let realizable = brute_force_realizable(n as usize).expect("within brute-force limit");
        let positives: BTreeSet<Vec<u32>> = realizable
            .into_iter()
            .filter(|m| m.iter().all(|&d| d >= 1) && m[0] <= max_entry)
            .collect();
        let accepted: BTreeSet<Vec<u32>> =
            merged.accepted.iter().filter(|m| m.len() == n as usize).cloned().collect();
        merged.bump_by("ground_truth_realizable", positives.len() as u64);
        for entries in positives.symmetric_difference(&accepted) {
            merged.counterexamples.push(Counterexample::GroundTruthMismatch {
                entries: entries.clone(),
                brute_force: positives.contains(entries),
                eg_accepts: accepted.contains(entries),
            });
        }
    }
    merged.counterexamples.sort();
    merged.accepted.clear();

    finish(SweepMode::OracleEquivalence, max_n, Some(max_entry), merged, started)
}

/// For every strict triple `b < a < n <= max_n`: when the sharp bound
/// fails, a witness must construct and verify; when it holds, no
/// two-valued even-sum counterexample may exist, and for `n <= 10` full
/// enumeration over sequences with those extremes must find every
/// even-sum one graphic.
pub fn sweep_sharpness(max_n: u32, progress: ProgressFn) -> SweepReport {
    let started = Instant::now();
    let keys: Vec<u32> = (3..=max_n).collect();

    let merged = run_shards(
        &keys,
        |&n| {
            let mut out = ShardOut::default();
            for a in 2..n {
                for b in 1..a {
                    out.examined += 1;
                    let triple = Triple::new(a, b, n).expect("positive by construction");
                    if !sharp_sufficient(&triple) {
                        out.bump("sharp_false");
                        check_witness(&triple, &mut out);
                    } else {
                        out.bump("sharp_true");
                        check_no_counterexamples(&triple, &mut out);
                    }
                }
            }
            out
        },
        progress,
    );

    finish(SweepMode::Sharpness, max_n, None, merged, started)
}

fn check_witness(triple: &Triple, out: &mut ShardOut) {
    let (a, b, n) = (triple.a(), triple.b(), triple.n());
    let failure: Option<String> = match construct_witness(triple) {
        Err(e) => Some(format!("construction error: {e}")),
        Ok(report) => {
            let seq = report.sequence();
            if seq.len() != n as usize {
                Some(format!("length {} != n", seq.len()))
            } else if seq.max_entry() != a || seq.min_entry() != b {
                Some(format!("extremes ({}, {}) != (a, b)", seq.max_entry(), seq.min_entry()))
            } else if !seq.has_even_sum() {
                Some("odd sum".to_string())
            } else if erdos_gallai(seq).is_graphic() {
                Some(format!("witness {seq} is graphic"))
            } else if !eg_failing_indices(seq).contains(&report.certificate()) {
                Some(format!("certificate {} is not a failing index", report.certificate()))
            } else {
                None
            }
        }
    };
    match failure {
        Some(detail) => out.counterexamples.push(Counterexample::WitnessFailure { a, b, n, detail }),
        None => out.bump("witness_verified"),
    }
}

fn check_no_counterexamples(triple: &Triple, out: &mut ShardOut) {
    let (a, b, n) = (triple.a(), triple.b(), triple.n());
    for s in 1..n {
        let sum = i64::from(a) * i64::from(s) + i64::from(b) * i64::from(n - s);
        if sum % 2 != 0 {
            continue;
        }
        out.bump("two_valued_checks");
        let spec = TwoElementSpec::new(a, b, n, s).expect("strict triple, s in range");
        let discriminant = spec.discriminant();
        if discriminant < 0 {
            out.counterexamples.push(Counterexample::TwoValuedCounterexample {
                a,
                b,
                n,
                s,
                discriminant,
            });
        }
    }
    if n <= 10 {
        for seq in enumerate_with_extremes(n as usize, a, b) {
            if !seq.has_even_sum() {
                continue;
            }
            out.bump("enumerated_sequences");
            if !erdos_gallai(&seq).is_graphic() {
                out.counterexamples.push(Counterexample::EnumeratedCounterexample {
                    a,
                    b,
                    n,
                    entries: seq.entries().to_vec(),
                });
            }
        }
    }
}

/// Checks, for every triple with components in `[1, max_n]`, that the
/// residue-class inequality agrees with the sharp bound, that exactly one
/// class applies, and that the two impossible squared-form equalities are
/// never reached.
pub fn sweep_case_equivalence(max_n: u32, progress: ProgressFn) -> SweepReport {
    let started = Instant::now();
    let keys: Vec<u32> = (1..=max_n).collect();

    let merged = run_shards(
        &keys,
        |&n| {
            let mut out = ShardOut::default();
            for a in 1..=max_n {
                for b in 1..=max_n {
                    out.examined += 1;
                    let triple = Triple::new(a, b, n).expect("positive by construction");
                    let class = match try_classify_case(&triple) {
                        Some(class) => class,
                        None => {
                            out.counterexamples.push(Counterexample::CaseGap { a, b, n });
                            continue;
                        }
                    };
                    out.bump(match class {
                        CaseLabel::I => "case_I",
                        CaseLabel::II => "case_II",
                        CaseLabel::III => "case_III",
                        CaseLabel::IV => "case_IV",
                    });
                    let class_inequality = case_inequality_holds(&triple);
                    let sharp = sharp_sufficient(&triple);
                    if class_inequality != sharp {
                        out.counterexamples.push(Counterexample::CaseMismatch {
                            a,
                            b,
                            n,
                            class_inequality,
                            sharp,
                        });
                    }
                    let (ai, bi, ni) = (i64::from(a), i64::from(b), i64::from(n));
                    let square = (ai + bi + 1) * (ai + bi + 1);
                    let impossible = match class {
                        CaseLabel::I => b % 2 == 1 && square == 4 * bi * ni + 4,
                        CaseLabel::III => b % 2 == 1 && square == 4 * bi * ni + 5,
                        _ => false,
                    };
                    if impossible {
                        out.counterexamples.push(Counterexample::CaseEqualityReached {
                            a,
                            b,
                            n,
                            case: class,
                            square,
                        });
                    }
                }
            }
            out
        },
        progress,
    );

    finish(SweepMode::CaseEquivalence, max_n, None, merged, started)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_sweep_small_clean() {
        let report = sweep_oracle_equivalence(6, 5, true, None);
        assert!(report.is_clean(), "counterexamples: {:?}", report.counterexamples());
        assert_eq!(report.mode(), SweepMode::OracleEquivalence);
    }

    #[test]
    fn oracle_sweep_examined_count() {
        // Sequences of length <= 4 over [1, 3]: 3 + 6 + 10 + 15.
        let report = sweep_oracle_equivalence(4, 3, false, None);
        assert_eq!(report.examined(), 34);
    }

    #[test]
    fn sharpness_sweep_small_clean() {
        let report = sweep_sharpness(30, None);
        assert!(report.is_clean(), "counterexamples: {:?}", report.counterexamples());
        assert!(report.count("witness_verified") > 0);
        assert!(report.count("sharp_true") > 0);
    }

    #[test]
    fn case_sweep_small_clean() {
        let report = sweep_case_equivalence(40, None);
        assert!(report.is_clean(), "counterexamples: {:?}", report.counterexamples());
        assert_eq!(report.examined(), 40 * 40 * 40);
        let by_class: u64 =
            ["case_I", "case_II", "case_III", "case_IV"].iter().map(|k| report.count(k)).sum();
        assert_eq!(by_class, 40 * 40 * 40);
    }

    #[test]
    fn progress_reaches_total() {
        use std::sync::Mutex;
        let seen: Mutex<Vec<(u64, u64)>> = Mutex::new(Vec::new());
        let callback = |done: u64, total: u64| {
            seen.lock().unwrap().push((done, total));
        };
        let report = sweep_case_equivalence(5, Some(&callback));
        assert!(report.is_clean());
        let seen = seen.into_inner().unwrap();
        assert_eq!(seen.len(), 5);
        assert!(seen.iter().all(|&(_, total)| total == 5));
        assert!(seen.iter().any(|&(done, _)| done == 5));
    }

    #[test]
    fn jsonl_output_has_summary_line() {
        let report = sweep_case_equivalence(3, None);
        let mut buf = Vec::new();
        report.write_jsonl(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 1);
        let summary: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
        assert_eq!(summary["record"], "summary");
        assert_eq!(summary["examined"], 27);
        assert_eq!(summary["counterexample_count"], 0);
    }

    #[test]
    fn report_json_round_trips() {
        let report = sweep_oracle_equivalence(3, 2, false, None);
        let value = serde_json::to_value(&report).unwrap();
        let text = serde_json::to_string(&value).unwrap();
        let reparsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string(&reparsed).unwrap(), text);
    }

    #[test]
    fn mode_round_trips() {
        for mode in [SweepMode::OracleEquivalence, SweepMode::Sharpness, SweepMode::CaseEquivalence] {
            assert_eq!(mode.as_str().parse::<SweepMode>().unwrap(), mode);
        }
        assert!("bogus".parse::<SweepMode>().is_err());
    }
}
