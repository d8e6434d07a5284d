//! Explicit nongraphic sequences for triples where the sharp bound fails.
//!
//! For every strict triple `b < a < n` with `n*b` below the sharp
//! threshold, there is an even-sum nongraphic sequence with largest entry
//! a, smallest entry b, and length n. This module builds the canonical
//! one for each residue class: classes I-III use a two-valued sequence
//! `(a^s, b^(n-s))` with s chosen per class, class IV inserts a single
//! b+1 between the a-run and the b-run. Every structural property the
//! construction relies on is re-checked at runtime instead of trusted.

use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::bounds::{classify_case, sharp_sufficient, CaseLabel, Triple};
use crate::graphicality::{eg_failing_indices, erdos_gallai};
use crate::{DegreeSequence, Error};

/// A constructed nongraphic sequence together with the data needed to
/// verify it independently: the class, the a-run length s, and the index
/// where the prefix-sum inequality fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    triple: Triple,
    case: CaseLabel,
    s: u32,
    sequence: DegreeSequence,
    certificate: usize,
}

impl WitnessReport {
    pub fn triple(&self) -> Triple {
        self.triple
    }

    pub fn case(&self) -> CaseLabel {
        self.case
    }

    /// Number of leading entries equal to a.
    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn sequence(&self) -> &DegreeSequence {
        &self.sequence
    }

    /// Index at which the sequence violates the prefix-sum inequality;
    /// always equal to s for these constructions, and verified against
    /// [`eg_failing_indices`] before the report is returned.
    pub fn certificate(&self) -> usize {
        self.certificate
    }
}

impl Serialize for WitnessReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(5))?;
        map.serialize_entry("case", &self.case)?;
        map.serialize_entry("certificate", &self.certificate)?;
        map.serialize_entry("s", &self.s)?;
        map.serialize_entry("sequence", &self.sequence)?;
        map.serialize_entry("triple", &self.triple)?;
        map.end()
    }
}

fn guard(cond: bool, detail: impl FnOnce() -> String) -> Result<(), Error> {
    if cond {
        Ok(())
    } else {
        Err(Error::InternalGuard { detail: detail() })
    }
}

/// Builds the canonical nongraphic witness for a strict triple where
/// [`sharp_sufficient`] fails.
///
/// Errors with `OutOfDomain` unless `b < a < n`, and with
/// `BoundSatisfied` when the sharp bound holds (no witness can exist
/// then). `InternalGuard` marks a violated construction invariant and is
/// never expected to occur.
pub fn construct_witness(t: &Triple) -> Result<WitnessReport, Error> {
    if !t.is_strict() {
        return Err(Error::OutOfDomain { detail: format!("witness needs b < a < n, got {t}") });
    }
    if sharp_sufficient(t) {
        return Err(Error::BoundSatisfied { a: t.a(), b: t.b(), n: t.n() });
    }
    let case = classify_case(t);
    let (a, b, n) = (t.a(), t.b(), t.n());

    // Twice the a-run length; each class's parity pattern makes it even.
    let doubled_s = match case {
        CaseLabel::I => a + b + 1,
        CaseLabel::II => a + b + 3,
        CaseLabel::III | CaseLabel::IV => a + b,
    };
    guard(doubled_s % 2 == 0, || format!("class {case} run length not integral at {t}"))?;
    let s = doubled_s / 2;
    guard(1 <= s && s < n, || format!("run length s={s} outside (0, n) at {t}"))?;

    let mut entries = vec![a; s as usize];
    if case == CaseLabel::IV {
        guard(n - s >= 2, || format!("class IV needs a trailing b after the b+1 entry at {t}"))?;
        entries.push(b + 1);
    }
    entries.resize(n as usize, b);
    let sequence = DegreeSequence::from_descending(entries)
        .map_err(|e| Error::InternalGuard { detail: format!("witness sequence invalid at {t}: {e}") })?;

    guard(sequence.len() == n as usize, || format!("length drifted at {t}"))?;
    guard(sequence.max_entry() == a && sequence.min_entry() == b, || {
        format!("extremes drifted at {t}")
    })?;
    guard(sequence.has_even_sum(), || format!("witness sum is odd at {t}"))?;
    guard(eg_failing_indices(&sequence).contains(&(s as usize)), || {
        format!("inequality does not fail at k={s} for {t}")
    })?;
    guard(!erdos_gallai(&sequence).is_graphic(), || format!("witness is graphic at {t}"))?;

    Ok(WitnessReport { triple: *t, case, s, sequence, certificate: s as usize })
}
