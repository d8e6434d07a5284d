//! Sufficient conditions for graphicality that look only at the largest
//! entry `a`, the smallest entry `b`, and the length `n` of a sequence.
//!
//! The classical condition [`zz_sufficient`] asks for `4nb >= (a+b+1)^2`.
//! Its refinement [`sharp_sufficient`] lowers the requirement to an exact
//! integer threshold and cannot be improved: for every strict triple where
//! it fails, [`crate::construct_witness`] produces a nongraphic sequence.
//! The refinement is equivalent to a four-way residue case split, exposed
//! as [`classify_case`] and [`case_inequality_holds`].

use std::fmt;

use serde::ser::{Serialize, Serializer};

use crate::seq::{MAX_ENTRY, MAX_LEN};
use crate::Error;

/// Extreme-entry parameters `(a, b, n)`: intended as the largest entry,
/// smallest entry, and length of a sequence, though the bound arithmetic
/// is total over positive integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    a: u32,
    b: u32,
    n: u32,
}

impl Triple {
    pub fn new(a: u32, b: u32, n: u32) -> Result<Self, Error> {
        if a < 1 || b < 1 || n < 1 {
            return Err(Error::OutOfDomain { detail: format!("a={a}, b={b}, n={n} must all be >= 1") });
        }
        if a > MAX_ENTRY || b > MAX_ENTRY {
            return Err(Error::EntryTooLarge { value: i64::from(a.max(b)), max: MAX_ENTRY });
        }
        if n as usize > MAX_LEN {
            return Err(Error::TooLong { len: n as usize, max: MAX_LEN });
        }
        Ok(Self { a, b, n })
    }

    pub fn a(self) -> u32 {
        self.a
    }

    pub fn b(self) -> u32 {
        self.b
    }

    pub fn n(self) -> u32 {
        self.n
    }

    /// Whether `b < a < n`. The witness construction and the sharpness
    /// claim only make sense on strict triples.
    pub fn is_strict(self) -> bool {
        self.b < self.a && self.a < self.n
    }

    fn widened(self) -> (i64, i64, i64) {
        (i64::from(self.a), i64::from(self.b), i64::from(self.n))
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(a={}, b={}, n={})", self.a, self.b, self.n)
    }
}

impl Serialize for Triple {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(3))?;
        map.serialize_entry("a", &self.a)?;
        map.serialize_entry("b", &self.b)?;
        map.serialize_entry("n", &self.n)?;
        map.end()
    }
}

/// One of the four residue classes a triple falls into. The classes are
/// pairwise disjoint and cover every triple of positive integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseLabel {
    I,
    II,
    III,
    IV,
}

impl CaseLabel {
    pub const ALL: [CaseLabel; 4] = [CaseLabel::I, CaseLabel::II, CaseLabel::III, CaseLabel::IV];

    pub fn as_str(self) -> &'static str {
        match self {
            CaseLabel::I => "I",
            CaseLabel::II => "II",
            CaseLabel::III => "III",
            CaseLabel::IV => "IV",
        }
    }

    /// The amount added to `4bn` on the right side of this class's
    /// squared-form inequality.
    pub fn slack(self) -> i64 {
        match self {
            CaseLabel::I => 0,
            CaseLabel::II => 4,
            CaseLabel::III => 1,
            CaseLabel::IV => 5,
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for CaseLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// The classical quadratic sufficient condition: `4nb >= (a+b+1)^2`.
/// Any sequence with maximum a, minimum b, length n, and even sum is
/// graphic when this holds.
pub fn zz_sufficient(t: &Triple) -> bool {
    let (a, b, n) = t.widened();
    4 * n * b >= (a + b + 1) * (a + b + 1)
}

/// The exact threshold the refinement compares `nb` against:
/// `floor((a+b+1)^2 / 4)`, lowered by 1 when b is odd or a+b = 1 (mod 4).
pub fn sharp_threshold(a: u32, b: u32) -> i64 {
    let (a, b) = (i64::from(a), i64::from(b));
    let quarter = (a + b + 1) * (a + b + 1) / 4;
    if b % 2 == 1 || (a + b) % 4 == 1 {
        quarter - 1
    } else {
        quarter
    }
}

/// The sharp refinement of [`zz_sufficient`]: `nb >= sharp_threshold(a, b)`.
/// Still sufficient for graphicality, and best possible: when it fails on
/// a strict triple, a nongraphic sequence with those extremes exists.
pub fn sharp_sufficient(t: &Triple) -> bool {
    let (_, b, n) = t.widened();
    n * b >= sharp_threshold(t.a, t.b)
}

fn case_applies(t: &Triple, label: CaseLabel) -> bool {
    let (a, b, n) = t.widened();
    match label {
        CaseLabel::I => (a + b + 1).rem_euclid(4) == (2 * b * n).rem_euclid(4),
        CaseLabel::II => (a + b + 1).rem_euclid(4) == (2 * b * n + 2).rem_euclid(4),
        CaseLabel::III => (a + b) % 2 == 0 && (b * n) % 2 == 0,
        CaseLabel::IV => n % 2 == 1 && a % 2 == 1 && b % 2 == 1,
    }
}

/// The residue class of a triple, or None if no class applies. The cases
/// are provably exhaustive, so None is unreachable; the sweep driver uses
/// this form to record rather than panic on a (never observed) gap.
pub fn try_classify_case(t: &Triple) -> Option<CaseLabel> {
    let found = CaseLabel::ALL.into_iter().find(|&label| case_applies(t, label));
    debug_assert_eq!(
        CaseLabel::ALL.iter().filter(|&&label| case_applies(t, label)).count(),
        1,
        "case predicates must be disjoint and exhaustive at {t}"
    );
    found
}

/// The residue class of a triple: I when a+b+1 = 2bn (mod 4), II when
/// a+b+1 = 2bn+2 (mod 4), III when a+b and bn are both even, IV when
/// n, a, b are all odd. Exactly one always applies.
pub fn classify_case(t: &Triple) -> CaseLabel {
    try_classify_case(t).expect("the four residue classes cover every triple")
}

/// Evaluates the squared-form inequality of the triple's own class:
/// `(a+b+1)^2 <= 4bn + slack` with slack 0/4/1/5 for classes I-IV.
/// Equivalent to [`sharp_sufficient`] on every triple.
pub fn case_inequality_holds(t: &Triple) -> bool {
    let (a, b, n) = t.widened();
    (a + b + 1) * (a + b + 1) <= 4 * b * n + classify_case(t).slack()
}
