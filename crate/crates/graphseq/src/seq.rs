use std::fmt;

use serde::Serialize;

use crate::Error;

/// Largest entry a sequence may contain.
pub const MAX_ENTRY: u32 = 1 << 20;

/// Largest number of entries a sequence may contain.
pub const MAX_LEN: usize = 1 << 20;

/// A finite sequence of positive integers kept in nonincreasing order.
///
/// All predicates in this crate take their input through this type, so the
/// ordering and positivity invariants are established exactly once.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct DegreeSequence {
    entries: Vec<u32>,
}

impl DegreeSequence {
    /// Builds a sequence from arbitrary integers, sorting them into
    /// nonincreasing order and rejecting empty input, nonpositive entries,
    /// and sizes beyond [`MAX_ENTRY`] / [`MAX_LEN`].
    pub fn new(raw: &[i64]) -> Result<Self, Error> {
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        if raw.len() > MAX_LEN {
            return Err(Error::TooLong { len: raw.len(), max: MAX_LEN });
        }
        let mut entries = Vec::with_capacity(raw.len());
        for &value in raw {
            if value < 1 {
                return Err(Error::NonpositiveEntry { value });
            }
            if value > i64::from(MAX_ENTRY) {
                return Err(Error::EntryTooLarge { value, max: MAX_ENTRY });
            }
            entries.push(value as u32);
        }
        entries.sort_unstable_by(|x, y| y.cmp(x));
        Ok(Self { entries })
    }

    /// Builds a sequence from entries already in nonincreasing order.
    ///
    /// This is the cheap path for enumeration loops that generate sorted
    /// data by construction; the order is still verified.
    pub fn from_descending(entries: Vec<u32>) -> Result<Self, Error> {
        if entries.is_empty() {
            return Err(Error::EmptyInput);
        }
        if entries.len() > MAX_LEN {
            return Err(Error::TooLong { len: entries.len(), max: MAX_LEN });
        }
        if entries[entries.len() - 1] < 1 {
            return Err(Error::NonpositiveEntry { value: i64::from(entries[entries.len() - 1]) });
        }
        if entries[0] > MAX_ENTRY {
            return Err(Error::EntryTooLarge { value: i64::from(entries[0]), max: MAX_ENTRY });
        }
        for pair in entries.windows(2) {
            if pair[0] < pair[1] {
                return Err(Error::OutOfDomain {
                    detail: format!("entries not in nonincreasing order: {} before {}", pair[0], pair[1]),
                });
            }
        }
        Ok(Self { entries })
    }

    /// Parses the comma-separated text form.
    ///
    /// Each token is either a plain value (`7`) or a run `value^count`
    /// (`5^3` means three fives). Whitespace around tokens is ignored.
    /// The result is sorted like [`DegreeSequence::new`].
    pub fn parse(text: &str) -> Result<Self, Error> {
        if text.trim().is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut raw: Vec<i64> = Vec::new();
        for token in text.split(',') {
            let token = token.trim();
            let (value_text, count) = match token.split_once('^') {
                None => (token, 1usize),
                Some((value_text, count_text)) => {
                    let count: usize = count_text
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse { token: token.to_string() })?;
                    if count == 0 {
                        return Err(Error::Parse { token: token.to_string() });
                    }
                    (value_text.trim(), count)
                }
            };
            let value: i64 = value_text
                .parse()
                .map_err(|_| Error::Parse { token: token.to_string() })?;
            if raw.len().saturating_add(count) > MAX_LEN {
                return Err(Error::TooLong { len: raw.len().saturating_add(count), max: MAX_LEN });
            }
            raw.extend(std::iter::repeat_n(value, count));
        }
        Self::new(&raw)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// First (largest) entry.
    pub fn max_entry(&self) -> u32 {
        self.entries[0]
    }

    /// Last (smallest) entry.
    pub fn min_entry(&self) -> u32 {
        self.entries[self.entries.len() - 1]
    }

    pub fn sum(&self) -> i64 {
        self.entries.iter().map(|&d| i64::from(d)).sum()
    }

    pub fn has_even_sum(&self) -> bool {
        self.sum() % 2 == 0
    }
}

impl fmt::Display for DegreeSequence {
    /// Formats runs of three or more equal entries as `value^count` and
    /// everything else as plain comma-separated values, so the output parses
    /// back to the same sequence.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.entries.len() {
            let value = self.entries[i];
            let mut run = 1;
            while i + run < self.entries.len() && self.entries[i + run] == value {
                run += 1;
            }
            if !first {
                f.write_str(",")?;
            }
            first = false;
            if run >= 3 {
                write!(f, "{value}^{run}")?;
            } else {
                for j in 0..run {
                    if j > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{value}")?;
                }
            }
            i += run;
        }
        Ok(())
    }
}
