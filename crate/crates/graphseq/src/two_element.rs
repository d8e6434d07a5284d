//! Exact graphicality for sequences that take at most two distinct values.
//!
//! For `(a^s, b^(n-s))` with `b < a < n` and even sum, graphicality is
//! decided by the sign of one integer quadratic in s. The one-valued
//! sequence `(a^n)` is covered separately by [`uniform_graphic`].

use crate::{DegreeSequence, Error, Triple, Verdict};

/// Parameters of the two-valued sequence `(a^s, b^(n-s))`: s copies of a
/// followed by n-s copies of b, with `b < a < n` and `0 < s < n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TwoElementSpec {
    a: u32,
    b: u32,
    n: u32,
    s: u32,
}

impl TwoElementSpec {
    pub fn new(a: u32, b: u32, n: u32, s: u32) -> Result<Self, Error> {
        let triple = Triple::new(a, b, n)?;
        if !triple.is_strict() {
            return Err(Error::OutOfDomain {
                detail: format!("need b < a < n, got a={a}, b={b}, n={n}"),
            });
        }
        if s < 1 || s >= n {
            return Err(Error::OutOfDomain { detail: format!("need 0 < s < n, got s={s}, n={n}") });
        }
        Ok(Self { a, b, n, s })
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

    pub fn s(self) -> u32 {
        self.s
    }

    pub fn triple(self) -> Triple {
        Triple::new(self.a, self.b, self.n).expect("validated at construction")
    }

    /// The classifying quadratic `s^2 - (1+a+b)s + nb`. For even-sum
    /// specs the sequence is graphic exactly when this is >= 0.
    pub fn discriminant(self) -> i64 {
        let (a, b, n, s) = self.widened();
        s * s - (1 + a + b) * s + n * b
    }

    /// The per-index quadratic `k^2 - k(1+2b) + nb + bs - as`, the exact
    /// slack of the prefix-sum inequality at positions k >= s. At k = s it
    /// equals [`TwoElementSpec::discriminant`]; over all integers k it is
    /// minimized at k = b and k = b+1 (equal values).
    pub fn delta_k(self, k: u32) -> i64 {
        let (a, b, n, s) = self.widened();
        let k = i64::from(k);
        k * k - k * (1 + 2 * b) + n * b + b * s - a * s
    }

    /// Graphicality of the expanded sequence, decided in closed form:
    /// odd sum rejects outright, otherwise the discriminant sign decides.
    pub fn verdict(self) -> Verdict {
        let (a, b, n, s) = self.widened();
        if (a * s + b * (n - s)) % 2 == 1 {
            return Verdict::OddSum;
        }
        if self.discriminant() >= 0 {
            Verdict::Graphic
        } else {
            Verdict::DiscriminantNeg
        }
    }

    /// Materializes the actual sequence `(a^s, b^(n-s))`.
    pub fn expand(self) -> DegreeSequence {
        let mut entries = vec![self.a; self.s as usize];
        entries.resize(self.n as usize, self.b);
        DegreeSequence::from_descending(entries).expect("a > b >= 1 keeps the order valid")
    }

    fn widened(self) -> (i64, i64, i64, i64) {
        (i64::from(self.a), i64::from(self.b), i64::from(self.n), i64::from(self.s))
    }
}

/// Graphicality of the one-valued sequence `(a^n)`: graphic exactly when
/// `a*n` is even and `a < n`. Verdict reasons mirror what the full
/// prefix-sum test reports on the expanded sequence.
pub fn uniform_graphic(a: u32, n: u32) -> Verdict {
    if a < 1 || n < 1 {
        return Verdict::OutOfDomain;
    }
    if (i64::from(a) * i64::from(n)) % 2 == 1 {
        return Verdict::OddSum;
    }
    if a >= n {
        return Verdict::EgFail { k: 1 };
    }
    Verdict::Graphic
}
