use std::fmt;

use serde::ser::{Serialize, SerializeMap, Serializer};

/// Outcome of a graphicality test, carrying the reason for rejection.
///
/// Serializes to a flat JSON object with alphabetically ordered keys:
/// `{"graphic": bool, "k": usize?, "reason": str}`. The failing index `k`
/// is present only for the two inequality-based reasons.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    /// The sequence is graphic: even sum and every inequality holds.
    Graphic,
    /// Rejected before any inequality was checked: the degree sum is odd.
    OddSum,
    /// The prefix-sum inequality fails; `k` is the smallest failing index.
    EgFail { k: usize },
    /// The strong-index inequality `r_k <= k(n-1)` fails; `k` is the
    /// smallest failing strong index.
    RkFail { k: usize },
    /// A two-valued sequence whose classifying quadratic is negative.
    DiscriminantNeg,
    /// The question does not apply to the given parameters.
    OutOfDomain,
}

impl Verdict {
    pub fn is_graphic(self) -> bool {
        matches!(self, Verdict::Graphic)
    }

    /// Snake-case reason tag used in JSON output.
    pub fn reason(self) -> &'static str {
        match self {
            Verdict::Graphic => "even_sum_ok",
            Verdict::OddSum => "odd_sum",
            Verdict::EgFail { .. } => "eg_fail",
            Verdict::RkFail { .. } => "rk_fail",
            Verdict::DiscriminantNeg => "discriminant_neg",
            Verdict::OutOfDomain => "out_of_domain",
        }
    }

    /// The failing index, when the reason carries one.
    pub fn failing_index(self) -> Option<usize> {
        match self {
            Verdict::EgFail { k } | Verdict::RkFail { k } => Some(k),
            _ => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Verdict::Graphic => write!(f, "graphic"),
            Verdict::OddSum => write!(f, "nongraphic: degree sum is odd"),
            Verdict::EgFail { k } => write!(f, "nongraphic: inequality fails at k={k}"),
            Verdict::RkFail { k } => write!(f, "nongraphic: inequality fails at k={k}"),
            Verdict::DiscriminantNeg => write!(f, "nongraphic: discriminant is negative"),
            Verdict::OutOfDomain => write!(f, "not applicable: parameters out of domain"),
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let extra = usize::from(self.failing_index().is_some());
        let mut map = serializer.serialize_map(Some(2 + extra))?;
        map.serialize_entry("graphic", &self.is_graphic())?;
        if let Some(k) = self.failing_index() {
            map.serialize_entry("k", &k)?;
        }
        map.serialize_entry("reason", self.reason())?;
        map.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graphic_only_for_even_sum_ok() {
        assert!(Verdict::Graphic.is_graphic());
        for v in [
            Verdict::OddSum,
            Verdict::EgFail { k: 2 },
            Verdict::RkFail { k: 2 },
            Verdict::DiscriminantNeg,
            Verdict::OutOfDomain,
        ] {
            assert!(!v.is_graphic());
        }
    }

    #[test]
    fn json_shape() {
        assert_eq!(
            serde_json::to_string(&Verdict::Graphic).unwrap(),
            r#"{"graphic":true,"reason":"even_sum_ok"}"#
        );
        assert_eq!(
            serde_json::to_string(&Verdict::EgFail { k: 2 }).unwrap(),
            r#"{"graphic":false,"k":2,"reason":"eg_fail"}"#
        );
        assert_eq!(
            serde_json::to_string(&Verdict::OddSum).unwrap(),
            r#"{"graphic":false,"reason":"odd_sum"}"#
        );
    }
}
