use crate::DegreeSequence;

/// Iterator over all nonincreasing vectors of a fixed length with entries
/// in `[lo, hi]`, in ascending lexicographic order starting from all-`lo`.
///
/// The successor step increments the rightmost position that can grow
/// without breaking the ordering, then resets everything after it to `lo`,
/// so each vector is produced exactly once.
struct BoundedNonincreasing {
    lo: u32,
    hi: u32,
    state: Option<Vec<u32>>,
}

impl BoundedNonincreasing {
    fn new(len: usize, lo: u32, hi: u32) -> Self {
        let state = if lo >= 1 && lo <= hi { Some(vec![lo; len]) } else { None };
        Self { lo, hi, state }
    }
}

impl Iterator for BoundedNonincreasing {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let current = self.state.take()?;
        let mut next = current.clone();
        let mut advanced = false;
        for i in (0..next.len()).rev() {
            let ceiling = if i == 0 { self.hi } else { self.hi.min(next[i - 1]) };
            if next[i] < ceiling {
                next[i] += 1;
                for slot in next.iter_mut().skip(i + 1) {
                    *slot = self.lo;
                }
                advanced = true;
                break;
            }
        }
        if advanced {
            self.state = Some(next);
        }
        Some(current)
    }
}

/// Yields every nonincreasing sequence of length `n` with entries in
/// `[1, max_entry]`, each exactly once, in ascending lexicographic order.
pub fn enumerate_decreasing_sequences(n: usize, max_entry: u32) -> impl Iterator<Item = DegreeSequence> {
    let inner = if n == 0 {
        BoundedNonincreasing::new(0, 2, 1) // empty
    } else {
        BoundedNonincreasing::new(n, 1, max_entry)
    };
    inner.map(|v| DegreeSequence::from_descending(v).expect("enumerator yields valid sequences"))
}

/// Like [`enumerate_decreasing_sequences`] but restricted to a fixed first
/// entry. Splitting a run by first entry gives disjoint shards whose union
/// is the full enumeration.
pub fn enumerate_with_first_entry(n: usize, first: u32) -> impl Iterator<Item = DegreeSequence> {
    let inner = if n == 0 || first < 1 {
        BoundedNonincreasing::new(0, 2, 1) // empty
    } else {
        BoundedNonincreasing::new(n - 1, 1, first)
    };
    inner.map(move |tail| {
        let mut v = Vec::with_capacity(tail.len() + 1);
        v.push(first);
        v.extend_from_slice(&tail);
        DegreeSequence::from_descending(v).expect("enumerator yields valid sequences")
    })
}

/// Yields every nonincreasing sequence of length `n` whose first entry is
/// `max` and last entry is `min`; interior entries range over `[min, max]`.
/// Empty when no such sequence exists (`min > max`, or `n = 1` with
/// `min != max`).
pub fn enumerate_with_extremes(n: usize, max: u32, min: u32) -> Box<dyn Iterator<Item = DegreeSequence> + Send> {
    if n == 0 || min < 1 || min > max {
        return Box::new(std::iter::empty());
    }
    if n == 1 {
        let single = if min == max {
            Some(DegreeSequence::from_descending(vec![max]).expect("single entry"))
        } else {
            None
        };
        return Box::new(single.into_iter());
    }
    let interior = BoundedNonincreasing::new(n - 2, min, max);
    Box::new(interior.map(move |mid| {
        let mut v = Vec::with_capacity(mid.len() + 2);
        v.push(max);
        v.extend_from_slice(&mid);
        v.push(min);
        DegreeSequence::from_descending(v).expect("enumerator yields valid sequences")
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn collect_entries(it: impl Iterator<Item = DegreeSequence>) -> Vec<Vec<u32>> {
        it.map(|s| s.entries().to_vec()).collect()
    }

    #[test]
    fn tiny_enumerations() {
        assert_eq!(
            collect_entries(enumerate_decreasing_sequences(2, 2)),
            vec![vec![1, 1], vec![2, 1], vec![2, 2]]
        );
        assert_eq!(enumerate_decreasing_sequences(3, 2).count(), 4);
        assert_eq!(enumerate_decreasing_sequences(1, 5).count(), 5);
    }

    #[test]
    fn counts_match_multiset_formula() {
        // Number of nonincreasing length-n vectors over [1, m] is C(m+n-1, n).
        assert_eq!(enumerate_decreasing_sequences(4, 3).count(), 15);
        assert_eq!(enumerate_decreasing_sequences(5, 4).count(), 56);
    }

    #[test]
    fn unique_and_ordered() {
        let all = collect_entries(enumerate_decreasing_sequences(4, 4));
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(all.len(), sorted.len());
        assert_eq!(all, sorted);
    }

    #[test]
    fn first_entry_shards_partition_the_space() {
        let whole = collect_entries(enumerate_decreasing_sequences(4, 4));
        let mut sharded: Vec<Vec<u32>> = Vec::new();
        for first in 1..=4 {
            sharded.extend(collect_entries(enumerate_with_first_entry(4, first)));
        }
        sharded.sort();
        assert_eq!(whole, sharded);
    }

    #[test]
    fn extremes_fix_first_and_last() {
        let all = collect_entries(enumerate_with_extremes(6, 4, 2));
        assert_eq!(all.len(), 15);
        for v in &all {
            assert_eq!(v[0], 4);
            assert_eq!(v[5], 2);
        }
        assert_eq!(collect_entries(enumerate_with_extremes(2, 3, 1)), vec![vec![3, 1]]);
        assert_eq!(enumerate_with_extremes(1, 2, 2).count(), 1);
        assert_eq!(enumerate_with_extremes(1, 2, 1).count(), 0);
        assert_eq!(enumerate_with_extremes(3, 1, 2).count(), 0);
    }
}
