use std::collections::BTreeMap;

use crate::{DegreeSequence, Graph, Verdict};

/// Evaluates, for each k in 1..=n, whether the prefix-sum inequality
/// `sum(d_1..d_k) <= k(k-1) + sum(min(k, d_i) for i > k)` is violated,
/// returning the violating k values in increasing order.
///
/// Runs in O(n) total: with `c_k` = number of entries >= k and prefix sums
/// `S`, the tail collapses to `k*max(c_k - k, 0) + S_n - S_max(c_k, k)`.
fn eg_violations(entries: &[u32], stop_at_first: bool) -> Vec<usize> {
    let n = entries.len();
    let mut prefix = vec![0i64; n + 1];
    for (i, &d) in entries.iter().enumerate() {
        prefix[i + 1] = prefix[i] + i64::from(d);
    }
    // count[v] = number of entries with min(d_i, n) == v; c_k is its suffix sum.
    let mut count = vec![0usize; n + 1];
    for &d in entries {
        count[(d as usize).min(n)] += 1;
    }
    let mut out = Vec::new();
    let mut c_k = n; // c_1 starts at n minus the entries below 1; all entries are >= 1
    for k in 1..=n {
        if k >= 2 {
            c_k -= count[k - 1];
        }
        let lhs = prefix[k];
        let kk = k as i64;
        let cut = c_k.max(k);
        let rhs = kk * (kk - 1) + kk * (c_k as i64 - kk).max(0) + (prefix[n] - prefix[cut]);
        if lhs > rhs {
            out.push(k);
            if stop_at_first {
                break;
            }
        }
    }
    out
}

/// Exact graphicality test: even sum plus the prefix-sum inequality at
/// every k. On failure the verdict names the smallest failing k, with an
/// odd sum reported before any inequality is examined.
pub fn erdos_gallai(seq: &DegreeSequence) -> Verdict {
    if !seq.has_even_sum() {
        return Verdict::OddSum;
    }
    match eg_violations(seq.entries(), true).first() {
        Some(&k) => Verdict::EgFail { k },
        None => Verdict::Graphic,
    }
}

/// All indices k where the prefix-sum inequality fails, ignoring sum
/// parity. Empty exactly when the inequality holds everywhere.
pub fn eg_failing_indices(seq: &DegreeSequence) -> Vec<usize> {
    eg_violations(seq.entries(), false)
}

/// Strong indices (k with d_k >= k) and the r_k values attached to them.
///
/// Because the sequence is nonincreasing the strong indices form the
/// prefix 1..=k_m. `r_k = sum(d_i + i * m_(k-i) for i in 1..=k)` where
/// `m_j` counts entries equal to j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongIndexProfile {
    k_m: usize,
    multiplicities: BTreeMap<u32, usize>,
    r: Vec<i64>,
}

impl StrongIndexProfile {
    pub fn new(seq: &DegreeSequence) -> Self {
        let entries = seq.entries();
        let n = entries.len();
        let mut k_m = 0;
        while k_m < n && entries[k_m] as usize > k_m {
            k_m += 1;
        }
        let mut multiplicities: BTreeMap<u32, usize> = BTreeMap::new();
        for &d in entries {
            *multiplicities.entry(d).or_insert(0) += 1;
        }
        // r_k = S_k + k*N - M with N = sum(m_j, j <= k-1), M = sum(j*m_j, j <= k-1),
        // both grown one value per step so the whole profile costs O(n).
        let mut r = Vec::with_capacity(k_m);
        let mut s_k = 0i64;
        let mut count_below = 0i64;
        let mut weighted_below = 0i64;
        for k in 1..=k_m {
            s_k += i64::from(entries[k - 1]);
            let j = (k - 1) as u32;
            let m_j = *multiplicities.get(&j).unwrap_or(&0) as i64;
            count_below += m_j;
            weighted_below += i64::from(j) * m_j;
            r.push(s_k + (k as i64) * count_below - weighted_below);
        }
        Self { k_m, multiplicities, r }
    }

    /// Largest k with d_k >= k. At least 1 for any nonempty positive
    /// sequence; equal to n when every entry is >= n.
    pub fn k_m(&self) -> usize {
        self.k_m
    }

    pub fn is_strong(&self, k: usize) -> bool {
        1 <= k && k <= self.k_m
    }

    /// Number of entries equal to `value`.
    pub fn multiplicity(&self, value: u32) -> usize {
        *self.multiplicities.get(&value).unwrap_or(&0)
    }

    pub fn multiplicities(&self) -> &BTreeMap<u32, usize> {
        &self.multiplicities
    }

    /// r_k for a strong index k (1-based); None outside 1..=k_m.
    pub fn r(&self, k: usize) -> Option<i64> {
        if self.is_strong(k) {
            Some(self.r[k - 1])
        } else {
            None
        }
    }

    /// r_1..r_k_m in index order.
    pub fn r_values(&self) -> &[i64] {
        &self.r
    }
}

/// Graphicality test driven by strong indices only: even sum plus
/// `r_k <= k(n-1)` for every k in 1..=k_m. Agrees with [`erdos_gallai`]
/// on every input; the two make independent oracles for each other.
pub fn zz_rk_criterion(seq: &DegreeSequence) -> Verdict {
    if !seq.has_even_sum() {
        return Verdict::OddSum;
    }
    let n = seq.len() as i64;
    let profile = StrongIndexProfile::new(seq);
    for k in 1..=profile.k_m() {
        if profile.r[k - 1] > (k as i64) * (n - 1) {
            return Verdict::RkFail { k };
        }
    }
    Verdict::Graphic
}

/// Constructive realizer. Repeatedly connects the vertex with the largest
/// remaining residual degree (ties broken by lowest index) to the
/// next-largest residuals. Returns None exactly when the sequence is
/// nongraphic; on success the graph's degree multiset equals the input.
pub fn havel_hakimi_realize(seq: &DegreeSequence) -> Option<Graph> {
    let n = seq.len();
    // (residual, index); sorted each round by residual desc then index asc.
    let mut pool: Vec<(u32, u32)> = seq
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &d)| (d, (i + 1) as u32))
        .collect();
    let mut edges: Vec<(u32, u32)> = Vec::with_capacity(seq.sum() as usize / 2);
    loop {
        pool.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));
        let (need, u) = pool[0];
        if need == 0 {
            break;
        }
        let need = need as usize;
        if need >= pool.len() {
            return None;
        }
        for target in &mut pool[1..=need] {
            if target.0 == 0 {
                return None;
            }
            target.0 -= 1;
            edges.push((u, target.1));
        }
        pool[0].0 = 0;
    }
    let graph = Graph::from_edges(n, edges).expect("realizer emits only simple edges");
    debug_assert_eq!(graph.degree_multiset(), seq.entries());
    Some(graph)
}
