use std::collections::BTreeSet;

use crate::Error;

/// Largest vertex count the exhaustive graph enumeration accepts;
/// n = 7 already means 2^21 labeled graphs.
pub const MAX_BRUTE_N: usize = 7;

/// Ground-truth oracle: enumerates every labeled simple graph on `n`
/// vertices and returns the set of their degree multisets in
/// nonincreasing order. Isolated vertices contribute zeros, so members
/// may contain entries outside this crate's positive-sequence domain;
/// callers filter as needed.
pub fn brute_force_realizable(n: usize) -> Result<BTreeSet<Vec<u32>>, Error> {
    if n < 1 {
        return Err(Error::OutOfDomain { detail: "need n >= 1".to_string() });
    }
    if n > MAX_BRUTE_N {
        return Err(Error::LimitExceeded { n, max: MAX_BRUTE_N });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1u32 << pairs.len()) {
        let mut deg = vec![0u32; n];
        for (bit, &(u, v)) in pairs.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        deg.sort_unstable_by(|x, y| y.cmp(x));
        out.insert(deg);
    }
    Ok(out)
}
