//! Number partitions and their entropies.

use crate::dist::entropy;
use crate::error::{Error, Result};

/// Default largest `k` whose partitions are enumerated.
pub const PARTITION_CAP: u64 = 40;

/// All partitions of `k` with parts in nonincreasing order, listed in
/// reverse lexicographic order starting from `[k]`.
pub fn partitions(k: u64, cap: u64) -> Result<Vec<Vec<u64>>> {
    if k > cap {
        return Err(Error::PartitionCap { k, cap });
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(k, k, &mut cur, &mut out);
    Ok(out)
}

fn fill(rest: u64, max_part: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if rest == 0 {
        out.push(cur.clone());
        return;
    }
    for part in (1..=rest.min(max_part)).rev() {
        cur.push(part);
        fill(rest - part, part, cur, out);
        cur.pop();
    }
}

/// `H(α_1/k, ..., α_t/k)` in bits with `k = Σ α_i`.
pub fn partition_entropy(alpha: &[u64]) -> f64 {
    let k: u64 = alpha.iter().sum();
    if k == 0 {
        return 0.0;
    }
    entropy(&alpha.iter().map(|&x| x as f64 / k as f64).collect::<Vec<_>>())
}
