use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::t2::t2_prefix;
use crate::error::{invalid, Error, Result};

/// The first `count` nodes of the pair tree rooted at `(-2, 1)`, read row
/// by row. The left child of `(x, y)` is `(x + y, -2y)` and the right child
/// is `(-2x, x + y)`; node `i` equals `(t_2(i+1), t_2(i))`.
pub fn pair_tree_bfs(count: usize) -> Vec<(i64, i64)> {
    let mut out = Vec::with_capacity(count);
    let mut queue = VecDeque::from([(-2i64, 1i64)]);
    while out.len() < count {
        let (x, y) = queue.pop_front().expect("tree is infinite");
        out.push((x, y));
        queue.push_back((x + y, -2 * y));
        queue.push_back((-2 * x, x + y));
    }
    out
}

/// Search limits for [`t2_solve`].
#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    /// Tree nodes to expand before switching to the index sweep.
    pub node_budget: u64,
    /// Largest index the sweep may reach.
    pub sweep_limit: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            node_budget: 1 << 20,
            sweep_limit: 1 << 24,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct T2Solution {
    pub target: i64,
    /// Least `n` with `t_2(n) = target`.
    pub n: u64,
    /// `"tree"` or `"sweep"`.
    pub found_by: String,
    /// A second solution from the shift family `8q + r -> 16q + r'`
    /// (residues 0, 2, 4, 6 mod 8 with `q >= 1`), when one applies.
    pub shifted: Option<u64>,
}

/// Image of `n` under the `m = 4` member of the shift family, if defined.
fn shifted_instance(n: u64) -> Option<u64> {
    let q = n / 8;
    if q == 0 {
        return None;
    }
    match n % 8 {
        4 | 6 => Some(16 * q + n % 8),
        0 => Some(16 * q + 8),
        2 => Some(16 * q + 10),
        _ => None,
    }
}

/// Least `n` with `t_2(n) = target`, by breadth-first walk of the pair
/// tree; if the node budget runs out, the index sweep continues from
/// where the walk stopped.
pub fn t2_solve(target: i64, opts: SolveOptions) -> Result<T2Solution> {
    if target == 0 {
        return Err(invalid("t_2 never vanishes; target 0 is unattainable"));
    }
    let mut queue = VecDeque::from([(-2i64, 1i64)]);
    let mut seen: HashSet<(i64, i64)> = HashSet::new();
    let mut found: Option<(u64, &str)> = None;
    let mut index = 0u64;
    while index < opts.node_budget {
        let (x, y) = queue.pop_front().expect("tree is infinite");
        if !seen.insert((x, y)) {
            return Err(Error::Invariant(format!("pair ({x}, {y}) repeated")));
        }
        if y == target {
            found = Some((index, "tree"));
            break;
        }
        if x == target {
            found = Some((index + 1, "tree"));
            break;
        }
        queue.push_back((x + y, -2 * y));
        queue.push_back((-2 * x, x + y));
        index += 1;
    }
    let (n, found_by) = match found {
        Some(hit) => hit,
        None => {
            // Tree nodes 0..index cover t_2(0..=index); resume the sweep there.
            let t2 = t2_prefix(opts.sweep_limit);
            let start = if index == 0 { 0 } else { index + 1 };
            let n = (start..=opts.sweep_limit)
                .find(|&n| t2[n as usize] == target)
                .ok_or_else(|| {
                    invalid(format!(
                        "no solution for {target} below {}",
                        opts.sweep_limit
                    ))
                })?;
            (n, "sweep")
        }
    };
    let shifted = shifted_instance(n).filter(|&s| {
        let t2 = t2_prefix(s);
        t2[s as usize] == target
    });
    Ok(T2Solution {
        target,
        n,
        found_by: found_by.to_string(),
        shifted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_reads_consecutive_pairs() {
        let t2 = t2_prefix(1 << 12);
        for (i, &(x, y)) in pair_tree_bfs(1 << 12).iter().enumerate() {
            assert_eq!((x, y), (t2[i + 1], t2[i]), "node {i}");
        }
    }

    #[test]
    fn small_targets() {
        let opts = SolveOptions::default();
        assert_eq!(t2_solve(1, opts).unwrap().n, 0);
        assert_eq!(t2_solve(-2, opts).unwrap().n, 1);
        assert_eq!(t2_solve(2, opts).unwrap().n, 5);
        assert!(t2_solve(0, opts).is_err());
    }

    #[test]
    fn sweep_fallback_agrees() {
        let tight = SolveOptions {
            node_budget: 3,
            sweep_limit: 1 << 16,
        };
        for target in [-7, 9, 12, -33] {
            let a = t2_solve(target, tight).unwrap();
            let b = t2_solve(target, SolveOptions::default()).unwrap();
            assert_eq!(a.n, b.n);
            assert_eq!(a.found_by, "sweep");
        }
    }
}
