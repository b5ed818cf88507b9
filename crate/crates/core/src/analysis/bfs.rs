use std::collections::{HashMap, HashSet};

use crate::circuit::MpmctGate;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Library {
    /// Positive controls only: `n * 2^(n-1)` gates.
    Mct,
    /// Mixed polarity: `n * 3^(n-1)` gates.
    Mpmct,
}

/// Every single-gate circuit in `library` on `n` lines.
pub fn one_gate_library(n: usize, library: Library) -> Vec<MpmctGate> {
    let mut gates = Vec::new();
    for target in 1..=n {
        let others: Vec<usize> = (1..=n).filter(|&l| l != target).collect();
        let choices: u32 = match library {
            Library::Mct => 2,
            Library::Mpmct => 3,
        };
        for mut code in 0..choices.pow(others.len() as u32) {
            let (mut pos, mut neg) = (Vec::new(), Vec::new());
            for &l in &others {
                match code % choices {
                    1 => pos.push(l),
                    2 => neg.push(l),
                    _ => {}
                }
                code /= choices;
            }
            gates.push(MpmctGate::new(target, pos, neg).expect("distinct lines"));
        }
    }
    gates
}

fn gate_map(n: usize, gate: &MpmctGate) -> Vec<u32> {
    (0..1u32 << n).map(|s| gate.apply(n, s)).collect()
}

/// Number of distinct permutations realized by a single MCT gate.
pub fn count_one_gate_functions(n: usize) -> Result<usize> {
    if !(1..=6).contains(&n) {
        return Err(Error::UnsupportedN { n, reason: "one-gate enumeration needs 1 <= n <= 6" });
    }
    let distinct: HashSet<Vec<u32>> =
        one_gate_library(n, Library::Mct).iter().map(|g| gate_map(n, g)).collect();
    Ok(distinct.len())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfsResult {
    /// Largest minimal gate count over all reversible functions.
    pub worst_case: usize,
    /// `histogram[k]` functions need exactly `k` gates.
    pub histogram: Vec<u64>,
}

/// Exact minimal gate counts for every reversible function on `n <= 3`
/// lines, by breadth-first search from the identity.
pub fn bfs_optimal_sizes(n: usize, library: Library) -> Result<BfsResult> {
    if !(1..=3).contains(&n) {
        return Err(Error::UnsupportedN { n, reason: "BFS over (2^n)! states needs 1 <= n <= 3" });
    }
    let generators: Vec<Vec<u32>> =
        one_gate_library(n, library).iter().map(|g| gate_map(n, g)).collect();

    let identity: Vec<u32> = (0..1u32 << n).collect();
    let mut seen: HashMap<Vec<u32>, usize> = HashMap::new();
    seen.insert(identity.clone(), 0);
    let mut frontier = vec![identity];
    let mut histogram = vec![1u64];
    while !frontier.is_empty() {
        let depth = histogram.len();
        let mut next = Vec::new();
        for perm in &frontier {
            for gen in &generators {
                // Appending a gate: the gate acts after the circuit so far.
                let child: Vec<u32> = perm.iter().map(|&s| gen[s as usize]).collect();
                if !seen.contains_key(&child) {
                    seen.insert(child.clone(), depth);
                    next.push(child);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        histogram.push(next.len() as u64);
        frontier = next;
    }
    Ok(BfsResult { worst_case: histogram.len() - 1, histogram })
}
