//! Half-V circuits and the embedding of `B_{k-1,n}` into reversible
//! functions on `k` lines.
//!
//! A half-V circuit on `k` lines has `n <= k` single-target gates; gate `i`
//! targets line `i` and is controlled by every other line. Distinct control
//! function tuples give distinct permutations, so the circuits are a
//! canonical form.
//!
//! The embedding is representational: `embed_encode` stores output
//! component `f_i` as the control function of gate `i`. The realized
//! permutation `F` satisfies `y_i = x_i ⊕ f_i(y_1..y_{i-1}, x_{i+1}..x_k)`,
//! so `f` is recovered with [`halfv_recognize`] followed by [`embed_decode`],
//! not by reading `f(x)` off `F` directly. Every function, including the
//! constants, needs only `k` lines.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::boolfn::{remove_bit, var_shift, ControlFunction, Permutation, TruthTable};
use crate::circuit::{parse_circuit, serialize_circuit, Circuit, Gate, SingleTargetGate};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HalfVCircuit {
    k: usize,
    gs: Vec<ControlFunction>,
}

impl HalfVCircuit {
    pub fn new(k: usize, gs: Vec<ControlFunction>) -> Result<Self> {
        if k == 0 || gs.is_empty() || gs.len() > k {
            return Err(Error::UnsupportedSize { n: gs.len(), k });
        }
        if let Some(g) = gs.iter().find(|g| g.arity() != k - 1) {
            return Err(Error::ArityMismatch { expected: k - 1, actual: g.arity() });
        }
        Ok(Self { k, gs })
    }

    /// Line count.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Gate count.
    pub fn n(&self) -> usize {
        self.gs.len()
    }

    pub fn control_functions(&self) -> &[ControlFunction] {
        &self.gs
    }
}

fn other_lines(k: usize, target: usize) -> Vec<usize> {
    (1..=k).filter(|&l| l != target).collect()
}

/// Literal expansion: all `n` gates are kept, including constant-0 ones.
pub fn halfv_to_circuit(h: &HalfVCircuit) -> Circuit {
    let gates = h
        .gs
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let target = i + 1;
            Gate::Stg(
                SingleTargetGate::new(target, other_lines(h.k, target), g.clone())
                    .expect("half-V gate shape is valid"),
            )
        })
        .collect();
    Circuit::new(h.k, gates).expect("half-V lines are in range")
}

/// `(2^(2^(k-1)))^n`, as a power of two exponent: `n * 2^(k-1)`.
pub fn halfv_count_log2(n: usize, k: usize) -> u64 {
    (n as u64) << (k - 1)
}

/// Largest tuple space `halfv_enumerate` walks, as a power of two.
pub const ENUMERATION_LIMIT_LOG2: u64 = 20;

/// Number of distinct permutations realized by half-V circuits with `n`
/// gates on `k` lines, by enumerating every control-function tuple.
pub fn halfv_enumerate(n: usize, k: usize) -> Result<u64> {
    if k == 0 || n == 0 || n > k {
        return Err(Error::UnsupportedSize { n, k });
    }
    let bits_per_gate = 1u64 << (k - 1);
    let total_log2 = halfv_count_log2(n, k);
    if total_log2 > ENUMERATION_LIMIT_LOG2 {
        return Err(Error::UnsupportedSize { n, k });
    }
    let arity = k - 1;
    let gate_mask = if bits_per_gate >= 64 { u64::MAX } else { (1u64 << bits_per_gate) - 1 };
    let distinct = (0..1u64 << total_log2)
        .into_par_iter()
        .fold(HashSet::new, |mut set, code| {
            let gs = (0..n)
                .map(|i| {
                    let chunk = (code >> (i as u64 * bits_per_gate)) & gate_mask;
                    ControlFunction::from_code(arity, chunk).expect("arity within limits")
                })
                .collect();
            let h = HalfVCircuit { k, gs };
            set.insert(halfv_to_circuit(&h).perm().into_map());
            set
        })
        .reduce(HashSet::new, |mut a, b| {
            if a.len() < b.len() {
                return b.into_iter().chain(a).collect();
            }
            a.extend(b);
            a
        });
    Ok(distinct.len() as u64)
}

/// Extracts the half-V circuit with `n` gates realizing `p`, if one exists.
///
/// Before gate `i` fires, lines `1..i` already hold their outputs and lines
/// `i..=k` still hold inputs, so `y_i ⊕ x_i` must be a function of that
/// pre-gate state with line `i` removed. Lines past `n` must pass through.
pub fn halfv_recognize(p: &Permutation, n: usize) -> Result<HalfVCircuit> {
    let k = p.n();
    if k == 0 || n == 0 || n > k {
        return Err(Error::UnsupportedSize { n, k });
    }
    let size = 1u32 << k;
    let mut gs = Vec::with_capacity(n);
    for i in 1..=n {
        let shift = var_shift(k, i);
        // Lines 1..i-1 occupy the top i-1 bits.
        let done_mask = ((1u32 << (i - 1)) - 1) << (k - i + 1);
        let mut values: Vec<Option<(bool, u32)>> = vec![None; 1 << (k - 1)];
        for x in 0..size {
            let y = p.apply(x);
            let before = (y & done_mask) | (x & !done_mask);
            let pattern = remove_bit(before, shift) as usize;
            let flip = ((x ^ y) >> shift) & 1 == 1;
            match values[pattern] {
                None => values[pattern] = Some((flip, x)),
                Some((seen, witness)) if seen != flip => {
                    return Err(Error::NotRealizable { gate: i, witness: (witness, x) });
                }
                Some(_) => {}
            }
        }
        let bits = values.iter().map(|v| v.map(|(b, _)| b).unwrap_or(false)).collect();
        gs.push(ControlFunction::from_bits(k - 1, bits)?);
    }
    for j in n + 1..=k {
        let shift = var_shift(k, j);
        if let Some(x) = (0..size).find(|&x| ((x ^ p.apply(x)) >> shift) & 1 == 1) {
            return Err(Error::NotRealizable { gate: j, witness: (x, x) });
        }
    }
    Ok(HalfVCircuit { k, gs })
}

/// Stores component `f_i` as the control function of gate `i`; the `j`-th
/// control line in ascending order (skipping line `i`) is variable `x_j`.
pub fn embed_encode(f: &TruthTable, k: usize) -> Result<HalfVCircuit> {
    if k == 0 || f.n_inputs() != k - 1 {
        return Err(Error::ArityMismatch { expected: k.saturating_sub(1), actual: f.n_inputs() });
    }
    if f.n_outputs() > k {
        return Err(Error::ArityMismatch { expected: k, actual: f.n_outputs() });
    }
    let gs = (1..=f.n_outputs())
        .map(|i| ControlFunction::from_truth_table(&f.component(i)?))
        .collect::<Result<Vec<_>>>()?;
    HalfVCircuit::new(k, gs)
}

/// Exact inverse of [`embed_encode`].
pub fn embed_decode(h: &HalfVCircuit) -> TruthTable {
    let components: Vec<TruthTable> = h.gs.iter().map(ControlFunction::to_truth_table).collect();
    TruthTable::from_components(&components).expect("half-V has at least one gate")
}

/// `.rc` text with a `# halfv n=<n> k=<k>` header comment.
pub fn serialize_halfv(h: &HalfVCircuit) -> String {
    format!("# halfv n={} k={}\n{}", h.n(), h.k, serialize_circuit(&halfv_to_circuit(h)))
}

fn parse_header(text: &str) -> Option<(usize, usize)> {
    for raw in text.lines() {
        let Some(rest) = raw.trim().strip_prefix('#') else { continue };
        let mut words = rest.split_whitespace();
        if words.next() != Some("halfv") {
            continue;
        }
        let mut n = None;
        let mut k = None;
        for w in words {
            if let Some(v) = w.strip_prefix("n=") {
                n = v.parse().ok();
            } else if let Some(v) = w.strip_prefix("k=") {
                k = v.parse().ok();
            }
        }
        return n.zip(k);
    }
    None
}

/// Reads a half-V circuit from `.rc` text. Gate `i` must target line `i`;
/// its control function is taken over all other lines.
pub fn parse_halfv(text: &str) -> Result<HalfVCircuit> {
    let shape_error = |message: String| Error::Syntax { line: 1, message };
    let (n, k) =
        parse_header(text).ok_or_else(|| shape_error("missing `# halfv n=<n> k=<k>` header".into()))?;
    let c = parse_circuit(text)?;
    if c.lines() != k || c.gate_count() != n {
        return Err(shape_error(format!(
            "header says n={n} k={k}, circuit has {} gates on {} lines",
            c.gate_count(),
            c.lines()
        )));
    }
    let mut gs = Vec::with_capacity(n);
    for (i, gate) in c.gates().iter().enumerate() {
        let target = i + 1;
        if gate.target() != target {
            return Err(shape_error(format!("gate {target} must target line x{target}")));
        }
        let shift = var_shift(k, target);
        let g = ControlFunction::from_fn(k - 1, |pattern| {
            let state = crate::boolfn::insert_bit(pattern, shift, false);
            gate.apply(k, state) != state
        })?;
        gs.push(g);
    }
    HalfVCircuit::new(k, gs)
}
