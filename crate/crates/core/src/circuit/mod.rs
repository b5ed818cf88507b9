//! Reversible gates, cascades and their simulation.
//!
//! Gates are applied left to right, so the permutation of a circuit is the
//! composition with the last gate outermost.

mod mapping;
mod rc_format;

pub use mapping::{control_esop, map_to_toffoli, stg_to_toffoli, MappingMethod};
pub use rc_format::{parse_circuit, serialize_circuit};

use rayon::prelude::*;

use crate::boolfn::{check_var_count, var_shift, ControlFunction, Permutation};
use crate::error::{Error, Result};

fn invalid(reason: impl Into<String>) -> Error {
    Error::InvalidGate { reason: reason.into() }
}

fn check_lines(target: usize, controls: &[usize]) -> Result<()> {
    if target == 0 {
        return Err(invalid("line indices start at 1"));
    }
    if controls.contains(&target) {
        return Err(invalid(format!("target x{target} is also a control")));
    }
    Ok(())
}

/// `T_g(C, t)`: flips `target` iff `g` holds on the control lines.
///
/// Variable `x_j` of `g` is bound to the `j`-th smallest control line.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SingleTargetGate {
    target: usize,
    controls: Vec<usize>,
    g: ControlFunction,
}

impl SingleTargetGate {
    pub fn new(target: usize, controls: Vec<usize>, g: ControlFunction) -> Result<Self> {
        if !controls.windows(2).all(|w| w[0] < w[1]) {
            return Err(invalid("controls must be strictly ascending"));
        }
        if controls.first() == Some(&0) {
            return Err(invalid("line indices start at 1"));
        }
        check_lines(target, &controls)?;
        if g.arity() != controls.len() {
            return Err(Error::ArityMismatch { expected: controls.len(), actual: g.arity() });
        }
        Ok(Self { target, controls, g })
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn controls(&self) -> &[usize] {
        &self.controls
    }

    pub fn control_function(&self) -> &ControlFunction {
        &self.g
    }

    /// Control pattern of `state`: the control bits with the first control
    /// as most significant.
    #[inline]
    pub fn control_pattern(&self, lines: usize, state: u32) -> u32 {
        self.controls
            .iter()
            .fold(0u32, |acc, &c| (acc << 1) | ((state >> var_shift(lines, c)) & 1))
    }

    #[inline]
    pub fn apply(&self, lines: usize, state: u32) -> u32 {
        let fire = self.g.eval(self.control_pattern(lines, state));
        state ^ ((fire as u32) << var_shift(lines, self.target))
    }
}

/// Mixed-polarity multiple-control Toffoli gate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MpmctGate {
    target: usize,
    pos: Vec<usize>,
    neg: Vec<usize>,
}

impl MpmctGate {
    pub fn new(target: usize, mut pos: Vec<usize>, mut neg: Vec<usize>) -> Result<Self> {
        pos.sort_unstable();
        neg.sort_unstable();
        let mut all: Vec<usize> = pos.iter().chain(&neg).copied().collect();
        all.sort_unstable();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return Err(invalid("a line is used as more than one control"));
        }
        if all.first() == Some(&0) {
            return Err(invalid("line indices start at 1"));
        }
        check_lines(target, &all)?;
        Ok(Self { target, pos, neg })
    }

    /// Positive-control-only Toffoli gate.
    pub fn mct(target: usize, controls: Vec<usize>) -> Result<Self> {
        Self::new(target, controls, Vec::new())
    }

    pub fn not(target: usize) -> Result<Self> {
        Self::new(target, Vec::new(), Vec::new())
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn positive_controls(&self) -> &[usize] {
        &self.pos
    }

    pub fn negative_controls(&self) -> &[usize] {
        &self.neg
    }

    pub fn is_mct(&self) -> bool {
        self.neg.is_empty()
    }

    #[inline]
    pub fn apply(&self, lines: usize, state: u32) -> u32 {
        let bit = |l: usize| (state >> var_shift(lines, l)) & 1 == 1;
        let fire = self.pos.iter().all(|&l| bit(l)) && self.neg.iter().all(|&l| !bit(l));
        state ^ ((fire as u32) << var_shift(lines, self.target))
    }

    /// The same gate as a single-target gate with a one-cube control function.
    pub fn to_stg(&self) -> SingleTargetGate {
        let mut controls: Vec<usize> = self.pos.iter().chain(&self.neg).copied().collect();
        controls.sort_unstable();
        let k = controls.len();
        let want: u32 = controls
            .iter()
            .fold(0, |acc, c| (acc << 1) | self.pos.contains(c) as u32);
        let g = ControlFunction::from_fn(k, |p| p == want).expect("controls within limits");
        SingleTargetGate { target: self.target, controls, g }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Gate {
    Stg(SingleTargetGate),
    Mpmct(MpmctGate),
}

impl Gate {
    pub fn target(&self) -> usize {
        match self {
            Gate::Stg(g) => g.target,
            Gate::Mpmct(g) => g.target,
        }
    }

    fn max_line(&self) -> usize {
        match self {
            Gate::Stg(g) => g.controls.last().copied().unwrap_or(0).max(g.target),
            Gate::Mpmct(g) => {
                g.pos.iter().chain(&g.neg).copied().max().unwrap_or(0).max(g.target)
            }
        }
    }

    #[inline]
    pub fn apply(&self, lines: usize, state: u32) -> u32 {
        match self {
            Gate::Stg(g) => g.apply(lines, state),
            Gate::Mpmct(g) => g.apply(lines, state),
        }
    }
}

impl From<SingleTargetGate> for Gate {
    fn from(g: SingleTargetGate) -> Self {
        Gate::Stg(g)
    }
}

impl From<MpmctGate> for Gate {
    fn from(g: MpmctGate) -> Self {
        Gate::Mpmct(g)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Circuit {
    lines: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(lines: usize, gates: Vec<Gate>) -> Result<Self> {
        check_var_count(lines)?;
        for gate in &gates {
            let max = gate.max_line();
            if max > lines {
                return Err(Error::LineIndexOutOfRange { line: 0, index: max, lines });
            }
        }
        Ok(Self { lines, gates })
    }

    pub fn empty(lines: usize) -> Self {
        Self { lines, gates: Vec::new() }
    }

    pub fn lines(&self) -> usize {
        self.lines
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn gate_count(&self) -> usize {
        self.gates.len()
    }

    pub fn push(&mut self, gate: impl Into<Gate>) -> Result<()> {
        let gate = gate.into();
        let max = gate.max_line();
        if max > self.lines {
            return Err(Error::LineIndexOutOfRange { line: 0, index: max, lines: self.lines });
        }
        self.gates.push(gate);
        Ok(())
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &Circuit) -> Result<Circuit> {
        if self.lines != other.lines {
            return Err(Error::SizeMismatch { left: self.lines, right: other.lines });
        }
        let mut gates = self.gates.clone();
        gates.extend(other.gates.iter().cloned());
        Ok(Circuit { lines: self.lines, gates })
    }

    pub fn simulate(&self, input: u32) -> u32 {
        self.gates.iter().fold(input, |s, g| g.apply(self.lines, s))
    }

    pub fn perm(&self) -> Permutation {
        let size = 1u32 << self.lines;
        let map: Vec<u32> = if size >= 1 << 12 {
            (0..size).into_par_iter().map(|s| self.simulate(s)).collect()
        } else {
            (0..size).map(|s| self.simulate(s)).collect()
        };
        Permutation::from_map_unchecked(self.lines, map)
    }

    /// Every gate is an involution, so reversing the cascade inverts it.
    pub fn invert(&self) -> Circuit {
        Circuit { lines: self.lines, gates: self.gates.iter().rev().cloned().collect() }
    }

    /// Drops single-target gates whose control function is constant 0.
    pub fn without_identity_gates(&self) -> Circuit {
        let gates = self
            .gates
            .iter()
            .filter(|g| !matches!(g, Gate::Stg(s) if s.g.is_zero()))
            .cloned()
            .collect();
        Circuit { lines: self.lines, gates }
    }
}

pub fn apply_gate(gate: &Gate, lines: usize, state: u32) -> u32 {
    gate.apply(lines, state)
}

pub fn simulate(c: &Circuit, input: u32) -> u32 {
    c.simulate(input)
}

pub fn circuit_perm(c: &Circuit) -> Permutation {
    c.perm()
}

pub fn invert_circuit(c: &Circuit) -> Circuit {
    c.invert()
}
