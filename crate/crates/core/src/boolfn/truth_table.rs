use super::{check_var_count, insert_bit, var_bit, var_shift, MAX_VARS};
use crate::error::{Error, Result};

/// A function in `B_{n,m}` stored as its full value table.
///
/// Row `r` holds the `m` output bits for input pattern `r`, with `f1` in the
/// most significant position.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    n_inputs: usize,
    n_outputs: usize,
    rows: Vec<u32>,
}

impl TruthTable {
    pub fn from_rows(n_inputs: usize, n_outputs: usize, rows: Vec<u32>) -> Result<Self> {
        check_var_count(n_inputs)?;
        if n_outputs == 0 || n_outputs > MAX_VARS {
            return Err(Error::TooManyVariables { n: n_outputs, max: MAX_VARS });
        }
        let expected = 1usize << n_inputs;
        if rows.len() != expected {
            return Err(Error::LengthMismatch { expected, actual: rows.len() });
        }
        let limit = 1u32 << n_outputs;
        if let Some((row, &value)) = rows.iter().enumerate().find(|(_, &v)| v >= limit) {
            return Err(Error::OutputOverflow { row, value, n_outputs });
        }
        Ok(Self { n_inputs, n_outputs, rows })
    }

    /// Builds a table by evaluating `f` on every input pattern.
    ///
    /// Output words are masked to `n_outputs` bits.
    pub fn from_fn(n_inputs: usize, n_outputs: usize, f: impl Fn(u32) -> u32) -> Result<Self> {
        check_var_count(n_inputs)?;
        let mask = if n_outputs >= 32 { u32::MAX } else { (1u32 << n_outputs) - 1 };
        let rows = (0..1u32 << n_inputs).map(|x| f(x) & mask).collect();
        Self::from_rows(n_inputs, n_outputs, rows)
    }

    pub fn constant(n_inputs: usize, n_outputs: usize, value: u32) -> Result<Self> {
        Self::from_fn(n_inputs, n_outputs, |_| value)
    }

    /// The identity on `n` variables.
    pub fn identity(n: usize) -> Result<Self> {
        Self::from_fn(n, n.max(1), |x| x)
    }

    /// Assembles a multiple-output table from single-output components `f1..fm`.
    pub fn from_components(components: &[TruthTable]) -> Result<Self> {
        let first = components.first().ok_or(Error::ArityMismatch { expected: 1, actual: 0 })?;
        let n_inputs = first.n_inputs;
        for c in components {
            if c.n_outputs != 1 {
                return Err(Error::ArityMismatch { expected: 1, actual: c.n_outputs });
            }
            if c.n_inputs != n_inputs {
                return Err(Error::SizeMismatch { left: n_inputs, right: c.n_inputs });
            }
        }
        let m = components.len();
        Self::from_fn(n_inputs, m, |x| {
            components
                .iter()
                .fold(0u32, |acc, c| (acc << 1) | c.rows[x as usize])
        })
    }

    pub fn n_inputs(&self) -> usize {
        self.n_inputs
    }

    pub fn n_outputs(&self) -> usize {
        self.n_outputs
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn evaluate(&self, input: u32) -> Result<u32> {
        self.rows.get(input as usize).copied().ok_or(Error::IndexOutOfRange {
            index: input as u64,
            limit: self.rows.len() as u64,
        })
    }

    /// Output component `f_i` (1-based) as a single-output table.
    pub fn component(&self, i: usize) -> Result<TruthTable> {
        if i == 0 || i > self.n_outputs {
            return Err(Error::BadVariable { var: i, n: self.n_outputs });
        }
        let shift = var_shift(self.n_outputs, i);
        let rows = self.rows.iter().map(|&w| (w >> shift) & 1).collect();
        Ok(TruthTable { n_inputs: self.n_inputs, n_outputs: 1, rows })
    }

    /// Fixes variable `x_i` to `value`, giving a table over the remaining
    /// `n - 1` variables in their original order.
    pub fn cofactor(&self, i: usize, value: bool) -> Result<TruthTable> {
        let n = self.n_inputs;
        if i == 0 || i > n {
            return Err(Error::BadVariable { var: i, n });
        }
        let shift = var_shift(n, i);
        let rows = (0..1u32 << (n - 1))
            .map(|r| self.rows[insert_bit(r, shift, value) as usize])
            .collect();
        Ok(TruthTable { n_inputs: n - 1, n_outputs: self.n_outputs, rows })
    }

    /// Value of variable `x_i` at input pattern `input`, for callers that work
    /// with tables as functions over an `n_inputs`-bit space.
    pub fn input_bit(&self, i: usize, input: u32) -> bool {
        var_bit(self.n_inputs, i, input)
    }

    /// True iff `n_inputs == n_outputs` and the rows are pairwise distinct.
    pub fn is_reversible(&self) -> bool {
        if self.n_inputs != self.n_outputs {
            return false;
        }
        let mut seen = vec![false; self.rows.len()];
        for &w in &self.rows {
            let slot = &mut seen[w as usize];
            if *slot {
                return false;
            }
            *slot = true;
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn and2() -> TruthTable {
        TruthTable::from_rows(2, 1, vec![0, 0, 0, 1]).unwrap()
    }

    #[test]
    fn from_rows_checks_shape() {
        assert!(TruthTable::from_rows(1, 1, vec![0, 1]).is_ok());
        assert_eq!(
            TruthTable::from_rows(1, 1, vec![0, 1, 0]),
            Err(Error::LengthMismatch { expected: 2, actual: 3 })
        );
        assert!(matches!(
            TruthTable::from_rows(1, 1, vec![0, 2]),
            Err(Error::OutputOverflow { row: 1, .. })
        ));
        assert!(matches!(
            TruthTable::from_rows(21, 1, vec![]),
            Err(Error::TooManyVariables { .. })
        ));
    }

    #[test]
    fn evaluate_and() {
        let f = and2();
        assert_eq!(f.evaluate(3), Ok(1));
        assert_eq!(f.evaluate(2), Ok(0));
        assert!(matches!(f.evaluate(4), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn cofactors_of_and() {
        let f = and2();
        assert_eq!(f.cofactor(1, false).unwrap().rows(), &[0, 0]);
        assert_eq!(f.cofactor(1, true).unwrap().rows(), &[0, 1]);
        assert!(matches!(f.cofactor(3, true), Err(Error::BadVariable { .. })));
    }

    #[test]
    fn shannon_recomposition_exhaustive_b3() {
        for code in 0u32..256 {
            let f = TruthTable::from_fn(3, 1, |x| (code >> x) & 1).unwrap();
            for i in 1..=3 {
                let lo = f.cofactor(i, false).unwrap();
                let hi = f.cofactor(i, true).unwrap();
                let shift = var_shift(3, i);
                for x in 0..8u32 {
                    let rest = super::super::remove_bit(x, shift) as usize;
                    let xi = (x >> shift) & 1;
                    let value = ((1 - xi) & lo.rows[rest]) ^ (xi & hi.rows[rest]);
                    assert_eq!(value, f.rows[x as usize]);
                }
            }
        }
    }

    #[test]
    fn reversibility() {
        assert!(TruthTable::identity(2).unwrap().is_reversible());
        assert!(!and2().is_reversible());
        let count = (0u32..256)
            .filter(|code| {
                let rows = (0..4).map(|r| (code >> (2 * r)) & 3).collect();
                TruthTable::from_rows(2, 2, rows).unwrap().is_reversible()
            })
            .count();
        assert_eq!(count, 24);
        let one_var = (0u32..4)
            .filter(|code| {
                let rows = vec![code & 1, code >> 1];
                TruthTable::from_rows(1, 1, rows).unwrap().is_reversible()
            })
            .count();
        assert_eq!(one_var, 2);
    }

    #[test]
    fn components_round_trip() {
        let f = TruthTable::from_fn(2, 3, |x| (x * 5 + 1) & 7).unwrap();
        let comps: Vec<_> = (1..=3).map(|i| f.component(i).unwrap()).collect();
        assert_eq!(TruthTable::from_components(&comps).unwrap(), f);
    }
}
