use super::{check_var_count, TruthTable};
use crate::error::{Error, Result};

/// The predicate `g ∈ B_k` of a single-target gate.
///
/// Variable `x_j` of `g` is the `j`-th bit of the control pattern counted
/// from the most significant end.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ControlFunction {
    arity: usize,
    bits: Vec<bool>,
}

impl ControlFunction {
    pub fn from_bits(arity: usize, bits: Vec<bool>) -> Result<Self> {
        check_var_count(arity)?;
        let expected = 1usize << arity;
        if bits.len() != expected {
            return Err(Error::LengthMismatch { expected, actual: bits.len() });
        }
        Ok(Self { arity, bits })
    }

    pub fn from_fn(arity: usize, f: impl Fn(u32) -> bool) -> Result<Self> {
        check_var_count(arity)?;
        Ok(Self { arity, bits: (0..1u32 << arity).map(f).collect() })
    }

    /// Decodes bit `p` of `code` as `g(p)`; handy for enumerating `B_k`.
    pub fn from_code(arity: usize, code: u64) -> Result<Self> {
        Self::from_fn(arity, |p| (code >> p) & 1 == 1)
    }

    pub fn constant(arity: usize, value: bool) -> Self {
        Self { arity, bits: vec![value; 1 << arity] }
    }

    pub fn from_truth_table(tt: &TruthTable) -> Result<Self> {
        if tt.n_outputs() != 1 {
            return Err(Error::ArityMismatch { expected: 1, actual: tt.n_outputs() });
        }
        Ok(Self { arity: tt.n_inputs(), bits: tt.rows().iter().map(|&w| w == 1).collect() })
    }

    pub fn to_truth_table(&self) -> TruthTable {
        TruthTable::from_rows(self.arity, 1, self.bits.iter().map(|&b| b as u32).collect())
            .expect("control function has 2^k rows")
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    #[inline]
    pub fn eval(&self, pattern: u32) -> bool {
        self.bits[pattern as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&b| !b)
    }

    pub fn xor(&self, other: &ControlFunction) -> Result<ControlFunction> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch { expected: self.arity, actual: other.arity });
        }
        let bits = self.bits.iter().zip(&other.bits).map(|(a, b)| a ^ b).collect();
        Ok(ControlFunction { arity: self.arity, bits })
    }
}
