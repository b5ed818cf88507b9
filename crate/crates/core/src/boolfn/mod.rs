//! Boolean multiple-output functions and reversible permutations.
//!
//! Bit convention, shared by every module of the crate: variable `x1` is
//! circuit line 1 (the top line) and the most significant bit of a state
//! index; `xn` is the least significant bit. The same holds for output words,
//! so output `f1` is the most significant bit of a row.

mod control;
mod permutation;
mod truth_table;
mod tt_format;

pub use control::ControlFunction;
pub use permutation::Permutation;
pub use truth_table::TruthTable;
pub use tt_format::{parse_tt, serialize_tt};

use crate::error::{Error, Result};

/// Largest supported number of variables (inputs, outputs or lines).
pub const MAX_VARS: usize = 20;

pub(crate) fn check_var_count(n: usize) -> Result<()> {
    if n > MAX_VARS {
        Err(Error::TooManyVariables { n, max: MAX_VARS })
    } else {
        Ok(())
    }
}

/// Shift of variable `var` (1-based) inside an `n`-bit index.
#[inline]
pub fn var_shift(n: usize, var: usize) -> u32 {
    debug_assert!(var >= 1 && var <= n);
    (n - var) as u32
}

/// Value of variable `var` (1-based) in the `n`-bit index `state`.
#[inline]
pub fn var_bit(n: usize, var: usize, state: u32) -> bool {
    (state >> var_shift(n, var)) & 1 == 1
}

/// Deletes the bit at `shift`, closing the gap.
#[inline]
pub(crate) fn remove_bit(index: u32, shift: u32) -> u32 {
    let low = index & ((1u32 << shift) - 1);
    let high = (index >> (shift + 1)) << shift;
    high | low
}

/// Inserts `bit` at `shift`, moving higher bits up by one.
#[inline]
pub(crate) fn insert_bit(index: u32, shift: u32, bit: bool) -> u32 {
    let low = index & ((1u32 << shift) - 1);
    let high = (index >> shift) << (shift + 1);
    high | ((bit as u32) << shift) | low
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_and_remove_are_inverse() {
        for shift in 0..5 {
            for index in 0..32u32 {
                for bit in [false, true] {
                    let wide = insert_bit(index, shift, bit);
                    assert_eq!((wide >> shift) & 1 == 1, bit);
                    assert_eq!(remove_bit(wide, shift), index);
                }
            }
        }
    }

    #[test]
    fn msb_is_first_variable() {
        assert!(var_bit(3, 1, 0b100));
        assert!(!var_bit(3, 3, 0b100));
        assert!(var_bit(3, 3, 0b001));
    }
}
