//! Two-level AND-EXOR expressions.
//!
//! A [`Cube`] is a product of literals; an [`EsopExpr`] is the XOR of its
//! cubes. Cube masks use the crate-wide MSB convention, so a cube matches an
//! assignment `a` exactly when `a & care == polarity`.

mod expand;
mod text;

pub use expand::{esop_davio, expand_davio_neg, expand_davio_pos, expand_shannon, pprm, pprm_bits, EsopPolicy, Polarity};
pub(crate) use expand::esop_davio_bits;
pub(crate) use text::parse_var;
pub use text::{format_cube, format_esop, parse_esop};

use crate::boolfn::{var_shift, TruthTable};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cube {
    // Field order gives the canonical (care, polarity) ordering.
    care: u32,
    polarity: u32,
    n_vars: usize,
}

impl Cube {
    pub fn new(n_vars: usize, care: u32, polarity: u32) -> Result<Self> {
        let limit = if n_vars >= 32 { u32::MAX } else { (1u32 << n_vars) - 1 };
        if care & !limit != 0 {
            return Err(Error::IndexOutOfRange { index: care as u64, limit: limit as u64 });
        }
        if polarity & !care != 0 {
            return Err(Error::IndexOutOfRange { index: polarity as u64, limit: care as u64 });
        }
        Ok(Self { care, polarity, n_vars })
    }

    pub fn one(n_vars: usize) -> Self {
        Self { care: 0, polarity: 0, n_vars }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn care(&self) -> u32 {
        self.care
    }

    pub fn polarity(&self) -> u32 {
        self.polarity
    }

    pub fn is_one(&self) -> bool {
        self.care == 0
    }

    pub fn is_positive(&self) -> bool {
        self.care == self.polarity
    }

    pub fn literal_count(&self) -> usize {
        self.care.count_ones() as usize
    }

    /// Literals as `(variable, positive)` pairs in ascending variable order.
    pub fn literals(&self) -> impl Iterator<Item = (usize, bool)> + '_ {
        (1..=self.n_vars).filter_map(move |var| {
            let bit = 1u32 << var_shift(self.n_vars, var);
            (self.care & bit != 0).then_some((var, self.polarity & bit != 0))
        })
    }

    #[inline]
    pub fn eval(&self, assignment: u32) -> bool {
        assignment & self.care == self.polarity
    }

    pub(crate) fn with_literal(self, var: usize, positive: bool) -> Self {
        let bit = 1u32 << var_shift(self.n_vars, var);
        Self {
            care: self.care | bit,
            polarity: if positive { self.polarity | bit } else { self.polarity },
            n_vars: self.n_vars,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EsopExpr {
    n_vars: usize,
    cubes: Vec<Cube>,
}

impl EsopExpr {
    pub fn new(n_vars: usize, cubes: Vec<Cube>) -> Result<Self> {
        if let Some(c) = cubes.iter().find(|c| c.n_vars != n_vars) {
            return Err(Error::SizeMismatch { left: n_vars, right: c.n_vars });
        }
        Ok(Self { n_vars, cubes })
    }

    pub fn zero(n_vars: usize) -> Self {
        Self { n_vars, cubes: Vec::new() }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn cubes(&self) -> &[Cube] {
        &self.cubes
    }

    pub fn term_count(&self) -> usize {
        self.cubes.len()
    }

    pub fn literal_count(&self) -> usize {
        self.cubes.iter().map(Cube::literal_count).sum()
    }

    pub fn eval(&self, assignment: u32) -> bool {
        self.cubes.iter().fold(false, |acc, c| acc ^ c.eval(assignment))
    }

    pub fn to_truth_table(&self) -> TruthTable {
        TruthTable::from_fn(self.n_vars, 1, |a| self.eval(a) as u32)
            .expect("expression variable count within limits")
    }

    /// Sorts cubes into ascending `(care, polarity)` order.
    pub fn canonicalize(&mut self) {
        self.cubes.sort();
    }
}

/// Number of product terms, the framework's cost measure.
pub fn term_count(e: &EsopExpr) -> usize {
    e.term_count()
}
