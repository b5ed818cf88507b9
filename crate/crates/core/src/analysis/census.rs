use std::collections::BTreeMap;
use std::fmt::Write as _;

use itertools::Itertools;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::boolfn::Permutation;
use crate::circuit::{control_esop, Gate, MappingMethod};
use crate::error::{Error, Result};
use crate::esop::EsopExpr;
use crate::synthesis::{default_order, synth_young};

/// Cost coordinates of one function: single-target gates from synthesis and
/// the product-term counts of their control functions.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ComplexityProfile {
    pub stg_count: usize,
    pub pprm_terms: Vec<usize>,
    pub esop_terms: Vec<usize>,
    pub toffoli_count_pprm: usize,
    pub toffoli_count_esop: usize,
}

fn control_terms(gate: &Gate, method: MappingMethod) -> usize {
    match gate {
        Gate::Stg(s) => {
            let e: EsopExpr = control_esop(s, method);
            e.term_count()
        }
        Gate::Mpmct(_) => 1,
    }
}

pub fn classify_function(f: &Permutation) -> ComplexityProfile {
    let circuit = synth_young(f, &default_order(f.n())).expect("default order is valid");
    let pprm_terms: Vec<usize> =
        circuit.gates().iter().map(|g| control_terms(g, MappingMethod::Pprm)).collect();
    let esop_terms: Vec<usize> =
        circuit.gates().iter().map(|g| control_terms(g, MappingMethod::EsopGreedy)).collect();
    ComplexityProfile {
        stg_count: circuit.gate_count(),
        toffoli_count_pprm: pprm_terms.iter().sum(),
        toffoli_count_esop: esop_terms.iter().sum(),
        pprm_terms,
        esop_terms,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CensusMode {
    /// All `(2^n)!` functions; `n <= 3`.
    Exhaustive,
    /// Uniform samples from a seeded generator.
    Sampled { samples: usize, seed: u64 },
}

pub const DEFAULT_SAMPLES: usize = 10_000;

/// Distributions over a set of functions; every map is value -> count.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Census {
    pub n: usize,
    pub functions: u64,
    pub stg_count: BTreeMap<usize, u64>,
    pub max_pprm_terms: BTreeMap<usize, u64>,
    pub max_esop_terms: BTreeMap<usize, u64>,
    pub toffoli_count_pprm: BTreeMap<usize, u64>,
    pub toffoli_count_esop: BTreeMap<usize, u64>,
}

impl Census {
    fn add(&mut self, p: &ComplexityProfile) {
        self.functions += 1;
        let max = |v: &[usize]| v.iter().copied().max().unwrap_or(0);
        *self.stg_count.entry(p.stg_count).or_default() += 1;
        *self.max_pprm_terms.entry(max(&p.pprm_terms)).or_default() += 1;
        *self.max_esop_terms.entry(max(&p.esop_terms)).or_default() += 1;
        *self.toffoli_count_pprm.entry(p.toffoli_count_pprm).or_default() += 1;
        *self.toffoli_count_esop.entry(p.toffoli_count_esop).or_default() += 1;
    }

    fn merge(mut self, other: Census) -> Census {
        self.functions += other.functions;
        for (mine, theirs) in [
            (&mut self.stg_count, other.stg_count),
            (&mut self.max_pprm_terms, other.max_pprm_terms),
            (&mut self.max_esop_terms, other.max_esop_terms),
            (&mut self.toffoli_count_pprm, other.toffoli_count_pprm),
            (&mut self.toffoli_count_esop, other.toffoli_count_esop),
        ] {
            for (k, v) in theirs {
                *mine.entry(k).or_default() += v;
            }
        }
        self
    }

    fn metrics(&self) -> [(&'static str, &BTreeMap<usize, u64>); 5] {
        [
            ("stg_count", &self.stg_count),
            ("max_pprm_terms", &self.max_pprm_terms),
            ("max_esop_terms", &self.max_esop_terms),
            ("toffoli_count_pprm", &self.toffoli_count_pprm),
            ("toffoli_count_esop", &self.toffoli_count_esop),
        ]
    }

    /// Columns `metric,value,count`; metrics in fixed order, values ascending.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("metric,value,count\n");
        for (name, dist) in self.metrics() {
            for (value, count) in dist {
                let _ = writeln!(out, "{name},{value},{count}");
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("n = {}, functions = {}\n", self.n, self.functions);
        let _ = writeln!(out, "{:<20} {:>8} {:>10}", "metric", "value", "count");
        for (name, dist) in self.metrics() {
            for (value, count) in dist {
                let _ = writeln!(out, "{name:<20} {value:>8} {count:>10}");
            }
        }
        out
    }
}

fn all_permutations(n: usize) -> Vec<Permutation> {
    let size = 1u32 << n;
    (0..size)
        .permutations(size as usize)
        .map(|map| Permutation::from_map_unchecked(n, map))
        .collect()
}

/// The functions a census runs over, in deterministic order.
pub fn census_functions(n: usize, mode: CensusMode) -> Result<Vec<Permutation>> {
    match mode {
        CensusMode::Exhaustive => {
            if !(1..=3).contains(&n) {
                return Err(Error::UnsupportedN { n, reason: "exhaustive census needs 1 <= n <= 3" });
            }
            Ok(all_permutations(n))
        }
        CensusMode::Sampled { samples, seed } => {
            if !(1..=12).contains(&n) {
                return Err(Error::UnsupportedN { n, reason: "sampled census needs 1 <= n <= 12" });
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Ok((0..samples).map(|_| Permutation::random(n, &mut rng)).collect())
        }
    }
}

pub fn census(n: usize, mode: CensusMode) -> Result<Census> {
    let functions = census_functions(n, mode)?;
    let empty = || Census { n, ..Census::default() };
    Ok(functions
        .par_iter()
        .fold(empty, |mut acc, f| {
            acc.add(&classify_function(f));
            acc
        })
        .reduce(empty, Census::merge))
}
