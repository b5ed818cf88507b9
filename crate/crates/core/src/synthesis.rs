//! Single-target-gate synthesis of reversible functions.
//!
//! One decomposition step splits `f = T_{g2} ∘ inner ∘ T_{g1}` where both
//! gates target the chosen variable and `inner` leaves that variable alone.
//! Iterating over all variables leaves the identity, giving at most `2n - 1`
//! gates whose targets form a V.

use crate::boolfn::{insert_bit, remove_bit, var_shift, ControlFunction, Permutation};
use crate::circuit::{map_to_toffoli, Circuit, Gate, MappingMethod, SingleTargetGate};
use crate::error::{Error, Result};

/// One application of the decomposition to variable `var`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionStep {
    pub var: usize,
    /// Applied first; over the other `n - 1` variables in ascending order.
    pub g1: ControlFunction,
    /// Applied last; same variables as `g1`.
    pub g2: ControlFunction,
    /// The residual, which preserves `var`.
    pub inner: Permutation,
}

impl DecompositionStep {
    /// The two gates, `T_{g1}` and `T_{g2}`, on `n` lines.
    pub fn gates(&self, n: usize) -> (SingleTargetGate, SingleTargetGate) {
        let controls: Vec<usize> = (1..=n).filter(|&l| l != self.var).collect();
        let g1 = SingleTargetGate::new(self.var, controls.clone(), self.g1.clone())
            .expect("step has consistent arity");
        let g2 = SingleTargetGate::new(self.var, controls, self.g2.clone())
            .expect("step has consistent arity");
        (g1, g2)
    }
}

fn stg_perm(n: usize, gate: &SingleTargetGate) -> Vec<u32> {
    (0..1u32 << n).map(|s| gate.apply(n, s)).collect()
}

/// Decomposes `f` around `var`.
///
/// Rows pair up on the remaining bits, both on the input side and on the
/// output side. Linking each row's input pair to its output pair gives a
/// 2-regular bipartite multigraph; walking each cycle from its lowest input
/// pair (starting at the row with `var = 0`) and labelling edges
/// 0, 1, 0, ... yields the value of `var` between `T_{g1}` and `T_{g2}`.
pub fn decompose_once(f: &Permutation, var: usize) -> Result<DecompositionStep> {
    let n = f.n();
    if var == 0 || var > n {
        return Err(Error::BadVariable { var, n });
    }
    let shift = var_shift(n, var);
    let bit = 1u32 << shift;
    let pairs = 1usize << (n - 1);
    let inverse = f.invert();

    let mut label = vec![u8::MAX; 1 << n];
    let mut visited_in = vec![false; pairs];
    for start in 0..pairs {
        if visited_in[start] {
            continue;
        }
        let mut row = insert_bit(start as u32, shift, false);
        let current = 0u8;
        loop {
            visited_in[remove_bit(row, shift) as usize] = true;
            label[row as usize] = current;
            // Across the output pair: the other row mapping into the same pair.
            let partner = inverse.apply(f.apply(row) ^ bit);
            label[partner as usize] = current ^ 1;
            // Across the input pair.
            row = partner ^ bit;
            if label[row as usize] != u8::MAX {
                break;
            }
        }
    }

    let g1 = ControlFunction::from_fn(n - 1, |r| label[insert_bit(r, shift, false) as usize] == 1)?;
    let g2 = ControlFunction::from_fn(n - 1, |s| {
        let row = inverse.apply(insert_bit(s, shift, false));
        label[row as usize] == 1
    })?;

    let mut step = DecompositionStep { var, g1, g2, inner: Permutation::identity(n) };
    let (t1, t2) = step.gates(n);
    let (p1, p2) = (stg_perm(n, &t1), stg_perm(n, &t2));
    let inner: Vec<u32> = (0..1u32 << n)
        .map(|s| p2[f.apply(p1[s as usize]) as usize])
        .collect();
    step.inner = Permutation::from_map_unchecked(n, inner);
    Ok(step)
}

fn check_order(n: usize, order: &[usize]) -> Result<()> {
    if order.len() != n {
        return Err(Error::SizeMismatch { left: n, right: order.len() });
    }
    let mut seen = vec![false; n + 1];
    for &v in order {
        if v == 0 || v > n || seen[v] {
            return Err(Error::BadVariable { var: v, n });
        }
        seen[v] = true;
    }
    Ok(())
}

/// All decomposition steps in `order`; the last residual is the identity.
pub fn decompose_all(f: &Permutation, order: &[usize]) -> Result<Vec<DecompositionStep>> {
    check_order(f.n(), order)?;
    let mut residual = f.clone();
    let mut steps = Vec::with_capacity(order.len());
    for &var in order {
        let step = decompose_once(&residual, var)?;
        residual = step.inner.clone();
        steps.push(step);
    }
    debug_assert!(residual.is_identity());
    Ok(steps)
}

/// The default variable order `1, 2, ..., n`.
pub fn default_order(n: usize) -> Vec<usize> {
    (1..=n).collect()
}

/// Synthesizes `f` as at most `2n - 1` single-target gates.
///
/// Gates with constant-0 control functions are dropped; the two middle gates
/// are merged into one.
pub fn synth_young(f: &Permutation, order: &[usize]) -> Result<Circuit> {
    let n = f.n();
    let steps = decompose_all(f, order)?;
    let mut first = Vec::with_capacity(n);
    let mut last = Vec::with_capacity(n);
    if let Some((middle, outer)) = steps.split_last() {
        for step in outer {
            let (t1, t2) = step.gates(n);
            first.push(t1);
            last.push(t2);
        }
        let merged = DecompositionStep {
            var: middle.var,
            g1: middle.g1.xor(&middle.g2)?,
            g2: ControlFunction::constant(n - 1, false),
            inner: Permutation::identity(n),
        };
        first.push(merged.gates(n).0);
    }
    let gates = first
        .into_iter()
        .chain(last.into_iter().rev())
        .filter(|g| !g.control_function().is_zero())
        .map(Gate::Stg)
        .collect();
    Circuit::new(n, gates)
}

/// [`synth_young`] followed by ESOP mapping of every gate.
pub fn synth_to_toffoli(f: &Permutation, order: &[usize], method: MappingMethod) -> Result<Circuit> {
    map_to_toffoli(&synth_young(f, order)?, method)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfn::var_bit;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn swap() -> Permutation {
        Permutation::from_map(2, vec![0, 2, 1, 3]).unwrap()
    }

    fn targets(c: &Circuit) -> Vec<usize> {
        c.gates().iter().map(Gate::target).collect()
    }

    fn check_step(f: &Permutation, step: &DecompositionStep) {
        let n = f.n();
        for s in 0..1u32 << n {
            assert_eq!(var_bit(n, step.var, step.inner.apply(s)), var_bit(n, step.var, s));
        }
        let (t1, t2) = step.gates(n);
        for s in 0..1u32 << n {
            assert_eq!(t2.apply(n, step.inner.apply(t1.apply(n, s))), f.apply(s));
        }
    }

    #[test]
    fn identity_decomposes_trivially() {
        let id = Permutation::identity(3);
        for var in 1..=3 {
            let step = decompose_once(&id, var).unwrap();
            assert!(step.g1.is_zero() && step.g2.is_zero());
            assert!(step.inner.is_identity());
        }
        assert_eq!(synth_young(&id, &default_order(3)).unwrap().gate_count(), 0);
    }

    #[test]
    fn swap_step() {
        let step = decompose_once(&swap(), 1).unwrap();
        let x2 = ControlFunction::from_bits(1, vec![false, true]).unwrap();
        assert_eq!(step.g1, x2);
        assert_eq!(step.g2, x2);
        // CNOT with control 1, target 2.
        assert_eq!(step.inner.map(), &[0, 1, 3, 2]);
        check_step(&swap(), &step);
        assert!(matches!(decompose_once(&swap(), 3), Err(Error::BadVariable { .. })));
    }

    #[test]
    fn single_line_not() {
        let not = Permutation::from_map(1, vec![1, 0]).unwrap();
        let c = synth_young(&not, &[1]).unwrap();
        assert_eq!(c.gate_count(), 1);
        let Gate::Stg(g) = &c.gates()[0] else { panic!() };
        assert!(g.controls().is_empty());
        assert_eq!(g.control_function().bits(), &[true]);
    }

    #[test]
    fn random_steps_satisfy_invariants() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..1000 {
            let f = Permutation::random(5, &mut rng);
            for var in 1..=5 {
                check_step(&f, &decompose_once(&f, var).unwrap());
            }
        }
    }

    #[test]
    fn residuals_keep_processed_bits() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..200 {
            let n = rng.gen_range(1..=6);
            let f = Permutation::random(n, &mut rng);
            let mut order = default_order(n);
            use rand::seq::SliceRandom;
            order.shuffle(&mut rng);
            let steps = decompose_all(&f, &order).unwrap();
            for (i, step) in steps.iter().enumerate() {
                for s in 0..1u32 << n {
                    for &done in &order[..=i] {
                        assert_eq!(var_bit(n, done, step.inner.apply(s)), var_bit(n, done, s));
                    }
                }
            }
            assert!(steps.last().unwrap().inner.is_identity());
        }
    }

    #[test]
    fn v_shape_targets_and_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..300 {
            let n = rng.gen_range(1..=7);
            let f = Permutation::random(n, &mut rng);
            let mut order = default_order(n);
            use rand::seq::SliceRandom;
            order.shuffle(&mut rng);
            let c = synth_young(&f, &order).unwrap();
            assert!(c.gate_count() < 2 * n);
            assert_eq!(c.perm(), f);
            // Targets are a subsequence of order ++ reverse(order) minus the repeated middle.
            let v: Vec<usize> = order.iter().chain(order.iter().rev().skip(1)).copied().collect();
            let mut it = v.iter();
            for t in targets(&c) {
                assert!(it.any(|&x| x == t), "targets {:?} not along {:?}", targets(&c), v);
            }
            assert_eq!(synth_young(&f, &order).unwrap(), c);
        }
    }

    #[test]
    fn toffoli_synthesis_is_equivalent() {
        assert_eq!(
            synth_to_toffoli(&Permutation::identity(2), &[1, 2], MappingMethod::Pprm).unwrap().gate_count(),
            0
        );
        let c = synth_to_toffoli(&swap(), &[1, 2], MappingMethod::Pprm).unwrap();
        assert_eq!(c.perm(), swap());
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..50 {
            let f = Permutation::random(4, &mut rng);
            for method in [MappingMethod::Pprm, MappingMethod::EsopGreedy] {
                assert_eq!(synth_to_toffoli(&f, &default_order(4), method).unwrap().perm(), f);
            }
        }
    }

    #[test]
    fn rejects_bad_orders() {
        let f = Permutation::identity(3);
        assert!(synth_young(&f, &[1, 2]).is_err());
        assert!(synth_young(&f, &[1, 1, 2]).is_err());
        assert!(synth_young(&f, &[1, 2, 4]).is_err());
    }
}
