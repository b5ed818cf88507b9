use rand::seq::SliceRandom;
use rand::Rng;

use super::{check_var_count, TruthTable};
use crate::error::{Error, Result};

/// A reversible function on `n` lines, as a bijection on `0..2^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    n: usize,
    map: Vec<u32>,
}

impl Permutation {
    pub fn from_map(n: usize, map: Vec<u32>) -> Result<Self> {
        check_var_count(n)?;
        let expected = 1usize << n;
        if map.len() != expected {
            return Err(Error::LengthMismatch { expected, actual: map.len() });
        }
        let mut seen = vec![false; expected];
        for &image in &map {
            match seen.get_mut(image as usize) {
                Some(slot) if !*slot => *slot = true,
                _ => return Err(Error::NotReversible),
            }
        }
        Ok(Self { n, map })
    }

    /// Wraps `map` without checking it; callers guarantee a bijection.
    pub(crate) fn from_map_unchecked(n: usize, map: Vec<u32>) -> Self {
        debug_assert_eq!(map.len(), 1 << n);
        Self { n, map }
    }

    pub fn identity(n: usize) -> Self {
        Self { n, map: (0..1u32 << n).collect() }
    }

    /// A uniformly random permutation on `n` lines.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut map: Vec<u32> = (0..1u32 << n).collect();
        map.shuffle(rng);
        Self { n, map }
    }

    pub fn from_truth_table(f: &TruthTable) -> Result<Self> {
        if !f.is_reversible() {
            return Err(Error::NotReversible);
        }
        Ok(Self { n: f.n_inputs(), map: f.rows().to_vec() })
    }

    pub fn to_truth_table(&self) -> TruthTable {
        TruthTable::from_rows(self.n, self.n.max(1), self.map.clone())
            .expect("permutation entries fit in n bits")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn map(&self) -> &[u32] {
        &self.map
    }

    pub fn into_map(self) -> Vec<u32> {
        self.map
    }

    #[inline]
    pub fn apply(&self, state: u32) -> u32 {
        self.map[state as usize]
    }

    /// `self ∘ other`: `other` is applied first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n != other.n {
            return Err(Error::SizeMismatch { left: self.n, right: other.n });
        }
        let map = other.map.iter().map(|&s| self.map[s as usize]).collect();
        Ok(Permutation { n: self.n, map })
    }

    pub fn invert(&self) -> Permutation {
        let mut map = vec![0u32; self.map.len()];
        for (input, &image) in self.map.iter().enumerate() {
            map[image as usize] = input as u32;
        }
        Permutation { n: self.n, map }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &s)| i as u32 == s)
    }

    /// First input on which the two permutations differ.
    pub fn first_difference(&self, other: &Permutation) -> Result<Option<u32>> {
        if self.n != other.n {
            return Err(Error::SizeMismatch { left: self.n, right: other.n });
        }
        Ok(self
            .map
            .iter()
            .zip(&other.map)
            .position(|(a, b)| a != b)
            .map(|i| i as u32))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const SWAP: [u32; 4] = [0, 2, 1, 3];

    #[test]
    fn swap_of_two_lines() {
        // x1 x2 -> x2 x1 under the MSB convention: 01 <-> 10.
        let tt = TruthTable::from_fn(2, 2, |x| ((x & 1) << 1) | (x >> 1)).unwrap();
        let p = Permutation::from_truth_table(&tt).unwrap();
        assert_eq!(p.map(), &SWAP);
        let swap = Permutation::from_map(2, SWAP.to_vec()).unwrap();
        assert!(swap.compose(&swap).unwrap().is_identity());
    }

    #[test]
    fn rejects_non_bijections() {
        assert_eq!(Permutation::from_map(1, vec![0, 0]), Err(Error::NotReversible));
        assert_eq!(Permutation::from_map(1, vec![0, 2]), Err(Error::NotReversible));
        let and = TruthTable::from_rows(2, 1, vec![0, 0, 0, 1]).unwrap();
        assert_eq!(Permutation::from_truth_table(&and), Err(Error::NotReversible));
        let p = Permutation::identity(2);
        assert!(matches!(
            p.compose(&Permutation::identity(3)),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn table_round_trip_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let n = rng.gen_range(1..=6);
            let p = Permutation::random(n, &mut rng);
            let tt = p.to_truth_table();
            assert_eq!(Permutation::from_truth_table(&tt).unwrap(), p);
            assert_eq!(Permutation::from_truth_table(&tt).unwrap().to_truth_table(), tt);
        }
        let id = Permutation::identity(3);
        assert_eq!(id.to_truth_table(), TruthTable::identity(3).unwrap());
    }

    fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..1u32 << n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(move |map| Permutation::from_map(n, map).unwrap())
    }

    proptest! {
        #[test]
        fn compose_is_associative(p in perm_strategy(4), q in perm_strategy(4), r in perm_strategy(4)) {
            let left = p.compose(&q).unwrap().compose(&r).unwrap();
            let right = p.compose(&q.compose(&r).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn inverse_laws(p in perm_strategy(4)) {
            prop_assert!(p.compose(&p.invert()).unwrap().is_identity());
            prop_assert!(p.invert().compose(&p).unwrap().is_identity());
            prop_assert_eq!(p.invert().invert(), p.clone());
            prop_assert_eq!(p.compose(&Permutation::identity(4)).unwrap(), p);
        }
    }
}
