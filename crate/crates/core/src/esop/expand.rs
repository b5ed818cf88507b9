use std::cmp::Ordering;

use super::{Cube, EsopExpr};
use crate::boolfn::TruthTable;
use crate::error::{Error, Result};

fn single_output(f: &TruthTable) -> Result<()> {
    if f.n_outputs() != 1 {
        return Err(Error::ArityMismatch { expected: 1, actual: f.n_outputs() });
    }
    Ok(())
}

fn xor_tables(a: &TruthTable, b: &TruthTable) -> TruthTable {
    let rows = a.rows().iter().zip(b.rows()).map(|(x, y)| x ^ y).collect();
    TruthTable::from_rows(a.n_inputs(), 1, rows).expect("cofactors share shape")
}

/// `f = x̄ᵢ·f_{x̄ᵢ} ⊕ xᵢ·f_{xᵢ}`; returns `(f_{x̄ᵢ}, f_{xᵢ})`.
pub fn expand_shannon(f: &TruthTable, i: usize) -> Result<(TruthTable, TruthTable)> {
    single_output(f)?;
    Ok((f.cofactor(i, false)?, f.cofactor(i, true)?))
}

/// `f = f_{x̄ᵢ} ⊕ xᵢ·(f_{x̄ᵢ} ⊕ f_{xᵢ})`; returns `(f_{x̄ᵢ}, f_{x̄ᵢ} ⊕ f_{xᵢ})`.
pub fn expand_davio_pos(f: &TruthTable, i: usize) -> Result<(TruthTable, TruthTable)> {
    let (lo, hi) = expand_shannon(f, i)?;
    let diff = xor_tables(&lo, &hi);
    Ok((lo, diff))
}

/// `f = f_{xᵢ} ⊕ x̄ᵢ·(f_{x̄ᵢ} ⊕ f_{xᵢ})`; returns `(f_{xᵢ}, f_{x̄ᵢ} ⊕ f_{xᵢ})`.
pub fn expand_davio_neg(f: &TruthTable, i: usize) -> Result<(TruthTable, TruthTable)> {
    let (lo, hi) = expand_shannon(f, i)?;
    let diff = xor_tables(&lo, &hi);
    Ok((hi, diff))
}

/// PPRM of a value vector via the in-place Reed-Muller butterfly.
///
/// Cubes come out in ascending care-mask order.
pub fn pprm_bits(n_vars: usize, values: &[bool]) -> EsopExpr {
    assert_eq!(values.len(), 1 << n_vars, "value vector must have 2^n entries");
    let mut coeffs = values.to_vec();
    for s in 0..n_vars {
        let stride = 1usize << s;
        for i in 0..coeffs.len() {
            if i & stride != 0 {
                coeffs[i] ^= coeffs[i ^ stride];
            }
        }
    }
    let cubes = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c)
        .map(|(mask, _)| Cube { care: mask as u32, polarity: mask as u32, n_vars })
        .collect();
    EsopExpr { n_vars, cubes }
}

/// The unique positive-polarity Reed-Muller expression of `f`.
pub fn pprm(f: &TruthTable) -> Result<EsopExpr> {
    single_output(f)?;
    let values: Vec<bool> = f.rows().iter().map(|&w| w == 1).collect();
    Ok(pprm_bits(f.n_inputs(), &values))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Polarity {
    Positive,
    Negative,
}

/// How [`esop_davio`] picks an expansion at each variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EsopPolicy {
    /// Positive Davio everywhere.
    Pprm,
    /// Positive or negative Davio per variable (a fixed-polarity expression).
    FixedPolarity(Vec<Polarity>),
    /// At each node, the cheapest of positive Davio, negative Davio and
    /// Shannon. Heuristic: not a minimum ESOP.
    Greedy,
}

#[derive(Clone, Copy)]
enum Rule {
    PositiveDavio,
    NegativeDavio,
    Shannon,
}

/// ESOP of `f` built by recursive expansion over `x1, x2, ..., xn`.
///
/// Greedy nodes minimize cube count, then literal count; remaining ties go
/// to positive Davio, then negative Davio, then Shannon. The result is in
/// canonical cube order.
pub fn esop_davio(f: &TruthTable, policy: &EsopPolicy) -> Result<EsopExpr> {
    single_output(f)?;
    let n = f.n_inputs();
    if let EsopPolicy::FixedPolarity(p) = policy {
        if p.len() != n {
            return Err(Error::ArityMismatch { expected: n, actual: p.len() });
        }
    }
    let values: Vec<bool> = f.rows().iter().map(|&w| w == 1).collect();
    Ok(esop_davio_bits(n, &values, policy))
}

pub(crate) fn esop_davio_bits(n_vars: usize, values: &[bool], policy: &EsopPolicy) -> EsopExpr {
    let mut cubes = Vec::new();
    expand(values, n_vars, 1, policy, Cube::one(n_vars), &mut cubes);
    cubes.sort();
    EsopExpr { n_vars, cubes }
}

fn cost(cubes: &[Cube]) -> (usize, usize) {
    (cubes.len(), cubes.iter().map(Cube::literal_count).sum())
}

/// Appends the cubes for `values` (a function of `x_var..x_n`, with `x_var`
/// as the most significant index bit) multiplied by `prefix`.
fn expand(
    values: &[bool],
    n_vars: usize,
    var: usize,
    policy: &EsopPolicy,
    prefix: Cube,
    out: &mut Vec<Cube>,
) {
    if values.iter().all(|&v| !v) {
        return;
    }
    if values.iter().all(|&v| v) {
        out.push(prefix);
        return;
    }
    let rule = match policy {
        EsopPolicy::Pprm => Rule::PositiveDavio,
        EsopPolicy::FixedPolarity(p) => match p[var - 1] {
            Polarity::Positive => Rule::PositiveDavio,
            Polarity::Negative => Rule::NegativeDavio,
        },
        EsopPolicy::Greedy => {
            let mut best: Option<Vec<Cube>> = None;
            for rule in [Rule::PositiveDavio, Rule::NegativeDavio, Rule::Shannon] {
                let mut candidate = Vec::new();
                apply_rule(rule, values, n_vars, var, policy, prefix, &mut candidate);
                let better = match &best {
                    None => true,
                    Some(b) => cost(&candidate).cmp(&cost(b)) == Ordering::Less,
                };
                if better {
                    best = Some(candidate);
                }
            }
            out.extend(best.unwrap_or_default());
            return;
        }
    };
    apply_rule(rule, values, n_vars, var, policy, prefix, out);
}

fn apply_rule(
    rule: Rule,
    values: &[bool],
    n_vars: usize,
    var: usize,
    policy: &EsopPolicy,
    prefix: Cube,
    out: &mut Vec<Cube>,
) {
    let half = values.len() / 2;
    let (lo, hi) = values.split_at(half);
    match rule {
        Rule::Shannon => {
            expand(lo, n_vars, var + 1, policy, prefix.with_literal(var, false), out);
            expand(hi, n_vars, var + 1, policy, prefix.with_literal(var, true), out);
        }
        Rule::PositiveDavio | Rule::NegativeDavio => {
            let diff: Vec<bool> = lo.iter().zip(hi).map(|(a, b)| a ^ b).collect();
            let (base, positive) = match rule {
                Rule::PositiveDavio => (lo, true),
                _ => (hi, false),
            };
            expand(base, n_vars, var + 1, policy, prefix, out);
            expand(&diff, n_vars, var + 1, policy, prefix.with_literal(var, positive), out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfn::{remove_bit, var_shift};

    fn table(n: usize, code: u64) -> TruthTable {
        TruthTable::from_fn(n, 1, |x| ((code >> x) & 1) as u32).unwrap()
    }

    fn or2() -> TruthTable {
        TruthTable::from_rows(2, 1, vec![0, 1, 1, 1]).unwrap()
    }

    /// Reed-Muller coefficients straight from the definition: the coefficient
    /// of monomial `m` is the XOR of `f` over all sub-assignments of `m`.
    fn rm_oracle(f: &TruthTable) -> Vec<u32> {
        let size = f.rows().len() as u32;
        (0..size)
            .filter(|&m| {
                (0..size).filter(|&a| a & !m == 0).fold(0, |acc, a| acc ^ f.rows()[a as usize]) == 1
            })
            .collect()
    }

    #[test]
    fn expansion_examples() {
        let x1 = table(1, 0b10);
        let nx1 = table(1, 0b01);
        let (lo, hi) = expand_shannon(&x1, 1).unwrap();
        assert_eq!((lo.rows(), hi.rows()), (&[0][..], &[1][..]));
        let and = table(2, 0b1000);
        let (lo, hi) = expand_shannon(&and, 2).unwrap();
        assert_eq!((lo.rows(), hi.rows()), (&[0, 0][..], &[0, 1][..]));

        let (b, d) = expand_davio_pos(&nx1, 1).unwrap();
        assert_eq!((b.rows(), d.rows()), (&[1][..], &[1][..]));
        let (b, d) = expand_davio_pos(&x1, 1).unwrap();
        assert_eq!((b.rows(), d.rows()), (&[0][..], &[1][..]));

        let (b, d) = expand_davio_neg(&x1, 1).unwrap();
        assert_eq!((b.rows(), d.rows()), (&[1][..], &[1][..]));
        let zero = table(1, 0);
        let (b, d) = expand_davio_neg(&zero, 1).unwrap();
        assert_eq!((b.rows(), d.rows()), (&[0][..], &[0][..]));
    }

    #[test]
    fn recomposition_exhaustive() {
        for n in 1..=4usize {
            for code in 0..1u64 << (1 << n) {
                let f = table(n, code);
                for i in 1..=n {
                    let shift = var_shift(n, i);
                    let (s0, s1) = expand_shannon(&f, i).unwrap();
                    let (p0, p1) = expand_davio_pos(&f, i).unwrap();
                    let (q0, q1) = expand_davio_neg(&f, i).unwrap();
                    for a in 0..1u32 << n {
                        let r = remove_bit(a, shift) as usize;
                        let xi = (a >> shift) & 1;
                        let want = f.rows()[a as usize];
                        assert_eq!(((1 - xi) & s0.rows()[r]) ^ (xi & s1.rows()[r]), want);
                        assert_eq!(p0.rows()[r] ^ (xi & p1.rows()[r]), want);
                        assert_eq!(q0.rows()[r] ^ ((1 - xi) & q1.rows()[r]), want);
                    }
                }
            }
        }
    }

    #[test]
    fn pprm_examples() {
        let and = table(2, 0b1000);
        let e = pprm(&and).unwrap();
        assert_eq!(e.cubes(), &[Cube::new(2, 0b11, 0b11).unwrap()]);
        let e = pprm(&or2()).unwrap();
        assert_eq!(e.term_count(), 3);
        let masks: Vec<u32> = e.cubes().iter().map(|c| c.care()).collect();
        assert_eq!(masks, vec![0b01, 0b10, 0b11]);
        assert_eq!(pprm(&table(2, 0)).unwrap().term_count(), 0);
        let parity = TruthTable::from_fn(3, 1, |x| x.count_ones() & 1).unwrap();
        assert_eq!(pprm(&parity).unwrap().term_count(), 3);
    }

    #[test]
    fn pprm_matches_definition_and_is_unique() {
        for n in 0..=3usize {
            let mut seen = std::collections::HashSet::new();
            for code in 0..1u64 << (1 << n) {
                let f = table(n, code);
                let e = pprm(&f).unwrap();
                assert!(e.cubes().iter().all(Cube::is_positive));
                let masks: Vec<u32> = e.cubes().iter().map(|c| c.care()).collect();
                assert_eq!(masks, rm_oracle(&f));
                assert_eq!(e.to_truth_table(), f);
                assert!(seen.insert(masks));
                assert!(e.term_count() <= 1 << n);
            }
        }
    }

    #[test]
    fn pprm_bound_is_reached() {
        for n in 1..=3usize {
            let max = (0..1u64 << (1 << n))
                .map(|code| pprm(&table(n, code)).unwrap().term_count())
                .max()
                .unwrap();
            assert_eq!(max, 1 << n);
        }
        // The function with all 2^n monomials is the AND of complemented variables.
        let nor3 = table(3, 0b1);
        assert_eq!(pprm(&nor3).unwrap().term_count(), 8);
    }

    #[test]
    fn davio_policies_agree_with_function() {
        for code in 0..256u64 {
            let f = table(3, code);
            let p = pprm(&f).unwrap();
            assert_eq!(esop_davio(&f, &EsopPolicy::Pprm).unwrap(), p);
            let g = esop_davio(&f, &EsopPolicy::Greedy).unwrap();
            assert_eq!(g.to_truth_table(), f);
            assert!(g.term_count() <= p.term_count());
            for mask in 0..8u32 {
                let pol = (0..3)
                    .map(|j| if mask >> j & 1 == 1 { Polarity::Negative } else { Polarity::Positive })
                    .collect();
                let e = esop_davio(&f, &EsopPolicy::FixedPolarity(pol)).unwrap();
                assert_eq!(e.to_truth_table(), f);
            }
        }
    }

    #[test]
    fn greedy_or_is_one_xor_nor() {
        let e = esop_davio(&or2(), &EsopPolicy::Greedy).unwrap();
        assert_eq!(e.cubes(), &[Cube::one(2), Cube::new(2, 0b11, 0).unwrap()]);
        let one = esop_davio(&table(2, 0b1111), &EsopPolicy::Greedy).unwrap();
        assert_eq!(one.cubes(), &[Cube::one(2)]);
    }

    #[test]
    fn rejects_bad_inputs() {
        let f = TruthTable::identity(2).unwrap();
        assert!(matches!(pprm(&f), Err(Error::ArityMismatch { .. })));
        let g = table(2, 0b0110);
        assert!(matches!(
            esop_davio(&g, &EsopPolicy::FixedPolarity(vec![Polarity::Positive])),
            Err(Error::ArityMismatch { .. })
        ));
        assert!(matches!(expand_shannon(&g, 3), Err(Error::BadVariable { .. })));
    }
}
