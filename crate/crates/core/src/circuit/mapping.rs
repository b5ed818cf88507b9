use super::{Circuit, Gate, MpmctGate, SingleTargetGate};
use crate::esop::{esop_davio_bits, pprm_bits, EsopExpr, EsopPolicy};
use crate::error::Result;

/// Which ESOP of the control function drives the Toffoli mapping.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MappingMethod {
    /// Positive-polarity Reed-Muller: MCT gates only.
    Pprm,
    /// Greedy Davio/Shannon ESOP: mixed-polarity gates, never more of them.
    EsopGreedy,
}

/// The ESOP of a gate's control function used by `method`, over its control variables.
pub fn control_esop(g: &SingleTargetGate, method: MappingMethod) -> EsopExpr {
    let f = g.control_function();
    match method {
        MappingMethod::Pprm => pprm_bits(f.arity(), f.bits()),
        MappingMethod::EsopGreedy => esop_davio_bits(f.arity(), f.bits(), &EsopPolicy::Greedy),
    }
}

/// One MPMCT gate per cube of the control function's expression.
///
/// Cube variable `x_j` becomes control line `controls[j-1]`, with its literal
/// polarity; controls outside the cube are dropped. The constant-1 cube gives
/// an uncontrolled NOT.
pub fn stg_to_toffoli(g: &SingleTargetGate, method: MappingMethod) -> Vec<MpmctGate> {
    control_esop(g, method)
        .cubes()
        .iter()
        .map(|cube| {
            let (mut pos, mut neg) = (Vec::new(), Vec::new());
            for (var, positive) in cube.literals() {
                let line = g.controls()[var - 1];
                if positive {
                    pos.push(line);
                } else {
                    neg.push(line);
                }
            }
            MpmctGate { target: g.target(), pos, neg }
        })
        .collect()
}

/// Replaces every single-target gate of `c` by its Toffoli cascade.
pub fn map_to_toffoli(c: &Circuit, method: MappingMethod) -> Result<Circuit> {
    let mut gates = Vec::new();
    for gate in c.gates() {
        match gate {
            Gate::Stg(s) => gates.extend(stg_to_toffoli(s, method).into_iter().map(Gate::Mpmct)),
            Gate::Mpmct(m) => gates.push(Gate::Mpmct(m.clone())),
        }
    }
    Circuit::new(c.lines(), gates)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfn::ControlFunction;
    use crate::esop::pprm;

    fn or_gate() -> SingleTargetGate {
        let g = ControlFunction::from_bits(2, vec![false, true, true, true]).unwrap();
        SingleTargetGate::new(3, vec![1, 2], g).unwrap()
    }

    fn cascade_perm(lines: usize, gates: &[MpmctGate]) -> Vec<u32> {
        let c = Circuit::new(lines, gates.iter().cloned().map(Gate::Mpmct).collect()).unwrap();
        c.perm().into_map()
    }

    #[test]
    fn and_maps_to_one_toffoli() {
        let g = ControlFunction::from_bits(2, vec![false, false, false, true]).unwrap();
        let s = SingleTargetGate::new(3, vec![1, 2], g).unwrap();
        for method in [MappingMethod::Pprm, MappingMethod::EsopGreedy] {
            assert_eq!(stg_to_toffoli(&s, method), vec![MpmctGate::mct(3, vec![1, 2]).unwrap()]);
        }
    }

    #[test]
    fn or_maps_per_method() {
        let s = or_gate();
        let want: Vec<u32> = (0..8).map(|x| s.apply(3, x)).collect();

        let p = stg_to_toffoli(&s, MappingMethod::Pprm);
        let controls: Vec<&[usize]> = p.iter().map(|m| m.positive_controls()).collect();
        assert_eq!(controls, vec![&[2][..], &[1], &[1, 2]]);
        assert!(p.iter().all(MpmctGate::is_mct));
        assert_eq!(cascade_perm(3, &p), want);

        let e = stg_to_toffoli(&s, MappingMethod::EsopGreedy);
        assert_eq!(e, vec![MpmctGate::not(3).unwrap(), MpmctGate::new(3, vec![], vec![1, 2]).unwrap()]);
        assert_eq!(cascade_perm(3, &e), want);
    }

    #[test]
    fn mapping_exhaustive_arity_three() {
        for code in 0..256u64 {
            let g = ControlFunction::from_code(3, code).unwrap();
            let terms = pprm(&g.to_truth_table()).unwrap().term_count();
            let s = SingleTargetGate::new(2, vec![1, 3, 4], g).unwrap();
            let want: Vec<u32> = (0..16).map(|x| s.apply(4, x)).collect();
            for method in [MappingMethod::Pprm, MappingMethod::EsopGreedy] {
                let cascade = stg_to_toffoli(&s, method);
                assert_eq!(cascade_perm(4, &cascade), want);
                assert_eq!(cascade.len(), control_esop(&s, method).term_count());
                if method == MappingMethod::Pprm {
                    assert_eq!(cascade.len(), terms);
                    assert!(cascade.iter().all(MpmctGate::is_mct));
                } else {
                    assert!(cascade.len() <= terms);
                }
            }
        }
    }
}
