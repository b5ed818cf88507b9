//! The `.rc` circuit text format.
//!
//! ```text
//! .lines 3
//! t x1 !x2 x3          # MPMCT: controls, then target
//! stg 3 : x1&!x2 ^ 1   # single-target gate on line 3
//! stg 1 : x2 with x3   # controls {2, 3}, g independent of x3
//! ```
//!
//! The control function of `stg` is serialized as its PPRM over line-named
//! variables, so output is canonical.

use super::{Circuit, Gate, MpmctGate, SingleTargetGate};
use crate::boolfn::{var_shift, ControlFunction, MAX_VARS};
use crate::esop::{format_esop, parse_esop, parse_var, pprm_bits, Cube, EsopExpr};
use crate::error::{Error, Result};

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, message: message.into() }
}

fn line_index(token: &str, line: usize, lines: usize) -> Result<usize> {
    let index = parse_var(token).ok_or_else(|| syntax(line, format!("invalid line name {token:?}")))?;
    if index == 0 || index > lines {
        return Err(Error::LineIndexOutOfRange { line, index, lines });
    }
    Ok(index)
}

fn parse_toffoli(rest: &str, line: usize, lines: usize) -> Result<Gate> {
    let tokens: Vec<&str> = rest.split_whitespace().collect();
    let Some((target_tok, control_toks)) = tokens.split_last() else {
        return Err(syntax(line, "gate needs a target line"));
    };
    if target_tok.starts_with('!') {
        return Err(syntax(line, "target line cannot be negated"));
    }
    let target = line_index(target_tok, line, lines)?;
    let mut used = vec![target];
    let (mut pos, mut neg) = (Vec::new(), Vec::new());
    for tok in control_toks {
        let (positive, name) = match tok.strip_prefix('!') {
            Some(name) => (false, name),
            None => (true, *tok),
        };
        let index = line_index(name, line, lines)?;
        if used.contains(&index) {
            return Err(Error::DuplicateControl { line, index });
        }
        used.push(index);
        if positive {
            pos.push(index);
        } else {
            neg.push(index);
        }
    }
    Ok(MpmctGate::new(target, pos, neg)?.into())
}

fn parse_stg(rest: &str, line: usize, lines: usize) -> Result<Gate> {
    let (target_tok, body) = rest
        .split_once(':')
        .ok_or_else(|| syntax(line, "expected `stg <target> : <expression>`"))?;
    let target_tok = target_tok.trim();
    let target: usize = target_tok
        .strip_prefix('x')
        .unwrap_or(target_tok)
        .parse()
        .map_err(|_| syntax(line, format!("invalid target {target_tok:?}")))?;
    if target == 0 || target > lines {
        return Err(Error::LineIndexOutOfRange { line, index: target, lines });
    }

    let (expr_text, with_text) = match body.split_once("with") {
        Some((e, w)) => (e, Some(w)),
        None => (body, None),
    };
    let expr = parse_esop(expr_text, lines, line)?;

    let mut in_expr = vec![false; lines + 1];
    for cube in expr.cubes() {
        for (var, _) in cube.literals() {
            in_expr[var] = true;
        }
    }
    let mut controls: Vec<usize> = (1..=lines).filter(|&l| in_expr[l]).collect();
    if let Some(with_text) = with_text {
        for tok in with_text.split(',') {
            let index = line_index(tok.trim(), line, lines)?;
            if controls.contains(&index) {
                return Err(Error::DuplicateControl { line, index });
            }
            controls.push(index);
        }
        controls.sort_unstable();
    }
    if controls.contains(&target) {
        return Err(Error::DuplicateControl { line, index: target });
    }

    let k = controls.len();
    let g = ControlFunction::from_fn(k, |pattern| {
        let state = controls.iter().enumerate().fold(0u32, |acc, (j, &c)| {
            let bit = (pattern >> (k - 1 - j)) & 1;
            acc | (bit << var_shift(lines, c))
        });
        expr.eval(state)
    })?;
    Ok(SingleTargetGate::new(target, controls, g)?.into())
}

pub fn parse_circuit(text: &str) -> Result<Circuit> {
    let mut circuit: Option<Circuit> = None;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (keyword, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
        let Some(c) = circuit.as_mut() else {
            if keyword != ".lines" {
                return Err(syntax(line, "expected `.lines N` header"));
            }
            let n: usize = rest
                .trim()
                .parse()
                .map_err(|_| syntax(line, format!("invalid line count {:?}", rest.trim())))?;
            if n == 0 || n > MAX_VARS {
                return Err(syntax(line, format!("line count must be in 1..={MAX_VARS}")));
            }
            circuit = Some(Circuit::empty(n));
            continue;
        };
        let lines = c.lines();
        let gate = match keyword {
            "t" => parse_toffoli(rest, line, lines)?,
            "stg" => parse_stg(rest, line, lines)?,
            ".lines" => return Err(syntax(line, "duplicate `.lines` header")),
            other => return Err(syntax(line, format!("unknown gate {other:?}"))),
        };
        c.gates.push(gate);
    }
    circuit.ok_or_else(|| syntax(last_line, "missing `.lines N` header"))
}

fn format_line(index: usize, positive: bool) -> String {
    if positive {
        format!("x{index}")
    } else {
        format!("!x{index}")
    }
}

/// The control function as a PPRM whose variables are named by line.
fn stg_expression(lines: usize, g: &SingleTargetGate) -> EsopExpr {
    let f = g.control_function();
    let local = pprm_bits(f.arity(), f.bits());
    let mut cubes: Vec<Cube> = local
        .cubes()
        .iter()
        .map(|cube| {
            cube.literals().fold(Cube::one(lines), |acc, (var, positive)| {
                acc.with_literal(g.controls()[var - 1], positive)
            })
        })
        .collect();
    cubes.sort();
    EsopExpr::new(lines, cubes).expect("cubes share the line count")
}

pub fn serialize_circuit(c: &Circuit) -> String {
    let mut out = format!(".lines {}\n", c.lines());
    for gate in c.gates() {
        match gate {
            Gate::Mpmct(m) => {
                let mut controls: Vec<(usize, bool)> = m
                    .positive_controls()
                    .iter()
                    .map(|&l| (l, true))
                    .chain(m.negative_controls().iter().map(|&l| (l, false)))
                    .collect();
                controls.sort_unstable();
                out.push('t');
                for (l, positive) in controls {
                    out.push(' ');
                    out.push_str(&format_line(l, positive));
                }
                out.push_str(&format!(" x{}\n", m.target()));
            }
            Gate::Stg(s) => {
                let expr = stg_expression(c.lines(), s);
                let mentioned: Vec<usize> = {
                    let mut seen = vec![false; c.lines() + 1];
                    for cube in expr.cubes() {
                        for (var, _) in cube.literals() {
                            seen[var] = true;
                        }
                    }
                    s.controls().iter().copied().filter(|&l| !seen[l]).collect()
                };
                out.push_str(&format!("stg {} : {}", s.target(), format_esop(&expr)));
                if !mentioned.is_empty() {
                    let names: Vec<String> = mentioned.iter().map(|&l| format!("x{l}")).collect();
                    out.push_str(&format!(" with {}", names.join(",")));
                }
                out.push('\n');
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_toffoli_line() {
        let c = parse_circuit(".lines 3\nt x1 x2 x3\n").unwrap();
        assert_eq!(c.gates(), &[Gate::Mpmct(MpmctGate::mct(3, vec![1, 2]).unwrap())]);
        let c = parse_circuit(".lines 3\nt !x2 x1 x3 # mixed\nt x2\n").unwrap();
        assert_eq!(
            serialize_circuit(&c),
            ".lines 3\nt x1 !x2 x3\nt x2\n"
        );
    }

    #[test]
    fn parses_stg_line() {
        let c = parse_circuit(".lines 3\nstg 3 : x1&!x2 ^ 1\n").unwrap();
        let Gate::Stg(s) = &c.gates()[0] else { panic!("expected stg") };
        assert_eq!(s.target(), 3);
        assert_eq!(s.controls(), &[1, 2]);
        // g(x1, x2) = x1·x̄2 ⊕ 1
        assert_eq!(s.control_function().bits(), &[true, true, false, true]);
        let text = serialize_circuit(&c);
        assert_eq!(text, ".lines 3\nstg 3 : 1 ^ x1 ^ x1&x2\n");
        assert_eq!(parse_circuit(&text).unwrap(), c);
    }

    #[test]
    fn with_suffix_keeps_unused_controls() {
        let c = parse_circuit(".lines 4\nstg 1 : x3 with x2, x4\nstg 2 : 0 with x1\n").unwrap();
        let Gate::Stg(s) = &c.gates()[0] else { panic!("expected stg") };
        assert_eq!(s.controls(), &[2, 3, 4]);
        assert_eq!(s.control_function().arity(), 3);
        let text = serialize_circuit(&c);
        assert_eq!(text, ".lines 4\nstg 1 : x3 with x2,x4\nstg 2 : 0 with x1\n");
        assert_eq!(parse_circuit(&text).unwrap(), c);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("t x1 x2\n", 1),
            (".lines 2\n\nt x1 x3\n", 3),
            (".lines 2\nfoo x1\n", 2),
            (".lines 2\nt x1 x1\n", 2),
            (".lines 3\nstg 2 : x1&x2\n", 2),
            (".lines 3\nstg 2 x1\n", 2),
            (".lines 3\nt !x1\n", 2),
        ];
        for (text, want) in cases {
            let err = parse_circuit(text).unwrap_err();
            let line = match err {
                Error::Syntax { line, .. }
                | Error::LineIndexOutOfRange { line, .. }
                | Error::DuplicateControl { line, .. } => line,
                other => panic!("unexpected error {other:?}"),
            };
            assert_eq!(line, want, "{text:?}");
        }
        assert!(matches!(
            parse_circuit(".lines 2\nt x1 x3\n"),
            Err(Error::LineIndexOutOfRange { index: 3, .. })
        ));
        assert!(matches!(
            parse_circuit(".lines 2\nt x1 x1\n"),
            Err(Error::DuplicateControl { index: 1, .. })
        ));
    }

    #[test]
    fn fuzz_round_trip() {
        use crate::circuit::tests::random_circuit;
        use rand::{Rng, SeedableRng};
        use rand_chacha::ChaCha8Rng;

        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..300 {
            let lines = rng.gen_range(1..=6);
            let len = rng.gen_range(0..12);
            let c = random_circuit(lines, len, &mut rng);
            let text = serialize_circuit(&c);
            let parsed = parse_circuit(&text).unwrap();
            assert_eq!(parsed, c);
            assert_eq!(serialize_circuit(&parsed), text);
        }
    }
}
