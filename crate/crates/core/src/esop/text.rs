//! Cube grammar: literals `xN` / `!xN` joined by `&`, the constant cube `1`,
//! cubes joined by `^`. The empty expression is written `0`.

use super::{Cube, EsopExpr};
use crate::boolfn::var_shift;
use crate::error::{Error, Result};

/// Parses `text` as an expression over `x1..x{n_vars}`. `line` is used in
/// error reports.
pub fn parse_esop(text: &str, n_vars: usize, line: usize) -> Result<EsopExpr> {
    let syntax = |message: String| Error::Syntax { line, message };
    let text = text.trim();
    if text.is_empty() {
        return Err(syntax("empty expression".into()));
    }
    if text == "0" {
        return Ok(EsopExpr::zero(n_vars));
    }
    let mut cubes = Vec::new();
    for term in text.split('^') {
        let term = term.trim();
        if term.is_empty() {
            return Err(syntax("empty product term".into()));
        }
        if term == "1" {
            cubes.push(Cube::one(n_vars));
            continue;
        }
        let mut cube = Cube::one(n_vars);
        for lit in term.split('&') {
            let lit = lit.trim();
            let (positive, name) = match lit.strip_prefix('!') {
                Some(rest) => (false, rest.trim_start()),
                None => (true, lit),
            };
            let var = parse_var(name).ok_or_else(|| syntax(format!("invalid literal {lit:?}")))?;
            if var == 0 || var > n_vars {
                return Err(Error::LineIndexOutOfRange { line, index: var, lines: n_vars });
            }
            if cube.care & (1 << var_shift(n_vars, var)) != 0 {
                return Err(Error::DuplicateControl { line, index: var });
            }
            cube = cube.with_literal(var, positive);
        }
        cubes.push(cube);
    }
    EsopExpr::new(n_vars, cubes)
}

/// Parses a variable name `xN`.
pub(crate) fn parse_var(name: &str) -> Option<usize> {
    let digits = name.strip_prefix('x')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

pub fn format_cube(c: &Cube) -> String {
    if c.is_one() {
        return "1".to_string();
    }
    c.literals()
        .map(|(var, positive)| if positive { format!("x{var}") } else { format!("!x{var}") })
        .collect::<Vec<_>>()
        .join("&")
}

pub fn format_esop(e: &EsopExpr) -> String {
    if e.cubes().is_empty() {
        return "0".to_string();
    }
    e.cubes().iter().map(format_cube).collect::<Vec<_>>().join(" ^ ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_grammar_example() {
        let e = parse_esop("x1&!x2 ^ x3", 3, 1).unwrap();
        assert_eq!(e.term_count(), 2);
        assert_eq!(e.cubes()[0], Cube::new(3, 0b110, 0b100).unwrap());
        assert_eq!(e.cubes()[1], Cube::new(3, 0b001, 0b001).unwrap());
        assert_eq!(format_esop(&e), "x1&!x2 ^ x3");
    }

    #[test]
    fn constants() {
        assert_eq!(parse_esop("0", 2, 1).unwrap().term_count(), 0);
        let one = parse_esop("1", 2, 1).unwrap();
        assert!(one.cubes()[0].is_one());
        assert_eq!(format_esop(&one), "1");
        assert_eq!(format_esop(&EsopExpr::zero(2)), "0");
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_esop("x1 ^", 2, 4), Err(Error::Syntax { line: 4, .. })));
        assert!(matches!(parse_esop("y1", 2, 1), Err(Error::Syntax { .. })));
        assert!(matches!(parse_esop("x3", 2, 1), Err(Error::LineIndexOutOfRange { index: 3, .. })));
        assert!(matches!(parse_esop("x1&!x1", 2, 1), Err(Error::DuplicateControl { index: 1, .. })));
        assert!(matches!(parse_esop("", 2, 1), Err(Error::Syntax { .. })));
    }
}
