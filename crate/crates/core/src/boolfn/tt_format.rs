//! The `.tt` truth-table text format.
//!
//! ```text
//! # comment
//! .i 2
//! .o 1
//! 0
//! 0
//! 0
//! 1
//! ```
//!
//! Data lines follow in ascending input order; each holds the outputs
//! `f1..fM` left to right.

use super::{TruthTable, MAX_VARS};
use crate::error::{Error, Result};

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, message: message.into() }
}

fn header_value(line: usize, rest: &str, name: &str) -> Result<usize> {
    let value: usize = rest
        .trim()
        .parse()
        .map_err(|_| syntax(line, format!("invalid {name} count {:?}", rest.trim())))?;
    if value > MAX_VARS {
        return Err(Error::TooManyVariables { n: value, max: MAX_VARS });
    }
    Ok(value)
}

pub fn parse_tt(text: &str) -> Result<TruthTable> {
    let mut n_inputs = None;
    let mut n_outputs = None;
    let mut rows = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(rest) = content.strip_prefix(".i") {
            if n_inputs.is_some() || !rows.is_empty() {
                return Err(syntax(line, "unexpected .i header"));
            }
            n_inputs = Some(header_value(line, rest, "input")?);
            continue;
        }
        if let Some(rest) = content.strip_prefix(".o") {
            if n_outputs.is_some() || !rows.is_empty() {
                return Err(syntax(line, "unexpected .o header"));
            }
            let m = header_value(line, rest, "output")?;
            if m == 0 {
                return Err(syntax(line, "a table needs at least one output"));
            }
            n_outputs = Some(m);
            continue;
        }
        let (Some(n), Some(m)) = (n_inputs, n_outputs) else {
            return Err(syntax(line, "data before .i/.o headers"));
        };
        if content.len() != m {
            return Err(syntax(line, format!("expected {m} output bits, got {:?}", content)));
        }
        if rows.len() == 1 << n {
            return Err(syntax(line, format!("more than {} data lines", 1usize << n)));
        }
        let mut word = 0u32;
        for c in content.chars() {
            let bit = match c {
                '0' => 0,
                '1' => 1,
                _ => return Err(syntax(line, format!("invalid character {c:?}"))),
            };
            word = (word << 1) | bit;
        }
        rows.push(word);
    }

    let (Some(n), Some(m)) = (n_inputs, n_outputs) else {
        return Err(syntax(last_line, "missing .i/.o headers"));
    };
    if rows.len() != 1 << n {
        return Err(syntax(
            last_line,
            format!("expected {} data lines, got {}", 1usize << n, rows.len()),
        ));
    }
    TruthTable::from_rows(n, m, rows)
}

pub fn serialize_tt(f: &TruthTable) -> String {
    let m = f.n_outputs();
    let mut out = format!(".i {}\n.o {}\n", f.n_inputs(), m);
    out.reserve(f.rows().len() * (m + 1));
    for &w in f.rows() {
        for j in (0..m).rev() {
            out.push(if (w >> j) & 1 == 1 { '1' } else { '0' });
        }
        out.push('\n');
    }
    out
}
