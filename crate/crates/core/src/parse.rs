//! Line-oriented text serialization of Pauli IR programs.
//!
//! ```text
//! qubits 4
//! # one weighted string per line, axes written high qubit first
//! block param gamma {
//!   IIZZ * 1.0
//!   IZZI
//! }
//! block {
//!   XXII * -0.5
//! }
//! ```
//!
//! `param` defaults to 1.0 and `* 1.0` may be omitted; `#` starts a comment.

use std::fmt::Write as _;

use crate::pauli::{Parameter, PauliBlock, PauliString, Program, WeightedString};
use crate::{real, Error, Real, Result};

pub fn parse_program<F: Real>(text: &str) -> Result<Program<F>> {
    let mut n_qubits: Option<usize> = None;
    let mut blocks: Vec<PauliBlock<F>> = Vec::new();
    let mut current: Option<PauliBlock<F>> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(cut) => &raw[..cut],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let err = |col: usize, msg: String| Error::Parse { line: line_no, col, msg };

        if n_qubits.is_none() {
            let rest = line
                .strip_prefix("qubits")
                .ok_or_else(|| err(1, "expected `qubits <n>` header".into()))?;
            let n: usize = rest
                .trim()
                .parse()
                .map_err(|_| err(8, format!("invalid qubit count `{}`", rest.trim())))?;
            if n == 0 {
                return Err(err(8, "qubit count must be positive".into()));
            }
            n_qubits = Some(n);
            continue;
        }
        let n = n_qubits.unwrap();

        if let Some(rest) = line.strip_prefix("block") {
            if current.is_some() {
                return Err(err(1, "nested `block` without closing `}`".into()));
            }
            let rest = rest.trim();
            let rest = rest
                .strip_suffix('{')
                .ok_or_else(|| err(line.len(), "expected `{` at end of block header".into()))?
                .trim();
            let parameter = if rest.is_empty() {
                Parameter::Literal(F::one())
            } else {
                let word = rest
                    .strip_prefix("param")
                    .ok_or_else(|| err(7, format!("unexpected token `{rest}` in block header")))?
                    .trim();
                if word.is_empty() {
                    return Err(err(7, "`param` needs a value or symbol".into()));
                }
                match word.parse::<f64>() {
                    Ok(v) => Parameter::Literal(real(v)),
                    Err(_) => {
                        if word.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
                            && word.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                        {
                            Parameter::Symbol(word.to_string())
                        } else {
                            return Err(err(7, format!("invalid parameter `{word}`")));
                        }
                    }
                }
            };
            current = Some(PauliBlock::new(Vec::new(), parameter));
            continue;
        }

        if line == "}" {
            let block =
                current.take().ok_or_else(|| err(1, "unmatched `}` outside a block".into()))?;
            blocks.push(block);
            continue;
        }

        let block = current
            .as_mut()
            .ok_or_else(|| err(1, format!("unexpected `{line}` outside a block")))?;
        let (axes_text, weight) = match line.split_once('*') {
            Some((a, w)) => {
                let w = w.trim();
                let v: f64 = w
                    .parse()
                    .map_err(|_| err(line.find('*').unwrap() + 2, format!("invalid weight `{w}`")))?;
                if !v.is_finite() {
                    return Err(err(1, "weight must be finite".into()));
                }
                (a.trim(), real(v))
            }
            None => (line, F::one()),
        };
        let string: PauliString = axes_text.parse().map_err(|e| match e {
            Error::Parse { col, msg, .. } => err(col, msg),
            other => other,
        })?;
        if string.len() != n {
            return Err(err(
                1,
                format!("string has {} axes but the program declares {} qubits", string.len(), n),
            ));
        }
        block.strings.push(WeightedString { string, weight });
    }

    if current.is_some() {
        return Err(Error::Parse { line: text.lines().count(), col: 1, msg: "unclosed block".into() });
    }
    let n = n_qubits.ok_or(Error::Parse { line: 1, col: 1, msg: "missing `qubits` header".into() })?;
    Program::new(n, blocks)
}

pub fn emit_program<F: Real>(p: &Program<F>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "qubits {}", p.n_qubits);
    for block in &p.blocks {
        match &block.parameter {
            Parameter::Literal(v) => {
                let _ = writeln!(out, "block param {v} {{");
            }
            Parameter::Symbol(name) => {
                let _ = writeln!(out, "block param {name} {{");
            }
        }
        for ws in &block.strings {
            let _ = writeln!(out, "  {} * {}", ws.string, ws.weight);
        }
        out.push_str("}\n");
    }
    out
}
