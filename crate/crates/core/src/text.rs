//! Line-oriented circuit text format.
//!
//! ```text
//! # comment
//! qubits 4
//! h q0 @superposition
//! rz(1.57079632679) q1
//! mcz q0 q1 q2 q3 @oraclecore
//! measure all
//! ```
//!
//! One statement per line; `#` starts a comment. The `qubits` header comes
//! first, `measure all` may appear once as the last statement. Mnemonics are
//! `id x sx sxdg h z rz(<radians>) cx mcz mcx`; operands are `q<i>`; an
//! optional trailing `@tag` names the layer.
//!
//! [`emit`] writes the canonical form: no comments or blank lines, single
//! spaces, RZ angles with 12 significant digits, and tags only when present.

use std::fmt::Write as _;

use thiserror::Error;

use crate::circuit::{Circuit, CircuitError, Instruction};
use crate::gate::{GateKind, LayerTag};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("line {line}: syntax error: {message}")]
    SyntaxError { line: usize, message: String },
    #[error("line {line}: unknown gate {name:?}")]
    UnknownGate { line: usize, name: String },
    #[error("line {line}: qubit q{qubit} out of range for {n} qubits")]
    OutOfRangeQubit { line: usize, qubit: usize, n: usize },
    #[error("line {line}: {source}")]
    InvalidInstruction { line: usize, source: CircuitError },
    #[error("missing `qubits <n>` header")]
    MissingHeader,
}

impl ParseError {
    pub fn line(&self) -> Option<usize> {
        match self {
            ParseError::SyntaxError { line, .. }
            | ParseError::UnknownGate { line, .. }
            | ParseError::OutOfRangeQubit { line, .. }
            | ParseError::InvalidInstruction { line, .. } => Some(*line),
            ParseError::MissingHeader => None,
        }
    }
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::SyntaxError {
        line,
        message: message.into(),
    }
}

fn parse_mnemonic(line: usize, word: &str, operands: usize) -> Result<GateKind, ParseError> {
    if let Some(rest) = word.strip_prefix("rz(") {
        let inner = rest
            .strip_suffix(')')
            .ok_or_else(|| syntax(line, format!("unterminated angle in {word:?}")))?;
        let theta: f64 = inner
            .trim()
            .parse()
            .map_err(|_| syntax(line, format!("bad angle {inner:?}")))?;
        if !theta.is_finite() {
            return Err(syntax(line, format!("angle {inner:?} is not finite")));
        }
        return Ok(GateKind::Rz(theta));
    }
    Ok(match word {
        "id" => GateKind::I,
        "x" => GateKind::X,
        "sx" => GateKind::Sx,
        "sxdg" => GateKind::Sxdg,
        "h" => GateKind::H,
        "z" => GateKind::Z,
        "cx" => GateKind::Cx,
        "mcz" => GateKind::Mcz(operands),
        "mcx" => GateKind::Mcx(operands),
        _ => {
            return Err(ParseError::UnknownGate {
                line,
                name: word.to_string(),
            })
        }
    })
}

fn parse_operand(line: usize, word: &str) -> Result<usize, ParseError> {
    word.strip_prefix('q')
        .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
        .and_then(|d| d.parse().ok())
        .ok_or_else(|| syntax(line, format!("malformed operand {word:?}")))
}

pub fn parse(text: &str) -> Result<Circuit, ParseError> {
    let mut circuit: Option<Circuit> = None;
    let mut measured = false;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let words: Vec<&str> = content.split_whitespace().collect();

        if words[0] == "qubits" {
            if circuit.is_some() {
                return Err(syntax(line, "duplicate qubits header"));
            }
            let n = match words.as_slice() {
                [_, n] => n
                    .parse::<usize>()
                    .map_err(|_| syntax(line, format!("bad qubit count {n:?}")))?,
                _ => return Err(syntax(line, "expected `qubits <n>`")),
            };
            circuit = Some(
                Circuit::new(n)
                    .map_err(|source| ParseError::InvalidInstruction { line, source })?,
            );
            continue;
        }

        let c = circuit.as_mut().ok_or(ParseError::MissingHeader)?;
        if measured {
            return Err(syntax(line, "nothing may follow `measure all`"));
        }
        if words[0] == "measure" {
            if words.as_slice() != ["measure", "all"] {
                return Err(syntax(line, "expected `measure all`"));
            }
            measured = true;
            c.measure_all = true;
            continue;
        }

        let (tag, operand_words) = match words.last() {
            Some(last) if last.starts_with('@') => {
                let tag = LayerTag::from_label(&last[1..])
                    .ok_or_else(|| syntax(line, format!("unknown tag {last:?}")))?;
                (tag, &words[1..words.len() - 1])
            }
            _ => (LayerTag::Untagged, &words[1..]),
        };
        let kind = parse_mnemonic(line, words[0], operand_words.len())?;
        let qubits = operand_words
            .iter()
            .map(|w| parse_operand(line, w))
            .collect::<Result<Vec<_>, _>>()?;
        c.push(Instruction::tagged(kind, qubits, tag))
            .map_err(|source| match source {
                CircuitError::OutOfRangeQubit { qubit, n } => {
                    ParseError::OutOfRangeQubit { line, qubit, n }
                }
                source => ParseError::InvalidInstruction { line, source },
            })?;
    }
    circuit.ok_or(ParseError::MissingHeader)
}

/// Formats like C's `%.12g`: 12 significant digits, trailing zeros removed.
pub fn format_angle(theta: f64) -> String {
    const DIGITS: usize = 12;
    if theta == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{:.*e}", DIGITS - 1, theta);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= DIGITS as i32 {
        let mantissa = trim_zeros(mantissa);
        return format!("{mantissa}e{exp}");
    }
    let decimals = (DIGITS as i32 - 1 - exp).max(0) as usize;
    trim_zeros(&format!("{theta:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn emit(circuit: &Circuit) -> String {
    let mut out = String::new();
    writeln!(out, "qubits {}", circuit.num_qubits()).unwrap();
    for op in circuit.ops() {
        match op.kind {
            GateKind::Rz(theta) => write!(out, "rz({})", format_angle(theta)).unwrap(),
            other => out.push_str(other.mnemonic()),
        }
        for q in &op.qubits {
            write!(out, " q{q}").unwrap();
        }
        if let Some(label) = op.tag.label() {
            write!(out, " @{label}").unwrap();
        }
        out.push('\n');
    }
    if circuit.measure_all {
        out.push_str("measure all\n");
    }
    out
}
