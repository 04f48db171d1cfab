//! Plain-text serialization for circuits, topologies, and qubit maps.
//!
//! # Overview
//!
//! All three formats are line-oriented with `#` comments and 0-based
//! indices:
//!
//! * **Circuits** — a `qubits <n>` header followed by one `cnot <control>
//!   <target>` line per gate.
//! * **Topologies** — a `qubits <n>` header followed by one `edge <u> <v>`
//!   line per coupling.
//! * **Maps** — `# map <register> <logical>` comment lines, one per wire,
//!   embedded in a circuit file. A circuit without map comments denotes the
//!   identity map.
//!
//! Parsers report [`Error::Parse`] with the 1-based line number of the
//! offending line; writers emit text the parsers accept verbatim.
//!
//! # Example
//!
//! ```
//! use parityroute::format::{parse_circuit, write_circuit};
//!
//! let text = "qubits 3\ncnot 0 1\ncnot 2 1\n";
//! let c = parse_circuit(text).unwrap();
//! assert_eq!(c.len(), 2);
//! assert_eq!(write_circuit(&c), text);
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::parity::{CnotCircuit, QubitMap};
use crate::topology::Topology;

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Strips the comment tail and surrounding whitespace from one line.
fn significant(line: &str) -> &str {
    let code = line.split('#').next().unwrap_or("");
    code.trim()
}

fn parse_index(token: &str, line: usize) -> Result<usize> {
    token
        .parse()
        .map_err(|_| parse_error(line, format!("expected a non-negative integer, got `{token}`")))
}

/// Splits a non-comment line into its keyword and two integer arguments.
fn parse_pair_line(code: &str, line: usize, keyword: &str) -> Result<(usize, usize)> {
    let mut tokens = code.split_whitespace();
    let head = tokens.next().unwrap_or("");
    if head != keyword {
        return Err(parse_error(
            line,
            format!("expected `{keyword} <a> <b>`, got `{code}`"),
        ));
    }
    let a = tokens
        .next()
        .ok_or_else(|| parse_error(line, format!("`{keyword}` needs two arguments")))?;
    let b = tokens
        .next()
        .ok_or_else(|| parse_error(line, format!("`{keyword}` needs two arguments")))?;
    if tokens.next().is_some() {
        return Err(parse_error(
            line,
            format!("`{keyword}` takes exactly two arguments"),
        ));
    }
    Ok((parse_index(a, line)?, parse_index(b, line)?))
}

/// Reads the `qubits <n>` header, returning `(n, header line number)`.
fn parse_header<'a>(
    lines: impl Iterator<Item = (usize, &'a str)>,
    what: &str,
) -> Result<(usize, usize)> {
    for (line, raw) in lines {
        let code = significant(raw);
        if code.is_empty() {
            continue;
        }
        let mut tokens = code.split_whitespace();
        if tokens.next() != Some("qubits") {
            return Err(parse_error(
                line,
                format!("{what} must start with `qubits <n>`, got `{code}`"),
            ));
        }
        let n = tokens
            .next()
            .ok_or_else(|| parse_error(line, "`qubits` needs one argument"))?;
        if tokens.next().is_some() {
            return Err(parse_error(line, "`qubits` takes exactly one argument"));
        }
        return Ok((parse_index(n, line)?, line));
    }
    Err(parse_error(1, format!("empty {what}: missing `qubits <n>` header")))
}

/// Parses a circuit file.
///
/// # Errors
///
/// [`Error::Parse`] on malformed lines; [`Error::IndexOutOfRange`] /
/// [`Error::EqualIndices`] when a gate references a bad wire.
pub fn parse_circuit(text: &str) -> Result<CnotCircuit> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (n, _) = parse_header(&mut lines, "circuit")?;
    let mut c = CnotCircuit::empty(n);
    for (line, raw) in lines {
        let code = significant(raw);
        if code.is_empty() {
            continue;
        }
        let (control, target) = parse_pair_line(code, line, "cnot")?;
        c.push(control, target)
            .map_err(|e| parse_error(line, e.to_string()))?;
    }
    Ok(c)
}

/// Renders a circuit in the format [`parse_circuit`] accepts.
pub fn write_circuit(c: &CnotCircuit) -> String {
    let mut out = format!("qubits {}\n", c.n_qubits());
    for gate in c.gates() {
        writeln!(out, "{gate}").expect("writing to a String cannot fail");
    }
    out
}

/// Parses a topology file.
///
/// # Errors
///
/// [`Error::Parse`] on malformed lines; [`Error::IndexOutOfRange`] /
/// [`Error::EqualIndices`] when an edge references a bad vertex.
pub fn parse_topology(text: &str) -> Result<Topology> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (n, _) = parse_header(&mut lines, "topology")?;
    let mut edges = Vec::new();
    let mut edge_lines = Vec::new();
    for (line, raw) in lines {
        let code = significant(raw);
        if code.is_empty() {
            continue;
        }
        edges.push(parse_pair_line(code, line, "edge")?);
        edge_lines.push(line);
    }
    Topology::new(n, edges.iter().copied()).map_err(|e| {
        // Topology::new cannot say which edge was bad, so point at the
        // first edge line for context.
        parse_error(edge_lines.first().copied().unwrap_or(1), e.to_string())
    })
}

/// Renders a topology in the format [`parse_topology`] accepts.
///
/// Only active vertices' couplings are written; the header keeps the
/// original vertex count so indices stay stable.
pub fn write_topology(g: &Topology) -> String {
    let mut out = format!("qubits {}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(out, "edge {u} {v}").expect("writing to a String cannot fail");
    }
    out
}

/// Extracts the qubit map from `# map <register> <logical>` comments.
///
/// Returns the identity map on `n` wires when no map comments are present.
///
/// # Errors
///
/// [`Error::Parse`] on malformed map comments, duplicate assignments, or
/// out-of-range wires.
pub fn parse_map_comments(text: &str, n: usize) -> Result<QubitMap> {
    let mut map = QubitMap::unassigned(n);
    let mut saw_any = false;
    for (line, raw) in text.lines().enumerate().map(|(i, l)| (i + 1, l)) {
        let Some(comment) = raw.split_once('#').map(|(_, c)| c.trim()) else {
            continue;
        };
        let Some(rest) = comment.strip_prefix("map") else {
            continue;
        };
        if !rest.starts_with(char::is_whitespace) {
            continue;
        }
        let mut tokens = rest.split_whitespace();
        let register = tokens
            .next()
            .ok_or_else(|| parse_error(line, "`# map` needs two arguments"))?;
        let logical = tokens
            .next()
            .ok_or_else(|| parse_error(line, "`# map` needs two arguments"))?;
        if tokens.next().is_some() {
            return Err(parse_error(line, "`# map` takes exactly two arguments"));
        }
        let register = parse_index(register, line)?;
        let logical = parse_index(logical, line)?;
        map.assign(register, logical)
            .map_err(|e| parse_error(line, e.to_string()))?;
        saw_any = true;
    }
    if !saw_any {
        return Ok(QubitMap::identity(n));
    }
    if !map.is_complete() {
        return Err(parse_error(
            text.lines().count().max(1),
            "map comments assign only part of the register",
        ));
    }
    Ok(map)
}

/// Renders a complete map as `# map <register> <logical>` comment lines.
///
/// # Errors
///
/// [`Error::IncompleteMap`] when some wire is unassigned.
pub fn write_map_comments(map: &QubitMap) -> Result<String> {
    let mut out = String::new();
    for (register, logical) in map.pairs()? {
        writeln!(out, "# map {register} {logical}").expect("writing to a String cannot fail");
    }
    Ok(out)
}
