//! Plain line-oriented text formats: diffable, language-neutral, and strict.
//!
//! Instance files: a header `p d n`, then one line `u v c_1 ... c_d` per
//! ordered pair in lexicographic order, residues reduced mod `p`. Witness
//! files: a `cycle` line with the vertex sequence and a `sum` line with the
//! claimed label sum. ASCII, single spaces, LF line endings, no extras.

use std::fmt::Write as _;

use crate::cycle::LabelledDigraph;
use crate::gf::{FieldSpec, GroupVector};
use crate::{Error, Result};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Renders an instance byte-exactly: header, then arcs in lexicographic
/// `(u, v)` order with a trailing newline on every line.
pub fn render_instance(dg: &LabelledDigraph) -> String {
    let spec = dg.spec();
    let mut out = String::new();
    writeln!(out, "{} {} {}", spec.modulus(), spec.dimension(), dg.vertex_count()).unwrap();
    for (u, v, label) in dg.arcs() {
        write!(out, "{u} {v}").unwrap();
        for c in label.coords() {
            write!(out, " {c}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// Strict parse of an instance file: exact line count, lexicographic arc
/// order, reduced residues.
pub fn parse_instance(text: &str) -> Result<LabelledDigraph> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing header line"))?;
    let tokens: Vec<&str> = header.split(' ').collect();
    if tokens.len() != 3 {
        return Err(parse_err(1, "header must be 'p d n'"));
    }
    let p: u64 = tokens[0]
        .parse()
        .map_err(|_| parse_err(1, "p is not an integer"))?;
    let d: usize = tokens[1]
        .parse()
        .map_err(|_| parse_err(1, "d is not an integer"))?;
    let n: usize = tokens[2]
        .parse()
        .map_err(|_| parse_err(1, "n is not an integer"))?;
    let spec = FieldSpec::new(p, d)?;
    if n < 2 {
        return Err(parse_err(1, format!("n must be at least 2, got {n}")));
    }

    let mut expected = (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).filter(|&(u, v)| u != v);
    let mut arcs = Vec::with_capacity(n * (n - 1));
    let mut seen = 0usize;
    for (idx, line) in lines {
        let lineno = idx + 1;
        let Some((eu, ev)) = expected.next() else {
            return Err(parse_err(lineno, "more arc lines than ordered pairs"));
        };
        let tokens: Vec<&str> = line.split(' ').collect();
        if tokens.len() != 2 + d {
            return Err(parse_err(
                lineno,
                format!("expected {} tokens, got {}", 2 + d, tokens.len()),
            ));
        }
        let u: usize = tokens[0]
            .parse()
            .map_err(|_| parse_err(lineno, "bad tail vertex"))?;
        let v: usize = tokens[1]
            .parse()
            .map_err(|_| parse_err(lineno, "bad head vertex"))?;
        if (u, v) != (eu, ev) {
            return Err(parse_err(
                lineno,
                format!("expected arc ({eu}, {ev}) in lexicographic order, got ({u}, {v})"),
            ));
        }
        let mut coords = Vec::with_capacity(d);
        for t in &tokens[2..] {
            let c: u64 = t
                .parse()
                .map_err(|_| parse_err(lineno, "bad residue"))?;
            if c >= p {
                return Err(parse_err(lineno, format!("residue {c} is not reduced mod {p}")));
            }
            coords.push(c);
        }
        arcs.push((u, v, GroupVector::new(spec, coords)?));
        seen += 1;
    }
    if seen != n * (n - 1) {
        return Err(parse_err(
            seen + 1,
            format!("expected {} arc lines, got {seen}", n * (n - 1)),
        ));
    }
    LabelledDigraph::from_arcs(n, spec, arcs)
}

/// Renders a witness: the cycle line and the claimed sum line.
pub fn render_witness(vertices: &[usize], sum: &GroupVector) -> String {
    let mut out = String::from("cycle");
    for v in vertices {
        write!(out, " {v}").unwrap();
    }
    out.push('\n');
    out.push_str("sum");
    for c in sum.coords() {
        write!(out, " {c}").unwrap();
    }
    out.push('\n');
    out
}

/// Parses a witness file into the raw vertex sequence and claimed sum
/// residues; semantic checks happen against the instance.
pub fn parse_witness(text: &str) -> Result<(Vec<usize>, Vec<u64>)> {
    let mut lines = text.lines().enumerate();
    let (_, cycle_line) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing cycle line"))?;
    let tokens: Vec<&str> = cycle_line.split(' ').collect();
    if tokens.first() != Some(&"cycle") || tokens.len() < 3 {
        return Err(parse_err(1, "expected 'cycle v_0 v_1 ...' with at least two vertices"));
    }
    let vertices = tokens[1..]
        .iter()
        .map(|t| t.parse().map_err(|_| parse_err(1, "bad vertex id")))
        .collect::<std::result::Result<Vec<usize>, Error>>()?;
    let (_, sum_line) = lines
        .next()
        .ok_or_else(|| parse_err(2, "missing sum line"))?;
    let tokens: Vec<&str> = sum_line.split(' ').collect();
    if tokens.first() != Some(&"sum") || tokens.len() < 2 {
        return Err(parse_err(2, "expected 'sum c_1 ... c_d'"));
    }
    let sum = tokens[1..]
        .iter()
        .map(|t| t.parse().map_err(|_| parse_err(2, "bad residue")))
        .collect::<std::result::Result<Vec<u64>, Error>>()?;
    if let Some((idx, _)) = lines.next() {
        return Err(parse_err(idx + 1, "trailing content after the sum line"));
    }
    Ok((vertices, sum))
}
