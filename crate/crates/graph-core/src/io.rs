//! Plain-text graph format.
//!
//! ```text
//! # comment
//! g <n> <m>
//! e <u> <v>        (m lines, 0-based)
//! c <v> <color>    (optional)
//! ```

use crate::color::ColorTable;
use crate::error::ParseError;
use crate::graph::{vertex_cap, ColoredGraph};

fn err(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError { line, msg: msg.into() }
}

fn parse_usize(tok: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    let tok = tok.ok_or_else(|| err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| err(line, format!("bad {what} '{tok}'")))
}

/// Parses one graph. Color strings are interned into `table`.
pub fn parse_graph(text: &str, table: &mut ColorTable) -> Result<ColoredGraph, ParseError> {
    let mut graph: Option<ColoredGraph> = None;
    let mut expected_m = 0;
    let mut seen_m = 0;
    let mut colored = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut toks = line.split_whitespace();
        let tag = toks.next().unwrap();
        match (tag, graph.as_mut()) {
            ("g", None) => {
                let n = parse_usize(toks.next(), line_no, "vertex count")?;
                expected_m = parse_usize(toks.next(), line_no, "edge count")?;
                if toks.next().is_some() {
                    return Err(err(line_no, "trailing tokens after header"));
                }
                if n > vertex_cap() {
                    return Err(err(line_no, format!("{n} vertices exceeds cap {}", vertex_cap())));
                }
                graph = Some(ColoredGraph::empty(n));
                colored = vec![false; n];
            }
            ("g", Some(_)) => return Err(err(line_no, "second header")),
            (_, None) => return Err(err(line_no, "expected header 'g <n> <m>'")),
            ("e", Some(g)) => {
                let u = parse_usize(toks.next(), line_no, "endpoint")?;
                let v = parse_usize(toks.next(), line_no, "endpoint")?;
                if toks.next().is_some() {
                    return Err(err(line_no, "trailing tokens after edge"));
                }
                let n = g.n();
                if u >= n || v >= n {
                    return Err(err(line_no, format!("endpoint out of range for n = {n}")));
                }
                if u == v {
                    return Err(err(line_no, format!("loop at {u}")));
                }
                if g.has_edge(u, v) {
                    return Err(err(line_no, format!("duplicate edge {u} {v}")));
                }
                g.add_edge(u, v);
                seen_m += 1;
            }
            ("c", Some(g)) => {
                let v = parse_usize(toks.next(), line_no, "vertex")?;
                if v >= g.n() {
                    return Err(err(line_no, format!("vertex {v} out of range")));
                }
                if colored[v] {
                    return Err(err(line_no, format!("vertex {v} colored twice")));
                }
                let rest = line[1..].trim_start();
                let desc = rest[rest.find(char::is_whitespace).unwrap_or(rest.len())..].trim();
                colored[v] = true;
                g.set_color(v, table.intern(desc));
            }
            (other, Some(_)) => return Err(err(line_no, format!("unknown line tag '{other}'"))),
        }
    }
    let mut g = graph.ok_or_else(|| err(0, "missing header"))?;
    if seen_m != expected_m {
        return Err(err(0, format!("header announces {expected_m} edges, found {seen_m}")));
    }
    let default = table.intern("");
    for (v, done) in colored.iter().enumerate() {
        if !done {
            g.set_color(v, default);
        }
    }
    Ok(g)
}

/// Writes the canonical text form: sorted edges, then color lines for every
/// vertex whose color is not the default.
pub fn write_graph(g: &ColoredGraph, table: &ColorTable) -> String {
    let edges = g.edges();
    let mut out = format!("g {} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("e {u} {v}\n"));
    }
    for v in 0..g.n() {
        let c = g.color(v);
        let desc = table.describe(c).map(str::to_string).unwrap_or_else(|| format!("#{c}"));
        if !desc.is_empty() {
            out.push_str(&format!("c {v} {desc}\n"));
        }
    }
    out
}
