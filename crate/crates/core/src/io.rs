//! Plain-text graph and X3C files.
//!
//! Graph file: a header `n m`, then `m` lines `u v` with 0-based endpoints,
//! then optional lines `w u weight`. X3C file: a header `n m`, then `m`
//! lines `a b c`. Blank lines and everything after `#` are ignored.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::Graph;
use crate::reductions::X3CInstance;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    /// 1-based; 0 when the problem is not tied to a line.
    pub line: usize,
    pub msg: String,
}

fn err(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError {
        line,
        msg: msg.into(),
    }
}

/// Non-empty lines with comments stripped, paired with their line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn number(line: usize, tok: &str) -> Result<usize, ParseError> {
    tok.parse()
        .map_err(|_| err(line, format!("expected a non-negative integer, got {tok:?}")))
}

fn header<'a>(
    lines: &mut impl Iterator<Item = (usize, Vec<&'a str>)>,
) -> Result<(usize, usize), ParseError> {
    let (line, toks) = lines.next().ok_or_else(|| err(0, "missing header \"n m\""))?;
    match toks[..] {
        [n, m] => Ok((number(line, n)?, number(line, m)?)),
        _ => Err(err(line, "header must be \"n m\"")),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (n, m) = header(&mut lines)?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    let mut weights: Option<Vec<f64>> = None;
    for (line, toks) in lines {
        if toks[0] == "w" {
            let [_, u, wt] = toks[..] else {
                return Err(err(line, "weight line must be \"w u weight\""));
            };
            let u = number(line, u)?;
            if u >= n {
                return Err(err(line, format!("vertex {u} out of range")));
            }
            let wt: f64 = wt
                .parse()
                .ok()
                .filter(|w: &f64| w.is_finite())
                .ok_or_else(|| err(line, format!("bad weight {wt:?}")))?;
            weights.get_or_insert_with(|| vec![1.0; n])[u] = wt;
            continue;
        }
        if weights.is_some() {
            return Err(err(line, "edge line after weight lines"));
        }
        let [u, v] = toks[..] else {
            return Err(err(line, "edge line must be \"u v\""));
        };
        let (u, v) = (number(line, u)?, number(line, v)?);
        if u >= n || v >= n {
            return Err(err(line, format!("edge {u} {v} has an endpoint >= {n}")));
        }
        if u == v {
            return Err(err(line, format!("self-loop at {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(err(line, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(err(0, format!("header announces {m} edges, found {}", edges.len())));
    }
    let g = Graph::new(n, edges).map_err(|e| err(0, e.to_string()))?;
    match weights {
        Some(w) => g.with_weights(w).map_err(|e| err(0, e.to_string())),
        None => Ok(g),
    }
}

/// Canonical form: edges as `u v` with `u < v` in sorted order, then the
/// weights that differ from 1.
pub fn print_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    if let Some(w) = g.weights() {
        for (u, &wt) in w.iter().enumerate() {
            if wt != 1.0 {
                let _ = writeln!(out, "w {u} {wt}");
            }
        }
    }
    out
}

pub fn parse_x3c(text: &str) -> Result<X3CInstance, ParseError> {
    let mut lines = content_lines(text);
    let (n, m) = header(&mut lines)?;
    let mut triples = Vec::with_capacity(m);
    for (line, toks) in lines {
        let [a, b, c] = toks[..] else {
            return Err(err(line, "triple line must be \"a b c\""));
        };
        triples.push([number(line, a)?, number(line, b)?, number(line, c)?]);
    }
    if triples.len() != m {
        return Err(err(0, format!("header announces {m} triples, found {}", triples.len())));
    }
    X3CInstance::new(n, triples).map_err(|e| err(0, e.to_string()))
}

pub fn print_x3c(h: &X3CInstance) -> String {
    let mut out = format!("{} {}\n", h.n(), h.m());
    for [a, b, c] in h.triples() {
        let _ = writeln!(out, "{a} {b} {c}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn canonical_c6() {
        let text = print_graph(&cycle(6));
        assert_eq!(text, "6 6\n0 1\n0 5\n1 2\n2 3\n3 4\n4 5\n");
        assert_eq!(parse_graph(&text).unwrap(), cycle(6));
    }

    #[test]
    fn comments_blank_lines_and_weights() {
        let text = "# a path\n3 2\n\n1 0  # reversed\n1 2\nw 2 2.5\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.weights(), Some(&[1.0, 1.0, 2.5][..]));
        assert_eq!(print_graph(&g), "3 2\n0 1\n1 2\nw 2 2.5\n");
        assert_eq!(parse_graph(&print_graph(&g)).unwrap(), g);
    }

    #[test]
    fn malformed_inputs() {
        for (text, line) in [
            ("", 0),
            ("3\n", 1),
            ("3 1\n0 3\n", 2),
            ("3 1\n1 1\n", 2),
            ("3 2\n0 1\n1 0\n", 3),
            ("3 2\n0 1\n", 0),
            ("3 1\n0 1 2\n", 2),
            ("3 1\n0 x\n", 2),
            ("3 1\n0 1\nw 0 nan\n", 3),
            ("3 1\nw 0 2\n0 1\n", 3),
        ] {
            assert_eq!(parse_graph(text).unwrap_err().line, line, "{text:?}");
        }
    }

    #[test]
    fn x3c_round_trip() {
        let h = X3CInstance::new(6, vec![[2, 1, 0], [3, 4, 5], [0, 3, 5]]).unwrap();
        let text = print_x3c(&h);
        assert_eq!(text, "6 3\n0 1 2\n3 4 5\n0 3 5\n");
        assert_eq!(parse_x3c(&text).unwrap(), h);
        assert!(parse_x3c("6 1\n0 0 1\n").is_err());
        assert!(parse_x3c("6 1\n0 1 6\n").is_err());
        assert!(parse_x3c("6 2\n0 1 2\n").is_err());
    }
}
