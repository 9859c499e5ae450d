//! Edge-list and DIMACS `.gr` readers, and the canonical edge-list writer.
//!
//! Edge-list format: a header `n m` (or `n m w` for weighted graphs), then one
//! edge per line as `u v` or `u v weight`, 0-indexed. Lines starting with `#`
//! are comments. DIMACS shortest-path files (`p sp n m` header, `a u v w`
//! arcs, 1-indexed, `c` comments) are detected from their `p` line.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("missing header line")]
    MissingHeader,
    #[error("header declares {declared} edges but {found} were listed")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ParseOptions {
    pub directed: bool,
    /// Decimal weights are multiplied by `10^weight_scale` and must be
    /// integral afterwards.
    pub weight_scale: u32,
}


impl ParseOptions {
    pub fn directed(directed: bool) -> Self {
        ParseOptions {
            directed,
            ..Default::default()
        }
    }
}

fn malformed(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Malformed {
        line,
        message: message.into(),
    }
}

fn parse_usize(token: &str, line: usize, what: &str) -> Result<usize, ParseError> {
    token
        .parse()
        .map_err(|_| malformed(line, format!("invalid {what} `{token}`")))
}

/// Parses a possibly fractional, possibly negative decimal weight scaled by
/// `10^scale`.
fn parse_weight(token: &str, scale: u32, line: usize) -> Result<i64, ParseError> {
    let bad = || malformed(line, format!("invalid weight `{token}`"));
    let (negative, digits) = match token.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, token.strip_prefix('+').unwrap_or(token)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let scale = scale as usize;
    let (kept, dropped) = frac_part.split_at(frac_part.len().min(scale));
    if dropped.bytes().any(|b| b != b'0') {
        return Err(malformed(
            line,
            format!("weight `{token}` is not integral after scaling by 10^{scale}"),
        ));
    }
    let mut text = String::with_capacity(int_part.len() + scale);
    text.push_str(int_part);
    text.push_str(kept);
    text.extend(std::iter::repeat_n('0', scale - kept.len()));
    let magnitude: i64 = if text.is_empty() {
        0
    } else {
        text.parse().map_err(|_| bad())?
    };
    Ok(if negative { -magnitude } else { magnitude })
}

/// Parses either supported text format into a canonical [`Graph`].
pub fn parse_edge_list(text: &str, options: ParseOptions) -> Result<Graph, ParseError> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#') && !l.starts_with('c'));
    match first {
        Some(l) if l.starts_with("p ") || l == "p" => parse_dimacs(text, options),
        Some(_) => parse_plain(text, options),
        None => Err(ParseError::MissingHeader),
    }
}

fn parse_plain(text: &str, options: ParseOptions) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize, bool)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let Some((_, _, weighted)) = header else {
            let weighted = match tokens.as_slice() {
                [_, _] => false,
                [_, _, "w"] => true,
                _ => return Err(malformed(line, "expected header `n m` or `n m w`")),
            };
            let n = parse_usize(tokens[0], line, "vertex count")?;
            let m = parse_usize(tokens[1], line, "edge count")?;
            header = Some((n, m, weighted));
            continue;
        };
        match (tokens.as_slice(), weighted) {
            ([u, v], false) => edges.push((
                parse_usize(u, line, "vertex")?,
                parse_usize(v, line, "vertex")?,
                1,
            )),
            ([u, v, w], true) => edges.push((
                parse_usize(u, line, "vertex")?,
                parse_usize(v, line, "vertex")?,
                parse_weight(w, options.weight_scale, line)?,
            )),
            (_, false) => return Err(malformed(line, "expected `u v`")),
            (_, true) => return Err(malformed(line, "expected `u v weight`")),
        }
    }
    let (n, m, weighted) = header.ok_or(ParseError::MissingHeader)?;
    if edges.len() != m {
        return Err(ParseError::EdgeCountMismatch {
            declared: m,
            found: edges.len(),
        });
    }
    Ok(if weighted {
        Graph::from_weighted_edges(n, options.directed, edges)?
    } else {
        Graph::from_edges(n, options.directed, edges.into_iter().map(|(u, v, _)| (u, v)))?
    })
}

fn parse_dimacs(text: &str, options: ParseOptions) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut arcs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            ["c", ..] => {}
            ["p", "sp", n, m] if header.is_none() => {
                header = Some((
                    parse_usize(n, line, "vertex count")?,
                    parse_usize(m, line, "arc count")?,
                ));
            }
            ["a", u, v, w] if header.is_some() => {
                let one_based = |t: &str| -> Result<usize, ParseError> {
                    let x = parse_usize(t, line, "vertex")?;
                    x.checked_sub(1)
                        .ok_or_else(|| malformed(line, "DIMACS vertices are 1-indexed"))
                };
                arcs.push((one_based(u)?, one_based(v)?, parse_weight(w, options.weight_scale, line)?));
            }
            _ => return Err(malformed(line, format!("unexpected DIMACS line `{content}`"))),
        }
    }
    let (n, m) = header.ok_or(ParseError::MissingHeader)?;
    if arcs.len() != m {
        return Err(ParseError::EdgeCountMismatch {
            declared: m,
            found: arcs.len(),
        });
    }
    Ok(Graph::from_weighted_edges(n, options.directed, arcs)?)
}

/// Writes the canonical edge-list form of `g`.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    if g.is_weighted() {
        let _ = writeln!(out, "{} {} w", g.n(), g.edge_count());
        for (u, v, w) in g.edges() {
            let _ = writeln!(out, "{u} {v} {w}");
        }
    } else {
        let _ = writeln!(out, "{} {}", g.n(), g.edge_count());
        for (u, v, _) in g.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_unweighted_path() {
        let g = parse_edge_list("2 1\n0 1\n", ParseOptions::default()).unwrap();
        assert_eq!(g, Graph::from_edges(2, false, [(0, 1)]).unwrap());
    }

    #[test]
    fn parses_weighted_path() {
        let g = parse_edge_list("3 2 w\n0 1 5\n1 2 7\n", ParseOptions::default()).unwrap();
        assert!(g.is_weighted());
        assert_eq!(g.edge_weight(0, 1), Some(5));
        assert_eq!(g.edge_weight(2, 1), Some(7));
    }

    #[test]
    fn skips_comments_and_blank_lines() {
        let text = "# generated\n3 2\n\n0 1\n# middle\n1 2\n";
        let g = parse_edge_list(text, ParseOptions::directed(true)).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(g.is_directed());
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_edge_list("3 2\n0 1\n1 x\n", ParseOptions::default()).unwrap_err();
        assert!(matches!(err, ParseError::Malformed { line: 3, .. }), "{err}");
        let err = parse_edge_list("3 2\n0 1 4\n", ParseOptions::default()).unwrap_err();
        assert!(matches!(err, ParseError::Malformed { line: 2, .. }), "{err}");
    }

    #[test]
    fn rejects_count_mismatch_and_range() {
        assert_eq!(
            parse_edge_list("3 2\n0 1\n", ParseOptions::default()),
            Err(ParseError::EdgeCountMismatch {
                declared: 2,
                found: 1
            })
        );
        assert!(matches!(
            parse_edge_list("2 1\n0 5\n", ParseOptions::default()),
            Err(ParseError::Graph(GraphError::VertexOutOfRange { .. }))
        ));
        assert!(matches!(
            parse_edge_list("2 1 w\n0 1 -4\n", ParseOptions::default()),
            Err(ParseError::Graph(GraphError::NegativeWeight { .. }))
        ));
    }

    #[test]
    fn decimal_weights_are_scaled() {
        let opts = ParseOptions {
            directed: true,
            weight_scale: 2,
        };
        let g = parse_edge_list("2 1 w\n0 1 1.25\n", opts).unwrap();
        assert_eq!(g.edge_weight(0, 1), Some(125));
        assert!(parse_edge_list("2 1 w\n0 1 1.255\n", opts).is_err());
        assert!(parse_edge_list("2 1 w\n0 1 1.5\n", ParseOptions::default()).is_err());
        assert_eq!(parse_weight("3.", 1, 1), Ok(30));
        assert_eq!(parse_weight(".5", 1, 1), Ok(5));
    }

    #[test]
    fn parses_dimacs() {
        let text = "c sample\np sp 3 3\na 1 2 4\na 2 3 1\na 3 1 2\n";
        let g = parse_edge_list(text, ParseOptions::directed(true)).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_weight(0, 1), Some(4));
        assert_eq!(g.edge_weight(2, 0), Some(2));
        assert!(parse_edge_list("p sp 2 1\na 0 1 1\n", ParseOptions::default()).is_err());
    }

    #[test]
    fn writer_is_canonical() {
        let g = Graph::from_edges(3, false, [(2, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(write_edge_list(&g), "3 2\n0 1\n1 2\n");
        let w = Graph::from_weighted_edges(2, true, [(1, 0, 3)]).unwrap();
        assert_eq!(write_edge_list(&w), "2 1 w\n1 0 3\n");
    }
}
