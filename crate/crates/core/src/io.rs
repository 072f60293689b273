//! Line-oriented text formats for instances, graphs and codes.
//!
//! Instance (`.msp`):
//!
//! ```text
//! # comment
//! msp <kappa> <ell>
//! g <c1> ... <c_ell> : <black> <white>
//! ```
//!
//! Graph (DIMACS edge format):
//!
//! ```text
//! c comment
//! p edge <vertices> <edges>
//! e <u> <v>
//! ```
//!
//! Blank lines are ignored in both. Serialization emits the canonical form:
//! one header, single spaces, a trailing newline, no comments.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, ParseError, ParseErrorKind as Kind, Result};
use crate::graph::Graph;
use crate::instance::{MspInstance, ScoredGuess};
use crate::score::{Code, Color, Palette, Score};

fn int<T: FromStr>(token: &str, line: usize, what: &str) -> Result<T, ParseError> {
    token.parse().map_err(|_| {
        ParseError::new(
            line,
            Kind::InvalidInteger,
            format!("expected {what}, found `{token}`"),
        )
    })
}

/// Significant lines with their 1-based numbers.
fn significant<'a>(
    text: &'a str,
    comment: &'a str,
) -> impl Iterator<Item = (usize, Vec<&'a str>)> + 'a {
    text.lines().enumerate().filter_map(move |(i, raw)| {
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        match tokens.first() {
            None => None,
            Some(t) if t.starts_with(comment) => None,
            Some(_) => Some((i + 1, tokens)),
        }
    })
}

pub fn parse_instance(text: &str) -> Result<MspInstance, ParseError> {
    let mut lines = significant(text, "#");
    let Some((header_line, header)) = lines.next() else {
        return Err(ParseError::new(1, Kind::MissingHeader, "empty instance"));
    };
    if header[0] != "msp" {
        return Err(ParseError::new(
            header_line,
            Kind::MissingHeader,
            "expected `msp <kappa> <ell>`",
        ));
    }
    if header.len() != 3 {
        return Err(ParseError::new(
            header_line,
            Kind::InvalidHeader,
            "expected `msp <kappa> <ell>`",
        ));
    }
    let kappa: u32 = int(header[1], header_line, "color count")?;
    let len: usize = int(header[2], header_line, "code length")?;
    if kappa == 0 || len == 0 {
        return Err(ParseError::new(
            header_line,
            Kind::InvalidHeader,
            "color count and code length must be positive",
        ));
    }
    let palette = Palette::new(kappa).expect("kappa checked positive");

    let mut guesses = Vec::new();
    for (line, tokens) in lines {
        match tokens[0] {
            "g" => guesses.push(parse_guess_line(&tokens[1..], line, &palette, len)?),
            "msp" => {
                return Err(ParseError::new(
                    line,
                    Kind::DuplicateHeader,
                    "second header",
                ))
            }
            other => {
                return Err(ParseError::new(
                    line,
                    Kind::UnexpectedLine,
                    format!("unknown directive `{other}`"),
                ))
            }
        }
    }

    MspInstance::new(palette, len, guesses).map_err(|e| {
        // Every per-guess check already ran line by line.
        ParseError::new(header_line, Kind::InvalidHeader, e.to_string())
    })
}

fn parse_guess_line(
    tokens: &[&str],
    line: usize,
    palette: &Palette,
    len: usize,
) -> Result<ScoredGuess, ParseError> {
    let Some(sep) = tokens.iter().position(|&t| t == ":") else {
        return Err(ParseError::new(
            line,
            Kind::MissingSeparator,
            "expected `g <colors> : <black> <white>`",
        ));
    };
    let (pegs, score) = (&tokens[..sep], &tokens[sep + 1..]);

    let pegs: Vec<Color> = pegs
        .iter()
        .map(|t| int(t, line, "color"))
        .collect::<Result<_, _>>()?;
    if pegs.len() != len {
        return Err(ParseError::new(
            line,
            Kind::WrongPegCount,
            format!("guess has {} pegs, expected {len}", pegs.len()),
        ));
    }
    if let Some(&bad) = pegs.iter().find(|&&c| !palette.contains(c)) {
        return Err(ParseError::new(
            line,
            Kind::ColorOutOfRange,
            format!("color {bad} outside 1..={}", palette.kappa()),
        ));
    }

    if score.len() != 2 {
        return Err(ParseError::new(
            line,
            Kind::UnexpectedLine,
            "expected exactly two score numbers after `:`",
        ));
    }
    let declared = Score::new(
        int(score[0], line, "black count")?,
        int(score[1], line, "white count")?,
    );
    if declared.total() > len {
        return Err(ParseError::new(
            line,
            Kind::ScoreOutOfRange,
            format!("black + white = {} exceeds length {len}", declared.total()),
        ));
    }

    let code = Code::new(pegs).expect("colors checked against palette");
    Ok(ScoredGuess::new(code, declared))
}

pub fn serialize_instance(instance: &MspInstance) -> String {
    let mut out = format!("msp {} {}\n", instance.kappa(), instance.length());
    for g in instance.guesses() {
        writeln!(out, "g {} : {}", g.guess, g.declared).unwrap();
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = significant(text, "c");
    let Some((header_line, header)) = lines.next() else {
        return Err(ParseError::new(1, Kind::MissingHeader, "empty graph"));
    };
    if header[0] != "p" {
        return Err(ParseError::new(
            header_line,
            Kind::MissingHeader,
            "expected `p edge <vertices> <edges>`",
        ));
    }
    if header.len() != 4 || header[1] != "edge" {
        return Err(ParseError::new(
            header_line,
            Kind::InvalidHeader,
            "expected `p edge <vertices> <edges>`",
        ));
    }
    let vertices: usize = int(header[2], header_line, "vertex count")?;
    let declared_edges: usize = int(header[3], header_line, "edge count")?;
    if vertices == 0 {
        return Err(ParseError::new(
            header_line,
            Kind::InvalidHeader,
            "graph needs at least one vertex",
        ));
    }

    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    for (line, tokens) in lines {
        match tokens[0] {
            "e" if tokens.len() == 3 => {
                let a: usize = int(tokens[1], line, "vertex")?;
                let b: usize = int(tokens[2], line, "vertex")?;
                if let Some(bad) = [a, b].into_iter().find(|&v| v == 0 || v > vertices) {
                    return Err(ParseError::new(
                        line,
                        Kind::VertexOutOfRange,
                        format!("vertex {bad} outside 1..={vertices}"),
                    ));
                }
                if a == b {
                    return Err(ParseError::new(
                        line,
                        Kind::SelfLoop,
                        format!("self-loop on vertex {a}"),
                    ));
                }
                if !seen.insert((a.min(b), a.max(b))) {
                    return Err(ParseError::new(
                        line,
                        Kind::DuplicateEdge,
                        format!("edge ({a},{b}) already listed"),
                    ));
                }
                edges.push((a, b));
            }
            "e" => {
                return Err(ParseError::new(
                    line,
                    Kind::UnexpectedLine,
                    "expected `e <u> <v>`",
                ))
            }
            "p" => {
                return Err(ParseError::new(
                    line,
                    Kind::DuplicateHeader,
                    "second header",
                ))
            }
            other => {
                return Err(ParseError::new(
                    line,
                    Kind::UnexpectedLine,
                    format!("unknown directive `{other}`"),
                ))
            }
        }
    }

    if edges.len() != declared_edges {
        return Err(ParseError::new(
            header_line,
            Kind::EdgeCountMismatch,
            format!(
                "header declares {declared_edges} edges, found {}",
                edges.len()
            ),
        ));
    }
    Ok(Graph::new(vertices, edges).expect("edges validated while parsing"))
}

pub fn serialize_graph(graph: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", graph.vertex_count(), graph.edge_count());
    for (a, b) in graph.edges() {
        writeln!(out, "e {a} {b}").unwrap();
    }
    out
}

/// Parses a space-separated code such as `1 2 3 4`.
pub fn parse_code(text: &str) -> Result<Code> {
    let pegs = text
        .split_whitespace()
        .map(|t| {
            t.parse::<Color>()
                .map_err(|_| Error::invalid(format!("`{t}` is not a color")))
        })
        .collect::<Result<Vec<_>>>()?;
    Code::new(pegs)
}
