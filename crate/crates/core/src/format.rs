//! Line-oriented graph files.
//!
//! ```text
//! # comment
//! group sym 3 gens r=(1,2,3);s=(1,2)
//! vertex u0
//! edge e1 u0 u1 [ ]
//! edge e2 u0 u1 [ +r -s ]
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use crate::algebra::{GroupOracle, TableGroup, Word};
use crate::graph::LabeledGraph;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {msg} (at `{token}`)")]
pub struct ParseError {
    pub line: usize,
    pub token: String,
    pub msg: String,
}

impl ParseError {
    fn new(line: usize, token: impl Into<String>, msg: impl Into<String>) -> Self {
        Self { line, token: token.into(), msg: msg.into() }
    }
}

#[derive(Clone, Debug)]
pub struct ParsedInput {
    pub oracle: GroupOracle,
    pub graph: LabeledGraph,
    /// 1-based line of each edge's declaration.
    pub edge_lines: BTreeMap<String, usize>,
    /// 1-based line of each explicit `vertex` declaration.
    pub vertex_lines: BTreeMap<String, usize>,
}

/// Parses a graph file; a `group table` path is taken relative to the
/// working directory.
pub fn parse(text: &str) -> Result<ParsedInput, ParseError> {
    parse_with_base(text, Path::new("."))
}

/// Parses a graph file, resolving a relative `group table` path against
/// `base`.
pub fn parse_with_base(text: &str, base: &Path) -> Result<ParsedInput, ParseError> {
    parse_with_loader(text, |path| {
        let full: PathBuf = base.join(path);
        std::fs::read_to_string(&full).map_err(|e| format!("cannot read `{}`: {e}", full.display()))
    })
}

/// Parses a graph file with a custom source for `group table` files.
pub fn parse_with_loader(
    text: &str,
    mut load: impl FnMut(&str) -> Result<String, String>,
) -> Result<ParsedInput, ParseError> {
    let mut oracle: Option<GroupOracle> = None;
    let mut graph = LabeledGraph::new();
    let mut edge_lines = BTreeMap::new();
    let mut vertex_lines = BTreeMap::new();
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some(o) = &oracle else {
            oracle = Some(parse_header(content, line_no, &mut load)?);
            continue;
        };
        let spaced = content.replace('[', " [ ").replace(']', " ] ");
        let tokens: Vec<&str> = spaced.split_whitespace().collect();
        match tokens[0] {
            "vertex" => {
                let [_, id] = tokens[..] else {
                    return Err(ParseError::new(line_no, content, "expected `vertex <id>`"));
                };
                check_vertex_id(id, line_no)?;
                graph.add_vertex(id);
                vertex_lines.entry(id.to_string()).or_insert(line_no);
            }
            "edge" => {
                if tokens.len() < 4 {
                    return Err(ParseError::new(line_no, content, "expected `edge <id> <u> <v> [ <word> ]`"));
                }
                let (id, u, v) = (tokens[1], tokens[2], tokens[3]);
                check_edge_id(id, line_no)?;
                check_vertex_id(u, line_no)?;
                check_vertex_id(v, line_no)?;
                let label = parse_label(o, &tokens[4..], line_no)?;
                if edge_lines.contains_key(id) {
                    return Err(ParseError::new(line_no, id, "duplicate edge id"));
                }
                graph
                    .add_edge(id, u, v, label)
                    .map_err(|e| ParseError::new(line_no, id, e.to_string()))?;
                edge_lines.insert(id.to_string(), line_no);
            }
            other => return Err(ParseError::new(line_no, other, "unknown directive")),
        }
    }
    let oracle = oracle.ok_or_else(|| ParseError::new(0, "", "missing group header"))?;
    Ok(ParsedInput { oracle, graph, edge_lines, vertex_lines })
}

fn parse_header(
    content: &str,
    line: usize,
    load: &mut impl FnMut(&str) -> Result<String, String>,
) -> Result<GroupOracle, ParseError> {
    let tokens: Vec<&str> = content.split_whitespace().collect();
    if tokens.first() != Some(&"group") {
        return Err(ParseError::new(line, tokens[0], "expected a `group` header"));
    }
    let kind = tokens.get(1).copied().unwrap_or("");
    let number = |i: usize| -> Result<u64, ParseError> {
        let tok = tokens.get(i).copied().unwrap_or("");
        tok.parse().map_err(|_| ParseError::new(line, tok, "expected a number"))
    };
    let arity = |n: usize| -> Result<(), ParseError> {
        match tokens.get(n) {
            Some(extra) => Err(ParseError::new(line, *extra, "unexpected token")),
            None => Ok(()),
        }
    };
    let small = |k: u64| -> Result<usize, ParseError> {
        if k > 1 << 16 {
            Err(ParseError::new(line, k.to_string(), "too many generators"))
        } else {
            Ok(k as usize)
        }
    };
    match kind {
        "z2" => {
            arity(3)?;
            Ok(GroupOracle::z2(small(number(2)?)?))
        }
        "z" => {
            arity(3)?;
            Ok(GroupOracle::free_abelian(small(number(2)?)?))
        }
        "free" => {
            arity(3)?;
            Ok(GroupOracle::free(small(number(2)?)?))
        }
        "cyclic" => {
            arity(3)?;
            GroupOracle::cyclic(number(2)?).map_err(|e| group_error(line, tokens[2], e))
        }
        "sym" => {
            let degree = number(2)?;
            if degree == 0 || degree > 1000 {
                return Err(ParseError::new(line, tokens[2], "degree must be between 1 and 1000"));
            }
            if tokens.get(3) != Some(&"gens") {
                return Err(ParseError::new(line, tokens.get(3).copied().unwrap_or(""), "expected `gens`"));
            }
            let gens_text = tokens[4..].concat();
            let mut gens = Vec::new();
            for part in gens_text.split(';').filter(|p| !p.is_empty()) {
                let Some((name, cycles)) = part.split_once('=') else {
                    return Err(ParseError::new(line, part, "expected `<name>=<cycles>`"));
                };
                if name.is_empty() || name.chars().any(|c| !(c.is_alphanumeric() || c == '_')) {
                    return Err(ParseError::new(line, part, "bad generator name"));
                }
                gens.push((name, cycles));
            }
            GroupOracle::symmetric(degree as usize, &gens).map_err(|e| group_error(line, &gens_text, e))
        }
        "table" => {
            let path = tokens[2..].join(" ");
            if path.is_empty() {
                return Err(ParseError::new(line, kind, "expected a table path"));
            }
            let text = load(&path).map_err(|msg| ParseError::new(line, path.as_str(), msg))?;
            let group = TableGroup::parse(&text).map_err(|e| group_error(line, &path, e))?;
            Ok(GroupOracle::new(crate::Backend::Table { group, source: path }))
        }
        _ => Err(ParseError::new(line, kind, "unknown group kind")),
    }
}

fn group_error(line: usize, token: &str, e: crate::Error) -> ParseError {
    ParseError::new(line, token, e.to_string())
}

fn parse_label(oracle: &GroupOracle, tokens: &[&str], line: usize) -> Result<Word, ParseError> {
    match tokens {
        [] => Ok(Word::identity()),
        ["[", body @ .., "]"] => body
            .iter()
            .map(|t| oracle.parse_symbol(t).map_err(|e| ParseError::new(line, *t, e.to_string())))
            .collect(),
        [first, ..] => Err(ParseError::new(line, *first, "expected `[ <word> ]`")),
    }
}

fn check_vertex_id(id: &str, line: usize) -> Result<(), ParseError> {
    if id.contains(['[', ']']) {
        return Err(ParseError::new(line, id, "brackets are not allowed in ids"));
    }
    Ok(())
}

fn check_edge_id(id: &str, line: usize) -> Result<(), ParseError> {
    check_vertex_id(id, line)?;
    if id.contains(['\'', '*', '~']) {
        return Err(ParseError::new(line, id, "edge ids may not contain `'`, `*` or `~`"));
    }
    Ok(())
}

/// Writes `input` back in the file format. Every vertex gets an explicit
/// declaration so that isolated vertices survive.
pub fn print(oracle: &GroupOracle, graph: &LabeledGraph) -> String {
    let mut out = oracle.backend().header();
    out.push('\n');
    for v in graph.vertices() {
        let _ = writeln!(out, "vertex {v}");
    }
    for e in graph.edges() {
        let word = oracle.format_word(&e.label);
        let sep = if word.is_empty() { "" } else { " " };
        let _ = writeln!(out, "edge {} {} {} [ {word}{sep}]", e.id, e.u, e.v);
    }
    out
}
