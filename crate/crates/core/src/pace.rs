//! PACE text formats: `.gr` graphs and treedepth tree documents.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::TreedepthDecomposition;

/// A parsed `.gr` file. Edges are 1-based, normalized to `u < v`, sorted
/// and deduplicated, so `m == edges.len()`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GrDocument {
    pub n: usize,
    pub m: usize,
    pub edges: Vec<(usize, usize)>,
    /// Comment text without the leading `c`.
    pub comments: Vec<String>,
    /// Recoverable problems found while parsing.
    pub warnings: Vec<String>,
}

impl GrDocument {
    pub fn from_graph(g: &Graph) -> GrDocument {
        let edges: Vec<(usize, usize)> =
            g.edges().into_iter().map(|(u, v)| (u + 1, v + 1)).collect();
        GrDocument {
            n: g.vertex_count(),
            m: edges.len(),
            edges,
            ..GrDocument::default()
        }
    }

    pub fn to_graph(&self) -> Graph {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
        Graph::from_edges(self.n, &edges).expect("parsed edges are in range")
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_gr(text: &str) -> Result<GrDocument> {
    let mut doc = GrDocument::default();
    let mut declared_m = None;
    let mut seen = BTreeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim_end_matches('\r').trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('c') {
            if rest.is_empty() || rest.starts_with(char::is_whitespace) {
                doc.comments.push(rest.trim().to_string());
                continue;
            }
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if declared_m.is_none() {
            match tokens.as_slice() {
                ["p", "tdp", n, m] => {
                    doc.n = n
                        .parse()
                        .map_err(|_| parse_err(line_no, format!("bad vertex count `{n}`")))?;
                    declared_m = Some(
                        m.parse::<usize>()
                            .map_err(|_| parse_err(line_no, format!("bad edge count `{m}`")))?,
                    );
                }
                _ => return Err(parse_err(line_no, "expected header `p tdp <n> <m>`")),
            }
            continue;
        }
        let [u, v] = tokens.as_slice() else {
            return Err(parse_err(
                line_no,
                format!("expected two endpoints, found {} tokens", tokens.len()),
            ));
        };
        let endpoint = |t: &str| -> Result<usize> {
            let x: usize = t
                .parse()
                .map_err(|_| parse_err(line_no, format!("bad endpoint `{t}`")))?;
            if x == 0 || x > doc.n {
                return Err(parse_err(
                    line_no,
                    format!("endpoint {x} outside 1..={}", doc.n),
                ));
            }
            Ok(x)
        };
        let (u, v) = (endpoint(u)?, endpoint(v)?);
        if u == v {
            return Err(parse_err(line_no, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            doc.warnings
                .push(format!("line {line_no}: duplicate edge {u} {v} ignored"));
        }
    }
    let Some(declared) = declared_m else {
        return Err(parse_err(
            text.lines().count().max(1),
            "missing header `p tdp <n> <m>`",
        ));
    };
    doc.edges = seen.into_iter().collect();
    doc.m = doc.edges.len();
    if declared != doc.m {
        doc.warnings.push(format!(
            "header declares {declared} edges, found {} distinct",
            doc.m
        ));
    }
    Ok(doc)
}

pub fn write_gr(doc: &GrDocument) -> String {
    let mut out = String::new();
    for c in &doc.comments {
        if c.is_empty() {
            out.push_str("c\n");
        } else {
            out.push_str(&format!("c {c}\n"));
        }
    }
    out.push_str(&format!("p tdp {} {}\n", doc.n, doc.edges.len()));
    for (u, v) in &doc.edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// A tree document: declared depth and 1-based parents, 0 for roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDocument {
    pub depth: usize,
    pub parents: Vec<usize>,
}

impl TreeDocument {
    pub fn from_decomposition(t: &TreedepthDecomposition) -> TreeDocument {
        TreeDocument {
            depth: t.height,
            parents: t.parent.iter().map(|p| p.map_or(0, |p| p + 1)).collect(),
        }
    }

    /// The parent mapping, with the height recomputed from it (0 if it has a
    /// cycle).
    pub fn to_decomposition(&self) -> TreedepthDecomposition {
        let mut t = TreedepthDecomposition {
            parent: self.parents.iter().map(|&p| p.checked_sub(1)).collect(),
            height: 0,
        };
        t.height = t.depths().map_or(0, |d| d.into_iter().max().unwrap_or(0));
        t
    }

    /// Syntax, count and range checks only; the parent array may contain a
    /// cycle.
    pub fn parse_unchecked(text: &str, n: usize) -> Result<TreeDocument> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim_end_matches('\r').trim()))
            .filter(|(_, l)| !l.is_empty());
        let number = |line_no: usize, l: &str| -> Result<usize> {
            l.parse()
                .map_err(|_| parse_err(line_no, format!("expected an integer, found `{l}`")))
        };
        let (line_no, first) = lines
            .next()
            .ok_or_else(|| parse_err(1, "missing depth line"))?;
        let depth = number(line_no, first)?;
        let mut parents = Vec::with_capacity(n);
        for (line_no, l) in lines {
            if parents.len() == n {
                return Err(parse_err(line_no, format!("more than {n} parent lines")));
            }
            let p = number(line_no, l)?;
            if p > n {
                return Err(parse_err(line_no, format!("parent {p} outside 0..={n}")));
            }
            if p == parents.len() + 1 {
                return Err(parse_err(line_no, format!("vertex {p} is its own parent")));
            }
            parents.push(p);
        }
        if parents.len() != n {
            return Err(parse_err(
                text.lines().count().max(1),
                format!("expected {n} parent lines, found {}", parents.len()),
            ));
        }
        Ok(TreeDocument { depth, parents })
    }
}

pub fn write_tree(t: &TreedepthDecomposition) -> String {
    let doc = TreeDocument::from_decomposition(t);
    let mut out = format!("{}\n", doc.depth);
    for p in &doc.parents {
        out.push_str(&format!("{p}\n"));
    }
    out
}

/// Parses a tree document for an `n`-vertex graph and rejects parent arrays
/// that are not forests.
pub fn parse_tree(text: &str, n: usize) -> Result<TreeDocument> {
    let doc = TreeDocument::parse_unchecked(text, n)?;
    if doc.to_decomposition().depths().is_none() {
        return Err(parse_err(1, "parent array contains a cycle"));
    }
    Ok(doc)
}
