//! Reading and writing graphs as edge lists, JSON, or graph6.
//!
//! Edge list: the first line holds `n`, then one `u v` pair per line, with
//! 1-based labels. Blank lines and `#` comments are skipped.
//!
//! JSON: `{"n": 4, "edges": [[1, 2], [2, 3]]}` with optional `"name"` and
//! `"labeling"` (a vertex order).
//!
//! graph6: the usual printable encoding, one graph per input.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    EdgeList,
    Json,
    Graph6,
}

impl Format {
    /// Guess from a file name: `.json`, `.g6`/`.graph6`, anything else is an
    /// edge list.
    pub fn from_path(path: &str) -> Format {
        let ext = path.rsplit_once('.').map(|(_, e)| e.to_ascii_lowercase());
        match ext.as_deref() {
            Some("json") => Format::Json,
            Some("g6") | Some("graph6") => Format::Graph6,
            _ => Format::EdgeList,
        }
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge-list" | "edgelist" | "txt" => Ok(Format::EdgeList),
            "json" => Ok(Format::Json),
            "graph6" | "g6" => Ok(Format::Graph6),
            other => Err(Error::Parse(format!("unknown format {other:?}"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::EdgeList => "edge-list",
            Format::Json => "json",
            Format::Graph6 => "graph6",
        })
    }
}

/// A parsed input: the graph plus whatever metadata the format carried.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphDocument {
    pub format: Format,
    pub graph: Graph,
    pub name: Option<String>,
    pub labeling: Option<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labeling: Option<Vec<usize>>,
}

pub fn parse_graph(input: &[u8], format: Format) -> Result<Graph> {
    Ok(parse_document(input, format)?.graph)
}

pub fn parse_document(input: &[u8], format: Format) -> Result<GraphDocument> {
    let text = std::str::from_utf8(input).map_err(|e| Error::Parse(format!("not UTF-8: {e}")))?;
    let (graph, name, labeling) = match format {
        Format::EdgeList => (parse_edge_list(text)?, None, None),
        Format::Json => {
            let doc: JsonGraph =
                serde_json::from_str(text).map_err(|e| Error::Parse(format!("bad JSON: {e}")))?;
            let g = Graph::from_edges(doc.n, doc.edges.iter().map(|&[u, v]| (u, v)))?;
            (g, doc.name, doc.labeling)
        }
        Format::Graph6 => (parse_graph6(text)?, None, None),
    };
    Ok(GraphDocument { format, graph, name, labeling })
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (_, header) = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
    let n: usize = header
        .parse()
        .map_err(|_| Error::Parse(format!("header {header:?} is not a vertex count")))?;
    let mut g = Graph::new(n)?;
    for (lineno, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let pair = match fields.as_slice() {
            [a, b] => a.parse::<usize>().ok().zip(b.parse::<usize>().ok()),
            _ => None,
        };
        let (u, v) = pair.ok_or_else(|| Error::Parse(format!("line {lineno}: expected \"u v\"")))?;
        g.insert_edge(u, v)?;
    }
    Ok(g)
}

fn parse_graph6(text: &str) -> Result<Graph> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let line = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
    if lines.next().is_some() {
        return Err(Error::Parse("expected a single graph6 line".into()));
    }
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse(format!("byte {b} outside the graph6 range")));
    }
    let (n, body) = match bytes {
        [126, 126, ..] => return Err(Error::TooManyVertices { n: 258_048, max: MAX_VERTICES }),
        [126, a, b, c, rest @ ..] => {
            let n = ((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63);
            (n, rest)
        }
        [126, ..] => return Err(Error::Parse("truncated graph6 size".into())),
        [first, rest @ ..] => (*first as usize - 63, rest),
        [] => unreachable!("line is nonempty"),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Parse(format!(
            "graph6 body has {} bytes, expected {expected} for n = {n}",
            body.len()
        )));
    }
    let mut g = Graph::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte & (0b10_0000 >> (k % 6)) != 0 {
                g.insert_edge(i + 1, j + 1)?;
            }
            k += 1;
        }
    }
    for k in pairs..expected * 6 {
        if (body[k / 6] - 63) & (0b10_0000 >> (k % 6)) != 0 {
            return Err(Error::Parse("nonzero graph6 padding".into()));
        }
    }
    Ok(g)
}

pub fn render(g: &Graph, format: Format) -> String {
    match format {
        Format::EdgeList => render_edge_list(g),
        Format::Json => render_json(g, None),
        Format::Graph6 => render_graph6(g),
    }
}

pub fn render_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u(), e.v()));
    }
    out
}

pub fn render_json(g: &Graph, name: Option<&str>) -> String {
    let doc = JsonGraph {
        n: g.n(),
        edges: g.edges().iter().map(|e| [e.u(), e.v()]).collect(),
        name: name.map(str::to_owned),
        labeling: None,
    };
    serde_json::to_string(&doc).expect("plain data")
}

pub fn render_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = if n < 63 {
        vec![n as u8 + 63]
    } else {
        vec![126, (n >> 12) as u8 + 63, ((n >> 6) & 63) as u8 + 63, (n & 63) as u8 + 63]
    };
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i + 1, j + 1) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}
