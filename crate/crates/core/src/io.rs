//! Graph I/O: graph6 (header-less), plain edge lists and JSON.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{CubicGraph, Vertex};

const GRAPH6_HEADER: &str = ">>graph6<<";

fn parse_err(message: impl Into<String>) -> Error {
    Error::Parse { line: 0, message: message.into() }
}

fn encode_order(n: usize, out: &mut String) {
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
}

/// Encodes any simple graph given by order and edge list as graph6.
pub fn encode_graph6_edges(order: usize, edges: &[(Vertex, Vertex)]) -> String {
    let mut adj = vec![false; order * order];
    for &(u, v) in edges {
        adj[u * order + v] = true;
        adj[v * order + u] = true;
    }
    let mut out = String::new();
    encode_order(order, &mut out);
    let mut word = 0u8;
    let mut bits = 0;
    for j in 1..order {
        for i in 0..j {
            word = (word << 1) | adj[i * order + j] as u8;
            bits += 1;
            if bits == 6 {
                out.push((word + 63) as char);
                word = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push(((word << (6 - bits)) + 63) as char);
    }
    out
}

pub fn to_graph6(g: &CubicGraph) -> String {
    encode_graph6_edges(g.order(), g.edges())
}

/// Decodes a graph6 string (optionally with the `>>graph6<<` header) into
/// order and edge list, edges in column-major upper-triangle order.
pub fn decode_graph6(line: &str) -> Result<(usize, Vec<(Vertex, Vertex)>)> {
    let s = line.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(GRAPH6_HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(parse_err(format!("byte {b} outside the graph6 range")));
    }
    let val = |b: u8| (b - 63) as usize;
    let (order, rest) = match bytes {
        [] => return Err(parse_err("empty graph6 string")),
        [126, 126, tail @ ..] => {
            if tail.len() < 6 {
                return Err(parse_err("truncated order"));
            }
            let n = tail[..6].iter().fold(0, |acc, &b| (acc << 6) | val(b));
            (n, &tail[6..])
        }
        [126, tail @ ..] => {
            if tail.len() < 3 {
                return Err(parse_err("truncated order"));
            }
            let n = tail[..3].iter().fold(0, |acc, &b| (acc << 6) | val(b));
            (n, &tail[3..])
        }
        [b, tail @ ..] => (val(*b), tail),
    };
    let total_bits = order * order.saturating_sub(1) / 2;
    let expected = total_bits.div_ceil(6);
    if rest.len() != expected {
        return Err(parse_err(format!(
            "expected {expected} data bytes for order {order}, found {}",
            rest.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..order {
        for i in 0..j {
            let b = val(rest[k / 6]);
            if (b >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok((order, edges))
}

pub fn from_graph6(line: &str) -> Result<CubicGraph> {
    let (order, edges) = decode_graph6(line)?;
    CubicGraph::new(order, &edges)
}

/// `order` on the first line, then one `u v` pair per line.
pub fn to_edge_list(g: &CubicGraph) -> String {
    let mut out = format!("{}\n", g.order());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn from_edge_list(text: &str) -> Result<CubicGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (first, header) = lines.next().ok_or_else(|| parse_err("empty edge list"))?;
    let order: usize = header.parse().map_err(|_| Error::Parse {
        line: first,
        message: format!("expected vertex count, found `{header}`"),
    })?;
    let mut edges = Vec::new();
    for (line, text) in lines {
        let parts: Vec<&str> = text.split_whitespace().collect();
        let parsed: Option<Vec<usize>> = parts.iter().map(|p| p.parse().ok()).collect();
        match parsed.as_deref() {
            Some(&[u, v]) => edges.push((u, v)),
            _ => {
                return Err(Error::Parse { line, message: format!("expected `u v`, found `{text}`") })
            }
        }
    }
    CubicGraph::new(order, &edges)
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GraphJson {
    pub order: usize,
    pub edges: Vec<[Vertex; 2]>,
}

impl From<&CubicGraph> for GraphJson {
    fn from(g: &CubicGraph) -> Self {
        GraphJson { order: g.order(), edges: g.edges().iter().map(|&(u, v)| [u, v]).collect() }
    }
}

pub fn to_json(g: &CubicGraph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("plain struct serialises")
}

pub fn from_json(text: &str) -> Result<CubicGraph> {
    let parsed: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    let edges: Vec<_> = parsed.edges.iter().map(|&[u, v]| (u, v)).collect();
    CubicGraph::new(parsed.order, &edges)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
    Json,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph6" | "g6" => Ok(Format::Graph6),
            "edges" | "edgelist" => Ok(Format::EdgeList),
            "json" => Ok(Format::Json),
            other => Err(parse_err(format!("unknown format `{other}`"))),
        }
    }
}

pub fn write_graph(g: &CubicGraph, format: Format) -> String {
    match format {
        Format::Graph6 => to_graph6(g) + "\n",
        Format::EdgeList => to_edge_list(g),
        Format::Json => to_json(g) + "\n",
    }
}

/// Reads a graph written in any of the supported formats, guessing by content.
pub fn read_graph(text: &str) -> Result<CubicGraph> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        from_json(trimmed)
    } else if trimmed.lines().next().is_some_and(|l| l.trim().parse::<usize>().is_ok()) {
        from_edge_list(trimmed)
    } else {
        from_graph6(trimmed.lines().next().unwrap_or(""))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named_graph;

    #[test]
    fn k4_graph6_is_c_tilde() {
        let g = named_graph("K4").unwrap();
        assert_eq!(to_graph6(&g), "C~");
    }

    #[test]
    fn petersen_graph6_round_trip() {
        let g = named_graph("Petersen").unwrap();
        let s = to_graph6(&g);
        let h = from_graph6(&s).unwrap();
        assert_eq!(to_graph6(&h), s);
        assert_eq!(h.size(), 15);
    }

    #[test]
    fn known_graph6_strings_decode() {
        // Five-vertex example used by other graph6 implementations: edges
        // a-c, a-e, b-d, d-e encode to "DQc".
        let (n, edges) = decode_graph6("DQc").unwrap();
        assert_eq!(n, 5);
        assert_eq!(edges, vec![(0, 2), (1, 3), (0, 4), (3, 4)]);
        assert_eq!(encode_graph6_edges(5, &edges), "DQc");
        let (n, _) = decode_graph6(">>graph6<<C~").unwrap();
        assert_eq!(n, 4);
    }

    #[test]
    fn large_order_prefix() {
        let mut s = String::new();
        encode_order(100, &mut s);
        assert_eq!(s.as_bytes(), &[126, 63, 63 + 1, 63 + 36]);
        let edges = vec![(0, 99)];
        let enc = encode_graph6_edges(100, &edges);
        assert_eq!(decode_graph6(&enc).unwrap(), (100, edges));
    }

    #[test]
    fn graph6_rejects_garbage() {
        assert!(decode_graph6("").is_err());
        assert!(decode_graph6("C~~").is_err());
        assert!(decode_graph6("C\u{7}").is_err());
        assert!(matches!(from_graph6("Bw"), Err(Error::OrderTooSmall(_)) | Err(Error::OddOrder(_))));
    }

    #[test]
    fn edge_list_and_json_round_trip() {
        let g = named_graph("Q3").unwrap();
        assert_eq!(from_edge_list(&to_edge_list(&g)).unwrap(), g);
        assert_eq!(from_json(&to_json(&g)).unwrap(), g);
        assert_eq!(read_graph(&to_json(&g)).unwrap(), g);
        assert_eq!(read_graph(&to_edge_list(&g)).unwrap(), g);
        assert!(read_graph(&to_graph6(&g)).is_ok());
    }

    #[test]
    fn edge_list_reports_line_numbers() {
        let err = from_edge_list("4\n0 1\n0 x\n").unwrap_err();
        assert_eq!(err, Error::Parse { line: 3, message: "expected `u v`, found `0 x`".into() });
    }
}
