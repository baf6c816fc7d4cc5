//! Multipoles: vertices, proper edges and labelled semiedges, with the join
//! operation, C4-poles and chains of C4-poles.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::PapillonParams;
use crate::graph::{CubicGraph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Semiedge {
    pub vertex: Vertex,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multipole {
    vertices: usize,
    edges: Vec<(Vertex, Vertex)>,
    semiedges: Vec<Semiedge>,
}

impl Multipole {
    pub fn new(vertices: usize, edges: Vec<(Vertex, Vertex)>, semiedges: Vec<Semiedge>) -> Result<Self> {
        let mut labels = HashSet::new();
        let mut degree = vec![0usize; vertices];
        let mut pairs = HashSet::new();
        for &(a, b) in &edges {
            for x in [a, b] {
                if x >= vertices {
                    return Err(Error::VertexOutOfRange { vertex: x, order: vertices });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            if !pairs.insert((a.min(b), a.max(b))) {
                return Err(Error::MultiEdge(a, b));
            }
            degree[a] += 1;
            degree[b] += 1;
        }
        for s in &semiedges {
            if s.vertex >= vertices {
                return Err(Error::VertexOutOfRange { vertex: s.vertex, order: vertices });
            }
            if !labels.insert(s.label.as_str()) {
                return Err(Error::PreconditionViolated(format!("duplicate semiedge label {}", s.label)));
            }
            degree[s.vertex] += 1;
        }
        if let Some(v) = degree.iter().position(|&d| d > 3) {
            return Err(Error::NotCubic { vertex: v, degree: degree[v] });
        }
        Ok(Multipole { vertices, edges, semiedges })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn semiedges(&self) -> &[Semiedge] {
        &self.semiedges
    }

    pub fn semiedge(&self, label: &str) -> Option<&Semiedge> {
        self.semiedges.iter().find(|s| s.label == label)
    }

    /// True when every vertex has degree exactly 3 counting semiedges.
    pub fn is_cubic_complete(&self) -> bool {
        let mut degree = vec![0usize; self.vertices];
        for &(a, b) in &self.edges {
            degree[a] += 1;
            degree[b] += 1;
        }
        for s in &self.semiedges {
            degree[s.vertex] += 1;
        }
        degree.iter().all(|&d| d == 3)
    }

    /// Places `other` beside `self`, shifting its vertex ids by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Multipole) -> Result<Multipole> {
        let shift = self.vertices;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(a, b)| (a + shift, b + shift)));
        let mut semiedges = self.semiedges.clone();
        semiedges.extend(
            other.semiedges.iter().map(|s| Semiedge { vertex: s.vertex + shift, label: s.label.clone() }),
        );
        Multipole::new(self.vertices + other.vertices, edges, semiedges)
    }

    /// Deletes two semiedges of this multipole and joins their endvertices.
    pub fn join_within(&self, first: &str, second: &str) -> Result<Multipole> {
        let i = self.position(first)?;
        let mut semiedges = self.semiedges.clone();
        let a = semiedges.remove(i).vertex;
        let j = semiedges
            .iter()
            .position(|s| s.label == second)
            .ok_or_else(|| Error::UnknownSemiedge(second.to_string()))?;
        let b = semiedges.remove(j).vertex;
        if a == b {
            return Err(Error::Loop(a));
        }
        if self.edges.iter().any(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a)) {
            return Err(Error::MultiEdge(a, b));
        }
        let mut edges = self.edges.clone();
        edges.push((a, b));
        Ok(Multipole { vertices: self.vertices, edges, semiedges })
    }

    fn position(&self, label: &str) -> Result<usize> {
        self.semiedges
            .iter()
            .position(|s| s.label == label)
            .ok_or_else(|| Error::UnknownSemiedge(label.to_string()))
    }

    /// Closes a multipole with no semiedges left into a validated cubic graph.
    pub fn into_graph(self) -> Result<CubicGraph> {
        if !self.semiedges.is_empty() {
            return Err(Error::PreconditionViolated(format!(
                "{} semiedges remain open",
                self.semiedges.len()
            )));
        }
        CubicGraph::new(self.vertices, &self.edges)
    }
}

/// Joins semiedge `sa` of `a` with semiedge `sb` of `b`, where `b` is placed
/// after `a` in the vertex numbering.
pub fn join(a: &Multipole, sa: &str, b: &Multipole, sb: &str) -> Result<Multipole> {
    a.position(sa)?;
    b.position(sb)?;
    a.disjoint_union(b)?.join_within(sa, sb)
}

fn pole_label(k: usize, index: Option<usize>) -> String {
    match index {
        Some(j) => format!("f{k}^{j}"),
        None => format!("f{k}"),
    }
}

fn c4_pole_labelled(index: Option<usize>) -> Multipole {
    let semiedges =
        (1..=4).map(|k| Semiedge { vertex: k - 1, label: pole_label(k, index) }).collect();
    Multipole::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)], semiedges)
        .expect("C4-pole is well formed")
}

/// The C4-pole: 4-cycle `(z1, z2, z3, z4)` with semiedge `f_k` at `z_k`.
/// `f1`/`f2` are upper left/right, `f3`/`f4` lower left/right.
pub fn c4_pole() -> Multipole {
    c4_pole_labelled(None)
}

/// A C4-pole whose semiedges are labelled `f1^j .. f4^j`.
pub fn c4_pole_indexed(j: usize) -> Multipole {
    c4_pole_labelled(Some(j))
}

/// A chain of C4-poles and the labels of its four exposed semiedges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chain {
    pub multipole: Multipole,
    /// Upper left, upper right, lower left, lower right.
    pub exposed: [String; 4],
}

/// Chain of `n` C4-poles numbered `first..first+n`.
pub fn chain_from(first: usize, n: usize) -> Result<Chain> {
    if n == 0 {
        return Err(Error::PreconditionViolated("a chain needs at least one C4-pole".into()));
    }
    let last = first + n - 1;
    let mut acc = c4_pole_indexed(first);
    for j in first + 1..=last {
        acc = acc.disjoint_union(&c4_pole_indexed(j))?;
        acc = acc.join_within(&pole_label(2, Some(j - 1)), &pole_label(1, Some(j)))?;
        acc = acc.join_within(&pole_label(4, Some(j - 1)), &pole_label(3, Some(j)))?;
    }
    Ok(Chain {
        multipole: acc,
        exposed: [
            pole_label(1, Some(first)),
            pole_label(2, Some(last)),
            pole_label(3, Some(first)),
            pole_label(4, Some(last)),
        ],
    })
}

pub fn chain(n: usize) -> Result<Chain> {
    chain_from(1, n)
}

/// Papillon graph assembled from the right `r`-chain `T_1..T_r` and the left
/// `l`-chain `T_{r+1}..T_{r+l}` by the four closing joins.
pub fn papillon_from_chains(r: usize, l: usize) -> Result<CubicGraph> {
    let p = PapillonParams::new(r, l)?;
    assemble_chains(p.r(), p.l())
}

/// Same assembly with the chain lengths taken as given, so `r > l` yields
/// a graph labelled differently from `papillon(l, r)`.
pub fn assemble_chains(r: usize, l: usize) -> Result<CubicGraph> {
    PapillonParams::new(r, l)?;
    let right = chain_from(1, r)?;
    let left = chain_from(r + 1, l)?;
    let [e1r, e2r, e3r, e4r] = &right.exposed;
    let [e1l, e2l, e3l, e4l] = &left.exposed;
    let mut z = right.multipole.disjoint_union(&left.multipole)?;
    z = z.join_within(e1r, e2l)?;
    z = z.join_within(e2r, e1l)?;
    z = z.join_within(e3r, e3l)?;
    z = z.join_within(e4r, e4l)?;
    z.into_graph()
}

/// `{"vertices": n, "edges": [[a,b],...], "semiedges": [{"vertex": v, "label": "f1^2"}]}`
pub fn to_json(z: &Multipole) -> String {
    serde_json::to_string(z).expect("plain struct serialises")
}

pub fn from_json(text: &str) -> Result<Multipole> {
    let raw: Multipole = serde_json::from_str(text)
        .map_err(|e| Error::Parse { line: e.line(), message: e.to_string() })?;
    Multipole::new(raw.vertices, raw.edges, raw.semiedges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c4_pole_shape() {
        let z = c4_pole();
        assert_eq!((z.vertex_count(), z.edges().len(), z.semiedges().len()), (4, 4, 4));
        assert!(z.is_cubic_complete());
        assert_eq!(c4_pole(), c4_pole());
        assert_eq!(z.semiedge("f3").unwrap().vertex, 2);
    }

    #[test]
    fn self_join_errors() {
        let z = c4_pole();
        assert_eq!(z.join_within("f1", "f2"), Err(Error::MultiEdge(0, 1)));
        assert_eq!(z.join_within("f1", "f1"), Err(Error::UnknownSemiedge("f1".into())));
        assert_eq!(z.join_within("f9", "f1"), Err(Error::UnknownSemiedge("f9".into())));
        let loopy = Multipole::new(
            2,
            vec![(0, 1)],
            vec![
                Semiedge { vertex: 0, label: "x".into() },
                Semiedge { vertex: 0, label: "y".into() },
            ],
        )
        .unwrap();
        assert_eq!(loopy.join_within("x", "y"), Err(Error::Loop(0)));
    }

    #[test]
    fn join_counts() {
        let a = c4_pole_indexed(1);
        let b = c4_pole_indexed(2);
        let ab = join(&a, "f2^1", &b, "f1^2").unwrap();
        assert_eq!(ab.semiedges().len(), 6);
        assert_eq!(ab.edges().len(), 9);
        assert!(join(&a, "f2^1", &b, "f2^1").is_err());
    }

    #[test]
    fn chains() {
        let one = chain(1).unwrap();
        assert_eq!(one.multipole, c4_pole_indexed(1));
        let two = chain(2).unwrap();
        assert_eq!((two.multipole.vertex_count(), two.multipole.edges().len()), (8, 10));
        let three = chain(3).unwrap();
        assert_eq!(three.multipole.vertex_count(), 12);
        assert_eq!(three.multipole.semiedges().len(), 4);
        assert_eq!(three.exposed, ["f1^1", "f2^3", "f3^1", "f4^3"].map(String::from));
        for n in 1..=6 {
            assert_eq!(chain(n).unwrap().multipole.vertex_count(), 4 * n);
        }
        assert!(chain(0).is_err());
    }

    #[test]
    fn assembled_papillon_is_cubic() {
        let g = papillon_from_chains(1, 1).unwrap();
        assert_eq!((g.order(), g.size()), (8, 12));
        assert_eq!(papillon_from_chains(3, 3).unwrap().order(), 24);
    }

    #[test]
    fn json_shape() {
        let z = c4_pole_indexed(2);
        let text = to_json(&z);
        assert!(text.starts_with(r#"{"vertices":4,"edges":[[0,1],"#), "{text}");
        assert!(text.contains(r#"{"vertex":0,"label":"f1^2"}"#));
        assert_eq!(from_json(&text).unwrap(), z);
        assert!(from_json(r#"{"vertices":1,"edges":[[0,0]],"semiedges":[]}"#).is_err());
    }
}
