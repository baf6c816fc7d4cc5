//! The immutable cubic graph value and cycles inside it.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type EdgeId = usize;

/// A simple connected 3-regular graph of even order.
///
/// Vertices are `0..order`, edge ids are `0..3*order/2` in the order the
/// edges were supplied. Each adjacency slot holds `(neighbour, edge id)`,
/// sorted by edge id.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubicGraph {
    edges: Vec<(Vertex, Vertex)>,
    adjacency: Vec<[(Vertex, EdgeId); 3]>,
}

impl CubicGraph {
    /// Validates an edge list and builds the graph. Edge ids follow input order.
    pub fn new(order: usize, edge_list: &[(Vertex, Vertex)]) -> Result<Self> {
        if order % 2 == 1 {
            return Err(Error::OddOrder(order));
        }
        if order < 4 {
            return Err(Error::OrderTooSmall(order));
        }
        let mut incident: Vec<Vec<(Vertex, EdgeId)>> = vec![Vec::with_capacity(3); order];
        let mut seen = HashSet::with_capacity(edge_list.len());
        let mut edges = Vec::with_capacity(edge_list.len());
        for (id, &(u, v)) in edge_list.iter().enumerate() {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::NotSimple(format!("loop at vertex {u}")));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::NotSimple(format!("parallel edges between {u} and {v}")));
            }
            edges.push(key);
            incident[u].push((v, id));
            incident[v].push((u, id));
        }
        for (vertex, list) in incident.iter().enumerate() {
            if list.len() != 3 {
                return Err(Error::NotCubic { vertex, degree: list.len() });
            }
        }
        let adjacency: Vec<[(Vertex, EdgeId); 3]> =
            incident.into_iter().map(|l| [l[0], l[1], l[2]]).collect();
        let graph = CubicGraph { edges, adjacency };
        if !graph.is_connected_without(&[]) {
            return Err(Error::Disconnected);
        }
        Ok(graph)
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of every edge, indexed by edge id, smaller endpoint first.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other_end(&self, e: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn incidences(&self, v: Vertex) -> &[(Vertex, EdgeId); 3] {
        &self.adjacency[v]
    }

    pub fn neighbours(&self, v: Vertex) -> [Vertex; 3] {
        let a = &self.adjacency[v];
        [a[0].0, a[1].0, a[2].0]
    }

    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        self.adjacency
            .get(u)?
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// Renumbers vertices by `map[old] = new`; edge ids keep their order.
    pub fn relabel(&self, map: &[Vertex]) -> Result<CubicGraph> {
        check_bijection(map, self.order())?;
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (map[u], map[v])).collect();
        CubicGraph::new(self.order(), &edges)
    }

    /// Adjacency rows as bit masks. Only valid for order <= 64.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.order() <= 64, "adjacency masks need order <= 64");
        self.adjacency
            .iter()
            .map(|a| a.iter().fold(0u64, |m, &(w, _)| m | (1 << w)))
            .collect()
    }

    /// Connectivity after deleting the given vertices.
    pub fn is_connected_without(&self, removed: &[Vertex]) -> bool {
        let n = self.order();
        let mut gone = vec![false; n];
        for &v in removed {
            gone[v] = true;
        }
        let Some(start) = (0..n).find(|&v| !gone[v]) else {
            return true;
        };
        let mut seen = gone.clone();
        seen[start] = true;
        let mut stack = vec![start];
        let mut reached = 1;
        while let Some(x) = stack.pop() {
            for &(y, _) in &self.adjacency[x] {
                if !seen[y] {
                    seen[y] = true;
                    reached += 1;
                    stack.push(y);
                }
            }
        }
        reached + removed.len() == n
    }

    /// Vertex-pair deletion check; for cubic graphs this coincides with
    /// 3-edge-connectivity.
    pub fn is_three_connected(&self) -> bool {
        let n = self.order();
        if n == 4 {
            return true;
        }
        for a in 0..n {
            if !self.is_connected_without(&[a]) {
                return false;
            }
            for b in a + 1..n {
                if !self.is_connected_without(&[a, b]) {
                    return false;
                }
            }
        }
        true
    }
}

pub(crate) fn check_bijection(map: &[Vertex], n: usize) -> Result<()> {
    if map.len() != n {
        return Err(Error::NotABijection(format!("length {} for order {n}", map.len())));
    }
    let mut hit = vec![false; n];
    for &m in map {
        if m >= n || hit[m] {
            return Err(Error::NotABijection(format!("image {m} repeated or out of range")));
        }
        hit[m] = true;
    }
    Ok(())
}

/// A cycle given as a sequence of distinct vertices, consecutive ones adjacent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cycle {
    vertices: Vec<Vertex>,
}

impl Cycle {
    pub fn new(g: &CubicGraph, vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidCycle(format!("length {} < 3", vertices.len())));
        }
        let mut seen = HashSet::with_capacity(vertices.len());
        for &v in &vertices {
            if v >= g.order() {
                return Err(Error::VertexOutOfRange { vertex: v, order: g.order() });
            }
            if !seen.insert(v) {
                return Err(Error::InvalidCycle(format!("vertex {v} repeats")));
            }
        }
        let k = vertices.len();
        for i in 0..k {
            let (a, b) = (vertices[i], vertices[(i + 1) % k]);
            if !g.has_edge(a, b) {
                return Err(Error::InvalidCycle(format!("{a} and {b} are not adjacent")));
            }
        }
        Ok(Cycle { vertices })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Edge ids in traversal order: the i-th edge joins vertex i to vertex i+1.
    pub fn edge_ids(&self, g: &CubicGraph) -> Vec<EdgeId> {
        let k = self.vertices.len();
        (0..k)
            .map(|i| {
                g.edge_between(self.vertices[i], self.vertices[(i + 1) % k])
                    .expect("cycle validated against this graph")
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Vec<(usize, usize)> {
        vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    }

    #[test]
    fn builds_k4() {
        let g = CubicGraph::new(4, &k4()).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.size(), 6);
        assert_eq!(g.edge_between(2, 3), Some(5));
        assert!(g.is_three_connected());
    }

    #[test]
    fn rejects_cycle_graph() {
        let c6: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        assert!(matches!(CubicGraph::new(6, &c6), Err(Error::NotCubic { degree: 2, .. })));
    }

    #[test]
    fn rejects_loops_multi_edges_and_odd_order() {
        let mut e = k4();
        e[5] = (2, 2);
        assert!(matches!(CubicGraph::new(4, &e), Err(Error::NotSimple(_))));
        let mut e = k4();
        e[5] = (0, 1);
        assert!(matches!(CubicGraph::new(4, &e), Err(Error::NotSimple(_))));
        assert_eq!(CubicGraph::new(5, &[]), Err(Error::OddOrder(5)));
        assert!(matches!(
            CubicGraph::new(4, &[(0, 9)]),
            Err(Error::VertexOutOfRange { vertex: 9, .. })
        ));
    }

    #[test]
    fn rejects_two_disjoint_k4() {
        let mut e = k4();
        e.extend(k4().into_iter().map(|(a, b)| (a + 4, b + 4)));
        assert_eq!(CubicGraph::new(8, &e), Err(Error::Disconnected));
    }

    #[test]
    fn cycle_validation() {
        let g = CubicGraph::new(4, &k4()).unwrap();
        let c = Cycle::new(&g, vec![0, 1, 2, 3]).unwrap();
        assert_eq!(c.edge_ids(&g), vec![0, 3, 5, 2]);
        assert!(Cycle::new(&g, vec![0, 1]).is_err());
        assert!(Cycle::new(&g, vec![0, 1, 0]).is_err());
    }

    #[test]
    fn relabel_requires_bijection() {
        let g = CubicGraph::new(4, &k4()).unwrap();
        assert!(matches!(g.relabel(&[0, 0, 1, 2]), Err(Error::NotABijection(_))));
        let h = g.relabel(&[3, 2, 1, 0]).unwrap();
        assert_eq!(h.endpoints(0), (2, 3));
    }
}
