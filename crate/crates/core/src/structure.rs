//! Structural queries: girth, odd girth, bipartiteness, cyclic edge connectivity.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{CubicGraph, Cycle, EdgeId, Vertex};

/// Default order bound for the brute-force cyclic edge connectivity search.
pub const CYCLIC_CONNECTIVITY_BOUND: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OddGirth {
    Finite { length: usize, witness: Cycle },
    Bipartite,
}

impl OddGirth {
    pub fn length(&self) -> Option<usize> {
        match self {
            OddGirth::Finite { length, .. } => Some(*length),
            OddGirth::Bipartite => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartition {
    /// Side (0 or 1) of every vertex.
    Bipartite(Vec<u8>),
    OddCycle(Cycle),
}

impl Bipartition {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartition::Bipartite(_))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CyclicConnectivity {
    Value(usize),
    /// No edge cut leaves two components that both contain a cycle.
    Undefined,
}

impl fmt::Display for CyclicConnectivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CyclicConnectivity::Value(k) => write!(f, "{k}"),
            CyclicConnectivity::Undefined => write!(f, "undefined"),
        }
    }
}

struct Bfs {
    dist: Vec<usize>,
    parent: Vec<Vertex>,
}

fn bfs(g: &CubicGraph, root: Vertex) -> Bfs {
    let n = g.order();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    dist[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        for &(y, _) in g.incidences(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    Bfs { dist, parent }
}

fn path_to_root(parent: &[Vertex], mut v: Vertex, root: Vertex) -> Vec<Vertex> {
    let mut path = vec![v];
    while v != root {
        v = parent[v];
        path.push(v);
    }
    path
}

/// Length of a shortest cycle.
pub fn girth(g: &CubicGraph) -> usize {
    let mut best = usize::MAX;
    for root in 0..g.order() {
        let b = bfs(g, root);
        for &(x, y) in g.edges() {
            if b.parent[x] == y || b.parent[y] == x {
                continue;
            }
            best = best.min(b.dist[x] + b.dist[y] + 1);
        }
    }
    best
}

/// Shortest odd cycle with a witness, or `Bipartite`.
///
/// The witness comes from the lowest root vertex attaining the minimum and
/// the lowest edge id closing it.
pub fn odd_girth(g: &CubicGraph) -> OddGirth {
    let mut best: Option<(usize, Vertex, EdgeId, Bfs)> = None;
    for root in 0..g.order() {
        let b = bfs(g, root);
        let closing = g
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, &(x, y))| b.dist[x] == b.dist[y])
            .map(|(e, &(x, _))| (2 * b.dist[x] + 1, e))
            .min();
        if let Some((len, e)) = closing {
            if best.as_ref().is_none_or(|(l, ..)| len < *l) {
                best = Some((len, root, e, b));
            }
        }
    }
    let Some((length, root, e, b)) = best else {
        return OddGirth::Bipartite;
    };
    let (x, y) = g.endpoints(e);
    let mut vertices = path_to_root(&b.parent, x, root);
    vertices.reverse();
    let mut back = path_to_root(&b.parent, y, root);
    back.pop();
    vertices.extend(back);
    // root, ..., x, y, ..., (predecessor of root)
    let witness = Cycle::new(g, vertices).expect("shortest odd closed walk is a cycle");
    debug_assert_eq!(witness.len(), length);
    OddGirth::Finite { length, witness }
}

pub fn bipartition(g: &CubicGraph) -> Bipartition {
    let b = bfs(g, 0);
    if g.edges().iter().all(|&(x, y)| b.dist[x] % 2 != b.dist[y] % 2) {
        Bipartition::Bipartite(b.dist.iter().map(|d| (d % 2) as u8).collect())
    } else {
        match odd_girth(g) {
            OddGirth::Finite { witness, .. } => Bipartition::OddCycle(witness),
            OddGirth::Bipartite => unreachable!("odd closed walk implies an odd cycle"),
        }
    }
}

pub fn is_bipartite(g: &CubicGraph) -> bool {
    let b = bfs(g, 0);
    g.edges().iter().all(|&(x, y)| b.dist[x] % 2 != b.dist[y] % 2)
}

pub fn has_triangle(g: &CubicGraph) -> bool {
    (0..g.order()).any(|v| {
        let [a, b, c] = g.neighbours(v);
        g.has_edge(a, b) || g.has_edge(a, c) || g.has_edge(b, c)
    })
}

/// Does deleting `cut` leave at least two components containing a cycle?
fn separates_cycles(g: &CubicGraph, removed: &[bool]) -> bool {
    let n = g.order();
    let mut comp = vec![usize::MAX; n];
    let mut cyclic = 0;
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        comp[start] = start;
        let mut stack = vec![start];
        let (mut verts, mut degree_sum) = (0usize, 0usize);
        while let Some(x) = stack.pop() {
            verts += 1;
            for &(y, e) in g.incidences(x) {
                if removed[e] {
                    continue;
                }
                degree_sum += 1;
                if comp[y] == usize::MAX {
                    comp[y] = start;
                    stack.push(y);
                }
            }
        }
        if degree_sum / 2 >= verts {
            cyclic += 1;
            if cyclic >= 2 {
                return true;
            }
        }
    }
    false
}

/// Smallest number of edges whose deletion leaves two components that both
/// contain a cycle, by exhaustive enumeration of cuts up to the girth.
pub fn cyclic_edge_connectivity(g: &CubicGraph) -> Result<CyclicConnectivity> {
    cyclic_edge_connectivity_bounded(g, CYCLIC_CONNECTIVITY_BOUND)
}

pub fn cyclic_edge_connectivity_bounded(
    g: &CubicGraph,
    order_bound: usize,
) -> Result<CyclicConnectivity> {
    if g.order() > order_bound {
        return Err(Error::OrderTooLarge { order: g.order(), bound: order_bound });
    }
    let m = g.size();
    let gi = girth(g);
    // The coboundary of a shortest cycle has girth-many edges and its
    // complement carries a cycle once order >= 2 * girth.
    let max_k = if g.order() >= 2 * gi { gi } else { m };
    let mut removed = vec![false; m];
    for k in 1..=max_k {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            for &i in &idx {
                removed[i] = true;
            }
            let hit = separates_cycles(g, &removed);
            for &i in &idx {
                removed[i] = false;
            }
            if hit {
                return Ok(CyclicConnectivity::Value(k));
            }
            if !next_combination(&mut idx, m) {
                break;
            }
        }
    }
    Ok(CyclicConnectivity::Undefined)
}

/// Advances a sorted k-subset of `0..n` in lexicographic order.
pub(crate) fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{named_graph, papillon};

    #[test]
    fn next_combination_enumerates_binomial() {
        let mut idx = vec![0, 1, 2];
        let mut count = 1;
        while next_combination(&mut idx, 6) {
            count += 1;
        }
        assert_eq!(count, 20);
    }

    #[test]
    fn girth_of_named_graphs() {
        assert_eq!(girth(&named_graph("K4").unwrap()), 3);
        assert_eq!(girth(&named_graph("K33").unwrap()), 4);
        assert_eq!(girth(&named_graph("Petersen").unwrap()), 5);
        assert_eq!(girth(&named_graph("Q3").unwrap()), 4);
    }

    #[test]
    fn k33_is_bipartite_everywhere() {
        let g = named_graph("K33").unwrap();
        assert_eq!(odd_girth(&g), OddGirth::Bipartite);
        assert!(bipartition(&g).is_bipartite());
        assert!(is_bipartite(&g));
    }

    #[test]
    fn prism_is_bipartite() {
        let g = named_graph("Prism6").unwrap();
        let Bipartition::Bipartite(side) = bipartition(&g) else { panic!() };
        assert!(g.edges().iter().all(|&(a, b)| side[a] != side[b]));
    }

    #[test]
    fn papillon_one_one_odd_cycle() {
        let (g, layout) = papillon(1, 1);
        let og = odd_girth(&g);
        assert_eq!(og.length(), Some(5));
        // the hand-picked 5-cycle (u1,u2,v2,v4,u4) is valid as well
        let named = [layout.u(1), layout.u(2), layout.v(2), layout.v(4), layout.u(4)];
        assert!(Cycle::new(&g, named.to_vec()).is_ok());
        assert!(matches!(bipartition(&g), Bipartition::OddCycle(c) if c.len() % 2 == 1));
    }

    #[test]
    fn cyclic_connectivity_small_cases() {
        assert_eq!(
            cyclic_edge_connectivity(&named_graph("K4").unwrap()).unwrap(),
            CyclicConnectivity::Undefined
        );
        assert_eq!(
            cyclic_edge_connectivity(&named_graph("K33").unwrap()).unwrap(),
            CyclicConnectivity::Undefined
        );
        assert_eq!(
            cyclic_edge_connectivity(&named_graph("Petersen").unwrap()).unwrap(),
            CyclicConnectivity::Value(5)
        );
        assert_eq!(
            cyclic_edge_connectivity(&papillon(1, 1).0).unwrap(),
            CyclicConnectivity::Value(4)
        );
        assert_eq!(
            cyclic_edge_connectivity(&papillon(2, 2).0).unwrap(),
            CyclicConnectivity::Value(4)
        );
    }

    #[test]
    fn cyclic_connectivity_rejects_large_orders() {
        let (g, _) = papillon(3, 4);
        assert_eq!(
            cyclic_edge_connectivity(&g),
            Err(Error::OrderTooLarge { order: 28, bound: 24 })
        );
    }
}
