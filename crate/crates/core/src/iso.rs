//! Canonical labelling and isomorphism of small cubic graphs.
//!
//! `canonical_form` runs colour refinement with individualisation and keeps
//! the lexicographically least relabelled adjacency matrix over all leaves
//! of the search tree. `are_isomorphic` is a separate direct search for a
//! vertex bijection and does not use canonical forms.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{check_bijection, CubicGraph, Vertex};
use crate::io::encode_graph6_edges;
use crate::structure::{girth, is_bipartite, odd_girth};

pub const CANONICAL_ORDER_BOUND: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalLabel {
    /// graph6 text of the canonically relabelled graph.
    pub code: Vec<u8>,
    /// `labelling[v]` is the canonical position of vertex `v`.
    pub labelling: Vec<Vertex>,
}

impl CanonicalLabel {
    pub fn graph6(&self) -> &str {
        std::str::from_utf8(&self.code).expect("graph6 is ASCII")
    }
}

/// Relabelling-invariant per-vertex data: the BFS layer sizes and the number
/// of 4-cycles through the vertex.
fn initial_colours(g: &CubicGraph, adj: &[u32]) -> Vec<u32> {
    let n = g.order();
    let mut keys: Vec<(Vec<u32>, usize)> = Vec::with_capacity(n);
    for v in 0..n {
        let mut key = Vec::with_capacity(8);
        let mut seen = 1u32 << v;
        let mut frontier = 1u32 << v;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let x = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[x];
            }
            next &= !seen;
            seen |= next;
            key.push(next.count_ones());
            frontier = next;
        }
        let [a, b, c] = g.neighbours(v);
        let squares = [(a, b), (a, c), (b, c)]
            .iter()
            .map(|&(x, y)| ((adj[x] & adj[y]) & !(1 << v)).count_ones())
            .sum::<u32>();
        key.push(squares);
        keys.push((key, v));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| keys[x].0.cmp(&keys[y].0));
    let mut colours = vec![0u32; n];
    for (pos, &v) in order.iter().enumerate() {
        colours[v] = if pos > 0 && keys[order[pos - 1]].0 == keys[v].0 {
            colours[order[pos - 1]]
        } else {
            pos as u32
        };
    }
    colours
}

/// Equitable refinement. A colour is the index of the first vertex of its
/// cell in the sorted order, so cells only ever split in place.
fn refine(g: &CubicGraph, colours: &mut [u32]) {
    let n = g.order();
    let mut cells = count_cells(colours);
    let mut sig: Vec<(u32, [u32; 3], usize)> = Vec::with_capacity(n);
    loop {
        sig.clear();
        for v in 0..n {
            let mut nb = g.neighbours(v).map(|w| colours[w]);
            nb.sort_unstable();
            sig.push((colours[v], nb, v));
        }
        sig.sort_unstable();
        let mut start = 0;
        for i in 0..n {
            if i > 0 && (sig[i].0, sig[i].1) != (sig[i - 1].0, sig[i - 1].1) {
                start = i;
            }
            colours[sig[i].2] = start as u32;
        }
        let now = count_cells(colours);
        if now == cells {
            return;
        }
        cells = now;
    }
}

fn count_cells(colours: &[u32]) -> usize {
    let mut seen = vec![false; colours.len()];
    colours.iter().filter(|&&c| !std::mem::replace(&mut seen[c as usize], true)).count()
}

struct Search<'a> {
    g: &'a CubicGraph,
    best: Option<(Vec<u32>, Vec<u32>)>,
}

impl Search<'_> {
    fn leaf(&mut self, colours: &[u32]) {
        let n = self.g.order();
        let mut rows = vec![0u32; n];
        for &(a, b) in self.g.edges() {
            let (x, y) = (colours[a] as usize, colours[b] as usize);
            rows[x] |= 1 << (n - 1 - y);
            rows[y] |= 1 << (n - 1 - x);
        }
        if self.best.as_ref().is_none_or(|(b, _)| rows < *b) {
            self.best = Some((rows, colours.to_vec()));
        }
    }

    fn descend(&mut self, mut colours: Vec<u32>) {
        refine(self.g, &mut colours);
        let n = colours.len();
        let mut size = vec![0usize; n];
        for &c in &colours {
            size[c as usize] += 1;
        }
        let target = (0..n).filter(|&c| size[c] > 1).min_by_key(|&c| (size[c], c));
        let Some(target) = target else {
            self.leaf(&colours);
            return;
        };
        for v in 0..n {
            if colours[v] as usize != target {
                continue;
            }
            let mut child = colours.clone();
            for (w, c) in child.iter_mut().enumerate() {
                if *c as usize == target && w != v {
                    *c += 1;
                }
            }
            self.descend(child);
        }
    }
}

pub fn canonical_form(g: &CubicGraph) -> Result<CanonicalLabel> {
    let n = g.order();
    if n > CANONICAL_ORDER_BOUND {
        return Err(Error::OrderTooLarge { order: n, bound: CANONICAL_ORDER_BOUND });
    }
    let adj: Vec<u32> = g.adjacency_masks().into_iter().map(|m| m as u32).collect();
    let mut search = Search { g, best: None };
    search.descend(initial_colours(g, &adj));
    let (_, colours) = search.best.expect("search reaches at least one leaf");
    let labelling: Vec<Vertex> = colours.into_iter().map(|c| c as usize).collect();
    let edges: Vec<_> = g.edges().iter().map(|&(a, b)| (labelling[a], labelling[b])).collect();
    Ok(CanonicalLabel { code: encode_graph6_edges(n, &edges).into_bytes(), labelling })
}

/// Cheap isomorphism invariants.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Invariants {
    pub order: usize,
    pub girth: usize,
    pub odd_girth: Option<usize>,
    pub bipartite: bool,
    /// Number of cycles of length 3, 4, 5 and 6.
    pub short_cycles: [usize; 4],
}

pub fn invariants(g: &CubicGraph) -> Invariants {
    let mut short_cycles = [0usize; 4];
    // each cycle is counted from its least vertex, in both directions
    fn walk(g: &CubicGraph, start: Vertex, at: Vertex, len: usize, path: &mut Vec<Vertex>, counts: &mut [usize; 4]) {
        for w in g.neighbours(at) {
            if w == start && len >= 3 {
                counts[len - 3] += 1;
            } else if w > start && !path.contains(&w) && len < 6 {
                path.push(w);
                walk(g, start, w, len + 1, path, counts);
                path.pop();
            }
        }
    }
    for s in 0..g.order() {
        let mut path = vec![s];
        walk(g, s, s, 1, &mut path, &mut short_cycles);
    }
    for c in &mut short_cycles {
        *c /= 2;
    }
    Invariants {
        order: g.order(),
        girth: girth(g),
        odd_girth: odd_girth(g).length(),
        bipartite: is_bipartite(g),
        short_cycles,
    }
}

/// A vertex bijection `map[v]` from the first graph to the second.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IsoMapping(pub Vec<Vertex>);

/// Direct backtracking: vertices of `g` are mapped in BFS order from 0,
/// each one to an unused neighbour of its parent's image.
pub fn are_isomorphic(g: &CubicGraph, h: &CubicGraph) -> Result<Option<IsoMapping>> {
    for x in [g, h] {
        if x.order() > CANONICAL_ORDER_BOUND {
            return Err(Error::OrderTooLarge { order: x.order(), bound: CANONICAL_ORDER_BOUND });
        }
    }
    if g.order() != h.order() || invariants(g) != invariants(h) {
        return Ok(None);
    }
    let n = g.order();
    let mut order = vec![0];
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        let x = order[i];
        for w in g.neighbours(x) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = x;
                order.push(w);
            }
        }
        i += 1;
    }
    fn extend(
        g: &CubicGraph,
        h: &CubicGraph,
        order: &[Vertex],
        parent: &[Vertex],
        i: usize,
        map: &mut [Vertex],
        used: &mut [bool],
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let x = order[i];
        let candidates = h.neighbours(map[parent[x]]);
        for y in candidates {
            if used[y] {
                continue;
            }
            let consistent = g
                .neighbours(x)
                .iter()
                .all(|&w| map[w] == usize::MAX || h.has_edge(y, map[w]));
            if !consistent {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if extend(g, h, order, parent, i + 1, map, used) {
                return true;
            }
            map[x] = usize::MAX;
            used[y] = false;
        }
        false
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    for y in 0..n {
        map[0] = y;
        used[y] = true;
        if extend(g, h, &order, &parent, 1, &mut map, &mut used) {
            assert!(is_isomorphism(g, h, &map), "search produced an invalid mapping");
            return Ok(Some(IsoMapping(map)));
        }
        used[y] = false;
    }
    Ok(None)
}

fn is_isomorphism(g: &CubicGraph, h: &CubicGraph, map: &[Vertex]) -> bool {
    check_bijection(map, h.order()).is_ok()
        && g.order() == h.order()
        && g.edges().iter().all(|&(a, b)| h.has_edge(map[a], map[b]))
}

/// True when `mapping` sends every edge of `g` to an edge of `g`.
pub fn verify_automorphism(g: &CubicGraph, mapping: &[Vertex]) -> Result<bool> {
    check_bijection(mapping, g.order())?;
    Ok(is_isomorphism(g, g, mapping))
}

/// Isomorphism decided through canonical forms, checked against the direct
/// search.
pub fn isomorphic_checked(g: &CubicGraph, h: &CubicGraph) -> Result<Option<IsoMapping>> {
    let direct = are_isomorphic(g, h)?;
    if g.order() != h.order() {
        return Ok(None);
    }
    let same = canonical_form(g)?.code == canonical_form(h)?.code;
    assert_eq!(same, direct.is_some(), "canonical form and direct search disagree");
    Ok(direct)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle_permutation_graph, named_graph, papillon, psi_automorphism, Permutation};

    fn reversed(g: &CubicGraph) -> CubicGraph {
        let n = g.order();
        g.relabel(&(0..n).rev().collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn canonical_form_ignores_labels() {
        for g in [named_graph("Petersen").unwrap(), papillon(2, 3).0, named_graph("Q3").unwrap()] {
            assert_eq!(canonical_form(&g).unwrap().code, canonical_form(&reversed(&g)).unwrap().code);
        }
    }

    #[test]
    fn labelling_reproduces_code() {
        let g = papillon(1, 2).0;
        let c = canonical_form(&g).unwrap();
        let h = g.relabel(&c.labelling).unwrap();
        assert_eq!(crate::io::to_graph6(&h).as_bytes(), c.code.as_slice());
    }

    #[test]
    fn smallest_papillon_is_a_cycle_permutation_graph() {
        let p = papillon(1, 1).0;
        let c = cycle_permutation_graph(&Permutation::parse("(1 2)", 4).unwrap()).unwrap();
        assert_eq!(canonical_form(&p).unwrap().code, canonical_form(&c).unwrap().code);
        assert!(isomorphic_checked(&p, &c).unwrap().is_some());
    }

    #[test]
    fn distinct_papillons() {
        assert_ne!(canonical_form(&papillon(1, 3).0).unwrap(), canonical_form(&papillon(2, 2).0).unwrap());
        assert!(are_isomorphic(&papillon(1, 4).0, &papillon(2, 3).0).unwrap().is_none());
        assert!(are_isomorphic(&named_graph("K33").unwrap(), &named_graph("Prism6").unwrap()).unwrap().is_none());
    }

    #[test]
    fn swapped_parameters_are_isomorphic() {
        let raw = crate::multipole::assemble_chains(3, 2).unwrap();
        assert_ne!(raw, papillon(2, 3).0);
        let map = are_isomorphic(&raw, &papillon(2, 3).0).unwrap().expect("isomorphic");
        assert!(is_isomorphism(&raw, &papillon(2, 3).0, &map.0));
        assert!(isomorphic_checked(&raw, &papillon(2, 3).0).unwrap().is_some());
    }

    #[test]
    fn automorphisms() {
        let (g, layout) = papillon(2, 2);
        assert!(verify_automorphism(&g, &psi_automorphism(&layout)).unwrap());
        let id: Vec<_> = (0..g.order()).collect();
        assert!(verify_automorphism(&g, &id).unwrap());
        let (g, layout) = papillon(1, 2);
        let mut swap: Vec<_> = (0..g.order()).collect();
        swap.swap(layout.u(1), layout.u(2));
        assert!(!verify_automorphism(&g, &swap).unwrap());
        assert!(matches!(verify_automorphism(&g, &[0, 0]), Err(Error::NotABijection(_))));
    }

    #[test]
    fn invariants_count_short_cycles() {
        assert_eq!(invariants(&named_graph("K4").unwrap()).short_cycles, [4, 3, 0, 0]);
        assert_eq!(invariants(&named_graph("Petersen").unwrap()).short_cycles, [0, 0, 12, 10]);
        assert_eq!(invariants(&named_graph("Q3").unwrap()).short_cycles, [0, 6, 0, 16]);
    }

    #[test]
    fn rejects_large_orders() {
        let g = papillon(4, 5).0;
        assert!(matches!(canonical_form(&g), Err(Error::OrderTooLarge { order: 36, bound: 32 })));
    }
}
