//! Constructors: papillon graphs with their named layout, cycle permutation
//! graphs, the permutations realising papillon graphs, and reference graphs.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{CubicGraph, EdgeId, Vertex};

/// Papillon parameters, canonicalised so that `r <= l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PapillonParams {
    r: usize,
    l: usize,
}

impl PapillonParams {
    pub fn new(r: usize, l: usize) -> Result<Self> {
        if r == 0 || l == 0 {
            return Err(Error::PreconditionViolated(format!(
                "papillon parameters must be positive, got ({r}, {l})"
            )));
        }
        Ok(PapillonParams { r: r.min(l), l: r.max(l) })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn s(&self) -> usize {
        self.r
    }

    pub fn is_balanced(&self) -> bool {
        self.r == self.l
    }

    /// Number of C4-poles, `r + l`.
    pub fn poles(&self) -> usize {
        self.r + self.l
    }

    /// Length of the outer and inner cycles, `2r + 2l`.
    pub fn cycle_len(&self) -> usize {
        2 * (self.r + self.l)
    }
}

impl fmt::Display for PapillonParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P({},{})", self.r, self.l)
    }
}

/// Edge list of the papillon graph straight from its definition, without
/// swapping the parameters; `s = min(r, l)`.
///
/// Vertex `u_i` has id `i - 1` and `v_i` has id `2r + 2l + i - 1`. Edge order:
/// outer cycle `u_i u_{i+1}`, spokes `u_i v_i`, then the inner cycle.
pub fn papillon_edges(r: usize, l: usize) -> Vec<(Vertex, Vertex)> {
    let total = 2 * (r + l);
    let s = r.min(l);
    let u = |i: usize| i - 1;
    let v = |i: usize| total + i - 1;
    let mut edges = Vec::with_capacity(3 * total);
    for i in 1..=total {
        edges.push((u(i), u(i % total + 1)));
    }
    for i in 1..=total {
        edges.push((u(i), v(i)));
    }
    for i in 1..=r + l {
        edges.push((v(2 * i - 1), v(2 * i)));
    }
    for i in (1..r + l).filter(|&i| i != s) {
        edges.push((v(2 * i - 1), v(2 * i + 2)));
    }
    edges.push((v(2), v(2 * s + 2)));
    edges.push((v(2 * s - 1), v(total - 1)));
    edges
}

/// The papillon graph for `(r, l)` exactly as defined, without canonicalising.
pub fn papillon_graph(r: usize, l: usize) -> Result<CubicGraph> {
    PapillonParams::new(r, l)?;
    CubicGraph::new(4 * (r + l), &papillon_edges(r, l))
}

/// Named structure of a papillon graph.
///
/// Poles are numbered `1..=r+l`; pole `T_j` is the 4-cycle
/// `(u_{2j-1}, u_{2j}, v_{2j}, v_{2j-1})` with semiedges `e1` at `u_{2j-1}`,
/// `e2` at `u_{2j}`, `e3` at `v_{2j}` and `e4` at `v_{2j-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PapillonLayout {
    params: PapillonParams,
    outer: Vec<EdgeId>,
    spokes: Vec<EdgeId>,
    inner: Vec<EdgeId>,
    cut: [EdgeId; 4],
    boundaries: Vec<[EdgeId; 4]>,
    pole_edges: Vec<[EdgeId; 4]>,
}

impl PapillonLayout {
    fn build(g: &CubicGraph, params: PapillonParams) -> Self {
        let total = params.cycle_len();
        let edge = |a: Vertex, b: Vertex| g.edge_between(a, b).expect("papillon edge present");
        let u = |i: usize| i - 1;
        let v = |i: usize| total + i - 1;
        let outer = (0..total).collect();
        let spokes = (total..2 * total).collect();
        let inner = (2 * total..3 * total).collect();
        let (r, l) = (params.r, params.l);
        let cut = [
            edge(u(1), u(total)),
            edge(v(2 * r - 1), v(total - 1)),
            edge(v(2), v(2 * r + 2)),
            edge(u(2 * r), u(2 * r + 1)),
        ];
        let mut boundaries = Vec::with_capacity(r + l);
        let mut pole_edges = Vec::with_capacity(r + l);
        for j in 1..=r + l {
            let corners = [u(2 * j - 1), u(2 * j), v(2 * j), v(2 * j - 1)];
            let mut bnd = [0; 4];
            for (k, &z) in corners.iter().enumerate() {
                let &(_, e) = g
                    .incidences(z)
                    .iter()
                    .find(|(w, _)| !corners.contains(w))
                    .expect("every pole vertex has one outside neighbour");
                bnd[k] = e;
            }
            boundaries.push(bnd);
            pole_edges.push([
                edge(corners[0], corners[1]),
                edge(corners[1], corners[2]),
                edge(corners[2], corners[3]),
                edge(corners[3], corners[0]),
            ]);
        }
        PapillonLayout { params, outer, spokes, inner, cut, boundaries, pole_edges }
    }

    pub fn params(&self) -> PapillonParams {
        self.params
    }

    /// Vertex id of `u_i`, `1 <= i <= 2r + 2l`.
    pub fn u(&self, i: usize) -> Vertex {
        assert!((1..=self.params.cycle_len()).contains(&i), "u index {i} out of range");
        i - 1
    }

    /// Vertex id of `v_i`, `1 <= i <= 2r + 2l`.
    pub fn v(&self, i: usize) -> Vertex {
        assert!((1..=self.params.cycle_len()).contains(&i), "v index {i} out of range");
        self.params.cycle_len() + i - 1
    }

    /// `u_i` / `v_i` label of a vertex id.
    pub fn label(&self, x: Vertex) -> String {
        let t = self.params.cycle_len();
        if x < t {
            format!("u{}", x + 1)
        } else {
            format!("v{}", x - t + 1)
        }
    }

    pub fn edge_label(&self, g: &CubicGraph, e: EdgeId) -> String {
        let (a, b) = g.endpoints(e);
        format!("{}{}", self.label(a), self.label(b))
    }

    pub fn outer_edges(&self) -> &[EdgeId] {
        &self.outer
    }

    pub fn inner_edges(&self) -> &[EdgeId] {
        &self.inner
    }

    pub fn spokes(&self) -> &[EdgeId] {
        &self.spokes
    }

    /// The principal 4-edge-cut `[a, b, c, d]`.
    pub fn principal_cut(&self) -> [EdgeId; 4] {
        self.cut
    }

    /// Edges `[e1, e2, e3, e4]` leaving pole `T_j` (1-based).
    pub fn boundary(&self, j: usize) -> [EdgeId; 4] {
        self.boundaries[j - 1]
    }

    /// Corners `[u_{2j-1}, u_{2j}, v_{2j}, v_{2j-1}]` of pole `T_j`.
    pub fn pole_vertices(&self, j: usize) -> [Vertex; 4] {
        [self.u(2 * j - 1), self.u(2 * j), self.v(2 * j), self.v(2 * j - 1)]
    }

    /// The four 4-cycle edges of `T_j`, in cycle order starting at `u_{2j-1}u_{2j}`.
    pub fn pole_edges(&self, j: usize) -> [EdgeId; 4] {
        self.pole_edges[j - 1]
    }

    fn validate(&self, g: &CubicGraph) {
        let t = self.params.cycle_len();
        let is_single_cycle = |ids: &[EdgeId]| -> bool {
            let es: Vec<_> = ids.iter().map(|&e| g.endpoints(e)).collect();
            single_cycle_length(&es) == Some(ids.len())
        };
        assert!(is_single_cycle(&self.outer), "outer edges are not one cycle");
        assert!(is_single_cycle(&self.inner), "inner edges are not one cycle");
        let mut covered = vec![false; g.order()];
        for &e in &self.spokes {
            let (a, b) = g.endpoints(e);
            assert!(!covered[a] && !covered[b], "spokes are not a matching");
            covered[a] = true;
            covered[b] = true;
        }
        assert!(covered.iter().all(|&c| c), "spokes do not cover every vertex");
        // the cut separates the right chain T_1..T_r from the rest
        let r = self.params.r;
        let right = |x: Vertex| {
            let i = if x < t { x + 1 } else { x - t + 1 };
            i <= 2 * r
        };
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            assert_eq!(right(a) != right(b), self.cut.contains(&e), "cut mismatch at edge {e}");
        }
        for j in 1..=self.params.poles() {
            let c = self.pole_vertices(j);
            for k in 0..4 {
                assert!(g.has_edge(c[k], c[(k + 1) % 4]), "T_{j} is not a 4-cycle");
            }
        }
    }
}

/// Length of the cycle formed by the edges if they form exactly one cycle.
fn single_cycle_length(edges: &[(Vertex, Vertex)]) -> Option<usize> {
    let mut adj: std::collections::HashMap<Vertex, Vec<Vertex>> = Default::default();
    for &(a, b) in edges {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    if adj.values().any(|n| n.len() != 2) {
        return None;
    }
    let &start = adj.keys().min()?;
    let (mut prev, mut cur, mut len) = (start, adj[&start][0], 1);
    while cur != start {
        let n = &adj[&cur];
        let next = if n[0] == prev { n[1] } else { n[0] };
        prev = cur;
        cur = next;
        len += 1;
    }
    (len == adj.len()).then_some(len)
}

/// Papillon graph with parameters swapped into `r <= l`, plus its layout.
/// All layout invariants are checked on construction.
///
/// # Panics
/// If `r` or `l` is zero.
pub fn papillon(r: usize, l: usize) -> (CubicGraph, PapillonLayout) {
    let params = PapillonParams::new(r, l).expect("papillon parameters must be positive");
    papillon_from_params(params)
}

pub fn papillon_from_params(params: PapillonParams) -> (CubicGraph, PapillonLayout) {
    let g = CubicGraph::new(4 * params.poles(), &papillon_edges(params.r, params.l))
        .expect("papillon definition yields a cubic graph");
    let layout = PapillonLayout::build(&g, params);
    layout.validate(&g);
    (g, layout)
}

/// A permutation of the symbols `1..=t`, stored zero-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(t: usize) -> Self {
        Permutation { image: (0..t).collect() }
    }

    /// From zero-based images.
    pub fn from_images(image: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; image.len()];
        for &i in &image {
            if i >= image.len() || seen[i] {
                return Err(Error::InvalidPermutation(format!("{image:?} is not a bijection")));
            }
            seen[i] = true;
        }
        Ok(Permutation { image })
    }

    /// Product of transpositions on `1..=t`; every pair must be disjoint.
    pub fn from_transpositions(t: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Self::from_cycles(t, &pairs.iter().map(|&(a, b)| vec![a, b]).collect::<Vec<_>>())
    }

    /// From disjoint cycles over the one-based symbols `1..=t`.
    pub fn from_cycles(t: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut image: Vec<usize> = (0..t).collect();
        let mut used = vec![false; t];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a == 0 || a > t {
                    return Err(Error::InvalidPermutation(format!("symbol {a} outside 1..={t}")));
                }
                if used[a - 1] {
                    return Err(Error::InvalidPermutation(format!("symbol {a} repeated")));
                }
                used[a - 1] = true;
                let b = cycle[(k + 1) % cycle.len()];
                image[a - 1] = b.wrapping_sub(1);
            }
        }
        Self::from_images(image)
    }

    /// Parses cycle notation such as `(1 2)(3 4 5)`; `()` or empty is the identity.
    pub fn parse(text: &str, t: usize) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .and_then(|r| r.split_once(')'))
                .ok_or_else(|| Error::InvalidPermutation(format!("malformed cycle notation `{text}`")))?;
            let symbols: std::result::Result<Vec<usize>, _> = body
                .0
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(usize::from_str)
                .collect();
            let symbols =
                symbols.map_err(|e| Error::InvalidPermutation(format!("bad symbol in `{text}`: {e}")))?;
            if !symbols.is_empty() {
                cycles.push(symbols);
            }
            rest = body.1.trim_start();
        }
        Self::from_cycles(t, &cycles)
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    /// Zero-based image.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    /// One-based image, `sigma(i)` for `1 <= i <= t`.
    pub fn at(&self, i: usize) -> usize {
        self.image[i - 1] + 1
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.image.len()];
        for (i, &j) in self.image.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { image: inv }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::InvalidPermutation("length mismatch".into()));
        }
        Ok(Permutation { image: other.image.iter().map(|&i| self.image[i]).collect() })
    }

    pub fn is_involution(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &j)| self.image[j] == i)
    }

    /// One-based fixed points.
    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.image[i] == i).map(|i| i + 1).collect()
    }

    /// Disjoint cycles of length >= 2, one-based, each starting at its least symbol.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] || self.image[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.image[i];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|s| s.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

/// Two `t`-cycles `(x_1..x_t)`, `(y_1..y_t)` plus spokes `x_i y_{sigma(i)}`.
/// `x_i` has id `i - 1`, `y_i` has id `t + i - 1`.
pub fn cycle_permutation_graph(sigma: &Permutation) -> Result<CubicGraph> {
    let t = sigma.len();
    if t < 4 {
        return Err(Error::PreconditionViolated(format!(
            "cycle permutation graphs need t >= 4, got {t}"
        )));
    }
    CubicGraph::new(2 * t, &cycle_permutation_edges(sigma))
}

pub fn cycle_permutation_edges(sigma: &Permutation) -> Vec<(Vertex, Vertex)> {
    let t = sigma.len();
    let mut edges = Vec::with_capacity(3 * t);
    for i in 0..t {
        edges.push((i, (i + 1) % t));
    }
    for i in 0..t {
        edges.push((t + i, t + (i + 1) % t));
    }
    for i in 0..t {
        edges.push((i, t + sigma.apply(i)));
    }
    edges
}

/// The involution `sigma_{r,l}` for which the papillon graph is the cycle
/// permutation graph with first cycle `(u_1, ..., u_{2r+2l})`.
///
/// For `r = 1` this is `(3 4)(5 6)...(2l+1 2l+2)`. For `r >= 2` it is
/// `(1 2)...(2r-1 2r)` followed by the nested pairs
/// `(2r+1+2m, 2r+2l-1-2m)` and `(2r+2+2m, 2r+2l-2m)`; this single rule
/// reproduces the separately stated `(2,2)` and `(r,3)` cases.
pub fn papillon_permutation(r: usize, l: usize) -> Result<Permutation> {
    let p = PapillonParams::new(r, l)?;
    let (r, l) = (p.r, p.l);
    let t = p.cycle_len();
    let mut pairs = Vec::new();
    if r == 1 {
        pairs.extend((3..=2 * l + 1).step_by(2).map(|k| (k, k + 1)));
    } else {
        pairs.extend((1..2 * r).step_by(2).map(|k| (k, k + 1)));
        for m in 0.. {
            let first = (2 * r + 1 + 2 * m, 2 * r + 2 * l - 1 - 2 * m);
            let second = (2 * r + 2 + 2 * m, 2 * r + 2 * l - 2 * m);
            if first.0 >= first.1 && second.0 >= second.1 {
                break;
            }
            for pair in [first, second] {
                if pair.0 < pair.1 {
                    pairs.push(pair);
                }
            }
        }
    }
    Permutation::from_transpositions(t, &pairs)
}

/// The automorphism swapping outer and inner cycles:
/// `u_i -> v_{sigma(i)}`, `v_i -> u_{sigma(i)}`.
pub fn psi_automorphism(layout: &PapillonLayout) -> Vec<Vertex> {
    let p = layout.params();
    let sigma = papillon_permutation(p.r(), p.l()).expect("params already validated");
    let t = p.cycle_len();
    let mut map = vec![0; 2 * t];
    for i in 1..=t {
        map[layout.u(i)] = layout.v(sigma.at(i));
        map[layout.v(i)] = layout.u(sigma.at(i));
    }
    map
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedGraph {
    K4,
    K33,
    Q3,
    Petersen,
    Prism6,
}

impl NamedGraph {
    pub const ALL: [NamedGraph; 5] =
        [NamedGraph::K4, NamedGraph::K33, NamedGraph::Q3, NamedGraph::Petersen, NamedGraph::Prism6];

    pub fn name(self) -> &'static str {
        match self {
            NamedGraph::K4 => "K4",
            NamedGraph::K33 => "K33",
            NamedGraph::Q3 => "Q3",
            NamedGraph::Petersen => "Petersen",
            NamedGraph::Prism6 => "Prism6",
        }
    }

    pub fn build(self) -> CubicGraph {
        let edges: Vec<(Vertex, Vertex)> = match self {
            NamedGraph::K4 => vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
            NamedGraph::K33 => (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect(),
            NamedGraph::Q3 => (0..8usize)
                .flat_map(|x| (0..3).map(move |bit| (x, x ^ (1 << bit))))
                .filter(|&(x, y)| x < y)
                .collect(),
            NamedGraph::Petersen => (0..5)
                .flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)])
                .collect(),
            NamedGraph::Prism6 => cycle_permutation_edges(&Permutation::identity(6)),
        };
        CubicGraph::new(if self == NamedGraph::K4 { 4 } else { edges.len() * 2 / 3 }, &edges)
            .expect("reference graphs are cubic")
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s.chars().filter(|c| c.is_alphanumeric()).collect::<String>().to_lowercase();
        match key.as_str() {
            "k4" => Ok(NamedGraph::K4),
            "k33" => Ok(NamedGraph::K33),
            "q3" | "cube" => Ok(NamedGraph::Q3),
            "petersen" => Ok(NamedGraph::Petersen),
            "prism6" | "c6k2" => Ok(NamedGraph::Prism6),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

pub fn named_graph(name: &str) -> Result<CubicGraph> {
    Ok(name.parse::<NamedGraph>()?.build())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{girth, is_bipartite, odd_girth};

    #[test]
    fn smallest_papillon() {
        let (g, layout) = papillon(1, 1);
        assert_eq!((g.order(), g.size()), (8, 12));
        assert_eq!(girth(&g), 4);
        assert!(!is_bipartite(&g));
        assert_eq!(layout.label(layout.v(3)), "v3");
    }

    #[test]
    fn papillon_sizes() {
        for (r, l) in [(1, 1), (1, 3), (2, 2), (3, 3), (2, 5)] {
            let (g, _) = papillon(r, l);
            assert_eq!(g.order(), 4 * (r + l));
            assert_eq!(g.size(), 6 * (r + l));
        }
        assert_eq!(papillon(3, 3).0.order(), 24);
    }

    #[test]
    fn papillon_one_three_inner_edges() {
        // r = 1, l = 3, s = 1: the s-th crossing pair is replaced by v2v4 and v1v7
        let (g, layout) = papillon(1, 3);
        let has = |a, b| g.has_edge(layout.v(a), layout.v(b));
        assert!(has(2, 4));
        assert!(has(1, 7));
        assert!(has(3, 6) && has(5, 8));
        assert!(!has(1, 4));
        let [a, b, c, d] = layout.principal_cut();
        assert_eq!(layout.edge_label(&g, a), "u1u8");
        assert_eq!(layout.edge_label(&g, b), "v1v7");
        assert_eq!(layout.edge_label(&g, c), "v2v4");
        assert_eq!(layout.edge_label(&g, d), "u2u3");
    }

    #[test]
    fn swapped_parameters_canonicalise() {
        assert_eq!(papillon(3, 2), papillon(2, 3));
        assert_eq!(PapillonParams::new(5, 2).unwrap(), PapillonParams::new(2, 5).unwrap());
        assert!(PapillonParams::new(0, 2).is_err());
        // the edge formula only sees min(r, l)
        assert_eq!(papillon_graph(3, 2).unwrap(), papillon(2, 3).0);
    }

    #[test]
    fn published_permutations() {
        let show = |r, l| papillon_permutation(r, l).unwrap().to_string();
        assert_eq!(show(2, 2), "(1 2)(3 4)(5 7)(6 8)");
        assert_eq!(show(1, 2), "(3 4)(5 6)");
        assert_eq!(papillon_permutation(1, 2).unwrap().fixed_points(), vec![1, 2]);
        // (r,3) for r in {2,3}: (1 2)..(2r-1 2r)(2r+1 2r+5)(2r+2 2r+6)
        assert_eq!(show(2, 3), "(1 2)(3 4)(5 9)(6 10)");
        assert_eq!(show(3, 3), "(1 2)(3 4)(5 6)(7 11)(8 12)");
        assert_eq!(papillon_permutation(3, 3).unwrap().fixed_points(), vec![9, 10]);
        let s45 = show(4, 5);
        assert!(s45.ends_with("(12 16)"), "{s45}");
        assert_eq!(s45, "(1 2)(3 4)(5 6)(7 8)(9 17)(10 18)(11 15)(12 16)");
    }

    #[test]
    fn permutation_fixed_points_by_parity() {
        for r in 2..=5 {
            for l in r..=8 {
                let p = papillon_permutation(r, l).unwrap();
                assert!(p.is_involution());
                let expected = if l % 2 == 1 { vec![2 * r + l, 2 * r + l + 1] } else { vec![] };
                assert_eq!(p.fixed_points(), expected, "({r},{l})");
            }
        }
    }

    #[test]
    fn permutation_traces_the_inner_cycle() {
        for r in 1..=6 {
            for l in r..=10 {
                let (g, layout) = papillon(r, l);
                let sigma = papillon_permutation(r, l).unwrap();
                let t = sigma.len();
                for k in 1..=t {
                    let a = layout.v(sigma.at(k));
                    let b = layout.v(sigma.at(k % t + 1));
                    assert!(g.has_edge(a, b), "({r},{l}) breaks at position {k}");
                }
            }
        }
    }

    #[test]
    fn permutation_parse_and_print() {
        let p = Permutation::parse("(1 2)(3 4)", 6).unwrap();
        assert_eq!(p.to_string(), "(1 2)(3 4)");
        assert_eq!(p.fixed_points(), vec![5, 6]);
        assert_eq!(Permutation::parse("(1,3,2)", 3).unwrap().at(1), 3);
        assert_eq!(Permutation::parse("", 4).unwrap(), Permutation::identity(4));
        assert_eq!(Permutation::identity(4).to_string(), "()");
        assert!(Permutation::parse("(1 2)(2 3)", 4).is_err());
        assert!(Permutation::parse("(1 9)", 4).is_err());
        assert!(Permutation::parse("(1 2", 4).is_err());
        let q = Permutation::parse("(1 2 3)", 4).unwrap();
        assert_eq!(q.compose(&q.inverse()).unwrap(), Permutation::identity(4));
    }

    #[test]
    fn cycle_permutation_graph_basics() {
        let prism = cycle_permutation_graph(&Permutation::identity(6)).unwrap();
        assert!(is_bipartite(&prism));
        assert_eq!(prism.order(), 12);
        let s = Permutation::parse("(1 2)", 4).unwrap();
        let g = cycle_permutation_graph(&s).unwrap();
        assert!(g.has_edge(0, 5) && g.has_edge(1, 4) && g.has_edge(2, 6) && g.has_edge(3, 7));
        assert_eq!(odd_girth(&g).length(), Some(5));
        assert!(cycle_permutation_graph(&Permutation::identity(3)).is_err());
    }

    #[test]
    fn named_graphs() {
        assert_eq!(named_graph("K4").unwrap().order(), 4);
        let q3 = named_graph("q3").unwrap();
        assert_eq!(q3.order(), 8);
        assert!(is_bipartite(&q3));
        assert_eq!(named_graph("petersen").unwrap().order(), 10);
        assert_eq!(named_graph("K3,3").unwrap().order(), 6);
        let prism = named_graph("Prism6").unwrap();
        assert_eq!(prism.order(), 12);
        assert!(is_bipartite(&prism));
        assert!(matches!(named_graph("heawood"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn psi_swaps_cycles_and_is_involutive() {
        let (g, layout) = papillon(2, 3);
        let psi = psi_automorphism(&layout);
        for &e in layout.spokes() {
            let (a, b) = g.endpoints(e);
            let e2 = g.edge_between(psi[a], psi[b]).expect("image is an edge");
            assert!(layout.spokes().contains(&e2));
        }
        for &e in layout.outer_edges() {
            let (a, b) = g.endpoints(e);
            assert!(layout.inner_edges().contains(&g.edge_between(psi[a], psi[b]).unwrap()));
        }
        let (_, layout) = papillon(2, 2);
        let psi = psi_automorphism(&layout);
        assert!((0..psi.len()).all(|x| psi[psi[x]] == x));
    }
}
