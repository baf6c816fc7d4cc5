//! Perfect matchings and the properties built on them: extension to a
//! 3-edge-colouring, E2F, PMH, PH, 2-factor Hamiltonicity and Class I.

mod colouring;
mod papillon;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{CubicGraph, Cycle, EdgeId, Vertex};
use crate::par;

pub use colouring::{class_one_colouring, is_class_one, ThreeEdgeColouring};
pub use papillon::{
    chain_symmetry, constructive_pmh_extension, principal_cut_profile, ChainSymmetry,
    ConstructionCase, ConstructiveExtension, CutProfile,
};

/// Default order bound for the pairing search.
pub const PH_ORDER_BOUND: usize = 12;

/// Edge ids of a perfect matching, sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PerfectMatching {
    edges: Vec<EdgeId>,
}

impl PerfectMatching {
    pub fn new(g: &CubicGraph, mut edges: Vec<EdgeId>) -> Result<Self> {
        edges.sort_unstable();
        edges.dedup();
        let mut covered = vec![false; g.order()];
        for &e in &edges {
            if e >= g.size() {
                return Err(Error::NotAMatching(format!("edge id {e} out of range")));
            }
            let (a, b) = g.endpoints(e);
            if covered[a] || covered[b] {
                return Err(Error::NotAMatching(format!("edge {e} shares an endpoint")));
            }
            covered[a] = true;
            covered[b] = true;
        }
        if let Some(v) = covered.iter().position(|&c| !c) {
            return Err(Error::NotAMatching(format!("vertex {v} is uncovered")));
        }
        Ok(PerfectMatching { edges })
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn membership(&self, g: &CubicGraph) -> Vec<bool> {
        let mut m = vec![false; g.size()];
        for &e in &self.edges {
            m[e] = true;
        }
        m
    }

    /// `mate[v]` is the vertex matched to `v`.
    pub fn mates(&self, g: &CubicGraph) -> Vec<Vertex> {
        let mut mate = vec![0; g.order()];
        for &e in &self.edges {
            let (a, b) = g.endpoints(e);
            mate[a] = b;
            mate[b] = a;
        }
        mate
    }
}

/// All perfect matchings, each once. Backtracks on the lowest uncovered
/// vertex, trying its edges in edge-id order.
pub fn enumerate_perfect_matchings(g: &CubicGraph) -> Vec<PerfectMatching> {
    fn go(
        g: &CubicGraph,
        covered: &mut [bool],
        from: Vertex,
        chosen: &mut Vec<EdgeId>,
        out: &mut Vec<PerfectMatching>,
    ) {
        let Some(v) = (from..g.order()).find(|&v| !covered[v]) else {
            let mut edges = chosen.clone();
            edges.sort_unstable();
            out.push(PerfectMatching { edges });
            return;
        };
        covered[v] = true;
        for &(w, e) in g.incidences(v) {
            if covered[w] {
                continue;
            }
            covered[w] = true;
            chosen.push(e);
            go(g, covered, v + 1, chosen, out);
            chosen.pop();
            covered[w] = false;
        }
        covered[v] = false;
    }
    let mut out = Vec::new();
    go(g, &mut vec![false; g.order()], 0, &mut Vec::new(), &mut out);
    out
}

/// A spanning 2-regular subgraph with its cycle decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoFactor {
    edges: Vec<EdgeId>,
    cycles: Vec<Cycle>,
}

impl TwoFactor {
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    /// Cycles ordered by least vertex; each starts at its least vertex and
    /// leaves it along the smaller edge id.
    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn has_only_even_cycles(&self) -> bool {
        self.cycles.iter().all(|c| c.len() % 2 == 0)
    }

    pub fn is_hamiltonian(&self) -> bool {
        self.cycles.len() == 1
    }
}

/// The 2-factor `E(G) - M`.
pub fn complementary_two_factor(g: &CubicGraph, m: &PerfectMatching) -> Result<TwoFactor> {
    let in_m = m.membership(g);
    PerfectMatching::new(g, m.edges.clone())?;
    let mut seen = vec![false; g.order()];
    let mut cycles = Vec::new();
    for start in 0..g.order() {
        if seen[start] {
            continue;
        }
        let mut vertices = vec![start];
        seen[start] = true;
        let (mut prev_edge, mut cur) = (usize::MAX, start);
        loop {
            let &(next, e) = g
                .incidences(cur)
                .iter()
                .find(|&&(_, e)| !in_m[e] && e != prev_edge)
                .expect("complement of a perfect matching is 2-regular");
            if next == start {
                break;
            }
            seen[next] = true;
            vertices.push(next);
            prev_edge = e;
            cur = next;
        }
        cycles.push(Cycle::new(g, vertices).expect("traversal yields a cycle"));
    }
    let edges = (0..g.size()).filter(|&e| !in_m[e]).collect();
    Ok(TwoFactor { edges, cycles })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColouringExtension {
    Colouring(ThreeEdgeColouring),
    /// An odd cycle of the complementary 2-factor blocks the extension.
    OddCycle(Cycle),
}

/// Colour 1 on `M`, colours 2 and 3 alternating around each complementary cycle.
pub fn extend_to_three_edge_colouring(g: &CubicGraph, m: &PerfectMatching) -> Result<ColouringExtension> {
    let f = complementary_two_factor(g, m)?;
    let mut colours = vec![0u8; g.size()];
    for &e in m.edges() {
        colours[e] = 1;
    }
    for c in f.cycles() {
        if c.len() % 2 == 1 {
            return Ok(ColouringExtension::OddCycle(c.clone()));
        }
        for (i, e) in c.edge_ids(g).into_iter().enumerate() {
            colours[e] = 2 + (i % 2) as u8;
        }
    }
    Ok(ColouringExtension::Colouring(ThreeEdgeColouring::new(g, colours)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum E2f {
    /// Every perfect matching extends; one colouring per matching, in enumeration order.
    Holds { matchings: Vec<PerfectMatching>, colourings: Vec<ThreeEdgeColouring> },
    Fails { matching: PerfectMatching, odd_cycle: Cycle },
}

impl E2f {
    pub fn holds(&self) -> bool {
        matches!(self, E2f::Holds { .. })
    }
}

/// E2F through cycle parity of every complementary 2-factor.
pub fn e2f_by_cycle_parity(g: &CubicGraph, pms: &[PerfectMatching]) -> Option<(PerfectMatching, Cycle)> {
    pms.iter().find_map(|m| {
        let f = complementary_two_factor(g, m).expect("enumerated matching");
        f.cycles().iter().find(|c| c.len() % 2 == 1).map(|c| (m.clone(), c.clone()))
    })
}

/// E2F through explicit colouring extension of every perfect matching.
pub fn e2f_by_colouring(g: &CubicGraph, pms: &[PerfectMatching]) -> std::result::Result<Vec<ThreeEdgeColouring>, (PerfectMatching, Cycle)> {
    let results: Vec<_> = par::map(pms, |m| extend_to_three_edge_colouring(g, m).expect("enumerated matching"));
    let mut colourings = Vec::with_capacity(pms.len());
    for (m, r) in pms.iter().zip(results) {
        match r {
            ColouringExtension::Colouring(c) => colourings.push(c),
            ColouringExtension::OddCycle(c) => return Err((m.clone(), c)),
        }
    }
    Ok(colourings)
}

/// Even-2-factorability, computed both ways; the two routes must agree.
pub fn is_e2f(g: &CubicGraph) -> Result<E2f> {
    let pms = enumerate_perfect_matchings(g);
    if pms.is_empty() {
        return Err(Error::NoPerfectMatching);
    }
    let parity = e2f_by_cycle_parity(g, &pms);
    let colouring = e2f_by_colouring(g, &pms);
    assert_eq!(parity.is_none(), colouring.is_ok(), "E2F checkers disagree");
    Ok(match colouring {
        Ok(colourings) => E2f::Holds { matchings: pms, colourings },
        Err((matching, odd_cycle)) => E2f::Fails { matching, odd_cycle },
    })
}

/// `M`, a disjoint perfect matching `N`, and the Hamiltonian cycle `M ∪ N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PmhCertificate {
    pub matching: PerfectMatching,
    pub partner: PerfectMatching,
    pub cycle: Vec<Vertex>,
}

impl PmhCertificate {
    /// Independent re-check: `H` is a spanning cycle of `g` whose edges
    /// alternate between `M` and `N`.
    pub fn validate(&self, g: &CubicGraph) -> bool {
        let n = g.order();
        if PerfectMatching::new(g, self.matching.edges.clone()).is_err()
            || PerfectMatching::new(g, self.partner.edges.clone()).is_err()
            || self.cycle.len() != n
        {
            return false;
        }
        let Ok(c) = Cycle::new(g, self.cycle.clone()) else {
            return false;
        };
        let ids = c.edge_ids(g);
        ids.iter().enumerate().all(|(i, &e)| {
            let in_m = self.matching.contains(e);
            let in_n = self.partner.contains(e);
            in_m != in_n && in_m == self.matching.contains(ids[0]) ^ (i % 2 == 1)
        })
    }
}

/// Traverses `M ∪ N` from vertex 0; `Some(cycle)` when it is one spanning cycle.
pub(crate) fn alternating_cycle(m_mate: &[Vertex], n_mate: &[Vertex]) -> Option<Vec<Vertex>> {
    let n = m_mate.len();
    let mut cycle = Vec::with_capacity(n);
    let mut v = 0;
    loop {
        cycle.push(v);
        let w = m_mate[v];
        cycle.push(w);
        v = n_mate[w];
        if v == 0 {
            break;
        }
        if cycle.len() >= n {
            return None;
        }
    }
    (cycle.len() == n).then_some(cycle)
}

/// Searches the perfect matchings `N` of the complementary 2-factor for one
/// with `M ∪ N` Hamiltonian. Each even cycle offers two alternating
/// selections; the selection vectors are tried in lexicographic order.
pub fn pmh_extension(g: &CubicGraph, m: &PerfectMatching) -> Result<Option<PmhCertificate>> {
    let f = complementary_two_factor(g, m)?;
    if !f.has_only_even_cycles() {
        return Ok(None);
    }
    let m_mate = m.mates(g);
    let cycles: Vec<Vec<EdgeId>> = f.cycles().iter().map(|c| c.edge_ids(g)).collect();
    let c = cycles.len();
    if c >= usize::BITS as usize {
        return Err(Error::OrderTooLarge { order: g.order(), bound: 2 * (usize::BITS as usize - 1) });
    }
    let mut n_mate = vec![0; g.order()];
    for bits in 0..(1usize << c) {
        let mut chosen = Vec::with_capacity(g.order() / 2);
        for (i, ids) in cycles.iter().enumerate() {
            let offset = (bits >> (c - 1 - i)) & 1;
            for &e in ids.iter().skip(offset).step_by(2) {
                let (a, b) = g.endpoints(e);
                n_mate[a] = b;
                n_mate[b] = a;
                chosen.push(e);
            }
        }
        if let Some(cycle) = alternating_cycle(&m_mate, &n_mate) {
            chosen.sort_unstable();
            return Ok(Some(PmhCertificate {
                matching: m.clone(),
                partner: PerfectMatching { edges: chosen },
                cycle,
            }));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PmhFailure {
    OddCycle(Cycle),
    /// Every alternating selection of the complementary 2-factor was tried.
    Exhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pmh {
    Holds(Vec<PmhCertificate>),
    Fails { matching: PerfectMatching, reason: PmhFailure },
}

impl Pmh {
    pub fn holds(&self) -> bool {
        matches!(self, Pmh::Holds(_))
    }
}

pub fn is_pmh(g: &CubicGraph) -> Result<Pmh> {
    let pms = enumerate_perfect_matchings(g);
    is_pmh_over(g, &pms)
}

pub(crate) fn is_pmh_over(g: &CubicGraph, pms: &[PerfectMatching]) -> Result<Pmh> {
    if pms.is_empty() {
        return Err(Error::NoPerfectMatching);
    }
    let results = par::map(pms, |m| pmh_extension(g, m));
    let mut certs = Vec::with_capacity(pms.len());
    for (m, r) in pms.iter().zip(results) {
        match r? {
            Some(c) => certs.push(c),
            None => {
                let f = complementary_two_factor(g, m)?;
                let reason = match f.cycles().iter().find(|c| c.len() % 2 == 1) {
                    Some(c) => PmhFailure::OddCycle(c.clone()),
                    None => PmhFailure::Exhausted,
                };
                return Ok(Pmh::Fails { matching: m.clone(), reason });
            }
        }
    }
    Ok(Pmh::Holds(certs))
}

/// Every 2-factor is a Hamiltonian cycle.
pub fn is_two_factor_hamiltonian(g: &CubicGraph) -> Result<bool> {
    let pms = enumerate_perfect_matchings(g);
    if pms.is_empty() {
        return Err(Error::NoPerfectMatching);
    }
    for m in &pms {
        if !complementary_two_factor(g, m)?.is_hamiltonian() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ph {
    Holds,
    /// A pairing of the complete graph on `V(G)` that no Hamiltonian cycle extends.
    Fails { pairing: Vec<(Vertex, Vertex)> },
}

impl Ph {
    pub fn holds(&self) -> bool {
        matches!(self, Ph::Holds)
    }
}

pub fn is_ph(g: &CubicGraph) -> Result<Ph> {
    is_ph_bounded(g, PH_ORDER_BOUND)
}

/// Every pairing `P` (perfect matching of `K_G`) extends to a Hamiltonian
/// cycle `H` of `K_G` with `E(H) - P ⊆ E(G)`; `E(H) - P` is then a perfect
/// matching of `G` disjoint from `P`.
pub fn is_ph_bounded(g: &CubicGraph, bound: usize) -> Result<Ph> {
    let n = g.order();
    if n > bound {
        return Err(Error::OrderTooLarge { order: n, bound });
    }
    let mates: Vec<Vec<Vertex>> = enumerate_perfect_matchings(g).iter().map(|m| m.mates(g)).collect();
    let mut pairing = vec![usize::MAX; n];
    fn go(pairing: &mut [Vertex], mates: &[Vec<Vertex>]) -> bool {
        let Some(x) = pairing.iter().position(|&p| p == usize::MAX) else {
            return mates.iter().any(|nm| {
                (0..pairing.len()).all(|v| nm[v] != pairing[v]) && alternating_cycle(pairing, nm).is_some()
            });
        };
        for y in x + 1..pairing.len() {
            if pairing[y] != usize::MAX {
                continue;
            }
            pairing[x] = y;
            pairing[y] = x;
            let ok = go(pairing, mates);
            if !ok {
                return false;
            }
            pairing[x] = usize::MAX;
            pairing[y] = usize::MAX;
        }
        true
    }
    if go(&mut pairing, &mates) {
        Ok(Ph::Holds)
    } else {
        let pairs = (0..n).filter(|&v| v < pairing[v]).map(|v| (v, pairing[v])).collect();
        Ok(Ph::Fails { pairing: pairs })
    }
}
