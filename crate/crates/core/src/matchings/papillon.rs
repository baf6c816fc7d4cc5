//! Perfect matchings of papillon graphs seen through the principal cut and
//! the C4-pole structure, and the explicit Hamiltonian extension for
//! balanced graphs with an even number of poles per chain.

use serde::{Deserialize, Serialize};

use super::{alternating_cycle, PerfectMatching, PmhCertificate};
use crate::error::{Error, Result};
use crate::generators::PapillonLayout;
use crate::graph::{CubicGraph, EdgeId, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutProfile {
    /// `|M ∩ X|`.
    pub k: usize,
    /// `|M ∩ ∂T_j|` for `j = 1..=r+l`.
    pub counts: Vec<usize>,
    /// The cut edges lying in `M`, as a subset of `[a, b, c, d]`.
    pub cut_edges: Vec<EdgeId>,
}

fn check_matching(g: &CubicGraph, layout: &PapillonLayout, m: &PerfectMatching) -> Result<()> {
    if g.order() != 4 * layout.params().poles() {
        return Err(Error::PreconditionViolated("layout does not belong to this graph".into()));
    }
    PerfectMatching::new(g, m.edges().to_vec()).map(|_| ())
}

/// Counts `M` on the principal cut and on every pole boundary, and checks
/// that all counts agree, that a 2-edge trace on the cut is `{a, d}` or
/// `{b, c}`, and that no pole then meets `M` in both left or both right
/// semiedges.
pub fn principal_cut_profile(g: &CubicGraph, layout: &PapillonLayout, m: &PerfectMatching) -> Result<CutProfile> {
    check_matching(g, layout, m)?;
    let [a, b, c, d] = layout.principal_cut();
    let cut_edges: Vec<EdgeId> = [a, b, c, d].into_iter().filter(|&e| m.contains(e)).collect();
    let k = cut_edges.len();
    let poles = layout.params().poles();
    let counts: Vec<usize> = (1..=poles)
        .map(|j| layout.boundary(j).iter().filter(|&&e| m.contains(e)).count())
        .collect();
    if let Some(j) = counts.iter().position(|&c| c != k) {
        return Err(Error::LemmaViolation(format!(
            "|M ∩ X| = {k} but T_{} has {} boundary edges in M",
            j + 1,
            counts[j]
        )));
    }
    if k == 2 {
        if cut_edges != [a, d] && cut_edges != [b, c] {
            return Err(Error::LemmaViolation(format!("M ∩ X = {cut_edges:?} is neither {{a,d}} nor {{b,c}}")));
        }
        for j in 1..=poles {
            let [e1, e2, e3, e4] = layout.boundary(j);
            if (m.contains(e1) && m.contains(e3)) || (m.contains(e2) && m.contains(e4)) {
                return Err(Error::LemmaViolation(format!("T_{j} meets M in a same-side semiedge pair")));
            }
        }
    }
    if k % 2 == 1 {
        return Err(Error::LemmaViolation(format!("odd cut intersection {k}")));
    }
    Ok(CutProfile { k, counts, cut_edges })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ChainSymmetry {
    Symmetric,
    Asymmetric,
}

impl ChainSymmetry {
    pub fn phi(self) -> i8 {
        match self {
            ChainSymmetry::Symmetric => 1,
            ChainSymmetry::Asymmetric => -1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum PoleTrace {
    Spokes,
    Parallel,
}

fn pole_trace(layout: &PapillonLayout, m: &PerfectMatching, j: usize) -> PoleTrace {
    let [top, right, bottom, left] = layout.pole_edges(j);
    if m.contains(right) && m.contains(left) {
        PoleTrace::Spokes
    } else {
        debug_assert!(m.contains(top) && m.contains(bottom));
        PoleTrace::Parallel
    }
}

/// Symmetric when `M` takes the spokes of both `T_j` and `T_{j+1}`, or the
/// horizontal edges of both. Requires `M` to avoid the principal cut and
/// `T_(j,j+1)` to lie inside one chain.
pub fn chain_symmetry(g: &CubicGraph, layout: &PapillonLayout, m: &PerfectMatching, j: usize) -> Result<ChainSymmetry> {
    let profile = principal_cut_profile(g, layout, m)?;
    if profile.k != 0 {
        return Err(Error::PreconditionViolated(format!("|M ∩ X| = {} is not zero", profile.k)));
    }
    let p = layout.params();
    if j == 0 || j >= p.poles() || j == p.r() {
        return Err(Error::PreconditionViolated(format!("T_({j},{}) is not a 2-chain within one chain", j + 1)));
    }
    Ok(if pole_trace(layout, m, j) == pole_trace(layout, m, j + 1) {
        ChainSymmetry::Symmetric
    } else {
        ChainSymmetry::Asymmetric
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstructionCase {
    /// `|M ∩ X| = 2`: the partner takes the two end edges of each pole path.
    CutTwo,
    /// `|M ∩ X| = 4`: the fixed partner through `u1v1` and `u2v2`.
    CutFour,
    /// `|M ∩ X| = 0`, both chains with an even number of asymmetric 2-chains.
    EvenAsymmetric,
    /// `|M ∩ X| = 0`, both chains with an odd number of asymmetric 2-chains.
    BothOddAsymmetric,
    /// `|M ∩ X| = 0`, exactly one chain with an odd number of asymmetric 2-chains.
    OneOddAsymmetric,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructiveExtension {
    pub case: ConstructionCase,
    pub certificate: PmhCertificate,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Level {
    Upper,
    Lower,
}

/// Alternating Hamiltonian path of the 2-chain from `entry` to `exit`,
/// starting and ending with an `M` edge. Returns the non-`M` edges used.
fn chain_path(
    g: &CubicGraph,
    inside: &[bool],
    in_m: &[bool],
    mate: &[Vertex],
    entry: Vertex,
    exit: Vertex,
) -> Option<Vec<EdgeId>> {
    #[allow(clippy::too_many_arguments)]
    fn go(
        g: &CubicGraph,
        inside: &[bool],
        in_m: &[bool],
        mate: &[Vertex],
        at: Vertex,
        exit: Vertex,
        visited: &mut Vec<bool>,
        left: usize,
        used: &mut Vec<EdgeId>,
    ) -> bool {
        let w = mate[at];
        if !inside[w] || visited[w] {
            return false;
        }
        visited[w] = true;
        if left == 2 {
            if w == exit {
                return true;
            }
            visited[w] = false;
            return false;
        }
        for &(x, e) in g.incidences(w) {
            if in_m[e] || !inside[x] || visited[x] || x == exit {
                continue;
            }
            visited[x] = true;
            used.push(e);
            if go(g, inside, in_m, mate, x, exit, visited, left - 2, used) {
                return true;
            }
            used.pop();
            visited[x] = false;
        }
        visited[w] = false;
        false
    }
    let count = inside.iter().filter(|&&b| b).count();
    let mut visited = vec![false; g.order()];
    visited[entry] = true;
    let mut used = Vec::new();
    go(g, inside, in_m, mate, entry, exit, &mut visited, count, &mut used).then_some(used)
}

/// Builds a Hamiltonian cycle through `M` by the case analysis on `|M ∩ X|`
/// and on how the 2-chains inside each chain meet `M`. The result is
/// validated before it is returned.
pub fn constructive_pmh_extension(
    g: &CubicGraph,
    layout: &PapillonLayout,
    m: &PerfectMatching,
) -> Result<ConstructiveExtension> {
    let p = layout.params();
    if !p.is_balanced() || p.r() % 2 == 1 {
        return Err(Error::PreconditionViolated(format!("{p} is not balanced with an even chain length")));
    }
    let n = p.r();
    let profile = principal_cut_profile(g, layout, m)?;
    let in_m = m.membership(g);
    let mut partner: Vec<EdgeId> = Vec::with_capacity(g.order() / 2);
    let case = match profile.k {
        2 => {
            for j in 1..=2 * n {
                let ring = layout.pole_edges(j);
                let i = ring.iter().position(|&e| in_m[e]).ok_or_else(|| {
                    Error::LemmaViolation(format!("T_{j} has no cycle edge in M although |M ∩ X| = 2"))
                })?;
                partner.push(ring[(i + 1) % 4]);
                partner.push(ring[(i + 3) % 4]);
            }
            ConstructionCase::CutTwo
        }
        4 => {
            let e = |x: Vertex, y: Vertex| g.edge_between(x, y).expect("papillon edge");
            partner.push(e(layout.u(1), layout.v(1)));
            partner.push(e(layout.u(2), layout.v(2)));
            for j in 2..=2 * n {
                let [top, _, bottom, _] = layout.pole_edges(j);
                partner.push(top);
                partner.push(bottom);
            }
            ConstructionCase::CutFour
        }
        _ => {
            let sym = |j: usize| chain_symmetry(g, layout, m, j);
            let mut right = 1i8;
            for j in (1..n).step_by(2) {
                right *= sym(j)?.phi();
            }
            let mut left = 1i8;
            for j in (n + 1..2 * n).step_by(2) {
                left *= sym(j)?.phi();
            }
            if right == 1 && left == 1 {
                let [a, _, _, d] = layout.principal_cut();
                partner.push(a);
                partner.push(d);
                let mate = m.mates(g);
                let mut inside = vec![false; g.order()];
                for first in [1, n + 1] {
                    let mut level = Level::Upper;
                    for j in (first..first + n).step_by(2) {
                        let here = layout.pole_vertices(j);
                        let next = layout.pole_vertices(j + 1);
                        for &x in here.iter().chain(&next) {
                            inside[x] = true;
                        }
                        let entry = if level == Level::Upper { here[0] } else { here[2] };
                        if sym(j)? == ChainSymmetry::Asymmetric {
                            level = if level == Level::Upper { Level::Lower } else { Level::Upper };
                        }
                        let exit = if level == Level::Upper { next[1] } else { next[3] };
                        let used = chain_path(g, &inside, &in_m, &mate, entry, exit).ok_or_else(|| {
                            Error::LemmaViolation(format!("no spanning path through T_({j},{})", j + 1))
                        })?;
                        partner.extend(used);
                        if j + 2 < first + n {
                            let [_, e2, _, e4] = layout.boundary(j + 1);
                            partner.push(if level == Level::Upper { e2 } else { e4 });
                        }
                        for &x in here.iter().chain(&next) {
                            inside[x] = false;
                        }
                    }
                    if level != Level::Upper {
                        return Err(Error::LemmaViolation("chain path ends on the lower level".into()));
                    }
                }
                ConstructionCase::EvenAsymmetric
            } else {
                for j in 1..=2 * n {
                    partner.extend(layout.boundary(j));
                }
                partner.sort_unstable();
                partner.dedup();
                if right == -1 && left == -1 {
                    ConstructionCase::BothOddAsymmetric
                } else {
                    ConstructionCase::OneOddAsymmetric
                }
            }
        }
    };
    let partner = PerfectMatching::new(g, partner)
        .map_err(|e| Error::LemmaViolation(format!("constructed partner is not a perfect matching: {e}")))?;
    if partner.edges().iter().any(|&e| in_m[e]) {
        return Err(Error::LemmaViolation("constructed partner meets M".into()));
    }
    let cycle = alternating_cycle(&m.mates(g), &partner.mates(g))
        .ok_or_else(|| Error::LemmaViolation(format!("{case:?}: M ∪ N is not a Hamiltonian cycle")))?;
    let certificate = PmhCertificate { matching: m.clone(), partner, cycle };
    if !certificate.validate(g) {
        return Err(Error::LemmaViolation("constructed certificate fails validation".into()));
    }
    Ok(ConstructiveExtension { case, certificate })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::papillon;
    use crate::matchings::{enumerate_perfect_matchings, pmh_extension};

    fn by_pairs(g: &CubicGraph, pairs: &[(Vertex, Vertex)]) -> PerfectMatching {
        let edges = pairs.iter().map(|&(a, b)| g.edge_between(a, b).unwrap()).collect();
        PerfectMatching::new(g, edges).unwrap()
    }

    fn all_spokes(g: &CubicGraph, layout: &PapillonLayout) -> PerfectMatching {
        PerfectMatching::new(g, layout.spokes().to_vec()).unwrap()
    }

    fn horizontal(g: &CubicGraph, layout: &PapillonLayout) -> PerfectMatching {
        let poles = layout.params().poles();
        let edges = (1..=poles).flat_map(|j| {
            let [top, _, bottom, _] = layout.pole_edges(j);
            [top, bottom]
        });
        PerfectMatching::new(g, edges.collect()).unwrap()
    }

    #[test]
    fn spokes_avoid_every_boundary() {
        let (g, layout) = papillon(2, 2);
        let prof = principal_cut_profile(&g, &layout, &all_spokes(&g, &layout)).unwrap();
        assert_eq!(prof.k, 0);
        assert_eq!(prof.counts, vec![0; 4]);
    }

    #[test]
    fn every_matching_of_small_balanced_graphs_obeys_the_cut_counts() {
        for n in 1..=3 {
            let (g, layout) = papillon(n, n);
            let [a, b, c, d] = layout.principal_cut();
            let mut seen_two = 0;
            for m in enumerate_perfect_matchings(&g) {
                let prof = principal_cut_profile(&g, &layout, &m).unwrap();
                assert!(prof.counts.iter().all(|&x| x == prof.k));
                if prof.k == 2 {
                    seen_two += 1;
                    assert!(prof.cut_edges == [a, d] || prof.cut_edges == [b, c]);
                }
            }
            assert!(seen_two > 0);
        }
    }

    #[test]
    fn symmetry_classes() {
        let (g, layout) = papillon(2, 2);
        let spokes = all_spokes(&g, &layout);
        let flat = horizontal(&g, &layout);
        for j in [1, 3] {
            assert_eq!(chain_symmetry(&g, &layout, &spokes, j).unwrap(), ChainSymmetry::Symmetric);
            assert_eq!(chain_symmetry(&g, &layout, &flat, j).unwrap(), ChainSymmetry::Symmetric);
        }
        let (u, v) = (|i| layout.u(i), |i| layout.v(i));
        // spokes on T_1, horizontal edges on T_2, spokes on T_3 and T_4
        let mixed = by_pairs(
            &g,
            &[(u(1), v(1)), (u(2), v(2)), (u(3), u(4)), (v(3), v(4)), (u(5), v(5)), (u(6), v(6)), (u(7), v(7)), (u(8), v(8))],
        );
        assert_eq!(chain_symmetry(&g, &layout, &mixed, 1).unwrap(), ChainSymmetry::Asymmetric);
        assert_eq!(chain_symmetry(&g, &layout, &mixed, 3).unwrap(), ChainSymmetry::Symmetric);
        assert!(matches!(chain_symmetry(&g, &layout, &mixed, 2), Err(Error::PreconditionViolated(_))));
        assert!(matches!(chain_symmetry(&g, &layout, &mixed, 4), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn cut_four_partner_traces_the_fixed_cycle() {
        let (g, layout) = papillon(2, 2);
        let boundary: Vec<EdgeId> = (1..=4).flat_map(|j| layout.boundary(j)).collect();
        let m = PerfectMatching::new(&g, boundary).unwrap();
        let ext = constructive_pmh_extension(&g, &layout, &m).unwrap();
        assert_eq!(ext.case, ConstructionCase::CutFour);
        let (u, v) = (|i| layout.u(i), |i| layout.v(i));
        let expected = [u(1), v(1), v(4), v(3), v(7), v(8), v(5), v(6), v(2), u(2), u(3), u(4), u(5), u(6), u(7), u(8)];
        let h = &ext.certificate.cycle;
        let start = h.iter().position(|&x| x == u(1)).unwrap();
        let mut rotated: Vec<Vertex> = h[start..].iter().chain(&h[..start]).copied().collect();
        if rotated[1] != v(1) {
            rotated[1..].reverse();
        }
        assert_eq!(rotated, expected);
    }

    #[test]
    fn all_spokes_closes_through_a_and_d() {
        let (g, layout) = papillon(2, 2);
        let ext = constructive_pmh_extension(&g, &layout, &all_spokes(&g, &layout)).unwrap();
        assert_eq!(ext.case, ConstructionCase::EvenAsymmetric);
        let [a, _, _, d] = layout.principal_cut();
        assert!(ext.certificate.partner.contains(a) && ext.certificate.partner.contains(d));
    }

    #[test]
    fn constructive_agrees_with_search_on_p22() {
        let (g, layout) = papillon(2, 2);
        for m in enumerate_perfect_matchings(&g) {
            let ext = constructive_pmh_extension(&g, &layout, &m).unwrap();
            assert!(ext.certificate.validate(&g));
            assert!(pmh_extension(&g, &m).unwrap().is_some());
        }
    }

    #[test]
    fn constructive_rejects_odd_or_unbalanced() {
        let (g, layout) = papillon(3, 3);
        let m = horizontal(&g, &layout);
        assert!(matches!(constructive_pmh_extension(&g, &layout, &m), Err(Error::PreconditionViolated(_))));
        let (g, layout) = papillon(2, 4);
        let m = horizontal(&g, &layout);
        assert!(matches!(constructive_pmh_extension(&g, &layout, &m), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn horizontal_matching_blocks_odd_balanced_graphs() {
        for n in [1, 3] {
            let (g, layout) = papillon(n, n);
            assert_eq!(pmh_extension(&g, &horizontal(&g, &layout)).unwrap(), None);
        }
    }
}
