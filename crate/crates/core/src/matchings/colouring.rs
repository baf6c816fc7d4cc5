use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{CubicGraph, EdgeId};

/// Colour in `{1, 2, 3}` for every edge id.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ThreeEdgeColouring {
    colours: Vec<u8>,
}

impl ThreeEdgeColouring {
    pub fn new(g: &CubicGraph, colours: Vec<u8>) -> Result<Self> {
        let c = ThreeEdgeColouring { colours };
        if c.is_proper(g) {
            Ok(c)
        } else {
            Err(Error::PreconditionViolated("not a proper 3-edge-colouring".into()))
        }
    }

    pub fn colour(&self, e: EdgeId) -> u8 {
        self.colours[e]
    }

    pub fn colours(&self) -> &[u8] {
        &self.colours
    }

    pub fn class(&self, colour: u8) -> Vec<EdgeId> {
        (0..self.colours.len()).filter(|&e| self.colours[e] == colour).collect()
    }

    pub fn is_proper(&self, g: &CubicGraph) -> bool {
        self.colours.len() == g.size()
            && self.colours.iter().all(|c| (1..=3).contains(c))
            && (0..g.order()).all(|v| {
                let [a, b, c] = g.incidences(v).map(|(_, e)| self.colours[e]);
                a != b && a != c && b != c
            })
    }
}

/// Any proper 3-edge-colouring, by backtracking on the most constrained
/// uncoloured edge. The three edges at vertex 0 are fixed to 1, 2, 3.
pub fn class_one_colouring(g: &CubicGraph) -> Option<ThreeEdgeColouring> {
    fn used(g: &CubicGraph, colours: &[u8], v: usize) -> u8 {
        g.incidences(v).iter().fold(0, |m, &(_, e)| if colours[e] > 0 { m | 1 << colours[e] } else { m })
    }
    fn go(g: &CubicGraph, colours: &mut [u8]) -> bool {
        let mut pick: Option<(EdgeId, u8)> = None;
        for e in 0..g.size() {
            if colours[e] != 0 {
                continue;
            }
            let (a, b) = g.endpoints(e);
            let free = !(used(g, colours, a) | used(g, colours, b)) & 0b1110;
            if free == 0 {
                return false;
            }
            if pick.is_none_or(|(_, f)| free.count_ones() < f.count_ones()) {
                pick = Some((e, free));
                if free.count_ones() == 1 {
                    break;
                }
            }
        }
        let Some((e, free)) = pick else {
            return true;
        };
        for c in 1..=3u8 {
            if free & (1 << c) != 0 {
                colours[e] = c;
                if go(g, colours) {
                    return true;
                }
            }
        }
        colours[e] = 0;
        false
    }
    let mut colours = vec![0u8; g.size()];
    for (k, &(_, e)) in g.incidences(0).iter().enumerate() {
        colours[e] = k as u8 + 1;
    }
    go(g, &mut colours).then_some(ThreeEdgeColouring { colours })
}

pub fn is_class_one(g: &CubicGraph) -> bool {
    class_one_colouring(g).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{named_graph, papillon, NamedGraph};

    #[test]
    fn petersen_is_a_snark() {
        assert!(!is_class_one(&named_graph("Petersen").unwrap()));
    }

    #[test]
    fn colourable_graphs() {
        for g in NamedGraph::ALL.iter().filter(|n| n.name() != "Petersen").map(|n| n.build()) {
            let c = class_one_colouring(&g).expect("class I");
            assert!(c.is_proper(&g));
            for k in 1..=3 {
                assert_eq!(c.class(k).len(), g.order() / 2);
            }
        }
        assert!(is_class_one(&papillon(2, 3).0));
    }

    #[test]
    fn rejects_improper() {
        let g = named_graph("K4").unwrap();
        assert!(ThreeEdgeColouring::new(&g, vec![1; 6]).is_err());
        assert!(ThreeEdgeColouring::new(&g, vec![1, 2, 3, 3, 2, 1]).is_ok());
    }
}
