//! JSON property reports for a single graph.

use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::generators::PapillonLayout;
use crate::graph::{CubicGraph, Cycle, EdgeId, Vertex};
use crate::matchings::{
    complementary_two_factor, enumerate_perfect_matchings, is_e2f, is_ph, is_pmh, E2f, PerfectMatching, Ph, Pmh,
    PmhFailure,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    E2f,
    Pmh,
    Ph,
    TwoFactorHamiltonian,
}

impl Property {
    pub fn name(self) -> &'static str {
        match self {
            Property::E2f => "e2f",
            Property::Pmh => "pmh",
            Property::Ph => "ph",
            Property::TwoFactorHamiltonian => "2fh",
        }
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "e2f" => Ok(Property::E2f),
            "pmh" => Ok(Property::Pmh),
            "ph" => Ok(Property::Ph),
            "2fh" => Ok(Property::TwoFactorHamiltonian),
            other => Err(Error::UnknownName(other.to_string())),
        }
    }
}

struct Render<'a> {
    g: &'a CubicGraph,
    layout: Option<&'a PapillonLayout>,
}

impl Render<'_> {
    fn vertex(&self, v: Vertex) -> Value {
        match self.layout {
            Some(l) => json!({ "id": v, "label": l.label(v) }),
            None => json!({ "id": v }),
        }
    }

    fn edge(&self, e: EdgeId) -> Value {
        let (a, b) = self.g.endpoints(e);
        match self.layout {
            Some(l) => json!({ "id": e, "ends": [a, b], "label": l.edge_label(self.g, e) }),
            None => json!({ "id": e, "ends": [a, b] }),
        }
    }

    fn matching(&self, m: &PerfectMatching) -> Value {
        Value::Array(m.edges().iter().map(|&e| self.edge(e)).collect())
    }

    fn vertices(&self, vs: &[Vertex]) -> Value {
        Value::Array(vs.iter().map(|&v| self.vertex(v)).collect())
    }

    fn cycle(&self, c: &Cycle) -> Value {
        self.vertices(c.vertices())
    }
}

pub fn check_property(g: &CubicGraph, layout: Option<&PapillonLayout>, property: Property) -> Result<Value> {
    let r = Render { g, layout };
    let (holds, witness, certificates) = match property {
        Property::E2f => match is_e2f(g)? {
            E2f::Holds { matchings, colourings } => {
                let certs = matchings
                    .iter()
                    .zip(&colourings)
                    .map(|(m, c)| json!({ "matching": r.matching(m), "colouring": c.colours() }))
                    .collect();
                (true, Value::Null, certs)
            }
            E2f::Fails { matching, odd_cycle } => (
                false,
                json!({ "matching": r.matching(&matching), "odd_cycle": r.cycle(&odd_cycle) }),
                Vec::new(),
            ),
        },
        Property::Pmh => match is_pmh(g)? {
            Pmh::Holds(certs) => {
                let certs = certs
                    .iter()
                    .map(|c| {
                        json!({
                            "matching": r.matching(&c.matching),
                            "partner": r.matching(&c.partner),
                            "cycle": r.vertices(&c.cycle),
                        })
                    })
                    .collect();
                (true, Value::Null, certs)
            }
            Pmh::Fails { matching, reason } => {
                let explanation = match reason {
                    PmhFailure::OddCycle(c) => json!({ "odd_cycle": r.cycle(&c) }),
                    PmhFailure::Exhausted => json!({ "exhausted": true }),
                };
                (false, json!({ "matching": r.matching(&matching), "reason": explanation }), Vec::new())
            }
        },
        Property::Ph => match is_ph(g)? {
            Ph::Holds => (true, Value::Null, Vec::new()),
            Ph::Fails { pairing } => {
                let pairs: Vec<Value> =
                    pairing.iter().map(|&(a, b)| json!([r.vertex(a), r.vertex(b)])).collect();
                (false, json!({ "pairing": pairs }), Vec::new())
            }
        },
        Property::TwoFactorHamiltonian => {
            let pms = enumerate_perfect_matchings(g);
            if pms.is_empty() {
                return Err(Error::NoPerfectMatching);
            }
            let mut witness = Value::Null;
            for m in &pms {
                let f = complementary_two_factor(g, m)?;
                if !f.is_hamiltonian() {
                    let cycles: Vec<Value> = f.cycles().iter().map(|c| r.cycle(c)).collect();
                    witness = json!({ "matching": r.matching(m), "cycles": cycles });
                    break;
                }
            }
            (witness.is_null(), witness, Vec::new())
        }
    };
    Ok(json!({
        "property": property.name(),
        "holds": holds,
        "witness": witness,
        "certificates": certificates,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{named_graph, papillon};

    #[test]
    fn papillon_witness_uses_labels() {
        let (g, layout) = papillon(1, 1);
        let v = check_property(&g, Some(&layout), Property::Pmh).unwrap();
        assert_eq!(v["holds"], false);
        let first = &v["witness"]["matching"][0];
        assert!(first["label"].as_str().unwrap().starts_with('u'));
    }

    #[test]
    fn property_names() {
        assert_eq!("2FH".parse::<Property>().unwrap(), Property::TwoFactorHamiltonian);
        assert!("x".parse::<Property>().is_err());
        let g = named_graph("K4").unwrap();
        let v = check_property(&g, None, Property::TwoFactorHamiltonian).unwrap();
        assert_eq!(v["holds"], true);
        assert_eq!(check_property(&g, None, Property::E2f).unwrap()["certificates"].as_array().unwrap().len(), 3);
    }
}
