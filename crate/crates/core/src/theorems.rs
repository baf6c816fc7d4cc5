//! Structural claims about papillon graphs, checked for every `1 <= r <= l`
//! with `r + l` up to a bound.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::{cycle_permutation_graph, papillon, papillon_permutation, psi_automorphism};
use crate::iso::{are_isomorphic, isomorphic_checked, verify_automorphism};
use crate::matchings::{
    constructive_pmh_extension, enumerate_perfect_matchings, is_e2f, is_pmh, pmh_extension, principal_cut_profile,
};
use crate::multipole::{assemble_chains, papillon_from_chains};
use crate::structure::{girth, odd_girth};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremCheck {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<(usize, usize)>,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub max_sum: usize,
    pub checks: Vec<TheoremCheck>,
}

impl TheoremReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &TheoremCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

struct Recorder(Vec<TheoremCheck>);

impl Recorder {
    fn record(&mut self, name: &str, params: Option<(usize, usize)>, passed: bool, detail: String) {
        self.0.push(TheoremCheck { name: name.into(), params, passed, detail: if passed { String::new() } else { detail } });
    }
}

/// All `(r, l)` with `1 <= r <= l` and `r + l <= max_sum`.
pub fn parameter_pairs(max_sum: usize) -> Vec<(usize, usize)> {
    (1..max_sum)
        .flat_map(|r| (r..=max_sum - r).map(move |l| (r, l)))
        .collect()
}

pub fn theorem_suite(max_sum: usize) -> Result<TheoremReport> {
    if max_sum < 2 {
        return Err(Error::PreconditionViolated(format!("max_sum = {max_sum} is below 2")));
    }
    let mut rec = Recorder(Vec::new());
    let pairs = parameter_pairs(max_sum);
    for &(r, l) in &pairs {
        let p = Some((r, l));
        let (g, layout) = papillon(r, l);

        let e2f = is_e2f(&g)?;
        rec.record("E2F", p, e2f.holds(), "a complementary 2-factor has an odd cycle".into());

        let pmh = is_pmh(&g)?.holds();
        let expected = r % 2 == 0 && l % 2 == 0;
        rec.record("PMH iff r and l even", p, pmh == expected, format!("PMH = {pmh}"));

        let og = odd_girth(&g).length();
        rec.record("odd girth 2r+3", p, og == Some(2 * r + 3), format!("odd girth {og:?}"));

        let gi = girth(&g);
        rec.record("girth 4", p, gi == 4, format!("girth {gi}"));

        let psi_ok = verify_automorphism(&g, &psi_automorphism(&layout))?;
        rec.record("psi is an automorphism", p, psi_ok, String::new());

        let sigma = papillon_permutation(r, l)?;
        let cpg = cycle_permutation_graph(&sigma)?;
        let t = layout.params().cycle_len();
        let pi: Vec<usize> = (0..t).map(|i| layout.u(i + 1)).chain((0..t).map(|i| layout.v(sigma.apply(i) + 1))).collect();
        let pi_ok = cpg.edges().iter().all(|&(a, b)| g.has_edge(pi[a], pi[b]));
        rec.record("cycle permutation graph of sigma", p, pi_ok, format!("sigma = {sigma}"));

        let chains = papillon_from_chains(r, l)?;
        let direct = isomorphic_checked(&chains, &g)?.is_some();
        let mirrored = are_isomorphic(&assemble_chains(l, r)?, &g)?.is_some();
        rec.record("chain assembly isomorphic", p, direct && mirrored, format!("({r},{l}) {direct}, ({l},{r}) {mirrored}"));

        if r == l {
            let mut violations = 0;
            for m in enumerate_perfect_matchings(&g) {
                if principal_cut_profile(&g, &layout, &m).is_err() {
                    violations += 1;
                }
            }
            rec.record("principal cut counts", p, violations == 0, format!("{violations} violations"));
            if r % 2 == 0 {
                let mut disagreements = 0;
                for m in enumerate_perfect_matchings(&g) {
                    let built = constructive_pmh_extension(&g, &layout, &m).is_ok();
                    let found = pmh_extension(&g, &m)?.is_some();
                    if !(built && found) {
                        disagreements += 1;
                    }
                }
                rec.record("constructive extension", p, disagreements == 0, format!("{disagreements} failures"));
            }
        }
    }
    for (i, &(r1, l1)) in pairs.iter().enumerate() {
        for &(r2, l2) in &pairs[i + 1..] {
            if r1 + l1 != r2 + l2 {
                continue;
            }
            let iso = isomorphic_checked(&papillon(r1, l1).0, &papillon(r2, l2).0)?.is_some();
            rec.record(
                "pairwise non-isomorphic",
                None,
                !iso,
                format!("({r1},{l1}) and ({r2},{l2}) are isomorphic"),
            );
        }
    }
    Ok(TheoremReport { max_sum, checks: rec.0 })
}
