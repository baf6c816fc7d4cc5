//! Exhaustive censuses: all cycle permutation graphs for a given cycle
//! length, and classification of an externally supplied graph6 corpus.
//! Reports are JSON and carry certificates that `verify_report` re-checks
//! without touching the search code.

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::{cycle_permutation_graph, Permutation};
use crate::graph::{CubicGraph, Cycle, EdgeId, Vertex};
use crate::io::{from_graph6, to_graph6};
use crate::iso::canonical_form;
use crate::matchings::{
    class_one_colouring, is_e2f, is_pmh, PerfectMatching, PmhCertificate, PmhFailure,
    ThreeEdgeColouring, E2f, Pmh,
};
use crate::par;
use crate::structure::{
    cyclic_edge_connectivity, girth, has_triangle, is_bipartite, CyclicConnectivity, CYCLIC_CONNECTIVITY_BOUND,
};

pub const DEFAULT_MAX_T: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CensusKind {
    CyclePermutation,
    Graph6,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameters {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    pub allow_odd: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    /// Permutations or input lines considered.
    pub examined: u64,
    /// Permutations that are least in their orbit under rotating and
    /// reflecting either cycle and swapping the two cycles.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbit_representatives: Option<u64>,
    /// Graphs surviving every filter, before deduplication.
    pub passed_filter: u64,
    pub non_isomorphic: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub three_connected: Option<u64>,
    pub non_bipartite: u64,
    pub girth_at_least_4: u64,
    pub class_one: usize,
    pub e2f: usize,
    pub pmh: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderRow {
    pub order: usize,
    pub counts: Counts,
    pub non_isomorphic: usize,
    /// Cyclic edge connectivity of the E2F graphs.
    pub cyclic_connectivity: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Runtime {
    pub seconds: f64,
    pub threads: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum E2fRecord {
    /// One colouring per perfect matching; colour class 1 is the matching.
    Holds { colourings: Vec<ThreeEdgeColouring> },
    Fails { matching: PerfectMatching, odd_cycle: Cycle },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum PmhRecord {
    Holds { hamiltonian: Vec<PmhCertificate> },
    Fails {
        matching: PerfectMatching,
        #[serde(skip_serializing_if = "Option::is_none")]
        odd_cycle: Option<Cycle>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificates {
    pub e2f: E2fRecord,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pmh: Option<PmhRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub colouring: Option<ThreeEdgeColouring>,
}

/// One surviving graph. Edge ids in certificates refer to the graph decoded
/// from `graph6`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub graph6: String,
    pub source: String,
    pub order: usize,
    pub girth: usize,
    pub e2f: bool,
    /// Only decided for E2F graphs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pmh: Option<bool>,
    pub class_one: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cyclic_connectivity: Option<CyclicConnectivity>,
    pub certificates: Certificates,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CensusReport {
    pub census: CensusKind,
    pub parameters: Parameters,
    pub totals: Totals,
    pub counts: Counts,
    pub per_order: Vec<OrderRow>,
    pub checks: Vec<Check>,
    pub graphs: Vec<GraphRecord>,
    pub runtime: Runtime,
}

impl CensusReport {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises") + "\n"
    }

    pub fn from_json(text: &str) -> Result<CensusReport> {
        serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), message: e.to_string() })
    }

    /// The report with the runtime block removed, for comparing runs.
    pub fn without_runtime(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("report serialises");
        v.as_object_mut().expect("report is an object").remove("runtime");
        v
    }
}

fn threads() -> usize {
    #[cfg(feature = "parallel")]
    {
        rayon::current_num_threads()
    }
    #[cfg(not(feature = "parallel"))]
    {
        1
    }
}

fn classify(g: &CubicGraph, source: String, with_connectivity: bool) -> Result<GraphRecord> {
    let (e2f, e2f_record) = match is_e2f(g)? {
        E2f::Holds { colourings, .. } => (true, E2fRecord::Holds { colourings }),
        E2f::Fails { matching, odd_cycle } => (false, E2fRecord::Fails { matching, odd_cycle }),
    };
    let (pmh, pmh_record) = if e2f {
        match is_pmh(g)? {
            Pmh::Holds(hamiltonian) => (Some(true), Some(PmhRecord::Holds { hamiltonian })),
            Pmh::Fails { matching, reason } => {
                let odd_cycle = match reason {
                    PmhFailure::OddCycle(c) => Some(c),
                    PmhFailure::Exhausted => None,
                };
                (Some(false), Some(PmhRecord::Fails { matching, odd_cycle }))
            }
        }
    } else {
        (None, None)
    };
    let colouring = class_one_colouring(g);
    let cyclic_connectivity = if with_connectivity && g.order() <= CYCLIC_CONNECTIVITY_BOUND {
        Some(cyclic_edge_connectivity(g)?)
    } else {
        None
    };
    Ok(GraphRecord {
        graph6: to_graph6(g),
        source,
        order: g.order(),
        girth: girth(g),
        e2f,
        pmh,
        class_one: colouring.is_some(),
        cyclic_connectivity,
        certificates: Certificates { e2f: e2f_record, pmh: pmh_record, colouring },
    })
}

fn tally(records: &[GraphRecord]) -> (usize, usize, usize, BTreeMap<String, usize>) {
    let mut histogram = BTreeMap::new();
    for r in records.iter().filter(|r| r.e2f) {
        if let Some(c) = r.cyclic_connectivity {
            *histogram.entry(c.to_string()).or_insert(0) += 1;
        }
    }
    (
        records.iter().filter(|r| r.class_one).count(),
        records.iter().filter(|r| r.e2f).count(),
        records.iter().filter(|r| r.pmh == Some(true)).count(),
        histogram,
    )
}

fn chain_checks(records: &[GraphRecord]) -> Vec<Check> {
    vec![
        Check {
            name: "every PMH graph is E2F".into(),
            passed: records.iter().all(|r| r.pmh != Some(true) || r.e2f),
        },
        Check { name: "every E2F graph is Class I".into(), passed: records.iter().all(|r| !r.e2f || r.class_one) },
    ]
}

/// For `s` with `s(0) = 0`: is `s` least among `b ∘ s ∘ a⁻¹` and `b ∘ s⁻¹ ∘ a⁻¹` over dihedral `a`, `b`?
/// Every such permutation yields an isomorphic cycle permutation graph.
fn is_orbit_minimum(s: &[usize], inv: &[usize]) -> bool {
    let t = s.len();
    for src in [s, inv] {
        for reflect_a in [false, true] {
            for shift_a in 0..t {
                let a_inv = |j: usize| if reflect_a { (shift_a + t - j) % t } else { (j + shift_a) % t };
                let x0 = src[a_inv(0)];
                for reflect_b in [false, true] {
                    // the shift of b is fixed by sending x0 to 0
                    let b = |x: usize| if reflect_b { (x0 + t - x) % t } else { (x + t - x0) % t };
                    for j in 1..t {
                        let c = b(src[a_inv(j)]);
                        if c < s[j] {
                            return false;
                        }
                        if c > s[j] {
                            break;
                        }
                    }
                }
            }
        }
    }
    true
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("a larger element exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[derive(Default)]
struct BlockResult {
    representatives: u64,
    non_bipartite: u64,
    girth_ok: u64,
    found: BTreeMap<Vec<u8>, Permutation>,
}

/// Permutations with `s(0) = 0` and `s(1) = second`; orbit minima always
/// fix 0.
fn scan_block(t: usize, second: usize) -> Result<BlockResult> {
    let mut out = BlockResult::default();
    let mut rest: Vec<usize> = (1..t).filter(|&x| x != second).collect();
    let mut s = vec![0; t];
    let mut inv = vec![0; t];
    loop {
        s[0] = 0;
        s[1] = second;
        s[2..].copy_from_slice(&rest);
        for (i, &x) in s.iter().enumerate() {
            inv[x] = i;
        }
        if is_orbit_minimum(&s, &inv) {
            out.representatives += 1;
            let sigma = Permutation::from_images(s.clone())?;
            let g = cycle_permutation_graph(&sigma)?;
            if !is_bipartite(&g) {
                out.non_bipartite += 1;
                if !has_triangle(&g) {
                    out.girth_ok += 1;
                    let code = canonical_form(&g)?.code;
                    out.found.entry(code).or_insert(sigma);
                }
            }
        }
        if !next_permutation(&mut rest) {
            break;
        }
    }
    Ok(out)
}

pub fn census_cycle_permutation(t: usize, allow_odd: bool) -> Result<CensusReport> {
    census_cycle_permutation_bounded(t, allow_odd, DEFAULT_MAX_T)
}

/// All non-bipartite cycle permutation graphs with two `t`-cycles and girth
/// at least 4, up to isomorphism, classified for E2F, PMH and Class I.
pub fn census_cycle_permutation_bounded(t: usize, allow_odd: bool, max_t: usize) -> Result<CensusReport> {
    let clock = Instant::now();
    if t % 2 == 1 && !allow_odd {
        return Err(Error::OddT(t));
    }
    if t < 4 {
        return Err(Error::PreconditionViolated(format!("t = {t} is below 4")));
    }
    if t > max_t {
        return Err(Error::OrderTooLarge { order: 2 * t, bound: 2 * max_t });
    }
    let seconds: Vec<usize> = (1..t).collect();
    let blocks = par::map(&seconds, |&b| scan_block(t, b));
    let mut representatives = 0;
    let mut counts = Counts::default();
    let mut found: BTreeMap<Vec<u8>, Permutation> = BTreeMap::new();
    for block in blocks {
        let block = block?;
        representatives += block.representatives;
        counts.non_bipartite += block.non_bipartite;
        counts.girth_at_least_4 += block.girth_ok;
        for (code, sigma) in block.found {
            match found.get(&code) {
                Some(existing) if *existing <= sigma => {}
                _ => {
                    found.insert(code, sigma);
                }
            }
        }
    }
    let entries: Vec<(Vec<u8>, Permutation)> = found.into_iter().collect();
    let records = par::map(&entries, |(code, sigma)| {
        let g = from_graph6(std::str::from_utf8(code).expect("graph6 is ASCII"))?;
        classify(&g, sigma.to_string(), false)
    });
    let records: Vec<GraphRecord> = records.into_iter().collect::<Result<_>>()?;
    let (class_one, e2f, pmh, _) = tally(&records);
    counts.class_one = class_one;
    counts.e2f = e2f;
    counts.pmh = pmh;
    let mut checks = chain_checks(&records);
    if t % 2 == 1 {
        checks.push(Check { name: "odd t graphs are not E2F".into(), passed: e2f == 0 });
    }
    let factorial: u64 = (1..=t as u64).product();
    Ok(CensusReport {
        census: CensusKind::CyclePermutation,
        parameters: Parameters { t: Some(t), allow_odd, input: None },
        totals: Totals {
            examined: factorial,
            orbit_representatives: Some(representatives),
            passed_filter: counts.girth_at_least_4,
            non_isomorphic: records.len(),
        },
        per_order: vec![OrderRow {
            order: 2 * t,
            counts: counts.clone(),
            non_isomorphic: records.len(),
            cyclic_connectivity: BTreeMap::new(),
        }],
        counts,
        checks,
        graphs: records,
        runtime: Runtime { seconds: clock.elapsed().as_secs_f64(), threads: threads() },
    })
}

/// Classifies every graph6 line of `text`; `input` names the source.
pub fn census_graph6_text(text: &str, input: &str) -> Result<CensusReport> {
    let clock = Instant::now();
    let mut graphs: Vec<(usize, CubicGraph)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let g = from_graph6(line).map_err(|e| Error::Input { line: i + 1, source: Box::new(e) })?;
        graphs.push((i + 1, g));
    }
    struct Screened {
        line: usize,
        order: usize,
        three_connected: bool,
        non_bipartite: bool,
        girth_ok: bool,
        code: Option<Vec<u8>>,
    }
    let screened = par::map(&graphs, |(line, g)| -> Result<Screened> {
        let three_connected = g.is_three_connected();
        let non_bipartite = three_connected && !is_bipartite(g);
        let girth_ok = non_bipartite && !has_triangle(g);
        let code = if girth_ok { Some(canonical_form(g)?.code) } else { None };
        Ok(Screened { line: *line, order: g.order(), three_connected, non_bipartite, girth_ok, code })
    });
    let mut rows: BTreeMap<usize, OrderRow> = BTreeMap::new();
    let mut unique: BTreeMap<(usize, Vec<u8>), (usize, usize)> = BTreeMap::new();
    for (idx, s) in screened.into_iter().enumerate() {
        let s = s?;
        let row = rows.entry(s.order).or_insert_with(|| OrderRow { order: s.order, ..Default::default() });
        *row.counts.three_connected.get_or_insert(0) += s.three_connected as u64;
        row.counts.non_bipartite += s.non_bipartite as u64;
        row.counts.girth_at_least_4 += s.girth_ok as u64;
        if let Some(code) = s.code {
            unique.entry((s.order, code)).or_insert((idx, s.line));
        }
    }
    let survivors: Vec<(usize, usize)> = unique.values().copied().collect();
    let records = par::map(&survivors, |&(idx, line)| classify(&graphs[idx].1, format!("line {line}"), true));
    let mut records: Vec<GraphRecord> = records.into_iter().collect::<Result<_>>()?;
    records.sort_by(|a, b| (a.order, &a.graph6).cmp(&(b.order, &b.graph6)));
    let mut counts = Counts { three_connected: Some(0), ..Default::default() };
    for row in rows.values_mut() {
        let mine: Vec<GraphRecord> = records.iter().filter(|r| r.order == row.order).cloned().collect();
        let (class_one, e2f, pmh, histogram) = tally(&mine);
        row.counts.class_one = class_one;
        row.counts.e2f = e2f;
        row.counts.pmh = pmh;
        row.non_isomorphic = mine.len();
        row.cyclic_connectivity = histogram;
        *counts.three_connected.get_or_insert(0) += row.counts.three_connected.unwrap_or(0);
        counts.non_bipartite += row.counts.non_bipartite;
        counts.girth_at_least_4 += row.counts.girth_at_least_4;
        counts.class_one += class_one;
        counts.e2f += e2f;
        counts.pmh += pmh;
    }
    Ok(CensusReport {
        census: CensusKind::Graph6,
        parameters: Parameters { t: None, allow_odd: false, input: Some(input.to_string()) },
        totals: Totals {
            examined: graphs.len() as u64,
            orbit_representatives: None,
            passed_filter: counts.girth_at_least_4,
            non_isomorphic: records.len(),
        },
        counts,
        per_order: rows.into_values().collect(),
        checks: chain_checks(&records),
        graphs: records,
        runtime: Runtime { seconds: clock.elapsed().as_secs_f64(), threads: threads() },
    })
}

pub fn census_graph6(path: &std::path::Path) -> Result<CensusReport> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    census_graph6_text(&text, &path.display().to_string())
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOutcome {
    pub graphs: usize,
    pub certificates: usize,
    pub failures: Vec<String>,
}

impl VerifyOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Counts perfect matchings by memoised recursion over covered-vertex masks.
pub fn count_perfect_matchings(g: &CubicGraph) -> u64 {
    fn go(g: &CubicGraph, mask: u64, full: u64, memo: &mut HashMap<u64, u64>) -> u64 {
        if mask == full {
            return 1;
        }
        if let Some(&c) = memo.get(&mask) {
            return c;
        }
        let v = (!mask).trailing_zeros() as usize;
        let mut total = 0;
        for w in g.neighbours(v) {
            if mask & (1 << w) == 0 {
                total += go(g, mask | 1 << v | 1 << w, full, memo);
            }
        }
        memo.insert(mask, total);
        total
    }
    assert!(g.order() <= 63, "mask counter needs order < 64");
    go(g, 0, (1u64 << g.order()) - 1, &mut HashMap::new())
}

fn matching_ok(g: &CubicGraph, edges: &[EdgeId]) -> Option<Vec<Vertex>> {
    let mut mate = vec![usize::MAX; g.order()];
    for &e in edges {
        if e >= g.size() {
            return None;
        }
        let (a, b) = g.endpoints(e);
        if mate[a] != usize::MAX || mate[b] != usize::MAX {
            return None;
        }
        mate[a] = b;
        mate[b] = a;
    }
    mate.iter().all(|&m| m != usize::MAX).then_some(mate)
}

/// `vertices` is a cycle of `g` avoiding the edges of `avoid`, of odd length.
fn odd_cycle_ok(g: &CubicGraph, vertices: &[Vertex], avoid: &[EdgeId]) -> bool {
    let k = vertices.len();
    let mut seen = vec![false; g.order()];
    k % 2 == 1
        && k >= 3
        && vertices.iter().all(|&v| v < g.order() && !std::mem::replace(&mut seen[v], true))
        && (0..k).all(|i| match g.edge_between(vertices[i], vertices[(i + 1) % k]) {
            Some(e) => !avoid.contains(&e),
            None => false,
        })
}

fn colouring_ok(g: &CubicGraph, c: &ThreeEdgeColouring) -> bool {
    let col = c.colours();
    col.len() == g.size()
        && (0..g.order()).all(|v| {
            let mut mask = 0u8;
            for &(_, e) in g.incidences(v) {
                if !(1..=3).contains(&col[e]) {
                    return false;
                }
                mask |= 1 << col[e];
            }
            mask == 0b1110
        })
}

fn hamiltonian_ok(g: &CubicGraph, cert: &PmhCertificate) -> bool {
    let (Some(_), Some(_)) = (matching_ok(g, cert.matching.edges()), matching_ok(g, cert.partner.edges())) else {
        return false;
    };
    let n = g.order();
    let h = &cert.cycle;
    let mut seen = vec![false; n];
    if h.len() != n || !h.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true)) {
        return false;
    }
    let Some(e0) = g.edge_between(h[0], h[1]) else {
        return false;
    };
    let first_m = cert.matching.edges().contains(&e0);
    (0..n).all(|i| match g.edge_between(h[i], h[(i + 1) % n]) {
        Some(e) => {
            let (in_m, in_n) = (cert.matching.edges().contains(&e), cert.partner.edges().contains(&e));
            in_m != in_n && in_m == ((i % 2 == 0) == first_m)
        }
        None => false,
    })
}

/// Re-validates every certificate and count of a report.
pub fn verify_report(report: &CensusReport) -> VerifyOutcome {
    let mut out = VerifyOutcome { graphs: report.graphs.len(), ..Default::default() };
    let mut fail = |msg: String| out.failures.push(msg);
    let mut certificates = 0;
    for r in &report.graphs {
        let id = &r.graph6;
        let Ok(g) = from_graph6(id) else {
            fail(format!("{id}: graph6 does not decode to a cubic graph"));
            continue;
        };
        let pm_count = count_perfect_matchings(&g) as usize;
        match &r.certificates.e2f {
            E2fRecord::Holds { colourings } => {
                let mut classes: Vec<Vec<EdgeId>> = Vec::with_capacity(colourings.len());
                for c in colourings {
                    certificates += 1;
                    if !colouring_ok(&g, c) {
                        fail(format!("{id}: improper colouring"));
                    }
                    classes.push(c.class(1));
                }
                classes.sort();
                classes.dedup();
                if classes.len() != pm_count || colourings.len() != pm_count {
                    fail(format!("{id}: {} colourings for {pm_count} perfect matchings", classes.len()));
                }
                if !r.e2f {
                    fail(format!("{id}: E2F certificate on a graph flagged non-E2F"));
                }
            }
            E2fRecord::Fails { matching, odd_cycle } => {
                certificates += 1;
                if matching_ok(&g, matching.edges()).is_none()
                    || !odd_cycle_ok(&g, odd_cycle.vertices(), matching.edges())
                {
                    fail(format!("{id}: invalid non-E2F witness"));
                }
                if r.e2f {
                    fail(format!("{id}: non-E2F witness on a graph flagged E2F"));
                }
            }
        }
        match (&r.certificates.pmh, r.pmh) {
            (Some(PmhRecord::Holds { hamiltonian }), Some(true)) => {
                let mut ms: Vec<&[EdgeId]> = hamiltonian.iter().map(|c| c.matching.edges()).collect();
                ms.sort();
                ms.dedup();
                if ms.len() != pm_count || hamiltonian.len() != pm_count {
                    fail(format!("{id}: {} Hamiltonian certificates for {pm_count} perfect matchings", ms.len()));
                }
                for c in hamiltonian {
                    certificates += 1;
                    if !hamiltonian_ok(&g, c) {
                        fail(format!("{id}: invalid Hamiltonian certificate"));
                    }
                }
            }
            (Some(PmhRecord::Fails { matching, odd_cycle }), Some(false)) => {
                certificates += 1;
                let valid = match (matching_ok(&g, matching.edges()), odd_cycle) {
                    (None, _) => false,
                    (Some(_), Some(c)) => odd_cycle_ok(&g, c.vertices(), matching.edges()),
                    (Some(mate), None) => !any_hamiltonian_partner(&g, &mate, matching.edges()),
                };
                if !valid {
                    fail(format!("{id}: invalid non-PMH witness"));
                }
            }
            (None, None) => {}
            _ => fail(format!("{id}: PMH flag and certificate disagree")),
        }
        match &r.certificates.colouring {
            Some(c) => {
                certificates += 1;
                if !colouring_ok(&g, c) || !r.class_one {
                    fail(format!("{id}: invalid Class I colouring"));
                }
            }
            None if r.class_one => fail(format!("{id}: Class I without colouring")),
            None => {}
        }
    }
    let recount = |f: &dyn Fn(&GraphRecord) -> bool| report.graphs.iter().filter(|r| f(r)).count();
    if recount(&|r| r.e2f) != report.counts.e2f
        || recount(&|r| r.pmh == Some(true)) != report.counts.pmh
        || recount(&|r| r.class_one) != report.counts.class_one
        || report.graphs.len() != report.totals.non_isomorphic
    {
        fail("report counts do not match its graph records".into());
    }
    if !(report.counts.pmh <= report.counts.e2f && report.counts.e2f <= report.counts.class_one) {
        fail("PMH <= E2F <= Class I violated".into());
    }
    out.certificates = certificates;
    out
}

/// Exhaustive check that no perfect matching avoiding `m` closes a
/// Hamiltonian cycle with it.
fn any_hamiltonian_partner(g: &CubicGraph, m_mate: &[Vertex], m: &[EdgeId]) -> bool {
    fn go(g: &CubicGraph, m: &[EdgeId], m_mate: &[Vertex], n_mate: &mut Vec<Vertex>) -> bool {
        let Some(v) = n_mate.iter().position(|&x| x == usize::MAX) else {
            let n = g.order();
            let (mut v, mut steps) = (0, 0);
            loop {
                v = n_mate[m_mate[v]];
                steps += 2;
                if v == 0 {
                    return steps == n;
                }
            }
        };
        for &(w, e) in g.incidences(v) {
            if n_mate[w] == usize::MAX && !m.contains(&e) {
                n_mate[v] = w;
                n_mate[w] = v;
                if go(g, m, m_mate, n_mate) {
                    return true;
                }
                n_mate[v] = usize::MAX;
                n_mate[w] = usize::MAX;
            }
        }
        false
    }
    go(g, m, m_mate, &mut vec![usize::MAX; g.order()])
}
