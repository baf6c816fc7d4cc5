use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use cubelab::census::{census_cycle_permutation, census_graph6_text, count_perfect_matchings, verify_report, CensusReport};
use cubelab::generators::{named_graph, papillon};
use cubelab::io::from_graph6;
use cubelab::iso::{are_isomorphic, canonical_form};
use cubelab::matchings::{
    constructive_pmh_extension, e2f_by_colouring, e2f_by_cycle_parity, enumerate_perfect_matchings,
    extend_to_three_edge_colouring, is_ph, pmh_extension, ColouringExtension, PerfectMatching,
};
use cubelab::CubicGraph;

const CORPUS: [(usize, &str); 5] = [
    (8, include_str!("data/cubic08.g6")),
    (10, include_str!("data/cubic10.g6")),
    (12, include_str!("data/cubic12.g6")),
    (14, include_str!("data/cubic14.g6")),
    (16, include_str!("data/cubic16.g6")),
];

type Row = (usize, usize, usize, &'static [(&'static str, usize)]);
type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn corpus() -> Vec<CubicGraph> {
    CORPUS
        .iter()
        .flat_map(|(_, text)| text.lines().filter(|l| !l.trim().is_empty()).map(|l| from_graph6(l).unwrap()))
        .collect()
}

fn corpus_report(order: usize) -> CensusReport {
    let text = CORPUS.iter().find(|(n, _)| *n == order).unwrap().1;
    census_graph6_text(text, &format!("cubic{order:02}.g6")).unwrap()
}

fn split(report: &CensusReport) -> BTreeMap<String, usize> {
    report.per_order.iter().flat_map(|r| r.cyclic_connectivity.clone()).collect()
}

fn table_two() -> Outcome {
    let expected = [(4, 1, 0, 120), (6, 5, 1, 120), (8, 28, 2, 120), (10, 175, 0, 1800)];
    let mut ok = true;
    let mut parts = Vec::new();
    for (t, e2f, pmh, budget) in expected {
        let start = Instant::now();
        let report = census_cycle_permutation(t, false).unwrap();
        let elapsed = start.elapsed();
        let hit = report.counts.e2f == e2f && report.counts.pmh == pmh && elapsed <= Duration::from_secs(budget);
        ok &= hit && report.all_checks_pass();
        parts.push(format!("t={t} ({},{}) {:.1}s", report.counts.e2f, report.counts.pmh, elapsed.as_secs_f64()));
    }
    outcome(ok, parts.join(", "))
}

fn table_one() -> Outcome {
    let rows: [Row; 5] = [
        (8, 1, 1, &[("4", 1)]),
        (10, 0, 3, &[]),
        (12, 9, 17, &[("3", 2), ("4", 5), ("5", 2)]),
        (14, 6, 92, &[("3", 2), ("4", 2), ("5", 2)]),
        (16, 95, 716, &[("3", 35), ("4", 56), ("5", 4)]),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (order, e2f, class_one, want) in rows {
        let report = corpus_report(order);
        let want: BTreeMap<String, usize> = want.iter().map(|&(k, v)| (k.to_string(), v)).collect();
        let got = split(&report);
        ok &= report.counts.e2f == e2f && report.counts.class_one == class_one && got == want;
        parts.push(format!("n={order} E2F {} Class I {} split {:?}", report.counts.e2f, report.counts.class_one, got));
    }
    outcome(ok, parts.join("; "))
}

fn theorem_suite_six() -> Outcome {
    let start = Instant::now();
    let report = cubelab::theorems::theorem_suite(6).unwrap();
    let elapsed = start.elapsed();
    let failed: Vec<_> = report.failures().map(|c| format!("{} {:?}", c.name, c.params)).collect();
    outcome(
        failed.is_empty() && elapsed <= Duration::from_secs(600),
        format!("{} checks, {} failed {failed:?}, {:.2}s", report.checks.len(), failed.len(), elapsed.as_secs_f64()),
    )
}

fn principal_cut() -> Outcome {
    let mut violations = 0;
    let mut matchings = 0;
    for n in 1..=3 {
        let (g, layout) = papillon(n, n);
        let cut = layout.principal_cut();
        let [a, b, c, d] = cut;
        for m in enumerate_perfect_matchings(&g) {
            matchings += 1;
            let k = cut.iter().filter(|&&e| m.contains(e)).count();
            let poles_agree = (1..=2 * n).all(|j| layout.boundary(j).iter().filter(|&&e| m.contains(e)).count() == k);
            let pair_ok = k != 2
                || (m.contains(a) && m.contains(d))
                || (m.contains(b) && m.contains(c));
            let profile_ok = cubelab::matchings::principal_cut_profile(&g, &layout, &m).is_ok();
            if !(poles_agree && pair_ok && profile_ok) {
                violations += 1;
            }
        }
    }
    outcome(violations == 0, format!("{matchings} perfect matchings, {violations} violations"))
}

fn constructive_vs_search() -> Outcome {
    let mut total = 0;
    let mut agree = 0;
    for n in [2, 4] {
        let (g, layout) = papillon(n, n);
        for m in enumerate_perfect_matchings(&g) {
            total += 1;
            let built = constructive_pmh_extension(&g, &layout, &m)
                .map(|x| x.certificate.matching == m && x.certificate.validate(&g))
                .unwrap_or(false);
            let found = pmh_extension(&g, &m).unwrap().is_some();
            if built && found {
                agree += 1;
            }
        }
    }
    outcome(agree == total, format!("{agree}/{total} agree"))
}

fn negative_witnesses() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for n in [1, 3] {
        let (g, layout) = papillon(n, n);
        let t = layout.params().cycle_len();
        let edges = (1..=t / 2)
            .flat_map(|i| {
                [
                    g.edge_between(layout.u(2 * i - 1), layout.u(2 * i)).unwrap(),
                    g.edge_between(layout.v(2 * i - 1), layout.v(2 * i)).unwrap(),
                ]
            })
            .collect();
        let m = PerfectMatching::new(&g, edges).unwrap();
        let none = pmh_extension(&g, &m).unwrap().is_none();
        ok &= none;
        parts.push(format!("P({n},{n}) no extension: {none}"));
    }
    let prism = named_graph("prism6").unwrap();
    let witnesses = enumerate_perfect_matchings(&prism)
        .iter()
        .filter(|m| {
            matches!(extend_to_three_edge_colouring(&prism, m).unwrap(), ColouringExtension::Colouring(_))
                && pmh_extension(&prism, m).unwrap().is_none()
        })
        .count();
    ok &= witnesses > 0;
    parts.push(format!("Prism6 colourable but not Hamiltonian matchings: {witnesses}"));
    outcome(ok, parts.join(", "))
}

fn ph_classification() -> Outcome {
    let start = Instant::now();
    let cases = [("K4", true), ("K33", true), ("Q3", true), ("petersen", false)];
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, want) in cases {
        let got = is_ph(&named_graph(name).unwrap()).unwrap().holds();
        ok &= got == want;
        parts.push(format!("{name} {got}"));
    }
    let got = is_ph(&papillon(1, 1).0).unwrap().holds();
    ok &= !got;
    parts.push(format!("P(1,1) {got}"));
    let elapsed = start.elapsed();
    ok &= elapsed <= Duration::from_secs(60);
    outcome(ok, format!("{} in {:.2}s", parts.join(", "), elapsed.as_secs_f64()))
}

/// Perfect matchings counted as the `n/2`-subsets of edges covering every vertex.
fn subset_count(g: &CubicGraph) -> u64 {
    let (n, m) = (g.order(), g.size());
    let k = n / 2;
    let ends: Vec<u32> = g.edges().iter().map(|&(a, b)| (1 << a) | (1 << b)).collect();
    let full = (1u32 << n) - 1;
    let mut count = 0;
    let mut s: u32 = (1 << k) - 1;
    while s < 1 << m {
        let mut cover = 0;
        let mut disjoint = true;
        let mut bits = s;
        while bits != 0 {
            let e = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            disjoint &= cover & ends[e] == 0;
            cover |= ends[e];
        }
        if disjoint && cover == full {
            count += 1;
        }
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    count
}

fn runner() -> TestRunner {
    TestRunner::new(Config { cases: 128, failure_persistence: None, ..Config::default() })
}

fn relabelled(graphs: &[CubicGraph]) -> impl Strategy<Value = (usize, Vec<usize>)> + '_ {
    (0..graphs.len()).prop_flat_map(|i| (Just(i), Just((0..graphs[i].order()).collect::<Vec<_>>()).prop_shuffle()))
}

fn property_suites() -> Outcome {
    let graphs = corpus();
    let mut parts = Vec::new();
    let mut ok = true;

    let disagreements = graphs
        .iter()
        .filter(|g| {
            let pms = enumerate_perfect_matchings(g);
            e2f_by_cycle_parity(g, &pms).is_none() != e2f_by_colouring(g, &pms).is_ok()
        })
        .count();
    let e2f_random = runner().run(&relabelled(&graphs), |(i, map)| {
        let h = graphs[i].relabel(&map).unwrap();
        let pms = enumerate_perfect_matchings(&h);
        prop_assert_eq!(e2f_by_cycle_parity(&h, &pms).is_none(), e2f_by_colouring(&h, &pms).is_ok());
        Ok(())
    });
    ok &= disagreements == 0 && e2f_random.is_ok();
    parts.push(format!("E2F routes disagree on {disagreements}/{} graphs, relabelled {:?}", graphs.len(), e2f_random.is_ok()));

    let small: Vec<&CubicGraph> = graphs.iter().filter(|g| g.order() <= 14).collect();
    let miscounts = small
        .iter()
        .filter(|g| {
            let n = enumerate_perfect_matchings(g).len() as u64;
            n != subset_count(g) || n != count_perfect_matchings(g)
        })
        .count();
    let small_owned: Vec<CubicGraph> = small.iter().map(|g| (*g).clone()).collect();
    let count_random = runner().run(&relabelled(&small_owned), |(i, map)| {
        let h = small_owned[i].relabel(&map).unwrap();
        prop_assert_eq!(enumerate_perfect_matchings(&h).len() as u64, subset_count(&h));
        Ok(())
    });
    ok &= miscounts == 0 && count_random.is_ok();
    parts.push(format!("PM counts wrong on {miscounts}/{} graphs, relabelled {:?}", small.len(), count_random.is_ok()));

    let canon = runner().run(&relabelled(&graphs), |(i, map)| {
        let g = &graphs[i];
        let h = g.relabel(&map).unwrap();
        prop_assert_eq!(canonical_form(g).unwrap().code, canonical_form(&h).unwrap().code);
        let iso = are_isomorphic(g, &h).unwrap().ok_or_else(|| TestCaseError::fail("no isomorphism found"))?;
        prop_assert!(g.edges().iter().all(|&(a, b)| h.has_edge(iso.0[a], iso.0[b])));
        Ok(())
    });
    ok &= canon.is_ok();
    parts.push(format!("canonical form relabelling {:?}", canon.is_ok()));

    let mut reports: Vec<CensusReport> = (2..=5).map(|h| census_cycle_permutation(2 * h, false).unwrap()).collect();
    reports.extend(CORPUS.iter().map(|&(n, _)| corpus_report(n)));
    let mut certificates = 0;
    let mut verify_failures = 0;
    for r in &reports {
        let back = CensusReport::from_json(&r.to_json()).unwrap();
        let v = verify_report(&back);
        certificates += v.certificates;
        verify_failures += v.failures.len();
    }
    let sample = reports.iter().find(|r| r.parameters.t == Some(8)).unwrap();
    let tamper = runner().run(&(0..sample.graphs.len(), 0..64usize, 0..24usize), |(gi, ci, e)| {
        let mut value = serde_json::to_value(sample).unwrap();
        let colourings = &mut value["graphs"][gi]["certificates"]["e2f"]["colourings"];
        let Some(list) = colourings.as_array_mut() else { return Ok(()) };
        let ci = ci % list.len();
        let c = list[ci][e].as_u64().unwrap();
        list[ci][e] = serde_json::json!(c % 3 + 1);
        let tampered: CensusReport = serde_json::from_value(value).unwrap();
        prop_assert!(!verify_report(&tampered).passed());
        Ok(())
    });
    ok &= verify_failures == 0 && tamper.is_ok();
    parts.push(format!(
        "{certificates} certificates in {} reports, {verify_failures} failures, tampering detected {:?}",
        reports.len(),
        tamper.is_ok()
    ));
    outcome(ok, parts.join("; "))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 8] = [
        ("1 cycle permutation census", table_two),
        ("2 graph6 corpus census", table_one),
        ("3 papillon theorem suite", theorem_suite_six),
        ("4 principal cut counts", principal_cut),
        ("5 constructive vs search", constructive_vs_search),
        ("6 negative witnesses", negative_witnesses),
        ("7 PH classification", ph_classification),
        ("8 property suites", property_suites),
    ];
    let mut failed = Vec::new();
    for (name, run) in criteria {
        let o = run();
        println!("{} {name}: {}", if o.passed { "PASS" } else { "FAIL" }, o.detail);
        if !o.passed {
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
