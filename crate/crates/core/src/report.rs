//! Deterministic plain-text rendering of analysis results. Output is stable
//! across runs and platforms (decimal only, canonical orderings, no
//! timestamps) so that reports can be checked against golden files.

use std::fmt::Write as _;

use crate::db::{ConsistencyReport, GroupDatabase};
use crate::graph::GKGraph;
use crate::orders::CoincidencePair;
use crate::search::{ExclusionRule, SearchReport, Verdict};

/// Limitation stated in every search report: the pipeline compares against
/// recorded simple groups only.
pub const NON_SIMPLE_CAVEAT: &str = "note: uniqueness is relative to the bundled simple-group \
records; a non-simple group with the same order and degree pattern is not ruled out by this \
search";

fn edge_list(g: &GKGraph) -> String {
    if g.edge_count() == 0 {
        return "(none)".into();
    }
    g.edges()
        .iter()
        .map(|(p, q)| format!("{p}-{q}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn prime_list(primes: &[u64]) -> String {
    if primes.is_empty() {
        return "(none)".into();
    }
    primes
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn rule_line(rule: &ExclusionRule) -> String {
    match rule {
        ExclusionRule::AdjacencyForcing { partner } => {
            format!("adjacency-forcing (partner {partner})")
        }
        ExclusionRule::SylowCounting { s, ord } => {
            format!("sylow-counting (s = {s}, ord = {ord})")
        }
    }
}

/// Summary block for a single prime graph: edges, degree pattern, component
/// structure, independence statistics, and the clique verdict.
pub fn render_graph(g: &GKGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "vertices = {}", prime_list(g.vertices()));
    let _ = writeln!(out, "edges = {}", edge_list(g));
    let _ = writeln!(out, "D = {}", g.degree_pattern());
    let comps = g.components();
    let _ = writeln!(out, "s = {}", comps.len());
    let comp_text = comps
        .iter()
        .map(|c| format!("{{{}}}", prime_list(c)))
        .collect::<Vec<_>>()
        .join(" ");
    let _ = writeln!(out, "components = {comp_text}");
    let _ = writeln!(out, "t = {}", g.independence_number());
    match g.independence_number_at(2) {
        Ok(t2) => {
            let _ = writeln!(out, "t(2) = {t2}");
        }
        Err(_) => {
            let _ = writeln!(out, "t(2) = n/a (2 is not a vertex)");
        }
    }
    let verdict = g.clique_components_check();
    if verdict.is_pass() {
        let _ = writeln!(out, "clique check = pass");
    } else {
        let f = &verdict.failures[0];
        let _ = writeln!(
            out,
            "clique check = FAIL (component {{{}}} misses edge {}-{})",
            prime_list(&f.component),
            f.missing.0,
            f.missing.1
        );
    }
    out
}

/// Stage-by-stage rendering of a pipeline run, one fact per line.
pub fn render_search(report: &SearchReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "problem");
    let _ = writeln!(out, "  order = {}", report.problem.order);
    let _ = writeln!(out, "  pattern = {}", report.problem.pattern);
    let _ = writeln!(out, "  primes = {}", prime_list(&report.problem.primes()));
    let _ = writeln!(out);

    let _ = writeln!(out, "admissible graphs");
    let _ = writeln!(out, "  count = {}", report.graphs.len());
    for (i, g) in report.graphs.iter().enumerate() {
        let _ = writeln!(out, "  graph {}: {}", i + 1, edge_list(g));
    }
    let _ = writeln!(out);

    let _ = writeln!(out, "hypothesis");
    for (i, st) in report.graph_stats.iter().enumerate() {
        let t2 = st
            .t2
            .map(|v| v.to_string())
            .unwrap_or_else(|| "n/a".into());
        let _ = writeln!(
            out,
            "  graph {}: t = {}, t(2) = {} -> {}",
            i + 1,
            st.t,
            t2,
            if st.hypothesis_holds() { "holds" } else { "fails" }
        );
    }
    let _ = writeln!(
        out,
        "  status = {}",
        if report.hypothesis_ok {
            "holds in every admissible graph"
        } else {
            "fails; almost-simple reduction not applicable"
        }
    );
    if report.verdict == Verdict::HypothesisFails {
        let _ = writeln!(out);
        let _ = writeln!(out, "verdict");
        let _ = writeln!(out, "  {}", report.verdict.tag());
        let _ = writeln!(out, "  {NON_SIMPLE_CAVEAT}");
        return out;
    }
    let _ = writeln!(out);

    let _ = writeln!(out, "excluded primes");
    for ex in &report.exclusions {
        let per_graph = ex
            .per_graph
            .iter()
            .enumerate()
            .map(|(i, rule)| format!("graph {}: {}", i + 1, rule_line(rule)))
            .collect::<Vec<_>>()
            .join("; ");
        let _ = writeln!(out, "  {}: {}", ex.prime, per_graph);
    }
    let _ = writeln!(
        out,
        "  solvable radical confined to primes: {}",
        prime_list(&report.radical_primes())
    );
    let _ = writeln!(out);

    let _ = writeln!(out, "candidates");
    let _ = writeln!(out, "  count = {}", report.candidates.len());
    for c in &report.candidates {
        let _ = writeln!(out, "  {}: order = {}, out = {}", c.name, c.order, c.out_order);
    }
    let _ = writeln!(out);

    let _ = writeln!(out, "eliminations");
    if report.eliminations.is_empty() {
        let _ = writeln!(out, "  (none)");
    }
    for e in &report.eliminations {
        let _ = writeln!(
            out,
            "  {}: frobenius-kernel, deficient prime {} with forced exponent {}; \
             witness {}: ord_{}({}) = {} does not divide {}",
            e.name, e.r, e.k, e.s, e.s, e.r, e.ord, e.k
        );
    }
    let _ = writeln!(out);

    let _ = writeln!(out, "survivors");
    if report.survivors.is_empty() {
        let _ = writeln!(out, "  (none)");
    }
    for s in &report.survivors {
        let _ = writeln!(out, "  {}", s.name);
    }
    let _ = writeln!(out);

    let _ = writeln!(out, "verdict");
    let _ = writeln!(out, "  {}", report.verdict.tag());
    let _ = writeln!(out, "  {NON_SIMPLE_CAVEAT}");
    out
}

/// One line per check, then a summary count line.
pub fn render_consistency(report: &ConsistencyReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "consistency");
    for c in &report.checks {
        let _ = writeln!(
            out,
            "  {} {}: {} ({})",
            c.subject,
            c.check,
            if c.pass { "pass" } else { "FAIL" },
            c.detail
        );
    }
    let failures = report.failures().len();
    let _ = writeln!(
        out,
        "  checks = {}, failures = {}",
        report.checks.len(),
        failures
    );
    out
}

/// Census rendering: characterization multiplicities from the census
/// records, then the equal-order pairs discovered in the supplied lists.
pub fn render_census(census: &GroupDatabase, coincidences: &[CoincidencePair]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "census");
    for r in census.records() {
        if let Some(h) = r.hod {
            let _ = writeln!(
                out,
                "  h_OD({}) = {}{}",
                r.name,
                h,
                match &r.partner {
                    Some(p) => format!(" [partner: {p}]"),
                    None => String::new(),
                }
            );
        }
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "coincidences");
    if coincidences.is_empty() {
        let _ = writeln!(out, "  (none)");
    }
    for pair in coincidences {
        let _ = writeln!(
            out,
            "  |{}| = |{}| = {}",
            pair.first, pair.second, pair.order
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::FactoredInt;
    use crate::db;
    use crate::graph::{build_gk, DegreePattern};
    use crate::search::{od_verify, SearchProblem};
    use crate::spectrum::Spectrum;

    #[test]
    fn graph_block_contents() {
        let order = FactoredInt::parse("2^11 3^15 5 7 11^2 13^2").unwrap();
        let mu = Spectrum::new([36, 78, 80, 104, 120, 121, 182]).unwrap();
        let g = build_gk(&order, &mu).unwrap();
        let text = render_graph(&g);
        assert!(text.contains("D = (4, 3, 2, 2, 0, 3)\n"));
        assert!(text.contains("s = 2\n"));
        assert!(text.contains("t = 3\n"));
        assert!(text.contains("t(2) = 2\n"));
        assert!(text.contains("clique check = pass\n"));
    }

    #[test]
    fn search_report_contents() {
        let db = db::bundled_search_db();
        let problem = SearchProblem::new(
            FactoredInt::parse("2^7 3^4 5^6 7 13").unwrap(),
            DegreePattern::new(vec![3, 3, 2, 1, 1]).unwrap(),
        )
        .unwrap();
        let report = od_verify(&problem, &db).unwrap();
        let text = render_search(&report);
        assert!(text.contains("ord_13(5) = 4 does not divide 6"));
        assert!(text.contains("unique-candidate-equal-order"));
        assert!(text.contains(NON_SIMPLE_CAVEAT));
        // identical inputs, identical text
        assert_eq!(text, render_search(&od_verify(&problem, &db).unwrap()));
    }

    #[test]
    fn census_rendering() {
        let census = db::bundled_census_db();
        let pairs = crate::orders::coincidence_report(&db::bundled_table2_db());
        let text = render_census(&census, &pairs);
        assert!(text.contains("h_OD(A10) = 2 [partner: Z3 x J2]\n"));
        assert!(text.contains("|A8| = |L3(2^2)| = 2^6 3^2 5 7\n"));
    }
}
