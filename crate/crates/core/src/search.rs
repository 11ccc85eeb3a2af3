//! The characterization pipeline: given a target order and degree pattern,
//! enumerate the admissible prime graphs, bound the primes that can divide
//! the solvable radical, filter the simple-group database down to viable
//! socle candidates, and eliminate candidates whose deficient prime parts
//! would force an impossible Frobenius configuration.
//!
//! Every deduction the pipeline makes carries a machine-checkable arithmetic
//! witness; nothing is concluded "by inspection".

use thiserror::Error;

use crate::arith::{self, ArithError, FactoredInt};
use crate::db::GroupDatabase;
use crate::graph::{self, DegreePattern, GKGraph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("pattern has {pattern} entries but the order has {primes} prime divisors")]
    PatternArity { pattern: usize, primes: usize },
    #[error("degree sum {0} is odd; no graph realizes it")]
    OddDegreeSum(u32),
    #[error("{0} does not have multiplicity one in the order")]
    NotMultiplicityOne(u64),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// A target group order together with a claimed degree pattern over its
/// prime divisors (listed by ascending prime).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchProblem {
    pub order: FactoredInt,
    pub pattern: DegreePattern,
}

impl SearchProblem {
    pub fn new(order: FactoredInt, pattern: DegreePattern) -> Result<Self, SearchError> {
        if pattern.len() != order.num_primes() {
            return Err(SearchError::PatternArity {
                pattern: pattern.len(),
                primes: order.num_primes(),
            });
        }
        let sum = pattern.degree_sum();
        if sum % 2 != 0 {
            return Err(SearchError::OddDegreeSum(sum));
        }
        Ok(Self { order, pattern })
    }

    pub fn primes(&self) -> Vec<u64> {
        self.order.support()
    }
}

/// The primes of multiplicity one in the order.
pub fn delta_set(order: &FactoredInt) -> Vec<u64> {
    order
        .iter()
        .filter(|&(_, e)| e == 1)
        .map(|(p, _)| p)
        .collect()
}

/// The multiplicity-one primes arithmetically independent of p: those q with
/// q not dividing p - 1 and p not dividing q - 1. In a solvable group whose
/// order has both p and q to the first power, such a pair forces an element
/// of order p*q, hence the edge p-q.
pub fn delta_of(order: &FactoredInt, p: u64) -> Result<Vec<u64>, SearchError> {
    if order.exponent_of(p) != 1 {
        return Err(SearchError::NotMultiplicityOne(p));
    }
    Ok(delta_set(order)
        .into_iter()
        .filter(|&q| q != p && (p - 1) % q != 0 && (q - 1) % p != 0)
        .collect())
}

/// If the order is squarefree and every pair of its primes is arithmetically
/// independent, every group of that order is cyclic and the degree pattern
/// is forced to be complete: (s-1, ..., s-1).
pub fn cyclicity_deduction(order: &FactoredInt) -> Option<DegreePattern> {
    let primes = order.support();
    let s = primes.len();
    if s == 0 || delta_set(order).len() != s {
        return None;
    }
    for &p in &primes {
        let dep = delta_of(order, p).expect("all primes have multiplicity one");
        if dep.len() != s - 1 {
            return None;
        }
    }
    Some(DegreePattern::new(vec![(s - 1) as u32; s]).expect("degrees s-1 on s vertices are valid"))
}

/// True iff Sylow counting forces both Sylow subgroups normal in every group
/// of order r^i * s for 1 <= i <= k: the number of Sylow r-subgroups is 1
/// because s is not 1 mod r, and the number of Sylow s-subgroups is 1 because
/// no r^i with i <= k is 1 mod s. Both normal gives a nilpotent group, hence
/// an element of order r*s.
pub fn sylow_forced_adjacency(r: u64, k: u32, s: u64) -> Result<bool, SearchError> {
    Ok(s % r != 1 && arith::mult_order(r, s)? > k as u64)
}

/// Arithmetic witness that no Frobenius group with kernel of order r^k and
/// complement of order s exists: the complement of a Frobenius group acts
/// fixed-point-freely, so s must divide r^k - 1, i.e. the order of r modulo
/// s must divide k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusWitness {
    pub r: u64,
    pub k: u32,
    pub s: u64,
    /// Multiplicative order of r modulo s; the contradiction is ord not
    /// dividing k.
    pub ord: u64,
    /// r^k * s when it fits in 128 bits.
    pub value: Option<u128>,
}

/// Returns a contradiction witness when the divisibility s | r^k - 1 fails,
/// none when it holds (no contradiction derivable).
pub fn frobenius_elimination(r: u64, k: u32, s: u64) -> Result<Option<FrobeniusWitness>, SearchError> {
    let ord = arith::mult_order(r, s)?;
    if k as u64 % ord == 0 {
        return Ok(None);
    }
    let value = (0..k)
        .try_fold(s as u128, |acc, _| acc.checked_mul(r as u128));
    Ok(Some(FrobeniusWitness { r, k, s, ord, value }))
}

/// How a prime was ruled out of the solvable radical in one admissible graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExclusionRule {
    /// Multiplicity-one arithmetic would force an edge the graph lacks.
    AdjacencyForcing { partner: u64 },
    /// Sylow counting in a subgroup of order r^i * s forces an element of
    /// order r*s, and the edge is absent.
    SylowCounting { s: u64, ord: u64 },
}

/// A prime excluded from the solvable radical, with one justification per
/// admissible graph (parallel to the graph list).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeExclusion {
    pub prime: u64,
    pub per_graph: Vec<ExclusionRule>,
}

fn exclusion_in_graph(
    order: &FactoredInt,
    g: &GKGraph,
    r: u64,
) -> Result<Option<ExclusionRule>, SearchError> {
    // Route one: r has multiplicity one and some arithmetically independent
    // multiplicity-one prime is non-adjacent to it.
    if order.exponent_of(r) == 1 {
        for q in delta_of(order, r)? {
            if !g.has_edge(r, q) {
                return Ok(Some(ExclusionRule::AdjacencyForcing { partner: q }));
            }
        }
    }
    // Route two: a Frattini argument puts an element of order s in the
    // normalizer of a Sylow r-subgroup of the radical; if Sylow counting in
    // the resulting subgroup of order r^i * s forces an element of order
    // r*s, the absent edge is a contradiction.
    let k = order.exponent_of(r);
    for s in order.support() {
        if s == r || g.has_edge(r, s) {
            continue;
        }
        if sylow_forced_adjacency(r, k, s)? {
            let ord = arith::mult_order(r, s)?;
            return Ok(Some(ExclusionRule::SylowCounting { s, ord }));
        }
    }
    Ok(None)
}

/// Primes that cannot divide the solvable radical of any group matching the
/// problem: a prime is excluded only when a justification exists in every
/// admissible graph (the graphs are the exhaustive case split, so the
/// conclusions are intersected across them).
pub fn exclude_solvable_primes(
    problem: &SearchProblem,
    graphs: &[GKGraph],
) -> Result<Vec<PrimeExclusion>, SearchError> {
    let mut out = Vec::new();
    if graphs.is_empty() {
        return Ok(out);
    }
    'primes: for r in problem.primes() {
        let mut per_graph = Vec::with_capacity(graphs.len());
        for g in graphs {
            match exclusion_in_graph(&problem.order, g, r)? {
                Some(rule) => per_graph.push(rule),
                None => continue 'primes,
            }
        }
        out.push(PrimeExclusion { prime: r, per_graph });
    }
    Ok(out)
}

/// A database record that survives the candidate filter, with the reasons.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub name: String,
    pub order: FactoredInt,
    pub out_order: u64,
    pub trace: Vec<String>,
}

/// Simple records that could serve as the socle of an almost simple quotient:
/// same largest prime as the target order, order dividing the target, and
/// for every excluded prime the full prime part of the target carried by
/// |S| * |Out(S)| (the quotient by the radical embeds in Aut(S)).
pub fn candidate_filter(
    db: &GroupDatabase,
    problem: &SearchProblem,
    excluded: &[PrimeExclusion],
) -> Vec<Candidate> {
    let Some(p_max) = problem.order.max_prime() else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for record in db.filter_sp(p_max) {
        let mut trace = vec![format!("largest prime {p_max} matches")];
        if !record.order.divides(&problem.order) {
            continue;
        }
        trace.push(format!("order {} divides the target", record.order));
        let bound = record.automorphism_bound();
        let mut covered = true;
        for ex in excluded {
            let need = problem.order.exponent_of(ex.prime);
            let have = bound.exponent_of(ex.prime);
            if have < need {
                covered = false;
                break;
            }
            trace.push(format!(
                "carries {}^{need} of the excluded prime {} (|S|*|Out| exponent {have})",
                ex.prime, ex.prime
            ));
        }
        if !covered {
            continue;
        }
        out.push(Candidate {
            name: record.name.clone(),
            order: record.order.clone(),
            out_order: record.out_order,
            trace,
        });
    }
    out.sort_by(|a, b| a.name.cmp(&b.name));
    out
}

/// A candidate ruled out: prime r is deficient in |S| * |Out(S)|, so the
/// radical would contain the full r^k part, and the Frobenius divisibility
/// fails for the witness prime s.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Elimination {
    pub name: String,
    pub r: u64,
    /// The full forced exponent of r in the radical.
    pub k: u32,
    pub s: u64,
    pub ord: u64,
}

/// Runs the deficient-prime Frobenius argument against every candidate.
///
/// For a deficient prime r the radical's r-exponent j is only known to lie
/// in an interval (the quotient may absorb up to the |S| and |Out(S)|
/// exponents of r), so the contradiction must hold for every feasible j.
/// The witness prime s must itself be excluded from the radical: only then
/// does the Frattini argument place an order-s element over the kernel.
pub fn eliminate_candidates(
    candidates: &[Candidate],
    problem: &SearchProblem,
    graphs: &[GKGraph],
    excluded: &[PrimeExclusion],
) -> Result<(Vec<Candidate>, Vec<Elimination>), SearchError> {
    let excluded_primes: Vec<u64> = excluded.iter().map(|e| e.prime).collect();
    let mut survivors = Vec::new();
    let mut eliminations = Vec::new();
    'candidates: for cand in candidates {
        let bound = cand
            .order
            .mul(&FactoredInt::factor(cand.out_order as u128));
        for (r, e) in problem.order.iter() {
            let k_hi = e.saturating_sub(cand.order.exponent_of(r));
            let k_lo = e.saturating_sub(bound.exponent_of(r));
            if k_lo == 0 {
                continue; // not deficient: the quotient can carry the r-part
            }
            for s in cand.order.support() {
                if s == r || !excluded_primes.contains(&s) || s % r == 1 {
                    continue;
                }
                if graphs.iter().any(|g| g.has_edge(r, s)) {
                    continue;
                }
                let ord = arith::mult_order(r, s)?;
                let all_contradict =
                    (k_lo..=k_hi).all(|j| j as u64 % ord != 0);
                if all_contradict {
                    eliminations.push(Elimination {
                        name: cand.name.clone(),
                        r,
                        k: k_hi,
                        s,
                        ord,
                    });
                    continue 'candidates;
                }
            }
        }
        survivors.push(cand.clone());
    }
    Ok((survivors, eliminations))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    UniqueCandidateEqualOrder,
    CandidateSet,
    NoCandidate,
    HypothesisFails,
}

impl Verdict {
    pub fn tag(&self) -> &'static str {
        match self {
            Verdict::UniqueCandidateEqualOrder => "unique-candidate-equal-order",
            Verdict::CandidateSet => "candidate-set",
            Verdict::NoCandidate => "no-candidate",
            Verdict::HypothesisFails => "hypothesis-fails",
        }
    }
}

/// Independence statistics of one admissible graph: the independence number
/// and the largest independent set through the vertex 2 (when present).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphStats {
    pub t: u32,
    pub t2: Option<u32>,
}

impl GraphStats {
    /// The almost-simple reduction applies when t >= 3 and t(2) >= 2.
    pub fn hypothesis_holds(&self) -> bool {
        self.t >= 3 && self.t2.is_some_and(|t2| t2 >= 2)
    }
}

/// Full outcome of the pipeline, sufficient to re-verify every step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub problem: SearchProblem,
    pub graphs: Vec<GKGraph>,
    pub graph_stats: Vec<GraphStats>,
    pub hypothesis_ok: bool,
    pub exclusions: Vec<PrimeExclusion>,
    pub candidates: Vec<Candidate>,
    pub eliminations: Vec<Elimination>,
    pub survivors: Vec<Candidate>,
    pub verdict: Verdict,
}

impl SearchReport {
    /// The primes not excluded: the solvable radical is confined to these.
    pub fn radical_primes(&self) -> Vec<u64> {
        let excluded: Vec<u64> = self.exclusions.iter().map(|e| e.prime).collect();
        self.problem
            .primes()
            .into_iter()
            .filter(|p| !excluded.contains(p))
            .collect()
    }
}

/// Runs the whole pipeline. A failed hypothesis is a verdict, not an error;
/// errors are reserved for malformed inputs and resource limits.
pub fn od_verify(problem: &SearchProblem, db: &GroupDatabase) -> Result<SearchReport, SearchError> {
    let primes = problem.primes();
    let graphs = graph::enumerate_graphs(&primes, &problem.pattern)?;
    let graph_stats: Vec<GraphStats> = graphs
        .iter()
        .map(|g| GraphStats {
            t: g.independence_number(),
            t2: g.independence_number_at(2).ok(),
        })
        .collect();
    let hypothesis_ok =
        !graphs.is_empty() && graph_stats.iter().all(|s| s.hypothesis_holds());
    if !hypothesis_ok {
        return Ok(SearchReport {
            problem: problem.clone(),
            graphs,
            graph_stats,
            hypothesis_ok,
            exclusions: Vec::new(),
            candidates: Vec::new(),
            eliminations: Vec::new(),
            survivors: Vec::new(),
            verdict: Verdict::HypothesisFails,
        });
    }
    let exclusions = exclude_solvable_primes(problem, &graphs)?;
    let candidates = candidate_filter(db, problem, &exclusions);
    let (survivors, eliminations) =
        eliminate_candidates(&candidates, problem, &graphs, &exclusions)?;
    let verdict = match survivors.as_slice() {
        [] if candidates.is_empty() => Verdict::NoCandidate,
        [] => Verdict::NoCandidate,
        [single] if single.order == problem.order => Verdict::UniqueCandidateEqualOrder,
        _ => Verdict::CandidateSet,
    };
    Ok(SearchReport {
        problem: problem.clone(),
        graphs,
        graph_stats,
        hypothesis_ok,
        exclusions,
        candidates,
        eliminations,
        survivors,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::db;

    fn l6_3_problem() -> SearchProblem {
        SearchProblem::new(
            FactoredInt::parse("2^11 3^15 5 7 11^2 13^2").unwrap(),
            DegreePattern::new(vec![4, 3, 2, 2, 0, 3]).unwrap(),
        )
        .unwrap()
    }

    fn u4_5_problem() -> SearchProblem {
        SearchProblem::new(
            FactoredInt::parse("2^7 3^4 5^6 7 13").unwrap(),
            DegreePattern::new(vec![3, 3, 2, 1, 1]).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn problem_validation() {
        assert!(matches!(
            SearchProblem::new(
                FactoredInt::parse("2 3 5").unwrap(),
                DegreePattern::new(vec![1, 1]).unwrap(),
            ),
            Err(SearchError::PatternArity { .. })
        ));
        assert!(matches!(
            SearchProblem::new(
                FactoredInt::parse("2 3").unwrap(),
                DegreePattern::new(vec![1, 0]).unwrap(),
            ),
            Err(SearchError::OddDegreeSum(1))
        ));
    }

    #[test]
    fn delta_sets() {
        let l6 = FactoredInt::parse("2^11 3^15 5 7 11^2 13^2").unwrap();
        assert_eq!(delta_set(&l6), vec![5, 7]);
        assert_eq!(delta_of(&l6, 5).unwrap(), vec![7]);
        assert_eq!(delta_of(&l6, 7).unwrap(), vec![5]);
        assert!(matches!(
            delta_of(&l6, 11),
            Err(SearchError::NotMultiplicityOne(11))
        ));

        let u4 = FactoredInt::parse("2^7 3^4 5^6 7 13").unwrap();
        assert_eq!(delta_set(&u4), vec![7, 13]);
        assert_eq!(delta_of(&u4, 7).unwrap(), vec![13]);
        assert_eq!(delta_of(&u4, 13).unwrap(), vec![7]);

        assert!(delta_set(&FactoredInt::parse("7^2").unwrap()).is_empty());
    }

    #[test]
    fn cyclicity() {
        assert_eq!(
            cyclicity_deduction(&FactoredInt::factor(35)),
            Some(DegreePattern::new(vec![1, 1]).unwrap())
        );
        assert_eq!(
            cyclicity_deduction(&FactoredInt::factor(15)),
            Some(DegreePattern::new(vec![1, 1]).unwrap())
        );
        // 2 divides 3 - 1: the symmetric group of degree three exists
        assert_eq!(cyclicity_deduction(&FactoredInt::factor(6)), None);
        assert_eq!(cyclicity_deduction(&FactoredInt::factor(49)), None);
        assert_eq!(
            cyclicity_deduction(&FactoredInt::factor(7)),
            Some(DegreePattern::new(vec![0]).unwrap())
        );
    }

    #[test]
    fn sylow_counting_rule() {
        assert!(sylow_forced_adjacency(11, 2, 7).unwrap());
        // order of 13 mod 7 is 2 <= 2: not forced
        assert!(!sylow_forced_adjacency(13, 2, 7).unwrap());
        assert!(sylow_forced_adjacency(13, 2, 5).unwrap());
        assert!(sylow_forced_adjacency(13, 2, 11).unwrap());
        // order of 5 mod 2 is 1: never forced
        assert!(!sylow_forced_adjacency(5, 1, 2).unwrap());
    }

    #[test]
    fn frobenius_rule() {
        let w = frobenius_elimination(5, 6, 13).unwrap().unwrap();
        assert_eq!(w.ord, 4);
        assert_eq!(w.value, Some(13 * 5u128.pow(6)));
        // 4 divides 4: 13 divides 5^4 - 1 = 624
        assert_eq!(frobenius_elimination(5, 4, 13).unwrap(), None);
        let w = frobenius_elimination(2, 1, 3).unwrap().unwrap();
        assert_eq!(w.ord, 2);
    }

    #[test]
    fn exclusions_for_both_problems() {
        let problem = l6_3_problem();
        let graphs = graph::enumerate_graphs(&problem.primes(), &problem.pattern).unwrap();
        assert_eq!(graphs.len(), 2);
        let ex = exclude_solvable_primes(&problem, &graphs).unwrap();
        let primes: Vec<u64> = ex.iter().map(|e| e.prime).collect();
        assert_eq!(primes, vec![5, 7, 11, 13]);
        for e in &ex {
            assert_eq!(e.per_graph.len(), graphs.len());
        }
        let five = &ex[0];
        assert!(matches!(
            five.per_graph[0],
            ExclusionRule::AdjacencyForcing { partner: 7 }
        ));
        let eleven = &ex[2];
        for rule in &eleven.per_graph {
            assert_eq!(*rule, ExclusionRule::SylowCounting { s: 7, ord: 3 });
        }
        // 13 needs different witnesses in the two admissible graphs
        let thirteen = &ex[3];
        let witnesses: Vec<&ExclusionRule> = thirteen.per_graph.iter().collect();
        assert!(witnesses
            .iter()
            .all(|r| matches!(r, ExclusionRule::SylowCounting { .. })));

        let problem = u4_5_problem();
        let graphs = graph::enumerate_graphs(&problem.primes(), &problem.pattern).unwrap();
        let ex = exclude_solvable_primes(&problem, &graphs).unwrap();
        let primes: Vec<u64> = ex.iter().map(|e| e.prime).collect();
        assert_eq!(primes, vec![7, 13]);
    }

    #[test]
    fn exclusions_empty_cases() {
        let problem = SearchProblem::new(
            FactoredInt::parse("2 3").unwrap(),
            DegreePattern::new(vec![1, 1]).unwrap(),
        )
        .unwrap();
        // complete admissible graph: nothing is excluded
        let graphs = graph::enumerate_graphs(&[2, 3], &problem.pattern).unwrap();
        assert!(exclude_solvable_primes(&problem, &graphs)
            .unwrap()
            .is_empty());
        // no graphs at all: nothing is excluded either
        assert!(exclude_solvable_primes(&problem, &[]).unwrap().is_empty());
    }

    #[test]
    fn exclusions_shrink_with_more_graphs() {
        // intersecting over more case-split graphs can only shrink the set
        let problem = l6_3_problem();
        let graphs = graph::enumerate_graphs(&problem.primes(), &problem.pattern).unwrap();
        let with_all: Vec<u64> = exclude_solvable_primes(&problem, &graphs)
            .unwrap()
            .iter()
            .map(|e| e.prime)
            .collect();
        let with_one: Vec<u64> = exclude_solvable_primes(&problem, &graphs[..1])
            .unwrap()
            .iter()
            .map(|e| e.prime)
            .collect();
        for p in &with_all {
            assert!(with_one.contains(p));
        }
    }

    #[test]
    fn candidate_stage() {
        let db = db::bundled_search_db();
        let problem = l6_3_problem();
        let graphs = graph::enumerate_graphs(&problem.primes(), &problem.pattern).unwrap();
        let ex = exclude_solvable_primes(&problem, &graphs).unwrap();
        let cands = candidate_filter(&db, &problem, &ex);
        assert_eq!(
            cands.iter().map(|c| c.name.as_str()).collect::<Vec<_>>(),
            vec!["L6(3)"]
        );

        let problem = u4_5_problem();
        let graphs = graph::enumerate_graphs(&problem.primes(), &problem.pattern).unwrap();
        let ex = exclude_solvable_primes(&problem, &graphs).unwrap();
        let cands = candidate_filter(&db, &problem, &ex);
        assert_eq!(
            cands.iter().map(|c| c.name.as_str()).collect::<Vec<_>>(),
            vec!["L2(13)", "L2(2^6)", "L2(3^3)", "Sz(2^3)", "U4(5)"]
        );

        assert!(candidate_filter(&GroupDatabase::new(), &problem, &ex).is_empty());
    }

    #[test]
    fn soundness_guard() {
        // the filter never drops a record whose order equals the problem
        // order and whose spectrum-derived pattern equals the problem pattern
        let db = db::bundled_search_db();
        for name in ["L6(3)", "U4(5)"] {
            let record = db.get(name).unwrap();
            let mu = record.mu.as_ref().unwrap();
            let g = graph::build_gk(&record.order, mu).unwrap();
            let problem =
                SearchProblem::new(record.order.clone(), g.degree_pattern()).unwrap();
            let graphs =
                graph::enumerate_graphs(&problem.primes(), &problem.pattern).unwrap();
            let ex = exclude_solvable_primes(&problem, &graphs).unwrap();
            let cands = candidate_filter(&db, &problem, &ex);
            assert!(cands.iter().any(|c| c.name == name));
        }
    }

    #[test]
    fn elimination_stage() {
        let db = db::bundled_search_db();
        let problem = u4_5_problem();
        let graphs = graph::enumerate_graphs(&problem.primes(), &problem.pattern).unwrap();
        let ex = exclude_solvable_primes(&problem, &graphs).unwrap();
        let cands = candidate_filter(&db, &problem, &ex);
        let (survivors, elims) =
            eliminate_candidates(&cands, &problem, &graphs, &ex).unwrap();
        assert_eq!(
            survivors.iter().map(|c| c.name.as_str()).collect::<Vec<_>>(),
            vec!["U4(5)"]
        );
        let l2_27 = elims.iter().find(|e| e.name == "L2(3^3)").unwrap();
        assert_eq!((l2_27.r, l2_27.k, l2_27.s, l2_27.ord), (5, 6, 13, 4));
        // every elimination's witness re-verifies by brute-force powering
        for e in &elims {
            let mut pow = 1u64;
            let mut ord = 0u64;
            loop {
                pow = pow * (e.r % e.s) % e.s;
                ord += 1;
                if pow == 1 {
                    break;
                }
            }
            assert_eq!(ord, e.ord, "witness for {}", e.name);
            assert_ne!(e.k as u64 % ord, 0);
            assert!(cands.iter().any(|c| c.name == e.name));
        }
    }

    #[test]
    fn full_pipeline_verdicts() {
        let db = db::bundled_search_db();

        let report = od_verify(&l6_3_problem(), &db).unwrap();
        assert!(report.hypothesis_ok);
        assert_eq!(report.verdict, Verdict::UniqueCandidateEqualOrder);
        assert_eq!(report.survivors[0].name, "L6(3)");
        assert_eq!(report.radical_primes(), vec![2, 3]);

        let report = od_verify(&u4_5_problem(), &db).unwrap();
        assert_eq!(report.verdict, Verdict::UniqueCandidateEqualOrder);
        assert_eq!(report.survivors[0].name, "U4(5)");
        assert!(report.eliminations.iter().any(|e| e.name == "L2(3^3)"));

        // the A10 problem has a unique admissible graph with t = 2: the
        // almost-simple reduction does not apply
        let a10 = SearchProblem::new(
            FactoredInt::parse("2^7 3^4 5^2 7").unwrap(),
            DegreePattern::new(vec![2, 3, 2, 1]).unwrap(),
        )
        .unwrap();
        let report = od_verify(&a10, &db).unwrap();
        assert_eq!(report.graphs.len(), 1);
        assert_eq!(report.graph_stats[0].t, 2);
        assert_eq!(report.verdict, Verdict::HypothesisFails);
    }

    #[test]
    fn determinism() {
        let db = db::bundled_search_db();
        let a = od_verify(&l6_3_problem(), &db).unwrap();
        let b = od_verify(&l6_3_problem(), &db).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn true_graph_always_admissible() {
        let db = db::bundled_search_db();
        for name in ["L6(3)", "U4(5)"] {
            let record = db.get(name).unwrap();
            let truth =
                graph::build_gk(&record.order, record.mu.as_ref().unwrap()).unwrap();
            let problem =
                SearchProblem::new(record.order.clone(), truth.degree_pattern()).unwrap();
            let report = od_verify(&problem, &db).unwrap();
            assert!(report.graphs.iter().any(|g| graph::graphs_equal(g, &truth)));
        }
    }
}
