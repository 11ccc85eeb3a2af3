//! Prime graphs on small labeled vertex sets: construction from a spectrum,
//! degree patterns, connected components, independence numbers, the clique
//! validator for components away from 2, and exhaustive enumeration of all
//! labeled graphs realizing a degree sequence.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::arith::{self, FactoredInt};
use crate::spectrum::Spectrum;

/// Adjacency rows are 16-bit masks; every group in scope has at most 16
/// prime divisors.
pub const MAX_VERTICES: usize = 16;

/// Hard cap on enumeration output; problems past this size are refused.
pub const MAX_ENUMERATED_GRAPHS: usize = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("at most {MAX_VERTICES} vertices are supported, got {0}")]
    TooManyVertices(usize),
    #[error("vertex {0} is not prime")]
    VertexNotPrime(u64),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(u64),
    #[error("unknown vertex {0}")]
    UnknownVertex(u64),
    #[error("self-loop on vertex {0}")]
    SelfLoop(u64),
    #[error("prime {0} divides the order but no element order")]
    PrimeMissingFromSpectrum(u64),
    #[error("prime {0} appears in the spectrum but not in the order")]
    PrimeMissingFromOrder(u64),
    #[error("pattern has {pattern} entries but there are {vertices} vertices")]
    PatternArity { pattern: usize, vertices: usize },
    #[error("degree {degree} impossible on {vertices} vertices")]
    DegreeOutOfRange { degree: u32, vertices: usize },
    #[error("empty degree pattern")]
    EmptyPattern,
    #[error("more than {MAX_ENUMERATED_GRAPHS} graphs realize this pattern")]
    EnumerationTooLarge,
    #[error("a component away from 2 is not a clique; decomposition inapplicable")]
    NotCliqueDecomposable,
}

/// Vertex degrees listed by ascending prime.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreePattern {
    degrees: Vec<u32>,
}

impl DegreePattern {
    pub fn new(degrees: Vec<u32>) -> Result<Self, GraphError> {
        if degrees.is_empty() {
            return Err(GraphError::EmptyPattern);
        }
        let k = degrees.len();
        for &d in &degrees {
            if d as usize >= k {
                return Err(GraphError::DegreeOutOfRange {
                    degree: d,
                    vertices: k,
                });
            }
        }
        Ok(Self { degrees })
    }

    /// Parses a comma-separated list such as `4,3,2,2,0,3`.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut degrees = Vec::new();
        for part in text.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let d: u32 = part.parse().map_err(|_| GraphError::DegreeOutOfRange {
                degree: u32::MAX,
                vertices: 0,
            })?;
            degrees.push(d);
        }
        Self::new(degrees)
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn degree_sum(&self) -> u32 {
        self.degrees.iter().sum()
    }
}

impl fmt::Display for DegreePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self
            .degrees
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        write!(f, "({body})")
    }
}

/// An edge of the prime graph together with the maximal element order that
/// witnesses it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeWitness {
    pub p: u64,
    pub q: u64,
    pub element_order: u64,
}

/// A simple labeled graph on an ascending set of primes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GKGraph {
    vertices: Vec<u64>,
    adj: Vec<u16>,
}

impl GKGraph {
    /// Builds a graph from primes and edges given as prime pairs.
    pub fn new(vertices: Vec<u64>, edges: &[(u64, u64)]) -> Result<Self, GraphError> {
        if vertices.len() > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(vertices.len()));
        }
        let mut sorted = vertices;
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateVertex(w[0]));
            }
        }
        for &v in &sorted {
            if !arith::is_prime(v) {
                return Err(GraphError::VertexNotPrime(v));
            }
        }
        let mut g = Self {
            adj: vec![0; sorted.len()],
            vertices: sorted,
        };
        for &(p, q) in edges {
            g.add_edge(p, q)?;
        }
        Ok(g)
    }

    fn index_of(&self, p: u64) -> Result<usize, GraphError> {
        self.vertices
            .binary_search(&p)
            .map_err(|_| GraphError::UnknownVertex(p))
    }

    fn add_edge(&mut self, p: u64, q: u64) -> Result<(), GraphError> {
        if p == q {
            return Err(GraphError::SelfLoop(p));
        }
        let i = self.index_of(p)?;
        let j = self.index_of(q)?;
        self.adj[i] |= 1 << j;
        self.adj[j] |= 1 << i;
        Ok(())
    }

    pub fn vertices(&self) -> &[u64] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn has_edge(&self, p: u64, q: u64) -> bool {
        match (self.index_of(p), self.index_of(q)) {
            (Ok(i), Ok(j)) => self.adj[i] & (1 << j) != 0,
            _ => false,
        }
    }

    /// Edges as (smaller prime, larger prime) pairs, in canonical order:
    /// lexicographic by vertex positions.
    pub fn edges(&self) -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        for i in 0..self.vertices.len() {
            for j in i + 1..self.vertices.len() {
                if self.adj[i] & (1 << j) != 0 {
                    out.push((self.vertices[i], self.vertices[j]));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Per-vertex degrees in ascending-prime order.
    pub fn degree_pattern(&self) -> DegreePattern {
        DegreePattern::new(self.adj.iter().map(|r| r.count_ones()).collect())
            .expect("degrees of a simple graph are always in range")
    }

    /// Connected components as ascending prime sets. The component containing
    /// 2 is listed first when 2 is a vertex; the rest follow by smallest
    /// member.
    pub fn components(&self) -> Vec<Vec<u64>> {
        let n = self.vertices.len();
        let mut seen = 0u16;
        let mut comps: Vec<Vec<u64>> = Vec::new();
        for start in 0..n {
            if seen & (1 << start) != 0 {
                continue;
            }
            // closure of {start} under adjacency
            let mut comp: u16 = 1 << start;
            loop {
                let mut next = comp;
                for i in 0..n {
                    if comp & (1 << i) != 0 {
                        next |= self.adj[i];
                    }
                }
                if next == comp {
                    break;
                }
                comp = next;
            }
            seen |= comp;
            comps.push(
                (0..n)
                    .filter(|i| comp & (1 << i) != 0)
                    .map(|i| self.vertices[i])
                    .collect(),
            );
        }
        comps.sort_by_key(|c| c[0]);
        if let Some(pos) = comps.iter().position(|c| c.contains(&2)) {
            let two = comps.remove(pos);
            comps.insert(0, two);
        }
        comps
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    fn mis_size(&self, mask: u16) -> u32 {
        if mask == 0 {
            return 0;
        }
        let i = mask.trailing_zeros() as usize;
        let without = self.mis_size(mask & !(1 << i));
        let with = 1 + self.mis_size(mask & !(1 << i) & !self.adj[i]);
        without.max(with)
    }

    /// Exact independence number, by exhaustive branching (at most 16
    /// vertices).
    pub fn independence_number(&self) -> u32 {
        let full = if self.vertices.len() == 16 {
            u16::MAX
        } else {
            (1u16 << self.vertices.len()) - 1
        };
        self.mis_size(full)
    }

    /// Largest independent set containing the vertex r.
    pub fn independence_number_at(&self, r: u64) -> Result<u32, GraphError> {
        let i = self.index_of(r)?;
        let full = if self.vertices.len() == 16 {
            u16::MAX
        } else {
            (1u16 << self.vertices.len()) - 1
        };
        Ok(1 + self.mis_size(full & !(1 << i) & !self.adj[i]))
    }

    /// Checks that every connected component not containing 2 induces a
    /// complete subgraph.
    pub fn clique_components_check(&self) -> CliqueVerdict {
        let mut failures = Vec::new();
        for comp in self.components() {
            if comp.contains(&2) {
                continue;
            }
            'pairs: for (a, &p) in comp.iter().enumerate() {
                for &q in &comp[a + 1..] {
                    if !self.has_edge(p, q) {
                        failures.push(CliqueFailure {
                            component: comp.clone(),
                            missing: (p, q),
                        });
                        break 'pairs;
                    }
                }
            }
        }
        CliqueVerdict { failures }
    }

    /// Splits the graph into the induced subgraph on the component of 2 and
    /// the clique orders of the remaining components. Requires the clique
    /// check to pass.
    pub fn decompose(&self) -> Result<Decomposition, GraphError> {
        if !self.clique_components_check().is_pass() {
            return Err(GraphError::NotCliqueDecomposable);
        }
        let comps = self.components();
        let core = self.induced_subgraph(&comps[0]);
        let clique_orders = comps[1..].iter().map(|c| c.len()).collect();
        Ok(Decomposition { core, clique_orders })
    }

    pub fn induced_subgraph(&self, vertices: &[u64]) -> GKGraph {
        let keep: BTreeSet<u64> = vertices.iter().copied().collect();
        let verts: Vec<u64> = self
            .vertices
            .iter()
            .copied()
            .filter(|v| keep.contains(v))
            .collect();
        let edges: Vec<(u64, u64)> = self
            .edges()
            .into_iter()
            .filter(|(p, q)| keep.contains(p) && keep.contains(q))
            .collect();
        GKGraph::new(verts, &edges).expect("induced subgraph of a valid graph")
    }

    /// Canonical DOT rendering: quoted decimal node names, edges in canonical
    /// order, isolated vertices as bare node statements.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph GK {\n");
        for (p, q) in self.edges() {
            out.push_str(&format!("  \"{p}\" -- \"{q}\";\n"));
        }
        for (i, &v) in self.vertices.iter().enumerate() {
            if self.adj[i] == 0 {
                out.push_str(&format!("  \"{v}\";\n"));
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Outcome of the clique check on components away from 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueVerdict {
    pub failures: Vec<CliqueFailure>,
}

impl CliqueVerdict {
    pub fn is_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueFailure {
    pub component: Vec<u64>,
    pub missing: (u64, u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub core: GKGraph,
    pub clique_orders: Vec<usize>,
}

/// Builds the prime graph of a group from its factored order and spectrum:
/// vertices are the primes dividing the order, and two primes are adjacent
/// exactly when their product is an element order.
pub fn build_gk(order: &FactoredInt, spec: &Spectrum) -> Result<GKGraph, GraphError> {
    build_gk_witnessed(order, spec).map(|(g, _)| g)
}

/// As `build_gk`, but also returns one witnessing element order per edge.
pub fn build_gk_witnessed(
    order: &FactoredInt,
    spec: &Spectrum,
) -> Result<(GKGraph, Vec<EdgeWitness>), GraphError> {
    let order_primes = order.support();
    let spec_primes = spec.primes();
    // Cauchy consistency: the two prime supports must agree exactly.
    for &p in &order_primes {
        if !spec_primes.contains(&p) {
            return Err(GraphError::PrimeMissingFromSpectrum(p));
        }
    }
    for &p in &spec_primes {
        if !order_primes.contains(&p) {
            return Err(GraphError::PrimeMissingFromOrder(p));
        }
    }
    let mut edges = Vec::new();
    let mut witnesses = Vec::new();
    for (i, &p) in order_primes.iter().enumerate() {
        for &q in &order_primes[i + 1..] {
            if let Some(m) = spec.witness(p * q) {
                edges.push((p, q));
                witnesses.push(EdgeWitness {
                    p,
                    q,
                    element_order: m,
                });
            }
        }
    }
    let g = GKGraph::new(order_primes, &edges)?;
    Ok((g, witnesses))
}

/// Labeled-graph equality: same vertex sets, same edge sets. No isomorphism
/// search; the labels are the primes themselves.
pub fn graphs_equal(a: &GKGraph, b: &GKGraph) -> bool {
    a == b
}

/// All labeled simple graphs on the given ascending primes realizing the
/// degree sequence exactly, in canonical order (lexicographic by edge list).
/// Unrealizable sequences yield an empty list.
pub fn enumerate_graphs(
    primes: &[u64],
    pattern: &DegreePattern,
) -> Result<Vec<GKGraph>, GraphError> {
    if primes.len() != pattern.len() {
        return Err(GraphError::PatternArity {
            pattern: pattern.len(),
            vertices: primes.len(),
        });
    }
    let template = GKGraph::new(primes.to_vec(), &[])?;
    let n = primes.len();
    if pattern.degree_sum() % 2 != 0 {
        return Ok(Vec::new());
    }

    // Backtrack vertex by vertex: when vertex i is processed, all its edges
    // to vertices < i are already fixed, so its residual degree must be met
    // by a subset of the later vertices that still have residual capacity.
    let mut residual: Vec<u32> = pattern.degrees().to_vec();
    let mut adj = vec![0u16; n];
    let mut found: Vec<Vec<u16>> = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn choose(
        i: usize,
        candidates: &[usize],
        need: usize,
        start: usize,
        residual: &mut Vec<u32>,
        adj: &mut Vec<u16>,
        found: &mut Vec<Vec<u16>>,
        n: usize,
    ) -> Result<(), GraphError> {
        if need == 0 {
            return fill(i + 1, residual, adj, found, n);
        }
        if candidates.len() - start < need {
            return Ok(());
        }
        for c in start..candidates.len() {
            let j = candidates[c];
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
            residual[j] -= 1;
            choose(i, candidates, need - 1, c + 1, residual, adj, found, n)?;
            residual[j] += 1;
            adj[i] &= !(1 << j);
            adj[j] &= !(1 << i);
        }
        Ok(())
    }

    fn fill(
        i: usize,
        residual: &mut Vec<u32>,
        adj: &mut Vec<u16>,
        found: &mut Vec<Vec<u16>>,
        n: usize,
    ) -> Result<(), GraphError> {
        if i == n {
            if found.len() >= MAX_ENUMERATED_GRAPHS {
                return Err(GraphError::EnumerationTooLarge);
            }
            found.push(adj.clone());
            return Ok(());
        }
        let need = residual[i] as usize;
        let candidates: Vec<usize> = (i + 1..n).filter(|&j| residual[j] > 0).collect();
        if need > candidates.len() {
            return Ok(());
        }
        choose(i, &candidates, need, 0, residual, adj, found, n)
    }

    fill(0, &mut residual, &mut adj, &mut found, n)?;

    let mut graphs: Vec<GKGraph> = found
        .into_iter()
        .map(|adj| GKGraph {
            vertices: template.vertices.clone(),
            adj,
        })
        .collect();
    graphs.sort_by_key(|g| g.edges());
    graphs.dedup();
    Ok(graphs)
}
