//! Admissible subgraphs, the monomial primes they index, and free
//! generating sets of the associated Laurent lattices.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Circuit, Edge, Graph, VertexId};
use crate::linalg::{column_rank, solve_integer};

/// Default largest edge count for subset enumeration.
pub const DEFAULT_SUBSET_CAP: usize = 20;

/// The two classes of alternate edges of an even circuit.
pub fn alternating_classes(c: &Circuit) -> (Vec<Edge>, Vec<Edge>) {
    let x = c.least_vertex();
    (c.alternate_from(x, true), c.alternate_from(x, false))
}

/// An edge subset `K` that, on every even simple circuit, contains all
/// edges of one alternating class exactly when it contains all edges of
/// the other.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AdmissibleSubgraph {
    edges: Vec<Edge>,
}

impl AdmissibleSubgraph {
    pub fn new(g: &Graph, edges: &[Edge]) -> Result<Self> {
        let k = normalize(g, edges)?;
        if !is_admissible(g, &k) {
            let names: Vec<String> = k.iter().map(|&e| g.edge_name(e)).collect();
            return Err(Error::Precondition(format!("{{{}}} is not admissible", names.join(", "))));
        }
        Ok(AdmissibleSubgraph { edges: k })
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Vertices touched by an edge of `K`.
    pub fn vertices(&self) -> Vec<VertexId> {
        let set: BTreeSet<VertexId> = self.edges.iter().flat_map(|e| [e.ends().0, e.ends().1]).collect();
        set.into_iter().collect()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn display(&self, g: &Graph) -> String {
        let names: Vec<String> = self.edges.iter().map(|&e| g.edge_name(e)).collect();
        format!("{{{}}}", names.join(", "))
    }
}

fn normalize(g: &Graph, edges: &[Edge]) -> Result<Vec<Edge>> {
    for &e in edges {
        if g.edge_id(e).is_none() {
            return Err(Error::UnknownEdge(g.edge_name(e)));
        }
    }
    let set: BTreeSet<Edge> = edges.iter().copied().collect();
    Ok(set.into_iter().collect())
}

/// The prime generated by the edges outside an admissible subgraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeIdealDescriptor {
    pub subgraph: Vec<String>,
    pub generators: Vec<String>,
}

pub fn is_admissible(g: &Graph, k: &[Edge]) -> bool {
    let has = |e: &Edge| k.contains(e);
    g.even_simple_circuits().iter().all(|c| {
        let (a, b) = alternating_classes(c);
        a.iter().all(has) == b.iter().all(has)
    })
}

/// All admissible edge subsets, by size and then lexicographically.
pub fn enumerate_admissible(g: &Graph) -> Result<Vec<AdmissibleSubgraph>> {
    enumerate_admissible_capped(g, DEFAULT_SUBSET_CAP)
}

pub fn enumerate_admissible_capped(g: &Graph, cap: usize) -> Result<Vec<AdmissibleSubgraph>> {
    let m = g.edge_count();
    if m > cap || m >= 64 {
        return Err(Error::CapExceeded(
            format!("{m} edges exceed the subset enumeration cap; test chosen subsets with is_admissible instead"),
            cap,
        ));
    }
    let edges = g.edges();
    let mask_of = |es: &[Edge]| es.iter().fold(0u64, |acc, e| acc | 1 << g.edge_id(*e).expect("edge of g"));
    let classes: Vec<(u64, u64)> = g
        .even_simple_circuits()
        .iter()
        .map(|c| {
            let (a, b) = alternating_classes(c);
            (mask_of(&a), mask_of(&b))
        })
        .collect();
    let mut out: Vec<AdmissibleSubgraph> = (0..1u64 << m)
        .filter(|&s| classes.iter().all(|&(a, b)| (s & a == a) == (s & b == b)))
        .map(|s| {
            let mut k: Vec<Edge> = (0..m).filter(|i| s >> i & 1 == 1).map(|i| edges[i]).collect();
            k.sort();
            AdmissibleSubgraph { edges: k }
        })
        .collect();
    out.sort_by(|a, b| a.edges.len().cmp(&b.edges.len()).then_with(|| a.edges.cmp(&b.edges)));
    Ok(out)
}

pub fn prime_generators(g: &Graph, k: &[Edge]) -> Result<PrimeIdealDescriptor> {
    let k = AdmissibleSubgraph::new(g, k)?;
    Ok(PrimeIdealDescriptor {
        subgraph: k.edges.iter().map(|&e| g.edge_name(e)).collect(),
        generators: g.edges().iter().filter(|e| !k.contains(**e)).map(|&e| g.edge_name(e)).collect(),
    })
}

/// A breadth-first spanning forest of `K` from least vertices, plus, in each
/// non-bipartite component, the least edge closing an odd circuit.
pub fn laurent_free_generators(g: &Graph, k: &AdmissibleSubgraph) -> Vec<Edge> {
    let n = g.vertex_count();
    let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for e in &k.edges {
        let (a, b) = e.ends();
        if a != b {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let mut color: Vec<Option<(usize, bool)>> = vec![None; n];
    let mut out = Vec::new();
    let mut comp = 0;
    for root in k.vertices() {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some((comp, false));
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let side = color[v].unwrap().1;
            for &u in &adj[v] {
                if color[u].is_none() {
                    color[u] = Some((comp, !side));
                    out.push(Edge::new(v, u));
                    queue.push_back(u);
                }
            }
        }
        let odd = k
            .edges
            .iter()
            .filter(|e| {
                let (a, b) = e.ends();
                color[a].is_some_and(|(c, _)| c == comp) && color[a].map(|x| x.1) == color[b].map(|x| x.1)
            })
            .min();
        if let Some(&e) = odd {
            out.push(e);
        }
        comp += 1;
    }
    out.sort();
    out
}

fn edge_vector(n: usize, e: Edge) -> Vec<i64> {
    let mut v = vec![0; n];
    let (a, b) = e.ends();
    v[a] += 1;
    v[b] += 1;
    v
}

/// Checks that `gens` are independent over the rationals and that every
/// edge of `K` is an integer combination of them.
pub fn check_laurent_basis(g: &Graph, k: &AdmissibleSubgraph, gens: &[Edge]) -> Result<()> {
    let n = g.vertex_count();
    let cols: Vec<Vec<i64>> = gens.iter().map(|&e| edge_vector(n, e)).collect();
    if column_rank(&cols) != gens.len() {
        return Err(Error::Internal("generators are linearly dependent".into()));
    }
    let a: Vec<Vec<BigInt>> = (0..n).map(|i| cols.iter().map(|c| BigInt::from(c[i])).collect()).collect();
    for &e in &k.edges {
        let b: Vec<BigInt> = edge_vector(n, e).into_iter().map(BigInt::from).collect();
        if solve_integer(&a, &b).is_none() {
            return Err(Error::Internal(format!("{} is not an integer combination", g.edge_name(e))));
        }
    }
    Ok(())
}

/// DOT drawing of `G` with the edges of `K` solid and the rest dashed.
pub fn to_dot(g: &Graph, k: &AdmissibleSubgraph) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        let _ = writeln!(s, "  \"{}\";", g.name(v));
    }
    for &e in g.edges() {
        let (a, b) = e.ends();
        let style = if k.contains(e) { "solid" } else { "dashed" };
        let _ = writeln!(s, "  \"{}\" -- \"{}\" [style={style}];", g.name(a), g.name(b));
    }
    s.push_str("}\n");
    s
}
