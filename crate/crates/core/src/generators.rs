//! Exceptional pairs, the minimal generating set of the normalized
//! semigroup, and rewriting of circuit pairs into generators.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Circuit, Edge, Graph, VertexId};
use crate::semigroup::{Decomposition, WeightVector};

/// Two vertex-disjoint odd circuits in one component whose union induces
/// exactly the two circuits.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExceptionalPair {
    first: Circuit,
    second: Circuit,
}

impl ExceptionalPair {
    pub fn new(g: &Graph, a: Circuit, b: Circuit) -> Result<Self> {
        let (first, second) = if a.least_vertex() <= b.least_vertex() { (a, b) } else { (b, a) };
        let p = ExceptionalPair { first, second };
        p.check(g).map_err(|why| Error::NotExceptional(format!("{}: {why}", p.display(g))))?;
        Ok(p)
    }

    fn check(&self, g: &Graph) -> std::result::Result<(), String> {
        let (a, b) = (&self.first, &self.second);
        if !a.is_odd() || !b.is_odd() {
            return Err("circuits must be odd".into());
        }
        if a.shares_vertex(b) {
            return Err("circuits share a vertex".into());
        }
        if !g.same_component(a.least_vertex(), b.least_vertex()) {
            return Err("circuits lie in different components".into());
        }
        let mut allowed: Vec<Edge> = a.edges();
        allowed.extend(b.edges());
        let verts: Vec<VertexId> = a.vertices().iter().chain(b.vertices()).copied().collect();
        for (i, &x) in verts.iter().enumerate() {
            for &y in &verts[i..] {
                if g.has_edge(x, y) != allowed.contains(&Edge::new(x, y)) {
                    return Err(format!("induced subgraph has extra edge {}", g.edge_name(Edge::new(x, y))));
                }
            }
        }
        Ok(())
    }

    pub fn first(&self) -> &Circuit {
        &self.first
    }

    pub fn second(&self) -> &Circuit {
        &self.second
    }

    pub fn circuits(&self) -> [&Circuit; 2] {
        [&self.first, &self.second]
    }

    pub fn weight(&self, n: usize) -> WeightVector {
        let mut w = WeightVector::zero(n);
        for v in self.first.vertices().iter().chain(self.second.vertices()) {
            w.add_at(*v, 1);
        }
        w
    }

    pub fn display(&self, g: &Graph) -> String {
        format!("({}|{})", self.first.display(g), self.second.display(g))
    }
}

/// A variable of a word: an edge, a cycle (induced odd circuit with half
/// weights on its edges), an exceptional pair, or a half-circuit variable
/// for an even circuit.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    Edge(Edge),
    Cycle(Circuit),
    Pair(ExceptionalPair),
    Half(Circuit),
}

impl Generator {
    pub fn weight(&self, n: usize) -> WeightVector {
        let mut w = WeightVector::zero(n);
        self.add_weight(&mut w, 1);
        w
    }

    pub(crate) fn add_weight(&self, w: &mut WeightVector, k: i64) {
        match self {
            Generator::Edge(e) => {
                let (a, b) = e.ends();
                w.add_at(a, k);
                w.add_at(b, k);
            }
            Generator::Cycle(c) | Generator::Half(c) => {
                for &v in c.vertices() {
                    w.add_at(v, k);
                }
            }
            Generator::Pair(p) => {
                for c in p.circuits() {
                    for &v in c.vertices() {
                        w.add_at(v, k);
                    }
                }
            }
        }
    }

    pub fn is_cycle(&self) -> bool {
        matches!(self, Generator::Cycle(_))
    }

    pub fn as_edge(&self) -> Option<Edge> {
        match self {
            Generator::Edge(e) => Some(*e),
            _ => None,
        }
    }

    /// Checks that the generator lives in `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        match self {
            Generator::Edge(e) => {
                if g.edge_id(*e).is_none() {
                    return Err(Error::UnknownEdge(g.edge_name(*e)));
                }
            }
            Generator::Cycle(c) => {
                Circuit::new(g, c.vertices().to_vec())?;
                if !c.is_odd() {
                    return Err(Error::InvalidCircuit(format!("cycle {} is even", c.display(g))));
                }
                if !is_induced(g, c) {
                    return Err(Error::InvalidCircuit(format!("cycle {} is not induced", c.display(g))));
                }
            }
            Generator::Pair(p) => {
                ExceptionalPair::new(g, p.first.clone(), p.second.clone())?;
            }
            Generator::Half(c) => {
                Circuit::new(g, c.vertices().to_vec())?;
                if c.is_odd() {
                    return Err(Error::InvalidCircuit(format!("{} is odd", c.display(g))));
                }
            }
        }
        Ok(())
    }

    pub fn token(&self, g: &Graph) -> String {
        match self {
            Generator::Edge(e) => format!("e:{}", g.edge_name(*e)),
            Generator::Cycle(c) => format!("c:{}", c.display(g)),
            Generator::Pair(p) => format!("p:{}", p.display(g)),
            Generator::Half(c) => format!("h:{}", c.display(g)),
        }
    }

    /// Parses one generator token, validating it against `g`.
    pub fn parse(g: &Graph, tok: &str) -> Result<Self> {
        let bad = || Error::Parse { line: 0, message: format!("bad generator token `{tok}`") };
        let (kind, body) = tok.split_once(':').ok_or_else(bad)?;
        let circuit = |s: &str| -> Result<Circuit> {
            let verts = s.split('-').map(|n| g.vertex(n.trim())).collect::<Result<Vec<_>>>()?;
            Circuit::new(g, verts)
        };
        let gen = match kind {
            "e" => Generator::Edge(g.parse_edge(body)?),
            "c" => Generator::Cycle(circuit(body)?),
            "h" => Generator::Half(circuit(body)?),
            "p" => {
                let inner = body.strip_prefix('(').and_then(|s| s.strip_suffix(')')).ok_or_else(bad)?;
                let (a, b) = inner.split_once('|').ok_or_else(bad)?;
                Generator::Pair(ExceptionalPair::new(g, circuit(a)?, circuit(b)?)?)
            }
            _ => return Err(bad()),
        };
        gen.validate(g)?;
        Ok(gen)
    }
}

pub(crate) fn is_induced(g: &Graph, c: &Circuit) -> bool {
    let own = c.edges();
    let v = c.vertices();
    for (i, &x) in v.iter().enumerate() {
        for &y in &v[i..] {
            if g.has_edge(x, y) != own.contains(&Edge::new(x, y)) {
                return false;
            }
        }
    }
    true
}

pub fn enumerate_exceptional_pairs(g: &Graph) -> Vec<ExceptionalPair> {
    let circuits = g.induced_odd_circuits(g.vertex_count());
    let mut out = Vec::new();
    for (i, a) in circuits.iter().enumerate() {
        for b in &circuits[i + 1..] {
            if let Ok(p) = ExceptionalPair::new(g, a.clone(), b.clone()) {
                out.push(p);
            }
        }
    }
    out.sort();
    out
}

/// Edges of `g` followed by its exceptional pairs.
pub fn minimal_generators(g: &Graph) -> Vec<Generator> {
    let mut out: Vec<Generator> = g.edges().iter().map(|&e| Generator::Edge(e)).collect();
    out.extend(enumerate_exceptional_pairs(g).into_iter().map(Generator::Pair));
    out
}

/// The two sides of the relation from the even closed walk `C_i w C_j w^-1`
/// with alternating signs, where `path` runs from `x` on `ci` to `y` on `cj`
/// and `positive_first` is the sign of the first edge of `ci` read from `x`.
/// Returns `(N_w, P_i + P_j + P_w)`: the cycles plus the first list equal
/// the second list in weight.
pub(crate) fn destroy_sides(
    ci: &Circuit,
    cj: &Circuit,
    path: &[VertexId],
    positive_first: bool,
) -> (Vec<Edge>, Vec<Edge>) {
    let x = path[0];
    let y = *path.last().unwrap();
    let m = path.len() - 1;
    let mut neg = Vec::new();
    let mut pos = ci.alternate_from(x, positive_first);
    for k in 1..=m {
        let e = Edge::new(path[k - 1], path[k]);
        if (k % 2 == 0) == positive_first {
            pos.push(e);
        } else {
            neg.push(e);
        }
    }
    let j_first = if m % 2 == 1 { positive_first } else { !positive_first };
    pos.extend(cj.alternate_from(y, j_first));
    (neg, pos)
}

/// Writes the sum of the cycle weights of two odd circuits of one component
/// as edges plus at most one exceptional pair.
pub fn reduce_circuit_pair(g: &Graph, c1: &Circuit, c2: &Circuit) -> Result<Decomposition> {
    if !c1.is_odd() || !c2.is_odd() {
        return Err(Error::Precondition("both circuits must be odd".into()));
    }
    if !g.same_component(c1.least_vertex(), c2.least_vertex()) {
        return Err(Error::Precondition(format!(
            "{} and {} lie in different components",
            c1.display(g),
            c2.display(g)
        )));
    }
    let mut d = Decomposition::default();
    reduce_into(g, c1, c2, &mut d)?;
    Ok(d)
}

fn reduce_into(g: &Graph, c1: &Circuit, c2: &Circuit, d: &mut Decomposition) -> Result<()> {
    if c1 == c2 {
        d.add_edges(c1.edges());
        return Ok(());
    }
    if let Some(&v) = c1.vertices().iter().filter(|v| c2.contains(**v)).min() {
        let (_, pos) = destroy_sides(c1, c2, &[v], true);
        d.add_edges(pos);
        return Ok(());
    }
    let mut joins: Vec<Edge> = Vec::new();
    for &x in c1.vertices() {
        for &y in c2.vertices() {
            if g.has_edge(x, y) {
                joins.push(Edge::new(x, y));
            }
        }
    }
    if let Some(&e) = joins.iter().min() {
        let (a, b) = e.ends();
        let (x, y) = if c1.contains(a) { (a, b) } else { (b, a) };
        let (neg, pos) = destroy_sides(c1, c2, &[x, y], false);
        debug_assert!(neg.is_empty());
        d.add_edges(pos);
        return Ok(());
    }
    let best = [c1, c2]
        .iter()
        .enumerate()
        .flat_map(|(i, c)| chord_splits(g, c).into_iter().map(move |s| (i, s)))
        .min_by(|(i, a), (j, b)| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)).then_with(|| i.cmp(j)));
    if let Some((i, (smaller, edges))) = best {
        d.add_edges(edges);
        let other = if i == 0 { c2 } else { c1 };
        return reduce_into(g, &smaller, other, d);
    }
    let p = ExceptionalPair::new(g, c1.clone(), c2.clone())?;
    *d.pairs.entry(p).or_insert(0) += 1;
    Ok(())
}

/// For each chord of the odd circuit `c` (loops at its vertices included):
/// the smaller odd circuit it cuts off and the edges that make up the rest,
/// so that `cycle(c) = cycle(smaller) + edges`.
fn chord_splits(g: &Graph, c: &Circuit) -> Vec<(Circuit, Vec<Edge>)> {
    let v = c.vertices();
    let n = v.len();
    let mut out = Vec::new();
    if n < 3 {
        return out;
    }
    let own = c.edges();
    for i in 0..n {
        if g.has_loop(v[i]) {
            out.push((Circuit::canonical_from(vec![v[i]]).unwrap(), c.alternate_from(v[i], false)));
        }
        for j in i + 2..n {
            if !g.has_edge(v[i], v[j]) || own.contains(&Edge::new(v[i], v[j])) {
                continue;
            }
            // arcs i..j and j..i; the even arc plus the chord is the odd circuit
            let arc_a: Vec<VertexId> = v[i..=j].to_vec();
            let arc_b: Vec<VertexId> = v[j..].iter().chain(&v[..=i]).copied().collect();
            let (even_arc, odd_arc) = if (arc_a.len() - 1).is_multiple_of(2) { (arc_a, arc_b) } else { (arc_b, arc_a) };
            let smaller = Circuit::canonical_from(even_arc).unwrap();
            let interior = &odd_arc[1..odd_arc.len() - 1];
            let edges = interior.chunks(2).map(|p| Edge::new(p[0], p[1])).collect();
            out.push((smaller, edges));
        }
    }
    out
}

/// An integer combination of edges.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SignedEdgeSum {
    pub coefficients: BTreeMap<Edge, i64>,
}

impl SignedEdgeSum {
    pub fn weight(&self, n: usize) -> WeightVector {
        let mut w = WeightVector::zero(n);
        for (&e, &k) in &self.coefficients {
            Generator::Edge(e).add_weight(&mut w, k);
        }
        w
    }

    pub fn display(&self, g: &Graph) -> String {
        self.coefficients.iter().map(|(&e, &k)| format!("{:+}*e:{}", k, g.edge_name(e))).collect::<Vec<_>>().join(" ")
    }
}

/// The pair as a ±1 combination of edges along the even closed walk through
/// both circuits and a shortest connecting walk traversed twice.
pub fn pair_as_signed_edges(g: &Graph, h: &ExceptionalPair) -> SignedEdgeSum {
    let path = g
        .shortest_path_between(h.first.vertices(), h.second.vertices())
        .expect("circuits of an exceptional pair are connected");
    let (neg, pos) = destroy_sides(&h.first, &h.second, &path, true);
    let mut s = SignedEdgeSum::default();
    for e in pos {
        *s.coefficients.entry(e).or_insert(0) += 1;
    }
    for e in neg {
        *s.coefficients.entry(e).or_insert(0) -= 1;
    }
    s.coefficients.retain(|_, k| *k != 0);
    s
}

/// All edges of both circuits; their sum is twice the pair.
pub fn pair_square_as_edges(h: &ExceptionalPair) -> Vec<Edge> {
    let mut e = h.first.edges();
    e.extend(h.second.edges());
    e.sort();
    e
}
