//! Vertex weightings, exact membership in the normalized semigroup and
//! constructive decomposition into edges and exceptional pairs.
//!
//! An integer weighting `f` is a member when it is a nonnegative rational
//! combination of edge vectors and an integer combination of edge vectors.
//! The second condition amounts to an even total weight on every connected
//! component; the first is decided by an exact simplex.

use std::collections::{BTreeMap, HashSet};

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::generators::{reduce_circuit_pair, ExceptionalPair, Generator};
use crate::graph::{Circuit, Edge, Graph, VertexId};
use crate::linalg::{kernel, q, Q};
use crate::lp::{feasible, lexmin, LpOutcome};

/// An integer weight per vertex, indexed by vertex id.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVector(Vec<i64>);

impl WeightVector {
    pub fn zero(n: usize) -> Self {
        WeightVector(vec![0; n])
    }

    pub fn from_vec(v: Vec<i64>) -> Self {
        WeightVector(v)
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: VertexId) -> i64 {
        self.0[v]
    }

    pub fn add_at(&mut self, v: VertexId, k: i64) {
        self.0[v] += k;
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn scaled(&self, k: i64) -> Self {
        WeightVector(self.0.iter().map(|x| x * k).collect())
    }

    /// Halves every entry; all entries must be even.
    pub fn halve(&mut self) {
        for x in &mut self.0 {
            assert!(*x % 2 == 0, "halving an odd entry");
            *x /= 2;
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        WeightVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn minus(&self, other: &Self) -> Self {
        WeightVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Parses `v=k` entries separated by commas; omitted vertices are 0.
    /// An empty string or `0` is the zero vector.
    pub fn parse(g: &Graph, text: &str) -> Result<Self> {
        let mut w = Self::zero(g.vertex_count());
        let text = text.trim();
        if text.is_empty() || text == "0" {
            return Ok(w);
        }
        for part in text.split(',') {
            let (name, val) = part.split_once('=').ok_or_else(|| Error::Parse {
                line: 0,
                message: format!("expected `vertex=value`, got `{}`", part.trim()),
            })?;
            let v = g.vertex(name.trim())?;
            let k: i64 = val
                .trim()
                .parse()
                .map_err(|_| Error::Parse { line: 0, message: format!("bad integer `{}`", val.trim()) })?;
            w.0[v] += k;
        }
        Ok(w)
    }

    pub fn display(&self, g: &Graph) -> String {
        let parts: Vec<String> =
            self.0.iter().enumerate().filter(|(_, &k)| k != 0).map(|(v, k)| format!("{}={k}", g.name(v))).collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(",")
        }
    }
}

/// Nonnegative rational weights on edges; absent edges weigh zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeWeighting {
    pub weights: BTreeMap<Edge, BigRational>,
}

impl EdgeWeighting {
    pub fn support(&self) -> Vec<Edge> {
        self.weights.keys().copied().collect()
    }

    /// Induced vertex weights, loops counted twice.
    pub fn vertex_weights(&self, n: usize) -> Vec<BigRational> {
        let mut w = vec![Q::zero(); n];
        for (e, x) in &self.weights {
            let (a, b) = e.ends();
            w[a] += x;
            w[b] += x;
        }
        w
    }

    pub fn induces(&self, f: &WeightVector) -> bool {
        self.weights.values().all(|x| x.is_positive())
            && self.vertex_weights(f.len()).iter().zip(f.as_slice()).all(|(a, &b)| *a == q(b))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateKind {
    /// `y . e >= 0` for every edge and `y . f < 0`.
    Cone,
    /// `y` is the indicator of a component: `y . e` is even for every edge
    /// and `y . f` is odd, so `f` is no integer combination of edges.
    Parity,
}

/// A functional witnessing non-membership.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FarkasCertificate {
    pub kind: CertificateKind,
    pub values: Vec<BigRational>,
}

impl FarkasCertificate {
    fn dot_edge(&self, e: Edge) -> Q {
        let (a, b) = e.ends();
        &self.values[a] + &self.values[b]
    }

    fn dot(&self, f: &WeightVector) -> Q {
        self.values.iter().zip(f.as_slice()).map(|(y, &k)| y * q(k)).sum()
    }

    /// Rescales a cone certificate to coprime integers.
    fn normalized(mut self) -> Self {
        let lcm = self.values.iter().fold(num_bigint::BigInt::one(), |acc, y| acc.lcm(y.denom()));
        let ints: Vec<num_bigint::BigInt> =
            self.values.iter().map(|y| (y * Q::from_integer(lcm.clone())).to_integer()).collect();
        let gcd = ints.iter().fold(num_bigint::BigInt::zero(), |acc, x| acc.gcd(x));
        if !gcd.is_zero() {
            self.values = ints.into_iter().map(|x| Q::from_integer(x / &gcd)).collect();
        }
        self
    }

    pub fn verify(&self, g: &Graph, f: &WeightVector) -> bool {
        if self.values.len() != g.vertex_count() || f.len() != g.vertex_count() {
            return false;
        }
        match self.kind {
            CertificateKind::Cone => {
                g.edges().iter().all(|&e| !self.dot_edge(e).is_negative()) && self.dot(f).is_negative()
            }
            CertificateKind::Parity => {
                let two = num_bigint::BigInt::from(2);
                let even = |x: &Q| x.is_integer() && x.to_integer().is_multiple_of(&two);
                self.values.iter().all(|y| y.is_integer())
                    && g.edges().iter().all(|&e| even(&self.dot_edge(e)))
                    && !even(&self.dot(f))
                    && self.dot(f).is_integer()
            }
        }
    }

    pub fn display(&self, g: &Graph) -> String {
        let parts: Vec<String> = self
            .values
            .iter()
            .enumerate()
            .filter(|(_, y)| !y.is_zero())
            .map(|(v, y)| format!("{}={y}", g.name(v)))
            .collect();
        let kind = match self.kind {
            CertificateKind::Cone => "cone",
            CertificateKind::Parity => "parity",
        };
        format!("{kind}: {}", parts.join(","))
    }
}

/// A multiset of edges and exceptional pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Decomposition {
    pub edges: BTreeMap<Edge, u32>,
    pub pairs: BTreeMap<ExceptionalPair, u32>,
}

impl Decomposition {
    pub fn add_edges<I: IntoIterator<Item = Edge>>(&mut self, edges: I) {
        for e in edges {
            *self.edges.entry(e).or_insert(0) += 1;
        }
    }

    pub fn merge(&mut self, other: Decomposition) {
        for (e, k) in other.edges {
            *self.edges.entry(e).or_insert(0) += k;
        }
        for (p, k) in other.pairs {
            *self.pairs.entry(p).or_insert(0) += k;
        }
    }

    /// Edges then pairs, each repeated by multiplicity.
    pub fn generators(&self) -> Vec<Generator> {
        let mut out = Vec::new();
        for (&e, &k) in &self.edges {
            out.extend(std::iter::repeat_n(Generator::Edge(e), k as usize));
        }
        for (p, &k) in &self.pairs {
            out.extend(std::iter::repeat_n(Generator::Pair(p.clone()), k as usize));
        }
        out
    }

    pub fn weight(&self, n: usize) -> WeightVector {
        let mut w = WeightVector::zero(n);
        for g in self.generators() {
            g.add_weight(&mut w, 1);
        }
        w
    }
}

pub fn generator_weight(g: &Graph, gen: &Generator) -> Result<WeightVector> {
    gen.validate(g)?;
    Ok(gen.weight(g.vertex_count()))
}

/// Vertex-by-edge incidence matrix, loops contributing 2.
fn incidence(g: &Graph, edges: &[Edge]) -> Vec<Vec<Q>> {
    let mut a = vec![vec![Q::zero(); edges.len()]; g.vertex_count()];
    for (j, e) in edges.iter().enumerate() {
        let (u, v) = e.ends();
        a[u][j] += q(1);
        a[v][j] += q(1);
    }
    a
}

fn check_len(g: &Graph, f: &WeightVector) -> Result<()> {
    if f.len() != g.vertex_count() {
        return Err(Error::Precondition(format!(
            "weight vector has {} entries for {} vertices",
            f.len(),
            g.vertex_count()
        )));
    }
    Ok(())
}

/// The lexicographically least nonnegative edge weighting inducing `f`,
/// reduced to a linearly independent support; or a cone certificate.
pub fn cone_decompose(g: &Graph, f: &WeightVector) -> std::result::Result<EdgeWeighting, FarkasCertificate> {
    let edges = g.edges();
    let a = incidence(g, edges);
    let b: Vec<Q> = f.as_slice().iter().map(|&k| q(k)).collect();
    match lexmin(&a, &b, edges.len()) {
        LpOutcome::Feasible(x) => {
            let weights = edges.iter().zip(x).filter(|(_, x)| x.is_positive()).map(|(&e, x)| (e, x)).collect();
            Ok(caratheodory_reduce(g, EdgeWeighting { weights }))
        }
        LpOutcome::Infeasible(y) => Err(FarkasCertificate { kind: CertificateKind::Cone, values: y }.normalized()),
    }
}

/// Moves along kernel directions of the support until the support edge
/// vectors are linearly independent. Each step zeroes the
/// lexicographically greatest edge among those that can be zeroed first.
pub fn caratheodory_reduce(g: &Graph, mut w: EdgeWeighting) -> EdgeWeighting {
    loop {
        let support = w.support();
        let basis = kernel(&incidence(g, &support), support.len());
        let Some(z) = basis.into_iter().next() else {
            return w;
        };
        // moving by +t z zeroes edges with z < 0; by -t z those with z > 0.
        // each direction has its ratio-test minimum; take the direction owning
        // the greatest eligible edge
        let (plus_t, minus_t) = ratios(&w, &support, &z);
        let greatest = |t: &Option<Q>, sign_neg: bool| -> Option<usize> {
            let t = t.as_ref()?;
            (0..support.len())
                .filter(|&j| {
                    let zj = &z[j];
                    let hit = if sign_neg { zj.is_negative() } else { zj.is_positive() };
                    hit && {
                        let x = &w.weights[&support[j]];
                        let r = if sign_neg { x / -zj } else { x / zj };
                        r == *t
                    }
                })
                .max_by_key(|&j| support[j])
        };
        let cand_plus = greatest(&plus_t, true);
        let cand_minus = greatest(&minus_t, false);
        let (t, plus) = match (cand_plus, cand_minus) {
            (Some(a), Some(b)) => {
                if support[a] > support[b] {
                    (plus_t.unwrap(), true)
                } else {
                    (minus_t.unwrap(), false)
                }
            }
            (Some(_), None) => (plus_t.unwrap(), true),
            (None, Some(_)) => (minus_t.unwrap(), false),
            (None, None) => unreachable!("nonzero kernel vector"),
        };
        for (j, zj) in z.iter().enumerate() {
            let e = support[j];
            let x = w.weights.get_mut(&e).unwrap();
            if plus {
                *x += &t * zj;
            } else {
                *x -= &t * zj;
            }
        }
        w.weights.retain(|_, x| !x.is_zero());
    }
}

fn ratios(w: &EdgeWeighting, support: &[Edge], z: &[Q]) -> (Option<Q>, Option<Q>) {
    let mut plus: Option<Q> = None;
    let mut minus: Option<Q> = None;
    for (j, zj) in z.iter().enumerate() {
        let x = &w.weights[&support[j]];
        if zj.is_negative() {
            let r = x / -zj;
            if plus.as_ref().is_none_or(|p| r < *p) {
                plus = Some(r);
            }
        } else if zj.is_positive() {
            let r = x / zj;
            if minus.as_ref().is_none_or(|p| r < *p) {
                minus = Some(r);
            }
        }
    }
    (plus, minus)
}

/// A component whose total weight is odd, if any.
fn parity_certificate(g: &Graph, f: &WeightVector) -> Option<FarkasCertificate> {
    g.connected_components().into_iter().find_map(|comp| {
        let total: i64 = comp.iter().map(|&v| f.get(v)).sum();
        (total % 2 != 0).then(|| {
            let mut values = vec![Q::zero(); g.vertex_count()];
            for v in comp {
                values[v] = Q::one();
            }
            FarkasCertificate { kind: CertificateKind::Parity, values }
        })
    })
}

/// Membership with a witness either way.
pub fn membership(g: &Graph, f: &WeightVector) -> Result<std::result::Result<(), FarkasCertificate>> {
    check_len(g, f)?;
    let edges = g.edges();
    let b: Vec<Q> = f.as_slice().iter().map(|&k| q(k)).collect();
    if let LpOutcome::Infeasible(y) = feasible(&incidence(g, edges), &b, edges.len()) {
        return Ok(Err(FarkasCertificate { kind: CertificateKind::Cone, values: y }.normalized()));
    }
    Ok(match parity_certificate(g, f) {
        Some(c) => Err(c),
        None => Ok(()),
    })
}

pub fn is_member(g: &Graph, f: &WeightVector) -> bool {
    matches!(membership(g, f), Ok(Ok(())))
}

/// Writes a member as a sum of edges and exceptional pairs.
pub fn decompose_to_generators(g: &Graph, f: &WeightVector) -> Result<Decomposition> {
    check_len(g, f)?;
    let w = cone_decompose(g, f).map_err(|c| Error::NotMember(Box::new(c)))?;
    if let Some(c) = parity_certificate(g, f) {
        return Err(Error::NotMember(Box::new(c)));
    }
    let half = BigRational::new(1.into(), 2.into());
    let mut d = Decomposition::default();
    let mut fractional: Vec<Edge> = Vec::new();
    for (&e, x) in &w.weights {
        let whole = x.floor();
        let k = whole.to_integer().to_u32().ok_or_else(|| Error::Internal("edge weight overflow".into()))?;
        d.add_edges(std::iter::repeat_n(e, k as usize));
        let frac = x - whole;
        if frac == half {
            fractional.push(e);
        } else if !frac.is_zero() {
            return Err(Error::Internal(format!("fractional edge weight {frac}")));
        }
    }
    let circuits = circuits_of(g.vertex_count(), &fractional)?;
    let mut by_component: BTreeMap<usize, Vec<Circuit>> = BTreeMap::new();
    for c in circuits {
        by_component.entry(g.component_of(c.least_vertex())).or_default().push(c);
    }
    for (_, mut cs) in by_component {
        cs.sort();
        if cs.len() % 2 != 0 {
            return Err(Error::Internal("odd number of circuits in a component".into()));
        }
        for pair in cs.chunks(2) {
            d.merge(reduce_circuit_pair(g, &pair[0], &pair[1])?);
        }
    }
    if d.weight(g.vertex_count()) != *f {
        return Err(Error::Internal("decomposition weight mismatch".into()));
    }
    Ok(d)
}

/// Splits an edge set in which every vertex has degree 0 or 2 (loops
/// counting 2) into circuits.
fn circuits_of(n: usize, edges: &[Edge]) -> Result<Vec<Circuit>> {
    let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for e in edges {
        let (a, b) = e.ends();
        adj[a].push(b);
        adj[b].push(a);
    }
    let bad = || Error::Internal("fractional support is not a union of circuits".into());
    if adj.iter().any(|l| !l.is_empty() && l.len() != 2) {
        return Err(bad());
    }
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] || adj[s].is_empty() {
            continue;
        }
        let mut verts = vec![s];
        seen[s] = true;
        if adj[s][0] != s {
            let (mut prev, mut cur) = (s, adj[s][0]);
            while cur != s {
                seen[cur] = true;
                verts.push(cur);
                let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
                prev = cur;
                cur = next;
            }
        }
        out.push(Circuit::canonical_from(verts).map_err(|_| bad())?);
    }
    Ok(out)
}

/// Whether `f` is a nonnegative integer combination of edges using each
/// edge at most `bound` times.
pub fn integer_membership(g: &Graph, f: &WeightVector, bound: usize) -> bool {
    if f.len() != g.vertex_count() || f.as_slice().iter().any(|&x| x < 0) || f.total() % 2 != 0 {
        return false;
    }
    let unbounded = bound as i64 >= f.total() / 2;
    let mut counts = vec![0usize; g.edge_count()];
    let mut failed = HashSet::new();
    search(g, f.as_slice().to_vec(), bound, unbounded, &mut counts, &mut failed)
}

fn search(
    g: &Graph,
    rest: Vec<i64>,
    bound: usize,
    memo: bool,
    counts: &mut [usize],
    failed: &mut HashSet<Vec<i64>>,
) -> bool {
    let Some(v) = rest.iter().position(|&x| x > 0) else {
        return true;
    };
    if memo && failed.contains(&rest) {
        return false;
    }
    for &u in g.neighbors(v) {
        let e = Edge::new(u, v);
        let id = g.edge_id(e).unwrap();
        if counts[id] >= bound {
            continue;
        }
        let mut next = rest.clone();
        next[v] -= 1;
        next[u] -= 1;
        if next[u] < 0 {
            continue;
        }
        counts[id] += 1;
        let ok = search(g, next, bound, memo, counts, failed);
        counts[id] -= 1;
        if ok {
            return true;
        }
    }
    if memo {
        failed.insert(rest);
    }
    false
}

/// `integer_membership` with the default bound, the total weight.
pub fn is_edge_sum(g: &Graph, f: &WeightVector) -> bool {
    integer_membership(g, f, f.total().max(0) as usize)
}
