//! Finite undirected graphs with loops, walks, circuits and the recursive
//! splitting of even closed walks.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::Deserialize;

use crate::error::{Error, Result};

pub type VertexId = usize;

/// An unordered vertex pair, stored with `u <= v`. A loop has `u == v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: VertexId,
    v: VertexId,
}

impl Edge {
    pub fn new(a: VertexId, b: VertexId) -> Self {
        if a <= b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn ends(self) -> (VertexId, VertexId) {
        (self.u, self.v)
    }

    pub fn is_loop(self) -> bool {
        self.u == self.v
    }

    pub fn touches(self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint opposite `x`; `x` itself for a loop.
    pub fn other(self, x: VertexId) -> VertexId {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

#[derive(Clone, Debug)]
pub struct Graph {
    names: Vec<String>,
    index: HashMap<String, VertexId>,
    edges: Vec<Edge>,
    edge_index: HashMap<Edge, usize>,
    adj: Vec<Vec<VertexId>>,
    component: Vec<usize>,
}

#[derive(Deserialize)]
struct JsonGraph {
    #[serde(default)]
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

impl Graph {
    /// Builds a graph from vertex names and edges given as index pairs.
    pub fn new(names: Vec<String>, edge_list: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if index.insert(n.clone(), i).is_some() {
                return Err(Error::Parse { line: 0, message: format!("duplicate vertex `{n}`") });
            }
        }
        let mut set = BTreeSet::new();
        for &(a, b) in edge_list {
            if a >= names.len() || b >= names.len() {
                return Err(Error::UnknownVertex(format!("#{}", a.max(b))));
            }
            if !set.insert(Edge::new(a, b)) {
                return Err(Error::Parse { line: 0, message: format!("duplicate edge {}-{}", names[a], names[b]) });
            }
        }
        Ok(Self::assemble(names, index, set.into_iter().collect()))
    }

    /// Builds a graph on `n` vertices named `v0..v{n-1}`.
    pub fn from_indices(n: usize, edge_list: &[(VertexId, VertexId)]) -> Result<Self> {
        Self::new((0..n).map(|i| format!("v{i}")).collect(), edge_list)
    }

    fn assemble(names: Vec<String>, index: HashMap<String, VertexId>, edges: Vec<Edge>) -> Self {
        let n = names.len();
        let mut adj = vec![Vec::new(); n];
        let mut edge_index = HashMap::with_capacity(edges.len());
        for (i, e) in edges.iter().enumerate() {
            edge_index.insert(*e, i);
            let (a, b) = e.ends();
            adj[a].push(b);
            if a != b {
                adj[b].push(a);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let mut component = vec![usize::MAX; n];
        let mut next = 0;
        for s in 0..n {
            if component[s] != usize::MAX {
                continue;
            }
            let mut queue = VecDeque::from([s]);
            component[s] = next;
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if component[y] == usize::MAX {
                        component[y] = next;
                        queue.push_back(y);
                    }
                }
            }
            next += 1;
        }
        Graph { names, index, edges, edge_index, adj, component }
    }

    /// Parses the text edge-list format, or JSON when the input starts with `{`.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::parse_json(text)
        } else {
            Self::parse_text(text)
        }
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        let raw: JsonGraph =
            serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), message: e.to_string() })?;
        let fixed = !raw.vertices.is_empty();
        let mut names = raw.vertices;
        let mut index: HashMap<String, VertexId> = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if index.insert(n.clone(), i).is_some() {
                return Err(Error::Parse { line: 1, message: format!("duplicate vertex `{n}`") });
            }
        }
        let mut edges = BTreeSet::new();
        for (a, b) in &raw.edges {
            let mut resolve = |name: &String| -> Result<VertexId> {
                if let Some(&i) = index.get(name) {
                    return Ok(i);
                }
                if fixed {
                    return Err(Error::UnknownVertex(name.clone()));
                }
                check_name(name, 1)?;
                names.push(name.clone());
                index.insert(name.clone(), names.len() - 1);
                Ok(names.len() - 1)
            };
            let (x, y) = (resolve(a)?, resolve(b)?);
            if !edges.insert(Edge::new(x, y)) {
                return Err(Error::Parse { line: 1, message: format!("duplicate edge {a}-{b}") });
            }
        }
        if names.is_empty() {
            return Err(Error::Parse { line: 1, message: "empty graph".into() });
        }
        Ok(Self::assemble(names, index, edges.into_iter().collect()))
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut names: Vec<String> = Vec::new();
        let mut index: HashMap<String, VertexId> = HashMap::new();
        let mut fixed = false;
        let mut seen_content = false;
        let mut edges = BTreeSet::new();
        for (ln, raw) in text.lines().enumerate() {
            let line_no = ln + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("vertices:") {
                if seen_content {
                    return Err(Error::Parse { line: line_no, message: "`vertices:` must precede all edges".into() });
                }
                for name in rest.split_whitespace() {
                    check_name(name, line_no)?;
                    if index.insert(name.to_string(), names.len()).is_some() {
                        return Err(Error::Parse { line: line_no, message: format!("duplicate vertex `{name}`") });
                    }
                    names.push(name.to_string());
                }
                fixed = true;
                seen_content = true;
                continue;
            }
            seen_content = true;
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() != 2 {
                return Err(Error::Parse { line: line_no, message: format!("expected `u v`, found `{line}`") });
            }
            let mut ids = [0; 2];
            for (k, tok) in tokens.iter().enumerate() {
                ids[k] = match index.get(*tok) {
                    Some(&i) => i,
                    None if fixed => {
                        return Err(Error::Parse { line: line_no, message: format!("unknown vertex `{tok}`") })
                    }
                    None => {
                        check_name(tok, line_no)?;
                        names.push(tok.to_string());
                        index.insert(tok.to_string(), names.len() - 1);
                        names.len() - 1
                    }
                };
            }
            if !edges.insert(Edge::new(ids[0], ids[1])) {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("duplicate edge {}-{}", tokens[0], tokens[1]),
                });
            }
        }
        if names.is_empty() {
            return Err(Error::Parse { line: 0, message: "empty input".into() });
        }
        Ok(Self::assemble(names, index, edges.into_iter().collect()))
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex(&self, name: &str) -> Result<VertexId> {
        self.index.get(name).copied().ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.edge_index.contains_key(&Edge::new(a, b))
    }

    pub fn has_loop(&self, v: VertexId) -> bool {
        self.has_edge(v, v)
    }

    /// Position of `e` in the canonical edge order.
    pub fn edge_id(&self, e: Edge) -> Option<usize> {
        self.edge_index.get(&e).copied()
    }

    pub fn edge_name(&self, e: Edge) -> String {
        let (a, b) = e.ends();
        format!("{}-{}", self.names[a], self.names[b])
    }

    pub fn parse_edge(&self, text: &str) -> Result<Edge> {
        let (a, b) =
            text.split_once('-').ok_or_else(|| Error::Parse { line: 0, message: format!("bad edge `{text}`") })?;
        let e = Edge::new(self.vertex(a.trim())?, self.vertex(b.trim())?);
        if !self.edge_index.contains_key(&e) {
            return Err(Error::UnknownEdge(text.to_string()));
        }
        Ok(e)
    }

    /// Connected component label of each vertex; labels follow least vertex.
    pub fn component_of(&self, v: VertexId) -> usize {
        self.component[v]
    }

    pub fn same_component(&self, a: VertexId, b: VertexId) -> bool {
        self.component[a] == self.component[b]
    }

    /// Partition of the vertices into connected components, ordered by least vertex.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let count = self.component.iter().copied().max().map_or(0, |m| m + 1);
        let mut parts = vec![Vec::new(); count];
        for (v, &c) in self.component.iter().enumerate() {
            parts[c].push(v);
        }
        parts
    }

    pub fn is_connected(&self) -> bool {
        self.component.iter().all(|&c| c == 0)
    }

    /// All induced odd circuits of length at most `max_len`, loops included,
    /// each listed once, ordered by length then vertex sequence.
    pub fn induced_odd_circuits(&self, max_len: usize) -> Vec<Circuit> {
        let mut out = Vec::new();
        if max_len == 0 {
            return out;
        }
        for v in 0..self.vertex_count() {
            if self.has_loop(v) {
                out.push(Circuit { verts: vec![v] });
            }
        }
        let mut path = Vec::new();
        for s in 0..self.vertex_count() {
            if self.has_loop(s) {
                continue;
            }
            path.clear();
            path.push(s);
            self.extend_induced(&mut path, max_len, &mut out);
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.verts.cmp(&b.verts)));
        out
    }

    fn extend_induced(&self, path: &mut Vec<VertexId>, max_len: usize, out: &mut Vec<Circuit>) {
        let s = path[0];
        let last = *path.last().unwrap();
        for &n in &self.adj[last] {
            if n <= s || self.has_loop(n) || path.contains(&n) {
                continue;
            }
            let interior = if path.len() > 1 { &path[1..path.len() - 1] } else { &[][..] };
            if interior.iter().any(|&p| self.has_edge(p, n)) {
                continue;
            }
            let closes = path.len() >= 2 && self.has_edge(n, s);
            if closes {
                let len = path.len() + 1;
                if len % 2 == 1 && len <= max_len && path[1] < n {
                    let mut verts = path.clone();
                    verts.push(n);
                    out.push(Circuit { verts });
                }
            } else if path.len() + 1 < max_len {
                path.push(n);
                self.extend_induced(path, max_len, out);
                path.pop();
            }
        }
    }

    /// All simple circuits of even length (at least four), each listed once.
    pub fn even_simple_circuits(&self) -> Vec<Circuit> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        for s in 0..self.vertex_count() {
            path.clear();
            path.push(s);
            self.extend_simple(&mut path, &mut out);
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.verts.cmp(&b.verts)));
        out
    }

    fn extend_simple(&self, path: &mut Vec<VertexId>, out: &mut Vec<Circuit>) {
        let s = path[0];
        let last = *path.last().unwrap();
        for &n in &self.adj[last] {
            if n <= s || path.contains(&n) {
                continue;
            }
            path.push(n);
            if path.len() >= 4 && path.len().is_multiple_of(2) && self.has_edge(n, s) && path[1] < n {
                out.push(Circuit { verts: path.clone() });
            }
            self.extend_simple(path, out);
            path.pop();
        }
    }

    /// Shortest walk from any vertex of `from` to any vertex of `to`, as a
    /// vertex sequence. Ties go to the lexicographically least sequence.
    pub fn shortest_path_between(&self, from: &[VertexId], to: &[VertexId]) -> Option<Vec<VertexId>> {
        let n = self.vertex_count();
        let mut best: Vec<Option<Vec<VertexId>>> = vec![None; n];
        let mut frontier: Vec<VertexId> = Vec::new();
        let mut sources: Vec<VertexId> = from.to_vec();
        sources.sort_unstable();
        sources.dedup();
        for &s in &sources {
            best[s] = Some(vec![s]);
            frontier.push(s);
        }
        loop {
            let mut hits: Vec<&Vec<VertexId>> = to.iter().filter_map(|&t| best[t].as_ref()).collect();
            if !hits.is_empty() {
                hits.sort();
                return Some(hits[0].clone());
            }
            let mut next: Vec<VertexId> = Vec::new();
            let mut candidate: HashMap<VertexId, Vec<VertexId>> = HashMap::new();
            for &x in &frontier {
                let base = best[x].clone().unwrap();
                for &y in &self.adj[x] {
                    if best[y].is_some() {
                        continue;
                    }
                    let mut p = base.clone();
                    p.push(y);
                    match candidate.get(&y) {
                        Some(q) if *q <= p => {}
                        _ => {
                            candidate.insert(y, p);
                        }
                    }
                }
            }
            if candidate.is_empty() {
                return None;
            }
            for (y, p) in candidate {
                best[y] = Some(p);
                next.push(y);
            }
            next.sort_unstable();
            frontier = next;
        }
    }
}

fn check_name(name: &str, line: usize) -> Result<()> {
    let bad = |c: char| c.is_whitespace() || matches!(c, '-' | '|' | ':' | '(' | ')' | ',' | '=' | '^' | '#');
    if name.is_empty() || name.chars().any(bad) {
        return Err(Error::Parse { line, message: format!("invalid vertex name `{name}`") });
    }
    Ok(())
}

/// A walk given by its vertex sequence. For a closed walk of length `L` the
/// sequence holds `L` vertices and the last step returns to the first; an open
/// walk of length `L` holds `L + 1` vertices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Walk {
    verts: Vec<VertexId>,
    closed: bool,
}

impl Walk {
    pub fn closed(g: &Graph, verts: Vec<VertexId>) -> Result<Self> {
        let w = Walk { verts, closed: true };
        w.check(g)?;
        Ok(w)
    }

    pub fn open(g: &Graph, verts: Vec<VertexId>) -> Result<Self> {
        if verts.is_empty() {
            return Err(Error::InvalidWalk("an open walk needs a start vertex".into()));
        }
        let w = Walk { verts, closed: false };
        w.check(g)?;
        Ok(w)
    }

    pub(crate) fn closed_unchecked(verts: Vec<VertexId>) -> Self {
        Walk { verts, closed: true }
    }

    fn check(&self, g: &Graph) -> Result<()> {
        for e in self.edges() {
            if !g.edge_index.contains_key(&e) {
                return Err(Error::InvalidWalk(format!("{} is not an edge", g.edge_name(e))));
            }
        }
        Ok(())
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.verts
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn len(&self) -> usize {
        if self.closed {
            self.verts.len()
        } else {
            self.verts.len().saturating_sub(1)
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_even(&self) -> bool {
        self.len().is_multiple_of(2)
    }

    pub fn start(&self) -> Option<VertexId> {
        self.verts.first().copied()
    }

    pub fn end(&self) -> Option<VertexId> {
        if self.closed {
            self.verts.first().copied()
        } else {
            self.verts.last().copied()
        }
    }

    /// Edges in traversal order.
    pub fn edges(&self) -> Vec<Edge> {
        let n = self.verts.len();
        if self.closed {
            (0..n).map(|i| Edge::new(self.verts[i], self.verts[(i + 1) % n])).collect()
        } else {
            self.verts.windows(2).map(|w| Edge::new(w[0], w[1])).collect()
        }
    }

    pub fn reversed(&self) -> Walk {
        let mut verts = self.verts.clone();
        if self.closed && !verts.is_empty() {
            verts[1..].reverse();
        } else {
            verts.reverse();
        }
        Walk { verts, closed: self.closed }
    }

    /// Least rotation, then least of the two directions (closed walks only;
    /// open walks are returned unchanged).
    pub fn canonical(&self) -> Walk {
        if !self.closed || self.verts.is_empty() {
            return self.clone();
        }
        let fwd = least_rotation(&self.verts);
        let bwd = least_rotation(&self.reversed().verts);
        Walk { verts: fwd.min(bwd), closed: true }
    }

    /// Splits at a vertex occurring twice with an even gap, if any.
    pub fn split_point(&self) -> Option<(usize, usize)> {
        if !self.closed {
            return None;
        }
        let n = self.verts.len();
        for i in 0..n {
            for j in i + 1..n {
                if self.verts[i] == self.verts[j] && (j - i) % 2 == 0 {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn has_repeated_vertex(&self) -> bool {
        let mut seen = BTreeSet::new();
        !self.verts.iter().all(|v| seen.insert(*v))
    }

    pub fn display(&self, g: &Graph) -> String {
        let mut parts: Vec<&str> = self.verts.iter().map(|&v| g.name(v)).collect();
        if self.closed {
            if let Some(&first) = self.verts.first() {
                parts.push(g.name(first));
            }
        }
        parts.join("-")
    }
}

fn least_rotation(v: &[VertexId]) -> Vec<VertexId> {
    (0..v.len()).map(|r| v[r..].iter().chain(&v[..r]).copied().collect::<Vec<_>>()).min().unwrap_or_default()
}

/// A closed walk with pairwise distinct vertices. A loop is a circuit of
/// length one. Stored canonically: least vertex first, then the direction
/// whose second vertex is smaller.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Circuit {
    verts: Vec<VertexId>,
}

impl Circuit {
    pub fn new(g: &Graph, verts: Vec<VertexId>) -> Result<Self> {
        let c = Self::canonical_from(verts)?;
        for e in c.edges() {
            if !g.has_edge(e.ends().0, e.ends().1) {
                return Err(Error::InvalidCircuit(format!("{} is not an edge", g.edge_name(e))));
            }
        }
        Ok(c)
    }

    pub(crate) fn canonical_from(mut verts: Vec<VertexId>) -> Result<Self> {
        if verts.is_empty() || verts.len() == 2 {
            return Err(Error::InvalidCircuit(format!("length {} is not allowed", verts.len())));
        }
        let distinct: BTreeSet<_> = verts.iter().collect();
        if distinct.len() != verts.len() {
            return Err(Error::InvalidCircuit("repeated vertex".into()));
        }
        let pos = verts.iter().enumerate().min_by_key(|(_, v)| **v).unwrap().0;
        verts.rotate_left(pos);
        if verts.len() >= 3 && verts[1] > verts[verts.len() - 1] {
            verts[1..].reverse();
        }
        Ok(Circuit { verts })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.verts
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.verts.len() % 2 == 1
    }

    pub fn is_loop(&self) -> bool {
        self.verts.len() == 1
    }

    pub fn least_vertex(&self) -> VertexId {
        self.verts[0]
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.verts.contains(&v)
    }

    pub fn shares_vertex(&self, other: &Circuit) -> bool {
        self.verts.iter().any(|v| other.contains(*v))
    }

    pub fn edges(&self) -> Vec<Edge> {
        Walk::closed_unchecked(self.verts.clone()).edges()
    }

    /// The circuit as a closed walk starting at `x`.
    pub fn walk_from(&self, x: VertexId) -> Walk {
        let pos = self.verts.iter().position(|&v| v == x).expect("vertex on circuit");
        let mut verts = self.verts.clone();
        verts.rotate_left(pos);
        Walk::closed_unchecked(verts)
    }

    /// Alternate edges of the circuit read from `x`: the first, third, ...
    /// edges when `first` is set, otherwise the second, fourth, ... edges.
    /// On an odd circuit the first class covers `x` twice and every other
    /// vertex once; the second class covers every vertex except `x` once.
    pub fn alternate_from(&self, x: VertexId, first: bool) -> Vec<Edge> {
        let start = if first { 0 } else { 1 };
        self.walk_from(x).edges().into_iter().skip(start).step_by(2).collect()
    }

    pub fn display(&self, g: &Graph) -> String {
        self.verts.iter().map(|&v| g.name(v)).collect::<Vec<_>>().join("-")
    }
}

/// One step of a walk inside a [`SplitTree`]. A step is either a real edge
/// (a path of two vertices) or an edge fused at a removed vertex, which
/// remembers the real path it stands for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    path: Vec<VertexId>,
}

impl Step {
    fn real(a: VertexId, b: VertexId) -> Self {
        Step { path: vec![a, b] }
    }

    fn fuse(first: &Step, second: &Step) -> Self {
        let mut path = first.path.clone();
        path.extend_from_slice(&second.path[1..]);
        Step { path }
    }

    pub fn from(&self) -> VertexId {
        self.path[0]
    }

    pub fn to(&self) -> VertexId {
        *self.path.last().unwrap()
    }

    pub fn is_fused(&self) -> bool {
        self.path.len() > 2
    }

    pub fn real_edges(&self) -> Vec<Edge> {
        self.path.windows(2).map(|w| Edge::new(w[0], w[1])).collect()
    }
}

/// Recursive decomposition of an even closed walk into even circuits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitTree {
    /// An even circuit, possibly empty or a single edge traversed twice.
    Circuit { steps: Vec<Step> },
    /// The walk, rotated left by `offset`, is `first` followed by `second`,
    /// both even closed walks based at `vertex`.
    Split { vertex: VertexId, offset: usize, first: Box<SplitTree>, second: Box<SplitTree> },
    /// The walk, rotated left by `offset`, is two odd closed walks through
    /// `vertex` sharing only that vertex. Each child is the odd walk with
    /// `vertex` removed and its two edges at `vertex` fused into the last
    /// step; `glue` keeps the original steps at `vertex` for each child.
    Fusion { vertex: VertexId, offset: usize, glue: [Vec<Step>; 2], first: Box<SplitTree>, second: Box<SplitTree> },
}

impl SplitTree {
    /// The walk this node decomposes, reconstructed from its children.
    pub fn steps(&self) -> Vec<Step> {
        match self {
            SplitTree::Circuit { steps } => steps.clone(),
            SplitTree::Split { offset, first, second, .. } => {
                let mut w = first.steps();
                w.extend(second.steps());
                w.rotate_right(*offset);
                w
            }
            SplitTree::Fusion { offset, glue, first, second, .. } => {
                let mut w = unfuse(&first.steps(), &glue[0]);
                w.extend(unfuse(&second.steps(), &glue[1]));
                w.rotate_right(*offset);
                w
            }
        }
    }

    /// The real edge sequence of the reconstructed walk.
    pub fn real_edges(&self) -> Vec<Edge> {
        self.steps().iter().flat_map(Step::real_edges).collect()
    }

    pub fn leaves(&self) -> Vec<&Vec<Step>> {
        match self {
            SplitTree::Circuit { steps } => vec![steps],
            SplitTree::Split { first, second, .. } | SplitTree::Fusion { first, second, .. } => {
                let mut l = first.leaves();
                l.extend(second.leaves());
                l
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            SplitTree::Circuit { .. } => 0,
            SplitTree::Split { first, second, .. } | SplitTree::Fusion { first, second, .. } => {
                1 + first.depth().max(second.depth())
            }
        }
    }
}

fn unfuse(part: &[Step], glue: &[Step]) -> Vec<Step> {
    if part.is_empty() {
        return glue.to_vec();
    }
    let mut w = vec![glue[0].clone()];
    w.extend_from_slice(&part[..part.len() - 1]);
    w.push(glue[1].clone());
    w
}

/// Decomposes an even closed walk: split at a vertex into two even closed
/// walks when possible, otherwise remove a repeated vertex by fusing its
/// edges, otherwise the walk is an even circuit.
pub fn split_even_closed_walk(w: &Walk) -> Result<SplitTree> {
    if !w.is_closed() || !w.is_even() {
        return Err(Error::Precondition("walk must be closed and of even length".into()));
    }
    let v = w.vertices();
    let steps: Vec<Step> = (0..v.len()).map(|i| Step::real(v[i], v[(i + 1) % v.len()])).collect();
    Ok(split_steps(steps))
}

fn split_steps(steps: Vec<Step>) -> SplitTree {
    let n = steps.len();
    let at = |i: usize| steps[i].from();
    let mut odd_gap = None;
    for i in 0..n {
        for j in i + 1..n {
            if at(i) != at(j) {
                continue;
            }
            if (j - i) % 2 == 0 {
                let mut rot = steps.clone();
                rot.rotate_left(i);
                let second = rot.split_off(j - i);
                return SplitTree::Split {
                    vertex: at(i),
                    offset: i,
                    first: Box::new(split_steps(rot)),
                    second: Box::new(split_steps(second)),
                };
            }
            if odd_gap.is_none() {
                odd_gap = Some((i, j));
            }
        }
    }
    let Some((i, j)) = odd_gap else {
        return SplitTree::Circuit { steps };
    };
    let mut rot = steps.clone();
    rot.rotate_left(i);
    let second = rot.split_off(j - i);
    let (p1, g1) = fuse_out(rot);
    let (p2, g2) = fuse_out(second);
    SplitTree::Fusion {
        vertex: at(i),
        offset: i,
        glue: [g1, g2],
        first: Box::new(split_steps(p1)),
        second: Box::new(split_steps(p2)),
    }
}

/// Removes the base vertex of an odd closed walk, fusing its first and last
/// steps. Returns the even remainder and the removed steps.
fn fuse_out(mut odd: Vec<Step>) -> (Vec<Step>, Vec<Step>) {
    if odd.len() == 1 {
        return (Vec::new(), odd);
    }
    let first = odd.remove(0);
    let last = odd.pop().unwrap();
    odd.push(Step::fuse(&last, &first));
    (odd, vec![first, last])
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g_loops() -> Graph {
        Graph::parse("x1 x1\nx2 x2\nx3 x3\nx1 x4\nx2 x4\nx3 x4\n").unwrap()
    }

    fn g_tri2() -> Graph {
        Graph::parse("a b\nb c\na c\nd e\ne f\nd f\nc g\ng d\n").unwrap()
    }

    #[test]
    fn parses_loop_and_edge() {
        let g = Graph::parse("x1 x1\nx1 x4").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_loop(0));
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        match Graph::parse("a b\na b") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        match Graph::parse("vertices: a b\na c") {
            Err(Error::Parse { line, message }) => {
                assert_eq!(line, 2);
                assert!(message.contains("unknown vertex"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(Graph::parse("# nothing here\n\n").is_err());
        assert!(Graph::parse("b a\na b").is_err());
    }

    #[test]
    fn vertices_line_fixes_order() {
        let g = Graph::parse("# comment\nvertices: b a c\na b # trailing\n").unwrap();
        assert_eq!(g.names(), &["b", "a", "c"]);
        assert_eq!(g.connected_components(), vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn json_format() {
        let g = Graph::parse(r#"{"vertices":["a","b"],"edges":[["a","b"],["b","b"]]}"#).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_loop(1));
        assert!(Graph::parse(r#"{"vertices":["a"],"edges":[["a","z"]]}"#).is_err());
    }

    #[test]
    fn g_loops_shape() {
        let g = g_loops();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.connected_components().len(), 1);
        let c = g.induced_odd_circuits(4);
        let loops: Vec<_> = c.iter().map(|c| c.vertices().to_vec()).collect();
        assert_eq!(loops, vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn components() {
        let g = Graph::parse("a b\nb c\na c\nd e\ne f\nd f").unwrap();
        assert_eq!(g.connected_components().len(), 2);
        let g = Graph::parse("vertices: a b\n").unwrap();
        assert_eq!(g.connected_components(), vec![vec![0], vec![1]]);
    }

    #[test]
    fn odd_circuits_of_examples() {
        let c4 = Graph::parse("a b\nb c\nc d\nd a").unwrap();
        assert!(c4.induced_odd_circuits(4).is_empty());
        let g = g_tri2();
        let c: Vec<String> = g.induced_odd_circuits(7).iter().map(|c| c.display(&g)).collect();
        assert_eq!(c, vec!["a-b-c", "d-e-f"]);
        // a 5-cycle with a chord has no induced 5-circuit
        let g = Graph::parse("a b\nb c\nc d\nd e\ne a\na c").unwrap();
        let c: Vec<String> = g.induced_odd_circuits(5).iter().map(|c| c.display(&g)).collect();
        assert_eq!(c, vec!["a-b-c"]);
    }

    #[test]
    fn canonical_closed_walk() {
        let w = Walk::closed_unchecked(vec![2, 0, 1, 3]);
        assert_eq!(w.canonical().vertices(), &[0, 1, 3, 2]);
        let w = Walk::closed_unchecked(vec![3, 1, 0, 2]);
        assert_eq!(w.canonical().vertices(), &[0, 1, 3, 2]);
    }

    #[test]
    fn shortest_path_ties() {
        let g = Graph::parse("a b\nb c\na d\nd c").unwrap();
        assert_eq!(g.shortest_path_between(&[0], &[2]), Some(vec![0, 1, 2]));
    }

    #[test]
    fn split_star_walk() {
        let g = Graph::parse("a b\na d").unwrap();
        let w = Walk::closed(&g, vec![0, 1, 0, 2]).unwrap();
        let t = split_even_closed_walk(&w).unwrap();
        match &t {
            SplitTree::Split { vertex, .. } => assert_eq!(*vertex, 0),
            other => panic!("expected split, got {other:?}"),
        }
        assert_eq!(t.real_edges(), w.edges());
    }

    #[test]
    fn c4_is_a_base_circuit() {
        let g = Graph::parse("a b\nb c\nc d\nd a").unwrap();
        let w = Walk::closed(&g, vec![0, 1, 2, 3]).unwrap();
        assert!(matches!(split_even_closed_walk(&w).unwrap(), SplitTree::Circuit { .. }));
    }

    #[test]
    fn figure_eight_fuses() {
        // two triangles sharing v: v a b v c d v
        let g = Graph::parse("v a\na b\nb v\nv c\nc d\nd v").unwrap();
        let w = Walk::closed(&g, vec![0, 1, 2, 0, 3, 4]).unwrap();
        let t = split_even_closed_walk(&w).unwrap();
        match &t {
            SplitTree::Fusion { vertex, first, second, .. } => {
                assert_eq!(*vertex, 0);
                assert_eq!(first.steps().len(), 2);
                assert_eq!(second.steps().len(), 2);
            }
            other => panic!("expected fusion, got {other:?}"),
        }
        assert_eq!(t.real_edges(), w.edges());
    }

    #[test]
    fn split_rejects_odd_or_open() {
        let g = g_loops();
        let w = Walk::closed(&g, vec![0]).unwrap();
        assert!(split_even_closed_walk(&w).is_err());
        let w = Walk::open(&g, vec![0, 3]).unwrap();
        assert!(split_even_closed_walk(&w).is_err());
    }

    #[test]
    fn alternate_edges_of_a_triangle() {
        let g = g_tri2();
        let c = Circuit::new(&g, vec![0, 1, 2]).unwrap();
        let doubled = c.alternate_from(2, true);
        assert_eq!(doubled.len(), 2);
        assert!(doubled.iter().all(|e| e.touches(2)));
        assert_eq!(c.alternate_from(2, false), vec![Edge::new(0, 1)]);
    }
}
