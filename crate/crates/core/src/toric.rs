//! Words in edges and pair variables, the relation classes generating the
//! toric ideal, and the saturation check on fibers.
//!
//! A pair variable exists only for an exceptional pair. Any other pair of
//! odd circuits stands for its edge expansion (see [`pair_value`]), so every
//! relation below is stated between genuine words over the minimal
//! generators.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};
use crate::generators::{
    destroy_sides, enumerate_exceptional_pairs, minimal_generators, reduce_circuit_pair, ExceptionalPair, Generator,
};
use crate::graph::{Circuit, Edge, Graph, VertexId, Walk};
use crate::search::{self, EdgePool};
use crate::semigroup::WeightVector;
use crate::words::{destroy_is_minimal, equal_words, rotation_is_minimal, LogEntry, Move, MoveKind, MoveLog, Word};

/// A word over edges and exceptional pairs.
pub type PairWord = Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelationClass {
    PairSwap,
    Rotation,
    PairDestroy,
    PairShift,
}

impl RelationClass {
    pub fn name(self) -> &'static str {
        match self {
            RelationClass::PairSwap => "pair-swap",
            RelationClass::Rotation => "rotation",
            RelationClass::PairDestroy => "pair-destroy",
            RelationClass::PairShift => "pair-shift-shared-cycle",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "pair-swap" => RelationClass::PairSwap,
            "rotation" => RelationClass::Rotation,
            "pair-destroy" => RelationClass::PairDestroy,
            "pair-shift-shared-cycle" | "pair-shift" => RelationClass::PairShift,
            _ => return Err(Error::Parse { line: 0, message: format!("unknown relation class `{s}`") }),
        })
    }
}

/// A binomial `left - right` of the toric ideal with its class.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinomialRelation {
    class: RelationClass,
    left: PairWord,
    right: PairWord,
}

impl BinomialRelation {
    pub fn new(class: RelationClass, left: PairWord, right: PairWord) -> Result<Self> {
        if left.weight() != right.weight() {
            return Err(Error::InvalidMove(format!("{} relation with unequal weights", class.name())));
        }
        Ok(BinomialRelation { class, left, right })
    }

    /// Puts the side holding the pair variable of a destroying relation on
    /// the left, otherwise the lesser side.
    fn oriented(class: RelationClass, a: PairWord, b: PairWord) -> Self {
        let swap = match class {
            RelationClass::PairDestroy => !has_pair(&a),
            _ => b < a,
        };
        let (left, right) = if swap { (b, a) } else { (a, b) };
        BinomialRelation { class, left, right }
    }

    pub fn class(&self) -> RelationClass {
        self.class
    }

    pub fn left(&self) -> &PairWord {
        &self.left
    }

    pub fn right(&self) -> &PairWord {
        &self.right
    }

    pub fn display(&self, g: &Graph) -> String {
        format!("{} = {}", self.left.display(g), self.right.display(g))
    }

    pub fn binomial(&self, g: &Graph) -> String {
        format!("{} - {}", self.left.display(g), self.right.display(g))
    }
}

fn has_pair(w: &Word) -> bool {
    w.iter().any(|(g, _)| matches!(g, Generator::Pair(_)))
}

/// Search bounds for relation enumeration: the length of rotation and
/// destroying walks, and the number of edges in a shifting configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_walk: usize,
    pub max_support: usize,
}

impl Bounds {
    pub fn for_graph(g: &Graph) -> Self {
        Bounds { max_walk: 2 * g.vertex_count(), max_support: g.vertex_count() }
    }
}

/// The product of the cycles of two odd circuits of one component as a
/// word: the pair variable if they form an exceptional pair, otherwise its
/// rewriting into edges (all edges of the circuit when they coincide).
pub fn pair_value(g: &Graph, a: &Circuit, b: &Circuit) -> Result<PairWord> {
    let n = g.vertex_count();
    if a == b {
        return Ok(Word::from_edges(n, a.edges()));
    }
    if let Ok(p) = ExceptionalPair::new(g, a.clone(), b.clone()) {
        return Ok(Word::from_generators(n, [Generator::Pair(p)]));
    }
    Ok(Word::from_generators(n, reduce_circuit_pair(g, a, b)?.generators()))
}

/// Replaces every pair variable by its two cycles.
pub fn pairs_to_cycles(w: &PairWord) -> Word {
    let mut out = Word::empty(w.vertex_count());
    for (gen, k) in w.iter() {
        match gen {
            Generator::Pair(p) => {
                out.push(Generator::Cycle(p.first().clone()), k);
                out.push(Generator::Cycle(p.second().clone()), k);
            }
            _ => out.push(gen.clone(), k),
        }
    }
    out
}

/// Pairs up the cycles of `w` and replaces each pair by [`pair_value`].
/// Without an explicit pairing, the cycles of each component are matched
/// consecutively in sorted order.
pub fn cycles_to_pairs(g: &Graph, w: &Word, pairing: Option<&[(Circuit, Circuit)]>) -> Result<PairWord> {
    let mut rest = Word::empty(w.vertex_count());
    let mut cycles: Vec<Circuit> = Vec::new();
    for (gen, k) in w.iter() {
        match gen {
            Generator::Cycle(c) => cycles.extend(std::iter::repeat_n(c.clone(), k as usize)),
            _ => rest.push(gen.clone(), k),
        }
    }
    let matched: Vec<(Circuit, Circuit)> = match pairing {
        Some(p) => {
            let mut want: Vec<Circuit> = p.iter().flat_map(|(a, b)| [a.clone(), b.clone()]).collect();
            want.sort();
            if want != cycles {
                return Err(Error::Precondition("pairing does not match the cycles of the word".into()));
            }
            p.to_vec()
        }
        None => {
            let mut by_comp: BTreeMap<usize, Vec<Circuit>> = BTreeMap::new();
            for c in cycles {
                by_comp.entry(g.component_of(c.least_vertex())).or_default().push(c);
            }
            let mut out = Vec::new();
            for (_, cs) in by_comp {
                if cs.len() % 2 == 1 {
                    return Err(Error::Precondition(format!(
                        "odd number of cycles in the component of {}",
                        g.name(cs[0].least_vertex())
                    )));
                }
                out.extend(cs.chunks(2).map(|p| (p[0].clone(), p[1].clone())));
            }
            out
        }
    };
    for (a, b) in &matched {
        rest = rest.plus(&pair_value(g, a, b)?);
    }
    Ok(rest)
}

/// Word equality for words that may hold pair variables: pairs are split
/// into their cycles and the cycle-word algorithm is run. When a pair was
/// present, its cycle moves are reported as pair moves.
pub fn equal_pair_words(g: &Graph, w1: &PairWord, w2: &PairWord) -> Result<Option<MoveLog>> {
    let relabel = has_pair(w1) || has_pair(w2);
    let Some(log) = equal_words(g, &pairs_to_cycles(w1), &pairs_to_cycles(w2))? else {
        return Ok(None);
    };
    if !relabel {
        return Ok(Some(log));
    }
    let entries = log
        .entries
        .into_iter()
        .map(|e| match e {
            LogEntry::Move(m) => LogEntry::Move(match m.kind() {
                MoveKind::CycleShift => m.relabeled(MoveKind::PairShift),
                MoveKind::CycleDestroy => m.relabeled(MoveKind::PairDestroy),
                _ => m,
            }),
            other => other,
        })
        .collect();
    Ok(Some(MoveLog { entries }))
}

/// The minimal generators, odd circuits and circuit-pair values of a graph,
/// precomputed for relation enumeration and fiber saturation.
pub struct RelationSystem<'g> {
    g: &'g Graph,
    bounds: Bounds,
    circuits: Vec<Circuit>,
    /// Indices of the circuits in each component.
    components: Vec<Vec<usize>>,
    values: BTreeMap<(usize, usize), PairWord>,
    gens: Vec<(Generator, WeightVector)>,
    /// For each vertex, one past the last generator index touching it.
    last_touch: Vec<usize>,
}

impl<'g> RelationSystem<'g> {
    pub fn new(g: &'g Graph, bounds: Bounds) -> Result<Self> {
        let n = g.vertex_count();
        let circuits = g.induced_odd_circuits(n);
        let mut by_comp: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, c) in circuits.iter().enumerate() {
            by_comp.entry(g.component_of(c.least_vertex())).or_default().push(i);
        }
        let components: Vec<Vec<usize>> = by_comp.into_values().collect();
        let mut values = BTreeMap::new();
        for comp in &components {
            for (a, &i) in comp.iter().enumerate() {
                for &j in &comp[a..] {
                    values.insert((i, j), pair_value(g, &circuits[i], &circuits[j])?);
                }
            }
        }
        let gens: Vec<(Generator, WeightVector)> =
            minimal_generators(g).into_iter().map(|x| (x.clone(), x.weight(n))).collect();
        let mut last_touch = vec![0; n];
        for (i, (_, w)) in gens.iter().enumerate() {
            for (v, slot) in last_touch.iter_mut().enumerate() {
                if w.get(v) > 0 {
                    *slot = i + 1;
                }
            }
        }
        Ok(RelationSystem { g, bounds, circuits, components, values, gens, last_touch })
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    pub fn bounds(&self) -> Bounds {
        self.bounds
    }

    fn value(&self, i: usize, j: usize) -> &PairWord {
        &self.values[&(i.min(j), i.max(j))]
    }

    /// All relations of the four classes within the bounds, deduplicated,
    /// sorted by class and then by sides.
    pub fn enumerate_relations(&self) -> Vec<BinomialRelation> {
        let mut out: BTreeSet<BinomialRelation> = BTreeSet::new();
        let mut add = |class, a: Word, b: Word| {
            if a != b {
                out.insert(BinomialRelation::oriented(class, a, b));
            }
        };
        for comp in &self.components {
            for (i, j, k, l) in quadruples(comp) {
                let sides = [
                    self.value(i, j).plus(self.value(k, l)),
                    self.value(i, k).plus(self.value(j, l)),
                    self.value(i, l).plus(self.value(j, k)),
                ];
                for (x, y) in [(0, 1), (0, 2), (1, 2)] {
                    add(RelationClass::PairSwap, sides[x].clone(), sides[y].clone());
                }
            }
        }
        let g = self.g;
        let n = g.vertex_count();
        let (mut fa, mut fb) = (EdgePool::free(g), EdgePool::free(g));
        search::alternating_cycles(&mut fa, &mut fb, self.bounds.max_walk, true, &mut |v| {
            let walk = Walk::closed_unchecked(v.to_vec());
            if rotation_is_minimal(&walk) {
                let m = Move::rotation(g, &walk).expect("walk in graph");
                add(RelationClass::Rotation, m.source().clone(), m.target().clone());
            }
            false
        });
        for p in enumerate_exceptional_pairs(g) {
            let pw = Word::from_generators(n, [Generator::Pair(p.clone())]);
            for (c1, c2) in [(p.first(), p.second()), (p.second(), p.first())] {
                for &x in c1.vertices() {
                    for s in [true, false] {
                        search::destroy_walks(x, c2, s, &mut fa, &mut fb, self.bounds.max_walk, true, &mut |path| {
                            if destroy_is_minimal(c1, c2, path) {
                                let (neg, pos) = destroy_sides(c1, c2, path, s);
                                add(
                                    RelationClass::PairDestroy,
                                    pw.plus(&Word::from_edges(n, neg)),
                                    Word::from_edges(n, pos),
                                );
                            }
                            false
                        });
                    }
                }
            }
        }
        for comp in &self.components {
            for &c in comp {
                for &c2 in comp {
                    if c == c2 {
                        continue;
                    }
                    let (from, to) = (&self.circuits[c], &self.circuits[c2]);
                    search::shift_systems(from, to, &mut fa, &mut fb, self.bounds.max_support, &mut |walks| {
                        let Some((plus, minus)) = shift_edges(g, from, to, walks) else {
                            return false;
                        };
                        for &d in comp {
                            add(RelationClass::PairShift, self.value(d, c).plus(&plus), self.value(d, c2).plus(&minus));
                        }
                        false
                    });
                }
            }
        }
        out.into_iter().collect()
    }

    /// Every word over the minimal generators with at most `max_len`
    /// factors and weight `f`, sorted.
    pub fn fiber_words(&self, f: &WeightVector, max_len: usize) -> Vec<PairWord> {
        let mut out = Vec::new();
        if f.as_slice().iter().any(|&x| x < 0) || f.len() != self.g.vertex_count() {
            return out;
        }
        let mut rem = f.as_slice().to_vec();
        let mut picked = Vec::new();
        self.fiber_rec(0, &mut rem, max_len, &mut picked, &mut out);
        out.sort();
        out
    }

    fn fiber_rec(&self, start: usize, rem: &mut [i64], left: usize, picked: &mut Vec<usize>, out: &mut Vec<Word>) {
        let Some(v) = rem.iter().position(|&x| x > 0) else {
            let n = self.g.vertex_count();
            out.push(Word::from_generators(n, picked.iter().map(|&i| self.gens[i].0.clone())));
            return;
        };
        if left == 0 {
            return;
        }
        // the least uncovered vertex needs a generator at index >= start
        for i in start..self.last_touch[v] {
            let w = self.gens[i].1.as_slice();
            if w.iter().zip(rem.iter()).any(|(a, b)| a > b) {
                continue;
            }
            for (r, a) in rem.iter_mut().zip(w) {
                *r -= a;
            }
            picked.push(i);
            self.fiber_rec(i, rem, left - 1, picked, out);
            picked.pop();
            for (r, a) in rem.iter_mut().zip(w) {
                *r += a;
            }
        }
    }

    /// Words reachable from `w` by one substitution of an enumerated
    /// relation applied left to right. Every relation instance is found
    /// from a word containing its left side; the classes are closed under
    /// exchanging sides except destroying, which is read from its pair side.
    pub fn neighbors(&self, w: &PairWord) -> Vec<PairWord> {
        let g = self.g;
        let n = g.vertex_count();
        let mut out: BTreeSet<Word> = BTreeSet::new();
        let edges = w.edge_counts();
        let k: usize = edges.values().map(|&x| x as usize).sum();
        let mut free = EdgePool::free(g);

        let mut plus = EdgePool::counted(edges.clone());
        let max_rot = self.bounds.max_walk.min(2 * k);
        search::alternating_cycles(&mut plus, &mut free, max_rot, true, &mut |v| {
            let walk = Walk::closed_unchecked(v.to_vec());
            if rotation_is_minimal(&walk) {
                let m = Move::rotation(g, &walk).expect("walk in graph");
                if let Ok(x) = w.minus(m.source(), g) {
                    out.insert(x.plus(m.target()));
                }
            }
            false
        });

        let mut neg = EdgePool::counted(edges);
        let max_destroy = self.bounds.max_walk.min(2 * k + 1);
        for (gen, _) in w.iter() {
            let Generator::Pair(p) = gen else { continue };
            let base = w.minus(&Word::from_generators(n, [gen.clone()]), g).expect("pair present");
            for (c1, c2) in [(p.first(), p.second()), (p.second(), p.first())] {
                for &x in c1.vertices() {
                    for s in [true, false] {
                        search::destroy_walks(x, c2, s, &mut neg, &mut free, max_destroy, true, &mut |path| {
                            if destroy_is_minimal(c1, c2, path) {
                                let (ne, po) = destroy_sides(c1, c2, path, s);
                                if let Ok(x) = base.minus(&Word::from_edges(n, ne), g) {
                                    out.insert(x.plus(&Word::from_edges(n, po)));
                                }
                            }
                            false
                        });
                    }
                }
            }
        }

        for comp in &self.components {
            let present: Vec<(usize, usize)> = pairs_of(comp).filter(|&(i, j)| w.contains(self.value(i, j))).collect();
            // pair-swaps
            for (a, &(i, j)) in present.iter().enumerate() {
                for &(k2, l) in &present[a..] {
                    let lhs = self.value(i, j).plus(self.value(k2, l));
                    let Ok(rest) = w.minus(&lhs, g) else { continue };
                    out.insert(rest.plus(self.value(i, k2)).plus(self.value(j, l)));
                    out.insert(rest.plus(self.value(i, l)).plus(self.value(j, k2)));
                }
            }
            // pair-shifts with a shared cycle
            for &(i, j) in &present {
                let ends: &[(usize, usize)] = if i == j { &[(i, i)] } else { &[(i, j), (j, i)] };
                let rest = w.minus(self.value(i, j), g).expect("value present");
                let mut plus = EdgePool::counted(rest.edge_counts());
                for &(d, c) in ends {
                    let from = &self.circuits[c];
                    for &c2 in comp {
                        if c2 == c {
                            continue;
                        }
                        let to = &self.circuits[c2];
                        search::shift_systems(from, to, &mut plus, &mut free, self.bounds.max_support, &mut |walks| {
                            if let Some((ep, em)) = shift_edges(g, from, to, walks) {
                                if let Ok(x) = rest.minus(&ep, g) {
                                    out.insert(x.plus(&em).plus(self.value(d, c2)));
                                }
                            }
                            false
                        });
                    }
                }
            }
        }
        out.remove(w);
        out.into_iter().collect()
    }

    /// The classes of the fiber of `f` (words of at most `max_len` factors)
    /// under the enumerated relations.
    pub fn congruence_classes(&self, f: &WeightVector, max_len: usize) -> Vec<Vec<PairWord>> {
        let words = self.fiber_words(f, max_len);
        classes(&words, |w| self.neighbors(w))
    }

    pub fn congruence_check(&self, f: &WeightVector, max_len: usize) -> bool {
        self.congruence_classes(f, max_len).len() <= 1
    }
}

/// Groups `words` into classes of the equivalence generated by `next`,
/// ignoring images outside the list.
fn classes(words: &[Word], mut next: impl FnMut(&Word) -> Vec<Word>) -> Vec<Vec<Word>> {
    let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut uf = UnionFind::<usize>::new(words.len());
    for (i, w) in words.iter().enumerate() {
        for x in next(w) {
            if let Some(&j) = index.get(&x) {
                uf.union(i, j);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<Word>> = BTreeMap::new();
    for (i, w) in words.iter().enumerate() {
        groups.entry(uf.find(i)).or_default().push(w.clone());
    }
    let mut out: Vec<Vec<Word>> = groups.into_values().collect();
    out.sort();
    out
}

/// Classes of the fiber under the given relations only, each usable in
/// both directions.
pub fn congruence_classes_with(
    g: &Graph,
    f: &WeightVector,
    max_len: usize,
    relations: &[BinomialRelation],
) -> Result<Vec<Vec<PairWord>>> {
    let sys = RelationSystem::new(g, Bounds::for_graph(g))?;
    let words = sys.fiber_words(f, max_len);
    Ok(classes(&words, |w| {
        let mut out = Vec::new();
        for r in relations {
            for (a, b) in [(&r.left, &r.right), (&r.right, &r.left)] {
                if let Ok(x) = w.minus(a, g) {
                    out.push(x.plus(b));
                }
            }
        }
        out
    }))
}

pub fn enumerate_relations(g: &Graph, max_walk: usize, max_support: usize) -> Result<Vec<BinomialRelation>> {
    Ok(RelationSystem::new(g, Bounds { max_walk, max_support })?.enumerate_relations())
}

pub fn fiber_words(f: &WeightVector, g: &Graph, max_len: usize) -> Result<Vec<PairWord>> {
    Ok(RelationSystem::new(g, Bounds::for_graph(g))?.fiber_words(f, max_len))
}

/// Saturation check with the default bounds.
pub fn congruence_check(f: &WeightVector, g: &Graph, max_len: usize) -> Result<bool> {
    Ok(RelationSystem::new(g, Bounds::for_graph(g))?.congruence_check(f, max_len))
}

/// Whether the two sides have equal weight and the relation has the
/// structure of its class.
pub fn verify_relation(g: &Graph, r: &BinomialRelation) -> bool {
    if r.left.weight() != r.right.weight() || r.left == r.right {
        return false;
    }
    let n = g.vertex_count();
    let circuits = g.induced_odd_circuits(n);
    let value = |a: &Circuit, b: &Circuit| pair_value(g, a, b).ok();
    match r.class {
        RelationClass::PairSwap => {
            let idx: Vec<usize> = (0..circuits.len()).collect();
            let found = quadruples(&idx).any(|(i, j, k, l)| {
                let c = |x: usize| &circuits[x];
                if [j, k, l].iter().any(|&x| !g.same_component(c(i).least_vertex(), c(x).least_vertex())) {
                    return false;
                }
                let sides: Vec<Option<Word>> = [(i, j, k, l), (i, k, j, l), (i, l, j, k)]
                    .iter()
                    .map(|&(a, b, x, y)| Some(value(c(a), c(b))?.plus(&value(c(x), c(y))?)))
                    .collect();
                let hit = |w: &Word| sides.iter().any(|s| s.as_ref() == Some(w));
                hit(&r.left) && hit(&r.right)
            });
            found
        }
        RelationClass::Rotation => {
            if has_non_edge(&r.left) || has_non_edge(&r.right) {
                return false;
            }
            let mut plus = EdgePool::counted(r.left.edge_counts());
            let mut minus = EdgePool::counted(r.right.edge_counts());
            let total = r.left.len() + r.right.len();
            let mut ok = false;
            search::alternating_cycles(&mut plus, &mut minus, total, false, &mut |v| {
                ok = v.len() == total;
                ok
            });
            ok
        }
        RelationClass::PairDestroy => {
            let pairs: Vec<&ExceptionalPair> =
                r.left.iter().filter_map(|(x, _)| if let Generator::Pair(p) = x { Some(p) } else { None }).collect();
            if pairs.len() != 1 || r.left.count(&Generator::Pair(pairs[0].clone())) != 1 || has_non_edge(&r.right) {
                return false;
            }
            let p = pairs[0];
            let neg = r.left.minus(&Word::from_generators(n, [Generator::Pair(p.clone())]), g).expect("pair present");
            if has_non_edge(&neg) {
                return false;
            }
            let want = (neg.edge_counts(), r.right.edge_counts());
            let budget = 2 * neg.len() + 1;
            let mut found = false;
            for (c1, c2) in [(p.first(), p.second()), (p.second(), p.first())] {
                for &x in c1.vertices() {
                    for s in [true, false] {
                        let mut negp = EdgePool::counted(want.0.clone());
                        let mut posp = EdgePool::counted(want.1.clone());
                        search::destroy_walks(x, c2, s, &mut negp, &mut posp, budget, false, &mut |path| {
                            let (ne, po) = destroy_sides(c1, c2, path, s);
                            found = counts(&ne) == want.0 && counts(&po) == want.1;
                            found
                        });
                        if found {
                            return true;
                        }
                    }
                }
            }
            false
        }
        RelationClass::PairShift => {
            for d in &circuits {
                for c in &circuits {
                    let Some(vc) = value(d, c) else { continue };
                    let Ok(plus) = r.left.minus(&vc, g) else { continue };
                    for c2 in &circuits {
                        if c2 == c || !g.same_component(c.least_vertex(), c2.least_vertex()) {
                            continue;
                        }
                        let Some(vc2) = value(d, c2) else { continue };
                        let Ok(minus) = r.right.minus(&vc2, g) else { continue };
                        if has_non_edge(&plus) || has_non_edge(&minus) {
                            continue;
                        }
                        let total = plus.len() + minus.len();
                        let mut pp = EdgePool::counted(plus.edge_counts());
                        let mut mp = EdgePool::counted(minus.edge_counts());
                        let mut found = false;
                        search::shift_systems(c, c2, &mut pp, &mut mp, total, &mut |walks| {
                            found = shift_edges(g, c, c2, walks).is_some_and(|(a, b)| a == plus && b == minus);
                            found
                        });
                        if found {
                            return true;
                        }
                    }
                }
            }
            false
        }
    }
}

fn has_non_edge(w: &Word) -> bool {
    w.iter().any(|(x, _)| x.as_edge().is_none())
}

fn counts(edges: &[Edge]) -> BTreeMap<Edge, u32> {
    let mut m = BTreeMap::new();
    for &e in edges {
        *m.entry(e).or_insert(0) += 1;
    }
    m
}

/// The positive and negative edge words of a valid shifting configuration
/// whose two sides share no edge.
fn shift_edges(g: &Graph, from: &Circuit, to: &Circuit, walks: &[Vec<VertexId>]) -> Option<(Word, Word)> {
    let m = Move::cycle_shift(g, from, to, walks).ok()?;
    let n = g.vertex_count();
    let plus = m.source().minus(&Word::from_generators(n, [Generator::Cycle(from.clone())]), g).ok()?;
    let minus = m.target().minus(&Word::from_generators(n, [Generator::Cycle(to.clone())]), g).ok()?;
    if !plus.common(&minus).is_empty() {
        return None;
    }
    Some((plus, minus))
}

fn pairs_of(items: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    items.iter().enumerate().flat_map(move |(a, &i)| items[a..].iter().map(move |&j| (i, j)))
}

/// Multisets of four items.
fn quadruples(items: &[usize]) -> impl Iterator<Item = (usize, usize, usize, usize)> + '_ {
    let n = items.len();
    (0..n).flat_map(move |a| {
        (a..n)
            .flat_map(move |b| (b..n).flat_map(move |c| (c..n).map(move |d| (items[a], items[b], items[c], items[d]))))
    })
}
