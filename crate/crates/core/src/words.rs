//! Words in edges and cycles, the moves between them, standard form,
//! the word-equality algorithm and the factorization of rotations.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::generators::{destroy_sides, Generator};
use crate::graph::{Circuit, Edge, Graph, VertexId, Walk};
use crate::search::{self, EdgePool};
use crate::semigroup::WeightVector;

/// A finite multiset of generators with its cached weight.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    items: BTreeMap<Generator, u32>,
    weight: WeightVector,
}

impl Word {
    pub fn empty(n: usize) -> Self {
        Word { items: BTreeMap::new(), weight: WeightVector::zero(n) }
    }

    pub fn from_generators<I: IntoIterator<Item = Generator>>(n: usize, gens: I) -> Self {
        let mut w = Self::empty(n);
        for g in gens {
            w.push(g, 1);
        }
        w
    }

    pub fn from_edges<I: IntoIterator<Item = Edge>>(n: usize, edges: I) -> Self {
        Self::from_generators(n, edges.into_iter().map(Generator::Edge))
    }

    /// Whitespace-separated generator tokens, each with an optional `^k`.
    pub fn parse(g: &Graph, text: &str) -> Result<Self> {
        let mut w = Self::empty(g.vertex_count());
        for tok in text.split_whitespace() {
            let (body, k) = match tok.rsplit_once('^') {
                Some((b, k)) => (
                    b,
                    k.parse::<u32>()
                        .map_err(|_| Error::Parse { line: 0, message: format!("bad multiplicity in `{tok}`") })?,
                ),
                None => (tok, 1),
            };
            w.push(Generator::parse(g, body)?, k);
        }
        Ok(w)
    }

    pub fn push(&mut self, gen: Generator, k: u32) {
        if k == 0 {
            return;
        }
        gen.add_weight(&mut self.weight, i64::from(k));
        *self.items.entry(gen).or_insert(0) += k;
    }

    pub fn weight(&self) -> &WeightVector {
        &self.weight
    }

    pub fn vertex_count(&self) -> usize {
        self.weight.len()
    }

    pub fn count(&self, gen: &Generator) -> u32 {
        self.items.get(gen).copied().unwrap_or(0)
    }

    /// Number of factors, with multiplicity.
    pub fn len(&self) -> usize {
        self.items.values().map(|&k| k as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Generator, u32)> {
        self.items.iter().map(|(g, &k)| (g, k))
    }

    /// Generators repeated by multiplicity, in order.
    pub fn generators(&self) -> Vec<Generator> {
        self.items.iter().flat_map(|(g, &k)| std::iter::repeat_n(g.clone(), k as usize)).collect()
    }

    pub fn cycle_count(&self) -> usize {
        self.items.iter().filter(|(g, _)| g.is_cycle()).map(|(_, &k)| k as usize).sum()
    }

    pub fn edge_counts(&self) -> BTreeMap<Edge, u32> {
        self.items.iter().filter_map(|(g, &k)| g.as_edge().map(|e| (e, k))).collect()
    }

    pub fn cycles(&self) -> Vec<(Circuit, u32)> {
        self.items
            .iter()
            .filter_map(|(g, &k)| match g {
                Generator::Cycle(c) => Some((c.clone(), k)),
                _ => None,
            })
            .collect()
    }

    pub fn contains(&self, sub: &Word) -> bool {
        sub.items.iter().all(|(g, &k)| self.count(g) >= k)
    }

    /// Generators of `sub` not available here, with the shortfall.
    pub fn missing(&self, sub: &Word) -> Word {
        let mut m = Word::empty(self.vertex_count());
        for (g, &k) in &sub.items {
            let have = self.count(g);
            if have < k {
                m.push(g.clone(), k - have);
            }
        }
        m
    }

    pub fn plus(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for (g, &k) in &other.items {
            w.push(g.clone(), k);
        }
        w
    }

    /// Removes a sub-multiset; fails naming the missing generators.
    pub fn minus(&self, sub: &Word, g: &Graph) -> Result<Word> {
        let missing = self.missing(sub);
        if !missing.is_empty() {
            return Err(Error::SourceAbsent(missing.display(g)));
        }
        let mut w = self.clone();
        for (gen, &k) in &sub.items {
            gen.add_weight(&mut w.weight, -i64::from(k));
            let slot = w.items.get_mut(gen).unwrap();
            *slot -= k;
            if *slot == 0 {
                w.items.remove(gen);
            }
        }
        Ok(w)
    }

    /// The multiset intersection.
    pub fn common(&self, other: &Word) -> Word {
        let mut w = Word::empty(self.vertex_count());
        for (g, &k) in &self.items {
            w.push(g.clone(), k.min(other.count(g)));
        }
        w
    }

    pub fn display(&self, g: &Graph) -> String {
        let mut s = String::new();
        for (gen, &k) in &self.items {
            if !s.is_empty() {
                s.push(' ');
            }
            s.push_str(&gen.token(g));
            if k > 1 {
                let _ = write!(s, "^{k}");
            }
        }
        s
    }
}

pub fn word_weight(w: &Word) -> &WeightVector {
    w.weight()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MoveKind {
    Rotation,
    HalfRotation,
    CycleDestroy,
    CycleShift,
    PairSwap,
    PairDestroy,
    PairShift,
}

impl MoveKind {
    pub fn name(self) -> &'static str {
        match self {
            MoveKind::Rotation => "rotation",
            MoveKind::HalfRotation => "half-rotation",
            MoveKind::CycleDestroy => "cycle-destroy",
            MoveKind::CycleShift => "cycle-shift",
            MoveKind::PairSwap => "pair-swap",
            MoveKind::PairDestroy => "pair-destroy",
            MoveKind::PairShift => "pair-shift",
        }
    }
}

/// The configuration a move is built from.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Support {
    /// An even closed walk; the source is its edges at even positions.
    Walk(Walk),
    /// An even circuit and which alternate class (from its least vertex)
    /// the half variable is exchanged with.
    Half { circuit: Circuit, first: bool },
    /// Two odd circuits, a walk joining them and the sign of the first
    /// edge of `first` on the closed walk `first . path . second . path^-1`.
    Destroy { first: Circuit, second: Circuit, path: Vec<VertexId>, positive_first: bool },
    /// A cycle exchanged for another through a system of alternating walks
    /// pairing up the symmetric difference of their vertex sets.
    Shift { from: Circuit, to: Circuit, walks: Vec<Vec<VertexId>> },
    /// Relations between pair words without a walk configuration.
    Pairs,
}

impl Support {
    pub fn display(&self, g: &Graph) -> String {
        let path = |p: &[VertexId]| p.iter().map(|&v| g.name(v)).collect::<Vec<_>>().join("-");
        match self {
            Support::Walk(w) => w.display(g),
            Support::Half { circuit, first } => {
                format!("{} ({})", circuit.display(g), if *first { "first class" } else { "second class" })
            }
            Support::Destroy { first, second, path: p, positive_first } => format!(
                "{} via {} to {} ({})",
                first.display(g),
                path(p),
                second.display(g),
                if *positive_first { "+" } else { "-" }
            ),
            Support::Shift { from, to, walks } => {
                let ws: Vec<String> = walks.iter().map(|w| path(w)).collect();
                format!("{} to {} via [{}]", from.display(g), to.display(g), ws.join(", "))
            }
            Support::Pairs => "pairs".into(),
        }
    }
}

/// A directed rewriting step between two words of equal weight.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Move {
    source: Word,
    target: Word,
    kind: MoveKind,
    support: Support,
    reversed: bool,
}

impl Move {
    fn build(kind: MoveKind, support: Support, source: Word, target: Word) -> Result<Self> {
        if source.weight() != target.weight() {
            return Err(Error::InvalidMove(format!("{} changes the weight", kind.name())));
        }
        Ok(Move { source, target, kind, support, reversed: false })
    }

    /// Exchanges the even-position edges of an even closed walk for its
    /// odd-position edges.
    pub fn rotation(g: &Graph, walk: &Walk) -> Result<Self> {
        if !walk.is_closed() || !walk.is_even() || walk.is_empty() {
            return Err(Error::InvalidMove("a rotation needs a nonempty even closed walk".into()));
        }
        let walk = Walk::closed(g, walk.vertices().to_vec())?;
        let n = g.vertex_count();
        let edges = walk.edges();
        let source = Word::from_edges(n, edges.iter().step_by(2).copied());
        let target = Word::from_edges(n, edges.iter().skip(1).step_by(2).copied());
        Self::build(MoveKind::Rotation, Support::Walk(walk), source, target)
    }

    /// Replaces the half variable of an even circuit by one of its
    /// alternate edge classes.
    pub fn half_rotation(g: &Graph, circuit: &Circuit, first: bool) -> Result<Self> {
        let c = Circuit::new(g, circuit.vertices().to_vec())?;
        if c.is_odd() {
            return Err(Error::InvalidMove("half-rotations need an even circuit".into()));
        }
        let n = g.vertex_count();
        let source = Word::from_generators(n, [Generator::Half(c.clone())]);
        let target = Word::from_edges(n, c.alternate_from(c.least_vertex(), first));
        Self::build(MoveKind::HalfRotation, Support::Half { circuit: c, first }, source, target)
    }

    /// Two cycles and the negative walk edges become the positive edges of
    /// the closed walk `first . path . second . path^-1`.
    pub fn cycle_destroy(
        g: &Graph,
        first: &Circuit,
        second: &Circuit,
        path: &[VertexId],
        positive_first: bool,
    ) -> Result<Self> {
        if !first.is_odd() || !second.is_odd() {
            return Err(Error::InvalidMove("cycle-destroying needs odd circuits".into()));
        }
        for c in [first, second] {
            Circuit::new(g, c.vertices().to_vec())?;
        }
        match (path.first(), path.last()) {
            (Some(&x), Some(&y)) if first.contains(x) && second.contains(y) => {}
            _ => return Err(Error::InvalidMove("walk must join the two circuits".into())),
        }
        Walk::open(g, path.to_vec())?;
        let n = g.vertex_count();
        let (neg, pos) = destroy_sides(first, second, path, positive_first);
        let mut source = Word::from_edges(n, neg);
        source.push(Generator::Cycle(first.clone()), 1);
        source.push(Generator::Cycle(second.clone()), 1);
        let target = Word::from_edges(n, pos);
        let support =
            Support::Destroy { first: first.clone(), second: second.clone(), path: path.to_vec(), positive_first };
        Self::build(MoveKind::CycleDestroy, support, source, target)
    }

    /// `from` plus the positive walk edges becomes `to` plus the negative
    /// ones. Every vertex in exactly one of the two circuits ends exactly
    /// one walk; a walk leaves a vertex of `from` by a negative edge and a
    /// vertex of `to` by a positive edge, signs alternating along it.
    pub fn cycle_shift(g: &Graph, from: &Circuit, to: &Circuit, walks: &[Vec<VertexId>]) -> Result<Self> {
        for c in [from, to] {
            Circuit::new(g, c.vertices().to_vec())?;
            if !c.is_odd() {
                return Err(Error::InvalidMove("cycle-shifting needs odd circuits".into()));
            }
        }
        if from == to {
            return Err(Error::InvalidMove("cycle-shift between equal cycles".into()));
        }
        let only_from = |v: VertexId| from.contains(v) && !to.contains(v);
        let only_to = |v: VertexId| to.contains(v) && !from.contains(v);
        let mut ends: Vec<VertexId> = Vec::new();
        let n = g.vertex_count();
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for w in walks {
            Walk::open(g, w.clone())?;
            let (x, y) = (w[0], *w.last().unwrap());
            let m = w.len() - 1;
            if m == 0 || x == y {
                return Err(Error::InvalidMove("shift walks need distinct endpoints".into()));
            }
            if !(only_from(x) || only_to(x)) || !(only_from(y) || only_to(y)) {
                return Err(Error::InvalidMove("shift walk endpoints must lie in exactly one cycle".into()));
            }
            let same = only_from(x) == only_from(y);
            if same != (m % 2 == 1) {
                return Err(Error::InvalidMove("shift walk has the wrong parity".into()));
            }
            ends.push(x);
            ends.push(y);
            let first_positive = only_to(x);
            for k in 0..m {
                let e = Edge::new(w[k], w[k + 1]);
                if (k % 2 == 0) == first_positive {
                    pos.push(e);
                } else {
                    neg.push(e);
                }
            }
        }
        let mut want: Vec<VertexId> = (0..n).filter(|&v| only_from(v) || only_to(v)).collect();
        ends.sort_unstable();
        want.sort_unstable();
        if ends != want {
            return Err(Error::InvalidMove("shift walks must pair up the symmetric difference".into()));
        }
        let mut source = Word::from_edges(n, pos);
        source.push(Generator::Cycle(from.clone()), 1);
        let mut target = Word::from_edges(n, neg);
        target.push(Generator::Cycle(to.clone()), 1);
        let support = Support::Shift { from: from.clone(), to: to.clone(), walks: walks.to_vec() };
        Self::build(MoveKind::CycleShift, support, source, target)
    }

    /// A move between arbitrary words of equal weight under a given label.
    pub fn relation(kind: MoveKind, support: Support, source: Word, target: Word) -> Result<Self> {
        Self::build(kind, support, source, target)
    }

    pub(crate) fn relabeled(mut self, kind: MoveKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn kind(&self) -> MoveKind {
        self.kind
    }

    pub fn support(&self) -> &Support {
        &self.support
    }

    pub fn source(&self) -> &Word {
        &self.source
    }

    pub fn target(&self) -> &Word {
        &self.target
    }

    pub fn is_reversed(&self) -> bool {
        self.reversed
    }

    /// The same relation applied in the other direction.
    pub fn reversed(&self) -> Move {
        Move {
            source: self.target.clone(),
            target: self.source.clone(),
            kind: self.kind,
            support: self.support.clone(),
            reversed: !self.reversed,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.source == self.target
    }

    pub fn display(&self, g: &Graph) -> String {
        format!(
            "{}{}: {} -> {} [{}]",
            self.kind.name(),
            if self.reversed { " (reversed)" } else { "" },
            self.source.display(g),
            self.target.display(g),
            self.support.display(g)
        )
    }
}

/// Replaces the move's source by its target.
pub fn apply_move(g: &Graph, w: &Word, m: &Move) -> Result<Word> {
    if m.source.weight() != m.target.weight() {
        return Err(Error::InvalidMove("source and target weights differ".into()));
    }
    Ok(w.minus(&m.source, g)?.plus(&m.target))
}

/// One entry of a move log: a move, or a bookkeeping note of the
/// generators common to both sides, which changes nothing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LogEntry {
    Move(Move),
    Cancel(Word),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MoveLog {
    pub entries: Vec<LogEntry>,
}

impl MoveLog {
    pub fn push(&mut self, m: Move) {
        self.entries.push(LogEntry::Move(m));
    }

    pub fn extend(&mut self, other: MoveLog) {
        self.entries.extend(other.entries);
    }

    pub fn moves(&self) -> impl Iterator<Item = &Move> {
        self.entries.iter().filter_map(|e| match e {
            LogEntry::Move(m) => Some(m),
            LogEntry::Cancel(_) => None,
        })
    }

    pub fn move_count(&self) -> usize {
        self.moves().count()
    }

    /// The log undoing this one.
    pub fn inverse(&self) -> MoveLog {
        let entries = self
            .entries
            .iter()
            .rev()
            .map(|e| match e {
                LogEntry::Move(m) => LogEntry::Move(m.reversed()),
                LogEntry::Cancel(w) => LogEntry::Cancel(w.clone()),
            })
            .collect();
        MoveLog { entries }
    }

    /// Applies every move in order, checking each step.
    pub fn replay(&self, g: &Graph, start: &Word) -> Result<Word> {
        let mut w = start.clone();
        for e in &self.entries {
            match e {
                LogEntry::Move(m) => {
                    let next = apply_move(g, &w, m)?;
                    if next.weight() != w.weight() {
                        return Err(Error::Internal("move changed the weight".into()));
                    }
                    w = next;
                }
                LogEntry::Cancel(c) => {
                    if !w.contains(c) {
                        return Err(Error::SourceAbsent(w.missing(c).display(g)));
                    }
                }
            }
        }
        Ok(w)
    }

    pub fn display(&self, g: &Graph) -> String {
        let mut s = String::new();
        for (i, e) in self.entries.iter().enumerate() {
            match e {
                LogEntry::Move(m) => {
                    let _ = writeln!(s, "{}. {}", i + 1, m.display(g));
                }
                LogEntry::Cancel(w) => {
                    let _ = writeln!(s, "{}. common: {}", i + 1, if w.is_empty() { "-".into() } else { w.display(g) });
                }
            }
        }
        s
    }
}

/// Every cycle-destroying move available in `w`, deduplicated by effect
/// and sorted (least first).
pub fn find_cycle_destroying_moves(g: &Graph, w: &Word) -> Vec<Move> {
    let cycles = w.cycles();
    let edges = w.edge_counts();
    // every negative walk edge comes from the word
    let budget = 2 * edges.values().map(|&k| k as usize).sum::<usize>() + 1;
    let mut found: BTreeMap<(Word, Word), Move> = BTreeMap::new();
    let mut neg = EdgePool::counted(edges);
    let mut pos = EdgePool::free(g);
    for (a, (ci, ki)) in cycles.iter().enumerate() {
        for (cj, _) in &cycles[a..] {
            if ci == cj && *ki < 2 {
                continue;
            }
            let orders: &[(&Circuit, &Circuit)] = if ci == cj { &[(ci, cj)] } else { &[(ci, cj), (cj, ci)] };
            for &(c1, c2) in orders {
                for &x in c1.vertices() {
                    for s in [true, false] {
                        search::destroy_walks(x, c2, s, &mut neg, &mut pos, budget, false, &mut |path| {
                            if let Ok(m) = Move::cycle_destroy(g, c1, c2, path, s) {
                                let key = (m.source.clone(), m.target.clone());
                                if found.get(&key).is_none_or(|old| m.support < old.support) {
                                    found.insert(key, m);
                                }
                            }
                            false
                        });
                    }
                }
            }
        }
    }
    found.into_values().collect()
}

pub fn is_standard(g: &Graph, w: &Word) -> bool {
    w.cycle_count() < 2 || find_cycle_destroying_moves(g, w).is_empty()
}

/// Applies the least available cycle-destroying move until none is left.
pub fn to_standard_form(g: &Graph, w: &Word) -> (Word, MoveLog) {
    let mut cur = w.clone();
    let mut log = MoveLog::default();
    while cur.cycle_count() >= 2 {
        let Some(m) = find_cycle_destroying_moves(g, &cur).into_iter().next() else {
            break;
        };
        cur = apply_move(g, &cur, &m).expect("enumerated move applies");
        log.push(m);
    }
    (cur, log)
}

/// A rotation or cycle-shift taking a subword of `w1` to a subword of `w2`,
/// for disjoint standard-form words of equal nonzero weight. Rotations are
/// tried first: an even closed walk alternating between edges of `w1` and
/// edges of `w2`. Otherwise a pair of cycles is joined by a system of
/// alternating walks.
pub fn find_transfer_move(g: &Graph, w1: &Word, w2: &Word) -> Result<Move> {
    if w1.weight() != w2.weight() {
        return Err(Error::Precondition("words have different weights".into()));
    }
    if w1.is_empty() {
        return Err(Error::Precondition("words are empty".into()));
    }
    if !w1.common(w2).is_empty() {
        return Err(Error::Precondition("words share generators".into()));
    }
    if !is_standard(g, w1) || !is_standard(g, w2) {
        return Err(Error::Precondition("words must be in standard form".into()));
    }
    let mut plus = EdgePool::counted(w1.edge_counts());
    let mut minus = EdgePool::counted(w2.edge_counts());
    let max_len = plus.remaining() + minus.remaining();
    let mut walk = None;
    search::alternating_cycles(&mut plus, &mut minus, max_len, false, &mut |v| {
        walk = Some(v.to_vec());
        true
    });
    if let Some(v) = walk {
        return Move::rotation(g, &Walk::closed(g, v)?);
    }
    for (from, _) in w1.cycles() {
        for (to, _) in w2.cycles() {
            let mut system = None;
            search::shift_systems(&from, &to, &mut plus, &mut minus, max_len, &mut |walks| {
                system = Some(walks.to_vec());
                true
            });
            if let Some(walks) = system {
                return Move::cycle_shift(g, &from, &to, &walks);
            }
        }
    }
    Err(Error::Internal(format!("no transfer move between {} and {}", w1.display(g), w2.display(g))))
}

/// Decides whether two words have equal weight and, if so, returns a log
/// of moves turning `w1` into `w2`: reduction of `w1` to standard form,
/// transfer moves, then the reversed reduction of `w2`.
pub fn equal_words(g: &Graph, w1: &Word, w2: &Word) -> Result<Option<MoveLog>> {
    if w1.weight() != w2.weight() {
        return Ok(None);
    }
    let (s1, mut log) = to_standard_form(g, w1);
    let (s2, log2) = to_standard_form(g, w2);
    let common = s1.common(&s2);
    let mut u1 = s1.minus(&common, g)?;
    let mut u2 = s2.minus(&common, g)?;
    log.entries.push(LogEntry::Cancel(common));
    while !u1.is_empty() {
        let m = find_transfer_move(g, &u1, &u2)?;
        u1 = u1.minus(m.source(), g)?;
        u2 = u2.minus(m.target(), g)?;
        log.push(m);
    }
    if !u2.is_empty() {
        return Err(Error::Internal("unmatched generators after transfer".into()));
    }
    log.extend(log2.inverse());
    Ok(Some(log))
}

/// Whether an even closed walk does not split at a vertex into two even
/// closed walks.
pub fn rotation_is_minimal(walk: &Walk) -> bool {
    walk.split_point().is_none()
}

/// Whether the closed walk of a destroying configuration has no proper
/// contiguous even closed subwalk.
pub fn destroy_is_minimal(first: &Circuit, second: &Circuit, path: &[VertexId]) -> bool {
    let x = path[0];
    let y = *path.last().unwrap();
    let mut verts: Vec<VertexId> = first.walk_from(x).vertices().to_vec();
    verts.extend_from_slice(&path[..path.len() - 1]);
    verts.extend_from_slice(second.walk_from(y).vertices());
    verts.extend(path[1..].iter().rev());
    let n = verts.len();
    for i in 0..n {
        for d in (2..n).step_by(2) {
            if verts[i] == verts[(i + d) % n] {
                return false;
            }
        }
    }
    true
}

/// Whether an even circuit is not the union of two smaller even circuits
/// sharing one edge (a chord splitting it at odd distance).
pub fn is_restricted_circuit(g: &Graph, walk: &Walk) -> bool {
    !walk.has_repeated_vertex() && splitting_chord(g, walk.vertices()).is_none()
}

fn splitting_chord(g: &Graph, v: &[VertexId]) -> Option<(usize, usize)> {
    let n = v.len();
    for i in 0..n {
        for j in i + 3..n {
            let gap = j - i;
            if gap % 2 == 1 && gap <= n - 3 && g.has_edge(v[i], v[j]) {
                return Some((i, j));
            }
        }
    }
    None
}

/// A rotation on a circuit realized as two half-rotations through the
/// circuit's half variable.
pub fn rotation_as_half_rotations(g: &Graph, walk: &Walk) -> Result<MoveLog> {
    let rot = Move::rotation(g, walk)?;
    if walk.has_repeated_vertex() {
        return Err(Error::Precondition("half-rotations need a circuit".into()));
    }
    let c = Circuit::new(g, walk.vertices().to_vec())?;
    let class = |first: bool| Word::from_edges(g.vertex_count(), c.alternate_from(c.least_vertex(), first));
    let src_first = class(true) == *rot.source();
    let mut log = MoveLog::default();
    log.push(Move::half_rotation(g, &c, src_first)?.reversed());
    log.push(Move::half_rotation(g, &c, !src_first)?);
    Ok(log)
}

/// Realizes a rotation by rotations on circuits without a splitting chord
/// and (forward or reversed) cycle-destroying moves.
pub fn factor_rotation(g: &Graph, m: &Move) -> Result<MoveLog> {
    let Support::Walk(walk) = m.support() else {
        return Err(Error::Precondition("factor_rotation needs a rotation".into()));
    };
    if m.kind() != MoveKind::Rotation {
        return Err(Error::Precondition("factor_rotation needs a rotation".into()));
    }
    let mut verts = walk.vertices().to_vec();
    if m.is_reversed() {
        verts.rotate_left(1);
    }
    let mut log = MoveLog::default();
    factor_into(g, verts, &mut log)?;
    Ok(log)
}

/// `verts` is an even closed walk whose source is its even-position edges.
fn factor_into(g: &Graph, verts: Vec<VertexId>, log: &mut MoveLog) -> Result<()> {
    let rot = Move::rotation(g, &Walk::closed_unchecked(verts.clone()))?;
    if rot.is_trivial() {
        return Ok(());
    }
    let walk = Walk::closed_unchecked(verts.clone());
    if let Some((i, j)) = walk.split_point() {
        let mut rot_v = verts.clone();
        rot_v.rotate_left(i);
        let second = rot_v.split_off(j - i);
        for mut part in [rot_v, second] {
            if i % 2 == 1 {
                part.rotate_left(1);
            }
            factor_into(g, part, log)?;
        }
        return Ok(());
    }
    if !walk.has_repeated_vertex() {
        let Some((i, j)) = splitting_chord(g, &verts) else {
            log.push(rot);
            return Ok(());
        };
        // parts: v_i..v_j closed by the chord, and v_j..v_i closed by it
        let a: Vec<VertexId> = verts[i..=j].to_vec();
        let b: Vec<VertexId> = verts[j..].iter().chain(&verts[..=i]).copied().collect();
        let chord = Edge::new(verts[i], verts[j]);
        let mut parts = Vec::new();
        for (mut part, offset) in [(a, i), (b, j)] {
            if offset % 2 == 1 {
                part.rotate_left(1);
            }
            let sub = Move::rotation(g, &Walk::closed_unchecked(part.clone()))?;
            let creates = sub.target().count(&Generator::Edge(chord)) > 0;
            parts.push((creates, part));
        }
        parts.sort_by_key(|(creates, _)| !*creates);
        for (_, part) in parts {
            factor_into(g, part, log)?;
        }
        return Ok(());
    }
    factor_through_cycles(g, &verts, &rot, log)
}

/// The walk has a repeated vertex but no even split: it reads
/// `C1 w2 C2 w1` with odd circuits `C1`, `C2`. The rotation is a reversed
/// destroying move along one connecting walk followed by a destroying move
/// along the other.
fn factor_through_cycles(g: &Graph, verts: &[VertexId], rot: &Move, log: &mut MoveLog) -> Result<()> {
    let n = verts.len();
    let (i, j) = innermost_repeat(verts, 0, n).ok_or_else(|| Error::Internal("no repeated vertex".into()))?;
    let mut w: Vec<VertexId> = verts.to_vec();
    w.rotate_left(i);
    let a = j - i;
    let c1 = Circuit::canonical_from(w[..a].to_vec())?;
    let x = w[0];
    // rest: w[a..n] then back to x
    let mut rest: Vec<VertexId> = w[a..].to_vec();
    rest.push(x);
    let l = rest.len() - 1;
    let (c2, w2, w1) = match innermost_repeat(&rest, 1, l) {
        None => (Circuit::canonical_from(rest[..l].to_vec())?, vec![x], vec![x]),
        Some((p, q)) => (Circuit::canonical_from(rest[p..q].to_vec())?, rest[..=p].to_vec(), rest[q..].to_vec()),
    };
    // w2 runs from C1 to C2, w1 from C2 back to C1
    let w1_rev: Vec<VertexId> = w1.iter().rev().copied().collect();
    let start = rot.source().clone();
    for (undo_path, do_path) in [(&w1_rev, &w2), (&w2, &w1_rev)] {
        for s_undo in [false, true] {
            for s_do in [true, false] {
                let first = Move::cycle_destroy(g, &c1, &c2, undo_path, s_undo)?.reversed();
                let second = Move::cycle_destroy(g, &c1, &c2, do_path, s_do)?;
                let mut trial = MoveLog::default();
                trial.push(first.clone());
                trial.push(second.clone());
                if matches!(trial.replay(g, &start), Ok(end) if end == *rot.target()) {
                    log.push(first);
                    log.push(second);
                    return Ok(());
                }
            }
        }
    }
    Err(Error::Internal(format!("could not factor rotation on {}", Walk::closed_unchecked(verts.to_vec()).display(g))))
}

/// The closest pair `i < j` in `lo..hi` with `v[i] == v[j]`.
fn innermost_repeat(v: &[VertexId], lo: usize, hi: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in lo..hi {
        for j in i + 1..hi {
            if v[i] == v[j] && best.is_none_or(|(bi, bj)| j - i < bj - bi) {
                best = Some((i, j));
            }
        }
    }
    best
}
