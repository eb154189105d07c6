//! Backtracking enumeration of the walk configurations behind moves.
//!
//! Edges are drawn from pools: a counted pool holds the edges of a word with
//! multiplicity, a free pool offers every edge of the graph without limit.
//! Visitors return `true` to stop the search.

use std::collections::BTreeMap;

use crate::graph::{Circuit, Edge, Graph, VertexId};

#[derive(Clone, Debug)]
pub(crate) struct EdgePool {
    counts: BTreeMap<Edge, u32>,
    free: Option<Vec<Edge>>,
}

impl EdgePool {
    pub(crate) fn counted(counts: BTreeMap<Edge, u32>) -> Self {
        EdgePool { counts, free: None }
    }

    pub(crate) fn free(g: &Graph) -> Self {
        EdgePool { counts: BTreeMap::new(), free: Some(g.edges().to_vec()) }
    }

    fn at(&self, v: VertexId) -> Vec<Edge> {
        match &self.free {
            Some(all) => all.iter().filter(|e| e.touches(v)).copied().collect(),
            None => self.counts.iter().filter(|(e, &k)| k > 0 && e.touches(v)).map(|(e, _)| *e).collect(),
        }
    }

    fn all(&self) -> Vec<Edge> {
        match &self.free {
            Some(all) => all.clone(),
            None => self.counts.iter().filter(|(_, &k)| k > 0).map(|(e, _)| *e).collect(),
        }
    }

    fn take(&mut self, e: Edge) {
        if self.free.is_none() {
            *self.counts.get_mut(&e).expect("edge in pool") -= 1;
        }
    }

    fn put(&mut self, e: Edge) {
        if self.free.is_none() {
            *self.counts.get_mut(&e).expect("edge in pool") += 1;
        }
    }

    /// Total multiplicity left in a counted pool.
    pub(crate) fn remaining(&self) -> usize {
        self.counts.values().map(|&k| k as usize).sum()
    }
}

/// Even closed walks of length at most `max_len` whose even-position edges
/// come from `plus` and odd-position edges from `minus`. The visitor gets
/// the vertex sequence (closing step implied). With `unsplit`, walks that
/// revisit a vertex at even distance are cut off early; the closing
/// wrap-around still has to be checked by the caller.
pub(crate) fn alternating_cycles(
    plus: &mut EdgePool,
    minus: &mut EdgePool,
    max_len: usize,
    unsplit: bool,
    visit: &mut dyn FnMut(&[VertexId]) -> bool,
) -> bool {
    if max_len < 2 {
        return false;
    }
    for e in plus.all() {
        let (a, b) = e.ends();
        let orientations: &[(VertexId, VertexId)] = if a == b { &[(a, b)] } else { &[(a, b), (b, a)] };
        for &(x, y) in orientations {
            plus.take(e);
            let mut path = vec![x, y];
            let stop = extend_cycle(x, &mut path, false, plus, minus, max_len, unsplit, visit);
            plus.put(e);
            if stop {
                return true;
            }
        }
    }
    false
}

#[allow(clippy::too_many_arguments)]
fn extend_cycle(
    start: VertexId,
    path: &mut Vec<VertexId>,
    positive: bool,
    plus: &mut EdgePool,
    minus: &mut EdgePool,
    max_len: usize,
    unsplit: bool,
    visit: &mut dyn FnMut(&[VertexId]) -> bool,
) -> bool {
    if path.len() > max_len {
        return false;
    }
    let cur = *path.last().unwrap();
    let options = if positive { plus.at(cur) } else { minus.at(cur) };
    for e in options {
        let y = e.other(cur);
        let closes = !positive && y == start;
        if !closes && unsplit && even_repeat(path, y) {
            continue;
        }
        if positive {
            plus.take(e)
        } else {
            minus.take(e)
        }
        path.push(y);
        let mut stop = closes && visit(&path[..path.len() - 1]);
        if !stop {
            stop = extend_cycle(start, path, !positive, plus, minus, max_len, unsplit, visit);
        }
        path.pop();
        if positive {
            plus.put(e)
        } else {
            minus.put(e)
        }
        if stop {
            return true;
        }
    }
    false
}

/// Whether appending `y` to `path` repeats a vertex at even distance.
fn even_repeat(path: &[VertexId], y: VertexId) -> bool {
    let n = path.len();
    path.iter().enumerate().any(|(i, &v)| v == y && (n - i).is_multiple_of(2))
}

/// Walks from `x` of length at most `max_len` with edge `k` (from 1)
/// negative unless `(k even) == positive_first`, negatives drawn from `neg`
/// and positives from `pos`. Every prefix ending on `target` is visited.
/// With `unsplit`, walks revisiting a vertex at even distance are skipped.
#[allow(clippy::too_many_arguments)]
pub(crate) fn destroy_walks(
    x: VertexId,
    target: &Circuit,
    positive_first: bool,
    neg: &mut EdgePool,
    pos: &mut EdgePool,
    max_len: usize,
    unsplit: bool,
    visit: &mut dyn FnMut(&[VertexId]) -> bool,
) -> bool {
    let mut path = vec![x];
    extend_destroy(target, positive_first, neg, pos, max_len, unsplit, &mut path, visit)
}

#[allow(clippy::too_many_arguments)]
fn extend_destroy(
    target: &Circuit,
    s: bool,
    neg: &mut EdgePool,
    pos: &mut EdgePool,
    max_len: usize,
    unsplit: bool,
    path: &mut Vec<VertexId>,
    visit: &mut dyn FnMut(&[VertexId]) -> bool,
) -> bool {
    let cur = *path.last().unwrap();
    if target.contains(cur) && visit(path) {
        return true;
    }
    let m = path.len() - 1;
    if m >= max_len {
        return false;
    }
    let negative = (m + 1).is_multiple_of(2) != s;
    let options = if negative { neg.at(cur) } else { pos.at(cur) };
    for e in options {
        let y = e.other(cur);
        if unsplit && even_repeat(path, y) {
            continue;
        }
        if negative {
            neg.take(e)
        } else {
            pos.take(e)
        }
        path.push(y);
        let stop = extend_destroy(target, s, neg, pos, max_len, unsplit, path, visit);
        path.pop();
        if negative {
            neg.put(e)
        } else {
            pos.put(e)
        }
        if stop {
            return true;
        }
    }
    false
}

/// Systems of walks pairing up the vertices in exactly one of `from`, `to`,
/// leaving `from`-only vertices by a negative edge and `to`-only vertices by
/// a positive one, signs alternating, with at most `max_edges` edges in all.
pub(crate) fn shift_systems(
    from: &Circuit,
    to: &Circuit,
    plus: &mut EdgePool,
    minus: &mut EdgePool,
    max_edges: usize,
    visit: &mut dyn FnMut(&[Vec<VertexId>]) -> bool,
) -> bool {
    let mut open: Vec<VertexId> = from
        .vertices()
        .iter()
        .filter(|v| !to.contains(**v))
        .chain(to.vertices().iter().filter(|v| !from.contains(**v)))
        .copied()
        .collect();
    open.sort_unstable();
    let mut st = ShiftState { from, plus, minus, budget: max_edges, walks: Vec::new() };
    st.pair_up(&mut open, visit)
}

struct ShiftState<'a> {
    from: &'a Circuit,
    plus: &'a mut EdgePool,
    minus: &'a mut EdgePool,
    budget: usize,
    walks: Vec<Vec<VertexId>>,
}

impl ShiftState<'_> {
    fn pair_up(&mut self, open: &mut Vec<VertexId>, visit: &mut dyn FnMut(&[Vec<VertexId>]) -> bool) -> bool {
        let Some(&x) = open.first() else {
            return visit(&self.walks);
        };
        open.remove(0);
        let positive = !self.from.contains(x);
        let mut path = vec![x];
        let stop = self.walk_on(open, &mut path, positive, visit);
        open.insert(0, x);
        stop
    }

    fn walk_on(
        &mut self,
        open: &mut Vec<VertexId>,
        path: &mut Vec<VertexId>,
        positive: bool,
        visit: &mut dyn FnMut(&[Vec<VertexId>]) -> bool,
    ) -> bool {
        if self.budget == 0 {
            return false;
        }
        let cur = *path.last().unwrap();
        let options = if positive { self.plus.at(cur) } else { self.minus.at(cur) };
        for e in options {
            let y = e.other(cur);
            if positive {
                self.plus.take(e)
            } else {
                self.minus.take(e)
            }
            self.budget -= 1;
            path.push(y);
            let mut stop = false;
            // a positive last edge suits a `to`-only end, a negative one a `from`-only end
            if let Some(i) = open.iter().position(|&v| v == y) {
                if positive != self.from.contains(y) {
                    open.remove(i);
                    self.walks.push(path.clone());
                    stop = self.pair_up(open, visit);
                    self.walks.pop();
                    open.insert(i, y);
                }
            }
            if !stop {
                stop = self.walk_on(open, path, !positive, visit);
            }
            path.pop();
            self.budget += 1;
            if positive {
                self.plus.put(e)
            } else {
                self.minus.put(e)
            }
            if stop {
                return true;
            }
        }
        false
    }
}
