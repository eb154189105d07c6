//! Exhaustive cross-checks on small graphs: a family of test graphs, the
//! indecomposable elements of the closure found by search, and saturation
//! of every small fiber.

use std::collections::BTreeSet;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::generators::minimal_generators;
use crate::graph::{Graph, VertexId};
use crate::semigroup::{is_member, WeightVector};
use crate::toric::{Bounds, RelationSystem};

pub const DEFAULT_SEED: u64 = 20;
pub const DEFAULT_RANDOM_GRAPHS: usize = 200;

fn pairs(n: usize) -> Vec<(VertexId, VertexId)> {
    (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect()
}

fn connected(n: usize, edges: &[(VertexId, VertexId)]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for &(a, b) in edges {
            for (p, q) in [(a, b), (b, a)] {
                if p == x && !seen[q] {
                    seen[q] = true;
                    stack.push(q);
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// One representative per isomorphism class of connected graphs with loops
/// on exactly `n` vertices, by least relabeled edge mask.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let all = pairs(n);
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let index = |a: usize, b: usize| all.iter().position(|&p| p == (a.min(b), a.max(b))).unwrap();
    let images: Vec<Vec<usize>> = perms.iter().map(|p| all.iter().map(|&(a, b)| index(p[a], p[b])).collect()).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..1 << all.len() {
        let canon = images
            .iter()
            .map(|img| (0..all.len()).filter(|&i| mask >> i & 1 == 1).fold(0u32, |m, i| m | 1 << img[i]))
            .min()
            .unwrap();
        if canon != mask || !seen.insert(canon) {
            continue;
        }
        let edges: Vec<_> = (0..all.len()).filter(|&i| mask >> i & 1 == 1).map(|i| all[i]).collect();
        if connected(n, &edges) {
            out.push(Graph::from_indices(n, &edges).expect("simple edge list"));
        }
    }
    out
}

/// A connected graph with loops on `n` vertices, each possible edge
/// present with probability one half, redrawn until connected.
pub fn random_connected_graph(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let all = pairs(n);
    loop {
        let edges: Vec<_> = all.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
        if connected(n, &edges) {
            return Graph::from_indices(n, &edges).expect("simple edge list");
        }
    }
}

/// All connected graphs on up to `min(max_vertices, 5)` vertices up to
/// isomorphism, then `random` seeded graphs on 6 vertices when
/// `max_vertices >= 6`.
pub fn graph_family(max_vertices: usize, random: usize, seed: u64) -> Vec<Graph> {
    let mut out: Vec<Graph> = (1..=max_vertices.min(5)).flat_map(connected_graphs).collect();
    if max_vertices >= 6 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        out.extend((0..random).map(|_| random_connected_graph(6, &mut rng)));
    }
    out
}

/// Every vector with entries in `0..=top`.
pub fn box_vectors(n: usize, top: i64) -> Vec<WeightVector> {
    (0..n).map(|_| 0..=top).multi_cartesian_product().map(WeightVector::from_vec).collect()
}

/// Nonzero members of the closure in the box `0 <= f(v) <= 2` that are not
/// the sum of two nonzero members, using [`is_member`].
pub fn indecomposable_members(g: &Graph) -> Vec<WeightVector> {
    let n = g.vertex_count();
    let members: BTreeSet<Vec<i64>> =
        box_vectors(n, 2).into_iter().filter(|f| is_member(g, f)).map(|f| f.as_slice().to_vec()).collect();
    let mut out = Vec::new();
    for f in &members {
        if f.iter().all(|&x| x == 0) {
            continue;
        }
        let split = members.iter().any(|a| {
            a != f
                && a.iter().any(|&x| x > 0)
                && a.iter().zip(f).all(|(x, y)| x <= y)
                && members.contains(&f.iter().zip(a).map(|(y, x)| y - x).collect::<Vec<_>>())
        });
        if !split {
            out.push(WeightVector::from_vec(f.clone()));
        }
    }
    out
}

/// Outcome of comparing the minimal generators with the search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorCheck {
    pub generators: usize,
    pub missing: Vec<WeightVector>,
    pub extra: Vec<WeightVector>,
}

impl GeneratorCheck {
    pub fn agrees(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

pub fn check_generators(g: &Graph) -> GeneratorCheck {
    let n = g.vertex_count();
    let gens: BTreeSet<WeightVector> = minimal_generators(g).iter().map(|x| x.weight(n)).collect();
    let found: BTreeSet<WeightVector> = indecomposable_members(g).into_iter().collect();
    GeneratorCheck {
        generators: gens.len(),
        missing: found.difference(&gens).cloned().collect(),
        extra: gens.difference(&found).cloned().collect(),
    }
}

/// Weights of all words of at most `max_len` minimal generators.
pub fn reachable_weights(g: &Graph, max_len: usize) -> BTreeSet<WeightVector> {
    let n = g.vertex_count();
    let weights: Vec<WeightVector> = minimal_generators(g).iter().map(|x| x.weight(n)).collect();
    let mut out = BTreeSet::from([WeightVector::zero(n)]);
    let mut layer = out.clone();
    for _ in 0..max_len {
        let next: BTreeSet<WeightVector> = layer.iter().flat_map(|f| weights.iter().map(move |w| f.plus(w))).collect();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Fibers reached by words of at most `max_len` generators whose full set
/// of words falls into more than one class.
pub fn congruence_failures(g: &Graph, max_len: usize) -> Result<Vec<WeightVector>> {
    let sys = RelationSystem::new(g, Bounds::for_graph(g))?;
    let mut bad = Vec::new();
    for f in reachable_weights(g, max_len) {
        let full = (f.total() / 2) as usize;
        if !sys.congruence_check(&f, full) {
            bad.push(f);
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        assert_eq!(connected_graphs(1).len(), 2);
        // on two vertices: the edge with no, one or two loops
        assert_eq!(connected_graphs(2).len(), 3);
        let fam = graph_family(6, 3, DEFAULT_SEED);
        let again = graph_family(6, 3, DEFAULT_SEED);
        assert!(fam.iter().zip(&again).all(|(a, b)| a.edges() == b.edges()));
        assert!(fam.iter().all(Graph::is_connected));
    }

    #[test]
    fn example_generators_agree() {
        let g = Graph::parse("x1 x1\nx2 x2\nx3 x3\nx1 x4\nx2 x4\nx3 x4").unwrap();
        let c = check_generators(&g);
        assert!(c.agrees(), "{c:?}");
        assert_eq!(c.generators, 9);
    }
}
