//! Exact maximum-clique search.
//!
//! Branch-and-bound in the style of Tomita's MCQ: candidates are greedily
//! colored, the color count bounds the clique size reachable from a branch,
//! and branches whose bound cannot beat the incumbent are cut.  All sets are
//! bitsets, so the inner loops are word-parallel.
//!
//! The search runs in two phases.  Phase one establishes the clique number.
//! Phase two rebuilds the witness so that, among all maximum cliques, the
//! reported one is lexicographically smallest as a sorted vertex list —
//! callers get one deterministic answer, independent of traversal luck.

use super::Graph;
use crate::bits::Bitset;

/// The clique number of a graph together with one witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueResult {
    /// Size of a largest clique; 0 only for the empty graph.
    pub omega: usize,
    /// The lexicographically smallest maximum clique, ascending.
    pub witness: Vec<usize>,
}

impl Graph {
    /// Computes the clique number and the lexicographically smallest
    /// maximum-clique witness.
    pub fn clique_number(&self) -> CliqueResult {
        if self.n_vertices() == 0 {
            return CliqueResult {
                omega: 0,
                witness: Vec::new(),
            };
        }
        let omega = max_clique_size(self);
        let witness = lex_smallest_clique(self, omega);
        debug_assert_eq!(witness.len(), omega);
        CliqueResult { omega, witness }
    }
}

/// Greedy sequential coloring of `candidates`.
///
/// Returns `(vertex, color)` pairs with colors ascending from 1; vertices
/// within one color class are mutually non-adjacent.  The highest color is a
/// bound on the largest clique inside `candidates`.
fn color_sort(g: &Graph, candidates: &Bitset) -> Vec<(usize, usize)> {
    let mut order = Vec::with_capacity(candidates.count());
    let mut remaining = candidates.clone();
    let mut color = 0;
    while !remaining.is_empty() {
        color += 1;
        let mut class = remaining.clone();
        while let Some(v) = class.first() {
            order.push((v, color));
            remaining.remove(v);
            class.remove(v);
            class.difference_with(g.neighborhood(v));
        }
    }
    order
}

/// A reasonable starting clique, grown greedily by maximum degree within
/// the shrinking candidate set (ties to the smallest vertex).
fn greedy_clique_size(g: &Graph) -> usize {
    let mut candidates = Bitset::full(g.n_vertices());
    let mut size = 0;
    while let Some(v) = candidates.iter().max_by_key(|&v| {
        (
            g.neighborhood(v).intersection(&candidates).count(),
            usize::MAX - v,
        )
    }) {
        size += 1;
        candidates.intersect_with(g.neighborhood(v));
    }
    size
}

fn max_clique_size(g: &Graph) -> usize {
    let mut best = greedy_clique_size(g);
    let mut all = Bitset::full(g.n_vertices());
    expand(g, &mut all, 0, &mut best);
    best
}

fn expand(g: &Graph, candidates: &mut Bitset, depth: usize, best: &mut usize) {
    let order = color_sort(g, candidates);
    for &(v, color) in order.iter().rev() {
        // Colors ascend along `order`, so once one vertex fails the bound,
        // every remaining vertex fails it too.
        if depth + color <= *best {
            return;
        }
        let mut next = candidates.intersection(g.neighborhood(v));
        if next.is_empty() {
            *best = (*best).max(depth + 1);
        } else {
            expand(g, &mut next, depth + 1, best);
        }
        candidates.remove(v);
    }
}

/// Is there a clique of size `k` inside `candidates`?
fn exists_clique(g: &Graph, candidates: &Bitset, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if candidates.count() < k {
        return false;
    }
    let order = color_sort(g, candidates);
    let mut pool = candidates.clone();
    // A k-clique needs k distinct colors, so some member is colored >= k:
    // branch only on those vertices.
    for &(v, color) in order.iter().rev() {
        if color < k {
            return false;
        }
        let next = pool.intersection(g.neighborhood(v));
        if exists_clique(g, &next, k - 1) {
            return true;
        }
        pool.remove(v);
    }
    false
}

/// Rebuilds the lexicographically smallest clique of size `omega` by
/// committing, at each position, to the smallest vertex that still extends
/// to a full-size clique.  The members of a sorted clique ascend, so after
/// choosing `v` the remainder lives among the neighbors of `v` above `v`.
fn lex_smallest_clique(g: &Graph, omega: usize) -> Vec<usize> {
    let mut witness = Vec::with_capacity(omega);
    let mut candidates = Bitset::full(g.n_vertices());
    let mut need = omega;
    while need > 0 {
        let pick = candidates
            .iter()
            .find(|&v| {
                let mut rest = candidates.intersection(g.neighborhood(v));
                rest.retain_above(v);
                exists_clique(g, &rest, need - 1)
            })
            .expect("a maximum clique of the established size exists");
        let mut rest = candidates.intersection(g.neighborhood(pick));
        rest.retain_above(pick);
        witness.push(pick);
        candidates = rest;
        need -= 1;
    }
    witness
}

#[cfg(test)]
mod tests {
    use super::super::tests::{complete, cycle, graph, path};
    use super::super::zero_divisor_graph;
    use super::*;
    use crate::semigroup::powerset_semigroup;

    #[test]
    fn clique_number_of_basic_graphs() {
        assert_eq!(
            Graph::new(0).clique_number(),
            CliqueResult {
                omega: 0,
                witness: vec![]
            }
        );
        // Edgeless: a single vertex is the largest clique.
        assert_eq!(
            Graph::new(7).clique_number(),
            CliqueResult {
                omega: 1,
                witness: vec![0]
            }
        );
        assert_eq!(complete(6).clique_number().omega, 6);
        assert_eq!(cycle(4).clique_number().omega, 2);
        assert_eq!(cycle(5).clique_number().omega, 2);
        assert_eq!(path(4).clique_number().omega, 2);
    }

    #[test]
    fn witness_is_lexicographically_smallest() {
        // Two triangles {1,2,3} and {0,4,5}; both are maximum. The witness
        // must be {0,4,5}, which is lexicographically smaller.
        let g = graph(6, &[(1, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 0)]);
        assert_eq!(g.clique_number().witness, vec![0, 4, 5]);
        // A triangle {2,3,4} beats the edge {0,1}: lex order compares full
        // maximum cliques only.
        let g = graph(5, &[(0, 1), (2, 3), (3, 4), (4, 2)]);
        assert_eq!(g.clique_number().witness, vec![2, 3, 4]);
    }

    #[test]
    fn witness_in_powerset_graphs_is_the_singleton_clique() {
        // In the zero-divisor graph of subsets of an n-set, any n pairwise
        // disjoint nonempty subsets partition the ground set: the only
        // maximum clique is the singletons, i.e. vertices 0, 1, 3, 7, ...
        for n in 3..=6 {
            let zd = zero_divisor_graph(&powerset_semigroup(n).unwrap());
            let result = zd.graph.clique_number();
            assert_eq!(result.omega, n, "n = {n}");
            let singles: Vec<usize> = (0..n).map(|i| (1usize << i) - 1).collect();
            assert_eq!(result.witness, singles, "n = {n}");
        }
    }

    #[test]
    fn matches_brute_force_on_random_graphs() {
        // Deterministic xorshift so the corpus is stable.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for trial in 0..60 {
            let n = 1 + (next() % 10) as usize;
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if next() % 100 < 55 {
                        g.add_edge(u, v);
                    }
                }
            }
            let fast = g.clique_number();
            let slow = brute_force_max_clique(&g);
            assert_eq!(fast.omega, slow.len(), "trial {trial}");
            assert_eq!(fast.witness, slow, "trial {trial}");
        }
    }

    /// All-subsets oracle: largest clique, lexicographically smallest
    /// among sorted maximum cliques.
    fn brute_force_max_clique(g: &Graph) -> Vec<usize> {
        let n = g.n_vertices();
        let mut best: Vec<usize> = Vec::new();
        for mask in 0u32..(1 << n) {
            let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let is_clique = members
                .iter()
                .enumerate()
                .all(|(i, &u)| members[i + 1..].iter().all(|&v| g.has_edge(u, v)));
            if is_clique
                && (members.len() > best.len() || (members.len() == best.len() && members < best))
            {
                best = members;
            }
        }
        best
    }
}
