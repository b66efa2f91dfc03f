//! Simple undirected graphs with bitset adjacency rows, and the
//! zero-divisor graph of a semigroup.
//!
//! The zero-divisor graph of a commutative semigroup `S` with zero has the
//! nonzero zero divisors of `S` as vertices, with `x` and `y` adjacent
//! exactly when `x * y = 0`.  [`zero_divisor_graph`] builds it together with
//! the vertex-to-element correspondence.
//!
//! Structural queries are phrased on [`Graph`] directly, so graphs loaded
//! from edge lists — with no semigroup in sight — can be interrogated the
//! same way.  Two queries deserve definitions:
//!
//! * `a` and `b` are **orthogonal** (`a ⊥ b`) when they are adjacent and
//!   have no common neighbor, i.e. the edge `ab` lies on no triangle.  A
//!   **complement** of `a` is any vertex orthogonal to it.
//! * the **core** is the set of vertices that lie on some cycle — exactly
//!   the endpoints of non-bridge edges.
//!
//! Adjacency rows are `u64`-word bitsets sized to the vertex count, so
//! neighborhood intersections, subset queries, and candidate-set pruning in
//! the clique search are word-parallel.

mod clique;
pub mod io;

pub use clique::CliqueResult;

use crate::bits::Bitset;
use crate::semigroup::CayleySemigroup;

/// A finite simple undirected graph.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<Bitset>,
    labels: Option<Vec<String>>,
}

/// Diameter of a graph, with disconnectedness as an explicit outcome rather
/// than a sentinel value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    Disconnected,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: (0..n).map(|_| Bitset::new(n)).collect(),
            labels: None,
        }
    }

    /// Attaches one label per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = Some(labels);
        self
    }

    /// Inserts the edge `uv`.  Self-loops are not representable.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "vertex out of range");
        assert_ne!(u, v, "self-loops are not allowed");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "vertex out of range");
        u != v && self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Bitset::count).sum::<usize>() / 2
    }

    /// The open neighborhood `N(v)` as a bitset.
    pub fn neighborhood(&self, v: usize) -> &Bitset {
        assert!(v < self.n, "vertex out of range");
        &self.adj[v]
    }

    /// The closed neighborhood `N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> Bitset {
        let mut nb = self.neighborhood(v).clone();
        nb.insert(v);
        nb
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighborhood(v).count()
    }

    /// Vertices of degree exactly one.
    pub fn ends(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of vertex `v`, falling back to the index itself.
    pub fn display_label(&self, v: usize) -> String {
        match self.label(v) {
            Some(l) => l.to_owned(),
            None => v.to_string(),
        }
    }

    /// Breadth-first distances from `src`; `None` for unreachable vertices.
    fn bfs_distances(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut queue = std::collections::VecDeque::from([src]);
        while let Some(v) = queue.pop_front() {
            let next = dist[v].unwrap() + 1;
            for w in self.adj[v].iter() {
                if dist[w].is_none() {
                    dist[w] = Some(next);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// True when every vertex is reachable from every other.  The empty
    /// graph and the one-vertex graph count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// Largest distance between any two vertices.  The empty graph has
    /// diameter 0 by convention.
    pub fn diameter(&self) -> Diameter {
        if self.n == 0 {
            return Diameter::Finite(0);
        }
        let mut max = 0;
        for v in 0..self.n {
            for d in self.bfs_distances(v) {
                match d {
                    Some(d) => max = max.max(d),
                    None => return Diameter::Disconnected,
                }
            }
        }
        Diameter::Finite(max)
    }

    /// The vertices that lie on some cycle.
    ///
    /// An edge lies on a cycle exactly when it is not a bridge, so the core
    /// is the set of endpoints of non-bridge edges, found with one
    /// depth-first pass (iterative, so deep path-shaped graphs cannot
    /// overflow the stack).
    pub fn core(&self) -> Bitset {
        let mut core = Bitset::new(self.n);
        let mut disc = vec![usize::MAX; self.n];
        let mut low = vec![usize::MAX; self.n];
        let mut timer = 0usize;
        // Stack frames: (vertex, parent, neighbors, next neighbor position).
        let mut stack: Vec<(usize, usize, Vec<usize>, usize)> = Vec::new();
        for root in 0..self.n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            stack.push((root, usize::MAX, self.adj[root].to_vec(), 0));
            while !stack.is_empty() {
                let top = stack.len() - 1;
                let (v, parent) = (stack[top].0, stack[top].1);
                if stack[top].3 < stack[top].2.len() {
                    let w = stack[top].2[stack[top].3];
                    stack[top].3 += 1;
                    if w == parent {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, v, self.adj[w].to_vec(), 0));
                    } else {
                        // Non-tree edge: it closes a cycle through both ends.
                        low[v] = low[v].min(disc[w]);
                        core.insert(v);
                        core.insert(w);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] <= disc[parent] {
                            // Tree edge on a cycle (not a bridge).
                            core.insert(parent);
                            core.insert(v);
                        }
                    }
                }
            }
        }
        core
    }

    /// True when `a ⊥ b`: adjacent with no common neighbor.
    ///
    /// Orthogonality is only defined for distinct vertices; asking about a
    /// vertex and itself is a caller bug and panics.
    pub fn is_orthogonal(&self, a: usize, b: usize) -> bool {
        assert_ne!(a, b, "orthogonality is defined for distinct vertices");
        self.has_edge(a, b) && self.adj[a].is_disjoint(&self.adj[b])
    }

    /// All complements of `v`: vertices orthogonal to it.
    pub fn complements_of(&self, v: usize) -> Bitset {
        let mut out = Bitset::new(self.n);
        for u in self.neighborhood(v).iter() {
            if self.adj[u].is_disjoint(&self.adj[v]) {
                out.insert(u);
            }
        }
        out
    }

    /// A vertex with no complement, if one exists (smallest index).
    pub fn complement_violation(&self) -> Option<usize> {
        (0..self.n).find(|&v| self.complements_of(v).is_empty())
    }

    /// True when every vertex has at least one complement.
    pub fn is_complemented(&self) -> bool {
        self.complement_violation().is_none()
    }

    /// A triple `(a, b, c)` with `a ⊥ b`, `a ⊥ c` and `N(b) != N(c)`, if one
    /// exists (smallest under lexicographic vertex order).
    pub fn uniqueness_violation(&self) -> Option<(usize, usize, usize)> {
        for a in 0..self.n {
            let complements = self.complements_of(a).to_vec();
            for (i, &b) in complements.iter().enumerate() {
                for &c in &complements[i + 1..] {
                    if self.adj[b] != self.adj[c] {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// True when the graph is complemented and any two complements of the
    /// same vertex have identical neighborhoods.
    pub fn is_uniquely_complemented(&self) -> bool {
        self.is_complemented() && self.uniqueness_violation().is_none()
    }

    /// A vertex whose complement is not unique as a vertex — zero or several
    /// complements — together with its complement list, if one exists.
    pub fn per_vertex_violation(&self) -> Option<(usize, Vec<usize>)> {
        (0..self.n).find_map(|v| {
            let c = self.complements_of(v);
            (c.count() != 1).then(|| (v, c.to_vec()))
        })
    }

    /// True when every vertex has exactly one complement.
    pub fn has_unique_complement_per_vertex(&self) -> bool {
        self.per_vertex_violation().is_none()
    }

    /// Checks the absorption property: for every pair of distinct
    /// non-adjacent vertices `x, y` there is a vertex `z` whose closed
    /// neighborhood contains `N(x) ∪ N(y)`.  Returns the first failing pair.
    pub fn check_absorption_property(&self) -> Result<(), (usize, usize)> {
        for x in 0..self.n {
            for y in (x + 1)..self.n {
                if self.has_edge(x, y) {
                    continue;
                }
                let mut needed = self.adj[x].clone();
                needed.union_with(&self.adj[y]);
                let absorbed = (0..self.n).any(|z| needed.is_subset(&self.closed_neighborhood(z)));
                if !absorbed {
                    return Err((x, y));
                }
            }
        }
        Ok(())
    }

    /// Checks that every edge with both ends in `within` lies on a cycle of
    /// length 3 or 4 whose vertices all belong to `within`.  Returns the
    /// first failing edge.
    pub fn edges_on_short_cycles(&self, within: &Bitset) -> Result<(), (usize, usize)> {
        let restricted: Vec<Bitset> = (0..self.n)
            .map(|v| self.adj[v].intersection(within))
            .collect();
        for u in within.iter() {
            for v in restricted[u].iter() {
                if v <= u {
                    continue;
                }
                // Triangle u-v-w.
                if !restricted[u].is_disjoint(&restricted[v]) {
                    continue;
                }
                // Quadrilateral u-v-x-y-u with all four distinct.
                let mut found = false;
                for x in restricted[v].iter() {
                    if x == u {
                        continue;
                    }
                    let mut partners = restricted[x].intersection(&restricted[u]);
                    partners.remove(v);
                    // x itself cannot appear: it is no neighbor of itself.
                    if !partners.is_empty() {
                        found = true;
                        break;
                    }
                }
                if !found {
                    return Err((u, v));
                }
            }
        }
        Ok(())
    }

    /// The graph with vertex `v` renamed to `perm[v]`.  `perm` must be a
    /// permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut seen = vec![false; self.n];
        for &p in perm {
            assert!(p < self.n && !seen[p], "not a permutation");
            seen[p] = true;
        }
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    g.add_edge(perm[u], perm[v]);
                }
            }
        }
        if let Some(labels) = &self.labels {
            let mut new_labels = vec![String::new(); self.n];
            for (v, label) in labels.iter().enumerate() {
                new_labels[perm[v]] = label.clone();
            }
            g.labels = Some(new_labels);
        }
        g
    }

    /// True when both graphs have the same vertex count and identical
    /// adjacency, vertex for vertex (labels are not compared).
    pub fn same_adjacency(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n_vertices", &self.n)
            .field("edges", &self.edge_count())
            .finish()
    }
}

/// The zero-divisor graph of a semigroup, with the correspondence between
/// vertices and semigroup elements.
pub struct ZdGraph {
    pub graph: Graph,
    /// Vertex index to semigroup element index, ascending in element order.
    elements: Vec<usize>,
    /// Semigroup element index to vertex index.
    vertex_of: Vec<Option<usize>>,
}

impl ZdGraph {
    /// The semigroup element sitting at vertex `v`.
    pub fn element_of(&self, v: usize) -> usize {
        self.elements[v]
    }

    /// The vertex holding element `e`, when `e` is a nonzero zero divisor.
    pub fn vertex_of(&self, e: usize) -> Option<usize> {
        self.vertex_of.get(e).copied().flatten()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }
}

/// Builds the zero-divisor graph of `s`: one vertex per nonzero zero
/// divisor (in ascending element order), an edge wherever the product is
/// zero.  Vertices inherit the element labels.
pub fn zero_divisor_graph(s: &CayleySemigroup) -> ZdGraph {
    let elements = s.zero_divisor_set().to_vec();
    let mut vertex_of = vec![None; s.order()];
    for (v, &e) in elements.iter().enumerate() {
        vertex_of[e] = Some(v);
    }
    let mut graph = Graph::new(elements.len());
    for u in 0..elements.len() {
        for v in (u + 1)..elements.len() {
            if s.product(elements[u], elements[v]) == 0 {
                graph.add_edge(u, v);
            }
        }
    }
    let labels = elements.iter().map(|&e| s.display_label(e)).collect();
    ZdGraph {
        graph: graph.with_labels(labels),
        elements,
        vertex_of,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::powerset_semigroup;

    /// Graph on `n` vertices from an explicit edge list.
    pub(crate) fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub(crate) fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        graph(n, &edges)
    }

    pub(crate) fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        graph(n, &edges)
    }

    pub(crate) fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    #[test]
    fn zero_divisor_graph_of_p3() {
        let zd = zero_divisor_graph(&powerset_semigroup(3).unwrap());
        let g = &zd.graph;
        assert_eq!(g.n_vertices(), 6);
        assert_eq!(g.edge_count(), 6);
        // Vertices are the masks 1..=6 in order.
        assert_eq!(zd.elements(), &[1, 2, 3, 4, 5, 6]);
        assert_eq!(zd.vertex_of(3), Some(2));
        assert_eq!(zd.vertex_of(0), None);
        assert_eq!(zd.vertex_of(7), None);
        assert_eq!(g.label(0), Some("a1"));
        assert_eq!(g.label(5), Some("b1"));
        // Adjacency is disjointness of the masks.
        assert!(g.has_edge(0, 1)); // {x1}, {x2}
        assert!(!g.has_edge(0, 2)); // {x1}, {x1,x2}
    }

    #[test]
    fn p3_distances_and_connectivity() {
        let zd = zero_divisor_graph(&powerset_semigroup(3).unwrap());
        assert!(zd.graph.is_connected());
        assert_eq!(zd.graph.diameter(), Diameter::Finite(3));
    }

    #[test]
    fn degrees_and_ends_of_p3() {
        let zd = zero_divisor_graph(&powerset_semigroup(3).unwrap());
        let g = &zd.graph;
        // Singletons have degree 3, co-singletons degree 1.
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(2), 1);
        assert_eq!(g.ends(), vec![2, 4, 5]);
        let degree_sum: usize = (0..g.n_vertices()).map(|v| g.degree(v)).sum();
        assert_eq!(degree_sum, 2 * g.edge_count());
    }

    #[test]
    fn diameter_edge_cases() {
        assert_eq!(Graph::new(0).diameter(), Diameter::Finite(0));
        assert_eq!(Graph::new(1).diameter(), Diameter::Finite(0));
        assert_eq!(Graph::new(2).diameter(), Diameter::Disconnected);
        assert!(!Graph::new(2).is_connected());
        assert!(Graph::new(0).is_connected());
        assert!(Graph::new(1).is_connected());
        assert_eq!(path(4).diameter(), Diameter::Finite(3));
        assert_eq!(cycle(5).diameter(), Diameter::Finite(2));
    }

    #[test]
    fn core_of_small_graphs() {
        // A triangle with a pendant: the triangle is the core.
        let g = graph(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]);
        assert_eq!(g.core().to_vec(), vec![0, 1, 2]);
        // Trees have empty cores.
        assert!(path(5).core().is_empty());
        assert!(Graph::new(3).core().is_empty());
        // Cycles are all core.
        assert_eq!(cycle(4).core().count(), 4);
        // Two triangles joined by a bridge: both triangles, not the bridge.
        let g = graph(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)]);
        assert_eq!(g.core().count(), 6);
        // ... but a bridge to a pendant path stays out.
        let g = graph(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]);
        assert_eq!(g.core().to_vec(), vec![0, 1, 2]);
    }

    #[test]
    fn core_matches_cycle_membership_oracle() {
        // Independent oracle: v is on a cycle iff two of its neighbors are
        // connected in the graph with v removed.
        let samples = [
            graph(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]),
            path(6),
            cycle(6),
            complete(5),
            graph(
                7,
                &[
                    (0, 1),
                    (1, 2),
                    (2, 3),
                    (3, 0),
                    (3, 4),
                    (4, 5),
                    (5, 6),
                    (6, 4),
                ],
            ),
        ];
        for g in &samples {
            let core = g.core();
            for v in 0..g.n_vertices() {
                assert_eq!(core.contains(v), on_cycle_oracle(g, v), "vertex {v}");
            }
        }
    }

    fn on_cycle_oracle(g: &Graph, v: usize) -> bool {
        let neighbors = g.neighborhood(v).to_vec();
        for (i, &a) in neighbors.iter().enumerate() {
            for &b in &neighbors[i + 1..] {
                // Path from a to b avoiding v?
                let mut seen = Bitset::new(g.n_vertices());
                seen.insert(v);
                seen.insert(a);
                let mut stack = vec![a];
                while let Some(x) = stack.pop() {
                    if x == b {
                        return true;
                    }
                    for w in g.neighborhood(x).iter() {
                        if !seen.contains(w) {
                            seen.insert(w);
                            stack.push(w);
                        }
                    }
                }
            }
        }
        false
    }

    #[test]
    fn orthogonality_and_complements() {
        let zd = zero_divisor_graph(&powerset_semigroup(3).unwrap());
        let g = &zd.graph;
        // a1 (vertex 0) and b1 (vertex 5): adjacent, no common neighbor.
        assert!(g.is_orthogonal(0, 5));
        // a1 and a2 share neighbor a3.
        assert!(!g.is_orthogonal(0, 1));
        // Non-adjacent vertices are never orthogonal.
        assert!(!g.is_orthogonal(0, 2));
        assert_eq!(g.complements_of(0).to_vec(), vec![5]);
        assert!(g.is_complemented());
        assert!(g.is_uniquely_complemented());
        assert!(g.has_unique_complement_per_vertex());
    }

    #[test]
    #[should_panic(expected = "distinct vertices")]
    fn orthogonality_rejects_equal_arguments() {
        cycle(4).is_orthogonal(2, 2);
    }

    #[test]
    fn complement_predicates_disagree_where_they_should() {
        // In K4 every edge is on a triangle: nothing has a complement.
        let k4 = complete(4);
        assert_eq!(k4.complement_violation(), Some(0));
        assert!(!k4.is_complemented());
        // A path on 3 vertices: both ends complement the middle, but their
        // neighborhoods coincide ({1} each) — uniquely complemented, yet
        // not unique per vertex.
        let p3 = path(3);
        assert!(p3.is_complemented());
        assert_eq!(p3.uniqueness_violation(), None);
        assert!(p3.is_uniquely_complemented());
        assert_eq!(p3.per_vertex_violation(), Some((1, vec![0, 2])));
        // A path on 4 vertices: vertex 1 is complemented by both 0 and 2,
        // and N(0) = {1} differs from N(2) = {1, 3}.
        let p4 = path(4);
        assert!(p4.is_complemented());
        assert_eq!(p4.uniqueness_violation(), Some((1, 0, 2)));
        assert!(!p4.is_uniquely_complemented());
        // A 4-cycle: each vertex has two complements, but their
        // neighborhoods coincide — uniquely complemented, yet not unique
        // per vertex.
        let c4 = cycle(4);
        assert!(c4.is_uniquely_complemented());
        assert!(!c4.has_unique_complement_per_vertex());
        assert_eq!(c4.per_vertex_violation(), Some((0, vec![1, 3])));
    }

    #[test]
    fn absorption_property_examples() {
        // Zero-divisor graphs satisfy absorption.
        for n in 2..=4 {
            let zd = zero_divisor_graph(&powerset_semigroup(n).unwrap());
            assert_eq!(zd.graph.check_absorption_property(), Ok(()));
        }
        // Two disjoint edges do not: take one endpoint from each.
        let two_edges = graph(4, &[(0, 1), (2, 3)]);
        assert_eq!(two_edges.check_absorption_property(), Err((0, 2)));
        // Vacuous cases.
        assert_eq!(Graph::new(0).check_absorption_property(), Ok(()));
        assert_eq!(Graph::new(1).check_absorption_property(), Ok(()));
    }

    #[test]
    fn short_cycle_cover_of_cores() {
        // In the zero-divisor graph of the subsets of a 3-set, the core is
        // the triangle of singletons: every core edge is on a triangle.
        let zd = zero_divisor_graph(&powerset_semigroup(3).unwrap());
        let core = zd.graph.core();
        assert_eq!(core.to_vec(), vec![0, 1, 3]);
        assert_eq!(zd.graph.edges_on_short_cycles(&core), Ok(()));
        // A bare 5-cycle fails: no edge is on a triangle or quadrilateral.
        let c5 = cycle(5);
        let all = c5.core();
        assert_eq!(c5.edges_on_short_cycles(&all), Err((0, 1)));
        // A 4-cycle passes.
        let c4 = cycle(4);
        let all4 = c4.core();
        assert_eq!(c4.edges_on_short_cycles(&all4), Ok(()));
    }

    #[test]
    fn relabel_moves_structure_and_labels() {
        let zd = zero_divisor_graph(&powerset_semigroup(3).unwrap());
        let g = &zd.graph;
        // Not an automorphism: it moves a clique vertex onto an end slot.
        let perm = [2, 0, 4, 1, 5, 3];
        let h = g.relabel(&perm);
        assert_eq!(h.edge_count(), g.edge_count());
        for u in 0..g.n_vertices() {
            assert_eq!(h.label(perm[u]), g.label(u));
            for v in 0..g.n_vertices() {
                if u != v {
                    assert_eq!(h.has_edge(perm[u], perm[v]), g.has_edge(u, v));
                }
            }
        }
        assert!(!h.same_adjacency(g));
        let back: Vec<usize> = {
            let mut inv = vec![0; perm.len()];
            for (i, &p) in perm.iter().enumerate() {
                inv[p] = i;
            }
            inv
        };
        assert!(h.relabel(&back).same_adjacency(g));
    }
}
