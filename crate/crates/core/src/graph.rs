//! Finite simple graphs on `1..=n` and the structural operations used throughout
//! the crate: cliques, cut edges, free vertices, the reduced graph and the two
//! edge transformations (free-cut-edge switching and `G_e` completion).
//!
//! Adjacency is stored as one `u64` bitset per vertex, so graphs are limited to
//! [`MAX_VERTICES`] vertices. Public vertex labels are 1-based; bit `k` of a mask
//! stands for vertex `k + 1`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Upper bound on the vertex count of a [`Graph`].
pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) fn bit(v0: usize) -> u64 {
    1u64 << v0
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the 0-based indices of the set bits of `mask`, lowest first.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

pub(crate) fn mask_to_vertices(mask: u64) -> Vec<usize> {
    bits(mask).map(|v| v + 1).collect()
}

/// An unordered pair `{u, v}` stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(usize, usize);

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn u(&self) -> usize {
        self.0
    }

    pub fn v(&self) -> usize {
        self.1
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0 == x || self.1 == x
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Edge::new(a, b)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

/// A finite simple graph with vertex set `1..=n`.
///
/// Equality is structural: two graphs are equal when they have the same vertex
/// count and the same edge set, regardless of how they were built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from vertex pairs. Repeated pairs (in either order) collapse
    /// to one edge.
    pub fn from_edges<I, E>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut g = Graph::new(n)?;
        for e in edges {
            let e = e.into();
            g.insert_edge(e.u(), e.v())?;
        }
        Ok(g)
    }

    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Self {
        debug_assert!(adj.len() <= MAX_VERTICES);
        Graph { n: adj.len(), adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] & !low_mask(u + 1)) {
                out.push(Edge(u + 1, v + 1));
            }
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (1..=self.n).contains(&u)
            && (1..=self.n).contains(&v)
            && self.adj[u - 1] & bit(v - 1) != 0
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.u(), e.v())
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if (1..=self.n).contains(&v) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Adds `{u, v}`; returns `false` when the edge was already present.
    pub fn insert_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let fresh = self.adj[u - 1] & bit(v - 1) == 0;
        self.adj[u - 1] |= bit(v - 1);
        self.adj[v - 1] |= bit(u - 1);
        Ok(fresh)
    }

    /// Removes `{u, v}`; returns `false` when the edge was absent.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let present = self.adj[u - 1] & bit(v - 1) != 0;
        self.adj[u - 1] &= !bit(v - 1);
        self.adj[v - 1] &= !bit(u - 1);
        Ok(present)
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        mask_to_vertices(self.adj[v - 1])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    pub(crate) fn nbr(&self, v0: usize) -> u64 {
        self.adj[v0]
    }

    pub(crate) fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub(crate) fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (1..=self.n).filter(|&v| self.adj[v - 1] == 0).collect()
    }

    // ---- constructors -------------------------------------------------------

    /// `P_n` with edges `{i, i+1}`.
    pub fn path(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("path needs at least one vertex".into()));
        }
        Graph::from_edges(n, (1..n).map(|i| (i, i + 1)))
    }

    /// `C_n`: the path `P_n` plus `{n, 1}`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
        }
        Graph::from_edges(n, (1..n).map(|i| (i, i + 1)).chain(std::iter::once((n, 1))))
    }

    pub fn complete(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("complete graph needs at least one vertex".into()));
        }
        Graph::from_edges(n, (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))))
    }

    /// `K_{a,b}` with parts `1..=a` and `a+1..=a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidParameter(format!(
                "complete bipartite graph needs both parts nonempty, got ({a}, {b})"
            )));
        }
        Graph::from_edges(a + b, (1..=a).flat_map(|i| (a + 1..=a + b).map(move |j| (i, j))))
    }

    /// The k-handle lollipop `L_{m, t_1, ..., t_k}`: `K_m` on `1..=m`, and handle
    /// `i` a path of `t_i` new vertices whose first vertex is joined to clique
    /// vertex `i`. Handles are numbered consecutively after the clique.
    pub fn k_handle_lollipop(m: usize, handles: &[usize]) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidParameter(format!("lollipop needs m >= 2, got {m}")));
        }
        if handles.is_empty() || handles.len() > m {
            return Err(Error::InvalidParameter(format!(
                "lollipop needs 1 <= k <= m handles, got k = {} with m = {m}",
                handles.len()
            )));
        }
        if handles.contains(&0) {
            return Err(Error::InvalidParameter("handle lengths must be positive".into()));
        }
        let total = m + handles.iter().sum::<usize>();
        let mut g = Graph::complete(m)?;
        g = g.disjoint_union(&Graph::new(total - m)?)?;
        let mut next = m + 1;
        for (i, &len) in handles.iter().enumerate() {
            g.insert_edge(i + 1, next)?;
            for step in 1..len {
                g.insert_edge(next + step - 1, next + step)?;
            }
            next += len;
        }
        Ok(g)
    }

    /// Places `other` after `self`, shifting its labels by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|m| m << self.n));
        Ok(Graph { n, adj })
    }

    // ---- derived graphs ------------------------------------------------------

    /// The subgraph induced on `w`, relabeled `1..=|w|` in increasing order of
    /// the original labels.
    pub fn induced_subgraph(&self, w: &[usize]) -> Result<Graph> {
        let mut mask = 0u64;
        for &v in w {
            self.check_vertex(v)?;
            mask |= bit(v - 1);
        }
        Ok(self.induced_on_mask(mask))
    }

    pub(crate) fn induced_on_mask(&self, mask: u64) -> Graph {
        let verts: Vec<usize> = bits(mask).collect();
        let adj = verts
            .iter()
            .map(|&u| {
                verts
                    .iter()
                    .enumerate()
                    .filter(|&(_, &v)| self.adj[u] & bit(v) != 0)
                    .fold(0u64, |acc, (k, _)| acc | bit(k))
            })
            .collect();
        Graph::from_adjacency(adj)
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let adj = (0..self.n).map(|v| !self.adj[v] & all & !bit(v)).collect();
        Graph::from_adjacency(adj)
    }

    /// Vertex set of the component of `start0` inside `within`.
    pub(crate) fn reach(&self, start0: usize, within: u64) -> u64 {
        let mut seen = bit(start0);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Components of the subgraph induced on `within`, as masks, ordered by their
    /// lowest vertex.
    pub(crate) fn component_masks(&self, within: u64) -> Vec<u64> {
        let mut rest = within;
        let mut out = Vec::new();
        while rest != 0 {
            let c = self.reach(rest.trailing_zeros() as usize, rest);
            out.push(c);
            rest &= !c;
        }
        out
    }

    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        self.component_masks(self.vertex_mask())
            .into_iter()
            .map(mask_to_vertices)
            .collect()
    }

    pub fn component_count(&self) -> usize {
        self.component_masks(self.vertex_mask()).len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// All-pairs shortest-path lengths by breadth-first search.
    pub fn distances(&self) -> DistanceMatrix {
        let n = self.n;
        let mut d = vec![None; n * n];
        for s in 0..n {
            d[s * n + s] = Some(0);
            let mut seen = bit(s);
            let mut frontier = seen;
            let mut level = 0;
            while frontier != 0 {
                level += 1;
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.adj[v];
                }
                next &= !seen;
                for v in bits(next) {
                    d[s * n + v] = Some(level);
                }
                seen |= next;
                frontier = next;
            }
        }
        DistanceMatrix { n, d }
    }

    // ---- cliques --------------------------------------------------------------

    pub(crate) fn maximal_clique_masks(&self) -> Vec<u64> {
        fn expand(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
            if p == 0 {
                if x == 0 {
                    out.push(r);
                }
                return;
            }
            let pivot = bits(p | x)
                .max_by_key(|&u| (p & adj[u]).count_ones())
                .expect("p is nonempty");
            for v in bits(p & !adj[pivot]) {
                expand(adj, r | bit(v), p & adj[v], x & adj[v], out);
                p &= !bit(v);
                x |= bit(v);
            }
        }
        let mut out = Vec::new();
        if self.n > 0 {
            expand(&self.adj, 0, self.vertex_mask(), 0, &mut out);
        }
        out.sort_unstable();
        out
    }

    /// Inclusion-maximal cliques, each as a sorted vertex list. An isolated
    /// vertex forms the singleton clique `{v}`.
    pub fn maximal_cliques(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> =
            self.maximal_clique_masks().into_iter().map(mask_to_vertices).collect();
        out.sort();
        out
    }

    /// Number of complete subgraphs on `i` vertices, for every `i`.
    pub fn clique_census(&self) -> CliqueCensus {
        fn grow(adj: &[u64], cand: u64, size: usize, counts: &mut Vec<u64>) {
            for v in bits(cand) {
                if counts.len() <= size + 1 {
                    counts.push(0);
                }
                counts[size + 1] += 1;
                grow(adj, cand & adj[v] & !low_mask(v + 1), size + 1, counts);
            }
        }
        let mut counts = vec![1];
        grow(&self.adj, self.vertex_mask(), 0, &mut counts);
        CliqueCensus { counts }
    }

    pub fn has_triangle(&self) -> bool {
        self.clique_census().k(3) > 0
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.adj[v] == self.vertex_mask() & !bit(v))
    }

    // ---- cut edges and free vertices -----------------------------------------

    fn require_edge(&self, e: Edge) -> Result<()> {
        self.check_vertex(e.u())?;
        self.check_vertex(e.v())?;
        if self.contains_edge(e) {
            Ok(())
        } else {
            Err(Error::NotAnEdge(e))
        }
    }

    /// Whether deleting `e` increases the number of components.
    pub fn is_cut_edge(&self, e: Edge) -> Result<bool> {
        self.require_edge(e)?;
        let g = self.without_edge_unchecked(e);
        Ok(g.reach(e.u() - 1, g.vertex_mask()) & bit(e.v() - 1) == 0)
    }

    fn free_vertex_mask(&self) -> u64 {
        let cliques = self.maximal_clique_masks();
        (0..self.n)
            .filter(|&v| cliques.iter().filter(|&&c| c & bit(v) != 0).count() == 1)
            .fold(0, |acc, v| acc | bit(v))
    }

    /// Vertices lying in exactly one maximal clique (isolated vertices included).
    pub fn free_vertices(&self) -> Vec<usize> {
        mask_to_vertices(self.free_vertex_mask())
    }

    pub fn is_free_vertex(&self, v: usize) -> Result<bool> {
        self.check_vertex(v)?;
        Ok(self.free_vertex_mask() & bit(v - 1) != 0)
    }

    /// A cut edge whose endpoints are both free vertices once it is deleted.
    pub fn is_free_cut_edge(&self, e: Edge) -> Result<bool> {
        if !self.is_cut_edge(e)? {
            return Ok(false);
        }
        let free = self.without_edge_unchecked(e).free_vertex_mask();
        Ok(free & bit(e.u() - 1) != 0 && free & bit(e.v() - 1) != 0)
    }

    pub fn free_cut_edges(&self) -> Vec<Edge> {
        self.edges()
            .into_iter()
            .filter(|&e| self.is_free_cut_edge(e).expect("edge of the graph"))
            .collect()
    }

    /// `R(G)`: the free cut edges of `G` are computed once and deleted together.
    pub fn reduced_graph(&self) -> Graph {
        let mut g = self.clone();
        for e in self.free_cut_edges() {
            g.adj[e.u() - 1] &= !bit(e.v() - 1);
            g.adj[e.v() - 1] &= !bit(e.u() - 1);
        }
        g
    }

    fn without_edge_unchecked(&self, e: Edge) -> Graph {
        let mut g = self.clone();
        g.adj[e.u() - 1] &= !bit(e.v() - 1);
        g.adj[e.v() - 1] &= !bit(e.u() - 1);
        g
    }

    pub fn without_edge(&self, e: Edge) -> Result<Graph> {
        self.require_edge(e)?;
        Ok(self.without_edge_unchecked(e))
    }

    pub fn with_edge(&self, e: Edge) -> Result<Graph> {
        let mut g = self.clone();
        if !g.insert_edge(e.u(), e.v())? {
            return Err(Error::EdgePresent(e));
        }
        Ok(g)
    }

    /// Free-cut-edge switching `G' = (G \ remove) ∪ add`.
    ///
    /// `remove` must be a free cut edge of `G` and `add` must be a free cut edge
    /// of the result.
    pub fn switch_free_cut_edge(&self, remove: Edge, add: Edge) -> Result<Graph> {
        if !self.is_free_cut_edge(remove)? {
            return Err(Error::NotFreeCutEdge(remove));
        }
        let switched = self.without_edge_unchecked(remove).with_edge(add)?;
        if !switched.is_free_cut_edge(add)? {
            return Err(Error::SwitchRejected(add));
        }
        Ok(switched)
    }

    /// `G_e` for a non-edge `e = {v, w}`: adds every pair inside `N(v)` and every
    /// pair inside `N(w)`. The pair `e` itself is not added.
    pub fn ge_completion(&self, e: Edge) -> Result<Graph> {
        self.check_vertex(e.u())?;
        self.check_vertex(e.v())?;
        if e.u() == e.v() {
            return Err(Error::SelfLoop(e.u()));
        }
        if self.contains_edge(e) {
            return Err(Error::EdgePresent(e));
        }
        let mut g = self.clone();
        for nbhd in [self.adj[e.u() - 1], self.adj[e.v() - 1]] {
            for x in bits(nbhd) {
                g.adj[x] |= nbhd & !bit(x);
            }
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}; ", self.n)?;
        let edges = self.edges();
        for (k, e) in edges.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}-{}", e.u(), e.v())?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// `k_i(G)` for every `i`; `k_0 = 1` counts the empty clique.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueCensus {
    counts: Vec<u64>,
}

impl CliqueCensus {
    pub fn k(&self, i: usize) -> u64 {
        self.counts.get(i).copied().unwrap_or(0)
    }

    pub fn clique_number(&self) -> usize {
        self.counts.len() - 1
    }

    /// `(i, k_i)` for `1 <= i <= clique number`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts.iter().copied().enumerate().skip(1)
    }
}

/// Shortest-path lengths; `None` marks unreachable pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<Option<usize>>,
}

impl DistanceMatrix {
    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        self.d[(u - 1) * self.n + (v - 1)]
    }

    /// Largest finite distance.
    pub fn diameter(&self) -> usize {
        self.d.iter().flatten().copied().max().unwrap_or(0)
    }
}
