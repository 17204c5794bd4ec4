//! Closed graphs: the chordal / claw-free / narrow characterization, an
//! independent search for a closed labeling, and the bipartite graph `in<(G)`
//! whose edge ideal is the lex initial ideal of `J_G`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, bits, low_mask, Edge, Graph};

/// True when every cycle of length at least four has a chord.
///
/// Maximum cardinality search produces a candidate perfect elimination
/// ordering, which is then verified.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = 0u64;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| visited & bit(v) == 0)
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unvisited vertex remains");
        for u in bits(g.nbr(v) & !visited) {
            weight[u] += 1;
        }
        visited |= bit(v);
        order.push(v);
    }
    // Reverse visit order is the elimination order; for each vertex, its
    // neighbors visited earlier must form a clique, which suffices to check
    // against the most recently visited of them.
    let mut pos = vec![0usize; n];
    for (k, &v) in order.iter().enumerate() {
        pos[v] = k;
    }
    let mut earlier = 0u64;
    for &v in &order {
        let back = g.nbr(v) & earlier;
        if let Some(parent) = bits(back).max_by_key(|&u| pos[u]) {
            let rest = back & !bit(parent);
            if rest & !g.nbr(parent) != 0 {
                return false;
            }
        }
        earlier |= bit(v);
    }
    true
}

/// True when no induced subgraph is isomorphic to `K_{1,3}`.
pub fn is_claw_free(g: &Graph) -> bool {
    find_claw(g).is_none()
}

/// An induced claw `[center, a, b, c]` (0-based), if any.
pub(crate) fn find_claw(g: &Graph) -> Option<[usize; 4]> {
    for c in 0..g.n() {
        let nb: Vec<usize> = bits(g.nbr(c)).collect();
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if g.nbr(a) & bit(b) != 0 {
                    continue;
                }
                for &d in &nb[j + 1..] {
                    if g.nbr(d) & (bit(a) | bit(b)) == 0 {
                        return Some([c, a, b, d]);
                    }
                }
            }
        }
    }
    None
}

/// True when every vertex is within distance one of every longest shortest
/// path. Defined for connected graphs only.
///
/// For each diametral pair `(u, v)` and each vertex `w`, the graph fails to be
/// narrow exactly when some shortest `u`–`v` path avoids the closed
/// neighborhood of `w`; that is a reachability question in the layered DAG of
/// shortest paths, so no path enumeration is needed.
pub fn is_narrow(g: &Graph) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if n <= 1 {
        return Ok(true);
    }
    let dist = g.distances();
    let d = |a: usize, b: usize| dist.get(a + 1, b + 1).expect("connected");
    let diam = dist.diameter();
    for u in 0..n {
        for v in u + 1..n {
            if d(u, v) != diam {
                continue;
            }
            let layers: Vec<u64> = (0..=diam)
                .map(|k| {
                    (0..n)
                        .filter(|&x| d(u, x) == k && d(x, v) == diam - k)
                        .fold(0, |acc, x| acc | bit(x))
                })
                .collect();
            for w in 0..n {
                let blocked = g.nbr(w) | bit(w);
                let mut reach = layers[0] & !blocked;
                for layer in &layers[1..] {
                    if reach == 0 {
                        break;
                    }
                    let frontier: u64 = bits(reach).fold(0, |acc, x| acc | g.nbr(x));
                    reach = frontier & layer & !blocked;
                }
                if reach != 0 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Chordal, claw-free, and narrow on every connected component.
pub fn is_closed(g: &Graph) -> bool {
    is_chordal(g)
        && is_claw_free(g)
        && g
            .component_masks(g.vertex_mask())
            .into_iter()
            .all(|c| is_narrow(&g.induced_on_mask(c)).expect("component is connected"))
}

/// A vertex order certifying closedness: `order()[k - 1]` is the vertex that
/// receives label `k`.
///
/// Under the relabeling, any two neighbors of a vertex that are both larger
/// than it, or both smaller than it, are adjacent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedLabeling {
    order: Vec<usize>,
}

impl ClosedLabeling {
    /// Validates that `order` is a permutation of `1..=n` satisfying the closed
    /// condition for `g`.
    pub fn new(g: &Graph, order: Vec<usize>) -> Result<Self> {
        let n = g.n();
        let mut seen = 0u64;
        if order.len() != n {
            return Err(Error::InvalidLabeling);
        }
        for &v in &order {
            if !(1..=n).contains(&v) || seen & bit(v - 1) != 0 {
                return Err(Error::InvalidLabeling);
            }
            seen |= bit(v - 1);
        }
        let labeling = ClosedLabeling { order };
        if satisfies_closed_condition(&labeling.relabel(g)) {
            Ok(labeling)
        } else {
            Err(Error::InvalidLabeling)
        }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Label assigned to original vertex `v`.
    pub fn label_of(&self, v: usize) -> usize {
        self.order.iter().position(|&x| x == v).expect("vertex in labeling") + 1
    }

    /// The graph with every vertex replaced by its label.
    pub fn relabel(&self, g: &Graph) -> Graph {
        let mut label = vec![0; g.n() + 1];
        for (k, &v) in self.order.iter().enumerate() {
            label[v] = k + 1;
        }
        Graph::from_edges(g.n(), g.edges().into_iter().map(|e| (label[e.u()], label[e.v()])))
            .expect("relabeling preserves validity")
    }
}

/// Checks the closed condition for the identity labeling.
pub fn satisfies_closed_condition(g: &Graph) -> bool {
    (0..g.n()).all(|i| {
        let nb = g.nbr(i);
        let above = nb & !low_mask(i + 1);
        let below = nb & low_mask(i);
        is_clique_mask(g, above) && is_clique_mask(g, below)
    })
}

fn is_clique_mask(g: &Graph, mask: u64) -> bool {
    bits(mask).all(|x| mask & !bit(x) & !g.nbr(x) == 0)
}

/// Searches for a closed labeling by depth-first search over partial labelings,
/// component by component. Candidates are tried lowest vertex first, so the
/// result is deterministic.
///
/// The search is exponential in the worst case and intended for desk-scale
/// graphs (roughly `n <= 9`).
pub fn find_closed_labeling(g: &Graph) -> Option<ClosedLabeling> {
    let mut order = Vec::with_capacity(g.n());
    for comp in g.component_masks(g.vertex_mask()) {
        let mut placed = Vec::new();
        let mut later = vec![0u64; g.n()];
        if !extend(g, comp, 0, &mut placed, &mut later) {
            return None;
        }
        order.extend(placed.into_iter().map(|v| v + 1));
    }
    Some(ClosedLabeling { order })
}

fn extend(g: &Graph, comp: u64, placed_mask: u64, placed: &mut Vec<usize>, later: &mut [u64]) -> bool {
    if placed_mask == comp {
        return true;
    }
    for v in bits(comp & !placed_mask) {
        let earlier = g.nbr(v) & placed_mask;
        // Earlier neighbors of v must be pairwise adjacent, and v must be
        // adjacent to every later neighbor already recorded for each of them.
        if !is_clique_mask(g, earlier) || bits(earlier).any(|u| later[u] & !g.nbr(v) != 0) {
            continue;
        }
        for u in bits(earlier) {
            later[u] |= bit(v);
        }
        placed.push(v);
        if extend(g, comp, placed_mask | bit(v), placed, later) {
            return true;
        }
        placed.pop();
        for u in bits(earlier) {
            later[u] &= !bit(v);
        }
    }
    false
}

/// `in<(G)`: bipartite on `x_1..x_n` and `y_1..y_n`, with `x_i y_j` an edge
/// exactly when `{i, j}` is an edge of the relabeled graph and `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BipartiteInitialGraph {
    base_n: usize,
    edges: Vec<(usize, usize)>,
}

impl BipartiteInitialGraph {
    pub fn base_n(&self) -> usize {
        self.base_n
    }

    /// Pairs `(i, j)` standing for the monomials `x_i y_j`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Vertex of `x_i` in [`Self::to_graph`].
    pub fn x_vertex(&self, i: usize) -> usize {
        i
    }

    /// Vertex of `y_j` in [`Self::to_graph`].
    pub fn y_vertex(&self, j: usize) -> usize {
        self.base_n + j
    }

    /// The bipartite graph as a plain graph on `2n` vertices: `x_i` is vertex
    /// `i` and `y_j` is vertex `n + j`.
    pub fn to_graph(&self) -> Result<Graph> {
        Graph::from_edges(
            2 * self.base_n,
            self.edges.iter().map(|&(i, j)| Edge::new(self.x_vertex(i), self.y_vertex(j))),
        )
    }
}

/// Builds `in<(G)` for a closed labeling of `g`.
pub fn in_graph(g: &Graph, labeling: &ClosedLabeling) -> Result<BipartiteInitialGraph> {
    let relabeled = ClosedLabeling::new(g, labeling.order.clone())?.relabel(g);
    let edges = relabeled.edges().into_iter().map(|e| (e.u(), e.v())).collect();
    Ok(BipartiteInitialGraph { base_n: g.n(), edges })
}
