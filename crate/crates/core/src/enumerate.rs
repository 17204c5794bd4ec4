//! Exhaustive generation of small graphs up to isomorphism.
//!
//! Classes on `n` vertices come from classes on `n - 1` by adding a vertex
//! with every possible neighbourhood; duplicates are removed by a canonical
//! code. The code is the least upper-triangle bit string over all vertex
//! orders compatible with colour refinement, so it is exact but meant for
//! small graphs.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::graph::{bit, bits, low_mask, Graph};

/// Largest vertex count accepted by [`canonical_form`].
pub const CANONICAL_MAX_VERTICES: usize = 16;

/// Isomorphism invariant that determines the class: equal forms mean
/// isomorphic graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    code: u128,
}

impl CanonicalForm {
    /// The representative graph with this code.
    pub fn to_graph(&self) -> Graph {
        let mut adj = vec![0u64; self.n];
        let mut k = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.code & (1u128 << k) != 0 {
                    adj[i] |= bit(j);
                    adj[j] |= bit(i);
                }
                k += 1;
            }
        }
        Graph::from_adjacency(adj)
    }
}

fn code_for(g: &Graph, order: &[usize]) -> u128 {
    let mut code = 0u128;
    let mut k = 0;
    for j in 1..order.len() {
        let row = g.nbr(order[j]);
        for &oi in &order[..j] {
            if row & bit(oi) != 0 {
                code |= 1u128 << k;
            }
            k += 1;
        }
    }
    code
}

/// Stable colour refinement; returns vertex cells ordered by colour.
fn refined_cells(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut colour: Vec<usize> = (0..n).map(|v| g.degree(v + 1)).collect();
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut s: Vec<usize> = bits(g.nbr(v)).map(|u| colour[u]).collect();
                s.sort_unstable();
                (colour[v], s)
            })
            .collect();
        let mut ranks: BTreeMap<&(usize, Vec<usize>), usize> = BTreeMap::new();
        for s in &signatures {
            ranks.insert(s, 0);
        }
        for (r, slot) in ranks.values_mut().enumerate() {
            *slot = r;
        }
        let next: Vec<usize> = signatures.iter().map(|s| ranks[s]).collect();
        let stable = ranks.len() == colour.iter().collect::<BTreeSet<_>>().len();
        colour = next;
        if stable {
            break;
        }
    }
    let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, &c) in colour.iter().enumerate() {
        cells.entry(c).or_default().push(v);
    }
    cells.into_values().collect()
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.n();
    if n > CANONICAL_MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: CANONICAL_MAX_VERTICES });
    }
    let cells = refined_cells(g);
    let mut best: Option<u128> = None;
    let mut order = Vec::with_capacity(n);
    let mut used = 0u64;
    search(g, &cells, 0, &mut order, &mut used, &mut best);
    Ok(CanonicalForm { n, code: best.unwrap_or(0) })
}

fn search(
    g: &Graph,
    cells: &[Vec<usize>],
    cell: usize,
    order: &mut Vec<usize>,
    used: &mut u64,
    best: &mut Option<u128>,
) {
    if cell == cells.len() {
        let c = code_for(g, order);
        if best.is_none_or(|b| c < b) {
            *best = Some(c);
        }
        return;
    }
    let members = &cells[cell];
    let remaining: Vec<usize> = members.iter().copied().filter(|&v| *used & bit(v) == 0).collect();
    if remaining.is_empty() {
        search(g, cells, cell + 1, order, used, best);
        return;
    }
    for v in remaining {
        order.push(v);
        *used |= bit(v);
        search(g, cells, cell, order, used, best);
        *used &= !bit(v);
        order.pop();
    }
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    Ok(a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_form(a)? == canonical_form(b)?)
}

/// One representative of every isomorphism class on `n` vertices, ordered by
/// edge count and then canonical code.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > CANONICAL_MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: CANONICAL_MAX_VERTICES });
    }
    let mut classes = vec![CanonicalForm { n: 0, code: 0 }];
    for k in 1..=n {
        let mut next: HashSet<CanonicalForm> = HashSet::new();
        for form in &classes {
            let base = form.to_graph();
            for nbhd in 0..=low_mask(k - 1) {
                let mut adj = base.adjacency().to_vec();
                for u in bits(nbhd) {
                    adj[u] |= bit(k - 1);
                }
                adj.push(nbhd);
                next.insert(canonical_form(&Graph::from_adjacency(adj))?);
            }
        }
        classes = next.into_iter().collect();
    }
    let mut graphs: Vec<(usize, u128, Graph)> = classes
        .into_iter()
        .map(|f| {
            let g = f.to_graph();
            (g.edge_count(), f.code, g)
        })
        .collect();
    graphs.sort_by_key(|&(e, c, _)| (e, c));
    Ok(graphs.into_iter().map(|(_, _, g)| g).collect())
}

pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(all_graphs(n)?.into_iter().filter(Graph::is_connected).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let all = [1, 1, 2, 4, 11, 34, 156];
        let connected = [1, 1, 1, 2, 6, 21, 112];
        for n in 0..all.len() {
            assert_eq!(all_graphs(n).unwrap().len(), all[n], "n={n}");
            assert_eq!(connected_graphs(n).unwrap().len(), connected[n], "n={n}");
        }
    }

    #[test]
    fn relabeling_preserves_form() {
        let g = Graph::k_handle_lollipop(3, &[2, 1]).unwrap();
        let order = [5, 2, 6, 1, 4, 3];
        let mut h = Graph::new(6).unwrap();
        for e in g.edges() {
            h.insert_edge(order[e.u() - 1], order[e.v() - 1]).unwrap();
        }
        assert!(are_isomorphic(&g, &h).unwrap());
        assert!(!are_isomorphic(&g, &Graph::k_handle_lollipop(3, &[3]).unwrap()).unwrap());
    }

    #[test]
    fn regular_graphs_are_separated() {
        // both 3-regular on 6 vertices: the prism and K_{3,3}
        let prism = Graph::from_edges(
            6,
            [(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4), (1, 4), (2, 5), (3, 6)],
        )
        .unwrap();
        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        assert!(!are_isomorphic(&prism, &k33).unwrap());
        let c6 = Graph::cycle(6).unwrap();
        let two_triangles = Graph::complete(3).unwrap().disjoint_union(&Graph::complete(3).unwrap()).unwrap();
        assert!(!are_isomorphic(&c6, &two_triangles).unwrap());
    }

    #[test]
    fn representative_round_trips() {
        for g in all_graphs(5).unwrap() {
            let f = canonical_form(&g).unwrap();
            assert_eq!(f.to_graph(), g);
        }
    }
}
