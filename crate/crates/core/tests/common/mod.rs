#![allow(dead_code)]

use bek_core::{BettiTable, Edge, Graph};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut TestRng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n).unwrap();
    for j in 2..=n {
        for i in 1..j {
            if rng.gen_bool(p) {
                g.insert_edge(i, j).unwrap();
            }
        }
    }
    g
}

/// A clique on `1..=m` with a random tree grown from it, one vertex at a time.
pub fn clique_with_tree(rng: &mut TestRng, m: usize, extra: usize) -> Graph {
    let mut g = Graph::complete(m).unwrap().disjoint_union(&Graph::new(extra).unwrap()).unwrap();
    for v in m + 1..=m + extra {
        let parent = rng.gen_range(1..v);
        g.insert_edge(parent, v).unwrap();
    }
    g
}

/// Picks a free cut edge and a replacement across the same split that the
/// switch accepts. Returns `None` if none was found in a bounded search.
pub fn random_switch(rng: &mut TestRng, g: &Graph) -> Option<(Edge, Edge, Graph)> {
    let free = g.free_cut_edges();
    let remove = *free.choose(rng)?;
    let cut = g.without_edge(remove).unwrap();
    let side: Vec<usize> = cut
        .connected_components()
        .into_iter()
        .find(|c| c.contains(&remove.u()))
        .unwrap();
    let other: Vec<usize> = (1..=g.n()).filter(|v| !side.contains(v)).collect();
    for _ in 0..200 {
        let add = Edge::new(*side.choose(rng)?, *other.choose(rng)?);
        if add == remove {
            continue;
        }
        if let Ok(h) = g.switch_free_cut_edge(remove, add) {
            return Some((remove, add, h));
        }
    }
    None
}

/// A quotient table with `β_{0,0} = 1` and a few random entries above it.
pub fn random_table(rng: &mut TestRng) -> BettiTable {
    let mut entries = vec![((0, 0), 1)];
    for i in 1..=rng.gen_range(1..=4usize) {
        for _ in 0..rng.gen_range(1..=2) {
            let j = i + rng.gen_range(1..=3usize);
            entries.push(((i, j), rng.gen_range(1..=9u64)));
        }
    }
    BettiTable::from_entries(entries).unwrap()
}
