use bek_core::closedness::{is_chordal, is_claw_free, is_narrow, satisfies_closed_condition};
use bek_core::enumerate::all_graphs;
use bek_core::{find_closed_labeling, in_graph, is_closed, ClosedLabeling, Graph};

/// Every shortest path of maximal length, spelled out vertex by vertex.
fn longest_shortest_paths(g: &Graph) -> Vec<Vec<usize>> {
    let d = g.distances();
    let diam = d.diameter();
    let mut out = Vec::new();
    for s in 1..=g.n() {
        for t in s + 1..=g.n() {
            if d.get(s, t) != Some(diam) {
                continue;
            }
            let mut stack = vec![vec![s]];
            while let Some(p) = stack.pop() {
                let last = *p.last().unwrap();
                if last == t {
                    out.push(p);
                    continue;
                }
                for w in g.neighbors(last) {
                    if d.get(w, t) == Some(diam - p.len()) {
                        let mut q = p.clone();
                        q.push(w);
                        stack.push(q);
                    }
                }
            }
        }
    }
    out
}

fn narrow_by_paths(g: &Graph) -> bool {
    longest_shortest_paths(g).iter().all(|p| {
        (1..=g.n()).all(|v| p.contains(&v) || p.iter().any(|&u| g.has_edge(u, v)))
    })
}

fn components(g: &Graph) -> Vec<Graph> {
    g.connected_components()
        .iter()
        .map(|c| g.induced_subgraph(c).unwrap())
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..=p.len() {
            let mut q = p.clone();
            q.insert(k, n);
            out.push(q);
        }
    }
    out
}

#[test]
fn narrowness_matches_path_enumeration() {
    for n in 1..=7 {
        for g in all_graphs(n).unwrap() {
            for c in components(&g) {
                assert_eq!(is_narrow(&c).unwrap(), narrow_by_paths(&c), "{c}");
            }
        }
    }
}

#[test]
fn closedness_characterisations_agree() {
    for n in 1..=7 {
        for g in all_graphs(n).unwrap() {
            let structural = components(&g)
                .iter()
                .all(|c| is_chordal(c) && is_claw_free(c) && is_narrow(c).unwrap());
            let labeling = find_closed_labeling(&g);
            assert_eq!(is_closed(&g), structural, "{g}");
            assert_eq!(is_closed(&g), labeling.is_some(), "{g}");
            if let Some(l) = labeling {
                assert!(satisfies_closed_condition(&l.relabel(&g)), "{g}");
            }
        }
    }
}

#[test]
fn labeling_search_matches_exhaustive_search() {
    for n in 1..=6 {
        let perms = permutations(n);
        for g in all_graphs(n).unwrap() {
            // the constructor accepts exactly the closed labelings
            let exists = perms.iter().any(|p| ClosedLabeling::new(&g, p.clone()).is_ok());
            assert_eq!(find_closed_labeling(&g).is_some(), exists, "{g}");
        }
    }
}

#[test]
fn initial_graph_is_bipartite_with_one_edge_per_edge() {
    for g in all_graphs(6).unwrap().into_iter().filter(is_closed) {
        let l = find_closed_labeling(&g).unwrap();
        let b = in_graph(&g, &l).unwrap();
        assert_eq!(b.edges().len(), g.edge_count());
        for &(i, j) in b.edges() {
            assert!(i < j && j <= g.n(), "{g}: {i} {j}");
        }
        let h = b.to_graph().unwrap();
        for e in h.edges() {
            assert!(e.u() <= g.n() && e.v() > g.n(), "{g}: {e}");
        }
    }
}
