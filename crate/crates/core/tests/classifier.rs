use bek_core::betti::formula_table;
use bek_core::enumerate::{all_graphs, are_isomorphic};
use bek_core::{classify_pure, has_linear_resolution, obstruction_scan, Graph, Obstruction, PureClass};

fn fork_tree() -> Graph {
    Graph::from_edges(5, [(1, 2), (1, 3), (1, 4), (4, 5)]).unwrap()
}

fn c4_pendant() -> Graph {
    Graph::from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 1), (1, 5)]).unwrap()
}

fn complete_by_count(g: &Graph) -> bool {
    g.is_connected() && g.edge_count() == g.n() * (g.n() - 1) / 2
}

fn complete_bipartite_by_search(g: &Graph) -> bool {
    let n = g.n();
    g.is_connected()
        && (1..(1u64 << n) - 1).any(|a| {
            let side = |v: usize| a >> (v - 1) & 1;
            (1..=n).all(|u| (u + 1..=n).all(|v| g.has_edge(u, v) == (side(u) != side(v))))
        })
}

fn paths_by_isomorphism(g: &Graph) -> bool {
    g.connected_components().iter().all(|c| {
        let h = g.induced_subgraph(c).unwrap();
        are_isomorphic(&h, &Graph::path(c.len()).unwrap()).unwrap()
    })
}

fn without_isolated(n: usize) -> Vec<Graph> {
    all_graphs(n).unwrap().into_iter().filter(|g| g.isolated_vertices().is_empty()).collect()
}

fn witness_has_claimed_shape(g: &Graph, o: &Obstruction) -> bool {
    let sub = |vs: &[usize]| g.induced_subgraph(vs).unwrap();
    match o {
        Obstruction::LongCycle(c) => {
            c.len() >= 5 && are_isomorphic(&sub(c), &Graph::cycle(c.len()).unwrap()).unwrap()
        }
        Obstruction::TriangleInNonClique { triangle: [a, b, c], component } => {
            g.has_edge(*a, *b)
                && g.has_edge(*b, *c)
                && g.has_edge(*a, *c)
                && g.connected_components().contains(component)
                && !sub(component).is_complete()
        }
        Obstruction::CycleWithPendant { .. } => are_isomorphic(&sub(&o.vertices()), &c4_pendant()).unwrap(),
        Obstruction::Fork { .. } => are_isomorphic(&sub(&o.vertices()), &fork_tree()).unwrap(),
        Obstruction::IncompatibleComponents { first, second } => {
            let comps = g.connected_components();
            comps.contains(first)
                && comps.contains(second)
                && first != second
                && !paths_by_isomorphism(&sub(first))
        }
    }
}

#[test]
fn classification_matches_independent_predicates() {
    for n in 2..=7 {
        for g in without_isolated(n) {
            let class = classify_pure(&g).unwrap();
            let expected = if complete_by_count(&g) {
                PureClass::Complete
            } else if complete_bipartite_by_search(&g) {
                PureClass::CompleteBipartite
            } else if paths_by_isomorphism(&g) {
                PureClass::DisjointPaths
            } else {
                assert!(!class.is_pure(), "{g}");
                continue;
            };
            assert_eq!(class, expected, "{g}");
            assert_eq!(has_linear_resolution(&g).unwrap(), expected == PureClass::Complete);
        }
    }
}

#[test]
fn every_impure_graph_gets_a_valid_witness() {
    for n in 2..=7 {
        for g in without_isolated(n) {
            match classify_pure(&g).unwrap() {
                PureClass::NotPure(Some(o)) => assert!(witness_has_claimed_shape(&g, &o), "{g}: {o:?}"),
                PureClass::NotPure(None) => panic!("no witness for {g}"),
                _ => assert_eq!(obstruction_scan(&g), None, "{g}"),
            }
        }
    }
}

/// All pure graphs on at most `max` vertices, built directly.
fn pure_graphs(max: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 2..=max {
        out.push(Graph::complete(n).unwrap());
        for a in 1..=n / 2 {
            out.push(Graph::complete_bipartite(a, n - a).unwrap());
        }
    }
    // disjoint unions of paths: partitions of n into parts >= 2
    fn parts(rest: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
        }
        for p in min..=rest {
            cur.push(p);
            parts(rest - p, p, cur, out);
            cur.pop();
        }
    }
    for n in 2..=max {
        let mut ps = Vec::new();
        parts(n, 2, &mut Vec::new(), &mut ps);
        for p in ps {
            let g = p
                .iter()
                .fold(Graph::new(0).unwrap(), |acc, &k| acc.disjoint_union(&Graph::path(k).unwrap()).unwrap());
            out.push(g);
        }
    }
    out
}

#[test]
fn pure_graphs_avoid_catalogued_patterns() {
    let (fork, h) = (fork_tree(), c4_pendant());
    for g in pure_graphs(9) {
        assert!(classify_pure(&g).unwrap().is_pure(), "{g}");
        let n = g.n();
        for w in 1u64..1 << n {
            let vs: Vec<usize> = (1..=n).filter(|v| w >> (v - 1) & 1 == 1).collect();
            if vs.len() < 5 {
                continue;
            }
            let sub = g.induced_subgraph(&vs).unwrap();
            let is_cycle = sub.is_connected() && (1..=sub.n()).all(|v| sub.degree(v) == 2);
            assert!(!is_cycle, "{g} has an induced C_{}", vs.len());
            if vs.len() == 5 {
                assert!(!are_isomorphic(&sub, &fork).unwrap(), "{g} on {vs:?}");
                assert!(!are_isomorphic(&sub, &h).unwrap(), "{g} on {vs:?}");
            }
        }
    }
}

#[test]
fn closed_form_purity_agrees_with_verdict() {
    let mut checked = 0;
    for n in 2..=7 {
        for g in without_isolated(n) {
            if let Ok(table) = formula_table(&g) {
                let class = classify_pure(&g).unwrap();
                assert_eq!(table.purity().is_pure(), class.is_pure(), "{g}");
                checked += 1;
            }
        }
    }
    assert!(checked > 50);
}
