//! Which binomial edge ideals have linear or pure resolutions.
//!
//! A graph without isolated vertices gives a pure resolution exactly when it
//! is complete, complete bipartite, or a disjoint union of paths; the
//! resolution is linear exactly when the graph is complete. Recognition is
//! structural. [`obstruction_scan`] separately looks for a small induced
//! pattern explaining a negative verdict.

use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::{bit, bits, mask_to_vertices, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum PureClass {
    Complete,
    CompleteBipartite,
    DisjointPaths,
    NotPure(Option<Obstruction>),
}

impl PureClass {
    pub fn is_pure(&self) -> bool {
        !matches!(self, PureClass::NotPure(_))
    }

    pub fn verdict(&self) -> &'static str {
        match self {
            PureClass::Complete => "Complete",
            PureClass::CompleteBipartite => "CompleteBipartite",
            PureClass::DisjointPaths => "DisjointPaths",
            PureClass::NotPure(_) => "NotPure",
        }
    }

    pub fn hint(&self) -> Option<&'static str> {
        match self {
            PureClass::NotPure(Some(o)) => Some(o.hint()),
            _ => None,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let witness = match self {
            PureClass::NotPure(Some(o)) => serde_json::to_value(o).expect("plain data"),
            _ => serde_json::Value::Null,
        };
        json!({ "verdict": self.verdict(), "hint": self.hint(), "witness": witness })
    }
}

/// An induced pattern that rules out a pure resolution. Vertex labels refer to
/// the scanned graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Obstruction {
    /// Chordless cycle of length at least 5, in cyclic order.
    LongCycle(Vec<usize>),
    /// A triangle inside a connected component that is not a clique.
    TriangleInNonClique { triangle: [usize; 3], component: Vec<usize> },
    /// Induced 4-cycle in cyclic order plus a vertex adjacent to exactly one
    /// cycle vertex.
    CycleWithPendant { cycle: [usize; 4], pendant: usize },
    /// Induced claw with one edge subdivided: `center` is joined to `leaves`
    /// and to `inner`, which continues to `tip`. It holds an induced P_4
    /// (`tip, inner, center, leaves[0]`) and an induced K_{1,3}.
    Fork { center: usize, leaves: [usize; 2], inner: usize, tip: usize },
    /// Two components whose tables cannot tensor to a pure table.
    IncompatibleComponents { first: Vec<usize>, second: Vec<usize> },
}

impl Obstruction {
    pub fn hint(&self) -> &'static str {
        match self {
            Obstruction::LongCycle(_) => "induced C_m, m≥5",
            Obstruction::TriangleInNonClique { .. } => "triangle in a non-complete component",
            Obstruction::CycleWithPendant { .. } => "induced C_4 plus pendant vertex",
            Obstruction::Fork { .. } => "induced P_4 and K_{1,3}",
            Obstruction::IncompatibleComponents { .. } => "incompatible components",
        }
    }

    /// Vertices of the witness.
    pub fn vertices(&self) -> Vec<usize> {
        let mut v = match self {
            Obstruction::LongCycle(c) => c.clone(),
            Obstruction::TriangleInNonClique { triangle, .. } => triangle.to_vec(),
            Obstruction::CycleWithPendant { cycle, pendant } => {
                let mut v = cycle.to_vec();
                v.push(*pendant);
                v
            }
            Obstruction::Fork { center, leaves, inner, tip } => {
                vec![*center, leaves[0], leaves[1], *inner, *tip]
            }
            Obstruction::IncompatibleComponents { first, second } => {
                first.iter().chain(second).copied().collect()
            }
        };
        v.sort_unstable();
        v
    }
}

fn reject_isolated(g: &Graph) -> Result<()> {
    if let Some(&v) = g.isolated_vertices().first() {
        return Err(Error::IsolatedVertex(v));
    }
    if g.n() == 0 {
        return Err(Error::InvalidParameter("graph has no vertices".into()));
    }
    Ok(())
}

pub fn has_linear_resolution(g: &Graph) -> Result<bool> {
    reject_isolated(g)?;
    Ok(g.is_complete())
}

pub fn classify_pure(g: &Graph) -> Result<PureClass> {
    reject_isolated(g)?;
    let comps = g.component_masks(g.vertex_mask());
    let class = if comps.len() == 1 && g.is_complete() {
        PureClass::Complete
    } else if comps.len() == 1 && is_complete_bipartite_on(g, comps[0]) {
        PureClass::CompleteBipartite
    } else if comps.iter().all(|&c| is_path_on(g, c)) {
        PureClass::DisjointPaths
    } else {
        PureClass::NotPure(obstruction_scan(g))
    };
    Ok(class)
}

fn edges_within(g: &Graph, c: u64) -> usize {
    bits(c).map(|v| (g.nbr(v) & c).count_ones() as usize).sum::<usize>() / 2
}

fn is_clique_on(g: &Graph, c: u64) -> bool {
    bits(c).all(|v| g.nbr(v) & c == c & !bit(v))
}

/// `c` must be connected.
fn is_path_on(g: &Graph, c: u64) -> bool {
    let k = c.count_ones() as usize;
    k >= 2 && edges_within(g, c) == k - 1 && bits(c).all(|v| (g.nbr(v) & c).count_ones() <= 2)
}

/// `c` must be connected: two-colour it and count edges across.
fn is_complete_bipartite_on(g: &Graph, c: u64) -> bool {
    let start = c.trailing_zeros() as usize;
    let (mut side, mut other) = (bit(start), 0u64);
    let mut frontier = side;
    let mut colored = side;
    let mut flip = false;
    while frontier != 0 {
        let mut next = 0;
        for v in bits(frontier) {
            next |= g.nbr(v) & c;
        }
        next &= !colored;
        colored |= next;
        if flip {
            side |= next;
        } else {
            other |= next;
        }
        flip = !flip;
        frontier = next;
    }
    let (a, b) = (side.count_ones() as usize, other.count_ones() as usize);
    a > 0
        && b > 0
        && bits(side).all(|v| g.nbr(v) & side == 0)
        && bits(other).all(|v| g.nbr(v) & other == 0)
        && edges_within(g, c) == a * b
}

/// Best-effort search for one catalogued obstruction. Returns `None` when the
/// graph is pure or no pattern matches; isolated vertices are ignored.
pub fn obstruction_scan(g: &Graph) -> Option<Obstruction> {
    let comps: Vec<u64> = g
        .component_masks(g.vertex_mask())
        .into_iter()
        .filter(|c| c.count_ones() > 1)
        .collect();
    for &c in &comps {
        if let Some(o) = scan_component(g, c) {
            return Some(o);
        }
    }
    // every component is individually pure; two of them clash unless all are paths
    let odd = comps.iter().position(|&c| !is_path_on(g, c))?;
    let partner = (0..comps.len()).find(|&k| k != odd)?;
    Some(Obstruction::IncompatibleComponents {
        first: mask_to_vertices(comps[odd]),
        second: mask_to_vertices(comps[partner]),
    })
}

fn scan_component(g: &Graph, c: u64) -> Option<Obstruction> {
    if is_clique_on(g, c) || is_complete_bipartite_on(g, c) || is_path_on(g, c) {
        return None;
    }
    if let Some(cycle) = long_chordless_cycle(g, c) {
        return Some(Obstruction::LongCycle(cycle));
    }
    if let Some(triangle) = triangle_in(g, c) {
        return Some(Obstruction::TriangleInNonClique {
            triangle,
            component: mask_to_vertices(c),
        });
    }
    if let Some((cycle, pendant)) = four_cycle_with_pendant(g, c) {
        return Some(Obstruction::CycleWithPendant { cycle, pendant });
    }
    fork(g, c)
}

fn long_chordless_cycle(g: &Graph, c: u64) -> Option<Vec<usize>> {
    // grow induced paths from the smallest cycle vertex s through larger vertices
    fn extend(g: &Graph, path: &mut Vec<usize>, pmask: u64, allowed: u64) -> bool {
        let s = path[0];
        let last = *path.last().expect("nonempty");
        let interior = pmask & !bit(s) & !bit(last);
        for v in bits(g.nbr(last) & allowed & !pmask) {
            if g.nbr(v) & interior != 0 {
                continue;
            }
            let closes = path.len() > 1 && g.nbr(v) & bit(s) != 0;
            if closes {
                if path.len() >= 4 {
                    path.push(v);
                    return true;
                }
                continue;
            }
            path.push(v);
            if extend(g, path, pmask | bit(v), allowed) {
                return true;
            }
            path.pop();
        }
        false
    }
    for s in bits(c) {
        let allowed = c & !crate::graph::low_mask(s + 1);
        let mut path = vec![s];
        if extend(g, &mut path, bit(s), allowed) {
            return Some(path.into_iter().map(|v| v + 1).collect());
        }
    }
    None
}

fn triangle_in(g: &Graph, c: u64) -> Option<[usize; 3]> {
    for a in bits(c) {
        for b in bits(g.nbr(a) & c).filter(|&b| b > a) {
            if let Some(x) = bits(g.nbr(a) & g.nbr(b) & c).find(|&x| x > b) {
                return Some([a + 1, b + 1, x + 1]);
            }
        }
    }
    None
}

fn four_cycle_with_pendant(g: &Graph, c: u64) -> Option<([usize; 4], usize)> {
    for a in bits(c) {
        for cc in bits(c & !g.nbr(a)).filter(|&x| x > a) {
            let common: Vec<usize> = bits(g.nbr(a) & g.nbr(cc) & c).collect();
            for (k, &b) in common.iter().enumerate() {
                for &d in &common[k + 1..] {
                    if g.nbr(b) & bit(d) != 0 {
                        continue;
                    }
                    let cyc = bit(a) | bit(b) | bit(cc) | bit(d);
                    if let Some(p) = bits(c & !cyc).find(|&p| (g.nbr(p) & cyc).count_ones() == 1) {
                        return Some(([a + 1, b + 1, cc + 1, d + 1], p + 1));
                    }
                }
            }
        }
    }
    None
}

fn fork(g: &Graph, c: u64) -> Option<Obstruction> {
    for center in bits(c) {
        let nc = g.nbr(center) & c;
        for inner in bits(nc) {
            let tips = g.nbr(inner) & c & !nc & !bit(center);
            for tip in bits(tips) {
                let leaves: Vec<usize> =
                    bits(nc & !bit(inner) & !g.nbr(inner) & !g.nbr(tip)).collect();
                for (k, &x) in leaves.iter().enumerate() {
                    if let Some(&y) = leaves[k + 1..].iter().find(|&&y| g.nbr(x) & bit(y) == 0) {
                        return Some(Obstruction::Fork {
                            center: center + 1,
                            leaves: [x + 1, y + 1],
                            inner: inner + 1,
                            tip: tip + 1,
                        });
                    }
                }
            }
        }
    }
    None
}
