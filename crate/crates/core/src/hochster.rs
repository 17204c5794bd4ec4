//! Graded Betti numbers of squarefree monomial edge ideals, computed from
//! topology alone.
//!
//! For the edge ideal `I(H)` of a graph `H`, whose Stanley–Reisner complex is
//! the independence complex `Δ = Ind(H)`, Hochster's formula reads
//!
//! ```text
//! β_{i,j}(S/I(H)) = Σ_{W ⊆ V, |W| = j} dim H̃_{j-i-1}(Δ_W)
//! ```
//!
//! with `Δ_W = Ind(H[W])`. The linear strand is also available independently
//! by counting components of complements of induced subgraphs.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::betti::BettiTable;
use crate::closedness::{find_closed_labeling, in_graph, is_closed, ClosedLabeling};
use crate::error::{Error, Result};
use crate::graph::{bits, low_mask, Graph};
use crate::homology::{independent_sets, ranks_from_faces};
use crate::linalg::Coefficients;

pub const DEFAULT_SUBSET_CAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HochsterConfig {
    /// Largest vertex count for which the `2^n` subset sum is attempted.
    pub vertex_cap: usize,
    pub coefficients: Coefficients,
    /// Skip cones and split each `Δ_W` into a join over the components of
    /// `H[W]`. Off means a literal homology computation for every subset.
    pub split_components: bool,
}

impl Default for HochsterConfig {
    fn default() -> Self {
        HochsterConfig {
            vertex_cap: DEFAULT_SUBSET_CAP,
            coefficients: Coefficients::Rational,
            split_components: true,
        }
    }
}

/// Full graded Betti table of `S/I(h)`.
pub fn hochster_betti(h: &Graph, config: &HochsterConfig) -> Result<BettiTable> {
    let n = h.n();
    if n > config.vertex_cap {
        return Err(Error::SubsetCapExceeded { vertices: n, cap: config.vertex_cap });
    }
    let mut sums: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    sums.insert((0, 0), 1);
    let mut cache: HashMap<u64, Vec<u64>> = HashMap::new();
    for w in 1..=low_mask(n) {
        let j = w.count_ones() as usize;
        // coefficient k of the polynomial is dim H̃_{k-1}(Δ_W)
        let poly = if config.split_components {
            match reduced_poincare_split(h, w, config.coefficients, &mut cache) {
                Some(p) => p,
                None => continue,
            }
        } else {
            let faces = independent_sets(h, w);
            ranks_from_faces(&faces, config.coefficients).iter().map(|&r| r as u64).collect()
        };
        for (k, &c) in poly.iter().enumerate() {
            if c == 0 {
                continue;
            }
            // H̃_{k-1} sits at j - i - 1 = k - 1
            let i = j.checked_sub(k).filter(|&i| i >= 1).expect("homology below the top dimension");
            *sums.entry((i, j)).or_insert(0) += c;
        }
    }
    BettiTable::from_entries(sums)
}

/// Reduced Poincaré polynomial of `Ind(H[w])`, or `None` when some vertex of
/// `H[w]` is isolated there (the complex is a cone and acyclic).
///
/// `Ind` of a disjoint union is the join of the pieces, and over a field the
/// reduced Poincaré polynomials `Σ dim H̃_d t^{d+1}` multiply under joins.
fn reduced_poincare_split(
    h: &Graph,
    w: u64,
    coefficients: Coefficients,
    cache: &mut HashMap<u64, Vec<u64>>,
) -> Option<Vec<u64>> {
    if bits(w).any(|v| h.nbr(v) & w == 0) {
        return None;
    }
    let mut poly = vec![1u64];
    for comp in h.component_masks(w) {
        let piece = cache.entry(comp).or_insert_with(|| {
            let faces = independent_sets(h, comp);
            ranks_from_faces(&faces, coefficients).iter().map(|&r| r as u64).collect()
        });
        if piece.iter().all(|&c| c == 0) {
            return None;
        }
        let mut next = vec![0u64; poly.len() + piece.len() - 1];
        for (a, &x) in poly.iter().enumerate() {
            for (b, &y) in piece.iter().enumerate() {
                next[a + b] += x * y;
            }
        }
        poly = next;
    }
    Some(poly)
}

/// `β_{i,i+2}(I(h)) = Σ_{|W| = i+2} (#components of the complement of h on W) - 1`.
pub fn roth_van_tuyl(h: &Graph, i: usize) -> u64 {
    let n = h.n();
    let size = i + 2;
    if size > n {
        return 0;
    }
    let comp = h.complement();
    let mut total = 0u64;
    // Gosper's hack over all size-subsets
    let mut w: u64 = low_mask(size);
    loop {
        total += comp.component_masks(w).len() as u64 - 1;
        let c = w & w.wrapping_neg();
        let r = w + c;
        if r == 0 || r > low_mask(n) {
            break;
        }
        w = (((r ^ w) >> 2) / c) | r;
        if w > low_mask(n) {
            break;
        }
    }
    total
}

/// One row of a closed-strand comparison for the ideal index `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StrandRow {
    pub i: usize,
    pub roth_van_tuyl: u64,
    pub hochster: u64,
    /// `(i + 1)·k_{i+2}(G)`.
    pub clique_count: u64,
}

impl StrandRow {
    pub fn agrees(&self) -> bool {
        self.roth_van_tuyl == self.hochster && self.hochster == self.clique_count
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedStrandReport {
    pub labeling: ClosedLabeling,
    pub rows: Vec<StrandRow>,
}

impl ClosedStrandReport {
    pub fn is_consistent(&self) -> bool {
        self.rows.iter().all(StrandRow::agrees)
    }
}

/// For a closed graph `G`, compares three values of `β_{i,i+2}(I(in<(G)))`:
/// the component count sum, the Hochster table of `in<(G)`, and
/// `(i+1)·k_{i+2}(G)`. Rows cover `0 <= i <= 2n - 2`.
pub fn closed_strand_check(g: &Graph, config: &HochsterConfig) -> Result<ClosedStrandReport> {
    if !is_closed(g) {
        return Err(Error::NotClosed);
    }
    let labeling = find_closed_labeling(g).ok_or(Error::NotClosed)?;
    let h = in_graph(g, &labeling)?.to_graph()?;
    let table = hochster_betti(&h, config)?;
    let census = g.clique_census();
    let rows = (0..=h.n().saturating_sub(2))
        .map(|i| StrandRow {
            i,
            roth_van_tuyl: roth_van_tuyl(&h, i),
            hochster: table.get(i + 1, i + 2),
            clique_count: (i as u64 + 1) * census.k(i + 2),
        })
        .collect();
    Ok(ClosedStrandReport { labeling, rows })
}
