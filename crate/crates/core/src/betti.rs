//! Graded Betti tables and every closed-form computation of them.
//!
//! All tables are stored for the quotient `S/I`, so entry `(0, 0)` is always 1.
//! [`BettiTable::to_ideal`] shifts to the indexing of the ideal itself,
//! `β_{i,j}(I) = β_{i+1,j}(S/I)`.
//!
//! A table is also read as the Betti polynomial `Σ β_{i,j} p^i q^j`: tensor
//! products of resolutions multiply these polynomials, and attaching a free cut
//! edge multiplies by `1 + p q²`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: usize, k: isize) -> u64 {
    if k < 0 || k as usize > n {
        return 0;
    }
    let k = (k as usize).min(n - k as usize);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial coefficient fits in u64")
}

/// Result of a purity check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Purity {
    Pure,
    /// Homological degree `i` carries nonzero entries in two internal degrees.
    NotPure { i: usize, degrees: (usize, usize) },
}

impl Purity {
    pub fn is_pure(&self) -> bool {
        matches!(self, Purity::Pure)
    }
}

fn purity_from(entries: &BTreeMap<(usize, usize), u64>, from: usize) -> Purity {
    let mut seen: BTreeMap<usize, usize> = BTreeMap::new();
    for &(i, j) in entries.keys() {
        if i < from {
            continue;
        }
        if let Some(&j0) = seen.get(&i) {
            return Purity::NotPure { i, degrees: (j0, j) };
        }
        seen.insert(i, j);
    }
    Purity::Pure
}

/// Betti table of a quotient `S/I`: `(i, j) -> β_{i,j}`, zeros omitted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
}

impl serde::Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl BettiTable {
    /// The table of `S` itself.
    pub fn ring() -> Self {
        BettiTable { entries: BTreeMap::from([((0, 0), 1)]) }
    }

    /// Builds a quotient table. Zero counts are dropped; `(0, 0)` must be 1 and
    /// no other entry may sit in homological degree 0.
    pub fn from_entries<I>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), u64)>,
    {
        let mut map = BTreeMap::new();
        for (key, count) in entries {
            if count != 0 {
                *map.entry(key).or_insert(0) += count;
            }
        }
        if map.get(&(0, 0)) != Some(&1) || map.keys().any(|&(i, j)| i == 0 && j != 0) {
            return Err(Error::InvalidParameter(
                "quotient Betti table needs β_{0,0} = 1 and nothing else in degree 0".into(),
            ));
        }
        Ok(BettiTable { entries: map })
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries `((i, j), β_{i,j})` in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// True for the table of `S` (the zero ideal).
    pub fn is_trivial(&self) -> bool {
        self.entries.len() == 1
    }

    /// Projective dimension: the largest `i` with a nonzero entry.
    pub fn pd(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Regularity: the largest `j - i` over nonzero entries.
    pub fn reg(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    /// Pure when every homological degree `i >= 1` has at most one internal degree.
    pub fn purity(&self) -> Purity {
        purity_from(&self.entries, 1)
    }

    /// Internal degree at homological degree `i` when exactly one is present.
    pub fn single_degree(&self, i: usize) -> Option<usize> {
        let mut it = self.entries.range((i, 0)..=(i, usize::MAX)).map(|(&(_, j), _)| j);
        match (it.next(), it.next()) {
            (Some(j), None) => Some(j),
            _ => None,
        }
    }

    /// The linear strand `β_{i,i+2}(I)` of the ideal, for `i = 0..=pd - 1`.
    pub fn ideal_linear_strand(&self) -> Vec<u64> {
        (1..=self.pd().max(1)).map(|k| self.get(k, k + 1)).collect()
    }

    pub fn to_ideal(&self) -> IdealBettiTable {
        IdealBettiTable {
            entries: self
                .entries
                .iter()
                .filter(|&(&(i, _), _)| i > 0)
                .map(|(&(i, j), &c)| ((i - 1, j), c))
                .collect(),
        }
    }

    /// Multiplies the Betti polynomial by `p q²`.
    fn shifted(&self) -> BTreeMap<(usize, usize), u64> {
        self.entries.iter().map(|(&(i, j), &c)| ((i + 1, j + 2), c)).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "indexing": "quotient",
            "pd": self.pd(),
            "reg": self.reg(),
            "entries": self
                .iter()
                .map(|((i, j), c)| serde_json::json!({ "i": i, "j": j, "count": c }))
                .collect::<Vec<_>>(),
        })
    }

    /// Diagram in the usual "regularity rows" layout: row `r` lists `β_{i,i+r}`
    /// in column `i`, zeros drawn as `.`.
    pub fn diagram(&self) -> String {
        let pd = self.pd();
        let reg = self.reg();
        let cells: Vec<Vec<String>> = (0..=reg)
            .map(|r| {
                (0..=pd)
                    .map(|i| match self.get(i, i + r) {
                        0 => ".".to_string(),
                        c => c.to_string(),
                    })
                    .collect()
            })
            .collect();
        let totals: Vec<String> = (0..=pd)
            .map(|i| self.iter().filter(|&((a, _), _)| a == i).map(|(_, c)| c).sum::<u64>().to_string())
            .collect();
        let header: Vec<String> = (0..=pd).map(|i| i.to_string()).collect();
        let width = cells
            .iter()
            .flatten()
            .chain(&totals)
            .chain(&header)
            .map(String::len)
            .max()
            .unwrap_or(1);
        let label_w = format!("{reg}:").len().max("total:".len());
        let row = |label: &str, items: &[String]| {
            let mut s = format!("{label:>label_w$}");
            for it in items {
                s.push_str(&format!(" {it:>width$}"));
            }
            s.trim_end().to_string()
        };
        let mut out = vec![row("", &header), row("total:", &totals)];
        for (r, line) in cells.iter().enumerate() {
            out.push(row(&format!("{r}:"), line));
        }
        out.join("\n") + "\n"
    }
}

impl fmt::Debug for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.entries.iter()).finish()
    }
}

/// Betti table indexed for the ideal: `β_{i,j}(I)`, `i >= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IdealBettiTable {
    entries: BTreeMap<(usize, usize), u64>,
}

impl IdealBettiTable {
    pub fn from_entries<I>(entries: I) -> Self
    where
        I: IntoIterator<Item = ((usize, usize), u64)>,
    {
        let mut map = BTreeMap::new();
        for (key, count) in entries {
            if count != 0 {
                *map.entry(key).or_insert(0) += count;
            }
        }
        IdealBettiTable { entries: map }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `None` for the zero ideal.
    pub fn pd(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    pub fn reg(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, j)| j - i).max()
    }

    pub fn purity(&self) -> Purity {
        purity_from(&self.entries, 0)
    }

    pub fn to_quotient(&self) -> BettiTable {
        let mut entries: BTreeMap<_, _> =
            self.entries.iter().map(|(&(i, j), &c)| ((i + 1, j), c)).collect();
        entries.insert((0, 0), 1);
        BettiTable { entries }
    }
}

/// `β_{i,j}(I) = β_{i+1,j}(S/I)`.
pub fn ideal_table_from_quotient(t: &BettiTable) -> IdealBettiTable {
    t.to_ideal()
}

/// `S/J_{K_m}`, resolved by the Eagon–Northcott complex:
/// `β_{i,i+1} = i·C(m, i+1)` for `1 <= i <= m - 1`.
pub fn betti_complete(m: usize) -> Result<BettiTable> {
    if m == 0 {
        return Err(Error::InvalidParameter("complete graph needs m >= 1".into()));
    }
    BettiTable::from_entries(
        std::iter::once(((0, 0), 1))
            .chain((1..m).map(|i| ((i, i + 1), i as u64 * binomial(m, i as isize + 1)))),
    )
}

/// `S/J_{P_n}`, resolved by the Koszul complex on the `n - 1` edge binomials:
/// `β_{i,2i} = C(n-1, i)`.
pub fn betti_path(n: usize) -> Result<BettiTable> {
    if n == 0 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    BettiTable::from_entries((0..n).map(|i| ((i, 2 * i), binomial(n - 1, i as isize))))
}

/// Table of `S/(IS + JS)` for ideals in disjoint sets of variables: the
/// convolution of the two tables.
pub fn tensor_product(a: &BettiTable, b: &BettiTable) -> BettiTable {
    let mut entries = BTreeMap::new();
    for (&(i, j), &x) in &a.entries {
        for (&(k, l), &y) in &b.entries {
            *entries.entry((i + k, j + l)).or_insert(0) += x * y;
        }
    }
    BettiTable { entries }
}

/// Effect of a free cut edge on the table: multiplication by `1 + p q²`.
pub fn attach_free_cut_edge(t: &BettiTable) -> BettiTable {
    let mut entries = t.entries.clone();
    for (k, c) in t.shifted() {
        *entries.entry(k).or_insert(0) += c;
    }
    BettiTable { entries }
}

/// The k-handle lollipop `L_{m, t_1, ..., t_k}`; depends only on `m` and
/// `t = Σ t_i`:
///
/// * `β_{i,i+j} = (i-j+1)·C(m, i-j+2)·C(t, j-1)` for `1 <= j <= i-1`,
/// * `β_{i,2i} = C(t, i-1)·C(m, 2) + C(t, i)`.
pub fn betti_lollipop(m: usize, handles: &[usize]) -> Result<BettiTable> {
    if m < 2 || handles.is_empty() || handles.len() > m || handles.contains(&0) {
        return Err(Error::InvalidParameter(format!(
            "lollipop needs m >= 2 and 1..=m positive handles, got m = {m}, handles = {handles:?}"
        )));
    }
    let t: usize = handles.iter().sum();
    let mut entries = vec![((0, 0), 1)];
    for i in 1..=m + t {
        let ii = i as isize;
        for j in 1..i {
            let jj = j as isize;
            let c = (i - j + 1) as u64 * binomial(m, ii - jj + 2) * binomial(t, jj - 1);
            entries.push(((i, i + j), c));
        }
        let diag = binomial(t, ii - 1) * binomial(m, 2) + binomial(t, ii);
        entries.push(((i, 2 * i), diag));
    }
    BettiTable::from_entries(entries)
}

/// Upper bounds for `S/J_G` from a cut edge `e`, given the tables of
/// `S/J_{G∖e}` and `S/J_{(G∖e)_e}`. Everything is in quotient indexing:
/// `β_{i,j}(S/J_G) <= β_{i,j}(S/J_{G∖e}) + β_{i-1,j-2}(S/J_{(G∖e)_e})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutEdgeBound {
    pub table: BettiTable,
    pub pd: usize,
    pub reg: usize,
}

pub fn cut_edge_upper_bound(minus_e: &BettiTable, completed: &BettiTable) -> CutEdgeBound {
    let mut entries = minus_e.entries.clone();
    for (k, c) in completed.shifted() {
        *entries.entry(k).or_insert(0) += c;
    }
    CutEdgeBound {
        table: BettiTable { entries },
        pd: minus_e.pd().max(completed.pd() + 1),
        reg: minus_e.reg().max(completed.reg() + 1),
    }
}

/// Purity of `IS + JS` from the tables of `R/I` and `T/J`: both pure, with
/// shifts `d_1 = e_1`, `d_i = i·d_1` and `e_j = j·e_1`.
pub fn pure_compatible(a: &BettiTable, b: &BettiTable) -> bool {
    if a.is_trivial() {
        return b.purity().is_pure();
    }
    if b.is_trivial() {
        return a.purity().is_pure();
    }
    let shifts = |t: &BettiTable| -> Option<Vec<usize>> {
        (1..=t.pd()).map(|i| t.single_degree(i)).collect()
    };
    let (Some(d), Some(e)) = (shifts(a), shifts(b)) else {
        return false;
    };
    let linear_in = |s: &[usize]| s.iter().enumerate().all(|(k, &x)| x == (k + 1) * s[0]);
    d[0] == e[0] && linear_in(&d) && linear_in(&e)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum StrandStatus {
    /// Every component of the reduced graph is triangle-free or a clique.
    TheoremBacked,
    Conjectural,
}

/// Predicted linear strand `β_{i,i+2}(J_G) = (i+1)·k_{i+2}(G)`; `values[0]` is
/// the number of edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrandPrediction {
    pub values: Vec<u64>,
    pub status: StrandStatus,
}

pub fn strand_prediction(g: &Graph) -> StrandPrediction {
    let census = g.clique_census();
    let top = census.clique_number().max(2) - 2;
    let values = (0..=top).map(|i| (i as u64 + 1) * census.k(i + 2)).collect();
    let reduced = g.reduced_graph();
    let backed = reduced.component_masks(reduced.vertex_mask()).into_iter().all(|c| {
        let comp = reduced.induced_on_mask(c);
        comp.is_complete() || !comp.has_triangle()
    });
    StrandPrediction {
        values,
        status: if backed { StrandStatus::TheoremBacked } else { StrandStatus::Conjectural },
    }
}

/// Exact table of `S/J_G` when `G` decomposes into complete graphs by deleting
/// free cut edges one at a time. Each deletion contributes a factor
/// `1 + p q²`; the leftover complete components contribute Eagon–Northcott
/// tables. Paths, disjoint unions of paths, complete graphs and every k-handle
/// lollipop fall in this class.
pub fn formula_table(g: &Graph) -> Result<BettiTable> {
    let mut rest = g.clone();
    let mut attached = 0usize;
    while let Some(&e) = rest.free_cut_edges().first() {
        rest = rest.without_edge(e)?;
        attached += 1;
    }
    let mut table = BettiTable::ring();
    for c in rest.component_masks(rest.vertex_mask()) {
        let comp = rest.induced_on_mask(c);
        if !comp.is_complete() {
            return Err(Error::NoClosedForm);
        }
        table = tensor_product(&table, &betti_complete(comp.n())?);
    }
    for _ in 0..attached {
        table = attach_free_cut_edge(&table);
    }
    Ok(table)
}
