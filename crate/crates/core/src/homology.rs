//! Finite simplicial complexes and their reduced homology.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, bits, low_mask, mask_to_vertices, Graph, MAX_VERTICES};
use crate::linalg::{rank, Coefficients};

/// A simplicial complex given by its facets. Vertices are labels in
/// `1..=64`; faces are stored as bitmasks (bit `v - 1` for vertex `v`).
///
/// A complex with no facets is the void complex. The complex `{∅}` has the
/// single empty facet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<usize>,
    facets: Vec<u64>,
}

impl SimplicialComplex {
    /// Non-maximal facets are discarded. Every facet vertex must belong to
    /// `vertices`.
    pub fn from_facets(vertices: &[usize], facets: &[Vec<usize>]) -> Result<Self> {
        let mut vmask = 0u64;
        for &v in vertices {
            if v == 0 || v > MAX_VERTICES {
                return Err(Error::VertexOutOfRange { vertex: v, n: MAX_VERTICES });
            }
            vmask |= bit(v - 1);
        }
        let mut masks = Vec::with_capacity(facets.len());
        for f in facets {
            let mut m = 0u64;
            for &v in f {
                if v == 0 || v > MAX_VERTICES || vmask & bit(v - 1) == 0 {
                    return Err(Error::VertexOutOfRange { vertex: v, n: MAX_VERTICES });
                }
                m |= bit(v - 1);
            }
            masks.push(m);
        }
        Ok(Self::from_facet_masks(mask_to_vertices(vmask), masks))
    }

    pub(crate) fn from_facet_masks(vertices: Vec<usize>, mut masks: Vec<u64>) -> Self {
        masks.sort_unstable();
        masks.dedup();
        let facets = masks
            .iter()
            .copied()
            .filter(|&m| !masks.iter().any(|&o| o != m && o & m == m))
            .collect();
        SimplicialComplex { vertices, facets }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&m| mask_to_vertices(m)).collect()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Faces grouped by dimension: index `d + 1` holds the `d`-faces, so index 0
    /// holds the empty face when the complex is not void.
    pub fn faces_by_dimension(&self) -> Vec<Vec<u64>> {
        let mut by_dim: Vec<BTreeSet<u64>> = Vec::new();
        for &f in &self.facets {
            // all submasks of f, including 0 and f itself
            let mut s = f;
            loop {
                let d = s.count_ones() as usize;
                if by_dim.len() <= d {
                    by_dim.resize_with(d + 1, BTreeSet::new);
                }
                by_dim[d].insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & f;
            }
        }
        by_dim.into_iter().map(|s| s.into_iter().collect()).collect()
    }

    /// `f_{-1}, f_0, f_1, ...`
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_dimension().iter().map(Vec::len).collect()
    }

    /// `Σ_{d >= -1} (-1)^d f_d`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &f)| if k % 2 == 1 { f as i64 } else { -(f as i64) })
            .sum()
    }
}

/// Ranks of reduced homology `H̃_d`, `d >= -1`; absent dimensions are zero.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct HomologyRanks {
    ranks: BTreeMap<isize, usize>,
}

impl HomologyRanks {
    pub fn get(&self, d: isize) -> usize {
        self.ranks.get(&d).copied().unwrap_or(0)
    }

    /// Nonzero ranks `(d, rank)`.
    pub fn iter(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.ranks.iter().map(|(&d, &r)| (d, r))
    }

    pub fn is_acyclic(&self) -> bool {
        self.ranks.is_empty()
    }

    /// `Σ (-1)^d rank H̃_d`; equals the reduced Euler characteristic.
    pub fn euler_characteristic(&self) -> i64 {
        self.iter()
            .map(|(d, r)| if d.rem_euclid(2) == 0 { r as i64 } else { -(r as i64) })
            .sum()
    }

    fn from_dense(dense: &[usize]) -> Self {
        HomologyRanks {
            ranks: dense
                .iter()
                .enumerate()
                .filter(|&(_, &r)| r > 0)
                .map(|(k, &r)| (k as isize - 1, r))
                .collect(),
        }
    }
}

pub fn reduced_homology_ranks(c: &SimplicialComplex, coefficients: Coefficients) -> HomologyRanks {
    HomologyRanks::from_dense(&ranks_from_faces(&c.faces_by_dimension(), coefficients))
}

/// Signed boundary of every face in `faces` (dimension `d`) against the
/// `(d-1)`-faces, one row per `d`-face.
fn boundary_rows(faces: &[u64], lower: &[u64]) -> Vec<Vec<i64>> {
    let index: HashMap<u64, usize> = lower.iter().enumerate().map(|(k, &m)| (m, k)).collect();
    faces
        .iter()
        .map(|&f| {
            let mut row = vec![0i64; lower.len()];
            for (k, v) in bits(f).enumerate() {
                row[index[&(f & !bit(v))]] = if k % 2 == 0 { 1 } else { -1 };
            }
            row
        })
        .collect()
}

/// Dense reduced Betti numbers from faces grouped by dimension (as returned by
/// [`SimplicialComplex::faces_by_dimension`]): entry `d + 1` is `rank H̃_d`.
///
/// `rank H̃_d = f_d - rank ∂_d - rank ∂_{d+1}`, where `∂_0` maps vertices onto
/// the empty face.
pub(crate) fn ranks_from_faces(faces: &[Vec<u64>], coefficients: Coefficients) -> Vec<usize> {
    let top = faces.len();
    // boundary_rank[k] = rank of the map from faces[k] to faces[k - 1]
    let mut boundary_rank = vec![0usize; top + 1];
    for k in 1..top {
        if !faces[k].is_empty() && !faces[k - 1].is_empty() {
            boundary_rank[k] = rank(&boundary_rows(&faces[k], &faces[k - 1]), coefficients);
        }
    }
    (0..top)
        .map(|k| faces[k].len() - boundary_rank[k] - boundary_rank[k + 1])
        .collect()
}

/// Faces are the independent vertex sets of `h`.
pub fn independence_complex(h: &Graph) -> SimplicialComplex {
    let facets = h.complement().maximal_clique_masks();
    SimplicialComplex::from_facet_masks((1..=h.n()).collect(), facets)
}

/// Independent subsets of `within`, grouped by size.
pub(crate) fn independent_sets(h: &Graph, within: u64) -> Vec<Vec<u64>> {
    fn grow(adj: &[u64], face: u64, cand: u64, out: &mut Vec<Vec<u64>>) {
        let d = face.count_ones() as usize;
        if out.len() <= d {
            out.push(Vec::new());
        }
        out[d].push(face);
        for v in bits(cand) {
            // only larger vertices remain candidates, so each set appears once
            let rest = cand & !adj[v] & !low_mask(v + 1);
            grow(adj, face | bit(v), rest, out);
        }
    }
    let mut out = Vec::new();
    grow(h.adjacency(), 0, within, &mut out);
    for level in &mut out {
        level.sort_unstable();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Coefficients = Coefficients::Rational;

    fn complex(vertices: &[usize], facets: &[&[usize]]) -> SimplicialComplex {
        let facets: Vec<Vec<usize>> = facets.iter().map(|f| f.to_vec()).collect();
        SimplicialComplex::from_facets(vertices, &facets).unwrap()
    }

    #[test]
    fn independence_complexes() {
        let k3 = independence_complex(&Graph::complete(3).unwrap());
        assert_eq!(k3.facets(), vec![vec![1], vec![2], vec![3]]);
        let empty = independence_complex(&Graph::new(3).unwrap());
        assert_eq!(empty.facets(), vec![vec![1, 2, 3]]);
        let c4 = independence_complex(&Graph::cycle(4).unwrap());
        assert_eq!(c4.facets(), vec![vec![1, 3], vec![2, 4]]);
    }

    #[test]
    fn basic_homology() {
        let two_points = complex(&[1, 2], &[&[1], &[2]]);
        let h = reduced_homology_ranks(&two_points, Q);
        assert_eq!(h.iter().collect::<Vec<_>>(), vec![(0, 1)]);

        let hollow = complex(&[1, 2, 3], &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(reduced_homology_ranks(&hollow, Q).iter().collect::<Vec<_>>(), vec![(1, 1)]);

        let empty_face = complex(&[], &[&[]]);
        assert_eq!(reduced_homology_ranks(&empty_face, Q).iter().collect::<Vec<_>>(), vec![(-1, 1)]);

        let void = complex(&[], &[]);
        assert!(void.is_void());
        assert!(reduced_homology_ranks(&void, Q).is_acyclic());

        let simplex = complex(&[1, 2, 3], &[&[1, 2, 3]]);
        assert!(reduced_homology_ranks(&simplex, Q).is_acyclic());
    }

    #[test]
    fn sphere_and_projective_plane() {
        // boundary of the tetrahedron: a 2-sphere
        let sphere = complex(&[1, 2, 3, 4], &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]);
        assert_eq!(reduced_homology_ranks(&sphere, Q).iter().collect::<Vec<_>>(), vec![(2, 1)]);

        // six-vertex real projective plane: rationally acyclic, but H_1 and H_2
        // are both Z/2 over the field with two elements
        let rp2 = complex(
            &[1, 2, 3, 4, 5, 6],
            &[
                &[1, 2, 4],
                &[1, 2, 6],
                &[1, 3, 5],
                &[1, 3, 6],
                &[1, 4, 5],
                &[2, 3, 4],
                &[2, 3, 5],
                &[2, 5, 6],
                &[3, 4, 6],
                &[4, 5, 6],
            ],
        );
        assert!(reduced_homology_ranks(&rp2, Q).is_acyclic());
        let mod2 = reduced_homology_ranks(&rp2, Coefficients::prime(2).unwrap());
        assert_eq!(mod2.iter().collect::<Vec<_>>(), vec![(1, 1), (2, 1)]);
        assert_eq!(rp2.reduced_euler_characteristic(), 0);
    }

    #[test]
    fn euler_characteristic_matches_homology() {
        for g in [
            Graph::cycle(5).unwrap(),
            Graph::cycle(6).unwrap(),
            Graph::path(6).unwrap(),
            Graph::complete_bipartite(2, 3).unwrap(),
            Graph::k_handle_lollipop(3, &[2]).unwrap(),
        ] {
            let c = independence_complex(&g);
            let h = reduced_homology_ranks(&c, Q);
            assert_eq!(h.euler_characteristic(), c.reduced_euler_characteristic(), "{g}");
        }
    }

    #[test]
    fn independent_set_enumeration_matches_facets() {
        let g = Graph::k_handle_lollipop(3, &[2, 1]).unwrap();
        let direct = independent_sets(&g, g.vertex_mask());
        let via_facets = independence_complex(&g).faces_by_dimension();
        assert_eq!(direct, via_facets);
    }

    #[test]
    fn rejects_foreign_vertices() {
        assert!(SimplicialComplex::from_facets(&[1, 2], &[vec![1, 3]]).is_err());
        assert!(SimplicialComplex::from_facets(&[0], &[]).is_err());
    }
}
