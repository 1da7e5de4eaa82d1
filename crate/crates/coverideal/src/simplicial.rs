//! Simplicial complexes, the Stanley-Reisner dictionary, links and
//! restrictions, facet connectivity, and reduced homology over an exact
//! field.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::graph::{mask_to_indices, Graph};
use crate::linalg;
use crate::monomial::{Monomial, MonomialIdeal, MAX_MASK_VARS};

/// Cap on materialized faces inside the homology routine.
pub(crate) const MAX_FACES: usize = 1 << 20;

/// A simplicial complex on an ordered vertex set, stored by facets.
/// The void complex (no faces at all) has an empty facet list; the empty
/// complex has the single facet {}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    facets: Vec<u64>,
}

/// Facet-level connectivity flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct FacetConnectivity {
    pub pure: bool,
    pub strongly_connected: bool,
}

impl SimplicialComplex {
    /// Builds the complex generated by `faces` (maximal ones become the
    /// facets). Pass no faces for the void complex, or a single empty face
    /// for the empty complex.
    pub fn new<S, T>(vertices: Vec<S>, faces: &[Vec<T>]) -> Result<SimplicialComplex>
    where
        S: Into<String>,
        T: AsRef<str>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        if vertices.len() > MAX_MASK_VARS {
            return Err(Error::SizeCap { what: "complex vertices", limit: MAX_MASK_VARS });
        }
        let mut masks = Vec::with_capacity(faces.len());
        for face in faces {
            let mut mask = 0u64;
            for v in face {
                let i = vertices
                    .iter()
                    .position(|w| w == v.as_ref())
                    .ok_or_else(|| Error::UnknownVertex(v.as_ref().to_string()))?;
                mask |= 1 << i;
            }
            masks.push(mask);
        }
        Ok(SimplicialComplex::from_masks(vertices, masks))
    }

    pub(crate) fn from_masks(vertices: Vec<String>, mut faces: Vec<u64>) -> SimplicialComplex {
        faces.sort_unstable();
        faces.dedup();
        let mut keyed: Vec<(Vec<usize>, u64)> = faces
            .iter()
            .filter(|&&f| !faces.iter().any(|&g| g != f && g & f == f))
            .map(|&f| (mask_to_indices(f), f))
            .collect();
        keyed.sort();
        SimplicialComplex { vertices, facets: keyed.into_iter().map(|(_, f)| f).collect() }
    }

    pub fn void(vertices: Vec<String>) -> SimplicialComplex {
        SimplicialComplex { vertices, facets: Vec::new() }
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// None for the void complex; -1 for the empty complex.
    pub fn dim(&self) -> Option<isize> {
        self.facets
            .iter()
            .map(|f| f.count_ones() as isize - 1)
            .max()
    }

    pub fn facets(&self) -> Vec<Vec<String>> {
        self.facets
            .iter()
            .map(|&f| mask_to_indices(f).into_iter().map(|i| self.vertices[i].clone()).collect())
            .collect()
    }

    pub fn contains_face<T: AsRef<str>>(&self, face: &[T]) -> Result<bool> {
        let mut mask = 0u64;
        for v in face {
            let i = self
                .vertices
                .iter()
                .position(|w| w == v.as_ref())
                .ok_or_else(|| Error::UnknownVertex(v.as_ref().to_string()))?;
            mask |= 1 << i;
        }
        Ok(self.contains_face_mask(mask))
    }

    fn contains_face_mask(&self, mask: u64) -> bool {
        self.facets.iter().any(|&f| f & mask == mask)
    }

    /// The complex whose non-faces are the generator supports: a subset is
    /// a face exactly when it contains no generator support.
    pub fn stanley_reisner_complex(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
        if !ideal.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        let vertices: Vec<String> = ideal.ambient().to_vec();
        if vertices.len() > MAX_MASK_VARS {
            return Err(Error::SizeCap { what: "ambient variables", limit: MAX_MASK_VARS });
        }
        if ideal.is_unit() {
            return Ok(SimplicialComplex::void(vertices));
        }
        if ideal.is_zero() {
            let full = full_mask(vertices.len());
            return Ok(SimplicialComplex::from_masks(vertices, vec![full]));
        }
        // facets are complements of the minimal transversals of the supports
        let full = full_mask(vertices.len());
        let facets: Vec<u64> = ideal
            .minimal_prime_masks()?
            .into_iter()
            .map(|t| full & !t)
            .collect();
        Ok(SimplicialComplex::from_masks(vertices, facets))
    }

    /// The squarefree ideal generated by the minimal non-faces; inverse of
    /// [`SimplicialComplex::stanley_reisner_complex`].
    pub fn stanley_reisner_ideal(&self) -> MonomialIdeal {
        let n = self.vertices.len();
        let full = full_mask(n);
        if self.is_void() {
            return MonomialIdeal::unit(self.vertices.clone());
        }
        if self.facets == [full] {
            return MonomialIdeal::zero(self.vertices.clone());
        }
        // minimal non-faces = minimal transversals of the facet complements
        let covers: Vec<u64> = self.facets.iter().map(|&f| full & !f).collect();
        let gens = crate::monomial::minimal_transversals(&covers)
            .into_iter()
            .map(|mask| {
                let mut exps = vec![0u64; n];
                for i in mask_to_indices(mask) {
                    exps[i] = 1;
                }
                Monomial::from_exponents(exps)
            })
            .collect();
        MonomialIdeal::new(self.vertices.clone(), gens)
            .expect("minimal non-faces are well-formed generators")
    }

    /// Faces are the independent sets of the graph.
    pub fn independence_complex(g: &Graph) -> SimplicialComplex {
        SimplicialComplex::from_masks(
            g.vertex_names().to_vec(),
            g.maximal_independent_set_masks(),
        )
    }

    /// The induced subcomplex on `w`: faces contained in `w`, with `w` as
    /// the new vertex set (order inherited).
    pub fn restrict<T: AsRef<str>>(&self, w: &[T]) -> Result<SimplicialComplex> {
        let mut keep = Vec::new();
        for v in w {
            let i = self
                .vertices
                .iter()
                .position(|x| x == v.as_ref())
                .ok_or_else(|| Error::UnknownVertex(v.as_ref().to_string()))?;
            keep.push(i);
        }
        keep.sort_unstable();
        keep.dedup();
        let wmask: u64 = keep.iter().map(|&i| 1u64 << i).sum();
        let new_vertices: Vec<String> = keep.iter().map(|&i| self.vertices[i].clone()).collect();
        if self.is_void() {
            return Ok(SimplicialComplex::void(new_vertices));
        }
        let reindexed: Vec<u64> = self
            .facets
            .iter()
            .map(|&f| reindex_mask(f & wmask, &keep))
            .collect();
        Ok(SimplicialComplex::from_masks(new_vertices, reindexed))
    }

    /// The link of a face: all faces disjoint from `face` whose union with
    /// it is again a face, on the vertex set V minus `face`.
    pub fn link<T: AsRef<str>>(&self, face: &[T]) -> Result<SimplicialComplex> {
        let mut fmask = 0u64;
        for v in face {
            let i = self
                .vertices
                .iter()
                .position(|x| x == v.as_ref())
                .ok_or_else(|| Error::UnknownVertex(v.as_ref().to_string()))?;
            fmask |= 1 << i;
        }
        if !self.contains_face_mask(fmask) {
            return Err(Error::NotAFace(
                mask_to_indices(fmask).into_iter().map(|i| self.vertices[i].clone()).collect(),
            ));
        }
        let keep: Vec<usize> =
            (0..self.vertices.len()).filter(|i| fmask >> i & 1 == 0).collect();
        let new_vertices: Vec<String> = keep.iter().map(|&i| self.vertices[i].clone()).collect();
        let link_facets: Vec<u64> = self
            .facets
            .iter()
            .filter(|&&f| f & fmask == fmask)
            .map(|&f| reindex_mask(f & !fmask, &keep))
            .collect();
        Ok(SimplicialComplex::from_masks(new_vertices, link_facets))
    }

    /// Purity and strong connectivity of the facet graph (facets adjacent
    /// when their intersection is a ridge).
    pub fn purity_and_strong_connectivity(&self) -> Result<FacetConnectivity> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        let sizes: Vec<u32> = self.facets.iter().map(|f| f.count_ones()).collect();
        let pure = sizes.windows(2).all(|w| w[0] == w[1]);
        if !pure {
            return Ok(FacetConnectivity { pure: false, strongly_connected: false });
        }
        let ridge = sizes[0] as i64 - 1;
        let m = self.facets.len();
        let mut seen = vec![false; m];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(a) = stack.pop() {
            for b in 0..m {
                if !seen[b] && (self.facets[a] & self.facets[b]).count_ones() as i64 == ridge {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        Ok(FacetConnectivity { pure: true, strongly_connected: seen.iter().all(|&s| s) })
    }

    /// Every face, as masks, materialized from the facets.
    pub(crate) fn face_masks(&self) -> Result<Vec<u64>> {
        let mut seen: BTreeSet<u64> = BTreeSet::new();
        for &facet in &self.facets {
            let mut sub = facet;
            loop {
                seen.insert(sub);
                if seen.len() > MAX_FACES {
                    return Err(Error::SizeCap { what: "face enumeration", limit: MAX_FACES });
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & facet;
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// Dimensions of reduced homology over `field`, listed from degree -1
    /// up to the dimension of the complex. The void complex yields a single
    /// zero; the empty complex has one-dimensional homology in degree -1.
    pub fn reduced_homology_dims(&self, field: Field) -> Result<Vec<usize>> {
        if self.is_void() {
            return Ok(vec![0]);
        }
        let faces = self.face_masks()?;
        Ok(homology_dims_from_faces(&faces, field))
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Rewrites a mask over the original index space into the dense index
/// space given by `keep` (ascending original indices).
fn reindex_mask(mask: u64, keep: &[usize]) -> u64 {
    let mut out = 0u64;
    for (new, &old) in keep.iter().enumerate() {
        if mask >> old & 1 == 1 {
            out |= 1 << new;
        }
    }
    out
}

/// Reduced homology dimensions from an explicit face list (which must be
/// subset-closed and include the empty face). Index 0 of the result is
/// degree -1.
pub(crate) fn homology_dims_from_faces(faces: &[u64], field: Field) -> Vec<usize> {
    debug_assert!(faces.contains(&0), "face list must contain the empty face");
    let max_size = faces.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); max_size + 1];
    for &f in faces {
        by_size[f.count_ones() as usize].push(f);
    }
    for level in &mut by_size {
        level.sort_unstable();
    }
    // boundary ranks: boundary_rank[s] = rank of the map from size-s faces
    // to size-(s-1) faces; one extra zero at the top
    let mut boundary_rank = vec![0usize; max_size + 2];
    for s in 1..=max_size {
        let rows = &by_size[s - 1];
        let cols = &by_size[s];
        let mut matrix = vec![vec![0i64; cols.len()]; rows.len()];
        for (c, &face) in cols.iter().enumerate() {
            let verts = mask_to_indices(face);
            for (t, &v) in verts.iter().enumerate() {
                let sub = face & !(1u64 << v);
                let r = rows.binary_search(&sub).expect("faces are subset-closed");
                matrix[r][c] = if t % 2 == 0 { 1 } else { -1 };
            }
        }
        boundary_rank[s] = linalg::rank(&matrix, field);
    }
    let dims: Vec<usize> = (0..=max_size)
        .map(|s| by_size[s].len() - boundary_rank[s] - boundary_rank[s + 1])
        .collect();
    // reduced Euler characteristic must match the alternating face count
    let euler_faces: i64 = (0..=max_size)
        .map(|s| {
            let sign = if s % 2 == 0 { -1 } else { 1 };
            sign * by_size[s].len() as i64
        })
        .sum();
    let euler_homology: i64 = dims
        .iter()
        .enumerate()
        .map(|(s, &h)| {
            let sign = if s % 2 == 0 { -1 } else { 1 };
            sign * h as i64
        })
        .sum();
    assert_eq!(
        euler_faces, euler_homology,
        "reduced Euler characteristic mismatch: boundary ranks are inconsistent"
    );
    dims
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn stanley_reisner_complex_examples() {
        let i = MonomialIdeal::edge_ideal(&Graph::path(2));
        let delta = SimplicialComplex::stanley_reisner_complex(&i).unwrap();
        assert_eq!(delta.facets(), vec![vec!["x1"], vec!["x2"]]);

        let unit = MonomialIdeal::unit(vars(&["x1", "x2"]));
        assert!(SimplicialComplex::stanley_reisner_complex(&unit).unwrap().is_void());

        let c5 = Graph::cycle(5);
        let from_ideal =
            SimplicialComplex::stanley_reisner_complex(&MonomialIdeal::edge_ideal(&c5)).unwrap();
        assert_eq!(from_ideal, SimplicialComplex::independence_complex(&c5));

        let nonsq = MonomialIdeal::from_gens(vars(&["x1"]), &[vec![("x1", 2)]]).unwrap();
        assert!(matches!(
            SimplicialComplex::stanley_reisner_complex(&nonsq),
            Err(Error::NotSquarefree)
        ));
    }

    #[test]
    fn independence_complex_examples() {
        let c5 = SimplicialComplex::independence_complex(&Graph::cycle(5));
        assert_eq!(c5.facets().len(), 5);
        assert!(c5.facets().iter().all(|f| f.len() == 2));

        let k2 = SimplicialComplex::independence_complex(&Graph::path(2));
        assert_eq!(k2.facets(), vec![vec!["x1"], vec!["x2"]]);

        let e3 = SimplicialComplex::independence_complex(&Graph::edgeless(3));
        assert_eq!(e3.facets(), vec![vec!["x1", "x2", "x3"]]);
    }

    #[test]
    fn restrict_examples() {
        let delta = SimplicialComplex::independence_complex(&Graph::cycle(5));
        let r = delta.restrict(&["x1", "x3"]).unwrap();
        assert_eq!(r.facets(), vec![vec!["x1", "x3"]]);

        let empty = delta.restrict(&[] as &[&str]).unwrap();
        assert!(!empty.is_void());
        assert_eq!(empty.dim(), Some(-1));

        let void = SimplicialComplex::void(vars(&["x1", "x2"]));
        assert!(void.restrict(&["x1"]).unwrap().is_void());

        assert!(matches!(delta.restrict(&["zz"]), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn link_examples() {
        let delta = SimplicialComplex::independence_complex(&Graph::cycle(5));
        let whole = delta.link(&[] as &[&str]).unwrap();
        assert_eq!(whole, delta);

        let lk = delta.link(&["x1"]).unwrap();
        assert_eq!(lk.facets(), vec![vec!["x3"], vec!["x4"]]);

        let p4 = SimplicialComplex::independence_complex(&Graph::path(4));
        let lk = p4.link(&["x4"]).unwrap();
        assert_eq!(lk.facets(), vec![vec!["x1"], vec!["x2"]]);

        let tri = SimplicialComplex::independence_complex(&Graph::complete(3));
        assert!(matches!(tri.link(&["x1", "x2"]), Err(Error::NotAFace(_))));
    }

    #[test]
    fn purity_and_strong_connectivity_examples() {
        let c5 = SimplicialComplex::independence_complex(&Graph::cycle(5));
        assert_eq!(
            c5.purity_and_strong_connectivity().unwrap(),
            FacetConnectivity { pure: true, strongly_connected: true }
        );

        let single =
            SimplicialComplex::new(vars(&["a", "b"]), &[vec!["a", "b"]]).unwrap();
        assert_eq!(
            single.purity_and_strong_connectivity().unwrap(),
            FacetConnectivity { pure: true, strongly_connected: true }
        );

        let impure =
            SimplicialComplex::new(vars(&["x1", "x2", "x3"]), &[vec!["x1", "x2"], vec!["x3"]])
                .unwrap();
        assert_eq!(
            impure.purity_and_strong_connectivity().unwrap(),
            FacetConnectivity { pure: false, strongly_connected: false }
        );

        assert!(matches!(
            SimplicialComplex::void(vars(&["x1"])).purity_and_strong_connectivity(),
            Err(Error::VoidComplex)
        ));
    }

    #[test]
    fn homology_examples() {
        let two_points =
            SimplicialComplex::new(vars(&["a", "b"]), &[vec!["a"], vec!["b"]]).unwrap();
        assert_eq!(two_points.reduced_homology_dims(Field::Rational).unwrap(), vec![0, 1]);

        let circle = SimplicialComplex::new(
            vars(&["a", "b", "c"]),
            &[vec!["a", "b"], vec!["b", "c"], vec!["a", "c"]],
        )
        .unwrap();
        assert_eq!(circle.reduced_homology_dims(Field::Rational).unwrap(), vec![0, 0, 1]);

        let empty = SimplicialComplex::new(vars(&["a"]), &[Vec::<&str>::new()]).unwrap();
        assert_eq!(empty.reduced_homology_dims(Field::Rational).unwrap(), vec![1]);

        let void = SimplicialComplex::void(vars(&["a"]));
        assert_eq!(void.reduced_homology_dims(Field::Rational).unwrap(), vec![0]);

        // filled triangle is contractible
        let disk =
            SimplicialComplex::new(vars(&["a", "b", "c"]), &[vec!["a", "b", "c"]]).unwrap();
        assert_eq!(disk.reduced_homology_dims(Field::Rational).unwrap(), vec![0, 0, 0, 0]);
    }

    #[test]
    fn homology_detects_characteristic() {
        // triangulation of the real projective plane: homology differs
        // between Q and F_2
        let faces: Vec<Vec<&str>> = vec![
            vec!["1", "2", "3"],
            vec!["1", "3", "4"],
            vec!["1", "4", "5"],
            vec!["1", "5", "6"],
            vec!["1", "2", "6"],
            vec!["2", "3", "5"],
            vec!["3", "4", "6"],
            vec!["2", "4", "5"],
            vec!["2", "4", "6"],
            vec!["3", "5", "6"],
        ];
        let rp2 =
            SimplicialComplex::new(vars(&["1", "2", "3", "4", "5", "6"]), &faces).unwrap();
        assert_eq!(rp2.reduced_homology_dims(Field::Rational).unwrap(), vec![0, 0, 0, 0]);
        assert_eq!(rp2.reduced_homology_dims(Field::Prime(2)).unwrap(), vec![0, 0, 1, 1]);
        assert_eq!(rp2.reduced_homology_dims(Field::Prime(3)).unwrap(), vec![0, 0, 0, 0]);
    }

    #[test]
    fn stanley_reisner_round_trip() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let n = rng.gen_range(2..=8);
            let ambient: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
            let mut gens = Vec::new();
            for _ in 0..rng.gen_range(1..=5) {
                let mut exps = vec![0u64; n];
                for e in exps.iter_mut() {
                    if rng.gen_bool(0.4) {
                        *e = 1;
                    }
                }
                if exps.iter().any(|&e| e > 0) {
                    gens.push(Monomial::from_exponents(exps));
                }
            }
            if gens.is_empty() {
                continue;
            }
            let ideal = MonomialIdeal::new(ambient, gens).unwrap();
            if ideal.is_unit() || ideal.is_zero() {
                continue;
            }
            let delta = SimplicialComplex::stanley_reisner_complex(&ideal).unwrap();
            assert_eq!(delta.stanley_reisner_ideal(), ideal);
            let again = SimplicialComplex::stanley_reisner_complex(
                &delta.stanley_reisner_ideal(),
            )
            .unwrap();
            assert_eq!(again, delta);
        }
    }

    #[test]
    fn homology_independent_of_facet_order() {
        let a = SimplicialComplex::new(
            vars(&["a", "b", "c", "d"]),
            &[vec!["a", "b"], vec!["c", "d"], vec!["b", "c"]],
        )
        .unwrap();
        let b = SimplicialComplex::new(
            vars(&["a", "b", "c", "d"]),
            &[vec!["b", "c"], vec!["a", "b"], vec!["c", "d"]],
        )
        .unwrap();
        assert_eq!(a, b);
        assert_eq!(
            a.reduced_homology_dims(Field::Rational).unwrap(),
            b.reduced_homology_dims(Field::Rational).unwrap()
        );
    }
}
