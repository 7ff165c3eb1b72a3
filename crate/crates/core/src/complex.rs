//! Simplicial complexes on `[n]`, the Stanley-Reisner correspondence, links
//! and reduced homology over a prime field.
//!
//! Faces are [`VarSet`] bitmasks. Two degenerate complexes are kept apart:
//! the void complex (no faces at all) and `{∅}` (only the empty face).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{bits, check_ambient, full_set, set_to_vertices, vertices_to_set, Monomial, MonomialIdeal, VarSet};
use crate::linalg::{Matrix, PrimeField};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComplexKind {
    Void,
    EmptyOnly,
    Proper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombineMode {
    Union,
    Intersection,
}

/// A simplicial complex given by its facets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VarSet>,
}

/// Keep only inclusion-maximal sets, sorted by (size, mask).
pub(crate) fn maximal_sets(mut sets: Vec<VarSet>) -> Vec<VarSet> {
    sets.sort_unstable_by_key(|&s| (std::cmp::Reverse(s.count_ones()), s));
    sets.dedup();
    let mut kept: Vec<VarSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| s & !k == 0) {
            kept.push(s);
        }
    }
    kept.sort_unstable_by_key(|&s| (s.count_ones(), s));
    kept
}

/// Bitset over all subsets of `[n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct FaceSet {
    n: usize,
    words: Vec<u64>,
}

impl FaceSet {
    pub(crate) fn empty(n: usize) -> Self {
        let len = ((1usize << n) + 63) / 64;
        FaceSet { n, words: vec![0; len] }
    }

    #[inline]
    pub(crate) fn contains(&self, f: VarSet) -> bool {
        self.words[(f >> 6) as usize] >> (f & 63) & 1 == 1
    }

    #[inline]
    pub(crate) fn insert(&mut self, f: VarSet) {
        self.words[(f >> 6) as usize] |= 1 << (f & 63);
    }

    pub(crate) fn iter(&self) -> impl Iterator<Item = VarSet> + '_ {
        (0..(1u32 << self.n)).filter(|&f| self.contains(f))
    }

    /// Down-closure of the given sets.
    pub(crate) fn down_closure(n: usize, sets: &[VarSet]) -> Self {
        let mut out = FaceSet::empty(n);
        for &s in sets {
            let mut sub = s;
            loop {
                out.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & s;
            }
        }
        out
    }

    /// Complement of the up-closure of `generators` inside `2^[n]`.
    pub(crate) fn avoiding_supersets(n: usize, generators: &[VarSet]) -> Self {
        let size = 1usize << n;
        let mut bad = vec![false; size];
        for &g in generators {
            bad[g as usize] = true;
        }
        for i in 0..n {
            let bit = 1usize << i;
            for m in 0..size {
                if m & bit != 0 && bad[m ^ bit] {
                    bad[m] = true;
                }
            }
        }
        let mut out = FaceSet::empty(n);
        for (m, &b) in bad.iter().enumerate() {
            if !b {
                out.insert(m as VarSet);
            }
        }
        out
    }

    pub(crate) fn facets(&self) -> Vec<VarSet> {
        let full = full_set(self.n);
        self.iter()
            .filter(|&f| bits(full & !f).all(|i| !self.contains(f | (1 << i))))
            .collect()
    }
}

impl SimplicialComplex {
    /// Builds a complex from any generating family of faces.
    pub fn from_facets(n: usize, facets: Vec<VarSet>) -> Result<Self> {
        check_ambient(n)?;
        let full = full_set(n);
        if let Some(&bad) = facets.iter().find(|&&f| f & !full != 0) {
            let vertex = bits(bad & !full).next().unwrap() + 1;
            return Err(Error::VertexOutOfRange { vertex, n });
        }
        Ok(SimplicialComplex { n, facets: maximal_sets(facets) })
    }

    pub(crate) fn from_faceset(faces: &FaceSet) -> Self {
        let mut facets = faces.facets();
        facets.sort_unstable_by_key(|&s| (s.count_ones(), s));
        SimplicialComplex { n: faces.n, facets }
    }

    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, facets: Vec::new() }
    }

    pub fn empty_only(n: usize) -> Self {
        SimplicialComplex { n, facets: vec![0] }
    }

    /// The full simplex on `vertices`.
    pub fn simplex(n: usize, vertices: VarSet) -> Self {
        SimplicialComplex { n, facets: vec![vertices] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VarSet] {
        &self.facets
    }

    pub fn kind(&self) -> ComplexKind {
        match self.facets.as_slice() {
            [] => ComplexKind::Void,
            [0] => ComplexKind::EmptyOnly,
            _ => ComplexKind::Proper,
        }
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `None` for the void complex, `-1` for `{∅}`.
    pub fn dim(&self) -> Option<i32> {
        self.facets.iter().map(|f| f.count_ones() as i32 - 1).max()
    }

    pub fn vertex_set(&self) -> VarSet {
        self.facets.iter().fold(0, |a, &f| a | f)
    }

    pub fn contains_face(&self, face: VarSet) -> bool {
        self.facets.iter().any(|&f| face & !f == 0)
    }

    pub(crate) fn face_set(&self) -> FaceSet {
        FaceSet::down_closure(self.n, &self.facets)
    }

    /// All faces, ordered by size then mask.
    pub fn faces(&self) -> Vec<VarSet> {
        let mut faces: Vec<VarSet> = self.face_set().iter().collect();
        faces.sort_unstable_by_key(|&f| (f.count_ones(), f));
        faces
    }

    /// `lk F = {G : F ∪ G ∈ Δ, F ∩ G = ∅}`.
    pub fn link(&self, face: VarSet) -> Result<SimplicialComplex> {
        if !self.contains_face(face) {
            return Err(Error::NotAFace { face: set_to_vertices(face) });
        }
        let facets = self.facets.iter().filter(|&&b| face & !b == 0).map(|&b| b & !face).collect();
        Ok(SimplicialComplex { n: self.n, facets: maximal_sets(facets) })
    }

    /// `t` (1-based) lies in every facet. The void complex is not a cone.
    pub fn is_cone_over(&self, t: usize) -> bool {
        let bit = 1 << (t - 1);
        !self.facets.is_empty() && self.facets.iter().all(|&f| f & bit != 0)
    }

    pub fn combine(&self, other: &SimplicialComplex, mode: CombineMode) -> Result<SimplicialComplex> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, actual: other.n });
        }
        let facets = match mode {
            CombineMode::Union => self.facets.iter().chain(other.facets.iter()).copied().collect(),
            CombineMode::Intersection => self
                .facets
                .iter()
                .flat_map(|&a| other.facets.iter().map(move |&b| a & b))
                .collect(),
        };
        Ok(SimplicialComplex { n: self.n, facets: maximal_sets(facets) })
    }

    pub fn reduced_homology(&self, field: PrimeField) -> HomologyProfile {
        HomologyProfile {
            dims: reduced_homology_of_faces(self.faces(), field),
            field_char: field.characteristic(),
        }
    }

    /// Boundary map from faces with `k` vertices to faces with `k - 1`
    /// vertices (the augmentation when `k = 1`), faces in ascending mask order.
    pub fn boundary_matrix(&self, k: usize, field: PrimeField) -> Matrix {
        let faces = self.faces();
        let of_size = |size: usize| -> Vec<VarSet> {
            let mut v: Vec<VarSet> = faces.iter().copied().filter(|f| f.count_ones() as usize == size).collect();
            v.sort_unstable();
            v
        };
        if k == 0 {
            return Matrix::zeros(of_size(0).len(), 0);
        }
        boundary_of(&of_size(k), &of_size(k - 1), field)
    }

    /// `reg K[Δ] = max{i : H̃_{i-1}(lk F) ≠ 0 for some face F}`; `None` when void.
    pub fn regularity(&self, field: PrimeField) -> Option<u32> {
        if self.is_void() {
            return None;
        }
        let mut best = 0;
        for f in self.faces() {
            let lk = self.link(f).expect("face of self");
            let h = lk.reduced_homology(field);
            if let Some(i) = h.top_nonzero() {
                best = best.max((i + 1) as u32);
            }
        }
        Some(best)
    }

    /// Facets as 1-based vertex lists: `[[1,3],[2,3]]`.
    pub fn to_json(&self) -> String {
        let lists: Vec<Vec<usize>> = self.facets.iter().map(|&f| set_to_vertices(f)).collect();
        serde_json::to_string(&lists).expect("facet lists serialize")
    }

    pub fn from_json(text: &str, n: usize) -> Result<Self> {
        let lists: Vec<Vec<usize>> =
            serde_json::from_str(text.trim()).map_err(|e| Error::parse(1, e.to_string()))?;
        let facets = lists.iter().map(|l| vertices_to_set(n, l)).collect::<Result<Vec<_>>>()?;
        SimplicialComplex::from_facets(n, facets)
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ{}", self.to_json())
    }
}

/// Stanley-Reisner complex `Δ(I) = {F : x_F ∉ I}` of a squarefree ideal.
pub fn complex_of_ideal(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    check_ambient(ideal.n())?;
    let supports: Vec<VarSet> = ideal.generators().iter().map(Monomial::support).collect();
    let faces = FaceSet::avoiding_supersets(ideal.n(), &supports);
    Ok(SimplicialComplex::from_faceset(&faces))
}

/// Stanley-Reisner ideal `I_Δ`, generated by the minimal non-faces.
pub fn ideal_of_complex(complex: &SimplicialComplex) -> MonomialIdeal {
    let n = complex.n;
    let faces = complex.face_set();
    let gens = (0..(1u32 << n))
        .filter(|&f| !faces.contains(f) && bits(f).all(|i| faces.contains(f & !(1 << i))))
        .map(|f| Monomial::from_set(n, f));
    MonomialIdeal::from_generators(n, gens).expect("same ambient")
}

/// `dim H̃_i` for `i >= -1`, stored at index `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyProfile {
    pub dims: Vec<usize>,
    pub field_char: u32,
}

impl HomologyProfile {
    pub fn get(&self, i: i32) -> usize {
        if i < -1 {
            return 0;
        }
        self.dims.get((i + 1) as usize).copied().unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// Largest `i` with `H̃_i ≠ 0`.
    pub fn top_nonzero(&self) -> Option<i32> {
        self.dims.iter().rposition(|&d| d != 0).map(|k| k as i32 - 1)
    }

    /// `Σ (-1)^i dim H̃_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(k, &d)| if k % 2 == 1 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

/// Reduced homology of the complex whose faces (closed under subsets) are
/// given in any order. Index `k` of the result is `H̃_{k-1}`.
pub(crate) fn reduced_homology_of_faces(mut faces: Vec<VarSet>, field: PrimeField) -> Vec<usize> {
    if faces.is_empty() {
        return Vec::new();
    }
    faces.sort_unstable_by_key(|&f| (f.count_ones(), f));
    let top = faces.last().unwrap().count_ones() as usize;
    let mut by_size: Vec<&[VarSet]> = Vec::with_capacity(top + 1);
    let mut start = 0;
    for k in 0..=top {
        let end = start + faces[start..].iter().take_while(|f| f.count_ones() as usize == k).count();
        by_size.push(&faces[start..end]);
        start = end;
    }
    // rank of the boundary from k-element faces to (k-1)-element faces
    let mut ranks = vec![0usize; top + 2];
    for k in 1..=top {
        ranks[k] = boundary_rank(by_size[k], by_size[k - 1], field);
    }
    (0..=top).map(|k| by_size[k].len() - ranks[k] - ranks[k + 1]).collect()
}

fn boundary_rank(upper: &[VarSet], lower: &[VarSet], field: PrimeField) -> usize {
    if upper.is_empty() || lower.is_empty() {
        return 0;
    }
    if lower.len() == 1 && lower[0] == 0 {
        // augmentation map onto the empty face
        return 1;
    }
    boundary_of(upper, lower, field).rank(field)
}

/// Rows are `upper` faces, columns `lower` faces, both sorted; entry
/// `(-1)^j` where the removed vertex is the `j`-th smallest.
fn boundary_of(upper: &[VarSet], lower: &[VarSet], field: PrimeField) -> Matrix {
    let mut m = Matrix::zeros(upper.len(), lower.len());
    let minus_one = field.reduce(-1);
    for (r, &f) in upper.iter().enumerate() {
        for (j, v) in bits(f).enumerate() {
            let sub = f & !(1 << v);
            let c = lower.binary_search(&sub).expect("faces closed under subsets");
            m.set(r, c, if j % 2 == 0 { 1 } else { minus_one });
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        let sets = facets.iter().map(|f| vertices_to_set(n, f).unwrap()).collect();
        SimplicialComplex::from_facets(n, sets).unwrap()
    }

    fn ideal(n: usize, gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::from_generators(n, gens.iter().map(|g| Monomial::parse(g, n).unwrap()))
            .unwrap()
    }

    fn field() -> PrimeField {
        PrimeField::default()
    }

    #[test]
    fn stanley_reisner_examples() {
        let hollow = sc(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(complex_of_ideal(&ideal(3, &["x1*x2*x3"])).unwrap(), hollow);
        assert_eq!(complex_of_ideal(&ideal(3, &["x1*x2"])).unwrap(), sc(3, &[&[1, 3], &[2, 3]]));
        assert!(complex_of_ideal(&MonomialIdeal::unit(3)).unwrap().is_void());
        assert_eq!(complex_of_ideal(&MonomialIdeal::zero(3)).unwrap(), sc(3, &[&[1, 2, 3]]));
        assert_eq!(complex_of_ideal(&ideal(2, &["x1^2"])), Err(Error::NotSquarefree));
        // facets of different sizes compare equal regardless of construction
        let mixed = complex_of_ideal(&ideal(3, &["x1*x3", "x2*x3"])).unwrap();
        assert_eq!(mixed, sc(3, &[&[3], &[1, 2]]));
        assert_eq!(mixed, mixed.combine(&mixed, CombineMode::Intersection).unwrap());

        assert_eq!(ideal_of_complex(&hollow), ideal(3, &["x1*x2*x3"]));
        assert_eq!(ideal_of_complex(&sc(3, &[&[1, 2, 3]])), MonomialIdeal::zero(3));
        assert_eq!(ideal_of_complex(&SimplicialComplex::void(3)), MonomialIdeal::unit(3));
        assert_eq!(ideal_of_complex(&SimplicialComplex::empty_only(2)), ideal(2, &["x1", "x2"]));
    }

    #[test]
    fn link_examples() {
        let hollow = sc(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(hollow.link(0b001).unwrap(), sc(3, &[&[2], &[3]]));
        assert_eq!(hollow.link(0).unwrap(), hollow);
        let tetra_boundary = sc(4, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]);
        assert_eq!(tetra_boundary.link(0b0001).unwrap(), sc(4, &[&[2, 3], &[2, 4], &[3, 4]]));
        assert!(matches!(hollow.link(0b111), Err(Error::NotAFace { .. })));
        // link of a facet is {∅}
        assert_eq!(hollow.link(0b011).unwrap().kind(), ComplexKind::EmptyOnly);
    }

    #[test]
    fn cone_examples() {
        let d = complex_of_ideal(&ideal(3, &["x1*x2"])).unwrap();
        assert!(d.is_cone_over(3));
        assert!(!d.is_cone_over(1));
        let hollow = sc(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert!((1..=3).all(|t| !hollow.is_cone_over(t)));
        let full = sc(3, &[&[1, 2, 3]]);
        assert!((1..=3).all(|t| full.is_cone_over(t)));
        assert!(!SimplicialComplex::void(3).is_cone_over(1));
    }

    #[test]
    fn homology_examples() {
        let two_points = sc(2, &[&[1], &[2]]);
        assert_eq!(two_points.reduced_homology(field()).dims, vec![0, 1]);
        let hollow = sc(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(hollow.reduced_homology(field()).dims, vec![0, 0, 1]);
        let e = SimplicialComplex::empty_only(3).reduced_homology(field());
        assert_eq!(e.get(-1), 1);
        assert_eq!(e.get(0), 0);
        assert!(SimplicialComplex::void(3).reduced_homology(field()).is_acyclic());
        assert!(sc(3, &[&[1, 2, 3]]).reduced_homology(field()).is_acyclic());
    }

    #[test]
    fn projective_plane_depends_on_characteristic() {
        // six-vertex triangulation of RP^2
        let rp2 = sc(
            6,
            &[
                &[1, 2, 3], &[1, 3, 4], &[1, 4, 5], &[1, 5, 6], &[1, 2, 6],
                &[2, 3, 5], &[3, 4, 6], &[2, 4, 5], &[2, 4, 6], &[3, 5, 6],
            ],
        );
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(rp2.reduced_homology(f2).dims, vec![0, 0, 1, 1]);
        assert!(rp2.reduced_homology(field()).is_acyclic());
    }

    #[test]
    fn combine_examples() {
        let a = sc(3, &[&[1, 2], &[3]]);
        let void = SimplicialComplex::void(3);
        assert_eq!(a.combine(&void, CombineMode::Union).unwrap(), a);
        assert!(a.combine(&void, CombineMode::Intersection).unwrap().is_void());
        let b = sc(3, &[&[2, 3]]);
        assert_eq!(a.combine(&b, CombineMode::Intersection).unwrap(), sc(3, &[&[2], &[3]]));
        assert_eq!(a.combine(&b, CombineMode::Union).unwrap(), sc(3, &[&[1, 2], &[2, 3]]));
    }

    #[test]
    fn regularity_of_stanley_reisner_ring() {
        // K[Δ] for two points: H̃_0 ≠ 0 at F = ∅, so reg = 1
        assert_eq!(sc(2, &[&[1], &[2]]).regularity(field()), Some(1));
        assert_eq!(sc(3, &[&[1, 2, 3]]).regularity(field()), Some(0));
        assert_eq!(SimplicialComplex::void(3).regularity(field()), None);
    }

    #[test]
    fn json_round_trip() {
        let a = sc(4, &[&[1, 3], &[2, 3, 4]]);
        assert_eq!(a.to_json(), "[[1,3],[2,3,4]]");
        assert_eq!(SimplicialComplex::from_json(&a.to_json(), 4).unwrap(), a);
        assert_eq!(SimplicialComplex::empty_only(2).to_json(), "[[]]");
        assert_eq!(SimplicialComplex::void(2).to_json(), "[]");
        assert!(SimplicialComplex::from_json("[[5]]", 4).is_err());
    }
}
