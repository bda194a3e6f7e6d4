//! Finite simplicial complexes on the vertex set `1..=m`.
//!
//! Vertices are 1-based everywhere in the public surface. A [`VertexSubset`]
//! stores vertex `v` in bit `v - 1`, which caps complexes at
//! [`MAX_VERTICES`] vertices.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// A subset of `{1..=m}` stored as a bitmask (vertex `v` is bit `v - 1`).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSubset(u64);

impl VertexSubset {
    pub const EMPTY: VertexSubset = VertexSubset(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSubset(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{1..=m}`.
    pub fn full(m: usize) -> Self {
        debug_assert!(m <= MAX_VERTICES);
        if m >= 64 {
            VertexSubset(u64::MAX)
        } else {
            VertexSubset((1u64 << m) - 1)
        }
    }

    pub fn singleton(v: u32) -> Self {
        debug_assert!((1..=64).contains(&v));
        VertexSubset(1u64 << (v - 1))
    }

    /// Builds a subset of `{1..=m}`, rejecting labels outside that range.
    pub fn from_vertices(m: usize, vertices: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut bits = 0u64;
        for v in vertices {
            if v == 0 || v as usize > m || v as usize > MAX_VERTICES {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    vertex_count: m,
                });
            }
            bits |= 1u64 << (v - 1);
        }
        Ok(VertexSubset(bits))
    }

    pub fn contains(self, v: u32) -> bool {
        (1..=64).contains(&v) && self.0 & (1u64 << (v - 1)) != 0
    }

    pub fn with(self, v: u32) -> Self {
        self | Self::singleton(v)
    }

    pub fn without(self, v: u32) -> Self {
        VertexSubset(self.0 & !Self::singleton(v).0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest vertex, if any.
    pub fn min(self) -> Option<u32> {
        (self.0 != 0).then(|| self.0.trailing_zeros() + 1)
    }

    /// Largest vertex, if any.
    pub fn max(self) -> Option<u32> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros())
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.iter().collect()
    }

    /// Lexicographic comparison of the sorted vertex lists.
    pub fn lex_cmp(self, other: Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let low = diff & diff.wrapping_neg();
        // Both sets agree below `low`; the one containing `low` is smaller
        // unless the other one has already run out.
        let at_or_above = !(low - 1);
        if self.0 & low != 0 {
            if other.0 & at_or_above != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        } else if self.0 & at_or_above != 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    /// Order by size, then lexicographically.
    pub fn graded_cmp(self, other: Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.lex_cmp(other))
    }

    /// Re-expresses `self ⊆ domain` in the compressed labels `1..=|domain|`
    /// where the `i`-th smallest element of `domain` becomes `i`.
    pub fn compress(self, domain: Self) -> Self {
        debug_assert!(self.is_subset_of(domain));
        let mut out = 0u64;
        for (i, v) in domain.iter().enumerate() {
            if self.contains(v) {
                out |= 1u64 << i;
            }
        }
        VertexSubset(out)
    }

    /// Inverse of [`compress`](Self::compress): maps local vertex `i` to
    /// `labels[i - 1]`.
    pub fn expand(self, labels: &[u32]) -> Self {
        let mut out = 0u64;
        for v in self.iter() {
            out |= 1u64 << (labels[v as usize - 1] - 1);
        }
        VertexSubset(out)
    }
}

impl core::ops::BitOr for VertexSubset {
    type Output = Self;
    fn bitor(self, rhs: Self) -> Self {
        VertexSubset(self.0 | rhs.0)
    }
}

impl core::ops::BitAnd for VertexSubset {
    type Output = Self;
    fn bitand(self, rhs: Self) -> Self {
        VertexSubset(self.0 & rhs.0)
    }
}

impl core::ops::Sub for VertexSubset {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        VertexSubset(self.0 & !rhs.0)
    }
}

impl fmt::Debug for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for VertexSubset {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> core::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

#[cfg(feature = "serde")]
impl<'de> serde::Deserialize<'de> for VertexSubset {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> core::result::Result<Self, D::Error> {
        let vertices = Vec::<u32>::deserialize(deserializer)?;
        VertexSubset::from_vertices(MAX_VERTICES, vertices).map_err(serde::de::Error::custom)
    }
}

/// Iterator over the vertices of a [`VertexSubset`].
#[derive(Clone)]
pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(v + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

/// Iterates all `k`-element subsets of `{1..=m}` (Gosper's hack).
pub(crate) fn k_subsets(m: usize, k: usize) -> impl Iterator<Item = VertexSubset> {
    let limit: u128 = 1u128 << m;
    let mut next: Option<u128> = if k > m { None } else { Some((1u128 << k) - 1) };
    core::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let n = (((r ^ cur) >> 2) / c) | r;
            (n < limit).then_some(n)
        };
        Some(VertexSubset(cur as u64))
    })
}

/// Iterates every subset of `set`, including the empty set and `set` itself.
pub(crate) fn submasks(set: VertexSubset) -> impl Iterator<Item = VertexSubset> {
    let full = set.0;
    let mut cur = Some(full);
    core::iter::from_fn(move || {
        let c = cur?;
        cur = if c == 0 { None } else { Some((c - 1) & full) };
        Some(VertexSubset(c))
    })
}

/// A finite simplicial complex on `{1..=m}` given by its facets.
///
/// Every vertex lies in some facet, and the facet list is inclusion-maximal
/// and sorted lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertex_count: usize,
    facets: Vec<VertexSubset>,
}

/// Result of [`SimplicialComplex::neighbourliness`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Neighbourliness {
    /// Largest `k` such that every vertex set of size `<= k + 1` is a face;
    /// saturates at `m - 1` for the full simplex.
    pub k: usize,
    pub is_simplex: bool,
}

/// Neighbours of a vertex in the 1-skeleton.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Neighborhood {
    pub neighbors: VertexSubset,
    /// `true` when the vertex is adjacent to every other vertex.
    pub dominating: bool,
}

/// Inclusion-minimal non-faces and the ellipticity flag they determine.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MissingFaces {
    pub faces: Vec<VertexSubset>,
    /// `true` iff the minimal missing faces are pairwise disjoint.
    pub rationally_elliptic: bool,
}

impl SimplicialComplex {
    /// Builds a complex from a generating list of simplices.
    ///
    /// Duplicates and non-maximal generators are dropped. Fails on an empty
    /// vertex set, empty generators, out-of-range labels, or vertices that lie
    /// in no generator.
    pub fn new(vertex_count: usize, facets: impl IntoIterator<Item = VertexSubset>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::EmptyComplex);
        }
        if vertex_count > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                got: vertex_count,
                max: MAX_VERTICES,
            });
        }
        let universe = VertexSubset::full(vertex_count);
        let mut generators: Vec<VertexSubset> = Vec::new();
        for f in facets {
            if f.is_empty() {
                return Err(Error::EmptyFacet);
            }
            if !f.is_subset_of(universe) {
                let vertex = (f - universe).min().unwrap_or(0);
                return Err(Error::VertexOutOfRange { vertex, vertex_count });
            }
            generators.push(f);
        }
        let facets = maximal_elements(generators);
        let covered = facets.iter().fold(VertexSubset::EMPTY, |acc, &f| acc | f);
        if let Some(ghost) = (universe - covered).min() {
            return Err(Error::GhostVertex(ghost));
        }
        Ok(SimplicialComplex { vertex_count, facets })
    }

    /// Convenience constructor from 1-based vertex lists.
    pub fn from_facets<F, V>(vertex_count: usize, facets: F) -> Result<Self>
    where
        F: IntoIterator<Item = V>,
        V: IntoIterator<Item = u32>,
    {
        let mut subsets = Vec::new();
        for f in facets {
            subsets.push(VertexSubset::from_vertices(vertex_count, f)?);
        }
        Self::new(vertex_count, subsets)
    }

    /// The full simplex on `m` vertices.
    pub fn simplex(m: usize) -> Result<Self> {
        Self::new(m, [VertexSubset::full(m)])
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn vertex_set(&self) -> VertexSubset {
        VertexSubset::full(self.vertex_count)
    }

    pub fn facets(&self) -> &[VertexSubset] {
        &self.facets
    }

    pub fn dimension(&self) -> usize {
        self.facets.iter().map(|f| f.len()).max().unwrap_or(1) - 1
    }

    pub fn is_face(&self, sigma: VertexSubset) -> bool {
        self.facets.iter().any(|&f| sigma.is_subset_of(f))
    }

    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0] == self.vertex_set()
    }

    /// All faces of dimension `dim`, sorted lexicographically. `dim == -1`
    /// yields the empty face; out-of-range dimensions yield nothing.
    pub fn faces(&self, dim: isize) -> Vec<VertexSubset> {
        if dim < -1 || dim > self.dimension() as isize {
            return Vec::new();
        }
        let size = (dim + 1) as usize;
        let mut out: BTreeSet<VertexSubset> = BTreeSet::new();
        for &f in &self.facets {
            if f.len() < size {
                continue;
            }
            for s in submasks(f) {
                if s.len() == size {
                    out.insert(s);
                }
            }
        }
        let mut out: Vec<_> = out.into_iter().collect();
        out.sort_by(|a, b| a.lex_cmp(*b));
        out
    }

    /// Faces of every dimension `0..=dim(K)`, each list sorted
    /// lexicographically.
    pub fn face_lists(&self) -> Vec<Vec<VertexSubset>> {
        let dim = self.dimension();
        let mut buckets: Vec<BTreeSet<VertexSubset>> = (0..=dim).map(|_| BTreeSet::new()).collect();
        for &f in &self.facets {
            for s in submasks(f) {
                if !s.is_empty() {
                    buckets[s.len() - 1].insert(s);
                }
            }
        }
        buckets
            .into_iter()
            .map(|b| {
                let mut v: Vec<_> = b.into_iter().collect();
                v.sort_by(|a, b| a.lex_cmp(*b));
                v
            })
            .collect()
    }

    /// Total number of nonempty faces.
    pub fn face_count(&self) -> usize {
        self.face_lists().iter().map(Vec::len).sum()
    }

    /// `K_I`: all faces contained in `subset`, relabelled onto `1..=|I|`.
    pub fn full_subcomplex(&self, subset: VertexSubset) -> Result<FullSubcomplex> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        if !subset.is_subset_of(self.vertex_set()) {
            let vertex = (subset - self.vertex_set()).min().unwrap_or(0);
            return Err(Error::VertexOutOfRange {
                vertex,
                vertex_count: self.vertex_count,
            });
        }
        let restricted = maximal_elements(
            self.facets
                .iter()
                .map(|&f| f & subset)
                .filter(|f| !f.is_empty())
                .collect(),
        );
        let facets = maximal_elements(restricted.iter().map(|f| f.compress(subset)).collect());
        Ok(FullSubcomplex {
            complex: SimplicialComplex {
                vertex_count: subset.len(),
                facets,
            },
            labels: subset.to_vec(),
        })
    }

    /// Neighbour sets in the 1-skeleton, indexed by `v - 1`.
    pub fn adjacency(&self) -> Vec<VertexSubset> {
        let mut adj = alloc::vec![VertexSubset::EMPTY; self.vertex_count];
        for &f in &self.facets {
            for v in f.iter() {
                adj[v as usize - 1] = adj[v as usize - 1] | f.without(v);
            }
        }
        adj
    }

    pub fn neighbors(&self, v: u32) -> Result<Neighborhood> {
        self.check_vertex(v)?;
        let neighbors = self.adjacency()[v as usize - 1];
        Ok(Neighborhood {
            neighbors,
            dominating: neighbors == self.vertex_set().without(v),
        })
    }

    pub fn has_complete_one_skeleton(&self) -> bool {
        let all = self.vertex_set();
        self.adjacency()
            .iter()
            .enumerate()
            .all(|(i, &n)| n == all.without(i as u32 + 1))
    }

    pub fn neighbourliness(&self) -> Neighbourliness {
        let m = self.vertex_count;
        if self.is_simplex() {
            return Neighbourliness {
                k: m - 1,
                is_simplex: true,
            };
        }
        // Single vertices are always faces, so the first failing size is >= 2.
        for size in 2..=m {
            if k_subsets(m, size).any(|s| !self.is_face(s)) {
                return Neighbourliness {
                    k: size - 2,
                    is_simplex: false,
                };
            }
        }
        unreachable!("a non-simplex has a missing face")
    }

    /// Members of `C_K`: nonempty vertex sets whose pairs are all edges,
    /// ordered by size and then lexicographically.
    ///
    /// Enumerates cliques of the 1-skeleton by extension, so the cost is
    /// proportional to the number of cliques rather than `2^m`.
    pub fn enumerate_ck(&self) -> Vec<VertexSubset> {
        let adj = self.adjacency();
        let mut out = Vec::new();
        let mut stack: Vec<(VertexSubset, VertexSubset)> = Vec::new();
        for v in self.vertex_set().iter() {
            let later = adj[v as usize - 1] & higher_than(v);
            stack.push((VertexSubset::singleton(v), later));
        }
        while let Some((clique, candidates)) = stack.pop() {
            out.push(clique);
            for w in candidates.iter() {
                let next = candidates & adj[w as usize - 1] & higher_than(w);
                stack.push((clique.with(w), next));
            }
        }
        out.sort_by(|a, b| a.graded_cmp(*b));
        out
    }

    /// Decomposes `K` as the pushout of `K_{v ∪ N(v)}` and `K_{V ∖ v}` over
    /// `K_{N(v)}`.
    pub fn pushout_step(&self, v: u32) -> Result<PushoutSquare> {
        let nb = self.neighbors(v)?;
        if nb.dominating {
            return Err(Error::DominatingVertex(v));
        }
        let link = nb.neighbors;
        let intersection = if link.is_empty() {
            None
        } else {
            Some(self.full_subcomplex(link)?)
        };
        Ok(PushoutSquare {
            vertex: v,
            link,
            intersection,
            star_side: self.full_subcomplex(link.with(v))?,
            deletion_side: self.full_subcomplex(self.vertex_set().without(v))?,
        })
    }

    /// Inclusion-minimal non-faces, ordered by size then lexicographically.
    pub fn minimal_missing_faces(&self) -> MissingFaces {
        let mut faces = Vec::new();
        let universe = self.vertex_set();
        for bucket in self.face_lists() {
            for tau in bucket {
                let top = tau.max().unwrap_or(0);
                for v in (universe & higher_than(top)).iter() {
                    let sigma = tau.with(v);
                    if self.is_face(sigma) {
                        continue;
                    }
                    if sigma.iter().all(|u| self.is_face(sigma.without(u))) {
                        faces.push(sigma);
                    }
                }
            }
        }
        faces.sort_by(|a, b| a.graded_cmp(*b));
        let rationally_elliptic = faces
            .iter()
            .enumerate()
            .all(|(i, a)| faces[i + 1..].iter().all(|b| a.is_disjoint(*b)));
        MissingFaces {
            faces,
            rationally_elliptic,
        }
    }

    /// Renames vertex `v` to `perm[v - 1]`.
    pub fn relabeled(&self, perm: &[u32]) -> Result<Self> {
        let m = self.vertex_count;
        let image = VertexSubset::from_vertices(m, perm.iter().copied())?;
        if perm.len() != m || image != self.vertex_set() {
            return Err(Error::VertexOutOfRange {
                vertex: 0,
                vertex_count: m,
            });
        }
        Self::new(m, self.facets.iter().map(|f| f.expand(perm)))
    }

    fn check_vertex(&self, v: u32) -> Result<()> {
        if v == 0 || v as usize > self.vertex_count {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count,
            });
        }
        Ok(())
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K[m={}; ", self.vertex_count)?;
        for (i, s) in self.facets.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("]")
    }
}

fn higher_than(v: u32) -> VertexSubset {
    if v >= 64 {
        VertexSubset::EMPTY
    } else {
        VertexSubset(!((1u64 << v) - 1))
    }
}

/// Inclusion-maximal elements, deduplicated and sorted lexicographically.
fn maximal_elements(mut sets: Vec<VertexSubset>) -> Vec<VertexSubset> {
    sets.sort_by_key(|s| core::cmp::Reverse(s.len()));
    sets.dedup();
    let mut kept: Vec<VertexSubset> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset_of(*k)) {
            kept.push(s);
        }
    }
    kept.sort_by(|a, b| a.lex_cmp(*b));
    kept
}

/// A full subcomplex together with the original label of each local vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct FullSubcomplex {
    pub complex: SimplicialComplex,
    /// `labels[i]` is the label (in the parent) of local vertex `i + 1`.
    pub labels: Vec<u32>,
}

impl FullSubcomplex {
    /// The complex itself, labelled by the identity map.
    pub fn whole(complex: SimplicialComplex) -> Self {
        let labels = (1..=complex.vertex_count() as u32).collect();
        FullSubcomplex { complex, labels }
    }

    /// Vertex set in parent labels.
    pub fn support(&self) -> VertexSubset {
        VertexSubset::full(self.complex.vertex_count()).expand(&self.labels)
    }

    /// Maps a local subset to parent labels.
    pub fn to_parent(&self, local: VertexSubset) -> VertexSubset {
        local.expand(&self.labels)
    }

    /// Facets in parent labels.
    pub fn parent_facets(&self) -> Vec<VertexSubset> {
        self.complex.facets().iter().map(|f| f.expand(&self.labels)).collect()
    }

    /// Full subcomplex on a local vertex set, with labels composed back to the
    /// parent.
    pub fn restrict(&self, local: VertexSubset) -> Result<FullSubcomplex> {
        let inner = self.complex.full_subcomplex(local)?;
        let labels = inner.labels.iter().map(|&v| self.labels[v as usize - 1]).collect();
        Ok(FullSubcomplex {
            complex: inner.complex,
            labels,
        })
    }
}

impl fmt::Debug for FullSubcomplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} on {:?}", self.complex, self.labels)
    }
}

/// The square `L → K1`, `L → K2` with pushout `K`, for a non-dominating
/// vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PushoutSquare {
    pub vertex: u32,
    /// `N(v)` in the labels of the decomposed complex.
    pub link: VertexSubset,
    /// `K_{N(v)}`; `None` when `v` is isolated.
    pub intersection: Option<FullSubcomplex>,
    /// `K_{v ∪ N(v)}`.
    pub star_side: FullSubcomplex,
    /// `K_{V ∖ v}`.
    pub deletion_side: FullSubcomplex,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use alloc::vec;

    fn set(v: &[u32]) -> VertexSubset {
        VertexSubset::from_vertices(64, v.iter().copied()).unwrap()
    }

    #[test]
    fn lex_order_matches_vertex_lists() {
        let all: Vec<VertexSubset> = (0u64..64).map(VertexSubset::from_bits).collect();
        for &a in &all {
            for &b in &all {
                assert_eq!(a.lex_cmp(b), a.to_vec().cmp(&b.to_vec()), "{a} vs {b}");
            }
        }
    }

    #[test]
    fn gosper_enumerates_binomials() {
        for m in 0..=8 {
            for k in 0..=m + 1 {
                let subsets: Vec<_> = k_subsets(m, k).collect();
                let expected = if k > m { 0 } else { binomial(m, k) };
                assert_eq!(subsets.len(), expected, "C({m},{k})");
                assert!(subsets.iter().all(|s| s.len() == k));
            }
        }
    }

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(
            SimplicialComplex::from_facets(0, Vec::<Vec<u32>>::new()),
            Err(Error::EmptyComplex)
        );
        assert_eq!(
            SimplicialComplex::from_facets(3, [vec![1, 2]]),
            Err(Error::GhostVertex(3))
        );
        assert!(matches!(
            SimplicialComplex::from_facets(3, [vec![0, 1]]),
            Err(Error::VertexOutOfRange { vertex: 0, .. })
        ));
        assert!(matches!(
            SimplicialComplex::from_facets(2, [vec![1, 3]]),
            Err(Error::VertexOutOfRange { vertex: 3, .. })
        ));
        assert_eq!(
            SimplicialComplex::from_facets(1, [Vec::<u32>::new()]),
            Err(Error::EmptyFacet)
        );
    }

    #[test]
    fn drops_non_maximal_generators() {
        let k = SimplicialComplex::from_facets(3, [vec![1, 2], vec![1, 2, 3], vec![3]]).unwrap();
        assert_eq!(k.facets(), &[set(&[1, 2, 3])]);
        assert!(k.is_simplex());
    }

    #[test]
    fn faces_of_triangle_boundary() {
        let k = fixtures::boundary_of_simplex(3);
        assert_eq!(k.faces(1), vec![set(&[1, 2]), set(&[1, 3]), set(&[2, 3])]);
        assert!(k.faces(2).is_empty());
        assert_eq!(k.faces(-1), vec![VertexSubset::EMPTY]);
        assert!(k.faces(7).is_empty());
    }

    #[test]
    fn rp2_face_counts() {
        let k = fixtures::rp2_six_vertex();
        let f: Vec<usize> = (0..=2).map(|d| k.faces(d).len()).collect();
        assert_eq!(f, vec![6, 15, 10]);
        assert_eq!(6 - 15 + 10, 1);
    }

    #[test]
    fn full_subcomplex_examples() {
        let path = fixtures::path(3);
        let sub = path.full_subcomplex(set(&[1, 3])).unwrap();
        assert_eq!(sub.complex.vertex_count(), 2);
        assert_eq!(sub.complex.facets(), &[set(&[1]), set(&[2])]);
        assert_eq!(sub.labels, vec![1, 3]);

        let tri = fixtures::boundary_of_simplex(3);
        let edge = tri.full_subcomplex(set(&[1, 2])).unwrap();
        assert!(edge.complex.is_simplex());
        assert_eq!(edge.complex.vertex_count(), 2);

        assert_eq!(path.full_subcomplex(VertexSubset::EMPTY), Err(Error::EmptySubset));
    }

    #[test]
    fn rp2_vertex_deletions() {
        let k = fixtures::rp2_six_vertex();
        let triangles = k.faces(2);
        for v in 1..=6u32 {
            let degree = triangles.iter().filter(|t| t.contains(v)).count();
            let sub = k.full_subcomplex(k.vertex_set().without(v)).unwrap();
            assert_eq!(sub.complex.dimension(), 2);
            assert_eq!(sub.complex.faces(2).len(), 10 - degree);
        }
    }

    #[test]
    fn neighbourliness_examples() {
        let simplex = SimplicialComplex::simplex(4).unwrap();
        assert_eq!(simplex.neighbourliness(), Neighbourliness { k: 3, is_simplex: true });
        assert_eq!(fixtures::rp2_six_vertex().neighbourliness().k, 1);
        assert_eq!(
            fixtures::disjoint_points(2).neighbourliness(),
            Neighbourliness {
                k: 0,
                is_simplex: false
            }
        );
        assert_eq!(fixtures::boundary_of_simplex(5).neighbourliness().k, 3);
    }

    #[test]
    fn ck_examples() {
        let path = fixtures::path(3);
        assert_eq!(
            path.enumerate_ck(),
            vec![set(&[1]), set(&[2]), set(&[3]), set(&[1, 2]), set(&[2, 3])]
        );
        let two_edges = SimplicialComplex::from_facets(4, [vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(
            two_edges.enumerate_ck(),
            vec![set(&[1]), set(&[2]), set(&[3]), set(&[4]), set(&[1, 2]), set(&[3, 4])]
        );
        let rp2 = fixtures::rp2_six_vertex();
        assert_eq!(rp2.enumerate_ck().len(), 63);
    }

    #[test]
    fn neighbors_and_domination() {
        let path = fixtures::path(3);
        let n1 = path.neighbors(1).unwrap();
        assert_eq!(n1.neighbors, set(&[2]));
        assert!(!n1.dominating);
        assert!(path.neighbors(2).unwrap().dominating);
        assert!(path.neighbors(4).is_err());

        let star = SimplicialComplex::from_facets(4, [vec![1, 2], vec![1, 3], vec![1, 4]]).unwrap();
        assert!(star.neighbors(1).unwrap().dominating);

        let rp2 = fixtures::rp2_six_vertex();
        for v in 1..=6 {
            let n = rp2.neighbors(v).unwrap();
            assert!(n.dominating);
            assert_eq!(n.neighbors.len(), 5);
        }
    }

    #[test]
    fn pushout_examples() {
        let path = fixtures::path(3);
        let sq = path.pushout_step(1).unwrap();
        assert_eq!(sq.link, set(&[2]));
        assert_eq!(sq.intersection.as_ref().unwrap().labels, vec![2]);
        assert_eq!(sq.star_side.parent_facets(), vec![set(&[1, 2])]);
        assert_eq!(sq.deletion_side.parent_facets(), vec![set(&[2, 3])]);

        let c4 = fixtures::cycle(4);
        let sq = c4.pushout_step(1).unwrap();
        let l = sq.intersection.unwrap();
        assert_eq!(l.parent_facets(), vec![set(&[2]), set(&[4])]);
        assert_eq!(sq.star_side.parent_facets(), vec![set(&[1, 2]), set(&[1, 4])]);
        assert_eq!(sq.deletion_side.parent_facets(), vec![set(&[2, 3]), set(&[3, 4])]);

        let rp2 = fixtures::rp2_six_vertex();
        assert_eq!(rp2.pushout_step(3), Err(Error::DominatingVertex(3)));

        let isolated = SimplicialComplex::from_facets(3, [vec![1, 2], vec![3]]).unwrap();
        let sq = isolated.pushout_step(3).unwrap();
        assert!(sq.intersection.is_none());
        assert_eq!(sq.star_side.labels, vec![3]);
    }

    #[test]
    fn missing_face_examples() {
        let tri = fixtures::boundary_of_simplex(3);
        let mf = tri.minimal_missing_faces();
        assert_eq!(mf.faces, vec![set(&[1, 2, 3])]);
        assert!(mf.rationally_elliptic);

        assert_eq!(fixtures::path(3).minimal_missing_faces().faces, vec![set(&[1, 3])]);

        let c4 = fixtures::cycle(4).minimal_missing_faces();
        assert_eq!(c4.faces, vec![set(&[1, 3]), set(&[2, 4])]);
        assert!(c4.rationally_elliptic);

        let c5 = fixtures::cycle(5).minimal_missing_faces();
        assert_eq!(
            c5.faces,
            vec![set(&[1, 3]), set(&[1, 4]), set(&[2, 4]), set(&[2, 5]), set(&[3, 5])]
        );
        assert!(!c5.rationally_elliptic);

        let simplex = SimplicialComplex::simplex(3).unwrap().minimal_missing_faces();
        assert!(simplex.faces.is_empty());
        assert!(simplex.rationally_elliptic);
    }

    #[test]
    fn relabeling_permutes_facets() {
        let path = fixtures::path(3);
        let swapped = path.relabeled(&[3, 2, 1]).unwrap();
        assert_eq!(swapped, path);
        let moved = path.relabeled(&[2, 1, 3]).unwrap();
        assert_eq!(moved.facets(), &[set(&[1, 2]), set(&[1, 3])]);
        assert!(path.relabeled(&[1, 1, 2]).is_err());
    }
}
