//! Exact reduced integral homology of simplicial complexes.

pub mod snf;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::complex::{SimplicialComplex, VertexSubset};
use crate::primes;
pub use snf::{smith_normal_form, SmithForm, SparseMatrix};

/// A cyclic summand `Z/p^r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PrimePower {
    pub prime: u64,
    pub exponent: u32,
}

impl PrimePower {
    pub fn new(prime: u64, exponent: u32) -> Self {
        debug_assert!(primes::is_prime(prime) && exponent >= 1);
        PrimePower { prime, exponent }
    }

    pub fn order(self) -> u64 {
        self.prime.pow(self.exponent)
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 1 {
            write!(f, "Z/{}", self.prime)
        } else {
            write!(f, "Z/{}^{}", self.prime, self.exponent)
        }
    }
}

/// `Z^betti ⊕ torsion` in one degree.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DegreeGroup {
    pub betti: usize,
    /// Elementary divisors, sorted.
    pub torsion: Vec<PrimePower>,
}

impl DegreeGroup {
    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for DegreeGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push(alloc::string::String::from("Z")),
            b => parts.push(alloc::format!("Z^{b}")),
        }
        for t in &self.torsion {
            parts.push(alloc::format!("{t}"));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Reduced homology by degree. Only nonzero degrees are stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct HomologyProfile {
    groups: BTreeMap<usize, DegreeGroup>,
}

impl HomologyProfile {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn group(&self, degree: usize) -> Option<&DegreeGroup> {
        self.groups.get(&degree)
    }

    pub fn betti(&self, degree: usize) -> usize {
        self.groups.get(&degree).map_or(0, |g| g.betti)
    }

    pub fn torsion(&self, degree: usize) -> &[PrimePower] {
        self.groups.get(&degree).map_or(&[], |g| &g.torsion)
    }

    /// Nonzero degrees with their groups, in increasing degree.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &DegreeGroup)> {
        self.groups.iter().map(|(&d, g)| (d, g))
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.groups.keys().copied()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.groups.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.groups.keys().next_back().copied()
    }

    pub fn add_free(&mut self, degree: usize, rank: usize) {
        if rank > 0 {
            self.groups.entry(degree).or_default().betti += rank;
        }
    }

    pub fn add_torsion(&mut self, degree: usize, summand: PrimePower) {
        let g = self.groups.entry(degree).or_default();
        let at = g.torsion.binary_search(&summand).unwrap_or_else(|i| i);
        g.torsion.insert(at, summand);
    }

    /// Adds `other` with every degree raised by `shift`.
    pub fn add_shifted(&mut self, other: &HomologyProfile, shift: usize) {
        for (d, g) in other.iter() {
            self.add_free(d + shift, g.betti);
            for &t in &g.torsion {
                self.add_torsion(d + shift, t);
            }
        }
    }

    pub fn shifted(&self, shift: usize) -> HomologyProfile {
        let mut out = HomologyProfile::new();
        out.add_shifted(self, shift);
        out
    }

    pub fn is_torsion_free(&self) -> bool {
        self.groups.values().all(|g| g.torsion.is_empty())
    }

    pub fn torsion_primes(&self) -> BTreeSet<u64> {
        self.groups
            .values()
            .flat_map(|g| g.torsion.iter().map(|t| t.prime))
            .collect()
    }

    /// The same profile with torsion discarded.
    pub fn rational(&self) -> HomologyProfile {
        let mut out = HomologyProfile::new();
        for (d, g) in self.iter() {
            out.add_free(d, g.betti);
        }
        out
    }

    /// `Σ (-1)^d betti_d`.
    pub fn euler_characteristic(&self) -> i64 {
        self.iter()
            .map(|(d, g)| if d % 2 == 0 { g.betti as i64 } else { -(g.betti as i64) })
            .sum()
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (d, g)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "H{d} = {g}")?;
        }
        Ok(())
    }
}

/// Set of primes occurring as torsion.
pub type TorsionPrimeSet = BTreeSet<u64>;

pub fn torsion_primes<'a>(profiles: impl IntoIterator<Item = &'a HomologyProfile>) -> TorsionPrimeSet {
    profiles.into_iter().flat_map(|p| p.torsion_primes()).collect()
}

/// Boundary map `C_d → C_{d-1}`; rows are `(d-1)`-faces and columns
/// `d`-faces, both in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BoundaryMatrix {
    pub degree: usize,
    pub matrix: SparseMatrix,
}

/// Faces of a complex by dimension, reusable for any full subcomplex.
#[derive(Debug, Clone)]
pub struct FaceTable {
    lists: Vec<Vec<VertexSubset>>,
}

impl FaceTable {
    pub fn new(complex: &SimplicialComplex) -> Self {
        FaceTable {
            lists: complex.face_lists(),
        }
    }

    /// Faces of `K_I` by dimension, in parent labels.
    fn restricted(&self, subset: VertexSubset) -> Vec<Vec<VertexSubset>> {
        let mut out: Vec<Vec<VertexSubset>> = self
            .lists
            .iter()
            .map(|l| l.iter().copied().filter(|f| f.is_subset_of(subset)).collect())
            .collect();
        while out.last().is_some_and(Vec::is_empty) {
            out.pop();
        }
        out
    }

    pub fn is_face(&self, sigma: VertexSubset) -> bool {
        sigma.is_empty()
            || self
                .lists
                .get(sigma.len() - 1)
                .is_some_and(|l| l.binary_search_by(|f| f.lex_cmp(sigma)).is_ok())
    }

    /// Reduced homology of the full subcomplex on `subset` (nonempty).
    pub fn homology_of(&self, subset: VertexSubset) -> HomologyProfile {
        reduced_homology_of_faces(&self.restricted(subset))
    }
}

fn boundary_from_faces(lower: &[VertexSubset], upper: &[VertexSubset], degree: usize) -> BoundaryMatrix {
    let mut matrix = SparseMatrix::zeros(lower.len(), upper.len());
    for (c, &face) in upper.iter().enumerate() {
        for (j, v) in face.iter().enumerate() {
            let r = lower
                .binary_search_by(|f| f.lex_cmp(face.without(v)))
                .expect("faces are closed under subsets");
            matrix.set(r, c, if j % 2 == 0 { 1 } else { -1 });
        }
    }
    BoundaryMatrix { degree, matrix }
}

/// `∂_d` for `d = 1..=dim(K)`.
pub fn boundary_matrices(complex: &SimplicialComplex) -> Vec<BoundaryMatrix> {
    let lists = complex.face_lists();
    (1..lists.len())
        .map(|d| boundary_from_faces(&lists[d - 1], &lists[d], d))
        .collect()
}

pub fn reduced_homology(complex: &SimplicialComplex) -> HomologyProfile {
    reduced_homology_of_faces(&complex.face_lists())
}

fn reduced_homology_of_faces(lists: &[Vec<VertexSubset>]) -> HomologyProfile {
    let top = lists.len();
    // forms[d] is the Smith form of ∂_d; ∂_0 is the augmentation.
    let mut forms: Vec<SmithForm> = Vec::with_capacity(top + 1);
    forms.push(SmithForm {
        invariant_factors: if lists.first().is_some_and(|l| !l.is_empty()) {
            alloc::vec![BigUint::one()]
        } else {
            Vec::new()
        },
        rank: usize::from(lists.first().is_some_and(|l| !l.is_empty())),
    });
    for d in 1..top {
        forms.push(smith_normal_form(
            &boundary_from_faces(&lists[d - 1], &lists[d], d).matrix,
        ));
    }

    let mut profile = HomologyProfile::new();
    for d in 0..top {
        let rank_here = forms[d].rank;
        let rank_above = forms.get(d + 1).map_or(0, |f| f.rank);
        profile.add_free(d, lists[d].len() - rank_here - rank_above);
        if let Some(above) = forms.get(d + 1) {
            for factor in above.invariant_factors.iter().filter(|f| !f.is_one()) {
                let value = u64::try_from(factor).expect("torsion coefficient fits in 64 bits");
                for (p, e) in primes::factorize(value) {
                    profile.add_torsion(d, PrimePower::new(p, e));
                }
            }
        }
    }

    let face_euler: i64 = lists
        .iter()
        .enumerate()
        .map(|(d, l)| if d % 2 == 0 { l.len() as i64 } else { -(l.len() as i64) })
        .sum();
    assert_eq!(
        face_euler,
        1 + profile.euler_characteristic(),
        "Euler characteristic mismatch"
    );
    profile
}

/// Homology connectivity: the largest `c` with `H̃_d = 0` for all `d <= c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Connectivity {
    /// `H̃_d = 0` for `d <= c`, `H̃_{c+1} != 0`. `c = -1` when `H̃_0 != 0`.
    Finite(i64),
    /// Reduced homology vanishes; carries the dimension, above which
    /// homology vanishes trivially.
    Acyclic { dimension: usize },
}

pub fn homology_connectivity(complex: &SimplicialComplex) -> Connectivity {
    match reduced_homology(complex).min_degree() {
        Some(d) => Connectivity::Finite(d as i64 - 1),
        None => Connectivity::Acyclic {
            dimension: complex.dimension(),
        },
    }
}
