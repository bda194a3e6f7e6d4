//! Primes to invert for a product-of-spheres decomposition of `ΩZ_K`.
//!
//! With `M = max_{K_I ∈ C_K} (|I| + dim K_I - 2k_I)` over the non-simplex
//! members, and every member rationally Golod, `ΩZ_K` is a product of
//! spheres and loops on spheres once the primes `p <= M/2` and the torsion
//! primes of the members are inverted.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::complex::{SimplicialComplex, VertexSubset};
use crate::error::{Error, Result};
use crate::homology::TorsionPrimeSet;
use crate::members::{survey, Member};
use crate::primes::primes_at_most_half;
use crate::splitting::unstable_requirement;

/// Recorded in every report: the boundary prime `p = M/2` is excluded.
pub const BOUNDARY_CONVENTION: &str = "primes p with 2p <= M are excluded (p = M/2 included)";

/// `|I| + dim K_I - 2k_I` for a member that is not a simplex.
pub fn deficit(member: &SimplicialComplex) -> Result<usize> {
    let n = member.neighbourliness();
    if n.is_simplex {
        return Err(Error::SimplexExcluded);
    }
    Ok(member.vertex_count() + member.dimension() - 2 * n.k)
}

/// A nonnegative multiple of one half.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HalfInteger {
    pub twice: u64,
}

impl HalfInteger {
    pub fn from_twice(twice: u64) -> Self {
        HalfInteger { twice }
    }

    /// Whether the prime `p` lies strictly above the bound.
    pub fn admits(self, p: u64) -> bool {
        2 * p > self.twice
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// `(d - s + 1) / 2` for dimension `d` and connectivity `s`; primes
/// strictly above it are admissible.
pub fn lemma23_threshold(dimension: usize, connectivity: usize) -> Result<HalfInteger> {
    if dimension < connectivity {
        return Err(Error::ConnectivityExceedsDimension {
            dimension,
            connectivity,
        });
    }
    Ok(HalfInteger::from_twice((dimension - connectivity + 1) as u64))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum GolodStatus {
    /// `⌈dim/2⌉`-neighbourly, a simplex, or a complete graph: `Z_K` is a
    /// wedge and hence a co-H-space.
    YesByNeighbourliness,
    AssertedByUser,
    Unknown,
}

impl GolodStatus {
    pub fn passes(self) -> bool {
        self != GolodStatus::Unknown
    }
}

/// Sufficient conditions for rational Golodness; `asserted` records a user
/// override and is consulted only when they fail.
pub fn golod_gate(member: &SimplicialComplex, asserted: bool) -> GolodStatus {
    let n = member.neighbourliness();
    let dim = member.dimension();
    let by_neighbourliness =
        n.is_simplex || n.k >= unstable_requirement(member) || (dim <= 1 && member.has_complete_one_skeleton());
    if by_neighbourliness {
        GolodStatus::YesByNeighbourliness
    } else if asserted {
        GolodStatus::AssertedByUser
    } else {
        GolodStatus::Unknown
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PrimeExclusionReport {
    /// Maximum deficit over non-simplex members; 0 if there are none.
    #[cfg_attr(feature = "serde", serde(rename = "M"))]
    pub m: usize,
    /// `{p prime : 2p <= M}`.
    pub threshold_primes: BTreeSet<u64>,
    pub torsion_primes: TorsionPrimeSet,
    #[cfg_attr(feature = "serde", serde(with = "crate::serde_util::subset_map"))]
    pub golod_status: BTreeMap<VertexSubset, GolodStatus>,
    pub verdict_ok: bool,
}

impl PrimeExclusionReport {
    /// Threshold primes together with torsion primes.
    pub fn excluded_primes(&self) -> BTreeSet<u64> {
        self.threshold_primes.union(&self.torsion_primes).copied().collect()
    }

    /// Members whose gate did not pass.
    pub fn failing_members(&self) -> impl Iterator<Item = VertexSubset> + '_ {
        self.golod_status.iter().filter(|(_, s)| !s.passes()).map(|(&i, _)| i)
    }
}

/// Builds the report for `K`. `asserted` lists members (in `K`'s labels)
/// whose rational Golodness the caller vouches for.
pub fn prime_exclusion(complex: &SimplicialComplex, asserted: &BTreeSet<VertexSubset>) -> PrimeExclusionReport {
    prime_exclusion_from_members(&survey(complex), asserted)
}

pub(crate) fn prime_exclusion_from_members(
    members: &[Member],
    asserted: &BTreeSet<VertexSubset>,
) -> PrimeExclusionReport {
    let mut m = 0;
    let mut torsion_primes = TorsionPrimeSet::new();
    let mut golod_status = BTreeMap::new();
    for member in members {
        if !member.is_simplex() {
            m = m.max(deficit(&member.complex.complex).expect("not a simplex"));
        }
        torsion_primes.extend(member.homology.torsion_primes());
        golod_status.insert(
            member.subset,
            golod_gate(&member.complex.complex, asserted.contains(&member.subset)),
        );
    }
    let verdict_ok = golod_status.values().all(|s| s.passes());
    PrimeExclusionReport {
        m,
        threshold_primes: primes_at_most_half(m as u64).into_iter().collect(),
        torsion_primes,
        golod_status,
        verdict_ok,
    }
}

/// For a non-simplex member, the pair `(1 + |I| + dim K_I, 2k_I + 2)` fed to
/// [`lemma23_threshold`].
pub fn member_dimension_and_connectivity(member: &SimplicialComplex) -> Result<(usize, usize)> {
    let n = member.neighbourliness();
    if n.is_simplex {
        return Err(Error::SimplexExcluded);
    }
    Ok((1 + member.vertex_count() + member.dimension(), 2 * n.k + 2))
}

/// Members sorted by deficit, largest first; simplices omitted.
pub fn deficits(complex: &SimplicialComplex) -> Vec<(VertexSubset, usize)> {
    let mut out: Vec<(VertexSubset, usize)> = survey(complex)
        .iter()
        .filter(|m| !m.is_simplex())
        .map(|m| (m.subset, deficit(&m.complex.complex).expect("not a simplex")))
        .collect();
    out.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.graded_cmp(b.0)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(v: &[u64]) -> BTreeSet<u64> {
        v.iter().copied().collect()
    }

    #[test]
    fn deficit_examples() {
        assert_eq!(deficit(&fixtures::rp2_six_vertex()), Ok(6));
        for m in 3..=7 {
            assert_eq!(deficit(&fixtures::complete_graph(m)), Ok(m - 1));
        }
        assert_eq!(deficit(&fixtures::boundary_of_simplex(3)), Ok(2));
        assert_eq!(
            deficit(&SimplicialComplex::simplex(3).unwrap()),
            Err(Error::SimplexExcluded)
        );
    }

    #[test]
    fn threshold_examples() {
        assert_eq!(lemma23_threshold(9, 4), Ok(HalfInteger::from_twice(6)));
        assert_eq!(lemma23_threshold(9, 4).unwrap().to_string(), "3");
        assert_eq!(lemma23_threshold(4, 4).unwrap().to_string(), "1/2");
        assert!(lemma23_threshold(3, 4).is_err());
        let t = lemma23_threshold(9, 4).unwrap();
        assert!(!t.admits(3) && t.admits(5));

        let (d, s) = member_dimension_and_connectivity(&fixtures::rp2_six_vertex()).unwrap();
        assert_eq!((d, s), (9, 4));
        assert_eq!(lemma23_threshold(d, s).unwrap().twice, 6);
    }

    #[test]
    fn gate_examples() {
        assert_eq!(
            golod_gate(&fixtures::rp2_six_vertex(), false),
            GolodStatus::YesByNeighbourliness
        );
        assert_eq!(
            golod_gate(&fixtures::complete_graph(5), false),
            GolodStatus::YesByNeighbourliness
        );
        let four = fixtures::four_dim_unknown();
        assert_eq!(golod_gate(&four, false), GolodStatus::Unknown);
        assert_eq!(golod_gate(&four, true), GolodStatus::AssertedByUser);
    }

    #[test]
    fn report_examples() {
        let none = BTreeSet::new();
        let rp2 = prime_exclusion(&fixtures::rp2_six_vertex(), &none);
        assert_eq!(rp2.m, 6);
        assert_eq!(rp2.threshold_primes, set(&[2, 3]));
        assert_eq!(rp2.torsion_primes, set(&[2]));
        assert_eq!(rp2.excluded_primes(), set(&[2, 3]));
        assert!(rp2.verdict_ok);

        let k4 = prime_exclusion(&fixtures::complete_graph(4), &none);
        assert_eq!(k4.m, 3);
        assert!(k4.excluded_primes().is_empty());
        assert!(k4.verdict_ok);

        let simplex = prime_exclusion(&SimplicialComplex::simplex(4).unwrap(), &none);
        assert_eq!(simplex.m, 0);
        assert!(simplex.excluded_primes().is_empty());
        assert!(simplex.verdict_ok);
    }

    #[test]
    fn assertions_unlock_the_gate() {
        let four = fixtures::four_dim_unknown();
        let plain = prime_exclusion(&four, &BTreeSet::new());
        assert!(!plain.verdict_ok);
        let failing: Vec<VertexSubset> = plain.failing_members().collect();
        let asserted: BTreeSet<VertexSubset> = failing.iter().copied().collect();
        let vouched = prime_exclusion(&four, &asserted);
        assert!(vouched.verdict_ok);
        assert!(vouched.golod_status.values().any(|&s| s == GolodStatus::AssertedByUser));
    }

    #[test]
    fn deficit_ranking() {
        let top = deficits(&fixtures::rp2_six_vertex());
        assert_eq!(top[0], (VertexSubset::full(6), 6));
    }
}
