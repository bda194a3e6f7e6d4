//! Wedge splittings of `Z_K` and `ΣZ_K` over non-face full subcomplexes.
//!
//! For every `I ⊆ [m]` that is not a face of `K` the full subcomplex `K_I`
//! contributes `Σ^{2+|I|}|K_I|` to `ΣZ_K`, and `Σ^{1+|I|}|K_I|` to `Z_K`
//! itself when `K` is `⌈dim K / 2⌉`-neighbourly. Summands whose homology
//! sits in a simply connected two-degree window become spheres and Moore
//! spaces; the rest stay [`WedgeSummand::Unresolved`].

mod koszul;

use alloc::vec::Vec;
use core::fmt;

use crate::complex::{SimplicialComplex, VertexSubset};
use crate::error::{Error, Result};
use crate::homology::{FaceTable, HomologyProfile, PrimePower};

pub use koszul::{koszul_tor_oracle, ORACLE_MAX_VERTICES};

/// Largest vertex count accepted by the `2^m` subset sweeps.
pub const SWEEP_MAX_VERTICES: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "snake_case"))]
pub enum WedgeSummand {
    Sphere {
        dim: usize,
    },
    /// `P^dim(prime^exponent)`, with reduced homology `Z/p^r` in degree `dim - 1`.
    Moore {
        dim: usize,
        prime: u64,
        exponent: u32,
    },
    /// `Σ^shift |K_I|`, kept whole because its homology is outside the
    /// conversion window. `subset` is `None` when the summand did not come
    /// from a full subcomplex.
    Unresolved {
        shift: usize,
        subset: Option<VertexSubset>,
        profile: HomologyProfile,
    },
}

impl WedgeSummand {
    /// Reduced integral homology of the summand.
    pub fn homology(&self) -> HomologyProfile {
        let mut out = HomologyProfile::new();
        match self {
            WedgeSummand::Sphere { dim } => out.add_free(*dim, 1),
            WedgeSummand::Moore { dim, prime, exponent } => {
                out.add_torsion(dim - 1, PrimePower::new(*prime, *exponent))
            }
            WedgeSummand::Unresolved { shift, profile, .. } => out.add_shifted(profile, *shift),
        }
        out
    }

    /// Highest degree with nonzero homology.
    pub fn top_degree(&self) -> usize {
        match self {
            WedgeSummand::Sphere { dim } => *dim,
            WedgeSummand::Moore { dim, .. } => dim - 1,
            WedgeSummand::Unresolved { shift, profile, .. } => shift + profile.max_degree().unwrap_or(0),
        }
    }

    pub fn is_resolved(&self) -> bool {
        !matches!(self, WedgeSummand::Unresolved { .. })
    }
}

impl fmt::Display for WedgeSummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WedgeSummand::Sphere { dim } => write!(f, "S^{dim}"),
            WedgeSummand::Moore {
                dim,
                prime,
                exponent: 1,
            } => write!(f, "P^{dim}({prime})"),
            WedgeSummand::Moore { dim, prime, exponent } => write!(f, "P^{dim}({prime}^{exponent})"),
            WedgeSummand::Unresolved {
                shift, subset: Some(s), ..
            } => write!(f, "Σ^{shift}|K_{s}|"),
            WedgeSummand::Unresolved {
                shift,
                subset: None,
                profile,
            } => write!(f, "Σ^{shift}[{profile}]"),
        }
    }
}

/// Which space a wedge decomposition describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum WedgeTarget {
    /// `ΣZ_K`; summands are shifted by `2 + |I|`.
    SuspensionOfZk,
    /// `Z_K`; summands are shifted by `1 + |I|`.
    Zk,
}

impl WedgeTarget {
    pub fn shift(self, subset_size: usize) -> usize {
        match self {
            WedgeTarget::SuspensionOfZk => 2 + subset_size,
            WedgeTarget::Zk => 1 + subset_size,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct WedgeDecomposition {
    pub target: WedgeTarget,
    pub summands: Vec<WedgeSummand>,
}

impl WedgeDecomposition {
    pub fn homology(&self) -> HomologyProfile {
        let mut out = HomologyProfile::new();
        for s in &self.summands {
            out.add_shifted(&s.homology(), 0);
        }
        out
    }

    pub fn is_fully_resolved(&self) -> bool {
        self.summands.iter().all(WedgeSummand::is_resolved)
    }

    pub fn unresolved(&self) -> impl Iterator<Item = &WedgeSummand> {
        self.summands.iter().filter(|s| !s.is_resolved())
    }
}

/// One non-face full subcomplex and its suspension shift in `ΣZ_K`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HochsterSummand {
    pub subset: VertexSubset,
    pub shift: usize,
    pub profile: HomologyProfile,
}

fn check_sweep(complex: &SimplicialComplex) -> Result<()> {
    let m = complex.vertex_count();
    if m > SWEEP_MAX_VERTICES {
        return Err(Error::TooManyVertices {
            got: m,
            max: SWEEP_MAX_VERTICES,
        });
    }
    Ok(())
}

/// Non-face subsets with their summand data, ordered by size then
/// lexicographically. Entries with acyclic `K_I` are kept.
pub fn hochster_summands(complex: &SimplicialComplex) -> Result<Vec<HochsterSummand>> {
    Ok(non_face_profiles(complex)?
        .into_iter()
        .map(|(subset, profile)| HochsterSummand {
            subset,
            shift: WedgeTarget::SuspensionOfZk.shift(subset.len()),
            profile,
        })
        .collect())
}

fn non_face_profiles(complex: &SimplicialComplex) -> Result<Vec<(VertexSubset, HomologyProfile)>> {
    check_sweep(complex)?;
    let m = complex.vertex_count();
    let table = FaceTable::new(complex);
    let mut subsets: Vec<VertexSubset> = (1..1u64 << m).map(VertexSubset::from_bits).collect();
    subsets.sort_by(|a, b| a.graded_cmp(*b));
    let mut out = Vec::new();
    for subset in subsets {
        if table.is_face(subset) {
            // A face spans a full simplex, whose suspension is contractible.
            assert!(
                table.homology_of(subset).is_zero(),
                "full subcomplex on the face {subset} is not acyclic"
            );
            continue;
        }
        out.push((subset, table.homology_of(subset)));
    }
    Ok(out)
}

/// `H̃_*(Z_K) = ⊕_{I ∉ K} H̃_{*-|I|-1}(K_I)`.
pub fn zk_homology(complex: &SimplicialComplex) -> Result<HomologyProfile> {
    let mut out = HomologyProfile::new();
    for (subset, profile) in non_face_profiles(complex)? {
        out.add_shifted(&profile, WedgeTarget::Zk.shift(subset.len()));
    }
    Ok(out)
}

fn wedge(complex: &SimplicialComplex, target: WedgeTarget) -> Result<WedgeDecomposition> {
    let mut summands = Vec::new();
    for (subset, profile) in non_face_profiles(complex)? {
        let shift = target.shift(subset.len());
        for s in homology_to_wedge(shift, &profile) {
            summands.push(match s {
                WedgeSummand::Unresolved { shift, profile, .. } => WedgeSummand::Unresolved {
                    shift,
                    subset: Some(subset),
                    profile,
                },
                other => other,
            });
        }
    }
    Ok(WedgeDecomposition { target, summands })
}

/// The stable splitting of `ΣZ_K`, with each summand converted where the
/// window allows.
pub fn stable_wedge(complex: &SimplicialComplex) -> Result<WedgeDecomposition> {
    wedge(complex, WedgeTarget::SuspensionOfZk)
}

/// Neighbourliness needed for the unstable splitting: `⌈dim K / 2⌉`.
pub fn unstable_requirement(complex: &SimplicialComplex) -> usize {
    complex.dimension().div_ceil(2)
}

/// The splitting of `Z_K` itself, available when `K` is
/// `⌈dim K / 2⌉`-neighbourly.
pub fn unstable_wedge(complex: &SimplicialComplex) -> Result<WedgeDecomposition> {
    let required = unstable_requirement(complex);
    let n = complex.neighbourliness();
    if !n.is_simplex && n.k < required {
        return Err(Error::NeighbourlinessHypothesisNotMet { required, actual: n.k });
    }
    wedge(complex, WedgeTarget::Zk)
}

/// Converts `Σ^shift X`, where `X` has reduced homology `profile`, into
/// spheres and Moore spaces.
///
/// Conversion needs the shifted homology in degrees `{d, d + 1}` with
/// `d >= 2` and free top degree. Otherwise a single
/// [`WedgeSummand::Unresolved`] is returned. A zero profile gives no summands.
pub fn homology_to_wedge(shift: usize, profile: &HomologyProfile) -> Vec<WedgeSummand> {
    let shifted = profile.shifted(shift);
    let (Some(low), Some(high)) = (shifted.min_degree(), shifted.max_degree()) else {
        return Vec::new();
    };
    let convertible = low >= 2 && high <= low + 1 && (high == low || shifted.torsion(high).is_empty());
    if !convertible {
        return alloc::vec![WedgeSummand::Unresolved {
            shift,
            subset: None,
            profile: profile.clone()
        }];
    }
    let mut out = Vec::new();
    out.extend((0..shifted.betti(low)).map(|_| WedgeSummand::Sphere { dim: low }));
    out.extend(shifted.torsion(low).iter().map(|t| WedgeSummand::Moore {
        dim: low + 1,
        prime: t.prime,
        exponent: t.exponent,
    }));
    if high > low {
        out.extend((0..shifted.betti(high)).map(|_| WedgeSummand::Sphere { dim: high }));
    }
    out
}
