//! Deciding which product decomposition of `ΩZ_K` is licensed.
//!
//! Every condition is checked on the members of `C_K`:
//!
//! 1. [`Rule::NeighbourlyMembers`]: each member is a simplex or
//!    `(dim K_I - 1)`-neighbourly. Then `ΩZ_K ∈ ∏(P ∪ T)`. Every complex of
//!    dimension at most 2 qualifies.
//! 2. [`Rule::TorsionFreeMembers`]: additionally every member has
//!    torsion-free homology. Then `ΩZ_K ∈ ∏P`.
//! 3. [`Rule::LocalizedGolod`]: every member passes the Golod gate. Then
//!    `ΩZ_K ∈ ∏P` away from the primes of the exclusion report.
//!
//! The verdict is the first of `ProductP`, `ProductPT`, `LocalizedProductP`
//! whose rules hold, else `Unknown`. All rules are evaluated and reported.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::complex::{SimplicialComplex, VertexSubset};
use crate::localization::{prime_exclusion_from_members, GolodStatus, PrimeExclusionReport};
use crate::loops::{loop_factors_of_wedge, LoopFactorCatalog, SpaceAtom};
use crate::members::{survey, Member};
use crate::splitting::{unstable_wedge, WedgeDecomposition, WedgeSummand};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Rule {
    NeighbourlyMembers,
    TorsionFreeMembers,
    LocalizedGolod,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::NeighbourlyMembers => "neighbourly-members",
            Rule::TorsionFreeMembers => "torsion-free-members",
            Rule::LocalizedGolod => "localized-golod",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "snake_case"))]
pub enum Verdict {
    /// `ΩZ_K` is a product of spheres and loops on spheres.
    ProductP,
    /// `ΩZ_K` is a product of spaces from `P` and `T`.
    ProductPT,
    /// `ΩZ_K ∈ ∏P` after inverting the excluded primes.
    LocalizedProductP {
        report: PrimeExclusionReport,
    },
    Unknown,
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::ProductP => "ProductP",
            Verdict::ProductPT => "ProductPT",
            Verdict::LocalizedProductP { .. } => "LocalizedProductP",
            Verdict::Unknown => "Unknown",
        }
    }
}

/// A hypothesis that failed for one member.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Reason {
    pub subset: VertexSubset,
    pub rule: Rule,
    pub detail: String,
}

/// Invariants of one member as reported by the classifier.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MemberSummary {
    pub subset: VertexSubset,
    pub dimension: usize,
    pub neighbourliness: usize,
    pub is_simplex: bool,
    pub torsion_free: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Classification {
    pub verdict: Verdict,
    /// Rules whose hypotheses hold, in rule order.
    pub fired: Vec<Rule>,
    pub reasons: Vec<Reason>,
    pub members: Vec<MemberSummary>,
    pub exclusion: PrimeExclusionReport,
}

fn neighbourly_enough(m: &Member) -> bool {
    m.is_simplex() || m.neighbourliness.k + 1 >= m.dimension
}

pub fn classify(complex: &SimplicialComplex) -> Classification {
    classify_with_assertions(complex, &BTreeSet::new())
}

/// As [`classify`], with user-asserted rational Golodness for the listed
/// members.
pub fn classify_with_assertions(complex: &SimplicialComplex, asserted: &BTreeSet<VertexSubset>) -> Classification {
    let members = survey(complex);
    let exclusion = prime_exclusion_from_members(&members, asserted);
    let mut reasons = Vec::new();

    for m in &members {
        if !neighbourly_enough(m) {
            reasons.push(Reason {
                subset: m.subset,
                rule: Rule::NeighbourlyMembers,
                detail: format!(
                    "{}-neighbourly of dimension {}; needs {}",
                    m.neighbourliness.k,
                    m.dimension,
                    m.dimension - 1
                ),
            });
        }
        if !m.homology.is_torsion_free() {
            let primes: Vec<String> = m.homology.torsion_primes().iter().map(|p| format!("{p}")).collect();
            reasons.push(Reason {
                subset: m.subset,
                rule: Rule::TorsionFreeMembers,
                detail: format!("homology has {}-torsion", primes.join(",")),
            });
        }
        if exclusion.golod_status.get(&m.subset) == Some(&GolodStatus::Unknown) {
            reasons.push(Reason {
                subset: m.subset,
                rule: Rule::LocalizedGolod,
                detail: format!(
                    "{}-neighbourly of dimension {}; rational Golodness not established",
                    m.neighbourliness.k, m.dimension
                ),
            });
        }
    }

    let neighbourly = members.iter().all(neighbourly_enough);
    let torsion_free = members.iter().all(|m| m.homology.is_torsion_free());
    let mut fired = Vec::new();
    if neighbourly {
        fired.push(Rule::NeighbourlyMembers);
        if torsion_free {
            fired.push(Rule::TorsionFreeMembers);
        }
    }
    if exclusion.verdict_ok {
        fired.push(Rule::LocalizedGolod);
    }

    let verdict = if neighbourly && torsion_free {
        Verdict::ProductP
    } else if neighbourly {
        Verdict::ProductPT
    } else if exclusion.verdict_ok {
        Verdict::LocalizedProductP {
            report: exclusion.clone(),
        }
    } else {
        Verdict::Unknown
    };

    Classification {
        verdict,
        fired,
        reasons,
        members: members
            .iter()
            .map(|m| MemberSummary {
                subset: m.subset,
                dimension: m.dimension,
                neighbourliness: m.neighbourliness.k,
                is_simplex: m.is_simplex(),
                torsion_free: m.homology.is_torsion_free(),
            })
            .collect(),
        exclusion,
    }
}

/// Loop factors of one complex through its unstable wedge.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "snake_case"))]
pub enum WedgeCatalog {
    /// Every summand converted; the catalog of `Ω` of the wedge.
    Converted {
        wedge: WedgeDecomposition,
        catalog: LoopFactorCatalog,
    },
    /// Some summands stayed unresolved, so no catalog is produced.
    Unresolved { wedge: WedgeDecomposition },
    /// The unstable splitting does not apply.
    NoSplitting { required: usize, actual: usize },
}

impl WedgeCatalog {
    pub fn catalog(&self) -> Option<&LoopFactorCatalog> {
        match self {
            WedgeCatalog::Converted { catalog, .. } => Some(catalog),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "snake_case"))]
pub enum LoopCatalog {
    /// `ΩZ_K` from the wedge decomposition of `Z_K`.
    Global {
        wedge: WedgeDecomposition,
        catalog: LoopFactorCatalog,
    },
    /// `K` itself does not convert; the result for each member of `C_K`.
    PerSubcomplex { members: Vec<(VertexSubset, WedgeCatalog)> },
}

fn wedge_catalog(complex: &SimplicialComplex, cutoff: u32) -> crate::Result<WedgeCatalog> {
    let wedge = match unstable_wedge(complex) {
        Ok(w) => w,
        Err(crate::Error::NeighbourlinessHypothesisNotMet { required, actual }) => {
            return Ok(WedgeCatalog::NoSplitting { required, actual })
        }
        Err(e) => return Err(e),
    };
    if !wedge.is_fully_resolved() {
        return Ok(WedgeCatalog::Unresolved { wedge });
    }
    let atoms: Vec<SpaceAtom> = wedge
        .summands
        .iter()
        .map(|s| match *s {
            WedgeSummand::Sphere { dim } => SpaceAtom::sphere(dim as u32),
            WedgeSummand::Moore { dim, prime, exponent } => SpaceAtom::moore(dim as u32, prime, exponent),
            WedgeSummand::Unresolved { .. } => unreachable!("checked above"),
        })
        .collect::<crate::Result<_>>()?;
    let catalog = if atoms.is_empty() {
        LoopFactorCatalog::empty(cutoff)
    } else {
        loop_factors_of_wedge(&atoms, cutoff)?
    };
    Ok(WedgeCatalog::Converted { wedge, catalog })
}

/// Loop factors of `ΩZ_K` up to `cutoff`, globally when `Z_K` splits as a
/// converted wedge and per member of `C_K` otherwise.
pub fn loop_catalog(complex: &SimplicialComplex, cutoff: u32) -> crate::Result<LoopCatalog> {
    if let WedgeCatalog::Converted { wedge, catalog } = wedge_catalog(complex, cutoff)? {
        return Ok(LoopCatalog::Global { wedge, catalog });
    }
    let mut members = Vec::new();
    for subset in complex.enumerate_ck() {
        let sub = complex.full_subcomplex(subset)?;
        members.push((subset, wedge_catalog(&sub.complex, cutoff)?));
    }
    Ok(LoopCatalog::PerSubcomplex { members })
}
