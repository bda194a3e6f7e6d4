//! Hilton–Milnor factor catalogs.
//!
//! Identical letters are grouped into types. A Hall basis element is only
//! needed through its letter content, and the number of elements with a
//! given type content is a Witt count, so the catalog is assembled from
//! counts instead of from explicit brackets.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use super::hall::witt_count;
use super::smash::{reduce_unchecked, SmashReduction, Wedge};
use super::{check_cutoff, SpaceAtom};
use crate::error::{Error, Result};

/// Upper bound on the number of type contents visited.
pub const CONTENT_LIMIT: usize = 1 << 22;

/// A block `ΩΣY` reported whole.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "snake_case"))]
pub enum TorsionBlock {
    /// Loops on this wedge of Moore spaces, all at one prime.
    Wedge { wedge: Wedge },
    /// `ΩΣ(X_1 ∧ ... ∧ X_k)` where the `X_i` are the desuspensions of
    /// `letters`; at least two are `P^n(2)`, so the smash is not rewritten.
    Mod2Smash { letters: Vec<SpaceAtom> },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "snake_case"))]
pub enum LoopFactor {
    /// `ΩS^dim`.
    OmegaSphere {
        dim: u32,
    },
    TorsionBlock {
        prime: u64,
        block: TorsionBlock,
    },
}

impl LoopFactor {
    /// Lowest positive degree of the factor's homology.
    pub fn bottom_degree(&self) -> u32 {
        match self {
            LoopFactor::OmegaSphere { dim } => dim - 1,
            LoopFactor::TorsionBlock {
                block: TorsionBlock::Wedge { wedge },
                ..
            } => wedge.terms().iter().map(|(a, _)| a.weight()).min().unwrap_or(0),
            LoopFactor::TorsionBlock {
                block: TorsionBlock::Mod2Smash { letters },
                ..
            } => letters.iter().map(SpaceAtom::weight).sum(),
        }
    }
}

impl fmt::Display for LoopFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoopFactor::OmegaSphere { dim } => write!(f, "ΩS^{dim}"),
            LoopFactor::TorsionBlock {
                block: TorsionBlock::Wedge { wedge },
                ..
            } => {
                if wedge.len() == 1 {
                    write!(f, "Ω{wedge}")
                } else {
                    write!(f, "Ω({wedge})")
                }
            }
            LoopFactor::TorsionBlock {
                block: TorsionBlock::Mod2Smash { letters },
                ..
            } => {
                f.write_str("ΩΣ(")?;
                for (i, a) in letters.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ∧ ")?;
                    }
                    write!(f, "Σ^-1 {a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// Multiset of loop factors with bottom degree at most `cutoff`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LoopFactorCatalog {
    cutoff: u32,
    #[cfg_attr(feature = "serde", serde(with = "crate::serde_util::factor_counts"))]
    entries: Vec<(LoopFactor, BigUint)>,
}

impl LoopFactorCatalog {
    pub fn empty(cutoff: u32) -> Self {
        LoopFactorCatalog {
            cutoff,
            entries: Vec::new(),
        }
    }

    fn from_counts(cutoff: u32, counts: BTreeMap<(u32, LoopFactor), BigUint>) -> Self {
        let entries = counts.into_iter().map(|((_, f), n)| (f, n)).collect();
        LoopFactorCatalog { cutoff, entries }
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    /// Factors with multiplicities, by bottom degree and then canonically.
    pub fn entries(&self) -> &[(LoopFactor, BigUint)] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn multiplicity(&self, factor: &LoopFactor) -> BigUint {
        self.entries
            .iter()
            .find(|(f, _)| f == factor)
            .map_or_else(BigUint::zero, |(_, n)| n.clone())
    }

    /// Torsion primes among the blocks.
    pub fn primes(&self) -> Vec<u64> {
        let mut out: Vec<u64> = self
            .entries
            .iter()
            .filter_map(|(f, _)| match f {
                LoopFactor::TorsionBlock { prime, .. } => Some(*prime),
                LoopFactor::OmegaSphere { .. } => None,
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// The same catalog cut down to a smaller cutoff.
    pub fn truncated(&self, cutoff: u32) -> Self {
        let cutoff = cutoff.min(self.cutoff);
        LoopFactorCatalog {
            cutoff,
            entries: self
                .entries
                .iter()
                .filter(|(f, _)| f.bottom_degree() <= cutoff)
                .cloned()
                .collect(),
        }
    }
}

/// The Hilton–Milnor factors of `Ω(A_1 ∨ ... ∨ A_l)` whose bottom degree is
/// at most `cutoff`.
pub fn loop_factors_of_wedge(atoms: &[SpaceAtom], cutoff: u32) -> Result<LoopFactorCatalog> {
    if atoms.is_empty() {
        return Err(Error::EmptyWedge);
    }
    for a in atoms {
        a.validate()?;
    }
    check_cutoff(cutoff)?;

    let mut grouped: BTreeMap<SpaceAtom, u64> = BTreeMap::new();
    for &a in atoms {
        *grouped.entry(a).or_insert(0) += 1;
    }
    let types: Vec<(SpaceAtom, u64)> = grouped.into_iter().collect();
    let kinds: Vec<u64> = types.iter().map(|&(_, k)| k).collect();
    let weights: Vec<u32> = types.iter().map(|(a, _)| a.weight()).collect();

    let mut counts: BTreeMap<(u32, LoopFactor), BigUint> = BTreeMap::new();
    let mut content = vec![0u32; types.len()];
    let mut visited = 0usize;
    let mut stack_error = None;
    visit(&weights, cutoff, 0, 0, &mut content, &mut |content, degree| {
        visited += 1;
        if visited > CONTENT_LIMIT {
            stack_error = Some(Error::EnumerationTooLarge { limit: CONTENT_LIMIT });
            return false;
        }
        let n = witt_count(content, &kinds);
        if n.is_zero() {
            return true;
        }
        if let Some(factor) = factor_for(&types, content) {
            debug_assert_eq!(factor.bottom_degree(), degree);
            *counts.entry((degree, factor)).or_insert_with(BigUint::zero) += n;
        }
        true
    });
    if let Some(e) = stack_error {
        return Err(e);
    }
    Ok(LoopFactorCatalog::from_counts(cutoff, counts))
}

/// Calls `f` on every nonzero content vector with `Σ c_t w_t <= cutoff`.
/// Returns `false` once `f` asks to stop.
fn visit(
    weights: &[u32],
    cutoff: u32,
    i: usize,
    degree: u32,
    content: &mut Vec<u32>,
    f: &mut impl FnMut(&[u32], u32) -> bool,
) -> bool {
    if i == weights.len() {
        return degree == 0 || f(content, degree);
    }
    let mut c = 0;
    loop {
        content[i] = c;
        if !visit(weights, cutoff, i + 1, degree + c * weights[i], content, f) {
            return false;
        }
        c += 1;
        if degree + c * weights[i] > cutoff {
            break;
        }
    }
    content[i] = 0;
    true
}

/// `ΩΣ` of the smash of the desuspended letters, or `None` if contractible.
fn factor_for(types: &[(SpaceAtom, u64)], content: &[u32]) -> Option<LoopFactor> {
    let mut word = Vec::new();
    for ((atom, _), &c) in types.iter().zip(content) {
        word.extend(core::iter::repeat(*atom).take(c as usize));
    }
    if word.iter().all(|a| a.prime().is_none()) {
        let dim = 1 + word.iter().map(|a| a.dim() - 1).sum::<u32>();
        return Some(LoopFactor::OmegaSphere { dim });
    }
    let desuspended: Vec<SpaceAtom> = word.iter().map(|a| a.shifted(-1)).collect();
    match reduce_unchecked(&desuspended) {
        SmashReduction::Contractible => None,
        SmashReduction::WedgeOfAtoms(w) => {
            let wedge = w.shifted(1);
            let prime = wedge.terms()[0].0.prime().expect("a Moore letter survives");
            Some(LoopFactor::TorsionBlock {
                prime,
                block: TorsionBlock::Wedge { wedge },
            })
        }
        SmashReduction::Mod2Symbolic(_) => {
            word.sort();
            Some(LoopFactor::TorsionBlock {
                prime: 2,
                block: TorsionBlock::Mod2Smash { letters: word },
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: u32) -> SpaceAtom {
        SpaceAtom::sphere(n).unwrap()
    }

    fn p(n: u32, prime: u64, r: u32) -> SpaceAtom {
        SpaceAtom::moore(n, prime, r).unwrap()
    }

    fn omega(dim: u32) -> LoopFactor {
        LoopFactor::OmegaSphere { dim }
    }

    fn block(atoms: &[SpaceAtom]) -> LoopFactor {
        let wedge = Wedge::from_atoms(atoms.iter().copied());
        LoopFactor::TorsionBlock {
            prime: atoms[0].prime().unwrap(),
            block: TorsionBlock::Wedge { wedge },
        }
    }

    #[test]
    fn single_sphere() {
        let c = loop_factors_of_wedge(&[s(2)], 10).unwrap();
        assert_eq!(c.entries(), &[(omega(2), BigUint::from(1u32))]);
    }

    #[test]
    fn two_spheres_follow_fibonacci_counts() {
        let c = loop_factors_of_wedge(&[s(2), s(3)], 5).unwrap();
        let got: Vec<(u32, u32)> = c
            .entries()
            .iter()
            .map(|(f, n)| match f {
                LoopFactor::OmegaSphere { dim } => (*dim, u32::try_from(n).unwrap()),
                _ => panic!("unexpected block"),
            })
            .collect();
        assert_eq!(got, vec![(2, 1), (3, 1), (4, 1), (5, 1), (6, 2)]);
    }

    #[test]
    fn moore_and_sphere() {
        let c = loop_factors_of_wedge(&[p(4, 3, 1), s(3)], 6).unwrap();
        assert_eq!(c.multiplicity(&omega(3)), BigUint::from(1u32));
        assert_eq!(c.multiplicity(&block(&[p(4, 3, 1)])), BigUint::from(1u32));
        // [P^4(3), S^3]: ΩΣ(P^3(3) ∧ S^2) = ΩP^6(3).
        assert_eq!(c.multiplicity(&block(&[p(6, 3, 1)])), BigUint::from(1u32));
        // [[P^4(3), S^3], P^4(3)] has content (2, 1):
        // ΩΣ(P^3(3) ∧ P^3(3) ∧ S^2) = Ω(P^9(3) ∨ P^8(3)).
        assert_eq!(c.multiplicity(&block(&[p(9, 3, 1), p(8, 3, 1)])), BigUint::from(1u32));
        // Content (2, 0) vanishes: no self-bracket.
        assert_eq!(c.multiplicity(&block(&[p(7, 3, 1), p(6, 3, 1)])), BigUint::zero());
    }

    #[test]
    fn cross_prime_brackets_vanish() {
        let c = loop_factors_of_wedge(&[p(3, 2, 2), p(3, 3, 1)], 8).unwrap();
        for (f, _) in c.entries() {
            if let LoopFactor::TorsionBlock {
                block: TorsionBlock::Wedge { wedge },
                ..
            } = f
            {
                let primes: Vec<_> = wedge.terms().iter().filter_map(|(a, _)| a.prime()).collect();
                assert!(primes.windows(2).all(|w| w[0] == w[1]));
            }
        }
        assert_eq!(c.primes(), vec![2, 3]);
    }

    #[test]
    fn mod_two_blocks_stay_whole() {
        let c = loop_factors_of_wedge(&[p(3, 2, 1), p(4, 2, 1)], 3).unwrap();
        let sym = LoopFactor::TorsionBlock {
            prime: 2,
            block: TorsionBlock::Mod2Smash {
                letters: vec![p(3, 2, 1), p(4, 2, 1)],
            },
        };
        assert_eq!(c.multiplicity(&sym), BigUint::from(1u32));
        assert_eq!(sym.bottom_degree(), 3);
    }

    #[test]
    fn grouped_letters() {
        let mut atoms = vec![s(3); 10];
        atoms.extend(vec![s(4); 20]);
        let c = loop_factors_of_wedge(&atoms, 4).unwrap();
        assert_eq!(c.multiplicity(&omega(3)), BigUint::from(10u32));
        assert_eq!(c.multiplicity(&omega(4)), BigUint::from(20u32));
        assert_eq!(c.multiplicity(&omega(5)), BigUint::from(45u32));
    }

    #[test]
    fn truncation_is_stable() {
        let atoms = [s(2), s(3), p(4, 3, 1)];
        let big = loop_factors_of_wedge(&atoms, 12).unwrap();
        for n in 1..12 {
            assert_eq!(big.truncated(n), loop_factors_of_wedge(&atoms, n).unwrap());
        }
    }
}
