//! Rewriting smash products of spheres and Moore spaces as wedges.
//!
//! `S^a ∧ S^b = S^{a+b}` and `S^a ∧ P^n(p^r) = P^{n+a}(p^r)`. For Moore
//! spaces at different primes the smash is contractible; at one prime with
//! `max(p^r, p^s) > 2` it is `P^{n+m}(p^t) ∨ P^{n+m-1}(p^t)` with
//! `t = min(r, s)`. A word with two or more copies of `P^n(2)`-type letters
//! has no such formula and is kept whole.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use super::SpaceAtom;
use crate::error::{Error, Result};

/// A finite wedge, stored as a multiset of atoms in canonical order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Wedge {
    terms: Vec<(SpaceAtom, u64)>,
}

impl Wedge {
    pub fn from_counts(counts: BTreeMap<SpaceAtom, u64>) -> Self {
        Wedge {
            terms: counts.into_iter().filter(|&(_, n)| n > 0).collect(),
        }
    }

    pub fn from_atoms(atoms: impl IntoIterator<Item = SpaceAtom>) -> Self {
        let mut counts = BTreeMap::new();
        for a in atoms {
            *counts.entry(a).or_insert(0u64) += 1;
        }
        Wedge::from_counts(counts)
    }

    /// `(atom, multiplicity)` pairs in increasing atom order.
    pub fn terms(&self) -> &[(SpaceAtom, u64)] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of wedge summands counted with multiplicity.
    pub fn len(&self) -> u64 {
        self.terms.iter().map(|&(_, n)| n).sum()
    }

    pub fn multiplicity(&self, atom: &SpaceAtom) -> u64 {
        self.terms.iter().find(|(a, _)| a == atom).map_or(0, |&(_, n)| n)
    }

    /// Every summand suspended `delta` times.
    pub(crate) fn shifted(&self, delta: i64) -> Wedge {
        Wedge {
            terms: self.terms.iter().map(|&(a, n)| (a.shifted(delta), n)).collect(),
        }
    }
}

impl fmt::Display for Wedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("*");
        }
        for (i, (atom, n)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" ∨ ")?;
            }
            if *n > 1 {
                write!(f, "{n}×")?;
            }
            write!(f, "{atom}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", content = "value", rename_all = "snake_case"))]
pub enum SmashReduction {
    WedgeOfAtoms(Wedge),
    Contractible,
    /// The word, sorted, left unreduced.
    Mod2Symbolic(Vec<SpaceAtom>),
}

pub fn smash_reduce(word: &[SpaceAtom]) -> Result<SmashReduction> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    for atom in word {
        atom.validate()?;
    }
    Ok(reduce_unchecked(word))
}

/// Smash reduction without the dimension bounds, so that desuspended
/// letters such as `S^1` and `P^2(p^r)` can be reduced.
pub(crate) fn reduce_unchecked(word: &[SpaceAtom]) -> SmashReduction {
    let primes: BTreeSet<u64> = word.iter().filter_map(SpaceAtom::prime).collect();
    if primes.len() > 1 {
        return SmashReduction::Contractible;
    }
    if word.iter().filter(|a| a.is_mod_two()).count() >= 2 {
        let mut sorted = word.to_vec();
        sorted.sort();
        return SmashReduction::Mod2Symbolic(sorted);
    }
    let mut current: BTreeMap<SpaceAtom, u64> = BTreeMap::new();
    current.insert(word[0], 1);
    for &letter in &word[1..] {
        let mut next: BTreeMap<SpaceAtom, u64> = BTreeMap::new();
        for (&term, &count) in &current {
            for piece in smash_pair(term, letter) {
                let slot = next.entry(piece).or_insert(0);
                *slot = slot.checked_add(count).expect("wedge multiplicity fits in 64 bits");
            }
        }
        current = next;
    }
    SmashReduction::WedgeOfAtoms(Wedge::from_counts(current))
}

/// Smash of two atoms at a common prime (or spheres), at most two summands.
fn smash_pair(x: SpaceAtom, y: SpaceAtom) -> Vec<SpaceAtom> {
    use SpaceAtom::*;
    match (x, y) {
        (Sphere { dim: a }, Sphere { dim: b }) => alloc::vec![Sphere { dim: a + b }],
        (Sphere { dim: a }, m @ Moore { .. }) | (m @ Moore { .. }, Sphere { dim: a }) => {
            alloc::vec![m.shifted(i64::from(a))]
        }
        (
            Moore {
                dim: n,
                prime,
                exponent: r,
            },
            Moore {
                dim: m, exponent: s, ..
            },
        ) => {
            debug_assert!(!(prime == 2 && r == 1 && s == 1));
            let exponent = r.min(s);
            alloc::vec![
                Moore {
                    dim: n + m,
                    prime,
                    exponent
                },
                Moore {
                    dim: n + m - 1,
                    prime,
                    exponent
                },
            ]
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

    #[test]
    fn smash_examples() {
        assert_eq!(
            smash_reduce(&[p(4, 3, 1), p(5, 3, 2)]).unwrap(),
            SmashReduction::WedgeOfAtoms(Wedge::from_atoms([p(9, 3, 1), p(8, 3, 1)]))
        );
        assert_eq!(
            smash_reduce(&[p(4, 2, 1), p(5, 3, 1)]).unwrap(),
            SmashReduction::Contractible
        );
        assert_eq!(
            smash_reduce(&[s(3), p(4, 5, 1)]).unwrap(),
            SmashReduction::WedgeOfAtoms(Wedge::from_atoms([p(7, 5, 1)]))
        );
        assert_eq!(
            smash_reduce(&[s(2), s(3), s(4)]).unwrap(),
            SmashReduction::WedgeOfAtoms(Wedge::from_atoms([s(9)]))
        );
    }

    #[test]
    fn mod_two_words() {
        assert_eq!(
            smash_reduce(&[p(5, 2, 1), p(3, 2, 1)]).unwrap(),
            SmashReduction::Mod2Symbolic(alloc::vec![p(3, 2, 1), p(5, 2, 1)])
        );
        assert_eq!(
            smash_reduce(&[p(3, 2, 1), p(4, 2, 2)]).unwrap(),
            SmashReduction::WedgeOfAtoms(Wedge::from_atoms([p(7, 2, 1), p(6, 2, 1)]))
        );
        // Cross-prime annihilation wins over the mod 2 obstruction.
        assert_eq!(
            smash_reduce(&[p(3, 2, 1), p(3, 2, 1), p(3, 3, 1)]).unwrap(),
            SmashReduction::Contractible
        );
    }

    #[test]
    fn three_letter_multiplicities() {
        let SmashReduction::WedgeOfAtoms(w) = smash_reduce(&[p(3, 3, 1), p(3, 3, 1), p(3, 3, 1)]).unwrap() else {
            panic!("expected a wedge");
        };
        assert_eq!(w.len(), 4);
        assert_eq!(w.multiplicity(&p(8, 3, 1)), 2);
        assert_eq!(w.multiplicity(&p(9, 3, 1)), 1);
        assert_eq!(w.multiplicity(&p(7, 3, 1)), 1);
    }

    #[test]
    fn rejects_bad_words() {
        assert_eq!(smash_reduce(&[]), Err(Error::EmptyWord));
        assert!(smash_reduce(&[SpaceAtom::Sphere { dim: 1 }]).is_err());
    }

    #[test]
    fn wedge_display() {
        let w = Wedge::from_atoms([p(9, 3, 1), p(8, 3, 1), p(8, 3, 1)]);
        assert_eq!(w.to_string(), "P^9(3) ∨ 2×P^8(3)");
    }
}
