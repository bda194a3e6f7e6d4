//! Loop spaces of wedges of spheres and Moore spaces.
//!
//! `Ω(ΣX_1 ∨ ... ∨ ΣX_l)` splits as a product of `ΩΣ(X_1^{∧b_1} ∧ ... ∧ X_l^{∧b_l})`
//! over a Hall basis of the free Lie algebra on `l` letters. Each factor is
//! either a loop space on a sphere or a block of loops on a wedge of Moore
//! spaces at a single prime. Catalogs are always truncated at an explicit
//! degree cutoff.

pub mod catalog;
pub mod hall;
pub mod series;
pub mod smash;

use alloc::format;
use core::fmt;

use crate::error::{Error, Result};
use crate::primes::is_prime;

pub use catalog::{loop_factors_of_wedge, LoopFactor, LoopFactorCatalog, TorsionBlock};
pub use hall::{hall_basis, Bracket, HallBracket};
pub use series::{poincare_series, tensor_series_oracle, PoincareSeries, Ring};
pub use smash::{smash_reduce, SmashReduction, Wedge};

/// Largest degree cutoff accepted anywhere in this module.
pub const MAX_DEGREE_CUTOFF: u32 = 64;

/// A wedge letter: a simply connected sphere or a Moore space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "snake_case"))]
pub enum SpaceAtom {
    /// `S^dim`, `dim >= 2`.
    Sphere { dim: u32 },
    /// `P^dim(prime^exponent)`, `dim >= 3`.
    Moore { dim: u32, prime: u64, exponent: u32 },
}

impl SpaceAtom {
    pub fn sphere(dim: u32) -> Result<Self> {
        let atom = SpaceAtom::Sphere { dim };
        atom.validate()?;
        Ok(atom)
    }

    pub fn moore(dim: u32, prime: u64, exponent: u32) -> Result<Self> {
        let atom = SpaceAtom::Moore { dim, prime, exponent };
        atom.validate()?;
        Ok(atom)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            SpaceAtom::Sphere { dim } if dim < 2 => Err(Error::InvalidAtom(format!("S^{dim} is not simply connected"))),
            SpaceAtom::Moore { dim, .. } if dim < 3 => {
                Err(Error::InvalidAtom(format!("Moore space of dimension {dim} is below 3")))
            }
            SpaceAtom::Moore { prime, .. } if !is_prime(prime) => Err(Error::NotPrime(prime)),
            SpaceAtom::Moore { exponent: 0, .. } => Err(Error::InvalidAtom(format!("{self} has exponent 0"))),
            _ => Ok(()),
        }
    }

    pub fn dim(&self) -> u32 {
        match *self {
            SpaceAtom::Sphere { dim } | SpaceAtom::Moore { dim, .. } => dim,
        }
    }

    pub fn prime(&self) -> Option<u64> {
        match *self {
            SpaceAtom::Sphere { .. } => None,
            SpaceAtom::Moore { prime, .. } => Some(prime),
        }
    }

    /// `P^n(2)`: the Moore spaces excluded from the smash formula.
    pub fn is_mod_two(&self) -> bool {
        matches!(
            self,
            SpaceAtom::Moore {
                prime: 2,
                exponent: 1,
                ..
            }
        )
    }

    /// Same atom with its dimension moved by `delta`; no validation.
    pub(crate) fn shifted(&self, delta: i64) -> SpaceAtom {
        let dim = (i64::from(self.dim()) + delta) as u32;
        match *self {
            SpaceAtom::Sphere { .. } => SpaceAtom::Sphere { dim },
            SpaceAtom::Moore { prime, exponent, .. } => SpaceAtom::Moore { dim, prime, exponent },
        }
    }

    /// Lowest reduced homology degree of the desuspension.
    pub fn weight(&self) -> u32 {
        match *self {
            SpaceAtom::Sphere { dim } => dim - 1,
            SpaceAtom::Moore { dim, .. } => dim - 2,
        }
    }
}

impl fmt::Display for SpaceAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SpaceAtom::Sphere { dim } => write!(f, "S^{dim}"),
            SpaceAtom::Moore {
                dim,
                prime,
                exponent: 1,
            } => write!(f, "P^{dim}({prime})"),
            SpaceAtom::Moore { dim, prime, exponent } => write!(f, "P^{dim}({prime}^{exponent})"),
        }
    }
}

fn check_cutoff(cutoff: u32) -> Result<()> {
    if cutoff > MAX_DEGREE_CUTOFF {
        return Err(Error::DegreeCutoffTooLarge {
            got: cutoff as usize,
            max: MAX_DEGREE_CUTOFF as usize,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atom_validation() {
        assert!(SpaceAtom::sphere(1).is_err());
        assert!(SpaceAtom::sphere(2).is_ok());
        assert!(SpaceAtom::moore(2, 3, 1).is_err());
        assert_eq!(SpaceAtom::moore(4, 6, 1), Err(Error::NotPrime(6)));
        assert!(SpaceAtom::moore(4, 3, 0).is_err());
        assert_eq!(SpaceAtom::moore(4, 3, 2).unwrap().to_string(), "P^4(3^2)");
    }

    #[test]
    fn weights() {
        assert_eq!(SpaceAtom::sphere(3).unwrap().weight(), 2);
        assert_eq!(SpaceAtom::moore(4, 3, 1).unwrap().weight(), 2);
    }
}
