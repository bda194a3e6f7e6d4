//! Poincaré series of loop spaces, truncated at a fixed degree.
//!
//! A catalog's series is the product of its factors' series. The oracle uses
//! instead that `H_*(ΩΣX)` is the tensor algebra on `H̃_*(X)`, so for a wedge
//! of suspensions the series is `1 / (1 - g)` with `g` the reduced series of
//! the desuspended wedge.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::catalog::{LoopFactor, LoopFactorCatalog, TorsionBlock};
use super::{check_cutoff, SpaceAtom};
use crate::error::{Error, Result};
use crate::primes::is_prime;

/// Coefficient ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Ring {
    Rational,
    /// `F_p`.
    Prime(u64),
}

impl Ring {
    pub fn validate(self) -> Result<()> {
        match self {
            Ring::Prime(p) if !is_prime(p) => Err(Error::NotPrime(p)),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Rational => f.write_str("Q"),
            Ring::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PoincareSeries {
    pub ring: Ring,
    /// `c_0 ..= c_cutoff`.
    #[cfg_attr(feature = "serde", serde(with = "crate::serde_util::biguint_vec"))]
    pub coefficients: Vec<BigUint>,
    pub cutoff: u32,
}

impl PoincareSeries {
    pub fn coefficient(&self, degree: u32) -> &BigUint {
        &self.coefficients[degree as usize]
    }
}

impl fmt::Display for PoincareSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (d, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => f.write_str("t")?,
                (1, false) => write!(f, "{c}t")?,
                (_, true) => write!(f, "t^{d}")?,
                (_, false) => write!(f, "{c}t^{d}")?,
            }
        }
        write!(f, " + O(t^{})", self.cutoff + 1)
    }
}

/// Truncated power series arithmetic on coefficient vectors of equal length.
fn one(len: usize) -> Vec<BigUint> {
    let mut s = vec![BigUint::zero(); len];
    s[0] = BigUint::one();
    s
}

fn mul(a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
    let n = a.len();
    let mut out = vec![BigUint::zero(); n];
    for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, y) in b[..n - i].iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// `1 / (1 - g)` for `g` without constant term.
fn geometric(g: &[BigUint]) -> Vec<BigUint> {
    debug_assert!(g[0].is_zero());
    let n = g.len();
    let mut s = one(n);
    for k in 1..n {
        let mut acc = BigUint::zero();
        for j in 1..=k {
            if !g[j].is_zero() {
                acc += &g[j] * &s[k - j];
            }
        }
        s[k] = acc;
    }
    s
}

/// `f^m` for `f` with constant term 1, by the recurrence
/// `n h_n = Σ_{k=1}^{n} ((m+1)k - n) f_k h_{n-k}`.
fn power(f: &[BigUint], m: &BigUint) -> Vec<BigUint> {
    debug_assert!(f[0].is_one());
    let n = f.len();
    let m = BigInt::from(m.clone());
    let f: Vec<BigInt> = f.iter().map(|x| BigInt::from(x.clone())).collect();
    let mut h = vec![BigInt::zero(); n];
    h[0] = BigInt::one();
    for i in 1..n {
        let mut acc = BigInt::zero();
        for k in 1..=i {
            if f[k].is_zero() {
                continue;
            }
            let factor = (&m + 1u32) * k - i;
            acc += factor * &f[k] * &h[i - k];
        }
        h[i] = acc / i;
    }
    h.into_iter()
        .map(|x| x.to_biguint().expect("power of a positive series"))
        .collect()
}

/// Degrees of the reduced classes of the desuspension of `atom`, or `None`
/// when the atom carries torsion prime to the field.
fn desuspended_classes(atom: &SpaceAtom, ring: Ring) -> Option<Vec<u32>> {
    match (*atom, ring) {
        (SpaceAtom::Sphere { dim }, _) => Some(vec![dim - 1]),
        (SpaceAtom::Moore { .. }, Ring::Rational) => Some(Vec::new()),
        (SpaceAtom::Moore { dim, prime, .. }, Ring::Prime(p)) if prime == p => Some(vec![dim - 2, dim - 1]),
        (SpaceAtom::Moore { .. }, Ring::Prime(_)) => None,
    }
}

fn incompatible(ring: Ring, found: u64) -> Error {
    match ring {
        Ring::Prime(field) => Error::IncompatibleField { field, found },
        Ring::Rational => unreachable!("rational coefficients accept every prime"),
    }
}

fn add_classes(g: &mut [BigUint], classes: &[u32], times: &BigUint) {
    for &d in classes {
        if let Some(slot) = g.get_mut(d as usize) {
            *slot += times;
        }
    }
}

/// Reduced series `g` with `ΩΣX` having series `1 / (1 - g)`, for the block
/// `X` of a catalog factor.
fn factor_generator(factor: &LoopFactor, ring: Ring, len: usize) -> Result<Vec<BigUint>> {
    let mut g = vec![BigUint::zero(); len];
    match factor {
        LoopFactor::OmegaSphere { dim } => add_classes(&mut g, &[dim - 1], &BigUint::one()),
        LoopFactor::TorsionBlock { prime, block } => {
            if let Ring::Prime(p) = ring {
                if p != *prime {
                    return Err(incompatible(ring, *prime));
                }
            }
            match block {
                TorsionBlock::Wedge { wedge } => {
                    for (atom, n) in wedge.terms() {
                        let classes = desuspended_classes(atom, ring).expect("prime checked above");
                        add_classes(&mut g, &classes, &BigUint::from(*n));
                    }
                }
                TorsionBlock::Mod2Smash { letters } => {
                    // Künneth: the smash has the product series.
                    let mut prod = one(len);
                    for atom in letters {
                        let mut h = vec![BigUint::zero(); len];
                        let classes = desuspended_classes(atom, ring).expect("prime checked above");
                        add_classes(&mut h, &classes, &BigUint::one());
                        prod = mul(&prod, &h);
                    }
                    g = prod;
                }
            }
        }
    }
    Ok(g)
}

/// Series of the product of the catalog's factors.
pub fn poincare_series(catalog: &LoopFactorCatalog, ring: Ring, cutoff: u32) -> Result<PoincareSeries> {
    ring.validate()?;
    check_cutoff(cutoff)?;
    if cutoff > catalog.cutoff() {
        return Err(Error::DegreeCutoffTooLarge {
            got: cutoff as usize,
            max: catalog.cutoff() as usize,
        });
    }
    let len = cutoff as usize + 1;
    let mut series = one(len);
    for (factor, n) in catalog.entries() {
        let g = factor_generator(factor, ring, len)?;
        if g.iter().all(Zero::is_zero) {
            continue;
        }
        series = mul(&series, &power(&geometric(&g), n));
    }
    Ok(PoincareSeries {
        ring,
        coefficients: series,
        cutoff,
    })
}

/// `1 / (1 - g)` where `g` is the reduced series of the desuspended wedge.
pub fn tensor_series_oracle(atoms: &[SpaceAtom], ring: Ring, cutoff: u32) -> Result<PoincareSeries> {
    ring.validate()?;
    check_cutoff(cutoff)?;
    let len = cutoff as usize + 1;
    let mut g = vec![BigUint::zero(); len];
    for atom in atoms {
        atom.validate()?;
        let classes = desuspended_classes(atom, ring)
            .ok_or_else(|| incompatible(ring, atom.prime().expect("spheres are compatible")))?;
        add_classes(&mut g, &classes, &BigUint::one());
    }
    Ok(PoincareSeries {
        ring,
        coefficients: geometric(&g),
        cutoff,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loops::catalog::loop_factors_of_wedge;
    use crate::loops::smash::Wedge;

    fn s(n: u32) -> SpaceAtom {
        SpaceAtom::sphere(n).unwrap()
    }

    fn p(n: u32, prime: u64, r: u32) -> SpaceAtom {
        SpaceAtom::moore(n, prime, r).unwrap()
    }

    fn coeffs(series: &PoincareSeries) -> Vec<u64> {
        series.coefficients.iter().map(|c| u64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn single_loop_sphere() {
        let c = loop_factors_of_wedge(&[s(3)], 6).unwrap();
        let q = poincare_series(&c, Ring::Rational, 6).unwrap();
        assert_eq!(coeffs(&q), vec![1, 0, 1, 0, 1, 0, 1]);
        assert_eq!(q.to_string(), "1 + t^2 + t^4 + t^6 + O(t^7)");
    }

    #[test]
    fn fibonacci() {
        let c = loop_factors_of_wedge(&[s(2), s(3)], 5).unwrap();
        let q = poincare_series(&c, Ring::Rational, 5).unwrap();
        assert_eq!(coeffs(&q), vec![1, 1, 2, 3, 5, 8]);
        assert_eq!(q, tensor_series_oracle(&[s(2), s(3)], Ring::Rational, 5).unwrap());
    }

    #[test]
    fn moore_block_over_f3() {
        let wedge = Wedge::from_atoms([p(4, 3, 1)]);
        let block = LoopFactor::TorsionBlock {
            prime: 3,
            block: TorsionBlock::Wedge { wedge },
        };
        let g = factor_generator(&block, Ring::Prime(3), 5).unwrap();
        assert_eq!(
            coeffs(&PoincareSeries {
                ring: Ring::Prime(3),
                coefficients: geometric(&g),
                cutoff: 4
            }),
            vec![1, 0, 1, 1, 1]
        );
        let oracle = tensor_series_oracle(&[p(4, 3, 1)], Ring::Prime(3), 4).unwrap();
        assert_eq!(coeffs(&oracle), vec![1, 0, 1, 1, 1]);
    }

    #[test]
    fn oracle_examples() {
        let q = tensor_series_oracle(&[s(5)], Ring::Rational, 8).unwrap();
        assert_eq!(coeffs(&q), vec![1, 0, 0, 0, 1, 0, 0, 0, 1]);
        let moore_q = tensor_series_oracle(&[p(4, 3, 1)], Ring::Rational, 4).unwrap();
        assert_eq!(coeffs(&moore_q), vec![1, 0, 0, 0, 0]);
        assert_eq!(
            tensor_series_oracle(&[p(4, 3, 1)], Ring::Prime(2), 4),
            Err(Error::IncompatibleField { field: 2, found: 3 })
        );
        assert_eq!(
            tensor_series_oracle(&[s(2)], Ring::Prime(4), 4),
            Err(Error::NotPrime(4))
        );
    }

    #[test]
    fn catalog_matches_oracle_with_torsion() {
        for (atoms, prime) in [
            (vec![p(4, 3, 1), s(3)], 3),
            (vec![p(3, 2, 1), p(4, 2, 1), s(2)], 2),
            (vec![p(3, 5, 2), p(5, 5, 1), p(3, 5, 1)], 5),
        ] {
            let c = loop_factors_of_wedge(&atoms, 12).unwrap();
            for ring in [Ring::Rational, Ring::Prime(prime)] {
                assert_eq!(
                    poincare_series(&c, ring, 12).unwrap(),
                    tensor_series_oracle(&atoms, ring, 12).unwrap(),
                    "{atoms:?} over {ring}"
                );
            }
        }
    }

    #[test]
    fn mixed_primes_are_rejected_over_a_field() {
        let c = loop_factors_of_wedge(&[p(3, 2, 2), p(3, 3, 1)], 4).unwrap();
        assert!(matches!(
            poincare_series(&c, Ring::Prime(2), 4),
            Err(Error::IncompatibleField { .. })
        ));
        assert!(poincare_series(&c, Ring::Rational, 4).is_ok());
    }

    #[test]
    fn cutoff_beyond_catalog_is_rejected() {
        let c = loop_factors_of_wedge(&[s(2)], 4).unwrap();
        assert!(poincare_series(&c, Ring::Rational, 5).is_err());
    }

    #[test]
    fn power_recurrence() {
        let f = geometric(&[BigUint::zero(), BigUint::one(), BigUint::zero(), BigUint::zero()]);
        let cube = power(&f, &BigUint::from(3u32));
        let direct = mul(&mul(&f, &f), &f);
        assert_eq!(cube, direct);
    }
}
