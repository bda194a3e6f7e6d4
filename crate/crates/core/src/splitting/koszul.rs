//! Rational Betti numbers of `Z_K` from the Koszul complex of the face ring.
//!
//! `H*(Z_K; Q) = Tor_{Q[v_1..v_m]}(Q[K], Q)` is the homology of
//! `Λ[u_1..u_m] ⊗ Q[K]` with `d u_i = v_i`. The complex splits by multidegree
//! `a ∈ N^m`; a chain `u_S ⊗ x^b` has multidegree `1_S + b` and contributes
//! to total degree `2|a| - |S|`. Nothing here uses full subcomplexes, so the
//! result checks the subset sweep independently.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::complex::{SimplicialComplex, VertexSubset};
use crate::error::{Error, Result};
use crate::homology::HomologyProfile;

pub const ORACLE_MAX_VERTICES: usize = 12;

/// Rational Betti numbers of `Z_K` (reduced) collected from every
/// multidegree `a` with `1 <= |a| <= cutoff`.
///
/// With `cutoff >= m` every class is found, since only squarefree
/// multidegrees carry homology; the non-squarefree ones are still computed.
pub fn koszul_tor_oracle(complex: &SimplicialComplex, cutoff: usize) -> Result<HomologyProfile> {
    let m = complex.vertex_count();
    if m > ORACLE_MAX_VERTICES {
        return Err(Error::OracleScaleExceeded {
            got: m,
            max: ORACLE_MAX_VERTICES,
        });
    }
    let mut profile = HomologyProfile::new();
    // The complex in multidegree `a` depends only on supp(a) and on which
    // coordinates equal one.
    let mut memo: BTreeMap<(u64, u64), Vec<usize>> = BTreeMap::new();
    let mut a = vec![0usize; m];
    // Depth-first walk over exponent vectors with total weight <= cutoff.
    fn walk(
        complex: &SimplicialComplex,
        a: &mut Vec<usize>,
        i: usize,
        remaining: usize,
        memo: &mut BTreeMap<(u64, u64), Vec<usize>>,
        profile: &mut HomologyProfile,
    ) {
        if i == a.len() {
            let total: usize = a.iter().sum();
            if total == 0 {
                return;
            }
            let (mut supp, mut ones) = (0u64, 0u64);
            for (j, &e) in a.iter().enumerate() {
                if e > 0 {
                    supp |= 1 << j;
                }
                if e == 1 {
                    ones |= 1 << j;
                }
            }
            let dims = memo
                .entry((supp, ones))
                .or_insert_with(|| multidegree_homology(complex, supp, ones));
            for (s, &dim) in dims.iter().enumerate() {
                profile.add_free(2 * total - s, dim);
            }
            return;
        }
        for e in 0..=remaining {
            a[i] = e;
            walk(complex, a, i + 1, remaining - e, memo, profile);
        }
        a[i] = 0;
    }
    walk(complex, &mut a, 0, cutoff, &mut memo, &mut profile);
    Ok(profile)
}

/// Homology dimensions by `|S|` of the Koszul complex in one multidegree.
fn multidegree_homology(complex: &SimplicialComplex, supp: u64, ones: u64) -> Vec<usize> {
    let support = VertexSubset::from_bits(supp);
    let n = support.len();
    // u_S ⊗ x^{a - 1_S} is nonzero iff supp(a - 1_S) = supp ∖ (S ∩ ones) is a face.
    let nonzero = |s: u64| complex.is_face(VertexSubset::from_bits(supp & !(s & ones)));
    let mut basis: Vec<Vec<u64>> = vec![Vec::new(); n + 1];
    let mut s = supp;
    loop {
        if nonzero(s) {
            basis[s.count_ones() as usize].push(s);
        }
        if s == 0 {
            break;
        }
        s = (s - 1) & supp;
    }
    for b in &mut basis {
        b.sort_unstable();
    }
    // rank of d: C_i -> C_{i-1}, for i = 1..=n.
    let mut ranks = vec![0usize; n + 2];
    for i in 1..=n {
        if basis[i].is_empty() || basis[i - 1].is_empty() {
            continue;
        }
        let mut matrix = vec![vec![BigInt::zero(); basis[i].len()]; basis[i - 1].len()];
        for (c, &s) in basis[i].iter().enumerate() {
            let mut sign = 1i64;
            for j in 0..64 {
                let bit = 1u64 << j;
                if s & bit == 0 {
                    continue;
                }
                let t = s & !bit;
                if let Ok(r) = basis[i - 1].binary_search(&t) {
                    matrix[r][c] = BigInt::from(sign);
                }
                sign = -sign;
            }
        }
        ranks[i] = rank(matrix);
    }
    (0..=n).map(|i| basis[i].len() - ranks[i] - ranks[i + 1]).collect()
}

/// Rank over `Q` by fraction-free Bareiss elimination.
fn rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn rank_of_small_matrices() {
        let m = |rows: &[&[i64]]| -> Vec<Vec<BigInt>> {
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect()
        };
        assert_eq!(rank(m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(m(&[&[0, 1], &[1, 0]])), 2);
        assert_eq!(rank(m(&[&[2, 3, 5], &[4, 6, 10], &[1, 1, 1]])), 2);
    }

    #[test]
    fn oracle_examples() {
        let tri = koszul_tor_oracle(&fixtures::boundary_of_simplex(3), 3).unwrap();
        let mut expected = HomologyProfile::new();
        expected.add_free(5, 1);
        assert_eq!(tri, expected);

        let simplex = SimplicialComplex::simplex(4).unwrap();
        assert!(koszul_tor_oracle(&simplex, 4).unwrap().is_zero());

        assert_eq!(
            koszul_tor_oracle(&fixtures::disjoint_points(13), 2),
            Err(Error::OracleScaleExceeded { got: 13, max: 12 })
        );
    }

    #[test]
    fn non_squarefree_degrees_are_acyclic() {
        let k = fixtures::cycle(4);
        let low = koszul_tor_oracle(&k, 4).unwrap();
        let high = koszul_tor_oracle(&k, 7).unwrap();
        assert_eq!(low, high);
    }
}
