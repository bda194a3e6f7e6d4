//! Hall bases of free Lie algebras and their Witt counts.
//!
//! Elements are generated length by length. Within a length, the order is
//! the order of generation, and every shorter element precedes every longer
//! one. A bracket `[u, v]` of basis elements belongs to the basis when
//! `u > v` and, if `u = [x, y]`, also `y <= v`.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::check_cutoff;
use crate::error::{Error, Result};
use crate::primes::factorize;

pub const MAX_LETTERS: usize = 16;
/// Upper bound on the number of generated elements.
pub const ENUMERATION_LIMIT: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Bracket {
    /// A letter, numbered from 1.
    Letter(u32),
    Pair(Box<Bracket>, Box<Bracket>),
}

impl fmt::Display for Bracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bracket::Letter(i) => write!(f, "x{i}"),
            Bracket::Pair(u, v) => write!(f, "[{u},{v}]"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HallBracket {
    pub bracket: Bracket,
    /// Occurrences of each letter.
    pub multidegree: Vec<u32>,
    /// `Σ b(i) w_i`.
    pub degree: u32,
}

struct Node {
    children: Option<(usize, usize)>,
    letter: u32,
    length: u32,
    degree: u32,
    multidegree: Vec<u32>,
}

/// Hall basis elements of weighted degree at most `cutoff`, ordered by
/// degree and then by their position in the Hall order.
pub fn hall_basis(weights: &[u32], cutoff: u32) -> Result<Vec<HallBracket>> {
    let l = weights.len();
    if l == 0 {
        return Err(Error::EmptyWedge);
    }
    if l > MAX_LETTERS {
        return Err(Error::TooManyLetters {
            got: l,
            max: MAX_LETTERS,
        });
    }
    if weights.contains(&0) {
        return Err(Error::NonPositiveWeight);
    }
    check_cutoff(cutoff)?;

    let mut nodes: Vec<Node> = Vec::new();
    let mut by_length: Vec<Vec<usize>> = vec![Vec::new(), Vec::new()];
    for (i, &w) in weights.iter().enumerate() {
        if w <= cutoff {
            let mut multidegree = vec![0; l];
            multidegree[i] = 1;
            by_length[1].push(nodes.len());
            nodes.push(Node {
                children: None,
                letter: i as u32 + 1,
                length: 1,
                degree: w,
                multidegree,
            });
        }
    }
    let min_weight = *weights.iter().min().expect("nonempty");
    let max_length = cutoff / min_weight;
    for length in 2..=max_length as usize {
        let mut fresh = Vec::new();
        for v_len in 1..length {
            let u_len = length - v_len;
            for &v in &by_length[v_len] {
                for &u in &by_length[u_len] {
                    if u <= v {
                        continue;
                    }
                    if let Some((_, y)) = nodes[u].children {
                        if y > v {
                            continue;
                        }
                    }
                    let degree = nodes[u].degree + nodes[v].degree;
                    if degree > cutoff {
                        continue;
                    }
                    fresh.push((u, v, degree));
                }
            }
        }
        let mut ids = Vec::with_capacity(fresh.len());
        for (u, v, degree) in fresh {
            if nodes.len() >= ENUMERATION_LIMIT {
                return Err(Error::EnumerationTooLarge {
                    limit: ENUMERATION_LIMIT,
                });
            }
            let multidegree = nodes[u]
                .multidegree
                .iter()
                .zip(&nodes[v].multidegree)
                .map(|(a, b)| a + b)
                .collect();
            ids.push(nodes.len());
            nodes.push(Node {
                children: Some((u, v)),
                letter: 0,
                length: length as u32,
                degree,
                multidegree,
            });
        }
        by_length.push(ids);
    }

    fn tree(nodes: &[Node], i: usize) -> Bracket {
        match nodes[i].children {
            None => Bracket::Letter(nodes[i].letter),
            Some((u, v)) => Bracket::Pair(Box::new(tree(nodes, u)), Box::new(tree(nodes, v))),
        }
    }
    let mut order: Vec<usize> = (0..nodes.len()).collect();
    order.sort_by_key(|&i| (nodes[i].degree, i));
    debug_assert!(nodes
        .iter()
        .all(|n| n.length as usize == n.multidegree.iter().sum::<u32>() as usize));
    Ok(order
        .into_iter()
        .map(|i| HallBracket {
            bracket: tree(&nodes, i),
            multidegree: nodes[i].multidegree.clone(),
            degree: nodes[i].degree,
        })
        .collect())
}

/// Möbius function.
pub(crate) fn mobius(n: u64) -> i32 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Number of Hall basis elements whose letters fall into types with the
/// given content, when type `t` has `kinds[t]` interchangeable letters:
/// `(1/|c|) Σ_{d | gcd(c)} μ(d) (|c|/d)! / Π (c_t/d)! · Π kinds_t^{c_t/d}`.
///
/// With every `kinds[t] = 1` this is the count for one multidegree.
pub fn witt_count(content: &[u32], kinds: &[u64]) -> BigUint {
    assert_eq!(content.len(), kinds.len());
    let total: u64 = content.iter().map(|&c| u64::from(c)).sum();
    if total == 0 {
        return BigUint::zero();
    }
    let g = content.iter().fold(0u64, |g, &c| g.gcd(&u64::from(c)));
    let mut sum = BigInt::zero();
    for d in (1..=g).filter(|d| g % d == 0) {
        let mu = mobius(d);
        if mu == 0 {
            continue;
        }
        let mut term = factorial(total / d);
        for (&c, &k) in content.iter().zip(kinds) {
            let part = u64::from(c) / d;
            term /= factorial(part);
            term *= BigUint::from(k).pow(part as u32);
        }
        let term = BigInt::from(term);
        if mu > 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    debug_assert!(!sum.is_negative());
    let (q, r) = sum.div_rem(&BigInt::from(total));
    debug_assert!(r.is_zero());
    q.to_biguint().expect("Witt counts are nonnegative")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeMap;

    fn counts_by_degree(basis: &[HallBracket], cutoff: u32) -> Vec<usize> {
        (1..=cutoff)
            .map(|d| basis.iter().filter(|h| h.degree == d).count())
            .collect()
    }

    #[test]
    fn basis_examples() {
        let one = hall_basis(&[1], 5).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].bracket, Bracket::Letter(1));

        let two = hall_basis(&[1, 1], 2).unwrap();
        let degree_two: Vec<_> = two.iter().filter(|h| h.degree == 2).collect();
        assert_eq!(degree_two.len(), 1);
        assert_eq!(degree_two[0].multidegree, vec![1, 1]);

        let fib = hall_basis(&[1, 2], 5).unwrap();
        assert_eq!(counts_by_degree(&fib, 5), vec![1, 1, 1, 1, 2]);
    }

    #[test]
    fn classical_witt_numbers() {
        // Free Lie algebra on two generators: 2, 1, 2, 3, 6, 9, 18, 30.
        let basis = hall_basis(&[1, 1], 8).unwrap();
        assert_eq!(counts_by_degree(&basis, 8), vec![2, 1, 2, 3, 6, 9, 18, 30]);
        // Three generators: 3, 3, 8, 18, 48.
        let basis = hall_basis(&[1, 1, 1], 5).unwrap();
        assert_eq!(counts_by_degree(&basis, 5), vec![3, 3, 8, 18, 48]);
    }

    #[test]
    fn multidegree_counts_match_necklaces() {
        for weights in [vec![1, 1, 1], vec![1, 2, 3], vec![2, 1, 1, 2]] {
            let basis = hall_basis(&weights, 9).unwrap();
            let mut seen: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
            for h in &basis {
                *seen.entry(h.multidegree.clone()).or_default() += 1;
            }
            for (md, n) in &seen {
                let ones = vec![1u64; md.len()];
                assert_eq!(witt_count(md, &ones), BigUint::from(*n), "{md:?}");
            }
        }
    }

    #[test]
    fn type_counts_group_letters() {
        // Three letters of one type: total Lie dimension in each length.
        let lengths: Vec<BigUint> = (1..=5).map(|n| witt_count(&[n], &[3])).collect();
        let expected: Vec<BigUint> = [3u32, 3, 8, 18, 48].iter().map(|&x| BigUint::from(x)).collect();
        assert_eq!(lengths, expected);
        assert_eq!(witt_count(&[2], &[10]), BigUint::from(45u32));
    }

    #[test]
    fn rejects_bad_arguments() {
        assert_eq!(hall_basis(&[], 3), Err(Error::EmptyWedge));
        assert_eq!(hall_basis(&[1, 0], 3), Err(Error::NonPositiveWeight));
        assert_eq!(hall_basis(&[1; 17], 3), Err(Error::TooManyLetters { got: 17, max: 16 }));
        assert!(matches!(hall_basis(&[1], 65), Err(Error::DegreeCutoffTooLarge { .. })));
    }

    #[test]
    fn mobius_values() {
        let mu: Vec<i32> = (1..=10).map(mobius).collect();
        assert_eq!(mu, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1]);
    }
}
