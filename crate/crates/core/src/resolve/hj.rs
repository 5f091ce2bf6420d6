//! Cyclic quotient singularities and their Hirzebruch–Jung chains.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::ResolveError;

/// The cyclic quotient singularity `1/r(1, q)`.
///
/// Stored with `gcd(r, q) = 1` and `0 <= q < r`; the smooth point is `(1, 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cqs {
    pub r: i64,
    pub q: i64,
}

impl Cqs {
    /// Canonicalizes `1/r(1, q)`: reduces `q` mod `r` and divides out the
    /// pseudo-reflection part `gcd(r, q)`.
    pub fn new(r: i64, q: i64) -> Self {
        assert!(r >= 1, "order must be positive");
        let q = q.mod_floor(&r);
        let g = r.gcd(&q);
        let (r, q) = (r / g, (q / g).mod_floor(&(r / g)));
        if r == 1 {
            Cqs::smooth()
        } else {
            Cqs { r, q }
        }
    }

    pub fn smooth() -> Self {
        Cqs { r: 1, q: 0 }
    }

    pub fn is_smooth(&self) -> bool {
        self.r == 1
    }

    /// The resolution chain; empty for a smooth point.
    pub fn chain(&self) -> Chain {
        if self.is_smooth() {
            Chain::default()
        } else {
            hj_expand(self.r, self.q).expect("canonical CQS is coprime")
        }
    }
}

impl fmt::Display for Cqs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_smooth() {
            write!(f, "smooth")
        } else {
            write!(f, "1/{}(1,{})", self.r, self.q)
        }
    }
}

/// Self-intersections `-b_1, ..., -b_k` of a resolution chain, stored as the
/// positive integers `b_i >= 2`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Chain {
    pub ints: Vec<i64>,
}

impl Chain {
    pub fn new(ints: Vec<i64>) -> Result<Self, ResolveError> {
        if let Some(&b) = ints.iter().find(|&&b| b < 2) {
            return Err(ResolveError::ChainEntry(b));
        }
        Ok(Chain { ints })
    }

    pub fn len(&self) -> usize {
        self.ints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ints.is_empty()
    }

    pub fn reversed(&self) -> Chain {
        let mut ints = self.ints.clone();
        ints.reverse();
        Chain { ints }
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.ints.iter().map(|b| b.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Continued fraction `r/q = b_1 - 1/(b_2 - 1/(...))` with every `b_i >= 2`.
pub fn hj_expand(r: i64, q: i64) -> Result<Chain, ResolveError> {
    if !(0 < q && q < r) || r.gcd(&q) != 1 {
        return Err(ResolveError::NotCoprime { r, q });
    }
    let (mut num, mut den) = (r, q);
    let mut ints = Vec::new();
    while den > 0 {
        let b = Integer::div_ceil(&num, &den);
        ints.push(b);
        let next = b * den - num;
        num = den;
        den = next;
    }
    Ok(Chain { ints })
}

/// Inverse of [`hj_expand`]; the empty chain gives the smooth marker `(1, 0)`.
pub fn hj_reconstruct(chain: &Chain) -> Result<(i64, i64), ResolveError> {
    if let Some(&b) = chain.ints.iter().find(|&&b| b < 2) {
        return Err(ResolveError::ChainEntry(b));
    }
    let (mut num, mut den) = (1i64, 0i64);
    for &b in chain.ints.iter().rev() {
        let next = b * num - den;
        den = num;
        num = next;
    }
    Ok((num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expand_examples() {
        assert_eq!(hj_expand(2, 1).unwrap().ints, vec![2]);
        assert_eq!(hj_expand(3, 2).unwrap().ints, vec![2, 2]);
        assert_eq!(hj_expand(4, 1).unwrap().ints, vec![4]);
        assert_eq!(hj_expand(7, 3).unwrap().ints, vec![3, 2, 2]);
    }

    #[test]
    fn reconstruct_examples() {
        assert_eq!(hj_reconstruct(&Chain { ints: vec![2] }).unwrap(), (2, 1));
        assert_eq!(hj_reconstruct(&Chain { ints: vec![2, 2, 2] }).unwrap(), (4, 3));
        assert_eq!(hj_reconstruct(&Chain::default()).unwrap(), (1, 0));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(hj_expand(4, 2), Err(ResolveError::NotCoprime { .. })));
        assert!(hj_expand(3, 0).is_err());
        assert!(hj_expand(3, 3).is_err());
        assert!(matches!(
            hj_reconstruct(&Chain { ints: vec![2, 1] }),
            Err(ResolveError::ChainEntry(1))
        ));
        assert!(Chain::new(vec![3, 0]).is_err());
    }

    #[test]
    fn cqs_canonical_form() {
        assert_eq!(Cqs::new(3, 4), Cqs { r: 3, q: 1 });
        assert_eq!(Cqs::new(3, -4), Cqs { r: 3, q: 2 });
        assert_eq!(Cqs::new(4, 2), Cqs { r: 2, q: 1 });
        assert!(Cqs::new(5, 0).is_smooth());
        assert_eq!(Cqs::new(3, 2).chain().ints, vec![2, 2]);
        assert!(Cqs::smooth().chain().is_empty());
        assert_eq!(Cqs::new(3, 1).to_string(), "1/3(1,1)");
    }

    #[test]
    fn reversed_chain_is_inverse_weight() {
        // 1/r(1,q) with the coordinates swapped is 1/r(1,q') where qq' = 1 mod r.
        for (r, q, qi) in [(7, 3, 5), (5, 2, 3), (8, 3, 3)] {
            assert_eq!(hj_expand(r, q).unwrap().reversed(), hj_expand(r, qi).unwrap());
        }
    }
}
