//! Line bundles, divisor classes and smooth members on orbifold scrolls.
//!
//! The base is `P^1` with a single orbifold point of order `r` over `0`. The
//! scroll `F_a` carries the directrix `σ` with `σ² = -a`, the fiber class `F`
//! and the co-directrix `τ = σ + aF`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::frac::Frac;
use crate::resolve::Cqs;

/// Invalid scroll data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScrollError {
    #[error("orbifold order must be positive, got {0}")]
    BadOrder(i64),
    #[error("twist {a} is not in (1/{r})Z")]
    TwistNotInLattice { a: Frac, r: i64 },
    #[error("fiber coefficient {m} is not in (1/{r})Z")]
    FiberNotInLattice { m: Frac, r: i64 },
    #[error("twist must be nonnegative, got {0}")]
    NegativeTwist(Frac),
    #[error("fiber degree must be at least 1")]
    ZeroFiberDegree,
}

/// `P^1` with one orbifold point of order `r` over `0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbiBase {
    pub r: i64,
}

impl OrbiBase {
    pub fn new(r: i64) -> Result<Self, ScrollError> {
        if r < 1 {
            return Err(ScrollError::BadOrder(r));
        }
        Ok(OrbiBase { r })
    }

    /// True when `x` lies in `(1/r)Z`.
    pub fn admits(&self, x: &Frac) -> bool {
        x.scale(self.r).is_integer()
    }
}

/// A divisor class `sσ + fF`, coefficients possibly negative or fractional.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorClass {
    pub sigma: Frac,
    pub fiber: Frac,
}

impl DivisorClass {
    pub fn new(sigma: Frac, fiber: Frac) -> Self {
        DivisorClass { sigma, fiber }
    }
}

/// The scroll `F_a` over an [`OrbiBase`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scroll {
    pub base: OrbiBase,
    pub a: Frac,
}

impl Scroll {
    pub fn new(r: i64, a: Frac) -> Result<Self, ScrollError> {
        let base = OrbiBase::new(r)?;
        if a.is_negative() {
            return Err(ScrollError::NegativeTwist(a));
        }
        if !base.admits(&a) {
            return Err(ScrollError::TwistNotInLattice { a, r });
        }
        Ok(Scroll { base, a })
    }

    /// Intersection pairing with `σ² = -a`, `σ·F = 1`, `F² = 0`.
    pub fn pair(&self, x: &DivisorClass, y: &DivisorClass) -> Frac {
        -(&self.a * &x.sigma * &y.sigma) + &x.sigma * &y.fiber + &x.fiber * &y.sigma
    }

    /// Class of the directrix.
    pub fn sigma(&self) -> DivisorClass {
        DivisorClass::new(Frac::one(), Frac::zero())
    }

    /// Class of the co-directrix `σ + aF`.
    pub fn tau(&self) -> DivisorClass {
        DivisorClass::new(Frac::one(), self.a.clone())
    }

    /// Class of a fiber.
    pub fn fiber(&self) -> DivisorClass {
        DivisorClass::new(Frac::zero(), Frac::one())
    }

    /// Relative canonical class `-2σ - aF`.
    pub fn relative_canonical(&self) -> DivisorClass {
        DivisorClass::new(Frac::int(-2), -&self.a)
    }
}

/// A member `nσ + mF` of a linear system on a [`Scroll`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScrollDivisor {
    pub n: u32,
    pub m: Frac,
}

impl ScrollDivisor {
    pub fn new(scroll: &Scroll, n: u32, m: Frac) -> Result<Self, ScrollError> {
        if !scroll.base.admits(&m) {
            return Err(ScrollError::FiberNotInLattice { m, r: scroll.base.r });
        }
        Ok(ScrollDivisor { n, m })
    }

    pub fn class(&self) -> DivisorClass {
        DivisorClass::new(Frac::int(self.n as i64), self.m.clone())
    }
}

/// `deg ω_{C/P} = (n-1)(2m - an)` for `C ∈ |nσ + mF|`.
pub fn adjunction_degree(n: u32, m: &Frac, a: &Frac) -> Frac {
    let n = n as i64;
    (m.scale(2) - a.scale(n)).scale(n - 1)
}

/// How a general member of `|nσ + mF|` sits relative to the directrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SmoothClass {
    Connected,
    DisjointDirectrix,
    NotSmooth,
}

/// Predicates on a linear system governing smoothness and étaleness over `0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionConstraints {
    pub avoids_sigma0: bool,
    pub etale_over_0: bool,
    pub smooth_class: SmoothClass,
}

/// Evaluates [`SectionConstraints`] for `|nσ + mF|` on `F_a` over order `r`.
pub fn section_constraints(n: u32, m: &Frac, a: &Frac, r: i64) -> Result<SectionConstraints, ScrollError> {
    let scroll = Scroll::new(r, a.clone())?;
    if n == 0 {
        return Err(ScrollError::ZeroFiberDegree);
    }
    ScrollDivisor::new(&scroll, n, m.clone())?;
    let c_sigma = m - a.scale(n as i64);
    let c_prev = m - a.scale(n as i64 - 1);
    let avoids_sigma0 = c_sigma.is_nonneg_integer();
    let etale_over_0 = avoids_sigma0 || c_prev.is_nonneg_integer();
    let smooth_class = if !c_sigma.is_negative() {
        SmoothClass::Connected
    } else if c_sigma == -a {
        SmoothClass::DisjointDirectrix
    } else {
        SmoothClass::NotSmooth
    };
    Ok(SectionConstraints {
        avoids_sigma0,
        etale_over_0,
        smooth_class,
    })
}

/// The fiber coefficient and bounds for a tetragonal curve with `b` branch points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchRelation {
    pub m: Frac,
    pub avoid_bound: bool,
    pub etale_bound: bool,
    pub smooth_ok: bool,
}

/// `m = b/6 + 2a` with the bounds `a <= b/12`, `a <= b/6`.
pub fn tetragonal_branch_relation(a: &Frac, b: u32) -> BranchRelation {
    let b = Frac::int(b as i64);
    let m = &b / 6 + a.scale(2);
    let avoid_bound = *a <= &b / 12;
    let etale_bound = *a <= &b / 6;
    let smooth_ok = avoid_bound || *a == &b / 6;
    BranchRelation {
        m,
        avoid_bound,
        etale_bound,
        smooth_ok,
    }
}

/// Singularities of the coarse space of `F_a` over the orbifold point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoarseSingularities {
    pub at_sigma: Cqs,
    pub at_tau: Cqs,
    pub fiber_multiplicity: i64,
}

/// Quotient singularities at `σ(0)` and `τ(0)` and the multiplicity of the
/// fiber over `0`.
///
/// The weight at `σ(0)` is `-ra mod r` and at `τ(0)` is `ra mod r`, so that
/// the directrix meets the chain resolving `1/r(1, -ra)`.
pub fn coarse_singularities(r: i64, a: &Frac) -> Result<CoarseSingularities, ScrollError> {
    let scroll = Scroll::new(r, a.clone())?;
    let ra = scroll.a.times_int(r).expect("checked by Scroll::new");
    if ra.mod_floor(&r) == 0 {
        return Ok(CoarseSingularities {
            at_sigma: Cqs::smooth(),
            at_tau: Cqs::smooth(),
            fiber_multiplicity: 1,
        });
    }
    Ok(CoarseSingularities {
        at_sigma: Cqs::new(r, (-ra).mod_floor(&r)),
        at_tau: Cqs::new(r, ra.mod_floor(&r)),
        fiber_multiplicity: r / r.gcd(&ra),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frac::q;

    fn oracle_adjunction(n: i64, m: &Frac, a: &Frac) -> Frac {
        // ((n-2)σ + (m-a)F)·(nσ + mF) on F_a
        let s = Scroll {
            base: OrbiBase { r: 1 },
            a: a.clone(),
        };
        let k = DivisorClass::new(Frac::int(n - 2), m - a);
        let c = DivisorClass::new(Frac::int(n), m.clone());
        s.pair(&k, &c)
    }

    #[test]
    fn adjunction_examples() {
        assert_eq!(adjunction_degree(1, &Frac::int(7), &q(2, 3)), Frac::zero());
        assert_eq!(adjunction_degree(4, &Frac::int(5), &Frac::int(1)), Frac::int(18));
        assert_eq!(adjunction_degree(4, &Frac::int(3), &q(1, 2)), Frac::int(12));
        assert_eq!(oracle_adjunction(4, &Frac::int(3), &q(1, 2)), Frac::int(12));
    }

    #[test]
    fn c_dot_sigma_is_m_minus_na() {
        let s = Scroll::new(3, q(2, 3)).unwrap();
        let c = ScrollDivisor::new(&s, 4, q(8, 3)).unwrap().class();
        assert_eq!(s.pair(&c, &s.sigma()), q(8, 3) - q(8, 3));
        assert_eq!(s.pair(&s.tau(), &s.sigma()), Frac::zero());
        assert_eq!(s.pair(&s.tau(), &s.tau()), q(2, 3));
    }

    #[test]
    fn section_constraint_examples() {
        let c = section_constraints(4, &Frac::int(3), &Frac::int(1), 1).unwrap();
        assert_eq!(
            c,
            SectionConstraints {
                avoids_sigma0: false,
                etale_over_0: true,
                smooth_class: SmoothClass::DisjointDirectrix
            }
        );
        let c = section_constraints(4, &Frac::int(2), &q(1, 2), 2).unwrap();
        assert!(c.avoids_sigma0 && c.etale_over_0);
        assert_eq!(c.smooth_class, SmoothClass::Connected);
        let c = section_constraints(4, &Frac::zero(), &Frac::zero(), 1).unwrap();
        assert!(c.avoids_sigma0 && c.etale_over_0);
        assert_eq!(c.smooth_class, SmoothClass::Connected);
    }

    #[test]
    fn section_constraints_reject_off_lattice() {
        assert!(matches!(
            section_constraints(4, &q(1, 3), &q(1, 2), 2),
            Err(ScrollError::FiberNotInLattice { .. })
        ));
        assert!(matches!(
            section_constraints(4, &Frac::int(1), &q(1, 3), 2),
            Err(ScrollError::TwistNotInLattice { .. })
        ));
    }

    #[test]
    fn not_smooth_when_below_minus_a() {
        let c = section_constraints(4, &Frac::int(1), &Frac::int(1), 1).unwrap();
        assert_eq!(c.smooth_class, SmoothClass::NotSmooth);
        assert!(!c.avoids_sigma0);
    }

    #[test]
    fn branch_relation_examples() {
        let b = tetragonal_branch_relation(&q(1, 2), 12);
        assert_eq!(b.m, Frac::int(3));
        assert!(b.smooth_ok);
        assert_eq!(tetragonal_branch_relation(&Frac::zero(), 6).m, Frac::int(1));
        let b = tetragonal_branch_relation(&Frac::int(1), 6);
        assert_eq!(b.m, Frac::int(3));
        assert!(!b.avoid_bound && b.etale_bound && b.smooth_ok);
        let b = tetragonal_branch_relation(&q(2, 3), 6);
        assert!(!b.smooth_ok);
    }

    #[test]
    fn coarse_singularity_examples() {
        let c = coarse_singularities(1, &Frac::int(3)).unwrap();
        assert!(c.at_sigma.is_smooth() && c.at_tau.is_smooth());
        assert_eq!(c.fiber_multiplicity, 1);

        let c = coarse_singularities(2, &q(1, 2)).unwrap();
        assert_eq!(c.at_sigma, Cqs::new(2, 1));
        assert_eq!(c.at_tau, Cqs::new(2, 1));
        assert_eq!(c.fiber_multiplicity, 2);

        let c = coarse_singularities(3, &q(4, 3)).unwrap();
        assert_eq!(c.fiber_multiplicity, 3);
        assert_eq!(c.at_sigma, Cqs::new(3, 2));
        assert_eq!(c.at_tau, Cqs::new(3, 1));
        let mut pair = [c.at_sigma.q, c.at_tau.q];
        pair.sort();
        assert_eq!(pair, [1, 2]);
    }

    #[test]
    fn integral_twist_with_orbifold_base_is_smooth() {
        let c = coarse_singularities(4, &Frac::int(2)).unwrap();
        assert!(c.at_sigma.is_smooth());
        assert_eq!(c.fiber_multiplicity, 1);
    }
}
