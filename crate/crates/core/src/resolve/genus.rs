//! δ-invariants, arithmetic genera and the two genus routes.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::build::{attach, fiber_layout, solve_linear, AttachSpec};
use super::config::Role;
use super::contract::{contract_with, default_choice};
use super::ResolveError;
use crate::frac::Frac;
use crate::orbiscroll::{Scroll, ScrollDivisor};

/// A curve singularity of type `A_k`, `k >= -1`.
///
/// `A_{-1}` and `A_0` label unramified and simply ramified smooth double
/// cover germs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AkSing {
    k: i64,
}

impl AkSing {
    pub fn new(k: i64) -> Result<Self, ResolveError> {
        if k < -1 {
            return Err(ResolveError::BadSingularity(k));
        }
        Ok(AkSing { k })
    }

    pub fn k(&self) -> i64 {
        self.k
    }
}

impl fmt::Display for AkSing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A_{}", self.k)
    }
}

/// `δ(A_k) = ⌈k/2⌉`, zero for `k <= 0`.
pub fn delta_invariant(s: AkSing) -> u64 {
    if s.k <= 0 {
        0
    } else {
        ((s.k + 1) / 2) as u64
    }
}

/// Arithmetic genus of a curve of class `nσ + mF` on `F_l`.
pub fn pa_hirzebruch(l: i64, n: i64, m: i64) -> i64 {
    (n - 1) * (m - 1) - l * n * (n - 1) / 2
}

/// `pa - Σ δ`; errors when negative.
pub fn geometric_genus(pa: i64, sings: &[AkSing]) -> Result<i64, ResolveError> {
    let g = pa - sings.iter().map(|s| delta_invariant(*s) as i64).sum::<i64>();
    if g < 0 {
        return Err(ResolveError::NegativeGenus(g));
    }
    Ok(g)
}

/// Genus from `2g - 2 = deg (2h - 2) + ram`.
pub fn genus_rh(deg: i64, base_genus: i64, ram_total: i64) -> Result<i64, ResolveError> {
    let two_g_minus_two = deg * (2 * base_genus - 2) + ram_total;
    if two_g_minus_two.rem_euclid(2) != 0 {
        return Err(ResolveError::GenusNotIntegral(two_g_minus_two));
    }
    let g = two_g_minus_two / 2 + 1;
    if g < 0 {
        return Err(ResolveError::NegativeGenus(g));
    }
    Ok(g)
}

/// The smooth surface reached after blowing down.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum SurfaceModel {
    /// A plane curve of the given degree.
    Plane { degree: i64 },
    /// A curve of class `nσ + mF` on `F_l`.
    Hirzebruch { l: i64, n: i64, m: i64 },
}

impl SurfaceModel {
    pub fn arithmetic_genus(&self) -> i64 {
        match *self {
            SurfaceModel::Plane { degree } => (degree - 1) * (degree - 2) / 2,
            SurfaceModel::Hirzebruch { l, n, m } => pa_hirzebruch(l, n, m),
        }
    }
}

impl fmt::Display for SurfaceModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceModel::Plane { degree } => write!(f, "plane curve of degree {}", degree),
            SurfaceModel::Hirzebruch { l, n, m } => write!(f, "{}σ+{}F on F_{}", n, m, l),
        }
    }
}

/// Genus of the normalization of a member of `|nσ + mF|`, read from the
/// blown-down resolution of the central fiber.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizationRoute {
    pub model: SurfaceModel,
    pub pa: i64,
    pub delta: u64,
    pub genus: i64,
}

/// Resolves the coarse central fiber, attaches the curve per `spec`, blows
/// down, identifies the resulting model and subtracts the δ picked up on the
/// way. For integral `a` the scroll is already `F_a`.
pub fn normalization_genus(
    n: u32,
    m: &Frac,
    a: &Frac,
    r: i64,
    spec: &AttachSpec,
) -> Result<NormalizationRoute, ResolveError> {
    let scroll = Scroll::new(r, a.clone())?;
    ScrollDivisor::new(&scroll, n, m.clone())?;
    let layout = fiber_layout(r, a)?;
    if layout.directrix.is_none() {
        let int = |x: &Frac, what: &str| {
            x.to_i64()
                .filter(|_| x.is_integer())
                .ok_or_else(|| ResolveError::NonIntegral(format!("{} = {}", what, x)))
        };
        let model = SurfaceModel::Hirzebruch {
            l: int(a, "a")?,
            n: n as i64,
            m: int(m, "m")?,
        };
        let pa = model.arithmetic_genus();
        return Ok(NormalizationRoute {
            model,
            pa,
            delta: 0,
            genus: pa,
        });
    }

    let mut cfg = attach(&layout, spec)?;
    let main = cfg
        .main_id()
        .ok_or_else(|| ResolveError::InvalidConfig("no main curve attached".into()))?;
    // Ĉ = π*C − Σ c_i E_i with Ĉ·E_i = 0 fixing c from the exceptional block.
    let ex = layout.exceptional();
    let mat: Vec<Vec<Frac>> = ex
        .iter()
        .map(|&x| {
            ex.iter()
                .map(|&y| {
                    if x == y {
                        Frac::int(cfg.vertex(x).and_then(|v| v.self_int).unwrap_or_default())
                    } else {
                        Frac::int(cfg.dot(x, y) as i64)
                    }
                })
                .collect()
        })
        .collect();
    let rhs: Vec<Frac> = ex.iter().map(|&x| Frac::int(-(cfg.dot(main, x) as i64))).collect();
    let c = solve_linear(&mat, &rhs).expect("exceptional block is negative definite");
    let n_i = n as i64;
    let mut c2 = -a.scale(n_i * n_i) + m.scale(2 * n_i);
    for (ci, &x) in c.iter().zip(&ex) {
        c2 -= ci.scale(cfg.dot(main, x) as i64);
    }
    let c2 = c2
        .to_i64()
        .filter(|_| c2.is_integer())
        .ok_or_else(|| ResolveError::NonIntegral(format!("Ĉ² = {}", c2)))?;
    cfg.vertex_mut(main).expect("main exists").self_int = Some(c2);

    let done = contract_with(&cfg, default_choice)?;
    let out = &done.config;
    let c2 = out.vertex(main).and_then(|v| v.self_int).expect("tracked");
    let rest: Vec<_> = out.vertices.iter().filter(|v| v.role != Role::MainCurve).collect();
    let describe = || out.to_text().replace('\n', "; ");
    let model = if let [only] = rest.as_slice() {
        if only.self_int != Some(1) {
            return Err(ResolveError::UnrecognizedModel(describe()));
        }
        let d = out.dot(main, only.id) as i64;
        if d * d != c2 {
            return Err(ResolveError::UnrecognizedModel(format!(
                "C² = {} but C·line = {}",
                c2, d
            )));
        }
        SurfaceModel::Plane { degree: d }
    } else {
        let fibers: Vec<_> = rest.iter().filter(|v| v.self_int == Some(0)).collect();
        let negs: Vec<_> = rest.iter().filter(|v| v.self_int.is_some_and(|s| s < 0)).collect();
        if fibers.len() != 1 || negs.len() != 1 || rest.len() != 2 {
            return Err(ResolveError::UnrecognizedModel(describe()));
        }
        let l = -negs[0].self_int.expect("filtered");
        let nn = out.dot(main, fibers[0].id) as i64;
        let num = c2 + l * nn * nn;
        if nn == 0 || num % (2 * nn) != 0 {
            return Err(ResolveError::UnrecognizedModel(describe()));
        }
        let mm = num / (2 * nn);
        // The negative curve is a section; C meets it in m − l n.
        if out.dot(main, negs[0].id) as i64 != mm - l * nn {
            return Err(ResolveError::UnrecognizedModel(describe()));
        }
        SurfaceModel::Hirzebruch { l, n: nn, m: mm }
    };
    let pa = model.arithmetic_genus();
    Ok(NormalizationRoute {
        model,
        pa,
        delta: done.delta,
        genus: pa - done.delta as i64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frac::q;
    use crate::resolve::derive_attach_spec;

    fn ak(k: i64) -> AkSing {
        AkSing::new(k).unwrap()
    }

    #[test]
    fn delta_values() {
        assert_eq!(delta_invariant(ak(-1)), 0);
        assert_eq!(delta_invariant(ak(0)), 0);
        assert_eq!(delta_invariant(ak(1)), 1);
        assert_eq!(delta_invariant(ak(2)), 1);
        assert_eq!(delta_invariant(ak(8)), 4);
        assert!(AkSing::new(-2).is_err());
    }

    #[test]
    fn hirzebruch_genera() {
        assert_eq!(pa_hirzebruch(1, 4, 5), 6);
        assert_eq!(pa_hirzebruch(0, 4, 2), 3);
        for m in -5..5 {
            assert_eq!(pa_hirzebruch(2, 1, m), 0);
        }
    }

    #[test]
    fn geometric_genus_of_singular_quintics() {
        assert_eq!(geometric_genus(6, &[ak(2)]).unwrap(), 5);
        assert_eq!(geometric_genus(6, &[]).unwrap(), 6);
        assert_eq!(geometric_genus(6, &[ak(6)]).unwrap(), 3);
        assert_eq!(geometric_genus(6, &[ak(13)]), Err(ResolveError::NegativeGenus(-1)));
    }

    #[test]
    fn riemann_hurwitz() {
        assert_eq!(genus_rh(4, 0, 18).unwrap(), 6);
        assert_eq!(genus_rh(4, 0, 14).unwrap(), 4);
        assert_eq!(genus_rh(2, 0, 2).unwrap(), 0);
        assert_eq!(genus_rh(2, 0, 3), Err(ResolveError::GenusNotIntegral(-1)));
        assert_eq!(genus_rh(3, 0, 0), Err(ResolveError::NegativeGenus(-2)));
    }

    #[test]
    fn normalization_of_a_double_fiber_curve() {
        // 4σ+2F on F_{1/2} over order 2 has genus 1.
        let (m, a) = (Frac::int(2), q(1, 2));
        let spec = derive_attach_spec(4, &m, &a, 2).unwrap();
        let route = normalization_genus(4, &m, &a, 2, &spec).unwrap();
        assert_eq!(route.genus, 1);
        assert!(matches!(route.model, SurfaceModel::Hirzebruch { l: 2, n: 2, .. }));
    }

    #[test]
    fn integral_twist_uses_the_scroll_itself() {
        let route = normalization_genus(4, &Frac::int(5), &Frac::int(1), 1, &AttachSpec::default()).unwrap();
        assert_eq!(route.model, SurfaceModel::Hirzebruch { l: 1, n: 4, m: 5 });
        assert_eq!(route.genus, 6);
    }
}
