//! Toric bookkeeping for the chains at `σ(0)` and `τ(0)`.
//!
//! Near either point the coarse scroll is `C²/μ_r` with weights `(1, w)`. The
//! exceptional curves correspond to the interior lattice points on the lower
//! boundary of the convex hull of the nonzero points of the lattice
//! `{(x, y) : x + w y ≡ 0 (mod r)}/r` in the first quadrant. The main curve's
//! intersection with each curve is read off the Newton polygon of its local
//! equation.

use num_integer::Integer;

use super::build::{fiber_layout, AttachSpec, Position};
use super::ResolveError;
use crate::frac::Frac;
use crate::orbiscroll::{Scroll, ScrollDivisor};

type Pt = (Frac, Frac);

/// Exceptional rays of `1/r(1, w)`, ordered from the `(0, 1)` side to `(1, 0)`.
fn rays(r: i64, w: i64) -> Vec<Pt> {
    if r == 1 || w.mod_floor(&r) == 0 {
        return vec![];
    }
    let mut pts: Vec<Pt> = (1..r)
        .map(|k| (Frac::new(k, r), Frac::new((k * w).mod_floor(&r), r)))
        .filter(|p| p.1.is_positive())
        .collect();
    pts.push((Frac::zero(), Frac::one()));
    pts.push((Frac::one(), Frac::zero()));
    pts.sort();
    let mut hull: Vec<Pt> = Vec::new();
    for p in pts {
        while hull.len() >= 2 {
            let (x1, y1) = &hull[hull.len() - 2];
            let (x2, y2) = &hull[hull.len() - 1];
            let cross = (x2 - x1) * (&p.1 - y1) - (y2 - y1) * (&p.0 - x1);
            if cross.is_negative() {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    hull[1..hull.len() - 1].to_vec()
}

/// Self-intersections (negated) of the exceptional curves of `1/r(1, w)`
/// read from the fan: `ρ_{i-1} + ρ_{i+1} = b_i ρ_i`.
pub fn toric_chain(r: i64, w: i64) -> Vec<i64> {
    let mut rs = vec![(Frac::zero(), Frac::one())];
    rs.extend(rays(r, w));
    rs.push((Frac::one(), Frac::zero()));
    (1..rs.len() - 1)
        .map(|i| {
            let b = if rs[i].0.is_zero() {
                (&rs[i - 1].1 + &rs[i + 1].1) / &rs[i].1
            } else {
                (&rs[i - 1].0 + &rs[i + 1].0) / &rs[i].0
            };
            b.to_i64().expect("chain entries are integers")
        })
        .collect()
}

fn in_lattice(v: (i64, i64), r: i64, w: i64) -> bool {
    (v.0 + w * v.1).mod_floor(&r) == 0
}

/// Lattice length, in the weighted lattice, of the face of the Newton
/// polygon of `mons` on which `rho` is minimized.
fn face_len(mons: &[(i64, i64)], rho: &Pt, r: i64, w: i64) -> u32 {
    let vals: Vec<Frac> = mons.iter().map(|&(x, y)| rho.0.scale(x) + rho.1.scale(y)).collect();
    let Some(mn) = vals.iter().min() else {
        return 0;
    };
    let face: Vec<(i64, i64)> = mons
        .iter()
        .zip(&vals)
        .filter(|(_, v)| *v == mn)
        .map(|(m, _)| *m)
        .collect();
    if face.len() < 2 {
        return 0;
    }
    let proj = |m: &(i64, i64)| rho.0.scale(m.1) - rho.1.scale(m.0);
    let lo = face.iter().min_by_key(|m| proj(m)).expect("nonempty");
    let hi = face.iter().max_by_key(|m| proj(m)).expect("nonempty");
    let v = (hi.0 - lo.0, hi.1 - lo.1);
    let g = v.0.abs().gcd(&v.1.abs());
    let u = (v.0 / g, v.1 / g);
    let t = (1..)
        .find(|t| in_lattice((u.0 * t, u.1 * t), r, w))
        .expect("r·u is in the lattice");
    (g / t) as u32
}

/// Where a general member of `|nσ + mF|` on `F_a` meets the resolved central
/// fiber, derived from the Newton polygons of its local equations at `σ(0)`
/// and `τ(0)`.
pub fn derive_attach_spec(n: u32, m: &Frac, a: &Frac, r: i64) -> Result<AttachSpec, ResolveError> {
    let scroll = Scroll::new(r, a.clone())?;
    ScrollDivisor::new(&scroll, n, m.clone())?;
    let layout = fiber_layout(r, a)?;
    if layout.directrix.is_none() {
        return Ok(AttachSpec::default().with(Position::Fiber, n));
    }
    let ra = a.times_int(r).expect("checked by Scroll::new");
    if ra.gcd(&r) != 1 {
        return Err(ResolveError::NotCoprime { r, q: ra });
    }
    // Monomials s^{n-i} t^i F^{c_i} with c_i = m - i a ≥ 0; at the orbifold
    // point only the fractional part r·{c_i} of the fiber exponent survives.
    let support: Vec<(i64, Frac)> = (0..=n as i64)
        .map(|i| (i, m - a.scale(i)))
        .filter(|(_, c)| !c.is_negative())
        .collect();
    let frac_k = |c: &Frac| c.fract_part().times_int(r).expect("r·m, r·a are integers");
    let ws = (-ra).mod_floor(&r);
    let wt = ra.mod_floor(&r);
    let ms: Vec<(i64, i64)> = support.iter().map(|(i, c)| (frac_k(c), n as i64 - i)).collect();
    let mt: Vec<(i64, i64)> = support.iter().map(|(i, c)| (frac_k(c), *i)).collect();
    let cs: Vec<u32> = rays(r, ws).iter().map(|rho| face_len(&ms, rho, r, ws)).collect();
    let mut ct: Vec<u32> = rays(r, wt).iter().map(|rho| face_len(&mt, rho, r, wt)).collect();
    ct.reverse();

    let zeros: Vec<i64> = support
        .iter()
        .filter(|(_, c)| c.is_integer())
        .map(|(i, _)| *i)
        .collect();
    let ell = r / r.gcd(&ra);
    let fiber_count = match (zeros.iter().min(), zeros.iter().max()) {
        (Some(lo), Some(hi)) => ((hi - lo) / ell) as u32,
        _ => 0,
    };
    let mut c_sigma = m - a.scale(n as i64);
    for (c, k) in layout.directrix_pullback.iter().zip(&cs) {
        c_sigma -= c.scale(*k as i64);
    }
    let c_sigma = c_sigma
        .to_i64()
        .filter(|x| c_sigma.is_integer() && *x >= 0)
        .ok_or_else(|| ResolveError::NonIntegral(format!("C·σ̂ = {}", c_sigma)))?;

    let mut spec = AttachSpec::default();
    for (i, k) in cs.iter().enumerate() {
        spec = spec.with(Position::SigmaChain(i), *k);
    }
    spec = spec.with(Position::Fiber, fiber_count);
    for (i, k) in ct.iter().enumerate() {
        spec = spec.with(Position::TauChain(i), *k);
    }
    Ok(spec.with(Position::Directrix, c_sigma as u32))
}
