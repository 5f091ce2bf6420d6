//! Successive blow-downs of `(-1)`-curves in a [`CurveConfig`].

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::config::{CurveConfig, Edge, Role};
use super::ResolveError;

/// Result of a full contraction run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Contraction {
    pub config: CurveConfig,
    /// Vertex ids in the order they were contracted.
    pub order: Vec<usize>,
    /// δ-invariant acquired by the main curve from the blow-downs.
    pub delta: u64,
}

/// Non-main vertices of self-intersection `-1`.
fn eligible(cfg: &CurveConfig) -> Vec<usize> {
    let mut out: Vec<usize> = cfg
        .vertices
        .iter()
        .filter(|v| v.role != Role::MainCurve && v.self_int == Some(-1))
        .map(|v| v.id)
        .collect();
    out.sort();
    out
}

/// Blows down `v`, returning the δ contribution at the new point.
fn blow_down(cfg: &mut CurveConfig, v: usize) -> u64 {
    let (ve, rest): (Vec<Edge>, Vec<Edge>) = cfg.edges.drain(..).partition(|e| e.touches(v));
    let pts: BTreeSet<u32> = ve.iter().map(|e| e.point).collect();
    let p = rest.iter().chain(&ve).map(|e| e.point + 1).max().unwrap_or(0);

    let mut through: BTreeMap<usize, u32> = BTreeMap::new();
    for e in &ve {
        *through.entry(e.other(v)).or_default() += e.multiplicity;
    }
    let mut delta = 0u64;
    for (&d, &mult) in &through {
        let vert = cfg.vertex_mut(d).expect("validated endpoint");
        let sq = (mult as i64) * (mult as i64);
        if vert.role == Role::MainCurve {
            delta += (mult as u64) * (mult as u64 - 1) / 2;
        }
        if let Some(s) = vert.self_int.as_mut() {
            *s += sq;
        }
    }

    let mut absorbed = vec![false; rest.len()];
    let mut fresh = Vec::new();
    for (i, al) in ve.iter().enumerate() {
        for be in &ve[i + 1..] {
            let (d, e) = (al.other(v), be.other(v));
            if d == e {
                continue;
            }
            let mut mult = al.multiplicity * be.multiplicity;
            if al.point == be.point {
                for (k, g) in rest.iter().enumerate() {
                    if !absorbed[k] && g.point == al.point && g.touches(d) && g.touches(e) {
                        mult += g.multiplicity;
                        absorbed[k] = true;
                    }
                }
            }
            fresh.push(Edge {
                v: d,
                w: e,
                multiplicity: mult,
                point: p,
            });
        }
    }
    cfg.edges = rest
        .into_iter()
        .zip(absorbed)
        .filter(|(_, gone)| !gone)
        .map(|(mut g, _)| {
            if pts.contains(&g.point) {
                g.point = p;
            }
            g
        })
        .chain(fresh)
        .collect();
    cfg.vertices.retain(|x| x.id != v);
    delta
}

/// Contracts `(-1)`-curves until none remain, letting `choose` pick the next
/// one among the eligible ids (sorted ascending). The directrix is eligible;
/// the main curve never is. A tracked main-curve self-intersection grows by
/// the square of its multiplicity at each contracted curve.
pub fn contract_with(
    cfg: &CurveConfig,
    mut choose: impl FnMut(&CurveConfig, &[usize]) -> usize,
) -> Result<Contraction, ResolveError> {
    cfg.validate()?;
    let mut cur = cfg.clone();
    let mut order = Vec::new();
    let mut delta = 0;
    loop {
        let el = eligible(&cur);
        if el.is_empty() {
            break;
        }
        let v = choose(&cur, &el);
        if !el.contains(&v) {
            return Err(ResolveError::InvalidConfig(format!("vertex {} is not a (-1)-curve", v)));
        }
        delta += blow_down(&mut cur, v);
        order.push(v);
    }
    Ok(Contraction {
        config: cur,
        order,
        delta,
    })
}

/// Default order: the eligible curve meeting the main curve least, then the
/// smallest id.
pub fn default_choice(cfg: &CurveConfig, el: &[usize]) -> usize {
    *el.iter()
        .min_by_key(|&&v| (cfg.main_dot(v), v))
        .expect("called with a nonempty list")
}

/// Contracts all `(-1)`-curves in the default order.
pub fn contract_minus_ones(cfg: &CurveConfig) -> Result<CurveConfig, ResolveError> {
    contract_with(cfg, default_choice).map(|c| c.config)
}
