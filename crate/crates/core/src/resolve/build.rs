//! The minimal resolution of the coarse central fiber of `F_a`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::config::{CurveConfig, Edge, Role, Vertex};
use super::ResolveError;
use crate::frac::Frac;
use crate::orbiscroll::{coarse_singularities, Scroll};

/// A curve of the resolved central fiber, addressed by its place in the chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Position {
    Directrix,
    /// 0-based, counted from the directrix toward the fiber.
    SigmaChain(usize),
    Fiber,
    /// 0-based, counted from the fiber outward.
    TauChain(usize),
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Position::Directrix => write!(f, "sigma"),
            Position::SigmaChain(i) => write!(f, "s{}", i + 1),
            Position::Fiber => write!(f, "F"),
            Position::TauChain(i) => write!(f, "t{}", i + 1),
        }
    }
}

/// One transverse intersection of the main curve with a fiber curve, or a
/// tangency when `multiplicity > 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Attachment {
    pub at: Position,
    pub multiplicity: u32,
}

/// Where the main curve meets the resolved fiber; every attachment is at its
/// own point.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttachSpec {
    pub attachments: Vec<Attachment>,
}

impl AttachSpec {
    /// `count` unit attachments at `at`.
    pub fn with(mut self, at: Position, count: u32) -> Self {
        for _ in 0..count {
            self.attachments.push(Attachment { at, multiplicity: 1 });
        }
        self
    }

    /// Total intersection with the curve at `at`.
    pub fn total_at(&self, at: Position) -> u32 {
        self.attachments
            .iter()
            .filter(|x| x.at == at)
            .map(|x| x.multiplicity)
            .sum()
    }
}

impl fmt::Display for AttachSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .attachments
            .iter()
            .map(|x| {
                if x.multiplicity == 1 {
                    x.at.to_string()
                } else {
                    format!("{}^{}", x.at, x.multiplicity)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Vertex ids of the resolved fiber, before the main curve is attached.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberLayout {
    pub directrix: Option<usize>,
    pub sigma_chain: Vec<usize>,
    pub fiber: usize,
    pub tau_chain: Vec<usize>,
    /// Coefficients of the exceptional curves of the σ-chain in the pullback
    /// of the coarse directrix.
    pub directrix_pullback: Vec<Frac>,
    pub config: CurveConfig,
}

impl FiberLayout {
    pub fn id(&self, at: Position) -> Option<usize> {
        match at {
            Position::Directrix => self.directrix,
            Position::SigmaChain(i) => self.sigma_chain.get(i).copied(),
            Position::Fiber => Some(self.fiber),
            Position::TauChain(i) => self.tau_chain.get(i).copied(),
        }
    }

    /// The exceptional curves of both chains.
    pub fn exceptional(&self) -> Vec<usize> {
        self.sigma_chain.iter().chain(&self.tau_chain).copied().collect()
    }
}

/// Solves `m x = rhs` over the rationals; `None` when `m` is singular.
pub(crate) fn solve_linear(m: &[Vec<Frac>], rhs: &[Frac]) -> Option<Vec<Frac>> {
    let k = rhs.len();
    let mut rows: Vec<Vec<Frac>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    for col in 0..k {
        let piv = (col..k).find(|&i| !rows[i][col].is_zero())?;
        rows.swap(col, piv);
        for i in 0..k {
            if i != col && !rows[i][col].is_zero() {
                let f = &rows[i][col] / &rows[col][col];
                let pivot = rows[col].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some((0..k).map(|i| &rows[i][k] / &rows[i][i]).collect())
}

/// Lays out the minimal resolution of the coarse central fiber.
///
/// Ids: the directrix is 0, then the σ-chain, the fiber, and the τ-chain
/// listed from the fiber outward. For integral `a` the fiber is a single
/// smooth 0-curve with id 0.
pub fn fiber_layout(r: i64, a: &Frac) -> Result<FiberLayout, ResolveError> {
    let scroll = Scroll::new(r, a.clone())?;
    let sing = coarse_singularities(r, &scroll.a)?;
    let mut cfg = CurveConfig::default();
    if sing.at_sigma.is_smooth() && sing.at_tau.is_smooth() {
        cfg.vertices.push(Vertex {
            id: 0,
            self_int: Some(0),
            role: Role::FiberComponent,
        });
        return Ok(FiberLayout {
            directrix: None,
            sigma_chain: vec![],
            fiber: 0,
            tau_chain: vec![],
            directrix_pullback: vec![],
            config: cfg,
        });
    }
    let sch = sing.at_sigma.chain();
    let tch = sing.at_tau.chain().reversed();
    let ks = sch.len();

    // The proper transform σ̂ of the directrix satisfies σ̂·E_i = 0 after
    // adding back Σ c_j E_j; this pins both c and σ̂².
    let mut mat = vec![vec![Frac::zero(); ks]; ks];
    for i in 0..ks {
        mat[i][i] = Frac::int(-sch.ints[i]);
        if i + 1 < ks {
            mat[i][i + 1] = Frac::one();
            mat[i + 1][i] = Frac::one();
        }
    }
    let mut rhs = vec![Frac::zero(); ks];
    rhs[0] = Frac::int(-1);
    let c = solve_linear(&mat, &rhs).expect("HJ chains are negative definite");
    let sigma2 = -&scroll.a - &c[0];
    let sigma2 = sigma2
        .to_i64()
        .filter(|_| sigma2.is_integer())
        .ok_or_else(|| ResolveError::NonIntegral(format!("directrix self-intersection {}", sigma2)))?;

    let sigma_chain: Vec<usize> = (1..=ks).collect();
    let fiber = ks + 1;
    let tau_chain: Vec<usize> = (ks + 2..ks + 2 + tch.len()).collect();
    cfg.vertices.push(Vertex {
        id: 0,
        self_int: Some(sigma2),
        role: Role::Directrix,
    });
    for (id, b) in sigma_chain.iter().zip(&sch.ints) {
        cfg.vertices.push(Vertex {
            id: *id,
            self_int: Some(-b),
            role: Role::FiberComponent,
        });
    }
    cfg.vertices.push(Vertex {
        id: fiber,
        self_int: Some(-1),
        role: Role::FiberComponent,
    });
    for (id, b) in tau_chain.iter().zip(&tch.ints) {
        cfg.vertices.push(Vertex {
            id: *id,
            self_int: Some(-b),
            role: Role::FiberComponent,
        });
    }
    let path: Vec<usize> = (0..ks + 2 + tch.len()).collect();
    for (k, w) in path.windows(2).enumerate() {
        cfg.edges.push(Edge {
            v: w[0],
            w: w[1],
            multiplicity: 1,
            point: k as u32,
        });
    }
    Ok(FiberLayout {
        directrix: Some(0),
        sigma_chain,
        fiber,
        tau_chain,
        directrix_pullback: c,
        config: cfg,
    })
}

/// The resolved central fiber of `F_a` over the orbifold point of order `r`,
/// with the main curve attached per `spec`. The main curve is omitted when
/// `spec` is empty.
pub fn build_coarse_fiber_config(r: i64, a: &Frac, spec: &AttachSpec) -> Result<CurveConfig, ResolveError> {
    let layout = fiber_layout(r, a)?;
    attach(&layout, spec)
}

pub(crate) fn attach(layout: &FiberLayout, spec: &AttachSpec) -> Result<CurveConfig, ResolveError> {
    let mut cfg = layout.config.clone();
    if spec.attachments.is_empty() {
        return Ok(cfg);
    }
    let main = cfg.vertices.iter().map(|v| v.id + 1).max().unwrap_or(0);
    cfg.vertices.push(Vertex {
        id: main,
        self_int: None,
        role: Role::MainCurve,
    });
    for x in &spec.attachments {
        if x.multiplicity == 0 {
            return Err(ResolveError::InvalidConfig("zero attach multiplicity".into()));
        }
        let id = layout
            .id(x.at)
            .ok_or_else(|| ResolveError::MissingPosition(x.at.to_string()))?;
        cfg.add_edge(main, id, x.multiplicity);
    }
    Ok(cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frac::q;

    fn selfs(cfg: &CurveConfig) -> Vec<Option<i64>> {
        let mut vs = cfg.vertices.clone();
        vs.sort_by_key(|v| v.id);
        vs.iter().map(|v| v.self_int).collect()
    }

    #[test]
    fn item_one_left_diagram() {
        let spec = AttachSpec::default().with(Position::Fiber, 2);
        let cfg = build_coarse_fiber_config(2, &q(1, 2), &spec).unwrap();
        assert_eq!(selfs(&cfg), vec![Some(-1), Some(-2), Some(-1), Some(-2), None]);
        assert_eq!(cfg.dot(4, 2), 2);
        assert_eq!(cfg.dot(0, 1), 1);
        assert_eq!(cfg.dot(1, 2), 1);
        assert_eq!(cfg.dot(2, 3), 1);
    }

    #[test]
    fn item_five_left_diagram() {
        let spec = AttachSpec::default()
            .with(Position::SigmaChain(0), 1)
            .with(Position::Fiber, 1);
        let cfg = build_coarse_fiber_config(3, &q(1, 3), &spec).unwrap();
        assert_eq!(
            selfs(&cfg),
            vec![Some(-1), Some(-2), Some(-2), Some(-1), Some(-3), None]
        );
        assert_eq!(cfg.dot(0, 1), 1);
        assert_eq!(cfg.dot(1, 2), 1);
        assert_eq!(cfg.dot(3, 4), 1);
        assert_eq!(cfg.dot(5, 1), 1);
        assert_eq!(cfg.dot(5, 3), 1);
    }

    #[test]
    fn item_eight_left_diagram() {
        let spec = AttachSpec::default()
            .with(Position::SigmaChain(0), 1)
            .with(Position::Fiber, 1);
        let cfg = build_coarse_fiber_config(3, &q(2, 3), &spec).unwrap();
        assert_eq!(
            selfs(&cfg),
            vec![Some(-1), Some(-3), Some(-1), Some(-2), Some(-2), None]
        );
        assert_eq!(cfg.dot(5, 1), 1);
        assert_eq!(cfg.dot(5, 2), 1);
    }

    #[test]
    fn directrix_square_on_twisted_chains() {
        let l = fiber_layout(2, &q(3, 2)).unwrap();
        assert_eq!(l.config.vertex(0).unwrap().self_int, Some(-2));
        let l = fiber_layout(3, &q(1, 3)).unwrap();
        assert_eq!(l.config.vertex(0).unwrap().self_int, Some(-1));
        assert_eq!(l.directrix_pullback, vec![q(2, 3), q(1, 3)]);
    }

    #[test]
    fn integral_twist_is_a_smooth_fiber() {
        let cfg = build_coarse_fiber_config(1, &Frac::zero(), &AttachSpec::default()).unwrap();
        assert_eq!(cfg.vertices.len(), 1);
        assert_eq!(cfg.vertices[0].self_int, Some(0));
        let spec = AttachSpec::default().with(Position::Directrix, 1);
        assert!(matches!(
            build_coarse_fiber_config(1, &Frac::int(2), &spec),
            Err(ResolveError::MissingPosition(_))
        ));
    }

    #[test]
    fn rejects_missing_chain_position() {
        let spec = AttachSpec::default().with(Position::TauChain(3), 1);
        assert!(matches!(
            build_coarse_fiber_config(2, &q(1, 2), &spec),
            Err(ResolveError::MissingPosition(p)) if p == "t4"
        ));
    }

    #[test]
    fn solve_linear_small_system() {
        let m = vec![vec![q(2, 1), Frac::one()], vec![Frac::one(), q(3, 1)]];
        let x = solve_linear(&m, &[Frac::int(3), Frac::int(4)]).unwrap();
        assert_eq!(x, vec![Frac::one(), Frac::one()]);
        let sing = vec![vec![Frac::one(), Frac::one()], vec![Frac::one(), Frac::one()]];
        assert!(solve_linear(&sing, &[Frac::one(), Frac::zero()]).is_none());
    }
}
