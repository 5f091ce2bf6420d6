//! Marked curve configurations on a resolved central fiber.
//!
//! A vertex carries a self-intersection and a role; an edge carries an
//! intersection multiplicity and the point where it happens. Edges sharing a
//! point id pass through the same point of the surface.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::ResolveError;

/// What a vertex of a [`CurveConfig`] stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Role {
    FiberComponent,
    Directrix,
    MainCurve,
}

impl Role {
    fn token(self) -> &'static str {
        match self {
            Role::FiberComponent => "fiber",
            Role::Directrix => "directrix",
            Role::MainCurve => "main",
        }
    }

    fn parse(s: &str) -> Option<Role> {
        match s {
            "fiber" => Some(Role::FiberComponent),
            "directrix" => Some(Role::Directrix),
            "main" => Some(Role::MainCurve),
            _ => None,
        }
    }
}

/// A curve in the configuration. `self_int` is `None` for a main curve whose
/// self-intersection is not tracked.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub id: usize,
    pub self_int: Option<i64>,
    pub role: Role,
}

/// An intersection of multiplicity `multiplicity` between `v` and `w` at `point`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub v: usize,
    pub w: usize,
    pub multiplicity: u32,
    pub point: u32,
}

impl Edge {
    /// The endpoint other than `x`.
    pub fn other(&self, x: usize) -> usize {
        if self.v == x {
            self.w
        } else {
            self.v
        }
    }

    pub fn touches(&self, x: usize) -> bool {
        self.v == x || self.w == x
    }

    fn key(&self) -> (usize, usize) {
        (self.v.min(self.w), self.v.max(self.w))
    }
}

/// Dual graph of the curves in a degenerate fiber together with a marked curve.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveConfig {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
}

impl CurveConfig {
    pub fn vertex(&self, id: usize) -> Option<&Vertex> {
        self.vertices.iter().find(|v| v.id == id)
    }

    pub fn vertex_mut(&mut self, id: usize) -> Option<&mut Vertex> {
        self.vertices.iter_mut().find(|v| v.id == id)
    }

    /// Id of the main curve, if present.
    pub fn main_id(&self) -> Option<usize> {
        self.vertices.iter().find(|v| v.role == Role::MainCurve).map(|v| v.id)
    }

    /// Total intersection number of `x` and `y`.
    pub fn dot(&self, x: usize, y: usize) -> u32 {
        self.edges
            .iter()
            .filter(|e| e.key() == (x.min(y), x.max(y)))
            .map(|e| e.multiplicity)
            .sum()
    }

    /// Intersection of `x` with the main curve, zero when there is none.
    pub fn main_dot(&self, x: usize) -> u32 {
        self.main_id().map_or(0, |c| self.dot(c, x))
    }

    /// A point id not used by any edge.
    pub fn fresh_point(&self) -> u32 {
        self.edges.iter().map(|e| e.point + 1).max().unwrap_or(0)
    }

    /// Adds an edge at a fresh point.
    pub fn add_edge(&mut self, v: usize, w: usize, multiplicity: u32) {
        let point = self.fresh_point();
        self.edges.push(Edge {
            v,
            w,
            multiplicity,
            point,
        });
    }

    /// Fiber components, self-intersections sorted ascending.
    pub fn fiber_self_ints(&self) -> Vec<i64> {
        let mut out: Vec<i64> = self
            .vertices
            .iter()
            .filter(|v| v.role == Role::FiberComponent)
            .filter_map(|v| v.self_int)
            .collect();
        out.sort();
        out
    }

    /// Checks the structural invariants.
    pub fn validate(&self) -> Result<(), ResolveError> {
        let mut ids = BTreeSet::new();
        for v in &self.vertices {
            if !ids.insert(v.id) {
                return Err(ResolveError::InvalidConfig(format!("duplicate vertex {}", v.id)));
            }
            if v.role != Role::MainCurve && v.self_int.is_none() {
                return Err(ResolveError::InvalidConfig(format!(
                    "vertex {} lacks a self-intersection",
                    v.id
                )));
            }
        }
        for role in [Role::Directrix, Role::MainCurve] {
            if self.vertices.iter().filter(|v| v.role == role).count() > 1 {
                return Err(ResolveError::InvalidConfig(format!(
                    "more than one {} vertex",
                    role.token()
                )));
            }
        }
        for e in &self.edges {
            if e.v == e.w {
                return Err(ResolveError::InvalidConfig(format!("self-loop at {}", e.v)));
            }
            if e.multiplicity == 0 {
                return Err(ResolveError::InvalidConfig("zero multiplicity".into()));
            }
            for x in [e.v, e.w] {
                if !ids.contains(&x) {
                    return Err(ResolveError::UnknownVertex(x));
                }
            }
        }
        Ok(())
    }

    /// Point groups: for each point, the sorted edges through it.
    fn point_groups(&self, map: &dyn Fn(usize) -> usize) -> Vec<Vec<(usize, usize, u32)>> {
        let mut groups: BTreeMap<u32, Vec<(usize, usize, u32)>> = BTreeMap::new();
        for e in &self.edges {
            let (a, b) = (map(e.v), map(e.w));
            groups
                .entry(e.point)
                .or_default()
                .push((a.min(b), a.max(b), e.multiplicity));
        }
        let mut out: Vec<Vec<(usize, usize, u32)>> = groups
            .into_values()
            .map(|mut g| {
                g.sort();
                g
            })
            .collect();
        out.sort();
        out
    }

    /// Graph isomorphism preserving roles, self-intersections, multiplicities
    /// and point coincidences.
    pub fn is_isomorphic(&self, other: &CurveConfig) -> bool {
        if self.vertices.len() != other.vertices.len() || self.edges.len() != other.edges.len() {
            return false;
        }
        let label = |v: &Vertex| (v.role, v.self_int);
        let mut a: Vec<_> = self.vertices.iter().map(label).collect();
        let mut b: Vec<_> = other.vertices.iter().map(label).collect();
        a.sort();
        b.sort();
        if a != b {
            return false;
        }
        let target = other.point_groups(&|x| index_of(other, x));
        let n = self.vertices.len();
        let mut assign: Vec<Option<usize>> = vec![None; n];
        let mut used = vec![false; n];
        self.search(other, 0, &mut assign, &mut used, &target)
    }

    fn search(
        &self,
        other: &CurveConfig,
        k: usize,
        assign: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        target: &[Vec<(usize, usize, u32)>],
    ) -> bool {
        if k == self.vertices.len() {
            let groups = self.point_groups(&|x| assign[index_of(self, x)].expect("complete"));
            return groups == target;
        }
        let v = &self.vertices[k];
        for (j, w) in other.vertices.iter().enumerate() {
            if used[j] || w.role != v.role || w.self_int != v.self_int {
                continue;
            }
            used[j] = true;
            assign[k] = Some(j);
            if self.search(other, k + 1, assign, used, target) {
                return true;
            }
            used[j] = false;
            assign[k] = None;
        }
        false
    }

    /// Line-oriented text form: `v <id> <self_int|?> <role>` and
    /// `e <id> <id> <mult> [@k]`, where `@k` marks edges through a common point.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut vs: Vec<&Vertex> = self.vertices.iter().collect();
        vs.sort_by_key(|v| v.id);
        for v in vs {
            let s = v.self_int.map_or("?".to_string(), |x| x.to_string());
            let _ = writeln!(out, "v {} {} {}", v.id, s, v.role.token());
        }
        let mut es: Vec<&Edge> = self.edges.iter().collect();
        es.sort_by_key(|e| (e.key(), e.multiplicity, e.point));
        let mut count: BTreeMap<u32, usize> = BTreeMap::new();
        for e in &es {
            *count.entry(e.point).or_default() += 1;
        }
        let mut tags: BTreeMap<u32, usize> = BTreeMap::new();
        for e in es {
            let (a, b) = e.key();
            let _ = write!(out, "e {} {} {}", b, a, e.multiplicity);
            if count[&e.point] > 1 {
                let next = tags.len() + 1;
                let t = *tags.entry(e.point).or_insert(next);
                let _ = write!(out, " @{}", t);
            }
            out.push('\n');
        }
        out
    }

    /// Parses [`CurveConfig::to_text`] output. Blank lines and `#` comments
    /// are skipped.
    pub fn from_text(text: &str) -> Result<CurveConfig, ResolveError> {
        let mut cfg = CurveConfig::default();
        let mut tags: BTreeMap<String, u32> = BTreeMap::new();
        let mut pending: Vec<(usize, usize, u32, Option<String>)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = || ResolveError::Parse {
                line: lineno + 1,
                text: raw.to_string(),
            };
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks.as_slice() {
                ["v", id, s, role] => {
                    let id = id.parse().map_err(|_| bad())?;
                    let self_int = if *s == "?" {
                        None
                    } else {
                        Some(s.parse().map_err(|_| bad())?)
                    };
                    let role = Role::parse(role).ok_or_else(bad)?;
                    cfg.vertices.push(Vertex { id, self_int, role });
                }
                ["e", a, b, m, rest @ ..] => {
                    let a = a.parse().map_err(|_| bad())?;
                    let b = b.parse().map_err(|_| bad())?;
                    let m = m.parse().map_err(|_| bad())?;
                    let tag = match rest {
                        [] => None,
                        [t] if t.starts_with('@') => Some(t[1..].to_string()),
                        _ => return Err(bad()),
                    };
                    pending.push((a, b, m, tag));
                }
                _ => return Err(bad()),
            }
        }
        let mut next = 0u32;
        for (v, w, multiplicity, tag) in pending {
            let point = match tag {
                Some(t) => *tags.entry(t).or_insert_with(|| {
                    next += 1;
                    next - 1
                }),
                None => {
                    next += 1;
                    next - 1
                }
            };
            cfg.edges.push(Edge {
                v,
                w,
                multiplicity,
                point,
            });
        }
        cfg.validate()?;
        Ok(cfg)
    }

    /// Graphviz rendering; vertices are labeled by self-intersection and edges
    /// by multiplicity when it exceeds one.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph \"{}\" {{\n", name);
        let mut vs: Vec<&Vertex> = self.vertices.iter().collect();
        vs.sort_by_key(|v| v.id);
        for v in vs {
            let (label, shape) = match v.role {
                Role::MainCurve => ("C".to_string(), "box"),
                Role::Directrix => (format!("σ ({})", v.self_int.unwrap_or_default()), "ellipse"),
                Role::FiberComponent => (v.self_int.unwrap_or_default().to_string(), "circle"),
            };
            let _ = writeln!(out, "  v{} [label=\"{}\", shape={}];", v.id, label, shape);
        }
        let mut es: Vec<&Edge> = self.edges.iter().collect();
        es.sort_by_key(|e| (e.key(), e.multiplicity, e.point));
        for e in es {
            let (a, b) = e.key();
            if e.multiplicity > 1 {
                let _ = writeln!(out, "  v{} -- v{} [label=\"{}\"];", a, b, e.multiplicity);
            } else {
                let _ = writeln!(out, "  v{} -- v{};", a, b);
            }
        }
        out.push_str("}\n");
        out
    }
}

fn index_of(cfg: &CurveConfig, id: usize) -> usize {
    cfg.vertices
        .iter()
        .position(|v| v.id == id)
        .expect("edge endpoints are validated")
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
v 0 -1 directrix
v 1 -2 fiber
v 2 -1 fiber
v 3 ? main
e 0 1 1
e 1 2 1
e 3 2 1
e 3 2 2 @a
e 3 1 1 @a
";

    #[test]
    fn text_round_trip() {
        let cfg = CurveConfig::from_text(SAMPLE).unwrap();
        assert_eq!(cfg.vertices.len(), 4);
        assert_eq!(cfg.dot(3, 2), 3);
        let again = CurveConfig::from_text(&cfg.to_text()).unwrap();
        assert!(cfg.is_isomorphic(&again));
        assert_eq!(again.to_text(), cfg.to_text());
    }

    #[test]
    fn coincidence_tags_matter_for_isomorphism() {
        let a = CurveConfig::from_text(SAMPLE).unwrap();
        let b = CurveConfig::from_text(&SAMPLE.replace("@a\ne 3 1 1 @a", "\ne 3 1 1")).unwrap();
        assert!(!a.is_isomorphic(&b));
    }

    #[test]
    fn isomorphism_ignores_ids() {
        let a = CurveConfig::from_text("v 0 0 fiber\nv 1 -2 fiber\nv 2 ? main\ne 0 1 1\ne 2 0 1\ne 2 0 1\n").unwrap();
        let b = CurveConfig::from_text("v 7 -2 fiber\nv 3 0 fiber\nv 9 ? main\ne 7 3 1\ne 9 3 1\ne 3 9 1\n").unwrap();
        assert!(a.is_isomorphic(&b));
        let c = CurveConfig::from_text("v 7 -2 fiber\nv 3 0 fiber\nv 9 ? main\ne 7 3 1\ne 9 3 1\ne 7 9 1\n").unwrap();
        assert!(!a.is_isomorphic(&c));
    }

    #[test]
    fn validation_errors() {
        assert!(matches!(
            CurveConfig::from_text("v 0 -1 fiber\ne 0 4 1\n"),
            Err(ResolveError::UnknownVertex(4))
        ));
        assert!(CurveConfig::from_text("v 0 -1 fiber\ne 0 0 1\n").is_err());
        assert!(CurveConfig::from_text("v 0 ? fiber\n").is_err());
        assert!(CurveConfig::from_text("v 0 ? main\nv 1 ? main\n").is_err());
        assert!(matches!(
            CurveConfig::from_text("x 1"),
            Err(ResolveError::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn dot_output_labels() {
        let cfg = CurveConfig::from_text(SAMPLE).unwrap();
        let dot = cfg.to_dot("sample");
        assert!(dot.starts_with("graph \"sample\" {"));
        assert!(dot.contains("v3 [label=\"C\", shape=box];"));
        assert!(dot.contains("v2 -- v3 [label=\"2\"];"));
    }
}
