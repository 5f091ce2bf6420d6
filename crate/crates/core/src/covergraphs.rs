//! Dual graphs of admissible covers of a one-tail degeneration of the base.
//!
//! The base `Z` has a main component `M` and a tail `T` meeting at a node
//! `t`; the marked points `0`, `1`, `∞` are distributed between them
//! according to a [`BaseShape`]. The cover has ramification `(2,2,…)` over
//! `0`, `(3,3,…)` over `1` and is étale over `∞`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

/// Failures of the cover-graph constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("shape {0} has no tail branch-count formula")]
    NoTailFormula(BaseShape),
    #[error("tail degree {e} is not divisible by {by} in shape {shape}")]
    Divisibility { shape: BaseShape, e: u32, by: u32 },
    #[error("a tail component needs at least one point over the node")]
    NoNodePoints,
    #[error("main component {component}: {residual} left over the node is not a multiple of {local}")]
    NoIntegralCompletion {
        component: usize,
        residual: i64,
        local: u32,
    },
    #[error("node edge references unknown component {0}")]
    UnknownComponent(usize),
}

/// Placement of the marked points on the main component and the tail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BaseShape {
    /// `0, 1, ∞` on the main component.
    I,
    /// `0` on the tail.
    II,
    /// `1` on the tail.
    III,
    /// `∞` on the tail.
    IV,
}

impl BaseShape {
    pub const ALL: [BaseShape; 4] = [BaseShape::I, BaseShape::II, BaseShape::III, BaseShape::IV];

    /// The marked point on the tail, if any.
    pub fn tail_point(self) -> Option<MarkedPoint> {
        match self {
            BaseShape::I => None,
            BaseShape::II => Some(MarkedPoint::Zero),
            BaseShape::III => Some(MarkedPoint::One),
            BaseShape::IV => Some(MarkedPoint::Infinity),
        }
    }

    /// Side carrying `p`.
    pub fn side_of(self, p: MarkedPoint) -> Side {
        if self.tail_point() == Some(p) {
            Side::Tail
        } else {
            Side::Main
        }
    }

    /// Degree (and local degree at the node) of a redundant tail component.
    pub fn redundant_degree(self) -> u32 {
        match self {
            BaseShape::I | BaseShape::IV => 1,
            BaseShape::II => 2,
            BaseShape::III => 3,
        }
    }

    /// Dimension of the automorphisms of the tail fixing the node and its
    /// marked point.
    fn tail_aut_dim(self) -> u32 {
        if self.tail_point().is_some() {
            1
        } else {
            2
        }
    }

    /// Whether the node moves on the main component.
    fn node_moves(self) -> bool {
        self.tail_point().is_none()
    }
}

impl fmt::Display for BaseShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BaseShape::I => "I",
            BaseShape::II => "II",
            BaseShape::III => "III",
            BaseShape::IV => "IV",
        };
        f.write_str(s)
    }
}

/// The three marked points of the base.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MarkedPoint {
    Zero,
    One,
    Infinity,
}

impl MarkedPoint {
    pub const ALL: [MarkedPoint; 3] = [MarkedPoint::Zero, MarkedPoint::One, MarkedPoint::Infinity];

    /// The part size of the ramification profile over this point.
    pub fn part(self) -> u32 {
        match self {
            MarkedPoint::Zero => 2,
            MarkedPoint::One => 3,
            MarkedPoint::Infinity => 1,
        }
    }

    fn name(self) -> &'static str {
        match self {
            MarkedPoint::Zero => "0",
            MarkedPoint::One => "1",
            MarkedPoint::Infinity => "inf",
        }
    }
}

/// Which component of the base a cover component lies over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Main,
    Tail,
}

/// A ramification profile, parts sorted descending.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RamProfile {
    pub parts: Vec<u32>,
}

impl RamProfile {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.sort_by(|a, b| b.cmp(a));
        RamProfile { parts }
    }

    pub fn degree(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Contribution `Σ (part − 1)` to Riemann–Hurwitz.
    pub fn ramification(&self) -> u32 {
        self.parts.iter().map(|p| p - 1).sum()
    }
}

impl fmt::Display for RamProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ps: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", ps.join(","))
    }
}

/// A component of the cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub id: usize,
    pub degree: u32,
    pub genus: i64,
    pub redundant: bool,
    /// Simple branch points away from the marked points and the node.
    pub beta: u32,
}

/// A node of the cover over `t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeEdge {
    pub main_id: usize,
    pub tail_id: usize,
    pub local_degree: u32,
}

/// Ramification profiles over `0`, `1`, `∞` of the whole cover.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Profiles {
    pub zero: RamProfile,
    pub one: RamProfile,
    pub infinity: RamProfile,
}

impl Profiles {
    pub fn get(&self, p: MarkedPoint) -> &RamProfile {
        match p {
            MarkedPoint::Zero => &self.zero,
            MarkedPoint::One => &self.one,
            MarkedPoint::Infinity => &self.infinity,
        }
    }

    fn get_mut(&mut self, p: MarkedPoint) -> &mut RamProfile {
        match p {
            MarkedPoint::Zero => &mut self.zero,
            MarkedPoint::One => &mut self.one,
            MarkedPoint::Infinity => &mut self.infinity,
        }
    }
}

/// Dual graph `Γ_P → Γ_Z` of an admissible cover over a one-tail base.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverGraph {
    pub shape: BaseShape,
    pub main_components: Vec<Component>,
    pub tail_components: Vec<Component>,
    pub node_edges: Vec<NodeEdge>,
    pub profiles: Profiles,
}

/// Riemann–Hurwitz over a rational base: `2g − 2 = −2e + ram`; `None` when
/// `ram` is odd.
fn rh_genus(degree: u32, ram: i64) -> Option<i64> {
    let two_g_minus_two = -2 * degree as i64 + ram;
    (two_g_minus_two % 2 == 0).then_some(two_g_minus_two / 2 + 1)
}

impl CoverGraph {
    fn side_of(&self, id: usize) -> Option<Side> {
        if self.main_components.iter().any(|c| c.id == id) {
            Some(Side::Main)
        } else if self.tail_components.iter().any(|c| c.id == id) {
            Some(Side::Tail)
        } else {
            None
        }
    }

    fn components(&self) -> impl Iterator<Item = (Side, &Component)> {
        self.main_components
            .iter()
            .map(|c| (Side::Main, c))
            .chain(self.tail_components.iter().map(|c| (Side::Tail, c)))
    }

    fn locals_at(&self, id: usize) -> Vec<u32> {
        self.node_edges
            .iter()
            .filter(|e| e.main_id == id || e.tail_id == id)
            .map(|e| e.local_degree)
            .collect()
    }

    fn is_redundant(&self, id: usize) -> bool {
        self.tail_components.iter().any(|c| c.id == id && c.redundant)
    }

    /// Total degree over the main component.
    pub fn degree(&self) -> u32 {
        self.main_components.iter().map(|c| c.degree).sum()
    }

    /// Ramification of a component over the marked points and the node,
    /// assuming full profiles; `None` when a profile does not divide.
    fn fixed_ramification(&self, side: Side, c: &Component) -> Option<i64> {
        let mut ram = 0i64;
        for p in MarkedPoint::ALL {
            if self.shape.side_of(p) == side {
                if !c.degree.is_multiple_of(p.part()) {
                    return None;
                }
                ram += ((c.degree / p.part()) * (p.part() - 1)) as i64;
            }
        }
        ram += self.locals_at(c.id).iter().map(|l| *l as i64 - 1).sum::<i64>();
        Some(ram)
    }

    /// The genus of `c` by Riemann–Hurwitz, from its stored β.
    pub fn rh_component_genus(&self, side: Side, c: &Component) -> Option<i64> {
        rh_genus(c.degree, self.fixed_ramification(side, c)? + c.beta as i64)
    }

    /// β forced by a genus-0 component; `None` when negative or non-integral.
    fn genus_zero_beta(&self, side: Side, c: &Component) -> Option<u32> {
        let beta = 2 * c.degree as i64 - 2 - self.fixed_ramification(side, c)?;
        u32::try_from(beta).ok()
    }

    /// Fills in every β from the components' genus-0 requirement.
    fn assign_genus_zero_betas(&mut self) -> bool {
        let mut ok = true;
        let betas: Vec<(Side, usize, Option<u32>)> = self
            .components()
            .map(|(s, c)| (s, c.id, self.genus_zero_beta(s, c)))
            .collect();
        for (s, id, beta) in betas {
            let list = match s {
                Side::Main => &mut self.main_components,
                Side::Tail => &mut self.tail_components,
            };
            let c = list.iter_mut().find(|c| c.id == id).expect("listed");
            match beta {
                Some(b) => {
                    c.beta = b;
                    c.genus = 0;
                }
                None => ok = false,
            }
        }
        ok
    }

    /// Recomputes the profiles over `0`, `1`, `∞` from the components.
    pub fn recompute_profiles(&mut self) {
        let mut profiles = Profiles::default();
        for p in MarkedPoint::ALL {
            let side = self.shape.side_of(p);
            let mut parts = Vec::new();
            for (s, c) in self.components() {
                if s == side {
                    parts.extend(std::iter::repeat_n(p.part(), (c.degree / p.part()) as usize));
                }
            }
            *profiles.get_mut(p) = RamProfile::new(parts);
        }
        self.profiles = profiles;
    }

    /// Simple branch points on the main side.
    pub fn main_beta(&self) -> u32 {
        self.main_components.iter().map(|c| c.beta).sum()
    }

    /// All simple branch points away from the marked points and the node.
    pub fn total_beta(&self) -> u32 {
        self.main_beta() + self.tail_components.iter().map(|c| c.beta).sum::<u32>()
    }

    /// Dimension of the stratum of covers with this dual graph: the moving
    /// branch points, plus the node position when it can move on the main
    /// component, minus the automorphisms of the tail.
    pub fn stratum_dimension(&self) -> i64 {
        self.total_beta() as i64 + self.shape.node_moves() as i64 - self.shape.tail_aut_dim() as i64
    }

    /// Renumbers components canonically: main components by degree and
    /// incident non-redundant locals, then non-redundant tails, then
    /// redundant tails grouped by the main component they meet.
    pub fn canonicalize(&mut self) {
        let nonred_locals = |g: &CoverGraph, id: usize| -> Vec<u32> {
            let mut ls: Vec<u32> = g
                .node_edges
                .iter()
                .filter(|e| e.main_id == id && !g.is_redundant(e.tail_id))
                .map(|e| e.local_degree)
                .collect();
            ls.sort();
            ls
        };
        let mut mains: Vec<(u32, Vec<u32>, u32, i64, usize)> = self
            .main_components
            .iter()
            .map(|c| (c.degree, nonred_locals(self, c.id), c.beta, c.genus, c.id))
            .collect();
        mains.sort();
        let mut remap: BTreeMap<usize, usize> = BTreeMap::new();
        for (k, m) in mains.iter().enumerate() {
            remap.insert(m.4, k);
        }
        let tail_key = |g: &CoverGraph, c: &Component| {
            let mut at: Vec<(usize, u32)> = g
                .node_edges
                .iter()
                .filter(|e| e.tail_id == c.id)
                .map(|e| (remap.get(&e.main_id).copied().unwrap_or(usize::MAX), e.local_degree))
                .collect();
            at.sort();
            (c.redundant, at, c.degree, c.beta, c.genus, c.id)
        };
        let mut tails: Vec<_> = self.tail_components.iter().map(|c| tail_key(self, c)).collect();
        tails.sort();
        let n = mains.len();
        for (k, t) in tails.iter().enumerate() {
            remap.insert(t.5, n + k);
        }
        let re = |id: usize| remap.get(&id).copied().unwrap_or(id);
        for c in self.main_components.iter_mut().chain(self.tail_components.iter_mut()) {
            c.id = re(c.id);
        }
        self.main_components.sort_by_key(|c| c.id);
        self.tail_components.sort_by_key(|c| c.id);
        for e in &mut self.node_edges {
            e.main_id = re(e.main_id);
            e.tail_id = re(e.tail_id);
        }
        self.node_edges.sort_by_key(|e| (e.main_id, e.tail_id, e.local_degree));
    }

    /// JSON with keys `shape`, `components`, `edges`, `profiles`, `beta`.
    pub fn to_json(&self) -> Value {
        let comp = |side: &str, c: &Component| {
            json!({
                "id": c.id,
                "side": side,
                "degree": c.degree,
                "genus": c.genus,
                "redundant": c.redundant,
            })
        };
        let components: Vec<Value> = self
            .main_components
            .iter()
            .map(|c| comp("main", c))
            .chain(self.tail_components.iter().map(|c| comp("tail", c)))
            .collect();
        let edges: Vec<Value> = self
            .node_edges
            .iter()
            .map(|e| json!({"main": e.main_id, "tail": e.tail_id, "local_degree": e.local_degree}))
            .collect();
        let beta: BTreeMap<String, u32> = self.components().map(|(_, c)| (c.id.to_string(), c.beta)).collect();
        json!({
            "shape": self.shape.to_string(),
            "components": components,
            "edges": edges,
            "profiles": {
                "0": self.profiles.zero.parts,
                "1": self.profiles.one.parts,
                "inf": self.profiles.infinity.parts,
            },
            "beta": beta,
        })
    }

    /// Graphviz rendering: the base graph with a doubled circle for the main
    /// component, and the cover components above it.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph \"{}\" {{\n", name);
        out.push_str("  M [label=\"\", shape=doublecircle];\n  T [label=\"\", shape=circle];\n  M -- T;\n");
        for p in MarkedPoint::ALL {
            let base = match self.shape.side_of(p) {
                Side::Main => "M",
                Side::Tail => "T",
            };
            let _ = writeln!(out, "  p{} [label=\"{}\", shape=plaintext];", p.name(), p.name());
            let _ = writeln!(out, "  {} -- p{};", base, p.name());
        }
        for (side, c) in self.components() {
            let style = if c.redundant { ", style=dashed" } else { "" };
            let _ = writeln!(
                out,
                "  c{} [label=\"{}\", shape=circle{}];  // {:?}",
                c.id, c.degree, style, side
            );
        }
        for e in &self.node_edges {
            if e.local_degree > 1 {
                let _ = writeln!(
                    out,
                    "  c{} -- c{} [label=\"{}\"];",
                    e.main_id, e.tail_id, e.local_degree
                );
            } else {
                let _ = writeln!(out, "  c{} -- c{};", e.main_id, e.tail_id);
            }
        }
        out.push_str("}\n");
        out
    }
}

/// A violated admissible-cover axiom.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Diagnostic {
    /// Local degrees at a component do not add up to its degree.
    NodeSum {
        component: usize,
        degree: u32,
        local_sum: u32,
    },
    ZeroLocalDegree {
        main_id: usize,
        tail_id: usize,
    },
    UnknownEndpoint {
        id: usize,
    },
    /// Main and tail sides have different total degrees.
    SideDegrees {
        main: u32,
        tail: u32,
    },
    /// The profile over a marked point is not the required one.
    Profile {
        point: MarkedPoint,
        profile: RamProfile,
        expected_degree: u32,
    },
    /// A component's degree is not divisible by a part size over its side.
    ProfileDivisibility {
        component: usize,
        point: MarkedPoint,
    },
    NonIntegralGenus {
        component: usize,
    },
    NegativeGenus {
        component: usize,
        genus: i64,
    },
    GenusMismatch {
        component: usize,
        stored: i64,
        computed: i64,
    },
    TooManyTails {
        non_redundant: usize,
    },
    /// A redundant component with branching or the wrong shape.
    NotRedundant {
        component: usize,
    },
    /// Left-over degree at a main component cannot be filled by redundant tails.
    NonIntegralCompletion {
        component: usize,
        residual: i64,
        local: u32,
    },
    /// The dual graph of the cover is not a tree.
    NotATree,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::NodeSum {
                component,
                degree,
                local_sum,
            } => write!(
                f,
                "component {}: local degrees sum to {} but degree is {}",
                component, local_sum, degree
            ),
            Diagnostic::ZeroLocalDegree { main_id, tail_id } => {
                write!(f, "node {}-{} has local degree 0", main_id, tail_id)
            }
            Diagnostic::UnknownEndpoint { id } => write!(f, "node references unknown component {}", id),
            Diagnostic::SideDegrees { main, tail } => {
                write!(f, "degree {} over the main component but {} over the tail", main, tail)
            }
            Diagnostic::Profile {
                point,
                profile,
                expected_degree,
            } => write!(
                f,
                "profile {} over {} is not all {}s of total {}",
                profile,
                point.name(),
                point.part(),
                expected_degree
            ),
            Diagnostic::ProfileDivisibility { component, point } => write!(
                f,
                "component {}: degree not divisible by {} over {}",
                component,
                point.part(),
                point.name()
            ),
            Diagnostic::NonIntegralGenus { component } => {
                write!(f, "component {}: Riemann-Hurwitz genus is not an integer", component)
            }
            Diagnostic::NegativeGenus { component, genus } => {
                write!(f, "component {}: genus {} is negative", component, genus)
            }
            Diagnostic::GenusMismatch {
                component,
                stored,
                computed,
            } => write!(
                f,
                "component {}: stored genus {} but Riemann-Hurwitz gives {}",
                component, stored, computed
            ),
            Diagnostic::TooManyTails { non_redundant } => {
                write!(f, "{} non-redundant tail components", non_redundant)
            }
            Diagnostic::NotRedundant { component } => {
                write!(f, "component {} is marked redundant but is not", component)
            }
            Diagnostic::NonIntegralCompletion {
                component,
                residual,
                local,
            } => write!(
                f,
                "component {}: residual degree {} is not a multiple of {}",
                component, residual, local
            ),
            Diagnostic::NotATree => write!(f, "dual graph of the cover is not a tree"),
        }
    }
}

/// Checks the admissible-cover axioms; empty when all hold.
pub fn check_cover(g: &CoverGraph) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    for e in &g.node_edges {
        for (id, want) in [(e.main_id, Side::Main), (e.tail_id, Side::Tail)] {
            if g.side_of(id) != Some(want) {
                out.push(Diagnostic::UnknownEndpoint { id });
            }
        }
        if e.local_degree == 0 {
            out.push(Diagnostic::ZeroLocalDegree {
                main_id: e.main_id,
                tail_id: e.tail_id,
            });
        }
    }
    for (_, c) in g.components() {
        let local_sum: u32 = g.locals_at(c.id).iter().sum();
        if local_sum != c.degree {
            out.push(Diagnostic::NodeSum {
                component: c.id,
                degree: c.degree,
                local_sum,
            });
        }
    }
    let main: u32 = g.main_components.iter().map(|c| c.degree).sum();
    let tail: u32 = g.tail_components.iter().map(|c| c.degree).sum();
    if main != tail {
        out.push(Diagnostic::SideDegrees { main, tail });
    }
    for p in MarkedPoint::ALL {
        let prof = g.profiles.get(p);
        let expected = match g.shape.side_of(p) {
            Side::Main => main,
            Side::Tail => tail,
        };
        if prof.parts.iter().any(|&x| x != p.part()) || prof.degree() != expected {
            out.push(Diagnostic::Profile {
                point: p,
                profile: prof.clone(),
                expected_degree: expected,
            });
        }
    }
    for (side, c) in g.components() {
        let divisible = MarkedPoint::ALL
            .iter()
            .filter(|p| g.shape.side_of(**p) == side)
            .all(|p| c.degree % p.part() == 0);
        if !divisible {
            for p in MarkedPoint::ALL {
                if g.shape.side_of(p) == side && c.degree % p.part() != 0 {
                    out.push(Diagnostic::ProfileDivisibility {
                        component: c.id,
                        point: p,
                    });
                }
            }
            continue;
        }
        match g.rh_component_genus(side, c) {
            None => out.push(Diagnostic::NonIntegralGenus { component: c.id }),
            Some(x) if x < 0 => out.push(Diagnostic::NegativeGenus {
                component: c.id,
                genus: x,
            }),
            Some(x) if x != c.genus => out.push(Diagnostic::GenusMismatch {
                component: c.id,
                stored: c.genus,
                computed: x,
            }),
            _ => {}
        }
    }
    let non_redundant = g.tail_components.iter().filter(|c| !c.redundant).count();
    if non_redundant > 1 {
        out.push(Diagnostic::TooManyTails { non_redundant });
    }
    let rl = g.shape.redundant_degree();
    for c in g.tail_components.iter().filter(|c| c.redundant) {
        if c.degree != rl || c.beta != 0 || g.locals_at(c.id) != vec![rl] {
            out.push(Diagnostic::NotRedundant { component: c.id });
        }
    }
    for c in &g.main_components {
        let residual = c.degree as i64
            - g.node_edges
                .iter()
                .filter(|e| e.main_id == c.id && !g.is_redundant(e.tail_id))
                .map(|e| e.local_degree as i64)
                .sum::<i64>();
        if residual < 0 || residual % rl as i64 != 0 {
            out.push(Diagnostic::NonIntegralCompletion {
                component: c.id,
                residual,
                local: rl,
            });
        }
    }
    if !is_tree(g) {
        out.push(Diagnostic::NotATree);
    }
    out
}

fn is_tree(g: &CoverGraph) -> bool {
    let ids: BTreeSet<usize> = g.components().map(|(_, c)| c.id).collect();
    if ids.is_empty() || g.node_edges.len() + 1 != ids.len() {
        return false;
    }
    let mut seen = BTreeSet::new();
    let mut stack = vec![*ids.iter().next().expect("nonempty")];
    while let Some(x) = stack.pop() {
        if !seen.insert(x) {
            continue;
        }
        for e in &g.node_edges {
            if e.main_id == x {
                stack.push(e.tail_id);
            } else if e.tail_id == x {
                stack.push(e.main_id);
            }
        }
    }
    seen == ids
}

/// Branch points of a tail component away from the node, counting the tail's
/// marked point when the component ramifies over it.
pub fn branch_count_tail(shape: BaseShape, e: u32, s: u32) -> Result<u32, CoverError> {
    if s == 0 {
        return Err(CoverError::NoNodePoints);
    }
    match shape {
        BaseShape::I => Ok(e + s - 2),
        BaseShape::II if e.is_multiple_of(2) => Ok(e / 2 + s - 1),
        BaseShape::III if e.is_multiple_of(3) => Ok(e / 3 + s - 1),
        BaseShape::II => Err(CoverError::Divisibility { shape, e, by: 2 }),
        BaseShape::III => Err(CoverError::Divisibility { shape, e, by: 3 }),
        BaseShape::IV => Err(CoverError::NoTailFormula(shape)),
    }
}

/// Whether a tail component with `e` sheets and `s` points over the node can
/// occur at the generic point of a divisor: `b − 2 <= max(0, s − 3)`.
pub fn tail_moduli_filter(shape: BaseShape, e: u32, s: u32) -> Result<bool, CoverError> {
    let b = branch_count_tail(shape, e, s)? as i64;
    Ok(b - 2 <= (s as i64 - 3).max(0))
}

/// Tail shapes `(e, s)` with `2 <= s <= e <= max_degree` passing the filter.
pub fn surviving_tails(shape: BaseShape, max_degree: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for s in 2..=max_degree {
        for e in s..=max_degree {
            if let Ok(true) = tail_moduli_filter(shape, e, s) {
                out.push((e, s));
            }
        }
    }
    out
}

/// Partitions of `n` into exactly `k` positive parts, each descending.
fn partitions_exact(n: u32, k: u32, max: u32) -> Vec<Vec<u32>> {
    if k == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions_exact(n - first, k - 1, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Distinct orderings of a multiset.
fn distinct_permutations(items: &[u32]) -> Vec<Vec<u32>> {
    let mut sorted = items.to_vec();
    sorted.sort();
    let mut out = vec![sorted.clone()];
    // Lexicographic successor.
    loop {
        let v = out.last().expect("nonempty").clone();
        let Some(i) = (0..v.len().saturating_sub(1)).rev().find(|&i| v[i] < v[i + 1]) else {
            break;
        };
        let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).expect("successor exists");
        let mut w = v;
        w.swap(i, j);
        w[i + 1..].reverse();
        out.push(w);
    }
    out
}

/// Residue classes mod 6 allowed for the two main components in shapes I-III.
fn congruences(shape: BaseShape) -> Option<[u32; 2]> {
    match shape {
        BaseShape::I => Some([0, 0]),
        BaseShape::II => Some([3, 3]),
        BaseShape::III => Some([4, 2]),
        BaseShape::IV => None,
    }
}

/// Local degrees of the non-redundant tail component at its node points.
fn tail_locals(shape: BaseShape, total: u32) -> Vec<Vec<u32>> {
    surviving_tails(shape, total)
        .into_iter()
        .flat_map(|(e, s)| partitions_exact(e, s, e))
        .collect()
}

/// Whether `degree − local` is a nonnegative multiple of the redundant degree.
fn fills(shape: BaseShape, degree: u32, local: u32) -> bool {
    degree >= local && (degree - local).is_multiple_of(shape.redundant_degree())
}

/// Multisets of main-component degrees summing to `total`, ascending.
///
/// Shapes I–III have two main components whose degrees satisfy the mod-6
/// congruences and admit an assignment of the tail's local degrees with an
/// integral redundant completion. Shape IV allows any number of components
/// of degree divisible by 6.
pub fn degree_splits(shape: BaseShape, total: u32) -> Vec<Vec<u32>> {
    let mut out = BTreeSet::new();
    match congruences(shape) {
        Some(cls) => {
            let locals = tail_locals(shape, total);
            for d1 in 1..total {
                let d2 = total - d1;
                let ok_cong = (d1 % 6 == cls[0] && d2 % 6 == cls[1]) || (d1 % 6 == cls[1] && d2 % 6 == cls[0]);
                if !ok_cong {
                    continue;
                }
                let ok_fill = locals.iter().filter(|ls| ls.len() == 2).any(|ls| {
                    (fills(shape, d1, ls[0]) && fills(shape, d2, ls[1]))
                        || (fills(shape, d1, ls[1]) && fills(shape, d2, ls[0]))
                });
                if ok_fill {
                    let mut v = vec![d1, d2];
                    v.sort();
                    out.insert(v);
                }
            }
        }
        None => {
            if total.is_multiple_of(6) {
                for k in 1..=total / 6 {
                    for p in partitions_exact(total / 6, k, total / 6) {
                        let mut v: Vec<u32> = p.iter().map(|x| 6 * x).collect();
                        v.sort();
                        out.insert(v);
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Adds the redundant tail components forced by the rest of the graph.
pub fn complete_redundant(skeleton: &CoverGraph) -> Result<CoverGraph, CoverError> {
    let mut g = skeleton.clone();
    for e in &g.node_edges {
        if g.side_of(e.main_id) != Some(Side::Main) {
            return Err(CoverError::UnknownComponent(e.main_id));
        }
        if g.side_of(e.tail_id) != Some(Side::Tail) {
            return Err(CoverError::UnknownComponent(e.tail_id));
        }
    }
    let rl = g.shape.redundant_degree();
    let mut next = g.components().map(|(_, c)| c.id + 1).max().unwrap_or(0);
    let mains: Vec<(usize, u32)> = g.main_components.iter().map(|c| (c.id, c.degree)).collect();
    for (id, degree) in mains {
        let used: u32 = g.locals_at(id).iter().sum();
        let residual = degree as i64 - used as i64;
        if residual < 0 || residual % rl as i64 != 0 {
            return Err(CoverError::NoIntegralCompletion {
                component: id,
                residual,
                local: rl,
            });
        }
        for _ in 0..residual / rl as i64 {
            g.tail_components.push(Component {
                id: next,
                degree: rl,
                genus: 0,
                redundant: true,
                beta: 0,
            });
            g.node_edges.push(NodeEdge {
                main_id: id,
                tail_id: next,
                local_degree: rl,
            });
            next += 1;
        }
    }
    g.recompute_profiles();
    g.canonicalize();
    Ok(g)
}

/// `5d − 2`, the number of simple branch points of a generic degree-`6d`
/// cover with the fixed profiles over `0`, `1`, `∞`.
pub fn generic_branch_count(d: u32) -> u32 {
    5 * d - 2
}

/// Riemann–Hurwitz check for [`generic_branch_count`]:
/// `−2 = −12d + 3d + 4d + (5d − 2)`.
pub fn generic_rh_holds(d: u32) -> bool {
    let d = d as i64;
    -2 == -12 * d + 3 * d + 4 * d + generic_branch_count(d as u32) as i64
}

/// One member of a boundary family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryInstance {
    /// Local degrees of the non-redundant tail at the main components, in
    /// the family's parameter order; empty for shapes I–III.
    pub params: Vec<u32>,
    /// Nondecreasing over main components of equal degree.
    pub canonical: bool,
    pub graph: CoverGraph,
}

/// A family of boundary dual graphs sharing shape and main-side degrees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryType {
    /// Position in the published list; `None` for a family missing from it.
    pub type_index: Option<u8>,
    pub shape: BaseShape,
    /// Main-component degrees in parameter order.
    pub main_degrees: Vec<u32>,
    /// Inclusive range of each parameter.
    pub ranges: Vec<(u32, u32)>,
    pub instances: Vec<BoundaryInstance>,
}

impl BoundaryType {
    pub fn canonical_count(&self) -> usize {
        self.instances.iter().filter(|x| x.canonical).count()
    }

    /// Parameter names `i, j, k` with their ranges.
    pub fn range_text(&self) -> String {
        let names = ["i", "j", "k", "l", "m"];
        self.ranges
            .iter()
            .zip(names)
            .map(|((lo, hi), n)| format!("{}<={}<={}", lo, n, hi))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

fn published_index(d: u32, shape: BaseShape, degrees: &[u32]) -> Option<u8> {
    if d != 3 {
        return None;
    }
    let mut sorted = degrees.to_vec();
    sorted.sort();
    let idx = match (shape, sorted.as_slice()) {
        (BaseShape::I, [6, 12]) => 1,
        (BaseShape::II, [9, 9]) => 2,
        (BaseShape::II, [3, 15]) => 3,
        (BaseShape::III, [8, 10]) => 4,
        (BaseShape::III, [2, 16]) => 5,
        (BaseShape::IV, [18]) => 6,
        (BaseShape::IV, [6, 12]) => 7,
        (BaseShape::IV, [6, 6, 6]) => 8,
        _ => return None,
    };
    Some(idx)
}

fn skeleton(shape: BaseShape, degrees: &[u32], locals: &[u32]) -> CoverGraph {
    let main_components: Vec<Component> = degrees
        .iter()
        .enumerate()
        .map(|(id, &degree)| Component {
            id,
            degree,
            genus: 0,
            redundant: false,
            beta: 0,
        })
        .collect();
    let tail = degrees.len();
    CoverGraph {
        shape,
        main_components,
        tail_components: vec![Component {
            id: tail,
            degree: locals.iter().sum(),
            genus: 0,
            redundant: false,
            beta: 0,
        }],
        node_edges: locals
            .iter()
            .enumerate()
            .map(|(id, &l)| NodeEdge {
                main_id: id,
                tail_id: tail,
                local_degree: l,
            })
            .collect(),
        profiles: Profiles::default(),
    }
}

/// Completes a skeleton and fixes all β by requiring rational components.
fn instantiate(shape: BaseShape, degrees: &[u32], locals: &[u32]) -> Option<CoverGraph> {
    let sk = skeleton(shape, degrees, locals);
    let mut g = complete_redundant(&sk).ok()?;
    if !g.assign_genus_zero_betas() {
        return None;
    }
    check_cover(&g).is_empty().then_some(g)
}

/// The dual graphs at the generic points of the boundary divisors that are
/// not contracted, for covers of degree `6d`.
pub fn enumerate_boundary_types(d: u32) -> Vec<BoundaryType> {
    let total = 6 * d;
    let mut out = Vec::new();
    for shape in [BaseShape::I, BaseShape::II, BaseShape::III] {
        let locals = tail_locals(shape, total);
        for degrees in degree_splits(shape, total) {
            let mut instances = Vec::new();
            let mut seen = BTreeSet::new();
            for ls in locals.iter().filter(|ls| ls.len() == degrees.len()) {
                for perm in distinct_permutations(ls) {
                    if let Some(g) = instantiate(shape, &degrees, &perm) {
                        let key = serde_json::to_string(&g).expect("serializable");
                        if seen.insert(key) {
                            instances.push(BoundaryInstance {
                                params: vec![],
                                canonical: true,
                                graph: g,
                            });
                        }
                    }
                }
            }
            if !instances.is_empty() {
                out.push(BoundaryType {
                    type_index: published_index(d, shape, &degrees),
                    shape,
                    main_degrees: degrees,
                    ranges: vec![],
                    instances,
                });
            }
        }
    }
    let shape = BaseShape::IV;
    for ascending in degree_splits(shape, total) {
        let degrees: Vec<u32> = ascending.iter().rev().copied().collect();
        // Each main component of degree 6k carries 5k − 1 − l moving branch
        // points when the tail meets it with local degree l.
        let bounds: Vec<u32> = degrees.iter().map(|x| 5 * (x / 6) - 1).collect();
        let mut instances = Vec::new();
        let mut params = vec![1u32; degrees.len()];
        'outer: loop {
            if let Some(g) = instantiate(shape, &degrees, &params) {
                let canonical = (1..degrees.len()).all(|k| degrees[k] != degrees[k - 1] || params[k - 1] <= params[k]);
                instances.push(BoundaryInstance {
                    params: params.clone(),
                    canonical,
                    graph: g,
                });
            }
            for k in (0..params.len()).rev() {
                if params[k] < bounds[k] {
                    params[k] += 1;
                    continue 'outer;
                }
                params[k] = 1;
            }
            break;
        }
        if instances.is_empty() {
            continue;
        }
        let ranges = (0..degrees.len())
            .map(|k| {
                let vals = instances.iter().map(|x| x.params[k]);
                (vals.clone().min().expect("nonempty"), vals.max().expect("nonempty"))
            })
            .collect();
        out.push(BoundaryType {
            type_index: published_index(d, shape, &degrees),
            shape,
            main_degrees: degrees,
            ranges,
            instances,
        });
    }
    out.sort_by_key(|t| (t.type_index.unwrap_or(u8::MAX), t.shape, t.main_degrees.clone()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tail_branch_counts() {
        assert_eq!(branch_count_tail(BaseShape::I, 2, 2).unwrap(), 2);
        assert_eq!(branch_count_tail(BaseShape::II, 2, 2).unwrap(), 2);
        assert_eq!(branch_count_tail(BaseShape::III, 3, 2).unwrap(), 2);
        assert!(branch_count_tail(BaseShape::II, 3, 2).is_err());
        assert!(branch_count_tail(BaseShape::III, 4, 2).is_err());
        assert!(branch_count_tail(BaseShape::IV, 4, 2).is_err());
    }

    #[test]
    fn tail_filter() {
        assert!(tail_moduli_filter(BaseShape::I, 2, 2).unwrap());
        assert!(!tail_moduli_filter(BaseShape::I, 3, 2).unwrap());
        assert!(!tail_moduli_filter(BaseShape::II, 4, 2).unwrap());
        assert_eq!(surviving_tails(BaseShape::I, 18), vec![(2, 2)]);
        assert_eq!(surviving_tails(BaseShape::II, 18), vec![(2, 2)]);
        assert_eq!(surviving_tails(BaseShape::III, 18), vec![(3, 2)]);
    }

    #[test]
    fn splits_of_eighteen() {
        assert_eq!(degree_splits(BaseShape::I, 18), vec![vec![6, 12]]);
        assert_eq!(degree_splits(BaseShape::II, 18), vec![vec![3, 15], vec![9, 9]]);
        assert_eq!(
            degree_splits(BaseShape::IV, 18),
            vec![vec![6, 6, 6], vec![6, 12], vec![18]]
        );
    }

    #[test]
    fn partitions_and_permutations() {
        assert_eq!(partitions_exact(3, 2, 3), vec![vec![2, 1]]);
        assert_eq!(partitions_exact(4, 2, 4), vec![vec![3, 1], vec![2, 2]]);
        assert_eq!(distinct_permutations(&[2, 1]), vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(distinct_permutations(&[1, 1]).len(), 1);
        assert_eq!(distinct_permutations(&[1, 2, 2]).len(), 3);
    }

    #[test]
    fn completion_of_type_four() {
        let g = complete_redundant(&skeleton(BaseShape::III, &[8, 10], &[2, 1])).unwrap();
        assert_eq!(g.tail_components.iter().filter(|c| c.redundant).count(), 5);
        let drawn = complete_redundant(&skeleton(BaseShape::III, &[8, 10], &[1, 2]));
        assert!(matches!(drawn, Err(CoverError::NoIntegralCompletion { .. })));
    }

    #[test]
    fn completion_of_type_one() {
        let g = complete_redundant(&skeleton(BaseShape::I, &[6, 12], &[1, 1])).unwrap();
        assert_eq!(g.tail_components.iter().filter(|c| c.redundant).count(), 16);
        assert_eq!(complete_redundant(&g).unwrap(), g);
    }

    #[test]
    fn tailless_graph_fails_node_axioms() {
        let mut g = CoverGraph {
            shape: BaseShape::I,
            main_components: vec![Component {
                id: 0,
                degree: 18,
                genus: 0,
                redundant: false,
                beta: 13,
            }],
            tail_components: vec![],
            node_edges: vec![],
            profiles: Profiles::default(),
        };
        g.recompute_profiles();
        let diags = check_cover(&g);
        assert_eq!(
            diags,
            vec![
                Diagnostic::NodeSum {
                    component: 0,
                    degree: 18,
                    local_sum: 0
                },
                Diagnostic::SideDegrees { main: 18, tail: 0 },
            ]
        );
        assert_eq!(complete_redundant(&g).unwrap().tail_components.len(), 18);
    }

    #[test]
    fn generic_counts() {
        assert_eq!(generic_branch_count(3), 13);
        assert_eq!(generic_branch_count(1), 3);
        assert_eq!(generic_branch_count(10), 48);
        assert!((1..=10).all(generic_rh_holds));
    }

    #[test]
    fn json_keys() {
        let g = complete_redundant(&skeleton(BaseShape::II, &[9, 9], &[1, 1])).unwrap();
        let v = g.to_json();
        for k in ["shape", "components", "edges", "profiles", "beta"] {
            assert!(v.get(k).is_some(), "{k}");
        }
        assert!(g.to_dot("t").contains("shape=doublecircle"));
    }
}
