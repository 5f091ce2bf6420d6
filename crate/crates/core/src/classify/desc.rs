//! Stable curves described by their dual graph and component labels.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::ClassifyError;

/// Component labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CurveTag {
    Hyperelliptic,
    PlaneQuartic,
    NodalPlaneQuintic,
    CuspidalQuinticNormalization,
    MaroniSpecial,
}

/// Conditions on the points of a component lying over the nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PointCondition {
    Weierstrass,
    HyperellipticConjugatePair,
    Bitangent,
    Hyperflex,
    G13Fiber,
    G13RamificationPoint,
    TangentLineThirdPoint,
}

impl PointCondition {
    /// Conditions that only make sense on a canonically embedded genus-3 curve.
    fn forces_plane_quartic(self) -> bool {
        matches!(
            self,
            PointCondition::Bitangent | PointCondition::Hyperflex | PointCondition::TangentLineThirdPoint
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct StableVertex {
    pub genus: i64,
    pub tags: BTreeSet<CurveTag>,
    pub conditions: BTreeSet<PointCondition>,
}

impl StableVertex {
    pub fn new(genus: i64) -> Self {
        StableVertex {
            genus,
            tags: BTreeSet::new(),
            conditions: BTreeSet::new(),
        }
    }

    pub fn tag(mut self, t: CurveTag) -> Self {
        self.tags.insert(t);
        self
    }

    pub fn cond(mut self, c: PointCondition) -> Self {
        self.conditions.insert(c);
        self
    }

    /// Drops labels implied by the genus and adds labels implied by the
    /// conditions.
    fn normalized(&self) -> Self {
        let mut v = self.clone();
        if v.genus <= 2 {
            v.tags.remove(&CurveTag::Hyperelliptic);
        }
        if v.genus == 3 && v.conditions.iter().any(|c| c.forces_plane_quartic()) {
            v.tags.insert(CurveTag::PlaneQuartic);
        }
        v
    }
}

impl fmt::Display for StableVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g{}", self.genus)?;
        let labels: Vec<String> = self
            .tags
            .iter()
            .map(|t| format!("{:?}", t))
            .chain(self.conditions.iter().map(|c| format!("@{:?}", c)))
            .collect();
        if !labels.is_empty() {
            write!(f, "[{}]", labels.join(","))?;
        }
        Ok(())
    }
}

/// Genera and edges with component labels forgotten, up to isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GraphShape {
    pub genera: Vec<i64>,
    pub edges: Vec<(i64, i64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StableCurveDesc {
    pub vertices: Vec<StableVertex>,
    pub edges: Vec<(usize, usize)>,
}

impl StableCurveDesc {
    pub fn new(vertices: Vec<StableVertex>) -> Self {
        StableCurveDesc {
            vertices,
            edges: Vec::new(),
        }
    }

    pub fn edge(mut self, a: usize, b: usize) -> Self {
        self.edges.push((a.min(b), a.max(b)));
        self
    }

    pub fn edges_between(self, a: usize, b: usize, count: usize) -> Self {
        (0..count).fold(self, |d, _| d.edge(a, b))
    }

    /// Normal form: labels normalized, vertices sorted, edges relabeled and
    /// sorted. Two descriptions denote the same curve iff their normal forms
    /// are equal.
    pub fn canonical(&self) -> StableCurveDesc {
        let verts: Vec<StableVertex> = self.vertices.iter().map(|v| v.normalized()).collect();
        let mut order: Vec<usize> = (0..verts.len()).collect();
        order.sort_by(|&a, &b| verts[a].cmp(&verts[b]));
        let mut best: Option<Vec<(usize, usize)>> = None;
        for perm in tie_permutations(&order, &verts) {
            let mut pos = vec![0; verts.len()];
            for (new, &old) in perm.iter().enumerate() {
                pos[old] = new;
            }
            let mut edges: Vec<(usize, usize)> = self
                .edges
                .iter()
                .map(|&(a, b)| (pos[a].min(pos[b]), pos[a].max(pos[b])))
                .collect();
            edges.sort();
            if best.as_ref().is_none_or(|b| edges < *b) {
                best = Some(edges);
            }
        }
        let mut sorted = verts.clone();
        sorted.sort();
        StableCurveDesc {
            vertices: sorted,
            edges: best.unwrap_or_default(),
        }
    }

    pub fn same_curve(&self, other: &StableCurveDesc) -> bool {
        self.canonical() == other.canonical()
    }

    pub fn shape(&self) -> GraphShape {
        let mut genera: Vec<i64> = self.vertices.iter().map(|v| v.genus).collect();
        genera.sort();
        let mut edges: Vec<(i64, i64)> = self
            .edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (self.vertices[a].genus, self.vertices[b].genus);
                (x.min(y), x.max(y))
            })
            .collect();
        edges.sort();
        GraphShape { genera, edges }
    }
}

impl fmt::Display for StableCurveDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        let es: Vec<String> = self.edges.iter().map(|(a, b)| format!("{}-{}", a, b)).collect();
        write!(f, "{} | {}", vs.join(" + "), es.join(" "))
    }
}

/// Orderings of `order` that differ only inside runs of equal vertices.
fn tie_permutations(order: &[usize], verts: &[StableVertex]) -> Vec<Vec<usize>> {
    let mut runs: Vec<Vec<usize>> = Vec::new();
    for &i in order {
        match runs.last_mut() {
            Some(run) if verts[run[0]] == verts[i] => run.push(i),
            _ => runs.push(vec![i]),
        }
    }
    let mut out = vec![Vec::new()];
    for run in runs {
        let perms = permutations(&run);
        out = out
            .into_iter()
            .flat_map(|prefix| {
                perms.iter().map(move |p| {
                    let mut v = prefix.clone();
                    v.extend(p);
                    v
                })
            })
            .collect();
    }
    out
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// `Σ g_v + |E| − |V| + 1` of a connected nodal curve.
pub fn stable_pa(desc: &StableCurveDesc) -> Result<i64, ClassifyError> {
    let n = desc.vertices.len();
    if n == 0 {
        return Err(ClassifyError::Disconnected);
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(a, b) in &desc.edges {
        if a >= n || b >= n {
            return Err(ClassifyError::Inconsistent(format!("edge {}-{} out of range", a, b)));
        }
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    let root = find(&mut parent, 0);
    if (0..n).any(|v| find(&mut parent, v) != root) {
        return Err(ClassifyError::Disconnected);
    }
    let gsum: i64 = desc.vertices.iter().map(|v| v.genus).sum();
    Ok(gsum + desc.edges.len() as i64 - n as i64 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stable_pa_examples() {
        let smooth = StableCurveDesc::new(vec![StableVertex::new(6)]);
        assert_eq!(stable_pa(&smooth), Ok(6));
        let lp = StableCurveDesc::new(vec![StableVertex::new(5)]).edge(0, 0);
        assert_eq!(stable_pa(&lp), Ok(6));
        let three = StableCurveDesc::new(vec![StableVertex::new(3), StableVertex::new(1)]).edges_between(0, 1, 3);
        assert_eq!(stable_pa(&three), Ok(6));
    }

    #[test]
    fn stable_pa_rejects_disconnected() {
        let d = StableCurveDesc::new(vec![StableVertex::new(3), StableVertex::new(3)]);
        assert_eq!(stable_pa(&d), Err(ClassifyError::Disconnected));
    }

    #[test]
    fn canonical_ignores_order_and_implied_labels() {
        let a = StableCurveDesc::new(vec![
            StableVertex::new(3).cond(PointCondition::Hyperflex),
            StableVertex::new(2).tag(CurveTag::Hyperelliptic),
        ])
        .edge(0, 1);
        let b = StableCurveDesc::new(vec![
            StableVertex::new(2),
            StableVertex::new(3)
                .tag(CurveTag::PlaneQuartic)
                .cond(PointCondition::Hyperflex),
        ])
        .edge(1, 0);
        assert!(a.same_curve(&b));
        let c = StableCurveDesc::new(vec![StableVertex::new(3), StableVertex::new(2)]).edge(0, 1);
        assert!(!a.same_curve(&c));
    }

    #[test]
    fn shape_forgets_labels() {
        let d = StableCurveDesc::new(vec![
            StableVertex::new(4).tag(CurveTag::MaroniSpecial),
            StableVertex::new(1),
        ])
        .edges_between(0, 1, 2);
        assert_eq!(
            d.shape(),
            GraphShape {
                genera: vec![1, 4],
                edges: vec![(1, 4), (1, 4)]
            }
        );
    }
}
