//! Local models of the main-side curves over the two ends of a type-(7) or
//! type-(8) graph.
//!
//! Each entry is the normalization of a fiberwise degree-4 curve on a
//! Hirzebruch surface with prescribed `A_k` singularities over `0`. Half-edges
//! are the points over the node: `A`/`B` for the two fiber components when
//! the monodromy preserves them, `S` when it swaps them.

use serde::{Deserialize, Serialize};

use super::ClassifyError;
use crate::frac::{q, Frac};
use crate::resolve::{delta_invariant, pa_hirzebruch, AkSing};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum HalfSide {
    A,
    B,
    S,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfEdge {
    pub vertex: usize,
    pub side: HalfSide,
    pub mult: u32,
}

/// The surface, class and singularities an entry is the normalization of.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub l: i64,
    pub n: i64,
    pub m: i64,
    pub sings: Vec<i64>,
}

impl Provenance {
    /// Genus of the normalization, counting a disconnected curve with `k`
    /// components of genera `g_i` as `Σ g_i − (k − 1)`.
    pub fn genus(&self) -> Result<i64, ClassifyError> {
        let sings = self
            .sings
            .iter()
            .map(|&k| AkSing::new(k))
            .collect::<Result<Vec<_>, _>>()?;
        let delta: i64 = sings.iter().map(|&s| delta_invariant(s) as i64).sum();
        Ok(pa_hirzebruch(self.l, self.n, self.m) - delta)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalModelEntry {
    /// Display label, `1.k` or `2.k`.
    pub label: String,
    /// Singularity parameter: `i` for the short end, `j` for the long end.
    pub param: u32,
    /// `p` with `j = 2p+1` or `j = 2p` on the long end.
    pub p: Option<u32>,
    pub genera: Vec<i64>,
    pub half_edges: Vec<HalfEdge>,
    pub sigma_a2: Option<Frac>,
    pub sigma_b2: Option<Frac>,
    pub provenance: Provenance,
    pub description: String,
}

impl LocalModelEntry {
    pub fn preserves_components(&self) -> bool {
        self.sigma_a2.is_some()
    }

    /// Genus of the whole normalization read from `genera`.
    pub fn stated_genus(&self) -> i64 {
        self.genera.iter().sum::<i64>() - (self.genera.len() as i64 - 1)
    }

    /// Every invariant the entry must satisfy; empty when valid.
    pub fn check(&self) -> Vec<String> {
        let mut bad = Vec::new();
        let total: u32 = self.half_edges.iter().map(|h| h.mult).sum();
        if total != 4 {
            bad.push(format!("{}: half-edge multiplicities sum to {}", self.label, total));
        }
        if self.half_edges.iter().any(|h| h.vertex >= self.genera.len()) {
            bad.push(format!("{}: half-edge on missing vertex", self.label));
        }
        for side in [HalfSide::A, HalfSide::B] {
            let s: u32 = self.half_edges.iter().filter(|h| h.side == side).map(|h| h.mult).sum();
            if self.preserves_components() && s != 2 {
                bad.push(format!("{}: side {:?} carries {} points", self.label, side, s));
            }
        }
        let swapped = self.half_edges.iter().any(|h| h.side == HalfSide::S);
        if swapped == self.preserves_components() {
            bad.push(format!("{}: side data inconsistent with σ² data", self.label));
        }
        for s in self.sigma_a2.iter().chain(&self.sigma_b2) {
            if !s.scale(2).is_integer() {
                bad.push(format!("{}: σ² = {} not in (1/2)Z", self.label, s));
            }
        }
        match self.provenance.genus() {
            Ok(g) if g == self.stated_genus() => {}
            Ok(g) => bad.push(format!(
                "{}: genera give {} but the surface model gives {}",
                self.label,
                self.stated_genus(),
                g
            )),
            Err(e) => bad.push(format!("{}: {}", self.label, e)),
        }
        bad
    }
}

fn he(vertex: usize, side: HalfSide, mult: u32) -> HalfEdge {
    HalfEdge { vertex, side, mult }
}

use HalfSide::{A, B, S};

struct Raw {
    label: &'static str,
    genera: Vec<i64>,
    half_edges: Vec<HalfEdge>,
    sigma: Option<(Frac, Frac)>,
    provenance: Provenance,
    description: String,
}

fn prov(l: i64, n: i64, m: i64, sings: &[i64]) -> Provenance {
    Provenance {
        l,
        n,
        m,
        sings: sings.to_vec(),
    }
}

fn build(param: u32, p: Option<u32>, raw: Raw) -> LocalModelEntry {
    LocalModelEntry {
        label: raw.label.to_string(),
        param,
        p,
        genera: raw.genera,
        half_edges: raw.half_edges,
        sigma_a2: raw.sigma.as_ref().map(|s| s.0.clone()),
        sigma_b2: raw.sigma.map(|s| s.1),
        provenance: raw.provenance,
        description: raw.description,
    }
}

/// Short-end models: `4σ + (1+2l)F` on `F_l`, `l ∈ {0, 1}`, or `2σ + 4F` on
/// `F_2` when the monodromy swaps the fiber components.
pub fn enumerate_c1_models(i: u32) -> Result<Vec<LocalModelEntry>, ClassifyError> {
    let k = i as i64 - 1;
    let raws = match i {
        1 => vec![
            Raw {
                label: "1.1",
                genera: vec![0],
                half_edges: vec![he(0, A, 2), he(0, B, 1), he(0, B, 1)],
                sigma: Some((q(-1, 2), q(0, 1))),
                provenance: prov(0, 4, 1, &[k, -1]),
                description: String::new(),
            },
            Raw {
                label: "1.2",
                genera: vec![0, 1],
                half_edges: vec![he(0, B, 1), he(1, A, 2), he(1, B, 1)],
                sigma: Some((q(1, 2), q(-1, 1))),
                provenance: prov(1, 4, 3, &[k, -1]),
                description: "directrix ⊔ 3σ+3F".into(),
            },
            Raw {
                label: "1.3",
                genera: vec![1],
                half_edges: vec![he(0, S, 4)],
                sigma: None,
                provenance: prov(2, 2, 4, &[k]),
                description: String::new(),
            },
        ],
        2 => vec![
            Raw {
                label: "2.1",
                genera: vec![0, 0],
                half_edges: vec![he(0, A, 1), he(1, A, 1), he(1, B, 1), he(1, B, 1)],
                sigma: Some((q(-1, 1), q(0, 1))),
                provenance: prov(0, 4, 1, &[k, -1]),
                description: String::new(),
            },
            Raw {
                label: "2.2",
                genera: vec![0],
                half_edges: vec![he(0, A, 2), he(0, B, 2)],
                sigma: Some((q(-1, 2), q(-1, 2))),
                provenance: prov(0, 4, 1, &[k - 1, 0]),
                description: String::new(),
            },
            Raw {
                label: "2.3",
                genera: vec![0],
                half_edges: vec![he(0, S, 2), he(0, S, 2)],
                sigma: None,
                provenance: prov(2, 2, 4, &[k]),
                description: String::new(),
            },
        ],
        3 => vec![
            Raw {
                label: "3.1",
                genera: vec![0, 0],
                half_edges: vec![he(0, B, 1), he(1, A, 2), he(1, B, 1)],
                sigma: Some((q(-1, 2), q(1, 1))),
                provenance: prov(0, 4, 1, &[k, -1]),
                description: String::new(),
            },
            Raw {
                label: "3.2",
                genera: vec![0],
                half_edges: vec![he(0, S, 4)],
                sigma: None,
                provenance: prov(2, 2, 4, &[k]),
                description: String::new(),
            },
        ],
        4 => vec![
            Raw {
                label: "4.1",
                genera: vec![0, 0, 0],
                half_edges: vec![he(0, A, 1), he(1, A, 1), he(1, B, 1), he(2, B, 1)],
                sigma: Some((q(1, 1), q(1, 1))),
                provenance: prov(0, 4, 1, &[k, -1]),
                description: String::new(),
            },
            Raw {
                label: "4.2",
                genera: vec![0, 0],
                half_edges: vec![he(0, S, 2), he(1, S, 2)],
                sigma: None,
                provenance: prov(2, 2, 4, &[k]),
                description: String::new(),
            },
        ],
        _ => {
            return Err(ClassifyError::OutOfRange {
                what: "i",
                value: i as i64,
                range: "1..=4",
            })
        }
    };
    Ok(raws.into_iter().map(|r| build(i, None, r)).collect())
}

/// Long-end families in display order, with the `p` range of each.
pub const C2_FAMILIES: [(&str, &str, u32, u32, bool); 14] = [
    ("2.1", "odd1", 0, 3, true),
    ("2.2", "odd2", 0, 3, true),
    ("2.3", "odd3", 0, 4, true),
    ("2.4", "odd4", 0, 4, true),
    ("2.5", "even1", 1, 3, false),
    ("2.6", "even2", 1, 3, false),
    ("2.7", "even3", 1, 4, false),
    ("2.8", "even4", 4, 4, false),
    ("2.9", "even5", 4, 4, false),
    ("2.10", "even6", 4, 4, false),
    ("2.11", "even7", 1, 4, false),
    ("2.12", "even7.5", 1, 4, false),
    ("2.13", "even8", 1, 4, false),
    ("2.14", "even9", 4, 4, false),
];

/// Display label of a long-end family given its internal key.
pub fn c2_label(key: &str) -> Option<&'static str> {
    C2_FAMILIES.iter().find(|f| f.1 == key).map(|f| f.0)
}

fn c2_description(key: &str, p: u32) -> &'static str {
    match (key, p) {
        ("odd1", 0) => "plane quartic, 2a+b1+b2 canonical",
        ("odd1", 1) => "genus 2, b1 b2 conjugate",
        ("odd2", 0) => "hyperelliptic genus 3, three points",
        ("odd2", 1) => "genus 2, a Weierstrass",
        ("odd3", 0) => "P1 ⊔ Maroni special genus 3, 2a+b2 the g13",
        ("odd3", 1) => "P1 ⊔ plane quartic, 2a+2b2 canonical",
        ("odd3", 2) => "P1 ⊔ genus 2, b2 Weierstrass",
        ("odd3", 3) => "P1 ⊔ genus 1, a−b2 two-torsion",
        ("odd4", 0) => "Maroni special genus 4, g13 ramification point",
        ("odd4", 1) => "plane quartic, point on a bitangent",
        ("even1", 1) => "genus 2, b1+b2 conjugate",
        ("even2", 1) => "genus 2, a1+a2 conjugate",
        ("even3", 1) => "P1 ⊔ plane quartic, a1+a2+2b2 canonical",
        ("even3", 2) => "P1 ⊔ genus 2, b2 Weierstrass",
        ("even3", 3) => "P1 ⊔ genus 1, a1+a2 = 2b2",
        ("even6", _) => "genus 1, a−b two-torsion",
        ("even7", 1) => "hyperelliptic genus 3, two points",
        ("even7", 2) => "genus 2, a Weierstrass",
        ("even7.5", 1) => "plane quartic, 2a1+2a2 canonical",
        ("even7.5", 2) => "genus 2, b Weierstrass",
        ("even8", 1) => "plane quartic, line through the points tangent elsewhere",
        _ => "general",
    }
}

fn c2_raw(key: &str, p: u32) -> Option<Raw> {
    let pi = p as i64;
    let h = |x: i64| q(x, 2);
    let label = c2_label(key)?;
    let j = if key.starts_with("odd") { 2 * pi + 1 } else { 2 * pi };
    let top = prov(0, 4, 2, &[j - 1, -1]);
    let raw = |genera: Vec<i64>, half_edges, sigma, provenance| Raw {
        label,
        genera,
        half_edges,
        sigma,
        provenance,
        description: c2_description(key, p).to_string(),
    };
    Some(match key {
        "odd1" => raw(
            vec![3 - pi],
            vec![he(0, A, 2), he(0, B, 1), he(0, B, 1)],
            Some((h(2 * pi + 1), q(1, 1))),
            top,
        ),
        "odd2" => raw(
            vec![3 - pi],
            vec![he(0, A, 2), he(0, B, 1), he(0, B, 1)],
            Some((h(2 * pi - 1), q(0, 1))),
            top,
        ),
        "odd3" => raw(
            vec![4 - pi, 0],
            vec![he(0, A, 2), he(0, B, 1), he(1, B, 1)],
            Some((h(2 * pi - 1), q(0, 1))),
            prov(2, 4, 6, &[j - 1, -1]),
        ),
        "odd4" => raw(vec![4 - pi], vec![he(0, S, 4)], None, prov(2, 3, 6, &[j - 1])),
        "even1" => raw(
            vec![3 - pi],
            vec![he(0, A, 1), he(0, A, 1), he(0, B, 1), he(0, B, 1)],
            Some((q(pi + 1, 1), q(1, 1))),
            top,
        ),
        "even2" => raw(
            vec![3 - pi],
            vec![he(0, A, 1), he(0, A, 1), he(0, B, 1), he(0, B, 1)],
            Some((q(pi, 1), q(0, 1))),
            top,
        ),
        "even3" => raw(
            vec![4 - pi, 0],
            vec![he(0, A, 1), he(0, A, 1), he(0, B, 1), he(1, B, 1)],
            Some((q(pi, 1), q(0, 1))),
            prov(2, 4, 6, &[j - 1, -1]),
        ),
        "even4" => raw(
            vec![0, 0],
            vec![he(0, A, 1), he(0, B, 1), he(1, A, 1), he(1, B, 1)],
            Some((q(1, 1), q(1, 1))),
            top,
        ),
        "even5" => raw(
            vec![0, 0],
            vec![he(0, A, 1), he(0, B, 1), he(1, A, 1), he(1, B, 1)],
            Some((q(0, 1), q(0, 1))),
            top,
        ),
        "even6" => raw(
            vec![0, 1, 0],
            vec![he(0, A, 1), he(1, A, 1), he(1, B, 1), he(2, B, 1)],
            Some((q(0, 1), q(0, 1))),
            prov(2, 4, 6, &[j - 1, -1]),
        ),
        "even7" => raw(
            vec![4 - pi],
            vec![he(0, A, 2), he(0, B, 2)],
            Some((h(2 * pi - 3), h(3))),
            prov(0, 4, 2, &[j - 2, 0]),
        ),
        "even7.5" => raw(
            vec![4 - pi],
            vec![he(0, A, 2), he(0, B, 2)],
            Some((h(2 * pi - 1), h(1))),
            prov(0, 4, 2, &[j - 2, 0]),
        ),
        "even8" => raw(
            vec![4 - pi],
            vec![he(0, S, 2), he(0, S, 2)],
            None,
            prov(2, 3, 6, &[j - 1]),
        ),
        "even9" => raw(
            vec![1, 0],
            vec![he(0, S, 2), he(1, S, 2)],
            None,
            prov(2, 3, 6, &[j - 1]),
        ),
        _ => return None,
    })
}

/// One long-end family at a given `p`.
pub fn c2_entry(key: &str, p: u32) -> Result<LocalModelEntry, ClassifyError> {
    let fam = C2_FAMILIES
        .iter()
        .find(|f| f.1 == key)
        .ok_or_else(|| ClassifyError::Inconsistent(format!("unknown family {}", key)))?;
    if p < fam.2 || p > fam.3 {
        return Err(ClassifyError::OutOfRange {
            what: "p",
            value: p as i64,
            range: "family range",
        });
    }
    let raw = c2_raw(key, p).expect("known family");
    let j = if fam.4 { 2 * p + 1 } else { 2 * p };
    Ok(build(j, Some(p), raw))
}

/// Long-end models: `4σ + (2+2l)F` on `F_l`, `l ∈ {0, 2}`, or `3σ + 6F` on
/// `F_2` when the monodromy swaps the fiber components.
pub fn enumerate_c2_models(j: u32) -> Result<Vec<LocalModelEntry>, ClassifyError> {
    if !(1..=9).contains(&j) {
        return Err(ClassifyError::OutOfRange {
            what: "j",
            value: j as i64,
            range: "1..=9",
        });
    }
    let (p, odd) = (j / 2, j % 2 == 1);
    Ok(C2_FAMILIES
        .iter()
        .filter(|f| f.4 == odd && (f.2..=f.3).contains(&p))
        .map(|f| c2_entry(f.1, p).expect("in range"))
        .collect())
}
