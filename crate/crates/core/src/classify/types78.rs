//! Divisors of types (7) and (8): local models on the main ends glued
//! through a tail carrying hyperelliptic curves.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::desc::{CurveTag, GraphShape, PointCondition, StableCurveDesc, StableVertex};
use super::divisors::{record, DivisorRecord, Source};
use super::models::{c2_entry, c2_label, enumerate_c1_models, HalfSide, LocalModelEntry};
use super::ClassifyError;
use crate::frac::Frac;
use crate::parity::{
    double_cover_ramification, section_parity, tail_section_contribution, Parity, ParityOutcome, SectionClass,
};

use CurveTag::{Hyperelliptic, MaroniSpecial, PlaneQuartic};
use PointCondition::{Bitangent, G13RamificationPoint, HyperellipticConjugatePair, TangentLineThirdPoint, Weierstrass};

/// A nodal curve before stabilization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreStable {
    pub genera: Vec<i64>,
    pub edges: Vec<(usize, usize)>,
}

impl PreStable {
    pub fn is_connected(&self) -> bool {
        let n = self.genera.len();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &(a, b) in &self.edges {
                for (u, w) in [(a, b), (b, a)] {
                    if u == x && !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn arithmetic_genus(&self) -> i64 {
        self.genera.iter().map(|g| g - 1).sum::<i64>() + self.edges.len() as i64 + 1
    }

    /// Removes rational components meeting the rest at most once and
    /// smooths rational bridges.
    #[allow(clippy::needless_range_loop)]
    pub fn stabilize(&self) -> PreStable {
        let mut alive: Vec<bool> = vec![true; self.genera.len()];
        let mut edges = self.edges.clone();
        loop {
            let mut changed = false;
            for x in 0..alive.len() {
                if !alive[x] || self.genera[x] != 0 {
                    continue;
                }
                let inc: Vec<usize> = (0..edges.len())
                    .filter(|&e| edges[e].0 == x || edges[e].1 == x)
                    .collect();
                let valence: usize = inc.iter().map(|&e| if edges[e].0 == edges[e].1 { 2 } else { 1 }).sum();
                if valence <= 1 {
                    for &e in inc.iter().rev() {
                        edges.remove(e);
                    }
                    alive[x] = false;
                    changed = true;
                    break;
                }
                if valence == 2 && inc.len() == 2 {
                    let far = |e: usize| if edges[e].0 == x { edges[e].1 } else { edges[e].0 };
                    let (a, b) = (far(inc[0]), far(inc[1]));
                    edges.remove(inc[1]);
                    edges.remove(inc[0]);
                    edges.push((a.min(b), a.max(b)));
                    alive[x] = false;
                    changed = true;
                    break;
                }
            }
            if !changed {
                break;
            }
        }
        let mut index = vec![usize::MAX; alive.len()];
        let mut genera = Vec::new();
        for (x, &a) in alive.iter().enumerate() {
            if a {
                index[x] = genera.len();
                genera.push(self.genera[x]);
            }
        }
        let edges = edges
            .into_iter()
            .map(|(a, b)| (index[a].min(index[b]), index[a].max(index[b])))
            .collect();
        PreStable { genera, edges }
    }

    pub fn shape(&self) -> GraphShape {
        let mut genera = self.genera.clone();
        genera.sort();
        let mut edges: Vec<(i64, i64)> = self
            .edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (self.genera[a], self.genera[b]);
                (x.min(y), x.max(y))
            })
            .collect();
        edges.sort();
        GraphShape { genera, edges }
    }
}

/// One way of attaching the main-end models to a split tail.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Wiring {
    /// Per main end: whether its `A` side goes to the second tail sheet.
    pub flips: Vec<bool>,
    /// Section self-intersection pieces matched through each tail sheet.
    pub pieces: [Vec<Frac>; 2],
    /// Parity read through each sheet; `None` if the pieces do not sum to
    /// an integer.
    pub parities: [Option<Parity>; 2],
    pub curve: PreStable,
    pub stable: PreStable,
}

impl Wiring {
    /// Both sheets give the same parity.
    pub fn parity(&self) -> Option<Parity> {
        match self.parities {
            [Some(a), Some(b)] if a == b => Some(a),
            _ => None,
        }
    }
}

/// Total singularity parameter of the main ends.
fn total_param(mains: &[LocalModelEntry]) -> i64 {
    mains.iter().map(|m| m.param as i64).sum()
}

/// All admissible wirings with a trivial intermediate cover: the tail is two
/// double covers of genera `tails`, genus `−1` meaning two disjoint sheets.
/// A wiring is admissible when every sheet has a nonnegative number of
/// moving branch points and these add up to the total parameter.
pub fn assemble_trivial(mains: &[LocalModelEntry], tails: [i64; 2]) -> Result<Vec<Wiring>, ClassifyError> {
    if let Some(m) = mains.iter().find(|m| !m.preserves_components()) {
        return Err(ClassifyError::Inconsistent(format!(
            "{} swaps the fiber components",
            m.label
        )));
    }
    let d = total_param(mains);
    let mut out = Vec::new();
    for bits in 0..(1u32 << mains.len()) {
        let flips: Vec<bool> = (0..mains.len()).map(|i| bits >> i & 1 == 1).collect();
        let mut genera = Vec::new();
        let mut sheet_ids: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
        for (k, &g) in tails.iter().enumerate() {
            if g >= 0 {
                sheet_ids[k].push(genera.len());
                genera.push(g);
            } else {
                for _ in 0..2 {
                    sheet_ids[k].push(genera.len());
                    genera.push(0);
                }
            }
        }
        let mut edges = Vec::new();
        let mut ramified = [0i64; 2];
        let mut sigma: [Vec<Frac>; 2] = [Vec::new(), Vec::new()];
        let mut ok = true;
        for (m, &flip) in mains.iter().zip(&flips) {
            let base = genera.len();
            genera.extend(&m.genera);
            let sheet_of = |side: HalfSide| match (side, flip) {
                (HalfSide::A, false) | (HalfSide::B, true) => 0,
                _ => 1,
            };
            sigma[sheet_of(HalfSide::A)].push(m.sigma_a2.clone().expect("preserving"));
            sigma[sheet_of(HalfSide::B)].push(m.sigma_b2.clone().expect("preserving"));
            let mut used = [0usize; 2];
            for h in &m.half_edges {
                let k = sheet_of(h.side);
                if h.mult == 2 {
                    ramified[k] += 1;
                }
                let target = if tails[k] >= 0 {
                    sheet_ids[k][0]
                } else {
                    if h.mult != 1 {
                        ok = false;
                        break;
                    }
                    let t = sheet_ids[k][used[k]];
                    used[k] += 1;
                    t
                };
                edges.push((base + h.vertex, target));
            }
            if !ok {
                break;
            }
        }
        if !ok {
            continue;
        }
        let moving: Vec<i64> = (0..2)
            .map(|k| double_cover_ramification(tails[k]) as i64 - ramified[k])
            .collect();
        if moving.iter().any(|&x| x < 0) || moving.iter().sum::<i64>() != d {
            continue;
        }
        let mut pieces = sigma.clone();
        let mut parities = [None, None];
        for k in 0..2 {
            pieces[k].push(tail_section_contribution(moving[k] as u32));
            parities[k] = SectionClass::new(pieces[k].clone())
                .ok()
                .and_then(|sc| section_parity(&sc).ok());
        }
        let curve = PreStable { genera, edges };
        let stable = curve.stabilize();
        out.push(Wiring {
            flips,
            pieces,
            parities,
            curve,
            stable,
        });
    }
    Ok(out)
}

/// Gluing with a nontrivial intermediate cover: one connected tail curve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NontrivialAssembly {
    /// Tail genus forced by Riemann–Hurwitz.
    pub rh_tail_genus: Frac,
    pub curve: PreStable,
    pub stable: PreStable,
}

pub fn assemble_nontrivial(mains: &[LocalModelEntry], tail_genus: i64) -> NontrivialAssembly {
    let mut genera = vec![tail_genus];
    let mut edges = Vec::new();
    let mut excess = 0i64;
    for m in mains {
        let base = genera.len();
        genera.extend(&m.genera);
        for h in &m.half_edges {
            excess += h.mult as i64 - 1;
            edges.push((0, base + h.vertex));
        }
    }
    let rh_tail_genus = Frac::new(-8 + total_param(mains) + excess, 2) + Frac::one();
    let curve = PreStable { genera, edges };
    let stable = curve.stabilize();
    NontrivialAssembly {
        rh_tail_genus,
        curve,
        stable,
    }
}

fn v(g: i64) -> StableVertex {
    StableVertex::new(g)
}

fn hyp(g: i64) -> StableVertex {
    StableVertex::new(g).tag(Hyperelliptic)
}

fn two(x: StableVertex, y: StableVertex, edges: usize) -> StableCurveDesc {
    StableCurveDesc::new(vec![x, y]).edges_between(0, 1, edges)
}

pub fn type7_desc(k: u8) -> StableCurveDesc {
    match k {
        1 => StableCurveDesc::new(vec![hyp(5)]).edge(0, 0),
        2 => two(
            v(2).cond(Weierstrass),
            v(4).tag(MaroniSpecial).cond(G13RamificationPoint),
            1,
        ),
        3 => two(hyp(3).cond(Weierstrass), v(3).tag(PlaneQuartic).cond(Bitangent), 1),
        4 => two(hyp(4).cond(Weierstrass), v(2), 1),
        5 => two(hyp(3), v(2).cond(Weierstrass), 2),
        6 => two(
            v(2).cond(HyperellipticConjugatePair),
            v(3).tag(PlaneQuartic).cond(TangentLineThirdPoint),
            2,
        ),
        7 => two(hyp(3).cond(HyperellipticConjugatePair), v(2), 2),
        _ => two(hyp(3), v(1), 3),
    }
}

pub fn type8_desc(k: u8) -> StableCurveDesc {
    match k {
        1 => StableCurveDesc::new(vec![hyp(5)]).edge(0, 0),
        _ => two(hyp(3), v(1), 3),
    }
}

/// A short-end choice; `flipped` marks the drawing with `A` and `B` swapped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShortEnd {
    pub label: String,
    pub flipped: bool,
}

impl ShortEnd {
    fn text(&self) -> String {
        if self.flipped {
            format!("{}'", self.label)
        } else {
            self.label.clone()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table2Row {
    pub c1: Vec<ShortEnd>,
    pub c2_key: String,
    pub p: u32,
    pub tail_genera: [i64; 2],
    pub divisor: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table3Row {
    pub c1: Vec<String>,
    pub c2_key: String,
    pub p: u32,
    pub tail_genus: i64,
    pub divisor: u8,
}

fn short_end(label: &str) -> Result<LocalModelEntry, ClassifyError> {
    let i: u32 = label
        .split('.')
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| ClassifyError::Inconsistent(format!("bad label {}", label)))?;
    enumerate_c1_models(i)?
        .into_iter()
        .find(|e| e.label == label)
        .ok_or_else(|| ClassifyError::Inconsistent(format!("no short-end model {}", label)))
}

fn ends(labels: &[&str]) -> Vec<ShortEnd> {
    labels
        .iter()
        .map(|l| ShortEnd {
            label: l.trim_end_matches('\'').to_string(),
            flipped: l.ends_with('\''),
        })
        .collect()
}

/// Combinations with a trivial intermediate cover that give divisors.
pub fn table2_rows() -> Vec<Table2Row> {
    let row = |c1: &[&str], key: &str, p: u32, g1: i64, g2: i64, divisor: u8| Table2Row {
        c1: ends(c1),
        c2_key: key.to_string(),
        p,
        tail_genera: [g1, g2],
        divisor,
    };
    vec![
        row(&["3.1", "4.1"], "odd2", 0, 0, 1, 8),
        row(&["4.1"], "odd2", 0, 2, -1, 5),
        row(&["3.1", "4.1"], "odd3", 0, 2, -1, 2),
        row(&["3.1", "4.1"], "odd3", 1, 3, -1, 3),
        row(&["3.1", "4.1"], "odd3", 2, 4, -1, 4),
        row(&["3.1", "4.1"], "odd3", 2, 0, 3, 5),
        row(&["3.1", "4.1"], "even3", 1, 2, -1, 7),
        row(&["3.1", "4.1"], "even3", 2, 3, -1, 7),
        row(&["3.1'", "4.1"], "even3", 2, -1, 3, 5),
        row(&["4.1"], "even3", 4, 5, -1, 1),
        row(&["4.1"], "even5", 4, 5, -1, 1),
        row(&["3.1", "4.1"], "even7", 1, 0, 2, 5),
    ]
}

/// Combinations with a nontrivial intermediate cover that give divisors.
pub fn table3_rows() -> Vec<Table3Row> {
    let row = |key: &str, p: u32, g: i64, divisor: u8| Table3Row {
        c1: vec!["3.2".into(), "4.2".into()],
        c2_key: key.to_string(),
        p,
        tail_genus: g,
        divisor,
    };
    vec![
        row("odd4", 0, 2, 2),
        row("odd4", 1, 3, 3),
        row("odd4", 2, 4, 4),
        row("even8", 1, 2, 6),
        row("even8", 2, 3, 7),
    ]
}

fn c2_text(key: &str, p: u32) -> String {
    let label = c2_label(key).unwrap_or("?");
    match key {
        "even4" | "even5" | "even6" | "even9" => label.to_string(),
        _ => format!("{} p={}", label, p),
    }
}

impl Table2Row {
    pub fn cells(&self) -> [String; 5] {
        [
            self.c1.iter().map(|e| e.text()).collect::<Vec<_>>().join(" or "),
            c2_text(&self.c2_key, self.p),
            self.tail_genera[0].to_string(),
            self.tail_genera[1].to_string(),
            format!("7.{}", self.divisor),
        ]
    }
}

impl Table3Row {
    pub fn cells(&self) -> [String; 4] {
        [
            self.c1.join(" or "),
            c2_text(&self.c2_key, self.p),
            self.tail_genus.to_string(),
            format!("7.{}", self.divisor),
        ]
    }
}

pub const TABLE2_COLUMNS: [&str; 5] = ["C1", "C2", "g(C1tail)", "g(C2tail)", "divisor"];
pub const TABLE3_COLUMNS: [&str; 4] = ["C1", "C2", "g(Ctail)", "divisor"];

fn tsv<const N: usize>(cols: [&str; N], rows: impl Iterator<Item = [String; N]>) -> String {
    let mut out = cols.join("\t");
    out.push('\n');
    for r in rows {
        out.push_str(&r.join("\t"));
        out.push('\n');
    }
    out
}

fn markdown<const N: usize>(cols: [&str; N], rows: impl Iterator<Item = [String; N]>) -> String {
    let mut out = String::new();
    writeln!(out, "| {} |", cols.join(" | ")).ok();
    writeln!(out, "|{}", "---|".repeat(N)).ok();
    for r in rows {
        writeln!(out, "| {} |", r.join(" | ")).ok();
    }
    out
}

pub fn table2_tsv(rows: &[Table2Row]) -> String {
    tsv(TABLE2_COLUMNS, rows.iter().map(|r| r.cells()))
}

pub fn table3_tsv(rows: &[Table3Row]) -> String {
    tsv(TABLE3_COLUMNS, rows.iter().map(|r| r.cells()))
}

pub fn table2_markdown(rows: &[Table2Row]) -> String {
    markdown(TABLE2_COLUMNS, rows.iter().map(|r| r.cells()))
}

pub fn table3_markdown(rows: &[Table3Row]) -> String {
    markdown(TABLE3_COLUMNS, rows.iter().map(|r| r.cells()))
}

/// The wiring realizing a combination: connected, genus 6, odd through both
/// sheets and stabilizing to the expected shape. Among several such, the one
/// with fewest flips is returned.
fn realizing_wiring(
    mains: &[LocalModelEntry],
    tails: [i64; 2],
    target: &GraphShape,
) -> Result<Option<Wiring>, ClassifyError> {
    let mut ws: Vec<Wiring> = assemble_trivial(mains, tails)?
        .into_iter()
        .filter(|w| {
            w.curve.is_connected()
                && w.curve.arithmetic_genus() == 6
                && w.parity() == Some(Parity::Odd)
                && w.stable.shape() == *target
        })
        .collect();
    ws.sort_by_key(|w| w.flips.iter().filter(|&&f| f).count());
    Ok(ws.into_iter().next())
}

/// Verification of one row of the trivial-cover table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowCheck {
    pub label: String,
    pub c1: String,
    pub flips: Vec<bool>,
    pub parity: ParityOutcome,
}

pub fn check_table2_row(row: &Table2Row) -> Result<Vec<RowCheck>, ClassifyError> {
    let c2 = c2_entry(&row.c2_key, row.p)?;
    let target = type7_desc(row.divisor).shape();
    let mut out = Vec::new();
    for end in &row.c1 {
        let c1 = short_end(&end.label)?;
        let w = realizing_wiring(&[c1, c2.clone()], row.tail_genera, &target)?.ok_or_else(|| {
            ClassifyError::Inconsistent(format!(
                "{} with {}: no odd wiring of shape 7.{}",
                end.text(),
                c2.label,
                row.divisor
            ))
        })?;
        out.push(RowCheck {
            label: format!("7.{}", row.divisor),
            c1: end.text(),
            flips: w.flips.clone(),
            parity: ParityOutcome::Determined(Parity::Odd),
        });
    }
    Ok(out)
}

pub fn check_table3_row(row: &Table3Row) -> Result<Vec<RowCheck>, ClassifyError> {
    let c2 = c2_entry(&row.c2_key, row.p)?;
    let target = type7_desc(row.divisor).shape();
    let mut out = Vec::new();
    for label in &row.c1 {
        let c1 = short_end(label)?;
        let a = assemble_nontrivial(&[c1, c2.clone()], row.tail_genus);
        if a.rh_tail_genus != Frac::int(row.tail_genus) {
            return Err(ClassifyError::Inconsistent(format!(
                "{} with {}: tail genus {} by Riemann–Hurwitz, {} recorded",
                label, c2.label, a.rh_tail_genus, row.tail_genus
            )));
        }
        if a.curve.arithmetic_genus() != 6 || !a.curve.is_connected() || a.stable.shape() != target {
            return Err(ClassifyError::Inconsistent(format!(
                "{} with {}: stable shape {:?}",
                label,
                c2.label,
                a.stable.shape()
            )));
        }
        out.push(RowCheck {
            label: format!("7.{}", row.divisor),
            c1: label.clone(),
            flips: Vec::new(),
            parity: ParityOutcome::Moot,
        });
    }
    Ok(out)
}

pub fn classify_type_7() -> Result<Vec<DivisorRecord>, ClassifyError> {
    let mut sources: Vec<Vec<Source>> = vec![Vec::new(); 8];
    let src = |k: u8, detail: String| Source {
        graph_type: "7".into(),
        divisor: format!("7.{}", k),
        detail,
    };
    for (n, row) in table2_rows().iter().enumerate() {
        check_table2_row(row)?;
        let c = row.cells();
        sources[row.divisor as usize - 1].push(src(
            row.divisor,
            format!("table2 row {}: {} / {} / tails {},{}", n + 1, c[0], c[1], c[2], c[3]),
        ));
    }
    for (n, row) in table3_rows().iter().enumerate() {
        check_table3_row(row)?;
        let c = row.cells();
        sources[row.divisor as usize - 1].push(src(
            row.divisor,
            format!("table3 row {}: {} / {} / tail {}", n + 1, c[0], c[1], c[2]),
        ));
    }
    (1..=8u8)
        .map(|k| {
            let notes = if sources[k as usize - 1].iter().any(|s| s.detail.starts_with("table3")) {
                vec!["nontrivial intermediate cover: parity moot".to_string()]
            } else {
                Vec::new()
            };
            record(
                format!("7.{}", k),
                type7_desc(k),
                sources[k as usize - 1].clone(),
                notes,
            )
        })
        .collect()
}

/// Recorded type-(8) combinations with a trivial intermediate cover:
/// first two ends `4.1`, third end, tail genera, divisor.
pub fn type8_trivial_sources() -> Vec<(&'static str, [i64; 2], u8)> {
    vec![
        ("3.1", [-1, 5], 1),
        ("4.1", [-1, 5], 1),
        ("3.1", [1, 3], 2),
        ("4.1", [1, 3], 2),
    ]
}

pub fn classify_type_8() -> Result<Vec<DivisorRecord>, ClassifyError> {
    let mut sources: Vec<Vec<Source>> = vec![Vec::new(); 2];
    let src = |k: u8, detail: String| Source {
        graph_type: "8".into(),
        divisor: format!("8.{}", k),
        detail,
    };
    let four_one = short_end("4.1")?;
    for (c3, tails, k) in type8_trivial_sources() {
        let mains = [four_one.clone(), four_one.clone(), short_end(c3)?];
        let target = type8_desc(k).shape();
        realizing_wiring(&mains, tails, &target)?
            .ok_or_else(|| ClassifyError::Inconsistent(format!("4.1, 4.1, {} tails {:?}: no odd wiring", c3, tails)))?;
        sources[k as usize - 1].push(src(
            k,
            format!("trivial cover: 4.1, 4.1, {}; tails {},{}", c3, tails[0], tails[1]),
        ));
    }
    for a in ["3.2", "4.2"] {
        for b in ["3.2", "4.2"] {
            if a > b {
                continue;
            }
            let mains = [short_end(a)?, short_end(b)?, four_one.clone()];
            let asm = assemble_nontrivial(&mains, 5);
            let ok = asm.rh_tail_genus == Frac::int(5)
                && asm.curve.is_connected()
                && asm.curve.arithmetic_genus() == 6
                && asm.stable.shape() == type8_desc(1).shape();
            if !ok {
                return Err(ClassifyError::Inconsistent(format!(
                    "{}, {}, 4.1: {:?}",
                    a,
                    b,
                    asm.stable.shape()
                )));
            }
            sources[0].push(src(1, format!("nontrivial cover: {}, {}, 4.1; tail 5", a, b)));
        }
    }
    (1..=2u8)
        .map(|k| {
            record(
                format!("8.{}", k),
                type8_desc(k),
                sources[k as usize - 1].clone(),
                Vec::new(),
            )
        })
        .collect()
}

/// Section pieces of the worked type-(7) example (`4.1`, `2.2` at `p`, tails
/// of genus `0` and `p+1`), matched through the sheet of genus `p+1`.
pub fn worked_example_pieces(p: u32) -> Result<Vec<Frac>, ClassifyError> {
    let c1 = short_end("4.1")?;
    let c2 = c2_entry("odd2", p)?;
    let g = p as i64 + 1;
    Ok(vec![
        c1.sigma_b2.expect("preserving"),
        c2.sigma_b2.expect("preserving"),
        tail_section_contribution(double_cover_ramification(g)),
    ])
}

/// Parity of the worked example.
pub fn worked_example_parity(p: u32) -> Result<Parity, ClassifyError> {
    Ok(section_parity(&SectionClass::new(worked_example_pieces(p)?)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_check() {
        for row in table2_rows() {
            check_table2_row(&row).unwrap();
        }
        for row in table3_rows() {
            check_table3_row(&row).unwrap();
        }
    }

    #[test]
    fn type_7_and_8_counts() {
        let seven = classify_type_7().unwrap();
        assert_eq!(seven.len(), 8);
        assert!(seven.iter().all(|r| !r.sources.is_empty() && r.theorem_index.is_some()));
        let eight = classify_type_8().unwrap();
        assert_eq!(eight.len(), 2);
        assert_eq!(eight[0].theorem_index, Some(2));
        assert_eq!(eight[1].theorem_index, Some(13));
    }

    #[test]
    fn worked_example() {
        for p in 0..=3u32 {
            let expected = Parity::from_bit((p + 1) % 2 == 1);
            assert_eq!(worked_example_parity(p).unwrap(), expected);
        }
    }

    #[test]
    fn disconnected_wirings_are_produced_and_rejected() {
        let mains = [short_end("4.1").unwrap(), c2_entry("odd3", 0).unwrap()];
        let ws = assemble_trivial(&mains, [2, -1]).unwrap();
        assert!(!ws.is_empty());
        let target = type7_desc(2).shape();
        let good = realizing_wiring(&mains, [2, -1], &target).unwrap().unwrap();
        assert!(good.curve.is_connected());
    }

    #[test]
    fn stabilize_contracts_bridges_and_leaves() {
        let c = PreStable {
            genera: vec![5, 0, 0],
            edges: vec![(0, 1), (0, 1), (0, 2)],
        };
        let s = c.stabilize();
        assert_eq!(s.genera, vec![5]);
        assert_eq!(s.edges, vec![(0, 0)]);
    }

    #[test]
    fn table_cells() {
        let t2 = table2_rows();
        assert_eq!(t2[0].cells().join("|"), "3.1 or 4.1|2.2 p=0|0|1|7.8");
        assert_eq!(t2[10].cells().join("|"), "4.1|2.9|5|-1|7.1");
        let t3 = table3_rows();
        assert_eq!(t3[1].cells().join("|"), "3.2 or 4.2|2.4 p=1|3|7.3");
    }
}
