//! Divisor records, the target catalog of stable curves, and the divisors of
//! types (1)–(6).

use serde::{Deserialize, Serialize};

use super::desc::{stable_pa, CurveTag, PointCondition, StableCurveDesc, StableVertex};
use super::table1::{table1, Table1Row};
use super::ClassifyError;
use crate::resolve::{genus_rh, geometric_genus, pa_hirzebruch, AkSing};

use CurveTag::{CuspidalQuinticNormalization, Hyperelliptic, MaroniSpecial, NodalPlaneQuintic, PlaneQuartic};
use PointCondition::{
    Bitangent, G13Fiber, G13RamificationPoint, HyperellipticConjugatePair, Hyperflex, TangentLineThirdPoint,
    Weierstrass,
};

/// Where a divisor comes from.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Source {
    /// `"1-5"`, `"6"`, `"7"` or `"8"`.
    pub graph_type: String,
    /// Label of the divisor within its type, e.g. `"7.2"`.
    pub divisor: String,
    /// Parameters or table rows producing it.
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorRecord {
    pub label: String,
    pub theorem_index: Option<u8>,
    pub desc: StableCurveDesc,
    pub sources: Vec<Source>,
    pub annotations: Vec<String>,
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

fn looped(x: StableVertex) -> StableCurveDesc {
    StableCurveDesc::new(vec![x]).edge(0, 0)
}

/// The thirteen stable curves of the final classification, in order.
pub fn theorem_catalog() -> Vec<StableCurveDesc> {
    vec![
        looped(v(5).tag(NodalPlaneQuintic)),
        looped(hyp(5)),
        two(v(5).tag(CuspidalQuinticNormalization), v(1), 1),
        two(
            v(2).cond(Weierstrass),
            v(4).tag(MaroniSpecial).cond(G13RamificationPoint),
            1,
        ),
        two(v(3).tag(PlaneQuartic).cond(Bitangent), hyp(3).cond(Weierstrass), 1),
        two(v(3).tag(PlaneQuartic).cond(Hyperflex), hyp(3), 1),
        two(hyp(4).cond(Weierstrass), v(2), 1),
        two(v(1), hyp(5), 1),
        two(v(4).tag(MaroniSpecial).cond(G13Fiber), v(1), 2),
        two(hyp(3), v(2).cond(Weierstrass), 2),
        two(
            v(2).cond(HyperellipticConjugatePair),
            v(3).tag(PlaneQuartic).cond(TangentLineThirdPoint),
            2,
        ),
        two(hyp(3).cond(HyperellipticConjugatePair), v(2), 2),
        two(hyp(3), v(1), 3),
    ]
}

/// Position (1-based) of `desc` in the catalog.
pub fn theorem_index_of(desc: &StableCurveDesc) -> Option<u8> {
    theorem_catalog()
        .iter()
        .position(|d| d.same_curve(desc))
        .map(|i| i as u8 + 1)
}

pub(crate) fn record(
    label: String,
    desc: StableCurveDesc,
    sources: Vec<Source>,
    annotations: Vec<String>,
) -> Result<DivisorRecord, ClassifyError> {
    let pa = stable_pa(&desc)?;
    if pa != 6 {
        return Err(ClassifyError::Inconsistent(format!(
            "{}: arithmetic genus {}",
            label, pa
        )));
    }
    Ok(DivisorRecord {
        theorem_index: theorem_index_of(&desc),
        label,
        desc,
        sources,
        annotations,
    })
}

/// Why a row of the type-(1)–(5) table does or does not give a divisor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RowFate {
    Divisor(u8),
    /// The general member is a smooth curve.
    Interior,
    /// The image has dimension at most 10; recorded, not derived here.
    SmallImage,
}

/// Recorded fate of each of the sixteen rows.
pub fn row_fate(row: u8) -> Option<RowFate> {
    Some(match row {
        1 => RowFate::Divisor(5),
        3 | 4 => RowFate::Divisor(3),
        7 | 11 => RowFate::Divisor(2),
        8 => RowFate::Divisor(1),
        12 => RowFate::Divisor(4),
        9 | 10 | 15 | 16 => RowFate::Interior,
        2 | 5 | 6 | 13 | 14 => RowFate::SmallImage,
        _ => return None,
    })
}

fn type_1_5_desc(k: u8) -> StableCurveDesc {
    match k {
        1 => looped(v(5).tag(NodalPlaneQuintic)),
        2 => two(hyp(3), v(3).tag(PlaneQuartic).cond(Hyperflex), 1),
        3 => two(v(4).tag(MaroniSpecial).cond(G13Fiber), v(1), 2),
        4 => two(hyp(3), v(2).cond(Weierstrass), 2),
        _ => two(hyp(3), v(1), 3),
    }
}

/// Genera of the main components with a split-off directrix removed and
/// rational components dropped, sorted.
fn row_essential_genera(row: &Table1Row) -> Vec<i64> {
    let mut gs: Vec<i64> = [(row.g1, row.disc1), (row.g2, row.disc2)]
        .iter()
        .map(|&(g, d)| if d { g + 1 } else { g })
        .filter(|&g| g > 0)
        .collect();
    gs.sort();
    gs
}

pub fn classify_type_1_5() -> Result<Vec<DivisorRecord>, ClassifyError> {
    let rows = table1();
    let mut out = Vec::new();
    for k in 1..=5u8 {
        let desc = type_1_5_desc(k);
        let mut genera: Vec<i64> = desc.vertices.iter().map(|x| x.genus).collect();
        genera.sort();
        let mut sources = Vec::new();
        for row in rows.iter().filter(|r| row_fate(r.row) == Some(RowFate::Divisor(k))) {
            if row_essential_genera(row) != genera {
                return Err(ClassifyError::Inconsistent(format!(
                    "row {} has component genera {:?}, divisor {} needs {:?}",
                    row.row,
                    row_essential_genera(row),
                    k,
                    genera
                )));
            }
            sources.push(Source {
                graph_type: "1-5".into(),
                divisor: format!("1-5.{}", k),
                detail: format!("table1 row {}", row.row),
            });
        }
        if sources.is_empty() {
            return Err(ClassifyError::Inconsistent(format!("divisor {} has no row", k)));
        }
        out.push(record(format!("1-5.{}", k), desc, sources, Vec::new())?);
    }
    Ok(out)
}

/// Genus of the hyperelliptic tail branched at `i` moving points, plus the
/// node when `i` is odd.
pub fn hyperelliptic_tail_genus(i: u32) -> i64 {
    let ram = i as i64 + (i as i64 % 2);
    genus_rh(2, 0, ram).expect("even ramification")
}

/// Outcome of one value of `i` for type (6).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Type6Fate {
    Divisor(u8),
    Smooth,
    HigherCodimension,
    Impossible,
}

/// Recorded fate of the irreducible case for each `i`.
pub fn type6_irreducible_fate(i: u32) -> Type6Fate {
    match i {
        1 => Type6Fate::Smooth,
        3 => Type6Fate::Divisor(2),
        5 => Type6Fate::Divisor(3),
        7 => Type6Fate::Divisor(4),
        9 => Type6Fate::Divisor(5),
        2 => Type6Fate::Divisor(1),
        4 => Type6Fate::Divisor(8),
        6 => Type6Fate::Divisor(9),
        8 => Type6Fate::Divisor(10),
        10..=13 => Type6Fate::HigherCodimension,
        _ => Type6Fate::Impossible,
    }
}

/// A reducible main-side curve: the union of two curves on `F_1` meeting in
/// one point of contact order `i`. `tangent` is the component that survives
/// as `X`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducibleCase {
    pub i: u32,
    pub other: (i64, i64),
    pub tangent: (i64, i64),
    pub divisor: u8,
}

pub fn type6_reducible_cases() -> Vec<ReducibleCase> {
    vec![
        ReducibleCase {
            i: 2,
            other: (1, 0),
            tangent: (3, 5),
            divisor: 2,
        },
        ReducibleCase {
            i: 4,
            other: (1, 1),
            tangent: (3, 4),
            divisor: 6,
        },
        ReducibleCase {
            i: 6,
            other: (1, 2),
            tangent: (3, 3),
            divisor: 7,
        },
        ReducibleCase {
            i: 6,
            other: (2, 2),
            tangent: (2, 3),
            divisor: 7,
        },
    ]
}

/// `(aσ + bF)·(cσ + dF)` on `F_l`.
fn hirzebruch_dot(l: i64, x: (i64, i64), y: (i64, i64)) -> i64 {
    -l * x.0 * y.0 + x.0 * y.1 + x.1 * y.0
}

impl ReducibleCase {
    /// Checks the class adds up to `4σ + 5F`, the union has arithmetic genus
    /// 6 and the contact order is `i`. Returns the genus of the tangent curve.
    pub fn check(&self) -> Result<i64, ClassifyError> {
        let (o, t) = (self.other, self.tangent);
        if (o.0 + t.0, o.1 + t.1) != (4, 5) {
            return Err(ClassifyError::Inconsistent(format!("{:?} + {:?} is not 4σ+5F", o, t)));
        }
        let dot = hirzebruch_dot(1, o, t);
        if dot != self.i as i64 {
            return Err(ClassifyError::Inconsistent(format!(
                "contact {} but i = {}",
                dot, self.i
            )));
        }
        let (pa_o, pa_t) = (pa_hirzebruch(1, o.0, o.1), pa_hirzebruch(1, t.0, t.1));
        if pa_o + pa_t + dot - 1 != 6 {
            return Err(ClassifyError::Inconsistent("union does not have genus 6".into()));
        }
        Ok(pa_t)
    }
}

fn type6_desc(k: u8) -> StableCurveDesc {
    match k {
        1 => looped(v(5).tag(NodalPlaneQuintic)),
        2 => two(v(5).tag(CuspidalQuinticNormalization), v(1), 1),
        3 => two(
            v(4).tag(MaroniSpecial).cond(G13RamificationPoint),
            v(2).cond(Weierstrass),
            1,
        ),
        4 => two(v(3).tag(PlaneQuartic).cond(Bitangent), hyp(3).cond(Weierstrass), 1),
        5 => two(v(2), hyp(4).cond(Weierstrass), 1),
        6 => two(v(3).tag(PlaneQuartic).cond(Hyperflex), hyp(3), 1),
        7 => two(v(1), hyp(5), 1),
        8 => two(v(4).tag(MaroniSpecial).cond(G13Fiber), v(1), 2),
        9 => two(
            v(3).tag(PlaneQuartic).cond(TangentLineThirdPoint),
            v(2).cond(HyperellipticConjugatePair),
            2,
        ),
        _ => two(v(2), hyp(3).cond(HyperellipticConjugatePair), 2),
    }
}

/// Stable genera and edge count of the irreducible case: the main-side
/// normalization joined to the tail at one or two points, with a rational
/// tail on two points absorbed into a loop.
fn type6_irreducible_shape(i: u32) -> Result<(Vec<i64>, usize), ClassifyError> {
    let x = geometric_genus(pa_hirzebruch(1, 4, 5), &[AkSing::new(i as i64 - 1)?])?;
    let y = hyperelliptic_tail_genus(i);
    let edges = if i % 2 == 1 { 1 } else { 2 };
    Ok(match (y, edges) {
        (0, 2) => (vec![x], 1),
        _ => {
            let mut g = vec![x, y];
            g.sort();
            (g, edges)
        }
    })
}

pub fn classify_type_6() -> Result<Vec<DivisorRecord>, ClassifyError> {
    let mut sources: Vec<Vec<Source>> = vec![Vec::new(); 10];
    let mut notes: Vec<Vec<String>> = vec![Vec::new(); 10];
    let src = |k: u8, detail: String| Source {
        graph_type: "6".into(),
        divisor: format!("6.{}", k),
        detail,
    };
    for i in 1..=14u32 {
        if let Type6Fate::Divisor(k) = type6_irreducible_fate(i) {
            let (genera, edges) = type6_irreducible_shape(i)?;
            let desc = type6_desc(k);
            let shape = desc.shape();
            if shape.genera != genera || shape.edges.len() != edges {
                return Err(ClassifyError::Inconsistent(format!(
                    "i = {} gives genera {:?} with {} edges, divisor 6.{} has {:?}",
                    i, genera, edges, k, shape
                )));
            }
            sources[k as usize - 1].push(src(k, format!("i={} irreducible", i)));
            if i % 2 == 0 {
                notes[k as usize - 1].push(format!(
                    "i={}: tail genus {} = i/2 - 1 from {} branch points",
                    i,
                    hyperelliptic_tail_genus(i),
                    i
                ));
            }
        }
    }
    for case in type6_reducible_cases() {
        let x = case.check()?;
        let k = case.divisor;
        let desc = type6_desc(k);
        if !desc.vertices.iter().any(|vx| vx.genus == x) {
            return Err(ClassifyError::Inconsistent(format!(
                "reducible i = {}: tangent curve of genus {} not in 6.{}",
                case.i, x, k
            )));
        }
        sources[k as usize - 1].push(src(
            k,
            format!(
                "i={} reducible {}σ+{}F ∪ {}σ+{}F",
                case.i, case.other.0, case.other.1, case.tangent.0, case.tangent.1
            ),
        ));
    }
    (1..=10u8)
        .map(|k| {
            let idx = k as usize - 1;
            record(
                format!("6.{}", k),
                type6_desc(k),
                sources[idx].clone(),
                notes[idx].clone(),
            )
        })
        .collect()
}
