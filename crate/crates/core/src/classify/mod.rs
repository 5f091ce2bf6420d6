//! The boundary divisors of the closure of the plane-quintic locus in the
//! moduli of genus-6 curves, assembled type by type.

mod desc;
mod divisors;
mod models;
mod table1;
mod types78;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::parity::ParityError;
use crate::resolve::ResolveError;

pub use desc::{stable_pa, CurveTag, GraphShape, PointCondition, StableCurveDesc, StableVertex};
pub use divisors::{
    classify_type_1_5, classify_type_6, hyperelliptic_tail_genus, row_fate, theorem_catalog, theorem_index_of,
    type6_irreducible_fate, type6_reducible_cases, DivisorRecord, ReducibleCase, RowFate, Source, Type6Fate,
};
pub use models::{
    c2_entry, c2_label, enumerate_c1_models, enumerate_c2_models, HalfEdge, HalfSide, LocalModelEntry, Provenance,
    C2_FAMILIES,
};
pub use table1::{
    allowed_cycle_types, allowed_orders, node_cycle_type, table1, table1_markdown, table1_tsv, Table1Row,
    TABLE1_COLUMNS,
};
pub use types78::{
    assemble_nontrivial, assemble_trivial, check_table2_row, check_table3_row, classify_type_7, classify_type_8,
    table2_markdown, table2_rows, table2_tsv, table3_markdown, table3_rows, table3_tsv, type7_desc, type8_desc,
    type8_trivial_sources, worked_example_parity, worked_example_pieces, NontrivialAssembly, PreStable, RowCheck,
    ShortEnd, Table2Row, Table3Row, Wiring, TABLE2_COLUMNS, TABLE3_COLUMNS,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("dual graph is disconnected")]
    Disconnected,
    #[error("{what} = {value} outside {range}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        range: &'static str,
    },
    #[error("inconsistent data: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Resolve(#[from] ResolveError),
    #[error(transparent)]
    Parity(#[from] ParityError),
}

/// Which family of boundary graphs to classify.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFamily {
    OneToFive,
    Six,
    Seven,
    Eight,
}

pub fn classify(family: GraphFamily) -> Result<Vec<DivisorRecord>, ClassifyError> {
    match family {
        GraphFamily::OneToFive => classify_type_1_5(),
        GraphFamily::Six => classify_type_6(),
        GraphFamily::Seven => classify_type_7(),
        GraphFamily::Eight => classify_type_8(),
    }
}

/// Union of all per-type records, merged by stable curve and ordered by
/// catalog position. Records matching no catalog entry are kept at the end
/// with no index.
pub fn theorem_divisors() -> Result<Vec<DivisorRecord>, ClassifyError> {
    let mut all = Vec::new();
    for fam in [
        GraphFamily::OneToFive,
        GraphFamily::Six,
        GraphFamily::Seven,
        GraphFamily::Eight,
    ] {
        all.extend(classify(fam)?);
    }
    let mut merged: Vec<DivisorRecord> = Vec::new();
    for rec in all {
        match merged.iter_mut().find(|m| m.desc.same_curve(&rec.desc)) {
            Some(m) => m.sources.extend(rec.sources),
            None => merged.push(DivisorRecord {
                label: String::new(),
                theorem_index: rec.theorem_index,
                desc: rec.desc.canonical(),
                sources: rec.sources,
                annotations: Vec::new(),
            }),
        }
    }
    merged.sort_by_key(|m| m.theorem_index.unwrap_or(u8::MAX));
    for m in &mut merged {
        m.sources.sort();
        m.sources.dedup();
        m.label = match m.theorem_index {
            Some(i) => format!("item {}", i),
            None => "unmatched".into(),
        };
    }
    Ok(merged)
}

/// Serialized form of one merged divisor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremEntry {
    pub index: Option<u8>,
    pub curve: String,
    pub genera: Vec<i64>,
    pub edges: Vec<(usize, usize)>,
    pub sources: Vec<String>,
}

pub fn theorem_entries(recs: &[DivisorRecord]) -> Vec<TheoremEntry> {
    recs.iter()
        .map(|r| {
            let mut labels: Vec<String> = r.sources.iter().map(|s| s.divisor.clone()).collect();
            labels.dedup();
            TheoremEntry {
                index: r.theorem_index,
                curve: r.desc.to_string(),
                genera: r.desc.vertices.iter().map(|v| v.genus).collect(),
                edges: r.desc.edges.clone(),
                sources: labels,
            }
        })
        .collect()
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn theorem_json(recs: &[DivisorRecord]) -> String {
    pretty(&theorem_entries(recs))
}

/// Short-end models for `i = 1..=4`, keyed by `i`.
pub fn c1_models_json() -> Result<String, ClassifyError> {
    let mut map = BTreeMap::new();
    for i in 1..=4u32 {
        map.insert(i, enumerate_c1_models(i)?);
    }
    Ok(pretty(&map))
}

/// Long-end models for `j = 1..=9`, keyed by `j`.
pub fn c2_models_json() -> Result<String, ClassifyError> {
    let mut map = BTreeMap::new();
    for j in 1..=9u32 {
        map.insert(j, enumerate_c2_models(j)?);
    }
    Ok(pretty(&map))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thirteen_divisors() {
        let recs = theorem_divisors().unwrap();
        assert_eq!(recs.len(), 13);
        let idx: Vec<Option<u8>> = recs.iter().map(|r| r.theorem_index).collect();
        assert_eq!(idx, (1..=13).map(Some).collect::<Vec<_>>());
        assert!(recs
            .iter()
            .all(|r| stable_pa(&r.desc) == Ok(6) && !r.sources.is_empty()));
    }

    #[test]
    fn every_record_maps_to_one_item() {
        let cat = theorem_catalog();
        for fam in [
            GraphFamily::OneToFive,
            GraphFamily::Six,
            GraphFamily::Seven,
            GraphFamily::Eight,
        ] {
            for r in classify(fam).unwrap() {
                let hits = cat.iter().filter(|d| d.same_curve(&r.desc)).count();
                assert_eq!(hits, 1, "{}", r.label);
            }
        }
    }

    #[test]
    fn source_counts() {
        let recs = theorem_divisors().unwrap();
        let counts: Vec<usize> = recs
            .iter()
            .map(|r| {
                let mut l: Vec<&str> = r.sources.iter().map(|s| s.divisor.as_str()).collect();
                l.dedup();
                l.len()
            })
            .collect();
        assert_eq!(counts, vec![2, 2, 1, 2, 2, 2, 2, 1, 2, 2, 2, 2, 3]);
    }

    #[test]
    fn json_round_trips() {
        let recs = theorem_divisors().unwrap();
        let s = theorem_json(&recs);
        let back: Vec<TheoremEntry> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, theorem_entries(&recs));
        let c1: BTreeMap<u32, Vec<LocalModelEntry>> = serde_json::from_str(&c1_models_json().unwrap()).unwrap();
        assert_eq!(c1.len(), 4);
    }
}
