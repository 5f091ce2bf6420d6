//! Regeneration and comparison of the checked-in golden data.

use std::fmt;
use std::fs;
use std::io;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::{
    c1_models_json, c2_models_json, table1, table1_tsv, table2_rows, table2_tsv, table3_rows, table3_tsv,
    theorem_divisors, theorem_json, worked_example_parity, worked_example_pieces, ClassifyError,
};
use crate::resolve::{diagrams, parse_golden_diagram, ResolveError};

#[derive(Debug, Error)]
pub enum GoldenError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Resolve(#[from] ResolveError),
}

/// How a golden file is compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Compare {
    /// Byte-exact; mismatches are reported per line.
    Text,
    /// Byte-exact; mismatches are reported per row and column.
    Tsv,
    /// Header fields exactly, both configurations up to isomorphism.
    Diagram,
}

/// A regenerated artifact and its path relative to the golden directory.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Artifact {
    pub path: String,
    pub compare: Compare,
    pub content: String,
}

/// Parity of the glued section of the worked type-(7) example for each `p`.
pub fn parity_example_tsv() -> Result<String, GoldenError> {
    let mut out = String::from("p\tpieces\tparity\n");
    for p in 0..=3 {
        let pieces = worked_example_pieces(p)?;
        let text: Vec<String> = pieces.iter().map(|x| x.to_string()).collect();
        let parity = worked_example_parity(p)?;
        out.push_str(&format!("{}\t{}\t{}\n", p, text.join(","), parity));
    }
    Ok(out)
}

/// Every golden artifact recomputed from the library.
pub fn artifacts() -> Result<Vec<Artifact>, GoldenError> {
    let text = |path: &str, compare, content| Artifact {
        path: path.to_string(),
        compare,
        content,
    };
    let mut out = vec![
        text("table1.tsv", Compare::Tsv, table1_tsv(&table1())),
        text("table2.tsv", Compare::Tsv, table2_tsv(&table2_rows())),
        text("table3.tsv", Compare::Tsv, table3_tsv(&table3_rows())),
        text("theorem.json", Compare::Text, theorem_json(&theorem_divisors()?)),
        text("c1_models.json", Compare::Text, c1_models_json()?),
        text("c2_models.json", Compare::Text, c2_models_json()?),
        text("parity_example.tsv", Compare::Tsv, parity_example_tsv()?),
    ];
    for d in diagrams() {
        out.push(text(
            &format!("diagrams/item{:02}.txt", d.item),
            Compare::Diagram,
            d.render()?,
        ));
    }
    Ok(out)
}

/// One difference between a golden file and its recomputation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub file: String,
    pub detail: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.file, self.detail)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenReport {
    pub checked: Vec<String>,
    pub missing: Vec<String>,
    pub mismatches: Vec<Mismatch>,
}

impl GoldenReport {
    pub fn is_clean(&self) -> bool {
        self.missing.is_empty() && self.mismatches.is_empty()
    }

    /// One line per missing file or mismatch.
    pub fn lines(&self) -> Vec<String> {
        self.missing
            .iter()
            .map(|m| format!("missing file: {}", m))
            .chain(self.mismatches.iter().map(|m| m.to_string()))
            .collect()
    }
}

fn mismatch(file: &str, detail: String) -> Mismatch {
    Mismatch {
        file: file.to_string(),
        detail,
    }
}

/// Line-by-line differences; trailing lines on either side are reported once each.
pub fn diff_lines(file: &str, golden: &str, actual: &str) -> Vec<Mismatch> {
    let (g, a): (Vec<&str>, Vec<&str>) = (golden.lines().collect(), actual.lines().collect());
    let mut out = Vec::new();
    for k in 0..g.len().max(a.len()) {
        match (g.get(k), a.get(k)) {
            (Some(x), Some(y)) if x == y => {}
            (Some(x), Some(y)) => out.push(mismatch(
                file,
                format!("line {}: golden {:?}, computed {:?}", k + 1, x, y),
            )),
            (Some(x), None) => out.push(mismatch(
                file,
                format!("line {}: golden {:?}, computed nothing", k + 1, x),
            )),
            (None, Some(y)) => out.push(mismatch(
                file,
                format!("line {}: golden nothing, computed {:?}", k + 1, y),
            )),
            (None, None) => {}
        }
    }
    if out.is_empty() && golden != actual {
        out.push(mismatch(file, "line endings or trailing newline differ".into()));
    }
    out
}

/// Cell-by-cell differences, naming the row by its first cell and the column
/// by its header.
pub fn diff_tsv(file: &str, golden: &str, actual: &str) -> Vec<Mismatch> {
    let (g, a): (Vec<&str>, Vec<&str>) = (golden.lines().collect(), actual.lines().collect());
    if g.first() != a.first() || g.len() != a.len() {
        return diff_lines(file, golden, actual);
    }
    let header: Vec<&str> = a.first().map(|h| h.split('\t').collect()).unwrap_or_default();
    let mut out = Vec::new();
    for (k, (gl, al)) in g.iter().zip(&a).enumerate().skip(1) {
        let (gc, ac): (Vec<&str>, Vec<&str>) = (gl.split('\t').collect(), al.split('\t').collect());
        if gc.len() != ac.len() {
            out.extend(diff_lines(file, gl, al).into_iter().map(|m| Mismatch {
                detail: format!("line {}: {}", k + 1, m.detail),
                ..m
            }));
            continue;
        }
        for (c, (x, y)) in gc.iter().zip(&ac).enumerate() {
            if x != y {
                let col = header.get(c).copied().unwrap_or("?");
                out.push(mismatch(
                    file,
                    format!("row {} column {}: golden {:?}, computed {:?}", ac[0], col, x, y),
                ));
            }
        }
    }
    if out.is_empty() && golden != actual {
        out.push(mismatch(file, "line endings or trailing newline differ".into()));
    }
    out
}

fn diff_diagram(file: &str, golden: &str, actual: &str) -> Vec<Mismatch> {
    let g = match parse_golden_diagram(golden) {
        Ok(g) => g,
        Err(e) => return vec![mismatch(file, format!("unparseable: {}", e))],
    };
    let a = parse_golden_diagram(actual).expect("rendered diagrams parse");
    let mut out = Vec::new();
    if (g.n, &g.m, &g.a, g.r) != (a.n, &a.m, &a.a, a.r) {
        out.push(mismatch(
            file,
            format!(
                "header: golden n={} m={} a={} r={}, computed n={} m={} a={} r={}",
                g.n, g.m, g.a, g.r, a.n, a.m, a.a, a.r
            ),
        ));
    }
    if !g.left.is_isomorphic(&a.left) {
        out.push(mismatch(
            file,
            "[left] not isomorphic to the built configuration".into(),
        ));
    }
    if !g.right.is_isomorphic(&a.right) {
        out.push(mismatch(
            file,
            "[right] not isomorphic to the contracted configuration".into(),
        ));
    }
    out
}

/// Compares every artifact against the files under `dir`.
pub fn verify(dir: &Path) -> Result<GoldenReport, GoldenError> {
    let mut report = GoldenReport::default();
    for art in artifacts()? {
        let path = dir.join(&art.path);
        let golden = match fs::read_to_string(&path) {
            Ok(s) => s,
            Err(e) if e.kind() == io::ErrorKind::NotFound => {
                report.missing.push(art.path);
                continue;
            }
            Err(source) => {
                return Err(GoldenError::Io {
                    path: path.display().to_string(),
                    source,
                })
            }
        };
        let diffs = match art.compare {
            Compare::Text => diff_lines(&art.path, &golden, &art.content),
            Compare::Tsv => diff_tsv(&art.path, &golden, &art.content),
            Compare::Diagram => diff_diagram(&art.path, &golden, &art.content),
        };
        report.mismatches.extend(diffs);
        report.checked.push(art.path);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tsv_diff_names_row_and_column() {
        let g = "row\tg1\tg2\n1\t3\t0\n2\t4\t1\n";
        let a = "row\tg1\tg2\n1\t3\t0\n2\t4\t2\n";
        let d = diff_tsv("t.tsv", g, a);
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].to_string(), "t.tsv: row 2 column g2: golden \"1\", computed \"2\"");
        assert!(diff_tsv("t.tsv", g, g).is_empty());
    }

    #[test]
    fn line_diff_reports_length_changes() {
        let d = diff_lines("x", "a\nb\n", "a\n");
        assert_eq!(d.len(), 1);
        assert!(d[0].detail.starts_with("line 2"));
        assert_eq!(diff_lines("x", "a\n", "a").len(), 1);
    }

    #[test]
    fn parity_example_rows() {
        let t = parity_example_tsv().unwrap();
        assert_eq!(
            t,
            "p\tpieces\tparity\n0\t1,0,2\todd\n1\t1,0,3\teven\n2\t1,0,4\todd\n3\t1,0,5\teven\n"
        );
    }

    #[test]
    fn artifact_paths_unique() {
        let arts = artifacts().unwrap();
        let mut paths: Vec<&str> = arts.iter().map(|a| a.path.as_str()).collect();
        paths.sort();
        paths.dedup();
        assert_eq!(paths.len(), arts.len());
        assert_eq!(arts.len(), 20);
    }
}
