//! The thirteen resolution–contraction diagrams as checked-in data.
//!
//! Each entry fixes a class `nσ + mF` on `F_a` over order `r` and the curves
//! of the resolved central fiber that the main curve meets, read from the
//! left-hand pictures.

use serde::{Deserialize, Serialize};

use super::build::{build_coarse_fiber_config, AttachSpec, Position};
use super::config::CurveConfig;
use super::contract::contract_minus_ones;
use super::ResolveError;
use crate::frac::{q, Frac};

/// One left/right diagram pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagram {
    pub item: u32,
    pub n: u32,
    pub m: Frac,
    pub a: Frac,
    pub r: i64,
    pub spec: AttachSpec,
}

impl Diagram {
    /// The pre-contraction configuration.
    pub fn left(&self) -> Result<CurveConfig, ResolveError> {
        build_coarse_fiber_config(self.r, &self.a, &self.spec)
    }

    /// The blown-down configuration.
    pub fn right(&self) -> Result<CurveConfig, ResolveError> {
        contract_minus_ones(&self.left()?)
    }

    /// Golden-file text: scroll data, then `[left]` and `[right]` sections.
    pub fn render(&self) -> Result<String, ResolveError> {
        Ok(format!(
            "# item {}: {}σ+{}F on F_{} over order {}\nn {}\nm {}\na {}\nr {}\n[left]\n{}[right]\n{}",
            self.item,
            self.n,
            self.m,
            self.a,
            self.r,
            self.n,
            self.m,
            self.a,
            self.r,
            self.left()?.to_text(),
            self.right()?.to_text()
        ))
    }
}

/// A parsed golden diagram file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenDiagram {
    pub n: u32,
    pub m: Frac,
    pub a: Frac,
    pub r: i64,
    pub left: CurveConfig,
    pub right: CurveConfig,
}

/// Parses the format written by [`Diagram::render`].
pub fn parse_golden_diagram(text: &str) -> Result<GoldenDiagram, ResolveError> {
    let mut header: Vec<(usize, &str)> = Vec::new();
    let (mut left, mut right) = (String::new(), String::new());
    let mut section = 0;
    for (k, line) in text.lines().enumerate() {
        match line.trim() {
            "[left]" => section = 1,
            "[right]" => section = 2,
            t => match section {
                0 => header.push((k + 1, t)),
                1 => {
                    left.push_str(line);
                    left.push('\n');
                }
                _ => {
                    right.push_str(line);
                    right.push('\n');
                }
            },
        }
    }
    if section != 2 {
        return Err(ResolveError::Parse {
            line: text.lines().count(),
            text: "missing [left] or [right] section".into(),
        });
    }
    let field = |key: &str| -> Result<&str, ResolveError> {
        header
            .iter()
            .find_map(|(_, l)| l.strip_prefix(key).and_then(|v| v.strip_prefix(' ')))
            .map(str::trim)
            .ok_or_else(|| ResolveError::Parse {
                line: 0,
                text: format!("missing header field {}", key),
            })
    };
    let bad = |key: &str| ResolveError::Parse {
        line: 0,
        text: format!("bad header field {}", key),
    };
    Ok(GoldenDiagram {
        n: field("n")?.parse().map_err(|_| bad("n"))?,
        m: field("m")?.parse().map_err(|_| bad("m"))?,
        a: field("a")?.parse().map_err(|_| bad("a"))?,
        r: field("r")?.parse().map_err(|_| bad("r"))?,
        left: CurveConfig::from_text(&left)?,
        right: CurveConfig::from_text(&right)?,
    })
}

fn item(item: u32, n: u32, m: Frac, a: Frac, r: i64, at: &[(Position, u32)]) -> Diagram {
    let spec = at.iter().fold(AttachSpec::default(), |s, (p, k)| s.with(*p, *k));
    Diagram { item, n, m, a, r, spec }
}

/// All thirteen diagrams, in order.
pub fn diagrams() -> Vec<Diagram> {
    use Position::{Directrix as S, Fiber as F, SigmaChain as Sc, TauChain as Tc};
    vec![
        item(1, 4, q(2, 1), q(1, 2), 2, &[(F, 2)]),
        item(2, 4, q(5, 2), q(1, 2), 2, &[(Sc(0), 1), (F, 1), (Tc(0), 1)]),
        item(3, 4, q(3, 1), q(1, 2), 2, &[(F, 2), (S, 1)]),
        item(4, 4, q(7, 2), q(1, 2), 2, &[(Sc(0), 1), (F, 1), (Tc(0), 1), (S, 1)]),
        item(5, 4, q(2, 1), q(1, 3), 3, &[(Sc(0), 1), (F, 1)]),
        item(6, 4, q(7, 3), q(1, 3), 3, &[(F, 1), (Tc(0), 1), (S, 1)]),
        item(7, 4, q(8, 3), q(2, 3), 3, &[(F, 1), (Tc(1), 1)]),
        item(8, 4, q(3, 1), q(2, 3), 3, &[(Sc(0), 1), (F, 1)]),
        item(9, 4, q(2, 1), q(1, 4), 4, &[(F, 1), (S, 1)]),
        item(10, 4, q(3, 1), q(3, 4), 4, &[(F, 1)]),
        item(11, 3, q(9, 2), q(3, 2), 2, &[(F, 1), (Tc(0), 1)]),
        item(12, 3, q(4, 1), q(4, 3), 3, &[(F, 1)]),
        item(13, 3, q(5, 1), q(5, 3), 3, &[(F, 1)]),
    ]
}

/// The diagram drawn for `(n, m, a, r)`, if any.
pub fn diagram_for(n: u32, m: &Frac, a: &Frac, r: i64) -> Option<Diagram> {
    diagrams()
        .into_iter()
        .find(|d| d.n == n && &d.m == m && &d.a == a && d.r == r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thirteen_items_in_order() {
        let ds = diagrams();
        assert_eq!(ds.len(), 13);
        assert!(ds.iter().enumerate().all(|(k, d)| d.item as usize == k + 1));
        assert_eq!(diagram_for(3, &q(4, 1), &q(4, 3), 3).unwrap().item, 12);
        assert!(diagram_for(3, &q(4, 1), &q(4, 3), 2).is_none());
    }

    #[test]
    fn render_parse_round_trip() {
        let d = &diagrams()[6];
        let text = d.render().unwrap();
        let g = parse_golden_diagram(&text).unwrap();
        assert_eq!((g.n, g.r), (4, 3));
        assert_eq!(g.a, q(2, 3));
        assert!(g.left.is_isomorphic(&d.left().unwrap()));
        assert!(g.right.is_isomorphic(&d.right().unwrap()));
        assert!(parse_golden_diagram("n 4\n[left]\n").is_err());
    }
}
