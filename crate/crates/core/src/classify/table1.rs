//! Divisors of types (1)–(5): the two main components carry tetragonal
//! curves on orbifold scrolls glued over the node.

use std::fmt::Write as _;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::ClassifyError;
use crate::covergraphs::enumerate_boundary_types;
use crate::frac::Frac;
use crate::orbiscroll::tetragonal_branch_relation;
use crate::resolve::{derive_attach_spec, genus_rh, normalization_genus};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Row {
    pub row: u8,
    pub graph_type: u8,
    pub r: i64,
    pub v1: Frac,
    pub v2: Frac,
    pub m1: Frac,
    pub m2: Frac,
    pub g1: i64,
    pub g2: i64,
    pub disc1: bool,
    pub disc2: bool,
    /// Branch counts of the two components.
    pub b1: u32,
    pub b2: u32,
    /// Cycle type of the node monodromy, parts descending.
    pub cycle_type: Vec<u32>,
}

/// Orbifold orders allowed at the node for each graph type.
pub fn allowed_orders(graph_type: u8) -> &'static [i64] {
    match graph_type {
        1 => &[1, 2],
        2 | 3 => &[2, 4],
        4 | 5 => &[3],
        _ => &[],
    }
}

/// Node cycle types compatible with the local picture of each graph type.
pub fn allowed_cycle_types(graph_type: u8) -> &'static [&'static [u32]] {
    match graph_type {
        1 => &[&[1, 1, 1, 1], &[2, 2]],
        2 | 3 => &[&[1, 1, 1, 1], &[2, 1, 1], &[2, 2], &[4]],
        4 | 5 => &[&[1, 1, 1, 1], &[3, 1]],
        _ => &[],
    }
}

/// Cycle type of the node monodromy of `4σ + mF` on the scroll with twist
/// `a` over `P¹(r√0)`, read from the monomials `s^{4−i} t^i` whose weight
/// `m − ia` is an integer. `None` if the curve is not étale over the
/// orbifold point.
pub fn node_cycle_type(m: &Frac, a: &Frac, r: i64) -> Option<Vec<u32>> {
    let n = 4i64;
    let support: Vec<i64> = (0..=n)
        .filter(|&i| {
            let w = m - &a.scale(i);
            w.is_nonneg_integer()
        })
        .collect();
    let (lo, hi) = (*support.first()?, *support.last()?);
    let (fixed_t, fixed_s) = (lo, n - hi);
    if fixed_t > 1 || fixed_s > 1 {
        return None;
    }
    let l = if a.is_integer() {
        1
    } else {
        let ra = a.times_int(r)?;
        r / r.gcd(&ra)
    };
    let k = hi - lo;
    if k % l != 0 {
        return None;
    }
    let mut parts = vec![1u32; (fixed_t + fixed_s) as usize];
    parts.extend(std::iter::repeat_n(l as u32, (k / l) as usize));
    parts.sort_by(|x, y| y.cmp(x));
    Some(parts)
}

fn perm_order(parts: &[u32]) -> i64 {
    parts.iter().fold(1i64, |o, &p| o.lcm(&(p as i64)))
}

/// Twists `a ∈ (1/r)Z≥0` for which a smooth member exists.
fn twist_values(b: u32, r: i64) -> Vec<Frac> {
    let bound = Frac::new(b as i64, 6);
    (0..)
        .map(|k| Frac::new(k, r))
        .take_while(|a| *a <= bound)
        .filter(|a| tetragonal_branch_relation(a, b).smooth_ok)
        .collect()
}

/// `2g − 2 = −8 + b + (4 − orbits)`; a disconnected curve may reach `−1`.
fn rh_genus(b: u32, cycle_type: &[u32]) -> i64 {
    let ram = b as i64 + 4 - cycle_type.len() as i64;
    match genus_rh(4, 0, ram) {
        Ok(g) => g,
        Err(_) => (ram - 8) / 2 + 1,
    }
}

/// Representative of `(v1, v2)` under swapping and global sign.
fn symmetric_canonical(v1: &Frac, v2: &Frac) -> (Frac, Frac) {
    let cands = [
        (v1.clone(), v2.clone()),
        (v2.clone(), v1.clone()),
        (-v1, -v2),
        (-v2, -v1),
    ];
    cands
        .into_iter()
        .min_by(|x, y| (x.0.abs(), x.0.is_negative(), x.1.clone()).cmp(&(y.0.abs(), y.0.is_negative(), y.1.clone())))
        .expect("nonempty")
}

/// The sixteen rows, sorted by `(type, r, v1, v2)`.
pub fn table1() -> Vec<Table1Row> {
    let mut rows = Vec::new();
    for bt in enumerate_boundary_types(3) {
        let Some(t) = bt.type_index.filter(|t| (1..=5).contains(t)) else {
            continue;
        };
        let (b1, b2) = (bt.main_degrees[1], bt.main_degrees[0]);
        for &r in allowed_orders(t) {
            for a1 in twist_values(b1, r) {
                for a2 in twist_values(b2, r) {
                    let m1 = tetragonal_branch_relation(&a1, b1).m;
                    let m2 = tetragonal_branch_relation(&a2, b2).m;
                    let (Some(c1), Some(c2)) = (node_cycle_type(&m1, &a1, r), node_cycle_type(&m2, &a2, r)) else {
                        continue;
                    };
                    if c1 != c2 || perm_order(&c1) != r || !allowed_cycle_types(t).contains(&c1.as_slice()) {
                        continue;
                    }
                    let disc1 = a1 == Frac::new(b1 as i64, 6);
                    let disc2 = a2 == Frac::new(b2 as i64, 6);
                    for (s1, s2) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        if (a1.is_zero() && s1 < 0) || (a2.is_zero() && s2 < 0) {
                            continue;
                        }
                        let (v1, v2) = (a1.scale(s1), a2.scale(s2));
                        let first = if v1.is_zero() { &v2 } else { &v1 };
                        if first.is_negative() {
                            continue;
                        }
                        if (&v1 + &v2).int_mod(2) != Some(1) {
                            continue;
                        }
                        // Two disconnected components glue only directrix to co-directrix.
                        if disc1 && disc2 && s1 == s2 {
                            continue;
                        }
                        if t == 2 && symmetric_canonical(&v1, &v2) != (v1.clone(), v2.clone()) {
                            continue;
                        }
                        rows.push(Table1Row {
                            row: 0,
                            graph_type: t,
                            r,
                            v1,
                            v2,
                            m1: m1.clone(),
                            m2: m2.clone(),
                            g1: rh_genus(b1, &c1),
                            g2: rh_genus(b2, &c2),
                            disc1,
                            disc2,
                            b1,
                            b2,
                            cycle_type: c1.clone(),
                        });
                    }
                }
            }
        }
    }
    rows.sort_by(|x, y| (x.graph_type, x.r, &x.v1, &x.v2).cmp(&(y.graph_type, y.r, &y.v1, &y.v2)));
    for (i, row) in rows.iter_mut().enumerate() {
        row.row = i as u8 + 1;
    }
    rows
}

impl Table1Row {
    /// Genus of component `side ∈ {1, 2}` by Riemann–Hurwitz over the
    /// orbifold base.
    pub fn rh_genus(&self, side: u8) -> i64 {
        match side {
            1 => rh_genus(self.b1, &self.cycle_type),
            _ => rh_genus(self.b2, &self.cycle_type),
        }
    }

    /// Genus of component `side` from the resolved scroll: the normalization
    /// genus of `4σ + mF`, or of `3σ + mF` minus one when the directrix
    /// splits off.
    pub fn normalization_genus(&self, side: u8) -> Result<i64, ClassifyError> {
        let (m, v, disc) = match side {
            1 => (&self.m1, &self.v1, self.disc1),
            _ => (&self.m2, &self.v2, self.disc2),
        };
        let a = v.abs();
        let n = if disc { 3 } else { 4 };
        let spec = derive_attach_spec(n, m, &a, self.r)?;
        let route = normalization_genus(n, m, &a, self.r, &spec)?;
        Ok(if disc { route.genus - 1 } else { route.genus })
    }

    fn genus_text(g: i64, disc: bool) -> String {
        if disc {
            format!("{}*", g)
        } else {
            g.to_string()
        }
    }

    /// Cells in printed column order.
    pub fn cells(&self) -> [String; 8] {
        [
            self.row.to_string(),
            self.graph_type.to_string(),
            self.r.to_string(),
            format!("(0,{}),(0,{})", self.v1, self.v2),
            self.m1.to_string(),
            self.m2.to_string(),
            Self::genus_text(self.g1, self.disc1),
            Self::genus_text(self.g2, self.disc2),
        ]
    }
}

pub const TABLE1_COLUMNS: [&str; 8] = ["row", "type", "r", "V", "m1", "m2", "g1", "g2"];

pub fn table1_tsv(rows: &[Table1Row]) -> String {
    let mut out = TABLE1_COLUMNS.join("\t");
    out.push('\n');
    for row in rows {
        out.push_str(&row.cells().join("\t"));
        out.push('\n');
    }
    out
}

pub fn table1_markdown(rows: &[Table1Row]) -> String {
    let mut out = String::new();
    writeln!(out, "| {} |", TABLE1_COLUMNS.join(" | ")).ok();
    writeln!(out, "|{}", "---|".repeat(TABLE1_COLUMNS.len())).ok();
    for row in rows {
        writeln!(out, "| {} |", row.cells().join(" | ")).ok();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frac::q;

    #[test]
    fn sixteen_rows() {
        assert_eq!(table1().len(), 16);
    }

    #[test]
    fn row_examples() {
        let rows = table1();
        let r1 = &rows[0];
        assert_eq!(
            (
                r1.graph_type,
                r1.r,
                r1.v1.clone(),
                r1.v2.clone(),
                r1.g1,
                r1.g2,
                r1.disc2
            ),
            (1, 1, q(0, 1), q(1, 1), 3, 0, true)
        );
        let r4 = &rows[3];
        assert_eq!(r4.cells().join(" "), "4 1 2 (0,1/2),(0,1/2) 3 2 4 1");
        let r7 = &rows[6];
        assert_eq!(r7.cells().join(" "), "7 2 4 (0,1/4),(0,3/4) 2 3 3 3");
    }

    #[test]
    fn cycle_types() {
        assert_eq!(node_cycle_type(&q(3, 1), &q(1, 2), 2), Some(vec![2, 2]));
        assert_eq!(node_cycle_type(&q(7, 3), &q(1, 3), 3), Some(vec![3, 1]));
        assert_eq!(node_cycle_type(&q(2, 1), &q(1, 4), 4), Some(vec![4]));
        assert_eq!(node_cycle_type(&q(2, 1), &q(0, 1), 1), Some(vec![1, 1, 1, 1]));
    }

    #[test]
    fn symmetric_representative() {
        assert_eq!(symmetric_canonical(&q(-3, 2), &q(1, 2)), (q(1, 2), q(-3, 2)));
        assert_eq!(symmetric_canonical(&q(3, 4), &q(1, 4)), (q(1, 4), q(3, 4)));
    }
}
