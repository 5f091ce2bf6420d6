//! Permutation shadows of the tetragonal–trigonal correspondence.
//!
//! `S₄` acts on `{1,2,3,4}`, by conjugation on the six transpositions and on
//! the three pair-partitions. Points are acted on from the left and
//! `(στ)(x) = σ(τ(x))`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Failures of permutation parsing and the local models.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecillasError {
    #[error("cannot parse permutation {0:?}")]
    Parse(String),
    #[error("point {point} out of range 1..={n}")]
    OutOfRange { point: usize, n: usize },
    #[error("point {0} repeated")]
    Repeated(usize),
    #[error("expected a permutation of {expected} letters, got {got}")]
    Size { expected: usize, got: usize },
    #[error("{0} does not preserve the partition {{12|34}}")]
    NotInD4(Perm),
    #[error("i + j = {0} is below -2")]
    SumTooSmall(i64),
    #[error("({i}, {j}) has no representative with both indices at least -1")]
    NoRepresentative { i: i64, j: i64 },
    #[error("local degree must be positive")]
    ZeroDegree,
}

/// A permutation of `{1..n}`, stored 0-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n).collect(),
        }
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self, RecillasError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n {
                return Err(RecillasError::OutOfRange { point: x + 1, n });
            }
            if seen[x] {
                return Err(RecillasError::Repeated(x + 1));
            }
            seen[x] = true;
        }
        Ok(Perm { images })
    }

    /// From disjoint 1-based cycles on `n` letters.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, RecillasError> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for c in cycles {
            for &p in c {
                if p == 0 || p > n {
                    return Err(RecillasError::OutOfRange { point: p, n });
                }
                if used[p - 1] {
                    return Err(RecillasError::Repeated(p));
                }
                used[p - 1] = true;
            }
            for (k, &p) in c.iter().enumerate() {
                images[p - 1] = c[(k + 1) % c.len()] - 1;
            }
        }
        Ok(Perm { images })
    }

    /// Parses cycle notation on `n` letters: `(1 2 3)(4)`, `(1,2,3)`, `()` or `id`.
    pub fn parse(n: usize, text: &str) -> Result<Self, RecillasError> {
        let err = || RecillasError::Parse(text.to_string());
        let t = text.trim();
        if t == "id" || t == "e" || t.is_empty() {
            return Ok(Perm::identity(n));
        }
        let mut cycles = Vec::new();
        let mut rest = t;
        while !rest.is_empty() {
            let inner = rest.strip_prefix('(').ok_or_else(err)?;
            let close = inner.find(')').ok_or_else(err)?;
            let body = &inner[..close];
            let pts: Result<Vec<usize>, _> = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>())
                .collect();
            let pts = pts.map_err(|_| err())?;
            if !pts.is_empty() {
                cycles.push(pts);
            }
            rest = inner[close + 1..].trim_start();
        }
        Perm::from_cycles(n, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(
            self.degree(),
            other.degree(),
            "composing permutations of different degree"
        );
        Perm {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// Disjoint cycles, 0-based, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut c = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                c.push(x);
                x = self.images[x];
            }
            out.push(c);
        }
        out
    }

    /// Cycle lengths, descending, fixed points included.
    pub fn cycle_type(&self) -> CycleType {
        CycleType::new(self.cycles().iter().map(|c| c.len() as u32).collect())
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|(x, y)| x == *y).count()
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }

    /// All permutations of `n` letters in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Perm> {
        fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
            let n = used.len();
            if prefix.len() == n {
                out.push(Perm { images: prefix.clone() });
                return;
            }
            for x in 0..n {
                if !used[x] {
                    used[x] = true;
                    prefix.push(x);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[x] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }
}

impl fmt::Display for Perm {
    /// Space-separated cycles with fixed points omitted; `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<Vec<usize>> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{}", self)
    }
}

impl FromStr for Perm {
    type Err = RecillasError;

    /// Parses on four letters.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Perm::parse(4, s)
    }
}

/// A partition of the number of letters, parts descending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CycleType(pub Vec<u32>);

impl CycleType {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.sort_by(|a, b| b.cmp(a));
        CycleType(parts)
    }

    pub fn trivial() -> Self {
        CycleType(vec![1, 1, 1, 1])
    }

    /// Number of orbits, i.e. points over the node of a degree-4 fiber.
    pub fn orbits(&self) -> usize {
        self.0.len()
    }

    /// The cycle types of elements of `D₄`.
    pub fn d4_types() -> [CycleType; 4] {
        [
            CycleType(vec![1, 1, 1, 1]),
            CycleType(vec![2, 1, 1]),
            CycleType(vec![2, 2]),
            CycleType(vec![4]),
        ]
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ps: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", ps.join(","))
    }
}

/// The six transpositions in the order (12),(13),(14),(23),(24),(34), 0-based.
pub const TRANSPOSITIONS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// The three pair-partitions {12|34}, {13|24}, {14|23}, each by the partner of 1.
pub const PAIR_PARTITIONS: [usize; 3] = [1, 2, 3];

fn transposition_index(a: usize, b: usize) -> usize {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    TRANSPOSITIONS
        .iter()
        .position(|&t| t == (a, b))
        .expect("distinct points of 0..4")
}

fn partition_index_of_pair(a: usize, b: usize) -> usize {
    // The partition containing {a, b} is named by the partner of point 0.
    let partner = if a == 0 {
        b
    } else if b == 0 {
        a
    } else {
        (1..4).find(|&x| x != a && x != b).expect("three other points")
    };
    PAIR_PARTITIONS
        .iter()
        .position(|&p| p == partner)
        .expect("partner in 1..4")
}

fn check_s4(s: &Perm) {
    assert_eq!(s.degree(), 4, "expected an element of S4");
}

/// Induced conjugation action on the six transpositions.
pub fn on_transpositions(s: &Perm) -> Perm {
    check_s4(s);
    let images = TRANSPOSITIONS
        .iter()
        .map(|&(a, b)| transposition_index(s.apply(a), s.apply(b)))
        .collect();
    Perm { images }
}

/// Induced action on the three pair-partitions.
pub fn on_partitions(s: &Perm) -> Perm {
    check_s4(s);
    let images = PAIR_PARTITIONS
        .iter()
        .map(|&p| partition_index_of_pair(s.apply(0), s.apply(p)))
        .collect();
    Perm { images }
}

/// Fixed points on the 4 letters, 3 pair-partitions and 6 transpositions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixCounts {
    pub fix4: usize,
    pub fix3: usize,
    pub fix6: usize,
}

/// Fixed-point counts of `s` on the three `S₄`-sets.
pub fn fix_counts(s: &Perm) -> FixCounts {
    FixCounts {
        fix4: s.fixed_points(),
        fix3: on_partitions(s).fixed_points(),
        fix6: on_transpositions(s).fixed_points(),
    }
}

/// The permutation-character identity `1 + fix₆ = fix₃ + fix₄`.
pub fn recillas_character_check(s: &Perm) -> bool {
    let c = fix_counts(s);
    1 + c.fix6 == c.fix3 + c.fix4
}

/// Monodromy of the trigonal curve and of the double cover of it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Correspondence {
    pub trigonal: Vec<Perm>,
    pub double: Vec<Perm>,
}

/// Transports tetragonal monodromy to the 3-set and the 6-set.
pub fn tetragonal_to_trigonal(mon: &[Perm]) -> Correspondence {
    Correspondence {
        trigonal: mon.iter().map(on_partitions).collect(),
        double: mon.iter().map(on_transpositions).collect(),
    }
}

/// The Klein four-group: the kernel of the action on pair-partitions.
pub fn klein_four() -> Vec<Perm> {
    Perm::all(4)
        .into_iter()
        .filter(|s| on_partitions(s).is_identity())
        .collect()
}

/// `A₄`, the even permutations.
pub fn alternating_four() -> Vec<Perm> {
    Perm::all(4)
        .into_iter()
        .filter(|s| s.cycle_type().0.iter().filter(|p| *p % 2 == 0).count() % 2 == 0)
        .collect()
}

/// `D₄ = Stab({{1,2},{3,4}})`.
pub fn dihedral_four() -> Vec<Perm> {
    Perm::all(4).into_iter().filter(in_d4).collect()
}

/// The copy of `S₃` permuting only the first three letters.
pub fn s3_first_three() -> Vec<Perm> {
    Perm::all(4).into_iter().filter(|s| s.apply(3) == 3).collect()
}

fn in_d4(s: &Perm) -> bool {
    s.degree() == 4 && partition_index_of_pair(s.apply(0), s.apply(1)) == 0
}

/// Whether `π ∈ D₄` exchanges the blocks {1,2} and {3,4}.
pub fn blocks_swapped(pi: &Perm) -> Result<bool, RecillasError> {
    if pi.degree() != 4 {
        return Err(RecillasError::Size {
            expected: 4,
            got: pi.degree(),
        });
    }
    if !in_d4(pi) {
        return Err(RecillasError::NotInD4(pi.clone()));
    }
    Ok(pi.apply(0) >= 2)
}

/// Whether `π` moves the transposition (12) to (34) by conjugation.
pub fn swaps_pair_12_34(pi: &Perm) -> bool {
    let t = on_transpositions(pi);
    let i12 = transposition_index(0, 1);
    let i34 = transposition_index(2, 3);
    t.apply(i12) == i34
}

/// Labels of the four points over a pair-partition boundary point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BoundaryLabel {
    I,
    II,
    III,
    IV,
}

/// The labeled elements `I ↔ (13)(24)`, `II ↔ (14)(32)`, `III ↔ (12)(34)`, `IV ↔ id`.
pub fn boundary_labels() -> [(BoundaryLabel, Perm); 4] {
    let p = |s: &str| Perm::parse(4, s).expect("fixed data");
    [
        (BoundaryLabel::I, p("(1 3)(2 4)")),
        (BoundaryLabel::II, p("(1 4)(3 2)")),
        (BoundaryLabel::III, p("(1 2)(3 4)")),
        (BoundaryLabel::IV, p("()")),
    ]
}

/// Whether the cover over the local orbifold chart keeps the two fiber
/// components or exchanges them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LocalCase {
    PreservesComponents,
    SwitchesComponents,
}

/// Singularities of the coarse curve over the node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LocalSing {
    /// An `A_i` and an `A_j` with `i + j = n − 2`.
    Pair { i: i64, j: i64 },
    /// Two conjugate `A_k`.
    TwinA(i64),
}

/// One admissible singularity with its monodromy cycle type; `None` when the
/// rule for this parity combination is not stated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalOption {
    pub sing: LocalSing,
    pub cycle_type: Option<CycleType>,
}

/// Possible local pictures over a node of coarse local degree `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonodromyLocalModel {
    pub case: LocalCase,
    pub n: u32,
    pub options: Vec<LocalOption>,
    /// Representatives of the pairs up to `(i, j) ↦ (i − 2, j + 2)`.
    pub canonical: Vec<(i64, i64)>,
}

/// The local models over a node of local degree `n`.
pub fn local_model(case: LocalCase, n: u32) -> Result<MonodromyLocalModel, RecillasError> {
    if n == 0 {
        return Err(RecillasError::ZeroDegree);
    }
    let n_i = n as i64;
    match case {
        LocalCase::SwitchesComponents => {
            let ct = if n.is_multiple_of(2) {
                CycleType(vec![2, 2])
            } else {
                CycleType(vec![4])
            };
            Ok(MonodromyLocalModel {
                case,
                n,
                options: vec![LocalOption {
                    sing: LocalSing::TwinA(n_i - 1),
                    cycle_type: Some(ct),
                }],
                canonical: vec![],
            })
        }
        LocalCase::PreservesComponents => {
            let mut options = Vec::new();
            let mut canonical = Vec::new();
            for i in -1..=n_i - 1 {
                let j = n_i - 2 - i;
                let cycle_type = if n % 2 == 1 {
                    Some(CycleType(vec![2, 1, 1]))
                } else if i.rem_euclid(2) == 0 {
                    Some(CycleType::trivial())
                } else {
                    Some(CycleType(vec![2, 2]))
                };
                options.push(LocalOption {
                    sing: LocalSing::Pair { i, j },
                    cycle_type,
                });
                let c = normalize_ij(i, j)?;
                if !canonical.contains(&c) {
                    canonical.push(c);
                }
            }
            Ok(MonodromyLocalModel {
                case,
                n,
                options,
                canonical,
            })
        }
    }
}

/// The representative of `(i, j)` up to `(i, j) ↦ (i − 2, j + 2)` with
/// `j ∈ {−1, 0}`.
pub fn normalize_ij(i: i64, j: i64) -> Result<(i64, i64), RecillasError> {
    if i + j < -2 {
        return Err(RecillasError::SumTooSmall(i + j));
    }
    let j2 = if j.rem_euclid(2) == 1 { -1 } else { 0 };
    let i2 = i + j - j2;
    if i2 < -1 {
        return Err(RecillasError::NoRepresentative { i, j });
    }
    Ok((i2, j2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Perm {
        Perm::parse(4, s).unwrap()
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(p("(1 2 3)(4)"), p("(1,2,3)"));
        assert_eq!(p("(1 2 3)").to_string(), "(1 2 3)");
        assert_eq!(p("id").to_string(), "()");
        assert_eq!(p("(3 1)(4 2)").to_string(), "(1 3)(2 4)");
        assert!(Perm::parse(4, "(1 5)").is_err());
        assert!(Perm::parse(4, "(1 2)(2 3)").is_err());
        assert!(Perm::parse(4, "1 2").is_err());
    }

    #[test]
    fn composition_convention() {
        // (12)(23) sends 3 -> 2 -> 1.
        let s = p("(1 2)").compose(&p("(2 3)"));
        assert_eq!(s, p("(1 2 3)"));
        assert!(s.compose(&s.inverse()).is_identity());
    }

    #[test]
    fn fixed_counts() {
        let c = |s: &str| {
            let f = fix_counts(&p(s));
            (f.fix4, f.fix3, f.fix6)
        };
        assert_eq!(c("()"), (4, 3, 6));
        assert_eq!(c("(1 2)"), (2, 1, 2));
        assert_eq!(c("(1 2 3 4)"), (0, 1, 0));
        assert_eq!(c("(1 2 3)"), (1, 0, 0));
        assert_eq!(c("(1 2)(3 4)"), (0, 3, 2));
    }

    #[test]
    fn correspondence_examples() {
        let k = tetragonal_to_trigonal(&[p("(1 2)(3 4)")]);
        assert!(k.trigonal[0].is_identity());
        assert_eq!(k.double[0].fixed_points(), 2);
        let t = tetragonal_to_trigonal(&[p("(1 2 3)")]);
        assert_eq!(t.trigonal[0].cycle_type(), CycleType(vec![3]));
        assert_eq!(t.double[0].cycle_type(), CycleType(vec![3, 3]));
    }

    #[test]
    fn named_subgroups() {
        assert_eq!(klein_four().len(), 4);
        assert_eq!(alternating_four().len(), 12);
        assert_eq!(dihedral_four().len(), 8);
        assert_eq!(s3_first_three().len(), 6);
        let labels = boundary_labels();
        assert!(labels.iter().all(|(_, s)| klein_four().contains(s)));
    }

    #[test]
    fn block_swaps() {
        assert!(!blocks_swapped(&p("()")).unwrap());
        assert!(blocks_swapped(&p("(1 3)(2 4)")).unwrap());
        assert!(!blocks_swapped(&p("(1 2)")).unwrap());
        assert!(blocks_swapped(&p("(1 3 2 4)")).unwrap());
        assert!(matches!(blocks_swapped(&p("(1 3)")), Err(RecillasError::NotInD4(_))));
    }

    #[test]
    fn local_models() {
        let m = local_model(LocalCase::SwitchesComponents, 3).unwrap();
        assert_eq!(m.options[0].sing, LocalSing::TwinA(2));
        assert_eq!(m.options[0].cycle_type, Some(CycleType(vec![4])));
        let m = local_model(LocalCase::PreservesComponents, 5).unwrap();
        assert!(m.options.iter().all(|o| o.cycle_type == Some(CycleType(vec![2, 1, 1]))));
        assert_eq!(m.options.len(), 6);
        let m = local_model(LocalCase::PreservesComponents, 2).unwrap();
        let at0 = m
            .options
            .iter()
            .find(|o| o.sing == LocalSing::Pair { i: 0, j: 0 })
            .unwrap();
        assert_eq!(at0.cycle_type, Some(CycleType::trivial()));
        assert_eq!(m.canonical, vec![(1, -1), (0, 0)]);
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize_ij(3, 1).unwrap(), (5, -1));
        assert_eq!(normalize_ij(4, 0).unwrap(), (4, 0));
        assert_eq!(normalize_ij(0, 0).unwrap(), (0, 0));
        assert_eq!(normalize_ij(-1, -1).unwrap(), (-1, -1));
        assert!(normalize_ij(-2, -1).is_err());
    }
}
