use std::sync::OnceLock;

use num_integer::Integer;
use proptest::prelude::*;

use orbiquint::classify::{stable_pa, StableCurveDesc, StableVertex};
use orbiquint::covergraphs::{check_cover, enumerate_boundary_types, CoverGraph};
use orbiquint::orbiscroll::{adjunction_degree, tetragonal_branch_relation};
use orbiquint::parity::{
    epsilon_twist, orbinode_normalize, section_parity, Parity, ParityError, ParityState, SectionClass,
};
use orbiquint::recillas::{fix_counts, on_partitions, on_transpositions, recillas_character_check, Perm};
use orbiquint::resolve::{genus_rh, hj_expand, hj_reconstruct, pa_hirzebruch};
use orbiquint::Frac;

fn coprime_pair() -> impl Strategy<Value = (i64, i64)> {
    (2i64..=200)
        .prop_flat_map(|r| (Just(r), 1..r))
        .prop_filter("coprime", |(r, q)| r.gcd(q) == 1)
}

fn s4() -> impl Strategy<Value = Perm> {
    prop::sample::select(Perm::all(4))
}

/// Enumerated graphs at d = 3, and their canonical forms.
fn boundary_graphs() -> &'static (Vec<CoverGraph>, Vec<CoverGraph>) {
    static GRAPHS: OnceLock<(Vec<CoverGraph>, Vec<CoverGraph>)> = OnceLock::new();
    GRAPHS.get_or_init(|| {
        let graphs: Vec<CoverGraph> = enumerate_boundary_types(3)
            .into_iter()
            .flat_map(|t| t.instances.into_iter().map(|x| x.graph))
            .collect();
        let known = graphs
            .iter()
            .map(|g| {
                let mut h = g.clone();
                h.canonicalize();
                h
            })
            .collect();
        (graphs, known)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn hj_round_trip((r, q) in coprime_pair()) {
        let chain = hj_expand(r, q).unwrap();
        prop_assert!(chain.ints.iter().all(|&b| b >= 2));
        prop_assert_eq!(hj_reconstruct(&chain).unwrap(), (r, q));
    }

    #[test]
    fn hj_reversal_is_inverse_weight((r, q) in coprime_pair()) {
        let inv = (1..r).find(|x| (x * q) % r == 1).unwrap();
        prop_assert_eq!(hj_expand(r, inv).unwrap(), hj_expand(r, q).unwrap().reversed());
    }

    #[test]
    fn parity_of_half_integral_pieces(halves in prop::collection::vec(-40i64..=40, 1..12)) {
        let pieces: Vec<Frac> = halves.iter().map(|&h| Frac::new(h, 2)).collect();
        let sum: i64 = halves.iter().sum();
        let got = section_parity(&SectionClass::new(pieces).unwrap());
        if sum % 2 != 0 {
            prop_assert!(matches!(got, Err(ParityError::NonIntegralSum(_))));
        } else {
            prop_assert_eq!(got.unwrap(), Parity::from_bit((sum / 2).rem_euclid(2) == 1));
        }
    }

    #[test]
    fn pieces_outside_half_lattice_rejected(num in -50i64..=50, den in prop::sample::select(vec![3i64, 4, 5, 6])) {
        prop_assume!(num % (den / den.gcd(&2)) != 0);
        prop_assert!(SectionClass::new(vec![Frac::new(num, den)]).is_err());
    }

    #[test]
    fn twist_log_replays(start in any::<bool>(), events in prop::collection::vec(any::<bool>(), 0..40)) {
        let mut s = ParityState::new(Parity::from_bit(start));
        let mut flips = 0;
        for e in &events {
            if *e {
                s = epsilon_twist(&s);
                flips += 1;
            } else {
                s = orbinode_normalize(&s);
            }
        }
        prop_assert!(s.is_consistent());
        prop_assert_eq!(s.h0_mod2.bit(), start ^ (flips % 2 == 1));
        prop_assert_eq!(epsilon_twist(&epsilon_twist(&s)).h0_mod2, s.h0_mod2);
    }

    #[test]
    fn s4_actions_are_homomorphisms(a in s4(), b in s4()) {
        let ab = a.compose(&b);
        prop_assert_eq!(on_partitions(&ab), on_partitions(&a).compose(&on_partitions(&b)));
        prop_assert_eq!(on_transpositions(&ab), on_transpositions(&a).compose(&on_transpositions(&b)));
        prop_assert!(recillas_character_check(&ab));
        let c = fix_counts(&ab);
        prop_assert_eq!(1 + c.fix6, c.fix3 + c.fix4);
    }

    #[test]
    fn pa_matches_adjunction(l in 0i64..=6, n in 0i64..=8, m in 0i64..=20) {
        // C² + K·C on F_l with σ² = −l and K = −2σ − (l+2)F.
        let c2 = -l * n * n + 2 * n * m;
        let kc = l * n - 2 * m - 2 * n;
        prop_assert_eq!(pa_hirzebruch(l, n, m), (c2 + kc) / 2 + 1);
    }

    #[test]
    fn riemann_hurwitz(deg in 1i64..=12, h in 0i64..=4, ram in 0i64..=60) {
        match genus_rh(deg, h, ram) {
            Ok(g) => prop_assert_eq!(2 * g - 2, deg * (2 * h - 2) + ram),
            Err(_) => prop_assert!((deg * (2 * h - 2) + ram) % 2 != 0 || deg * (2 * h - 2) + ram < -2),
        }
    }

    #[test]
    fn branch_relation_inverts_adjunction(b in 0u32..=60, k in 0i64..=40, r in 1i64..=6) {
        let a = Frac::new(k, r);
        let rel = tetragonal_branch_relation(&a, b);
        prop_assert_eq!(adjunction_degree(4, &rel.m, &a), Frac::int(b as i64));
    }

    #[test]
    fn stable_pa_counts_loops(genera in prop::collection::vec(0i64..=4, 1..5), extra in prop::collection::vec((0usize..5, 0usize..5), 0..4)) {
        let k = genera.len();
        let mut desc = StableCurveDesc::new(genera.iter().map(|&g| StableVertex::new(g)).collect());
        for i in 1..k {
            desc = desc.edge(i - 1, i);
        }
        for &(a, b) in &extra {
            desc = desc.edge(a % k, b % k);
        }
        let e = (k - 1 + extra.len()) as i64;
        let want = genera.iter().sum::<i64>() + e - k as i64 + 1;
        prop_assert_eq!(stable_pa(&desc).unwrap(), want);
        let mut rev = StableCurveDesc::new(genera.iter().rev().map(|&g| StableVertex::new(g)).collect());
        for (a, b) in desc.edges.iter() {
            rev = rev.edge(k - 1 - a, k - 1 - b);
        }
        prop_assert!(rev.same_curve(&desc));
    }

    #[test]
    fn perturbed_covers_fail_or_reenumerate(pick in any::<prop::sample::Index>(), slot in any::<prop::sample::Index>(), up in any::<bool>()) {
        let (graphs, known) = boundary_graphs();
        let g = pick.get(graphs);
        let mut h = g.clone();
        let slots = h.node_edges.len() + h.main_components.len() + h.tail_components.len();
        let s = slot.index(slots);
        let bump = |x: &mut u32| if up { *x += 1 } else if *x > 0 { *x -= 1 };
        if s < h.node_edges.len() {
            bump(&mut h.node_edges[s].local_degree);
        } else if s < h.node_edges.len() + h.main_components.len() {
            bump(&mut h.main_components[s - h.node_edges.len()].degree);
        } else {
            let t = s - h.node_edges.len() - h.main_components.len();
            bump(&mut h.tail_components[t].degree);
        }
        if h != *g && check_cover(&h).is_empty() {
            h.canonicalize();
            prop_assert!(known.contains(&h));
        }
    }

    #[test]
    fn frac_text_round_trip(num in -1000i64..=1000, den in 1i64..=60) {
        let f = Frac::new(num, den);
        prop_assert_eq!(f.to_string().parse::<Frac>().unwrap(), f);
    }
}

#[test]
fn s4_exhaustive_identity() {
    let all = Perm::all(4);
    assert_eq!(all.len(), 24);
    assert!(all.iter().all(recillas_character_check));
}
