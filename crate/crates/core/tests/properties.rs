use proptest::prelude::*;

use sl3_invariant::arith::{emit_canonical, parse_poly, Fp, GaussianRational, Q, LaurentPoly, MonomialSubstitution, Ring, VarImage};
use sl3_invariant::braid::{cut_independence_at, invariant, invariant_at, markov_at, BraidWord, Engine};
use sl3_invariant::cli::{Cache, KnotEntry, KnotTable};
use sl3_invariant::invariants::{alexander_burau, check_plugin_value, cone_coefficients, delta, stretch};
use sl3_invariant::rep::{HeadKind, RepKind, Sign};

fn poly() -> impl Strategy<Value = LaurentPoly> {
    let term = ((-4i32..=4, -4i32..=4), (-9i64..=9, -3i64..=3, 1i64..=4));
    prop::collection::vec(term, 0..6).prop_map(|ts| {
        LaurentPoly::from_terms(ts.into_iter().map(|(e, (re, im, den))| (e, GaussianRational::new(Q::new(re.into(), den.into()), Q::new(im.into(), den.into())))))
    })
}

fn substitution() -> impl Strategy<Value = MonomialSubstitution> {
    let image = (0i64..4, -2i32..=2, -2i32..=2).prop_map(|(k, a, b)| VarImage { zeta_power: k, a, b });
    (image.clone(), image).prop_map(|(a, b)| MonomialSubstitution::new(a, b))
}

/// Random words on `strands` strands.
fn braid(strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let letter = (1..strands as i32, any::<bool>()).prop_map(|(i, pos)| if pos { i } else { -i });
    prop::collection::vec(letter, 0..=max_len).prop_map(move |letters| BraidWord { strands, letters })
}

fn knot_braid(strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    braid(strands, max_len).prop_filter("closure is a knot", |b| b.is_knot())
}

proptest! {
    #[test]
    fn ring_laws(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(p.add(&q).add(&r), p.add(&q.add(&r)));
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
    }

    #[test]
    fn substitution_is_a_homomorphism(p in poly(), q in poly(), s in substitution()) {
        prop_assert_eq!(s.apply(&p.mul(&q)), s.apply(&p).mul(&s.apply(&q)));
        prop_assert_eq!(s.apply(&p.add(&q)), s.apply(&p).add(&s.apply(&q)));
    }

    #[test]
    fn inversion_is_an_involution(p in poly()) {
        let inv = MonomialSubstitution::INVERSION;
        prop_assert_eq!(inv.apply(&inv.apply(&p)), p);
    }

    #[test]
    fn canonical_text_round_trips(p in poly()) {
        prop_assert_eq!(parse_poly(&emit_canonical(&p)).unwrap(), p);
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in poly(), q in poly(), x in 2u64..1_000_000, y in 2u64..1_000_000) {
        // denominators are powers of 2 and 3, all invertible mod p
        let (x, y, z) = (Fp::new(x), Fp::new(y), Fp::zeta());
        prop_assert_eq!(p.mul(&q).eval_fp(x, y, z), p.eval_fp(x, y, z).mul_(q.eval_fp(x, y, z)));
    }

    #[test]
    fn cache_round_trips(p in poly(), b in braid(3, 6)) {
        let mut c = Cache::in_memory();
        c.insert("sl3", &b, &p);
        prop_assert_eq!(c.get("sl3", &b).unwrap().unwrap(), p);
    }

    #[test]
    fn burau_alexander_is_conway_normalized(b in knot_braid(3, 8)) {
        let a = alexander_burau(&b).unwrap();
        prop_assert_eq!(MonomialSubstitution::new(VarImage { zeta_power: 0, a: -1, b: 0 }, VarImage { zeta_power: 0, a: 0, b: 1 }).apply(&a), a.clone());
        let at_one = a.terms().iter().fold(GaussianRational::zero(), |s, (_, c)| &s + c);
        prop_assert_eq!(at_one, GaussianRational::one());
    }

    #[test]
    fn burau_is_invariant_under_markov_moves(b in knot_braid(3, 6), g in braid(3, 3), positive in any::<bool>()) {
        let a = alexander_burau(&b).unwrap();
        prop_assert_eq!(alexander_burau(&b.conjugate(&g)).unwrap(), a.clone());
        prop_assert_eq!(alexander_burau(&b.stabilize(positive)).unwrap(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sl2_is_alexander_at_t_squared(b in knot_braid(3, 7)) {
        prop_assert_eq!(delta(RepKind::VermaSl2, &b).unwrap(), stretch(&alexander_burau(&b).unwrap(), 2));
    }

    #[test]
    fn heads_are_alexander_at_t_fourth(b in knot_braid(3, 6), k in 0usize..6) {
        let kind = RepKind::all_heads()[k];
        prop_assert_eq!(delta(kind, &b).unwrap(), stretch(&alexander_burau(&b).unwrap(), 4));
    }

    #[test]
    fn sl3_knots_satisfy_plugin_and_cone(b in knot_braid(3, 6)) {
        let v = invariant(&Engine::new(RepKind::VermaSl3.build()), &b).unwrap();
        let r = check_plugin_value(&v, &alexander_burau(&b).unwrap());
        prop_assert!(r.passed(), "{}", r);
        prop_assert_eq!(MonomialSubstitution::SWAP.apply(&v), v.clone());
        prop_assert_eq!(cone_coefficients(&v).unwrap().reconstruct(), v);
    }

    #[test]
    fn sl3_markov_and_cuts_at_points(b in braid(3, 7), seed in any::<u64>()) {
        let e = Engine::new(RepKind::VermaSl3.build());
        let r = markov_at(&e, &b, 2, 4, seed);
        prop_assert!(r.passed(), "{}", r);
        let r = cut_independence_at(&e, &b, seed).unwrap();
        prop_assert!(r.passed(), "{}", r);
    }

    #[test]
    fn distant_generators_commute_at_points(i in 1i32..=3, j in 1i32..=3, si in any::<bool>(), sj in any::<bool>(), rest in braid(4, 3)) {
        prop_assume!((i - j).abs() >= 2);
        let e = Engine::new(RepKind::Head(HeadKind::W, Sign::Minus).build());
        let (a, b) = (if si { i } else { -i }, if sj { j } else { -j });
        let mut w1 = rest.letters.clone();
        w1.extend([a, b]);
        let mut w2 = rest.letters.clone();
        w2.extend([b, a]);
        let (x1, x2) = (Fp::new(1234567), Fp::new(7654321));
        prop_assert_eq!(
            invariant_at(&e, &BraidWord { strands: 4, letters: w1 }, x1, x2),
            invariant_at(&e, &BraidWord { strands: 4, letters: w2 }, x1, x2)
        );
    }

    #[test]
    fn evaluation_is_deterministic(b in braid(3, 6)) {
        let e = Engine::new(RepKind::VermaSl3.build());
        prop_assert_eq!(emit_canonical(&invariant(&e, &b).unwrap()), emit_canonical(&invariant(&e, &b).unwrap()));
    }

    #[test]
    fn table_round_trips(words in prop::collection::vec(knot_braid(3, 6), 0..4)) {
        let knots = words
            .iter()
            .enumerate()
            .map(|(i, b)| KnotEntry {
                name: format!("k{i}"),
                strands: b.strands,
                braid: b.letters.clone(),
                components: 1,
                crossings: b.letters.len() as u32,
                source: "random".into(),
                alexander: Some(emit_canonical(&alexander_burau(b).unwrap())),
                symmetry: None,
            })
            .collect();
        let t = KnotTable { knots };
        prop_assert_eq!(KnotTable::from_json(&t.to_json()).unwrap(), t);
    }
}

#[test]
fn links_skip_knot_only_checks() {
    let e = Engine::new(RepKind::VermaSl3.build());
    let hopf = BraidWord { strands: 2, letters: vec![1, 1] };
    let r = sl3_invariant::invariants::analyze_knot("hopf", &hopf, &e).unwrap();
    assert!(r.passed());
    assert!(r.checks.iter().all(|c| !c.name.starts_with("t1 ->") && !c.name.starts_with("t2 ->")));
}
