mod common;

use common::*;
use proptest::prelude::*;
use rand::Rng;
use twistlab_core::diagram::{parse_pd_records, SmoothingKind, SmoothingMode};
use twistlab_core::kauffman::{lambda, mirror_poly, truncate, CacheMode, LambdaEngine};
use twistlab_core::notation::{census, enumerate_standard, predicted_u};
use twistlab_core::theorem::Verifier;
use twistlab_core::{ConwayCode, LaurentPoly2, LinkDiagram, UTriple};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn skein_identity_on_random_diagrams(seed in any::<u64>()) {
        let d = random_diagram(&mut rng(seed), 6);
        let mut engine = LambdaEngine::default();
        for x in 0..d.crossing_count() {
            let lhs = &engine.lambda(&d) + &engine.lambda(&d.switch(x).unwrap());
            let s0 = engine.lambda(&d.smooth(x, SmoothingMode::Zero).unwrap());
            let s1 = engine.lambda(&d.smooth(x, SmoothingMode::Infinity).unwrap());
            prop_assert_eq!(lhs, (&s0 + &s1).shift(0, 1));
        }
    }

    #[test]
    fn loop_relation_and_relabeling(seed in any::<u64>()) {
        let mut r = rng(seed);
        let d = random_diagram(&mut r, 6);
        let mut engine = LambdaEngine::default();
        let p = engine.lambda(&d);
        for slot in [0, d.slot_count() / 2] {
            prop_assert_eq!(engine.lambda(&d.add_curl(slot, true)), p.shift(1, 0));
            prop_assert_eq!(engine.lambda(&d.add_curl(slot, false)), p.shift(-1, 0));
        }
        let e = relabel(&mut r, &d);
        prop_assert_eq!(e.canonical_key(), d.canonical_key());
        prop_assert_eq!(engine.lambda(&e), p);
    }

    #[test]
    fn cache_transparency(seed in any::<u64>()) {
        let d = random_diagram(&mut rng(seed), 6);
        let mut on = LambdaEngine::new(CacheMode::On);
        let mut off = LambdaEngine::new(CacheMode::Off);
        prop_assert_eq!(on.lambda(&d), off.lambda(&d));
    }

    #[test]
    fn smoothing_changes_components_by_at_most_one(seed in any::<u64>()) {
        let d = random_diagram(&mut rng(seed), 7);
        for x in 0..d.crossing_count() {
            for mode in [SmoothingMode::Zero, SmoothingMode::Infinity] {
                let s = d.smooth(x, mode).unwrap();
                prop_assert_eq!(s.crossing_count() + 1, d.crossing_count());
                prop_assert!(s.components().abs_diff(d.components()) <= 1);
            }
        }
    }

    #[test]
    fn curl_removal_is_confluent(seed in any::<u64>()) {
        let mut r = rng(seed);
        let mut d = random_diagram(&mut r, 5);
        for _ in 0..3 {
            let slot = r.gen_range(0..d.slot_count());
            d = d.add_curl(slot, r.gen_bool(0.5));
        }
        let (r1, s1) = d.remove_curls();
        let (r2, s2) = relabel(&mut r, &d).remove_curls();
        prop_assert_eq!(s1, s2);
        prop_assert!(r1.is_isomorphic(&r2));
        prop_assert_eq!(lambda(&d), lambda(&r1).shift(s1, 0));
    }
}

#[test]
fn mirror_and_connected_sum_identities() {
    let mut engine = LambdaEngine::default();
    let codes: Vec<_> = (2..=7).flat_map(enumerate_standard).collect();
    for k in &codes {
        let d = LinkDiagram::build_standard(k);
        let p = engine.lambda(&d);
        assert_eq!(engine.lambda(&d.mirror()), mirror_poly(&p), "{k}");
    }
    for (k1, k2) in codes.iter().zip(codes.iter().rev()).take(12) {
        let d1 = LinkDiagram::build_standard(k1);
        let d2 = LinkDiagram::build_standard(k2);
        let sum = LinkDiagram::connected_sum(&d1, &d2).unwrap();
        assert_eq!(sum.components(), d1.components() + d2.components() - 1);
        assert_eq!(
            engine.lambda(&sum),
            &engine.lambda(&d1) * &engine.lambda(&d2)
        );
    }
}

#[test]
fn switched_alternating_drops_two_degrees() {
    let mut engine = LambdaEngine::default();
    for c in 3..=7 {
        for k in enumerate_standard(c) {
            let d = LinkDiagram::build_standard(&k);
            for x in 0..c {
                let p = engine.lambda(&d.switch(x).unwrap());
                assert!(p.max_z_degree().unwrap() <= c as i32 - 3, "{k} at {x}");
            }
        }
    }
}

#[test]
fn top_row_and_degree_bound_for_standard_builds() {
    let mut engine = LambdaEngine::default();
    for c in 2..=8 {
        for k in enumerate_standard(c) {
            let p = engine.lambda(&LinkDiagram::build_standard(&k));
            let row = p.z_row(c as i32 - 1);
            assert_eq!(
                row,
                LaurentPoly2::from_terms([(-1, c as i32 - 1, 1), (1, c as i32 - 1, 1)])
            );
            assert!(p.terms().all(|(a, z, _)| z + a.abs() <= c as i32), "{k}");
        }
    }
}

#[test]
fn thistlethwaite_relations_hold_in_sweep() {
    let mut engine = LambdaEngine::default();
    for c in 2..=8 {
        for k in enumerate_standard(c) {
            let t = truncate(&engine.lambda(&LinkDiagram::build_standard(&k)), c).unwrap();
            assert!(t.u.minus >= 0 && t.u.zero >= 0 && t.u.plus >= 0);
            if !k.is_hopf() {
                assert_eq!(t.u.minus + t.u.plus, t.u.zero, "{k}");
                let odd = k.sites() % 2 == 1;
                assert_eq!(t.u.plus, t.u.minus + i64::from(odd), "{k}");
            }
            assert_eq!(t.u, predicted_u(&census(&k)));
        }
    }
}

#[test]
fn axial_smoothing_reduces_a_site() {
    // Every crossing in a site of two or more crossings: the axial
    // smoothing gives the build of the code with that entry lowered.
    for c in 3..=8 {
        for k in enumerate_standard(c) {
            let d = LinkDiagram::build_standard(&k);
            for x in 0..c {
                let tag = d.site_tag(x).unwrap();
                let n = k.entries()[tag.site];
                let is_end = tag.site == 0 || tag.site + 1 == k.sites();
                if n < 2 || (is_end && n == 2) {
                    continue;
                }
                let mode = [SmoothingMode::Zero, SmoothingMode::Infinity]
                    .into_iter()
                    .find(|&m| d.classify_smoothing(x, m) == Ok(SmoothingKind::Axial))
                    .unwrap();
                let mut lowered = k.entries().to_vec();
                lowered[tag.site] -= 1;
                let expected = LinkDiagram::build_standard(&ConwayCode::new(lowered).unwrap());
                assert!(
                    d.smooth(x, mode).unwrap().is_isomorphic(&expected),
                    "{k} at {x}"
                );
            }
        }
    }
}

#[test]
fn cross_sectional_smoothing_of_21112_is_a_connected_sum() {
    let d = build("2 1 1 1 2");
    let cross = d.smooth(4, SmoothingMode::Infinity).unwrap();
    assert_eq!(
        d.classify_smoothing(4, SmoothingMode::Infinity),
        Ok(SmoothingKind::CrossSectional)
    );
    let sum = LinkDiagram::connected_sum(&build("2 2"), &build("2")).unwrap();
    let (reduced, shift) = cross.remove_curls();
    assert_eq!(shift, 0);
    assert_eq!(lambda(&reduced), lambda(&sum));
}

#[test]
fn fixtures_match_independent_constructions() {
    // L6a5 is the pretzel P(2,2,2); the fixture is the chirality whose
    // truncation is (1,4,3).
    let l6a5 = fixture("L6a5").diagram().unwrap();
    assert!(l6a5.is_isomorphic(&pretzel(&[2, 2, 2]).mirror()));
    assert_eq!((l6a5.crossing_count(), l6a5.components()), (6, 3));
    let knot85 = fixture("8_5").diagram().unwrap();
    assert!(knot85.is_isomorphic(&pretzel(&[3, 3, 2]).mirror()));

    let trefoil = fixture("3_1").diagram().unwrap();
    let built = build("3");
    assert!(trefoil.is_isomorphic(&built) || trefoil.is_isomorphic(&built.mirror()));
    let p = lambda(&trefoil);
    assert!(p == lambda(&built) || p == mirror_poly(&lambda(&built)));
}

#[test]
fn fixture_truncations() {
    let mut v = Verifier::default();
    for rec in fixtures() {
        let d = rec.diagram().unwrap();
        let r = v.check_external(&rec.name, &d, rec.expected_u).unwrap();
        assert!(r.overall, "{r}");
        let u = r.computed_u.unwrap();
        if let Some(sites) = rec.twist_sites {
            let excess = u.zero - sites as i64;
            match rec.name.as_str() {
                "L6a5" | "8_5" => assert_eq!(excess, 1),
                _ => assert_eq!(excess, 0),
            }
        }
    }
    let hopf = fixture("L2a1").diagram().unwrap();
    assert_eq!(
        v.check_external("hopf", &hopf, None).unwrap().computed_u,
        Some(UTriple::new(0, 1, 0))
    );
}

#[test]
fn pd_records_parse_from_text() {
    let recs = parse_pd_records(include_str!("fixtures/links.jsonl")).unwrap();
    assert_eq!(recs.len(), 4);
    assert_eq!(recs[2].expected_u, Some(UTriple::new(1, 4, 3)));
}
