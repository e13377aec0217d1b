use std::sync::Arc;

use actkit::cellular::{agree_over_target, bousfield_colimit_oracle, colocalization_candidate};
use actkit::{enumerate_homs, monoid_inventory, Classifier, Context, Document, Universe};
use proptest::prelude::*;

fn contexts(order: usize, bound: usize) -> Vec<Context> {
    monoid_inventory(order)
        .into_iter()
        .map(Arc::new)
        .flat_map(|m| Universe::cached(m, bound).representatives().to_vec())
        .map(|a| Context::for_act(&a))
        .collect()
}

#[test]
fn hom_sets_across_the_adjunction_have_equal_size() {
    for ctx in contexts(2, 2) {
        let xs = Universe::cached(ctx.base_monoid().clone(), 2);
        let ys = Universe::cached(ctx.endomorphism_monoid().clone(), 2);
        for x in xs.representatives() {
            let hx = ctx.hom_act(x).unwrap();
            for y in ys.representatives() {
                let ty = ctx.tensor_act(y).unwrap();
                let left = enumerate_homs(ty.underlying(), x).unwrap().len();
                let right = enumerate_homs(y, hx.underlying()).unwrap().len();
                assert_eq!(
                    left,
                    right,
                    "A={:?} X={:?} Y={:?}",
                    ctx.act().rows(),
                    x.rows(),
                    y.rows()
                );
            }
        }
    }
}

#[test]
fn universes_survive_the_text_format() {
    for m in monoid_inventory(3).into_iter().map(Arc::new) {
        let u = Universe::enumerate(m.clone(), 2);
        let mut doc = Document::new(m);
        for a in u.representatives() {
            doc.push_act(a.clone());
        }
        let back = Document::parse_text(&doc.to_text()).unwrap();
        assert_eq!(back.acts, u.representatives());
    }
}

#[test]
fn regular_act_candidate_is_the_identity() {
    for m in monoid_inventory(3).into_iter().map(Arc::new) {
        let a = actkit::RightAct::regular(m.clone());
        let c = Classifier::new(Context::for_act(&a), 2);
        for x in c.m_universe().representatives().to_vec() {
            let cand = colocalization_candidate(&c, &x).unwrap();
            assert!(cand.is_equivalence && cand.map.is_iso());
            let colimit = bousfield_colimit_oracle(&c, &x).unwrap();
            assert!(agree_over_target(&colimit, &cand).is_some());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn triangles_hold_for_sampled_triples(ai in 0usize..1000, xi in 0usize..1000, yi in 0usize..1000) {
        let all = contexts(3, 2);
        let ctx = &all[ai % all.len()];
        let xs = Universe::cached(ctx.base_monoid().clone(), 3);
        let ys = Universe::cached(ctx.endomorphism_monoid().clone(), 2);
        let x = &xs.representatives()[xi % xs.len()];
        let y = &ys.representatives()[yi % ys.len()];
        prop_assert!(ctx.check_triangles(x, y).unwrap());
        prop_assert!(ctx.adjunction_bijection(y, x).is_ok());
    }
}
