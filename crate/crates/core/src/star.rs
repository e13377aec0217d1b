//! Weak star and star acts, and Morita equivalences.
//!
//! A weak star act is one whose adjoint pair restricts to inverse
//! equivalences between the colocal acts and the cogenerated `E`-acts; a
//! star act does the same between the generated and the cogenerated acts.
//! [`StarReport`] keeps every premise as its own [`Verdict`] and derives the
//! two conclusions from them by fixed rules.

use std::sync::Arc;

use crate::act::RightAct;
use crate::adjunction::Context;
use crate::classify::{is_a_generated, settle, Classifier, Evidence, Verdict};
use crate::error::{ActError, Result};
use crate::monoid::Monoid;
use crate::structure::{components, is_cyclic, is_generator, is_projective};
use crate::universe::Universe;

pub mod reason {
    pub const SELF_SMALL: &str = "unit-at-double-free-is-iso";
    pub const WEAK_STAR: &str = "indecomposable-and-weakly-self-projective";
    pub const STAR: &str = "weak-star-and-colocal-equals-generated";
}

#[derive(Clone, Debug)]
pub struct StarReport {
    pub context: Context,
    pub bound: usize,
    pub indecomposable: bool,
    /// Unit at `E ⊔ E` is an isomorphism; exact.
    pub self_small: Verdict,
    pub weak_self_projective: Verdict,
    pub pullback_flat: Verdict,
    /// Every `A`-generated act is colocal.
    pub c_equals_g: Verdict,
    /// Unit is epi at every `E`-act.
    pub wstarob: Verdict,
    /// Counit mono at every `M`-act and unit epi at every `E`-act.
    pub starob: Verdict,
    pub weak_star: Verdict,
    pub star: Verdict,
}

impl StarReport {
    /// `(name, verdict)` in report order.
    pub fn verdicts(&self) -> [(&'static str, &Verdict); 8] {
        [
            ("self-small", &self.self_small),
            ("weak-self-projective", &self.weak_self_projective),
            ("pullback-flat", &self.pullback_flat),
            ("colocal-equals-generated", &self.c_equals_g),
            ("unit-epi", &self.wstarob),
            ("counit-mono-unit-epi", &self.starob),
            ("weak-star", &self.weak_star),
            ("star", &self.star),
        ]
    }
}

fn self_small(classifier: &Classifier) -> Result<Verdict> {
    let ctx = classifier.context();
    let eta = ctx.unit(&ctx.free_e_power(2))?;
    Ok(if eta.is_iso() {
        Verdict::yes(reason::SELF_SMALL, classifier.bound())
    } else {
        Verdict::no(
            Evidence::Hom {
                role: "unit-at-double-free",
                hom: eta,
            },
            classifier.bound(),
        )
    })
}

fn c_equals_g(classifier: &Classifier) -> Result<Verdict> {
    let ctx = classifier.context();
    let rule = is_generator(ctx.act()).then_some(crate::classify::reason::GENERATOR);
    let mut witness = None;
    for x in classifier.m_universe().representatives() {
        if is_a_generated(ctx, x)? && classifier.colocal(x)?.is_no() {
            witness = Some(Evidence::Act {
                role: "generated-not-colocal",
                act: x.clone(),
            });
            break;
        }
    }
    settle(
        "colocal-equals-generated",
        rule,
        witness,
        classifier.bound(),
    )
}

fn first_unit_not_epi(classifier: &Classifier) -> Result<Option<Evidence>> {
    let ctx = classifier.context();
    for y in classifier.e_universe().representatives() {
        if !ctx.unit(y)?.is_epi() {
            return Ok(Some(Evidence::Act {
                role: "unit-not-epi",
                act: y.clone(),
            }));
        }
    }
    Ok(None)
}

fn first_counit_not_mono(classifier: &Classifier) -> Result<Option<Evidence>> {
    let ctx = classifier.context();
    for x in classifier.m_universe().representatives() {
        if !ctx.counit(x)?.is_mono() {
            return Ok(Some(Evidence::Act {
                role: "counit-not-mono",
                act: x.clone(),
            }));
        }
    }
    Ok(None)
}

fn weak_star_rule(classifier: &Classifier, wsp: &Verdict) -> bool {
    let a = classifier.context().act();
    !a.is_empty() && components(a).len() == 1 && wsp.is_yes()
}

/// Unit epi at every `E`-act at the bound.
pub fn check_wstarob(ctx: &Context, bound: usize) -> Result<Verdict> {
    let classifier = Classifier::new(ctx.clone(), bound);
    let wsp = classifier.weak_self_projective()?;
    wstarob_with(&classifier, &wsp)
}

fn wstarob_with(classifier: &Classifier, wsp: &Verdict) -> Result<Verdict> {
    let rule = weak_star_rule(classifier, wsp).then_some(reason::WEAK_STAR);
    settle(
        "unit-epi",
        rule,
        first_unit_not_epi(classifier)?,
        classifier.bound(),
    )
}

/// Counit mono at every `M`-act and unit epi at every `E`-act at the bound,
/// checked against a direct test that `H` and `T` are inverse on the
/// generated and cogenerated representatives.
pub fn check_starob(ctx: &Context, bound: usize) -> Result<Verdict> {
    let classifier = Classifier::new(ctx.clone(), bound);
    let wsp = classifier.weak_self_projective()?;
    let cg = c_equals_g(&classifier)?;
    starob_with(&classifier, &wsp, &cg)
}

fn starob_with(classifier: &Classifier, wsp: &Verdict, cg: &Verdict) -> Result<Verdict> {
    let rule = (weak_star_rule(classifier, wsp) && cg.is_yes()).then_some(reason::STAR);
    let witness = match first_counit_not_mono(classifier)? {
        Some(w) => Some(w),
        None => first_unit_not_epi(classifier)?,
    };
    if witness.is_none() && !generated_cogenerated_inverse(classifier)? {
        return Err(ActError::theorem(
            "counit-mono-unit-epi",
            "no failing unit or counit, yet H and T are not inverse on generated and cogenerated acts",
        ));
    }
    settle("counit-mono-unit-epi", rule, witness, classifier.bound())
}

/// Counit iso on every generated representative and unit iso on every
/// cogenerated representative.
pub fn generated_cogenerated_inverse(classifier: &Classifier) -> Result<bool> {
    let ctx = classifier.context();
    for x in classifier.m_universe().representatives() {
        let delta = ctx.counit(x)?;
        if delta.is_epi() && !delta.is_iso() {
            return Ok(false);
        }
    }
    for y in classifier.e_universe().representatives() {
        let eta = ctx.unit(y)?;
        if eta.is_mono() && !eta.is_iso() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn star_report(ctx: &Context, bound: usize) -> Result<StarReport> {
    star_report_with(&Classifier::new(ctx.clone(), bound))
}

pub fn star_report_with(classifier: &Classifier) -> Result<StarReport> {
    let ctx = classifier.context();
    let bound = classifier.bound();
    if ctx.act().is_empty() {
        return Err(ActError::DegenerateEmptyAct);
    }
    let indecomposable = crate::classify::is_indecomposable_small(ctx)?;
    let self_small = self_small(classifier)?;
    let weak_self_projective = classifier.weak_self_projective()?;
    let pullback_flat = classifier.pullback_flat()?;
    let c_equals_g = c_equals_g(classifier)?;
    let wstarob = wstarob_with(classifier, &weak_self_projective)?;
    let starob = starob_with(classifier, &weak_self_projective, &c_equals_g)?;

    let weak_rule = (indecomposable && weak_self_projective.is_yes()).then_some(reason::WEAK_STAR);
    let weak_witness = [&weak_self_projective, &wstarob]
        .into_iter()
        .find(|v| v.is_no())
        .and_then(|v| v.evidence().cloned());
    let weak_star = settle("weak-star", weak_rule, weak_witness, bound)?;

    let star_rule = (weak_star.is_yes() && c_equals_g.is_yes()).then_some(reason::STAR);
    let star_witness = [&weak_self_projective, &c_equals_g, &starob]
        .into_iter()
        .find(|v| v.is_no())
        .and_then(|v| v.evidence().cloned());
    let star = settle("star", star_rule, star_witness, bound)?;

    Ok(StarReport {
        context: ctx.clone(),
        bound,
        indecomposable,
        self_small,
        weak_self_projective,
        pullback_flat,
        c_equals_g,
        wstarob,
        starob,
        weak_star,
        star,
    })
}

/// Every cyclic projective generator over `M`, with its context. Cyclic
/// acts have at most `|M|` elements, so the list is complete.
pub fn morita_candidates(monoid: &Arc<Monoid>) -> Vec<Context> {
    Universe::cached(monoid.clone(), monoid.size())
        .representatives()
        .iter()
        .filter(|a| is_cyclic(a) && is_projective(a) && is_generator(a))
        .map(Context::for_act)
        .collect()
}

/// Evidence that `H_A` and `T_A` are inverse on every act at the bound.
#[derive(Clone, Debug)]
pub struct MoritaCertificate {
    pub monoid: Arc<Monoid>,
    pub act: RightAct,
    pub endomorphisms: Arc<Monoid>,
    pub bound: usize,
    /// `M`-representatives with counit iso.
    pub checked_x: usize,
    /// `E`-representatives with unit iso.
    pub checked_y: usize,
}

impl MoritaCertificate {
    /// `CERT morita <|M|> <|A|> <|E|> <bound> <x-checked> <y-checked>`
    pub fn machine_line(&self) -> String {
        format!(
            "CERT morita {} {} {} {} {} {}",
            self.monoid.size(),
            self.act.size(),
            self.endomorphisms.size(),
            self.bound,
            self.checked_x,
            self.checked_y
        )
    }
}

pub fn verify_morita(
    monoid: &Arc<Monoid>,
    a: &RightAct,
    bound: usize,
) -> Result<MoritaCertificate> {
    for (ok, requirement) in [
        (is_cyclic(a), "cyclic"),
        (is_projective(a), "projective"),
        (is_generator(a), "generator"),
    ] {
        if !ok {
            return Err(ActError::Precondition {
                what: "act".into(),
                requirement,
            });
        }
    }
    let ctx = Context::new(monoid.clone(), a.clone())?;
    let xs = Universe::cached(monoid.clone(), bound);
    for x in xs.representatives() {
        if !ctx.counit(x)?.is_iso() {
            return Err(ActError::theorem(
                "morita",
                format!("counit not iso at M-act {:?}", x.rows()),
            ));
        }
    }
    let ys = Universe::cached(ctx.endomorphism_monoid().clone(), bound);
    for y in ys.representatives() {
        if !ctx.unit(y)?.is_iso() {
            return Err(ActError::theorem(
                "morita",
                format!("unit not iso at E-act {:?}", y.rows()),
            ));
        }
    }
    Ok(MoritaCertificate {
        monoid: monoid.clone(),
        act: a.clone(),
        endomorphisms: ctx.endomorphism_monoid().clone(),
        bound,
        checked_x: xs.len(),
        checked_y: ys.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::hom::are_isomorphic;
    use crate::structure::is_indecomposable;

    fn nonempty_contexts(bound: usize) -> Vec<Context> {
        small_monoids()
            .into_iter()
            .flat_map(|m| {
                Universe::cached(m, bound)
                    .representatives()
                    .iter()
                    .filter(|a| !a.is_empty())
                    .map(Context::for_act)
                    .collect::<Vec<_>>()
            })
            .collect()
    }

    #[test]
    fn regular_act_is_star() {
        for m in small_monoids() {
            let r = star_report(&Context::for_act(&RightAct::regular(m)), 2).unwrap();
            assert!(r.indecomposable);
            assert!(r.weak_star.is_yes());
            assert_eq!(r.star.reason(), Some(reason::STAR));
            assert!(r.wstarob.is_yes() && r.starob.is_yes());
        }
    }

    #[test]
    fn two_points_record_double_free_failure() {
        let t = Arc::new(Monoid::trivial());
        let r = star_report(&Context::for_act(&RightAct::trivial(t, 2)), 2).unwrap();
        assert!(!r.indecomposable);
        assert!(!r.weak_star.is_yes());
        let Some(Evidence::Hom { role, hom }) = r.self_small.evidence() else {
            panic!("expected the unit at E ⊔ E")
        };
        assert_eq!(*role, "unit-at-double-free");
        assert!(!hom.is_iso());
        assert!(r.wstarob.is_no());
    }

    #[test]
    fn idempotent_ideal_report() {
        let m = idempotent_monoid();
        let r = star_report(&Context::for_act(&RightAct::principal_ideal(m, 1)), 3).unwrap();
        assert!(r.indecomposable);
        assert!(r.weak_self_projective.is_yes());
        assert!(r.weak_star.is_yes());
        // the regular act is generated by nothing but is not colocal either
        assert!(!r.c_equals_g.is_no());
    }

    #[test]
    fn report_invariants() {
        for ctx in nonempty_contexts(2) {
            let r = star_report(&ctx, 2).unwrap();
            assert_eq!(r.indecomposable, is_indecomposable(ctx.act()));
            assert_eq!(r.self_small.is_yes(), r.indecomposable);
            if r.indecomposable && r.weak_self_projective.is_yes() {
                assert!(r.weak_star.is_yes());
            }
            if r.weak_star.is_yes() && r.c_equals_g.is_yes() {
                assert!(r.star.is_yes());
            }
            if r.weak_self_projective.is_no() || r.wstarob.is_no() {
                assert!(r.weak_star.is_no());
            }
            if r.weak_self_projective.is_no() || r.c_equals_g.is_no() || r.starob.is_no() {
                assert!(r.star.is_no());
            }
            assert!(!(r.weak_star.is_yes() && r.wstarob.is_no()));
            if r.star.is_yes() {
                assert!(r.weak_star.is_yes());
            }
        }
    }

    #[test]
    fn generators_have_every_act_colocal_and_generated() {
        for ctx in nonempty_contexts(2) {
            if !is_generator(ctx.act()) {
                continue;
            }
            let c = Classifier::new(ctx.clone(), 3);
            for x in c.m_universe().representatives() {
                assert!(is_a_generated(&ctx, x).unwrap());
                assert!(!c.colocal(x).unwrap().is_no());
            }
        }
    }

    #[test]
    fn cogenerated_everything_when_flat_weak_star() {
        for ctx in nonempty_contexts(2) {
            let c = Classifier::new(ctx.clone(), 2);
            let r = star_report_with(&c).unwrap();
            if r.indecomposable && !r.weak_self_projective.is_no() && r.pullback_flat.is_yes() {
                for y in c.e_universe().representatives() {
                    assert!(crate::classify::is_a_cogenerated(&ctx, y).unwrap());
                }
            }
        }
    }

    #[test]
    fn wstarob_cyclic_projective_generator_has_no_counterexample() {
        for m in small_monoids() {
            for ctx in morita_candidates(&m) {
                assert!(check_wstarob(&ctx, 2).unwrap().is_yes());
                assert!(check_starob(&ctx, 2).unwrap().is_yes());
            }
        }
    }

    #[test]
    fn starob_witnesses_replay() {
        let mut counit_failures = 0;
        for ctx in nonempty_contexts(2) {
            let v = check_starob(&ctx, 2).unwrap();
            match v.evidence() {
                Some(Evidence::Act {
                    role: "counit-not-mono",
                    act,
                }) => {
                    assert!(!ctx.counit(act).unwrap().is_mono());
                    counit_failures += 1;
                }
                Some(Evidence::Act {
                    role: "unit-not-epi",
                    act,
                }) => {
                    assert!(!ctx.unit(act).unwrap().is_epi());
                }
                Some(Evidence::Reason(_)) | None => {}
                other => panic!("unexpected evidence {other:?}"),
            }
        }
        assert!(counit_failures > 0);
    }

    #[test]
    fn morita_candidates_examples() {
        let t = Arc::new(Monoid::trivial());
        let c = morita_candidates(&t);
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].act().size(), 1);
        assert_eq!(c[0].endomorphism_monoid().size(), 1);

        let m = idempotent_monoid();
        let c = morita_candidates(&m);
        assert_eq!(c.len(), 1);
        assert!(are_isomorphic(c[0].act(), &RightAct::regular(m.clone())).is_some());
        assert!(c[0].endomorphism_monoid().isomorphism_to(&m).is_some());

        for m in small_monoids() {
            let reg = RightAct::regular(m.clone());
            assert!(morita_candidates(&m)
                .iter()
                .any(|c| are_isomorphic(c.act(), &reg).is_some()));
        }
    }

    #[test]
    fn verify_morita_certifies_candidates() {
        for m in small_monoids() {
            for ctx in morita_candidates(&m) {
                let cert = verify_morita(&m, ctx.act(), 2).unwrap();
                assert_eq!(cert.checked_x, Universe::cached(m.clone(), 2).len());
            }
        }
        let m = idempotent_monoid();
        let ideal = RightAct::principal_ideal(m.clone(), 1);
        assert!(matches!(
            verify_morita(&m, &ideal, 2),
            Err(ActError::Precondition {
                requirement: "generator",
                ..
            })
        ));
    }

    #[test]
    fn empty_act_has_no_report() {
        let m = idempotent_monoid();
        let ctx = Context::for_act(&RightAct::empty(m));
        assert_eq!(
            star_report(&ctx, 1).unwrap_err(),
            ActError::DegenerateEmptyAct
        );
    }
}
