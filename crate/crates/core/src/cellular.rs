//! Approximations of an act from the colocal side.
//!
//! Four constructions of a map `C -> X`: the image of the counit (the
//! coreflection onto `A`-generated acts), the counit itself (the
//! colocalization candidate `T(H(X)) -> X`), and two brute-force oracles
//! over the universe at the bound: the colimit of all maps into `X` from
//! certified colocal representatives, and the limit of all `H`-equivalences
//! into `X`.

use std::collections::HashMap;
use std::fmt;

use crate::act::RightAct;
use crate::classify::{reason, settle, Classifier, Evidence, Verdict};
use crate::error::{ActError, Result};
use crate::hom::{hom_maps, ActHom};
use crate::limits::{coequalizer, copair, coproduct, image_factorize};
use crate::universe::Universe;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ApproximationKind {
    Coreflection,
    ColocalizationCandidate,
    ColimitOracle,
    LimitOracle,
}

impl fmt::Display for ApproximationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ApproximationKind::Coreflection => "coreflection",
            ApproximationKind::ColocalizationCandidate => "colocalization-candidate",
            ApproximationKind::ColimitOracle => "colimit-oracle",
            ApproximationKind::LimitOracle => "limit-oracle",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Approximation {
    pub target: RightAct,
    pub object: RightAct,
    /// `object -> target`
    pub map: ActHom,
    pub kind: ApproximationKind,
    /// `H` inverts `map`.
    pub is_equivalence: bool,
    pub colocality: Verdict,
}

impl Approximation {
    /// Certified equivalence out of a certified colocal object.
    pub fn is_certified(&self) -> bool {
        self.is_equivalence && self.colocality.is_yes()
    }

    /// `APPROX kind=... equivalence=... colocal=... size=...`
    pub fn machine_line(&self) -> String {
        format!(
            "APPROX kind={} equivalence={} colocal={} size={}",
            self.kind,
            self.is_equivalence,
            self.colocality.status(),
            self.object.size()
        )
    }
}

fn inverted_by_h(classifier: &Classifier, f: &ActHom) -> Result<bool> {
    Ok(classifier.context().hom_on_morphism(f)?.is_iso())
}

/// `im δ_X -> X`.
pub fn generated_coreflection(classifier: &Classifier, x: &RightAct) -> Result<Approximation> {
    let delta = classifier.context().counit(x)?;
    let factors = image_factorize(&delta);
    let is_equivalence = inverted_by_h(classifier, &factors.mono)?;
    if !is_equivalence {
        return Err(ActError::theorem(
            "coreflection",
            format!(
                "H does not invert the image of the counit at {:?}",
                x.rows()
            ),
        ));
    }
    let colocality = classifier.colocal(&factors.image)?;
    Ok(Approximation {
        target: x.clone(),
        object: factors.image,
        map: factors.mono,
        kind: ApproximationKind::Coreflection,
        is_equivalence,
        colocality,
    })
}

/// Every `A`-generated representative `X'` sees `Hom(X', im δ_X) -> Hom(X', X)`
/// as a bijection.
pub fn coreflection_is_universal(classifier: &Classifier, approx: &Approximation) -> Result<bool> {
    let ctx = classifier.context();
    for x in classifier.m_universe().representatives() {
        if ctx.counit(x)?.is_epi() && !crate::classify::postcomposition_bijective(x, &approx.map) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `δ_X: T(H(X)) -> X`.
pub fn colocalization_candidate(classifier: &Classifier, x: &RightAct) -> Result<Approximation> {
    let delta = classifier.context().counit(x)?;
    let is_equivalence = inverted_by_h(classifier, &delta)?;
    let object = delta.source().clone();
    let witness = classifier
        .colocal_counterexample(&object)
        .map(|hom| Evidence::Hom {
            role: "h-equivalence",
            hom,
        });
    let colocality = settle(
        "colocal",
        Some(reason::TENSOR_IMAGE),
        witness,
        classifier.bound(),
    )?;
    Ok(Approximation {
        target: x.clone(),
        object,
        map: delta,
        kind: ApproximationKind::ColocalizationCandidate,
        is_equivalence,
        colocality,
    })
}

/// Colimit over the maps into `X` from certified colocal representatives,
/// as the coequalizer of the two evident maps from the coproduct over
/// diagram morphisms to the coproduct over diagram objects.
pub fn bousfield_colimit_oracle(classifier: &Classifier, x: &RightAct) -> Result<Approximation> {
    let monoid = classifier.context().base_monoid().clone();
    // objects: (representative index, map into X)
    let reps = classifier.m_universe().representatives();
    let mut objects: Vec<(usize, Vec<usize>)> = Vec::new();
    for (i, r) in reps.iter().enumerate() {
        if classifier.colocal(r)?.is_yes() {
            objects.extend(hom_maps(r, x).into_iter().map(|f| (i, f)));
        }
    }
    // morphisms: (source object, target object, map between representatives)
    let mut morphisms: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    for (s, (si, sf)) in objects.iter().enumerate() {
        for (t, (ti, tf)) in objects.iter().enumerate() {
            for h in hom_maps(&reps[*si], &reps[*ti]) {
                if s == t && h.iter().enumerate().all(|(k, &v)| k == v) {
                    continue;
                }
                if sf.iter().zip(&h).all(|(&a, &b)| a == tf[b]) {
                    morphisms.push((s, t, h));
                }
            }
        }
    }
    let object_acts: Vec<RightAct> = objects.iter().map(|(i, _)| reps[*i].clone()).collect();
    let (sum, injections) = coproduct(monoid.clone(), &object_acts)?;
    let morphism_acts: Vec<RightAct> = morphisms
        .iter()
        .map(|(s, _, _)| object_acts[*s].clone())
        .collect();
    let (msum, _) = coproduct(monoid, &morphism_acts)?;
    let to_source: Vec<ActHom> = morphisms
        .iter()
        .map(|(s, _, _)| injections[*s].clone())
        .collect();
    let to_target: Vec<ActHom> = morphisms
        .iter()
        .map(|(s, t, h)| {
            let h =
                ActHom::new_unchecked(object_acts[*s].clone(), object_acts[*t].clone(), h.clone());
            injections[*t].after(&h).expect("composable")
        })
        .collect();
    let left = copair(&msum, &to_source, &sum)?;
    let right = copair(&msum, &to_target, &sum)?;
    let (colimit, proj) = coequalizer(&left, &right)?;
    let legs: Vec<ActHom> = objects
        .iter()
        .enumerate()
        .map(|(k, (_, f))| ActHom::new_unchecked(object_acts[k].clone(), x.clone(), f.clone()))
        .collect();
    let total = copair(&sum, &legs, x)?;
    let mut map = vec![usize::MAX; colimit.size()];
    for (z, &c) in proj.map().iter().enumerate() {
        debug_assert!(map[c] == usize::MAX || map[c] == total.apply(z));
        map[c] = total.apply(z);
    }
    let map = ActHom::new_unchecked(colimit.clone(), x.clone(), map);
    let is_equivalence = inverted_by_h(classifier, &map)?;
    let colocality = classifier.colocal(&colimit)?;
    Ok(Approximation {
        target: x.clone(),
        object: colimit,
        map,
        kind: ApproximationKind::ColimitOracle,
        is_equivalence,
        colocality,
    })
}

/// Largest representative size the limit oracle will enumerate.
pub const LIMIT_INVENTORY_CAP: usize = 5;

/// Limit over the `H`-equivalences into `X` from representatives, together
/// with the identity of `X`, computed as the compatible families in the
/// product.
///
/// A colocal approximation `C -> X` is a quotient of `T(H(C)) ≅ T(H(X))`,
/// so representatives are taken up to `|T(H(X))|` elements (at least the
/// classifier bound, at most [`LIMIT_INVENTORY_CAP`]); below the cap the
/// diagram then contains `C`.
pub fn bousfield_limit_oracle(classifier: &Classifier, x: &RightAct) -> Result<Approximation> {
    let ctx = classifier.context();
    let quotient_bound = ctx
        .tensor_act(ctx.hom_act(x)?.underlying())?
        .underlying()
        .size();
    let inventory = classifier
        .bound()
        .max(quotient_bound.min(LIMIT_INVENTORY_CAP));
    let universe = Universe::cached(ctx.base_monoid().clone(), inventory);
    let reps = universe.representatives();
    // objects: (act, equivalence into X); object 0 is the identity of X
    let mut objects: Vec<(RightAct, Vec<usize>)> = vec![(x.clone(), (0..x.size()).collect())];
    for r in reps {
        for f in hom_maps(r, x) {
            let hom = ActHom::new_unchecked(r.clone(), x.clone(), f.clone());
            if inverted_by_h(classifier, &hom)? {
                objects.push((r.clone(), f));
            }
        }
    }
    let mut morphisms: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    for (s, (sa, sf)) in objects.iter().enumerate() {
        for (t, (ta, tf)) in objects.iter().enumerate() {
            if s == t {
                continue;
            }
            for h in hom_maps(sa, ta) {
                if sf.iter().zip(&h).all(|(&a, &b)| a == tf[b]) {
                    morphisms.push((s, t, h));
                }
            }
        }
    }
    let families = compatible_families(&objects, &morphisms);
    let index: HashMap<&[usize], usize> = families
        .iter()
        .enumerate()
        .map(|(i, f)| (f.as_slice(), i))
        .collect();
    let k = classifier.context().base_monoid().size();
    let mut action = Vec::with_capacity(families.len() * k);
    for fam in &families {
        for m in 0..k {
            let moved: Vec<usize> = fam
                .iter()
                .zip(&objects)
                .map(|(&v, (a, _))| a.act(v, m))
                .collect();
            action.push(index[moved.as_slice()]);
        }
    }
    let limit = RightAct::from_flat_unchecked(
        classifier.context().base_monoid().clone(),
        families.len(),
        action,
    );
    let map = ActHom::new_unchecked(
        limit.clone(),
        x.clone(),
        families.iter().map(|f| f[0]).collect(),
    );
    let is_equivalence = inverted_by_h(classifier, &map)?;
    let colocality = classifier.colocal(&limit)?;
    Ok(Approximation {
        target: x.clone(),
        object: limit,
        map,
        kind: ApproximationKind::LimitOracle,
        is_equivalence,
        colocality,
    })
}

/// Tuples `(v_i)` with `h(v_s) = v_t` for every diagram morphism `h: s -> t`,
/// in lexicographic order.
fn compatible_families(
    objects: &[(RightAct, Vec<usize>)],
    morphisms: &[(usize, usize, Vec<usize>)],
) -> Vec<Vec<usize>> {
    // constraints checkable once both ends are assigned
    let mut checks: Vec<Vec<(usize, &[usize], bool)>> = vec![Vec::new(); objects.len()];
    for (s, t, h) in morphisms {
        let later = (*s).max(*t);
        checks[later].push((if later == *s { *t } else { *s }, h.as_slice(), later == *t));
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(objects.len());
    fn go(
        depth: usize,
        objects: &[(RightAct, Vec<usize>)],
        checks: &[Vec<(usize, &[usize], bool)>],
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if depth == objects.len() {
            out.push(current.clone());
            return;
        }
        for v in 0..objects[depth].0.size() {
            // `into_current`: the morphism ends at `depth`, so h(v_other) must be v
            let ok = checks[depth].iter().all(|&(other, h, into_current)| {
                if into_current {
                    h[current[other]] == v
                } else {
                    h[v] == current[other]
                }
            });
            if ok {
                current.push(v);
                go(depth + 1, objects, checks, current, out);
                current.pop();
            }
        }
    }
    go(0, objects, &checks, &mut current, &mut out);
    out
}

/// Initial among `H`-equivalences into `X` and terminal among maps into `X`
/// from certified colocal representatives: every such map factors uniquely.
pub fn initiality_check(classifier: &Classifier, approx: &Approximation) -> Result<Verdict> {
    if !approx.is_equivalence {
        return Err(ActError::Precondition {
            what: "approximation".into(),
            requirement: "an H-equivalence",
        });
    }
    let x = &approx.target;
    let c = &approx.object;
    let mut witness = None;
    'scan: for r in classifier.m_universe().representatives() {
        let into_x = hom_maps(r, x);
        if into_x.is_empty() {
            continue;
        }
        // equivalences r -> X receive a unique map from C
        let from_c = hom_maps(c, r);
        for f in &into_x {
            let eps = ActHom::new_unchecked(r.clone(), x.clone(), f.clone());
            if !inverted_by_h(classifier, &eps)? {
                continue;
            }
            let factorings = from_c
                .iter()
                .filter(|h| {
                    h.iter()
                        .zip(approx.map.map())
                        .all(|(&v, &target)| f[v] == target)
                })
                .count();
            if factorings != 1 {
                witness = Some(Evidence::Hom {
                    role: "equivalence-not-factoring",
                    hom: eps,
                });
                break 'scan;
            }
        }
        if !classifier.colocal(r)?.is_yes() {
            continue;
        }
        // maps r -> X from colocal r factor uniquely through C
        let into_c = hom_maps(r, c);
        for f in &into_x {
            let factorings = into_c
                .iter()
                .filter(|h| {
                    h.iter()
                        .zip(f)
                        .all(|(&v, &target)| approx.map.apply(v) == target)
                })
                .count();
            if factorings != 1 {
                witness = Some(Evidence::Hom {
                    role: "colocal-map-not-factoring",
                    hom: ActHom::new_unchecked(r.clone(), x.clone(), f.clone()),
                });
                break 'scan;
            }
        }
    }
    let rule = approx
        .colocality
        .is_yes()
        .then_some("colocal-equivalence-is-approximation");
    settle("initiality", rule, witness, classifier.bound())
}

/// An isomorphism between the two objects over the common target.
pub fn agree_over_target(a: &Approximation, b: &Approximation) -> Option<ActHom> {
    if a.object.size() != b.object.size() || a.target != b.target {
        return None;
    }
    hom_maps(&a.object, &b.object)
        .into_iter()
        .map(|m| ActHom::new_unchecked(a.object.clone(), b.object.clone(), m))
        .find(|phi| phi.is_iso() && b.map.after(phi).expect("composable") == a.map)
}
