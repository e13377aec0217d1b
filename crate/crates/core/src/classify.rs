//! Membership in the subcategories cut out by the unit and counit, and
//! bounded certification of properties that quantify over all acts.
//!
//! Exact properties (reflexivity, generation, cogeneration) return plain
//! booleans. Properties quantified over an infinite category return a
//! [`Verdict`]: a counterexample found in the universe at the bound gives
//! `CertifiedNo`, a named closure rule gives `CertifiedYes`, and anything
//! else is `UnknownAtBound`. Both sides are always computed; a rule that
//! fires against a counterexample is reported as a theorem violation.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use crate::act::RightAct;
use crate::adjunction::{Context, HomAct, TensorAct};
use crate::error::{ActError, Result};
use crate::hom::{are_isomorphic, hom_maps, ActHom};
use crate::limits::pullback;
use crate::structure::{components, is_generator, is_projective};
use crate::universe::Universe;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    CertifiedYes,
    CertifiedNo,
    UnknownAtBound,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::CertifiedYes => "certified-yes",
            Status::CertifiedNo => "certified-no",
            Status::UnknownAtBound => "unknown-at-bound",
        })
    }
}

/// What backs a verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evidence {
    /// Tag of the closure rule behind a `CertifiedYes`.
    Reason(&'static str),
    Hom {
        role: &'static str,
        hom: ActHom,
    },
    Act {
        role: &'static str,
        act: RightAct,
    },
    /// `left: U -> W <- V :right`
    Cospan {
        left: ActHom,
        right: ActHom,
    },
}

impl Evidence {
    /// Compact single-token rendering for machine output.
    pub fn reference(&self) -> String {
        fn list(xs: &[usize]) -> String {
            xs.iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",")
        }
        match self {
            Evidence::Reason(tag) => format!("reason={tag}"),
            Evidence::Hom { role, hom } => format!(
                "{role}:{}->{}:[{}]",
                hom.source().size(),
                hom.target().size(),
                list(hom.map())
            ),
            Evidence::Act { role, act } => {
                format!("{role}:size={}:[{}]", act.size(), list(act.flat()))
            }
            Evidence::Cospan { left, right } => format!(
                "cospan:{}->{}<-{}:[{}]|[{}]",
                left.source().size(),
                left.target().size(),
                right.source().size(),
                list(left.map()),
                list(right.map())
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    status: Status,
    evidence: Option<Evidence>,
    bound: usize,
}

impl Verdict {
    pub fn yes(reason: &'static str, bound: usize) -> Self {
        Verdict {
            status: Status::CertifiedYes,
            evidence: Some(Evidence::Reason(reason)),
            bound,
        }
    }

    pub fn no(witness: Evidence, bound: usize) -> Self {
        Verdict {
            status: Status::CertifiedNo,
            evidence: Some(witness),
            bound,
        }
    }

    pub fn unknown(bound: usize) -> Self {
        Verdict {
            status: Status::UnknownAtBound,
            evidence: None,
            bound,
        }
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn evidence(&self) -> Option<&Evidence> {
        self.evidence.as_ref()
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn is_yes(&self) -> bool {
        self.status == Status::CertifiedYes
    }

    pub fn is_no(&self) -> bool {
        self.status == Status::CertifiedNo
    }

    pub fn is_unknown(&self) -> bool {
        self.status == Status::UnknownAtBound
    }

    pub fn reason(&self) -> Option<&'static str> {
        match self.evidence {
            Some(Evidence::Reason(tag)) => Some(tag),
            _ => None,
        }
    }

    /// `VERDICT <property> <status> <bound> [witness-ref]`
    pub fn machine_line(&self, property: &str) -> String {
        let mut line = format!("VERDICT {property} {} {}", self.status, self.bound);
        if let Some(e) = &self.evidence {
            line.push(' ');
            line.push_str(&e.reference());
        }
        line
    }
}

/// Combines a closure rule with a counterexample search.
pub(crate) fn settle(
    property: &'static str,
    rule: Option<&'static str>,
    counterexample: Option<Evidence>,
    bound: usize,
) -> Result<Verdict> {
    match (rule, counterexample) {
        (Some(tag), Some(witness)) => Err(ActError::theorem(
            property,
            format!("rule {tag} contradicted by {}", witness.reference()),
        )),
        (Some(tag), None) => Ok(Verdict::yes(tag, bound)),
        (None, Some(witness)) => Ok(Verdict::no(witness, bound)),
        (None, None) => Ok(Verdict::unknown(bound)),
    }
}

/// A hom between two universe representatives, by index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub source: usize,
    pub target: usize,
    pub hom: ActHom,
}

/// Every hom between representatives of a universe that one of the two
/// functors sends to an isomorphism, ordered by target, then source, then
/// map.
#[derive(Clone, Debug)]
pub struct EquivalenceCatalog {
    bound: usize,
    entries: Vec<CatalogEntry>,
}

impl EquivalenceCatalog {
    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, hom: &ActHom) -> bool {
        self.entries.iter().any(|e| &e.hom == hom)
    }

    /// Entries ending at representative `target`.
    pub fn ending_at(&self, target: usize) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(move |e| e.target == target)
    }
}

/// `Hom(X, ε): Hom(X, U) -> Hom(X, V)` is bijective.
pub fn postcomposition_bijective(x: &RightAct, eps: &ActHom) -> bool {
    let from = hom_maps(x, eps.source());
    let to = hom_maps(x, eps.target());
    from.len() == to.len() && postcomposition_injective(&from, eps)
}

fn postcomposition_injective(from: &[Vec<usize>], eps: &ActHom) -> bool {
    let mut seen = HashSet::with_capacity(from.len());
    from.iter()
        .all(|f| seen.insert(f.iter().map(|&u| eps.apply(u)).collect::<Vec<_>>()))
}

/// `Hom(ε, Y): Hom(V, Y) -> Hom(U, Y)` is bijective.
pub fn precomposition_bijective(eps: &ActHom, y: &RightAct) -> bool {
    let from = hom_maps(eps.target(), y);
    let to = hom_maps(eps.source(), y);
    from.len() == to.len() && precomposition_injective(&from, eps)
}

fn precomposition_injective(from: &[Vec<usize>], eps: &ActHom) -> bool {
    let mut seen = HashSet::with_capacity(from.len());
    from.iter()
        .all(|g| seen.insert(eps.map().iter().map(|&u| g[u]).collect::<Vec<_>>()))
}

/// The comparison `T(U ×_W V) -> T(U) ×_{T(W)} T(V)` is bijective.
pub fn tensor_preserves_pullback(ctx: &Context, f: &ActHom, g: &ActHom) -> Result<bool> {
    let tu = ctx.tensor_act(f.source())?;
    let tv = ctx.tensor_act(g.source())?;
    let tw = ctx.tensor_act(f.target())?;
    let tf = ctx.tensor_map(f, &tu, &tw)?;
    let tg = ctx.tensor_map(g, &tv, &tw)?;
    comparison_bijective(ctx, f, g, (&tu, &tv), &tf, &tg)
}

fn comparison_bijective(
    ctx: &Context,
    f: &ActHom,
    g: &ActHom,
    sources: (&TensorAct, &TensorAct),
    tf: &ActHom,
    tg: &ActHom,
) -> Result<bool> {
    let (p, p1, p2) = pullback(f, g)?;
    let (q, q1, q2) = pullback(tf, tg)?;
    let tp = ctx.tensor_act(&p)?;
    if tp.underlying().size() != q.size() {
        return Ok(false);
    }
    let index: HashMap<(usize, usize), usize> = (0..q.size())
        .map(|z| ((q1.apply(z), q2.apply(z)), z))
        .collect();
    let mut hit = vec![false; q.size()];
    for &(pp, a) in tp.representatives() {
        let key = (
            sources.0.class_of(p1.apply(pp), a),
            sources.1.class_of(p2.apply(pp), a),
        );
        match index.get(&key) {
            Some(&z) if !std::mem::replace(&mut hit[z], true) => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

pub fn is_delta_reflexive(ctx: &Context, x: &RightAct) -> Result<bool> {
    Ok(ctx.counit(x)?.is_iso())
}

pub fn is_eta_reflexive(ctx: &Context, y: &RightAct) -> Result<bool> {
    Ok(ctx.unit(y)?.is_iso())
}

/// The images of all homs `A -> X` cover `X`.
pub fn covered_by_hom_images(ctx: &Context, x: &RightAct) -> Result<bool> {
    let hx = ctx.hom_act(x)?;
    let mut hit = vec![false; x.size()];
    for h in hx.homs() {
        for &v in h.map() {
            hit[v] = true;
        }
    }
    Ok(hit.into_iter().all(|b| b))
}

/// The counit at `X` is epi; cross-checked against a cover of `X` by
/// images of homs out of `A`.
pub fn is_a_generated(ctx: &Context, x: &RightAct) -> Result<bool> {
    let by_counit = ctx.counit(x)?.is_epi();
    if by_counit != covered_by_hom_images(ctx, x)? {
        return Err(ActError::theorem(
            "generated",
            "counit surjectivity disagrees with the hom-image cover",
        ));
    }
    Ok(by_counit)
}

pub fn is_a_cogenerated(ctx: &Context, y: &RightAct) -> Result<bool> {
    Ok(ctx.unit(y)?.is_mono())
}

/// `A` has one component, checked against the unit at `E ⊔ E`.
pub fn is_indecomposable_small(ctx: &Context) -> Result<bool> {
    if ctx.act().is_empty() {
        return Err(ActError::DegenerateEmptyAct);
    }
    let one_component = components(ctx.act()).len() == 1;
    let reflexive = is_eta_reflexive(ctx, &ctx.free_e_power(2))?;
    if one_component != reflexive {
        return Err(ActError::theorem(
            "indecomposable",
            format!("one component: {one_component}, unit at E ⊔ E iso: {reflexive}"),
        ));
    }
    Ok(one_component)
}

pub fn equivalence_catalog(ctx: &Context, bound: usize) -> EquivalenceCatalog {
    Classifier::new(ctx.clone(), bound).hom_catalog().clone()
}

pub fn tensor_equivalence_catalog(ctx: &Context, bound: usize) -> EquivalenceCatalog {
    Classifier::new(ctx.clone(), bound).tensor_catalog().clone()
}

pub fn bounded_colocal(ctx: &Context, x: &RightAct, bound: usize) -> Result<Verdict> {
    Classifier::new(ctx.clone(), bound).colocal(x)
}

pub fn bounded_local(ctx: &Context, y: &RightAct, bound: usize) -> Result<Verdict> {
    Classifier::new(ctx.clone(), bound).local(y)
}

pub fn weak_self_projective(ctx: &Context, bound: usize) -> Result<Verdict> {
    Classifier::new(ctx.clone(), bound).weak_self_projective()
}

pub fn pullback_flat(ctx: &Context, bound: usize) -> Result<Verdict> {
    Classifier::new(ctx.clone(), bound).pullback_flat()
}

/// Rule tags.
pub mod reason {
    pub const GENERATOR: &str = "generator-makes-every-act-colocal";
    pub const DELTA_REFLEXIVE: &str = "delta-reflexive-is-colocal";
    pub const TENSOR_IMAGE: &str = "tensor-image-is-colocal";
    pub const ETA_REFLEXIVE: &str = "eta-reflexive-is-local";
    pub const HOM_IMAGE: &str = "hom-image-is-local";
    pub const PROJECTIVE: &str = "projective-hom-functor-preserves-epis";
    pub const LEFT_PROJECTIVE: &str = "left-projective-is-strongly-flat";
}

/// Bounded sweeps for one context, sharing universes, functor images and
/// equivalence catalogs between queries.
#[derive(Debug)]
pub struct Classifier {
    ctx: Context,
    bound: usize,
    m_universe: Universe,
    e_universe: OnceLock<Universe>,
    hom_acts: OnceLock<Vec<HomAct>>,
    tensor_acts: OnceLock<Vec<TensorAct>>,
    unit_targets: OnceLock<Vec<HomAct>>,
    hom_catalog: OnceLock<EquivalenceCatalog>,
    tensor_catalog: OnceLock<EquivalenceCatalog>,
}

impl Classifier {
    pub fn new(ctx: Context, bound: usize) -> Self {
        let m_universe = Universe::cached(ctx.base_monoid().clone(), bound);
        Classifier {
            ctx,
            bound,
            m_universe,
            e_universe: OnceLock::new(),
            hom_acts: OnceLock::new(),
            tensor_acts: OnceLock::new(),
            unit_targets: OnceLock::new(),
            hom_catalog: OnceLock::new(),
            tensor_catalog: OnceLock::new(),
        }
    }

    pub fn context(&self) -> &Context {
        &self.ctx
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn m_universe(&self) -> &Universe {
        &self.m_universe
    }

    pub fn e_universe(&self) -> &Universe {
        self.e_universe
            .get_or_init(|| Universe::cached(self.ctx.endomorphism_monoid().clone(), self.bound))
    }

    /// `H(X)` for every `M`-representative.
    pub fn hom_acts(&self) -> &[HomAct] {
        self.hom_acts.get_or_init(|| {
            self.m_universe
                .representatives()
                .iter()
                .map(|x| self.ctx.hom_act(x).expect("representative over M"))
                .collect()
        })
    }

    /// `T(Y)` for every `E`-representative.
    pub fn tensor_acts(&self) -> &[TensorAct] {
        self.tensor_acts.get_or_init(|| {
            self.e_universe()
                .representatives()
                .iter()
                .map(|y| self.ctx.tensor_act(y).expect("representative over E"))
                .collect()
        })
    }

    /// `H(T(Y))` for every `E`-representative.
    fn unit_targets(&self) -> &[HomAct] {
        self.unit_targets.get_or_init(|| {
            self.tensor_acts()
                .iter()
                .map(|t| {
                    self.ctx
                        .hom_act(t.underlying())
                        .expect("tensor lives over M")
                })
                .collect()
        })
    }

    /// Homs between `M`-representatives inverted by `H`.
    pub fn hom_catalog(&self) -> &EquivalenceCatalog {
        self.hom_catalog.get_or_init(|| {
            let reps = self.m_universe.representatives();
            let homs = self.hom_acts();
            let mut entries = Vec::new();
            for (target, v) in reps.iter().enumerate() {
                for (source, u) in reps.iter().enumerate() {
                    if homs[source].underlying().size() != homs[target].underlying().size() {
                        continue;
                    }
                    for map in hom_maps(u, v) {
                        let hom = ActHom::new_unchecked(u.clone(), v.clone(), map);
                        let h = self
                            .ctx
                            .hom_map(&hom, &homs[source], &homs[target])
                            .expect("catalog homs are composable");
                        if h.is_iso() {
                            entries.push(CatalogEntry {
                                source,
                                target,
                                hom,
                            });
                        }
                    }
                }
            }
            EquivalenceCatalog {
                bound: self.bound,
                entries,
            }
        })
    }

    /// Homs between `E`-representatives inverted by `T`.
    pub fn tensor_catalog(&self) -> &EquivalenceCatalog {
        self.tensor_catalog.get_or_init(|| {
            let reps = self.e_universe().representatives();
            let tensors = self.tensor_acts();
            let mut entries = Vec::new();
            for (target, v) in reps.iter().enumerate() {
                for (source, u) in reps.iter().enumerate() {
                    if tensors[source].underlying().size() != tensors[target].underlying().size() {
                        continue;
                    }
                    for map in hom_maps(u, v) {
                        let hom = ActHom::new_unchecked(u.clone(), v.clone(), map);
                        let t = self
                            .ctx
                            .tensor_map(&hom, &tensors[source], &tensors[target])
                            .expect("catalog homs are composable");
                        if t.is_iso() {
                            entries.push(CatalogEntry {
                                source,
                                target,
                                hom,
                            });
                        }
                    }
                }
            }
            EquivalenceCatalog {
                bound: self.bound,
                entries,
            }
        })
    }

    pub(crate) fn colocal_counterexample(&self, x: &RightAct) -> Option<ActHom> {
        let reps = self.m_universe.representatives();
        let mut homs_into: Vec<Option<Vec<Vec<usize>>>> = vec![None; reps.len()];
        for entry in self.hom_catalog().entries() {
            if entry.hom.is_iso() {
                continue;
            }
            for idx in [entry.source, entry.target] {
                if homs_into[idx].is_none() {
                    homs_into[idx] = Some(hom_maps(x, &reps[idx]));
                }
            }
            let from = homs_into[entry.source].as_ref().expect("filled");
            let to = homs_into[entry.target].as_ref().expect("filled");
            if from.len() != to.len() || !postcomposition_injective(from, &entry.hom) {
                return Some(entry.hom.clone());
            }
        }
        None
    }

    fn colocal_rule(&self, x: &RightAct) -> Result<Option<&'static str>> {
        if is_generator(self.ctx.act()) {
            return Ok(Some(reason::GENERATOR));
        }
        if is_delta_reflexive(&self.ctx, x)? {
            return Ok(Some(reason::DELTA_REFLEXIVE));
        }
        let in_image = self.tensor_acts().iter().any(|t| {
            t.underlying().size() == x.size() && are_isomorphic(t.underlying(), x).is_some()
        });
        Ok(in_image.then_some(reason::TENSOR_IMAGE))
    }

    /// Colocality of an `M`-act against the `H`-equivalences at the bound.
    pub fn colocal(&self, x: &RightAct) -> Result<Verdict> {
        let rule = self.colocal_rule(x)?;
        let witness = self.colocal_counterexample(x).map(|hom| Evidence::Hom {
            role: "h-equivalence",
            hom,
        });
        settle("colocal", rule, witness, self.bound)
    }

    fn local_counterexample(&self, y: &RightAct) -> Option<ActHom> {
        let reps = self.e_universe().representatives();
        let mut homs_from: Vec<Option<Vec<Vec<usize>>>> = vec![None; reps.len()];
        for entry in self.tensor_catalog().entries() {
            if entry.hom.is_iso() {
                continue;
            }
            for idx in [entry.source, entry.target] {
                if homs_from[idx].is_none() {
                    homs_from[idx] = Some(hom_maps(&reps[idx], y));
                }
            }
            let from = homs_from[entry.target].as_ref().expect("filled");
            let to = homs_from[entry.source].as_ref().expect("filled");
            if from.len() != to.len() || !precomposition_injective(from, &entry.hom) {
                return Some(entry.hom.clone());
            }
        }
        None
    }

    /// Locality of an `E`-act against the `T`-equivalences at the bound.
    pub fn local(&self, y: &RightAct) -> Result<Verdict> {
        let rule = if is_eta_reflexive(&self.ctx, y)? {
            Some(reason::ETA_REFLEXIVE)
        } else {
            let in_image = self.hom_acts().iter().any(|h| {
                h.underlying().size() == y.size() && are_isomorphic(h.underlying(), y).is_some()
            });
            in_image.then_some(reason::HOM_IMAGE)
        };
        let witness = self.local_counterexample(y).map(|hom| Evidence::Hom {
            role: "t-equivalence",
            hom,
        });
        settle("local", rule, witness, self.bound)
    }

    /// `H(T(g))` for `g` between `E`-acts with known tensors and unit targets.
    fn double_map(
        &self,
        g: &ActHom,
        tensors: (&TensorAct, &TensorAct),
        homs: (&HomAct, &HomAct),
    ) -> ActHom {
        let t = self
            .ctx
            .tensor_map(g, tensors.0, tensors.1)
            .expect("tensors match the hom");
        self.ctx
            .hom_map(&t, homs.0, homs.1)
            .expect("hom acts match the tensor map")
    }

    /// First epi `g` with η-reflexive source whose image under `H ∘ T` is
    /// not epi. Searched over pairs of representatives, then over covers by
    /// free acts `E^(k)`, `k ≤ bound`, that are themselves η-reflexive.
    fn weak_self_projective_counterexample(&self) -> Result<Option<Evidence>> {
        let reps = self.e_universe().representatives();
        let tensors = self.tensor_acts();
        let targets = self.unit_targets();
        let reflexive: Vec<usize> = (0..reps.len())
            .filter(|&i| {
                self.ctx
                    .unit_with(&tensors[i], &targets[i])
                    .expect("unit of a representative")
                    .is_iso()
            })
            .collect();
        for (yi, y) in reps.iter().enumerate() {
            for &ui in &reflexive {
                if reps[ui].size() < y.size() {
                    continue;
                }
                for map in hom_maps(&reps[ui], y) {
                    let g = ActHom::new_unchecked(reps[ui].clone(), y.clone(), map);
                    if !g.is_epi() {
                        continue;
                    }
                    let hg = self.double_map(
                        &g,
                        (&tensors[ui], &tensors[yi]),
                        (&targets[ui], &targets[yi]),
                    );
                    if !hg.is_epi() {
                        return Ok(Some(Evidence::Hom {
                            role: "eta-reflexive-source",
                            hom: g,
                        }));
                    }
                }
            }
        }
        for k in 1..=self.bound {
            let free = self.ctx.free_e_power(k);
            let t_free = self.ctx.tensor_act(&free)?;
            let h_free = self.ctx.hom_act(t_free.underlying())?;
            if !self.ctx.unit_with(&t_free, &h_free)?.is_iso() {
                continue;
            }
            for (yi, y) in reps.iter().enumerate() {
                for map in hom_maps(&free, y) {
                    let g = ActHom::new_unchecked(free.clone(), y.clone(), map);
                    if !g.is_epi() {
                        continue;
                    }
                    let hg = self.double_map(&g, (&t_free, &tensors[yi]), (&h_free, &targets[yi]));
                    if !hg.is_epi() {
                        return Ok(Some(Evidence::Hom {
                            role: "free-cover",
                            hom: g,
                        }));
                    }
                }
            }
        }
        Ok(None)
    }

    pub fn weak_self_projective(&self) -> Result<Verdict> {
        let rule = is_projective(self.ctx.act()).then_some(reason::PROJECTIVE);
        let witness = self.weak_self_projective_counterexample()?;
        settle("weak-self-projective", rule, witness, self.bound)
    }

    /// `A` is projective as a left `E`-act.
    pub fn left_projective(&self) -> bool {
        is_projective(self.ctx.biact().left_act().as_right_act())
    }

    fn pullback_flat_counterexample(&self) -> Result<Option<Evidence>> {
        let reps = self.e_universe().representatives();
        let tensors = self.tensor_acts();
        for (wi, w) in reps.iter().enumerate() {
            for (ui, u) in reps.iter().enumerate() {
                let left_maps = hom_maps(u, w);
                if left_maps.is_empty() {
                    continue;
                }
                for (vi, v) in reps.iter().enumerate().skip(ui) {
                    let right_maps = hom_maps(v, w);
                    for lm in &left_maps {
                        let f = ActHom::new_unchecked(u.clone(), w.clone(), lm.clone());
                        let tf = self.ctx.tensor_map(&f, &tensors[ui], &tensors[wi])?;
                        for rm in &right_maps {
                            let g = ActHom::new_unchecked(v.clone(), w.clone(), rm.clone());
                            let tg = self.ctx.tensor_map(&g, &tensors[vi], &tensors[wi])?;
                            if !self.tensor_preserves_pullback(&f, &g, &tf, &tg, ui, vi)? {
                                return Ok(Some(Evidence::Cospan { left: f, right: g }));
                            }
                        }
                    }
                }
            }
        }
        Ok(None)
    }

    fn tensor_preserves_pullback(
        &self,
        f: &ActHom,
        g: &ActHom,
        tf: &ActHom,
        tg: &ActHom,
        ui: usize,
        vi: usize,
    ) -> Result<bool> {
        let tensors = self.tensor_acts();
        comparison_bijective(&self.ctx, f, g, (&tensors[ui], &tensors[vi]), tf, tg)
    }

    pub fn pullback_flat(&self) -> Result<Verdict> {
        let rule = self.left_projective().then_some(reason::LEFT_PROJECTIVE);
        let witness = self.pullback_flat_counterexample()?;
        settle("pullback-flat", rule, witness, self.bound)
    }
}
