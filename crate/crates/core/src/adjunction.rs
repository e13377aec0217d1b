//! The adjoint pair `T_A ⊣ H_A` between right `M`-acts and right `E`-acts,
//! where `E = End(A)`.
//!
//! Orientation conventions, fixed once here:
//!
//! * `E` is indexed by the endomorphisms of `A` in lexicographic order of
//!   their maps, and multiplies by composition: `e*f = e ∘ f`.
//! * `A` is a left `E`-act by evaluation, `e·a = e(a)`.
//! * `H_A(X) = [A, X]` is a right `E`-act by precomposition, `g·e = g ∘ e`.
//! * `T_A(Y) = Y ⊗_E A` is `Y x A` modulo the smallest congruence with
//!   `(y·e, a) ~ (y, e·a)`, acted on by `M` in the second slot.
//! * The unit is `η_Y(y) = (a ↦ [y, a])`, the counit `δ_X([g, a]) = g(a)`.

use std::sync::Arc;

use crate::act::{same_monoid, LeftAct, RightAct};
use crate::congruence::{close_under_action, DisjointSet};
use crate::error::{ActError, Result};
use crate::hom::{hom_maps, ActHom};
use crate::limits::coproduct;
use crate::monoid::Monoid;

/// `A` with commuting left `E`- and right `M`-actions.
#[derive(Clone, Debug)]
pub struct Biact {
    carrier: RightAct,
    left_monoid: Arc<Monoid>,
    /// `left_action[e * |A| + a] = e·a`
    left_action: Vec<usize>,
}

impl Biact {
    pub fn new(
        carrier: RightAct,
        left_monoid: Arc<Monoid>,
        left_action: Vec<usize>,
    ) -> Result<Self> {
        let biact = Biact {
            carrier,
            left_monoid,
            left_action,
        };
        biact.check()?;
        Ok(biact)
    }

    fn check(&self) -> Result<()> {
        let n = self.carrier.size();
        let e_size = self.left_monoid.size();
        if self.left_action.len() != e_size * n {
            return Err(ActError::MapLength {
                len: self.left_action.len(),
                expected: e_size * n,
            });
        }
        for e in 0..e_size {
            for a in 0..n {
                for m in 0..self.carrier.monoid().size() {
                    if self.left(e, self.carrier.act(a, m)) != self.carrier.act(self.left(e, a), m)
                    {
                        return Err(ActError::NotEquivariant { x: a, m });
                    }
                }
                for f in 0..e_size {
                    if self.left(e, self.left(f, a)) != self.left(self.left_monoid.mul(e, f), a) {
                        return Err(ActError::ActAssociativityViolation { x: a, m: e, n: f });
                    }
                }
            }
        }
        for a in 0..n {
            if self.left(self.left_monoid.identity(), a) != a {
                return Err(ActError::ActUnitViolation { x: a });
            }
        }
        Ok(())
    }

    pub fn carrier(&self) -> &RightAct {
        &self.carrier
    }

    pub fn left_monoid(&self) -> &Arc<Monoid> {
        &self.left_monoid
    }

    #[inline]
    pub fn left(&self, e: usize, a: usize) -> usize {
        self.left_action[e * self.carrier.size() + a]
    }

    /// The left `E`-act underlying the biact.
    pub fn left_act(&self) -> LeftAct {
        let n = self.carrier.size();
        let rows = (0..self.left_monoid.size())
            .map(|e| (0..n).map(|a| self.left(e, a)).collect())
            .collect();
        LeftAct::new(self.left_monoid.clone(), rows).expect("biact left action is an act")
    }
}

/// Fixed data of the adjunction for one act `A`.
#[derive(Clone, Debug)]
pub struct Context {
    m: Arc<Monoid>,
    a: RightAct,
    e: Arc<Monoid>,
    endos: Vec<ActHom>,
    biact: Biact,
}

/// `H_A(X)`: the homs `A -> X` as a right `E`-act.
#[derive(Clone, Debug)]
pub struct HomAct {
    base: RightAct,
    underlying: RightAct,
    homs: Vec<ActHom>,
}

impl HomAct {
    /// The `M`-act `X` this was computed from.
    pub fn base(&self) -> &RightAct {
        &self.base
    }

    pub fn underlying(&self) -> &RightAct {
        &self.underlying
    }

    /// Carrier element `i` is `homs()[i]`.
    pub fn homs(&self) -> &[ActHom] {
        &self.homs
    }

    pub fn index_of(&self, map: &[usize]) -> Option<usize> {
        self.homs.binary_search_by(|h| h.map().cmp(map)).ok()
    }
}

/// `T_A(Y) = Y ⊗_E A` with the class of every pair.
#[derive(Clone, Debug)]
pub struct TensorAct {
    base: RightAct,
    underlying: RightAct,
    a_size: usize,
    class_of: Vec<usize>,
    representatives: Vec<(usize, usize)>,
}

impl TensorAct {
    /// The `E`-act `Y` this was computed from.
    pub fn base(&self) -> &RightAct {
        &self.base
    }

    pub fn underlying(&self) -> &RightAct {
        &self.underlying
    }

    #[inline]
    pub fn class_of(&self, y: usize, a: usize) -> usize {
        self.class_of[y * self.a_size + a]
    }

    /// Lexicographically least pair of every class.
    pub fn representatives(&self) -> &[(usize, usize)] {
        &self.representatives
    }
}

impl Context {
    pub fn new(monoid: Arc<Monoid>, a: RightAct) -> Result<Self> {
        if !same_monoid(&monoid, a.monoid()) {
            return Err(ActError::MonoidMismatch);
        }
        let maps = hom_maps(&a, &a);
        let k = maps.len();
        let index = |map: &[usize]| {
            maps.binary_search_by(|h| h.as_slice().cmp(map))
                .expect("endomorphisms are closed under composition")
        };
        let mut table = Vec::with_capacity(k * k);
        for e in &maps {
            for f in &maps {
                let composite: Vec<usize> = f.iter().map(|&x| e[x]).collect();
                table.push(index(&composite));
            }
        }
        let identity = index(&(0..a.size()).collect::<Vec<_>>());
        let e = Arc::new(Monoid::from_flat_unchecked(k, table, identity));
        let left_action = maps.iter().flatten().copied().collect();
        let biact = Biact {
            carrier: a.clone(),
            left_monoid: e.clone(),
            left_action,
        };
        debug_assert!(biact.check().is_ok());
        let endos = maps
            .into_iter()
            .map(|map| ActHom::new_unchecked(a.clone(), a.clone(), map))
            .collect();
        Ok(Context {
            m: monoid,
            a,
            e,
            endos,
            biact,
        })
    }

    /// Context over the act's own monoid.
    pub fn for_act(a: &RightAct) -> Self {
        Context::new(a.monoid().clone(), a.clone()).expect("act lives over its own monoid")
    }

    pub fn base_monoid(&self) -> &Arc<Monoid> {
        &self.m
    }

    pub fn act(&self) -> &RightAct {
        &self.a
    }

    /// `E = End(A)`.
    pub fn endomorphism_monoid(&self) -> &Arc<Monoid> {
        &self.e
    }

    pub fn endos(&self) -> &[ActHom] {
        &self.endos
    }

    pub fn biact(&self) -> &Biact {
        &self.biact
    }

    fn check_m(&self, x: &RightAct) -> Result<()> {
        if same_monoid(x.monoid(), &self.m) {
            Ok(())
        } else {
            Err(ActError::MonoidMismatch)
        }
    }

    fn check_e(&self, y: &RightAct) -> Result<()> {
        if same_monoid(y.monoid(), &self.e) {
            Ok(())
        } else {
            Err(ActError::MonoidMismatch)
        }
    }

    /// `E` as a right act over itself.
    pub fn free_e(&self) -> RightAct {
        RightAct::regular(self.e.clone())
    }

    /// The coproduct of `copies` copies of `E`.
    pub fn free_e_power(&self, copies: usize) -> RightAct {
        let parts = vec![self.free_e(); copies];
        coproduct(self.e.clone(), &parts).expect("same monoid").0
    }

    /// `H_A(X) = [A, X]`.
    pub fn hom_act(&self, x: &RightAct) -> Result<HomAct> {
        self.check_m(x)?;
        let maps = hom_maps(&self.a, x);
        let k = self.e.size();
        let mut action = Vec::with_capacity(maps.len() * k);
        let mut composite = vec![0; self.a.size()];
        for g in &maps {
            for endo in &self.endos {
                for (slot, &a) in composite.iter_mut().zip(endo.map()) {
                    *slot = g[a];
                }
                let idx = maps
                    .binary_search(&composite)
                    .expect("precomposition of a hom is a hom");
                action.push(idx);
            }
        }
        let underlying = RightAct::from_flat_unchecked(self.e.clone(), maps.len(), action);
        let homs = maps
            .into_iter()
            .map(|map| ActHom::new_unchecked(self.a.clone(), x.clone(), map))
            .collect();
        Ok(HomAct {
            base: x.clone(),
            underlying,
            homs,
        })
    }

    /// `T_A(Y) = Y ⊗_E A`.
    pub fn tensor_act(&self, y: &RightAct) -> Result<TensorAct> {
        self.check_e(y)?;
        let na = self.a.size();
        // Y x A as |Y| copies of A
        let copies = vec![self.a.clone(); y.size()];
        let (pairs, _) = coproduct(self.m.clone(), &copies)?;
        let mut classes = DisjointSet::new(pairs.size());
        for yy in 0..y.size() {
            for e in 0..self.e.size() {
                let ye = y.act(yy, e);
                for a in 0..na {
                    classes.union(ye * na + a, yy * na + self.biact.left(e, a));
                }
            }
        }
        close_under_action(&pairs, &mut classes);
        let (labels, count) = classes.labels();
        let underlying = pairs.quotient_by_labels(&labels, count);
        let mut representatives = vec![(usize::MAX, usize::MAX); count];
        for (p, &l) in labels.iter().enumerate().rev() {
            representatives[l] = (p / na.max(1), p % na.max(1));
        }
        Ok(TensorAct {
            base: y.clone(),
            underlying,
            a_size: na,
            class_of: labels,
            representatives,
        })
    }

    /// `H_A(f)`: postcomposition with `f: X -> X'`, between given hom acts.
    pub fn hom_map(&self, f: &ActHom, source: &HomAct, target: &HomAct) -> Result<ActHom> {
        if f.source() != source.base() || f.target() != target.base() {
            return Err(ActError::NotComposable);
        }
        let map = source
            .homs
            .iter()
            .map(|g| {
                let composite: Vec<usize> = g.map().iter().map(|&x| f.apply(x)).collect();
                target
                    .index_of(&composite)
                    .expect("postcomposition of a hom is a hom")
            })
            .collect();
        Ok(ActHom::new_unchecked(
            source.underlying.clone(),
            target.underlying.clone(),
            map,
        ))
    }

    pub fn hom_on_morphism(&self, f: &ActHom) -> Result<ActHom> {
        let source = self.hom_act(f.source())?;
        let target = self.hom_act(f.target())?;
        self.hom_map(f, &source, &target)
    }

    /// `T_A(g)`: `[y, a] ↦ [g(y), a]`, between given tensor acts.
    pub fn tensor_map(&self, g: &ActHom, source: &TensorAct, target: &TensorAct) -> Result<ActHom> {
        if g.source() != source.base() || g.target() != target.base() {
            return Err(ActError::NotComposable);
        }
        let map = source
            .representatives
            .iter()
            .map(|&(y, a)| target.class_of(g.apply(y), a))
            .collect();
        Ok(ActHom::new_unchecked(
            source.underlying.clone(),
            target.underlying.clone(),
            map,
        ))
    }

    pub fn tensor_on_morphism(&self, g: &ActHom) -> Result<ActHom> {
        let source = self.tensor_act(g.source())?;
        let target = self.tensor_act(g.target())?;
        self.tensor_map(g, &source, &target)
    }

    /// `η_Y: Y -> H_A(T_A(Y))` with `ty = T_A(Y)` and `hty = H_A(ty)`.
    pub fn unit_with(&self, ty: &TensorAct, hty: &HomAct) -> Result<ActHom> {
        if hty.base() != ty.underlying() {
            return Err(ActError::NotComposable);
        }
        let y = ty.base();
        let map = (0..y.size())
            .map(|yy| {
                let g: Vec<usize> = (0..self.a.size()).map(|a| ty.class_of(yy, a)).collect();
                hty.index_of(&g).expect("a ↦ [y, a] is a hom")
            })
            .collect();
        Ok(ActHom::new_unchecked(
            y.clone(),
            hty.underlying.clone(),
            map,
        ))
    }

    pub fn unit(&self, y: &RightAct) -> Result<ActHom> {
        let ty = self.tensor_act(y)?;
        let hty = self.hom_act(ty.underlying())?;
        self.unit_with(&ty, &hty)
    }

    /// `δ_X: T_A(H_A(X)) -> X` with `hx = H_A(X)` and `thx = T_A(hx)`.
    pub fn counit_with(&self, hx: &HomAct, thx: &TensorAct) -> Result<ActHom> {
        if thx.base() != hx.underlying() {
            return Err(ActError::NotComposable);
        }
        let map = thx
            .representatives
            .iter()
            .map(|&(g, a)| hx.homs[g].apply(a))
            .collect();
        Ok(ActHom::new_unchecked(
            thx.underlying.clone(),
            hx.base.clone(),
            map,
        ))
    }

    pub fn counit(&self, x: &RightAct) -> Result<ActHom> {
        let hx = self.hom_act(x)?;
        let thx = self.tensor_act(hx.underlying())?;
        self.counit_with(&hx, &thx)
    }

    /// `H(δ_X) ∘ η_{H(X)} = id`.
    pub fn check_hom_triangle(&self, x: &RightAct) -> Result<bool> {
        let hx = self.hom_act(x)?;
        let thx = self.tensor_act(hx.underlying())?;
        let hthx = self.hom_act(thx.underlying())?;
        let delta = self.counit_with(&hx, &thx)?;
        let eta = self.unit_with(&thx, &hthx)?;
        let h_delta = self.hom_map(&delta, &hthx, &hx)?;
        Ok(h_delta.after(&eta)? == ActHom::identity(hx.underlying()))
    }

    /// `δ_{T(Y)} ∘ T(η_Y) = id`.
    pub fn check_tensor_triangle(&self, y: &RightAct) -> Result<bool> {
        let ty = self.tensor_act(y)?;
        let hty = self.hom_act(ty.underlying())?;
        let thty = self.tensor_act(hty.underlying())?;
        let eta = self.unit_with(&ty, &hty)?;
        let t_eta = self.tensor_map(&eta, &ty, &thty)?;
        let delta = self.counit_with(&hty, &thty)?;
        Ok(delta.after(&t_eta)? == ActHom::identity(ty.underlying()))
    }

    pub fn check_triangles(&self, x: &RightAct, y: &RightAct) -> Result<bool> {
        Ok(self.check_hom_triangle(x)? && self.check_tensor_triangle(y)?)
    }

    /// The natural bijection `Hom_M(T(Y), X) ≅ Hom_E(Y, H(X))`,
    /// `g ↦ H(g) ∘ η_Y`, as pairs in the order of the left-hand homs. Fails
    /// with a theorem violation if the inverse `f ↦ δ_X ∘ T(f)` does not
    /// undo it.
    pub fn adjunction_bijection(
        &self,
        y: &RightAct,
        x: &RightAct,
    ) -> Result<Vec<(ActHom, ActHom)>> {
        let ty = self.tensor_act(y)?;
        let hty = self.hom_act(ty.underlying())?;
        let hx = self.hom_act(x)?;
        let thx = self.tensor_act(hx.underlying())?;
        let eta = self.unit_with(&ty, &hty)?;
        let delta = self.counit_with(&hx, &thx)?;
        let left = hom_maps(ty.underlying(), x);
        let right = hom_maps(y, hx.underlying());
        if left.len() != right.len() {
            return Err(ActError::theorem(
                "adjunction",
                format!(
                    "|Hom(T(Y), X)| = {} but |Hom(Y, H(X))| = {}",
                    left.len(),
                    right.len()
                ),
            ));
        }
        let mut pairs = Vec::with_capacity(left.len());
        let mut hit = vec![false; right.len()];
        for map in left {
            let g = ActHom::new_unchecked(ty.underlying().clone(), x.clone(), map);
            let f = self.hom_map(&g, &hty, &hx)?.after(&eta)?;
            let back = delta.after(&self.tensor_map(&f, &ty, &thx)?)?;
            if back != g {
                return Err(ActError::theorem(
                    "adjunction",
                    format!("δ_X ∘ T(H(g) ∘ η_Y) != g for g = {:?}", g.map()),
                ));
            }
            let idx = right
                .binary_search_by(|r| r.as_slice().cmp(f.map()))
                .map_err(|_| ActError::theorem("adjunction", "transpose is not a hom"))?;
            if std::mem::replace(&mut hit[idx], true) {
                return Err(ActError::theorem(
                    "adjunction",
                    "transpose is not injective",
                ));
            }
            pairs.push((g, f));
        }
        Ok(pairs)
    }

    /// When `A` is literally the regular act, the isomorphism `M -> E`,
    /// `m ↦ (left multiplication by m)`.
    pub fn regular_identification(&self) -> Option<Vec<usize>> {
        if self.a != RightAct::regular(self.m.clone()) {
            return None;
        }
        let n = self.m.size();
        (0..n)
            .map(|s| {
                let map: Vec<usize> = (0..n).map(|t| self.m.mul(s, t)).collect();
                self.endos.binary_search_by(|h| h.map().cmp(&map)).ok()
            })
            .collect()
    }
}

#[cfg(test)]
#[allow(clippy::needless_range_loop)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::hom::{are_isomorphic, enumerate_homs};
    use crate::universe::Universe;

    fn contexts(bound: usize) -> Vec<Context> {
        let mut out = Vec::new();
        for m in small_monoids() {
            for a in Universe::cached(m.clone(), bound).representatives() {
                out.push(Context::for_act(a));
            }
        }
        out
    }

    /// Least equivalence on `Y x A` containing the defining relations and
    /// closed under the `M`-action, by naive relation fixpoint.
    fn naive_tensor_relation(ctx: &Context, y: &RightAct) -> Vec<Vec<bool>> {
        let na = ctx.act().size();
        let n = y.size() * na;
        let mut rel = vec![vec![false; n]; n];
        for p in 0..n {
            rel[p][p] = true;
        }
        for yy in 0..y.size() {
            for e in 0..ctx.endomorphism_monoid().size() {
                for a in 0..na {
                    let p = y.act(yy, e) * na + a;
                    let q = yy * na + ctx.biact().left(e, a);
                    rel[p][q] = true;
                    rel[q][p] = true;
                }
            }
        }
        loop {
            let mut changed = false;
            for p in 0..n {
                for q in 0..n {
                    if !rel[p][q] {
                        continue;
                    }
                    for m in 0..ctx.base_monoid().size() {
                        let pm = (p / na) * na + ctx.act().act(p % na, m);
                        let qm = (q / na) * na + ctx.act().act(q % na, m);
                        if !rel[pm][qm] {
                            rel[pm][qm] = true;
                            changed = true;
                        }
                    }
                    for r in 0..n {
                        if rel[q][r] && !rel[p][r] {
                            rel[p][r] = true;
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                return rel;
            }
        }
    }

    #[test]
    fn point_act_over_trivial_monoid_has_trivial_endomorphisms() {
        let t = Arc::new(Monoid::trivial());
        let ctx = Context::for_act(&RightAct::point(t));
        assert_eq!(ctx.endomorphism_monoid().size(), 1);
    }

    #[test]
    fn two_point_set_has_full_transformation_monoid() {
        let t = Arc::new(Monoid::trivial());
        let ctx = Context::for_act(&RightAct::trivial(t, 2));
        assert_eq!(ctx.endomorphism_monoid().size(), 4);
    }

    #[test]
    fn endomorphisms_of_regular_act_recover_the_monoid() {
        for m in small_monoids() {
            let ctx = Context::for_act(&RightAct::regular(m.clone()));
            let phi = ctx.regular_identification().unwrap();
            let e = ctx.endomorphism_monoid();
            for s in 0..m.size() {
                for t in 0..m.size() {
                    assert_eq!(phi[m.mul(s, t)], e.mul(phi[s], phi[t]));
                }
            }
            assert!(m.isomorphism_to(e).is_some());
        }
    }

    #[test]
    fn context_invariants_hold() {
        for ctx in contexts(3) {
            let e = ctx.endomorphism_monoid();
            assert_eq!(
                ctx.endos().to_vec(),
                enumerate_homs(ctx.act(), ctx.act()).unwrap()
            );
            assert_eq!(ctx.endos()[e.identity()], ActHom::identity(ctx.act()));
            for i in 0..e.size() {
                for j in 0..e.size() {
                    assert_eq!(
                        ctx.endos()[e.mul(i, j)],
                        ctx.endos()[i].after(&ctx.endos()[j]).unwrap()
                    );
                }
            }
            assert!(ctx.biact().check().is_ok());
        }
    }

    #[test]
    fn hom_act_of_empty_is_empty() {
        let m = idempotent_monoid();
        let ctx = Context::for_act(&RightAct::regular(m.clone()));
        assert!(ctx
            .hom_act(&RightAct::empty(m))
            .unwrap()
            .underlying()
            .is_empty());
    }

    #[test]
    fn hom_act_over_full_transformation_monoid() {
        let t = Arc::new(Monoid::trivial());
        let two = RightAct::trivial(t, 2);
        let ctx = Context::for_act(&two);
        let h = ctx.hom_act(&two).unwrap();
        assert_eq!(h.underlying().size(), 4);
        // precomposition: g·e = g∘e
        for (i, g) in h.homs().iter().enumerate() {
            for (e, endo) in ctx.endos().iter().enumerate() {
                let j = h.underlying().act(i, e);
                assert_eq!(h.homs()[j], g.after(endo).unwrap());
            }
        }
    }

    #[test]
    fn hom_act_rejects_foreign_monoid() {
        let ctx = Context::for_act(&RightAct::regular(idempotent_monoid()));
        let other = RightAct::point(Arc::new(Monoid::trivial()));
        assert_eq!(ctx.hom_act(&other).unwrap_err(), ActError::MonoidMismatch);
        assert_eq!(
            ctx.tensor_act(&other).unwrap_err(),
            ActError::MonoidMismatch
        );
    }

    #[test]
    fn tensor_with_free_act_recovers_a() {
        for ctx in contexts(3) {
            let t = ctx.tensor_act(&ctx.free_e()).unwrap();
            assert!(are_isomorphic(t.underlying(), ctx.act()).is_some());
            let t2 = ctx.tensor_act(&ctx.free_e_power(2)).unwrap();
            let (aa, _) = coproduct(
                ctx.base_monoid().clone(),
                &[ctx.act().clone(), ctx.act().clone()],
            )
            .unwrap();
            assert!(are_isomorphic(t2.underlying(), &aa).is_some());
        }
    }

    #[test]
    fn constant_endomorphisms_collapse_the_tensor() {
        let t = Arc::new(Monoid::trivial());
        let ctx = Context::for_act(&RightAct::trivial(t, 2));
        let point = RightAct::point(ctx.endomorphism_monoid().clone());
        assert_eq!(ctx.tensor_act(&point).unwrap().underlying().size(), 1);
    }

    #[test]
    fn tensor_classes_match_naive_closure() {
        for ctx in contexts(2) {
            for y in Universe::cached(ctx.endomorphism_monoid().clone(), 2).representatives() {
                let t = ctx.tensor_act(y).unwrap();
                let rel = naive_tensor_relation(&ctx, y);
                let na = ctx.act().size();
                for p in 0..y.size() * na {
                    for q in 0..y.size() * na {
                        let same = t.class_of(p / na, p % na) == t.class_of(q / na, q % na);
                        assert_eq!(same, rel[p][q]);
                    }
                }
                for (c, &(yy, a)) in t.representatives().iter().enumerate() {
                    assert_eq!(t.class_of(yy, a), c);
                    // lexicographically least member
                    for p in 0..yy * na + a {
                        assert_ne!(t.class_of(p / na, p % na), c);
                    }
                }
            }
        }
    }

    #[test]
    fn unit_and_counit_on_generators() {
        for ctx in contexts(3) {
            assert!(ctx.unit(&ctx.free_e()).unwrap().is_iso());
            assert!(ctx.counit(ctx.act()).unwrap().is_iso());
            let empty = RightAct::empty(ctx.endomorphism_monoid().clone());
            assert!(ctx.unit(&empty).unwrap().source().is_empty());
        }
    }

    #[test]
    fn unit_on_double_free_act_is_not_onto_for_two_points() {
        let t = Arc::new(Monoid::trivial());
        let ctx = Context::for_act(&RightAct::trivial(t, 2));
        let eta = ctx.unit(&ctx.free_e_power(2)).unwrap();
        assert!(eta.is_mono());
        assert!(!eta.is_epi());
    }

    #[test]
    fn counit_misses_identity_for_idempotent_ideal() {
        let m = idempotent_monoid();
        let ctx = Context::for_act(&RightAct::principal_ideal(m.clone(), 1));
        let delta = ctx.counit(&RightAct::regular(m)).unwrap();
        assert!(!delta.is_epi());
        assert_eq!(delta.map(), &[1]);
    }

    #[test]
    fn triangles_hold_at_bound_two() {
        for ctx in contexts(2) {
            for x in Universe::cached(ctx.base_monoid().clone(), 2).representatives() {
                assert!(ctx.check_hom_triangle(x).unwrap());
            }
            for y in Universe::cached(ctx.endomorphism_monoid().clone(), 2).representatives() {
                assert!(ctx.check_tensor_triangle(y).unwrap());
            }
        }
    }

    #[test]
    fn functor_laws_and_naturality() {
        for ctx in contexts(2) {
            let xs = Universe::cached(ctx.base_monoid().clone(), 2);
            for x in xs.representatives() {
                assert_eq!(
                    ctx.hom_on_morphism(&ActHom::identity(x)).unwrap(),
                    ActHom::identity(ctx.hom_act(x).unwrap().underlying())
                );
                for x2 in xs.representatives() {
                    for f in enumerate_homs(x, x2).unwrap() {
                        // δ is natural: f ∘ δ_X = δ_X' ∘ T(H(f))
                        let hf = ctx.hom_on_morphism(&f).unwrap();
                        let thf = ctx.tensor_on_morphism(&hf).unwrap();
                        let lhs = f.after(&ctx.counit(x).unwrap()).unwrap();
                        let rhs = ctx.counit(x2).unwrap().after(&thf).unwrap();
                        assert_eq!(lhs, rhs);
                        for x3 in xs.representatives() {
                            for g in enumerate_homs(x2, x3).unwrap() {
                                let hgf = ctx.hom_on_morphism(&g.after(&f).unwrap()).unwrap();
                                let hg = ctx.hom_on_morphism(&g).unwrap();
                                assert_eq!(hgf, hg.after(&hf).unwrap());
                            }
                        }
                    }
                }
            }
            let ys = Universe::cached(ctx.endomorphism_monoid().clone(), 2);
            for y in ys.representatives() {
                for y2 in ys.representatives() {
                    for g in enumerate_homs(y, y2).unwrap() {
                        // η is natural: H(T(g)) ∘ η_Y = η_Y' ∘ g
                        let tg = ctx.tensor_on_morphism(&g).unwrap();
                        let htg = ctx.hom_on_morphism(&tg).unwrap();
                        let lhs = htg.after(&ctx.unit(y).unwrap()).unwrap();
                        let rhs = ctx.unit(y2).unwrap().after(&g).unwrap();
                        assert_eq!(lhs, rhs);
                        if g.is_epi() {
                            assert!(tg.is_epi());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn hom_preserves_monos_and_tensor_preserves_coproducts() {
        for ctx in contexts(2) {
            let xs = Universe::cached(ctx.base_monoid().clone(), 2);
            for x in xs.representatives() {
                for x2 in xs.representatives() {
                    for f in enumerate_homs(x, x2).unwrap() {
                        if f.is_mono() {
                            assert!(ctx.hom_on_morphism(&f).unwrap().is_mono());
                        }
                    }
                }
            }
            let ys = Universe::cached(ctx.endomorphism_monoid().clone(), 2);
            for y in ys.representatives() {
                for y2 in ys.representatives() {
                    let (sum, _) =
                        coproduct(ctx.endomorphism_monoid().clone(), &[y.clone(), y2.clone()])
                            .unwrap();
                    let t = ctx.tensor_act(&sum).unwrap();
                    let parts = [
                        ctx.tensor_act(y).unwrap().underlying().clone(),
                        ctx.tensor_act(y2).unwrap().underlying().clone(),
                    ];
                    let (tsum, _) = coproduct(ctx.base_monoid().clone(), &parts).unwrap();
                    assert!(are_isomorphic(t.underlying(), &tsum).is_some());
                }
            }
        }
    }

    #[test]
    fn adjunction_bijection_cardinalities() {
        for ctx in contexts(2) {
            let e_reps = Universe::cached(ctx.endomorphism_monoid().clone(), 2);
            for x in Universe::cached(ctx.base_monoid().clone(), 2).representatives() {
                let hx = ctx.hom_act(x).unwrap();
                for y in e_reps.representatives() {
                    let pairs = ctx.adjunction_bijection(y, x).unwrap();
                    assert_eq!(
                        pairs.len(),
                        enumerate_homs(y, hx.underlying()).unwrap().len()
                    );
                }
                // Y = E: both sides are the carrier of H(X)
                let pairs = ctx.adjunction_bijection(&ctx.free_e(), x).unwrap();
                assert_eq!(pairs.len(), hx.underlying().size());
            }
        }
    }

    #[test]
    fn biact_rejects_non_equivariant_left_action() {
        let m = idempotent_monoid();
        let reg = RightAct::regular(m.clone());
        // a left "action" of the trivial monoid by a non-hom swap is still
        // required to commute with M
        let t = Arc::new(Monoid::trivial());
        assert!(Biact::new(reg.clone(), t.clone(), vec![0, 1]).is_ok());
        let z2 = Arc::new(Monoid::new(vec![vec![0, 1], vec![1, 0]], 0).unwrap());
        assert!(matches!(
            Biact::new(reg, z2, vec![0, 1, 1, 0]),
            Err(ActError::NotEquivariant { .. })
        ));
    }
}
