//! Exhaustive consistency sweeps over small monoids and acts.
//!
//! Each criterion walks every monoid up to a given order (one per
//! isomorphism class) and every act up to a size bound, checks one family of
//! statements, and reports how many instances it looked at and how many
//! failed. Reports render to deterministic `CRITERION` lines.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::act::RightAct;
use crate::adjunction::Context;
use crate::cellular::{
    agree_over_target, bousfield_colimit_oracle, bousfield_limit_oracle, colocalization_candidate,
};
use crate::classify::{is_a_generated, is_delta_reflexive, is_eta_reflexive, Classifier};
use crate::error::{ActError, Result};
use crate::hom::{are_isomorphic, hom_maps, ActHom};
use crate::limits::{image_factorize, quotient};
use crate::monoid::{monoid_inventory, Monoid};
use crate::star::{check_wstarob, morita_candidates, star_report_with, verify_morita};
use crate::structure::is_indecomposable;
use crate::universe::Universe;

/// Monoids of order at most `max_order`, acts of size at most `bound`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Scope {
    pub max_order: usize,
    pub bound: usize,
}

impl Scope {
    pub fn new(max_order: usize, bound: usize) -> Self {
        Scope { max_order, bound }
    }

    fn monoids(&self) -> Vec<Arc<Monoid>> {
        monoid_inventory(self.max_order)
            .into_iter()
            .map(Arc::new)
            .collect()
    }

    fn acts(&self, m: &Arc<Monoid>) -> Vec<RightAct> {
        Universe::cached(m.clone(), self.bound)
            .representatives()
            .to_vec()
    }

    fn contexts(&self) -> Vec<Context> {
        self.monoids()
            .iter()
            .flat_map(|m| self.acts(m))
            .map(|a| Context::for_act(&a))
            .collect()
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "order<={} size<={}", self.max_order, self.bound)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionReport {
    pub number: usize,
    pub name: &'static str,
    pub scope: Scope,
    pub checked: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
    /// A theorem violation was raised while checking.
    pub violation: bool,
    /// Extra machine lines (certificates) produced along the way.
    pub details: Vec<String>,
}

impl CriterionReport {
    fn new(number: usize, name: &'static str, scope: Scope) -> Self {
        CriterionReport {
            number,
            name,
            scope,
            checked: 0,
            failures: 0,
            first_failure: None,
            violation: false,
            details: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(what());
        }
    }

    fn fail(&mut self, what: String) {
        self.failures += 1;
        self.first_failure.get_or_insert(what);
    }

    /// Records `Ok(ok)` as a check and any error as a failure.
    fn check_result(&mut self, result: Result<bool>, what: impl FnOnce() -> String) {
        match result {
            Ok(ok) => self.check(ok, what),
            Err(e) => self.error(e, what),
        }
    }

    fn error(&mut self, e: ActError, what: impl FnOnce() -> String) {
        self.checked += 1;
        self.violation |= matches!(e, ActError::TheoremViolation { .. });
        self.fail(format!("{}: {e}", what()));
    }

    /// `CRITERION n name PASS|FAIL checked=.. failures=.. order<=.. size<=..`
    pub fn machine_line(&self) -> String {
        format!(
            "CRITERION {} {} {} checked={} failures={} order<={} size<={}",
            self.number,
            self.name,
            if self.passed() { "PASS" } else { "FAIL" },
            self.checked,
            self.failures,
            self.scope.max_order,
            self.scope.bound
        )
    }
}

/// Triangle identities and the hom bijection for every `A`, `X` and `Y`.
pub fn adjunction_laws(scope: Scope) -> CriterionReport {
    let mut r = CriterionReport::new(1, "adjunction-laws", scope);
    for ctx in scope.contexts() {
        let xs = scope.acts(ctx.base_monoid());
        let ys = Universe::cached(ctx.endomorphism_monoid().clone(), scope.bound);
        for x in &xs {
            for y in ys.representatives() {
                let id = || format!("A={:?} X={:?} Y={:?}", ctx.act().rows(), x.rows(), y.rows());
                r.check_result(ctx.check_triangles(x, y), id);
                let bijection = ctx.adjunction_bijection(y, x).map(|_| true);
                r.check_result(bijection, id);
            }
        }
    }
    r
}

/// For the regular act, `H(X)` transported back along `M ≅ E` is `X`.
pub fn regular_act_yoneda(scope: Scope) -> CriterionReport {
    let mut r = CriterionReport::new(2, "regular-act-yoneda", scope);
    for m in scope.monoids() {
        let ctx = Context::for_act(&RightAct::regular(m.clone()));
        let Some(phi) = ctx.regular_identification() else {
            r.fail(format!("no identification of M={:?} with End(M)", m.rows()));
            continue;
        };
        for x in scope.acts(&m) {
            let id = || format!("M={:?} X={:?}", m.rows(), x.rows());
            match ctx.hom_act(&x) {
                Ok(hx) => {
                    let back = hx.underlying().transport(m.clone(), &phi);
                    r.check(are_isomorphic(&back, &x).is_some(), id);
                }
                Err(e) => r.error(e, id),
            }
        }
    }
    r
}

/// `A` has one component iff `E ⊔ E` is η-reflexive.
pub fn indecomposable_iff_eta_reflexive(scope: Scope) -> CriterionReport {
    let mut r = CriterionReport::new(3, "indecomposable-iff-eta-reflexive", scope);
    for ctx in scope.contexts() {
        if ctx.act().is_empty() {
            continue;
        }
        let id = || format!("A={:?}", ctx.act().rows());
        let agree = is_eta_reflexive(&ctx, &ctx.free_e_power(2))
            .map(|eta| eta == is_indecomposable(ctx.act()));
        r.check_result(agree, id);
    }
    r
}

/// `H` inverts the inclusion of the image of the counit.
pub fn counit_image_equivalence(scope: Scope) -> CriterionReport {
    let mut r = CriterionReport::new(4, "counit-image-equivalence", scope);
    for ctx in scope.contexts() {
        for x in scope.acts(ctx.base_monoid()) {
            let id = || format!("A={:?} X={:?}", ctx.act().rows(), x.rows());
            let inverted = ctx
                .counit(&x)
                .and_then(|delta| ctx.hom_on_morphism(&image_factorize(&delta).mono))
                .map(|h| h.is_iso());
            r.check_result(inverted, id);
        }
    }
    r
}

/// Number of random quotients drawn by [`generated_closure`].
pub const RANDOM_QUOTIENTS: usize = 50;

/// δ-reflexive acts are tensor outputs; tensor outputs are `A`-generated and
/// carry no colocality counterexample; `A`-generated acts are closed under
/// random quotients.
pub fn generated_closure(scope: Scope, seed: u64) -> CriterionReport {
    let mut r = CriterionReport::new(5, "generated-closure", scope);
    let mut pool: Vec<(usize, RightAct)> = Vec::new();
    let contexts = scope.contexts();
    for (ci, ctx) in contexts.iter().enumerate() {
        let c = Classifier::new(ctx.clone(), scope.bound);
        let a = || format!("A={:?}", ctx.act().rows());
        for t in c.tensor_acts() {
            let t = t.underlying();
            let id = || format!("{} T(Y)={:?}", a(), t.rows());
            r.check_result(is_a_generated(ctx, t), id);
            r.check(c.colocal_counterexample(t).is_none(), || {
                format!("{} colocal", id())
            });
        }
        for x in c.m_universe().representatives() {
            let id = || format!("{} X={:?}", a(), x.rows());
            match is_delta_reflexive(ctx, x) {
                Ok(true) => {
                    let seen = c
                        .tensor_acts()
                        .iter()
                        .any(|t| are_isomorphic(t.underlying(), x).is_some());
                    let direct = || {
                        ctx.hom_act(x)
                            .and_then(|hx| ctx.tensor_act(hx.underlying()))
                            .map(|t| are_isomorphic(t.underlying(), x).is_some())
                    };
                    if seen {
                        r.check(true, id);
                    } else {
                        r.check_result(direct(), id);
                    }
                }
                Ok(false) => {}
                Err(e) => r.error(e, id),
            }
            if x.size() >= 2 && matches!(is_a_generated(ctx, x), Ok(true)) {
                pool.push((ci, x.clone()));
            }
        }
    }
    if pool.is_empty() {
        return r;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_QUOTIENTS {
        let (ci, x) = &pool[rng.gen_range(0..pool.len())];
        let p = rng.gen_range(0..x.size());
        let q = (p + rng.gen_range(1..x.size())) % x.size();
        let (image, _) = quotient(x, &[(p, q)]);
        let id = || {
            format!(
                "A={:?} X={:?} glue {p}~{q}",
                contexts[*ci].act().rows(),
                x.rows()
            )
        };
        r.check_result(is_a_generated(&contexts[*ci], &image), id);
    }
    r
}

/// Per ordered pair of representatives.
type Grid<T> = Vec<Vec<Vec<T>>>;

/// Two-out-of-three and retract closure for `H`-equivalences between
/// representatives.
pub fn equivalence_two_out_of_three(scope: Scope) -> CriterionReport {
    let mut r = CriterionReport::new(6, "equivalence-two-out-of-three", scope);
    for ctx in scope.contexts() {
        let classifier = Classifier::new(ctx.clone(), scope.bound);
        let reps = classifier.m_universe().representatives().to_vec();
        let n = reps.len();
        let a = || format!("A={:?}", ctx.act().rows());
        // homs[s][t] = (map, H inverts it)
        let mut homs: Grid<(Vec<usize>, bool)> = vec![vec![Vec::new(); n]; n];
        for s in 0..n {
            for t in 0..n {
                for map in hom_maps(&reps[s], &reps[t]) {
                    let f = ActHom::new_unchecked(reps[s].clone(), reps[t].clone(), map.clone());
                    match ctx.hom_on_morphism(&f) {
                        Ok(h) => {
                            let eq = h.is_iso();
                            r.check(classifier.hom_catalog().contains(&f) == eq, || {
                                format!("{} catalog disagrees at {map:?}", a())
                            });
                            homs[s][t].push((map, eq));
                        }
                        Err(e) => r.error(e, || format!("{} {map:?}", a())),
                    }
                }
            }
        }
        let is_eq = |s: usize, t: usize, map: &[usize]| {
            homs[s][t]
                .iter()
                .find(|(m, _)| m.as_slice() == map)
                .map(|(_, e)| *e)
        };
        for x in 0..n {
            for (y, from_x) in homs[x].iter().enumerate() {
                for (z, from_y) in homs[y].iter().enumerate() {
                    for (f, ef) in from_x {
                        for (g, eg) in from_y {
                            let h: Vec<usize> = f.iter().map(|&v| g[v]).collect();
                            let eh = is_eq(x, z, &h).unwrap_or(false);
                            let count = [*ef, *eg, eh].iter().filter(|&&b| b).count();
                            r.check(count != 2, || format!("{} f={f:?} g={g:?}", a()));
                        }
                    }
                }
            }
        }
        let compose =
            |f: &[usize], g: &[usize]| -> Vec<usize> { f.iter().map(|&v| g[v]).collect() };
        // sections[s][t] = (i: s -> t, r: t -> s) with r∘i = id
        let mut sections: Grid<(Vec<usize>, Vec<usize>)> = vec![vec![Vec::new(); n]; n];
        for s in 0..n {
            for t in 0..n {
                for (i, _) in &homs[s][t] {
                    for (back, _) in &homs[t][s] {
                        if compose(i, back).iter().enumerate().all(|(k, &v)| k == v) {
                            sections[s][t].push((i.clone(), back.clone()));
                        }
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for (f, ef) in &homs[x][y] {
                    for x2 in 0..n {
                        for y2 in 0..n {
                            for (g, eg) in &homs[x2][y2] {
                                if !eg {
                                    continue;
                                }
                                for (i, ri) in &sections[x][x2] {
                                    for (j, sj) in &sections[y][y2] {
                                        let square = compose(i, g) == compose(f, j)
                                            && compose(ri, f) == compose(g, sj);
                                        if square {
                                            r.check(*ef, || {
                                                format!("{} retract f={f:?} of g={g:?}", a())
                                            });
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    r
}

/// The monoid `{1, e}` with `e` idempotent.
fn one_idempotent() -> Monoid {
    Monoid::new(vec![vec![0, 1], vec![1, 1]], 0).expect("valid table")
}

/// Every candidate is certified; the regular act is always a candidate; over
/// `{1, e}` it is the only one.
pub fn morita(scope: Scope) -> CriterionReport {
    let mut r = CriterionReport::new(7, "morita", scope);
    let special = one_idempotent();
    for m in scope.monoids() {
        let cands = morita_candidates(&m);
        let regular = RightAct::regular(m.clone());
        let id = || format!("M={:?}", m.rows());
        r.check(
            cands
                .iter()
                .any(|c| are_isomorphic(c.act(), &regular).is_some()),
            id,
        );
        if m.isomorphism_to(&special).is_some() {
            r.check(cands.len() == 1, || {
                format!("{} has {} candidates", id(), cands.len())
            });
        }
        for c in &cands {
            match verify_morita(&m, c.act(), scope.bound) {
                Ok(cert) => {
                    r.checked += 1;
                    r.details.push(cert.machine_line());
                }
                Err(e) => r.error(e, || format!("{} A={:?}", id(), c.act().rows())),
            }
        }
    }
    r
}

/// No context is both certified weak star and witnessed as not weak star.
pub fn weak_star_consistency(scope: Scope) -> CriterionReport {
    let mut r = CriterionReport::new(8, "weak-star-consistency", scope);
    for ctx in scope.contexts() {
        if ctx.act().is_empty() {
            continue;
        }
        let id = || format!("A={:?}", ctx.act().rows());
        let classifier = Classifier::new(ctx.clone(), scope.bound);
        let consistent = star_report_with(&classifier).and_then(|report| {
            let direct = check_wstarob(&ctx, scope.bound)?;
            Ok(!(report.weak_star.is_yes() && (direct.is_no() || report.wstarob.is_no())))
        });
        r.check_result(consistent, id);
    }
    r
}

/// Whenever the counit is an `H`-equivalence, both brute-force oracles
/// return the same object over `X`.
pub fn oracle_coherence(scope: Scope) -> CriterionReport {
    let mut r = CriterionReport::new(9, "oracle-coherence", scope);
    for ctx in scope.contexts() {
        let classifier = Classifier::new(ctx.clone(), scope.bound);
        for x in classifier.m_universe().representatives().to_vec() {
            let id = || format!("A={:?} X={:?}", ctx.act().rows(), x.rows());
            let agree = colocalization_candidate(&classifier, &x).and_then(|cand| {
                if !cand.is_equivalence {
                    return Ok(None);
                }
                let colimit = bousfield_colimit_oracle(&classifier, &x)?;
                let limit = bousfield_limit_oracle(&classifier, &x)?;
                Ok(Some((
                    agree_over_target(&colimit, &cand).is_some(),
                    agree_over_target(&limit, &cand).is_some(),
                )))
            });
            match agree {
                Ok(None) => {}
                Ok(Some((colimit, limit))) => {
                    r.check(colimit, || format!("{} colimit", id()));
                    r.check(limit, || format!("{} limit", id()));
                }
                Err(e) => r.error(e, id),
            }
        }
    }
    r
}

/// Criteria 1 to 9 over one scope; criterion 3 looks at acts one larger.
pub fn run_criteria(scope: Scope, seed: u64) -> Vec<CriterionReport> {
    let wide = Scope::new(scope.max_order, scope.bound + 1);
    vec![
        adjunction_laws(scope),
        regular_act_yoneda(scope),
        indecomposable_iff_eta_reflexive(wide),
        counit_image_equivalence(scope),
        generated_closure(scope, seed),
        equivalence_two_out_of_three(scope),
        morita(scope),
        weak_star_consistency(scope),
        oracle_coherence(scope),
    ]
}

/// Machine rendering of a run: certificate lines, then one line per
/// criterion.
pub fn render(reports: &[CriterionReport]) -> String {
    let mut out = String::new();
    for r in reports {
        for d in &r.details {
            out.push_str(d);
            out.push('\n');
        }
        out.push_str(&r.machine_line());
        out.push('\n');
    }
    out
}

/// All criteria at `bound` (monoid order and act size), with criterion 10
/// rerunning 1 to 9 and comparing the rendered output byte for byte.
pub fn selftest(bound: usize, seed: u64) -> Vec<CriterionReport> {
    let scope = Scope::new(bound, bound);
    let mut reports = run_criteria(scope, seed);
    let first = render(&reports);
    let second = render(&run_criteria(scope, seed));
    let mut det = CriterionReport::new(10, "determinism", scope);
    det.check(first == second, || "reruns differ".into());
    reports.push(det);
    reports
}
