//! Connected components, cyclicity, projectivity and generators.

use std::sync::Arc;

use crate::act::RightAct;
use crate::congruence::DisjointSet;
use crate::hom::{are_isomorphic, enumerate_homs, ActHom};

/// Element sets of the connected components, each sorted, ordered by least
/// element. The empty act has no components.
pub fn components(act: &RightAct) -> Vec<Vec<usize>> {
    let mut classes = DisjointSet::new(act.size());
    for x in 0..act.size() {
        for m in 0..act.monoid().size() {
            classes.union(x, act.act(x, m));
        }
    }
    let (labels, count) = classes.labels();
    let mut out = vec![Vec::new(); count];
    for (x, &l) in labels.iter().enumerate() {
        out[l].push(x);
    }
    out
}

/// Components as subacts.
pub fn connected_components(act: &RightAct) -> Vec<RightAct> {
    components(act)
        .iter()
        .map(|c| act.restrict(c).expect("components are subacts"))
        .collect()
}

/// How an act splits into components.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Decomposition {
    /// The empty act: no components.
    Degenerate,
    Indecomposable,
    Decomposable {
        components: usize,
    },
}

pub fn decomposition(act: &RightAct) -> Decomposition {
    match components(act).len() {
        0 => Decomposition::Degenerate,
        1 => Decomposition::Indecomposable,
        n => Decomposition::Decomposable { components: n },
    }
}

pub fn is_indecomposable(act: &RightAct) -> bool {
    decomposition(act) == Decomposition::Indecomposable
}

/// The least `a` with `a*M` the whole carrier.
pub fn cyclic_generator(act: &RightAct) -> Option<usize> {
    (0..act.size()).find(|&a| act.orbit(a).len() == act.size())
}

pub fn is_cyclic(act: &RightAct) -> bool {
    cyclic_generator(act).is_some()
}

/// For each component, an idempotent `e` with the component isomorphic to
/// `eM`; `None` if some component has no such `e`.
pub fn projective_decomposition(act: &RightAct) -> Option<Vec<usize>> {
    let monoid = act.monoid().clone();
    let ideals: Vec<(usize, RightAct)> = monoid
        .idempotents()
        .into_iter()
        .map(|e| (e, RightAct::principal_ideal(Arc::clone(&monoid), e)))
        .collect();
    connected_components(act)
        .iter()
        .map(|c| {
            ideals
                .iter()
                .find(|(_, ideal)| are_isomorphic(c, ideal).is_some())
                .map(|(e, _)| *e)
        })
        .collect()
}

pub fn is_projective(act: &RightAct) -> bool {
    projective_decomposition(act).is_some()
}

/// A retraction pair `alpha: M -> A`, `beta: A -> M` with `beta∘alpha = id`.
pub fn generator_retraction(act: &RightAct) -> Option<(ActHom, ActHom)> {
    let regular = RightAct::regular(act.monoid().clone());
    let id = ActHom::identity(&regular);
    let into = enumerate_homs(&regular, act).expect("same monoid");
    let back = enumerate_homs(act, &regular).expect("same monoid");
    for beta in &back {
        for alpha in &into {
            if beta.after(alpha).expect("composable") == id {
                return Some((alpha.clone(), beta.clone()));
            }
        }
    }
    None
}

pub fn is_generator(act: &RightAct) -> bool {
    generator_retraction(act).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::limits::coproduct;

    #[test]
    fn regular_act_is_cyclic_projective_generator() {
        for m in small_monoids() {
            let reg = RightAct::regular(m.clone());
            assert_eq!(decomposition(&reg), Decomposition::Indecomposable);
            assert!(is_cyclic(&reg) && is_projective(&reg) && is_generator(&reg));
        }
    }

    #[test]
    fn idempotent_ideal_is_cyclic_projective_not_generator() {
        let m = idempotent_monoid();
        let ideal = RightAct::principal_ideal(m, 1);
        assert!(is_cyclic(&ideal));
        assert!(is_projective(&ideal));
        assert!(!is_generator(&ideal));
    }

    #[test]
    fn double_regular_is_projective_generator_not_cyclic() {
        let m = idempotent_monoid();
        let reg = RightAct::regular(m.clone());
        let (sum, _) = coproduct(m, &[reg.clone(), reg]).unwrap();
        assert!(is_projective(&sum) && is_generator(&sum));
        assert!(!is_cyclic(&sum));
        assert_eq!(
            decomposition(&sum),
            Decomposition::Decomposable { components: 2 }
        );
    }

    #[test]
    fn empty_act_is_degenerate() {
        let act = RightAct::empty(idempotent_monoid());
        assert_eq!(decomposition(&act), Decomposition::Degenerate);
        assert!(!is_indecomposable(&act));
        assert!(!is_cyclic(&act));
        assert!(is_projective(&act));
    }

    #[test]
    fn collapsing_act_is_connected() {
        // x*e = y*e = y over M = {1, e}
        let act = RightAct::new(idempotent_monoid(), vec![vec![0, 1], vec![1, 1]]).unwrap();
        assert_eq!(components(&act), vec![vec![0, 1]]);
    }

    #[test]
    fn projectivity_of_points_depends_on_idempotents() {
        // a point is eM only when some idempotent e has eM = {e}
        let m = idempotent_monoid();
        let pts = RightAct::trivial(m, 2);
        assert!(is_projective(&pts));
        let z2 = std::sync::Arc::new(crate::Monoid::new(vec![vec![0, 1], vec![1, 0]], 0).unwrap());
        assert!(!is_projective(&RightAct::trivial(z2, 1)));
    }
}
