//! Equivariant maps between acts, and exhaustive search for them.

use std::fmt;

use crate::act::{same_monoid, RightAct};
use crate::error::{ActError, Result};

/// An equivariant map `source -> target` between right acts over one monoid.
#[derive(Clone, PartialEq, Eq)]
pub struct ActHom {
    source: RightAct,
    target: RightAct,
    map: Vec<usize>,
}

impl fmt::Debug for ActHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ActHom({} -> {}: {:?})",
            self.source.size(),
            self.target.size(),
            self.map
        )
    }
}

impl ActHom {
    pub fn new(source: RightAct, target: RightAct, map: Vec<usize>) -> Result<Self> {
        if !same_monoid(source.monoid(), target.monoid()) {
            return Err(ActError::MonoidMismatch);
        }
        if map.len() != source.size() {
            return Err(ActError::MapLength {
                len: map.len(),
                expected: source.size(),
            });
        }
        for (x, &y) in map.iter().enumerate() {
            if y >= target.size() {
                return Err(ActError::OutOfRange {
                    row: 0,
                    col: x,
                    value: y,
                    size: target.size(),
                });
            }
        }
        for x in 0..source.size() {
            for m in 0..source.monoid().size() {
                if map[source.act(x, m)] != target.act(map[x], m) {
                    return Err(ActError::NotEquivariant { x, m });
                }
            }
        }
        Ok(ActHom {
            source,
            target,
            map,
        })
    }

    pub(crate) fn new_unchecked(source: RightAct, target: RightAct, map: Vec<usize>) -> Self {
        debug_assert!(ActHom::new(source.clone(), target.clone(), map.clone()).is_ok());
        ActHom {
            source,
            target,
            map,
        }
    }

    pub fn identity(act: &RightAct) -> Self {
        ActHom {
            source: act.clone(),
            target: act.clone(),
            map: (0..act.size()).collect(),
        }
    }

    pub fn source(&self) -> &RightAct {
        &self.source
    }

    pub fn target(&self) -> &RightAct {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &ActHom) -> Result<ActHom> {
        if first.target != self.source {
            return Err(ActError::NotComposable);
        }
        Ok(ActHom {
            source: first.source.clone(),
            target: self.target.clone(),
            map: first.map.iter().map(|&y| self.map[y]).collect(),
        })
    }

    pub fn is_epi(&self) -> bool {
        let mut hit = vec![false; self.target.size()];
        for &y in &self.map {
            hit[y] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_mono(&self) -> bool {
        let mut hit = vec![false; self.target.size()];
        for &y in &self.map {
            if std::mem::replace(&mut hit[y], true) {
                return false;
            }
        }
        true
    }

    pub fn is_iso(&self) -> bool {
        self.source.size() == self.target.size() && self.is_mono()
    }

    /// The inverse of a bijective hom. Balancedness of act categories makes
    /// it equivariant; that is re-checked in debug builds.
    pub fn inverse(&self) -> Option<ActHom> {
        if !self.is_iso() {
            return None;
        }
        let mut inv = vec![0; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        Some(ActHom::new_unchecked(
            self.target.clone(),
            self.source.clone(),
            inv,
        ))
    }
}

/// Element invariants preserved by isomorphisms: orbit size and the number
/// of monoid elements fixing the element.
fn signature(act: &RightAct, x: usize) -> (usize, usize) {
    let fixed = (0..act.monoid().size())
        .filter(|&m| act.act(x, m) == x)
        .count();
    (act.orbit(x).len(), fixed)
}

struct Search<'a> {
    source: &'a RightAct,
    target: &'a RightAct,
    injective: bool,
    allowed: Option<Vec<Vec<usize>>>,
    map: Vec<usize>,
    used: Vec<bool>,
    trail: Vec<usize>,
}

const UNSET: usize = usize::MAX;

impl<'a> Search<'a> {
    fn new(source: &'a RightAct, target: &'a RightAct, injective: bool) -> Self {
        Search {
            source,
            target,
            injective,
            allowed: None,
            map: vec![UNSET; source.size()],
            used: vec![false; target.size()],
            trail: Vec::new(),
        }
    }

    /// Sets `x -> y` and everything it forces on `x*M`. Returns false (with
    /// partial assignments left on the trail) on conflict.
    fn assign(&mut self, x: usize, y: usize) -> bool {
        let monoid = self.source.monoid();
        for m in 0..monoid.size() {
            let xm = self.source.act(x, m);
            let ym = self.target.act(y, m);
            match self.map[xm] {
                UNSET => {
                    if self.injective && self.used[ym] {
                        return false;
                    }
                    self.map[xm] = ym;
                    self.used[ym] = true;
                    self.trail.push(xm);
                }
                v if v != ym => return false,
                _ => {}
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().expect("trail above mark");
            let y = std::mem::replace(&mut self.map[x], UNSET);
            if self.injective {
                self.used[y] = false;
            }
        }
    }

    fn run(&mut self, pos: usize, out: &mut Vec<Vec<usize>>, first_only: bool) -> bool {
        let Some(x) = (pos..self.map.len()).find(|&x| self.map[x] == UNSET) else {
            out.push(self.map.clone());
            return first_only;
        };
        for y in 0..self.target.size() {
            if let Some(allowed) = &self.allowed {
                if !allowed[x].contains(&y) {
                    continue;
                }
            }
            let mark = self.trail.len();
            if self.assign(x, y) && self.run(x + 1, out, first_only) {
                return true;
            }
            self.undo(mark);
        }
        false
    }
}

/// All equivariant maps as raw arrays, in lexicographic order.
pub(crate) fn hom_maps(source: &RightAct, target: &RightAct) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut search = Search::new(source, target, false);
    search.run(0, &mut out, false);
    out
}

/// Every equivariant map `source -> target`, lexicographic on the map array.
pub fn enumerate_homs(source: &RightAct, target: &RightAct) -> Result<Vec<ActHom>> {
    if !same_monoid(source.monoid(), target.monoid()) {
        return Err(ActError::MonoidMismatch);
    }
    Ok(hom_maps(source, target)
        .into_iter()
        .map(|map| ActHom {
            source: source.clone(),
            target: target.clone(),
            map,
        })
        .collect())
}

/// The lexicographically first isomorphism `x -> y`, if the acts are
/// isomorphic.
pub fn are_isomorphic(x: &RightAct, y: &RightAct) -> Option<ActHom> {
    if !same_monoid(x.monoid(), y.monoid()) || x.size() != y.size() {
        return None;
    }
    let sig_x: Vec<_> = (0..x.size()).map(|e| signature(x, e)).collect();
    let sig_y: Vec<_> = (0..y.size()).map(|e| signature(y, e)).collect();
    let (mut sorted_x, mut sorted_y) = (sig_x.clone(), sig_y.clone());
    sorted_x.sort_unstable();
    sorted_y.sort_unstable();
    if sorted_x != sorted_y {
        return None;
    }
    let allowed = sig_x
        .iter()
        .map(|s| (0..y.size()).filter(|&t| sig_y[t] == *s).collect())
        .collect();
    let mut search = Search::new(x, y, true);
    search.allowed = Some(allowed);
    let mut out = Vec::new();
    search.run(0, &mut out, true);
    out.pop().map(|map| ActHom {
        source: x.clone(),
        target: y.clone(),
        map,
    })
}
