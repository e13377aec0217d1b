//! Right and left acts over a finite monoid.

use std::fmt;
use std::sync::Arc;

use crate::error::{ActError, Result};
use crate::monoid::Monoid;

/// A finite right act `X x M -> X`. Cloning is cheap: the monoid and the
/// action table are shared.
#[derive(Clone)]
pub struct RightAct {
    monoid: Arc<Monoid>,
    size: usize,
    action: Arc<[usize]>,
}

impl fmt::Debug for RightAct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RightAct")
            .field("size", &self.size)
            .field("action", &self.rows())
            .finish()
    }
}

impl PartialEq for RightAct {
    fn eq(&self, other: &Self) -> bool {
        same_monoid(&self.monoid, &other.monoid)
            && self.size == other.size
            && self.action == other.action
    }
}

impl Eq for RightAct {}

pub(crate) fn same_monoid(a: &Arc<Monoid>, b: &Arc<Monoid>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl RightAct {
    /// Validates an action table `action[x][m] = x*m`.
    pub fn new(monoid: Arc<Monoid>, action: Vec<Vec<usize>>) -> Result<Self> {
        let n = monoid.size();
        let size = action.len();
        for (row, entries) in action.iter().enumerate() {
            if entries.len() != n {
                return Err(ActError::ActShape {
                    rows: size,
                    row,
                    len: entries.len(),
                    expected: n,
                });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= size {
                    return Err(ActError::OutOfRange {
                        row,
                        col,
                        value,
                        size,
                    });
                }
            }
        }
        let flat: Vec<usize> = action.into_iter().flatten().collect();
        let act = RightAct::from_flat_unchecked(monoid, size, flat);
        act.check_laws()?;
        Ok(act)
    }

    pub(crate) fn from_flat_unchecked(
        monoid: Arc<Monoid>,
        size: usize,
        action: Vec<usize>,
    ) -> Self {
        debug_assert_eq!(action.len(), size * monoid.size());
        RightAct {
            monoid,
            size,
            action: action.into(),
        }
    }

    pub(crate) fn check_laws(&self) -> Result<()> {
        let m = &self.monoid;
        for x in 0..self.size {
            if self.act(x, m.identity()) != x {
                return Err(ActError::ActUnitViolation { x });
            }
            for a in 0..m.size() {
                let xa = self.act(x, a);
                for b in 0..m.size() {
                    if self.act(xa, b) != self.act(x, m.mul(a, b)) {
                        return Err(ActError::ActAssociativityViolation { x, m: a, n: b });
                    }
                }
            }
        }
        Ok(())
    }

    /// The empty act.
    pub fn empty(monoid: Arc<Monoid>) -> Self {
        RightAct::from_flat_unchecked(monoid, 0, Vec::new())
    }

    /// The terminal one-element act.
    pub fn point(monoid: Arc<Monoid>) -> Self {
        let n = monoid.size();
        RightAct::from_flat_unchecked(monoid, 1, vec![0; n])
    }

    /// `M` acting on itself by right multiplication.
    pub fn regular(monoid: Arc<Monoid>) -> Self {
        let n = monoid.size();
        let mut action = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                action.push(monoid.mul(a, b));
            }
        }
        RightAct::from_flat_unchecked(monoid, n, action)
    }

    /// The principal right ideal `eM` as a subact of the regular act,
    /// elements listed in increasing order of their label in `M`.
    pub fn principal_ideal(monoid: Arc<Monoid>, e: usize) -> Self {
        let regular = RightAct::regular(monoid);
        let orbit = regular.orbit(e);
        regular
            .restrict(&orbit)
            .expect("an orbit is closed under the action")
    }

    /// A set with the trivial action `x*m = x`.
    pub fn trivial(monoid: Arc<Monoid>, size: usize) -> Self {
        let n = monoid.size();
        let action = (0..size).flat_map(|x| std::iter::repeat_n(x, n)).collect();
        RightAct::from_flat_unchecked(monoid, size, action)
    }

    #[inline]
    pub fn monoid(&self) -> &Arc<Monoid> {
        &self.monoid
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    #[inline]
    pub fn act(&self, x: usize, m: usize) -> usize {
        self.action[x * self.monoid.size() + m]
    }

    pub(crate) fn flat(&self) -> &[usize] {
        &self.action
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        let n = self.monoid.size();
        if n == 0 {
            return Vec::new();
        }
        self.action.chunks(n).map(<[usize]>::to_vec).collect()
    }

    /// `x*M` in increasing order.
    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let mut seen = vec![false; self.size];
        for m in 0..self.monoid.size() {
            seen[self.act(x, m)] = true;
        }
        (0..self.size).filter(|&y| seen[y]).collect()
    }

    pub fn is_closed(&self, elements: &[usize]) -> Option<(usize, usize)> {
        let mut member = vec![false; self.size];
        for &x in elements {
            member[x] = true;
        }
        for &x in elements {
            for m in 0..self.monoid.size() {
                if !member[self.act(x, m)] {
                    return Some((x, m));
                }
            }
        }
        None
    }

    /// The subact on `elements` (any order; relabelled in the given order).
    pub fn restrict(&self, elements: &[usize]) -> Result<Self> {
        if let Some((x, m)) = self.is_closed(elements) {
            return Err(ActError::NotASubact { x, m });
        }
        let mut index = vec![usize::MAX; self.size];
        for (i, &x) in elements.iter().enumerate() {
            index[x] = i;
        }
        let n = self.monoid.size();
        let mut action = Vec::with_capacity(elements.len() * n);
        for &x in elements {
            for m in 0..n {
                action.push(index[self.act(x, m)]);
            }
        }
        Ok(RightAct::from_flat_unchecked(
            self.monoid.clone(),
            elements.len(),
            action,
        ))
    }

    /// The quotient by a partition given as a class label per element.
    /// Labels must be `0..k` and compatible with the action.
    pub(crate) fn quotient_by_labels(&self, labels: &[usize], classes: usize) -> Self {
        let n = self.monoid.size();
        let mut action = vec![usize::MAX; classes * n];
        for x in 0..self.size {
            for m in 0..n {
                let cell = labels[x] * n + m;
                let value = labels[self.act(x, m)];
                debug_assert!(action[cell] == usize::MAX || action[cell] == value);
                action[cell] = value;
            }
        }
        RightAct::from_flat_unchecked(self.monoid.clone(), classes, action)
    }

    /// Transports an act along a monoid isomorphism `phi: target -> self.monoid`.
    pub fn transport(&self, target: Arc<Monoid>, phi: &[usize]) -> Self {
        let n = target.size();
        let mut action = Vec::with_capacity(self.size * n);
        for x in 0..self.size {
            action.extend(phi[..n].iter().map(|&m| self.act(x, m)));
        }
        RightAct::from_flat_unchecked(target, self.size, action)
    }

    /// Relabels elements: element `x` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let n = self.monoid.size();
        let mut action = vec![0; self.size * n];
        for x in 0..self.size {
            for m in 0..n {
                action[perm[x] * n + m] = perm[self.act(x, m)];
            }
        }
        RightAct::from_flat_unchecked(self.monoid.clone(), self.size, action)
    }
}

/// A finite left act `M x X -> X`, stored as a right act over the opposite
/// monoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftAct {
    monoid: Arc<Monoid>,
    as_right: RightAct,
}

impl LeftAct {
    /// Validates a left action table `action[m][x] = m*x`.
    pub fn new(monoid: Arc<Monoid>, action: Vec<Vec<usize>>) -> Result<Self> {
        let n = monoid.size();
        if action.len() != n {
            return Err(ActError::ActShape {
                rows: action.len(),
                row: action.len(),
                len: 0,
                expected: n,
            });
        }
        let size = action.first().map_or(0, Vec::len);
        for (row, entries) in action.iter().enumerate() {
            if entries.len() != size {
                return Err(ActError::ActShape {
                    rows: n,
                    row,
                    len: entries.len(),
                    expected: size,
                });
            }
        }
        let transposed = (0..size)
            .map(|x| (0..n).map(|m| action[m][x]).collect())
            .collect();
        let op = monoid.opposite().into_arc();
        let as_right = RightAct::new(op, transposed)?;
        Ok(LeftAct { monoid, as_right })
    }

    #[inline]
    pub fn monoid(&self) -> &Arc<Monoid> {
        &self.monoid
    }

    pub fn size(&self) -> usize {
        self.as_right.size()
    }

    #[inline]
    pub fn act(&self, m: usize, x: usize) -> usize {
        self.as_right.act(x, m)
    }

    /// The same data viewed as a right act over the opposite monoid.
    pub fn as_right_act(&self) -> &RightAct {
        &self.as_right
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::idempotent_monoid;

    #[test]
    fn regular_act_is_valid() {
        let m = idempotent_monoid();
        let reg = RightAct::regular(m.clone());
        assert!(reg.check_laws().is_ok());
        assert_eq!(reg.size(), 2);
    }

    #[test]
    fn empty_act_is_legal() {
        let act = RightAct::new(idempotent_monoid(), vec![]).unwrap();
        assert!(act.is_empty());
    }

    #[test]
    fn unit_violation_reported() {
        let err = RightAct::new(idempotent_monoid(), vec![vec![1, 1], vec![1, 1]]).unwrap_err();
        assert_eq!(err, ActError::ActUnitViolation { x: 0 });
    }

    #[test]
    fn associativity_violation_reported() {
        // Z2 = {0,1}, 1*1 = 0; x*1 must be an involution but 0*1 = 1, 1*1 = 1
        let z2 = Arc::new(Monoid::new(vec![vec![0, 1], vec![1, 0]], 0).unwrap());
        let err = RightAct::new(z2, vec![vec![0, 1], vec![1, 1]]).unwrap_err();
        assert!(matches!(err, ActError::ActAssociativityViolation { .. }));
    }

    #[test]
    fn principal_ideal_of_idempotent() {
        let m = idempotent_monoid();
        let ideal = RightAct::principal_ideal(m.clone(), 1);
        assert_eq!(ideal.size(), 1);
        assert_eq!(ideal.rows(), vec![vec![0, 0]]);
    }

    #[test]
    fn restrict_rejects_non_closed_sets() {
        let reg = RightAct::regular(idempotent_monoid());
        assert!(matches!(
            reg.restrict(&[0]),
            Err(ActError::NotASubact { x: 0, m: 1 })
        ));
    }

    #[test]
    fn left_act_roundtrip_through_opposite() {
        // left regular act of M={1,e}
        let m = idempotent_monoid();
        let left = LeftAct::new(m.clone(), vec![vec![0, 1], vec![1, 1]]).unwrap();
        for a in 0..2 {
            for x in 0..2 {
                assert_eq!(left.act(a, x), m.mul(a, x));
            }
        }
    }
}
