//! Smallest act congruences via union-find.

use crate::act::RightAct;

#[derive(Clone, Debug)]
pub(crate) struct DisjointSet {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSet {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    pub(crate) fn find(&mut self, mut node: usize) -> usize {
        let mut root = node;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[node] != node {
            let parent = self.parent[node];
            self.parent[node] = root;
            node = parent;
        }
        root
    }

    /// Returns true if the two classes were distinct.
    pub(crate) fn union(&mut self, left: usize, right: usize) -> bool {
        let mut left = self.find(left);
        let mut right = self.find(right);
        if left == right {
            return false;
        }
        if self.rank[left] < self.rank[right] {
            std::mem::swap(&mut left, &mut right);
        }
        self.parent[right] = left;
        if self.rank[left] == self.rank[right] {
            self.rank[left] = self.rank[left].saturating_add(1);
        }
        true
    }

    /// Class labels `0..k`, numbered by least member.
    pub(crate) fn labels(&mut self) -> (Vec<usize>, usize) {
        let n = self.parent.len();
        let mut label_of_root = vec![usize::MAX; n];
        let mut labels = Vec::with_capacity(n);
        let mut next = 0;
        for x in 0..n {
            let root = self.find(x);
            if label_of_root[root] == usize::MAX {
                label_of_root[root] = next;
                next += 1;
            }
            labels.push(label_of_root[root]);
        }
        (labels, next)
    }
}

/// Closes an equivalence under the action: `x ~ y` implies `x*m ~ y*m`.
pub(crate) fn close_under_action(act: &RightAct, classes: &mut DisjointSet) {
    let monoid_size = act.monoid().size();
    loop {
        let mut changed = false;
        for x in 0..act.size() {
            let root = classes.find(x);
            if root == x {
                continue;
            }
            for m in 0..monoid_size {
                changed |= classes.union(act.act(x, m), act.act(root, m));
            }
        }
        if !changed {
            break;
        }
    }
}

/// Labels of the smallest congruence on `act` containing `pairs`.
pub(crate) fn congruence_labels(act: &RightAct, pairs: &[(usize, usize)]) -> (Vec<usize>, usize) {
    let mut classes = DisjointSet::new(act.size());
    for &(x, y) in pairs {
        classes.union(x, y);
    }
    close_under_action(act, &mut classes);
    classes.labels()
}
