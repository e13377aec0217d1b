//! Finite monoids given by a dense multiplication table.
//!
//! Elements are `0..size`. A [`Monoid`] is only ever constructed through
//! [`Monoid::new`], which checks associativity and the identity laws, so
//! every value in circulation is a genuine monoid.

use std::collections::{BTreeSet, VecDeque};
use std::sync::Arc;

use itertools::Itertools;

use crate::error::{ActError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monoid {
    size: usize,
    table: Vec<usize>,
    identity: usize,
}

impl Monoid {
    /// Validates a multiplication table (`table[a][b] = a*b`) and identity.
    pub fn new(table: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        let size = table.len();
        if size == 0 {
            return Err(ActError::EmptyMonoid);
        }
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != size {
                return Err(ActError::NotSquare {
                    row,
                    len: entries.len(),
                    expected: size,
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
        if identity >= size {
            return Err(ActError::OutOfRange {
                row: 0,
                col: 0,
                value: identity,
                size,
            });
        }
        let flat = table.into_iter().flatten().collect();
        Self::from_flat(size, flat, identity)
    }

    pub(crate) fn from_flat(size: usize, table: Vec<usize>, identity: usize) -> Result<Self> {
        let monoid = Monoid {
            size,
            table,
            identity,
        };
        for a in 0..size {
            if monoid.mul(identity, a) != a || monoid.mul(a, identity) != a {
                return Err(ActError::IdentityViolation { identity, a });
            }
        }
        if let Some((a, b, c)) = monoid.first_non_associative() {
            return Err(ActError::AssociativityViolation { a, b, c });
        }
        Ok(monoid)
    }

    /// Builds a monoid whose laws hold by construction (composition tables).
    pub(crate) fn from_flat_unchecked(size: usize, table: Vec<usize>, identity: usize) -> Self {
        let monoid = Monoid {
            size,
            table,
            identity,
        };
        debug_assert!(monoid.first_non_associative().is_none());
        monoid
    }

    fn first_non_associative(&self) -> Option<(usize, usize, usize)> {
        for a in 0..self.size {
            for b in 0..self.size {
                let ab = self.mul(a, b);
                for c in 0..self.size {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// The one-element monoid.
    pub fn trivial() -> Self {
        Monoid {
            size: 1,
            table: vec![0],
            identity: 0,
        }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.size)
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.size).filter(|&e| self.mul(e, e) == e).collect()
    }

    /// Greedy generating set: scan elements in order and keep those not yet
    /// reachable from the identity and the generators chosen so far.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut reached = self.closure(&gens);
        for a in 0..self.size {
            if !reached[a] {
                gens.push(a);
                reached = self.closure(&gens);
            }
        }
        gens
    }

    fn closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut reached = vec![false; self.size];
        reached[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(a) = queue.pop_front() {
            for &g in gens {
                let b = self.mul(a, g);
                if !reached[b] {
                    reached[b] = true;
                    queue.push_back(b);
                }
            }
        }
        reached
    }

    /// The opposite monoid, `a *op b = b * a`.
    pub fn opposite(&self) -> Self {
        let n = self.size;
        let table = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| self.mul(b, a))
            .collect();
        Monoid {
            size: n,
            table,
            identity: self.identity,
        }
    }

    /// An isomorphism `self -> other` as an element map, if one exists.
    /// Brute force over bijections fixing the identity; intended for small
    /// monoids.
    pub fn isomorphism_to(&self, other: &Monoid) -> Option<Vec<usize>> {
        if self.size != other.size {
            return None;
        }
        let rest: Vec<usize> = (0..self.size).filter(|&a| a != self.identity).collect();
        let other_rest: Vec<usize> = (0..other.size).filter(|&a| a != other.identity).collect();
        for perm in other_rest.iter().copied().permutations(other_rest.len()) {
            let mut phi = vec![0; self.size];
            phi[self.identity] = other.identity;
            for (&a, b) in rest.iter().zip(perm) {
                phi[a] = b;
            }
            let hom = (0..self.size)
                .cartesian_product(0..self.size)
                .all(|(a, b)| phi[self.mul(a, b)] == other.mul(phi[a], phi[b]));
            if hom {
                return Some(phi);
            }
        }
        None
    }

    /// Relabels elements so that the identity is `0` and the flattened table
    /// is lexicographically least among all such relabelings.
    pub fn canonical_form(&self) -> Monoid {
        let n = self.size;
        let rest: Vec<usize> = (0..n).filter(|&a| a != self.identity).collect();
        let mut best: Option<Vec<usize>> = None;
        for perm in (1..n).permutations(n - 1) {
            // new label of old element
            let mut relabel = vec![0; n];
            for (&old, new) in rest.iter().zip(perm) {
                relabel[old] = new;
            }
            let mut inverse = vec![0; n];
            for (old, &new) in relabel.iter().enumerate() {
                inverse[new] = old;
            }
            let table: Vec<usize> = (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .map(|(a, b)| relabel[self.mul(inverse[a], inverse[b])])
                .collect();
            if best.as_ref().is_none_or(|b| table < *b) {
                best = Some(table);
            }
        }
        Monoid {
            size: n,
            table: best.unwrap_or_else(|| vec![0]),
            identity: 0,
        }
    }

    pub(crate) fn into_arc(self) -> Arc<Monoid> {
        Arc::new(self)
    }
}

/// Every monoid of order `1..=max_order`, one per isomorphism class, in
/// canonical form, ordered by order and then by table.
pub fn monoid_inventory(max_order: usize) -> Vec<Monoid> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        let mut seen = BTreeSet::new();
        // products among non-identity elements; identity is element 0
        let cells: Vec<(usize, usize)> = (1..n).cartesian_product(1..n).collect();
        let mut table = vec![0usize; n * n];
        for a in 0..n {
            table[a] = a;
            table[a * n] = a;
        }
        enumerate_cells(n, &cells, 0, &mut table, &mut seen);
        out.extend(seen.into_iter().map(|table| Monoid {
            size: n,
            table,
            identity: 0,
        }));
    }
    out
}

fn enumerate_cells(
    n: usize,
    cells: &[(usize, usize)],
    depth: usize,
    table: &mut Vec<usize>,
    seen: &mut BTreeSet<Vec<usize>>,
) {
    if depth == cells.len() {
        if let Ok(m) = Monoid::from_flat(n, table.clone(), 0) {
            seen.insert(m.canonical_form().table);
        }
        return;
    }
    let (a, b) = cells[depth];
    for v in 0..n {
        table[a * n + b] = v;
        if partial_associative(n, table, &cells[..=depth]) {
            enumerate_cells(n, cells, depth + 1, table, seen);
        }
    }
}

/// Checks associativity on the triples whose products are all assigned.
fn partial_associative(n: usize, table: &[usize], assigned: &[(usize, usize)]) -> bool {
    let known = |a: usize, b: usize| a == 0 || b == 0 || assigned.contains(&(a, b));
    let &(a, b) = assigned.last().expect("nonempty");
    // triples involving the newly set cell in either position
    for c in 0..n {
        for (x, y, z) in [(a, b, c), (c, a, b)] {
            if !known(x, y) || !known(y, z) {
                continue;
            }
            let xy = table[x * n + y];
            let yz = table[y * n + z];
            if known(xy, z) && known(x, yz) && table[xy * n + z] != table[x * n + yz] {
                return false;
            }
        }
    }
    true
}
