//! Enumeration of all acts up to isomorphism below a size bound.
//!
//! Action tables are built by backtracking over the images of a generating
//! set of the monoid. Every assignment is propagated through the partial
//! table (`(x*m)*n = x*(mn)`), so dead branches are cut as soon as two
//! derived entries disagree. Survivors are reduced to a canonical form (the
//! lexicographically least relabelled table) and deduplicated.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use itertools::Itertools;

use crate::act::RightAct;
use crate::monoid::Monoid;

/// One representative per isomorphism class of acts with at most `bound`
/// elements, ordered by size and then by canonical table.
#[derive(Clone, Debug)]
pub struct Universe {
    monoid: Arc<Monoid>,
    bound: usize,
    representatives: Vec<RightAct>,
}

impl Universe {
    pub fn enumerate(monoid: Arc<Monoid>, bound: usize) -> Universe {
        let mut representatives = Vec::new();
        for size in 0..=bound {
            let tables = canonical_tables(&monoid, size);
            representatives.extend(
                tables
                    .into_iter()
                    .map(|t| RightAct::from_flat_unchecked(monoid.clone(), size, t)),
            );
        }
        Universe {
            monoid,
            bound,
            representatives,
        }
    }

    /// Process-wide memoized enumeration keyed by monoid table and bound.
    /// Representatives are rebased onto the caller's `Arc`.
    pub fn cached(monoid: Arc<Monoid>, bound: usize) -> Universe {
        let key = ((*monoid).clone(), bound);
        if let Some(u) = memo().lock().expect("cache lock").get(&key) {
            return u.rebase(monoid);
        }
        let u = Universe::enumerate(monoid.clone(), bound);
        memo().lock().expect("cache lock").insert(key, u.clone());
        u
    }

    /// Seeds the memo behind [`Universe::cached`] with a universe obtained
    /// elsewhere (for instance read back from disk). The caller vouches that
    /// it is exactly what [`Universe::enumerate`] would return.
    pub fn install(universe: Universe) {
        let key = ((*universe.monoid).clone(), universe.bound);
        memo().lock().expect("cache lock").insert(key, universe);
    }

    fn rebase(&self, monoid: Arc<Monoid>) -> Universe {
        Universe {
            monoid: monoid.clone(),
            bound: self.bound,
            representatives: self
                .representatives
                .iter()
                .map(|r| RightAct::from_flat_unchecked(monoid.clone(), r.size(), r.flat().to_vec()))
                .collect(),
        }
    }

    pub fn from_parts(monoid: Arc<Monoid>, bound: usize, representatives: Vec<RightAct>) -> Self {
        Universe {
            monoid,
            bound,
            representatives,
        }
    }

    pub fn monoid(&self) -> &Arc<Monoid> {
        &self.monoid
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn representatives(&self) -> &[RightAct] {
        &self.representatives
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    /// Index of the representative isomorphic to `act`, if `act` is within
    /// the bound.
    pub fn index_of(&self, act: &RightAct) -> Option<usize> {
        if act.size() > self.bound {
            return None;
        }
        let key = canonical_table(act);
        self.representatives
            .iter()
            .position(|r| r.size() == act.size() && r.flat() == key.as_slice())
    }
}

fn memo() -> &'static Mutex<HashMap<(Monoid, usize), Universe>> {
    static MEMO: OnceLock<Mutex<HashMap<(Monoid, usize), Universe>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// The lexicographically least relabelled action table of `act`; two acts
/// are isomorphic iff their canonical tables agree. Cost is `size!`.
pub fn canonical_table(act: &RightAct) -> Vec<usize> {
    canonical_flat(act.flat(), act.size(), act.monoid().size())
}

fn canonical_flat(action: &[usize], n: usize, k: usize) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    let mut table = vec![0; n * k];
    for perm in (0..n).permutations(n) {
        // perm[x] = new label of x
        for x in 0..n {
            for m in 0..k {
                table[perm[x] * k + m] = perm[action[x * k + m]];
            }
        }
        if best.as_ref().is_none_or(|b| table < *b) {
            best = Some(table.clone());
        }
    }
    best.unwrap_or_default()
}

const UNSET: usize = usize::MAX;

struct TableSearch<'a> {
    monoid: &'a Monoid,
    size: usize,
    gens: Vec<usize>,
    table: Vec<usize>,
    trail: Vec<usize>,
    queue: Vec<usize>,
}

impl TableSearch<'_> {
    #[inline]
    fn cell(&self, x: usize, m: usize) -> usize {
        x * self.monoid.size() + m
    }

    fn set(&mut self, cell: usize, value: usize) -> bool {
        match self.table[cell] {
            UNSET => {
                self.table[cell] = value;
                self.trail.push(cell);
                self.queue.push(cell);
                true
            }
            v => v == value,
        }
    }

    /// Derives every entry forced by the queued ones.
    fn propagate(&mut self) -> bool {
        let k = self.monoid.size();
        while let Some(cell) = self.queue.pop() {
            let (x, m) = (cell / k, cell % k);
            let y = self.table[cell];
            // x*m = y and y*n = z  ==>  x*(mn) = z
            for n in 0..k {
                let z = self.table[self.cell(y, n)];
                if z != UNSET && !self.set(self.cell(x, self.monoid.mul(m, n)), z) {
                    return false;
                }
            }
            // w*j = x  ==>  w*(jm) = y
            for w in 0..self.size {
                for j in 0..k {
                    if self.table[self.cell(w, j)] == x
                        && !self.set(self.cell(w, self.monoid.mul(j, m)), y)
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let cell = self.trail.pop().expect("above mark");
            self.table[cell] = UNSET;
        }
        self.queue.clear();
    }

    fn run(&mut self, depth: usize, out: &mut BTreeSet<Vec<usize>>) {
        let cells = self.size * self.gens.len();
        if depth == cells {
            debug_assert!(self.table.iter().all(|&v| v != UNSET));
            out.insert(canonical_flat(&self.table, self.size, self.monoid.size()));
            return;
        }
        let (x, g) = (depth / self.gens.len(), self.gens[depth % self.gens.len()]);
        let cell = self.cell(x, g);
        if self.table[cell] != UNSET {
            self.run(depth + 1, out);
            return;
        }
        for y in 0..self.size {
            let mark = self.trail.len();
            if self.set(cell, y) && self.propagate() {
                self.run(depth + 1, out);
            }
            self.undo(mark);
        }
    }
}

fn canonical_tables(monoid: &Monoid, size: usize) -> BTreeSet<Vec<usize>> {
    let mut search = TableSearch {
        monoid,
        size,
        gens: monoid.generators(),
        table: vec![UNSET; size * monoid.size()],
        trail: Vec::new(),
        queue: Vec::new(),
    };
    let mut out = BTreeSet::new();
    for x in 0..size {
        let cell = search.cell(x, monoid.identity());
        let ok = search.set(cell, x);
        debug_assert!(ok);
    }
    if !search.propagate() {
        return out;
    }
    search.trail.clear();
    search.run(0, &mut out);
    out
}
