//! Shared test data.

use std::sync::Arc;

use crate::monoid::{monoid_inventory, Monoid};

/// `M = {1, e}` with `e*e = e`; `1` is element 0.
pub(crate) fn idempotent_monoid() -> Arc<Monoid> {
    Arc::new(Monoid::new(vec![vec![0, 1], vec![1, 1]], 0).unwrap())
}

/// Every monoid of order at most 3.
pub(crate) fn small_monoids() -> Vec<Arc<Monoid>> {
    monoid_inventory(3).into_iter().map(Arc::new).collect()
}
