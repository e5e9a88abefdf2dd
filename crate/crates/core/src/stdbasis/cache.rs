use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::{compute_basis, ComputedBasis, IdealData};
use crate::polyring::MonomialOrder;

/// Bases keyed by `(generators, order)`, scoped to one pipeline run.
///
/// Lookups take a lock only around the map; the basis itself is computed
/// outside it, so concurrent callers may occasionally compute the same basis
/// twice and keep whichever lands first. Both copies are identical.
#[derive(Debug, Default)]
pub struct BasisCache {
    map: Mutex<HashMap<(IdealData, MonomialOrder), Arc<ComputedBasis>>>,
}

impl BasisCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn basis(&self, ideal: &IdealData, order: MonomialOrder) -> Arc<ComputedBasis> {
        let key = (ideal.clone(), order);
        if let Some(b) = self.map.lock().expect("cache lock").get(&key) {
            return b.clone();
        }
        let computed = Arc::new(compute_basis(ideal, order));
        self.map
            .lock()
            .expect("cache lock")
            .entry(key)
            .or_insert(computed)
            .clone()
    }

    pub fn len(&self) -> usize {
        self.map.lock().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
