use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use super::{build_family, orbit_at, BilliardConfig, OrbitError, OrbitFamily};
use crate::scalar::Real;

type Key = (u64, u64, usize, usize);

/// Memoized families keyed by `(a, b, N, rotation)`.
///
/// Reads take a shared lock. A miss builds the family outside the lock and
/// inserts it under a short write lock; concurrent misses for the same key
/// may both build, and the first insertion wins. Cached entries are
/// re-checked (confocality and closure at `t = 0`) on every hit.
#[derive(Debug, Default)]
pub struct FamilyCache<T> {
    inner: RwLock<HashMap<Key, Arc<OrbitFamily<T>>>>,
}

impl<T: Real> FamilyCache<T> {
    pub fn new() -> Self {
        Self {
            inner: RwLock::new(HashMap::new()),
        }
    }

    fn key(config: &BilliardConfig<T>) -> Key {
        (
            config.a().as_f64().to_bits(),
            config.b().as_f64().to_bits(),
            config.n(),
            config.rotation(),
        )
    }

    pub fn get_or_build(
        &self,
        config: &BilliardConfig<T>,
    ) -> Result<Arc<OrbitFamily<T>>, OrbitError> {
        let key = Self::key(config);
        let hit = self
            .inner
            .read()
            .unwrap_or_else(|e| e.into_inner())
            .get(&key)
            .cloned();
        if let Some(f) = hit {
            verify(&f)?;
            return Ok(f);
        }
        let built = Arc::new(build_family(config)?);
        let mut map = self.inner.write().unwrap_or_else(|e| e.into_inner());
        Ok(map.entry(key).or_insert(built).clone())
    }

    pub fn len(&self) -> usize {
        self.inner.read().unwrap_or_else(|e| e.into_inner()).len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn verify<T: Real>(f: &OrbitFamily<T>) -> Result<(), OrbitError> {
    let c2 = f.billiard.a().sq() - f.billiard.b().sq();
    let c2_caustic = f.caustic.a().sq() - f.caustic.b().sq();
    if !((c2 - c2_caustic).abs() <= T::tol_floor(1e-12) * c2.max(T::one())) {
        return Err(OrbitError::StaleCaustic {
            closure_error: (c2 - c2_caustic).abs().as_f64(),
        });
    }
    orbit_at(f, T::zero()).map(|_| ())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hits_return_the_same_family() {
        let cache = FamilyCache::new();
        let cfg = BilliardConfig::new(1.5, 1.0, 5).unwrap();
        let a = cache.get_or_build(&cfg).unwrap();
        let b = cache.get_or_build(&cfg).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
        assert_eq!(cache.len(), 1);
    }

    #[test]
    fn concurrent_access() {
        let cache = Arc::new(FamilyCache::<f64>::new());
        std::thread::scope(|s| {
            for n in 3..9 {
                let cache = cache.clone();
                s.spawn(move || {
                    let cfg = BilliardConfig::new(2.0, 1.0, n).unwrap();
                    cache.get_or_build(&cfg).unwrap();
                    cache.get_or_build(&cfg).unwrap();
                });
            }
        });
        assert_eq!(cache.len(), 6);
    }
}
