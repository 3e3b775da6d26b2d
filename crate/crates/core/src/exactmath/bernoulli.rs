use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};

use super::polynomial::Polynomial;
use super::rational::{binomial, int, Rational};

/// Process-wide table of Bernoulli numbers `B_0..B_M`, grown on demand.
///
/// Uses the `B_1 = +1/2` convention, under which the Faulhaber formula gives
/// `Σ_{i=1}^{n} i^m` with no sign correction.
#[derive(Debug)]
pub struct BernoulliCache {
    table: RwLock<Vec<Rational>>,
}

impl BernoulliCache {
    pub fn new() -> Self {
        BernoulliCache {
            table: RwLock::new(vec![Rational::one()]),
        }
    }

    pub fn global() -> &'static BernoulliCache {
        static CACHE: OnceLock<BernoulliCache> = OnceLock::new();
        CACHE.get_or_init(BernoulliCache::new)
    }

    pub fn get(&self, m: usize) -> Rational {
        if let Some(b) = self.table.read().expect("bernoulli cache poisoned").get(m) {
            return b.clone();
        }
        let mut table = self.table.write().expect("bernoulli cache poisoned");
        // Another writer may have grown the table while we waited.
        while table.len() <= m {
            let next = table.len();
            let b = next_bernoulli(&table, next);
            table.push(b);
        }
        table[m].clone()
    }

    /// Number of entries computed so far.
    pub fn computed_len(&self) -> usize {
        self.table.read().expect("bernoulli cache poisoned").len()
    }
}

impl Default for BernoulliCache {
    fn default() -> Self {
        Self::new()
    }
}

// Σ_{j=0}^{m} C(m+1, j) B_j = m + 1
fn next_bernoulli(known: &[Rational], m: usize) -> Rational {
    if m >= 3 && m % 2 == 1 {
        return Rational::zero();
    }
    let m1 = m as u64 + 1;
    let partial = known
        .iter()
        .enumerate()
        .fold(Rational::zero(), |acc, (j, b)| {
            acc + Rational::from_integer(binomial(m1, j as u64)) * b
        });
    (int(m1 as i64) - partial) / int(m1 as i64)
}

/// Exact Bernoulli number `B_m` (with `B_1 = +1/2`).
pub fn bernoulli(m: usize) -> Rational {
    BernoulliCache::global().get(m)
}

/// The power-sum polynomial `P_m` with `P_m(n) = Σ_{i=1}^{n} i^m` for every
/// positive integer `n`; degree `m + 1`, zero constant term.
pub fn faulhaber(m: usize) -> Polynomial {
    let m1 = m as u64 + 1;
    let mut coeffs = vec![Rational::zero(); m + 2];
    for j in 0..=m {
        let c = Rational::from_integer(binomial(m1, j as u64)) * bernoulli(j) / int(m1 as i64);
        coeffs[m + 1 - j] = c;
    }
    Polynomial::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::rat;

    #[test]
    fn anchors() {
        assert_eq!(bernoulli(0), int(1));
        assert_eq!(bernoulli(1), rat(1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(12), rat(-691, 2730));
        for m in (3..40).step_by(2) {
            assert_eq!(bernoulli(m), int(0), "B_{m}");
        }
    }

    #[test]
    fn recurrence_brute_force_for_b4() {
        // Solve the defining recurrence step by step without the cache.
        let mut b = vec![int(1)];
        for m in 1..=4u64 {
            let s: Rational = (0..m)
                .map(|j| Rational::from_integer(binomial(m + 1, j)) * &b[j as usize])
                .sum();
            b.push((int(m as i64 + 1) - s) / int(m as i64 + 1));
        }
        assert_eq!(b[4], rat(-1, 30));
        assert_eq!(bernoulli(4), b[4]);
    }

    #[test]
    fn private_cache_grows_monotonically() {
        let cache = BernoulliCache::new();
        assert_eq!(cache.computed_len(), 1);
        assert_eq!(cache.get(10), rat(5, 66));
        assert_eq!(cache.computed_len(), 11);
        assert_eq!(cache.get(3), int(0));
        assert_eq!(cache.computed_len(), 11);
    }

    #[test]
    fn faulhaber_small_cases() {
        assert_eq!(faulhaber(0), Polynomial::x());
        assert_eq!(faulhaber(1), Polynomial::new(vec![int(0), rat(1, 2), rat(1, 2)]));
        assert_eq!(
            faulhaber(4),
            Polynomial::new(vec![int(0), rat(-1, 30), int(0), rat(1, 3), rat(1, 2), rat(1, 5)])
        );
        assert_eq!(
            faulhaber(10),
            Polynomial::new(vec![
                int(0),
                rat(5, 66),
                int(0),
                rat(-1, 2),
                int(0),
                int(1),
                int(0),
                int(-1),
                int(0),
                rat(5, 6),
                rat(1, 2),
                rat(1, 11),
            ])
        );
    }

    #[test]
    fn concurrent_readers_agree() {
        let cache = BernoulliCache::new();
        let cache = &cache;
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..8)
                .map(|i| scope.spawn(move || (0..30 + i).map(|m| cache.get(m)).collect::<Vec<_>>()))
                .collect();
            let results: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
            for r in &results {
                assert_eq!(r[..30], results[0][..30]);
            }
        });
    }
}
