//! Integer helpers: gcd/lcm, primality, divisors and a cached totient table.

use std::sync::{Arc, RwLock};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Least common multiple. `lcm(0, x)` is 0.
pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Order of residue `b` in the additive group `Z_n`.
pub fn cyclic_order(n: u64, b: u64) -> u64 {
    n / gcd(n, b % n)
}

/// `(a * b) mod m` without intermediate overflow.
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Reduce an arbitrary signed integer into `[0, m)`.
pub fn reduce_signed(x: i64, m: u64) -> u64 {
    (x as i128).rem_euclid(m as i128) as u64
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d <= n / d {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// All positive divisors of `n`, ascending. `divisors(0)` is empty.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d <= n / d {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Euler's totient for `0..=limit`, built with a linear sieve.
#[derive(Debug, Clone)]
pub struct TotientTable {
    phi: Vec<u64>,
}

impl TotientTable {
    pub fn new(limit: usize) -> Self {
        let mut phi = vec![0u64; limit + 1];
        let mut lpf = vec![0u32; limit + 1];
        let mut primes: Vec<usize> = Vec::new();
        if limit >= 1 {
            phi[1] = 1;
        }
        for i in 2..=limit {
            if lpf[i] == 0 {
                lpf[i] = i as u32;
                phi[i] = i as u64 - 1;
                primes.push(i);
            }
            for &p in &primes {
                if p > lpf[i] as usize || i * p > limit {
                    break;
                }
                lpf[i * p] = p as u32;
                phi[i * p] = if p == lpf[i] as usize {
                    phi[i] * p as u64
                } else {
                    phi[i] * (p as u64 - 1)
                };
            }
        }
        TotientTable { phi }
    }

    pub fn limit(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn phi(&self, n: usize) -> u64 {
        self.phi[n]
    }
}

static TOTIENTS: RwLock<Option<Arc<TotientTable>>> = RwLock::new(None);

/// Shared totient table covering at least `0..=limit`.
///
/// The table only grows; concurrent callers see either the old or the new
/// table, both valid for the indices they cover.
pub fn totients(limit: usize) -> Arc<TotientTable> {
    if let Some(t) = TOTIENTS.read().unwrap().as_ref() {
        if t.limit() >= limit {
            return Arc::clone(t);
        }
    }
    let mut slot = TOTIENTS.write().unwrap();
    if let Some(t) = slot.as_ref() {
        if t.limit() >= limit {
            return Arc::clone(t);
        }
    }
    let size = slot.as_ref().map_or(limit, |t| limit.max(t.limit().saturating_mul(2)));
    let table = Arc::new(TotientTable::new(size.max(1)));
    *slot = Some(Arc::clone(&table));
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phi_by_counting(n: u64) -> u64 {
        (1..=n).filter(|&k| gcd(n, k) == 1).count() as u64
    }

    #[test]
    fn sieve_matches_counting() {
        let t = TotientTable::new(500);
        for n in 1..=500 {
            assert_eq!(t.phi(n as usize), phi_by_counting(n), "phi({n})");
        }
    }

    #[test]
    fn shared_table_grows() {
        let a = totients(10);
        assert!(a.limit() >= 10);
        let b = totients(5000);
        assert!(b.limit() >= 5000);
        assert_eq!(b.phi(4096), 2048);
    }

    #[test]
    fn divisors_and_primes() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn orders_and_reduction() {
        assert_eq!(cyclic_order(6, 2), 3);
        assert_eq!(cyclic_order(6, 0), 1);
        assert_eq!(cyclic_order(1, 0), 1);
        assert_eq!(lcm(3, 6), 6);
        assert_eq!(lcm(4, 6), 12);
        assert_eq!(reduce_signed(-1, 6), 5);
        assert_eq!(reduce_signed(i64::MIN, 7), (i64::MIN as i128).rem_euclid(7) as u64);
        assert_eq!(mul_mod(u64::MAX, u64::MAX, 1_000_000_007), {
            let m = 1_000_000_007u128;
            ((u64::MAX as u128 % m) * (u64::MAX as u128 % m) % m) as u64
        });
    }
}
