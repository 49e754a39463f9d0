//! Sieve-backed prime lookups.

/// `sieve(limit)[i]` is true iff `i` is prime, for `0 ≤ i ≤ limit`.
pub fn sieve(limit: usize) -> Vec<bool> {
    let mut is_prime = vec![true; limit + 1];
    is_prime[0] = false;
    if limit >= 1 {
        is_prime[1] = false;
    }
    let mut i = 2;
    while i * i <= limit {
        if is_prime[i] {
            let mut j = i * i;
            while j <= limit {
                is_prime[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    is_prime
}

/// Trial division; the inputs here are small field orders.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime in `[lo, hi]`, or `None` (also when `lo > hi`).
pub fn smallest_prime_in(lo: usize, hi: usize) -> Option<usize> {
    if lo > hi {
        return None;
    }
    let table = sieve(hi);
    (lo..=hi).find(|&i| table[i])
}
