//! Small exact-arithmetic helpers.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Binomial coefficient with the usual convention that out-of-range `k`
/// (negative or larger than `n`) gives 0. `k` is signed so formulas with
/// shifted indices can be written directly.
pub fn binomial(n: usize, k: isize) -> BigUint {
    if k < 0 || k as usize > n {
        return BigUint::zero();
    }
    let k = (k as usize).min(n - k as usize);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Fibonacci numbers indexed so that F_0 = F_1 = 1 (the number of
/// compositions of n into 1s and 2s).
pub fn fibonacci(n: usize) -> BigUint {
    let mut a = BigUint::one();
    let mut b = BigUint::one();
    for _ in 0..n {
        let c = &a + &b;
        a = b;
        b = c;
    }
    a
}

pub fn factorial(n: usize) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=n {
        acc *= BigUint::from(i);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_basics() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(5, -1), BigUint::zero());
        assert_eq!(binomial(5, 6), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
    }

    #[test]
    fn fibonacci_indexing() {
        // compositions of n into 1s and 2s: 1, 1, 2, 3, 5, 8, ...
        let want = [1u32, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89];
        for (i, &w) in want.iter().enumerate() {
            assert_eq!(fibonacci(i), BigUint::from(w));
        }
    }
}
