//! Classical sequences computed from their own recurrences or binomial
//! formulas. They serve as independent references for the tables.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `C_0..=C_max` from `C_{n+1} = Σ C_i C_{n-i}`.
pub fn catalan_numbers(max: usize) -> Vec<BigUint> {
    let mut c: Vec<BigUint> = vec![BigUint::one()];
    for n in 0..max {
        let next = (0..=n).map(|i| &c[i] * &c[n - i]).sum();
        c.push(next);
    }
    c
}

/// `M_0..=M_max` from `M_{n+1} = M_n + Σ_{i=0}^{n-1} M_i M_{n-1-i}`.
pub fn motzkin_numbers(max: usize) -> Vec<BigUint> {
    let mut m: Vec<BigUint> = vec![BigUint::one()];
    for n in 0..max {
        let mut next = m[n].clone();
        for i in 0..n {
            next += &m[i] * &m[n - 1 - i];
        }
        m.push(next);
    }
    m
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

/// Narayana number `N(n, k) = binom(n, k) binom(n, k-1) / n`: Dyck paths of
/// semilength `n` with `k` peaks. `N(0, 0) = 1`.
pub fn narayana(n: u64, k: u64) -> BigUint {
    if n == 0 {
        return if k == 0 {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    if k == 0 || k > n {
        return BigUint::zero();
    }
    binomial(n, k) * binomial(n, k - 1) / BigUint::from(n)
}
