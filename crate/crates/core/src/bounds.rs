//! Closed-form quality bounds of the greedy merging family, in exact
//! rational arithmetic.

use num_rational::Ratio;

pub type Rational = Ratio<i128>;

/// Upper bound on `|U_k| / |U_OPT|`: `1/(k-1) + Σ_{i=1}^{k-1} 1/i²`.
/// Defined for `2 <= k <= 40` (larger k overflows `i128`).
pub fn upper_bound(k: usize) -> Rational {
    assert!((2..=40).contains(&k), "upper bound defined for 2 <= k <= 40");
    let mut sum = Rational::new(1, k as i128 - 1);
    for i in 1..k as i128 {
        sum += Rational::new(1, i * i);
    }
    sum
}

/// `q(k, t) = (kt + 2(k-1)t) / (1 + 2(k-1)t)`, the ratio reached on the
/// worst-case family.
pub fn worst_case_ratio(k: usize, t: usize) -> Rational {
    let (k, t) = (k as i128, t as i128);
    Rational::new(k * t + 2 * (k - 1) * t, 1 + 2 * (k - 1) * t)
}

/// `lim_{t→∞} q(k, t) = (3k - 2) / (2k - 2)`.
pub fn worst_case_limit(k: usize) -> Rational {
    let k = k as i128;
    Rational::new(3 * k - 2, 2 * k - 2)
}
