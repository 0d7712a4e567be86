//! Exact evaluation of the small-MIS counting bound `3^(4k-n) * 4^(n-3k)`.
//!
//! Both exponents may be negative (for `k < n/4` the first one is, for
//! `k > n/3` the second one is), so the value is kept as a reduced rational.

use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Pow};

/// The value `3^(4k-n) * 4^(n-3k)` as a reduced fraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundValue {
    numer: BigUint,
    denom: BigUint,
}

impl BoundValue {
    pub fn numer(&self) -> &BigUint {
        &self.numer
    }

    pub fn denom(&self) -> &BigUint {
        &self.denom
    }

    pub fn is_integer(&self) -> bool {
        self.denom.is_one()
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.numer.clone().into(), self.denom.clone().into())
    }

    /// Floating rendering, for display only.
    pub fn to_f64(&self) -> f64 {
        let ln = |x: &BigUint| {
            let bits = x.bits();
            if bits <= 1000 {
                let v: f64 = x.to_string().parse().unwrap_or(f64::INFINITY);
                v.ln()
            } else {
                // shift down to stay in f64 range
                let shift = bits - 1000;
                let top: f64 = (x >> shift).to_string().parse().unwrap_or(f64::INFINITY);
                top.ln() + shift as f64 * std::f64::consts::LN_2
            }
        };
        (ln(&self.numer) - ln(&self.denom)).exp()
    }

    /// Exact `count <= value`.
    pub fn admits(&self, count: u64) -> bool {
        BigUint::from(count) * &self.denom <= self.numer
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/{}", self.numer, self.denom)
        }
    }
}

/// Upper bound on the number of maximal independent sets of size at most `k`
/// in any `n`-vertex graph.
pub fn mis_bound(n: u32, k: u32) -> BoundValue {
    let e3 = 4 * i64::from(k) - i64::from(n);
    let e4 = i64::from(n) - 3 * i64::from(k);
    let pow = |base: u32, e: i64| -> BigUint { Pow::pow(BigUint::from(base), e.unsigned_abs()) };

    let mut numer = BigUint::one();
    let mut denom = BigUint::one();
    let three = pow(3, e3);
    let four = pow(4, e4);
    if e3 >= 0 {
        numer *= three;
    } else {
        denom *= three;
    }
    if e4 >= 0 {
        numer *= four;
    } else {
        denom *= four;
    }
    // Both exponents negative would need 4k < n < 3k, so the fraction is a
    // power of 3 over a power of 4 (or vice versa) and already reduced.
    BoundValue { numer, denom }
}
