//! Exact integer and rational arithmetic.
//!
//! Counts are arbitrary-precision [`BigInt`]s and rational intermediates are
//! [`BigRational`]s, which are always kept in lowest terms with a positive
//! denominator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// An exact signed integer count.
pub type BigCount = BigInt;

/// An exact rational number in lowest terms.
pub type ExactRational = BigRational;

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> Result<BigCount> {
    if n < 0 {
        return Err(Error::NegativeArgument {
            name: "n",
            value: n,
        });
    }
    if k < 0 || k > n {
        return Ok(BigInt::zero());
    }
    Ok(falling_ratio(n, k.min(n - k)))
}

/// Polynomial binomial `n (n-1) ... (n-k+1) / k!`, defined for every integer `n`.
///
/// Agrees with [`binomial`] for `n >= 0`. Zero for `k < 0`.
pub fn binomial_poly(n: i64, k: i64) -> BigCount {
    if k < 0 {
        return BigInt::zero();
    }
    if n >= 0 {
        if k > n {
            return BigInt::zero();
        }
        return falling_ratio(n, k.min(n - k));
    }
    falling_ratio(n, k)
}

// n (n-1) ... (n-k+1) / k!, dividing as we go; each partial quotient is an integer.
fn falling_ratio(n: i64, k: i64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
        acc /= BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: i64) -> Result<BigCount> {
    if n < 0 {
        return Err(Error::NegativeArgument {
            name: "n",
            value: n,
        });
    }
    Ok((2..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i)))
}

/// Returns the numerator of `q` if `q` is an integer.
pub fn to_integer(q: &ExactRational) -> Result<BigCount> {
    if q.is_integer() {
        Ok(q.numer().clone())
    } else {
        Err(Error::NonIntegral(q.to_string()))
    }
}

pub fn rational(numer: i64, denom: i64) -> ExactRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}
