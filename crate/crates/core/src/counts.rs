//! Counts of `(2r-2)`-secant `(r-2)`-planes: Castelnuovo's alternating sum and
//! Cayley's closed form for quadrisecant lines of space curves.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{binomial, binomial_poly, rational, to_integer, BigCount, ExactRational};
use crate::error::{Error, Result};
use crate::series::rho;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CountFormula {
    GeneralSum,
    CayleyR3,
}

impl CountFormula {
    pub fn as_str(&self) -> &'static str {
        match self {
            CountFormula::GeneralSum => "GENERAL_SUM",
            CountFormula::CayleyR3 => "CAYLEY_R3",
        }
    }
}

impl fmt::Display for CountFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Caveats attached to a count evaluated outside the range where it is known
/// to be enumerative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ValidityFlag {
    /// `r >= 3`, `d >= 3r-2`, `rho(g,r,d) >= 0` or `rho(g,1,d-2r+2) >= 0` fails.
    OutsideHypotheses,
    /// Some binomial had a negative top and was evaluated as a polynomial.
    NegativeBinomialTop,
}

impl ValidityFlag {
    pub fn as_str(&self) -> &'static str {
        match self {
            ValidityFlag::OutsideHypotheses => "OUTSIDE_HYPOTHESES",
            ValidityFlag::NegativeBinomialTop => "NEGATIVE_BINOMIAL_TOP",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SecantCount {
    pub value: BigCount,
    pub d: i64,
    pub g: i64,
    pub r: i64,
    pub formula: CountFormula,
    pub flags: Vec<ValidityFlag>,
}

impl SecantCount {
    /// True when the count carries no validity caveat.
    pub fn within_hypotheses(&self) -> bool {
        self.flags.is_empty()
    }
}

/// Whether `(d, g, r)` lies where the count is known to be enumerative on a
/// general curve.
pub fn count_hypotheses_hold(d: i64, g: i64, r: i64) -> bool {
    r >= 3 && d >= 3 * r - 2 && g >= 0 && rho(g, r, d) >= 0 && rho(g, 1, d - 2 * r + 2) >= 0
}

/// One term `(-1)^i / (r-i) * C(d-r-i+1, r-1-i) * C(d-r-i, r-1-i) * C(g, i)`.
pub fn castelnuovo_term(d: i64, g: i64, r: i64, i: i64) -> Result<(ExactRational, bool)> {
    let k = r - 1 - i;
    let mut poly = false;
    let mut choose = |n: i64| -> Result<BigInt> {
        if n < 0 {
            poly = true;
            Ok(binomial_poly(n, k))
        } else {
            binomial(n, k)
        }
    };
    let product = choose(d - r - i + 1)? * choose(d - r - i)? * binomial(g, i)?;
    let sign = if i % 2 == 0 { 1 } else { -1 };
    let term = ExactRational::from_integer(product) * rational(sign, r - i);
    Ok((term, poly))
}

/// Castelnuovo's count `C(d, g, r)` of `(2r-2)`-secant `(r-2)`-planes.
///
/// Evaluated with exact rational intermediates; the reduced sum must be an
/// integer. Outside `count_hypotheses_hold` the value is still returned,
/// with [`ValidityFlag::OutsideHypotheses`].
pub fn castelnuovo(d: i64, g: i64, r: i64) -> Result<SecantCount> {
    if r < 1 {
        return Err(Error::PreconditionFail(format!("need r >= 1, got r={r}")));
    }
    if g < 0 {
        return Err(Error::NegativeArgument {
            name: "g",
            value: g,
        });
    }
    let mut sum = ExactRational::zero();
    let mut poly = false;
    for i in 0..r {
        let (term, used_poly) = castelnuovo_term(d, g, r, i)?;
        sum += term;
        poly |= used_poly;
    }
    let value = to_integer(&sum)?;

    let mut flags = Vec::new();
    if !count_hypotheses_hold(d, g, r) {
        flags.push(ValidityFlag::OutsideHypotheses);
    }
    if poly {
        flags.push(ValidityFlag::NegativeBinomialTop);
    }
    Ok(SecantCount {
        value,
        d,
        g,
        r,
        formula: CountFormula::GeneralSum,
        flags,
    })
}

/// Cayley's number of quadrisecant lines,
/// `(d-2)(d-3)^2(d-4)/12 - g(d^2 - 7d + 13 - g)/2`.
pub fn cayley_r3(d: i64, g: i64) -> Result<SecantCount> {
    let big = |x: i64| BigInt::from(x);
    let first = big(d - 2) * big(d - 3) * big(d - 3) * big(d - 4);
    let second = big(g) * (big(d) * big(d) - big(7 * d) + big(13) - big(g));
    let value = ExactRational::new(first, big(12)) - ExactRational::new(second, big(2));
    let value = to_integer(&value)?;
    let flags = if count_hypotheses_hold(d, g, 3) {
        Vec::new()
    } else {
        vec![ValidityFlag::OutsideHypotheses]
    };
    Ok(SecantCount {
        value,
        d,
        g,
        r: 3,
        formula: CountFormula::CayleyR3,
        flags,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub d: i64,
    pub g: i64,
    pub general: BigCount,
    pub cayley: BigCount,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConsistencyReport {
    /// `C(d, g, 3)` keyed by `(d, g)`.
    pub values: BTreeMap<(i64, i64), BigCount>,
    pub mismatches: Vec<Mismatch>,
}

impl ConsistencyReport {
    pub fn is_consistent(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares the general sum at `r = 3` against Cayley's closed form on
/// `[4, d_max] x [0, g_max]`.
pub fn consistency_check(d_max: i64, g_max: i64) -> Result<ConsistencyReport> {
    let mut report = ConsistencyReport::default();
    for d in 4..=d_max {
        for g in 0..=g_max {
            let general = castelnuovo(d, g, 3)?.value;
            let cayley = cayley_r3(d, g)?.value;
            if general != cayley {
                report.mismatches.push(Mismatch {
                    d,
                    g,
                    general: general.clone(),
                    cayley,
                });
            }
            report.values.insert((d, g), general);
        }
    }
    Ok(report)
}
