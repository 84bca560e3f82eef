//! Dimension counts and existence verdicts for the varieties `V_e^{e-f}(l)` of
//! `e`-secant `(e-f-1)`-planes to a curve embedded by a linear series `l`.

use std::fmt;

use crate::error::{Error, Result};
use crate::series::{rho, SeriesParams};

/// A secant-plane problem: divisors of degree `e` failing by `f` to impose
/// independent conditions on a `g^r_d` of a genus `g` curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SecantProblem {
    pub g: i64,
    pub d: i64,
    pub r: i64,
    pub e: i64,
    pub f: i64,
}

impl SecantProblem {
    pub fn new(g: i64, d: i64, r: i64, e: i64, f: i64) -> Result<Self> {
        if g < 0 || r < 0 {
            return Err(Error::InvalidParameters(format!(
                "need g >= 0 and r >= 0, got g={g} r={r}"
            )));
        }
        if f < 0 || f >= e {
            return Err(Error::InvalidParameters(format!(
                "need 0 <= f < e, got e={e} f={f}"
            )));
        }
        if r - e + f < 0 {
            return Err(Error::InvalidParameters(format!(
                "need r - e + f >= 0, got r={r} e={e} f={f}"
            )));
        }
        Ok(SecantProblem { g, d, r, e, f })
    }

    pub fn series(&self) -> SeriesParams {
        SeriesParams {
            g: self.g,
            r: self.r,
            d: self.d,
        }
    }

    pub fn rho(&self) -> i64 {
        rho(self.g, self.r, self.d)
    }

    /// Dimension of the series `l(-D)`: `r - e + f`.
    pub fn residual_dim(&self) -> i64 {
        self.r - self.e + self.f
    }

    /// Codimension of the secant condition: `f (r + 1 - e + f)`.
    pub fn codim(&self) -> i64 {
        self.f * (self.residual_dim() + 1)
    }
}

impl fmt::Display for SecantProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "g={} d={} r={} e={} f={}",
            self.g, self.d, self.r, self.e, self.f
        )
    }
}

/// `e - f(r+1-e+f)`, the expected dimension of `V_e^{e-f}(l)`.
pub fn expected_cycle_dim(p: &SecantProblem) -> i64 {
    p.e - p.codim()
}

/// Upper bound `rho(g,r,d) - f(r+1-e+f) + e` on the dimension of the locus of
/// series with a nonempty secant variety, on a general curve.
pub fn family_dim_bound(p: &SecantProblem) -> i64 {
    p.rho() - p.codim() + p.e
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VerdictStatus {
    EmptyGeneralCurve,
    ExistsExpectedDim,
    HypothesesFail,
    Unknown,
}

impl VerdictStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            VerdictStatus::EmptyGeneralCurve => "EMPTY_GENERAL_CURVE",
            VerdictStatus::ExistsExpectedDim => "EXISTS_EXPECTED_DIM",
            VerdictStatus::HypothesesFail => "HYPOTHESES_FAIL",
            VerdictStatus::Unknown => "UNKNOWN",
        }
    }
}

impl fmt::Display for VerdictStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SecantVerdict {
    pub status: VerdictStatus,
    pub expected_dim_cycle: i64,
    pub expected_dim_family: i64,
    /// Truth value of every condition that entered the verdict, in a fixed order.
    pub witnesses: Vec<(&'static str, bool)>,
}

impl SecantVerdict {
    pub fn witness(&self, name: &str) -> Option<bool> {
        self.witnesses
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, v)| *v)
    }
}

pub mod witness {
    pub const FAMILY_DIM_NONNEGATIVE: &str = "family-dim-nonnegative";
    pub const RESIDUAL_RHO_NONNEGATIVE: &str = "residual-rho-nonnegative";
    pub const SPECIAL_RANGE: &str = "special-range";
    pub const E_AT_MOST_G: &str = "e-at-most-g";
    pub const DEGREE_BOUND: &str = "degree-bound";
    pub const SPECIAL_SERIES: &str = "g-d-r-nonnegative";
    pub const CASE_I: &str = "case-i";
    pub const CASE_II: &str = "case-ii";
    pub const CASE_III: &str = "case-iii";
    pub const CASE_IV: &str = "case-iv";
    pub const PRIOR_WORK_RANGE: &str = "prior-work-existence-range";
}

/// Emptiness, existence or no claim for `V_e^{e-f}(l)` on a general curve.
///
/// Emptiness is reported when the family bound is negative or when the
/// residual series `g^{r-e+f}_{d-e}` cannot exist. Existence (with the
/// expected family dimension) needs every existence hypothesis plus one of
/// the four sufficient cases. A failed existence hypothesis gives
/// `HypothesesFail`; all hypotheses holding but none of the cases gives
/// `Unknown`.
pub fn secant_verdict(p: &SecantProblem) -> SecantVerdict {
    let codim = p.codim();
    let family = family_dim_bound(p);
    let residual_rho = rho(p.g, p.residual_dim(), p.d - p.e);

    let family_ok = family >= 0;
    let residual_ok = residual_rho >= 0;
    let special_range = codim >= p.e;
    let e_le_g = p.e <= p.g;
    let degree_ok = p.d >= 2 * p.e - p.f - 1;
    let special_series = p.g - p.d + p.r >= 0;
    let case_i = 2 * p.f < p.e;
    let case_ii = p.e == 2 * p.r - 2 && p.f == p.r - 1;
    let case_iii = p.e < 2 * (p.residual_dim() + 1);
    let case_iv = p.rho() >= codim - (p.g - p.d + p.r);
    let prior_work = p.e >= codim;

    let witnesses = vec![
        (witness::FAMILY_DIM_NONNEGATIVE, family_ok),
        (witness::RESIDUAL_RHO_NONNEGATIVE, residual_ok),
        (witness::SPECIAL_RANGE, special_range),
        (witness::E_AT_MOST_G, e_le_g),
        (witness::DEGREE_BOUND, degree_ok),
        (witness::SPECIAL_SERIES, special_series),
        (witness::CASE_I, case_i),
        (witness::CASE_II, case_ii),
        (witness::CASE_III, case_iii),
        (witness::CASE_IV, case_iv),
        (witness::PRIOR_WORK_RANGE, prior_work),
    ];

    let status = if !family_ok || !residual_ok {
        VerdictStatus::EmptyGeneralCurve
    } else if !(special_range && e_le_g && degree_ok && special_series) {
        VerdictStatus::HypothesesFail
    } else if case_i || case_ii || case_iii || case_iv {
        VerdictStatus::ExistsExpectedDim
    } else {
        VerdictStatus::Unknown
    };

    SecantVerdict {
        status,
        expected_dim_cycle: expected_cycle_dim(p),
        expected_dim_family: family,
        witnesses,
    }
}

/// True when `rho(g,r,d) = 0` and `e < f(r+1-e+f)`, so that no series on a
/// general curve has an `e`-secant `(e-f-1)`-plane.
pub fn rho_zero_emptiness(p: &SecantProblem) -> bool {
    p.rho() == 0 && p.e < p.codim()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleDim {
    Dimension(i64),
    EmptyExpected,
}

/// Dimension of `V_e^{e-f}(l)` for a general `l` on a general curve, when nonempty.
pub fn coppens_martens_dim(p: &SecantProblem) -> CycleDim {
    let dim = expected_cycle_dim(p);
    if dim >= 0 {
        CycleDim::Dimension(dim)
    } else {
        CycleDim::EmptyExpected
    }
}

/// Every `g^r_d` on a general curve is `(e-1)`-very ample when
/// `rho(g,r,d) + 2e - 2 - r < 0`.
pub fn very_ample_guaranteed(g: i64, r: i64, d: i64, e: i64) -> Result<bool> {
    if e < 1 {
        return Err(Error::PreconditionFail(format!("need e >= 1, got e={e}")));
    }
    Ok(rho(g, r, d) + 2 * e - 2 - r < 0)
}

/// The problem of `uf`-secant `(uf-f-1)`-planes in `P^{(u-1)(f+1)}`.
pub fn uf_secant_problem(g: i64, d: i64, u: i64, f: i64) -> Result<SecantProblem> {
    if u < 1 {
        return Err(Error::PreconditionFail(format!("need u >= 1, got u={u}")));
    }
    if f < 2 {
        return Err(Error::PreconditionFail(format!("need f >= 2, got f={f}")));
    }
    SecantProblem::new(g, d, (u - 1) * (f + 1), u * f, f)
}
