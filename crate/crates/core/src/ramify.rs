//! Vanishing thresholds at a prescribed ramification point for tensor powers
//! `L^n` of a ramified linear series on a general pointed curve.

use crate::error::{Error, Result};
use crate::series::{rho_ramified, SchubertIndex, SeriesParams};

/// A strict upper bound `threshold` on `a` such that, on a general pointed
/// curve `(C, p)` and for every `l = (L, V)` with ramification at least
/// `alpha` at `p`, `h^0(L^n(-a p)) = h^0(L^n) - a` for every `0 < a < threshold`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerBound {
    pub n: i64,
    pub threshold: i64,
    /// `floor((n + 1) / 2)`.
    pub m: i64,
    /// `rho(g, r, d, alpha)`.
    pub rho_adj: i64,
    pub claim: String,
}

pub fn half_ceiling(n: i64) -> i64 {
    (n + 1).div_euclid(2)
}

fn claim(n: i64, threshold: i64) -> String {
    format!(
        "general pointed curve: h0(L^{n}(-a p)) = h0(L^{n}) - a for every integer 0 < a < {threshold}"
    )
}

/// Threshold `n d - rho(g,r,d,alpha) - g - floor(g/m)` for `n >= 3`.
///
/// `n = 2` has its own, sharper bound in [`square_bound`].
pub fn power_bound(p: &SeriesParams, alpha: &SchubertIndex, n: i64) -> Result<PowerBound> {
    if n < 3 {
        return Err(Error::PreconditionFail(format!(
            "power_bound needs n >= 3, got n={n}; use square_bound for n = 2"
        )));
    }
    let rho_adj = rho_ramified(p, alpha)?;
    let m = half_ceiling(n);
    let threshold = n * p.d - rho_adj - p.g - p.g.div_euclid(m);
    Ok(PowerBound {
        n,
        threshold,
        m,
        rho_adj,
        claim: claim(n, threshold),
    })
}

/// The two candidate thresholds for `n = 2`; the bound is their maximum.
pub fn square_bound_branches(p: &SeriesParams, alpha: &SchubertIndex) -> Result<(i64, i64)> {
    let rho_adj = rho_ramified(p, alpha)?;
    let base = 2 * p.d + 2 - 2 * p.g;
    let first = base - rho_adj + (p.g - 1).div_euclid(2);
    let second = base - 2 * rho_adj + 2 * p.g.div_euclid(3);
    Ok((first, second))
}

pub fn square_bound(p: &SeriesParams, alpha: &SchubertIndex) -> Result<PowerBound> {
    let (first, second) = square_bound_branches(p, alpha)?;
    let threshold = first.max(second);
    Ok(PowerBound {
        n: 2,
        threshold,
        m: half_ceiling(2),
        rho_adj: rho_ramified(p, alpha)?,
        claim: claim(2, threshold),
    })
}

/// `n d - g + 1`: no bound on `a` can exceed this.
pub fn riemann_roch_ceiling(n: i64, d: i64, g: i64) -> i64 {
    n * d - g + 1
}

/// Coefficient `n^2` of the class `[D_n] = n^2 theta` on the Jacobian.
pub fn dn_theta_coefficient(n: i64) -> Result<i64> {
    if n < 1 {
        return Err(Error::PreconditionFail(format!("need n >= 1, got n={n}")));
    }
    Ok(n * n)
}
