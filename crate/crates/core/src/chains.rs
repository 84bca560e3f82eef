//! Limit linear series on a chain of elliptic curves, reduced to combinatorics.
//!
//! Along the chain `E_0 u E_1 u ... u E_{g-1}` with generic gluing, the
//! vanishing sequence at the next node is obtained from the current one by
//! raising every entry by one except a single stationary entry. In the rigid
//! regime (adjusted Brill-Noether number zero) a limit series is exactly a
//! sequence of such steps, so series can be counted and listed by walking
//! paths of vanishing sequences.
//!
//! This module also builds the Schubert-index data used to glue a secant
//! configuration on a genus `e` curve to a ramified series on the rest of a
//! degeneration.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::BigCount;
use crate::error::{Error, Result};
use crate::secant::SecantProblem;
use crate::series::{rho, SchubertIndex, SeriesParams, VanishingSequence};

/// Raises every entry of `a` by one except `a[stay]`.
pub fn propagate_step(a: &VanishingSequence, stay: usize) -> Result<VanishingSequence> {
    let r = a.r();
    let entries = a.entries();
    if stay as i64 > r {
        return Err(Error::StationaryOutOfRange { stay, r });
    }
    if stay > 0 && entries[stay - 1] + 1 == entries[stay] {
        return Err(Error::Collision { stay });
    }
    if (stay as i64) < r && entries[r as usize] + 1 > a.d() {
        return Err(Error::Overflow { d: a.d() });
    }
    let next = entries
        .iter()
        .enumerate()
        .map(|(j, &x)| if j == stay { x } else { x + 1 })
        .collect();
    VanishingSequence::new(r, a.d(), next)
}

/// A chain of `length` elliptic curves carrying a `g^r_d` with ramification at
/// least `start` at the first marked point and at least `end` at the last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainSpec {
    length: usize,
    start: SchubertIndex,
    end: SchubertIndex,
}

impl ChainSpec {
    pub fn new(length: usize, start: SchubertIndex, end: SchubertIndex) -> Result<Self> {
        if length < 1 {
            return Err(Error::InvalidParameters(
                "chain length must be at least 1".into(),
            ));
        }
        if start.r() != end.r() || start.d() != end.d() {
            return Err(Error::ContextMismatch {
                expected_r: start.r(),
                expected_d: start.d(),
                r: end.r(),
                d: end.d(),
            });
        }
        Ok(ChainSpec { length, start, end })
    }

    /// No imposed ramification at either end.
    pub fn unramified(length: usize, r: i64, d: i64) -> Result<Self> {
        let zero = SchubertIndex::zero(r, d)?;
        ChainSpec::new(length, zero.clone(), zero)
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn start(&self) -> &SchubertIndex {
        &self.start
    }

    pub fn end(&self) -> &SchubertIndex {
        &self.end
    }

    /// Genus, dimension and degree of the series; the genus is the chain length.
    pub fn series(&self) -> SeriesParams {
        SeriesParams {
            g: self.length as i64,
            r: self.start.r(),
            d: self.start.d(),
        }
    }

    /// `rho(length, r, d) - sum(start) - sum(end)`.
    pub fn adjusted_rho(&self) -> i64 {
        self.series().rho() - self.start.sum() - self.end.sum()
    }

    fn check_rigid(&self) -> Result<()> {
        match self.adjusted_rho() {
            0 => Ok(()),
            adjusted_rho => Err(Error::NotRhoZero { adjusted_rho }),
        }
    }

    fn accepts_final(&self, a: &VanishingSequence) -> bool {
        a.complement().to_schubert().dominates(&self.end)
    }
}

/// One limit series on the chain: the vanishing sequences at the `length + 1`
/// marked points and the stationary index chosen on each component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainPath {
    pub sequences: Vec<VanishingSequence>,
    pub stationary_indices: Vec<usize>,
}

/// Memoized path counter keyed on (component, current vanishing sequence).
struct Counter<'a> {
    spec: &'a ChainSpec,
    memo: HashMap<(usize, Vec<i64>), BigInt>,
}

impl<'a> Counter<'a> {
    fn new(spec: &'a ChainSpec) -> Self {
        Counter {
            spec,
            memo: HashMap::new(),
        }
    }

    fn count(&mut self, position: usize, a: &VanishingSequence) -> BigInt {
        if position == self.spec.length {
            return if self.spec.accepts_final(a) {
                BigInt::one()
            } else {
                BigInt::zero()
            };
        }
        let key = (position, a.entries().to_vec());
        if let Some(n) = self.memo.get(&key) {
            return n.clone();
        }
        let mut total = BigInt::zero();
        for stay in 0..=a.r() as usize {
            if let Ok(next) = propagate_step(a, stay) {
                total += self.count(position + 1, &next);
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// Number of limit series on the chain in the rigid regime.
pub fn count_chain_series(spec: &ChainSpec) -> Result<BigCount> {
    spec.check_rigid()?;
    let start = spec.start.to_vanishing();
    Ok(Counter::new(spec).count(0, &start))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainEnumeration {
    /// Paths in lexicographic order of their stationary indices.
    pub paths: Vec<ChainPath>,
    pub truncated: bool,
    pub total: BigCount,
}

/// Lists limit series on the chain, at most `limit` of them.
pub fn enumerate_chain_series(spec: &ChainSpec, limit: usize) -> Result<ChainEnumeration> {
    spec.check_rigid()?;
    let mut counter = Counter::new(spec);
    let start = spec.start.to_vanishing();
    let total = counter.count(0, &start);

    let mut paths = Vec::new();
    let mut sequences = vec![start];
    let mut stays = Vec::with_capacity(spec.length);
    walk(&mut counter, &mut sequences, &mut stays, &mut paths, limit);

    let truncated = BigInt::from(paths.len()) < total;
    Ok(ChainEnumeration {
        paths,
        truncated,
        total,
    })
}

fn walk(
    counter: &mut Counter<'_>,
    sequences: &mut Vec<VanishingSequence>,
    stays: &mut Vec<usize>,
    out: &mut Vec<ChainPath>,
    limit: usize,
) {
    if out.len() >= limit {
        return;
    }
    let position = stays.len();
    let current = sequences.last().expect("path starts non-empty").clone();
    if position == counter.spec.length {
        if counter.spec.accepts_final(&current) {
            out.push(ChainPath {
                sequences: sequences.clone(),
                stationary_indices: stays.clone(),
            });
        }
        return;
    }
    for stay in 0..=current.r() as usize {
        let Ok(next) = propagate_step(&current, stay) else {
            continue;
        };
        if counter.count(position + 1, &next).is_zero() {
            continue;
        }
        sequences.push(next);
        stays.push(stay);
        walk(counter, sequences, stays, out, limit);
        stays.pop();
        sequences.pop();
        if out.len() >= limit {
            return;
        }
    }
}

/// The Schubert-index data gluing a secant configuration on a genus `e`
/// component `Y` to a ramified `g^r_d` on the complementary genus `g - e`
/// component `Z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SecantConstruction {
    pub problem: SecantProblem,
    /// Balanced index of type `(r-e+f, d-e)` summing to `rho(e, r-e+f, d-e)`.
    pub alpha: SchubertIndex,
    /// Balanced index of type `(e-f-1, 2e-f-1)` summing to `e`.
    pub beta: SchubertIndex,
    /// Vanishing sequence at the node on `Y`, of type `(r, d)`.
    pub merged: VanishingSequence,
    /// Ramification at the node on `Z`, of type `(r, d)`.
    pub gamma: SchubertIndex,
}

/// `total` split into `parts` non-decreasing parts differing by at most one.
fn balanced(total: i64, parts: i64) -> Vec<i64> {
    let base = total.div_euclid(parts);
    let extra = total - base * parts;
    (0..parts)
        .map(|j| if j >= parts - extra { base + 1 } else { base })
        .collect()
}

struct RawConstruction {
    alpha: Vec<i64>,
    beta: Vec<i64>,
    merged: Vec<i64>,
}

fn raw_construction(p: &SecantProblem) -> Result<RawConstruction> {
    let r_res = p.residual_dim();
    let alpha_total = rho(p.e, r_res, p.d - p.e);
    if alpha_total < 0 {
        return Err(Error::PreconditionFail(format!(
            "rho(e, r-e+f, d-e) = {alpha_total} < 0"
        )));
    }
    let alpha = balanced(alpha_total, r_res + 1);
    let beta = balanced(p.e, p.e - p.f);
    let offset = p.d - 2 * p.e + p.f + 1;
    let merged = alpha
        .iter()
        .enumerate()
        .map(|(j, &a)| a + j as i64)
        .chain(beta.iter().enumerate().map(|(k, &b)| b + offset + k as i64))
        .collect();
    Ok(RawConstruction {
        alpha,
        beta,
        merged,
    })
}

/// Whether the node vanishing sequence of the construction is strictly
/// increasing, computed without assuming `f(r+1-e+f) >= e`.
pub fn merged_sequence_is_strict(p: &SecantProblem) -> Result<bool> {
    let raw = raw_construction(p)?;
    Ok(raw.merged.windows(2).all(|w| w[0] < w[1]))
}

/// `alpha_{r-e+f} + r-e+f < d-2e+f+1`: the top entry coming from `alpha` lies
/// below every entry coming from `beta`, whatever `beta` is. Equivalent to
/// `f(r+1-e+f) >= e`, and sufficient (not necessary, since `beta_0 >= 1`) for
/// [`merged_sequence_is_strict`].
pub fn junction_below_offset(p: &SecantProblem) -> Result<bool> {
    let raw = raw_construction(p)?;
    let top = raw.alpha.last().copied().unwrap_or(0) + p.residual_dim();
    Ok(top < p.d - 2 * p.e + p.f + 1)
}

pub fn build_secant_construction(p: &SecantProblem) -> Result<SecantConstruction> {
    if p.codim() < p.e {
        return Err(Error::PreconditionFail(format!(
            "f(r+1-e+f) = {} < e = {}",
            p.codim(),
            p.e
        )));
    }
    if p.d < 2 * p.e - p.f - 1 {
        return Err(Error::PreconditionFail(format!(
            "d = {} < 2e-f-1 = {}",
            p.d,
            2 * p.e - p.f - 1
        )));
    }
    let raw = raw_construction(p)?;
    let r_res = p.residual_dim();

    let alpha = SchubertIndex::new(r_res, p.d - p.e, raw.alpha)?;
    let beta = SchubertIndex::new(p.e - p.f - 1, 2 * p.e - p.f - 1, raw.beta)?;
    let merged = VanishingSequence::new(p.r, p.d, raw.merged)?;
    let gamma_entries = beta
        .entries()
        .iter()
        .rev()
        .map(|&b| p.e - b)
        .chain(alpha.entries().iter().rev().map(|&a| p.d - p.r - a))
        .collect();
    let gamma = SchubertIndex::new(p.r, p.d, gamma_entries)?;

    Ok(SecantConstruction {
        problem: *p,
        alpha,
        beta,
        merged,
        gamma,
    })
}

/// Checks `rho(g-e, r, d, gamma) = rho(g, r, d) + e - f(r+1-e+f)`.
pub fn gamma_dimension_identity(p: &SecantProblem) -> Result<bool> {
    let c = build_secant_construction(p)?;
    let lhs = rho(p.g - p.e, p.r, p.d) - c.gamma.sum();
    let rhs = p.rho() + p.e - p.codim();
    Ok(lhs == rhs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AssumptionChecks {
    /// Degree of the line bundle whose sections must vanish on `Y`.
    pub assumption2_degree: i64,
    /// `g(Y) - 1 = e - 1`.
    pub genus_y_minus_one: i64,
    /// `rho(g,r,d) >= f(r+1-e+f) - (g-d+r)`.
    pub ass4_holds: bool,
    /// `g - d + r >= e`.
    pub gdr_ge_e: bool,
}

pub fn assumption_degree_checks(p: &SecantProblem) -> AssumptionChecks {
    let degree_l = 2 * p.e - p.f - 1;
    let degree_a = p.d - p.e;
    let twist = p.d + p.f - 2 * p.e;
    let assumption2_degree = degree_l - degree_a + twist;
    debug_assert_eq!(assumption2_degree, p.e - 1);
    AssumptionChecks {
        assumption2_degree,
        genus_y_minus_one: p.e - 1,
        ass4_holds: p.rho() >= p.codim() - (p.g - p.d + p.r),
        gdr_ge_e: p.g - p.d + p.r >= p.e,
    }
}
