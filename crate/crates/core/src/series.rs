//! Brill-Noether numerics of a single linear series: the numbers `(g, r, d)`,
//! Schubert indices, vanishing sequences and their weights.

use std::fmt;

use crate::error::{Error, Result};

/// Genus, projective dimension and degree of a linear series `g^r_d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeriesParams {
    pub g: i64,
    pub r: i64,
    pub d: i64,
}

impl SeriesParams {
    pub fn new(g: i64, r: i64, d: i64) -> Result<Self> {
        if g < 0 {
            return Err(Error::NegativeArgument {
                name: "g",
                value: g,
            });
        }
        if r < 0 {
            return Err(Error::NegativeArgument {
                name: "r",
                value: r,
            });
        }
        Ok(SeriesParams { g, r, d })
    }

    /// `g - (r+1)(g-d+r)`.
    pub fn rho(&self) -> i64 {
        rho(self.g, self.r, self.d)
    }

    /// `h^1` of a complete series with these numbers: `g - d + r`.
    pub fn speciality(&self) -> i64 {
        self.g - self.d + self.r
    }

    /// The residual series `g^{g-d+r-1}_{2g-2-d}`, when its dimension is non-negative.
    pub fn residual(&self) -> Option<SeriesParams> {
        SeriesParams::new(
            self.g,
            self.g - self.d + self.r - 1,
            2 * self.g - 2 - self.d,
        )
        .ok()
    }

    fn check_context(&self, r: i64, d: i64) -> Result<()> {
        if self.r != r || self.d != d {
            return Err(Error::ContextMismatch {
                expected_r: self.r,
                expected_d: self.d,
                r,
                d,
            });
        }
        Ok(())
    }
}

impl fmt::Display for SeriesParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g={} r={} d={}", self.g, self.r, self.d)
    }
}

/// Brill-Noether number `g - (r+1)(g-d+r)` on raw integers.
pub fn rho(g: i64, r: i64, d: i64) -> i64 {
    g - (r + 1) * (g - d + r)
}

/// A ramification sequence `0 <= a_0 <= ... <= a_r <= d - r` of type `(r, d)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchubertIndex {
    r: i64,
    d: i64,
    entries: Vec<i64>,
}

impl SchubertIndex {
    pub fn new(r: i64, d: i64, entries: Vec<i64>) -> Result<Self> {
        let invalid = || Error::InvalidSchubertIndex {
            entries: entries.clone(),
            r,
            d,
        };
        if r < 0 || entries.len() as i64 != r + 1 {
            return Err(invalid());
        }
        let in_range = entries.iter().all(|&x| x >= 0 && x <= d - r);
        let monotone = entries.windows(2).all(|w| w[0] <= w[1]);
        if !in_range || !monotone {
            return Err(invalid());
        }
        Ok(SchubertIndex { r, d, entries })
    }

    /// The all-zero index of type `(r, d)`; requires `0 <= r <= d`.
    pub fn zero(r: i64, d: i64) -> Result<Self> {
        SchubertIndex::new(r, d, vec![0; (r.max(0) + 1) as usize])
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn sum(&self) -> i64 {
        self.entries.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    /// `a_i = alpha_i + i`.
    pub fn to_vanishing(&self) -> VanishingSequence {
        let entries = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, &x)| x + i as i64)
            .collect();
        VanishingSequence {
            r: self.r,
            d: self.d,
            entries,
        }
    }

    /// True if every entry is at least the corresponding entry of `other`.
    pub fn dominates(&self, other: &SchubertIndex) -> bool {
        self.r == other.r
            && self.d == other.d
            && self.entries.iter().zip(&other.entries).all(|(a, b)| a >= b)
    }
}

impl fmt::Display for SchubertIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.entries)
    }
}

/// Strictly increasing vanishing orders `0 <= a_0 < ... < a_r <= d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VanishingSequence {
    r: i64,
    d: i64,
    entries: Vec<i64>,
}

impl VanishingSequence {
    pub fn new(r: i64, d: i64, entries: Vec<i64>) -> Result<Self> {
        let invalid = || Error::InvalidVanishingSequence {
            entries: entries.clone(),
            r,
            d,
        };
        if r < 0 || entries.len() as i64 != r + 1 {
            return Err(invalid());
        }
        let in_range = entries.iter().all(|&x| x >= 0 && x <= d);
        let strict = entries.windows(2).all(|w| w[0] < w[1]);
        if !in_range || !strict {
            return Err(invalid());
        }
        Ok(VanishingSequence { r, d, entries })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// `alpha_i = a_i - i`.
    pub fn to_schubert(&self) -> SchubertIndex {
        let entries = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, &a)| a - i as i64)
            .collect();
        SchubertIndex {
            r: self.r,
            d: self.d,
            entries,
        }
    }

    /// `sum (a_i - i)`; positive exactly at a ramification point.
    pub fn weight(&self) -> i64 {
        self.entries
            .iter()
            .enumerate()
            .map(|(i, &a)| a - i as i64)
            .sum()
    }

    /// The sequence `d - a_{r-j}`, seen from the other side of a node.
    pub fn complement(&self) -> VanishingSequence {
        let entries = self.entries.iter().rev().map(|&a| self.d - a).collect();
        VanishingSequence {
            r: self.r,
            d: self.d,
            entries,
        }
    }
}

impl fmt::Display for VanishingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.entries)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, entries: &[i64]) -> fmt::Result {
    write!(f, "(")?;
    for (i, x) in entries.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

/// `rho(g, r, d) - sum alpha_j`.
pub fn rho_ramified(p: &SeriesParams, alpha: &SchubertIndex) -> Result<i64> {
    p.check_context(alpha.r, alpha.d)?;
    Ok(p.rho() - alpha.sum())
}

/// Existence test for a `g^r_d` with ramification at least `alpha` at a general
/// point of a general pointed curve of genus `p.g`:
/// `sum max(alpha_i + g - d + r, 0) <= g`.
pub fn eh_exists(p: &SeriesParams, alpha: &SchubertIndex) -> Result<bool> {
    p.check_context(alpha.r, alpha.d)?;
    let excess: i64 = alpha
        .entries
        .iter()
        .map(|&a| (a + p.speciality()).max(0))
        .sum();
    Ok(excess <= p.g)
}

/// Dimension of the ramified Brill-Noether variety, or [`EhDimension::Empty`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EhDimension {
    Dimension(i64),
    Empty,
}

impl EhDimension {
    pub fn dimension(&self) -> Option<i64> {
        match self {
            EhDimension::Dimension(n) => Some(*n),
            EhDimension::Empty => None,
        }
    }
}

pub fn eh_dimension(p: &SeriesParams, alpha: &SchubertIndex) -> Result<EhDimension> {
    if eh_exists(p, alpha)? {
        Ok(EhDimension::Dimension(rho_ramified(p, alpha)?))
    } else {
        Ok(EhDimension::Empty)
    }
}

/// All Schubert indices of type `(r, d)`, in lexicographic order.
pub fn schubert_indices(r: i64, d: i64) -> Vec<SchubertIndex> {
    let mut out = Vec::new();
    if r < 0 || d < r {
        return out;
    }
    let mut current = Vec::with_capacity(r as usize + 1);
    fill_indices(r, d, 0, &mut current, &mut out);
    out
}

fn fill_indices(r: i64, d: i64, lo: i64, current: &mut Vec<i64>, out: &mut Vec<SchubertIndex>) {
    if current.len() as i64 == r + 1 {
        out.push(SchubertIndex {
            r,
            d,
            entries: current.clone(),
        });
        return;
    }
    for x in lo..=d - r {
        current.push(x);
        fill_indices(r, d, x, current, out);
        current.pop();
    }
}
