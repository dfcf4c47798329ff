//! Dominant weights, skew shapes and order types.
//!
//! A dominant weight of length `n` is a weakly decreasing sequence of
//! non-negative integers; it labels an irreducible polynomial representation
//! of `GL_n` or an irreducible representation of `Sp_2n`. Lengths are
//! structural: `(2,1)` and `(2,1,0)` are different weights.
//!
//! A skew shape `λ/μ` pairs `μ` of length `n-1` with `λ` of length `n`. It
//! lies in the branching semigroup when `μ` double interlaces `λ⁺`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Returns true iff `seq` is weakly decreasing and non-negative.
pub fn is_dominant(seq: &[i64]) -> bool {
    seq.iter().all(|&v| v >= 0) && seq.windows(2).all(|w| w[0] >= w[1])
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct DominantWeight(Vec<u32>);

impl DominantWeight {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if let Some(i) = entries.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotDominant {
                index: i + 1,
                left: entries[i],
                right: entries[i + 1],
            });
        }
        Ok(DominantWeight(entries))
    }

    pub fn zero(len: usize) -> Self {
        DominantWeight(vec![0; len])
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// First entry, or 0 for the empty weight.
    pub fn first(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// `|λ|`, the sum of the entries.
    pub fn size(&self) -> u64 {
        self.0.iter().map(|&v| u64::from(v)).sum()
    }

    /// `λ⁺`: the same weight with one zero appended.
    pub fn plus_extend(&self) -> Self {
        let mut entries = self.0.clone();
        entries.push(0);
        DominantWeight(entries)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(DominantWeight(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    /// Every dominant weight of length `len` with entries at most `max_entry`,
    /// in lexicographically decreasing order.
    pub fn enumerate(len: usize, max_entry: u32) -> Vec<Self> {
        fn rec(len: usize, bound: u32, prefix: &mut Vec<u32>, out: &mut Vec<DominantWeight>) {
            if prefix.len() == len {
                out.push(DominantWeight(prefix.clone()));
                return;
            }
            for v in (0..=bound).rev() {
                prefix.push(v);
                rec(len, v, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(len, max_entry, &mut Vec::with_capacity(len), &mut out);
        out
    }

    pub(crate) fn from_unchecked(entries: Vec<u32>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0] >= w[1]));
        DominantWeight(entries)
    }
}

impl TryFrom<Vec<u32>> for DominantWeight {
    type Error = Error;

    fn try_from(entries: Vec<u32>) -> Result<Self> {
        DominantWeight::new(entries)
    }
}

impl From<DominantWeight> for Vec<u32> {
    fn from(w: DominantWeight) -> Self {
        w.0
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for DominantWeight {
    type Err = Error;

    /// Parses comma-separated decimal integers; the empty string is the
    /// empty weight.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(DominantWeight::default());
        }
        let entries = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<u32>().map_err(|e| Error::Parse {
                    input: s.to_string(),
                    reason: format!("bad entry `{tok}`: {e}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        DominantWeight::new(entries)
    }
}

/// `λ_i ≥ μ_i ≥ λ_{i+1}` for all i. Requires `len(λ) = len(μ) + 1`.
pub fn interlaces(mu: &DominantWeight, lambda: &DominantWeight) -> Result<bool> {
    if lambda.len() != mu.len() + 1 {
        return Err(Error::LengthMismatch {
            expected: mu.len() + 1,
            found: lambda.len(),
        });
    }
    let (m, l) = (mu.entries(), lambda.entries());
    Ok((0..m.len()).all(|i| l[i] >= m[i] && m[i] >= l[i + 1]))
}

/// `λ_i ≥ μ_i ≥ λ_{i+2}` for all i.
///
/// `λ` may be two longer than `μ`, or one longer, in which case the test is
/// against `λ⁺`.
pub fn double_interlaces(mu: &DominantWeight, lambda: &DominantWeight) -> Result<bool> {
    if lambda.len() == mu.len() + 1 {
        return double_interlaces(mu, &lambda.plus_extend());
    }
    if lambda.len() != mu.len() + 2 {
        return Err(Error::LengthMismatch {
            expected: mu.len() + 2,
            found: lambda.len(),
        });
    }
    let (m, l) = (mu.entries(), lambda.entries());
    Ok((0..m.len()).all(|i| l[i] >= m[i] && m[i] >= l[i + 2]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "GE")]
    Ge,
    #[serde(rename = "LE")]
    Le,
}

impl Relation {
    pub fn symbol(self) -> char {
        match self {
            Relation::Ge => '≥',
            Relation::Le => '≤',
        }
    }
}

/// A word over `{≥, ≤}` of length `n-1`, recording how `μ_i` compares with
/// `λ_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OrderType(Vec<Relation>);

impl OrderType {
    pub fn new(letters: Vec<Relation>) -> Self {
        OrderType(letters)
    }

    pub fn letters(&self) -> &[Relation] {
        &self.0
    }

    /// The rank `n` of shapes this order type applies to.
    pub fn rank(&self) -> usize {
        self.0.len() + 1
    }

    /// All `2^(n-1)` order types for rank `n`, lexicographic with `GE < LE`.
    pub fn all(rank: usize) -> Vec<Self> {
        let len = rank.saturating_sub(1);
        (0..1u64 << len)
            .map(|bits| {
                OrderType(
                    (0..len)
                        .map(|i| {
                            if bits >> (len - 1 - i) & 1 == 0 {
                                Relation::Ge
                            } else {
                                Relation::Le
                            }
                        })
                        .collect(),
                )
            })
            .collect()
    }
}

impl fmt::Display for OrderType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for r in &self.0 {
            write!(f, "{}", r.symbol())?;
        }
        f.write_str(")")
    }
}

/// A pair `λ/μ` with `len(μ) = n-1`, `len(λ) = n`. Membership in the
/// branching semigroup is a predicate, not an invariant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewShape {
    lambda: DominantWeight,
    mu: DominantWeight,
}

impl SkewShape {
    pub fn new(mu: DominantWeight, lambda: DominantWeight) -> Result<Self> {
        if lambda.is_empty() || mu.len() + 1 != lambda.len() {
            return Err(Error::LengthMismatch {
                expected: mu.len() + 1,
                found: lambda.len(),
            });
        }
        Ok(SkewShape { lambda, mu })
    }

    /// Convenience constructor from raw entries.
    pub fn from_entries(mu: &[u32], lambda: &[u32]) -> Result<Self> {
        SkewShape::new(DominantWeight::new(mu.to_vec())?, DominantWeight::new(lambda.to_vec())?)
    }

    /// The zero shape `0/0` of rank `n`.
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1, "rank must be positive");
        SkewShape {
            lambda: DominantWeight::zero(n),
            mu: DominantWeight::zero(n - 1),
        }
    }

    pub fn mu(&self) -> &DominantWeight {
        &self.mu
    }

    pub fn lambda(&self) -> &DominantWeight {
        &self.lambda
    }

    pub fn rank(&self) -> usize {
        self.lambda.len()
    }

    pub fn in_branching_semigroup(&self) -> bool {
        let (m, l) = (self.mu.entries(), self.lambda.entries());
        (0..m.len()).all(|i| l[i] >= m[i] && m[i] >= l.get(i + 2).copied().unwrap_or(0))
    }

    /// Whether the shape lies in `Λ_B(σ)`.
    pub fn is_of_order_type(&self, sigma: &OrderType) -> bool {
        if sigma.rank() != self.rank() || !self.in_branching_semigroup() {
            return false;
        }
        let (m, l) = (self.mu.entries(), self.lambda.entries());
        sigma.letters().iter().enumerate().all(|(i, rel)| match rel {
            Relation::Ge => m[i] >= l[i + 1],
            Relation::Le => m[i] <= l[i + 1],
        })
    }

    /// Every order type of the shape; `2^k` of them where `k` counts the
    /// ties `μ_i = λ_{i+1}`. Lexicographic with `GE < LE`.
    pub fn order_types(&self) -> Result<Vec<OrderType>> {
        if !self.in_branching_semigroup() {
            return Err(Error::NotInBranchingSemigroup(self.to_string()));
        }
        let (m, l) = (self.mu.entries(), self.lambda.entries());
        let mut out = vec![Vec::with_capacity(m.len())];
        for i in 0..m.len() {
            let choices: &[Relation] = match m[i].cmp(&l[i + 1]) {
                std::cmp::Ordering::Greater => &[Relation::Ge],
                std::cmp::Ordering::Less => &[Relation::Le],
                std::cmp::Ordering::Equal => &[Relation::Ge, Relation::Le],
            };
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    choices.iter().map(move |&c| {
                        let mut w = prefix.clone();
                        w.push(c);
                        w
                    })
                })
                .collect();
        }
        Ok(out.into_iter().map(OrderType).collect())
    }

    /// The least order type of the shape.
    pub fn canonical_order_type(&self) -> Result<OrderType> {
        Ok(self.order_types()?.swap_remove(0))
    }

    /// Entry-wise sum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(SkewShape {
            lambda: self.lambda.add(&other.lambda)?,
            mu: self.mu.add(&other.mu)?,
        })
    }

    /// Entry-wise difference, when both results are dominant.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        if self.rank() != other.rank() {
            return None;
        }
        let sub = |a: &DominantWeight, b: &DominantWeight| -> Option<DominantWeight> {
            let v = a
                .entries()
                .iter()
                .zip(b.entries())
                .map(|(x, y)| x.checked_sub(*y))
                .collect::<Option<Vec<_>>>()?;
            DominantWeight::new(v).ok()
        };
        Some(SkewShape {
            lambda: sub(&self.lambda, &other.lambda)?,
            mu: sub(&self.mu, &other.mu)?,
        })
    }

    /// Every shape of rank `n` (in or out of the branching semigroup) with
    /// entries at most `max_entry`.
    pub fn enumerate(n: usize, max_entry: u32) -> Vec<Self> {
        let lambdas = DominantWeight::enumerate(n, max_entry);
        let mus = DominantWeight::enumerate(n - 1, max_entry);
        lambdas
            .iter()
            .flat_map(|l| {
                mus.iter().map(move |m| SkewShape {
                    lambda: l.clone(),
                    mu: m.clone(),
                })
            })
            .collect()
    }

    /// Every shape of rank `n` in the branching semigroup with `λ₁ ≤ max_entry`.
    pub fn enumerate_branching(n: usize, max_entry: u32) -> Vec<Self> {
        Self::enumerate(n, max_entry)
            .into_iter()
            .filter(SkewShape::in_branching_semigroup)
            .collect()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.lambda, self.mu)
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    /// Parses `LAMBDA/MU`, e.g. `2,1,0/2,0`.
    fn from_str(s: &str) -> Result<Self> {
        let (l, m) = s.split_once('/').ok_or_else(|| Error::Parse {
            input: s.to_string(),
            reason: "expected LAMBDA/MU".to_string(),
        })?;
        SkewShape::new(m.parse()?, l.parse()?)
    }
}
