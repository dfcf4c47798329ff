//! Canonical one-dimensional decomposition of multiplicity spaces.
//!
//! `W^{λ/μ}` splits into lines `W^{λ/γ/μ}` indexed by the intermediate
//! weights `μ < γ < λ⁺`. The `T_L`-weight of the line is
//! `(2γ_i − x_i − y_i)_i` where `h(λ/μ) = (x₁,y₁,…,xₙ,yₙ)`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rearrange::h;
use crate::sl2::dim_mult_space;
use crate::weights::{DominantWeight, SkewShape};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisElement {
    pub shape: SkewShape,
    pub gamma: DominantWeight,
    pub weight: Vec<i64>,
}

/// Serialized form: `{"lambda": [...], "mu": [...], "gamma": [...], "weight": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisRecord {
    pub lambda: Vec<u32>,
    pub mu: Vec<u32>,
    pub gamma: Vec<u32>,
    pub weight: Vec<i64>,
}

impl From<&BasisElement> for BasisRecord {
    fn from(b: &BasisElement) -> Self {
        BasisRecord {
            lambda: b.shape.lambda().entries().to_vec(),
            mu: b.shape.mu().entries().to_vec(),
            gamma: b.gamma.entries().to_vec(),
            weight: b.weight.clone(),
        }
    }
}

/// All `γ ∈ Λ_n` with `μ < γ < λ⁺`, generated as the box `∏ [y_i, x_i]`,
/// lexicographically decreasing.
pub fn enumerate_intermediate(p: &SkewShape) -> Result<Vec<DominantWeight>> {
    let z = h(p)?;
    let n = z.rank();
    let mut out = vec![Vec::with_capacity(n)];
    for i in 1..=n {
        let (lo, hi) = (z.y(i), z.x(i));
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (lo..=hi).rev().map(move |g| {
                    let mut v = prefix.clone();
                    v.push(g);
                    v
                })
            })
            .collect();
    }
    Ok(out.into_iter().map(DominantWeight::from_unchecked).collect())
}

pub fn basis_of(p: &SkewShape) -> Result<Vec<BasisElement>> {
    let z = h(p)?;
    Ok(enumerate_intermediate(p)?
        .into_iter()
        .map(|gamma| {
            let weight = gamma
                .entries()
                .iter()
                .enumerate()
                .map(|(k, &g)| 2 * i64::from(g) - i64::from(z.x(k + 1)) - i64::from(z.y(k + 1)))
                .collect();
            BasisElement {
                shape: p.clone(),
                gamma,
                weight,
            }
        })
        .collect())
}

/// `Res^{Sp_2n}_{Sp_2n-2} W^λ`: each `μ ≪ λ⁺` with its multiplicity.
pub fn branch_decompose(lambda: &DominantWeight) -> Result<BTreeMap<DominantWeight, u64>> {
    if lambda.is_empty() {
        return Err(Error::LengthMismatch { expected: 1, found: 0 });
    }
    let lp = lambda.plus_extend();
    let (l, n) = (lp.entries(), lambda.len());
    let mut mus: Vec<Vec<u32>> = vec![Vec::with_capacity(n - 1)];
    for i in 0..n - 1 {
        mus = mus
            .into_iter()
            .flat_map(|prefix| {
                let hi = prefix.last().map_or(l[i], |&prev: &u32| prev.min(l[i]));
                (l[i + 2]..=hi).map(move |v| {
                    let mut w = prefix.clone();
                    w.push(v);
                    w
                })
            })
            .collect();
    }
    mus.into_iter()
        .map(|mu| {
            let p = SkewShape::new(DominantWeight::new(mu)?, lambda.clone())?;
            let d = dim_mult_space(&p);
            debug_assert!(d > 0);
            Ok((p.mu().clone(), d))
        })
        .collect()
}
