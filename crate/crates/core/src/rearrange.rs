//! The rearrangement function and the order-type semigroup isomorphisms.
//!
//! For `μ ≪ λ` (with `len(λ) = len(μ) + 2`) the non-increasing rearrangement
//! of `(μ₁,…,μ_{n-1},λ₁,…,λ_{n+1})` is written `(x₁,y₁,…,xₙ,yₙ)`. On the
//! branching semigroup the map `h(λ/μ) = f(μ, λ⁺)` lands in the sequences of
//! `Λ_2n` ending in zero, and its restriction `h_σ` to a fixed order type is a
//! bijection onto them with an explicit inverse given by the index maps `a`
//! and `b`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weights::{double_interlaces, interlaces, DominantWeight, OrderType, Relation, SkewShape};

/// An element `(x₁,y₁,…,xₙ,yₙ)` of `Λ_2n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Rearrangement(Vec<u32>);

impl Rearrangement {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if !entries.len().is_multiple_of(2) {
            return Err(Error::LengthMismatch {
                expected: entries.len() + 1,
                found: entries.len(),
            });
        }
        DominantWeight::new(entries.clone())?;
        Ok(Rearrangement(entries))
    }

    pub fn zero(rank: usize) -> Self {
        Rearrangement(vec![0; 2 * rank])
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len() / 2
    }

    /// `x_i`, 1-based.
    pub fn x(&self, i: usize) -> u32 {
        self.0[2 * (i - 1)]
    }

    /// `y_i`, 1-based.
    pub fn y(&self, i: usize) -> u32 {
        self.0[2 * i - 1]
    }

    pub fn ends_in_zero(&self) -> bool {
        self.0.last().is_none_or(|&v| v == 0)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.0.len() != other.0.len() {
            return Err(Error::LengthMismatch {
                expected: self.0.len(),
                found: other.0.len(),
            });
        }
        Ok(Rearrangement(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    pub(crate) fn from_unchecked(entries: Vec<u32>) -> Self {
        debug_assert!(entries.len().is_multiple_of(2) && entries.windows(2).all(|w| w[0] >= w[1]));
        Rearrangement(entries)
    }
}

impl fmt::Display for Rearrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// The index maps of an order type, as 1-based positions into `{1,…,2n}`.
///
/// `μ_i` sits at position `a(i)` of `h_σ(p)` and `λ⁺_j` at position `b(j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexMaps {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

pub fn index_maps(sigma: &OrderType) -> IndexMaps {
    let n = sigma.rank();
    let mut a = Vec::with_capacity(n - 1);
    let mut b = Vec::with_capacity(n + 1);
    b.push(1);
    for (k, rel) in sigma.letters().iter().enumerate() {
        let i = k + 1;
        match rel {
            Relation::Ge => {
                a.push(2 * i);
                b.push(2 * i + 1);
            }
            Relation::Le => {
                a.push(2 * i + 1);
                b.push(2 * i);
            }
        }
    }
    b.push(2 * n);
    IndexMaps { a, b }
}

/// `f(μ, λ)` for `len(λ) = len(μ) + 2` and `μ ≪ λ`, via the closed form
/// `(λ₁, max(μ₁,λ₂), min(μ₁,λ₂), …, max(μ_{n-1},λ_n), min(μ_{n-1},λ_n), λ_{n+1})`.
pub fn rearrange(mu: &DominantWeight, lambda: &DominantWeight) -> Result<Rearrangement> {
    if !double_interlaces(mu, lambda)? || lambda.len() != mu.len() + 2 {
        return Err(Error::NotInBranchingSemigroup(format!("{lambda}/{mu}")));
    }
    let (m, l) = (mu.entries(), lambda.entries());
    let mut z = Vec::with_capacity(l.len() + m.len());
    z.push(l[0]);
    for i in 0..m.len() {
        z.push(m[i].max(l[i + 1]));
        z.push(m[i].min(l[i + 1]));
    }
    z.push(l[l.len() - 1]);
    Ok(Rearrangement::from_unchecked(z))
}

/// `f_σ`: the rearrangement restricted to pairs `(μ, λ)`, `λ ∈ Λ_{n+1}`, of
/// order type `σ`.
pub fn f_sigma(sigma: &OrderType, mu: &DominantWeight, lambda: &DominantWeight) -> Result<Rearrangement> {
    let z = rearrange(mu, lambda)?;
    let (m, l) = (mu.entries(), lambda.entries());
    let fits = sigma.rank() == lambda.len() - 1
        && sigma.letters().iter().enumerate().all(|(i, rel)| match rel {
            Relation::Ge => m[i] >= l[i + 1],
            Relation::Le => m[i] <= l[i + 1],
        });
    if !fits {
        return Err(Error::NotOfOrderType {
            shape: format!("{lambda}/{mu}"),
            order_type: sigma.to_string(),
        });
    }
    Ok(z)
}

/// `h(λ/μ) = f(μ, λ⁺)`.
pub fn h(p: &SkewShape) -> Result<Rearrangement> {
    if !p.in_branching_semigroup() {
        return Err(Error::NotInBranchingSemigroup(p.to_string()));
    }
    rearrange(p.mu(), &p.lambda().plus_extend())
}

/// `r_i(p) = x_i − y_i`.
pub fn r(p: &SkewShape) -> Result<Vec<u32>> {
    let z = h(p)?;
    Ok((1..=z.rank()).map(|i| z.x(i) - z.y(i)).collect())
}

/// `s_i(p) = y_i − x_{i+1}`.
pub fn s(p: &SkewShape) -> Result<Vec<u32>> {
    let z = h(p)?;
    Ok((1..z.rank()).map(|i| z.y(i) - z.x(i + 1)).collect())
}

pub fn h_sigma(sigma: &OrderType, p: &SkewShape) -> Result<Rearrangement> {
    if !p.is_of_order_type(sigma) {
        return Err(Error::NotOfOrderType {
            shape: p.to_string(),
            order_type: sigma.to_string(),
        });
    }
    let z = h(p)?;
    debug_assert!({
        let maps = index_maps(sigma);
        let lp = p.lambda().plus_extend();
        maps.a.iter().zip(p.mu().entries()).all(|(&k, &v)| z.0[k - 1] == v)
            && maps.b.iter().zip(lp.entries()).all(|(&k, &v)| z.0[k - 1] == v)
    });
    Ok(z)
}

/// Inverse of `h_σ` on the sequences of `Λ_2n` ending in zero.
pub fn h_sigma_inverse(sigma: &OrderType, z: &Rearrangement) -> Result<SkewShape> {
    if z.rank() != sigma.rank() {
        return Err(Error::LengthMismatch {
            expected: 2 * sigma.rank(),
            found: z.0.len(),
        });
    }
    if !z.ends_in_zero() {
        return Err(Error::NotEndingInZero(*z.0.last().unwrap()));
    }
    let n = sigma.rank();
    let maps = index_maps(sigma);
    let mu = maps.a.iter().map(|&k| z.0[k - 1]).collect();
    let lambda = maps.b[..n].iter().map(|&k| z.0[k - 1]).collect();
    SkewShape::new(
        DominantWeight::from_unchecked(mu),
        DominantWeight::from_unchecked(lambda),
    )
}

/// Splits an intermediate weight of a sum of shapes sharing an order type.
///
/// Given `p, q` of a common order type and `γ` with `μ_p+μ_q < γ < (λ_p+λ_q)⁺`,
/// returns `(ν, ν′)` with `γ = ν + ν′`, `μ_p < ν < λ_p⁺` and `μ_q < ν′ < λ_q⁺`.
/// Takes the least admissible `ν_i = max(y_i, γ_i − x′_i)`.
pub fn peeling_split(p: &SkewShape, q: &SkewShape, gamma: &DominantWeight) -> Result<(DominantWeight, DominantWeight)> {
    let sigma = p
        .order_types()?
        .into_iter()
        .find(|s| q.is_of_order_type(s))
        .ok_or_else(|| Error::NotOfOrderType {
            shape: q.to_string(),
            order_type: p.canonical_order_type().map(|s| s.to_string()).unwrap_or_default(),
        })?;
    let sum = p.add(q)?;
    let not_between = || Error::NotIntermediate {
        gamma: gamma.to_string(),
        shape: sum.to_string(),
    };
    if gamma.len() != p.rank() || !interlaces(sum.mu(), gamma)? || !interlaces(gamma, &sum.lambda().plus_extend())? {
        return Err(not_between());
    }
    let (zp, zq) = (h_sigma(&sigma, p)?, h_sigma(&sigma, q)?);
    let mut nu = Vec::with_capacity(gamma.len());
    let mut nu2 = Vec::with_capacity(gamma.len());
    for (k, &g) in gamma.entries().iter().enumerate() {
        let i = k + 1;
        let g = i64::from(g);
        let lo = i64::from(zp.y(i)).max(g - i64::from(zq.x(i)));
        let hi = i64::from(zp.x(i)).min(g - i64::from(zq.y(i)));
        if lo > hi {
            return Err(not_between());
        }
        nu.push(lo as u32);
        nu2.push((g - lo) as u32);
    }
    Ok((DominantWeight::new(nu)?, DominantWeight::new(nu2)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use Relation::{Ge, Le};

    fn w(v: &[u32]) -> DominantWeight {
        DominantWeight::new(v.to_vec()).unwrap()
    }

    fn shape(mu: &[u32], lambda: &[u32]) -> SkewShape {
        SkewShape::from_entries(mu, lambda).unwrap()
    }

    fn z(v: &[u32]) -> Rearrangement {
        Rearrangement::new(v.to_vec()).unwrap()
    }

    fn ot(v: &[Relation]) -> OrderType {
        OrderType::new(v.to_vec())
    }

    /// Oracle: generic sort of the concatenated entries.
    fn sorted_concat(mu: &[u32], lambda: &[u32]) -> Vec<u32> {
        let mut all: Vec<u32> = mu.iter().chain(lambda).copied().collect();
        all.sort_unstable_by(|a, b| b.cmp(a));
        all
    }

    #[test]
    fn rearrange_examples() {
        assert_eq!(
            rearrange(&w(&[2, 0]), &w(&[4, 2, 0, 0])).unwrap(),
            z(&[4, 2, 2, 0, 0, 0])
        );
        assert_eq!(
            rearrange(&w(&[3, 0]), &w(&[3, 2, 1, 0])).unwrap(),
            z(&[3, 3, 2, 1, 0, 0])
        );
        assert_eq!(rearrange(&w(&[]), &w(&[7, 0])).unwrap(), z(&[7, 0]));
        assert!(rearrange(&w(&[5, 0]), &w(&[3, 2, 1, 0])).is_err());
    }

    #[test]
    fn closed_form_matches_sort() {
        for p in SkewShape::enumerate_branching(4, 4) {
            let lp = p.lambda().plus_extend();
            assert_eq!(
                h(&p).unwrap().entries(),
                sorted_concat(p.mu().entries(), lp.entries()).as_slice(),
                "{p}"
            );
        }
    }

    #[test]
    fn h_examples() {
        assert_eq!(h(&shape(&[2, 0], &[2, 1, 0])).unwrap(), z(&[2, 2, 1, 0, 0, 0]));
        assert_eq!(h(&shape(&[0, 0], &[2, 1, 0])).unwrap(), z(&[2, 1, 0, 0, 0, 0]));
        assert_eq!(h(&SkewShape::zero(3)).unwrap(), Rearrangement::zero(3));
        assert!(matches!(
            h(&shape(&[3], &[1, 0])),
            Err(Error::NotInBranchingSemigroup(_))
        ));
    }

    #[test]
    fn r_and_s_examples() {
        assert_eq!(r(&shape(&[2, 0], &[2, 1, 0])).unwrap(), vec![0, 1, 0]);
        assert_eq!(r(&shape(&[2, 0], &[4, 2, 0])).unwrap(), vec![2, 2, 0]);
        assert_eq!(r(&SkewShape::zero(4)).unwrap(), vec![0; 4]);
        assert_eq!(s(&shape(&[2, 0], &[2, 1, 0])).unwrap(), vec![1, 0]);
        assert_eq!(s(&SkewShape::zero(3)).unwrap(), vec![0, 0]);
        assert_eq!(s(&shape(&[3, 0], &[3, 2, 1])).unwrap(), vec![1, 1]);
        assert!(r(&shape(&[3], &[1, 0])).is_err());
    }

    #[test]
    fn index_map_examples() {
        let m = index_maps(&ot(&[Ge, Le]));
        assert_eq!((m.a, m.b), (vec![2, 5], vec![1, 3, 4, 6]));
        let m = index_maps(&ot(&[Ge]));
        assert_eq!((m.a, m.b), (vec![2], vec![1, 3, 4]));
        let m = index_maps(&ot(&[Le]));
        assert_eq!((m.a, m.b), (vec![3], vec![1, 2, 4]));
    }

    #[test]
    fn index_maps_partition_positions() {
        for n in 1..=5 {
            for sigma in OrderType::all(n) {
                let m = index_maps(&sigma);
                assert!(m.a.windows(2).all(|w| w[0] < w[1]));
                assert!(m.b.windows(2).all(|w| w[0] < w[1]));
                let mut all: Vec<usize> = m.a.iter().chain(&m.b).copied().collect();
                all.sort_unstable();
                assert_eq!(all, (1..=2 * n).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn h_sigma_examples() {
        let sigma = ot(&[Ge, Le]);
        let p = shape(&[3, 0], &[3, 2, 1]);
        let hz = h_sigma(&sigma, &p).unwrap();
        assert_eq!(hz, z(&[3, 3, 2, 1, 0, 0]));
        assert_eq!((hz.entries()[1], hz.entries()[4]), (3, 0));
        assert_eq!(h_sigma_inverse(&sigma, &hz).unwrap(), p);

        let sigma = ot(&[Ge, Ge]);
        let p = shape(&[2, 0], &[2, 1, 0]);
        assert_eq!(h_sigma(&sigma, &p).unwrap(), z(&[2, 2, 1, 0, 0, 0]));
        assert_eq!(h_sigma_inverse(&sigma, &z(&[2, 2, 1, 0, 0, 0])).unwrap(), p);

        for sigma in OrderType::all(3) {
            assert_eq!(h_sigma(&sigma, &SkewShape::zero(3)).unwrap(), Rearrangement::zero(3));
            assert_eq!(
                h_sigma_inverse(&sigma, &Rearrangement::zero(3)).unwrap(),
                SkewShape::zero(3)
            );
        }
    }

    #[test]
    fn h_sigma_errors() {
        assert!(matches!(
            h_sigma(&ot(&[Le, Le]), &shape(&[3, 0], &[3, 2, 1])),
            Err(Error::NotOfOrderType { .. })
        ));
        assert!(matches!(
            h_sigma_inverse(&ot(&[Ge]), &z(&[1, 1, 1, 1])),
            Err(Error::NotEndingInZero(1))
        ));
        assert!(h_sigma_inverse(&ot(&[Ge]), &z(&[1, 0])).is_err());
        assert!(Rearrangement::new(vec![0, 1]).is_err());
        assert!(Rearrangement::new(vec![1]).is_err());
    }

    #[test]
    fn f_sigma_agrees_with_h_sigma() {
        for p in SkewShape::enumerate_branching(3, 3) {
            for sigma in p.order_types().unwrap() {
                assert_eq!(
                    f_sigma(&sigma, p.mu(), &p.lambda().plus_extend()).unwrap(),
                    h_sigma(&sigma, &p).unwrap()
                );
            }
        }
        assert!(f_sigma(&ot(&[Le, Le]), &w(&[3, 0]), &w(&[3, 2, 1, 0])).is_err());
    }

    #[test]
    fn interlacing_window() {
        // μ < γ < λ⁺ iff y_i ≤ γ_i ≤ x_i, by brute force over all γ.
        for p in SkewShape::enumerate_branching(3, 3) {
            let hz = h(&p).unwrap();
            let lp = p.lambda().plus_extend();
            for gamma in DominantWeight::enumerate(3, 3) {
                let between = interlaces(p.mu(), &gamma).unwrap() && interlaces(&gamma, &lp).unwrap();
                let window = gamma
                    .entries()
                    .iter()
                    .enumerate()
                    .all(|(k, &g)| hz.y(k + 1) <= g && g <= hz.x(k + 1));
                assert_eq!(between, window, "{p} {gamma}");
            }
        }
    }

    #[test]
    fn peeling_split_example() {
        let p = shape(&[2, 0], &[2, 1, 0]);
        let q = shape(&[1, 0], &[1, 1, 0]);
        // h(p) = (2,2,1,0,0,0), h(q) = (1,1,1,0,0,0); both of type (≥≥).
        let gamma = w(&[3, 1, 0]);
        let (nu, nu2) = peeling_split(&p, &q, &gamma).unwrap();
        assert_eq!(nu, w(&[2, 0, 0]));
        assert_eq!(nu2, w(&[1, 1, 0]));
    }

    #[test]
    fn peeling_split_rejects() {
        let p = shape(&[2, 0], &[2, 1, 0]);
        let q = shape(&[3, 0], &[3, 2, 1]);
        // Order types {(≥≥),(≥≤)} and {(≥≤)} share (≥≤).
        assert!(peeling_split(&p, &q, &w(&[9, 9, 9])).is_err());
        let p = shape(&[0], &[1, 1]); // (≤)
        let q = shape(&[1], &[1, 0]); // (≥)
        assert!(matches!(
            peeling_split(&p, &q, &w(&[1, 1])),
            Err(Error::NotOfOrderType { .. })
        ));
    }
}
