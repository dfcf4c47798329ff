//! Inductive machinery on the branching semigroup.
//!
//! `Λ_B(σ, m)` is the finite set of shapes of order type `σ` with `λ₁ ≤ m`.
//! The splitting operations below all work through `h_σ`, which turns shape
//! addition into vector addition on `Λ_2n`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rearrange::{h_sigma, h_sigma_inverse, Rearrangement};
use crate::sl2::{l_module, LModule};
use crate::weights::{DominantWeight, OrderType, SkewShape};

/// Coordinates of `z ∈ Λ_2n` in the staircase basis `ϖ_i = (1,…,1,0,…,0)`
/// (`i` ones): `n_i = z_i − z_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FundamentalCoords(Vec<u32>);

impl FundamentalCoords {
    pub fn new(coords: Vec<u32>) -> Self {
        FundamentalCoords(coords)
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }
}

pub fn to_fundamental(z: &Rearrangement) -> FundamentalCoords {
    let e = z.entries();
    FundamentalCoords(
        (0..e.len())
            .map(|i| e[i] - e.get(i + 1).copied().unwrap_or(0))
            .collect(),
    )
}

pub fn from_fundamental(c: &FundamentalCoords) -> Result<Rearrangement> {
    let mut acc = 0u32;
    let mut z: Vec<u32> =
        c.0.iter()
            .rev()
            .map(|&v| {
                acc += v;
                acc
            })
            .collect();
    z.reverse();
    Rearrangement::new(z)
}

/// `p_max = λ₁`.
pub fn p_max(p: &SkewShape) -> u32 {
    p.lambda().first()
}

/// `Λ_B(σ, m)`, listed through `h_σ⁻¹` in lexicographically decreasing order
/// of `h_σ(p)`.
pub fn enumerate_filtration(sigma: &OrderType, m: u32) -> Vec<SkewShape> {
    let n = sigma.rank();
    DominantWeight::enumerate(2 * n - 1, m)
        .into_iter()
        .map(|w| {
            let mut z: Vec<u32> = w.into();
            z.push(0);
            h_sigma_inverse(sigma, &Rearrangement::from_unchecked(z))
                .expect("dominant sequences ending in zero are in the image")
        })
        .collect()
}

fn in_filtration(sigma: &OrderType, p: &SkewShape, m: u32) -> bool {
    p.is_of_order_type(sigma) && p_max(p) <= m
}

fn require_type(sigma: &OrderType, p: &SkewShape) -> Result<()> {
    if p.is_of_order_type(sigma) {
        Ok(())
    } else {
        Err(Error::NotOfOrderType {
            shape: p.to_string(),
            order_type: sigma.to_string(),
        })
    }
}

/// Splits `p` with `p_max = m > 1` as `p′ + p″`, `p′ = h_σ⁻¹(z′)` where `z′`
/// is the 0/1 indicator of `h_σ(p)`.
///
/// Both parts lie in `Λ_B(σ, m−1)`, and also in `Λ_B(τ, m−1)` whenever `p`
/// is of order type `τ`.
pub fn peel(sigma: &OrderType, p: &SkewShape, tau: Option<&OrderType>) -> Result<(SkewShape, SkewShape)> {
    let z = h_sigma(sigma, p)?;
    if let Some(tau) = tau {
        require_type(tau, p)?;
    }
    let m = p_max(p);
    if m <= 1 {
        return Err(Error::PeelLevel(m));
    }
    let ones: Vec<u32> = z.entries().iter().map(|&v| u32::from(v >= 1)).collect();
    let rest: Vec<u32> = z.entries().iter().zip(&ones).map(|(v, o)| v - o).collect();
    let p1 = h_sigma_inverse(sigma, &Rearrangement::from_unchecked(ones))?;
    let p2 = h_sigma_inverse(sigma, &Rearrangement::from_unchecked(rest))?;
    debug_assert!(tau.is_none_or(|t| p1.is_of_order_type(t) && p2.is_of_order_type(t)));
    Ok((p1, p2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum MegapeelCase {
    /// `A^{q₁} ⊗ … ⊗ A^{qₙ} ≅ A^p`.
    TensorSplit,
    /// `A^p` is `SL₂`-irreducible and the product projects onto it.
    CartanProjection,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MegapeelResult {
    pub parts: Vec<SkewShape>,
    pub case: MegapeelCase,
}

/// The vectors `ξ₁, …, ξₙ` summing to `h_σ(p) = (x₁,y₁,…,xₙ,yₙ)`:
/// `ξ_i` repeats `x_i − x_{i+1}` in its first `2i−1` slots followed by
/// `y_i − x_{i+1}`, and `ξₙ = (xₙ,…,xₙ,0)`.
pub fn megapeel_vectors(z: &Rearrangement) -> Vec<Rearrangement> {
    let n = z.rank();
    let mut out = Vec::with_capacity(n);
    for i in 1..n {
        let step = z.x(i) - z.x(i + 1);
        let mut v = vec![step; 2 * i - 1];
        v.push(z.y(i) - z.x(i + 1));
        v.resize(2 * n, 0);
        out.push(Rearrangement::from_unchecked(v));
    }
    let mut last = vec![z.x(n); 2 * n - 1];
    last.push(0);
    out.push(Rearrangement::from_unchecked(last));
    out
}

/// Factors `p` (with `p_max = m > 1`) into `n` parts of `Λ_B(σ, m−1)` whose
/// `L`-modules are `SL₂`-irreducible.
///
/// For rank 1 the cartan case returns the two peeled parts.
pub fn megapeel(sigma: &OrderType, p: &SkewShape) -> Result<MegapeelResult> {
    let z = h_sigma(sigma, p)?;
    let m = p_max(p);
    if m <= 1 {
        return Err(Error::PeelLevel(m));
    }
    let n = sigma.rank();
    let parts = megapeel_vectors(&z)
        .iter()
        .map(|xi| h_sigma_inverse(sigma, xi))
        .collect::<Result<Vec<_>>>()?;

    if parts.iter().all(|q| in_filtration(sigma, q, m - 1)) {
        return Ok(MegapeelResult {
            parts,
            case: MegapeelCase::TensorSplit,
        });
    }

    debug_assert!(is_cartan_shape(&z, m));
    let (p1, p2) = peel(sigma, p, None)?;
    let mut parts = vec![p1, p2];
    parts.resize(n.max(2), SkewShape::zero(n));
    Ok(MegapeelResult {
        parts,
        case: MegapeelCase::CartanProjection,
    })
}

/// Whether `z = (m,…,m,b,0,…,0)` with `b ≤ m` in an even (1-based) slot.
pub fn is_cartan_shape(z: &Rearrangement, m: u32) -> bool {
    let e = z.entries();
    let lead = e.iter().take_while(|&&v| v == m).count();
    if lead == 0 {
        return false;
    }
    // Position (1-based) of b: the first entry after the run of m's, or the
    // last m itself when b = m.
    let tail_zero = |from: usize| e[from..].iter().all(|&v| v == 0);
    (lead % 2 == 1 && lead < e.len() && tail_zero(lead + 1)) || (lead % 2 == 0 && tail_zero(lead))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubicSplit {
    pub t_prime: SkewShape,
    pub t_double: SkewShape,
    pub r_prime: SkewShape,
    pub r_double: SkewShape,
}

/// Given `p′, p″, q′, q″ ∈ Λ_B(σ)` with `p′ + p″ = q′ + q″`, produces
/// `t′ + r′ = p′`, `t″ + r″ = p″`, `r′ + r″ = q′`, `t′ + t″ = q″`.
///
/// With fundamental coordinates `n′, n″` of `p′, p″` and `m″` of `q″`:
/// `τ″ = min(n″, m″)`, `τ′ = m″ − τ″`, `ρ″ = n″ − τ″`, `ρ′ = n′ − τ′`.
pub fn cubic_split(
    sigma: &OrderType,
    p_prime: &SkewShape,
    p_double: &SkewShape,
    q_prime: &SkewShape,
    q_double: &SkewShape,
) -> Result<CubicSplit> {
    for s in [p_prime, p_double, q_prime, q_double] {
        require_type(sigma, s)?;
    }
    if p_prime.add(p_double)? != q_prime.add(q_double)? {
        return Err(Error::SumMismatch);
    }
    let n1 = to_fundamental(&h_sigma(sigma, p_prime)?);
    let n2 = to_fundamental(&h_sigma(sigma, p_double)?);
    let m2 = to_fundamental(&h_sigma(sigma, q_double)?);

    let len = n1.0.len();
    let (mut tau1, mut tau2, mut rho1, mut rho2) = (
        Vec::with_capacity(len),
        Vec::with_capacity(len),
        Vec::with_capacity(len),
        Vec::with_capacity(len),
    );
    for i in 0..len {
        let common = n2.0[i].min(m2.0[i]);
        tau1.push(m2.0[i] - common);
        tau2.push(common);
        rho2.push(n2.0[i] - common);
        // n′ − m″ + min(n″, m″) = min(n′, m′) ≥ 0 under the sum constraint.
        let r1 = i64::from(n1.0[i]) - i64::from(m2.0[i]) + i64::from(common);
        rho1.push(u32::try_from(r1).map_err(|_| Error::SumMismatch)?);
    }
    let back = |c: Vec<u32>| -> Result<SkewShape> { h_sigma_inverse(sigma, &from_fundamental(&FundamentalCoords(c))?) };
    Ok(CubicSplit {
        t_prime: back(tau1)?,
        t_double: back(tau2)?,
        r_prime: back(rho1)?,
        r_double: back(rho2)?,
    })
}

/// The `L`-modules of the parts, for callers checking the tensor identity.
pub fn part_modules(parts: &[SkewShape]) -> Result<Vec<LModule>> {
    parts.iter().map(l_module).collect()
}
