//! Brute-force character verification.
//!
//! Schur polynomials and symplectic Weyl characters are computed as exact
//! alternant ratios, independently of the rearrangement machinery, and then
//! used to check the branching identities that the combinatorics predicts.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::MultiLaurentPoly;
use crate::rearrange::r;
use crate::sl2::sl2_char;
use crate::weights::{interlaces, DominantWeight, SkewShape};

/// Leibniz expansion of a square matrix of polynomials in `arity` variables.
fn determinant(matrix: &[Vec<MultiLaurentPoly>], arity: usize) -> MultiLaurentPoly {
    let k = matrix.len();
    let mut total = MultiLaurentPoly::zero(arity);
    let mut perm: Vec<usize> = (0..k).collect();
    permute(&mut perm, 0, &mut |perm, sign| {
        let term = (0..k).fold(MultiLaurentPoly::one(arity), |acc, i| &acc * &matrix[i][perm[i]]);
        total = if sign { &total + &term } else { &total - &term };
    });
    total
}

/// Visits all permutations of `perm[start..]`, passing `true` for even ones.
fn permute(perm: &mut Vec<usize>, start: usize, visit: &mut impl FnMut(&[usize], bool)) {
    fn rec(perm: &mut Vec<usize>, start: usize, even: bool, visit: &mut impl FnMut(&[usize], bool)) {
        if start + 1 >= perm.len() {
            visit(perm, even);
            return;
        }
        for i in start..perm.len() {
            perm.swap(start, i);
            rec(perm, start + 1, even ^ (i != start), visit);
            perm.swap(start, i);
        }
    }
    rec(perm, start, true, visit);
}

fn power(index: usize, exp: i64, arity: usize) -> MultiLaurentPoly {
    let mut e = vec![0; arity];
    e[index] = exp;
    MultiLaurentPoly::monomial(e, 1)
}

/// `s_λ(x₁,…,x_k)` as the bialternant `det(x_j^{λ_i+k−i}) / det(x_j^{k−i})`.
pub fn schur(lambda: &DominantWeight, k: usize) -> Result<MultiLaurentPoly> {
    if lambda.len() > k && lambda.entries()[k..].iter().any(|&v| v != 0) {
        return Err(Error::LengthMismatch {
            expected: k,
            found: lambda.len(),
        });
    }
    let part = |i: usize| i64::from(lambda.entries().get(i).copied().unwrap_or(0));
    let num: Vec<Vec<_>> = (0..k)
        .map(|i| (0..k).map(|j| power(j, part(i) + (k - 1 - i) as i64, k)).collect())
        .collect();
    let den: Vec<Vec<_>> = (0..k)
        .map(|i| (0..k).map(|j| power(j, (k - 1 - i) as i64, k)).collect())
        .collect();
    determinant(&num, k).div_exact(&determinant(&den, k))
}

/// The irreducible `Sp_2n` character with highest weight `λ`, as
/// `det(x_j^{l_i} − x_j^{−l_i}) / det(x_j^{m_i} − x_j^{−m_i})` with
/// `l_i = λ_i + n − i + 1`, `m_i = n − i + 1`.
pub fn sp_char(lambda: &DominantWeight, n: usize) -> Result<MultiLaurentPoly> {
    if lambda.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: lambda.len(),
        });
    }
    let alternant = |shift: &dyn Fn(usize) -> i64| -> MultiLaurentPoly {
        let m: Vec<Vec<_>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| &power(j, shift(i), n) - &power(j, -shift(i), n))
                    .collect()
            })
            .collect();
        determinant(&m, n)
    };
    let num = alternant(&|i| i64::from(lambda.entries()[i]) + (n - i) as i64);
    let den = alternant(&|i| (n - i) as i64);
    num.div_exact(&den)
}

/// Value at all variables equal to one.
pub fn dim_from_char(c: &MultiLaurentPoly) -> BigInt {
    c.eval_ones()
}

/// Weyl dimension formula for `Sp_2n`.
pub fn sp_weyl_dimension(lambda: &DominantWeight) -> BigUint {
    let n = lambda.len();
    let l: Vec<u64> = (0..n)
        .map(|i| u64::from(lambda.entries()[i]) + (n - i) as u64)
        .collect();
    let m: Vec<u64> = (0..n).map(|i| (n - i) as u64).collect();
    let (mut num, mut den) = (BigUint::one(), BigUint::one());
    for i in 0..n {
        num *= l[i];
        den *= m[i];
        for j in i + 1..n {
            num *= (l[i] - l[j]) * (l[i] + l[j]);
            den *= (m[i] - m[j]) * (m[i] + m[j]);
        }
    }
    num / den
}

/// Weyl dimension formula for `GL_k`.
pub fn gl_weyl_dimension(lambda: &DominantWeight) -> BigUint {
    let e = lambda.entries();
    let k = e.len();
    let (mut num, mut den) = (BigUint::one(), BigUint::one());
    for i in 0..k {
        for j in i + 1..k {
            num *= u64::from(e[i] - e[j]) + (j - i) as u64;
            den *= (j - i) as u64;
        }
    }
    num / den
}

/// `∏ ch(F^{r_i})` placed in variable `index` of `arity`.
fn slot_character(rs: &[u32], index: usize, arity: usize) -> MultiLaurentPoly {
    rs.iter().fold(MultiLaurentPoly::one(arity), |acc, &k| {
        &acc * &sl2_char(k).to_multi(index, arity)
    })
}

/// All `μ ∈ Λ_{n−1}` with `μ ≪ λ⁺`, found by filtering every weight bounded
/// by `λ₁`.
fn double_interlacing_mus(lambda: &DominantWeight) -> Vec<SkewShape> {
    DominantWeight::enumerate(lambda.len() - 1, lambda.first())
        .into_iter()
        .map(|mu| SkewShape::new(mu, lambda.clone()).expect("lengths match"))
        .filter(SkewShape::in_branching_semigroup)
        .collect()
}

fn gl_identity(lambda: &DominantWeight) -> Result<(MultiLaurentPoly, MultiLaurentPoly)> {
    let n = lambda.len();
    let lp = lambda.plus_extend();
    // s_{λ⁺}(x₁,…,x_{n−1}, q, q⁻¹) in variables (x₁,…,x_{n−1}, q).
    let lhs = schur(&lp, n + 1)?.map_exponents(n, |e| {
        let mut v = e[..n - 1].to_vec();
        v.push(e[n - 1] - e[n]);
        v
    });
    let mut rhs = MultiLaurentPoly::zero(n);
    for p in double_interlacing_mus(lambda) {
        let s_mu = schur(p.mu(), n - 1)?.extend_arity(1);
        rhs = &rhs + &(&s_mu * &slot_character(&r(&p)?, n - 1, n));
    }
    Ok((lhs, rhs))
}

fn sp_identity(lambda: &DominantWeight) -> Result<(MultiLaurentPoly, MultiLaurentPoly)> {
    let n = lambda.len();
    let lhs = sp_char(lambda, n)?;
    let mut rhs = MultiLaurentPoly::zero(n);
    for p in double_interlacing_mus(lambda) {
        let sp_mu = sp_char(p.mu(), n - 1)?.extend_arity(1);
        rhs = &rhs + &(&sp_mu * &slot_character(&r(&p)?, n - 1, n));
    }
    Ok((lhs, rhs))
}

/// `s_{λ⁺}(x, q, q⁻¹) = Σ_{μ≪λ} s_μ(x) ∏ ch(F^{r_i(μ,λ⁺)})(q)`.
pub fn verify_gl_branching_identity(lambda: &DominantWeight, n: usize) -> bool {
    lambda.len() == n && n >= 1 && matches!(gl_identity(lambda), Ok((l, r)) if l == r)
}

/// `sp_λ(x, q) = Σ_{μ≪λ} sp_μ(x) ∏ ch(F^{r_i(μ,λ⁺)})(q)`.
pub fn verify_sp_branching_identity(lambda: &DominantWeight, n: usize) -> bool {
    lambda.len() == n && n >= 2 && matches!(sp_identity(lambda), Ok((l, r)) if l == r)
}

/// Classical `GL_k ↓ GL_{k−1}`: `s_λ(x₁,…,x_{k−1}, 1) = Σ_{μ<λ} s_μ(x₁,…,x_{k−1})`.
pub fn verify_schur_branching(lambda: &DominantWeight) -> bool {
    let k = lambda.len();
    if k == 0 {
        return true;
    }
    let check = || -> Result<bool> {
        let lhs = schur(lambda, k)?.map_exponents(k - 1, |e| e[..k - 1].to_vec());
        let mut rhs = MultiLaurentPoly::zero(k - 1);
        for mu in DominantWeight::enumerate(k - 1, lambda.first()) {
            if interlaces(&mu, lambda)? {
                rhs = &rhs + &schur(&mu, k - 1)?;
            }
        }
        Ok(lhs == rhs)
    };
    check().unwrap_or(false)
}

/// `Σ_μ dim W^μ · mult(μ) = dim W^λ`, both sides from characters.
pub fn verify_branch_dimension(
    lambda: &DominantWeight,
    table: &std::collections::BTreeMap<DominantWeight, u64>,
) -> Result<bool> {
    let n = lambda.len();
    let total = dim_from_char(&sp_char(lambda, n)?);
    let mut sum = BigInt::zero();
    for (mu, &mult) in table {
        sum += dim_from_char(&sp_char(mu, n - 1)?) * BigInt::from(mult);
    }
    Ok(sum == total)
}
