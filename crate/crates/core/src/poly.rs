//! Exact Laurent polynomials with arbitrary-precision integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A Laurent polynomial in one variable `q`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Embeds as variable `index` of a polynomial in `arity` variables.
    pub fn to_multi(&self, index: usize, arity: usize) -> MultiLaurentPoly {
        assert!(index < arity);
        let mut out = MultiLaurentPoly::zero(arity);
        for (&e, c) in &self.terms {
            let mut exps = vec![0; arity];
            exps[index] = e;
            out.add_term(exps, c.clone());
        }
        out
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().rev().map(|(&e, c)| (vec![e], c)), &["q"])
    }
}

/// A Laurent polynomial in a fixed number of variables.
///
/// Terms are keyed by exponent vectors; `BTreeMap` order on the keys is the
/// lexicographic monomial order used for division.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiLaurentPoly {
    arity: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl MultiLaurentPoly {
    pub fn zero(arity: usize) -> Self {
        MultiLaurentPoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::monomial(vec![0; arity], 1)
    }

    pub fn monomial(exps: Vec<i64>, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, coeff.into());
        p
    }

    /// `x_index`.
    pub fn variable(index: usize, arity: usize) -> Self {
        let mut exps = vec![0; arity];
        exps[index] = 1;
        Self::monomial(exps, 1)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coeff(&self, exps: &[i64]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// Value with every variable set to 1 (the coefficient sum).
    pub fn eval_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Rewrites every exponent vector through `f`, which must produce
    /// vectors of length `arity`.
    pub fn map_exponents(&self, arity: usize, f: impl Fn(&[i64]) -> Vec<i64>) -> Self {
        let mut out = Self::zero(arity);
        for (e, c) in &self.terms {
            let e2 = f(e);
            debug_assert_eq!(e2.len(), arity);
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Pads with `extra` trailing variables that do not occur.
    pub fn extend_arity(&self, extra: usize) -> Self {
        self.map_exponents(self.arity + extra, |e| {
            let mut v = e.to_vec();
            v.resize(e.len() + extra, 0);
            v
        })
    }

    /// Exact division under the lexicographic monomial order.
    ///
    /// Each quotient exponent must lie in the box bounded per variable by the
    /// degree spans of `self` and `divisor`; leaving it is a nonzero
    /// remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        assert_eq!(self.arity, divisor.arity, "arity mismatch");
        if divisor.is_zero() {
            return Err(Error::InexactDivision);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.arity));
        }
        let (lo_f, hi_f) = self.degree_box();
        let (lo_g, hi_g) = divisor.degree_box();
        let lo: Vec<i64> = lo_f.iter().zip(&lo_g).map(|(a, b)| a - b).collect();
        let hi: Vec<i64> = hi_f.iter().zip(&hi_g).map(|(a, b)| a - b).collect();

        let (lead_exp, lead_coeff) = divisor.terms.iter().next_back().unwrap();
        let mut quotient = Self::zero(self.arity);
        let mut rem = self.clone();
        while let Some((rexp, rcoeff)) = rem.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            let texp: Vec<i64> = rexp.iter().zip(lead_exp).map(|(a, b)| a - b).collect();
            let in_box = texp.iter().zip(lo.iter().zip(&hi)).all(|(t, (l, h))| l <= t && t <= h);
            if !in_box || !(&rcoeff % lead_coeff).is_zero() {
                return Err(Error::InexactDivision);
            }
            let tcoeff = &rcoeff / lead_coeff;
            for (gexp, gcoeff) in &divisor.terms {
                let e = gexp.iter().zip(&texp).map(|(a, b)| a + b).collect();
                rem.add_term(e, -(gcoeff * &tcoeff));
            }
            quotient.add_term(texp, tcoeff);
        }
        Ok(quotient)
    }

    /// Per-variable minimum and maximum exponents. Panics on zero.
    fn degree_box(&self) -> (Vec<i64>, Vec<i64>) {
        let mut lo = vec![i64::MAX; self.arity];
        let mut hi = vec![i64::MIN; self.arity];
        for e in self.terms.keys() {
            for (k, &v) in e.iter().enumerate() {
                lo[k] = lo[k].min(v);
                hi[k] = hi[k].max(v);
            }
        }
        (lo, hi)
    }

    fn add_term(&mut self, exps: Vec<i64>, coeff: BigInt) {
        debug_assert_eq!(exps.len(), self.arity);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.arity);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }
}

impl Add for &MultiLaurentPoly {
    type Output = MultiLaurentPoly;
    fn add(self, rhs: &MultiLaurentPoly) -> MultiLaurentPoly {
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiLaurentPoly {
    type Output = MultiLaurentPoly;
    fn sub(self, rhs: &MultiLaurentPoly) -> MultiLaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &MultiLaurentPoly {
    type Output = MultiLaurentPoly;
    fn neg(self) -> MultiLaurentPoly {
        MultiLaurentPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &MultiLaurentPoly {
    type Output = MultiLaurentPoly;
    fn mul(self, rhs: &MultiLaurentPoly) -> MultiLaurentPoly {
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        let mut out = MultiLaurentPoly::zero(self.arity);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for MultiLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.arity).map(|i| format!("x{i}")).collect();
        let names: Vec<&str> = names.iter().map(String::as_str).collect();
        write_terms(f, self.terms.iter().rev().map(|(e, c)| (e.clone(), c)), &names)
    }
}

fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (Vec<i64>, &'a BigInt)>,
    names: &[&str],
) -> fmt::Result {
    let mut first = true;
    for (exps, c) in terms {
        let sign = if c.is_negative() { "-" } else { "+" };
        if first {
            if c.is_negative() {
                f.write_str("-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        first = false;
        let mag = c.abs();
        let mono: Vec<String> = exps
            .iter()
            .zip(names)
            .filter(|(&e, _)| e != 0)
            .map(|(&e, name)| {
                if e == 1 {
                    name.to_string()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        if mono.is_empty() {
            write!(f, "{mag}")?;
        } else if mag.is_one() {
            f.write_str(&mono.join("*"))?;
        } else {
            write!(f, "{mag}*{}", mono.join("*"))?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}
