//! `SL₂` and `L = SL₂ⁿ` module combinatorics.
//!
//! `F^k` is the `(k+1)`-dimensional irreducible `SL₂`-module. Everything here
//! works at the level of characters and multiplicities.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::poly::LaurentPoly;
use crate::rearrange;
use crate::weights::SkewShape;

/// `ch(F^k) = q^{-k} + q^{-k+2} + … + q^k`.
pub fn sl2_char(k: u32) -> LaurentPoly {
    let k = i64::from(k);
    (0..=k).fold(LaurentPoly::zero(), |acc, j| {
        &acc + &LaurentPoly::monomial(-k + 2 * j, 1)
    })
}

/// A finite direct sum `⊕ (F^k)^{m_k}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Sl2Decomposition(BTreeMap<u32, u64>);

impl Sl2Decomposition {
    pub fn irreducible(k: u32) -> Self {
        Sl2Decomposition(BTreeMap::from([(k, 1)]))
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, u64)>) -> Self {
        let mut d = Sl2Decomposition::default();
        for (k, m) in pairs {
            d.insert(k, m);
        }
        d
    }

    pub fn multiplicities(&self) -> &BTreeMap<u32, u64> {
        &self.0
    }

    pub fn multiplicity(&self, k: u32) -> u64 {
        self.0.get(&k).copied().unwrap_or(0)
    }

    pub fn dimension(&self) -> u64 {
        self.0.iter().map(|(&k, &m)| (u64::from(k) + 1) * m).sum()
    }

    pub fn is_irreducible(&self) -> bool {
        self.0.len() == 1 && self.0.values().all(|&m| m == 1)
    }

    pub fn character(&self) -> LaurentPoly {
        self.0.iter().fold(LaurentPoly::zero(), |acc, (&k, &m)| {
            &acc + &(&sl2_char(k) * &LaurentPoly::monomial(0, m))
        })
    }

    /// `(⊕ F^k) ⊗ F^b`.
    pub fn tensor_irreducible(&self, b: u32) -> Self {
        let mut out = Sl2Decomposition::default();
        for (&k, &m) in &self.0 {
            for (j, mj) in clebsch_gordan(k, b).0 {
                out.insert(j, m * mj);
            }
        }
        out
    }

    fn insert(&mut self, k: u32, m: u64) {
        if m > 0 {
            *self.0.entry(k).or_insert(0) += m;
        }
    }
}

impl fmt::Display for Sl2Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, m)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if *m == 1 {
                write!(f, "F^{k}")?;
            } else {
                write!(f, "{m}·F^{k}")?;
            }
        }
        Ok(())
    }
}

/// `F^a ⊗ F^b = F^{|a-b|} ⊕ F^{|a-b|+2} ⊕ … ⊕ F^{a+b}`.
pub fn clebsch_gordan(a: u32, b: u32) -> Sl2Decomposition {
    let lo = a.abs_diff(b);
    Sl2Decomposition::from_pairs((lo..=a + b).step_by(2).map(|k| (k, 1)))
}

/// The top summand of `F^a ⊗ F^b`.
pub fn cartan_component(a: u32, b: u32) -> u32 {
    a + b
}

/// The irreducible `L`-module `F^{r₁} ⊗ … ⊗ F^{rₙ}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LModule {
    factors: Vec<u32>,
}

impl LModule {
    pub fn new(factors: Vec<u32>) -> Self {
        LModule { factors }
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn dimension(&self) -> u64 {
        self.factors
            .iter()
            .try_fold(1u64, |acc, &r| acc.checked_mul(u64::from(r) + 1))
            .expect("dimension overflows u64")
    }

    /// Irreducible under the diagonal `SL₂` iff at most one factor is nontrivial.
    pub fn is_sl2_irreducible(&self) -> bool {
        self.factors.iter().filter(|&&r| r > 0).count() <= 1
    }

    /// `∏ ch(F^{r_i})` in the diagonal variable.
    pub fn diagonal_character(&self) -> LaurentPoly {
        self.factors
            .iter()
            .fold(LaurentPoly::one(), |acc, &r| &acc * &sl2_char(r))
    }

    /// The `L`-weights `(−r_i + 2j_i)_i`, `0 ≤ j_i ≤ r_i`, in lexicographic
    /// order of `j`.
    pub fn weights(&self) -> Vec<Vec<i64>> {
        let mut out = vec![Vec::with_capacity(self.factors.len())];
        for &r in &self.factors {
            let r = i64::from(r);
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..=r).map(move |j| {
                        let mut w = prefix.clone();
                        w.push(-r + 2 * j);
                        w
                    })
                })
                .collect();
        }
        out
    }
}

/// `A^p`, with factors `r(p)`.
pub fn l_module(p: &SkewShape) -> Result<LModule> {
    Ok(LModule::new(rearrange::r(p)?))
}

/// Restriction of an `L`-module to the diagonal `SL₂`, by iterated
/// Clebsch–Gordan.
pub fn restrict_to_diagonal(m: &LModule) -> Sl2Decomposition {
    m.factors()
        .iter()
        .fold(Sl2Decomposition::irreducible(0), |acc, &r| acc.tensor_irreducible(r))
}

/// `dim W^{λ/μ}`: zero off the branching semigroup, else `∏ (r_i + 1)`.
pub fn dim_mult_space(p: &SkewShape) -> u64 {
    match l_module(p) {
        Ok(m) => m.dimension(),
        Err(_) => 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn shape(mu: &[u32], lambda: &[u32]) -> SkewShape {
        SkewShape::from_entries(mu, lambda).unwrap()
    }

    /// Oracle: peel the top exponent of a character off repeatedly.
    fn decompose_character(c: &LaurentPoly) -> Sl2Decomposition {
        let mut rest = c.clone();
        let mut out = Vec::new();
        while let Some(top) = rest.max_exp() {
            let m = rest.coeff(top);
            let k = u32::try_from(top).unwrap();
            let mu = u64::try_from(m.clone()).unwrap();
            out.push((k, mu));
            rest = &rest - &(&sl2_char(k) * &LaurentPoly::monomial(0, m));
        }
        Sl2Decomposition::from_pairs(out)
    }

    #[test]
    fn characters() {
        assert_eq!(sl2_char(0), LaurentPoly::one());
        assert_eq!(sl2_char(1).to_string(), "q + q^-1");
        assert_eq!(sl2_char(2).to_string(), "q^2 + 1 + q^-2");
        assert_eq!(sl2_char(7).eval_one(), BigInt::from(8));
    }

    #[test]
    fn clebsch_gordan_examples() {
        assert_eq!(clebsch_gordan(1, 1), Sl2Decomposition::from_pairs([(0, 1), (2, 1)]));
        assert_eq!(clebsch_gordan(5, 0), Sl2Decomposition::irreducible(5));
        assert_eq!(clebsch_gordan(2, 1), Sl2Decomposition::from_pairs([(1, 1), (3, 1)]));
    }

    #[test]
    fn clebsch_gordan_character_identity() {
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(
                    clebsch_gordan(a, b).character(),
                    &sl2_char(a) * &sl2_char(b),
                    "{a} ⊗ {b}"
                );
            }
        }
    }

    #[test]
    fn cartan_components() {
        assert_eq!(cartan_component(1, 1), 2);
        assert_eq!(cartan_component(0, 4), 4);
        assert_eq!(cartan_component(3, 2), 5);
        for a in 0..5 {
            for b in 0..5 {
                let top = *clebsch_gordan(a, b).multiplicities().keys().max().unwrap();
                assert_eq!(top, cartan_component(a, b));
            }
        }
    }

    #[test]
    fn l_module_examples() {
        let m = l_module(&shape(&[2, 0], &[2, 1, 0])).unwrap();
        assert_eq!((m.factors(), m.dimension()), (&[0, 1, 0][..], 2));
        let m = l_module(&shape(&[2, 0], &[4, 2, 0])).unwrap();
        assert_eq!((m.factors(), m.dimension()), (&[2, 2, 0][..], 9));
        let m = l_module(&SkewShape::zero(3)).unwrap();
        assert_eq!((m.factors(), m.dimension()), (&[0, 0, 0][..], 1));
        assert!(l_module(&shape(&[3], &[1, 0])).is_err());
    }

    #[test]
    fn restriction_examples() {
        assert_eq!(
            restrict_to_diagonal(&LModule::new(vec![0, 1, 0])),
            Sl2Decomposition::irreducible(1)
        );
        assert_eq!(
            restrict_to_diagonal(&LModule::new(vec![1, 1])),
            Sl2Decomposition::from_pairs([(0, 1), (2, 1)])
        );
    }

    #[test]
    fn restriction_of_two_two_zero() {
        // (q⁻² + 1 + q²)² = q⁻⁴ + 2q⁻² + 3 + 2q² + q⁴, which peels as F⁴ ⊕ F² ⊕ F⁰.
        let m = LModule::new(vec![2, 2, 0]);
        let oracle = decompose_character(&m.diagonal_character());
        assert_eq!(oracle, Sl2Decomposition::from_pairs([(0, 1), (2, 1), (4, 1)]));
        let d = restrict_to_diagonal(&m);
        assert_eq!(d, oracle);
        assert_eq!(d.dimension(), 9);
    }

    #[test]
    fn dims() {
        assert_eq!(dim_mult_space(&shape(&[2, 0], &[2, 1, 0])), 2);
        assert_eq!(dim_mult_space(&shape(&[2, 0], &[4, 2, 0])), 9);
        assert_eq!(dim_mult_space(&shape(&[3], &[1, 0])), 0);
    }

    #[test]
    fn non_surjective_cartan_product() {
        let p = shape(&[2, 0], &[2, 1, 0]);
        let q = shape(&[0, 0], &[2, 1, 0]);
        let sum = p.add(&q).unwrap();
        assert!(dim_mult_space(&p) * dim_mult_space(&q) < dim_mult_space(&sum));
        let shared = p.order_types().unwrap().into_iter().any(|s| q.is_of_order_type(&s));
        assert!(!shared);
    }

    #[test]
    fn weights_enumerate_all_of_module() {
        let m = LModule::new(vec![2, 1]);
        let ws = m.weights();
        assert_eq!(ws.len() as u64, m.dimension());
        assert_eq!(ws[0], vec![-2, -1]);
        assert_eq!(ws[5], vec![2, 1]);
    }

    proptest! {
        #[test]
        fn restriction_character_matches_product(factors in prop::collection::vec(0u32..=4, 0..=4)) {
            let m = LModule::new(factors);
            let d = restrict_to_diagonal(&m);
            prop_assert_eq!(d.character(), m.diagonal_character());
            prop_assert_eq!(d.dimension(), m.dimension());
            prop_assert_eq!(d.clone(), decompose_character(&m.diagonal_character()));
        }
    }
}
