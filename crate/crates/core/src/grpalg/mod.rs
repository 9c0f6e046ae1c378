//! Rational group algebra arithmetic, strong Shoda pairs, primitive
//! central idempotents and the Wedderburn decomposition for metabelian
//! groups, plus the 𝒞-set computations over ℚ and over number fields.

mod cset;
mod shoda;

pub use cset::{c_set, c_set_over, field_components_over, strip_elementary_two_factors};
pub use shoda::{
    crossed_product_data, e_central, epsilon, hat, strong_shoda_pairs, wedderburn,
    wedderburn_with_options, CrossedProductData, StrongShodaPair, WedderburnOptions,
};

use crate::groups::FiniteGroup;
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("subgroups are not nested")]
    NotNested,
    #[error("pair is not a strong Shoda pair: {0}")]
    NotStrongShoda(String),
    #[error("group is not metabelian")]
    NotMetabelian,
    #[error("idempotent completeness failed: {0}")]
    CompletenessFailure(String),
    #[error(transparent)]
    Group(#[from] crate::groups::GroupError),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

/// Sparse element of the group algebra: support indices with nonzero
/// scalar coefficients.
#[derive(Clone)]
pub struct GroupAlgebraElement<S> {
    group: Arc<FiniteGroup>,
    coeffs: BTreeMap<u16, S>,
}

impl<S: Scalar> PartialEq for GroupAlgebraElement<S> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.coeffs == other.coeffs
    }
}
impl<S: Scalar> Eq for GroupAlgebraElement<S> {}

impl<S: Scalar> GroupAlgebraElement<S> {
    pub fn zero(group: &Arc<FiniteGroup>) -> Self {
        GroupAlgebraElement {
            group: group.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(group: &Arc<FiniteGroup>) -> Self {
        Self::basis(group, group.identity())
    }

    pub fn basis(group: &Arc<FiniteGroup>, g: u16) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(g, S::one());
        GroupAlgebraElement {
            group: group.clone(),
            coeffs,
        }
    }

    pub fn from_terms(group: &Arc<FiniteGroup>, terms: impl IntoIterator<Item = (u16, S)>) -> Self {
        let mut out = Self::zero(group);
        for (g, c) in terms {
            out.add_term(g, c);
        }
        out
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn coeffs(&self) -> &BTreeMap<u16, S> {
        &self.coeffs
    }

    pub fn coeff(&self, g: u16) -> S {
        self.coeffs.get(&g).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_term(&mut self, g: u16, c: S) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(g).or_insert_with(S::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.coeffs.remove(&g);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        debug_assert!(Arc::ptr_eq(&self.group, &rhs.group));
        let mut out = self.clone();
        for (&g, c) in &rhs.coeffs {
            out.add_term(g, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        GroupAlgebraElement {
            group: self.group.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(&g, c)| (g, S::zero() - c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(&self.group);
        }
        GroupAlgebraElement {
            group: self.group.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(&g, x)| (g, x.clone() * c.clone()))
                .collect(),
        }
    }

    /// Group-ring convolution.
    pub fn mul(&self, rhs: &Self) -> Self {
        debug_assert!(Arc::ptr_eq(&self.group, &rhs.group));
        let g = self.group.as_ref();
        let mut out = Self::zero(&self.group);
        for (&a, ca) in &self.coeffs {
            for (&b, cb) in &rhs.coeffs {
                out.add_term(g.mul(a, b), ca.clone() * cb.clone());
            }
        }
        out
    }

    /// Conjugate by a group element: c⁻¹ · self · c.
    pub fn conj_by(&self, c: u16) -> Self {
        let g = self.group.as_ref();
        GroupAlgebraElement {
            group: self.group.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(&a, x)| (g.conj(a, c), x.clone()))
                .collect(),
        }
    }

    pub fn is_idempotent(&self) -> bool {
        self.mul(self) == *self
    }

    /// Commutes with every generator, hence with the whole group.
    pub fn is_central(&self) -> bool {
        self.group.generating_set().iter().all(|&c| {
            let basis = Self::basis(&self.group, c);
            self.mul(&basis) == basis.mul(self)
        })
    }

    /// Dense coefficient vector of length |G|.
    pub fn to_dense(&self) -> Vec<S> {
        let mut v = vec![S::zero(); self.group.order()];
        for (&g, c) in &self.coeffs {
            v[g as usize] = c.clone();
        }
        v
    }
}

impl<S: Scalar> std::fmt::Debug for GroupAlgebraElement<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(&g, c)| format!("({c})·{}", self.group.element_name(g)))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests;
