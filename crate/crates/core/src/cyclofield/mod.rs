//! Exact arithmetic in cyclotomic fields and their abelian subfields.
//!
//! Elements are polynomials in ζ_k reduced modulo the k-th cyclotomic
//! polynomial; fields are conductor–subgroup pairs ℚ(ζ_k)^H. Everything is
//! exact; the only numerics anywhere are the rigorous interval refinements
//! behind [`real_embedding_signs`], and those only ever tighten exact
//! rational endpoints.

mod dsl;
mod element;
mod embed;
mod fields;

pub use dsl::parse_field;
pub use element::CycloElement;
pub use embed::{cos_interval, real_embedding_signs};
pub use fields::{
    quadratic_conductor, roots_of_unity_order, AbelianFieldRef, FieldRef, PolyFieldRef, Signature,
};

use crate::linalg::RowSpace;
use crate::poly::Poly;

use crate::Rat;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("integer is not squarefree: {0}")]
    NotSquarefree(i64),
    #[error("polynomial is reducible over the rationals")]
    ReduciblePolynomial,
    #[error("operation unsupported for this field representation: {0}")]
    Unsupported(String),
    #[error("exact zero element where a nonzero one is required")]
    ZeroElement,
    #[error("element does not lie in the field")]
    NotInField,
    #[error("field is not totally real at the requested embeddings")]
    NotTotallyReal,
    #[error("extension is not quadratic")]
    NotQuadraticExtension,
    #[error("interval refinement exceeded the precision cap (internal bug)")]
    PrecisionExceeded,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// η_n = ζ_n + ζ_n⁻¹ and λ_n² = (ζ_n − ζ_n⁻¹)², both at conductor n.
/// They satisfy η_n² − λ_n² = 4 exactly.
pub fn eta_lambda(n: u32) -> (CycloElement<Rat>, CycloElement<Rat>) {
    assert!(n >= 3, "eta/lambda need n >= 3");
    let z = CycloElement::<Rat>::zeta(n);
    let zi = CycloElement::<Rat>::zeta_pow(n, n - 1);
    let eta = z.add(&zi);
    let lambda = z.sub(&zi);
    (eta, lambda.mul(&lambda))
}

/// Monic minimal polynomial over ℚ by exact linear algebra on the powers
/// of `x` in the conductor basis.
pub fn minimal_polynomial(x: &CycloElement<Rat>) -> Poly<Rat> {
    let dim = x.coeffs().len();
    let mut space: RowSpace<Rat> = RowSpace::new(dim);
    let mut power = CycloElement::one(x.conductor());
    loop {
        if let Some(combo) = space.insert(power.coeffs().to_vec()) {
            let d = combo.len();
            let mut coeffs: Vec<Rat> = combo.into_iter().map(|c| -c).collect();
            coeffs.push(crate::rat(1));
            debug_assert_eq!(coeffs.len(), d + 1);
            return Poly::new(coeffs);
        }
        power = power.mul(x);
    }
}

/// Check an explicit solution of the relative norm equation for the
/// quadratic extension ℚ(ζ_k)/f: the candidate (x, y) encodes
/// θ = x + y·ζ_k and the test is N(θ) = θ·σ(θ) = a, with σ the nontrivial
/// automorphism fixing f.
pub fn verify_norm_solution(
    k: u32,
    f: &AbelianFieldRef,
    a: &CycloElement<Rat>,
    candidate: (&CycloElement<Rat>, &CycloElement<Rat>),
) -> Result<bool, FieldError> {
    let h = f
        .lift_subgroup(k)
        .ok_or(FieldError::NotQuadraticExtension)?;
    if h.len() != 2 {
        return Err(FieldError::NotQuadraticExtension);
    }
    let sigma = h[1];
    let a = a.lift(k);
    let x = candidate.0.lift(k);
    let y = candidate.1.lift(k);
    for e in [&a, &x, &y] {
        if e.galois(sigma) != *e {
            return Err(FieldError::NotInField);
        }
    }
    let theta = x.add(&y.mul(&CycloElement::zeta(k)));
    let norm = theta.mul(&theta.galois(sigma));
    Ok(norm == a)
}

/// Scan the roots of unity ±ζ_k^e of the ambient cyclotomic field for one
/// whose removal makes `x` rational: returns (q, m₀) with x = q·ρ and ρ a
/// root of unity of exact order m₀. Rational x reports m₀ = 1 with its
/// sign kept in q.
pub fn root_of_unity_part(x: &CycloElement<Rat>) -> Option<(Rat, u32)> {
    if let Some(q) = x.as_rational() {
        if q.is_zero() {
            return None;
        }
        return Some((q, 1));
    }
    let k = x.conductor();
    for e in 0..k {
        for neg in [false, true] {
            // candidate ρ = ±ζ^e; test x·ρ⁻¹ ∈ ℚ where ρ⁻¹ = ±ζ^{k−e}
            let mut inv = CycloElement::<Rat>::zeta_pow(k, (k - e) % k);
            if neg {
                inv = inv.neg();
            }
            if let Some(q) = x.mul(&inv).as_rational() {
                // in ⟨ζ_{2k}⟩: +ζ^e has exponent 2e, −ζ^e has exponent k+2e
                let exp2k = if neg {
                    (k + 2 * e) % (2 * k)
                } else {
                    2 * e % (2 * k)
                };
                let order = (2 * k as u64 / crate::arith::gcd(2 * k as u64, exp2k as u64)) as u32;
                return Some((q, order));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests;
