//! Exact computational algebra for group algebras of metabelian groups.
//!
//! The crate builds finite groups from presentations, decomposes their
//! rational group algebras into simple components via strong Shoda pairs,
//! recognizes each component (matrix size, center, quaternion symbol),
//! and classifies Kleinian type and the virtual structure of unit groups
//! of group rings over number fields.
//!
//! All algebraic decisions use exact rational arithmetic. The core
//! arithmetic layers ([`poly`], [`linalg`], [`cyclofield`], [`grpalg`])
//! are generic over the scalar type through the [`scalar::Scalar`] trait;
//! the concrete aliases at the crate root instantiate them at
//! arbitrary-precision rationals.
//!
//! ```
//! use schurkit::classify::{kg_kleinian, unit_group_structure, UnitOptions};
//! use schurkit::csa::Kleinian;
//! use schurkit::cyclofield::parse_field;
//! use schurkit::groups::parse_group;
//! use schurkit::grpalg::wedderburn;
//!
//! let g = parse_group("Dminus[16]")?;
//! let components = wedderburn(&g)?;
//! assert_eq!(components.len(), 6); // 4·Q ⊕ M2(Q) ⊕ M2(Q(sqrt,-2))
//!
//! let k = parse_field("Q(sqrt,-2)")?;
//! assert_eq!(kg_kleinian(&k, &g)?.verdict, Kleinian::Yes);
//! let units = unit_group_structure(&k, &g, &UnitOptions::default())?;
//! assert_eq!(units.class.as_str(), "virtually_product_of_free_by_free");
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod arith;
pub mod classify;
pub mod csa;
pub mod cyclofield;
pub mod groups;
pub mod grpalg;
pub mod linalg;
pub mod poly;
pub mod scalar;
pub mod verify;

pub use scalar::Scalar;

/// The exact scalar used by every algebraic decision in this crate.
pub type Rat = num_rational::BigRational;

/// Dense polynomial over exact rationals.
pub type RatPoly = poly::Poly<Rat>;

/// Cyclotomic field element with exact rational coordinates.
pub type Cyclo = cyclofield::CycloElement<Rat>;

/// Group algebra element with exact rational coefficients.
pub type GroupAlgElem = grpalg::GroupAlgebraElement<Rat>;

/// Convenience constructor for an exact rational from an integer.
pub fn rat(n: i64) -> Rat {
    use num_bigint::BigInt;
    num_rational::BigRational::from_integer(BigInt::from(n))
}

/// Convenience constructor for an exact rational fraction.
pub fn ratio(n: i64, d: i64) -> Rat {
    use num_bigint::BigInt;
    num_rational::BigRational::new(BigInt::from(n), BigInt::from(d))
}
