//! Elements of cyclotomic fields: vectors of length φ(k) over the scalar,
//! reduced modulo the k-th cyclotomic polynomial.

use crate::arith::{euler_phi, gcd, lcm};
use crate::poly::{cyclotomic_i64, Poly};
use crate::scalar::Scalar;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

fn cyclotomic_cache(k: u32) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    guard
        .entry(k)
        .or_insert_with(|| Arc::new(cyclotomic_i64(k).coeffs().to_vec()))
        .clone()
}

fn cyclotomic_poly<S: Scalar>(k: u32) -> Poly<S> {
    Poly::new(
        cyclotomic_cache(k)
            .iter()
            .map(|&c| S::from_int(c))
            .collect(),
    )
}

/// An element of ℚ(ζ_k) in the power basis 1, ζ, …, ζ^{φ(k)−1}.
///
/// Equality is mathematical: elements at different conductors are compared
/// after lifting to the least common one.
#[derive(Clone)]
pub struct CycloElement<S> {
    conductor: u32,
    coeffs: Vec<S>,
}

impl<S: Scalar> PartialEq for CycloElement<S> {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl<S: Scalar> Eq for CycloElement<S> {}

impl<S: Scalar> CycloElement<S> {
    fn from_reduced(conductor: u32, mut coeffs: Vec<S>) -> Self {
        let phi = euler_phi(conductor as u64) as usize;
        coeffs.resize(phi, S::zero());
        CycloElement { conductor, coeffs }
    }

    /// Reduce an arbitrary polynomial in ζ_k modulo Φ_k.
    pub fn from_poly(conductor: u32, p: &Poly<S>) -> Self {
        assert!(conductor >= 1);
        let r = p.rem(&cyclotomic_poly::<S>(conductor));
        Self::from_reduced(conductor, r.coeffs().to_vec())
    }

    pub fn zero(conductor: u32) -> Self {
        Self::from_reduced(conductor, vec![])
    }

    pub fn one(conductor: u32) -> Self {
        Self::from_reduced(conductor, vec![S::one()])
    }

    pub fn rational(conductor: u32, q: S) -> Self {
        Self::from_reduced(conductor, vec![q])
    }

    pub fn zeta(conductor: u32) -> Self {
        Self::zeta_pow(conductor, 1)
    }

    /// ζ_k^j for any j, reduced.
    pub fn zeta_pow(conductor: u32, j: u32) -> Self {
        let j = j % conductor;
        Self::from_poly(conductor, &Poly::monomial(S::one(), j as usize))
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<S> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coeff(0))
        } else {
            None
        }
    }

    fn coeff(&self, i: usize) -> S {
        self.coeffs.get(i).cloned().unwrap_or_else(S::zero)
    }

    fn to_poly(&self) -> Poly<S> {
        Poly::new(self.coeffs.clone())
    }

    /// Rewrite in conductor `target`, which must be a multiple of the
    /// current conductor: ζ_k = ζ_target^{target/k}.
    pub fn lift(&self, target: u32) -> Self {
        if target == self.conductor {
            return self.clone();
        }
        assert!(
            target.is_multiple_of(self.conductor),
            "lift target {target} is not a multiple of conductor {}",
            self.conductor
        );
        let step = target / self.conductor;
        let mut acc = Poly::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&Poly::monomial(c.clone(), i * step as usize));
            }
        }
        Self::from_poly(target, &acc)
    }

    fn common(&self, rhs: &Self) -> (Self, Self) {
        if self.conductor == rhs.conductor {
            (self.clone(), rhs.clone())
        } else {
            let l = lcm(self.conductor as u64, rhs.conductor as u64) as u32;
            (self.lift(l), rhs.lift(l))
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let (a, b) = self.common(rhs);
        Self::from_reduced(
            a.conductor,
            a.coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| x.clone() + y.clone())
                .collect(),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Self::from_reduced(
            self.conductor,
            self.coeffs.iter().map(|c| S::zero() - c.clone()).collect(),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let (a, b) = self.common(rhs);
        Self::from_poly(a.conductor, &a.to_poly().mul(&b.to_poly()))
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_reduced(
            self.conductor,
            self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
        )
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.conductor);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a nonzero element, by the extended
    /// Euclidean algorithm against the (irreducible) cyclotomic polynomial.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let phi_k = cyclotomic_poly::<S>(self.conductor);
        let (g, u, _) = self.to_poly().extended_gcd(&phi_k);
        debug_assert_eq!(g.degree(), Some(0));
        Some(Self::from_poly(self.conductor, &u))
    }

    /// The Galois automorphism ζ ↦ ζ^a for gcd(a, k) = 1.
    pub fn galois(&self, a: u32) -> Self {
        let k = self.conductor;
        if k == 1 {
            return self.clone();
        }
        assert!(
            gcd(a as u64 % k as u64, k as u64) == 1,
            "galois exponent must be a unit"
        );
        let mut acc = Poly::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&Poly::monomial(c.clone(), (i * a as usize) % k as usize));
            }
        }
        Self::from_poly(k, &acc)
    }
}

impl<S: Scalar> std::fmt::Debug for CycloElement<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("({c})z{}", self.conductor),
                _ => format!("({c})z{}^{i}", self.conductor),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}
