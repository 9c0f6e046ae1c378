//! Abelian number fields as conductor–subgroup pairs, a signature-only
//! polynomial variant, and the lattice operations (compositum,
//! intersection, containment) that replace all field-theoretic reasoning
//! downstream.

use super::{CycloElement, FieldError};
use crate::arith::{
    divisors, euler_phi, gcd, is_squarefree, kronecker, lcm, subgroup_closure, units_mod,
};
use crate::poly::{self, Poly};
use crate::Rat;
use num_traits::Zero;
use serde::Serialize;

/// Signature of a number field: real embeddings and conjugate pairs of
/// complex embeddings; r1 + 2r2 equals the degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Signature {
    pub r1: usize,
    pub r2: usize,
}

/// The fixed field ℚ(ζ_k)^H for H ≤ (ℤ/k)*, stored with the minimal
/// conductor so equality is representational.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianFieldRef {
    conductor: u32,
    subgroup: Vec<u32>,
}

impl AbelianFieldRef {
    /// Build from a conductor and any set of unit residues generating H,
    /// then canonicalize to the minimal conductor.
    pub fn new(conductor: u32, subgroup_gens: &[u32]) -> Self {
        assert!(conductor >= 1);
        for &g in subgroup_gens {
            assert!(
                gcd(g as u64 % conductor as u64, conductor as u64) == 1 || conductor == 1,
                "subgroup generator {g} is not a unit mod {conductor}"
            );
        }
        let h = subgroup_closure(
            conductor as u64,
            &subgroup_gens
                .iter()
                .map(|&g| g as u64 % conductor as u64)
                .collect::<Vec<_>>(),
        );
        Self::canonical(conductor, h.into_iter().map(|x| x as u32).collect())
    }

    fn canonical(k: u32, h: Vec<u32>) -> Self {
        for m in divisors(k as u64) {
            let m = m as u32;
            // kernel of (ℤ/k)* -> (ℤ/m)*
            let kernel_in_h = units_mod(k as u64)
                .into_iter()
                .filter(|&a| a % m as u64 == 1 % m as u64)
                .all(|a| h.binary_search(&(a as u32)).is_ok());
            if kernel_in_h {
                let mut hm: Vec<u32> = h.iter().map(|&a| a % m).collect();
                hm.sort_unstable();
                hm.dedup();
                return AbelianFieldRef {
                    conductor: m,
                    subgroup: hm,
                };
            }
        }
        unreachable!("m = k always qualifies");
    }

    pub fn rationals() -> Self {
        AbelianFieldRef {
            conductor: 1,
            subgroup: vec![0],
        }
    }

    pub fn from_zeta(n: u32) -> Self {
        Self::new(n, &[])
    }

    pub fn from_eta(n: u32) -> Self {
        if n <= 2 {
            return Self::rationals();
        }
        Self::new(n, &[n - 1])
    }

    /// ℚ(√d) for squarefree d ∉ {0, 1}, via the Kronecker character of the
    /// discriminant.
    pub fn from_sqrt(d: i64) -> Result<Self, FieldError> {
        if d == 0 || d == 1 || !is_squarefree(d) {
            return Err(FieldError::NotSquarefree(d));
        }
        let disc = if d.rem_euclid(4) == 1 { d } else { 4 * d };
        let k = disc.unsigned_abs() as u32;
        let h: Vec<u32> = units_mod(k as u64)
            .into_iter()
            .filter(|&a| kronecker(disc, a as i64) == 1)
            .map(|a| a as u32)
            .collect();
        Ok(Self::canonical(k, h))
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn subgroup(&self) -> &[u32] {
        &self.subgroup
    }

    pub fn degree(&self) -> usize {
        (euler_phi(self.conductor as u64) as usize) / self.subgroup.len()
    }

    pub fn is_rationals(&self) -> bool {
        self.conductor == 1
    }

    pub fn is_totally_real(&self) -> bool {
        self.conductor <= 2 || self.subgroup.contains(&(self.conductor - 1))
    }

    pub fn signature(&self) -> Signature {
        let deg = self.degree();
        if self.is_totally_real() {
            Signature { r1: deg, r2: 0 }
        } else {
            Signature { r1: 0, r2: deg / 2 }
        }
    }

    /// Totally complex of degree 2.
    pub fn is_imaginary_quadratic(&self) -> bool {
        self.degree() == 2 && !self.is_totally_real()
    }

    /// Preimage of H in (ℤ/target)* for conductor | target; `None` when the
    /// target is not a multiple of the conductor.
    pub fn lift_subgroup(&self, target: u32) -> Option<Vec<u32>> {
        if !target.is_multiple_of(self.conductor) {
            return None;
        }
        Some(
            units_mod(target as u64)
                .into_iter()
                .map(|a| a as u32)
                .filter(|&a| {
                    self.conductor == 1
                        || self.subgroup.binary_search(&(a % self.conductor)).is_ok()
                })
                .collect(),
        )
    }

    fn common_conductor(&self, other: &Self) -> u32 {
        lcm(self.conductor as u64, other.conductor as u64) as u32
    }

    pub fn compositum(&self, other: &Self) -> Self {
        let l = self.common_conductor(other);
        let h1 = self.lift_subgroup(l).unwrap();
        let h2 = other.lift_subgroup(l).unwrap();
        let h: Vec<u32> = h1
            .into_iter()
            .filter(|a| h2.binary_search(a).is_ok())
            .collect();
        Self::canonical(l, h)
    }

    pub fn intersect(&self, other: &Self) -> Self {
        let l = self.common_conductor(other);
        let mut gens = self.lift_subgroup(l).unwrap();
        gens.extend(other.lift_subgroup(l).unwrap());
        Self::new(l, &gens)
    }

    /// Does `self` contain `other` as a subfield?
    pub fn contains(&self, other: &Self) -> bool {
        let l = self.common_conductor(other);
        let h1 = self.lift_subgroup(l).unwrap();
        let h2 = other.lift_subgroup(l).unwrap();
        h1.iter().all(|a| h2.binary_search(a).is_ok())
    }

    /// Membership test for a cyclotomic element: invariant under the lifted
    /// subgroup at a common conductor.
    pub fn contains_element(&self, x: &CycloElement<Rat>) -> bool {
        let l = lcm(self.conductor as u64, x.conductor() as u64) as u32;
        let xl = x.lift(l);
        self.lift_subgroup(l)
            .unwrap()
            .into_iter()
            .all(|a| xl.galois(a) == xl)
    }

    /// Coset representatives of H in (ℤ/k)*, minimal in each coset; these
    /// index the embeddings of the field.
    pub fn embedding_representatives(&self) -> Vec<u32> {
        let mut reps = Vec::new();
        let mut seen: Vec<u32> = Vec::new();
        for a in units_mod(self.conductor as u64) {
            let a = a as u32;
            if seen.contains(&a) {
                continue;
            }
            reps.push(a);
            for &h in &self.subgroup {
                seen.push(if self.conductor == 1 {
                    0
                } else {
                    (a * h) % self.conductor
                });
            }
        }
        reps
    }

    /// For a quadratic field, the squarefree d with F = ℚ(√d), computed
    /// from the minimal polynomial of a Gaussian period.
    pub fn quadratic_d(&self) -> Option<i64> {
        if self.degree() != 2 {
            return None;
        }
        // orbit sum of ζ under H generates the fixed field
        let mut s = CycloElement::<Rat>::zero(self.conductor);
        for &h in &self.subgroup {
            s = s.add(&CycloElement::zeta_pow(self.conductor, h));
        }
        let mp = super::minimal_polynomial(&s);
        debug_assert_eq!(mp.degree(), Some(2));
        // x² + bx + c has discriminant b² − 4c
        let b = mp.coeff(1);
        let c = mp.coeff(0);
        let disc = b.clone() * b - crate::rat(4) * c;
        let num = disc.numer() * disc.denom();
        let n: i64 = num_traits::ToPrimitive::to_i64(&num).expect("desk-scale discriminant");
        Some(crate::arith::squarefree_part(n))
    }

    /// Local degree [F_w : ℚ_p] at the (uniform) places above p, computed
    /// as the index of H in D_p·H for the decomposition subgroup
    /// D_p ≤ (ℤ/k)*.
    pub fn local_degree_above(&self, p: u64) -> usize {
        let k = self.conductor as u64;
        if k == 1 {
            return 1;
        }
        // k = p^a · m: D_p is the preimage of <p mod m> under reduction mod m
        let mut m = k;
        while m.is_multiple_of(p) {
            m /= p;
        }
        let frob_powers = subgroup_closure(m, &[p % m]);
        let d_p: Vec<u64> = units_mod(k)
            .into_iter()
            .filter(|&u| frob_powers.binary_search(&(u % m)).is_ok())
            .collect();
        // |D_p·H| / |H| via closure
        let mut gens: Vec<u64> = d_p;
        gens.extend(self.subgroup.iter().map(|&h| h as u64));
        let dh = subgroup_closure(k, &gens);
        dh.len() / self.subgroup.len()
    }

    /// Does p have a degree-one place in this field?
    pub fn has_degree_one_place_above(&self, p: u64) -> bool {
        self.local_degree_above(p) == 1
    }

    /// Is the rational number r a square in this field? For squarefree part
    /// s, that is s = 1 or ℚ(√s) ⊆ F.
    pub fn rational_is_square(&self, r: &Rat) -> bool {
        if r.is_zero() {
            return true;
        }
        let num: i64 =
            num_traits::ToPrimitive::to_i64(&(r.numer() * r.denom())).expect("desk-scale rational");
        let s = crate::arith::squarefree_part(num);
        s == 1
            || AbelianFieldRef::from_sqrt(s)
                .map(|f| self.contains(&f))
                .unwrap_or(false)
    }
}

impl Serialize for AbelianFieldRef {
    fn serialize<Ser: serde::Serializer>(&self, s: Ser) -> Result<Ser::Ok, Ser::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("AbelianFieldRef", 2)?;
        st.serialize_field("conductor", &self.conductor)?;
        st.serialize_field("subgroup", &self.subgroup)?;
        st.end()
    }
}

impl std::fmt::Display for AbelianFieldRef {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_rationals() {
            return write!(f, "Q");
        }
        if self.subgroup.len() == 1 {
            return write!(f, "Q(zeta,{})", self.conductor);
        }
        if let Some(d) = self.quadratic_d() {
            return write!(f, "Q(sqrt,{d})");
        }
        if self.is_totally_real() && Self::from_eta(self.conductor) == *self {
            return write!(f, "Q(eta,{})", self.conductor);
        }
        write!(
            f,
            "fixed({};{})",
            self.conductor,
            self.subgroup
                .iter()
                .map(|h| h.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// A number field given only by a monic irreducible integer polynomial;
/// supports degree and signature, nothing else.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyFieldRef {
    poly: Poly<i64>,
}

impl PolyFieldRef {
    pub fn new(int_coeffs: Vec<i64>) -> Result<Self, FieldError> {
        let p = Poly::new(int_coeffs);
        if !p.is_monic() {
            return Err(FieldError::Unsupported(
                "polynomial field reference requires a monic polynomial".into(),
            ));
        }
        let pq: Poly<Rat> = Poly::new(p.coeffs().iter().map(|&c| crate::rat(c)).collect());
        if !pq.is_squarefree() {
            return Err(FieldError::ReduciblePolynomial);
        }
        if !poly::is_irreducible_monic(&p) {
            return Err(FieldError::ReduciblePolynomial);
        }
        Ok(PolyFieldRef { poly: p })
    }

    pub fn poly(&self) -> &Poly<i64> {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }

    pub fn signature(&self) -> Signature {
        let pq: Poly<Rat> = Poly::new(self.poly.coeffs().iter().map(|&c| crate::rat(c)).collect());
        let r1 = poly::real_root_count(&pq);
        Signature {
            r1,
            r2: (self.degree() - r1) / 2,
        }
    }

    /// Degree ≤ 2 polynomial fields are abelian; convert when possible.
    pub fn to_abelian(&self) -> Option<AbelianFieldRef> {
        match self.degree() {
            1 => Some(AbelianFieldRef::rationals()),
            2 => {
                let b = self.poly.coeff(1);
                let c = self.poly.coeff(0);
                let d = crate::arith::squarefree_part(b * b - 4 * c);
                AbelianFieldRef::from_sqrt(d).ok()
            }
            _ => None,
        }
    }
}

impl std::fmt::Display for PolyFieldRef {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "poly({})",
            self.poly
                .coeffs()
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// Either field representation; the abelian one supports the full lattice.
#[derive(Debug, Clone, PartialEq)]
pub enum FieldRef {
    Abelian(AbelianFieldRef),
    Poly(PolyFieldRef),
}

impl FieldRef {
    pub fn rationals() -> Self {
        FieldRef::Abelian(AbelianFieldRef::rationals())
    }

    pub fn degree(&self) -> usize {
        match self {
            FieldRef::Abelian(f) => f.degree(),
            FieldRef::Poly(f) => f.degree(),
        }
    }

    pub fn signature(&self) -> Signature {
        match self {
            FieldRef::Abelian(f) => f.signature(),
            FieldRef::Poly(f) => f.signature(),
        }
    }

    /// Normalize: polynomial references of degree ≤ 2 become abelian.
    pub fn normalized(self) -> Self {
        match self {
            FieldRef::Poly(p) => match p.to_abelian() {
                Some(a) => FieldRef::Abelian(a),
                None => FieldRef::Poly(p),
            },
            a => a,
        }
    }

    pub fn as_abelian(&self) -> Option<&AbelianFieldRef> {
        match self {
            FieldRef::Abelian(f) => Some(f),
            FieldRef::Poly(_) => None,
        }
    }

    fn abelian_pair<'a>(
        &'a self,
        other: &'a FieldRef,
        op: &str,
    ) -> Result<(&'a AbelianFieldRef, &'a AbelianFieldRef), FieldError> {
        match (self, other) {
            (FieldRef::Abelian(a), FieldRef::Abelian(b)) => Ok((a, b)),
            _ => Err(FieldError::Unsupported(format!(
                "{op} requires conductor-subgroup field references"
            ))),
        }
    }

    pub fn compositum(&self, other: &FieldRef) -> Result<FieldRef, FieldError> {
        let (a, b) = self.abelian_pair(other, "compositum")?;
        Ok(FieldRef::Abelian(a.compositum(b)))
    }

    pub fn intersect(&self, other: &FieldRef) -> Result<FieldRef, FieldError> {
        let (a, b) = self.abelian_pair(other, "intersect")?;
        Ok(FieldRef::Abelian(a.intersect(b)))
    }

    pub fn contains(&self, other: &FieldRef) -> Result<bool, FieldError> {
        let (a, b) = self.abelian_pair(other, "contains")?;
        Ok(a.contains(b))
    }
}

impl std::fmt::Display for FieldRef {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldRef::Abelian(a) => write!(f, "{a}"),
            FieldRef::Poly(p) => write!(f, "{p}"),
        }
    }
}

impl Serialize for FieldRef {
    fn serialize<Ser: serde::Serializer>(&self, s: Ser) -> Result<Ser::Ok, Ser::Error> {
        match self {
            FieldRef::Abelian(a) => a.serialize(s),
            FieldRef::Poly(p) => {
                use serde::ser::SerializeStruct;
                let mut st = s.serialize_struct("PolyFieldRef", 1)?;
                st.serialize_field("poly", p.poly().coeffs())?;
                st.end()
            }
        }
    }
}

/// Largest m with ζ_m ∈ F (the order of the group of roots of unity).
pub fn roots_of_unity_order(f: &AbelianFieldRef) -> u32 {
    let mut w = 2;
    for d in divisors(f.conductor() as u64) {
        let d = d as u32;
        if d >= 3 && f.contains(&AbelianFieldRef::from_zeta(d)) {
            let m = if d % 2 == 1 { 2 * d } else { d };
            if m > w {
                w = m;
            }
        }
    }
    w
}

/// Conductor of ℚ(√d): |d| if d ≡ 1 mod 4, else |4d|.
pub fn quadratic_conductor(d: i64) -> u32 {
    let disc = if d.rem_euclid(4) == 1 { d } else { 4 * d };
    disc.unsigned_abs() as u32
}
