//! Recognition of crossed-product components as central simple algebras:
//! quaternion symbols, division/split decisions, ramification at infinite
//! places, Kleinian type, and the Schur–Kleinian case classification.

use crate::cyclofield::{
    real_embedding_signs, root_of_unity_part, AbelianFieldRef, CycloElement, FieldError,
};
use crate::grpalg::CrossedProductData;
use crate::{rat, Rat};
use num_traits::{Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::Serialize;
use thiserror::Error;

type Cyclo = CycloElement<Rat>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CsaError {
    #[error("action element is not of order 2 modulo k")]
    ActionNotOrder2,
    #[error("twisting exponent is not fixed by the action")]
    TwistingNotCentral,
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DivisionFlag {
    Division,
    Split,
    Undetermined,
}

impl DivisionFlag {
    pub fn as_str(&self) -> &'static str {
        match self {
            DivisionFlag::Division => "division",
            DivisionFlag::Split => "split",
            DivisionFlag::Undetermined => "undetermined",
        }
    }
}

/// Quaternion algebra (a, b / F) with a tri-state division flag.
#[derive(Debug, Clone, PartialEq)]
pub struct QuaternionSymbol {
    pub center: AbelianFieldRef,
    pub a: Cyclo,
    pub b: Cyclo,
    pub division: DivisionFlag,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Body {
    /// The component is M_n(center).
    Field,
    Quaternion(QuaternionSymbol),
    /// Crossed product of degree > 2, kept opaque.
    CrossedHigher {
        degree: usize,
    },
}

/// A recognized simple component M_n(body) with the given center.
#[derive(Debug, Clone, PartialEq)]
pub struct SimpleComponent {
    pub matrix_size: usize,
    pub center: AbelianFieldRef,
    pub body: Body,
}

impl SimpleComponent {
    pub fn field(matrix_size: usize, center: AbelianFieldRef) -> Self {
        SimpleComponent {
            matrix_size,
            center,
            body: Body::Field,
        }
    }

    pub fn quaternion(matrix_size: usize, sym: QuaternionSymbol) -> Self {
        SimpleComponent {
            matrix_size,
            center: sym.center.clone(),
            body: Body::Quaternion(sym),
        }
    }

    pub fn body_degree(&self) -> usize {
        match &self.body {
            Body::Field => 1,
            Body::Quaternion(_) => 2,
            Body::CrossedHigher { degree } => *degree,
        }
    }

    /// Degree of the component over its center.
    pub fn total_degree(&self) -> usize {
        self.matrix_size * self.body_degree()
    }

    pub fn dimension_over_q(&self) -> usize {
        self.total_degree() * self.total_degree() * self.center.degree()
    }

    pub fn is_commutative(&self) -> bool {
        self.matrix_size == 1 && matches!(self.body, Body::Field)
    }

    pub fn division_flag(&self) -> DivisionFlag {
        match &self.body {
            Body::Field => {
                if self.matrix_size == 1 {
                    DivisionFlag::Division
                } else {
                    DivisionFlag::Split
                }
            }
            Body::Quaternion(q) => q.division,
            Body::CrossedHigher { .. } => DivisionFlag::Undetermined,
        }
    }

    /// Canonical ordering / deduplication key: catalog equivalence
    /// (center, matrix size, body degree, division flag, infinite
    /// ramification) refined by the exact finite ramification fingerprint
    /// when the symbol entries are rational.
    pub fn sort_key(&self) -> CatalogKey {
        let (ram_real, finite_ram, symbol_tag) = match &self.body {
            Body::Quaternion(q) => {
                let ram = ramification_profile(q)
                    .map(|p| p.ramified_real_places)
                    .unwrap_or_default();
                let fr = rational_pair(q).map(|(r, s)| {
                    ramified_places_q(&r, &s)
                        .into_iter()
                        .filter(|place| match place {
                            Place::Infinity => false,
                            Place::Finite(p) => q.center.local_degree_above(*p) % 2 == 1,
                        })
                        .map(|place| match place {
                            Place::Finite(p) => p,
                            Place::Infinity => unreachable!(),
                        })
                        .collect::<Vec<u64>>()
                });
                let tag = match fr {
                    Some(_) => String::new(),
                    // irrational entries: fall back to the literal symbol
                    None => format!("{:?}|{:?}", q.a, q.b),
                };
                (ram, fr, tag)
            }
            _ => (Vec::new(), Some(Vec::new()), String::new()),
        };
        CatalogKey {
            dimension: self.dimension_over_q(),
            center_conductor: self.center.conductor(),
            center_subgroup: self.center.subgroup().to_vec(),
            matrix_size: self.matrix_size,
            body_degree: self.body_degree(),
            division: self.division_flag(),
            ramified_real: ram_real,
            finite_ram,
            symbol_tag,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CatalogKey {
    pub dimension: usize,
    pub center_conductor: u32,
    pub center_subgroup: Vec<u32>,
    pub matrix_size: usize,
    pub body_degree: usize,
    pub division: DivisionFlag,
    pub ramified_real: Vec<u32>,
    pub finite_ram: Option<Vec<u64>>,
    pub symbol_tag: String,
}

impl std::fmt::Display for SimpleComponent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let inner = match &self.body {
            Body::Field => format!("{}", self.center),
            Body::Quaternion(q) => match (q.a.as_rational(), q.b.as_rational()) {
                (Some(a), Some(b)) => format!("quat({a},{b};{})", q.center),
                _ => format!("quat(<cyclo>,<cyclo>;{})", q.center),
            },
            Body::CrossedHigher { degree } => {
                format!("crossed(degree {degree};{})", self.center)
            }
        };
        if self.matrix_size == 1 {
            write!(f, "{inner}")
        } else {
            write!(f, "M{}({inner})", self.matrix_size)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Place {
    Finite(u64),
    Infinity,
}

fn val_p(x: &Rat, p: u64) -> i64 {
    let count = |n: &num_bigint::BigInt| -> i64 {
        let mut n = n.abs();
        let p = num_bigint::BigInt::from(p);
        let mut v = 0;
        while (&n % &p).is_zero() && !n.is_zero() {
            n /= &p;
            v += 1;
        }
        v
    };
    count(x.numer()) - count(x.denom())
}

/// The p-unit part of x reduced modulo m (a small power of p).
fn unit_mod(x: &Rat, p: u64, m: u64) -> u64 {
    let strip_reduce = |n: &num_bigint::BigInt| -> u64 {
        let mut n = n.abs();
        let pb = num_bigint::BigInt::from(p);
        while (&n % &pb).is_zero() {
            n /= &pb;
        }
        (n % num_bigint::BigInt::from(m)).to_u64().unwrap()
    };
    let sign_fix = |r: u64, negative: bool| if negative { (m - r % m) % m } else { r % m };
    let un = sign_fix(strip_reduce(x.numer()), x.numer().is_negative());
    let ud = sign_fix(strip_reduce(x.denom()), x.denom().is_negative());
    un * mod_inverse(ud, m) % m
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    let mut x = 1u64;
    loop {
        if a * x % m == 1 {
            return x;
        }
        x += 1;
        assert!(x <= m, "no inverse of {a} mod {m}");
    }
}

/// Hilbert symbol (a, b)_v over ℚ by the standard local formulas.
pub fn hilbert_symbol_q(a: &Rat, b: &Rat, place: Place) -> i8 {
    assert!(!a.is_zero() && !b.is_zero());
    match place {
        Place::Infinity => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Finite(2) => {
            let alpha = val_p(a, 2);
            let beta = val_p(b, 2);
            let u = unit_mod(a, 2, 8);
            let w = unit_mod(b, 2, 8);
            let eps = |x: u64| ((x - 1) / 2) % 2; // (x-1)/2 mod 2 for odd x mod 8
            let omega = |x: u64| ((x * x - 1) / 8) % 2;
            let e = eps(u) * eps(w)
                + (alpha.rem_euclid(2) as u64) * omega(w)
                + (beta.rem_euclid(2) as u64) * omega(u);
            if e.is_multiple_of(2) {
                1
            } else {
                -1
            }
        }
        Place::Finite(p) => {
            let alpha = val_p(a, p);
            let beta = val_p(b, p);
            let u = unit_mod(a, p, p);
            let w = unit_mod(b, p, p);
            let mut s = 1i64;
            if alpha % 2 != 0 && beta % 2 != 0 && (p - 1) / 2 % 2 == 1 {
                s = -s;
            }
            if beta % 2 != 0 {
                s *= crate::arith::legendre(u as i64, p);
            }
            if alpha % 2 != 0 {
                s *= crate::arith::legendre(w as i64, p);
            }
            s as i8
        }
    }
}

/// Places where (a, b)_v = −1; finitely many, drawn from 2, ∞ and the odd
/// primes dividing either entry.
pub fn ramified_places_q(a: &Rat, b: &Rat) -> Vec<Place> {
    let mut primes = vec![2u64];
    for x in [a, b] {
        for n in [x.numer().clone(), x.denom().clone()] {
            let n = n.abs().to_u64().expect("desk-scale rational entries");
            for (p, _) in crate::arith::factorize(n) {
                if p > 2 && !primes.contains(&p) {
                    primes.push(p);
                }
            }
        }
    }
    primes.sort_unstable();
    let mut out = Vec::new();
    for p in primes {
        if hilbert_symbol_q(a, b, Place::Finite(p)) == -1 {
            out.push(Place::Finite(p));
        }
    }
    if hilbert_symbol_q(a, b, Place::Infinity) == -1 {
        out.push(Place::Infinity);
    }
    debug_assert!(out.len() % 2 == 0, "product formula violated");
    out
}

/// Reduce an entry to a rational representative of its square class in F,
/// when the entry is a rational multiple of a root of unity. Odd-order
/// roots are squares; order ≡ 2 mod 4 contributes −1; order ≡ 4 mod 8
/// needs ζ₄ ∈ F, where ζ₄ ≡ 2 modulo squares (and signs die since −1 is a
/// square); order divisible by 8 is not rationally reducible.
pub fn rationalize_entry(x: &Cyclo, f: &AbelianFieldRef) -> Option<Rat> {
    let (q, order) = root_of_unity_part(x)?;
    if order % 2 == 1 {
        return Some(q);
    }
    if order % 4 != 0 {
        return Some(-q);
    }
    if order % 8 != 0 {
        debug_assert!(f.contains(&AbelianFieldRef::from_sqrt(-1).unwrap()));
        return Some(q.abs() * rat(2));
    }
    None
}

fn rational_pair(q: &QuaternionSymbol) -> Option<(Rat, Rat)> {
    Some((
        rationalize_entry(&q.a, &q.center)?,
        rationalize_entry(&q.b, &q.center)?,
    ))
}

/// Decide division/split status where a sound rule applies.
///
/// Rules, in order: a square entry splits; rational entries over an
/// abelian center are decided exactly (ramified rational places versus
/// odd local degrees of the center); totally definite symbols over
/// totally real centers are division; otherwise undetermined.
pub fn is_division(sym: &QuaternionSymbol) -> DivisionFlag {
    let f = &sym.center;
    let ra = rationalize_entry(&sym.a, f);
    let rb = rationalize_entry(&sym.b, f);
    for q in [&ra, &rb].into_iter().flatten() {
        if f.rational_is_square(q) {
            return DivisionFlag::Split;
        }
    }
    if let (Some(r), Some(s)) = (&ra, &rb) {
        let ram = ramified_places_q(r, s);
        let survives = ram.iter().any(|place| match place {
            Place::Infinity => f.is_totally_real(),
            Place::Finite(p) => f.local_degree_above(*p) % 2 == 1,
        });
        return if survives {
            DivisionFlag::Division
        } else {
            DivisionFlag::Split
        };
    }
    // totally definite over a totally real center
    if f.is_totally_real() {
        let neg = |x: &Cyclo| {
            real_embedding_signs(x, f)
                .map(|signs| signs.iter().all(|&s| s == -1))
                .unwrap_or(false)
        };
        if neg(&sym.a) && neg(&sym.b) {
            return DivisionFlag::Division;
        }
    }
    DivisionFlag::Undetermined
}

/// Build the quaternion symbol of a degree-2 cyclic cyclotomic crossed
/// product: action ζ ↦ ζ^h of order 2 with twisting u² = ζ^j gives
/// (a, b / F) with a = (ζ − ζ^h)², b = ζ^j over the fixed field F.
/// Rational entries are reduced by stripping square integer factors.
pub fn quaternion_from_cyclic(
    k: u32,
    h: u32,
    j: u32,
    _matrix_size: usize,
) -> Result<QuaternionSymbol, CsaError> {
    let h = h % k;
    if h == 1 % k || (h as u64 * h as u64) % k as u64 != 1 % k as u64 {
        return Err(CsaError::ActionNotOrder2);
    }
    if (j as u64 * h as u64) % k as u64 != j as u64 % k as u64 {
        return Err(CsaError::TwistingNotCentral);
    }
    let center = AbelianFieldRef::new(k, &[h]);
    let z = Cyclo::zeta(k);
    let zh = Cyclo::zeta_pow(k, h);
    let lambda = z.sub(&zh);
    let a = strip_square_factor(&lambda.mul(&lambda));
    let b = strip_square_factor(&Cyclo::zeta_pow(k, j));
    let mut sym = QuaternionSymbol {
        center,
        a,
        b,
        division: DivisionFlag::Undetermined,
    };
    sym.division = is_division(&sym);
    Ok(sym)
}

/// Strip square integer factors from rational entries: −4 becomes −1.
fn strip_square_factor(x: &Cyclo) -> Cyclo {
    match x.as_rational() {
        None => x.clone(),
        Some(q) => {
            let n = (q.numer() * q.denom())
                .to_i64()
                .expect("desk-scale rational entry");
            Cyclo::rational(x.conductor(), rat(crate::arith::squarefree_part(n)))
        }
    }
}

/// Recognize a crossed-product component: trivial acting group gives a
/// matrix algebra over the cyclotomic field, order two gives a quaternion
/// symbol (split ones are normalized to matrix-over-field immediately),
/// larger acting groups stay opaque.
pub fn recognize_component(data: &CrossedProductData) -> SimpleComponent {
    let n = data.matrix_size;
    let k = data.k as u32;
    match data.a_order() {
        1 => SimpleComponent::field(n, AbelianFieldRef::from_zeta(k)),
        2 => {
            let h = data.action[1];
            let j = data.twisting[1][1];
            let sym = quaternion_from_cyclic(k, h, j, n)
                .expect("validated crossed data yields a quaternion");
            if sym.division == DivisionFlag::Split {
                SimpleComponent::field(2 * n, sym.center)
            } else {
                SimpleComponent::quaternion(n, sym)
            }
        }
        _ => {
            let action_u32: Vec<u32> = data.action.clone();
            let center = AbelianFieldRef::new(k, &action_u32);
            SimpleComponent {
                matrix_size: n,
                center,
                body: Body::CrossedHigher {
                    degree: data.a_order(),
                },
            }
        }
    }
}

/// Ramification at the infinite places of the center.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RamificationProfile {
    /// Embedding representatives (cosets) where both entries are negative.
    pub ramified_real_places: Vec<u32>,
    /// Real places not ramified plus pairs of complex embeddings.
    pub unramified_infinite: usize,
}

pub fn ramification_profile(q: &QuaternionSymbol) -> Result<RamificationProfile, FieldError> {
    let f = &q.center;
    let sig = f.signature();
    if !f.is_totally_real() {
        return Ok(RamificationProfile {
            ramified_real_places: Vec::new(),
            unramified_infinite: sig.r2,
        });
    }
    let sa = real_embedding_signs(&q.a, f)?;
    let sb = real_embedding_signs(&q.b, f)?;
    let reps = f.embedding_representatives();
    let ramified: Vec<u32> = reps
        .iter()
        .zip(sa.iter().zip(&sb))
        .filter(|(_, (&x, &y))| x < 0 && y < 0)
        .map(|(&r, _)| r)
        .collect();
    let unramified_infinite = sig.r1 - ramified.len() + sig.r2;
    Ok(RamificationProfile {
        ramified_real_places: ramified,
        unramified_infinite,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kleinian {
    Yes,
    No,
    Undetermined,
}

/// Kleinian type of a simple algebra: a field, or a quaternion algebra
/// unramified at at most one infinite place.
pub fn is_kleinian_csa(c: &SimpleComponent) -> Kleinian {
    if c.is_commutative() {
        return Kleinian::Yes;
    }
    if c.total_degree() > 2 {
        return Kleinian::No;
    }
    let sig = c.center.signature();
    let split_verdict = || {
        if sig.r1 + sig.r2 <= 1 {
            Kleinian::Yes
        } else {
            Kleinian::No
        }
    };
    match &c.body {
        Body::Field => split_verdict(),
        Body::Quaternion(q) => {
            let division_verdict = || match ramification_profile(q) {
                Ok(p) => {
                    if p.unramified_infinite <= 1 {
                        Kleinian::Yes
                    } else {
                        Kleinian::No
                    }
                }
                Err(_) => Kleinian::Undetermined,
            };
            match q.division {
                DivisionFlag::Split => split_verdict(),
                DivisionFlag::Division => division_verdict(),
                DivisionFlag::Undetermined => {
                    let (s, d) = (split_verdict(), division_verdict());
                    if s == d {
                        s
                    } else {
                        Kleinian::Undetermined
                    }
                }
            }
        }
        Body::CrossedHigher { .. } => Kleinian::No,
    }
}

/// The explicit case list equivalent to the Kleinian criterion, used as a
/// cross-check: field; totally definite quaternion; M₂(ℚ); M₂ of an
/// imaginary quadratic; division over totally real ramified at all but
/// one real place; division with one complex pair ramified at all reals.
pub fn is_kleinian_by_case_list(c: &SimpleComponent) -> Kleinian {
    if c.is_commutative() {
        return Kleinian::Yes;
    }
    if c.total_degree() > 2 {
        return Kleinian::No;
    }
    let sig = c.center.signature();
    let split_case = || {
        let is_q = c.center.is_rationals();
        let imag_quad = c.center.is_imaginary_quadratic();
        if is_q || imag_quad {
            Kleinian::Yes
        } else {
            Kleinian::No
        }
    };
    match &c.body {
        Body::Field => split_case(),
        Body::Quaternion(q) => {
            let division_case = || match ramification_profile(q) {
                Err(_) => Kleinian::Undetermined,
                Ok(p) => {
                    let ram = p.ramified_real_places.len();
                    let totally_definite = sig.r2 == 0 && ram == sig.r1 && sig.r1 > 0;
                    let all_but_one_real = sig.r2 == 0 && sig.r1 >= 1 && ram == sig.r1 - 1;
                    let one_complex_all_real = sig.r2 == 1 && ram == sig.r1;
                    if totally_definite || all_but_one_real || one_complex_all_real {
                        Kleinian::Yes
                    } else {
                        Kleinian::No
                    }
                }
            };
            match q.division {
                DivisionFlag::Split => split_case(),
                DivisionFlag::Division => division_case(),
                DivisionFlag::Undetermined => {
                    let (s, d) = (split_case(), division_case());
                    if s == d {
                        s
                    } else {
                        Kleinian::Undetermined
                    }
                }
            }
        }
        Body::CrossedHigher { .. } => Kleinian::No,
    }
}

/// Outcome of the Schur-algebra-of-Kleinian-type classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchurKleinian {
    Case(u8),
    NotKleinian,
    /// Undetermined division status blocked the classification.
    Unknown,
}

impl SchurKleinian {
    pub fn case(&self) -> Option<u8> {
        match self {
            SchurKleinian::Case(n) => Some(*n),
            _ => None,
        }
    }
}

/// Which of the four Schur–Kleinian cases the component falls into:
/// (1) M₂ of ℚ or an imaginary quadratic; (2) division (−1,−1) over
/// ℚ(√d), d ≡ 1 mod 8; (3) division (−1,−3) over ℚ(√d), d ≡ 1 mod 3;
/// (4) division (λ_n², −1) over a field with at least one real embedding,
/// at most one complex pair, containing some η_n.
pub fn classify_schur_kleinian(c: &SimpleComponent) -> SchurKleinian {
    assert!(
        !c.is_commutative(),
        "classification applies to noncommutative components"
    );
    if c.total_degree() > 2 {
        return SchurKleinian::NotKleinian;
    }
    let sig = c.center.signature();
    match &c.body {
        Body::Field => {
            if c.center.is_rationals() || c.center.is_imaginary_quadratic() {
                SchurKleinian::Case(1)
            } else {
                SchurKleinian::NotKleinian
            }
        }
        Body::CrossedHigher { .. } => SchurKleinian::NotKleinian,
        Body::Quaternion(q) => match q.division {
            DivisionFlag::Undetermined => SchurKleinian::Unknown,
            DivisionFlag::Split => {
                if c.center.is_rationals() || c.center.is_imaginary_quadratic() {
                    SchurKleinian::Case(1)
                } else {
                    SchurKleinian::NotKleinian
                }
            }
            DivisionFlag::Division => {
                if let Some(d) = c.center.quadratic_d() {
                    if d < 0 {
                        // imaginary quadratic: LQuat cases by finite ramification
                        if let Some((r, s)) = rational_pair(q) {
                            let ram = ramified_places_q(&r, &s);
                            let over_two = ram.contains(&Place::Finite(2));
                            let over_three = ram.contains(&Place::Finite(3));
                            if over_two && d.rem_euclid(8) == 1 {
                                return SchurKleinian::Case(2);
                            }
                            if over_three && d.rem_euclid(3) == 1 {
                                return SchurKleinian::Case(3);
                            }
                        }
                        return SchurKleinian::NotKleinian;
                    }
                }
                // case 4: at least one real embedding, at most one complex
                // pair, ramified at every real place, some eta_n in K
                if sig.r1 >= 1 && sig.r2 <= 1 {
                    if let Ok(p) = ramification_profile(q) {
                        if p.ramified_real_places.len() == sig.r1 && eta_subfield_exists(&c.center)
                        {
                            return SchurKleinian::Case(4);
                        }
                    }
                }
                SchurKleinian::NotKleinian
            }
        },
    }
}

/// Some n ≥ 3 with ℚ(η_n) ⊆ K; n is bounded by twice the conductor.
fn eta_subfield_exists(k: &AbelianFieldRef) -> bool {
    (3..=2 * k.conductor() + 2).any(|n| k.contains(&AbelianFieldRef::from_eta(n)))
}

/// Base change of a recognized component along an abelian field K: the
/// center becomes the compositum and quaternion bodies are re-decided.
pub fn component_over(c: &SimpleComponent, k: &AbelianFieldRef) -> SimpleComponent {
    let new_center = k.compositum(&c.center);
    match &c.body {
        Body::Field => SimpleComponent::field(c.matrix_size, new_center),
        Body::CrossedHigher { degree } => SimpleComponent {
            matrix_size: c.matrix_size,
            center: new_center,
            body: Body::CrossedHigher { degree: *degree },
        },
        Body::Quaternion(q) => {
            let mut sym = QuaternionSymbol {
                center: new_center,
                a: q.a.clone(),
                b: q.b.clone(),
                division: DivisionFlag::Undetermined,
            };
            sym.division = is_division(&sym);
            if sym.division == DivisionFlag::Split {
                SimpleComponent::field(2 * c.matrix_size, sym.center)
            } else {
                SimpleComponent::quaternion(c.matrix_size, sym)
            }
        }
    }
}

fn serialize_cyclo<Ser: serde::Serializer>(x: &Cyclo, s: Ser) -> Result<Ser::Ok, Ser::Error> {
    let mut st = s.serialize_struct("Cyclo", 2)?;
    st.serialize_field("conductor", &x.conductor())?;
    let coeffs: Vec<String> = x.coeffs().iter().map(|c| c.to_string()).collect();
    st.serialize_field("coeffs", &coeffs)?;
    st.end()
}

struct CycloSer<'a>(&'a Cyclo);
impl Serialize for CycloSer<'_> {
    fn serialize<Ser: serde::Serializer>(&self, s: Ser) -> Result<Ser::Ok, Ser::Error> {
        serialize_cyclo(self.0, s)
    }
}

impl Serialize for SimpleComponent {
    fn serialize<Ser: serde::Serializer>(&self, s: Ser) -> Result<Ser::Ok, Ser::Error> {
        let kind = match &self.body {
            Body::Field => "field",
            Body::Quaternion(_) => "quaternion",
            Body::CrossedHigher { .. } => "crossed",
        };
        let mut st = s.serialize_struct("SimpleComponent", 8)?;
        st.serialize_field("matrix_size", &self.matrix_size)?;
        st.serialize_field("center", &self.center)?;
        st.serialize_field("kind", kind)?;
        match &self.body {
            Body::Quaternion(q) => {
                #[derive(Serialize)]
                struct Sym<'a> {
                    a: CycloSer<'a>,
                    b: CycloSer<'a>,
                }
                st.serialize_field(
                    "symbol",
                    &Sym {
                        a: CycloSer(&q.a),
                        b: CycloSer(&q.b),
                    },
                )?;
            }
            _ => st.skip_field("symbol")?,
        }
        st.serialize_field("division", self.division_flag().as_str())?;
        st.serialize_field("dimension_over_Q", &self.dimension_over_q())?;
        match &self.body {
            Body::Quaternion(q) => {
                let ram = ramification_profile(q)
                    .map(|p| p.ramified_real_places)
                    .unwrap_or_default();
                st.serialize_field("ramified_real_places", &ram)?;
            }
            _ => st.serialize_field("ramified_real_places", &Vec::<u32>::new())?,
        }
        let case = if self.is_commutative() {
            None
        } else {
            classify_schur_kleinian(self).case()
        };
        st.serialize_field("schur_kleinian_case", &case)?;
        st.end()
    }
}

/// Brute-force local solvability oracle for z² = a·x² + b·y²: a primitive
/// solution modulo p^e (e = 3 for odd p, 6 for p = 2), or a sign check at
/// the real place. Test-support oracle for the Hilbert symbol formulas.
pub fn hilbert_symbol_brute(a: i64, b: i64, place: Place) -> i8 {
    match place {
        Place::Infinity => {
            if a < 0 && b < 0 {
                -1
            } else {
                1
            }
        }
        Place::Finite(p) => {
            let e = if p == 2 { 6 } else { 3 };
            let m = p.pow(e) as i64;
            let squares: Vec<i64> = (0..m).map(|z| z * z % m).collect();
            for x in 0..m {
                for y in 0..m {
                    let rhs = ((a % m) * squares[x as usize] % m
                        + (b % m) * squares[y as usize] % m
                        + 2 * m * m)
                        % m;
                    for z in 0..m {
                        if squares[z as usize] == rhs
                            && (x % p as i64 != 0 || y % p as i64 != 0 || z % p as i64 != 0)
                        {
                            return 1;
                        }
                    }
                }
            }
            -1
        }
    }
}
