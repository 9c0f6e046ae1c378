//! Rigorous signs of real-embedding values.
//!
//! A totally real cyclotomic value σ_a(x) is a rational combination of
//! cos(2πm/k). Each cosine is either rational (k' ≤ 6 after reducing the
//! fraction) or a known root of the minimal polynomial of η_{k'}: the
//! conjugates 2cos(2πa/k') decrease as a runs over 1 ≤ a < k'/2 coprime to
//! k', so sorting the isolated real roots in descending order matches them
//! to embeddings. Intervals have exact rational endpoints and are refined
//! by bisection; the working precision doubles from 64 up to a 4096-bit
//! cap, which a nonzero value can never exhaust.

use super::{AbelianFieldRef, CycloElement, FieldError};
use crate::arith::{gcd, lcm, units_mod};
use crate::poly::{isolate_real_roots, refine_root, Poly};
use crate::{rat, Rat};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

struct EtaRoots {
    minpoly: Poly<Rat>,
    /// residues 1 ≤ a < k/2 with gcd(a,k) = 1, ascending; entry i holds the
    /// current isolating interval of 2cos(2πa_i/k)
    reps: Vec<u32>,
    intervals: Vec<(Rat, Rat)>,
}

fn eta_cache() -> &'static Mutex<HashMap<u32, EtaRoots>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, EtaRoots>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn eta_roots_for(k: u32) -> EtaRoots {
    let z = CycloElement::<Rat>::zeta(k);
    let eta = z.add(&CycloElement::zeta_pow(k, k - 1));
    let minpoly = super::minimal_polynomial(&eta);
    let reps: Vec<u32> = units_mod(k as u64)
        .into_iter()
        .map(|a| a as u32)
        .filter(|&a| a < k.div_ceil(2))
        .collect();
    let mut roots = isolate_real_roots(&minpoly);
    debug_assert_eq!(roots.len(), reps.len());
    // descending roots correspond to ascending a
    roots.reverse();
    EtaRoots {
        minpoly,
        reps,
        intervals: roots,
    }
}

/// Exact rational value of cos(2πm/k) when there is one.
fn rational_cos(m: u32, k: u32) -> Option<Rat> {
    match k {
        1 => Some(rat(1)),
        2 => Some(rat(-1)),
        3 => Some(crate::ratio(-1, 2)),
        4 => Some(rat(0)),
        6 => Some(crate::ratio(1, 2)),
        _ => {
            debug_assert!(m >= 1 && gcd(m as u64, k as u64) == 1);
            None
        }
    }
}

/// An interval with exact rational endpoints containing cos(2πm/k), of
/// width at most `width`. Rational cosines come back as point intervals.
pub fn cos_interval(m: u32, k: u32, width: &Rat) -> (Rat, Rat) {
    let m = m % k;
    let g = gcd(m as u64, k as u64) as u32;
    let (mut m, k) = (m / g, k / g);
    if m > k / 2 {
        m = k - m;
    }
    if let Some(v) = rational_cos(m, k) {
        return (v.clone(), v);
    }
    let mut cache = eta_cache().lock().unwrap();
    let entry = cache.entry(k).or_insert_with(|| eta_roots_for(k));
    let idx = entry
        .reps
        .binary_search(&m)
        .expect("reduced cosine index is coprime and below k/2");
    let target = width.clone() * rat(2);
    let iv = entry.intervals[idx].clone();
    let refined = refine_root(&entry.minpoly, iv, &target);
    entry.intervals[idx] = refined.clone();
    let half = crate::ratio(1, 2);
    (refined.0 * half.clone(), refined.1 * half)
}

fn width_at_bits(bits: u32) -> Rat {
    Rat::new(BigInt::one(), BigInt::one() << bits)
}

/// One sign per real embedding of `f` (indexed by
/// [`AbelianFieldRef::embedding_representatives`]) for a nonzero element
/// of the totally real field `f`.
pub fn real_embedding_signs(
    x: &CycloElement<Rat>,
    f: &AbelianFieldRef,
) -> Result<Vec<i8>, FieldError> {
    if x.is_zero() {
        return Err(FieldError::ZeroElement);
    }
    if !f.is_totally_real() {
        return Err(FieldError::NotTotallyReal);
    }
    if !f.contains_element(x) {
        return Err(FieldError::NotInField);
    }
    let l = lcm(f.conductor() as u64, x.conductor() as u64) as u32;
    let xl = x.lift(l);
    let mut reps: Vec<u32> = Vec::new();
    {
        // embeddings of f indexed by cosets of the lifted subgroup
        let h = f.lift_subgroup(l).unwrap();
        let mut seen: Vec<u32> = Vec::new();
        for a in units_mod(l as u64) {
            let a = a as u32;
            if seen.contains(&a) {
                continue;
            }
            reps.push(a);
            for &u in &h {
                seen.push(((a as u64 * u as u64) % l as u64) as u32);
            }
        }
    }
    // order the lifted cosets to match embedding_representatives(): each
    // lifted coset restricts to one coset at the field's own conductor
    let fc = f.conductor();
    let class_at_f = |a: u32| -> u32 {
        if fc == 1 {
            return 0;
        }
        f.subgroup()
            .iter()
            .map(|&h| ((a as u64 * h as u64) % fc as u64) as u32)
            .min()
            .unwrap()
    };
    let order = f.embedding_representatives();
    reps.sort_by_key(|&a| {
        order
            .iter()
            .position(|&r| class_at_f(r) == class_at_f(a % fc.max(1)))
            .expect("lifted coset restricts to an embedding class")
    });
    let mut signs = Vec::with_capacity(reps.len());
    for &a in &reps {
        signs.push(embedding_sign(&xl, a, l)?);
    }
    Ok(signs)
}

fn embedding_sign(xl: &CycloElement<Rat>, a: u32, l: u32) -> Result<i8, FieldError> {
    // σ_a(x) = Σ_j c_j ζ^{aj} is real; its value is Σ_j c_j cos(2π(aj)/l)
    let terms: Vec<(Rat, u32)> = xl
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, c)| (c.clone(), ((a as u64 * j as u64) % l as u64) as u32))
        .collect();
    let mut bits = 64u32;
    loop {
        let width = width_at_bits(bits);
        let mut lo = rat(0);
        let mut hi = rat(0);
        for (c, m) in &terms {
            let (clo, chi) = cos_interval(*m, l, &width);
            if c >= &rat(0) {
                lo += c.clone() * clo;
                hi += c.clone() * chi;
            } else {
                lo += c.clone() * chi;
                hi += c.clone() * clo;
            }
        }
        if lo > rat(0) {
            return Ok(1);
        }
        if hi < rat(0) {
            return Ok(-1);
        }
        if bits >= 4096 {
            return Err(FieldError::PrecisionExceeded);
        }
        bits *= 2;
    }
}
