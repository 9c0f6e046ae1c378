//! Dense univariate polynomials over a [`Scalar`], plus the pieces of real
//! and cyclotomic polynomial arithmetic the field layer needs: exact
//! division, gcd, Sturm sequences, real-root counting and isolation, the
//! cyclotomic polynomials, and a factor search for integer polynomials.

use crate::scalar::Scalar;
use std::fmt;

/// Polynomial with ascending coefficients; no trailing zeros, zero = empty.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> Poly<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly {
            coeffs: vec![S::one()],
        }
    }

    pub fn constant(c: S) -> Self {
        Self::new(vec![c])
    }

    /// The monomial c·x^n.
    pub fn monomial(c: S, n: usize) -> Self {
        let mut coeffs = vec![S::zero(); n + 1];
        coeffs[n] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> S {
        self.coeffs.get(i).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&S> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &S) -> S {
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        Self::new(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        Self::new(out)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| S::zero() - c.clone()).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Euclidean division by a nonzero divisor; panics on zero divisor.
    pub fn divmod(&self, div: &Self) -> (Self, Self) {
        let d = div.degree().expect("division by zero polynomial");
        let lead = div.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![S::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = rem[i].clone() / lead.clone();
            quot[i - d] = q.clone();
            for j in 0..=d {
                let t = rem[i - d + j].clone() - q.clone() * div.coeffs[j].clone();
                rem[i - d + j] = t;
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem(&self, div: &Self) -> Self {
        self.divmod(div).1
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * S::from_int(i as i64))
                .collect(),
        )
    }

    pub fn into_monic(self) -> Self {
        match self.leading() {
            None => self,
            Some(l) if l.is_one() => self,
            Some(l) => {
                let l = l.clone();
                Self::new(self.coeffs.into_iter().map(|c| c / l.clone()).collect())
            }
        }
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.into_monic()
    }

    /// Squarefree means gcd with the derivative is constant.
    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Extended gcd: returns (g, u, v) with u·self + v·rhs = g, g monic.
    pub fn extended_gcd(&self, rhs: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), rhs.clone());
        let (mut u0, mut u1) = (Self::one(), Self::zero());
        let (mut v0, mut v1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1);
            r0 = r1;
            r1 = r;
            let un = u0.sub(&q.mul(&u1));
            u0 = u1;
            u1 = un;
            let vn = v0.sub(&q.mul(&v1));
            v0 = v1;
            v1 = vn;
        }
        if let Some(l) = r0.leading().cloned() {
            if !l.is_one() {
                let inv = S::one() / l;
                r0 = r0.scale(&inv);
                u0 = u0.scale(&inv);
                v0 = v0.scale(&inv);
            }
        }
        (r0, u0, v0)
    }
}

impl<S: Scalar> fmt::Debug for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
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
                1 => format!("{c}*x"),
                _ => format!("{c}*x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

fn sign<S: Scalar>(x: &S) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_negative() {
        -1
    } else {
        1
    }
}

/// Sturm chain of a squarefree polynomial.
pub fn sturm_chain<S: Scalar>(f: &Poly<S>) -> Vec<Poly<S>> {
    let mut chain = vec![f.clone(), f.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            return chain;
        }
        let r = chain[n - 2].rem(&chain[n - 1]).neg();
        if r.is_zero() {
            return chain;
        }
        chain.push(r);
    }
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn variations_at<S: Scalar>(chain: &[Poly<S>], x: &S) -> usize {
    variations(chain.iter().map(|p| sign(&p.eval(x))))
}

fn variations_at_infinity<S: Scalar>(chain: &[Poly<S>], positive: bool) -> usize {
    variations(chain.iter().map(|p| match p.degree() {
        None => 0,
        Some(d) => {
            let s = sign(p.leading().unwrap());
            if positive || d % 2 == 0 {
                s
            } else {
                -s
            }
        }
    }))
}

/// Number of distinct real roots of a squarefree polynomial.
pub fn real_root_count<S: Scalar>(f: &Poly<S>) -> usize {
    match f.degree() {
        None | Some(0) => 0,
        _ => {
            let chain = sturm_chain(f);
            variations_at_infinity(&chain, false) - variations_at_infinity(&chain, true)
        }
    }
}

/// Number of roots in the half-open interval (a, b].
pub fn root_count_in<S: Scalar>(chain: &[Poly<S>], a: &S, b: &S) -> usize {
    variations_at(chain, a) - variations_at(chain, b)
}

/// A bound B such that all real roots lie in (−B, B).
pub fn root_bound<S: Scalar + PartialOrd>(f: &Poly<S>) -> S {
    let lead = f.leading().expect("root bound of zero polynomial").clone();
    let mut m = S::zero();
    for c in f.coeffs() {
        let a = c.clone().abs() / lead.clone().abs();
        if a > m {
            m = a;
        }
    }
    m + S::one() + S::one()
}

/// Isolating intervals (a, b] for every real root of a squarefree
/// polynomial with f(a) ≠ 0 and f(b) ≠ 0, sorted ascending.
pub fn isolate_real_roots<S: Scalar + PartialOrd>(f: &Poly<S>) -> Vec<(S, S)> {
    let chain = sturm_chain(f);
    let b = root_bound(f);
    let a = S::zero() - b.clone();
    let mut work = vec![(a, b)];
    let mut done = Vec::new();
    let half = S::one() / S::from_int(2);
    while let Some((lo, hi)) = work.pop() {
        let n = root_count_in(&chain, &lo, &hi);
        match n {
            0 => {}
            1 => done.push((lo, hi)),
            _ => {
                let mut mid = (lo.clone() + hi.clone()) * half.clone();
                // nudge off an exact root, which can only be hit at a
                // rational point
                let third = S::one() / S::from_int(3);
                while sign(&f.eval(&mid)) == 0 {
                    mid = lo.clone() + (mid.clone() - lo.clone()) * third.clone();
                }
                work.push((lo, mid.clone()));
                work.push((mid, hi));
            }
        }
    }
    done.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
    done
}

/// Halve an isolating interval until its width is at most `width`. The
/// interval must contain exactly one simple root, so the endpoint signs
/// differ and plain bisection applies.
pub fn refine_root<S: Scalar + PartialOrd>(f: &Poly<S>, iv: (S, S), width: &S) -> (S, S) {
    let (mut lo, mut hi) = iv;
    let slo = sign(&f.eval(&lo));
    debug_assert!(slo != 0 && sign(&f.eval(&hi)) != 0 && slo != sign(&f.eval(&hi)));
    let half = S::one() / S::from_int(2);
    let mut slo = slo;
    while hi.clone() - lo.clone() > *width {
        let mid = (lo.clone() + hi.clone()) * half.clone();
        let sm = sign(&f.eval(&mid));
        if sm == 0 {
            // exact rational root: collapse to a degenerate interval
            return (mid.clone(), mid);
        }
        if sm == slo {
            lo = mid;
            slo = sm;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

/// The k-th cyclotomic polynomial with machine-integer coefficients.
/// Desk-scale k keeps all coefficients tiny.
pub fn cyclotomic_i64(k: u32) -> Poly<i64> {
    let mut num = vec![0i64; k as usize + 1];
    num[0] = -1;
    num[k as usize] = 1;
    let mut f = Poly::new(num);
    for d in crate::arith::divisors(k as u64) {
        if d < k as u64 {
            let phi_d = cyclotomic_i64(d as u32);
            let (q, r) = f.divmod(&phi_d);
            debug_assert!(r.is_zero());
            f = q;
        }
    }
    f
}

/// The k-th cyclotomic polynomial over the requested scalar.
pub fn cyclotomic<S: Scalar>(k: u32) -> Poly<S> {
    Poly::new(
        cyclotomic_i64(k)
            .coeffs()
            .iter()
            .map(|&c| S::from_int(c))
            .collect(),
    )
}

/// Search for a nontrivial monic integer factor of a monic squarefree
/// integer polynomial (Kronecker's interpolation method). Returns a factor
/// or `None` if the polynomial is irreducible over ℚ.
pub fn monic_integer_factor(f: &Poly<i64>) -> Option<Poly<i64>> {
    let deg = f.degree()?;
    if deg <= 1 {
        return None;
    }
    for d in 1..=deg / 2 {
        if let Some(g) = factor_of_degree(f, d) {
            return Some(g);
        }
    }
    None
}

fn signed_divisors(n: i64) -> Vec<i64> {
    let mut out = Vec::new();
    let m = n.unsigned_abs();
    for d in 1..=m {
        if d * d > m {
            break;
        }
        if m.is_multiple_of(d) {
            out.push(d as i64);
            out.push(-(d as i64));
            let q = (m / d) as i64;
            if q != d as i64 {
                out.push(q);
                out.push(-q);
            }
        }
    }
    out
}

fn factor_of_degree(f: &Poly<i64>, d: usize) -> Option<Poly<i64>> {
    // sample points 0, 1, -1, 2, -2, ...
    let points: Vec<i64> = (0..)
        .map(|i: i64| if i % 2 == 0 { i / 2 } else { -(i / 2 + 1) })
        .take(d + 1)
        .collect();
    let values: Vec<i64> = points.iter().map(|&x| f.eval(&x)).collect();
    if values.contains(&0) {
        // rational (integer) root: linear factor
        let x0 = points[values.iter().position(|&v| v == 0).unwrap()];
        return Some(Poly::new(vec![-x0, 1]));
    }
    let choices: Vec<Vec<i64>> = values.iter().map(|&v| signed_divisors(v)).collect();
    let total: usize = choices.iter().map(|c| c.len()).product();
    assert!(
        total <= 4_000_000,
        "factor search space too large for desk-scale irreducibility test"
    );
    let mut idx = vec![0usize; d + 1];
    loop {
        let vals: Vec<i64> = (0..=d).map(|i| choices[i][idx[i]]).collect();
        if let Some(g) = interpolate_integer(&points, &vals, d) {
            if g.degree() == Some(d) {
                let gq: Poly<crate::Rat> = to_rat_poly(&g);
                let fq: Poly<crate::Rat> = to_rat_poly(f);
                if fq.rem(&gq).is_zero() {
                    return Some(g);
                }
            }
        }
        // odometer
        let mut i = 0;
        loop {
            idx[i] += 1;
            if idx[i] < choices[i].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
            if i > d {
                return None;
            }
        }
    }
}

fn to_rat_poly(f: &Poly<i64>) -> Poly<crate::Rat> {
    Poly::new(f.coeffs().iter().map(|&c| crate::rat(c)).collect())
}

/// Lagrange interpolation; returns the polynomial only when all
/// coefficients are integers after normalizing to positive leading sign.
fn interpolate_integer(points: &[i64], values: &[i64], d: usize) -> Option<Poly<i64>> {
    let mut acc: Poly<crate::Rat> = Poly::zero();
    for i in 0..=d {
        let mut term = Poly::constant(crate::rat(values[i]));
        for j in 0..=d {
            if i == j {
                continue;
            }
            let denom = crate::rat(points[i] - points[j]);
            let lin = Poly::new(vec![crate::rat(-points[j]), crate::rat(1)]);
            term = term.mul(&lin).scale(&(crate::rat(1) / denom));
        }
        acc = acc.add(&term);
    }
    let mut out = Vec::with_capacity(acc.coeffs().len());
    for c in acc.coeffs() {
        if !c.is_integer() {
            return None;
        }
        let v: i64 = num_traits::ToPrimitive::to_i64(&c.to_integer())?;
        out.push(v);
    }
    let mut g = Poly::new(out);
    if g.leading().is_some_and(|&l| l < 0) {
        g = g.neg();
    }
    Some(g)
}

/// Irreducibility over ℚ for a monic integer polynomial. The squarefree
/// test runs over ℚ since integer gcds truncate.
pub fn is_irreducible_monic(f: &Poly<i64>) -> bool {
    match f.degree() {
        None | Some(0) => false,
        Some(1) => true,
        _ => to_rat_poly(f).is_squarefree() && monic_integer_factor(f).is_none(),
    }
}
