//! Elementary integer arithmetic: gcd, factorization by trial division,
//! Euler phi, unit groups modulo k, Kronecker symbols.
//!
//! Everything here works at desk scale (conductors and discriminants of a
//! few thousand at most); factorization is plain trial division.

/// Greatest common divisor of two non-negative integers.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Prime factorization with multiplicities, ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Squarefree part of a nonzero integer, sign preserved: n = s·m² with s squarefree.
pub fn squarefree_part(n: i64) -> i64 {
    assert!(n != 0, "squarefree part of zero");
    let sign = n.signum();
    let mut s = 1i64;
    for (p, e) in factorize(n.unsigned_abs()) {
        if e % 2 == 1 {
            s *= p as i64;
        }
    }
    sign * s
}

pub fn is_squarefree(n: i64) -> bool {
    n != 0 && factorize(n.unsigned_abs()).iter().all(|&(_, e)| e < 2)
}

pub fn euler_phi(n: u64) -> u64 {
    let mut phi = n;
    for (p, _) in factorize(n) {
        phi = phi / p * (p - 1);
    }
    phi
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, e) in factorize(n) {
        let prev = out.clone();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            out.extend(prev.iter().map(|d| d * pk));
        }
    }
    out.sort_unstable();
    out
}

/// The unit group (ℤ/k)* as a sorted residue list. `(ℤ/1)* = {0}`.
pub fn units_mod(k: u64) -> Vec<u64> {
    if k == 1 {
        return vec![0];
    }
    (1..k).filter(|&a| gcd(a, k) == 1).collect()
}

/// Multiplicative order of a modulo k; a must be a unit.
pub fn mult_order(a: u64, k: u64) -> u64 {
    if k == 1 {
        return 1;
    }
    assert!(gcd(a % k, k) == 1);
    let mut x = a % k;
    let mut ord = 1;
    while x != 1 {
        x = x * a % k;
        ord += 1;
    }
    ord
}

pub fn pow_mod(mut a: u64, mut e: u64, k: u64) -> u64 {
    if k == 1 {
        return 0;
    }
    let mut r = 1u64;
    a %= k;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % k;
        }
        a = a * a % k;
        e >>= 1;
    }
    r
}

/// Closure of a residue set under multiplication mod k (subgroup generated
/// inside (ℤ/k)*).
pub fn subgroup_closure(k: u64, gens: &[u64]) -> Vec<u64> {
    let mut set: Vec<u64> = vec![if k == 1 { 0 } else { 1 % k }];
    let mut frontier = set.clone();
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = if k == 1 { 0 } else { x * (g % k) % k };
            if !set.contains(&y) {
                set.push(y);
                frontier.push(y);
            }
        }
    }
    set.sort_unstable();
    set
}

/// Legendre symbol (a|p) for an odd prime p.
pub fn legendre(a: i64, p: u64) -> i64 {
    debug_assert!(p % 2 == 1 && p > 1);
    let r = a.rem_euclid(p as i64) as u64;
    if r == 0 {
        return 0;
    }
    let s = pow_mod(r, (p - 1) / 2, p);
    if s == 1 {
        1
    } else {
        -1
    }
}

/// Kronecker symbol (a|n), defined for all integers by the standard
/// multiplicative extension of the Jacobi symbol.
pub fn kronecker(a: i64, n: i64) -> i64 {
    if n == 0 {
        return if a == 1 || a == -1 { 1 } else { 0 };
    }
    let mut acc = 1i64;
    let mut n_abs = n.unsigned_abs();
    if n < 0 && a < 0 {
        acc = -acc;
    }
    // factor out twos of n: (a|2) = 0, 1, -1 for a even, a = ±1 mod 8, a = ±3 mod 8
    while n_abs.is_multiple_of(2) {
        n_abs /= 2;
        let r = a.rem_euclid(8);
        match r {
            1 | 7 => {}
            3 | 5 => acc = -acc,
            _ => return 0,
        }
    }
    if n_abs == 1 {
        return acc;
    }
    // n_abs odd > 1: Jacobi symbol via reciprocity
    let mut num = a.rem_euclid(n_abs as i64) as u64;
    let mut den = n_abs;
    loop {
        num %= den;
        if num == 0 {
            return if den == 1 { acc } else { 0 };
        }
        while num.is_multiple_of(2) {
            num /= 2;
            if den % 8 == 3 || den % 8 == 5 {
                acc = -acc;
            }
        }
        if num == 1 {
            return acc;
        }
        if gcd(num, den) > 1 {
            return 0;
        }
        if num % 4 == 3 && den % 4 == 3 {
            acc = -acc;
        }
        std::mem::swap(&mut num, &mut den);
    }
}
