//! The group families, realized as polycyclic presentations.
//!
//! Commutator convention throughout: (u,v) = v⁻¹u⁻¹vu and u^v = v⁻¹uv, so
//! a defining relation t = (y,x) collects as y^x = y·t⁻¹. This choice is
//! pinned by the component tables the whole crate is tested against.

#![allow(clippy::needless_range_loop)]

use super::pc::{PcPresentation, PcWord};
use super::{direct_product_with_cap, FiniteGroup, GroupError, Subgroup};
use std::sync::Arc;

/// Family tag plus parameters for every supported presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    /// Cyclic of order n.
    C(u32),
    /// Dihedral of order m (m even).
    D(u32),
    /// Quaternion/dicyclic of order m (m divisible by 4).
    Q(u32),
    /// Semidihedral "+" type of order m = 2^k, k ≥ 4: a^b = a^{m/4+1}.
    Dplus(u32),
    /// Semidihedral "−" type of order m = 2^k, k ≥ 4: a^b = a^{m/4−1}.
    Dminus(u32),
    W,
    W1(u32),
    W2(u32),
    V,
    V1(u32),
    V2(u32),
    U1,
    U2,
    T,
    T1(u32),
    T2(u32),
    T3(u32),
    /// C₃^rank ⋊ P with the index-2 subgroup Q (given by generator words
    /// over P's labels) centralizing C₃^rank and the rest inverting it.
    S {
        rank: u32,
        p: Box<GroupSpec>,
        q_words: Vec<String>,
    },
}

impl std::fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use GroupSpec::*;
        match self {
            C(n) => write!(f, "C[{n}]"),
            D(m) => write!(f, "D[{m}]"),
            Q(m) => write!(f, "Q[{m}]"),
            Dplus(m) => write!(f, "Dplus[{m}]"),
            Dminus(m) => write!(f, "Dminus[{m}]"),
            W => write!(f, "W"),
            W1(n) => write!(f, "W1[{n}]"),
            W2(n) => write!(f, "W2[{n}]"),
            V => write!(f, "V"),
            V1(n) => write!(f, "V1[{n}]"),
            V2(n) => write!(f, "V2[{n}]"),
            U1 => write!(f, "U1"),
            U2 => write!(f, "U2"),
            T => write!(f, "T"),
            T1(n) => write!(f, "T1[{n}]"),
            T2(n) => write!(f, "T2[{n}]"),
            T3(n) => write!(f, "T3[{n}]"),
            S { rank, p, q_words } => {
                write!(f, "S[{rank},{p},{}]", q_words.join(" "))
            }
        }
    }
}

struct Builder {
    orders: Vec<u32>,
    pc_names: Vec<String>,
    powers: Vec<(usize, PcWord)>,
    conjs: Vec<(usize, usize, PcWord)>,
    labels: Vec<(String, PcWord)>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            orders: vec![],
            pc_names: vec![],
            powers: vec![],
            conjs: vec![],
            labels: vec![],
        }
    }

    fn gen(&mut self, name: &str, order: u32) -> usize {
        self.orders.push(order);
        self.pc_names.push(name.to_string());
        self.orders.len() - 1
    }

    fn power(&mut self, i: usize, word: PcWord) {
        self.powers.push((i, word));
    }

    /// g_deep^{g_shallow} = word.
    fn conj(&mut self, shallow: usize, deep: usize, word: PcWord) {
        self.conjs.push((shallow, deep, word));
    }

    fn label(&mut self, name: &str, word: PcWord) {
        self.labels.push((name.to_string(), word));
    }

    fn finish(self) -> (PcPresentation, Vec<String>, Vec<(String, PcWord)>) {
        let mut pres = PcPresentation::new(self.orders);
        for (i, w) in self.powers {
            pres.set_power(i, w);
        }
        for (s, d, w) in self.conjs {
            pres.set_conj(d, s, w);
        }
        (pres, self.pc_names, self.labels)
    }
}

fn invalid(msg: impl Into<String>) -> GroupError {
    GroupError::InvalidSpec(msg.into())
}

fn builder_for(spec: &GroupSpec) -> Result<Builder, GroupError> {
    use GroupSpec::*;
    let mut b = Builder::new();
    match spec {
        C(n) => {
            if *n < 1 {
                return Err(invalid("C[n] needs n >= 1"));
            }
            let a = b.gen("a", *n);
            if *n > 1 {
                b.label("a", vec![(a, 1)]);
            }
        }
        D(m) => {
            if *m < 4 || m % 2 != 0 {
                return Err(invalid("D[m] needs even m >= 4"));
            }
            let n = m / 2;
            let bb = b.gen("b", 2);
            let a = b.gen("a", n);
            b.conj(bb, a, vec![(a, n - 1)]);
            b.label("a", vec![(a, 1)]);
            b.label("b", vec![(bb, 1)]);
        }
        Q(m) => {
            if *m < 8 || m % 4 != 0 {
                return Err(invalid("Q[m] needs m >= 8 divisible by 4"));
            }
            let half = m / 2;
            let bb = b.gen("b", 2);
            let a = b.gen("a", half);
            b.power(bb, vec![(a, m / 4)]);
            b.conj(bb, a, vec![(a, half - 1)]);
            b.label("a", vec![(a, 1)]);
            b.label("b", vec![(bb, 1)]);
        }
        Dplus(m) | Dminus(m) => {
            if *m < 16 || !m.is_power_of_two() {
                return Err(invalid("semidihedral types need m = 2^k >= 16"));
            }
            let half = m / 2;
            let e = if matches!(spec, Dplus(_)) {
                m / 4 + 1
            } else {
                m / 4 - 1
            };
            let bb = b.gen("b", 2);
            let a = b.gen("a", half);
            b.conj(bb, a, vec![(a, e)]);
            b.label("a", vec![(a, 1)]);
            b.label("b", vec![(bb, 1)]);
        }
        W => {
            let x = b.gen("x", 2);
            let y = b.gen("y", 2);
            let u = b.gen("x2", 2);
            let v = b.gen("y2", 2);
            let t = b.gen("t", 2);
            b.power(x, vec![(u, 1)]);
            b.power(y, vec![(v, 1)]);
            b.conj(x, y, vec![(y, 1), (t, 1)]);
            b.label("x", vec![(x, 1)]);
            b.label("y", vec![(y, 1)]);
            b.label("t", vec![(t, 1)]);
        }
        W1(n) => {
            let n = check_rank(*n)?;
            let x = b.gen("x", 4);
            let ys: Vec<usize> = (1..=n).map(|i| b.gen(&format!("y{i}"), 2)).collect();
            let ts: Vec<usize> = (1..=n).map(|i| b.gen(&format!("t{i}"), 2)).collect();
            for i in 0..n {
                b.conj(x, ys[i], vec![(ys[i], 1), (ts[i], 1)]);
            }
            b.label("x", vec![(x, 1)]);
            for i in 0..n {
                b.label(&format!("y{}", i + 1), vec![(ys[i], 1)]);
                b.label(&format!("t{}", i + 1), vec![(ts[i], 1)]);
            }
        }
        W2(n) => {
            let n = check_rank(*n)?;
            let x = b.gen("x", 4);
            let ys: Vec<usize> = (1..=n).map(|i| b.gen(&format!("y{i}"), 4)).collect();
            for i in 0..n {
                b.conj(x, ys[i], vec![(ys[i], 3)]);
            }
            b.label("x", vec![(x, 1)]);
            for i in 0..n {
                b.label(&format!("y{}", i + 1), vec![(ys[i], 1)]);
                b.label(&format!("t{}", i + 1), vec![(ys[i], 2)]);
            }
        }
        V => {
            let x = b.gen("x", 2);
            let y = b.gen("y", 2);
            let u = b.gen("x2", 4);
            let v = b.gen("y2", 4);
            let t = b.gen("t", 2);
            b.power(x, vec![(u, 1)]);
            b.power(y, vec![(v, 1)]);
            b.conj(x, y, vec![(y, 1), (t, 1)]);
            b.label("x", vec![(x, 1)]);
            b.label("y", vec![(y, 1)]);
            b.label("t", vec![(t, 1)]);
        }
        V1(n) => {
            let n = check_rank(*n)?;
            let x = b.gen("x", 8);
            let ys: Vec<usize> = (1..=n).map(|i| b.gen(&format!("y{i}"), 4)).collect();
            let ts: Vec<usize> = (1..=n).map(|i| b.gen(&format!("t{i}"), 2)).collect();
            for i in 0..n {
                b.conj(x, ys[i], vec![(ys[i], 1), (ts[i], 1)]);
            }
            b.label("x", vec![(x, 1)]);
            for i in 0..n {
                b.label(&format!("y{}", i + 1), vec![(ys[i], 1)]);
                b.label(&format!("t{}", i + 1), vec![(ts[i], 1)]);
            }
        }
        V2(n) => {
            let n = check_rank(*n)?;
            let x = b.gen("x", 8);
            let ys: Vec<usize> = (1..=n).map(|i| b.gen(&format!("y{i}"), 8)).collect();
            for i in 0..n {
                b.conj(x, ys[i], vec![(ys[i], 5)]);
            }
            b.label("x", vec![(x, 1)]);
            for i in 0..n {
                b.label(&format!("y{}", i + 1), vec![(ys[i], 1)]);
                b.label(&format!("t{}", i + 1), vec![(ys[i], 4)]);
            }
        }
        U1 => {
            let y1 = b.gen("y1", 2);
            let y2 = b.gen("y2", 2);
            let y3 = b.gen("y3", 2);
            let u1 = b.gen("u1", 2);
            let u2 = b.gen("u2", 2);
            let u3 = b.gen("u3", 2);
            let t12 = b.gen("t12", 2);
            let t13 = b.gen("t13", 2);
            let t23 = b.gen("t23", 2);
            b.power(y1, vec![(u1, 1)]);
            b.power(y2, vec![(u2, 1)]);
            b.power(y3, vec![(u3, 1)]);
            b.conj(y1, y2, vec![(y2, 1), (t12, 1)]);
            b.conj(y1, y3, vec![(y3, 1), (t13, 1)]);
            b.conj(y2, y3, vec![(y3, 1), (t23, 1)]);
            for (i, name) in [(y1, "y1"), (y2, "y2"), (y3, "y3")] {
                b.label(name, vec![(i, 1)]);
            }
            for (i, name) in [(t12, "t12"), (t13, "t13"), (t23, "t23")] {
                b.label(name, vec![(i, 1)]);
            }
        }
        U2 => {
            let y1 = b.gen("y1", 2);
            let y2 = b.gen("y2", 2);
            let y3 = b.gen("y3", 2);
            let u1 = b.gen("u1", 2);
            let u2 = b.gen("u2", 4);
            let u3 = b.gen("u3", 4);
            let t23 = b.gen("t23", 2);
            b.power(y1, vec![(u1, 1)]);
            b.power(y2, vec![(u2, 1)]);
            b.power(y3, vec![(u3, 1)]);
            b.conj(y1, y2, vec![(y2, 1), (u2, 2)]);
            b.conj(y1, y3, vec![(y3, 1), (u3, 2)]);
            b.conj(y2, y3, vec![(y3, 1), (t23, 1)]);
            for (i, name) in [(y1, "y1"), (y2, "y2"), (y3, "y3"), (t23, "t23")] {
                b.label(name, vec![(i, 1)]);
            }
            b.label("t12", vec![(u2, 2)]);
            b.label("t13", vec![(u3, 2)]);
        }
        T => {
            let x = b.gen("x", 2);
            let y = b.gen("y", 8);
            let t = b.gen("t", 4);
            b.power(x, vec![(t, 2)]);
            b.conj(x, y, vec![(y, 1), (t, 3)]);
            b.conj(x, t, vec![(t, 3)]);
            b.label("x", vec![(x, 1)]);
            b.label("y", vec![(y, 1)]);
            b.label("t", vec![(t, 1)]);
        }
        T1(n) => {
            let n = check_rank(*n)?;
            let x = b.gen("x", 8);
            let ys: Vec<usize> = (1..=n).map(|i| b.gen(&format!("y{i}"), 4)).collect();
            let ts: Vec<usize> = (1..=n).map(|i| b.gen(&format!("t{i}"), 4)).collect();
            for i in 0..n {
                b.conj(x, ys[i], vec![(ys[i], 1), (ts[i], 3)]);
                b.conj(x, ts[i], vec![(ts[i], 3)]);
            }
            b.label("x", vec![(x, 1)]);
            for i in 0..n {
                b.label(&format!("y{}", i + 1), vec![(ys[i], 1)]);
                b.label(&format!("t{}", i + 1), vec![(ts[i], 1)]);
            }
        }
        T2(n) => {
            let n = check_rank(*n)?;
            let x = b.gen("x", 4);
            let ys: Vec<usize> = (1..=n).map(|i| b.gen(&format!("y{i}"), 8)).collect();
            for i in 0..n {
                b.conj(x, ys[i], vec![(ys[i], 3)]);
            }
            b.label("x", vec![(x, 1)]);
            for i in 0..n {
                b.label(&format!("y{}", i + 1), vec![(ys[i], 1)]);
                b.label(&format!("t{}", i + 1), vec![(ys[i], 6)]);
            }
        }
        T3(n) => {
            // x inverts every y_i, with t_i = (y_i, x) = y_i² and the
            // nonsplit lift x² = t₁² = y₁⁴; at n = 1 this is Q16. The
            // declared order-2 element y₁²t₁ equals y₁⁴ = x².
            let n = check_rank(*n)?;
            let x = b.gen("x", 2);
            let y1 = b.gen("y1", 8);
            let ys: Vec<usize> = (2..=n).map(|i| b.gen(&format!("y{i}"), 4)).collect();
            b.power(x, vec![(y1, 4)]);
            b.conj(x, y1, vec![(y1, 7)]);
            for &yi in &ys {
                b.conj(x, yi, vec![(yi, 3)]);
            }
            b.label("x", vec![(x, 1)]);
            b.label("y1", vec![(y1, 1)]);
            b.label("t1", vec![(y1, 2)]);
            for (i, &yi) in ys.iter().enumerate() {
                b.label(&format!("y{}", i + 2), vec![(yi, 1)]);
                b.label(&format!("t{}", i + 2), vec![(yi, 2)]);
            }
        }
        S { .. } => unreachable!("S is assembled in build_group"),
    }
    Ok(b)
}

fn check_rank(n: u32) -> Result<usize, GroupError> {
    if !(1..=8).contains(&n) {
        return Err(invalid("family rank parameter must be in 1..=8"));
    }
    Ok(n as usize)
}

/// Construct the group named by a spec.
pub fn build_group(spec: &GroupSpec) -> Result<Arc<FiniteGroup>, GroupError> {
    build_group_with_cap(spec, super::DEFAULT_PRODUCT_CAP)
}

pub fn build_group_with_cap(spec: &GroupSpec, cap: usize) -> Result<Arc<FiniteGroup>, GroupError> {
    if let GroupSpec::S { rank, p, q_words } = spec {
        return build_s_group(*rank, p, q_words, cap);
    }
    let b = builder_for(spec)?;
    let (pres, pc_names, labels) = b.finish();
    if pres.order() > cap as u64 {
        return Err(GroupError::OrderOverflow {
            order: pres.order(),
            cap,
        });
    }
    FiniteGroup::from_pc(pres, pc_names, labels)
}

fn build_s_group(
    rank: u32,
    p_spec: &GroupSpec,
    q_words: &[String],
    cap: usize,
) -> Result<Arc<FiniteGroup>, GroupError> {
    let rank = check_rank(rank)?;
    if matches!(p_spec, GroupSpec::S { .. }) {
        return Err(invalid("S over S is not a supported presentation"));
    }
    let p_group = build_group_with_cap(p_spec, cap)?;
    // resolve Q inside P
    let mut q_gens = Vec::new();
    for w in q_words {
        q_gens.push(super::dsl::evaluate_word(&p_group, w)?);
    }
    let q_sub = Subgroup::generated(&p_group, &q_gens);
    if q_sub.order() * 2 != p_group.order() {
        return Err(invalid(format!(
            "S[..] needs [P:Q] = 2, got |P| = {} and |Q| = {}",
            p_group.order(),
            q_sub.order()
        )));
    }
    let pb = builder_for(p_spec)?;
    let (p_pres, mut pc_names, mut labels) = pb.finish();
    let p_strides = p_pres.strides();
    let m = p_pres.ngens();
    // whether each pc generator of P centralizes C3^rank
    let in_q: Vec<bool> = (0..m)
        .map(|i| q_sub.contains(p_strides[i] as u16))
        .collect();
    let mut orders = p_pres.orders.clone();
    orders.extend(std::iter::repeat_n(3, rank));
    let mut pres = PcPresentation::new(orders);
    for (i, w) in p_pres.powers.iter().enumerate() {
        pres.set_power(i, w.clone());
    }
    for i in 0..m {
        for j in (i + 1)..m {
            if let Some(w) = &p_pres.conj[i][j] {
                pres.set_conj(j, i, w.clone());
            }
        }
    }
    for (i, &inq) in in_q.iter().enumerate() {
        if !inq {
            for z in 0..rank {
                pres.set_conj(m + z, i, vec![(m + z, 2)]);
            }
        }
    }
    for z in 0..rank {
        pc_names.push(format!("z{}", z + 1));
        labels.push((format!("z{}", z + 1), vec![(m + z, 1)]));
    }
    if pres.order() > cap as u64 {
        return Err(GroupError::OrderOverflow {
            order: pres.order(),
            cap,
        });
    }
    FiniteGroup::from_pc(pres, pc_names, labels)
}

/// Build a product of specs with an optional quotient, the full shape the
/// DSL produces.
pub fn build_product(specs: &[GroupSpec], cap: usize) -> Result<Arc<FiniteGroup>, GroupError> {
    let mut iter = specs.iter();
    let first = iter.next().ok_or_else(|| invalid("empty group product"))?;
    let mut acc = build_group_with_cap(first, cap)?;
    for spec in iter {
        let next = build_group_with_cap(spec, cap)?;
        acc = direct_product_with_cap(&acc, &next, cap)?;
    }
    Ok(acc)
}
