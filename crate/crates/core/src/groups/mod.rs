//! Finite groups built from polycyclic presentations: the group families
//! used throughout, direct products, quotients, subgroup enumeration and
//! the structural data the Shoda-pair machinery needs.

mod dsl;
mod families;
mod pc;

pub use dsl::{evaluate_word, parse_group, parse_group_with_cap};
pub use families::{build_group, build_group_with_cap, build_product, GroupSpec};
pub use pc::{PcPresentation, PcWord};

use std::collections::HashSet;
use std::sync::Arc;
use thiserror::Error;

/// Eagerly materialize multiplication tables up to this order.
pub const TABLE_CAP: usize = 512;
/// Default cap for subgroup enumeration.
pub const DEFAULT_SUBGROUP_CAP: usize = 512;
/// Default cap for direct products.
pub const DEFAULT_PRODUCT_CAP: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("invalid group spec: {0}")]
    InvalidSpec(String),
    #[error("presentation inconsistent: {0}")]
    PresentationInconsistent(String),
    #[error("order {order} exceeds the product cap {cap}")]
    OrderOverflow { order: u64, cap: usize },
    #[error("order {order} exceeds the size cap {cap}")]
    SizeCapExceeded { order: usize, cap: usize },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

enum Backend {
    Table {
        table: Vec<u16>,
    },
    Pc {
        pres: PcPresentation,
        strides: Vec<usize>,
    },
    Prod {
        left: Arc<FiniteGroup>,
        right: Arc<FiniteGroup>,
    },
}

/// An explicit finite group on element indices 0..order; index 0 is the
/// identity. Immutable after construction.
pub struct FiniteGroup {
    order: usize,
    backend: Backend,
    inverse: Vec<u16>,
    generators: Vec<(String, u16)>,
    element_names: Option<Vec<String>>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup(order {}, gens ", self.order)?;
        for (name, idx) in &self.generators {
            write!(f, "{name}={idx} ")?;
        }
        write!(f, ")")
    }
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> u16 {
        0
    }

    pub fn mul(&self, a: u16, b: u16) -> u16 {
        debug_assert!((a as usize) < self.order && (b as usize) < self.order);
        match &self.backend {
            Backend::Table { table } => table[a as usize * self.order + b as usize],
            Backend::Pc { pres, strides } => {
                let mut e = pres.tuple_of(a as usize, strides);
                let rhs = pres.tuple_of(b as usize, strides);
                pres.mul_tuple(&mut e, &rhs);
                pres.index_of(&e, strides) as u16
            }
            Backend::Prod { left, right } => {
                let n2 = right.order;
                let (a1, a2) = ((a as usize / n2) as u16, (a as usize % n2) as u16);
                let (b1, b2) = ((b as usize / n2) as u16, (b as usize % n2) as u16);
                (left.mul(a1, b1) as usize * n2 + right.mul(a2, b2) as usize) as u16
            }
        }
    }

    pub fn inv(&self, a: u16) -> u16 {
        self.inverse[a as usize]
    }

    /// b⁻¹ a b.
    pub fn conj(&self, a: u16, b: u16) -> u16 {
        self.mul(self.mul(self.inv(b), a), b)
    }

    /// (a, b) = b⁻¹ a⁻¹ b a.
    pub fn commutator(&self, a: u16, b: u16) -> u16 {
        self.mul(self.mul(self.inv(b), self.inv(a)), self.mul(b, a))
    }

    pub fn pow(&self, a: u16, e: i64) -> u16 {
        let mut base = if e < 0 { self.inv(a) } else { a };
        let mut e = e.unsigned_abs();
        let mut acc = 0u16;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: u16) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != 0 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    /// Named generators (may include derived named elements like commutators).
    pub fn generators(&self) -> &[(String, u16)] {
        &self.generators
    }

    pub fn generator(&self, label: &str) -> Option<u16> {
        self.generators
            .iter()
            .find(|(l, _)| l == label)
            .map(|&(_, i)| i)
    }

    /// A generating set: the named generators (their closure is verified at
    /// construction).
    pub fn generating_set(&self) -> Vec<u16> {
        let mut v: Vec<u16> = self.generators.iter().map(|&(_, i)| i).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn element_name(&self, a: u16) -> String {
        match &self.element_names {
            Some(names) => names[a as usize].clone(),
            None => format!("g{a}"),
        }
    }

    fn compute_inverses(order: usize, mul: impl Fn(u16, u16) -> u16) -> Vec<u16> {
        let mut inv = vec![0u16; order];
        for a in 1..order as u16 {
            let mut prev = a;
            let mut x = mul(a, a);
            while x != 0 {
                prev = x;
                x = mul(x, a);
            }
            inv[a as usize] = prev;
        }
        inv
    }

    /// Build from a pc presentation. Materializes a table up to
    /// [`TABLE_CAP`]; verifies the normal-form count and spot-checks
    /// associativity on generator triples. `pc_names` label the pc
    /// generators for element display.
    pub fn from_pc(
        pres: PcPresentation,
        pc_names: Vec<String>,
        generators: Vec<(String, PcWord)>,
    ) -> Result<Arc<FiniteGroup>, GroupError> {
        let order64 = pres.order();
        if order64 > u16::MAX as u64 + 1 {
            return Err(GroupError::OrderOverflow {
                order: order64,
                cap: u16::MAX as usize + 1,
            });
        }
        let order = order64 as usize;
        let strides = pres.strides();

        let eval_word = |w: &PcWord| -> u16 {
            let mut e = vec![0u32; pres.ngens()];
            for &(l, c) in w {
                for _ in 0..c {
                    pres.mul_gen(&mut e, l);
                }
            }
            pres.index_of(&e, &strides) as u16
        };
        let gen_list: Vec<(String, u16)> = generators
            .iter()
            .map(|(n, w)| (n.clone(), eval_word(w)))
            .collect();

        debug_assert_eq!(pc_names.len(), pres.ngens());
        let names: Vec<String> = (0..order)
            .map(|i| {
                let t = pres.tuple_of(i, &strides);
                if t.iter().all(|&e| e == 0) {
                    return "1".to_string();
                }
                t.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(gi, &e)| {
                        if e == 1 {
                            pc_names[gi].clone()
                        } else {
                            format!("{}^{e}", pc_names[gi])
                        }
                    })
                    .collect::<Vec<_>>()
                    .join("*")
            })
            .collect();

        let backend = if order <= TABLE_CAP {
            // generator columns by collection, the rest by dynamic programming
            let m = pres.ngens();
            let mut cols = vec![vec![0u16; order]; m];
            for (gi, col) in cols.iter_mut().enumerate() {
                for (a, slot) in col.iter_mut().enumerate() {
                    let mut e = pres.tuple_of(a, &strides);
                    pres.mul_gen(&mut e, gi);
                    *slot = pres.index_of(&e, &strides) as u16;
                }
            }
            let mut table = vec![0u16; order * order];
            for a in 0..order {
                table[a * order] = a as u16;
            }
            for b in 1..order {
                let t = pres.tuple_of(b, &strides);
                let j = t
                    .iter()
                    .rposition(|&e| e > 0)
                    .expect("nonidentity element has a letter");
                let b_prev = b - strides[j];
                for a in 0..order {
                    let ab_prev = table[a * order + b_prev];
                    table[a * order + b] = cols[j][ab_prev as usize];
                }
            }
            Backend::Table { table }
        } else {
            Backend::Pc {
                pres: pres.clone(),
                strides: strides.clone(),
            }
        };

        let mul = |a: u16, b: u16| -> u16 {
            match &backend {
                Backend::Table { table } => table[a as usize * order + b as usize],
                Backend::Pc { pres, strides } => {
                    let mut e = pres.tuple_of(a as usize, strides);
                    let rhs = pres.tuple_of(b as usize, strides);
                    pres.mul_tuple(&mut e, &rhs);
                    pres.index_of(&e, strides) as u16
                }
                Backend::Prod { .. } => unreachable!(),
            }
        };
        let inverse = Self::compute_inverses(order, mul);

        let g = FiniteGroup {
            order,
            backend,
            inverse,
            generators: gen_list,
            element_names: Some(names),
        };

        // sanity: associativity on generator triples, then generation
        let gens = g.generating_set();
        for &a in &gens {
            for &b in &gens {
                for &c in &gens {
                    if g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)) {
                        return Err(GroupError::PresentationInconsistent(format!(
                            "associativity fails on generators ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        if closure(&g, &gens).len() != order {
            return Err(GroupError::PresentationInconsistent(
                "named generators do not generate the group".into(),
            ));
        }
        Ok(Arc::new(g))
    }

    /// Build directly from a full multiplication table (used by quotients).
    fn from_table(
        table: Vec<u16>,
        order: usize,
        generators: Vec<(String, u16)>,
        element_names: Option<Vec<String>>,
    ) -> Arc<FiniteGroup> {
        let mul = |a: u16, b: u16| table[a as usize * order + b as usize];
        let inverse = Self::compute_inverses(order, mul);
        Arc::new(FiniteGroup {
            order,
            backend: Backend::Table { table },
            inverse,
            generators,
            element_names,
        })
    }

    pub fn trivial() -> Arc<FiniteGroup> {
        FiniteGroup::from_table(vec![0], 1, vec![], Some(vec!["1".into()]))
    }
}

/// Closure of a set of elements under multiplication (subgroup generated).
pub fn closure(g: &FiniteGroup, gens: &[u16]) -> Vec<u16> {
    let mut in_set = vec![false; g.order()];
    in_set[0] = true;
    let mut list = vec![0u16];
    let mut frontier = vec![0u16];
    while let Some(x) = frontier.pop() {
        for &c in gens {
            let y = g.mul(x, c);
            if !in_set[y as usize] {
                in_set[y as usize] = true;
                list.push(y);
                frontier.push(y);
            }
        }
    }
    list.sort_unstable();
    list
}

/// Subgroup of a parent group: sorted element list plus cached flags.
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    elements: Vec<u16>,
    pub is_normal_in_parent: bool,
    pub is_cyclic: bool,
    pub is_abelian: bool,
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup(order {})", self.elements.len())
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent) && self.elements == other.elements
    }
}
impl Eq for Subgroup {}

impl Subgroup {
    pub fn from_elements(parent: &Arc<FiniteGroup>, mut elements: Vec<u16>) -> Subgroup {
        elements.sort_unstable();
        elements.dedup();
        debug_assert!(!elements.is_empty() && elements[0] == 0);
        let g = parent.as_ref();
        let is_normal_in_parent = g.generating_set().iter().all(|&c| {
            elements
                .iter()
                .all(|&h| elements.binary_search(&g.conj(h, c)).is_ok())
        });
        let is_cyclic = elements
            .iter()
            .any(|&h| g.element_order(h) == elements.len());
        let is_abelian = is_cyclic
            || elements
                .iter()
                .all(|&a| elements.iter().all(|&b| g.mul(a, b) == g.mul(b, a)));
        Subgroup {
            parent: parent.clone(),
            elements,
            is_normal_in_parent,
            is_cyclic,
            is_abelian,
        }
    }

    pub fn generated(parent: &Arc<FiniteGroup>, gens: &[u16]) -> Subgroup {
        Self::from_elements(parent, closure(parent, gens))
    }

    pub fn trivial(parent: &Arc<FiniteGroup>) -> Subgroup {
        Self::from_elements(parent, vec![0])
    }

    pub fn whole(parent: &Arc<FiniteGroup>) -> Subgroup {
        Self::from_elements(parent, (0..parent.order() as u16).collect())
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn elements(&self) -> &[u16] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: u16) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn contains_subgroup(&self, other: &Subgroup) -> bool {
        other.elements.iter().all(|&x| self.contains(x))
    }

    /// Is `self` normal inside the subgroup `m` (which must contain it)?
    pub fn is_normal_in(&self, m: &Subgroup) -> bool {
        let g = self.parent.as_ref();
        m.elements
            .iter()
            .all(|&c| self.elements.iter().all(|&h| self.contains(g.conj(h, c))))
    }
}

/// All subgroups, by breadth-first closure of generated subgroups.
pub fn subgroups(g: &Arc<FiniteGroup>) -> Result<Vec<Subgroup>, GroupError> {
    subgroups_with_cap(g, DEFAULT_SUBGROUP_CAP)
}

pub fn subgroups_with_cap(g: &Arc<FiniteGroup>, cap: usize) -> Result<Vec<Subgroup>, GroupError> {
    if g.order() > cap {
        return Err(GroupError::SizeCapExceeded {
            order: g.order(),
            cap,
        });
    }
    let order = g.order();
    let mut seen: HashSet<Vec<u16>> = HashSet::new();
    let mut out: Vec<(Vec<u16>, Vec<u16>)> = Vec::new(); // (elements, generators)
    let trivial = vec![0u16];
    seen.insert(trivial.clone());
    out.push((trivial, vec![]));
    let mut head = 0;
    while head < out.len() {
        let (elems, gens) = out[head].clone();
        head += 1;
        if elems.len() == order {
            continue;
        }
        for cand in 0..order as u16 {
            if elems.binary_search(&cand).is_ok() {
                continue;
            }
            // only the minimal representative of each coset H·x extends
            if elems.iter().any(|&h| g.mul(h, cand) < cand) {
                continue;
            }
            let mut new_gens = gens.clone();
            new_gens.push(cand);
            let new_elems = closure(g, &new_gens);
            if seen.insert(new_elems.clone()) {
                out.push((new_elems, new_gens));
            }
        }
    }
    Ok(out
        .into_iter()
        .map(|(elems, _)| Subgroup::from_elements(g, elems))
        .collect())
}

/// Direct product with namespaced generator labels.
pub fn direct_product(
    g1: &Arc<FiniteGroup>,
    g2: &Arc<FiniteGroup>,
) -> Result<Arc<FiniteGroup>, GroupError> {
    direct_product_with_cap(g1, g2, DEFAULT_PRODUCT_CAP)
}

pub fn direct_product_with_cap(
    g1: &Arc<FiniteGroup>,
    g2: &Arc<FiniteGroup>,
    cap: usize,
) -> Result<Arc<FiniteGroup>, GroupError> {
    let order = g1.order() as u64 * g2.order() as u64;
    if order > cap as u64 || order > u16::MAX as u64 + 1 {
        return Err(GroupError::OrderOverflow {
            order,
            cap: cap.min(u16::MAX as usize + 1),
        });
    }
    let order = order as usize;
    let n2 = g2.order() as u16;
    let mut generators: Vec<(String, u16)> = g1
        .generators()
        .iter()
        .map(|(l, i)| (l.clone(), i * n2))
        .collect();
    for (l, i) in g2.generators() {
        let mut label = l.clone();
        while generators.iter().any(|(x, _)| x == &label) {
            label.push('\'');
        }
        generators.push((label, *i));
    }
    let mut inverse = vec![0u16; order];
    for a1 in 0..g1.order() as u16 {
        for a2 in 0..g2.order() as u16 {
            inverse[(a1 as usize) * g2.order() + a2 as usize] = g1.inv(a1) * n2 + g2.inv(a2);
        }
    }
    let prod = FiniteGroup {
        order,
        backend: Backend::Prod {
            left: g1.clone(),
            right: g2.clone(),
        },
        inverse,
        generators,
        element_names: None,
    };
    if order <= TABLE_CAP {
        let mut table = vec![0u16; order * order];
        for a in 0..order as u16 {
            for b in 0..order as u16 {
                table[a as usize * order + b as usize] = prod.mul(a, b);
            }
        }
        return Ok(FiniteGroup::from_table(
            table,
            order,
            prod.generators.clone(),
            None,
        ));
    }
    Ok(Arc::new(prod))
}

/// Normal closure of a set of elements.
pub fn normal_closure(g: &Arc<FiniteGroup>, seed: &[u16]) -> Subgroup {
    let gens = g.generating_set();
    let mut current: Vec<u16> = seed.to_vec();
    loop {
        let sub = closure(g, &current);
        let mut extended = false;
        for &x in &sub {
            for &c in &gens {
                let y = g.conj(x, c);
                if sub.binary_search(&y).is_err() {
                    current.push(y);
                    extended = true;
                }
            }
        }
        if !extended {
            return Subgroup::from_elements(g, sub);
        }
    }
}

/// Quotient by the normal closure of the given elements; returns the coset
/// group and the projection map.
pub fn quotient(g: &Arc<FiniteGroup>, normal_gens: &[u16]) -> (Arc<FiniteGroup>, Vec<u16>) {
    let n = normal_closure(g, normal_gens);
    let order = g.order();
    // canonical representative: minimum of the coset xN
    let mut rep = vec![u16::MAX; order];
    for x in 0..order as u16 {
        if rep[x as usize] != u16::MAX {
            continue;
        }
        let mut coset: Vec<u16> = n.elements().iter().map(|&h| g.mul(x, h)).collect();
        coset.sort_unstable();
        let r = coset[0];
        for y in coset {
            rep[y as usize] = r;
        }
    }
    let mut reps: Vec<u16> = rep.clone();
    reps.sort_unstable();
    reps.dedup();
    let q_order = reps.len();
    let rep_index = |r: u16| reps.binary_search(&r).unwrap() as u16;
    let mut table = vec![0u16; q_order * q_order];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            table[i * q_order + j] = rep_index(rep[g.mul(a, b) as usize]);
        }
    }
    let generators: Vec<(String, u16)> = g
        .generators()
        .iter()
        .map(|(l, i)| (l.clone(), rep_index(rep[*i as usize])))
        .collect();
    let names = g.element_names.as_ref().map(|_| {
        reps.iter()
            .map(|&r| format!("[{}]", g.element_name(r)))
            .collect()
    });
    let q = FiniteGroup::from_table(table, q_order, generators, names);
    let projection: Vec<u16> = (0..order).map(|x| rep_index(rep[x])).collect();
    (q, projection)
}

/// Structural data of a group.
pub struct GroupData {
    pub center: Subgroup,
    pub derived: Subgroup,
    pub exponent: usize,
    pub is_abelian: bool,
    pub is_metabelian: bool,
    pub hamiltonian_split: Option<(Subgroup, Subgroup, Subgroup)>,
}

pub fn center(g: &Arc<FiniteGroup>) -> Subgroup {
    let gens = g.generating_set();
    let elems: Vec<u16> = (0..g.order() as u16)
        .filter(|&x| gens.iter().all(|&c| g.mul(x, c) == g.mul(c, x)))
        .collect();
    Subgroup::from_elements(g, elems)
}

pub fn derived_subgroup(g: &Arc<FiniteGroup>) -> Subgroup {
    let gens = g.generating_set();
    let mut seed = Vec::new();
    for &a in &gens {
        for &b in &gens {
            seed.push(g.commutator(a, b));
        }
    }
    normal_closure(g, &seed)
}

pub fn exponent(g: &FiniteGroup) -> usize {
    let mut e: u64 = 1;
    for x in 0..g.order() as u16 {
        e = crate::arith::lcm(e, g.element_order(x) as u64);
    }
    e as usize
}

/// Exponent of a subgroup (element orders taken in the parent).
pub fn subgroup_exponent(s: &Subgroup) -> usize {
    let g = s.parent().as_ref();
    let mut e: u64 = 1;
    for &x in s.elements() {
        e = crate::arith::lcm(e, g.element_order(x) as u64);
    }
    e as usize
}

/// Build a table-backed group from an explicit multiplication table; index
/// 0 must be the identity.
pub fn from_table_public(
    table: Vec<u16>,
    order: usize,
    generators: Vec<(String, u16)>,
) -> Arc<FiniteGroup> {
    FiniteGroup::from_table(table, order, generators, None)
}

pub fn group_data(g: &Arc<FiniteGroup>) -> GroupData {
    let center = center(g);
    let derived = derived_subgroup(g);
    let is_abelian = center.order() == g.order();
    let is_metabelian = derived.is_abelian;
    let hamiltonian_split = hamiltonian_split(g, &center);
    GroupData {
        center,
        derived,
        exponent: exponent(g),
        is_abelian,
        is_metabelian,
        hamiltonian_split,
    }
}

pub fn normalizer(g: &Arc<FiniteGroup>, l: &Subgroup) -> Subgroup {
    let elems: Vec<u16> = (0..g.order() as u16)
        .filter(|&x| l.elements().iter().all(|&h| l.contains(g.conj(h, x))))
        .collect();
    Subgroup::from_elements(g, elems)
}

/// For a nonabelian group with every subgroup normal, the decomposition
/// Q₈ × E × F with E elementary abelian 2 and F odd abelian.
fn hamiltonian_split(
    g: &Arc<FiniteGroup>,
    center: &Subgroup,
) -> Option<(Subgroup, Subgroup, Subgroup)> {
    if center.order() == g.order() {
        return None;
    }
    // every cyclic subgroup normal suffices
    let gens = g.generating_set();
    for x in 0..g.order() as u16 {
        let cyc = closure(g, &[x]);
        for &c in &gens {
            if cyc.binary_search(&g.conj(x, c)).is_err() {
                return None;
            }
        }
    }
    // Q8 part: two noncommuting elements of order 4
    let mut quat = None;
    'outer: for i in 0..g.order() as u16 {
        if g.element_order(i) != 4 {
            continue;
        }
        for j in 0..g.order() as u16 {
            if g.element_order(j) == 4 && g.mul(i, j) != g.mul(j, i) {
                let q = Subgroup::generated(g, &[i, j]);
                if q.order() == 8 {
                    quat = Some(q);
                    break 'outer;
                }
            }
        }
    }
    let quat = quat?;
    // odd part
    let odd: Vec<u16> = (0..g.order() as u16)
        .filter(|&x| g.element_order(x) % 2 == 1)
        .collect();
    let odd_part = Subgroup::from_elements(g, odd);
    // elementary part: central involutions independent of Q8·F
    let mut blocked = closure(
        g,
        &quat
            .elements()
            .iter()
            .chain(odd_part.elements())
            .copied()
            .collect::<Vec<_>>(),
    );
    let mut e_gens: Vec<u16> = Vec::new();
    for &z in center.elements() {
        if g.element_order(z) == 2 && blocked.binary_search(&z).is_err() {
            e_gens.push(z);
            let mut gens_all = e_gens.clone();
            gens_all.extend_from_slice(&blocked);
            blocked = closure(g, &gens_all);
        }
    }
    let e_part = Subgroup::generated(g, &e_gens);
    if quat.order() * e_part.order() * odd_part.order() == g.order() {
        Some((quat, e_part, odd_part))
    } else {
        None
    }
}

/// Order-spectrum fingerprint for isomorphism-class matching of small
/// groups: order, exponent, abelian flag, center and derived orders, and
/// the multiset of element orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    pub order: usize,
    pub exponent: usize,
    pub is_abelian: bool,
    pub center_order: usize,
    pub derived_order: usize,
    pub order_spectrum: Vec<(usize, usize)>,
}

pub fn fingerprint(g: &Arc<FiniteGroup>) -> Fingerprint {
    let data = group_data(g);
    let mut spectrum = std::collections::BTreeMap::new();
    for x in 0..g.order() as u16 {
        *spectrum.entry(g.element_order(x)).or_insert(0usize) += 1;
    }
    Fingerprint {
        order: g.order(),
        exponent: data.exponent,
        is_abelian: data.is_abelian,
        center_order: data.center.order(),
        derived_order: data.derived.order(),
        order_spectrum: spectrum.into_iter().collect(),
    }
}
