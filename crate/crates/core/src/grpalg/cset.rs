//! 𝒞(G) and 𝒞(KG): the sets of isomorphism classes of noncommutative
//! simple quotients, computed directly for small groups and through the
//! reduction lemmas for large ones: elementary abelian 2 direct factors
//! never change 𝒞, and when the center is not cyclic, 𝒞(G) is the union
//! of 𝒞(G/H) over subgroups H of the center with cyclic quotient not
//! containing the derived subgroup.

use super::shoda::wedderburn_with_options;
use super::{AlgebraError, WedderburnOptions};
use crate::csa::{component_over, CatalogKey, SimpleComponent};
use crate::cyclofield::{AbelianFieldRef, FieldRef};
use crate::groups::{
    center, closure, derived_subgroup, group_data, quotient, subgroups_with_cap, FiniteGroup,
    Subgroup,
};
use std::collections::BTreeMap;
use std::sync::Arc;

/// Orders up to which the decomposition is computed directly.
const DIRECT_CAP: usize = 256;

/// Build a subgroup as a standalone group with a greedy generating set.
fn subgroup_as_group(g: &Arc<FiniteGroup>, elements: &[u16]) -> (Arc<FiniteGroup>, Vec<u16>) {
    let n = elements.len();
    let index_of = |x: u16| elements.binary_search(&x).unwrap() as u16;
    let mut table = vec![0u16; n * n];
    for (i, &a) in elements.iter().enumerate() {
        for (j, &b) in elements.iter().enumerate() {
            table[i * n + j] = index_of(g.mul(a, b));
        }
    }
    // greedy generating set
    let mut gens: Vec<u16> = Vec::new();
    let mut covered = 1usize;
    for &x in elements.iter() {
        if covered == n {
            break;
        }
        let mut try_gens = gens.clone();
        try_gens.push(x);
        let c = closure(g, &try_gens).len();
        if c > covered {
            gens.push(x);
            covered = c;
        }
    }
    let named: Vec<(String, u16)> = gens
        .iter()
        .enumerate()
        .map(|(i, &x)| (format!("g{}", i + 1), index_of(x)))
        .collect();
    let sub = crate::groups::from_table_public(table, n, named);
    (sub, elements.to_vec())
}

/// Remove elementary abelian 2 direct factors: returns a group with the
/// same 𝒞-set. A central involution outside the squares-and-commutators
/// subgroup splits off as a direct C₂ factor.
pub fn strip_elementary_two_factors(g: &Arc<FiniteGroup>) -> Arc<FiniteGroup> {
    let mut current = g.clone();
    loop {
        let z = center(&current);
        // squares and commutators generate the obstruction subgroup
        let mut seed: Vec<u16> = (0..current.order() as u16)
            .map(|x| current.mul(x, x))
            .collect();
        let gens = current.generating_set();
        for &a in &gens {
            for &b in &gens {
                seed.push(current.commutator(a, b));
            }
        }
        let phi = crate::groups::normal_closure(&current, &seed);
        let Some(&split) = z
            .elements()
            .iter()
            .find(|&&x| x != 0 && current.element_order(x) == 2 && !phi.contains(x))
        else {
            return current;
        };
        // complement: preimage of a hyperplane of G/phi avoiding the image
        // of the split involution
        let (v, proj) = quotient(&current, phi.elements());
        let zv = proj[split as usize];
        let mut w_gens: Vec<u16> = Vec::new();
        let mut covered = Subgroup::generated(&v, &w_gens);
        for x in 0..v.order() as u16 {
            if x == 0 || covered.contains(x) {
                continue;
            }
            let mut try_gens = w_gens.clone();
            try_gens.push(x);
            let bigger = Subgroup::generated(&v, &try_gens);
            if !bigger.contains(zv) {
                w_gens = try_gens;
                covered = bigger;
            }
        }
        debug_assert_eq!(covered.order() * 2, v.order());
        let h_elements: Vec<u16> = (0..current.order() as u16)
            .filter(|&x| covered.contains(proj[x as usize]))
            .collect();
        debug_assert_eq!(h_elements.len() * 2, current.order());
        let (h, _) = subgroup_as_group(&current, &h_elements);
        current = h;
    }
}

/// 𝒞(G): deduplicated noncommutative components of ℚG.
pub fn c_set(g: &Arc<FiniteGroup>) -> Result<Vec<SimpleComponent>, AlgebraError> {
    let data = group_data(g);
    if data.is_abelian {
        return Ok(Vec::new());
    }
    if !data.is_metabelian {
        return Err(AlgebraError::NotMetabelian);
    }
    let mut out: BTreeMap<CatalogKey, SimpleComponent> = BTreeMap::new();
    collect_c_set(g, &mut out)?;
    Ok(out.into_values().collect())
}

fn collect_c_set(
    g: &Arc<FiniteGroup>,
    out: &mut BTreeMap<CatalogKey, SimpleComponent>,
) -> Result<(), AlgebraError> {
    let g = strip_elementary_two_factors(g);
    if center(&g).order() == g.order() {
        return Ok(());
    }
    if g.order() <= DIRECT_CAP {
        for c in wedderburn_with_options(&g, WedderburnOptions::default())? {
            if !c.is_commutative() {
                out.insert(c.sort_key(), c);
            }
        }
        return Ok(());
    }
    let z = center(&g);
    let derived = derived_subgroup(&g);
    let (z_group, z_elements) = subgroup_as_group(&g, z.elements());
    if !z_group_is_cyclic(&z_group) {
        // union over H ≤ Z with Z/H cyclic and G' not inside H
        let z_subs = subgroups_with_cap(&z_group, z_group.order())?;
        for h in &z_subs {
            let h_parent: Vec<u16> = h
                .elements()
                .iter()
                .map(|&i| z_elements[i as usize])
                .collect();
            if !quotient_is_cyclic(&z_group, h.elements()) {
                continue;
            }
            if derived
                .elements()
                .iter()
                .all(|&d| h_parent.binary_search(&d).is_ok())
            {
                continue;
            }
            let (q, _) = quotient(&g, &h_parent);
            collect_c_set(&q, out)?;
        }
        return Ok(());
    }
    // cyclic center, large group: fall back to the direct computation
    for c in wedderburn_with_options(&g, WedderburnOptions::default())? {
        if !c.is_commutative() {
            out.insert(c.sort_key(), c);
        }
    }
    Ok(())
}

fn z_group_is_cyclic(z: &Arc<FiniteGroup>) -> bool {
    (0..z.order() as u16).any(|x| z.element_order(x) == z.order())
}

fn quotient_is_cyclic(z: &Arc<FiniteGroup>, h: &[u16]) -> bool {
    let (q, _) = quotient(z, h);
    (0..q.order() as u16).any(|x| q.element_order(x) == q.order())
}

/// 𝒞(KG) for an abelian number field K: each component extends along K,
/// with the center replaced by the compositum; the number of copies is the
/// degree of the intersection, which never matters for the set.
pub fn c_set_over(
    k: &FieldRef,
    g: &Arc<FiniteGroup>,
) -> Result<Vec<SimpleComponent>, AlgebraError> {
    let FieldRef::Abelian(k) = k else {
        return Err(AlgebraError::Unsupported(
            "C-sets over polynomial-defined fields are not supported".into(),
        ));
    };
    let base = c_set(g)?;
    let mut out: BTreeMap<CatalogKey, SimpleComponent> = BTreeMap::new();
    for c in &base {
        let ext = component_over(c, k);
        out.insert(ext.sort_key(), ext);
    }
    Ok(out.into_values().collect())
}

/// Field components of KG up to isomorphism: K·ℚ(ζ_d) for each divisor d
/// of the exponent of G/G′.
pub fn field_components_over(k: &AbelianFieldRef, g: &Arc<FiniteGroup>) -> Vec<AbelianFieldRef> {
    let derived = derived_subgroup(g);
    let (ab, _) = quotient(g, derived.elements());
    let exp = crate::groups::exponent(&ab);
    let mut out: Vec<AbelianFieldRef> = Vec::new();
    for d in crate::arith::divisors(exp as u64) {
        let f = k.compositum(&AbelianFieldRef::from_zeta(d as u32));
        if !out.contains(&f) {
            out.push(f);
        }
    }
    out
}
