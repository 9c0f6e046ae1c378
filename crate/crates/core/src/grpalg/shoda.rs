//! Strong Shoda pairs, the idempotents ε(M,L) and e(G,M,L), crossed
//! product data extraction, and the Wedderburn decomposition of ℚG for
//! metabelian G.

use super::{AlgebraError, GroupAlgebraElement};
use crate::csa::{recognize_component, SimpleComponent};
use crate::groups::{
    closure, group_data, normalizer, subgroups_with_cap, FiniteGroup, Subgroup,
    DEFAULT_SUBGROUP_CAP,
};
use crate::linalg::RowSpace;
use crate::{ratio, Rat};
use std::sync::Arc;

type QG = GroupAlgebraElement<Rat>;

/// Ŝ = (1/|S|)·Σ_{s∈S} s, always an idempotent.
pub fn hat(g: &Arc<FiniteGroup>, s: &Subgroup) -> QG {
    let c = ratio(1, s.order() as i64);
    GroupAlgebraElement::from_terms(g, s.elements().iter().map(|&x| (x, c.clone())))
}

/// ε(M,L) = M̂ when M = L, else ∏ (L̂ − Ŝ) over the minimal subgroups S of
/// M containing L properly.
pub fn epsilon(g: &Arc<FiniteGroup>, m: &Subgroup, l: &Subgroup) -> Result<QG, AlgebraError> {
    if !m.contains_subgroup(l) || !l.is_normal_in(m) {
        return Err(AlgebraError::NotNested);
    }
    if m.order() == l.order() {
        return Ok(hat(g, m));
    }
    let lhat = hat(g, l);
    let mut result = GroupAlgebraElement::one(g);
    let mut seen: Vec<Vec<u16>> = Vec::new();
    for &x in m.elements() {
        if l.contains(x) {
            continue;
        }
        let mut gens: Vec<u16> = l.elements().to_vec();
        gens.push(x);
        let s = closure(g, &gens);
        let index = s.len() / l.order();
        // minimal over-subgroups have prime index over L
        if crate::arith::factorize(index as u64) != vec![(index as u64, 1)] {
            continue;
        }
        if seen.contains(&s) {
            continue;
        }
        seen.push(s.clone());
        let shat = hat(g, &Subgroup::from_elements(g, s));
        result = result.mul(&lhat.sub(&shat));
    }
    Ok(result)
}

/// e(G,M,L): the sum of the distinct G-conjugates of ε(M,L).
pub fn e_central(g: &Arc<FiniteGroup>, m: &Subgroup, l: &Subgroup) -> Result<QG, AlgebraError> {
    let eps = epsilon(g, m, l)?;
    let mut distinct: Vec<QG> = Vec::new();
    for c in 0..g.order() as u16 {
        let conj = eps.conj_by(c);
        if !distinct.contains(&conj) {
            distinct.push(conj);
        }
    }
    let mut sum = GroupAlgebraElement::zero(g);
    for x in &distinct {
        sum = sum.add(x);
    }
    Ok(sum)
}

/// A strong Shoda pair (M, L) with the derived data used downstream.
#[derive(Clone)]
pub struct StrongShodaPair {
    pub m: Subgroup,
    pub l: Subgroup,
    /// N = N_G(L).
    pub n: Subgroup,
    /// k = [M : L].
    pub k: usize,
    /// Matrix size [G : N].
    pub matrix_size: usize,
    /// A chosen generator of the cyclic quotient M/L.
    pub x_gen: u16,
    /// The central idempotent e(G, M, L).
    pub idempotent: QG,
}

impl std::fmt::Debug for StrongShodaPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "StrongShodaPair(|M|={}, |L|={}, k={}, n={})",
            self.m.order(),
            self.l.order(),
            self.k,
            self.matrix_size
        )
    }
}

/// Order of the coset x·L in M/L.
fn coset_order(g: &FiniteGroup, l: &Subgroup, x: u16) -> usize {
    let mut p = x;
    let mut ord = 1;
    while !l.contains(p) {
        p = g.mul(p, x);
        ord += 1;
    }
    ord
}

/// All strong Shoda pairs, deduplicated so that each distinct idempotent
/// e(G,M,L) is produced by exactly one retained pair.
pub fn strong_shoda_pairs(g: &Arc<FiniteGroup>) -> Result<Vec<StrongShodaPair>, AlgebraError> {
    strong_shoda_pairs_with_cap(g, DEFAULT_SUBGROUP_CAP)
}

pub fn strong_shoda_pairs_with_cap(
    g: &Arc<FiniteGroup>,
    cap: usize,
) -> Result<Vec<StrongShodaPair>, AlgebraError> {
    let subs = subgroups_with_cap(g, cap)?;
    let mut out: Vec<StrongShodaPair> = Vec::new();
    for l in &subs {
        let n = normalizer(g, l);
        for m in &subs {
            if !m.is_normal_in_parent
                || m.order() % l.order() != 0
                || !m.contains_subgroup(l)
                || !n.contains_subgroup(m)
            {
                continue;
            }
            let k = m.order() / l.order();
            // cyclic quotient: some coset generates M/L
            let Some(x_gen) = m
                .elements()
                .iter()
                .copied()
                .find(|&x| coset_order(g, l, x) == k && closure_contains_m(g, l, x, m))
            else {
                continue;
            };
            // maximal abelian in N/L: no coset outside M/L centralizes M/L
            let centralizer_escapes = n.elements().iter().any(|&c| {
                !m.contains(c)
                    && m.elements()
                        .iter()
                        .all(|&mm| l.contains(g.commutator(c, mm)))
            });
            if centralizer_escapes {
                continue;
            }
            let idempotent = e_central(g, m, l)?;
            if out.iter().any(|p| p.idempotent == idempotent) {
                continue;
            }
            out.push(StrongShodaPair {
                m: m.clone(),
                l: l.clone(),
                n: n.clone(),
                k,
                matrix_size: g.order() / n.order(),
                x_gen,
                idempotent,
            });
        }
    }
    Ok(out)
}

fn closure_contains_m(g: &Arc<FiniteGroup>, l: &Subgroup, x: u16, m: &Subgroup) -> bool {
    let mut gens: Vec<u16> = l.elements().to_vec();
    gens.push(x);
    closure(g, &gens).len() == m.order()
}

/// The (n, k, action, twisting) package of a strong Shoda pair: the
/// component is M_n of a crossed product of A = N/M over ℚ(ζ_k).
#[derive(Clone, Debug)]
pub struct CrossedProductData {
    /// Matrix size [G : N].
    pub matrix_size: usize,
    /// Cyclotomic order [M : L].
    pub k: usize,
    /// Lexicographically least representatives of the cosets of M in N;
    /// entry 0 is the identity coset.
    pub reps: Vec<u16>,
    /// Exponent i per representative: x^{γ(a)} = x^i in M/L.
    pub action: Vec<u32>,
    /// Twisting exponent j per representative pair: γ(ab)⁻¹γ(a)γ(b) = x^j.
    pub twisting: Vec<Vec<u32>>,
    /// Generators with orders for A = N/M.
    pub group_a: Vec<(u16, u32)>,
}

impl CrossedProductData {
    pub fn a_order(&self) -> usize {
        self.reps.len()
    }
}

/// Extract action and twisting from a strong Shoda pair with the canonical
/// (lexicographically least) transversal.
pub fn crossed_product_data(
    g: &Arc<FiniteGroup>,
    pair: &StrongShodaPair,
) -> Result<CrossedProductData, AlgebraError> {
    let (m, l, n) = (&pair.m, &pair.l, &pair.n);
    let k = pair.k;
    // powers of the chosen generator modulo L
    let mut x_powers = Vec::with_capacity(k);
    let mut p = g.identity();
    for _ in 0..k {
        x_powers.push(p);
        p = g.mul(p, pair.x_gen);
    }
    let in_coset = |c: u16, i: usize| l.contains(g.mul(g.inv(x_powers[i]), c));
    let power_index = |c: u16| -> Result<u32, AlgebraError> {
        (0..k)
            .find(|&i| in_coset(c, i))
            .map(|i| i as u32)
            .ok_or_else(|| AlgebraError::NotStrongShoda("element not in M/L powers".into()))
    };
    // coset representatives of M in N, lex-least, identity first
    let mut reps: Vec<u16> = Vec::new();
    let mut seen = vec![false; g.order()];
    for &c in n.elements() {
        if seen[c as usize] {
            continue;
        }
        reps.push(c);
        for &mm in m.elements() {
            seen[g.mul(c, mm) as usize] = true;
        }
    }
    // which coset of M a given element of N lies in
    let coset_of = |c: u16| -> usize {
        reps.iter()
            .position(|&r| m.contains(g.mul(g.inv(r), c)))
            .expect("element lies in N")
    };
    let mut action = Vec::with_capacity(reps.len());
    for &r in &reps {
        action.push(power_index(g.conj(pair.x_gen, r))?);
    }
    // action must be a group homomorphism into (ℤ/k)*, injective
    for (ia, &ra) in reps.iter().enumerate() {
        if action[ia] == 1 && ia != 0 {
            return Err(AlgebraError::NotStrongShoda(
                "action is not faithful".into(),
            ));
        }
        for (ib, &rb) in reps.iter().enumerate() {
            let iab = coset_of(g.mul(ra, rb));
            if (action[ia] as u64 * action[ib] as u64) % k as u64 != action[iab] as u64 {
                return Err(AlgebraError::NotStrongShoda(
                    "action is not a homomorphism".into(),
                ));
            }
        }
    }
    let mut twisting = vec![vec![0u32; reps.len()]; reps.len()];
    for (ia, &ra) in reps.iter().enumerate() {
        for (ib, &rb) in reps.iter().enumerate() {
            let iab = coset_of(g.mul(ra, rb));
            let d = g.mul(g.inv(reps[iab]), g.mul(ra, rb));
            twisting[ia][ib] = power_index(d)?;
        }
    }
    // 2-cocycle identity: j(ab,c) + j(a,b)·i_c = j(a,bc) + j(b,c) mod k
    for ia in 0..reps.len() {
        for ib in 0..reps.len() {
            for ic in 0..reps.len() {
                let iab = coset_of(g.mul(reps[ia], reps[ib]));
                let ibc = coset_of(g.mul(reps[ib], reps[ic]));
                let lhs = (twisting[iab][ic] as u64 + twisting[ia][ib] as u64 * action[ic] as u64)
                    % k as u64;
                let rhs = (twisting[ia][ibc] as u64 + twisting[ib][ic] as u64) % k as u64;
                if lhs != rhs {
                    return Err(AlgebraError::NotStrongShoda(
                        "twisting fails the 2-cocycle identity".into(),
                    ));
                }
            }
        }
    }
    // generators with orders for A = N/M (greedy)
    let mut group_a: Vec<(u16, u32)> = Vec::new();
    let mut gen_cosets: Vec<u16> = vec![reps[0]];
    let mut covered = 1usize;
    for &r in reps.iter().skip(1) {
        if covered == reps.len() {
            break;
        }
        let mut gens: Vec<u16> = gen_cosets.clone();
        gens.push(r);
        gens.extend_from_slice(m.elements());
        let new_cover = closure(g, &gens).len() / m.order();
        if new_cover > covered {
            // order of rM in N/M
            let mut ord = 1u32;
            let mut q = r;
            while !m.contains(q) {
                q = g.mul(q, r);
                ord += 1;
            }
            group_a.push((r, ord));
            gen_cosets.push(r);
            covered = new_cover;
        }
    }
    Ok(CrossedProductData {
        matrix_size: pair.matrix_size,
        k,
        reps,
        action,
        twisting,
        group_a,
    })
}

#[derive(Clone, Copy, Debug, Default)]
pub struct WedderburnOptions {
    /// Verify pairwise orthogonality of the idempotents (sum-to-one is
    /// always checked).
    pub verify_orthogonality: bool,
    /// Verify rank of span{g·e} = n²·φ(k)·`[N:M]` per component.
    pub verify_dimensions: bool,
    pub subgroup_cap: Option<usize>,
}

/// Wedderburn decomposition of ℚG for metabelian G: one recognized simple
/// component per retained strong Shoda pair, sorted canonically.
pub fn wedderburn(g: &Arc<FiniteGroup>) -> Result<Vec<SimpleComponent>, AlgebraError> {
    wedderburn_with_options(g, WedderburnOptions::default())
}

pub fn wedderburn_with_options(
    g: &Arc<FiniteGroup>,
    opts: WedderburnOptions,
) -> Result<Vec<SimpleComponent>, AlgebraError> {
    let data = group_data(g);
    if !data.is_metabelian {
        return Err(AlgebraError::NotMetabelian);
    }
    let cap = opts.subgroup_cap.unwrap_or(DEFAULT_SUBGROUP_CAP);
    let pairs = strong_shoda_pairs_with_cap(g, cap)?;
    // completeness: idempotents sum to 1
    let mut total = GroupAlgebraElement::zero(g);
    for p in &pairs {
        total = total.add(&p.idempotent);
    }
    if total != GroupAlgebraElement::one(g) {
        return Err(AlgebraError::CompletenessFailure(
            "retained idempotents do not sum to 1".into(),
        ));
    }
    if opts.verify_orthogonality {
        for (i, p) in pairs.iter().enumerate() {
            if !p.idempotent.is_idempotent() || !p.idempotent.is_central() {
                return Err(AlgebraError::CompletenessFailure(format!(
                    "e(G,M,L) #{i} is not a central idempotent"
                )));
            }
            for q in pairs.iter().skip(i + 1) {
                if !p.idempotent.mul(&q.idempotent).is_zero() {
                    return Err(AlgebraError::CompletenessFailure(
                        "idempotents are not pairwise orthogonal".into(),
                    ));
                }
            }
        }
    }
    let mut components = Vec::with_capacity(pairs.len());
    let mut dim_total = 0usize;
    for pair in &pairs {
        let data = crossed_product_data(g, pair)?;
        let expected_dim = pair.matrix_size
            * pair.matrix_size
            * crate::arith::euler_phi(pair.k as u64) as usize
            * data.a_order();
        if opts.verify_dimensions {
            let rank = idempotent_span_rank(g, &pair.idempotent);
            if rank != expected_dim {
                return Err(AlgebraError::CompletenessFailure(format!(
                    "span rank {rank} does not match n²·φ(k)·[N:M] = {expected_dim}"
                )));
            }
        }
        dim_total += expected_dim;
        components.push(recognize_component(&data));
    }
    if dim_total != g.order() {
        return Err(AlgebraError::CompletenessFailure(format!(
            "component dimensions sum to {dim_total}, expected {}",
            g.order()
        )));
    }
    components.sort_by_key(|c| c.sort_key());
    Ok(components)
}

/// Rank over ℚ of span{g·e : g ∈ G}.
fn idempotent_span_rank(g: &Arc<FiniteGroup>, e: &QG) -> usize {
    let mut space = RowSpace::new(g.order());
    for x in 0..g.order() as u16 {
        let v = GroupAlgebraElement::basis(g, x).mul(e);
        space.insert(v.to_dense());
    }
    space.dim()
}
