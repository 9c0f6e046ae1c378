use super::*;
use crate::csa::{Body, DivisionFlag, SimpleComponent};
use crate::cyclofield::{AbelianFieldRef, FieldRef};
use crate::groups::{parse_group, subgroups, FiniteGroup, Subgroup};
use crate::ratio;
use std::sync::Arc;

fn g(spec: &str) -> Arc<FiniteGroup> {
    parse_group(spec).unwrap()
}

/// Compact description for component set comparisons.
fn describe(c: &SimpleComponent) -> String {
    c.to_string()
}

fn set_of(comps: &[SimpleComponent]) -> Vec<String> {
    let mut v: Vec<String> = comps.iter().map(describe).collect();
    v.sort();
    v
}

#[test]
fn hat_properties() {
    let d8 = g("D[8]");
    let triv = Subgroup::trivial(&d8);
    assert_eq!(hat(&d8, &triv), GroupAlgebraElement::one(&d8));
    let whole = Subgroup::whole(&d8);
    let ghat = hat(&d8, &whole);
    assert!(ghat.is_idempotent());
    for x in 0..d8.order() as u16 {
        let b = GroupAlgebraElement::basis(&d8, x);
        assert_eq!(ghat.mul(&b), ghat, "absorbing property at {x}");
    }
    // hat of <a^2> in D8 squared equals itself
    let a = d8.generator("a").unwrap();
    let a2 = Subgroup::generated(&d8, &[d8.pow(a, 2)]);
    assert!(hat(&d8, &a2).is_idempotent());
}

#[test]
fn epsilon_cases() {
    let d8 = g("D[8]");
    let whole = Subgroup::whole(&d8);
    // m = l = G gives the full averaging idempotent
    assert_eq!(epsilon(&d8, &whole, &whole).unwrap(), hat(&d8, &whole));
    // prime index: exactly one minimal over-subgroup, epsilon = L-hat − M-hat
    let a = d8.generator("a").unwrap();
    let m = Subgroup::generated(&d8, &[a]);
    let l = Subgroup::generated(&d8, &[d8.pow(a, 2)]);
    assert_eq!(
        epsilon(&d8, &m, &l).unwrap(),
        hat(&d8, &l).sub(&hat(&d8, &m))
    );
    // epsilon(<a>, 1) = (1 - a^2)/2 is idempotent; a^2 is central in D8,
    // so this one is already central and equals its own e(G,M,L)
    let triv = Subgroup::trivial(&d8);
    let eps = epsilon(&d8, &m, &triv).unwrap();
    assert!(eps.is_idempotent());
    let ab = GroupAlgebraElement::basis(&d8, a);
    assert_eq!(eps.mul(&ab), ab.mul(&eps));
    assert!(eps.is_central());
    assert_eq!(e_central(&d8, &m, &triv).unwrap(), eps);
    // epsilon(<b>, 1) = (1 - b)/2 is idempotent but genuinely noncentral
    let b = d8.generator("b").unwrap();
    let mb = Subgroup::generated(&d8, &[b]);
    let eps_b = epsilon(&d8, &mb, &triv).unwrap();
    assert!(eps_b.is_idempotent());
    assert!(!eps_b.is_central());
    // non-nested pair is rejected
    assert_eq!(epsilon(&d8, &l, &m).unwrap_err(), AlgebraError::NotNested);
}

#[test]
fn e_central_t_family_fixture() {
    // e(T, <y,t>, <t y^-2>) = L-hat · (1 − y^4)/2
    let t = g("T");
    let y = t.generator("y").unwrap();
    let tt = t.generator("t").unwrap();
    let m = Subgroup::generated(&t, &[y, tt]);
    let l = Subgroup::generated(&t, &[t.mul(tt, t.pow(y, -2))]);
    assert_eq!(m.order(), 32);
    assert_eq!(l.order(), 4);
    let e = e_central(&t, &m, &l).unwrap();
    let lhat = hat(&t, &l);
    let half = ratio(1, 2);
    let one_minus_y4 = GroupAlgebraElement::one(&t)
        .sub(&GroupAlgebraElement::basis(&t, t.pow(y, 4)))
        .scale(&half);
    assert_eq!(e, lhat.mul(&one_minus_y4));
    assert!(e.is_idempotent());
    assert!(e.is_central());
}

#[test]
fn e_central_q8() {
    // e(Q8, <a>, 1) is central idempotent with e·a-hat = 0
    let q8 = g("Q[8]");
    let a = q8.generator("a").unwrap();
    let m = Subgroup::generated(&q8, &[a]);
    let triv = Subgroup::trivial(&q8);
    let e = e_central(&q8, &m, &triv).unwrap();
    assert!(e.is_idempotent());
    assert!(e.is_central());
    let ahat = hat(&q8, &m);
    assert!(e.mul(&ahat).is_zero());
}

#[test]
fn shoda_pairs_abelian_are_cyclic_quotients() {
    let c12 = g("C[12]");
    let pairs = strong_shoda_pairs(&c12).unwrap();
    // abelian G: pairs are (G, L) with G/L cyclic = all subgroups here
    assert!(pairs.iter().all(|p| p.m.order() == 12));
    assert_eq!(pairs.len(), subgroups(&c12).unwrap().len());
    let mut total = GroupAlgebraElement::zero(&c12);
    for p in &pairs {
        total = total.add(&p.idempotent);
    }
    assert_eq!(total, GroupAlgebraElement::one(&c12));
}

#[test]
fn shoda_pairs_q8() {
    let q8 = g("Q[8]");
    let pairs = strong_shoda_pairs(&q8).unwrap();
    assert_eq!(pairs.len(), 5);
    let noncomm: Vec<_> = pairs
        .iter()
        .filter(|p| p.k == 4 && p.m.order() == 4)
        .collect();
    assert_eq!(noncomm.len(), 1);
    let data = crossed_product_data(&q8, noncomm[0]).unwrap();
    assert_eq!(data.a_order(), 2);
    assert_eq!(data.k, 4);
    assert_eq!(data.action, vec![1, 3]);
    assert_eq!(data.twisting[1][1], 2);
}

#[test]
fn shoda_pair_t_family_has_k8() {
    let t = g("T");
    let pairs = strong_shoda_pairs(&t).unwrap();
    let y = t.generator("y").unwrap();
    let tt = t.generator("t").unwrap();
    let l_elt = t.mul(tt, t.pow(y, -2));
    let found = pairs
        .iter()
        .any(|p| p.k == 8 && p.m.order() == 32 && p.l.contains(l_elt) && p.l.order() == 4);
    assert!(found, "pair (<y,t>, <t y^-2>) with k = 8 retained");
}

#[test]
fn wedderburn_q8() {
    let comps = wedderburn(&g("Q[8]")).unwrap();
    assert_eq!(set_of(&comps), vec!["Q", "Q", "Q", "Q", "quat(-1,-1;Q)"]);
    let quat = comps
        .iter()
        .find(|c| matches!(c.body, Body::Quaternion(_)))
        .unwrap();
    assert_eq!(quat.division_flag(), DivisionFlag::Division);
    assert_eq!(quat.dimension_over_q(), 4);
}

#[test]
fn wedderburn_d16_fixtures() {
    // Dminus[16]: 4 Q ⊕ M2(Q) ⊕ M2(Q(sqrt,-2))
    let comps = wedderburn(&g("Dminus[16]")).unwrap();
    let mut expected: Vec<String> = ["M2(Q)", "M2(Q(sqrt,-2))", "Q", "Q", "Q", "Q"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    expected.sort();
    assert_eq!(set_of(&comps), expected);
    // Dplus[16]: 4 Q ⊕ 2 Q(i) ⊕ M2(Q(i))
    let comps = wedderburn(&g("Dplus[16]")).unwrap();
    assert_eq!(
        set_of(&comps),
        vec![
            "M2(Q(zeta,4))",
            "Q",
            "Q",
            "Q",
            "Q",
            "Q(zeta,4)",
            "Q(zeta,4)"
        ]
    );
}

#[test]
fn wedderburn_t_contains_quat_sqrt2() {
    let comps = wedderburn(&g("T")).unwrap();
    let expected_center = AbelianFieldRef::from_sqrt(2).unwrap();
    let found = comps.iter().any(|c| {
        matches!(&c.body, Body::Quaternion(q)
            if q.center == expected_center && q.division == DivisionFlag::Division)
    });
    assert!(found, "H(Q(sqrt,2)) appears in QT: {:?}", set_of(&comps));
}

#[test]
fn wedderburn_dimension_check() {
    for spec in [
        "Q[8]",
        "D[8]",
        "Dminus[16]",
        "W",
        "T",
        "S[1,C[4],C2]",
        "W2[1]",
    ] {
        let gg = g(spec);
        let comps = wedderburn(&gg).unwrap();
        let dim: usize = comps.iter().map(|c| c.dimension_over_q()).sum();
        assert_eq!(dim, gg.order(), "{spec}");
    }
}

#[test]
fn wedderburn_with_full_verification() {
    let opts = WedderburnOptions {
        verify_orthogonality: true,
        verify_dimensions: true,
        subgroup_cap: None,
    };
    for spec in ["Q[8]", "Dminus[16]", "S[1,C[4],C2]"] {
        wedderburn_with_options(&g(spec), opts).unwrap();
    }
}

#[test]
fn wedderburn_rejects_nonmetabelian() {
    // S4 from its regular permutation action; its derived subgroup A4 is
    // nonabelian, so the decomposition must refuse
    let perms: Vec<[u8; 4]> = {
        let mut out = Vec::new();
        let mut p = [0u8, 1, 2, 3];
        loop {
            out.push(p);
            // next permutation in lexicographic order
            let mut i = 3;
            while i > 0 && p[i - 1] >= p[i] {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            let mut j = 3;
            while p[j] <= p[i - 1] {
                j -= 1;
            }
            p.swap(i - 1, j);
            p[i..].reverse();
        }
        out
    };
    assert_eq!(perms.len(), 24);
    // make the identity permutation index 0
    let compose = |a: &[u8; 4], b: &[u8; 4]| -> [u8; 4] {
        [
            a[b[0] as usize],
            a[b[1] as usize],
            a[b[2] as usize],
            a[b[3] as usize],
        ]
    };
    let index_of = |p: &[u8; 4]| perms.iter().position(|q| q == p).unwrap() as u16;
    let mut table = vec![0u16; 24 * 24];
    for (i, a) in perms.iter().enumerate() {
        for (j, b) in perms.iter().enumerate() {
            table[i * 24 + j] = index_of(&compose(a, b));
        }
    }
    let gens = vec![
        ("s".to_string(), index_of(&[1, 0, 2, 3])),
        ("c".to_string(), index_of(&[1, 2, 3, 0])),
    ];
    let s4 = crate::groups::from_table_public(table, 24, gens);
    assert!(!crate::groups::group_data(&s4).is_metabelian);
    assert_eq!(wedderburn(&s4).unwrap_err(), AlgebraError::NotMetabelian);
    assert_eq!(c_set(&s4).unwrap_err(), AlgebraError::NotMetabelian);
}

#[test]
fn supernormal_union_covers_cset() {
    // C(G) sits inside the union of C(G/H) over subgroups H of the center
    // with cyclic quotient missing the derived subgroup
    use crate::groups::{center, derived_subgroup, quotient, subgroups};
    for spec in ["W", "T2[1]", "V1[1]"] {
        let gg = g(spec);
        let z = center(&gg);
        let derived = derived_subgroup(&gg);
        let mut union: Vec<String> = Vec::new();
        for h in subgroups(&gg).unwrap() {
            if !z.contains_subgroup(&h) {
                continue;
            }
            // Z/H cyclic?
            let (zq, _) = quotient(&gg, h.elements());
            let z_image: Vec<u16> = {
                let (_, proj) = quotient(&gg, h.elements());
                let mut v: Vec<u16> = z.elements().iter().map(|&x| proj[x as usize]).collect();
                v.sort_unstable();
                v.dedup();
                v
            };
            let cyclic = z_image
                .iter()
                .any(|&x| zq.element_order(x) == z_image.len());
            if !cyclic {
                continue;
            }
            if h.contains_subgroup(&derived) {
                continue;
            }
            let (q, _) = quotient(&gg, h.elements());
            for c in c_set(&q).unwrap() {
                let s = c.to_string();
                if !union.contains(&s) {
                    union.push(s);
                }
            }
        }
        for c in c_set(&gg).unwrap() {
            assert!(
                union.contains(&c.to_string()),
                "{spec}: {c} missing from the SuperNormal union"
            );
        }
    }
}

#[test]
fn cset_ccbas_w_families() {
    // C(W1n) = {M2(Q)}
    for spec in ["W1[1]", "W1[2]"] {
        let comps = c_set(&g(spec)).unwrap();
        assert_eq!(set_of(&comps), vec!["M2(Q)"], "{spec}");
    }
    // C(W) = C(W2n) = {M2(Q), H(Q)}
    for spec in ["W", "W2[1]", "W2[2]"] {
        let comps = c_set(&g(spec)).unwrap();
        assert_eq!(set_of(&comps), vec!["M2(Q)", "quat(-1,-1;Q)"], "{spec}");
    }
}

#[test]
fn cset_t21_exact() {
    let comps = c_set(&g("T2[1]")).unwrap();
    let mut expected: Vec<String> = ["M2(Q)", "M2(Q(sqrt,-2))", "quat(-1,-1;Q)"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    expected.sort();
    assert_eq!(set_of(&comps), expected);
}

#[test]
fn cset_s_family_cases() {
    // P = C2: {M2(Q)}
    let comps = c_set(&g("S[1,C[2],C1]")).unwrap();
    assert_eq!(set_of(&comps), vec!["M2(Q)"]);
    // P = C4: {M2(Q), (-1,-3/Q)}
    let comps = c_set(&g("S[1,C[4],C2]")).unwrap();
    assert_eq!(set_of(&comps), vec!["M2(Q)", "quat(-3,-1;Q)"]);
    // P = C8: {M2(Q), (-1,-3/Q), M2(Q(zeta,4))}
    let comps = c_set(&g("S[1,C[8],C4]")).unwrap();
    let mut expected: Vec<String> = ["M2(Q)", "M2(Q(zeta,4))", "quat(-3,-1;Q)"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    expected.sort();
    assert_eq!(set_of(&comps), expected);
}

#[test]
fn cset_over_d16minus() {
    let k = FieldRef::Abelian(AbelianFieldRef::from_sqrt(-2).unwrap());
    let comps = c_set_over(&k, &g("Dminus[16]")).unwrap();
    assert_eq!(set_of(&comps), vec!["M2(Q(sqrt,-2))"]);
}

#[test]
fn cset_times_abelian_two() {
    // C(A × G) = C(G) for elementary abelian 2-groups A
    for spec in ["Q[8]", "W", "T2[1]", "S[1,C[4],C2]"] {
        let plain = set_of(&c_set(&g(spec)).unwrap());
        let doubled = set_of(&c_set(&g(&format!("C[2]x{spec}"))).unwrap());
        assert_eq!(plain, doubled, "{spec}");
        let quadrupled = set_of(&c_set(&g(&format!("C[2]xC[2]x{spec}"))).unwrap());
        ass_eq(plain, quadrupled, spec);
    }
}

fn ass_eq(a: Vec<String>, b: Vec<String>, spec: &str) {
    assert_eq!(a, b, "{spec}");
}

#[test]
fn strip_factors_keeps_order_quotient() {
    let gg = g("C[2]xC[2]xQ[8]");
    let stripped = strip_elementary_two_factors(&gg);
    assert_eq!(stripped.order(), 8);
}

#[test]
fn classical_decompositions() {
    // QC6 = Q ⊕ Q ⊕ Q(zeta_3) ⊕ Q(zeta_6)
    let comps = wedderburn(&g("C[6]")).unwrap();
    assert_eq!(
        set_of(&comps),
        {
            let mut v = vec![
                "Q".to_string(),
                "Q".to_string(),
                "Q(zeta,3)".to_string(),
                "Q(zeta,3)".to_string(),
            ];
            v.sort();
            v
        }
    );
    // QD6 = Q ⊕ Q ⊕ M2(Q) (the symmetric group on three letters)
    let comps = wedderburn(&g("D[6]")).unwrap();
    let mut expected = vec!["Q".to_string(), "Q".to_string(), "M2(Q)".to_string()];
    expected.sort();
    assert_eq!(set_of(&comps), expected);
    // QD10 = 2Q ⊕ M2(Q(sqrt,5))
    let comps = wedderburn(&g("D[10]")).unwrap();
    let mut expected = vec![
        "Q".to_string(),
        "Q".to_string(),
        "M2(Q(sqrt,5))".to_string(),
    ];
    expected.sort();
    assert_eq!(set_of(&comps), expected);
    // Q[12] is the dicyclic group of order 12, the same group as
    // S[1,C[4],C2]; both routes agree
    assert_eq!(
        crate::groups::fingerprint(&g("Q[12]")),
        crate::groups::fingerprint(&g("S[1,C[4],C2]"))
    );
    assert_eq!(
        set_of(&wedderburn(&g("Q[12]")).unwrap()),
        set_of(&wedderburn(&g("S[1,C[4],C2]")).unwrap())
    );
}
