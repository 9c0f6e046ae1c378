//! Named invariant suites, runnable per module scope. Each check returns
//! pass/fail with a counterexample description on failure; the CLI maps
//! any failure to a nonzero exit.

use crate::classify::{kg_kleinian, unit_group_structure, UnitOptions, VerdictClass};
use crate::csa::{
    hilbert_symbol_brute, hilbert_symbol_q, is_kleinian_by_case_list, is_kleinian_csa, Place,
};
use crate::cyclofield::{eta_lambda, parse_field, real_embedding_signs, AbelianFieldRef};
use crate::groups::{group_data, parse_group, FiniteGroup};
use crate::grpalg::{c_set, strong_shoda_pairs, GroupAlgebraElement};
use crate::rat;
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub scope: &'static str,
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn check(
    out: &mut Vec<CheckResult>,
    scope: &'static str,
    name: impl Into<String>,
    result: Result<(), String>,
) {
    match result {
        Ok(()) => out.push(CheckResult {
            scope,
            name: name.into(),
            pass: true,
            detail: String::new(),
        }),
        Err(detail) => out.push(CheckResult {
            scope,
            name: name.into(),
            pass: false,
            detail,
        }),
    }
}

fn g(spec: &str) -> Arc<FiniteGroup> {
    parse_group(spec).expect("catalog spec parses")
}

/// The family instances exercised by the invariant suites and the
/// randomized classification checks.
pub fn catalog_small() -> Vec<&'static str> {
    vec![
        "C[6]",
        "C[8]",
        "D[8]",
        "Q[8]",
        "Q[16]",
        "Dplus[16]",
        "Dminus[16]",
        "W",
        "W1[1]",
        "W1[2]",
        "W2[1]",
        "W2[2]",
        "V",
        "V1[1]",
        "V2[1]",
        "T",
        "T1[1]",
        "T2[1]",
        "T2[2]",
        "T3[1]",
        "T3[2]",
        "S[1,C[2],C1]",
        "S[1,C[4],C2]",
        "S[2,C[4],C2]",
        "S[1,C[8],C4]",
        "S[1,W1[1],y1 t1 x^2]",
        "S[1,W2[1],y1^2 x]",
        "S[2,W2[1],y1^2 x]",
    ]
}

pub fn catalog_fields() -> Vec<&'static str> {
    vec![
        "Q",
        "Q(sqrt,-1)",
        "Q(sqrt,-2)",
        "Q(sqrt,-3)",
        "Q(sqrt,-5)",
        "Q(sqrt,-7)",
        "Q(sqrt,-11)",
        "Q(sqrt,2)",
        "Q(sqrt,3)",
        "Q(sqrt,5)",
        "Q(zeta,3)",
        "Q(zeta,4)",
        "Q(eta,8)",
        "Q(eta,16)",
    ]
}

pub fn verify_groups() -> Vec<CheckResult> {
    let mut out = Vec::new();
    // exhaustive associativity and inverses up to order 128
    for spec in catalog_small() {
        let gg = g(spec);
        if gg.order() > 128 {
            continue;
        }
        let n = gg.order() as u16;
        let mut ok = Ok(());
        'outer: for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if gg.mul(gg.mul(a, b), c) != gg.mul(a, gg.mul(b, c)) {
                        ok = Err(format!("associativity fails at ({a},{b},{c})"));
                        break 'outer;
                    }
                }
            }
            if gg.mul(gg.inv(a), a) != 0 {
                ok = Err(format!("inverse fails at {a}"));
                break;
            }
        }
        check(
            &mut out,
            "groups",
            format!("associativity/inverses {spec}"),
            ok,
        );
    }
    // metabelian flags across the catalog
    let mut ok = Ok(());
    for spec in catalog_small() {
        if !group_data(&g(spec)).is_metabelian {
            ok = Err(format!("{spec} reported non-metabelian"));
            break;
        }
    }
    check(&mut out, "groups", "all family instances metabelian", ok);
    out
}

pub fn verify_cyclofield() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut identity_ok = Ok(());
    let mut negative_ok = Ok(());
    for n in 3..=24u32 {
        let (eta, l2) = eta_lambda(n);
        if eta.mul(&eta).sub(&l2).as_rational() != Some(rat(4)) {
            identity_ok = Err(format!("eta^2 - lambda^2 != 4 at n = {n}"));
        }
        let f = AbelianFieldRef::from_eta(n);
        match real_embedding_signs(&l2, &f) {
            Ok(signs) if signs.iter().all(|&s| s == -1) => {}
            r => negative_ok = Err(format!("lambda_{n}^2 not totally negative: {r:?}")),
        }
    }
    check(
        &mut out,
        "cyclofield",
        "eta/lambda identity n=3..24",
        identity_ok,
    );
    check(
        &mut out,
        "cyclofield",
        "lambda^2 totally negative n=3..24",
        negative_ok,
    );
    // lattice sanity over the field catalog
    let mut ok = Ok(());
    let fields: Vec<AbelianFieldRef> = catalog_fields()
        .iter()
        .filter_map(|s| match parse_field(s).unwrap() {
            crate::cyclofield::FieldRef::Abelian(a) => Some(a),
            _ => None,
        })
        .collect();
    let q = AbelianFieldRef::rationals();
    for f in &fields {
        if f.compositum(&q) != *f || f.intersect(&q) != q || f.intersect(f) != *f {
            ok = Err(format!("lattice law fails for {f}"));
        }
        for h in &fields {
            if f.contains(h) && h.degree() > 0 && f.degree() % h.degree() != 0 {
                ok = Err(format!("containment/degree mismatch for {f} and {h}"));
            }
        }
    }
    check(
        &mut out,
        "cyclofield",
        "compositum/intersect/contains laws",
        ok,
    );
    out
}

pub fn verify_grpalg() -> Vec<CheckResult> {
    let mut out = Vec::new();
    for spec in catalog_small() {
        let gg = g(spec);
        if gg.order() > 256 {
            continue;
        }
        let mut ok = Ok(());
        match strong_shoda_pairs(&gg) {
            Err(e) => ok = Err(format!("{e}")),
            Ok(pairs) => {
                let mut total = GroupAlgebraElement::zero(&gg);
                for p in &pairs {
                    if !p.idempotent.is_idempotent() || !p.idempotent.is_central() {
                        ok = Err("retained e(G,M,L) not a central idempotent".into());
                    }
                    total = total.add(&p.idempotent);
                }
                for (i, p) in pairs.iter().enumerate() {
                    for qq in pairs.iter().skip(i + 1) {
                        if !p.idempotent.mul(&qq.idempotent).is_zero() {
                            ok = Err("idempotents not pairwise orthogonal".into());
                        }
                    }
                }
                if total != GroupAlgebraElement::one(&gg) {
                    ok = Err("idempotents do not sum to 1".into());
                }
            }
        }
        check(
            &mut out,
            "grpalg",
            format!("idempotent completeness {spec}"),
            ok,
        );
    }
    out
}

pub fn verify_csa() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut ok = Ok(());
    for a in [-3i64, -2, -1, 1, 2, 3, 5, -5] {
        for b in [-3i64, -2, -1, 1, 2, 3, 5, -5] {
            for place in [
                Place::Finite(2),
                Place::Finite(3),
                Place::Finite(5),
                Place::Infinity,
            ] {
                if hilbert_symbol_q(&rat(a), &rat(b), place) != hilbert_symbol_brute(a, b, place) {
                    ok = Err(format!("hilbert mismatch at ({a},{b},{place:?})"));
                }
            }
        }
    }
    check(&mut out, "csa", "hilbert symbol formula vs brute force", ok);
    let mut ok = Ok(());
    for spec in ["Q[8]", "W", "T", "T2[1]", "Dminus[16]", "S[1,C[8],C4]"] {
        for c in c_set(&g(spec)).unwrap() {
            if is_kleinian_csa(&c) != is_kleinian_by_case_list(&c) {
                ok = Err(format!("Kleinian criteria disagree on {c} from {spec}"));
            }
        }
    }
    check(&mut out, "csa", "Kleinian criterion matches case list", ok);
    out
}

pub fn verify_classify() -> Vec<CheckResult> {
    let mut out = Vec::new();
    // the CCBas fixture table
    let table: Vec<(&str, Vec<&str>)> = vec![
        ("W1[1]", vec!["M2(Q)"]),
        ("W1[2]", vec!["M2(Q)"]),
        ("W", vec!["M2(Q)", "quat(-1,-1;Q)"]),
        ("W2[1]", vec!["M2(Q)", "quat(-1,-1;Q)"]),
        ("W2[2]", vec!["M2(Q)", "quat(-1,-1;Q)"]),
        ("T2[1]", vec!["M2(Q)", "M2(Q(sqrt,-2))", "quat(-1,-1;Q)"]),
        ("S[1,C[2],C1]", vec!["M2(Q)"]),
        ("S[1,C[4],C2]", vec!["M2(Q)", "quat(-3,-1;Q)"]),
        (
            "S[1,C[8],C4]",
            vec!["M2(Q)", "M2(Q(zeta,4))", "quat(-3,-1;Q)"],
        ),
    ];
    let mut ok = Ok(());
    for (spec, expected) in &table {
        let mut got: Vec<String> = c_set(&g(spec))
            .unwrap()
            .iter()
            .map(|c| c.to_string())
            .collect();
        got.sort();
        let mut want: Vec<String> = expected.iter().map(|s| s.to_string()).collect();
        want.sort();
        if got != want {
            ok = Err(format!("C({spec}) = {got:?}, expected {want:?}"));
        }
    }
    check(&mut out, "classify", "CCBas exact component tables", ok);
    // ffK direction: free-by-free or better implies Kleinian type
    let mut ok = Ok(());
    let opts = UnitOptions::default();
    for field in ["Q", "Q(sqrt,-1)", "Q(zeta,3)"] {
        for group in ["Q[8]", "W", "T2[1]", "S[1,C[4],C2]"] {
            let k = parse_field(field).unwrap();
            let gg = g(group);
            let v = unit_group_structure(&k, &gg, &opts).unwrap();
            if v.class <= VerdictClass::VirtuallyProductOfFreeByFree {
                let kv = kg_kleinian(&k, &gg).unwrap();
                if kv.verdict != crate::csa::Kleinian::Yes {
                    ok = Err(format!("ffK direction fails at ({field},{group})"));
                }
            }
        }
    }
    check(
        &mut out,
        "classify",
        "free-by-free implies Kleinian (ffK)",
        ok,
    );
    out
}

/// Run the selected scope ("all" or a module name).
pub fn run(scope: &str) -> Vec<CheckResult> {
    let mut out = Vec::new();
    if matches!(scope, "all" | "groups") {
        out.extend(verify_groups());
    }
    if matches!(scope, "all" | "cyclofield") {
        out.extend(verify_cyclofield());
    }
    if matches!(scope, "all" | "grpalg") {
        out.extend(verify_grpalg());
    }
    if matches!(scope, "all" | "csa") {
        out.extend(verify_csa());
    }
    if matches!(scope, "all" | "classify") {
        out.extend(verify_classify());
    }
    out
}
