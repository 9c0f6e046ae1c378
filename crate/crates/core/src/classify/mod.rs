//! Top-level decision procedures: Kleinian type of KG, component-wise unit
//! group classification, and the exceptional-case report for group rings
//! whose unit group is not virtually a direct product of free-by-free
//! groups despite KG being of Kleinian type.

use crate::csa::{
    classify_schur_kleinian, is_kleinian_csa, Body, DivisionFlag, Kleinian, SchurKleinian,
    SimpleComponent,
};
use crate::cyclofield::{AbelianFieldRef, FieldRef};
use crate::groups::{group_data, FiniteGroup};
use crate::grpalg::{c_set, c_set_over, field_components_over, AlgebraError};
use serde::Serialize;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Per-component unit class on the ladder
/// finite ⊂ abelian ⊂ free ⊂ free-by-free ⊂ conjectural ⊂ beyond.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UnitClass {
    Finite,
    Abelian,
    Free,
    FreeByFree,
    Conjectural,
    Beyond,
}

/// Verdict level for the whole group ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictClass {
    Finite,
    VirtuallyAbelian,
    VirtuallyProductOfFree,
    VirtuallyProductOfFreeByFree,
    Conjectural,
    Beyond,
}

impl VerdictClass {
    fn from_unit(c: UnitClass) -> VerdictClass {
        match c {
            UnitClass::Finite => VerdictClass::Finite,
            UnitClass::Abelian => VerdictClass::VirtuallyAbelian,
            UnitClass::Free => VerdictClass::VirtuallyProductOfFree,
            UnitClass::FreeByFree => VerdictClass::VirtuallyProductOfFreeByFree,
            UnitClass::Conjectural => VerdictClass::Conjectural,
            UnitClass::Beyond => VerdictClass::Beyond,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            VerdictClass::Finite => "finite",
            VerdictClass::VirtuallyAbelian => "virtually_abelian",
            VerdictClass::VirtuallyProductOfFree => "virtually_product_of_free",
            VerdictClass::VirtuallyProductOfFreeByFree => "virtually_product_of_free_by_free",
            VerdictClass::Conjectural => "conjectural",
            VerdictClass::Beyond => "beyond",
        }
    }
}

/// Options for the SL₂(ℤ[√d]) free-by-free conjecture: the verified list
/// is data, not code.
#[derive(Debug, Clone)]
pub struct UnitOptions {
    pub sl2_verified: Vec<i64>,
}

impl Default for UnitOptions {
    fn default() -> Self {
        UnitOptions {
            sl2_verified: vec![-1, -2, -3, -7, -11],
        }
    }
}

/// Classification outcome with per-component breakdown.
#[derive(Debug, Clone)]
pub struct UnitVerdict {
    pub class: VerdictClass,
    pub components: Vec<(SimpleComponent, UnitClass)>,
    pub notes: Vec<String>,
    pub conjecture_dependent: bool,
    pub exceptional_case: Option<u8>,
}

/// Kleinian-type decision for KG with a witness list of failing or
/// undetermined components.
#[derive(Debug, Clone)]
pub struct KleinianVerdict {
    pub verdict: Kleinian,
    pub witnesses: Vec<String>,
}

fn require_metabelian(g: &Arc<FiniteGroup>) -> Result<(), ClassifyError> {
    if !group_data(g).is_metabelian {
        return Err(AlgebraError::NotMetabelian.into());
    }
    Ok(())
}

/// Is KG of Kleinian type? Component-wise through the Schur–Kleinian
/// classification for abelian K; Hamiltonian and matrix-witness fast paths
/// for polynomial-defined K.
pub fn kg_kleinian(k: &FieldRef, g: &Arc<FiniteGroup>) -> Result<KleinianVerdict, ClassifyError> {
    let data = group_data(g);
    if data.is_abelian {
        return Ok(KleinianVerdict {
            verdict: Kleinian::Yes,
            witnesses: Vec::new(),
        });
    }
    require_metabelian(g)?;
    match k.clone().normalized() {
        FieldRef::Abelian(ka) => {
            let comps = c_set_over(&FieldRef::Abelian(ka), g)?;
            let mut failing = Vec::new();
            let mut unknown = Vec::new();
            for c in &comps {
                match classify_schur_kleinian(c) {
                    SchurKleinian::Case(_) => {}
                    SchurKleinian::NotKleinian => failing.push(format!("{c}")),
                    SchurKleinian::Unknown => unknown.push(format!("{c} (undetermined division)")),
                }
            }
            let verdict = if !failing.is_empty() {
                Kleinian::No
            } else if !unknown.is_empty() {
                Kleinian::Undetermined
            } else {
                Kleinian::Yes
            };
            failing.extend(unknown);
            Ok(KleinianVerdict {
                verdict,
                witnesses: failing,
            })
        }
        FieldRef::Poly(kp) => {
            let sig = kp.signature();
            if let Some((_, _, odd)) = &data.hamiltonian_split {
                let m = crate::groups::subgroup_exponent(odd);
                if m == 1 {
                    // only H(K) beyond the fields; Kleinian iff r2 <= 1
                    if sig.r2 <= 1 {
                        return Ok(KleinianVerdict {
                            verdict: Kleinian::Yes,
                            witnesses: Vec::new(),
                        });
                    }
                    return Ok(KleinianVerdict {
                        verdict: Kleinian::No,
                        witnesses: vec![format!(
                            "H(K) with K of signature ({},{})",
                            sig.r1, sig.r2
                        )],
                    });
                }
                return Ok(KleinianVerdict {
                    verdict: Kleinian::No,
                    witnesses: vec![format!("H(K(zeta_{m})) has a center of degree at least 3")],
                });
            }
            // non-Hamiltonian groups have a split matrix component, which
            // extends to a matrix algebra over a center of degree >= 3
            let comps = c_set(g)?;
            if let Some(c) = comps
                .iter()
                .find(|c| c.division_flag() == DivisionFlag::Split)
            {
                return Ok(KleinianVerdict {
                    verdict: Kleinian::No,
                    witnesses: vec![format!(
                        "{c} over K gives a matrix algebra with large center"
                    )],
                });
            }
            Err(ClassifyError::Unsupported(
                "polynomial-defined field with an all-division component set".into(),
            ))
        }
    }
}

/// Component-wise unit class per the reduction lemma: fields and totally
/// definite quaternions have finite or abelian unit contribution, M₂(ℚ) is
/// virtually free, M₂ of an imaginary quadratic is free-by-free when the
/// SL₂ conjecture is verified for d, and everything else is beyond.
pub fn component_unit_class(
    c: &SimpleComponent,
    opts: &UnitOptions,
) -> (UnitClass, Option<String>) {
    let sig = c.center.signature();
    let field_class = |matrix_size: usize,
                       center: &AbelianFieldRef|
     -> (UnitClass, Option<String>) {
        match matrix_size {
            1 => {
                if center.is_rationals() || center.is_imaginary_quadratic() {
                    (UnitClass::Finite, None)
                } else {
                    (UnitClass::Abelian, None)
                }
            }
            2 => {
                if center.is_rationals() {
                    (UnitClass::Free, None)
                } else if let Some(d) = center.quadratic_d().filter(|&d| d < 0) {
                    if opts.sl2_verified.contains(&d) {
                        (UnitClass::FreeByFree, None)
                    } else {
                        (
                            UnitClass::Conjectural,
                            Some(format!(
                                "M2(Q(sqrt,{d})): SL2 free-by-free conjecture unverified for d = {d}"
                            )),
                        )
                    }
                } else {
                    (UnitClass::Beyond, None)
                }
            }
            _ => (UnitClass::Beyond, None),
        }
    };
    match &c.body {
        Body::Field => field_class(c.matrix_size, &c.center),
        Body::CrossedHigher { .. } => (UnitClass::Beyond, None),
        Body::Quaternion(q) => {
            if c.matrix_size > 1 {
                return (UnitClass::Beyond, None);
            }
            let totally_definite = || -> bool {
                c.center.is_totally_real()
                    && crate::csa::ramification_profile(q)
                        .map(|p| p.ramified_real_places.len() == sig.r1 && sig.r1 > 0)
                        .unwrap_or(false)
            };
            match q.division {
                DivisionFlag::Division => {
                    if totally_definite() {
                        if c.center.is_rationals() {
                            (UnitClass::Finite, None)
                        } else {
                            (UnitClass::Abelian, None)
                        }
                    } else {
                        (UnitClass::Beyond, None)
                    }
                }
                DivisionFlag::Split => field_class(2, &c.center),
                DivisionFlag::Undetermined => {
                    let div_class = if totally_definite() {
                        if c.center.is_rationals() {
                            UnitClass::Finite
                        } else {
                            UnitClass::Abelian
                        }
                    } else {
                        UnitClass::Beyond
                    };
                    let (split_class, _) = field_class(2, &c.center);
                    let weakest = div_class.max(split_class);
                    (
                        weakest,
                        Some("undetermined division flag: weakest consistent class".into()),
                    )
                }
            }
        }
    }
}

/// Virtual structure of RG* for any order R in K, decided component-wise.
pub fn unit_group_structure(
    k: &FieldRef,
    g: &Arc<FiniteGroup>,
    opts: &UnitOptions,
) -> Result<UnitVerdict, ClassifyError> {
    let data = group_data(g);
    if !data.is_abelian {
        require_metabelian(g)?;
    }
    match k.clone().normalized() {
        FieldRef::Abelian(ka) => {
            let mut components: Vec<(SimpleComponent, UnitClass)> = Vec::new();
            let mut notes = Vec::new();
            for f in field_components_over(&ka, g) {
                let c = SimpleComponent::field(1, f);
                let (cl, note) = component_unit_class(&c, opts);
                if let Some(n) = note {
                    notes.push(n);
                }
                components.push((c, cl));
            }
            if !data.is_abelian {
                for c in c_set_over(&FieldRef::Abelian(ka.clone()), g)? {
                    let (cl, note) = component_unit_class(&c, opts);
                    if let Some(n) = note {
                        notes.push(n);
                    }
                    components.push((c, cl));
                }
            }
            let worst = components
                .iter()
                .map(|(_, cl)| *cl)
                .max()
                .unwrap_or(UnitClass::Finite);
            let class = VerdictClass::from_unit(worst);
            let conjecture_dependent = worst == UnitClass::Conjectural;
            let exceptional_case = exceptional_from_components(&components, class);
            Ok(UnitVerdict {
                class,
                components,
                notes,
                conjecture_dependent,
                exceptional_case,
            })
        }
        FieldRef::Poly(kp) => {
            let sig = kp.signature();
            let Some((_, _, odd)) = &data.hamiltonian_split else {
                if data.is_abelian {
                    // all components are fields K(zeta_d) of degree >= 3
                    return Ok(UnitVerdict {
                        class: VerdictClass::VirtuallyAbelian,
                        components: Vec::new(),
                        notes: vec![
                            "all components are fields over a center of degree at least 3".into(),
                        ],
                        conjecture_dependent: false,
                        exceptional_case: None,
                    });
                }
                return Err(ClassifyError::Unsupported(
                    "polynomial-defined fields support abelian and Hamiltonian groups only".into(),
                ));
            };
            let m = crate::groups::subgroup_exponent(odd);
            let mut notes = Vec::new();
            let class = if m > 1 {
                notes.push(format!(
                    "H(K(zeta_{m})) is beyond free-by-free over a degree >= 3 center"
                ));
                VerdictClass::Beyond
            } else if sig.r2 == 0 {
                // totally real K: H(K) totally definite, fields abelian
                notes.push("H(K) is totally definite over a totally real K".into());
                VerdictClass::VirtuallyAbelian
            } else {
                notes.push(format!(
                    "H(K) is a division algebra unramified at {} infinite places",
                    sig.r2
                ));
                VerdictClass::Beyond
            };
            let exceptional_case = if class == VerdictClass::Beyond && sig.r2 == 1 && sig.r1 >= 1 {
                Some(1)
            } else {
                None
            };
            Ok(UnitVerdict {
                class,
                components: Vec::new(),
                notes,
                conjecture_dependent: false,
                exceptional_case,
            })
        }
    }
}

fn exceptional_from_components(
    components: &[(SimpleComponent, UnitClass)],
    class: VerdictClass,
) -> Option<u8> {
    if class < VerdictClass::Conjectural {
        return None;
    }
    // beyond components that are still Schur algebras of Kleinian type
    for (c, cl) in components {
        if *cl != UnitClass::Beyond {
            continue;
        }
        if let Body::Quaternion(_) = &c.body {
            let sig = c.center.signature();
            match classify_schur_kleinian(c) {
                SchurKleinian::Case(2) => return Some(2),
                SchurKleinian::Case(3) => return Some(3),
                SchurKleinian::Case(4) if sig.r2 == 1 => return Some(1),
                _ => {}
            }
        }
    }
    if components
        .iter()
        .any(|(_, cl)| *cl == UnitClass::Conjectural)
    {
        return Some(4);
    }
    None
}

/// Which of the four exceptional circumstances blocks the free-by-free
/// structure, given that KG is of Kleinian type.
pub fn exceptional_cases(
    k: &FieldRef,
    g: &Arc<FiniteGroup>,
    opts: &UnitOptions,
) -> Result<Option<u8>, ClassifyError> {
    let kv = kg_kleinian(k, g)?;
    if kv.verdict != Kleinian::Yes {
        return Err(ClassifyError::PreconditionViolated(
            "KG is not of Kleinian type".into(),
        ));
    }
    Ok(unit_group_structure(k, g, opts)?.exceptional_case)
}

/// Property-check helper: is_kleinian_csa agrees with the explicit case
/// list on the component.
pub fn kleinian_cross_check(c: &SimpleComponent) -> bool {
    is_kleinian_csa(c) == crate::csa::is_kleinian_by_case_list(c)
}
