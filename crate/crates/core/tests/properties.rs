//! Property tests for the arithmetic invariants: Galois equivariance,
//! Hilbert symbol bimultiplicativity, square-factor invariance of the
//! division decision, and polynomial division round trips.

use proptest::prelude::*;
use schurkit::csa::{hilbert_symbol_q, is_division, DivisionFlag, Place, QuaternionSymbol};
use schurkit::cyclofield::{minimal_polynomial, AbelianFieldRef, CycloElement};
use schurkit::poly::Poly;
use schurkit::{rat, ratio, Cyclo, Rat};

fn small_rat() -> impl Strategy<Value = Rat> {
    (-6i64..7, 1i64..5).prop_map(|(n, d)| ratio(n, d))
}

fn nonzero_int() -> impl Strategy<Value = i64> {
    prop_oneof![(-30i64..0), (1i64..31)]
}

fn cyclo_elem(conductor: u32) -> impl Strategy<Value = Cyclo> {
    let phi = schurkit::arith::euler_phi(conductor as u64) as usize;
    proptest::collection::vec(small_rat(), phi).prop_map(move |cs| {
        let mut acc = Cyclo::zero(conductor);
        for (i, c) in cs.into_iter().enumerate() {
            acc = acc.add(&CycloElement::zeta_pow(conductor, i as u32).scale(&c));
        }
        acc
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn galois_is_a_ring_homomorphism(x in cyclo_elem(12), y in cyclo_elem(12)) {
        for a in [5u32, 7, 11] {
            prop_assert_eq!(x.mul(&y).galois(a), x.galois(a).mul(&y.galois(a)));
            prop_assert_eq!(x.add(&y).galois(a), x.galois(a).add(&y.galois(a)));
        }
    }

    #[test]
    fn minimal_polynomial_is_galois_invariant(x in cyclo_elem(8)) {
        let mp = minimal_polynomial(&x);
        for a in [3u32, 5, 7] {
            prop_assert_eq!(&minimal_polynomial(&x.galois(a)), &mp);
        }
        // and it annihilates the element
        let mut acc = Cyclo::zero(8);
        for (i, c) in mp.coeffs().iter().enumerate() {
            acc = acc.add(&x.pow(i as u32).scale(c));
        }
        prop_assert!(acc.is_zero());
    }

    #[test]
    fn inverse_roundtrip(x in cyclo_elem(12)) {
        if let Some(inv) = x.inv() {
            prop_assert_eq!(x.mul(&inv), Cyclo::one(12));
        } else {
            prop_assert!(x.is_zero());
        }
    }

    #[test]
    fn hilbert_symbol_is_symmetric_and_bimultiplicative(
        a in nonzero_int(),
        b in nonzero_int(),
        c in nonzero_int(),
    ) {
        for place in [Place::Finite(2), Place::Finite(3), Place::Finite(5), Place::Finite(7), Place::Infinity] {
            let h = |x: i64, y: i64| hilbert_symbol_q(&rat(x), &rat(y), place);
            prop_assert_eq!(h(a, b), h(b, a));
            prop_assert_eq!(h(a * c, b), h(a, b) * h(c, b));
        }
    }

    #[test]
    fn division_flag_ignores_square_factors(
        a in nonzero_int(),
        b in nonzero_int(),
        s in 1i64..6,
        t in 1i64..6,
    ) {
        let q = AbelianFieldRef::rationals();
        let mk = |x: i64, y: i64| {
            let mut sym = QuaternionSymbol {
                center: q.clone(),
                a: Cyclo::rational(1, rat(x)),
                b: Cyclo::rational(1, rat(y)),
                division: DivisionFlag::Undetermined,
            };
            sym.division = is_division(&sym);
            sym
        };
        prop_assert_eq!(mk(a, b).division, mk(a * s * s, b * t * t).division);
    }

    #[test]
    fn poly_divmod_roundtrip(
        f in proptest::collection::vec(small_rat(), 1..7),
        gdeg in proptest::collection::vec(small_rat(), 1..4),
    ) {
        let f = Poly::new(f);
        let mut gv = gdeg;
        gv.push(rat(1)); // monic divisor
        let g = Poly::new(gv);
        let (q, r) = f.divmod(&g);
        prop_assert_eq!(q.mul(&g).add(&r), f);
        prop_assert!(r.degree().is_none_or(|d| d < g.degree().unwrap()));
    }
}
