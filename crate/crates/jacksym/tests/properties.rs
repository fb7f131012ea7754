use jacksym::alpha::eval_alpha;
use jacksym::field::Rational;
use jacksym::ops::{apply_a, apply_b, apply_c, apply_h2, heisenberg_a};
use jacksym::partition::enumerate;
use jacksym::poly::Poly;
use jacksym::symfun::{adjoint_apply, inner_product, m_to_p, mul, p_to_m};
use jacksym::{AlphaRat, Basis, Partition, SymFun};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

fn alpha_poly() -> impl Strategy<Value = Poly<Rational>> {
    prop::collection::vec(small_rational(), 0..4).prop_map(Poly::new)
}

fn alpha_rat() -> impl Strategy<Value = AlphaRat> {
    (alpha_poly(), alpha_poly())
        .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| AlphaRat::new(n, d).unwrap())
}

fn partition(max_weight: u32) -> impl Strategy<Value = Partition> {
    (0..=max_weight).prop_flat_map(|w| {
        let all = enumerate(w, None);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn symfun(max_weight: u32) -> impl Strategy<Value = SymFun> {
    (prop::collection::vec((partition(max_weight), alpha_rat()), 0..4), any::<bool>())
        .prop_map(|(terms, in_m)| SymFun::from_terms(if in_m { Basis::Monomial } else { Basis::PowerSum }, terms))
}

fn homogeneous(weight: u32) -> impl Strategy<Value = SymFun> {
    let all = enumerate(weight, None);
    prop::collection::vec(small_rational(), all.len()).prop_map(move |cs| {
        SymFun::from_terms(Basis::PowerSum, all.iter().cloned().zip(cs.into_iter().map(AlphaRat::constant)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(a in alpha_rat(), b in alpha_rat(), c in alpha_rat()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        if !a.is_zero() {
            prop_assert!(a.div(&a).unwrap().is_one());
        }
    }

    #[test]
    fn canonical_form_is_unique(a in alpha_rat(), k in alpha_poly()) {
        prop_assume!(!k.is_zero());
        let scaled = AlphaRat::new(a.num().mul(&k), a.den().mul(&k)).unwrap();
        prop_assert_eq!(scaled, a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in alpha_rat(), b in alpha_rat(), r in small_rational()) {
        if let (Ok(x), Ok(y)) = (eval_alpha(&a, &r), eval_alpha(&b, &r)) {
            prop_assert_eq!(eval_alpha(&a.add(&b), &r).unwrap(), &x + &y);
            prop_assert_eq!(eval_alpha(&a.mul(&b), &r).unwrap(), &x * &y);
        }
    }

    #[test]
    fn basis_changes_are_inverse(f in symfun(5)) {
        prop_assert_eq!(m_to_p(&p_to_m(&f.to_p())), f.to_p());
        prop_assert_eq!(p_to_m(&m_to_p(&f.to_m())), f.to_m());
        prop_assert!(f.same_element(&f.in_basis(Basis::Monomial)));
    }

    #[test]
    fn product_is_commutative_and_associative(f in symfun(3), g in symfun(3), h in symfun(2)) {
        prop_assert!(mul(&f, &g).same_element(&mul(&g, &f)));
        prop_assert!(mul(&mul(&f, &g), &h).same_element(&mul(&f, &mul(&g, &h))));
        prop_assert!(mul(&f, &SymFun::one()).same_element(&f));
    }

    #[test]
    fn inner_product_is_symmetric_and_bilinear(f in symfun(4), g in symfun(4), h in symfun(4), c in alpha_rat()) {
        prop_assert_eq!(inner_product(&f, &g), inner_product(&g, &f));
        prop_assert_eq!(inner_product(&f.scale(&c).add(&h), &g), c.mul(&inner_product(&f, &g)).add(&inner_product(&h, &g)));
    }

    #[test]
    fn multiplication_adjoint(f in symfun(2), g in symfun(3), h in symfun(5)) {
        prop_assert_eq!(inner_product(&mul(&f, &g), &h), inner_product(&g, &adjoint_apply(&f, &h)));
    }

    #[test]
    fn conjugation_and_dominance(l in partition(8), m in partition(8)) {
        prop_assert_eq!(l.conjugate().conjugate(), l.clone());
        prop_assert_eq!(l.conjugate().weight(), l.weight());
        if l.weight() == m.weight() {
            prop_assert_eq!(l.dominance_leq(&m), m.conjugate().dominance_leq(&l.conjugate()));
        }
    }

    #[test]
    fn hierarchy_is_self_adjoint(f in homogeneous(4), g in homogeneous(4), k in 1usize..=4) {
        prop_assert_eq!(inner_product(&apply_a(k, &f), &g), inner_product(&f, &apply_a(k, &g)));
        prop_assert_eq!(inner_product(&apply_h2(&f), &g), inner_product(&f, &apply_h2(&g)));
    }

    #[test]
    fn hierarchy_commutes(f in homogeneous(4), j in 1usize..=3, k in 1usize..=3) {
        prop_assert!(apply_a(j, &apply_a(k, &f)).same_element(&apply_a(k, &apply_a(j, &f))));
    }

    #[test]
    fn step_operators_are_adjoint(f in homogeneous(3), g in homogeneous(4), k in 1usize..=4) {
        let b = apply_b(k, &f).unwrap();
        let c = apply_c(k, &g).unwrap();
        prop_assert_eq!(inner_product(&b, &g), inner_product(&f, &c));
    }

    #[test]
    fn heisenberg_modes_are_adjoint(f in homogeneous(2), g in homogeneous(4), n in 1i64..=2) {
        let raised = heisenberg_a(-n, &f).unwrap();
        let lowered = heisenberg_a(n, &g).unwrap();
        let lhs = inner_product(&raised, &g);
        let rhs = inner_product(&f, &lowered);
        prop_assert_eq!(lhs, rhs);
        prop_assert!(heisenberg_a(n, &SymFun::one()).unwrap().is_zero());
    }
}
