use num_traits::Zero;
use proptest::prelude::*;
use superorbit::matrixalg::SuperPartition;
use superorbit::{Matrix, Poly, Rational, RationalFunction, Scalar};

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..12).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(rational(), 0..4).prop_map(Poly::new)
}

fn rational_function() -> impl Strategy<Value = RationalFunction> {
    (poly(), poly()).prop_filter_map("zero denominator", |(n, d)| RationalFunction::new(n, d).ok())
}

fn matrix() -> impl Strategy<Value = Matrix<Rational>> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec((-3i64..4).prop_map(Rational::integer), c), r)
            .prop_map(move |rows| Matrix::from_rows(c, rows).unwrap())
    })
}

fn field_axioms<S: Scalar>(a: &S, b: &S, c: &S) {
    assert_eq!(a.add_ref(b), b.add_ref(a));
    assert_eq!(a.mul_ref(b), b.mul_ref(a));
    assert_eq!(a.add_ref(b).add_ref(c), a.add_ref(&b.add_ref(c)));
    assert_eq!(a.mul_ref(b).mul_ref(c), a.mul_ref(&b.mul_ref(c)));
    assert_eq!(a.mul_ref(&b.add_ref(c)), a.mul_ref(b).add_ref(&a.mul_ref(c)));
    assert!(a.sub_ref(a).is_zero());
    assert_eq!(a.add_ref(&a.neg_ref()), S::zero());
    if !a.is_zero() {
        assert_eq!(a.mul_ref(&a.try_inv().unwrap()), S::one());
    } else {
        assert!(a.try_inv().is_err());
    }
    let mut acc = c.clone();
    acc.add_mul_assign(a, b);
    acc.sub_mul_assign(a, b);
    assert_eq!(&acc, c);
}

proptest! {
    #[test]
    fn rational_field(a in rational(), b in rational(), c in rational()) {
        field_axioms(&a, &b, &c);
    }

    #[test]
    fn rational_text_round_trip(a in rational()) {
        prop_assert_eq!(Rational::parse_text(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn rational_function_field(a in rational_function(), b in rational_function(), c in rational_function()) {
        field_axioms(&a, &b, &c);
    }

    #[test]
    fn rational_function_text_round_trip(a in rational_function()) {
        prop_assert_eq!(RationalFunction::parse_text(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in rational_function(), b in rational_function(), x in rational()) {
        if let (Ok(va), Ok(vb), Ok(vab)) = (a.eval(&x), b.eval(&x), a.mul_ref(&b).eval(&x)) {
            prop_assert_eq!(vab, va.mul_ref(&vb));
        }
    }

    #[test]
    fn poly_division(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(q.mul(&b).add(&r), a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn rank_nullity(m in matrix()) {
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.dim(), m.cols());
        for v in k.basis() {
            prop_assert!(m.apply(v).unwrap().iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn solve_recovers_consistent_systems(m in matrix(), seed in prop::collection::vec(-3i64..4, 4)) {
        let x: Vec<Rational> = (0..m.cols()).map(|i| Rational::integer(seed[i])).collect();
        let b = m.apply(&x).unwrap();
        let sol = m.solve(&b).unwrap().expect("consistent system");
        prop_assert_eq!(m.apply(&sol).unwrap(), b);
    }

    #[test]
    fn rref_preserves_rank(m in matrix()) {
        let (r, pivots) = m.rref();
        prop_assert_eq!(pivots.len(), m.rank());
        prop_assert_eq!(r.rank(), m.rank());
    }

    #[test]
    fn partition_text_round_trip(m in 0usize..5, n in 0usize..5, pick in 0usize..1000) {
        let all = SuperPartition::all(m, n);
        prop_assume!(!all.is_empty());
        let p = &all[pick % all.len()];
        prop_assert_eq!(&p.to_string().parse::<SuperPartition>().unwrap(), p);
    }
}
