use keypoly::base_fields::{FieldContext, FieldElement};
use keypoly::diskoid::{ball_value, epsilon_radius};
use keypoly::newton::{check_support, lower_hull};
use keypoly::polynomials::{
    euclid_divide, from_taylor, q_expansion, reassemble, taylor_at, Polynomial,
};
use keypoly::suites::oracle_hull;
use keypoly::valuations::{value_of, PolyValuation};
use keypoly::value_group::{GroupValue, Rational};
use num_traits::Signed;
use proptest::prelude::*;

fn tq() -> FieldContext {
    FieldContext::tadic()
}

fn rational(max_den: i64, span: i64) -> impl Strategy<Value = Rational> {
    (1..=max_den).prop_flat_map(move |d| {
        (-span * d..=span * d).prop_map(move |n| Rational::new(n.into(), d.into()))
    })
}

fn value(dim: usize) -> impl Strategy<Value = GroupValue> {
    prop::collection::vec(rational(6, 4), dim).prop_map(GroupValue::finite)
}

fn element(denoms: &'static [i64]) -> impl Strategy<Value = FieldElement> {
    prop::collection::vec((prop::sample::select(denoms), -6i64..=8, -3i64..=3), 0..=3).prop_map(
        |terms| {
            terms
                .into_iter()
                .fold(FieldElement::zero(tq()), |acc, (d, k, c)| {
                    let m = FieldElement::monomial(
                        tq(),
                        Rational::from_integer(c.into()),
                        Rational::new(k.into(), d.into()),
                    )
                    .unwrap();
                    &acc + &m
                })
        },
    )
}

fn poly(denoms: &'static [i64], max_len: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(element(denoms), 0..=max_len)
        .prop_map(|c| Polynomial::from_coeffs(tq(), c).unwrap())
}

/// Degree at least one, with a monomial leading coefficient so that division terminates.
fn divisor(max_deg: usize) -> impl Strategy<Value = Polynomial> {
    (
        prop::collection::vec(element(K), 1..=max_deg),
        prop::sample::select(vec![-2i64, -1, 1, 3]),
        -2i64..=2,
    )
        .prop_map(|(mut c, lc, k)| {
            let m = FieldElement::monomial(
                tq(),
                Rational::from_integer(lc.into()),
                Rational::from_integer(k.into()),
            );
            c.push(m.unwrap());
            Polynomial::from_coeffs(tq(), c).unwrap()
        })
}

const KBAR: &[i64] = &[1, 2, 3];
const K: &[i64] = &[1];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_order_is_total(a in value(2), b in value(2)) {
        let ab = a.try_cmp(&b).unwrap();
        prop_assert_eq!(ab.reverse(), b.try_cmp(&a).unwrap());
        prop_assert_eq!(ab.is_eq(), a == b);
    }

    #[test]
    fn group_value_round_trip(a in value(3)) {
        prop_assert_eq!(a.to_string().parse::<GroupValue>().unwrap(), a);
    }

    #[test]
    fn element_round_trip(x in element(KBAR)) {
        prop_assert_eq!(FieldElement::parse(&x.to_string(), tq()).unwrap(), x);
    }

    #[test]
    fn element_valuation_axioms(x in element(KBAR), y in element(KBAR)) {
        let vxy = (&x * &y).valuation();
        prop_assert_eq!(vxy, x.valuation().try_add(&y.valuation()).unwrap());
        let vs = (&x + &y).valuation();
        let min = if x.valuation() <= y.valuation() { x.valuation() } else { y.valuation() };
        prop_assert!(vs.try_cmp(&min).unwrap().is_ge());
    }

    #[test]
    fn polynomial_round_trip(f in poly(KBAR, 5)) {
        prop_assert_eq!(Polynomial::parse(&f.to_string(), tq()).unwrap(), f);
    }

    #[test]
    fn division_identity(f in poly(KBAR, 6), g in divisor(3)) {
        let (q, r) = euclid_divide(&f, &g).unwrap();
        prop_assert_eq!(&(&q * &g) + &r, f);
        prop_assert!(r.is_zero() || r.deg() < g.deg());
    }

    #[test]
    fn q_expansion_reassembles(f in poly(KBAR, 7), q in divisor(3)) {
        let q = q.div_scalar(&q.leading_coefficient()).unwrap();
        let parts = q_expansion(&f, &q).unwrap();
        prop_assert!(parts.iter().all(|p| p.is_zero() || p.deg() < q.deg()));
        prop_assert_eq!(reassemble(&parts, &q), f);
    }

    #[test]
    fn taylor_round_trip(f in poly(KBAR, 5), a in element(KBAR)) {
        prop_assert_eq!(from_taylor(&taylor_at(&f, &a).unwrap(), &a), f);
    }

    #[test]
    fn hull_matches_oracle(points in prop::collection::vec((0usize..=12, rational(12, 6)), 1..=12)) {
        let input: Vec<(usize, GroupValue)> =
            points.iter().map(|(a, v)| (*a, GroupValue::rank1(v.clone()))).collect();
        let hull = lower_hull(&input).unwrap();
        let (vertices, slopes) = oracle_hull(&points);
        let ours: Vec<(usize, Rational)> =
            hull.vertices.iter().map(|(a, g)| (*a, g.as_rank1().unwrap().clone())).collect();
        prop_assert_eq!(ours, vertices);
        let ours: Vec<Rational> = hull.slopes.iter().map(|s| s.as_rank1().unwrap().clone()).collect();
        prop_assert_eq!(ours, slopes);
        prop_assert!(check_support(&hull).unwrap());
    }

    #[test]
    fn lexicographic_hull_support(points in prop::collection::vec((0usize..=8, value(2)), 1..=8)) {
        let hull = lower_hull(&points).unwrap();
        prop_assert!(check_support(&hull).unwrap());
    }

    #[test]
    fn ball_value_is_pair_value(a in element(KBAR), delta in rational(4, 3), g in poly(KBAR, 4)) {
        let delta = GroupValue::rank1(delta);
        let mu = PolyValuation::pair(a.clone(), delta.clone()).unwrap();
        prop_assert_eq!(ball_value(&a, &delta, &g).unwrap(), value_of(&mu, &g).unwrap());
    }

    #[test]
    fn epsilon_ball_lies_in_the_diskoid(
        roots in prop::collection::vec(element(KBAR), 1..=3),
        rho in rational(3, 4),
        u in 1i64..=5,
        extra in rational(2, 2),
    ) {
        prop_assume!(roots.iter().all(|r| !r.is_zero()) || roots.len() == 1);
        let f = Polynomial::from_roots(&FieldElement::one(tq()), &roots);
        let rho = GroupValue::rank1(rho);
        let a = &roots[0];
        let eps = epsilon_radius(a, &f, &rho).unwrap();
        // A point at distance at least eps from a root.
        let shift = eps.as_rank1().unwrap() + extra.abs();
        let x = a + &FieldElement::monomial(tq(), Rational::from_integer(u.into()), shift).unwrap();
        prop_assert!(f.eval(&x).valuation().try_cmp(&rho).unwrap().is_ge());
    }
}
