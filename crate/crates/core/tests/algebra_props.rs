use kkpoly::exactalg::BigRational;
use kkpoly::weyl::enumerate;
use kkpoly::{CartanType, Kind, LinearForm, Polynomial, RationalFunction};
use proptest::prelude::*;

const NVARS: usize = 3;

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-5i64..=5, prop::collection::vec(0u32..3, NVARS)), 0..5).prop_map(|terms| {
        Polynomial::from_terms(
            NVARS,
            terms
                .into_iter()
                .map(|(c, e)| (BigRational::from_integer(c.into()), e)),
        )
        .unwrap()
    })
}

/// Positive-root forms of C3 in simple-root coordinates.
fn root_form() -> impl Strategy<Value = LinearForm> {
    let rs = kkpoly::RootSystem::build(Kind::C, NVARS).unwrap();
    let forms: Vec<LinearForm> = rs.positive_roots().iter().map(LinearForm::from).collect();
    prop::sample::select(forms)
}

fn group_index() -> impl Strategy<Value = usize> {
    0usize..48
}

fn c3() -> Vec<kkpoly::GroupElement> {
    enumerate(CartanType::new(Kind::C, NVARS).unwrap()).collect()
}

proptest! {
    #[test]
    fn normalize_is_idempotent(p in poly(), ls in prop::collection::vec(root_form(), 0..4)) {
        let f = RationalFunction::new(p, &ls).unwrap();
        prop_assert_eq!(f.clone().normalize(), f);
    }

    #[test]
    fn division_inverts_multiplication(q in poly(), l in root_form(), sign in prop::bool::ANY) {
        let l = if sign { l.neg() } else { l };
        let p = q.mul_linear(&l);
        prop_assert_eq!(p.divide_by_linear(&l).unwrap(), Some(q));
    }

    #[test]
    fn division_detects_non_divisibility(q in poly(), l in root_form(), c in 1i64..4) {
        prop_assume!(!q.is_zero());
        let p = &q.mul_linear(&l) + &Polynomial::from_int(NVARS, c);
        prop_assert_eq!(p.divide_by_linear(&l).unwrap(), None);
    }

    #[test]
    fn action_is_a_ring_homomorphism(p in poly(), q in poly(), i in group_index()) {
        let g = &c3()[i];
        let lhs = (&p * &q).act(g).unwrap();
        let rhs = &p.act(g).unwrap() * &q.act(g).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn action_composes(p in poly(), i in group_index(), j in group_index()) {
        let all = c3();
        let (u, v) = (&all[i], &all[j]);
        let uv = u.compose(v).unwrap();
        prop_assert_eq!(p.act(&uv).unwrap(), p.act(v).unwrap().act(u).unwrap());
    }

    #[test]
    fn rational_sum_is_commutative(p in poly(), q in poly(), a in prop::collection::vec(root_form(), 0..3), b in prop::collection::vec(root_form(), 0..3)) {
        let f = RationalFunction::new(p, &a).unwrap();
        let g = RationalFunction::new(q, &b).unwrap();
        let s = f.checked_add(&g).unwrap();
        prop_assert_eq!(&s, &g.checked_add(&f).unwrap());
        prop_assert_eq!(s.checked_sub(&g).unwrap(), f);
    }
}

#[test]
fn identity_acts_trivially() {
    let id = kkpoly::GroupElement::identity(CartanType::new(Kind::C, NVARS).unwrap());
    let p = Polynomial::var(NVARS, 0).pow(3);
    assert_eq!(p.act(&id).unwrap(), p);
}
