use proptest::prelude::*;
use symreg::{minimalize, Monomial, MonomialIdeal};

const N: usize = 4;

fn monomial(max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, N).prop_map(Monomial::from_exponents)
}

fn ideal() -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(monomial(3), 1..6)
        .prop_filter("proper", |g| g.iter().all(|m| !m.is_one()))
        .prop_map(|g| MonomialIdeal::from_generators(N, g).unwrap())
}

/// Every monomial with exponents at most `bound` in each variable.
fn box_monomials(bound: u32) -> Vec<Monomial> {
    let mut out = vec![Vec::new()];
    for _ in 0..N {
        out = out
            .into_iter()
            .flat_map(|p: Vec<u32>| (0..=bound).map(move |e| [p.clone(), vec![e]].concat()))
            .collect();
    }
    out.into_iter().map(Monomial::from_exponents).collect()
}

proptest! {
    #[test]
    fn minimalize_is_idempotent(gens in prop::collection::vec(monomial(3), 0..8)) {
        let once = minimalize(N, gens).unwrap();
        let twice = minimalize(N, once.generators().to_vec()).unwrap();
        prop_assert_eq!(&once, &twice);
        for (i, a) in once.generators().iter().enumerate() {
            for (j, b) in once.generators().iter().enumerate() {
                prop_assert!(i == j || !a.divides(b));
            }
        }
    }

    #[test]
    fn operations_commute(i in ideal(), j in ideal()) {
        prop_assert_eq!(i.add(&j).unwrap(), j.add(&i).unwrap());
        prop_assert_eq!(i.multiply(&j).unwrap(), j.multiply(&i).unwrap());
        prop_assert_eq!(i.intersect(&j).unwrap(), j.intersect(&i).unwrap());
    }

    #[test]
    fn membership_matches_operations(i in ideal(), j in ideal()) {
        let sum = i.add(&j).unwrap();
        let meet = i.intersect(&j).unwrap();
        let product = i.multiply(&j).unwrap();
        for f in box_monomials(4) {
            prop_assert_eq!(sum.contains(&f), i.contains(&f) || j.contains(&f));
            prop_assert_eq!(meet.contains(&f), i.contains(&f) && j.contains(&f));
            let brute = i.generators().iter().any(|g| j.generators().iter().any(|h| g.mul(h).divides(&f)));
            prop_assert_eq!(product.contains(&f), brute);
        }
    }

    #[test]
    fn colon_composes(i in ideal(), a in monomial(2), b in monomial(2)) {
        let stepwise = i.colon(&a).unwrap().colon(&b).unwrap();
        prop_assert_eq!(stepwise, i.colon(&a.mul(&b)).unwrap());
    }

    #[test]
    fn colon_membership(i in ideal(), a in monomial(2)) {
        let c = i.colon(&a).unwrap();
        for f in box_monomials(3) {
            prop_assert_eq!(c.contains(&f), i.contains(&f.mul(&a)));
        }
    }

    #[test]
    fn radical_colon_is_radical_of_colon(i in ideal(), a in monomial(2)) {
        prop_assert_eq!(i.radical_colon(&a).unwrap(), i.colon(&a).unwrap().radical());
    }

    #[test]
    fn power_is_repeated_product(i in ideal(), s in 1u32..4) {
        let mut acc = i.clone();
        for _ in 1..s {
            acc = acc.multiply(&i).unwrap();
        }
        prop_assert_eq!(i.power(s).unwrap(), acc);
    }

    #[test]
    fn json_round_trip(i in ideal()) {
        prop_assert_eq!(MonomialIdeal::from_json(&i.to_json(), N).unwrap(), i);
    }
}
