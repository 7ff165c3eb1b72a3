use proptest::prelude::*;
use symreg::ideal::bits;
use symreg::{complex_of_ideal, ideal_of_complex, CombineMode, PrimeField, SimplicialComplex};

const N: usize = 6;

fn complex() -> impl Strategy<Value = SimplicialComplex> {
    prop::collection::vec(0u32..(1 << N), 1..6).prop_map(|f| SimplicialComplex::from_facets(N, f).unwrap())
}

fn field() -> PrimeField {
    PrimeField::default()
}

fn relabel(c: &SimplicialComplex, perm: &[usize]) -> SimplicialComplex {
    let facets = c.facets().iter().map(|&f| bits(f).fold(0, |acc, v| acc | 1 << perm[v])).collect();
    SimplicialComplex::from_facets(c.n(), facets).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn stanley_reisner_round_trip(c in complex()) {
        let ideal = ideal_of_complex(&c);
        prop_assert!(ideal.is_squarefree());
        prop_assert_eq!(complex_of_ideal(&ideal).unwrap(), c);
    }
}

proptest! {
    #[test]
    fn combine_matches_ideal_operations(a in complex(), b in complex()) {
        let (ia, ib) = (ideal_of_complex(&a), ideal_of_complex(&b));
        prop_assert_eq!(complex_of_ideal(&ia.add(&ib).unwrap()).unwrap(), a.combine(&b, CombineMode::Intersection).unwrap());
        prop_assert_eq!(complex_of_ideal(&ia.intersect(&ib).unwrap()).unwrap(), a.combine(&b, CombineMode::Union).unwrap());
    }

    #[test]
    fn homology_is_label_invariant(c in complex(), perm in Just((0..N).collect::<Vec<_>>()).prop_shuffle()) {
        prop_assert_eq!(c.reduced_homology(field()), relabel(&c, &perm).reduced_homology(field()));
    }

    #[test]
    fn euler_characteristic(c in complex()) {
        let h = c.reduced_homology(field());
        // Σ (-1)^(|F|-1) over all faces, the empty face counting -1
        let by_faces: i64 = c.faces().iter().map(|f| if f.count_ones() % 2 == 1 { 1 } else { -1 }).sum();
        prop_assert_eq!(h.euler_characteristic(), by_faces);
    }

    #[test]
    fn boundary_squares_to_zero(c in complex(), p in prop::sample::select(vec![2u32, 3, 32003])) {
        let f = PrimeField::new(p).unwrap();
        let top = c.dim().unwrap_or(-1) + 1;
        for k in 2..=top as usize {
            let product = c.boundary_matrix(k, f).mul(&c.boundary_matrix(k - 1, f), f);
            prop_assert!(product.is_zero());
        }
    }

    #[test]
    fn cones_are_acyclic(c in complex(), apex in 1usize..=N) {
        let bit = 1u32 << (apex - 1);
        let cone = SimplicialComplex::from_facets(N, c.facets().iter().map(|&f| f | bit).collect()).unwrap();
        prop_assert!(cone.is_cone_over(apex));
        prop_assert!(cone.reduced_homology(field()).is_acyclic());
    }

    #[test]
    fn links_are_subcomplexes(c in complex()) {
        for face in c.faces() {
            let link = c.link(face).unwrap();
            for g in link.faces() {
                prop_assert!(g & face == 0);
                prop_assert!(c.contains_face(g | face));
            }
        }
    }
}
