//! Symbolic powers of squarefree monomial ideals and the closed forms for
//! edge ideals.
//!
//! [`symbolic_power`] intersects powers of the minimal primes and is the
//! reference construction. [`differential_member`] tests membership through
//! coefficient-free derivatives; [`expansion`] and [`fourth_closure`] are
//! the closed-form right-hand sides checked against the reference.

use crate::error::{Error, Result};
use crate::graph::{minimal_transversals, SimpleGraph};
use crate::ideal::{IdealKind, Monomial, MonomialIdeal, VarSet};

/// Minimal primes of a squarefree ideal, as variable sets.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<VarSet>> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if !ideal.is_proper_nonzero() {
        return Err(Error::DegenerateIdeal);
    }
    let supports: Vec<VarSet> = ideal.generators().iter().map(Monomial::support).collect();
    Ok(minimal_transversals(&supports))
}

/// `I^(s) = ⋂ P^s` over the minimal primes `P` of `I`.
pub fn symbolic_power(ideal: &MonomialIdeal, s: u32) -> Result<MonomialIdeal> {
    if s == 0 {
        return Err(Error::ZeroPower);
    }
    let primes = minimal_primes(ideal)?;
    let n = ideal.n();
    let powers = primes
        .iter()
        .map(|&p| MonomialIdeal::variables(n, p).power(s))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::intersect_all(n, &powers)
}

/// `f ∈ I^[s]`: every coefficient-free derivative of `f` of order `s - 1`
/// lies in `I`.
///
/// Derivatives by `x^a` not dividing `f` vanish and pass trivially, so only
/// `a ≤ f` with `|a| = s - 1` are enumerated. When `deg f < s - 1` no such
/// `a` exists and `f` is rejected: it cannot lie in `P^s` for any prime.
pub fn differential_member(ideal: &MonomialIdeal, f: &Monomial, s: u32) -> Result<bool> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if f.n() != ideal.n() {
        return Err(Error::DimensionMismatch { expected: ideal.n(), actual: f.n() });
    }
    if s == 0 {
        return Err(Error::ZeroPower);
    }
    match ideal.kind() {
        IdealKind::Unit => return Ok(true),
        IdealKind::Zero => return Ok(false),
        IdealKind::Proper => {}
    }
    let order = s - 1;
    if f.degree() < order {
        return Ok(false);
    }
    let local = ideal.restrict(f.support());
    let mut a = vec![0u32; f.n()];
    Ok(all_derivatives_in(&local, f, &mut a, 0, order))
}

fn all_derivatives_in(ideal: &MonomialIdeal, f: &Monomial, a: &mut Vec<u32>, pos: usize, left: u32) -> bool {
    if left == 0 {
        let xa = Monomial::from_exponents(a.iter().copied());
        return match f.star_derivative(&xa) {
            Some(d) => ideal.contains(&d),
            None => true,
        };
    }
    if pos == a.len() {
        return true;
    }
    let cap = (f.exps()[pos] as u32).min(left);
    for e in (0..=cap).rev() {
        a[pos] = e;
        if !all_derivatives_in(ideal, f, a, pos + 1, left - e) {
            a[pos] = 0;
            return false;
        }
    }
    a[pos] = 0;
    true
}

/// `I^2 + J1` for `s = 2`, `I^3 + I·J1 + J2` for `s = 3`.
pub fn expansion(graph: &SimpleGraph, s: u32) -> Result<MonomialIdeal> {
    let i = graph.edge_ideal();
    let (j1, j2, _) = graph.aux_ideals();
    match s {
        2 => i.power(2)?.add(&j1),
        3 => i.power(3)?.add(&i.multiply(&j1)?)?.add(&j2),
        other => Err(Error::UnsupportedOrder(other)),
    }
}

/// `I^3 + J1·J1 + J3`, which equals `I^(4) + I^3`.
pub fn fourth_closure(graph: &SimpleGraph) -> Result<MonomialIdeal> {
    let i = graph.edge_ideal();
    let (j1, _, j3) = graph.aux_ideals();
    i.power(3)?.add(&j1.multiply(&j1)?)?.add(&j3)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> SimpleGraph {
        let edges: Vec<_> = (1..=n).map(|i| (i, i % n + 1)).collect();
        SimpleGraph::new(n, &edges).unwrap()
    }

    fn complete(n: usize) -> SimpleGraph {
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                edges.push((u, v));
            }
        }
        SimpleGraph::new(n, &edges).unwrap()
    }

    fn m(text: &str, n: usize) -> Monomial {
        Monomial::parse(text, n).unwrap()
    }

    fn ideal(n: usize, gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::from_generators(n, gens.iter().map(|g| m(g, n))).unwrap()
    }

    #[test]
    fn symbolic_power_examples() {
        let c3 = cycle(3).edge_ideal();
        assert_eq!(
            symbolic_power(&c3, 2).unwrap(),
            ideal(3, &["x1^2*x2^2", "x1^2*x3^2", "x2^2*x3^2", "x1*x2*x3"])
        );
        let c4 = cycle(4).edge_ideal();
        assert_eq!(symbolic_power(&c4, 2).unwrap(), c4.power(2).unwrap());
        assert_eq!(symbolic_power(&c3, 1).unwrap(), c3);
    }

    #[test]
    fn symbolic_power_errors() {
        assert_eq!(symbolic_power(&ideal(2, &["x1^2"]), 2), Err(Error::NotSquarefree));
        assert_eq!(symbolic_power(&MonomialIdeal::zero(2), 2), Err(Error::DegenerateIdeal));
        assert_eq!(symbolic_power(&MonomialIdeal::unit(2), 2), Err(Error::DegenerateIdeal));
        assert_eq!(symbolic_power(&ideal(2, &["x1*x2"]), 0), Err(Error::ZeroPower));
    }

    #[test]
    fn differential_examples() {
        let c3 = cycle(3).edge_ideal();
        let f = m("x1*x2*x3", 3);
        assert!(differential_member(&c3, &f, 2).unwrap());
        assert!(!differential_member(&c3, &f, 3).unwrap());
        assert!(differential_member(&c3, &m("x1*x3^2", 3), 1).unwrap());
        assert!(!differential_member(&c3, &Monomial::one(3), 3).unwrap());
        assert!(differential_member(&ideal(2, &["x1^2"]), &f, 1).is_err());
    }

    #[test]
    fn restriction_to_support() {
        // I(C3) in four variables, f = x1x2x3, s = 2
        let i = ideal(4, &["x1*x2", "x1*x3", "x2*x3"]);
        let f = m("x1*x2*x3", 4);
        let v = f.support();
        assert!(symbolic_power(&i, 2).unwrap().contains(&f));
        assert!(symbolic_power(&i.restrict(v), 2).unwrap().contains(&f));
    }

    #[test]
    fn expansion_examples() {
        let c3 = cycle(3);
        let i = c3.edge_ideal();
        assert_eq!(expansion(&c3, 2).unwrap(), i.power(2).unwrap().add(&ideal(3, &["x1*x2*x3"])).unwrap());
        let c5 = cycle(5);
        assert_eq!(
            expansion(&c5, 3).unwrap(),
            c5.edge_ideal().power(3).unwrap().add(&ideal(5, &["x1*x2*x3*x4*x5"])).unwrap()
        );
        let c6 = cycle(6);
        assert_eq!(expansion(&c6, 3).unwrap(), c6.edge_ideal().power(3).unwrap());
        assert_eq!(expansion(&c6, 4), Err(Error::UnsupportedOrder(4)));
    }

    #[test]
    fn fourth_closure_examples() {
        let c3 = cycle(3);
        let i = c3.edge_ideal();
        let expected = i.power(3).unwrap().add(&ideal(3, &["x1^2*x2^2*x3^2"])).unwrap();
        assert_eq!(fourth_closure(&c3).unwrap(), expected);
        assert_eq!(
            fourth_closure(&c3).unwrap(),
            symbolic_power(&i, 4).unwrap().add(&i.power(3).unwrap()).unwrap()
        );
        let k5 = fourth_closure(&complete(5)).unwrap();
        assert!(k5.generators().contains(&m("x1*x2*x3*x4*x5", 5)));
        let c4 = cycle(4);
        assert_eq!(fourth_closure(&c4).unwrap(), c4.edge_ideal().power(3).unwrap());
    }
}
