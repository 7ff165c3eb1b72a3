//! Castelnuovo-Mumford regularity of `S/I` for monomial ideals, computed two
//! independent ways:
//!
//! * [`reg_takayama`] maximizes `|a| + i` over exponents `a ∈ Γ(I)` and faces
//!   `F` of the degree complex `Δ_a(I)` disjoint from `supp a` with
//!   `H̃_{i-1}(lk F) ≠ 0`, returning every maximizing triple as a
//!   [`RegularityCertificate`].
//! * [`betti_oracle`] computes graded Betti numbers from the Koszul complex
//!   of `S/I`, one multidegree at a time, and reads off
//!   `reg = max{j - i : β_{i,j} ≠ 0}`.
//!
//! Both share nothing beyond the generator list and the rank routine.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::complex::{reduced_homology_of_faces, FaceSet, SimplicialComplex};
use crate::error::{Error, Result};
use crate::ideal::{bits, full_set, set_to_vertices, vertices_to_set, Exponent, Monomial, MonomialIdeal, VarSet};
use crate::linalg::{Matrix, PrimeField};

fn require_proper(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_proper_nonzero() {
        Ok(())
    } else {
        Err(Error::DegenerateIdeal)
    }
}

/// For each generator `x^b`, the set `{i : a_i < b_i}`. A face `F ⊇ G_a`
/// belongs to `Δ_a` exactly when it contains none of these sets.
fn generator_masks(ideal: &MonomialIdeal, a: &[i32]) -> Vec<VarSet> {
    ideal
        .generators()
        .iter()
        .map(|g| {
            g.exps()
                .iter()
                .zip(a)
                .enumerate()
                .filter(|(_, (&b, &ai))| ai < b as i32)
                .fold(0, |acc, (i, _)| acc | 1 << i)
        })
        .collect()
}

fn minimal_sets(mut sets: Vec<VarSet>) -> Vec<VarSet> {
    sets.sort_unstable_by_key(|s| (s.count_ones(), *s));
    sets.dedup();
    let mut kept: Vec<VarSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| k & s == k) {
            kept.push(s);
        }
    }
    kept
}

/// The degree complex `Δ_a(I)` for any `a ∈ Z^n`.
pub fn degree_complex(ideal: &MonomialIdeal, a: &Exponent) -> Result<SimplicialComplex> {
    let n = ideal.n();
    if a.len() != n {
        return Err(Error::DimensionMismatch { expected: n, actual: a.len() });
    }
    let negative = a.negative_set();
    let masks = generator_masks(ideal, a.entries());
    let faces = FaceSet::avoiding_supersets(n, &masks);
    let mut kept = FaceSet::empty(n);
    for f in faces.iter().filter(|&f| f & negative == negative) {
        kept.insert(f & !negative);
    }
    Ok(SimplicialComplex::from_faceset(&kept))
}

/// Odometer over the box `0 ≤ a_j < ρ_j`, with `a_j = 0` where `ρ_j = 0`.
#[derive(Clone, Debug)]
pub struct GammaExponents {
    bounds: Vec<u32>,
    next: Option<Vec<u32>>,
}

impl Iterator for GammaExponents {
    type Item = Exponent;

    fn next(&mut self) -> Option<Exponent> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut advanced = false;
        for j in 0..succ.len() {
            if succ[j] + 1 < self.bounds[j] {
                succ[j] += 1;
                advanced = true;
                break;
            }
            succ[j] = 0;
        }
        if advanced {
            self.next = Some(succ);
        }
        Some(Exponent::new(current.into_iter().map(|e| e as i32).collect()))
    }
}

/// `Γ(I)`: exponents outside of which every degree complex is a cone over a
/// vertex in `supp a`.
pub fn gamma_exponents(ideal: &MonomialIdeal) -> Result<GammaExponents> {
    require_proper(ideal)?;
    let bounds = ideal.rho().into_iter().map(|r| r.max(1)).collect();
    Ok(GammaExponents { bounds, next: Some(vec![0; ideal.n()]) })
}

pub fn gamma_size(ideal: &MonomialIdeal) -> usize {
    ideal.rho().iter().map(|&r| r.max(1) as usize).product()
}

/// An extremal triple `(a, i, F)` with `H̃_{i-1}(lk_{Δ_a} F) ≠ 0`,
/// `F ∩ supp a = ∅` and `value = |a| + i = reg(S/I)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityCertificate {
    pub a: Exponent,
    pub i: u32,
    /// 1-based vertices of `F`.
    pub face: Vec<usize>,
    pub value: u32,
    pub field_char: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TakayamaResult {
    /// `reg(S/I)`.
    pub reg_quotient: u32,
    pub certificates: Vec<RegularityCertificate>,
}

impl TakayamaResult {
    /// `reg(I) = reg(S/I) + 1`.
    pub fn reg_ideal(&self) -> u32 {
        self.reg_quotient + 1
    }
}

struct Candidate {
    value: u32,
    a: Vec<u32>,
    i: u32,
    face: VarSet,
}

/// `reg(S/I)` over `field`, with every maximizing certificate.
pub fn reg_takayama(ideal: &MonomialIdeal, field: PrimeField) -> Result<TakayamaResult> {
    require_proper(ideal)?;
    let n = ideal.n();
    let full = full_set(n);
    let mut exponents: Vec<Vec<u32>> = gamma_exponents(ideal)?
        .map(|e| e.entries().iter().map(|&v| v as u32).collect())
        .collect();
    // largest |a| first so the bound below prunes early
    exponents.sort_by_key(|a| std::cmp::Reverse(a.iter().sum::<u32>()));

    let mut best: Option<u32> = None;
    let mut found: Vec<Candidate> = Vec::new();
    let mut a_signed = vec![0i32; n];
    for a in &exponents {
        let weight: u32 = a.iter().sum();
        if let Some(b) = best {
            if weight + (n as u32) < b {
                break;
            }
        }
        for (s, &v) in a_signed.iter_mut().zip(a) {
            *s = v as i32;
        }
        let masks = generator_masks(ideal, &a_signed);
        if masks.iter().any(|&m| m == 0) {
            // x^a ∈ I: void complex
            continue;
        }
        let support = a.iter().enumerate().filter(|(_, &v)| v > 0).fold(0, |acc, (i, _)| acc | 1 << i);
        let minimal_nonfaces = minimal_sets(masks);
        let apex = full & !minimal_nonfaces.iter().fold(0, |acc, &m| acc | m);
        if apex & support != 0 {
            continue;
        }
        let faces = FaceSet::avoiding_supersets(n, &minimal_nonfaces);
        let top_face = faces.iter().map(|f| f.count_ones()).max().unwrap_or(0);
        if let Some(b) = best {
            if weight + top_face < b {
                continue;
            }
        }
        for face in faces.iter() {
            if face & support != 0 || face & apex != apex {
                continue;
            }
            let outside = full & !face;
            let mut link = Vec::new();
            let mut g = outside;
            loop {
                if faces.contains(g | face) {
                    link.push(g);
                }
                if g == 0 {
                    break;
                }
                g = (g - 1) & outside;
            }
            let link_top = link.iter().map(|g| g.count_ones()).max().unwrap_or(0);
            if let Some(b) = best {
                if weight + link_top < b {
                    continue;
                }
            }
            let dims = reduced_homology_of_faces(link, field);
            for (k, &d) in dims.iter().enumerate() {
                if d == 0 {
                    continue;
                }
                // dims[k] is H̃_{k-1}, so i = k
                let value = weight + k as u32;
                match best {
                    Some(b) if value < b => continue,
                    Some(b) if value == b => {}
                    _ => {
                        best = Some(value);
                        found.clear();
                    }
                }
                found.push(Candidate { value, a: a.clone(), i: k as u32, face });
            }
        }
    }
    let reg_quotient = best.unwrap_or(0);
    let mut certificates: Vec<RegularityCertificate> = found
        .into_iter()
        .map(|c| RegularityCertificate {
            a: Exponent::new(c.a.iter().map(|&v| v as i32).collect()),
            i: c.i,
            face: set_to_vertices(c.face),
            value: c.value,
            field_char: field.characteristic(),
        })
        .collect();
    certificates.sort_by(|x, y| {
        (x.a.total_degree(), &x.a, x.i, &x.face).cmp(&(y.a.total_degree(), &y.a, y.i, &y.face))
    });
    Ok(TakayamaResult { reg_quotient, certificates })
}

/// Re-checks a certificate's face membership, support condition, homology
/// and stated value. Maximality is not checked here.
pub fn verify_certificate(ideal: &MonomialIdeal, cert: &RegularityCertificate, field: PrimeField) -> Result<()> {
    let invalid = |msg: &str| Err(Error::InvalidCertificate(msg.to_string()));
    if cert.field_char != field.characteristic() {
        return invalid("field characteristic differs");
    }
    if !cert.a.is_nonnegative() {
        return invalid("exponent has negative entries");
    }
    let face = vertices_to_set(ideal.n(), &cert.face)?;
    if face & cert.a.support() != 0 {
        return invalid("face meets supp a");
    }
    if cert.a.total_degree() + cert.i as i64 != cert.value as i64 {
        return invalid("value differs from |a| + i");
    }
    let delta = degree_complex(ideal, &cert.a)?;
    let Ok(link) = delta.link(face) else {
        return invalid("face not in the degree complex");
    };
    if link.reduced_homology(field).get(cert.i as i32 - 1) == 0 {
        return invalid("reduced homology vanishes");
    }
    Ok(())
}

/// Variables `x_t ∈ sqrt(I : x^a)` with `t ∉ supp a` (1-based).
pub fn red0_variables(ideal: &MonomialIdeal, a: &Exponent) -> Result<Vec<usize>> {
    let root = ideal.radical_colon(&a.to_monomial()?)?;
    let support = a.support();
    Ok((1..=ideal.n())
        .filter(|&t| support >> (t - 1) & 1 == 0 && root.contains(&Monomial::var(ideal.n(), t)))
        .collect())
}

/// For every variable `x_t` in `sqrt(I : x^a)` outside `supp a`, checks
/// `reg(I) = reg(I + (x_t))`.
pub fn red0_check(ideal: &MonomialIdeal, cert: &RegularityCertificate, field: PrimeField) -> Result<bool> {
    verify_certificate(ideal, cert, field)?;
    let reg = reg_takayama(ideal, field)?.reg_quotient;
    if cert.value != reg {
        return Err(Error::InvalidCertificate(format!("value {} but reg(S/I) = {reg}", cert.value)));
    }
    for t in red0_variables(ideal, &cert.a)? {
        let bigger = ideal.add(&MonomialIdeal::variables(ideal.n(), 1 << (t - 1)))?;
        if reg_takayama(&bigger, field)?.reg_quotient != reg {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `max{|a| + reg K[Δ_a(I)] : a ∈ Γ(I)}`, an upper bound for `reg(S/I)`.
pub fn upper_bound_scan(ideal: &MonomialIdeal, field: PrimeField) -> Result<u32> {
    let mut best = 0;
    for a in gamma_exponents(ideal)? {
        let delta = degree_complex(ideal, &a)?;
        if let Some(r) = delta.regularity(field) {
            best = best.max(a.total_degree() as u32 + r);
        }
    }
    Ok(best)
}

/// Graded Betti numbers `β_{i,j} = dim Tor_i(S/I, K)_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    #[serde(with = "entry_list")]
    pub entries: BTreeMap<(u32, u32), usize>,
    pub field_char: u32,
    pub max_degree: u32,
    /// Every multidegree that can carry a Betti number was examined.
    pub complete: bool,
}

impl BettiTable {
    pub fn get(&self, i: u32, j: u32) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `max{j - i : β_{i,j} ≠ 0}`.
    pub fn regularity(&self) -> u32 {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    pub fn projective_dimension(&self) -> u32 {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }
}

mod entry_list {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Entry {
        i: u32,
        j: u32,
        value: usize,
    }

    pub fn serialize<S: Serializer>(map: &BTreeMap<(u32, u32), usize>, s: S) -> Result<S::Ok, S::Error> {
        let list: Vec<Entry> = map.iter().map(|(&(i, j), &value)| Entry { i, j, value }).collect();
        list.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<(u32, u32), usize>, D::Error> {
        let list: Vec<Entry> = Vec::deserialize(d)?;
        Ok(list.into_iter().map(|e| ((e.i, e.j), e.value)).collect())
    }
}

/// Membership table for `x^c ∈ I` over the box `0 ≤ c_j ≤ ρ_j`.
struct BoxTable {
    dims: Vec<usize>,
    strides: Vec<usize>,
    member: Vec<bool>,
}

impl BoxTable {
    fn new(ideal: &MonomialIdeal) -> Self {
        let dims: Vec<usize> = ideal.rho().iter().map(|&r| r as usize + 1).collect();
        let mut strides = vec![1usize; dims.len()];
        for j in 1..dims.len() {
            strides[j] = strides[j - 1] * dims[j - 1];
        }
        let size: usize = dims.iter().product();
        let mut member = vec![false; size];
        for g in ideal.generators() {
            let idx: usize = g.exps().iter().zip(&strides).map(|(&e, &s)| e as usize * s).sum();
            member[idx] = true;
        }
        // prefix-or along each axis turns generator marks into the ideal
        for (j, (&d, &stride)) in dims.iter().zip(&strides).enumerate() {
            let _ = j;
            for idx in 0..size {
                if (idx / stride) % d > 0 && member[idx - stride] {
                    member[idx] = true;
                }
            }
        }
        BoxTable { dims, strides, member }
    }

    fn coords(&self, mut idx: usize) -> Vec<usize> {
        self.dims
            .iter()
            .map(|&d| {
                let c = idx % d;
                idx /= d;
                c
            })
            .collect()
    }
}

/// Betti numbers of `S/I` from the Koszul complex, for all multidegrees of
/// total degree at most `max_degree`.
///
/// In multidegree `b` the Koszul complex of `S/I` has a basis vector
/// `e_σ ⊗ x^{b-σ}` for each `σ ⊆ supp b` with `x^{b-σ} ∉ I`, and its
/// differential drops one index of `σ` at a time.
pub fn betti_oracle(ideal: &MonomialIdeal, field: PrimeField, max_degree: u32) -> Result<BettiTable> {
    require_proper(ideal)?;
    let table = BoxTable::new(ideal);
    let n = ideal.n();
    let box_top: u32 = ideal.rho().iter().sum();
    let mut entries: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    entries.insert((0, 0), 1);
    let mut chains: Vec<VarSet> = Vec::with_capacity(1 << n);
    for idx in 1..table.member.len() {
        if !table.member[idx] {
            // x^b ∉ I: the strand is a full Koszul complex, exact for b ≠ 0
            continue;
        }
        let b = table.coords(idx);
        let degree: usize = b.iter().sum();
        if degree as u32 > max_degree {
            continue;
        }
        let support = b.iter().enumerate().filter(|(_, &c)| c > 0).fold(0, |acc, (i, _)| acc | 1 << i);
        chains.clear();
        let mut sigma = support;
        loop {
            let shifted: usize = idx - bits(sigma).map(|k| table.strides[k]).sum::<usize>();
            if !table.member[shifted] {
                chains.push(sigma);
            }
            if sigma == 0 {
                break;
            }
            sigma = (sigma - 1) & support;
        }
        if chains.is_empty() {
            continue;
        }
        for (i, beta) in koszul_homology(&mut chains, field).into_iter().enumerate() {
            if beta > 0 {
                *entries.entry((i as u32, degree as u32)).or_insert(0) += beta;
            }
        }
    }
    let complete = max_degree >= box_top;
    if !complete && entries.keys().any(|&(_, j)| j == max_degree) {
        return Err(Error::Truncated { max_degree });
    }
    Ok(BettiTable { entries, field_char: field.characteristic(), max_degree, complete })
}

/// Homology of the Koszul strand spanned by the up-closed family `chains`;
/// index `i` is homological degree `|σ| = i`.
fn koszul_homology(chains: &mut [VarSet], field: PrimeField) -> Vec<usize> {
    chains.sort_unstable_by_key(|&s| (s.count_ones(), s));
    let top = chains.last().map(|s| s.count_ones() as usize).unwrap_or(0);
    let mut groups: Vec<&[VarSet]> = Vec::with_capacity(top + 1);
    let mut start = 0;
    for k in 0..=top {
        let len = chains[start..].iter().take_while(|s| s.count_ones() as usize == k).count();
        groups.push(&chains[start..start + len]);
        start += len;
    }
    let mut ranks = vec![0usize; top + 2];
    let minus_one = field.reduce(-1);
    for k in 1..=top {
        let (upper, lower) = (groups[k], groups[k - 1]);
        if upper.is_empty() || lower.is_empty() {
            continue;
        }
        let mut m = Matrix::zeros(upper.len(), lower.len());
        for (r, &sigma) in upper.iter().enumerate() {
            for (pos, v) in bits(sigma).enumerate() {
                if let Ok(c) = lower.binary_search(&(sigma & !(1 << v))) {
                    m.set(r, c, if pos % 2 == 0 { 1 } else { minus_one });
                }
            }
        }
        ranks[k] = m.rank(field);
    }
    (0..=top).map(|k| groups[k].len() - ranks[k] - ranks[k + 1]).collect()
}

/// Betti table with the default degree bound `n + 2·(max generator degree)`,
/// doubled until the table is no longer truncated.
pub fn betti_table(ideal: &MonomialIdeal, field: PrimeField) -> Result<BettiTable> {
    let mut max_degree = ideal.n() as u32 + 2 * ideal.max_generator_degree();
    loop {
        match betti_oracle(ideal, field, max_degree) {
            Err(Error::Truncated { .. }) => max_degree *= 2,
            other => return other,
        }
    }
}

/// `reg(S/I)` from the Betti oracle.
pub fn reg_betti(ideal: &MonomialIdeal, field: PrimeField) -> Result<u32> {
    Ok(betti_table(ideal, field)?.regularity())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{complex_of_ideal, ideal_of_complex};

    fn m(text: &str, n: usize) -> Monomial {
        Monomial::parse(text, n).unwrap()
    }

    fn ideal(n: usize, gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::from_generators(n, gens.iter().map(|g| m(g, n))).unwrap()
    }

    fn f() -> PrimeField {
        PrimeField::default()
    }

    fn star() -> MonomialIdeal {
        ideal(5, &["x1*x2", "x1*x3", "x1*x4", "x1*x5"])
    }

    #[test]
    fn degree_complex_examples() {
        let hollow = ideal(3, &["x1*x2*x3"]);
        assert_eq!(degree_complex(&hollow, &Exponent::zeros(3)).unwrap(), complex_of_ideal(&hollow).unwrap());
        let i = ideal(3, &["x1*x2", "x2*x3"]);
        assert!(degree_complex(&i, &Exponent::new(vec![1, 1, 0])).unwrap().is_void());
        // (x1·(x2,..,x5))^2 at a = x2x3x4x5: full simplex on {2,3,4,5}
        let sq = star().power(2).unwrap();
        let d = degree_complex(&sq, &Exponent::new(vec![0, 1, 1, 1, 1])).unwrap();
        assert_eq!(d, SimplicialComplex::simplex(5, 0b11110));
        assert_eq!(d.regularity(f()), Some(0));
        assert!(degree_complex(&i, &Exponent::zeros(2)).is_err());
    }

    #[test]
    fn degree_complex_matches_radical_colon() {
        let i = ideal(3, &["x1^2*x2", "x2^3", "x1*x3^2"]);
        for a in gamma_exponents(&i).unwrap() {
            let d = degree_complex(&i, &a).unwrap();
            let root = i.radical_colon(&a.to_monomial().unwrap()).unwrap();
            assert_eq!(ideal_of_complex(&d), root, "a = {a}");
        }
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma_exponents(&ideal(2, &["x1*x2"])).unwrap().count(), 1);
        let c3 = ideal(3, &["x1*x2", "x1*x3", "x2*x3"]).power(2).unwrap();
        assert_eq!(gamma_exponents(&c3).unwrap().count(), 8);
        let absent = ideal(4, &["x1^2*x2", "x2*x3^3"]);
        assert!(gamma_exponents(&absent).unwrap().all(|a| a.entries()[3] == 0));
        assert_eq!(gamma_exponents(&absent).unwrap().count(), gamma_size(&absent));
        assert!(gamma_exponents(&MonomialIdeal::zero(2)).is_err());
        assert!(gamma_exponents(&MonomialIdeal::unit(2)).is_err());
    }

    #[test]
    fn takayama_examples() {
        let edge = ideal(2, &["x1*x2"]);
        let r = reg_takayama(&edge, f()).unwrap();
        assert_eq!(r.reg_quotient, 1);
        assert_eq!(r.reg_ideal(), 2);
        for s in 1..=3 {
            let r = reg_takayama(&star().power(s).unwrap(), f()).unwrap();
            assert_eq!(r.reg_quotient, 2 * s - 1, "s = {s}");
        }
        let c5 = ideal(5, &["x1*x2", "x2*x3", "x3*x4", "x4*x5", "x1*x5"]);
        assert_eq!(reg_takayama(&c5, f()).unwrap().reg_quotient, 2);
        assert!(reg_takayama(&MonomialIdeal::zero(3), f()).is_err());
    }

    #[test]
    fn certificates_verify() {
        let sq = ideal(3, &["x1*x2", "x1*x3", "x2*x3"]).power(2).unwrap();
        let r = reg_takayama(&sq, f()).unwrap();
        assert!(!r.certificates.is_empty());
        for c in &r.certificates {
            verify_certificate(&sq, c, f()).unwrap();
            assert_eq!(c.value, r.reg_quotient);
        }
        let mut bad = r.certificates[0].clone();
        bad.value += 1;
        assert!(verify_certificate(&sq, &bad, f()).is_err());
    }

    #[test]
    fn betti_examples() {
        let edge = ideal(2, &["x1*x2"]);
        let t = betti_oracle(&edge, f(), 10).unwrap();
        assert_eq!(t.get(0, 0), 1);
        assert_eq!(t.get(1, 2), 1);
        assert_eq!(t.entries.len(), 2);
        assert_eq!(t.regularity(), 1);
        let p3 = ideal(3, &["x1*x2", "x2*x3"]);
        let t = betti_oracle(&p3, f(), 10).unwrap();
        assert_eq!(t.get(1, 2), 2);
        assert_eq!(t.get(2, 3), 1);
        assert_eq!(t.entries.len(), 3);
        assert_eq!(t.regularity(), 1);
    }

    #[test]
    fn betti_truncation() {
        // (x1^3 x2^3): β_{1,6} sits exactly on the boundary of max_degree 6
        let i = ideal(2, &["x1^3*x2^3", "x1^4"]);
        assert_eq!(betti_oracle(&i, f(), 6), Err(Error::Truncated { max_degree: 6 }));
        let t = betti_table(&i, f()).unwrap();
        assert!(t.complete);
        assert_eq!(t.regularity(), reg_takayama(&i, f()).unwrap().reg_quotient);
    }

    #[test]
    fn upper_bound_examples() {
        let edge = ideal(2, &["x1*x2"]);
        assert_eq!(upper_bound_scan(&edge, f()).unwrap(), 1);
        let sq = star().power(2).unwrap();
        let bound = upper_bound_scan(&sq, f()).unwrap();
        assert!(bound >= 4);
        assert!(bound > reg_takayama(&sq, f()).unwrap().reg_quotient);
    }

    #[test]
    fn red0_examples() {
        let sq = ideal(3, &["x1*x2", "x1*x3", "x2*x3"]).power(2).unwrap();
        let r = reg_takayama(&sq, f()).unwrap();
        for c in &r.certificates {
            assert!(red0_check(&sq, c, f()).unwrap());
        }
        // no variable in sqrt(I : x^a) outside supp a: vacuous
        let edge = ideal(2, &["x1*x2"]);
        let c = &reg_takayama(&edge, f()).unwrap().certificates[0];
        assert!(red0_variables(&edge, &c.a).unwrap().is_empty());
        assert!(red0_check(&edge, c, f()).unwrap());
    }
}
