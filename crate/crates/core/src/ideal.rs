//! Monomials, exponent vectors and monomial ideals in `n` variables.
//!
//! Variables are 1-based in every textual form (`x1^2*x3`), 0-based in the
//! exponent slices. Vertex/variable sets are packed into a [`VarSet`] bitmask,
//! bit `i - 1` standing for `x_i`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::MAX_VARS;

/// Bitmask over variables `x_1..x_n`; bit `i - 1` is `x_i`.
pub type VarSet = u32;

/// Iterate the 0-based indices set in `set`.
pub fn bits(set: VarSet) -> impl Iterator<Item = usize> {
    let mut rest = set;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        }
    })
}

/// 1-based vertex list of a bitmask.
pub fn set_to_vertices(set: VarSet) -> Vec<usize> {
    bits(set).map(|i| i + 1).collect()
}

/// Bitmask of a 1-based vertex list.
pub fn vertices_to_set(n: usize, vertices: &[usize]) -> Result<VarSet> {
    let mut set = 0;
    for &v in vertices {
        if v == 0 || v > n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        set |= 1 << (v - 1);
    }
    Ok(set)
}

pub fn full_set(n: usize) -> VarSet {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

pub(crate) fn check_ambient(n: usize) -> Result<()> {
    if n > MAX_VARS {
        Err(Error::TooManyVariables(n))
    } else {
        Ok(())
    }
}

/// An integer exponent vector, negative entries allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Exponent(Vec<i32>);

impl Exponent {
    pub fn new(entries: Vec<i32>) -> Self {
        Exponent(entries)
    }

    pub fn zeros(n: usize) -> Self {
        Exponent(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i32] {
        &self.0
    }

    /// `|a|`, the sum of the entries.
    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    /// `supp(a)`: indices with a nonzero entry.
    pub fn support(&self) -> VarSet {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .fold(0, |acc, (i, _)| acc | (1 << i))
    }

    /// `G_a`: indices with a negative entry.
    pub fn negative_set(&self) -> VarSet {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e < 0)
            .fold(0, |acc, (i, _)| acc | (1 << i))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    /// Negative entries replaced by zero.
    pub fn positive_part(&self) -> Exponent {
        Exponent(self.0.iter().map(|&e| e.max(0)).collect())
    }

    pub fn to_monomial(&self) -> Result<Monomial> {
        if !self.is_nonnegative() {
            return Err(Error::NegativeExponent);
        }
        Ok(Monomial::from_exponents(self.0.iter().map(|&e| e as u32)))
    }

    /// Parses the tuple form `[2,-1,0]`.
    pub fn parse_tuple(text: &str) -> Result<Self> {
        let entries: Vec<i32> =
            serde_json::from_str(text.trim()).map_err(|e| Error::parse(1, e.to_string()))?;
        Ok(Exponent(entries))
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

impl From<&Monomial> for Exponent {
    fn from(m: &Monomial) -> Self {
        Exponent(m.exps().iter().map(|&e| e as i32).collect())
    }
}

type Exps = SmallVec<[u16; 10]>;

/// A monomial `x^a` with `a >= 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exps,
}

impl Monomial {
    pub fn from_exponents(exps: impl IntoIterator<Item = u32>) -> Self {
        Monomial {
            exps: exps
                .into_iter()
                .map(|e| u16::try_from(e).expect("exponent exceeds u16"))
                .collect(),
        }
    }

    pub fn one(n: usize) -> Self {
        Monomial { exps: smallvec::smallvec![0; n] }
    }

    /// The variable `x_i`, 1-based.
    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.exps[i - 1] = 1;
        m
    }

    /// `x_F = prod_{i in F} x_i`.
    pub fn from_set(n: usize, set: VarSet) -> Self {
        Monomial { exps: (0..n).map(|i| ((set >> i) & 1) as u16).collect() }
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn support(&self) -> VarSet {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .fold(0, |acc, (i, _)| acc | (1 << i))
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a + b).collect() }
    }

    pub fn pow(&self, t: u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&a| a * u16::try_from(t).expect("power too large")).collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.max(b)).collect() }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.min(b)).collect() }
    }

    /// `self / gcd(self, other)`: the exponent difference clamped at zero.
    pub fn quotient_by_gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a.saturating_sub(*b)).collect(),
        }
    }

    /// `sqrt(x^b) = prod_{i in supp b} x_i`.
    pub fn radical(&self) -> Monomial {
        Monomial { exps: self.exps.iter().map(|&e| (e > 0) as u16).collect() }
    }

    /// Coefficient-free derivative: `self / x^a` when `x^a` divides `self`,
    /// `None` (the zero polynomial) otherwise.
    pub fn star_derivative(&self, a: &Monomial) -> Option<Monomial> {
        if !a.divides(self) {
            return None;
        }
        Some(Monomial { exps: self.exps.iter().zip(a.exps.iter()).map(|(f, e)| f - e).collect() })
    }

    /// Parses `x1^2*x3`, or `1` for the unit monomial.
    pub fn parse(text: &str, n: usize) -> Result<Monomial> {
        let text = text.trim();
        let mut m = Monomial::one(n);
        if text == "1" {
            return Ok(m);
        }
        for factor in text.split('*') {
            let factor = factor.trim();
            let body = factor
                .strip_prefix('x')
                .ok_or_else(|| Error::parse(1, format!("expected variable, got {factor:?}")))?;
            let (idx, exp) = match body.split_once('^') {
                Some((i, e)) => (i, e),
                None => (body, "1"),
            };
            let idx: usize =
                idx.parse().map_err(|_| Error::parse(1, format!("bad variable index {idx:?}")))?;
            let exp: u16 =
                exp.parse().map_err(|_| Error::parse(1, format!("bad exponent {exp:?}")))?;
            if idx == 0 || idx > n {
                return Err(Error::VertexOutOfRange { vertex: idx, n });
            }
            m.exps[idx - 1] += exp;
        }
        Ok(m)
    }

    /// Parses the tuple form `[2,1,0]`.
    pub fn parse_tuple(text: &str) -> Result<Monomial> {
        Exponent::parse_tuple(text)?.to_monomial()
    }

    pub fn to_tuple_string(&self) -> String {
        Exponent::from(self).to_string()
    }
}

/// Graded order: lower degree first, then lexicographically larger exponent
/// first, so `x1x2 < x1x3 < x2x3`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.exps.as_slice().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<u16> = Vec::deserialize(d)?;
        Ok(Monomial { exps: v.into_iter().collect() })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealKind {
    Zero,
    Unit,
    Proper,
}

/// A monomial ideal stored by its minimal generating set, sorted by the
/// graded order on [`Monomial`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

/// Divisibility-minimal subset of `gens`.
pub fn minimalize(n: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<MonomialIdeal> {
    check_ambient(n)?;
    let mut all: Vec<Monomial> = Vec::new();
    for g in gens {
        if g.n() != n {
            return Err(Error::DimensionMismatch { expected: n, actual: g.n() });
        }
        all.push(g);
    }
    Ok(MonomialIdeal { n, gens: minimal_subset(all) })
}

fn minimal_subset(mut all: Vec<Monomial>) -> Vec<Monomial> {
    all.sort_unstable();
    all.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
    for g in all {
        // kept is degree-sorted, so only strictly lower degree can divide
        let deg = g.degree();
        if !kept.iter().take_while(|k| k.degree() < deg).any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

impl MonomialIdeal {
    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal { n, gens: vec![Monomial::one(n)] }
    }

    pub fn from_generators(n: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        minimalize(n, gens)
    }

    /// Ideal generated by the given variables (1-based).
    pub fn variables(n: usize, set: VarSet) -> Self {
        let gens = bits(set).map(|i| Monomial::var(n, i + 1)).collect();
        MonomialIdeal { n, gens: minimal_subset(gens) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn kind(&self) -> IdealKind {
        match self.gens.as_slice() {
            [] => IdealKind::Zero,
            [g] if g.is_one() => IdealKind::Unit,
            _ => IdealKind::Proper,
        }
    }

    pub fn is_proper_nonzero(&self) -> bool {
        self.kind() == IdealKind::Proper
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn contains(&self, f: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(f))
    }

    /// `true` when every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// `rho_j`: the largest exponent of `x_j` among minimal generators.
    pub fn rho(&self) -> Vec<u32> {
        let mut rho = vec![0u32; self.n];
        for g in &self.gens {
            for (r, &e) in rho.iter_mut().zip(g.exps()) {
                *r = (*r).max(e as u32);
            }
        }
        rho
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Union of generator supports.
    pub fn support(&self) -> VarSet {
        self.gens.iter().fold(0, |acc, g| acc | g.support())
    }

    fn check_same(&self, other: &MonomialIdeal) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, actual: other.n });
        }
        Ok(())
    }

    fn check_monomial(&self, m: &Monomial) -> Result<()> {
        if m.n() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, actual: m.n() });
        }
        Ok(())
    }

    pub fn add(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same(other)?;
        let gens = self.gens.iter().chain(other.gens.iter()).cloned().collect();
        Ok(MonomialIdeal { n: self.n, gens: minimal_subset(gens) })
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        Ok(MonomialIdeal { n: self.n, gens: minimal_subset(gens) })
    }

    /// `I^s` for `s >= 1`.
    pub fn power(&self, s: u32) -> Result<MonomialIdeal> {
        if s == 0 {
            return Err(Error::ZeroPower);
        }
        let mut acc = self.clone();
        for _ in 1..s {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Ok(MonomialIdeal { n: self.n, gens: minimal_subset(gens) })
    }

    /// Intersection of several ideals, smallest generating sets first, with
    /// minimalization after every binary step.
    pub fn intersect_all(n: usize, ideals: &[MonomialIdeal]) -> Result<MonomialIdeal> {
        let mut order: Vec<&MonomialIdeal> = ideals.iter().collect();
        order.sort_by_key(|i| i.len());
        let mut acc = MonomialIdeal::unit(n);
        for ideal in order {
            acc = acc.intersect(ideal)?;
        }
        Ok(acc)
    }

    /// `I : x^a`.
    pub fn colon(&self, a: &Monomial) -> Result<MonomialIdeal> {
        self.check_monomial(a)?;
        let gens = self.gens.iter().map(|g| g.quotient_by_gcd(a)).collect();
        Ok(MonomialIdeal { n: self.n, gens: minimal_subset(gens) })
    }

    /// `sqrt(I : x^a)`, generated by the radicals of `g / gcd(g, x^a)`.
    pub fn radical_colon(&self, a: &Monomial) -> Result<MonomialIdeal> {
        self.check_monomial(a)?;
        let gens = self.gens.iter().map(|g| g.quotient_by_gcd(a).radical()).collect();
        Ok(MonomialIdeal { n: self.n, gens: minimal_subset(gens) })
    }

    pub fn radical(&self) -> MonomialIdeal {
        let gens = self.gens.iter().map(Monomial::radical).collect();
        MonomialIdeal { n: self.n, gens: minimal_subset(gens) }
    }

    /// `I_V`: the generators supported inside `v`, same ambient ring.
    pub fn restrict(&self, v: VarSet) -> MonomialIdeal {
        let gens = self.gens.iter().filter(|g| g.support() & !v == 0).cloned().collect();
        MonomialIdeal { n: self.n, gens }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.gens).expect("monomial list serializes")
    }

    /// Parses a JSON array of exponent tuples in `n` variables.
    pub fn from_json(text: &str, n: usize) -> Result<MonomialIdeal> {
        let gens: Vec<Monomial> =
            serde_json::from_str(text.trim()).map_err(|e| Error::parse(1, e.to_string()))?;
        minimalize(n, gens)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
