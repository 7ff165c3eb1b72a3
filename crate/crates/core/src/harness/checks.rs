//! Per-graph verification: theorem-level equalities and bounds, and the
//! lemma-level identities over every exponent the engines visit.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::complex::{complex_of_ideal, ideal_of_complex, CombineMode};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::graph6;
use crate::ideal::{full_set, Exponent, Monomial, MonomialIdeal};
use crate::linalg::{PrimeField, DEFAULT_PRIME};
use crate::regularity::{
    degree_complex, gamma_exponents, reg_betti, reg_takayama, red0_variables, upper_bound_scan,
    verify_certificate, TakayamaResult,
};
use crate::symbolic::{expansion, fourth_closure, symbolic_power};

use super::cache::RegCache;

pub const ALL_CHECKS: &[&str] = &[
    "conjA_s2",
    "conjA_s3",
    "boundB_s2",
    "boundB_s3",
    "boundSym_s2",
    "boundSym_s3",
    "boundSym_s4",
    "bipartite_collapse",
    "expansion_identity",
    "fourth_closure_identity",
    "key2_identity",
    "key3_structure",
    "complex_combine",
    "red0_sweep",
    "mu_formula",
    "degree_complex_identity",
    "cone_acyclicity",
    "certificate_soundness",
    "upper_bound",
    "restriction_inequality",
    "engine_agreement",
    "char_comparison",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PowerKind {
    Ordinary,
    Symbolic,
}

impl std::str::FromStr for PowerKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "ordinary" => Ok(PowerKind::Ordinary),
            "symbolic" => Ok(PowerKind::Symbolic),
            other => Err(format!("unknown power kind {other:?}")),
        }
    }
}

impl std::fmt::Display for PowerKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            PowerKind::Ordinary => "ordinary",
            PowerKind::Symbolic => "symbolic",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusConfig {
    pub max_n: usize,
    pub connected_only: bool,
    pub s_range: BTreeSet<u32>,
    pub checks: Vec<String>,
    pub field_char: u32,
    pub output: std::path::PathBuf,
    /// Per-graph budget; checks not started before it expires are skipped.
    pub timeout_ms: u64,
}

impl Default for CensusConfig {
    fn default() -> Self {
        CensusConfig {
            max_n: 5,
            connected_only: true,
            s_range: [2, 3].into_iter().collect(),
            checks: ALL_CHECKS.iter().map(|c| c.to_string()).collect(),
            field_char: DEFAULT_PRIME,
            output: "census-out".into(),
            timeout_ms: 120_000,
        }
    }
}

impl CensusConfig {
    pub fn validate(&self) -> Result<()> {
        let invalid = |msg: String| Err(Error::parse(0, msg));
        if !(2..=8).contains(&self.max_n) {
            return invalid(format!("max_n must be in 2..=8, got {}", self.max_n));
        }
        if self.s_range.is_empty() || self.s_range.iter().any(|s| !(2..=4).contains(s)) {
            return invalid(format!("s_range must be a nonempty subset of {{2,3,4}}, got {:?}", self.s_range));
        }
        if let Some(bad) = self.checks.iter().find(|c| !ALL_CHECKS.contains(&c.as_str())) {
            return invalid(format!("unknown check {bad:?}"));
        }
        PrimeField::new(self.field_char)?;
        Ok(())
    }

    pub fn field(&self) -> Result<PrimeField> {
        PrimeField::new(self.field_char)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

/// Enough to rerun a failing check by hand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reproducer {
    pub graph6: String,
    pub s: Option<u32>,
    pub exponent: Option<Exponent>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub status: CheckStatus,
    pub details: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reproducer: Option<Reproducer>,
}

impl CheckResult {
    fn pass(details: impl Into<String>) -> Self {
        CheckResult { status: CheckStatus::Pass, details: details.into(), reproducer: None }
    }

    fn skipped(details: impl Into<String>) -> Self {
        CheckResult { status: CheckStatus::Skipped, details: details.into(), reproducer: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub checks: BTreeMap<String, CheckResult>,
    pub timings_ms: BTreeMap<String, u64>,
    pub field_char: u32,
}

impl CheckReport {
    pub fn failures(&self) -> impl Iterator<Item = (&String, &CheckResult)> {
        self.checks.iter().filter(|(_, r)| r.status == CheckStatus::Fail)
    }

    pub fn all_passed(&self) -> bool {
        self.checks.values().all(|r| r.status == CheckStatus::Pass)
    }
}

/// Lazily built powers of one edge ideal and their regularity data.
pub struct GraphContext<'a> {
    graph: SimpleGraph,
    id: String,
    field: PrimeField,
    cache: Option<&'a RegCache>,
    ideals: HashMap<(PowerKind, u32), MonomialIdeal>,
    results: HashMap<(PowerKind, u32, u32), TakayamaResult>,
}

fn normalize(kind: PowerKind, s: u32) -> (PowerKind, u32) {
    if s == 1 {
        (PowerKind::Ordinary, 1)
    } else {
        (kind, s)
    }
}

impl<'a> GraphContext<'a> {
    pub fn new(graph: &SimpleGraph, field: PrimeField, cache: Option<&'a RegCache>) -> Result<Self> {
        if graph.edge_count() == 0 {
            return Err(Error::EdgelessGraph);
        }
        Ok(GraphContext {
            graph: graph.clone(),
            id: graph.canonical_graph6(),
            field,
            cache,
            ideals: HashMap::new(),
            results: HashMap::new(),
        })
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn ideal(&mut self, kind: PowerKind, s: u32) -> Result<MonomialIdeal> {
        let key = normalize(kind, s);
        if let Some(i) = self.ideals.get(&key) {
            return Ok(i.clone());
        }
        let base = self.graph.edge_ideal();
        let ideal = match key.0 {
            PowerKind::Ordinary => base.power(key.1)?,
            PowerKind::Symbolic => symbolic_power(&base, key.1)?,
        };
        self.ideals.insert(key, ideal.clone());
        Ok(ideal)
    }

    pub fn takayama_in(&mut self, kind: PowerKind, s: u32, field: PrimeField) -> Result<TakayamaResult> {
        let (kind, s) = normalize(kind, s);
        let key = (kind, s, field.characteristic());
        if let Some(r) = self.results.get(&key) {
            return Ok(r.clone());
        }
        let r = reg_takayama(&self.ideal(kind, s)?, field)?;
        if let Some(cache) = self.cache {
            cache.insert(&self.id, s, kind, field.characteristic(), r.reg_ideal())?;
        }
        self.results.insert(key, r.clone());
        Ok(r)
    }

    pub fn takayama(&mut self, kind: PowerKind, s: u32) -> Result<TakayamaResult> {
        self.takayama_in(kind, s, self.field)
    }

    /// `reg` of the ideal itself (not of the quotient).
    pub fn reg(&mut self, kind: PowerKind, s: u32) -> Result<u32> {
        let (kind, s) = normalize(kind, s);
        if let Some(r) = self.results.get(&(kind, s, self.field.characteristic())) {
            return Ok(r.reg_ideal());
        }
        if let Some(reg) = self.cache.and_then(|c| c.get(&self.id, s, kind, self.field.characteristic())) {
            return Ok(reg);
        }
        Ok(self.takayama(kind, s)?.reg_ideal())
    }
}

struct Verifier<'c, 'a> {
    ctx: &'c mut GraphContext<'a>,
    s_range: BTreeSet<u32>,
    graph6: String,
}

type Outcome = Result<CheckResult>;

/// The box `0 <= a_j <= bounds[j]`.
fn box_points(bounds: &[u32]) -> impl Iterator<Item = Vec<u32>> + '_ {
    let mut next = Some(vec![0u32; bounds.len()]);
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        for j in 0..succ.len() {
            if succ[j] < bounds[j] {
                succ[j] += 1;
                next = Some(succ);
                break;
            }
            succ[j] = 0;
        }
        Some(current)
    })
}

fn exponent_of(a: &[u32]) -> Exponent {
    Exponent::new(a.iter().map(|&v| v as i32).collect())
}

impl Verifier<'_, '_> {
    fn fail(&self, details: impl Into<String>, s: Option<u32>, a: Option<&[u32]>) -> CheckResult {
        CheckResult {
            status: CheckStatus::Fail,
            details: details.into(),
            reproducer: Some(Reproducer { graph6: self.graph6.clone(), s, exponent: a.map(exponent_of) }),
        }
    }

    /// `I` and every power in the configured range.
    fn visited(&self) -> Vec<(PowerKind, u32)> {
        let mut out = vec![(PowerKind::Ordinary, 1)];
        for &s in &self.s_range {
            out.push((PowerKind::Ordinary, s));
            out.push((PowerKind::Symbolic, s));
        }
        out
    }

    fn run(&mut self, name: &str) -> Outcome {
        match name {
            "conjA_s2" => self.conj_a(2),
            "conjA_s3" => self.conj_a(3),
            "boundB_s2" => self.bound(PowerKind::Ordinary, 2),
            "boundB_s3" => self.bound(PowerKind::Ordinary, 3),
            "boundSym_s2" => self.bound(PowerKind::Symbolic, 2),
            "boundSym_s3" => self.bound(PowerKind::Symbolic, 3),
            "boundSym_s4" => self.bound(PowerKind::Symbolic, 4),
            "bipartite_collapse" => self.bipartite_collapse(),
            "expansion_identity" => self.expansion_identity(),
            "fourth_closure_identity" => self.fourth_closure_identity(),
            "key2_identity" => self.key2_identity(),
            "key3_structure" => self.key3_structure(),
            "complex_combine" => self.complex_combine(),
            "red0_sweep" => self.red0_sweep(),
            "mu_formula" => self.mu_formula(),
            "degree_complex_identity" => self.degree_complex_identity(),
            "cone_acyclicity" => self.cone_acyclicity(),
            "certificate_soundness" => self.certificate_soundness(),
            "upper_bound" => self.upper_bound(),
            "restriction_inequality" => self.restriction_inequality(),
            "engine_agreement" => self.engine_agreement(),
            "char_comparison" => self.char_comparison(),
            other => Err(Error::parse(0, format!("unknown check {other:?}"))),
        }
    }

    fn applies(&self, name: &str) -> bool {
        match name.rsplit_once("_s").and_then(|(_, s)| s.parse::<u32>().ok()) {
            Some(s) => self.s_range.contains(&s),
            None => true,
        }
    }

    fn conj_a(&mut self, s: u32) -> Outcome {
        let sym = self.ctx.reg(PowerKind::Symbolic, s)?;
        let ord = self.ctx.reg(PowerKind::Ordinary, s)?;
        let details = format!("reg I^({s}) = {sym}, reg I^{s} = {ord}");
        Ok(if sym == ord { CheckResult::pass(details) } else { self.fail(details, Some(s), None) })
    }

    fn bound(&mut self, kind: PowerKind, s: u32) -> Outcome {
        let reg1 = self.ctx.reg(PowerKind::Ordinary, 1)?;
        let reg = self.ctx.reg(kind, s)?;
        let bound = reg1 + 2 * s - 2;
        let power = if kind == PowerKind::Symbolic { format!("I^({s})") } else { format!("I^{s}") };
        let details = format!("reg {power} = {reg} <= reg I + {} = {bound}", 2 * s - 2);
        Ok(if reg <= bound { CheckResult::pass(details) } else { self.fail(details, Some(s), None) })
    }

    fn bipartite_collapse(&mut self) -> Outcome {
        let bipartite = self.ctx.graph().is_bipartite();
        let mut equal = Vec::new();
        for s in 1..=4 {
            if self.ctx.ideal(PowerKind::Symbolic, s)? == self.ctx.ideal(PowerKind::Ordinary, s)? {
                equal.push(s);
            }
        }
        let all_equal = equal.len() == 4;
        let details = format!("bipartite = {bipartite}, I^(s) = I^s for s in {equal:?}");
        Ok(if bipartite == all_equal { CheckResult::pass(details) } else { self.fail(details, None, None) })
    }

    fn expansion_identity(&mut self) -> Outcome {
        for s in [2, 3] {
            let closed = expansion(self.ctx.graph(), s)?;
            let sym = self.ctx.ideal(PowerKind::Symbolic, s)?;
            if closed != sym {
                return Ok(self.fail(
                    format!("s = {s}: I^(s) has {} generators, expansion has {}", sym.len(), closed.len()),
                    Some(s),
                    None,
                ));
            }
        }
        Ok(CheckResult::pass("I^(2) and I^(3) equal their expansions"))
    }

    fn fourth_closure_identity(&mut self) -> Outcome {
        let closed = fourth_closure(self.ctx.graph())?;
        let rhs = self.ctx.ideal(PowerKind::Symbolic, 4)?.add(&self.ctx.ideal(PowerKind::Ordinary, 3)?)?;
        Ok(if closed == rhs {
            CheckResult::pass(format!("I^(4) + I^3 has {} generators", rhs.len()))
        } else {
            self.fail("I^3 + J1 J1 + J3 differs from I^(4) + I^3", Some(4), None)
        })
    }

    /// Exponents `a ≥ 0` with `x^a ∉ I^(s)` over the box on which radical
    /// colons of `I^(s)` and `I^s` can still change.
    fn colon_pairs(&mut self, s: u32) -> Result<Vec<(Vec<u32>, MonomialIdeal, MonomialIdeal)>> {
        let sym = self.ctx.ideal(PowerKind::Symbolic, s)?;
        let ord = self.ctx.ideal(PowerKind::Ordinary, s)?;
        let bounds: Vec<u32> = sym.rho().iter().zip(ord.rho()).map(|(&x, y)| x.max(y)).collect();
        let mut out = Vec::new();
        for a in box_points(&bounds) {
            let xa = Monomial::from_exponents(a.iter().copied());
            if sym.contains(&xa) {
                continue;
            }
            let left = sym.radical_colon(&xa)?;
            let right = ord.radical_colon(&xa)?;
            out.push((a, left, right));
        }
        Ok(out)
    }

    fn key2_identity(&mut self) -> Outcome {
        let pairs = self.colon_pairs(2)?;
        for (a, left, right) in &pairs {
            if left != right {
                return Ok(self.fail(
                    format!("sqrt(I^(2):x^a) = {} but sqrt(I^2:x^a) = {}", left.to_json(), right.to_json()),
                    Some(2),
                    Some(a),
                ));
            }
        }
        Ok(CheckResult::pass(format!("{} exponents", pairs.len())))
    }

    fn key3_structure(&mut self) -> Outcome {
        let pairs = self.colon_pairs(3)?;
        let (j1, _, _) = self.ctx.graph().aux_ideals();
        let mut differing = 0;
        for (a, left, right) in &pairs {
            if left == right {
                continue;
            }
            differing += 1;
            let xa = Monomial::from_exponents(a.iter().copied());
            let support: u32 = xa.support();
            if !j1.generators().iter().any(|t| t.divides(&xa)) {
                return Ok(self.fail("colons differ but no triangle divides x^a", Some(3), Some(a)));
            }
            for f in left.generators().iter().filter(|f| !right.contains(f)) {
                if f.degree() != 1 || f.support() & support != 0 {
                    return Ok(self.fail(format!("offending generator {f}"), Some(3), Some(a)));
                }
            }
        }
        Ok(CheckResult::pass(format!("{} exponents, {differing} with differing colons", pairs.len())))
    }

    /// The Stanley-Reisner sum and intersection rules on the `s = 2` colon
    /// pairs.
    fn complex_combine(&mut self) -> Outcome {
        let pairs = self.colon_pairs(2)?;
        for (a, left, right) in &pairs {
            let (dl, dr) = (complex_of_ideal(left)?, complex_of_ideal(right)?);
            let sum = complex_of_ideal(&left.add(right)?)?;
            let meet = complex_of_ideal(&left.intersect(right)?)?;
            if sum != dl.combine(&dr, CombineMode::Intersection)? {
                return Ok(self.fail("complex of a sum is not the intersection", Some(2), Some(a)));
            }
            if meet != dl.combine(&dr, CombineMode::Union)? {
                return Ok(self.fail("complex of an intersection is not the union", Some(2), Some(a)));
            }
        }
        Ok(CheckResult::pass(format!("{} pairs", pairs.len())))
    }

    fn red0_sweep(&mut self) -> Outcome {
        let mut checked = 0;
        for (kind, s) in self.visited() {
            if s > 3 {
                continue;
            }
            let ideal = self.ctx.ideal(kind, s)?;
            let result = self.ctx.takayama(kind, s)?;
            let mut extended: HashMap<usize, u32> = HashMap::new();
            for cert in &result.certificates {
                for t in red0_variables(&ideal, &cert.a)? {
                    let reg = match extended.get(&t) {
                        Some(&r) => r,
                        None => {
                            let bigger = ideal.add(&MonomialIdeal::variables(ideal.n(), 1 << (t - 1)))?;
                            let r = reg_takayama(&bigger, self.ctx.field)?.reg_quotient;
                            extended.insert(t, r);
                            r
                        }
                    };
                    checked += 1;
                    if reg != result.reg_quotient {
                        let a: Vec<u32> = cert.a.entries().iter().map(|&v| v as u32).collect();
                        return Ok(self.fail(
                            format!("{kind} s = {s}: reg(S/(I, x{t})) = {reg} but reg(S/I) = {}", result.reg_quotient),
                            Some(s),
                            Some(&a),
                        ));
                    }
                }
            }
        }
        Ok(CheckResult::pass(format!("{checked} certificate variables")))
    }

    fn mu_formula(&mut self) -> Outcome {
        let (_, mu) = self.ctx.graph().matching_stats();
        let mu = mu as u32;
        let reg1 = self.ctx.reg(PowerKind::Ordinary, 1)?;
        if reg1 != mu + 1 {
            return Ok(CheckResult::pass(format!("not applicable: reg I = {reg1}, mu = {mu}")));
        }
        for s in 1..=4 {
            let reg = self.ctx.reg(PowerKind::Symbolic, s)?;
            if reg != 2 * s + mu - 1 {
                return Ok(self.fail(format!("reg I^({s}) = {reg}, expected {}", 2 * s + mu - 1), Some(s), None));
            }
        }
        Ok(CheckResult::pass(format!("reg I^(s) = 2s + {mu} - 1 for s <= 4")))
    }

    fn degree_complex_identity(&mut self) -> Outcome {
        let mut count = 0;
        for (kind, s) in self.visited() {
            let ideal = self.ctx.ideal(kind, s)?;
            for a in gamma_exponents(&ideal)? {
                count += 1;
                let lhs = ideal_of_complex(&degree_complex(&ideal, &a)?);
                let rhs = ideal.radical_colon(&a.to_monomial()?)?;
                if lhs != rhs {
                    let raw: Vec<u32> = a.entries().iter().map(|&v| v as u32).collect();
                    return Ok(self.fail(format!("{kind} s = {s}: I_Δa differs from sqrt(I:x^a)"), Some(s), Some(&raw)));
                }
            }
        }
        Ok(CheckResult::pass(format!("{count} exponents")))
    }

    fn cone_acyclicity(&mut self) -> Outcome {
        let field = self.ctx.field;
        let mut cones = 0;
        for (kind, s) in self.visited() {
            let ideal = self.ctx.ideal(kind, s)?;
            for a in gamma_exponents(&ideal)? {
                let delta = degree_complex(&ideal, &a)?;
                if !(1..=ideal.n()).any(|t| delta.is_cone_over(t)) {
                    continue;
                }
                cones += 1;
                if !delta.reduced_homology(field).is_acyclic() {
                    let raw: Vec<u32> = a.entries().iter().map(|&v| v as u32).collect();
                    return Ok(self.fail(format!("{kind} s = {s}: cone with homology"), Some(s), Some(&raw)));
                }
            }
        }
        Ok(CheckResult::pass(format!("{cones} cones")))
    }

    fn certificate_soundness(&mut self) -> Outcome {
        let mut count = 0;
        for (kind, s) in self.visited() {
            let ideal = self.ctx.ideal(kind, s)?;
            let result = self.ctx.takayama(kind, s)?;
            if result.certificates.is_empty() {
                return Ok(self.fail(format!("{kind} s = {s}: no certificates"), Some(s), None));
            }
            for cert in &result.certificates {
                count += 1;
                let raw: Vec<u32> = cert.a.entries().iter().map(|&v| v as u32).collect();
                if let Err(e) = verify_certificate(&ideal, cert, self.ctx.field) {
                    return Ok(self.fail(format!("{kind} s = {s}: {e}"), Some(s), Some(&raw)));
                }
                if cert.value != result.reg_quotient {
                    return Ok(self.fail(format!("{kind} s = {s}: value {} is not reg", cert.value), Some(s), Some(&raw)));
                }
            }
        }
        Ok(CheckResult::pass(format!("{count} certificates")))
    }

    fn upper_bound(&mut self) -> Outcome {
        for (kind, s) in self.visited() {
            let ideal = self.ctx.ideal(kind, s)?;
            let reg = self.ctx.takayama(kind, s)?.reg_quotient;
            let bound = upper_bound_scan(&ideal, self.ctx.field)?;
            if bound < reg {
                return Ok(self.fail(format!("{kind} s = {s}: bound {bound} < reg(S/I) = {reg}"), Some(s), None));
            }
        }
        Ok(CheckResult::pass("bound dominates reg(S/I)"))
    }

    /// `reg I_V^(s) <= reg I^(s)` for every single-vertex deletion `V`, with
    /// `(I_V)^(s) = (I^(s))_V` checked along the way.
    fn restriction_inequality(&mut self) -> Outcome {
        let n = self.ctx.graph().n();
        let base = self.ctx.graph().edge_ideal();
        for s in self.s_range.clone() {
            let sym = self.ctx.ideal(PowerKind::Symbolic, s)?;
            let reg = self.ctx.reg(PowerKind::Symbolic, s)?;
            for v in 0..n {
                let keep = full_set(n) & !(1 << v);
                let restricted = base.restrict(keep);
                if !restricted.is_proper_nonzero() {
                    continue;
                }
                let local = symbolic_power(&restricted, s)?;
                if local != sym.restrict(keep) {
                    return Ok(self.fail(format!("(I_V)^({s}) differs from (I^({s}))_V without x{}", v + 1), Some(s), None));
                }
                let local_reg = reg_takayama(&local, self.ctx.field)?.reg_ideal();
                if local_reg > reg {
                    return Ok(self.fail(
                        format!("reg I_V^({s}) = {local_reg} > reg I^({s}) = {reg} without x{}", v + 1),
                        Some(s),
                        None,
                    ));
                }
            }
        }
        Ok(CheckResult::pass("all single-vertex deletions"))
    }

    fn engine_agreement(&mut self) -> Outcome {
        let mut compared = Vec::new();
        for (kind, s) in self.visited() {
            let ideal = self.ctx.ideal(kind, s)?;
            let takayama = self.ctx.takayama(kind, s)?.reg_quotient;
            let betti = reg_betti(&ideal, self.ctx.field)?;
            if takayama != betti {
                return Ok(self.fail(
                    format!("{kind} s = {s}: takayama {takayama}, betti {betti}"),
                    Some(s),
                    None,
                ));
            }
            compared.push(format!("{kind}:{s}={takayama}"));
        }
        Ok(CheckResult::pass(compared.join(" ")))
    }

    /// Informational: GF(2) against the configured field.
    fn char_comparison(&mut self) -> Outcome {
        let two = PrimeField::new(2)?;
        if self.ctx.field == two {
            return Ok(CheckResult::pass("configured field is GF(2)"));
        }
        let mut differing = Vec::new();
        for (kind, s) in self.visited() {
            let here = self.ctx.takayama(kind, s)?.reg_quotient;
            let there = self.ctx.takayama_in(kind, s, two)?.reg_quotient;
            if here != there {
                differing.push(format!("{kind}:{s} ({here} vs {there})"));
            }
        }
        Ok(CheckResult::pass(if differing.is_empty() {
            "no characteristic dependence".to_string()
        } else {
            format!("characteristic-dependent: {}", differing.join(", "))
        }))
    }
}

/// Runs the enabled checks on one graph. Checks not started before the
/// per-graph deadline are reported as skipped.
pub fn verify_graph_with(graph: &SimpleGraph, cfg: &CensusConfig, cache: Option<&RegCache>) -> Result<CheckReport> {
    let field = cfg.field()?;
    let mut ctx = GraphContext::new(graph, field, cache)?;
    let deadline = Instant::now() + Duration::from_millis(cfg.timeout_ms);
    let mut verifier = Verifier { ctx: &mut ctx, s_range: cfg.s_range.clone(), graph6: graph6::encode(graph) };
    let mut checks = BTreeMap::new();
    let mut timings_ms = BTreeMap::new();
    // engine_agreement and char_comparison reuse the other checks' results
    let mut order: Vec<&String> = cfg.checks.iter().collect();
    order.sort_by_key(|c| matches!(c.as_str(), "engine_agreement" | "char_comparison"));
    for name in order {
        if !verifier.applies(name) {
            continue;
        }
        if Instant::now() >= deadline {
            checks.insert(name.clone(), CheckResult::skipped(format!("timeout after {} ms", cfg.timeout_ms)));
            continue;
        }
        let start = Instant::now();
        let result = match verifier.run(name) {
            Ok(r) => r,
            Err(e) => verifier.fail(format!("error: {e}"), None, None),
        };
        timings_ms.insert(name.clone(), start.elapsed().as_millis() as u64);
        checks.insert(name.clone(), result);
    }
    Ok(CheckReport {
        graph_id: ctx.id().to_string(),
        n: graph.n(),
        m: graph.edge_count(),
        checks,
        timings_ms,
        field_char: field.characteristic(),
    })
}

pub fn verify_graph(graph: &SimpleGraph, cfg: &CensusConfig) -> Result<CheckReport> {
    verify_graph_with(graph, cfg, None)
}

/// For the exponent `a`, the minimal generators of `sqrt(I^(s):x^a)` that
/// are not minimal generators of `sqrt(I^s:x^a)`.
pub fn colon_generator_gap(graph: &SimpleGraph, s: u32, a: &Exponent) -> Result<Vec<Monomial>> {
    let base = graph.edge_ideal();
    let xa = a.to_monomial()?;
    let sym = symbolic_power(&base, s)?.radical_colon(&xa)?;
    let ord = base.power(s)?.radical_colon(&xa)?;
    Ok(sym.generators().iter().filter(|g| !ord.generators().contains(g)).cloned().collect())
}
