//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Runs the census once (connected graphs, n ≤ 6 with s ∈ {2,3,4}; n = 7
//! with s = 2) and reads every census-level criterion off those reports.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use symreg::harness::{
    colon_generator_gap, enumerate_levels, verify_graph_with, CensusConfig, CheckReport, CheckStatus, RegCache,
};
use symreg::regularity::upper_bound_scan;
use symreg::{
    degree_complex, reg_betti, reg_takayama, Exponent, Monomial, MonomialIdeal, PrimeField, SimpleGraph,
};

const FULL_CHECKS: &[&str] = &[
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
    "degree_complex_identity",
    "cone_acyclicity",
    "certificate_soundness",
    "upper_bound",
    "engine_agreement",
];

const SEVEN_VERTEX_CHECKS: &[&str] = &[
    "conjA_s2",
    "boundB_s2",
    "boundSym_s2",
    "bipartite_collapse",
    "key2_identity",
    "complex_combine",
    "red0_sweep",
    "degree_complex_identity",
    "cone_acyclicity",
    "certificate_soundness",
    "upper_bound",
    "engine_agreement",
];

const EXPECTED_CONNECTED: [usize; 7] = [1, 1, 2, 6, 21, 112, 853];
const RANDOM_IDEALS: usize = 100;
const RANDOM_SEED: u64 = 0x5eed_0001;

struct Census {
    reports: Vec<CheckReport>,
    counts: Vec<usize>,
    elapsed: Duration,
}

fn config(checks: &[&str], s: &[u32]) -> CensusConfig {
    CensusConfig {
        max_n: 7,
        s_range: s.iter().copied().collect(),
        checks: checks.iter().map(|c| c.to_string()).collect(),
        timeout_ms: 600_000,
        ..CensusConfig::default()
    }
}

fn run_census() -> Census {
    let start = Instant::now();
    let levels = enumerate_levels(7, true).expect("census enumeration");
    let counts = levels[1..].iter().map(Vec::len).collect();
    let cache = RegCache::in_memory();
    let small = config(FULL_CHECKS, &[2, 3, 4]);
    let seven = config(SEVEN_VERTEX_CHECKS, &[2]);
    let mut reports = Vec::new();
    for level in &levels[2..] {
        for g in level {
            let cfg = if g.n() <= 6 { &small } else { &seven };
            reports.push(verify_graph_with(g, cfg, Some(&cache)).expect("verification runs"));
        }
    }
    Census { reports, counts, elapsed: start.elapsed() }
}

struct Tally {
    runs: usize,
    failures: Vec<String>,
}

/// Every report on at most `max_n` vertices must carry a passing `check`.
fn tally(census: &Census, check: &str, max_n: usize) -> Tally {
    let mut t = Tally { runs: 0, failures: Vec::new() };
    for r in census.reports.iter().filter(|r| r.n <= max_n) {
        match r.checks.get(check) {
            Some(res) if res.status == CheckStatus::Pass => t.runs += 1,
            Some(res) => t.failures.push(format!("{check} on {}: {}", r.graph_id, res.details)),
            None => t.failures.push(format!("{check} missing on {}", r.graph_id)),
        }
    }
    t
}

fn combine(census: &Census, checks: &[(&str, usize)]) -> (bool, String) {
    let mut parts = Vec::new();
    let mut failures = Vec::new();
    for &(check, max_n) in checks {
        let t = tally(census, check, max_n);
        parts.push(format!("{check}(n<={max_n}) {}", t.runs));
        failures.extend(t.failures);
    }
    if failures.is_empty() {
        (true, parts.join(", "))
    } else {
        let shown: Vec<String> = failures.iter().take(3).cloned().collect();
        (false, format!("{} failures, e.g. {}", failures.len(), shown.join("; ")))
    }
}

fn star() -> MonomialIdeal {
    let g = SimpleGraph::new(5, &[(1, 2), (1, 3), (1, 4), (1, 5)]).unwrap();
    g.edge_ideal()
}

fn criterion_1(field: PrimeField) -> (bool, String) {
    let start = Instant::now();
    let base = star();
    let mut ok = true;
    let mut notes = Vec::new();
    for s in 1..=3u32 {
        let power = base.power(s).unwrap();
        let takayama = reg_takayama(&power, field).unwrap().reg_quotient;
        let betti = reg_betti(&power, field).unwrap();
        ok &= takayama == 2 * s - 1 && betti == 2 * s - 1;
        notes.push(format!("s={s}: {takayama}/{betti}"));
        if s >= 2 {
            let a = Exponent::new(vec![0, s as i32 - 1, s as i32 - 1, s as i32 - 1, s as i32 - 1]);
            let reg_delta = degree_complex(&power, &a).unwrap().regularity(field);
            ok &= reg_delta == Some(0);
            notes.push(format!("reg K[Δ_a]={reg_delta:?}"));
        }
    }
    let square = base.power(2).unwrap();
    let bound = upper_bound_scan(&square, field).unwrap();
    let reg2 = reg_takayama(&square, field).unwrap().reg_quotient;
    ok &= bound > reg2;
    notes.push(format!("bound {bound} > {reg2}"));
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(30);
    (ok, format!("{} in {:.2?}", notes.join(", "), elapsed))
}

fn criterion_2() -> (bool, String) {
    let start = Instant::now();
    let g = SimpleGraph::new(7, &[(1, 2), (2, 3), (3, 1), (1, 4), (4, 5), (2, 6), (6, 7)]).unwrap();
    let a = Exponent::new(vec![1, 1, 1, 1, 0, 1, 0]);
    let target = Monomial::parse("x5*x7", 7).unwrap();
    let base = g.edge_ideal();
    let xa = a.to_monomial().unwrap();
    let sym = symreg::symbolic_power(&base, 4).unwrap().radical_colon(&xa).unwrap();
    let ord = base.power(4).unwrap().radical_colon(&xa).unwrap();
    let in_sym = sym.generators().contains(&target);
    let in_ord = ord.generators().contains(&target);
    let gap = colon_generator_gap(&g, 4, &a).unwrap();
    let elapsed = start.elapsed();
    let ok = in_sym && !in_ord && gap.contains(&target) && elapsed < Duration::from_secs(60);
    (ok, format!("x5x7 generator of symbolic colon: {in_sym}, of ordinary colon: {in_ord}, in {elapsed:.2?}"))
}

fn random_ideal(rng: &mut ChaCha8Rng) -> MonomialIdeal {
    let n = rng.gen_range(2..=5);
    let count = rng.gen_range(1..=6);
    let gens = (0..count).map(|_| {
        let degree = rng.gen_range(1..=4);
        let mut exps = vec![0u32; n];
        for _ in 0..degree {
            exps[rng.gen_range(0..n)] += 1;
        }
        Monomial::from_exponents(exps)
    });
    MonomialIdeal::from_generators(n, gens.collect::<Vec<_>>()).unwrap()
}

fn criterion_6(census: &Census, field: PrimeField) -> (bool, String) {
    let (census_ok, census_note) = combine(census, &[("engine_agreement", 7)]);
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    let mut disagreements = Vec::new();
    for _ in 0..RANDOM_IDEALS {
        let ideal = random_ideal(&mut rng);
        let takayama = reg_takayama(&ideal, field).unwrap().reg_quotient;
        let betti = reg_betti(&ideal, field).unwrap();
        if takayama != betti {
            disagreements.push(format!("{} ({takayama} vs {betti})", ideal.to_json()));
        }
    }
    let ok = census_ok && disagreements.is_empty();
    (ok, format!("{census_note}; random ideals {RANDOM_IDEALS}, disagreements {}", disagreements.len()))
}

fn criterion_8(census: &Census) -> (bool, String) {
    let (ok, note) = combine(census, &[("bipartite_collapse", 7)]);
    let bipartite = census
        .reports
        .iter()
        .filter(|r| r.checks.get("bipartite_collapse").is_some_and(|c| c.details.starts_with("bipartite = true")))
        .count();
    (ok, format!("{bipartite} bipartite graphs; {note}"))
}

fn main() -> ExitCode {
    let field = PrimeField::default();
    let mut results: BTreeMap<u32, (bool, String)> = BTreeMap::new();
    results.insert(1, criterion_1(field));
    results.insert(2, criterion_2());

    let census = run_census();
    let counts_ok = census.counts == EXPECTED_CONNECTED;
    let census_note = format!("census {:?} in {:.1?}", census.counts, census.elapsed);

    results.insert(
        3,
        combine(&census, &[("expansion_identity", 6), ("fourth_closure_identity", 6)]),
    );
    let (ok4, note4) = combine(&census, &[("conjA_s2", 7), ("conjA_s3", 6)]);
    results.insert(4, (ok4 && counts_ok, format!("{note4}; {census_note}")));
    results.insert(
        5,
        combine(
            &census,
            &[("boundB_s2", 7), ("boundB_s3", 6), ("boundSym_s2", 7), ("boundSym_s3", 6), ("boundSym_s4", 6)],
        ),
    );
    results.insert(6, criterion_6(&census, field));
    results.insert(
        7,
        combine(
            &census,
            &[
                ("key2_identity", 7),
                ("key3_structure", 6),
                ("red0_sweep", 7),
                ("degree_complex_identity", 7),
                ("complex_combine", 7),
                ("cone_acyclicity", 7),
                ("certificate_soundness", 7),
            ],
        ),
    );
    results.insert(8, criterion_8(&census));

    let mut all = true;
    for (k, (ok, note)) in &results {
        all &= ok;
        println!("criterion {k}: {} | {note}", if *ok { "PASS" } else { "FAIL" });
    }
    println!("acceptance: {}/{} criteria passed", results.values().filter(|r| r.0).count(), results.len());
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
