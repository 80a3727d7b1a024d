//! Randomized formula-versus-oracle verification.
//!
//! Each family draws ideals satisfying the hypotheses of one group of
//! statements, evaluates the closed forms, and compares them with the colon
//! chain. Proven statements are asserted; open questions (equality of
//! `sat(I^k)` and `sat(I^{k})` for m-primary ideals) are only tallied.
//!
//! Instance `i` draws from its own ChaCha stream, so the report depends on
//! nothing but the configuration.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::ValueEnum;
use monosat_core::powers::symbolic_power_min_bound;
use monosat_core::sat::{max_component_sat, sat};
use monosat_core::{
    bracket_symbolic_power, colon_stable_fast, compare_powers, irreducible_decomposition,
    is_m_primary, primary_decomposition, sat_irreducible_power, sat_stable, sat_two_vars,
    sat_upper_bound, stable_closure, symbolic_power_min, two_variable_decomposition,
    IrreducibleComponent, Monomial, MonomialIdeal,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::format::IdealDocument;

#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, ValueEnum,
)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum Family {
    Irreducible,
    Stable,
    TwoVar,
    MPrimary,
    EquigeneratedMPrimary,
    General,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Irreducible => "irreducible",
            Family::Stable => "stable",
            Family::TwoVar => "two_var",
            Family::MPrimary => "m_primary",
            Family::EquigeneratedMPrimary => "equigenerated_m_primary",
            Family::General => "general",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub family: Family,
    pub seed: u64,
    pub instances: usize,
    pub n_max: usize,
    pub exp_max: u64,
    pub gens_max: usize,
    pub k_max: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid verify configuration: {0} must be positive")]
pub struct ConfigError(&'static str);

impl VerifyConfig {
    pub fn new(family: Family, seed: u64, instances: usize) -> Self {
        VerifyConfig {
            family,
            seed,
            instances,
            n_max: 3,
            exp_max: 4,
            gens_max: 4,
            k_max: 3,
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.instances == 0 {
            return Err(ConfigError("instances"));
        }
        if self.n_max == 0 {
            return Err(ConfigError("n_max"));
        }
        if self.exp_max == 0 {
            return Err(ConfigError("exp_max"));
        }
        if self.gens_max == 0 {
            return Err(ConfigError("gens_max"));
        }
        if self.k_max == 0 {
            return Err(ConfigError("k_max"));
        }
        Ok(())
    }

    /// Command line reproducing instance `index` alone.
    pub fn repro(&self, index: usize) -> String {
        format!(
            "monosat verify --family {} --seed {} --n-max {} --exp-max {} --gens-max {} --k-max {} --only {}",
            self.family.as_str(),
            self.seed,
            self.n_max,
            self.exp_max,
            self.gens_max,
            self.k_max,
            index
        )
    }

    pub fn rng_for(&self, index: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index as u64);
        rng
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub statement: String,
    /// Proven statements fail the run; observations are only counted.
    pub proven: bool,
    pub holds: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub index: usize,
    pub ideal: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    pub repro: String,
    pub checks: Vec<CheckRecord>,
}

impl InstanceRecord {
    pub fn proven_failures(&self) -> usize {
        self.checks.iter().filter(|c| c.proven && !c.holds).count()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub holds: usize,
    pub total: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub instances: usize,
    pub proven_checks: usize,
    pub proven_failures: usize,
    pub per_statement: BTreeMap<String, Tally>,
    pub observations: BTreeMap<String, Tally>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub records: Vec<InstanceRecord>,
    pub summary: VerifySummary,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.summary.proven_failures == 0
    }

    pub fn observation(&self, statement: &str) -> Option<&Tally> {
        self.summary.observations.get(statement)
    }

    pub fn to_text(&self, quiet: bool) -> String {
        let c = &self.config;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "verify family={} seed={} instances={} n_max={} exp_max={} gens_max={} k_max={}",
            c.family.as_str(),
            c.seed,
            c.instances,
            c.n_max,
            c.exp_max,
            c.gens_max,
            c.k_max
        );
        for r in &self.records {
            let failed = r.proven_failures();
            if quiet && failed == 0 {
                continue;
            }
            let k = r.k.map(|k| format!(" k={}", k)).unwrap_or_default();
            let _ = writeln!(
                out,
                "#{} {} {}{} [{} checks]",
                r.index,
                if failed == 0 { "ok" } else { "FAIL" },
                r.ideal,
                k,
                r.checks.len()
            );
            for ch in r.checks.iter().filter(|ch| ch.proven && !ch.holds) {
                let _ = writeln!(out, "    violated: {} ({})", ch.statement, ch.detail);
                let _ = writeln!(out, "    repro: {}", r.repro);
            }
        }
        for (name, t) in &self.summary.per_statement {
            let _ = writeln!(out, "proven  {}/{}  {}", t.holds, t.total, name);
        }
        for (name, t) in &self.summary.observations {
            let _ = writeln!(out, "observed {}/{}  {}", t.holds, t.total, name);
        }
        let _ = writeln!(
            out,
            "result: {} ({} proven checks, {} failures)",
            if self.passed() { "PASS" } else { "FAIL" },
            self.summary.proven_checks,
            self.summary.proven_failures
        );
        out
    }
}

// ---- instance generators ---------------------------------------------------

pub fn random_monomial<R: Rng>(rng: &mut R, n: usize, exp_max: u64) -> Monomial {
    Monomial::new((0..n).map(|_| rng.gen_range(0..=exp_max)).collect())
}

fn random_nonunit_monomial<R: Rng>(rng: &mut R, n: usize, exp_max: u64) -> Monomial {
    loop {
        let u = random_monomial(rng, n, exp_max);
        if !u.is_one() {
            return u;
        }
    }
}

/// Full support three times out of four, otherwise some variables dropped.
pub fn random_irreducible<R: Rng>(rng: &mut R, n_max: usize, exp_max: u64) -> IrreducibleComponent {
    let n = rng.gen_range(1..=n_max);
    let mut exps: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=exp_max)).collect();
    if n >= 2 && rng.gen_ratio(1, 4) {
        let drop = rng.gen_range(1..n);
        let mut idx: Vec<usize> = (0..n).collect();
        idx.shuffle(rng);
        for &i in &idx[..drop] {
            exps[i] = 0;
        }
    }
    IrreducibleComponent::new(exps).expect("at least one exponent survives")
}

/// Stable (or strongly stable) closure of random monomials.
pub fn random_stable<R: Rng>(
    rng: &mut R,
    n_max: usize,
    exp_max: u64,
    gens_max: usize,
) -> MonomialIdeal {
    let n = rng.gen_range(1..=n_max);
    let count = rng.gen_range(1..=gens_max);
    let seeds: Vec<Monomial> = (0..count)
        .map(|_| random_nonunit_monomial(rng, n, exp_max))
        .collect();
    let strong = rng.gen_bool(0.5);
    stable_closure(seeds, strong).expect("non-empty seeds")
}

/// Stable closure containing `x_n^d`, hence m-primary with `x_n^d` minimal.
pub fn random_m_primary_stable<R: Rng>(
    rng: &mut R,
    n_max: usize,
    exp_max: u64,
    gens_max: usize,
) -> MonomialIdeal {
    let n = rng.gen_range(1..=n_max);
    let d = rng.gen_range(1..=exp_max);
    let count = rng.gen_range(0..gens_max);
    let mut seeds: Vec<Monomial> = (0..count)
        .map(|_| random_nonunit_monomial(rng, n, exp_max))
        .filter(|u| u.pure_power_var() != Some(n - 1))
        .collect();
    seeds.push(Monomial::pure_power(n, n - 1, d));
    let strong = rng.gen_bool(0.5);
    stable_closure(seeds, strong).expect("non-empty seeds")
}

pub fn random_two_var<R: Rng>(rng: &mut R, exp_max: u64, gens_max: usize) -> MonomialIdeal {
    let count = rng.gen_range(1..=gens_max);
    let gens = (0..count).map(|_| random_nonunit_monomial(rng, 2, exp_max));
    MonomialIdeal::new(2, gens).expect("two variables")
}

/// Pure powers of every variable plus random monomials below them.
pub fn random_m_primary<R: Rng>(
    rng: &mut R,
    n_max: usize,
    exp_max: u64,
    gens_max: usize,
) -> MonomialIdeal {
    let n = rng.gen_range(1..=n_max);
    let frame: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=exp_max)).collect();
    let mut gens: Vec<Monomial> = frame
        .iter()
        .enumerate()
        .map(|(i, &a)| Monomial::pure_power(n, i, a))
        .collect();
    let extra = rng.gen_range(0..=gens_max);
    for _ in 0..extra {
        let u = Monomial::new(frame.iter().map(|&a| rng.gen_range(0..a)).collect());
        if !u.is_one() {
            gens.push(u);
        }
    }
    MonomialIdeal::new(n, gens).expect("consistent dimension")
}

/// Random monomials of one degree `d` together with every `x_i^d`.
pub fn random_equigenerated<R: Rng>(
    rng: &mut R,
    n_max: usize,
    exp_max: u64,
    gens_max: usize,
) -> MonomialIdeal {
    let n = rng.gen_range(1..=n_max);
    let d = rng.gen_range(1..=exp_max);
    let mut gens: Vec<Monomial> = (0..n).map(|i| Monomial::pure_power(n, i, d)).collect();
    let extra = rng.gen_range(0..=gens_max);
    for _ in 0..extra {
        let mut e = vec![0u64; n];
        for _ in 0..d {
            e[rng.gen_range(0..n)] += 1;
        }
        gens.push(Monomial::new(e));
    }
    MonomialIdeal::new(n, gens).expect("consistent dimension")
}

pub fn random_general<R: Rng>(
    rng: &mut R,
    n_max: usize,
    exp_max: u64,
    gens_max: usize,
) -> MonomialIdeal {
    let n = rng.gen_range(1..=n_max);
    let count = rng.gen_range(1..=gens_max);
    let gens = (0..count).map(|_| random_nonunit_monomial(rng, n, exp_max));
    MonomialIdeal::new(n, gens).expect("consistent dimension")
}

/// A proper squarefree ideal.
pub fn random_squarefree<R: Rng>(rng: &mut R, n_max: usize, gens_max: usize) -> MonomialIdeal {
    random_general(rng, n_max, 1, gens_max)
}

// ---- checks ------------------------------------------------------------------

type Outcome = Result<Vec<CheckRecord>, monosat_core::Error>;

fn proven(statement: &str, holds: bool, detail: String) -> CheckRecord {
    CheckRecord {
        statement: statement.to_string(),
        proven: true,
        holds,
        detail,
    }
}

fn observed(statement: &str, holds: bool, detail: String) -> CheckRecord {
    CheckRecord {
        statement: statement.to_string(),
        proven: false,
        holds,
        detail,
    }
}

pub const IRREDUCIBLE_SAT: &str = "sat(q^k) = t_k";
pub const IRREDUCIBLE_COLON: &str = "q^k : m^(t_k - 1) = m";
pub const STABLE_SAT: &str = "stable: sat(I) = max x_n-exponent";
pub const STABLE_COLON: &str = "stable: I : m^k = I : x_n^k (k = 0..5)";
pub const STABLE_POWER_COLON: &str = "m-primary stable: I^k : m^(kd - 1) = m";
pub const STABLE_POWER_SAT: &str = "m-primary stable: sat(I^k) = kd";
pub const STABLE_THREE_WAY: &str = "m-primary stable: sat(I^k) = max sat(q_i^k) = sat(I^{k})";
pub const TWO_VAR_SAT: &str = "two variables: sat(I) = s - a_m - b_1 - 1";
pub const TWO_VAR_DECOMP: &str = "two variables: staircase decomposition is the irredundant one";
pub const BOUND: &str = "sat(I) ≤ max sat(q_i)";
pub const BOUND_EQUALITY: &str = "sat(I) = max sat(q_i) iff m-primary (bound > 0)";
pub const PRIMARY_BOUND: &str = "sat(I) ≤ max sat(Q_j) over primary components";
pub const SYMBOLIC_BOUND: &str = "sat(I^(k)) ≤ max sat(Q_j^k) over minimal primes";
pub const SQUAREFREE_SYMBOLIC: &str = "squarefree: sat(I^(k)) = k if I = m else 0";
pub const CONJECTURE_EQUALITY: &str = "m-primary: sat(I^{k}) = sat(I^k)";

fn check_irreducible(q: &IrreducibleComponent, k: u64) -> Outcome {
    let qk = q.to_ideal().power(k)?;
    let formula = sat_irreducible_power(q, k)?;
    let oracle = sat(&qk)? as u64;
    let mut out = vec![proven(
        IRREDUCIBLE_SAT,
        formula == oracle,
        format!("formula {} oracle {}", formula, oracle),
    )];
    if q.has_full_support() {
        let n = q.dim();
        let m = MonomialIdeal::maximal(n);
        let colon = qk.colon(&MonomialIdeal::maximal_power(n, formula - 1))?;
        out.push(proven(
            IRREDUCIBLE_COLON,
            colon == m,
            format!("colon {}", colon),
        ));
    }
    Ok(out)
}

fn check_compare(ideal: &MonomialIdeal, k: u64, tally_equality: bool) -> Outcome {
    let cmp = compare_powers(ideal, k)?;
    let mut out: Vec<CheckRecord> = cmp
        .checks
        .iter()
        .map(|c| {
            proven(
                c.statement,
                c.holds,
                format!(
                    "sat(I^k)={} sat(I^{{k}})={} max sat(q_i^k)={}",
                    cmp.sat_ordinary, cmp.sat_bracket, cmp.sat_bound_bracket
                ),
            )
        })
        .collect();
    if tally_equality && cmp.m_primary {
        out.push(observed(
            CONJECTURE_EQUALITY,
            cmp.sat_ordinary == cmp.sat_bracket,
            format!(
                "sat(I^k)={} sat(I^{{k}})={}",
                cmp.sat_ordinary, cmp.sat_bracket
            ),
        ));
    }
    Ok(out)
}

fn check_stable(ideal: &MonomialIdeal, k: u64) -> Outcome {
    let n = ideal.dim();
    let formula = sat_stable(ideal)?;
    let oracle = sat(ideal)? as u64;
    let mut out = vec![proven(
        STABLE_SAT,
        formula == oracle,
        format!("formula {} oracle {}", formula, oracle),
    )];
    let mut colon_ok = true;
    let mut bad = String::new();
    for j in 0..=5 {
        if colon_stable_fast(ideal, j)? != ideal.colon(&MonomialIdeal::maximal_power(n, j))? {
            colon_ok = false;
            bad = format!("differs at k={}", j);
            break;
        }
    }
    out.push(proven(STABLE_COLON, colon_ok, bad));

    if is_m_primary(ideal)? {
        let d = ideal
            .gens()
            .iter()
            .find(|g| g.pure_power_var() == Some(n - 1))
            .map(|g| g.exponent(n - 1))
            .expect("m-primary ideal has a pure power of x_n");
        let ik = ideal.power(k)?;
        let colon = ik.colon(&MonomialIdeal::maximal_power(n, k * d - 1))?;
        out.push(proven(
            STABLE_POWER_COLON,
            colon == MonomialIdeal::maximal(n),
            format!("d={}", d),
        ));
        let sat_k = sat(&ik)? as u64;
        out.push(proven(
            STABLE_POWER_SAT,
            sat_k == k * d,
            format!("sat {} kd {}", sat_k, k * d),
        ));
        let dec = irreducible_decomposition(ideal)?;
        let bound = max_component_sat(&dec.components, k)?;
        let bracket = sat(&bracket_symbolic_power(ideal, k)?)? as u64;
        out.push(proven(
            STABLE_THREE_WAY,
            sat_k == bound && bound == bracket,
            format!("sat(I^k)={} max={} sat(I^{{k}})={}", sat_k, bound, bracket),
        ));
    }
    Ok(out)
}

fn check_two_var(ideal: &MonomialIdeal) -> Outcome {
    let formula = sat_two_vars(ideal)?;
    let oracle = sat(ideal)? as u64;
    let stair = two_variable_decomposition(ideal)?;
    let split = irreducible_decomposition(ideal)?;
    let back = stair.intersection()?;
    Ok(vec![
        proven(
            TWO_VAR_SAT,
            formula == oracle,
            format!("formula {} oracle {}", formula, oracle),
        ),
        proven(
            TWO_VAR_DECOMP,
            stair == split && &back == ideal,
            format!("{} components", stair.components.len()),
        ),
    ])
}

fn check_bounds(ideal: &MonomialIdeal) -> Outcome {
    let oracle = sat(ideal)? as u64;
    let bound = sat_upper_bound(ideal)?;
    let m_primary = is_m_primary(ideal)?;
    let mut out = vec![proven(
        BOUND,
        oracle <= bound,
        format!("sat {} bound {}", oracle, bound),
    )];
    if bound > 0 {
        out.push(proven(
            BOUND_EQUALITY,
            (oracle == bound) == m_primary,
            format!("sat {} bound {} m-primary {}", oracle, bound, m_primary),
        ));
    }
    let mut worst = 0;
    for p in primary_decomposition(ideal)? {
        worst = worst.max(sat(&p.ideal)? as u64);
    }
    out.push(proven(
        PRIMARY_BOUND,
        oracle <= worst,
        format!("sat {} primary max {}", oracle, worst),
    ));
    Ok(out)
}

fn check_symbolic(ideal: &MonomialIdeal, k: u64) -> Outcome {
    let sym = sat(&symbolic_power_min(ideal, k)?)?;
    let bound = symbolic_power_min_bound(ideal, k)?;
    let mut out = vec![proven(
        SYMBOLIC_BOUND,
        sym <= bound,
        format!("sat {} bound {}", sym, bound),
    )];
    if ideal.is_squarefree() {
        let expected = if *ideal == MonomialIdeal::maximal(ideal.dim()) {
            k as usize
        } else {
            0
        };
        out.push(proven(
            SQUAREFREE_SYMBOLIC,
            sym == expected,
            format!("sat {} expected {}", sym, expected),
        ));
    }
    Ok(out)
}

fn generate(config: &VerifyConfig, index: usize) -> (InstanceRecord, Outcome) {
    let mut rng = config.rng_for(index);
    let c = config;
    let k = rng.gen_range(1..=c.k_max);
    let (ideal, k, outcome) = match c.family {
        Family::Irreducible => {
            let q = random_irreducible(&mut rng, c.n_max, c.exp_max);
            (q.to_ideal(), Some(k), check_irreducible(&q, k))
        }
        Family::Stable => {
            let i = if rng.gen_bool(0.5) {
                random_m_primary_stable(&mut rng, c.n_max, c.exp_max, c.gens_max)
            } else {
                random_stable(&mut rng, c.n_max, c.exp_max, c.gens_max)
            };
            let outcome = check_stable(&i, k);
            (i, Some(k), outcome)
        }
        Family::TwoVar => {
            let i = random_two_var(&mut rng, c.exp_max, c.gens_max);
            let outcome = check_two_var(&i);
            (i, None, outcome)
        }
        Family::MPrimary => {
            let i = random_m_primary(&mut rng, c.n_max, c.exp_max, c.gens_max);
            let outcome = check_bounds(&i).and_then(|mut v| {
                v.extend(check_compare(&i, k, true)?);
                Ok(v)
            });
            (i, Some(k), outcome)
        }
        Family::EquigeneratedMPrimary => {
            let i = random_equigenerated(&mut rng, c.n_max, c.exp_max, c.gens_max);
            let outcome = check_compare(&i, k, true);
            (i, Some(k), outcome)
        }
        Family::General => {
            let i = random_general(&mut rng, c.n_max, c.exp_max, c.gens_max);
            let outcome = check_bounds(&i).and_then(|mut v| {
                v.extend(check_compare(&i, k, false)?);
                v.extend(check_symbolic(&i, k)?);
                Ok(v)
            });
            (i, Some(k), outcome)
        }
    };
    let record = InstanceRecord {
        index,
        ideal: IdealDocument::from_ideal(&ideal).to_text(),
        k,
        repro: c.repro(index),
        checks: Vec::new(),
    };
    (record, outcome)
}

/// Evaluates one instance.
pub fn run_instance(config: &VerifyConfig, index: usize) -> InstanceRecord {
    let (mut record, outcome) = generate(config, index);
    record.checks = match outcome {
        Ok(checks) => checks,
        Err(e) => vec![proven("computation completes", false, e.to_string())],
    };
    record
}

fn summarize(records: &[InstanceRecord]) -> VerifySummary {
    let mut per_statement: BTreeMap<String, Tally> = BTreeMap::new();
    let mut observations: BTreeMap<String, Tally> = BTreeMap::new();
    let mut proven_checks = 0;
    let mut proven_failures = 0;
    for r in records {
        for c in &r.checks {
            let slot = if c.proven {
                proven_checks += 1;
                if !c.holds {
                    proven_failures += 1;
                }
                per_statement.entry(c.statement.clone()).or_default()
            } else {
                observations.entry(c.statement.clone()).or_default()
            };
            slot.total += 1;
            if c.holds {
                slot.holds += 1;
            }
        }
    }
    VerifySummary {
        instances: records.len(),
        proven_checks,
        proven_failures,
        per_statement,
        observations,
    }
}

/// Runs `config.instances` instances, or only `only` when given.
pub fn run_verify_subset(
    config: &VerifyConfig,
    only: Option<usize>,
) -> Result<VerifyReport, ConfigError> {
    config.validate()?;
    let indices: Vec<usize> = match only {
        Some(i) => vec![i],
        None => (0..config.instances).collect(),
    };
    let records: Vec<InstanceRecord> = indices
        .par_iter()
        .map(|&i| run_instance(config, i))
        .collect();
    let summary = summarize(&records);
    Ok(VerifyReport {
        config: config.clone(),
        records,
        summary,
    })
}

pub fn run_verify(config: &VerifyConfig) -> Result<VerifyReport, ConfigError> {
    run_verify_subset(config, None)
}
