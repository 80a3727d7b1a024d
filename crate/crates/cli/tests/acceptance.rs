//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

use std::path::PathBuf;
use std::process::Command;
use std::time::Instant;

use monosat::parse_ideal;
use monosat::verify::{
    random_squarefree, run_verify, Family, VerifyConfig, VerifyReport, CONJECTURE_EQUALITY,
    IRREDUCIBLE_SAT, STABLE_COLON, STABLE_POWER_COLON, STABLE_POWER_SAT, STABLE_SAT,
    STABLE_THREE_WAY, TWO_VAR_DECOMP, TWO_VAR_SAT,
};
use monosat_core::{
    compare_powers, is_m_primary, sat_irreducible_power, sat_stable, sat_two_vars, sat_upper_bound,
    saturation_chain, stable_closure, symbolic_power_min, two_variable_decomposition,
    IrreducibleComponent, MonomialIdeal,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ideal(text: &str) -> MonomialIdeal {
    parse_ideal(text).expect("fixture parses").ideal
}

fn sat(i: &MonomialIdeal) -> usize {
    saturation_chain(i).expect("chain").sat
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

/// Every instance ran, no proven statement failed, and each listed
/// statement was checked at least `min` times without failure.
fn require(report: &VerifyReport, statements: &[(&str, usize)]) -> Result<(), String> {
    ensure(
        report.passed(),
        format!("{} proven failures", report.summary.proven_failures),
    )?;
    for (name, min) in statements {
        let t = report
            .summary
            .per_statement
            .get(*name)
            .ok_or(format!("'{}' never checked", name))?;
        ensure(
            t.total >= *min,
            format!("'{}' checked {} < {} times", name, t.total, min),
        )?;
        ensure(
            t.holds == t.total,
            format!("'{}' holds {}/{}", name, t.holds, t.total),
        )?;
    }
    Ok(())
}

fn tally(report: &VerifyReport, name: &str) -> usize {
    report
        .summary
        .per_statement
        .get(name)
        .map_or(0, |t| t.total)
}

fn criterion_1() -> Outcome {
    let i = ideal("n=3; x1^2, x2")
        .intersect(&ideal("n=3; x1, x2^2"))
        .and_then(|a| a.intersect(&ideal("n=3; x1^3, x2^2, x3^2")))
        .map_err(|e| e.to_string())?;
    let s = sat(&i);
    let bound = sat_upper_bound(&i).map_err(|e| e.to_string())?;
    let mp = is_m_primary(&i).map_err(|e| e.to_string())?;
    ensure(
        s == 3 && bound == 5 && !mp,
        format!("sat {} bound {} m-primary {}", s, bound, mp),
    )?;
    Ok(format!("sat 3, bound 5, not m-primary for {}", i))
}

fn criterion_2() -> Outcome {
    let q = IrreducibleComponent::new(vec![3, 2, 2]).map_err(|e| e.to_string())?;
    let t = sat_irreducible_power(&q, 1).map_err(|e| e.to_string())?;
    let colon = q
        .to_ideal()
        .colon(&MonomialIdeal::maximal_power(3, 4))
        .map_err(|e| e.to_string())?;
    ensure(t == 5, format!("t_1 = {}", t))?;
    ensure(
        colon == MonomialIdeal::maximal(3),
        format!("q : m^4 = {}", colon),
    )?;
    let config = VerifyConfig {
        n_max: 4,
        exp_max: 5,
        k_max: 3,
        ..VerifyConfig::new(Family::Irreducible, 2, 200)
    };
    let report = run_verify(&config).map_err(|e| e.to_string())?;
    require(&report, &[(IRREDUCIBLE_SAT, 200)])?;
    Ok("t_1 = 5, q : m^4 = m, 200/200 random irreducible powers agree".into())
}

const STRONGLY_STABLE_GENS: &str =
    "n=4; x1^2, x1*x2*x3^2, x1*x2^2*x3, x1*x2^3, x2^3*x3, x2^4, x2^2*x3^2, x1*x2^2*x4, x1*x2*x3*x4";

const STRONGLY_STABLE_SQUARE: &str = "n=4; x1^4, x1^3*x2^2*x4, x1^3*x2*x3*x4, x1^3*x2*x3^2, x1^3*x2^2*x3, \
    x1^3*x2^3, x1^2*x2^4, x1^2*x2^3*x3, x1^2*x2^2*x3^2, x1*x2^6*x4, x1*x2^7, x2^8, x1*x2^5*x3*x4, \
    x1*x2^6*x3, x2^7*x3, x1*x2^4*x3^2*x4, x1*x2^3*x3^3*x4, x1*x2^3*x3^4, x1*x2^4*x3^3, x1*x2^5*x3^2, \
    x2^6*x3^2, x2^5*x3^3, x2^4*x3^4";

fn criterion_3() -> Outcome {
    let seeds = ideal("n=4; x1^2, x2^2*x3^2, x1*x2*x3*x4");
    let closure = stable_closure(seeds.gens().iter().cloned(), true).map_err(|e| e.to_string())?;
    let listed = ideal(STRONGLY_STABLE_GENS);
    ensure(
        listed.num_gens() == 9 && closure == listed,
        format!("closure {}", closure),
    )?;
    let square = closure.power(2).map_err(|e| e.to_string())?;
    let listed_square = ideal(STRONGLY_STABLE_SQUARE);
    ensure(
        listed_square.num_gens() == 23 && square == listed_square,
        format!("square {}", square),
    )?;
    ensure(
        sat(&closure) == 1 && sat(&square) == 1,
        "sat differs from 1",
    )?;
    Ok("9-generator closure and 23-generator square match, sat(I) = sat(I^2) = 1".into())
}

const STAIRCASE: &str = "n=2; x1^50, x1^40*x2^10, x1^39*x2^34, x1^38*x2^35, x1^37*x2^36, \
    x1^36*x2^37, x1^35*x2^38, x1^34*x2^39, x1^10*x2^40, x2^50";

fn criterion_4() -> Outcome {
    let i = ideal(STAIRCASE);
    ensure(i.num_gens() == 10, "expected 10 generators")?;
    let square = i.power(2).map_err(|e| e.to_string())?;
    let formula = sat_two_vars(&square).map_err(|e| e.to_string())?;
    let oracle = sat(&square);
    ensure(
        formula == 119 && oracle == 119,
        format!("formula {} oracle {}", formula, oracle),
    )?;
    let dec = two_variable_decomposition(&i).map_err(|e| e.to_string())?;
    let mut bound = 0;
    for q in &dec.components {
        bound = bound.max(sat_irreducible_power(q, 2).map_err(|e| e.to_string())?);
    }
    ensure(bound == 113, format!("component bound {}", bound))?;
    let cmp = compare_powers(&i, 2).map_err(|e| e.to_string())?;
    ensure(
        cmp.sat_bracket == 113 && cmp.sat_ordinary == 119 && cmp.all_hold(),
        format!(
            "compare: bracket {} ordinary {}",
            cmp.sat_bracket, cmp.sat_ordinary
        ),
    )?;
    Ok("sat(I^2) = 119 by formula and oracle, component bound 113, 113 < 119".into())
}

fn criterion_5() -> Outcome {
    for n in 2..=4 {
        let m = MonomialIdeal::maximal(n);
        for k in 1..=6u64 {
            let mk = m.power(k).map_err(|e| e.to_string())?;
            let formula = sat_irreducible_power(&IrreducibleComponent::maximal(n), k)
                .map_err(|e| e.to_string())?;
            let stable = sat_stable(&mk).map_err(|e| e.to_string())?;
            let oracle = sat(&mk) as u64;
            ensure(
                formula == k && stable == k && oracle == k,
                format!(
                    "n={} k={}: formula {} stable {} oracle {}",
                    n, k, formula, stable, oracle
                ),
            )?;
        }
    }
    Ok("sat(m^k) = k for k in 1..=6, n in 2..=4".into())
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut checked = 0;
    let mut maximal = 0;
    while checked - maximal < 100 {
        let i = random_squarefree(&mut rng, 5, 5);
        let n = i.dim();
        let is_m = i == MonomialIdeal::maximal(n);
        let s = sat(&i);
        ensure(s == usize::from(is_m), format!("sat {} for {}", s, i))?;
        for k in 1..=3u64 {
            let sym = sat(&symbolic_power_min(&i, k).map_err(|e| e.to_string())?);
            let expected = if is_m { k as usize } else { 0 };
            ensure(
                sym == expected,
                format!("sat(I^({})) = {} for {}", k, sym, i),
            )?;
        }
        checked += 1;
        maximal += usize::from(is_m);
    }
    Ok(format!(
        "{} squarefree ideals other than m: sat 0 and sat(I^(k)) = 0; {} equal to m: sat 1 and sat(I^(k)) = k",
        checked - maximal, maximal
    ))
}

fn criterion_7() -> Outcome {
    let config = VerifyConfig {
        n_max: 4,
        exp_max: 3,
        gens_max: 4,
        k_max: 3,
        ..VerifyConfig::new(Family::Stable, 7, 300)
    };
    let report = run_verify(&config).map_err(|e| e.to_string())?;
    require(
        &report,
        &[
            (STABLE_SAT, 300),
            (STABLE_COLON, 300),
            (STABLE_POWER_COLON, 50),
            (STABLE_POWER_SAT, 50),
            (STABLE_THREE_WAY, 50),
        ],
    )?;
    Ok(format!(
        "{} stable ideals agree with formula and fast colon, {} m-primary stable powers satisfy all three",
        tally(&report, STABLE_SAT),
        tally(&report, STABLE_THREE_WAY)
    ))
}

fn criterion_8() -> Outcome {
    let config = VerifyConfig {
        exp_max: 12,
        gens_max: 6,
        ..VerifyConfig::new(Family::TwoVar, 8, 200)
    };
    let report = run_verify(&config).map_err(|e| e.to_string())?;
    require(&report, &[(TWO_VAR_SAT, 200), (TWO_VAR_DECOMP, 200)])?;
    Ok(
        "200/200 two-variable ideals: formula = oracle, staircase components re-intersect to I"
            .into(),
    )
}

fn criterion_9() -> Outcome {
    let general = run_verify(&VerifyConfig {
        n_max: 4,
        exp_max: 4,
        gens_max: 5,
        ..VerifyConfig::new(Family::General, 9, 200)
    })
    .map_err(|e| e.to_string())?;
    let primary = run_verify(&VerifyConfig {
        gens_max: 5,
        ..VerifyConfig::new(Family::MPrimary, 9, 100)
    })
    .map_err(|e| e.to_string())?;
    require(
        &general,
        &[
            ("I^k ⊆ I^{k}", 200),
            ("sat(I^{k}) ≤ max sat(q_i^k)", 200),
            (monosat::verify::PRIMARY_BOUND, 200),
            (monosat::verify::SYMBOLIC_BOUND, 200),
        ],
    )?;
    require(
        &primary,
        &[
            ("sat(I^{k}) = max sat(q_i^k)", 100),
            ("sat(I^{k}) ≤ sat(I^k)", 100),
        ],
    )?;
    Ok(format!(
        "{} general and {} m-primary instances: containment, bounds, equality and inequality hold",
        general.summary.instances, primary.summary.instances
    ))
}

fn criterion_10() -> Outcome {
    let config = VerifyConfig {
        gens_max: 5,
        ..VerifyConfig::new(Family::EquigeneratedMPrimary, 10, 150)
    };
    let report = run_verify(&config).map_err(|e| e.to_string())?;
    require(&report, &[("sat(I^{k}) ≤ sat(I^k)", 150)])?;
    let eq = report
        .observation(CONJECTURE_EQUALITY)
        .ok_or("equality not tallied")?;
    Ok(format!(
        "0 violations of ≤ in 150 instances, equality observed {}/{} (reported only)",
        eq.holds, eq.total
    ))
}

fn criterion_11() -> Outcome {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance");
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let file = dir.join("ideal.txt");
    std::fs::write(&file, "n=3; x1^3, x2^2, x1^2*x3^2, x1*x2*x3^2\n").map_err(|e| e.to_string())?;
    let p = file.to_str().ok_or("path")?;
    let cases: Vec<Vec<&str>> = vec![
        vec!["sat", p, "--chain"],
        vec!["decompose", p],
        vec!["power", p, "-k", "2"],
        vec!["symbolic", p, "-k", "2", "--kind", "min"],
        vec!["symbolic", p, "-k", "2", "--kind", "bracket"],
        vec!["stability", p],
        vec!["closure", p, "--strong"],
        vec!["compare", p, "-k", "2"],
        vec![
            "verify",
            "--family",
            "general",
            "--seed",
            "11",
            "--instances",
            "60",
        ],
    ];
    let mut runs = 0;
    for args in &cases {
        for json in [false, true] {
            let mut a = args.clone();
            if json {
                a.push("--json");
            }
            let once = || {
                Command::new(env!("CARGO_BIN_EXE_monosat"))
                    .args(&a)
                    .output()
                    .map_err(|e| e.to_string())
            };
            let (first, second) = (once()?, once()?);
            ensure(
                first.status.success(),
                format!("{:?} exited {:?}", a, first.status.code()),
            )?;
            ensure(
                first.stdout == second.stdout,
                format!("{:?} output differs", a),
            )?;
            runs += 1;
        }
    }
    for family in [
        Family::Irreducible,
        Family::Stable,
        Family::TwoVar,
        Family::MPrimary,
        Family::General,
    ] {
        let c = VerifyConfig::new(family, 42, 50);
        ensure(
            run_verify(&c) == run_verify(&c),
            format!("{:?} report differs", family),
        )?;
    }
    Ok(format!(
        "{} subcommand invocations byte-identical across two runs",
        runs
    ))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("three-component fixture", criterion_1),
        ("irreducible closed form", criterion_2),
        ("strongly stable fixture", criterion_3),
        ("two-variable fixture", criterion_4),
        ("maximal-ideal ladder", criterion_5),
        ("squarefree laws", criterion_6),
        ("stable-ideal suite", criterion_7),
        ("two-variable suite", criterion_8),
        ("symbolic and bracket laws", criterion_9),
        ("conjecture explorer", criterion_10),
        ("determinism", criterion_11),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(msg) => println!("criterion {:>2} PASS {}: {}", i + 1, name, msg),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL {}: {}", i + 1, name, msg);
            }
        }
    }
    let elapsed = start.elapsed();
    println!(
        "acceptance: {}/{} passed in {:.2?}",
        criteria.len() - failed,
        criteria.len(),
        elapsed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
