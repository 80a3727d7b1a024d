//! Subcommands. Each one renders plain text or a JSON object carrying a
//! `"command"` key, and reports an exit status: 0 on success, 1 when a
//! checked statement fails, 2 on bad input.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use monosat_core::{
    bracket_symbolic_power, compare_powers, irreducible_decomposition, is_m_primary,
    minimal_primes, primary_decomposition, sat_stable, sat_upper_bound, saturation_chain,
    stability_class, stable_closure, symbolic_power_min, MonomialIdeal, StabilityClass,
};
use serde_json::{json, Value};

use crate::format::{parse_any, IdealDocument};
use crate::verify::{run_verify_subset, Family, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ASSERTION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "monosat",
    version,
    about = "Saturation numbers and decompositions of monomial ideals"
)]
pub struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Omit colon chains and per-instance lines.
    #[arg(long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SymbolicKind {
    Min,
    Bracket,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Saturation number and saturation of an ideal.
    Sat {
        /// Ideal file, or `-` for stdin.
        file: PathBuf,
        /// Also print the chain I : m^j.
        #[arg(long)]
        chain: bool,
    },
    /// Irreducible and primary decompositions.
    Decompose { file: PathBuf },
    /// Ordinary power I^k.
    Power {
        file: PathBuf,
        #[arg(short, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
    },
    /// Symbolic power I^(k) (min) or I^{k} (bracket).
    Symbolic {
        file: PathBuf,
        #[arg(short, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[arg(long, value_enum, default_value = "min")]
        kind: SymbolicKind,
    },
    /// Stability class of an ideal.
    Stability { file: PathBuf },
    /// Smallest stable ideal containing the generators.
    Closure {
        file: PathBuf,
        /// Strongly stable closure.
        #[arg(long)]
        strong: bool,
    },
    /// Randomized formula-versus-oracle checks.
    Verify {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        instances: usize,
        #[arg(long, default_value_t = 3)]
        n_max: usize,
        #[arg(long, default_value_t = 4)]
        exp_max: u64,
        #[arg(long, default_value_t = 4)]
        gens_max: usize,
        #[arg(long, default_value_t = 3)]
        k_max: u64,
        /// Run a single instance by index.
        #[arg(long)]
        only: Option<usize>,
    },
    /// Compare sat(I^k) with sat(I^{k}).
    Compare {
        file: PathBuf,
        #[arg(short, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Sat { .. } => "sat",
            Command::Decompose { .. } => "decompose",
            Command::Power { .. } => "power",
            Command::Symbolic { .. } => "symbolic",
            Command::Stability { .. } => "stability",
            Command::Closure { .. } => "closure",
            Command::Verify { .. } => "verify",
            Command::Compare { .. } => "compare",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

struct Rendered {
    text: String,
    json: Value,
    code: i32,
}

fn ok(text: String, json: Value) -> Rendered {
    Rendered {
        text,
        json,
        code: EXIT_OK,
    }
}

fn doc(ideal: &MonomialIdeal) -> Value {
    serde_json::to_value(IdealDocument::from_ideal(ideal)).expect("document serializes")
}

fn text(ideal: &MonomialIdeal) -> String {
    IdealDocument::from_ideal(ideal).to_text()
}

fn variables(support: &[usize]) -> Vec<usize> {
    support.iter().map(|v| v + 1).collect()
}

fn prime_text(support: &[usize]) -> String {
    let vars: Vec<String> = support.iter().map(|v| format!("x{}", v + 1)).collect();
    format!("({})", vars.join(", "))
}

fn read_input(path: &PathBuf) -> Result<String, String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("stdin: {}", e))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{}: {}", path.display(), e))
    }
}

fn load(path: &PathBuf, stderr: &mut String) -> Result<(IdealDocument, MonomialIdeal), String> {
    let src = read_input(path)?;
    let parsed = parse_any(&src).map_err(|e| format!("{}: {}", path.display(), e))?;
    if let Some(w) = parsed.warning {
        let _ = writeln!(stderr, "warning: {}: {}", path.display(), w);
    }
    Ok((parsed.doc, parsed.ideal))
}

type Step = Result<Rendered, String>;

fn core<T>(r: monosat_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn cmd_sat(input: &IdealDocument, ideal: &MonomialIdeal, chain: bool, quiet: bool) -> Step {
    let report = core(saturation_chain(ideal))?;
    let bound = if ideal.is_proper_nonzero() {
        Some(core(sat_upper_bound(ideal))?)
    } else {
        None
    };
    let show_chain = chain && !quiet;
    let mut t = String::new();
    let _ = writeln!(
        t,
        "ideal: {}",
        input.to_text().lines().last().unwrap_or_default()
    );
    let _ = writeln!(t, "sat: {}", report.sat);
    let _ = writeln!(t, "saturation: {}", text(&report.saturation));
    if let Some(b) = bound {
        let _ = writeln!(t, "upper bound: {}", b);
    }
    if show_chain {
        let _ = writeln!(t, "chain:");
        for (j, step) in report.chain.iter().enumerate() {
            let _ = writeln!(t, "  I:m^{} = {}", j, text(step));
        }
    }
    let mut j = json!({
        "command": "sat",
        "ideal": doc(ideal),
        "sat": report.sat,
        "saturation": doc(&report.saturation),
        "upper_bound": bound,
    });
    if show_chain {
        j["chain"] = Value::Array(report.chain.iter().map(doc).collect());
    }
    Ok(ok(t, j))
}

fn cmd_decompose(ideal: &MonomialIdeal) -> Step {
    let dec = core(irreducible_decomposition(ideal))?;
    let primary = core(primary_decomposition(ideal))?;
    let primes = core(minimal_primes(ideal))?;
    let m_primary = core(is_m_primary(ideal))?;
    let bound = core(sat_upper_bound(ideal))?;
    let mut t = String::new();
    let _ = writeln!(t, "ideal: {}", text(ideal));
    let _ = writeln!(t, "irreducible components: {}", dec.components.len());
    for q in &dec.components {
        let _ = writeln!(t, "  {}", text(&q.to_ideal()));
    }
    let _ = writeln!(t, "primary components: {}", primary.len());
    for p in &primary {
        let _ = writeln!(
            t,
            "  radical {}: {}",
            prime_text(&p.support),
            text(&p.ideal)
        );
    }
    let listed: Vec<String> = primes.iter().map(|p| prime_text(p)).collect();
    let _ = writeln!(t, "minimal primes: {}", listed.join(", "));
    let _ = writeln!(t, "m-primary: {}", m_primary);
    let _ = writeln!(t, "upper bound: {}", bound);
    let j = json!({
        "command": "decompose",
        "ideal": doc(ideal),
        "irreducible": dec.components.iter().map(|q| q.exponents().to_vec()).collect::<Vec<_>>(),
        "primary": primary.iter().map(|p| json!({
            "radical": variables(&p.support),
            "ideal": doc(&p.ideal),
        })).collect::<Vec<_>>(),
        "minimal_primes": primes.iter().map(|p| variables(p)).collect::<Vec<_>>(),
        "m_primary": m_primary,
        "upper_bound": bound,
    });
    Ok(ok(t, j))
}

fn cmd_power(ideal: &MonomialIdeal, k: u64) -> Step {
    let p = core(ideal.power(k))?;
    let t = format!(
        "power k={}: {}\ngenerators: {}\n",
        k,
        text(&p),
        p.num_gens()
    );
    Ok(ok(
        t,
        json!({ "command": "power", "k": k, "ideal": doc(ideal), "power": doc(&p) }),
    ))
}

fn cmd_symbolic(ideal: &MonomialIdeal, k: u64, kind: SymbolicKind) -> Step {
    let (p, label) = match kind {
        SymbolicKind::Min => (core(symbolic_power_min(ideal, k))?, "min"),
        SymbolicKind::Bracket => (core(bracket_symbolic_power(ideal, k))?, "bracket"),
    };
    let s = core(saturation_chain(&p))?.sat;
    let t = format!(
        "symbolic {} k={}: {}\ngenerators: {}\nsat: {}\n",
        label,
        k,
        text(&p),
        p.num_gens(),
        s
    );
    Ok(ok(
        t,
        json!({ "command": "symbolic", "kind": label, "k": k, "ideal": doc(ideal), "power": doc(&p), "sat": s }),
    ))
}

fn stable_sat(ideal: &MonomialIdeal, class: StabilityClass) -> Result<Option<u64>, String> {
    if class == StabilityClass::NotStable {
        Ok(None)
    } else {
        core(sat_stable(ideal)).map(Some)
    }
}

fn cmd_stability(ideal: &MonomialIdeal) -> Step {
    let class = core(stability_class(ideal))?;
    let s = stable_sat(ideal, class)?;
    let mut t = format!("ideal: {}\nclass: {}\n", text(ideal), class);
    if let Some(s) = s {
        let _ = writeln!(t, "sat: {}", s);
    }
    Ok(ok(
        t,
        json!({ "command": "stability", "ideal": doc(ideal), "class": class.to_string(), "sat": s }),
    ))
}

fn cmd_closure(ideal: &MonomialIdeal, strong: bool) -> Step {
    let closure = core(stable_closure(ideal.gens().iter().cloned(), strong))?;
    let class = core(stability_class(&closure))?;
    let s = stable_sat(&closure, class)?;
    let mut t = format!(
        "{} closure: {}\ngenerators: {}\nclass: {}\n",
        if strong { "strongly stable" } else { "stable" },
        text(&closure),
        closure.num_gens(),
        class
    );
    if let Some(s) = s {
        let _ = writeln!(t, "sat: {}", s);
    }
    Ok(ok(
        t,
        json!({
            "command": "closure",
            "strong": strong,
            "ideal": doc(ideal),
            "closure": doc(&closure),
            "class": class.to_string(),
            "sat": s,
        }),
    ))
}

fn cmd_compare(ideal: &MonomialIdeal, k: u64) -> Step {
    let cmp = core(compare_powers(ideal, k))?;
    let mut t = String::new();
    let _ = writeln!(t, "ideal: {}", text(ideal));
    let _ = writeln!(t, "k: {}", k);
    let _ = writeln!(t, "m-primary: {}", cmp.m_primary);
    let _ = writeln!(t, "sat(I^k): {}", cmp.sat_ordinary);
    let _ = writeln!(t, "sat(I^{{k}}): {}", cmp.sat_bracket);
    let _ = writeln!(t, "max sat(q_i^k): {}", cmp.sat_bound_bracket);
    for c in &cmp.checks {
        let _ = writeln!(
            t,
            "{} {}",
            if c.holds { "holds" } else { "FAILS" },
            c.statement
        );
    }
    let j = json!({
        "command": "compare",
        "ideal": doc(ideal),
        "k": k,
        "m_primary": cmp.m_primary,
        "contains": cmp.contains,
        "sat_ordinary": cmp.sat_ordinary,
        "sat_bracket": cmp.sat_bracket,
        "sat_bound_bracket": cmp.sat_bound_bracket,
        "checks": cmp.checks.iter().map(|c| json!({ "statement": c.statement, "holds": c.holds })).collect::<Vec<_>>(),
    });
    let code = if cmp.all_hold() {
        EXIT_OK
    } else {
        EXIT_ASSERTION
    };
    Ok(Rendered {
        text: t,
        json: j,
        code,
    })
}

fn cmd_verify(config: &VerifyConfig, only: Option<usize>, quiet: bool) -> Step {
    let report = run_verify_subset(config, only).map_err(|e| e.to_string())?;
    let mut j = serde_json::to_value(&report).expect("report serializes");
    j["command"] = json!("verify");
    j["passed"] = json!(report.passed());
    if quiet {
        j.as_object_mut().expect("object").remove("records");
    }
    let code = if report.passed() {
        EXIT_OK
    } else {
        EXIT_ASSERTION
    };
    Ok(Rendered {
        text: report.to_text(quiet),
        json: j,
        code,
    })
}

fn dispatch(cli: &Cli, stderr: &mut String) -> Step {
    let with_ideal = |path: &PathBuf, stderr: &mut String| load(path, stderr);
    match &cli.command {
        Command::Sat { file, chain } => {
            let (d, i) = with_ideal(file, stderr)?;
            cmd_sat(&d, &i, *chain, cli.quiet)
        }
        Command::Decompose { file } => cmd_decompose(&with_ideal(file, stderr)?.1),
        Command::Power { file, k } => cmd_power(&with_ideal(file, stderr)?.1, *k),
        Command::Symbolic { file, k, kind } => {
            cmd_symbolic(&with_ideal(file, stderr)?.1, *k, *kind)
        }
        Command::Stability { file } => cmd_stability(&with_ideal(file, stderr)?.1),
        Command::Closure { file, strong } => cmd_closure(&with_ideal(file, stderr)?.1, *strong),
        Command::Compare { file, k } => cmd_compare(&with_ideal(file, stderr)?.1, *k),
        Command::Verify {
            family,
            seed,
            instances,
            n_max,
            exp_max,
            gens_max,
            k_max,
            only,
        } => {
            let config = VerifyConfig {
                family: *family,
                seed: *seed,
                instances: *instances,
                n_max: *n_max,
                exp_max: *exp_max,
                gens_max: *gens_max,
                k_max: *k_max,
            };
            cmd_verify(&config, *only, cli.quiet)
        }
    }
}

/// Runs a parsed command line without touching stdout or stderr.
pub fn run(cli: &Cli) -> Output {
    let mut stderr = String::new();
    match dispatch(cli, &mut stderr) {
        Ok(r) => {
            let stdout = if cli.json {
                let mut s = serde_json::to_string_pretty(&r.json).expect("value serializes");
                s.push('\n');
                s
            } else {
                r.text
            };
            Output {
                stdout,
                stderr,
                code: r.code,
            }
        }
        Err(message) => {
            let _ = writeln!(stderr, "error: {}", message);
            let stdout = if cli.json {
                let j = json!({ "command": cli.command.name(), "error": message });
                format!(
                    "{}\n",
                    serde_json::to_string_pretty(&j).expect("value serializes")
                )
            } else {
                String::new()
            };
            Output {
                stdout,
                stderr,
                code: EXIT_INPUT,
            }
        }
    }
}
