//! Symbolic powers `I^(k)` and `I^{k}` and how their saturation numbers
//! compare with the ordinary power `I^k`.

use crate::decomp::{
    irreducible_decomposition, is_m_primary, minimal_primes, primary_decomposition,
};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::sat::{max_component_sat, sat};

fn intersect_all<I>(n: usize, ideals: I) -> Result<MonomialIdeal>
where
    I: IntoIterator<Item = Result<MonomialIdeal>>,
{
    let mut acc = MonomialIdeal::unit(n);
    for i in ideals {
        acc = acc.intersect(&i?)?;
    }
    Ok(acc)
}

/// `I^(k)`: the intersection of `Q^k` over the primary components `Q` whose
/// radical is a minimal prime of `I`.
pub fn symbolic_power_min(ideal: &MonomialIdeal, k: u64) -> Result<MonomialIdeal> {
    if k == 0 {
        return Err(Error::ZeroPower);
    }
    let minimal = minimal_primes(ideal)?;
    let primary = primary_decomposition(ideal)?;
    intersect_all(
        ideal.dim(),
        primary
            .iter()
            .filter(|p| minimal.contains(&p.support))
            .map(|p| p.ideal.power(k)),
    )
}

/// `I^{k}`: the intersection of `q^k` over all irredundant irreducible
/// components `q` of `I`.
pub fn bracket_symbolic_power(ideal: &MonomialIdeal, k: u64) -> Result<MonomialIdeal> {
    if k == 0 {
        return Err(Error::ZeroPower);
    }
    let dec = irreducible_decomposition(ideal)?;
    intersect_all(
        ideal.dim(),
        dec.components.iter().map(|q| q.to_ideal().power(k)),
    )
}

/// Upper bound for `sat(I^(k))`: the largest `sat(Q^k)` over primary
/// components with minimal radical, each computed by the colon chain.
pub fn symbolic_power_min_bound(ideal: &MonomialIdeal, k: u64) -> Result<usize> {
    if k == 0 {
        return Err(Error::ZeroPower);
    }
    let minimal = minimal_primes(ideal)?;
    let mut best = 0;
    for p in primary_decomposition(ideal)? {
        if minimal.contains(&p.support) {
            best = best.max(sat(&p.ideal.power(k)?)?);
        }
    }
    Ok(best)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub statement: &'static str,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerComparison {
    pub k: u64,
    pub m_primary: bool,
    /// `I^k ⊆ I^{k}`.
    pub contains: bool,
    pub sat_ordinary: usize,
    pub sat_bracket: usize,
    /// `max sat(q_i^k)` over the irreducible components.
    pub sat_bound_bracket: u64,
    pub checks: Vec<Check>,
}

impl PowerComparison {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// Computes `I^k`, `I^{k}` and their saturation numbers, and evaluates the
/// statements that must hold between them.
pub fn compare_powers(ideal: &MonomialIdeal, k: u64) -> Result<PowerComparison> {
    if k == 0 {
        return Err(Error::ZeroPower);
    }
    let m_primary = is_m_primary(ideal)?;
    let dec = irreducible_decomposition(ideal)?;
    let ordinary = ideal.power(k)?;
    let bracket = bracket_symbolic_power(ideal, k)?;
    let contains = ordinary.is_subset_of(&bracket)?;
    let sat_ordinary = sat(&ordinary)?;
    let sat_bracket = sat(&bracket)?;
    let sat_bound_bracket = max_component_sat(&dec.components, k)?;

    let mut checks = vec![
        Check {
            statement: "I^k ⊆ I^{k}",
            holds: contains,
        },
        Check {
            statement: "sat(I^{k}) ≤ max sat(q_i^k)",
            holds: sat_bracket as u64 <= sat_bound_bracket,
        },
    ];
    if m_primary {
        checks.push(Check {
            statement: "sat(I^{k}) = max sat(q_i^k)",
            holds: sat_bracket as u64 == sat_bound_bracket,
        });
        checks.push(Check {
            statement: "sat(I^{k}) ≤ sat(I^k)",
            holds: sat_bracket <= sat_ordinary,
        });
    }
    Ok(PowerComparison {
        k,
        m_primary,
        contains,
        sat_ordinary,
        sat_bracket,
        sat_bound_bracket,
        checks,
    })
}
