//! Saturation numbers.
//!
//! [`saturation_chain`] walks `I ⊆ I:m ⊆ I:m^2 ⊆ ...` by repeated colon with
//! the maximal ideal and is the reference every closed form is checked
//! against. The remaining functions are closed forms for irreducible powers,
//! stable ideals and ideals in two variables, plus the bound coming from an
//! irreducible decomposition.

use crate::decomp::{
    irreducible_decomposition, require_proper_nonzero, two_variable_form, IrreducibleComponent,
};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::stability::{stability_class, StabilityClass};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaturationReport {
    /// `I:m^0, I:m^1, ...` ending with the first repeated term.
    pub chain: Vec<MonomialIdeal>,
    pub sat: usize,
    pub saturation: MonomialIdeal,
}

/// Computes the colon chain until it stabilizes.
///
/// Minimal generators are recomputed from scratch at every step. The zero and
/// unit ideals stabilize immediately and report `sat = 0`.
pub fn saturation_chain(ideal: &MonomialIdeal) -> Result<SaturationReport> {
    let m = MonomialIdeal::maximal(ideal.dim());
    let mut chain = vec![ideal.clone()];
    loop {
        let last = chain.last().expect("chain is non-empty");
        let next = last.colon(&m)?;
        let done = &next == last;
        chain.push(next);
        if done {
            break;
        }
    }
    let sat = chain.len() - 2;
    let saturation = chain.last().expect("chain is non-empty").clone();
    Ok(SaturationReport {
        chain,
        sat,
        saturation,
    })
}

/// Shorthand for `saturation_chain(ideal)?.sat`.
pub fn sat(ideal: &MonomialIdeal) -> Result<usize> {
    saturation_chain(ideal).map(|r| r.sat)
}

/// `sat(q^k)` in closed form.
///
/// For `q = (x_1^{a_1}, ..., x_n^{a_n})` with every `a_i > 0` this is
/// `t_k = k·a_max + Σ_{i≠i0} a_i − n + 1`, where `i0` is the (first) index of
/// a largest exponent. If `q` misses a variable then `S/q^k` has positive
/// depth and the answer is 0.
pub fn sat_irreducible_power(q: &IrreducibleComponent, k: u64) -> Result<u64> {
    if k == 0 {
        return Err(Error::ZeroPower);
    }
    if !q.has_full_support() {
        return Ok(0);
    }
    let exps = q.exponents();
    let (i0, &top) = exps
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.cmp(b.1).then_with(|| b.0.cmp(&a.0)))
        .expect("component has at least one variable");
    let mut rest: u64 = 0;
    for (i, &a) in exps.iter().enumerate() {
        if i != i0 {
            rest = rest.checked_add(a).ok_or(Error::Overflow)?;
        }
    }
    let n = exps.len() as u64;
    k.checked_mul(top)
        .and_then(|v| v.checked_add(rest))
        .and_then(|v| v.checked_add(1))
        .and_then(|v| v.checked_sub(n))
        .ok_or(Error::Overflow)
}

/// `u ∈ q^k` without forming the power: `Σ_{i ∈ supp q} ⌊b_i / a_i⌋ ≥ k`.
pub fn membership_in_irreducible_power(
    q: &IrreducibleComponent,
    k: u64,
    u: &Monomial,
) -> Result<bool> {
    if u.dim() != q.dim() {
        return Err(Error::DimensionMismatch {
            expected: q.dim(),
            found: u.dim(),
        });
    }
    let mut floors: u64 = 0;
    for v in q.support() {
        let a = q.exponents()[v];
        floors = floors.saturating_add(u.exponent(v) / a);
        if floors >= k {
            return Ok(true);
        }
    }
    Ok(floors >= k)
}

fn require_stable(ideal: &MonomialIdeal) -> Result<()> {
    if stability_class(ideal)? == StabilityClass::NotStable {
        Err(Error::NotStable)
    } else {
        Ok(())
    }
}

/// For a stable ideal, the largest power of `x_n` dividing a minimal generator.
pub fn sat_stable(ideal: &MonomialIdeal) -> Result<u64> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    require_stable(ideal)?;
    let last = ideal.dim() - 1;
    Ok(ideal
        .gens()
        .iter()
        .map(|g| g.exponent(last))
        .max()
        .unwrap_or(0))
}

/// `I : m^k` for a stable ideal, computed as `I : x_n^k`.
pub fn colon_stable_fast(ideal: &MonomialIdeal, k: u64) -> Result<MonomialIdeal> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    require_stable(ideal)?;
    let n = ideal.dim();
    ideal.colon_monomial(&Monomial::pure_power(n, n - 1, k))
}

/// Saturation number of an ideal in two variables from its staircase:
/// `s − a_m − b_1 − 1` with `s = max_{i<m} (a_i + b_{i+1})`. Principal
/// ideals are saturated.
pub fn sat_two_vars(ideal: &MonomialIdeal) -> Result<u64> {
    let table = two_variable_form(ideal)?;
    if table.len() < 2 {
        return Ok(0);
    }
    let s = table
        .windows(2)
        .map(|w| w[0].0.checked_add(w[1].1).ok_or(Error::Overflow))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max()
        .expect("at least one window");
    let a_m = table[table.len() - 1].0;
    let b_1 = table[0].1;
    Ok(s - a_m - b_1 - 1)
}

/// `max sat(q_i^k)` over the given components.
pub fn max_component_sat(components: &[IrreducibleComponent], k: u64) -> Result<u64> {
    components
        .iter()
        .map(|q| sat_irreducible_power(q, k))
        .try_fold(0, |acc, v| v.map(|v| acc.max(v)))
}

/// Upper bound on `sat(I)` from the irredundant irreducible decomposition.
///
/// When the bound is positive it is attained exactly when `I` is m-primary.
/// A bound of 0 means no component involves every variable, and then
/// `sat(I) = 0` as well.
pub fn sat_upper_bound(ideal: &MonomialIdeal) -> Result<u64> {
    require_proper_nonzero(ideal)?;
    let dec = irreducible_decomposition(ideal)?;
    max_component_sat(&dec.components, 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u64]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    fn comp(e: &[u64]) -> IrreducibleComponent {
        IrreducibleComponent::new(e.to_vec()).unwrap()
    }

    #[test]
    fn chain_of_maximal_ideal() {
        let r = saturation_chain(&MonomialIdeal::maximal(3)).unwrap();
        assert_eq!(r.sat, 1);
        assert!(r.saturation.is_unit());
        assert_eq!(r.chain.len(), 3);
    }

    #[test]
    fn degenerate_chains() {
        for i in [
            MonomialIdeal::zero(2),
            MonomialIdeal::unit(2),
            ideal(3, &[&[1, 1, 0], &[0, 1, 1]]),
        ] {
            let r = saturation_chain(&i).unwrap();
            assert_eq!(r.sat, 0);
            assert_eq!(r.chain.len(), 2);
            assert_eq!(r.saturation, i);
        }
    }

    #[test]
    fn irreducible_closed_form() {
        assert_eq!(sat_irreducible_power(&comp(&[3, 2, 2]), 1).unwrap(), 5);
        assert_eq!(sat_irreducible_power(&comp(&[40, 34]), 2).unwrap(), 113);
        for k in 1..6 {
            assert_eq!(
                sat_irreducible_power(&IrreducibleComponent::maximal(4), k).unwrap(),
                k
            );
        }
        assert_eq!(sat_irreducible_power(&comp(&[3, 0, 2]), 2).unwrap(), 0);
        assert_eq!(
            sat_irreducible_power(&comp(&[3, 2]), 0),
            Err(Error::ZeroPower)
        );
    }

    #[test]
    fn floor_membership() {
        let q = comp(&[3, 2, 2]);
        let u = Monomial::new(vec![2, 1, 1]);
        assert!(!membership_in_irreducible_power(&q, 1, &u).unwrap());
        let u = Monomial::new(vec![3, 2, 0]);
        assert!(membership_in_irreducible_power(&q, 2, &u).unwrap());
        assert!(membership_in_irreducible_power(&q, 0, &Monomial::one(3)).unwrap());
        assert!(membership_in_irreducible_power(&q, 1, &Monomial::one(2)).is_err());
    }

    #[test]
    fn stable_formula() {
        assert_eq!(sat_stable(&MonomialIdeal::maximal(3)).unwrap(), 1);
        assert_eq!(sat_stable(&MonomialIdeal::maximal_power(3, 4)).unwrap(), 4);
        assert_eq!(sat_stable(&ideal(2, &[&[0, 1]])), Err(Error::NotStable));
        let m = MonomialIdeal::maximal(3);
        assert!(colon_stable_fast(&m, 1).unwrap().is_unit());
        assert_eq!(colon_stable_fast(&m, 0).unwrap(), m);
    }

    #[test]
    fn two_variable_formula() {
        assert_eq!(sat_two_vars(&ideal(2, &[&[4, 0], &[0, 3]])).unwrap(), 6);
        assert_eq!(sat_two_vars(&ideal(2, &[&[2, 3]])).unwrap(), 0);
        assert_eq!(
            sat_two_vars(&MonomialIdeal::maximal(3)),
            Err(Error::NotTwoVariables(3))
        );
    }

    #[test]
    fn bound_of_maximal_ideal() {
        assert_eq!(sat_upper_bound(&MonomialIdeal::maximal(3)).unwrap(), 1);
    }
}
