//! Irredundant irreducible decompositions and what is read off from them.
//!
//! Every monomial ideal is uniquely (up to order) an irredundant intersection
//! of irreducible ideals `(x_{i_1}^{a_1}, ..., x_{i_r}^{a_r})`. Grouping the
//! components by support gives a primary decomposition; the inclusion-minimal
//! supports are the minimal primes.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// An irreducible monomial ideal generated by pure powers.
///
/// Stored as a dense exponent vector; a zero entry means the variable does
/// not occur.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrreducibleComponent {
    exponents: Vec<u64>,
}

impl IrreducibleComponent {
    pub fn new(exponents: Vec<u64>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::ZeroDimension);
        }
        if exponents.iter().all(|&e| e == 0) {
            return Err(Error::EmptySupport);
        }
        Ok(IrreducibleComponent { exponents })
    }

    /// Builds `(x_{v}^{e} : (v, e) ∈ powers)` in `n` variables.
    pub fn from_powers(n: usize, powers: &[(usize, u64)]) -> Result<Self> {
        let mut exponents = vec![0; n];
        for &(v, e) in powers {
            if v >= n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: v + 1,
                });
            }
            exponents[v] = e;
        }
        Self::new(exponents)
    }

    /// The whole maximal ideal is `(x_1, ..., x_n)`.
    pub fn maximal(n: usize) -> Self {
        IrreducibleComponent {
            exponents: vec![1; n],
        }
    }

    /// Recognizes an ideal generated by pure powers.
    pub fn from_ideal(ideal: &MonomialIdeal) -> Option<Self> {
        let mut exponents = vec![0; ideal.dim()];
        for g in ideal.gens() {
            let v = g.pure_power_var()?;
            exponents[v] = g.exponent(v);
        }
        Self::new(exponents).ok()
    }

    pub fn dim(&self) -> usize {
        self.exponents.len()
    }

    /// Dense exponent vector, zero for variables outside the support.
    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn exponent(&self, var: usize) -> Option<u64> {
        match self.exponents[var] {
            0 => None,
            e => Some(e),
        }
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.exponents[i] > 0).collect()
    }

    pub fn has_full_support(&self) -> bool {
        self.exponents.iter().all(|&e| e > 0)
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let n = self.dim();
        let gens = self
            .support()
            .into_iter()
            .map(|v| Monomial::pure_power(n, v, self.exponents[v]));
        MonomialIdeal::new(n, gens).expect("component dimension is positive")
    }

    /// `self ⊆ other` as ideals.
    pub fn is_contained_in(&self, other: &IrreducibleComponent) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(&a, &b)| a == 0 || (b != 0 && b <= a))
    }
}

impl fmt::Display for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ideal())
    }
}

impl fmt::Debug for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// An irreducible decomposition, components in canonical (sorted) order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub components: Vec<IrreducibleComponent>,
    pub irredundant: bool,
}

impl Decomposition {
    /// Re-intersects the components.
    pub fn intersection(&self) -> Result<MonomialIdeal> {
        let mut iter = self.components.iter();
        let first = iter.next().ok_or(Error::EmptyInput)?;
        let mut acc = first.to_ideal();
        for q in iter {
            acc = acc.intersect(&q.to_ideal())?;
        }
        Ok(acc)
    }
}

/// A primary component: the intersection of all irreducible components that
/// share one support (its radical).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimaryComponent {
    /// 0-indexed variables generating the radical.
    pub support: Vec<usize>,
    pub ideal: MonomialIdeal,
    pub pieces: Vec<IrreducibleComponent>,
}

pub(crate) fn require_proper_nonzero(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        Err(Error::ZeroIdeal)
    } else if ideal.is_unit() {
        Err(Error::UnitIdeal)
    } else {
        Ok(())
    }
}

/// Keeps the inclusion-minimal components, sorted and deduplicated.
///
/// For irreducible monomial ideals `q_1 ∩ ... ∩ q_r ⊆ q` holds only if some
/// `q_i ⊆ q`, so this is exactly removal of redundant components.
fn prune(mut comps: Vec<IrreducibleComponent>) -> Vec<IrreducibleComponent> {
    comps.sort_unstable();
    comps.dedup();
    let mut kept: Vec<IrreducibleComponent> = Vec::with_capacity(comps.len());
    for (i, q) in comps.iter().enumerate() {
        let redundant = comps
            .iter()
            .enumerate()
            .any(|(j, p)| j != i && p.is_contained_in(q));
        if !redundant {
            kept.push(q.clone());
        }
    }
    kept
}

type Memo = HashMap<MonomialIdeal, Vec<IrreducibleComponent>>;

fn split(ideal: &MonomialIdeal, memo: &mut Memo) -> Vec<IrreducibleComponent> {
    if let Some(hit) = memo.get(ideal) {
        return hit.clone();
    }
    let n = ideal.dim();
    let pivot = ideal.gens().iter().position(|g| g.support().len() >= 2);
    let result =
        match pivot {
            None => vec![IrreducibleComponent::from_ideal(ideal)
                .expect("proper ideal generated by pure powers")],
            Some(p) => {
                let u = &ideal.gens()[p];
                let var = u.support()[0];
                let head = Monomial::pure_power(n, var, u.exponent(var));
                let tail = u.checked_div(&head).expect("head divides u");
                let others = || {
                    ideal
                        .gens()
                        .iter()
                        .enumerate()
                        .filter(move |&(i, _)| i != p)
                        .map(|(_, g)| g.clone())
                };
                let left = MonomialIdeal::from_raw(n, others().chain([head]).collect());
                let right = MonomialIdeal::from_raw(n, others().chain([tail]).collect());
                let mut comps = split(&left, memo);
                comps.extend(split(&right, memo));
                prune(comps)
            }
        };
    memo.insert(ideal.clone(), result.clone());
    result
}

/// The unique irredundant irreducible decomposition, by generator splitting:
/// a generator `u` involving `x_i` and some other variable is replaced by
/// `x_i^{c}` in one branch and `u / x_i^{c}` in the other.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Decomposition> {
    require_proper_nonzero(ideal)?;
    let mut memo = Memo::new();
    let components = split(ideal, &mut memo);
    Ok(Decomposition {
        components,
        irredundant: true,
    })
}

/// Groups irreducible components by support and intersects each group.
pub fn primary_decomposition(ideal: &MonomialIdeal) -> Result<Vec<PrimaryComponent>> {
    let dec = irreducible_decomposition(ideal)?;
    let mut groups: BTreeMap<Vec<usize>, Vec<IrreducibleComponent>> = BTreeMap::new();
    for q in dec.components {
        groups.entry(q.support()).or_default().push(q);
    }
    groups
        .into_iter()
        .map(|(support, pieces)| {
            let group = Decomposition {
                components: pieces,
                irredundant: true,
            };
            Ok(PrimaryComponent {
                support,
                ideal: group.intersection()?,
                pieces: group.components,
            })
        })
        .collect()
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

fn minimal_supports(mut supports: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    supports.sort();
    supports.dedup();
    supports
        .iter()
        .filter(|s| !supports.iter().any(|t| t != *s && is_subset(t, s)))
        .cloned()
        .collect()
}

/// Inclusion-minimal supports among the irreducible components, as sorted
/// lists of 0-indexed variables.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<Vec<usize>>> {
    let dec = irreducible_decomposition(ideal)?;
    Ok(minimal_supports(
        dec.components.iter().map(|q| q.support()).collect(),
    ))
}

/// `√I = m`, i.e. a pure power of every variable is a minimal generator.
pub fn is_m_primary(ideal: &MonomialIdeal) -> Result<bool> {
    require_proper_nonzero(ideal)?;
    let mut seen = vec![false; ideal.dim()];
    for g in ideal.gens() {
        if let Some(v) = g.pure_power_var() {
            seen[v] = true;
        }
    }
    Ok(seen.into_iter().all(|s| s))
}

/// Generators of an ideal in two variables as `(a_i, b_i)` with `a`
/// strictly decreasing and `b` strictly increasing.
pub fn two_variable_form(ideal: &MonomialIdeal) -> Result<Vec<(u64, u64)>> {
    if ideal.dim() != 2 {
        return Err(Error::NotTwoVariables(ideal.dim()));
    }
    require_proper_nonzero(ideal)?;
    // lex order ascending is a ascending; minimality forces b descending
    Ok(ideal
        .gens()
        .iter()
        .rev()
        .map(|g| (g.exponent(0), g.exponent(1)))
        .collect())
}

/// The staircase decomposition of a two-variable ideal,
/// `(x2^{b_1}) ∩ (x1^{a_1}, x2^{b_2}) ∩ ... ∩ (x1^{a_{m-1}}, x2^{b_m}) ∩ (x1^{a_m})`,
/// with the first and last terms omitted when `b_1 = 0` or `a_m = 0`.
pub fn two_variable_decomposition(ideal: &MonomialIdeal) -> Result<Decomposition> {
    let table = two_variable_form(ideal)?;
    let m = table.len();
    let mut components = Vec::with_capacity(m + 1);
    let (_, b1) = table[0];
    if b1 > 0 {
        components.push(IrreducibleComponent::new(vec![0, b1])?);
    }
    for w in table.windows(2) {
        components.push(IrreducibleComponent::new(vec![w[0].0, w[1].1])?);
    }
    let (am, _) = table[m - 1];
    if am > 0 {
        components.push(IrreducibleComponent::new(vec![am, 0])?);
    }
    components.sort_unstable();
    Ok(Decomposition {
        components,
        irredundant: true,
    })
}
