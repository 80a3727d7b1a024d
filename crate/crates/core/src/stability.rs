//! Stable and strongly stable ideals, and the closures `B(..)` / `𝓑(..)`.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StabilityClass {
    NotStable,
    Stable,
    StronglyStable,
}

impl fmt::Display for StabilityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StabilityClass::NotStable => "not_stable",
            StabilityClass::Stable => "stable",
            StabilityClass::StronglyStable => "strongly_stable",
        })
    }
}

/// Largest 1-based index `j` with `x_j | u`; 0 for the unit monomial.
pub fn m_index(u: &Monomial) -> usize {
    u.exponents()
        .iter()
        .rposition(|&e| e > 0)
        .map_or(0, |i| i + 1)
}

/// `x_i u / x_j` for each `i < j`, where `j = m(u)` (stable moves) or ranges
/// over every variable dividing `u` (strong moves).
fn moves(u: &Monomial, strong: bool) -> Result<Vec<Monomial>> {
    let m = m_index(u);
    if m == 0 {
        return Ok(Vec::new());
    }
    let sources: Vec<usize> = if strong { u.support() } else { vec![m - 1] };
    let mut out = Vec::new();
    for j in sources {
        for i in 0..j {
            let mut e = u.exponents().to_vec();
            e[j] -= 1;
            e[i] = e[i].checked_add(1).ok_or(Error::Overflow)?;
            out.push(Monomial::new(e));
        }
    }
    Ok(out)
}

fn closed_under(ideal: &MonomialIdeal, strong: bool) -> Result<bool> {
    for g in ideal.gens() {
        if !moves(g, strong)?
            .iter()
            .all(|v| ideal.contains_unchecked(v))
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks the exchange conditions on the minimal generators.
pub fn stability_class(ideal: &MonomialIdeal) -> Result<StabilityClass> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    Ok(if closed_under(ideal, true)? {
        StabilityClass::StronglyStable
    } else if closed_under(ideal, false)? {
        StabilityClass::Stable
    } else {
        StabilityClass::NotStable
    })
}

/// Smallest stable (`strong = false`) or strongly stable ideal containing
/// `monomials`.
///
/// Breadth-first closure under exchange moves; moves keep the total degree,
/// so the visited set is finite.
pub fn stable_closure<I>(monomials: I, strong: bool) -> Result<MonomialIdeal>
where
    I: IntoIterator<Item = Monomial>,
{
    let seeds: Vec<Monomial> = monomials.into_iter().collect();
    let n = seeds.first().ok_or(Error::EmptyInput)?.dim();
    let mut visited: HashSet<Monomial> = HashSet::new();
    let mut queue = VecDeque::new();
    for s in seeds {
        s.check_dim(n)?;
        if visited.insert(s.clone()) {
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        for v in moves(&u, strong)? {
            if visited.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    MonomialIdeal::new(n, visited)
}
