use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// A monomial ideal in `n` variables, held as its minimal generating set.
///
/// Generators are divisibility-minimal and sorted lexicographically, so two
/// values compare equal exactly when they generate the same ideal. The zero
/// ideal has no generators; the unit ideal has the single generator `1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

/// Reduces `gens` to its divisibility-minimal subset in lexicographic order.
fn minimal_set(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_unstable_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort_unstable();
    kept
}

/// Canonicalizes an arbitrary generating set. Fails if any monomial does not
/// live in `n` variables.
pub fn minimalize<I>(gens: I, n: usize) -> Result<MonomialIdeal>
where
    I: IntoIterator<Item = Monomial>,
{
    MonomialIdeal::new(n, gens)
}

impl MonomialIdeal {
    pub fn new<I>(n: usize, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        let gens: Vec<Monomial> = gens.into_iter().collect();
        for g in &gens {
            g.check_dim(n)?;
        }
        Ok(Self::from_raw(n, gens))
    }

    pub fn from_exponents(n: usize, gens: Vec<Vec<u64>>) -> Result<Self> {
        Self::new(n, gens.into_iter().map(Monomial::new))
    }

    /// Assumes every generator already has length `n`.
    pub(crate) fn from_raw(n: usize, gens: Vec<Monomial>) -> Self {
        MonomialIdeal {
            n,
            gens: minimal_set(gens),
        }
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: Vec::new(),
        }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Monomial::one(n)],
        }
    }

    /// The homogeneous maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(n: usize) -> Self {
        Self::from_raw(n, (0..n).map(|i| Monomial::pure_power(n, i, 1)).collect())
    }

    /// `m^d`, all monomials of total degree `d`.
    pub fn maximal_power(n: usize, d: u64) -> Self {
        let mut out = Vec::new();
        let mut cur = vec![0u64; n];
        fn fill(var: usize, left: u64, cur: &mut Vec<u64>, out: &mut Vec<Monomial>) {
            if var + 1 == cur.len() {
                cur[var] = left;
                out.push(Monomial::new(cur.clone()));
                return;
            }
            for e in 0..=left {
                cur[var] = e;
                fill(var + 1, left - e, cur, out);
            }
        }
        fill(0, d, &mut cur, &mut out);
        Self::from_raw(n, out)
    }

    pub fn principal(u: Monomial) -> Self {
        MonomialIdeal {
            n: u.dim(),
            gens: vec![u],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Neither zero nor the whole ring.
    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens
            .iter()
            .all(|g| g.exponents().iter().all(|&e| e <= 1))
    }

    /// All minimal generators have the same total degree.
    pub fn is_equigenerated(&self) -> bool {
        self.gens.windows(2).all(|w| w[0].degree() == w[1].degree())
    }

    fn check_same_dim(&self, other: &MonomialIdeal) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            })
        }
    }

    /// Membership: some minimal generator divides `u`.
    pub fn contains(&self, u: &Monomial) -> Result<bool> {
        u.check_dim(self.n)?;
        Ok(self.contains_unchecked(u))
    }

    pub(crate) fn contains_unchecked(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_same_dim(other)?;
        Ok(self.gens.iter().all(|g| other.contains_unchecked(g)))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_dim(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.n));
        }
        // A generator of one side lying in the other side already generates
        // every lcm it would take part in.
        let mut out = Vec::new();
        let mut rest_a = Vec::new();
        for g in &self.gens {
            if other.contains_unchecked(g) {
                out.push(g.clone());
            } else {
                rest_a.push(g);
            }
        }
        let mut rest_b = Vec::new();
        for g in &other.gens {
            if self.contains_unchecked(g) {
                out.push(g.clone());
            } else {
                rest_b.push(g);
            }
        }
        for a in &rest_a {
            for b in &rest_b {
                out.push(a.lcm(b));
            }
        }
        Ok(Self::from_raw(self.n, out))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_dim(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::from_raw(self.n, gens))
    }

    /// `I : (f) = (u / gcd(u, f) : u ∈ G(I))`.
    pub fn colon_monomial(&self, f: &Monomial) -> Result<MonomialIdeal> {
        f.check_dim(self.n)?;
        let gens = self.gens.iter().map(|u| u.quotient_by_gcd(f)).collect();
        Ok(Self::from_raw(self.n, gens))
    }

    /// `I : J`, the intersection of `I : (f)` over the generators `f` of `J`.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_dim(other)?;
        let mut gens = other.gens.iter();
        let first = gens.next().ok_or(Error::ZeroDivisor)?;
        let mut acc = self.colon_monomial(first)?;
        for f in gens {
            if acc.is_subset_of(self)? {
                break;
            }
            acc = acc.intersect(&self.colon_monomial(f)?)?;
        }
        Ok(acc)
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_dim(other)?;
        let mut out = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                out.push(a.checked_mul(b)?);
            }
        }
        Ok(Self::from_raw(self.n, out))
    }

    /// `I^k` by iterated multiplication; `I^0` is the unit ideal.
    pub fn power(&self, k: u64) -> Result<MonomialIdeal> {
        let mut acc = Self::unit(self.n);
        for _ in 0..k {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g)?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} {}", self.n, self)
    }
}
