#![allow(dead_code)]

use monosat_core::{Monomial, MonomialIdeal};

/// Parses `x1^2*x3` style monomials; `1` is the unit.
pub fn mono(n: usize, text: &str) -> Monomial {
    let mut e = vec![0u64; n];
    let text = text.trim();
    if text != "1" {
        for term in text.split('*') {
            let term = term.trim().strip_prefix('x').expect("term starts with x");
            let (var, exp) = match term.split_once('^') {
                Some((v, p)) => (v.parse::<usize>().unwrap(), p.parse::<u64>().unwrap()),
                None => (term.parse::<usize>().unwrap(), 1),
            };
            e[var - 1] += exp;
        }
    }
    Monomial::new(e)
}

pub fn ideal(n: usize, gens: &str) -> MonomialIdeal {
    MonomialIdeal::new(n, gens.split(',').map(|g| mono(n, g))).unwrap()
}

pub fn raw_gens(n: usize, gens: &str) -> Vec<Monomial> {
    gens.split(',').map(|g| mono(n, g)).collect()
}

/// `(x1^2, x2) ∩ (x1, x2^2) ∩ (x1^3, x2^2, x3^2)`.
pub fn three_components() -> [MonomialIdeal; 3] {
    [
        ideal(3, "x1^2, x2"),
        ideal(3, "x1, x2^2"),
        ideal(3, "x1^3, x2^2, x3^2"),
    ]
}

pub fn three_component_ideal() -> MonomialIdeal {
    let [a, b, c] = three_components();
    a.intersect(&b).unwrap().intersect(&c).unwrap()
}

pub const STRONGLY_STABLE_GENS: &str =
    "x1^2, x1*x2*x3^2, x1*x2^2*x3, x1*x2^3, x2^3*x3, x2^4, x2^2*x3^2, x1*x2^2*x4, x1*x2*x3*x4";

pub const STRONGLY_STABLE_SQUARE: &str = "x1^4, x1^3*x2^2*x4, x1^3*x2*x3*x4, x1^3*x2*x3^2, x1^3*x2^2*x3, \
    x1^3*x2^3, x1^2*x2^4, x1^2*x2^3*x3, x1^2*x2^2*x3^2, x1*x2^6*x4, x1*x2^7, x2^8, x1*x2^5*x3*x4, \
    x1*x2^6*x3, x2^7*x3, x1*x2^4*x3^2*x4, x1*x2^3*x3^3*x4, x1*x2^3*x3^4, x1*x2^4*x3^3, x1*x2^5*x3^2, \
    x2^6*x3^2, x2^5*x3^3, x2^4*x3^4";

pub const STAIRCASE_GENS: &str = "x1^50, x1^40*x2^10, x1^39*x2^34, x1^38*x2^35, x1^37*x2^36, \
    x1^36*x2^37, x1^35*x2^38, x1^34*x2^39, x1^10*x2^40, x2^50";

pub const STAIRCASE_SQUARE: &str = "x1^100, x1^90*x2^10, x1^80*x2^20, x1^60*x2^40, x1^50*x2^50, \
    x1^40*x2^60, x1^20*x2^80, x1^10*x2^90, x2^100";

/// All exponent vectors in `n` variables of total degree at most `max_deg`.
pub fn monomials_up_to(n: usize, max_deg: u64) -> Vec<Monomial> {
    fn rec(var: usize, left: u64, cur: &mut Vec<u64>, out: &mut Vec<Monomial>) {
        if var == cur.len() {
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur[var] = e;
            rec(var + 1, left - e, cur, out);
        }
        cur[var] = 0;
    }
    let mut out = Vec::new();
    rec(0, max_deg, &mut vec![0; n], &mut out);
    out
}

/// Brute-force divisibility membership, independent of the crate's own.
pub fn in_ideal(gens: &[Monomial], u: &Monomial) -> bool {
    gens.iter()
        .any(|g| g.exponents().iter().zip(u.exponents()).all(|(a, b)| a <= b))
}

/// For m-primary ideals the saturation number is one more than the largest
/// degree of a monomial outside the ideal. Standard monomials lie in the box
/// cut out by the pure powers, which is walked odometer style.
pub fn sat_by_standard_monomials(i: &MonomialIdeal) -> usize {
    let n = i.dim();
    let sides: Vec<u64> = (0..n)
        .map(|v| {
            i.gens()
                .iter()
                .filter(|g| {
                    g.exponents()
                        .iter()
                        .enumerate()
                        .all(|(w, &e)| w == v || e == 0)
                })
                .map(|g| g.exponents()[v])
                .min()
                .expect("ideal is m-primary")
        })
        .collect();
    if sides.contains(&0) {
        return 0;
    }
    let mut cur = vec![0u64; n];
    let mut best = 0;
    loop {
        let u = Monomial::new(cur.clone());
        if !in_ideal(i.gens(), &u) {
            best = best.max(u.degree() as usize + 1);
        }
        let mut v = 0;
        while v < n {
            cur[v] += 1;
            if cur[v] < sides[v] {
                break;
            }
            cur[v] = 0;
            v += 1;
        }
        if v == n {
            return best;
        }
    }
}
