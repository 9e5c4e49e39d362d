//! Hilbert series numerators of monomial ideals and monomial submodules.

use std::collections::BTreeMap;
use std::fmt;

use crate::monomial::{ModuleMonomial, Monomial, MAX_VARS};

/// Integer Laurent polynomial in `t`, sparse by exponent.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntPoly(BTreeMap<i64, i64>);

impl IntPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(c: i64, e: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(c, e);
        p
    }

    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (e, &c) in coeffs.iter().enumerate() {
            p.add_term(c, e as i64);
        }
        p
    }

    pub fn add_term(&mut self, c: i64, e: i64) {
        if c == 0 {
            return;
        }
        let v = self.0.entry(e).or_insert(0);
        *v += c;
        if *v == 0 {
            self.0.remove(&e);
        }
    }

    pub fn coeff(&self, e: i64) -> i64 {
        self.0.get(&e).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.0.iter().map(|(&e, &c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(c, e);
        }
        out
    }

    pub fn shift(&self, by: i64) -> IntPoly {
        IntPoly(self.0.iter().map(|(&e, &c)| (e + by, c)).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        let mut out = IntPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(c1 * c2, e1 + e2);
            }
        }
        out
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let sign = if c < 0 { "-" } else if i > 0 { "+" } else { "" };
            let a = c.abs();
            match (e, a) {
                (0, _) => write!(f, "{sign}{a}")?,
                (1, 1) => write!(f, "{sign}t")?,
                (1, _) => write!(f, "{sign}{a}t")?,
                (_, 1) => write!(f, "{sign}t^{e}")?,
                _ => write!(f, "{sign}{a}t^{e}")?,
            }
        }
        Ok(())
    }
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|k| k.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn is_pure_power(m: &Monomial) -> bool {
    m.mask().count_ones() <= 1
}

/// Numerator `N(t)` of the Hilbert series `N(t) / (1 - t)^n` of `R / I` for
/// the monomial ideal `I` generated by `gens`.
pub fn ideal_numerator(gens: &[Monomial]) -> IntPoly {
    let gens = minimalize(gens.to_vec());
    if gens.iter().all(is_pure_power) {
        return gens.iter().fold(IntPoly::one(), |acc, g| {
            acc.mul(&IntPoly::from_coeffs(&[1]).add(&IntPoly::monomial(-1, g.degree() as i64)))
        });
    }
    // pivot x_v^e taken from a generator with at least two variables
    let g = gens.iter().find(|g| !is_pure_power(g)).unwrap();
    let v = (0..MAX_VARS).find(|&v| g.exponent(v) > 0).unwrap();
    let mut e = vec![0u32; MAX_VARS];
    e[v] = g.exponent(v);
    let pivot = Monomial::new(&e).unwrap();

    let mut with_pivot = gens.clone();
    with_pivot.push(pivot);
    let quotient: Vec<Monomial> = gens
        .iter()
        .map(|m| m.div(&m.gcd(&pivot)).unwrap())
        .collect();
    ideal_numerator(&with_pivot).add(&ideal_numerator(&quotient).shift(pivot.degree() as i64))
}

/// Numerator of the Hilbert series of `F / M` where `M` is generated by
/// `lead` inside `F = sum_c R(-twists[c])`.
pub fn hilbert_numerator(lead: &[ModuleMonomial], twists: &[i64]) -> IntPoly {
    let mut total = IntPoly::zero();
    for (c, &tw) in twists.iter().enumerate() {
        let gens: Vec<Monomial> = lead.iter().filter(|m| m.component() == c).map(|m| m.mono).collect();
        total = total.add(&ideal_numerator(&gens).shift(tw));
    }
    total
}
