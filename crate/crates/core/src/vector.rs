//! Sparse vectors in free modules `R^r`.

use std::cmp::Ordering;

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};
use crate::monomial::{ModuleMonomial, Monomial};
use crate::ordering::LevelOrdering;
use crate::stats::StatCounters;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: FieldElement,
    pub monomial: ModuleMonomial,
}

impl Term {
    pub fn new(coeff: FieldElement, monomial: ModuleMonomial) -> Self {
        Term { coeff, monomial }
    }

    pub fn component(&self) -> usize {
        self.monomial.component()
    }
}

/// A finite sum of terms with pairwise distinct monomials.
///
/// Vectors built by the public constructors are normalized: terms are
/// strictly decreasing under the ordering that was passed in.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ModuleVector {
    terms: Vec<Term>,
}

impl ModuleVector {
    pub fn zero() -> Self {
        ModuleVector { terms: Vec::new() }
    }

    pub fn from_term(t: Term) -> Self {
        if t.coeff.is_zero() {
            return Self::zero();
        }
        ModuleVector { terms: vec![t] }
    }

    /// Sorts, merges duplicate monomials and drops zero coefficients.
    pub fn from_terms(mut terms: Vec<Term>, ord: &LevelOrdering, field: &PrimeField) -> Self {
        terms.sort_by(|a, b| ord.cmp(&b.monomial, &a.monomial));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.monomial == t.monomial => {
                    last.coeff = field.add(last.coeff, t.coeff);
                }
                _ => {
                    if out.last().is_some_and(|l| l.coeff.is_zero()) {
                        out.pop();
                    }
                    out.push(t);
                }
            }
        }
        if out.last().is_some_and(|l| l.coeff.is_zero()) {
            out.pop();
        }
        ModuleVector { terms: out }
    }

    /// Wraps terms that are already strictly decreasing with nonzero coefficients.
    pub(crate) fn from_sorted_unchecked(terms: Vec<Term>) -> Self {
        ModuleVector { terms }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// First stored term; the leading term of a normalized vector.
    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// Maximal term under `ord`, found by a scan so that unnormalized
    /// vectors are handled as well.
    pub fn leading_term(&self, ord: &LevelOrdering) -> Result<Term> {
        let mut it = self.terms.iter();
        let mut best = *it.next().ok_or(Error::ZeroVector)?;
        for t in it {
            if ord.cmp(&t.monomial, &best.monomial) == Ordering::Greater {
                best = *t;
            }
        }
        Ok(best)
    }

    pub fn is_normalized(&self, ord: &LevelOrdering) -> bool {
        self.terms.iter().all(|t| !t.coeff.is_zero())
            && self
                .terms
                .windows(2)
                .all(|w| ord.cmp(&w[0].monomial, &w[1].monomial) == Ordering::Greater)
    }

    pub fn normalize(&mut self, ord: &LevelOrdering, field: &PrimeField) {
        let terms = std::mem::take(&mut self.terms);
        *self = Self::from_terms(terms, ord, field);
    }

    /// Largest component index that occurs, plus one.
    pub fn rank_bound(&self) -> usize {
        self.terms.iter().map(|t| t.component() + 1).max().unwrap_or(0)
    }

    /// Degree of the first term, counting the twist of its component.
    pub fn degree(&self, twists: &[i64]) -> Option<i64> {
        self.lead()
            .map(|t| t.monomial.mono.degree() as i64 + twists[t.component()])
    }

    pub fn is_homogeneous(&self, twists: &[i64]) -> bool {
        let d = self.degree(twists);
        self.terms
            .iter()
            .all(|t| Some(t.monomial.mono.degree() as i64 + twists[t.component()]) == d)
    }

    /// Terms lying in component `c`, as a polynomial in component 0.
    pub fn component_part(&self, c: usize) -> ModuleVector {
        ModuleVector {
            terms: self
                .terms
                .iter()
                .filter(|t| t.component() == c)
                .map(|t| Term::new(t.coeff, ModuleMonomial::new(t.monomial.mono, 0)))
                .collect(),
        }
    }

    pub fn neg(&self, field: &PrimeField) -> ModuleVector {
        ModuleVector {
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(field.neg(t.coeff), t.monomial))
                .collect(),
        }
    }

    /// Scales so that the first term has coefficient one.
    pub fn make_monic(&mut self, field: &PrimeField, counters: &mut StatCounters) {
        let Some(lead) = self.terms.first() else {
            return;
        };
        if lead.coeff == FieldElement::ONE {
            return;
        }
        let inv = field.inv(lead.coeff).expect("stored coefficients are nonzero");
        for t in &mut self.terms {
            t.coeff = field.mul(t.coeff, inv);
        }
        counters.n_mult += self.terms.len() as u64;
    }
}

/// Sparse sum `f + g` of two normalized vectors.
pub fn vector_add(
    f: &ModuleVector,
    g: &ModuleVector,
    ord: &LevelOrdering,
    field: &PrimeField,
    counters: &mut StatCounters,
) -> ModuleVector {
    let (a, b) = (&f.terms, &g.terms);
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match ord.cmp_counted(&a[i].monomial, &b[j].monomial, counters) {
            Ordering::Greater => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Less => {
                out.push(b[j]);
                j += 1;
            }
            Ordering::Equal => {
                let c = field.add(a[i].coeff, b[j].coeff);
                counters.n_add += 1;
                if c.is_zero() {
                    counters.n_canc += 1;
                } else {
                    out.push(Term::new(c, a[i].monomial));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    ModuleVector { terms: out }
}

/// The product `c * m * f`; order of `f` is preserved.
pub fn term_times_vector(
    c: FieldElement,
    m: &Monomial,
    f: &ModuleVector,
    field: &PrimeField,
    counters: &mut StatCounters,
) -> Result<ModuleVector> {
    if c.is_zero() {
        return Err(Error::ZeroCoefficient);
    }
    Ok(ModuleVector {
        terms: scaled_terms(c, m, &f.terms, field, counters).collect(),
    })
}

/// Iterator over the terms of `c * m * terms`, counting one multiplication each.
pub(crate) fn scaled_terms<'a>(
    c: FieldElement,
    m: &'a Monomial,
    terms: &'a [Term],
    field: &'a PrimeField,
    counters: &mut StatCounters,
) -> impl Iterator<Item = Term> + 'a {
    counters.n_mult += terms.len() as u64;
    terms
        .iter()
        .map(move |t| Term::new(field.mul(c, t.coeff), t.monomial.times(m)))
}

/// Binary max-heap of module monomials under a level ordering.
#[derive(Debug, Default)]
pub(crate) struct MonomialHeap {
    items: Vec<ModuleMonomial>,
}

impl MonomialHeap {
    pub fn peek(&self) -> Option<&ModuleMonomial> {
        self.items.first()
    }

    pub fn push(&mut self, mm: ModuleMonomial, ord: &LevelOrdering, counters: &mut StatCounters) {
        self.items.push(mm);
        let mut i = self.items.len() - 1;
        while i > 0 {
            let parent = (i - 1) / 2;
            if ord.cmp_counted(&self.items[i], &self.items[parent], counters) != Ordering::Greater {
                break;
            }
            self.items.swap(i, parent);
            i = parent;
        }
    }

    pub fn pop(&mut self, ord: &LevelOrdering, counters: &mut StatCounters) -> Option<ModuleMonomial> {
        let n = self.items.len();
        if n == 0 {
            return None;
        }
        self.items.swap(0, n - 1);
        let top = self.items.pop();
        let n = n - 1;
        let mut i = 0;
        loop {
            let (l, r) = (2 * i + 1, 2 * i + 2);
            let mut big = i;
            if l < n && ord.cmp_counted(&self.items[l], &self.items[big], counters) == Ordering::Greater {
                big = l;
            }
            if r < n && ord.cmp_counted(&self.items[r], &self.items[big], counters) == Ordering::Greater {
                big = r;
            }
            if big == i {
                break;
            }
            self.items.swap(i, big);
            i = big;
        }
        top
    }
}

/// A vector under repeated reduction: coefficients in a hash map, monomials
/// in a heap so the leading term stays available.
///
/// Heap entries whose monomial cancelled are stale and skipped lazily.
#[derive(Debug, Default)]
pub(crate) struct Accumulator {
    coeffs: FxHashMap<ModuleMonomial, FieldElement>,
    heap: MonomialHeap,
}

impl Accumulator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_vector(v: &ModuleVector, ord: &LevelOrdering, counters: &mut StatCounters) -> Self {
        let mut acc = Self::new();
        for t in v.terms() {
            acc.coeffs.insert(t.monomial, t.coeff);
            acc.heap.push(t.monomial, ord, counters);
        }
        acc
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(
        &mut self,
        t: Term,
        ord: &LevelOrdering,
        field: &PrimeField,
        counters: &mut StatCounters,
    ) {
        match self.coeffs.get_mut(&t.monomial) {
            Some(c) => {
                let s = field.add(*c, t.coeff);
                counters.n_add += 1;
                if s.is_zero() {
                    counters.n_canc += 1;
                    self.coeffs.remove(&t.monomial);
                } else {
                    *c = s;
                }
            }
            None => {
                self.coeffs.insert(t.monomial, t.coeff);
                self.heap.push(t.monomial, ord, counters);
            }
        }
    }

    /// Adds `c * m * v`.
    pub fn add_scaled(
        &mut self,
        c: FieldElement,
        m: &Monomial,
        v: &[Term],
        ord: &LevelOrdering,
        field: &PrimeField,
        counters: &mut StatCounters,
    ) {
        counters.n_mult += v.len() as u64;
        for t in v {
            let term = Term::new(field.mul(c, t.coeff), t.monomial.times(m));
            self.add_term(term, ord, field, counters);
        }
    }

    fn clean_top(&mut self, ord: &LevelOrdering, counters: &mut StatCounters) {
        while let Some(top) = self.heap.peek() {
            if self.coeffs.contains_key(top) {
                return;
            }
            self.heap.pop(ord, counters);
        }
    }

    pub fn leading(&mut self, ord: &LevelOrdering, counters: &mut StatCounters) -> Option<Term> {
        self.clean_top(ord, counters);
        let mm = *self.heap.peek()?;
        Some(Term::new(self.coeffs[&mm], mm))
    }

    pub fn pop_leading(&mut self, ord: &LevelOrdering, counters: &mut StatCounters) -> Option<Term> {
        self.clean_top(ord, counters);
        let mm = self.heap.pop(ord, counters)?;
        let c = self.coeffs.remove(&mm).expect("clean heap top is live");
        Some(Term::new(c, mm))
    }

    pub fn into_vector(mut self, ord: &LevelOrdering, counters: &mut StatCounters) -> ModuleVector {
        let mut terms = Vec::with_capacity(self.coeffs.len());
        while let Some(t) = self.pop_leading(ord, counters) {
            terms.push(t);
        }
        ModuleVector::from_sorted_unchecked(terms)
    }
}
