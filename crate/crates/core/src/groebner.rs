//! Division with remainder, S-vectors and Buchberger's algorithm in free modules.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};
use crate::monomial::{ModuleMonomial, Monomial};
use crate::ordering::LevelOrdering;
use crate::stats::StatCounters;
use crate::vector::{Accumulator, ModuleVector, Term};

/// Leading monomials of a generator list, bucketed by component for divisor
/// lookups. Entries stay in generator order, so the first hit is the
/// smallest index.
#[derive(Clone, Debug, Default)]
pub struct LeadIndex {
    by_comp: Vec<Vec<(u32, Monomial)>>,
    len: usize,
}

impl LeadIndex {
    pub fn new(leads: &[ModuleMonomial]) -> Self {
        let mut idx = LeadIndex::default();
        for lm in leads {
            idx.push(*lm);
        }
        idx
    }

    pub fn push(&mut self, lm: ModuleMonomial) {
        let c = lm.component();
        if self.by_comp.len() <= c {
            self.by_comp.resize_with(c + 1, Vec::new);
        }
        self.by_comp[c].push((self.len as u32, lm.mono));
        self.len += 1;
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Indices of generators whose leading monomial divides `mm`, ascending.
    pub fn divisors<'a>(&'a self, mm: &'a ModuleMonomial) -> impl Iterator<Item = usize> + 'a {
        self.by_comp
            .get(mm.component())
            .map(|v| v.as_slice())
            .unwrap_or(&[])
            .iter()
            .filter(move |(_, m)| m.divides(&mm.mono))
            .map(|(i, _)| *i as usize)
    }

    pub fn find_divisor(&self, mm: &ModuleMonomial) -> Option<usize> {
        self.divisors(mm).next()
    }

    /// Lower order term test: no leading monomial divides `mm`.
    pub fn is_lot(&self, mm: &ModuleMonomial) -> bool {
        self.find_divisor(mm).is_none()
    }
}

/// An ordered list of monic generators together with the module ordering
/// their leading terms refer to.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    generators: Vec<ModuleVector>,
    leads: Vec<ModuleMonomial>,
    index: LeadIndex,
    ordering: Arc<LevelOrdering>,
}

impl GroebnerBasis {
    /// Wraps generators without checking the Groebner property. Each
    /// generator is normalized and made monic; zero generators are rejected.
    pub fn new(
        generators: Vec<ModuleVector>,
        ordering: Arc<LevelOrdering>,
        field: &PrimeField,
    ) -> Result<Self> {
        let mut counters = StatCounters::new();
        let mut gens = Vec::with_capacity(generators.len());
        for mut g in generators {
            if !g.is_normalized(&ordering) {
                g.normalize(&ordering, field);
            }
            if g.is_zero() {
                return Err(Error::ZeroVector);
            }
            if let Some(t) = g.terms().iter().find(|t| t.component() >= ordering.rank()) {
                return Err(Error::ComponentOutOfRange {
                    component: t.component(),
                    rank: ordering.rank(),
                });
            }
            g.make_monic(field, &mut counters);
            gens.push(g);
        }
        Ok(Self::from_monic(gens, ordering))
    }

    /// Generators already normalized under `ordering` with leading coefficient one.
    pub(crate) fn from_monic(generators: Vec<ModuleVector>, ordering: Arc<LevelOrdering>) -> Self {
        let leads: Vec<_> = generators.iter().map(|g| g.lead().unwrap().monomial).collect();
        GroebnerBasis {
            index: LeadIndex::new(&leads),
            leads,
            generators,
            ordering,
        }
    }

    pub fn generators(&self) -> &[ModuleVector] {
        &self.generators
    }

    pub fn into_generators(self) -> Vec<ModuleVector> {
        self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn leading_monomials(&self) -> &[ModuleMonomial] {
        &self.leads
    }

    pub fn lead_index(&self) -> &LeadIndex {
        &self.index
    }

    pub fn ordering(&self) -> &Arc<LevelOrdering> {
        &self.ordering
    }

    pub fn rank(&self) -> usize {
        self.ordering.rank()
    }

    /// `m_ji = lcm(LM(f_j), LM(f_i)) / LT(f_i)`.
    pub fn m_coeff(&self, i: usize, j: usize) -> Result<Monomial> {
        let l = self.leads[j].lcm(&self.leads[i]).ok_or(Error::NoPair(i, j))?;
        Ok(l.mono.div(&self.leads[i].mono).expect("lead divides lcm"))
    }

    /// `m_ji f_i - m_ij f_j`.
    pub fn s_vector(
        &self,
        i: usize,
        j: usize,
        field: &PrimeField,
        counters: &mut StatCounters,
    ) -> Result<ModuleVector> {
        let mji = self.m_coeff(i, j)?;
        let mij = self.m_coeff(j, i)?;
        let ord = &*self.ordering;
        let mut acc = Accumulator::new();
        acc.add_scaled(FieldElement::ONE, &mji, self.generators[i].terms(), ord, field, counters);
        acc.add_scaled(field.neg(FieldElement::ONE), &mij, self.generators[j].terms(), ord, field, counters);
        Ok(acc.into_vector(ord, counters))
    }

    /// Standard representation `g = sum q_i f_i + h` with `h` fully reduced.
    /// Quotients are polynomials stored in component 0.
    pub fn divide_with_remainder(
        &self,
        g: &ModuleVector,
        field: &PrimeField,
        counters: &mut StatCounters,
    ) -> (Vec<ModuleVector>, ModuleVector) {
        let ord = &*self.ordering;
        let mut quotients: Vec<Vec<Term>> = vec![Vec::new(); self.len()];
        let mut remainder = Vec::new();
        let mut acc = Accumulator::from_vector(g, ord, counters);
        while let Some(t) = acc.leading(ord, counters) {
            match self.index.find_divisor(&t.monomial) {
                Some(i) => {
                    let m = t.monomial.mono.div(&self.leads[i].mono).unwrap();
                    quotients[i].push(Term::new(t.coeff, ModuleMonomial::new(m, 0)));
                    acc.add_scaled(field.neg(t.coeff), &m, self.generators[i].terms(), ord, field, counters);
                }
                None => {
                    remainder.push(acc.pop_leading(ord, counters).unwrap());
                }
            }
        }
        // quotient terms arrive in decreasing order of m * LM(f_i), hence of m
        let quotients = quotients.into_iter().map(ModuleVector::from_sorted_unchecked).collect();
        (quotients, ModuleVector::from_sorted_unchecked(remainder))
    }

    pub fn normal_form(&self, g: &ModuleVector, field: &PrimeField, counters: &mut StatCounters) -> ModuleVector {
        self.divide_with_remainder(g, field, counters).1
    }

    /// Buchberger's criterion: every S-vector reduces to zero.
    pub fn is_groebner(&self, field: &PrimeField) -> bool {
        let mut counters = StatCounters::new();
        for i in 0..self.len() {
            for j in 0..i {
                if let Ok(s) = self.s_vector(i, j, field, &mut counters) {
                    if !self.normal_form(&s, field, &mut counters).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// No term of a generator is divisible by another generator's leading monomial.
    pub fn is_reduced(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, g)| {
            g.terms()
                .iter()
                .all(|t| self.index.divisors(&t.monomial).all(|k| k == i))
        })
    }
}

/// Options for [`buchberger`].
#[derive(Clone, Copy, Debug, Default)]
pub struct GbOptions {
    /// Drop pairs whose lcm has larger degree; the result is a truncated basis.
    pub degree_bound: Option<u32>,
}

/// Reduced Groebner basis of the submodule generated by `input`, sorted by
/// decreasing leading monomial.
pub fn buchberger(
    input: &[ModuleVector],
    ordering: Arc<LevelOrdering>,
    field: &PrimeField,
    options: GbOptions,
    counters: &mut StatCounters,
) -> Result<GroebnerBasis> {
    let ord = &*ordering;
    let mut gens: Vec<ModuleVector> = Vec::new();
    let mut index = LeadIndex::default();
    let mut leads: Vec<ModuleMonomial> = Vec::new();
    let mut pairs: BTreeSet<(u32, usize, usize)> = BTreeSet::new();

    let insert = |mut h: ModuleVector,
                      gens: &mut Vec<ModuleVector>,
                      leads: &mut Vec<ModuleMonomial>,
                      index: &mut LeadIndex,
                      pairs: &mut BTreeSet<(u32, usize, usize)>,
                      counters: &mut StatCounters| {
        h.make_monic(field, counters);
        let lm = h.lead().unwrap().monomial;
        let i = gens.len();
        for (j, lj) in leads.iter().enumerate() {
            if let Some(l) = lj.lcm(&lm) {
                if options.degree_bound.is_some_and(|b| l.mono.degree() > b) {
                    continue;
                }
                if lj.mono.is_coprime(&lm.mono) {
                    continue;
                }
                pairs.insert((l.mono.degree(), j, i));
            }
        }
        gens.push(h);
        leads.push(lm);
        index.push(lm);
    };

    for f in input {
        let mut f = f.clone();
        if f.terms().iter().any(|t| t.component() >= ord.rank()) {
            let t = f.terms().iter().find(|t| t.component() >= ord.rank()).unwrap();
            return Err(Error::ComponentOutOfRange {
                component: t.component(),
                rank: ord.rank(),
            });
        }
        if !f.is_normalized(ord) {
            f.normalize(ord, field);
        }
        let h = top_reduce(&f, &gens, &index, &leads, ord, field, counters);
        if !h.is_zero() {
            insert(h, &mut gens, &mut leads, &mut index, &mut pairs, counters);
        }
    }

    while let Some(pair) = pairs.pop_first() {
        let (_, j, i) = pair;
        let lcm = leads[j].lcm(&leads[i]).unwrap();
        // chain criterion
        let redundant = (0..gens.len()).any(|k| {
            k != i
                && k != j
                && leads[k].divides(&lcm)
                && !pairs.contains(&pair_key(&leads, k, i))
                && !pairs.contains(&pair_key(&leads, k, j))
        });
        if redundant {
            continue;
        }
        let mji = lcm.mono.div(&leads[i].mono).unwrap();
        let mij = lcm.mono.div(&leads[j].mono).unwrap();
        let mut acc = Accumulator::new();
        acc.add_scaled(FieldElement::ONE, &mji, gens[i].terms(), ord, field, counters);
        acc.add_scaled(field.neg(FieldElement::ONE), &mij, gens[j].terms(), ord, field, counters);
        let s = acc.into_vector(ord, counters);
        let h = top_reduce(&s, &gens, &index, &leads, ord, field, counters);
        if !h.is_zero() {
            insert(h, &mut gens, &mut leads, &mut index, &mut pairs, counters);
        }
    }

    // minimalize: drop generators whose leading monomial is divisible by another's
    let mut keep: Vec<usize> = Vec::new();
    for i in 0..gens.len() {
        let dominated = (0..gens.len()).any(|k| {
            k != i && leads[k].divides(&leads[i]) && (leads[k] != leads[i] || k < i)
        });
        if !dominated {
            keep.push(i);
        }
    }
    keep.sort_by(|&a, &b| ord.cmp(&leads[b], &leads[a]));
    let minimal: Vec<ModuleVector> = keep.iter().map(|&i| gens[i].clone()).collect();
    let basis = GroebnerBasis::from_monic(minimal, ordering.clone());

    // interreduce tails
    let mut reduced = Vec::with_capacity(basis.len());
    for (i, g) in basis.generators().iter().enumerate() {
        let head = *g.lead().unwrap();
        let tail = ModuleVector::from_sorted_unchecked(g.terms()[1..].to_vec());
        let r = basis.normal_form(&tail, field, counters);
        debug_assert!(r.terms().iter().all(|t| basis.lead_index().is_lot(&t.monomial)), "generator {i}");
        let mut terms = Vec::with_capacity(r.len() + 1);
        terms.push(head);
        terms.extend_from_slice(r.terms());
        reduced.push(ModuleVector::from_sorted_unchecked(terms));
    }
    Ok(GroebnerBasis::from_monic(reduced, ordering))
}

fn pair_key(leads: &[ModuleMonomial], a: usize, b: usize) -> (u32, usize, usize) {
    let (j, i) = if a < b { (a, b) } else { (b, a) };
    let d = leads[j].lcm(&leads[i]).map_or(0, |l| l.mono.degree());
    (d, j, i)
}

/// Reduces the leading term of `f` until it is not divisible by any leading
/// monomial of `gens`.
fn top_reduce(
    f: &ModuleVector,
    gens: &[ModuleVector],
    index: &LeadIndex,
    leads: &[ModuleMonomial],
    ord: &LevelOrdering,
    field: &PrimeField,
    counters: &mut StatCounters,
) -> ModuleVector {
    let Some(first) = f.lead() else {
        return ModuleVector::zero();
    };
    if index.is_lot(&first.monomial) {
        return f.clone();
    }
    let mut acc = Accumulator::from_vector(f, ord, counters);
    while let Some(t) = acc.leading(ord, counters) {
        let Some(i) = index.find_divisor(&t.monomial) else {
            break;
        };
        let m = t.monomial.mono.div(&leads[i].mono).unwrap();
        acc.add_scaled(field.neg(t.coeff), &m, gens[i].terms(), ord, field, counters);
    }
    acc.into_vector(ord, counters)
}

/// `sum q_i f_i + h`, for checking standard representations.
pub fn recombine(
    basis: &GroebnerBasis,
    quotients: &[ModuleVector],
    remainder: &ModuleVector,
    field: &PrimeField,
    counters: &mut StatCounters,
) -> ModuleVector {
    let ord = &**basis.ordering();
    let mut acc = Accumulator::from_vector(remainder, ord, counters);
    for (q, f) in quotients.iter().zip(basis.generators()) {
        for t in q.terms() {
            acc.add_scaled(t.coeff, &t.monomial.mono, f.terms(), ord, field, counters);
        }
    }
    acc.into_vector(ord, counters)
}
