use crate::error::Result;
use crate::field::FieldElement;
use crate::frame::FrameLevel;
use crate::monomial::ModuleMonomial;
use crate::stats::StatCounters;
use crate::vector::{Accumulator, ModuleVector, Term};

use super::{finish_sorted, LiftContext, TermMap};

/// Lifting by repeated reduction of the leading term of `psi(s)`.
pub fn lift_reduce(ctx: &LiftContext<'_>, s: &ModuleMonomial, counters: &mut StatCounters) -> Result<ModuleVector> {
    let field = ctx.field;
    let ord0 = ctx.target_ordering();
    let gens = ctx.basis.generators();
    let mut g = Accumulator::new();
    g.add_scaled(FieldElement::ONE, &s.mono, gens[s.component()].terms(), ord0, field, counters);
    let mut sbar = TermMap::new();
    sbar.add(FieldElement::ONE, *s, field, counters);
    while let Some(t) = g.leading(ord0, counters) {
        let (i, m) = ctx.admissible_divisor(s, &t.monomial, counters)?;
        let c = field.neg(t.coeff);
        g.add_scaled(c, &m, gens[i].terms(), ord0, field, counters);
        sbar.add(c, ModuleMonomial::new(m, i), field, counters);
    }
    Ok(finish_sorted(sbar.into_terms(), ctx.ordering, counters))
}

/// Syzygies from standard representations of the S-vectors selected by the
/// frame: for a frame term `m_ji e_i` with source pair `(i, j)`, the syzygy is
/// `m_ji e_i - m_ij e_j - sum q_k e_k` where `S(f_i, f_j) = sum q_k f_k`.
pub fn syz_schreyer(ctx: &LiftContext<'_>, level: &FrameLevel, counters: &mut StatCounters) -> Result<Vec<ModuleVector>> {
    let field = ctx.field;
    let ord0 = ctx.target_ordering();
    let basis = ctx.basis;
    let gens = basis.generators();
    let mut out = Vec::with_capacity(level.len());
    for &(i, j) in &level.source_pairs {
        let mji = basis.m_coeff(i, j)?;
        let mij = basis.m_coeff(j, i)?;
        let minus_one = field.neg(FieldElement::ONE);
        let mut h = Accumulator::new();
        h.add_scaled(FieldElement::ONE, &mji, gens[i].terms(), ord0, field, counters);
        h.add_scaled(minus_one, &mij, gens[j].terms(), ord0, field, counters);
        let mut s = TermMap::new();
        s.add(FieldElement::ONE, ModuleMonomial::new(mji, i), field, counters);
        s.add(minus_one, ModuleMonomial::new(mij, j), field, counters);
        while let Some(t) = h.leading(ord0, counters) {
            let lambda = basis
                .lead_index()
                .find_divisor(&t.monomial)
                .ok_or_else(|| crate::error::Error::Internal("basis is not a Groebner basis".into()))?;
            let q = t.monomial.mono.div(&basis.leading_monomials()[lambda].mono).unwrap();
            let c = field.neg(t.coeff);
            h.add_scaled(c, &q, gens[lambda].terms(), ord0, field, counters);
            s.add(c, ModuleMonomial::new(q, lambda), field, counters);
        }
        let terms: Vec<Term> = s.into_terms();
        out.push(finish_sorted(terms, ctx.ordering, counters));
    }
    Ok(out)
}
