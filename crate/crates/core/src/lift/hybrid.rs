use std::collections::hash_map::Entry;
use std::collections::VecDeque;

use rustc_hash::FxHashMap;

use crate::error::Result;
use crate::field::FieldElement;
use crate::monomial::ModuleMonomial;
use crate::stats::StatCounters;
use crate::vector::ModuleVector;

use super::{finish_sorted, LiftContext, TermMap};

/// Unordered multiset of the non-lower-order terms still to be reduced.
/// Terms are handed out in insertion order.
#[derive(Default)]
struct Bucket {
    coeffs: FxHashMap<ModuleMonomial, FieldElement>,
    queue: VecDeque<ModuleMonomial>,
}

impl Bucket {
    fn pop(&mut self) -> Option<(ModuleMonomial, FieldElement)> {
        while let Some(mm) = self.queue.pop_front() {
            if let Some(c) = self.coeffs.remove(&mm) {
                return Some((mm, c));
            }
        }
        None
    }
}

/// Lifting that reduces terms of `psi(s)` in arbitrary order, never
/// materializing lower order terms.
pub fn lift_hybrid(ctx: &LiftContext<'_>, s: &ModuleMonomial, counters: &mut StatCounters) -> Result<ModuleVector> {
    let field = ctx.field;
    let gens = ctx.basis.generators();
    let index = ctx.basis.lead_index();
    let mut g = Bucket::default();
    let push = |g: &mut Bucket, c: FieldElement, mm: ModuleMonomial, counters: &mut StatCounters| match g.coeffs.entry(mm) {
        Entry::Occupied(mut e) => {
            let v = field.add(*e.get(), c);
            counters.n_add += 1;
            if v.is_zero() {
                counters.n_canc += 1;
                e.remove();
            } else {
                *e.get_mut() = v;
            }
        }
        Entry::Vacant(e) => {
            e.insert(c);
            g.queue.push_back(mm);
        }
    };

    for t in gens[s.component()].terms() {
        let mm = t.monomial.times(&s.mono);
        if !index.is_lot(&mm) {
            push(&mut g, t.coeff, mm, counters);
        }
    }
    let mut sbar = TermMap::new();
    sbar.add(FieldElement::ONE, *s, field, counters);
    while let Some((t, c)) = g.pop() {
        let (i, m) = ctx.admissible_divisor(s, &t, counters)?;
        let c = field.neg(c);
        // the head c * m * LT(f_i) cancels t exactly and is not formed
        for u in &gens[i].terms()[1..] {
            let mm = u.monomial.times(&m);
            if index.is_lot(&mm) {
                continue;
            }
            counters.n_mult += 1;
            push(&mut g, field.mul(c, u.coeff), mm, counters);
        }
        sbar.add(c, ModuleMonomial::new(m, i), field, counters);
    }
    Ok(finish_sorted(sbar.into_terms(), ctx.ordering, counters))
}
