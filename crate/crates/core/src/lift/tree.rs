use std::hash::BuildHasherDefault;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::sync::{Arc, Mutex};

use dashmap::DashMap;
use rustc_hash::FxHasher;

use crate::error::Result;
use crate::field::{FieldElement, PrimeField};
use crate::monomial::ModuleMonomial;
use crate::stats::StatCounters;
use crate::vector::{ModuleVector, Term};

use super::{finish_sorted, LiftContext, TermMap};

/// A node of the lifting tree, as seen by [`SubtreeCache::trace`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceEvent {
    /// The subtree below this key was computed.
    Expanded(ModuleMonomial),
    /// The subtree lifting of this key was taken from the cache.
    Hit(ModuleMonomial),
}

/// Subtree liftings of monomials `m e_i` with coefficient one, shared by all
/// liftings of one frame level. Values are stored unsorted and scaled on use.
#[derive(Debug, Default)]
pub struct SubtreeCache {
    map: DashMap<ModuleMonomial, Arc<Vec<Term>>, BuildHasherDefault<FxHasher>>,
    hits: AtomicU64,
    expansions: AtomicU64,
    trace: Option<Mutex<Vec<TraceEvent>>>,
}

impl SubtreeCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// A cache that also records every visited node in order.
    pub fn with_trace() -> Self {
        SubtreeCache {
            trace: Some(Mutex::new(Vec::new())),
            ..Self::default()
        }
    }

    pub fn hits(&self) -> u64 {
        self.hits.load(AtomicOrdering::Relaxed)
    }

    /// Number of subtree liftings that were computed rather than looked up.
    pub fn expansions(&self) -> u64 {
        self.expansions.load(AtomicOrdering::Relaxed)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn get(&self, key: &ModuleMonomial) -> Option<Arc<Vec<Term>>> {
        self.map.get(key).map(|v| v.value().clone())
    }

    pub fn trace(&self) -> Vec<TraceEvent> {
        self.trace
            .as_ref()
            .map(|t| t.lock().unwrap().clone())
            .unwrap_or_default()
    }

    fn record(&self, event: TraceEvent) {
        if let Some(t) = &self.trace {
            t.lock().unwrap().push(event);
        }
    }

    fn lookup(&self, key: &ModuleMonomial) -> Option<Arc<Vec<Term>>> {
        let v = self.get(key)?;
        self.hits.fetch_add(1, AtomicOrdering::Relaxed);
        self.record(TraceEvent::Hit(*key));
        Some(v)
    }

    /// First write wins; a racing duplicate is dropped.
    fn insert(&self, key: ModuleMonomial, value: Vec<Term>) -> Arc<Vec<Term>> {
        self.map.entry(key).or_insert_with(|| Arc::new(value)).clone()
    }
}

struct Node {
    children: Vec<(FieldElement, ModuleMonomial)>,
    next: usize,
    key: ModuleMonomial,
    acc: TermMap,
}

fn subtract_scaled(
    acc: &mut TermMap,
    c: FieldElement,
    value: &[Term],
    field: &PrimeField,
    counters: &mut StatCounters,
) {
    let c = field.neg(c);
    counters.n_mult += value.len() as u64;
    for t in value {
        acc.add(field.mul(c, t.coeff), t.monomial, field, counters);
    }
}

fn expand(ctx: &LiftContext<'_>, key: ModuleMonomial, cache: &SubtreeCache, counters: &mut StatCounters) -> Node {
    cache.expansions.fetch_add(1, AtomicOrdering::Relaxed);
    cache.record(TraceEvent::Expanded(key));
    let mut children = Vec::new();
    for u in &ctx.basis.generators()[key.component()].terms()[1..] {
        let mm = u.monomial.times(&key.mono);
        if let Some((i, m)) = ctx.divisor(&mm) {
            children.push((u.coeff, ModuleMonomial::new(m, i)));
        }
    }
    let mut acc = TermMap::new();
    acc.add(FieldElement::ONE, key, ctx.field, counters);
    Node {
        children,
        next: 0,
        key,
        acc,
    }
}

/// Subtree lifting of `key` with coefficient one, computed depth first with
/// an explicit stack and memoized in `cache`.
fn subtree_value(
    ctx: &LiftContext<'_>,
    key: ModuleMonomial,
    cache: &SubtreeCache,
    counters: &mut StatCounters,
) -> Arc<Vec<Term>> {
    if let Some(v) = cache.lookup(&key) {
        return v;
    }
    let field = ctx.field;
    let mut stack = vec![expand(ctx, key, cache, counters)];
    loop {
        let top = stack.last_mut().unwrap();
        if top.next < top.children.len() {
            let (c, child) = top.children[top.next];
            match cache.lookup(&child) {
                Some(v) => {
                    subtract_scaled(&mut top.acc, c, &v, field, counters);
                    top.next += 1;
                }
                None => {
                    let node = expand(ctx, child, cache, counters);
                    stack.push(node);
                }
            }
            continue;
        }
        let done = stack.pop().unwrap();
        let value = cache.insert(done.key, done.acc.into_terms());
        let Some(parent) = stack.last_mut() else {
            return value;
        };
        let (c, _) = parent.children[parent.next];
        subtract_scaled(&mut parent.acc, c, &value, field, counters);
        parent.next += 1;
    }
}

/// Subtree lifting of the term `t`: leading term `t`, and every term of the
/// tail of its image is a lower order term.
pub fn lift_subtree(ctx: &LiftContext<'_>, t: &Term, cache: &SubtreeCache, counters: &mut StatCounters) -> ModuleVector {
    let v = subtree_value(ctx, t.monomial, cache, counters);
    let mut acc = TermMap::new();
    subtract_scaled(&mut acc, ctx.field.neg(t.coeff), &v, ctx.field, counters);
    finish_sorted(acc.into_terms(), ctx.ordering, counters)
}

/// Lifting as `s` minus the subtree liftings of the divisors of all
/// non-lower-order terms of `psi(s)`.
pub fn lift_tree(
    ctx: &LiftContext<'_>,
    s: &ModuleMonomial,
    cache: &SubtreeCache,
    counters: &mut StatCounters,
) -> Result<ModuleVector> {
    let field = ctx.field;
    let mut sbar = TermMap::new();
    sbar.add(FieldElement::ONE, *s, field, counters);
    for u in ctx.basis.generators()[s.component()].terms() {
        let mm = u.monomial.times(&s.mono);
        if ctx.basis.lead_index().is_lot(&mm) {
            continue;
        }
        let (i, m) = ctx.admissible_divisor(s, &mm, counters)?;
        let v = subtree_value(ctx, ModuleMonomial::new(m, i), cache, counters);
        subtract_scaled(&mut sbar, u.coeff, &v, field, counters);
    }
    Ok(finish_sorted(sbar.into_terms(), ctx.ordering, counters))
}
