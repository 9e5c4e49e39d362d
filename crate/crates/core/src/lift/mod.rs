//! Lifting leading syzygy terms to syzygies.
//!
//! Given a Groebner basis `f_1, ..., f_r` of a submodule of `F_0` and a frame
//! term `s` of its leading syzygy module, a lifting is a syzygy with leading
//! term `s` under the induced ordering on `F_1`. Four strategies are
//! provided: the classical S-vector reduction, leading-term reduction of
//! `psi(s)`, reduction in unordered buckets ignoring lower order terms, and a
//! tree of independent subtree liftings with memoization.

mod hybrid;
mod reduce;
mod tree;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};
use crate::frame::FrameLevel;
use crate::groebner::GroebnerBasis;
use crate::monomial::{ModuleMonomial, Monomial};
use crate::ordering::LevelOrdering;
use crate::stats::StatCounters;
use crate::vector::{Accumulator, ModuleVector, Term};

pub use hybrid::lift_hybrid;
pub use reduce::{lift_reduce, syz_schreyer};
pub use tree::{lift_subtree, lift_tree, SubtreeCache, TraceEvent};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum LiftAlgorithm {
    Schreyer,
    Reduce,
    Hybrid,
    #[default]
    Tree,
}

impl LiftAlgorithm {
    pub const ALL: [LiftAlgorithm; 4] = [
        LiftAlgorithm::Schreyer,
        LiftAlgorithm::Reduce,
        LiftAlgorithm::Hybrid,
        LiftAlgorithm::Tree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LiftAlgorithm::Schreyer => "schreyer",
            LiftAlgorithm::Reduce => "reduce",
            LiftAlgorithm::Hybrid => "hybrid",
            LiftAlgorithm::Tree => "tree",
        }
    }
}

impl fmt::Display for LiftAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LiftAlgorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        LiftAlgorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| format!("unknown lifting algorithm `{s}`"))
    }
}

/// The data every lifting step needs: the basis whose syzygies are computed
/// and the ordering it induces on the syzygy module.
#[derive(Clone, Copy)]
pub struct LiftContext<'a> {
    pub basis: &'a GroebnerBasis,
    /// Ordering on the module containing the frame terms.
    pub ordering: &'a LevelOrdering,
    pub field: &'a PrimeField,
}

impl<'a> LiftContext<'a> {
    pub fn new(basis: &'a GroebnerBasis, ordering: &'a LevelOrdering, field: &'a PrimeField) -> Self {
        LiftContext {
            basis,
            ordering,
            field,
        }
    }

    fn target_ordering(&self) -> &'a LevelOrdering {
        self.basis.ordering()
    }

    /// Smallest-index divisor `m e_i` of `t` with `s > m e_i`.
    fn admissible_divisor(
        &self,
        s: &ModuleMonomial,
        t: &ModuleMonomial,
        counters: &mut StatCounters,
    ) -> Result<(usize, Monomial)> {
        for i in self.basis.lead_index().divisors(t) {
            let m = t.mono.div(&self.basis.leading_monomials()[i].mono).unwrap();
            let cand = ModuleMonomial::new(m, i);
            if self.ordering.cmp_counted(s, &cand, counters) == Ordering::Greater {
                return Ok((i, m));
            }
        }
        Err(Error::NoAdmissibleReducer)
    }

    /// Smallest-index divisor of `t`, without the ordering check.
    fn divisor(&self, t: &ModuleMonomial) -> Option<(usize, Monomial)> {
        let i = self.basis.lead_index().find_divisor(t)?;
        Some((i, t.mono.div(&self.basis.leading_monomials()[i].mono).unwrap()))
    }
}

/// The syzygy map `e_i -> f_i` applied to `v`.
pub fn psi(v: &ModuleVector, basis: &GroebnerBasis, field: &PrimeField, counters: &mut StatCounters) -> ModuleVector {
    let ord = &**basis.ordering();
    let mut acc = Accumulator::new();
    for t in v.terms() {
        acc.add_scaled(t.coeff, &t.monomial.mono, basis.generators()[t.component()].terms(), ord, field, counters);
    }
    acc.into_vector(ord, counters)
}

/// Splits `g` into its lower order terms with respect to `basis` and the rest.
pub fn lot(g: &ModuleVector, basis: &GroebnerBasis) -> (ModuleVector, ModuleVector) {
    let (low, rest): (Vec<Term>, Vec<Term>) = g
        .terms()
        .iter()
        .partition(|t| basis.lead_index().is_lot(&t.monomial));
    (ModuleVector::from_sorted_unchecked(low), ModuleVector::from_sorted_unchecked(rest))
}

/// Lifts one frame term with the chosen algorithm. `Schreyer` is treated as
/// `Reduce` since it needs the source pair; see [`syz_schreyer`].
pub fn lift_one(
    ctx: &LiftContext<'_>,
    s: &ModuleMonomial,
    alg: LiftAlgorithm,
    cache: &SubtreeCache,
    counters: &mut StatCounters,
) -> Result<ModuleVector> {
    match alg {
        LiftAlgorithm::Schreyer | LiftAlgorithm::Reduce => lift_reduce(ctx, s, counters),
        LiftAlgorithm::Hybrid => lift_hybrid(ctx, s, counters),
        LiftAlgorithm::Tree => lift_tree(ctx, s, cache, counters),
    }
}

/// Liftings of all terms of `level` in order. With more than one thread the
/// terms are split into contiguous chunks lifted concurrently against a
/// shared cache; the result does not depend on the thread count.
pub fn syz_lift(
    ctx: &LiftContext<'_>,
    level: &FrameLevel,
    alg: LiftAlgorithm,
    threads: usize,
    counters: &mut StatCounters,
) -> Result<Vec<ModuleVector>> {
    if alg == LiftAlgorithm::Schreyer {
        return syz_schreyer(ctx, level, counters);
    }
    let cache = SubtreeCache::new();
    let terms = &level.terms;
    let threads = threads.max(1).min(terms.len().max(1));
    if threads == 1 {
        return terms
            .iter()
            .map(|s| lift_one(ctx, s, alg, &cache, counters))
            .collect();
    }
    let chunk = terms.len().div_ceil(threads);
    let results: Vec<(Result<Vec<ModuleVector>>, StatCounters)> = std::thread::scope(|scope| {
        let handles: Vec<_> = terms
            .chunks(chunk)
            .map(|part| {
                let cache = &cache;
                scope.spawn(move || {
                    let mut local = StatCounters::new();
                    let out = part
                        .iter()
                        .map(|s| lift_one(ctx, s, alg, cache, &mut local))
                        .collect::<Result<Vec<_>>>();
                    (out, local)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("lifting thread panicked")).collect()
    });
    let mut out = Vec::with_capacity(terms.len());
    for (part, local) in results {
        counters.merge(&local);
        out.extend(part?);
    }
    Ok(out)
}

/// Sorts collected terms under `ord`, counting comparisons.
pub(crate) fn finish_sorted(mut terms: Vec<Term>, ord: &LevelOrdering, counters: &mut StatCounters) -> ModuleVector {
    let mut n = 0u64;
    terms.sort_unstable_by(|a, b| {
        n += 1;
        ord.cmp(&b.monomial, &a.monomial)
    });
    counters.n_monomial_cmp += n;
    ModuleVector::from_sorted_unchecked(terms)
}

/// Unordered sparse vector with counted additions.
#[derive(Debug, Default)]
pub(crate) struct TermMap {
    map: rustc_hash::FxHashMap<ModuleMonomial, FieldElement>,
}

impl TermMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, c: FieldElement, mm: ModuleMonomial, field: &PrimeField, counters: &mut StatCounters) {
        use std::collections::hash_map::Entry;
        match self.map.entry(mm) {
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
            }
        }
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.map.into_iter().map(|(m, c)| Term::new(c, m)).collect()
    }
}
