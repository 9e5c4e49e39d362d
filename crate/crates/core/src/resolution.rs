//! Free resolutions built level by level from the Schreyer frame, and their
//! minimization.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::frame::{reorder_permutation, SchreyerFrame};
use crate::groebner::{buchberger, GbOptions, GroebnerBasis};
use crate::lift::{syz_lift, LiftAlgorithm, LiftContext};
use crate::ordering::{LevelOrdering, OrderingChain};
use crate::ring::Ring;
use crate::stats::StatCounters;
use crate::vector::{vector_add, Accumulator, ModuleVector};

/// How generators are ordered between levels.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Reorder {
    /// Ascending degree, then decreasing leading image, then component.
    #[default]
    NegDegRevLex,
    /// Keep the canonical frame order.
    None,
    /// Take the input as the Groebner basis, in the given order.
    Input,
}

impl Reorder {
    pub fn name(self) -> &'static str {
        match self {
            Reorder::NegDegRevLex => "negdegrevlex",
            Reorder::None => "none",
            Reorder::Input => "input",
        }
    }
}

impl fmt::Display for Reorder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Reorder {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        [Reorder::NegDegRevLex, Reorder::None, Reorder::Input]
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| format!("unknown reorder mode `{s}`"))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ResolveOptions {
    pub algorithm: LiftAlgorithm,
    /// Maximal number of differentials to compute.
    pub max_length: Option<usize>,
    pub reorder: Reorder,
    pub threads: usize,
    /// Fail with [`Error::NotHomogeneous`] instead of resolving ungraded input.
    pub require_graded: bool,
}

impl Default for ResolveOptions {
    fn default() -> Self {
        ResolveOptions {
            algorithm: LiftAlgorithm::Tree,
            max_length: None,
            reorder: Reorder::NegDegRevLex,
            threads: 1,
            require_graded: false,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedFreeModule {
    pub twists: Vec<i64>,
}

impl GradedFreeModule {
    pub fn new(twists: Vec<i64>) -> Self {
        GradedFreeModule { twists }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }
}

/// Per-differential figures for the verbose report.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct LevelReport {
    pub generators: usize,
    pub terms: u64,
    pub seconds: f64,
}

/// `0 <- F_0 <- F_1 <- ... <- F_L <- 0` with the differentials stored column
/// by column: column `j` of `phi_k` is the image of the `j`-th basis element
/// of `F_k`, a vector in `F_{k-1}` sorted under the term-over-position
/// ordering of `F_{k-1}`.
#[derive(Clone, Debug)]
pub struct Resolution {
    ring: Ring,
    modules: Vec<GradedFreeModule>,
    differentials: Vec<Vec<ModuleVector>>,
    stats: StatCounters,
    graded: bool,
    minimal: bool,
    chain: Option<OrderingChain>,
    reports: Vec<LevelReport>,
}

impl Resolution {
    /// Assembles a resolution from its parts, normalizing every column under
    /// the term-over-position ordering of its target.
    pub fn from_parts(ring: Ring, modules: Vec<GradedFreeModule>, differentials: Vec<Vec<ModuleVector>>) -> Result<Self> {
        if modules.len() != differentials.len() + 1 {
            return Err(Error::Internal(format!(
                "{} modules for {} differentials",
                modules.len(),
                differentials.len()
            )));
        }
        let base = ring.ordering();
        let mut diffs = Vec::with_capacity(differentials.len());
        for (k, cols) in differentials.into_iter().enumerate() {
            let rows = modules[k].rank();
            if cols.len() != modules[k + 1].rank() {
                return Err(Error::Internal(format!("differential {} has {} columns", k + 1, cols.len())));
            }
            let ord = LevelOrdering::free(base, rows);
            let mut out = Vec::with_capacity(cols.len());
            for mut c in cols {
                if let Some(t) = c.terms().iter().find(|t| t.component() >= rows) {
                    return Err(Error::ComponentOutOfRange {
                        component: t.component(),
                        rank: rows,
                    });
                }
                c.normalize(&ord, ring.field());
                out.push(c);
            }
            diffs.push(out);
        }
        let mut res = Resolution {
            ring,
            modules,
            differentials: diffs,
            stats: StatCounters::new(),
            graded: false,
            minimal: false,
            chain: None,
            reports: Vec::new(),
        };
        res.graded = res.check_graded();
        res.minimal = res.graded && !res.has_constant_entries();
        res.stats.n_terms = res.tail_terms();
        Ok(res)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn modules(&self) -> &[GradedFreeModule] {
        &self.modules
    }

    /// Number of computed differentials.
    pub fn length(&self) -> usize {
        self.differentials.len()
    }

    pub fn rank(&self, k: usize) -> usize {
        self.modules.get(k).map_or(0, |m| m.rank())
    }

    pub fn twists(&self, k: usize) -> &[i64] {
        self.modules.get(k).map_or(&[], |m| &m.twists)
    }

    /// Columns of `phi_k` for `k >= 1`.
    pub fn differential(&self, k: usize) -> &[ModuleVector] {
        if k == 0 {
            return &[];
        }
        self.differentials.get(k - 1).map_or(&[], |d| d.as_slice())
    }

    pub fn differentials(&self) -> &[Vec<ModuleVector>] {
        &self.differentials
    }

    /// Entry `(row, col)` of `phi_k` as a polynomial in component 0.
    pub fn entry(&self, k: usize, row: usize, col: usize) -> ModuleVector {
        self.differential(k)[col].component_part(row)
    }

    /// Number of terms in each entry of `phi_k`, row-major.
    pub fn term_counts(&self, k: usize) -> Vec<Vec<usize>> {
        let mut counts = vec![vec![0; self.rank(k)]; self.rank(k - 1)];
        for (j, col) in self.differential(k).iter().enumerate() {
            for t in col.terms() {
                counts[t.component()][j] += 1;
            }
        }
        counts
    }

    pub fn stats(&self) -> &StatCounters {
        &self.stats
    }

    pub fn reports(&self) -> &[LevelReport] {
        &self.reports
    }

    pub fn is_graded(&self) -> bool {
        self.graded
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    pub fn chain(&self) -> Option<&OrderingChain> {
        self.chain.as_ref()
    }

    /// Terms of `phi_2, phi_3, ...`.
    pub fn tail_terms(&self) -> u64 {
        self.differentials.iter().skip(1).flatten().map(|c| c.len() as u64).sum()
    }

    /// Matrix entries of `phi_2, phi_3, ...`.
    pub fn tail_entries(&self) -> u64 {
        (2..=self.length())
            .map(|k| (self.rank(k - 1) * self.rank(k)) as u64)
            .sum()
    }

    /// Terms per matrix entry over `phi_2, phi_3, ...`; zero when there are no entries.
    pub fn q_sparse(&self) -> f64 {
        let e = self.tail_entries();
        if e == 0 {
            0.0
        } else {
            self.tail_terms() as f64 / e as f64
        }
    }

    fn check_graded(&self) -> bool {
        self.differentials.iter().enumerate().all(|(k, cols)| {
            let (tgt, src) = (&self.modules[k].twists, &self.modules[k + 1].twists);
            cols.iter().zip(src).all(|(c, &d)| {
                c.terms()
                    .iter()
                    .all(|t| t.monomial.mono.degree() as i64 + tgt[t.component()] == d)
            })
        })
    }

    fn has_constant_entries(&self) -> bool {
        self.differentials
            .iter()
            .flatten()
            .any(|c| c.terms().iter().any(|t| t.monomial.mono.is_one()))
    }

    pub(crate) fn require_graded(&self) -> Result<()> {
        if self.graded {
            Ok(())
        } else {
            Err(Error::NotHomogeneous)
        }
    }

    /// `phi_k o phi_{k+1} = 0` for all `k`.
    pub fn is_complex(&self) -> bool {
        let field = self.ring.field();
        let base = self.ring.ordering();
        let mut c = StatCounters::new();
        (2..=self.length()).all(|k| {
            let ord = LevelOrdering::free(base, self.rank(k - 2));
            let prev = self.differential(k - 1);
            self.differential(k).iter().all(|col| {
                let mut acc = Accumulator::new();
                for t in col.terms() {
                    acc.add_scaled(t.coeff, &t.monomial.mono, prev[t.component()].terms(), &ord, field, &mut c);
                }
                acc.is_empty()
            })
        })
    }

    /// Removes pairs of basis elements joined by a unit entry until no
    /// differential has constant entries.
    pub fn minimize(&self) -> Result<Resolution> {
        self.require_graded()?;
        let field = *self.ring.field();
        let base = self.ring.ordering();
        let mut modules = self.modules.clone();
        let mut diffs: Vec<Vec<ModuleVector>> = self.differentials.clone();
        let mut counters = StatCounters::new();
        for k in 1..=diffs.len() {
            loop {
                let found = diffs[k - 1].iter().enumerate().find_map(|(j, col)| {
                    col.terms()
                        .iter()
                        .find(|t| t.monomial.mono.is_one())
                        .map(|t| (t.component(), j, t.coeff))
                });
                let Some((i, j, c)) = found else {
                    break;
                };
                let rows = modules[k - 1].rank();
                let ord = LevelOrdering::free(base, rows);
                let pivot = diffs[k - 1][j].clone();
                let inv = field.inv(c)?;
                for (l, col) in diffs[k - 1].iter_mut().enumerate() {
                    if l == j {
                        continue;
                    }
                    let b = col.terms().iter().filter(|t| t.component() == i);
                    let mut update = ModuleVector::zero();
                    for t in b {
                        let f = field.neg(field.mul(t.coeff, inv));
                        let scaled = crate::vector::term_times_vector(f, &t.monomial.mono, &pivot, &field, &mut counters)?;
                        update = vector_add(&update, &scaled, &ord, &field, &mut counters);
                    }
                    if !update.is_zero() {
                        *col = vector_add(col, &update, &ord, &field, &mut counters);
                    }
                }
                // drop column j and row i of phi_k
                diffs[k - 1].remove(j);
                for col in diffs[k - 1].iter_mut() {
                    *col = drop_component(col, i);
                }
                modules[k].twists.remove(j);
                modules[k - 1].twists.remove(i);
                if k < diffs.len() {
                    for col in diffs[k].iter_mut() {
                        *col = drop_component(col, j);
                    }
                }
                if k >= 2 {
                    diffs[k - 2].remove(i);
                }
            }
        }
        while diffs.last().is_some_and(|d| d.is_empty()) && modules.last().is_some_and(|m| m.rank() == 0) {
            diffs.pop();
            modules.pop();
        }
        let mut out = Resolution::from_parts(self.ring.clone(), modules, diffs)?;
        out.stats = self.stats;
        out.stats.n_terms = out.tail_terms();
        Ok(out)
    }
}

/// Removes all terms in component `c` and shifts larger components down.
fn drop_component(v: &ModuleVector, c: usize) -> ModuleVector {
    let c = c as u32;
    let terms = v
        .terms()
        .iter()
        .filter(|t| t.monomial.comp != c)
        .map(|t| {
            let mut t = *t;
            if t.monomial.comp > c {
                t.monomial.comp -= 1;
            }
            t
        })
        .collect();
    ModuleVector::from_sorted_unchecked(terms)
}

/// Resolves the submodule of `F_0 = R^{twists.len()}` generated by `input`.
pub fn resolve(ring: &Ring, input: &[ModuleVector], twists: &[i64], options: &ResolveOptions) -> Result<Resolution> {
    let field = ring.field();
    let base = ring.ordering();
    let rank = twists.len();
    let chain0 = OrderingChain::new(base, rank);
    let ord0 = chain0.top().clone();

    let mut input: Vec<ModuleVector> = input.iter().filter(|g| !g.is_zero()).cloned().collect();
    for g in &mut input {
        if let Some(t) = g.terms().iter().find(|t| t.component() >= rank) {
            return Err(Error::ComponentOutOfRange {
                component: t.component(),
                rank,
            });
        }
        g.normalize(&ord0, field);
    }
    let homogeneous = input.iter().all(|g| g.is_homogeneous(twists));
    if options.require_graded && !homogeneous {
        return Err(Error::NotHomogeneous);
    }

    let mut gb_counters = StatCounters::new();
    let basis = match options.reorder {
        Reorder::Input => {
            let b = GroebnerBasis::new(input, ord0.clone(), field)?;
            if !b.is_groebner(field) {
                return Err(Error::NotGroebner);
            }
            b
        }
        Reorder::None => buchberger(&input, ord0.clone(), field, GbOptions::default(), &mut gb_counters)?,
        Reorder::NegDegRevLex => {
            let b = buchberger(&input, ord0.clone(), field, GbOptions::default(), &mut gb_counters)?;
            let degrees: Vec<i64> = b
                .leading_monomials()
                .iter()
                .map(|l| l.mono.degree() as i64 + twists[l.component()])
                .collect();
            let perm = reorder_permutation(b.leading_monomials(), &degrees, &ord0);
            let gens = b.into_generators();
            GroebnerBasis::from_monic(perm.iter().map(|&i| gens[i].clone()).collect(), ord0.clone())
        }
    };

    let reorder = options.reorder == Reorder::NegDegRevLex;
    let frame = SchreyerFrame::build(basis.leading_monomials(), twists, chain0, options.max_length, reorder);

    let mut modules = vec![GradedFreeModule::new(twists.to_vec())];
    let mut differentials = Vec::new();
    let mut stats = StatCounters::new();
    let mut reports = Vec::new();
    if !basis.is_empty() {
        modules.push(GradedFreeModule::new(frame.levels[0].degrees.clone()));
        differentials.push(basis.generators().to_vec());
        reports.push(LevelReport {
            generators: basis.len(),
            terms: basis.generators().iter().map(|g| g.len() as u64).sum(),
            seconds: 0.0,
        });
    }
    let mut current = basis;
    for k in 1..frame.levels.len() {
        let level = &frame.levels[k];
        if level.is_empty() {
            break;
        }
        let started = Instant::now();
        let ord_k = frame.chain.level(k)?;
        let ctx = LiftContext::new(&current, ord_k, field);
        let mut counters = StatCounters::new();
        let syz = syz_lift(&ctx, level, options.algorithm, options.threads, &mut counters)?;
        for (s, t) in syz.iter().zip(&level.terms) {
            if s.lead().map(|l| (l.monomial, l.coeff)) != Some((*t, FieldElement::ONE)) {
                return Err(Error::Internal(format!("lifting of {t:?} has the wrong leading term")));
            }
        }
        let terms: u64 = syz.iter().map(|s| s.len() as u64).sum();
        counters.n_terms = terms;
        stats.merge(&counters);
        reports.push(LevelReport {
            generators: syz.len(),
            terms,
            seconds: started.elapsed().as_secs_f64(),
        });
        let target = LevelOrdering::free(base, current.len());
        modules.push(GradedFreeModule::new(level.degrees.clone()));
        differentials.push(
            syz.iter()
                .map(|s| {
                    let mut s = s.clone();
                    s.normalize(&target, field);
                    s
                })
                .collect(),
        );
        current = GroebnerBasis::from_monic(syz, ord_k.clone());
    }

    let mut res = Resolution {
        ring: ring.clone(),
        modules,
        differentials,
        stats,
        graded: false,
        minimal: false,
        chain: Some(frame.chain),
        reports,
    };
    res.graded = homogeneous && res.check_graded();
    res.minimal = res.graded && !res.has_constant_entries();
    Ok(res)
}
