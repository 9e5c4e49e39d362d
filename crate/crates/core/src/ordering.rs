//! Monomial orderings on the base ring and Schreyer orderings on the free
//! modules of a resolution.
//!
//! Level 0 is the free module `F_0 = R^s` with the term-over-position
//! extension of the base ordering (ties go to the smaller component). Level
//! `k + 1` carries the ordering induced by the leading monomials of the
//! generators living in level `k`: `m1 e_i > m2 e_j` iff
//! `LM(m1 f_i) > LM(m2 f_j)`, or the two agree and `i > j`.
//!
//! Every basis element `e_i` of level `k` stores its descent image: the
//! product of all cofactors down to level 0, and the chain of component
//! indices passed on the way. Unfolding the recursive definition, an induced
//! comparison is a single level-0 comparison of `m1 * image_i` against
//! `m2 * image_j`, followed by a lexicographic comparison of the component
//! chains.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monomial::{ModuleMonomial, Monomial};
use crate::stats::StatCounters;
use crate::vector::ModuleVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderingKind {
    /// Degree reverse lexicographic (`dp`).
    DegRevLex,
    /// Lexicographic (`lp`).
    Lex,
}

/// A global monomial ordering on `K[x_1, ..., x_n]` with `x_1 > ... > x_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BaseOrdering {
    pub kind: OrderingKind,
    pub nvars: usize,
}

impl BaseOrdering {
    pub fn new(kind: OrderingKind, nvars: usize) -> Self {
        BaseOrdering { kind, nvars }
    }

    pub fn degrevlex(nvars: usize) -> Self {
        Self::new(OrderingKind::DegRevLex, nvars)
    }

    pub fn lex(nvars: usize) -> Self {
        Self::new(OrderingKind::Lex, nvars)
    }

    pub fn from_name(name: &str, nvars: usize) -> Option<Self> {
        match name {
            "dp" => Some(Self::degrevlex(nvars)),
            "lp" => Some(Self::lex(nvars)),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self.kind {
            OrderingKind::DegRevLex => "dp",
            OrderingKind::Lex => "lp",
        }
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_products(a, &Monomial::ONE, b, &Monomial::ONE)
    }

    /// Compares `a * a2` with `b * b2` without forming the products.
    #[inline]
    pub fn cmp_products(&self, a: &Monomial, a2: &Monomial, b: &Monomial, b2: &Monomial) -> Ordering {
        let (ea, ea2, eb, eb2) = (a.exponents(), a2.exponents(), b.exponents(), b2.exponents());
        match self.kind {
            OrderingKind::Lex => {
                for v in 0..self.nvars {
                    let x = ea[v] as u32 + ea2[v] as u32;
                    let y = eb[v] as u32 + eb2[v] as u32;
                    if x != y {
                        return x.cmp(&y);
                    }
                }
                Ordering::Equal
            }
            OrderingKind::DegRevLex => {
                let da = a.degree() + a2.degree();
                let db = b.degree() + b2.degree();
                if da != db {
                    return da.cmp(&db);
                }
                for v in (0..self.nvars).rev() {
                    let x = ea[v] as u32 + ea2[v] as u32;
                    let y = eb[v] as u32 + eb2[v] as u32;
                    if x != y {
                        return y.cmp(&x);
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// The monomial ordering on one free module of a resolution.
#[derive(Clone, Debug)]
pub struct LevelOrdering {
    base: BaseOrdering,
    level: usize,
    images: Vec<Monomial>,
    // component chains, `level + 1` entries per basis element
    paths: Vec<u32>,
}

impl LevelOrdering {
    /// Term-over-position ordering on `F_0 = R^rank`.
    pub fn free(base: BaseOrdering, rank: usize) -> Self {
        LevelOrdering {
            base,
            level: 0,
            images: vec![Monomial::ONE; rank],
            paths: (0..rank as u32).collect(),
        }
    }

    /// Ordering on `R^{leads.len()}` induced by `self` and the given leading
    /// monomials of generators living in the module `self` orders.
    pub fn induced(&self, leads: &[ModuleMonomial]) -> Result<Self> {
        let stride = self.level + 1;
        let mut images = Vec::with_capacity(leads.len());
        let mut paths = Vec::with_capacity(leads.len() * (stride + 1));
        for (j, lm) in leads.iter().enumerate() {
            let c = lm.component();
            if c >= self.rank() {
                return Err(Error::ComponentOutOfRange {
                    component: c,
                    rank: self.rank(),
                });
            }
            images.push(lm.mono.mul(&self.images[c]));
            paths.extend_from_slice(&self.paths[c * stride..(c + 1) * stride]);
            paths.push(j as u32);
        }
        Ok(LevelOrdering {
            base: self.base,
            level: self.level + 1,
            images,
            paths,
        })
    }

    pub fn base(&self) -> BaseOrdering {
        self.base
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    /// Level-0 image of the basis element `e_comp`.
    pub fn image(&self, comp: usize) -> &Monomial {
        &self.images[comp]
    }

    /// Level-0 component reached from `e_comp`.
    pub fn root_component(&self, comp: usize) -> usize {
        self.paths[comp * (self.level + 1)] as usize
    }

    /// The level-0 monomial `m * image(comp)` that `m e_comp` descends to.
    pub fn descend(&self, mm: &ModuleMonomial) -> ModuleMonomial {
        ModuleMonomial::new(
            mm.mono.mul(&self.images[mm.component()]),
            self.root_component(mm.component()),
        )
    }

    #[inline]
    pub fn cmp(&self, a: &ModuleMonomial, b: &ModuleMonomial) -> Ordering {
        if a.comp == b.comp {
            return self.base.cmp(&a.mono, &b.mono);
        }
        let (ca, cb) = (a.component(), b.component());
        match self
            .base
            .cmp_products(&a.mono, &self.images[ca], &b.mono, &self.images[cb])
        {
            Ordering::Equal => {}
            o => return o,
        }
        let stride = self.level + 1;
        let pa = &self.paths[ca * stride..(ca + 1) * stride];
        let pb = &self.paths[cb * stride..(cb + 1) * stride];
        // level 0: smaller component is larger; induced levels: larger index is larger
        match pb[0].cmp(&pa[0]) {
            Ordering::Equal => {}
            o => return o,
        }
        pa[1..].cmp(&pb[1..])
    }

    #[inline]
    pub fn cmp_counted(&self, a: &ModuleMonomial, b: &ModuleMonomial, counters: &mut StatCounters) -> Ordering {
        counters.n_monomial_cmp += 1;
        self.cmp(a, b)
    }
}

/// A chain of orderings `F_0, F_1, ...` each induced by the one below.
#[derive(Clone, Debug)]
pub struct OrderingChain {
    base: BaseOrdering,
    levels: Vec<Arc<LevelOrdering>>,
}

impl OrderingChain {
    pub fn new(base: BaseOrdering, rank: usize) -> Self {
        OrderingChain {
            base,
            levels: vec![Arc::new(LevelOrdering::free(base, rank))],
        }
    }

    pub fn base(&self) -> BaseOrdering {
        self.base
    }

    /// Number of levels, including level 0.
    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn level(&self, k: usize) -> Result<&Arc<LevelOrdering>> {
        self.levels.get(k).ok_or(Error::LevelOutOfRange {
            level: k,
            available: self.levels.len(),
        })
    }

    pub fn top(&self) -> &Arc<LevelOrdering> {
        self.levels.last().expect("chain always has level 0")
    }

    /// Adds the level induced by the given leading monomials of the top level.
    pub fn extend_with_leads(&self, leads: &[ModuleMonomial]) -> Result<OrderingChain> {
        let next = self.top().induced(leads)?;
        let mut levels = self.levels.clone();
        levels.push(Arc::new(next));
        Ok(OrderingChain {
            base: self.base,
            levels,
        })
    }

    /// Adds the level induced by the leading monomials of `generators`,
    /// taken under the current top ordering.
    pub fn extend_chain(&self, generators: &[ModuleVector]) -> Result<OrderingChain> {
        let top = self.top();
        let leads = generators
            .iter()
            .map(|g| g.leading_term(top).map(|t| t.monomial))
            .collect::<Result<Vec<_>>>()?;
        self.extend_with_leads(&leads)
    }

    pub fn cmp_induced(
        &self,
        a: &ModuleMonomial,
        b: &ModuleMonomial,
        level: usize,
        counters: &mut StatCounters,
    ) -> Result<Ordering> {
        Ok(self.level(level)?.cmp_counted(a, b, counters))
    }
}
