//! Leading syzygy modules and the Schreyer frame.
//!
//! For a Groebner basis `f_1, ..., f_r` the leading module of its syzygies is
//! `sum_i M_i e_i` where `M_i` is generated by the monomials `m_ji` with
//! `j < i`. Its minimal generators are the leading monomials of a minimal
//! Groebner basis of the syzygies, so the shape of an entire resolution can
//! be computed from leading monomials alone.

use std::cmp::Ordering;

use crate::monomial::ModuleMonomial;
use crate::ordering::{LevelOrdering, OrderingChain};

/// Minimal generators of one leading syzygy module.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FrameLevel {
    pub terms: Vec<ModuleMonomial>,
    /// `(i, j)` with `terms[k] = m_ji e_i`.
    pub source_pairs: Vec<(usize, usize)>,
    pub degrees: Vec<i64>,
}

impl FrameLevel {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Reorders terms, pairs and degrees by `perm` (new position -> old position).
    pub fn permute(&mut self, perm: &[usize]) {
        self.terms = perm.iter().map(|&i| self.terms[i]).collect();
        self.source_pairs = perm.iter().map(|&i| self.source_pairs[i]).collect();
        self.degrees = perm.iter().map(|&i| self.degrees[i]).collect();
    }
}

/// Minimal generating set of the leading syzygy module of generators with the
/// given leading monomials; `twists` are the degrees of the basis of the
/// module the leading monomials live in and are used only to record degrees.
///
/// Terms come out sorted by component, then by decreasing cofactor under the
/// base ordering.
pub fn lead_syz(leads: &[ModuleMonomial], twists: &[i64], ord: &LevelOrdering) -> FrameLevel {
    let base = ord.base();
    let mut level = FrameLevel::default();
    // previous generators bucketed by component
    let mut by_comp: Vec<Vec<usize>> = Vec::new();
    for (i, li) in leads.iter().enumerate() {
        let c = li.component();
        if by_comp.len() <= c {
            by_comp.resize_with(c + 1, Vec::new);
        }
        let mut kept: Vec<(crate::monomial::Monomial, usize)> = Vec::new();
        for &j in &by_comp[c] {
            let lcm = leads[j].mono.lcm(&li.mono);
            let t = lcm.div(&li.mono).unwrap();
            if kept.iter().any(|(k, _)| k.divides(&t)) {
                continue;
            }
            kept.retain(|(k, _)| !t.divides(k));
            kept.push((t, j));
        }
        by_comp[c].push(i);
        kept.sort_by(|a, b| base.cmp(&b.0, &a.0));
        let di = li.mono.degree() as i64 + twists[c];
        for (t, j) in kept {
            level.terms.push(ModuleMonomial::new(t, i));
            level.source_pairs.push((i, j));
            level.degrees.push(t.degree() as i64 + di);
        }
    }
    level
}

/// Permutation (new position -> old position) sorting `terms` of the module
/// ordered by `ord`: ascending degree, then decreasing level-0 image under
/// the base ordering, then ascending component.
pub fn reorder_permutation(terms: &[ModuleMonomial], degrees: &[i64], ord: &LevelOrdering) -> Vec<usize> {
    let base = ord.base();
    let images: Vec<_> = terms.iter().map(|t| ord.descend(t).mono).collect();
    let mut perm: Vec<usize> = (0..terms.len()).collect();
    perm.sort_by(|&a, &b| {
        degrees[a]
            .cmp(&degrees[b])
            .then_with(|| base.cmp(&images[b], &images[a]))
            .then_with(|| terms[a].comp.cmp(&terms[b].comp))
            .then_with(|| base.cmp(&terms[b].mono, &terms[a].mono))
    });
    perm
}

/// A chain of frame levels together with the induced orderings they define.
#[derive(Clone, Debug)]
pub struct SchreyerFrame {
    /// Level `k` holds the leading monomials of the generators of the
    /// `k`-th syzygy module; level 0 holds the Groebner basis leads.
    pub levels: Vec<FrameLevel>,
    /// Chain with one ordering per free module `F_0, F_1, ...`.
    pub chain: OrderingChain,
}

impl SchreyerFrame {
    /// Frame of a Groebner basis with leading monomials `leads` in a free
    /// module with the given twists. Stops once `max_length` levels exist or
    /// at the first empty level.
    pub fn build(
        leads: &[ModuleMonomial],
        twists: &[i64],
        chain: OrderingChain,
        max_length: Option<usize>,
        reorder: bool,
    ) -> SchreyerFrame {
        let degrees = leads
            .iter()
            .map(|l| l.mono.degree() as i64 + twists[l.component()])
            .collect();
        let first = FrameLevel {
            terms: leads.to_vec(),
            source_pairs: vec![(0, 0); leads.len()],
            degrees,
        };
        let mut frame = SchreyerFrame {
            levels: vec![first],
            chain,
        };
        loop {
            let k = frame.levels.len();
            let last = frame.levels.last().unwrap();
            if last.is_empty() || max_length.is_some_and(|m| k >= m) {
                break;
            }
            let next_chain = frame
                .chain
                .extend_with_leads(&last.terms)
                .expect("frame terms lie in the current top module");
            let ord = next_chain.top().clone();
            let twists_of_last = if k == 1 { twists } else { &frame.levels[k - 2].degrees };
            let mut next = lead_syz(&last.terms, twists_of_last, &ord);
            if reorder {
                let perm = reorder_permutation(&next.terms, &next.degrees, &ord);
                next.permute(&perm);
            }
            frame.chain = next_chain;
            frame.levels.push(next);
        }
        frame
    }

    /// Sizes of all levels including the Groebner basis level.
    pub fn ranks(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.len()).collect()
    }
}

/// No term of `terms` divides another.
pub fn is_minimal(terms: &[ModuleMonomial]) -> bool {
    terms.iter().enumerate().all(|(a, ta)| {
        terms
            .iter()
            .enumerate()
            .all(|(b, tb)| a == b || !ta.divides(tb))
    })
}

/// Compares frame terms in canonical order; used to check sortedness.
pub fn canonical_cmp(a: &ModuleMonomial, b: &ModuleMonomial, ord: &LevelOrdering) -> Ordering {
    a.comp
        .cmp(&b.comp)
        .then_with(|| ord.base().cmp(&b.mono, &a.mono))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;
    use crate::ordering::BaseOrdering;

    fn mm(e: &[u32], c: usize) -> ModuleMonomial {
        ModuleMonomial::new(Monomial::new(e).unwrap(), c)
    }

    #[test]
    fn worked_example_frame() {
        let base = BaseOrdering::lex(4);
        let leads = [mm(&[1, 1, 0, 0], 0), mm(&[1, 0, 1, 0], 0), mm(&[0, 1, 1, 0], 0)];
        let chain = OrderingChain::new(base, 1);
        let ord1 = chain.extend_with_leads(&leads).unwrap();
        let level = lead_syz(&leads, &[0], ord1.top());
        assert_eq!(level.terms, vec![mm(&[0, 1, 0, 0], 1), mm(&[1, 0, 0, 0], 2)]);
        assert_eq!(level.source_pairs, vec![(1, 0), (2, 0)]);
        assert_eq!(level.degrees, vec![3, 3]);

        let frame = SchreyerFrame::build(&leads, &[0], chain, None, true);
        assert_eq!(frame.ranks(), vec![3, 2, 0]);
        assert_eq!(frame.levels[1].terms, level.terms);
    }

    #[test]
    fn tiny_frames() {
        let base = BaseOrdering::degrevlex(2);
        let chain = OrderingChain::new(base, 1);
        let one = [mm(&[1, 0], 0)];
        let c1 = chain.extend_with_leads(&one).unwrap();
        assert!(lead_syz(&one, &[0], c1.top()).is_empty());
        assert_eq!(SchreyerFrame::build(&one, &[0], chain.clone(), None, true).ranks(), vec![1, 0]);

        let xy = [mm(&[1, 0], 0), mm(&[0, 1], 0)];
        let c2 = chain.extend_with_leads(&xy).unwrap();
        assert_eq!(lead_syz(&xy, &[0], c2.top()).terms, vec![mm(&[1, 0], 1)]);

        // x^2, xy, y^2: x e2 from (x^2, xy); (x^2, y^2) gives x^2 e3, pruned by x e3 from (xy, y^2)
        let quad = [mm(&[2, 0], 0), mm(&[1, 1], 0), mm(&[0, 2], 0)];
        let c3 = chain.extend_with_leads(&quad).unwrap();
        let l = lead_syz(&quad, &[0], c3.top());
        assert_eq!(l.terms, vec![mm(&[1, 0], 1), mm(&[1, 0], 2)]);
        assert_eq!(l.source_pairs, vec![(1, 0), (2, 1)]);
        assert!(is_minimal(&l.terms));
        assert_eq!(SchreyerFrame::build(&quad, &[0], chain, None, true).ranks(), vec![3, 2, 0]);
    }

    #[test]
    fn reorder_sorts_by_degree_then_image() {
        let base = BaseOrdering::degrevlex(3);
        let ord = LevelOrdering::free(base, 1);
        let terms = [mm(&[1, 1, 0], 0), mm(&[1, 0, 0], 0), mm(&[2, 1, 0], 0)];
        let degrees = [2, 1, 3];
        assert_eq!(reorder_permutation(&terms, &degrees, &ord), vec![1, 0, 2]);
        let sorted = [mm(&[1, 0, 0], 0), mm(&[0, 1, 0], 0)];
        assert_eq!(reorder_permutation(&sorted, &[1, 1], &ord), vec![0, 1]);
    }

    #[test]
    fn koszul_frame_has_binomial_ranks() {
        let base = BaseOrdering::degrevlex(4);
        let leads: Vec<_> = (0..4).map(|i| ModuleMonomial::new(Monomial::var(i), 0)).collect();
        let frame = SchreyerFrame::build(&leads, &[0], OrderingChain::new(base, 1), None, true);
        assert_eq!(frame.ranks(), vec![4, 6, 4, 1, 0]);
        for l in &frame.levels {
            assert!(is_minimal(&l.terms));
        }
    }
}
