use std::ops::AddAssign;

/// Operation counters for one computation.
///
/// Each worker thread owns its own counters; results are combined with
/// [`StatCounters::merge`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StatCounters {
    /// Terms in the computed differentials, excluding the first map.
    pub n_terms: u64,
    /// Coefficient multiplications.
    pub n_mult: u64,
    /// Coefficient additions of colliding monomials.
    pub n_add: u64,
    /// Additions whose result was zero.
    pub n_canc: u64,
    /// Monomial comparisons under module orderings.
    pub n_monomial_cmp: u64,
}

impl StatCounters {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn merge(&mut self, other: &StatCounters) {
        self.n_terms += other.n_terms;
        self.n_mult += other.n_mult;
        self.n_add += other.n_add;
        self.n_canc += other.n_canc;
        self.n_monomial_cmp += other.n_monomial_cmp;
    }

    /// Field operation counts only; comparisons and term counts are left out.
    pub fn field_ops(&self) -> (u64, u64, u64) {
        (self.n_mult, self.n_add, self.n_canc)
    }

    /// Componentwise `self >= earlier`.
    pub fn dominates(&self, earlier: &StatCounters) -> bool {
        self.n_terms >= earlier.n_terms
            && self.n_mult >= earlier.n_mult
            && self.n_add >= earlier.n_add
            && self.n_canc >= earlier.n_canc
            && self.n_monomial_cmp >= earlier.n_monomial_cmp
    }
}

impl AddAssign<&StatCounters> for StatCounters {
    fn add_assign(&mut self, rhs: &StatCounters) {
        self.merge(rhs);
    }
}
