//! Graded Betti tables of resolutions and the constant strands of their
//! differentials.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::hilbert::IntPoly;
use crate::linalg::DenseMatrix;
use crate::resolution::Resolution;

/// `beta_{k,j}`: number of basis elements of degree `j` in `F_k`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i64), u64>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries(entries: impl IntoIterator<Item = ((usize, i64), u64)>) -> Self {
        let mut t = Self::new();
        for ((k, j), v) in entries {
            t.add(k, j, v);
        }
        t
    }

    pub fn add(&mut self, k: usize, j: i64, v: u64) {
        if v > 0 {
            *self.entries.entry((k, j)).or_insert(0) += v;
        }
    }

    pub fn get(&self, k: usize, j: i64) -> u64 {
        self.entries.get(&(k, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, i64), u64)> + '_ {
        self.entries.iter().map(|(&kj, &v)| (kj, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest homological index with a nonzero entry.
    pub fn length(&self) -> usize {
        self.entries.keys().map(|&(k, _)| k).max().unwrap_or(0)
    }

    /// Column sums `sum_j beta_{k,j}` for `k = 0..=length`.
    pub fn totals(&self) -> Vec<u64> {
        if self.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0; self.length() + 1];
        for (&(k, _), &v) in &self.entries {
            out[k] += v;
        }
        out
    }

    /// `beta` at row `r = j - k` and column `k`, as displayed.
    pub fn at_row(&self, r: i64, k: usize) -> u64 {
        self.get(k, r + k as i64)
    }

    /// `sum_{k,j} (-1)^k beta_{k,j} t^j`.
    pub fn euler_polynomial(&self) -> IntPoly {
        let mut p = IntPoly::zero();
        for (&(k, j), &v) in &self.entries {
            let s = if k % 2 == 0 { 1 } else { -1 };
            p.add_term(s * v as i64, j);
        }
        p
    }

    /// `beta_{k,j} = beta_{L-k, S-j}` where `L` is the length and `S` is the sum
    /// of the lowest degree in column 0 and the highest in column `L`.
    pub fn is_centrally_symmetric(&self) -> bool {
        if self.is_empty() {
            return true;
        }
        let l = self.length();
        let lo = self.entries.keys().filter(|&&(k, _)| k == 0).map(|&(_, j)| j).min();
        let hi = self.entries.keys().filter(|&&(k, _)| k == l).map(|&(_, j)| j).max();
        let (Some(lo), Some(hi)) = (lo, hi) else {
            return false;
        };
        let s = lo + hi;
        self.entries.iter().all(|(&(k, j), &v)| self.get(l - k, s - j) == v)
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let totals = self.totals();
        let cols = totals.len();
        let rows: Vec<i64> = {
            let lo = self.entries.keys().map(|&(k, j)| j - k as i64).min().unwrap_or(0);
            let hi = self.entries.keys().map(|&(k, j)| j - k as i64).max().unwrap_or(-1);
            (lo..=hi).collect()
        };
        let width = totals.iter().map(|v| v.to_string().len()).max().unwrap_or(1).max(cols.to_string().len()) + 1;
        let label = rows.iter().map(|r| r.to_string().len() + 1).max().unwrap_or(0).max(6);
        let rule = "-".repeat(label + cols * (width + 1));
        write!(f, "{:>label$}", "")?;
        for k in 0..cols {
            write!(f, " {k:>width$}")?;
        }
        writeln!(f)?;
        writeln!(f, "{rule}")?;
        for &r in &rows {
            write!(f, "{:>label$}", format!("{r}:"))?;
            for k in 0..cols {
                let v = self.at_row(r, k);
                if v == 0 {
                    write!(f, " {:>width$}", "-")?;
                } else {
                    write!(f, " {v:>width$}")?;
                }
            }
            writeln!(f)?;
        }
        writeln!(f, "{rule}")?;
        write!(f, "{:>label$}", "total:")?;
        for v in &totals {
            write!(f, " {v:>width$}")?;
        }
        writeln!(f)
    }
}

/// Ranks and degrees of the free modules of a graded resolution.
pub fn betti_nonminimal(res: &Resolution) -> Result<BettiTable> {
    res.require_graded()?;
    let mut t = BettiTable::new();
    for k in 0..=res.length() {
        for &j in res.twists(k) {
            t.add(k, j, 1);
        }
    }
    Ok(t)
}

/// Degree `j` constant strand of `phi_k`: rows are the degree `j` basis
/// elements of `F_{k-1}`, columns those of `F_k`.
pub fn constant_block(res: &Resolution, k: usize, j: i64) -> Result<DenseMatrix> {
    res.require_graded()?;
    if k == 0 || k > res.length() {
        return Ok(DenseMatrix::zeros(0, 0));
    }
    let rows: Vec<usize> = (0..res.rank(k - 1)).filter(|&i| res.twists(k - 1)[i] == j).collect();
    let cols: Vec<usize> = (0..res.rank(k)).filter(|&c| res.twists(k)[c] == j).collect();
    let mut row_of = vec![usize::MAX; res.rank(k - 1)];
    for (r, &i) in rows.iter().enumerate() {
        row_of[i] = r;
    }
    let mut m = DenseMatrix::zeros(rows.len(), cols.len());
    for (c, &col) in cols.iter().enumerate() {
        for t in res.differential(k)[col].terms() {
            if t.monomial.mono.is_one() {
                let r = row_of[t.component()];
                if r == usize::MAX {
                    return Err(Error::Internal(format!("constant entry of phi_{k} joins different degrees")));
                }
                m.set(r, c, t.coeff);
            }
        }
    }
    Ok(m)
}

pub fn block_rank(m: &DenseMatrix, field: &PrimeField) -> usize {
    m.rank(field)
}

/// `beta_{k,j} - rank B_{k,j} - rank B_{k+1,j}` for every entry of the
/// non-minimal table.
pub fn betti_minimal_from_nonminimal(res: &Resolution) -> Result<BettiTable> {
    let nonmin = betti_nonminimal(res)?;
    let field = res.ring().field();
    let mut ranks: BTreeMap<(usize, i64), u64> = BTreeMap::new();
    for ((k, j), _) in nonmin.entries() {
        if k >= 1 {
            let r = block_rank(&constant_block(res, k, j)?, field) as u64;
            if r > 0 {
                ranks.insert((k, j), r);
            }
        }
    }
    let mut out = BettiTable::new();
    for ((k, j), v) in nonmin.entries() {
        let below = ranks.get(&(k, j)).copied().unwrap_or(0);
        let above = ranks.get(&(k + 1, j)).copied().unwrap_or(0);
        let m = v
            .checked_sub(below + above)
            .ok_or_else(|| Error::Internal(format!("negative minimal Betti number at ({k}, {j})")))?;
        out.add(k, j, m);
    }
    Ok(out)
}
