//! Benchmark ideals: apolar ideals of sums of powers of linear forms, which
//! give Artinian graded Gorenstein quotients, and random homogeneous ideals.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};
use crate::linalg::DenseMatrix;
use crate::monomial::{ModuleMonomial, Monomial, MAX_VARS};
use crate::ordering::{LevelOrdering, OrderingKind};
use crate::ring::Ring;
use crate::vector::{ModuleVector, Term};

const RESAMPLE_BUDGET: usize = 8;

/// `f = l_1^d + ... + l_s^d` for `s` random linear forms in `n + 1` variables over `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AgrSpec {
    pub n: usize,
    pub d: u32,
    pub s: usize,
    pub p: u64,
    pub seed: u64,
}

impl AgrSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n < 1 || self.d < 1 || self.s < 1 {
            return Err(Error::InvalidAgrSpec("n, d and s must be positive".into()));
        }
        if self.n + 1 > MAX_VARS {
            return Err(Error::TooManyVariables(self.n + 1));
        }
        PrimeField::new(self.p)?;
        if self.p <= self.d as u64 {
            return Err(Error::InvalidAgrSpec(format!("p = {} must exceed d = {}", self.p, self.d)));
        }
        Ok(())
    }

    pub fn ring(&self) -> Result<Ring> {
        Ring::numbered(self.p, self.n + 1, OrderingKind::DegRevLex)
    }
}

/// All monomials of degree `e` in `nvars` variables, lexicographically descending.
pub fn monomials_of_degree(nvars: usize, e: u32) -> Vec<Monomial> {
    fn rec(v: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if v + 1 == cur.len() {
            cur[v] = left;
            out.push(Monomial::new(cur).unwrap());
            return;
        }
        for a in (0..=left).rev() {
            cur[v] = a;
            rec(v + 1, left - a, cur, out);
        }
        cur[v] = 0;
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if e == 0 {
            out.push(Monomial::ONE);
        }
        return out;
    }
    rec(0, e, &mut vec![0; nvars], &mut out);
    out
}

/// A form of degree `d` in the divided power basis: `f = sum_a c_a X^[a]`.
/// Monomials act by contraction, `x^b . X^[a] = X^[a-b]` when `b <= a`.
#[derive(Clone, Debug)]
pub struct ApolarForm {
    field: PrimeField,
    nvars: usize,
    d: u32,
    coeffs: HashMap<Monomial, FieldElement>,
}

impl ApolarForm {
    /// `sum_i l_i^d / d!`, whose divided power coefficients are `c_a = sum_i l_i^a`.
    pub fn power_sum(field: &PrimeField, d: u32, forms: &[Vec<FieldElement>]) -> Self {
        let nvars = forms.first().map_or(0, |l| l.len());
        let mut coeffs = HashMap::new();
        for a in monomials_of_degree(nvars, d) {
            let mut c = FieldElement::ZERO;
            for l in forms {
                let mut t = FieldElement::ONE;
                for (v, &lv) in l.iter().enumerate() {
                    t = field.mul(t, field.pow(lv, a.exponent(v) as u64));
                }
                c = field.add(c, t);
            }
            if !c.is_zero() {
                coeffs.insert(a, c);
            }
        }
        ApolarForm {
            field: *field,
            nvars,
            d,
            coeffs,
        }
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, a: &Monomial) -> FieldElement {
        self.coeffs.get(a).copied().unwrap_or(FieldElement::ZERO)
    }

    /// Catalecticant in degree `e`: rows are the degree `d - e` monomials,
    /// columns the degree `e` monomials, entry `c_{row * col}`.
    pub fn catalecticant(&self, e: u32) -> (DenseMatrix, Vec<Monomial>) {
        let cols = monomials_of_degree(self.nvars, e);
        if e > self.d {
            return (DenseMatrix::zeros(0, cols.len()), cols);
        }
        let rows = monomials_of_degree(self.nvars, self.d - e);
        let mut m = DenseMatrix::zeros(rows.len(), cols.len());
        for (i, r) in rows.iter().enumerate() {
            for (j, c) in cols.iter().enumerate() {
                m.set(i, j, self.coeff(&r.mul(c)));
            }
        }
        (m, cols)
    }

    /// `h_e = rank` of the degree `e` catalecticant, for `e = 0..=d`.
    pub fn hilbert_function(&self) -> Vec<usize> {
        (0..=self.d).map(|e| self.catalecticant(e).0.rank(&self.field)).collect()
    }

    /// `g . f` as a divided power form; empty when `g` annihilates `f`.
    pub fn contract(&self, g: &ModuleVector) -> HashMap<Monomial, FieldElement> {
        let mut out: HashMap<Monomial, FieldElement> = HashMap::new();
        for t in g.terms() {
            let b = t.monomial.mono;
            for (a, &c) in &self.coeffs {
                if let Some(q) = a.div(&b) {
                    let v = out.entry(q).or_insert(FieldElement::ZERO);
                    *v = self.field.add(*v, self.field.mul(t.coeff, c));
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }
}

/// Incrementally maintained row echelon basis of a subspace of `F_p^cols`.
struct EchelonBasis {
    cols: usize,
    pivots: HashMap<usize, Vec<FieldElement>>,
}

impl EchelonBasis {
    fn new(cols: usize) -> Self {
        EchelonBasis {
            cols,
            pivots: HashMap::new(),
        }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds `row` to the span; returns false if it was already contained.
    fn insert(&mut self, mut row: Vec<FieldElement>, field: &PrimeField) -> bool {
        for c in 0..self.cols {
            if row[c].is_zero() {
                continue;
            }
            match self.pivots.get(&c) {
                Some(p) => {
                    let f = row[c];
                    for k in c..self.cols {
                        if !p[k].is_zero() {
                            row[k] = field.sub(row[k], field.mul(f, p[k]));
                        }
                    }
                }
                None => {
                    let inv = field.inv(row[c]).unwrap();
                    for v in row[c..].iter_mut() {
                        *v = field.mul(*v, inv);
                    }
                    self.pivots.insert(c, row);
                    return true;
                }
            }
        }
        false
    }
}

fn to_polynomial(v: &[FieldElement], basis: &[Monomial], ord: &LevelOrdering, field: &PrimeField) -> ModuleVector {
    let terms = v
        .iter()
        .zip(basis)
        .filter(|(c, _)| !c.is_zero())
        .map(|(&c, &m)| Term::new(c, ModuleMonomial::new(m, 0)))
        .collect();
    ModuleVector::from_terms(terms, ord, field)
}

/// Minimal homogeneous generators of `Ann(f)` in degrees `1..=d+1`.
pub fn apolar_ideal(ring: &Ring, form: &ApolarForm) -> Vec<ModuleVector> {
    let field = ring.field();
    let ord = LevelOrdering::free(ring.ordering(), 1);
    let nvars = ring.nvars();
    let mut gens = Vec::new();
    let mut previous_basis: Vec<Vec<(Monomial, FieldElement)>> = Vec::new();
    for e in 1..=form.degree() + 1 {
        let (cat, monos) = form.catalecticant(e);
        let index: HashMap<Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let kernel = cat.kernel(field);
        let mut span = EchelonBasis::new(monos.len());
        'shifts: for g in &previous_basis {
            for v in 0..nvars {
                if span.rank() == kernel.len() {
                    break 'shifts;
                }
                let x = Monomial::var(v);
                let mut row = vec![FieldElement::ZERO; monos.len()];
                for (m, c) in g {
                    row[index[&m.mul(&x)]] = *c;
                }
                span.insert(row, field);
            }
        }
        for k in &kernel {
            if span.rank() == kernel.len() {
                break;
            }
            if span.insert(k.clone(), field) {
                gens.push(to_polynomial(k, &monos, &ord, field));
            }
        }
        previous_basis = kernel
            .iter()
            .map(|k| {
                k.iter()
                    .zip(&monos)
                    .filter(|(c, _)| !c.is_zero())
                    .map(|(&c, &m)| (m, c))
                    .collect()
            })
            .collect();
    }
    gens
}

fn random_linear_forms(rng: &mut ChaCha8Rng, field: &PrimeField, nvars: usize, s: usize) -> Vec<Vec<FieldElement>> {
    let p = field.characteristic() as u64;
    (0..s)
        .map(|_| {
            (0..nvars)
                .map(|v| {
                    let lo = if v == 0 { 1 } else { 0 };
                    field.element(rng.gen_range(lo..p))
                })
                .collect()
        })
        .collect()
}

/// Samples the linear forms of `spec` and returns the ring, the form and the
/// minimal generators of its apolar ideal.
pub fn gen_agr_with_form(spec: &AgrSpec) -> Result<(Ring, ApolarForm, Vec<ModuleVector>)> {
    spec.validate()?;
    let ring = spec.ring()?;
    let field = *ring.field();
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    for _ in 0..RESAMPLE_BUDGET {
        let forms = random_linear_forms(&mut rng, &field, spec.n + 1, spec.s);
        let form = ApolarForm::power_sum(&field, spec.d, &forms);
        if form.is_zero() {
            continue;
        }
        let gens = apolar_ideal(&ring, &form);
        return Ok((ring, form, gens));
    }
    Err(Error::DegenerateForm(format!(
        "sum of powers vanished for {RESAMPLE_BUDGET} samples"
    )))
}

pub fn gen_agr(spec: &AgrSpec) -> Result<(Ring, Vec<ModuleVector>)> {
    let (ring, _, gens) = gen_agr_with_form(spec)?;
    Ok((ring, gens))
}

/// `C(n + e, n)` without overflow for the sizes used here.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Hilbert function of `R / Ann(f)` for `s` general powers:
/// `h_e = min(C(n+e, n), s, C(n+d-e, n))`.
pub fn generic_agr_hilbert_function(n: usize, d: u32, s: usize) -> Vec<usize> {
    let n = n as u64;
    (0..=d as u64)
        .map(|e| binomial(n + e, n).min(s as u64).min(binomial(n + d as u64 - e, n)) as usize)
        .collect()
}

/// Forms of the given degrees in `nvars` variables with every monomial
/// present and every coefficient a uniform nonzero residue.
pub fn gen_random_homogeneous(nvars: usize, degrees: &[u32], p: u64, seed: u64) -> Result<(Ring, Vec<ModuleVector>)> {
    gen_random_sparse(nvars, degrees, usize::MAX, p, seed)
}

/// Like [`gen_random_homogeneous`], but each form keeps at most `max_terms`
/// monomials chosen uniformly.
pub fn gen_random_sparse(
    nvars: usize,
    degrees: &[u32],
    max_terms: usize,
    p: u64,
    seed: u64,
) -> Result<(Ring, Vec<ModuleVector>)> {
    let ring = Ring::numbered(p, nvars, OrderingKind::DegRevLex)?;
    let field = *ring.field();
    let ord = LevelOrdering::free(ring.ordering(), 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut polys = Vec::with_capacity(degrees.len());
    for &deg in degrees {
        let mut monos = monomials_of_degree(nvars, deg);
        while monos.len() > max_terms.max(1) {
            let i = rng.gen_range(0..monos.len());
            monos.remove(i);
        }
        let terms = monos
            .into_iter()
            .map(|m| Term::new(field.element(rng.gen_range(1..p)), ModuleMonomial::new(m, 0)))
            .collect();
        polys.push(ModuleVector::from_terms(terms, &ord, &field));
    }
    Ok((ring, polys))
}
