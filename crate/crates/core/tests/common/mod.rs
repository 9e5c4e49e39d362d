#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use syzlift::agr::gen_random_sparse;
use syzlift::betti::{betti_minimal_from_nonminimal, betti_nonminimal, BettiTable};
use syzlift::frame::{FrameLevel, SchreyerFrame};
use syzlift::groebner::{buchberger, GbOptions, GroebnerBasis};
use syzlift::hilbert::hilbert_numerator;
use syzlift::io::parse_input;
use syzlift::lift::{psi, syz_lift, LiftContext};
use syzlift::{
    resolve, FieldElement, LiftAlgorithm, ModuleMonomial, ModuleVector, OrderingChain, Resolution, ResolveOptions, Ring,
    StatCounters,
};

pub const WORKED_EXAMPLE: &str = "ring 32003 w,x,y,z lp
w*x+w*z+x^2+2*x*z-z^2
w*y-w*z-x*z-y*z-2*z^2
x*y+z^2
";

pub fn worked_example() -> (Ring, Vec<ModuleVector>) {
    let doc = parse_input(WORKED_EXAMPLE).unwrap();
    (doc.ring, doc.polys)
}

pub struct CorpusIdeal {
    pub seed: u64,
    pub ring: Ring,
    pub polys: Vec<ModuleVector>,
}

/// Random homogeneous ideals: 2 to 4 variables, 1 to 5 generators of degree
/// 1 to 3, sparse or dense, over F_32003.
pub fn corpus(count: usize, first_seed: u64) -> Vec<CorpusIdeal> {
    (first_seed..first_seed + count as u64)
        .map(|seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let nvars = rng.gen_range(2..=4);
            let ngens = rng.gen_range(1..=5);
            let degrees: Vec<u32> = (0..ngens).map(|_| rng.gen_range(1..=3)).collect();
            let terms = if rng.gen_bool(0.25) { usize::MAX } else { rng.gen_range(1..=4) };
            let (ring, polys) = gen_random_sparse(nvars, &degrees, terms, 32003, seed).unwrap();
            CorpusIdeal { seed, ring, polys }
        })
        .collect()
}

fn sorted(mut v: Vec<ModuleMonomial>) -> Vec<ModuleMonomial> {
    v.sort();
    v
}

/// Leading terms of a Groebner basis of all syzygies of `basis`, computed
/// from the standard representations of every S-vector.
pub fn brute_force_syzygy_leads(
    basis: &GroebnerBasis,
    ord: &std::sync::Arc<syzlift::LevelOrdering>,
    field: &syzlift::PrimeField,
) -> Result<Vec<ModuleMonomial>, String> {
    let leads = basis.leading_monomials();
    let mut all = FrameLevel::default();
    for i in 0..leads.len() {
        for j in 0..i {
            if leads[i].component() == leads[j].component() {
                let m = basis.m_coeff(i, j).map_err(|e| e.to_string())?;
                all.terms.push(ModuleMonomial::new(m, i));
                all.source_pairs.push((i, j));
                all.degrees.push(0);
            }
        }
    }
    let ctx = LiftContext::new(basis, ord, field);
    let mut c = StatCounters::new();
    let syz = syz_lift(&ctx, &all, LiftAlgorithm::Schreyer, 1, &mut c).map_err(|e| e.to_string())?;
    let syz: Vec<ModuleVector> = syz.into_iter().filter(|s| !s.is_zero()).collect();
    let gb = buchberger(&syz, ord.clone(), field, GbOptions::default(), &mut c).map_err(|e| e.to_string())?;
    Ok(sorted(gb.leading_monomials().to_vec()))
}

/// First failure of each kind found while lifting every frame level.
#[derive(Default)]
pub struct LiftingFindings {
    /// `psi(lift(s)) = 0` and `LT(lift(s)) = s`.
    pub contract: Option<String>,
    /// Identical leading terms across the lifting algorithms, including the
    /// plain Schreyer algorithm.
    pub agreement: Option<String>,
    /// Frame level against the leading terms of a brute-force syzygy basis.
    pub oracle: Option<String>,
}

impl LiftingFindings {
    pub fn first(&self) -> Option<&String> {
        self.contract.as_ref().or(self.agreement.as_ref()).or(self.oracle.as_ref())
    }
}

fn note(slot: &mut Option<String>, msg: String) {
    if slot.is_none() {
        *slot = Some(msg);
    }
}

pub fn lifting_findings(ring: &Ring, polys: &[ModuleVector]) -> LiftingFindings {
    let mut f = LiftingFindings::default();
    if let Err(e) = walk_frame(ring, polys, &mut f) {
        note(&mut f.contract, e.clone());
        note(&mut f.agreement, e.clone());
        note(&mut f.oracle, e);
    }
    f
}

fn walk_frame(ring: &Ring, polys: &[ModuleVector], f: &mut LiftingFindings) -> Result<(), String> {
    let field = ring.field();
    let chain0 = OrderingChain::new(ring.ordering(), 1);
    let mut c = StatCounters::new();
    let gb = buchberger(polys, chain0.top().clone(), field, GbOptions::default(), &mut c).map_err(|e| e.to_string())?;
    let frame = SchreyerFrame::build(gb.leading_monomials(), &[0], chain0, None, true);
    let mut current = gb;
    for k in 1..frame.levels.len() {
        let level = &frame.levels[k];
        let ord = frame.chain.level(k).map_err(|e| e.to_string())?;
        match brute_force_syzygy_leads(&current, ord, field) {
            Ok(brute) if brute != sorted(level.terms.clone()) => note(
                &mut f.oracle,
                format!("level {k}: frame {:?} but syzygy basis leads {:?}", level.terms, brute),
            ),
            Ok(_) => {}
            Err(e) => note(&mut f.oracle, format!("level {k}: {e}")),
        }
        if level.is_empty() {
            break;
        }
        let ctx = LiftContext::new(&current, ord, field);
        let mut reference: Option<Vec<ModuleMonomial>> = None;
        let mut next = Vec::new();
        for alg in LiftAlgorithm::ALL {
            let out = syz_lift(&ctx, level, alg, 1, &mut c).map_err(|e| format!("{alg}: {e}"))?;
            let mut lts = Vec::with_capacity(out.len());
            for (v, s) in out.iter().zip(&level.terms) {
                if !psi(v, &current, field, &mut c).is_zero() {
                    note(&mut f.contract, format!("level {k}, {alg}: lifting of {s:?} is not a syzygy"));
                }
                match v.leading_term(ord) {
                    Ok(lt) => {
                        if lt.monomial != *s || lt.coeff != FieldElement::ONE {
                            note(&mut f.contract, format!("level {k}, {alg}: leading term {lt:?} for frame term {s:?}"));
                        }
                        lts.push(lt.monomial);
                    }
                    Err(e) => note(&mut f.contract, format!("level {k}, {alg}: {e}")),
                }
            }
            match &reference {
                None => reference = Some(lts),
                Some(r) if *r != lts => note(&mut f.agreement, format!("level {k}, {alg}: leading terms differ")),
                Some(_) => {}
            }
            if alg == LiftAlgorithm::Tree {
                next = out;
            }
        }
        current = GroebnerBasis::new(next, ord.clone(), field).map_err(|e| e.to_string())?;
    }
    Ok(())
}

/// Lifting contract and oracle agreement on every level of the frame of `polys`:
/// `psi(lift(s)) = 0`, `LT(lift(s)) = s` for every algorithm, identical
/// leading terms across algorithms, and frame levels equal to the leading
/// terms of brute-force syzygy bases.
pub fn check_lifting(ring: &Ring, polys: &[ModuleVector]) -> Result<(), String> {
    match lifting_findings(ring, polys).first() {
        Some(e) => Err(e.clone()),
        None => Ok(()),
    }
}

pub struct ResolutionCheck {
    pub nonminimal: BettiTable,
    pub minimal: BettiTable,
}

/// First failure of each kind over the resolutions computed by every
/// algorithm.
#[derive(Default)]
pub struct ResolutionFindings {
    /// `phi_k phi_{k+1} = 0` and length at most `n + 1`.
    pub complex: Option<String>,
    /// Euler polynomials of both tables against the Hilbert numerator.
    pub hilbert: Option<String>,
    /// Betti table of the minimized resolution against the constant strands.
    pub minimize: Option<String>,
    /// Identical tables across algorithms.
    pub agreement: Option<String>,
    pub tables: Option<ResolutionCheck>,
}

impl ResolutionFindings {
    pub fn first(&self) -> Option<&String> {
        self.complex
            .as_ref()
            .or(self.hilbert.as_ref())
            .or(self.minimize.as_ref())
            .or(self.agreement.as_ref())
    }
}

pub fn resolution_findings(ring: &Ring, polys: &[ModuleVector]) -> ResolutionFindings {
    let mut f = ResolutionFindings::default();
    for alg in LiftAlgorithm::ALL {
        let opts = ResolveOptions {
            algorithm: alg,
            ..Default::default()
        };
        let res = match resolve(ring, polys, &[0], &opts) {
            Ok(r) => r,
            Err(e) => {
                note(&mut f.complex, format!("{alg}: {e}"));
                continue;
            }
        };
        if !res.is_complex() {
            note(&mut f.complex, format!("{alg}: not a complex"));
        }
        if res.length() > ring.nvars() + 1 {
            note(&mut f.complex, format!("{alg}: length {} exceeds n + 1", res.length()));
        }
        let tables = betti_nonminimal(&res).and_then(|n| Ok((n, betti_minimal_from_nonminimal(&res)?)));
        let (nonmin, min) = match tables {
            Ok(t) => t,
            Err(e) => {
                note(&mut f.minimize, format!("{alg}: {e}"));
                continue;
            }
        };
        if let Err(e) = check_hilbert(&res, &nonmin, &min) {
            note(&mut f.hilbert, format!("{alg}: {e}"));
        }
        match res.minimize() {
            Ok(m) => {
                if !m.is_complex() || !m.is_minimal() {
                    note(&mut f.minimize, format!("{alg}: minimized resolution is not a minimal complex"));
                }
                match betti_nonminimal(&m) {
                    Ok(after) if after != min => note(
                        &mut f.minimize,
                        format!("{alg}: minimize gives\n{after}but constant strands give\n{min}"),
                    ),
                    Ok(_) => {}
                    Err(e) => note(&mut f.minimize, format!("{alg}: {e}")),
                }
            }
            Err(e) => note(&mut f.minimize, format!("{alg}: {e}")),
        }
        match &f.tables {
            None => {
                f.tables = Some(ResolutionCheck {
                    nonminimal: nonmin,
                    minimal: min,
                })
            }
            Some(t) if t.nonminimal != nonmin || t.minimal != min => {
                note(&mut f.agreement, format!("{alg}: Betti tables differ"))
            }
            Some(_) => {}
        }
    }
    f
}

/// Complex property for every algorithm, Euler characteristic against the
/// Hilbert numerator of the leading ideal, and minimization against the
/// constant-strand ranks.
pub fn check_resolution(ring: &Ring, polys: &[ModuleVector]) -> Result<ResolutionCheck, String> {
    let f = resolution_findings(ring, polys);
    if let Some(e) = f.first() {
        return Err(e.clone());
    }
    f.tables.ok_or_else(|| "no resolution computed".to_string())
}
pub fn check_hilbert(res: &Resolution, nonmin: &BettiTable, min: &BettiTable) -> Result<(), String> {
    let leads: Vec<ModuleMonomial> = res.differential(1).iter().map(|g| g.lead().unwrap().monomial).collect();
    let h = hilbert_numerator(&leads, res.twists(0));
    if nonmin.euler_polynomial() != h {
        return Err(format!("non-minimal Euler polynomial {} but Hilbert numerator {h}", nonmin.euler_polynomial()));
    }
    if min.euler_polynomial() != h {
        return Err(format!("minimal Euler polynomial {} but Hilbert numerator {h}", min.euler_polynomial()));
    }
    Ok(())
}
