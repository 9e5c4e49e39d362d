//! One line per acceptance criterion. Runs without the libtest harness so the
//! report is always printed; exits non-zero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use syzlift::agr::{gen_agr, AgrSpec};
use syzlift::betti::{betti_minimal_from_nonminimal, betti_nonminimal, BettiTable};
use syzlift::frame::lead_syz;
use syzlift::groebner::GroebnerBasis;
use syzlift::io::{differential_pgm, encode_pgm, format_resolution, stats_report};
use syzlift::lift::{lift_tree, syz_lift, LiftContext, SubtreeCache, TraceEvent};
use syzlift::{
    resolve, LiftAlgorithm, ModuleMonomial, ModuleVector, Monomial, OrderingChain, PrimeField, Resolution,
    ResolveOptions, Ring, StatCounters, Term,
};

use common::{corpus, lifting_findings, resolution_findings, worked_example};

const GOLDEN_RUNTIME: Duration = Duration::from_millis(1);
const GOLDEN_REPETITIONS: usize = 50;
const CORPUS_SIZE: usize = 200;
const CORPUS_FIRST_SEED: u64 = 1;
const AGR_SEEDS: [u64; 3] = [1, 2, 3];
const AGR_RUNTIME: Duration = Duration::from_secs(600);
const AGR_P: u64 = 10007;

type Outcome = Result<String, String>;

fn mm(e: &[u32], c: usize) -> ModuleMonomial {
    ModuleMonomial::new(Monomial::new(e).unwrap(), c)
}

const W: &[u32] = &[1, 0, 0, 0];
const X: &[u32] = &[0, 1, 0, 0];
const Y: &[u32] = &[0, 0, 1, 0];
const Z: &[u32] = &[0, 0, 0, 1];

fn vector(field: &PrimeField, ord: &syzlift::LevelOrdering, terms: &[(i64, &[u32], usize)]) -> ModuleVector {
    ModuleVector::from_terms(
        terms.iter().map(|(c, e, k)| Term::new(field.from_i64(*c), mm(e, *k))).collect(),
        ord,
        field,
    )
}

struct Golden {
    ring: Ring,
    basis: GroebnerBasis,
    chain: OrderingChain,
}

fn golden() -> Golden {
    let (ring, polys) = worked_example();
    let chain0 = OrderingChain::new(ring.ordering(), 1);
    let basis = GroebnerBasis::new(polys, chain0.top().clone(), ring.field()).unwrap();
    let chain = chain0.extend_with_leads(basis.leading_monomials()).unwrap();
    Golden { ring, basis, chain }
}

fn c1_golden() -> Outcome {
    let g = golden();
    let field = g.ring.field();
    let ord = g.chain.top();
    let level = lead_syz(g.basis.leading_monomials(), &[0], ord);
    if level.terms != vec![mm(X, 1), mm(W, 2)] {
        return Err(format!("lead_syz gives {:?}", level.terms));
    }
    let s1 = vector(field, ord, &[(-1, Y, 0), (1, Z, 0), (1, X, 1), (1, Z, 1), (1, X, 2), (3, Z, 2)]);
    let s2 = vector(field, ord, &[(-1, Y, 0), (1, Z, 1), (1, W, 2), (1, X, 2), (2, Z, 2)]);
    let ctx = LiftContext::new(&g.basis, ord, field);
    for alg in [LiftAlgorithm::Reduce, LiftAlgorithm::Hybrid, LiftAlgorithm::Tree] {
        let out = syz_lift(&ctx, &level, alg, 1, &mut StatCounters::new()).map_err(|e| e.to_string())?;
        if out != vec![s1.clone(), s2.clone()] {
            return Err(format!("{alg} returns {out:?}"));
        }
    }
    let (ring, polys) = worked_example();
    let res = resolve(&ring, &polys, &[0], &ResolveOptions::default()).map_err(|e| e.to_string())?;
    let ranks: Vec<usize> = (0..=res.length()).map(|k| res.rank(k)).collect();
    if ranks != [1, 3, 2] || !res.is_minimal() || !res.is_complex() {
        return Err(format!("ranks {ranks:?}, minimal {}", res.is_minimal()));
    }
    let mut best = Duration::MAX;
    for _ in 0..GOLDEN_REPETITIONS {
        let t = Instant::now();
        let r = resolve(&ring, &polys, &[0], &ResolveOptions::default()).map_err(|e| e.to_string())?;
        best = best.min(t.elapsed());
        std::hint::black_box(r);
    }
    if best >= GOLDEN_RUNTIME {
        return Err(format!("resolution took {best:?}, limit {GOLDEN_RUNTIME:?}"));
    }
    Ok(format!("0 -> R^2 -> R^3 -> R, minimal, {best:?}"))
}

fn c2_cache() -> Outcome {
    let g = golden();
    let ord = g.chain.top();
    let ctx = LiftContext::new(&g.basis, ord, g.ring.field());
    let cache = SubtreeCache::with_trace();
    let mut c = StatCounters::new();
    lift_tree(&ctx, &mm(X, 1), &cache, &mut c).map_err(|e| e.to_string())?;
    let (hits, expansions, seen) = (cache.hits(), cache.expansions(), cache.trace().len());
    lift_tree(&ctx, &mm(W, 2), &cache, &mut c).map_err(|e| e.to_string())?;
    let new_events = cache.trace()[seen..].to_vec();
    let dh = cache.hits() - hits;
    let de = cache.expansions() - expansions;
    if dh != 1 || de != 0 || new_events != vec![TraceEvent::Hit(mm(Y, 0))] {
        return Err(format!("hits +{dh}, expansions +{de}, events {new_events:?}"));
    }
    Ok("w e3 after x e2: hits +1, expansions +0".into())
}

struct CorpusOutcome {
    c3: Outcome,
    c4: Outcome,
    c5: Outcome,
    c6: Outcome,
}

fn corpus_criteria() -> CorpusOutcome {
    let t = Instant::now();
    let ideals = corpus(CORPUS_SIZE, CORPUS_FIRST_SEED);
    let mut fails: [Vec<String>; 4] = Default::default();
    let mut nonminimal = 0;
    for ideal in &ideals {
        let l = lifting_findings(&ideal.ring, &ideal.polys);
        let r = resolution_findings(&ideal.ring, &ideal.polys);
        let tag = |e: &String| format!("seed {}: {e}", ideal.seed);
        if let Some(e) = l.contract.as_ref().or(l.agreement.as_ref()).or(r.complex.as_ref()) {
            fails[0].push(tag(e));
        }
        if let Some(e) = l.oracle.as_ref().or(l.agreement.as_ref()).or(r.agreement.as_ref()) {
            fails[1].push(tag(e));
        }
        if let Some(e) = &r.hilbert {
            fails[2].push(tag(e));
        }
        if let Some(e) = &r.minimize {
            fails[3].push(tag(e));
        }
        if r.tables.as_ref().is_some_and(|t| t.nonminimal != t.minimal) {
            nonminimal += 1;
        }
    }
    let secs = t.elapsed().as_secs_f64();
    let verdict = |f: &Vec<String>, ok: String| match f.first() {
        None => Ok(ok),
        Some(e) => Err(format!("{} of {} ideals fail, first: {e}", f.len(), ideals.len())),
    };
    let n = ideals.len();
    CorpusOutcome {
        c3: verdict(&fails[0], format!("{n} ideals, 4 algorithms, {secs:.1} s for the corpus")),
        c4: verdict(&fails[1], format!("{n} ideals")),
        c5: verdict(&fails[2], format!("{n} ideals, both tables")),
        c6: verdict(&fails[3], format!("{n} ideals, {nonminimal} with non-minimal frames")),
    }
}

/// Entries given as `(row, first column, values)` with `row = j - k`.
fn table(rows: &[(i64, usize, &[u64])]) -> BettiTable {
    let mut t = BettiTable::new();
    for &(r, k0, vals) in rows {
        for (i, &v) in vals.iter().enumerate() {
            let k = k0 + i;
            t.add(k, r + k as i64, v);
        }
    }
    t
}

fn table3() -> BettiTable {
    table(&[
        (0, 0, &[1]),
        (1, 1, &[10, 4]),
        (2, 2, &[60, 136, 130, 60, 11]),
        (3, 1, &[11, 60, 130, 136, 60]),
        (4, 5, &[4, 10]),
        (5, 7, &[1]),
    ])
}

fn table4() -> BettiTable {
    table(&[(0, 0, &[1]), (2, 1, &[56, 189, 216]), (3, 4, &[216, 189, 56]), (5, 7, &[1])])
}

fn table6() -> BettiTable {
    table(&[
        (0, 0, &[1]),
        (2, 1, &[56, 210, 336, 280, 120, 21]),
        (3, 1, &[21, 126, 315, 420, 315, 126, 21]),
        (4, 1, &[6, 36, 90, 120, 90, 36, 6]),
        (5, 1, &[1, 6, 15, 20, 15, 6, 1]),
    ])
}

/// Table 4 plus the correction strands for `28 <= s < 42`.
fn table4_corrected(s: i64) -> BettiTable {
    let alpha = (189 - 6 * s).max(0) as u64;
    let beta = (15 * (36 - s)).max(0) as u64;
    let gamma = (20 * (42 - s)).max(0) as u64;
    let mut t = table4();
    for ((k, j), v) in table(&[(2, 2, &[alpha, beta, gamma, beta, alpha]), (3, 1, &[alpha, beta, gamma, beta, alpha])]).entries() {
        t.add(k, j, v);
    }
    t
}

fn agr_tables(s: usize, seed: u64) -> Result<(BettiTable, BettiTable, Duration), String> {
    let t = Instant::now();
    let spec = AgrSpec {
        n: 6,
        d: 5,
        s,
        p: AGR_P,
        seed,
    };
    let (ring, polys) = gen_agr(&spec).map_err(|e| e.to_string())?;
    let opts = ResolveOptions {
        require_graded: true,
        ..Default::default()
    };
    let res = resolve(&ring, &polys, &[0], &opts).map_err(|e| e.to_string())?;
    let nonmin = betti_nonminimal(&res).map_err(|e| e.to_string())?;
    let min = betti_minimal_from_nonminimal(&res).map_err(|e| e.to_string())?;
    Ok((nonmin, min, t.elapsed()))
}

/// Tries the seeds in order and reports the first one for which `check`
/// accepts the tables of `gen_agr(6, 5, s)`.
fn agr_with_retries(s: usize, check: impl Fn(&BettiTable, &BettiTable) -> Result<(), String>) -> Outcome {
    let mut notes = Vec::new();
    for seed in AGR_SEEDS {
        let (nonmin, min, took) = agr_tables(s, seed)?;
        if took >= AGR_RUNTIME {
            return Err(format!("s={s}, seed {seed}: {took:?} exceeds {AGR_RUNTIME:?}"));
        }
        match check(&nonmin, &min) {
            Ok(()) => return Ok(format!("s={s}: seed {seed}, {:.2} s", took.as_secs_f64())),
            Err(e) => notes.push(format!("seed {seed}: {e}")),
        }
    }
    Err(format!("s={s}: {}", notes.join("; ")))
}

fn same(what: &str, got: &BettiTable, want: &BettiTable) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what} table\n{got}expected\n{want}"))
    }
}

fn c7_agr() -> Outcome {
    let a = agr_with_retries(18, |_, min| {
        same("minimal", min, &table3())?;
        if min.totals() != [1, 21, 124, 266, 266, 124, 21, 1] {
            return Err(format!("totals {:?}", min.totals()));
        }
        Ok(())
    })?;
    let b = agr_with_retries(42, |nonmin, min| {
        same("minimal", min, &table4())?;
        same("non-minimal", nonmin, &table6())?;
        if nonmin.totals() != [1, 84, 378, 756, 840, 540, 189, 28] {
            return Err(format!("non-minimal totals {:?}", nonmin.totals()));
        }
        Ok(())
    })?;
    Ok(format!("{a}; {b}"))
}

fn c8_family() -> Outcome {
    let mut out = Vec::new();
    for s in [30, 36] {
        out.push(agr_with_retries(s, |_, min| same("minimal", min, &table4_corrected(s as i64)))?);
    }
    Ok(out.join("; "))
}

fn c9_symmetry() -> Outcome {
    let mut count = 0;
    for n in 1..=3 {
        for d in 1..=4u32 {
            for s in 1..=6 {
                for seed in 0..2 {
                    let spec = AgrSpec { n, d, s, p: 101, seed };
                    let (ring, polys) = gen_agr(&spec).map_err(|e| format!("{spec:?}: {e}"))?;
                    let res = resolve(&ring, &polys, &[0], &ResolveOptions::default()).map_err(|e| format!("{spec:?}: {e}"))?;
                    let min = betti_minimal_from_nonminimal(&res).map_err(|e| format!("{spec:?}: {e}"))?;
                    if !min.is_centrally_symmetric() {
                        return Err(format!("{spec:?}:\n{min}"));
                    }
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} instances with n <= 3, d <= 4"))
}

fn c10_image() -> Outcome {
    let (ring, polys) = worked_example();
    let res = resolve(&ring, &polys, &[0], &ResolveOptions::default()).map_err(|e| e.to_string())?;
    let bytes = differential_pgm(&res, 2).map_err(|e| e.to_string())?;
    let mut want = b"P5\n2 3\n255\n".to_vec();
    want.extend_from_slice(&[0, 128, 0, 128, 0, 0]);
    if bytes != want {
        return Err(format!("phi_2 image {bytes:?}"));
    }
    if encode_pgm(&res.term_counts(2)) != want {
        return Err("encode_pgm disagrees with differential_pgm".into());
    }
    Ok("phi_2: 3x2, bytes match".into())
}

struct Snapshot {
    resolution: String,
    tables: String,
    stats: String,
    images: Vec<Vec<u8>>,
}

fn snapshot(ring: &Ring, polys: &[ModuleVector], threads: usize) -> Result<Snapshot, String> {
    let opts = ResolveOptions {
        threads,
        ..Default::default()
    };
    let res: Resolution = resolve(ring, polys, &[0], &opts).map_err(|e| e.to_string())?;
    let tables = format!(
        "{}{}",
        betti_nonminimal(&res).map_err(|e| e.to_string())?,
        betti_minimal_from_nonminimal(&res).map_err(|e| e.to_string())?
    );
    let images = (1..=res.length())
        .map(|k| differential_pgm(&res, k).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    Ok(Snapshot {
        resolution: format_resolution(&res),
        tables,
        stats: stats_report(&res, false),
        images,
    })
}

fn c11_determinism() -> Outcome {
    let mut inputs = vec![("worked example".to_string(), worked_example())];
    for spec in [
        AgrSpec { n: 4, d: 4, s: 8, p: AGR_P, seed: 7 },
        AgrSpec { n: 6, d: 5, s: 18, p: AGR_P, seed: 1 },
    ] {
        inputs.push((format!("agr {},{},{}", spec.n, spec.d, spec.s), gen_agr(&spec).map_err(|e| e.to_string())?));
    }
    for ideal in corpus(20, 500) {
        inputs.push((format!("corpus seed {}", ideal.seed), (ideal.ring, ideal.polys)));
    }
    for (name, (ring, polys)) in &inputs {
        let a = snapshot(ring, polys, 1)?;
        let b = snapshot(ring, polys, 1)?;
        if a.resolution != b.resolution || a.tables != b.tables || a.stats != b.stats || a.images != b.images {
            return Err(format!("{name}: single-threaded runs differ"));
        }
        let m = snapshot(ring, polys, 4)?;
        if m.resolution != a.resolution || m.tables != a.tables {
            return Err(format!("{name}: 4 threads give a different resolution"));
        }
    }
    Ok(format!("{} inputs, 1 and 4 threads", inputs.len()))
}

fn main() -> ExitCode {
    let corpus = corpus_criteria();
    let results: Vec<(&str, Outcome)> = vec![
        ("golden lifting of the worked example", c1_golden()),
        ("subtree cache on the worked example", c2_cache()),
        ("lifting contract on the random corpus", corpus.c3),
        ("oracle equivalence on the random corpus", corpus.c4),
        ("Hilbert series consistency", corpus.c5),
        ("minimization cross-check", corpus.c6),
        ("AGR n=6 d=5 tables for s=18 and s=42", c7_agr()),
        ("AGR n=6 d=5 family for s=30 and s=36", c8_family()),
        ("Gorenstein symmetry of small AGR instances", c9_symmetry()),
        ("PGM export of phi_2", c10_image()),
        ("determinism", c11_determinism()),
    ];
    let mut failed = 0;
    for (i, (name, r)) in results.iter().enumerate() {
        match r {
            Ok(m) => println!("[PASS] {:>2} {name}: {m}", i + 1),
            Err(e) => {
                failed += 1;
                println!("[FAIL] {:>2} {name}: {e}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
