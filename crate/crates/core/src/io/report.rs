use std::fmt::Write;

use crate::resolution::Resolution;

/// Aligned statistics block followed by `key=value` lines. With `verbose`,
/// a per-differential table with timings is inserted between the two.
pub fn stats_report(res: &Resolution, verbose: bool) -> String {
    let s = res.stats();
    let q = res.q_sparse();
    let mut out = String::new();
    let rows = [
        ("#Terms", s.n_terms.to_string()),
        ("#Mult", s.n_mult.to_string()),
        ("#Add", s.n_add.to_string()),
        ("#Canc", s.n_canc.to_string()),
        ("#Cmp", s.n_monomial_cmp.to_string()),
        ("Q_sparse", format!("{q:.3}")),
    ];
    for (k, v) in &rows {
        writeln!(out, "{k:<9} {v:>12}").unwrap();
    }
    if verbose && res.length() > 0 {
        writeln!(out).unwrap();
        writeln!(out, "{:>5} {:>11} {:>10} {:>9} {:>10}", "map", "#Generators", "#Terms", "Q_sparse", "time[s]").unwrap();
        for (i, r) in res.reports().iter().enumerate() {
            let k = i + 1;
            let entries = res.rank(k - 1) * res.rank(k);
            let q = if entries == 0 { 0.0 } else { r.terms as f64 / entries as f64 };
            writeln!(out, "{k:>5} {:>11} {:>10} {q:>9.3} {:>10.4}", r.generators, r.terms, r.seconds).unwrap();
        }
    }
    writeln!(out).unwrap();
    writeln!(out, "terms={}", s.n_terms).unwrap();
    writeln!(out, "mult={}", s.n_mult).unwrap();
    writeln!(out, "add={}", s.n_add).unwrap();
    writeln!(out, "canc={}", s.n_canc).unwrap();
    writeln!(out, "cmp={}", s.n_monomial_cmp).unwrap();
    writeln!(out, "entries={}", res.tail_entries()).unwrap();
    writeln!(out, "q_sparse={q:.6}").unwrap();
    out
}
