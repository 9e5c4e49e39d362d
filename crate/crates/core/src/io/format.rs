use std::fmt::Write;

use crate::monomial::Monomial;
use crate::resolution::Resolution;
use crate::ring::Ring;
use crate::vector::Term;

fn write_monomial(out: &mut String, m: &Monomial, ring: &Ring) {
    let mut first = true;
    for (i, name) in ring.var_names().iter().enumerate() {
        let e = m.exponent(i);
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(name);
        if e > 1 {
            write!(out, "^{e}").unwrap();
        }
    }
}

/// Terms as a polynomial in the input grammar, largest monomial first, with
/// coefficients in `(-p/2, p/2]`. Components are ignored.
pub fn format_poly(terms: &[Term], ring: &Ring) -> String {
    let field = ring.field();
    let base = ring.ordering();
    let mut terms: Vec<&Term> = terms.iter().collect();
    terms.sort_by(|a, b| base.cmp(&b.monomial.mono, &a.monomial.mono));
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        let c = field.to_signed(t.coeff);
        if c < 0 {
            out.push('-');
        } else if i > 0 {
            out.push('+');
        }
        let a = c.unsigned_abs();
        if t.monomial.mono.is_one() {
            write!(out, "{a}").unwrap();
            continue;
        }
        if a != 1 {
            write!(out, "{a}*").unwrap();
        }
        write_monomial(&mut out, &t.monomial.mono, ring);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn format_ring(ring: &Ring) -> String {
    format!(
        "ring {} {} {}",
        ring.characteristic(),
        ring.var_names().join(","),
        ring.ordering().name()
    )
}

/// A ring line followed by one generator per line.
pub fn format_input(ring: &Ring, polys: &[crate::vector::ModuleVector]) -> String {
    let mut out = format_ring(ring);
    out.push('\n');
    for p in polys {
        out.push_str(&format_poly(p.terms(), ring));
        out.push('\n');
    }
    out
}

/// Plain-text resolution: module twists, then every differential column by
/// column with one `row polynomial` line per nonzero entry.
pub fn format_resolution(res: &Resolution) -> String {
    let ring = res.ring();
    let mut out = format_ring(ring);
    writeln!(out).unwrap();
    writeln!(out, "minimal {}", res.is_minimal()).unwrap();
    for k in 0..=res.length() {
        write!(out, "module {k}").unwrap();
        for t in res.twists(k) {
            write!(out, " {t}").unwrap();
        }
        writeln!(out).unwrap();
    }
    for k in 1..=res.length() {
        writeln!(out, "map {k} {}x{}", res.rank(k - 1), res.rank(k)).unwrap();
        for (j, col) in res.differential(k).iter().enumerate() {
            writeln!(out, "col {j}").unwrap();
            let mut rows: Vec<usize> = col.terms().iter().map(|t| t.component()).collect();
            rows.sort_unstable();
            rows.dedup();
            for r in rows {
                let entry: Vec<Term> = col.terms().iter().filter(|t| t.component() == r).copied().collect();
                writeln!(out, "{r} {}", format_poly(&entry, ring)).unwrap();
            }
        }
    }
    out.push_str("end\n");
    out
}
