use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::monomial::{ModuleMonomial, Monomial};
use crate::ordering::{BaseOrdering, LevelOrdering};
use crate::resolution::{GradedFreeModule, Resolution};
use crate::ring::Ring;
use crate::vector::{ModuleVector, Term};

/// A ring declaration and the ideal generators that follow it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputDocument {
    pub ring: Ring,
    pub polys: Vec<ModuleVector>,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Content lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
}

fn parse_ring_line(line_no: usize, line: &str) -> Result<Ring> {
    let mut fields = Vec::new();
    let mut col = 0;
    for part in line.split(' ') {
        if !part.is_empty() {
            fields.push((col + 1, part));
        }
        col += part.chars().count() + 1;
    }
    match fields.first() {
        Some((_, "ring")) => {}
        Some((c, w)) => return Err(err(line_no, *c, format!("expected `ring`, found `{w}`"))),
        None => return Err(err(line_no, 1, "expected `ring`")),
    }
    if fields.len() != 4 {
        return Err(err(line_no, 1, "expected `ring <p> <variables> <dp|lp>`"));
    }
    let (pc, p) = fields[1];
    let p: u64 = p
        .parse()
        .map_err(|_| err(line_no, pc, format!("`{p}` is not a characteristic")))?;
    let (vc, vars) = fields[2];
    let names: Vec<String> = vars.split(',').map(str::to_string).collect();
    let mut offset = vc;
    for (i, n) in names.iter().enumerate() {
        if !is_identifier(n) {
            return Err(err(line_no, offset, format!("`{n}` is not a variable name")));
        }
        if names[..i].contains(n) {
            return Err(err(line_no, offset, format!("variable `{n}` declared twice")));
        }
        offset += n.chars().count() + 1;
    }
    let (oc, ord) = fields[3];
    let kind = BaseOrdering::from_name(ord, names.len())
        .ok_or_else(|| err(line_no, oc, format!("unknown ordering `{ord}`, expected dp or lp")))?
        .kind;
    Ring::with_names(p, names, kind).map_err(|e| match e {
        Error::NotPrime(_) => err(line_no, pc, e.to_string()),
        Error::TooManyVariables(_) => err(line_no, vc, e.to_string()),
        e => e,
    })
}

fn is_identifier(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

struct Scanner<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    ring: &'a Ring,
}

impl Scanner<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn error(&self, message: impl Into<String>) -> Error {
        err(self.line, self.pos + 1, message)
    }

    fn digits(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn coefficient(&mut self, digits: &str) -> FieldElement {
        let field = self.ring.field();
        let p = field.characteristic() as u64;
        let r = digits.bytes().fold(0u64, |acc, b| (acc * 10 + (b - b'0') as u64) % p);
        field.element(r)
    }

    fn exponent(&mut self) -> Result<u32> {
        let start = self.pos;
        let d = self.digits();
        if d.is_empty() {
            return Err(self.error("expected an exponent after `^`"));
        }
        d.parse::<u32>().map_err(|_| err(self.line, start + 1, format!("exponent `{d}` is too large")))
    }

    fn variable(&mut self) -> Result<Option<usize>> {
        self.skip_ws();
        let start = self.pos;
        if !matches!(self.chars.get(self.pos), Some(c) if c.is_ascii_alphabetic() || *c == '_') {
            return Ok(None);
        }
        while self.pos < self.chars.len() && (self.chars[self.pos].is_ascii_alphanumeric() || self.chars[self.pos] == '_') {
            self.pos += 1;
        }
        let name: String = self.chars[start..self.pos].iter().collect();
        match self.ring.var_names().iter().position(|n| *n == name) {
            Some(i) => Ok(Some(i)),
            None => Err(err(self.line, start + 1, format!("unknown variable `{name}`"))),
        }
    }

    fn term(&mut self, negative: bool) -> Result<Term> {
        let field = *self.ring.field();
        let mut coeff = FieldElement::ONE;
        let mut exps = vec![0u32; self.ring.nvars()];
        let mut factors = 0;
        loop {
            if factors > 0 {
                if self.peek() == Some('*') {
                    self.pos += 1;
                } else if !matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
                    break;
                }
            }
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let d = self.digits();
                    let mut c = self.coefficient(&d);
                    if self.peek() == Some('^') {
                        self.pos += 1;
                        let e = self.exponent()?;
                        c = field.pow(c, e as u64);
                    }
                    coeff = field.mul(coeff, c);
                }
                _ => {
                    let start = self.pos;
                    let Some(v) = self.variable()? else {
                        return Err(self.error(match self.chars.get(self.pos) {
                            Some(c) => format!("unexpected `{c}`"),
                            None => "unexpected end of line".to_string(),
                        }));
                    };
                    let e = if self.peek() == Some('^') {
                        self.pos += 1;
                        self.exponent()?
                    } else {
                        1
                    };
                    exps[v] = exps[v]
                        .checked_add(e)
                        .ok_or_else(|| err(self.line, start + 1, "exponent overflow"))?;
                }
            }
            factors += 1;
        }
        let mono = Monomial::new(&exps).map_err(|e| err(self.line, self.pos + 1, e.to_string()))?;
        if negative {
            coeff = field.neg(coeff);
        }
        Ok(Term::new(coeff, ModuleMonomial::new(mono, 0)))
    }
}

fn parse_terms(ring: &Ring, line_no: usize, text: &str, column_offset: usize) -> Result<Vec<Term>> {
    let mut s = Scanner {
        chars: text.chars().collect(),
        pos: 0,
        line: line_no,
        ring,
    };
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        let negative = match s.peek() {
            None if first => return Err(err(line_no, column_offset + 1, "empty polynomial")),
            None => break,
            Some('+') => {
                s.pos += 1;
                false
            }
            Some('-') => {
                s.pos += 1;
                true
            }
            Some(_) if first => false,
            Some(c) => return Err(err(line_no, column_offset + s.pos + 1, format!("expected `+` or `-`, found `{c}`"))),
        };
        first = false;
        let t = s.term(negative).map_err(|e| match e {
            Error::Parse { line, column, message } => Error::Parse {
                line,
                column: column + column_offset,
                message,
            },
            e => e,
        })?;
        if !t.coeff.is_zero() {
            terms.push(t);
        }
    }
    Ok(terms)
}

/// Parses one polynomial over `ring` into a vector in component 0.
pub fn parse_polynomial(ring: &Ring, text: &str) -> Result<ModuleVector> {
    polynomial_at(ring, 1, text, 0)
}

fn polynomial_at(ring: &Ring, line_no: usize, text: &str, column_offset: usize) -> Result<ModuleVector> {
    let terms = parse_terms(ring, line_no, text, column_offset)?;
    let ord = LevelOrdering::free(ring.ordering(), 1);
    Ok(ModuleVector::from_terms(terms, &ord, ring.field()))
}

pub fn parse_input(text: &str) -> Result<InputDocument> {
    let mut lines = content_lines(text);
    let Some((ln, first)) = lines.next() else {
        return Err(err(1, 1, "missing `ring` line"));
    };
    let ring = parse_ring_line(ln, first)?;
    let polys = lines
        .map(|(ln, l)| polynomial_at(&ring, ln, l, 0))
        .collect::<Result<Vec<_>>>()?;
    Ok(InputDocument { ring, polys })
}

fn parse_usizes(line_no: usize, words: &[&str]) -> Result<Vec<usize>> {
    words
        .iter()
        .map(|w| w.parse().map_err(|_| err(line_no, 1, format!("`{w}` is not an index"))))
        .collect()
}

/// Reads the format written by [`crate::io::format_resolution`].
pub fn parse_resolution(text: &str) -> Result<Resolution> {
    let mut lines = content_lines(text).peekable();
    let Some((ln, first)) = lines.next() else {
        return Err(err(1, 1, "missing `ring` line"));
    };
    let ring = parse_ring_line(ln, first)?;
    let mut modules: Vec<GradedFreeModule> = Vec::new();
    let mut diffs: Vec<Vec<ModuleVector>> = Vec::new();
    let mut current: Option<(usize, usize, Vec<Vec<Term>>)> = None;
    let mut col: Option<usize> = None;
    let flush = |current: &mut Option<(usize, usize, Vec<Vec<Term>>)>, diffs: &mut Vec<Vec<ModuleVector>>| {
        if let Some((_, _, cols)) = current.take() {
            diffs.push(cols.into_iter().map(ModuleVector::from_sorted_unchecked).collect());
        }
    };
    let mut ended = false;
    for (ln, line) in lines {
        let words: Vec<&str> = line.split_whitespace().collect();
        match words[0] {
            "minimal" => {}
            "module" => {
                let k = parse_usizes(ln, &words[1..2.min(words.len())])?;
                if k != [modules.len()] {
                    return Err(err(ln, 1, format!("expected module {}", modules.len())));
                }
                let twists = words[2..]
                    .iter()
                    .map(|w| w.parse::<i64>().map_err(|_| err(ln, 1, format!("`{w}` is not a degree"))))
                    .collect::<Result<Vec<_>>>()?;
                modules.push(GradedFreeModule::new(twists));
            }
            "map" => {
                flush(&mut current, &mut diffs);
                col = None;
                let k = parse_usizes(ln, &words[1..2.min(words.len())])?;
                if k != [diffs.len() + 1] {
                    return Err(err(ln, 1, format!("expected map {}", diffs.len() + 1)));
                }
                let dims: Vec<&str> = words.get(2).map(|d| d.split('x').collect()).unwrap_or_default();
                let dims = parse_usizes(ln, &dims)?;
                let [rows, cols] = dims[..] else {
                    return Err(err(ln, 1, "expected dimensions `RxC`"));
                };
                current = Some((k[0], rows, vec![Vec::new(); cols]));
            }
            "col" => {
                let Some((_, _, cols)) = &current else {
                    return Err(err(ln, 1, "`col` outside a map"));
                };
                let j = parse_usizes(ln, &words[1..2.min(words.len())])?;
                if j.len() != 1 || j[0] >= cols.len() {
                    return Err(err(ln, 1, "column index out of range"));
                }
                col = Some(j[0]);
            }
            "end" => {
                ended = true;
                break;
            }
            w => {
                let (Some((_, rows, cols)), Some(j)) = (&mut current, col) else {
                    return Err(err(ln, 1, format!("unexpected `{w}`")));
                };
                let r: usize = w.parse().map_err(|_| err(ln, 1, format!("`{w}` is not a row index")))?;
                if r >= *rows {
                    return Err(err(ln, 1, format!("row {r} out of range")));
                }
                let offset = line.find(w).unwrap() + w.len();
                let poly = polynomial_at(&ring, ln, &line[offset..], offset)?;
                cols[j].extend(poly.into_terms().into_iter().map(|mut t| {
                    t.monomial.comp = r as u32;
                    t
                }));
            }
        }
    }
    if !ended {
        return Err(err(text.lines().count().max(1), 1, "missing `end`"));
    }
    flush(&mut current, &mut diffs);
    Resolution::from_parts(ring, modules, diffs)
}
