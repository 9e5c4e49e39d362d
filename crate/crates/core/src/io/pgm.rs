use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::resolution::Resolution;

/// Binary greymap, one pixel per entry: white for zero, grey for one term,
/// black for two or more.
pub fn encode_pgm(counts: &[Vec<usize>]) -> Vec<u8> {
    let rows = counts.len();
    let cols = counts.first().map_or(0, |r| r.len());
    let mut out = format!("P5\n{cols} {rows}\n255\n").into_bytes();
    for row in counts {
        out.extend(row.iter().map(|&n| match n {
            0 => 255u8,
            1 => 128,
            _ => 0,
        }));
    }
    out
}

/// Image of `phi_k`.
pub fn differential_pgm(res: &Resolution, k: usize) -> Result<Vec<u8>> {
    if k == 0 || k > res.length() {
        return Err(Error::LevelOutOfRange {
            level: k,
            available: res.length(),
        });
    }
    Ok(encode_pgm(&res.term_counts(k)))
}

pub fn write_pgm(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    fs::write(path, bytes)
}
