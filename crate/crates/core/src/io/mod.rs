//! Text input and output: the ring/ideal grammar, resolution files, sparsity
//! images and statistics reports.
//!
//! Input grammar, one item per line:
//!
//! ```text
//! ring <p> <v1,v2,...> <dp|lp>
//! <polynomial>
//! ...
//! ```
//!
//! A polynomial is a signed sum of terms `c*v1^a1*v2^a2`, where the integer
//! coefficient and every `*` are optional and whitespace is ignored. Blank
//! lines and lines starting with `#` are skipped.

pub mod format;
pub mod parse;
pub mod pgm;
pub mod report;

pub use format::{format_input, format_poly, format_resolution};
pub use parse::{parse_input, parse_polynomial, parse_resolution, InputDocument};
pub use pgm::{differential_pgm, encode_pgm, write_pgm};
pub use report::stats_report;
