//! A small expression language for arithmetic functions.
//!
//! `D`, `N`, `E`, `ld`, `eps` and `tau` name builtins; `Dp[p]` is the partial
//! derivative at `p`; `cadd{...}` and `cmul{...}` give completely additive and
//! completely multiplicative functions by their values at primes; `conv`,
//! `mul`, `compose` and `ladd` combine them. `ladd(cadd{..}, cmul{..})` is the
//! L-additive function `g h` with completely additive part `g` and completely
//! multiplicative part `h`.
//!
//! ```
//! use leibniz::fnspec::{parse, print_canonical};
//! let e = parse("cmul{3: 2, 2: 5; default 1}").unwrap();
//! assert_eq!(print_canonical(&e), "cmul{2: 5, 3: 2; default 1}");
//! ```

mod ast;
mod build;
mod lexer;
mod parser;

pub use ast::{print_canonical, Block, Combinator, DefaultValue, FnExpr};
pub use build::{build, parse_function};
pub use parser::parse;

/// A syntax or literal error at a byte offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {position}: expected {expected}, found `{found}`")]
pub struct ParseError {
    pub position: usize,
    pub expected: String,
    pub found: String,
}
