//! Explicit construction of the free skew brace over a set of generators.
//!
//! * [`terms`]: letters of the recursive alphabet and reduced words,
//! * [`actions`]: the letter maps `.`, `:` and their extension to words,
//! * [`quotient`]: the three-valued equality oracle for the quotient,
//! * [`braces`]: finite skew braces as tables,
//! * [`hom`]: evaluation of words in a finite brace,
//! * [`expr`] and [`cli`]: surface syntax and command implementations.

pub mod actions;
pub mod braces;
pub mod cli;
pub mod error;
pub mod expr;
pub mod hom;
pub mod quotient;
pub mod terms;

pub use actions::{act_colon, act_dot, letter_act_colon, letter_act_dot, letter_colon, letter_dot, Op};
pub use braces::{enumerate_braces, trivial_brace, twoop_to_rump, verify_brace, BraceTable, TwoOpBrace};
pub use error::{Error, Result};
pub use expr::{eval_to_word, parse, parse_word, Expr};
pub use hom::GeneratorMap;
pub use quotient::{decide_eq, Budget, EqResult, Verdict};
pub use terms::{Letter, Word};
