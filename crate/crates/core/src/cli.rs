//! Command implementations behind the `freebrace` binary.
//!
//! Each command returns its output text and exit code so it can be tested
//! without spawning a process. Exit codes: `0` success or Equal, `1` Distinct
//! (or an invalid brace for `verify`), `2` Unknown, `3` any error.

use std::path::Path;
use std::sync::Arc;

use crate::actions::{act, Op};
use crate::braces::{enumerate_braces, format_braces, parse_braces, parse_braces_unverified, verify_brace};
use crate::error::{Error, Result};
use crate::expr::parse_word;
use crate::hom::MapFile;
use crate::quotient::{decide_eq, Budget, EqResult};

pub const EXIT_ERROR: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub code: i32,
}

impl Outcome {
    fn ok(output: String) -> Outcome {
        Outcome { output, code: 0 }
    }

    pub fn from_error(e: &Error) -> Outcome {
        Outcome {
            output: format!("error: {e}\n"),
            code: EXIT_ERROR,
        }
    }
}

/// Exit code for an equality verdict.
pub fn verdict_code(r: &EqResult) -> i32 {
    match r {
        EqResult::Equal(_) => 0,
        EqResult::Distinct(_) => 1,
        EqResult::Unknown(_) => 2,
    }
}

pub fn cmd_eq(lhs: &str, rhs: &str, budget: &Budget) -> Result<Outcome> {
    let (a, b) = (parse_word(lhs)?, parse_word(rhs)?);
    let r = decide_eq(&a, &b, budget)?;
    Ok(Outcome {
        output: format!("lhs: {a}\nrhs: {b}\n{r}"),
        code: verdict_code(&r),
    })
}

pub fn cmd_normal_form(expr: &str) -> Result<Outcome> {
    Ok(Outcome::ok(format!("{}\n", parse_word(expr)?)))
}

pub fn cmd_act(op: Op, actor: &str, target: &str) -> Result<Outcome> {
    let (a, g) = (parse_word(actor)?, parse_word(target)?);
    Ok(Outcome::ok(format!("{}\n", act(op, &a, &g))))
}

/// Evaluates `expr` under the map file; `brace` overrides the map's target.
pub fn cmd_eval(expr: &str, map_path: &Path, brace: Option<&Path>) -> Result<Outcome> {
    let w = parse_word(expr)?;
    let map_file = MapFile::parse(&std::fs::read_to_string(map_path)?)?;
    let map = match brace {
        Some(path) => {
            let mut braces = parse_braces(&std::fs::read_to_string(path)?)?;
            if braces.len() != 1 {
                return Err(Error::Input(format!(
                    "{} holds {} braces, expected exactly one",
                    path.display(),
                    braces.len()
                )));
            }
            map_file.bind(Arc::new(braces.remove(0)))?
        }
        None => map_file.load(map_path.parent().unwrap_or(Path::new(".")))?,
    };
    Ok(Outcome::ok(format!("{}\n", map.eval_word(&w)?)))
}

/// Writes every brace of order `n` to `output` (or returns it as text).
pub fn cmd_enumerate(n: usize, iso: bool, output: Option<&Path>) -> Result<Outcome> {
    let braces = enumerate_braces(n, iso)?;
    let kind = if iso { "isomorphism classes" } else { "labelled tables" };
    let text = format!(
        "# {} brace(s) of order {n} ({kind})\n{}",
        braces.len(),
        format_braces(&braces)
    );
    match output {
        Some(path) => {
            std::fs::write(path, text)?;
            Ok(Outcome::ok(format!(
                "wrote {} brace(s) to {}\n",
                braces.len(),
                path.display()
            )))
        }
        None => Ok(Outcome::ok(text)),
    }
}

pub fn cmd_verify(path: &Path) -> Result<Outcome> {
    let braces = parse_braces_unverified(&std::fs::read_to_string(path)?)?;
    if braces.is_empty() {
        return Err(Error::Input(format!("{} holds no braces", path.display())));
    }
    let mut output = String::new();
    let mut code = 0;
    for (i, t) in braces.iter().enumerate() {
        let report = verify_brace(t);
        if !report.is_valid() {
            code = 1;
        }
        if braces.len() > 1 {
            output.push_str(&format!("brace #{}: ", i + 1));
        }
        output.push_str(&report.to_string());
        if !output.ends_with('\n') {
            output.push('\n');
        }
    }
    Ok(Outcome { output, code })
}
