//! Evaluation of free-group words in a finite brace.
//!
//! A generator assignment `f` extends to every letter: starred letters go to
//! the group inverse of the positive evaluation, and `a . b`, `a : b` go to
//! the target's action tables. Words evaluate to the product of their letters.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use crate::actions::{act, Op};
use crate::braces::{parse_braces, BraceTable};
use crate::error::{Error, Result};
use crate::terms::{is_symbol, Core, Letter, Word};

/// A map from generator symbols to elements of a finite brace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMap {
    target: Arc<BraceTable>,
    assignment: BTreeMap<String, usize>,
}

impl GeneratorMap {
    pub fn new(target: Arc<BraceTable>) -> GeneratorMap {
        GeneratorMap {
            target,
            assignment: BTreeMap::new(),
        }
    }

    pub fn from_pairs<S: Into<String>>(
        target: Arc<BraceTable>,
        pairs: impl IntoIterator<Item = (S, usize)>,
    ) -> Result<GeneratorMap> {
        let mut map = GeneratorMap::new(target);
        for (s, i) in pairs {
            map.assign(s, i)?;
        }
        Ok(map)
    }

    pub fn assign(&mut self, symbol: impl Into<String>, index: usize) -> Result<()> {
        let symbol = symbol.into();
        if !is_symbol(&symbol) {
            return Err(Error::Input(format!("malformed generator symbol {symbol:?}")));
        }
        if index >= self.target.order() {
            return Err(Error::Input(format!(
                "index {index} out of range for a brace of order {}",
                self.target.order()
            )));
        }
        self.assignment.insert(symbol, index);
        Ok(())
    }

    pub fn target(&self) -> &BraceTable {
        &self.target
    }

    pub fn target_arc(&self) -> &Arc<BraceTable> {
        &self.target
    }

    pub fn get(&self, symbol: &str) -> Option<usize> {
        self.assignment.get(symbol).copied()
    }

    pub fn assignment(&self) -> &BTreeMap<String, usize> {
        &self.assignment
    }

    pub fn eval_letter(&self, l: &Letter) -> Result<usize> {
        let t = &*self.target;
        let positive = match l.core() {
            Core::Gen(s) => self
                .get(s)
                .ok_or_else(|| Error::Input(format!("generator {s} is not assigned")))?,
            Core::Dot(a, b) => t.dot(self.eval_letter(a)?, self.eval_letter(b)?),
            Core::Colon(a, b) => t.colon(self.eval_letter(a)?, self.eval_letter(b)?),
        };
        Ok(if l.is_positive() {
            positive
        } else {
            t.inv(positive)
        })
    }

    pub fn eval_word(&self, w: &Word) -> Result<usize> {
        w.letters().iter().try_fold(0, |acc, l| {
            Ok(self.target.circ(acc, self.eval_letter(l)?))
        })
    }

    /// Compares `f(a op b)` with `f(a) op f(b)` for both actions.
    pub fn check_hom_action_compat(&self, a: &Word, b: &Word) -> Result<CompatReport> {
        let (fa, fb) = (self.eval_word(a)?, self.eval_word(b)?);
        for op in [Op::Dot, Op::Colon] {
            let lhs = self.eval_word(&act(op, a, b))?;
            let rhs = match op {
                Op::Dot => self.target.dot(fa, fb),
                Op::Colon => self.target.colon(fa, fb),
            };
            if lhs != rhs {
                return Ok(CompatReport::Mismatch {
                    op,
                    image_of_action: lhs,
                    action_of_images: rhs,
                });
            }
        }
        Ok(CompatReport::Agree)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompatReport {
    Agree,
    Mismatch {
        op: Op,
        image_of_action: usize,
        action_of_images: usize,
    },
}

impl CompatReport {
    pub fn is_agree(&self) -> bool {
        matches!(self, CompatReport::Agree)
    }
}

/// Every assignment of `symbols` into `target`, in lexicographic order of
/// the index tuples.
pub fn all_maps(target: &Arc<BraceTable>, symbols: &[String]) -> impl Iterator<Item = GeneratorMap> {
    let n = target.order();
    let k = symbols.len();
    let total = n.checked_pow(k as u32).unwrap_or(usize::MAX);
    let target = Arc::clone(target);
    let symbols = symbols.to_vec();
    (0..total).map(move |mut code| {
        let mut idx = vec![0; k];
        for slot in idx.iter_mut().rev() {
            *slot = code % n;
            code /= n;
        }
        GeneratorMap {
            target: Arc::clone(&target),
            assignment: symbols.iter().cloned().zip(idx).collect(),
        }
    })
}

/// A generator-map file: the brace path from its `target` header plus the
/// assignments, before the brace is loaded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapFile {
    pub target: PathBuf,
    pub assignment: BTreeMap<String, usize>,
}

impl MapFile {
    pub fn parse(text: &str) -> Result<MapFile> {
        let mut target = None;
        let mut assignment = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if target.is_none() {
                let path = line
                    .strip_prefix("target")
                    .filter(|rest| rest.starts_with(char::is_whitespace))
                    .map(str::trim)
                    .filter(|p| !p.is_empty())
                    .ok_or_else(|| {
                        Error::Input(format!("line {}: expected `target <brace-file>`", i + 1))
                    })?;
                target = Some(PathBuf::from(path));
                continue;
            }
            let (sym, idx) = line
                .split_once('=')
                .ok_or_else(|| Error::Input(format!("line {}: expected `<symbol> = <index>`", i + 1)))?;
            let sym = sym.trim();
            if !is_symbol(sym) {
                return Err(Error::Input(format!("line {}: bad symbol {sym:?}", i + 1)));
            }
            let idx = idx
                .trim()
                .parse::<usize>()
                .map_err(|_| Error::Input(format!("line {}: bad index", i + 1)))?;
            if assignment.insert(sym.to_owned(), idx).is_some() {
                return Err(Error::Input(format!("line {}: {sym} assigned twice", i + 1)));
            }
        }
        let target = target.ok_or_else(|| Error::Input("missing `target` header".into()))?;
        Ok(MapFile { target, assignment })
    }

    pub fn render(&self) -> String {
        let mut s = format!("target {}\n", self.target.display());
        for (k, v) in &self.assignment {
            s.push_str(&format!("{k} = {v}\n"));
        }
        s
    }

    /// Binds the assignments to an already loaded brace.
    pub fn bind(&self, target: Arc<BraceTable>) -> Result<GeneratorMap> {
        GeneratorMap::from_pairs(target, self.assignment.iter().map(|(k, v)| (k.clone(), *v)))
    }

    /// Loads the target brace (relative paths resolve against `base`) and binds.
    pub fn load(&self, base: &Path) -> Result<GeneratorMap> {
        let path = if self.target.is_absolute() {
            self.target.clone()
        } else {
            base.join(&self.target)
        };
        let text = std::fs::read_to_string(&path)?;
        let mut braces = parse_braces(&text)?;
        if braces.len() != 1 {
            return Err(Error::Input(format!(
                "{} holds {} braces, expected exactly one",
                path.display(),
                braces.len()
            )));
        }
        self.bind(Arc::new(braces.remove(0)))
    }
}

impl fmt::Display for MapFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
