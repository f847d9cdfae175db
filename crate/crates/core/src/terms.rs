//! Letters of the stratified alphabet and reduced words of the free group over it.
//!
//! A [`Letter`] is a finite tree: a generator symbol, or a formal `a . b` /
//! `a : b` built from two smaller letters, each carrying a sign. The negative
//! sign is the formal inverse (the starred copy). A [`Word`] is a reduced
//! sequence of letters; the empty word is the identity.

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Checks that `name` is a generator symbol: `[a-z][a-z0-9]*`.
pub fn is_symbol(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Core {
    Gen(Arc<str>),
    Dot(Letter, Letter),
    Colon(Letter, Letter),
}

#[derive(Debug)]
struct Node {
    core: Core,
    stratum: u32,
    digest: u64,
}

/// A signed node of the alphabet.
///
/// Cloning is cheap: the core is shared. Equality is structural (equality in
/// the free group, not in its quotient).
#[derive(Clone)]
pub struct Letter {
    node: Arc<Node>,
    positive: bool,
}

impl Letter {
    fn from_core(core: Core, positive: bool) -> Letter {
        let stratum = match &core {
            Core::Gen(_) => 1,
            Core::Dot(a, b) | Core::Colon(a, b) => 1 + a.stratum().max(b.stratum()),
        };
        let mut h = DefaultHasher::new();
        match &core {
            Core::Gen(s) => {
                0u8.hash(&mut h);
                s.hash(&mut h);
            }
            Core::Dot(a, b) => {
                1u8.hash(&mut h);
                a.hash(&mut h);
                b.hash(&mut h);
            }
            Core::Colon(a, b) => {
                2u8.hash(&mut h);
                a.hash(&mut h);
                b.hash(&mut h);
            }
        }
        Letter {
            node: Arc::new(Node {
                core,
                stratum,
                digest: h.finish(),
            }),
            positive,
        }
    }

    /// The positive generator letter `name`.
    pub fn gen(name: &str) -> Result<Letter> {
        if !is_symbol(name) {
            return Err(Error::Input(format!("malformed generator symbol {name:?}")));
        }
        Ok(Letter::from_core(Core::Gen(Arc::from(name)), true))
    }

    /// The positive formal letter `a . b`.
    ///
    /// Fails when `b` is `a' . c`: that combination is not a letter, the dot
    /// map sends it to `c` instead (see [`crate::actions::letter_dot`]).
    pub fn dot(a: Letter, b: Letter) -> Result<Letter> {
        if matches!(b.dot_parts(), Some((l, _)) if l.is_star_of(&a)) {
            return Err(Error::Invariant(format!(
                "({a} . {b}) violates the dot side condition"
            )));
        }
        Ok(Letter::from_core(Core::Dot(a, b), true))
    }

    /// The positive formal letter `a : b`; mirror of [`Letter::dot`].
    pub fn colon(a: Letter, b: Letter) -> Result<Letter> {
        if matches!(b.colon_parts(), Some((l, _)) if l.is_star_of(&a)) {
            return Err(Error::Invariant(format!(
                "({a} : {b}) violates the colon side condition"
            )));
        }
        Ok(Letter::from_core(Core::Colon(a, b), true))
    }

    pub(crate) fn dot_unchecked(a: Letter, b: Letter) -> Letter {
        Letter::from_core(Core::Dot(a, b), true)
    }

    pub(crate) fn colon_unchecked(a: Letter, b: Letter) -> Letter {
        Letter::from_core(Core::Colon(a, b), true)
    }

    /// Same core, flipped sign.
    pub fn star(&self) -> Letter {
        Letter {
            node: Arc::clone(&self.node),
            positive: !self.positive,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.positive
    }

    pub fn core(&self) -> &Core {
        &self.node.core
    }

    /// Index of the smallest stratum containing this letter. Sign-independent.
    pub fn stratum(&self) -> u32 {
        self.node.stratum
    }

    pub fn is_star_of(&self, other: &Letter) -> bool {
        self.positive != other.positive && self.same_core(other)
    }

    pub fn same_core(&self, other: &Letter) -> bool {
        Arc::ptr_eq(&self.node, &other.node)
            || (self.node.digest == other.node.digest && self.node.core == other.node.core)
    }

    /// The generator symbol, when this is a generator letter of either sign.
    pub fn symbol(&self) -> Option<&str> {
        match self.core() {
            Core::Gen(s) => Some(s),
            _ => None,
        }
    }

    /// Children of a positive dot letter.
    pub fn dot_parts(&self) -> Option<(&Letter, &Letter)> {
        match self.core() {
            Core::Dot(a, b) if self.positive => Some((a, b)),
            _ => None,
        }
    }

    /// Children of a positive colon letter.
    pub fn colon_parts(&self) -> Option<(&Letter, &Letter)> {
        match self.core() {
            Core::Colon(a, b) if self.positive => Some((a, b)),
            _ => None,
        }
    }

    /// Visits every generator symbol in the tree.
    pub fn for_each_symbol<'a>(&'a self, f: &mut impl FnMut(&'a str)) {
        match self.core() {
            Core::Gen(s) => f(s),
            Core::Dot(a, b) | Core::Colon(a, b) => {
                a.for_each_symbol(f);
                b.for_each_symbol(f);
            }
        }
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        match self.core() {
            Core::Gen(_) => 1,
            Core::Dot(a, b) | Core::Colon(a, b) => 1 + a.size() + b.size(),
        }
    }
}

impl PartialEq for Letter {
    fn eq(&self, other: &Letter) -> bool {
        self.positive == other.positive && self.same_core(other)
    }
}

impl Eq for Letter {}

impl Hash for Letter {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.node.digest.hash(state);
        self.positive.hash(state);
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Letter) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Letter) -> std::cmp::Ordering {
        if self == other {
            return std::cmp::Ordering::Equal;
        }
        self.node
            .core
            .cmp(&other.node.core)
            .then(other.positive.cmp(&self.positive))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.core() {
            Core::Gen(s) => f.write_str(s)?,
            Core::Dot(a, b) => write!(f, "({a} . {b})")?,
            Core::Colon(a, b) => write!(f, "({a} : {b})")?,
        }
        if !self.positive {
            f.write_str("'")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A reduced word: no letter is adjacent to its own inverse.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Word {
        Word(Vec::new())
    }

    pub fn letter(l: Letter) -> Word {
        Word(vec![l])
    }

    /// Cancels adjacent inverse pairs in a single stack pass.
    pub fn reduce(raw: impl IntoIterator<Item = Letter>) -> Word {
        let mut out: Vec<Letter> = Vec::new();
        for l in raw {
            if out.last().is_some_and(|top| top.is_star_of(&l)) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<&Letter> {
        self.0.last()
    }

    /// Splits `g y` into `(g, y)`.
    pub fn split_last(&self) -> Option<(Word, &Letter)> {
        let (y, g) = self.0.split_last()?;
        Some((Word(g.to_vec()), y))
    }

    pub fn mul(&self, other: &Word) -> Word {
        // Both sides are reduced, so cancellation only happens at the seam.
        let mut left = self.0.len();
        let mut right = 0;
        while left > 0
            && right < other.0.len()
            && self.0[left - 1].is_star_of(&other.0[right])
        {
            left -= 1;
            right += 1;
        }
        let mut out = Vec::with_capacity(left + other.0.len() - right);
        out.extend_from_slice(&self.0[..left]);
        out.extend_from_slice(&other.0[right..]);
        Word(out)
    }

    pub fn inv(&self) -> Word {
        Word(self.0.iter().rev().map(Letter::star).collect())
    }

    /// Largest stratum among the letters; 0 for the identity.
    pub fn max_stratum(&self) -> u32 {
        self.0.iter().map(Letter::stratum).max().unwrap_or(0)
    }

    /// Generator symbols occurring anywhere in the word, sorted and deduplicated.
    pub fn symbols(&self) -> Vec<String> {
        let mut out = std::collections::BTreeSet::new();
        for l in &self.0 {
            l.for_each_symbol(&mut |s| {
                out.insert(s);
            });
        }
        out.into_iter().map(str::to_owned).collect()
    }

    pub fn is_reduced(letters: &[Letter]) -> bool {
        letters.windows(2).all(|w| !w[0].is_star_of(&w[1]))
    }
}

impl From<Letter> for Word {
    fn from(l: Letter) -> Word {
        Word::letter(l)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}
