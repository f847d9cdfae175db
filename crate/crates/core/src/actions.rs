//! The letter maps `.` and `:` and their recursive extension to actions on words.
//!
//! On letters, `a . b` is the formal letter unless `b` is the positive letter
//! `a' . c`, in which case the result is `c` (and likewise for `:`).
//!
//! A letter acts on a word by peeling the last letter:
//!
//! ```text
//! x . (g y) = ((y : x) . g) (x . y)
//! x : (g y) = ((y . x) : g) (x : y)
//! ```
//!
//! and a word `x1 x2 .. xn` acts by `x1 . (x2 . (.. (xn . g)))`.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::terms::{Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    Dot,
    Colon,
}

impl Op {
    pub fn other(self) -> Op {
        match self {
            Op::Dot => Op::Colon,
            Op::Colon => Op::Dot,
        }
    }
}

pub fn letter_dot(a: &Letter, b: &Letter) -> Letter {
    if let Some((l, c)) = b.dot_parts() {
        if l.is_star_of(a) {
            return c.clone();
        }
    }
    Letter::dot_unchecked(a.clone(), b.clone())
}

pub fn letter_colon(a: &Letter, b: &Letter) -> Letter {
    if let Some((l, c)) = b.colon_parts() {
        if l.is_star_of(a) {
            return c.clone();
        }
    }
    Letter::colon_unchecked(a.clone(), b.clone())
}

pub fn letter_op(op: Op, a: &Letter, b: &Letter) -> Letter {
    match op {
        Op::Dot => letter_dot(a, b),
        Op::Colon => letter_colon(a, b),
    }
}

/// A single letter acting on a word.
pub fn letter_act(op: Op, x: &Letter, g: &Word) -> Word {
    // Unfolding the recursion from the right produces the letters
    // x_k op g_k, .., x_1 op g_1 where x_1 = x and x_{i+1} = g_i other-op x_i.
    // Reduction is confluent, so cancelling once at the end agrees with
    // multiplying step by step.
    let mut acting = x.clone();
    let mut out = Vec::with_capacity(g.len());
    for y in g.letters().iter().rev() {
        out.push(letter_op(op, &acting, y));
        acting = letter_op(op.other(), y, &acting);
    }
    out.reverse();
    Word::reduce(out)
}

pub fn letter_act_dot(x: &Letter, g: &Word) -> Word {
    letter_act(Op::Dot, x, g)
}

pub fn letter_act_colon(x: &Letter, g: &Word) -> Word {
    letter_act(Op::Colon, x, g)
}

/// A word acting on a word: the rightmost letter acts first.
pub fn act(op: Op, a: &Word, g: &Word) -> Word {
    a.letters()
        .iter()
        .rev()
        .fold(g.clone(), |acc, x| letter_act(op, x, &acc))
}

pub fn act_dot(a: &Word, g: &Word) -> Word {
    act(Op::Dot, a, g)
}

pub fn act_colon(a: &Word, g: &Word) -> Word {
    act(Op::Colon, a, g)
}

/// Action evaluator with an optional read-through cache of letter actions.
///
/// Results are identical with or without the cache.
type LetterActionCache = Mutex<HashMap<(Op, Letter, Word), Word>>;

#[derive(Debug, Default)]
pub struct Actions {
    cache: Option<LetterActionCache>,
}

impl Actions {
    pub fn new() -> Actions {
        Actions { cache: None }
    }

    pub fn cached() -> Actions {
        Actions {
            cache: Some(Mutex::new(HashMap::new())),
        }
    }

    pub fn is_cached(&self) -> bool {
        self.cache.is_some()
    }

    pub fn letter_act(&self, op: Op, x: &Letter, g: &Word) -> Word {
        let Some(cache) = &self.cache else {
            return letter_act(op, x, g);
        };
        let key = (op, x.clone(), g.clone());
        if let Some(hit) = cache.lock().unwrap().get(&key) {
            return hit.clone();
        }
        let value = letter_act(op, x, g);
        cache.lock().unwrap().entry(key).or_insert(value).clone()
    }

    pub fn act(&self, op: Op, a: &Word, g: &Word) -> Word {
        a.letters()
            .iter()
            .rev()
            .fold(g.clone(), |acc, x| self.letter_act(op, x, &acc))
    }

    pub fn cache_len(&self) -> usize {
        self.cache.as_ref().map_or(0, |c| c.lock().unwrap().len())
    }
}
