//! Random generation of letters and words shared by the integration tests.

#![allow(dead_code)]

use freebrace::{letter_colon, letter_dot, Letter, Word};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SYMBOLS: [&str; 3] = ["x", "y", "z"];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gen(s: &str) -> Letter {
    Letter::gen(s).unwrap()
}

/// A random letter of stratum at most `max_stratum` over the first
/// `symbols` generators, built through the letter maps so it is always valid.
pub fn letter(rng: &mut impl Rng, symbols: usize, max_stratum: u32) -> Letter {
    let l = if max_stratum <= 1 || rng.gen_bool(0.6) {
        gen(SYMBOLS[..symbols].choose(rng).unwrap())
    } else {
        let a = letter(rng, symbols, max_stratum - 1);
        let b = letter(rng, symbols, max_stratum - 1);
        if rng.gen_bool(0.5) {
            letter_dot(&a, &b)
        } else {
            letter_colon(&a, &b)
        }
    };
    if rng.gen_bool(0.5) {
        l.star()
    } else {
        l
    }
}

/// A random reduced word of length at most `max_len`.
pub fn word(rng: &mut impl Rng, symbols: usize, max_len: usize, max_stratum: u32) -> Word {
    let len = rng.gen_range(0..=max_len);
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    while letters.len() < len {
        let l = letter(rng, symbols, max_stratum);
        if letters.last().is_some_and(|p| p.is_star_of(&l)) {
            continue;
        }
        letters.push(l);
    }
    Word::reduce(letters)
}

pub mod strategy {
    use super::{gen, SYMBOLS};
    use freebrace::{letter_colon, letter_dot, Letter, Word};
    use proptest::prelude::*;

    pub fn letter(symbols: usize, max_stratum: u32) -> BoxedStrategy<Letter> {
        let leaf = (0..symbols, any::<bool>())
            .prop_map(|(i, neg)| {
                let l = gen(SYMBOLS[i]);
                if neg {
                    l.star()
                } else {
                    l
                }
            })
            .boxed();
        if max_stratum <= 1 {
            return leaf;
        }
        leaf.prop_recursive(max_stratum - 1, 32, 2, |inner| {
            (inner.clone(), inner, any::<bool>(), any::<bool>())
                .prop_map(|(a, b, dot, neg)| {
                    let l = if dot {
                        letter_dot(&a, &b)
                    } else {
                        letter_colon(&a, &b)
                    };
                    if neg {
                        l.star()
                    } else {
                        l
                    }
                })
                .boxed()
        })
        .boxed()
    }

    pub fn raw(symbols: usize, max_len: usize, max_stratum: u32) -> BoxedStrategy<Vec<Letter>> {
        proptest::collection::vec(letter(symbols, max_stratum), 0..=max_len).boxed()
    }

    pub fn word(symbols: usize, max_len: usize, max_stratum: u32) -> BoxedStrategy<Word> {
        raw(symbols, max_len, max_stratum).prop_map(Word::reduce).boxed()
    }
}
