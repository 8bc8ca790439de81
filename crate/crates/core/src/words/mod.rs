//! Free-group words over indexed generators, cyclic presentations and the
//! constructors for the two-block relators of types F and M.

mod blocks;
mod parse;
mod presentation;

pub use blocks::{
    e_presentation, lambda_block, shift_extension, shift_extension_twisted, type_f_word, type_m_word, TypeFParams, T, Y,
};
pub use parse::{parse_word_over, ParseError};
pub use presentation::{cyclic_presentation, CyclicPresentation, FinitePresentation};

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("generator index {index} out of range for {count} generators")]
    GeneratorOutOfRange { index: u32, count: usize },
    #[error("zero exponent on generator {0}")]
    ZeroExponent(u32),
    #[error("word is not freely reduced at position {0}")]
    NotReduced(usize),
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("n must be positive")]
    NonPositiveN,
    #[error("(r - s) f = {lhs} is not congruent to B - A = {rhs} mod {n}")]
    TypeFCongruence { lhs: i64, rhs: i64, n: i64 },
    #[error("r must be nonnegative, got {0}")]
    NegativeR(i64),
}

/// A syllable `g^e` with `e != 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: u32,
    pub exp: i64,
}

impl Letter {
    pub fn new(gen: u32, exp: i64) -> Self {
        Letter { gen, exp }
    }
}

/// A freely reduced word. Adjacent syllables always have distinct generators
/// and no syllable has exponent zero; the empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<(u32, i64)>", into = "Vec<(u32, i64)>")]
pub struct Word {
    letters: Vec<Letter>,
}

/// Freely reduce a sequence of syllables, merging exponents of adjacent
/// equal generators.
pub fn reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
    let mut out: Vec<Letter> = Vec::new();
    for l in letters {
        if l.exp == 0 {
            continue;
        }
        match out.last_mut() {
            Some(top) if top.gen == l.gen => {
                top.exp += l.exp;
                if top.exp == 0 {
                    out.pop();
                }
            }
            _ => out.push(l),
        }
    }
    Word { letters: out }
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn gen(g: u32) -> Self {
        Word::power(g, 1)
    }

    pub fn power(g: u32, e: i64) -> Self {
        reduce([Letter::new(g, e)])
    }

    pub fn from_pairs<I: IntoIterator<Item = (u32, i64)>>(pairs: I) -> Self {
        reduce(pairs.into_iter().map(|(g, e)| Letter::new(g, e)))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of syllables.
    pub fn syllables(&self) -> usize {
        self.letters.len()
    }

    /// Length as a word in the generators and their inverses.
    pub fn length(&self) -> u64 {
        self.letters.iter().map(|l| l.exp.unsigned_abs()).sum()
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter::new(l.gen, -l.exp))
                .collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..k.unsigned_abs() {
            out = &out * &base;
        }
        out
    }

    pub fn exponent_sum(&self, g: u32) -> i64 {
        self.letters.iter().filter(|l| l.gen == g).map(|l| l.exp).sum()
    }

    pub fn max_generator(&self) -> Option<u32> {
        self.letters.iter().map(|l| l.gen).max()
    }

    /// Replace every generator by a word, then reduce.
    pub fn substitute<F: FnMut(u32) -> Word>(&self, mut image: F) -> Word {
        let mut out = Vec::new();
        for l in &self.letters {
            let w = image(l.gen);
            let w = if l.exp < 0 { w.inverse() } else { w };
            for _ in 0..l.exp.unsigned_abs() {
                out.extend_from_slice(&w.letters);
            }
        }
        reduce(out)
    }

    /// Apply `x_i -> x_{(i+k) mod n}`.
    pub fn shift(&self, k: i64, n: i64) -> Word {
        reduce(
            self.letters
                .iter()
                .map(|l| Letter::new(((i64::from(l.gen) + k).rem_euclid(n)) as u32, l.exp)),
        )
    }

    /// Cyclically reduced conjugate: strips syllables that cancel or merge
    /// across the ends.
    pub fn cyclically_reduced(&self) -> Word {
        let mut letters = self.letters.clone();
        loop {
            if letters.len() < 2 {
                break;
            }
            let first = letters[0];
            let last = *letters.last().unwrap();
            if first.gen != last.gen {
                break;
            }
            letters.pop();
            let merged = first.exp + last.exp;
            if merged == 0 {
                letters.remove(0);
            } else {
                letters[0].exp = merged;
                break;
            }
        }
        Word { letters }
    }

    /// Render with a naming function, in the `a*b^-1` grammar; the identity is `1`.
    pub fn render<F: Fn(u32) -> String>(&self, name: F) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        self.letters
            .iter()
            .map(|l| {
                if l.exp == 1 {
                    name(l.gen)
                } else {
                    format!("{}^{}", name(l.gen), l.exp)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl TryFrom<Vec<(u32, i64)>> for Word {
    type Error = WordError;

    fn try_from(pairs: Vec<(u32, i64)>) -> Result<Self, Self::Error> {
        for (i, &(g, e)) in pairs.iter().enumerate() {
            if e == 0 {
                return Err(WordError::ZeroExponent(g));
            }
            if i > 0 && pairs[i - 1].0 == g {
                return Err(WordError::NotReduced(i));
            }
        }
        Ok(Word {
            letters: pairs.into_iter().map(|(g, e)| Letter::new(g, e)).collect(),
        })
    }
}

impl From<Word> for Vec<(u32, i64)> {
    fn from(w: Word) -> Self {
        w.letters.into_iter().map(|l| (l.gen, l.exp)).collect()
    }
}

impl Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        reduce(self.letters.iter().chain(rhs.letters.iter()).copied())
    }
}

impl Mul for Word {
    type Output = Word;

    fn mul(self, rhs: Word) -> Word {
        &self * &rhs
    }
}

/// Words over `x_0, x_1, ...` display with those names.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|g| format!("x{g}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(pairs: &[(u32, i64)]) -> Word {
        Word::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(w(&[(0, 1), (1, 1), (1, -1)]), w(&[(0, 1)]));
        assert_eq!(reduce([]), Word::identity());
        assert_eq!(
            w(&[(0, 2), (0, -1), (2, 1)]).letters(),
            &[Letter::new(0, 1), Letter::new(2, 1)]
        );
    }

    #[test]
    fn shift_examples() {
        let word = w(&[(0, 1), (1, 1), (2, 1), (3, -1)]);
        assert_eq!(word.shift(1, 6), w(&[(1, 1), (2, 1), (3, 1), (4, -1)]));
        assert_eq!(word.shift(0, 6), word);
        assert_eq!(w(&[(5, 1)]).shift(3, 6), w(&[(2, 1)]));
        assert_eq!(word.shift(6, 6), word);
    }

    #[test]
    fn cyclic_reduction() {
        let word = w(&[(0, 1), (1, 2), (0, -1)]);
        assert_eq!(word.cyclically_reduced(), w(&[(1, 2)]));
        let word = w(&[(0, 1), (1, 1), (0, 2)]);
        assert_eq!(word.cyclically_reduced(), w(&[(0, 3), (1, 1)]));
    }

    #[test]
    fn json_is_pair_list() {
        let word = w(&[(0, 1), (3, -1)]);
        assert_eq!(serde_json::to_string(&word).unwrap(), "[[0,1],[3,-1]]");
        let back: Word = serde_json::from_str("[[0,1],[3,-1]]").unwrap();
        assert_eq!(back, word);
        assert!(serde_json::from_str::<Word>("[[0,1],[0,2]]").is_err());
        assert!(serde_json::from_str::<Word>("[[0,0]]").is_err());
    }

    fn arb_letters() -> impl Strategy<Value = Vec<Letter>> {
        prop::collection::vec((0u32..3, -3i64..=3), 0..12)
            .prop_map(|v| v.into_iter().map(|(g, e)| Letter::new(g, e)).collect())
    }

    fn is_reduced(word: &Word) -> bool {
        word.letters().iter().all(|l| l.exp != 0)
            && word.letters().windows(2).all(|p| p[0].gen != p[1].gen)
    }

    proptest! {
        #[test]
        fn reduce_is_idempotent_and_shortening(letters in arb_letters()) {
            let raw_len: u64 = letters.iter().map(|l| l.exp.unsigned_abs()).sum();
            let once = reduce(letters);
            prop_assert!(is_reduced(&once));
            prop_assert!(once.length() <= raw_len);
            prop_assert_eq!(reduce(once.letters().iter().copied()), once);
        }

        #[test]
        fn product_is_associative(a in arb_letters(), b in arb_letters(), c in arb_letters()) {
            let (a, b, c) = (reduce(a), reduce(b), reduce(c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &Word::identity(), a.clone());
            prop_assert!((&a * &a.inverse()).is_identity());
        }
    }
}
