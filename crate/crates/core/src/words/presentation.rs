use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::parse::{parse_presentation, ParseError};
use super::{Word, WordError};

/// A finite presentation over named generators. Relators refer to
/// generators by their position in `generators`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FinitePresentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl FinitePresentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self, WordError> {
        let mut seen = HashSet::new();
        for g in &generators {
            if !seen.insert(g.as_str()) {
                return Err(WordError::DuplicateGenerator(g.clone()));
            }
        }
        for r in &relators {
            if let Some(max) = r.max_generator() {
                if max as usize >= generators.len() {
                    return Err(WordError::GeneratorOutOfRange {
                        index: max,
                        count: generators.len(),
                    });
                }
            }
        }
        Ok(FinitePresentation { generators, relators })
    }

    /// Build from generator names given as string slices.
    pub fn from_names(names: &[&str], relators: Vec<Word>) -> Result<Self, WordError> {
        Self::new(names.iter().map(|s| s.to_string()).collect(), relators)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<u32> {
        self.generators.iter().position(|g| g == name).map(|i| i as u32)
    }

    /// Relators that freely reduce to the empty word.
    pub fn degenerate_relators(&self) -> usize {
        self.relators.iter().filter(|r| r.is_identity()).count()
    }

    pub fn render_word(&self, w: &Word) -> String {
        w.render(|g| self.generators[g as usize].clone())
    }
}

impl fmt::Display for FinitePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.render_word(r)).collect();
        write!(f, "< {} | {} >", self.generators.join(", "), rels.join(", "))
    }
}

impl FromStr for FinitePresentation {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_presentation(s)
    }
}

/// `G_n(w)`: generators `x_0..x_{n-1}`, relators the `n` shifts of `w`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CyclicPresentation {
    n: u32,
    w: Word,
}

impl CyclicPresentation {
    pub fn new(n: u32, w: Word) -> Result<Self, WordError> {
        if n == 0 {
            return Err(WordError::NonPositiveN);
        }
        if let Some(max) = w.max_generator() {
            if max >= n {
                return Err(WordError::GeneratorOutOfRange {
                    index: max,
                    count: n as usize,
                });
            }
        }
        Ok(CyclicPresentation { n, w })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn word(&self) -> &Word {
        &self.w
    }

    /// `w, θ(w), ..., θ^{n-1}(w)`, duplicates retained.
    pub fn relators(&self) -> Vec<Word> {
        (0..self.n)
            .map(|i| self.w.shift(i64::from(i), i64::from(self.n)))
            .collect()
    }

    pub fn to_presentation(&self) -> FinitePresentation {
        FinitePresentation {
            generators: (0..self.n).map(|i| format!("x{i}")).collect(),
            relators: self.relators(),
        }
    }
}

pub fn cyclic_presentation(n: u32, w: &Word) -> Result<FinitePresentation, WordError> {
    Ok(CyclicPresentation::new(n, w.clone())?.to_presentation())
}
