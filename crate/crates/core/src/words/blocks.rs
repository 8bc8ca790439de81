use serde::{Deserialize, Serialize};

use super::{reduce, CyclicPresentation, FinitePresentation, Letter, Word, WordError};
use crate::classify::ParamsM;

pub const T: u32 = 0;
pub const Y: u32 = 1;

/// `Λ(r, f) = x_0 x_f x_{2f} ... x_{(r-1)f}` with indices mod `n`.
pub fn lambda_block(r: u32, f: i64, n: i64) -> Word {
    reduce((0..i64::from(r)).map(|i| Letter::new((i * f).rem_euclid(n) as u32, 1)))
}

/// Parameters of a two-block word of type F.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TypeFParams {
    pub r: i64,
    pub n: i64,
    pub s: i64,
    pub f: i64,
    pub a: i64,
    pub b: i64,
}

impl TypeFParams {
    pub fn new(r: i64, n: i64, s: i64, f: i64, a: i64, b: i64) -> Result<Self, WordError> {
        if n <= 0 {
            return Err(WordError::NonPositiveN);
        }
        if r < 0 {
            return Err(WordError::NegativeR(r));
        }
        let lhs = (r - s) * f;
        let rhs = b - a;
        if (lhs - rhs).rem_euclid(n) != 0 {
            return Err(WordError::TypeFCongruence { lhs, rhs, n });
        }
        Ok(TypeFParams { r, n, s, f, a, b })
    }
}

fn two_block(r: i64, n: i64, s: i64, f: i64, a: i64, b: i64) -> Word {
    let first = lambda_block(r as u32, f, n);
    let second = lambda_block(s.unsigned_abs() as u32, f, n);
    if s >= 0 {
        &first * &second.shift(b, n).inverse()
    } else {
        &first * &second.shift(a + r * f, n)
    }
}

/// `Λ(r,f)·θ^B(Λ(s,f))^{-1}` for `s ≥ 0`, `Λ(r,f)·θ^{A+rf}(Λ(|s|,f))` for `s ≤ 0`.
pub fn type_f_word(p: &TypeFParams) -> Word {
    two_block(p.r, p.n, p.s, p.f, p.a, p.b)
}

/// The type F word with `B = A`.
pub fn type_m_word(p: &ParamsM) -> Word {
    two_block(p.r(), p.n(), p.s(), p.f(), p.a(), p.a())
}

/// `E_n(w) = <t, x | t^n, W>` with `x_i = t^i x t^{-i}`.
pub fn shift_extension(cp: &CyclicPresentation) -> FinitePresentation {
    let n = i64::from(cp.n());
    let w = cp.word().substitute(|i| {
        let i = i64::from(i);
        Word::from_pairs([(T, i), (Y, 1), (T, -i)])
    });
    FinitePresentation::from_names(&["t", "x"], vec![Word::power(T, n), w])
        .expect("two generators cover both relators")
}

/// `E_n(w)` rewritten under the automorphism `x ↦ x t^{-c}` fixing `t`, with
/// `t`-exponents reduced to symmetric residues mod `n` and the relator
/// cyclically reduced. The subgroup `<t>` is unchanged and `x_i` becomes
/// `t^i x t^{-c-i}`.
pub fn shift_extension_twisted(cp: &CyclicPresentation, c: i64) -> FinitePresentation {
    let n = i64::from(cp.n());
    let w = cp.word().substitute(|i| {
        let i = i64::from(i);
        Word::from_pairs([(T, i), (Y, 1), (T, -c - i)])
    });
    let w = Word::from_pairs(w.letters().iter().map(|l| {
        if l.gen != T {
            return (l.gen, l.exp);
        }
        let e = l.exp.rem_euclid(n);
        (T, if 2 * e > n { e - n } else { e })
    }))
    .cyclically_reduced();
    FinitePresentation::from_names(&["t", "x"], vec![Word::power(T, n), w])
        .expect("two generators cover both relators")
}

/// `E(r,n,s,A) = <t, y | t^n, y^r t^A y^{-s} t^{-A}>`.
pub fn e_presentation(r: i64, n: i64, s: i64, a: i64) -> FinitePresentation {
    let rel = Word::from_pairs([(Y, r), (T, a), (Y, -s), (T, -a)]);
    FinitePresentation::from_names(&["t", "y"], vec![Word::power(T, n), rel])
        .expect("two generators cover both relators")
}
