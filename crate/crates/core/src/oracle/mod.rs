//! Brute-force verification machinery: coset enumeration, Smith normal
//! form, permutation representations and fixed-point counts.

pub mod coset;
pub mod fixpoints;
pub mod perm;
pub mod snf;
pub mod verify;

use num_bigint::BigInt;
use thiserror::Error;

use crate::words::{shift_extension_twisted, CyclicPresentation, FinitePresentation, Word, T};

pub use coset::{todd_coxeter, todd_coxeter_with, CosetTable, EnumOptions, Strategy, DEFAULT_MAX_COSETS};
pub use fixpoints::{fixed_coset_counts, fixed_coset_counts_e, fixed_cosets, shift_model_fix_order, shift_model_fix_order_e};
pub use perm::{derived_length, element_orders, regular_rep, regular_rep_cyclic, PermGroup, DEFAULT_ELEMENT_CAP};
pub use snf::{abelianization, smith_normal_form, IntegerMatrix, SnfResult};
pub use verify::{cross_verify, verify_example_one, verify_family, verify_gnkl, CheckStatus, VerificationReport, VerifyConfig};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("coset enumeration overflow: more than {max_cosets} cosets")]
    Overflow { max_cosets: usize },
    #[error("element cap exceeded: group has {order} elements, cap is {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// Order by trivial-subgroup enumeration; `None` when the enumeration
/// overflows, which never certifies infiniteness.
pub fn group_order(pres: &FinitePresentation, opts: &EnumOptions) -> Option<BigInt> {
    todd_coxeter_with(pres, &[], opts)
        .ok()
        .map(|t| BigInt::from(t.num_cosets()))
}

/// Presentations of the shift extension `G_n(w) ⋊ Z_n` under each twist
/// `x ↦ x t^{-c}`, shortest relators first.
pub fn shift_extension_variants(cp: &CyclicPresentation) -> Vec<(i64, FinitePresentation)> {
    let mut out: Vec<(i64, FinitePresentation)> = (0..i64::from(cp.n()))
        .map(|c| (c, shift_extension_twisted(cp, c)))
        .collect();
    out.sort_by_key(|(c, p)| (p.relators().iter().map(Word::length).sum::<u64>(), *c));
    out
}

/// Order of `G_n(w)` as the index of `<t>` in its shift extension, trying
/// each twist in turn; falls back to enumerating `G_n(w)` directly.
pub fn cyclic_group_order(cp: &CyclicPresentation, opts: &EnumOptions) -> Option<BigInt> {
    for (_, ext) in shift_extension_variants(cp) {
        match todd_coxeter_with(&ext, &[Word::gen(T)], opts) {
            Ok(t) => return Some(BigInt::from(t.num_cosets())),
            Err(OracleError::Overflow { .. }) => continue,
            Err(_) => return None,
        }
    }
    group_order(&cp.to_presentation(), opts)
}
