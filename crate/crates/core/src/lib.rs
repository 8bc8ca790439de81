//! Construction, classification and brute-force verification of
//! cyclically presented groups of type M.

pub mod arith;
pub mod classify;
pub mod metastruct;
pub mod oracle;
pub mod par;
pub mod record;
pub mod serde_util;
pub mod sweep;
pub mod words;
