//! Two independent counts of the fixed points of a shift power.

use num_bigint::BigInt;
use num_integer::{ExtendedGcd, Integer};
use num_traits::{One, Signed, Zero};

use super::coset::{todd_coxeter_with, EnumOptions};
use super::OracleError;
use crate::arith::{big_gcd, big_mod, gcd, mod_pow};
use crate::classify::{classify, derive, ParamsM};
use crate::words::{e_presentation, Word, T};

/// Cosets of `<t>` in `E(r,n,s,A)` fixed by `t^j`.
pub fn fixed_cosets(p: &ParamsM, j: i64, opts: &EnumOptions) -> Result<usize, OracleError> {
    let counts = fixed_coset_counts(p, opts)?;
    Ok(counts[j.rem_euclid(p.n()) as usize])
}

/// Fixed-coset counts for every `0 ≤ j < n` from a single enumeration.
pub fn fixed_coset_counts(p: &ParamsM, opts: &EnumOptions) -> Result<Vec<usize>, OracleError> {
    let c = classify(p).map_err(|e| OracleError::Precondition(e.to_string()))?;
    if !c.kind.is_finite() {
        return Err(OracleError::Precondition(format!("{p}: group is not finite")));
    }
    fixed_coset_counts_e(p.r(), p.n(), p.s(), p.a(), opts)
}

/// As [`fixed_coset_counts`] for `E(r,n,s,A)` with any signs of `r`, `s`.
pub fn fixed_coset_counts_e(r: i64, n: i64, s: i64, a: i64, opts: &EnumOptions) -> Result<Vec<usize>, OracleError> {
    if n <= 0 {
        return Err(OracleError::Precondition(format!("n = {n} must be positive")));
    }
    let pres = e_presentation(r, n, s, a);
    let table = todd_coxeter_with(&pres, &[Word::gen(T)], opts)?;
    let t = table.generator_perm(T);
    let mut counts = vec![0usize; n as usize];
    // The <t>-orbit of a coset has length k dividing n; the coset is fixed
    // by t^j exactly when k divides j.
    for c in 0..table.num_cosets() {
        let mut k = 1;
        let mut x = t[c] as usize;
        while x != c {
            x = t[x] as usize;
            k += 1;
        }
        for j in (0..n as usize).step_by(k) {
            counts[j] += 1;
        }
    }
    Ok(counts)
}

/// Fixed points of `k ↦ β^j k` on `Z_μ'` with `β = r(s^{n-1}a + b)` and
/// `a r^n + b s = 1`.
pub fn shift_model_fix_order(p: &ParamsM, j: i64) -> Result<BigInt, OracleError> {
    let d = derive(p);
    if d.g != 1 || p.n_a() != 1 || d.mu.is_zero() {
        return Err(OracleError::Precondition(format!(
            "{p}: requires (r,s) = 1, (n,A) = 1 and μ ≠ 0"
        )));
    }
    shift_model_fix_order_e(p.r(), p.n(), p.s(), j)
}

/// As [`shift_model_fix_order`] for any signs of `r`, `s` with `(r,s) = 1`.
pub fn shift_model_fix_order_e(r: i64, n: i64, s: i64, j: i64) -> Result<BigInt, OracleError> {
    if n <= 0 || gcd(r, s) != 1 {
        return Err(OracleError::Precondition(format!("requires n > 0 and (r,s) = 1, got ({r},{n},{s})")));
    }
    let nu = n as usize;
    let r_big = BigInt::from(r);
    let s_big = BigInt::from(s);
    let r_n = num_traits::pow(r_big.clone(), nu);
    let mu = (&r_n - num_traits::pow(s_big.clone(), nu)).abs();
    if mu.is_zero() {
        return Err(OracleError::Precondition(format!("r^n = s^n for ({r},{n},{s})")));
    }
    let ExtendedGcd { gcd: g, x: a, y: b } = r_n.extended_gcd(&s_big);
    // g is ±1 since (r, s) = 1.
    let (a, b) = if g.is_one() { (a, b) } else { (-a, -b) };
    debug_assert!((&a * &r_n + &b * &s_big).is_one());
    let beta = big_mod(&(&r_big * (num_traits::pow(s_big, nu - 1) * a + b)), &mu);
    let power = mod_pow(&beta, &BigInt::from(j.rem_euclid(n)), &mu);
    let coefficient = big_mod(&(power - 1), &mu);
    Ok(if coefficient.is_zero() {
        mu
    } else {
        big_gcd(&coefficient, &mu)
    })
}

/// Brute-force count of `k mod μ'` with `(β^j - 1) k ≡ 0`, for small `μ'`.
pub fn shift_model_count(beta: i64, j: u32, mu: i64) -> usize {
    let c = (mod_pow(&BigInt::from(beta), &BigInt::from(j), &BigInt::from(mu)) - 1i32)
        .mod_floor(&BigInt::from(mu));
    (0..mu).filter(|&k| ((&c * k) % mu).is_zero()).count()
}
