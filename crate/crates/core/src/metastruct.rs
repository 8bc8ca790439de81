//! Metacyclic structure: `B(M,N,R,λ)` presentations, the split metacyclic
//! vertex group `M`, the free-product decomposition of `G`, the named
//! families and the `G_n(x_0 x_k x_l)` analysis.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{abs_pow_diff, big_gcd, big_pow, gcd, gcd3, mod_inverse, mod_inverse_i64, mod_pow};
use crate::classify::{derive, ClassifyError, ParamsM};
use crate::serde_util;
use crate::words::{FinitePresentation, Word, T, Y};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructError {
    #[error("R^N = {r}^{n} ≢ 1 mod {m}")]
    NotMetacyclic { m: BigInt, n: i64, r: BigInt },
    #[error("N must be positive, got {0}")]
    NonPositiveN(i64),
    #[error("λ must be 0 or 1, got {0}")]
    BadLambda(u8),
    #[error("M = 0: the group is infinite and has no finite B-presentation")]
    InfiniteM,
    #[error("exponent {0} does not fit in a word")]
    TooLarge(BigInt),
    #[error("{family} hypothesis fails: {condition}")]
    Hypothesis {
        family: &'static str,
        condition: String,
    },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("not in class M via this route: {0}")]
    NotInClass(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
    #[error(transparent)]
    Params(#[from] ClassifyError),
}

/// `B(M,N,R,λ) = <a, b | a^M, b a b^{-1} = a^R, b^N = a^{λ M/(M,R-1)}>`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MetacyclicParams {
    #[serde(rename = "M", with = "serde_util::big")]
    m: BigInt,
    #[serde(rename = "N")]
    n: i64,
    #[serde(rename = "R", with = "serde_util::big")]
    r: BigInt,
    lambda: u8,
}

impl MetacyclicParams {
    pub fn new(m: BigInt, n: i64, r: BigInt, lambda: u8) -> Result<Self, StructError> {
        if n <= 0 {
            return Err(StructError::NonPositiveN(n));
        }
        if lambda > 1 {
            return Err(StructError::BadLambda(lambda));
        }
        if m.is_negative() {
            return Err(StructError::Precondition(format!("M = {m} is negative")));
        }
        let r = if m.is_zero() { r } else { r.mod_floor(&m) };
        let holds = if m.is_zero() {
            num_traits::pow(r.clone(), n as usize).is_one()
        } else {
            mod_pow(&r, &BigInt::from(n), &m) == BigInt::one().mod_floor(&m)
        };
        if !holds {
            return Err(StructError::NotMetacyclic { m, n, r });
        }
        Ok(MetacyclicParams { m, n, r, lambda })
    }

    pub fn big_m(&self) -> &BigInt {
        &self.m
    }
    pub fn big_n(&self) -> i64 {
        self.n
    }
    pub fn big_r(&self) -> &BigInt {
        &self.r
    }
    pub fn lambda(&self) -> u8 {
        self.lambda
    }

    /// `M·N`, or `None` for `M = 0`.
    pub fn order(&self) -> Option<BigInt> {
        (!self.m.is_zero()).then(|| &self.m * self.n)
    }

    /// `λ M / (M, R - 1)`.
    pub fn b_power_exponent(&self) -> BigInt {
        if self.lambda == 0 {
            return BigInt::zero();
        }
        let d = big_gcd(&self.m, &(&self.r - 1));
        if d.is_zero() {
            BigInt::zero()
        } else {
            &self.m / d
        }
    }
}

impl fmt::Display for MetacyclicParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B({},{},{},{})", self.m, self.n, self.r, self.lambda)
    }
}

const A_GEN: u32 = 0;
const B_GEN: u32 = 1;

fn small(e: &BigInt) -> Result<i64, StructError> {
    e.to_i64()
        .filter(|v| v.unsigned_abs() < 1 << 40)
        .ok_or_else(|| StructError::TooLarge(e.clone()))
}

pub fn b_presentation(mp: &MetacyclicParams) -> Result<FinitePresentation, StructError> {
    if mp.m.is_zero() {
        return Err(StructError::InfiniteM);
    }
    let m = small(&mp.m)?;
    let r = small(&mp.r)?;
    let e = small(&mp.b_power_exponent())?;
    let rels = vec![
        Word::power(A_GEN, m),
        Word::from_pairs([(B_GEN, 1), (A_GEN, 1), (B_GEN, -1), (A_GEN, -r)]),
        Word::from_pairs([(B_GEN, mp.n), (A_GEN, -e)]),
    ];
    Ok(FinitePresentation::from_names(&["a", "b"], rels).expect("two generators"))
}

/// `M = <v, u | v^m, u^ρ v^α u^{-σ} v^{-α}>`.
pub fn m_presentation(p: &ParamsM) -> FinitePresentation {
    let d = derive(p);
    const V: u32 = 0;
    const U: u32 = 1;
    let rel = Word::from_pairs([(U, d.rho), (V, d.alpha), (U, -d.sigma), (V, -d.alpha)]);
    FinitePresentation::from_names(&["v", "u"], vec![Word::power(V, d.m), rel])
        .expect("two generators")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "structure")]
pub enum MGroupStructure {
    /// Split metacyclic of order `mμ`.
    Finite { params: MetacyclicParams },
    /// `ρ = σ`: `Z × Z_m`.
    DirectProduct { m: i64 },
    /// `ρ = -σ`, `m` even: `Z ⋊ Z_m`.
    SemidirectProduct { m: i64 },
}

pub fn m_group_params(p: &ParamsM) -> Result<MGroupStructure, StructError> {
    let d = derive(p);
    if d.g == 0 {
        return Err(StructError::Precondition(format!("{p}: r = s = 0")));
    }
    if d.mu.is_zero() {
        return Ok(if d.rho == d.sigma {
            MGroupStructure::DirectProduct { m: d.m }
        } else {
            MGroupStructure::SemidirectProduct { m: d.m }
        });
    }
    let sigma_hat = mod_inverse(&BigInt::from(d.sigma), &d.mu).ok_or_else(|| {
        StructError::Inconsistency(format!("{p}: σ not invertible mod μ = {}", d.mu))
    })?;
    let r = BigInt::from(d.rho) * sigma_hat;
    Ok(MGroupStructure::Finite {
        params: MetacyclicParams::new(d.mu.clone(), d.m, r, 0)?,
    })
}

/// `G ≅ Ḡ * ... * Ḡ * F_k` with `copies` factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeProductDecomposition {
    pub copies: i64,
    pub factor: MetacyclicParams,
    pub free_rank: i64,
    pub cyclic_factor: bool,
}

pub fn gbar_params(p: &ParamsM) -> Result<FreeProductDecomposition, StructError> {
    let d = derive(p);
    if d.g != 1 || d.mu.is_zero() {
        return Err(StructError::Precondition(format!(
            "{p}: requires (r,s) = 1 and μ ≠ 0"
        )));
    }
    let n = p.n();
    let na = p.n_a();
    let nf = gcd(n, p.f());
    let naf = gcd3(n, p.a(), p.f());
    let mu = &d.mu;

    let m_num = mu * nf;
    if !(&m_num % n).is_zero() {
        return Err(StructError::Inconsistency(format!(
            "{p}: (n,f)μ = {m_num} not divisible by n"
        )));
    }
    let big_m = m_num / n;
    if (n * naf) % (na * nf) != 0 {
        return Err(StructError::Inconsistency(format!(
            "{p}: n(n,A,f)/((n,A)(n,f)) is not an integer"
        )));
    }
    let big_n = n * naf / (na * nf);

    let r_hat = mod_inverse(&BigInt::from(p.r()), mu)
        .ok_or_else(|| StructError::Inconsistency(format!("{p}: r not invertible mod μ")))?;
    let alpha_bar = mod_inverse_i64(d.alpha, d.m)
        .ok_or_else(|| StructError::Inconsistency(format!("{p}: α not invertible mod m")))?;
    let exponent = p.f() * alpha_bar / naf;
    let base = (BigInt::from(p.s()) * r_hat).mod_floor(mu);
    let r = mod_pow(&base, &BigInt::from(exponent), mu);
    let factor = MetacyclicParams::new(big_m, big_n, r, 1)
        .map_err(|e| StructError::Inconsistency(format!("{p}: {e}")))?;
    Ok(FreeProductDecomposition {
        copies: naf,
        factor,
        free_rank: na - naf,
        cyclic_factor: na * nf == n * naf,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum Family {
    P { r: i64, n: i64, l: i64, s: i64, f: i64 },
    R { r: i64, n: i64, k: i64, h: i64 },
    F { r: i64, n: i64, k: i64 },
    H { r: i64, n: i64, s: i64 },
    F4 { r: i64, n: i64, k: i64, s: i64 },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::P { r, n, l, s, f: ff } => write!(f, "P({r},{n},{l},{s},{ff})"),
            Family::R { r, n, k, h } => write!(f, "R({r},{n},{k},{h})"),
            Family::F { r, n, k } => write!(f, "F({r},{n},{k})"),
            Family::H { r, n, s } => write!(f, "H({r},{n},{s})"),
            Family::F4 { r, n, k, s } => write!(f, "F({r},{n},{k},{s})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyStructure {
    pub params_m: ParamsM,
    pub b_params: MetacyclicParams,
    #[serde(with = "serde_util::big")]
    pub order: BigInt,
}

fn require(family: &'static str, ok: bool, condition: impl FnOnce() -> String) -> Result<(), StructError> {
    if ok {
        Ok(())
    } else {
        Err(StructError::Hypothesis {
            family,
            condition: condition(),
        })
    }
}

fn prischepov(r: i64, n: i64, l: i64, s: i64, f: i64) -> Result<FamilyStructure, StructError> {
    const FAM: &str = "P";
    require(FAM, n > 0, || format!("n = {n} > 0"))?;
    require(FAM, r > 0 && s > 0, || format!("r, s > 0 (r = {r}, s = {s})"))?;
    require(FAM, gcd(n, l - 1) == 1, || format!("(n,l-1) = ({n},{}) = 1", l - 1))?;
    require(FAM, gcd(r, s) == 1, || format!("(r,s) = ({r},{s}) = 1"))?;
    require(FAM, r != s, || format!("r ≠ s (r = s = {r})"))?;
    require(FAM, (f * (r - s)).rem_euclid(n) == 0, || {
        format!("f(r-s) = {} ≡ 0 mod {n}", f * (r - s))
    })?;
    let params_m = ParamsM::new(r, n, s, f, l - 1)?;
    let order = abs_pow_diff(r, s, n as u32);
    let nf = gcd(n, params_m.f());
    let big_m = &order * nf / n;
    let r_hat = mod_inverse(&BigInt::from(r), &order)
        .ok_or_else(|| StructError::Inconsistency(format!("r = {r} not invertible mod {order}")))?;
    let a_bar = mod_inverse_i64(params_m.a(), n)
        .ok_or_else(|| StructError::Inconsistency(format!("l-1 not invertible mod {n}")))?;
    let base = (BigInt::from(s) * r_hat).mod_floor(&order);
    let big_r = mod_pow(&base, &BigInt::from(params_m.f() * a_bar), &order);
    let b_params = MetacyclicParams::new(big_m, n / nf, big_r, 1)
        .map_err(|e| StructError::Inconsistency(format!("P({r},{n},{l},{s},{f}): {e}")))?;
    Ok(FamilyStructure {
        params_m,
        b_params,
        order,
    })
}

pub fn family_params(family: &Family) -> Result<FamilyStructure, StructError> {
    match *family {
        Family::P { r, n, l, s, f } => prischepov(r, n, l, s, f),
        Family::R { r, n, k, h } => {
            const FAM: &str = "R";
            require(FAM, n > 0, || format!("n = {n} > 0"))?;
            require(FAM, gcd(n, k) == 1, || format!("(n,k) = ({n},{k}) = 1"))?;
            require(FAM, r > 1, || format!("r = {r} > 1"))?;
            require(FAM, (h * (r - 1)).rem_euclid(n) == 0, || {
                format!("h(r-1) = {} ≡ 0 mod {n}", h * (r - 1))
            })?;
            prischepov(r, n, (r - 1) * h + k + 1, 1, h)
        }
        Family::F { r, n, k } => {
            const FAM: &str = "F";
            require(FAM, n > 0, || format!("n = {n} > 0"))?;
            require(FAM, gcd(n, k) == 1, || format!("(n,k) = ({n},{k}) = 1"))?;
            require(FAM, r > 1, || format!("r = {r} > 1"))?;
            require(FAM, (r - 1).rem_euclid(n) == 0, || format!("r = {r} ≡ 1 mod {n}"))?;
            prischepov(r, n, r + k, 1, 1)
        }
        Family::H { r, n, s } => {
            const FAM: &str = "H";
            require(FAM, n > 0, || format!("n = {n} > 0"))?;
            require(FAM, gcd(n, r) == 1, || format!("(n,r) = ({n},{r}) = 1"))?;
            require(FAM, gcd(r, s) == 1, || format!("(r,s) = ({r},{s}) = 1"))?;
            require(FAM, r != s, || format!("r ≠ s (r = s = {r})"))?;
            require(FAM, (r - s).rem_euclid(n) == 0, || format!("r = {r} ≡ s = {s} mod {n}"))?;
            prischepov(r, n, r + 1, s, 1)
        }
        Family::F4 { r, n, k, s } => {
            const FAM: &str = "F4";
            require(FAM, n > 0, || format!("n = {n} > 0"))?;
            require(FAM, gcd(n, r + k - 1) == 1, || {
                format!("(n,r+k-1) = ({n},{}) = 1", r + k - 1)
            })?;
            require(FAM, gcd(r, s) == 1, || format!("(r,s) = ({r},{s}) = 1"))?;
            require(FAM, r != s, || format!("r ≠ s (r = s = {r})"))?;
            require(FAM, (r - s).rem_euclid(n) == 0, || format!("r = {r} ≡ s = {s} mod {n}"))?;
            prischepov(r, n, r + k, s, 1)
        }
    }
}

/// Parameters of `G_n(x_0 x_k x_l)` with `k`, `l` reduced mod `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GnklParams {
    pub n: i64,
    pub k: i64,
    pub l: i64,
    pub cond_a: bool,
    pub cond_c: bool,
}

impl GnklParams {
    pub fn new(n: i64, k: i64, l: i64) -> Result<Self, StructError> {
        if n <= 0 {
            return Err(StructError::Precondition(format!("n = {n} must be positive")));
        }
        let (k, l) = (k.rem_euclid(n), l.rem_euclid(n));
        let cond_a = n % 3 == 0 && (k + l) % 3 == 0;
        let zero = |x: i64| x.rem_euclid(n) == 0;
        let cond_c = zero(3 * l) || zero(3 * k) || zero(3 * (l - k));
        Ok(GnklParams {
            n,
            k,
            l,
            cond_a,
            cond_c,
        })
    }

    pub fn word(&self) -> Word {
        Word::from_pairs([(0, 1), (self.k as u32, 1), (self.l as u32, 1)])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GnklCase {
    /// `B((2^n - (-1)^n)/3, 3, 2^{2n/3}, 1)`.
    Metacyclic,
    /// `Z_{2^n - (-1)^n}`.
    Cyclic,
    /// `Z_{(2^{n/3} - (-1)^{n/3})/3} * F_2`.
    FreeProduct,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GnklReport {
    pub params: GnklParams,
    pub case: GnklCase,
    /// Order of `G`, absent when `G` is infinite.
    #[serde(with = "serde_util::big_opt")]
    pub order: Option<BigInt>,
    /// Present in the metacyclic case.
    pub b_params: Option<MetacyclicParams>,
    /// Order of the cyclic free factor in the free-product case.
    #[serde(with = "serde_util::big_opt")]
    pub cyclic_factor_order: Option<BigInt>,
    pub free_rank: i64,
    /// Normal form `(2, n, -1, f, A)` the closed formula refers to.
    pub normalized: Option<ParamsM>,
    /// `(2, n, -1, f, A)` obtained from `x_0 x_k x_l` by cyclic permutation
    /// and shift only.
    pub route: Option<ParamsM>,
    pub transformations: Vec<String>,
}

/// `2^e - (-1)^e`.
fn two_pow_alt(e: i64) -> BigInt {
    big_pow(2, e as u32) - big_pow(-1, e as u32)
}

/// Find `(f, A)` with `3f ≡ 0` among the three rotations of `x_0 x_k x_l`.
pub fn gnkl_route(q: &GnklParams) -> Option<(ParamsM, String)> {
    let (n, k, l) = (q.n, q.k, q.l);
    let candidates = [
        (k, l - 2 * k, "x_0 x_k x_l"),
        (l - k, k - 2 * l, "x_k x_l x_0 shifted by -k"),
        (n - l, k + l, "x_l x_0 x_k shifted by -l"),
    ];
    candidates.into_iter().find_map(|(f, a, how)| {
        ParamsM::new(2, n, -1, f, a).ok().map(|p| {
            (
                p,
                format!("{how} = x_0 x_f x_(2f+A) with (f, A) = ({}, {})", p.f(), p.a()),
            )
        })
    })
}

pub fn gnkl_analyze(q: &GnklParams) -> Result<GnklReport, StructError> {
    let (n, k, l) = (q.n, q.k, q.l);
    if gcd3(n, k, l) != 1 {
        return Err(StructError::Precondition(format!("(n,k,l) = ({n},{k},{l}) ≠ 1")));
    }
    if !q.cond_c {
        return Err(StructError::NotInClass(format!(
            "none of 3k, 3l, 3(l-k) is ≡ 0 mod {n}"
        )));
    }
    let route = gnkl_route(q);
    let mut transformations: Vec<String> = route.iter().map(|(_, t)| t.clone()).collect();
    let route = route.map(|(p, _)| p);

    let report = if k == 0 || l == 0 || k == l {
        transformations.push("k ≡ 0, l ≡ 0 or k ≡ l: G ≅ G_n(x_0^2 x_1)".into());
        let order = two_pow_alt(n);
        GnklReport {
            params: *q,
            case: GnklCase::Cyclic,
            order: Some(order),
            b_params: None,
            cyclic_factor_order: None,
            free_rank: 0,
            normalized: Some(ParamsM::new(2, n, -1, 0, 1)?),
            route,
            transformations,
        }
    } else if q.cond_a {
        let m = n / 3;
        transformations.push(format!(
            "(A) holds: G ≅ G_{n}(x_0 x_{m} x_ε) with ε = ±1, (n,A) = 3, (n,A,f) = 1"
        ));
        GnklReport {
            params: *q,
            case: GnklCase::FreeProduct,
            order: None,
            b_params: None,
            cyclic_factor_order: Some(two_pow_alt(m) / 3),
            free_rank: 2,
            normalized: None,
            route,
            transformations,
        }
    } else {
        let third = n / 3;
        transformations.push(format!(
            "(A) fails, k, l, l-k ≢ 0: G ≅ G_{n}(x_0 x_{third} x_{})",
            1 + 2 * third
        ));
        let big_m = two_pow_alt(n) / 3;
        let big_r = mod_pow(&BigInt::from(2), &BigInt::from(2 * third), &big_m);
        let b = MetacyclicParams::new(big_m, 3, big_r, 1)
            .map_err(|e| StructError::Inconsistency(format!("G_{n}({k},{l}): {e}")))?;
        GnklReport {
            params: *q,
            case: GnklCase::Metacyclic,
            order: b.order(),
            b_params: Some(b),
            cyclic_factor_order: None,
            free_rank: 0,
            normalized: Some(ParamsM::new(2, n, -1, third, 1)?),
            route,
            transformations,
        }
    };
    Ok(report)
}

/// `J_n(m,k) = <t, y | t^n, y^{m-k} t^3 y^k t^2>`.
pub fn j_presentation(n: i64, m: i64, k: i64) -> FinitePresentation {
    let rel = Word::from_pairs([(Y, m - k), (T, 3), (Y, k), (T, 2)]);
    FinitePresentation::from_names(&["t", "y"], vec![Word::power(T, n), rel]).expect("two generators")
}

/// `(2k-1)(2^{2k-1} - (-1)^{(k+1)(k+2)/2} 2^k + 1)`.
pub fn h242_order(k: u32) -> BigInt {
    assert!(k >= 1, "k must be positive");
    let k64 = i64::from(k);
    let sign = big_pow(-1, (((k64 + 1) * (k64 + 2) / 2) % 2) as u32);
    BigInt::from(2 * k64 - 1) * (big_pow(2, 2 * k - 1) - sign * big_pow(2, k) + 1)
}
