//! Invariants of `E(r,n,s,A)` and `G = ker ν^f`, and the structural
//! classification they determine.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{abs_pow_diff, gcd, gcd3};
use crate::serde_util;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("n must be positive, got {0}")]
    NonPositiveN(i64),
    #[error("r must be nonnegative, got {0}")]
    NegativeR(i64),
    #[error("f(r-s) = {product} ≢ 0 mod {n}")]
    Congruence { product: i64, n: i64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

/// The tuple `(r, n, s, f, A)` with `f(r - s) ≡ 0 mod n`; `f` and `A` are
/// stored as least nonnegative residues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawParams")]
pub struct ParamsM {
    r: i64,
    n: i64,
    s: i64,
    f: i64,
    #[serde(rename = "A")]
    a: i64,
}

#[derive(Deserialize)]
struct RawParams {
    r: i64,
    n: i64,
    s: i64,
    f: i64,
    #[serde(rename = "A")]
    a: i64,
}

impl TryFrom<RawParams> for ParamsM {
    type Error = ClassifyError;

    fn try_from(p: RawParams) -> Result<Self, Self::Error> {
        ParamsM::new(p.r, p.n, p.s, p.f, p.a)
    }
}

impl ParamsM {
    pub fn new(r: i64, n: i64, s: i64, f: i64, a: i64) -> Result<Self, ClassifyError> {
        if n <= 0 {
            return Err(ClassifyError::NonPositiveN(n));
        }
        if r < 0 {
            return Err(ClassifyError::NegativeR(r));
        }
        let product = f * (r - s);
        if product.rem_euclid(n) != 0 {
            return Err(ClassifyError::Congruence { product, n });
        }
        Ok(ParamsM {
            r,
            n,
            s,
            f: f.rem_euclid(n),
            a: a.rem_euclid(n),
        })
    }

    pub fn r(&self) -> i64 {
        self.r
    }
    pub fn n(&self) -> i64 {
        self.n
    }
    pub fn s(&self) -> i64 {
        self.s
    }
    pub fn f(&self) -> i64 {
        self.f
    }
    pub fn a(&self) -> i64 {
        self.a
    }

    /// `(n, A)`.
    pub fn n_a(&self) -> i64 {
        gcd(self.n, self.a)
    }
}

impl fmt::Display for ParamsM {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{},{})", self.r, self.n, self.s, self.f, self.a)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedParams {
    pub m: i64,
    pub alpha: i64,
    pub g: i64,
    pub rho: i64,
    pub sigma: i64,
    #[serde(with = "serde_util::big")]
    pub mu: BigInt,
}

pub fn derive(p: &ParamsM) -> DerivedParams {
    let na = p.n_a();
    let m = p.n / na;
    let alpha = p.a / na;
    let g = gcd(p.r, p.s);
    let (rho, sigma) = if g == 0 { (0, 0) } else { (p.r / g, p.s / g) };
    let mu = if g == 0 {
        BigInt::zero()
    } else {
        abs_pow_diff(rho, sigma, m as u32)
    };
    DerivedParams {
        m,
        alpha,
        g,
        rho,
        sigma,
        mu,
    }
}

fn recip(d: &BigInt) -> BigRational {
    BigRational::new(BigInt::one(), d.clone())
}

fn recip_i(d: i64) -> BigRational {
    recip(&BigInt::from(d))
}

/// `χ(E)`; terms belonging to infinite vertex or edge groups vanish.
pub fn euler_characteristic(p: &ParamsM) -> BigRational {
    let d = derive(p);
    if d.g == 0 {
        return BigRational::new(BigInt::from(1 - p.n), BigInt::from(p.n));
    }
    let mut chi = recip_i(p.n) - recip_i(d.m);
    if !d.mu.is_zero() {
        let mu = &d.mu;
        chi += recip(&(mu * d.m)) - recip(mu) + recip(&(mu * d.g));
    }
    chi
}

/// `χ(G) = n·χ(E)`.
pub fn euler_characteristic_g(p: &ParamsM) -> BigRational {
    euler_characteristic(p) * BigRational::from_integer(BigInt::from(p.n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Torsion {
    TorsionFree,
    InfiniteDihedral,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Tits {
    Large,
    VirtuallyAbelian,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Kind {
    Finite {
        #[serde(with = "serde_util::big")]
        order_g: BigInt,
        #[serde(with = "serde_util::big")]
        order_e: BigInt,
        trivial_e: bool,
    },
    VirtuallyInfiniteCyclic,
    VirtuallyNonabelianFree,
    EqualPowers {
        gamma_free_rank: Option<i64>,
        two_dimensional: bool,
        torsion: Torsion,
    },
}

impl Kind {
    pub fn name(&self) -> &'static str {
        match self {
            Kind::Finite { .. } => "Finite",
            Kind::VirtuallyInfiniteCyclic => "VirtuallyInfiniteCyclic",
            Kind::VirtuallyNonabelianFree => "VirtuallyNonabelianFree",
            Kind::EqualPowers { .. } => "EqualPowers",
        }
    }

    pub fn order_g(&self) -> Option<&BigInt> {
        match self {
            Kind::Finite { order_g, .. } => Some(order_g),
            _ => None,
        }
    }

    pub fn order_e(&self) -> Option<&BigInt> {
        match self {
            Kind::Finite { order_e, .. } => Some(order_e),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Kind::Finite { .. })
    }
}

/// Properties that hold for every group of the class; reported, not checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifiedFlags {
    pub coherent: bool,
    pub subgroup_separable: bool,
    pub finite_subgroups_metacyclic: bool,
    pub has_finite_index_gd_le_2_subgroup: bool,
}

impl Default for CertifiedFlags {
    fn default() -> Self {
        CertifiedFlags {
            coherent: true,
            subgroup_separable: true,
            finite_subgroups_metacyclic: true,
            has_finite_index_gd_le_2_subgroup: true,
        }
    }
}

/// `Z_n * Z_c` with `c = 0` standing for an infinite cyclic factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicFreeProduct {
    pub n: i64,
    pub c: i64,
}

impl CyclicFreeProduct {
    pub fn is_large(&self) -> bool {
        self.n >= 2 && self.c != 1 && !(self.n == 2 && self.c == 2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    #[serde(flatten)]
    pub kind: Kind,
    pub reason: String,
    pub tits: Tits,
    #[serde(with = "serde_util::rational")]
    pub euler_e: BigRational,
    #[serde(with = "serde_util::rational")]
    pub euler_g: BigRational,
    /// Set when `A ≡ 0` or `rs = 0`, where `E ≅ Z_n * Z_{|r-s|}`.
    pub e_free_product: Option<CyclicFreeProduct>,
    pub certified_flags: CertifiedFlags,
}

fn e_free_product(p: &ParamsM) -> Option<CyclicFreeProduct> {
    (p.a == 0 || p.r * p.s == 0).then(|| CyclicFreeProduct {
        n: p.n,
        c: (p.r - p.s).abs(),
    })
}

/// Compare `1/x + 1/y` with 1 for positive `x`, `y`.
fn unit_fraction_cmp(x: i64, y: i64) -> std::cmp::Ordering {
    (x + y).cmp(&(x * y))
}

fn finite_kind(p: &ParamsM) -> Result<(Kind, &'static str), ClassifyError> {
    let rs_coprime = gcd(p.r, p.s) == 1;
    let (order_g, reason) = if p.n == 1 {
        (BigInt::from((p.r - p.s).abs()), "finite: n = 1, E ≅ Z_{|r-s|}")
    } else if p.n_a() == 1 && rs_coprime {
        (
            abs_pow_diff(p.r, p.s, p.n as u32),
            "finite: (n,A) = (r,s) = 1, |G| = |r^n - s^n|",
        )
    } else if (p.r - p.s).abs() == 1 && (p.r * p.s == 0 || p.a == 0) {
        (BigInt::one(), "finite: |r-s| = 1 with rs = 0 or A ≡ 0, E = <t>")
    } else {
        return Err(ClassifyError::Inconsistency(format!(
            "{p}: no virtual-freeness condition holds but the finiteness conditions fail"
        )));
    };
    let order_e = &order_g * p.n;
    let trivial_e = order_g.is_one();
    Ok((
        Kind::Finite {
            order_g,
            order_e,
            trivial_e,
        },
        reason,
    ))
}

fn trichotomy(p: &ParamsM, d: &DerivedParams) -> Result<(Kind, &'static str), ClassifyError> {
    use std::cmp::Ordering::*;
    let na = p.n_a();
    let rs_zero = p.r * p.s == 0;
    let diff = (p.r - p.s).abs();
    let gcd_branch = na == 1 || rs_zero;
    let a_zero = p.a == 0;
    let by_g = unit_fraction_cmp(p.n, d.g);
    let by_diff = unit_fraction_cmp(p.n, diff);

    let mut vic = None;
    if gcd_branch && by_g == Equal {
        vic = Some("virtually Z: 1/n + 1/(r,s) = 1 with (n,A) = 1 or rs = 0");
    } else if a_zero && by_diff == Equal {
        vic = Some("virtually Z: 1/n + 1/|r-s| = 1 with A ≡ 0");
    }
    let mut vnf = None;
    if gcd_branch && by_g == Less {
        vnf = Some("virtually free: 1/n + 1/(r,s) < 1 with (n,A) = 1 or rs = 0");
    } else if a_zero && by_diff == Less {
        vnf = Some("virtually free: 1/n + 1/|r-s| < 1 with A ≡ 0");
    } else if !a_zero && !rs_zero && na == 2 && d.g == 1 && d.mu == BigInt::from(2) {
        // r = -s = ±1 with m odd: M ≅ Z_n and E ≅ Z_n *_{Z_m} Z_n, χ(E) = 0.
        vic = Some("virtually Z: A ≢ 0, rs ≠ 0, (n,A) = 2 with r = -s = ±1 and μ = 2, so χ(E) = 0");
    } else if !a_zero && !rs_zero && na >= 2 {
        vnf = Some("virtually free: A ≢ 0, rs ≠ 0, (n,A) ≥ 2");
    }
    match (vic, vnf) {
        (Some(_), Some(_)) => Err(ClassifyError::Inconsistency(format!(
            "{p}: both virtually-Z and virtually-free conditions hold"
        ))),
        (Some(reason), None) => Ok((Kind::VirtuallyInfiniteCyclic, reason)),
        (None, Some(reason)) => Ok((Kind::VirtuallyNonabelianFree, reason)),
        (None, None) => finite_kind(p),
    }
}

fn equal_powers(p: &ParamsM, d: &DerivedParams) -> (Kind, &'static str) {
    let na = p.n_a();
    // (n,A)/n + 1/g > 1  ⟺  (n,A)·g + n > n·g
    let free = na * d.g + p.n > p.n * d.g;
    let torsion = torsion_of(p, d);
    if free {
        (
            Kind::EqualPowers {
                gamma_free_rank: Some(na),
                two_dimensional: false,
                torsion,
            },
            "r^m = s^m: Γ free of rank (n,A)",
        )
    } else {
        (
            Kind::EqualPowers {
                gamma_free_rank: None,
                two_dimensional: true,
                torsion,
            },
            "r^m = s^m: Γ of geometric dimension two",
        )
    }
}

pub fn classify(p: &ParamsM) -> Result<Classification, ClassifyError> {
    let d = derive(p);
    let (kind, reason) = if d.g == 0 {
        if p.n == 1 {
            (Kind::VirtuallyInfiniteCyclic, "r = s = 0: E ≅ Z")
        } else {
            (Kind::VirtuallyNonabelianFree, "r = s = 0: E ≅ Z_n * Z")
        }
    } else if !d.mu.is_zero() {
        trichotomy(p, &d)?
    } else {
        equal_powers(p, &d)
    };
    let tits = tits_from(p, &d, &kind);
    let euler_e = euler_characteristic(p);
    let euler_g = &euler_e * BigRational::from_integer(BigInt::from(p.n));
    Ok(Classification {
        kind,
        reason: reason.to_string(),
        tits,
        euler_e,
        euler_g,
        e_free_product: e_free_product(p),
        certified_flags: CertifiedFlags::default(),
    })
}

fn torsion_of(p: &ParamsM, d: &DerivedParams) -> Torsion {
    let n = p.n;
    let na = p.n_a();
    let dihedral = d.m % 2 == 0
        && p.r == -p.s
        && p.r != 0
        && (d.g * p.f).rem_euclid(n) == n / 2
        && (n / 2) % na == 0
        && ((n / 2) / na) % 2 == 1;
    if dihedral {
        Torsion::InfiniteDihedral
    } else {
        Torsion::TorsionFree
    }
}

/// Torsion in `G` when `r^m = s^m ≠ 0`.
pub fn two_dim_torsion(p: &ParamsM) -> Result<Torsion, ClassifyError> {
    let d = derive(p);
    if d.g == 0 || !d.mu.is_zero() {
        return Err(ClassifyError::Precondition(format!(
            "{p}: torsion split requires μ = 0 and (r,s) ≠ 0"
        )));
    }
    Ok(torsion_of(p, &d))
}

/// `(n,A)(n,gf) = n(n,A,gf)`.
pub fn cyclic_condition(p: &ParamsM) -> bool {
    let gf = gcd(p.r, p.s) * p.f;
    let na = p.n_a();
    na * gcd(p.n, gf) == p.n * gcd3(p.n, p.a, gf)
}

/// `l = gμ(n,f)/n`; every finite subgroup of `G` embeds in `Z_l`, and `l = 0`
/// means `G` is torsion-free.
pub fn finite_subgroup_bound(p: &ParamsM) -> Result<BigInt, ClassifyError> {
    if !cyclic_condition(p) {
        return Err(ClassifyError::Precondition(format!(
            "{p}: (n,A)(n,gf) ≠ n(n,A,gf)"
        )));
    }
    let d = derive(p);
    let num = &d.mu * d.g * gcd(p.n, p.f);
    if !(&num % p.n).is_zero() {
        return Err(ClassifyError::Inconsistency(format!(
            "{p}: gμ(n,f) = {num} is not divisible by n"
        )));
    }
    Ok(num / p.n)
}

fn tits_from(p: &ParamsM, d: &DerivedParams, kind: &Kind) -> Tits {
    let large = if let Some(fp) = e_free_product(p) {
        fp.is_large()
    } else if !d.mu.is_zero() {
        matches!(kind, Kind::VirtuallyNonabelianFree)
    } else if d.g == 1 {
        p.n_a() >= 2
    } else {
        !(p.n == 2 && d.g == 2)
    };
    if large {
        Tits::Large
    } else {
        Tits::VirtuallyAbelian
    }
}

pub fn tits_alternative(p: &ParamsM) -> Result<Tits, ClassifyError> {
    Ok(classify(p)?.tits)
}

fn require_finite_nontrivial(p: &ParamsM) -> Result<(), ClassifyError> {
    match classify(p)?.kind {
        Kind::Finite { order_g, .. } if order_g > BigInt::one() => Ok(()),
        _ => Err(ClassifyError::Precondition(format!(
            "{p}: G must be finite and nontrivial"
        ))),
    }
}

/// `|Fix(θ^j)| = |r^{(n,j)} - s^{(n,j)}|`.
pub fn fix_order(p: &ParamsM, j: i64) -> Result<BigInt, ClassifyError> {
    require_finite_nontrivial(p)?;
    Ok(abs_pow_diff(p.r, p.s, gcd(p.n, j) as u32))
}

/// `θ^j` is fixed-point free iff `(n,j) = |r - s| = 1`.
pub fn fixed_point_free(p: &ParamsM, j: i64) -> Result<bool, ClassifyError> {
    require_finite_nontrivial(p)?;
    Ok(gcd(p.n, j) == 1 && (p.r - p.s).abs() == 1)
}

impl Classification {
    pub fn euler_sign(&self) -> std::cmp::Ordering {
        if self.euler_e.is_positive() {
            std::cmp::Ordering::Greater
        } else if self.euler_e.is_negative() {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Equal
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pm(r: i64, n: i64, s: i64, f: i64, a: i64) -> ParamsM {
        ParamsM::new(r, n, s, f, a).unwrap()
    }

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn rejects_bad_congruence() {
        let err = ParamsM::new(2, 4, -1, 1, 1).unwrap_err();
        assert_eq!(err.to_string(), "f(r-s) = 3 ≢ 0 mod 4");
        assert!(ParamsM::new(-1, 4, 1, 0, 0).is_err());
        assert!(ParamsM::new(1, 0, 1, 0, 0).is_err());
    }

    #[test]
    fn derive_examples() {
        let d = derive(&pm(2, 4, -1, 0, 1));
        assert_eq!((d.m, d.alpha, d.g, d.rho, d.sigma), (4, 1, 1, 2, -1));
        assert_eq!(d.mu, 15.into());
        let d = derive(&pm(6, 24, 2, 12, 8));
        assert_eq!((d.m, d.alpha, d.g, d.rho, d.sigma), (3, 1, 2, 3, 1));
        assert_eq!(d.mu, 26.into());
        let d = derive(&pm(0, 5, 0, 0, 1));
        assert_eq!((d.g, d.rho, d.sigma), (0, 0, 0));
        assert!(d.mu.is_zero());
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_characteristic(&pm(2, 4, -1, 0, 1)), q(1, 60));
        assert_eq!(euler_characteristic_g(&pm(2, 4, -1, 0, 1)), q(1, 15));
        assert_eq!(euler_characteristic(&pm(1, 2, 0, 0, 1)), q(1, 2));
        // m = 2 = n, so 1/n - 1/m cancels and the infinite terms vanish.
        assert_eq!(euler_characteristic(&pm(3, 2, -3, 0, 1)), q(0, 1));
        assert_eq!(euler_characteristic(&pm(0, 5, 0, 0, 1)), q(-4, 5));
    }

    #[test]
    fn opposite_units_with_index_two() {
        // E = Z_6 *_{Z_3} Z_6 even though A ≢ 0, rs ≠ 0, (n,A) ≥ 2.
        for (n, f, a) in [(6, 0, 2), (6, 3, 4), (10, 5, 6)] {
            let c = classify(&pm(1, n, -1, f, a)).unwrap();
            assert_eq!(c.kind, Kind::VirtuallyInfiniteCyclic);
            assert!(c.euler_e.is_zero());
            assert_eq!(c.tits, Tits::VirtuallyAbelian);
        }
        // μ = 2 with (n,A) = 4 stays virtually free.
        let c = classify(&pm(1, 12, -1, 0, 4)).unwrap();
        assert_eq!(c.kind, Kind::VirtuallyNonabelianFree);
    }

    #[test]
    fn classify_examples() {
        let c = classify(&pm(2, 4, -1, 0, 1)).unwrap();
        assert_eq!(
            c.kind,
            Kind::Finite {
                order_g: 15.into(),
                order_e: 60.into(),
                trivial_e: false
            }
        );
        assert_eq!(c.tits, Tits::VirtuallyAbelian);

        let c = classify(&pm(3, 2, -3, 1, 1)).unwrap();
        assert_eq!(
            c.kind,
            Kind::EqualPowers {
                gamma_free_rank: None,
                two_dimensional: true,
                torsion: Torsion::InfiniteDihedral
            }
        );

        let c = classify(&pm(3, 2, 1, 0, 0)).unwrap();
        assert_eq!(c.kind, Kind::VirtuallyInfiniteCyclic);
        assert!(c.reason.contains("|r-s|"));
        assert_eq!(c.tits, Tits::VirtuallyAbelian);

        let c = classify(&pm(2, 2, 1, 0, 0)).unwrap();
        assert!(matches!(c.kind, Kind::Finite { trivial_e: true, .. }));

        let c = classify(&pm(6, 1, 2, 0, 0)).unwrap();
        assert_eq!(c.kind.order_g(), Some(&BigInt::from(4)));

        let c = classify(&pm(0, 5, 0, 0, 1)).unwrap();
        assert_eq!(c.kind, Kind::VirtuallyNonabelianFree);
        assert_eq!(c.e_free_product, Some(CyclicFreeProduct { n: 5, c: 0 }));
        assert_eq!(c.tits, Tits::Large);

        let c = classify(&pm(1, 4, 0, 0, 1)).unwrap();
        assert!(matches!(c.kind, Kind::Finite { trivial_e: true, .. }));
    }

    #[test]
    fn torsion_examples() {
        assert_eq!(two_dim_torsion(&pm(3, 2, -3, 1, 1)).unwrap(), Torsion::InfiniteDihedral);
        assert_eq!(two_dim_torsion(&pm(3, 2, -3, 0, 1)).unwrap(), Torsion::TorsionFree);
        assert_eq!(two_dim_torsion(&pm(2, 4, 2, 2, 0)).unwrap(), Torsion::TorsionFree);
        assert!(two_dim_torsion(&pm(2, 4, -1, 0, 1)).is_err());
    }

    #[test]
    fn cyclic_condition_examples() {
        assert!(cyclic_condition(&pm(6, 24, 2, 12, 8)));
        assert!(!cyclic_condition(&pm(6, 24, 2, 6, 9)));
        assert!(cyclic_condition(&pm(3, 7, -2, 0, 4)));
        assert_eq!(finite_subgroup_bound(&pm(6, 24, 2, 12, 8)).unwrap(), 26.into());
        assert_eq!(finite_subgroup_bound(&pm(3, 2, -3, 0, 1)).unwrap(), 0.into());
        assert_eq!(finite_subgroup_bound(&pm(2, 4, -1, 0, 1)).unwrap(), 15.into());
        assert!(finite_subgroup_bound(&pm(6, 24, 2, 6, 9)).is_err());
    }

    #[test]
    fn tits_examples() {
        assert_eq!(tits_alternative(&pm(2, 4, -1, 0, 1)).unwrap(), Tits::VirtuallyAbelian);
        assert_eq!(tits_alternative(&pm(2, 2, -2, 1, 1)).unwrap(), Tits::VirtuallyAbelian);
        assert_eq!(tits_alternative(&pm(3, 6, -3, 2, 3)).unwrap(), Tits::Large);
        assert_eq!(tits_alternative(&pm(1, 2, 3, 1, 0)).unwrap(), Tits::VirtuallyAbelian);
    }

    #[test]
    fn fix_order_examples() {
        let p = pm(2, 4, -1, 0, 1);
        assert_eq!(fix_order(&p, 1).unwrap(), 3.into());
        assert_eq!(fix_order(&p, 0).unwrap(), 15.into());
        assert_eq!(fix_order(&p, 2).unwrap(), 3.into());
        assert!(!fixed_point_free(&p, 1).unwrap());
        assert!(fix_order(&pm(3, 2, -3, 1, 1), 1).is_err());
        let p = pm(2, 5, 1, 0, 1);
        assert!(fixed_point_free(&p, 1).unwrap());
        assert_eq!(fix_order(&p, 1).unwrap(), 1.into());
    }

    #[test]
    fn params_json() {
        let p = pm(2, 4, -1, 4, 5);
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(text, r#"{"r":2,"n":4,"s":-1,"f":0,"A":1}"#);
        assert_eq!(serde_json::from_str::<ParamsM>(&text).unwrap(), p);
        assert!(serde_json::from_str::<ParamsM>(r#"{"r":2,"n":4,"s":-1,"f":1,"A":1}"#).is_err());
    }

    fn arb_params() -> impl Strategy<Value = ParamsM> {
        (0i64..=6, -6i64..=6, 1i64..=12, 0i64..12, 0i64..12)
            .prop_filter_map("class congruence", |(r, s, n, f, a)| {
                ParamsM::new(r, n, s, f % n, a % n).ok()
            })
    }

    proptest! {
        #[test]
        fn kind_matches_euler_sign(p in arb_params()) {
            let d = derive(&p);
            prop_assume!(!d.mu.is_zero());
            let c = classify(&p).unwrap();
            let expected = match c.kind {
                Kind::Finite { .. } => std::cmp::Ordering::Greater,
                Kind::VirtuallyInfiniteCyclic => std::cmp::Ordering::Equal,
                Kind::VirtuallyNonabelianFree => std::cmp::Ordering::Less,
                Kind::EqualPowers { .. } => unreachable!(),
            };
            prop_assert_eq!(c.euler_sign(), expected);
        }

        #[test]
        fn fix_order_depends_on_gcd(p in arb_params(), j in 0i64..24) {
            prop_assume!(fix_order(&p, 0).is_ok());
            let whole = fix_order(&p, 0).unwrap();
            let fj = fix_order(&p, j).unwrap();
            prop_assert_eq!(&fj, &fix_order(&p, gcd(p.n(), j)).unwrap());
            prop_assert!((whole % fj).is_zero());
        }
    }
}
