//! Cross-checks of predicted structure against the oracles.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::coset::{todd_coxeter_with, EnumOptions, Strategy, DEFAULT_MAX_COSETS};
use super::fixpoints::{fixed_coset_counts, shift_model_fix_order};
use super::perm::{derived_length, element_orders, regular_rep, regular_rep_cyclic, DEFAULT_ELEMENT_CAP};
use super::snf::{abelianization, smith_normal_form, IntegerMatrix, SnfResult};
use super::{cyclic_group_order, group_order, OracleError};
use crate::arith::gcd;
use crate::classify::{
    classify, cyclic_condition, derive, finite_subgroup_bound, fix_order, fixed_point_free, two_dim_torsion, Kind,
    ParamsM,
};
use crate::metastruct::{
    b_presentation, family_params, gbar_params, gnkl_analyze, m_group_params, m_presentation, Family, GnklCase,
    GnklParams, MGroupStructure,
};
use crate::words::{cyclic_presentation, type_m_word, CyclicPresentation, FinitePresentation, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub max_cosets: usize,
    pub element_cap: usize,
    pub strategy: Strategy,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_cosets: DEFAULT_MAX_COSETS,
            element_cap: DEFAULT_ELEMENT_CAP,
            strategy: Strategy::Auto,
        }
    }
}

impl VerifyConfig {
    fn enum_options(&self) -> EnumOptions {
        EnumOptions {
            max_cosets: self.max_cosets,
            strategy: self.strategy,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
    /// Skipped because an enumeration hit `max_cosets` or the element cap.
    #[serde(default)]
    pub capped: bool,
}

/// Whether a check's verdict comes from an enumeration under the caps.
fn needs_oracle(name: &str) -> bool {
    const NAMES: [&str; 10] = [
        "order_E",
        "order_G",
        "order_M",
        "order_M_B",
        "order_B",
        "family_order_G",
        "family_order_B",
        "fixed_points",
        "exponent_bound",
        "index_t",
    ];
    NAMES.contains(&name) || name.starts_with("derived_length_")
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        VerificationReport {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    fn push(&mut self, name: &str, status: CheckStatus, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            status,
            detail: detail.into(),
            capped: false,
        });
    }

    fn compare<T: PartialEq + fmt::Display>(&mut self, name: &str, expected: T, observed: T) {
        let status = if expected == observed {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        self.push(name, status, format!("expected {expected}, observed {observed}"));
    }

    fn skip(&mut self, name: &str, why: impl Into<String>) {
        self.push(name, CheckStatus::Skipped, why);
    }

    fn skip_capped(&mut self, name: &str, why: impl Into<String>) {
        self.push(name, CheckStatus::Skipped, why);
        if let Some(c) = self.checks.last_mut() {
            c.capped = true;
        }
    }

    fn skip_error(&mut self, name: &str, e: OracleError) {
        match e {
            OracleError::Overflow { .. } | OracleError::CapExceeded { .. } => self.skip_capped(name, e.to_string()),
            OracleError::Precondition(_) => self.skip(name, e.to_string()),
        }
    }

    pub fn count(&self, status: CheckStatus) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    /// No check failed.
    pub fn passed(&self) -> bool {
        self.count(CheckStatus::Fail) == 0
    }

    /// Some enumeration hit a cap and no enumeration reached a verdict.
    pub fn all_capped(&self) -> bool {
        self.checks.iter().any(|c| c.capped)
            && self
                .checks
                .iter()
                .filter(|c| needs_oracle(&c.name))
                .all(|c| c.status == CheckStatus::Skipped)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for c in &self.checks {
            let tag = match c.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skipped => "skip",
            };
            writeln!(f, "  [{tag}] {}: {}", c.name, c.detail)?;
        }
        write!(
            f,
            "  {} passed, {} failed, {} skipped",
            self.count(CheckStatus::Pass),
            self.count(CheckStatus::Fail),
            self.count(CheckStatus::Skipped)
        )
    }
}

/// The cyclically presented group `G_n(w)` for a type M word.
pub fn g_presentation(p: &ParamsM) -> FinitePresentation {
    g_cyclic(p).to_presentation()
}

/// `G_n(w)` for the type M word of `p`.
pub fn g_cyclic(p: &ParamsM) -> CyclicPresentation {
    CyclicPresentation::new(p.n() as u32, type_m_word(p)).expect("type M words use generators below n")
}

/// Outcome of an order enumeration bounded by the configuration.
enum Enumerated {
    Order(BigInt),
    Skipped(String),
}

fn enumerate_order(
    route: impl FnOnce(&EnumOptions) -> Option<BigInt>,
    predicted: Option<&BigInt>,
    cfg: &VerifyConfig,
) -> Enumerated {
    if let Some(p) = predicted {
        if *p > BigInt::from(cfg.max_cosets) {
            return Enumerated::Skipped(format!("predicted order {p} exceeds max_cosets {}", cfg.max_cosets));
        }
    }
    match route(&cfg.enum_options()) {
        Some(o) => Enumerated::Order(o),
        None => Enumerated::Skipped(format!("enumeration overflow at {} cosets", cfg.max_cosets)),
    }
}

fn order_check(
    report: &mut VerificationReport,
    name: &str,
    pres: &FinitePresentation,
    predicted: &BigInt,
    cfg: &VerifyConfig,
) -> Option<BigInt> {
    order_check_by(report, name, |o| group_order(pres, o), predicted, cfg)
}

/// As [`order_check`] for `G_n(w)` through its shift extension.
fn cyclic_order_check(
    report: &mut VerificationReport,
    name: &str,
    cp: &CyclicPresentation,
    predicted: &BigInt,
    cfg: &VerifyConfig,
) -> Option<BigInt> {
    order_check_by(report, name, |o| cyclic_group_order(cp, o), predicted, cfg)
}

fn order_check_by(
    report: &mut VerificationReport,
    name: &str,
    route: impl FnOnce(&EnumOptions) -> Option<BigInt>,
    predicted: &BigInt,
    cfg: &VerifyConfig,
) -> Option<BigInt> {
    match enumerate_order(route, Some(predicted), cfg) {
        Enumerated::Order(o) => {
            report.compare(name, predicted.clone(), o.clone());
            Some(o)
        }
        Enumerated::Skipped(why) => {
            report.skip_capped(name, why);
            None
        }
    }
}

/// Abelianization of a free product: direct sum of the factors'.
pub fn direct_sum(parts: &[SnfResult]) -> SnfResult {
    let torsion: Vec<&BigInt> = parts.iter().flat_map(|p| &p.invariant_factors).collect();
    let mut m = IntegerMatrix::zeros(torsion.len(), torsion.len());
    for (i, d) in torsion.iter().enumerate() {
        m.set(i, i, (*d).clone());
    }
    let mut out = smith_normal_form(m);
    out.free_rank = parts.iter().map(|p| p.free_rank).sum();
    out
}

fn euler_check(report: &mut VerificationReport, p: &ParamsM, kind: &Kind, sign: std::cmp::Ordering) {
    use std::cmp::Ordering::*;
    let expected = match kind {
        Kind::Finite { .. } => Greater,
        Kind::VirtuallyInfiniteCyclic => Equal,
        Kind::VirtuallyNonabelianFree => Less,
        Kind::EqualPowers { .. } => {
            report.skip("euler_sign", "μ = 0: the sign does not determine the kind");
            return;
        }
    };
    let status = if expected == sign {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    };
    report.push("euler_sign", status, format!("{p}: kind {} with χ(E) sign {sign:?}", kind.name()));
}

/// Run every oracle-checkable claim about `p` within the configured caps.
pub fn cross_verify(p: &ParamsM, cfg: &VerifyConfig) -> VerificationReport {
    let mut report = VerificationReport::new(format!("E{p}"));
    let c = match classify(p) {
        Ok(c) => c,
        Err(e) => {
            report.push("classify", CheckStatus::Fail, e.to_string());
            return report;
        }
    };
    report.push("classify", CheckStatus::Pass, c.reason.clone());
    euler_check(&mut report, p, &c.kind, c.euler_sign());
    let d = derive(p);
    let g_pres = g_presentation(p);

    if let Kind::Finite { order_g, order_e, .. } = &c.kind {
        let e_pres = crate::words::e_presentation(p.r(), p.n(), p.s(), p.a());
        order_check(&mut report, "order_E", &e_pres, order_e, cfg);
        cyclic_order_check(&mut report, "order_G", &g_cyclic(p), order_g, cfg);
    } else {
        report.skip("order_E", format!("{}: infinite, not desk-verifiable", c.kind.name()));
        report.skip("order_G", format!("{}: infinite, not desk-verifiable", c.kind.name()));
    }
    if let Kind::EqualPowers { .. } = c.kind {
        match two_dim_torsion(p) {
            Ok(t) => report.skip("torsion", format!("{t:?} recorded, unverified")),
            Err(e) => report.push("torsion", CheckStatus::Fail, e.to_string()),
        }
    }

    m_group_checks(&mut report, p, cfg);
    if d.g == 1 && !d.mu.is_zero() {
        decomposition_checks(&mut report, p, &c.kind, &g_pres, cfg);
    }
    if let Kind::Finite { order_g, .. } = &c.kind {
        fixed_point_checks(&mut report, p, order_g, cfg);
        exponent_check(&mut report, p, order_g, cfg);
    }
    report
}

fn m_group_checks(report: &mut VerificationReport, p: &ParamsM, cfg: &VerifyConfig) {
    let params = match m_group_params(p) {
        Ok(MGroupStructure::Finite { params }) => params,
        Ok(other) => {
            report.skip("order_M", format!("{other:?}: infinite"));
            return;
        }
        Err(e) => {
            report.skip("order_M", e.to_string());
            return;
        }
    };
    let predicted = params.order().expect("finite M");
    let m_pres = m_presentation(p);
    if order_check(report, "order_M", &m_pres, &predicted, cfg).is_none() {
        return;
    }
    match b_presentation(&params) {
        Ok(b) => {
            order_check(report, "order_M_B", &b, &predicted, cfg);
            report.compare("abelianization_M", abelianization(&b), abelianization(&m_pres));
        }
        Err(e) => report.skip("order_M_B", e.to_string()),
    }
}

fn decomposition_checks(
    report: &mut VerificationReport,
    p: &ParamsM,
    kind: &Kind,
    g_pres: &FinitePresentation,
    cfg: &VerifyConfig,
) {
    let dec = match gbar_params(p) {
        Ok(dec) => dec,
        Err(e) => {
            report.push("gbar", CheckStatus::Fail, e.to_string());
            return;
        }
    };
    let factor_order = dec.factor.order().expect("factor M is positive");
    // A free product of copies of Ḡ and F_k is finite only when k = 0 and
    // there is at most one copy or Ḡ is trivial.
    let product_order = (dec.free_rank == 0 && (dec.copies <= 1 || factor_order.is_one())).then(|| {
        if dec.copies == 0 {
            BigInt::one()
        } else {
            factor_order.clone()
        }
    });
    let detail = format!(
        "{} copies of {} of order {factor_order}, free rank {}",
        dec.copies, dec.factor, dec.free_rank
    );
    if let Kind::Finite { order_g, .. } = kind {
        let status = if product_order.as_ref() == Some(order_g) {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        report.push("decomposition_order", status, format!("{detail}, |G| = {order_g}"));
    } else if let Some(o) = product_order {
        report.push(
            "decomposition_order",
            CheckStatus::Fail,
            format!("{p}: infinite G but the decomposition has order {o}"),
        );
    }
    let b = match b_presentation(&dec.factor) {
        Ok(b) => b,
        Err(e) => {
            report.skip("order_B", e.to_string());
            return;
        }
    };
    order_check(report, "order_B", &b, &factor_order, cfg);
    let factor_ab = abelianization(&b);
    let mut parts = vec![factor_ab.clone(); dec.copies as usize];
    parts.push(SnfResult {
        invariant_factors: Vec::new(),
        free_rank: dec.free_rank as usize,
    });
    report.compare("abelianization_G", direct_sum(&parts), abelianization(g_pres));
    if dec.cyclic_factor {
        let status = if factor_ab.is_cyclic() && factor_ab.order() == Some(factor_order.clone()) {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        report.push("cyclic_factor", status, format!("Ḡ^ab = {factor_ab}, |Ḡ| = {factor_order}"));
    }
}

fn fixed_point_checks(report: &mut VerificationReport, p: &ParamsM, order_g: &BigInt, cfg: &VerifyConfig) {
    if order_g <= &BigInt::from(1) {
        report.skip("fixed_points", "G is trivial");
        return;
    }
    if *order_g > BigInt::from(cfg.max_cosets) {
        report.skip_capped("fixed_points", format!("|G| = {order_g} exceeds max_cosets {}", cfg.max_cosets));
        return;
    }
    let shift_model = gcd(p.n(), p.a()) == 1 && derive(p).g == 1;
    let counts = match fixed_coset_counts(p, &cfg.enum_options()) {
        Ok(c) => c,
        Err(e) => {
            report.skip_error("fixed_points", e);
            return;
        }
    };
    let mut mismatches = Vec::new();
    for j in 0..p.n() {
        let formula = fix_order(p, j).expect("finite nontrivial");
        let cosets = BigInt::from(counts[j as usize]);
        let model = shift_model.then(|| shift_model_fix_order(p, j).expect("preconditions checked"));
        let free = fixed_point_free(p, j).expect("finite nontrivial");
        let agree = cosets == formula && model.as_ref().is_none_or(|m| *m == formula);
        let free_ok = free == (cosets == BigInt::from(1));
        if !agree || !free_ok {
            mismatches.push(format!(
                "j = {j}: formula {formula}, cosets {cosets}, shift model {}, fixed-point-free {free}",
                model.map_or("n/a".to_string(), |m| m.to_string())
            ));
        }
    }
    if mismatches.is_empty() {
        let models = if shift_model { "coset and shift-model" } else { "coset" };
        report.push("fixed_points", CheckStatus::Pass, format!("{models} counts agree for all j < {}", p.n()));
    } else {
        report.push("fixed_points", CheckStatus::Fail, mismatches.join("; "));
    }
}

fn exponent_check(report: &mut VerificationReport, p: &ParamsM, order_g: &BigInt, cfg: &VerifyConfig) {
    if !cyclic_condition(p) {
        return;
    }
    let Ok(l) = finite_subgroup_bound(p) else {
        report.skip("exponent_bound", "bound undefined");
        return;
    };
    if *order_g > BigInt::from(cfg.element_cap) {
        report.skip_capped("exponent_bound", format!("|G| = {order_g} exceeds element cap {}", cfg.element_cap));
        return;
    }
    let orders = match regular_rep_cyclic(&g_cyclic(p), &cfg.enum_options(), cfg.element_cap)
        .and_then(|pg| element_orders(&pg))
    {
        Ok(o) => o,
        Err(e) => {
            report.skip_error("exponent_bound", e);
            return;
        }
    };
    let bad: Vec<u64> = orders
        .iter()
        .copied()
        .filter(|&o| !l.is_multiple_of(&BigInt::from(o)))
        .collect();
    let max = orders.iter().copied().max().unwrap_or(1);
    if bad.is_empty() {
        report.push("exponent_bound", CheckStatus::Pass, format!("all element orders divide l = {l} (max {max})"));
    } else {
        report.push(
            "exponent_bound",
            CheckStatus::Fail,
            format!("element orders {:?} do not divide l = {l}", &bad[..bad.len().min(5)]),
        );
    }
}

/// Family prediction checks followed by the full tuple verification.
pub fn verify_family(family: &Family, cfg: &VerifyConfig) -> VerificationReport {
    let mut report = VerificationReport::new(family.to_string());
    let st = match family_params(family) {
        Ok(st) => st,
        Err(e) => {
            report.push("hypotheses", CheckStatus::Fail, e.to_string());
            return report;
        }
    };
    report.push("hypotheses", CheckStatus::Pass, format!("E{} with {}", st.params_m, st.b_params));
    let g_pres = g_presentation(&st.params_m);
    cyclic_order_check(&mut report, "family_order_G", &g_cyclic(&st.params_m), &st.order, cfg);
    match b_presentation(&st.b_params) {
        Ok(b) => {
            order_check(&mut report, "family_order_B", &b, &st.order, cfg);
            report.compare("family_abelianization", abelianization(&b), abelianization(&g_pres));
        }
        Err(e) => report.skip("family_order_B", e.to_string()),
    }
    report.extend(cross_verify(&st.params_m, cfg));
    report
}

/// Checks for `G_n(x_0 x_k x_l)`.
pub fn verify_gnkl(q: &GnklParams, cfg: &VerifyConfig) -> VerificationReport {
    let mut report = VerificationReport::new(format!("G_{}(x_0 x_{} x_{})", q.n, q.k, q.l));
    let r = match gnkl_analyze(q) {
        Ok(r) => r,
        Err(e) => {
            report.skip("gnkl", e.to_string());
            return report;
        }
    };
    let g_cp = CyclicPresentation::new(q.n as u32, q.word()).expect("indices below n");
    let g_pres = g_cp.to_presentation();
    let ab = abelianization(&g_pres);
    match r.case {
        GnklCase::Cyclic => {
            let order = r.order.clone().expect("finite case");
            cyclic_order_check(&mut report, "order_G", &g_cp, &order, cfg);
            let expected = SnfResult {
                invariant_factors: vec![order].into_iter().filter(|o| *o > BigInt::from(1)).collect(),
                free_rank: 0,
            };
            report.compare("abelianization_G", expected, ab);
        }
        GnklCase::Metacyclic => {
            let order = r.order.clone().expect("finite case");
            cyclic_order_check(&mut report, "order_G", &g_cp, &order, cfg);
            let b = b_presentation(r.b_params.as_ref().expect("metacyclic case")).expect("small exponents");
            order_check(&mut report, "order_B", &b, &order, cfg);
            report.compare("abelianization_G", abelianization(&b), ab);
        }
        GnklCase::FreeProduct => {
            report.skip("order_G", "free product with F_2: infinite");
            let c = r.cyclic_factor_order.clone().expect("free product case");
            let expected = SnfResult {
                invariant_factors: vec![c].into_iter().filter(|o| *o > BigInt::from(1)).collect(),
                free_rank: r.free_rank as usize,
            };
            report.compare("abelianization_G", expected, ab);
        }
    }
    report
}

fn word(pairs: &[(u32, i64)]) -> Word {
    Word::from_pairs(pairs.iter().copied())
}

/// The worked example: `E = <t, x | t^6, xtxtxtx^-1t^-3>` with
/// `G = F(3,6)`, and `R(3,6,5,2)` alongside.
pub fn verify_example_one(cfg: &VerifyConfig) -> VerificationReport {
    let mut report = VerificationReport::new("example1: F(3,6) and R(3,6,5,2)");
    let e: FinitePresentation = "< t, x | t^6, x*t*x*t*x*t*x^-1*t^-3 >".parse().expect("valid");
    let opts = cfg.enum_options();
    let mut count = |name: &str, pres: &FinitePresentation, sub: &[Word], expected: usize| {
        match todd_coxeter_with(pres, sub, &opts) {
            Ok(t) => report.compare(name, expected, t.num_cosets()),
            Err(e) => report.skip_error(name, e),
        }
    };
    count("order_E", &e, &[], 9072);
    count("index_t", &e, &[Word::gen(0)], 1512);
    let f36 = cyclic_presentation(6, &word(&[(0, 1), (1, 1), (2, 1), (3, -1)])).expect("valid");
    let r3652 = cyclic_presentation(6, &word(&[(0, 1), (2, 1), (4, 1), (3, -1)])).expect("valid");
    for (name, pres, expected) in [
        ("derived_length_F(3,6)", &f36, 4),
        ("derived_length_R(3,6,5,2)", &r3652, 3),
        ("derived_length_E", &e, 4),
    ] {
        match regular_rep(pres, &opts, cfg.element_cap).and_then(|pg| derived_length(&pg)) {
            Ok(Some(l)) => report.compare(name, expected, l),
            Ok(None) => report.push(name, CheckStatus::Fail, "not solvable"),
            Err(e) => report.skip_error(name, e),
        }
    }
    report
}

/// Orders of `G_m(x_0^ρ x_1^{-σ})`.
pub fn two_generator_cyclic_order(rho: i64, sigma: i64, m: u32, cfg: &VerifyConfig) -> Result<(BigInt, SnfResult), OracleError> {
    let pres = cyclic_presentation(m, &word(&[(0, rho), (1 % m, -sigma)]))
        .map_err(|e| OracleError::Precondition(e.to_string()))?;
    let t = todd_coxeter_with(&pres, &[], &cfg.enum_options())?;
    Ok((BigInt::from(t.num_cosets()), abelianization(&pres)))
}

/// `|r^n - s^n|` as `u64` when it fits.
pub fn small_order(v: &BigInt) -> Option<u64> {
    if v.is_zero() {
        None
    } else {
        v.to_u64()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn capped_reports() {
        let p = ParamsM::new(2, 6, -1, 2, 1).unwrap();
        let tight = VerifyConfig {
            max_cosets: 5,
            element_cap: 5,
            ..VerifyConfig::default()
        };
        let report = cross_verify(&p, &tight);
        assert_eq!(report.count(CheckStatus::Fail), 0);
        assert!(report.all_capped(), "{report}");
        assert!(!cross_verify(&p, &VerifyConfig::default()).all_capped());
        let infinite = ParamsM::new(0, 5, 0, 0, 1).unwrap();
        assert!(!cross_verify(&infinite, &tight).all_capped());
    }

    fn pm(r: i64, n: i64, s: i64, f: i64, a: i64) -> ParamsM {
        ParamsM::new(r, n, s, f, a).unwrap()
    }

    #[test]
    fn all_checks_pass() {
        let report = cross_verify(&pm(2, 4, -1, 0, 1), &VerifyConfig::default());
        assert!(report.passed(), "{report}");
        for name in ["order_E", "order_G", "order_M", "order_B", "fixed_points", "euler_sign"] {
            assert_eq!(report.check(name).unwrap().status, CheckStatus::Pass, "{name}");
        }
    }

    #[test]
    fn both_routes_agree() {
        let report = cross_verify(&pm(2, 6, -1, 2, 1), &VerifyConfig::default());
        assert!(report.passed(), "{report}");
        assert_eq!(report.check("order_G").unwrap().detail, "expected 63, observed 63");
        assert_eq!(report.check("order_B").unwrap().detail, "expected 63, observed 63");
        assert_eq!(report.check("abelianization_G").unwrap().status, CheckStatus::Pass);
    }

    #[test]
    fn infinite_skip_path() {
        let report = cross_verify(&pm(3, 2, -3, 1, 1), &VerifyConfig::default());
        assert!(report.passed(), "{report}");
        assert_eq!(report.check("order_G").unwrap().status, CheckStatus::Skipped);
        let torsion = report.check("torsion").unwrap();
        assert_eq!(torsion.status, CheckStatus::Skipped);
        assert!(torsion.detail.contains("InfiniteDihedral"));
    }

    #[test]
    fn free_product_abelianization() {
        // (n,A) = 3, (n,A,f) = 1: G = Ḡ * F_2.
        let report = cross_verify(&pm(2, 12, -1, 4, 3), &VerifyConfig::default());
        assert!(report.passed(), "{report}");
        assert_eq!(report.check("abelianization_G").unwrap().status, CheckStatus::Pass);
    }

    #[test]
    fn direct_sums() {
        let z = |v: &[i64], f: usize| SnfResult {
            invariant_factors: v.iter().map(|&x| BigInt::from(x)).collect(),
            free_rank: f,
        };
        assert_eq!(direct_sum(&[z(&[2], 0), z(&[3], 1)]), z(&[6], 1));
        assert_eq!(direct_sum(&[z(&[2], 0), z(&[2], 0)]), z(&[2, 2], 0));
    }

    #[test]
    fn families_and_gnkl() {
        let cfg = VerifyConfig::default();
        let r = verify_family(&Family::F { r: 3, n: 2, k: 1 }, &cfg);
        assert!(r.passed(), "{r}");
        assert_eq!(r.check("family_order_G").unwrap().detail, "expected 8, observed 8");
        let r = verify_family(&Family::R { r: 2, n: 3, k: 1, h: 3 }, &cfg);
        assert!(r.passed(), "{r}");
        for (n, k, l) in [(6, 2, 5), (12, 4, 11), (5, 0, 1), (9, 3, 7)] {
            let r = verify_gnkl(&GnklParams::new(n, k, l).unwrap(), &cfg);
            assert!(r.passed(), "{r}");
        }
    }
}
