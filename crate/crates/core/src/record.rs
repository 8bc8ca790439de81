//! Catalog records: one classification per parameter tuple.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::classify::{classify, derive, CertifiedFlags, DerivedParams, Kind, ParamsM, Tits, Torsion};
use crate::metastruct::{gbar_params, m_group_params, FreeProductDecomposition, MGroupStructure};
use crate::oracle::verify::{cross_verify, g_presentation, CheckStatus, VerifyConfig};
use crate::serde_util;
use crate::words::{e_presentation, type_m_word};

/// Digits of `μ` above which a record carries a warning.
pub const DEFAULT_DIGIT_BUDGET: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordOptions {
    pub digit_budget: usize,
    /// Run the oracles when set.
    pub verify: Option<VerifyConfig>,
}

impl Default for RecordOptions {
    fn default() -> Self {
        RecordOptions {
            digit_budget: DEFAULT_DIGIT_BUDGET,
            verify: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orders {
    #[serde(with = "serde_util::big")]
    pub order_g: BigInt,
    #[serde(with = "serde_util::big")]
    pub order_e: BigInt,
    pub trivial_e: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EqualPowers {
    pub gamma_free_rank: Option<i64>,
    pub two_dimensional: bool,
    pub torsion: Torsion,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationSummary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub params: ParamsM,
    pub derived: DerivedParams,
    pub word: String,
    pub presentation_g: String,
    pub presentation_e: String,
    pub kind: Option<String>,
    pub reason: Option<String>,
    pub orders: Option<Orders>,
    pub equal_powers: Option<EqualPowers>,
    #[serde(rename = "euler_E")]
    pub euler_e: Option<String>,
    #[serde(rename = "euler_G")]
    pub euler_g: Option<String>,
    pub tits: Option<Tits>,
    pub flags: Option<CertifiedFlags>,
    pub m_group: Option<MGroupStructure>,
    pub decomposition: Option<FreeProductDecomposition>,
    pub verification: Option<VerificationSummary>,
    pub fault: Option<String>,
    pub warnings: Vec<String>,
}

impl Record {
    pub fn build(p: &ParamsM, opts: &RecordOptions) -> Record {
        let derived = derive(p);
        let word = type_m_word(p);
        let g_pres = g_presentation(p);
        let mut warnings = Vec::new();
        let digits = derived.mu.to_string().trim_start_matches('-').len();
        if digits > opts.digit_budget {
            warnings.push(format!("μ has {digits} digits, above the budget of {}", opts.digit_budget));
        }
        if word.is_identity() {
            warnings.push(format!("w is trivial: G is free of rank {}", p.n()));
        } else if g_pres.degenerate_relators() > 0 {
            warnings.push(format!("{} degenerate relators in G_n(w)", g_pres.degenerate_relators()));
        }
        let mut rec = Record {
            params: *p,
            word: word.to_string(),
            presentation_g: g_pres.to_string(),
            presentation_e: e_presentation(p.r(), p.n(), p.s(), p.a()).to_string(),
            derived,
            kind: None,
            reason: None,
            orders: None,
            equal_powers: None,
            euler_e: None,
            euler_g: None,
            tits: None,
            flags: None,
            m_group: None,
            decomposition: None,
            verification: None,
            fault: None,
            warnings,
        };
        let c = match classify(p) {
            Ok(c) => c,
            Err(e) => {
                rec.fault = Some(e.to_string());
                return rec;
            }
        };
        rec.kind = Some(c.kind.name().to_string());
        rec.reason = Some(c.reason.clone());
        match &c.kind {
            Kind::Finite {
                order_g,
                order_e,
                trivial_e,
            } => {
                rec.orders = Some(Orders {
                    order_g: order_g.clone(),
                    order_e: order_e.clone(),
                    trivial_e: *trivial_e,
                });
            }
            Kind::EqualPowers {
                gamma_free_rank,
                two_dimensional,
                torsion,
            } => {
                rec.equal_powers = Some(EqualPowers {
                    gamma_free_rank: *gamma_free_rank,
                    two_dimensional: *two_dimensional,
                    torsion: *torsion,
                });
            }
            _ => {}
        }
        rec.euler_e = Some(serde_util::rational_to_string(&c.euler_e));
        rec.euler_g = Some(serde_util::rational_to_string(&c.euler_g));
        rec.tits = Some(c.tits);
        rec.flags = Some(c.certified_flags);
        if rec.derived.g != 0 {
            match m_group_params(p) {
                Ok(m) => rec.m_group = Some(m),
                Err(e) => rec.fault = Some(e.to_string()),
            }
        }
        if rec.derived.g == 1 && rec.derived.mu != BigInt::from(0) {
            match gbar_params(p) {
                Ok(d) => rec.decomposition = Some(d),
                Err(e) => rec.fault = Some(e.to_string()),
            }
        }
        if let Some(cfg) = &opts.verify {
            let report = cross_verify(p, cfg);
            rec.verification = Some(VerificationSummary {
                passed: report.count(CheckStatus::Pass),
                failed: report.count(CheckStatus::Fail),
                skipped: report.count(CheckStatus::Skipped),
                failures: report
                    .checks
                    .iter()
                    .filter(|c| c.status == CheckStatus::Fail)
                    .map(|c| format!("{}: {}", c.name, c.detail))
                    .collect(),
            });
        }
        rec
    }

    pub fn csv_row(&self) -> CsvRow {
        let p = &self.params;
        CsvRow {
            n: p.n(),
            r: p.r(),
            s: p.s(),
            f: p.f(),
            a: p.a(),
            mu: self.derived.mu.to_string(),
            kind: self.kind.clone().unwrap_or_default(),
            order_g: self.orders.as_ref().map(|o| o.order_g.to_string()).unwrap_or_default(),
            order_e: self.orders.as_ref().map(|o| o.order_e.to_string()).unwrap_or_default(),
            euler_e: self.euler_e.clone().unwrap_or_default(),
            euler_g: self.euler_g.clone().unwrap_or_default(),
            tits: self.tits.map(|t| format!("{t:?}")).unwrap_or_default(),
            m_group: match &self.m_group {
                Some(MGroupStructure::Finite { params }) => params.to_string(),
                Some(other) => format!("{other:?}"),
                None => String::new(),
            },
            decomposition: self
                .decomposition
                .as_ref()
                .map(|d| format!("{} x {} + F_{}", d.copies, d.factor, d.free_rank))
                .unwrap_or_default(),
            verified: self
                .verification
                .as_ref()
                .map(|v| format!("{}/{}/{}", v.passed, v.failed, v.skipped))
                .unwrap_or_default(),
            fault: self.fault.clone().unwrap_or_default(),
            warnings: self.warnings.join("; "),
        }
    }
}

/// Flat sweep row; `verified` is `passed/failed/skipped`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CsvRow {
    pub n: i64,
    pub r: i64,
    pub s: i64,
    pub f: i64,
    #[serde(rename = "A")]
    pub a: i64,
    pub mu: String,
    pub kind: String,
    pub order_g: String,
    pub order_e: String,
    #[serde(rename = "euler_E")]
    pub euler_e: String,
    #[serde(rename = "euler_G")]
    pub euler_g: String,
    pub tits: String,
    pub m_group: String,
    pub decomposition: String,
    pub verified: String,
    pub fault: String,
    pub warnings: String,
}
