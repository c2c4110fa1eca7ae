use std::fmt;

use serde::Serialize;

use crate::construct::phase::{validate_rule, PhaseRule};
use crate::construct::product::{product3, IndexConvention};
use crate::error::{QuandleError, Result};
use crate::properties::{
    alexander_recognize, is_abelian, is_connected, is_group_conjugation, is_involutory,
    is_left_distributive,
};
use crate::table::Quandle;

/// Properties the order-3n constructions claim to transfer in both
/// directions between the base and the product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TransferProperty {
    Involutory,
    Conjugation,
    LeftDistributive,
    Abelian,
    Alexander,
    Connected,
}

impl TransferProperty {
    pub const ALL: [TransferProperty; 6] = [
        TransferProperty::Involutory,
        TransferProperty::Conjugation,
        TransferProperty::LeftDistributive,
        TransferProperty::Abelian,
        TransferProperty::Alexander,
        TransferProperty::Connected,
    ];

    /// `None` when the decision procedure is over its order budget.
    fn evaluate(self, q: &Quandle) -> Option<bool> {
        match self {
            TransferProperty::Involutory => Some(is_involutory(q)),
            TransferProperty::Conjugation => is_group_conjugation(q).ok(),
            TransferProperty::LeftDistributive => Some(is_left_distributive(q)),
            TransferProperty::Abelian => Some(is_abelian(q)),
            TransferProperty::Alexander => alexander_recognize(q).ok().map(|w| w.is_some()),
            TransferProperty::Connected => Some(is_connected(q)),
        }
    }
}

impl fmt::Display for TransferProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TransferProperty::Involutory => "involutory",
            TransferProperty::Conjugation => "conjugation",
            TransferProperty::LeftDistributive => "left-distributive",
            TransferProperty::Abelian => "abelian",
            TransferProperty::Alexander => "alexander",
            TransferProperty::Connected => "connected",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransferRecord {
    pub property: TransferProperty,
    pub holds_on_base: Option<bool>,
    pub holds_on_product: Option<bool>,
    /// The claimed relation, always `base iff product`.
    pub claim: &'static str,
    /// `Some(base == product)` when both sides were decided.
    pub agrees: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransferReport {
    pub base: String,
    pub rule: String,
    pub records: Vec<TransferRecord>,
}

impl TransferReport {
    pub fn record(&self, property: TransferProperty) -> &TransferRecord {
        self.records
            .iter()
            .find(|r| r.property == property)
            .expect("every property is recorded")
    }

    pub fn disagreements(&self) -> Vec<TransferProperty> {
        self.records
            .iter()
            .filter(|r| r.agrees == Some(false))
            .map(|r| r.property)
            .collect()
    }
}

impl fmt::Display for TransferReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn show(v: Option<bool>) -> &'static str {
            match v {
                Some(true) => "yes",
                Some(false) => "no",
                None => "unknown",
            }
        }
        writeln!(f, "base: {}  rule: {}", self.base, self.rule)?;
        for r in &self.records {
            let verdict = match r.agrees {
                Some(true) => "agrees",
                Some(false) => "DISAGREES",
                None => "undecided",
            };
            writeln!(
                f,
                "{:<18} base={:<7} product={:<7} {}",
                r.property.to_string(),
                show(r.holds_on_base),
                show(r.holds_on_product),
                verdict
            )?;
        }
        Ok(())
    }
}

/// Evaluates each transferred property on `base` and on
/// `product3(base, rule, xa)` and records agreement with the iff-claims.
pub fn audit_transfer(base: &Quandle, rule: &PhaseRule) -> Result<TransferReport> {
    let report = validate_rule(rule);
    if !report.overall {
        return Err(QuandleError::NotAQuandle(Box::new(report)));
    }
    let product = Quandle::new(product3(base, rule, IndexConvention::Xa).table)?;
    let records = TransferProperty::ALL
        .iter()
        .map(|&property| {
            let holds_on_base = property.evaluate(base);
            let holds_on_product = property.evaluate(&product);
            let agrees = match (holds_on_base, holds_on_product) {
                (Some(a), Some(b)) => Some(a == b),
                _ => None,
            };
            TransferRecord {
                property,
                holds_on_base,
                holds_on_product,
                claim: "iff",
                agrees,
            }
        })
        .collect();
    Ok(TransferReport {
        base: base.name().unwrap_or("base").to_string(),
        rule: rule.name().to_string(),
        records,
    })
}
