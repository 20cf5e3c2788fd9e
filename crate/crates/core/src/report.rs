//! Serializable summary of a verdict.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::verdict::{Check, Outcome, Verdict, Witness};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sylow2Summary {
    pub order: usize,
    pub q16: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub spec: String,
    pub order: usize,
    pub abelian_invariants: Vec<u64>,
    pub sylow2: Sylow2Summary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ReportWitness {
    CyclicQuotient { n: u32, d1: u32 },
    QuaternionSylow { sylow_order: usize, anisotropic_3_1_minus_7: bool, anisotropic_8_1: bool },
    Reasons { reasons: Vec<String> },
}

/// Field order is the JSON key order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub group: GroupSummary,
    pub field: String,
    /// `"not_retract_rational"` or `"inconclusive"`.
    pub verdict: String,
    /// `"1.2"` or `"1.5"` when decided.
    pub theorem: Option<String>,
    pub witness: ReportWitness,
    pub checks: Vec<Check>,
    pub bailey_e: u32,
}

impl Report {
    pub fn is_decided(&self) -> bool {
        self.verdict == "not_retract_rational"
    }
}

impl From<&Verdict> for Report {
    fn from(v: &Verdict) -> Self {
        let (verdict, theorem, witness) = match &v.outcome {
            Outcome::NotRetractRational { criterion, witness } => {
                let w = match *witness {
                    Witness::CyclicQuotient { n, d1 } => ReportWitness::CyclicQuotient { n, d1 },
                    Witness::QuaternionSylow {
                        sylow_order,
                        three_ones_minus_seven_anisotropic,
                        eight_ones_anisotropic,
                    } => ReportWitness::QuaternionSylow {
                        sylow_order,
                        anisotropic_3_1_minus_7: three_ones_minus_seven_anisotropic,
                        anisotropic_8_1: eight_ones_anisotropic,
                    },
                };
                ("not_retract_rational", Some(criterion.tag().to_string()), w)
            }
            Outcome::Inconclusive { reasons } => {
                ("inconclusive", None, ReportWitness::Reasons { reasons: reasons.clone() })
            }
        };
        Report {
            group: GroupSummary {
                spec: v.group.to_string(),
                order: v.order,
                abelian_invariants: v.abelian_invariants.clone(),
                sylow2: Sylow2Summary { order: v.sylow2_order, q16: v.sylow2_is_q16 },
            },
            field: v.field.to_string(),
            verdict: verdict.to_string(),
            theorem,
            witness,
            checks: v.checks.clone(),
            bailey_e: v.bailey_e,
        }
    }
}

fn list(xs: &[u64]) -> String {
    let parts: Vec<String> = xs.iter().map(u64::to_string).collect();
    format!("({})", parts.join(", "))
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "group     {}", self.group.spec)?;
        writeln!(f, "order     {}", self.group.order)?;
        writeln!(f, "G^ab      {}", list(&self.group.abelian_invariants))?;
        writeln!(
            f,
            "2-Sylow   order {}, Q16 = {}",
            self.group.sylow2.order,
            if self.group.sylow2.q16 { "yes" } else { "no" }
        )?;
        writeln!(f, "field     {}", self.field)?;
        writeln!(f, "bailey_e  {}", self.bailey_e)?;
        writeln!(f, "checks")?;
        for c in &self.checks {
            writeln!(f, "  [{:<11}] {}: {}", c.result.to_string(), c.name, c.detail)?;
        }
        match (&self.theorem, &self.witness) {
            (Some(t), ReportWitness::CyclicQuotient { n, d1 }) => {
                write!(f, "verdict   not retract rational (theorem {t}, n = {n}, d1 = {d1})")
            }
            (Some(t), _) => write!(f, "verdict   not retract rational (theorem {t})"),
            (None, ReportWitness::Reasons { reasons }) => {
                write!(f, "verdict   inconclusive")?;
                for r in reasons {
                    write!(f, "\n  - {r}")?;
                }
                Ok(())
            }
            (None, _) => write!(f, "verdict   inconclusive"),
        }
    }
}
