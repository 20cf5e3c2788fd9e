//! Deciding whether either criterion proves `k(G)` not retract rational.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exact::FieldDescriptor;
use crate::galois::{bailey_group, is_cyclic_ext};
use crate::groups::{abelian_invariants, build_group, is_generalized_quaternion16, two_sylow, GroupSpec};
use crate::localfields::DiagonalForm;
use crate::quadforms::{isotropic_over, IsotropyOutcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Criterion {
    /// `G ↠ C_{2ⁿ}`, `n ≥ 3`, with `k(ζ_{2ⁿ})/k` not cyclic.
    CyclicTwoPowerQuotient,
    /// 2-Sylow `≅ Q₁₆` with `3⟨1⟩⊥⟨−7⟩` and `8⟨1⟩` anisotropic over `k`.
    QuaternionSylow,
}

impl Criterion {
    pub fn tag(self) -> &'static str {
        match self {
            Criterion::CyclicTwoPowerQuotient => "1.2",
            Criterion::QuaternionSylow => "1.5",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Witness {
    /// Least `n ≥ 3` that works, and the largest `d₁` with `G ↠ C_{2^{d₁}}`.
    CyclicQuotient { n: u32, d1: u32 },
    QuaternionSylow {
        sylow_order: usize,
        three_ones_minus_seven_anisotropic: bool,
        eight_ones_anisotropic: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    NotRetractRational { criterion: Criterion, witness: Witness },
    Inconclusive { reasons: Vec<String> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckResult {
    Yes,
    No,
    Unsupported,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckResult::Yes => "yes",
            CheckResult::No => "no",
            CheckResult::Unsupported => "unsupported",
        })
    }
}

/// One hypothesis as evaluated; `detail` carries the reason for
/// `Unsupported`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub result: CheckResult,
    pub detail: String,
}

impl Check {
    fn new(name: &str, yes: bool, detail: String) -> Self {
        let result = if yes { CheckResult::Yes } else { CheckResult::No };
        Check { name: name.to_string(), result, detail }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub group: GroupSpec,
    pub field: FieldDescriptor,
    pub order: usize,
    /// Invariant factors of `G^{ab}`, largest first.
    pub abelian_invariants: Vec<u64>,
    pub sylow2_order: usize,
    pub sylow2_is_q16: bool,
    pub bailey_e: u32,
    pub outcome: Outcome,
    pub checks: Vec<Check>,
}

impl Verdict {
    pub fn is_decided(&self) -> bool {
        matches!(self.outcome, Outcome::NotRetractRational { .. })
    }

    pub fn criterion(&self) -> Option<Criterion> {
        match self.outcome {
            Outcome::NotRetractRational { criterion, .. } => Some(criterion),
            Outcome::Inconclusive { .. } => None,
        }
    }

    pub fn reasons(&self) -> &[String] {
        match &self.outcome {
            Outcome::Inconclusive { reasons } => reasons,
            Outcome::NotRetractRational { .. } => &[],
        }
    }
}

/// 2-adic valuations of the even invariant factors, largest first.
fn two_exponents(invariants: &[u64]) -> Vec<u32> {
    invariants.iter().map(|n| n.trailing_zeros()).filter(|&d| d > 0).collect()
}

fn form_check(name: &str, outcome: &IsotropyOutcome) -> Check {
    match outcome {
        IsotropyOutcome::Anisotropic => Check::new(name, true, "anisotropic".into()),
        IsotropyOutcome::Isotropic => Check::new(name, false, "isotropic".into()),
        IsotropyOutcome::Unsupported(why) => Check {
            name: name.to_string(),
            result: CheckResult::Unsupported,
            detail: why.clone(),
        },
    }
}

pub fn verdict(spec: &GroupSpec, k: &FieldDescriptor) -> Result<Verdict> {
    let g = build_group(spec)?;
    let invariants = abelian_invariants(&g);
    let dvec = two_exponents(&invariants);
    let d1 = dvec.first().copied().unwrap_or(0);
    let bailey_e = bailey_group(k, &dvec)?.e;
    let mut checks = Vec::new();
    let mut reasons = Vec::new();

    checks.push(Check::new(
        "cyclic 2-power quotient of order >= 8",
        d1 >= 3,
        format!("largest cyclic 2-power quotient C_{}", 1u64 << d1),
    ));
    let mut cyclic_witness = None;
    if d1 >= 3 {
        let non_cyclic = !is_cyclic_ext(k, d1)?;
        checks.push(Check::new(
            "cyclotomic extension non-cyclic",
            non_cyclic,
            format!("{k}(zeta_{})/{k} at n = {d1}", 1u64 << d1),
        ));
        if non_cyclic {
            let mut n = 3;
            while is_cyclic_ext(k, n)? {
                n += 1;
            }
            cyclic_witness = Some(Witness::CyclicQuotient { n, d1 });
        } else {
            reasons.push(format!("cyclotomic extension cyclic: {k}(zeta_{})/{k}", 1u64 << d1));
        }
    } else {
        reasons.push(format!("no cyclic quotient of order 2^n with n >= 3 (largest is 2^{d1})"));
    }

    let p = two_sylow(&g);
    let q16 = is_generalized_quaternion16(&p);
    checks.push(Check::new("2-Sylow is Q16", q16, format!("2-Sylow order {}", p.order())));
    if !q16 {
        reasons.push(format!("2-Sylow subgroup is not Q16 (order {})", p.order()));
    }

    let three_ones = DiagonalForm::from_ints(&[1, 1, 1, -7])?;
    let eight_ones = DiagonalForm::ones(8);
    let forms = [
        ("3⟨1⟩⊥⟨−7⟩", isotropic_over(&three_ones, k)?),
        ("8⟨1⟩", isotropic_over(&eight_ones, k)?),
    ];
    for (name, outcome) in &forms {
        checks.push(form_check(&format!("{name} anisotropic"), outcome));
        match outcome {
            IsotropyOutcome::Anisotropic => {}
            IsotropyOutcome::Isotropic => reasons.push(format!("{name} isotropic over {k}")),
            IsotropyOutcome::Unsupported(why) => reasons.push(format!("{name} undecided over {k}: {why}")),
        }
    }
    let anisotropic = |o: &IsotropyOutcome| *o == IsotropyOutcome::Anisotropic;

    let outcome = if let Some(witness) = cyclic_witness {
        Outcome::NotRetractRational { criterion: Criterion::CyclicTwoPowerQuotient, witness }
    } else if q16 && forms.iter().all(|(_, o)| anisotropic(o)) {
        Outcome::NotRetractRational {
            criterion: Criterion::QuaternionSylow,
            witness: Witness::QuaternionSylow {
                sylow_order: p.order(),
                three_ones_minus_seven_anisotropic: true,
                eight_ones_anisotropic: true,
            },
        }
    } else {
        Outcome::Inconclusive { reasons }
    };

    Ok(Verdict {
        group: spec.clone(),
        field: k.clone(),
        order: g.order(),
        abelian_invariants: invariants,
        sylow2_order: p.order(),
        sylow2_is_q16: q16,
        bailey_e,
        outcome,
        checks,
    })
}
