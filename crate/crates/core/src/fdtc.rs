//! Trichotomy for positive braids containing a full twist: either the
//! remainder after one full twist uses every generator, or the braid is a
//! regular form whose exterior is a pure full twist.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::braid::BraidWord;
use crate::curves::RoundBlockPartition;
use crate::error::{BraidError, Result};
use crate::garside::{full_twist_count, normal_form, simple, GarsideNormalForm};
use crate::reduction::{extract_regular_form, find_round_reduction, RegularForm, RoundReduction};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum FdtcVerdict {
    /// Coefficient strictly above one.
    #[serde(rename = "gt1")]
    GreaterThanOne,
    /// Coefficient exactly one. `blocks` are the consecutive runs cut at the
    /// generators missing from the remainder; they may all be singletons.
    #[serde(rename = "eq1")]
    EqualOne { blocks: Vec<usize> },
}

impl FdtcVerdict {
    /// The round partition of an `EqualOne` verdict, when it is essential.
    pub fn partition(&self) -> Option<RoundBlockPartition> {
        match self {
            FdtcVerdict::GreaterThanOne => None,
            FdtcVerdict::EqualOne { blocks } => RoundBlockPartition::new(blocks.clone()).ok(),
        }
    }
}

/// Generators (1-based) of the positive element `nf`.
fn element_support(nf: &GarsideNormalForm) -> BTreeSet<usize> {
    if nf.delta_power() >= 1 {
        return (1..nf.strands()).collect();
    }
    nf.factors().iter().flat_map(simple::support).collect()
}

/// Classifies `w = Δ²·α` by the generators occurring in `α`.
pub fn classify_fdtc(w: &BraidWord) -> Result<FdtcVerdict> {
    let n = w.strands();
    if n < 2 || !w.is_positive() || full_twist_count(w).count < 1 {
        return Err(BraidError::precondition(
            "need a positive braid on at least two strands containing a full twist",
        ));
    }
    let nf = normal_form(w);
    let alpha = GarsideNormalForm::from_parts(n, nf.delta_power() - 2, nf.factors().to_vec());
    let support = element_support(&alpha);
    if support.len() == n - 1 {
        return Ok(FdtcVerdict::GreaterThanOne);
    }
    let mut blocks = Vec::new();
    let mut start = 0;
    for i in (1..n).filter(|i| !support.contains(i)) {
        blocks.push(i - start);
        start = i;
    }
    blocks.push(n - start);
    Ok(FdtcVerdict::EqualOne { blocks })
}

#[derive(Debug, Clone, Serialize)]
pub struct CompatibleAnalysis {
    pub verdict: FdtcVerdict,
    /// Regular form read off the `EqualOne` partition of the braid itself.
    pub verdict_form: Option<RegularForm>,
    pub reduction: Option<RoundReduction>,
    /// Regular form of the reduction's representative, with its conjugator.
    pub regular_form: Option<RegularForm>,
    pub regular_form_conjugator: Option<BraidWord>,
}

/// Classifier plus the round-reduction search.
pub fn compatible_analysis(w: &BraidWord, budget: usize) -> Result<CompatibleAnalysis> {
    let verdict = classify_fdtc(w)?;
    let verdict_form = match verdict.partition() {
        Some(p) => Some(extract_regular_form(w, &p)?.0),
        None => None,
    };
    let reduction = find_round_reduction(w, budget)?;
    let (regular_form, regular_form_conjugator) = match &reduction {
        Some(r) => {
            let (form, a) = extract_regular_form(&r.representative.to_word(), &r.partition)?;
            let total = normal_form(&r.conjugator.concat(&a)?).to_word();
            (Some(form), Some(total))
        }
        None => (None, None),
    };
    Ok(CompatibleAnalysis { verdict, verdict_form, reduction, regular_form, regular_form_conjugator })
}
