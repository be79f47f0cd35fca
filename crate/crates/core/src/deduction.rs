//! Certifies derived relators by order equality: `extra` is a consequence of
//! `p` exactly when adding it does not shrink the (finite) group.

use serde::{Deserialize, Serialize};

use crate::enumeration::{order, EnumerationOptions, EnumerationResult};
use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::presentation::{star_presentation, Presentation, Stage};
use crate::symverify::{evaluate, GeneratorAssignment};
use crate::words::{commutator, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Consequence,
    NotConsequence,
    /// An enumeration hit the coset limit.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeductionReport {
    pub relator: Word,
    pub verdict: Verdict,
    pub base_order: Option<u64>,
    pub extended_order: Option<u64>,
    /// The relator holds under the transposition assignment.
    pub holds_in_sn: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub n: u32,
    pub base_order: Option<u64>,
    pub reports: Vec<DeductionReport>,
}

impl SuiteReport {
    pub fn all_consequences(&self) -> bool {
        !self.reports.is_empty() && self.reports.iter().all(|r| r.verdict == Verdict::Consequence)
    }
}

fn verdict(base: &EnumerationResult, extended: &EnumerationResult) -> Verdict {
    match (base.index, extended.index) {
        (Some(a), Some(b)) if a == b => Verdict::Consequence,
        (Some(_), Some(_)) => Verdict::NotConsequence,
        _ => Verdict::Inconclusive,
    }
}

fn holds_in_sn(p: &Presentation, extra: &Word) -> Result<bool> {
    let a = GeneratorAssignment::for_presentation(p)?;
    Ok(evaluate(extra, &a)?.is_identity())
}

fn report(
    p: &Presentation,
    extra: &Word,
    base: &EnumerationResult,
    options: EnumerationOptions,
) -> Result<DeductionReport> {
    let extended = order(&p.with_relator(extra.clone())?, options)?;
    Ok(DeductionReport {
        relator: extra.clone(),
        verdict: verdict(base, &extended),
        base_order: base.index,
        extended_order: extended.index,
        holds_in_sn: holds_in_sn(p, extra)?,
    })
}

/// Decides whether `extra = e` follows from the relators of `p`, running the
/// two enumerations side by side.
pub fn is_consequence(p: &Presentation, extra: &Word, options: EnumerationOptions) -> Result<DeductionReport> {
    is_consequence_with(p, extra, options, Execution::default())
}

pub fn is_consequence_with(
    p: &Presentation,
    extra: &Word,
    options: EnumerationOptions,
    exec: Execution,
) -> Result<DeductionReport> {
    p.expect_stage(&[Stage::Star, Stage::Coxeter])?;
    let extended_p = p.with_relator(extra.clone())?;
    let (base, extended) = par::join(exec, || order(p, options), || order(&extended_p, options));
    let (base, extended) = (base?, extended?);
    Ok(DeductionReport {
        relator: extra.clone(),
        verdict: verdict(&base, &extended),
        base_order: base.index,
        extended_order: extended.index,
        holds_in_sn: holds_in_sn(p, extra)?,
    })
}

/// The relators derived by hand at degree `n`: `[5, j]` for `8 ≤ j ≤ n−1`,
/// then `[2,4], [2,5], [4,5], [4,7], [5,7]`.
pub fn derived_relators(n: u32) -> Result<Vec<Word>> {
    if n < 8 {
        return Err(Error::UnsupportedDegree {
            n,
            reason: "derived relators are stated for the staged presentations, n >= 8".into(),
        });
    }
    let pairs = (8..n)
        .map(|j| (5, j))
        .chain([(2, 4), (2, 5), (4, 5), (4, 7), (5, 7)]);
    Ok(pairs
        .map(|(a, b)| commutator(&Word::gen(a), &Word::gen(b)))
        .collect())
}

/// Checks every derived relator against `G^n_*`. The base order is computed
/// once; the extended enumerations run in parallel.
pub fn deduction_suite(n: u32, options: EnumerationOptions) -> Result<SuiteReport> {
    deduction_suite_with(n, options, Execution::default())
}

pub fn deduction_suite_with(n: u32, options: EnumerationOptions, exec: Execution) -> Result<SuiteReport> {
    let extras = derived_relators(n)?;
    let p = star_presentation(n)?;
    let base = order(&p, options)?;
    let reports = par::map(exec, &extras, |w| report(&p, w, &base, options))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    Ok(SuiteReport {
        n,
        base_order: base.index,
        reports,
    })
}
