//! The isomorphism certificate `G^n_* ≅ S_n`: a surjection onto `S_n` (every
//! relator holds under the transposition assignment, and the images
//! generate) together with an enumerated order equal to `n!`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::enumeration::{order, EnumerationOptions, EnumerationResult, Status};
use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::presentation::{coxeter_presentation, star_presentation, Presentation};
use crate::symverify::{check_homomorphism, GeneratorAssignment};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Hom,
    Order,
    #[default]
    Full,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "hom" => Ok(Method::Hom),
            "order" => Ok(Method::Order),
            "full" => Ok(Method::Full),
            other => Err(Error::Token(other.to_string())),
        }
    }
}

/// Which presentation stands in for `G^n_*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    /// The staged presentation, `n ≥ 8`.
    Star,
    /// The Coxeter presentation, used for `n = 6, 7` where no staged
    /// presentation exists.
    Coxeter,
}

pub fn verification_presentation(n: u32) -> Result<(Presentation, Source)> {
    match n {
        0..=5 => Err(Error::UnsupportedDegree {
            n,
            reason: "verification needs n >= 6".into(),
        }),
        6 | 7 => Ok((coxeter_presentation(n)?, Source::Coxeter)),
        _ => Ok((star_presentation(n)?, Source::Star)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Outcome {
    /// Every requested check passed.
    Passed,
    Refuted,
    Inconclusive,
}

impl Outcome {
    /// `0` passed, `1` refuted, `2` inconclusive.
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Passed => 0,
            Outcome::Refuted => 1,
            Outcome::Inconclusive => 2,
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Passed => "PASSED",
            Outcome::Refuted => "REFUTED",
            Outcome::Inconclusive => "INCONCLUSIVE",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomSummary {
    pub relators: usize,
    pub passed: usize,
    pub onto: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub n: u32,
    pub method: Method,
    pub presentation: Source,
    pub hom_check: Option<HomSummary>,
    pub status: Option<Status>,
    pub order: Option<u64>,
    pub n_factorial: u64,
    #[serde(rename = "match")]
    pub order_matches: Option<bool>,
    /// Surjection and order equality both established.
    pub certified: bool,
    pub outcome: Outcome,
    pub enumeration: Option<EnumerationResult>,
}

/// Runs the checks selected by `method` on the degree-`n` presentation.
pub fn verify(n: u32, method: Method, options: EnumerationOptions) -> Result<Certificate> {
    if n > 20 {
        return Err(Error::UnsupportedDegree {
            n,
            reason: "n! must fit in 64 bits".into(),
        });
    }
    let (p, source) = verification_presentation(n)?;
    let n_factorial: u64 = (1..=n as u64).product();

    let hom_check = if method != Method::Order {
        let a = GeneratorAssignment::for_presentation(&p)?;
        let r = check_homomorphism(&p, &a)?;
        let passed = r.checks.iter().filter(|c| c.pass).count();
        Some(HomSummary {
            relators: r.checks.len(),
            passed,
            onto: r.onto,
            pass: r.surjective_homomorphism(),
        })
    } else {
        None
    };
    let hom_ok = hom_check.as_ref().is_none_or(|h| h.pass);

    let enumeration = if method != Method::Hom && hom_ok {
        Some(order(&p, options)?)
    } else {
        None
    };
    let order_value = enumeration.as_ref().and_then(|e| e.index);
    let order_matches = order_value.map(|o| o == n_factorial);

    let outcome = if !hom_ok || order_matches == Some(false) {
        Outcome::Refuted
    } else if enumeration.as_ref().is_some_and(|e| !e.completed()) {
        Outcome::Inconclusive
    } else {
        Outcome::Passed
    };
    let certified = method == Method::Full && outcome == Outcome::Passed;

    Ok(Certificate {
        n,
        method,
        presentation: source,
        hom_check,
        status: enumeration.as_ref().map(|e| e.status),
        order: order_value,
        n_factorial,
        order_matches,
        certified,
        outcome,
        enumeration,
    })
}

/// Verifies several degrees, in parallel when enabled.
pub fn verify_many(ns: &[u32], method: Method, options: EnumerationOptions, exec: Execution) -> Result<Vec<Certificate>> {
    par::map(exec, ns, |&n| verify(n, method, options))
        .into_iter()
        .collect()
}

/// The worst outcome: refuted beats inconclusive beats passed.
pub fn combined_outcome(certs: &[Certificate]) -> Outcome {
    if certs.iter().any(|c| c.outcome == Outcome::Refuted) {
        Outcome::Refuted
    } else if certs.iter().any(|c| c.outcome == Outcome::Inconclusive) {
        Outcome::Inconclusive
    } else {
        Outcome::Passed
    }
}
