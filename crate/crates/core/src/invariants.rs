//! Branch-curve numerics, Chern numbers of the Galois cover, the dual-curve
//! system, and the existence bound. Exact arithmetic throughout.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::par::{self, Execution};

fn as_string<T: fmt::Display, S: Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub fn factorial(n: u32) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn integral(q: BigRational, what: &str) -> Result<BigInt> {
    if q.is_integer() {
        Ok(q.to_integer())
    } else {
        Err(Error::NonIntegral(format!("{what} = {q}")))
    }
}

/// Degree, nodes and cusps of a plane curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PlaneCurve {
    pub degree: i64,
    pub nodes: i64,
    pub cusps: i64,
}

impl PlaneCurve {
    pub fn new(degree: i64, nodes: i64, cusps: i64) -> Self {
        PlaneCurve {
            degree,
            nodes,
            cusps,
        }
    }

    /// `(m−1)(m−2)/2 − d − ρ`.
    pub fn genus(&self) -> i64 {
        (self.degree - 1) * (self.degree - 2) / 2 - self.nodes - self.cusps
    }
}

/// The branch curve of the degree-`n` surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CurveData {
    pub n: u32,
    pub m: i64,
    pub d: i64,
    pub rho: i64,
    pub g: i64,
}

impl CurveData {
    pub fn curve(&self) -> PlaneCurve {
        PlaneCurve::new(self.m, self.d, self.rho)
    }
}

impl From<&CurveData> for PlaneCurve {
    fn from(c: &CurveData) -> Self {
        c.curve()
    }
}

/// `m = 2n`, `d = 2n² − 10n + 12`, `ρ = 6n − 12`, genus from the degree
/// formula.
pub fn curve_combinatorics(n: u32) -> Result<CurveData> {
    if n < 4 {
        return Err(Error::UnsupportedDegree {
            n,
            reason: "the E_n family starts at n = 4".into(),
        });
    }
    let k = n as i64;
    let m = 2 * k;
    let d = 2 * k * k - 10 * k + 12;
    let rho = 6 * k - 12;
    let g = PlaneCurve::new(m, d, rho).genus();
    debug_assert_eq!(g, k + 1);
    Ok(CurveData { n, m, d, rho, g })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GaloisInvariants {
    pub n: u32,
    #[serde(serialize_with = "as_string")]
    pub c1sq: BigInt,
    #[serde(serialize_with = "as_string")]
    pub c2: BigInt,
    #[serde(serialize_with = "as_string")]
    pub tau: BigInt,
    #[serde(serialize_with = "as_string")]
    pub c1sq_over_factorial: BigRational,
    #[serde(serialize_with = "as_string")]
    pub c2_over_factorial: BigRational,
    #[serde(serialize_with = "as_string")]
    pub tau_over_factorial: BigRational,
}

impl GaloisInvariants {
    fn from_parts(n: u32, c1sq: BigInt, c2: BigInt) -> Result<Self> {
        let three_tau = &c1sq - BigInt::from(2) * &c2;
        let tau = integral(BigRational::new(three_tau, BigInt::from(3)), "tau")?;
        let nf = factorial(n);
        let norm = |x: &BigInt| BigRational::new(x.clone(), nf.clone());
        Ok(GaloisInvariants {
            n,
            c1sq_over_factorial: norm(&c1sq),
            c2_over_factorial: norm(&c2),
            tau_over_factorial: norm(&tau),
            c1sq,
            c2,
            tau,
        })
    }

    /// `c₁² = n!(n−3)²`, `c₂ = n!(n²−7n+20)/2`, defined for every `n ≥ 1`.
    pub fn closed_form(n: u32) -> Result<Self> {
        let nf = factorial(n);
        let k = BigInt::from(n);
        let c1sq = &nf * (&k - 3) * (&k - 3);
        let c2 = integral(
            BigRational::new(&nf * (&k * &k - BigInt::from(7) * &k + 20), BigInt::from(2)),
            "c2",
        )?;
        GaloisInvariants::from_parts(n, c1sq, c2)
    }
}

/// `c₁² = n!/4 · (m−6)²` and `c₂ = n!(m²/2 − 3m/2 + 3 − 3d/4 − 4ρ/3)`.
pub fn chern(c: &CurveData) -> Result<GaloisInvariants> {
    let nf = BigRational::from_integer(factorial(c.n));
    let m = rat(c.m);
    let c1sq = &nf / rat(4) * (&m - rat(6)) * (&m - rat(6));
    let c2 = &nf
        * (&m * &m / rat(2) - rat(3) * &m / rat(2) + rat(3) - rat(3) * rat(c.d) / rat(4)
            - rat(4) * rat(c.rho) / rat(3));
    GaloisInvariants::from_parts(c.n, integral(c1sq, "c1^2")?, integral(c2, "c2")?)
}

/// Positive `c₁²`.
pub fn general_type_check(gi: &GaloisInvariants) -> bool {
    gi.c1sq.is_positive()
}

/// Degree and singularity counts of the dual curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DualCurveData {
    pub m_star: i64,
    pub dual_nodes: i64,
    pub dual_cusps: i64,
    /// Geometric genus, shared with the original curve.
    pub genus: i64,
}

impl DualCurveData {
    pub fn curve(&self) -> PlaneCurve {
        PlaneCurve::new(self.m_star, self.dual_nodes, self.dual_cusps)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.m_star >= 0 && self.dual_nodes >= 0 && self.dual_cusps >= 0
    }
}

/// Solves the classical Plücker system for the dual of `c`:
///
/// ```text
/// m*  = m(m−1) − 2d − 3ρ
/// g   = (m*−1)(m*−2)/2 − δ* − κ*
/// m   = m*(m*−1) − 2δ* − 3κ*
/// ```
///
/// The last two equations are unimodular in `(δ*, κ*)`, so the solution is
/// always integral; negative counts are returned as they are.
pub fn pluecker_dual(c: &PlaneCurve) -> DualCurveData {
    let g = c.genus();
    let m_star = c.degree * (c.degree - 1) - 2 * c.nodes - 3 * c.cusps;
    let a = (m_star - 1) * (m_star - 2) / 2 - g;
    let b = m_star * (m_star - 1) - c.degree;
    let dual_cusps = b - 2 * a;
    let dual_nodes = a - dual_cusps;
    DualCurveData {
        m_star,
        dual_nodes,
        dual_cusps,
        genus: g,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Existence {
    ExistsPossible,
    Nonexistent,
}

impl fmt::Display for Existence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Existence::ExistsPossible => "EXISTS_POSSIBLE",
            Existence::Nonexistent => "NONEXISTENT",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExistenceReport {
    pub n: u32,
    pub verdict: Existence,
    pub reason: Option<String>,
    pub curve: CurveData,
    pub dual: DualCurveData,
}

/// Every count of the branch curve and its dual must be a nonnegative
/// integer for the degeneration to exist.
pub fn existence_check(n: u32) -> Result<ExistenceReport> {
    let curve = curve_combinatorics(n)?;
    let dual = pluecker_dual(&curve.curve());
    let checks = [
        ("node count d", curve.d),
        ("cusp count rho", curve.rho),
        ("genus g", curve.g),
        ("dual degree m*", dual.m_star),
        ("dual node count", dual.dual_nodes),
        ("dual cusp count", dual.dual_cusps),
    ];
    let reason = checks
        .iter()
        .find(|(_, v)| *v < 0)
        .map(|(what, v)| format!("{what} = {v} < 0"));
    Ok(ExistenceReport {
        n,
        verdict: if reason.is_some() {
            Existence::Nonexistent
        } else {
            Existence::ExistsPossible
        },
        reason,
        curve,
        dual,
    })
}

/// Everything computed for one degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub n: u32,
    pub curve: CurveData,
    pub galois: GaloisInvariants,
    pub general_type: bool,
    pub dual: DualCurveData,
    pub existence: Existence,
    pub reason: Option<String>,
}

pub fn invariant_report(n: u32) -> Result<InvariantReport> {
    let curve = curve_combinatorics(n)?;
    let galois = chern(&curve)?;
    let ex = existence_check(n)?;
    Ok(InvariantReport {
        n,
        curve,
        general_type: general_type_check(&galois),
        galois,
        dual: ex.dual,
        existence: ex.verdict,
        reason: ex.reason,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableFormat {
    Markdown,
    Csv,
    Json,
}

impl FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "md" | "markdown" => Ok(TableFormat::Markdown),
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            other => Err(Error::Token(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: u32,
    pub m: i64,
    pub d: i64,
    pub rho: i64,
    pub g: i64,
    pub c1sq_over_factorial: String,
    pub c2_over_factorial: String,
    pub tau_over_factorial: String,
    pub m_star: i64,
    pub dual_nodes: i64,
    pub dual_cusps: i64,
    pub verdict: Existence,
}

const HEADER: [&str; 12] = [
    "n", "m", "d", "rho", "g", "c1^2/n!", "c2/n!", "tau/n!", "m*", "dual_nodes", "dual_cusps", "verdict",
];

impl TableRow {
    fn cells(&self) -> [String; 12] {
        [
            self.n.to_string(),
            self.m.to_string(),
            self.d.to_string(),
            self.rho.to_string(),
            self.g.to_string(),
            self.c1sq_over_factorial.clone(),
            self.c2_over_factorial.clone(),
            self.tau_over_factorial.clone(),
            self.m_star.to_string(),
            self.dual_nodes.to_string(),
            self.dual_cusps.to_string(),
            self.verdict.to_string(),
        ]
    }
}

pub fn table_row(n: u32) -> Result<TableRow> {
    let r = invariant_report(n)?;
    Ok(TableRow {
        n,
        m: r.curve.m,
        d: r.curve.d,
        rho: r.curve.rho,
        g: r.curve.g,
        c1sq_over_factorial: r.galois.c1sq_over_factorial.to_string(),
        c2_over_factorial: r.galois.c2_over_factorial.to_string(),
        tau_over_factorial: r.galois.tau_over_factorial.to_string(),
        m_star: r.dual.m_star,
        dual_nodes: r.dual.dual_nodes,
        dual_cusps: r.dual.dual_cusps,
        verdict: r.existence,
    })
}

pub fn table_rows(lo: u32, hi: u32) -> Result<Vec<TableRow>> {
    table_rows_with(lo, hi, Execution::default())
}

pub fn table_rows_with(lo: u32, hi: u32, exec: Execution) -> Result<Vec<TableRow>> {
    if lo < 4 || lo > hi {
        return Err(Error::BadRange(format!("{lo}..{hi} (need 4 <= lo <= hi)")));
    }
    let ns: Vec<u32> = (lo..=hi).collect();
    par::map(exec, &ns, |&n| table_row(n))
        .into_iter()
        .collect()
}

/// Renders rows `lo..=hi`.
pub fn emit_table(lo: u32, hi: u32, format: TableFormat) -> Result<String> {
    let rows = table_rows(lo, hi)?;
    match format {
        TableFormat::Json => {
            serde_json::to_string_pretty(&rows).map_err(|e| Error::Format(e.to_string()))
        }
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Error::Format(e.to_string());
            w.write_record(HEADER).map_err(io)?;
            for r in &rows {
                w.write_record(r.cells()).map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Format(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| Error::Format(e.to_string()))
        }
        TableFormat::Markdown => {
            let mut s = format!("| {} |\n", HEADER.join(" | "));
            s.push_str(&format!("|{}\n", "---:|".repeat(HEADER.len())));
            for r in &rows {
                s.push_str(&format!("| {} |\n", r.cells().join(" | ")));
            }
            Ok(s)
        }
    }
}

/// `τ/n!` as the exact rational `(n − 11)/3`.
pub fn signature_closed_form(n: u32) -> BigRational {
    BigRational::new(BigInt::from(n as i64 - 11), BigInt::from(3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn combinatorics_examples() {
        let c = curve_combinatorics(10).unwrap();
        assert_eq!((c.m, c.d, c.rho, c.g), (20, 112, 48, 11));
        let c = curve_combinatorics(4).unwrap();
        assert_eq!((c.m, c.d, c.rho, c.g), (8, 4, 12, 5));
        assert!(curve_combinatorics(2).is_err());
        assert!(curve_combinatorics(3).is_err());
    }

    #[test]
    fn chern_examples() {
        let f = |n| chern(&curve_combinatorics(n).unwrap()).unwrap();
        assert_eq!(f(4).c1sq, BigInt::from(24));
        assert_eq!(f(4).c2, BigInt::from(96));
        assert_eq!(f(6).c1sq, factorial(6) * 9);
        assert_eq!(f(6).c2, factorial(6) * 7);
        assert!(f(11).tau.is_zero());
        assert!(general_type_check(&f(4)));
        assert!(general_type_check(&f(30)));
        let three = GaloisInvariants::closed_form(3).unwrap();
        assert!(three.c1sq.is_zero());
        assert!(!general_type_check(&three));
    }

    #[test]
    fn formulas_agree_up_to_100() {
        for n in 4..=100 {
            let c = curve_combinatorics(n).unwrap();
            assert_eq!(c.g, n as i64 + 1);
            let gi = chern(&c).unwrap();
            assert_eq!(gi, GaloisInvariants::closed_form(n).unwrap());
            assert_eq!(BigInt::from(3) * &gi.tau, &gi.c1sq - BigInt::from(2) * &gi.c2);
            assert_eq!(gi.tau_over_factorial, signature_closed_form(n));
        }
    }

    #[test]
    fn cubic_oracles() {
        let cusp = PlaneCurve::new(3, 0, 1);
        let d = pluecker_dual(&cusp);
        assert_eq!(d.curve(), cusp);
        let node = PlaneCurve::new(3, 1, 0);
        let d = pluecker_dual(&node);
        assert_eq!(d.curve(), PlaneCurve::new(4, 0, 3));
        assert_eq!(pluecker_dual(&d.curve()).curve(), node);
        // smooth conic is self-dual
        assert_eq!(pluecker_dual(&PlaneCurve::new(2, 0, 0)).curve(), PlaneCurve::new(2, 0, 0));
    }

    #[test]
    fn family_dual() {
        for n in 4..=100 {
            let d = pluecker_dual(&curve_combinatorics(n).unwrap().curve());
            assert_eq!((d.m_star, d.dual_nodes, d.dual_cusps), (12, 30 - n as i64, 24));
        }
    }

    #[test]
    fn existence_bound() {
        assert_eq!(existence_check(30).unwrap().verdict, Existence::ExistsPossible);
        assert_eq!(existence_check(10).unwrap().verdict, Existence::ExistsPossible);
        let r = existence_check(31).unwrap();
        assert_eq!(r.verdict, Existence::Nonexistent);
        assert_eq!(r.reason.unwrap(), "dual node count = -1 < 0");
    }

    #[test]
    fn tables() {
        let md = emit_table(4, 6, TableFormat::Markdown).unwrap();
        assert_eq!(md.lines().count(), 5);
        assert!(md.contains("| 4 | 8 | 4 | 12 | 5 | 1 | 4 | -7/3 | 12 | 26 | 24 | EXISTS_POSSIBLE |"));
        let csv = emit_table(11, 11, TableFormat::Csv).unwrap();
        assert!(csv.lines().nth(1).unwrap().starts_with("11,22,"));
        assert!(csv.contains(",0,12,19,24,"));
        let json: serde_json::Value = serde_json::from_str(&emit_table(31, 31, TableFormat::Json).unwrap()).unwrap();
        assert_eq!(json[0]["verdict"], "NONEXISTENT");
        assert!(emit_table(3, 5, TableFormat::Csv).is_err());
        assert!(emit_table(9, 5, TableFormat::Csv).is_err());
    }
}
