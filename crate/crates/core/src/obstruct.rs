//! Complexity lower bounds from twisted Alexander degrees, with the
//! symplectic-obstruction and fibering-evidence reports built on them.

use std::fmt::Write as _;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::Degree;
use crate::twisted::TwistedAlexResult;

/// Declared type of the Euler class of the circle bundle. Never computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EulerClassKind {
    Zero,
    NonTorsion,
}

/// User-declared topological input for the bound.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleData {
    pub euler_class_kind: Option<EulerClassKind>,
    /// `sigma . sigma`.
    pub sigma_self_intersection: i64,
    /// The caller asserts `b_2^+ > 1`.
    pub b2plus_assumption: bool,
}

impl BundleData {
    pub fn new(euler_class_kind: Option<EulerClassKind>, sigma_self_intersection: i64, b2plus_assumption: bool) -> Self {
        BundleData {
            euler_class_kind,
            sigma_self_intersection,
            b2plus_assumption,
        }
    }

    /// Both hypotheses of the bound are declared.
    pub fn hypotheses_declared(&self) -> bool {
        self.euler_class_kind.is_some() && self.b2plus_assumption
    }
}

/// A lower bound, exact and rounded up.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bound {
    pub rational: Ratio<i64>,
    pub integer: i64,
}

/// `(deg - 2 div) / |G| + |sigma.sigma|` and its ceiling; `None` for the
/// vacuous row of a vanishing polynomial.
pub fn bound_row(deg: Degree, group_order: usize, div_kernel: u64, sigma_sq: i64) -> Result<Option<Bound>> {
    if group_order == 0 {
        return Err(Error::Precondition("group order must be positive".into()));
    }
    let Some(d) = deg.finite() else {
        return Ok(None);
    };
    let n = group_order as i64;
    // kept over |G| so it prints the way it is usually written
    let rational = Ratio::new_raw(d - 2 * div_kernel as i64 + sigma_sq.abs() * n, n);
    let integer = rational.numer().div_ceil(&n);
    Ok(Some(Bound { rational, integer }))
}

mod ratio_text {
    use num_rational::Ratio;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Option<Ratio<i64>>, s: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_str(&r.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Ratio<i64>>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|t| t.parse().map_err(D::Error::custom))
            .transpose()
    }
}

/// One quotient's contribution to the report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRow {
    pub group: String,
    pub hom_id: usize,
    pub degree: Degree,
    pub div_kernel: u64,
    pub group_order: usize,
    /// Exact value, written `p/q`.
    #[serde(with = "ratio_text")]
    pub rational_bound: Option<Ratio<i64>>,
    pub integer_bound: Option<i64>,
    pub vacuous: bool,
    /// Over `Z` only.
    pub monic: Option<bool>,
}

impl BoundRow {
    pub fn new(
        group: impl Into<String>,
        hom_id: usize,
        degree: Degree,
        group_order: usize,
        div_kernel: u64,
        sigma_sq: i64,
        monic: Option<bool>,
    ) -> Result<Self> {
        let b = bound_row(degree, group_order, div_kernel, sigma_sq)?;
        Ok(BoundRow {
            group: group.into(),
            hom_id,
            degree,
            div_kernel,
            group_order,
            rational_bound: b.map(|b| b.rational),
            integer_bound: b.map(|b| b.integer),
            vacuous: b.is_none(),
            monic,
        })
    }
}

/// Outcome of the monicity test. There is deliberately no positive verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum SymplecticVerdict {
    Obstructed { witness: String, reason: String },
    NoObstructionFound { checked: usize },
}

/// Any non-monic or vanishing polynomial over `Z` obstructs a symplectic
/// representative. Results over a finite field are rejected.
pub fn symplectic_obstruction(results: &[(String, TwistedAlexResult)]) -> Result<SymplecticVerdict> {
    if let Some((label, r)) = results.iter().find(|(_, r)| r.ring != "Z") {
        return Err(Error::WrongRing(format!(
            "monicity needs integer coefficients, but {label} was computed over {}",
            r.ring
        )));
    }
    for (label, r) in results {
        if r.is_zero() {
            return Ok(SymplecticVerdict::Obstructed {
                witness: label.clone(),
                reason: "the twisted polynomial vanishes".into(),
            });
        }
        if r.monic == Some(false) {
            return Ok(SymplecticVerdict::Obstructed {
                witness: label.clone(),
                reason: "the twisted polynomial is not monic".into(),
            });
        }
    }
    Ok(SymplecticVerdict::NoObstructionFound { checked: results.len() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FiberingStatus {
    NoEvidence,
    HypothesisHolds,
    HypothesisFails,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberingSummary {
    pub status: FiberingStatus,
    pub checked: usize,
    pub witness: Option<String>,
    pub summary: String,
}

const FIBERING_CAVEAT: &str = "the conclusion also needs the manifold to be prime with zero norm \
or a graph manifold, which is assumed, not checked";

/// Whether the nonvanishing hypothesis of the fibering criterion survives
/// the quotients examined.
pub fn fibering_evidence(results: &[(String, TwistedAlexResult)]) -> FiberingSummary {
    if results.is_empty() {
        return FiberingSummary {
            status: FiberingStatus::NoEvidence,
            checked: 0,
            witness: None,
            summary: "no evidence: no quotients were checked".into(),
        };
    }
    if let Some((label, _)) = results.iter().find(|(_, r)| r.is_zero()) {
        return FiberingSummary {
            status: FiberingStatus::HypothesisFails,
            checked: results.len(),
            witness: Some(label.clone()),
            summary: format!(
                "criterion hypothesis fails at hom {label}; this is not evidence against fibering"
            ),
        };
    }
    FiberingSummary {
        status: FiberingStatus::HypothesisHolds,
        checked: results.len(),
        witness: None,
        summary: format!(
            "hypothesis holds for all {} checked quotients; {FIBERING_CAVEAT}",
            results.len()
        ),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexityReport {
    pub bundle: BundleData,
    pub rows: Vec<BoundRow>,
    pub best_bound: Option<i64>,
    /// User-supplied norm value, labelled external.
    pub chi_minus_external: Option<i64>,
    /// `chi_minus_external + |sigma.sigma|`.
    pub upper_bound: Option<i64>,
    pub tight: bool,
    pub theorem_applicable: bool,
    pub symplectic: Option<SymplecticVerdict>,
    pub fibering: FiberingSummary,
    pub hypotheses: Vec<String>,
}

impl ComplexityReport {
    pub fn new(
        bundle: BundleData,
        rows: Vec<BoundRow>,
        chi_minus_external: Option<i64>,
        symplectic: Option<SymplecticVerdict>,
        fibering: FiberingSummary,
    ) -> Self {
        let best_bound = rows.iter().filter_map(|r| r.integer_bound).max();
        let upper_bound = chi_minus_external.map(|c| c + bundle.sigma_self_intersection.abs());
        let tight = matches!((upper_bound, best_bound), (Some(u), Some(b)) if u == b);
        let mut hypotheses = Vec::new();
        match bundle.euler_class_kind {
            Some(k) => hypotheses.push(format!("assumed: Euler class is {}", match k {
                EulerClassKind::Zero => "zero",
                EulerClassKind::NonTorsion => "non-torsion",
            })),
            None => hypotheses.push("missing: Euler class kind not declared".into()),
        }
        hypotheses.push(if bundle.b2plus_assumption {
            "assumed: b2+ > 1".into()
        } else {
            "missing: b2+ > 1 not asserted".into()
        });
        hypotheses.push("checked: every row's homomorphism kills all relators".into());
        if chi_minus_external.is_some() {
            hypotheses.push("external: the norm value behind the upper bound is user supplied".into());
        }
        ComplexityReport {
            theorem_applicable: bundle.hypotheses_declared(),
            bundle,
            rows,
            best_bound,
            chi_minus_external,
            upper_bound,
            tight,
            symplectic,
            fibering,
            hypotheses,
        }
    }

    /// A table of the rows followed by the summary lines.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{:<12} {:>4} {:>8} {:>5} {:>12} {:>6} {:>6}", "group", "hom", "degree", "div", "bound", "ceil", "monic");
        for r in &self.rows {
            let degree = r.degree.to_string();
            let rational = r.rational_bound.map_or("vacuous".into(), |q| q.to_string());
            let integer = r.integer_bound.map_or("-".into(), |i| i.to_string());
            let monic = r.monic.map_or("-".into(), |m| m.to_string());
            let _ = writeln!(s, "{:<12} {:>4} {:>8} {:>5} {:>12} {:>6} {:>6}", r.group, r.hom_id, degree, r.div_kernel, rational, integer, monic);
        }
        let show = |v: Option<i64>| v.map_or("undefined".to_string(), |x| x.to_string());
        let _ = writeln!(s, "best bound: {}", show(self.best_bound));
        let _ = writeln!(s, "upper bound (external): {}", show(self.upper_bound));
        let _ = writeln!(s, "tight: {}", self.tight);
        if !self.theorem_applicable {
            let _ = writeln!(s, "warning: bound hypotheses not declared; the rows are arithmetic only");
        }
        match &self.symplectic {
            Some(SymplecticVerdict::Obstructed { witness, reason }) => {
                let _ = writeln!(s, "symplectic: OBSTRUCTED by {witness} ({reason})");
            }
            Some(SymplecticVerdict::NoObstructionFound { checked }) => {
                let _ = writeln!(s, "symplectic: NO-OBSTRUCTION-FOUND ({checked} checked)");
            }
            None => {}
        }
        let _ = writeln!(s, "fibering: {}", self.fibering.summary);
        for h in &self.hypotheses {
            let _ = writeln!(s, "  {h}");
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{LaurentPoly, Ring};
    use crate::twisted::Method;

    fn result(coeffs: &[i64], ring: Ring) -> TwistedAlexResult {
        let p = LaurentPoly::from_coeffs(&ring, coeffs);
        let monic = if ring.is_integers() && !p.is_zero() { Some(p.is_monic().unwrap()) } else { None };
        TwistedAlexResult {
            ring: ring.to_string(),
            method: Method::GcdOfMinors,
            deleted_column: None,
            degree: p.degree(),
            numerator_degree: p.degree(),
            h1_degree: p.degree(),
            numerator: p,
            denominator: None,
            quotient: None,
            monic,
            notes: vec![],
        }
    }

    #[test]
    fn conway_row() {
        let b = bound_row(Degree::Finite(329), 60, 1, 0).unwrap().unwrap();
        assert_eq!(b.rational, Ratio::new(327, 60));
        assert_eq!(b.integer, 6);
    }

    #[test]
    fn trivial_and_vacuous_rows() {
        let b = bound_row(Degree::Finite(0), 1, 0, 0).unwrap().unwrap();
        assert_eq!((b.rational, b.integer), (Ratio::from_integer(0), 0));
        assert_eq!(bound_row(Degree::NegInfinity, 60, 1, 5).unwrap(), None);
        assert!(bound_row(Degree::Finite(3), 0, 0, 0).is_err());
    }

    #[test]
    fn negative_values_round_up() {
        // (1 - 4) / 2 = -3/2 rounds up to -1
        assert_eq!(bound_row(Degree::Finite(1), 2, 2, 0).unwrap().unwrap().integer, -1);
    }

    #[test]
    fn tight_report() {
        for s in [0i64, 1, -1, 4, -4] {
            let bundle = BundleData::new(Some(EulerClassKind::Zero), s, true);
            let row = BoundRow::new("A5", 0, Degree::Finite(329), 60, 1, s, None).unwrap();
            let r = ComplexityReport::new(bundle, vec![row], Some(6), None, fibering_evidence(&[]));
            assert_eq!(r.best_bound, Some(6 + s.abs()));
            assert!(r.tight);
            assert!(r.theorem_applicable);
        }
    }

    #[test]
    fn report_json_round_trip() {
        let row = BoundRow::new("A5", 3, Degree::Finite(329), 60, 1, 0, Some(true)).unwrap();
        let vac = BoundRow::new("S3", 1, Degree::NegInfinity, 6, 1, 0, None).unwrap();
        let r = ComplexityReport::new(BundleData::default(), vec![row, vac], None, None, fibering_evidence(&[]));
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.contains("\"327/60\""));
        assert_eq!(serde_json::from_str::<ComplexityReport>(&text).unwrap(), r);
        assert!(!r.theorem_applicable);
        assert!(!r.tight);
        assert!(r.to_text().contains("vacuous"));
    }

    #[test]
    fn obstruction_verdicts() {
        let monic = ("h0".to_string(), result(&[1, -1, 1], Ring::Z));
        let non_monic = ("h1".to_string(), result(&[2, -3, 2], Ring::Z));
        let zero = ("h2".to_string(), result(&[], Ring::Z));
        assert_eq!(
            symplectic_obstruction(std::slice::from_ref(&monic)).unwrap(),
            SymplecticVerdict::NoObstructionFound { checked: 1 }
        );
        assert!(matches!(
            symplectic_obstruction(&[monic.clone(), non_monic]).unwrap(),
            SymplecticVerdict::Obstructed { ref witness, .. } if witness == "h1"
        ));
        assert!(matches!(
            symplectic_obstruction(&[zero]).unwrap(),
            SymplecticVerdict::Obstructed { ref witness, .. } if witness == "h2"
        ));
        let f = ("h3".to_string(), result(&[1, 1], Ring::prime_field(53).unwrap()));
        assert!(matches!(symplectic_obstruction(&[monic, f]), Err(Error::WrongRing(_))));
    }

    #[test]
    fn fibering_summaries() {
        assert_eq!(fibering_evidence(&[]).status, FiberingStatus::NoEvidence);
        let ok = ("h0".to_string(), result(&[1, -1, 1], Ring::Z));
        assert_eq!(fibering_evidence(std::slice::from_ref(&ok)).status, FiberingStatus::HypothesisHolds);
        let zero = ("trivial".to_string(), result(&[], Ring::Z));
        let s = fibering_evidence(&[ok, zero]);
        assert_eq!(s.status, FiberingStatus::HypothesisFails);
        assert!(s.summary.contains("criterion hypothesis fails at hom trivial"));
    }
}
