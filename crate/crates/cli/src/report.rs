use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use twistal::{LaurentPoly, TwistedAlexResult};

use crate::input::InputInfo;

/// One `alex` result as written to JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlexReport {
    pub input: InputInfo,
    pub phi: Vec<i64>,
    pub hom_label: Option<String>,
    pub group: Option<String>,
    pub hom: Option<BTreeMap<String, String>>,
    #[serde(flatten)]
    pub result: TwistedAlexResult,
}

/// Polynomials with more terms than this are summarized in text output.
const INLINE_TERMS: usize = 16;

fn show_poly(p: &LaurentPoly) -> String {
    if p.term_count() <= INLINE_TERMS {
        p.to_string()
    } else {
        format!("<{} terms, degree {}>", p.term_count(), p.degree())
    }
}

impl AlexReport {
    pub fn to_text(&self) -> String {
        let r = &self.result;
        let mut s = String::new();
        let _ = writeln!(s, "input: {} ({}, {})", self.input.source, self.input.manifold, self.input.format_name());
        let _ = writeln!(s, "phi: {:?}", self.phi);
        match (&self.hom_label, &self.group) {
            (Some(label), Some(group)) => {
                let _ = writeln!(s, "hom: {label} onto {group}");
            }
            _ => {
                let _ = writeln!(s, "hom: trivial");
            }
        }
        let _ = writeln!(s, "ring: {}  method: {}", r.ring, r.method);
        if let Some(j) = r.deleted_column {
            let _ = writeln!(s, "deleted column: {j}");
        }
        let _ = writeln!(s, "numerator: {}", show_poly(&r.numerator));
        if let Some(d) = &r.denominator {
            let _ = writeln!(s, "denominator: {}", show_poly(d));
        }
        if let Some(q) = &r.quotient {
            let _ = writeln!(s, "quotient: {}", show_poly(q));
        }
        let _ = writeln!(s, "degree: {}", r.degree);
        if r.denominator.is_some() {
            let _ = writeln!(s, "numerator degree: {}", r.numerator_degree);
        }
        let _ = writeln!(s, "H_1 order degree: {}", r.h1_degree);
        if let Some(m) = r.monic {
            let _ = writeln!(s, "monic: {m}");
        }
        for n in &r.notes {
            let _ = writeln!(s, "note: {n}");
        }
        s
    }
}

impl InputInfo {
    fn format_name(&self) -> &'static str {
        match self.format {
            crate::input::Format::Pres => "pres",
            crate::input::Format::Pd => "pd",
            crate::input::Format::Dt => "dt",
            crate::input::Format::Braid => "braid",
        }
    }
}
