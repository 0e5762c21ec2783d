//! Executable checks relating the truncated polynomial of a standard
//! rational diagram to its twist sites.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{DiagramError, LinkDiagram, SmoothingMode};
use crate::kauffman::{
    degree_bound_holds, top_rows, truncate, LambdaEngine, LaurentPoly2, TruncatedLambda,
    TruncationError,
};
use crate::notation::{census, minimal_code, predicted_u, ConwayCode, NotationError, UTriple};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error(transparent)]
    Notation(#[from] NotationError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Truncation(#[from] TruncationError),
    #[error("the truncated skein check needs at least 3 crossings, got {0}")]
    TooFewCrossings(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Chirality {
    TopHeavy,
    BottomHeavy,
    Balanced,
}

impl fmt::Display for Chirality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Chirality::TopHeavy => "top-heavy",
            Chirality::BottomHeavy => "bottom-heavy",
            Chirality::Balanced => "balanced",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Obstruction {
    Obstructed,
    Inconclusive,
}

/// Named pass/fail checks for one input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub input: String,
    pub c: usize,
    pub sites: Option<usize>,
    pub computed_u: Option<UTriple>,
    pub predicted_u: Option<UTriple>,
    pub checks: BTreeMap<String, bool>,
    pub overall: bool,
}

impl VerificationReport {
    fn new(input: impl Into<String>, c: usize) -> Self {
        VerificationReport {
            input: input.into(),
            c,
            sites: None,
            computed_u: None,
            predicted_u: None,
            checks: BTreeMap::new(),
            overall: true,
        }
    }

    pub fn record(&mut self, name: &str, pass: bool) {
        self.checks.insert(name.to_string(), pass);
        self.overall = self.checks.values().all(|&v| v);
    }

    pub fn check(&self, name: &str) -> Option<bool> {
        self.checks.get(name).copied()
    }

    /// Folds the checks of `other` into this report.
    pub fn merge(&mut self, other: &VerificationReport) {
        for (name, &pass) in &other.checks {
            self.record(name, pass);
        }
        self.sites = self.sites.or(other.sites);
        self.computed_u = self.computed_u.or(other.computed_u);
        self.predicted_u = self.predicted_u.or(other.predicted_u);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |u: Option<UTriple>| u.map_or("-".to_string(), |u| u.to_string());
        writeln!(
            f,
            "{}  c={}  sites={}  computed={}  predicted={}  {}",
            self.input,
            self.c,
            self.sites.map_or("-".to_string(), |s| s.to_string()),
            show(self.computed_u),
            show(self.predicted_u),
            if self.overall { "PASS" } else { "FAIL" }
        )?;
        for (name, pass) in &self.checks {
            writeln!(f, "  {name:<18} {}", if *pass { "pass" } else { "FAIL" })?;
        }
        Ok(())
    }
}

/// Classes partition: equal outer coefficients are balanced.
pub fn chirality_class(t: &TruncatedLambda) -> Chirality {
    use std::cmp::Ordering::*;
    match t.u.plus.cmp(&t.u.minus) {
        Greater => Chirality::TopHeavy,
        Less => Chirality::BottomHeavy,
        Equal => Chirality::Balanced,
    }
}

/// Odd-site rational links other than the Hopf link have `u+ = u- + 1`, so
/// their polynomial is not symmetric under `a -> a^-1`.
pub fn amphicheiral_obstruction(code: &ConwayCode) -> Obstruction {
    if code.sites() % 2 == 1 && code.crossings() >= 3 {
        Obstruction::Obstructed
    } else {
        Obstruction::Inconclusive
    }
}

fn expected_chirality(code: &ConwayCode) -> Chirality {
    match amphicheiral_obstruction(code) {
        Obstruction::Obstructed => Chirality::TopHeavy,
        Obstruction::Inconclusive => Chirality::Balanced,
    }
}

/// Top z-degree is `c-1` and every term obeys `z + |a| <= c`.
fn degree_checks(p: &LaurentPoly2, c: usize) -> bool {
    degree_bound_holds(p, c) && p.max_z_degree() == Some(c as i32 - 1)
}

/// Runs the checks against one shared [`LambdaEngine`].
#[derive(Debug, Default)]
pub struct Verifier {
    engine: LambdaEngine,
}

impl Verifier {
    pub fn new(engine: LambdaEngine) -> Self {
        Verifier { engine }
    }

    pub fn engine(&mut self) -> &mut LambdaEngine {
        &mut self.engine
    }

    pub fn lambda(&mut self, d: &LinkDiagram) -> LaurentPoly2 {
        self.engine.lambda(d)
    }

    pub fn lambda_of(&mut self, code: &ConwayCode) -> LaurentPoly2 {
        self.engine.lambda(&LinkDiagram::build_standard(code))
    }

    /// Compares the computed `(u-, u0, u+)` with the twist-site prediction.
    pub fn verify_main(&mut self, code: &ConwayCode) -> Result<VerificationReport, TheoremError> {
        let s = census(code);
        let c = s.crossings;
        let p = self.lambda_of(code);
        let mut report = VerificationReport::new(code.to_string(), c);
        report.sites = Some(s.sites);
        report.predicted_u = Some(predicted_u(&s));
        report.record("degree_bounds", degree_checks(&p, c));
        match truncate(&p, c) {
            Ok(t) => {
                report.computed_u = Some(t.u);
                report.record("top_pair", t.top_pair_present);
                report.record("theorem_match", Some(t.u) == report.predicted_u);
                report.record("chirality", chirality_class(&t) == expected_chirality(code));
            }
            Err(_) => {
                report.record("top_pair", false);
                report.record("theorem_match", false);
            }
        }
        Ok(report)
    }

    /// Checks that the top two z-rows of `Λ(T)` are `z^j` times those of the
    /// minimal code with the same number of sites.
    pub fn verify_reduction(
        &mut self,
        code: &ConwayCode,
    ) -> Result<VerificationReport, TheoremError> {
        let s = census(code);
        let minimal = minimal_code(&s)?;
        let c = s.crossings;
        let cm = minimal.crossings();
        let p = self.lambda_of(code);
        let pm = self.lambda_of(&minimal);
        let mut report = VerificationReport::new(code.to_string(), c);
        report.sites = Some(s.sites);
        report.predicted_u = Some(predicted_u(&s));
        report.computed_u = truncate(&p, c).ok().map(|t| t.u);
        let shifted = top_rows(&pm, cm).shift(0, s.extra as i32);
        report.record("reduction_match", top_rows(&p, c) == shifted);
        Ok(report)
    }

    /// Truncated skein relation at the last crossing of the last site.
    pub fn verify_truncated_skein(
        &mut self,
        code: &ConwayCode,
    ) -> Result<VerificationReport, TheoremError> {
        self.verify_truncated_skein_at(code, code.crossings() - 1)
    }

    /// The top two z-rows of `Λ(D+)` equal those of `z (Λ(D0) + Λ(D∞))` at
    /// crossing `x`.
    pub fn verify_truncated_skein_at(
        &mut self,
        code: &ConwayCode,
        x: usize,
    ) -> Result<VerificationReport, TheoremError> {
        let c = code.crossings();
        if c < 3 {
            return Err(TheoremError::TooFewCrossings(c));
        }
        let d = LinkDiagram::build_standard(code);
        let d0 = d.smooth(x, SmoothingMode::Zero)?;
        let dinf = d.smooth(x, SmoothingMode::Infinity)?;
        let p = self.engine.lambda(&d);
        let rhs = (&self.engine.lambda(&d0) + &self.engine.lambda(&dinf)).shift(0, 1);
        let mut report = VerificationReport::new(code.to_string(), c);
        report.sites = Some(code.sites());
        report.computed_u = truncate(&p, c).ok().map(|t| t.u);
        report.record("skein_truncated", top_rows(&p, c) == top_rows(&rhs, c));
        Ok(report)
    }

    /// Multiplicativity and the top z-degree `c1 + c2 - 2` of `N(T1) # N(T2)`.
    pub fn verify_connected_sum(
        &mut self,
        code1: &ConwayCode,
        code2: &ConwayCode,
    ) -> Result<VerificationReport, TheoremError> {
        let d1 = LinkDiagram::build_standard(code1);
        let d2 = LinkDiagram::build_standard(code2);
        self.verify_connected_sum_diagrams(&format!("{code1} # {code2}"), &d1, &d2)
    }

    pub fn verify_connected_sum_diagrams(
        &mut self,
        name: &str,
        d1: &LinkDiagram,
        d2: &LinkDiagram,
    ) -> Result<VerificationReport, TheoremError> {
        let sum = LinkDiagram::connected_sum(d1, d2)?;
        let p1 = self.engine.lambda(d1);
        let p2 = self.engine.lambda(d2);
        let p = self.engine.lambda(&sum);
        let c = sum.crossing_count();
        let mut report = VerificationReport::new(name, c);
        report.record("multiplicativity", p == &p1 * &p2);
        if d1.crossing_count() > 0 && d2.crossing_count() > 0 {
            let top_ok = p.max_z_degree() == Some(c as i32 - 2);
            report.record("degree_bounds", top_ok && degree_bound_holds(&p, c));
        }
        Ok(report)
    }

    /// `Λ(mirror D) = Λ(D)(a^-1, z)` and the chirality class flips.
    pub fn verify_mirror(&mut self, code: &ConwayCode) -> Result<VerificationReport, TheoremError> {
        let d = LinkDiagram::build_standard(code);
        let m = d.mirror();
        let p = self.engine.lambda(&d);
        let pm = self.engine.lambda(&m);
        let c = code.crossings();
        let mut report = VerificationReport::new(format!("mirror {code}"), c);
        report.sites = Some(code.sites());
        report.predicted_u = Some(predicted_u(&census(code)).mirrored());
        report.record("mirror_identity", pm == p.mirror());
        match (truncate(&p, c), truncate(&pm, c)) {
            (Ok(t), Ok(tm)) => {
                report.computed_u = Some(tm.u);
                let flipped = match chirality_class(&t) {
                    Chirality::TopHeavy => Chirality::BottomHeavy,
                    Chirality::BottomHeavy => Chirality::TopHeavy,
                    Chirality::Balanced => Chirality::Balanced,
                };
                report.record("chirality", chirality_class(&tm) == flipped);
            }
            _ => report.record("chirality", false),
        }
        Ok(report)
    }

    /// Every applicable check for one code, folded into one report.
    pub fn verify_all(&mut self, code: &ConwayCode) -> Result<VerificationReport, TheoremError> {
        let mut report = self.verify_main(code)?;
        if !code.is_hopf() {
            report.merge(&self.verify_reduction(code)?);
        }
        if code.crossings() >= 3 {
            report.merge(&self.verify_truncated_skein(code)?);
        }
        Ok(report)
    }

    /// Truncation of an arbitrary diagram, e.g. from PD input. The rational
    /// prediction is never applied; `expected` is compared when given.
    pub fn check_external(
        &mut self,
        name: &str,
        d: &LinkDiagram,
        expected: Option<UTriple>,
    ) -> Result<VerificationReport, TheoremError> {
        let c = d.crossing_count();
        let p = self.engine.lambda(d);
        let t = truncate(&p, c)?;
        let mut report = VerificationReport::new(name, c);
        report.computed_u = Some(t.u);
        report.predicted_u = expected;
        report.record("degree_bounds", degree_checks(&p, c));
        report.record("top_pair", t.top_pair_present);
        if let Some(e) = expected {
            report.record("expected_match", e == t.u);
        }
        Ok(report)
    }
}

pub fn verify_main(code: &ConwayCode) -> Result<VerificationReport, TheoremError> {
    Verifier::default().verify_main(code)
}

pub fn verify_reduction(code: &ConwayCode) -> Result<VerificationReport, TheoremError> {
    Verifier::default().verify_reduction(code)
}

pub fn verify_truncated_skein(code: &ConwayCode) -> Result<VerificationReport, TheoremError> {
    Verifier::default().verify_truncated_skein(code)
}

pub fn verify_connected_sum(
    code1: &ConwayCode,
    code2: &ConwayCode,
) -> Result<VerificationReport, TheoremError> {
    Verifier::default().verify_connected_sum(code1, code2)
}

pub fn check_external(
    name: &str,
    d: &LinkDiagram,
    expected: Option<UTriple>,
) -> Result<VerificationReport, TheoremError> {
    Verifier::default().check_external(name, d, expected)
}
