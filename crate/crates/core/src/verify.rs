//! Equivalence checking by invariant fingerprints, and the suites that run
//! the equivalence and cable claims for twisted torus knots and K-links.
//!
//! A `consistent` verdict means every compared invariant agrees. Invariants
//! are incomplete, so this is evidence for equivalence, never a proof.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braid::BraidWord;
use crate::families::{
    cable_braid, cable_twist_for_slope, klink_braid, lemma_symmetry_klink, theorem5_specs,
    torus_braid, twisted_torus_braid, FamilyError, KLinkSpec, TwistedTorusSpec, Validation,
};
use crate::invariants::{
    self, cable_alexander, fingerprint, identify_torus_knot, positive_braid_genus, torus_alexander,
    InvariantError, InvariantFingerprint, Level, Limits,
};
use crate::poly::LaurentPoly;

pub const CONSISTENT_MEANS: &str =
    "consistent: all compared invariants agree; necessary, not sufficient, for equivalence";

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("bad suite parameters: {0}")]
    Params(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Consistent,
    Distinct,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Consistent => "consistent",
            Status::Distinct => "distinct",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    pub invariant: String,
    pub left: String,
    pub right: String,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    pub evidence: Vec<Evidence>,
    pub notes: Vec<String>,
}

impl Verdict {
    fn skipped(reason: impl Into<String>) -> Self {
        Self {
            status: Status::Skipped,
            evidence: Vec::new(),
            notes: vec![reason.into()],
        }
    }

    fn from_evidence(evidence: Vec<Evidence>, notes: Vec<String>) -> Self {
        let status = if evidence.iter().all(|e| e.equal) {
            Status::Consistent
        } else {
            Status::Distinct
        };
        Self {
            status,
            evidence,
            notes,
        }
    }
}

/// One side of a comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Subject {
    Braid(BraidWord),
    /// A knot known only through its Alexander polynomial.
    Alexander(LaurentPoly),
}

/// Computes fingerprints, caching them for the lifetime of the checker.
pub struct Checker {
    limits: Limits,
    cache: Mutex<HashMap<(BraidWord, Level), InvariantFingerprint>>,
}

impl Checker {
    pub fn new(limits: Limits) -> Self {
        Self {
            limits,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn fingerprint(
        &self,
        w: &BraidWord,
        level: Level,
    ) -> Result<InvariantFingerprint, InvariantError> {
        let key = (w.clone(), level);
        if let Some(f) = self.cache.lock().unwrap().get(&key) {
            return Ok(f.clone());
        }
        let f = fingerprint(w, level, &self.limits)?;
        self.cache.lock().unwrap().insert(key, f.clone());
        Ok(f)
    }

    fn subject_fingerprint(
        &self,
        s: &Subject,
        level: Level,
    ) -> Result<InvariantFingerprint, InvariantError> {
        match s {
            Subject::Braid(w) => self.fingerprint(w, level),
            Subject::Alexander(poly) => Ok(InvariantFingerprint {
                components: 1,
                alexander: poly.clone(),
                jones: None,
                jones_skipped: Some("only the Alexander polynomial is known".into()),
                genus: None,
                strands: 0,
                letters: 0,
            }),
        }
    }

    pub fn compare(&self, left: &Subject, right: &Subject, level: Level) -> Verdict {
        let (a, b) = match (
            self.subject_fingerprint(left, level),
            self.subject_fingerprint(right, level),
        ) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => return Verdict::skipped(e.to_string()),
        };
        let mut evidence = vec![
            Evidence {
                invariant: "components".into(),
                left: a.components.to_string(),
                right: b.components.to_string(),
                equal: a.components == b.components,
            },
            Evidence {
                invariant: "alexander".into(),
                left: a.alexander.to_string(),
                right: b.alexander.to_string(),
                equal: a.alexander == b.alexander,
            },
        ];
        let mut notes = Vec::new();
        if let (Some(x), Some(y)) = (a.genus, b.genus) {
            evidence.push(Evidence {
                invariant: "genus".into(),
                left: x.to_string(),
                right: y.to_string(),
                equal: x == y,
            });
        }
        if level == Level::Full {
            match (&a.jones, &b.jones) {
                (Some(x), Some(y)) => evidence.push(Evidence {
                    invariant: "jones".into(),
                    left: x.to_string(),
                    right: y.to_string(),
                    equal: x == y,
                }),
                _ => {
                    for (side, f) in [("left", &a), ("right", &b)] {
                        if let Some(reason) = &f.jones_skipped {
                            notes.push(format!("jones skipped on {side}: {reason}"));
                        }
                    }
                }
            }
        }
        Verdict::from_evidence(evidence, notes)
    }

    /// Jones of `left` against `right` and its mirror image.
    pub fn chirality(&self, left: &BraidWord, right: &BraidWord) -> Chirality {
        let jl = invariants::jones(left, &self.limits);
        let jr = invariants::jones(right, &self.limits);
        match (jl, jr) {
            (Ok(x), Ok(y)) if x == y && x == y.mirror() => Chirality::Amphichiral,
            (Ok(x), Ok(y)) if x == y => Chirality::Same,
            (Ok(x), Ok(y)) if x == y.mirror() => Chirality::Mirror,
            (Ok(_), Ok(_)) => Chirality::Neither,
            (Err(e), _) | (_, Err(e)) => Chirality::Skipped(e.to_string()),
        }
    }
}

/// How the Jones polynomials of two knots relate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Chirality {
    /// Equal, and equal to the mirror too.
    Amphichiral,
    Same,
    /// Left equals the mirror image of right.
    Mirror,
    Neither,
    Skipped(String),
}

/// Compares component counts, Alexander polynomials and, at [`Level::Full`]
/// within limits, Jones polynomials.
pub fn check_equivalent(a: &BraidWord, b: &BraidWord, level: Level, limits: &Limits) -> Verdict {
    let mut v = Checker::new(*limits).compare(
        &Subject::Braid(a.clone()),
        &Subject::Braid(b.clone()),
        level,
    );
    v.notes.push(CONSISTENT_MEANS.into());
    v
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SuiteId {
    #[serde(rename = "toruslemma")]
    TorusLemma,
    #[serde(rename = "prop1")]
    Prop1,
    #[serde(rename = "lemma3")]
    Lemma3,
    #[serde(rename = "answerMorimoto")]
    AnswerMorimoto,
    #[serde(rename = "answerMorimoto-corollary")]
    AnswerMorimotoCorollary,
    #[serde(rename = "lemmaSymmetry")]
    LemmaSymmetry,
    #[serde(rename = "theorem5")]
    Theorem5,
    #[serde(rename = "lee-cable")]
    LeeCable,
    #[serde(rename = "corollary1-torus")]
    Corollary1Torus,
    #[serde(rename = "morimotoYamada")]
    MorimotoYamada,
}

impl SuiteId {
    pub const ALL: [SuiteId; 10] = [
        SuiteId::TorusLemma,
        SuiteId::Prop1,
        SuiteId::Lemma3,
        SuiteId::AnswerMorimoto,
        SuiteId::AnswerMorimotoCorollary,
        SuiteId::LemmaSymmetry,
        SuiteId::Theorem5,
        SuiteId::LeeCable,
        SuiteId::Corollary1Torus,
        SuiteId::MorimotoYamada,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            SuiteId::TorusLemma => "toruslemma",
            SuiteId::Prop1 => "prop1",
            SuiteId::Lemma3 => "lemma3",
            SuiteId::AnswerMorimoto => "answerMorimoto",
            SuiteId::AnswerMorimotoCorollary => "answerMorimoto-corollary",
            SuiteId::LemmaSymmetry => "lemmaSymmetry",
            SuiteId::Theorem5 => "theorem5",
            SuiteId::LeeCable => "lee-cable",
            SuiteId::Corollary1Torus => "corollary1-torus",
            SuiteId::MorimotoYamada => "morimotoYamada",
        }
    }

    /// Parameter names, in tuple order.
    pub fn param_names(&self) -> &'static [&'static str] {
        match self {
            SuiteId::TorusLemma => &["p", "q", "s"],
            SuiteId::Prop1 => &["p", "q", "k", "s"],
            SuiteId::Lemma3 | SuiteId::AnswerMorimoto | SuiteId::AnswerMorimotoCorollary => &["s"],
            SuiteId::LemmaSymmetry | SuiteId::MorimotoYamada => &["p", "q"],
            SuiteId::Theorem5 => &["k", "b"],
            SuiteId::LeeCable => &["p", "q", "k", "s"],
            SuiteId::Corollary1Torus => &["m", "q"],
        }
    }

    pub fn default_params(&self) -> Vec<Vec<i64>> {
        let v: &[&[i64]] = match self {
            SuiteId::TorusLemma => &[&[5, 2, 1], &[5, 3, 1], &[7, 2, 2], &[7, 3, 1], &[4, 3, 2]],
            SuiteId::Prop1 => &[&[3, 2, 1, 1], &[4, 3, 2, 1], &[5, 2, 1, 2], &[5, 3, 2, 1]],
            SuiteId::Lemma3 => &[&[1], &[2]],
            SuiteId::AnswerMorimoto => &[&[1], &[2], &[3]],
            SuiteId::AnswerMorimotoCorollary => &[&[1], &[2]],
            SuiteId::LemmaSymmetry => &[&[8, 3], &[12, 5]],
            SuiteId::Theorem5 => &[&[2, 1], &[2, 2]],
            SuiteId::LeeCable => &[&[5, 2, 2, 1]],
            SuiteId::Corollary1Torus => &[&[1, 2], &[2, 2], &[1, 3], &[2, 3]],
            SuiteId::MorimotoYamada => &[&[8, 3], &[12, 5], &[20, 9], &[24, 11], &[32, 15]],
        };
        v.iter().map(|t| t.to_vec()).collect()
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteId {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SuiteId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| VerifyError::UnknownSuite(s.to_string()))
    }
}

/// Parses `"5,2,1;7,3,1"` into parameter tuples.
pub fn parse_params(text: &str) -> Result<Vec<Vec<i64>>, VerifyError> {
    text.split(';')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|tuple| {
            tuple
                .split(',')
                .map(|x| {
                    x.trim()
                        .parse::<i64>()
                        .map_err(|_| VerifyError::Params(format!("not an integer: {x:?}")))
                })
                .collect()
        })
        .collect()
}

/// What a case checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseKind {
    /// The claim exactly as stated.
    Stated,
    /// The cable claim with its pattern slope converted to the Seifert
    /// framing.
    FramingCorrected,
    NegativeControl,
}

impl fmt::Display for CaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseKind::Stated => "stated",
            CaseKind::FramingCorrected => "framing-corrected",
            CaseKind::NegativeControl => "negative-control",
        })
    }
}

enum Check {
    Compare {
        left: Subject,
        right: Subject,
        level: Level,
    },
    /// Alexander comparison plus a Jones chirality report.
    Endpoints {
        left: BraidWord,
        right: BraidWord,
    },
    TorusIdentify {
        word: BraidWord,
    },
}

struct Case {
    name: String,
    kind: CaseKind,
    params: BTreeMap<String, i64>,
    left: String,
    right: String,
    expected: Status,
    check: Check,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseReport {
    pub case: String,
    pub kind: CaseKind,
    pub params: BTreeMap<String, i64>,
    pub left: String,
    pub right: String,
    pub expected: Status,
    pub status: Status,
    pub unexpected: bool,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub chirality: Option<Chirality>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seconds: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub note: String,
    pub params: Vec<BTreeMap<String, i64>>,
    pub cases: Vec<CaseReport>,
}

impl SuiteReport {
    pub fn unexpected(&self) -> impl Iterator<Item = &CaseReport> {
        self.cases.iter().filter(|c| c.unexpected)
    }

    pub fn all_expected(&self) -> bool {
        self.unexpected().next().is_none()
    }

    /// Renders an aligned text table.
    pub fn to_text(&self) -> String {
        let mut out = format!("suite {}\n{}\n", self.suite, self.note);
        for c in &self.cases {
            let params: Vec<String> = c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            out.push_str(&format!(
                "{:<4} {:<11} {:<18} {:<34} {} vs {}",
                if c.unexpected { "FAIL" } else { "ok" },
                c.status.to_string(),
                c.kind.to_string(),
                format!("{} [{}]", c.case, params.join(" ")),
                c.left,
                c.right,
            ));
            if let Some(s) = c.seconds {
                out.push_str(&format!("  ({s:.2}s)"));
            }
            out.push('\n');
            for e in c.verdict.evidence.iter().filter(|e| !e.equal) {
                out.push_str(&format!(
                    "       {} differs: {} | {}\n",
                    e.invariant, e.left, e.right
                ));
            }
            for n in &c.verdict.notes {
                out.push_str(&format!("       note: {n}\n"));
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct RunOptions {
    pub limits: Limits,
    pub timings: bool,
}

fn params_map(id: SuiteId, values: &[i64]) -> BTreeMap<String, i64> {
    id.param_names()
        .iter()
        .zip(values)
        .map(|(k, &v)| (k.to_string(), v))
        .collect()
}

fn klink(pairs: &[(i64, i64)]) -> Result<BraidWord, FamilyError> {
    klink_braid(&KLinkSpec::new(pairs.to_vec()), Validation::Strict)
}

fn ttk(p: i64, q: i64, r: i64, s: i64) -> Result<BraidWord, FamilyError> {
    twisted_torus_braid(&TwistedTorusSpec::new(p, q, r, s), Validation::Strict)
}

fn sigma1_power(k: i64) -> BraidWord {
    BraidWord::new(2, vec![1; k as usize]).expect("two-strand word")
}

fn level_for_knots(a: &BraidWord, b: &BraidWord) -> Level {
    if a.component_count() == 1 && b.component_count() == 1 {
        Level::Full
    } else {
        Level::AlexanderOnly
    }
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<(), VerifyError> {
    if cond {
        Ok(())
    } else {
        Err(VerifyError::Params(msg()))
    }
}

/// Upper bound on strand counts accepted by the suites.
const MAX_SUITE_STRANDS: i64 = 64;

fn build_cases(id: SuiteId, tuple: &[i64], first: bool) -> Result<Vec<Case>, VerifyError> {
    let params = params_map(id, tuple);
    let case = |name: &str, kind, left: String, right: String, expected, check| Case {
        name: name.to_string(),
        kind,
        params: params.clone(),
        left,
        right,
        expected,
        check,
    };
    let mut cases = Vec::new();
    match (id, tuple) {
        (SuiteId::TorusLemma, &[p, q, s]) => {
            require(
                2 <= q && q < p && s > 0 && p + q * s <= 4 * MAX_SUITE_STRANDS,
                || format!("toruslemma needs 2 <= q < p and s > 0, got {tuple:?}"),
            )?;
            let left = klink(&[(p, q), (q, q * s)])?;
            let right = torus_braid(q, p + q * s)?;
            let level = level_for_knots(&left, &right);
            cases.push(case(
                "K-link vs torus link",
                CaseKind::Stated,
                format!("K(({p},{q}),({q},{}))", q * s),
                format!("T({q},{})", p + q * s),
                Status::Consistent,
                Check::Compare {
                    left: Subject::Braid(left),
                    right: Subject::Braid(right.clone()),
                    level,
                },
            ));
            if first {
                let perturbed = klink(&[(p, q), (q, q * s + 1)])?;
                let level = level_for_knots(&perturbed, &right);
                cases.push(case(
                    "perturbed K-link vs torus link",
                    CaseKind::NegativeControl,
                    format!("K(({p},{q}),({q},{}))", q * s + 1),
                    format!("T({q},{})", p + q * s),
                    Status::Distinct,
                    Check::Compare {
                        left: Subject::Braid(perturbed),
                        right: Subject::Braid(right),
                        level,
                    },
                ));
            }
        }
        (SuiteId::Prop1, &[p, q, k, s]) => {
            require(
                2 <= q && q < p && k > 0 && s > 0 && p + q * s <= MAX_SUITE_STRANDS,
                || format!("prop1 needs 2 <= q < p and k, s > 0, got {tuple:?}"),
            )?;
            let left = klink(&[(p, q + k), (q, q * s)])?;
            let right = klink(&[(p + q * s, q), (p, k)])?;
            let level = level_for_knots(&left, &right);
            cases.push(case(
                "K-link exchange",
                CaseKind::Stated,
                format!("K(({p},{}),({q},{}))", q + k, q * s),
                format!("K(({},{q}),({p},{k}))", p + q * s),
                Status::Consistent,
                Check::Compare {
                    left: Subject::Braid(left.clone()),
                    right: Subject::Braid(right),
                    level,
                },
            ));
            if first {
                let wrong = klink(&[(p + q * s, q), (p, k + 1)])?;
                let level = level_for_knots(&left, &wrong);
                cases.push(case(
                    "K-link exchange with k + 1",
                    CaseKind::NegativeControl,
                    format!("K(({p},{}),({q},{}))", q + k, q * s),
                    format!("K(({},{q}),({p},{}))", p + q * s, k + 1),
                    Status::Distinct,
                    Check::Compare {
                        left: Subject::Braid(left),
                        right: Subject::Braid(wrong),
                        level,
                    },
                ));
            }
        }
        (SuiteId::Lemma3, &[s]) => {
            require((1..=12).contains(&s), || {
                format!("lemma3 needs 1 <= s <= 12, got {s}")
            })?;
            let t = 4 * (s - 1);
            let left = klink(&[(6, 2), (4, 3 + t)])?;
            let right = klink(&[(4, 5 + t), (3, 1)])?;
            cases.push(case(
                "K-knot equivalence",
                CaseKind::Stated,
                format!("K((6,2),(4,{}))", 3 + t),
                format!("K((4,{}),(3,1))", 5 + t),
                Status::Consistent,
                Check::Compare {
                    left: Subject::Braid(left.clone()),
                    right: Subject::Braid(right),
                    level: Level::Full,
                },
            ));
            if first {
                let wrong = klink(&[(4, 9 + t), (3, 1)])?;
                cases.push(case(
                    "K-knot vs next parameter",
                    CaseKind::NegativeControl,
                    format!("K((6,2),(4,{}))", 3 + t),
                    format!("K((4,{}),(3,1))", 9 + t),
                    Status::Distinct,
                    Check::Compare {
                        left: Subject::Braid(left),
                        right: Subject::Braid(wrong),
                        level: Level::Full,
                    },
                ));
            }
        }
        (SuiteId::AnswerMorimoto, &[s]) => {
            require((1..=8).contains(&s), || {
                format!("answerMorimoto needs 1 <= s <= 8, got {s}")
            })?;
            let knot = ttk(4 * s + 1, 4, 2, 1)?;
            let name = format!("T({},4;2,1)", 4 * s + 1);
            cases.extend(morimoto_cable_cases(&params, &knot, &name, s, first)?);
        }
        (SuiteId::AnswerMorimotoCorollary, &[s]) => {
            require((1..=8).contains(&s), || {
                format!("answerMorimoto-corollary needs 1 <= s <= 8, got {s}")
            })?;
            for pairs in [[(4 * s + 1, 4), (2, 2)], [(4, 4 * s + 1), (2, 2)]] {
                let knot = klink_braid(&KLinkSpec::new(pairs.to_vec()), Validation::Relaxed)?;
                let name = KLinkSpec::new(pairs.to_vec()).to_string();
                let mut more = morimoto_cable_cases(&params, &knot, &name, s, first)?;
                first_only_control(&mut more, first && pairs[0].1 == 4);
                cases.extend(more);
            }
        }
        (SuiteId::LemmaSymmetry, &[p, q]) => {
            require(p <= MAX_SUITE_STRANDS, || format!("p = {p} is too large"))?;
            let left = ttk(p, q, p - 1, -1)?;
            let spec = lemma_symmetry_klink(p, q)?;
            let right = klink_braid(&spec, Validation::Strict)?;
            cases.push(case(
                "twisted torus knot vs K-knot",
                CaseKind::Stated,
                format!("T({p},{q};{},-1)", p - 1),
                spec.to_string(),
                Status::Consistent,
                Check::Endpoints {
                    left: left.clone(),
                    right,
                },
            ));
            if first {
                cases.push(case(
                    "twisted torus knot vs untwisted torus knot",
                    CaseKind::NegativeControl,
                    format!("T({p},{q};{},-1)", p - 1),
                    format!("T({p},{q})"),
                    Status::Distinct,
                    Check::Compare {
                        left: Subject::Braid(left),
                        right: Subject::Braid(torus_braid(p, q)?),
                        level: Level::AlexanderOnly,
                    },
                ));
            }
        }
        (SuiteId::Theorem5, &[k, b]) => {
            require(
                k >= 2 && b >= 1 && k * (2 * b + 1) + 2 <= MAX_SUITE_STRANDS,
                || {
                    format!("theorem5 needs k >= 2, b >= 1 and at most {MAX_SUITE_STRANDS} strands, got {tuple:?}")
                },
            )?;
            cases.extend(theorem5_cases(&params, k, b, first, true)?);
        }
        (SuiteId::MorimotoYamada, &[p, q]) => {
            let k = p - 2 * q;
            require(k >= 2 && (q - 1) % k == 0 && q > 1, || {
                format!(
                    "T({p},{q};{},-1) is not of the form p = ka + 2, q = kb + 1",
                    p - 1
                )
            })?;
            let b = (q - 1) / k;
            require(k * (2 * b + 1) + 2 == p && p <= MAX_SUITE_STRANDS, || {
                format!(
                    "T({p},{q};{},-1) is not of the form p = ka + 2, a = 2b + 1",
                    p - 1
                )
            })?;
            cases.extend(theorem5_cases(&params, k, b, first, false)?);
        }
        (SuiteId::LeeCable, &[p, q, k, s]) => {
            require(
                1 < q && q < p && num_integer::gcd(p, q) == 1 && 1 < k * q && k * q < p && s != 0,
                || format!("lee-cable needs coprime 1 < q < p, 1 < kq < p, s != 0, got {tuple:?}"),
            )?;
            require(p <= MAX_SUITE_STRANDS, || format!("p = {p} is too large"))?;
            let knot = ttk(p, q, k * q, s)?;
            let name = format!("T({p},{q};{},{s})", k * q);
            let slope = p + k * k * q * s;
            let inner = k * s + 1;
            let delta = torus_alexander(k, inner.abs())?;
            let companion = if inner > 0 {
                torus_braid(k, inner)?
            } else {
                torus_braid(k, -inner)?.mirror()
            };
            let cable = |c: i64| -> Result<BraidWord, VerifyError> {
                Ok(cable_braid(
                    &companion,
                    q,
                    cable_twist_for_slope(&companion, q, c),
                )?)
            };
            cases.push(case(
                "Alexander vs cable formula",
                CaseKind::Stated,
                name.clone(),
                format!("cable_alexander(T({k},{inner}); {q}, {slope})"),
                Status::Consistent,
                Check::Compare {
                    left: Subject::Braid(knot.clone()),
                    right: Subject::Alexander(cable_alexander(&delta, q, slope)?),
                    level: Level::AlexanderOnly,
                },
            ));
            cases.push(case(
                "cable braid realization",
                CaseKind::Stated,
                name.clone(),
                format!("({q},{slope})-cable of T({k},{inner}) as a braid"),
                Status::Consistent,
                Check::Compare {
                    left: Subject::Braid(knot.clone()),
                    right: Subject::Braid(cable(slope)?),
                    level: Level::Full,
                },
            ));
            if first {
                cases.push(case(
                    "cable with slope shifted by q",
                    CaseKind::NegativeControl,
                    name,
                    format!("cable_alexander(T({k},{inner}); {q}, {})", slope + q),
                    Status::Distinct,
                    Check::Compare {
                        left: Subject::Braid(knot),
                        right: Subject::Alexander(cable_alexander(&delta, q, slope + q)?),
                        level: Level::AlexanderOnly,
                    },
                ));
            }
        }
        (SuiteId::Corollary1Torus, &[m, q]) => {
            require(m >= 1 && q >= 2, || {
                format!("corollary1-torus needs m >= 1, q >= 2, got {tuple:?}")
            })?;
            let p = m * q + m + 1;
            require(p + 2 * q <= MAX_SUITE_STRANDS, || {
                format!("p = {p} is too large")
            })?;
            cases.push(case(
                "torus knot identification",
                CaseKind::Stated,
                format!("K(({},{q}),({p},1))", p + q),
                "some torus knot".into(),
                Status::Consistent,
                Check::TorusIdentify {
                    word: klink(&[(p + q, q), (p, 1)])?,
                },
            ));
            if first {
                cases.push(case(
                    "hyperbolic s = 2 member",
                    CaseKind::NegativeControl,
                    format!("K(({},{q}),({p},1))", p + 2 * q),
                    "some torus knot".into(),
                    Status::Distinct,
                    Check::TorusIdentify {
                        word: klink(&[(p + 2 * q, q), (p, 1)])?,
                    },
                ));
            }
        }
        _ => {
            return Err(VerifyError::Params(format!(
                "{id} takes ({}), got {tuple:?}",
                id.param_names().join(", ")
            )))
        }
    }
    Ok(cases)
}

fn first_only_control(cases: &mut Vec<Case>, keep: bool) {
    if !keep {
        cases.retain(|c| c.kind != CaseKind::NegativeControl);
    }
}

/// Cases comparing `knot` with the cable on `T(2, 2s+1)` whose pattern has
/// slope `4s + 1`.
fn morimoto_cable_cases(
    params: &BTreeMap<String, i64>,
    knot: &BraidWord,
    name: &str,
    s: i64,
    first: bool,
) -> Result<Vec<Case>, VerifyError> {
    let companion = sigma1_power(2 * s + 1);
    let e = 2 * s + 1;
    let pattern = 4 * s + 1;
    let delta = torus_alexander(2, e)?;
    let mk = |case: &str, kind, right: String, expected, check| Case {
        name: case.to_string(),
        kind,
        params: params.clone(),
        left: name.to_string(),
        right,
        expected,
        check,
    };
    let mut out = vec![
        mk(
            "Alexander vs cable formula, Seifert slope 4s+1",
            CaseKind::Stated,
            format!("cable_alexander(T(2,{e}); 2, {pattern})"),
            Status::Consistent,
            Check::Compare {
                left: Subject::Braid(knot.clone()),
                right: Subject::Alexander(cable_alexander(&delta, 2, pattern)?),
                level: Level::AlexanderOnly,
            },
        ),
        mk(
            "cable braid with twist -1",
            CaseKind::Stated,
            format!("cable_braid(s1^{e}, 2, -1)"),
            Status::Consistent,
            Check::Compare {
                left: Subject::Braid(knot.clone()),
                right: Subject::Braid(cable_braid(&companion, 2, -1)?),
                level: Level::Full,
            },
        ),
        mk(
            "cable braid, slope 4s+1 over the blackboard framing",
            CaseKind::FramingCorrected,
            format!("cable_braid(s1^{e}, 2, {pattern})"),
            Status::Consistent,
            Check::Compare {
                left: Subject::Braid(knot.clone()),
                right: Subject::Braid(cable_braid(&companion, 2, pattern)?),
                level: Level::Full,
            },
        ),
    ];
    if first {
        out.push(mk(
            "cable braid with twist 4s+3",
            CaseKind::NegativeControl,
            format!("cable_braid(s1^{e}, 2, {})", pattern + 2),
            Status::Distinct,
            Check::Compare {
                left: Subject::Braid(knot.clone()),
                right: Subject::Braid(cable_braid(&companion, 2, pattern + 2)?),
                level: Level::AlexanderOnly,
            },
        ));
    }
    Ok(out)
}

/// Cases for `T(p, q; p-1, -1)` against the cable on the companion K-knot.
fn theorem5_cases(
    params: &BTreeMap<String, i64>,
    k: i64,
    b: i64,
    first: bool,
    realizations: bool,
) -> Result<Vec<Case>, VerifyError> {
    let (spec, cable) = theorem5_specs(k, b)?;
    let knot = twisted_torus_braid(&spec, Validation::Strict)?;
    let companion = cable.validate(Validation::Strict)?;
    let delta_c = invariants::alexander(&companion).map_err(InvariantError::from)?;
    let stated = cable.c;
    let corrected = stated + 2 * k * positive_braid_genus(&companion)? as i64;
    let comp_name = cable.companion.to_string();
    let name = spec.to_string();
    let mk = |case: &str, kind, right: String, expected, check| Case {
        name: case.to_string(),
        kind,
        params: params.clone(),
        left: name.clone(),
        right,
        expected,
        check,
    };
    let realize = |c: i64| -> Result<BraidWord, VerifyError> {
        Ok(cable_braid(
            &companion,
            k,
            cable_twist_for_slope(&companion, k, c),
        )?)
    };
    let mut out = vec![
        mk(
            "Alexander vs cable formula, stated slope",
            CaseKind::Stated,
            format!("cable_alexander({comp_name}; {k}, {stated})"),
            Status::Consistent,
            Check::Compare {
                left: Subject::Braid(knot.clone()),
                right: Subject::Alexander(cable_alexander(&delta_c, k, stated)?),
                level: Level::AlexanderOnly,
            },
        ),
        mk(
            "Alexander vs cable formula, slope + 2k genus(companion)",
            CaseKind::FramingCorrected,
            format!("cable_alexander({comp_name}; {k}, {corrected})"),
            Status::Consistent,
            Check::Compare {
                left: Subject::Braid(knot.clone()),
                right: Subject::Alexander(cable_alexander(&delta_c, k, corrected)?),
                level: Level::AlexanderOnly,
            },
        ),
    ];
    if realizations {
        out.push(mk(
            "cable braid, stated slope",
            CaseKind::Stated,
            format!("({k},{stated})-cable of {comp_name} as a braid"),
            Status::Consistent,
            Check::Compare {
                left: Subject::Braid(knot.clone()),
                right: Subject::Braid(realize(stated)?),
                level: Level::Full,
            },
        ));
        out.push(mk(
            "mirror of cable braid, corrected slope",
            CaseKind::FramingCorrected,
            format!("mirror of ({k},{corrected})-cable of {comp_name} as a braid"),
            Status::Consistent,
            Check::Compare {
                left: Subject::Braid(knot.clone()),
                right: Subject::Braid(realize(corrected)?.mirror()),
                level: Level::Full,
            },
        ));
    }
    if first {
        out.push(mk(
            "cable formula with slope shifted by k",
            CaseKind::NegativeControl,
            format!("cable_alexander({comp_name}; {k}, {})", corrected + k),
            Status::Distinct,
            Check::Compare {
                left: Subject::Braid(knot),
                right: Subject::Alexander(cable_alexander(&delta_c, k, corrected + k)?),
                level: Level::AlexanderOnly,
            },
        ));
    }
    Ok(out)
}

fn run_case(checker: &Checker, case: &Case) -> (Verdict, Option<Chirality>) {
    match &case.check {
        Check::Compare { left, right, level } => (checker.compare(left, right, *level), None),
        Check::Endpoints { left, right } => {
            let mut v = checker.compare(
                &Subject::Braid(left.clone()),
                &Subject::Braid(right.clone()),
                Level::AlexanderOnly,
            );
            let chirality = checker.chirality(left, right);
            v.notes.push(match &chirality {
                Chirality::Amphichiral | Chirality::Same => "jones: equal".to_string(),
                Chirality::Mirror => "jones: left equals the mirror image of right".to_string(),
                Chirality::Neither => "jones: differs from right and from its mirror".to_string(),
                Chirality::Skipped(r) => format!("jones: skipped ({r})"),
            });
            (v, Some(chirality))
        }
        Check::TorusIdentify { word } => (identify_verdict(checker, word), None),
    }
}

fn identify_verdict(checker: &Checker, word: &BraidWord) -> Verdict {
    let found = match identify_torus_knot(word, checker.limits()) {
        Ok(found) => found,
        Err(e) => return Verdict::skipped(e.to_string()),
    };
    let alexander = match invariants::alexander(word) {
        Ok(a) => a,
        Err(e) => return Verdict::skipped(e.to_string()),
    };
    match found {
        Some(m) => {
            let reference = torus_alexander(m.p, m.q).expect("coprime match");
            let mut notes = vec![format!("consistent with T({},{})", m.p, m.q)];
            notes.push(match m.handedness {
                Some(h) => format!("jones matches the {h:?} torus knot").to_lowercase(),
                None => "jones not compared (over limits)".into(),
            });
            Verdict::from_evidence(
                vec![Evidence {
                    invariant: "alexander".into(),
                    left: alexander.to_string(),
                    right: reference.to_string(),
                    equal: true,
                }],
                notes,
            )
        }
        None => Verdict::from_evidence(
            vec![Evidence {
                invariant: "torus-candidates".into(),
                left: alexander.to_string(),
                right: "no torus knot matches".into(),
                equal: false,
            }],
            Vec::new(),
        ),
    }
}

/// Runs a suite over the given parameter tuples (the defaults when empty).
pub fn run_suite(
    id: SuiteId,
    params: &[Vec<i64>],
    opts: &RunOptions,
) -> Result<SuiteReport, VerifyError> {
    let params = if params.is_empty() {
        id.default_params()
    } else {
        params.to_vec()
    };
    let mut cases = Vec::new();
    for (i, tuple) in params.iter().enumerate() {
        cases.extend(build_cases(id, tuple, i == 0)?);
    }
    let checker = Checker::new(opts.limits);
    let reports = cases
        .par_iter()
        .map(|case| {
            let start = Instant::now();
            let (verdict, chirality) = run_case(&checker, case);
            CaseReport {
                case: case.name.clone(),
                kind: case.kind,
                params: case.params.clone(),
                left: case.left.clone(),
                right: case.right.clone(),
                expected: case.expected,
                status: verdict.status,
                unexpected: verdict.status != case.expected,
                verdict,
                chirality,
                seconds: opts.timings.then(|| start.elapsed().as_secs_f64()),
            }
        })
        .collect();
    Ok(SuiteReport {
        suite: id.as_str().to_string(),
        note: CONSISTENT_MEANS.to_string(),
        params: params.iter().map(|t| params_map(id, t)).collect(),
        cases: reports,
    })
}

/// One twisted torus knot examined by [`scan_conjecture`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanRow {
    pub knot: String,
    pub letters: usize,
    pub status: ScanStatus,
    pub torus: Option<invariants::TorusMatch>,
    /// `s` with Alexander equal to the `(2, 4s+1)`-cable of `T(2, 2s+1)`.
    pub seifert_cable_s: Option<i64>,
    /// `s` with Alexander equal to the `(2, 8s+3)`-cable of `T(2, 2s+1)`,
    /// i.e. slope `4s+1` over the blackboard framing of `σ_1^(2s+1)`.
    pub blackboard_cable_s: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanStatus {
    /// Matches a cable of the family, or matches no torus knot.
    Flagged,
    TorusKnot,
    Skipped,
}

impl fmt::Display for ScanStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScanStatus::Flagged => "flagged",
            ScanStatus::TorusKnot => "torus-knot",
            ScanStatus::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub p_max: i64,
    pub q_max: i64,
    pub crossing_cap: usize,
    pub note: String,
    pub rows: Vec<ScanRow>,
}

impl ScanReport {
    pub fn flagged(&self) -> impl Iterator<Item = &ScanRow> {
        self.rows.iter().filter(|r| r.status == ScanStatus::Flagged)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "scan p <= {}, q <= {}, crossings <= {}\n{}\n",
            self.p_max, self.q_max, self.crossing_cap, self.note
        );
        for r in &self.rows {
            let torus = r
                .torus
                .map_or("-".to_string(), |m| format!("T({},{})", m.p, m.q));
            let s = |v: Option<i64>| v.map_or("-".to_string(), |s| s.to_string());
            out.push_str(&format!(
                "{:<16} {:<10} torus {:<9} cable(4s+1) {:<3} cable(8s+3) {:<3} {}\n",
                r.knot,
                r.status.to_string(),
                torus,
                s(r.seifert_cable_s),
                s(r.blackboard_cable_s),
                r.reason.as_deref().unwrap_or(""),
            ));
        }
        out
    }
}

/// Scans `T(p, q; r, 1)` for `2 <= q < p <= p_max`, `q <= q_max` and
/// `2 <= r < p` with `r` not a multiple of `q`. Links are listed as skipped. Each knot is matched
/// against torus knots and against the cables of `T(2, 2s+1)` with pattern
/// slope `4s+1`, read both over the Seifert framing and over the blackboard
/// framing of `σ_1^(2s+1)`. An evidence table, not a proof.
pub fn scan_conjecture(
    p_max: i64,
    q_max: i64,
    crossing_cap: usize,
    limits: &Limits,
) -> Result<ScanReport, VerifyError> {
    require(p_max <= MAX_SUITE_STRANDS, || {
        format!("p_max = {p_max} is too large")
    })?;
    let mut specs = Vec::new();
    for p in 3..=p_max {
        for q in 2..p.min(q_max + 1) {
            for r in (2..p).filter(|r| r % q != 0) {
                specs.push(TwistedTorusSpec::new(p, q, r, 1));
            }
        }
    }
    let rows = specs
        .par_iter()
        .map(|spec| scan_one(spec, crossing_cap, limits))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ScanReport {
        p_max,
        q_max,
        crossing_cap,
        note: "flagged rows are candidates for satellite structure; evidence, not proof".into(),
        rows,
    })
}

fn scan_one(spec: &TwistedTorusSpec, cap: usize, limits: &Limits) -> Result<ScanRow, VerifyError> {
    let w = twisted_torus_braid(spec, Validation::Strict)?;
    let mut row = ScanRow {
        knot: spec.to_string(),
        letters: w.len(),
        status: ScanStatus::Skipped,
        torus: None,
        seifert_cable_s: None,
        blackboard_cable_s: None,
        reason: None,
    };
    if w.len() > cap {
        row.reason = Some(format!("{} crossings over the cap", w.len()));
        return Ok(row);
    }
    let comps = w.component_count();
    if comps != 1 {
        row.reason = Some(format!("closure has {comps} components"));
        return Ok(row);
    }
    let delta = invariants::alexander(&w).map_err(InvariantError::from)?;
    let span = delta.span();
    // the (2, c)-cable of T(2, 2s+1) has degree 4s + c - 1
    for s in (1..).take_while(|s| 4 * s + 4 * s <= span) {
        let companion = torus_alexander(2, 2 * s + 1)?;
        if cable_alexander(&companion, 2, 4 * s + 1)? == delta {
            row.seifert_cable_s = Some(s);
        }
        if cable_alexander(&companion, 2, 8 * s + 3)? == delta {
            row.blackboard_cable_s = Some(s);
        }
    }
    let jones_limits = Limits {
        max_crossings: limits.max_crossings.min(cap),
        ..*limits
    };
    row.torus = identify_torus_knot(&w, &jones_limits)?;
    row.status =
        if row.seifert_cable_s.is_some() || row.blackboard_cable_s.is_some() || row.torus.is_none()
        {
            ScanStatus::Flagged
        } else {
            ScanStatus::TorusKnot
        };
    Ok(row)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn equivalent_presentations_are_consistent() {
        let lim = Limits::default();
        let trefoil = torus_braid(2, 3).unwrap();
        // conjugated and stabilized
        let other = b(3, &[1, 1, 2, 1]);
        let v = check_equivalent(&trefoil, &other, Level::Full, &lim);
        assert_eq!(v.status, Status::Consistent, "{v:?}");
        assert!(v.evidence.iter().any(|e| e.invariant == "jones"));
    }

    #[test]
    fn negative_controls() {
        let lim = Limits::default();
        let t23 = torus_braid(2, 3).unwrap();
        let v = check_equivalent(
            &t23,
            &torus_braid(2, 5).unwrap(),
            Level::AlexanderOnly,
            &lim,
        );
        assert_eq!(v.status, Status::Distinct);
        let v = check_equivalent(&t23, &t23.mirror(), Level::Full, &lim);
        assert_eq!(v.status, Status::Distinct);
        let differing: Vec<_> = v.evidence.iter().filter(|e| !e.equal).collect();
        assert_eq!(differing.len(), 1);
        assert_eq!(differing[0].invariant, "jones");
    }

    #[test]
    fn suite_ids_round_trip() {
        for id in SuiteId::ALL {
            assert_eq!(id.as_str().parse::<SuiteId>().unwrap(), id);
            assert_eq!(
                serde_json::to_string(&id).unwrap(),
                format!("\"{}\"", id.as_str())
            );
        }
        assert!("nope".parse::<SuiteId>().is_err());
    }

    #[test]
    fn param_parsing() {
        assert_eq!(
            parse_params("5,2,1; 7,3,1").unwrap(),
            vec![vec![5, 2, 1], vec![7, 3, 1]]
        );
        assert!(parse_params("5,x").is_err());
        let opts = RunOptions::default();
        assert!(matches!(
            run_suite(SuiteId::TorusLemma, &[vec![5, 2]], &opts),
            Err(VerifyError::Params(_))
        ));
        assert!(run_suite(SuiteId::TorusLemma, &[vec![2, 5, 1]], &opts).is_err());
    }

    #[test]
    fn toruslemma_with_control() {
        let r = run_suite(
            SuiteId::TorusLemma,
            &[vec![5, 2, 1]],
            &RunOptions::default(),
        )
        .unwrap();
        assert_eq!(r.cases.len(), 2);
        assert_eq!(r.cases[0].status, Status::Consistent);
        assert_eq!(r.cases[1].kind, CaseKind::NegativeControl);
        assert_eq!(r.cases[1].status, Status::Distinct);
        assert!(r.all_expected());
    }

    #[test]
    fn lee_cable_holds() {
        let r = run_suite(SuiteId::LeeCable, &[], &RunOptions::default()).unwrap();
        assert!(r.all_expected(), "{}", r.to_text());
    }
}
