//! Exact invariants of braid closures and closed-form oracles.

pub mod alexander;
pub mod jones;

use std::env;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braid::BraidWord;
use crate::poly::LaurentPoly;
pub use alexander::{alexander, AlexanderError};
pub use jones::{jones, jones_state_sum, JonesError, JonesPoly};

pub const TL_STRANDS_ENV: &str = "BRAIDKNOT_TL_MAX_STRANDS";
pub const MAX_CROSSINGS_ENV: &str = "BRAIDKNOT_MAX_CROSSINGS";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error(transparent)]
    Alexander(#[from] AlexanderError),
    #[error(transparent)]
    Jones(#[from] JonesError),
    #[error("word has negative letters; the genus formula needs a positive braid")]
    NotPositive,
    #[error("closure has {0} components; a knot is required")]
    NotKnot(usize),
    #[error("{0}")]
    Parameters(String),
    #[error("invalid value {value:?} for {name}")]
    BadLimit { name: &'static str, value: String },
}

/// Resource limits for the Jones computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub tl_max_strands: usize,
    pub max_crossings: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            tl_max_strands: 10,
            max_crossings: 400,
        }
    }
}

impl Limits {
    /// Defaults overridden by `BRAIDKNOT_TL_MAX_STRANDS` and
    /// `BRAIDKNOT_MAX_CROSSINGS` when set.
    pub fn from_env() -> Result<Self, InvariantError> {
        let mut limits = Self::default();
        for (name, slot) in [
            (TL_STRANDS_ENV, &mut limits.tl_max_strands),
            (MAX_CROSSINGS_ENV, &mut limits.max_crossings),
        ] {
            if let Ok(value) = env::var(name) {
                *slot = value
                    .trim()
                    .parse()
                    .map_err(|_| InvariantError::BadLimit { name, value })?;
            }
        }
        if limits.tl_max_strands > 16 {
            return Err(InvariantError::BadLimit {
                name: TL_STRANDS_ENV,
                value: limits.tl_max_strands.to_string(),
            });
        }
        Ok(limits)
    }
}

/// `(t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1))`, normalized.
pub fn torus_alexander(p: i64, q: i64) -> Result<LaurentPoly, InvariantError> {
    if p < 1 || q < 1 {
        return Err(InvariantError::Parameters(format!(
            "torus parameters must be positive, got ({p}, {q})"
        )));
    }
    if p.gcd(&q) != 1 {
        return Err(InvariantError::Parameters(format!(
            "T({p},{q}) is a link; gcd must be 1"
        )));
    }
    let one = LaurentPoly::one();
    let pm1 = |k: i64| &LaurentPoly::power(k) - &one;
    let num = &pm1(p * q) * &pm1(1);
    let den = &pm1(p) * &pm1(q);
    let quotient = num
        .div_exact(&den)
        .expect("cyclotomic quotient is exact for coprime p, q");
    Ok(quotient.normalize_unit())
}

/// Jones polynomial of the torus knot `T(p, q)` with `p, q > 0` (the closure
/// of the positive torus braid): `t^((p-1)(q-1)/2) (1 - t^(p+1) - t^(q+1) +
/// t^(p+q)) / (1 - t^2)`.
pub fn torus_jones(p: i64, q: i64) -> Result<JonesPoly, InvariantError> {
    torus_alexander(p, q)?;
    let one = LaurentPoly::one();
    let num = &(&(&one - &LaurentPoly::power(p + 1)) - &LaurentPoly::power(q + 1))
        + &LaurentPoly::power(p + q);
    let den = &one - &LaurentPoly::power(2);
    let quotient = num
        .div_exact(&den)
        .expect("torus knot Jones numerator is divisible by 1 - t^2");
    Ok(JonesPoly::from_t(&quotient.shift((p - 1) * (q - 1) / 2)))
}

/// Alexander polynomial of the `(m, c)`-cable on a companion with Alexander
/// polynomial `delta_c`: `Δ_{T(m,c)}(t) · Δ_C(t^m)`, normalized. The slope `c`
/// is measured against the companion's Seifert longitude; its sign does not
/// affect the result.
pub fn cable_alexander(
    delta_c: &LaurentPoly,
    m: i64,
    c: i64,
) -> Result<LaurentPoly, InvariantError> {
    if m < 1 {
        return Err(InvariantError::Parameters(format!(
            "cable needs m >= 1, got {m}"
        )));
    }
    if m.gcd(&c) != 1 {
        return Err(InvariantError::Parameters(format!(
            "gcd({m}, {c}) != 1: the cable is not a knot"
        )));
    }
    let pattern = if m == 1 {
        LaurentPoly::one()
    } else {
        torus_alexander(m, c.abs())?
    };
    Ok((&pattern * &delta_c.substitute_power(m)).normalize_unit())
}

/// Seifert genus `(c - n + 1) / 2` of a positive braid whose closure is a
/// knot. For knot closures `c - n + 1` is always even.
pub fn positive_braid_genus(w: &BraidWord) -> Result<u64, InvariantError> {
    if !w.is_positive() {
        return Err(InvariantError::NotPositive);
    }
    let comps = w.component_count();
    if comps != 1 {
        return Err(InvariantError::NotKnot(comps));
    }
    let euler = w.len() as u64 + 1 - w.strands() as u64;
    debug_assert!(euler.is_multiple_of(2));
    Ok(euler / 2)
}

/// Invariants used to compare closures. Equality ignores `strands`,
/// `letters` and `jones_skipped`, which are reporting data, and compares the
/// optional `jones` and `genus` only when both sides have them (genus exists
/// only for positive words), so it is not transitive across partial
/// fingerprints.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InvariantFingerprint {
    pub components: usize,
    pub alexander: LaurentPoly,
    pub jones: Option<JonesPoly>,
    pub jones_skipped: Option<String>,
    pub genus: Option<u64>,
    pub strands: usize,
    pub letters: usize,
}

impl PartialEq for InvariantFingerprint {
    fn eq(&self, other: &Self) -> bool {
        self.components == other.components
            && self.alexander == other.alexander
            && agree(&self.jones, &other.jones)
            && agree(&self.genus, &other.genus)
    }
}

fn agree<T: PartialEq>(a: &Option<T>, b: &Option<T>) -> bool {
    match (a, b) {
        (Some(x), Some(y)) => x == y,
        _ => true,
    }
}

/// Which polynomial invariants to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Level {
    AlexanderOnly,
    Full,
}

pub fn fingerprint(
    w: &BraidWord,
    level: Level,
    limits: &Limits,
) -> Result<InvariantFingerprint, InvariantError> {
    let alexander = alexander(w)?;
    let (jones, jones_skipped) = match level {
        Level::AlexanderOnly => (None, Some("not requested".to_string())),
        Level::Full => match jones::jones(w, limits) {
            Ok(v) => (Some(v), None),
            Err(e @ (JonesError::TooManyStrands { .. } | JonesError::TooManyCrossings { .. })) => {
                (None, Some(e.to_string()))
            }
            Err(e) => return Err(e.into()),
        },
    };
    Ok(InvariantFingerprint {
        components: w.component_count(),
        alexander,
        jones,
        jones_skipped,
        genus: positive_braid_genus(w).ok(),
        strands: w.strands(),
        letters: w.len(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Handedness {
    /// Jones matches the closure of the positive torus braid.
    Positive,
    /// Jones matches its mirror image.
    Negative,
}

/// A torus knot `T(p, q)`, `p < q`, whose invariants agree with a closure.
/// Agreement is evidence, not proof.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusMatch {
    pub p: i64,
    pub q: i64,
    /// Present when Jones was compared.
    pub handedness: Option<Handedness>,
}

/// Searches coprime `2 <= p < q` with `(p-1)(q-1)` equal to the Alexander
/// degree and returns the pair whose Alexander polynomial, and Jones
/// polynomial up to mirror when within limits, agree with the closure.
pub fn identify_torus_knot(
    w: &BraidWord,
    limits: &Limits,
) -> Result<Option<TorusMatch>, InvariantError> {
    let comps = w.component_count();
    if comps != 1 {
        return Err(InvariantError::NotKnot(comps));
    }
    let delta = alexander(w)?;
    let span = delta.span();
    if let Ok(g) = positive_braid_genus(w) {
        if 2 * g as i64 != span {
            return Ok(None);
        }
    }
    let candidates: Vec<(i64, i64)> = (2..)
        .take_while(|&q| (q - 1) * q <= span)
        .flat_map(|q| {
            let p = span / (q - 1) + 1;
            (span % (q - 1) == 0 && p > q && p.gcd(&q) == 1).then_some((p, q))
        })
        .filter(|&(p, q)| torus_alexander(p, q).is_ok_and(|d| d == delta))
        .collect();
    let Some(&(q, p)) = candidates.first() else {
        return Ok(None);
    };
    debug_assert_eq!(candidates.len(), 1);
    let handedness = match jones::jones(w, limits) {
        Ok(v) => {
            let reference = torus_jones(p, q)?;
            if v == reference {
                Some(Handedness::Positive)
            } else if v == reference.mirror() {
                Some(Handedness::Negative)
            } else {
                return Ok(None);
            }
        }
        Err(JonesError::TooManyStrands { .. } | JonesError::TooManyCrossings { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    Ok(Some(TorusMatch { p, q, handedness }))
}
