//! Constructors for torus links, twisted torus links, K-links, T-links, half
//! twists and cables, plus the parameter families built from them.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braid::{BraidError, BraidWord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameters: {0}")]
    Parameters(String),
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error("cable companion must be a knot, got {0} components")]
    CompanionNotKnot(usize),
    #[error("spec parse error: {0}")]
    Parse(String),
}

fn param_err<T>(msg: impl Into<String>) -> Result<T, FamilyError> {
    Err(FamilyError::Parameters(msg.into()))
}

/// Strict validation enforces the standing hypotheses of each family; relaxed
/// validation only enforces what is needed to write down a braid word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Validation {
    #[default]
    Strict,
    Relaxed,
}

/// Appends `reps` copies of `σ_1 ... σ_{r-1}`, or of
/// `σ_{r-1}^-1 ... σ_1^-1` when `reps` is negative.
fn push_twist_block(letters: &mut Vec<i32>, r: i64, reps: i64) {
    let r = r as i32;
    for _ in 0..reps.unsigned_abs() {
        if reps > 0 {
            letters.extend(1..r);
        } else {
            letters.extend((1..r).rev().map(|i| -i));
        }
    }
}

/// `(σ_1 ... σ_{p-1})^q` on `p` strands.
pub fn torus_braid(p: i64, q: i64) -> Result<BraidWord, FamilyError> {
    if p < 2 {
        return param_err(format!("torus braid needs p >= 2, got {p}"));
    }
    if q < 1 {
        return param_err(format!("torus braid needs q >= 1, got {q}"));
    }
    let mut letters = Vec::with_capacity(((p - 1) * q) as usize);
    push_twist_block(&mut letters, p, q);
    Ok(BraidWord::new(p as usize, letters)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwistedTorusSpec {
    pub p: i64,
    pub q: i64,
    pub r: i64,
    pub s: i64,
}

impl TwistedTorusSpec {
    pub fn new(p: i64, q: i64, r: i64, s: i64) -> Self {
        Self { p, q, r, s }
    }

    pub fn validate(&self, mode: Validation) -> Result<(), FamilyError> {
        let Self { p, q, r, s } = *self;
        if s == 0 {
            return param_err("twisted torus knot needs s != 0");
        }
        if r < 2 || r > p {
            return param_err(format!("need 2 <= r <= p, got r={r}, p={p}"));
        }
        match mode {
            Validation::Strict if !(2 <= q && q < p) => {
                param_err(format!("need 2 <= q < p, got p={p}, q={q}"))
            }
            Validation::Relaxed if q < 1 => param_err(format!("need q >= 1, got {q}")),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for TwistedTorusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{};{},{})", self.p, self.q, self.r, self.s)
    }
}

/// `(σ_1…σ_{p-1})^q` followed by `s` full twists on the first `r` strands;
/// negative twists use the block `(σ_{r-1}^-1 … σ_1^-1)^{|rs|}`.
pub fn twisted_torus_braid(
    spec: &TwistedTorusSpec,
    mode: Validation,
) -> Result<BraidWord, FamilyError> {
    spec.validate(mode)?;
    let mut letters = Vec::new();
    push_twist_block(&mut letters, spec.p, spec.q);
    push_twist_block(&mut letters, spec.r, spec.r * spec.s);
    Ok(BraidWord::new(spec.p as usize, letters)?)
}

/// Stacked twist blocks, largest `r` first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KLinkSpec {
    pub pairs: Vec<(i64, i64)>,
}

impl KLinkSpec {
    pub fn new(pairs: impl Into<Vec<(i64, i64)>>) -> Self {
        Self {
            pairs: pairs.into(),
        }
    }

    pub fn validate(&self, mode: Validation) -> Result<(), FamilyError> {
        validate_blocks(&self.pairs, mode, |a, b| a > b, "strictly decrease")
    }

    pub fn strands(&self) -> i64 {
        self.pairs.iter().map(|&(r, _)| r).max().unwrap_or(1)
    }
}

impl fmt::Display for KLinkSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K(")?;
        write_pairs(f, &self.pairs)?;
        write!(f, ")")
    }
}

/// Stacked twist blocks, smallest `r` first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TLinkSpec {
    pub pairs: Vec<(i64, i64)>,
}

impl TLinkSpec {
    pub fn new(pairs: impl Into<Vec<(i64, i64)>>) -> Self {
        Self {
            pairs: pairs.into(),
        }
    }

    pub fn validate(&self, mode: Validation) -> Result<(), FamilyError> {
        validate_blocks(&self.pairs, mode, |a, b| a < b, "strictly increase")
    }
}

impl fmt::Display for TLinkSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T(")?;
        write_pairs(f, &self.pairs)?;
        write!(f, ")")
    }
}

fn write_pairs(f: &mut fmt::Formatter<'_>, pairs: &[(i64, i64)]) -> fmt::Result {
    for (k, (r, s)) in pairs.iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "({r},{s})")?;
    }
    Ok(())
}

fn validate_blocks(
    pairs: &[(i64, i64)],
    mode: Validation,
    ordered: impl Fn(i64, i64) -> bool,
    order_name: &str,
) -> Result<(), FamilyError> {
    if pairs.is_empty() {
        return param_err("at least one (r, s) pair is required");
    }
    for &(r, s) in pairs {
        if r < 2 {
            return param_err(format!("every r must exceed 1, got {r}"));
        }
        match mode {
            Validation::Strict if s <= 0 => {
                return param_err(format!("every s must be positive, got {s}"))
            }
            Validation::Relaxed if s == 0 => return param_err("every s must be nonzero"),
            _ => {}
        }
    }
    if mode == Validation::Strict && !pairs.windows(2).all(|w| ordered(w[0].0, w[1].0)) {
        return param_err(format!("the r values must {order_name}"));
    }
    Ok(())
}

fn blocks_braid(pairs: &[(i64, i64)]) -> Result<BraidWord, FamilyError> {
    let strands = pairs.iter().map(|&(r, _)| r).max().unwrap_or(1);
    let mut letters = Vec::new();
    for &(r, s) in pairs {
        push_twist_block(&mut letters, r, s);
    }
    Ok(BraidWord::new(strands as usize, letters)?)
}

/// `∏ (σ_1 … σ_{r_i - 1})^{s_i}`, largest block first.
pub fn klink_braid(spec: &KLinkSpec, mode: Validation) -> Result<BraidWord, FamilyError> {
    spec.validate(mode)?;
    blocks_braid(&spec.pairs)
}

/// `∏ (σ_1 … σ_{r_i - 1})^{s_i}`, smallest block first.
pub fn tlink_braid(spec: &TLinkSpec, mode: Validation) -> Result<BraidWord, FamilyError> {
    spec.validate(mode)?;
    blocks_braid(&spec.pairs)
}

/// Half twist on `k` strands.
///
/// Positive: `(σ_1…σ_{k-1})(σ_1…σ_{k-2})…(σ_1)`.
/// Negative: `(σ_{k-1}^-1…σ_1^-1)(σ_{k-1}^-1…σ_2^-1)…(σ_{k-1}^-1)`.
pub fn half_twist(k: i64, positive: bool) -> Result<BraidWord, FamilyError> {
    if k < 2 {
        return param_err(format!("half twist needs k >= 2, got {k}"));
    }
    let k = k as i32;
    let mut letters = Vec::with_capacity((k * (k - 1) / 2) as usize);
    for row in 0..k - 1 {
        if positive {
            letters.extend(1..k - row);
        } else {
            letters.extend((1 + row..k).rev().map(|i| -i));
        }
    }
    Ok(BraidWord::new(k as usize, letters)?)
}

/// Word on `2m` strands crossing the bundle of strands `1..=m` over the
/// bundle `m+1..=2m`, shifted so the left bundle starts at strand `base + 1`.
///
/// Row `r = 0..m` moves the strand at position `base + m - r` right by `m`
/// places: letters `base + m - r, …, base + 2m - r - 1`. All letters are
/// positive and each pair of strands from different bundles crosses once.
fn bundle_crossing(base: i32, m: i32) -> Vec<i32> {
    let mut out = Vec::with_capacity((m * m) as usize);
    for r in 0..m {
        out.extend(base + m - r..base + 2 * m - r);
    }
    out
}

/// Satellite cabling: each strand of `companion` becomes `m` parallel strands,
/// each letter `±i` becomes the corresponding bundle crossing (its inverse
/// for negative letters), then `(σ_1…σ_{m-1})^j` is appended on the first
/// `m` strands.
///
/// The closure is the `(m, m·e + j)`-cable of the companion's closure, where
/// `e` is the companion's exponent sum and the second slope coordinate is
/// measured against the Seifert longitude.
pub fn cable_braid(companion: &BraidWord, m: i64, j: i64) -> Result<BraidWord, FamilyError> {
    if m < 1 {
        return param_err(format!("cable needs m >= 1, got {m}"));
    }
    let comps = companion.component_count();
    if comps != 1 {
        return Err(FamilyError::CompanionNotKnot(comps));
    }
    let mi = m as i32;
    let mut letters = Vec::with_capacity(companion.len() * (m * m) as usize);
    for &e in companion.letters() {
        let base = (e.abs() - 1) * mi;
        let block = bundle_crossing(base, mi);
        if e > 0 {
            letters.extend(block);
        } else {
            letters.extend(block.iter().rev().map(|x| -x));
        }
    }
    if m > 1 {
        push_twist_block(&mut letters, m, j);
    } else if j != 0 {
        return param_err("a 1-strand pattern admits no twisting (j must be 0)");
    }
    Ok(BraidWord::new(companion.strands() * m as usize, letters)?)
}

/// Seifert-framed slope of [`cable_braid`]`(companion, m, j)`.
pub fn cable_slope(companion: &BraidWord, m: i64, j: i64) -> i64 {
    m * companion.exponent_sum() + j
}

/// `j` for [`cable_braid`] realizing the `(m, c)`-cable of `companion`.
pub fn cable_twist_for_slope(companion: &BraidWord, m: i64, c: i64) -> i64 {
    c - m * companion.exponent_sum()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Companion {
    Braid { word: BraidWord },
    KLink { spec: KLinkSpec },
    Torus { p: i64, q: i64 },
}

impl Companion {
    pub fn braid(&self, mode: Validation) -> Result<BraidWord, FamilyError> {
        match self {
            Companion::Braid { word } => Ok(word.clone()),
            Companion::KLink { spec } => klink_braid(spec, mode),
            Companion::Torus { p, q } => torus_braid(*p, *q),
        }
    }
}

impl fmt::Display for Companion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Companion::Braid { word } => write!(f, "[{word}]"),
            Companion::KLink { spec } => write!(f, "{spec}"),
            Companion::Torus { p, q } => write!(f, "T({p},{q})"),
        }
    }
}

/// Cable with companion and pattern `(m, c)`. `c` is the pattern's slope
/// relative to the blackboard framing of the companion's standard braid
/// closure, so the Seifert-framed slope is `c + m·e` with `e` the
/// companion's exponent sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CableSpec {
    pub companion: Companion,
    pub m: i64,
    pub c: i64,
}

impl CableSpec {
    pub fn validate(&self, mode: Validation) -> Result<BraidWord, FamilyError> {
        if self.m < 1 {
            return param_err(format!("cable needs m >= 1, got {}", self.m));
        }
        let w = self.companion.braid(mode)?;
        match w.component_count() {
            1 => Ok(w),
            n => Err(FamilyError::CompanionNotKnot(n)),
        }
    }

    /// Seifert-framed slope `c + m·e`.
    pub fn seifert_slope(&self, mode: Validation) -> Result<i64, FamilyError> {
        let w = self.validate(mode)?;
        Ok(self.c + self.m * w.exponent_sum())
    }

    /// Braid realizing this cable: the companion cabled with `j = c`.
    pub fn braid(&self, mode: Validation) -> Result<BraidWord, FamilyError> {
        let w = self.validate(mode)?;
        cable_braid(&w, self.m, self.c)
    }
}

impl fmt::Display for CableSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C({}; {},{})", self.companion, self.m, self.c)
    }
}

/// Pairs `(r, 1)` for `r = hi, hi-1, …, lo` (empty when `hi < lo`).
fn unit_run(hi: i64, lo: i64) -> impl Iterator<Item = (i64, i64)> {
    (lo..=hi).rev().map(|r| (r, 1))
}

/// The K-knot equivalent to `T(p, q; p-1, -1)`:
/// `K((p-1,k), (ka,1), …, (k(1+b)+1,1), (kb,1), …, (2,1))` with `k = p - 2q`,
/// `a = (p-2)/k`, `b = (q-1)/k`.
pub fn lemma_symmetry_klink(p: i64, q: i64) -> Result<KLinkSpec, FamilyError> {
    let k = p - 2 * q;
    if k < 2 {
        return param_err(format!("k = p - 2q = {k} must be at least 2"));
    }
    if (p - 2) % k != 0 {
        return param_err(format!("k = {k} must divide p - 2 = {}", p - 2));
    }
    let a = (p - 2) / k;
    if a % 2 == 0 {
        return param_err(format!("a = (p-2)/k = {a} must be odd"));
    }
    if (q - 1) % k != 0 {
        return param_err(format!("k = {k} must divide q - 1 = {}", q - 1));
    }
    let b = (q - 1) / k;
    debug_assert_eq!(a, 2 * b + 1);
    let mut pairs = vec![(p - 1, k)];
    pairs.extend(unit_run(k * a, k * (1 + b) + 1));
    pairs.extend(unit_run(k * b, 2));
    Ok(KLinkSpec::new(pairs))
}

/// Companion `K((a,2), (a-1,1), …, (b+2,1), (b,1), …, (2,1))`: the pair with
/// first entry `b + 1` is omitted.
pub fn theorem5_companion(a: i64, b: i64) -> KLinkSpec {
    let mut pairs = vec![(a, 2)];
    pairs.extend(unit_run(a - 1, b + 2));
    pairs.extend(unit_run(b, 2));
    KLinkSpec::new(pairs)
}

/// `T(p, q; p-1, -1)` with `a = 2b+1`, `p = ka+2`, `q = kb+1` together with its
/// cable description: pattern `(k, p - 1 + kb)` on [`theorem5_companion`].
pub fn theorem5_specs(k: i64, b: i64) -> Result<(TwistedTorusSpec, CableSpec), FamilyError> {
    if k < 2 || b < 1 {
        return param_err(format!("need k >= 2 and b >= 1, got k={k}, b={b}"));
    }
    let a = 2 * b + 1;
    let p = k * a + 2;
    let q = k * b + 1;
    let ttk = TwistedTorusSpec::new(p, q, p - 1, -1);
    let cable = CableSpec {
        companion: Companion::KLink {
            spec: theorem5_companion(a, b),
        },
        m: k,
        c: p - 1 + k * b,
    };
    Ok((ttk, cable))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorimotoParams {
    pub spec: TwistedTorusSpec,
    /// `(k1 - 1) x1 + x2`, always greater than 1.
    pub p_minus_r: i64,
}

/// The satellite twisted torus knots parametrized by `e, k1, k2, x1, x2`.
pub fn morimoto_family(
    e: i64,
    k1: i64,
    k2: i64,
    x1: i64,
    x2: i64,
) -> Result<MorimotoParams, FamilyError> {
    if e <= 0 || k1 <= 1 || k2 <= 1 || x1 <= 0 || x2 <= 0 {
        return param_err("need e > 0, k1 > 1, k2 > 1, x1 > 0, x2 > 0");
    }
    if x1.gcd(&x2) != 1 {
        return param_err(format!("need gcd(x1, x2) = 1, got gcd({x1}, {x2}) != 1"));
    }
    let g = k1 + k2 - 1;
    let p = ((e + 1) * g + 1) * x1 + (e + 1) * x2;
    let q = (e * g + 1) * x1 + e * x2;
    let r = ((e + 1) * g - k1 + 2) * x1 + e * x2;
    Ok(MorimotoParams {
        spec: TwistedTorusSpec::new(p, q, r, -1),
        p_minus_r: p - r,
    })
}

/// A parsed family description, convertible to a braid word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilySpec {
    Braid {
        word: BraidWord,
    },
    Torus {
        p: i64,
        q: i64,
    },
    TwistedTorus {
        spec: TwistedTorusSpec,
    },
    KLink {
        spec: KLinkSpec,
    },
    TLink {
        spec: TLinkSpec,
    },
    Cable {
        companion: Box<FamilySpec>,
        m: i64,
        j: i64,
    },
}

impl FamilySpec {
    pub fn braid(&self, mode: Validation) -> Result<BraidWord, FamilyError> {
        match self {
            FamilySpec::Braid { word } => Ok(word.clone()),
            FamilySpec::Torus { p, q } => torus_braid(*p, *q),
            FamilySpec::TwistedTorus { spec } => twisted_torus_braid(spec, mode),
            FamilySpec::KLink { spec } => klink_braid(spec, mode),
            FamilySpec::TLink { spec } => tlink_braid(spec, mode),
            FamilySpec::Cable { companion, m, j } => cable_braid(&companion.braid(mode)?, *m, *j),
        }
    }

    /// Parses `torus p q`, `ttk p q r s`, `klink r1,s1 r2,s2 …`,
    /// `tlink r1,s1 …`, `cable (<spec>) m j`, or a raw braid `n: e1 e2 …`.
    pub fn parse(input: &str) -> Result<Self, FamilyError> {
        let s = input.trim();
        let perr = |m: String| FamilyError::Parse(m);
        let (head, rest) = s.split_once(char::is_whitespace).unwrap_or((s, ""));
        let rest = rest.trim();
        let ints = |txt: &str, want: usize| -> Result<Vec<i64>, FamilyError> {
            let v: Vec<i64> = txt
                .split_whitespace()
                .map(|t| {
                    t.parse()
                        .map_err(|_| perr(format!("`{t}` is not an integer")))
                })
                .collect::<Result<_, _>>()?;
            if v.len() != want {
                return Err(perr(format!(
                    "`{head}` takes {want} integers, got {}",
                    v.len()
                )));
            }
            Ok(v)
        };
        let pairs = |txt: &str| -> Result<Vec<(i64, i64)>, FamilyError> {
            txt.split_whitespace()
                .map(|t| {
                    let (r, s) = t
                        .split_once(',')
                        .ok_or_else(|| perr(format!("expected `r,s`, got `{t}`")))?;
                    let num = |x: &str| {
                        x.trim()
                            .parse::<i64>()
                            .map_err(|_| perr(format!("`{x}` is not an integer")))
                    };
                    Ok((num(r)?, num(s)?))
                })
                .collect()
        };
        match head {
            "torus" => {
                let v = ints(rest, 2)?;
                Ok(FamilySpec::Torus { p: v[0], q: v[1] })
            }
            "ttk" => {
                let v = ints(rest, 4)?;
                Ok(FamilySpec::TwistedTorus {
                    spec: TwistedTorusSpec::new(v[0], v[1], v[2], v[3]),
                })
            }
            "klink" => Ok(FamilySpec::KLink {
                spec: KLinkSpec::new(pairs(rest)?),
            }),
            "tlink" => Ok(FamilySpec::TLink {
                spec: TLinkSpec::new(pairs(rest)?),
            }),
            "cable" => {
                let body = rest
                    .strip_prefix('(')
                    .ok_or_else(|| perr("cable expects `(<companion spec>) m j`".into()))?;
                let close = matching_paren(body)
                    .ok_or_else(|| perr("unbalanced parentheses in cable spec".into()))?;
                let companion = Self::parse(&body[..close])?;
                let v = ints(&body[close + 1..], 2)?;
                Ok(FamilySpec::Cable {
                    companion: Box::new(companion),
                    m: v[0],
                    j: v[1],
                })
            }
            h if h.ends_with(':') => BraidWord::parse(s)
                .map(|word| FamilySpec::Braid { word })
                .map_err(|e| perr(e.to_string())),
            other => Err(perr(format!("unknown family `{other}`"))),
        }
    }
}

fn matching_paren(s: &str) -> Option<usize> {
    let mut depth = 1usize;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Braid { word } => write!(f, "{word}"),
            FamilySpec::Torus { p, q } => write!(f, "torus {p} {q}"),
            FamilySpec::TwistedTorus { spec } => {
                write!(f, "ttk {} {} {} {}", spec.p, spec.q, spec.r, spec.s)
            }
            FamilySpec::KLink { spec } => {
                write!(f, "klink")?;
                spec.pairs
                    .iter()
                    .try_for_each(|(r, s)| write!(f, " {r},{s}"))
            }
            FamilySpec::TLink { spec } => {
                write!(f, "tlink")?;
                spec.pairs
                    .iter()
                    .try_for_each(|(r, s)| write!(f, " {r},{s}"))
            }
            FamilySpec::Cable { companion, m, j } => write!(f, "cable ({companion}) {m} {j}"),
        }
    }
}
