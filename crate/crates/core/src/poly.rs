//! Integer Laurent polynomials in one variable.
//!
//! Stored densely as a lowest exponent plus a coefficient run whose first and
//! last entries are nonzero. The zero polynomial has an empty run.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial<C: Into<BigInt>>(coeff: C, exp: i64) -> Self {
        Self::from_coeffs(exp, vec![coeff.into()])
    }

    /// `t^exp`.
    pub fn power(exp: i64) -> Self {
        Self::monomial(1, exp)
    }

    /// Builds `sum coeffs[k] * t^(low + k)`, trimming zeros at both ends.
    pub fn from_coeffs<C: Into<BigInt>>(low: i64, coeffs: impl IntoIterator<Item = C>) -> Self {
        let mut p = Self {
            low,
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.trim();
        p
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut acc = Self::zero();
        for (e, c) in terms {
            acc += &Self::monomial(c, e);
        }
        acc
    }

    fn trim(&mut self) {
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
            return;
        }
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient (`None` for zero).
    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// `max_exp - min_exp`, or 0 for the zero polynomial.
    pub fn span(&self) -> i64 {
        self.coeffs.len().saturating_sub(1) as i64
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let k = exp - self.low;
        if k < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(k as usize).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        let low = self.low;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (low + k as i64, c))
    }

    /// Dense coefficient run from `min_exp` to `max_exp`.
    pub fn dense_coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale<C: Into<BigInt>>(&self, c: C) -> Self {
        let c = c.into();
        Self::from_coeffs(self.low, self.coeffs.iter().map(|x| x * &c))
    }

    /// Substitutes `t -> t^m` for `m >= 1`.
    pub fn substitute_power(&self, m: i64) -> Self {
        assert!(m >= 1, "substitute_power requires m >= 1");
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * m as usize + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k * m as usize] = c.clone();
        }
        Self::from_coeffs(self.low * m, coeffs)
    }

    /// Substitutes `t -> t^-1`.
    pub fn invert_variable(&self) -> Self {
        match self.max_exp() {
            None => Self::zero(),
            Some(hi) => Self::from_coeffs(-hi, self.coeffs.iter().rev().cloned()),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Value at `t = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Exact division. Returns `None` when `divisor` is zero or does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let d = &divisor.coeffs;
        let lead = d.last().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < d.len() {
            return None;
        }
        let qlen = rem.len() - d.len() + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = &rem[k + d.len() - 1];
            if top.is_zero() {
                continue;
            }
            if !(top % lead).is_zero() {
                return None;
            }
            let q = top / lead;
            for (j, dj) in d.iter().enumerate() {
                rem[k + j] -= &q * dj;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(self.low - divisor.low, quot))
    }

    /// Canonical representative up to units `±t^k`: lowest exponent 0 and a
    /// positive lowest coefficient.
    pub fn normalize_unit(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let sign_flip = self.coeffs[0].is_negative();
        Self {
            low: 0,
            coeffs: if sign_flip {
                self.coeffs.iter().map(|c| -c).collect()
            } else {
                self.coeffs.clone()
            },
        }
    }

    /// Coefficients read the same forwards and backwards.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Renders with the variable name `var`, e.g. `1 - 1*t + 1*t^2`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            match e {
                0 => out.push_str(&mag.to_string()),
                1 => out.push_str(&format!("{mag}*{var}")),
                _ => out.push_str(&format!("{mag}*{var}^{e}")),
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t"))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        accumulate(self, rhs, false);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        accumulate(self, rhs, true);
    }
}

fn accumulate(lhs: &mut LaurentPoly, rhs: &LaurentPoly, negate: bool) {
    if rhs.is_zero() {
        return;
    }
    if lhs.is_zero() {
        *lhs = if negate { -rhs } else { rhs.clone() };
        return;
    }
    let low = lhs.low.min(rhs.low);
    let high = lhs.max_exp().unwrap().max(rhs.max_exp().unwrap());
    if low < lhs.low {
        let pad = (lhs.low - low) as usize;
        lhs.coeffs
            .splice(0..0, std::iter::repeat_n(BigInt::zero(), pad));
        lhs.low = low;
    }
    lhs.coeffs.resize((high - low + 1) as usize, BigInt::zero());
    let off = (rhs.low - low) as usize;
    for (k, c) in rhs.coeffs.iter().enumerate() {
        if negate {
            lhs.coeffs[off + k] -= c;
        } else {
            lhs.coeffs[off + k] += c;
        }
    }
    lhs.trim();
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;

    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_coeffs(self.low + rhs.low, coeffs)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// JSON form: ascending `[exponent, coefficient]` pairs. Coefficients that fit
/// in an `i64` are numbers, larger ones are decimal strings.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<_> = self.terms().collect();
        let mut seq = serializer.serialize_seq(Some(terms.len()))?;
        for (e, c) in terms {
            match c.to_i64() {
                Some(small) => seq.serialize_element(&(e, small))?,
                None => seq.serialize_element(&(e, c.to_string()))?,
            }
        }
        seq.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CoeffRepr {
    Small(i64),
    Big(String),
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let pairs: Vec<(i64, CoeffRepr)> = Vec::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(pairs.len());
        for (e, c) in pairs {
            let c = match c {
                CoeffRepr::Small(v) => BigInt::from(v),
                CoeffRepr::Big(s) => s.parse().map_err(serde::de::Error::custom)?,
            };
            terms.push((e, c));
        }
        Ok(Self::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(low, c.iter().copied())
    }

    #[test]
    fn trims_and_zero() {
        let z = p(3, &[0, 0]);
        assert!(z.is_zero());
        assert_eq!(z, LaurentPoly::zero());
        let q = p(-2, &[0, 1, 0, 2, 0]);
        assert_eq!(q.min_exp(), Some(-1));
        assert_eq!(q.max_exp(), Some(1));
        assert_eq!(q.span(), 2);
    }

    #[test]
    fn render_format() {
        assert_eq!(p(0, &[1, -1, 1]).to_string(), "1 - 1*t + 1*t^2");
        assert_eq!(p(-2, &[-3]).to_string(), "-3*t^-2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let num = p(0, &[1, 0, 0, 1]); // 1 + t^3
        let den = p(0, &[1, 1]);
        assert_eq!(num.div_exact(&den), Some(p(0, &[1, -1, 1])));
        assert_eq!(p(0, &[1, 0, 1]).div_exact(&den), None);
        assert_eq!(num.div_exact(&LaurentPoly::zero()), None);
    }

    #[test]
    fn normalization() {
        assert_eq!(p(-3, &[-1, 1, -1]).normalize_unit(), p(0, &[1, -1, 1]));
    }

    #[test]
    fn json_shape() {
        let q = p(-1, &[2, 0, -5]);
        assert_eq!(serde_json::to_string(&q).unwrap(), "[[-1,2],[1,-5]]");
        let back: LaurentPoly = serde_json::from_str("[[-1,2],[1,\"-5\"]]").unwrap();
        assert_eq!(back, q);
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        (-5i64..5, prop::collection::vec(-4i64..5, 0..6)).prop_map(|(l, c)| p(l, &c))
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            if !b.is_zero() {
                prop_assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
            }
            let back: LaurentPoly = serde_json::from_str(&serde_json::to_string(&a).unwrap()).unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
