//! Jones polynomial through the Temperley–Lieb representation of the
//! Kauffman bracket, with an exhaustive state sum kept as an oracle.
//!
//! Conventions: `σ_i ↦ A·1 + A^-1·e_i`, `σ_i^-1 ↦ A^-1·1 + A·e_i`, loop value
//! `δ = -A^2 - A^-2`, bracket of the closure normalized so one circle is 1,
//! `V = (-A^3)^(-writhe) ⟨D⟩` and `t = A^-4`. The positive trefoil `σ_1^3`
//! gets `t + t^3 - t^4`.
//!
//! The TL trace is evaluated at integer values of `A` modulo word-sized
//! primes. All exponents of `⟨D⟩` are congruent to `3w + 2(μ-1)` mod 4
//! (`w` the writhe, `μ` the component count), and the support lies in
//! `[-c - 2 s_B + 2, c + 2 s_A - 2]` where `s_A`, `s_B` count the loops of
//! the all-A and all-B states. So `⟨D⟩` is a shifted polynomial in `A^4` of
//! known degree bound and is recovered by interpolation and CRT.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::Limits;
use crate::braid::BraidWord;
use crate::modular::{self, add_mod, horner, interpolate, inv_mod, mul_mod, pow_mod, sub_mod};
use crate::poly::LaurentPoly;

const CHECK_POINTS: usize = 2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JonesError {
    #[error(
        "{strands} strands exceeds the Temperley-Lieb limit of {limit}; compare Alexander only"
    )]
    TooManyStrands { strands: usize, limit: usize },
    #[error("{crossings} crossings exceeds the limit of {limit}; compare Alexander only")]
    TooManyCrossings { crossings: usize, limit: usize },
    #[error("bracket disagreed with its interpolant modulo {prime}")]
    SupportCheck { prime: u64 },
}

/// Jones polynomial stored as a Laurent polynomial in `u = t^(1/4) = A^-1`.
/// Knots only have exponents divisible by 4; links with an even number of
/// components have half-integral powers of `t`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct JonesPoly {
    quarter: LaurentPoly,
}

impl JonesPoly {
    pub fn from_quarter_powers(quarter: LaurentPoly) -> Self {
        Self { quarter }
    }

    /// From a polynomial in `t` with integral exponents.
    pub fn from_t(poly: &LaurentPoly) -> Self {
        Self {
            quarter: poly.substitute_power(4),
        }
    }

    pub fn quarter_powers(&self) -> &LaurentPoly {
        &self.quarter
    }

    /// The polynomial in `t` when every exponent is integral.
    pub fn as_t_poly(&self) -> Option<LaurentPoly> {
        if self.quarter.terms().any(|(e, _)| e.rem_euclid(4) != 0) {
            return None;
        }
        Some(LaurentPoly::from_coeffs(
            self.quarter.min_exp().unwrap_or(0) / 4,
            self.quarter.dense_coeffs().iter().step_by(4).cloned(),
        ))
    }

    /// `V(t^-1)`, the Jones polynomial of the mirror image.
    pub fn mirror(&self) -> Self {
        Self {
            quarter: self.quarter.invert_variable(),
        }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.quarter.eval_at_one()
    }

    /// Renders in `t`, e.g. `1*t + 1*t^3 - 1*t^4` or `-1*t^1/2 - 1*t^5/2`.
    pub fn render(&self) -> String {
        if self.quarter.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.quarter.terms().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let mag = c.abs();
            let g = num_integer::gcd(e, 4);
            match (e / g, 4 / g) {
                (0, _) => out.push_str(&mag.to_string()),
                (1, 1) => out.push_str(&format!("{mag}*t")),
                (n, 1) => out.push_str(&format!("{mag}*t^{n}")),
                (n, d) => out.push_str(&format!("{mag}*t^{n}/{d}")),
            }
        }
        out
    }
}

impl fmt::Display for JonesPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// JSON form: `[[numerator, denominator, coefficient], …]` for each term
/// `c·t^(numerator/denominator)`, ascending, in lowest terms.
impl Serialize for JonesPoly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let terms: Vec<_> = self.quarter.terms().collect();
        let mut seq = serializer.serialize_seq(Some(terms.len()))?;
        for (e, c) in terms {
            let g = num_integer::gcd(e, 4);
            match c.to_i64() {
                Some(v) => seq.serialize_element(&(e / g, 4 / g, v))?,
                None => seq.serialize_element(&(e / g, 4 / g, c.to_string()))?,
            }
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for JonesPoly {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Coeff {
            Small(i64),
            Big(String),
        }
        let raw: Vec<(i64, i64, Coeff)> = Vec::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(raw.len());
        for (num, den, c) in raw {
            if den <= 0 || 4 % den != 0 {
                return Err(serde::de::Error::custom(format!(
                    "bad exponent denominator {den}"
                )));
            }
            let c = match c {
                Coeff::Small(v) => BigInt::from(v),
                Coeff::Big(s) => s.parse().map_err(serde::de::Error::custom)?,
            };
            terms.push((num * (4 / den), c));
        }
        Ok(Self {
            quarter: LaurentPoly::from_terms(terms),
        })
    }
}

/// Canonical basis of `TL_n`: the Catalan(n) noncrossing perfect matchings of
/// `2n` boundary points.
///
/// Points `0..n` are the top from left to right and `n..2n` the bottom from
/// left to right. For ordering, boundary labels run clockwise from the top
/// left (top left to right, then bottom right to left); a matching is its
/// list of arcs `(smaller label, larger label)` sorted ascending, and the basis
/// is sorted lexicographically by that list. The first diagram pairs labels
/// `0-1, 2-3, …`; the identity is last.
pub struct TlBasis {
    n: usize,
    /// Partner tables over points, `2n` bytes per diagram.
    partners: Vec<u8>,
    loops: Vec<u8>,
    identity: usize,
    /// `action[i * dim + d] = (d', loop)`: `d·e_{i+1} = δ^loop · d'`.
    action: Vec<(u32, bool)>,
}

impl TlBasis {
    pub fn new(n: usize) -> Self {
        assert!((1..=16).contains(&n), "TL basis supports 1..=16 strands");
        let mut partners = Vec::new();
        let mut labels = vec![0u8; 2 * n];
        enumerate_lex(n, &mut labels, 0, &mut partners);
        let dim = partners.len() / (2 * n);
        let index: HashMap<u64, u32> = (0..dim)
            .map(|k| {
                (
                    opener_mask(&partners[k * 2 * n..(k + 1) * 2 * n], n),
                    k as u32,
                )
            })
            .collect();
        let mut action = Vec::with_capacity(n.saturating_sub(1) * dim);
        let mut scratch = vec![0u8; 2 * n];
        for i in 0..n.saturating_sub(1) {
            for k in 0..dim {
                scratch.copy_from_slice(&partners[k * 2 * n..(k + 1) * 2 * n]);
                let lp = times_generator(&mut scratch, n, i);
                action.push((index[&opener_mask(&scratch, n)], lp));
            }
        }
        let loops = (0..dim)
            .map(|k| closure_loops(&partners[k * 2 * n..(k + 1) * 2 * n], n) as u8)
            .collect();
        let id: Vec<u8> = (0..2 * n)
            .map(|p| if p < n { (p + n) as u8 } else { (p - n) as u8 })
            .collect();
        let identity = index[&opener_mask(&id, n)] as usize;
        Self {
            n,
            partners,
            loops,
            identity,
            action,
        }
    }

    /// Shared basis for `n` strands, built once per process.
    pub fn cached(n: usize) -> Arc<TlBasis> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<TlBasis>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(b) = cache.lock().unwrap().get(&n) {
            return b.clone();
        }
        let built = Arc::new(TlBasis::new(n));
        cache.lock().unwrap().entry(n).or_insert(built).clone()
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.loops.len()
    }

    pub fn identity_index(&self) -> usize {
        self.identity
    }

    /// Partner table of diagram `k`: point `j` is joined to `diagram(k)[j]`.
    pub fn diagram(&self, k: usize) -> &[u8] {
        &self.partners[k * 2 * self.n..(k + 1) * 2 * self.n]
    }

    /// Number of loops in the closure of diagram `k`.
    pub fn closure_loops(&self, k: usize) -> usize {
        self.loops[k] as usize
    }

    /// `(d', loop)` with `diagram(k)·e_{i+1} = δ^loop · diagram(d')`.
    pub fn times_generator(&self, k: usize, i: usize) -> (usize, bool) {
        let (d, lp) = self.action[i * self.dim() + k];
        (d as usize, lp)
    }
}

/// Clockwise label to point, and back (the map is an involution).
fn label_point(x: usize, n: usize) -> usize {
    if x < n {
        x
    } else {
        3 * n - 1 - x
    }
}

/// Appends partner tables in lexicographic arc order. `labels[l]` holds the
/// partner label of `l` plus one, zero when unassigned.
fn enumerate_lex(n: usize, labels: &mut [u8], from: usize, out: &mut Vec<u8>) {
    let Some(first) = (from..2 * n).find(|&l| labels[l] == 0) else {
        let mut table = vec![0u8; 2 * n];
        for (l, &p) in labels.iter().enumerate() {
            table[label_point(l, n)] = label_point(p as usize - 1, n) as u8;
        }
        out.extend(table);
        return;
    };
    // Earlier arcs all start left of `first`, so the first matched label to
    // the right closes the enclosing arc and bounds the partner.
    let mut j = first + 1;
    while j < 2 * n && labels[j] == 0 {
        labels[first] = j as u8 + 1;
        labels[j] = first as u8 + 1;
        enumerate_lex(n, labels, first + 1, out);
        labels[first] = 0;
        labels[j] = 0;
        j += 2;
    }
}

/// Opener bits of the matching over clockwise labels; determines the matching.
fn opener_mask(table: &[u8], n: usize) -> u64 {
    let mut mask = 0u64;
    for l in 0..2 * n {
        if label_point(table[label_point(l, n)] as usize, n) > l {
            mask |= 1 << l;
        }
    }
    mask
}

/// Replaces `d` by `d · e_{i+1}` with `e` glued below. Returns whether a
/// closed loop was created.
fn times_generator(d: &mut [u8], n: usize, i: usize) -> bool {
    let (l, r) = (n + i, n + i + 1);
    if d[l] as usize == r {
        return true;
    }
    let (a, b) = (d[l], d[r]);
    d[a as usize] = b;
    d[b as usize] = a;
    d[l] = r as u8;
    d[r] = l as u8;
    false
}

fn closure_loops(d: &[u8], n: usize) -> usize {
    let mut seen = vec![false; 2 * n];
    let mut loops = 0;
    for start in 0..2 * n {
        if seen[start] {
            continue;
        }
        loops += 1;
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            let q = d[p] as usize;
            seen[q] = true;
            p = if q < n { q + n } else { q - n };
        }
    }
    loops
}

/// `⟨D⟩` at `A = a` over `F_p`.
fn bracket_at(w: &BraidWord, basis: &TlBasis, a: u64, p: u64) -> u64 {
    let a_inv = inv_mod(a, p);
    let delta = sub_mod(0, add_mod(mul_mod(a, a, p), mul_mod(a_inv, a_inv, p), p), p);
    let dim = basis.dim();
    let mut cur = vec![0u64; dim];
    let mut next = vec![0u64; dim];
    let mut seen = vec![false; dim];
    cur[basis.identity_index()] = 1;
    let mut live = vec![basis.identity_index() as u32];
    let mut next_live = Vec::new();
    for &e in w.letters() {
        let i = e.unsigned_abs() as usize - 1;
        let (keep, smooth) = if e > 0 { (a, a_inv) } else { (a_inv, a) };
        let smooth_loop = mul_mod(smooth, delta, p);
        let table = &basis.action[i * dim..(i + 1) * dim];
        next_live.clear();
        for &k in &live {
            let c = cur[k as usize];
            let (img, lp) = table[k as usize];
            let f = if lp { smooth_loop } else { smooth };
            for (target, factor) in [(k, keep), (img, f)] {
                let t = target as usize;
                if !seen[t] {
                    seen[t] = true;
                    next_live.push(target);
                }
                next[t] = add_mod(next[t], mul_mod(c, factor, p), p);
            }
        }
        for &k in &live {
            cur[k as usize] = 0;
        }
        for &k in &next_live {
            seen[k as usize] = false;
        }
        std::mem::swap(&mut cur, &mut next);
        std::mem::swap(&mut live, &mut next_live);
    }
    let mut delta_pows = vec![1u64];
    let mut total = 0u64;
    for &k in &live {
        let loops = basis.closure_loops(k as usize);
        while delta_pows.len() < loops {
            let last = *delta_pows.last().unwrap();
            delta_pows.push(mul_mod(last, delta, p));
        }
        total = add_mod(total, mul_mod(cur[k as usize], delta_pows[loops - 1], p), p);
    }
    total
}

/// Kauffman bracket of the closure, in `A`, via the Temperley–Lieb trace.
pub fn bracket(w: &BraidWord, limits: &Limits) -> Result<LaurentPoly, JonesError> {
    let n = w.strands();
    let c = w.len();
    if n > limits.tl_max_strands {
        return Err(JonesError::TooManyStrands {
            strands: n,
            limit: limits.tl_max_strands,
        });
    }
    if c > limits.max_crossings {
        return Err(JonesError::TooManyCrossings {
            crossings: c,
            limit: limits.max_crossings,
        });
    }
    let s_a = state_loops(w, (0..c).map(|_| true));
    let s_b = state_loops(w, (0..c).map(|_| false));
    let residue = (3 * w.exponent_sum() + 2 * (w.component_count() as i64 - 1)).rem_euclid(4);
    let mut lo = -(c as i64) - 2 * s_b as i64 + 2;
    lo -= (lo - residue).rem_euclid(4);
    let mut hi = c as i64 + 2 * s_a as i64 - 2;
    hi -= (hi - residue).rem_euclid(4);
    let degree = ((hi - lo).max(0) / 4) as usize;

    // every state contributes at most 2^(loops - 1) in absolute value
    let bits = (2 * c + n) as f64 + 2.0;
    let primes = modular::large_primes((bits / modular::PRIME_BITS).ceil() as usize);
    let count = degree + 1 + CHECK_POINTS;
    let a_points: Vec<u64> = (2..2 + count as u64).collect();

    let basis = TlBasis::cached(n);
    let tasks: Vec<(u64, u64)> = primes
        .iter()
        .flat_map(|&p| a_points.iter().map(move |&a| (p, a)))
        .collect();
    let values: Vec<u64> = tasks
        .par_iter()
        .map(|&(p, a)| {
            // A^-lo · ⟨D⟩ is a polynomial in A^4
            let shift = if lo <= 0 {
                pow_mod(a, lo.unsigned_abs(), p)
            } else {
                inv_mod(pow_mod(a, lo as u64, p), p)
            };
            mul_mod(bracket_at(w, &basis, a, p), shift, p)
        })
        .collect();

    let mut residues = Vec::with_capacity(primes.len());
    for (ys, &p) in values.chunks(count).zip(&primes) {
        let zs: Vec<u64> = a_points.iter().map(|&a| pow_mod(a, 4, p)).collect();
        let coeffs = interpolate(&zs[..=degree], &ys[..=degree], p);
        let ok = zs[degree + 1..]
            .iter()
            .zip(&ys[degree + 1..])
            .all(|(&z, &y)| horner(&coeffs, z, p) == y);
        if !ok {
            return Err(JonesError::SupportCheck { prime: p });
        }
        residues.push(coeffs);
    }
    let coeffs = modular::crt_symmetric(&residues, &primes);
    Ok(LaurentPoly::from_coeffs(lo, spread(coeffs, 4)))
}

/// `[c0, c1, …]` to `[c0, 0, 0, 0, c1, …]` for spacing 4.
fn spread(coeffs: Vec<BigInt>, step: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::default(); coeffs.len().saturating_sub(1) * step + 1];
    for (k, c) in coeffs.into_iter().enumerate() {
        out[k * step] = c;
    }
    out
}

/// `(-A^3)^(-writhe) · bracket`, re-expressed in `u = A^-1 = t^(1/4)`.
pub fn jones_from_bracket(bracket: &LaurentPoly, writhe: i64) -> JonesPoly {
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    let corrected = bracket.shift(-3 * writhe).scale(sign);
    JonesPoly {
        quarter: corrected.invert_variable(),
    }
}

/// Jones polynomial of the closure through the Temperley–Lieb trace.
pub fn jones(w: &BraidWord, limits: &Limits) -> Result<JonesPoly, JonesError> {
    Ok(jones_from_bracket(&bracket(w, limits)?, w.exponent_sum()))
}

/// Loops of the state taking the A-smoothing wherever `choice` yields true.
fn state_loops(w: &BraidWord, choice: impl Iterator<Item = bool>) -> usize {
    let n = w.strands();
    let c = w.len();
    // Node (level, strand) for level 0..c; level c is identified with 0.
    let node = |level: usize, strand: usize| (level % c.max(1)) * n + strand;
    let mut uf = UnionFind::new(c.max(1) * n);
    for ((lvl, &e), a_smoothing) in w.letters().iter().enumerate().zip(choice) {
        let i = e.unsigned_abs() as usize - 1;
        for s in (0..n).filter(|&s| s != i && s != i + 1) {
            uf.union(node(lvl, s), node(lvl + 1, s));
        }
        // A-smoothing of a positive crossing joins the strands vertically,
        // of a negative crossing horizontally.
        if a_smoothing == (e > 0) {
            uf.union(node(lvl, i), node(lvl + 1, i));
            uf.union(node(lvl, i + 1), node(lvl + 1, i + 1));
        } else {
            uf.union(node(lvl, i), node(lvl, i + 1));
            uf.union(node(lvl + 1, i), node(lvl + 1, i + 1));
        }
    }
    uf.classes()
}

/// Kauffman bracket by summing over all `2^c` smoothings of the closed braid
/// diagram. Exponential; an independent check for small words.
pub fn bracket_state_sum(w: &BraidWord) -> LaurentPoly {
    let c = w.len();
    assert!(c <= 24, "state sum limited to 24 crossings");
    let mut tally: HashMap<(i64, usize), i64> = HashMap::new();
    for state in 0u64..(1u64 << c) {
        let choice = (0..c).map(|lvl| state >> lvl & 1 == 0);
        let a_power = c as i64 - 2 * state.count_ones() as i64;
        *tally.entry((a_power, state_loops(w, choice))).or_insert(0) += 1;
    }
    let delta = LaurentPoly::from_terms([(-2, -1), (2, -1)]);
    let mut entries: Vec<_> = tally.into_iter().collect();
    entries.sort_unstable();
    let mut out = LaurentPoly::zero();
    for ((a_power, loops), count) in entries {
        out += &(&LaurentPoly::monomial(count, a_power) * &delta.pow(loops as u32 - 1));
    }
    out
}

/// Jones polynomial by exhaustive state sum.
pub fn jones_state_sum(w: &BraidWord) -> JonesPoly {
    jones_from_bracket(&bracket_state_sum(w), w.exponent_sum())
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    fn classes(&mut self) -> usize {
        (0..self.parent.len())
            .filter(|&x| self.find(x) == x)
            .count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    fn t(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    fn jones_default(w: &BraidWord) -> JonesPoly {
        jones(w, &Limits::default()).unwrap()
    }

    #[test]
    fn catalan_dimensions() {
        let dims: Vec<usize> = (1..=7).map(|n| TlBasis::new(n).dim()).collect();
        assert_eq!(dims, vec![1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn basis_order() {
        let b3 = TlBasis::new(3);
        // labels 0,1,2 are the top points, 3,4,5 the bottom points 5,4,3
        assert_eq!(b3.diagram(0), &[1, 0, 5, 4, 3, 2]);
        assert_eq!(b3.identity_index(), b3.dim() - 1);
        assert_eq!(b3.diagram(b3.identity_index()), &[3, 4, 5, 0, 1, 2]);
        assert_eq!(b3.closure_loops(b3.identity_index()), 3);
        assert_eq!(b3.closure_loops(0), 2);
        assert!(!b3.times_generator(b3.identity_index(), 0).1);
    }

    #[test]
    fn trefoil_and_unknot() {
        let v = jones_default(&b(2, &[1, 1, 1]));
        assert_eq!(v.as_t_poly().unwrap(), t(&[(1, 1), (3, 1), (4, -1)]));
        assert_eq!(v.to_string(), "1*t + 1*t^3 - 1*t^4");
        assert_eq!(
            jones_default(&b(1, &[])).as_t_poly().unwrap(),
            LaurentPoly::one()
        );
        assert_eq!(
            jones_default(&b(2, &[-1])).as_t_poly().unwrap(),
            LaurentPoly::one()
        );
    }

    #[test]
    fn figure_eight_is_amphichiral() {
        let v = jones_default(&b(3, &[1, -2, 1, -2]));
        assert_eq!(
            v.as_t_poly().unwrap(),
            t(&[(-2, 1), (-1, -1), (0, 1), (1, -1), (2, 1)])
        );
        assert_eq!(v.mirror(), v);
    }

    #[test]
    fn hopf_link_half_powers() {
        let v = jones_default(&b(2, &[1, 1]));
        assert!(v.as_t_poly().is_none());
        assert_eq!(v.to_string(), "-1*t^1/2 - 1*t^5/2");
        assert_eq!(v.eval_at_one(), BigInt::from(-2));
    }

    #[test]
    fn split_unlink() {
        let v = jones_default(&b(2, &[]));
        assert_eq!(v.to_string(), "-1*t^-1/2 - 1*t^1/2");
    }

    #[test]
    fn state_sum_matches_tl() {
        for (n, l) in [
            (2, vec![1, 1, 1]),
            (3, vec![1, -2, 1, -2]),
            (3, vec![1, 2, 1, 2, 2]),
            (4, vec![1, -3, 2, 2, -1, 3, -2]),
            (3, vec![]),
            (4, vec![2, 2, -3]),
        ] {
            let w = b(n, &l);
            assert_eq!(
                bracket_state_sum(&w),
                bracket(&w, &Limits::default()).unwrap(),
                "{w}"
            );
        }
    }

    #[test]
    fn limits_are_enforced() {
        let lim = Limits {
            tl_max_strands: 3,
            max_crossings: 5,
        };
        assert!(matches!(
            jones(&b(4, &[1]), &lim),
            Err(JonesError::TooManyStrands {
                strands: 4,
                limit: 3
            })
        ));
        assert!(matches!(
            jones(&b(2, &[1; 6]), &lim),
            Err(JonesError::TooManyCrossings { .. })
        ));
    }

    #[test]
    fn json_form() {
        let v = jones_default(&b(2, &[1, 1]));
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, "[[1,2,-1],[5,2,-1]]");
        let back: JonesPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
    }
}
