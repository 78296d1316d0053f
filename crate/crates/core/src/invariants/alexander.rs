//! Alexander polynomial of a braid closure from the Burau representation.
//!
//! For a word `w` on `n` strands let `B(t)` be the product of unreduced
//! Burau matrices, `σ_i ↦ [[1-t, t], [1, 0]]` on rows/columns `i, i+1`. The
//! principal `(n-1)`-minor `f(t)` of `I - B(t)` is `±t^k Δ(t)`; this is the
//! reduced-Burau quantity `det(I - B_red(t))` with the factor
//! `1 + t + ... + t^(n-1)` already removed.
//!
//! `f` satisfies `f(t) = ±t^(e+n-1) f(1/t)` with `e` the exponent sum, and
//! its span is at most `c - n + 1` for `c` letters (the braid's canonical
//! Seifert surface has first Betti number `c - n + 1`). So `f` is supported
//! inside `[-c_neg, c_pos]` and `t^c_neg f(t)` is a polynomial of degree at
//! most `c`. We evaluate it at `c + 1` points modulo enough word-sized primes to
//! cover a Hadamard-style coefficient bound, interpolate, check two further
//! points, and recombine by CRT. Everything is exact.

use rayon::prelude::*;
use thiserror::Error;

use crate::braid::BraidWord;
use crate::modular::{self, add_mod, det_mod, horner, interpolate, mul_mod, pow_mod, sub_mod};
use crate::poly::LaurentPoly;

/// Points evaluated beyond the degree bound to check the support argument.
const CHECK_POINTS: usize = 2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlexanderError {
    #[error("Burau minor disagreed with its interpolant modulo {prime}")]
    SupportCheck { prime: u64 },
}

/// Unnormalized principal Burau minor `f(t)`.
pub fn burau_minor(w: &BraidWord) -> Result<LaurentPoly, AlexanderError> {
    let n = w.strands();
    if n == 1 {
        return Ok(LaurentPoly::one());
    }
    let c = w.len();
    let c_neg = w.negative_count();
    let points: Vec<u64> = (2..(2 + c + 1 + CHECK_POINTS) as u64).collect();
    let bits = coefficient_bound_bits(w) + 2.0;
    let prime_count = (bits / modular::PRIME_BITS).ceil().max(1.0) as usize;
    let primes = modular::large_primes(prime_count);

    let residues: Vec<Vec<u64>> = primes
        .par_iter()
        .map(|&p| {
            let ys: Vec<u64> = points
                .iter()
                .map(|&x| mul_mod(minor_at(w, x, p), pow_mod(x, c_neg as u64, p), p))
                .collect();
            let coeffs = interpolate(&points[..=c], &ys[..=c], p);
            let consistent = points[c + 1..]
                .iter()
                .zip(&ys[c + 1..])
                .all(|(&x, &y)| horner(&coeffs, x, p) == y);
            if consistent {
                Ok(coeffs)
            } else {
                Err(AlexanderError::SupportCheck { prime: p })
            }
        })
        .collect::<Result<_, _>>()?;

    let coeffs = modular::crt_symmetric(&residues, &primes);
    Ok(LaurentPoly::from_coeffs(-(c_neg as i64), coeffs))
}

/// `det` of the principal `(n-1)`-minor of `I - B(x)` over `F_p`.
fn minor_at(w: &BraidWord, x: u64, p: u64) -> u64 {
    let n = w.strands();
    let x_inv = modular::inv_mod(x, p);
    let one_minus_x = sub_mod(1, x, p);
    let one_minus_x_inv = sub_mod(1, x_inv, p);
    let mut m = vec![vec![0u64; n]; n];
    for (r, row) in m.iter_mut().enumerate() {
        row[r] = 1;
    }
    for &e in w.letters() {
        let i = e.unsigned_abs() as usize - 1;
        for row in m.iter_mut() {
            let (a, b) = (row[i], row[i + 1]);
            if e > 0 {
                row[i] = add_mod(mul_mod(a, one_minus_x, p), b, p);
                row[i + 1] = mul_mod(a, x, p);
            } else {
                row[i] = mul_mod(b, x_inv, p);
                row[i + 1] = add_mod(a, mul_mod(b, one_minus_x_inv, p), p);
            }
        }
    }
    let minor: Vec<Vec<u64>> = (0..n - 1)
        .map(|r| {
            (0..n - 1)
                .map(|j| {
                    let id = u64::from(r == j);
                    sub_mod(id, m[r][j], p)
                })
                .collect()
        })
        .collect();
    det_mod(minor, p)
}

/// log2 of an upper bound on the coefficient L1 norm of the minor.
///
/// Tracks per-entry L1 norms of the Burau product (the L1 norm is
/// submultiplicative on Laurent polynomials), then bounds the determinant by
/// the product of row sums.
fn coefficient_bound_bits(w: &BraidWord) -> f64 {
    let n = w.strands();
    let mut norms = vec![vec![f64::NEG_INFINITY; n]; n];
    for (r, row) in norms.iter_mut().enumerate() {
        row[r] = 0.0;
    }
    for &e in w.letters() {
        let i = e.unsigned_abs() as usize - 1;
        for row in norms.iter_mut() {
            let (a, b) = (row[i], row[i + 1]);
            if e > 0 {
                row[i] = log2_sum(a + 1.0, b);
                row[i + 1] = a;
            } else {
                row[i] = b;
                row[i + 1] = log2_sum(a, b + 1.0);
            }
        }
    }
    (0..n - 1)
        .map(|r| {
            (0..n - 1).fold(f64::NEG_INFINITY, |acc, j| {
                let entry = if r == j {
                    log2_sum(norms[r][j], 0.0)
                } else {
                    norms[r][j]
                };
                log2_sum(acc, entry)
            })
        })
        .sum()
}

/// `log2(2^a + 2^b)`, rounded up slightly.
fn log2_sum(a: f64, b: f64) -> f64 {
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    if lo == f64::NEG_INFINITY {
        return hi;
    }
    let s = hi + (1.0 + (lo - hi).exp2()).log2();
    s + 1e-9 * (1.0 + s.abs())
}

/// Alexander polynomial of the closure, normalized to lowest exponent 0 with a
/// positive lowest coefficient. Split links give 0.
pub fn alexander(w: &BraidWord) -> Result<LaurentPoly, AlexanderError> {
    Ok(burau_minor(w)?.normalize_unit())
}
