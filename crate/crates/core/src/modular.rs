//! Word-sized prime field arithmetic, interpolation and Chinese remaindering.

use num_bigint::BigInt;
use num_traits::{One, Zero};

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo a prime.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for all `u64`.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The `count` largest primes below `2^62`, descending. Each exceeds `2^61`.
pub fn large_primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut n = (1u64 << 62) - 1;
    while out.len() < count {
        if is_prime(n) {
            out.push(n);
        }
        n -= 2;
    }
    out
}

/// Bits contributed by each prime from [`large_primes`], rounded down.
pub const PRIME_BITS: f64 = 61.0;

/// Determinant of a square matrix over `F_p` by Gaussian elimination.
/// Consumes the matrix.
pub fn det_mod(mut a: Vec<Vec<u64>>, p: u64) -> u64 {
    let m = a.len();
    let mut det = 1u64;
    for col in 0..m {
        let Some(piv) = (col..m).find(|&r| a[r][col] != 0) else {
            return 0;
        };
        if piv != col {
            a.swap(piv, col);
            det = sub_mod(0, det, p);
        }
        det = mul_mod(det, a[col][col], p);
        let inv = inv_mod(a[col][col], p);
        let (upper, lower) = a.split_at_mut(col + 1);
        let pivot_row = &upper[col];
        for row in lower.iter_mut() {
            let f = mul_mod(row[col], inv, p);
            if f == 0 {
                continue;
            }
            for k in col..m {
                row[k] = sub_mod(row[k], mul_mod(f, pivot_row[k], p), p);
            }
        }
    }
    det
}

/// Coefficients (ascending) of the unique polynomial of degree `< xs.len()`
/// through the points, via Newton divided differences.
pub fn interpolate(xs: &[u64], ys: &[u64], p: u64) -> Vec<u64> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = sub_mod(dd[i], dd[i - 1], p);
            let den = sub_mod(xs[i], xs[i - level], p);
            dd[i] = mul_mod(num, inv_mod(den, p), p);
        }
    }
    // Horner expansion of the Newton form.
    let mut coeffs = vec![0u64; n];
    for i in (0..n).rev() {
        // coeffs <- coeffs * (x - xs[i]) + dd[i]
        let xi = xs[i];
        let mut carry = 0u64;
        for c in coeffs.iter_mut() {
            let prev = *c;
            *c = sub_mod(carry, mul_mod(prev, xi, p), p);
            carry = prev;
        }
        // the top coefficient overflow is zero by degree bound
        coeffs[0] = add_mod(coeffs[0], dd[i], p);
    }
    coeffs
}

pub fn horner(coeffs: &[u64], x: u64, p: u64) -> u64 {
    coeffs
        .iter()
        .rev()
        .fold(0u64, |acc, &c| add_mod(mul_mod(acc, x, p), c, p))
}

/// Symmetric Chinese remaindering of residue vectors, one per prime.
pub fn crt_symmetric(residues: &[Vec<u64>], primes: &[u64]) -> Vec<BigInt> {
    assert_eq!(residues.len(), primes.len());
    let len = residues.first().map_or(0, Vec::len);
    let mut values = vec![BigInt::zero(); len];
    let mut modulus = BigInt::one();
    for (res, &p) in residues.iter().zip(primes) {
        let pb = BigInt::from(p);
        let m_mod_p = u64::try_from((&modulus % &pb + &pb) % &pb).unwrap();
        let m_inv = inv_mod(m_mod_p, p);
        for (v, &r) in values.iter_mut().zip(res) {
            let v_mod_p = u64::try_from((&*v % &pb + &pb) % &pb).unwrap();
            let k = mul_mod(sub_mod(r, v_mod_p, p), m_inv, p);
            *v += &modulus * k;
        }
        modulus *= pb;
    }
    let half = &modulus / 2;
    for v in values.iter_mut() {
        if *v > half {
            *v -= &modulus;
        }
    }
    values
}
