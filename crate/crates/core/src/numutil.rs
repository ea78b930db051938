//! Shared integer helpers: primality, extended gcd with pinned Bezout
//! conventions, p-adic valuations of big integers and rationals, and
//! small-number factorization.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeSet;

use crate::groups::Rational;

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin over u64 (the listed bases decide primality
/// for every 64-bit integer).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == small {
            return true;
        }
        if n % small == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Extended gcd: returns `(g, x, y)` with `a*x + b*y = g` and `g >= 0`.
pub fn egcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut x0, mut x1) = (BigInt::one(), BigInt::zero());
    let (mut y0, mut y1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r);
        let x = &x0 - &q * &x1;
        x0 = std::mem::replace(&mut x1, x);
        let y = &y0 - &q * &y1;
        y0 = std::mem::replace(&mut y1, y);
    }
    if r0.is_negative() {
        (-r0, -x0, -y0)
    } else {
        (r0, x0, y0)
    }
}

fn bezout_with(a: &BigInt, b: &BigInt, want_positive: bool) -> (BigInt, BigInt) {
    let (g, x0, _) = egcd(a, b);
    assert!(g.is_one(), "bezout requires coprime inputs");
    if b.is_zero() {
        // a = ±1, x = a works; y is free.
        return (a.clone(), BigInt::zero());
    }
    let m = b.abs();
    let mut x = x0.mod_floor(&m);
    if want_positive && x.is_zero() {
        x = m;
    }
    let y = (BigInt::one() - a * &x) / b;
    (x, y)
}

/// `(x, y)` with `a*x + b*y = 1` and `x` the smallest non-negative solution.
pub fn bezout_min_nonneg(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    bezout_with(a, b, false)
}

/// `(x, y)` with `a*x + b*y = 1` and `x` the smallest positive solution.
pub fn bezout_min_pos(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    bezout_with(a, b, true)
}

/// Largest k with p^k | n, or `None` when n = 0.
pub fn int_valuation(n: &BigInt, p: u64) -> Option<u32> {
    if n.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut v = 0u32;
    let mut cur = n.abs();
    loop {
        let (q, r) = cur.div_rem(&p);
        if !r.is_zero() {
            return Some(v);
        }
        v += 1;
        cur = q;
    }
}

/// p-adic valuation of a nonzero rational; negative when p divides the
/// denominator.
pub fn rat_valuation(x: &Rational, p: u64) -> Option<i64> {
    let vn = int_valuation(x.numer(), p)?;
    let vd = int_valuation(x.denom(), p).expect("denominator is nonzero");
    Some(vn as i64 - vd as i64)
}

/// Trial-division factorization of a positive integer into (prime, exponent)
/// pairs. Desk-scale inputs only; coordinates in this library stay small.
pub fn factor_magnitude(n: &BigUint) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut cur = BigInt::from(n.clone());
    if cur.is_one() || cur.is_zero() {
        return out;
    }
    let mut push = |p: u64, cur: &mut BigInt| {
        let mut e = 0u32;
        let pb = BigInt::from(p);
        loop {
            let (q, r) = cur.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            e += 1;
            *cur = q;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push(2, &mut cur);
    push(3, &mut cur);
    let mut d = 5u64;
    while !cur.is_one() {
        if let Some(small) = cur.to_u64() {
            if d.saturating_mul(d) > small {
                out.push((small, 1));
                break;
            }
        }
        push(d, &mut cur);
        push(d + 2, &mut cur);
        d += 6;
    }
    out.sort_unstable();
    out
}

/// Primes dividing the numerator or denominator of a nonzero rational.
pub fn support_primes(x: &Rational) -> BTreeSet<u64> {
    let mut set = BTreeSet::new();
    for (p, _) in factor_magnitude(x.numer().magnitude()) {
        set.insert(p);
    }
    for (p, _) in factor_magnitude(x.denom().magnitude()) {
        set.insert(p);
    }
    set
}

/// p^k as a BigUint.
pub fn pow_u(p: u64, k: u32) -> BigUint {
    BigUint::from(p).pow(k)
}

/// p^k as a BigInt.
pub fn pow_i(p: u64, k: u32) -> BigInt {
    BigInt::from(p).pow(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_001));
    }

    #[test]
    fn egcd_identity() {
        for (a, b) in [(240i64, 46i64), (-17, 5), (12, -18), (1, 0), (0, -7)] {
            let (a, b) = (BigInt::from(a), BigInt::from(b));
            let (g, x, y) = egcd(&a, &b);
            assert_eq!(&a * &x + &b * &y, g);
        }
    }

    #[test]
    fn bezout_conventions() {
        // 3x + 2y = 1: x ≡ 1 mod 2, minimal non-negative = minimal positive = 1
        let (x, y) = bezout_min_nonneg(&BigInt::from(3), &BigInt::from(2));
        assert_eq!((x, y), (BigInt::one(), BigInt::from(-1)));
        // 2x + 1y = 1: x free mod 1
        let (x, _) = bezout_min_nonneg(&BigInt::from(2), &BigInt::one());
        assert!(x.is_zero());
        let (x, y) = bezout_min_pos(&BigInt::from(2), &BigInt::one());
        assert_eq!((x, y), (BigInt::one(), BigInt::from(-1)));
    }

    #[test]
    fn valuations() {
        assert_eq!(int_valuation(&BigInt::from(24), 2), Some(3));
        assert_eq!(int_valuation(&BigInt::from(-9), 3), Some(2));
        assert_eq!(int_valuation(&BigInt::zero(), 5), None);
        let x = Rational::new(BigInt::from(3), BigInt::from(8));
        assert_eq!(rat_valuation(&x, 2), Some(-3));
        assert_eq!(rat_valuation(&x, 3), Some(1));
    }

    #[test]
    fn factorization() {
        assert_eq!(
            factor_magnitude(&BigUint::from(360u32)),
            vec![(2, 3), (3, 2), (5, 1)]
        );
        assert_eq!(factor_magnitude(&BigUint::from(97u32)), vec![(97, 1)]);
        assert!(factor_magnitude(&BigUint::from(1u32)).is_empty());
    }
}
