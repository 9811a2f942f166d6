//! Deterministic integer factorization.
//!
//! Small factors are removed by trial division. Cofactors that fit in 64 bits
//! are split with Pollard's rho (Brent variant) using a deterministic
//! Miller-Rabin test, which is exact on the full `u64` range for the fixed
//! base set below. Larger cofactors use the same procedures on `BigUint`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

const TRIAL_LIMIT: u64 = 1 << 12;
const BIG_TRIAL_LIMIT: u64 = 1 << 20;
const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Primality for `u64`, exact for every input.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in MR_BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let r = (n - 1).trailing_zeros();
    'bases: for a in MR_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn rho_u64(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    // Deterministic sequence of polynomial offsets.
    for c in 1u64.. {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = x.abs_diff(y).gcd(&n);
        }
        if d != n {
            return d;
        }
    }
    unreachable!()
}

fn push_factor<T: Ord + Clone>(out: &mut Vec<(T, u32)>, p: T, e: u32) {
    if let Some(slot) = out.iter_mut().find(|(q, _)| *q == p) {
        slot.1 += e;
    } else {
        out.push((p, e));
    }
}

fn split_u64(n: u64, out: &mut Vec<(u64, u32)>) {
    if n == 1 {
        return;
    }
    if is_prime_u64(n) {
        push_factor(out, n, 1);
        return;
    }
    let d = rho_u64(n);
    split_u64(d, out);
    split_u64(n / d, out);
}

/// Prime factorization of `n > 0` as `(prime, exponent)` pairs in ascending order.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n > 0, "cannot factor zero");
    let mut out = Vec::new();
    let mut p = 2u64;
    while p <= TRIAL_LIMIT && p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        split_u64(n, &mut out);
    }
    out.sort();
    out
}

fn big_pow_mod_is_probable_prime(n: &BigUint) -> bool {
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    for p in MR_BASES {
        let p = BigUint::from(p);
        if (n % &p).is_zero() {
            return n == &p;
        }
    }
    let n_minus_1 = n - &one;
    let r = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> r;
    'bases: for a in MR_BASES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..r {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn rho_big(n: &BigUint) -> BigUint {
    let two = BigUint::from(2u32);
    if (n % &two).is_zero() {
        return two;
    }
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let (mut x, mut y, mut d) = (two.clone(), two.clone(), BigUint::one());
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            d = diff.gcd(n);
        }
        if &d != n {
            return d;
        }
        c += 1u32;
    }
}

fn split_big(n: BigUint, out: &mut Vec<(BigUint, u32)>) {
    if n.is_one() {
        return;
    }
    if let Some(small) = n.to_u64() {
        let mut tmp = Vec::new();
        split_u64(small, &mut tmp);
        for (p, e) in tmp {
            push_factor(out, BigUint::from(p), e);
        }
        return;
    }
    if big_pow_mod_is_probable_prime(&n) {
        push_factor(out, n, 1);
        return;
    }
    let d = rho_big(&n);
    let rest = &n / &d;
    split_big(d, out);
    split_big(rest, out);
}

/// Prime factorization of a positive big integer, ascending.
pub fn factor_biguint(n: &BigUint) -> Vec<(BigUint, u32)> {
    assert!(!n.is_zero(), "cannot factor zero");
    if let Some(small) = n.to_u64() {
        return factor_u64(small)
            .into_iter()
            .map(|(p, e)| (BigUint::from(p), e))
            .collect();
    }
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut p = 2u64;
    while p <= BIG_TRIAL_LIMIT {
        let bp = BigUint::from(p);
        if &bp * &bp > n {
            break;
        }
        let mut e = 0;
        while (&n % &bp).is_zero() {
            n /= &bp;
            e += 1;
        }
        if e > 0 {
            out.push((bp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    split_big(n, &mut out);
    out.sort();
    out
}

pub fn is_prime_biguint(n: &BigUint) -> bool {
    match n.to_u64() {
        Some(small) => is_prime_u64(small),
        None => {
            let f = factor_biguint(n);
            f.len() == 1 && f[0].1 == 1
        }
    }
}

/// All positive divisors of `n`, ascending.
pub fn divisors_u64(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in factor_u64(n) {
        let current = divs.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            divs.extend(current.iter().map(|d| d * pk));
        }
    }
    divs.sort_unstable();
    divs
}
