//! Elementary number theory on machine integers: primality, factorisation,
//! multiplicative orders and unit groups of `Z_n`.

use num_integer::Integer;

use crate::error::{Error, Result};

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut f = 3;
    while f * f <= n {
        if n.is_multiple_of(f) {
            return false;
        }
        f += 2;
    }
    true
}

/// Prime factorisation as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            let mut e = 0;
            while n.is_multiple_of(f) {
                n /= f;
                e += 1;
            }
            out.push((f, e));
        }
        f += if f == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// If `q` is a prime power `p^d` returns `(p, d)`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    match factorize(q).as_slice() {
        [(p, d)] => Some((*p, *d)),
        _ => None,
    }
}

pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut b = (base as u128) % m;
    let mut acc: u128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Least `k >= 1` with `a^k = 1 mod n`. Every unit has order 1 modulo 1.
pub fn mult_order(a: u64, n: u64) -> Result<u64> {
    if gcd(a % n.max(1), n) != 1 && n != 1 {
        return Err(Error::NotCoprime { n, p: a });
    }
    if n == 1 {
        return Ok(1);
    }
    let mut k = 1;
    let mut x = a % n;
    while x != 1 {
        x = (x as u128 * (a % n) as u128 % n as u128) as u64;
        k += 1;
    }
    Ok(k)
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (r, _)| acc / r * (r - 1))
}

/// Units of `Z_n` in increasing order. `Z_1` has the single unit `0`.
pub fn units(n: u64) -> Vec<u64> {
    if n == 1 {
        return vec![0];
    }
    (1..n).filter(|&j| gcd(j, n) == 1).collect()
}

/// The cyclic subgroup `<a>` of `Z_n^*`, listed as `a^0, a^1, ...`.
pub fn powers_mod(a: u64, n: u64) -> Vec<u64> {
    let mut out = vec![1 % n];
    let mut x = a % n;
    while x != 1 % n {
        out.push(x);
        x = (x as u128 * (a % n) as u128 % n as u128) as u64;
    }
    out
}

/// Modular inverse of a unit.
pub fn inv_mod(a: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(0);
    }
    let e = i128::extended_gcd(&((a % n) as i128), &(n as i128));
    (e.gcd == 1).then(|| e.x.rem_euclid(n as i128) as u64)
}

/// `Z_n^*` is cyclic exactly for `n = 1, 2, 4, r^e, 2r^e` with `r` an odd prime.
pub fn has_cyclic_units(n: u64) -> bool {
    if n <= 2 || n == 4 {
        return n >= 1;
    }
    let odd = if n.is_multiple_of(2) { n / 2 } else { n };
    if odd % 2 == 0 {
        return false;
    }
    factorize(odd).len() == 1
}

/// The 2-adic valuation.
pub fn two_part_exponent(mut x: u64) -> u32 {
    let mut k = 0;
    while x > 0 && x.is_multiple_of(2) {
        x /= 2;
        k += 1;
    }
    k
}

/// Residue of a signed integer modulo `n`.
pub fn residue(x: i64, n: u64) -> u64 {
    x.rem_euclid(n as i64) as u64
}

/// Symmetric representative of `x mod n` in `(-n/2, n/2]`.
pub fn signed_residue(x: u64, n: u64) -> i64 {
    let x = (x % n) as i64;
    if 2 * x > n as i64 {
        x - n as i64
    } else {
        x
    }
}
