//! Word-sized prime field arithmetic and dense univariate polynomials over it.

#[inline]
pub fn add(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

#[inline]
pub fn sub(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

#[inline]
pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub fn neg(a: u64, p: u64) -> u64 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

pub fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue (p prime).
pub fn inv(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(sp) {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The `count` largest primes below 2^62, in decreasing order.
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

pub(crate) fn prime_table() -> &'static [u64] {
    use std::sync::OnceLock;
    static TABLE: OnceLock<Vec<u64>> = OnceLock::new();
    TABLE.get_or_init(|| large_primes(64))
}

/// Dense univariate polynomial, coefficient `i` multiplies `x^i`; no trailing zeros.
pub type UPoly = Vec<u64>;

pub fn utrim(a: &mut UPoly) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

pub fn udeg(a: &UPoly) -> isize {
    a.len() as isize - 1
}

pub fn ueval(a: &UPoly, x: u64, p: u64) -> u64 {
    let mut acc = 0u64;
    for &c in a.iter().rev() {
        acc = add(mul(acc, x, p), c, p);
    }
    acc
}

pub fn uadd(a: &UPoly, b: &UPoly, p: u64) -> UPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        out.push(add(x, y, p));
    }
    utrim(&mut out);
    out
}

pub fn usub(a: &UPoly, b: &UPoly, p: u64) -> UPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        out.push(sub(x, y, p));
    }
    utrim(&mut out);
    out
}

pub fn uscale(a: &UPoly, c: u64, p: u64) -> UPoly {
    if c == 0 {
        return Vec::new();
    }
    a.iter().map(|&x| mul(x, c, p)).collect()
}

pub fn umul(a: &UPoly, b: &UPoly, p: u64) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u128; a.len() + b.len() - 1];
    let pm = p as u128;
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            let t = out[i + j] + x as u128 * y as u128;
            out[i + j] = t % pm;
        }
    }
    let mut out: UPoly = out.into_iter().map(|v| v as u64).collect();
    utrim(&mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero.
pub fn udivrem(a: &UPoly, b: &UPoly, p: u64) -> (UPoly, UPoly) {
    assert!(!b.is_empty(), "division by zero polynomial");
    if a.len() < b.len() {
        return (Vec::new(), a.clone());
    }
    let mut r = a.clone();
    let lc_inv = inv(*b.last().unwrap(), p);
    let mut q = vec![0u64; a.len() - b.len() + 1];
    for k in (0..q.len()).rev() {
        let c = mul(r[k + b.len() - 1], lc_inv, p);
        q[k] = c;
        if c != 0 {
            for (j, &bj) in b.iter().enumerate() {
                r[k + j] = sub(r[k + j], mul(c, bj, p), p);
            }
        }
    }
    r.truncate(b.len() - 1);
    utrim(&mut r);
    utrim(&mut q);
    (q, r)
}

pub fn umonic(a: &UPoly, p: u64) -> UPoly {
    match a.last() {
        None => Vec::new(),
        Some(&lc) => uscale(a, inv(lc, p), p),
    }
}

/// Monic gcd; gcd(0, 0) = 0.
pub fn ugcd(a: &UPoly, b: &UPoly, p: u64) -> UPoly {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_empty() {
        let (_, r) = udivrem(&x, &y, p);
        x = y;
        y = r;
    }
    umonic(&x, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_are_prime_and_distinct() {
        let ps = large_primes(4);
        assert_eq!(ps.len(), 4);
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
        assert!(ps.iter().all(|&p| p < (1 << 62)));
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007u64 * 3));
    }

    #[test]
    fn univariate_gcd_recovers_common_factor() {
        let p = 1_000_000_007;
        // (x+1)(x+2) and (x+1)(x+3)
        let a = umul(&vec![1, 1], &vec![2, 1], p);
        let b = umul(&vec![1, 1], &vec![3, 1], p);
        assert_eq!(ugcd(&a, &b, p), vec![1, 1]);
        let (q, r) = udivrem(&a, &vec![1, 1], p);
        assert!(r.is_empty());
        assert_eq!(q, vec![2, 1]);
    }
}
