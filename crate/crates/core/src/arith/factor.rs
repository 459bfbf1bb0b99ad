//! Integer factorization for squarefree reduction of radicands.
//!
//! Radicands met in practice are products of small label differences, so
//! trial division against a small-prime table settles almost everything.
//! Cofactors that survive trial division go through Miller-Rabin and
//! Pollard's rho (Brent variant).

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

const TRIAL_LIMIT: u32 = 1 << 12;

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_LIMIT as usize;
        let mut sieve = vec![true; n + 1];
        sieve[0] = false;
        sieve[1] = false;
        let mut i = 2;
        while i * i <= n {
            if sieve[i] {
                let mut j = i * i;
                while j <= n {
                    sieve[j] = false;
                    j += i;
                }
            }
            i += 1;
        }
        sieve
            .iter()
            .enumerate()
            .filter_map(|(p, &is_p)| is_p.then_some(p as u32))
            .collect()
    })
}

/// Prime factorization of a positive integer as `prime -> exponent`.
pub fn factorize(n: &BigUint) -> BTreeMap<BigUint, u32> {
    let mut out = BTreeMap::new();
    if n.is_zero() {
        return out;
    }
    let mut rest = n.clone();
    for &p in small_primes() {
        if rest.is_one() {
            return out;
        }
        let pb = BigUint::from(p);
        if &pb * &pb > rest {
            break;
        }
        let mut e = 0;
        loop {
            let (q, r) = rest.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            out.insert(pb, e);
        }
    }
    if !rest.is_one() {
        split_large(rest, &mut out);
    }
    out
}

/// Prime factorization of a machine integer.
pub fn factorize_u64(n: u64) -> BTreeMap<u64, u32> {
    let mut out = BTreeMap::new();
    if n == 0 {
        return out;
    }
    let mut rest = n;
    for &p in small_primes() {
        let p = u64::from(p);
        if p * p > rest {
            break;
        }
        while rest.is_multiple_of(p) {
            rest /= p;
            *out.entry(p).or_insert(0) += 1;
        }
    }
    if rest > 1 {
        if rest <= u64::from(TRIAL_LIMIT) * u64::from(TRIAL_LIMIT) {
            *out.entry(rest).or_insert(0) += 1;
        } else {
            for (p, e) in factorize(&BigUint::from(rest)) {
                *out.entry(p.to_u64().expect("factor of a u64")).or_insert(0) += e;
            }
        }
    }
    out
}

/// Writes `n = s * k^2` with `s` squarefree and returns `(k, s)`.
pub fn squarefree_split(n: &BigUint) -> (BigUint, BigUint) {
    let mut k = BigUint::one();
    let mut s = BigUint::one();
    for (p, e) in factorize(n) {
        k *= p.pow(e / 2);
        if e % 2 == 1 {
            s *= p;
        }
    }
    (k, s)
}

fn split_large(n: BigUint, out: &mut BTreeMap<BigUint, u32>) {
    if n.is_one() {
        return;
    }
    let root = n.sqrt();
    if &root * &root == n {
        let mut inner = BTreeMap::new();
        split_large(root, &mut inner);
        for (p, e) in inner {
            *out.entry(p).or_insert(0) += 2 * e;
        }
        return;
    }
    if is_probable_prime(&n) {
        *out.entry(n).or_insert(0) += 1;
        return;
    }
    let d = pollard_brent(&n);
    let other = &n / &d;
    split_large(d, out);
    split_large(other, out);
}

fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    for &p in small_primes().iter().take(12) {
        let pb = BigUint::from(p);
        if n == &pb {
            return true;
        }
        if (n % &pb).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_one = n - &one;
    let mut d = n_minus_one.clone();
    let mut s = 0u32;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    // Deterministic for n < 3.3e24; probabilistic beyond that.
    'witness: for &a in &[2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        let a = BigUint::from(a);
        if &a >= n {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_brent(n: &BigUint) -> BigUint {
    if n.is_even() {
        return BigUint::from(2u32);
    }
    let one = BigUint::one();
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut g = BigUint::one();
        let mut r = 1u64;
        let mut q = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        const BLOCK: u64 = 64;
        while g == one {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g == one {
                ys = y.clone();
                for _ in 0..BLOCK.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += BLOCK;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if g > one {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
        c += 1u32;
    }
}
