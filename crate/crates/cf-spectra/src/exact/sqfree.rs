//! Squarefree decomposition of nonnegative integers.
//!
//! Canonical surds require the radicand to be squarefree, so every radicand
//! that enters the system passes through [`squarefree_decompose`]. Small
//! primes are stripped by trial division; what remains is handled by
//! Miller-Rabin and Brent's cycle-finding variant of Pollard rho. The
//! Miller-Rabin base set is deterministic below 3.3·10^24, which covers every
//! discriminant produced by periods of realistic length.

use num_bigint::BigInt;
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::sync::OnceLock;

const SMALL_PRIME_BOUND: usize = 1000;

fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut sieve = vec![true; SMALL_PRIME_BOUND + 1];
        let mut primes = Vec::new();
        for p in 2..=SMALL_PRIME_BOUND {
            if sieve[p] {
                primes.push(p as u64);
                let mut m = p * p;
                while m <= SMALL_PRIME_BOUND {
                    sieve[m] = false;
                    m += p;
                }
            }
        }
        primes
    })
}

const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    for &p in MR_BASES.iter() {
        let p = BigUint::from(p);
        if n == &p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'bases: for &a in MR_BASES.iter() {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Brent's rho. `n` must be odd, composite, and free of factors ≤ SMALL_PRIME_BOUND.
fn brent_rho(n: &BigUint) -> BigUint {
    let one = BigUint::one();
    let mut c = BigUint::from(1u32);
    loop {
        let mut x = BigUint::from(2u32);
        let mut y = x.clone();
        let mut d = one.clone();
        let mut count = 0u64;
        while d.is_one() {
            x = (&x * &x + &c) % n;
            y = (&y * &y + &c) % n;
            y = (&y * &y + &c) % n;
            let diff = if x > y { &x - &y } else { &y - &x };
            if diff.is_zero() {
                break; // cycle without factor; retry with new c
            }
            d = diff.gcd(n);
            count += 1;
            if count > 100_000_000 {
                break;
            }
        }
        if !d.is_one() && &d != n {
            return d;
        }
        c += 1u32;
    }
}

fn factor_into(n: BigUint, out: &mut Vec<BigUint>) {
    if n.is_one() {
        return;
    }
    if is_probable_prime(&n) {
        out.push(n);
        return;
    }
    // perfect powers shortcut: rho struggles on p^2
    let r = n.sqrt();
    if &r * &r == n {
        factor_into(r.clone(), out);
        factor_into(r, out);
        return;
    }
    let d = brent_rho(&n);
    let q = &n / &d;
    factor_into(d, out);
    factor_into(q, out);
}

/// Decompose `d ≥ 0` as `s²·f` with `f` squarefree; returns `(s, f)`.
///
/// `squarefree_decompose(0) = (1, 0)` and `squarefree_decompose(1) = (1, 1)`.
pub fn squarefree_decompose(d: &BigInt) -> (BigInt, BigInt) {
    assert!(d.sign() != num_bigint::Sign::Minus, "radicand must be ≥ 0");
    if d.is_zero() {
        return (BigInt::one(), BigInt::zero());
    }
    let mut n = d.to_biguint().expect("nonnegative");
    let mut square = BigUint::one();
    let mut free = BigUint::one();
    for &p in small_primes() {
        let pb = BigUint::from(p);
        if &pb * &pb > n {
            break;
        }
        let mut e = 0u32;
        while (&n % &pb).is_zero() {
            n /= &pb;
            e += 1;
        }
        if e >= 2 {
            square *= pb.pow(e / 2);
        }
        if e % 2 == 1 {
            free *= &pb;
        }
    }
    if !n.is_one() {
        // No prime factor ≤ SMALL_PRIME_BOUND remains in n.
        let r = n.sqrt();
        if &r * &r == n {
            square *= r;
        } else if is_probable_prime(&n) {
            free *= &n;
        } else {
            let mut primes = Vec::new();
            factor_into(n, &mut primes);
            primes.sort();
            let mut i = 0;
            while i < primes.len() {
                let p = primes[i].clone();
                let mut e = 0u32;
                while i < primes.len() && primes[i] == p {
                    e += 1;
                    i += 1;
                }
                if e >= 2 {
                    square *= p.pow(e / 2);
                }
                if e % 2 == 1 {
                    free *= &p;
                }
            }
        }
    }
    (BigInt::from(square), BigInt::from(free))
}
