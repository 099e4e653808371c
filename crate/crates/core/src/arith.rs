//! Integer primality, budgeted factorization, `Omega` and the divisor
//! approximants `d_k`.

use std::sync::OnceLock;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

const TRIAL_LIMIT: u32 = 1_000_000;

/// Default seed for Pollard rho.
pub const DEFAULT_SEED: u64 = 0x5eed_2024;

/// Effort limit for [`factorize`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorBudget {
    /// Total number of Pollard rho iterations across all composites.
    pub rho_iterations: u64,
    pub seed: u64,
}

impl Default for FactorBudget {
    fn default() -> Self {
        FactorBudget {
            rho_iterations: 400_000,
            seed: DEFAULT_SEED,
        }
    }
}

impl FactorBudget {
    pub fn with_iterations(rho_iterations: u64) -> Self {
        FactorBudget {
            rho_iterations,
            ..Self::default()
        }
    }
}

/// Prime factorization of `|n|`, possibly incomplete.
///
/// `factors` is sorted by prime. When the budget ran out, `cofactor` holds
/// the product of the composite parts that were not split; otherwise it is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<(BigInt, u32)>,
    pub cofactor: BigInt,
}

/// `Omega(n)` when the factorization is complete; a lower bound otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Omega {
    Exact(u32),
    AtLeast(u32),
}

impl Factorization {
    pub fn is_complete(&self) -> bool {
        self.cofactor.is_one()
    }

    pub fn product(&self) -> BigInt {
        self.factors
            .iter()
            .fold(self.cofactor.clone(), |acc, (p, e)| acc * p.pow(*e))
    }

    pub fn largest_prime(&self) -> Option<&BigInt> {
        self.factors.last().map(|(p, _)| p)
    }

    /// All divisors of `|n|` that do not exceed `limit`, in increasing
    /// order. Only meaningful for complete factorizations.
    pub fn divisors_up_to(&self, limit: &BigInt) -> Vec<BigInt> {
        let mut out = Vec::new();
        divisor_walk(
            &self.factors,
            0,
            BigInt::one(),
            &mut |d| d <= limit,
            &mut |d| out.push(d.clone()),
        );
        out.sort();
        out
    }
}

fn divisor_walk(
    factors: &[(BigInt, u32)],
    idx: usize,
    cur: BigInt,
    admissible: &mut dyn FnMut(&BigInt) -> bool,
    visit: &mut dyn FnMut(&BigInt),
) {
    if idx == factors.len() {
        visit(&cur);
        return;
    }
    let (p, e) = &factors[idx];
    let mut d = cur;
    for i in 0..=*e {
        if i > 0 {
            d *= p;
            if !admissible(&d) {
                break;
            }
        }
        divisor_walk(factors, idx + 1, d.clone(), admissible, visit);
    }
}

pub fn omega(fac: &Factorization) -> Omega {
    let total: u32 = fac.factors.iter().map(|(_, e)| *e).sum();
    if fac.is_complete() {
        Omega::Exact(total)
    } else {
        Omega::AtLeast(total + 1)
    }
}

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
        (0..=n).filter(|&i| sieve[i]).map(|i| i as u32).collect()
    })
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for 64-bit inputs.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn strong_probable_prime_base2(n: &BigInt) -> bool {
    let one = BigInt::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    let mut x = BigInt::from(2).modpow(&d, n);
    if x == one || x == nm1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == nm1 {
            return true;
        }
    }
    false
}

/// Jacobi symbol `(a/n)` for odd positive `n`.
fn jacobi(a: &BigInt, n: &BigInt) -> i32 {
    let mut a = a.mod_floor(n);
    let mut n = n.clone();
    let mut t = 1;
    let three = BigInt::from(3);
    let five = BigInt::from(5);
    let eight = BigInt::from(8);
    let four = BigInt::from(4);
    while !a.is_zero() {
        while a.is_even() {
            a >>= 1;
            let r = &n % &eight;
            if r == three || r == five {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if &a % &four == three && &n % &four == three {
            t = -t;
        }
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        t
    } else {
        0
    }
}

fn half_mod(x: BigInt, n: &BigInt) -> BigInt {
    let x = if x.is_odd() { x + n } else { x };
    let h: BigInt = x >> 1;
    h.mod_floor(n)
}

/// Strong Lucas probable-prime test with Selfridge parameters.
fn strong_lucas(n: &BigInt) -> bool {
    let root = n.sqrt();
    if &root * &root == *n {
        return false;
    }
    let mut d = BigInt::from(5);
    loop {
        match jacobi(&d, n) {
            -1 => break,
            0
                if d.abs() != *n => {
                    return false;
                }
            _ => {}
        }
        d = if d.is_positive() {
            -(d + 2u32)
        } else {
            -(d - 2u32)
        };
    }
    let p = BigInt::one();
    let q: BigInt = (BigInt::one() - &d) / 4;
    let np1: BigInt = n + 1u32;
    let s = np1.trailing_zeros().unwrap_or(0);
    let k = &np1 >> s;
    let mut u = BigInt::one();
    let mut v = p.clone();
    let mut qk = q.mod_floor(n);
    let nbits = k.bits();
    for i in (0..nbits - 1).rev() {
        u = (&u * &v).mod_floor(n);
        v = (&v * &v - &qk * 2u32).mod_floor(n);
        qk = (&qk * &qk).mod_floor(n);
        if k.bit(i) {
            let nu = half_mod(&p * &u + &v, n);
            let nv = half_mod(&d * &u + &p * &v, n);
            u = nu;
            v = nv;
            qk = (&qk * &q).mod_floor(n);
        }
    }
    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 1..s {
        v = (&v * &v - &qk * 2u32).mod_floor(n);
        if v.is_zero() {
            return true;
        }
        qk = (&qk * &qk).mod_floor(n);
    }
    false
}

/// Primality test. Deterministic below `2^64`; Baillie-PSW above, which
/// has no known counterexample. Values below 2 (including all negative
/// integers) are not prime.
pub fn is_prime(n: &BigInt) -> bool {
    if n.sign() != Sign::Plus {
        return false;
    }
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    for &p in small_primes().iter().take(200) {
        if (n % p).is_zero() {
            return false;
        }
    }
    strong_probable_prime_base2(n) && strong_lucas(n)
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Brent's variant of Pollard rho on a 64-bit odd composite.
fn rho_u64(n: u64, rng: &mut ChaCha8Rng, budget: &mut u64) -> Option<u64> {
    while *budget > 0 {
        let c = rng.gen_range(1..n);
        let mut y = rng.gen_range(0..n);
        let m = 64u64;
        let mut g = 1;
        let mut r = 1u64;
        let mut q = 1u64;
        let mut x = 0;
        let mut ys = 0;
        let f = |v: u64| ((mul_mod(v, v, n) as u128 + c as u128) % n as u128) as u64;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                let lim = m.min(r - k);
                for _ in 0..lim {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                *budget = budget.saturating_sub(lim);
                g = gcd_u64(q, n);
                k += m;
                if *budget == 0 && g == 1 {
                    return None;
                }
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd_u64(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return Some(g);
        }
    }
    None
}

fn rho_big(n: &BigInt, rng: &mut ChaCha8Rng, budget: &mut u64) -> Option<BigInt> {
    let one = BigInt::one();
    while *budget > 0 {
        let c = BigInt::from(rng.gen::<u64>()) % n;
        let c = if c.is_zero() { one.clone() } else { c };
        let mut y = BigInt::from(rng.gen::<u64>()) % n;
        let m = 64u64;
        let mut g = one.clone();
        let mut r = 1u64;
        let mut q = one.clone();
        let mut x = BigInt::zero();
        let mut ys = BigInt::zero();
        let f = |v: &BigInt| (v * v + &c) % n;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                let lim = m.min(r - k);
                for _ in 0..lim {
                    y = f(&y);
                    q = (q * (&x - &y).abs()) % n;
                }
                *budget = budget.saturating_sub(lim);
                g = q.gcd(n);
                k += m;
                if *budget == 0 && g.is_one() {
                    return None;
                }
            }
            r *= 2;
        }
        if g == *n {
            loop {
                ys = f(&ys);
                g = (&x - &ys).abs().gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if g != *n {
            return Some(g);
        }
    }
    None
}

fn push_factor(out: &mut Vec<(BigInt, u32)>, p: BigInt, e: u32) {
    if let Some(slot) = out.iter_mut().find(|(q, _)| *q == p) {
        slot.1 += e;
    } else {
        out.push((p, e));
    }
}

/// Factorizes `|n|`: trial division up to `10^6`, then Pollard rho within
/// the iteration budget. `n = 0` yields an empty factorization with
/// cofactor 0.
pub fn factorize(n: &BigInt, budget: FactorBudget) -> Factorization {
    let mut m = n.abs();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    if m.is_zero() {
        return Factorization {
            factors,
            cofactor: m,
        };
    }
    for &p in small_primes() {
        let pb = BigInt::from(p);
        if &pb * &pb > m {
            break;
        }
        let mut e = 0;
        while (&m % p).is_zero() {
            m /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((pb, e));
        }
    }
    let mut cofactor = BigInt::one();
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let mut remaining = budget.rho_iterations;
    let mut stack = vec![m];
    while let Some(x) = stack.pop() {
        if x.is_one() {
            continue;
        }
        if is_prime(&x) {
            push_factor(&mut factors, x, 1);
            continue;
        }
        let root = x.sqrt();
        if &root * &root == x {
            stack.push(root.clone());
            stack.push(root);
            continue;
        }
        let split = match x.to_u64() {
            Some(s) => rho_u64(s, &mut rng, &mut remaining).map(BigInt::from),
            None => rho_big(&x, &mut rng, &mut remaining),
        };
        match split {
            Some(d) => {
                stack.push(&x / &d);
                stack.push(d);
            }
            None => cofactor *= x,
        }
    }
    factors.sort();
    Factorization { factors, cofactor }
}

/// Largest divisor `d` of `n >= 1` with `d^(k+1) <= n`, or `None` when the
/// factorization could not be completed within the budget.
pub fn d_k(n: &BigInt, k: u32, budget: FactorBudget) -> Option<BigInt> {
    assert!(n.is_positive(), "d_k requires n >= 1");
    let fac = factorize(n, budget);
    d_k_from(&fac, n, k)
}

/// [`d_k`] from an existing factorization of `n`.
pub fn d_k_from(fac: &Factorization, n: &BigInt, k: u32) -> Option<BigInt> {
    if !fac.is_complete() {
        return None;
    }
    let mut best = BigInt::one();
    let e = k + 1;
    divisor_walk(
        &fac.factors,
        0,
        BigInt::one(),
        &mut |d| d.pow(e) <= *n,
        &mut |d| {
            if *d > best {
                best = d.clone();
            }
        },
    );
    Some(best)
}
