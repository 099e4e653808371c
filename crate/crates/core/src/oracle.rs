//! Exact factorization over `Q[X]` and `Q[X, Y]` at desk scale.
//!
//! Univariate polynomials are factored by the classical Zassenhaus scheme:
//! squarefree decomposition, factorization modulo a small prime by
//! Cantor-Zassenhaus, Hensel lifting past the Landau-Mignotte bound and
//! recombination of lifted factors by subset search. Bivariate polynomials
//! are reduced to the univariate case by Kronecker substitution.
//!
//! This module relies only on basic polynomial arithmetic, so it can serve
//! as an independent check on the criteria.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bivar::BivarPoly;
use crate::error::{Error, Result};
use crate::poly::{BigRat, IntPoly, RatPoly};

/// Limits on the work the oracle is allowed to do.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleBudget {
    pub max_degree: usize,
    pub max_coeff_bits: u64,
    pub max_candidates: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_degree: 128,
            max_coeff_bits: 4096,
            max_candidates: 200_000,
        }
    }
}

/// `unit * prod f_i^(e_i)` with monic irreducible `f_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyFactorization {
    pub unit: BigRat,
    pub factors: Vec<(RatPoly, u32)>,
}

impl PolyFactorization {
    /// Number of irreducible factors counted with multiplicity.
    pub fn count(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    pub fn is_irreducible(&self) -> bool {
        self.count() == 1
    }

    pub fn product(&self) -> RatPoly {
        self.factors
            .iter()
            .fold(RatPoly::constant(self.unit.clone()), |acc, (f, e)| {
                &acc * &f.pow(*e)
            })
    }

    /// Degrees of the irreducible factors, one entry per multiplicity.
    pub fn degrees(&self) -> Vec<usize> {
        let mut v = Vec::new();
        for (f, e) in &self.factors {
            v.extend(std::iter::repeat_n(f.deg(), *e as usize));
        }
        v
    }
}

pub fn factor_over_q(f: &RatPoly, budget: &OracleBudget) -> Result<PolyFactorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let unit = f.leading();
    if f.deg() > budget.max_degree {
        return Err(Error::BudgetExceeded);
    }
    let mut factors = Vec::new();
    let mut spent = 0u64;
    for (part, mult) in f.squarefree_decomposition() {
        let (_, prim) = part.to_primitive()?;
        if prim
            .coeffs()
            .iter()
            .any(|c| c.bits() > budget.max_coeff_bits)
        {
            return Err(Error::BudgetExceeded);
        }
        for g in factor_squarefree(&prim, budget, &mut spent)? {
            factors.push((g.to_rat().monic(), mult));
        }
    }
    factors.sort_by(|a, b| {
        a.0.deg()
            .cmp(&b.0.deg())
            .then_with(|| a.0.to_bracket().cmp(&b.0.to_bracket()))
    });
    Ok(PolyFactorization { unit, factors })
}

pub fn is_irreducible_over_q(f: &RatPoly, budget: &OracleBudget) -> Result<bool> {
    if f.deg() == 0 {
        return Err(Error::Precondition("degree must be at least 1".into()));
    }
    Ok(factor_over_q(f, budget)?.is_irreducible())
}

/// Irreducible factors over `Z` of a squarefree primitive polynomial.
fn factor_squarefree(h: &IntPoly, budget: &OracleBudget, spent: &mut u64) -> Result<Vec<IntPoly>> {
    let mut out = Vec::new();
    let mut h = h.primitive_part()?;
    while h.deg() >= 1 {
        match small_rational_root(&h) {
            Some(lin) => {
                h = h.div_exact(&lin).expect("root factor divides");
                out.push(lin);
            }
            None => break,
        }
    }
    if h.deg() == 1 {
        out.push(h);
    } else if h.deg() >= 2 {
        out.extend(zassenhaus(&h, budget, spent)?);
    }
    Ok(out)
}

fn small_divisors(x: &BigInt) -> Option<Vec<BigInt>> {
    let x = x.abs().to_u64().filter(|&v| v <= 1 << 32)?;
    let mut v = Vec::new();
    let mut d = 1u64;
    while d * d <= x {
        if x % d == 0 {
            v.push(BigInt::from(d));
            if d * d != x {
                v.push(BigInt::from(x / d));
            }
        }
        d += 1;
    }
    Some(v)
}

/// A linear factor `q X - p` when `f` has a rational root and its end
/// coefficients are small enough to enumerate divisors.
fn small_rational_root(f: &IntPoly) -> Option<IntPoly> {
    if f.constant_term().is_zero() {
        return Some(IntPoly::from_i64(&[0, 1]));
    }
    let ps = small_divisors(&f.constant_term())?;
    let qs = small_divisors(&f.leading())?;
    for q in &qs {
        for p in &ps {
            if !p.gcd(q).is_one() {
                continue;
            }
            for s in [p.clone(), -p.clone()] {
                if f.eval_homogeneous(&s, q).ok()?.is_zero() {
                    return Some(IntPoly::new(vec![-s, q.clone()]));
                }
            }
        }
    }
    None
}

// ---- arithmetic in F_p[X], coefficients ascending and trimmed ----

type Fp = Vec<u64>;

fn trim(mut v: Fp) -> Fp {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let mut r = 1u64;
    let mut b = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = mulm(r, b, p);
        }
        b = mulm(b, b, p);
        e >>= 1;
    }
    r
}

fn fp_sub(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| (a.get(i).unwrap_or(&0) + p - b.get(i).unwrap_or(&0)) % p)
            .collect(),
    )
}

fn fp_mul(a: &Fp, b: &Fp, p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulm(x, y, p)) % p;
        }
    }
    trim(out)
}

fn fp_divrem(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp) {
    let db = b.len() - 1;
    let inv = inv_mod(b[db], p);
    let mut r = a.clone();
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![0u64; r.len() - db];
    for k in (0..q.len()).rev() {
        let c = mulm(r[k + db], inv, p);
        q[k] = c;
        if c != 0 {
            for (i, &bc) in b.iter().enumerate() {
                r[k + i] = (r[k + i] + p - mulm(c, bc, p)) % p;
            }
        }
    }
    (trim(q), trim(r))
}

fn fp_monic(a: &Fp, p: u64) -> Fp {
    match a.last() {
        None => Vec::new(),
        Some(&l) => {
            let inv = inv_mod(l, p);
            a.iter().map(|&c| mulm(c, inv, p)).collect()
        }
    }
}

fn fp_gcd(a: &Fp, b: &Fp, p: u64) -> Fp {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_empty() {
        let r = fp_divrem(&x, &y, p).1;
        x = y;
        y = r;
    }
    fp_monic(&x, p)
}

/// `(s, t)` with `s a + t b = 1` for coprime `a`, `b`.
fn fp_xgcd(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1): (Fp, Fp) = (vec![1], Vec::new());
    let (mut t0, mut t1): (Fp, Fp) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = fp_divrem(&r0, &r1, p);
        let s2 = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        let t2 = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    let inv = inv_mod(r0[0], p);
    let scale = |v: &Fp| trim(v.iter().map(|&c| mulm(c, inv, p)).collect());
    (scale(&s0), scale(&t0))
}

fn fp_powmod(base: &Fp, exp: &BigUint, m: &Fp, p: u64) -> Fp {
    let mut result: Fp = vec![1];
    let b = fp_divrem(base, m, p).1;
    for i in (0..exp.bits()).rev() {
        result = fp_divrem(&fp_mul(&result, &result, p), m, p).1;
        if exp.bit(i) {
            result = fp_divrem(&fp_mul(&result, &b, p), m, p).1;
        }
    }
    fp_divrem(&result, m, p).1
}

fn fp_derivative(a: &Fp, p: u64) -> Fp {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mulm(c, i as u64 % p, p))
            .collect(),
    )
}

fn reduce(f: &IntPoly, p: u64) -> Fp {
    let pb = BigInt::from(p);
    trim(
        f.coeffs()
            .iter()
            .map(|c| c.mod_floor(&pb).to_u64().expect("reduced"))
            .collect(),
    )
}

/// Distinct-degree then equal-degree factorization of a monic squarefree
/// polynomial over `F_p`, `p` odd.
fn factor_mod_p(f: &Fp, p: u64, rng: &mut ChaCha8Rng) -> Vec<Fp> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x: Fp = vec![0, 1];
    let mut h = x.clone();
    let pb = BigUint::from(p);
    let mut d = 1usize;
    while 2 * d < rest.len() {
        h = fp_powmod(&h, &pb, &rest, p);
        let g = fp_gcd(&rest, &fp_sub(&h, &x, p), p);
        if g.len() > 1 {
            out.extend(equal_degree(&g, d, p, rng));
            rest = fp_divrem(&rest, &g, p).0;
            h = fp_divrem(&h, &rest, p).1;
        }
        d += 1;
    }
    if rest.len() > 1 {
        out.push(fp_monic(&rest, p));
    }
    out
}

fn equal_degree(g: &Fp, d: usize, p: u64, rng: &mut ChaCha8Rng) -> Vec<Fp> {
    let n = g.len() - 1;
    if n == d {
        return vec![g.clone()];
    }
    let exp = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a: Fp = trim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.len() <= 1 {
            continue;
        }
        let b = fp_sub(&fp_powmod(&a, &exp, g, p), &vec![1], p);
        let c = fp_gcd(g, &b, p);
        if c.len() > 1 && c.len() < g.len() {
            let other = fp_monic(&fp_divrem(g, &c, p).0, p);
            let mut v = equal_degree(&c, d, p, rng);
            v.extend(equal_degree(&other, d, p, rng));
            return v;
        }
    }
}

// ---- polynomials over Z / m Z with BigInt coefficients ----

fn zm_reduce(v: Vec<BigInt>, m: &BigInt) -> Vec<BigInt> {
    let mut v: Vec<BigInt> = v.into_iter().map(|c| c.mod_floor(m)).collect();
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn zm_mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    zm_reduce(out, m)
}

fn to_big(a: &Fp) -> Vec<BigInt> {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// Lifts `f = g h (mod p)` with `g`, `h` monic to `f = G H (mod p^k)`,
/// `f` monic modulo `p^k`.
fn hensel_pair(f: &[BigInt], g: &Fp, h: &Fp, p: u64, k: u32) -> (Vec<BigInt>, Vec<BigInt>) {
    let (_, t) = fp_xgcd(g, h, p);
    let pb = BigInt::from(p);
    let mut big_g = to_big(g);
    let mut big_h = to_big(h);
    let mut pi = pb.clone();
    for _ in 1..k {
        let next = &pi * &pb;
        let prod = zm_mul(&big_g, &big_h, &next);
        let n = f.len().max(prod.len());
        let diff: Vec<BigInt> = (0..n)
            .map(|i| {
                let a = f.get(i).cloned().unwrap_or_default();
                let b = prod.get(i).cloned().unwrap_or_default();
                (a - b).mod_floor(&next)
            })
            .collect();
        let e: Fp = trim(
            diff.iter()
                .map(|c| (c / &pi).mod_floor(&pb).to_u64().expect("reduced"))
                .collect(),
        );
        if !e.is_empty() {
            let tau = fp_divrem(&fp_mul(&t, &e, p), g, p).1;
            let sigma = fp_divrem(&fp_sub(&e, &fp_mul(&tau, h, p), p), g, p).0;
            let bump = |base: &mut Vec<BigInt>, corr: &Fp| {
                if base.len() < corr.len() {
                    base.resize(corr.len(), BigInt::zero());
                }
                for (i, &c) in corr.iter().enumerate() {
                    base[i] += BigInt::from(c) * &pi;
                }
            };
            bump(&mut big_g, &tau);
            bump(&mut big_h, &sigma);
        }
        pi = next;
    }
    (zm_reduce(big_g, &pi), zm_reduce(big_h, &pi))
}

fn hensel_all(f: &[BigInt], factors: &[Fp], p: u64, k: u32) -> Vec<Vec<BigInt>> {
    if factors.len() == 1 {
        return vec![f.to_vec()];
    }
    let rest = factors[1..]
        .iter()
        .fold(vec![1u64], |acc, g| fp_mul(&acc, g, p));
    let (g, h) = hensel_pair(f, &factors[0], &rest, p, k);
    let mut out = vec![g];
    out.extend(hensel_all(&h, &factors[1..], p, k));
    out
}

fn small_primes() -> impl Iterator<Item = u64> {
    (5u64..).filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

const PRIME_TRIALS: usize = 3;

fn zassenhaus(h: &IntPoly, budget: &OracleBudget, spent: &mut u64) -> Result<Vec<IntPoly>> {
    let lc = h.leading();
    let mut rng = ChaCha8Rng::seed_from_u64(crate::arith::DEFAULT_SEED);
    let mut best: Option<(u64, Vec<Fp>)> = None;
    let mut tried = 0;
    for p in small_primes().take_while(|&p| p < 100_000) {
        if (&lc % p).is_zero() {
            continue;
        }
        let hp = reduce(h, p);
        if fp_gcd(&hp, &fp_derivative(&hp, p), p).len() > 1 {
            continue;
        }
        let facs = factor_mod_p(&fp_monic(&hp, p), p, &mut rng);
        if facs.len() == 1 {
            return Ok(vec![h.clone()]);
        }
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
        tried += 1;
        if tried == PRIME_TRIALS {
            break;
        }
    }
    let (p, modp) = best.ok_or(Error::BudgetExceeded)?;
    let bound: BigInt = {
        let nsq = h.norm_sq();
        let mut root = nsq.sqrt();
        if &root * &root < nsq {
            root += 1;
        }
        root * lc.abs() * (BigInt::one() << (h.deg() + 1))
    };
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut modulus = pb.clone();
    while modulus <= bound {
        modulus *= &pb;
        k += 1;
    }
    let lc_inv = lc.extended_gcd(&modulus).x.mod_floor(&modulus);
    let monic: Vec<BigInt> = zm_reduce(h.coeffs().iter().map(|c| c * &lc_inv).collect(), &modulus);
    let lifted = hensel_all(&monic, &modp, p, k);
    recombine(h, lifted, &modulus, budget, spent)
}

fn symmetric(v: &[BigInt], m: &BigInt) -> IntPoly {
    let half: BigInt = m >> 1;
    IntPoly::new(
        v.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

/// Advances `idx` to the next `k`-subset of `0..n` in lexicographic order.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn recombine(
    h: &IntPoly,
    mut pool: Vec<Vec<BigInt>>,
    m: &BigInt,
    budget: &OracleBudget,
    spent: &mut u64,
) -> Result<Vec<IntPoly>> {
    let mut out = Vec::new();
    let mut rest = h.clone();
    let mut size = 1;
    while 2 * size <= pool.len() {
        let mut idx: Vec<usize> = (0..size).collect();
        let mut found = None;
        loop {
            *spent += 1;
            if *spent > budget.max_candidates {
                return Err(Error::BudgetExceeded);
            }
            let lc = rest.leading();
            let prod = idx
                .iter()
                .fold(vec![lc], |acc, &i| zm_mul(&acc, &pool[i], m));
            let cand = symmetric(&prod, m).primitive_part()?;
            let plausible = cand.constant_term().is_zero()
                || (rest.constant_term() % cand.constant_term()).is_zero();
            if plausible {
                if let Some(q) = rest.div_exact(&cand) {
                    found = Some((cand, q));
                    break;
                }
            }
            if !next_combination(&mut idx, pool.len()) {
                break;
            }
        }
        match found {
            Some((cand, q)) => {
                out.push(cand);
                rest = q;
                for &i in idx.iter().rev() {
                    pool.remove(i);
                }
            }
            None => size += 1,
        }
    }
    if rest.deg() >= 1 {
        out.push(rest.primitive_part()?);
    }
    Ok(out)
}

/// `c(X) * prod F_i(X, Y)^(e_i)`: the content factorization in `Q[X]` and the
/// primitive irreducible factors of positive `Y`-degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivarFactorization {
    pub content: PolyFactorization,
    pub factors: Vec<(BivarPoly, u32)>,
}

impl BivarFactorization {
    pub fn count(&self) -> u32 {
        self.content.count() + self.factors.iter().map(|(_, e)| e).sum::<u32>()
    }

    pub fn is_irreducible(&self) -> bool {
        self.count() == 1
    }

    pub fn product(&self) -> BivarPoly {
        let mut acc = BivarPoly::new(vec![self.content.product()]);
        for (f, e) in &self.factors {
            for _ in 0..*e {
                acc = &acc * f;
            }
        }
        acc
    }
}

fn normalize_bivar(f: &BivarPoly) -> BivarPoly {
    let lead = f.coeffs().last().expect("nonzero").leading();
    f.scale(&lead.recip())
}

/// Factors a bivariate polynomial over `Q` through the substitution
/// `Y -> X^D` with `D` exceeding every `X`-degree.
pub fn factor_bivar_bruteforce(f: &BivarPoly, budget: &OracleBudget) -> Result<BivarFactorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let content_poly = f.content_x();
    let lead = f.coeffs().last().expect("nonzero");
    let unit_lc = lead.leading() / content_poly.leading();
    let content_scaled = content_poly.scale(&unit_lc);
    let mut prim = BivarPoly::new(
        f.coeffs()
            .iter()
            .map(|c| c.div_exact(&content_poly).expect("content divides"))
            .collect(),
    );
    prim = normalize_bivar(&prim);
    let content = factor_over_q(&content_scaled, budget)?;
    let mut factors: Vec<(BivarPoly, u32)> = Vec::new();
    let mut y_power = 0;
    while prim.deg_y() >= 1 && prim.coeff(0).is_zero() {
        prim = BivarPoly::new(prim.coeffs()[1..].to_vec());
        y_power += 1;
    }
    if y_power > 0 {
        factors.push((BivarPoly::from_i64_rows(&[&[], &[1]]), y_power));
    }
    if prim.deg_y() >= 1 {
        for g in kronecker(&prim, budget)? {
            let g = normalize_bivar(&g);
            match factors.iter_mut().find(|(h, _)| *h == g) {
                Some(entry) => entry.1 += 1,
                None => factors.push((g, 1)),
            }
        }
    }
    factors.sort_by_key(|(g, _)| (g.deg_y(), g.to_text()));
    Ok(BivarFactorization { content, factors })
}

fn kronecker(f: &BivarPoly, budget: &OracleBudget) -> Result<Vec<BivarPoly>> {
    let width = f.deg_x() + 1;
    let mut image = vec![BigRat::zero(); width * f.deg_y() + width];
    for (i, a) in f.coeffs().iter().enumerate() {
        for (j, c) in a.coeffs().iter().enumerate() {
            image[i * width + j] = c.clone();
        }
    }
    let image = RatPoly::new(image);
    if image.deg() > budget.max_degree {
        return Err(Error::BudgetExceeded);
    }
    let uni = factor_over_q(&image, budget)?;
    let mut pool: Vec<RatPoly> = Vec::new();
    for (g, e) in &uni.factors {
        pool.extend(std::iter::repeat_n(g.clone(), *e as usize));
    }
    let inverse = |u: &RatPoly| -> BivarPoly {
        let mut rows = vec![vec![BigRat::zero(); width]; u.deg() / width + 1];
        for (k, c) in u.coeffs().iter().enumerate() {
            rows[k / width][k % width] = c.clone();
        }
        BivarPoly::new(rows.into_iter().map(RatPoly::new).collect())
    };
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut spent = 0u64;
    let mut size = 1;
    while 2 * size <= pool.len() && rest.deg_y() >= 1 {
        let mut idx: Vec<usize> = (0..size).collect();
        let mut found = None;
        loop {
            spent += 1;
            if spent > budget.max_candidates {
                return Err(Error::BudgetExceeded);
            }
            let prod = idx.iter().fold(RatPoly::one(), |acc, &i| &acc * &pool[i]);
            let cand = inverse(&prod);
            if cand.deg_y() >= 1 && cand.deg_y() < rest.deg_y() {
                if let Some(q) = rest.div_exact(&cand) {
                    found = Some((cand, q));
                    break;
                }
            }
            if !next_combination(&mut idx, pool.len()) {
                break;
            }
        }
        match found {
            Some((cand, q)) => {
                out.push(cand);
                rest = q;
                for &i in idx.iter().rev() {
                    pool.remove(i);
                }
            }
            None => size += 1,
        }
    }
    out.push(rest);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(c: &[i64]) -> RatPoly {
        RatPoly::from_i64(c)
    }

    fn budget() -> OracleBudget {
        OracleBudget::default()
    }

    #[test]
    fn small_factorizations() {
        let f = r(&[360, -342, 119, -18, 1]);
        let fac = factor_over_q(&f, &budget()).unwrap();
        assert_eq!(fac.count(), 4);
        assert_eq!(fac.product(), f);
        assert!(is_irreducible_over_q(&r(&[1, 0, 1]), &budget()).unwrap());
        assert!(!is_irreducible_over_q(&r(&[1, 2, 1]), &budget()).unwrap());
        assert!(is_irreducible_over_q(&r(&[0, 1]), &budget()).unwrap());
        assert!(is_irreducible_over_q(&r(&[-1, 1, -2, 3, 9]), &budget()).unwrap());
        assert!(is_irreducible_over_q(&r(&[35, 3, -1, -1, 1]), &budget()).unwrap());
        for m in 3..=6 {
            let mut c = vec![5, 5];
            c.resize(m + 1, 0);
            c[m] = 1;
            assert!(is_irreducible_over_q(&r(&c), &budget()).unwrap());
        }
    }

    #[test]
    fn swinnerton_dyer_style() {
        // X^4 - 10X^2 + 1 is irreducible but splits modulo every prime.
        let f = r(&[1, 0, -10, 0, 1]);
        assert!(is_irreducible_over_q(&f, &budget()).unwrap());
        let g = &f * &r(&[2, 0, 0, 7, 1]);
        let fac = factor_over_q(&g.scale(&BigRat::new(3.into(), 4.into())), &budget()).unwrap();
        assert_eq!(fac.count(), 2);
        assert_eq!(fac.unit, BigRat::new(3.into(), 4.into()));
    }

    #[test]
    fn large_coefficients() {
        let a = r(&[1_000_003, 0, 0, 1]);
        let b = r(&[-999_983, 7, 1]);
        let c = r(&[5, -1_000_033, 0, 0, 1]);
        let f = &(&a * &b) * &(&c * &c);
        let fac = factor_over_q(&f, &budget()).unwrap();
        assert_eq!(fac.count(), 4);
        assert_eq!(fac.product(), f);
    }

    #[test]
    fn bivariate() {
        let f = BivarPoly::from_i64_rows(&[&[0, 0, -1], &[], &[1]]);
        let fac = factor_bivar_bruteforce(&f, &budget()).unwrap();
        assert_eq!(fac.count(), 2);
        let ex8 =
            BivarPoly::from_i64_rows(&[&[2, 0, 0, 1], &[0, -1, 1], &[-1, 1], &[1, 0, -1], &[3, 5]]);
        assert!(factor_bivar_bruteforce(&ex8, &budget())
            .unwrap()
            .is_irreducible());
        let g = &ex8 * &BivarPoly::from_i64_rows(&[&[1, 1], &[3]]);
        let g = g.scale_poly(&r(&[1, 0, 1]));
        let fac = factor_bivar_bruteforce(&g, &budget()).unwrap();
        assert_eq!(fac.count(), 3);
        assert_eq!(fac.product(), g);
        let y = BivarPoly::from_i64_rows(&[&[], &[1]]);
        let h = &(&y * &y) * &BivarPoly::from_i64_rows(&[&[1], &[0, 1]]);
        assert_eq!(factor_bivar_bruteforce(&h, &budget()).unwrap().count(), 3);
    }
}
