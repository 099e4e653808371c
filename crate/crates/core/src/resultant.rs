//! Exact resultants.
//!
//! The sign convention throughout is `Res(f, g) = a_n^m * prod g(theta_i)`
//! over the roots `theta_i` of `f`, so `Res(f, g) = (-1)^(mn) Res(g, f)`.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::bivar::BivarPoly;
use crate::bound::DirectedBound;
use crate::error::{Error, Result};
use crate::poly::{BigRat, IntPoly, RatPoly};

/// Integral domain with exact division, enough for the subresultant PRS.
pub trait ExactRing: Clone + PartialEq {
    fn nil() -> Self;
    fn unit() -> Self;
    fn is_nil(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / o`, where the caller guarantees divisibility.
    fn div_exact(&self, o: &Self) -> Self;

    fn pow(&self, e: usize) -> Self {
        let mut acc = Self::unit();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl ExactRing for BigInt {
    fn nil() -> Self {
        Zero::zero()
    }
    fn unit() -> Self {
        One::one()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, o: &Self) -> Self {
        debug_assert!(Zero::is_zero(&(self % o)));
        self / o
    }
}

impl ExactRing for RatPoly {
    fn nil() -> Self {
        RatPoly::zero()
    }
    fn unit() -> Self {
        RatPoly::one()
    }
    fn is_nil(&self) -> bool {
        RatPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, o: &Self) -> Self {
        RatPoly::div_exact(self, o).expect("exact division in Q[X]")
    }
}

fn trim<R: ExactRing>(v: &mut Vec<R>) {
    while v.last().is_some_and(|c| c.is_nil()) {
        v.pop();
    }
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
fn prem<R: ExactRing>(a: &[R], b: &[R]) -> Vec<R> {
    let db = b.len() - 1;
    let lc = &b[db];
    let mut r: Vec<R> = a.to_vec();
    let delta = a.len() - b.len();
    let mut steps = 0;
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = c.mul(lc);
        }
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] = r[shift + i].sub(&lr.mul(bc));
        }
        trim(&mut r);
        steps += 1;
    }
    let extra = lc.pow(delta + 1 - steps);
    r.iter().map(|c| c.mul(&extra)).collect()
}

/// Resultant over an exact ring by the subresultant PRS.
pub fn resultant_generic<R: ExactRing>(a: &[R], b: &[R]) -> R {
    let mut a: Vec<R> = a.to_vec();
    let mut b: Vec<R> = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    if a.is_empty() || b.is_empty() {
        return R::nil();
    }
    let mut s = R::unit();
    if a.len() < b.len() {
        if (a.len() - 1) % 2 == 1 && (b.len() - 1) % 2 == 1 {
            s = s.neg();
        }
        std::mem::swap(&mut a, &mut b);
    }
    if b.len() == 1 {
        return s.mul(&b[0].pow(a.len() - 1));
    }
    let mut g = R::unit();
    let mut h = R::unit();
    loop {
        let da = a.len() - 1;
        let db = b.len() - 1;
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            s = s.neg();
        }
        let r = prem(&a, &b);
        a = b;
        let divisor = g.mul(&h.pow(delta));
        b = r.iter().map(|c| c.div_exact(&divisor)).collect();
        g = a[a.len() - 1].clone();
        h = if delta == 0 {
            h
        } else {
            g.pow(delta).div_exact(&h.pow(delta - 1))
        };
        if b.is_empty() {
            return R::nil();
        }
        if b.len() == 1 {
            let da = a.len() - 1;
            let hh = b[0].pow(da).div_exact(&h.pow(da - 1));
            return s.mul(&hh);
        }
    }
}

/// `Res(f, g)` by the subresultant PRS.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> Result<BigInt> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(resultant_generic(f.coeffs(), g.coeffs()))
}

/// `Res(f, g)` as the determinant of the Sylvester matrix, computed by
/// fraction-free Bareiss elimination. Slow; kept as a cross-check.
pub fn resultant_sylvester(f: &IntPoly, g: &IntPoly) -> Result<BigInt> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = f.deg();
    let m = g.deg();
    let size = n + m;
    if size == 0 {
        return Ok(BigInt::one());
    }
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    for row in 0..m {
        for (j, c) in f.coeffs().iter().rev().enumerate() {
            mat[row][row + j] = c.clone();
        }
    }
    for row in 0..n {
        for (j, c) in g.coeffs().iter().rev().enumerate() {
            mat[m + row][row + j] = c.clone();
        }
    }
    Ok(bareiss_det(mat))
}

/// Determinant of a square integer matrix by Bareiss elimination.
pub fn bareiss_det(mut mat: Vec<Vec<BigInt>>) -> BigInt {
    let size = mat.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..size {
        if mat[k][k].is_zero() {
            let Some(swap) = (k + 1..size).find(|&r| !mat[r][k].is_zero()) else {
                return BigInt::zero();
            };
            mat.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let v = &mat[i][j] * &mat[k][k] - &mat[i][k] * &mat[k][j];
                mat[i][j] = v / &prev;
            }
            mat[i][k] = BigInt::zero();
        }
        prev = mat[k][k].clone();
    }
    sign * &mat[size - 1][size - 1]
}

fn rat(x: &BigInt) -> BigRat {
    BigRat::from_integer(x.clone())
}

fn clear(v: BigRat) -> Result<BigInt> {
    if v.is_integer() {
        Ok(v.to_integer())
    } else {
        Err(Error::NonIntegerResult)
    }
}

/// `Res(f, aX^2+bX+c)` through the change of variable `X -> X - b/2a`.
///
/// With `D = (b^2-4ac)/4a^2` and `A_i` the coefficients of `f(X - b/2a)`,
/// the value is `a^n ((sum A_2i D^i)^2 - D (sum A_2i+1 D^i)^2)`.
pub fn resultant_quadratic_shift(
    f: &IntPoly,
    a: &BigInt,
    b: &BigInt,
    c: &BigInt,
) -> Result<BigInt> {
    if a.is_zero() {
        return Err(Error::Precondition(
            "leading coefficient a must be nonzero".into(),
        ));
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = f.deg();
    let shift = BigRat::new(-b, a * 2);
    let disc = BigRat::new(b * b - a * c * 4, a * a * 4);
    let mut shifted = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut acc = BigRat::zero();
        let mut pw = BigRat::one();
        for j in i..=n {
            let term = rat(&f.coeff(j)) * rat(&binomial(BigInt::from(j), BigInt::from(i))) * &pw;
            acc += term;
            pw *= &shift;
        }
        shifted.push(acc);
    }
    let mut even = BigRat::zero();
    let mut odd = BigRat::zero();
    let mut dpow = BigRat::one();
    for pair in shifted.chunks(2) {
        even += &pair[0] * &dpow;
        if let Some(o) = pair.get(1) {
            odd += o * &dpow;
        }
        dpow *= &disc;
    }
    let val = rat(&a.pow(n as u32)) * (&even * &even - &disc * &odd * &odd);
    clear(val)
}

/// The power sums `x_k = t_1^k + t_2^k` of the roots of `aX^2 + bX + c`,
/// from `x_0 = 2`, `x_1 = -b/a` and `x_(k+2) = -(b/a) x_(k+1) - (c/a) x_k`.
#[derive(Clone, Debug)]
pub struct LucasSequence {
    ratio_b: BigRat,
    ratio_c: BigRat,
    cache: Vec<BigRat>,
}

impl LucasSequence {
    pub fn new(a: &BigInt, b: &BigInt, c: &BigInt) -> Self {
        let ratio_b = BigRat::new(b.clone(), a.clone());
        let ratio_c = BigRat::new(c.clone(), a.clone());
        let cache = vec![BigRat::from_integer(2.into()), -ratio_b.clone()];
        LucasSequence {
            ratio_b,
            ratio_c,
            cache,
        }
    }

    pub fn get(&mut self, k: usize) -> BigRat {
        while self.cache.len() <= k {
            let l = self.cache.len();
            let next = -(&self.ratio_b * &self.cache[l - 1]) - &self.ratio_c * &self.cache[l - 2];
            self.cache.push(next);
        }
        self.cache[k].clone()
    }
}

/// `Res(f, aX^2+bX+c)` through the power sums of the roots of the
/// quadratic: `sum c^i a^(n-i) a_i^2 + sum_(i<j) c^i a^(n-i) x_(j-i) a_i a_j`.
/// A double root `-b/2a` is handled by `a^n f(-b/2a)^2`.
pub fn resultant_quadratic_binet(
    f: &IntPoly,
    a: &BigInt,
    b: &BigInt,
    c: &BigInt,
) -> Result<BigInt> {
    if a.is_zero() {
        return Err(Error::Precondition(
            "leading coefficient a must be nonzero".into(),
        ));
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = f.deg();
    let an = rat(&a.pow(n as u32));
    if b * b == a * c * 4 {
        let root = BigRat::new(-b, a * 2);
        let v = f.eval_rat(&root);
        return clear(an * &v * &v);
    }
    let mut seq = LucasSequence::new(a, b, c);
    let ca = BigRat::new(c.clone(), a.clone());
    let mut total = BigRat::zero();
    let mut cpow = BigRat::one();
    for i in 0..=n {
        let ai = rat(&f.coeff(i));
        if !ai.is_zero() {
            let mut inner = &ai * &ai;
            for j in i + 1..=n {
                let aj = f.coeff(j);
                if !aj.is_zero() {
                    inner += seq.get(j - i) * &ai * rat(&aj);
                }
            }
            total += &cpow * inner;
        }
        cpow *= &ca;
    }
    clear(an * total)
}

/// `Res_Y(f, g)` as a polynomial in `X`; zero when `f` and `g` share a
/// factor involving `Y`.
pub fn resultant_bivar_y(f: &BivarPoly, g: &BivarPoly) -> Result<RatPoly> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(resultant_generic(f.coeffs(), g.coeffs()))
}

/// Upper bound for `||f||^m ||g||^n` (with `n = deg f`, `m = deg g`), which
/// dominates `|Res(f, g)|` by Hadamard's inequality. The square roots are
/// rounded up.
pub fn hadamard_bound(f: &IntPoly, g: &IntPoly) -> Result<BigRat> {
    Ok(hadamard_enclosure(f, g)?.hi)
}

pub fn hadamard_enclosure(f: &IntPoly, g: &IntPoly) -> Result<DirectedBound> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = f.deg() as i64;
    let m = g.deg() as i64;
    let nf = DirectedBound::int(f.norm_sq()).root(2)?;
    let ng = DirectedBound::int(g.norm_sq()).root(2)?;
    let left = nf.powi(m).expect("nonnegative exponent");
    let right = ng.powi(n).expect("nonnegative exponent");
    Ok(left.mul_nonneg(&right))
}
