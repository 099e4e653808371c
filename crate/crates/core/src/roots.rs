//! Root location: coefficient tests for disks and annuli, Fujiwara's bound,
//! certified root enclosures, and degree bounds for roots of bivariate
//! polynomials over `Q(X)`.
//!
//! Enclosures are produced by Aberth-Ehrlich iteration in double precision
//! and then certified exactly: the centers are dyadic rationals, so the
//! inclusion radii `n |f(z_i)| / (|a_n| prod |z_i - z_j|)` are evaluated in
//! rational arithmetic and rounded up to the next double.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::bivar::{BivarPoly, Deg};
use crate::bound::{kth_root_bounds, pow_rat, DirectedBound};
use crate::error::{Error, Result};
use crate::poly::{BigRat, IntPoly};

fn rat(x: &BigInt) -> BigRat {
    BigRat::from_integer(x.clone())
}

fn abs_rat(x: &BigInt) -> BigRat {
    BigRat::from_integer(x.abs())
}

/// `sum_(i in range) |a_i| delta^(i - shift)`.
fn weighted_sum(f: &IntPoly, delta: &BigRat, skip: usize, shift: i32) -> BigRat {
    f.coeffs()
        .iter()
        .enumerate()
        .filter(|(i, c)| *i != skip && !c.is_zero())
        .map(|(i, c)| abs_rat(c) * pow_rat(delta, i as i32 - shift))
        .sum()
}

/// Whether `|a_0| > sum_(i>=1) |a_i| delta^i` (`strict`), or `>=` otherwise.
/// The strict form excludes roots from the closed disk `|z| <= delta`, the
/// other form from the open disk.
pub fn no_roots_in_disk(f: &IntPoly, delta: &BigRat, strict: bool) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.constant_term().is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    if !delta.is_positive() {
        return Err(Error::Precondition("delta must be positive".into()));
    }
    let lhs = abs_rat(&f.constant_term());
    let rhs = weighted_sum(f, delta, 0, 0);
    Ok(if strict { lhs > rhs } else { lhs >= rhs })
}

/// Whether `|a_n| > sum_(i<n) |a_i| delta^(i-n)` (`strict`: all roots in the
/// open disk `|z| < delta`), or `>=` (closed disk).
pub fn all_roots_in_disk(f: &IntPoly, delta: &BigRat, strict: bool) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !delta.is_positive() {
        return Err(Error::Precondition("delta must be positive".into()));
    }
    let n = f.deg();
    let lhs = abs_rat(&f.leading());
    let rhs = weighted_sum(f, delta, n, n as i32);
    Ok(if strict { lhs > rhs } else { lhs >= rhs })
}

/// Root-free annulus around `|z| = delta` with `j` roots inside.
///
/// `inner` encloses the radius inside which the `j` small roots lie (zero
/// when `j = 0`); `outer` encloses the radius outside which the remaining
/// roots lie (`None` stands for infinity when `j = n`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnulusExclusion {
    pub inner: DirectedBound,
    pub outer: Option<DirectedBound>,
    pub j: usize,
}

pub fn annulus_exclusion(f: &IntPoly, j: usize, delta: &BigRat) -> Result<AnnulusExclusion> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = f.deg();
    if f.constant_term().is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    if j > n {
        return Err(Error::Precondition("index j exceeds the degree".into()));
    }
    if !delta.is_positive() {
        return Err(Error::Precondition("delta must be positive".into()));
    }
    if f.coeffs().iter().filter(|c| !c.is_zero()).count() <= 2 {
        return Err(Error::BinomialInput);
    }
    let aj = abs_rat(&f.coeff(j));
    let lhs = aj.clone();
    let rhs = weighted_sum(f, delta, j, j as i32);
    if lhs <= rhs {
        return Err(Error::HypothesisFails);
    }
    let others = weighted_sum(f, delta, j, 0);
    let main = aj * pow_rat(delta, j as i32);
    let inner = if j == 0 {
        DirectedBound::int(0)
    } else {
        kth_root_bounds(&(&others / &main), j as u32)?.scale(delta)
    };
    let outer = if j == n {
        None
    } else {
        Some(kth_root_bounds(&(&main / &others), (n - j) as u32)?.scale(delta))
    };
    Ok(AnnulusExclusion { inner, outer, j })
}

/// Fujiwara's bound `2 max(|a_(n-1)/a_n|, ..., |a_1/a_n|^(1/(n-1)),
/// |a_0/(2 a_n)|^(1/n))` on the moduli of the roots.
pub fn fujiwara_bound(f: &IntPoly) -> Result<DirectedBound> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = f.deg();
    let an = abs_rat(&f.leading());
    let mut best = DirectedBound::int(0);
    for k in 1..=n {
        let c = f.coeff(n - k);
        if c.is_zero() {
            continue;
        }
        let mut ratio = abs_rat(&c) / &an;
        if k == n {
            ratio /= BigRat::from_integer(2.into());
        }
        let r = kth_root_bounds(&ratio, k as u32)?;
        best.lo = best.lo.max(r.lo.clone());
        best.hi = best.hi.max(r.hi);
    }
    let two = BigRat::from_integer(2.into());
    Ok(best.scale(&two))
}

/// One inclusion disk.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Disk {
    pub re: f64,
    pub im: f64,
    pub radius: f64,
    pub multiplicity: u32,
}

/// Disks whose union contains every complex root.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootEnclosures {
    pub disks: Vec<Disk>,
    pub overlapping: bool,
}

/// Exact complex rational.
#[derive(Clone, Debug)]
struct CRat {
    re: BigRat,
    im: BigRat,
}

impl CRat {
    fn from_f64(re: f64, im: f64) -> Option<CRat> {
        Some(CRat {
            re: BigRat::from_float(re)?,
            im: BigRat::from_float(im)?,
        })
    }

    fn norm_sq(&self) -> BigRat {
        &self.re * &self.re + &self.im * &self.im
    }

    fn sub(&self, o: &CRat) -> CRat {
        CRat {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }
}

fn eval_exact(f: &IntPoly, z: &CRat) -> CRat {
    let mut re = BigRat::zero();
    let mut im = BigRat::zero();
    for c in f.coeffs().iter().rev() {
        let nre = &re * &z.re - &im * &z.im + rat(c);
        let nim = &re * &z.im + &im * &z.re;
        re = nre;
        im = nim;
    }
    CRat { re, im }
}

/// Smallest double not below `x`.
pub fn f64_up(x: &BigRat) -> f64 {
    let mut v = x.to_f64().unwrap_or(f64::INFINITY);
    if v.is_nan() {
        v = f64::INFINITY;
    }
    while v.is_finite() && BigRat::from_float(v).is_some_and(|r| r < *x) {
        v = v.next_up();
    }
    while v.is_finite() {
        let down = v.next_down();
        match BigRat::from_float(down) {
            Some(r) if r >= *x => v = down,
            _ => break,
        }
    }
    v
}

fn modulus(z: &CRat) -> DirectedBound {
    kth_root_bounds(&z.norm_sq(), 2).expect("nonnegative")
}

/// Exact inclusion radii for the given centers, rounded up. `None` when two
/// centers coincide.
fn certified_radii(f: &IntPoly, centers: &[(f64, f64)]) -> Option<Vec<f64>> {
    let n = f.deg();
    let zs: Vec<CRat> = centers
        .iter()
        .map(|&(re, im)| CRat::from_f64(re, im))
        .collect::<Option<_>>()?;
    let lead_sq = rat(&(f.leading() * f.leading()));
    let n_sq = BigRat::from_integer(BigInt::from(n * n));
    let mut out = Vec::with_capacity(n);
    for (i, z) in zs.iter().enumerate() {
        let val = eval_exact(f, z).norm_sq();
        if val.is_zero() {
            out.push(0.0);
            continue;
        }
        let mut prod = BigRat::one();
        for (j, w) in zs.iter().enumerate() {
            if i != j {
                prod *= z.sub(w).norm_sq();
            }
        }
        if prod.is_zero() {
            return None;
        }
        let r_sq = val * &n_sq / (prod * &lead_sq);
        let r = kth_root_bounds(&r_sq, 2).expect("nonnegative").hi;
        out.push(f64_up(&r));
    }
    Some(out)
}

fn to_complex_coeffs(f: &IntPoly) -> Result<Vec<Complex64>> {
    f.coeffs()
        .iter()
        .map(|c| {
            let v = c.to_f64().unwrap_or(f64::INFINITY);
            if v.is_finite() {
                Ok(Complex64::new(v, 0.0))
            } else {
                Err(Error::IterationDiverged)
            }
        })
        .collect()
}

fn horner(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

const ABERTH_BUDGET: usize = 200;

/// Aberth-Ehrlich approximations to the roots of a squarefree polynomial.
fn aberth(f: &IntPoly) -> Result<Vec<(f64, f64)>> {
    let n = f.deg();
    if n == 1 {
        let r = BigRat::new(-f.coeff(0), f.coeff(1));
        return Ok(vec![(r.to_f64().ok_or(Error::IterationDiverged)?, 0.0)]);
    }
    let coeffs = to_complex_coeffs(f)?;
    let radius = fujiwara_bound(f)?.hi.to_f64().unwrap_or(f64::INFINITY) * 0.8;
    if !radius.is_finite() || radius <= 0.0 {
        return Err(Error::IterationDiverged);
    }
    let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 0.4 + golden * k as f64))
        .collect();
    let mut settled = 0;
    for _ in 0..ABERTH_BUDGET {
        let mut worst: f64 = 0.0;
        for k in 0..n {
            let (p, dp) = horner(&coeffs, z[k]);
            if p == Complex64::new(0.0, 0.0) {
                continue;
            }
            let ratio = p / dp;
            let mut sum = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != k {
                    sum += (z[k] - z[j]).inv();
                }
            }
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
            if !w.re.is_finite() || !w.im.is_finite() {
                continue;
            }
            z[k] -= w;
            worst = worst.max(w.norm() / z[k].norm().max(f64::MIN_POSITIVE));
        }
        if z.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(Error::IterationDiverged);
        }
        if worst < 1e-14 {
            settled += 1;
            if settled >= 2 {
                break;
            }
        }
    }
    Ok(z.iter().map(|v| (v.re, v.im)).collect())
}

fn mark_overlaps(disks: &[Disk]) -> bool {
    for (i, a) in disks.iter().enumerate() {
        for b in &disks[i + 1..] {
            let ca = CRat::from_f64(a.re, a.im).expect("finite center");
            let cb = CRat::from_f64(b.re, b.im).expect("finite center");
            let reach = BigRat::from_float(a.radius).expect("finite radius")
                + BigRat::from_float(b.radius).expect("finite radius");
            if ca.sub(&cb).norm_sq() <= &reach * &reach {
                return true;
            }
        }
    }
    false
}

fn squarefree_parts(f: &IntPoly) -> Result<Vec<(IntPoly, u32)>> {
    f.to_rat()
        .squarefree_decomposition()
        .into_iter()
        .map(|(p, k)| Ok((p.to_primitive()?.1, k)))
        .collect()
}

/// Certified inclusion disks for all complex roots of `f` (`deg f >= 1`).
/// Repeated roots are handled through the squarefree decomposition; each
/// disk carries the multiplicity of its root.
pub fn enclose_roots(f: &IntPoly) -> Result<RootEnclosures> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut disks = Vec::new();
    for (part, mult) in squarefree_parts(f)? {
        let centers = aberth(&part)?;
        let radii = certified_radii(&part, &centers).ok_or(Error::IterationDiverged)?;
        for ((re, im), radius) in centers.into_iter().zip(radii) {
            if !radius.is_finite() {
                return Err(Error::IterationDiverged);
            }
            disks.push(Disk {
                re,
                im,
                radius,
                multiplicity: mult,
            });
        }
    }
    let overlapping = mark_overlaps(&disks);
    Ok(RootEnclosures { disks, overlapping })
}

/// Re-derives the radii of stored enclosures from their centers and checks
/// that they match bit for bit.
pub fn verify_enclosures(f: &IntPoly, enc: &RootEnclosures) -> Result<()> {
    let bad = |m: &str| Err(Error::Verification(format!("enclosure: {m}")));
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let parts = squarefree_parts(f)?;
    let mut idx = 0;
    for (part, mult) in parts {
        let count = part.deg();
        let Some(slice) = enc.disks.get(idx..idx + count) else {
            return bad("too few disks");
        };
        if slice.iter().any(|d| d.multiplicity != mult) {
            return bad("multiplicity mismatch");
        }
        let centers: Vec<(f64, f64)> = slice.iter().map(|d| (d.re, d.im)).collect();
        let Some(radii) = certified_radii(&part, &centers) else {
            return bad("coincident centers");
        };
        for (d, r) in slice.iter().zip(radii) {
            if d.radius.to_bits() != r.to_bits() {
                return bad("radius does not match its center");
            }
        }
        idx += count;
    }
    if idx != enc.disks.len() {
        return bad("too many disks");
    }
    if mark_overlaps(&enc.disks) != enc.overlapping {
        return bad("overlap flag mismatch");
    }
    Ok(())
}

impl Disk {
    fn center(&self) -> CRat {
        CRat::from_f64(self.re, self.im).expect("finite center")
    }

    fn radius_rat(&self) -> BigRat {
        BigRat::from_float(self.radius).expect("finite radius")
    }

    /// Bounds on `|z|` over the disk.
    pub fn modulus_bounds(&self) -> DirectedBound {
        let m = modulus(&self.center());
        let r = self.radius_rat();
        let lo = (&m.lo - &r).max(BigRat::zero());
        DirectedBound { lo, hi: m.hi + r }
    }

    /// Bounds on `|g(z)|` over the disk, from the value at the center and a
    /// bound for `|g'|` on the disk.
    pub fn value_bounds(&self, g: &IntPoly) -> DirectedBound {
        let c = self.center();
        let r = self.radius_rat();
        let at_center = modulus(&eval_exact(g, &c));
        let reach = modulus(&c).hi + &r;
        let mut lip = BigRat::zero();
        let mut pw = BigRat::one();
        for (k, b) in g.coeffs().iter().enumerate().skip(1) {
            lip += abs_rat(b) * BigRat::from_integer(BigInt::from(k)) * &pw;
            pw *= &reach;
        }
        let slack = lip * r;
        let lo = (&at_center.lo - &slack).max(BigRat::zero());
        DirectedBound {
            lo,
            hi: at_center.hi + slack,
        }
    }
}

impl RootEnclosures {
    pub fn degree(&self) -> u32 {
        self.disks.iter().map(|d| d.multiplicity).sum()
    }
}

/// Certified lower bound for `min |theta - xi|` over roots of the two
/// polynomials, or `None` when either enclosure has overlapping disks.
pub fn min_pairwise_distance_lower(rf: &RootEnclosures, rg: &RootEnclosures) -> Option<BigRat> {
    if rf.overlapping || rg.overlapping {
        return None;
    }
    let mut best: Option<BigRat> = None;
    for a in &rf.disks {
        for b in &rg.disks {
            let d = modulus(&a.center().sub(&b.center())).lo - a.radius_rat() - b.radius_rat();
            if best.as_ref().is_none_or(|x| d < *x) {
                best = Some(d);
            }
        }
    }
    best
}

/// Certified upper bound for `max |theta - xi|`.
pub fn max_pairwise_distance_upper(rf: &RootEnclosures, rg: &RootEnclosures) -> Option<BigRat> {
    let mut best: Option<BigRat> = None;
    for a in &rf.disks {
        for b in &rg.disks {
            let d = modulus(&a.center().sub(&b.center())).hi + a.radius_rat() + b.radius_rat();
            if best.as_ref().is_none_or(|x| d > *x) {
                best = Some(d);
            }
        }
    }
    best
}

/// Degree bounds `(upper, lower)` for the roots of `f` in an algebraic
/// closure of `Q(X)` with respect to the degree valuation: every root
/// `theta` satisfies `lower <= log_rho |theta| <= upper`.
pub fn nonarch_root_degree_bounds(f: &BivarPoly) -> Result<(BigRat, BigRat)> {
    let n = f.deg_y();
    if f.is_zero() || n == 0 || f.coeff(0).is_zero() {
        return Err(Error::ZeroCoefficient);
    }
    let d = |i: usize| f.deg_coeff(i);
    let max_low = (0..n)
        .map(d)
        .max()
        .and_then(Deg::finite)
        .expect("a_0 is nonzero");
    let dn = d(n).finite().expect("leading coefficient is nonzero");
    let nn = BigRat::from_integer(BigInt::from(n));
    let t = BigRat::from_integer(BigInt::from(max_low - dn));
    let upper = t.clone().max(&t / &nn);
    let max_high = (1..=n)
        .map(d)
        .max()
        .and_then(Deg::finite)
        .expect("a_n is nonzero");
    let d0 = d(0).finite().expect("a_0 is nonzero");
    let l = BigRat::from_integer(BigInt::from(d0 - max_high));
    let lower = l.clone().min(&l / &nn);
    Ok((upper, lower))
}

/// Exact test whether `f` has a rational root, by the divisor pairs of the
/// constant and leading coefficients. Returns `None` when those are too
/// large to enumerate divisors by trial division.
pub fn has_rational_root(f: &IntPoly) -> Option<bool> {
    if f.deg() == 0 {
        return Some(false);
    }
    if f.constant_term().is_zero() {
        return Some(true);
    }
    let limit = BigInt::from(1u64 << 40);
    let a0 = f.constant_term().abs();
    let an = f.leading().abs();
    if a0 > limit || an > limit {
        return None;
    }
    let divs = |x: &BigInt| -> Vec<BigInt> {
        let x = x.to_u64().expect("bounded");
        let mut v = Vec::new();
        let mut d = 1u64;
        while d * d <= x {
            if x.is_multiple_of(d) {
                v.push(BigInt::from(d));
                if d * d != x {
                    v.push(BigInt::from(x / d));
                }
            }
            d += 1;
        }
        v
    };
    let ps = divs(&a0);
    let qs = divs(&an);
    for p in &ps {
        for q in &qs {
            for s in [p.clone(), -p.clone()] {
                if f.eval_homogeneous(&s, q).expect("q nonzero").is_zero() {
                    return Some(true);
                }
            }
        }
    }
    Some(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn q(n: i64, d: i64) -> BigRat {
        BigRat::new(n.into(), d.into())
    }

    #[test]
    fn disk_tests() {
        let f = p(&[15, -3, -2, -1, 1, 1]);
        assert!(no_roots_in_disk(&f, &q(3, 11), true).unwrap());
        assert_eq!(weighted_sum(&f, &q(3, 11), 0, 0), q(160128, 161051));
        assert!(no_roots_in_disk(&p(&[-2, 1]), &q(1, 1), true).unwrap());
        assert!(!no_roots_in_disk(&p(&[-1, 1]), &q(1, 1), true).unwrap());
        assert!(no_roots_in_disk(&p(&[-1, 1]), &q(1, 1), false).unwrap());
        assert!(all_roots_in_disk(&p(&[-1, 1, -2, 3, 9]), &q(1, 1), true).unwrap());
        assert!(all_roots_in_disk(&p(&[-4, 0, 1]), &q(3, 1), true).unwrap());
        assert!(!all_roots_in_disk(&p(&[-4, 0, 1]), &q(2, 1), true).unwrap());
        assert!(all_roots_in_disk(&p(&[0, 0, 0, 1]), &q(1, 5), true).unwrap());
    }

    #[test]
    fn annulus_examples() {
        let f = p(&[-1, 1, -2, 3, 9]);
        let ann = annulus_exclusion(&f, 4, &q(1, 1)).unwrap();
        assert!(ann.outer.is_none());
        assert!(ann.inner.hi < q(1, 1));
        let g = p(&[35, 3, -1, -1, 1]);
        let ann = annulus_exclusion(&g, 0, &q(2, 1)).unwrap();
        assert!(ann.outer.unwrap().lo > q(2, 1));
        assert_eq!(
            annulus_exclusion(&p(&[1, 1, 1]), 1, &q(1, 1)),
            Err(Error::HypothesisFails)
        );
        assert_eq!(
            annulus_exclusion(&p(&[1, 0, 1]), 1, &q(1, 1)),
            Err(Error::BinomialInput)
        );
    }

    #[test]
    fn fujiwara_examples() {
        assert!(fujiwara_bound(&p(&[-1, 0, 1])).unwrap().hi >= q(1, 1));
        assert!(fujiwara_bound(&p(&[2, -3, 1])).unwrap().hi >= q(2, 1));
        let b = fujiwara_bound(&p(&[-16, 0, 0, 0, 1])).unwrap();
        assert!(b.hi >= q(2, 1));
    }

    #[test]
    fn enclosures() {
        let e = enclose_roots(&p(&[15, -8, 1])).unwrap();
        assert_eq!(e.disks.len(), 2);
        for d in &e.disks {
            assert!(d.radius < 1e-10);
            assert!((d.re - 3.0).abs() < 1e-9 || (d.re - 5.0).abs() < 1e-9);
        }
        verify_enclosures(&p(&[15, -8, 1]), &e).unwrap();
        let e = enclose_roots(&p(&[1, 0, 1])).unwrap();
        assert!(e
            .disks
            .iter()
            .all(|d| d.re.abs() < 1e-9 && (d.im.abs() - 1.0).abs() < 1e-9));
        let mut w = p(&[1]);
        for k in 1..=6 {
            w = &w * &p(&[-k, 1]);
        }
        let e = enclose_roots(&w).unwrap();
        assert_eq!(e.disks.len(), 6);
        assert!(!e.overlapping);
        let sq = &p(&[1, 1]) * &p(&[1, 1]);
        let e = enclose_roots(&(&sq * &p(&[-2, 0, 1]))).unwrap();
        assert_eq!(e.degree(), 4);
    }

    #[test]
    fn distances() {
        let ef = enclose_roots(&p(&[15, -8, 1])).unwrap();
        let eg = enclose_roots(&p(&[24, -10, 1])).unwrap();
        let d = min_pairwise_distance_lower(&ef, &eg).unwrap();
        assert!(d <= q(1, 1));
        assert!(d > q(99, 100));
        let d = min_pairwise_distance_lower(
            &enclose_roots(&p(&[-10, 1])).unwrap(),
            &enclose_roots(&p(&[0, 1])).unwrap(),
        )
        .unwrap();
        assert_eq!(d, q(10, 1));
    }

    #[test]
    fn tampered_enclosure_rejected() {
        let f = p(&[-1, 1, -2, 3, 9]);
        let mut e = enclose_roots(&f).unwrap();
        e.disks[0].re += 1e-6;
        assert!(verify_enclosures(&f, &e).is_err());
    }

    #[test]
    fn nonarch_examples() {
        let f = BivarPoly::from_i64_rows(&[&[0, 0, 0, -1], &[], &[1]]);
        let (up, lo) = nonarch_root_degree_bounds(&f).unwrap();
        assert_eq!(up, q(3, 1));
        assert_eq!(lo, q(3, 2));
        let f = BivarPoly::from_i64_rows(&[&[0, -1], &[1]]);
        assert_eq!(nonarch_root_degree_bounds(&f).unwrap(), (q(1, 1), q(1, 1)));
        let f = BivarPoly::from_i64_rows(&[&[0, 1], &[1], &[0, 1]]);
        assert_eq!(nonarch_root_degree_bounds(&f).unwrap(), (q(0, 1), q(0, 1)));
    }

    #[test]
    fn rational_roots() {
        assert_eq!(has_rational_root(&p(&[-1, 0, 2])), Some(false));
        assert_eq!(has_rational_root(&p(&[-1, 0, 4])), Some(true));
        assert_eq!(has_rational_root(&p(&[5, 5, 0, 1])), Some(false));
    }
}
