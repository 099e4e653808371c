//! Irreducibility criteria for integer polynomials built on the resultant
//! `Res(f, g)`, root separation and coefficient dominance.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{d_k_from, omega, Omega};
use crate::bound::{kth_root_bounds, pow_rat, DirectedBound};
use crate::cert::{require, run_checker, Certificate, Ctx, Recorder, Rel, Verdict};
use crate::error::{Error, Result};
use crate::poly::{BigRat, IntPoly};
use crate::resultant::{resultant_quadratic_binet, resultant_quadratic_shift};
use crate::roots::{
    has_rational_root, max_pairwise_distance_upper, min_pairwise_distance_lower, RootEnclosures,
};

use super::{exact, int_rat, nonconstant, prime_split, sum_bounds, Side};

/// How the size of `g` at the roots of `f` is measured.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ValueMode {
    /// `|g(theta)|`.
    Value,
    /// `|g(theta) / theta^deg g|`.
    Scaled,
}

impl ValueMode {
    pub fn name(self) -> &'static str {
        match self {
            ValueMode::Value => "value",
            ValueMode::Scaled => "scaled",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "value" => Ok(ValueMode::Value),
            "scaled" => Ok(ValueMode::Scaled),
            _ => Err(Error::Parse(format!("unknown value mode `{s}`"))),
        }
    }
}

/// Quadratic polynomials whose resultant with `f` is a binary form in the
/// coefficients of `f`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum QuadraticForm {
    /// `X^2 + 1`.
    Gauss,
    /// `X^2 - m` for a positive non-square `m`.
    Sqrt(BigInt),
    /// `X^2 + X + 1`.
    Eisenstein,
    /// `X^2 - X - 1`.
    Golden,
}

impl QuadraticForm {
    pub fn name(&self) -> &'static str {
        match self {
            QuadraticForm::Gauss => "gauss",
            QuadraticForm::Sqrt(_) => "sqrt",
            QuadraticForm::Eisenstein => "eisenstein",
            QuadraticForm::Golden => "golden",
        }
    }

    /// Coefficients `(a, b, c)` of `aX^2 + bX + c`.
    pub fn quadratic(&self) -> (BigInt, BigInt, BigInt) {
        let i = |x: i64| BigInt::from(x);
        match self {
            QuadraticForm::Gauss => (i(1), i(0), i(1)),
            QuadraticForm::Sqrt(m) => (i(1), i(0), -m),
            QuadraticForm::Eisenstein => (i(1), i(1), i(1)),
            QuadraticForm::Golden => (i(1), i(-1), i(-1)),
        }
    }

    pub fn poly(&self) -> IntPoly {
        let (a, b, c) = self.quadratic();
        IntPoly::new(vec![c, b, a])
    }

    /// Recognizes one of the four shapes.
    pub fn detect(g: &IntPoly) -> Option<QuadraticForm> {
        if g.deg() != 2 || !g.leading().is_one() {
            return None;
        }
        let b = g.coeff(1);
        let c = g.coeff(0);
        match (i64::try_from(&b).ok(), i64::try_from(&c).ok()) {
            (Some(0), Some(1)) => Some(QuadraticForm::Gauss),
            (Some(1), Some(1)) => Some(QuadraticForm::Eisenstein),
            (Some(-1), Some(-1)) => Some(QuadraticForm::Golden),
            _ if b.is_zero() && c.is_negative() => {
                let m = -c;
                (!is_square(&m)).then_some(QuadraticForm::Sqrt(m))
            }
            _ => None,
        }
    }
}

/// Choice of the cofactor `q` in a split `|value| = p q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitChoice {
    Given(BigInt),
    /// The smallest `q` that leaves a prime cofactor, from the largest
    /// known prime factor.
    Auto,
}

/// Linear-value corollaries that replace the general inequality by a
/// closed-form coefficient condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinearVariant {
    /// Coefficients in `{-1, 0, 1}`.
    Littlewood,
    /// Dominant leading coefficient.
    DominantLeading,
    /// Dominant middle coefficient `a_j`, with `b = 1`.
    DominantMiddle(usize),
}

fn is_square(m: &BigInt) -> bool {
    !m.is_negative() && {
        let r = m.sqrt();
        &r * &r == *m
    }
}

fn text(f: &IntPoly) -> String {
    f.to_bracket()
}

fn abs_coeffs(f: &IntPoly) -> Vec<BigRat> {
    f.coeffs().iter().map(|a| int_rat(&a.abs())).collect()
}

fn require_constant_terms(f: &IntPoly, g: &IntPoly) -> Result<()> {
    if f.constant_term().is_zero() || g.constant_term().is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    Ok(())
}

/// Records `Res(f, g)` and returns it with `|Res|`.
fn record_resultant(rec: &mut Recorder, f: &IntPoly, g: &IntPoly) -> Result<(BigInt, BigInt)> {
    let res = rec.ctx.resultant(f, g)?;
    rec.set_resultant(&res);
    let abs = res.abs();
    Ok((res, abs))
}

/// Checks `|Res| = p q` with `q` given and `p` prime.
fn check_split(rec: &mut Recorder, value: &BigInt, q: &BigInt, what: &str) -> Option<bool> {
    if !rec.compare_int(format!("{what} > 0"), value, Rel::Gt, &BigInt::zero()) {
        return None;
    }
    if !rec.divides(format!("q divides {what}"), q, value) {
        return Some(false);
    }
    let p = value / q;
    rec.set_split(&p, q);
    Some(rec.prime(format!("p = {what} / q"), &p))
}

/// Picks `q` per `choice` and checks that `value / q` is prime.
fn choose_split(
    rec: &mut Recorder,
    value: &BigInt,
    choice: &SplitChoice,
    what: &str,
) -> Result<(bool, BigInt)> {
    let q = match choice {
        SplitChoice::Given(q) => q.clone(),
        SplitChoice::Auto => match prime_split(rec.ctx, value) {
            Some((_, q)) => q,
            None => {
                rec.fact(format!("prime factor of {what}"), "none found");
                return Ok((false, BigInt::one()));
            }
        },
    };
    if !q.is_positive() {
        return Err(Error::Precondition("q must be positive".into()));
    }
    let ok = check_split(rec, value, &q, what) == Some(true);
    Ok((ok, q))
}

fn side_polys(f: &IntPoly, g: &IntPoly, side: Side) -> Result<(IntPoly, IntPoly)> {
    match side {
        Side::Direct => Ok((f.clone(), g.clone())),
        Side::Reciprocal => Ok((f.reciprocal()?, g.reciprocal()?)),
    }
}

/// Compares the smallest distance between roots of `f` and roots of `g`
/// (or of their reciprocals) with `threshold`.
fn separated(
    rec: &mut Recorder,
    f: &IntPoly,
    g: &IntPoly,
    side: Side,
    threshold: DirectedBound,
) -> Result<bool> {
    let (pf, pg) = side_polys(f, g, side)?;
    let ef = rec.enclose(&pf)?;
    let eg = rec.enclose(&pg)?;
    let Some(dist) = min_pairwise_distance_lower(&ef, &eg) else {
        rec.fact("root enclosures", "overlapping disks");
        return Ok(false);
    };
    let label = match side {
        Side::Direct => "min |theta - xi|",
        Side::Reciprocal => "min |1/theta - 1/xi|",
    };
    Ok(rec.compare(label, exact(dist), Rel::Gt, threshold))
}

fn min_degree(f: &IntPoly, g: &IntPoly) -> u32 {
    f.deg().min(g.deg()) as u32
}

/// Both polynomials are irreducible when `|Res(f, g)| = p q` with `p`
/// prime and the roots of `f` and `g` (or of their reciprocals) are more
/// than `q^(1/min(m, n))` apart. With `q = 1` this is the prime-resultant
/// separation criterion.
pub fn root_separation(
    ctx: &Ctx,
    f: &IntPoly,
    g: &IntPoly,
    q: &BigInt,
    side: Side,
) -> Result<Certificate> {
    nonconstant(f, "f")?;
    nonconstant(g, "g")?;
    require_constant_terms(f, g)?;
    if !q.is_positive() {
        return Err(Error::Precondition("q must be positive".into()));
    }
    run_checker(ctx, "root-separation", text(f), Some(text(g)), |rec| {
        rec.param("side", side.name());
        rec.param("q", q);
        let (_, abs) = record_resultant(rec, f, g)?;
        require!(
            check_split(rec, &abs, q, "|Res|") == Some(true),
            "primality"
        );
        let thr = kth_root_bounds(&int_rat(q), min_degree(f, g))?;
        require!(separated(rec, f, g, side, thr)?, "distance");
        Ok(Verdict::BothIrreducible)
    })
}

/// [`root_separation`] with `q = 1`: prime resultant and roots more than 1
/// apart.
pub fn root_separation_prime(
    ctx: &Ctx,
    f: &IntPoly,
    g: &IntPoly,
    side: Side,
) -> Result<Certificate> {
    root_separation(ctx, f, g, &BigInt::one(), side)
}

/// Each of `f`, `g` has at most `k` irreducible factors when the roots are
/// more than `d_k(|Res|)^(1/min(m, n))` apart.
pub fn root_separation_dk(
    ctx: &Ctx,
    f: &IntPoly,
    g: &IntPoly,
    k: u32,
    side: Side,
) -> Result<Certificate> {
    nonconstant(f, "f")?;
    nonconstant(g, "g")?;
    require_constant_terms(f, g)?;
    if k == 0 {
        return Err(Error::Precondition("k must be positive".into()));
    }
    run_checker(ctx, "root-separation-dk", text(f), Some(text(g)), |rec| {
        rec.param("side", side.name());
        rec.param("k", k);
        let (_, abs) = record_resultant(rec, f, g)?;
        require!(
            rec.compare_int("|Res| > 0", &abs, Rel::Gt, &BigInt::zero()),
            "resultant is zero"
        );
        let fac = rec.ctx.factorize(&abs);
        let Some(dk) = d_k_from(&fac, &abs, k) else {
            rec.fact("factorization of |Res|", "incomplete");
            return Ok(Verdict::Inconclusive("factorization".into()));
        };
        rec.fact(format!("d_{k}(|Res|)"), &dk);
        let thr = kth_root_bounds(&int_rat(&dk), min_degree(f, g))?;
        require!(separated(rec, f, g, side, thr)?, "distance");
        Ok(Verdict::FactorBoundBoth(k))
    })
}

/// Each of `f`, `g` has at most `Omega(|Res| / d)` irreducible factors
/// when the roots are more than `d^(1/min(m, n))` apart.
pub fn root_separation_divisor(
    ctx: &Ctx,
    f: &IntPoly,
    g: &IntPoly,
    d: &BigInt,
    side: Side,
) -> Result<Certificate> {
    nonconstant(f, "f")?;
    nonconstant(g, "g")?;
    require_constant_terms(f, g)?;
    if !d.is_positive() {
        return Err(Error::Precondition("d must be positive".into()));
    }
    let res = ctx.resultant(f, g)?;
    if res.is_zero() {
        return Err(Error::NotCoprime);
    }
    if !(&res % d).is_zero() {
        return Err(Error::NotADivisor(d.to_string()));
    }
    run_checker(
        ctx,
        "root-separation-divisor",
        text(f),
        Some(text(g)),
        |rec| {
            rec.param("side", side.name());
            rec.param("d", d);
            let (_, abs) = record_resultant(rec, f, g)?;
            rec.divides("d divides |Res|", d, &abs);
            let Omega::Exact(count) = omega(&rec.ctx.factorize(&(&abs / d))) else {
                rec.fact("factorization of |Res|/d", "incomplete");
                return Ok(Verdict::Inconclusive("factorization".into()));
            };
            rec.fact("Omega(|Res|/d)", count);
            let thr = kth_root_bounds(&int_rat(d), min_degree(f, g))?;
            require!(separated(rec, f, g, side, thr)?, "distance");
            Ok(Verdict::FactorBoundBoth(count))
        },
    )
}

/// Bounds on `|g(theta)|` or `|g(theta)/theta^m|` over one disk.
fn disk_value(disk: &crate::roots::Disk, g: &IntPoly, mode: ValueMode) -> Option<DirectedBound> {
    let v = disk.value_bounds(g);
    match mode {
        ValueMode::Value => Some(v),
        ValueMode::Scaled => {
            let m = g.deg() as i32;
            let md = disk.modulus_bounds();
            if !md.lo.is_positive() {
                return None;
            }
            Some(DirectedBound {
                lo: &v.lo / pow_rat(&md.hi, m),
                hi: &v.hi / pow_rat(&md.lo, m),
            })
        }
    }
}

/// Certified lower bound for the smallest value over all roots.
fn min_value(enc: &RootEnclosures, g: &IntPoly, mode: ValueMode) -> Option<BigRat> {
    enc.disks
        .iter()
        .map(|d| disk_value(d, g, mode).map(|b| b.lo))
        .try_fold(None::<BigRat>, |acc, v| {
            let v = v?;
            Some(Some(match acc {
                Some(a) if a < v => a,
                _ => v,
            }))
        })
        .flatten()
}

/// Certified upper bound for the largest value over all roots.
fn max_value(enc: &RootEnclosures, g: &IntPoly, mode: ValueMode) -> Option<BigRat> {
    enc.disks
        .iter()
        .map(|d| disk_value(d, g, mode).map(|b| b.hi))
        .try_fold(None::<BigRat>, |acc, v| {
            let v = v?;
            Some(Some(match acc {
                Some(a) if a > v => a,
                _ => v,
            }))
        })
        .flatten()
}

fn mode_label(mode: ValueMode, agg: &str) -> String {
    match mode {
        ValueMode::Value => format!("{agg} |g(theta)|"),
        ValueMode::Scaled => format!("{agg} |g(theta)/theta^m|"),
    }
}

/// Checks the shape constraints shared by the value criteria and, for
/// `r = 2`, that `f` has no rational root.
fn value_preconditions(f: &IntPoly, g: &IntPoly, r: u32) -> Result<usize> {
    let n = nonconstant(f, "f")?;
    nonconstant(g, "g")?;
    if f.constant_term().is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    if !(1..=2).contains(&r) {
        return Err(Error::Precondition(
            "only r = 1 and r = 2 are supported".into(),
        ));
    }
    Ok(n)
}

fn no_rational_roots(rec: &mut Recorder, f: &IntPoly, name: &str) -> bool {
    match has_rational_root(f) {
        Some(false) => {
            rec.fact(format!("{name} has a rational root"), "no");
            true
        }
        Some(true) => {
            rec.fact(format!("{name} has a rational root"), "yes");
            false
        }
        None => {
            rec.fact(format!("{name} has a rational root"), "undecided");
            false
        }
    }
}

fn value_exceeds(
    rec: &mut Recorder,
    f: &IntPoly,
    g: &IntPoly,
    mode: ValueMode,
    thr: DirectedBound,
) -> Result<bool> {
    let enc = rec.enclose(f)?;
    let Some(low) = min_value(&enc, g, mode) else {
        rec.fact("root enclosures", "disk touches the origin");
        return Ok(false);
    };
    Ok(rec.compare(mode_label(mode, "min"), exact(low), Rel::Gt, thr))
}

/// `f` has at most `Omega(|Res| / d)` irreducible factors when `g` is
/// larger than `d^(1/r)` at every root of `f`. `r = 2` needs `f` free of
/// rational roots.
pub fn value_lower_bound(
    ctx: &Ctx,
    f: &IntPoly,
    g: &IntPoly,
    d: &BigInt,
    r: u32,
    mode: ValueMode,
) -> Result<Certificate> {
    let n = value_preconditions(f, g, r)?;
    if r as usize >= n {
        return Err(Error::Precondition("r must be smaller than deg f".into()));
    }
    if !d.is_positive() {
        return Err(Error::Precondition("d must be positive".into()));
    }
    let res = ctx.resultant(f, g)?;
    if res.is_zero() {
        return Err(Error::NotCoprime);
    }
    if !(&res % d).is_zero() {
        return Err(Error::NotADivisor(d.to_string()));
    }
    run_checker(ctx, "value-lower-bound", text(f), Some(text(g)), |rec| {
        rec.param("d", d);
        rec.param("r", r);
        rec.param("mode", mode.name());
        let (_, abs) = record_resultant(rec, f, g)?;
        rec.divides("d divides |Res|", d, &abs);
        let Omega::Exact(count) = omega(&rec.ctx.factorize(&(&abs / d))) else {
            rec.fact("factorization of |Res|/d", "incomplete");
            return Ok(Verdict::Inconclusive("factorization".into()));
        };
        rec.fact("Omega(|Res|/d)", count);
        if r == 2 {
            require!(no_rational_roots(rec, f, "f"), "rational roots");
        }
        let thr = kth_root_bounds(&int_rat(d), r)?;
        require!(value_exceeds(rec, f, g, mode, thr)?, "value bound");
        Ok(Verdict::FactorBound(count))
    })
}

/// `f` has at most `k` irreducible factors when `g` is larger than
/// `d_k(|Res|)^(1/r)` at every root of `f`.
pub fn value_lower_bound_dk(
    ctx: &Ctx,
    f: &IntPoly,
    g: &IntPoly,
    k: u32,
    r: u32,
    mode: ValueMode,
) -> Result<Certificate> {
    let n = value_preconditions(f, g, r)?;
    if r as usize >= n && r > 1 {
        return Err(Error::Precondition("r must be smaller than deg f".into()));
    }
    if k == 0 {
        return Err(Error::Precondition("k must be positive".into()));
    }
    run_checker(ctx, "value-lower-bound-dk", text(f), Some(text(g)), |rec| {
        rec.param("k", k);
        rec.param("r", r);
        rec.param("mode", mode.name());
        let (_, abs) = record_resultant(rec, f, g)?;
        require!(
            rec.compare_int("|Res| > 0", &abs, Rel::Gt, &BigInt::zero()),
            "resultant is zero"
        );
        let fac = rec.ctx.factorize(&abs);
        let Some(dk) = d_k_from(&fac, &abs, k) else {
            rec.fact("factorization of |Res|", "incomplete");
            return Ok(Verdict::Inconclusive("factorization".into()));
        };
        rec.fact(format!("d_{k}(|Res|)"), &dk);
        if r == 2 {
            require!(no_rational_roots(rec, f, "f"), "rational roots");
        }
        let thr = kth_root_bounds(&int_rat(&dk), r)?;
        require!(value_exceeds(rec, f, g, mode, thr)?, "value bound");
        Ok(Verdict::FactorBound(k))
    })
}

/// Both polynomials are irreducible when `|Res| = p q`, the roots of `f`
/// lie in `|z| < A`, the roots of `g` lie in `|z| > B`, and
/// `B >= A + q^(1/min(m, n))`. The disk conditions are the coefficient
/// dominance inequalities at `A` and `B`.
pub fn annulus_separation(
    ctx: &Ctx,
    f: &IntPoly,
    g: &IntPoly,
    a: &BigRat,
    b: &BigRat,
    q: &BigInt,
) -> Result<Certificate> {
    let n = nonconstant(f, "f")?;
    let m = nonconstant(g, "g")?;
    require_constant_terms(f, g)?;
    if !a.is_positive() || !b.is_positive() {
        return Err(Error::Precondition("A and B must be positive".into()));
    }
    if !q.is_positive() {
        return Err(Error::Precondition("q must be positive".into()));
    }
    run_checker(ctx, "annulus-separation", text(f), Some(text(g)), |rec| {
        rec.param("A", a);
        rec.param("B", b);
        rec.param("q", q);
        let k = n.min(m) as u32;
        let gap = exact(b - a);
        require!(
            rec.compare(
                "B - A >= q^(1/min(m,n))",
                gap,
                Rel::Ge,
                kth_root_bounds(&int_rat(q), k)?
            ),
            "geometry"
        );
        let fa = abs_coeffs(f);
        let inner: BigRat = (0..n)
            .map(|i| &fa[i] * pow_rat(a, i as i32 - n as i32))
            .sum();
        require!(
            rec.compare_rat("|a_n| > sum |a_i| A^(i-n)", fa[n].clone(), Rel::Gt, inner),
            "dominance of a_n"
        );
        let gb = abs_coeffs(g);
        let outer: BigRat = (1..=m).map(|i| &gb[i] * pow_rat(b, i as i32)).sum();
        require!(
            rec.compare_rat("|b_0| > sum |b_i| B^i", gb[0].clone(), Rel::Gt, outer),
            "dominance of b_0"
        );
        let (_, abs) = record_resultant(rec, f, g)?;
        require!(
            check_split(rec, &abs, q, "|Res|") == Some(true),
            "primality"
        );
        Ok(Verdict::BothIrreducible)
    })
}

/// Both polynomials are irreducible when `|Res| = p q` and a middle
/// coefficient `a_j` of `f` dominates as in the two displayed
/// inequalities.
pub fn dominant_coefficient(
    ctx: &Ctx,
    f: &IntPoly,
    g: &IntPoly,
    j: usize,
    q: &BigInt,
) -> Result<Certificate> {
    let n = nonconstant(f, "f")?;
    let m = nonconstant(g, "g")?;
    require_constant_terms(f, g)?;
    if j == 0 || j >= n {
        return Err(Error::Precondition(format!(
            "index j must lie in 1..{}",
            n.saturating_sub(1)
        )));
    }
    if !q.is_positive() {
        return Err(Error::Precondition("q must be positive".into()));
    }
    run_checker(ctx, "dominant-coefficient", text(f), Some(text(g)), |rec| {
        rec.param("j", j);
        rec.param("q", q);
        let k = n.min(m) as u32;
        let root_q = kth_root_bounds(&int_rat(q), k)?;
        let fa = abs_coeffs(f);
        let gb = abs_coeffs(g);
        let others: BigRat = (0..=n).filter(|&i| i != j).map(|i| fa[i].clone()).sum();
        let ratio_g: BigRat = (0..m).map(|i| &gb[i] / &gb[m]).sum();
        let first = root_q
            .add(&exact(ratio_g))
            .powi((n - j) as i64)
            .expect("nonnegative base")
            .scale(&others);
        require!(
            rec.compare(
                "|a_j| > (q^(1/min) + sum |b_i/b_m|)^(n-j) sum_(i!=j) |a_i|",
                exact(fa[j].clone()),
                Rel::Gt,
                first
            ),
            "dominance of a_j"
        );
        let ratio_f = &others / &fa[j];
        let tail: BigRat = (1..=m).map(|i| gb[i].clone()).sum();
        let second = root_q
            .add(&kth_root_bounds(&ratio_f, j as u32)?)
            .powi(m as i64)
            .expect("nonnegative base")
            .scale(&tail);
        require!(
            rec.compare(
                "|b_0| > (q^(1/min) + (sum |a_i/a_j|)^(1/j))^m sum_(i>=1) |b_i|",
                exact(gb[0].clone()),
                Rel::Gt,
                second
            ),
            "dominance of b_0"
        );
        let (_, abs) = record_resultant(rec, f, g)?;
        require!(
            check_split(rec, &abs, q, "|Res|") == Some(true),
            "primality"
        );
        Ok(Verdict::BothIrreducible)
    })
}

fn linear_preconditions(f: &IntPoly, b: &BigInt, c: &BigInt) -> Result<usize> {
    let n = nonconstant(f, "f")?;
    if b.is_zero() || c.is_zero() {
        return Err(Error::ZeroArgs);
    }
    if f.constant_term().is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    Ok(n)
}

fn record_linear_value(rec: &mut Recorder, f: &IntPoly, b: &BigInt, c: &BigInt) -> Result<BigInt> {
    rec.param("b", b);
    rec.param("c", c);
    let value = f.eval_homogeneous(c, b)?;
    rec.fact("b^n f(c/b)", &value);
    Ok(value.abs())
}

/// `f` is irreducible when `|b^n f(c/b)| = p q` with `p` prime and a
/// coefficient `a_j` dominates the others, weighted by powers of
/// `|c| +- q`. Index `j = 0` uses the variant without the requirement
/// `q < |c|`. The split uses the smallest `q` that leaves a prime cofactor.
pub fn linear_value(
    ctx: &Ctx,
    f: &IntPoly,
    b: &BigInt,
    c: &BigInt,
    j: usize,
) -> Result<Certificate> {
    let n = linear_preconditions(f, b, c)?;
    if j > n {
        return Err(Error::Precondition(format!("index j must lie in 0..{n}")));
    }
    run_checker(ctx, "linear-value", text(f), None, |rec| {
        rec.param("j", j);
        let value = record_linear_value(rec, f, b, c)?;
        let (ok, q) = choose_split(rec, &value, &SplitChoice::Auto, "|b^n f(c/b)|")?;
        require!(ok, "primality");
        let fa = abs_coeffs(f);
        let ab = int_rat(&b.abs());
        let ac = int_rat(&c.abs());
        let qr = int_rat(&q);
        if j == 0 {
            let plus = &ac + &qr;
            let rhs: BigRat = (1..=n)
                .map(|i| &fa[i] * pow_rat(&(&plus / &ab), i as i32))
                .sum();
            require!(
                rec.compare_rat(
                    "|a_0| > sum |a_i| |b|^(-i) (|c|+q)^i",
                    fa[0].clone(),
                    Rel::Gt,
                    rhs
                ),
                "dominance"
            );
            return Ok(Verdict::Irreducible);
        }
        require!(
            rec.compare_int("q < |c|", &q, Rel::Lt, &c.abs()),
            "q too large"
        );
        let plus = &ac + &qr;
        let minus = &ac - &qr;
        let mut terms = Vec::new();
        for i in (0..=n).filter(|&i| i != j) {
            if fa[i].is_zero() {
                continue;
            }
            let num = pow_rat(&plus, (i * (n - j)) as i32);
            let den = pow_rat(&minus, (j * (n - i)) as i32);
            let radical = kth_root_bounds(&(num / den), n as u32)?;
            let weight = &fa[i] * pow_rat(&ab, j as i32 - i as i32);
            terms.push(radical.scale(&weight));
        }
        let rhs = sum_bounds(terms);
        require!(
            rec.compare(
                "|a_j| > sum |a_i| |b|^(j-i) ((|c|+q)^(i(n-j)) / (|c|-q)^(j(n-i)))^(1/n)",
                exact(fa[j].clone()),
                Rel::Gt,
                rhs
            ),
            "dominance"
        );
        Ok(Verdict::Irreducible)
    })
}

/// Closed-form corollaries of [`linear_value`] with `q = 1`.
pub fn linear_value_corollary(
    ctx: &Ctx,
    f: &IntPoly,
    b: &BigInt,
    c: &BigInt,
    variant: LinearVariant,
) -> Result<Certificate> {
    let n = linear_preconditions(f, b, c)?;
    let id = match variant {
        LinearVariant::Littlewood => {
            if f.coeffs().iter().any(|a| a.abs() > BigInt::one()) {
                return Err(Error::CoefficientConstraintViolated(
                    "coefficients must lie in {-1, 0, 1}".into(),
                ));
            }
            "linear-value-littlewood"
        }
        LinearVariant::DominantLeading => "linear-value-dominant-leading",
        LinearVariant::DominantMiddle(j) => {
            if j == 0 || j >= n {
                return Err(Error::Precondition(format!(
                    "index j must lie in 1..{}",
                    n.saturating_sub(1)
                )));
            }
            if !b.is_one() {
                return Err(Error::Precondition(
                    "the dominant-middle variant evaluates f(c), so b must be 1".into(),
                ));
            }
            "linear-value-dominant-middle"
        }
    };
    run_checker(ctx, id, text(f), None, |rec| {
        let value = record_linear_value(rec, f, b, c)?;
        let ab = b.abs();
        let ac = c.abs();
        let two = BigInt::from(2);
        let fa = abs_coeffs(f);
        match variant {
            LinearVariant::Littlewood => {
                let wide = ac >= (&two * &ab + 1);
                let tall = ab >= (&two * &ac + 1);
                rec.fact("|c| >= 2|b|+1", wide);
                rec.fact("|b| >= 2|c|+1", tall);
                require!(wide || tall, "geometry");
            }
            LinearVariant::DominantLeading => {
                require!(
                    rec.compare_int("|c| >= 2|b|+1", &ac, Rel::Ge, &(&two * &ab + 1)),
                    "geometry"
                );
                let top = fa[..n].iter().max().cloned().unwrap_or_default();
                let by_max =
                    rec.compare_rat("|a_n| >= max_(i<n) |a_i|", fa[n].clone(), Rel::Ge, top);
                if !by_max {
                    let half_sum: BigRat = (0..n)
                        .map(|i| &fa[i] * pow_rat(&int_rat(&two), i as i32 - n as i32))
                        .sum();
                    require!(
                        rec.compare_rat(
                            "|a_n| > sum |a_i| 2^(i-n)",
                            fa[n].clone(),
                            Rel::Gt,
                            half_sum
                        ),
                        "dominance"
                    );
                }
            }
            LinearVariant::DominantMiddle(j) => {
                rec.param("j", j);
                require!(rec.compare_int("|c| >= 2", &ac, Rel::Ge, &two), "geometry");
                let acr = int_rat(&ac);
                let mut terms = Vec::new();
                for i in (0..=n).filter(|&i| i != j) {
                    let pw = kth_root_bounds(&pow_rat(&acr, 8 * i as i32), 5)?;
                    terms.push(pw.scale(&fa[i]));
                }
                require!(
                    rec.compare(
                        "|a_j| >= sum |a_i| |c|^(8i/5)",
                        exact(fa[j].clone()),
                        Rel::Ge,
                        sum_bounds(terms)
                    ),
                    "dominance"
                );
            }
        }
        require!(rec.prime("|b^n f(c/b)|", &value), "primality");
        Ok(Verdict::Irreducible)
    })
}

/// Value of the binary form attached to `form`, straight from the
/// coefficients of `f`.
pub fn form_value(f: &IntPoly, form: &QuadraticForm) -> BigInt {
    let a: Vec<BigInt> = f.coeffs().to_vec();
    match form {
        QuadraticForm::Gauss => {
            let mut re = BigInt::zero();
            let mut im = BigInt::zero();
            for (i, c) in a.iter().enumerate() {
                let sign = if (i / 2) % 2 == 0 { 1 } else { -1 };
                if i % 2 == 0 {
                    re += c * sign;
                } else {
                    im += c * sign;
                }
            }
            &re * &re + &im * &im
        }
        QuadraticForm::Sqrt(m) => {
            let mut even = BigInt::zero();
            let mut odd = BigInt::zero();
            let mut pw = BigInt::one();
            for pair in a.chunks(2) {
                even += &pair[0] * &pw;
                if let Some(o) = pair.get(1) {
                    odd += o * &pw;
                }
                pw *= m;
            }
            &even * &even - m * &odd * &odd
        }
        QuadraticForm::Eisenstein => {
            let mut s = [BigInt::zero(), BigInt::zero(), BigInt::zero()];
            for (i, c) in a.iter().enumerate() {
                s[i % 3] += c;
            }
            &s[0] * &s[0] + &s[1] * &s[1] + &s[2] * &s[2]
                - &s[0] * &s[1]
                - &s[0] * &s[2]
                - &s[1] * &s[2]
        }
        QuadraticForm::Golden => {
            let mut lucas = vec![BigInt::from(2), BigInt::one()];
            while lucas.len() <= a.len() {
                let l = lucas.len();
                let next = &lucas[l - 1] + &lucas[l - 2];
                lucas.push(next);
            }
            let mut total = BigInt::zero();
            for i in 0..a.len() {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                total += &a[i] * &a[i] * sign;
                for j in i + 1..a.len() {
                    total += &lucas[j - i] * &a[i] * &a[j] * sign;
                }
            }
            total
        }
    }
}

/// `f` is irreducible when the form value `|Res(f, g)|` for one of the
/// four quadratics `g` equals `p q` with `p` prime and the coefficients of
/// `f` keep its roots away from the roots of `g`.
pub fn quadratic_form(
    ctx: &Ctx,
    f: &IntPoly,
    form: &QuadraticForm,
    choice: &SplitChoice,
) -> Result<Certificate> {
    let n = nonconstant(f, "f")?;
    if let QuadraticForm::Sqrt(m) = form {
        if !m.is_positive() || is_square(m) {
            return Err(Error::SquareM);
        }
    }
    if *form != QuadraticForm::Golden && f.constant_term().is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let direct = form_value(f, form).abs();
    let (qa, qb, qc) = form.quadratic();
    let shift = resultant_quadratic_shift(f, &qa, &qb, &qc)?.abs();
    let binet = resultant_quadratic_binet(f, &qa, &qb, &qc)?.abs();
    if direct != shift || direct != binet {
        return Err(Error::Verification(format!(
            "form value disagrees across methods: direct {direct}, shifted {shift}, power sums {binet}"
        )));
    }
    let id = format!("form-{}", form.name());
    run_checker(ctx, &id, text(f), Some(text(&form.poly())), |rec| {
        if let QuadraticForm::Sqrt(m) = form {
            rec.param("m", m);
        }
        rec.param(
            "q_mode",
            if matches!(choice, SplitChoice::Auto) {
                "auto"
            } else {
                "given"
            },
        );
        rec.fact("form value", &direct);
        rec.set_resultant(&direct);
        let (ok, q) = choose_split(rec, &direct, choice, "form value")?;
        rec.param("q", &q);
        require!(ok, "primality");
        let fa = abs_coeffs(f);
        let qr = int_rat(&q);
        let two = BigRat::from_integer(2.into());
        let lower_sum = |base: &DirectedBound| -> DirectedBound {
            sum_bounds(
                (1..=n)
                    .map(|i| base.powi(i as i64).expect("nonnegative").scale(&fa[i]))
                    .collect(),
            )
        };
        match form {
            QuadraticForm::Gauss => {
                let s = kth_root_bounds(&(BigRat::one() + &qr), 2)?;
                require!(
                    rec.compare(
                        "|a_0| > sum |a_i| sqrt(1+q)^i",
                        exact(fa[0].clone()),
                        Rel::Gt,
                        lower_sum(&s)
                    ),
                    "dominance"
                );
            }
            QuadraticForm::Sqrt(m) => {
                let mr = int_rat(m);
                let s = kth_root_bounds(&(&mr + &qr), 2)?;
                let low = rec.compare(
                    "|a_0| > sum |a_i| sqrt(m+q)^i",
                    exact(fa[0].clone()),
                    Rel::Gt,
                    lower_sum(&s),
                );
                if low {
                    rec.param("branch", "constant");
                } else {
                    rec.param("branch", "leading");
                    require!(rec.compare_int("q < m", &q, Rel::Lt, m), "dominance");
                    let t = kth_root_bounds(&(&mr - &qr), 2)?;
                    let rhs = sum_bounds(
                        (0..n)
                            .map(|i| {
                                t.powi(i as i64 - n as i64)
                                    .expect("positive base")
                                    .scale(&fa[i])
                            })
                            .collect(),
                    );
                    require!(
                        rec.compare(
                            "|a_n| > sum |a_i| sqrt(m-q)^(i-n)",
                            exact(fa[n].clone()),
                            Rel::Gt,
                            rhs
                        ),
                        "dominance"
                    );
                }
            }
            QuadraticForm::Eisenstein | QuadraticForm::Golden => {
                let r = kth_root_bounds(
                    &(qr * BigRat::from_integer(4.into()) + BigRat::from_integer(5.into())),
                    2,
                )?;
                let s = DirectedBound::exact(BigRat::one())
                    .add(&r)
                    .scale(&two.recip());
                require!(
                    rec.compare(
                        "|a_0| > sum |a_i| ((1+sqrt(4q+5))/2)^i",
                        exact(fa[0].clone()),
                        Rel::Gt,
                        lower_sum(&s)
                    ),
                    "dominance"
                );
            }
        }
        Ok(Verdict::Irreducible)
    })
}

fn close_preconditions(ctx: &Ctx, f: &IntPoly, g: &IntPoly, r: u32) -> Result<(usize, usize)> {
    let n = nonconstant(f, "f")?;
    let m = nonconstant(g, "g")?;
    if f.constant_term().is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    if !(1..=2).contains(&r) {
        return Err(Error::Precondition(
            "only r = 1 and r = 2 are supported".into(),
        ));
    }
    if ctx.resultant(f, g)?.is_zero() {
        return Err(Error::NotCoprime);
    }
    Ok((n, m))
}

fn value_below(
    rec: &mut Recorder,
    f: &IntPoly,
    g: &IntPoly,
    mode: ValueMode,
    thr: DirectedBound,
) -> Result<bool> {
    let enc = rec.enclose(f)?;
    let Some(high) = max_value(&enc, g, mode) else {
        rec.fact("root enclosures", "disk touches the origin");
        return Ok(false);
    };
    Ok(rec.compare(mode_label(mode, "max"), exact(high), Rel::Lt, thr))
}

fn mode_coefficient(f: &IntPoly, mode: ValueMode) -> BigInt {
    match mode {
        ValueMode::Value => f.leading().abs(),
        ValueMode::Scaled => f.constant_term().abs(),
    }
}

/// `f` has at most `k` irreducible factors when `g` is small at every root
/// of `f`: below `(|Res| / (d_k |a_n|^m))^(1/(n - k r))`, or the scaled
/// variant with `|a_0|`. Requires `k r < n`; `r = 2` needs `f` free of
/// rational roots.
pub fn close_values_dk(
    ctx: &Ctx,
    f: &IntPoly,
    g: &IntPoly,
    k: u32,
    r: u32,
    mode: ValueMode,
) -> Result<Certificate> {
    let (n, m) = close_preconditions(ctx, f, g, r)?;
    if k == 0 || (k * r) as usize >= n {
        return Err(Error::Precondition("need 1 <= k < n/r".into()));
    }
    run_checker(ctx, "close-values-dk", text(f), Some(text(g)), |rec| {
        rec.param("k", k);
        rec.param("r", r);
        rec.param("mode", mode.name());
        let (_, abs) = record_resultant(rec, f, g)?;
        let fac = rec.ctx.factorize(&abs);
        let Some(dk) = d_k_from(&fac, &abs, k) else {
            rec.fact("factorization of |Res|", "incomplete");
            return Ok(Verdict::Inconclusive("factorization".into()));
        };
        rec.fact(format!("d_{k}(|Res|)"), &dk);
        if r == 2 {
            require!(no_rational_roots(rec, f, "f"), "rational roots");
        }
        let lead = mode_coefficient(f, mode).pow(m as u32);
        let base = BigRat::new(abs.clone(), &dk * lead);
        let thr = kth_root_bounds(&base, (n - (k * r) as usize) as u32)?;
        require!(value_below(rec, f, g, mode, thr)?, "value bound");
        Ok(Verdict::FactorBound(k))
    })
}

/// `f` is irreducible when `|Res| = p q` with `p` prime and `g` stays below
/// `(p / |a_n|^m)^(1/(n - r))` at every root of `f` (or the scaled variant
/// with `|a_0|`). `r = 2` needs `f` free of rational roots.
pub fn close_values_prime(
    ctx: &Ctx,
    f: &IntPoly,
    g: &IntPoly,
    r: u32,
    mode: ValueMode,
) -> Result<Certificate> {
    let (n, m) = close_preconditions(ctx, f, g, r)?;
    if r as usize >= n {
        return Err(Error::Precondition("r must be smaller than deg f".into()));
    }
    run_checker(ctx, "close-values-prime", text(f), Some(text(g)), |rec| {
        rec.param("r", r);
        rec.param("mode", mode.name());
        let (_, abs) = record_resultant(rec, f, g)?;
        let (ok, _) = choose_split(rec, &abs, &SplitChoice::Auto, "|Res|")?;
        require!(ok, "primality");
        let p: BigInt = &abs / rec_q(rec);
        if r == 2 {
            require!(no_rational_roots(rec, f, "f"), "rational roots");
        }
        let lead = mode_coefficient(f, mode).pow(m as u32);
        let thr = kth_root_bounds(&BigRat::new(p, lead), (n - r as usize) as u32)?;
        require!(value_below(rec, f, g, mode, thr)?, "value bound");
        Ok(Verdict::Irreducible)
    })
}

fn rec_q(rec: &Recorder) -> BigInt {
    rec.split_q().unwrap_or_else(BigInt::one)
}

/// Both polynomials are irreducible when `|Res| = p q` with `p` prime and
/// every root of `f` is close to every root of `g`:
/// `max |theta - xi| < p^(1/(mn - r min)) / (|a_n|^(1/(n-r)) |b_m|^(1/(m-r)))`,
/// or the reciprocal variant with `a_0`, `b_0`. `r = 2` needs
/// `n, m >= 3` and no rational roots in either polynomial.
pub fn close_roots_pair(
    ctx: &Ctx,
    f: &IntPoly,
    g: &IntPoly,
    r: u32,
    side: Side,
) -> Result<Certificate> {
    let (n, m) = close_preconditions(ctx, f, g, r)?;
    if g.constant_term().is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    if n <= r as usize || m <= r as usize {
        return Err(Error::Precondition(format!("both degrees must exceed {r}")));
    }
    run_checker(ctx, "close-roots-pair", text(f), Some(text(g)), |rec| {
        rec.param("r", r);
        rec.param("side", side.name());
        let (_, abs) = record_resultant(rec, f, g)?;
        let (ok, _) = choose_split(rec, &abs, &SplitChoice::Auto, "|Res|")?;
        require!(ok, "primality");
        let p: BigInt = &abs / rec_q(rec);
        if r == 2 {
            require!(no_rational_roots(rec, f, "f"), "rational roots");
            require!(no_rational_roots(rec, g, "g"), "rational roots");
        }
        let (cf, cg) = match side {
            Side::Direct => (f.leading().abs(), g.leading().abs()),
            Side::Reciprocal => (f.constant_term().abs(), g.constant_term().abs()),
        };
        let ru = r as usize;
        let num = kth_root_bounds(&int_rat(&p), (n * m - ru * n.min(m)) as u32)?;
        let da = kth_root_bounds(&int_rat(&cf), (n - ru) as u32)?;
        let db = kth_root_bounds(&int_rat(&cg), (m - ru) as u32)?;
        let den = da.mul_nonneg(&db);
        let thr = DirectedBound {
            lo: &num.lo / &den.hi,
            hi: &num.hi / &den.lo,
        };
        let (pf, pg) = side_polys(f, g, side)?;
        let ef = rec.enclose(&pf)?;
        let eg = rec.enclose(&pg)?;
        let far = max_pairwise_distance_upper(&ef, &eg).expect("nonempty enclosures");
        let label = match side {
            Side::Direct => "max |theta - xi|",
            Side::Reciprocal => "max |1/theta - 1/xi|",
        };
        require!(rec.compare(label, exact(far), Rel::Lt, thr), "distance");
        Ok(Verdict::BothIrreducible)
    })
}

/// Both polynomials are irreducible when a prime `p` divides `f(d)` and
/// `g(d)` and the roots are more than
/// `(||f||^m ||g||^n / p)^(1/min(m, n))` apart.
pub fn hadamard_separation(
    ctx: &Ctx,
    f: &IntPoly,
    g: &IntPoly,
    d: &BigInt,
    side: Side,
) -> Result<Certificate> {
    let n = nonconstant(f, "f")?;
    let m = nonconstant(g, "g")?;
    require_constant_terms(f, g)?;
    if ctx.resultant(f, g)?.is_zero() {
        return Err(Error::NotCoprime);
    }
    let fd = f.eval(d);
    let gd = g.eval(d);
    let common = fd.gcd(&gd);
    if common.is_one() {
        return Err(Error::NoCommonPrime);
    }
    run_checker(ctx, "hadamard-separation", text(f), Some(text(g)), |rec| {
        rec.param("d", d);
        rec.param("side", side.name());
        rec.fact("f(d)", &fd);
        rec.fact("g(d)", &gd);
        let Some((p, _)) = prime_split(rec.ctx, &common) else {
            rec.fact("prime factor of gcd(f(d), g(d))", "none found");
            return Ok(Verdict::Inconclusive("factorization".into()));
        };
        require!(rec.prime("p", &p), "primality");
        rec.divides("p divides f(d)", &p, &fd);
        rec.divides("p divides g(d)", &p, &gd);
        let k = n.min(m) as u32;
        let radicand = BigRat::new(
            f.norm_sq().pow(m as u32) * g.norm_sq().pow(n as u32),
            &p * &p,
        );
        let thr = kth_root_bounds(&radicand, 2 * k)?;
        require!(separated(rec, f, g, side, thr)?, "distance");
        Ok(Verdict::BothIrreducible)
    })
}
