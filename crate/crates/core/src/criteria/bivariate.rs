//! Degree criteria for bivariate polynomials `f(X, Y) = sum a_i(X) Y^i`
//! over Q, driven by `Res_Y(f, g)` and the degree valuation on `Q(X)`.

use num_traits::Zero;

use crate::bivar::{BivarPoly, Deg};
use crate::cert::{require, run_checker, Certificate, Ctx, Recorder, Rel, Verdict};
use crate::error::{Error, Result};
use crate::poly::{BigRat, RatPoly};
use crate::resultant::resultant_bivar_y;
use crate::text::parse_rat_poly;

use super::{bivar_text, Side};

/// Which pair of degree inequalities the dominance criterion uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DominanceVariant {
    /// `deg a_0 > max deg a_i` and `deg b_m >= max deg b_i`.
    GtGeq,
    /// `deg a_0 >= max deg a_i` and `deg b_m > max deg b_i`.
    GeqGt,
}

impl DominanceVariant {
    pub fn name(self) -> &'static str {
        match self {
            DominanceVariant::GtGeq => "gt_geq",
            DominanceVariant::GeqGt => "geq_gt",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "gt_geq" => Ok(DominanceVariant::GtGeq),
            "geq_gt" => Ok(DominanceVariant::GeqGt),
            _ => Err(Error::Parse(format!("unknown dominance variant `{s}`"))),
        }
    }
}

/// The two criteria for linear combinations `alpha f + beta g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CombinationVariant {
    /// `deg_Y f < deg_Y g`, with `g` dominating coefficientwise.
    Dominance,
    /// Equal `Y`-degrees and a shared nonzero constant coefficient `a_j`, `b_j`.
    SharedConstant(usize),
}

/// Degree gaps of a pair: `a = deg a_0 - max_(i>=1) deg a_i` and
/// `b = max_(i<m) deg b_i - deg b_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub a: i64,
    pub b: i64,
    pub n: usize,
    pub m: usize,
    pub deg_a0: i64,
    pub deg_bm: i64,
}

fn max_deg(f: &BivarPoly, range: impl Iterator<Item = usize>) -> Deg {
    range.map(|i| f.deg_coeff(i)).max().unwrap_or(Deg::Bottom)
}

fn finite(d: Deg) -> i64 {
    d.finite().expect("coefficient is nonzero")
}

impl DegreeProfile {
    /// Requires `a_0 a_n b_0 b_m != 0` and positive `Y`-degrees.
    pub fn of(f: &BivarPoly, g: &BivarPoly) -> Result<Self> {
        check_shape(f, g)?;
        let n = f.deg_y();
        let m = g.deg_y();
        let deg_a0 = finite(f.deg_coeff(0));
        let deg_bm = finite(g.deg_coeff(m));
        let a = deg_a0 - finite(max_deg(f, 1..=n));
        let b = finite(max_deg(g, 0..m)) - deg_bm;
        Ok(DegreeProfile {
            a,
            b,
            n,
            m,
            deg_a0,
            deg_bm,
        })
    }

    /// `min{A, A/n}` and `max{B, B/m}`.
    pub fn gap_bounds(&self) -> (BigRat, BigRat) {
        let a = BigRat::from_integer(self.a.into());
        let b = BigRat::from_integer(self.b.into());
        let an = &a / BigRat::from_integer((self.n as i64).into());
        let bm = &b / BigRat::from_integer((self.m as i64).into());
        (a.min(an), b.max(bm))
    }
}

fn check_shape(f: &BivarPoly, g: &BivarPoly) -> Result<()> {
    for (p, name) in [(f, "f"), (g, "g")] {
        match p.degree_y() {
            None => return Err(Error::ZeroPolynomial),
            Some(0) => {
                return Err(Error::Precondition(format!(
                    "{name} must have positive degree in Y"
                )))
            }
            Some(_) => {}
        }
        if p.coeff(0).is_zero() {
            return Err(Error::ZeroCoefficient);
        }
    }
    Ok(())
}

fn check_content(p: &BivarPoly) -> Result<()> {
    if p.has_trivial_content() {
        Ok(())
    } else {
        Err(Error::ContentNotTrivial)
    }
}

fn nonzero_resultant(f: &BivarPoly, g: &BivarPoly) -> Result<RatPoly> {
    let r = resultant_bivar_y(f, g)?;
    if r.is_zero() {
        return Err(Error::NotCoprimeInY);
    }
    Ok(r)
}

/// Largest `s <= limit` that is a sum of a sub-multiset of `degrees`.
pub fn largest_subset_sum(degrees: &[usize], limit: usize) -> usize {
    let mut reachable = vec![false; limit + 1];
    reachable[0] = true;
    for &d in degrees {
        for s in (d..=limit).rev() {
            if reachable[s - d] {
                reachable[s] = true;
            }
        }
    }
    (0..=limit).rev().find(|&s| reachable[s]).unwrap_or(0)
}

/// `delta_k` for a nonzero resultant with the given factor degrees: the
/// largest degree of a divisor not exceeding `deg / (k + 1)`.
pub fn delta_k_from_degrees(degrees: &[usize], k: u32) -> usize {
    let total: usize = degrees.iter().sum();
    largest_subset_sum(degrees, total / (k as usize + 1))
}

fn factor_degrees(ctx: &Ctx, r: &RatPoly) -> Result<Vec<usize>> {
    if r.deg() == 0 {
        return Ok(Vec::new());
    }
    Ok(ctx.factor_poly(r)?.degrees())
}

/// `delta_k(f, g)`, or `None` when the factorization oracle runs out of
/// budget.
pub fn delta_k(ctx: &Ctx, f: &BivarPoly, g: &BivarPoly, k: u32) -> Result<Option<usize>> {
    if k == 0 {
        return Err(Error::Precondition("k must be positive".into()));
    }
    let r = nonzero_resultant(f, g)?;
    match factor_degrees(ctx, &r) {
        Ok(d) => Ok(Some(delta_k_from_degrees(&d, k))),
        Err(Error::BudgetExceeded) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Number of irreducible factors of `r` with multiplicity, `None` on an
/// exhausted oracle budget.
fn factor_count(ctx: &Ctx, r: &RatPoly) -> Result<Option<u32>> {
    if r.deg() == 0 {
        return Ok(Some(0));
    }
    match ctx.factor_poly(r) {
        Ok(fac) => Ok(Some(fac.count())),
        Err(Error::BudgetExceeded) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Records whether `Res_Y` is a nonconstant irreducible polynomial.
fn resultant_irreducible(rec: &mut Recorder, r: &RatPoly) -> Result<bool> {
    rec.fact("Res_Y(f, g)", r.to_human());
    if r.deg() == 0 {
        rec.fact("Res_Y irreducible", "no, constant");
        return Ok(false);
    }
    match factor_count(rec.ctx, r)? {
        Some(count) => {
            rec.fact("irreducible factors of Res_Y", count);
            Ok(count == 1)
        }
        None => {
            rec.fact("irreducible factors of Res_Y", "oracle budget exceeded");
            Ok(false)
        }
    }
}

fn record_geometry(rec: &mut Recorder, profile: &DegreeProfile) -> bool {
    rec.fact("A", profile.a);
    rec.fact("B", profile.b);
    let (lhs, rhs) = profile.gap_bounds();
    rec.compare_rat("min{A, A/n} > max{B, B/m}", lhs, Rel::Gt, rhs)
}

fn deg_int(d: Deg) -> num_bigint::BigInt {
    num_bigint::BigInt::from(finite(d))
}

fn oriented(f: &BivarPoly, g: &BivarPoly, side: Side) -> (BivarPoly, BivarPoly) {
    match side {
        Side::Direct => (f.clone(), g.clone()),
        Side::Reciprocal => (f.reciprocal_y(), g.reciprocal_y()),
    }
}

fn pair_preconditions(f: &BivarPoly, g: &BivarPoly) -> Result<RatPoly> {
    check_shape(f, g)?;
    check_content(f)?;
    check_content(g)?;
    nonzero_resultant(f, g)
}

/// Each of `f`, `g` has at most `k` irreducible factors when
/// `min{A, A/n} > max{B, B/m}` and `min{deg a_0, deg b_m} > delta_k`. The
/// reciprocal side applies the same test to the `Y`-reciprocals.
pub fn degree_gap_dk(
    ctx: &Ctx,
    f: &BivarPoly,
    g: &BivarPoly,
    k: u32,
    side: Side,
) -> Result<Certificate> {
    if k == 0 {
        return Err(Error::Precondition("k must be positive".into()));
    }
    let res = pair_preconditions(f, g)?;
    let (pf, pg) = oriented(f, g, side);
    let profile = DegreeProfile::of(&pf, &pg)?;
    run_checker(
        ctx,
        "degree-gap-dk",
        bivar_text(f),
        Some(bivar_text(g)),
        |rec| {
            rec.param("k", k);
            rec.param("side", side.name());
            require!(record_geometry(rec, &profile), "geometry");
            rec.fact("deg Res_Y", res.deg());
            let degrees = match factor_degrees(rec.ctx, &res) {
                Ok(d) => d,
                Err(Error::BudgetExceeded) => {
                    rec.fact("factorization of Res_Y", "oracle budget exceeded");
                    return Ok(Verdict::Inconclusive("oracle budget".into()));
                }
                Err(e) => return Err(e),
            };
            let delta = delta_k_from_degrees(&degrees, k);
            rec.fact(format!("delta_{k}"), delta);
            let low = profile.deg_a0.min(profile.deg_bm);
            require!(
                rec.compare_int(
                    "min{deg a_0, deg b_m} > delta_k",
                    &low.into(),
                    Rel::Gt,
                    &delta.into()
                ),
                "degree"
            );
            Ok(Verdict::FactorBoundBoth(k))
        },
    )
}

/// Both polynomials are irreducible when `Res_Y(f, g)` is irreducible over
/// Q and the constant coefficient of `f` and the leading coefficient of
/// `g` have dominant degree.
pub fn degree_dominance(
    ctx: &Ctx,
    f: &BivarPoly,
    g: &BivarPoly,
    variant: DominanceVariant,
) -> Result<Certificate> {
    let res = pair_preconditions(f, g)?;
    run_checker(
        ctx,
        "degree-dominance",
        bivar_text(f),
        Some(bivar_text(g)),
        |rec| {
            rec.param("variant", variant.name());
            let (n, m) = (f.deg_y(), g.deg_y());
            let a0 = deg_int(f.deg_coeff(0));
            let a_rest = deg_int(max_deg(f, 1..=n));
            let bm = deg_int(g.deg_coeff(m));
            let b_rest = deg_int(max_deg(g, 0..m));
            let (ra, rb) = match variant {
                DominanceVariant::GtGeq => (Rel::Gt, Rel::Ge),
                DominanceVariant::GeqGt => (Rel::Ge, Rel::Gt),
            };
            require!(
                rec.compare_int("deg a_0 vs max_(i>=1) deg a_i", &a0, ra, &a_rest),
                "degree of a_0"
            );
            require!(
                rec.compare_int("deg b_m vs max_(i<m) deg b_i", &bm, rb, &b_rest),
                "degree of b_m"
            );
            require!(resultant_irreducible(rec, &res)?, "Res_Y reducible");
            Ok(Verdict::BothIrreducible)
        },
    )
}

/// Each of `f`, `g` has at most `Omega(Res_Y / d)` irreducible factors
/// when the degree gaps separate and `min{deg a_0, deg b_m} > deg d`.
pub fn degree_gap_divisor(
    ctx: &Ctx,
    f: &BivarPoly,
    g: &BivarPoly,
    d: &RatPoly,
    side: Side,
) -> Result<Certificate> {
    let res = pair_preconditions(f, g)?;
    let quotient = if d.is_zero() { None } else { res.div_exact(d) };
    let Some(quotient) = quotient else {
        return Err(Error::NotADivisor(d.to_human()));
    };
    let (pf, pg) = oriented(f, g, side);
    let profile = DegreeProfile::of(&pf, &pg)?;
    run_checker(
        ctx,
        "degree-gap-divisor",
        bivar_text(f),
        Some(bivar_text(g)),
        |rec| {
            rec.param("d", d.to_human());
            rec.param("side", side.name());
            require!(record_geometry(rec, &profile), "geometry");
            let Some(count) = factor_count(rec.ctx, &quotient)? else {
                rec.fact("factorization of Res_Y/d", "oracle budget exceeded");
                return Ok(Verdict::Inconclusive("oracle budget".into()));
            };
            rec.fact("Omega(Res_Y/d)", count);
            let low = profile.deg_a0.min(profile.deg_bm);
            require!(
                rec.compare_int(
                    "min{deg a_0, deg b_m} > deg d",
                    &low.into(),
                    Rel::Gt,
                    &d.deg().into()
                ),
                "degree"
            );
            Ok(Verdict::FactorBoundBoth(count))
        },
    )
}

/// `alpha f + beta g` is irreducible under either combination criterion.
///
/// Both variants need `Res_Y(f, g)` irreducible, `deg a_0 > max_(i>=1)
/// deg a_i`, `deg b_m >= max_(i<m) deg b_i` and `deg a_i <= deg b_i`. The
/// combination must also keep a nonzero constant coefficient in `Y`.
pub fn combination(
    ctx: &Ctx,
    f: &BivarPoly,
    g: &BivarPoly,
    variant: CombinationVariant,
    alpha: &BigRat,
    beta: &BigRat,
) -> Result<Certificate> {
    check_shape(f, g)?;
    if alpha.is_zero() && beta.is_zero() {
        return Err(Error::ZeroArgs);
    }
    let (n, m) = (f.deg_y(), g.deg_y());
    let (id, last) = match variant {
        CombinationVariant::Dominance => {
            if n >= m {
                return Err(Error::DegreeOrder);
            }
            check_content(f)?;
            let tail = (n + 1..=m).fold(RatPoly::zero(), |acc, i| acc.gcd(&g.coeff(i)));
            if tail.deg() > 0 {
                return Err(Error::ShapeViolation(
                    "gcd of the top coefficients of g is not constant".into(),
                ));
            }
            ("combination-dominance", n)
        }
        CombinationVariant::SharedConstant(j) => {
            if n != m {
                return Err(Error::DegreeOrder);
            }
            if j == 0 || j >= n {
                return Err(Error::ShapeViolation(format!(
                    "index j must lie in 1..{}",
                    n.saturating_sub(1)
                )));
            }
            let constant = |p: &RatPoly| !p.is_zero() && p.deg() == 0;
            if !constant(&f.coeff(j)) || !constant(&g.coeff(j)) {
                return Err(Error::ShapeViolation(format!(
                    "a_{j} and b_{j} must be nonzero constants"
                )));
            }
            ("combination-shared-constant", n - 1)
        }
    };
    let res = nonzero_resultant(f, g)?;
    let combo = &f.scale(alpha) + &g.scale(beta);
    run_checker(ctx, id, bivar_text(f), Some(bivar_text(g)), |rec| {
        rec.param("alpha", alpha);
        rec.param("beta", beta);
        if let CombinationVariant::SharedConstant(j) = variant {
            rec.param("j", j);
            let lead = f.coeff(j).coeff(0) * alpha + g.coeff(j).coeff(0) * beta;
            require!(
                rec.compare_rat("alpha a_j + beta b_j != 0", lead, Rel::Ne, BigRat::zero()),
                "side condition"
            );
        }
        rec.fact("alpha f + beta g", combo.to_text());
        let a0 = deg_int(f.deg_coeff(0));
        require!(
            rec.compare_int(
                "deg a_0 > max_(i>=1) deg a_i",
                &a0,
                Rel::Gt,
                &deg_int(max_deg(f, 1..=n))
            ),
            "degree of a_0"
        );
        let bm = deg_int(g.deg_coeff(m));
        require!(
            rec.compare_int(
                "deg b_m >= max_(i<m) deg b_i",
                &bm,
                Rel::Ge,
                &deg_int(max_deg(g, 0..m))
            ),
            "degree of b_m"
        );
        for i in 0..=last {
            let (da, db) = (f.deg_coeff(i), g.deg_coeff(i));
            let holds = da <= db;
            rec.fact(
                format!("deg a_{i} <= deg b_{i}"),
                format!("{da} <= {db}: {holds}"),
            );
            require!(holds, "coefficient degrees");
        }
        let c0 = combo.coeff(0);
        rec.fact(
            "constant coefficient of the combination is nonzero",
            !c0.is_zero(),
        );
        require!(!c0.is_zero(), "combination divisible by Y");
        require!(resultant_irreducible(rec, &res)?, "Res_Y reducible");
        Ok(Verdict::Irreducible)
    })
}

/// [`combination`] over every pair from `alphas x betas` other than
/// `(0, 0)`.
pub fn combination_grid(
    ctx: &Ctx,
    f: &BivarPoly,
    g: &BivarPoly,
    variant: CombinationVariant,
    alphas: &[BigRat],
    betas: &[BigRat],
) -> Result<Vec<Certificate>> {
    let mut out = Vec::new();
    for a in alphas {
        for b in betas {
            if a.is_zero() && b.is_zero() {
                continue;
            }
            out.push(combination(ctx, f, g, variant, a, b)?);
        }
    }
    Ok(out)
}

/// Both polynomials are irreducible when `Res_Y` is irreducible,
/// `Delta = deg b_0 - max_(i>=1) deg b_i > 0`, and `deg a_j` exceeds
/// `deg a_k + (k - j) Delta / m` for `k < j` and
/// `deg a_k + (k - j)(deg b_0 - deg b_m)` for `k > j`.
pub fn degree_spike(ctx: &Ctx, f: &BivarPoly, g: &BivarPoly, j: usize) -> Result<Certificate> {
    let res = pair_preconditions(f, g)?;
    let (n, m) = (f.deg_y(), g.deg_y());
    if j == 0 || j > n {
        return Err(Error::Precondition(format!("index j must lie in 1..{n}")));
    }
    run_checker(
        ctx,
        "degree-spike",
        bivar_text(f),
        Some(bivar_text(g)),
        |rec| {
            rec.param("j", j);
            let b0 = finite(g.deg_coeff(0));
            let delta = b0 - finite(max_deg(g, 1..=m));
            require!(
                rec.compare_int("Delta > 0", &delta.into(), Rel::Gt, &0.into()),
                "Delta"
            );
            let Some(aj) = f.deg_coeff(j).finite() else {
                rec.fact(format!("a_{j}"), "zero");
                return Ok(Verdict::Inconclusive("a_j is zero".into()));
            };
            let aj = BigRat::from_integer(aj.into());
            let rat = |x: i64| BigRat::from_integer(x.into());
            let spread = b0 - finite(g.deg_coeff(m));
            let mut below: Option<BigRat> = None;
            let mut above: Option<BigRat> = None;
            for k in (0..=n).filter(|&k| k != j) {
                let Some(ak) = f.deg_coeff(k).finite() else {
                    continue;
                };
                let shift = k as i64 - j as i64;
                let (slot, v) = if k < j {
                    (&mut below, rat(ak) + rat(shift * delta) / rat(m as i64))
                } else {
                    (&mut above, rat(ak + shift * spread))
                };
                if slot.as_ref().is_none_or(|s| v > *s) {
                    *slot = Some(v);
                }
            }
            for (label, bound) in [
                ("deg a_j > max_(k<j) (deg a_k + (k-j) Delta/m)", below),
                (
                    "deg a_j > max_(k>j) (deg a_k + (k-j)(deg b_0 - deg b_m))",
                    above,
                ),
            ] {
                match bound {
                    Some(b) => require!(
                        rec.compare_rat(label, aj.clone(), Rel::Gt, b),
                        "degree of a_j"
                    ),
                    None => rec.fact(label, "empty maximum"),
                }
            }
            require!(resultant_irreducible(rec, &res)?, "Res_Y reducible");
            Ok(Verdict::BothIrreducible)
        },
    )
}

pub(crate) fn replay(ctx: &Ctx, cert: &Certificate) -> Result<Certificate> {
    let f: BivarPoly = cert.f.parse()?;
    let g: BivarPoly = cert
        .g
        .as_deref()
        .ok_or_else(|| Error::Verification("certificate has no second polynomial".into()))?
        .parse()?;
    let side = || Side::parse(cert.param("side")?);
    match cert.criterion.as_str() {
        "degree-gap-dk" => {
            let k = cert
                .param("k")?
                .parse()
                .map_err(|_| Error::Parse("parameter `k`".into()))?;
            degree_gap_dk(ctx, &f, &g, k, side()?)
        }
        "degree-dominance" => degree_dominance(
            ctx,
            &f,
            &g,
            DominanceVariant::parse(cert.param("variant")?)?,
        ),
        "degree-gap-divisor" => {
            degree_gap_divisor(ctx, &f, &g, &parse_rat_poly(cert.param("d")?)?, side()?)
        }
        "combination-dominance" => combination(
            ctx,
            &f,
            &g,
            CombinationVariant::Dominance,
            &cert.param_rat("alpha")?,
            &cert.param_rat("beta")?,
        ),
        "combination-shared-constant" => combination(
            ctx,
            &f,
            &g,
            CombinationVariant::SharedConstant(cert.param_usize("j")?),
            &cert.param_rat("alpha")?,
            &cert.param_rat("beta")?,
        ),
        "degree-spike" => degree_spike(ctx, &f, &g, cert.param_usize("j")?),
        other => Err(Error::UnknownCriterion(other.to_string())),
    }
}
