//! Irreducibility of integer combinations `M f + N g` for a pair `(f, g)`
//! whose roots are separated by an annulus `A < |z| < B`.
//!
//! Every route first establishes the pair hypotheses (a prime factor `p`
//! of `|Res(f, g)| = p q`, the dominance inequalities at `A` and `B`, and
//! the annulus width) and then lists every admissible `(M, N)` in the
//! integer box cut out by the route's inequalities.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::bound::{kth_root_bounds, pow_rat, DirectedBound};
use crate::cert::{require, run_checker, Certificate, Ctx, Recorder, Rel, Verdict};
use crate::error::{Error, Result};
use crate::poly::{BigRat, IntPoly};

use super::{exact, int_rat, nonconstant};

/// Largest number of pairs a single certificate may list.
pub const MAX_PAIRS: usize = 100_000;

/// The inequality system used to bound `(M, N)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComboRoute {
    /// `deg f < deg g`: `|N|` bounded by the annulus, `|M|` by `|N|`.
    LowerDegree,
    /// `deg f = deg g`: `|M|` bounded by the annulus, `|N|` by `|M|`.
    EqualDegreeM,
    /// `deg f = deg g`: `|N|` bounded by the annulus, `|M|` by `|N|`.
    EqualDegreeN,
    /// `deg f = deg g`: `|M| |a_n| / |b_n| < |N| <= (B - 3A) / (2 q^(1/n))`.
    Marden,
    /// `deg f > deg g`: `|M|` bounded by the annulus, `|N|` by `|M|`.
    HigherDegreeM,
    /// `deg f > deg g`: `|N|^(n/m)` bounded by the annulus, `|M|` by `|N|`.
    HigherDegreeN,
}

impl ComboRoute {
    pub const ALL: [ComboRoute; 6] = [
        ComboRoute::LowerDegree,
        ComboRoute::EqualDegreeM,
        ComboRoute::EqualDegreeN,
        ComboRoute::Marden,
        ComboRoute::HigherDegreeM,
        ComboRoute::HigherDegreeN,
    ];

    pub fn id(self) -> &'static str {
        match self {
            ComboRoute::LowerDegree => "combos-lower-degree",
            ComboRoute::EqualDegreeM => "combos-equal-degree-m",
            ComboRoute::EqualDegreeN => "combos-equal-degree-n",
            ComboRoute::Marden => "combos-marden",
            ComboRoute::HigherDegreeM => "combos-higher-degree-m",
            ComboRoute::HigherDegreeN => "combos-higher-degree-n",
        }
    }

    pub fn from_id(id: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|r| r.id() == id)
    }

    /// Routes that apply to the given degrees.
    pub fn for_degrees(n: usize, m: usize) -> &'static [ComboRoute] {
        match n.cmp(&m) {
            std::cmp::Ordering::Less => &[ComboRoute::LowerDegree],
            std::cmp::Ordering::Equal => &[
                ComboRoute::EqualDegreeM,
                ComboRoute::EqualDegreeN,
                ComboRoute::Marden,
            ],
            std::cmp::Ordering::Greater => &[ComboRoute::HigherDegreeM, ComboRoute::HigherDegreeN],
        }
    }

    fn degrees_fit(self, n: usize, m: usize) -> bool {
        Self::for_degrees(n, m).contains(&self)
    }
}

/// Which of the two bounded quantities drives the enumeration.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Outer {
    M,
    N,
}

struct Pair {
    f: IntPoly,
    g: IntPoly,
    n: usize,
    m: usize,
    fa: Vec<BigRat>,
    gb: Vec<BigRat>,
}

impl Pair {
    fn new(f: &IntPoly, g: &IntPoly) -> Self {
        let abs = |p: &IntPoly| {
            p.coeffs()
                .iter()
                .map(|c| int_rat(&c.abs()))
                .collect::<Vec<_>>()
        };
        Pair {
            f: f.clone(),
            g: g.clone(),
            n: f.deg(),
            m: g.deg(),
            fa: abs(f),
            gb: abs(g),
        }
    }

    /// `M a_0 + N b_0 != 0` and, for equal degrees, `M a_n + N b_n != 0`.
    fn side_conditions(&self, mm: &BigInt, nn: &BigInt) -> bool {
        let low = mm * self.f.constant_term() + nn * self.g.constant_term();
        if low.is_zero() {
            return false;
        }
        if self.n == self.m {
            let top = mm * self.f.leading() + nn * self.g.leading();
            if top.is_zero() {
                return false;
            }
        }
        true
    }
}

/// Largest integer `x >= 0` with `x <= bound` (or `x < bound`), `None` when
/// there is none.
fn floor_below(bound: &BigRat, strict: bool) -> Option<BigInt> {
    if bound.is_negative() || (strict && bound.is_zero()) {
        return None;
    }
    let fl = bound.floor().to_integer();
    if strict && int_rat(&fl) == *bound {
        Some(fl - 1)
    } else {
        Some(fl)
    }
}

fn rat(x: i64) -> BigRat {
    BigRat::from_integer(x.into())
}

fn small(x: &BigInt) -> Result<usize> {
    x.to_usize()
        .filter(|&v| v <= MAX_PAIRS)
        .ok_or(Error::BudgetExceeded)
}

/// Records `|Res| = p q` with `p` prime.
fn record_split(rec: &mut Recorder, f: &IntPoly, g: &IntPoly, q: &BigInt) -> Result<bool> {
    let res = rec.ctx.resultant(f, g)?;
    rec.set_resultant(&res);
    let abs = res.abs();
    if !rec.compare_int("|Res| > 0", &abs, Rel::Gt, &BigInt::zero()) {
        return Ok(false);
    }
    if !rec.divides("q divides |Res|", q, &abs) {
        return Ok(false);
    }
    let p = &abs / q;
    rec.set_split(&p, q);
    Ok(rec.prime("p = |Res| / q", &p))
}

/// Outcome of one dominance test: strict, equality, or failed.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Dominance {
    Strict,
    Equal,
    Fails,
}

fn record_dominance(rec: &mut Recorder, label: &str, lhs: BigRat, rhs: BigRat) -> Dominance {
    if lhs > rhs {
        rec.compare_rat(label, lhs, Rel::Gt, rhs);
        Dominance::Strict
    } else if rec.compare_rat(label, lhs, Rel::Ge, rhs) {
        Dominance::Equal
    } else {
        Dominance::Fails
    }
}

/// Enumerates a route and returns the listed pairs, sorted by `(N, M)`.
fn enumerate(
    rec: &mut Recorder,
    pair: &Pair,
    route: ComboRoute,
    a: &BigRat,
    b: &BigRat,
    q: &BigInt,
) -> Result<Option<Vec<(BigInt, BigInt)>>> {
    let (n, m) = (pair.n, pair.m);
    let k = if route == ComboRoute::HigherDegreeM || route == ComboRoute::HigherDegreeN {
        m
    } else {
        n
    };
    let root_q = kth_root_bounds(&int_rat(q), k as u32)?;
    let qr = int_rat(q);

    if route == ComboRoute::Marden {
        let room = exact(b - a * rat(3));
        if !rec.compare("B - 3A >= 2 q^(1/n)", room, Rel::Ge, root_q.scale(&rat(2))) {
            return Ok(None);
        }
    } else if !rec.compare(
        format!("B - A >= q^(1/{k})"),
        exact(b - a),
        Rel::Ge,
        root_q.clone(),
    ) {
        return Ok(None);
    }

    let inner: BigRat = (0..n)
        .map(|i| &pair.fa[i] * pow_rat(a, i as i32 - n as i32))
        .sum();
    let da = record_dominance(rec, "|a_n| >= sum |a_i| A^(i-n)", pair.fa[n].clone(), inner);
    let outer: BigRat = (1..=m).map(|i| &pair.gb[i] * pow_rat(b, i as i32)).sum();
    let db = record_dominance(rec, "|b_0| >= sum |b_i| B^i", pair.gb[0].clone(), outer);
    if da == Dominance::Fails
        || db == Dominance::Fails
        || (da == Dominance::Equal && db == Dominance::Equal)
    {
        return Ok(None);
    }
    let strict = match route {
        ComboRoute::Marden => {
            if da != Dominance::Strict || db != Dominance::Strict {
                return Ok(None);
            }
            false
        }
        ComboRoute::LowerDegree | ComboRoute::EqualDegreeN | ComboRoute::HigherDegreeN => {
            da == Dominance::Equal
        }
        ComboRoute::EqualDegreeM | ComboRoute::HigherDegreeM => db == Dominance::Equal,
    };
    rec.fact(
        "pair inequality",
        if strict { "strict" } else { "non-strict" },
    );
    let inner_rel = if strict { Rel::Lt } else { Rel::Le };

    let outer_var = match route {
        ComboRoute::EqualDegreeM | ComboRoute::HigherDegreeM => Outer::M,
        _ => Outer::N,
    };

    let rows: BigInt = match route {
        ComboRoute::Marden => {
            let lim = DirectedBound::exact(b - a * rat(3)).scale(&BigRat::new(1.into(), 2.into()));
            let lim = DirectedBound {
                lo: &lim.lo / &root_q.hi,
                hi: &lim.hi / &root_q.lo,
            };
            let r = floor_below(&lim.lo, false).unwrap_or_default();
            rec.compare(
                "|N| max <= (B - 3A) / (2 q^(1/n))",
                DirectedBound::int(r.clone()),
                Rel::Le,
                lim,
            );
            r
        }
        ComboRoute::HigherDegreeN => {
            let cap = pow_rat(&(b - a), m as i32);
            let scale = &qr * int_rat(&pair.f.leading().abs().pow((n - m) as u32));
            let mut r = 0usize;
            while r < MAX_PAIRS && &scale * pow_rat(&rat(r as i64 + 1), n as i32) <= cap {
                r += 1;
            }
            if r == MAX_PAIRS {
                return Err(Error::BudgetExceeded);
            }
            let r = BigInt::from(r);
            rec.compare_rat(
                "q |a_n|^(n-m) |N|max^n <= (B - A)^m",
                &scale * pow_rat(&int_rat(&r), n as i32),
                Rel::Le,
                cap,
            );
            r
        }
        _ => {
            let lim = DirectedBound {
                lo: (b - a) / &root_q.hi,
                hi: (b - a) / &root_q.lo,
            };
            let r = floor_below(&lim.lo, false).unwrap_or_default();
            let name = if outer_var == Outer::M { "M" } else { "N" };
            rec.compare(
                format!("|{name}| max <= (B - A) / q^(1/{k})"),
                DirectedBound::int(r.clone()),
                Rel::Le,
                lim,
            );
            r
        }
    };
    let rows = small(&rows)?;

    let mut pairs = Vec::new();
    for r in 1..=rows {
        let rb = BigInt::from(r);
        let rr = rat(r as i64);
        let (bound, label) = match route {
            ComboRoute::Marden => {
                let an = pair.f.leading().abs();
                let bn = pair.g.leading().abs();
                let top: BigInt = (&rb * &bn - BigInt::one()).div_floor(&an);
                rec.compare_int(
                    format!("|N| = {r}: |M|max |a_n| < |N| |b_n|"),
                    &(&top * &an),
                    Rel::Lt,
                    &(&rb * &bn),
                );
                push_row(&mut pairs, pair, outer_var, &rb, &top)?;
                continue;
            }
            ComboRoute::LowerDegree | ComboRoute::EqualDegreeN | ComboRoute::HigherDegreeN => {
                let t = if route == ComboRoute::HigherDegreeN {
                    let lead = pair.f.leading().abs().pow((n - m) as u32);
                    let x = &qr * int_rat(&lead) * pow_rat(&rr, n as i32);
                    kth_root_bounds(&x, m as u32)?.add(&DirectedBound::exact(a.clone()))
                } else {
                    root_q.scale(&rr).add(&DirectedBound::exact(a.clone()))
                };
                let num = &pair.gb[0]
                    - (1..=m)
                        .map(|i| &pair.gb[i] * pow_rat(&t.hi, i as i32))
                        .sum::<BigRat>();
                let den: BigRat = (0..=n)
                    .map(|i| &pair.fa[i] * pow_rat(&t.hi, i as i32))
                    .sum();
                (
                    &rr * num / den,
                    format!("|N| = {r}: |M|max vs |N| (|b_0| - sum |b_i| t^i) / sum |a_i| t^i"),
                )
            }
            ComboRoute::EqualDegreeM | ComboRoute::HigherDegreeM => {
                let s_lo = b - &root_q.hi * &rr;
                if !s_lo.is_positive() {
                    rec.fact(format!("|M| = {r}: B - q^(1/{k}) |M|"), "not positive");
                    continue;
                }
                let num = &pair.fa[n]
                    - (0..n)
                        .map(|i| &pair.fa[i] * pow_rat(&s_lo, i as i32 - n as i32))
                        .sum::<BigRat>();
                let den: BigRat = (0..=m)
                    .map(|i| &pair.gb[i] * pow_rat(&s_lo, i as i32 - n as i32))
                    .sum();
                (
                    &rr * num / den,
                    format!(
                        "|M| = {r}: |N|max vs |M| (|a_n| - sum |a_i| s^(i-n)) / sum |b_i| s^(i-n)"
                    ),
                )
            }
        };
        let Some(top) = floor_below(&bound, strict) else {
            rec.fact(label, "empty row");
            continue;
        };
        rec.compare(
            label,
            DirectedBound::int(top.clone()),
            inner_rel,
            exact(bound),
        );
        push_row(&mut pairs, pair, outer_var, &rb, &top)?;
    }
    pairs.sort_by(|x, y| (&x.1, &x.0).cmp(&(&y.1, &y.0)));
    Ok(Some(pairs))
}

/// Adds all pairs with outer coordinate `+-r` and inner coordinate up to
/// `top` in absolute value. A zero coordinate is listed only next to `+-1`.
fn push_row(
    out: &mut Vec<(BigInt, BigInt)>,
    pair: &Pair,
    outer: Outer,
    r: &BigInt,
    top: &BigInt,
) -> Result<()> {
    let top = small(top)? as i64;
    for sign in [-1i64, 1] {
        let o = r * sign;
        for i in -top..=top {
            if i == 0 && !r.is_one() {
                continue;
            }
            let inner = BigInt::from(i);
            let (mm, nn) = match outer {
                Outer::M => (o.clone(), inner),
                Outer::N => (inner, o.clone()),
            };
            if !pair.side_conditions(&mm, &nn) {
                continue;
            }
            out.push((mm, nn));
            if out.len() > MAX_PAIRS {
                return Err(Error::BudgetExceeded);
            }
        }
    }
    Ok(())
}

fn finish_pairs(rec: &mut Recorder, pairs: Vec<(BigInt, BigInt)>) -> Verdict {
    let count = pairs.len() as u32;
    rec.set_pairs(
        pairs
            .into_iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect(),
    );
    Verdict::Combinations(count)
}

/// Lists the `(M, N)` for which `M f + N g` is certified irreducible by
/// `route`, given the annulus radii `A < B` and the cofactor `q`.
pub fn combos(
    ctx: &Ctx,
    f: &IntPoly,
    g: &IntPoly,
    route: ComboRoute,
    a: &BigRat,
    b: &BigRat,
    q: &BigInt,
) -> Result<Certificate> {
    let n = nonconstant(f, "f")?;
    let m = nonconstant(g, "g")?;
    if !route.degrees_fit(n, m) {
        return Err(Error::DegreeOrder);
    }
    if f.constant_term().is_zero() || g.constant_term().is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    if !a.is_positive() || !b.is_positive() {
        return Err(Error::Precondition("A and B must be positive".into()));
    }
    if !q.is_positive() {
        return Err(Error::Precondition("q must be positive".into()));
    }
    let pair = Pair::new(f, g);
    run_checker(
        ctx,
        route.id(),
        f.to_bracket(),
        Some(g.to_bracket()),
        |rec| {
            rec.param("A", a);
            rec.param("B", b);
            rec.param("q", q);
            require!(record_split(rec, f, g, q)?, "primality");
            let Some(pairs) = enumerate(rec, &pair, route, a, b, q)? else {
                return Ok(Verdict::Inconclusive("hypotheses".into()));
            };
            Ok(finish_pairs(rec, pairs))
        },
    )
}

/// Lists the `(M, N)` with `|N| < |M| <= |b| - 1` and `M a_0 - N b != 0`
/// for which `M f + N (X - b)` is irreducible, given a prime `|f(b)|` and
/// `|a_n| >= 1 + |b| + sum_(i<n) |a_i|`.
pub fn combos_linear_prime(ctx: &Ctx, f: &IntPoly, b: &BigInt) -> Result<Certificate> {
    let n = nonconstant(f, "f")?;
    if n < 2 {
        return Err(Error::DegreeOrder);
    }
    if f.constant_term().is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    if b.abs() < BigInt::from(2) {
        return Err(Error::Precondition("|b| must be at least 2".into()));
    }
    let g = IntPoly::new(vec![-b, BigInt::one()]);
    run_checker(
        ctx,
        "combos-linear-prime",
        f.to_bracket(),
        Some(g.to_bracket()),
        |rec| {
            rec.param("b", b);
            let value = f.eval(b);
            rec.set_resultant(&value);
            require!(rec.prime("|f(b)|", &value.abs()), "primality");
            let rest: BigInt = f.coeffs()[..n].iter().map(|c| c.abs()).sum();
            let need = BigInt::one() + b.abs() + rest;
            require!(
                rec.compare_int(
                    "|a_n| >= 1 + |b| + sum |a_i|",
                    &f.leading().abs(),
                    Rel::Ge,
                    &need
                ),
                "dominance"
            );
            let top = small(&(b.abs() - 1))? as i64;
            let pair = Pair::new(f, &g);
            let mut pairs = Vec::new();
            for mm in (-top..=top).filter(|&x| x != 0) {
                for nn in -(mm.abs() - 1)..=(mm.abs() - 1) {
                    if nn == 0 && mm.abs() != 1 {
                        continue;
                    }
                    let (mb, nb) = (BigInt::from(mm), BigInt::from(nn));
                    if pair.side_conditions(&mb, &nb) {
                        pairs.push((mb, nb));
                    }
                }
            }
            pairs.sort_by(|x, y| (&x.1, &x.0).cmp(&(&y.1, &y.0)));
            Ok(finish_pairs(rec, pairs))
        },
    )
}

pub(crate) fn replay(ctx: &Ctx, cert: &Certificate) -> Result<Certificate> {
    let f: IntPoly = cert.f.parse()?;
    if cert.criterion == "combos-linear-prime" {
        return combos_linear_prime(ctx, &f, &cert.param_int("b")?);
    }
    let route = ComboRoute::from_id(&cert.criterion)
        .ok_or_else(|| Error::UnknownCriterion(cert.criterion.clone()))?;
    let g: IntPoly = cert
        .g
        .as_deref()
        .ok_or_else(|| Error::Verification("certificate has no second polynomial".into()))?
        .parse()?;
    combos(
        ctx,
        &f,
        &g,
        route,
        &cert.param_rat("A")?,
        &cert.param_rat("B")?,
        &cert.param_int("q")?,
    )
}
