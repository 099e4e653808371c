//! Acceptance suite. Runs each acceptance criterion, prints one PASS/FAIL
//! line per criterion and exits nonzero when any fails.

use std::collections::{BTreeMap, HashMap};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use resprime::arith::{d_k_from, factorize, is_prime, FactorBudget};
use resprime::bivar::{y_minus, BivarPoly};
use resprime::cert::{Certificate, Ctx, Verdict};
use resprime::criteria::bivariate::{
    combination, degree_dominance, degree_gap_divisor, degree_gap_dk, degree_spike, delta_k,
    CombinationVariant, DominanceVariant,
};
use resprime::criteria::combos::{combos, combos_linear_prime, ComboRoute};
use resprime::criteria::univariate::{
    annulus_separation, form_value, linear_value, linear_value_corollary, quadratic_form,
    root_separation, root_separation_dk, value_lower_bound, value_lower_bound_dk, LinearVariant,
    QuadraticForm, SplitChoice, ValueMode,
};
use resprime::criteria::{certify_auto, replay, verify_text, Side};
use resprime::oracle::{factor_bivar_bruteforce, factor_over_q, OracleBudget};
use resprime::resultant::{
    resultant, resultant_bivar_y, resultant_quadratic_binet, resultant_quadratic_shift,
    resultant_sylvester,
};
use resprime::{BigRat, IntPoly, RatPoly};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(big(n), big(d))
}

fn p(c: &[i64]) -> IntPoly {
    IntPoly::from_i64(c)
}

/// Certificates emitted while running the suite, replayed by criterion 8.
#[derive(Default)]
struct Emitted {
    certs: Vec<Certificate>,
    per_id: HashMap<(String, bool), usize>,
}

impl Emitted {
    fn keep(&mut self, cert: &Certificate) {
        self.certs.push(cert.clone());
    }

    /// Keeps up to `cap` certificates per criterion id and outcome.
    fn sample(&mut self, cert: &Certificate, cap: usize) {
        let n = self
            .per_id
            .entry((cert.criterion.clone(), cert.is_success()))
            .or_default();
        if *n < cap {
            *n += 1;
            self.certs.push(cert.clone());
        }
    }
}

// ---------------------------------------------------------------------------
// Oracle helpers

#[derive(Default)]
struct Oracle {
    univariate: HashMap<String, u32>,
    bivariate: HashMap<String, u32>,
}

impl Oracle {
    fn count(&mut self, f: &IntPoly) -> u32 {
        let key = f.to_bracket();
        if let Some(c) = self.univariate.get(&key) {
            return *c;
        }
        let c = factor_over_q(&f.to_rat(), &OracleBudget::default())
            .expect("oracle factors")
            .count();
        self.univariate.insert(key, c);
        c
    }

    fn count_bivar(&mut self, f: &BivarPoly) -> u32 {
        let key = f.to_text();
        if let Some(c) = self.bivariate.get(&key) {
            return *c;
        }
        let c = factor_bivar_bruteforce(f, &OracleBudget::default())
            .expect("bivariate oracle factors")
            .count();
        self.bivariate.insert(key, c);
        c
    }

    /// Checks a univariate certificate's verdict against the oracle.
    fn confirm(&mut self, cert: &Certificate) -> Result<(), String> {
        let f: IntPoly = cert.f.parse().map_err(|e| format!("{e}"))?;
        let g: Option<IntPoly> = cert.g.as_deref().map(|g| g.parse().expect("g parses"));
        let fail = |what: &str| {
            format!(
                "{} claims {what} for f = {} g = {:?}",
                cert.criterion, cert.f, cert.g
            )
        };
        match &cert.verdict {
            Verdict::Irreducible => ensure(self.count(&f) == 1, || fail("f irreducible")),
            Verdict::FactorBound(k) => ensure(self.count(&f) <= *k, || {
                fail(&format!("at most {k} factors"))
            }),
            Verdict::BothIrreducible => {
                let g = g.ok_or_else(|| fail("second polynomial missing"))?;
                ensure(self.count(&f) == 1 && self.count(&g) == 1, || {
                    fail("both irreducible")
                })
            }
            Verdict::FactorBoundBoth(k) => {
                let g = g.ok_or_else(|| fail("second polynomial missing"))?;
                ensure(self.count(&f) <= *k && self.count(&g) <= *k, || {
                    fail(&format!("at most {k} factors each"))
                })
            }
            Verdict::Combinations(_) => {
                let g = g.ok_or_else(|| fail("second polynomial missing"))?;
                for (m, n) in cert.int_pairs().map_err(|e| e.to_string())? {
                    let h = combine(&f, &g, &m, &n);
                    ensure(self.count(&h) == 1, || {
                        fail(&format!("{m} f + {n} g irreducible"))
                    })?;
                }
                Ok(())
            }
            Verdict::Inconclusive(_) => Ok(()),
        }
    }

    fn confirm_bivar(&mut self, cert: &Certificate) -> Result<(), String> {
        let f: BivarPoly = cert.f.parse().map_err(|e| format!("{e}"))?;
        let g: BivarPoly = cert
            .g
            .as_deref()
            .expect("second polynomial")
            .parse()
            .map_err(|e| format!("{e}"))?;
        let fail = |what: &str| {
            format!(
                "{} claims {what} for f = {} g = {:?}",
                cert.criterion, cert.f, cert.g
            )
        };
        match &cert.verdict {
            Verdict::Irreducible => {
                let alpha = cert.param_rat("alpha").map_err(|e| e.to_string())?;
                let beta = cert.param_rat("beta").map_err(|e| e.to_string())?;
                let h = &f.scale(&alpha) + &g.scale(&beta);
                ensure(self.count_bivar(&h) == 1, || {
                    fail("combination irreducible")
                })
            }
            Verdict::BothIrreducible => ensure(
                self.count_bivar(&f) == 1 && self.count_bivar(&g) == 1,
                || fail("both irreducible"),
            ),
            Verdict::FactorBoundBoth(k) => ensure(
                self.count_bivar(&f) <= *k && self.count_bivar(&g) <= *k,
                || fail(&format!("at most {k} factors each")),
            ),
            Verdict::FactorBound(k) => ensure(self.count_bivar(&f) <= *k, || {
                fail(&format!("at most {k} factors"))
            }),
            Verdict::Combinations(_) => Err(fail("combinations")),
            Verdict::Inconclusive(_) => Ok(()),
        }
    }
}

fn combine(f: &IntPoly, g: &IntPoly, m: &BigInt, n: &BigInt) -> IntPoly {
    let len = f.coeffs().len().max(g.coeffs().len());
    IntPoly::new((0..len).map(|i| f.coeff(i) * m + g.coeff(i) * n).collect())
}

// ---------------------------------------------------------------------------
// Generators

fn random_poly(rng: &mut ChaCha8Rng, min_deg: usize, max_deg: usize, bound: i64) -> IntPoly {
    let d = rng.gen_range(min_deg..=max_deg);
    let mut c: Vec<i64> = (0..=d).map(|_| rng.gen_range(-bound..=bound)).collect();
    while c[d] == 0 {
        c[d] = rng.gen_range(-bound..=bound);
    }
    IntPoly::from_i64(&c)
}

fn nonzero(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    loop {
        let x = rng.gen_range(-bound..=bound);
        if x != 0 {
            return x;
        }
    }
}

fn random_rat_poly(rng: &mut ChaCha8Rng, max_deg: usize, bound: i64) -> RatPoly {
    let d = rng.gen_range(0..=max_deg);
    let c: Vec<i64> = (0..=d).map(|_| rng.gen_range(-bound..=bound)).collect();
    RatPoly::from_i64(&c)
}

fn random_bivar(rng: &mut ChaCha8Rng) -> BivarPoly {
    let deg_y = rng.gen_range(1..=3);
    let rows: Vec<RatPoly> = (0..=deg_y).map(|_| random_rat_poly(rng, 4, 3)).collect();
    BivarPoly::new(rows)
}

/// A row of exact degree `d`.
fn row_of_degree(rng: &mut ChaCha8Rng, d: usize, bound: i64) -> RatPoly {
    let mut c: Vec<i64> = (0..=d).map(|_| rng.gen_range(-bound..=bound)).collect();
    c[d] = nonzero(rng, bound);
    RatPoly::from_i64(&c)
}

/// Bivariate pair shaped so that the degree criteria have a chance to
/// apply: a dominant constant row in `f`, a dominant top row in `g`.
fn shaped_bivar_pair(rng: &mut ChaCha8Rng) -> (BivarPoly, BivarPoly) {
    let n = rng.gen_range(1..=3);
    let m = rng.gen_range(1..=3);
    let top_f = rng.gen_range(2..=4);
    let mut f_rows = vec![row_of_degree(rng, top_f, 3)];
    for _ in 1..=n {
        let d = rng.gen_range(0..top_f.min(2));
        f_rows.push(row_of_degree(rng, d, 2));
    }
    let top_g = rng.gen_range(1..=4);
    let mut g_rows = Vec::new();
    for _ in 0..m {
        let d = rng.gen_range(0..top_g.clamp(1, 2));
        g_rows.push(row_of_degree(rng, d, 2));
    }
    g_rows.push(row_of_degree(rng, top_g, 3));
    (BivarPoly::new(f_rows), BivarPoly::new(g_rows))
}

// ---------------------------------------------------------------------------
// 1. Worked examples

fn eisenstein_split(n: usize) -> BivarPoly {
    let mono = |c: i64, e: usize| {
        let mut v = vec![0; e + 1];
        v[e] = c;
        v
    };
    let add = |a: Vec<i64>, b: Vec<i64>| {
        let mut v = vec![0; a.len().max(b.len())];
        for (i, x) in a.iter().enumerate() {
            v[i] += x;
        }
        for (i, x) in b.iter().enumerate() {
            v[i] += x;
        }
        v
    };
    let rows = [
        add(mono(1, n), vec![2]),
        add(mono(1, n - 1), mono(-1, n - 2)),
        add(mono(1, n - 2), mono(-1, n - 3)),
        add(mono(1, n - 3), mono(-1, n - 1)),
        vec![3, 5],
    ];
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    BivarPoly::from_i64_rows(&refs)
}

fn worked_examples(out: &mut Emitted) -> Outcome {
    let start = Instant::now();
    let ctx = Ctx::default();

    let f1 = p(&[-1, 1, -2, 3, 9]);
    let g1 = p(&[35, 3, -1, -1, 1]);
    let res = resultant(&f1, &g1).unwrap().abs();
    ensure(res == big(9_794_181_403), || format!("ex1 |Res| = {res}"))?;
    ensure(is_prime(&res), || "ex1 primality".into())?;
    let c = annulus_separation(&ctx, &f1, &g1, &rat(1, 1), &rat(2, 1), &big(1)).unwrap();
    ensure(c.verdict == Verdict::BothIrreducible, || {
        "ex1 annulus criterion".into()
    })?;
    out.keep(&c);
    let auto = certify_auto(&ctx, &f1, &g1);
    ensure(
        auto.iter()
            .any(|c| c.criterion == "annulus-separation" && c.is_success()),
        || "ex1 auto".into(),
    )?;

    let f2 = p(&[15, -3, -2, -1, 1, 1]);
    let v2 = f2.eval_homogeneous(&big(2), &big(11)).unwrap();
    ensure(v2 == big(2_316_511) && is_prime(&v2), || {
        format!("ex2 value {v2}")
    })?;
    let c = linear_value(&ctx, &f2, &big(11), &big(2), 0).unwrap();
    ensure(c.verdict == Verdict::Irreducible, || {
        "ex2 certificate".into()
    })?;
    out.keep(&c);

    let f3 = p(&[1, -1, 1, 1, -1, -1, 1]);
    let v3 = f3.eval_homogeneous(&big(15), &big(4)).unwrap();
    ensure(v3 == big(7_805_461) && is_prime(&v3), || {
        format!("ex3 value {v3}")
    })?;
    let c =
        linear_value_corollary(&ctx, &f3, &big(4), &big(15), LinearVariant::Littlewood).unwrap();
    ensure(c.verdict == Verdict::Irreducible, || {
        "ex3 certificate".into()
    })?;
    out.keep(&c);

    for coeffs in [
        [92, 1, -3, 3, -1, 1],
        [93, 2, -2, 2, -1, 1],
        [-100, 1, -5, 1, 1, 1],
        [-104, -1, -9, 1, 1, 1],
    ] {
        let f = p(&coeffs);
        let v = form_value(&f, &QuadraticForm::Gauss);
        let r = resultant(&f, &p(&[1, 0, 1])).unwrap().abs();
        ensure(v == big(8837) && r == v && is_prime(&v), || {
            format!("ex4 {coeffs:?}: {v}")
        })?;
        let c =
            quadratic_form(&ctx, &f, &QuadraticForm::Gauss, &SplitChoice::Given(big(1))).unwrap();
        ensure(c.verdict == Verdict::Irreducible, || {
            format!("ex4 {coeffs:?} certificate")
        })?;
        out.keep(&c);
    }

    let f5 = p(&[361, 8, 1, -1, 1, -1, 1]);
    let v5 = resultant_quadratic_shift(&f5, &big(1), &big(0), &big(-2))
        .unwrap()
        .abs();
    ensure(v5 == big(140_617) && is_prime(&v5), || {
        format!("ex5 value {v5}")
    })?;
    let c = quadratic_form(
        &ctx,
        &f5,
        &QuadraticForm::Sqrt(big(2)),
        &SplitChoice::Given(big(1)),
    )
    .unwrap();
    ensure(c.verdict == Verdict::Irreducible, || {
        "ex5 certificate".into()
    })?;
    out.keep(&c);

    let f6 = p(&[-1, 1, -1, 1, -1, 1, 1]);
    let v6 = resultant_quadratic_binet(&f6, &big(1), &big(0), &big(-13))
        .unwrap()
        .abs();
    ensure(v6 == big(3_620_839) && is_prime(&v6), || {
        format!("ex6 value {v6}")
    })?;
    let c = quadratic_form(
        &ctx,
        &f6,
        &QuadraticForm::Sqrt(big(13)),
        &SplitChoice::Given(big(1)),
    )
    .unwrap();
    ensure(c.verdict == Verdict::Irreducible, || {
        "ex6 certificate".into()
    })?;
    out.keep(&c);

    let first = (31i64..).find(|a| is_prime(&big(a * a - a + 1))).unwrap();
    ensure(first == 34, || {
        format!("ex7 smallest a above 30 is {first}")
    })?;
    let f7 = p(&[34, 1, 1, 1, 1]);
    let c = quadratic_form(
        &ctx,
        &f7,
        &QuadraticForm::Eisenstein,
        &SplitChoice::Given(big(1)),
    )
    .unwrap();
    ensure(c.verdict == Verdict::Irreducible, || {
        "ex7 certificate".into()
    })?;
    out.keep(&c);

    for n in 3..=6 {
        let f = eisenstein_split(n);
        let mut expected = vec![0i64; n + 1];
        expected[0] = 5;
        expected[1] = 5;
        expected[n] = 1;
        ensure(
            resultant_bivar_y(&f, &y_minus(1))
                .unwrap()
                .scale(&rat(-1, 1))
                .coeffs()
                .len()
                == n + 1,
            || format!("ex8 n = {n} resultant degree"),
        )?;
        let specialized = f.eval_y(&rat(1, 1));
        ensure(specialized == RatPoly::from_i64(&expected), || {
            format!("ex8 n = {n} specialization")
        })?;
        let c = degree_dominance(&ctx, &f, &y_minus(1), DominanceVariant::GtGeq).unwrap();
        ensure(c.verdict == Verdict::BothIrreducible, || {
            format!("ex8 n = {n} certificate")
        })?;
        out.keep(&c);
    }
    Ok(format!(
        "ex1-ex8 reproduced, 14 certificates, {:.2?}",
        start.elapsed()
    ))
}

// ---------------------------------------------------------------------------
// 2. Counterexample

fn counterexample(out: &mut Emitted, oracle: &mut Oracle) -> Outcome {
    let start = Instant::now();
    let ctx = Ctx::default();
    let f = p(&[15, -8, 1]);
    let g = p(&[24, -10, 1]);
    let res = resultant(&f, &g).unwrap().abs();
    ensure(res == big(3) && is_prime(&res), || format!("|Res| = {res}"))?;
    let roots_f = [3i64, 5];
    let roots_g = [4i64, 6];
    let min = roots_f
        .iter()
        .flat_map(|a| roots_g.iter().map(move |b| (a - b).abs()))
        .min()
        .unwrap();
    ensure(
        min == 1 && roots_f.iter().all(|r| f.eval(&big(*r)).is_zero()),
        || "root distance".into(),
    )?;
    let mut total = 0;
    for (a, b) in [
        (f.clone(), g.clone()),
        (f.reciprocal().unwrap(), g.reciprocal().unwrap()),
    ] {
        let certs = certify_auto(&ctx, &a, &b);
        total += certs.len();
        ensure(certs.iter().all(|c| !c.is_success()), || {
            format!("certificate emitted for {a}, {b}")
        })?;
        for c in &certs {
            out.sample(c, 2);
        }
        ensure(oracle.count(&a) == 2 && oracle.count(&b) == 2, || {
            "oracle factors".into()
        })?;
    }
    Ok(format!(
        "|Res| = 3, min distance 1, 0 of {total} certificates succeed on both pairs, {:.2?}",
        start.elapsed()
    ))
}

// ---------------------------------------------------------------------------
// 3. Soundness fuzz

fn soundness_fuzz(out: &mut Emitted, oracle: &mut Oracle) -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut successes: BTreeMap<String, usize> = BTreeMap::new();
    let mut checked = 0usize;
    for _ in 0..10_000 {
        let f = random_poly(&mut rng, 1, 4, 9);
        let g = random_poly(&mut rng, 1, 4, 9);
        let ctx = Ctx::default();
        for cert in certify_auto(&ctx, &f, &g) {
            if cert.is_success() {
                oracle.confirm(&cert)?;
                *successes.entry(cert.criterion.clone()).or_default() += 1;
                checked += 1;
            }
            out.sample(&cert, 30);
        }
    }
    let uni_time = start.elapsed();

    let mut biv_checked = 0usize;
    let mut biv_ids: BTreeMap<String, usize> = BTreeMap::new();
    let scalars = [(1, 1), (1, -1), (2, 1), (-1, 3)];
    for i in 0..1_000 {
        let (f, g) = if i % 2 == 0 {
            shaped_bivar_pair(&mut rng)
        } else {
            (random_bivar(&mut rng), random_bivar(&mut rng))
        };
        let ctx = Ctx::default();
        let mut certs = Vec::new();
        for v in [DominanceVariant::GtGeq, DominanceVariant::GeqGt] {
            certs.push(degree_dominance(&ctx, &f, &g, v));
        }
        for side in [Side::Direct, Side::Reciprocal] {
            for k in 1..=2 {
                certs.push(degree_gap_dk(&ctx, &f, &g, k, side));
            }
            certs.push(degree_gap_divisor(
                &ctx,
                &f,
                &g,
                &RatPoly::from_i64(&[1]),
                side,
            ));
        }
        for j in 0..=g.deg_y() {
            certs.push(degree_spike(&ctx, &f, &g, j));
        }
        for (a, b) in scalars {
            let (a, b) = (rat(a, 1), rat(b, 1));
            certs.push(combination(
                &ctx,
                &f,
                &g,
                CombinationVariant::Dominance,
                &a,
                &b,
            ));
            for j in 1..f.deg_y().max(1) {
                certs.push(combination(
                    &ctx,
                    &f,
                    &g,
                    CombinationVariant::SharedConstant(j),
                    &a,
                    &b,
                ));
            }
        }
        for cert in certs.into_iter().flatten() {
            if cert.is_success() {
                oracle.confirm_bivar(&cert)?;
                *biv_ids.entry(cert.criterion.clone()).or_default() += 1;
                biv_checked += 1;
            }
            out.sample(&cert, 30);
        }
    }
    ensure(checked > 0 && biv_checked > 0, || {
        "fuzz produced no certificates to check".into()
    })?;
    Ok(format!(
        "10000 univariate pairs: {checked} certificates confirmed over {} criteria ({uni_time:.0?}); 1000 bivariate pairs: {biv_checked} confirmed {biv_ids:?}; total {:.0?}",
        successes.len(),
        start.elapsed()
    ))
}

// ---------------------------------------------------------------------------
// 4. Resultant agreement

fn resultant_agreement() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut degenerate = 0;
    for i in 0..1_000 {
        let f = random_poly(&mut rng, 0, 8, 20);
        let (a, b, c) = if i % 10 == 0 {
            degenerate += 1;
            let u = nonzero(&mut rng, 5);
            let v = rng.gen_range(-5..=5);
            (u * u, 2 * u * v, v * v)
        } else {
            (
                nonzero(&mut rng, 20),
                rng.gen_range(-20..=20),
                rng.gen_range(-20..=20),
            )
        };
        let g = p(&[c, b, a]);
        let prs = resultant(&f, &g).unwrap().abs();
        let syl = resultant_sylvester(&f, &g).unwrap().abs();
        let shift = resultant_quadratic_shift(&f, &big(a), &big(b), &big(c))
            .unwrap()
            .abs();
        let binet = resultant_quadratic_binet(&f, &big(a), &big(b), &big(c))
            .unwrap()
            .abs();
        ensure(prs == syl && syl == shift && shift == binet, || {
            format!("f = {f}, g = {g}: {prs} {syl} {shift} {binet}")
        })?;
    }
    Ok(format!(
        "1000 instances agree across four methods ({degenerate} with b^2 = 4ac)"
    ))
}

// ---------------------------------------------------------------------------
// 5. Equivalence of the q-split and d_1 forms

fn shifted(h: &IntPoly, t: i64) -> IntPoly {
    let x_minus_t = p(&[-t, 1]);
    let mut acc = IntPoly::zero();
    for c in h.coeffs().iter().rev() {
        acc = &(&acc * &x_minus_t) + &IntPoly::constant(c.clone());
    }
    acc
}

fn prime_splits(n: &BigInt) -> Option<(BigInt, Vec<BigInt>)> {
    let fac = factorize(n, FactorBudget::default());
    let d1 = d_k_from(&fac, n, 1)?;
    let qs = fac.factors.iter().map(|(p, _)| n / p).collect();
    Some((d1, qs))
}

fn equivalence(out: &mut Emitted) -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(5);

    let mut separation = 0;
    for _ in 0..20_000 {
        if separation >= 200 {
            break;
        }
        let f = random_poly(&mut rng, 1, 4, 9);
        let h = random_poly(&mut rng, 1, 4, 9);
        if f.deg().max(h.deg()) < 3 {
            continue;
        }
        let t = rng.gen_range(15..=40) * if rng.gen_bool(0.5) { 1 } else { -1 };
        let g = shifted(&h, t);
        if f.constant_term().is_zero() || g.constant_term().is_zero() {
            continue;
        }
        let res = resultant(&f, &g).unwrap().abs();
        if res.is_zero() {
            continue;
        }
        let Some((d1, qs)) = prime_splits(&res) else {
            continue;
        };
        let ctx = Ctx::default();
        let with_d1 = root_separation_dk(&ctx, &f, &g, 1, Side::Direct).unwrap();
        let mut fired = with_d1.is_success();
        for q in &qs {
            let c = root_separation(&ctx, &f, &g, q, Side::Direct).unwrap();
            if c.is_success() {
                fired = true;
                ensure(*q == d1, || {
                    format!("split q = {q} fires but d_1 = {d1} (f = {f}, g = {g})")
                })?;
                ensure(with_d1.is_success(), || {
                    format!("q-split fires, d_1 form does not (f = {f}, g = {g})")
                })?;
                out.sample(&c, 20);
            }
        }
        if with_d1.is_success() {
            let c = root_separation(&ctx, &f, &g, &d1, Side::Direct).unwrap();
            ensure(c.is_success(), || {
                format!("d_1 form fires, q = d_1 split does not (f = {f}, g = {g})")
            })?;
            out.sample(&with_d1, 20);
        }
        if fired {
            separation += 1;
        }
    }
    ensure(separation >= 200, || {
        format!("only {separation} root-separation instances found")
    })?;

    let mut value_counts = [0usize; 2];
    for (slot, r, deg, want) in [(0usize, 1u32, 3..=4usize, 200usize), (1, 2, 6..=6, 200)] {
        for _ in 0..200_000 {
            if value_counts[slot] >= want {
                break;
            }
            let f = random_poly(&mut rng, *deg.start(), *deg.end(), 9);
            let mut g = random_poly(&mut rng, 1, 3, 5);
            let shift = rng.gen_range(20..=400) * if rng.gen_bool(0.5) { 1 } else { -1 };
            g = &g + &IntPoly::constant(big(shift));
            if f.constant_term().is_zero() || g.constant_term().is_zero() {
                continue;
            }
            let res = resultant(&f, &g).unwrap().abs();
            if res.is_zero() {
                continue;
            }
            let Some((d1, qs)) = prime_splits(&res) else {
                continue;
            };
            let ctx = Ctx::default();
            let mut fired = false;
            for mode in [ValueMode::Value, ValueMode::Scaled] {
                let with_d1 = value_lower_bound_dk(&ctx, &f, &g, 1, r, mode).unwrap();
                for q in &qs {
                    let c = value_lower_bound(&ctx, &f, &g, q, r, mode).unwrap();
                    if c.verdict == Verdict::Irreducible {
                        fired = true;
                        ensure(*q == d1, || {
                            format!("r = {r}: q = {q} fires but d_1 = {d1} (f = {f}, g = {g})")
                        })?;
                        ensure(with_d1.is_success(), || {
                            format!("r = {r}: d_1 form fails (f = {f}, g = {g})")
                        })?;
                        out.sample(&c, 20);
                    }
                }
                if with_d1.is_success() {
                    fired = true;
                    let c = value_lower_bound(&ctx, &f, &g, &d1, r, mode).unwrap();
                    ensure(c.verdict == Verdict::Irreducible, || {
                        format!("r = {r}: |Res|/d_1 split fails (f = {f}, g = {g})")
                    })?;
                    out.sample(&with_d1, 20);
                }
            }
            if fired {
                value_counts[slot] += 1;
            }
        }
        ensure(value_counts[slot] >= want, || {
            format!("only {} instances for r = {r}", value_counts[slot])
        })?;
    }
    Ok(format!(
        "root separation: {separation} instances (max deg >= 3); value bound r = 1: {} instances (n >= 3); r = 2: {} instances (n = 6); {:.1?}",
        value_counts[0],
        value_counts[1],
        start.elapsed()
    ))
}

// ---------------------------------------------------------------------------
// 6. Linear combinations

fn check_combos(cert: &Certificate, oracle: &mut Oracle) -> Result<usize, String> {
    oracle.confirm(cert)?;
    let pairs = cert.int_pairs().map_err(|e| e.to_string())?;
    for (m, n) in &pairs {
        ensure(pairs.contains(&(-m, -n)), || {
            format!("{}: ({m}, {n}) listed without its negative", cert.criterion)
        })?;
    }
    Ok(pairs.len())
}

fn linear_combinations(out: &mut Emitted, oracle: &mut Oracle) -> Outcome {
    let start = Instant::now();
    let ctx = Ctx::default();
    let mut listed = 0;
    let frozen = [
        combos(
            &ctx,
            &p(&[-1, 1]),
            &p(&[17, 1, 1]),
            ComboRoute::LowerDegree,
            &rat(1, 1),
            &rat(3, 1),
            &big(1),
        ),
        combos(
            &ctx,
            &p(&[1, -1, 1]),
            &p(&[102, 0, 1]),
            ComboRoute::Marden,
            &rat(2, 1),
            &rat(10, 1),
            &big(1),
        ),
        combos_linear_prime(&ctx, &p(&[1, 1, 0, 7]), &big(3)),
    ];
    for cert in frozen {
        let cert = cert.map_err(|e| e.to_string())?;
        ensure(cert.is_success() && !cert.pairs.is_empty(), || {
            format!("frozen {} failed", cert.criterion)
        })?;
        listed += check_combos(&cert, oracle)?;
        out.keep(&cert);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let grid = [
        rat(1, 2),
        rat(1, 1),
        rat(3, 2),
        rat(2, 1),
        rat(3, 1),
        rat(4, 1),
        rat(6, 1),
        rat(10, 1),
    ];
    let mut productive = 0;
    let mut by_route: BTreeMap<String, usize> = BTreeMap::new();
    for trial in 0..1_000 {
        let n = rng.gen_range(1..=4);
        let m = rng.gen_range(1..=4);
        let mut fc: Vec<i64> = (0..=n).map(|_| rng.gen_range(-2..=2)).collect();
        fc[n] = nonzero(&mut rng, 20);
        if fc[0] == 0 {
            fc[0] = 1;
        }
        let mut gc: Vec<i64> = (0..=m).map(|_| rng.gen_range(-2..=2)).collect();
        gc[0] = nonzero(&mut rng, 300);
        if gc[m] == 0 {
            gc[m] = 1;
        }
        let (f, g) = (p(&fc), p(&gc));
        let ctx = Ctx::default();
        let before = listed;
        if trial % 10 == 0 {
            let b = rng.gen_range(-12..=12);
            if b != 0 {
                if let Ok(cert) = combos_linear_prime(&ctx, &f, &big(b)) {
                    listed += check_combos(&cert, oracle)?;
                    *by_route.entry(cert.criterion.clone()).or_default() += cert.pairs.len();
                    out.sample(&cert, 20);
                }
            }
        }
        let ia = rng.gen_range(0..grid.len() - 1);
        let ib = rng.gen_range(ia + 1..grid.len());
        let res = resultant(&f, &g).unwrap().abs();
        let mut qs = vec![big(1)];
        if !res.is_zero() {
            if let Some(d1) = d_k_from(&factorize(&res, FactorBudget::default()), &res, 1) {
                qs.push(d1);
            }
        }
        for route in ComboRoute::for_degrees(n, m) {
            for q in &qs {
                if let Ok(cert) = combos(&ctx, &f, &g, *route, &grid[ia], &grid[ib], q) {
                    listed += check_combos(&cert, oracle)?;
                    *by_route.entry(cert.criterion.clone()).or_default() += cert.pairs.len();
                    out.sample(&cert, 20);
                }
            }
        }
        if listed > before {
            productive += 1;
        }
    }
    ensure(productive > 0, || "random trials listed no pairs".into())?;
    Ok(format!(
        "3 frozen instances + 1000 trials ({productive} productive): {listed} pairs oracle-irreducible and symmetric; per route {by_route:?}; {:.1?}",
        start.elapsed()
    ))
}

// ---------------------------------------------------------------------------
// 7. d_k and delta_k

fn dk_brute_force() -> Outcome {
    const N: usize = 100_000;
    let mut divisors: Vec<Vec<u32>> = vec![Vec::new(); N + 1];
    for d in 1..=N {
        for m in (d..=N).step_by(d) {
            divisors[m].push(d as u32);
        }
    }
    for (n, divs) in divisors.iter().enumerate().skip(1) {
        let fac = factorize(&BigInt::from(n), FactorBudget::default());
        let mut last = u64::MAX;
        for k in 1..=20u32 {
            let brute = divs
                .iter()
                .map(|&d| d as u64)
                .filter(|d| d.checked_pow(k + 1).is_some_and(|x| x <= n as u64))
                .max()
                .unwrap();
            let fast = d_k_from(&fac, &BigInt::from(n), k).ok_or("incomplete factorization")?;
            ensure(fast == BigInt::from(brute), || {
                format!("d_{k}({n}) = {fast}, brute force {brute}")
            })?;
            ensure(brute <= last, || format!("d_k({n}) increases at k = {k}"))?;
            last = brute;
        }
        ensure(last == 1, || format!("d_20({n}) = {last}"))?;
    }
    Ok("all n <= 100000, k <= 20".into())
}

fn delta_brute(degrees: &[usize], k: u32) -> usize {
    let total: usize = degrees.iter().sum();
    let mut best = 0;
    for mask in 0u32..(1 << degrees.len()) {
        let s: usize = degrees
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, d)| d)
            .sum();
        if s * (k as usize + 1) <= total {
            best = best.max(s);
        }
    }
    best
}

fn delta_k_brute_force() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut instances = 0;
    let mut split = 0;
    while instances < 100 {
        let (f, g) = if instances % 2 == 0 {
            let u = random_rat_poly(&mut rng, 2, 3);
            let f = BivarPoly::new(vec![u.scale(&rat(-1, 1)), RatPoly::one()]);
            let g1 = BivarPoly::new(vec![
                random_rat_poly(&mut rng, 2, 3),
                row_of_degree(&mut rng, 0, 3),
            ]);
            let g2 = BivarPoly::new(vec![
                random_rat_poly(&mut rng, 3, 3),
                row_of_degree(&mut rng, 1, 3),
            ]);
            (f, &g1 * &g2)
        } else {
            (random_bivar(&mut rng), random_bivar(&mut rng))
        };
        let res = resultant_bivar_y(&f, &g).map_err(|e| e.to_string())?;
        if res.is_zero() || res.deg() == 0 {
            continue;
        }
        let fac = factor_over_q(&res, &OracleBudget::default()).map_err(|e| e.to_string())?;
        let degrees = fac.degrees();
        if degrees.len() > 16 {
            continue;
        }
        instances += 1;
        if degrees.len() > 1 {
            split += 1;
        }
        let ctx = Ctx::default();
        for k in 1..=4 {
            let fast = delta_k(&ctx, &f, &g, k).map_err(|e| e.to_string())?;
            let slow = delta_brute(&degrees, k);
            ensure(fast == Some(slow), || {
                format!("delta_{k}: {fast:?} vs {slow} for degrees {degrees:?}")
            })?;
        }
    }
    Ok(format!(
        "{instances} Res_Y instances ({split} reducible), k = 1..4"
    ))
}

fn dk_and_delta() -> Outcome {
    let start = Instant::now();
    let a = dk_brute_force()?;
    let b = delta_k_brute_force()?;
    Ok(format!("d_k: {a}; delta_k: {b}; {:.1?}", start.elapsed()))
}

// ---------------------------------------------------------------------------
// 8. Replay and mutation

fn mutate_digit(s: &str, index: usize) -> String {
    let mut chars: Vec<char> = s.chars().collect();
    let d = chars[index].to_digit(10).expect("digit");
    chars[index] = char::from_digit((d + 1) % 10, 10).unwrap();
    chars.into_iter().collect()
}

/// Mutates each digit of every string or number outside the enclosure data
/// and budget record, recomputes the digest and replays. A mutated
/// certificate that still replays must make a claim the oracle confirms.
/// Returns the number of mutations tried and how many of them replayed.
fn semantic_mutations(cert: &Certificate, oracle: &mut Oracle) -> Result<(usize, usize), String> {
    let value = serde_json::to_value(cert).unwrap();
    let mut pointers = Vec::new();
    collect_numeric(&value, String::new(), &mut pointers);
    let mut tried = 0;
    let mut genuine = 0;
    for pointer in pointers {
        let original = value.pointer(&pointer).unwrap();
        let text = match original {
            serde_json::Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        for (i, _) in text.char_indices().filter(|(_, c)| c.is_ascii_digit()) {
            let mutated = mutate_digit(&text, i);
            let replacement = match original {
                serde_json::Value::String(_) => serde_json::Value::String(mutated.clone()),
                _ => match serde_json::from_str(&mutated) {
                    Ok(v) => v,
                    Err(_) => continue,
                },
            };
            let mut v = value.clone();
            *v.pointer_mut(&pointer).unwrap() = replacement;
            let Ok(mut changed) = serde_json::from_value::<Certificate>(v) else {
                continue;
            };
            changed.digest = changed.compute_digest();
            tried += 1;
            if replay(&changed).is_ok() {
                genuine += 1;
                let checked = if changed.f.starts_with("[[") {
                    oracle.confirm_bivar(&changed)
                } else {
                    oracle.confirm(&changed)
                };
                checked.map_err(|e| format!("mutation at {pointer} ({text} -> {mutated}) replays with a false claim: {e}"))?;
            }
        }
    }
    Ok((tried, genuine))
}

fn collect_numeric(v: &serde_json::Value, pointer: String, out: &mut Vec<String>) {
    match v {
        serde_json::Value::Object(map) => {
            for (k, child) in map {
                if pointer.is_empty() && (k == "enclosures" || k == "budget" || k == "digest") {
                    continue;
                }
                let key = k.replace('~', "~0").replace('/', "~1");
                collect_numeric(child, format!("{pointer}/{key}"), out);
            }
        }
        serde_json::Value::Array(items) => {
            for (i, child) in items.iter().enumerate() {
                collect_numeric(child, format!("{pointer}/{i}"), out);
            }
        }
        serde_json::Value::String(s) if s.chars().any(|c| c.is_ascii_digit()) => out.push(pointer),
        serde_json::Value::Number(_) => out.push(pointer),
        _ => {}
    }
}

fn replay_and_mutation(out: &Emitted, oracle: &mut Oracle) -> Outcome {
    let start = Instant::now();
    for cert in &out.certs {
        verify_text(&cert.to_json())
            .map_err(|e| format!("{} does not replay: {e}", cert.criterion))?;
    }

    let dir = std::env::temp_dir().join(format!("resprime-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let file = dir.join("certificates.json");
    std::fs::write(&file, serde_json::to_string_pretty(&out.certs).unwrap())
        .map_err(|e| e.to_string())?;
    let run = Command::new(env!("CARGO_BIN_EXE_resprime"))
        .arg("verify")
        .arg(&file)
        .output()
        .map_err(|e| e.to_string())?;
    let oks = String::from_utf8_lossy(&run.stdout)
        .lines()
        .filter(|l| l.starts_with("ok "))
        .count();
    ensure(run.status.success() && oks == out.certs.len(), || {
        format!(
            "cli verify: {oks} of {} ok, status {:?}",
            out.certs.len(),
            run.status
        )
    })?;
    std::fs::remove_dir_all(&dir).ok();

    let mut seen = HashMap::new();
    let mut textual = 0usize;
    let mut semantic = 0usize;
    let mut genuine = 0usize;
    let mut sampled = 0usize;
    for cert in &out.certs {
        let n = seen
            .entry((cert.criterion.clone(), cert.is_success()))
            .or_insert(0usize);
        if *n >= 2 {
            continue;
        }
        *n += 1;
        sampled += 1;
        let text = cert.to_json();
        for (i, _) in text.char_indices().filter(|(_, c)| c.is_ascii_digit()) {
            textual += 1;
            let mutated = mutate_digit(&text, i);
            ensure(verify_text(&mutated).is_err(), || {
                format!("{}: text mutation at byte {i} accepted", cert.criterion)
            })?;
        }
        let (tried, replayed) = semantic_mutations(cert, oracle)?;
        semantic += tried;
        genuine += replayed;
    }
    ensure(genuine < semantic, || {
        "no re-digested mutation was rejected".into()
    })?;
    Ok(format!(
        "{} certificates replay (library and cli verify); across {sampled} sampled certificates {textual} single-digit text mutations rejected, {} of {semantic} re-digested field mutations rejected and the other {genuine} replay as oracle-confirmed certificates for the changed input; {:.1?}",
        out.certs.len(),
        semantic - genuine,
        start.elapsed()
    ))
}

// ---------------------------------------------------------------------------

fn run(name: &str, f: impl FnOnce() -> Outcome) -> bool {
    let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into());
        Err(format!("panicked: {msg}"))
    });
    match result {
        Ok(detail) => {
            println!("PASS  {name}: {detail}");
            true
        }
        Err(detail) => {
            println!("FAIL  {name}: {detail}");
            false
        }
    }
}

fn main() -> ExitCode {
    let mut emitted = Emitted::default();
    let mut oracle = Oracle::default();
    let results = [
        run("1 example regression", || worked_examples(&mut emitted)),
        run("2 counterexample discrimination", || {
            counterexample(&mut emitted, &mut oracle)
        }),
        run("3 soundness fuzz", || {
            soundness_fuzz(&mut emitted, &mut oracle)
        }),
        run("4 resultant agreement", resultant_agreement),
        run("5 split equivalence", || equivalence(&mut emitted)),
        run("6 linear-combination soundness", || {
            linear_combinations(&mut emitted, &mut oracle)
        }),
        run("7 d_k and delta_k brute force", dk_and_delta),
        run("8 certificate replay and mutation", || {
            replay_and_mutation(&emitted, &mut oracle)
        }),
    ];
    let passed = results.iter().filter(|r| **r).count();
    println!("acceptance: {passed}/{} criteria pass", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
