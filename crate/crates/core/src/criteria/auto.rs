//! Runs every applicable univariate criterion over a small fixed parameter
//! grid.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::univariate::{self as u, LinearVariant, QuadraticForm, SplitChoice, ValueMode};
use super::Side;
use crate::arith::d_k_from;
use crate::cert::{Certificate, Ctx};
use crate::error::Result;
use crate::poly::{BigRat, IntPoly};

const SIDES: [Side; 2] = [Side::Direct, Side::Reciprocal];
const MODES: [ValueMode; 2] = [ValueMode::Value, ValueMode::Scaled];

fn radius_grid() -> Vec<BigRat> {
    [(1, 2), (1, 1), (3, 2), (2, 1), (3, 1)]
        .iter()
        .map(|&(n, d)| BigRat::new(BigInt::from(n), BigInt::from(d)))
        .collect()
}

/// Keeps, for each key, the first successful certificate or else the first
/// inconclusive one.
#[derive(Default)]
struct Best {
    slots: BTreeMap<String, Certificate>,
}

impl Best {
    fn offer(&mut self, key: String, result: Result<Certificate>) {
        let Ok(cert) = result else { return };
        match self.slots.get(&key) {
            Some(old) if old.is_success() || !cert.is_success() => {}
            _ => {
                self.slots.insert(key, cert);
            }
        }
    }

    fn has_success(&self, key: &str) -> bool {
        self.slots.get(key).is_some_and(|c| c.is_success())
    }
}

fn split_values(ctx: &Ctx, f: &IntPoly, g: &IntPoly) -> Vec<BigInt> {
    let mut qs = vec![BigInt::one()];
    if let Ok(res) = ctx.resultant(f, g) {
        let abs = res.abs();
        if !abs.is_zero() {
            if let Some(d1) = d_k_from(&ctx.factorize(&abs), &abs, 1) {
                if !d1.is_one() {
                    qs.push(d1);
                }
            }
        }
    }
    qs
}

fn pair_criteria(ctx: &Ctx, f: &IntPoly, g: &IntPoly, role: &str, best: &mut Best) {
    let (Some(n), Some(_)) = (f.degree(), g.degree()) else {
        return;
    };
    let qs = split_values(ctx, f, g);
    let grid = radius_grid();

    for side in SIDES {
        for q in &qs {
            let key = format!("root-separation/{}/q={q}", side.name());
            best.offer(key, u::root_separation(ctx, f, g, q, side));
        }
        best.offer(
            format!("root-separation-dk/{}", side.name()),
            u::root_separation_dk(ctx, f, g, 1, side),
        );
        best.offer(
            format!("root-separation-divisor/{}", side.name()),
            u::root_separation_divisor(ctx, f, g, &BigInt::one(), side),
        );
        best.offer(
            format!("close-roots-pair/{}/{role}", side.name()),
            u::close_roots_pair(ctx, f, g, 1, side),
        );
    }

    for q in &qs {
        let key = format!("annulus-separation/{role}/q={q}");
        for a in &grid {
            for b in grid.iter().filter(|b| *b > a) {
                if best.has_success(&key) {
                    break;
                }
                best.offer(key.clone(), u::annulus_separation(ctx, f, g, a, b, q));
            }
        }
        for j in 1..n {
            best.offer(
                format!("dominant-coefficient/{role}/j={j}/q={q}"),
                u::dominant_coefficient(ctx, f, g, j, q),
            );
        }
    }

    for mode in MODES {
        for r in 1..=2u32 {
            if (r as usize) < n {
                best.offer(
                    format!("value-lower-bound/{role}/{}/r={r}", mode.name()),
                    u::value_lower_bound(ctx, f, g, &BigInt::one(), r, mode),
                );
            }
            best.offer(
                format!("value-lower-bound-dk/{role}/{}/r={r}", mode.name()),
                u::value_lower_bound_dk(ctx, f, g, 1, r, mode),
            );
        }
        best.offer(
            format!("close-values-dk/{role}/{}", mode.name()),
            u::close_values_dk(ctx, f, g, 1, 1, mode),
        );
        best.offer(
            format!("close-values-prime/{role}/{}", mode.name()),
            u::close_values_prime(ctx, f, g, 1, mode),
        );
    }

    if g.degree() == Some(1) {
        let b = g.coeffs()[1].clone();
        let c = -g.coeffs()[0].clone();
        for j in 0..=n {
            best.offer(
                format!("linear-value/{role}/j={j}"),
                u::linear_value(ctx, f, &b, &c, j),
            );
        }
        let mut variants = vec![LinearVariant::Littlewood, LinearVariant::DominantLeading];
        variants.extend((0..=n).map(LinearVariant::DominantMiddle));
        for v in variants {
            best.offer(
                format!("linear-value-corollary/{role}/{v:?}"),
                u::linear_value_corollary(ctx, f, &b, &c, v),
            );
        }
    }

    if let Some(form) = QuadraticForm::detect(g) {
        for choice in [SplitChoice::Given(BigInt::one()), SplitChoice::Auto] {
            best.offer(
                format!("form/{role}/{}", form.name()),
                u::quadratic_form(ctx, f, &form, &choice),
            );
        }
    }
}

/// Runs every applicable criterion on the pair `(f, g)` in both roles over
/// a small fixed parameter grid.
///
/// For each criterion variant the first successful certificate is kept, or
/// one inconclusive certificate when none succeeds. Checkers that reject
/// their inputs outright contribute nothing. Successes come first, then
/// the result is ordered by criterion id.
pub fn certify_auto(ctx: &Ctx, f: &IntPoly, g: &IntPoly) -> Vec<Certificate> {
    let mut best = Best::default();
    pair_criteria(ctx, f, g, "fg", &mut best);
    if f != g {
        pair_criteria(ctx, g, f, "gf", &mut best);
    }
    for side in SIDES {
        for d in -3i64..=3 {
            best.offer(
                format!("hadamard-separation/{}", side.name()),
                u::hadamard_separation(ctx, f, g, &BigInt::from(d), side),
            );
        }
    }
    let mut out: Vec<(String, Certificate)> = best.slots.into_iter().collect();
    out.sort_by(|(ka, a), (kb, b)| {
        (!a.is_success(), &a.criterion, ka).cmp(&(!b.is_success(), &b.criterion, kb))
    });
    out.into_iter().map(|(_, c)| c).collect()
}
