use num_bigint::BigInt;
use resprime::cert::{Certificate, Ctx, Verdict};
use resprime::criteria::combos::{combos, combos_linear_prime, ComboRoute};
use resprime::criteria::verify_text;
use resprime::oracle::is_irreducible_over_q;
use resprime::{BigRat, IntPoly};

fn p(c: &[i64]) -> IntPoly {
    IntPoly::from_i64(c)
}

fn r(x: i64) -> BigRat {
    BigRat::from_integer(x.into())
}

fn pairs(cert: &Certificate) -> Vec<(i64, i64)> {
    cert.int_pairs()
        .unwrap()
        .into_iter()
        .map(|(m, n)| (m.try_into().unwrap(), n.try_into().unwrap()))
        .collect()
}

fn combination(f: &IntPoly, g: &IntPoly, m: i64, n: i64) -> IntPoly {
    let len = f.coeffs().len().max(g.coeffs().len());
    IntPoly::new((0..len).map(|i| f.coeff(i) * m + g.coeff(i) * n).collect())
}

fn assert_all_irreducible(cert: &Certificate, f: &IntPoly, g: &IntPoly) {
    assert!(matches!(cert.verdict, Verdict::Combinations(k) if k as usize == cert.pairs.len()));
    for (m, n) in pairs(cert) {
        let h = combination(f, g, m, n);
        assert!(
            is_irreducible_over_q(&h.to_rat(), &Default::default()).unwrap(),
            "{m} f + {n} g = {h}"
        );
        assert!(pairs(cert).contains(&(-m, -n)));
    }
    verify_text(&cert.to_json()).unwrap();
}

#[test]
fn lower_degree_prime_sum_instance() {
    let ctx = Ctx::default();
    let f = p(&[-1, 1]);
    let g = p(&[17, 1, 1]);
    let cert = combos(
        &ctx,
        &f,
        &g,
        ComboRoute::LowerDegree,
        &r(1),
        &r(3),
        &BigInt::from(1),
    )
    .unwrap();
    assert_eq!(cert.resultant.as_deref(), Some("19"));
    let listed = pairs(&cert);
    for m in [-1i64, 1] {
        for n in [-2i64, 2] {
            assert!(listed.contains(&(m, n)), "({m}, {n})");
        }
    }
    assert!(listed.contains(&(0, 1)) && listed.contains(&(0, -1)));
    assert!(listed.iter().all(|&(_, n)| n != 0 && n.abs() <= 2));
    assert_eq!(
        cert.witnesses
            .iter()
            .filter(|w| w.label() == "pair inequality")
            .count(),
        1
    );
    assert_all_irreducible(&cert, &f, &g);
}

#[test]
fn marden_instance() {
    let ctx = Ctx::default();
    let f = p(&[1, -1, 1]);
    let g = p(&[102, 0, 1]);
    let cert = combos(
        &ctx,
        &f,
        &g,
        ComboRoute::Marden,
        &r(2),
        &r(10),
        &BigInt::from(1),
    )
    .unwrap();
    assert_eq!(
        pairs(&cert),
        vec![(-1, -2), (1, -2), (0, -1), (0, 1), (-1, 2), (1, 2)]
    );
    assert_all_irreducible(&cert, &f, &g);
    let tight = combos(
        &ctx,
        &f,
        &g,
        ComboRoute::Marden,
        &r(2),
        &r(7),
        &BigInt::from(1),
    )
    .unwrap();
    assert!(!tight.is_success());
}

#[test]
fn linear_prime_instance() {
    let ctx = Ctx::default();
    let f = p(&[1, 1, 0, 7]);
    let cert = combos_linear_prime(&ctx, &f, &BigInt::from(3)).unwrap();
    assert_eq!(cert.resultant.as_deref(), Some("193"));
    let listed = pairs(&cert);
    assert!(listed
        .iter()
        .all(|&(m, n)| n.abs() < m.abs() && m.abs() <= 2 && m - 3 * n != 0));
    assert!(listed.contains(&(2, 1)) && listed.contains(&(1, 0)) && !listed.contains(&(2, 0)));
    assert_all_irreducible(&cert, &f, &IntPoly::from_i64(&[-3, 1]));
}

#[test]
fn other_routes() {
    let ctx = Ctx::default();
    let one = BigInt::from(1);
    let cases = [
        (p(&[1, 1, 1]), p(&[28, 0, 1]), ComboRoute::EqualDegreeN),
        (p(&[1, 1, 0, 1]), p(&[7, 1]), ComboRoute::HigherDegreeM),
        (p(&[1, 1, 0, 1]), p(&[36, 1]), ComboRoute::HigherDegreeN),
    ];
    for (f, g, route) in cases {
        let cert = combos(&ctx, &f, &g, route, &r(2), &r(4), &one).unwrap();
        assert!(cert.pairs.len() > 2, "{route:?}");
        assert_all_irreducible(&cert, &f, &g);
    }
}

#[test]
fn equality_in_leading_dominance_forces_strict_rows() {
    let ctx = Ctx::default();
    let f = p(&[-1, 1]);
    let g = p(&[17, 1, 1]);
    let cert = combos(
        &ctx,
        &f,
        &g,
        ComboRoute::LowerDegree,
        &r(1),
        &r(3),
        &BigInt::from(1),
    )
    .unwrap();
    let strict = cert
        .witnesses
        .iter()
        .any(|w| w.label() == "pair inequality" && format!("{w:?}").contains("\"strict\""));
    assert!(strict);
}

#[test]
fn wrong_degree_order_is_an_error() {
    let ctx = Ctx::default();
    let err = combos(
        &ctx,
        &p(&[17, 1, 1]),
        &p(&[-1, 1]),
        ComboRoute::LowerDegree,
        &r(1),
        &r(3),
        &BigInt::from(1),
    );
    assert_eq!(err.unwrap_err(), resprime::Error::DegreeOrder);
}
