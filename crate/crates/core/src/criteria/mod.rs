//! Irreducibility criteria. Every checker returns a [`Certificate`]; the
//! [`verify_text`] entry point replays a stored certificate.

pub mod auto;
pub mod bivariate;
pub mod combos;
pub mod univariate;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bivar::BivarPoly;
use crate::bound::DirectedBound;
use crate::cert::{Certificate, Ctx, FORMAT_VERSION};
use crate::error::{Error, Result};
use crate::poly::{BigRat, IntPoly};
use crate::roots::verify_enclosures;

pub use auto::certify_auto;

/// Whether a criterion looks at the roots themselves or at their
/// reciprocals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Direct,
    Reciprocal,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Direct => "direct",
            Side::Reciprocal => "reciprocal",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "direct" => Ok(Side::Direct),
            "reciprocal" => Ok(Side::Reciprocal),
            _ => Err(Error::Parse(format!("unknown side `{s}`"))),
        }
    }
}

pub(crate) fn exact(x: BigRat) -> DirectedBound {
    DirectedBound::exact(x)
}

pub(crate) fn int_rat(x: &BigInt) -> BigRat {
    BigRat::from_integer(x.clone())
}

pub(crate) fn sum_bounds(terms: Vec<DirectedBound>) -> DirectedBound {
    terms
        .iter()
        .fold(DirectedBound::exact(BigRat::zero()), |acc, t| acc.add(t))
}

/// Degree of `f`, rejecting constants and the zero polynomial.
pub(crate) fn nonconstant(f: &IntPoly, name: &str) -> Result<usize> {
    match f.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::Precondition(format!("{name} must be nonconstant"))),
        Some(n) => Ok(n),
    }
}

/// Splits `|n| = p q` with `p` the largest known prime factor.
pub(crate) fn prime_split(ctx: &Ctx, n: &BigInt) -> Option<(BigInt, BigInt)> {
    if n.is_zero() || n.is_one() {
        return None;
    }
    let fac = ctx.factorize(n);
    let n = num_traits::Signed::abs(n);
    let mut p = fac.largest_prime()?.clone();
    if !fac.cofactor.is_one() && crate::arith::is_prime(&fac.cofactor) && fac.cofactor > p {
        p = fac.cofactor.clone();
    }
    let q = &n / &p;
    Some((p, q))
}

fn parse_poly(text: &str) -> Result<IntPoly> {
    text.parse()
}

fn second(cert: &Certificate) -> Result<IntPoly> {
    let g = cert
        .g
        .as_deref()
        .ok_or_else(|| Error::Verification("certificate has no second polynomial".into()))?;
    parse_poly(g)
}

fn param_u32(cert: &Certificate, key: &str) -> Result<u32> {
    cert.param(key)?
        .parse()
        .map_err(|_| Error::Parse(format!("parameter `{key}` is not a small integer")))
}

/// Every criterion id a certificate may carry.
pub const CRITERIA: &[&str] = &[
    "annulus-separation",
    "close-roots-pair",
    "close-values-dk",
    "close-values-prime",
    "combination-dominance",
    "combination-shared-constant",
    "combos-equal-degree-m",
    "combos-equal-degree-n",
    "combos-higher-degree-m",
    "combos-higher-degree-n",
    "combos-linear-prime",
    "combos-lower-degree",
    "combos-marden",
    "degree-dominance",
    "degree-gap-divisor",
    "degree-gap-dk",
    "degree-spike",
    "dominant-coefficient",
    "form-eisenstein",
    "form-gauss",
    "form-golden",
    "form-sqrt",
    "hadamard-separation",
    "linear-value",
    "linear-value-dominant-leading",
    "linear-value-dominant-middle",
    "linear-value-littlewood",
    "root-separation",
    "root-separation-divisor",
    "root-separation-dk",
    "value-lower-bound",
    "value-lower-bound-dk",
];

/// Runs the checker named by `cert.criterion` with the stored parameters.
fn dispatch(ctx: &Ctx, cert: &Certificate) -> Result<Certificate> {
    use univariate as u;
    let side = || Side::parse(cert.param("side")?);
    let mode = || u::ValueMode::parse(cert.param("mode")?);
    let id = cert.criterion.as_str();
    if id.starts_with("degree-") || id.starts_with("combination-") {
        return bivariate::replay(ctx, cert);
    }
    if id.starts_with("combos-") {
        return combos::replay(ctx, cert);
    }
    let f = parse_poly(&cert.f)?;
    match id {
        "root-separation" => {
            u::root_separation(ctx, &f, &second(cert)?, &cert.param_int("q")?, side()?)
        }
        "root-separation-dk" => {
            u::root_separation_dk(ctx, &f, &second(cert)?, param_u32(cert, "k")?, side()?)
        }
        "root-separation-divisor" => {
            u::root_separation_divisor(ctx, &f, &second(cert)?, &cert.param_int("d")?, side()?)
        }
        "value-lower-bound" => u::value_lower_bound(
            ctx,
            &f,
            &second(cert)?,
            &cert.param_int("d")?,
            param_u32(cert, "r")?,
            mode()?,
        ),
        "value-lower-bound-dk" => u::value_lower_bound_dk(
            ctx,
            &f,
            &second(cert)?,
            param_u32(cert, "k")?,
            param_u32(cert, "r")?,
            mode()?,
        ),
        "annulus-separation" => u::annulus_separation(
            ctx,
            &f,
            &second(cert)?,
            &cert.param_rat("A")?,
            &cert.param_rat("B")?,
            &cert.param_int("q")?,
        ),
        "dominant-coefficient" => u::dominant_coefficient(
            ctx,
            &f,
            &second(cert)?,
            cert.param_usize("j")?,
            &cert.param_int("q")?,
        ),
        "linear-value" => u::linear_value(
            ctx,
            &f,
            &cert.param_int("b")?,
            &cert.param_int("c")?,
            cert.param_usize("j")?,
        ),
        "linear-value-littlewood"
        | "linear-value-dominant-leading"
        | "linear-value-dominant-middle" => {
            let variant = match id {
                "linear-value-littlewood" => u::LinearVariant::Littlewood,
                "linear-value-dominant-leading" => u::LinearVariant::DominantLeading,
                _ => u::LinearVariant::DominantMiddle(cert.param_usize("j")?),
            };
            u::linear_value_corollary(
                ctx,
                &f,
                &cert.param_int("b")?,
                &cert.param_int("c")?,
                variant,
            )
        }
        "form-gauss" | "form-sqrt" | "form-eisenstein" | "form-golden" => {
            let form = match id {
                "form-gauss" => u::QuadraticForm::Gauss,
                "form-sqrt" => u::QuadraticForm::Sqrt(cert.param_int("m")?),
                "form-eisenstein" => u::QuadraticForm::Eisenstein,
                _ => u::QuadraticForm::Golden,
            };
            let choice = match cert.param("q_mode")? {
                "auto" => u::SplitChoice::Auto,
                "given" => u::SplitChoice::Given(cert.param_int("q")?),
                other => return Err(Error::Parse(format!("unknown q_mode `{other}`"))),
            };
            u::quadratic_form(ctx, &f, &form, &choice)
        }
        "close-values-dk" => u::close_values_dk(
            ctx,
            &f,
            &second(cert)?,
            param_u32(cert, "k")?,
            param_u32(cert, "r")?,
            mode()?,
        ),
        "close-values-prime" => {
            u::close_values_prime(ctx, &f, &second(cert)?, param_u32(cert, "r")?, mode()?)
        }
        "close-roots-pair" => {
            u::close_roots_pair(ctx, &f, &second(cert)?, param_u32(cert, "r")?, side()?)
        }
        "hadamard-separation" => {
            u::hadamard_separation(ctx, &f, &second(cert)?, &cert.param_int("d")?, side()?)
        }
        other => Err(Error::UnknownCriterion(other.to_string())),
    }
}

/// Re-runs a certificate from its own data and checks that the result is
/// identical.
///
/// The checks are, in order: the criterion id is known, the text is the canonical serialization, the
/// schema version and digest match, every recorded witness re-evaluates to
/// its recorded outcome, every stored root enclosure is valid for its
/// polynomial, and re-running the named criterion with the stored
/// parameters (serving root enclosures only from the certificate)
/// reproduces the certificate exactly.
pub fn replay(cert: &Certificate) -> Result<()> {
    if !CRITERIA.contains(&cert.criterion.as_str()) {
        return Err(Error::UnknownCriterion(cert.criterion.clone()));
    }
    if cert.version != FORMAT_VERSION {
        return Err(Error::Verification(format!(
            "unsupported version {}",
            cert.version
        )));
    }
    if cert.compute_digest() != cert.digest {
        return Err(Error::Verification("digest mismatch".into()));
    }
    for w in &cert.witnesses {
        w.recheck()?;
    }
    for rec in &cert.enclosures {
        let (poly, enc) = rec.decode()?;
        verify_enclosures(&poly, &enc)
            .map_err(|e| Error::Verification(format!("enclosure for {}: {e}", rec.poly)))?;
    }
    let ctx = Ctx::replaying(cert)?;
    let again = dispatch(&ctx, cert)?;
    if again != *cert {
        return Err(Error::Verification(
            "re-running the criterion gives a different certificate".into(),
        ));
    }
    Ok(())
}

/// Parses and replays a certificate in its canonical JSON form.
pub fn verify_text(text: &str) -> Result<Certificate> {
    let cert = Certificate::from_json(text)?;
    if cert.to_json() != text.trim_end() {
        return Err(Error::Verification(
            "certificate is not in canonical form".into(),
        ));
    }
    replay(&cert)?;
    Ok(cert)
}

pub(crate) fn bivar_text(f: &BivarPoly) -> String {
    f.to_text()
}
