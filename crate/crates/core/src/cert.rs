//! Certificates: the record each criterion leaves behind, its JSON form,
//! and the evaluation context shared by the checkers.
//!
//! A certificate stores every comparison the checker made as exact or
//! directed rational bounds, the root enclosures it relied on, and the
//! budgets it ran under. Replaying a certificate re-runs the named
//! checker against the stored enclosures only and requires the regenerated
//! record to match the stored one exactly.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use sha2::{Digest, Sha256};

use crate::arith::{factorize, is_prime, FactorBudget, Factorization};
use crate::bound::DirectedBound;
use crate::error::{Error, Result};
use crate::oracle::{factor_over_q, OracleBudget, PolyFactorization};
use crate::poly::{BigRat, IntPoly, RatPoly};
use crate::resultant::resultant;
use crate::roots::{enclose_roots, Disk, RootEnclosures};
use crate::text::{parse_int, parse_rat};

/// Version of the certificate schema.
pub const FORMAT_VERSION: u32 = 1;

/// Outcome of a criterion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Verdict {
    /// The polynomial `f` of the certificate is irreducible over Q.
    Irreducible,
    /// Both `f` and `g` are irreducible.
    BothIrreducible,
    /// `f` has at most this many irreducible factors.
    FactorBound(u32),
    /// Each of `f` and `g` has at most this many irreducible factors.
    FactorBoundBoth(u32),
    /// The base hypotheses hold and every combination listed in `pairs`
    /// is irreducible; the value is the number of pairs.
    Combinations(u32),
    Inconclusive(String),
}

impl Verdict {
    pub fn is_success(&self) -> bool {
        !matches!(self, Verdict::Inconclusive(_))
    }

    fn normalized(self) -> Verdict {
        match self {
            Verdict::FactorBound(1) => Verdict::Irreducible,
            Verdict::FactorBoundBoth(1) => Verdict::BothIrreducible,
            v => v,
        }
    }
}

/// Relation tested by a comparison witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rel {
    #[serde(rename = ">")]
    Gt,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "==")]
    Eq,
    #[serde(rename = "!=")]
    Ne,
}

impl Rel {
    /// Decides the relation between two real numbers known only through
    /// enclosures. The answer is `true` only when it holds for every pair
    /// of points in the two intervals.
    pub fn decide(self, lhs: &DirectedBound, rhs: &DirectedBound) -> bool {
        match self {
            Rel::Gt => lhs.lo > rhs.hi,
            Rel::Ge => lhs.lo >= rhs.hi,
            Rel::Lt => lhs.hi < rhs.lo,
            Rel::Le => lhs.hi <= rhs.lo,
            Rel::Eq => lhs.is_exact() && rhs.is_exact() && lhs.lo == rhs.lo,
            Rel::Ne => lhs.hi < rhs.lo || lhs.lo > rhs.hi,
        }
    }
}

mod bound_text {
    use super::*;

    pub fn serialize<S: Serializer>(
        b: &DirectedBound,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&b.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<DirectedBound, D::Error> {
        let text = String::deserialize(d)?;
        parse_bound(&text).map_err(serde::de::Error::custom)
    }
}

/// Parses the text form of a [`DirectedBound`]: `a/b` or `[lo;hi]`.
pub fn parse_bound(text: &str) -> Result<DirectedBound> {
    if let Some(inner) = text.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
        let (lo, hi) = inner
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("bad interval `{text}`")))?;
        let b = DirectedBound {
            lo: parse_rat(lo)?,
            hi: parse_rat(hi)?,
        };
        if b.lo > b.hi {
            return Err(Error::Parse(format!("empty interval `{text}`")));
        }
        Ok(b)
    } else {
        Ok(DirectedBound::exact(parse_rat(text)?))
    }
}

/// One verified fact.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Compare {
        label: String,
        #[serde(with = "bound_text")]
        lhs: DirectedBound,
        rel: Rel,
        #[serde(with = "bound_text")]
        rhs: DirectedBound,
        holds: bool,
    },
    Prime {
        label: String,
        value: String,
        holds: bool,
    },
    /// Informational value that is reproduced by replay but carries no
    /// check of its own.
    Fact { label: String, value: String },
}

impl Witness {
    /// Re-decides the stored comparison or primality claim.
    pub fn recheck(&self) -> Result<()> {
        let ok = match self {
            Witness::Compare {
                lhs,
                rel,
                rhs,
                holds,
                ..
            } => rel.decide(lhs, rhs) == *holds,
            Witness::Prime { value, holds, .. } => is_prime(&parse_int(value)?) == *holds,
            Witness::Fact { .. } => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Verification(format!(
                "witness `{}` does not re-check",
                self.label()
            )))
        }
    }

    pub fn label(&self) -> &str {
        match self {
            Witness::Compare { label, .. }
            | Witness::Prime { label, .. }
            | Witness::Fact { label, .. } => label,
        }
    }
}

/// Text form of one inclusion disk. Floats are written in Rust's shortest
/// round-trip notation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiskRecord {
    pub re: String,
    pub im: String,
    pub radius: String,
    pub multiplicity: u32,
}

/// Root enclosures of one polynomial, embedded in a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnclosureRecord {
    pub poly: String,
    pub disks: Vec<DiskRecord>,
    pub overlapping: bool,
}

impl EnclosureRecord {
    pub fn new(poly: &IntPoly, enc: &RootEnclosures) -> Self {
        let disks = enc
            .disks
            .iter()
            .map(|d| DiskRecord {
                re: format!("{:?}", d.re),
                im: format!("{:?}", d.im),
                radius: format!("{:?}", d.radius),
                multiplicity: d.multiplicity,
            })
            .collect();
        EnclosureRecord {
            poly: poly.to_bracket(),
            disks,
            overlapping: enc.overlapping,
        }
    }

    pub fn decode(&self) -> Result<(IntPoly, RootEnclosures)> {
        let num = |s: &str| -> Result<f64> {
            let x: f64 = s
                .parse()
                .map_err(|_| Error::Parse(format!("bad float `{s}`")))?;
            if x.is_finite() {
                Ok(x)
            } else {
                Err(Error::Parse(format!("non-finite float `{s}`")))
            }
        };
        let poly: IntPoly = self.poly.parse()?;
        let mut disks = Vec::with_capacity(self.disks.len());
        for d in &self.disks {
            disks.push(Disk {
                re: num(&d.re)?,
                im: num(&d.im)?,
                radius: num(&d.radius)?,
                multiplicity: d.multiplicity,
            });
        }
        Ok((
            poly,
            RootEnclosures {
                disks,
                overlapping: self.overlapping,
            },
        ))
    }
}

/// Budgets a certificate was produced under, as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BudgetRecord {
    pub rho_iterations: String,
    pub seed: String,
    pub oracle_max_degree: String,
    pub oracle_max_coeff_bits: String,
    pub oracle_max_candidates: String,
}

impl BudgetRecord {
    fn new(f: &FactorBudget, o: &OracleBudget) -> Self {
        BudgetRecord {
            rho_iterations: f.rho_iterations.to_string(),
            seed: f.seed.to_string(),
            oracle_max_degree: o.max_degree.to_string(),
            oracle_max_coeff_bits: o.max_coeff_bits.to_string(),
            oracle_max_candidates: o.max_candidates.to_string(),
        }
    }

    fn decode(&self) -> Result<(FactorBudget, OracleBudget)> {
        fn num<T: std::str::FromStr>(s: &str) -> Result<T> {
            s.parse()
                .map_err(|_| Error::Parse(format!("bad budget value `{s}`")))
        }
        Ok((
            FactorBudget {
                rho_iterations: num(&self.rho_iterations)?,
                seed: num(&self.seed)?,
            },
            OracleBudget {
                max_degree: num(&self.oracle_max_degree)?,
                max_coeff_bits: num(&self.oracle_max_coeff_bits)?,
                max_candidates: num(&self.oracle_max_candidates)?,
            },
        ))
    }
}

/// Machine-checkable record of one criterion run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub version: u32,
    pub criterion: String,
    pub verdict: Verdict,
    pub f: String,
    pub g: Option<String>,
    pub params: BTreeMap<String, String>,
    pub resultant: Option<String>,
    pub p: Option<String>,
    pub q: Option<String>,
    pub witnesses: Vec<Witness>,
    pub enclosures: Vec<EnclosureRecord>,
    /// Admissible `(M, N)` or `(alpha, beta)` pairs for combination
    /// criteria.
    pub pairs: Vec<(String, String)>,
    pub budget: BudgetRecord,
    /// SHA-256 of the certificate serialized with an empty digest.
    pub digest: String,
}

impl Certificate {
    pub fn is_success(&self) -> bool {
        self.verdict.is_success()
    }

    /// Canonical JSON text.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Certificate> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("certificate: {e}")))
    }

    pub fn compute_digest(&self) -> String {
        let mut body = self.clone();
        body.digest.clear();
        let hash = Sha256::digest(body.to_json().as_bytes());
        hash.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn param(&self, key: &str) -> Result<&str> {
        self.params
            .get(key)
            .map(String::as_str)
            .ok_or_else(|| Error::Verification(format!("missing parameter `{key}`")))
    }

    pub fn param_int(&self, key: &str) -> Result<BigInt> {
        parse_int(self.param(key)?)
    }

    pub fn param_rat(&self, key: &str) -> Result<BigRat> {
        parse_rat(self.param(key)?)
    }

    pub fn param_usize(&self, key: &str) -> Result<usize> {
        let v = self.param(key)?;
        v.parse()
            .map_err(|_| Error::Parse(format!("bad parameter `{key}` = `{v}`")))
    }

    pub fn budgets(&self) -> Result<(FactorBudget, OracleBudget)> {
        self.budget.decode()
    }

    /// Integer pairs of a combination certificate.
    pub fn int_pairs(&self) -> Result<Vec<(BigInt, BigInt)>> {
        self.pairs
            .iter()
            .map(|(a, b)| Ok((parse_int(a)?, parse_int(b)?)))
            .collect()
    }
}

enum EnclosureSource {
    Compute,
    Stored(HashMap<IntPoly, RootEnclosures>),
}

#[derive(Default)]
struct Memo {
    resultants: HashMap<(IntPoly, IntPoly), BigInt>,
    factorizations: HashMap<BigInt, Factorization>,
    enclosures: HashMap<IntPoly, RootEnclosures>,
    poly_factors: HashMap<RatPoly, Result<PolyFactorization>>,
}

/// Budgets plus memoized intermediate results for a run of checkers.
///
/// In replay mode root enclosures come only from a certificate; a checker
/// asking for any other enclosure fails.
pub struct Ctx {
    pub factor_budget: FactorBudget,
    pub oracle_budget: OracleBudget,
    source: EnclosureSource,
    memo: RefCell<Memo>,
}

impl Default for Ctx {
    fn default() -> Self {
        Ctx::new(FactorBudget::default(), OracleBudget::default())
    }
}

impl Ctx {
    pub fn new(factor_budget: FactorBudget, oracle_budget: OracleBudget) -> Self {
        Ctx {
            factor_budget,
            oracle_budget,
            source: EnclosureSource::Compute,
            memo: RefCell::default(),
        }
    }

    /// Context that serves root enclosures from `cert` only.
    pub fn replaying(cert: &Certificate) -> Result<Self> {
        let (fb, ob) = cert.budgets()?;
        let mut stored = HashMap::new();
        for rec in &cert.enclosures {
            let (poly, enc) = rec.decode()?;
            stored.insert(poly, enc);
        }
        Ok(Ctx {
            factor_budget: fb,
            oracle_budget: ob,
            source: EnclosureSource::Stored(stored),
            memo: RefCell::default(),
        })
    }

    pub fn resultant(&self, f: &IntPoly, g: &IntPoly) -> Result<BigInt> {
        let key = (f.clone(), g.clone());
        if let Some(r) = self.memo.borrow().resultants.get(&key) {
            return Ok(r.clone());
        }
        let r = resultant(f, g)?;
        self.memo.borrow_mut().resultants.insert(key, r.clone());
        Ok(r)
    }

    /// Factorization of `|n|` within the context's budget.
    pub fn factorize(&self, n: &BigInt) -> Factorization {
        let n = n.abs();
        if let Some(fac) = self.memo.borrow().factorizations.get(&n) {
            return fac.clone();
        }
        let fac = factorize(&n, self.factor_budget);
        self.memo.borrow_mut().factorizations.insert(n, fac.clone());
        fac
    }

    pub fn enclose(&self, f: &IntPoly) -> Result<RootEnclosures> {
        if let EnclosureSource::Stored(map) = &self.source {
            return map.get(f).cloned().ok_or_else(|| {
                Error::Verification(format!("no stored enclosure for {}", f.to_bracket()))
            });
        }
        if let Some(e) = self.memo.borrow().enclosures.get(f) {
            return Ok(e.clone());
        }
        let e = enclose_roots(f)?;
        self.memo
            .borrow_mut()
            .enclosures
            .insert(f.clone(), e.clone());
        Ok(e)
    }

    pub fn factor_poly(&self, p: &RatPoly) -> Result<PolyFactorization> {
        if let Some(r) = self.memo.borrow().poly_factors.get(p) {
            return r.clone();
        }
        let r = factor_over_q(p, &self.oracle_budget);
        self.memo
            .borrow_mut()
            .poly_factors
            .insert(p.clone(), r.clone());
        r
    }
}

/// Collects the witnesses of one checker run.
pub(crate) struct Recorder<'a> {
    pub ctx: &'a Ctx,
    cert: Certificate,
}

impl<'a> Recorder<'a> {
    pub fn new(ctx: &'a Ctx, criterion: &str, f: String, g: Option<String>) -> Self {
        let cert = Certificate {
            version: FORMAT_VERSION,
            criterion: criterion.to_string(),
            verdict: Verdict::Inconclusive(String::new()),
            f,
            g,
            params: BTreeMap::new(),
            resultant: None,
            p: None,
            q: None,
            witnesses: Vec::new(),
            enclosures: Vec::new(),
            pairs: Vec::new(),
            budget: BudgetRecord::new(&ctx.factor_budget, &ctx.oracle_budget),
            digest: String::new(),
        };
        Recorder { ctx, cert }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) {
        self.cert.params.insert(key.to_string(), value.to_string());
    }

    pub fn set_resultant(&mut self, r: &BigInt) {
        self.cert.resultant = Some(r.to_string());
    }

    pub fn set_split(&mut self, p: &BigInt, q: &BigInt) {
        self.cert.p = Some(p.to_string());
        self.cert.q = Some(q.to_string());
    }

    pub fn split_q(&self) -> Option<BigInt> {
        self.cert.q.as_ref().and_then(|q| q.parse().ok())
    }

    pub fn compare(
        &mut self,
        label: impl Into<String>,
        lhs: DirectedBound,
        rel: Rel,
        rhs: DirectedBound,
    ) -> bool {
        let holds = rel.decide(&lhs, &rhs);
        self.cert.witnesses.push(Witness::Compare {
            label: label.into(),
            lhs,
            rel,
            rhs,
            holds,
        });
        holds
    }

    pub fn compare_rat(
        &mut self,
        label: impl Into<String>,
        lhs: BigRat,
        rel: Rel,
        rhs: BigRat,
    ) -> bool {
        self.compare(
            label,
            DirectedBound::exact(lhs),
            rel,
            DirectedBound::exact(rhs),
        )
    }

    pub fn compare_int(
        &mut self,
        label: impl Into<String>,
        lhs: &BigInt,
        rel: Rel,
        rhs: &BigInt,
    ) -> bool {
        self.compare(
            label,
            DirectedBound::int(lhs.clone()),
            rel,
            DirectedBound::int(rhs.clone()),
        )
    }

    /// Records `n mod d == 0` for `d != 0`.
    pub fn divides(&mut self, label: impl Into<String>, d: &BigInt, n: &BigInt) -> bool {
        let r = if d.is_zero() { BigInt::from(1) } else { n % d };
        self.compare_int(label, &r, Rel::Eq, &BigInt::zero())
    }

    pub fn prime(&mut self, label: impl Into<String>, n: &BigInt) -> bool {
        let holds = is_prime(n);
        self.cert.witnesses.push(Witness::Prime {
            label: label.into(),
            value: n.to_string(),
            holds,
        });
        holds
    }

    pub fn fact(&mut self, label: impl Into<String>, value: impl ToString) {
        self.cert.witnesses.push(Witness::Fact {
            label: label.into(),
            value: value.to_string(),
        });
    }

    /// Root enclosures of `f`, embedded in the certificate.
    pub fn enclose(&mut self, f: &IntPoly) -> Result<RootEnclosures> {
        let enc = self.ctx.enclose(f)?;
        let rec = EnclosureRecord::new(f, &enc);
        if !self.cert.enclosures.contains(&rec) {
            self.cert.enclosures.push(rec);
        }
        Ok(enc)
    }

    pub fn set_pairs(&mut self, pairs: Vec<(String, String)>) {
        self.cert.pairs = pairs;
    }

    pub fn finish(mut self, verdict: Verdict) -> Certificate {
        self.cert.verdict = verdict.normalized();
        self.cert.digest = self.cert.compute_digest();
        self.cert
    }
}

/// Runs a checker body and seals its certificate. The body returns
/// `Ok(Verdict::Inconclusive(..))` when a hypothesis fails and `Err` on a
/// precondition violation.
pub(crate) fn run_checker<'a>(
    ctx: &'a Ctx,
    criterion: &str,
    f: String,
    g: Option<String>,
    body: impl FnOnce(&mut Recorder<'a>) -> Result<Verdict>,
) -> Result<Certificate> {
    let mut rec = Recorder::new(ctx, criterion, f, g);
    let verdict = body(&mut rec)?;
    Ok(rec.finish(verdict))
}

/// Returns an inconclusive verdict from the enclosing checker body when the
/// condition is false.
macro_rules! require {
    ($cond:expr, $reason:expr) => {
        if !$cond {
            return Ok($crate::cert::Verdict::Inconclusive(String::from($reason)));
        }
    };
}
pub(crate) use require;
