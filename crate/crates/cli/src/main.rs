use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::{One, Zero};

use resprime::arith::{FactorBudget, DEFAULT_SEED};
use resprime::bivar::BivarPoly;
use resprime::cert::{Certificate, Ctx};
use resprime::criteria::bivariate::{self as bv, CombinationVariant, DominanceVariant};
use resprime::criteria::combos::{combos, combos_linear_prime, ComboRoute};
use resprime::criteria::univariate as uv;
use resprime::criteria::{certify_auto, replay, verify_text, Side};
use resprime::oracle::{factor_over_q, OracleBudget};
use resprime::resultant::{
    resultant, resultant_quadratic_binet, resultant_quadratic_shift, resultant_sylvester,
};
use resprime::text::{parse_int, parse_rat};
use resprime::{BigRat, Error, IntPoly, RatPoly};

const EXIT_NONE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

/// Rho iterations granted per millisecond of `--budget-ms`.
const RHO_PER_MS: u64 = 2_000;

#[derive(Parser)]
#[command(
    name = "resprime",
    version,
    about = "Irreducibility certificates from resultants"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Time budget for integer factorization, in milliseconds.
    #[arg(long = "budget-ms", global = true)]
    budget_ms: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print Res(f, g).
    Resultant {
        f: String,
        g: String,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Run the univariate criteria on a pair of polynomials.
    Certify(CertifyArgs),
    /// List the irreducible combinations M f + N g.
    Combos(CombosArgs),
    /// Run the bivariate criteria on polynomials in Q[X][Y].
    Bivar(BivarArgs),
    /// Replay stored certificates.
    Verify {
        /// Certificate file, or `-` for standard input.
        file: PathBuf,
    },
    /// Factor a polynomial over Q.
    Oracle { f: String },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Auto,
    Prs,
    Sylvester,
    QuadShift,
    QuadBinet,
}

#[derive(Args, Clone, Default)]
struct Overrides {
    #[arg(long = "A")]
    a: Option<String>,
    #[arg(long = "B")]
    b: Option<String>,
    #[arg(long)]
    q: Option<String>,
    #[arg(long)]
    j: Option<usize>,
    #[arg(long)]
    k: Option<u32>,
}

#[derive(Args)]
struct CertifyArgs {
    f: Option<String>,
    g: Option<String>,
    /// Use g = b X - c.
    #[arg(long = "g-linear", num_args = 2, value_names = ["B", "C"], allow_negative_numbers = true)]
    g_linear: Option<Vec<String>>,
    /// Comma-separated criterion ids or id prefixes to keep.
    #[arg(long, value_delimiter = ',')]
    criteria: Vec<String>,
    /// File with one pair per line.
    #[arg(long)]
    batch: Option<PathBuf>,
    #[command(flatten)]
    over: Overrides,
}

#[derive(Args)]
struct CombosArgs {
    f: Option<String>,
    g: Option<String>,
    /// Criterion id of the route; all applicable routes when omitted.
    #[arg(long)]
    route: Option<String>,
    #[arg(long)]
    batch: Option<PathBuf>,
    #[command(flatten)]
    over: Overrides,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BivarChecker {
    All,
    Dominance,
    GapDk,
    GapDivisor,
    Spike,
    Combination,
}

#[derive(Args)]
struct BivarArgs {
    f: Option<String>,
    g: Option<String>,
    #[arg(long, value_enum, default_value_t = BivarChecker::All)]
    checker: BivarChecker,
    /// Divisor polynomial for `gap-divisor`.
    #[arg(long)]
    d: Option<String>,
    #[arg(long)]
    alpha: Option<String>,
    #[arg(long)]
    beta: Option<String>,
    #[arg(long)]
    batch: Option<PathBuf>,
    #[command(flatten)]
    over: Overrides,
}

/// Failure of a command, mapped onto the exit-code contract.
enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Verification(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<bool, Failure>;

fn make_ctx(budget_ms: Option<u64>) -> Result<Ctx, Failure> {
    let seed = match std::env::var("RESPRIME_SEED") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("RESPRIME_SEED `{s}` is not an integer")))?,
        Err(_) => DEFAULT_SEED,
    };
    let mut fb = FactorBudget {
        seed,
        ..FactorBudget::default()
    };
    if let Some(ms) = budget_ms {
        fb.rho_iterations = ms.saturating_mul(RHO_PER_MS);
    }
    Ok(Ctx::new(fb, OracleBudget::default()))
}

fn poly(s: &str) -> Result<IntPoly, Failure> {
    Ok(s.parse::<IntPoly>()?)
}

fn bivar(s: &str) -> Result<BivarPoly, Failure> {
    Ok(BivarPoly::parse(s)?)
}

fn big(s: &str) -> Result<BigInt, Failure> {
    Ok(parse_int(s)?)
}

fn rat(s: &str) -> Result<BigRat, Failure> {
    Ok(parse_rat(s)?)
}

/// Splits a batch line into its top-level items: bracketed groups or
/// whitespace/semicolon separated words.
fn split_items(line: &str) -> Vec<String> {
    let mut items = Vec::new();
    let mut cur = String::new();
    let mut depth = 0i32;
    for ch in line.chars() {
        match ch {
            '[' => {
                depth += 1;
                cur.push(ch);
            }
            ']' => {
                depth -= 1;
                cur.push(ch);
            }
            c if depth == 0 && (c.is_whitespace() || c == ';') => {
                if !cur.is_empty() {
                    items.push(std::mem::take(&mut cur));
                }
            }
            c => cur.push(c),
        }
    }
    if !cur.is_empty() {
        items.push(cur);
    }
    items
}

/// The `(f, g)` pairs named on the command line or in a batch file.
fn pairs(
    f: &Option<String>,
    g: &Option<String>,
    batch: &Option<PathBuf>,
) -> Result<Vec<(String, Option<String>)>, Failure> {
    if let Some(path) = batch {
        let text = read_input(path)?;
        let mut out = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut items = split_items(line).into_iter();
            match (items.next(), items.next(), items.next()) {
                (Some(a), b, None) => out.push((a, b)),
                _ => {
                    return Err(Failure::Usage(format!(
                        "batch line {}: expected one or two polynomials",
                        n + 1
                    )))
                }
            }
        }
        return Ok(out);
    }
    match f {
        Some(f) => Ok(vec![(f.clone(), g.clone())]),
        None => Err(Failure::Usage("missing polynomial argument".into())),
    }
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(e.to_string()))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit(certs: &[Certificate], format: Format) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(certs).expect("certificates serialize")
        ),
        Format::Text => {
            for c in certs {
                let mut line = format!("{} {:?}", c.criterion, c.verdict);
                for (k, v) in &c.params {
                    line.push_str(&format!(" {k}={v}"));
                }
                if let Some(r) = &c.resultant {
                    line.push_str(&format!(" Res={r}"));
                }
                println!("{line}");
                if !c.pairs.is_empty() {
                    println!("  (M, N) pairs:");
                    for (m, n) in &c.pairs {
                        println!("  {m:>6} {n:>6}");
                    }
                }
            }
        }
    }
}

/// Prints the certificates; the run succeeds when any of them does.
fn finish(certs: Vec<Certificate>, format: Format) -> Outcome {
    let success = certs.iter().any(Certificate::is_success);
    emit(&certs, format);
    Ok(success)
}

fn cmd_resultant(f: &str, g: &str, method: Method) -> Outcome {
    let f = poly(f)?;
    let g = poly(g)?;
    let quadratic = || -> Result<(BigInt, BigInt, BigInt), Failure> {
        if g.degree() != Some(2) {
            return Err(Failure::Usage("this method needs a quadratic g".into()));
        }
        let c = g.coeffs();
        Ok((c[2].clone(), c[1].clone(), c[0].clone()))
    };
    let value = match method {
        Method::Prs => resultant(&f, &g)?,
        Method::Sylvester => resultant_sylvester(&f, &g)?,
        Method::QuadShift => {
            let (a, b, c) = quadratic()?;
            resultant_quadratic_shift(&f, &a, &b, &c)?
        }
        Method::QuadBinet => {
            let (a, b, c) = quadratic()?;
            resultant_quadratic_binet(&f, &a, &b, &c)?
        }
        Method::Auto => {
            let prs = resultant(&f, &g)?;
            let syl = resultant_sylvester(&f, &g)?;
            if prs != syl {
                return Err(Failure::Internal(format!(
                    "resultant methods disagree: {prs} vs {syl}"
                )));
            }
            prs
        }
    };
    println!("{value}");
    Ok(true)
}

fn keep(filter: &[String], id: &str) -> bool {
    filter.is_empty() || filter.iter().any(|p| id.starts_with(p.as_str()))
}

fn certify_pair(
    ctx: &Ctx,
    f: &IntPoly,
    g: &IntPoly,
    args: &CertifyArgs,
) -> Result<Vec<Certificate>, Failure> {
    let mut certs = Vec::new();
    let mut push = |r: resprime::Result<Certificate>| -> Result<(), Failure> {
        match r {
            Ok(c) => certs.push(c),
            Err(e @ Error::Verification(_)) => return Err(e.into()),
            Err(_) => {}
        }
        Ok(())
    };
    let q = args
        .over
        .q
        .as_deref()
        .map(big)
        .transpose()?
        .unwrap_or_else(BigInt::one);
    if let (Some(a), Some(b)) = (&args.over.a, &args.over.b) {
        push(uv::annulus_separation(ctx, f, g, &rat(a)?, &rat(b)?, &q))?;
    }
    if let Some(j) = args.over.j {
        push(uv::dominant_coefficient(ctx, f, g, j, &q))?;
    }
    if let Some(k) = args.over.k {
        for side in [Side::Direct, Side::Reciprocal] {
            push(uv::root_separation_dk(ctx, f, g, k, side))?;
        }
    }
    if args.over.q.is_some() {
        for side in [Side::Direct, Side::Reciprocal] {
            push(uv::root_separation(ctx, f, g, &q, side))?;
        }
    }
    certs.extend(certify_auto(ctx, f, g));
    certs.retain(|c| keep(&args.criteria, &c.criterion));
    certs.sort_by_key(|c| !c.is_success());
    Ok(certs)
}

fn cmd_certify(ctx: &Ctx, args: &CertifyArgs, format: Format) -> Outcome {
    let mut all = Vec::new();
    for (f, g) in pairs(&args.f, &args.g, &args.batch)? {
        let f = poly(&f)?;
        let g = match (&g, &args.g_linear) {
            (Some(g), None) => poly(g)?,
            (None, Some(bc)) => {
                let (b, c) = (big(&bc[0])?, big(&bc[1])?);
                if b.is_zero() || c.is_zero() {
                    return Err(Failure::Usage("--g-linear needs nonzero b and c".into()));
                }
                IntPoly::new(vec![-c, b])
            }
            (Some(_), Some(_)) => {
                return Err(Failure::Usage(
                    "give either g or --g-linear, not both".into(),
                ))
            }
            (None, None) => return Err(Failure::Usage("missing second polynomial".into())),
        };
        all.extend(certify_pair(ctx, &f, &g, args)?);
    }
    finish(all, format)
}

fn radius_grid() -> Vec<BigRat> {
    [
        (1, 2),
        (1, 1),
        (3, 2),
        (2, 1),
        (3, 1),
        (4, 1),
        (6, 1),
        (8, 1),
        (10, 1),
        (16, 1),
    ]
    .iter()
    .map(|&(n, d)| BigRat::new(BigInt::from(n), BigInt::from(d)))
    .collect()
}

fn combos_pair(
    ctx: &Ctx,
    f: &IntPoly,
    g: &IntPoly,
    args: &CombosArgs,
) -> Result<Vec<Certificate>, Failure> {
    let (Some(n), Some(m)) = (f.degree(), g.degree()) else {
        return Err(Failure::Usage("polynomials must be nonzero".into()));
    };
    let routes: Vec<ComboRoute> = match &args.route {
        Some(id) => vec![ComboRoute::from_id(id)
            .ok_or_else(|| Failure::Usage(format!("unknown route `{id}`")))?],
        None => ComboRoute::for_degrees(n, m).to_vec(),
    };
    let q = args
        .over
        .q
        .as_deref()
        .map(big)
        .transpose()?
        .unwrap_or_else(BigInt::one);
    let radii: Vec<(BigRat, BigRat)> = match (&args.over.a, &args.over.b) {
        (Some(a), Some(b)) => vec![(rat(a)?, rat(b)?)],
        (None, None) => {
            let grid = radius_grid();
            grid.iter()
                .flat_map(|a| {
                    grid.iter()
                        .filter(move |b| *b > a)
                        .map(move |b| (a.clone(), b.clone()))
                })
                .collect()
        }
        _ => return Err(Failure::Usage("--A and --B go together".into())),
    };
    let mut certs = Vec::new();
    for route in routes {
        let mut fallback = None;
        let mut found = None;
        for (a, b) in &radii {
            match combos(ctx, f, g, route, a, b, &q) {
                Ok(c) if c.is_success() => {
                    found = Some(c);
                    break;
                }
                Ok(c) => {
                    fallback.get_or_insert(c);
                }
                Err(e @ Error::Verification(_)) => return Err(e.into()),
                Err(e) if args.route.is_some() => return Err(e.into()),
                Err(_) => {}
            }
        }
        certs.extend(found.or(fallback));
    }
    if args.route.is_none()
        && g.degree() == Some(1)
        && g.coeffs()[1].is_one()
        && !g.coeffs()[0].is_zero()
    {
        let b = -g.coeffs()[0].clone();
        if let Ok(c) = combos_linear_prime(ctx, f, &b) {
            certs.push(c);
        }
    }
    certs.sort_by_key(|c| !c.is_success());
    Ok(certs)
}

fn cmd_combos(ctx: &Ctx, args: &CombosArgs, format: Format) -> Outcome {
    let mut all = Vec::new();
    for (f, g) in pairs(&args.f, &args.g, &args.batch)? {
        let g = g.ok_or_else(|| Failure::Usage("missing second polynomial".into()))?;
        all.extend(combos_pair(ctx, &poly(&f)?, &poly(&g)?, args)?);
    }
    finish(all, format)
}

fn bivar_pair(
    ctx: &Ctx,
    f: &BivarPoly,
    g: &BivarPoly,
    args: &BivarArgs,
) -> Result<Vec<Certificate>, Failure> {
    let mut certs = Vec::new();
    let explicit = args.checker != BivarChecker::All;
    let mut push = |r: resprime::Result<Certificate>| -> Result<(), Failure> {
        match r {
            Ok(c) => certs.push(c),
            Err(e @ Error::Verification(_)) => return Err(e.into()),
            Err(e @ Error::Parse(_)) => return Err(e.into()),
            Err(e) if explicit => return Err(e.into()),
            Err(_) => {}
        }
        Ok(())
    };
    let wants = |c: BivarChecker| args.checker == BivarChecker::All || args.checker == c;
    let sides = [Side::Direct, Side::Reciprocal];
    if wants(BivarChecker::Dominance) {
        for v in [DominanceVariant::GtGeq, DominanceVariant::GeqGt] {
            push(bv::degree_dominance(ctx, f, g, v))?;
        }
    }
    if wants(BivarChecker::GapDk) {
        let k = args.over.k.unwrap_or(1);
        for side in sides {
            push(bv::degree_gap_dk(ctx, f, g, k, side))?;
        }
    }
    if wants(BivarChecker::GapDivisor) {
        let d = match &args.d {
            Some(d) => d.parse::<RatPoly>()?,
            None => RatPoly::from_i64(&[1]),
        };
        for side in sides {
            push(bv::degree_gap_divisor(ctx, f, g, &d, side))?;
        }
    }
    if wants(BivarChecker::Spike) {
        let js: Vec<usize> = match args.over.j {
            Some(j) => vec![j],
            None => (0..=g.deg_y()).collect(),
        };
        for j in js {
            push(bv::degree_spike(ctx, f, g, j))?;
        }
    }
    if args.checker == BivarChecker::Combination {
        let alpha = rat(args.alpha.as_deref().unwrap_or("1"))?;
        let beta = rat(args.beta.as_deref().unwrap_or("1"))?;
        let variant = match args.over.j {
            Some(j) => CombinationVariant::SharedConstant(j),
            None => CombinationVariant::Dominance,
        };
        push(bv::combination(ctx, f, g, variant, &alpha, &beta))?;
    }
    certs.sort_by_key(|c| !c.is_success());
    Ok(certs)
}

fn cmd_bivar(ctx: &Ctx, args: &BivarArgs, format: Format) -> Outcome {
    let mut all = Vec::new();
    for (f, g) in pairs(&args.f, &args.g, &args.batch)? {
        let g = g.ok_or_else(|| Failure::Usage("missing second polynomial".into()))?;
        all.extend(bivar_pair(ctx, &bivar(&f)?, &bivar(&g)?, args)?);
    }
    finish(all, format)
}

fn cmd_verify(file: &PathBuf, format: Format) -> Outcome {
    let text = read_input(file)?;
    let results: Vec<(String, Result<(), Error>)> = if text.trim_start().starts_with('[') {
        let certs: Vec<Certificate> = serde_json::from_str(&text)
            .map_err(|e| Failure::Usage(format!("certificate list: {e}")))?;
        certs
            .iter()
            .map(|c| (c.criterion.clone(), replay(c)))
            .collect()
    } else {
        match verify_text(&text) {
            Ok(c) => vec![(c.criterion, Ok(()))],
            Err(e) => vec![(String::from("certificate"), Err(e))],
        }
    };
    let mut all_ok = true;
    for (id, r) in &results {
        match r {
            Ok(()) => match format {
                Format::Text => println!("ok {id}"),
                Format::Json => println!("{}", serde_json::json!({"criterion": id, "ok": true})),
            },
            Err(e) => {
                all_ok = false;
                match format {
                    Format::Text => println!("fail {id}: {e}"),
                    Format::Json => println!(
                        "{}",
                        serde_json::json!({"criterion": id, "ok": false, "error": e.to_string()})
                    ),
                }
            }
        }
    }
    Ok(all_ok && !results.is_empty())
}

fn cmd_oracle(f: &str, format: Format) -> Outcome {
    let f = f.parse::<RatPoly>()?;
    let fac = factor_over_q(&f, &OracleBudget::default())?;
    if fac.product() != f {
        return Err(Failure::Internal(
            "factorization does not multiply back".into(),
        ));
    }
    match format {
        Format::Text => {
            println!("unit {}", fac.unit);
            for (p, e) in &fac.factors {
                println!("({})^{e}", p.to_human());
            }
        }
        Format::Json => {
            let factors: Vec<_> = fac
                .factors
                .iter()
                .map(|(p, e)| serde_json::json!({"factor": p.to_bracket(), "multiplicity": e}))
                .collect();
            println!(
                "{}",
                serde_json::json!({"unit": fac.unit.to_string(), "factors": factors})
            );
        }
    }
    Ok(fac.is_irreducible() || f.degree().is_some_and(|d| d <= 1))
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Resultant { f, g, method } => cmd_resultant(f, g, *method),
        Command::Certify(args) => cmd_certify(&make_ctx(cli.budget_ms)?, args, cli.format),
        Command::Combos(args) => cmd_combos(&make_ctx(cli.budget_ms)?, args, cli.format),
        Command::Bivar(args) => cmd_bivar(&make_ctx(cli.budget_ms)?, args, cli.format),
        Command::Verify { file } => cmd_verify(file, cli.format),
        Command::Oracle { f } => cmd_oracle(f, cli.format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_NONE),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(EXIT_INTERNAL)
        }
    }
}
