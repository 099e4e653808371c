//! Bivariate polynomials `f(X, Y) = sum a_i(X) Y^i` over Q.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{BigRat, RatPoly};
use crate::text::parse_rat_poly;

/// Polynomial in `Y` whose coefficients are polynomials in `X`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivarPoly {
    coeffs: Vec<RatPoly>,
}

/// Degree in `X` with the zero polynomial mapped to `Bottom`, which sits
/// below every integer: `max(Bottom, d) = d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Deg {
    Bottom,
    Finite(i64),
}

impl Deg {
    pub fn of(p: &RatPoly) -> Deg {
        match p.degree() {
            Some(d) => Deg::Finite(d as i64),
            None => Deg::Bottom,
        }
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Deg::Finite(d) => Some(d),
            Deg::Bottom => None,
        }
    }
}

impl fmt::Display for Deg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Deg::Bottom => f.write_str("-inf"),
            Deg::Finite(d) => write!(f, "{d}"),
        }
    }
}

impl BivarPoly {
    pub fn new(mut coeffs: Vec<RatPoly>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        BivarPoly { coeffs }
    }

    /// Builds from integer coefficient rows: `rows[i]` is `a_i(X)` in
    /// ascending order.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::new(rows.iter().map(|r| RatPoly::from_i64(r)).collect())
    }

    pub fn zero() -> Self {
        BivarPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[RatPoly] {
        &self.coeffs
    }

    pub fn degree_y(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg_y(&self) -> usize {
        self.degree_y().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> RatPoly {
        self.coeffs.get(i).cloned().unwrap_or_else(RatPoly::zero)
    }

    pub fn deg_coeff(&self, i: usize) -> Deg {
        Deg::of(&self.coeff(i))
    }

    /// Largest `X`-degree of any coefficient.
    pub fn deg_x(&self) -> usize {
        self.coeffs.iter().map(|c| c.deg()).max().unwrap_or(0)
    }

    /// `Y^n f(X, 1/Y)`.
    pub fn reciprocal_y(&self) -> Self {
        let mut v = self.coeffs.clone();
        v.reverse();
        Self::new(v)
    }

    /// Monic gcd of the coefficient polynomials, the content in `Q[X]`.
    pub fn content_x(&self) -> RatPoly {
        self.coeffs.iter().fold(RatPoly::zero(), |g, c| g.gcd(c))
    }

    pub fn has_trivial_content(&self) -> bool {
        !self.is_zero() && self.content_x().is_constant()
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.scale(c)).collect())
    }

    pub fn scale_poly(&self, c: &RatPoly) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Substitutes a value for `X`, giving a polynomial in `Y`.
    pub fn eval_x(&self, x: &BigRat) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|a| a.eval(x)).collect())
    }

    /// Substitutes a value for `Y`, giving a polynomial in `X`.
    pub fn eval_y(&self, y: &BigRat) -> RatPoly {
        let mut acc = RatPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc.scale(y) + c;
        }
        acc
    }

    /// Division in `Q[X][Y]` when it is exact.
    pub fn div_exact(&self, d: &BivarPoly) -> Option<BivarPoly> {
        if d.is_zero() {
            return None;
        }
        let dn = d.deg_y();
        let lc = d.coeffs.last()?.clone();
        let mut r = self.coeffs.clone();
        if self.is_zero() {
            return Some(Self::zero());
        }
        if r.len() <= dn {
            return None;
        }
        let mut q = vec![RatPoly::zero(); r.len() - dn];
        for k in (0..q.len()).rev() {
            let t = r[k + dn].div_exact(&lc)?;
            if !t.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    r[k + i] = &r[k + i] - &(&t * dc);
                }
            }
            q[k] = t;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(q))
    }

    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|c| format!("[{}]", c.to_human()))
            .collect();
        format!("[{}]", parts.join(", "))
    }

    /// Parses `[[x^3+2], [x^2-x], ...]`; entry `i` is the coefficient of
    /// `Y^i`. An entry containing commas is read as an ascending coefficient
    /// list.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|u| u.strip_suffix(']'))
            .ok_or_else(|| Error::Parse("bivariate input must be a bracketed list".into()))?;
        let mut coeffs = Vec::new();
        let mut depth = 0i32;
        let mut start = None;
        for (i, ch) in inner.char_indices() {
            match ch {
                '[' => {
                    if depth == 0 {
                        start = Some(i);
                    }
                    depth += 1;
                }
                ']' => {
                    depth -= 1;
                    if depth < 0 {
                        return Err(Error::Parse("unbalanced brackets".into()));
                    }
                    if depth == 0 {
                        let st = start.take().expect("opening bracket");
                        let body = &inner[st..=i];
                        let entry = &body[1..body.len() - 1];
                        let poly = if entry.contains(',') {
                            parse_rat_poly(body)?
                        } else if entry.trim().is_empty() {
                            RatPoly::zero()
                        } else {
                            parse_rat_poly(entry)?
                        };
                        coeffs.push(poly);
                    }
                }
                ',' if depth == 0 => {}
                c if depth == 0 && !c.is_whitespace() => {
                    return Err(Error::Parse(format!("unexpected `{c}` in bivariate list")));
                }
                _ => {}
            }
        }
        if depth != 0 {
            return Err(Error::Parse("unbalanced brackets".into()));
        }
        Ok(Self::new(coeffs))
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl std::str::FromStr for BivarPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

fn combine(a: &BivarPoly, b: &BivarPoly, sub: bool) -> BivarPoly {
    let n = a.coeffs.len().max(b.coeffs.len());
    BivarPoly::new(
        (0..n)
            .map(|i| {
                if sub {
                    &a.coeff(i) - &b.coeff(i)
                } else {
                    &a.coeff(i) + &b.coeff(i)
                }
            })
            .collect(),
    )
}

impl std::ops::Add<&BivarPoly> for &BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        combine(self, rhs, false)
    }
}

impl std::ops::Sub<&BivarPoly> for &BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        combine(self, rhs, true)
    }
}

impl std::ops::Mul<&BivarPoly> for &BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        if self.is_zero() || rhs.is_zero() {
            return BivarPoly::zero();
        }
        let mut out = vec![RatPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        BivarPoly::new(out)
    }
}

/// The polynomial `Y - c` with constant `c`.
pub fn y_minus(c: i64) -> BivarPoly {
    BivarPoly::new(vec![
        RatPoly::constant(BigRat::from_integer((-c).into())),
        RatPoly::one(),
    ])
}
