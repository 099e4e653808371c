//! Text formats for polynomials.
//!
//! Two forms are accepted everywhere:
//!
//! * ascending bracket form, `[-1, 1, -2, 3, 9]`;
//! * human form, `9x^4+3x^3-2x^2+x-1`, where rational coefficients are
//!   written `(1/2)x^3` or `1/2*x^3`.
//!
//! The printers in [`crate::poly`] produce text that parses back to the
//! identical polynomial.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{BigRat, IntPoly, RatPoly};

fn perr(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Parses a rational literal such as `-3`, `7/2` or `+1/3`.
pub fn parse_rat(s: &str) -> Result<BigRat> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| perr(format!("bad numerator `{n}`")))?;
        let d = BigInt::from_str(d.trim()).map_err(|_| perr(format!("bad denominator `{d}`")))?;
        if d.is_zero() {
            return Err(perr("zero denominator"));
        }
        Ok(BigRat::new(n, d))
    } else {
        let n = BigInt::from_str(s).map_err(|_| perr(format!("bad number `{s}`")))?;
        Ok(BigRat::from_integer(n))
    }
}

pub fn parse_int(s: &str) -> Result<BigInt> {
    BigInt::from_str(s.trim()).map_err(|_| perr(format!("bad integer `{}`", s.trim())))
}

fn parse_bracket(s: &str) -> Result<Vec<BigRat>> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| perr("unbalanced brackets"))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(parse_rat).collect()
}

fn parse_human(s: &str) -> Result<Vec<BigRat>> {
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(perr("empty polynomial"));
    }
    let mut coeffs: Vec<BigRat> = Vec::new();
    let mut i = 0;
    let digits = |i: &mut usize| -> String {
        let start = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
        }
        chars[start..*i].iter().collect()
    };
    while i < chars.len() {
        let mut sign = BigRat::one();
        if chars[i] == '+' || chars[i] == '-' {
            if chars[i] == '-' {
                sign = -sign;
            }
            i += 1;
        } else if !coeffs.is_empty() || i > 0 {
            return Err(perr(format!("expected sign at position {i}")));
        }
        let mut coeff: Option<BigRat> = None;
        if i < chars.len() && chars[i] == '(' {
            let close = chars[i..]
                .iter()
                .position(|&c| c == ')')
                .ok_or_else(|| perr("unclosed parenthesis"))?;
            let text: String = chars[i + 1..i + close].iter().collect();
            coeff = Some(parse_rat(&text)?);
            i += close + 1;
        } else if i < chars.len() && chars[i].is_ascii_digit() {
            let n = digits(&mut i);
            let mut text = n;
            if i < chars.len() && chars[i] == '/' {
                i += 1;
                let d = digits(&mut i);
                if d.is_empty() {
                    return Err(perr("missing denominator"));
                }
                text = format!("{text}/{d}");
            }
            coeff = Some(parse_rat(&text)?);
        }
        if i < chars.len() && chars[i] == '*' {
            if coeff.is_none() {
                return Err(perr("`*` without coefficient"));
            }
            i += 1;
            if i >= chars.len() || !(chars[i] == 'x' || chars[i] == 'X') {
                return Err(perr("expected variable after `*`"));
            }
        }
        let mut exp = 0usize;
        if i < chars.len() && (chars[i] == 'x' || chars[i] == 'X') {
            i += 1;
            exp = 1;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let e = digits(&mut i);
                exp = e.parse().map_err(|_| perr("bad exponent"))?;
            }
        } else if coeff.is_none() {
            return Err(perr(format!("unexpected character at position {i}")));
        }
        if exp > 4096 {
            return Err(perr("exponent too large"));
        }
        let c = sign * coeff.unwrap_or_else(BigRat::one);
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, BigRat::zero());
        }
        coeffs[exp] += c;
    }
    Ok(coeffs)
}

/// Parses a polynomial with rational coefficients in either text form.
pub fn parse_rat_poly(s: &str) -> Result<RatPoly> {
    let t = s.trim();
    let coeffs = if t.starts_with('[') {
        parse_bracket(t)?
    } else {
        parse_human(t)?
    };
    Ok(RatPoly::new(coeffs))
}

/// Parses a polynomial with integer coefficients in either text form.
pub fn parse_int_poly(s: &str) -> Result<IntPoly> {
    parse_rat_poly(s)?
        .to_int_poly()
        .ok_or_else(|| perr("coefficients must be integers"))
}

impl FromStr for IntPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_int_poly(s)
    }
}

impl FromStr for RatPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_rat_poly(s)
    }
}
