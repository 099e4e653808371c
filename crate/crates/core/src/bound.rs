//! Rational enclosures of real radicals with guaranteed rounding direction.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::BigRat;

/// A closed rational interval `[lo, hi]` known to contain some real number.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DirectedBound {
    pub lo: BigRat,
    pub hi: BigRat,
}

impl DirectedBound {
    pub fn exact(x: BigRat) -> Self {
        DirectedBound {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn int(x: impl Into<BigInt>) -> Self {
        Self::exact(BigRat::from_integer(x.into()))
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn add(&self, o: &Self) -> Self {
        DirectedBound {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        DirectedBound {
            lo: &self.lo - &o.hi,
            hi: &self.hi - &o.lo,
        }
    }

    /// Product of two enclosures of nonnegative numbers.
    pub fn mul_nonneg(&self, o: &Self) -> Self {
        debug_assert!(!self.lo.is_negative() && !o.lo.is_negative());
        DirectedBound {
            lo: &self.lo * &o.lo,
            hi: &self.hi * &o.hi,
        }
    }

    /// Multiplies by a nonnegative exact rational.
    pub fn scale(&self, c: &BigRat) -> Self {
        debug_assert!(!c.is_negative());
        DirectedBound {
            lo: &self.lo * c,
            hi: &self.hi * c,
        }
    }

    /// Reciprocal of an enclosure of a positive number; `None` when the
    /// lower end is not positive.
    pub fn recip(&self) -> Option<Self> {
        if !self.lo.is_positive() {
            return None;
        }
        Some(DirectedBound {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        })
    }

    /// Integer power of an enclosure of a nonnegative number; negative
    /// exponents require a positive lower end.
    pub fn powi(&self, e: i64) -> Option<Self> {
        if e >= 0 {
            let e = e as i32;
            Some(DirectedBound {
                lo: pow_rat(&self.lo, e),
                hi: pow_rat(&self.hi, e),
            })
        } else {
            self.recip()?.powi(-e)
        }
    }

    /// `k`-th root of an enclosure of a nonnegative number.
    pub fn root(&self, k: u32) -> Result<Self> {
        let lo = kth_root_bounds(&self.lo, k)?.lo;
        let hi = kth_root_bounds(&self.hi, k)?.hi;
        Ok(DirectedBound { lo, hi })
    }
}

impl fmt::Display for DirectedBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "[{};{}]", self.lo, self.hi)
        }
    }
}

pub fn pow_rat(x: &BigRat, e: i32) -> BigRat {
    if e >= 0 {
        BigRat::new_raw(x.numer().pow(e as u32), x.denom().pow(e as u32))
    } else {
        pow_rat(x, -e).recip()
    }
}

/// Floor of `log2` of a positive integer, as bit length minus one.
fn bits(x: &BigInt) -> i64 {
    x.bits() as i64
}

/// Encloses `x^(1/k)` for `x >= 0`.
///
/// The result satisfies `lo^k <= x <= hi^k` exactly and
/// `hi - lo <= 2^-64 * max(1, hi)`. Exact rational roots are returned as a
/// degenerate interval.
pub fn kth_root_bounds(x: &BigRat, k: u32) -> Result<DirectedBound> {
    if x.is_negative() {
        return Err(Error::NegativeRadicand);
    }
    if k == 0 {
        return Err(Error::Precondition("root index must be positive".into()));
    }
    if x.is_zero() || k == 1 {
        return Ok(DirectedBound::exact(x.clone()));
    }
    let num = x.numer();
    let den = x.denom();
    let rn = num.nth_root(k);
    let rd = den.nth_root(k);
    if rn.pow(k) == *num && rd.pow(k) == *den {
        return Ok(DirectedBound::exact(BigRat::new(rn, rd)));
    }
    let extra = ((bits(den) - bits(num)) / k as i64 + 2).max(0);
    let prec = 64 + extra as u64;
    let scaled = (num << (prec * k as u64)) / den;
    let r = scaled.nth_root(k);
    let unit = BigInt::one() << prec;
    let lo = BigRat::new(r.clone(), unit.clone());
    let hi = BigRat::new(r + 1u32, unit);
    Ok(DirectedBound { lo, hi })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRat {
        BigRat::new(n.into(), d.into())
    }

    #[test]
    fn exact_and_irrational_roots() {
        let b = kth_root_bounds(&rat(4, 1), 2).unwrap();
        assert_eq!(b.lo, rat(2, 1));
        assert_eq!(b.hi, rat(2, 1));
        let b = kth_root_bounds(&rat(2, 1), 2).unwrap();
        assert!(&b.lo * &b.lo < rat(2, 1));
        assert!(&b.hi * &b.hi > rat(2, 1));
        assert!(&b.hi - &b.lo <= BigRat::new(1.into(), BigInt::one() << 64));
        let b = kth_root_bounds(&rat(15, 1), 4).unwrap();
        assert!(pow_rat(&b.lo, 4) <= rat(15, 1));
        assert!(pow_rat(&b.hi, 4) >= rat(15, 1));
        assert_eq!(
            kth_root_bounds(&rat(-1, 1), 2),
            Err(Error::NegativeRadicand)
        );
        assert!(kth_root_bounds(&rat(4, 9), 2).unwrap().is_exact());
    }
}
