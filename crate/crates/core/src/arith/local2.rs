//! Rationals with odd denominator: the localization of the integers at 2.
//!
//! This ring stands in for the 2-adic integers. Every matrix that occurs in
//! the A4 computations has entries here, and the questions asked of them
//! (invertibility, equivalence, splitting) are decided by reduction mod 2,
//! which is the same for the localization and for its completion.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Exponent of 2 in an element; `None` stands for the valuation of zero.
pub type Valuation = Option<u32>;

#[derive(Clone)]
enum Repr {
    // den > 0, odd, gcd(num, den) = 1
    Small(i64, i64),
    Big(BigInt, BigInt),
}

/// An exact rational number whose reduced denominator is odd.
#[derive(Clone)]
pub struct Local2Rational(Repr);

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Local2Rational {
    pub fn zero() -> Self {
        Local2Rational(Repr::Small(0, 1))
    }

    pub fn one() -> Self {
        Local2Rational(Repr::Small(1, 1))
    }

    pub fn from_i64(n: i64) -> Self {
        Local2Rational(Repr::Small(n, 1))
    }

    /// Builds `num/den`, failing when the reduced denominator is even.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self, Error> {
        let num = num.into();
        let den = den.into();
        if den.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = (&num / &g, &den / &g);
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        if d.is_even() {
            return Err(Error::NotTwoIntegral(format!("{}/{}", n, d)));
        }
        Ok(Self::from_reduced_big(n, d))
    }

    fn from_reduced_big(n: BigInt, d: BigInt) -> Self {
        match (n.to_i64(), d.to_i64()) {
            (Some(a), Some(b)) => Local2Rational(Repr::Small(a, b)),
            _ => Local2Rational(Repr::Big(n, d)),
        }
    }

    fn from_i128_parts(n: i128, d: i128) -> Self {
        debug_assert!(d > 0);
        let g = gcd_i128(n, d);
        let (n, d) = if g > 1 { (n / g, d / g) } else { (n, d) };
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(a), Ok(b)) => Local2Rational(Repr::Small(a, b)),
            _ => Local2Rational(Repr::Big(BigInt::from(n), BigInt::from(d))),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(n, _) => n.clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(_, d) => d.clone(),
        }
    }

    pub fn to_big_rational(&self) -> BigRational {
        BigRational::new(self.numer(), self.denom())
    }

    pub fn from_big_rational(q: &BigRational) -> Result<Self, Error> {
        Self::new(q.numer().clone(), q.denom().clone())
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n == 0,
            Repr::Big(n, _) => n.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(&self.0, Repr::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(_, d) => d.is_one(),
        }
    }

    /// Exponent of 2 in the numerator; `None` for zero.
    pub fn val2(&self) -> Valuation {
        match &self.0 {
            Repr::Small(n, _) => {
                if *n == 0 {
                    None
                } else {
                    Some(n.trailing_zeros())
                }
            }
            Repr::Big(n, _) => n.trailing_zeros().map(|v| v as u32),
        }
    }

    /// Units of the local ring are exactly the elements with odd numerator.
    pub fn is_unit(&self) -> bool {
        self.val2() == Some(0)
    }

    /// Parity of the numerator: the image in the residue field with two elements.
    pub fn mod2(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => n & 1 == 1,
            Repr::Big(n, _) => n.is_odd(),
        }
    }

    /// Multiplicative inverse; only defined for units.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        Some(match &self.0 {
            Repr::Small(n, d) => {
                if *n < 0 {
                    Local2Rational(Repr::Small(-*d, -*n))
                } else {
                    Local2Rational(Repr::Small(*d, *n))
                }
            }
            Repr::Big(n, d) => {
                if n.is_negative() {
                    Self::from_reduced_big(-d.clone(), -n.clone())
                } else {
                    Self::from_reduced_big(d.clone(), n.clone())
                }
            }
        })
    }

    /// Exact division by a unit.
    pub fn div_unit(&self, u: &Self) -> Option<Self> {
        u.inverse().map(|inv| self * &inv)
    }

    /// Exact division by `2^k`; `None` if the valuation is too small.
    pub fn div_pow2(&self, k: u32) -> Option<Self> {
        if k == 0 {
            return Some(self.clone());
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        if self.val2()? < k {
            return None;
        }
        Some(match &self.0 {
            Repr::Small(n, d) => Local2Rational(Repr::Small(n >> k, *d)),
            Repr::Big(n, d) => Self::from_reduced_big(n >> k as usize, d.clone()),
        })
    }

    /// Exact division in the local ring: `self / other` when the quotient is 2-integral.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        let vo = other.val2()?;
        match self.val2() {
            None => Some(Self::zero()),
            Some(vs) if vs < vo => None,
            Some(_) => {
                let unit = other.div_pow2(vo)?;
                self.div_pow2(vo)?.div_unit(&unit)
            }
        }
    }

    /// Residue modulo the prime `p` (the denominator must be invertible mod `p`).
    pub fn mod_p(&self, p: u64) -> Option<u64> {
        let (n, d) = match &self.0 {
            Repr::Small(n, d) => (
                (*n as i128).rem_euclid(p as i128) as u64,
                (*d as i128).rem_euclid(p as i128) as u64,
            ),
            Repr::Big(n, d) => {
                let pb = BigInt::from(p);
                (
                    n.mod_floor(&pb).to_u64().unwrap_or(0),
                    d.mod_floor(&pb).to_u64().unwrap_or(0),
                )
            }
        };
        if d == 0 {
            return None;
        }
        Some(crate::arith::modp::mul(n, crate::arith::modp::inv(d, p), p))
    }

    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::Small(n, _) => n.signum() as i32,
            Repr::Big(n, _) => {
                if n.is_negative() {
                    -1
                } else if n.is_zero() {
                    0
                } else {
                    1
                }
            }
        }
    }
}

impl Default for Local2Rational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Local2Rational {
    fn from(n: i64) -> Self {
        Self::from_i64(n)
    }
}

impl From<i32> for Local2Rational {
    fn from(n: i32) -> Self {
        Self::from_i64(n as i64)
    }
}

impl From<BigInt> for Local2Rational {
    fn from(n: BigInt) -> Self {
        Self::from_reduced_big(n, BigInt::one())
    }
}

impl PartialEq for Local2Rational {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => a == c && b == d,
            _ => self.numer() == other.numer() && self.denom() == other.denom(),
        }
    }
}

impl Eq for Local2Rational {}

impl std::hash::Hash for Local2Rational {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.numer().hash(state);
        self.denom().hash(state);
    }
}

impl PartialOrd for Local2Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Local2Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.numer() * other.denom()).cmp(&(other.numer() * self.denom()))
    }
}

fn add_impl(a: &Local2Rational, b: &Local2Rational, negate_b: bool) -> Local2Rational {
    if let (Repr::Small(n1, d1), Repr::Small(n2, d2)) = (&a.0, &b.0) {
        let n2 = if negate_b { -(*n2 as i128) } else { *n2 as i128 };
        if *d1 == 1 && *d2 == 1 {
            return Local2Rational::from_i128_parts(*n1 as i128 + n2, 1);
        }
        if d1 == d2 {
            return Local2Rational::from_i128_parts(*n1 as i128 + n2, *d1 as i128);
        }
        let (d1, d2) = (*d1 as i128, *d2 as i128);
        if let (Some(x), Some(y), Some(den)) = (
            (*n1 as i128).checked_mul(d2),
            n2.checked_mul(d1),
            d1.checked_mul(d2),
        ) {
            if let Some(num) = x.checked_add(y) {
                return Local2Rational::from_i128_parts(num, den);
            }
        }
    }
    let (n1, d1, n2, d2) = (a.numer(), a.denom(), b.numer(), b.denom());
    let n2 = if negate_b { -n2 } else { n2 };
    let num = n1 * &d2 + n2 * &d1;
    let den = d1 * d2;
    let g = num.gcd(&den);
    Local2Rational::from_reduced_big(num / &g, den / g)
}

fn mul_impl(a: &Local2Rational, b: &Local2Rational) -> Local2Rational {
    if let (Repr::Small(n1, d1), Repr::Small(n2, d2)) = (&a.0, &b.0) {
        let num = *n1 as i128 * *n2 as i128;
        let den = *d1 as i128 * *d2 as i128;
        if *d1 == 1 && *d2 == 1 {
            return Local2Rational::from_i128_parts(num, 1);
        }
        return Local2Rational::from_i128_parts(num, den);
    }
    let num = a.numer() * b.numer();
    let den = a.denom() * b.denom();
    let g = num.gcd(&den);
    Local2Rational::from_reduced_big(num / &g, den / g)
}

impl<'a> Add<&'a Local2Rational> for &'a Local2Rational {
    type Output = Local2Rational;
    fn add(self, rhs: &Local2Rational) -> Local2Rational {
        add_impl(self, rhs, false)
    }
}

impl<'a> Sub<&'a Local2Rational> for &'a Local2Rational {
    type Output = Local2Rational;
    fn sub(self, rhs: &Local2Rational) -> Local2Rational {
        add_impl(self, rhs, true)
    }
}

impl<'a> Mul<&'a Local2Rational> for &'a Local2Rational {
    type Output = Local2Rational;
    fn mul(self, rhs: &Local2Rational) -> Local2Rational {
        mul_impl(self, rhs)
    }
}

impl Add for Local2Rational {
    type Output = Local2Rational;
    fn add(self, rhs: Local2Rational) -> Local2Rational {
        add_impl(&self, &rhs, false)
    }
}

impl Sub for Local2Rational {
    type Output = Local2Rational;
    fn sub(self, rhs: Local2Rational) -> Local2Rational {
        add_impl(&self, &rhs, true)
    }
}

impl Mul for Local2Rational {
    type Output = Local2Rational;
    fn mul(self, rhs: Local2Rational) -> Local2Rational {
        mul_impl(&self, &rhs)
    }
}

impl AddAssign<&Local2Rational> for Local2Rational {
    fn add_assign(&mut self, rhs: &Local2Rational) {
        *self = add_impl(self, rhs, false);
    }
}

impl SubAssign<&Local2Rational> for Local2Rational {
    fn sub_assign(&mut self, rhs: &Local2Rational) {
        *self = add_impl(self, rhs, true);
    }
}

impl MulAssign<&Local2Rational> for Local2Rational {
    fn mul_assign(&mut self, rhs: &Local2Rational) {
        *self = mul_impl(self, rhs);
    }
}

impl Neg for Local2Rational {
    type Output = Local2Rational;
    fn neg(self) -> Local2Rational {
        -&self
    }
}

impl Neg for &Local2Rational {
    type Output = Local2Rational;
    fn neg(self) -> Local2Rational {
        match &self.0 {
            Repr::Small(n, d) => match n.checked_neg() {
                Some(m) => Local2Rational(Repr::Small(m, *d)),
                None => Local2Rational(Repr::Big(-BigInt::from(*n), BigInt::from(*d))),
            },
            Repr::Big(n, d) => Local2Rational::from_reduced_big(-n.clone(), d.clone()),
        }
    }
}

impl fmt::Display for Local2Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{}", n),
            Repr::Small(n, d) => write!(f, "{}/{}", n, d),
            Repr::Big(n, d) if d.is_one() => write!(f, "{}", n),
            Repr::Big(n, d) => write!(f, "{}/{}", n, d),
        }
    }
}

impl fmt::Debug for Local2Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Local2Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let parse = |t: &str| {
            t.parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("bad integer `{}`", t)))
        };
        match s.split_once('/') {
            Some((p, q)) => Self::new(parse(p)?, parse(q)?),
            None => Ok(Self::from(parse(s)?)),
        }
    }
}

impl Zero for Local2Rational {
    fn zero() -> Self {
        Local2Rational::zero()
    }
    fn is_zero(&self) -> bool {
        Local2Rational::is_zero(self)
    }
}

impl One for Local2Rational {
    fn one() -> Self {
        Local2Rational::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Local2Rational {
        Local2Rational::new(n, d).unwrap()
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(Local2Rational::from(12).val2(), Some(2));
        assert_eq!(q(3, 5).val2(), Some(0));
        assert_eq!(Local2Rational::zero().val2(), None);
    }

    #[test]
    fn even_denominator_rejected() {
        assert!(Local2Rational::new(1, 2).is_err());
        assert!(Local2Rational::new(2, 4).is_err());
        assert_eq!(Local2Rational::new(2, 6).unwrap(), q(1, 3));
    }

    #[test]
    fn parse_and_print() {
        let x: Local2Rational = "-6/9".parse().unwrap();
        assert_eq!(x, q(-2, 3));
        assert_eq!(x.to_string(), "-2/3");
        assert!("1/4".parse::<Local2Rational>().is_err());
    }

    #[test]
    fn overflow_promotes_to_big() {
        let big = Local2Rational::from(i64::MAX);
        let sq = &big * &big;
        assert_eq!(sq.numer(), BigInt::from(i64::MAX) * BigInt::from(i64::MAX));
        let back = sq.checked_div(&big).unwrap();
        assert_eq!(back, big);
        let neg = -Local2Rational::from(i64::MIN);
        assert_eq!(neg.numer(), -BigInt::from(i64::MIN));
    }

    #[test]
    fn unit_inverse_and_division() {
        let u = q(-3, 5);
        assert_eq!(&u * &u.inverse().unwrap(), Local2Rational::one());
        assert!(Local2Rational::from(6).inverse().is_none());
        assert_eq!(
            Local2Rational::from(12).checked_div(&Local2Rational::from(6)),
            Some(Local2Rational::from(2))
        );
        assert_eq!(Local2Rational::from(3).checked_div(&Local2Rational::from(2)), None);
    }

    #[test]
    fn residues() {
        assert!(q(3, 5).mod2());
        assert!(!q(6, 5).mod2());
        let p = crate::arith::modp::P;
        let third = q(1, 3).mod_p(p).unwrap();
        assert_eq!(crate::arith::modp::mul(third, 3, p), 1);
    }
}
