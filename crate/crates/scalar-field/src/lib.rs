//! Exact arithmetic in the rational function field Q(t).
//!
//! A [`Scalar`] is a reduced fraction of integer-coefficient polynomials in
//! the indeterminate `t`.  The representation is canonical: the polynomial
//! gcd of numerator and denominator is 1, the integer contents of numerator
//! and denominator are coprime, and the denominator has positive leading
//! coefficient.  Consequently structural equality is field equality and the
//! type can serve as a hash key.
//!
//! Pure rational numbers are the constant fractions, so the same type covers
//! both the generic parameter `t` and its rational specializations.

mod factor;
mod fpoly;
mod matrix;
mod parse;
mod poly;

pub use factor::{divisors, irreducible_factors, rational_roots};
pub use fpoly::FPoly;
pub use matrix::Matrix;
pub use poly::Poly;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

/// Errors from scalar arithmetic, specialization, and parsing.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("specialization at t = {0} hits a pole")]
    Pole(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// An element of Q(t) in canonical reduced form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Scalar {
    /// Builds `num/den` and reduces to canonical form.
    pub fn from_fraction(num: Poly, den: Poly) -> Result<Scalar, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(mut num: Poly, mut den: Poly) -> Scalar {
        if num.is_zero() {
            return Scalar {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        if !g.is_one() {
            num = num.div_exact(&g);
            den = den.div_exact(&g);
        }
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.div_exact_int(&c);
            den = den.div_exact_int(&c);
        }
        if den.leading() < BigInt::zero() {
            num = num.neg();
            den = den.neg();
        }
        Scalar { num, den }
    }

    pub fn from_poly(p: Poly) -> Scalar {
        Scalar {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn from_integer(n: i64) -> Scalar {
        Scalar::from_poly(Poly::constant(BigInt::from(n)))
    }

    pub fn from_rational(r: &BigRational) -> Scalar {
        Scalar::reduce(
            Poly::constant(r.numer().clone()),
            Poly::constant(r.denom().clone()),
        )
    }

    /// The generic parameter `t`.
    pub fn t() -> Scalar {
        Scalar::from_poly(Poly::t())
    }

    pub fn zero() -> Scalar {
        Scalar::from_integer(0)
    }

    pub fn one() -> Scalar {
        Scalar::from_integer(1)
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Returns the value as a rational number when the scalar is constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num.degree().unwrap_or(0) == 0 && self.den.degree().unwrap_or(0) == 0 {
            let n = self.num.coeffs().first().cloned().unwrap_or_else(BigInt::zero);
            let d = self.den.coeffs()[0].clone();
            Some(BigRational::new(n, d))
        } else {
            None
        }
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        if other.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar::reduce(
            self.num.mul(&other.den),
            self.den.mul(&other.num),
        ))
    }

    pub fn inverse(&self) -> Result<Scalar, ScalarError> {
        Scalar::one().checked_div(self)
    }

    /// Raises to a (possibly negative) integer power.
    pub fn pow(&self, e: i64) -> Result<Scalar, ScalarError> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Evaluates at `t = v`, failing with a pole error when the reduced
    /// denominator vanishes there.
    pub fn specialize(&self, v: &BigRational) -> Result<Scalar, ScalarError> {
        let d = self.den.eval(v);
        if d.is_zero() {
            return Err(ScalarError::Pole(v.to_string()));
        }
        let n = self.num.eval(v);
        Ok(Scalar::from_rational(&(n / d)))
    }

    /// Parses the textual grammar, e.g. `(t^2+1)/(t-3)` or `3/2`.
    pub fn parse(input: &str) -> Result<Scalar, ScalarError> {
        parse::parse_scalar(input)
    }
}

impl FromStr for Scalar {
    type Err = ScalarError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Scalar::parse(s)
    }
}

impl fmt::Display for Scalar {
    /// Renders as a reduced fraction of polynomials, parenthesizing
    /// non-monomial parts: `(t^2+1)/(t-3)`, `t+1`, `-2/3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.num.render();
        if self.den.is_one() {
            return write!(f, "{n}");
        }
        let d = self.den.render();
        let wrap = |s: &str| {
            if s.contains('+') || (s.len() > 1 && s[1..].contains('-')) || s.contains('*') {
                format!("({s})")
            } else {
                s.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&n), wrap(&d))
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::reduce(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::reduce(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

/// Division panics on a zero divisor; use [`Scalar::checked_div`] where the
/// divisor is not known to be nonzero.
impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("scalar division by zero")
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn monomial_product() {
        let t = Scalar::t();
        let t2 = &t * &t;
        assert_eq!(t2.to_string(), "t^2");
    }

    #[test]
    fn reduction_forced() {
        // (t^2 - 1)/(t - 1) = t + 1 in canonical form.
        let num = Poly::new(vec![BigInt::from(-1), BigInt::from(0), BigInt::from(1)]);
        let den = Poly::new(vec![BigInt::from(-1), BigInt::from(1)]);
        let s = Scalar::from_fraction(num, den).unwrap();
        assert_eq!(s.to_string(), "t+1");
        assert!(s.denominator().is_one());
    }

    #[test]
    fn additive_inverse_across_sign_normalization() {
        // 1/(t-2) + 1/(2-t) = 0.
        let a = Scalar::parse("1/(t-2)").unwrap();
        let b = Scalar::parse("1/(2-t)").unwrap();
        assert!((&a + &b).is_zero());
    }

    #[test]
    fn specialize_basic() {
        let s = Scalar::parse("t+1").unwrap();
        assert_eq!(
            s.specialize(&rat(1, 1)).unwrap(),
            Scalar::from_integer(2)
        );
        let sq = Scalar::parse("t^2").unwrap();
        assert_eq!(
            sq.specialize(&rat(3, 2)).unwrap(),
            Scalar::from_rational(&rat(9, 4))
        );
    }

    #[test]
    fn specialize_pole() {
        let s = Scalar::parse("1/(t-2)").unwrap();
        assert!(matches!(
            s.specialize(&rat(2, 1)),
            Err(ScalarError::Pole(_))
        ));
    }

    #[test]
    fn pole_detection_happens_after_reduction() {
        // (t-2)/(t-2) reduces to 1, so t=2 is not a pole.
        let s = Scalar::parse("(t-2)/(t-2)").unwrap();
        assert_eq!(s.specialize(&rat(2, 1)).unwrap(), Scalar::one());
    }

    #[test]
    fn division_by_zero_detected() {
        assert_eq!(
            Scalar::one().checked_div(&Scalar::zero()),
            Err(ScalarError::DivisionByZero)
        );
    }

    #[test]
    fn rational_content_stays_canonical() {
        // 1/(2t) keeps integer content 2 in the denominator.
        let s = Scalar::parse("1/(2*t)").unwrap();
        assert_eq!(s.to_string(), "1/(2*t)");
        assert_eq!(&s * &Scalar::from_integer(2), Scalar::parse("1/t").unwrap());
    }

    #[test]
    fn display_parse_roundtrip() {
        for text in ["(t^2+1)/(t-3)", "t", "-1/2", "0", "(2*t+1)/3"] {
            let s = Scalar::parse(text).unwrap();
            assert_eq!(Scalar::parse(&s.to_string()).unwrap(), s);
        }
    }
}
