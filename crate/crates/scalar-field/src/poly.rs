//! Dense univariate polynomials over the big integers.
//!
//! These are the numerators and denominators of [`crate::Scalar`].  The
//! coefficient vector stores the coefficient of `t^i` at index `i` and never
//! has a trailing zero, so the zero polynomial is the empty vector and
//! structural equality is semantic equality.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

/// A polynomial in one variable `t` with `BigInt` coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    /// Builds a polynomial from raw coefficients (index = exponent),
    /// trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Poly::new(vec![c])
    }

    /// The variable `t` itself.
    pub fn t() -> Self {
        Poly::new(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    /// Nonnegative gcd of all coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    pub fn neg(&self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Poly::new(out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides every coefficient by `c`, which must divide exactly.
    pub fn div_exact_int(&self, c: &BigInt) -> Poly {
        assert!(!c.is_zero(), "division of a polynomial by zero content");
        Poly::new(
            self.coeffs
                .iter()
                .map(|a| {
                    let (q, r) = a.div_rem(c);
                    assert!(r.is_zero(), "inexact integer division in polynomial");
                    q
                })
                .collect(),
        )
    }

    /// Exact polynomial division; panics if `other` does not divide `self`.
    /// Used only after a gcd computation has established divisibility.
    pub fn div_exact(&self, other: &Poly) -> Poly {
        let (q, r) = self.divrem_rational(other);
        assert!(r.iter().all(|c| c.is_zero()), "inexact polynomial division");
        Poly::new(
            q.into_iter()
                .map(|c| {
                    assert!(c.is_integer(), "non-integral quotient in exact division");
                    c.to_integer()
                })
                .collect(),
        )
    }

    /// Long division over Q: returns (quotient, remainder) coefficient
    /// vectors with rational entries.
    fn divrem_rational(&self, other: &Poly) -> (Vec<BigRational>, Vec<BigRational>) {
        assert!(!other.is_zero(), "polynomial division by zero");
        let mut rem: Vec<BigRational> = self
            .coeffs
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let d = other.coeffs.len() - 1;
        let lead = BigRational::from_integer(other.leading());
        if rem.len() <= d {
            return (vec![], rem);
        }
        let mut quot = vec![BigRational::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            let c = rem[i].clone() / lead.clone();
            if c.is_zero() {
                continue;
            }
            quot[i - d] = c.clone();
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = &c * BigRational::from_integer(b.clone());
                rem[i - d + j] -= t;
            }
        }
        rem.truncate(d);
        (quot, rem)
    }

    /// Primitive part: the polynomial divided by its content, with positive
    /// leading coefficient.  Zero maps to zero.
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut p = self.div_exact_int(&self.content());
        if p.leading().is_negative() {
            p = p.neg();
        }
        p
    }

    /// Primitive gcd in Z[t] (computed over Q then made primitive).
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.primitive();
        }
        if other.is_zero() {
            return self.primitive();
        }
        let mut a = self.primitive();
        let mut b = other.primitive();
        while !b.is_zero() {
            let (_, r) = a.divrem_rational(&b);
            // Clear denominators to return to Z[t] before taking the
            // primitive part.
            let mut lcm = BigInt::one();
            for c in &r {
                lcm = lcm.lcm(c.denom());
            }
            let r = Poly::new(
                r.into_iter()
                    .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
                    .collect(),
            );
            a = b;
            b = r.primitive();
        }
        a
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, v: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * v + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Renders in the conventional descending-degree form, e.g. `t^2-2t+1`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign_positive = !c.is_negative();
            if out.is_empty() {
                if !sign_positive {
                    out.push('-');
                }
            } else {
                out.push(if sign_positive { '+' } else { '-' });
            }
            let mag = c.abs();
            match i {
                0 => out.push_str(&mag.to_string()),
                _ => {
                    if !mag.is_one() {
                        out.push_str(&mag.to_string());
                        out.push('*');
                    }
                    out.push('t');
                    if i > 1 {
                        out.push_str(&format!("^{i}"));
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Poly {
        Poly::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn gcd_of_t2_minus_1_and_t_minus_1() {
        let g = p(&[-1, 0, 1]).gcd(&p(&[-1, 1]));
        assert_eq!(g, p(&[-1, 1]));
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = p(&[2, 3, 1]); // (t+1)(t+2)
        let b = p(&[1, 1]);
        assert_eq!(a.div_exact(&b), p(&[2, 1]));
    }

    #[test]
    fn content_and_primitive() {
        let a = p(&[4, -6]);
        assert_eq!(a.content(), BigInt::from(2));
        assert_eq!(a.primitive(), p(&[-2, 3]));
    }

    #[test]
    fn render_descending() {
        assert_eq!(p(&[1, -2, 1]).render(), "t^2-2*t+1");
        assert_eq!(p(&[0, 3]).render(), "3*t");
        assert_eq!(p(&[]).render(), "0");
    }
}
