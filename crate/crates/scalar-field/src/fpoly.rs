//! Univariate polynomials with coefficients in the scalar field, used for
//! minimal polynomials of algebra elements: Euclidean arithmetic, squarefree
//! decomposition, and root extraction within the field.

use crate::factor::{irreducible_factors, rational_roots};
use crate::poly::Poly;
use crate::Scalar;
use num::{BigInt, BigRational, One, Zero};

/// A polynomial in one variable `x` over the scalar field; `coeffs[i]` is
/// the coefficient of `x^i`, with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FPoly {
    coeffs: Vec<Scalar>,
}

impl FPoly {
    pub fn new(mut coeffs: Vec<Scalar>) -> FPoly {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        FPoly { coeffs }
    }

    pub fn zero() -> FPoly {
        FPoly { coeffs: Vec::new() }
    }

    pub fn one() -> FPoly {
        FPoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> FPoly {
        FPoly::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> FPoly {
        FPoly::new(vec![Scalar::zero(), Scalar::one()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add(&self, other: &FPoly) -> FPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        FPoly::new((0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &FPoly) -> FPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        FPoly::new((0..n).map(|i| &self.coeff(i) - &other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &FPoly) -> FPoly {
        if self.is_zero() || other.is_zero() {
            return FPoly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        FPoly::new(out)
    }

    pub fn scale(&self, c: &Scalar) -> FPoly {
        FPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division: `self = q·div + r` with `deg r < deg div`.
    pub fn divrem(&self, div: &FPoly) -> (FPoly, FPoly) {
        assert!(!div.is_zero(), "division by the zero polynomial");
        let d = div.degree().unwrap();
        let lead_inv = div.leading().inverse().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Scalar::zero(); self.coeffs.len().saturating_sub(d)];
        while rem.len() > d {
            let k = rem.len() - 1 - d;
            let c = &rem[rem.len() - 1] * &lead_inv;
            if !c.is_zero() {
                for (i, b) in div.coeffs.iter().enumerate() {
                    rem[k + i] = &rem[k + i] - &(&c * b);
                }
                quot[k] = c;
            }
            rem.pop();
        }
        (FPoly::new(quot), FPoly::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &FPoly) -> FPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: returns `(g, u, v)` with `u·self + v·other = g`
    /// monic.
    pub fn extended_gcd(&self, other: &FPoly) -> (FPoly, FPoly, FPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut u0, mut u1) = (FPoly::one(), FPoly::zero());
        let (mut v0, mut v1) = (FPoly::zero(), FPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let u = u0.sub(&q.mul(&u1));
            let v = v0.sub(&q.mul(&v1));
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = u;
            v0 = v1;
            v1 = v;
        }
        if r0.is_zero() {
            return (FPoly::zero(), u0, v0);
        }
        let lead_inv = Scalar::one().checked_div(&r0.leading()).unwrap();
        (r0.scale(&lead_inv), u0.scale(&lead_inv), v0.scale(&lead_inv))
    }

    pub fn monic(&self) -> FPoly {
        if self.is_zero() {
            return FPoly::zero();
        }
        self.scale(&self.leading().inverse().expect("nonzero leading coefficient"))
    }

    pub fn derivative(&self) -> FPoly {
        FPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Scalar::from_integer(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, v: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * v) + c;
        }
        acc
    }

    /// Squarefree decomposition (Yun): returns `(A_i, i)` with the `A_i`
    /// squarefree, pairwise coprime, and `self = lc · ∏ A_i^i`.
    pub fn squarefree_decomposition(&self) -> Vec<(FPoly, usize)> {
        let f = self.monic();
        let d = f.derivative();
        let mut out = Vec::new();
        let a = f.gcd(&d);
        if a.degree() == Some(0) {
            if f.degree().unwrap_or(0) > 0 {
                out.push((f, 1));
            }
            return out;
        }
        let (mut b, _) = f.divrem(&a);
        let (db, _) = d.divrem(&a);
        let mut c = db.sub(&b.derivative());
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let p = b.gcd(&c);
            if p.degree().unwrap_or(0) > 0 {
                out.push((p.clone(), i));
            }
            let (nb, _) = b.divrem(&p);
            let (nc0, _) = c.divrem(&p);
            c = nc0.sub(&nb.derivative());
            b = nb;
            i += 1;
        }
        out
    }

    /// All roots of `self` that lie in the scalar field, without
    /// multiplicity.  Works for arbitrary coefficients: constant-coefficient
    /// polynomials reduce to rational root extraction, and genuinely
    /// parameter-dependent ones to divisor enumeration of the (integral)
    /// constant term in the polynomial ring.
    pub fn field_roots(&self) -> Vec<Scalar> {
        let mut f = self.monic();
        if f.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let mut roots = Vec::new();
        // Strip roots at zero.
        while f.coeff(0).is_zero() && f.degree().unwrap_or(0) > 0 {
            if roots.is_empty() {
                roots.push(Scalar::zero());
            }
            let (q, r) = f.divrem(&FPoly::x());
            assert!(r.is_zero());
            f = q;
        }
        if f.degree().unwrap_or(0) == 0 {
            return roots;
        }
        // Common denominator d(t) of the coefficients; substituting
        // y = d·x makes the polynomial monic with coefficients in Q[t], so
        // y-roots are polynomials dividing the constant term.
        let mut den = Poly::one();
        for c in f.coeffs() {
            let g = den.gcd(c.denominator());
            den = den.mul(&c.denominator().div_exact(&g));
        }
        let n = f.degree().unwrap();
        // b_i = a_i · d^{n-i}; the y-polynomial is  y^n + Σ b_i y^i  with
        // b_i ∈ Q(t) actually in (1/content)·Q[t]; we only need the
        // constant term's numerator for candidate enumeration.
        let d_scalar = Scalar::from_poly(den.clone());
        let b0 = &f.coeff(0) * &d_scalar.pow(n as i64).expect("nonnegative power");
        debug_assert!(b0.denominator().degree() == Some(0));
        let b0_num = b0.numerator().primitive();
        let factors = irreducible_factors(&b0_num);
        // Enumerate monic divisor shapes D(t) of the constant term.
        let mut shapes = vec![Poly::one()];
        for (p, e) in &factors {
            if p.degree() == Some(0) {
                continue;
            }
            let mut next = Vec::new();
            for s in &shapes {
                let mut power = Poly::one();
                for _ in 0..=*e {
                    next.push(s.mul(&power));
                    power = power.mul(p);
                }
            }
            shapes = next;
        }
        for shape in shapes {
            // Candidate y-root γ·D(t): substitute and solve for rational γ.
            // Collecting μ̃(γD) by powers of t gives rational polynomials in
            // γ whose common rational roots are the admissible values.
            let d_shape = Scalar::from_poly(shape.clone());
            // Coefficient of γ^i is  b_i·D^i  where b_i = a_i·d^{n-i}.
            let mut gamma_coeffs: Vec<Scalar> = Vec::with_capacity(n + 1);
            for i in 0..=n {
                let bi = &f.coeff(i) * &d_scalar.pow((n - i) as i64).expect("nonnegative");
                gamma_coeffs.push(&bi * &d_shape.pow(i as i64).expect("nonnegative"));
            }
            // Pick the lowest t-degree row that is not identically zero:
            // for each power of t, Σ_i γ^i [t^j](c_i) must vanish.
            let max_t = gamma_coeffs
                .iter()
                .map(|c| c.numerator().degree().unwrap_or(0))
                .max()
                .unwrap_or(0);
            let mut candidates: Option<Vec<BigRational>> = None;
            for j in 0..=max_t {
                // Row of rational numbers: the t^j-coefficient of each
                // γ-coefficient.  Clear the (constant) denominators to get
                // an integer polynomial in γ.
                let rationals: Vec<BigRational> = gamma_coeffs
                    .iter()
                    .map(|c| {
                        debug_assert_eq!(c.denominator().degree(), Some(0));
                        let num = c
                            .numerator()
                            .coeffs()
                            .get(j)
                            .cloned()
                            .unwrap_or_else(BigInt::zero);
                        BigRational::new(num, c.denominator().coeffs()[0].clone())
                    })
                    .collect();
                let mut lcm_den = BigInt::one();
                for r in &rationals {
                    let g = num::Integer::gcd(&lcm_den, r.denom());
                    lcm_den = lcm_den / g * r.denom();
                }
                let row = Poly::new(
                    rationals
                        .iter()
                        .map(|r| r.numer() * (&lcm_den / r.denom()))
                        .collect(),
                );
                if row.is_zero() {
                    continue;
                }
                candidates = Some(rational_roots(&row));
                break;
            }
            let Some(cands) = candidates else { continue };
            for gamma in cands {
                if gamma.is_zero() {
                    continue;
                }
                // x-root candidate: γ·D(t)/d(t).
                let root = Scalar::from_fraction(
                    shape.scale(gamma.numer()),
                    den.scale(gamma.denom()),
                )
                .expect("denominator nonzero");
                if f.eval(&root).is_zero() && !roots.contains(&root) {
                    roots.push(root);
                }
            }
        }
        roots
    }

    /// Attempts a nontrivial coprime factorization `self = f·g` with
    /// `gcd(f,g) = 1` and both factors nonconstant, via squarefree
    /// decomposition, field roots, and (for constant coefficients) full
    /// integer factorization.
    pub fn coprime_split(&self) -> Option<(FPoly, FPoly)> {
        let f = self.monic();
        let n = f.degree()?;
        if n < 2 {
            return None;
        }
        let parts = f.squarefree_decomposition();
        if parts.len() > 1 {
            let first = pow(&parts[0].0, parts[0].1);
            let (rest, r) = f.divrem(&first);
            assert!(r.is_zero());
            return Some((first, rest));
        }
        let (base, mult) = parts.into_iter().next()?;
        // Split the squarefree base; a split of the base lifts to a split
        // of the power.
        let split = split_squarefree(&base)?;
        Some((pow(&split.0, mult), pow(&split.1, mult)))
    }
}

fn pow(f: &FPoly, e: usize) -> FPoly {
    let mut out = FPoly::one();
    for _ in 0..e {
        out = out.mul(f);
    }
    out
}

/// Splits a squarefree monic polynomial into two coprime nonconstant
/// factors, if possible with exact field arithmetic.
fn split_squarefree(f: &FPoly) -> Option<(FPoly, FPoly)> {
    let n = f.degree()?;
    if n < 2 {
        return None;
    }
    let roots = f.field_roots();
    if !roots.is_empty() {
        let mut lin = FPoly::one();
        for r in &roots {
            lin = lin.mul(&FPoly::new(vec![-r, Scalar::one()]));
        }
        if lin.degree() == Some(n) {
            // Fully split: separate the first root from the rest.
            let first = FPoly::new(vec![-&roots[0], Scalar::one()]);
            let (rest, r) = f.divrem(&first);
            assert!(r.is_zero());
            return Some((first, rest));
        }
        let (rest, r) = f.divrem(&lin);
        assert!(r.is_zero());
        return Some((lin, rest));
    }
    // No roots in the field: if all coefficients are constants, fall back
    // to full factorization over the rationals.
    if f.coeffs().iter().all(|c| {
        c.numerator().degree().unwrap_or(0) == 0 && c.denominator().degree().unwrap_or(0) == 0
    }) {
        let mut den = BigInt::one();
        for c in f.coeffs() {
            den *= &c.denominator().coeffs()[0];
        }
        let int_poly = Poly::new(
            (0..=n)
                .map(|i| {
                    let c = f.coeff(i);
                    let num = c.numerator().coeffs().first().cloned().unwrap_or_else(BigInt::zero);
                    let cd = c.denominator().coeffs()[0].clone();
                    num * (&den / cd)
                })
                .collect(),
        )
        .primitive();
        let factors = irreducible_factors(&int_poly);
        let nonconst: Vec<&Poly> = factors
            .iter()
            .filter(|(p, _)| p.degree().unwrap_or(0) > 0)
            .map(|(p, _)| p)
            .collect();
        if nonconst.len() > 1 {
            let first = FPoly::new(
                nonconst[0]
                    .coeffs()
                    .iter()
                    .map(|c| Scalar::from_poly(Poly::constant(c.clone())))
                    .collect(),
            )
            .monic();
            let (rest, r) = f.divrem(&first);
            assert!(r.is_zero());
            return Some((first, rest));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scalar {
        Scalar::parse(text).unwrap()
    }

    /// ∏ (x - r_i) for the given roots.
    fn from_roots(roots: &[Scalar]) -> FPoly {
        let mut f = FPoly::one();
        for r in roots {
            f = f.mul(&FPoly::new(vec![-r, Scalar::one()]));
        }
        f
    }

    #[test]
    fn divrem_roundtrip() {
        let f = from_roots(&[s("t"), s("1/2"), s("t^2-1")]);
        let g = from_roots(&[s("t"), s("3")]);
        let (q, r) = f.divrem(&g);
        assert_eq!(q.mul(&g).add(&r), f);
    }

    #[test]
    fn extended_gcd_bezout() {
        let a = from_roots(&[s("t"), s("2")]);
        let b = from_roots(&[s("t"), s("5")]);
        let (g, u, v) = a.extended_gcd(&b);
        assert_eq!(g, from_roots(&[s("t")]));
        assert_eq!(u.mul(&a).add(&v.mul(&b)), g);
    }

    #[test]
    fn field_roots_with_parameter_dependence() {
        // Roots 0, u, (t-1)/2, and 3: all must be recovered.
        let roots = [s("0"), s("t"), s("(t-1)/2"), s("3")];
        let f = from_roots(&roots);
        let mut found = f.field_roots();
        found.sort_by(|a, b| format!("{a}").cmp(&format!("{b}")));
        let mut expected = roots.to_vec();
        expected.sort_by(|a, b| format!("{a}").cmp(&format!("{b}")));
        assert_eq!(found, expected);
    }

    #[test]
    fn field_roots_skips_irrational() {
        // x^2 - t has no roots in Q(t).
        let f = FPoly::new(vec![-&s("t"), Scalar::zero(), Scalar::one()]);
        assert!(f.field_roots().is_empty());
    }

    #[test]
    fn squarefree_decomposition_splits_powers() {
        let a = from_roots(&[s("t")]);
        let b = from_roots(&[s("1")]);
        let f = a.mul(&b).mul(&b);
        let parts = f.squarefree_decomposition();
        assert_eq!(parts, vec![(a, 1), (b, 2)]);
    }

    #[test]
    fn coprime_split_finds_a_factorization() {
        let f = from_roots(&[s("t"), s("t"), s("2")]);
        let (p, q) = f.coprime_split().unwrap();
        assert_eq!(p.mul(&q), f.monic());
        assert_eq!(p.gcd(&q), FPoly::one());
        assert!(p.degree().unwrap() >= 1 && q.degree().unwrap() >= 1);
    }

    #[test]
    fn coprime_split_constant_coefficients_without_roots() {
        // (x^2+1)(x^2+2): constant coefficients, no rational roots.
        let f = FPoly::new(vec![s("2"), s("0"), s("3"), s("0"), s("1")]);
        let (p, q) = f.coprime_split().unwrap();
        assert_eq!(p.mul(&q), f);
        assert_eq!(p.gcd(&q), FPoly::one());
    }

    #[test]
    fn coprime_split_declines_irreducible_powers() {
        // (x^2 - t)^2 admits no coprime split.
        let base = FPoly::new(vec![-&s("t"), Scalar::zero(), Scalar::one()]);
        let f = base.mul(&base);
        assert!(f.coprime_split().is_none());
    }
}
