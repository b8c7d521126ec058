//! Exact factorization of integer polynomials over the rationals: rational
//! root extraction and Kronecker interpolation for higher-degree factors.
//! Degrees in practice are small (minimal polynomials of small algebras),
//! so the divisor-combination search is affordable.

use crate::poly::Poly;
use num::{BigInt, BigRational, Integer, One, Signed, Zero};

/// Positive divisors of `n ≠ 0` by trial division.  Prime cofactors beyond
/// the trial bound are treated as prime.
pub fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut m = n.abs();
    assert!(!m.is_zero(), "divisors of zero are unbounded");
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut p = BigInt::from(2);
    let bound = BigInt::from(1_000_000u64);
    while &p * &p <= m && p <= bound {
        let mut e = 0;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e > 0 {
            primes.push((p.clone(), e));
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    if m > BigInt::one() {
        primes.push((m, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::new();
        for d in &divs {
            let mut power = BigInt::one();
            for _ in 0..=e {
                next.push(d * &power);
                power *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs.dedup();
    divs
}

/// All rational roots of a nonzero integer polynomial.
pub fn rational_roots(f: &Poly) -> Vec<BigRational> {
    assert!(!f.is_zero());
    let mut roots = Vec::new();
    let coeffs = f.coeffs();
    let low = coeffs.iter().position(|c| !c.is_zero()).unwrap();
    if low > 0 {
        roots.push(BigRational::zero());
    }
    if f.degree() == Some(low) {
        return roots;
    }
    let a0 = coeffs[low].clone();
    let lead = f.leading();
    for p in divisors(&a0) {
        for q in divisors(&lead) {
            if p.gcd(&q) != BigInt::one() {
                continue;
            }
            for sign in [1i32, -1] {
                let cand = BigRational::new(&p * BigInt::from(sign), q.clone());
                if f.eval(&cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand.clone());
                }
            }
        }
    }
    roots
}

/// Exact division in `Q[x]`: returns the primitive integer quotient if
/// `g | f` over the rationals, `None` otherwise.
fn div_exact_q(f: &Poly, g: &Poly) -> Option<Poly> {
    let dg = g.degree()?;
    let df = f.degree()?;
    if df < dg {
        return None;
    }
    let mut rem: Vec<BigRational> = f
        .coeffs()
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    let lead = BigRational::from_integer(g.leading());
    let mut quot = vec![BigRational::zero(); df - dg + 1];
    for k in (0..=df - dg).rev() {
        let c = &rem[k + dg] / &lead;
        if !c.is_zero() {
            for (i, b) in g.coeffs().iter().enumerate() {
                let delta = &c * BigRational::from_integer(b.clone());
                rem[k + i] -= delta;
            }
        }
        quot[k] = c;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    let mut lcm = BigInt::one();
    for c in &quot {
        let g0 = lcm.gcd(c.denom());
        lcm = lcm / g0 * c.denom();
    }
    Some(Poly::new(quot.iter().map(|c| c.numer() * (&lcm / c.denom())).collect()).primitive())
}

/// A single nontrivial factor of a primitive integer polynomial of degree
/// ≥ 2, or `None` if irreducible over the rationals.
fn find_factor(f: &Poly) -> Option<Poly> {
    let n = f.degree()?;
    debug_assert!(n >= 2);
    // Linear factors first.
    let roots = rational_roots(f);
    if let Some(r) = roots.first() {
        return Some(Poly::new(vec![-r.numer().clone(), r.denom().clone()]));
    }
    if n < 4 {
        // Degree 2 or 3 with no rational roots is irreducible.
        return None;
    }
    // Kronecker interpolation for a factor of degree m ≤ n/2.
    let m = n / 2;
    // Sample points 0, 1, -1, 2, -2, … with nonzero values.
    let mut points: Vec<BigInt> = Vec::new();
    let mut k = 0i64;
    while points.len() < m + 1 {
        for cand in [BigInt::from(k), BigInt::from(-k)] {
            if points.len() == m + 1 || points.contains(&cand) {
                continue;
            }
            let v = f.eval(&BigRational::from_integer(cand.clone()));
            if !v.is_zero() {
                points.push(cand);
            }
        }
        k += 1;
    }
    let value_divisors: Vec<Vec<BigInt>> = points
        .iter()
        .map(|x| {
            let v = f.eval(&BigRational::from_integer(x.clone()));
            let mut ds = divisors(v.numer());
            let negs: Vec<BigInt> = ds.iter().map(|d| -d).collect();
            ds.extend(negs);
            ds
        })
        .collect();
    let mut index = vec![0usize; m + 1];
    loop {
        let values: Vec<BigInt> = index
            .iter()
            .enumerate()
            .map(|(i, &j)| value_divisors[i][j].clone())
            .collect();
        if let Some(g) = interpolate_integer(&points, &values) {
            if g.degree().unwrap_or(0) >= 1 && g.degree().unwrap_or(0) < n {
                let gp = g.primitive();
                if div_exact_q(f, &gp).is_some() {
                    return Some(gp);
                }
            }
        }
        // Advance the odometer over divisor combinations.
        let mut pos = 0;
        loop {
            if pos > m {
                return None;
            }
            index[pos] += 1;
            if index[pos] < value_divisors[pos].len() {
                break;
            }
            index[pos] = 0;
            pos += 1;
        }
    }
}

/// Lagrange interpolation; returns the polynomial cleared to integer
/// coefficients if all coefficients are integral, `None` otherwise.
fn interpolate_integer(points: &[BigInt], values: &[BigInt]) -> Option<Poly> {
    let n = points.len();
    let mut acc: Vec<BigRational> = vec![BigRational::zero(); n];
    for i in 0..n {
        // The i-th Lagrange basis polynomial, scaled by values[i].
        let mut basis = vec![BigRational::from_integer(values[i].clone())];
        let mut denom = BigRational::one();
        for j in 0..n {
            if j == i {
                continue;
            }
            // Multiply by (x - x_j).
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            let xj = BigRational::from_integer(points[j].clone());
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * &xj;
            }
            basis = next;
            denom *= BigRational::from_integer(points[i].clone()) - xj;
        }
        for (k, c) in basis.iter().enumerate() {
            acc[k] += c / &denom;
        }
    }
    if acc.iter().any(|c| !c.denom().is_one()) {
        return None;
    }
    Some(Poly::new(acc.iter().map(|c| c.numer().clone()).collect()))
}

/// Full factorization of a nonzero integer polynomial into primitive
/// irreducible factors over the rationals, with multiplicities.  The
/// content is discarded; factors are normalized with positive leading
/// coefficient.
pub fn irreducible_factors(f: &Poly) -> Vec<(Poly, usize)> {
    let mut out: Vec<(Poly, usize)> = Vec::new();
    let mut stack = vec![f.primitive()];
    while let Some(mut g) = stack.pop() {
        if g.leading() < BigInt::zero() {
            g = g.neg();
        }
        match g.degree() {
            None | Some(0) => continue,
            Some(1) => push_factor(&mut out, g),
            Some(_) => match find_factor(&g) {
                None => push_factor(&mut out, g),
                Some(h) => {
                    let q = div_exact_q(&g, &h).expect("found factor divides");
                    stack.push(h);
                    stack.push(q);
                }
            },
        }
    }
    out.sort_by(|a, b| a.0.coeffs().cmp(b.0.coeffs()));
    out
}

fn push_factor(out: &mut Vec<(Poly, usize)>, mut g: Poly) {
    if g.leading() < BigInt::zero() {
        g = g.neg();
    }
    for (p, e) in out.iter_mut() {
        if *p == g {
            *e += 1;
            return;
        }
    }
    out.push((g, 1));
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cs: &[i64]) -> Poly {
        Poly::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn divisors_of_12() {
        let ds: Vec<i64> = divisors(&BigInt::from(12))
            .iter()
            .map(|d| d.try_into().unwrap())
            .collect();
        assert_eq!(ds, vec![1, 2, 3, 4, 6, 12]);
    }

    #[test]
    fn rational_roots_of_quadratic() {
        // 2x^2 - x - 1 = (2x + 1)(x - 1).
        let mut roots = rational_roots(&poly(&[-1, -1, 2]));
        roots.sort();
        assert_eq!(
            roots,
            vec![
                BigRational::new(BigInt::from(-1), BigInt::from(2)),
                BigRational::one()
            ]
        );
    }

    #[test]
    fn kronecker_splits_two_quadratics() {
        // (x^2+1)(x^2+x+1) has no rational roots.
        let f = poly(&[1, 0, 1]).mul(&poly(&[1, 1, 1]));
        let factors = irreducible_factors(&f);
        assert_eq!(factors.len(), 2);
        assert!(factors.iter().all(|(_, e)| *e == 1));
        assert!(factors.iter().any(|(p, _)| *p == poly(&[1, 0, 1])));
        assert!(factors.iter().any(|(p, _)| *p == poly(&[1, 1, 1])));
    }

    #[test]
    fn irreducible_quartic_detected() {
        // x^4 + x + 1 is irreducible over Q.
        let factors = irreducible_factors(&poly(&[1, 1, 0, 0, 1]));
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0], (poly(&[1, 1, 0, 0, 1]), 1));
    }

    #[test]
    fn multiplicities_are_collected() {
        // (x-1)^2 (x+2).
        let f = poly(&[-1, 1]).mul(&poly(&[-1, 1])).mul(&poly(&[2, 1]));
        let factors = irreducible_factors(&f);
        assert_eq!(factors.len(), 2);
        assert!(factors.contains(&(poly(&[-1, 1]), 2)));
        assert!(factors.contains(&(poly(&[2, 1]), 1)));
    }
}
