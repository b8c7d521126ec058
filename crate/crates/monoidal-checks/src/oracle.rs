//! Independent symmetric-group character oracle: Murnaghan–Nakayama
//! character tables, Kronecker coefficients, and their stable (reduced)
//! limits computed at two consecutive ranks.

use crate::MonError;
use num::{BigInt, Zero};
use scalar_field::Scalar;
use std::collections::HashMap;

/// The character table of `S_n` over the partitions of `n`.
pub struct SymCharacters {
    pub n: usize,
    /// Partitions of `n` in the enumeration order used by the table.
    pub partitions: Vec<Vec<usize>>,
    /// Conjugacy class sizes, indexed like `partitions`.
    pub class_sizes: Vec<BigInt>,
    /// `table[l][c] = χ^{partitions[l]}(partitions[c])`.
    pub table: Vec<Vec<BigInt>>,
}

fn partitions_of(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=max.min(n)).rev() {
            cur.push(k);
            rec(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |a, k| a * BigInt::from(k))
}

/// `n! / z_μ` where `z_μ = ∏ i^{m_i} m_i!` for the cycle type `μ`.
fn class_size(n: usize, mu: &[usize]) -> BigInt {
    let mut mult: HashMap<usize, usize> = HashMap::new();
    for &p in mu {
        *mult.entry(p).or_insert(0) += 1;
    }
    let mut z = BigInt::from(1);
    for (&i, &m) in &mult {
        z *= BigInt::from(i).pow(m as u32) * factorial(m);
    }
    factorial(n) / z
}

/// Murnaghan–Nakayama: `χ^λ(μ)` by peeling border strips of length
/// `μ[0]` from `λ`.
fn mn_char(lambda: &[usize], mu: &[usize], memo: &mut HashMap<(Vec<usize>, Vec<usize>), BigInt>) -> BigInt {
    if lambda.is_empty() {
        return BigInt::from(1);
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let k = mu[0];
    let rest = &mu[1..];
    let r = lambda.len();
    // Beta-set trick: remove a strip of size k from λ ⇔ subtract k from
    // one first-column hook length β_i = λ_i + r − 1 − i, keeping the set
    // distinct; the sign is the number of β_j passed over.
    let betas: Vec<i64> = lambda
        .iter()
        .enumerate()
        .map(|(i, &l)| l as i64 + (r - 1 - i) as i64)
        .collect();
    let mut total = BigInt::zero();
    for i in 0..r {
        let nb = betas[i] - k as i64;
        if nb < 0 || betas.contains(&nb) {
            continue;
        }
        let crossings = betas.iter().filter(|&&b| nb < b && b < betas[i]).count();
        let mut nbetas = betas.clone();
        nbetas[i] = nb;
        nbetas.sort_unstable_by(|a, b| b.cmp(a));
        let mut nl: Vec<usize> = nbetas
            .iter()
            .enumerate()
            .map(|(j, &b)| (b - (r - 1 - j) as i64) as usize)
            .collect();
        while nl.last() == Some(&0) {
            nl.pop();
        }
        let sub = mn_char(&nl, rest, memo);
        if crossings % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// Builds the full character table of `S_n`, verifying column
/// orthogonality as a self-check.
pub fn sym_characters(n: usize) -> Result<SymCharacters, MonError> {
    let partitions = partitions_of(n);
    let class_sizes: Vec<BigInt> = partitions.iter().map(|mu| class_size(n, mu)).collect();
    let mut memo = HashMap::new();
    let table: Vec<Vec<BigInt>> = partitions
        .iter()
        .map(|l| partitions.iter().map(|mu| mn_char(l, mu, &mut memo)).collect())
        .collect();
    // Row orthogonality: ⟨χ^λ, χ^κ⟩ = δ_{λκ}.
    let order = factorial(n);
    for (a, ra) in table.iter().enumerate() {
        for (b, rb) in table.iter().enumerate().skip(a) {
            let s: BigInt = (0..partitions.len())
                .map(|c| &class_sizes[c] * &ra[c] * &rb[c])
                .sum();
            let expect = if a == b { order.clone() } else { BigInt::zero() };
            if s != expect {
                return Err(MonError::Structure(format!(
                    "character table of S_{n} fails orthogonality at rows {a},{b}"
                )));
            }
        }
    }
    Ok(SymCharacters {
        n,
        partitions,
        class_sizes,
        table,
    })
}

impl SymCharacters {
    fn row(&self, lambda: &[usize]) -> Result<&[BigInt], MonError> {
        self.partitions
            .iter()
            .position(|p| p == lambda)
            .map(|i| self.table[i].as_slice())
            .ok_or_else(|| MonError::Structure(format!("{lambda:?} is not a partition of {}", self.n)))
    }

    /// `⟨χ^α · χ^β, χ^γ⟩`, the Kronecker coefficient `g(α, β, γ)`.
    pub fn kronecker(&self, alpha: &[usize], beta: &[usize], gamma: &[usize]) -> Result<BigInt, MonError> {
        let (ra, rb, rg) = (self.row(alpha)?, self.row(beta)?, self.row(gamma)?);
        let s: BigInt = (0..self.partitions.len())
            .map(|c| &self.class_sizes[c] * &ra[c] * &rb[c] * &rg[c])
            .sum();
        let order = factorial(self.n);
        if (&s % &order) != BigInt::zero() {
            return Err(MonError::Structure(
                "Kronecker inner product is not integral".into(),
            ));
        }
        Ok(s / order)
    }

    /// The dimension `f^λ = χ^λ(1^n)`.
    pub fn dim(&self, lambda: &[usize]) -> Result<BigInt, MonError> {
        Ok(self.row(lambda)?[self.partitions.len() - 1].clone())
    }
}

/// All partitions of every size `0..=max`.
pub fn partitions_up_to(max: usize) -> Vec<Vec<usize>> {
    (0..=max).flat_map(partitions_of).collect()
}

/// `f^λ` by the hook length formula.
pub fn hook_dimension(lambda: &[usize]) -> BigInt {
    let n: usize = lambda.iter().sum();
    let mut hooks = BigInt::from(1);
    for (i, &li) in lambda.iter().enumerate() {
        for j in 0..li {
            let arm = li - 1 - j;
            let leg = lambda[i + 1..].iter().filter(|&&lk| lk > j).count();
            hooks *= BigInt::from(arm + leg + 1);
        }
    }
    factorial(n) / hooks
}

/// The stable dimension `f^{ν[n]}` as a polynomial in `n`, evaluated at
/// the scalar `u` by Lagrange interpolation; two independent sample
/// windows must agree, certifying the degree bound.
pub fn stable_dim_at(nu: &[usize], u: &Scalar) -> Result<Scalar, MonError> {
    let deg = nu.iter().sum::<usize>();
    let start = deg + nu.first().copied().unwrap_or(0);
    let eval = |points: std::ops::RangeInclusive<usize>| -> Scalar {
        let pts: Vec<usize> = points.collect();
        let mut acc = Scalar::zero();
        for &ni in &pts {
            use num::ToPrimitive;
            let fi = hook_dimension(&padded(nu, ni).expect("valid padding"));
            let mut term = Scalar::from_integer(fi.to_i64().expect("small dimension"));
            for &nj in &pts {
                if nj != ni {
                    let num = u - &Scalar::from_integer(nj as i64);
                    let den = Scalar::from_integer(ni as i64 - nj as i64);
                    term = &term * &(&num / &den);
                }
            }
            acc = &acc + &term;
        }
        acc
    };
    let a = eval(start..=start + deg);
    let b = eval(start + 1..=start + deg + 1);
    if a != b {
        return Err(MonError::Structure(format!(
            "stable dimension of {nu:?} is not a degree-{deg} polynomial"
        )));
    }
    Ok(a)
}

/// Kronecker coefficient of three partitions of a common `n`.
pub fn kronecker_coefficient(
    alpha: &[usize],
    beta: &[usize],
    gamma: &[usize],
) -> Result<BigInt, MonError> {
    let n: usize = alpha.iter().sum();
    if beta.iter().sum::<usize>() != n || gamma.iter().sum::<usize>() != n {
        return Err(MonError::Structure(
            "Kronecker coefficient needs partitions of a common size".into(),
        ));
    }
    sym_characters(n)?.kronecker(alpha, beta, gamma)
}

/// Pads a partition `ν` to the partition `ν[n] = (n − |ν|, ν)` of `n`,
/// when that is a partition.
pub fn padded(nu: &[usize], n: usize) -> Option<Vec<usize>> {
    let size: usize = nu.iter().sum();
    if size > n {
        return None;
    }
    let head = n - size;
    if let Some(&first) = nu.first() {
        if head < first {
            return None;
        }
    }
    let mut out = vec![head];
    out.extend_from_slice(nu);
    while out.last() == Some(&0) {
        out.pop();
    }
    Some(out)
}

/// The reduced Kronecker coefficient `ḡ(λ, μ, ν)` of three small
/// partitions, computed at two consecutive stable ranks that must agree.
pub fn reduced_kronecker(
    lambda: &[usize],
    mu: &[usize],
    nu: &[usize],
) -> Result<BigInt, MonError> {
    let sizes: usize = [lambda, mu, nu].iter().map(|p| p.iter().sum::<usize>()).sum();
    // n ≥ |λ| + |μ| + |ν| plus the largest first part keeps every
    // padding a partition and sits safely in the stable range.
    let widest = [lambda, mu, nu]
        .iter()
        .filter_map(|p| p.first().copied())
        .max()
        .unwrap_or(0);
    let n0 = sizes.max(1) + widest;
    let mut vals = Vec::new();
    for n in [n0, n0 + 1] {
        let sc = sym_characters(n)?;
        let (a, b, g) = (
            padded(lambda, n).ok_or_else(|| MonError::Structure("padding failed".into()))?,
            padded(mu, n).ok_or_else(|| MonError::Structure("padding failed".into()))?,
            padded(nu, n).ok_or_else(|| MonError::Structure("padding failed".into()))?,
        );
        vals.push(sc.kronecker(&a, &b, &g)?);
    }
    if vals[0] != vals[1] {
        return Err(MonError::Structure(format!(
            "Kronecker coefficients not yet stable at ranks {n0},{}",
            n0 + 1
        )));
    }
    Ok(vals.pop().expect("two values"))
}
