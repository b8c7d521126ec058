//! Fiber products, Mal'cev pushouts of surjections, automorphism groups,
//! and the built-in one-parameter degree functions.

use crate::fq::FqMat;
use crate::morphism::{enumerate_morphisms, MorData, RMorphism};
use crate::object::{Backend, BackendError, Limits, RObject};
use scalar_field::Scalar;

/// Union-find for the FinSetOp pullback (a pushout in the set world).
struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, i: usize) -> usize {
        if self.0[i] != i {
            let r = self.find(self.0[i]);
            self.0[i] = r;
        }
        self.0[i]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // Keep the smaller index as representative for canonical labels.
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.0[hi] = lo;
        }
    }
}

/// Universal fiber product of `f: X→Z`, `g: Y→Z`; returns `(P, p: P→X, q: P→Y)`
/// with `f∘p = g∘q`.
pub fn pullback(
    f: &RMorphism,
    g: &RMorphism,
) -> Result<(RObject, RMorphism, RMorphism), BackendError> {
    if f.source.backend != g.source.backend {
        return Err(BackendError::BackendMismatch);
    }
    assert_eq!(f.target, g.target, "pullback needs a common target");
    let (x, y) = (f.source, g.source);
    match (&f.data, &g.data) {
        (MorData::SetMap(fm), MorData::SetMap(gm)) => {
            // Set-world pushout of the span (f_set: Z→X, g_set: Z→Y):
            // glue X ⊔ Y along the two images of each z ∈ Z.
            let mut uf = UnionFind::new(x.n + y.n);
            for z in 0..f.target.n {
                uf.union(fm[z], x.n + gm[z]);
            }
            // Canonical class labels in order of first appearance.
            let mut label = vec![usize::MAX; x.n + y.n];
            let mut count = 0;
            for i in 0..x.n + y.n {
                let r = uf.find(i);
                if label[r] == usize::MAX {
                    label[r] = count;
                    count += 1;
                }
                label[i] = label[r];
            }
            let p = Backend::FinSetOp.object(count);
            let leg_x = RMorphism::set_map(p, x, label[..x.n].to_vec());
            let leg_y = RMorphism::set_map(p, y, label[x.n..].to_vec());
            Ok((p, leg_x, leg_y))
        }
        (MorData::Matrix(fa), MorData::Matrix(ga)) => {
            // P = ker(f ⊕ -g) ⊂ X ⊕ Y.
            let diff = fa.hstack(&ga.neg());
            let basis = diff.kernel_basis(); // k rows of length x.n + y.n
            let k = basis.rows;
            let p = x.backend.object(k);
            let leg_x = FqMat::from_fn(basis.q, x.n, k, |i, j| basis.get(j, i));
            let leg_y = FqMat::from_fn(basis.q, y.n, k, |i, j| basis.get(j, x.n + i));
            Ok((
                p,
                RMorphism::linear(p, x, leg_x),
                RMorphism::linear(p, y, leg_y),
            ))
        }
        _ => Err(BackendError::BackendMismatch),
    }
}

/// Pushout of two surjections `p: X↠Y`, `q: X↠Z` (exists by exactness and
/// the Mal'cev property); returns `(Q, a: Y→Q, b: Z→Q)` with `a∘p = b∘q`.
/// The resulting square of four surjections is simultaneously a pullback.
pub fn pushout_of_surjections(
    p: &RMorphism,
    q: &RMorphism,
) -> Result<(RObject, RMorphism, RMorphism), BackendError> {
    if !p.is_surjective() || !q.is_surjective() {
        return Err(BackendError::NotSurjective);
    }
    assert_eq!(p.source, q.source, "pushout needs a common source");
    let (y, z) = (p.target, q.target);
    match (&p.data, &q.data) {
        (MorData::SetMap(pm), MorData::SetMap(qm)) => {
            // Set-world pullback of the injections p_set: Y→X ← Z :q_set —
            // pairs (y,z) with equal image, enumerated in image order.
            let mut pairs = Vec::new();
            for xv in 0..p.source.n {
                let yi = pm.iter().position(|&v| v == xv);
                let zi = qm.iter().position(|&v| v == xv);
                if let (Some(yi), Some(zi)) = (yi, zi) {
                    pairs.push((yi, zi));
                }
            }
            let qobj = Backend::FinSetOp.object(pairs.len());
            let leg_y = RMorphism::set_map(y, qobj, pairs.iter().map(|&(yi, _)| yi).collect());
            let leg_z = RMorphism::set_map(z, qobj, pairs.iter().map(|&(_, zi)| zi).collect());
            Ok((qobj, leg_y, leg_z))
        }
        (MorData::Matrix(pa), MorData::Matrix(qa)) => {
            // Q = X/(ker p + ker q), realized by a full-rank map that
            // annihilates exactly K = ker p + ker q.
            let k_rows = pa.kernel_basis().vstack(&qa.kernel_basis());
            let k_basis = k_rows.row_space_basis();
            // Rows orthogonal to K under the dot product: the double
            // annihilator recovers exactly K over a finite field.
            let m = k_basis.kernel_basis();
            let d = m.rows;
            let qobj = p.source.backend.object(d);
            // Induced legs: solve L·p = π and L'·q = π.
            let solve_leg = |a: &FqMat| -> FqMat {
                let lt = a
                    .transpose()
                    .solve(&m.transpose())
                    .expect("π kills the kernel of the surjection");
                lt.transpose()
            };
            let leg_y = RMorphism::linear(y, qobj, solve_leg(pa));
            let leg_z = RMorphism::linear(z, qobj, solve_leg(qa));
            Ok((qobj, leg_y, leg_z))
        }
        _ => Err(BackendError::BackendMismatch),
    }
}

/// All automorphisms of `X`: the symmetric group S_n resp. GL_n(F_q), in a
/// deterministic order.
pub fn automorphisms(x: RObject, limits: &Limits) -> Result<Vec<RMorphism>, BackendError> {
    limits.check_ambient(x)?;
    match x.backend {
        Backend::FinSetOp => {
            let mut out = Vec::new();
            let mut perm: Vec<usize> = (0..x.n).collect();
            loop {
                out.push(RMorphism::set_map(x, x, perm.clone()));
                if !next_permutation(&mut perm) {
                    return Ok(out);
                }
            }
        }
        Backend::FinVecFq { .. } => Ok(enumerate_morphisms(x, x, limits)?
            .into_iter()
            .filter(|f| f.is_iso())
            .collect()),
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// The built-in one-parameter degree function δ_u evaluated on a quotient
/// (surjective morphism): u^{|X|−|Y|} resp. u^{dim ker} — in both backends
/// the exponent is the size drop from source to target, and δ_u(id) = 1.
pub fn degree(quotient: &RMorphism, u: &Scalar) -> Result<Scalar, BackendError> {
    if !quotient.is_surjective() {
        return Err(BackendError::NotSurjective);
    }
    let exp = (quotient.source.n - quotient.target.n) as i64;
    Ok(u.pow(exp).expect("nonnegative exponent never inverts"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fso(n: usize) -> RObject {
        Backend::FinSetOp.object(n)
    }

    #[test]
    fn pullback_along_identity() {
        let f = RMorphism::set_map(fso(2), fso(3), vec![0, 1, 0]);
        let idy = RMorphism::identity(fso(3));
        let (p, leg1, leg2) = pullback(&f, &idy).unwrap();
        assert_eq!(p.n, f.source.n);
        // Universal square commutes.
        assert_eq!(
            RMorphism::compose(&f, &leg1),
            RMorphism::compose(&idy, &leg2)
        );
        assert!(leg1.is_iso());
    }

    #[test]
    fn pullback_square_commutes_vec() {
        let v = Backend::FinVecFq { q: 2 };
        let a = RMorphism::linear(v.object(2), v.object(1), FqMat::from_fn(2, 1, 2, |_, _| 1));
        let b = RMorphism::linear(v.object(1), v.object(1), FqMat::identity(2, 1));
        let (p, l1, l2) = pullback(&a, &b).unwrap();
        assert_eq!(p.n, 2);
        assert_eq!(RMorphism::compose(&a, &l1), RMorphism::compose(&b, &l2));
    }

    #[test]
    fn pushout_with_identity() {
        let q = RMorphism::set_map(fso(3), fso(2), vec![0, 2]);
        assert!(q.is_surjective());
        let idx = RMorphism::identity(fso(3));
        let (qo, a, b) = pushout_of_surjections(&idx, &q).unwrap();
        assert_eq!(qo.n, 2);
        assert_eq!(RMorphism::compose(&a, &idx), RMorphism::compose(&b, &q));
        assert!(a.is_surjective() && b.is_surjective());
    }

    #[test]
    fn pushout_of_vector_quotients_is_sum_of_kernels() {
        // V = F2^2, quotients by the two coordinate axes: Q = V/(A+B) = 0.
        let v = Backend::FinVecFq { q: 2 };
        let p1 = RMorphism::linear(
            v.object(2),
            v.object(1),
            FqMat::from_fn(2, 1, 2, |_, j| u32::from(j == 0)),
        );
        let p2 = RMorphism::linear(
            v.object(2),
            v.object(1),
            FqMat::from_fn(2, 1, 2, |_, j| u32::from(j == 1)),
        );
        let (q, a, b) = pushout_of_surjections(&p1, &p2).unwrap();
        assert_eq!(q.n, 0);
        assert_eq!(RMorphism::compose(&a, &p1), RMorphism::compose(&b, &p2));
    }

    #[test]
    fn automorphism_counts() {
        let l = Limits::default();
        assert_eq!(automorphisms(fso(3), &l).unwrap().len(), 6);
        assert_eq!(automorphisms(fso(0), &l).unwrap().len(), 1);
        let v2 = Backend::FinVecFq { q: 2 }.object(2);
        assert_eq!(automorphisms(v2, &l).unwrap().len(), 6); // |GL2(F2)|
    }

    #[test]
    fn degree_values() {
        let u = Scalar::t();
        let id = RMorphism::identity(fso(2));
        assert!(degree(&id, &u).unwrap().is_one());
        // R-quotient [1] → [0] corresponds to the set injection ∅ ↪ {*}.
        let f = RMorphism::set_map(fso(1), fso(0), vec![]);
        assert_eq!(degree(&f, &u).unwrap(), u);
        let g = RMorphism::set_map(fso(2), fso(2), vec![0, 0]);
        assert!(!g.is_surjective());
        assert_eq!(degree(&g, &u), Err(BackendError::NotSurjective));
    }
}
