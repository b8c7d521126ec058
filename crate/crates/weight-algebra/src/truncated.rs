//! The finite truncation of the linearized relation category as a unital
//! algebra: all Homs between objects of size ≤ N, with composition as
//! multiplication, plus the cell realization of standard and costandard
//! modules from U-relations and automorphism-group irreps.

use crate::irreps::{aut_irreps, GroupRep, IrrepId};
use crate::module::FdModule;
use crate::WeightError;
use diagram_category::{
    classify, compose_relations, core_decompose, diagonal, graph, hom_basis, rel_target,
    transpose_relation, u_relations, FdAlgebra, Relation, TriangularClass,
};
use regular_backend::{automorphisms, Backend, Limits, RMorphism, RObject};
use scalar_field::{Matrix, Scalar};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// Hard cap on the total dimension of a truncation.
pub const MAX_TRUNCATION_DIM: usize = 64;

/// A weight: an object class together with an irreducible representation
/// of its automorphism group.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct WeightLabel {
    /// Index into the object list (= object size).
    pub class: usize,
    pub irrep: IrrepId,
}

impl WeightLabel {
    pub fn display(&self) -> String {
        format!("[{}];{}", self.class, self.irrep.display())
    }
}

/// Strict order on weights: smaller support in the subquotient order.
pub fn label_lt(a: &WeightLabel, b: &WeightLabel) -> bool {
    a.class < b.class
}

/// One algebra basis element: a relation between two listed objects.
#[derive(Clone, Debug)]
pub struct BasisRel {
    pub src: usize,
    pub tgt: usize,
    pub rel: Relation,
}

/// Orbit decomposition of the U-relations `W → X` under precomposition
/// with automorphism graphs of `W`.
struct UOrbits {
    reps: Vec<Relation>,
    /// relation ↦ (orbit representative index, automorphism index m) with
    /// `relation = rep ∘ graph(m)`.
    lookup: HashMap<Relation, (usize, usize)>,
}

pub struct TruncatedAlgebra {
    pub backend: Backend,
    pub u: Scalar,
    pub n_cap: usize,
    pub objects: Vec<RObject>,
    pub basis: Vec<BasisRel>,
    pub alg: FdAlgebra,
    /// Coordinates of the object idempotents Δ_X.
    pub object_idems: Vec<Vec<Scalar>>,
    /// The transpose anti-automorphism as a permutation of the basis.
    pub tau: Vec<usize>,
    pub limits: Limits,
    index: HashMap<(usize, usize, Relation), usize>,
    auts: Vec<Vec<RMorphism>>,
    graph_lookup: Vec<HashMap<Relation, usize>>,
    irreps: Vec<Vec<(IrrepId, GroupRep)>>,
    u_orbits: Vec<Vec<UOrbits>>,
}

/// Builds the truncation with object sizes `0..=n_cap` at parameter `u`.
pub fn build_algebra(
    backend: Backend,
    u: &Scalar,
    n_cap: usize,
    limits: &Limits,
) -> Result<TruncatedAlgebra, WeightError> {
    let objects: Vec<RObject> = (0..=n_cap).map(|n| backend.object(n)).collect();
    let mut basis = Vec::new();
    let mut index = HashMap::new();
    for (si, &x) in objects.iter().enumerate() {
        for (ti, &y) in objects.iter().enumerate() {
            for rel in hom_basis(x, y, limits)? {
                index.insert((si, ti, rel.clone()), basis.len());
                basis.push(BasisRel {
                    src: si,
                    tgt: ti,
                    rel,
                });
            }
        }
    }
    let dim = basis.len();
    if dim > MAX_TRUNCATION_DIM {
        return Err(WeightError::SizeLimitExceeded { dim, cap: MAX_TRUNCATION_DIM });
    }
    // Structure constants: the product of two basis relations is a scalar
    // multiple of a single basis relation (or zero when not composable).
    let mut mult = vec![vec![vec![Scalar::zero(); dim]; dim]; dim];
    for (i, bi) in basis.iter().enumerate() {
        for (j, bj) in basis.iter().enumerate() {
            if bi.src != bj.tgt {
                continue;
            }
            let (c, h) = compose_relations(&bi.rel, &bj.rel, u)?;
            let k = index[&(bj.src, bi.tgt, h)];
            mult[i][j][k] = c;
        }
    }
    let mut unit = vec![Scalar::zero(); dim];
    let mut object_idems = Vec::new();
    for (oi, &x) in objects.iter().enumerate() {
        let k = index[&(oi, oi, diagonal(x))];
        unit[k] = Scalar::one();
        let mut e = vec![Scalar::zero(); dim];
        e[k] = Scalar::one();
        object_idems.push(e);
    }
    let alg = FdAlgebra { dim, mult, unit };
    let tau: Vec<usize> = basis
        .iter()
        .map(|b| index[&(b.tgt, b.src, transpose_relation(&b.rel))])
        .collect();
    // Automorphism groups and their graphs.
    let mut auts = Vec::new();
    let mut graph_lookup = Vec::new();
    for &x in &objects {
        let a = automorphisms(x, limits)?;
        let lookup: HashMap<Relation, usize> =
            a.iter().enumerate().map(|(i, m)| (graph(m), i)).collect();
        auts.push(a);
        graph_lookup.push(lookup);
    }
    // Irreducible representations per object class.
    let mut irreps = Vec::new();
    for &x in &objects {
        irreps.push(aut_irreps(x, limits)?);
    }
    // U-relation orbits for the cell construction.
    let mut u_orbits = Vec::new();
    for (wi, &w) in objects.iter().enumerate() {
        let mut per_target = Vec::new();
        for &x in &objects {
            let all = u_relations(w, x, limits)?;
            let mut reps: Vec<Relation> = Vec::new();
            let mut lookup: HashMap<Relation, (usize, usize)> = HashMap::new();
            for r in &all {
                if lookup.contains_key(r) {
                    continue;
                }
                let rep_idx = reps.len();
                reps.push(r.clone());
                for (mi, m) in auts[wi].iter().enumerate() {
                    let (c, twisted) = compose_relations(r, &graph(m), u)?;
                    assert!(c.is_one(), "M-twist must have coefficient 1");
                    let prev = lookup.insert(twisted, (rep_idx, mi));
                    assert!(prev.is_none(), "Aut action on U-relations is not free");
                }
            }
            assert!(
                all.iter().all(|r| lookup.contains_key(r)),
                "orbit decomposition must cover all U-relations"
            );
            per_target.push(UOrbits { reps, lookup });
        }
        u_orbits.push(per_target);
    }
    Ok(TruncatedAlgebra {
        backend,
        u: u.clone(),
        n_cap,
        objects,
        basis,
        alg,
        object_idems,
        tau,
        limits: limits.clone(),
        index,
        auts,
        graph_lookup,
        irreps,
        u_orbits,
    })
}

impl TruncatedAlgebra {
    /// The complete weight poset, ordered by (support size, label).
    pub fn weight_labels(&self) -> Vec<WeightLabel> {
        let mut out = Vec::new();
        for (class, reps) in self.irreps.iter().enumerate() {
            for (id, _) in reps {
                out.push(WeightLabel {
                    class,
                    irrep: id.clone(),
                });
            }
        }
        out
    }

    fn irrep_of(&self, label: &WeightLabel) -> Result<&GroupRep, WeightError> {
        self.irreps
            .get(label.class)
            .and_then(|reps| reps.iter().find(|(id, _)| id == &label.irrep))
            .map(|(_, rep)| rep)
            .ok_or_else(|| WeightError::UnknownLabel(label.display()))
    }

    /// Flat basis layout of the cell module for `label`: per object X, the
    /// starting offset and the number of U-orbit representatives.
    fn cell_layout(&self, label: &WeightLabel) -> (Vec<(usize, usize)>, usize) {
        let vdim = self.irreps[label.class]
            .iter()
            .find(|(id, _)| id == &label.irrep)
            .map(|(_, rep)| rep.dim())
            .unwrap_or(0);
        let mut offsets = Vec::new();
        let mut total = 0usize;
        for x in 0..self.objects.len() {
            let n_orb = self.u_orbits[label.class][x].reps.len();
            offsets.push((total, n_orb));
            total += n_orb * vdim;
        }
        (offsets, total)
    }

    /// The standard module Δ(label): spanned, at each object X, by U-orbit
    /// representatives `W → X` tensored with the irrep of Aut(W).
    pub fn standard_module(&self, label: &WeightLabel) -> Result<FdModule, WeightError> {
        let rep = self.irrep_of(label)?;
        let vdim = rep.dim();
        let w = label.class;
        let (offsets, total) = self.cell_layout(label);
        let mut action = vec![Matrix::zero(total, total); self.alg.dim];
        for (bi, b) in self.basis.iter().enumerate() {
            let (x, y) = (b.src, b.tgt);
            let (x_off, x_orb) = offsets[x];
            let (y_off, _) = offsets[y];
            for oi in 0..x_orb {
                let r = &self.u_orbits[w][x].reps[oi];
                let (c, h) = compose_relations(&b.rel, r, &self.u)?;
                if c.is_zero() {
                    continue;
                }
                let (g, f) = core_decompose(&h)?;
                if rel_target(&g).n != self.objects[w].n {
                    continue; // factors through a smaller object: truncated away
                }
                let a_idx = *self.graph_lookup[w]
                    .get(&g)
                    .expect("D-factor of full size must be an automorphism graph");
                let (rep_idx, m_idx) = *self.u_orbits[w][y]
                    .lookup
                    .get(&f)
                    .expect("U-factor must lie in the orbit table");
                let e = RMorphism::compose(&self.auts[w][m_idx], &self.auts[w][a_idx]);
                let rho = rep.mat_of(&e);
                for vi in 0..vdim {
                    for vk in 0..vdim {
                        if rho[(vk, vi)].is_zero() {
                            continue;
                        }
                        let row = y_off + rep_idx * vdim + vk;
                        let col = x_off + oi * vdim + vi;
                        action[bi][(row, col)] =
                            &action[bi][(row, col)] + &(&c * &rho[(vk, vi)]);
                    }
                }
            }
        }
        Ok(FdModule {
            dim: total,
            action,
        })
    }

    /// The costandard module ∇(label): the contragredient of Δ(label)
    /// along the transpose anti-automorphism.
    pub fn costandard_module(&self, label: &WeightLabel) -> Result<FdModule, WeightError> {
        Ok(self.standard_module(label)?.contragredient(&self.tau))
    }

    /// The cellular Gram matrix of Δ(label) and its rank (= dim L(label)
    /// at the given specialization).
    pub fn gram_rank(&self, label: &WeightLabel) -> Result<(Matrix, usize), WeightError> {
        let rep = self.irrep_of(label)?;
        let vdim = rep.dim();
        let w = label.class;
        let (offsets, total) = self.cell_layout(label);
        let mut gram = Matrix::zero(total, total);
        for x in 0..self.objects.len() {
            let (x_off, x_orb) = offsets[x];
            for oi in 0..x_orb {
                let r = &self.u_orbits[w][x].reps[oi];
                for oj in 0..x_orb {
                    let rp = &self.u_orbits[w][x].reps[oj];
                    let (c, h) = compose_relations(&transpose_relation(rp), r, &self.u)?;
                    if c.is_zero() || classify(&h) != TriangularClass::M {
                        continue;
                    }
                    let e_idx = self.graph_lookup[w][&h];
                    let rho = rep.mat_of(&self.auts[w][e_idx]);
                    // Block contribution c · ρ(e)ᵀ F at (oi, oj).
                    let block = rho.transpose().matmul(&rep.form).scale(&c);
                    for vi in 0..vdim {
                        for vj in 0..vdim {
                            let (ri, cj) = (x_off + oi * vdim + vi, x_off + oj * vdim + vj);
                            gram[(ri, cj)] = &gram[(ri, cj)] + &block[(vi, vj)];
                        }
                    }
                }
            }
        }
        let rank = gram.rank();
        Ok((gram, rank))
    }

    /// Index of a relation basis element.
    pub fn basis_index(&self, src: usize, tgt: usize, rel: &Relation) -> Option<usize> {
        self.index.get(&(src, tgt, rel.clone())).copied()
    }

    /// Coordinates of a transposed element.
    pub fn transpose_coords(&self, x: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.alg.dim];
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out[self.tau[i]] = c.clone();
            }
        }
        out
    }

    /// The left regular representation, for oracle checks.
    pub fn regular_module(&self) -> FdModule {
        let action = (0..self.alg.dim)
            .map(|i| {
                let mut e = vec![Scalar::zero(); self.alg.dim];
                e[i] = Scalar::one();
                self.alg.left_mult(&e)
            })
            .collect();
        FdModule {
            dim: self.alg.dim,
            action,
        }
    }
}
