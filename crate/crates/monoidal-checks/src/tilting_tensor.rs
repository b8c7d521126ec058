//! The indecomposable summands of the small diagram objects, labelled
//! through the realization functor, and the exact tensor decomposition
//! by sequential idempotent peeling with conservation bookkeeping.

use crate::dimension::{categorical_dimension, kar_trace};
use crate::karcomplex::kar_object_tensor;
use crate::realize::{projector_trace, realize_object};
use crate::{MonCtx, MonError};
use diagram_category::{
    compose_relations, hom_basis, split_idempotents, KarMorphism, KarObject, Relation,
};
use regular_backend::RObject;
use ringel_engine::tilting_module;
use scalar_field::{Matrix, Scalar};
use std::collections::HashMap;
use weight_algebra::projective_cover_of;

/// The indecomposable summands of the plain objects of size ≤ N, one per
/// weight, identified by their realized modules.
pub struct TiltingCatalogue {
    /// `objects[ν]` realizes `P(ν)`.
    pub objects: Vec<KarObject>,
    /// `dim Hom(objects[ν], ⊕X) = dim P(ν)`.
    pub h_dims: Vec<usize>,
    /// Per plain object size `m`: the multiplicity of each catalogue
    /// object inside `[m]`.
    pub plain_multiplicities: Vec<Vec<usize>>,
    /// `Ext¹(T(ν), ∇) = 0` for the matched tilting module.
    pub delta_certificates: Vec<bool>,
    /// `Ext¹(Δ, T(ν)) = 0` for the matched tilting module.
    pub nabla_certificates: Vec<bool>,
    /// The matched tilting endomorphism rings are local.
    pub end_local: Vec<bool>,
}

/// Coordinate keys `(target summand, source summand, relation)` of the
/// ambient hom space between two summand lists.
struct KeySpace {
    source: Vec<RObject>,
    target: Vec<RObject>,
    keys: Vec<(usize, usize, Relation)>,
    index: HashMap<(usize, usize, Relation), usize>,
}

/// A sparse column: the coordinates of the image of one key.
type SparseCol = Vec<(usize, Scalar)>;

impl KeySpace {
    fn new(mc: &MonCtx, source: &[RObject], target: &[RObject]) -> Result<KeySpace, MonError> {
        let mut keys = Vec::new();
        for (i, &t) in target.iter().enumerate() {
            for (j, &s) in source.iter().enumerate() {
                for r in hom_basis(s, t, &mc.limits)? {
                    keys.push((i, j, r));
                }
            }
        }
        let index = keys
            .iter()
            .enumerate()
            .map(|(k, key)| (key.clone(), k))
            .collect();
        Ok(KeySpace {
            source: source.to_vec(),
            target: target.to_vec(),
            keys,
            index,
        })
    }

    fn len(&self) -> usize {
        self.keys.len()
    }

    fn morphism(&self, coords: &[Scalar]) -> KarMorphism {
        let mut m = KarMorphism::zero(self.source.clone(), self.target.clone());
        for (c, (i, j, r)) in coords.iter().zip(&self.keys) {
            if !c.is_zero() {
                m.entries[*i][*j].add_term(r.clone(), c.clone());
            }
        }
        m
    }

    fn coords(&self, m: &KarMorphism) -> Vec<Scalar> {
        self.keys
            .iter()
            .map(|(i, j, r)| m.entries[*i][*j].coeff(r))
            .collect()
    }

    /// Per key `k`: the coordinates of `g ∘ key_k`, where `g` maps this
    /// space's target summands into `out`'s target summands.
    fn post_table(&self, out: &KeySpace, g: &KarMorphism, u: &Scalar) -> Result<Vec<SparseCol>, MonError> {
        let mut cols = Vec::with_capacity(self.len());
        for (i, j, r) in &self.keys {
            let mut acc: HashMap<usize, Scalar> = HashMap::new();
            for (a, row) in g.entries.iter().enumerate() {
                for (r2, c2) in row[*i].terms() {
                    let (s, rr) = compose_relations(r2, r, u)?;
                    if s.is_zero() {
                        continue;
                    }
                    let k = out.index[&(a, *j, rr)];
                    let e = acc.entry(k).or_insert_with(Scalar::zero);
                    *e = &*e + &(c2 * &s);
                }
            }
            let mut col: SparseCol = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            col.sort_by_key(|(k, _)| *k);
            cols.push(col);
        }
        Ok(cols)
    }

    /// Per key `k`: the coordinates of `key_k ∘ g`, where `g` maps `out`'s
    /// source summands into this space's source summands.
    fn pre_table(&self, out: &KeySpace, g: &KarMorphism, u: &Scalar) -> Result<Vec<SparseCol>, MonError> {
        let mut cols = Vec::with_capacity(self.len());
        for (i, j, r) in &self.keys {
            let mut acc: HashMap<usize, Scalar> = HashMap::new();
            for (b, g_jb) in g.entries[*j].iter().enumerate() {
                for (r2, c2) in g_jb.terms() {
                    let (s, rr) = compose_relations(r, r2, u)?;
                    if s.is_zero() {
                        continue;
                    }
                    let k = out.index[&(*i, b, rr)];
                    let e = acc.entry(k).or_insert_with(Scalar::zero);
                    *e = &*e + &(c2 * &s);
                }
            }
            let mut col: SparseCol = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            col.sort_by_key(|(k, _)| *k);
            cols.push(col);
        }
        Ok(cols)
    }
}

/// A basis of the compressed Hom space between two Karoubi objects, as
/// coordinate rows over the ambient key space.
fn compressed_basis_rows(
    space: &KeySpace,
    first: &[SparseCol],
    second: &[SparseCol],
) -> Vec<Vec<Scalar>> {
    // Row per key k: second ∘ first applied to the unit vector at k.
    let rows: Vec<Vec<Scalar>> = (0..space.len())
        .map(|k| {
            let mut v = vec![Scalar::zero(); space.len()];
            for (k1, c1) in &first[k] {
                for (k2, c2) in &second[*k1] {
                    v[*k2] = &v[*k2] + &(c1 * c2);
                }
            }
            v
        })
        .collect();
    let (rref, pivots) = Matrix::from_rows(rows).rref();
    (0..pivots.len())
        .map(|r| (0..space.len()).map(|c| rref[(r, c)].clone()).collect())
        .collect()
}

/// The two-sided inverse of an endomorphism of `g` within a precomputed
/// compressed basis, when it exists.
fn end_inverse(
    mc: &MonCtx,
    g: &KarObject,
    end_space: &KeySpace,
    end_basis: &[KarMorphism],
    c: &KarMorphism,
) -> Result<Option<KarMorphism>, MonError> {
    let u = mc.u();
    if end_basis.is_empty() {
        return Ok(None);
    }
    let cols: Vec<Vec<Scalar>> = end_basis
        .iter()
        .map(|b| Ok(end_space.coords(&c.compose(b, u)?)))
        .collect::<Result<_, MonError>>()?;
    let mat = Matrix::from_fn(end_space.len(), end_basis.len(), |r, k| cols[k][r].clone());
    let Some(x) = mat.solve(&end_space.coords(&g.idem)) else {
        return Ok(None);
    };
    let mut candidate = KarMorphism::zero(g.summands.clone(), g.summands.clone());
    for (xk, b) in x.iter().zip(end_basis) {
        candidate = candidate.add(&b.scale(xk));
    }
    if c.compose(&candidate, u)? == g.idem && candidate.compose(c, u)? == g.idem {
        Ok(Some(candidate))
    } else {
        Ok(None)
    }
}

/// Splits every plain object of size ≤ N and labels the indecomposable
/// summands by matching their realized modules to the indecomposable
/// projectives.
pub fn tilting_catalogue(mc: &MonCtx) -> Result<TiltingCatalogue, MonError> {
    let u = mc.u();
    let n = mc.n();
    let mut objects: Vec<Option<KarObject>> = vec![None; n];
    let mut h_dims = vec![0usize; n];
    let mut plain_multiplicities = Vec::new();
    for &obj in mc.objects() {
        let pieces = split_idempotents(&KarObject::plain(obj), u, &mc.limits)?;
        let mut mults = vec![0usize; n];
        for (g, mult) in pieces {
            let realized = realize_object(mc, &g)?;
            let cover = projective_cover_of(&mc.rc.pd, &realized.module)?;
            if cover.module.dim != realized.module.dim || cover.summands.len() != 1 {
                return Err(MonError::Decomposition(format!(
                    "summand of a plain object realizes to a non-indecomposable-projective \
                     module of dimension {} (cover {})",
                    realized.module.dim, cover.module.dim
                )));
            }
            let nu = cover.summands[0].0;
            match &objects[nu] {
                None => {
                    objects[nu] = Some(g);
                    h_dims[nu] = realized.module.dim;
                }
                Some(prev) => {
                    if !diagram_category::is_isomorphic(prev, &g, u, &mc.limits)? {
                        return Err(MonError::Decomposition(format!(
                            "two non-isomorphic summands realize to P({nu})"
                        )));
                    }
                }
            }
            mults[nu] += mult;
        }
        plain_multiplicities.push(mults);
    }
    let objects: Vec<KarObject> = objects
        .into_iter()
        .enumerate()
        .map(|(nu, o)| {
            o.ok_or_else(|| MonError::Decomposition(format!("no summand realizes to P({nu})")))
        })
        .collect::<Result<_, _>>()?;
    let mut delta_certificates = Vec::with_capacity(n);
    let mut nabla_certificates = Vec::with_capacity(n);
    let mut end_local = Vec::with_capacity(n);
    for nu in 0..n {
        let t = tilting_module(&mc.rc, nu)?;
        delta_certificates.push(t.delta_certificate);
        nabla_certificates.push(t.nabla_certificate);
        end_local.push(t.end_local);
    }
    Ok(TiltingCatalogue {
        objects,
        h_dims,
        plain_multiplicities,
        delta_certificates,
        nabla_certificates,
        end_local,
    })
}

/// Exact decomposition of a tensor product of two catalogue objects by
/// peeling off one certified summand at a time.
pub struct TensorDecomposition {
    pub pair: (usize, usize),
    pub multiplicities: Vec<usize>,
    /// Every peeled idempotent cut realizes to the matching projective.
    pub summands_certified: bool,
    /// `dim Hom(G(λ)⊗G(μ), ⊕X)`.
    pub h_dim_total: usize,
    pub remainder_h_dim: usize,
    /// `h_dim_total = Σ m_ν · dim P(ν) + remainder`.
    pub conserved: bool,
    /// The categorical dimension of the tensor object.
    pub dim_total: String,
    /// `dim G(λ)·dim G(μ) = Σ m_ν·dim G(ν) + dim(remainder)` in
    /// categorical dimension — exact even where the truncation is blind.
    pub dim_conserved: bool,
    /// Nothing is left over.
    pub complete: bool,
}

/// Static per-label data of one decomposition run.
struct NuData {
    up_space: KeySpace,
    down_space: KeySpace,
    end_space: KeySpace,
    end_basis: Vec<KarMorphism>,
    /// key ↦ key ∘ e_G within the up space.
    right_e: Vec<SparseCol>,
    /// key ↦ e_G ∘ key within the down space.
    left_e: Vec<SparseCol>,
    /// `(down key k1, up key k2) ↦ end-space coordinates of key_{k1} ∘
    /// key_{k2}` when the middle summands match.
    pair_tab: Vec<Option<(usize, Scalar)>>,
}

fn nu_data(mc: &MonCtx, g: &KarObject, o: &KarObject) -> Result<NuData, MonError> {
    let u = mc.u();
    let up_space = KeySpace::new(mc, &g.summands, &o.summands)?;
    let down_space = KeySpace::new(mc, &o.summands, &g.summands)?;
    let end_space = KeySpace::new(mc, &g.summands, &g.summands)?;
    // Compressed endomorphism basis of G, from the raw key rows.
    let id_cols: Vec<SparseCol> = (0..end_space.len())
        .map(|k| vec![(k, Scalar::one())])
        .collect();
    let e_post = end_space.post_table(&end_space, &g.idem, u)?;
    let e_pre = end_space.pre_table(&end_space, &g.idem, u)?;
    let half: Vec<Vec<Scalar>> = compressed_basis_rows(&end_space, &id_cols, &e_pre);
    // Apply the left compression to the right-compressed rows and re-reduce.
    let rows: Vec<Vec<Scalar>> = half
        .iter()
        .map(|row| {
            let mut v = vec![Scalar::zero(); end_space.len()];
            for (k, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (k2, c2) in &e_post[k] {
                    v[*k2] = &v[*k2] + &(c * c2);
                }
            }
            v
        })
        .collect();
    let (rref, pivots) = Matrix::from_rows(rows).rref();
    let end_basis: Vec<KarMorphism> = (0..pivots.len())
        .map(|r| {
            let coords: Vec<Scalar> = (0..end_space.len()).map(|c| rref[(r, c)].clone()).collect();
            end_space.morphism(&coords)
        })
        .collect();
    let right_e = up_space.pre_table(&up_space, &g.idem, u)?;
    let left_e = down_space.post_table(&down_space, &g.idem, u)?;
    let mut pair_tab = vec![None; down_space.len() * up_space.len()];
    for (k1, (a, j1, r1)) in down_space.keys.iter().enumerate() {
        for (k2, (i2, b, r2)) in up_space.keys.iter().enumerate() {
            if *j1 != *i2 {
                continue;
            }
            let (s, rr) = compose_relations(r1, r2, u)?;
            if s.is_zero() {
                continue;
            }
            pair_tab[k1 * up_space.len() + k2] = Some((end_space.index[&(*a, *b, rr)], s));
        }
    }
    Ok(NuData {
        up_space,
        down_space,
        end_space,
        end_basis,
        right_e,
        left_e,
        pair_tab,
    })
}

pub fn tilting_tensor_decompose(
    mc: &MonCtx,
    cat: &TiltingCatalogue,
    l: usize,
    m: usize,
) -> Result<TensorDecomposition, MonError> {
    let u = mc.u();
    let n = mc.n();
    let o = kar_object_tensor(&cat.objects[l], &cat.objects[m], u)?;
    let h_dim_total = projector_trace(mc, &o)?;
    let mut f = o.idem.clone();
    let data: Vec<NuData> = (0..n)
        .map(|nu| nu_data(mc, &cat.objects[nu], &o))
        .collect::<Result<_, _>>()?;
    let mut multiplicities = vec![0usize; n];
    let mut summands_certified = true;
    // The compositions f∘key and key∘f, shared between labels with the
    // same ambient summands; rebuilt whenever f changes.
    let mut f_tabs: HashMap<Vec<RObject>, (Vec<SparseCol>, Vec<SparseCol>)> = HashMap::new();
    loop {
        let mut progress = false;
        for (nu, nd) in data.iter().enumerate() {
            loop {
                let (f_post, f_pre) = match f_tabs.get(&nd.up_space.source) {
                    Some(t) => t.clone(),
                    None => {
                        let t = (
                            nd.up_space.post_table(&nd.up_space, &f, u)?,
                            nd.down_space.pre_table(&nd.down_space, &f, u)?,
                        );
                        f_tabs.insert(nd.up_space.source.clone(), t.clone());
                        t
                    }
                };
                // Compressed bases of Hom(G(ν), cur) and Hom(cur, G(ν)),
                // where cur is the remainder idempotent f on the tensor.
                let ups = compressed_basis_rows(&nd.up_space, &nd.right_e, &f_post);
                let downs = compressed_basis_rows(&nd.down_space, &f_pre, &nd.left_e);
                let mut peeled: Option<(Vec<Scalar>, Vec<Scalar>, KarMorphism)> = None;
                'search: for d in &downs {
                    // The pairing d·T: end-space coordinates of
                    // down ∘ key_{k2}, for every up key k2.
                    let mut dt =
                        vec![vec![Scalar::zero(); nd.up_space.len()]; nd.end_space.len()];
                    for (k1, c1) in d.iter().enumerate() {
                        if c1.is_zero() {
                            continue;
                        }
                        for k2 in 0..nd.up_space.len() {
                            if let Some((e, s)) = &nd.pair_tab[k1 * nd.up_space.len() + k2] {
                                dt[*e][k2] = &dt[*e][k2] + &(c1 * s);
                            }
                        }
                    }
                    for up in &ups {
                        let c_coords: Vec<Scalar> = dt
                            .iter()
                            .map(|row| {
                                row.iter()
                                    .zip(up)
                                    .filter(|(_, uc)| !uc.is_zero())
                                    .fold(Scalar::zero(), |acc, (rc, uc)| &acc + &(rc * uc))
                            })
                            .collect();
                        let c = nd.end_space.morphism(&c_coords);
                        if let Some(inv) =
                            end_inverse(mc, &cat.objects[nu], &nd.end_space, &nd.end_basis, &c)?
                        {
                            peeled = Some((up.clone(), d.clone(), inv));
                            break 'search;
                        }
                    }
                }
                let Some((up_c, down_c, inv)) = peeled else { break };
                let up = nd.up_space.morphism(&up_c);
                let down = nd.down_space.morphism(&down_c);
                // p = up ∘ inv ∘ down is idempotent and orthogonal to
                // f − p by construction: up and down are compressed by f
                // on the tensor side and by e_G on the catalogue side,
                // and inv is a certified two-sided inverse of down∘up.
                let p = up.compose(&inv.compose(&down, u)?, u)?;
                let rest = f.sub(&p);
                // Certify the cut itself, not just the pairing.
                let cut = KarObject {
                    summands: o.summands.clone(),
                    idem: p,
                };
                let realized = realize_object(mc, &cut)?;
                let cover = projective_cover_of(&mc.rc.pd, &realized.module)?;
                if cover.module.dim != realized.module.dim
                    || cover.summands.len() != 1
                    || cover.summands[0].0 != nu
                {
                    summands_certified = false;
                }
                f = rest;
                f_tabs.clear();
                multiplicities[nu] += 1;
                progress = true;
            }
        }
        if !progress {
            break;
        }
    }
    let remainder_h_dim = projector_trace(
        mc,
        &KarObject {
            summands: o.summands.clone(),
            idem: f.clone(),
        },
    )?;
    let weighted: usize = multiplicities
        .iter()
        .zip(&cat.h_dims)
        .map(|(m, d)| m * d)
        .sum();
    // Categorical-dimension conservation closes the books over the layers
    // the truncation cannot see.
    let dim_total = categorical_dimension(&o, u)?;
    let mut dim_sum = kar_trace(&f, u)?;
    for (nu, &mult) in multiplicities.iter().enumerate() {
        if mult > 0 {
            let d = categorical_dimension(&cat.objects[nu], u)?;
            dim_sum = &dim_sum + &(&Scalar::from_integer(mult as i64) * &d);
        }
    }
    Ok(TensorDecomposition {
        pair: (l, m),
        multiplicities,
        summands_certified,
        h_dim_total,
        remainder_h_dim,
        conserved: h_dim_total == weighted + remainder_h_dim,
        dim_conserved: dim_sum == dim_total,
        dim_total: dim_total.to_string(),
        complete: f.is_zero(),
    })
}
