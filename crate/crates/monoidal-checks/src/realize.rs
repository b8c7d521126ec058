//! Realization of Karoubi complexes as module complexes over the
//! truncation: the contravariant Hom into the formal sum of truncation
//! objects, exact cohomology, and certification of termwise projectivity
//! with conversion back to a labelled projective complex.

use crate::{KarComplex, MonCtx, MonError};
use diagram_category::{compose_relations, hom_basis, KarMorphism, KarObject, Relation};
use ringel_engine::{ElemMat, ProjComplex};
use scalar_field::{Matrix, Scalar};
use std::collections::HashMap;
use weight_algebra::{projective_cover_of, FdModule};

/// One realized term: the module `Hom(K, ⊕X)` in a row-reduced basis of
/// the ambient coordinate space of raw morphism matrices.
pub struct Realized {
    pub module: FdModule,
    keys: Vec<(usize, usize, Relation)>,
    key_index: HashMap<(usize, usize, Relation), usize>,
    /// `dim × |keys|` rref rows spanning the compressed space.
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Realized {
    /// Coordinates in the rref basis: read off the pivot columns.
    fn express(&self, y: &[Scalar]) -> Vec<Scalar> {
        self.pivots.iter().map(|&p| y[p].clone()).collect()
    }
}

/// Raw coordinates of the composite `g ∘ m` where `g` is a single ambient
/// key of `Hom(⊕W, ⊕X)` and `m : ⊕W' → ⊕W` is a morphism matrix.
fn precompose_key(
    mc: &MonCtx,
    out_keys: &HashMap<(usize, usize, Relation), usize>,
    out_len: usize,
    key: &(usize, usize, Relation),
    coeff: &Scalar,
    m: &KarMorphism,
) -> Result<Vec<Scalar>, MonError> {
    let u = mc.u();
    let (x, w, r) = key;
    let mut out = vec![Scalar::zero(); out_len];
    for (wp, entry) in m.entries[*w].iter().enumerate() {
        for (s, c) in entry.terms() {
            let (d, h) = compose_relations(r, s, u)?;
            if d.is_zero() {
                continue;
            }
            let idx = out_keys[&(*x, wp, h)];
            out[idx] = &out[idx] + &(&(coeff * c) * &d);
        }
    }
    Ok(out)
}

fn ambient_keys(
    mc: &MonCtx,
    k: &KarObject,
) -> Result<(Vec<(usize, usize, Relation)>, HashMap<(usize, usize, Relation), usize>), MonError> {
    let mut keys = Vec::new();
    for (x, &obj) in mc.ta.objects.iter().enumerate() {
        for (w, &src) in k.summands.iter().enumerate() {
            for r in hom_basis(src, obj, &mc.limits)? {
                keys.push((x, w, r));
            }
        }
    }
    let index = keys
        .iter()
        .enumerate()
        .map(|(i, k)| (k.clone(), i))
        .collect();
    Ok((keys, index))
}

/// The exact value of `dim Hom(K, ⊕X)` read off as the trace of the
/// right-composition projector, without any elimination.  Errs when the
/// trace is not a constant integer.
pub fn projector_trace(mc: &MonCtx, k: &KarObject) -> Result<usize, MonError> {
    let u = mc.u();
    let (keys, index) = ambient_keys(mc, k)?;
    let mut tr = Scalar::zero();
    for key in &keys {
        let (x, w, r) = key;
        for (s, c) in k.idem.entries[*w][*w].terms() {
            let (d, h) = compose_relations(r, s, u)?;
            if !d.is_zero() && index[&(*x, *w, h)] == index[key] {
                tr = &tr + &(c * &d);
            }
        }
    }
    let Some(q) = tr.as_rational() else {
        return Err(MonError::Structure(format!(
            "projector trace is not constant: {tr}"
        )));
    };
    if !q.is_integer() || q < num::BigRational::from_integer(0.into()) {
        return Err(MonError::Structure(format!(
            "projector trace is not a nonnegative integer: {q}"
        )));
    }
    use num::ToPrimitive;
    Ok(q.to_integer().to_usize().expect("small trace"))
}

/// Realizes a Karoubi object as a module: the image of the
/// right-composition projector, with the algebra acting by
/// postcomposition.
pub fn realize_object(mc: &MonCtx, k: &KarObject) -> Result<Realized, MonError> {
    let (keys, key_index) = ambient_keys(mc, k)?;
    let n_keys = keys.len();
    let mut rows = Vec::with_capacity(n_keys);
    for key in &keys {
        rows.push(precompose_key(mc, &key_index, n_keys, key, &Scalar::one(), &k.idem)?);
    }
    let (rref, pivots) = Matrix::from_rows(rows).rref();
    let dim = pivots.len();
    let basis = Matrix::from_fn(dim, n_keys, |i, j| rref[(i, j)].clone());
    // Postcomposition action of each algebra basis relation.
    let u = mc.u();
    let mut action = Vec::with_capacity(mc.ta.alg.dim);
    for b in &mc.ta.basis {
        let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(dim);
        for v in 0..dim {
            let mut out = vec![Scalar::zero(); n_keys];
            for (ki, key) in keys.iter().enumerate() {
                let c = &basis[(v, ki)];
                if c.is_zero() || key.0 != b.src {
                    continue;
                }
                let (d, h) = compose_relations(&b.rel, &key.2, u)?;
                if d.is_zero() {
                    continue;
                }
                let idx = key_index[&(b.tgt, key.1, h.clone())];
                out[idx] = &out[idx] + &(c * &d);
            }
            cols.push(pivots.iter().map(|&p| out[p].clone()).collect());
        }
        action.push(Matrix::from_fn(dim, dim, |i, j| cols[j][i].clone()));
    }
    Ok(Realized {
        module: FdModule { dim, action },
        keys,
        key_index,
        basis,
        pivots,
    })
}

/// A bounded complex of modules in degrees `min_deg ..`; `diffs[j]` maps
/// `terms[j]` to `terms[j+1]`.
pub struct ModComplex {
    pub min_deg: i64,
    pub terms: Vec<FdModule>,
    pub diffs: Vec<Matrix>,
}

/// Realizes a Karoubi complex contravariantly: index `i` of the complex
/// lands in module degree `−i`, so the module complex runs from degree
/// `−(L−1)` up to `0`.
pub fn realize_complex(mc: &MonCtx, z: &KarComplex) -> Result<ModComplex, MonError> {
    let l = z.terms.len();
    let realized: Vec<Realized> = z
        .terms
        .iter()
        .map(|t| realize_object(mc, t))
        .collect::<Result<_, _>>()?;
    let mut terms = Vec::with_capacity(l);
    let mut diffs = Vec::with_capacity(l.saturating_sub(1));
    for j in 0..l {
        let i = l - 1 - j;
        terms.push(realized[i].module.clone());
        if j + 1 < l {
            // h(Z_i) → h(Z_{i−1}) by precomposition with z.diffs[i−1].
            let (src, tgt) = (&realized[i], &realized[i - 1]);
            let mut cols = Vec::with_capacity(src.module.dim);
            for v in 0..src.module.dim {
                let mut out = vec![Scalar::zero(); tgt.keys.len()];
                for (ki, key) in src.keys.iter().enumerate() {
                    let c = &src.basis[(v, ki)];
                    if c.is_zero() {
                        continue;
                    }
                    let add = precompose_key(mc, &tgt.key_index, tgt.keys.len(), key, c, &z.diffs[i - 1])?;
                    for (acc, a) in out.iter_mut().zip(&add) {
                        *acc = &*acc + a;
                    }
                }
                cols.push(tgt.express(&out));
            }
            diffs.push(Matrix::from_fn(
                tgt.module.dim,
                src.module.dim,
                |r, c| cols[c][r].clone(),
            ));
        }
    }
    Ok(ModComplex {
        min_deg: -(l as i64 - 1),
        terms,
        diffs,
    })
}

/// Exact cohomology modules, one per degree.
pub fn cohomology(c: &ModComplex) -> Vec<(i64, FdModule)> {
    let l = c.terms.len();
    let mut out = Vec::with_capacity(l);
    for j in 0..l {
        let m = &c.terms[j];
        let ker_rows = if j < c.diffs.len() {
            c.diffs[j].kernel_basis()
        } else {
            Matrix::identity(m.dim)
        };
        let (kmod, incl) = m.submodule(&ker_rows);
        let mut img_rows = Vec::new();
        if j > 0 {
            let d = &c.diffs[j - 1];
            for col in 0..d.ncols() {
                let v: Vec<Scalar> = (0..d.nrows()).map(|r| d[(r, col)].clone()).collect();
                let x = incl.solve(&v).expect("image lies in the kernel");
                img_rows.push(x);
            }
        }
        let h = if img_rows.is_empty() {
            kmod
        } else {
            kmod.quotient(&Matrix::from_rows(img_rows)).0
        };
        out.push((c.min_deg + j as i64, h));
    }
    out
}

/// Whether every term of the complex is projective (its projective cover
/// has the same dimension).
pub fn terms_projective(mc: &MonCtx, c: &ModComplex) -> Result<bool, MonError> {
    for m in &c.terms {
        let cov = projective_cover_of(&mc.rc.pd, m)?;
        if cov.module.dim != m.dim {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The minimal projective resolution of a module as a module complex in
/// degrees `−(len−1) .. 0`.
pub fn resolution_mod_complex(mc: &MonCtx, m: &FdModule) -> Result<ModComplex, MonError> {
    let pd = &mc.rc.pd;
    let cap = 2 * mc.n() + 4;
    let res = weight_algebra::resolve(pd, m, cap)?;
    if !res.complete {
        return Err(MonError::Structure(
            "projective resolution did not terminate within the expected length".into(),
        ));
    }
    let r = res.len();
    if r == 0 {
        return Ok(ModComplex {
            min_deg: 0,
            terms: vec![FdModule {
                dim: 0,
                action: vec![Matrix::zero(0, 0); mc.rc.wd.alg.dim],
            }],
            diffs: Vec::new(),
        });
    }
    let terms: Vec<FdModule> = (0..r).map(|j| res.covers[r - 1 - j].module.clone()).collect();
    let diffs: Vec<Matrix> = (0..r.saturating_sub(1))
        .map(|j| res.differential(r - 1 - j))
        .collect();
    Ok(ModComplex {
        min_deg: -(r as i64 - 1),
        terms,
        diffs,
    })
}

/// A termwise-projective representative of the derived class of `c`: the
/// complex itself when its terms are projective, otherwise — when the
/// cohomology is concentrated in degree zero — the minimal resolution of
/// `H⁰`.  The flag records whether the original terms were projective.
pub fn projective_replacement(
    mc: &MonCtx,
    c: &ModComplex,
) -> Result<(ModComplex, bool), MonError> {
    if terms_projective(mc, c)? {
        return Ok((
            ModComplex {
                min_deg: c.min_deg,
                terms: c.terms.clone(),
                diffs: c.diffs.clone(),
            },
            true,
        ));
    }
    let hs = cohomology(c);
    if let Some((d, h)) = hs.iter().find(|(d, h)| *d != 0 && h.dim > 0) {
        return Err(MonError::NotProjective(format!(
            "terms are not projective and cohomology does not vanish in degree {d} (dim {})",
            h.dim
        )));
    }
    let h0 = hs
        .iter()
        .find(|(d, _)| *d == 0)
        .map(|(_, h)| h.clone())
        .unwrap_or(FdModule {
            dim: 0,
            action: vec![Matrix::zero(0, 0); mc.rc.wd.alg.dim],
        });
    Ok((resolution_mod_complex(mc, &h0)?, false))
}

/// Certifies that every term is projective and rewrites the complex as a
/// labelled projective complex (exact isomorphisms throughout).
pub fn certify_projective_complex(
    mc: &MonCtx,
    c: &ModComplex,
) -> Result<ProjComplex, MonError> {
    let pd = &mc.rc.pd;
    let alg_dim = mc.rc.wd.alg.dim;
    let covers: Vec<_> = c
        .terms
        .iter()
        .map(|m| projective_cover_of(pd, m))
        .collect::<Result<Vec<_>, _>>()?;
    for (j, (m, cov)) in c.terms.iter().zip(&covers).enumerate() {
        if cov.module.dim != m.dim {
            return Err(MonError::NotProjective(format!(
                "term at degree {} has dimension {} but projective cover of dimension {}",
                c.min_deg + j as i64,
                m.dim,
                cov.module.dim
            )));
        }
    }
    let mut terms = Vec::new();
    let mut diffs = Vec::new();
    for (j, cov) in covers.iter().enumerate() {
        terms.push(cov.summands.iter().map(|(l, _)| *l).collect::<Vec<_>>());
        if j + 1 >= covers.len() {
            continue;
        }
        let next = &covers[j + 1];
        // Transported differential P_j → P_{j+1} through the cover isos.
        let dj = c.diffs[j].matmul(&cov.map);
        let mut transported = Matrix::zero(next.module.dim, cov.module.dim);
        for col in 0..dj.ncols() {
            let v: Vec<Scalar> = (0..dj.nrows()).map(|r| dj[(r, col)].clone()).collect();
            let x = next.map.solve(&v).expect("cover map is invertible");
            for (r, val) in x.iter().enumerate() {
                transported[(r, col)] = val.clone();
            }
        }
        // Read off algebra elements summand by summand.
        let mut em = ElemMat::zero(next.summands.len(), cov.summands.len(), alg_dim);
        for (s, (sl, _)) in cov.summands.iter().enumerate() {
            let ideal = &pd.projectives[*sl];
            let mut gen = vec![Scalar::zero(); cov.module.dim];
            for (k, g) in ideal.gen_in_basis.iter().enumerate() {
                gen[cov.offsets[s] + k] = g.clone();
            }
            let img: Vec<Scalar> = (0..next.module.dim)
                .map(|r| {
                    let mut acc = Scalar::zero();
                    for (k, g) in gen.iter().enumerate() {
                        if !g.is_zero() {
                            acc = &acc + &(&transported[(r, k)] * g);
                        }
                    }
                    acc
                })
                .collect();
            for (t, (tl, _)) in next.summands.iter().enumerate() {
                let tideal = &pd.projectives[*tl];
                let off = next.offsets[t];
                let mut elem = vec![Scalar::zero(); alg_dim];
                for (ci, coeff) in img[off..off + tideal.module.dim].iter().enumerate() {
                    if coeff.is_zero() {
                        continue;
                    }
                    for r in 0..alg_dim {
                        elem[r] = &elem[r] + &(coeff * &tideal.basis[(r, ci)]);
                    }
                }
                em.entries[t][s] = elem;
            }
        }
        diffs.push(em);
    }
    let pc = ProjComplex {
        min_deg: c.min_deg,
        terms,
        diffs,
    };
    pc.verify(&mc.rc)?;
    Ok(pc)
}
