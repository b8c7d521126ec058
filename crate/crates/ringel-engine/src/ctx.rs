//! The working context for homological computations: weight data,
//! projectives, and bases of the corner spaces `e_λ·A·e_μ`, plus minimal
//! projective resolutions of standard modules as labelled complexes.

use crate::complex::{ElemMat, ProjComplex};
use crate::RingelError;
use scalar_field::{Matrix, Scalar};
use weight_algebra::{resolve, ProjectiveData, Resolution, WeightData};

pub struct RingelCtx {
    pub wd: WeightData,
    pub pd: ProjectiveData,
    /// `pair_basis[s][t]`: columns spanning `e_s·A·e_t` in algebra
    /// coordinates; the coordinate space of `Hom(Ae_s, Ae_t)`.
    pub pair_basis: Vec<Vec<Matrix>>,
}

impl RingelCtx {
    pub fn new(wd: WeightData) -> Result<RingelCtx, RingelError> {
        let pd = ProjectiveData::new(&wd.alg, &wd.labels, &wd.standards)?;
        let n = wd.labels.len();
        let mut pair_basis = Vec::with_capacity(n);
        for s in 0..n {
            let es = &pd.projectives[s].idem;
            let mut row = Vec::with_capacity(n);
            for t in 0..n {
                let et = &pd.projectives[t].idem;
                let mut vecs: Vec<Vec<Scalar>> = Vec::new();
                for b in 0..wd.alg.dim {
                    let mut x = vec![Scalar::zero(); wd.alg.dim];
                    x[b] = Scalar::one();
                    vecs.push(wd.alg.multiply(es, &wd.alg.multiply(&x, et)));
                }
                let (r, pivots) = Matrix::from_rows(vecs).rref();
                row.push(Matrix::from_fn(wd.alg.dim, pivots.len(), |i, j| {
                    r[(j, i)].clone()
                }));
            }
            pair_basis.push(row);
        }
        Ok(RingelCtx { wd, pd, pair_basis })
    }

    /// Number of labels.
    pub fn n(&self) -> usize {
        self.wd.labels.len()
    }

    /// Expresses an element of `e_s·A·e_t` in the pair basis.
    pub fn pair_coords(&self, s: usize, t: usize, x: &[Scalar]) -> Vec<Scalar> {
        self.pair_basis[s][t]
            .solve(x)
            .expect("element must lie in its idempotent sandwich")
    }
}

/// Converts a minimal resolution into a labelled complex in degrees
/// `−(len−1) ..= 0`.
fn resolution_complex(ctx: &RingelCtx, res: &Resolution) -> ProjComplex {
    let alg = &ctx.wd.alg;
    let len = res.covers.len();
    let mut terms: Vec<Vec<usize>> = Vec::with_capacity(len);
    for j in (0..len).rev() {
        terms.push(res.covers[j].summands.iter().map(|(l, _)| *l).collect());
    }
    let mut diffs = Vec::new();
    for j in (1..len).rev() {
        let d = res.differential(j);
        let src_cover = &res.covers[j];
        let tgt_cover = &res.covers[j - 1];
        let mut m = ElemMat::zero(tgt_cover.summands.len(), src_cover.summands.len(), alg.dim);
        for (s, (l, _)) in src_cover.summands.iter().enumerate() {
            let ideal = &ctx.pd.projectives[*l];
            // Image of the summand generator under the differential.
            let mut gen = vec![Scalar::zero(); src_cover.module.dim];
            for (k, g) in ideal.gen_in_basis.iter().enumerate() {
                gen[src_cover.offsets[s] + k] = g.clone();
            }
            let img: Vec<Scalar> = (0..tgt_cover.module.dim)
                .map(|r| {
                    let mut acc = Scalar::zero();
                    for (k, g) in gen.iter().enumerate() {
                        if !g.is_zero() {
                            acc = &acc + &(&d[(r, k)] * g);
                        }
                    }
                    acc
                })
                .collect();
            for (t, (tl, _)) in tgt_cover.summands.iter().enumerate() {
                let tideal = &ctx.pd.projectives[*tl];
                let off = tgt_cover.offsets[t];
                let block: Vec<Scalar> = img[off..off + tideal.module.dim].to_vec();
                // Ideal-basis coordinates back to algebra coordinates.
                let mut elem = vec![Scalar::zero(); alg.dim];
                for (c, coeff) in block.iter().enumerate() {
                    if coeff.is_zero() {
                        continue;
                    }
                    for r in 0..alg.dim {
                        elem[r] = &elem[r] + &(coeff * &tideal.basis[(r, c)]);
                    }
                }
                m.entries[t][s] = elem;
            }
        }
        diffs.push(m);
    }
    ProjComplex {
        min_deg: -(len as i64 - 1),
        terms,
        diffs,
    }
}

/// The exceptional object `Y_λ`: the minimal projective resolution of
/// Δ(λ), in degrees ≤ 0 with `P(λ)` alone in degree 0; every lower term
/// uses only strictly greater weights.
pub fn resolve_standard(ctx: &RingelCtx, l: usize) -> Result<ProjComplex, RingelError> {
    let max_terms = ctx.n() + 2;
    let res = resolve(&ctx.pd, &ctx.wd.standards[l], max_terms)?;
    if !res.complete {
        return Err(RingelError::ResolutionNotFinite);
    }
    let c = resolution_complex(ctx, &res);
    if c.term(0) != [l] {
        return Err(RingelError::Structure(format!(
            "degree-0 term of Y_{} is not P({})",
            ctx.wd.labels[l].display(),
            ctx.wd.labels[l].display()
        )));
    }
    for d in c.min_deg..0 {
        for &mu in c.term(d) {
            if !ctx.wd.less[l][mu] {
                return Err(RingelError::Structure(format!(
                    "resolution of Δ({}) uses P({}) which is not strictly greater",
                    ctx.wd.labels[l].display(),
                    ctx.wd.labels[mu].display()
                )));
            }
        }
    }
    c.verify(ctx)?;
    Ok(c)
}
