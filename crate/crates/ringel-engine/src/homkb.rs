//! Hom-spaces between labelled projective complexes modulo homotopy, by
//! exact rank computations in the corner coordinates `e_λ·A·e_μ`.

use crate::complex::{ElemMat, ProjComplex};
use crate::RingelCtx;
use scalar_field::{Matrix, Scalar};

/// A chain map `X → Y[k]` recorded by its per-degree element blocks.
#[derive(Clone, Debug)]
pub struct ChainMap {
    pub shift: i64,
    /// `blocks[n − X.min_deg]: X_n → Y_{n+k}`.
    pub blocks: Vec<ElemMat>,
}

/// One coordinate of a degree-`k` map: a pair-basis column between a
/// source summand of `X_n` and a target summand of `Y_{n+k}`.
struct Var {
    deg_idx: usize,
    tgt: usize,
    src: usize,
    col: usize,
}

fn degree_vars(ctx: &RingelCtx, x: &ProjComplex, y: &ProjComplex, k: i64) -> Vec<Var> {
    let mut vars = Vec::new();
    for (deg_idx, xt) in x.terms.iter().enumerate() {
        let n = x.min_deg + deg_idx as i64;
        let yt = y.term(n + k);
        for (tgt, &tl) in yt.iter().enumerate() {
            for (src, &sl) in xt.iter().enumerate() {
                for col in 0..ctx.pair_basis[sl][tl].ncols() {
                    vars.push(Var {
                        deg_idx,
                        tgt,
                        src,
                        col,
                    });
                }
            }
        }
    }
    vars
}

fn realize(
    ctx: &RingelCtx,
    x: &ProjComplex,
    y: &ProjComplex,
    k: i64,
    vars: &[Var],
    coeffs: &[Scalar],
) -> Vec<ElemMat> {
    let alg_dim = ctx.wd.alg.dim;
    let mut blocks: Vec<ElemMat> = x
        .terms
        .iter()
        .enumerate()
        .map(|(deg_idx, xt)| {
            let n = x.min_deg + deg_idx as i64;
            ElemMat::zero(y.term(n + k).len(), xt.len(), alg_dim)
        })
        .collect();
    for (v, c) in vars.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        let n = x.min_deg + v.deg_idx as i64;
        let sl = x.terms[v.deg_idx][v.src];
        let tl = y.term(n + k)[v.tgt];
        let basis = &ctx.pair_basis[sl][tl];
        let entry = &mut blocks[v.deg_idx].entries[v.tgt][v.src];
        for r in 0..alg_dim {
            entry[r] = &entry[r] + &(c * &basis[(r, v.col)]);
        }
    }
    blocks
}

/// The chain-map defect `d_Y[k]∘f − f∘d_X` per source degree.
fn chain_defect(
    ctx: &RingelCtx,
    x: &ProjComplex,
    y: &ProjComplex,
    k: i64,
    blocks: &[ElemMat],
) -> Vec<ElemMat> {
    let alg = &ctx.wd.alg;
    let sign = if k.rem_euclid(2) == 0 {
        Scalar::one()
    } else {
        -&Scalar::one()
    };
    let mut out = Vec::new();
    for (deg_idx, _) in x.terms.iter().enumerate() {
        let n = x.min_deg + deg_idx as i64;
        let dx = x.diff(n, alg.dim);
        let f_next = if deg_idx + 1 < blocks.len() {
            blocks[deg_idx + 1].clone()
        } else {
            ElemMat::zero(y.term(n + 1 + k).len(), 0, alg.dim)
        };
        let dy = y.diff(n + k, alg.dim);
        let lhs = ElemMat::compose(alg, &dx, &f_next);
        let rhs = ElemMat::compose(alg, &blocks[deg_idx], &dy).scale(&sign);
        out.push(lhs.sub(&rhs));
    }
    out
}

/// Flattens per-degree defect blocks into pair-basis coordinates.
fn defect_coords(
    ctx: &RingelCtx,
    x: &ProjComplex,
    y: &ProjComplex,
    k: i64,
    defect: &[ElemMat],
) -> Vec<Scalar> {
    let mut out = Vec::new();
    for (deg_idx, xt) in x.terms.iter().enumerate() {
        let n = x.min_deg + deg_idx as i64;
        let yt = y.term(n + 1 + k);
        for (i, &tl) in yt.iter().enumerate() {
            for (j, &sl) in xt.iter().enumerate() {
                out.extend(ctx.pair_coords(sl, tl, &defect[deg_idx].entries[i][j]));
            }
        }
    }
    out
}

/// Coordinates of realized blocks in the degree-`k` variable basis.
fn block_coords(
    ctx: &RingelCtx,
    x: &ProjComplex,
    y: &ProjComplex,
    k: i64,
    blocks: &[ElemMat],
) -> Vec<Scalar> {
    let mut out = Vec::new();
    for (deg_idx, xt) in x.terms.iter().enumerate() {
        let n = x.min_deg + deg_idx as i64;
        let yt = y.term(n + k);
        for (i, &tl) in yt.iter().enumerate() {
            for (j, &sl) in xt.iter().enumerate() {
                out.extend(ctx.pair_coords(sl, tl, &blocks[deg_idx].entries[i][j]));
            }
        }
    }
    out
}

/// Boundary of a homotopy `h` (a degree-`k−1` map): `d_Y[k]∘h + h∘d_X`.
fn homotopy_boundary(
    ctx: &RingelCtx,
    x: &ProjComplex,
    y: &ProjComplex,
    k: i64,
    h_blocks: &[ElemMat],
) -> Vec<ElemMat> {
    let alg = &ctx.wd.alg;
    let sign = if k.rem_euclid(2) == 0 {
        Scalar::one()
    } else {
        -&Scalar::one()
    };
    let mut out = Vec::new();
    for (deg_idx, _) in x.terms.iter().enumerate() {
        let n = x.min_deg + deg_idx as i64;
        let dx = x.diff(n, alg.dim);
        let h_next = if deg_idx + 1 < h_blocks.len() {
            h_blocks[deg_idx + 1].clone()
        } else {
            ElemMat::zero(y.term(n + k).len(), 0, alg.dim)
        };
        let dy = y.diff(n + k - 1, alg.dim);
        let term1 = ElemMat::compose(alg, &h_blocks[deg_idx], &dy).scale(&sign);
        let term2 = ElemMat::compose(alg, &dx, &h_next);
        out.push(term1.add(&term2));
    }
    out
}

fn unit_coeffs(len: usize, at: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); len];
    v[at] = Scalar::one();
    v
}

/// Basis of `Hom_{K^b}(X, Y[k])`: representative chain maps spanning the
/// cycle space modulo null-homotopic maps.
pub fn chain_map_basis(
    ctx: &RingelCtx,
    x: &ProjComplex,
    y: &ProjComplex,
    k: i64,
) -> Vec<ChainMap> {
    let f_vars = degree_vars(ctx, x, y, k);
    if f_vars.is_empty() {
        return Vec::new();
    }
    // Chain-map condition as a matrix over the f-variables.
    let mut constraint_cols: Vec<Vec<Scalar>> = Vec::with_capacity(f_vars.len());
    for v in 0..f_vars.len() {
        let blocks = realize(ctx, x, y, k, &f_vars, &unit_coeffs(f_vars.len(), v));
        let defect = chain_defect(ctx, x, y, k, &blocks);
        constraint_cols.push(defect_coords(ctx, x, y, k, &defect));
    }
    let constraint = Matrix::from_rows(constraint_cols).transpose();
    let cycles = constraint.kernel_basis(); // rows are cycle coefficient vectors
    if cycles.nrows() == 0 {
        return Vec::new();
    }
    // Boundaries from homotopies, expressed in the same f-variable basis.
    let h_vars = degree_vars(ctx, x, y, k - 1);
    let mut boundary_rows: Vec<Vec<Scalar>> = Vec::new();
    for v in 0..h_vars.len() {
        let h_blocks = realize(ctx, x, y, k - 1, &h_vars, &unit_coeffs(h_vars.len(), v));
        let b = homotopy_boundary(ctx, x, y, k, &h_blocks);
        boundary_rows.push(block_coords(ctx, x, y, k, &b));
    }
    // Select cycle rows independent modulo the boundaries.
    let rank_of = |rows: &[Vec<Scalar>]| {
        if rows.is_empty() {
            0
        } else {
            Matrix::from_rows(rows.to_vec()).rank()
        }
    };
    let mut out = Vec::new();
    let mut pool = boundary_rows;
    let mut rank = rank_of(&pool);
    for r in 0..cycles.nrows() {
        let coeffs: Vec<Scalar> = cycles.row(r).to_vec();
        let blocks = realize(ctx, x, y, k, &f_vars, &coeffs);
        let cand = block_coords(ctx, x, y, k, &blocks);
        pool.push(cand);
        let new_rank = rank_of(&pool);
        if new_rank > rank {
            rank = new_rank;
            out.push(ChainMap { shift: k, blocks });
        } else {
            pool.pop();
        }
    }
    out
}

/// `dim Hom_{K^b}(X, Y[k])`.
pub fn hom_kb(ctx: &RingelCtx, x: &ProjComplex, y: &ProjComplex, k: i64) -> usize {
    chain_map_basis(ctx, x, y, k).len()
}

/// The inclusive range of shifts where `Hom(X, Y[k])` can be nonzero.
pub fn shift_range(x: &ProjComplex, y: &ProjComplex) -> (i64, i64) {
    (y.min_deg - x.max_deg(), y.max_deg() - x.min_deg)
}
