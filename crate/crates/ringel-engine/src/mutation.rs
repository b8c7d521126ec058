//! Dual exceptional collections via mutation: universal fibers against
//! each lower exceptional object, Gaussian minimization of complexes, and
//! the costandard character / co-aisle membership test.

use crate::complex::{ElemMat, ProjComplex};
use crate::homkb::{chain_map_basis, hom_kb, shift_range, ChainMap};
use crate::{RingelCtx, RingelError};
use scalar_field::{Matrix, Scalar};

/// The fiber of a chain map `F: X → B` (the shifted cone), whose
/// Hom-spaces into any exceptional `E` with `B ∈ ⟨E[k]⟩` vanish when `F`
/// is the universal map.
fn fiber(ctx: &RingelCtx, x: &ProjComplex, b: &ProjComplex, f: &ChainMap) -> ProjComplex {
    assert_eq!(f.shift, 0, "fiber expects an unshifted chain map");
    let alg_dim = ctx.wd.alg.dim;
    let min = x.min_deg.min(b.min_deg + 1);
    let max = x.max_deg().max(b.max_deg() + 1);
    let mut terms = Vec::new();
    for d in min..=max {
        let mut t = x.term(d).to_vec();
        t.extend_from_slice(b.term(d - 1));
        terms.push(t);
    }
    let mut diffs = Vec::new();
    for d in min..max {
        let dx = x.diff(d, alg_dim);
        let db = b.diff(d - 1, alg_dim);
        let f_idx = d - x.min_deg;
        let f_blk = if f_idx >= 0 && (f_idx as usize) < f.blocks.len() {
            f.blocks[f_idx as usize].clone()
        } else {
            ElemMat::zero(b.term(d).len(), x.term(d).len(), alg_dim)
        };
        let (nx, nb) = (x.term(d).len(), b.term(d - 1).len());
        let (mx, mb) = (x.term(d + 1).len(), b.term(d).len());
        let mut m = ElemMat::zero(mx + mb, nx + nb, alg_dim);
        for i in 0..mx {
            for j in 0..nx {
                m.entries[i][j] = dx.entries[i][j].clone();
            }
        }
        for i in 0..mb {
            for j in 0..nx {
                m.entries[mx + i][j] = f_blk.entries[i][j]
                    .iter()
                    .map(|c| -c)
                    .collect();
            }
            for j in 0..nb {
                m.entries[mx + i][nx + j] = db.entries[i][j].iter().map(|c| -c).collect();
            }
        }
        diffs.push(m);
    }
    ProjComplex {
        min_deg: min,
        terms,
        diffs,
    }
    .trim()
}

/// Inverse of `x` inside the corner `e_λ·A·e_λ`, when it exists.
fn corner_inverse(ctx: &RingelCtx, label: usize, x: &[Scalar]) -> Option<Vec<Scalar>> {
    let basis = &ctx.pair_basis[label][label];
    let d = basis.ncols();
    // Left multiplication by x on the corner, in corner coordinates.
    let mut cols = Vec::with_capacity(d);
    for c in 0..d {
        let b: Vec<Scalar> = (0..ctx.wd.alg.dim).map(|r| basis[(r, c)].clone()).collect();
        cols.push(ctx.pair_coords(label, label, &ctx.wd.alg.multiply(x, &b)));
    }
    let lmul = Matrix::from_fn(d, d, |i, j| cols[j][i].clone());
    let e = ctx.pair_coords(label, label, &ctx.pd.projectives[label].idem);
    let y_coords = lmul.solve(&e)?;
    let mut y = vec![Scalar::zero(); ctx.wd.alg.dim];
    for (c, coeff) in y_coords.iter().enumerate() {
        for r in 0..ctx.wd.alg.dim {
            y[r] = &y[r] + &(coeff * &basis[(r, c)]);
        }
    }
    // One-sided inverses in a unital corner are two-sided; verify anyway.
    let idem = &ctx.pd.projectives[label].idem;
    (ctx.wd.alg.multiply(&y, x) == *idem && ctx.wd.alg.multiply(x, &y) == *idem).then_some(y)
}

/// Cancels isomorphic summand pairs across differentials until the
/// complex is minimal.
pub fn minimize(ctx: &RingelCtx, mut c: ProjComplex) -> ProjComplex {
    let alg = &ctx.wd.alg;
    'outer: loop {
        for k in 0..c.diffs.len() {
            let (src, tgt) = (c.terms[k].clone(), c.terms[k + 1].clone());
            for i in 0..tgt.len() {
                for j in 0..src.len() {
                    if src[j] != tgt[i] {
                        continue;
                    }
                    let x = c.diffs[k].entries[i][j].clone();
                    let Some(inv) = corner_inverse(ctx, src[j], &x) else {
                        continue;
                    };
                    // Gaussian cancellation of the contractible pair.
                    let old = c.diffs[k].clone();
                    let mut new_d =
                        ElemMat::zero(tgt.len() - 1, src.len() - 1, alg.dim);
                    let keep = |v: usize, skip: usize| if v < skip { v } else { v + 1 };
                    for ii in 0..tgt.len() - 1 {
                        for jj in 0..src.len() - 1 {
                            let (oi, oj) = (keep(ii, i), keep(jj, j));
                            let corr = alg.multiply(
                                &old.entries[i][oj],
                                &alg.multiply(&inv, &old.entries[oi][j]),
                            );
                            let mut e = old.entries[oi][oj].clone();
                            for (a, b) in e.iter_mut().zip(&corr) {
                                *a = &*a - b;
                            }
                            new_d.entries[ii][jj] = e;
                        }
                    }
                    c.diffs[k] = new_d;
                    c.terms[k].remove(j);
                    c.terms[k + 1].remove(i);
                    if k > 0 {
                        c.diffs[k - 1].entries.remove(j);
                        c.diffs[k - 1].rows -= 1;
                    }
                    if k + 1 < c.diffs.len() {
                        for row in &mut c.diffs[k + 1].entries {
                            row.remove(i);
                        }
                        c.diffs[k + 1].cols -= 1;
                    }
                    continue 'outer;
                }
            }
        }
        return c.trim();
    }
}

/// The total order refining the weight order: labels are already listed
/// by (support size, irrep label); mutation processes them from the
/// bottom of the highest-weight order upward (largest support first).
fn mutation_order(ctx: &RingelCtx) -> Vec<usize> {
    let mut order: Vec<usize> = (0..ctx.n()).collect();
    order.sort_by_key(|&l| {
        (
            std::cmp::Reverse(ctx.wd.labels[l].class),
            ctx.wd.labels[l].irrep.clone(),
        )
    });
    order
}

/// The dual collection `{X_λ}`: each `Y_λ` corrected by universal fibers
/// against every exceptional strictly above it (processed from the bottom
/// of the order upward, so earlier corrections are never undone), then
/// certified by the orthogonality table `hom_kb(X_λ, Y_μ, k) = δ_{λμ}·δ_{k0}`.
pub fn dual_collection(
    ctx: &RingelCtx,
    ys: &[ProjComplex],
) -> Result<Vec<ProjComplex>, RingelError> {
    let mut xs = Vec::with_capacity(ys.len());
    for l in 0..ctx.n() {
        let mut x = ys[l].clone();
        for &mu in &mutation_order(ctx) {
            if !ctx.wd.less[l][mu] {
                continue;
            }
            // Universal map into shifted copies of Y_μ.
            let (lo, hi) = shift_range(&x, &ys[mu]);
            let mut b: Option<ProjComplex> = None;
            let mut f_blocks: Vec<ElemMat> = Vec::new();
            for k in lo..=hi {
                for f in chain_map_basis(ctx, &x, &ys[mu], k) {
                    let shifted = ys[mu].shift(k);
                    b = Some(match b {
                        None => shifted.clone(),
                        Some(prev) => prev.direct_sum(&shifted, ctx.wd.alg.dim),
                    });
                    // Stack the new component under the accumulated map.
                    f_blocks = stack_components(ctx, &x, b.as_ref().unwrap(), &f_blocks, &shifted, f);
                }
            }
            if let Some(b) = b {
                let f = ChainMap {
                    shift: 0,
                    blocks: f_blocks,
                };
                x = minimize(ctx, fiber(ctx, &x, &b, &f));
            }
        }
        x.verify(ctx)?;
        xs.push(x);
    }
    // Orthogonality certifies uniqueness up to isomorphism.
    for (l, x) in xs.iter().enumerate() {
        for (mu, y) in ys.iter().enumerate() {
            let (lo, hi) = shift_range(x, y);
            for k in lo..=hi {
                let d = hom_kb(ctx, x, y, k);
                let expected = usize::from(l == mu && k == 0);
                if d != expected {
                    return Err(RingelError::MutationFailed {
                        lambda: ctx.wd.labels[l].display(),
                        mu: ctx.wd.labels[mu].display(),
                        shift: k,
                        dim: d,
                    });
                }
            }
        }
    }
    Ok(xs)
}

/// Rebuilds the accumulated blocks of `X → B_prev ⊕ S` from the blocks of
/// `X → B_prev` and a chain map `X → Y[k]` into the new summand `S`.
fn stack_components(
    ctx: &RingelCtx,
    x: &ProjComplex,
    b_new: &ProjComplex,
    prev_blocks: &[ElemMat],
    shifted: &ProjComplex,
    f: ChainMap,
) -> Vec<ElemMat> {
    let alg_dim = ctx.wd.alg.dim;
    let mut out = Vec::new();
    for (deg_idx, xt) in x.terms.iter().enumerate() {
        let n = x.min_deg + deg_idx as i64;
        let total = b_new.term(n).len();
        let mut m = ElemMat::zero(total, xt.len(), alg_dim);
        let prev_rows = total - shifted.term(n).len();
        if !prev_blocks.is_empty() {
            for i in 0..prev_rows {
                for j in 0..xt.len() {
                    m.entries[i][j] = prev_blocks[deg_idx].entries[i][j].clone();
                }
            }
        }
        // New component: f as a map X_n → Y_{n+k} = (Y[k])_n.
        let f_idx = n - x.min_deg;
        if (f_idx as usize) < f.blocks.len() {
            let blk = &f.blocks[f_idx as usize];
            for i in 0..blk.rows {
                for j in 0..xt.len() {
                    m.entries[prev_rows + i][j] = blk.entries[i][j].clone();
                }
            }
        }
        out.push(m);
    }
    out
}

/// The costandard character of a complex read through the dual-collection
/// probes, with the co-aisle membership verdict.
#[derive(Clone, Debug)]
pub struct NablaCharacter {
    /// Per label: the (shift, dimension) pairs with nonzero dimension.
    pub char_data: Vec<Vec<(i64, usize)>>,
    /// True when every positive shift vanishes for every label.
    pub in_co_aisle: bool,
}

pub fn nabla_character(
    ctx: &RingelCtx,
    xs: &[ProjComplex],
    c: &ProjComplex,
) -> NablaCharacter {
    let mut char_data = Vec::with_capacity(xs.len());
    let mut in_co_aisle = true;
    for x in xs {
        let (lo, hi) = shift_range(x, c);
        let mut poly = Vec::new();
        for k in lo..=hi {
            let d = hom_kb(ctx, x, c, k);
            if d > 0 {
                poly.push((k, d));
                if k > 0 {
                    in_co_aisle = false;
                }
            }
        }
        char_data.push(poly);
    }
    NablaCharacter {
        char_data,
        in_co_aisle,
    }
}
