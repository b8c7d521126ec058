//! Indecomposable tilting modules by the universal-extension process,
//! with both filtration certificates and locality of the endomorphism
//! ring.

use crate::{RingelCtx, RingelError};
use diagram_category::FdAlgebra;
use scalar_field::{Matrix, Scalar};
use weight_algebra::{
    ext_dim, hom_space, projective_cover_of, standard_filtration, FdModule,
};

/// A certified tilting module.
#[derive(Clone, Debug)]
pub struct TiltingModule {
    pub label: usize,
    pub module: FdModule,
    /// Δ-filtration layers from the top.
    pub delta_filtration: Vec<usize>,
    /// `(T : ∇(μ)) = dim Hom(Δ(μ), T)` per label.
    pub nabla_mults: Vec<usize>,
    /// `Ext¹(T, ∇(μ)) = 0` for all μ.
    pub delta_certificate: bool,
    /// `Ext¹(Δ(μ), T) = 0` for all μ.
    pub nabla_certificate: bool,
    pub end_local: bool,
}

/// A basis of Ext¹(Δ(μ), T) as cocycles `K → T` modulo restrictions,
/// where `K` is the first syzygy of Δ(μ).
fn ext1_cocycles(
    ctx: &RingelCtx,
    mu: usize,
    t: &FdModule,
) -> Result<(FdModule, Matrix, FdModule, Vec<Matrix>), RingelError> {
    let cover = projective_cover_of(&ctx.pd, &ctx.wd.standards[mu])?;
    let ker_rows = cover.map.kernel_basis();
    let (kernel, incl) = cover.module.submodule(&ker_rows);
    let candidates = hom_space(&ctx.wd.alg, &kernel, t);
    let restricted: Vec<Vec<Scalar>> = hom_space(&ctx.wd.alg, &cover.module, t)
        .iter()
        .map(|g| flatten(&g.matmul(&incl)))
        .collect();
    let mut pool = restricted;
    let mut rank = rank_of(&pool);
    let mut cocycles = Vec::new();
    for phi in candidates {
        pool.push(flatten(&phi));
        let new_rank = rank_of(&pool);
        if new_rank > rank {
            rank = new_rank;
            cocycles.push(phi);
        } else {
            pool.pop();
        }
    }
    Ok((cover.module, incl, kernel, cocycles))
}

fn flatten(m: &Matrix) -> Vec<Scalar> {
    (0..m.nrows())
        .flat_map(|i| (0..m.ncols()).map(move |j| m[(i, j)].clone()))
        .collect()
}

fn rank_of(rows: &[Vec<Scalar>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    Matrix::from_rows(rows.to_vec()).rank()
}

/// The universal extension `0 → T → T' → Δ(μ)^m → 0` along all Ext¹
/// cocycles at once, as the pushout of `T ← K^m → P₀^m`.
fn universal_extension(
    t: &FdModule,
    p0: &FdModule,
    incl: &Matrix,
    kernel: &FdModule,
    cocycles: &[Matrix],
) -> FdModule {
    let mut big = t.clone();
    for _ in cocycles {
        big = big.direct_sum(p0);
    }
    let mut rows = Vec::new();
    for (c, phi) in cocycles.iter().enumerate() {
        for kb in 0..kernel.dim {
            let mut row = vec![Scalar::zero(); big.dim];
            for r in 0..t.dim {
                row[r] = phi[(r, kb)].clone();
            }
            let off = t.dim + c * p0.dim;
            for r in 0..p0.dim {
                row[off + r] = -&incl[(r, kb)];
            }
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return t.clone();
    }
    big.quotient(&Matrix::from_rows(rows)).0
}

/// Builds `T(λ)` from Δ(λ) by iterated universal extensions until every
/// Ext¹(Δ(μ), −) vanishes, then certifies both filtrations.
pub fn tilting_module(ctx: &RingelCtx, l: usize) -> Result<TiltingModule, RingelError> {
    let n = ctx.n();
    let mut t = ctx.wd.standards[l].clone();
    let max_passes = 2 * n + 2;
    let mut pass = 0;
    loop {
        pass += 1;
        if pass > max_passes {
            return Err(RingelError::ExtensionStepFailed(format!(
                "universal extensions for {} did not stabilize",
                ctx.wd.labels[l].display()
            )));
        }
        let mut extended = false;
        for mu in 0..n {
            let (p0, incl, kernel, cocycles) = ext1_cocycles(ctx, mu, &t)?;
            if cocycles.is_empty() {
                continue;
            }
            t = universal_extension(&t, &p0, &incl, &kernel, &cocycles);
            extended = true;
        }
        if !extended {
            break;
        }
    }
    // Certificates.
    let nabla_certificate =
        (0..n).try_fold(true, |acc, mu| -> Result<bool, RingelError> {
            Ok(acc && ext_dim(&ctx.pd, &ctx.wd.standards[mu], &t, 1)? == 0)
        })?;
    let delta_certificate =
        (0..n).try_fold(true, |acc, mu| -> Result<bool, RingelError> {
            Ok(acc && ext_dim(&ctx.pd, &t, &ctx.wd.costandards[mu], 1)? == 0)
        })?;
    let delta_filtration = standard_filtration(&ctx.wd, &t, &ctx.wd.standards)
        .ok_or_else(|| {
            RingelError::ExtensionStepFailed(format!(
                "no Δ-filtration found for T({})",
                ctx.wd.labels[l].display()
            ))
        })?;
    let nabla_mults: Vec<usize> = (0..n)
        .map(|mu| hom_space(&ctx.wd.alg, &ctx.wd.standards[mu], &t).len())
        .collect();
    // Structural sanity: multiplicity one at λ, support below λ only.
    if ctx.pd.composition_multiplicity(&t, l) != 1 {
        return Err(RingelError::Structure(format!(
            "[T({0}):L({0})] ≠ 1",
            ctx.wd.labels[l].display()
        )));
    }
    for mu in 0..n {
        if mu != l
            && !ctx.wd.less[mu][l]
            && ctx.pd.composition_multiplicity(&t, mu) != 0
        {
            return Err(RingelError::Structure(format!(
                "T({}) has a composition factor above its weight: {}",
                ctx.wd.labels[l].display(),
                ctx.wd.labels[mu].display()
            )));
        }
    }
    let end_local = endomorphism_algebra(&ctx.wd.alg, &t)
        .map(|e| e.dim - e.radical_basis().nrows() == 1)
        .unwrap_or(false);
    Ok(TiltingModule {
        label: l,
        module: t,
        delta_filtration,
        nabla_mults,
        delta_certificate,
        nabla_certificate,
        end_local,
    })
}

/// The endomorphism algebra of a module, in a hom-space basis.
pub fn endomorphism_algebra(alg: &FdAlgebra, m: &FdModule) -> Option<FdAlgebra> {
    let basis = hom_space(alg, m, m);
    let d = basis.len();
    let flat = Matrix::from_rows(basis.iter().map(flatten).collect());
    let express = |x: &Matrix| flat.transpose().solve(&flatten(x));
    let mut mult = vec![vec![vec![Scalar::zero(); d]; d]; d];
    for i in 0..d {
        for j in 0..d {
            // Product in End: apply j first, then i.
            mult[i][j] = express(&basis[i].matmul(&basis[j]))?;
        }
    }
    let unit = express(&Matrix::identity(m.dim))?;
    Some(FdAlgebra { dim: d, mult, unit })
}
