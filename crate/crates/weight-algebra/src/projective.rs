//! Indecomposable projectives via lifted primitive idempotents, projective
//! covers, minimal projective resolutions, and Ext groups computed through
//! the `Hom(Ae, N) ≅ eN` identification.

use crate::module::FdModule;
use crate::truncated::WeightLabel;
use crate::WeightError;
use diagram_category::{DiagError, FdAlgebra};
use scalar_field::{Matrix, Scalar};

/// A left ideal `Ae` for an idempotent `e`, with its basis as vectors in
/// algebra coordinates and the generator expressed in the module basis.
#[derive(Clone, Debug)]
pub struct LeftIdeal {
    pub module: FdModule,
    /// `alg.dim × module.dim`; columns are the basis vectors.
    pub basis: Matrix,
    /// The idempotent in algebra coordinates.
    pub idem: Vec<Scalar>,
    /// The idempotent in the module basis.
    pub gen_in_basis: Vec<Scalar>,
}

/// Projectives and simples of a based algebra, per weight label.
pub struct ProjectiveData {
    pub alg: FdAlgebra,
    pub rad: Matrix,
    pub labels: Vec<WeightLabel>,
    /// `L(λ)`: the head of the provided standard module.
    pub simples: Vec<FdModule>,
    pub projectives: Vec<LeftIdeal>,
}

fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// Extracts the corner algebra `eAe` together with its basis rows in the
/// ambient coordinates.
fn corner(alg: &FdAlgebra, e: &[Scalar]) -> (FdAlgebra, Matrix) {
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..alg.dim {
        let mut b = vec![Scalar::zero(); alg.dim];
        b[i] = Scalar::one();
        rows.push(alg.multiply(e, &alg.multiply(&b, e)));
    }
    let (r, pivots) = Matrix::from_rows(rows).rref();
    let d = pivots.len();
    let basis = Matrix::from_fn(d, alg.dim, |i, j| r[(i, j)].clone());
    let basis_cols = basis.transpose();
    let express = |v: &[Scalar]| -> Vec<Scalar> {
        basis_cols.solve(v).expect("corner is multiplicatively closed")
    };
    let mut mult = vec![vec![vec![Scalar::zero(); d]; d]; d];
    for i in 0..d {
        for j in 0..d {
            let prod = alg.multiply(basis.row(i), basis.row(j));
            mult[i][j] = express(&prod);
        }
    }
    let unit = express(e);
    (FdAlgebra { dim: d, mult, unit }, basis)
}

/// A complete list of primitive idempotents of a split semisimple algebra
/// whose sum of associated corners exhausts the unit (mutual orthogonality
/// is not needed downstream).
fn primitive_idempotents_semisimple(alg: &FdAlgebra) -> Result<Vec<Vec<Scalar>>, WeightError> {
    if alg.dim == 0 {
        return Ok(Vec::new());
    }
    match alg.find_idempotent_semisimple() {
        Ok(None) => Ok(vec![alg.unit.clone()]),
        Ok(Some(e)) => {
            let mut one_minus = alg.unit.clone();
            for (a, b) in one_minus.iter_mut().zip(&e) {
                *a = &*a - b;
            }
            let mut out = Vec::new();
            for part in [e, one_minus] {
                if is_zero_vec(&part) {
                    continue;
                }
                let (c, basis) = corner(alg, &part);
                for prim in primitive_idempotents_semisimple(&c)? {
                    // Embed back into ambient coordinates.
                    let mut amb = vec![Scalar::zero(); alg.dim];
                    for (k, coeff) in prim.iter().enumerate() {
                        for j in 0..alg.dim {
                            amb[j] = &amb[j] + &(coeff * &basis[(k, j)]);
                        }
                    }
                    out.push(amb);
                }
            }
            Ok(out)
        }
        Err(DiagError::NonSplitField) => Err(WeightError::NonSplitField),
        Err(e) => Err(e.into()),
    }
}

/// The left ideal `Ae` as a concrete module.
pub fn left_ideal(alg: &FdAlgebra, e: &[Scalar]) -> LeftIdeal {
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..alg.dim {
        let mut b = vec![Scalar::zero(); alg.dim];
        b[i] = Scalar::one();
        rows.push(alg.multiply(&b, e));
    }
    let (r, pivots) = Matrix::from_rows(rows).rref();
    let d = pivots.len();
    let basis = Matrix::from_fn(alg.dim, d, |i, j| r[(j, i)].clone());
    let action = (0..alg.dim)
        .map(|bi| {
            let mut x = vec![Scalar::zero(); alg.dim];
            x[bi] = Scalar::one();
            let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(d);
            for j in 0..d {
                let v: Vec<Scalar> = (0..alg.dim).map(|i| basis[(i, j)].clone()).collect();
                let moved = alg.multiply(&x, &v);
                cols.push(basis.solve(&moved).expect("left ideal is closed"));
            }
            Matrix::from_fn(d, d, |i, j| cols[j][i].clone())
        })
        .collect();
    let gen_in_basis = basis.solve(e).expect("idempotent generates its ideal");
    LeftIdeal {
        module: FdModule { dim: d, action },
        basis,
        idem: e.to_vec(),
        gen_in_basis,
    }
}

impl ProjectiveData {
    /// Builds the per-label data: heads of the given standards as the
    /// simples, and a lifted primitive idempotent (hence `P(λ) = Ae_λ`)
    /// for each label, matched by its action on the simples.
    pub fn new(
        alg: &FdAlgebra,
        labels: &[WeightLabel],
        standards: &[FdModule],
    ) -> Result<ProjectiveData, WeightError> {
        let rad = alg.radical_basis();
        let simples: Vec<FdModule> = standards
            .iter()
            .map(|d| d.quotient(&d.radical_span(&rad)).0)
            .collect();
        let (quot, map) = alg.quotient(&rad);
        let prims_bar = primitive_idempotents_semisimple(&quot)?;
        let mut assigned: Vec<Option<Vec<Scalar>>> = vec![None; labels.len()];
        for ebar in prims_bar {
            let e = alg.lift_idempotent(&map.lift(&ebar));
            let hits: Vec<usize> = (0..labels.len())
                .filter(|&l| !simples[l].act(&e).is_zero())
                .collect();
            if hits.len() != 1 {
                return Err(WeightError::Structure(format!(
                    "primitive idempotent acts nontrivially on {} simples",
                    hits.len()
                )));
            }
            assigned[hits[0]].get_or_insert(e);
        }
        let mut projectives = Vec::new();
        for (l, slot) in assigned.into_iter().enumerate() {
            let Some(e) = slot else {
                return Err(WeightError::Structure(format!(
                    "no primitive idempotent found for label {}",
                    labels[l].display()
                )));
            };
            projectives.push(left_ideal(alg, &e));
        }
        Ok(ProjectiveData {
            alg: alg.clone(),
            rad,
            labels: labels.to_vec(),
            simples,
            projectives,
        })
    }

    /// Composition multiplicity `[M : L(λ)] = dim e_λ·M`.
    pub fn composition_multiplicity(&self, m: &FdModule, label: usize) -> usize {
        m.act(&self.projectives[label].idem).rank()
    }
}

/// One projective cover step: `P = ⊕ Ae_{c_i} ↠ M`.
pub struct ProjCover {
    /// Per summand: (label index, generator image in M coordinates).
    pub summands: Vec<(usize, Vec<Scalar>)>,
    /// Starting offset of each summand inside P.
    pub offsets: Vec<usize>,
    pub module: FdModule,
    /// The covering map, `M.dim × P.dim`.
    pub map: Matrix,
}

/// Builds the projective cover of `M`: generators are chosen per label to
/// span `e_λ·(M/JM)`.
pub fn projective_cover_of(
    pd: &ProjectiveData,
    m: &FdModule,
) -> Result<ProjCover, WeightError> {
    let radm = m.radical_span(&pd.rad);
    // Projection to M/JM as a matrix.
    let (_, proj) = m.quotient(&radm);
    let mut summands: Vec<(usize, Vec<Scalar>)> = Vec::new();
    for l in 0..pd.labels.len() {
        let em = m.act(&pd.projectives[l].idem);
        // Greedily pick columns of e_λ·M whose images in M/JM are
        // independent of everything chosen so far for this label.
        let mut chosen_proj: Vec<Vec<Scalar>> = Vec::new();
        for j in 0..m.dim {
            let x: Vec<Scalar> = (0..m.dim).map(|i| em[(i, j)].clone()).collect();
            if is_zero_vec(&x) {
                continue;
            }
            let px: Vec<Scalar> = (0..proj.nrows())
                .map(|i| {
                    let mut acc = Scalar::zero();
                    for (k, v) in x.iter().enumerate() {
                        acc = &acc + &(&proj[(i, k)] * v);
                    }
                    acc
                })
                .collect();
            let mut trial: Vec<Vec<Scalar>> = chosen_proj.clone();
            trial.push(px);
            if Matrix::from_rows(trial.clone()).rank() == trial.len() {
                chosen_proj = trial;
                summands.push((l, x));
            }
        }
    }
    // Assemble P and the covering map.
    let mut module = FdModule::zero_module(&pd.alg);
    let mut offsets = Vec::new();
    for (l, _) in &summands {
        offsets.push(module.dim);
        module = module.direct_sum(&pd.projectives[*l].module);
    }
    let mut map = Matrix::zero(m.dim, module.dim);
    for (s, (l, x)) in summands.iter().enumerate() {
        let ideal = &pd.projectives[*l];
        for j in 0..ideal.module.dim {
            let w: Vec<Scalar> = (0..pd.alg.dim).map(|i| ideal.basis[(i, j)].clone()).collect();
            let img = m.apply(&w, x);
            for i in 0..m.dim {
                map[(i, offsets[s] + j)] = img[i].clone();
            }
        }
    }
    if map.rank() != m.dim {
        return Err(WeightError::Structure(
            "projective cover map is not surjective".to_string(),
        ));
    }
    Ok(ProjCover {
        summands,
        offsets,
        module,
        map,
    })
}

/// A minimal projective resolution `⋯ → P_1 → P_0 → M → 0`.
pub struct Resolution {
    pub covers: Vec<ProjCover>,
    /// `K_j ↪ P_j` inclusions (`P_j.dim × K_j.dim`); `covers[j+1]` covers
    /// the kernel `K_j`.
    pub kernel_incls: Vec<Matrix>,
    /// Whether the final kernel is zero (finite resolution reached).
    pub complete: bool,
}

impl Resolution {
    /// The differential `P_j → P_{j-1}` as a matrix (j ≥ 1).
    pub fn differential(&self, j: usize) -> Matrix {
        self.kernel_incls[j - 1].matmul(&self.covers[j].map)
    }

    pub fn len(&self) -> usize {
        self.covers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covers.is_empty()
    }
}

/// Resolves `M` minimally up to `max_terms` projective terms.
pub fn resolve(
    pd: &ProjectiveData,
    m: &FdModule,
    max_terms: usize,
) -> Result<Resolution, WeightError> {
    let mut covers = Vec::new();
    let mut kernel_incls = Vec::new();
    let mut current = m.clone();
    let mut complete = false;
    for _ in 0..max_terms {
        if current.dim == 0 {
            complete = true;
            break;
        }
        let cover = projective_cover_of(pd, &current)?;
        let ker_rows = cover.map.kernel_basis();
        let (kernel, incl) = cover.module.submodule(&ker_rows);
        covers.push(cover);
        kernel_incls.push(incl);
        current = kernel;
    }
    if current.dim == 0 {
        complete = true;
    }
    Ok(Resolution {
        covers,
        kernel_incls,
        complete,
    })
}

/// Basis of the subspace `e·N` (columns, in N coordinates).
fn idempotent_subspace(n: &FdModule, e: &[Scalar]) -> Matrix {
    let en = n.act(e);
    let rows: Vec<Vec<Scalar>> = (0..n.dim)
        .map(|j| (0..n.dim).map(|i| en[(i, j)].clone()).collect())
        .collect();
    if rows.is_empty() {
        return Matrix::zero(n.dim, 0);
    }
    let (r, pivots) = Matrix::from_rows(rows).rref();
    Matrix::from_fn(n.dim, pivots.len(), |i, j| r[(j, i)].clone())
}

/// `dim Ext^i(M, N)` from a minimal projective resolution of `M`, using
/// `Hom(Ae_λ, N) ≅ e_λ·N`.
pub fn ext_dim(
    pd: &ProjectiveData,
    m: &FdModule,
    n: &FdModule,
    i: usize,
) -> Result<usize, WeightError> {
    let res = resolve(pd, m, i + 2)?;
    if !res.complete && res.len() < i + 2 {
        return Err(WeightError::ResolutionNotFinite);
    }
    // Hom(P_j, N) coordinates: per summand, a basis of e_λ·N.
    let hom_data: Vec<Vec<Matrix>> = res
        .covers
        .iter()
        .map(|c| {
            c.summands
                .iter()
                .map(|(l, _)| idempotent_subspace(n, &pd.projectives[*l].idem))
                .collect()
        })
        .collect();
    let hom_dim_at = |j: usize| -> usize {
        if j >= res.len() {
            return 0;
        }
        hom_data[j].iter().map(|b| b.ncols()).sum()
    };
    // Realizes a Hom(P_j, N) coordinate vector as a full matrix P_j → N.
    let realize = |j: usize, coords: &[Scalar]| -> Matrix {
        let cover = &res.covers[j];
        let mut full = Matrix::zero(n.dim, cover.module.dim);
        let mut pos = 0usize;
        for (s, (l, _)) in cover.summands.iter().enumerate() {
            let ideal = &pd.projectives[*l];
            let sub = &hom_data[j][s];
            // y = Σ coords · basis vectors of e_λN.
            let mut y = vec![Scalar::zero(); n.dim];
            for k in 0..sub.ncols() {
                for r in 0..n.dim {
                    y[r] = &y[r] + &(&coords[pos + k] * &sub[(r, k)]);
                }
            }
            pos += sub.ncols();
            for col in 0..ideal.module.dim {
                let w: Vec<Scalar> =
                    (0..pd.alg.dim).map(|r| ideal.basis[(r, col)].clone()).collect();
                let img = n.apply(&w, &y);
                for r in 0..n.dim {
                    full[(r, cover.offsets[s] + col)] = img[r].clone();
                }
            }
        }
        full
    };
    // Differential on Hom: ψ ↦ ψ ∘ d_{j+1}, re-expressed in coordinates.
    let induced = |j: usize| -> Matrix {
        // Map Hom(P_j, N) → Hom(P_{j+1}, N).
        let rows_out = hom_dim_at(j + 1);
        let cols_in = hom_dim_at(j);
        if rows_out == 0 || cols_in == 0 {
            return Matrix::zero(rows_out, cols_in);
        }
        let d = res.differential(j + 1);
        let next = &res.covers[j + 1];
        let mut out = Matrix::zero(rows_out, cols_in);
        for cin in 0..cols_in {
            let mut coords = vec![Scalar::zero(); cols_in];
            coords[cin] = Scalar::one();
            let full = realize(j, &coords);
            let composed = full.matmul(&d);
            // Evaluate at each generator of P_{j+1} and express in e_λN.
            let mut pos = 0usize;
            for (s, (_, _)) in next.summands.iter().enumerate() {
                let ideal = &pd.projectives[next.summands[s].0];
                let sub = &hom_data[j + 1][s];
                let mut genvec = vec![Scalar::zero(); next.module.dim];
                for (k, g) in ideal.gen_in_basis.iter().enumerate() {
                    genvec[next.offsets[s] + k] = g.clone();
                }
                let val: Vec<Scalar> = (0..n.dim)
                    .map(|r| {
                        let mut acc = Scalar::zero();
                        for (k, g) in genvec.iter().enumerate() {
                            if !g.is_zero() {
                                acc = &acc + &(&composed[(r, k)] * g);
                            }
                        }
                        acc
                    })
                    .collect();
                let expressed = sub.solve(&val).expect("value lies in e·N");
                for (k, v) in expressed.iter().enumerate() {
                    out[(pos + k, cin)] = v.clone();
                }
                pos += sub.ncols();
            }
        }
        out
    };
    // Ext^i = ker(H_i → H_{i+1}) / im(H_{i-1} → H_i).
    if i >= res.len() {
        return Ok(0);
    }
    let ker = if i + 1 >= res.len() {
        hom_dim_at(i)
    } else {
        let d_up = induced(i);
        hom_dim_at(i) - d_up.rank()
    };
    let im = if i == 0 { 0 } else { induced(i - 1).rank() };
    Ok(ker - im)
}
