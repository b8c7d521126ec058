//! The Ringel dual: the opposite endomorphism algebra of the full tilting
//! module, its highest-weight data over the opposite order, and the
//! duality report (standard images, projectivity of `R T(λ)`, double-dual
//! Cartan matrix).

use crate::tilting::{tilting_module, TiltingModule};
use crate::{RingelCtx, RingelError};
use diagram_category::FdAlgebra;
use scalar_field::{Matrix, Scalar};
use weight_algebra::{
    hom_space, left_ideal, order_matrix, verify_highest_weight, FdModule, HwReport,
    ProjectiveData, WeightData,
};

/// The dual algebra with the data needed to transport modules along
/// `R = Hom(⊕T, −)`.
pub struct RingelDual {
    /// `End(⊕T(λ))^op`.
    pub algebra: FdAlgebra,
    /// Full endomorphism matrices of `⊕T(λ)`, one per basis element.
    pub basis_mats: Vec<Matrix>,
    /// Offsets of each `T(λ)` inside the direct sum.
    pub offsets: Vec<usize>,
    pub total: FdModule,
    pub tiltings: Vec<TiltingModule>,
    /// Highest-weight data over the opposite order, with standards
    /// `R∇(λ)` and costandards `Hom(Δ(λ), ⊕T)^*`.
    pub wd: WeightData,
}

fn flatten(m: &Matrix) -> Vec<Scalar> {
    (0..m.nrows())
        .flat_map(|i| (0..m.ncols()).map(move |j| m[(i, j)].clone()))
        .collect()
}

/// `Hom_A(⊕T, M)` as a left module over `End(⊕T)^op`: the basis is a
/// hom-space basis, and a dual basis element `t` acts by `f ↦ f∘t`.
fn transport(dual_basis: &[Matrix], alg: &FdAlgebra, total: &FdModule, m: &FdModule) -> FdModule {
    let hom = hom_space(alg, total, m);
    let flat = Matrix::from_rows(hom.iter().map(flatten).collect());
    let coords = |x: &Matrix| {
        flat.transpose()
            .solve(&flatten(x))
            .expect("composite stays in the hom space")
    };
    let action = dual_basis
        .iter()
        .map(|t| {
            let cols: Vec<Vec<Scalar>> = hom.iter().map(|f| coords(&f.matmul(t))).collect();
            Matrix::from_fn(hom.len(), hom.len(), |i, j| cols[j][i].clone())
        })
        .collect();
    FdModule {
        dim: hom.len(),
        action,
    }
}

/// The linear dual of `Hom_A(M, ⊕T)` as a left module over `End(⊕T)^op`
/// (a dual basis element `t` acts on the dualized space by `(t∘−)ᵀ`).
fn transport_dual(
    dual_basis: &[Matrix],
    alg: &FdAlgebra,
    total: &FdModule,
    m: &FdModule,
) -> FdModule {
    let hom = hom_space(alg, m, total);
    let flat = Matrix::from_rows(hom.iter().map(flatten).collect());
    let coords = |x: &Matrix| {
        flat.transpose()
            .solve(&flatten(x))
            .expect("composite stays in the hom space")
    };
    let action = dual_basis
        .iter()
        .map(|t| {
            let cols: Vec<Vec<Scalar>> = hom.iter().map(|g| coords(&t.matmul(g))).collect();
            Matrix::from_fn(hom.len(), hom.len(), |i, j| cols[j][i].clone()).transpose()
        })
        .collect();
    FdModule {
        dim: hom.len(),
        action,
    }
}

/// Builds the Ringel dual from the full tilting family.
pub fn ringel_dual_algebra(ctx: &RingelCtx) -> Result<RingelDual, RingelError> {
    let n = ctx.n();
    let alg = &ctx.wd.alg;
    let tiltings: Vec<TiltingModule> = (0..n)
        .map(|l| tilting_module(ctx, l))
        .collect::<Result<_, _>>()?;
    let mut total = FdModule::zero_module(alg);
    let mut offsets = Vec::new();
    for t in &tiltings {
        offsets.push(total.dim);
        total = total.direct_sum(&t.module);
    }
    // Basis of End(⊕T) from the pairwise hom spaces.
    let mut basis_mats = Vec::new();
    for (j, tj) in tiltings.iter().enumerate() {
        for (i, ti) in tiltings.iter().enumerate() {
            for f in hom_space(alg, &ti.module, &tj.module) {
                let mut full = Matrix::zero(total.dim, total.dim);
                for r in 0..tj.module.dim {
                    for c in 0..ti.module.dim {
                        full[(offsets[j] + r, offsets[i] + c)] = f[(r, c)].clone();
                    }
                }
                basis_mats.push(full);
            }
        }
    }
    let d = basis_mats.len();
    let flat = Matrix::from_rows(basis_mats.iter().map(flatten).collect());
    let express = |x: &Matrix| -> Result<Vec<Scalar>, RingelError> {
        flat.transpose().solve(&flatten(x)).ok_or_else(|| {
            RingelError::Structure("endomorphism product escapes the basis".to_string())
        })
    };
    // Opposite multiplication: x·y in the dual is y∘x in End(⊕T).
    let mut mult = vec![vec![Vec::new(); d]; d];
    for i in 0..d {
        for j in 0..d {
            mult[i][j] = express(&basis_mats[j].matmul(&basis_mats[i]))?;
        }
    }
    let unit = express(&Matrix::identity(total.dim))?;
    let algebra = FdAlgebra { dim: d, mult, unit };
    if !algebra.verify() {
        return Err(RingelError::Structure(
            "dual algebra fails associativity".to_string(),
        ));
    }
    let standards: Vec<FdModule> = (0..n)
        .map(|l| transport(&basis_mats, alg, &total, &ctx.wd.costandards[l]))
        .collect();
    let costandards: Vec<FdModule> = (0..n)
        .map(|l| transport_dual(&basis_mats, alg, &total, &ctx.wd.standards[l]))
        .collect();
    let wd = WeightData {
        alg: algebra.clone(),
        labels: ctx.wd.labels.clone(),
        less: order_matrix(&ctx.wd.labels, false),
        standards,
        costandards,
    };
    Ok(RingelDual {
        algebra,
        basis_mats,
        offsets,
        total,
        tiltings,
        wd,
    })
}

/// The full comparison report for the Ringel dual.
pub struct DualityReport {
    pub hw: HwReport,
    /// `R T(λ)` is projective over the dual for every λ.
    pub rt_projective: bool,
    /// Cartan matrix of the original algebra.
    pub cartan: Vec<Vec<usize>>,
    /// Cartan matrix of the double dual.
    pub double_dual_cartan: Vec<Vec<usize>>,
}

impl DualityReport {
    pub fn all_passed(&self) -> bool {
        self.hw.all_passed() && self.rt_projective && self.cartan == self.double_dual_cartan
    }
}

/// `[P(λ) : L(μ)]` for the given data.
pub fn cartan_matrix(pd: &ProjectiveData) -> Vec<Vec<usize>> {
    (0..pd.labels.len())
        .map(|l| {
            (0..pd.labels.len())
                .map(|mu| pd.composition_multiplicity(&pd.projectives[l].module, mu))
                .collect()
        })
        .collect()
}

/// Searches for an isomorphism between two modules.
fn isomorphic(alg: &FdAlgebra, m: &FdModule, n: &FdModule) -> bool {
    if m.dim != n.dim {
        return false;
    }
    if m.dim == 0 {
        return true;
    }
    let basis = hom_space(alg, m, n);
    if basis.iter().any(|b| b.rank() == m.dim) {
        return true;
    }
    for x in 1..=(basis.len() as i64 + 1) {
        let mut combo = Matrix::zero(n.dim, m.dim);
        let mut c = Scalar::one();
        for b in &basis {
            combo = combo.add(&b.scale(&c));
            c = &c * &Scalar::from_integer(x + 1);
        }
        if combo.rank() == m.dim {
            return true;
        }
    }
    false
}

/// Runs the full duality verification: the dual is highest weight for
/// the opposite order, `R T(λ)` is projective, and the double dual has
/// the original Cartan matrix.
pub fn duality_report(ctx: &RingelCtx, dual: &RingelDual) -> Result<DualityReport, RingelError> {
    let hw = verify_highest_weight(&dual.wd)?;
    // R T(λ) ≅ (dual algebra)·e_λ with e_λ the block projector onto T(λ).
    let mut rt_projective = true;
    let flat = Matrix::from_rows(dual.basis_mats.iter().map(flatten).collect());
    for l in 0..ctx.n() {
        let rt = transport(&dual.basis_mats, &ctx.wd.alg, &dual.total, &dual.tiltings[l].module);
        let mut proj = Matrix::zero(dual.total.dim, dual.total.dim);
        let dim_l = dual.tiltings[l].module.dim;
        for r in 0..dim_l {
            proj[(dual.offsets[l] + r, dual.offsets[l] + r)] = Scalar::one();
        }
        let e = flat
            .transpose()
            .solve(&flatten(&proj))
            .ok_or_else(|| RingelError::Structure("block projector escapes End".to_string()))?;
        let ideal = left_ideal(&dual.algebra, &e);
        if !isomorphic(&dual.algebra, &ideal.module, &rt) {
            rt_projective = false;
        }
    }
    let cartan = cartan_matrix(&ctx.pd);
    // Double dual: rebuild the whole tower over the dual algebra.
    let dual_ctx = RingelCtx::new(WeightData {
        alg: dual.wd.alg.clone(),
        labels: dual.wd.labels.clone(),
        less: dual.wd.less.clone(),
        standards: dual.wd.standards.clone(),
        costandards: dual.wd.costandards.clone(),
    })?;
    let double = ringel_dual_algebra(&dual_ctx)?;
    let double_pd = ProjectiveData::new(
        &double.wd.alg,
        &double.wd.labels,
        &double.wd.standards,
    )?;
    let double_dual_cartan = cartan_matrix(&double_pd);
    Ok(DualityReport {
        hw,
        rt_projective,
        cartan,
        double_dual_cartan,
    })
}
