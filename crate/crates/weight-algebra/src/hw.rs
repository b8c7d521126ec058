//! Highest-weight structure checks over a based algebra with a weight
//! poset and chosen standard/costandard modules: decomposition matrices,
//! standard filtrations of projectives, Ext orthogonality, and the
//! aggregate axiom report.

use crate::module::{hom_space, FdModule};
use crate::projective::{ext_dim, ProjectiveData};
use crate::truncated::{label_lt, TruncatedAlgebra, WeightLabel};
use crate::WeightError;
use diagram_category::{AxiomResult, FdAlgebra};
use scalar_field::{Matrix, Scalar};

/// An algebra together with its weight poset and standard/costandard
/// modules; the generic input of every highest-weight computation (the
/// Ringel dual algebra reuses it with the opposite order).
pub struct WeightData {
    pub alg: FdAlgebra,
    pub labels: Vec<WeightLabel>,
    /// `less[i][j]`: label i is strictly smaller than label j.
    pub less: Vec<Vec<bool>>,
    pub standards: Vec<FdModule>,
    pub costandards: Vec<FdModule>,
}

impl WeightData {
    /// The highest-weight order on the truncation: the *opposite* of the
    /// support order (smaller support is the larger weight), which is the
    /// order making the presheaf category upper finite highest weight.
    pub fn from_truncation(a: &TruncatedAlgebra) -> Result<WeightData, WeightError> {
        let labels = a.weight_labels();
        let standards: Vec<FdModule> = labels
            .iter()
            .map(|l| a.standard_module(l))
            .collect::<Result<_, _>>()?;
        let costandards: Vec<FdModule> = labels
            .iter()
            .map(|l| a.costandard_module(l))
            .collect::<Result<_, _>>()?;
        let less = order_matrix(&labels, true);
        Ok(WeightData {
            alg: a.alg.clone(),
            labels,
            less,
            standards,
            costandards,
        })
    }
}

/// The strict-order matrix for a label list, optionally opposite.
pub fn order_matrix(labels: &[WeightLabel], opposite: bool) -> Vec<Vec<bool>> {
    (0..labels.len())
        .map(|i| {
            (0..labels.len())
                .map(|j| {
                    if opposite {
                        label_lt(&labels[j], &labels[i])
                    } else {
                        label_lt(&labels[i], &labels[j])
                    }
                })
                .collect()
        })
        .collect()
}

/// The decomposition matrix `D[λ][μ] = [Δ(λ) : L(μ)]`.
pub fn decomposition_matrix(
    wd: &WeightData,
    pd: &ProjectiveData,
) -> Vec<Vec<usize>> {
    wd.standards
        .iter()
        .map(|d| {
            (0..wd.labels.len())
                .map(|mu| pd.composition_multiplicity(d, mu))
                .collect()
        })
        .collect()
}

/// Searches for a surjective homomorphism `M ↠ T` among small linear
/// combinations of a hom-space basis.
fn find_surjection(alg: &FdAlgebra, m: &FdModule, t: &FdModule) -> Option<Matrix> {
    if t.dim == 0 {
        return Some(Matrix::zero(0, m.dim));
    }
    let basis = hom_space(alg, m, t);
    if basis.is_empty() {
        return None;
    }
    for b in &basis {
        if b.rank() == t.dim {
            return Some(b.clone());
        }
    }
    // Generic combinations with geometric weights.
    for x in 1..=(basis.len() as i64 + 1) {
        let mut combo = Matrix::zero(t.dim, m.dim);
        let mut c = Scalar::one();
        for b in &basis {
            combo = combo.add(&b.scale(&c));
            c = &c * &Scalar::from_integer(x + 1);
        }
        if combo.rank() == t.dim {
            return Some(combo);
        }
    }
    None
}

/// A filtration of `M` by standard modules, listed from the top; `None`
/// when no such filtration is found.
pub fn standard_filtration(
    wd: &WeightData,
    m: &FdModule,
    filtered_by: &[FdModule],
) -> Option<Vec<usize>> {
    if m.dim == 0 {
        return Some(Vec::new());
    }
    for (l, delta) in filtered_by.iter().enumerate() {
        if delta.dim == 0 || delta.dim > m.dim {
            continue;
        }
        let Some(surj) = find_surjection(&wd.alg, m, delta) else {
            continue;
        };
        let ker_rows = surj.kernel_basis();
        let (kernel, _) = m.submodule(&ker_rows);
        if let Some(mut rest) = standard_filtration(wd, &kernel, filtered_by) {
            let mut out = vec![l];
            out.append(&mut rest);
            return Some(out);
        }
    }
    None
}

/// The (PΔ) verdict for one label: the standard filtration of `P(λ)` with
/// top quotient Δ(λ) and strictly greater weights below.
pub struct PDeltaResult {
    pub label: usize,
    pub filtration: Option<Vec<usize>>,
    pub passed: bool,
    pub witness: Option<String>,
}

/// Checks (PΔ) for every label.
pub fn verify_p_delta(
    wd: &WeightData,
    pd: &ProjectiveData,
) -> Vec<PDeltaResult> {
    let mut out = Vec::new();
    for l in 0..wd.labels.len() {
        let p = &pd.projectives[l].module;
        let filtration = standard_filtration(wd, p, &wd.standards);
        let (passed, witness) = match &filtration {
            None => (false, Some("no standard filtration found".to_string())),
            Some(f) => {
                if f.first() != Some(&l) {
                    (false, Some("top quotient is not Δ(λ)".to_string()))
                } else if let Some(&bad) =
                    f[1..].iter().find(|&&mu| !wd.less[l][mu])
                {
                    (
                        false,
                        Some(format!(
                            "lower layer Δ({}) is not strictly above {}",
                            wd.labels[bad].display(),
                            wd.labels[l].display()
                        )),
                    )
                } else {
                    (true, None)
                }
            }
        };
        out.push(PDeltaResult {
            label: l,
            filtration,
            passed,
            witness,
        });
    }
    out
}

/// Aggregate report of the highest-weight axioms.
pub struct HwReport {
    pub results: Vec<AxiomResult>,
}

impl HwReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    fn push(&mut self, axiom: &str, passed: bool, witness: Option<String>) {
        self.results.push(AxiomResult {
            axiom: axiom.to_string(),
            passed,
            witness,
        });
    }
}

/// Runs the full battery: module soundness, character bookkeeping,
/// Hom/Ext orthogonality of standards against costandards, unitriangular
/// decomposition matrix, and (PΔ).
pub fn verify_highest_weight(wd: &WeightData) -> Result<HwReport, WeightError> {
    let mut report = HwReport {
        results: Vec::new(),
    };
    // Module soundness.
    let sound = wd
        .standards
        .iter()
        .chain(&wd.costandards)
        .all(|m| m.verify(&wd.alg));
    report.push("standards and costandards are modules", sound, None);
    // Character bookkeeping: Σ dim Δ · dim ∇ = dim A.
    let total: usize = wd
        .standards
        .iter()
        .zip(&wd.costandards)
        .map(|(d, n)| d.dim * n.dim)
        .sum();
    report.push(
        "Σ dim Δ(λ)·dim ∇(λ) = dim A",
        total == wd.alg.dim,
        (total != wd.alg.dim).then(|| format!("{total} ≠ {}", wd.alg.dim)),
    );
    let dims_match = wd
        .standards
        .iter()
        .zip(&wd.costandards)
        .all(|(d, n)| d.dim == n.dim);
    report.push("dim Δ(λ) = dim ∇(λ)", dims_match, None);
    let pd = ProjectiveData::new(&wd.alg, &wd.labels, &wd.standards)?;
    // Hom and Ext orthogonality.
    let mut hom_ok = true;
    let mut ext_ok = true;
    let mut witness_hom = None;
    let mut witness_ext = None;
    for (i, d) in wd.standards.iter().enumerate() {
        for (j, n) in wd.costandards.iter().enumerate() {
            let expected = usize::from(i == j);
            let h = hom_space(&wd.alg, d, n).len();
            if h != expected {
                hom_ok = false;
                witness_hom.get_or_insert(format!(
                    "dim Hom(Δ({}),∇({})) = {h}",
                    wd.labels[i].display(),
                    wd.labels[j].display()
                ));
            }
            for k in 1..=2usize {
                let e = ext_dim(&pd, d, n, k)?;
                if e != 0 {
                    ext_ok = false;
                    witness_ext.get_or_insert(format!(
                        "dim Ext^{k}(Δ({}),∇({})) = {e}",
                        wd.labels[i].display(),
                        wd.labels[j].display()
                    ));
                }
            }
        }
    }
    report.push("Hom(Δ(λ),∇(μ)) = δ_λμ", hom_ok, witness_hom);
    report.push("Ext^{1,2}(Δ(λ),∇(μ)) = 0", ext_ok, witness_ext);
    // Decomposition matrix: unitriangular against the order.
    let dm = decomposition_matrix(wd, &pd);
    let mut tri_ok = true;
    let mut witness_tri = None;
    for i in 0..wd.labels.len() {
        if dm[i][i] != 1 {
            tri_ok = false;
            witness_tri.get_or_insert(format!("[Δ:L] diagonal entry {} at {i}", dm[i][i]));
        }
        for j in 0..wd.labels.len() {
            if i != j && dm[i][j] != 0 && !wd.less[j][i] {
                tri_ok = false;
                witness_tri.get_or_insert(format!(
                    "[Δ({}):L({})] = {} violates the order",
                    wd.labels[i].display(),
                    wd.labels[j].display(),
                    dm[i][j]
                ));
            }
        }
    }
    report.push("decomposition matrix unitriangular", tri_ok, witness_tri);
    // (PΔ).
    let pdelta = verify_p_delta(wd, &pd);
    let pd_ok = pdelta.iter().all(|r| r.passed);
    let witness_pd = pdelta
        .iter()
        .find(|r| !r.passed)
        .map(|r| {
            format!(
                "(PΔ) fails at {}: {}",
                wd.labels[r.label].display(),
                r.witness.clone().unwrap_or_default()
            )
        });
    report.push("(PΔ) standard filtrations of projectives", pd_ok, witness_pd);
    Ok(report)
}
