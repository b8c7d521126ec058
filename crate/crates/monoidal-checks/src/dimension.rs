//! Categorical dimensions through the rigid symmetric structure: the
//! evaluation/coevaluation pair of a self-dual object, the closed-diagram
//! trace of an endomorphism, and the dimensions of the standard objects
//! extracted from the projective standard filtrations.

use crate::tilting_tensor::TiltingCatalogue;
use crate::{MonCtx, MonError};
use diagram_category::{
    compose_relations, diagonal, tensor_objects, tensor_relations, transpose_relation,
    DiagMorphism, KarMorphism, Relation,
};
use regular_backend::{to_terminal, tuple_many, RMorphism, RObject};
use relation_calculus::{NRelation, NSpan};
use weight_algebra::standard_filtration;
use scalar_field::Scalar;

/// The evaluation `X ⊗ X → 1`: the diagonal subobject of `X×X`, taken
/// over the terminal object.
fn cap(x: RObject) -> Relation {
    let id = RMorphism::identity(x);
    let into_square = tuple_many(&[id.clone(), id]);
    NRelation::from_span(&NSpan::new(x, vec![into_square, to_terminal(x)]))
        .expect("the diagonal cap span is jointly injective")
}

/// The closed-diagram trace of an endomorphism `f : X → X`:
/// `cap ∘ (f ⊗ id) ∘ cup` as a scalar.
pub fn morphism_trace(f: &DiagMorphism, u: &Scalar) -> Result<Scalar, MonError> {
    if f.source != f.target {
        return Err(MonError::Structure("trace needs an endomorphism".into()));
    }
    let x = f.source;
    let cap_rel = cap(x);
    let cup_rel = transpose_relation(&cap_rel);
    let id_rel = diagonal(x);
    let mut tr = Scalar::zero();
    for (r, c) in f.terms() {
        let boxed = tensor_relations(r, &id_rel)?;
        debug_assert_eq!(
            diagram_category::rel_source(&boxed),
            tensor_objects(x, x)
        );
        let (c1, mid) = compose_relations(&cap_rel, &boxed, u)?;
        if c1.is_zero() {
            continue;
        }
        let (c2, _unit_rel) = compose_relations(&mid, &cup_rel, u)?;
        tr = &tr + &(&(c * &c1) * &c2);
    }
    Ok(tr)
}

/// The categorical dimension of a Karoubi object: the sum of the traces
/// of the diagonal idempotent blocks.
pub fn categorical_dimension(k: &diagram_category::KarObject, u: &Scalar) -> Result<Scalar, MonError> {
    let mut d = Scalar::zero();
    for (i, _) in k.summands.iter().enumerate() {
        d = &d + &morphism_trace(&k.idem.entries[i][i], u)?;
    }
    Ok(d)
}

/// The trace of a Karoubi endomorphism (sum over its diagonal blocks).
pub fn kar_trace(m: &KarMorphism, u: &Scalar) -> Result<Scalar, MonError> {
    if m.source != m.target {
        return Err(MonError::Structure("trace needs an endomorphism".into()));
    }
    let mut d = Scalar::zero();
    for i in 0..m.source.len() {
        d = &d + &morphism_trace(&m.entries[i][i], u)?;
    }
    Ok(d)
}

/// The categorical dimensions of the standard objects.  The catalogue
/// object labelled ν realizes the projective `P(ν)`, whose standard
/// filtration mirrors the standard filtration of the diagram object, so
/// `dim G(ν) = Σ_η [P(ν):Δ(η)]·dim Δ(η)` with a unitriangular matrix
/// determines the Δ-dimensions.
pub fn standard_dimensions(mc: &MonCtx, cat: &TiltingCatalogue) -> Result<Vec<Scalar>, MonError> {
    let u = mc.u();
    let n = mc.n();
    let t_dims: Vec<Scalar> = cat
        .objects
        .iter()
        .map(|g| categorical_dimension(g, u))
        .collect::<Result<_, _>>()?;
    let wd = &mc.rc.wd;
    let mut filt = vec![vec![0usize; n]; n];
    for nu in 0..n {
        let p = &mc.rc.pd.projectives[nu].module;
        let layers = standard_filtration(wd, p, &wd.standards).ok_or_else(|| {
            MonError::Structure(format!("P({nu}) has no standard filtration"))
        })?;
        for &l in &layers {
            filt[nu][l] += 1;
        }
        if filt[nu][nu] != 1 {
            return Err(MonError::Structure(format!(
                "standard filtration of P({nu}) is not unitriangular"
            )));
        }
    }
    // Solve filt · d = t_dims by elimination; the matrix is unitriangular
    // with respect to the weight order, so process labels from the top of
    // the order downwards (every off-diagonal entry sits strictly above).
    let mut d: Vec<Option<Scalar>> = vec![None; n];
    let mut remaining: Vec<usize> = (0..n).collect();
    while !remaining.is_empty() {
        let before = remaining.len();
        remaining.retain(|&nu| {
            let ready = (0..n).all(|l| l == nu || filt[nu][l] == 0 || d[l].is_some());
            if !ready {
                return true;
            }
            let mut val = t_dims[nu].clone();
            for l in 0..n {
                if l != nu && filt[nu][l] > 0 {
                    let c = Scalar::from_integer(filt[nu][l] as i64);
                    val = &val - &(&c * d[l].as_ref().expect("ready"));
                }
            }
            d[nu] = Some(val);
            false
        });
        if remaining.len() == before {
            return Err(MonError::Structure(
                "standard filtration matrix is not triangular".into(),
            ));
        }
    }
    Ok(d.into_iter().map(|x| x.expect("solved")).collect())
}

/// The partition attached to a weight label (the irrep partition of the
/// automorphism group of the support).
pub fn label_partition(label: &weight_algebra::WeightLabel) -> Option<Vec<usize>> {
    match &label.irrep {
        weight_algebra::IrrepId::Partition(p) => Some(p.clone()),
        weight_algebra::IrrepId::Table(_) => None,
    }
}

/// The full dimension bookkeeping of one tensor pair: the product of the
/// categorical standard dimensions must equal the multiplicity-weighted
/// sum over *all* weights of bounded support, completing the layers the
/// truncation cannot see with the independent character oracle.
pub struct SumMatchReport {
    pub pair: (usize, usize),
    /// `dim Δ(λ) · dim Δ(μ)` in categorical dimension.
    pub product: String,
    /// `Σ_ν ḡ(λ,μ,ν) · dim Δ(ν)` with oracle multiplicities and
    /// interpolated stable dimensions.
    pub oracle_sum: String,
    /// The measured H⁰ multiplicities agree with the oracle for every
    /// weight inside the truncation.
    pub mults_match_oracle: bool,
    /// The measured categorical dimensions agree with the interpolated
    /// stable dimension polynomials.
    pub dims_match_oracle: bool,
    /// The product equals the completed sum.
    pub product_matches_sum: bool,
    pub matched: bool,
}

/// Verifies `dim Δ(λ)·dim Δ(μ) = Σ_ν m_ν·dim Δ(ν)` in categorical
/// dimension, with the measured in-truncation multiplicities checked
/// against the reduced Kronecker oracle and the sum completed by the
/// oracle over all weights of support ≤ |λ|+|μ|.
pub fn sum_match(
    mc: &MonCtx,
    std_dims: &[Scalar],
    measured_mults: &[usize],
    l: usize,
    m: usize,
) -> Result<SumMatchReport, MonError> {
    use crate::oracle::{partitions_up_to, reduced_kronecker, stable_dim_at};
    use num::ToPrimitive;
    let u = mc.u();
    let labels = &mc.rc.wd.labels;
    let parts: Vec<Vec<usize>> = labels
        .iter()
        .map(|lab| {
            label_partition(lab).ok_or_else(|| {
                MonError::Structure("the character oracle needs partition-labelled weights".into())
            })
        })
        .collect::<Result<_, _>>()?;
    let (lp, mp) = (&parts[l], &parts[m]);
    let total = lp.iter().sum::<usize>() + mp.iter().sum::<usize>();
    // Measured categorical dimensions against the stable polynomials.
    let mut dims_match_oracle = true;
    for (d, p) in std_dims.iter().zip(&parts) {
        if *d != stable_dim_at(p, u)? {
            dims_match_oracle = false;
        }
    }
    // Measured multiplicities against the oracle, inside the truncation.
    let mut mults_match_oracle = true;
    for (nu, p) in parts.iter().enumerate() {
        let g = reduced_kronecker(lp, mp, p)?
            .to_usize()
            .ok_or_else(|| MonError::Structure("negative Kronecker coefficient".into()))?;
        if measured_mults[nu] != g {
            mults_match_oracle = false;
        }
    }
    // The completed bookkeeping identity.
    let product = &std_dims[l] * &std_dims[m];
    let mut oracle_sum = Scalar::zero();
    for nu in partitions_up_to(total) {
        let g = reduced_kronecker(lp, mp, &nu)?
            .to_i64()
            .ok_or_else(|| MonError::Structure("oversized Kronecker coefficient".into()))?;
        if g == 0 {
            continue;
        }
        oracle_sum = &oracle_sum + &(&Scalar::from_integer(g) * &stable_dim_at(&nu, u)?);
    }
    let product_matches_sum = product == oracle_sum;
    let matched = mults_match_oracle && dims_match_oracle && product_matches_sum;
    Ok(SumMatchReport {
        pair: (l, m),
        product: product.to_string(),
        oracle_sum: oracle_sum.to_string(),
        mults_match_oracle,
        dims_match_oracle,
        product_matches_sum,
        matched,
    })
}
