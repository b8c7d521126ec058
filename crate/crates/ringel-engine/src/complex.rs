//! Bounded complexes of labelled indecomposable projectives with
//! differentials stored as matrices of algebra elements, using the
//! identification `Hom(Ae, Af) ≅ eAf` by right multiplication.

use crate::{RingelCtx, RingelError};
use diagram_category::FdAlgebra;
use scalar_field::Scalar;

/// An algebra element in basis coordinates.
pub type AlgElem = Vec<Scalar>;

/// A matrix of algebra elements: the map `⊕_j Ae_{s_j} → ⊕_i Ae_{t_i}`
/// sending the summand-`j` component `a` to `Σ_i a·m[i][j]`.
#[derive(Clone, Debug, PartialEq)]
pub struct ElemMat {
    pub rows: usize,
    pub cols: usize,
    /// `entries[i][j] ∈ e_{s_j}·A·e_{t_i}`.
    pub entries: Vec<Vec<AlgElem>>,
}

impl ElemMat {
    pub fn zero(rows: usize, cols: usize, alg_dim: usize) -> ElemMat {
        ElemMat {
            rows,
            cols,
            entries: vec![vec![vec![Scalar::zero(); alg_dim]; cols]; rows],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries
            .iter()
            .flatten()
            .all(|e| e.iter().all(Scalar::is_zero))
    }

    pub fn scale(&self, c: &Scalar) -> ElemMat {
        let mut out = self.clone();
        for row in &mut out.entries {
            for e in row {
                for v in e.iter_mut() {
                    *v = &*v * c;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &ElemMat) -> ElemMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                for (a, b) in out.entries[i][j].iter_mut().zip(&other.entries[i][j]) {
                    *a = &*a + b;
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &ElemMat) -> ElemMat {
        self.add(&other.scale(&-&Scalar::one()))
    }

    /// Composite of `first: P → Q` then `second: Q → R` (a right-multiplied
    /// element travels through the product in application order).
    pub fn compose(alg: &FdAlgebra, first: &ElemMat, second: &ElemMat) -> ElemMat {
        assert_eq!(first.rows, second.cols, "middle term mismatch");
        let mut out = ElemMat::zero(second.rows, first.cols, alg.dim);
        for i in 0..second.rows {
            for j in 0..first.cols {
                for q in 0..first.rows {
                    if first.entries[q][j].iter().all(Scalar::is_zero)
                        || second.entries[i][q].iter().all(Scalar::is_zero)
                    {
                        continue;
                    }
                    let prod = alg.multiply(&first.entries[q][j], &second.entries[i][q]);
                    for (a, b) in out.entries[i][j].iter_mut().zip(&prod) {
                        *a = &*a + b;
                    }
                }
            }
        }
        out
    }
}

/// A bounded complex of labelled projectives `⊕ P(λ)` with the
/// cohomological convention: resolutions live in degrees ≤ 0 and the
/// differential raises the degree.
#[derive(Clone, Debug)]
pub struct ProjComplex {
    /// Lowest degree with a (possibly empty) term.
    pub min_deg: i64,
    /// Per degree from `min_deg` upward: the projective labels.
    pub terms: Vec<Vec<usize>>,
    /// `diffs[k]`: the differential from degree `min_deg + k` to the next.
    pub diffs: Vec<ElemMat>,
}

impl ProjComplex {
    /// A single projective concentrated in degree 0.
    pub fn stalk(label: usize) -> ProjComplex {
        ProjComplex {
            min_deg: 0,
            terms: vec![vec![label]],
            diffs: Vec::new(),
        }
    }

    pub fn max_deg(&self) -> i64 {
        self.min_deg + self.terms.len() as i64 - 1
    }

    /// Labels of the degree-`d` term (empty outside the support).
    pub fn term(&self, d: i64) -> &[usize] {
        let idx = d - self.min_deg;
        if idx < 0 || idx as usize >= self.terms.len() {
            return &[];
        }
        &self.terms[idx as usize]
    }

    /// The differential leaving degree `d` (zero-shaped when absent).
    pub fn diff(&self, d: i64, alg_dim: usize) -> ElemMat {
        let idx = d - self.min_deg;
        if idx < 0 || idx as usize >= self.diffs.len() {
            return ElemMat::zero(self.term(d + 1).len(), self.term(d).len(), alg_dim);
        }
        self.diffs[idx as usize].clone()
    }

    /// The shifted complex `C[s]` with `C[s]_n = C_{n+s}` and differential
    /// scaled by `(−1)^s`.
    pub fn shift(&self, s: i64) -> ProjComplex {
        let sign = if s.rem_euclid(2) == 0 {
            Scalar::one()
        } else {
            -&Scalar::one()
        };
        ProjComplex {
            min_deg: self.min_deg - s,
            terms: self.terms.clone(),
            diffs: self.diffs.iter().map(|d| d.scale(&sign)).collect(),
        }
    }

    /// Concatenates two complexes degreewise (self's summands first).
    pub fn direct_sum(&self, other: &ProjComplex, alg_dim: usize) -> ProjComplex {
        let min = self.min_deg.min(other.min_deg);
        let max = self.max_deg().max(other.max_deg());
        let mut terms = Vec::new();
        let mut diffs = Vec::new();
        for d in min..=max {
            let mut t: Vec<usize> = self.term(d).to_vec();
            t.extend_from_slice(other.term(d));
            terms.push(t);
        }
        for d in min..max {
            let a = self.diff(d, alg_dim);
            let b = other.diff(d, alg_dim);
            let mut m = ElemMat::zero(a.rows + b.rows, a.cols + b.cols, alg_dim);
            for i in 0..a.rows {
                for j in 0..a.cols {
                    m.entries[i][j] = a.entries[i][j].clone();
                }
            }
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.entries[a.rows + i][a.cols + j] = b.entries[i][j].clone();
                }
            }
            diffs.push(m);
        }
        ProjComplex {
            min_deg: min,
            terms,
            diffs,
        }
    }

    /// Drops empty degrees at both ends.
    pub fn trim(mut self) -> ProjComplex {
        while self.terms.len() > 1 && self.terms.last().is_some_and(Vec::is_empty) {
            self.terms.pop();
            self.diffs.pop();
        }
        while self.terms.len() > 1 && self.terms.first().is_some_and(Vec::is_empty) {
            self.terms.remove(0);
            self.diffs.remove(0);
            self.min_deg += 1;
        }
        self
    }

    /// Total number of projective summands.
    pub fn summand_count(&self) -> usize {
        self.terms.iter().map(Vec::len).sum()
    }

    /// Checks `d∘d = 0` and that every differential entry lies in the
    /// idempotent sandwich prescribed by its labels.
    pub fn verify(&self, ctx: &RingelCtx) -> Result<(), RingelError> {
        let alg = &ctx.wd.alg;
        for (k, d) in self.diffs.iter().enumerate() {
            let (src, tgt) = (&self.terms[k], &self.terms[k + 1]);
            if d.rows != tgt.len() || d.cols != src.len() {
                return Err(RingelError::Structure(format!(
                    "differential {k} has shape {}×{}, expected {}×{}",
                    d.rows,
                    d.cols,
                    tgt.len(),
                    src.len()
                )));
            }
            for i in 0..d.rows {
                for j in 0..d.cols {
                    let e_s = &ctx.pd.projectives[src[j]].idem;
                    let e_t = &ctx.pd.projectives[tgt[i]].idem;
                    let x = &d.entries[i][j];
                    let sandwiched = alg.multiply(e_s, &alg.multiply(x, e_t));
                    if &sandwiched != x {
                        return Err(RingelError::Structure(format!(
                            "entry ({i},{j}) of differential {k} escapes its sandwich"
                        )));
                    }
                }
            }
        }
        for k in 0..self.diffs.len().saturating_sub(1) {
            let dd = ElemMat::compose(alg, &self.diffs[k], &self.diffs[k + 1]);
            if !dd.is_zero() {
                return Err(RingelError::Structure(format!(
                    "d∘d ≠ 0 between degrees {} and {}",
                    self.min_deg + k as i64,
                    self.min_deg + k as i64 + 2
                )));
            }
        }
        Ok(())
    }

    /// JSON summary: degrees, label multisets, and differential entries as
    /// term lists over the algebra basis.
    pub fn to_json(&self, ctx: &RingelCtx) -> serde_json::Value {
        let degrees: Vec<serde_json::Value> = self
            .terms
            .iter()
            .enumerate()
            .map(|(k, t)| {
                serde_json::json!({
                    "degree": self.min_deg + k as i64,
                    "projectives": t
                        .iter()
                        .map(|&l| ctx.wd.labels[l].display())
                        .collect::<Vec<_>>(),
                })
            })
            .collect();
        let diffs: Vec<serde_json::Value> = self
            .diffs
            .iter()
            .map(|d| {
                let entries: Vec<serde_json::Value> = (0..d.rows)
                    .flat_map(|i| (0..d.cols).map(move |j| (i, j)))
                    .filter(|&(i, j)| !d.entries[i][j].iter().all(Scalar::is_zero))
                    .map(|(i, j)| {
                        let terms: Vec<serde_json::Value> = d.entries[i][j]
                            .iter()
                            .enumerate()
                            .filter(|(_, c)| !c.is_zero())
                            .map(|(b, c)| serde_json::json!([b, c.to_string()]))
                            .collect();
                        serde_json::json!({ "row": i, "col": j, "terms": terms })
                    })
                    .collect();
                serde_json::Value::Array(entries)
            })
            .collect();
        serde_json::json!({ "min_degree": self.min_deg, "terms": degrees, "differentials": diffs })
    }
}
