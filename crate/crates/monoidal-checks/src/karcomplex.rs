//! Complexes of Karoubi objects with degree-raising differentials, the
//! reversal of projective-module resolutions into diagram-level data, and
//! the signed total complex of a tensor product.

use crate::{MonCtx, MonError};
use diagram_category::{unit_object, KarMorphism, KarObject};
use ringel_engine::ProjComplex;
use scalar_field::Scalar;

/// A bounded complex of Karoubi objects in degrees `0..terms.len()`;
/// `diffs[i]` maps degree `i` to degree `i+1`.  Index `i` corresponds to
/// module degree `−i` under realization.
#[derive(Clone)]
pub struct KarComplex {
    pub terms: Vec<KarObject>,
    pub diffs: Vec<KarMorphism>,
}

/// The Kronecker tensor of two morphism matrices; summand pair `(i1,i2)`
/// is flattened to `i1·len2 + i2`.
pub fn kar_tensor(a: &KarMorphism, b: &KarMorphism, _u: &Scalar) -> Result<KarMorphism, MonError> {
    let source: Vec<_> = a
        .source
        .iter()
        .flat_map(|&s1| {
            b.source
                .iter()
                .map(move |&s2| diagram_category::tensor_objects(s1, s2))
        })
        .collect();
    let target: Vec<_> = a
        .target
        .iter()
        .flat_map(|&t1| {
            b.target
                .iter()
                .map(move |&t2| diagram_category::tensor_objects(t1, t2))
        })
        .collect();
    let mut out = KarMorphism::zero(source, target);
    for (i1, row1) in a.entries.iter().enumerate() {
        for (j1, m1) in row1.iter().enumerate() {
            for (i2, row2) in b.entries.iter().enumerate() {
                for (j2, m2) in row2.iter().enumerate() {
                    out.entries[i1 * b.target.len() + i2][j1 * b.source.len() + j2] =
                        m1.tensor(m2)?;
                }
            }
        }
    }
    Ok(out)
}

/// The tensor of two Karoubi objects.
pub fn kar_object_tensor(a: &KarObject, b: &KarObject, u: &Scalar) -> Result<KarObject, MonError> {
    let idem = kar_tensor(&a.idem, &b.idem, u)?;
    Ok(KarObject {
        summands: idem.source.clone(),
        idem,
    })
}

fn block_diag(parts: &[KarMorphism]) -> KarMorphism {
    let source: Vec<_> = parts.iter().flat_map(|p| p.source.clone()).collect();
    let target: Vec<_> = parts.iter().flat_map(|p| p.target.clone()).collect();
    let mut out = KarMorphism::zero(source, target);
    let (mut ro, mut co) = (0, 0);
    for p in parts {
        for (i, row) in p.entries.iter().enumerate() {
            for (j, m) in row.iter().enumerate() {
                out.entries[ro + i][co + j] = m.clone();
            }
        }
        ro += p.target.len();
        co += p.source.len();
    }
    out
}

impl MonCtx {
    /// The Karoubi object for a list of projective labels: one block of
    /// truncation objects per label, cut by the block-diagonal idempotent.
    pub fn labels_object(&self, labels: &[usize]) -> KarObject {
        let idems: Vec<KarMorphism> = labels
            .iter()
            .map(|&l| self.elem_to_kar(&self.rc.pd.projectives[l].idem))
            .collect();
        let idem = block_diag(&idems);
        KarObject {
            summands: idem.source.clone(),
            idem,
        }
    }
}

impl KarComplex {
    /// The unit object as a one-term complex.
    pub fn unit_stalk(mc: &MonCtx) -> KarComplex {
        KarComplex {
            terms: vec![KarObject::plain(unit_object(mc.ta.backend))],
            diffs: Vec::new(),
        }
    }

    /// Reverses a resolution of projective modules into diagram data: a
    /// module map `Ae_s → Ae_t` given by right multiplication with
    /// `m ∈ e_s·A·e_t` corresponds contravariantly to `m` itself as a
    /// morphism between the cut-down Karoubi objects.
    pub fn of_resolution(mc: &MonCtx, y: &ProjComplex) -> Result<KarComplex, MonError> {
        let r = (-y.min_deg) as usize;
        let n_obj = mc.ta.objects.len();
        let mut terms = Vec::with_capacity(r + 1);
        for i in 0..=r {
            terms.push(mc.labels_object(y.term(-(i as i64))));
        }
        let mut diffs = Vec::with_capacity(r);
        for i in 0..r {
            let dm = y.diff(-(i as i64) - 1, mc.rc.wd.alg.dim);
            let src_labels = y.term(-(i as i64) - 1); // columns of dm
            let tgt_labels = y.term(-(i as i64)); // rows of dm
            let mut m = KarMorphism::zero(
                terms[i].summands.clone(),
                terms[i + 1].summands.clone(),
            );
            for (row, _) in tgt_labels.iter().enumerate() {
                for (col, _) in src_labels.iter().enumerate() {
                    let sub = mc.elem_to_kar(&dm.entries[row][col]);
                    for oi in 0..n_obj {
                        for oj in 0..n_obj {
                            m.entries[col * n_obj + oi][row * n_obj + oj] =
                                sub.entries[oi][oj].clone();
                        }
                    }
                }
            }
            diffs.push(m);
        }
        let c = KarComplex { terms, diffs };
        c.verify(mc)?;
        Ok(c)
    }

    /// The signed total complex of the tensor product.
    pub fn tensor(mc: &MonCtx, a: &KarComplex, b: &KarComplex) -> Result<KarComplex, MonError> {
        let u = mc.u();
        let (ra, rb) = (a.terms.len(), b.terms.len());
        // Component objects and their placement inside each total degree.
        let mut terms = Vec::new();
        let mut offsets: Vec<Vec<(usize, usize, usize)>> = Vec::new(); // (i, j, summand offset)
        for k in 0..ra + rb - 1 {
            let mut summands = Vec::new();
            let mut idems = Vec::new();
            let mut offs = Vec::new();
            for i in 0..ra {
                if k < i || k - i >= rb {
                    continue;
                }
                let j = k - i;
                let t = kar_object_tensor(&a.terms[i], &b.terms[j], u)?;
                offs.push((i, j, summands.len()));
                summands.extend(t.summands.clone());
                idems.push(t.idem);
            }
            let idem = block_diag(&idems);
            terms.push(KarObject {
                summands,
                idem,
            });
            offsets.push(offs);
        }
        let mut diffs = Vec::new();
        for k in 0..terms.len() - 1 {
            let mut m = KarMorphism::zero(
                terms[k].summands.clone(),
                terms[k + 1].summands.clone(),
            );
            for &(i, j, src_off) in &offsets[k] {
                // Horizontal part: d_a ⊗ e_b into component (i+1, j).
                if i + 1 < ra {
                    if let Some(&(_, _, tgt_off)) = offsets[k + 1]
                        .iter()
                        .find(|&&(ti, tj, _)| ti == i + 1 && tj == j)
                    {
                        let blk = kar_tensor(&a.diffs[i], &b.terms[j].idem, u)?;
                        paste(&mut m, &blk, tgt_off, src_off);
                    }
                }
                // Vertical part: (−1)^i e_a ⊗ d_b into component (i, j+1).
                if j + 1 < rb {
                    if let Some(&(_, _, tgt_off)) = offsets[k + 1]
                        .iter()
                        .find(|&&(ti, tj, _)| ti == i && tj == j + 1)
                    {
                        let sign = if i % 2 == 0 {
                            Scalar::one()
                        } else {
                            -&Scalar::one()
                        };
                        let blk = kar_tensor(&a.terms[i].idem, &b.diffs[j], u)?.scale(&sign);
                        paste(&mut m, &blk, tgt_off, src_off);
                    }
                }
            }
            diffs.push(m);
        }
        Ok(KarComplex { terms, diffs })
    }

    /// Exact structural verification: idempotent terms, compressed
    /// differentials, and `d∘d = 0`.
    pub fn verify(&self, mc: &MonCtx) -> Result<(), MonError> {
        let u = mc.u();
        for t in &self.terms {
            if !t.idem.is_idempotent(u)? {
                return Err(MonError::Structure("term idempotent fails e² = e".into()));
            }
        }
        for (i, d) in self.diffs.iter().enumerate() {
            let compressed = self.terms[i + 1]
                .idem
                .compose(&d.compose(&self.terms[i].idem, u)?, u)?;
            if compressed != *d {
                return Err(MonError::Structure(format!(
                    "differential {i} is not compatible with the idempotents"
                )));
            }
        }
        for i in 0..self.diffs.len().saturating_sub(1) {
            if !self.diffs[i + 1].compose(&self.diffs[i], u)?.is_zero() {
                return Err(MonError::Structure(format!("d∘d ≠ 0 at degree {i}")));
            }
        }
        Ok(())
    }
}

fn paste(m: &mut KarMorphism, blk: &KarMorphism, tgt_off: usize, src_off: usize) {
    for (i, row) in blk.entries.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            m.entries[tgt_off + i][src_off + j] = m.entries[tgt_off + i][src_off + j].add(e);
        }
    }
}
