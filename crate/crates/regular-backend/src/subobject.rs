//! Canonical subobject representatives and their enumeration.
//!
//! In FinSetOp a subobject of an ambient object is a set partition of the
//! ambient's element set (a quotient in the set world), encoded with blocks
//! sorted by minimum element.  In FinVecFq it is a subspace, encoded by the
//! reduced row echelon basis matrix.  Two monomorphisms into the same
//! ambient are equivalent iff their canonical data are equal.

use crate::fq::FqMat;
use crate::morphism::RMorphism;
use crate::object::{Backend, BackendError, Limits, RObject};
use serde::{Deserialize, Serialize};

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SubData {
    /// Blocks of a set partition; each block ascending, blocks sorted by
    /// their minimum element.
    Partition(Vec<Vec<usize>>),
    /// RREF basis matrix of a subspace (rows = basis vectors).
    Subspace(FqMat),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SubobjectCanon {
    pub ambient: RObject,
    pub data: SubData,
}

impl SubobjectCanon {
    /// Rank of the subobject: number of partition blocks resp. subspace
    /// dimension; the size of the canonical source object.
    pub fn size(&self) -> usize {
        match &self.data {
            SubData::Partition(blocks) => blocks.len(),
            SubData::Subspace(b) => b.rows,
        }
    }

    /// The canonical monomorphism from the canonical representative object
    /// into the ambient.
    pub fn canonical_mono(&self) -> RMorphism {
        match &self.data {
            SubData::Partition(blocks) => {
                let src = Backend::FinSetOp.object(blocks.len());
                let mut data = vec![0; self.ambient.n];
                for (k, b) in blocks.iter().enumerate() {
                    for &y in b {
                        data[y] = k;
                    }
                }
                RMorphism::set_map(src, self.ambient, data)
            }
            SubData::Subspace(b) => {
                let src = self.ambient.backend.object(b.rows);
                RMorphism::linear(src, self.ambient, b.transpose())
            }
        }
    }

    /// Canonicalizes the image of an arbitrary morphism into the ambient.
    /// For a monomorphism this is the subobject it represents.
    pub fn from_image(f: &RMorphism) -> SubobjectCanon {
        let (_, im) = f.image_factorization();
        match &im.data {
            crate::morphism::MorData::SetMap(m) => {
                let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); im.source.n];
                for (y, &k) in m.iter().enumerate() {
                    blocks[k].push(y);
                }
                blocks.sort_by_key(|b| b[0]);
                SubobjectCanon {
                    ambient: f.target,
                    data: SubData::Partition(blocks),
                }
            }
            crate::morphism::MorData::Matrix(a) => SubobjectCanon {
                ambient: f.target,
                data: SubData::Subspace(a.transpose().row_space_basis()),
            },
        }
    }
}

/// All subobjects of `ambient`, in a deterministic order: partitions in
/// lexicographic restricted-growth-string order, subspaces by ascending
/// dimension then pivot sets then free entries.
pub fn enumerate_subobjects(
    ambient: RObject,
    limits: &Limits,
) -> Result<Vec<SubobjectCanon>, BackendError> {
    limits.check_ambient(ambient)?;
    match ambient.backend {
        Backend::FinSetOp => Ok(partitions(ambient.n)
            .into_iter()
            .map(|blocks| SubobjectCanon {
                ambient,
                data: SubData::Partition(blocks),
            })
            .collect()),
        Backend::FinVecFq { q } => Ok(subspaces(q, ambient.n)
            .into_iter()
            .map(|b| SubobjectCanon {
                ambient,
                data: SubData::Subspace(b),
            })
            .collect()),
    }
}

/// All relations `R ⊂ X×Y` as subobjects of the product.
pub fn enumerate_relations(
    x: RObject,
    y: RObject,
    limits: &Limits,
) -> Result<Vec<SubobjectCanon>, BackendError> {
    if x.backend != y.backend {
        return Err(BackendError::BackendMismatch);
    }
    let (p, _, _) = crate::morphism::product(x, y)?;
    enumerate_subobjects(p, limits)
}

/// All set partitions of `{0,…,n-1}` via restricted growth strings, in
/// lexicographic string order.
fn partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    loop {
        let blocks_count = rgs.iter().max().unwrap() + 1;
        let mut blocks = vec![Vec::new(); blocks_count];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i);
        }
        out.push(blocks);
        // Advance to the next restricted growth string.
        let mut i = n;
        loop {
            if i == 1 {
                return out;
            }
            i -= 1;
            let prefix_max = rgs[..i].iter().max().copied().unwrap_or(0);
            if rgs[i] <= prefix_max {
                rgs[i] += 1;
                for v in rgs[i + 1..].iter_mut() {
                    *v = 0;
                }
                break;
            }
        }
    }
}

/// All subspaces of F_q^n as RREF matrices.
fn subspaces(q: u32, n: usize) -> Vec<FqMat> {
    let mut out = Vec::new();
    for k in 0..=n {
        for pivots in combinations(n, k) {
            // Free entries: positions (i, j) with j > pivots[i], j not a pivot.
            let mut free = Vec::new();
            for (i, &p) in pivots.iter().enumerate() {
                for j in p + 1..n {
                    if !pivots.contains(&j) {
                        free.push((i, j));
                    }
                }
            }
            let mut values = vec![0u32; free.len()];
            loop {
                let mut m = FqMat::zero(q, k, n);
                for (i, &p) in pivots.iter().enumerate() {
                    m.set(i, p, 1);
                }
                for (idx, &(i, j)) in free.iter().enumerate() {
                    m.set(i, j, values[idx]);
                }
                out.push(m);
                let mut c = 0;
                loop {
                    if c == values.len() {
                        break;
                    }
                    values[c] += 1;
                    if values[c] < q {
                        break;
                    }
                    values[c] = 0;
                    c += 1;
                }
                if values.iter().all(|&v| v == 0) {
                    break;
                }
            }
        }
    }
    out
}

/// k-subsets of {0,…,n-1} in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if k > n {
        return vec![];
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] < n - (k - i) {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}
