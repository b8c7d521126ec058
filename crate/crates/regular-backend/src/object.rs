//! Objects of the two concrete regular categories, with enumeration limits.

use serde::{Deserialize, Serialize};

/// Which concrete regular category we are working in.
///
/// `FinSetOp` is the opposite of the category of finite sets: we store
/// set-world data and swap the epi/mono and limit/colimit roles.  `FinVecFq`
/// is finite-dimensional vector spaces over the prime field F_q.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Backend {
    FinSetOp,
    FinVecFq { q: u32 },
}

impl Backend {
    pub fn object(self, n: usize) -> RObject {
        RObject { backend: self, n }
    }

    /// The terminal object: the empty set (initial in sets) resp. the zero
    /// space.  It has no non-trivial subobjects in either backend.
    pub fn terminal(self) -> RObject {
        self.object(0)
    }
}

/// One canonical object per isomorphism class: a cardinality (FinSetOp,
/// elements `0..n`) or a dimension (FinVecFq, the standard space F_q^n).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct RObject {
    pub backend: Backend,
    pub n: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "backend", rename_all = "snake_case")]
enum RObjectRepr {
    FinsetOp { size: usize },
    Finvec { dim: usize, q: u32 },
}

impl Serialize for RObject {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.backend {
            Backend::FinSetOp => RObjectRepr::FinsetOp { size: self.n }.serialize(s),
            Backend::FinVecFq { q } => RObjectRepr::Finvec { dim: self.n, q }.serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for RObject {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(match RObjectRepr::deserialize(d)? {
            RObjectRepr::FinsetOp { size } => Backend::FinSetOp.object(size),
            RObjectRepr::Finvec { dim, q } => Backend::FinVecFq { q }.object(dim),
        })
    }
}

/// Size caps enforced at enumeration entry points; relation and morphism
/// counts grow like Bell numbers resp. Gaussian binomials.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    /// Largest FinSetOp object cardinality.
    pub max_set_size: usize,
    /// Largest FinVecFq object dimension.
    pub max_dim: usize,
    /// Largest ambient size/dimension for subobject enumeration
    /// (products of two objects reach twice the object cap).
    pub max_ambient: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_set_size: 5,
            max_dim: 3,
            max_ambient: 10,
        }
    }
}

impl Limits {
    pub fn check_object(&self, x: RObject) -> Result<(), BackendError> {
        let cap = match x.backend {
            Backend::FinSetOp => self.max_set_size,
            Backend::FinVecFq { .. } => self.max_dim,
        };
        if x.n > cap {
            return Err(BackendError::SizeLimitExceeded {
                requested: x.n,
                cap,
            });
        }
        Ok(())
    }

    pub fn check_ambient(&self, x: RObject) -> Result<(), BackendError> {
        let cap = match x.backend {
            Backend::FinSetOp => self.max_ambient,
            // Subspace counts explode faster than partitions; halve the cap.
            Backend::FinVecFq { q } => {
                if q <= 2 {
                    self.max_ambient.min(7)
                } else {
                    self.max_ambient.min(5)
                }
            }
        };
        if x.n > cap {
            return Err(BackendError::SizeLimitExceeded {
                requested: x.n,
                cap,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BackendError {
    #[error("backend mismatch between operands")]
    BackendMismatch,
    #[error("morphism is not surjective")]
    NotSurjective,
    #[error("size limit exceeded: requested {requested}, cap {cap}")]
    SizeLimitExceeded { requested: usize, cap: usize },
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_encodings() {
        let x = Backend::FinSetOp.object(2);
        assert_eq!(
            serde_json::to_string(&x).unwrap(),
            r#"{"backend":"finset_op","size":2}"#
        );
        let v = Backend::FinVecFq { q: 2 }.object(3);
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"backend":"finvec","dim":3,"q":2}"#
        );
        let back: RObject = serde_json::from_str(r#"{"backend":"finvec","dim":3,"q":2}"#).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn limits_reject_oversize() {
        let l = Limits::default();
        assert!(l.check_object(Backend::FinSetOp.object(5)).is_ok());
        assert!(l.check_object(Backend::FinSetOp.object(6)).is_err());
        assert!(l.check_object(Backend::FinVecFq { q: 3 }.object(4)).is_err());
    }
}
