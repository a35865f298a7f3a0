use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use super::{RepError, VirtualRep};
use crate::exactpoly::{
    symmetric_residue, CoefficientRing, Ctx, Polynomial, RingMap, VariableContext,
};
use crate::intlinalg::IntMatrix;

/// A character lattice with a polynomial model of its Chow ring: basis
/// character `i` is the variable `i` of `ctx`. Over `Z/m` coordinates are kept
/// as symmetric residues.
#[derive(Debug, PartialEq, Eq)]
pub struct Lattice {
    name: String,
    ctx: Ctx,
    ring: CoefficientRing,
}

pub type LatticeRef = Arc<Lattice>;

impl Lattice {
    pub fn new(name: &str, vars: &[&str], ring: CoefficientRing) -> Result<LatticeRef, RepError> {
        if matches!(ring, CoefficientRing::Rationals) {
            return Err(RepError::Unsupported(
                "character lattices live over Z or Z/m".into(),
            ));
        }
        Ok(Arc::new(Lattice {
            name: name.to_string(),
            ctx: VariableContext::new(vars.iter().copied())?,
            ring,
        }))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn ring(&self) -> &CoefficientRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.ctx.arity()
    }

    /// Canonical coordinates of a weight.
    pub fn normalize(&self, w: &[i64]) -> Result<Vec<i64>, RepError> {
        if w.len() != self.rank() {
            return Err(RepError::Arity {
                lattice: self.name.clone(),
                expected: self.rank(),
                found: w.len(),
            });
        }
        Ok(match self.ring.modulus() {
            None => w.to_vec(),
            Some(m) => {
                let m = BigInt::from(m);
                w.iter()
                    .map(|&x| {
                        i64::try_from(symmetric_residue(BigInt::from(x), &m))
                            .expect("small residue")
                    })
                    .collect()
            }
        })
    }

    /// First Chern class of a character: the linear form with its coordinates.
    pub fn first_chern(&self, w: &[i64]) -> Polynomial {
        let coeffs: Vec<BigInt> = w.iter().map(|&x| BigInt::from(x)).collect();
        Polynomial::linear(&self.ctx, &self.ring, &coeffs)
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}] over {}",
            self.name,
            self.ctx.names().join(", "),
            self.ring
        )
    }
}

/// A homomorphism of character lattices given by a `target_rank × source_rank`
/// matrix acting on weight coordinates; reduction happens if the target lattice
/// is over `Z/m`.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeMap {
    name: String,
    source: LatticeRef,
    target: LatticeRef,
    matrix: IntMatrix,
}

impl LatticeMap {
    pub fn new(
        name: &str,
        source: &LatticeRef,
        target: &LatticeRef,
        matrix: IntMatrix,
    ) -> Result<Self, RepError> {
        if matrix.rows() != target.rank() || matrix.cols() != source.rank() {
            return Err(RepError::Unsupported(format!(
                "map {name} needs a {}x{} matrix",
                target.rank(),
                source.rank()
            )));
        }
        Ok(LatticeMap {
            name: name.to_string(),
            source: source.clone(),
            target: target.clone(),
            matrix,
        })
    }

    pub fn identity(lattice: &LatticeRef) -> Self {
        LatticeMap {
            name: "id".into(),
            source: lattice.clone(),
            target: lattice.clone(),
            matrix: IntMatrix::identity(lattice.rank()),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &LatticeRef {
        &self.source
    }

    pub fn target(&self) -> &LatticeRef {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn map_weight(&self, w: &[i64]) -> Result<Vec<i64>, RepError> {
        let v: Vec<BigInt> = w.iter().map(|&x| BigInt::from(x)).collect();
        let img = self.matrix.mul_vec(&v)?;
        let img: Vec<i64> = img
            .iter()
            .map(|x| i64::try_from(x).map_err(|_| RepError::Unsupported("weight overflow".into())))
            .collect::<Result<_, _>>()?;
        self.target.normalize(&img)
    }

    /// Induced map on polynomial models: variable `j` goes to the linear form
    /// of column `j`.
    pub fn ring_map(&self) -> RingMap {
        let t = &self.target;
        let images = (0..self.source.rank())
            .map(|j| {
                let col: Vec<BigInt> = (0..t.rank())
                    .map(|i| self.matrix.get(i, j).clone())
                    .collect();
                Polynomial::linear(t.ctx(), t.ring(), &col)
            })
            .collect();
        RingMap::new(self.source.ctx(), t.ctx(), t.ring(), images).expect("shape checked")
    }

    pub fn restrict_rep(&self, r: &VirtualRep) -> Result<VirtualRep, RepError> {
        if r.lattice() != &self.source {
            return Err(RepError::LatticeMismatch {
                expected: self.source.name().to_string(),
                found: r.lattice().name().to_string(),
            });
        }
        let mut pairs = Vec::new();
        for (w, m) in r.weights() {
            pairs.push((self.map_weight(w)?, *m));
        }
        VirtualRep::from_pairs(&self.target, pairs)
    }

    pub fn restrict_poly(&self, p: &Polynomial) -> Result<Polynomial, RepError> {
        Ok(crate::exactpoly::substitute(p, &self.ring_map())?)
    }
}
