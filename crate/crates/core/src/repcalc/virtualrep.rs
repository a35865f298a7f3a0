use std::collections::BTreeMap;
use std::sync::Arc;

use super::{LatticeRef, RepError};
use crate::exactpoly::Polynomial;

/// A signed multiset of weights in one lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VirtualRep {
    lattice: LatticeRef,
    weights: BTreeMap<Vec<i64>, i64>,
}

impl VirtualRep {
    pub fn from_pairs(
        lattice: &LatticeRef,
        pairs: impl IntoIterator<Item = (Vec<i64>, i64)>,
    ) -> Result<Self, RepError> {
        let mut weights = BTreeMap::new();
        for (w, m) in pairs {
            let w = lattice.normalize(&w)?;
            *weights.entry(w).or_insert(0) += m;
        }
        weights.retain(|_, m| *m != 0);
        Ok(VirtualRep {
            lattice: lattice.clone(),
            weights,
        })
    }

    /// Each listed weight with multiplicity one (repeats accumulate).
    pub fn from_weights(lattice: &LatticeRef, ws: &[Vec<i64>]) -> Result<Self, RepError> {
        Self::from_pairs(lattice, ws.iter().map(|w| (w.clone(), 1)))
    }

    pub fn trivial(lattice: &LatticeRef, n: i64) -> Self {
        Self::from_pairs(lattice, [(vec![0; lattice.rank()], n)]).expect("zero weight fits")
    }

    pub fn lattice(&self) -> &LatticeRef {
        &self.lattice
    }

    pub fn weights(&self) -> impl Iterator<Item = (&Vec<i64>, &i64)> {
        self.weights.iter()
    }

    pub fn multiplicity(&self, w: &[i64]) -> i64 {
        self.weights.get(w).copied().unwrap_or(0)
    }

    pub fn dim(&self) -> i64 {
        self.weights.values().sum()
    }

    pub fn is_genuine(&self) -> bool {
        self.weights.values().all(|&m| m > 0)
    }

    /// Weights listed with multiplicity, in lattice order.
    pub fn expanded(&self) -> Result<Vec<Vec<i64>>, RepError> {
        if !self.is_genuine() {
            return Err(RepError::NotGenuine);
        }
        Ok(self
            .weights
            .iter()
            .flat_map(|(w, &m)| std::iter::repeat_n(w.clone(), m as usize))
            .collect())
    }

    fn same_lattice(&self, other: &VirtualRep) -> Result<(), RepError> {
        if Arc::ptr_eq(&self.lattice, &other.lattice) || self.lattice == other.lattice {
            Ok(())
        } else {
            Err(RepError::LatticeMismatch {
                expected: self.lattice.name().to_string(),
                found: other.lattice.name().to_string(),
            })
        }
    }

    pub fn dual(&self) -> VirtualRep {
        Self::from_pairs(
            &self.lattice,
            self.weights
                .iter()
                .map(|(w, &m)| (w.iter().map(|x| -x).collect(), m)),
        )
        .expect("same arity")
    }

    pub fn direct_sum(&self, other: &VirtualRep) -> Result<VirtualRep, RepError> {
        self.same_lattice(other)?;
        Self::from_pairs(
            &self.lattice,
            self.weights
                .iter()
                .chain(other.weights.iter())
                .map(|(w, &m)| (w.clone(), m)),
        )
    }

    /// Removes `other` as a sub-multiset; anything else would need power
    /// series division of total Chern classes.
    pub fn subtract(&self, other: &VirtualRep) -> Result<VirtualRep, RepError> {
        self.same_lattice(other)?;
        for (w, &m) in &other.weights {
            if m < 0 || self.multiplicity(w) < m {
                return Err(RepError::NotContained(format!("{w:?}")));
            }
        }
        Self::from_pairs(
            &self.lattice,
            self.weights
                .iter()
                .map(|(w, &m)| (w.clone(), m))
                .chain(other.weights.iter().map(|(w, &m)| (w.clone(), -m))),
        )
    }

    pub fn tensor(&self, other: &VirtualRep) -> Result<VirtualRep, RepError> {
        self.same_lattice(other)?;
        let mut pairs = Vec::new();
        for (a, &ma) in &self.weights {
            for (b, &mb) in &other.weights {
                pairs.push((a.iter().zip(b).map(|(x, y)| x + y).collect(), ma * mb));
            }
        }
        Self::from_pairs(&self.lattice, pairs)
    }

    pub fn twist(&self, w: &[i64]) -> Result<VirtualRep, RepError> {
        let w = self.lattice.normalize(w)?;
        Self::from_pairs(
            &self.lattice,
            self.weights
                .iter()
                .map(|(v, &m)| (v.iter().zip(&w).map(|(x, y)| x + y).collect(), m)),
        )
    }

    fn power(&self, k: usize, strict: bool) -> Result<VirtualRep, RepError> {
        let ws = self.expanded()?;
        let rank = self.lattice.rank();
        let mut pairs = Vec::new();
        let mut idx = Vec::with_capacity(k);
        fn walk(
            ws: &[Vec<i64>],
            k: usize,
            strict: bool,
            start: usize,
            idx: &mut Vec<usize>,
            rank: usize,
            out: &mut Vec<(Vec<i64>, i64)>,
        ) {
            if idx.len() == k {
                let mut s = vec![0; rank];
                for &i in idx.iter() {
                    for (a, b) in s.iter_mut().zip(&ws[i]) {
                        *a += b;
                    }
                }
                out.push((s, 1));
                return;
            }
            for i in start..ws.len() {
                idx.push(i);
                walk(
                    ws,
                    k,
                    strict,
                    if strict { i + 1 } else { i },
                    idx,
                    rank,
                    out,
                );
                idx.pop();
            }
        }
        walk(&ws, k, strict, 0, &mut idx, rank, &mut pairs);
        Self::from_pairs(&self.lattice, pairs)
    }

    /// Sums over size-`k` multisets of weights.
    pub fn sym_power(&self, k: usize) -> Result<VirtualRep, RepError> {
        if k == 0 {
            return Ok(Self::trivial(&self.lattice, 1));
        }
        self.power(k, false)
    }

    /// Sums over size-`k` subsets of weights.
    pub fn exterior_power(&self, k: usize) -> Result<VirtualRep, RepError> {
        if k == 0 {
            return Ok(Self::trivial(&self.lattice, 1));
        }
        self.power(k, true)
    }

    /// `c_i`: the `i`-th elementary symmetric function of the first Chern
    /// classes of the weights.
    pub fn chern_class(&self, i: usize) -> Result<Polynomial, RepError> {
        Ok(self.chern_classes_upto(i)?.swap_remove(i))
    }

    /// `[c_0, ..., c_top]`.
    pub fn chern_classes_upto(&self, top: usize) -> Result<Vec<Polynomial>, RepError> {
        let l = &self.lattice;
        let mut es = vec![Polynomial::zero(l.ctx(), l.ring()); top + 1];
        es[0] = Polynomial::one(l.ctx(), l.ring());
        for w in self.expanded()? {
            if w.iter().all(|&x| x == 0) {
                continue;
            }
            let c1 = l.first_chern(&w);
            for k in (1..=top).rev() {
                let t = &es[k - 1] * &c1;
                es[k] = &es[k] + &t;
            }
        }
        Ok(es)
    }

    pub fn total_chern(&self) -> Result<Vec<Polynomial>, RepError> {
        let d = usize::try_from(self.dim()).map_err(|_| RepError::NotGenuine)?;
        self.chern_classes_upto(d)
    }

    /// Character in the representation ring of the lattice modulo
    /// `x1*x2*...*xn = 1`: each weight is shifted by a multiple of `(1,...,1)` so
    /// its least coordinate is zero.
    pub fn character_mod_det(&self) -> Result<Polynomial, RepError> {
        let l = &self.lattice;
        if l.ring().modulus().is_some() {
            return Err(RepError::Unsupported(
                "characters need an integral lattice".into(),
            ));
        }
        let terms = self.weights.iter().map(|(w, &m)| {
            let lo = w.iter().copied().min().unwrap_or(0);
            let exps = w.iter().map(|&x| (x - lo) as u32).collect::<Vec<_>>();
            (exps, num_rational::BigRational::from_integer(m.into()))
        });
        Ok(Polynomial::from_terms(l.ctx(), l.ring(), terms)?)
    }
}

/// Reduces a Laurent-free polynomial modulo `x1*...*xn = 1` the same way.
pub fn normalize_mod_det(p: &Polynomial) -> Polynomial {
    p.map_monomials(p.ctx(), |e| {
        let lo = e.iter().copied().min().unwrap_or(0);
        e.iter().map(|&x| x - lo).collect()
    })
    .expect("same arity")
}
