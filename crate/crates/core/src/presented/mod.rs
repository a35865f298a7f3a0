//! Graded rings presented by generators and homogeneous relations over `Z`,
//! examined one degree at a time.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::exactpoly::{
    monomials_of_degree, CoefficientRing, Ctx, Monomial, PolyError, Polynomial, VariableContext,
};
use crate::intlinalg::{rational_rank, smith_normal_form, IntMatrix, LinAlgError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("relation `{0}` is not homogeneous")]
    NotHomogeneous(String),
    #[error("rewrite rule is not monic in `{0}`")]
    NonMonic(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct RingPresentation {
    name: String,
    ctx: Ctx,
    relations: Vec<Polynomial>,
}

/// The degree-`d` part as an abelian group `Z^free_rank ⊕ ⊕ Z/t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedComponent {
    pub degree: u32,
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl fmt::Display for GradedComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{}: {}", self.degree, parts.join(" ⊕ "))
    }
}

impl RingPresentation {
    pub fn new(
        name: &str,
        generators: &[(&str, u32)],
        relations: &[&str],
    ) -> Result<Self, PresentationError> {
        let ctx = VariableContext::weighted(generators.iter().copied())?;
        let z = CoefficientRing::Integers;
        let rels = relations
            .iter()
            .map(|r| Polynomial::parse(&ctx, &z, r))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_polynomials(name, &ctx, rels)
    }

    pub fn from_polynomials(
        name: &str,
        ctx: &Ctx,
        relations: Vec<Polynomial>,
    ) -> Result<Self, PresentationError> {
        let z = CoefficientRing::Integers;
        let mut rels = Vec::new();
        for r in relations {
            if r.is_zero() {
                continue;
            }
            if r.homogeneous_degree().is_none() {
                return Err(PresentationError::NotHomogeneous(r.to_string()));
            }
            rels.push(r.with_context(ctx)?.change_ring(&z)?);
        }
        Ok(RingPresentation {
            name: name.to_string(),
            ctx: ctx.clone(),
            relations: rels,
        })
    }

    /// `Z[λ, c3, ρ, χ, c6, c8]` modulo `3ρ, 3χ, 3c8, 3(27c6 - c3² - 4λ³), ρ² - c8`.
    pub fn rstar() -> Self {
        Self::new(
            "Rstar",
            &[
                ("lambda", 2),
                ("c3", 3),
                ("rho", 4),
                ("chi", 6),
                ("c6", 6),
                ("c8", 8),
            ],
            &[
                "3*rho",
                "3*chi",
                "3*c8",
                "3*(27*c6 - c3^2 - 4*lambda^3)",
                "rho^2 - c8",
            ],
        )
        .expect("well-formed presentation")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn with_relation(&self, rel: Polynomial) -> Result<Self, PresentationError> {
        let mut rels = self.relations.clone();
        rels.push(rel);
        Self::from_polynomials(&self.name, &self.ctx, rels)
    }

    /// Monomial basis of degree `d` and the rows `relation * monomial`.
    fn relation_matrix(&self, d: u32) -> Result<(Vec<Monomial>, IntMatrix), PresentationError> {
        let basis = monomials_of_degree(&self.ctx, d);
        let z = CoefficientRing::Integers;
        let mut rows = Vec::new();
        for r in &self.relations {
            let e = r.homogeneous_degree().expect("checked homogeneous");
            if e > d {
                continue;
            }
            for m in monomials_of_degree(&self.ctx, d - e) {
                let prod = r * &Polynomial::monomial(&self.ctx, &z, m, One::one());
                let (_, v) = prod.coefficient_vector(d)?;
                if v.iter().any(|x| !x.is_zero()) {
                    rows.push(v);
                }
            }
        }
        let m = IntMatrix::from_rows(basis.len(), &rows)?;
        Ok((basis, m))
    }

    pub fn graded_component(&self, d: u32) -> Result<GradedComponent, PresentationError> {
        let (basis, m) = self.relation_matrix(d)?;
        let s = smith_normal_form(&m);
        Ok(GradedComponent {
            degree: d,
            free_rank: basis.len() - s.rank(),
            torsion: s.torsion(),
        })
    }

    /// Components for `0..=d_max`, computed in parallel.
    pub fn hilbert_table(&self, d_max: u32) -> Result<Vec<GradedComponent>, PresentationError> {
        (0..=d_max)
            .into_par_iter()
            .map(|d| self.graded_component(d))
            .collect()
    }

    /// Ranks over `Q`, by rational elimination rather than Smith forms.
    pub fn rational_rank_table(&self, d_max: u32) -> Result<Vec<(u32, usize)>, PresentationError> {
        (0..=d_max)
            .into_par_iter()
            .map(|d| {
                let (basis, m) = self.relation_matrix(d)?;
                Ok((d, basis.len() - rational_rank(&m)))
            })
            .collect()
    }
}

/// A monic rewrite `ℓ^k ↦ tail` in a polynomial ring containing `ℓ`; reduced
/// forms have `ℓ`-degree below `k`, with basis `1, ℓ, …, ℓ^(k-1)` over the
/// remaining variables.
#[derive(Debug, Clone, PartialEq)]
pub struct LRewrite {
    ell: usize,
    degree: u32,
    tail: Polynomial,
}

impl LRewrite {
    /// From a relation `ℓ^k + (terms of ℓ-degree < k)`.
    pub fn from_monic(ell_name: &str, relation: &Polynomial) -> Result<Self, PresentationError> {
        let ctx = relation.ctx();
        let ell = ctx
            .index_of(ell_name)
            .ok_or_else(|| PolyError::UnknownVariable(ell_name.to_string()))?;
        let k = relation
            .terms()
            .map(|(m, _)| m.exps()[ell])
            .max()
            .unwrap_or(0);
        let top: Vec<_> = relation
            .terms()
            .filter(|(m, _)| m.exps()[ell] == k)
            .collect();
        let monic = k > 0
            && top.len() == 1
            && top[0].1.is_one()
            && top[0]
                .0
                .exps()
                .iter()
                .enumerate()
                .all(|(i, &e)| i == ell || e == 0);
        if !monic {
            return Err(PresentationError::NonMonic(ell_name.to_string()));
        }
        let lead = Polynomial::var_at(ctx, relation.ring(), ell).pow(k);
        Ok(LRewrite {
            ell,
            degree: k,
            tail: &lead - relation,
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn module_basis(&self) -> Vec<Polynomial> {
        let x = Polynomial::var_at(self.tail.ctx(), self.tail.ring(), self.ell);
        (0..self.degree).map(|i| x.pow(i)).collect()
    }

    pub fn reduce(&self, p: &Polynomial) -> Result<Polynomial, PresentationError> {
        let ctx = self.tail.ctx();
        if p.variable_context() != &**ctx {
            return Err(PolyError::ContextMismatch.into());
        }
        let mut cur = p.with_context(ctx)?;
        loop {
            let mut done = Polynomial::zero(ctx, cur.ring());
            let mut pending = Polynomial::zero(ctx, cur.ring());
            for (m, c) in cur.terms() {
                let e = m.exps()[self.ell];
                let mono = Polynomial::monomial(ctx, cur.ring(), m.clone(), c.clone());
                if e < self.degree {
                    done = &done + &mono;
                } else {
                    let mut exps = m.exps().to_vec();
                    exps[self.ell] -= self.degree;
                    let rest =
                        Polynomial::monomial(ctx, cur.ring(), Monomial::new(ctx, exps), c.clone());
                    pending = &pending + &(&rest * &self.tail);
                }
            }
            if pending.is_zero() {
                return Ok(done);
            }
            cur = &done + &pending;
        }
    }
}

/// Normal form of `p` under the rewrite.
pub fn reduce_in_quotient(
    rewrite: &LRewrite,
    p: &Polynomial,
) -> Result<Polynomial, PresentationError> {
    rewrite.reduce(p)
}
