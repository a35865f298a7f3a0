use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::context::{Ctx, VariableContext};
use super::monomial::{monomials_of_degree, Monomial};
use super::ring::CoefficientRing;
use super::PolyError;

/// Sparse polynomial over a [`CoefficientRing`] in a [`VariableContext`].
///
/// No stored coefficient is zero and every coefficient is the ring's canonical
/// representative, so structural equality is mathematical equality.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ctx: Ctx,
    ring: CoefficientRing,
    terms: BTreeMap<Monomial, BigRational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Checked binary arithmetic.
pub fn arith(p: &Polynomial, q: &Polynomial, op: ArithOp) -> Result<Polynomial, PolyError> {
    match op {
        ArithOp::Add => p.try_add(q),
        ArithOp::Sub => p.try_sub(q),
        ArithOp::Mul => p.try_mul(q),
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx)
            && self.ring == other.ring
            && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ctx: &Ctx, ring: &CoefficientRing) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ctx: &Ctx, ring: &CoefficientRing, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(ctx, ring);
        let c = ring.from_int(c);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ctx), c);
        }
        p
    }

    pub fn one(ctx: &Ctx, ring: &CoefficientRing) -> Self {
        Self::constant(ctx, ring, 1)
    }

    pub fn var(ctx: &Ctx, ring: &CoefficientRing, name: &str) -> Result<Self, PolyError> {
        let i = ctx
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(Self::var_at(ctx, ring, i))
    }

    pub fn var_at(ctx: &Ctx, ring: &CoefficientRing, i: usize) -> Self {
        Self::monomial(ctx, ring, Monomial::var(ctx, i), BigRational::one())
    }

    pub fn monomial(ctx: &Ctx, ring: &CoefficientRing, m: Monomial, c: BigRational) -> Self {
        let mut p = Self::zero(ctx, ring);
        p.add_term(m, c).expect("coefficient outside ring");
        p
    }

    /// Builds from `(exponents, coefficient)` pairs, combining repeats.
    pub fn from_terms(
        ctx: &Ctx,
        ring: &CoefficientRing,
        terms: impl IntoIterator<Item = (Vec<u32>, BigRational)>,
    ) -> Result<Self, PolyError> {
        let mut p = Self::zero(ctx, ring);
        for (exps, c) in terms {
            if exps.len() != ctx.arity() {
                return Err(PolyError::ArityMismatch {
                    expected: ctx.arity(),
                    found: exps.len(),
                });
            }
            p.add_term(Monomial::new(ctx, exps), c)?;
        }
        Ok(p)
    }

    /// Linear form `sum coeffs[i] * var_i`.
    pub fn linear(ctx: &Ctx, ring: &CoefficientRing, coeffs: &[BigInt]) -> Self {
        let mut p = Self::zero(ctx, ring);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(ctx, i), BigRational::from_integer(c.clone()))
                .expect("integers embed in every ring");
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) -> Result<(), PolyError> {
        let c = self.ring.normalize(c)?;
        if c.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = self.ring.normalize(o.get() + c)?;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn ring(&self) -> &CoefficientRing {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeff_of(&self, exps: &[u32]) -> BigRational {
        self.coeff(&Monomial::new(&self.ctx, exps.to_vec()))
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    /// Maximum weighted degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// `Some(d)` when every term has weighted degree `d`; zero is homogeneous of every degree
    /// and reports `Some(0)`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => Some(0),
            Some(d) => degrees.all(|e| e == d).then_some(d),
        }
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<(), PolyError> {
        if !(Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx) {
            return Err(PolyError::ContextMismatch);
        }
        if self.ring != other.ring {
            return Err(PolyError::RingMismatch {
                left: self.ring.to_string(),
                right: other.ring.to_string(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone())?;
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_compatible(other)?;
        let mut acc: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                *acc.entry(m1.mul(m2)).or_insert_with(BigRational::zero) += c1 * c2;
            }
        }
        let mut out = Polynomial::zero(&self.ctx, &self.ring);
        for (m, c) in acc {
            out.add_term(m, c)?;
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigRational) -> Result<Polynomial, PolyError> {
        let mut out = Polynomial::zero(&self.ctx, &self.ring);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * k)?;
        }
        Ok(out)
    }

    pub fn scale_int(&self, k: i64) -> Polynomial {
        self.scale(&BigRational::from_integer(k.into()))
            .expect("integer scaling stays in ring")
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ctx, &self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        let mut out = Polynomial::zero(&self.ctx, &self.ring);
        out.terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() == d)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        out
    }

    /// Coordinates of a degree-`d` homogeneous polynomial in the graded-lex
    /// basis of all degree-`d` monomials of the context.
    pub fn coefficient_vector(&self, d: u32) -> Result<(Vec<Monomial>, Vec<BigInt>), PolyError> {
        if !self.is_homogeneous_of(d) {
            return Err(PolyError::NotHomogeneous { degree: d });
        }
        let basis = monomials_of_degree(&self.ctx, d);
        let mut vector = Vec::with_capacity(basis.len());
        for m in &basis {
            let c = self.coeff(m);
            if !c.is_integer() {
                return Err(PolyError::NonIntegral(c.to_string()));
            }
            vector.push(c.to_integer());
        }
        Ok((basis, vector))
    }

    /// Inverse of [`coefficient_vector`](Self::coefficient_vector).
    pub fn from_coefficient_vector(
        ctx: &Ctx,
        ring: &CoefficientRing,
        basis: &[Monomial],
        vector: &[BigInt],
    ) -> Result<Polynomial, PolyError> {
        let mut out = Polynomial::zero(ctx, ring);
        for (m, c) in basis.iter().zip(vector) {
            out.add_term(m.clone(), BigRational::from_integer(c.clone()))?;
        }
        Ok(out)
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(&self.ctx, &self.ring);
        for (m, c) in &self.terms {
            let e = m.exps()[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[i] -= 1;
            out.add_term(
                Monomial::new(&self.ctx, exps),
                c * BigRational::from_integer(e.into()),
            )
            .expect("integer multiple stays in ring");
        }
        out
    }

    /// Re-expresses the coefficients in another ring over the same context
    /// (e.g. reduction mod 3).
    pub fn change_ring(&self, ring: &CoefficientRing) -> Result<Polynomial, PolyError> {
        let mut out = Polynomial::zero(&self.ctx, ring);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.clone())?;
        }
        Ok(out)
    }

    /// Applies `f` to every exponent vector, combining collisions.
    pub fn map_monomials(
        &self,
        ctx: &Ctx,
        mut f: impl FnMut(&[u32]) -> Vec<u32>,
    ) -> Result<Polynomial, PolyError> {
        let mut out = Polynomial::zero(ctx, &self.ring);
        for (m, c) in &self.terms {
            let exps = f(m.exps());
            if exps.len() != ctx.arity() {
                return Err(PolyError::ArityMismatch {
                    expected: ctx.arity(),
                    found: exps.len(),
                });
            }
            out.add_term(Monomial::new(ctx, exps), c.clone())?;
        }
        Ok(out)
    }

    /// Re-inserts every term; canonical form makes this the identity.
    pub fn renormalized(&self) -> Result<Polynomial, PolyError> {
        let mut out = Polynomial::zero(&self.ctx, &self.ring);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.clone())?;
        }
        Ok(out)
    }

    /// Same terms viewed in an equal context (e.g. one parsed separately).
    pub fn with_context(&self, ctx: &Ctx) -> Result<Polynomial, PolyError> {
        if **ctx != *self.ctx {
            return Err(PolyError::ContextMismatch);
        }
        Ok(Polynomial {
            ctx: ctx.clone(),
            ring: self.ring.clone(),
            terms: self.terms.clone(),
        })
    }

    pub fn variable_context(&self) -> &VariableContext {
        &self.ctx
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    /// Panics on context or ring mismatch; use [`Polynomial::try_add`] to handle it.
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial subtraction")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale_int(-1)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::text::write_polynomial(f, self)
    }
}
