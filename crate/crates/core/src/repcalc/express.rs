use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::RepError;
use crate::exactpoly::{monomials_of_degree, CoefficientRing, Ctx, Polynomial, VariableContext};
use crate::intlinalg::{membership, rational_solution};

/// A target written as an integer polynomial in named generators.
#[derive(Debug, Clone, PartialEq)]
pub struct Expression {
    /// Generator symbols, weighted by the generators' degrees.
    pub symbols: Ctx,
    pub expression: Polynomial,
}

impl Expression {
    /// Coefficient of a single generator symbol.
    pub fn coefficient_of(&self, symbol: &str) -> Option<BigRational> {
        let i = self.symbols.index_of(symbol)?;
        let mut e = vec![0; self.symbols.arity()];
        e[i] = 1;
        Some(self.expression.coeff_of(&e))
    }

    /// Substitutes the generators back in.
    pub fn expand(&self, gens: &[(String, Polynomial)]) -> Result<Polynomial, RepError> {
        let first = gens
            .first()
            .ok_or(RepError::Unsupported("no generators".into()))?;
        let (ctx, ring) = (first.1.ctx().clone(), first.1.ring().clone());
        let mut acc = Polynomial::zero(&ctx, &ring);
        for (m, c) in self.expression.terms() {
            let mut term = Polynomial::one(&ctx, &ring).scale(c)?;
            for (e, (_, g)) in m.exps().iter().zip(gens) {
                term = term.try_mul(&g.pow(*e))?;
            }
            acc = acc.try_add(&term)?;
        }
        Ok(acc)
    }
}

/// Writes a homogeneous `target` as a polynomial in homogeneous generators,
/// solving degree-wise over the target's coefficient ring.
///
/// Among integral solutions the certificate is reduced modulo the syzygies of
/// the generator monomials, which makes it canonical. Failure reports the
/// rational solution, if any, so torsion denominators are visible.
pub fn express_in(
    target: &Polynomial,
    gens: &[(String, Polynomial)],
) -> Result<Expression, RepError> {
    let ring = target.ring().clone();
    if matches!(ring, CoefficientRing::Rationals) {
        return Err(RepError::Unsupported(
            "express_in works over Z or Z/m".into(),
        ));
    }
    let mut weighted = Vec::new();
    for (name, g) in gens {
        if g.variable_context() != target.variable_context() || g.ring() != &ring {
            return Err(RepError::Poly(crate::exactpoly::PolyError::ContextMismatch));
        }
        match g.homogeneous_degree() {
            Some(d) if d > 0 => weighted.push((name.as_str(), d)),
            _ => return Err(RepError::NotHomogeneous(name.clone())),
        }
    }
    let symbols = VariableContext::weighted(weighted)?;
    let z = CoefficientRing::Integers;
    if target.is_zero() {
        return Ok(Expression {
            expression: Polynomial::zero(&symbols, &z),
            symbols,
        });
    }
    let d = target
        .homogeneous_degree()
        .ok_or_else(|| RepError::NotHomogeneous("target".into()))?;
    let monos = monomials_of_degree(&symbols, d);
    let mut gen_vecs = Vec::with_capacity(monos.len());
    for m in &monos {
        let mut prod = Polynomial::one(target.ctx(), &ring);
        for (e, (_, g)) in m.exps().iter().zip(gens) {
            prod = prod.try_mul(&g.pow(*e))?;
        }
        gen_vecs.push(prod.coefficient_vector(d)?.1);
    }
    let (_, tv) = target.coefficient_vector(d)?;
    let modulus = ring.modulus().map(BigInt::from);
    let mem = membership(&tv, &gen_vecs, modulus.as_ref())?;
    match mem.certificate {
        Some(cert) => {
            let expr_ring = match ring.modulus() {
                Some(m) => CoefficientRing::integers_mod(m)?,
                None => z,
            };
            let mut expression = Polynomial::zero(&symbols, &expr_ring);
            for (m, c) in monos.iter().zip(cert) {
                if !c.is_zero() {
                    let t =
                        Polynomial::monomial(&symbols, &expr_ring, m.clone(), BigRational::one())
                            .scale(&BigRational::from_integer(c))?;
                    expression = &expression + &t;
                }
            }
            Ok(Expression {
                symbols,
                expression,
            })
        }
        None => {
            let rational = if modulus.is_none() {
                rational_solution(&tv, &gen_vecs)?.map(|x| {
                    let parts: Vec<String> = monos
                        .iter()
                        .zip(x)
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(m, c)| {
                            format!("({c})*{}", crate::exactpoly::monomial_text(&symbols, m))
                        })
                        .collect();
                    parts.join(" + ")
                })
            } else {
                None
            };
            Err(RepError::NoIntegralExpression { rational })
        }
    }
}
