//! Finite groups of integer matrices acting on polynomial rings by linear
//! substitution, degree-wise invariants, and orbit sums.
//!
//! Column `j` of a matrix is the image of variable `j`, so the action of a
//! product `A*B` is the action of `A` after the action of `B`.

mod catalog;

pub use catalog::{
    a3_on_u, permutation_matrix, s3_on_x, s3_twisted_u, s3_two_variable, u_characters,
    xy_characters,
};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactpoly::{
    monomials_of_degree, substitute, CoefficientRing, Ctx, PolyError, Polynomial, RingMap,
};
use crate::intlinalg::{kernel_basis, rational_solution, IntMatrix, LinAlgError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("unknown group element `{0}`")]
    UnknownElement(String),
    #[error("element `{label}`: {message}")]
    BadMatrix { label: String, message: String },
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("constraint direction must be a nonzero vector of length {0}")]
    BadDirection(usize),
    #[error("embedding does not intertwine element `{0}` with an integral action")]
    NotTransportable(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

#[derive(Clone, Debug, PartialEq)]
pub struct MatrixGroup {
    ctx: Ctx,
    elements: Vec<(String, IntMatrix)>,
    generators: Vec<String>,
    modulus: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureReport {
    pub ok: bool,
    pub order: usize,
    pub violations: Vec<String>,
}

fn reduce_matrix(m: &IntMatrix, modulus: Option<u64>) -> IntMatrix {
    match modulus {
        None => m.clone(),
        Some(q) => {
            let q = BigInt::from(q);
            let data = (0..m.rows())
                .flat_map(|i| m.row(i).iter().map(|x| x.mod_floor(&q)).collect::<Vec<_>>())
                .collect();
            IntMatrix::new(m.rows(), m.cols(), data).expect("same shape")
        }
    }
}

impl MatrixGroup {
    /// A group given by its full element list. Matrices must be square of the
    /// context's arity and invertible (over `Z`, or mod `modulus`).
    pub fn new(
        ctx: &Ctx,
        elements: Vec<(String, IntMatrix)>,
        modulus: Option<u64>,
    ) -> Result<Self, GroupError> {
        let n = ctx.arity();
        let mut seen = std::collections::HashSet::new();
        for (label, m) in &elements {
            if !seen.insert(label.clone()) {
                return Err(GroupError::DuplicateLabel(label.clone()));
            }
            if m.rows() != n || m.cols() != n {
                return Err(GroupError::BadMatrix {
                    label: label.clone(),
                    message: format!("expected a {n}x{n} matrix"),
                });
            }
            let det = m.determinant()?;
            let invertible = match modulus {
                None => det.magnitude().is_one(),
                Some(q) => det.gcd(&BigInt::from(q)).is_one(),
            };
            if !invertible {
                return Err(GroupError::BadMatrix {
                    label: label.clone(),
                    message: format!("not invertible (determinant {det})"),
                });
            }
        }
        Ok(MatrixGroup {
            ctx: ctx.clone(),
            elements,
            generators: Vec::new(),
            modulus,
        })
    }

    /// Closes a generating set under products. New elements are labeled by the
    /// generator word that first produced them; the identity is `e`.
    pub fn generate(
        ctx: &Ctx,
        generators: Vec<(String, IntMatrix)>,
        modulus: Option<u64>,
        max_order: usize,
    ) -> Result<Self, GroupError> {
        let n = ctx.arity();
        let id = IntMatrix::identity(n);
        let mut elements = vec![("e".to_string(), id.clone())];
        let mut reduced = vec![reduce_matrix(&id, modulus)];
        let mut frontier = 0;
        MatrixGroup::new(ctx, generators.clone(), modulus)?;
        while frontier < elements.len() {
            let (word, m) = elements[frontier].clone();
            for (g, gm) in &generators {
                let p = gm.mul(&m)?;
                let r = reduce_matrix(&p, modulus);
                if !reduced.contains(&r) {
                    if elements.len() >= max_order {
                        return Err(GroupError::BadMatrix {
                            label: g.clone(),
                            message: format!("generated group exceeds order {max_order}"),
                        });
                    }
                    let label = if word == "e" {
                        g.clone()
                    } else {
                        format!("{g}*{word}")
                    };
                    elements.push((label, r.clone()));
                    reduced.push(r);
                }
            }
            frontier += 1;
        }
        // prefer the generators' own labels
        for (g, gm) in &generators {
            let r = reduce_matrix(gm, modulus);
            if let Some(i) = reduced.iter().position(|x| *x == r) {
                elements[i].0 = g.clone();
            }
        }
        let mut group = MatrixGroup::new(ctx, elements, modulus)?;
        group.generators = generators.into_iter().map(|(g, _)| g).collect();
        Ok(group)
    }

    pub fn with_generators(mut self, labels: Vec<String>) -> Result<Self, GroupError> {
        for l in &labels {
            self.element(l)?;
        }
        self.generators = labels;
        Ok(self)
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[(String, IntMatrix)] {
        &self.elements
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.elements.iter().map(|(l, _)| l.as_str())
    }

    pub fn element(&self, label: &str) -> Result<&IntMatrix, GroupError> {
        self.elements
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, m)| m)
            .ok_or_else(|| GroupError::UnknownElement(label.to_string()))
    }

    fn position(&self, m: &IntMatrix) -> Option<usize> {
        let r = reduce_matrix(m, self.modulus);
        self.elements
            .iter()
            .position(|(_, x)| reduce_matrix(x, self.modulus) == r)
    }

    /// Label of the element equal to `m`, if present.
    pub fn label_of(&self, m: &IntMatrix) -> Option<&str> {
        self.position(m).map(|i| self.elements[i].0.as_str())
    }

    /// Closure under products and inverses, with the identity present.
    pub fn closure_check(&self) -> ClosureReport {
        let n = self.ctx.arity();
        let mut violations = Vec::new();
        if self.position(&IntMatrix::identity(n)).is_none() {
            violations.push("identity missing".to_string());
        }
        for (a, ma) in &self.elements {
            for (b, mb) in &self.elements {
                let p = ma.mul(mb).expect("square");
                if self.position(&p).is_none() {
                    violations.push(format!("{a}*{b} not in set"));
                }
            }
            let has_inverse = self.elements.iter().any(|(_, mb)| {
                reduce_matrix(&ma.mul(mb).expect("square"), self.modulus)
                    == reduce_matrix(&IntMatrix::identity(n), self.modulus)
            });
            if !has_inverse {
                violations.push(format!("{a} has no inverse in set"));
            }
        }
        ClosureReport {
            ok: violations.is_empty(),
            order: self.elements.len(),
            violations,
        }
    }

    fn ring_map(&self, m: &IntMatrix, ring: &CoefficientRing) -> RingMap {
        let n = self.ctx.arity();
        let images = (0..n)
            .map(|j| {
                let col: Vec<BigInt> = (0..n).map(|i| m.get(i, j).clone()).collect();
                Polynomial::linear(&self.ctx, ring, &col)
            })
            .collect();
        RingMap::new(&self.ctx, &self.ctx, ring, images).expect("square matrix of context arity")
    }

    pub fn act_matrix(&self, m: &IntMatrix, p: &Polynomial) -> Result<Polynomial, GroupError> {
        if p.variable_context() != &*self.ctx {
            return Err(PolyError::ContextMismatch.into());
        }
        let p = p.with_context(&self.ctx)?;
        Ok(substitute(&p, &self.ring_map(m, p.ring()))?)
    }

    pub fn act(&self, label: &str, p: &Polynomial) -> Result<Polynomial, GroupError> {
        let m = self.element(label)?;
        self.act_matrix(m, p)
    }

    /// `Σ_g g·p`, the torus-level model of restriction after transfer.
    pub fn orbit_sum(&self, p: &Polynomial) -> Result<Polynomial, GroupError> {
        let mut acc = Polynomial::zero(&self.ctx, p.ring());
        for (_, m) in &self.elements {
            acc = &acc + &self.act_matrix(m, p)?;
        }
        Ok(acc)
    }

    pub fn is_invariant(&self, p: &Polynomial) -> Result<bool, GroupError> {
        for (_, m) in &self.elements {
            if self.act_matrix(m, p)? != *p {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Elements used to cut out invariants: the generators if declared.
    fn cutting_set(&self) -> Vec<&IntMatrix> {
        if self.generators.is_empty() {
            self.elements.iter().map(|(_, m)| m).collect()
        } else {
            self.generators
                .iter()
                .map(|g| self.element(g).expect("validated"))
                .collect()
        }
    }

    /// The group transported through a linear embedding `F` of a new
    /// variable space: element `g` becomes the `N` with `F N = M_g F`.
    /// Column `k` of `F` is the image of new variable `k` in the old variables.
    pub fn transport(
        &self,
        new_ctx: &Ctx,
        embedding: &IntMatrix,
    ) -> Result<MatrixGroup, GroupError> {
        let k = new_ctx.arity();
        if embedding.rows() != self.ctx.arity() || embedding.cols() != k {
            return Err(GroupError::BadMatrix {
                label: "embedding".into(),
                message: format!("expected a {}x{k} matrix", self.ctx.arity()),
            });
        }
        let cols: Vec<Vec<BigInt>> = embedding.transpose().row_vectors();
        let mut out = Vec::new();
        for (label, m) in &self.elements {
            let mf = m.mul(embedding)?;
            let mut n = IntMatrix::zeros(k, k);
            for j in 0..k {
                let target: Vec<BigInt> = (0..mf.rows()).map(|i| mf.get(i, j).clone()).collect();
                let sol = rational_solution(&target, &cols)?
                    .ok_or_else(|| GroupError::NotTransportable(label.clone()))?;
                for (i, x) in sol.into_iter().enumerate() {
                    if !x.is_integer() {
                        return Err(GroupError::NotTransportable(label.clone()));
                    }
                    n.set(i, j, x.to_integer());
                }
            }
            out.push((label.clone(), n));
        }
        let mut g = MatrixGroup::new(new_ctx, out, self.modulus)?;
        g.generators = self.generators.clone();
        Ok(g)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearConstraint {
    /// Invariance under `x ↦ x + t·direction`, imposed as vanishing of the
    /// directional derivative.
    DirectionalShift(Vec<BigInt>),
}

impl LinearConstraint {
    pub fn shift(direction: &[i64]) -> Self {
        LinearConstraint::DirectionalShift(direction.iter().map(|&x| BigInt::from(x)).collect())
    }

    fn check(&self, ctx: &Ctx) -> Result<&[BigInt], GroupError> {
        let LinearConstraint::DirectionalShift(dir) = self;
        if dir.len() != ctx.arity() || dir.iter().all(Zero::is_zero) {
            return Err(GroupError::BadDirection(ctx.arity()));
        }
        Ok(dir)
    }

    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial, GroupError> {
        let dir = self.check(p.ctx())?;
        let mut acc = Polynomial::zero(p.ctx(), p.ring());
        for (i, c) in dir.iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &p.derivative(i).scale_int(i64::try_from(c).unwrap_or(0));
            }
        }
        Ok(acc)
    }

    pub fn holds(&self, p: &Polynomial) -> Result<bool, GroupError> {
        Ok(self.apply(p)?.is_zero())
    }

    /// Oracle: `p(x + t·direction) = p(x)` checked by literal substitution in a
    /// fresh variable `t`.
    pub fn holds_by_substitution(&self, p: &Polynomial) -> Result<bool, GroupError> {
        let ctx = p.ctx();
        let dir = self.check(ctx)?;
        let mut tname = "t".to_string();
        while ctx.index_of(&tname).is_some() {
            tname.push('_');
        }
        let ext = ctx.extended([(tname.as_str(), 1)])?;
        let n = ctx.arity();
        let images = (0..n)
            .map(|i| {
                let mut coeffs = vec![BigInt::zero(); n + 1];
                coeffs[i] = BigInt::one();
                coeffs[n] = dir[i].clone();
                Polynomial::linear(&ext, p.ring(), &coeffs)
            })
            .collect();
        let shifted = substitute(p, &RingMap::new(ctx, &ext, p.ring(), images)?)?;
        let plain = substitute(
            p,
            &RingMap::new(
                ctx,
                &ext,
                p.ring(),
                (0..n)
                    .map(|i| Polynomial::var_at(&ext, p.ring(), i))
                    .collect(),
            )?,
        )?;
        Ok(shifted == plain)
    }
}

/// A `Z`-basis (saturated, Hermite-reduced) of the degree-`d` integer
/// polynomials fixed by the group and satisfying every constraint.
pub fn invariant_basis(
    g: &MatrixGroup,
    constraints: &[LinearConstraint],
    d: u32,
) -> Result<Vec<Polynomial>, GroupError> {
    let ctx = g.ctx();
    let z = CoefficientRing::Integers;
    let basis = monomials_of_degree(ctx, d);
    let n = basis.len();
    let lower = if d == 0 {
        Vec::new()
    } else {
        monomials_of_degree(ctx, d - 1)
    };
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    let mono_polys: Vec<Polynomial> = basis
        .iter()
        .map(|m| Polynomial::monomial(ctx, &z, m.clone(), num_rational::BigRational::one()))
        .collect();
    for m in g.cutting_set() {
        let mut block = vec![vec![BigInt::zero(); n]; n];
        for (j, mp) in mono_polys.iter().enumerate() {
            let img = &g.act_matrix(m, mp)? - mp;
            if img.is_zero() {
                continue;
            }
            let (_, v) = img
                .coefficient_vector(d)
                .map_err(|_| GroupError::BadMatrix {
                    label: g.label_of(m).unwrap_or("?").to_string(),
                    message: "action does not preserve the grading".into(),
                })?;
            for (i, x) in v.into_iter().enumerate() {
                block[i][j] = x;
            }
        }
        rows.extend(block.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())));
    }
    for c in constraints {
        c.check(ctx)?;
        if d == 0 {
            continue;
        }
        let mut block = vec![vec![BigInt::zero(); n]; lower.len()];
        for (j, mp) in mono_polys.iter().enumerate() {
            let img = c.apply(mp)?;
            if img.is_zero() {
                continue;
            }
            let (_, v) = img.coefficient_vector(d - 1)?;
            for (i, x) in v.into_iter().enumerate() {
                block[i][j] = x;
            }
        }
        rows.extend(block.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())));
    }
    let kernel = if rows.is_empty() {
        (0..n)
            .map(|i| {
                let mut e = vec![BigInt::zero(); n];
                e[i] = BigInt::one();
                e
            })
            .collect()
    } else {
        kernel_basis(&IntMatrix::from_rows(n, &rows)?)
    };
    Ok(kernel
        .iter()
        .map(|v| Polynomial::from_coefficient_vector(ctx, &z, &basis, v))
        .collect::<Result<Vec<_>, _>>()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::VariableContext;

    fn z() -> CoefficientRing {
        CoefficientRing::Integers
    }

    #[test]
    fn closure_examples() {
        let xy = VariableContext::new(["x", "y"]).unwrap();
        let g = s3_two_variable(&xy);
        let r = g.closure_check();
        assert!(r.ok, "{:?}", r.violations);
        assert_eq!(r.order, 6);
        let triv = MatrixGroup::new(&xy, vec![("e".into(), IntMatrix::identity(2))], None).unwrap();
        assert_eq!(triv.closure_check().order, 1);
        let shear = IntMatrix::from_i64(&[&[1, 1], &[0, 1]]);
        let bad = MatrixGroup::new(
            &xy,
            vec![("e".into(), IntMatrix::identity(2)), ("m".into(), shear)],
            None,
        )
        .unwrap();
        let r = bad.closure_check();
        assert!(!r.ok && !r.violations.is_empty());
        let singular = IntMatrix::from_i64(&[&[2, 0], &[0, 1]]);
        assert!(MatrixGroup::new(&xy, vec![("s".into(), singular)], None).is_err());
    }

    #[test]
    fn two_variable_action() {
        let xy = VariableContext::new(["x", "y"]).unwrap();
        let g = s3_two_variable(&xy);
        let x = Polynomial::var(&xy, &z(), "x").unwrap();
        let y = Polynomial::var(&xy, &z(), "y").unwrap();
        assert_eq!(g.act("(12)", &x).unwrap(), y);
        assert_eq!(g.act("(123)", &x).unwrap(), -&y);
        assert_eq!(g.act("(123)", &y).unwrap(), &x - &y);
        assert_eq!(g.act("e", &x).unwrap(), x);
        let g3 = Polynomial::parse(&xy, &z(), "(x+y)*(2*x-y)*(2*y-x)").unwrap();
        assert_eq!(g.act("(123)", &g3).unwrap(), g3);
        assert!(matches!(
            g.act("(99)", &x),
            Err(GroupError::UnknownElement(_))
        ));
    }

    #[test]
    fn orbit_sums() {
        let u = VariableContext::new(["u1", "u2"]).unwrap();
        let a3 = a3_on_u(&u);
        let u2u3 = Polynomial::parse(&u, &z(), "u2^2*(-u1-u2)").unwrap();
        let theta = Polynomial::parse(&u, &z(), "u2^2*(-u1-u2) + (-u1-u2)^2*u1 + u1^2*u2").unwrap();
        assert_eq!(a3.orbit_sum(&u2u3).unwrap(), theta);
        let u1 = Polynomial::var(&u, &z(), "u1").unwrap();
        assert!(a3.orbit_sum(&u1).unwrap().is_zero());
        assert_eq!(a3.orbit_sum(&theta).unwrap(), theta.scale_int(3));
    }

    #[test]
    fn invariant_examples() {
        let x = VariableContext::new(["x1", "x2", "x3"]).unwrap();
        let s3 = s3_on_x(&x);
        let shift = [LinearConstraint::shift(&[1, 1, 1])];
        let b2 = invariant_basis(&s3, &shift, 2).unwrap();
        let g2 = Polynomial::parse(&x, &z(), "(x1+x2+x3)^2 - 3*(x1*x2+x1*x3+x2*x3)").unwrap();
        assert_eq!(b2.len(), 1);
        assert!(b2[0] == g2 || b2[0] == -&g2);
        let b1 = invariant_basis(&s3, &[], 1).unwrap();
        assert_eq!(
            b1,
            vec![Polynomial::parse(&x, &z(), "x1 + x2 + x3").unwrap()]
        );
        assert!(invariant_basis(&s3, &shift, 1).unwrap().is_empty());
        assert_eq!(invariant_basis(&s3, &shift, 0).unwrap().len(), 1);
    }

    #[test]
    fn shift_criteria_agree() {
        let x = VariableContext::new(["x1", "x2", "x3"]).unwrap();
        let c = LinearConstraint::shift(&[1, 1, 1]);
        for text in ["x1 - x2", "(x1-x2)^2*(x2-x3)", "x1*x2", "x1 + x2 + x3"] {
            let p = Polynomial::parse(&x, &z(), text).unwrap();
            assert_eq!(
                c.holds(&p).unwrap(),
                c.holds_by_substitution(&p).unwrap(),
                "{text}"
            );
        }
        assert!(LinearConstraint::shift(&[0, 0, 0])
            .holds(&Polynomial::one(&x, &z()))
            .is_err());
    }

    #[test]
    fn twisted_action_is_derived() {
        let u = VariableContext::new(["u1", "u2"]).unwrap();
        let g = s3_twisted_u(&u);
        assert!(g.closure_check().ok);
        let p = |s: &str| Polynomial::parse(&u, &z(), s).unwrap();
        assert_eq!(g.act("(12)", &p("u1")).unwrap(), p("-u2"));
        assert_eq!(g.act("(12)", &p("u2")).unwrap(), p("-u1"));
        assert_eq!(g.act("(123)", &p("u1")).unwrap(), p("-u1-u2"));
        assert_eq!(g.act("(123)", &p("u2")).unwrap(), p("u1"));
        assert_eq!(g.act("(123)", &p("-u1-u2")).unwrap(), p("u2"));
    }
}
