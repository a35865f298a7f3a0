//! Exact sparse multivariate polynomials over `Z`, `Z/m` and `Q` with
//! weighted grading and substitution.

mod context;
mod monomial;
mod polynomial;
mod ring;
mod ringmap;
mod text;

pub use context::{Ctx, VariableContext};
pub use monomial::{monomials_of_degree, Monomial};
pub use polynomial::{arith, ArithOp, Polynomial};
pub use ring::{symmetric_residue, CoefficientRing, Modulus};
pub use ringmap::{substitute, RingMap};
pub use text::{monomial_text, parse_polynomial};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),
    #[error("coefficient {0} is not in the coefficient ring")]
    NonIntegral(String),
    #[error("parse error at offset {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("invalid variable name `{0}`")]
    InvalidVariable(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("variable `{0}` has weight 0")]
    ZeroWeight(String),
    #[error("expected {expected} entries, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("operands live in different variable contexts")]
    ContextMismatch,
    #[error("coefficient ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },
    #[error("polynomial is not homogeneous of degree {degree}")]
    NotHomogeneous { degree: u32 },
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xs() -> Ctx {
        VariableContext::new(["x1", "x2", "x3"]).unwrap()
    }

    fn p(ctx: &Ctx, ring: &CoefficientRing, s: &str) -> Polynomial {
        Polynomial::parse(ctx, ring, s).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let c = xs();
        let z = CoefficientRing::Integers;
        let a = p(&c, &z, "x1 + x2");
        let b = p(&c, &z, "x1 - x2");
        let prod = arith(&a, &b, ArithOp::Mul).unwrap();
        assert_eq!(prod, p(&c, &z, "x1^2 - x2^2"));
        assert_eq!(prod.to_string(), "x1^2 - x2^2");
    }

    #[test]
    fn gamma_identity() {
        let c = xs();
        let z = CoefficientRing::Integers;
        let g2 = p(&c, &z, "(x1+x2+x3)^2 - 3*(x1*x2+x1*x3+x2*x3)");
        let g3 = p(&c, &z, "(2*x1-x2-x3)*(2*x2-x1-x3)*(2*x3-x1-x2)");
        let g6 = p(&c, &z, "((x1-x2)*(x1-x3)*(x2-x3))^2");
        let lhs = arith(&g2.pow(3), &g3.pow(2), ArithOp::Sub).unwrap();
        let rhs = (&g2.pow(3) - &g6.scale_int(9)).scale_int(-3);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn mod3_square() {
        let ab = VariableContext::new(["alpha", "beta"]).unwrap();
        let f3 = CoefficientRing::integers_mod(3).unwrap();
        let s = p(&ab, &f3, "alpha + beta");
        let sq = arith(&s, &s, ArithOp::Mul).unwrap();
        assert_eq!(sq, p(&ab, &f3, "alpha^2 + 2*alpha*beta + beta^2"));
        assert_eq!(sq.to_string(), "alpha^2 - alpha*beta + beta^2");
    }

    #[test]
    fn mismatches_are_errors() {
        let c = xs();
        let other = VariableContext::new(["y"]).unwrap();
        let z = CoefficientRing::Integers;
        let q = CoefficientRing::Rationals;
        assert_eq!(
            arith(
                &Polynomial::one(&c, &z),
                &Polynomial::one(&other, &z),
                ArithOp::Add
            ),
            Err(PolyError::ContextMismatch)
        );
        assert!(matches!(
            arith(
                &Polynomial::one(&c, &z),
                &Polynomial::one(&c, &q),
                ArithOp::Mul
            ),
            Err(PolyError::RingMismatch { .. })
        ));
    }

    #[test]
    fn homogeneous_product_degree() {
        let c = VariableContext::weighted([("a", 2), ("b", 3)]).unwrap();
        let z = CoefficientRing::Integers;
        let f = p(&c, &z, "a^3 + b^2");
        let g = p(&c, &z, "a*b");
        assert_eq!((&f * &g).homogeneous_degree(), Some(11));
    }

    #[test]
    fn gamma2_to_xy() {
        let c = xs();
        let xy = VariableContext::new(["x", "y"]).unwrap();
        let z = CoefficientRing::Integers;
        let m = RingMap::from_text(&c, &xy, &z, &["x", "y", "0"]).unwrap();
        let g2 = p(&c, &z, "(x1+x2+x3)^2 - 3*(x1*x2+x1*x3+x2*x3)");
        assert_eq!(substitute(&g2, &m).unwrap(), p(&xy, &z, "(x+y)^2 - 3*x*y"));
        assert!(m.is_graded());
    }

    #[test]
    fn identity_and_elimination() {
        let u = VariableContext::new(["u1", "u2", "u3"]).unwrap();
        let u12 = VariableContext::new(["u1", "u2"]).unwrap();
        let z = CoefficientRing::Integers;
        let f = p(&u, &z, "u1^3*u2 - 7*u3 + 2");
        assert_eq!(substitute(&f, &RingMap::identity(&u, &z)).unwrap(), f);
        let elim = RingMap::from_text(&u, &u12, &z, &["u1", "u2", "-u1-u2"]).unwrap();
        let s = p(&u, &z, "u1 + u2 + u3");
        assert!(substitute(&s, &elim).unwrap().is_zero());
        let wrong = p(&u12, &z, "u1");
        assert_eq!(substitute(&wrong, &elim), Err(PolyError::ContextMismatch));
    }

    #[test]
    fn non_graded_map_is_flagged() {
        let c = xs();
        let z = CoefficientRing::Integers;
        let m = RingMap::from_text(&c, &c, &z, &["x1^2", "x2", "x3"]).unwrap();
        assert!(!m.is_graded());
    }

    #[test]
    fn homogeneous_parts() {
        let c = xs();
        let z = CoefficientRing::Integers;
        let f = p(&c, &z, "x1^2 + x2");
        assert_eq!(f.homogeneous_part(2), p(&c, &z, "x1^2"));
        let w = VariableContext::weighted([("lambda", 2), ("rho", 4)]).unwrap();
        let g = p(&w, &z, "lambda^2 + rho");
        assert_eq!(g.homogeneous_part(4), g);
    }

    #[test]
    fn chi_underline_is_homogeneous() {
        let u = VariableContext::new(["u1", "u2", "u3"]).unwrap();
        let u12 = VariableContext::new(["u1", "u2"]).unwrap();
        let z = CoefficientRing::Integers;
        let elim = RingMap::from_text(&u, &u12, &z, &["u1", "u2", "-u1-u2"]).unwrap();
        let chi = p(
            &u,
            &z,
            "(u1^2*u2 + u2^2*u3 + u3^2*u1)*(u1*u2^2 + u2*u3^2 + u3*u1^2)",
        );
        let e = substitute(&chi, &elim).unwrap();
        assert!(!e.is_zero());
        assert_eq!(e.homogeneous_part(6), e);
    }

    #[test]
    fn coefficient_vectors() {
        let c = xs();
        let z = CoefficientRing::Integers;
        let (basis, v) = p(&c, &z, "x1*x2").coefficient_vector(2).unwrap();
        let names: Vec<_> = basis.iter().map(|m| monomial_text(&c, m)).collect();
        assert_eq!(names, ["x1^2", "x1*x2", "x1*x3", "x2^2", "x2*x3", "x3^2"]);
        let v: Vec<i64> = v.iter().map(|x| i64::try_from(x).unwrap()).collect();
        assert_eq!(v, [0, 1, 0, 0, 0, 0]);
        assert_eq!(monomials_of_degree(&c, 6).len(), 28);
        assert!(matches!(
            p(&c, &z, "x1 + x2^2").coefficient_vector(2),
            Err(PolyError::NotHomogeneous { degree: 2 })
        ));
    }

    #[test]
    fn rstar_degree_six_basis() {
        let r = VariableContext::weighted([
            ("lambda", 2),
            ("c3", 3),
            ("rho", 4),
            ("chi", 6),
            ("c6", 6),
            ("c8", 8),
        ])
        .unwrap();
        let mut names: Vec<_> = monomials_of_degree(&r, 6)
            .iter()
            .map(|m| monomial_text(&r, m))
            .collect();
        names.sort();
        assert_eq!(names, ["c3^2", "c6", "chi", "lambda*rho", "lambda^3"]);
    }

    #[test]
    fn canonical_format_round_trips() {
        let c = xs();
        let z = CoefficientRing::Integers;
        let f = p(&c, &z, "27*x3 - 9*x2*x1 + 2*x1^3");
        assert_eq!(f.to_string(), "2*x1^3 - 9*x1*x2 + 27*x3");
        assert_eq!(p(&c, &z, &f.to_string()), f);
        let q = CoefficientRing::Rationals;
        let g = p(&c, &q, "-1/2*x1 + 3/4");
        assert_eq!(g.to_string(), "-1/2*x1 + 3/4");
        assert_eq!(p(&c, &q, &g.to_string()), g);
    }

    #[test]
    fn parse_errors_carry_positions() {
        let c = xs();
        let z = CoefficientRing::Integers;
        match Polynomial::parse(&c, &z, "x1 + y") {
            Err(PolyError::Parse { position, .. }) => assert_eq!(position, 5),
            other => panic!("{other:?}"),
        }
        assert!(Polynomial::parse(&c, &z, "x1 +").is_err());
        assert!(Polynomial::parse(&c, &z, "(x1").is_err());
        assert!(Polynomial::parse(&c, &z, "x1 x2").is_err());
        assert!(Polynomial::parse(&c, &z, "x1/2").is_err());
        assert!(matches!(
            Polynomial::parse(&c, &z, "1/2*x1"),
            Err(PolyError::NonIntegral(_))
        ));
    }
}
