//! Shared polynomials and representations.

use crate::exactpoly::{CoefficientRing, Ctx, Polynomial, RingMap, VariableContext};
use crate::repcalc::{Catalog, LatticeRef, VirtualRep};

use super::CheckError;

pub(crate) fn z() -> CoefficientRing {
    CoefficientRing::Integers
}

pub(crate) fn f3() -> CoefficientRing {
    CoefficientRing::integers_mod(3).expect("3 is a valid modulus")
}

pub(crate) fn parse(
    ctx: &Ctx,
    ring: &CoefficientRing,
    text: &str,
) -> Result<Polynomial, CheckError> {
    Ok(Polynomial::parse(ctx, ring, text)?)
}

pub(crate) struct Gl3 {
    pub catalog: Catalog,
    pub lattice: LatticeRef,
}

impl Gl3 {
    pub fn new() -> Result<Self, CheckError> {
        let catalog = Catalog::builtin();
        let lattice = catalog.lattice("T_GL3")?.clone();
        Ok(Gl3 { catalog, lattice })
    }

    pub fn ctx(&self) -> &Ctx {
        self.lattice.ctx()
    }

    pub fn poly(&self, text: &str) -> Result<Polynomial, CheckError> {
        parse(self.ctx(), &z(), text)
    }

    pub fn rep(&self, name: &str) -> Result<&VirtualRep, CheckError> {
        Ok(self.catalog.rep(name)?)
    }

    pub fn chern(&self, rep: &str, i: usize) -> Result<Polynomial, CheckError> {
        Ok(self.rep(rep)?.chern_class(i)?)
    }

    /// `γ2, γ3, γ6` in `x1, x2, x3`.
    pub fn gammas(&self) -> Result<[Polynomial; 3], CheckError> {
        Ok([
            self.poly("(x1+x2+x3)^2 - 3*(x1*x2+x1*x3+x2*x3)")?,
            self.poly("2*(x1+x2+x3)^3 - 9*(x1+x2+x3)*(x1*x2+x1*x3+x2*x3) + 27*x1*x2*x3")?,
            self.poly("((x1-x2)*(x1-x3)*(x2-x3))^2")?,
        ])
    }

    pub fn named_gammas(&self) -> Result<Vec<(String, Polynomial)>, CheckError> {
        Ok(["gamma2", "gamma3", "gamma6"]
            .iter()
            .map(|s| s.to_string())
            .zip(self.gammas()?)
            .collect())
    }
}

/// The `SL3` torus in `u1, u2` with `u3 = -u1 - u2`.
pub(crate) struct SlTorus {
    pub ctx: Ctx,
}

impl SlTorus {
    pub fn new() -> Self {
        SlTorus {
            ctx: VariableContext::new(["u1", "u2"]).expect("valid names"),
        }
    }

    pub fn poly(&self, text: &str) -> Result<Polynomial, CheckError> {
        let elim = text.replace("u3", "(-u1-u2)");
        parse(&self.ctx, &z(), &elim)
    }

    pub fn c2(&self) -> Result<Polynomial, CheckError> {
        self.poly("u1*u2 + u1*u3 + u2*u3")
    }

    pub fn c3(&self) -> Result<Polynomial, CheckError> {
        self.poly("u1*u2*u3")
    }

    /// Torus value of the transfer of `u2^2 u3`.
    pub fn theta(&self) -> Result<Polynomial, CheckError> {
        self.poly("u2^2*u3 + u3^2*u1 + u1^2*u2")
    }

    pub fn delta(&self) -> Result<Polynomial, CheckError> {
        self.poly("(u1-u2)*(u2-u3)*(u1-u3)")
    }
}

/// Eliminates `u3` from a context `names` that contains `u1, u2, u3`.
pub(crate) fn eliminate_u3(source: &Ctx, target: &Ctx) -> Result<RingMap, CheckError> {
    let images: Vec<String> = source
        .names()
        .iter()
        .map(|n| {
            if n == "u3" {
                "-u1-u2".to_string()
            } else {
                n.clone()
            }
        })
        .collect();
    let refs: Vec<&str> = images.iter().map(String::as_str).collect();
    Ok(RingMap::from_text(source, target, &z(), &refs)?)
}
