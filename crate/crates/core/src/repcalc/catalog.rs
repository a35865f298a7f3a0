use super::{parse_rep, Lattice, LatticeMap, LatticeRef, RepError, VirtualRep};
use crate::exactpoly::CoefficientRing;
use crate::intlinalg::IntMatrix;

/// Named lattices, representations and lattice maps.
#[derive(Debug, Clone)]
pub struct Catalog {
    lattices: Vec<LatticeRef>,
    reps: Vec<(String, VirtualRep)>,
    maps: Vec<LatticeMap>,
}

fn all_nonzero_mod3() -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for a in -1..=1 {
        for b in -1..=1 {
            if (a, b) != (0, 0) {
                out.push(vec![a, b]);
            }
        }
    }
    out
}

impl Catalog {
    pub fn empty() -> Self {
        Catalog {
            lattices: Vec::new(),
            reps: Vec::new(),
            maps: Vec::new(),
        }
    }

    pub fn builtin() -> Self {
        Self::try_builtin().expect("builtin catalog is well formed")
    }

    fn try_builtin() -> Result<Self, RepError> {
        let z = CoefficientRing::Integers;
        let f3 = CoefficientRing::integers_mod(3)?;
        let t_gl3 = Lattice::new("T_GL3", &["x1", "x2", "x3"], z.clone())?;
        let t_xy = Lattice::new("T_PGL3_xy", &["x", "y"], z.clone())?;
        let t_u = Lattice::new("T_SL3_u", &["u1", "u2"], z)?;
        let a3mu3 = Lattice::new("A3mu3_ab", &["alpha", "beta"], f3.clone())?;
        let t_gl3_mod3 = Lattice::new("T_GL3_mod3", &["x1", "x2", "x3"], f3)?;
        let mut c = Catalog::empty();
        for l in [&t_gl3, &t_xy, &t_u, &a3mu3, &t_gl3_mod3] {
            c.lattices.push(l.clone());
        }

        let e = VirtualRep::from_weights(&t_gl3, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]])?;
        c.add_rep("E", e);
        let defs = [
            ("E_dual", "dual(E)"),
            ("sl3", "E * E_dual - 1"),
            ("Sym3E_PGL3", "twist(sym(E, 3), [-1, -1, -1])"),
            ("Sym3E_dual_PGL3", "dual(Sym3E_PGL3)"),
        ];
        for (name, text) in defs {
            let r = c.parse(text, &t_gl3)?;
            c.add_rep(name, r);
        }
        let w_t = VirtualRep::from_weights(&t_u, &[vec![1, 0], vec![0, 1], vec![-1, -1]])?;
        c.add_rep("W_A3T", w_t);
        // Chern roots beta + alpha, beta - alpha, beta
        let w_a = VirtualRep::from_weights(&a3mu3, &[vec![1, 1], vec![-1, 1], vec![0, 1]])?;
        c.add_rep("W_A3mu3", w_a);
        // regular representation minus the trivial one
        c.add_rep(
            "reg_A3mu3",
            VirtualRep::from_weights(&a3mu3, &all_nonzero_mod3())?,
        );

        c.maps.push(LatticeMap::new(
            "to_xy",
            &t_gl3,
            &t_xy,
            IntMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 0]]),
        )?);
        c.maps.push(LatticeMap::new(
            "to_SL3",
            &t_gl3,
            &t_u,
            IntMatrix::from_i64(&[&[1, 0, -1], &[0, 1, -1]]),
        )?);
        // every u_i restricts to the central character beta
        c.maps.push(LatticeMap::new(
            "to_A3mu3",
            &t_u,
            &a3mu3,
            IntMatrix::from_i64(&[&[0, 0], &[1, 1]]),
        )?);
        c.maps.push(LatticeMap::new(
            "mod3",
            &t_gl3,
            &t_gl3_mod3,
            IntMatrix::identity(3),
        )?);
        Ok(c)
    }

    pub fn lattices(&self) -> &[LatticeRef] {
        &self.lattices
    }

    pub fn reps(&self) -> &[(String, VirtualRep)] {
        &self.reps
    }

    pub fn maps(&self) -> &[LatticeMap] {
        &self.maps
    }

    pub fn lattice(&self, name: &str) -> Result<&LatticeRef, RepError> {
        self.lattices
            .iter()
            .find(|l| l.name() == name)
            .ok_or_else(|| RepError::UnknownName(name.to_string()))
    }

    pub fn rep(&self, name: &str) -> Result<&VirtualRep, RepError> {
        self.reps
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, r)| r)
            .ok_or_else(|| RepError::UnknownName(name.to_string()))
    }

    pub fn map(&self, name: &str) -> Result<&LatticeMap, RepError> {
        self.maps
            .iter()
            .find(|m| m.name() == name)
            .ok_or_else(|| RepError::UnknownName(name.to_string()))
    }

    /// Adds or replaces a named representation.
    pub fn add_rep(&mut self, name: &str, rep: VirtualRep) {
        match self.reps.iter_mut().find(|(n, _)| n == name) {
            Some(slot) => slot.1 = rep,
            None => self.reps.push((name.to_string(), rep)),
        }
    }

    pub fn add_lattice(&mut self, lattice: LatticeRef) -> Result<(), RepError> {
        if self.lattice(lattice.name()).is_ok() {
            return Err(RepError::Unsupported(format!(
                "lattice {} already defined",
                lattice.name()
            )));
        }
        self.lattices.push(lattice);
        Ok(())
    }

    /// Parses a representation expression against this catalog.
    pub fn parse(&self, text: &str, lattice: &LatticeRef) -> Result<VirtualRep, RepError> {
        let lookup = |name: &str| self.rep(name).ok().cloned();
        parse_rep(text, lattice, &lookup)
    }
}
