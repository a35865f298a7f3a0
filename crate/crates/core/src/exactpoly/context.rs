use std::sync::Arc;

use super::PolyError;

/// Ordered variable alphabet with per-variable degree weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VariableContext {
    names: Vec<String>,
    weights: Vec<u32>,
}

pub type Ctx = Arc<VariableContext>;

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl VariableContext {
    /// Context with every weight equal to 1.
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Ctx, PolyError> {
        Self::weighted(names.into_iter().map(|n| (n, 1)))
    }

    pub fn weighted<S: Into<String>>(
        vars: impl IntoIterator<Item = (S, u32)>,
    ) -> Result<Ctx, PolyError> {
        let mut names = Vec::new();
        let mut weights = Vec::new();
        for (name, weight) in vars {
            let name = name.into();
            if !is_identifier(&name) {
                return Err(PolyError::InvalidVariable(name));
            }
            if names.contains(&name) {
                return Err(PolyError::DuplicateVariable(name));
            }
            if weight == 0 {
                return Err(PolyError::ZeroWeight(name));
            }
            names.push(name);
            weights.push(weight);
        }
        Ok(Arc::new(VariableContext { names, weights }))
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// A new context with `extra` appended after the existing variables.
    pub fn extended<S: Into<String>>(
        &self,
        extra: impl IntoIterator<Item = (S, u32)>,
    ) -> Result<Ctx, PolyError> {
        let vars = self
            .names
            .iter()
            .cloned()
            .zip(self.weights.iter().copied())
            .chain(extra.into_iter().map(|(n, w)| (n.into(), w)));
        Self::weighted(vars)
    }

    /// Weighted degree of an exponent vector.
    pub fn degree_of(&self, exps: &[u32]) -> u32 {
        exps.iter().zip(&self.weights).map(|(e, w)| e * w).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_zero_weights() {
        assert!(matches!(
            VariableContext::new(["x", "x"]),
            Err(PolyError::DuplicateVariable(_))
        ));
        assert!(matches!(
            VariableContext::weighted([("x", 0)]),
            Err(PolyError::ZeroWeight(_))
        ));
        assert!(VariableContext::new(["1x"]).is_err());
    }

    #[test]
    fn weighted_degree() {
        let ctx = VariableContext::weighted([("lam", 2), ("rho", 4)]).unwrap();
        assert_eq!(ctx.degree_of(&[2, 0]), 4);
        assert_eq!(ctx.degree_of(&[1, 1]), 6);
    }
}
