use std::cmp::Ordering;

use super::context::VariableContext;

/// Exponent vector together with its weighted degree.
///
/// Ordering is graded-lexicographic: higher weighted degree is greater, ties
/// broken by comparing exponents in the context's variable order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    degree: u32,
    exps: Box<[u32]>,
}

impl Monomial {
    pub fn new(ctx: &VariableContext, exps: Vec<u32>) -> Self {
        debug_assert_eq!(exps.len(), ctx.arity());
        Monomial {
            degree: ctx.degree_of(&exps),
            exps: exps.into_boxed_slice(),
        }
    }

    pub fn one(ctx: &VariableContext) -> Self {
        Self::new(ctx, vec![0; ctx.arity()])
    }

    pub fn var(ctx: &VariableContext, i: usize) -> Self {
        let mut exps = vec![0; ctx.arity()];
        exps[i] = 1;
        Self::new(ctx, exps)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            degree: self.degree + other.degree,
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if self.exps.iter().zip(other.exps.iter()).any(|(a, b)| a < b) {
            return None;
        }
        Some(Monomial {
            degree: self.degree - other.degree,
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| a - b)
                .collect(),
        })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of weighted degree `d`, in descending graded-lex order.
pub fn monomials_of_degree(ctx: &VariableContext, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; ctx.arity()];
    fill(ctx, 0, d, &mut exps, &mut out);
    out
}

fn fill(
    ctx: &VariableContext,
    i: usize,
    remaining: u32,
    exps: &mut Vec<u32>,
    out: &mut Vec<Monomial>,
) {
    if i == ctx.arity() {
        if remaining == 0 {
            out.push(Monomial::new(ctx, exps.clone()));
        }
        return;
    }
    let w = ctx.weight(i);
    for e in (0..=remaining / w).rev() {
        exps[i] = e;
        fill(ctx, i + 1, remaining - e * w, exps, out);
    }
    exps[i] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_two_basis_in_three_variables() {
        let ctx = VariableContext::new(["x1", "x2", "x3"]).unwrap();
        let basis: Vec<Vec<u32>> = monomials_of_degree(&ctx, 2)
            .iter()
            .map(|m| m.exps().to_vec())
            .collect();
        assert_eq!(
            basis,
            vec![
                vec![2, 0, 0],
                vec![1, 1, 0],
                vec![1, 0, 1],
                vec![0, 2, 0],
                vec![0, 1, 1],
                vec![0, 0, 2]
            ]
        );
    }

    #[test]
    fn basis_is_strictly_descending() {
        let ctx = VariableContext::weighted([("a", 1), ("b", 2), ("c", 3)]).unwrap();
        let basis = monomials_of_degree(&ctx, 7);
        assert!(basis.windows(2).all(|w| w[0] > w[1]));
        assert!(basis.iter().all(|m| m.degree() == 7));
    }
}
