use chowcheck::exactpoly::{CoefficientRing, Ctx, Polynomial, VariableContext};
use chowcheck::groups::{
    invariant_basis, s3_on_x, s3_twisted_u, s3_two_variable, LinearConstraint, MatrixGroup,
};
use chowcheck::intlinalg::{smith_normal_form, IntMatrix};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn catalogued() -> Vec<MatrixGroup> {
    vec![
        s3_on_x(&VariableContext::new(["x1", "x2", "x3"]).unwrap()),
        s3_two_variable(&VariableContext::new(["x", "y"]).unwrap()),
        s3_twisted_u(&VariableContext::new(["u1", "u2"]).unwrap()),
    ]
}

fn poly_in(ctx: Ctx) -> impl Strategy<Value = Polynomial> {
    let n = ctx.arity();
    prop::collection::vec((prop::collection::vec(0u32..4, n), -5i64..6), 0..5).prop_map(
        move |terms| {
            Polynomial::from_terms(
                &ctx,
                &CoefficientRing::Integers,
                terms
                    .into_iter()
                    .map(|(e, c)| (e, BigRational::from_integer(BigInt::from(c)))),
            )
            .unwrap()
        },
    )
}

proptest! {
    #[test]
    fn action_composes(idx in 0usize..3, seed in any::<prop::sample::Index>(), p in poly_in(VariableContext::new(["a", "b", "c"]).unwrap())) {
        let g = &catalogued()[idx];
        let ctx = g.ctx().clone();
        // rename p into the group's context by truncating variables
        let q = p.map_monomials(&ctx, |e| e[..ctx.arity()].to_vec()).unwrap();
        let elems = g.elements();
        let (_, a) = &elems[seed.index(elems.len())];
        for (_, b) in elems {
            let ab = a.mul(b).unwrap();
            prop_assert_eq!(
                g.act_matrix(&ab, &q).unwrap(),
                g.act_matrix(a, &g.act_matrix(b, &q).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn orbit_sums_are_invariant(idx in 0usize..3, p in poly_in(VariableContext::new(["a", "b", "c"]).unwrap())) {
        let g = &catalogued()[idx];
        let ctx = g.ctx().clone();
        let q = p.map_monomials(&ctx, |e| e[..ctx.arity()].to_vec()).unwrap();
        let s = g.orbit_sum(&q).unwrap();
        prop_assert!(g.is_invariant(&s).unwrap());
        prop_assert_eq!(g.orbit_sum(&s).unwrap(), s.scale_int(g.order() as i64));
    }
}

#[test]
fn invariant_bases_are_invariant_and_saturated() {
    let x = VariableContext::new(["x1", "x2", "x3"]).unwrap();
    let g = s3_on_x(&x);
    let shift = LinearConstraint::shift(&[1, 1, 1]);
    for d in 0..=7 {
        let basis = invariant_basis(&g, std::slice::from_ref(&shift), d).unwrap();
        for b in &basis {
            assert!(g.is_invariant(b).unwrap());
            assert!(shift.holds(b).unwrap());
            assert!(shift.holds_by_substitution(b).unwrap());
        }
        if !basis.is_empty() {
            let rows: Vec<Vec<BigInt>> = basis
                .iter()
                .map(|b| b.coefficient_vector(d).unwrap().1)
                .collect();
            let s = smith_normal_form(&IntMatrix::from_rows(rows[0].len(), &rows).unwrap());
            assert!(s.diag.iter().all(|v| *v == BigInt::from(1)), "degree {d}");
        }
    }
}

#[test]
fn shift_invariant_counts_match_generators() {
    // Hilbert series 1/((1-t^2)(1-t^3))
    let x = VariableContext::new(["x1", "x2", "x3"]).unwrap();
    let g = s3_on_x(&x);
    let shift = LinearConstraint::shift(&[1, 1, 1]);
    let expected = [1, 0, 1, 1, 1, 1, 2, 1, 2, 2, 2, 2, 3];
    for (d, &e) in expected.iter().enumerate() {
        assert_eq!(
            invariant_basis(&g, std::slice::from_ref(&shift), d as u32)
                .unwrap()
                .len(),
            e,
            "degree {d}"
        );
    }
}
