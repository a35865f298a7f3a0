use chowcheck::intlinalg::{
    kernel_basis, membership, rational_rank, recombine, smith_normal_form, submodule_compare,
    IntMatrix, Relation,
};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
        prop::collection::vec(-6i64..7, r * c).prop_map(move |d| {
            IntMatrix::new(r, c, d.into_iter().map(BigInt::from).collect()).unwrap()
        })
    })
}

fn vectors(len: usize) -> impl Strategy<Value = Vec<Vec<BigInt>>> {
    prop::collection::vec(
        prop::collection::vec((-5i64..6).prop_map(BigInt::from), len),
        0..4,
    )
}

proptest! {
    #[test]
    fn smith_certifies(a in matrix()) {
        let s = smith_normal_form(&a);
        prop_assert_eq!(s.left.mul(&a).unwrap().mul(&s.right).unwrap(), s.diagonal_matrix());
        prop_assert!(s.left.is_unimodular());
        prop_assert!(s.right.is_unimodular());
        for w in s.diag.windows(2) {
            prop_assert!(w[1].is_zero() || (!w[0].is_zero() && (&w[1] % &w[0]).is_zero()));
        }
        prop_assert_eq!(s.rank(), rational_rank(&a));
    }

    #[test]
    fn kernel_is_saturated(a in matrix()) {
        let k = kernel_basis(&a);
        prop_assert_eq!(k.len() + rational_rank(&a), a.cols());
        for v in &k {
            prop_assert!(a.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
        if !k.is_empty() {
            let s = smith_normal_form(&IntMatrix::from_rows(a.cols(), &k).unwrap());
            prop_assert!(s.diag.iter().all(|d| *d == BigInt::from(1)));
        }
    }

    #[test]
    fn compare_is_mirror_consistent(a in vectors(3), b in vectors(3)) {
        let ab = submodule_compare(&a, &b).unwrap();
        let ba = submodule_compare(&b, &a).unwrap();
        prop_assert_eq!(ab.relation.mirrored(), ba.relation);
        prop_assert_eq!(ab.quotient_invariants, ba.quotient_invariants);
        let mut both = a.clone();
        both.extend(b.iter().cloned());
        let rel = submodule_compare(&a, &both).unwrap().relation;
        prop_assert!(rel == Relation::AInB || rel == Relation::Equal);
    }

    #[test]
    fn certificates_recombine(gens in vectors(3), coeffs in prop::collection::vec(-4i64..5, 4)) {
        let target = recombine(&gens, &coeffs.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>(), 3);
        let m = membership(&target, &gens, None).unwrap();
        prop_assert!(m.member);
        prop_assert_eq!(recombine(&gens, &m.certificate.unwrap(), 3), target.clone());
        let five = BigInt::from(5);
        let shifted: Vec<BigInt> = target.iter().map(|x| x + &five * 7).collect();
        let mm = membership(&shifted, &gens, Some(&five)).unwrap();
        prop_assert!(mm.member);
        let back = recombine(&gens, &mm.certificate.unwrap(), 3);
        for (x, y) in back.iter().zip(&shifted) {
            prop_assert!(((x - y) % &five).is_zero());
        }
    }
}
