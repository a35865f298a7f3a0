use chowcheck::exactpoly::Polynomial;
use chowcheck::repcalc::{Catalog, LatticeRef, VirtualRep};
use proptest::prelude::*;

fn binomial(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn rep_on(lattice: LatticeRef) -> impl Strategy<Value = VirtualRep> {
    let rank = lattice.rank();
    prop::collection::vec(prop::collection::vec(-2i64..3, rank), 0..5)
        .prop_map(move |ws| VirtualRep::from_weights(&lattice, &ws).unwrap())
}

fn lattice(name: &str) -> LatticeRef {
    Catalog::builtin().lattice(name).unwrap().clone()
}

proptest! {
    #[test]
    fn whitney(r in rep_on(lattice("T_GL3")), s in rep_on(lattice("T_GL3"))) {
        let sum = r.direct_sum(&s).unwrap();
        let n = sum.dim() as usize;
        let cr = r.chern_classes_upto(n).unwrap();
        let cs = s.chern_classes_upto(n).unwrap();
        let c = sum.chern_classes_upto(n).unwrap();
        for i in 0..=n {
            let mut acc = Polynomial::zero(c[i].ctx(), c[i].ring());
            for j in 0..=i {
                acc = &acc + &(&cr[j] * &cs[i - j]);
            }
            prop_assert_eq!(&acc, &c[i]);
        }
    }

    #[test]
    fn duality(r in rep_on(lattice("A3mu3_ab"))) {
        let d = r.dual();
        for i in 0..=(r.dim() as usize) {
            let ci = r.chern_class(i).unwrap();
            let expected = if i % 2 == 0 { ci } else { -&ci };
            prop_assert_eq!(d.chern_class(i).unwrap(), expected);
        }
    }

    #[test]
    fn naturality(r in rep_on(lattice("T_GL3")), s in rep_on(lattice("T_SL3_u"))) {
        let cat = Catalog::builtin();
        for map in cat.maps() {
            let src = if map.source().name() == "T_GL3" { &r } else { &s };
            let image = map.restrict_rep(src).unwrap();
            for i in 0..=(src.dim() as usize) {
                prop_assert_eq!(
                    map.restrict_poly(&src.chern_class(i).unwrap()).unwrap(),
                    image.chern_class(i).unwrap(),
                    "map {} degree {}", map.name(), i
                );
            }
        }
    }

    #[test]
    fn power_dimensions(r in rep_on(lattice("T_SL3_u")), k in 0usize..4) {
        let n = r.dim();
        prop_assert_eq!(r.sym_power(k).unwrap().dim(), binomial(n + k as i64 - 1, k as i64));
        prop_assert_eq!(r.exterior_power(k).unwrap().dim(), binomial(n, k as i64));
    }
}

#[test]
fn catalogued_reps_are_natural() {
    let cat = Catalog::builtin();
    for map in cat.maps() {
        for (name, rep) in cat.reps() {
            if rep.lattice() != map.source() {
                continue;
            }
            let image = map.restrict_rep(rep).unwrap();
            for i in 0..=(rep.dim() as usize) {
                assert_eq!(
                    map.restrict_poly(&rep.chern_class(i).unwrap()).unwrap(),
                    image.chern_class(i).unwrap(),
                    "{name} along {} in degree {i}",
                    map.name()
                );
            }
        }
    }
}

#[test]
fn pgl3_twist_lands_in_shift_invariants() {
    use chowcheck::groups::LinearConstraint;
    let cat = Catalog::builtin();
    let shift = LinearConstraint::shift(&[1, 1, 1]);
    for name in ["sl3", "Sym3E_PGL3", "Sym3E_dual_PGL3"] {
        let r = cat.rep(name).unwrap();
        for c in r.total_chern().unwrap() {
            assert!(shift.holds(&c).unwrap(), "{name}");
        }
    }
}
