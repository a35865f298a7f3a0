//! The check bodies, in registry order.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::fixtures::{eliminate_u3, f3, parse, z, Gl3, SlTorus};
use super::{CheckEntry, CheckError, CheckSpec, Outcome, Witness};
use crate::exactpoly::{monomials_of_degree, Polynomial, VariableContext};
use crate::groups::{
    a3_on_u, invariant_basis, s3_on_x, s3_twisted_u, s3_two_variable, xy_characters,
    LinearConstraint,
};
use crate::intlinalg::{membership, submodule_compare, Relation};
use crate::presented::{LRewrite, RingPresentation};
use crate::repcalc::{express_in, normalize_mod_det, Catalog, VirtualRep};

macro_rules! entry {
    ($name:literal, $desc:literal, $anchor:literal, $bound:expr, $f:ident) => {
        CheckEntry {
            spec: CheckSpec {
                name: $name,
                description: $desc,
                anchor: $anchor,
                degree_bound: $bound,
            },
            run: $f,
        }
    };
}

pub(crate) fn entries() -> Vec<CheckEntry> {
    vec![
        entry!(
            "gamma-invariance",
            "gamma2, gamma3, gamma6 are S3-invariant and shift-invariant",
            "γ2, γ3, γ6 ∈ (A_T*)^S3",
            None,
            gamma_invariance
        ),
        entry!(
            "gamma-generation",
            "monomials in gamma2, gamma3, gamma6 span the shift-invariant S3-invariants in each degree",
            "(A_T*)^S3 = Z[γ2, γ3, γ6]",
            Some((12, 24)),
            gamma_generation
        ),
        entry!(
            "gamma-syzygy",
            "gamma2^3 - gamma3^2 + 3(gamma2^3 - 9 gamma6) vanishes",
            "γ2³ − γ3² = −3(γ2³ − 9γ6)",
            None,
            gamma_syzygy
        ),
        entry!(
            "two-variable-gammas",
            "the gammas at x3 = 0 match their two-variable formulas",
            "γ2 = (x+y)² − 3xy, γ3 = −9(x+y)xy + 2(x+y)³, γ6 = (x+y)²x²y² − 4x³y³",
            None,
            two_variable_gammas
        ),
        entry!(
            "twistaction-group",
            "the two-variable S3 matrices form a group of order 6 fixing the gammas",
            "(12): x ↔ y, (123): x ↦ −y, y ↦ x − y",
            None,
            twistaction_group
        ),
        entry!(
            "hsurj-restrictions",
            "torus restrictions of c2(sl3), c2(Sym3E), c3(Sym3E), c6(sl3) in terms of the gammas",
            "c2(sl3) ↦ −2γ2, c2(Sym3E) ↦ −5γ2, c3(Sym3E) ↦ γ3, c6(sl3) ↦ γ6",
            None,
            hsurj_restrictions
        ),
        entry!(
            "transfer-laws",
            "orbit sums are invariant, scale invariants by the group order and kill u1, u2, u3",
            "tsf(ξ)|_T = Σ_{f∈F} f_*ξ",
            None,
            transfer_laws
        ),
        entry!(
            "chi-underline-vanishes",
            "(2 theta + 3 c3)^2 + 4 c2^3 + 27 c3^2 is zero on the SL3 torus",
            "χ̲|_T = 0",
            None,
            chi_underline_vanishes
        ),
        entry!(
            "theta-epsilon",
            "theta^eps - theta - 3 c3(W) vanishes on the torus",
            "θ^ε = θ + 3c3(W)",
            None,
            theta_epsilon
        ),
        entry!(
            "delta-discriminant",
            "delta^2 + 4 c2^3 + 27 c3^2 = 0 and 2 theta + 3 c3 = ±delta",
            "δ = (u1 − u2)(u2 − u3)(u1 − u3)",
            None,
            delta_discriminant
        ),
        entry!(
            "point-class",
            "(l - u2)(l - u3) = l^2 + l u1 + u2 u3 given u1 + u2 + u3 = 0",
            "(ℓ − u2)(ℓ − u3) = ℓ² + ℓu1 + u2u3",
            None,
            point_class
        ),
        entry!(
            "a3mu3-chern",
            "Chern classes of W and sl3 on A3 x mu3 over Z/3",
            "c2(W) = −α², c3(W) = β(β² − α²), c8(sl3) = α²β²(β² − α²)²",
            None,
            a3mu3_chern
        ),
        entry!(
            "rho-squared",
            "(alpha c3(W))^2 equals c8(sl3) on A3 x mu3",
            "ρ|_{A3⋉T} = αc3(W), ρ² = c8(sl3)",
            None,
            rho_squared
        ),
        entry!(
            "alphabeta-nonmembership",
            "alpha beta^3 is not a multiple of alpha^2 in degree 4 over Z/3",
            "αβ³ ∉ im(·(−α²))",
            None,
            alphabeta_nonmembership
        ),
        entry!(
            "sl3-restriction",
            "restrictions to the SL3 torus in alpha2, alpha3 and the relation 27c6 - c3^2 - 4 lambda^3",
            "c2(sl3) ↦ 6α2, c2(Sym3E) ↦ 15α2, c3(Sym3E) ↦ 27α3, 27c6(sl3) − c3(Sym3E)² − 4λ³ ↦ 0",
            None,
            sl3_restriction
        ),
        entry!(
            "repring-generators",
            "characters of sl3, Sym3E, Sym3E dual in s1, s2 and the PGL3 monoid of exponents",
            "Sym3E = s1³ − 2s1s2 + 1",
            Some((9, 60)),
            repring_generators
        ),
        entry!(
            "regular-rep-vanishing",
            "c1..c4 of the regular-representation weight multisets of A3 x mu3 vanish mod 3",
            "c_i(sl3)|_{A3×μ3} = c_j(Sym3E)|_{A3×μ3} = 0",
            None,
            regular_rep_vanishing
        ),
        entry!(
            "rstar-structure",
            "graded components of R*: free ranks, rational ranks and torsion",
            "R* ⊗ Q = Q[λ, c3(Sym3E)], R*_4 = Z ⊕ Z/3",
            Some((16, 32)),
            rstar_structure
        ),
    ]
}

fn poly(p: &Polynomial) -> Witness {
    Witness::Poly(p.clone())
}

fn note(s: impl Into<String>) -> Witness {
    Witness::Note(s.into())
}

fn shift() -> [LinearConstraint; 1] {
    [LinearConstraint::shift(&[1, 1, 1])]
}

fn vectors(polys: &[Polynomial], d: u32) -> Result<Vec<Vec<BigInt>>, CheckError> {
    polys
        .iter()
        .map(|p| Ok(p.coefficient_vector(d)?.1))
        .collect()
}

fn gamma_invariance(_: Option<u32>) -> Result<Outcome, CheckError> {
    let gl = Gl3::new()?;
    let s3 = s3_on_x(gl.ctx());
    let mut out = Outcome::new();
    for (name, g) in gl.named_gammas()? {
        out.poly(name.clone(), &g);
        out.require(
            s3.is_invariant(&g)?,
            format!("{name}_not_s3_invariant"),
            || poly(&g),
        );
        let sh = &shift()[0];
        let d = sh.apply(&g)?;
        out.require(d.is_zero(), format!("{name}_shift_derivative"), || poly(&d));
    }
    Ok(out)
}

/// Monomials `γ2^a γ3^b γ6^c` of degree `d`.
fn gamma_monomials(gammas: &[Polynomial; 3], d: u32) -> Vec<Polynomial> {
    let mut out = Vec::new();
    for c in 0..=d / 6 {
        for b in 0..=(d - 6 * c) / 3 {
            let rest = d - 6 * c - 3 * b;
            if rest.is_multiple_of(2) {
                let a = rest / 2;
                out.push(&(&gammas[0].pow(a) * &gammas[1].pow(b)) * &gammas[2].pow(c));
            }
        }
    }
    out
}

fn gamma_generation(bound: Option<u32>) -> Result<Outcome, CheckError> {
    let top = bound.unwrap_or(12);
    let gl = Gl3::new()?;
    let gammas = gl.gammas()?;
    let s3 = s3_on_x(gl.ctx());
    let mut out = Outcome::new();
    let mut ranks = Vec::new();
    for d in 0..=top {
        let spanned = vectors(&gamma_monomials(&gammas, d), d)?;
        let inv = vectors(&invariant_basis(&s3, &shift(), d)?, d)?;
        ranks.push(inv.len().to_string());
        let cmp = submodule_compare(&spanned, &inv)?;
        out.require(
            cmp.relation == Relation::Equal,
            format!("degree_{d}"),
            || {
                let inv: Vec<String> = cmp
                    .quotient_invariants
                    .iter()
                    .map(ToString::to_string)
                    .collect();
                note(format!(
                    "{:?}, quotient invariants [{}]",
                    cmp.relation,
                    inv.join(", ")
                ))
            },
        );
    }
    out.note("ranks", ranks.join(", "));
    Ok(out)
}

fn gamma_syzygy(_: Option<u32>) -> Result<Outcome, CheckError> {
    let gl = Gl3::new()?;
    let [g2, g3, g6] = gl.gammas()?;
    let lhs = &g2.pow(3) - &g3.pow(2);
    let rhs = (&g2.pow(3) - &g6.scale_int(9)).scale_int(-3);
    let diff = &lhs - &rhs;
    let mut out = Outcome::new();
    out.poly("gamma2^3 - gamma3^2", &lhs);
    out.require(diff.is_zero(), "difference", || poly(&diff));
    Ok(out)
}

fn two_variable_gammas(_: Option<u32>) -> Result<Outcome, CheckError> {
    let gl = Gl3::new()?;
    let map = gl.catalog.map("to_xy")?.clone();
    let xy = map.target().ctx().clone();
    let expected = [
        "(x+y)^2 - 3*x*y",
        "-9*(x+y)*x*y + 2*(x+y)^3",
        "(x+y)^2*x^2*y^2 - 4*x^3*y^3",
    ];
    let mut out = Outcome::new();
    for ((name, g), text) in gl.named_gammas()?.into_iter().zip(expected) {
        let image = map.restrict_poly(&g)?;
        let diff = &image - &parse(&xy, &z(), text)?;
        out.poly(name.clone(), &image);
        out.require(diff.is_zero(), format!("{name}_difference"), || poly(&diff));
    }
    Ok(out)
}

fn twistaction_group(_: Option<u32>) -> Result<Outcome, CheckError> {
    let gl = Gl3::new()?;
    let map = gl.catalog.map("to_xy")?.clone();
    let xy = map.target().ctx().clone();
    let g = s3_two_variable(&xy);
    let closure = g.closure_check();
    let mut out = Outcome::new();
    out.note("order", closure.order.to_string());
    out.require(closure.ok && closure.order == 6, "closure", || {
        note(closure.violations.join("; "))
    });
    let reference = s3_on_x(gl.ctx()).transport(&xy, &xy_characters())?;
    for (label, m) in g.elements() {
        let found = reference.label_of(m);
        out.require(
            found == Some(label.as_str()),
            format!("element_{label}"),
            || note(format!("{m:?} is {:?} under the permutation action", found)),
        );
    }
    for (name, gamma) in gl.named_gammas()? {
        let image = map.restrict_poly(&gamma)?;
        for label in g.labels() {
            let moved = g.act(label, &image)?;
            let diff = &moved - &image;
            out.require(diff.is_zero(), format!("{label}_moves_{name}"), || {
                poly(&diff)
            });
        }
    }
    Ok(out)
}

fn hsurj_restrictions(_: Option<u32>) -> Result<Outcome, CheckError> {
    let gl = Gl3::new()?;
    let gens = gl.named_gammas()?;
    let cases = [
        ("c2(sl3)", "sl3", 2, "gamma2", -2),
        ("c2(Sym3E)", "Sym3E_PGL3", 2, "gamma2", -5),
        ("c3(Sym3E)", "Sym3E_PGL3", 3, "gamma3", 1),
        ("c6(sl3)", "sl3", 6, "gamma6", 1),
    ];
    let mut out = Outcome::new();
    for (label, rep, i, symbol, k) in cases {
        let c = gl.chern(rep, i)?;
        let e = express_in(&c, &gens)?;
        let sym = e.symbols.index_of(symbol).expect("generator symbol");
        let expected = Polynomial::var_at(&e.symbols, &z(), sym).scale_int(k);
        out.poly(label, &e.expression);
        if e.expression != expected {
            let g = &gens[sym].1;
            let diff = &c - &g.scale_int(k);
            out.require(false, format!("{label} - ({expected})"), || poly(&diff));
        }
    }
    Ok(out)
}

fn transfer_laws(_: Option<u32>) -> Result<Outcome, CheckError> {
    let t = SlTorus::new();
    let a3 = a3_on_u(&t.ctx);
    let s3u = s3_twisted_u(&t.ctx);
    let gl = Gl3::new()?;
    let s3x = s3_on_x(gl.ctx());
    let mut out = Outcome::new();
    let samples = [
        (&a3, t.poly("u2^2*u3")?),
        (&a3, t.poly("u1^3 - 2*u1*u2")?),
        (&s3u, t.poly("u1^2*u2")?),
        (&s3x, gl.poly("x1^2*x2 + 5*x3")?),
    ];
    for (i, (g, p)) in samples.iter().enumerate() {
        let s = g.orbit_sum(p)?;
        out.require(
            g.is_invariant(&s)?,
            format!("sample_{i}_not_invariant"),
            || poly(&s),
        );
        let twice = g.orbit_sum(&s)?;
        let diff = &twice - &s.scale_int(g.order() as i64);
        out.require(diff.is_zero(), format!("sample_{i}_scaling"), || {
            poly(&diff)
        });
    }
    out.poly("tsf(u2^2*u3)", &a3.orbit_sum(&t.poly("u2^2*u3")?)?);
    for u in ["u1", "u2", "u3"] {
        let s = a3.orbit_sum(&t.poly(u)?)?;
        out.require(s.is_zero(), format!("tsf({u})"), || poly(&s));
    }
    Ok(out)
}

fn chi_underline(t: &SlTorus) -> Result<Polynomial, CheckError> {
    let (theta, c2, c3) = (t.theta()?, t.c2()?, t.c3()?);
    let lin = &theta.scale_int(2) + &c3.scale_int(3);
    Ok(&(&lin.pow(2) + &c2.pow(3).scale_int(4)) + &c3.pow(2).scale_int(27))
}

fn chi_underline_vanishes(_: Option<u32>) -> Result<Outcome, CheckError> {
    let t = SlTorus::new();
    let theta = t.theta()?;
    let a3 = a3_on_u(&t.ctx);
    let mut out = Outcome::new();
    let tsf = a3.orbit_sum(&t.poly("u2^2*u3")?)?;
    out.poly("theta", &theta);
    out.require(tsf == theta, "theta_is_not_the_orbit_sum", || {
        poly(&(&tsf - &theta))
    });
    let chi = chi_underline(&t)?;
    out.require(chi.is_zero(), "chi_underline", || poly(&chi));
    Ok(out)
}

fn theta_epsilon(_: Option<u32>) -> Result<Outcome, CheckError> {
    let t = SlTorus::new();
    let g = s3_twisted_u(&t.ctx);
    let (theta, c2, c3) = (t.theta()?, t.c2()?, t.c3()?);
    let theta_eps = g.act("(12)", &theta)?;
    let mut out = Outcome::new();
    out.poly("theta^eps", &theta_eps);
    let diff = &(&theta_eps - &theta) - &c3.scale_int(3);
    out.require(diff.is_zero(), "theta^eps - theta - 3*c3", || poly(&diff));
    let c2d = &g.act("(12)", &c2)? - &c2;
    out.require(c2d.is_zero(), "c2^eps - c2", || poly(&c2d));
    let c3d = &g.act("(12)", &c3)? + &c3;
    out.require(c3d.is_zero(), "c3^eps + c3", || poly(&c3d));
    Ok(out)
}

fn delta_discriminant(_: Option<u32>) -> Result<Outcome, CheckError> {
    let t = SlTorus::new();
    let (theta, c2, c3, delta) = (t.theta()?, t.c2()?, t.c3()?, t.delta()?);
    let mut out = Outcome::new();
    out.poly("delta", &delta);
    let disc = &(&delta.pow(2) + &c2.pow(3).scale_int(4)) + &c3.pow(2).scale_int(27);
    out.require(disc.is_zero(), "delta^2 + 4*c2^3 + 27*c3^2", || poly(&disc));
    let lin = &theta.scale_int(2) + &c3.scale_int(3);
    out.poly("2*theta + 3*c3", &lin);
    if lin == delta {
        out.note("sign", "+1");
    } else if lin == -&delta {
        out.note("sign", "-1");
    } else {
        out.require(false, "2*theta + 3*c3 - delta", || poly(&(&lin - &delta)));
    }
    Ok(out)
}

fn point_class(_: Option<u32>) -> Result<Outcome, CheckError> {
    let full = VariableContext::new(["ell", "u1", "u2", "u3"])?;
    let reduced = VariableContext::new(["ell", "u1", "u2"])?;
    let elim = eliminate_u3(&full, &reduced)?;
    let lhs = parse(&full, &z(), "(ell - u2)*(ell - u3)")?;
    let rhs = parse(&full, &z(), "ell^2 + ell*u1 + u2*u3")?;
    let mut out = Outcome::new();
    out.poly("point_class", &rhs);
    let diff = elim.apply(&(&lhs - &rhs))?;
    out.require(diff.is_zero(), "difference", || poly(&diff));
    // ℓ is a root of the projective bundle relation Π(ℓ - u_i)
    let cubic = elim.apply(&parse(&full, &z(), "(ell - u1)*(ell - u2)*(ell - u3)")?)?;
    let rw = LRewrite::from_monic("ell", &cubic)?;
    let top = rw.reduce(&(&parse(&reduced, &z(), "ell - u1")? * &elim.apply(&rhs)?))?;
    out.require(top.is_zero(), "(ell - u1)*point_class", || poly(&top));
    Ok(out)
}

fn a3mu3_rep(c: &Catalog, name: &str) -> Result<VirtualRep, CheckError> {
    Ok(c.rep(name)?.clone())
}

fn a3mu3_chern(_: Option<u32>) -> Result<Outcome, CheckError> {
    let c = Catalog::builtin();
    let ab = c.lattice("A3mu3_ab")?.ctx().clone();
    let w = a3mu3_rep(&c, "W_A3mu3")?;
    let reg = a3mu3_rep(&c, "reg_A3mu3")?;
    let cases = [
        ("c2(W)", w.chern_class(2)?, "-alpha^2"),
        ("c3(W)", w.chern_class(3)?, "beta*(beta^2 - alpha^2)"),
        (
            "c8(sl3)",
            reg.chern_class(8)?,
            "alpha^2*beta^2*(beta^2 - alpha^2)^2",
        ),
    ];
    let mut out = Outcome::new();
    for (label, got, text) in cases {
        let diff = &got - &parse(&ab, &f3(), text)?;
        out.poly(label, &got);
        out.require(diff.is_zero(), format!("{label}_difference"), || {
            poly(&diff)
        });
    }
    Ok(out)
}

fn rho_squared(_: Option<u32>) -> Result<Outcome, CheckError> {
    let c = Catalog::builtin();
    let ab = c.lattice("A3mu3_ab")?.ctx().clone();
    let alpha = parse(&ab, &f3(), "alpha")?;
    let rho = &alpha * &a3mu3_rep(&c, "W_A3mu3")?.chern_class(3)?;
    let c8 = a3mu3_rep(&c, "reg_A3mu3")?.chern_class(8)?;
    let mut out = Outcome::new();
    out.poly("rho", &rho);
    let diff = &rho.pow(2) - &c8;
    out.require(diff.is_zero(), "rho^2 - c8", || poly(&diff));
    Ok(out)
}

fn alphabeta_nonmembership(_: Option<u32>) -> Result<Outcome, CheckError> {
    let ab = VariableContext::new(["alpha", "beta"])?;
    let ring = f3();
    let factor = parse(&ab, &ring, "-alpha^2")?;
    let image: Vec<Polynomial> = monomials_of_degree(&ab, 2)
        .into_iter()
        .map(|m| {
            &Polynomial::monomial(&ab, &ring, m, BigRational::from_integer(1.into())) * &factor
        })
        .collect();
    let gens = vectors(&image, 4)?;
    let three = BigInt::from(3);
    let mut out = Outcome::new();
    let target = parse(&ab, &ring, "alpha*beta^3")?;
    let m = membership(&target.coefficient_vector(4)?.1, &gens, Some(&three))?;
    out.note("member", m.member.to_string());
    out.require(!m.member, "certificate", || {
        let cert: Vec<String> = m
            .certificate
            .iter()
            .flatten()
            .map(ToString::to_string)
            .collect();
        note(cert.join(", "))
    });
    let control = parse(&ab, &ring, "alpha^3*beta")?;
    let c = membership(&control.coefficient_vector(4)?.1, &gens, Some(&three))?;
    out.require(c.member, "control_alpha^3*beta", || poly(&control));
    Ok(out)
}

fn sl3_restriction(_: Option<u32>) -> Result<Outcome, CheckError> {
    let gl = Gl3::new()?;
    let map = gl.catalog.map("to_SL3")?.clone();
    let e = map.restrict_rep(gl.rep("E")?)?;
    let gens = vec![
        ("alpha2".to_string(), e.chern_class(2)?),
        ("alpha3".to_string(), e.chern_class(3)?),
    ];
    let restrict = |rep: &str, i: usize| -> Result<Polynomial, CheckError> {
        Ok(map.restrict_poly(&gl.chern(rep, i)?)?)
    };
    let (c2_sl3, c2_sym, c3_sym, c6_sl3) = (
        restrict("sl3", 2)?,
        restrict("Sym3E_PGL3", 2)?,
        restrict("Sym3E_PGL3", 3)?,
        restrict("sl3", 6)?,
    );
    let mut out = Outcome::new();
    let cases = [
        ("c2(sl3)", &c2_sl3, "6*alpha2"),
        ("c2(Sym3E)", &c2_sym, "15*alpha2"),
        ("c3(Sym3E)", &c3_sym, "27*alpha3"),
    ];
    for (label, p, text) in cases {
        let ex = express_in(p, &gens)?;
        out.poly(label, &ex.expression);
        let want = parse(&ex.symbols, &z(), text)?;
        let diff = &ex.expression - &want;
        out.require(diff.is_zero(), format!("{label}_difference"), || {
            poly(&diff)
        });
    }
    let lambda = &c2_sl3.scale_int(2) - &c2_sym;
    let lam = express_in(&lambda, &gens)?;
    out.poly("lambda", &lam.expression);
    let c6 = express_in(&c6_sl3, &gens)?;
    out.poly("c6(sl3)", &c6.expression);
    let base = &c6_sl3.scale_int(27) - &c3_sym.pow(2);
    let relation = &base - &lambda.pow(3).scale_int(4);
    let rel = express_in(&relation, &gens)?;
    out.poly("27*c6 - c3^2 - 4*lambda^3", &rel.expression);
    let flipped = express_in(&(&base + &lambda.pow(3).scale_int(4)), &gens)?;
    out.poly("27*c6 - c3^2 + 4*lambda^3", &flipped.expression);
    out.require(rel.expression.is_zero(), "relation_image", || {
        poly(&rel.expression)
    });
    Ok(out)
}

/// Whether `(a, b)` is a sum of `(3,0)`, `(1,1)`, `(0,3)`.
fn in_monoid(a: u32, b: u32) -> bool {
    (0..=a.min(b)).any(|j| (a - j).is_multiple_of(3) && (b - j).is_multiple_of(3))
}

fn repring_generators(bound: Option<u32>) -> Result<Outcome, CheckError> {
    let top = bound.unwrap_or(9);
    let gl = Gl3::new()?;
    let s1 = gl.rep("E")?.character_mod_det()?;
    let s2 = gl.rep("E")?.exterior_power(2)?.character_mod_det()?;
    let one = Polynomial::one(gl.ctx(), &z());
    let s1s2 = &s1 * &s2;
    let cases = [
        ("sl3", &s1s2 - &one),
        ("Sym3E_PGL3", &(&s1.pow(3) - &s1s2.scale_int(2)) + &one),
        ("Sym3E_dual_PGL3", &(&s2.pow(3) - &s1s2.scale_int(2)) + &one),
    ];
    let mut out = Outcome::new();
    for (name, formula) in cases {
        let chi = gl.rep(name)?.character_mod_det()?;
        let diff = &chi - &normalize_mod_det(&formula);
        out.poly(name, &chi);
        out.require(diff.is_zero(), format!("{name}_difference"), || poly(&diff));
    }
    let mut count = 0;
    for a in 0..=top {
        for b in 0..=top - a {
            if (a + 2 * b) % 3 == 0 {
                count += 1;
                out.require(in_monoid(a, b), format!("s1^{a}*s2^{b}"), || {
                    note("not in the monoid")
                });
            }
        }
    }
    out.note("admissible_pairs", count.to_string());
    Ok(out)
}

fn regular_rep_vanishing(_: Option<u32>) -> Result<Outcome, CheckError> {
    let c = Catalog::builtin();
    let l = c.lattice("A3mu3_ab")?.clone();
    let reg = a3mu3_rep(&c, "reg_A3mu3")?;
    let plus = reg.direct_sum(&VirtualRep::trivial(&l, 2))?;
    let mut out = Outcome::new();
    for (label, rep) in [("sl3", &reg), ("Sym3E", &plus)] {
        out.note(format!("dim {label}"), rep.dim().to_string());
        for (i, ci) in rep.chern_classes_upto(4)?.iter().enumerate().skip(1) {
            out.require(ci.is_zero(), format!("c{i}({label})"), || poly(ci));
        }
    }
    Ok(out)
}

/// Number of `(a, b)` with `2a + 3b = d`.
fn lambda_c3_count(d: u32) -> usize {
    (0..=d / 3)
        .filter(|b| (d - 3 * b).is_multiple_of(2))
        .count()
}

fn rstar_structure(bound: Option<u32>) -> Result<Outcome, CheckError> {
    let top = bound.unwrap_or(16);
    let r = RingPresentation::rstar();
    let table = r.hilbert_table(top)?;
    let ranks = r.rational_rank_table(top)?;
    let mut out = Outcome::new();
    for (gc, (d, q)) in table.iter().zip(ranks) {
        let expected = lambda_c3_count(d);
        out.require(
            gc.free_rank == q && q == expected,
            format!("degree_{d}"),
            || {
                note(format!(
                    "free {} rational {q} expected {expected}",
                    gc.free_rank
                ))
            },
        );
    }
    if let Some(gc) = table.iter().find(|g| g.degree == 4) {
        out.note("degree_4", gc.to_string());
        out.require(
            gc.torsion == vec![BigInt::from(3)],
            "degree_4_torsion",
            || note(gc.to_string()),
        );
    }
    let rows: Vec<String> = table.iter().map(ToString::to_string).collect();
    out.note("table", rows.join("; "));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monoid_membership() {
        assert!(in_monoid(0, 0));
        assert!(in_monoid(2, 2));
        assert!(in_monoid(4, 1));
        assert!(!in_monoid(1, 0));
        assert!(!in_monoid(2, 0));
    }

    #[test]
    fn gamma_monomial_counts() {
        let gl = Gl3::new().unwrap();
        let g = gl.gammas().unwrap();
        let counts: Vec<usize> = (0..=12).map(|d| gamma_monomials(&g, d).len()).collect();
        assert_eq!(counts, vec![1, 0, 1, 1, 1, 1, 3, 1, 3, 3, 3, 3, 6]);
    }

    #[test]
    fn rstar_rank_counts() {
        let counts: Vec<usize> = (0..=8).map(lambda_c3_count).collect();
        assert_eq!(counts, vec![1, 0, 1, 1, 1, 1, 2, 1, 2]);
    }
}
