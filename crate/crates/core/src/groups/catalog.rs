use crate::exactpoly::Ctx;
use crate::intlinalg::IntMatrix;

use super::MatrixGroup;

/// S3 in cycle notation, as images `σ(1), σ(2), σ(3)` (1-based).
const S3: [(&str, [usize; 3]); 6] = [
    ("e", [1, 2, 3]),
    ("(12)", [2, 1, 3]),
    ("(13)", [3, 2, 1]),
    ("(23)", [1, 3, 2]),
    ("(123)", [2, 3, 1]),
    ("(132)", [3, 1, 2]),
];

/// Matrix of `σ·x_i = x_{σ⁻¹(i)}`; `sigma` holds 1-based images.
pub fn permutation_matrix(sigma: &[usize]) -> IntMatrix {
    let n = sigma.len();
    let mut m = IntMatrix::zeros(n, n);
    for (i, &s) in sigma.iter().enumerate() {
        // image of x_{σ(i)} is x_i
        m.set(i, s - 1, 1.into());
    }
    m
}

fn labels(keep: &[&str]) -> Vec<(String, IntMatrix)> {
    S3.iter()
        .filter(|(l, _)| keep.is_empty() || keep.contains(l))
        .map(|(l, s)| (l.to_string(), permutation_matrix(s)))
        .collect()
}

/// S3 permuting `x1, x2, x3`.
pub fn s3_on_x(ctx: &Ctx) -> MatrixGroup {
    MatrixGroup::new(ctx, labels(&[]), None)
        .and_then(|g| g.with_generators(vec!["(12)".into(), "(123)".into()]))
        .expect("S3 permutation matrices")
}

/// Images of `u1, u2` (columns) in `x1, x2, x3`: `u1 = x2 - x3`, `u2 = x3 - x1`,
/// from `[t1,t2,t3] ↦ (t2/t3, t3/t1, t1/t2)`.
pub fn u_characters() -> IntMatrix {
    IntMatrix::from_i64(&[&[0, -1], &[1, 0], &[-1, 1]])
}

/// Images of `x = x1 - x3`, `y = x2 - x3` (columns) in `x1, x2, x3`.
pub fn xy_characters() -> IntMatrix {
    IntMatrix::from_i64(&[&[1, 0], &[0, 1], &[-1, -1]])
}

fn xyz() -> Ctx {
    crate::exactpoly::VariableContext::new(["x1", "x2", "x3"]).expect("valid names")
}

/// The two-variable action on `x, y` generated by the transcribed matrices
/// `(12): x ↦ y, y ↦ x` and `(123): x ↦ -y, y ↦ x - y`. Elements are labeled by
/// matching against the permutation action.
pub fn s3_two_variable(ctx: &Ctx) -> MatrixGroup {
    let gens = vec![
        ("(12)".to_string(), IntMatrix::from_i64(&[&[0, 1], &[1, 0]])),
        (
            "(123)".to_string(),
            IntMatrix::from_i64(&[&[0, 1], &[-1, -1]]),
        ),
    ];
    let g = MatrixGroup::generate(ctx, gens, None, 64).expect("finite group");
    let reference = s3_on_x(&xyz())
        .transport(ctx, &xy_characters())
        .expect("differences are preserved");
    let relabeled = g
        .elements()
        .iter()
        .map(|(l, m)| {
            let name = reference
                .label_of(m)
                .map_or_else(|| l.clone(), str::to_string);
            (name, m.clone())
        })
        .collect();
    MatrixGroup::new(ctx, relabeled, None)
        .and_then(|h| h.with_generators(vec!["(12)".into(), "(123)".into()]))
        .expect("relabeling keeps the group")
}

/// The S3 action on `u1, u2` (with `u3 = -u1 - u2`) derived by transporting the
/// permutation action through [`u_characters`].
pub fn s3_twisted_u(ctx: &Ctx) -> MatrixGroup {
    s3_on_x(&xyz())
        .transport(ctx, &u_characters())
        .expect("differences are preserved")
}

/// The alternating subgroup of [`s3_twisted_u`].
pub fn a3_on_u(ctx: &Ctx) -> MatrixGroup {
    let full = s3_twisted_u(ctx);
    let elements = ["e", "(123)", "(132)"]
        .iter()
        .map(|l| (l.to_string(), full.element(l).expect("present").clone()))
        .collect();
    MatrixGroup::new(ctx, elements, None)
        .and_then(|g| g.with_generators(vec!["(123)".into()]))
        .expect("subgroup")
}
