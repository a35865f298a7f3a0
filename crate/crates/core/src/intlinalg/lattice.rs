use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::hermite::{hermite_normal_form, reduce_centered, solve_echelon};
use super::smith::smith_normal_form;
use super::{IntMatrix, LinAlgError};
use crate::exactpoly::symmetric_residue;

fn check_lengths(len: usize, vs: &[Vec<BigInt>]) -> Result<(), LinAlgError> {
    match vs.iter().find(|v| v.len() != len) {
        Some(v) => Err(LinAlgError::DimensionMismatch {
            expected: len,
            found: v.len(),
        }),
        None => Ok(()),
    }
}

/// Saturated basis of `{v : A v = 0}` in Hermite form.
///
/// Computed from the Hermite form of `[Aᵀ | I]`: rows whose left block vanishes
/// carry a unimodular-complement kernel basis in the right block.
pub fn kernel_basis(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let n = a.cols();
    let aug = a
        .transpose()
        .hconcat(&IntMatrix::identity(n))
        .expect("shapes agree");
    let hf = hermite_normal_form(&aug);
    let m = a.rows();
    let raw: Vec<Vec<BigInt>> = (0..n)
        .filter(|&i| hf.h.row(i)[..m].iter().all(Zero::is_zero))
        .map(|i| hf.h.row(i)[m..].to_vec())
        .collect();
    if raw.is_empty() {
        return raw;
    }
    hermite_normal_form(&IntMatrix::from_rows(n, &raw).expect("uniform rows")).basis()
}

/// Canonical Hermite basis of the span of `gens`.
pub fn lattice_basis(len: usize, gens: &[Vec<BigInt>]) -> Result<Vec<Vec<BigInt>>, LinAlgError> {
    check_lengths(len, gens)?;
    Ok(hermite_normal_form(&IntMatrix::from_rows(len, gens)?).basis())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "equal")]
    Equal,
    #[serde(rename = "A_in_B")]
    AInB,
    #[serde(rename = "B_in_A")]
    BInA,
    #[serde(rename = "incomparable")]
    Incomparable,
}

impl Relation {
    pub fn mirrored(self) -> Relation {
        match self {
            Relation::AInB => Relation::BInA,
            Relation::BInA => Relation::AInB,
            r => r,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub relation: Relation,
    /// Invariant factors (other than 1) of the larger span modulo the smaller;
    /// `0` marks a free summand. Empty unless one span contains the other.
    pub quotient_invariants: Vec<BigInt>,
}

fn contains_all(basis: &[Vec<BigInt>], pivots: &[usize], vs: &[Vec<BigInt>]) -> bool {
    vs.iter().all(|v| solve_echelon(basis, pivots, v).is_some())
}

/// Invariants of `span(big) / span(small)` given `small ⊆ big`.
fn quotient(big: &[Vec<BigInt>], big_pivots: &[usize], small: &[Vec<BigInt>]) -> Vec<BigInt> {
    if big.is_empty() {
        return Vec::new();
    }
    let coords: Vec<Vec<BigInt>> = small
        .iter()
        .map(|v| solve_echelon(big, big_pivots, v).expect("contained"))
        .collect();
    let k = big.len();
    let mut diag = if coords.is_empty() {
        Vec::new()
    } else {
        smith_normal_form(&IntMatrix::from_rows(k, &coords).expect("uniform")).diag
    };
    diag.resize(k, BigInt::zero());
    diag.retain(|d| !d.is_one());
    diag
}

pub fn submodule_compare(
    gen_a: &[Vec<BigInt>],
    gen_b: &[Vec<BigInt>],
) -> Result<Comparison, LinAlgError> {
    let len = gen_a.first().or(gen_b.first()).map_or(0, |v| v.len());
    check_lengths(len, gen_a)?;
    check_lengths(len, gen_b)?;
    let ha = hermite_normal_form(&IntMatrix::from_rows(len, gen_a)?);
    let hb = hermite_normal_form(&IntMatrix::from_rows(len, gen_b)?);
    let (ba, bb) = (ha.basis(), hb.basis());
    let a_in_b = contains_all(&bb, &hb.pivots, &ba);
    let b_in_a = contains_all(&ba, &ha.pivots, &bb);
    Ok(match (a_in_b, b_in_a) {
        (true, true) => Comparison {
            relation: Relation::Equal,
            quotient_invariants: Vec::new(),
        },
        (true, false) => Comparison {
            relation: Relation::AInB,
            quotient_invariants: quotient(&bb, &hb.pivots, &ba),
        },
        (false, true) => Comparison {
            relation: Relation::BInA,
            quotient_invariants: quotient(&ba, &ha.pivots, &bb),
        },
        (false, false) => Comparison {
            relation: Relation::Incomparable,
            quotient_invariants: Vec::new(),
        },
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    /// Coefficients on `gens`; canonical modulo relations among the generators.
    pub certificate: Option<Vec<BigInt>>,
}

/// Decides whether `target` lies in the span of `gens`, optionally modulo `m`.
pub fn membership(
    target: &[BigInt],
    gens: &[Vec<BigInt>],
    modulus: Option<&BigInt>,
) -> Result<Membership, LinAlgError> {
    let len = target.len();
    check_lengths(len, gens)?;
    if let Some(m) = modulus {
        if *m < BigInt::one() {
            return Err(LinAlgError::Shape(format!(
                "modulus must be positive, got {m}"
            )));
        }
    }
    let mut rows = gens.to_vec();
    if let Some(m) = modulus {
        for i in 0..len {
            let mut e = vec![BigInt::zero(); len];
            e[i] = m.clone();
            rows.push(e);
        }
    }
    let hf = hermite_normal_form(&IntMatrix::from_rows(len, &rows)?);
    let basis = hf.basis();
    let Some(coeffs) = solve_echelon(&basis, &hf.pivots, target) else {
        return Ok(Membership {
            member: false,
            certificate: None,
        });
    };
    let r = rows.len();
    let mut cert = vec![BigInt::zero(); r];
    for (k, c) in coeffs.iter().enumerate() {
        for (x, u) in cert.iter_mut().zip(hf.transform.row(k)) {
            *x += c * u;
        }
    }
    // relations among the rows: the transform rows beyond the rank
    let rels: Vec<Vec<BigInt>> = (hf.rank()..r)
        .map(|i| hf.transform.row(i).to_vec())
        .collect();
    if !rels.is_empty() {
        let rh = hermite_normal_form(&IntMatrix::from_rows(r, &rels)?);
        reduce_centered(&rh.basis(), &rh.pivots, &mut cert);
    }
    cert.truncate(gens.len());
    if let Some(m) = modulus {
        for c in cert.iter_mut() {
            *c = symmetric_residue(std::mem::take(c), m);
        }
    }
    Ok(Membership {
        member: true,
        certificate: Some(cert),
    })
}

/// `Σ cert[i] * gens[i]`.
pub fn recombine(gens: &[Vec<BigInt>], cert: &[BigInt], len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); len];
    for (g, c) in gens.iter().zip(cert) {
        for (x, y) in out.iter_mut().zip(g) {
            *x += c * y;
        }
    }
    out
}

fn rational_echelon(rows: &[Vec<BigRational>], len: usize) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..len {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = BigRational::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

/// Rank over `Q` by Gaussian elimination, independent of the integer normal forms.
pub fn rational_rank(a: &IntMatrix) -> usize {
    let rows: Vec<Vec<BigRational>> = (0..a.rows())
        .map(|i| {
            a.row(i)
                .iter()
                .cloned()
                .map(BigRational::from_integer)
                .collect()
        })
        .collect();
    rational_echelon(&rows, a.cols()).1.len()
}

/// Rational coefficients `x` with `Σ x[i] gens[i] = target`, if any.
pub fn rational_solution(
    target: &[BigInt],
    gens: &[Vec<BigInt>],
) -> Result<Option<Vec<BigRational>>, LinAlgError> {
    let len = target.len();
    check_lengths(len, gens)?;
    let k = gens.len();
    // augmented system: columns are generators, rows coordinates
    let rows: Vec<Vec<BigRational>> = (0..len)
        .map(|j| {
            let mut row: Vec<BigRational> = gens
                .iter()
                .map(|g| BigRational::from_integer(g[j].clone()))
                .collect();
            row.push(BigRational::from_integer(target[j].clone()));
            row
        })
        .collect();
    let (ech, pivots) = rational_echelon(&rows, k + 1);
    if pivots.last() == Some(&k) {
        return Ok(None);
    }
    let mut x = vec![BigRational::zero(); k];
    for (row, &p) in ech.iter().zip(&pivots) {
        x[p] = row[k].clone();
    }
    Ok(Some(x))
}
