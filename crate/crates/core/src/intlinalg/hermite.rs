use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// Row Hermite form: `transform * A = h`, with `h` in row echelon form,
/// positive pivots, entries above each pivot reduced into `[0, pivot)`,
/// and zero rows at the bottom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteForm {
    pub h: IntMatrix,
    pub transform: IntMatrix,
    /// Column of the pivot of each nonzero row.
    pub pivots: Vec<usize>,
}

impl HermiteForm {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Nonzero rows of `h`: a canonical basis of the row lattice.
    pub fn basis(&self) -> Vec<Vec<BigInt>> {
        (0..self.rank()).map(|i| self.h.row(i).to_vec()).collect()
    }
}

pub fn hermite_normal_form(a: &IntMatrix) -> HermiteForm {
    let (m, n) = (a.rows(), a.cols());
    let mut h = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        loop {
            // smallest nonzero |entry| in column c at rows >= r
            let mut best: Option<usize> = None;
            for i in r..m {
                let v = h.get(i, c);
                if !v.is_zero() && best.is_none_or(|b| v.abs() < h.get(b, c).abs()) {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            h.swap_rows(r, b);
            u.swap_rows(r, b);
            let mut done = true;
            for i in r + 1..m {
                if h.get(i, c).is_zero() {
                    continue;
                }
                let q = -h.get(i, c).div_floor(h.get(r, c));
                h.add_row_multiple(i, r, &q);
                u.add_row_multiple(i, r, &q);
                if !h.get(i, c).is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h.get(r, c).is_zero() {
            continue;
        }
        if h.get(r, c).is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = -h.get(i, c).div_floor(h.get(r, c));
            h.add_row_multiple(i, r, &q);
            u.add_row_multiple(i, r, &q);
        }
        pivots.push(c);
        r += 1;
    }
    HermiteForm {
        h,
        transform: u,
        pivots,
    }
}

/// Solves `x * basis = target` for an echelon basis (rows with given pivots).
/// Returns `None` if `target` is not in the row lattice.
pub(crate) fn solve_echelon(
    basis: &[Vec<BigInt>],
    pivots: &[usize],
    target: &[BigInt],
) -> Option<Vec<BigInt>> {
    let mut rest = target.to_vec();
    let mut coeffs = Vec::with_capacity(basis.len());
    for (row, &p) in basis.iter().zip(pivots) {
        let (q, rem) = rest[p].div_rem(&row[p]);
        if !rem.is_zero() {
            return None;
        }
        if !q.is_zero() {
            for (x, y) in rest.iter_mut().zip(row) {
                *x -= &q * y;
            }
        }
        coeffs.push(q);
    }
    rest.iter().all(Zero::is_zero).then_some(coeffs)
}

/// Reduces `v` modulo the row lattice of an echelon basis, taking centered
/// residues at each pivot.
pub(crate) fn reduce_centered(basis: &[Vec<BigInt>], pivots: &[usize], v: &mut [BigInt]) {
    for (row, &p) in basis.iter().zip(pivots) {
        let piv = &row[p];
        let mut q = v[p].div_floor(piv);
        let r = &v[p] - &q * piv;
        if r.clone() * BigInt::from(2) > *piv {
            q += BigInt::one();
        }
        if !q.is_zero() {
            for (x, y) in v.iter_mut().zip(row) {
                *x -= &q * y;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn echelon_shape_and_certificate() {
        let a = IntMatrix::from_i64(&[&[2, 4, 6], &[3, 6, 9], &[1, 1, 1]]);
        let hf = hermite_normal_form(&a);
        assert_eq!(hf.transform.mul(&a).unwrap(), hf.h);
        assert!(hf.transform.is_unimodular());
        assert_eq!(hf.pivots, vec![0, 1]);
        assert_eq!(
            hf.h,
            IntMatrix::from_i64(&[&[1, 0, -1], &[0, 1, 2], &[0, 0, 0]])
        );
    }

    #[test]
    fn centered_reduction() {
        let basis = vec![vec![BigInt::from(0), BigInt::from(4)]];
        let mut v = vec![BigInt::from(1), BigInt::from(7)];
        reduce_centered(&basis, &[1], &mut v);
        assert_eq!(v, vec![BigInt::from(1), BigInt::from(-1)]);
        let mut w = vec![BigInt::from(0), BigInt::from(2)];
        reduce_centered(&basis, &[1], &mut w);
        assert_eq!(w[1], BigInt::from(2));
    }
}
