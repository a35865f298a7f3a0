use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// `left * A * right = diag(diag)` padded with zeros to the shape of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub diag: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl SmithForm {
    /// The diagonal matrix with the shape of the input.
    pub fn diagonal_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.left.rows(), self.right.cols());
        for (i, v) in self.diag.iter().enumerate() {
            d.set(i, i, v.clone());
        }
        d
    }

    pub fn rank(&self) -> usize {
        self.diag.iter().filter(|d| !d.is_zero()).count()
    }

    /// Invariant factors other than 1, i.e. the torsion of the cokernel.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diag
            .iter()
            .filter(|d| !d.is_zero() && *d != &BigInt::from(1))
            .cloned()
            .collect()
    }
}

fn min_abs_entry(a: &IntMatrix, from: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in from..a.rows() {
        for j in from..a.cols() {
            let v = a.get(i, j);
            if v.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| v.abs() < a.get(bi, bj).abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Smith normal form by elimination pivoting on the entry of least absolute value.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut left = IntMatrix::identity(m);
    let mut right = IntMatrix::identity(n);
    let steps = m.min(n);
    for t in 0..steps {
        let Some((pi, pj)) = min_abs_entry(&d, t) else {
            break;
        };
        d.swap_rows(t, pi);
        left.swap_rows(t, pi);
        d.swap_cols(t, pj);
        right.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = -d.get(i, t).div_floor(d.get(t, t));
                d.add_row_multiple(i, t, &q);
                left.add_row_multiple(i, t, &q);
                if !d.get(i, t).is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..n {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = -d.get(t, j).div_floor(d.get(t, t));
                d.add_col_multiple(j, t, &q);
                right.add_col_multiple(j, t, &q);
                if !d.get(t, j).is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                // pivot must divide the remaining block
                let bad = (t + 1..m).find_map(|i| {
                    (t + 1..n)
                        .find(|&j| !d.get(i, j).is_multiple_of(d.get(t, t)))
                        .map(|_| i)
                });
                match bad {
                    None => break,
                    Some(i) => {
                        let one = BigInt::from(1);
                        d.add_row_multiple(t, i, &one);
                        left.add_row_multiple(t, i, &one);
                        continue;
                    }
                }
            }
            // remainders appeared: move the smallest entry of row/column t to the pivot
            let mut best = (t, t);
            for i in t..m {
                let v = d.get(i, t);
                if !v.is_zero() && v.abs() < d.get(best.0, best.1).abs() {
                    best = (i, t);
                }
            }
            for j in t..n {
                let v = d.get(t, j);
                if !v.is_zero() && v.abs() < d.get(best.0, best.1).abs() {
                    best = (t, j);
                }
            }
            d.swap_rows(t, best.0);
            left.swap_rows(t, best.0);
            d.swap_cols(t, best.1);
            right.swap_cols(t, best.1);
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            left.negate_row(t);
        }
    }
    let diag = (0..steps).map(|i| d.get(i, i).clone()).collect();
    SmithForm { diag, left, right }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn certify(a: &IntMatrix) -> SmithForm {
        let s = smith_normal_form(a);
        let lar = s.left.mul(a).unwrap().mul(&s.right).unwrap();
        assert_eq!(lar, s.diagonal_matrix());
        assert!(s.left.is_unimodular() && s.right.is_unimodular());
        s
    }

    #[test]
    fn diag_two_three() {
        let s = certify(&IntMatrix::from_i64(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.diag, ints(&[1, 6]));
    }

    #[test]
    fn zero_and_identity() {
        assert_eq!(certify(&IntMatrix::zeros(2, 3)).diag, ints(&[0, 0]));
        assert_eq!(certify(&IntMatrix::identity(4)).diag, ints(&[1, 1, 1, 1]));
    }

    #[test]
    fn divisibility_fix_up() {
        let s = certify(&IntMatrix::from_i64(&[&[4, 0, 0], &[0, 6, 0], &[0, 0, 10]]));
        assert_eq!(s.diag, ints(&[2, 2, 60]));
        let s = certify(&IntMatrix::from_i64(&[
            &[2, 4, 4],
            &[-6, 6, 12],
            &[10, -4, -16],
        ]));
        assert_eq!(s.diag, ints(&[2, 6, 12]));
    }
}
