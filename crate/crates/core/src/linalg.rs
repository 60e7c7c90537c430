//! Dense exact linear algebra over Q.

use crate::rat::Rat;

/// Row echelon form in place; returns the pivot column of each nonzero row.
/// Rows are fully reduced (reduced row echelon form, pivots equal to 1).
pub fn rref(rows: &mut Vec<Vec<Rat>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        if !inv.is_one() {
            for x in rows[r].iter_mut().skip(c) {
                *x = &*x * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !y.is_zero() {
                    x.sub_mul(&factor, y);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Basis of `{c : c A = 0}`, where `A` has the given rows of width `ncols`.
pub fn left_kernel(rows: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let n = rows.len();
    let mut aug: Vec<Vec<Rat>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut v = r.clone();
            v.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            v
        })
        .collect();
    let pivots = rref(&mut aug);
    aug.into_iter()
        .zip(pivots)
        .filter(|&(_, c)| c >= ncols)
        .map(|(r, _)| r[ncols..].to_vec())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(v: &[&[i64]]) -> Vec<Vec<Rat>> {
        v.iter().map(|r| r.iter().map(|&x| Rat::from_int(x)).collect()).collect()
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&mat(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&mat(&[&[0, 1, 0], &[1, 0, 0], &[1, 1, 0]])), 2);
        assert_eq!(rank(&mat(&[])), 0);
        assert_eq!(rank(&mat(&[&[2, 0, 1], &[0, 3, 1], &[1, 1, 5]])), 3);
    }

    #[test]
    fn rref_is_reduced() {
        let mut m = mat(&[&[2, 4, 6], &[1, 3, 5]]);
        let piv = rref(&mut m);
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(m, mat(&[&[1, 0, -1], &[0, 1, 2]]));
    }

    #[test]
    fn kernel() {
        let a = mat(&[&[1, 2], &[2, 4], &[0, 1]]);
        let k = left_kernel(&a, 2);
        assert_eq!(k.len(), 1);
        let combo: Vec<Rat> = (0..2)
            .map(|c| (0..3).fold(Rat::zero(), |acc, i| &acc + &(&k[0][i] * &a[i][c])))
            .collect();
        assert!(combo.iter().all(Rat::is_zero));
        assert!(left_kernel(&mat(&[&[1, 0], &[0, 1]]), 2).is_empty());
    }
}
