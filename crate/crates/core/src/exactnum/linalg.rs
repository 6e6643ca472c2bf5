//! Exact linear algebra over ℚ and ℤ.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Rank over ℚ by fraction-exact Gaussian elimination.
pub fn rational_rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let ncols = m.iter().map(Vec::len).max().unwrap_or(0);
    for row in &mut m {
        row.resize(ncols, BigRational::zero());
    }
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let factor = &m[r][col] / &pivot;
                for c in col..ncols {
                    let delta = &factor * &m[rank][c];
                    m[r][c] -= delta;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Rank of integer vectors over ℚ.
pub fn integer_rank(rows: &[Vec<i64>]) -> usize {
    let q: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    rational_rank(&q)
}

/// Finds an integral `x` with `A·x = b`, or `None` when no integral
/// solution exists.
///
/// Column-style Hermite reduction: unimodular column operations bring `A`
/// to lower echelon form `H = A·U`, then `H·y = b` is solved by forward
/// substitution with exact divisibility checks and `x = U·y`.
pub fn integer_solve(a: &[Vec<BigInt>], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let m = a.len();
    assert_eq!(m, b.len(), "row count of A must match length of b");
    let n = a.first().map(Vec::len).unwrap_or(0);
    assert!(a.iter().all(|r| r.len() == n), "ragged matrix");
    if n == 0 {
        return b.iter().all(Zero::is_zero).then(Vec::new);
    }

    let mut h: Vec<Vec<BigInt>> = a.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();

    // pivot_of_row[r] = Some(column) when row r owns a pivot.
    let mut pivot_of_row: Vec<Option<usize>> = vec![None; m];
    let mut p = 0;
    for r in 0..m {
        if p == n {
            break;
        }
        for j in (p + 1)..n {
            if h[r][j].is_zero() {
                continue;
            }
            let (x, y) = (h[r][p].clone(), h[r][j].clone());
            let eg = x.extended_gcd(&y);
            let g = eg.gcd;
            // [c_p, c_j] <- [c_p, c_j] * [[s, -y/g], [t, x/g]], determinant 1.
            let (s, t) = (eg.x, eg.y);
            let yg = &y / &g;
            let xg = &x / &g;
            column_combine(&mut h, p, j, &s, &t, &yg, &xg);
            column_combine(&mut u, p, j, &s, &t, &yg, &xg);
        }
        if !h[r][p].is_zero() {
            if h[r][p].is_negative() {
                for row in h.iter_mut().chain(u.iter_mut()) {
                    row[p] = -&row[p];
                }
            }
            pivot_of_row[r] = Some(p);
            p += 1;
        }
    }

    let mut y = vec![BigInt::zero(); n];
    for r in 0..m {
        let mut residual = b[r].clone();
        let limit = pivot_of_row[r].unwrap_or(p.min(n));
        for k in 0..limit {
            if !h[r][k].is_zero() {
                residual -= &h[r][k] * &y[k];
            }
        }
        match pivot_of_row[r] {
            Some(col) => {
                let (quot, rem) = residual.div_rem(&h[r][col]);
                if !rem.is_zero() {
                    return None;
                }
                y[col] = quot;
            }
            None => {
                // Entries past the last pivot are zero in this row.
                if !residual.is_zero() {
                    return None;
                }
            }
        }
    }

    let x: Vec<BigInt> = (0..n)
        .map(|i| (0..n).fold(BigInt::zero(), |acc, k| acc + &u[i][k] * &y[k]))
        .collect();
    debug_assert!(mat_vec(a, &x) == b);
    Some(x)
}

fn column_combine(
    m: &mut [Vec<BigInt>],
    p: usize,
    j: usize,
    s: &BigInt,
    t: &BigInt,
    yg: &BigInt,
    xg: &BigInt,
) {
    for row in m.iter_mut() {
        let cp = row[p].clone();
        let cj = row[j].clone();
        row[p] = &cp * s + &cj * t;
        row[j] = -(&cp * yg) + &cj * xg;
    }
}

pub fn mat_vec(a: &[Vec<BigInt>], x: &[BigInt]) -> Vec<BigInt> {
    a.iter()
        .map(|row| row.iter().zip(x).fold(BigInt::zero(), |acc, (r, v)| acc + r * v))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn vec_(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn identity_system() {
        let x = integer_solve(&mat(&[&[1, 0], &[0, 1]]), &vec_(&[3, -5])).unwrap();
        assert_eq!(x, vec_(&[3, -5]));
    }

    #[test]
    fn parity_obstruction() {
        assert_eq!(integer_solve(&mat(&[&[2, 0], &[0, 2]]), &vec_(&[1, 0])), None);
    }

    #[test]
    fn sum_difference_system() {
        // Found by brute force over [-3, 3]^2: the unique solution is (1, 1).
        let x = integer_solve(&mat(&[&[1, 1], &[1, -1]]), &vec_(&[2, 0])).unwrap();
        assert_eq!(x, vec_(&[1, 1]));
        // (1, 0) would need x1 + x2 = 1 and x1 - x2 = 0: no integral solution.
        assert_eq!(integer_solve(&mat(&[&[1, 1], &[1, -1]]), &vec_(&[1, 0])), None);
    }

    #[test]
    fn underdetermined_and_inconsistent() {
        let a = mat(&[&[2, 3, 4]]);
        let x = integer_solve(&a, &vec_(&[1])).unwrap();
        assert_eq!(mat_vec(&a, &x), vec_(&[1]));
        let a = mat(&[&[1, 2], &[2, 4]]);
        assert_eq!(integer_solve(&a, &vec_(&[1, 3])), None);
        let x = integer_solve(&a, &vec_(&[3, 6])).unwrap();
        assert_eq!(mat_vec(&a, &x), vec_(&[3, 6]));
    }

    #[test]
    fn zero_columns() {
        let a: Vec<Vec<BigInt>> = vec![vec![], vec![]];
        assert_eq!(integer_solve(&a, &vec_(&[0, 0])), Some(vec![]));
        assert_eq!(integer_solve(&a, &vec_(&[0, 1])), None);
    }

    #[test]
    fn ranks() {
        assert_eq!(integer_rank(&[vec![1, 1, 0], vec![2, 2, 0]]), 1);
        assert_eq!(integer_rank(&[vec![1, 1, 0, 0], vec![1, -1, 0, 0], vec![0, 0, 1, 1]]), 3);
        assert_eq!(integer_rank(&[]), 0);
    }
}
