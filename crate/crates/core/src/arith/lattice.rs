use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Int;

/// A Z-basis of the kernel of the integer matrix `rows` (given row-major,
/// every row of length `ncols`), viewed as a map `Z^ncols -> Z^nrows`.
///
/// Unimodular column operations bring the matrix to column echelon form;
/// the transformed unit vectors sitting over zero columns span the kernel.
pub fn integer_kernel(rows: &[Vec<Int>], ncols: usize) -> Vec<Vec<Int>> {
    let mut a: Vec<Vec<Int>> = rows.to_vec();
    let mut u: Vec<Vec<Int>> = (0..ncols)
        .map(|i| (0..ncols).map(|j| if i == j { Int::one() } else { Int::zero() }).collect())
        .collect();
    // column operations act on a[r][c] and u[*][c]
    let col_axpy = |a: &mut Vec<Vec<Int>>, u: &mut Vec<Vec<Int>>, dst: usize, src: usize, k: &Int| {
        for row in a.iter_mut() {
            let v = &row[src] * k;
            row[dst] -= v;
        }
        for row in u.iter_mut() {
            let v = &row[src] * k;
            row[dst] -= v;
        }
    };
    let col_swap = |a: &mut Vec<Vec<Int>>, u: &mut Vec<Vec<Int>>, x: usize, y: usize| {
        for row in a.iter_mut() {
            row.swap(x, y);
        }
        for row in u.iter_mut() {
            row.swap(x, y);
        }
    };

    let mut pivot = 0;
    for r in 0..a.len() {
        if pivot == ncols {
            break;
        }
        loop {
            // smallest nonzero |entry| in row r among columns >= pivot
            let best = (pivot..ncols)
                .filter(|&c| !a[r][c].is_zero())
                .min_by(|&x, &y| a[r][x].abs().cmp(&a[r][y].abs()));
            let Some(best) = best else { break };
            col_swap(&mut a, &mut u, pivot, best);
            let mut done = true;
            for c in pivot + 1..ncols {
                if a[r][c].is_zero() {
                    continue;
                }
                let q = a[r][c].div_floor(&a[r][pivot]);
                col_axpy(&mut a, &mut u, c, pivot, &q);
                if !a[r][c].is_zero() {
                    done = false;
                }
            }
            if done {
                pivot += 1;
                break;
            }
        }
    }
    (pivot..ncols)
        .map(|c| (0..ncols).map(|i| u[i][c].clone()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn apply(rows: &[Vec<Int>], v: &[Int]) -> Vec<Int> {
        rows.iter()
            .map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    #[test]
    fn kernel_of_small_matrices() {
        let rows = vec![vec![int(2), int(4), int(6)]];
        let k = integer_kernel(&rows, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(apply(&rows, v).iter().all(Zero::is_zero));
        }
        // the zero map has the full lattice as kernel
        assert_eq!(integer_kernel(&[], 2).len(), 2);
        // an injective map has trivial kernel
        let inj = vec![vec![int(1), int(0)], vec![int(0), int(3)]];
        assert!(integer_kernel(&inj, 2).is_empty());
    }
}
