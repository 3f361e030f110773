use num_traits::Zero;

use super::Rational;
use crate::{Error, Result};

/// Solves the square system `matrix · x = rhs` by exact Gauss-Jordan
/// elimination.
pub fn solve(mut matrix: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> Result<Vec<Rational>> {
    let n = rhs.len();
    if matrix.len() != n || matrix.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidParameter("system is not square".into()));
    }
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !matrix[r][col].is_zero())
            .ok_or(Error::Singular)?;
        matrix.swap(col, pivot);
        rhs.swap(col, pivot);
        let inv = matrix[col][col].recip();
        for entry in matrix[col].iter_mut() {
            *entry *= &inv;
        }
        rhs[col] *= &inv;
        for r in 0..n {
            if r == col || matrix[r][col].is_zero() {
                continue;
            }
            let factor = matrix[r][col].clone();
            for c in col..n {
                let delta = &factor * &matrix[col][c];
                matrix[r][c] -= delta;
            }
            let delta = &factor * &rhs[col];
            rhs[r] -= delta;
        }
    }
    Ok(rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, rat};

    #[test]
    fn small_system() {
        let m = vec![vec![rat(2), rat(1)], vec![rat(1), rat(3)]];
        let x = solve(m, vec![rat(3), rat(5)]).unwrap();
        assert_eq!(x, vec![frac(4, 5), frac(7, 5)]);
    }

    #[test]
    fn singular_system() {
        let m = vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)]];
        assert_eq!(solve(m, vec![rat(1), rat(1)]), Err(Error::Singular));
    }
}
