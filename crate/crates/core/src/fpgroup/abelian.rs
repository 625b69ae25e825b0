//! Integer linear algebra on relator exponent matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Nonzero Smith invariants `d_1 | d_2 | ...` of an integer matrix, positive.
pub fn smith_invariants(rows: &[Vec<i64>]) -> Vec<BigInt> {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        // pivot: smallest nonzero absolute value in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..nrows {
            for j in t..ncols {
                if !m[i][j].is_zero()
                    && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        let mut clean = true;
        for i in (t + 1)..nrows {
            if m[i][t].is_zero() {
                continue;
            }
            let q = m[i][t].div_floor(&m[t][t]);
            for j in t..ncols {
                let v = &m[t][j] * &q;
                m[i][j] -= v;
            }
            if !m[i][t].is_zero() {
                clean = false;
            }
        }
        for j in (t + 1)..ncols {
            if m[t][j].is_zero() {
                continue;
            }
            let q = m[t][j].div_floor(&m[t][t]);
            for i in t..nrows {
                let v = &m[i][t] * &q;
                m[i][j] -= v;
            }
            if !m[t][j].is_zero() {
                clean = false;
            }
        }
        if clean {
            diag.push(m[t][t].abs());
            t += 1;
        }
    }
    // enforce the divisibility chain
    for i in 0..diag.len() {
        for j in (i + 1)..diag.len() {
            let g = diag[i].gcd(&diag[j]);
            let l = diag[i].lcm(&diag[j]);
            diag[i] = g;
            diag[j] = l;
        }
    }
    diag
}

/// Basis of the rational null space `{v : M v = 0}`, scaled to primitive
/// integer vectors with positive leading entry.
pub fn integer_kernel(rows: &[Vec<i64>], ncols: usize) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = BigRational::one() / m[r][c].clone();
        for j in 0..ncols {
            m[r][j] = &m[r][j] * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..ncols {
                    let v = &m[r][j] * &f;
                    m[i][j] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); ncols];
            v[f] = BigRational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[row][f].clone();
            }
            let denom = v
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            let ints: Vec<BigInt> = v.iter().map(|x| (x * &denom).to_integer()).collect();
            let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            let sign = ints
                .iter()
                .find(|x| !x.is_zero())
                .map_or(BigInt::one(), |x| x.signum());
            ints.iter()
                .map(|x| {
                    let y: BigInt = x / &g * &sign;
                    i64::try_from(y).expect("kernel entry fits in i64")
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smith_of_diagonalizable() {
        let inv = smith_invariants(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(inv, vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn smith_rank_deficient() {
        let inv = smith_invariants(&[vec![1, -1, 0], vec![0, 1, -1]]);
        assert_eq!(inv, vec![BigInt::from(1), BigInt::from(1)]);
    }

    #[test]
    fn kernel_of_wirtinger_exponents() {
        let k = integer_kernel(&[vec![1, -1, 0], vec![0, 1, -1]], 3);
        assert_eq!(k, vec![vec![1, 1, 1]]);
    }
}
