//! Dense linear algebra over a finite field on row-major `Vec<u64>`.

use super::field::FiniteField;

/// Determinant by Gaussian elimination; consumes the matrix.
pub(crate) fn det(f: &FiniteField, mut m: Vec<u64>, n: usize) -> u64 {
    let mut d = 1u64;
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| m[i * n + k] != 0) else {
            return 0;
        };
        if piv != k {
            for j in 0..n {
                m.swap(k * n + j, piv * n + j);
            }
            d = f.neg(d);
        }
        let pk = m[k * n + k];
        d = f.mul(d, pk);
        let inv = f.inv(pk);
        for i in k + 1..n {
            let u = f.mul(m[i * n + k], inv);
            if u == 0 {
                continue;
            }
            for j in k + 1..n {
                let v = f.mul(u, m[k * n + j]);
                m[i * n + j] = f.sub(m[i * n + j], v);
            }
        }
    }
    d
}

/// `(det C, C^-1 B)`, or `None` when `C` is singular.
fn solve(f: &FiniteField, mut c: Vec<u64>, mut b: Vec<u64>, n: usize) -> Option<(u64, Vec<u64>)> {
    let mut d = 1u64;
    for k in 0..n {
        let piv = (k..n).find(|&i| c[i * n + k] != 0)?;
        if piv != k {
            for j in 0..n {
                c.swap(k * n + j, piv * n + j);
                b.swap(k * n + j, piv * n + j);
            }
            d = f.neg(d);
        }
        let pk = c[k * n + k];
        d = f.mul(d, pk);
        let inv = f.inv(pk);
        for j in k..n {
            c[k * n + j] = f.mul(c[k * n + j], inv);
        }
        for j in 0..n {
            b[k * n + j] = f.mul(b[k * n + j], inv);
        }
        for i in 0..n {
            if i == k {
                continue;
            }
            let u = c[i * n + k];
            if u == 0 {
                continue;
            }
            for j in k..n {
                let v = f.mul(u, c[k * n + j]);
                c[i * n + j] = f.sub(c[i * n + j], v);
            }
            for j in 0..n {
                let v = f.mul(u, b[k * n + j]);
                b[i * n + j] = f.sub(b[i * n + j], v);
            }
        }
    }
    Some((d, b))
}

/// Characteristic polynomial `det(xI - M)`, constant term first, via
/// reduction to upper Hessenberg form.
pub(crate) fn charpoly(f: &FiniteField, mut h: Vec<u64>, n: usize) -> Vec<u64> {
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| h[i * n + j] != 0) else {
            continue;
        };
        if piv != j + 1 {
            for c in 0..n {
                h.swap(piv * n + c, (j + 1) * n + c);
            }
            for r in 0..n {
                h.swap(r * n + piv, r * n + j + 1);
            }
        }
        let inv = f.inv(h[(j + 1) * n + j]);
        for i in j + 2..n {
            let u = f.mul(h[i * n + j], inv);
            if u == 0 {
                continue;
            }
            for c in 0..n {
                let v = f.mul(u, h[(j + 1) * n + c]);
                h[i * n + c] = f.sub(h[i * n + c], v);
            }
            for r in 0..n {
                let v = f.mul(u, h[r * n + i]);
                h[r * n + j + 1] = f.add(h[r * n + j + 1], v);
            }
        }
    }
    // p[m] is the characteristic polynomial of the leading m x m block.
    let at = |r: usize, c: usize| h[r * n + c];
    let mut p: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        let hm = at(m - 1, m - 1);
        let prev = &p[m - 1];
        let mut next = vec![0u64; m + 1];
        for (i, &c) in prev.iter().enumerate() {
            next[i + 1] = f.add(next[i + 1], c);
            next[i] = f.sub(next[i], f.mul(hm, c));
        }
        let mut t = 1u64;
        for i in 1..m {
            t = f.mul(t, at(m - i, m - i - 1));
            if t == 0 {
                break;
            }
            let coef = f.mul(t, at(m - i - 1, m - 1));
            if coef == 0 {
                continue;
            }
            for (e, &c) in p[m - i - 1].iter().enumerate() {
                next[e] = f.sub(next[e], f.mul(coef, c));
            }
        }
        p.push(next);
    }
    p.pop().unwrap()
}

/// `det(A + tB)` as coefficients (constant first, length `n + 1`). Returns
/// `None` when every shift `A + sB` with `s` in the field is singular but the
/// field has too few elements to conclude the determinant vanishes.
pub(crate) fn pencil_det(f: &FiniteField, a: &[u64], b: &[u64], n: usize) -> Option<Vec<u64>> {
    if n == 0 {
        return Some(vec![1]);
    }
    let tries = f.order().min(n as u64 + 1);
    for s in 0..tries {
        let c: Vec<u64> = a.iter().zip(b).map(|(&x, &y)| f.add(x, f.mul(s, y))).collect();
        let Some((det_c, m)) = solve(f, c, b.to_vec(), n) else {
            continue;
        };
        // det(A + tB) = det C * det(I + (t - s) M), and with chi(v) = det(vI + M)
        // det(I + uM) = sum_i chi_i u^(n - i).
        let neg_m: Vec<u64> = m.into_iter().map(|x| f.neg(x)).collect();
        let chi = charpoly(f, neg_m, n);
        let mut out = vec![0u64];
        for i in 0..=n {
            // out = out * (t - s) + chi[i]
            let mut next = vec![0u64; out.len() + 1];
            for (e, &c) in out.iter().enumerate() {
                next[e + 1] = f.add(next[e + 1], c);
                next[e] = f.sub(next[e], f.mul(s, c));
            }
            next[0] = f.add(next[0], chi[i]);
            out = next;
        }
        out.truncate(n + 1);
        return Some(out.into_iter().map(|c| f.mul(c, det_c)).collect());
    }
    (tries == n as u64 + 1).then(|| vec![0u64; n + 1])
}

/// Coefficients (constant first) of the unique polynomial of degree
/// `< xs.len()` through the given points. `xs` must be distinct.
pub(crate) fn interpolate(f: &FiniteField, xs: &[u64], ys: &[u64]) -> Vec<u64> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = f.sub(dd[i], dd[i - 1]);
            let den = f.sub(xs[i], xs[i - level]);
            dd[i] = f.mul(num, f.inv(den));
        }
    }
    let mut coeffs = vec![0u64; n];
    for i in (0..n).rev() {
        // coeffs = coeffs * (t - xs[i]) + dd[i]
        for e in (1..n).rev() {
            coeffs[e] = f.sub(coeffs[e - 1], f.mul(xs[i], coeffs[e]));
        }
        coeffs[0] = f.sub(dd[i], f.mul(xs[i], coeffs[0]));
    }
    coeffs
}

/// Horner evaluation of a dense polynomial.
#[inline]
pub(crate) fn eval(f: &FiniteField, poly: &[u64], x: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_of_companion() {
        let f = FiniteField::prime(101).unwrap();
        // companion matrix of x^3 - 2x^2 + 5x - 7
        let m = vec![0, 0, 7, 1, 0, f.neg(5), 0, 1, 2];
        assert_eq!(charpoly(&f, m, 3), vec![f.neg(7), 5, f.neg(2), 1]);
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let f = FiniteField::prime(53).unwrap();
        let poly = vec![3, 0, 52, 7, 1];
        let xs: Vec<u64> = (0..5).collect();
        let ys: Vec<u64> = xs.iter().map(|&x| eval(&f, &poly, x)).collect();
        assert_eq!(interpolate(&f, &xs, &ys), poly);
    }

    #[test]
    fn pencil_two_by_two() {
        let f = FiniteField::prime(7).unwrap();
        // [[t, 1], [1, t]] -> t^2 - 1
        let a = vec![0, 1, 1, 0];
        let b = vec![1, 0, 0, 1];
        assert_eq!(pencil_det(&f, &a, &b, 2).unwrap(), vec![6, 0, 1]);
    }

    #[test]
    fn singular_pencil() {
        let f = FiniteField::prime(7).unwrap();
        let a = vec![1, 1, 1, 1];
        let b = vec![2, 2, 2, 2];
        assert_eq!(pencil_det(&f, &a, &b, 2).unwrap(), vec![0, 0, 0]);
        let f2 = FiniteField::prime(2).unwrap();
        // t(t + 1) vanishes on all of F_2
        let a = vec![0, 0, 0, 1];
        let b = vec![1, 0, 0, 1];
        assert!(pencil_det(&f2, &a, &b, 2).is_none());
    }
}
