use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use super::dense;
use super::field::{extend_field, is_prime, FiniteField};
use super::poly::{dense_field_div_rem, LaurentPoly, Ring};
use crate::error::{Error, Result};

/// Matrices up to this size use fraction-free elimination over `Z`; larger
/// ones go through the multimodular path.
const BAREISS_LIMIT: usize = 8;

/// Default cap on the number of minors enumerated by `gcd_of_minors` over `Z`.
pub const DEFAULT_MINOR_CAP: u64 = 200_000;

/// A dense rectangular matrix of Laurent polynomials over one ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn zeros(ring: &Ring, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![LaurentPoly::zero(ring); rows * cols],
        }
    }

    pub fn identity(ring: &Ring, n: usize) -> Self {
        let mut m = PolyMatrix::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, LaurentPoly::one(ring));
        }
        m
    }

    pub fn from_rows(ring: &Ring, rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(r * c);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != c {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {c}",
                    row.len()
                )));
            }
            for p in row {
                if p.ring() != ring {
                    return Err(Error::WrongRing(format!("entry over {} in a {ring} matrix", p.ring())));
                }
                entries.push(p);
            }
        }
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows: r,
            cols: c,
            entries,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: LaurentPoly) {
        assert_eq!(p.ring(), &self.ring, "entry ring mismatch");
        self.entries[i * self.cols + j] = p;
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix {
            ring: self.ring.clone(),
            rows: rows.len(),
            cols: cols.len(),
            entries,
        }
    }

    /// Drop the columns in `range`.
    pub fn without_cols(&self, range: std::ops::Range<usize>) -> Self {
        let keep: Vec<usize> = (0..self.cols).filter(|j| !range.contains(j)).collect();
        let rows: Vec<usize> = (0..self.rows).collect();
        self.submatrix(&rows, &keep)
    }

    pub fn transpose(&self) -> Self {
        let mut out = PolyMatrix::zeros(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = PolyMatrix::zeros(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = LaurentPoly::zero(&self.ring);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b));
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn to_ring(&self, ring: &Ring) -> Result<Self> {
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|p| p.to_ring(ring))
                .collect::<Result<_>>()?,
        })
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )))
        }
    }

    /// Multiply each row by a power of `t` so every exponent is nonnegative
    /// and each nonzero row has an entry with a constant term. Returns the
    /// total exponent removed and the per-row degree bounds, or `None` if a
    /// row is zero.
    fn row_shifts(&self) -> Option<(Vec<i64>, Vec<i64>)> {
        let mut shifts = Vec::with_capacity(self.rows);
        let mut degs = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let row = &self.entries[i * self.cols..(i + 1) * self.cols];
            let lo = row.iter().filter_map(LaurentPoly::min_exp).min()?;
            let hi = row.iter().filter_map(LaurentPoly::max_exp).max()?;
            shifts.push(lo);
            degs.push(hi - lo);
        }
        Some((shifts, degs))
    }

    /// Exact determinant.
    ///
    /// Over a field: if every row is linear in `t` after shifting, the
    /// pencil `A + tB` is reduced to a characteristic polynomial; otherwise
    /// evaluation–interpolation, in an extension field if the base field has
    /// too few points, falling back to fraction-free elimination. Over `Z`:
    /// fraction-free elimination for small matrices, otherwise a
    /// multimodular computation with Chinese remaindering.
    pub fn det(&self) -> Result<LaurentPoly> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(LaurentPoly::one(&self.ring));
        }
        let Some((shifts, degs)) = self.row_shifts() else {
            return Ok(LaurentPoly::zero(&self.ring));
        };
        let total: i64 = shifts.iter().sum();
        match &self.ring {
            Ring::Fq(f) => {
                let dense = self.dense_field(&shifts);
                if let Some(c) = det_dense_field(f, &dense, &degs, n)? {
                    return Ok(LaurentPoly::from_dense_field(&self.ring, total, &c));
                }
                self.det_fraction_free()
            }
            Ring::Z => {
                if n <= BAREISS_LIMIT {
                    self.det_fraction_free()
                } else {
                    self.det_multimodular(&shifts, &degs, total)
                }
            }
        }
    }

    /// Entries as dense encodings after the row shifts.
    fn dense_field(&self, shifts: &[i64]) -> Vec<Vec<u64>> {
        let mut out = Vec::with_capacity(self.entries.len());
        for i in 0..self.rows {
            for j in 0..self.cols {
                let p = self.get(i, j);
                if p.is_zero() {
                    out.push(Vec::new());
                    continue;
                }
                let (lo, v) = p.to_dense_field();
                let mut padded = vec![0u64; (lo - shifts[i]) as usize];
                padded.extend(v);
                out.push(padded);
            }
        }
        out
    }

    /// Fraction-free (Bareiss) elimination in the Laurent ring.
    pub fn det_fraction_free(&self) -> Result<LaurentPoly> {
        self.require_square()?;
        let n = self.rows;
        let mut m = self.entries.clone();
        let mut negate = false;
        let mut prev = LaurentPoly::one(&self.ring);
        for k in 0..n.saturating_sub(1) {
            if m[k * n + k].is_zero() {
                let Some(piv) = (k + 1..n).find(|&i| !m[i * n + k].is_zero()) else {
                    return Ok(LaurentPoly::zero(&self.ring));
                };
                for j in 0..n {
                    m.swap(k * n + j, piv * n + j);
                }
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[i * n + j]
                        .mul(&m[k * n + k])
                        .sub(&m[i * n + k].mul(&m[k * n + j]));
                    m[i * n + j] = num
                        .divide_exact(&prev)
                        .expect("Bareiss quotients are exact");
                }
            }
            prev = m[k * n + k].clone();
        }
        let d = m[n * n - 1].clone();
        Ok(if negate { d.neg() } else { d })
    }

    fn det_multimodular(&self, shifts: &[i64], degs: &[i64], total: i64) -> Result<LaurentPoly> {
        let n = self.rows;
        // Every coefficient of the determinant is bounded by the product of
        // the row sums of coefficient l1 norms.
        let mut bound = BigInt::one();
        for i in 0..n {
            let row: BigInt = (0..n)
                .flat_map(|j| self.get(i, j).terms().map(|(_, c)| c.abs()))
                .sum();
            bound *= row;
        }
        let target = bound * 2;
        let mut modulus = BigInt::one();
        let mut acc: Vec<BigInt> = Vec::new();
        let mut p: u64 = (1 << 31) - 1;
        while modulus <= target {
            while !is_prime(p) {
                p -= 2;
            }
            let f = FiniteField::prime(p)?;
            let pb = BigInt::from(p);
            let mut dense = Vec::with_capacity(n * n);
            for i in 0..n {
                for j in 0..n {
                    let e = self.get(i, j);
                    if e.is_zero() {
                        dense.push(Vec::new());
                        continue;
                    }
                    let (lo, v) = e.to_dense();
                    let mut padded = vec![0u64; (lo - shifts[i]) as usize];
                    padded.extend(v.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()));
                    dense.push(padded);
                }
            }
            let c = det_dense_field(&f, &dense, degs, n)?
                .expect("large primes have enough interpolation points");
            acc = crt_combine(&acc, &modulus, &c, p);
            modulus *= &pb;
            p -= 2;
        }
        let half = &modulus / 2;
        let symmetric = acc
            .into_iter()
            .map(|c| if c > half { c - &modulus } else { c })
            .collect();
        Ok(LaurentPoly::from_dense(&Ring::Z, total, symmetric))
    }

    /// gcd of all `s x s` minors, unit-normalized. `s = 0` gives 1; the
    /// result is 0 when every minor vanishes.
    pub fn gcd_of_minors(&self, s: usize) -> Result<LaurentPoly> {
        self.gcd_of_minors_with_cap(s, DEFAULT_MINOR_CAP)
    }

    /// As [`gcd_of_minors`](Self::gcd_of_minors). Over `Z` the minors are
    /// enumerated, stopping early once the running gcd is a unit, and
    /// `cap` bounds how many may be computed. Over a field the Smith form
    /// over `F[t]` is used and `cap` is ignored.
    pub fn gcd_of_minors_with_cap(&self, s: usize, cap: u64) -> Result<LaurentPoly> {
        if s > self.rows.min(self.cols) {
            return Err(Error::Precondition(format!(
                "{s}x{s} minors of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        if s == 0 {
            return Ok(LaurentPoly::one(&self.ring));
        }
        match &self.ring {
            Ring::Fq(f) => Ok(self.determinantal_divisor_field(f, s)),
            Ring::Z => self.gcd_of_minors_enumerated(s, cap),
        }
    }

    fn gcd_of_minors_enumerated(&self, s: usize, cap: u64) -> Result<LaurentPoly> {
        let mut g = LaurentPoly::zero(&self.ring);
        let mut count = 0u64;
        let mut rows: Vec<usize> = (0..s).collect();
        loop {
            let mut cols: Vec<usize> = (0..s).collect();
            loop {
                count += 1;
                if count > cap {
                    return Err(Error::ResourceCap(format!(
                        "more than {cap} minors of size {s} needed"
                    )));
                }
                let d = self.submatrix(&rows, &cols).det()?;
                if !d.is_zero() {
                    g = g.gcd(&d);
                    if g.is_one() {
                        return Ok(g);
                    }
                }
                if !next_combination(&mut cols, self.cols) {
                    break;
                }
            }
            if !next_combination(&mut rows, self.rows) {
                break;
            }
        }
        Ok(g.normalize())
    }

    /// Product of the first `s` invariant factors of the Smith form over
    /// `F[t]`, computed on the row-shifted matrix.
    fn determinantal_divisor_field(&self, f: &FiniteField, s: usize) -> LaurentPoly {
        let (r, c) = (self.rows, self.cols);
        let mut m: Vec<Vec<u64>> = Vec::with_capacity(r * c);
        for i in 0..r {
            let lo = (0..c).filter_map(|j| self.get(i, j).min_exp()).min().unwrap_or(0);
            for j in 0..c {
                let p = self.get(i, j);
                if p.is_zero() {
                    m.push(Vec::new());
                } else {
                    let (plo, v) = p.to_dense_field();
                    let mut padded = vec![0u64; (plo - lo) as usize];
                    padded.extend(v);
                    m.push(padded);
                }
            }
        }
        let diag = smith_diagonal(f, m, r, c, s);
        let mut out = LaurentPoly::one(&self.ring);
        for d in diag {
            if d.is_empty() {
                return LaurentPoly::zero(&self.ring);
            }
            out = out.mul(&LaurentPoly::from_dense_field(&self.ring, 0, &d));
        }
        out.normalize()
    }
}

/// Determinant of a square matrix of dense polynomials over `f`. `None`
/// when neither the pencil method nor interpolation applies and the field
/// cannot be extended.
fn det_dense_field(
    f: &FiniteField,
    dense: &[Vec<u64>],
    degs: &[i64],
    n: usize,
) -> Result<Option<Vec<u64>>> {
    if degs.iter().all(|&d| d <= 1) {
        let coeff = |e: usize| -> Vec<u64> {
            dense.iter().map(|p| p.get(e).copied().unwrap_or(0)).collect()
        };
        if let Some(c) = dense::pencil_det(f, &coeff(0), &coeff(1), n) {
            return Ok(Some(c));
        }
    }
    let bound: u64 = degs.iter().map(|&d| d as u64).sum();
    let field = if f.order() > bound {
        f.clone()
    } else if f.degree() == 1 {
        match extend_field(f.characteristic(), bound) {
            Ok(e) => e,
            Err(Error::ResourceCap(_)) => return Ok(None),
            Err(e) => return Err(e),
        }
    } else {
        return Ok(None);
    };
    let xs: Vec<u64> = (0..=bound).collect();
    let ys: Vec<u64> = xs
        .iter()
        .map(|&x| {
            let m = dense.iter().map(|p| dense::eval(&field, p, x)).collect();
            dense::det(&field, m, n)
        })
        .collect();
    let c = dense::interpolate(&field, &xs, &ys);
    if field.degree() != f.degree() && c.iter().any(|&v| !field.in_prime_field(v)) {
        return Err(Error::Degenerate(
            "interpolated determinant left the prime field".into(),
        ));
    }
    Ok(Some(c))
}

/// Fold residues mod `p` into residues mod `modulus * p`.
fn crt_combine(acc: &[BigInt], modulus: &BigInt, residues: &[u64], p: u64) -> Vec<BigInt> {
    let pb = BigInt::from(p);
    let len = acc.len().max(residues.len());
    let m_mod_p = modulus.mod_floor(&pb).to_u64().unwrap();
    let f = FiniteField::prime(p).expect("p is prime");
    let inv = f.inv(m_mod_p);
    (0..len)
        .map(|i| {
            let a = acc.get(i).cloned().unwrap_or_default();
            let r = residues.get(i).copied().unwrap_or(0);
            let a_mod = a.mod_floor(&pb).to_u64().unwrap();
            let k = f.mul(f.sub(r, a_mod), inv);
            a + modulus * BigInt::from(k)
        })
        .collect()
}

fn next_combination(v: &mut [usize], n: usize) -> bool {
    let k = v.len();
    for i in (0..k).rev() {
        if v[i] < n - k + i {
            v[i] += 1;
            for j in i + 1..k {
                v[j] = v[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn poly_degree(p: &[u64]) -> usize {
    p.len().saturating_sub(1)
}

fn poly_sub_mul(f: &FiniteField, a: &[u64], q: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = a.to_vec();
    if q.is_empty() || b.is_empty() {
        return out;
    }
    let need = q.len() + b.len() - 1;
    if out.len() < need {
        out.resize(need, 0);
    }
    for (i, &x) in q.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.sub(out[i + j], f.mul(x, y));
        }
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn poly_add(f: &FiniteField, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, x) in out.iter_mut().enumerate() {
        *x = f.add(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0));
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// First `s` diagonal entries of the Smith form over `F[t]` of an `r x c`
/// matrix of dense polynomials (empty vector = zero). Powers of `t` are
/// stripped since they are units in the Laurent ring.
fn smith_diagonal(f: &FiniteField, mut m: Vec<Vec<u64>>, r: usize, c: usize, s: usize) -> Vec<Vec<u64>> {
    let mut diag = Vec::with_capacity(s);
    let at = |i: usize, j: usize| i * c + j;
    for k in 0..s {
        loop {
            // smallest-degree nonzero entry of the trailing block
            let mut best: Option<(usize, usize, usize)> = None;
            for i in k..r {
                for j in k..c {
                    let e = &m[at(i, j)];
                    if !e.is_empty() && best.is_none_or(|(_, _, d)| poly_degree(e) < d) {
                        best = Some((i, j, poly_degree(e)));
                    }
                }
            }
            let Some((bi, bj, _)) = best else {
                diag.resize(s, Vec::new());
                return diag;
            };
            if bi != k {
                for j in 0..c {
                    m.swap(at(bi, j), at(k, j));
                }
            }
            if bj != k {
                for i in 0..r {
                    m.swap(at(i, bj), at(i, k));
                }
            }
            let pivot = m[at(k, k)].clone();
            let mut clean = true;
            for i in k + 1..r {
                if m[at(i, k)].is_empty() {
                    continue;
                }
                let (q, rem) = dense_field_div_rem(f, &m[at(i, k)], &pivot);
                for j in k..c {
                    let updated = poly_sub_mul(f, &m[at(i, j)], &q, &m[at(k, j)]);
                    m[at(i, j)] = updated;
                }
                debug_assert_eq!(m[at(i, k)], rem);
                if !rem.is_empty() {
                    clean = false;
                }
            }
            for j in k + 1..c {
                if m[at(k, j)].is_empty() {
                    continue;
                }
                let (q, rem) = dense_field_div_rem(f, &m[at(k, j)], &pivot);
                for i in k..r {
                    let updated = poly_sub_mul(f, &m[at(i, j)], &q, &m[at(i, k)]);
                    m[at(i, j)] = updated;
                }
                if !rem.is_empty() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // pivot must divide the whole trailing block
            let mut offender = None;
            'scan: for i in k + 1..r {
                for j in k + 1..c {
                    let e = &m[at(i, j)];
                    if !e.is_empty() && !dense_field_div_rem(f, e, &pivot).1.is_empty() {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    for j in k..c {
                        let sum = poly_add(f, &m[at(k, j)], &m[at(i, j)]);
                        m[at(k, j)] = sum;
                    }
                }
                None => break,
            }
        }
        let mut d = m[at(k, k)].clone();
        let lead = d.iter().take_while(|&&x| x == 0).count();
        d.drain(..lead);
        diag.push(d);
    }
    diag
}
