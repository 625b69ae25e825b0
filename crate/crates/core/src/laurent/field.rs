use std::fmt;

use crate::error::{Error, Result};

/// Largest field order for which log tables are built.
pub const MAX_FIELD_ORDER: u64 = 1 << 22;

/// The finite field `F_q`, `q = p^k`.
///
/// Elements are encoded as integers in `0..q`: the base-`p` digits of the
/// encoding are the coefficients (constant term first) of a polynomial in a
/// root of the modulus. The prime subfield is therefore `0..p`, and the
/// encoding order is the deterministic order used for interpolation points.
#[derive(Clone)]
pub struct FiniteField {
    p: u64,
    k: u32,
    q: u64,
    /// Monic irreducible modulus, constant term first, length `k + 1`.
    modulus: Vec<u64>,
    /// `log[e]` for nonzero `e` (k > 1 only).
    log: Vec<u32>,
    /// `exp[i] = g^i` for `i in 0..q-1` (k > 1 only).
    exp: Vec<u32>,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for FiniteField {}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteField({self})")
    }
}

impl fmt::Display for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            write!(f, "F{}", self.p)
        } else {
            write!(f, "F{}^{}", self.p, self.k)
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The smallest field of characteristic `p` with more than `needed` elements.
pub fn extend_field(p: u64, needed: u64) -> Result<FiniteField> {
    if !is_prime(p) {
        return Err(Error::Precondition(format!("{p} is not prime")));
    }
    let mut k = 1u32;
    let mut q = p;
    while q <= needed {
        k += 1;
        q = q.checked_mul(p).ok_or_else(|| {
            Error::ResourceCap(format!("no field of characteristic {p} with {needed} points"))
        })?;
    }
    FiniteField::new(p, k)
}

impl FiniteField {
    pub fn prime(p: u64) -> Result<Self> {
        FiniteField::new(p, 1)
    }

    pub fn new(p: u64, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Precondition(format!("{p} is not prime")));
        }
        if p >= 1 << 32 {
            return Err(Error::Precondition(format!("characteristic {p} exceeds 2^32")));
        }
        if k == 0 {
            return Err(Error::Precondition("extension degree must be positive".into()));
        }
        if k == 1 {
            return Ok(FiniteField {
                p,
                k,
                q: p,
                modulus: vec![0, 1],
                log: Vec::new(),
                exp: Vec::new(),
            });
        }
        let q = p
            .checked_pow(k)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or_else(|| Error::ResourceCap(format!("F{p}^{k} exceeds the table size cap")))?;
        let modulus = least_irreducible(p, k);
        let mut field = FiniteField {
            p,
            k,
            q,
            modulus,
            log: Vec::new(),
            exp: Vec::new(),
        };
        field.build_tables();
        Ok(field)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    fn digits(&self, mut a: u64) -> Vec<u64> {
        let mut d = vec![0; self.k as usize];
        for x in d.iter_mut() {
            *x = a % self.p;
            a /= self.p;
        }
        d
    }

    fn encode(&self, digits: &[u64]) -> u64 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    /// Schoolbook product modulo the modulus; only used to build tables.
    fn slow_mul(&self, a: u64, b: u64) -> u64 {
        let (da, db) = (self.digits(a), self.digits(b));
        let k = self.k as usize;
        let mut prod = vec![0u64; 2 * k];
        for i in 0..k {
            for j in 0..k {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % self.p;
            }
        }
        for top in (k..2 * k).rev() {
            let c = prod[top];
            if c != 0 {
                for i in 0..k {
                    let sub = c * self.modulus[i] % self.p;
                    prod[top - k + i] = (prod[top - k + i] + self.p - sub) % self.p;
                }
                prod[top] = 0;
            }
        }
        self.encode(&prod[..k])
    }

    fn build_tables(&mut self) {
        let n = (self.q - 1) as usize;
        for candidate in 2..self.q {
            let mut exp = Vec::with_capacity(n);
            let mut x = 1u64;
            let mut primitive = true;
            for i in 0..n {
                if i > 0 && x == 1 {
                    primitive = false;
                    break;
                }
                exp.push(x as u32);
                x = self.slow_mul(x, candidate);
            }
            if primitive && x == 1 {
                let mut log = vec![0u32; self.q as usize];
                for (i, &e) in exp.iter().enumerate() {
                    log[e as usize] = i as u32;
                }
                self.exp = exp;
                self.log = log;
                return;
            }
        }
        unreachable!("the multiplicative group of a finite field is cyclic");
    }

    pub fn zero(&self) -> u64 {
        0
    }

    pub fn one(&self) -> u64 {
        1
    }

    /// Image of an integer in the prime subfield.
    pub fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.k == 1 {
            let s = a + b;
            if s >= self.p {
                s - self.p
            } else {
                s
            }
        } else {
            let (mut a, mut b) = (a, b);
            let mut out = 0;
            let mut place = 1;
            for _ in 0..self.k {
                out += ((a % self.p + b % self.p) % self.p) * place;
                a /= self.p;
                b /= self.p;
                place *= self.p;
            }
            out
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if self.k == 1 {
            if a == 0 {
                0
            } else {
                self.p - a
            }
        } else {
            let mut a = a;
            let mut out = 0;
            let mut place = 1;
            for _ in 0..self.k {
                let d = a % self.p;
                out += (if d == 0 { 0 } else { self.p - d }) * place;
                a /= self.p;
                place *= self.p;
            }
            out
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if self.k == 1 {
            a * b % self.p
        } else if a == 0 || b == 0 {
            0
        } else {
            let n = self.q - 1;
            let s = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % n;
            self.exp[s as usize] as u64
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero");
        if self.k == 1 {
            self.pow(a, self.p - 2)
        } else {
            let n = self.q - 1;
            let l = self.log[a as usize] as u64;
            self.exp[((n - l) % n) as usize] as u64
        }
    }

    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// True when `a` lies in the prime subfield.
    pub fn in_prime_field(&self, a: u64) -> bool {
        a < self.p
    }
}

/// Least monic irreducible of degree `k` over `F_p`, where polynomials are
/// compared by their coefficient vector read from the `t^(k-1)` term down
/// to the constant term.
fn least_irreducible(p: u64, k: u32) -> Vec<u64> {
    let count = p.pow(k);
    'outer: for m in 0..count {
        let mut f = Vec::with_capacity(k as usize + 1);
        let mut x = m;
        for _ in 0..k {
            f.push(x % p);
            x /= p;
        }
        f.push(1);
        if f[0] == 0 {
            continue;
        }
        for d in 1..=k / 2 {
            for n in 0..p.pow(d) {
                let mut g = Vec::with_capacity(d as usize + 1);
                let mut x = n;
                for _ in 0..d {
                    g.push(x % p);
                    x /= p;
                }
                g.push(1);
                if poly_rem_is_zero(&f, &g, p) {
                    continue 'outer;
                }
            }
        }
        return f;
    }
    unreachable!("irreducible polynomials exist in every degree");
}

fn poly_rem_is_zero(f: &[u64], g: &[u64], p: u64) -> bool {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    for top in (dg..r.len()).rev() {
        let c = r[top];
        if c != 0 {
            for i in 0..=dg {
                let idx = top - dg + i;
                r[idx] = (r[idx] + p - c * g[i] % p) % p;
            }
        }
    }
    r[..dg].iter().all(|&c| c == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extension_degrees() {
        assert_eq!(extend_field(53, 40).unwrap().degree(), 1);
        assert_eq!(extend_field(53, 600).unwrap().degree(), 2);
        assert_eq!(extend_field(53, 600).unwrap().order(), 2809);
        assert_eq!(extend_field(2, 600).unwrap().degree(), 10);
        assert!(extend_field(4, 3).is_err());
    }

    #[test]
    fn small_moduli() {
        // x^2 + x + 1 is the only irreducible quadratic over F_2
        assert_eq!(FiniteField::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        // x^2 + 1 over F_3 (x^2 + 0x + 1 comes first in the ordering)
        assert_eq!(FiniteField::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
    }

    fn check_axioms(f: &FiniteField) {
        let q = f.order();
        for a in 0..q {
            assert_eq!(f.add(a, f.neg(a)), 0);
            assert_eq!(f.mul(a, 1), a);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
            for b in 0..q {
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.mul(a, b), f.slow_mul(a, b));
                for c in [0, 1, q / 2, q - 1] {
                    assert_eq!(
                        f.mul(a, f.add(b, c)),
                        f.add(f.mul(a, b), f.mul(a, c))
                    );
                }
            }
        }
    }

    #[test]
    fn field_axioms() {
        check_axioms(&FiniteField::prime(7).unwrap());
        check_axioms(&FiniteField::new(2, 3).unwrap());
        check_axioms(&FiniteField::new(3, 2).unwrap());
        check_axioms(&FiniteField::new(5, 2).unwrap());
    }

    #[test]
    fn frobenius_fixes_prime_subfield() {
        let f = FiniteField::new(53, 2).unwrap();
        for a in 0..f.order() {
            assert_eq!(f.pow(a, 53) == a, f.in_prime_field(a));
        }
    }

    #[test]
    fn rejects_composites() {
        assert!(FiniteField::prime(51).is_err());
        assert!(FiniteField::prime(1).is_err());
    }
}
