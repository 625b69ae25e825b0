use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::field::FiniteField;
use crate::error::{Error, Result};

/// Coefficient ring of a Laurent polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ring {
    Z,
    Fq(Arc<FiniteField>),
}

impl Ring {
    pub fn prime_field(p: u64) -> Result<Ring> {
        Ok(Ring::Fq(Arc::new(FiniteField::prime(p)?)))
    }

    pub fn field(p: u64, k: u32) -> Result<Ring> {
        Ok(Ring::Fq(Arc::new(FiniteField::new(p, k)?)))
    }

    /// Parse a ring tag: `Z`, `F53`, `F53^2`.
    pub fn parse(tag: &str) -> Result<Ring> {
        let tag = tag.trim();
        if tag == "Z" {
            return Ok(Ring::Z);
        }
        let rest = tag
            .strip_prefix('F')
            .ok_or_else(|| Error::Precondition(format!("unknown ring '{tag}'")))?;
        let (p, k) = match rest.split_once('^') {
            Some((p, k)) => (p, k),
            None => (rest, "1"),
        };
        let p: u64 = p
            .parse()
            .map_err(|_| Error::Precondition(format!("bad characteristic in '{tag}'")))?;
        let k: u32 = k
            .parse()
            .map_err(|_| Error::Precondition(format!("bad extension degree in '{tag}'")))?;
        Ring::field(p, k)
    }

    pub fn is_integers(&self) -> bool {
        matches!(self, Ring::Z)
    }

    pub fn as_field(&self) -> Option<&Arc<FiniteField>> {
        match self {
            Ring::Z => None,
            Ring::Fq(f) => Some(f),
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Z => write!(f, "Z"),
            Ring::Fq(k) => write!(f, "{k}"),
        }
    }
}

/// Degree of a Laurent polynomial: span of its exponents, `-inf` for zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(i64),
}

impl Degree {
    pub fn finite(self) -> Option<i64> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }

    pub fn is_neg_infinity(self) -> bool {
        self == Degree::NegInfinity
    }

    pub fn plus(self, n: i64) -> Degree {
        match self {
            Degree::NegInfinity => Degree::NegInfinity,
            Degree::Finite(d) => Degree::Finite(d + n),
        }
    }
}

impl Add for Degree {
    type Output = Degree;

    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInfinity,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

impl Serialize for Degree {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Degree::NegInfinity => s.serialize_str("-inf"),
            Degree::Finite(d) => s.serialize_i64(*d),
        }
    }
}

impl<'de> Deserialize<'de> for Degree {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Int(n) => Ok(Degree::Finite(n)),
            Repr::Text(t) if t == "-inf" => Ok(Degree::NegInfinity),
            Repr::Text(t) => Err(serde::de::Error::custom(format!("bad degree '{t}'"))),
        }
    }
}

/// A Laurent polynomial over `Z` or a finite field.
///
/// Field coefficients are stored as their integer encodings (see
/// [`FiniteField`]); zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    ring: Ring,
    coeffs: BTreeMap<i64, BigInt>,
}

fn enc(c: &BigInt) -> u64 {
    c.to_u64().expect("field coefficients are stored as encodings")
}

impl LaurentPoly {
    pub fn zero(ring: &Ring) -> Self {
        LaurentPoly {
            ring: ring.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        LaurentPoly::monomial(ring, 0, 1)
    }

    /// `c t^e` with `c` mapped into the ring.
    pub fn monomial(ring: &Ring, e: i64, c: i64) -> Self {
        LaurentPoly::from_int_terms(ring, [(e, BigInt::from(c))])
    }

    pub fn t(ring: &Ring) -> Self {
        LaurentPoly::monomial(ring, 1, 1)
    }

    /// Build from integer coefficients, reducing them into the ring.
    /// Repeated exponents are summed.
    pub fn from_int_terms<I>(ring: &Ring, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigInt)>,
    {
        let mut coeffs: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *coeffs.entry(e).or_insert_with(BigInt::zero) += c;
        }
        if let Ring::Fq(f) = ring {
            let p = BigInt::from(f.characteristic());
            for c in coeffs.values_mut() {
                *c = c.mod_floor(&p);
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        LaurentPoly {
            ring: ring.clone(),
            coeffs,
        }
    }

    pub fn from_i64_terms(ring: &Ring, terms: &[(i64, i64)]) -> Self {
        LaurentPoly::from_int_terms(ring, terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    /// Ascending integer coefficients starting at `t^0`.
    pub fn from_coeffs(ring: &Ring, coeffs: &[i64]) -> Self {
        LaurentPoly::from_int_terms(
            ring,
            coeffs.iter().enumerate().map(|(e, &c)| (e as i64, BigInt::from(c))),
        )
    }

    /// Build from field-element encodings. Panics on `Z` or on encodings
    /// outside the field.
    pub fn from_field_terms<I>(ring: &Ring, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, u64)>,
    {
        let f = ring.as_field().expect("field ring required");
        let mut acc: BTreeMap<i64, u64> = BTreeMap::new();
        for (e, c) in terms {
            assert!(c < f.order(), "encoding {c} outside {f}");
            let slot = acc.entry(e).or_insert(0);
            *slot = f.add(*slot, c);
        }
        LaurentPoly {
            ring: ring.clone(),
            coeffs: acc
                .into_iter()
                .filter(|&(_, c)| c != 0)
                .map(|(e, c)| (e, BigInt::from(c)))
                .collect(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficient(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn degree(&self) -> Degree {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => Degree::Finite(hi - lo),
            _ => Degree::NegInfinity,
        }
    }

    fn check_ring(&self, other: &Self) {
        assert_eq!(self.ring, other.ring, "mixed rings {} and {}", self.ring, other.ring);
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_ring(other);
        match &self.ring {
            Ring::Z => LaurentPoly::from_int_terms(
                &self.ring,
                self.terms()
                    .chain(other.terms())
                    .map(|(e, c)| (e, c.clone())),
            ),
            Ring::Fq(_) => LaurentPoly::from_field_terms(
                &self.ring,
                self.terms().chain(other.terms()).map(|(e, c)| (e, enc(c))),
            ),
        }
    }

    pub fn neg(&self) -> Self {
        match &self.ring {
            Ring::Z => LaurentPoly {
                ring: Ring::Z,
                coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect(),
            },
            Ring::Fq(f) => LaurentPoly {
                ring: self.ring.clone(),
                coeffs: self
                    .coeffs
                    .iter()
                    .map(|(&e, c)| (e, BigInt::from(f.neg(enc(c)))))
                    .collect(),
            },
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_ring(other);
        match &self.ring {
            Ring::Z => {
                let mut acc: BTreeMap<i64, BigInt> = BTreeMap::new();
                for (a, x) in self.terms() {
                    for (b, y) in other.terms() {
                        *acc.entry(a + b).or_insert_with(BigInt::zero) += x * y;
                    }
                }
                acc.retain(|_, c| !c.is_zero());
                LaurentPoly {
                    ring: Ring::Z,
                    coeffs: acc,
                }
            }
            Ring::Fq(f) => {
                let mut acc: BTreeMap<i64, u64> = BTreeMap::new();
                for (a, x) in self.terms() {
                    for (b, y) in other.terms() {
                        let slot = acc.entry(a + b).or_insert(0);
                        *slot = f.add(*slot, f.mul(enc(x), enc(y)));
                    }
                }
                LaurentPoly::from_field_terms(&self.ring, acc)
            }
        }
    }

    /// Multiply by an integer (mapped into the ring).
    pub fn scale(&self, k: i64) -> Self {
        self.mul(&LaurentPoly::monomial(&self.ring, 0, k))
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(LaurentPoly::one(&self.ring), |acc, _| acc.mul(self))
    }

    /// Reduce a polynomial over `Z` into another ring.
    pub fn to_ring(&self, ring: &Ring) -> Result<Self> {
        match (&self.ring, ring) {
            (a, b) if a == b => Ok(self.clone()),
            (Ring::Z, _) => Ok(LaurentPoly::from_int_terms(
                ring,
                self.terms().map(|(e, c)| (e, c.clone())),
            )),
            _ => Err(Error::WrongRing(format!(
                "cannot move a polynomial over {} to {ring}",
                self.ring
            ))),
        }
    }

    /// Both extreme coefficients are units of `Z`. Only meaningful over `Z`.
    pub fn is_monic(&self) -> Result<bool> {
        if !self.ring.is_integers() {
            return Err(Error::WrongRing(format!(
                "monicity over {} says nothing about Z",
                self.ring
            )));
        }
        let unit = |c: Option<&BigInt>| c.is_some_and(|c| c.abs().is_one());
        Ok(unit(self.coeffs.values().next()) && unit(self.coeffs.values().next_back()))
    }

    /// Representative of the class up to units: lowest exponent 0 and a
    /// positive (over `Z`) or unit (over a field) leading coefficient.
    pub fn normalize(&self) -> Self {
        let Some(lo) = self.min_exp() else {
            return self.clone();
        };
        let shifted = self.shift(-lo);
        let lead = shifted.coeffs.values().next_back().expect("nonzero").clone();
        match &self.ring {
            Ring::Z => {
                if lead.is_negative() {
                    shifted.neg()
                } else {
                    shifted
                }
            }
            Ring::Fq(f) => {
                let inv = f.inv(enc(&lead));
                LaurentPoly::from_field_terms(
                    &self.ring,
                    shifted.terms().map(|(e, c)| (e, f.mul(enc(c), inv))),
                )
            }
        }
    }

    /// Equal up to multiplication by a unit `±t^k` (or `c t^k` over a field).
    pub fn associates(&self, other: &Self) -> bool {
        self.ring == other.ring && self.normalize() == other.normalize()
    }

    /// gcd of the integer coefficients (nonnegative). Zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.values().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Dense coefficients from the lowest exponent, with that exponent.
    pub(crate) fn to_dense(&self) -> (i64, Vec<BigInt>) {
        let Some(lo) = self.min_exp() else {
            return (0, Vec::new());
        };
        let hi = self.max_exp().unwrap();
        let mut v = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in self.terms() {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    pub(crate) fn from_dense(ring: &Ring, lo: i64, v: Vec<BigInt>) -> Self {
        LaurentPoly {
            ring: ring.clone(),
            coeffs: v
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (lo + i as i64, c))
                .collect(),
        }
    }

    /// Field coefficients as dense encodings from the lowest exponent.
    pub(crate) fn to_dense_field(&self) -> (i64, Vec<u64>) {
        let (lo, v) = self.to_dense();
        (lo, v.iter().map(enc).collect())
    }

    pub(crate) fn from_dense_field(ring: &Ring, lo: i64, v: &[u64]) -> Self {
        LaurentPoly::from_field_terms(ring, v.iter().enumerate().map(|(i, &c)| (lo + i as i64, c)))
    }

    /// Division with remainder in `F[t^{±1}]`: `self = q d + r` with
    /// `deg r < deg d`. Field rings only.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        self.check_ring(d);
        let f = self
            .ring
            .as_field()
            .ok_or_else(|| Error::WrongRing("division with remainder needs a field".into()))?;
        if d.is_zero() {
            return Err(Error::Degenerate("division by zero".into()));
        }
        if self.is_zero() {
            return Ok((self.clone(), self.clone()));
        }
        let (alo, a) = self.to_dense_field();
        let (dlo, b) = d.to_dense_field();
        let (q, r) = dense_field_div_rem(f, &a, &b);
        Ok((
            LaurentPoly::from_dense_field(&self.ring, alo - dlo, &q),
            LaurentPoly::from_dense_field(&self.ring, alo, &r),
        ))
    }

    /// `self / d` when `d` divides `self` exactly in the Laurent ring.
    pub fn divide_exact(&self, d: &Self) -> Option<Self> {
        self.check_ring(d);
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        match &self.ring {
            Ring::Fq(_) => {
                let (q, r) = self.div_rem(d).ok()?;
                r.is_zero().then_some(q)
            }
            Ring::Z => {
                let (alo, a) = self.to_dense();
                let (dlo, b) = d.to_dense();
                let q = dense_int_divide_exact(&a, &b)?;
                Some(LaurentPoly::from_dense(&Ring::Z, alo - dlo, q))
            }
        }
    }

    /// Greatest common divisor, unit-normalized. `gcd(0, 0) = 0`. Over `Z`
    /// the integer content is included.
    pub fn gcd(&self, other: &Self) -> Self {
        self.check_ring(other);
        if self.is_zero() {
            return other.normalize();
        }
        if other.is_zero() {
            return self.normalize();
        }
        match &self.ring {
            Ring::Fq(f) => {
                let (_, mut a) = self.to_dense_field();
                let (_, mut b) = other.to_dense_field();
                while !b.is_empty() {
                    let (_, r) = dense_field_div_rem(f, &a, &b);
                    a = b;
                    b = strip_low_zeros(r);
                }
                LaurentPoly::from_dense_field(&self.ring, 0, &a).normalize()
            }
            Ring::Z => {
                let content = self.content().gcd(&other.content());
                let (_, a) = self.to_dense();
                let (_, b) = other.to_dense();
                let g = dense_int_gcd_primitive(primitive(a), primitive(b));
                LaurentPoly::from_dense(&Ring::Z, 0, g)
                    .mul(&LaurentPoly::from_int_terms(&Ring::Z, [(0, content)]))
                    .normalize()
            }
        }
    }

    /// Canonical text, ascending exponents: `1 - t + t^2`, `2*t^-1 + 3`.
    /// Prime-field coefficients print as symmetric representatives.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms().enumerate() {
            let c = self.display_coeff(c);
            let (neg, mag) = match &c {
                Coeff::Int(n) => (n.is_negative(), Coeff::Int(n.abs())),
                Coeff::Encoded(_) => (false, c.clone()),
            };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let unit = matches!(&mag, Coeff::Int(n) if n.is_one());
            let mag = match mag {
                Coeff::Int(n) => n.to_string(),
                Coeff::Encoded(k) => format!("[{k}]"),
            };
            match e {
                0 => out.push_str(&mag),
                _ => {
                    if !unit {
                        out.push_str(&mag);
                        out.push('*');
                    }
                    out.push('t');
                    if e != 1 {
                        out.push_str(&format!("^{e}"));
                    }
                }
            }
        }
        out
    }

    fn display_coeff(&self, c: &BigInt) -> Coeff {
        match &self.ring {
            Ring::Z => Coeff::Int(c.clone()),
            Ring::Fq(f) => {
                let v = enc(c);
                if f.in_prime_field(v) {
                    let p = f.characteristic();
                    let s = if v > p / 2 { v as i64 - p as i64 } else { v as i64 };
                    Coeff::Int(BigInt::from(s))
                } else {
                    Coeff::Encoded(v)
                }
            }
        }
    }

    /// Evaluate at a field element (field rings only, exponents may be negative).
    pub fn eval_field(&self, x: u64) -> Option<u64> {
        let f = self.ring.as_field()?;
        let mut acc = 0u64;
        for (e, c) in self.terms() {
            let xe = if e >= 0 {
                f.pow(x, e as u64)
            } else {
                if x == 0 {
                    return None;
                }
                f.pow(f.inv(x), (-e) as u64)
            };
            acc = f.add(acc, f.mul(enc(c), xe));
        }
        Some(acc)
    }
}

#[derive(Clone)]
enum Coeff {
    Int(BigInt),
    Encoded(u64),
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoeffRepr {
    Int(i64),
    Big(String),
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    ring: String,
    coeffs: Vec<(i64, CoeffRepr)>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            ring: self.ring.to_string(),
            coeffs: self
                .terms()
                .map(|(e, c)| {
                    let repr = match c.to_i64() {
                        Some(n) => CoeffRepr::Int(n),
                        None => CoeffRepr::Big(c.to_string()),
                    };
                    (e, repr)
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = PolyJson::deserialize(d)?;
        let ring = Ring::parse(&raw.ring).map_err(D::Error::custom)?;
        let mut terms = Vec::with_capacity(raw.coeffs.len());
        for (e, c) in raw.coeffs {
            let c = match c {
                CoeffRepr::Int(n) => BigInt::from(n),
                CoeffRepr::Big(s) => s.parse().map_err(D::Error::custom)?,
            };
            terms.push((e, c));
        }
        match &ring {
            Ring::Z => Ok(LaurentPoly::from_int_terms(&ring, terms)),
            Ring::Fq(f) => {
                let mut enc_terms = Vec::with_capacity(terms.len());
                for (e, c) in terms {
                    let v = c
                        .to_u64()
                        .filter(|&v| v < f.order())
                        .ok_or_else(|| D::Error::custom(format!("{c} is not an element of {f}")))?;
                    enc_terms.push((e, v));
                }
                Ok(LaurentPoly::from_field_terms(&ring, enc_terms))
            }
        }
    }
}

fn strip_low_zeros<T: PartialEq + Default>(mut v: Vec<T>) -> Vec<T> {
    while v.last().is_some_and(|c| *c == T::default()) {
        v.pop();
    }
    let lead = v.iter().take_while(|c| **c == T::default()).count();
    v.drain(..lead);
    v
}

/// Dense division over a field; `b` must have a nonzero top coefficient.
pub(crate) fn dense_field_div_rem(f: &FiniteField, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let mut r = a.to_vec();
    while r.last() == Some(&0) {
        r.pop();
    }
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let inv = f.inv(b[db]);
    let mut q = vec![0u64; r.len() - db];
    for top in (db..r.len()).rev() {
        let c = f.mul(r[top], inv);
        q[top - db] = c;
        if c != 0 {
            for i in 0..=db {
                let idx = top - db + i;
                r[idx] = f.sub(r[idx], f.mul(c, b[i]));
            }
        }
    }
    r.truncate(db);
    while r.last() == Some(&0) {
        r.pop();
    }
    (q, r)
}

fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let c = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if c.is_zero() || c.is_one() {
        v
    } else {
        v.into_iter().map(|x| x / &c).collect()
    }
}

/// `a = q b` exactly over `Z`, or `None`.
fn dense_int_divide_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let db = b.len() - 1;
    if a.len() < b.len() {
        return None;
    }
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for top in (db..r.len()).rev() {
        if r[top].is_zero() {
            continue;
        }
        let (c, rem) = r[top].div_rem(&b[db]);
        if !rem.is_zero() {
            return None;
        }
        for i in 0..=db {
            let idx = top - db + i;
            r[idx] -= &c * &b[i];
        }
        q[top - db] = c;
    }
    r.iter().all(Zero::is_zero).then_some(q)
}

/// Primitive polynomial remainder sequence on primitive inputs. Returns a
/// primitive gcd.
fn dense_int_gcd_primitive(a: Vec<BigInt>, b: Vec<BigInt>) -> Vec<BigInt> {
    let (mut a, mut b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    while !b.is_empty() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = primitive(strip_low_zeros(r));
    }
    a
}

fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead = &b[db];
    while r.len() > db && !r.is_empty() {
        let top = r.len() - 1;
        let c = r[top].clone();
        for x in r.iter_mut() {
            *x *= lead;
        }
        for i in 0..=db {
            r[top - db + i] -= &c * &b[i];
        }
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    r
}
