use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use super::{FreeWord, Presentation};
use crate::error::{Error, Result};

/// A finite Z-linear combination of free-group words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupRingElement {
    terms: BTreeMap<FreeWord, i64>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(FreeWord::identity())
    }

    pub fn from_word(w: FreeWord) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, 1);
        GroupRingElement { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FreeWord, i64)> {
        self.terms.iter().map(|(w, c)| (w, *c))
    }

    pub fn coefficient(&self, w: &FreeWord) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: FreeWord, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        GroupRingElement {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (u, a) in self.terms() {
            for (v, b) in other.terms() {
                out.add_term(u.mul(v), a * b);
            }
        }
        out
    }

    /// Sum of coefficients (the augmentation map to Z).
    pub fn augmentation(&self) -> i64 {
        self.terms.values().sum()
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(w, c)| match c {
                1 => format!("{w}"),
                -1 => format!("-{w}"),
                _ => format!("{c}*{w}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Fox derivative of `w` with respect to generator `gen`.
///
/// For a syllable `x^e` preceded by the prefix `u`:
/// `e > 0` contributes `u(1 + x + ... + x^(e-1))`,
/// `e < 0` contributes `-u(x^-1 + ... + x^e)`.
pub fn fox_derivative(w: &FreeWord, gen: usize, gen_count: usize) -> Result<GroupRingElement> {
    if gen >= gen_count {
        return Err(Error::MalformedWord(format!(
            "generator index {gen} out of range for {gen_count} generators"
        )));
    }
    let mut out = GroupRingElement::zero();
    let mut prefix = FreeWord::identity();
    for s in w.syllables() {
        if s.gen == gen {
            if s.exp > 0 {
                for k in 0..s.exp {
                    out.add_term(prefix.mul(&FreeWord::power_of(gen, k)), 1);
                }
            } else {
                for k in 1..=(-s.exp) {
                    out.add_term(prefix.mul(&FreeWord::power_of(gen, -k)), -1);
                }
            }
        }
        prefix = prefix.mul(&FreeWord::power_of(s.gen, s.exp));
    }
    Ok(out)
}

/// Fox Jacobian: entry `(k, i)` is the derivative of relator `k` by generator `i`.
pub fn alexander_matrix(p: &Presentation) -> Vec<Vec<GroupRingElement>> {
    let g = p.generator_count();
    p.relators()
        .iter()
        .map(|r| {
            (0..g)
                .map(|i| fox_derivative(r, i, g).expect("relators validated against generator count"))
                .collect()
        })
        .collect()
}
