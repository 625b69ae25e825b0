use std::fmt;

use crate::error::{Error, Result};

/// A run `x_gen^exp` of a single generator. `exp` is never zero inside a
/// reduced word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    pub gen: usize,
    pub exp: i64,
}

/// A freely reduced word in the free group, stored run-length encoded.
///
/// Adjacent syllables never share a generator, so two words are equal as
/// group elements exactly when their syllable lists are equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    syllables: Vec<Syllable>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    pub fn generator(gen: usize) -> Self {
        FreeWord {
            syllables: vec![Syllable { gen, exp: 1 }],
        }
    }

    pub fn power_of(gen: usize, exp: i64) -> Self {
        FreeWord::from_syllables([(gen, exp)])
    }

    /// Freely reduce an arbitrary sequence of `(generator, exponent)` pairs.
    /// No index validation; see [`reduce`] for the checked version.
    pub fn from_syllables<I>(raw: I) -> Self
    where
        I: IntoIterator<Item = (usize, i64)>,
    {
        let mut w = FreeWord::identity();
        for (gen, exp) in raw {
            w.push(gen, exp);
        }
        w
    }

    /// Build from a letter sequence of `(generator, ±1)`.
    pub fn from_letters<I>(letters: I) -> Self
    where
        I: IntoIterator<Item = (usize, bool)>,
    {
        FreeWord::from_syllables(
            letters
                .into_iter()
                .map(|(g, inv)| (g, if inv { -1 } else { 1 })),
        )
    }

    fn push(&mut self, gen: usize, exp: i64) {
        if exp == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some(top) if top.gen == gen => {
                top.exp += exp;
                if top.exp == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push(Syllable { gen, exp }),
        }
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of letters, i.e. the sum of absolute exponents.
    pub fn len(&self) -> usize {
        self.syllables.iter().map(|s| s.exp.unsigned_abs() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    /// Letters as `(generator, exponent ±1)`.
    pub fn letters(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.syllables.iter().flat_map(|s| {
            let step = s.exp.signum();
            std::iter::repeat_n((s.gen, step), s.exp.unsigned_abs() as usize)
        })
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut w = self.clone();
        for s in &other.syllables {
            w.push(s.gen, s.exp);
        }
        w
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|s| Syllable {
                    gen: s.gen,
                    exp: -s.exp,
                })
                .collect(),
        }
    }

    pub fn pow(&self, n: i64) -> FreeWord {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = FreeWord::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    pub fn exponent_sum(&self, gen: usize) -> i64 {
        self.syllables
            .iter()
            .filter(|s| s.gen == gen)
            .map(|s| s.exp)
            .sum()
    }

    pub fn exponent_vector(&self, gen_count: usize) -> Vec<i64> {
        let mut v = vec![0; gen_count];
        for s in &self.syllables {
            v[s.gen] += s.exp;
        }
        v
    }

    pub fn generators_used(&self) -> impl Iterator<Item = usize> + '_ {
        self.syllables.iter().map(|s| s.gen)
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.generators_used().max()
    }

    /// Cyclically reduced conjugate (strip matching ends).
    pub fn cyclic_reduction(&self) -> FreeWord {
        let mut s = self.syllables.clone();
        loop {
            if s.len() < 2 {
                break;
            }
            let (first, last) = (s[0], s[s.len() - 1]);
            if first.gen != last.gen {
                break;
            }
            let merged = first.exp + last.exp;
            s.pop();
            if merged == 0 {
                s.remove(0);
            } else {
                s[0].exp = merged;
                break;
            }
        }
        FreeWord { syllables: s }
    }

    /// True when `other` equals `self` up to cyclic permutation and inversion.
    pub fn same_relator(&self, other: &FreeWord) -> bool {
        let a = self.cyclic_reduction();
        let b = other.cyclic_reduction();
        if a.len() != b.len() {
            return false;
        }
        let rotations = |w: &FreeWord| -> Vec<Vec<(usize, i64)>> {
            let letters: Vec<_> = w.letters().collect();
            (0..letters.len().max(1))
                .map(|k| {
                    let mut r = letters[k.min(letters.len())..].to_vec();
                    r.extend_from_slice(&letters[..k.min(letters.len())]);
                    r
                })
                .collect()
        };
        let target: Vec<_> = a.letters().collect();
        rotations(&b)
            .into_iter()
            .chain(rotations(&b.inverse()))
            .any(|r| r == target)
    }

    /// Render with single-character generator names, upper case for inverses.
    pub fn to_letters(&self, names: &[String]) -> String {
        let mut out = String::new();
        for (g, e) in self.letters() {
            let name = &names[g];
            if e > 0 {
                out.push_str(name);
            } else {
                out.push_str(&name.to_uppercase());
            }
        }
        out
    }

    /// Parse a space-free letter word against single-letter generator names.
    /// Upper case denotes the inverse generator.
    pub fn parse_letters(text: &str, names: &[String]) -> Result<FreeWord> {
        let mut raw = Vec::new();
        for (pos, ch) in text.char_indices() {
            let lower = ch.to_lowercase().to_string();
            let gen = names.iter().position(|n| *n == lower).ok_or_else(|| {
                Error::parse(pos, format!("unknown generator letter '{ch}'"))
            })?;
            raw.push((gen, if ch.is_uppercase() { -1 } else { 1 }));
        }
        Ok(FreeWord::from_syllables(raw))
    }
}

/// Checked reduction of a raw letter sequence.
pub fn reduce(raw: &[(usize, i64)], gen_count: usize) -> Result<FreeWord> {
    if let Some(&(g, _)) = raw.iter().find(|(g, _)| *g >= gen_count) {
        return Err(Error::MalformedWord(format!(
            "generator index {g} out of range for {gen_count} generators"
        )));
    }
    Ok(FreeWord::from_syllables(raw.iter().copied()))
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .syllables
            .iter()
            .map(|s| {
                if s.exp == 1 {
                    format!("x{}", s.gen)
                } else {
                    format!("x{}^{}", s.gen, s.exp)
                }
            })
            .collect();
        write!(f, "{}", parts.join("·"))
    }
}
