use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::abelian::{integer_kernel, smith_invariants};
use super::FreeWord;
use crate::error::{Error, Result};

/// Provenance of a presentation. Used to decide which structural shortcuts are
/// sound (meridian-conjugacy pruning, dropping a redundant Wirtinger relator).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PresentationKind {
    #[default]
    General,
    /// One conjugation relator per crossing of a knot diagram (possibly with
    /// one redundant relator already dropped).
    Wirtinger,
    /// Wirtinger relators plus the longitude.
    ZeroSurgery,
}

/// A finitely presented group `<x_0, ..., x_{g-1} | r_1, ..., r_k>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    names: Vec<String>,
    relators: Vec<FreeWord>,
    peripheral: BTreeMap<String, FreeWord>,
    kind: PresentationKind,
}

/// Abelianization `Z^rank + Z/d_1 + ... + Z/d_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Abelianization {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl Abelianization {
    pub fn is_infinite_cyclic(&self) -> bool {
        self.free_rank == 1 && self.torsion.is_empty()
    }
}

impl Presentation {
    pub fn new(names: Vec<String>, relators: Vec<FreeWord>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::Precondition("presentation needs at least one generator".into()));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::Precondition(format!("duplicate generator name '{n}'")));
            }
        }
        let g = names.len();
        for (k, r) in relators.iter().enumerate() {
            if r.is_identity() {
                return Err(Error::MalformedWord(format!("relator {k} is trivial")));
            }
            if r.max_generator().is_some_and(|m| m >= g) {
                return Err(Error::MalformedWord(format!(
                    "relator {k} references a generator outside 0..{g}"
                )));
            }
        }
        Ok(Presentation {
            names,
            relators,
            peripheral: BTreeMap::new(),
            kind: PresentationKind::General,
        })
    }

    /// Generators named `a, b, c, ...`.
    pub fn with_letter_names(gen_count: usize, relators: Vec<FreeWord>) -> Result<Self> {
        if gen_count > 26 {
            return Err(Error::ResourceCap(format!(
                "{gen_count} generators do not fit single-letter names"
            )));
        }
        let names = (0..gen_count)
            .map(|i| ((b'a' + i as u8) as char).to_string())
            .collect();
        Presentation::new(names, relators)
    }

    /// Generic names `x0, x1, ...` for presentations that never go to text.
    pub fn with_indexed_names(gen_count: usize, relators: Vec<FreeWord>) -> Result<Self> {
        let names = (0..gen_count).map(|i| format!("x{i}")).collect();
        Presentation::new(names, relators)
    }

    pub fn generator_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }

    pub fn peripheral(&self) -> &BTreeMap<String, FreeWord> {
        &self.peripheral
    }

    pub fn peripheral_word(&self, label: &str) -> Option<&FreeWord> {
        self.peripheral.get(label)
    }

    pub fn kind(&self) -> PresentationKind {
        self.kind
    }

    pub fn with_kind(mut self, kind: PresentationKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn with_peripheral(mut self, label: &str, w: FreeWord) -> Result<Self> {
        if w.max_generator().is_some_and(|m| m >= self.generator_count()) {
            return Err(Error::MalformedWord(format!(
                "peripheral '{label}' references an unknown generator"
            )));
        }
        self.peripheral.insert(label.to_string(), w);
        Ok(self)
    }

    /// Generators minus relators.
    pub fn deficiency(&self) -> i64 {
        self.generator_count() as i64 - self.relators.len() as i64
    }

    pub fn with_relator(&self, r: FreeWord) -> Result<Self> {
        let mut relators = self.relators.clone();
        relators.push(r);
        let mut p = Presentation::new(self.names.clone(), relators)?;
        p.peripheral = self.peripheral.clone();
        p.kind = self.kind;
        Ok(p)
    }

    pub fn without_relator(&self, index: usize) -> Self {
        let mut p = self.clone();
        p.relators.remove(index);
        p
    }

    /// Drop every relator that coincides (up to cyclic permutation and
    /// inversion) with the declared `longitude`, recovering the knot group
    /// from a zero-surgery presentation.
    pub fn knot_exterior(&self) -> Result<Self> {
        let lambda = self.peripheral_word("longitude").ok_or_else(|| {
            Error::Precondition("no peripheral longitude declared".into())
        })?;
        let mut p = self.clone();
        let before = p.relators.len();
        p.relators.retain(|r| !r.same_relator(lambda));
        if p.relators.len() == before {
            return Err(Error::Precondition(
                "the longitude does not appear among the relators".into(),
            ));
        }
        p.kind = if p.is_wirtinger_form() {
            PresentationKind::Wirtinger
        } else {
            PresentationKind::General
        };
        Ok(p)
    }

    /// Relator-by-generator matrix of exponent sums.
    pub fn exponent_matrix(&self) -> Vec<Vec<i64>> {
        let g = self.generator_count();
        self.relators.iter().map(|r| r.exponent_vector(g)).collect()
    }

    pub fn abelianization(&self) -> Abelianization {
        let inv = smith_invariants(&self.exponent_matrix());
        let rank = inv.len();
        Abelianization {
            free_rank: self.generator_count() - rank,
            torsion: inv.into_iter().filter(|d| !d.is_one() && !d.is_zero()).collect(),
        }
    }

    /// The surjection onto Z through the abelianization, valid when H_1 = Z.
    /// Sign fixed so the first nonzero value is positive.
    pub fn abelianization_class(&self) -> Result<Vec<i64>> {
        let ab = self.abelianization();
        if !ab.is_infinite_cyclic() {
            return Err(Error::Precondition(format!(
                "abelianization is Z^{} with torsion {:?}, not Z",
                ab.free_rank, ab.torsion
            )));
        }
        let mut kernel = integer_kernel(&self.exponent_matrix(), self.generator_count());
        Ok(kernel.remove(0))
    }

    /// Pair `(x, z)` when `r` has the conjugation shape `x w z^-1 w^-1` for a
    /// single letter `w` (cyclically), or `x z^-1`.
    fn conjugation_pair(r: &FreeWord) -> Option<(usize, usize)> {
        let letters: Vec<(usize, i64)> = r.cyclic_reduction().letters().collect();
        match letters.len() {
            2 => {
                let (a, b) = (letters[0], letters[1]);
                (a.1 == -b.1).then_some((a.0, b.0))
            }
            4 => (0..4).find_map(|k| {
                let l = |i: usize| letters[(k + i) % 4];
                let (x, w1, z, w2) = (l(0), l(1), l(2), l(3));
                (x.1 == 1 && z.1 == -1 && w1.0 == w2.0 && w1.1 == -w2.1)
                    .then_some((x.0, z.0))
            }),
            _ => None,
        }
    }

    /// Relators of conjugation shape, indexed.
    fn conjugation_relators(&self) -> Vec<(usize, usize, usize)> {
        self.relators
            .iter()
            .enumerate()
            .filter_map(|(k, r)| Self::conjugation_pair(r).map(|(x, z)| (k, x, z)))
            .collect()
    }

    fn conjugation_components(&self, pairs: &[(usize, usize, usize)]) -> usize {
        let g = self.generator_count();
        let mut parent: Vec<usize> = (0..g).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let n = p[y];
                p[y] = r;
                y = n;
            }
            r
        }
        let mut components = g;
        for &(_, x, z) in pairs {
            let (a, b) = (find(&mut parent, x), find(&mut parent, z));
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
        components
    }

    /// True when the conjugation-shaped relators force every generator to be
    /// conjugate to every other one. Restricting all generator images to a
    /// single conjugacy class is then sound.
    pub fn all_generators_conjugate(&self) -> bool {
        let pairs = self.conjugation_relators();
        self.conjugation_components(&pairs) == 1
    }

    /// Every relator is a conjugation relator, they connect all generators,
    /// and there are `g - 1` or `g` of them.
    pub fn is_wirtinger_form(&self) -> bool {
        let g = self.generator_count();
        let r = self.relators.len();
        let pairs = self.conjugation_relators();
        pairs.len() == r && (r + 1 == g || r == g) && self.conjugation_components(&pairs) == 1
    }

    fn detect_kind(&self) -> PresentationKind {
        if self.is_wirtinger_form() {
            return PresentationKind::Wirtinger;
        }
        if let Some(lambda) = self.peripheral_word("longitude") {
            if self.relators.iter().any(|r| r.same_relator(lambda)) {
                if let Ok(ext) = self.knot_exterior() {
                    if ext.is_wirtinger_form() {
                        return PresentationKind::ZeroSurgery;
                    }
                }
            }
        }
        PresentationKind::General
    }

    /// Parse the line-oriented text format:
    ///
    /// ```text
    /// gens: a b c
    /// rel: abAB        # upper case = inverse
    /// peripheral longitude: ...
    /// ```
    pub fn parse(text: &str) -> Result<Self> {
        let mut names: Option<Vec<String>> = None;
        let mut rels: Vec<(usize, &str)> = Vec::new();
        let mut periph: Vec<(usize, String, &str)> = Vec::new();
        let mut offset = 0;
        for raw_line in text.split('\n') {
            let line_start = offset;
            offset += raw_line.len() + 1;
            let line = raw_line.split('#').next().unwrap_or("").trim_end_matches('\r');
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            let pos = line_start + (line.len() - line.trim_start().len());
            let Some((key, value)) = trimmed.split_once(':') else {
                return Err(Error::parse(pos, format!("expected 'key: value', got '{trimmed}'")));
            };
            let value_pos = pos + key.len() + 1 + (value.len() - value.trim_start().len());
            let key = key.trim();
            let value = value.trim();
            match key {
                "gens" => {
                    if names.is_some() {
                        return Err(Error::parse(pos, "duplicate 'gens' line"));
                    }
                    let list: Vec<String> = value.split_whitespace().map(str::to_string).collect();
                    for n in &list {
                        let mut chars = n.chars();
                        let ok = matches!((chars.next(), chars.next()), (Some(c), None) if c.is_ascii_lowercase());
                        if !ok {
                            return Err(Error::parse(
                                value_pos,
                                format!("generator name '{n}' must be a single lower-case letter"),
                            ));
                        }
                    }
                    if list.is_empty() {
                        return Err(Error::parse(value_pos, "no generators listed"));
                    }
                    names = Some(list);
                }
                "rel" => rels.push((value_pos, value)),
                _ => {
                    if let Some(label) = key.strip_prefix("peripheral") {
                        let label = label.trim();
                        if label.is_empty() {
                            return Err(Error::parse(pos, "peripheral line needs a label"));
                        }
                        periph.push((value_pos, label.to_string(), value));
                    } else {
                        return Err(Error::parse(pos, format!("unknown key '{key}'")));
                    }
                }
            }
        }
        let names = names.ok_or_else(|| Error::parse(0, "missing 'gens' line"))?;
        let word = |pos: usize, text: &str| -> Result<FreeWord> {
            FreeWord::parse_letters(text, &names).map_err(|e| match e {
                Error::Parse { position, message } => Error::parse(pos + position, message),
                other => other,
            })
        };
        let mut relators = Vec::new();
        for (pos, text) in rels {
            if text.is_empty() {
                return Err(Error::parse(pos, "empty relator"));
            }
            let w = word(pos, text)?;
            if w.is_identity() {
                return Err(Error::parse(pos, format!("relator '{text}' reduces to the identity")));
            }
            relators.push(w);
        }
        let mut p = Presentation::new(names.clone(), relators)?;
        for (pos, label, text) in periph {
            let w = word(pos, text)?;
            p = p.with_peripheral(&label, w)?;
        }
        p.kind = p.detect_kind();
        Ok(p)
    }

    /// Emit the text format. Fails when a generator name is not a single letter.
    pub fn to_text(&self) -> Result<String> {
        if self.names.iter().any(|n| n.chars().count() != 1) {
            return Err(Error::Precondition(
                "text format needs single-letter generator names".into(),
            ));
        }
        let mut out = String::new();
        writeln!(out, "gens: {}", self.names.join(" ")).unwrap();
        for r in &self.relators {
            writeln!(out, "rel: {}", r.to_letters(&self.names)).unwrap();
        }
        for (label, w) in &self.peripheral {
            writeln!(out, "peripheral {label}: {}", w.to_letters(&self.names)).unwrap();
        }
        Ok(out)
    }

    /// Stable textual key used for hashing; works for any generator names.
    pub fn canonical_form(&self) -> String {
        let mut out = format!("g={};", self.generator_count());
        for r in &self.relators {
            for s in r.syllables() {
                write!(out, "{}^{} ", s.gen, s.exp).unwrap();
            }
            out.push(';');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "gens: a b\nrel: abaBAB # aba = bab\n";

    #[test]
    fn parse_trefoil() {
        let p = Presentation::parse(TREFOIL).unwrap();
        assert_eq!(p.generator_count(), 2);
        assert_eq!(p.relators().len(), 1);
        assert!(p.abelianization().is_infinite_cyclic());
        assert_eq!(p.abelianization_class().unwrap(), vec![1, 1]);
    }

    #[test]
    fn text_round_trip() {
        let text = "gens: a b c\nrel: abCB\nrel: bcAC\nperipheral longitude: cAbc\n";
        let p = Presentation::parse(text).unwrap();
        assert_eq!(p.to_text().unwrap(), text);
        assert_eq!(Presentation::parse(&p.to_text().unwrap()).unwrap(), p);
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = Presentation::parse("gens: a b\nrel: abz\n").unwrap_err();
        assert_eq!(err, Error::parse(10 + 5 + 2, "unknown generator letter 'z'"));
        assert!(Presentation::parse("rel: ab\n").is_err());
        assert!(Presentation::parse("gens: a bb\n").is_err());
        assert!(Presentation::parse("gens: a\nrel: aA\n").is_err());
    }

    #[test]
    fn torus_abelianization() {
        let p = Presentation::parse("gens: x y\nrel: xyXY\n").unwrap();
        let ab = p.abelianization();
        assert_eq!(ab.free_rank, 2);
        assert!(p.abelianization_class().is_err());
    }

    #[test]
    fn finite_cyclic() {
        let p = Presentation::parse("gens: x\nrel: xxxxx\n").unwrap();
        let ab = p.abelianization();
        assert_eq!(ab.free_rank, 0);
        assert_eq!(ab.torsion, vec![BigInt::from(5)]);
    }

    #[test]
    fn wirtinger_shape_detection() {
        let p = Presentation::parse("gens: a b c\nrel: abCB\nrel: bcAC\n").unwrap();
        assert!(p.is_wirtinger_form());
        assert_eq!(p.kind(), PresentationKind::Wirtinger);
        assert!(p.all_generators_conjugate());
        let q = Presentation::parse(TREFOIL).unwrap();
        assert!(!q.all_generators_conjugate());
    }
}
