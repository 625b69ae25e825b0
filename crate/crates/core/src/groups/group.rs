use std::collections::HashMap;
use std::fmt;

use super::Perm;
use crate::error::{Error, Result};
use crate::fpgroup::Group;

/// Default upper bound on group orders handled by the explicit tables.
pub const DEFAULT_ORDER_CAP: usize = 120;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Explicit,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cyclic(n) => write!(f, "Z{n}"),
            Family::Dihedral(n) => write!(f, "D{n}"),
            Family::Symmetric(n) => write!(f, "S{n}"),
            Family::Alternating(n) => write!(f, "A{n}"),
            Family::Explicit => write!(f, "explicit"),
        }
    }
}

/// A finite permutation group materialized as a sorted element list with a
/// full multiplication table.
///
/// Elements are addressed by their index in the list; the list is sorted by
/// image tuple, so index 0 is the identity and "least index" means "least
/// encoding".
#[derive(Clone, Debug)]
pub struct PermGroup {
    family: Family,
    degree: usize,
    elements: Vec<Perm>,
    lookup: HashMap<Perm, usize>,
    table: Vec<u32>,
    inverses: Vec<usize>,
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

impl PermGroup {
    /// Closure of `generators` inside `Sym(degree)`.
    pub fn generated_by(degree: usize, generators: &[Perm], cap: usize) -> Result<Self> {
        Self::build(Family::Explicit, degree, generators, cap)
    }

    fn build(family: Family, degree: usize, generators: &[Perm], cap: usize) -> Result<Self> {
        if generators.iter().any(|g| g.degree() != degree) {
            return Err(Error::Precondition("generator degree mismatch".into()));
        }
        let id = Perm::identity(degree);
        let mut elements = vec![id.clone()];
        let mut seen: HashMap<Perm, ()> = HashMap::new();
        seen.insert(id, ());
        let mut frontier = 0;
        while frontier < elements.len() {
            let x = elements[frontier].clone();
            frontier += 1;
            for g in generators {
                let y = g.compose(&x);
                if seen.insert(y.clone(), ()).is_none() {
                    elements.push(y);
                    if elements.len() > cap {
                        return Err(Error::ResourceCap(format!(
                            "group order exceeds the cap of {cap}"
                        )));
                    }
                }
            }
        }
        elements.sort();
        let lookup: HashMap<Perm, usize> =
            elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let n = elements.len();
        let mut table = vec![0u32; n * n];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                table[i * n + j] = lookup[&a.compose(b)] as u32;
            }
        }
        let inverses = elements.iter().map(|a| lookup[&a.inverse()]).collect();
        Ok(PermGroup {
            family,
            degree,
            elements,
            lookup,
            table,
            inverses,
        })
    }

    pub fn trivial() -> Self {
        Self::build(Family::Cyclic(1), 1, &[], 1).expect("trivial group")
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        Self::cyclic_with_cap(n, DEFAULT_ORDER_CAP)
    }

    pub fn cyclic_with_cap(n: usize, cap: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("Z0 is not finite".into()));
        }
        if n == 1 {
            return Ok(Self::trivial());
        }
        let rot = Perm::from_images((0..n).map(|i| (i + 1) % n).collect())?;
        Self::build(Family::Cyclic(n), n, &[rot], cap)
    }

    /// Symmetries of the regular `n`-gon, order `2n` (`n >= 3`).
    pub fn dihedral(n: usize) -> Result<Self> {
        Self::dihedral_with_cap(n, DEFAULT_ORDER_CAP)
    }

    pub fn dihedral_with_cap(n: usize, cap: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Precondition(format!("D{n} needs n >= 3")));
        }
        let rot = Perm::from_images((0..n).map(|i| (i + 1) % n).collect())?;
        let refl = Perm::from_images((0..n).map(|i| (n - i) % n).collect())?;
        Self::build(Family::Dihedral(n), n, &[rot, refl], cap)
    }

    pub fn symmetric(n: usize) -> Result<Self> {
        Self::symmetric_with_cap(n, DEFAULT_ORDER_CAP)
    }

    pub fn symmetric_with_cap(n: usize, cap: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("S0 is not supported".into()));
        }
        if n == 1 {
            return Ok(Self::trivial());
        }
        let mut gens = vec![Perm::from_cycles(n, &[vec![0, 1]])?];
        if n > 2 {
            gens.push(Perm::from_images((0..n).map(|i| (i + 1) % n).collect())?);
        }
        let g = Self::build(Family::Symmetric(n), n, &gens, cap)?;
        Ok(g)
    }

    pub fn alternating(n: usize) -> Result<Self> {
        Self::alternating_with_cap(n, DEFAULT_ORDER_CAP)
    }

    pub fn alternating_with_cap(n: usize, cap: usize) -> Result<Self> {
        if n < 3 {
            let mut g = Self::trivial();
            g.family = Family::Alternating(n);
            return Ok(g);
        }
        let gens: Vec<Perm> = (2..n)
            .map(|k| Perm::from_cycles(n, &[vec![0, 1, k]]))
            .collect::<Result<_>>()?;
        Self::build(Family::Alternating(n), n, &gens, cap)
    }

    /// Parse `Z5`, `D4`, `S4`, `A5` (case-insensitive family letter).
    pub fn from_spec(spec: &str) -> Result<Self> {
        Self::from_spec_with_cap(spec, DEFAULT_ORDER_CAP)
    }

    pub fn from_spec_with_cap(spec: &str, cap: usize) -> Result<Self> {
        let spec = spec.trim();
        let mut chars = spec.chars();
        let family = chars
            .next()
            .ok_or_else(|| Error::parse(0, "empty group spec"))?;
        let n: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::parse(1, format!("bad group size in '{spec}'")))?;
        match family.to_ascii_uppercase() {
            'Z' | 'C' => Self::cyclic_with_cap(n, cap),
            'D' => Self::dihedral_with_cap(n, cap),
            'S' => Self::symmetric_with_cap(n, cap),
            'A' => Self::alternating_with_cap(n, cap),
            other => Err(Error::parse(0, format!("unknown group family '{other}'"))),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Short name used in reports: the family spec, or `<order>` for explicit groups.
    pub fn name(&self) -> String {
        match self.family {
            Family::Explicit => format!("G{}<S{}", self.order(), self.degree),
            f => f.to_string(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.lookup.get(p).copied()
    }

    pub fn identity_index(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.elements.len() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn pow(&self, a: usize, e: i64) -> usize {
        let base = if e < 0 { self.inv(a) } else { a };
        let mut acc = 0;
        for _ in 0..e.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn conjugate(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(h, g), self.inv(h))
    }

    /// Element indices of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut in_set = vec![false; self.order()];
        in_set[0] = true;
        let mut out = vec![0];
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            i += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !in_set[y] {
                    in_set[y] = true;
                    out.push(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_generated_by(&self, gens: &[usize]) -> bool {
        self.closure(gens).len() == self.order()
    }

    /// Conjugacy classes ordered by their least element; each class sorted.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for g in 0..n {
            if class_of[g] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut class: Vec<usize> = (0..n).map(|h| self.conjugate(h, g)).collect();
            class.sort_unstable();
            class.dedup();
            for &x in &class {
                class_of[x] = id;
            }
            classes.push(class);
        }
        classes
    }
}

impl Group for PermGroup {
    type Element = usize;

    fn identity(&self) -> usize {
        0
    }

    fn multiply(&self, a: &usize, b: &usize) -> usize {
        self.mul(*a, *b)
    }

    fn inverse(&self, a: &usize) -> usize {
        self.inv(*a)
    }
}
