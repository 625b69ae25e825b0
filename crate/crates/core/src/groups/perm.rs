use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, ..., n-1}` stored by images.
///
/// Products compose right to left: `(p * q)(x) = p(q(x))`, so a word
/// `g_1 g_2 ... g_k` acts by applying `g_k` first. This is the convention
/// under which cycle-notation homomorphism tables are read.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u8).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n > 255 {
            return Err(Error::ResourceCap(format!("permutation degree {n} > 255")));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::Precondition(format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Perm {
            images: images.into_iter().map(|x| x as u8).collect(),
        })
    }

    /// Build from 0-based cycles on `degree` points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for c in cycles {
            for &x in c {
                if x >= degree || used[x] {
                    return Err(Error::Precondition(format!(
                        "cycle point {x} out of range or repeated"
                    )));
                }
                used[x] = true;
            }
            for i in 0..c.len() {
                images[c[i]] = c[(i + 1) % c.len()];
            }
        }
        Perm::from_images(images)
    }

    /// Parse cycle notation with 1-based points: `(1 4 2)(3 5)`, `(142)`, `()`.
    /// Points written without separators must be single digits.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        if rest.is_empty() {
            return Err(Error::parse(0, "empty permutation"));
        }
        let mut offset = text.len() - text.trim_start().len();
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::parse(offset, "expected '('"))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::parse(offset, "unclosed cycle"))?;
            let body = &open[..close];
            let tokens: Vec<&str> = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .collect();
            let mut cycle = Vec::new();
            let mut push = |s: &str| -> Result<()> {
                let v: usize = s
                    .parse()
                    .map_err(|_| Error::parse(offset, format!("bad point '{s}'")))?;
                if v == 0 || v > degree {
                    return Err(Error::parse(offset, format!("point {v} outside 1..={degree}")));
                }
                cycle.push(v - 1);
                Ok(())
            };
            if tokens.len() == 1 && tokens[0].len() > 1 {
                for ch in tokens[0].chars() {
                    push(&ch.to_string())?;
                }
            } else {
                for t in tokens {
                    push(t)?;
                }
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            let consumed = 1 + close + 1;
            offset += consumed;
            let after = &open[close + 1..];
            offset += after.len() - after.trim_start().len();
            rest = after.trim_start();
        }
        Perm::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&x| x as usize)
    }

    /// `self * other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// Disjoint cycles of length ≥ 2, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut c = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                c.push(x);
                x = self.apply(x);
            }
            out.push(c);
        }
        out
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .map(|c| c.len())
            .fold(1, num_integer::lcm)
    }
}

impl fmt::Display for Perm {
    /// 1-based cycle notation, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_notation_round_trip() {
        let p = Perm::parse_cycles("(142)", 5).unwrap();
        assert_eq!(p.apply(0), 3);
        assert_eq!(p.apply(3), 1);
        assert_eq!(p.apply(1), 0);
        assert_eq!(p.to_string(), "(1 4 2)");
        assert_eq!(Perm::parse_cycles("(1 4 2)", 5).unwrap(), p);
        assert_eq!(Perm::parse_cycles("()", 3).unwrap(), Perm::identity(3));
        assert_eq!(Perm::parse_cycles("(1 2)(3 4)", 4).unwrap().order(), 2);
    }

    #[test]
    fn composition_is_right_to_left() {
        let a = Perm::parse_cycles("(1 2)", 3).unwrap();
        let b = Perm::parse_cycles("(2 3)", 3).unwrap();
        // 0-based: ab(0) = a(0) = 1, ab(1) = a(2) = 2
        let ab = a.compose(&b);
        assert_eq!(ab.apply(1), 2);
        assert_eq!(ab.apply(0), 1);
        assert_eq!(ab.to_string(), "(1 2 3)");
    }

    #[test]
    fn bad_cycles() {
        assert!(Perm::parse_cycles("(1 6)", 5).is_err());
        assert!(Perm::parse_cycles("(1 1)", 5).is_err());
        assert!(Perm::parse_cycles("1 2", 5).is_err());
        assert!(Perm::parse_cycles("(1 2", 5).is_err());
    }
}
