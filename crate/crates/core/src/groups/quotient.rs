use std::collections::BTreeMap;
use std::sync::Arc;

use super::{Perm, PermGroup};
use crate::error::{Error, Result};
use crate::fpgroup::{evaluate_hom, FreeWord, Presentation};

/// A homomorphism from a presented group to a permutation group, given by
/// generator images. Construction checks that every relator dies.
#[derive(Clone, Debug)]
pub struct FiniteQuotient {
    source: Presentation,
    target: Arc<PermGroup>,
    images: Vec<usize>,
    surjective: bool,
}

impl PartialEq for FiniteQuotient {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images && self.target == other.target && self.source == other.source
    }
}

impl FiniteQuotient {
    pub fn new(source: Presentation, target: Arc<PermGroup>, images: Vec<usize>) -> Result<Self> {
        if images.len() != source.generator_count() {
            return Err(Error::Precondition(format!(
                "{} images for {} generators",
                images.len(),
                source.generator_count()
            )));
        }
        if images.iter().any(|&i| i >= target.order()) {
            return Err(Error::Precondition("image index outside the group".into()));
        }
        for (k, r) in source.relators().iter().enumerate() {
            if evaluate_hom(target.as_ref(), &images, r) != target.identity_index() {
                return Err(Error::Precondition(format!(
                    "relator {k} ({}) does not map to the identity",
                    r.to_letters(source.names())
                )));
            }
        }
        let surjective = target.is_generated_by(&images);
        Ok(FiniteQuotient {
            source,
            target,
            images,
            surjective,
        })
    }

    /// The map onto the trivial group.
    pub fn trivial(source: Presentation) -> Self {
        let g = source.generator_count();
        FiniteQuotient::new(source, Arc::new(PermGroup::trivial()), vec![0; g])
            .expect("trivial map kills every relator")
    }

    /// Images given as permutations (not indices).
    pub fn from_perms(source: Presentation, target: Arc<PermGroup>, perms: &[Perm]) -> Result<Self> {
        let images = perms
            .iter()
            .map(|p| {
                target
                    .index_of(p)
                    .ok_or_else(|| Error::Precondition(format!("{p} is not in {}", target.name())))
            })
            .collect::<Result<Vec<_>>>()?;
        FiniteQuotient::new(source, target, images)
    }

    /// Read a `generator name -> cycle notation` map. With `target = None`
    /// the target is the subgroup of `Sym(n)` generated by the images, `n`
    /// being the largest point mentioned.
    pub fn from_cycle_map(
        source: Presentation,
        target: Option<Arc<PermGroup>>,
        map: &BTreeMap<String, String>,
    ) -> Result<Self> {
        for key in map.keys() {
            if !source.names().contains(key) {
                return Err(Error::Precondition(format!("hom mentions unknown generator '{key}'")));
            }
        }
        let texts = source
            .names()
            .iter()
            .map(|n| {
                map.get(n)
                    .map(String::as_str)
                    .ok_or_else(|| Error::Precondition(format!("hom has no image for '{n}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        let degree = match &target {
            Some(t) => t.degree(),
            None => texts.iter().map(|t| max_point(t)).max().unwrap_or(1).max(1),
        };
        let perms = texts
            .iter()
            .map(|t| Perm::parse_cycles(t, degree))
            .collect::<Result<Vec<_>>>()?;
        let target = match target {
            Some(t) => t,
            None => Arc::new(named_or_generated(degree, &perms)?),
        };
        FiniteQuotient::from_perms(source, target, &perms)
    }

    /// `generator name -> cycle notation`.
    pub fn to_cycle_map(&self) -> BTreeMap<String, String> {
        self.source
            .names()
            .iter()
            .zip(&self.images)
            .map(|(n, &g)| (n.clone(), self.target.element(g).to_string()))
            .collect()
    }

    pub fn source(&self) -> &Presentation {
        &self.source
    }

    pub fn target(&self) -> &Arc<PermGroup> {
        &self.target
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_surjective(&self) -> bool {
        self.surjective
    }

    pub fn evaluate(&self, w: &FreeWord) -> usize {
        evaluate_hom(self.target.as_ref(), &self.images, w)
    }

    /// Elements of the image subgroup, sorted.
    pub fn image_elements(&self) -> Vec<usize> {
        self.target.closure(&self.images)
    }

    /// `x -> h alpha(x) h^-1`.
    pub fn conjugated_by(&self, h: usize) -> Self {
        let images = self.images.iter().map(|&g| self.target.conjugate(h, g)).collect();
        FiniteQuotient {
            source: self.source.clone(),
            target: self.target.clone(),
            images,
            surjective: self.surjective,
        }
    }

    /// Same images on another presentation with the same generators (e.g.
    /// the knot exterior of a zero surgery).
    pub fn restricted_to(&self, source: Presentation) -> Result<Self> {
        FiniteQuotient::new(source, self.target.clone(), self.images.clone())
    }
}

/// The full symmetric or alternating group when the images generate it
/// (so the target gets its usual name), otherwise the generated subgroup.
fn named_or_generated(degree: usize, perms: &[Perm]) -> Result<PermGroup> {
    let g = PermGroup::generated_by(degree, perms, super::DEFAULT_ORDER_CAP)?;
    let full: usize = (1..=degree).product();
    let named = if g.order() == full {
        PermGroup::symmetric(degree)?
    } else if degree >= 2 && g.order() * 2 == full && perms.iter().all(Perm::is_even) {
        PermGroup::alternating(degree)?
    } else {
        return Ok(g);
    };
    Ok(named)
}

/// Largest 1-based point mentioned in cycle notation, using the same
/// packed-digit rule as [`Perm::parse_cycles`].
fn max_point(text: &str) -> usize {
    text.split(['(', ')'])
        .map(|body| {
            let tokens: Vec<&str> = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .collect();
            if tokens.len() == 1 && tokens[0].len() > 1 {
                tokens[0].chars().filter_map(|c| c.to_digit(10)).max().unwrap_or(0) as usize
            } else {
                tokens.iter().filter_map(|t| t.parse().ok()).max().unwrap_or(0)
            }
        })
        .max()
        .unwrap_or(0)
}
