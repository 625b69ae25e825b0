use std::collections::VecDeque;

use super::{FreeWord, Presentation};
use crate::error::{Error, Result};
use crate::groups::FiniteQuotient;

/// A presentation of the kernel of a finite quotient, with the bookkeeping
/// needed to move words between the kernel and its parent.
#[derive(Clone, Debug)]
pub struct SubgroupPresentation {
    parent: Presentation,
    /// Coset `i` corresponds to the image element `cosets[i]`; coset 0 is
    /// the identity.
    cosets: Vec<usize>,
    coset_of: Vec<Option<usize>>,
    transversal: Vec<FreeWord>,
    /// Schreier generators as words in the parent generators.
    generators: Vec<FreeWord>,
    /// `edge_gen[c * g + x]` is the kernel generator for coset `c` and parent
    /// generator `x`, or `None` for a tree edge.
    edge_gen: Vec<Option<usize>>,
    quotient: FiniteQuotient,
    presentation: Presentation,
}

/// Reidemeister–Schreier rewriting for `ker q`.
///
/// The transversal is a breadth-first spanning tree of the coset graph with
/// edges tried in the order `x0, x0^-1, x1, x1^-1, ...`. Every Schreier
/// generator `rep(c) x rep(c x)^-1` that is not freely trivial becomes a
/// kernel generator; every conjugate `rep(c) r rep(c)^-1` of a relator is
/// rewritten into a kernel relator.
pub fn reidemeister_schreier(p: &Presentation, q: &FiniteQuotient) -> Result<SubgroupPresentation> {
    if q.source().generator_count() != p.generator_count() {
        return Err(Error::Precondition(
            "quotient is defined on a different generator set".into(),
        ));
    }
    let group = q.target().clone();
    for (k, r) in p.relators().iter().enumerate() {
        if q.evaluate(r) != group.identity_index() {
            return Err(Error::Precondition(format!(
                "relator {k} is not killed by the quotient map"
            )));
        }
    }
    let g = p.generator_count();
    let images = q.images();

    let mut coset_of = vec![None; group.order()];
    let mut cosets = vec![group.identity_index()];
    let mut transversal = vec![FreeWord::identity()];
    coset_of[group.identity_index()] = Some(0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        for x in 0..g {
            for exp in [1i64, -1] {
                let step = if exp > 0 { images[x] } else { group.inv(images[x]) };
                let next = group.mul(cosets[c], step);
                if coset_of[next].is_none() {
                    coset_of[next] = Some(cosets.len());
                    cosets.push(next);
                    transversal.push(transversal[c].mul(&FreeWord::power_of(x, exp)));
                    queue.push_back(cosets.len() - 1);
                }
            }
        }
    }

    let index = cosets.len();
    let mut generators = Vec::new();
    let mut edge_gen = vec![None; index * g];
    for c in 0..index {
        for x in 0..g {
            let target = coset_of[group.mul(cosets[c], images[x])].expect("cosets are closed");
            let w = transversal[c]
                .mul(&FreeWord::generator(x))
                .mul(&transversal[target].inverse());
            if !w.is_identity() {
                edge_gen[c * g + x] = Some(generators.len());
                generators.push(w);
            }
        }
    }

    let mut sub = SubgroupPresentation {
        parent: p.clone(),
        cosets,
        coset_of,
        transversal,
        generators,
        edge_gen,
        quotient: q.clone(),
        presentation: Presentation::with_indexed_names(1, Vec::new())?,
    };
    let mut relators = Vec::new();
    for c in 0..index {
        for r in p.relators() {
            let (w, end) = sub.walk(c, r);
            debug_assert_eq!(end, c);
            if !w.is_identity() {
                relators.push(w);
            }
        }
    }
    sub.presentation = Presentation::with_indexed_names(sub.generators.len(), relators)?;
    Ok(sub)
}

impl SubgroupPresentation {
    pub fn parent(&self) -> &Presentation {
        &self.parent
    }

    pub fn quotient(&self) -> &FiniteQuotient {
        &self.quotient
    }

    /// Number of cosets, i.e. the order of the image of the quotient map.
    pub fn index(&self) -> usize {
        self.cosets.len()
    }

    pub fn transversal(&self) -> &[FreeWord] {
        &self.transversal
    }

    /// Image element represented by each coset.
    pub fn coset_elements(&self) -> &[usize] {
        &self.cosets
    }

    /// Kernel generators written in the parent's generators.
    pub fn generators(&self) -> &[FreeWord] {
        &self.generators
    }

    pub fn relators(&self) -> &[FreeWord] {
        self.presentation.relators()
    }

    /// The kernel as a presentation in its own right.
    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    /// Rewrite a parent word lying in the kernel as a word in the kernel
    /// generators.
    pub fn rewrite(&self, w: &FreeWord) -> Result<FreeWord> {
        if w.max_generator().is_some_and(|m| m >= self.parent.generator_count()) {
            return Err(Error::MalformedWord(format!(
                "{w} uses a generator the parent does not have"
            )));
        }
        let (out, end) = self.walk(0, w);
        if end != 0 {
            return Err(Error::Precondition(format!("{w} is not in the kernel")));
        }
        Ok(out)
    }

    /// Substitute each kernel generator by its parent word.
    pub fn lift(&self, w: &FreeWord) -> FreeWord {
        w.syllables().iter().fold(FreeWord::identity(), |acc, s| {
            acc.mul(&self.generators[s.gen].pow(s.exp))
        })
    }

    /// Trace `w` through the coset graph from coset `start`, collecting the
    /// kernel generators crossed. Returns the word and the final coset.
    fn walk(&self, start: usize, w: &FreeWord) -> (FreeWord, usize) {
        let g = self.parent.generator_count();
        let group = self.quotient.target();
        let images = self.quotient.images();
        let mut coset = start;
        let mut raw = Vec::new();
        for (x, e) in w.letters() {
            if e > 0 {
                if let Some(k) = self.edge_gen[coset * g + x] {
                    raw.push((k, 1));
                }
                coset = self.coset_of[group.mul(self.cosets[coset], images[x])]
                    .expect("cosets are closed");
            } else {
                coset = self.coset_of[group.mul(self.cosets[coset], group.inv(images[x]))]
                    .expect("cosets are closed");
                if let Some(k) = self.edge_gen[coset * g + x] {
                    raw.push((k, -1));
                }
            }
        }
        (FreeWord::from_syllables(raw), coset)
    }
}
