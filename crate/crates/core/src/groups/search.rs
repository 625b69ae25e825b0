use std::sync::Arc;

use super::{FiniteQuotient, PermGroup, DEFAULT_ORDER_CAP};
use crate::error::{Error, Result};
use crate::fpgroup::{evaluate_hom, Presentation};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ConjugacyPrune {
    /// Prune only when the relators prove all generators conjugate.
    #[default]
    Auto,
    On,
    Off,
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub surjective_only: bool,
    /// Emit one representative per conjugacy orbit (the least image vector).
    pub up_to_conjugacy: bool,
    pub conjugacy_prune: ConjugacyPrune,
    pub max_results: Option<usize>,
    pub order_cap: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            surjective_only: false,
            up_to_conjugacy: false,
            conjugacy_prune: ConjugacyPrune::Auto,
            max_results: None,
            order_cap: DEFAULT_ORDER_CAP,
        }
    }
}

/// Depth-first backtracking over generator images.
///
/// Generators are assigned in an order that completes relators as early as
/// possible; each relator is checked at the depth where its last generator
/// gets an image. With conjugacy pruning every generator image is drawn from
/// one conjugacy class at a time.
pub struct HomSearch {
    source: Presentation,
    group: Arc<PermGroup>,
    order: Vec<usize>,
    checks: Vec<Vec<usize>>,
    pools: Vec<Vec<usize>>,
    pool: usize,
    cursor: Vec<usize>,
    depth: usize,
    images: Vec<usize>,
    opts: SearchOptions,
    emitted: usize,
    done: bool,
}

pub fn enumerate_homs(
    source: &Presentation,
    group: Arc<PermGroup>,
    opts: SearchOptions,
) -> Result<HomSearch> {
    if group.order() > opts.order_cap {
        return Err(Error::ResourceCap(format!(
            "|G| = {} exceeds the search cap {}",
            group.order(),
            opts.order_cap
        )));
    }
    let g = source.generator_count();
    let relator_gens: Vec<Vec<usize>> = source
        .relators()
        .iter()
        .map(|r| {
            let mut v: Vec<usize> = r.generators_used().collect();
            v.sort_unstable();
            v.dedup();
            v
        })
        .collect();

    // Greedy order: next generator is the one completing most relators,
    // ties broken by how many pending relators it touches, then by index.
    let mut assigned = vec![false; g];
    let mut order = Vec::with_capacity(g);
    for _ in 0..g {
        let score = |x: usize, assigned: &[bool]| {
            let mut completes = 0;
            let mut touches = 0;
            for gens in &relator_gens {
                if gens.contains(&x) {
                    touches += 1;
                    if gens.iter().all(|&y| y == x || assigned[y]) {
                        completes += 1;
                    }
                }
            }
            (completes, touches)
        };
        let best = (0..g)
            .filter(|&x| !assigned[x])
            .max_by(|&a, &b| score(a, &assigned).cmp(&score(b, &assigned)).then(b.cmp(&a)))
            .expect("unassigned generator remains");
        assigned[best] = true;
        order.push(best);
    }
    let mut position = vec![0; g];
    for (d, &x) in order.iter().enumerate() {
        position[x] = d;
    }
    let mut checks = vec![Vec::new(); g];
    for (k, gens) in relator_gens.iter().enumerate() {
        let d = gens.iter().map(|&x| position[x]).max().unwrap_or(0);
        checks[d].push(k);
    }

    let prune = match opts.conjugacy_prune {
        ConjugacyPrune::On => true,
        ConjugacyPrune::Off => false,
        ConjugacyPrune::Auto => source.all_generators_conjugate(),
    };
    let pools = if prune {
        group.conjugacy_classes()
    } else {
        vec![(0..group.order()).collect()]
    };

    Ok(HomSearch {
        source: source.clone(),
        group,
        order,
        checks,
        pools,
        pool: 0,
        cursor: vec![0; g],
        depth: 0,
        images: vec![0; g],
        opts,
        emitted: 0,
        done: false,
    })
}

impl HomSearch {
    fn checks_pass(&self, depth: usize) -> bool {
        self.checks[depth].iter().all(|&k| {
            evaluate_hom(self.group.as_ref(), &self.images, &self.source.relators()[k])
                == self.group.identity_index()
        })
    }

    fn is_orbit_minimum(&self) -> bool {
        (0..self.group.order()).all(|h| {
            let conj = self.images.iter().map(|&x| self.group.conjugate(h, x));
            conj.cmp(self.images.iter().copied()) != std::cmp::Ordering::Less
        })
    }

    fn accept(&self) -> Option<FiniteQuotient> {
        if self.opts.surjective_only && !self.group.is_generated_by(&self.images) {
            return None;
        }
        if self.opts.up_to_conjugacy && !self.is_orbit_minimum() {
            return None;
        }
        let q = FiniteQuotient::new(self.source.clone(), self.group.clone(), self.images.clone())
            .expect("search only completes assignments that kill every relator");
        Some(q)
    }
}

impl Iterator for HomSearch {
    type Item = FiniteQuotient;

    fn next(&mut self) -> Option<FiniteQuotient> {
        if self.done {
            return None;
        }
        if self.opts.max_results.is_some_and(|m| self.emitted >= m) {
            self.done = true;
            return None;
        }
        let g = self.order.len();
        loop {
            let d = self.depth;
            let pool = &self.pools[self.pool];
            if self.cursor[d] < pool.len() {
                let candidate = pool[self.cursor[d]];
                self.cursor[d] += 1;
                self.images[self.order[d]] = candidate;
                if !self.checks_pass(d) {
                    continue;
                }
                if d + 1 == g {
                    if let Some(q) = self.accept() {
                        self.emitted += 1;
                        return Some(q);
                    }
                    continue;
                }
                self.depth += 1;
                self.cursor[self.depth] = 0;
            } else if d == 0 {
                self.pool += 1;
                if self.pool == self.pools.len() {
                    self.done = true;
                    return None;
                }
                self.cursor[0] = 0;
            } else {
                self.depth -= 1;
            }
        }
    }
}
