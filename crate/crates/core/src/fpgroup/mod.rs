//! Free-group words, presentations, Fox calculus and Reidemeister–Schreier.

mod abelian;
mod fox;
mod presentation;
mod schreier;
mod word;

pub use abelian::{integer_kernel, smith_invariants};
pub use fox::{alexander_matrix, fox_derivative, GroupRingElement};
pub use presentation::{Abelianization, Presentation, PresentationKind};
pub use schreier::{reidemeister_schreier, SubgroupPresentation};
pub use word::{reduce, FreeWord, Syllable};

/// Just enough group structure to evaluate words.
pub trait Group {
    type Element: Clone + PartialEq;

    fn identity(&self) -> Self::Element;
    fn multiply(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn inverse(&self, a: &Self::Element) -> Self::Element;
}

/// Extend a generator assignment to a homomorphism and apply it to `w`.
///
/// Panics if `w` mentions a generator with no image.
pub fn evaluate_hom<G: Group>(group: &G, images: &[G::Element], w: &FreeWord) -> G::Element {
    let mut acc = group.identity();
    for s in w.syllables() {
        let base = if s.exp > 0 {
            images[s.gen].clone()
        } else {
            group.inverse(&images[s.gen])
        };
        for _ in 0..s.exp.unsigned_abs() {
            acc = group.multiply(&acc, &base);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Integers mod n under addition.
    struct Cyclic(i64);

    impl Group for Cyclic {
        type Element = i64;
        fn identity(&self) -> i64 {
            0
        }
        fn multiply(&self, a: &i64, b: &i64) -> i64 {
            (a + b).rem_euclid(self.0)
        }
        fn inverse(&self, a: &i64) -> i64 {
            (-a).rem_euclid(self.0)
        }
    }

    #[test]
    fn identity_word_maps_to_identity() {
        assert_eq!(evaluate_hom(&Cyclic(5), &[3], &FreeWord::identity()), 0);
    }

    #[test]
    fn generator_maps_to_its_image() {
        assert_eq!(evaluate_hom(&Cyclic(7), &[2, 5], &FreeWord::generator(1)), 5);
    }

    #[test]
    fn powers_and_inverses() {
        let w = FreeWord::from_syllables([(0, 3), (1, -2)]);
        assert_eq!(evaluate_hom(&Cyclic(10), &[2, 1], &w), 4);
    }
}
