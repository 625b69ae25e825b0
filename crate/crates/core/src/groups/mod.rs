//! Concrete finite permutation groups, their regular representations, and
//! epimorphism search from finitely presented groups.

mod group;
mod perm;
mod quotient;
mod regular;
mod search;

pub use group::{Family, PermGroup, DEFAULT_ORDER_CAP};
pub use perm::Perm;
pub use quotient::FiniteQuotient;
pub use regular::{regular_rep, RegularRep};
pub use search::{enumerate_homs, ConjugacyPrune, HomSearch, SearchOptions};
