//! Exact computation of twisted Alexander polynomials of finitely presented
//! groups, enumeration of finite quotients, and the complexity bounds and
//! monicity obstruction built on top of them.
//!
//! The pipeline is:
//!
//! 1. build a [`Presentation`] (by hand, from the text format, or from a knot
//!    diagram via [`knot`]),
//! 2. find epimorphisms onto small permutation groups with [`groups::enumerate_homs`],
//! 3. specialize the Fox matrix through `(phi, alpha)` and take determinants or
//!    gcds of minors with [`twisted::twisted_alexander`],
//! 4. turn degrees into bounds and verdicts with [`obstruct`].
//!
//! ```
//! use std::sync::Arc;
//! use twistal::groups::{enumerate_homs, SearchOptions};
//! use twistal::twisted::twisted_alexander;
//! use twistal::{CohomClass, Method, PermGroup, Presentation, Ring};
//!
//! let p = Presentation::parse("gens: a b\nrel: abaBAB\n")?;
//! let phi = CohomClass::abelianization(&p)?;
//! let s3 = Arc::new(PermGroup::symmetric(3)?);
//! let opts = SearchOptions { surjective_only: true, ..SearchOptions::default() };
//! for q in enumerate_homs(&p, s3, opts)? {
//!     let r = twisted_alexander(&p, &phi, &q, &Ring::Z, Method::WadaColumnDeletion)?;
//!     assert_eq!(r.h1_degree.finite(), Some(8));
//! }
//! # Ok::<(), twistal::Error>(())
//! ```

pub mod error;
pub mod fixtures;
pub mod fpgroup;
pub mod groups;
pub mod knot;
pub mod laurent;
pub mod obstruct;
pub mod twisted;

pub use error::{Error, Result};
pub use fpgroup::{FreeWord, GroupRingElement, Presentation, PresentationKind, SubgroupPresentation};
pub use groups::{FiniteQuotient, Perm, PermGroup, RegularRep};
pub use laurent::{Degree, FiniteField, LaurentPoly, PolyMatrix, Ring};
pub use obstruct::{BoundRow, BundleData, ComplexityReport};
pub use twisted::{CohomClass, Method, TwistedAlexResult};
