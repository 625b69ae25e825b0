//! Knot diagram codes (PD, DT, braid closures) and the presentations read
//! off them.

mod braid;
mod dt;
mod lex;
mod pd;
mod wirtinger;

pub use braid::parse_braid;
pub use dt::parse_dt;
pub use pd::{parse_pd, PDCode};
pub use wirtinger::{wirtinger, zero_surgery, DiagramPresentation};

use crate::error::Result;
use crate::fpgroup::Presentation;

/// Input encodings understood by [`parse_knot`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KnotFormat {
    Pd,
    Dt,
    Braid,
}

pub fn parse_knot(format: KnotFormat, text: &str) -> Result<PDCode> {
    match format {
        KnotFormat::Pd => parse_pd(text),
        KnotFormat::Dt => parse_dt(text),
        KnotFormat::Braid => parse_braid(text),
    }
}

/// Wirtinger presentation of the knot exterior straight from text.
pub fn knot_group(format: KnotFormat, text: &str) -> Result<Presentation> {
    Ok(wirtinger(&parse_knot(format, text)?)?.presentation)
}
