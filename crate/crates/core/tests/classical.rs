//! Untwisted Alexander polynomials of small knots against a table kept
//! independently of the diagram code.

use twistal::fixtures::{self, KNOT_TABLE};
use twistal::knot::{knot_group, KnotFormat};
use twistal::twisted::twisted_alexander;
use twistal::{CohomClass, Degree, FiniteQuotient, LaurentPoly, Method, Presentation, Ring};

fn untwisted(p: &Presentation, method: Method) -> twistal::TwistedAlexResult {
    let phi = CohomClass::abelianization(p).unwrap();
    let q = FiniteQuotient::trivial(p.clone());
    twisted_alexander(p, &phi, &q, &Ring::Z, method).unwrap()
}

fn group_of(code: &str) -> Presentation {
    let format = if code.starts_with("braid") { KnotFormat::Braid } else { KnotFormat::Dt };
    knot_group(format, code).unwrap()
}

#[test]
fn knot_table_alexander_polynomials() {
    for k in KNOT_TABLE {
        let p = group_of(k.code);
        let r = untwisted(&p, Method::GcdOfMinors);
        let expected = LaurentPoly::from_coeffs(&Ring::Z, k.alexander);
        assert!(r.numerator.associates(&expected), "{}: got {}", k.name, r.numerator);
        let w = untwisted(&p, Method::WadaColumnDeletion);
        assert!(w.numerator.associates(&expected), "{}: Wada numerator {}", k.name, w.numerator);
        assert_eq!(w.degree, r.degree.plus(-1), "{}", k.name);
        assert_eq!(w.h1_degree, r.degree, "{}", k.name);
    }
}

#[test]
fn presentation_fixtures() {
    let cases = [
        (fixtures::TREFOIL_PRES, vec![1, -1, 1]),
        (fixtures::FIGURE8_PRES, vec![1, -3, 1]),
        (fixtures::UNKNOT_PRES, vec![1]),
    ];
    for (text, coeffs) in cases {
        let p = Presentation::parse(text).unwrap();
        let r = untwisted(&p, Method::GcdOfMinors);
        assert!(r.numerator.associates(&LaurentPoly::from_coeffs(&Ring::Z, &coeffs)), "{text}: {}", r.numerator);
        assert_eq!(r.monic, Some(true));
    }
}

#[test]
fn conway_untwisted_is_one() {
    let p = fixtures::conway_knot();
    let r = untwisted(&p, Method::GcdOfMinors);
    assert!(r.numerator.is_one(), "{}", r.numerator);
    let w = untwisted(&p, Method::WadaColumnDeletion);
    assert_eq!(w.degree, Degree::Finite(-1));
    assert_eq!(w.h1_degree, Degree::Finite(0));
}
