//! Twisted Alexander polynomials from Fox matrices, divisibility of
//! cohomology classes, and the one-variable specialization checker.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fpgroup::{alexander_matrix, reidemeister_schreier, FreeWord, GroupRingElement, Presentation};
use crate::groups::{FiniteQuotient, RegularRep};
use crate::laurent::{Degree, LaurentPoly, PolyMatrix, Ring};

/// A homomorphism to `Z`, given by its values on the generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CohomClass {
    values: Vec<i64>,
}

impl CohomClass {
    /// Checks the length and that every relator has total weight zero.
    pub fn new(p: &Presentation, values: Vec<i64>) -> Result<Self> {
        if values.len() != p.generator_count() {
            return Err(Error::DimensionMismatch(format!(
                "{} values for {} generators",
                values.len(),
                p.generator_count()
            )));
        }
        let phi = CohomClass { values };
        for (k, r) in p.relators().iter().enumerate() {
            let w = phi.evaluate(r);
            if w != 0 {
                return Err(Error::Precondition(format!(
                    "phi has weight {w} on relator {k}, so it is not a class on this group"
                )));
            }
        }
        Ok(phi)
    }

    /// The generator of `Hom(G, Z)` when `H_1(G) = Z`.
    pub fn abelianization(p: &Presentation) -> Result<Self> {
        CohomClass::new(p, p.abelianization_class()?)
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn evaluate(&self, w: &FreeWord) -> i64 {
        w.syllables().iter().map(|s| s.exp * self.values[s.gen]).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }
}

/// Largest `n` with `phi / n` integral; 0 for the zero class.
pub fn divisibility(phi: &CohomClass) -> u64 {
    phi.values.iter().fold(0i64, |acc, &v| acc.gcd(&v)).unsigned_abs()
}

/// Divisibility of `phi` restricted to `ker q`, read off the Schreier
/// generators of a Reidemeister–Schreier presentation of the kernel.
pub fn divisibility_on_kernel(p: &Presentation, phi: &CohomClass, q: &FiniteQuotient) -> Result<u64> {
    let sub = reidemeister_schreier(p, q)?;
    Ok(sub
        .generators()
        .iter()
        .fold(0i64, |acc, w| acc.gcd(&phi.evaluate(w)))
        .unsigned_abs())
}

/// `phi` pulled back to the kernel presentation of `q`.
pub fn restrict_to_kernel(
    p: &Presentation,
    phi: &CohomClass,
    q: &FiniteQuotient,
) -> Result<(Presentation, CohomClass)> {
    let sub = reidemeister_schreier(p, q)?;
    let values = sub.generators().iter().map(|w| phi.evaluate(w)).collect();
    let kernel = sub.presentation().clone();
    let phi_k = CohomClass::new(&kernel, values)?;
    Ok((kernel, phi_k))
}

/// Dimension over the coefficient field of the twisted `H_0`, which is the
/// permutation module on the cosets of the image of `(alpha, phi)` in
/// `G x Z`. `None` when that image has infinite index (`phi` vanishes on
/// `ker alpha`).
pub fn h0_dimension(p: &Presentation, phi: &CohomClass, q: &FiniteQuotient) -> Result<Option<u64>> {
    let m = divisibility_on_kernel(p, phi, q)?;
    if m == 0 {
        return Ok(None);
    }
    // the image contains {1} x mZ, so work in G x Z/m
    let group = q.target();
    let m = m as i64;
    let gens: Vec<(usize, i64)> = q
        .images()
        .iter()
        .zip(phi.values())
        .map(|(&a, &v)| (a, v.rem_euclid(m)))
        .collect();
    let start = (group.identity_index(), 0i64);
    let mut seen = std::collections::HashSet::from([start]);
    let mut stack = vec![start];
    while let Some((g, k)) = stack.pop() {
        for &(a, v) in &gens {
            let next = (group.mul(a, g), (k + v) % m);
            if seen.insert(next) {
                stack.push(next);
            }
        }
    }
    Ok(Some(group.order() as u64 * m as u64 / seen.len() as u64))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    GcdOfMinors,
    WadaColumnDeletion,
}

impl Method {
    /// Column deletion when the presentation has (or can be trimmed to)
    /// deficiency one, gcd of minors otherwise.
    pub fn default_for(p: &Presentation) -> Method {
        if wada_presentation(p).is_some() {
            Method::WadaColumnDeletion
        } else {
            Method::GcdOfMinors
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::GcdOfMinors => "gcd-of-minors",
            Method::WadaColumnDeletion => "wada-column-deletion",
        })
    }
}

/// Outcome of one twisted Alexander computation. Polynomials are stored
/// unit-normalized.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistedAlexResult {
    pub ring: String,
    pub method: Method,
    /// For column deletion: the column block removed.
    pub deleted_column: Option<usize>,
    /// The gcd of minors, or the column-deleted determinant.
    pub numerator: LaurentPoly,
    /// For column deletion: `det(Phi(x_j) - 1)`.
    pub denominator: Option<LaurentPoly>,
    /// `numerator / denominator` when the division is exact.
    pub quotient: Option<LaurentPoly>,
    /// `deg numerator - deg denominator` (column deletion) or
    /// `deg numerator` (gcd of minors).
    pub degree: Degree,
    pub numerator_degree: Degree,
    /// Degree of the order of the twisted `H_1`: the gcd-of-minors degree,
    /// or for column deletion `degree + dim H_0`.
    pub h1_degree: Degree,
    /// Over `Z` only: numerator and denominator both have unit extreme
    /// coefficients.
    pub monic: Option<bool>,
    pub notes: Vec<String>,
}

impl TwistedAlexResult {
    /// The numerator, which is the polynomial for gcd of minors.
    pub fn polynomial(&self) -> &LaurentPoly {
        &self.numerator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }
}

/// Send every word `w` to `t^phi(w) rep(alpha(w))`. Entry `(k, i)` of the
/// Fox matrix becomes the block at rows `k|G|..`, columns `i|G|..`.
pub fn specialize(
    m: &[Vec<GroupRingElement>],
    phi: &CohomClass,
    q: &FiniteQuotient,
    ring: &Ring,
) -> Result<PolyMatrix> {
    let g = q.source().generator_count();
    if phi.values().len() != g {
        return Err(Error::DimensionMismatch(
            "phi and the quotient live on different generator sets".into(),
        ));
    }
    let rep = RegularRep::new(q.target().clone());
    let n = rep.dimension();
    let rows = m.len();
    let cols = m.first().map_or(g, Vec::len);
    let mut out = PolyMatrix::zeros(ring, rows * n, cols * n);
    for (k, row) in m.iter().enumerate() {
        if row.len() != cols {
            return Err(Error::DimensionMismatch("ragged Fox matrix".into()));
        }
        for (i, entry) in row.iter().enumerate() {
            // collect terms per block cell before building polynomials
            let mut cells: BTreeMap<(usize, usize), Vec<(i64, BigInt)>> = BTreeMap::new();
            for (w, c) in entry.terms() {
                let e = phi.evaluate(w);
                let a = q.evaluate(w);
                for b in 0..n {
                    cells
                        .entry((rep.row_of(a, b), b))
                        .or_default()
                        .push((e, BigInt::from(c)));
                }
            }
            for ((a, b), terms) in cells {
                out.set(k * n + a, i * n + b, LaurentPoly::from_int_terms(ring, terms));
            }
        }
    }
    Ok(out)
}

/// The presentation used for column deletion: unchanged when it has one
/// relator fewer than generators, or with the last relator dropped when a
/// Wirtinger-form presentation keeps all of them.
fn wada_presentation(p: &Presentation) -> Option<Presentation> {
    let (g, r) = (p.generator_count(), p.relators().len());
    if r + 1 == g {
        Some(p.clone())
    } else if r == g && r > 0 && p.is_wirtinger_form() {
        Some(p.without_relator(r - 1))
    } else {
        None
    }
}

/// `det(t^phi(x_j) rep(alpha(x_j)) - 1)`.
fn wada_denominator(phi: &CohomClass, q: &FiniteQuotient, j: usize, ring: &Ring) -> Result<LaurentPoly> {
    let rep = RegularRep::new(q.target().clone());
    let n = rep.dimension();
    let mut m = PolyMatrix::zeros(ring, n, n);
    let e = phi.values()[j];
    let a = q.images()[j];
    for b in 0..n {
        m.set(b, b, LaurentPoly::monomial(ring, 0, -1));
    }
    for b in 0..n {
        let row = rep.row_of(a, b);
        let entry = m.get(row, b).add(&LaurentPoly::monomial(ring, e, 1));
        m.set(row, b, entry);
    }
    m.det()
}

fn monic_flag(ring: &Ring, polys: &[&LaurentPoly]) -> Result<Option<bool>> {
    if !ring.is_integers() {
        return Ok(None);
    }
    for p in polys {
        if !p.is_monic()? {
            return Ok(Some(false));
        }
    }
    Ok(Some(true))
}

/// Twisted Alexander polynomial of `(p, phi, q)` over `ring`.
///
/// Gcd of minors: gcd of the `|G|(g-1)`-minors of the specialized Fox
/// matrix (0 when it has fewer rows than that). Column deletion: the
/// determinant with the least column block `j` whose denominator
/// `det(Phi(x_j) - 1)` is nonzero removed, reported with that denominator.
pub fn twisted_alexander(
    p: &Presentation,
    phi: &CohomClass,
    q: &FiniteQuotient,
    ring: &Ring,
    method: Method,
) -> Result<TwistedAlexResult> {
    if q.source().generator_count() != p.generator_count() {
        return Err(Error::Precondition(
            "quotient is defined on a different generator set".into(),
        ));
    }
    let phi = CohomClass::new(p, phi.values().to_vec())?;
    let n = q.target().order();
    let g = p.generator_count();
    let mut notes = vec!["polynomials are defined up to units and shown unit-normalized".to_string()];
    match method {
        Method::GcdOfMinors => {
            let s = n * (g - 1);
            let m = specialize(&alexander_matrix(p), &phi, q, ring)?;
            let numerator = if m.rows() < s {
                notes.push(format!("fewer than {s} rows, so every {s}-minor vanishes"));
                LaurentPoly::zero(ring)
            } else {
                m.gcd_of_minors(s)?
            };
            let degree = numerator.degree();
            Ok(TwistedAlexResult {
                ring: ring.to_string(),
                method,
                deleted_column: None,
                monic: monic_flag(ring, &[&numerator])?,
                numerator,
                denominator: None,
                quotient: None,
                degree,
                numerator_degree: degree,
                h1_degree: degree,
                notes,
            })
        }
        Method::WadaColumnDeletion => {
            if wada_presentation(p).is_none() {
                return Err(Error::Precondition(format!(
                    "column deletion needs g - 1 relators (have {} for {g} generators)",
                    p.relators().len()
                )));
            }
            let j = (0..g)
                .find(|&j| wada_denominator(&phi, q, j, ring).is_ok_and(|d| !d.is_zero()))
                .ok_or_else(|| {
                    Error::Degenerate("det(Phi(x_j) - 1) vanishes for every generator".into())
                })?;
            wada_deleting(p, &phi, q, ring, j)
        }
    }
}

/// Column deletion with a chosen column block `j`. Errors when the
/// denominator for `j` vanishes.
pub fn wada_deleting(
    p: &Presentation,
    phi: &CohomClass,
    q: &FiniteQuotient,
    ring: &Ring,
    j: usize,
) -> Result<TwistedAlexResult> {
    let g = p.generator_count();
    if q.source().generator_count() != g || j >= g {
        return Err(Error::Precondition("column or quotient does not fit the presentation".into()));
    }
    let phi = CohomClass::new(p, phi.values().to_vec())?;
    let n = q.target().order();
    let mut notes = vec!["polynomials are defined up to units and shown unit-normalized".to_string()];
    let wp = wada_presentation(p).ok_or_else(|| {
        Error::Precondition(format!(
            "column deletion needs g - 1 relators (have {} for {g} generators)",
            p.relators().len()
        ))
    })?;
    if wp.relators().len() != p.relators().len() {
        notes.push("dropped the last relator as redundant".into());
    }
    let den = wada_denominator(&phi, q, j, ring)?;
    if den.is_zero() {
        return Err(Error::Degenerate(format!("det(Phi(x_{j}) - 1) vanishes")));
    }
    let m = specialize(&alexander_matrix(&wp), &phi, q, ring)?;
    let num = m.without_cols(j * n..(j + 1) * n).det()?;
    let degree = match (num.degree(), den.degree()) {
        (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a - b),
        _ => Degree::NegInfinity,
    };
    let quotient = num.divide_exact(&den).map(|x| x.normalize());
    let h1_degree = match h0_dimension(&wp, &phi, q)? {
        Some(d) => degree.plus(d as i64),
        None => {
            notes.push("H_0 is not torsion, so the H_1 degree is not defined".into());
            Degree::NegInfinity
        }
    };
    Ok(TwistedAlexResult {
        ring: ring.to_string(),
        method: Method::WadaColumnDeletion,
        deleted_column: Some(j),
        monic: monic_flag(ring, &[&num, &den])?,
        numerator_degree: num.degree(),
        numerator: num.normalize(),
        denominator: Some(den.normalize()),
        quotient,
        degree,
        h1_degree,
        notes,
    })
}

/// `(t^div - 1)^2 * sum_g a_g t^<phi, g>` for a multivariable polynomial
/// given as exponent vector -> coefficient.
pub fn one_variable_from_multivariable(
    multivar: &BTreeMap<Vec<i64>, i64>,
    phi_on_h: &[i64],
    div_phi: u64,
) -> Result<LaurentPoly> {
    if div_phi == 0 {
        return Err(Error::Precondition("div phi must be positive".into()));
    }
    let mut terms = Vec::with_capacity(multivar.len());
    for (v, &c) in multivar {
        if v.len() != phi_on_h.len() {
            return Err(Error::DimensionMismatch(format!(
                "exponent vector of length {} against phi of length {}",
                v.len(),
                phi_on_h.len()
            )));
        }
        let e: i64 = v.iter().zip(phi_on_h).map(|(a, b)| a * b).sum();
        terms.push((e, BigInt::from(c)));
    }
    let sum = LaurentPoly::from_int_terms(&Ring::Z, terms);
    let factor = LaurentPoly::from_i64_terms(&Ring::Z, &[(div_phi as i64, 1), (0, -1)]);
    Ok(factor.mul(&factor).mul(&sum))
}

/// Degree of the twisted polynomial of the spliced manifold from the
/// knot's: `deg + 2|G|`, with `-inf` absorbing.
pub fn splice_degree(deg_knot: Degree, group_order: usize) -> Degree {
    deg_knot.plus(2 * group_order as i64)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::groups::{Perm, PermGroup};

    fn trefoil() -> Presentation {
        Presentation::parse("gens: a b\nrel: abaBAB\n").unwrap()
    }

    fn z(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(&Ring::Z, c)
    }

    #[test]
    fn divisibility_values() {
        let p = Presentation::parse("gens: a b\n").unwrap();
        assert_eq!(divisibility(&CohomClass::new(&p, vec![2, 4]).unwrap()), 2);
        assert_eq!(divisibility(&CohomClass::new(&p, vec![0, 0]).unwrap()), 0);
        let p3 = Presentation::parse("gens: a b c\n").unwrap();
        assert_eq!(divisibility(&CohomClass::new(&p3, vec![1, 0, 0]).unwrap()), 1);
    }

    #[test]
    fn class_must_kill_relators() {
        assert!(CohomClass::new(&trefoil(), vec![1, 0]).is_err());
        assert_eq!(CohomClass::abelianization(&trefoil()).unwrap().values(), &[1, 1]);
    }

    #[test]
    fn specialize_single_swap() {
        let p = Presentation::parse("gens: x\n").unwrap();
        let z2 = Arc::new(PermGroup::cyclic(2).unwrap());
        let q = FiniteQuotient::new(p.clone(), z2, vec![1]).unwrap();
        let phi = CohomClass::new(&p, vec![2]).unwrap();
        let m = vec![vec![GroupRingElement::from_word(FreeWord::generator(0))]];
        let s = specialize(&m, &phi, &q, &Ring::Z).unwrap();
        let t2 = LaurentPoly::monomial(&Ring::Z, 2, 1);
        assert!(s.get(0, 0).is_zero());
        assert_eq!(s.get(0, 1), &t2);
        assert_eq!(s.get(1, 0), &t2);
        assert!(s.get(1, 1).is_zero());
    }

    #[test]
    fn untwisted_trefoil() {
        let p = trefoil();
        let phi = CohomClass::abelianization(&p).unwrap();
        let q = FiniteQuotient::trivial(p.clone());
        let r = twisted_alexander(&p, &phi, &q, &Ring::Z, Method::GcdOfMinors).unwrap();
        assert_eq!(r.numerator, z(&[1, -1, 1]));
        assert_eq!(r.degree, Degree::Finite(2));
        assert_eq!(r.monic, Some(true));
        // column deletion gives Delta / (t - 1)
        let r = twisted_alexander(&p, &phi, &q, &Ring::Z, Method::WadaColumnDeletion).unwrap();
        assert_eq!(r.numerator, z(&[1, -1, 1]));
        assert_eq!(r.denominator, Some(z(&[-1, 1])));
        assert_eq!(r.degree, Degree::Finite(1));
        assert_eq!(r.quotient, None);
        assert_eq!(r.monic, Some(true));
        assert_eq!(r.h1_degree, Degree::Finite(2));
    }

    #[test]
    fn unknot() {
        let p = Presentation::parse("gens: x\n").unwrap();
        let phi = CohomClass::new(&p, vec![1]).unwrap();
        let q = FiniteQuotient::trivial(p.clone());
        let r = twisted_alexander(&p, &phi, &q, &Ring::Z, Method::GcdOfMinors).unwrap();
        assert!(r.numerator.is_one());
        assert_eq!(r.degree, Degree::Finite(0));
    }

    #[test]
    fn trefoil_twisted_by_s3_is_nonzero_and_monic() {
        let p = trefoil();
        let phi = CohomClass::abelianization(&p).unwrap();
        let s3 = Arc::new(PermGroup::symmetric(3).unwrap());
        let a = Perm::parse_cycles("(1 2)", 3).unwrap();
        let b = Perm::parse_cycles("(1 3)", 3).unwrap();
        let q = FiniteQuotient::from_perms(p.clone(), s3, &[a, b]).unwrap();
        let r = twisted_alexander(&p, &phi, &q, &Ring::Z, Method::WadaColumnDeletion).unwrap();
        assert!(!r.is_zero());
        assert_eq!(r.monic, Some(true));
        assert_eq!(h0_dimension(&p, &phi, &q).unwrap(), Some(2));
        let g = twisted_alexander(&p, &phi, &q, &Ring::Z, Method::GcdOfMinors).unwrap();
        assert_eq!(g.degree, r.h1_degree);
    }

    #[test]
    fn eq6_examples() {
        let one: BTreeMap<Vec<i64>, i64> = [(vec![0, 0], 1)].into();
        assert_eq!(one_variable_from_multivariable(&one, &[1, 0], 1).unwrap(), z(&[1, -2, 1]));
        let cube = one_variable_from_multivariable(&one, &[1, 0], 3).unwrap();
        assert_eq!(cube, z(&[1, 0, 0, -2, 0, 0, 1]));
        let two: BTreeMap<Vec<i64>, i64> = [(vec![1, 0], 1), (vec![0, 1], 1)].into();
        let r = one_variable_from_multivariable(&two, &[0, 2], 1).unwrap();
        assert_eq!(r, z(&[1, -2, 1]).mul(&z(&[1, 0, 1])));
        assert!(one_variable_from_multivariable(&two, &[1], 1).is_err());
    }

    #[test]
    fn splice() {
        assert_eq!(splice_degree(Degree::Finite(209), 60), Degree::Finite(329));
        assert_eq!(splice_degree(Degree::NegInfinity, 7), Degree::NegInfinity);
        assert_eq!(splice_degree(Degree::Finite(0), 1), Degree::Finite(2));
    }

    #[test]
    fn kernel_divisibility() {
        let p = Presentation::parse("gens: x\n").unwrap();
        let phi = CohomClass::new(&p, vec![1]).unwrap();
        assert_eq!(divisibility_on_kernel(&p, &phi, &FiniteQuotient::trivial(p.clone())).unwrap(), 1);
        let z5 = Arc::new(PermGroup::cyclic(5).unwrap());
        let gen = z5.index_of(&Perm::from_cycles(5, &[vec![0, 1, 2, 3, 4]]).unwrap()).unwrap();
        let q = FiniteQuotient::new(p.clone(), z5, vec![gen]).unwrap();
        assert_eq!(divisibility_on_kernel(&p, &phi, &q).unwrap(), 5);
    }
}
