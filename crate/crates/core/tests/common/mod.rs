//! Corpus and property bodies shared by the property suites and the
//! acceptance runner.
#![allow(dead_code)]

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use twistal::fixtures::KNOT_TABLE;
use twistal::fpgroup::fox_derivative;
use twistal::groups::{enumerate_homs, SearchOptions};
use twistal::knot::{knot_group, KnotFormat};
use twistal::twisted::twisted_alexander;
use twistal::{
    CohomClass, FiniteQuotient, FreeWord, GroupRingElement, LaurentPoly, Method, PermGroup, PolyMatrix, Presentation,
    RegularRep, Ring, TwistedAlexResult,
};

pub fn knot(code: &str) -> Presentation {
    let format = if code.starts_with("braid") { KnotFormat::Braid } else { KnotFormat::Dt };
    knot_group(format, code).unwrap()
}

/// Groups of order at most six.
pub fn small_groups() -> Vec<Arc<PermGroup>> {
    ["Z2", "Z3", "Z4", "Z5", "Z6", "S3"]
        .iter()
        .map(|s| Arc::new(PermGroup::from_spec(s).unwrap()))
        .collect()
}

pub struct Case {
    pub knot: &'static str,
    pub p: Presentation,
    pub phi: CohomClass,
    pub q: FiniteQuotient,
}

/// Every knot of the table with every epimorphism onto a group of order at
/// most six, one per conjugacy class.
pub fn cases() -> &'static [Case] {
    static CASES: OnceLock<Vec<Case>> = OnceLock::new();
    CASES.get_or_init(|| {
        let mut out = Vec::new();
        for k in KNOT_TABLE {
            let p = knot(k.code);
            let phi = CohomClass::abelianization(&p).unwrap();
            for g in small_groups() {
                let opts = SearchOptions {
                    surjective_only: true,
                    up_to_conjugacy: true,
                    ..SearchOptions::default()
                };
                for q in enumerate_homs(&p, g, opts).unwrap() {
                    out.push(Case {
                        knot: k.name,
                        p: p.clone(),
                        phi: phi.clone(),
                        q,
                    });
                }
            }
        }
        out
    })
}

/// Column-deletion result for a corpus case, memoized per ring.
pub fn case_result(index: usize, ring: &Ring) -> TwistedAlexResult {
    static MEMO: OnceLock<Mutex<HashMap<(usize, String), TwistedAlexResult>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    let key = (index, ring.to_string());
    if let Some(r) = memo.lock().unwrap().get(&key) {
        return r.clone();
    }
    let c = &cases()[index];
    let r = twisted_alexander(&c.p, &c.phi, &c.q, ring, Method::WadaColumnDeletion).unwrap();
    memo.lock().unwrap().insert(key, r.clone());
    r
}

pub fn word_strategy(gens: usize, max_len: usize) -> impl Strategy<Value = FreeWord> {
    prop::collection::vec((0..gens, any::<bool>()), 0..=max_len).prop_map(FreeWord::from_letters)
}

/// Laurent polynomial over `ring` with exponents in `lo..=hi`.
pub fn poly_strategy(ring: Ring, lo: i64, hi: i64, modulus: i64) -> impl Strategy<Value = LaurentPoly> + Clone {
    prop::collection::vec((lo..=hi, -modulus..=modulus), 0..=4)
        .prop_map(move |terms| LaurentPoly::from_i64_terms(&ring, &terms))
}

pub fn matrix_strategy(ring: Ring, max_n: usize, lo: i64, hi: i64) -> impl Strategy<Value = PolyMatrix> {
    (1..=max_n).prop_flat_map(move |n| {
        let r = ring.clone();
        prop::collection::vec(poly_strategy(ring.clone(), lo, hi, 60), n * n).prop_map(move |entries| {
            let rows = entries.chunks(n).map(<[LaurentPoly]>::to_vec).collect();
            PolyMatrix::from_rows(&r, rows).unwrap()
        })
    })
}

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    })
}

fn flatten<T: std::fmt::Debug>(r: Result<(), proptest::test_runner::TestError<T>>) -> Result<(), String> {
    r.map_err(|e| e.to_string())
}

/// `sum_j (dw/dx_j)(x_j - 1) = w - 1`.
pub fn fox_identity(n: u32) -> Result<(), String> {
    flatten(runner(n).run(&(1usize..=4).prop_flat_map(|g| (Just(g), word_strategy(g, 30))), |(g, w)| {
        let mut sum = GroupRingElement::zero();
        for j in 0..g {
            let d = fox_derivative(&w, j, g).unwrap();
            let xj = GroupRingElement::from_word(FreeWord::generator(j)).sub(&GroupRingElement::one());
            sum = sum.add(&d.mul(&xj));
        }
        let expected = GroupRingElement::from_word(w.clone()).sub(&GroupRingElement::one());
        prop_assert_eq!(sum, expected);
        Ok(())
    }))
}

/// Determinant by the default route against fraction-free elimination over
/// F53 and F7, sizes up to 8 and degrees up to 5.
pub fn det_routes_agree(n: u32) -> Result<(), String> {
    let rings = vec![Ring::prime_field(53).unwrap(), Ring::prime_field(7).unwrap()];
    let strat = prop::sample::select(rings).prop_flat_map(|r| matrix_strategy(r, 8, -1, 4));
    flatten(runner(n).run(&strat, |m| {
        prop_assert_eq!(m.det().unwrap(), m.det_fraction_free().unwrap());
        Ok(())
    }))
}

/// `R(g) R(h) = R(gh)` for the regular representation.
pub fn regular_rep_is_hom(n: u32) -> Result<(), String> {
    let groups: Vec<Arc<PermGroup>> = ["S4", "A5", "D6", "Z7", "S3"]
        .iter()
        .map(|s| Arc::new(PermGroup::from_spec(s).unwrap()))
        .collect();
    let reps: Vec<RegularRep> = groups.iter().map(|g| RegularRep::new(g.clone())).collect();
    flatten(runner(n).run(&(0..reps.len(), any::<usize>(), any::<usize>()), |(k, a, b)| {
        let rep = &reps[k];
        let n = rep.dimension();
        let (g, h) = (a % n, b % n);
        let (mg, mh) = (rep.matrix(g), rep.matrix(h));
        let mut prod = vec![vec![0u8; n]; n];
        for i in 0..n {
            for l in 0..n {
                if mg[i][l] != 0 {
                    for j in 0..n {
                        prod[i][j] += mg[i][l] * mh[l][j];
                    }
                }
            }
        }
        prop_assert_eq!(prod, rep.matrix(rep.group().mul(g, h)));
        Ok(())
    }))
}

/// Conjugating the hom leaves the normalized polynomial unchanged.
pub fn conjugation_invariance(n: u32) -> Result<(), String> {
    flatten(runner(n).run(&(0..cases_len(), any::<usize>()), |(i, h)| {
        let c = &cases()[i];
        let base = case_result(i, &Ring::Z);
        let h = h % c.q.target().order();
        let conj = c.q.conjugated_by(h);
        let r = twisted_alexander(&c.p, &c.phi, &conj, &Ring::Z, Method::WadaColumnDeletion).unwrap();
        prop_assert_eq!(&r.numerator, &base.numerator, "{} conjugated by {}", c.knot, h);
        prop_assert_eq!(&r.denominator, &base.denominator);
        Ok(())
    }))
}

/// Reducing mod 53 never raises degrees.
pub fn finite_field_lower_bound(n: u32) -> Result<(), String> {
    let f53 = Ring::prime_field(53).unwrap();
    flatten(runner(n).run(&(0..cases_len()), |i| {
        let z = case_result(i, &Ring::Z);
        let f = case_result(i, &f53);
        prop_assert!(f.numerator_degree <= z.numerator_degree, "{}", cases()[i].knot);
        prop_assert!(f.degree <= z.degree);
        prop_assert!(f.h1_degree <= z.h1_degree);
        Ok(())
    }))
}

fn cases_len() -> usize {
    cases().len()
}
