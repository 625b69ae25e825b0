use std::fs;
use std::io::Write;
use std::path::PathBuf;

use sha2::{Digest, Sha256};
use twistal::{CohomClass, Degree, FiniteQuotient, Method, Presentation, Ring, TwistedAlexResult};

use crate::error::CliError;

/// One JSON file per result, named by the hash of everything the result
/// depends on.
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: PathBuf) -> Result<Self, CliError> {
        fs::create_dir_all(&dir).map_err(|e| CliError::io(&dir, e))?;
        Ok(Cache { dir })
    }

    pub fn key(p: &Presentation, phi: &CohomClass, q: &FiniteQuotient, ring: &Ring, method: Method) -> String {
        let mut h = Sha256::new();
        h.update(b"twistal-result-v1\n");
        h.update(p.canonical_form().as_bytes());
        h.update(format!("\nphi={:?}\n", phi.values()).as_bytes());
        h.update(format!("degree={}\n", q.target().degree()).as_bytes());
        for &g in q.images() {
            h.update(q.target().element(g).to_string().as_bytes());
            h.update(b";");
        }
        h.update(format!("\nring={ring}\nmethod={method}\n").as_bytes());
        format!("{:x}", h.finalize())
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// A stored result, if present and internally consistent.
    pub fn get(&self, key: &str) -> Option<TwistedAlexResult> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        let r: TwistedAlexResult = serde_json::from_str(&text).ok()?;
        consistent(&r).then_some(r)
    }

    /// Write to a temporary file in the cache directory, then rename.
    pub fn put(&self, key: &str, r: &TwistedAlexResult) -> Result<(), CliError> {
        let text = serde_json::to_string(r).expect("results serialize");
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir).map_err(|e| CliError::io(&self.dir, e))?;
        tmp.write_all(text.as_bytes()).map_err(|e| CliError::io(tmp.path(), e))?;
        let target = self.path(key);
        tmp.persist(&target).map_err(|e| CliError::io(&target, e.error))?;
        Ok(())
    }
}

fn consistent(r: &TwistedAlexResult) -> bool {
    if r.numerator.degree() != r.numerator_degree {
        return false;
    }
    let expected = match (&r.method, &r.denominator) {
        (Method::GcdOfMinors, None) => r.numerator_degree,
        (Method::WadaColumnDeletion, Some(den)) => match (r.numerator_degree, den.degree()) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a - b),
            _ => Degree::NegInfinity,
        },
        _ => return false,
    };
    r.degree == expected
}

#[cfg(test)]
mod tests {
    use super::*;
    use twistal::twisted::twisted_alexander;

    #[test]
    fn round_trip_and_tamper_check() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path().join("c")).unwrap();
        let p = Presentation::parse("gens: a b\nrel: abaBAB\n").unwrap();
        let phi = CohomClass::abelianization(&p).unwrap();
        let q = FiniteQuotient::trivial(p.clone());
        let r = twisted_alexander(&p, &phi, &q, &Ring::Z, Method::WadaColumnDeletion).unwrap();
        let key = Cache::key(&p, &phi, &q, &Ring::Z, Method::WadaColumnDeletion);
        assert_ne!(key, Cache::key(&p, &phi, &q, &Ring::Z, Method::GcdOfMinors));
        assert!(cache.get(&key).is_none());
        cache.put(&key, &r).unwrap();
        assert_eq!(cache.get(&key), Some(r.clone()));

        let mut bad = r;
        bad.degree = Degree::Finite(7);
        cache.put(&key, &bad).unwrap();
        assert!(cache.get(&key).is_none());
    }
}
