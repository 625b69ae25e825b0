use std::fmt;

use super::lex::{Cursor, Tok};
use crate::error::{Error, Result};

/// A planar diagram code: one `X[a, b, c, d]` per crossing, listing the
/// incoming under-edge first and then the other three counterclockwise.
/// Edges are labelled `1..=2n` consecutively along the knot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PDCode {
    crossings: Vec<[u32; 4]>,
}

impl PDCode {
    /// Validate a crossing list: `n > 0`, labels exactly `1..=2n` each used
    /// twice, and the under strand of each crossing continues to the next
    /// label.
    pub fn new(crossings: Vec<[u32; 4]>) -> Result<Self> {
        let code = PDCode { crossings };
        code.validate().map_err(|(pos, msg)| Error::parse(pos, msg))?;
        Ok(code)
    }

    fn validate(&self) -> std::result::Result<(), (usize, String)> {
        let n = self.crossings.len();
        if n == 0 {
            return Err((0, "a PD code needs at least one crossing".into()));
        }
        let edges = 2 * n as u32;
        let mut seen = vec![0u32; edges as usize + 1];
        for x in &self.crossings {
            for &e in x {
                if e == 0 || e > edges {
                    return Err((0, format!("edge label {e} outside 1..={edges}")));
                }
                seen[e as usize] += 1;
                if seen[e as usize] > 2 {
                    return Err((0, format!("edge label {e} appears more than twice")));
                }
            }
        }
        if let Some(e) = (1..=edges).find(|&e| seen[e as usize] != 2) {
            return Err((0, format!("edge label {e} appears {} times", seen[e as usize])));
        }
        for (k, x) in self.crossings.iter().enumerate() {
            if x[2] != next_edge(x[0], edges) {
                return Err((
                    0,
                    format!("crossing {k}: under strand {} -> {} is not consecutive", x[0], x[2]),
                ));
            }
            if x[1] != next_edge(x[3], edges) && x[3] != next_edge(x[1], edges) {
                return Err((
                    0,
                    format!("crossing {k}: over strand {} / {} is not consecutive", x[1], x[3]),
                ));
            }
        }
        Ok(())
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> u32 {
        2 * self.crossings.len() as u32
    }

    /// +1 or -1. The over strand of `X[i, j, k, l]` runs `l -> j` on a
    /// positive crossing and `j -> l` on a negative one.
    pub fn sign(&self, crossing: usize) -> i64 {
        let [i, j, k, l] = self.crossings[crossing].map(i64::from);
        let positive = i == j || k == l || j - l == 1 || l - j > 1;
        if positive {
            1
        } else {
            -1
        }
    }

    pub fn writhe(&self) -> i64 {
        (0..self.crossings.len()).map(|c| self.sign(c)).sum()
    }

    /// `(incoming, outgoing)` edges of the over strand.
    pub fn over_strand(&self, crossing: usize) -> (u32, u32) {
        let x = self.crossings[crossing];
        if self.sign(crossing) > 0 {
            (x[3], x[1])
        } else {
            (x[1], x[3])
        }
    }

    /// The mirror image: every crossing changes sign.
    pub fn mirror(&self) -> PDCode {
        // Rotating the tuple makes the former over strand the under strand
        // while keeping the counterclockwise order.
        let crossings = (0..self.crossings.len())
            .map(|c| {
                let [i, j, k, l] = self.crossings[c];
                if self.sign(c) > 0 {
                    [l, i, j, k]
                } else {
                    [j, k, l, i]
                }
            })
            .collect();
        PDCode { crossings }
    }

    /// `PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]`.
    pub fn emit(&self) -> String {
        let body: Vec<String> = self
            .crossings
            .iter()
            .map(|[a, b, c, d]| format!("X[{a},{b},{c},{d}]"))
            .collect();
        format!("PD[{}]", body.join(","))
    }
}

fn next_edge(e: u32, edges: u32) -> u32 {
    e % edges + 1
}

impl fmt::Display for PDCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.emit())
    }
}

/// Parse `PD[X[i,j,k,l], ...]` (whitespace-insensitive).
pub fn parse_pd(text: &str) -> Result<PDCode> {
    let mut cur = Cursor::new(text)?;
    let pos = cur.pos();
    match cur.next() {
        Some(Tok::Word(w)) if w == "PD" => {}
        _ => return Err(Error::parse(pos, "expected 'PD['")),
    }
    let close = cur.open()?;
    let mut crossings = Vec::new();
    let mut positions = Vec::new();
    if cur.peek() != Some(&Tok::Close(close)) {
        loop {
            let pos = cur.pos();
            match cur.next() {
                Some(Tok::Word(w)) if w == "X" => {}
                _ => return Err(Error::parse(pos, "expected 'X['")),
            }
            let inner = cur.open()?;
            let labels = cur.int_list(inner)?;
            if labels.len() != 4 {
                return Err(Error::parse(pos, format!("crossing has {} labels, expected 4", labels.len())));
            }
            let mut x = [0u32; 4];
            for (slot, &(p, v)) in x.iter_mut().zip(&labels) {
                *slot = u32::try_from(v)
                    .ok()
                    .filter(|&v| v > 0)
                    .ok_or_else(|| Error::parse(p, format!("edge label {v} is not positive")))?;
            }
            crossings.push(x);
            positions.push(pos);
            let pos = cur.pos();
            match cur.next() {
                Some(Tok::Comma) => continue,
                Some(Tok::Close(c)) if c == close => break,
                _ => return Err(Error::parse(pos, format!("expected ',' or '{close}'"))),
            }
        }
    } else {
        cur.next();
    }
    cur.finish()?;
    let code = PDCode { crossings };
    code.validate().map_err(|(_, msg)| {
        // point at the first crossing mentioning the offending label, if any
        let pos = first_label_in(&msg)
            .and_then(|l| code.crossings.iter().position(|x| x.contains(&l)))
            .map_or(0, |k| positions[k]);
        Error::parse(pos, msg)
    })?;
    Ok(code)
}

fn first_label_in(msg: &str) -> Option<u32> {
    msg.split_whitespace().find_map(|w| w.parse().ok())
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]";

    #[test]
    fn trefoil_parses() {
        let pd = parse_pd(TREFOIL).unwrap();
        assert_eq!(pd.crossing_count(), 3);
        assert_eq!(pd.writhe(), -3);
        assert_eq!(pd.emit(), TREFOIL);
        assert_eq!(parse_pd(" PD [ X[1, 4,2,5], X[3,6,4,1],\nX[5,2,6,3] ] ").unwrap(), pd);
    }

    #[test]
    fn mirror_flips_writhe() {
        let pd = parse_pd(TREFOIL).unwrap();
        let m = pd.mirror();
        assert_eq!(m.writhe(), 3);
        assert_eq!(PDCode::new(m.crossings().to_vec()).unwrap().mirror(), pd);
    }

    #[test]
    fn rejects_bad_codes() {
        assert!(matches!(parse_pd("PD[]"), Err(Error::Parse { .. })));
        let err = parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,1]]").unwrap_err();
        assert!(err.to_string().contains('1'), "{err}");
        assert!(parse_pd("PD[X[1,4,2],X[3,6,4,1],X[5,2,6,3]]").is_err());
        assert!(parse_pd("PD[X[1,4,a,5]]").is_err());
        assert!(parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]] extra").is_err());
    }

    #[test]
    fn three_fold_label_names_the_label() {
        let err = parse_pd("PD[X[1,1,2,1]]").unwrap_err();
        assert!(err.to_string().contains("edge label 1"), "{err}");
    }
}
