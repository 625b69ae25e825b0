use super::lex::{Cursor, Tok};
use super::pd::PDCode;
use crate::error::{Error, Result};

/// Parse a Dowker–Thistlethwaite code `DT(e1, e2, ...)` and realize it as
/// a PD code.
///
/// Entry `e_i` pairs the odd position `2i - 1` with the even position
/// `|e_i|`; a negative entry means the even passage goes over. Of the two
/// mirror-image planar realizations the one with nonnegative writhe is
/// returned.
pub fn parse_dt(text: &str) -> Result<PDCode> {
    let mut cur = Cursor::new(text)?;
    let pos = cur.pos();
    match cur.next() {
        Some(Tok::Word(w)) if w == "DT" => {}
        _ => return Err(Error::parse(pos, "expected 'DT('")),
    }
    let close = cur.open()?;
    let entries = cur.int_list(close)?;
    cur.finish()?;
    let n = entries.len();
    if n == 0 {
        return Err(Error::parse(pos, "empty DT code"));
    }
    let mut seen = vec![false; 2 * n + 1];
    for &(p, e) in &entries {
        if e % 2 != 0 {
            return Err(Error::parse(p, format!("DT entry {e} is odd")));
        }
        let a = e.unsigned_abs() as usize;
        if a == 0 || a > 2 * n {
            return Err(Error::parse(p, format!("DT entry {e} outside 2..={}", 2 * n)));
        }
        if seen[a] {
            return Err(Error::parse(p, format!("DT entry {a} repeated")));
        }
        seen[a] = true;
    }
    let values: Vec<i64> = entries.iter().map(|&(_, e)| e).collect();
    realize(&values).ok_or_else(|| Error::parse(pos, "DT code has no planar realization"))
}

/// Half-edge slot order around a crossing, counterclockwise from the
/// bottom: the odd passage runs bottom to top; `h = +1` sends the even
/// passage left to right, `h = -1` right to left.
fn rotation(odd_in: u32, odd_out: u32, even_in: u32, even_out: u32, h: bool) -> [u32; 4] {
    if h {
        [odd_in, even_out, odd_out, even_in]
    } else {
        [odd_in, even_in, odd_out, even_out]
    }
}

fn realize(entries: &[i64]) -> Option<PDCode> {
    let n = entries.len();
    let edges = 2 * n as u32;
    // edge k runs from position k to position k + 1 (mod 2n), labelled k
    let edge_in = |pos: u32| if pos == 1 { edges } else { pos - 1 };
    let edge_out = |pos: u32| pos;
    let mut fallback = None;
    for mask in 0u64..(1u64 << n) {
        let slots: Vec<[u32; 4]> = entries
            .iter()
            .enumerate()
            .map(|(i, &e)| {
                let odd = 2 * i as u32 + 1;
                let even = e.unsigned_abs() as u32;
                rotation(
                    edge_in(odd),
                    edge_out(odd),
                    edge_in(even),
                    edge_out(even),
                    mask >> i & 1 == 1,
                )
            })
            .collect();
        if face_count(&slots, edges) != n + 2 {
            continue;
        }
        let crossings: Vec<[u32; 4]> = slots
            .iter()
            .zip(entries)
            .enumerate()
            .map(|(i, (s, &e))| {
                let odd = 2 * i as u32 + 1;
                let even = e.unsigned_abs() as u32;
                let under_in = if e > 0 { edge_in(even) } else { edge_in(odd) };
                let at = s.iter().position(|&x| x == under_in).expect("slot present");
                [s[at], s[(at + 1) % 4], s[(at + 2) % 4], s[(at + 3) % 4]]
            })
            .collect();
        let pd = PDCode::new(crossings).ok()?;
        if pd.writhe() >= 0 {
            return Some(pd);
        }
        fallback.get_or_insert(pd);
    }
    fallback
}

/// Number of faces of the embedded 4-valent graph described by the
/// counterclockwise rotations.
fn face_count(slots: &[[u32; 4]], edges: u32) -> usize {
    // half-edge id = crossing * 4 + slot; each edge label occurs in two slots
    let mut ends: Vec<Vec<usize>> = vec![Vec::new(); edges as usize + 1];
    for (c, s) in slots.iter().enumerate() {
        for (k, &e) in s.iter().enumerate() {
            ends[e as usize].push(c * 4 + k);
        }
    }
    let total = slots.len() * 4;
    let mut twin = vec![usize::MAX; total];
    for pair in ends.iter().skip(1) {
        if pair.len() != 2 {
            return 0;
        }
        twin[pair[0]] = pair[1];
        twin[pair[1]] = pair[0];
    }
    let mut seen = vec![false; total];
    let mut faces = 0;
    for h in 0..total {
        if seen[h] {
            continue;
        }
        faces += 1;
        let mut x = h;
        while !seen[x] {
            seen[x] = true;
            let t = twin[x];
            x = t - t % 4 + (t % 4 + 1) % 4;
        }
    }
    faces
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_and_figure_eight() {
        let t = parse_dt("DT(4,6,2)").unwrap();
        assert_eq!(t.crossing_count(), 3);
        assert_eq!(t.writhe(), 3);
        let f = parse_dt("DT(4, 6, 8, 2)").unwrap();
        assert_eq!(f.crossing_count(), 4);
        assert_eq!(f.writhe(), 0);
    }

    #[test]
    fn rejects_bad_codes() {
        assert!(matches!(parse_dt("DT(3,5)"), Err(Error::Parse { .. })));
        assert!(parse_dt("DT(4,4,2)").is_err());
        assert!(parse_dt("DT(4,-4,2)").is_err());
        assert!(parse_dt("DT()").is_err());
        assert!(parse_dt("DT(4,6,20)").is_err());
    }

    #[test]
    fn writhe_is_nonnegative() {
        for code in ["DT(4,6,2)", "DT(-4,-6,-2)", "DT(6,8,10,2,4)", "DT(4,8,10,2,6)"] {
            assert!(parse_dt(code).unwrap().writhe() >= 0, "{code}");
        }
    }
}
