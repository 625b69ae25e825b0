use super::lex::{Cursor, Tok};
use super::pd::PDCode;
use crate::error::{Error, Result};

/// Parse `braid[s1, s2, ...]`, optionally preceded by `strands=n`, and
/// return the PD code of its closure. `k` stands for the generator
/// `sigma_k` and `-k` for its inverse.
pub fn parse_braid(text: &str) -> Result<PDCode> {
    let mut cur = Cursor::new(text)?;
    let mut strands = None;
    if let Some(Tok::Word(w)) = cur.peek() {
        if w == "strands" {
            cur.next();
            cur.expect(&Tok::Equals, "'='")?;
            let (pos, n) = cur.int()?;
            if n < 1 {
                return Err(Error::parse(pos, "strand count must be positive"));
            }
            strands = Some(n as usize);
            if cur.peek() == Some(&Tok::Comma) {
                cur.next();
            }
        }
    }
    let pos = cur.pos();
    match cur.next() {
        Some(Tok::Word(w)) if w == "braid" => {}
        _ => return Err(Error::parse(pos, "expected 'braid['")),
    }
    let close = cur.open()?;
    let word = cur.int_list(close)?;
    cur.finish()?;
    if word.is_empty() {
        return Err(Error::parse(pos, "empty braid word (enter the unknot as braid[1])"));
    }
    let strands = strands.unwrap_or_else(|| {
        word.iter().map(|&(_, s)| s.unsigned_abs() as usize).max().unwrap_or(0) + 1
    });
    for &(p, s) in &word {
        if s == 0 || s.unsigned_abs() as usize >= strands {
            return Err(Error::parse(
                p,
                format!("generator {s} out of range for {strands} strands"),
            ));
        }
    }
    closure(strands, &word.iter().map(|&(_, s)| s).collect::<Vec<_>>())
        .map_err(|msg| Error::parse(pos, msg))
}

/// PD code of a braid closure, with edges relabelled along the knot.
fn closure(strands: usize, word: &[i64]) -> std::result::Result<PDCode, String> {
    // Strands run upward. sigma_k crosses positions k-1 and k with the
    // strand from the lower right passing under.
    let mut next_id = strands as u32;
    let bottom: Vec<u32> = (0..strands as u32).collect();
    let mut cur = bottom.clone();
    let mut crossings = Vec::with_capacity(word.len());
    for &s in word {
        let i = s.unsigned_abs() as usize;
        let (li, ri) = (cur[i - 1], cur[i]);
        let (lo, ro) = (next_id, next_id + 1);
        next_id += 2;
        crossings.push(if s > 0 { [ri, ro, lo, li] } else { [li, ri, ro, lo] });
        cur[i - 1] = lo;
        cur[i] = ro;
    }
    // Close up: the top edge at each position is the bottom edge there.
    let mut alias: Vec<u32> = (0..next_id).collect();
    for p in 0..strands {
        if cur[p] == bottom[p] {
            return Err("the closure has a component without crossings (a link)".into());
        }
        alias[bottom[p] as usize] = cur[p];
    }
    for x in crossings.iter_mut() {
        for e in x.iter_mut() {
            *e = alias[*e as usize];
        }
    }
    // successor of each edge through the crossing it enters
    let mut succ = vec![u32::MAX; next_id as usize];
    for (x, &s) in crossings.iter().zip(word) {
        succ[x[0] as usize] = x[2];
        if s > 0 {
            succ[x[3] as usize] = x[1];
        } else {
            succ[x[1] as usize] = x[3];
        }
    }
    let first = crossings[0][0];
    let mut relabel = vec![0u32; next_id as usize];
    let mut e = first;
    let mut count = 0;
    loop {
        count += 1;
        relabel[e as usize] = count;
        e = succ[e as usize];
        if e == first {
            break;
        }
    }
    if count as usize != 2 * crossings.len() {
        return Err("the closure is a link, not a knot".into());
    }
    let crossings = crossings
        .into_iter()
        .map(|x| x.map(|e| relabel[e as usize]))
        .collect();
    PDCode::new(crossings).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_closure() {
        let pd = parse_braid("braid[1,1,1]").unwrap();
        assert_eq!(pd.crossing_count(), 3);
        assert_eq!(pd.writhe(), 3);
        assert_eq!(parse_braid("braid[-1,-1,-1]").unwrap().writhe(), -3);
    }

    #[test]
    fn unknot_closure() {
        let pd = parse_braid("braid[1]").unwrap();
        assert_eq!(pd.crossing_count(), 1);
        assert_eq!(parse_braid("strands=2 braid[1]").unwrap(), pd);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_braid("strands=2 braid[3]"), Err(Error::Parse { .. })));
        assert!(parse_braid("braid[]").is_err());
        assert!(parse_braid("braid[1,1]").is_err()); // Hopf link
        assert!(parse_braid("strands=3 braid[1]").is_err()); // split link
        assert!(parse_braid("braid[0]").is_err());
    }

    #[test]
    fn figure_eight_closure() {
        let pd = parse_braid("braid[1,-2,1,-2]").unwrap();
        assert_eq!(pd.crossing_count(), 4);
        assert_eq!(pd.writhe(), 0);
    }
}
